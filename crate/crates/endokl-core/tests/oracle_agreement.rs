use endokl_core::endoscopy::stratification_datum;
use endokl_core::multiplicity::multiplicity_matrix;
use endokl_core::oracle::oracle_multiplicity_matrix;
use endokl_core::{CartanType, RationalCoweight, RootDatum};

fn agree(t: CartanType, rank: usize, mu: &[i64], n: i64) {
    let datum = RootDatum::new(t, rank).unwrap();
    let lambda = RationalCoweight::new(mu.to_vec(), n).unwrap();
    let sd = stratification_datum(&datum, &lambda).unwrap();
    let kl = multiplicity_matrix(&sd).unwrap();
    let oracle = oracle_multiplicity_matrix(&datum, &lambda, None).unwrap();
    assert_eq!(kl.entries, oracle.entries, "{t}{rank} lambda = {lambda}");
}

#[test]
fn a1_cases() {
    agree(CartanType::A, 1, &[1], 1);
    agree(CartanType::A, 1, &[1], 4);
    agree(CartanType::A, 1, &[-3], 2);
}

#[test]
fn a2_cases() {
    agree(CartanType::A, 2, &[1, 1], 1);
    agree(CartanType::A, 2, &[2, 1], 3);
    agree(CartanType::A, 2, &[1, 1], 2);
    agree(CartanType::A, 2, &[1, 2], 3);
    agree(CartanType::A, 2, &[0, 0], 1);
}

#[test]
fn b2_cases() {
    agree(CartanType::B, 2, &[4, 3], 2);
    agree(CartanType::B, 2, &[3, 2], 2);
    agree(CartanType::B, 2, &[1, 1], 1);
}

#[test]
fn c2_and_g2_cases() {
    agree(CartanType::C, 2, &[1, 1], 3);
    agree(CartanType::G, 2, &[1, 1], 2);
}
