use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use endokl_core::affine_strata::{affine_endoscopy, strata_with, AffineCoweight};
use endokl_core::coxeter::{bruhat_leq, multiply, CoxeterElement};
use endokl_core::endoscopy::stratification_datum;
use endokl_core::folding::{coinvariant_map_a, fold};
use endokl_core::multiplicity::{costalk_character, kostant_q};
use endokl_core::poly::Polynomial;
use endokl_core::{CartanType, CoxeterSystem, KLCache, Rational, RationalCoweight, RootDatum};
use proptest::prelude::*;

fn small_type() -> impl Strategy<Value = (CartanType, usize)> {
    prop_oneof![
        (1usize..=3).prop_map(|r| (CartanType::A, r)),
        (2usize..=3).prop_map(|r| (CartanType::B, r)),
        (2usize..=3).prop_map(|r| (CartanType::C, r)),
        Just((CartanType::G, 2)),
    ]
}

fn datum((t, r): (CartanType, usize)) -> RootDatum {
    RootDatum::new(t, r).unwrap()
}

fn pick(system: &Arc<CoxeterSystem>, seed: usize) -> CoxeterElement {
    let all = system.elements_up_to(None).unwrap();
    all[seed % all.len()].clone()
}

/// Every element obtained from a subword of `w`'s reduced word.
fn subword_elements(w: &CoxeterElement) -> BTreeSet<Vec<usize>> {
    let word = w.word();
    let system = w.system();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << word.len()) {
        let sub: Vec<usize> = (0..word.len()).filter(|i| mask & (1 << i) != 0).map(|i| word[i]).collect();
        out.insert(system.element(&sub).unwrap().word().to_vec());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_involutions(t in small_type(), i in 0usize..3, v in prop::collection::vec(-6i64..6, 3)) {
        let d = datum(t);
        let i = i % d.rank();
        let v = &v[..d.rank()];
        let once = d.reflect(i, v).unwrap();
        prop_assert_eq!(d.reflect(i, &once).unwrap(), v.to_vec());
    }

    #[test]
    fn dual_is_an_involution(t in small_type()) {
        let d = datum(t);
        prop_assert_eq!(d.dual().dual(), d);
    }

    #[test]
    fn bruhat_order_is_the_subword_order(t in small_type(), a in 0usize..1000, b in 0usize..1000) {
        let sys = CoxeterSystem::weyl(&datum(t));
        let (y, w) = (pick(&sys, a), pick(&sys, b));
        prop_assert_eq!(bruhat_leq(&y, &w).unwrap(), subword_elements(&w).contains(y.word()));
    }

    #[test]
    fn inverse_times_element_is_identity(t in small_type(), a in 0usize..1000) {
        let sys = CoxeterSystem::weyl(&datum(t));
        let w = pick(&sys, a);
        prop_assert!(multiply(&w, &w.inverse()).unwrap().is_identity());
        prop_assert!(multiply(&w.inverse(), &w).unwrap().is_identity());
    }

    #[test]
    fn kl_polynomials_are_bounded_and_nonnegative(t in small_type(), a in 0usize..1000, b in 0usize..1000) {
        let sys = CoxeterSystem::weyl(&datum(t));
        let (y, w) = (pick(&sys, a), pick(&sys, b));
        let mut cache = KLCache::new(Arc::clone(&sys));
        let p = cache.kl_polynomial(&y, &w).unwrap();
        if bruhat_leq(&y, &w).unwrap() {
            prop_assert_eq!(p.coeff(0), 1);
            prop_assert!(p.coeffs().iter().all(|&c| c >= 0));
            if y != w {
                let top = (w.length() - y.length() - 1) / 2;
                prop_assert!(p.degree().unwrap() <= top);
            }
        } else {
            prop_assert!(p.is_zero());
        }
    }

    #[test]
    fn kl_is_deterministic(t in small_type(), a in 0usize..1000, b in 0usize..1000, warm in 0usize..1000) {
        let sys = CoxeterSystem::weyl(&datum(t));
        let (y, w) = (pick(&sys, a), pick(&sys, b));
        let mut fresh = KLCache::new(Arc::clone(&sys));
        let mut warmed = KLCache::new(Arc::clone(&sys));
        warmed.row_of(&pick(&sys, warm)).unwrap();
        prop_assert_eq!(fresh.kl_polynomial(&y, &w).unwrap(), warmed.kl_polynomial(&y, &w).unwrap());
        let mut imported = KLCache::new(Arc::clone(&sys));
        imported.import_records(&warmed.records()).unwrap();
        prop_assert_eq!(imported.kl_polynomial(&y, &w).unwrap(), fresh.kl_polynomial(&y, &w).unwrap());
    }

    #[test]
    fn endoscopic_group_is_the_integral_stabiliser(
        t in small_type(),
        mu in prop::collection::vec(-3i64..=3, 3),
        n in 1i64..=4,
    ) {
        let d = datum(t);
        let lambda = RationalCoweight::new(mu[..d.rank()].to_vec(), n).unwrap();
        let sd = stratification_datum(&d, &lambda).unwrap();
        let weyl = CoxeterSystem::weyl(&d);
        let coords = lambda.coords();
        let brute: BTreeSet<Vec<usize>> = weyl
            .elements_up_to(None)
            .unwrap()
            .into_iter()
            .filter(|w| {
                d.act_word(w.word(), &coords).iter().zip(&coords).all(|(a, b)| (b - a).is_integer())
            })
            .map(|w| w.word().to_vec())
            .collect();
        let zeta = sd.zeta_system.elements_up_to(None).unwrap();
        let generated: BTreeSet<Vec<usize>> = zeta.iter().map(|w| sd.ambient_element(w).word().to_vec()).collect();
        prop_assert_eq!(&generated, &brute);
        prop_assert_eq!(generated.len(), zeta.len());
        let stabiliser = sd.zeta_system.parabolic_longest(&sd.j_zeta).unwrap();
        let wj = zeta.iter().filter(|w| bruhat_leq(w, &stabiliser).unwrap()).count();
        prop_assert_eq!(sd.index_set.len() * wj, zeta.len());
    }

    #[test]
    fn coinvariant_map_is_well_defined(alpha in prop::collection::vec(-5i64..5, 6), beta in prop::collection::vec(-5i64..5, 6), case in 0usize..3) {
        let (t, r, sigma): (CartanType, usize, Vec<usize>) = match case {
            0 => (CartanType::A, 3, vec![2, 1, 0]),
            1 => (CartanType::D, 4, vec![2, 1, 3, 0]),
            _ => (CartanType::E, 6, vec![5, 1, 4, 3, 2, 0]),
        };
        let fd = fold(&datum((t, r)), &sigma).unwrap();
        let alpha = &alpha[..r];
        let beta = &beta[..r];
        let sb = fd.apply_sigma(beta);
        let moved: Vec<i64> = alpha.iter().zip(&sb).zip(beta).map(|((a, s), b)| a + s - b).collect();
        let image = coinvariant_map_a(&fd, alpha).unwrap();
        prop_assert_eq!(coinvariant_map_a(&fd, &moved).unwrap(), image.clone());
        prop_assert_eq!(fd.apply_sigma(&image), image);
    }

    #[test]
    fn positive_level_strata_grow_with_the_bound(
        mu in -4i64..=4,
        k in 1i64..=4,
        lo in prop::collection::vec(0i64..=2, 2),
        extra in prop::collection::vec(0i64..=2, 2),
    ) {
        let d = datum((CartanType::A, 1));
        let x = AffineCoweight::at_level(RationalCoweight::new(vec![mu], 2).unwrap(), Rational::from_integer(k));
        let st = affine_endoscopy(&d, &x).unwrap();
        let hi: Vec<i64> = lo.iter().zip(&extra).map(|(a, b)| a + b).collect();
        let small: BTreeSet<Vec<usize>> = strata_with(&st, &lo, None).unwrap().elements.iter().map(|w| w.word().to_vec()).collect();
        let large: BTreeSet<Vec<usize>> = strata_with(&st, &hi, None).unwrap().elements.iter().map(|w| w.word().to_vec()).collect();
        prop_assert!(small.is_subset(&large));
    }
}

/// Coefficients of `prod_{beta > 0} (1 - q e^beta)^{-1}` up to height `bound`,
/// by enumerating multisets of positive coroots.
fn product_expansion(d: &RootDatum, bound: i64) -> BTreeMap<Vec<i64>, Polynomial> {
    fn rec(
        parts: &[Vec<i64>],
        from: usize,
        acc: &mut Vec<i64>,
        count: usize,
        bound: i64,
        out: &mut BTreeMap<Vec<i64>, Polynomial>,
    ) {
        let entry = out.entry(acc.clone()).or_default();
        *entry += &Polynomial::monomial(1, count);
        for (i, p) in parts.iter().enumerate().skip(from) {
            if acc.iter().sum::<i64>() + p.iter().sum::<i64>() > bound {
                continue;
            }
            for (a, b) in acc.iter_mut().zip(p) {
                *a += b;
            }
            rec(parts, i, acc, count + 1, bound, out);
            for (a, b) in acc.iter_mut().zip(p) {
                *a -= b;
            }
        }
    }
    let mut out = BTreeMap::new();
    rec(d.positive_coroots(), 0, &mut vec![0; d.rank()], 0, bound, &mut out);
    out
}

#[test]
fn kostant_generating_function_matches_the_product() {
    for t in [(CartanType::A, 2), (CartanType::B, 2), (CartanType::G, 2), (CartanType::A, 3)] {
        let d = datum(t);
        let expected = product_expansion(&d, 6);
        let table = costalk_character(&d, 6);
        for (alpha, k) in &table.terms {
            let e = expected.get(alpha).cloned().unwrap_or_default();
            assert_eq!(k, &e, "{t:?} {alpha:?}");
            assert_eq!(kostant_q(&d, alpha), e);
        }
    }
}
