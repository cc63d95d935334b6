use std::process::{Command, Output};
use std::sync::Arc;

use endokl::report::{AffineReport, FoldReport, KlReport, MultiplicityReport};
use endokl_core::affine_strata::{affine_endoscopy, affine_multiplicities, strata_with, AffineCoweight};
use endokl_core::endoscopy::stratification_datum;
use endokl_core::multiplicity::multiplicity_matrix;
use endokl_core::{CartanType, KLCache, RationalCoweight, RootDatum};

fn endokl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_endokl"))
        .args(args)
        .env_remove("ENDOKL_CACHE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn kl_a3_example() {
    let o = endokl(&["kl", "--type", "A", "--rank", "3", "--y", "e", "--w", "2,1,3,2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 + q");
}

#[test]
fn fold_a3_example() {
    let o = endokl(&["fold", "--source", "A3", "--sigma", "3,2,1", "--format", "json"]);
    assert!(o.status.success());
    let r: FoldReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.d, 2);
    assert_eq!(r.invariant_type.as_deref(), Some("C2"));
    assert_eq!(r.folded_cartan, vec![vec![2, -2], vec![-1, 2]]);
}

#[test]
fn multiplicity_json_round_trip() {
    let o = endokl(&["multiplicity", "--type", "A", "--rank", "2", "--lambda", "1,1/1", "--format", "json"]);
    assert!(o.status.success());
    let parsed: MultiplicityReport = serde_json::from_str(&stdout(&o)).unwrap();
    let d = RootDatum::new(CartanType::A, 2).unwrap();
    let sd = stratification_datum(&d, &RationalCoweight::new(vec![1, 1], 1).unwrap()).unwrap();
    let expected = MultiplicityReport::new(&multiplicity_matrix(&sd).unwrap());
    assert_eq!(parsed, expected);
    assert_eq!(parsed.entries.len(), 6);
}

#[test]
fn affine_json_round_trip() {
    let o = endokl(&[
        "affine", "--type", "A", "--rank", "1", "--lambda", "1/2", "--a", "1", "--b", "-2", "--alpha", "2,2",
        "--multiplicities", "--format", "json",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let parsed: AffineReport = serde_json::from_str(&stdout(&o)).unwrap();
    let d = RootDatum::new(CartanType::A, 1).unwrap();
    let x = AffineCoweight::new(RationalCoweight::new(vec![1], 2).unwrap(), 1, -2).unwrap();
    let st = affine_endoscopy(&d, &x).unwrap();
    let strata = strata_with(&st, &[2, 2], None).unwrap();
    let mut cache = KLCache::new(Arc::clone(&st.zeta_system));
    let entries = affine_multiplicities(&st, &strata.elements, &mut cache).unwrap();
    assert_eq!(parsed, AffineReport::new(&x, &st, &strata, Some(entries)));
    assert_eq!(parsed.level_class, "positive");
}

#[test]
fn exit_codes() {
    let parse = endokl(&["kl", "--type", "Q", "--rank", "2", "--y", "e", "--w", "1"]);
    assert_eq!(parse.status.code(), Some(2));
    let domain = endokl(&["kl", "--type", "A", "--rank", "2", "--y", "e", "--w", "7", "--format", "json"]);
    assert_eq!(domain.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_slice(&domain.stderr).unwrap();
    assert!(err["error"].is_string());
}

#[test]
fn cache_export_import_reuse() {
    let dir = tempfile::tempdir().unwrap();
    let exported = dir.path().join("b3.klcache");
    let store = dir.path().join("store.klcache");
    let (exported_s, store_s) = (exported.to_str().unwrap(), store.to_str().unwrap());
    let o = endokl(&["cache", "export", "--type", "B", "--rank", "3", "--out", exported_s]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = endokl(&["cache", "import", "--file", exported_s, "--store", store_s]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let query = ["kl", "--type", "B", "--rank", "3", "--y", "e", "--w", "1,2,3,2,1", "--format", "json"];
    let fresh: KlReport = serde_json::from_slice(&endokl(&query).stdout).unwrap();
    let cached = Command::new(env!("CARGO_BIN_EXE_endokl"))
        .args(query)
        .env("ENDOKL_CACHE", &store)
        .output()
        .unwrap();
    assert!(cached.status.success());
    let cached: KlReport = serde_json::from_slice(&cached.stdout).unwrap();
    assert_eq!(fresh, cached);
}
