use std::collections::BTreeSet;

use proptest::prelude::*;
use torsion_atlas::catalog::*;
use torsion_atlas::numkernel::Rational;

fn ts(a: u32, b: u32) -> TorsionStructure {
    TorsionStructure::new(a, b).unwrap()
}

fn qs(v: &[&str]) -> BTreeSet<Rational> {
    v.iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn keys_are_the_24_structures() {
    let cat = builtin_catalog();
    let keys = cat.keys();
    assert_eq!(keys.len(), 24);
    assert_eq!(keys.iter().filter(|t| t.is_cyclic()).count(), 7);
    let cyclic: BTreeSet<u32> = keys.iter().filter(|t| t.is_cyclic()).map(|t| t.b()).collect();
    assert_eq!(cyclic, [1, 3, 5, 7, 9, 13, 15].into_iter().collect());
    assert_eq!(cat.entries().iter().filter(|e| e.is_function_type()).count(), 21);
}

#[test]
fn finite_rows() {
    let cat = builtin_catalog();
    let c = |a, b| cat.entry(ts(a, b)).unwrap().constants.clone();
    assert_eq!(c(1, 15), qs(&["-25/2", "-349938025/8", "-121945/32", "46969655/32768"]));
    assert_eq!(c(3, 15), qs(&["-1680914269/32768", "1331/8"]));
    assert_eq!(c(12, 24), qs(&["8000"]));
}

#[test]
fn whitelist() {
    let want: BTreeSet<u32> = (1..=19).chain([21, 25, 27, 37, 43, 67, 163]).collect();
    assert_eq!(builtin_catalog().isogeny_whitelist(), &want);
}

#[test]
fn arithmetic_shape_of_keys() {
    for t in builtin_catalog().keys() {
        assert_eq!(240 % t.a(), 0, "{t}");
        for p in [11, 17, 19, 23, 29, 31, 37, 41, 43] {
            assert_eq!(p_primary(t, p), TorsionStructure::trivial(), "{t} at {p}");
        }
    }
}

#[test]
fn cm_table_matches_fixture_file() {
    let cat = builtin_catalog();
    let file = torsion_atlas::fixtures::cm_curves();
    assert_eq!(cat.cm_table().len(), 15);
    for (c, r) in cat.cm_table().iter().zip(&file) {
        assert_eq!(Some(&c.label), r.label.as_ref());
        assert_eq!(Some(&c.ainvs), r.ainvs.as_ref());
        assert_eq!(Some(c.torsion), r.expected);
    }
}

#[test]
fn factored_forms_and_spot_rows() {
    let cat = builtin_catalog();
    assert!(cat.check_factored_forms().unwrap() >= 24);
    cat.spot_check().unwrap();
}

/// One digit changed anywhere in a coefficient is caught, either by the
/// normal-form check on load or by re-expansion.
#[test]
fn tamper_detection() {
    let (a, b) = (5, 5);
    let json: serde_json::Value = serde_json::from_str(BUILTIN_JSON).unwrap();
    let entries = json["entries"].as_array().unwrap();
    let idx = entries
        .iter()
        .position(|e| e["torsion"] == serde_json::json!([a, b]))
        .unwrap();
    let n = entries[idx]["maps"][0]["num"].as_array().unwrap().len();
    for k in 0..n {
        let mut j = json.clone();
        let c = &mut j["entries"][idx]["maps"][0]["num"][k];
        let s = c.as_str().unwrap().to_string();
        let last = s.chars().last().unwrap();
        let bumped = if last == '9' { '8' } else { char::from(last as u8 + 1) };
        *c = serde_json::Value::String(format!("{}{bumped}", &s[..s.len() - 1]));
        let verdict = Catalog::from_json(&j.to_string()).and_then(|cat| {
            cat.spot_check()?;
            cat.check_factored_forms()
        });
        assert!(verdict.is_err(), "coefficient {k} altered without detection");
    }
}

#[test]
fn rejects_bad_catalogs() {
    let mut json: serde_json::Value = serde_json::from_str(BUILTIN_JSON).unwrap();
    json["entries"].as_array_mut().unwrap().pop();
    assert!(matches!(
        Catalog::from_json(&json.to_string()),
        Err(CatalogError::Keys { .. })
    ));
    let mut json: serde_json::Value = serde_json::from_str(BUILTIN_JSON).unwrap();
    json["isogeny_whitelist"].as_array_mut().unwrap().push(20.into());
    assert!(matches!(
        Catalog::from_json(&json.to_string()),
        Err(CatalogError::Whitelist)
    ));
    assert!(Catalog::from_json("{").is_err());
}

/// The printed Z/7 row against the canonical one, compared on sampled images.
#[test]
fn z7_printed_against_canonical() {
    let cat = builtin_catalog();
    let canonical = &cat.entry(ts(1, 7)).unwrap().maps[0].map;
    let printed = &cat.superseded().iter().find(|s| s.torsion == ts(1, 7)).unwrap().map.map;
    let j26b1: Rational = "-2146689/1664".parse().unwrap();
    assert!(canonical.fiber(&j26b1).unwrap().contains(&Rational::from(2)));
    assert!(printed.fiber(&j26b1).unwrap().is_empty());

    let (mut hit, mut total) = (0, 0);
    for n in -6i64..=6 {
        for d in 1i64..=4 {
            let t = Rational::new(n, d);
            let Ok(j) = printed.eval(&t) else { continue };
            total += 1;
            if !canonical.fiber(&j).unwrap().is_empty() {
                hit += 1;
            }
        }
    }
    // Sampled images barely overlap.
    assert!(total > 40);
    assert!(
        hit * 4 < total,
        "{hit}/{total} printed values reached by the canonical map"
    );
}

fn any_key() -> impl Strategy<Value = TorsionStructure> {
    let keys: Vec<_> = structures().collect();
    proptest::sample::select(keys)
}

proptest! {
    #[test]
    fn order_is_a_partial_order(x in any_key(), y in any_key(), z in any_key()) {
        prop_assert!(torsion_leq(x, x));
        if torsion_leq(x, y) && torsion_leq(y, x) {
            prop_assert_eq!(x, y);
        }
        if torsion_leq(x, y) && torsion_leq(y, z) {
            prop_assert!(torsion_leq(x, z));
        }
    }

    #[test]
    fn max_of_a_chain(x in any_key()) {
        let below: Vec<_> = structures().filter(|&s| torsion_leq(s, x)).collect();
        prop_assert_eq!(torsion_max(below).unwrap(), x);
    }
}

#[test]
fn lattice_examples() {
    assert!(torsion_leq(ts(1, 5), ts(5, 5)));
    assert!(!torsion_leq(ts(4, 4), ts(1, 3)) && !torsion_leq(ts(1, 3), ts(4, 4)));
    assert!(torsion_leq(ts(4, 8), ts(8, 16)));
    assert!(!torsion_leq(ts(8, 8), ts(4, 32)));
    assert_eq!(torsion_max([ts(1, 1), ts(1, 3), ts(3, 15)]).unwrap(), ts(3, 15));
    assert!(matches!(
        torsion_max([ts(4, 4), ts(1, 3)]),
        Err(TorsionError::NonUniqueMaximum(_))
    ));
    assert_eq!(p_primary(ts(8, 24), 2), ts(8, 8));
    assert_eq!(p_primary(ts(8, 24), 3), ts(1, 3));
}
