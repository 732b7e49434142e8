use ftc_core::groups::GroupTable;
use ftc_core::hopf::{gen_dual_group_algebra, gen_group_algebra, gen_sweedler, gen_taft, verify_hopf};
use ftc_core::io::{
    algebra_from_json, algebra_to_json, fusion_from_json, fusion_to_json, hopf_from_json, hopf_to_json,
    module_from_json, module_to_json, parse_document, scalar_from_json, scalar_to_json, to_pretty, Document, IoError,
};
use ftc_core::rep::{fusion_from_hopf, hopf_simples, DEFAULT_SEED};
use ftc_core::{Field, FieldSpec};
use proptest::prelude::*;

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::rationals()),
        Just(Field::prime(5).unwrap()),
        Just(Field::prime(7).unwrap()),
        Just(Field::from_spec(&FieldSpec::parse("ext:Fp:2:x^2+x+1").unwrap()).unwrap()),
        Just(Field::from_spec(&FieldSpec::parse("ext:Q:x^2+1").unwrap()).unwrap()),
    ]
}

fn group(i: usize) -> GroupTable {
    match i {
        0 => GroupTable::symmetric3(),
        1 => GroupTable::dihedral4(),
        2 => GroupTable::quaternion8(),
        n => GroupTable::cyclic(n - 2),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn scalars_round_trip(f in fields(), a in -1000i64..1000, b in 1i64..50, c in -20i64..20) {
        let mut x = &f.from_i64(a) * &f.from_i64(b).inv().unwrap_or_else(|| f.one());
        if let Some(g) = f.generator() {
            x = &x + &(&f.from_i64(c) * &g);
        }
        prop_assert_eq!(scalar_from_json(&f, &scalar_to_json(&x)).unwrap(), x);
    }

    #[test]
    fn hopf_json_is_a_fixed_point(f in fields(), g in 0usize..9, dual in any::<bool>()) {
        let t = group(g);
        let h = if dual { gen_dual_group_algebra(&t, &f) } else { gen_group_algebra(&t, &f) }.unwrap();
        let text = to_pretty(&hopf_to_json(&h));
        let back = match parse_document(&text).unwrap() {
            Document::Hopf(b) => b,
            _ => panic!("detected as the wrong document kind"),
        };
        prop_assert!(verify_hopf(&back).is_valid());
        prop_assert_eq!(to_pretty(&hopf_to_json(&back)), text);
        let alg = algebra_from_json(&algebra_to_json(&h.alg)).unwrap();
        prop_assert_eq!(algebra_to_json(&alg), algebra_to_json(&h.alg));
    }
}

#[test]
fn pointed_instances_round_trip() {
    let f5 = Field::prime(5).unwrap();
    for h in [gen_sweedler(&f5).unwrap(), gen_taft(4, &f5.from_i64(2), &f5).unwrap()] {
        let v = hopf_to_json(&h);
        let back = hopf_from_json(&v).unwrap();
        assert_eq!(hopf_to_json(&back), v);
    }
}

#[test]
fn fusion_and_module_json_round_trip() {
    let f7 = Field::prime(7).unwrap();
    let h = gen_group_algebra(&GroupTable::symmetric3(), &f7).unwrap();
    let hf = fusion_from_hopf(&h, DEFAULT_SEED).unwrap();
    let v = fusion_to_json(&hf.ring, Some(&hf.blocks));
    let (ring, blocks) = fusion_from_json(&v).unwrap();
    assert_eq!(blocks, hf.blocks);
    assert_eq!(fusion_to_json(&ring, Some(&blocks)), v);
    // without blocks every label is its own block
    let (_, singles) = fusion_from_json(&fusion_to_json(&hf.ring, None)).unwrap();
    assert_eq!(singles.classes.len(), 3);

    for m in &hopf_simples(&h, DEFAULT_SEED).unwrap().modules {
        let v = module_to_json(m);
        let back = module_from_json(&h.alg, &v).unwrap();
        assert_eq!(module_to_json(&back), v);
    }
}

#[test]
fn malformed_documents_are_schema_errors() {
    for text in [
        "[]",
        r#"{"nothing": 1}"#,
        r#"{"labels": ["1"], "unit": "x", "mult": []}"#,
        r#"{"labels": ["1"], "unit": "1", "mult": [["1", "1", "1"]]}"#,
        r#"{"field": "Fp:4", "basis": ["e"], "mult": [], "unit": [1]}"#,
    ] {
        assert!(parse_document(text).is_err(), "{text}");
    }
    assert!(matches!(parse_document("{oops"), Err(IoError::Json(_))));
}
