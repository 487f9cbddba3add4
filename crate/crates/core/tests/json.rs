use serde_json::json;

use gradalg::abgroup::FgAbelianGroup;
use gradalg::catalog;
use gradalg::grading::GGrading;
use gradalg::json::*;
use gradalg::scalar::Field;

fn fields() -> Vec<Field> {
    vec![Field::rationals(), Field::cyclotomic(3), Field::cyclotomic(4), Field::prime(5)]
}

#[test]
fn scalars_round_trip() {
    for f in fields() {
        for (n, d) in [(0, 1), (1, 1), (-3, 2), (7, 3)] {
            let x = &f.from_ratio(n, d) + &f.zeta();
            let v = scalar_to_json(&x);
            assert_eq!(scalar_from_json(&f, &v, "$").unwrap(), x, "{f}: {v}");
        }
    }
}

#[test]
fn scalar_encodings() {
    let q = Field::rationals();
    assert_eq!(scalar_to_json(&q.from_ratio(-3, 6)), json!("-1/2"));
    assert_eq!(scalar_to_json(&q.from_i64(4)), json!("4"));
    assert_eq!(scalar_to_json(&Field::prime(7).from_i64(-1)), json!(6));
    let i = Field::cyclotomic(4).zeta();
    assert_eq!(scalar_to_json(&i), json!({"N": 4, "coeffs": ["0", "1"]}));
    assert_eq!(scalar_from_json(&q, &json!(3), "$").unwrap(), q.from_i64(3));
    assert!(scalar_from_json(&q, &json!(0.5), "$").is_err());
    assert!(scalar_from_json(&q, &json!("1/0"), "$").is_err());
    assert!(scalar_from_json(&q, &json!({"N": 4, "coeffs": ["0", "1"]}), "$").is_err());
    // 1/2 in F_3 is 2
    assert_eq!(scalar_from_json(&Field::prime(3), &json!("1/2"), "$").unwrap(), Field::prime(3).from_i64(2));
}

#[test]
fn groups_round_trip() {
    let gs = [
        FgAbelianGroup::trivial(),
        FgAbelianGroup::integers(2),
        FgAbelianGroup::from_invariants(1, &[2, 6]),
        FgAbelianGroup::from_relations_i64(3, &[&[2, 4, 0], &[0, 6, 3]]).unwrap(),
    ];
    for g in gs {
        let v = group_to_json(&g);
        let h = group_from_json(&v, "$").unwrap();
        assert_eq!(h, g);
        for e in [g.zero()].into_iter().chain((0..g.generator_count()).map(|i| g.generator(i))) {
            let w = element_to_json(&g, &e);
            assert_eq!(element_from_json(&h, &w, "$").unwrap(), e);
        }
    }
    let g = group_from_json(&json!({"free_rank": 0, "torsion": [4, 2]}), "$").unwrap();
    assert!(g.is_isomorphic(&catalog::z4z2()));
    assert!(group_from_json(&json!({"generators": 2, "relations": [[1]]}), "$").is_err());
    assert!(group_from_json(&json!({"torsion": [2]}), "$").is_err());
}

#[test]
fn algebras_and_gradings_round_trip() {
    let q = Field::rationals();
    let f4 = Field::cyclotomic(4);
    let ggs: Vec<GGrading> = vec![
        catalog::gamma1(&q),
        catalog::gamma2(&q).unwrap(),
        catalog::fxf_c2_grading(&Field::prime(3)).unwrap(),
        catalog::sl2xsl2_z4z2(&f4).unwrap(),
        catalog::jordan_gamma2(&q).unwrap(),
    ];
    for gg in ggs {
        let v = ggrading_to_json(&gg);
        let spec = grading_from_json(&v, None, "$").unwrap();
        assert!(spec.algebra.same_structure(gg.algebra()));
        assert_eq!(spec.algebra.labels(), gg.algebra().labels());
        let back = spec.ggrading().unwrap().unwrap();
        assert_eq!(back, gg);
        assert_eq!(spec.grading().unwrap(), *gg.grading());
    }
}

#[test]
fn nested_tables_are_accepted() {
    let v = json!({"field": "Q", "dim": 2, "table": [[[[0, "1"]], []], [[], [[1, "1"]]]]});
    let a = algebra_from_json(&v, None, "$").unwrap();
    assert!(a.same_structure(&catalog::fxf(&Field::rationals())));
}

#[test]
fn field_override_reparses_scalars() {
    let v = algebra_to_json(&catalog::sl2(&Field::rationals()));
    let a = algebra_from_json(&v, Some(&Field::prime(3)), "$").unwrap();
    assert!(a.same_structure(&catalog::sl2(&Field::prime(3))));
}

#[test]
fn schema_errors_carry_paths() {
    let v = json!({"algebra": {"field": "Q", "dim": 2, "table": [[], [], [], [[5, "1"]]]}, "components": []});
    let e = grading_from_json(&v, None, "$").unwrap_err();
    assert!(e.path.starts_with("$.algebra.table[3]"), "{e}");
    let v = json!({"algebra": {"field": "Q", "dim": 1, "table": [[]]}, "components": [[["1", "2"]]]});
    let e = grading_from_json(&v, None, "$").unwrap_err();
    assert_eq!(e.path, "$.components[0][0]");
    let v = json!({"algebra": {"field": "K", "dim": 1, "table": [[]]}, "components": []});
    assert_eq!(grading_from_json(&v, None, "$").unwrap_err().path, "$.algebra.field");
    assert!(check_version(&json!({"version": 2})).is_err());
    assert!(check_version(&json!({"version": 1})).is_ok());
}

#[test]
fn loop_descriptors() {
    let q = Field::rationals();
    let base = ggrading_to_json(&catalog::gamma2(&q).unwrap());
    let z4z2 = json!({"free_rank": 0, "torsion": [4, 2]});
    let v = json!({"base": base, "pi": {"domain": z4z2, "matrix": [[1, 0], [0, 1]]}});
    let s = loop_from_json(&v, None, "$").unwrap();
    assert_eq!(s.images.len(), 2);
    assert!(s.characters.is_none());
    let bad = json!({"base": base, "pi": {"domain": z4z2, "matrix": [[1, 0]]}});
    assert!(loop_from_json(&bad, None, "$").is_err());
    let no_degrees =
        json!({"base": grading_to_json(catalog::gamma1(&q).grading()), "pi": {"domain": z4z2, "matrix": [[1], [0]]}});
    assert!(loop_from_json(&no_degrees, None, "$").is_err());
}
