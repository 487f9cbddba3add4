use std::sync::Arc;

use gradalg::abgroup::{Character, FgAbelianGroup, GroupHom};
use gradalg::algebra::{Algebra, AlgebraMap};
use gradalg::catalog::{self, vec_of};
use gradalg::grading::{
    check_equivalence, check_g_isomorphism, diagonal_automorphism, free_product_group_grading, product_g_grading,
    product_grading, validate_grading, GGrading, Grading, GradingError,
};
use gradalg::linalg::{Matrix, Subspace};
use gradalg::scalar::Field;
use num_bigint::BigInt;

fn q() -> Field {
    Field::rationals()
}

fn span(f: &Field, rows: &[&[i64]]) -> Subspace {
    let n = rows[0].len();
    Subspace::span(f, n, rows.iter().map(|r| vec_of(f, r)))
}

#[test]
fn fxf_grading_has_trivial_universal_group() {
    let g = catalog::fxf_grading(&q());
    let u = g.universal_group();
    assert!(u.group.is_trivial());
    assert!(!g.is_group_grading());
    let gr = g.induced_group_grading();
    assert_eq!(gr.len(), 1);
    assert!(gr.components()[0].is_full());
}

#[test]
fn zero_product_line_gives_integers() {
    let a = catalog::zero_product_line(&q());
    let u = Grading::trivial(&a).universal_group();
    assert_eq!(u.group.free_rank(), 1);
    assert!(u.group.torsion().is_empty());
    // with A² ≠ 0 the single relator kills the generator
    let b = catalog::ground_field(&q());
    assert!(Grading::trivial(&b).universal_group().group.is_trivial());
}

#[test]
fn sl2_with_two_lines_is_not_a_direct_sum() {
    let f = q();
    let a = catalog::sl2(&f);
    let r = validate_grading(&a, &[vec![vec_of(&f, &[1, 0, 0])], vec![vec_of(&f, &[0, 1, 0])]]);
    assert!(matches!(r, Err(GradingError::NotDirectSum(_))));
}

#[test]
fn not_closed_reports_the_product() {
    let f = q();
    let a = catalog::sl2(&f);
    // [F + H, H] = 2F lies in neither {E, F + H} nor {H}
    let r = validate_grading(&a, &[vec![vec_of(&f, &[1, 0, 0]), vec_of(&f, &[0, 1, 1])], vec![vec_of(&f, &[0, 0, 1])]]);
    match r {
        Err(GradingError::NotClosed { product, .. }) => assert!(!product.is_zero()),
        other => panic!("expected NotClosed, got {other:?}"),
    }
}

#[test]
fn non_group_grading_on_sl2xsl2() {
    let f = q();
    let g = catalog::non_group_sl2xsl2(&f).unwrap();
    assert_eq!(g.len(), 5);
    assert!(!g.is_group_grading());
    let u = g.universal_group();
    assert_eq!(u.group.free_rank(), 1);
    assert_eq!(u.group.torsion(), &[BigInt::from(2)]);

    let hh = span(&f, &[&[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 1]]);
    let e0 = span(&f, &[&[1, 0, 0, 0, 0, 0]]);
    let f0 = span(&f, &[&[0, 1, 0, 0, 0, 0]]);
    let second = span(&f, &[&[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0]]);
    let idx = |s: &Subspace| g.components().iter().position(|c| c == s);
    assert!(u.degrees[idx(&hh).unwrap()].is_zero());

    let gr = g.induced_group_grading();
    assert_eq!(gr.len(), 4);
    let deg = |s: &Subspace| gr.degree(gr.components().iter().position(|c| c == s).unwrap()).clone();
    let beta = deg(&e0);
    let delta = deg(&second);
    assert!(deg(&hh).is_zero());
    assert_eq!(deg(&f0), gr.group().neg(&beta));
    assert_eq!(gr.group().element_order(&beta), None);
    assert_eq!(gr.group().element_order(&delta), Some(BigInt::from(2)));
    // β and δ generate U
    assert!(gr.group().subgroup(&[beta, delta]).same_as(
        &gr.group().subgroup(&(0..gr.group().rank()).map(|i| gr.group().canonical_generator(i)).collect::<Vec<_>>())
    ));
}

#[test]
fn group_gradings_are_fixed_by_induction() {
    let f = q();
    for gg in [catalog::gamma1(&f), catalog::gamma2(&f).unwrap()] {
        let g = gg.grading();
        assert!(g.is_group_grading());
        assert_eq!(g.induced_group_grading().components(), g.components());
        assert!(gg.is_universal());
    }
}

#[test]
fn coarsening_gamma1_by_parity() {
    let f = q();
    let g1 = catalog::gamma1(&f);
    let z = g1.group().clone();
    let c2 = FgAbelianGroup::cyclic(2);
    let beta = GroupHom::from_images(&z, &c2, &[c2.generator(0)]).unwrap();
    let c = g1.coarsen(&beta).unwrap();
    assert_eq!(c.len(), 2);
    assert_eq!(c.component_at(&c2.zero()), span(&f, &[&[0, 0, 1]]));
    assert_eq!(c.component_at(&c2.generator(0)), span(&f, &[&[1, 0, 0], &[0, 1, 0]]));
    let same = g1.coarsen(&GroupHom::identity(&z)).unwrap();
    assert_eq!(same, g1);
}

#[test]
fn refinement_and_restriction() {
    let f = q();
    let g1 = catalog::gamma1(&f);
    let p = product_grading(&[g1.grading(), g1.grading()]).unwrap();
    let id = p.refinement_map(&p).unwrap();
    assert!(!id.is_proper());
    let triv = Grading::trivial(p.algebra());
    let c = p.refinement_map(&triv).unwrap();
    assert!(c.is_proper());
    assert!(c.as_slice().iter().all(|&w| w == 0));
    assert!(triv.refinement_map(&p).is_none());

    let free = free_product_group_grading(&[g1.grading(), g1.grading()]).unwrap();
    let first = span(&f, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0]]);
    let (r, incl) = free.grading().restrict(&first).unwrap();
    assert!(r.algebra().same_structure(&catalog::sl2(&f)));
    assert_eq!(r.components(), g1.components());
    assert!(incl.is_homomorphism());

    let diag = span(&f, &[&[1, 0, 0, 1, 0, 0], &[0, 1, 0, 0, 1, 0], &[0, 0, 1, 0, 0, 1]]);
    assert!(matches!(free.grading().restrict(&diag), Err(GradingError::NotGradedSubalgebra(_))));
}

#[test]
fn product_of_trivial_gradings_is_fxf() {
    let f = q();
    let k = catalog::ground_field(&f);
    let t = Grading::trivial(&k);
    let p = product_grading(&[&t, &t]).unwrap();
    assert_eq!(p, catalog::fxf_grading(&f));
    let single = product_grading(&[&t]).unwrap();
    assert_eq!(single, t);
}

#[test]
fn product_of_gamma1_has_six_components_and_rank_two() {
    let f = q();
    let g1 = catalog::gamma1(&f);
    let p = product_grading(&[g1.grading(), g1.grading()]).unwrap();
    assert_eq!(p.len(), 6);
    let u = p.universal_group();
    assert!(u.group.is_isomorphic(&FgAbelianGroup::integers(2)));
}

#[test]
fn product_g_grading_of_trivial_gradings() {
    let f = q();
    let g = FgAbelianGroup::cyclic(3);
    let a = catalog::sl2(&f);
    let t = GGrading::trivial(&a, &g);
    let p = product_g_grading(&g, &[&t, &t]).unwrap();
    assert_eq!(p.len(), 1);
    assert!(p.components()[0].is_full());
    assert_eq!(product_g_grading(&g, &[&t]).unwrap(), t);
    let other = GGrading::trivial(&a, &FgAbelianGroup::cyclic(2));
    assert!(matches!(product_g_grading(&g, &[&t, &other]), Err(GradingError::GroupMismatch(_))));
}

#[test]
fn free_product_rejects_non_group_factor() {
    let f = q();
    let g1 = catalog::gamma1(&f);
    let fxf = catalog::fxf_grading(&f);
    assert!(matches!(free_product_group_grading(&[g1.grading(), &fxf]), Err(GradingError::NotGroupGrading(1))));
}

#[test]
fn diagonal_automorphism_examples() {
    let f = q();
    let g1 = catalog::gamma1(&f);
    let t = f.from_i64(3);
    let chi = Character::new(g1.group(), &f, vec![t.clone()]).unwrap();
    let phi = diagonal_automorphism(&g1, &chi).unwrap();
    let tinv = t.inv().unwrap();
    let expected = Matrix::diagonal(&f, &[t.clone(), tinv, f.one()]);
    assert_eq!(phi.matrix(), &expected);
    let triv = Character::trivial(g1.group(), &f);
    assert!(diagonal_automorphism(&g1, &triv).unwrap().matrix().is_identity());

    let c2 = catalog::fxf_c2_grading(&f).unwrap();
    let sign = Character::new(c2.group(), &f, vec![f.from_i64(-1)]).unwrap();
    let swap = diagonal_automorphism(&c2, &sign).unwrap();
    assert_eq!(swap.matrix(), &Matrix::from_i64(&f, &[&[0, 1], &[1, 0]]));
}

#[test]
fn fxf_c2_grading_collapses_in_char_two() {
    assert!(matches!(catalog::fxf_c2_grading(&Field::prime(2)), Err(GradingError::NotDirectSum(_))));
    assert!(catalog::fxf_c2_grading(&Field::prime(3)).is_ok());
}

#[test]
fn equivalence_of_jordan_gradings_is_the_swap() {
    let f = q();
    let g1 = catalog::jordan_gamma1(&f).unwrap();
    let g2 = catalog::jordan_gamma2(&f).unwrap();
    let id = AlgebraMap::identity(g1.algebra());
    let eq = check_equivalence(&id, g1.grading(), g2.grading()).unwrap();
    // transport α^U to the displayed groups through the universal realizations
    let (_, b1) = g1.universal_hom().unwrap();
    let (_, b2) = g2.universal_hom().unwrap();
    let alpha = b1.inverse().unwrap().then(&eq.alpha).then(&b2);
    let k = g1.group();
    let swap = GroupHom::from_images(k, k, &[k.generator(1), k.generator(0)]).unwrap();
    assert!(alpha.same_map(&swap));
    assert!(!check_g_isomorphism(&id, &g1, &g2));
    assert!(check_g_isomorphism(&id, &g1, &g1));

    let self_eq = check_equivalence(&id, g1.grading(), g1.grading()).unwrap();
    assert!(self_eq.alpha.same_map(&GroupHom::identity(&self_eq.source.group)));
}

#[test]
fn non_equivalence_detected() {
    let f = q();
    let g1 = catalog::gamma1(&f);
    // E ↔ F, H ↦ −H permutes the components of Γ¹ but not those of Γ²
    let a = g1.algebra().clone();
    let m = Matrix::from_i64(&f, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
    let phi = AlgebraMap::new(a.clone(), a.clone(), m).unwrap();
    assert!(check_equivalence(&phi, g1.grading(), g1.grading()).is_some());
    let g2 = catalog::gamma2(&f).unwrap();
    assert!(check_equivalence(&phi, g1.grading(), g2.grading()).is_none());
}

#[test]
fn universal_hom_factors_the_degree_map() {
    let f = q();
    let gg = catalog::sl2_type1(&f, &FgAbelianGroup::cyclic(5), &FgAbelianGroup::cyclic(5).generator(0)).unwrap();
    let (u, beta) = gg.universal_hom().unwrap();
    for (i, d) in u.degrees.iter().enumerate() {
        assert_eq!(&beta.apply(d), gg.degree(i));
    }
    assert!(!gg.is_universal());
}

#[test]
fn transport_along_an_isomorphism() {
    let f = q();
    let gg = catalog::gamma2(&f).unwrap();
    let a: Arc<Algebra> = gg.algebra().clone();
    let m = Matrix::from_i64(&f, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
    let phi = AlgebraMap::new(a.clone(), a, m).unwrap();
    let t = gg.transport(&phi).unwrap();
    assert!(check_g_isomorphism(&phi, &gg, &t));
}
