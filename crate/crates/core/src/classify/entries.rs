//! The example catalog: named constructions with golden checks.

use std::sync::Arc;

use crate::abgroup::{solve_hom_extension, Character, FgAbelianGroup, GroupError, GroupHom};
use crate::algebra::{is_simple, Algebra, AlgebraMap};
use crate::catalog as cat;
use crate::grading::{check_equivalence, free_product_group_grading, product_grading, GGrading, Grading, GradingError};
use crate::linalg::{Matrix, Subspace};
use crate::loops::{
    base_isomorphism, build_loop, is_graded_central_simple, recover_base, split_loop_with, verify_loop_universal,
    LoopAlgebra,
};
use crate::scalar::Field;

use super::{
    decompose_graded, factors_reproduce, fine_criteria_check, loop_equivalence, sl2_grading_classifier, ClassifyError,
    FinenessInput, Sl2Descriptor,
};

/// One named verification inside a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.to_string(), passed, detail: detail.into() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryReport {
    pub name: String,
    pub field: String,
    pub checks: Vec<Check>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type Runner = fn(&Field, u64) -> Result<Vec<Check>, ClassifyError>;

pub struct CatalogEntry {
    pub key: char,
    pub name: &'static str,
    pub description: &'static str,
    /// Fineness of the named gradings, as known from the classification
    /// of gradings on these algebras. Not computed.
    pub fineness: &'static [(&'static str, bool)],
    default_field: fn() -> Field,
    /// Rejects fields the constructions do not make sense over.
    supports: fn(&Field) -> bool,
    run: Runner,
}

impl CatalogEntry {
    pub fn default_field(&self) -> Field {
        (self.default_field)()
    }

    pub fn supports(&self, f: &Field) -> bool {
        (self.supports)(f)
    }

    pub fn fineness_of(&self, grading: &str) -> Option<bool> {
        self.fineness.iter().find(|(n, _)| *n == grading).map(|(_, b)| *b)
    }
}

fn rationals() -> Field {
    Field::rationals()
}

fn gaussian() -> Field {
    Field::cyclotomic(4)
}

fn any_field(_: &Field) -> bool {
    true
}

fn odd_char(f: &Field) -> bool {
    f.characteristic() != 2
}

fn has_i(f: &Field) -> bool {
    f.root_of_unity(4).is_ok()
}

static CATALOG: [CatalogEntry; 10] = [
    CatalogEntry {
        key: 'a',
        name: "fxf",
        description: "F x F with the grading by the two idempotent lines",
        fineness: &[],
        default_field: rationals,
        supports: any_field,
        run: run_fxf,
    },
    CatalogEntry {
        key: 'b',
        name: "trivial-gradings",
        description: "trivial gradings on one-dimensional algebras with nonzero and zero product",
        fineness: &[],
        default_field: rationals,
        supports: any_field,
        run: run_trivial,
    },
    CatalogEntry {
        key: 'c',
        name: "sl2",
        description: "sl2 with the Cartan grading over Z and the Pauli grading over (Z/2)^2",
        fineness: &[("gamma1", true), ("gamma2", true), ("trivial", false)],
        default_field: rationals,
        supports: odd_char,
        run: run_sl2,
    },
    CatalogEntry {
        key: 'd',
        name: "non-group-sl2xsl2",
        description: "a five-component grading on sl2 x sl2 that is not a group-grading",
        fineness: &[],
        default_field: rationals,
        supports: odd_char,
        run: run_non_group,
    },
    CatalogEntry {
        key: 'e',
        name: "free-products",
        description: "the three free products of the fine gradings on sl2",
        fineness: &[("gamma1xgamma1", true), ("gamma1xgamma2", true), ("gamma2xgamma2", true)],
        default_field: rationals,
        supports: odd_char,
        run: run_free_products,
    },
    CatalogEntry {
        key: 'f',
        name: "loop-gradings-sl2xsl2",
        description: "graded-simple gradings on sl2 x sl2 from loops of the fine gradings on sl2",
        fineness: &[("gamma_l1", true), ("gamma_l2", true)],
        default_field: rationals,
        supports: odd_char,
        run: run_loop_gradings,
    },
    CatalogEntry {
        key: 'g',
        name: "sl2xsl2-z4z2",
        description: "the Z/4 x Z/2-grading on sl2 x sl2 split from a loop over the Pauli grading",
        fineness: &[("z4z2", true)],
        default_field: gaussian,
        supports: has_i,
        run: run_z4z2,
    },
    CatalogEntry {
        key: 'h',
        name: "trivial-fine",
        description: "a two-dimensional simple algebra whose only group-grading is trivial",
        fineness: &[("trivial", true)],
        default_field: rationals,
        supports: any_field,
        run: run_trivial_fine,
    },
    CatalogEntry {
        key: 'i',
        name: "jordan-no-extension",
        description: "two (Z/2)^2-gradings on a Jordan algebra whose identity equivalence does not extend to loops",
        fineness: &[("jordan_gamma1", true), ("jordan_gamma2", true)],
        default_field: rationals,
        supports: odd_char,
        run: run_jordan,
    },
    CatalogEntry {
        key: 'j',
        name: "sl2-constructors",
        description: "the gradings on sl2 determined by deg E = g or by a Klein subgroup T",
        fineness: &[],
        default_field: rationals,
        supports: odd_char,
        run: run_constructors,
    },
];

pub fn catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

/// By name or by key letter.
pub fn find_entry(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name || (name.len() == 1 && name.starts_with(e.key)))
}

pub fn run_entry(name: &str, field: Option<&Field>, seed: u64) -> Result<EntryReport, ClassifyError> {
    let entry = find_entry(name).ok_or_else(|| ClassifyError::UnknownEntry(name.to_string()))?;
    let f = field.cloned().unwrap_or_else(|| entry.default_field());
    if !entry.supports(&f) {
        return Err(ClassifyError::UnsupportedField(format!("{} cannot be built over {f}", entry.name)));
    }
    let checks = (entry.run)(&f, seed)?;
    Ok(EntryReport { name: entry.name.to_string(), field: f.to_string(), checks })
}

/// Fineness of a grading on 𝔰𝔩₂: up to equivalence the fine ones are the
/// Cartan and the Pauli gradings, both with three one-dimensional components.
pub fn sl2_fineness_oracle(gg: &GGrading) -> Option<bool> {
    sl2_grading_classifier(gg).ok().map(|_| gg.len() == 3 && gg.components().iter().all(|c| c.dim() == 1))
}

fn span(f: &Field, rows: &[&[i64]]) -> Subspace {
    let n = rows[0].len();
    Subspace::span(f, n, rows.iter().map(|r| cat::vec_of(f, r)))
}

fn describe(g: &FgAbelianGroup) -> String {
    g.to_string()
}

fn run_fxf(f: &Field, _: u64) -> Result<Vec<Check>, ClassifyError> {
    let g = cat::fxf_grading(f);
    let u = g.universal_group();
    let mut out = vec![
        check("universal group is trivial", u.group.is_trivial(), describe(&u.group)),
        check("not a group-grading", !g.is_group_grading(), ""),
        check("induced group-grading is trivial", g.induced_group_grading().len() == 1, ""),
    ];
    match cat::fxf_c2_grading(f) {
        Ok(c2) => {
            let ok = c2.is_universal() && c2.group().is_isomorphic(&FgAbelianGroup::cyclic(2));
            out.push(check("C2-grading by (1,1), (1,-1) is universal", ok, describe(c2.group())));
        }
        Err(e) => {
            let expected = f.characteristic() == 2 && matches!(e, GradingError::NotDirectSum(_));
            out.push(check("C2-grading degenerates in characteristic 2", expected, e.to_string()));
        }
    }
    Ok(out)
}

fn run_trivial(f: &Field, _: u64) -> Result<Vec<Check>, ClassifyError> {
    let u1 = Grading::trivial(&cat::ground_field(f)).universal_group();
    let u0 = Grading::trivial(&cat::zero_product_line(f)).universal_group();
    Ok(vec![
        check("nonzero product: universal group trivial", u1.group.is_trivial(), describe(&u1.group)),
        check(
            "zero product: universal group infinite cyclic",
            u0.group.is_isomorphic(&FgAbelianGroup::integers(1)),
            describe(&u0.group),
        ),
    ])
}

fn run_sl2(f: &Field, seed: u64) -> Result<Vec<Check>, ClassifyError> {
    let g1 = cat::gamma1(f);
    let g2 = cat::gamma2(f)?;
    let k = cat::klein();
    let z = FgAbelianGroup::integers(1);
    let triv = GGrading::trivial(&cat::sl2(f), &z);
    let h = span(f, &[&[0, 0, 1]]);
    let d1 = sl2_grading_classifier(&g1)?;
    let d2 = sl2_grading_classifier(&g2)?;
    let dt = sl2_grading_classifier(&triv)?;
    let gcs1 = is_graded_central_simple(&g1, seed)?.is_graded_central_simple();
    let gcs2 = is_graded_central_simple(&g2, seed)?.is_graded_central_simple();
    Ok(vec![
        check("sl2 is simple", is_simple(&cat::sl2(f), seed)?.is_simple(), ""),
        check("gamma1 is graded by its universal group Z", g1.is_universal(), describe(g1.group())),
        check(
            "gamma2 is graded by its universal group (Z/2)^2",
            g2.is_universal() && g2.group().is_isomorphic(&k),
            describe(g2.group()),
        ),
        check("gamma2 has FH in degree (1,0)", g2.component_at(&k.from_presentation_i64(&[1, 0])) == h, ""),
        check(
            "gamma1 classifies as type 1 with g = 1 up to sign",
            d1 == Sl2Descriptor::Type1 { g: z.generator(0).min(z.neg(&z.generator(0))) },
            format!("{d1:?}"),
        ),
        check(
            "gamma2 classifies as type 2",
            matches!(d2, Sl2Descriptor::Type2 { ref t } if t.len() == 4),
            format!("{d2:?}"),
        ),
        check("trivial grading classifies as type 1 with g = e", dt == Sl2Descriptor::Type1 { g: z.zero() }, ""),
        check("both fine gradings are graded-central-simple", gcs1 && gcs2, ""),
        check(
            "fineness oracle agrees with the classification",
            sl2_fineness_oracle(&g1) == Some(true)
                && sl2_fineness_oracle(&g2) == Some(true)
                && sl2_fineness_oracle(&triv) == Some(false),
            "",
        ),
    ])
}

fn run_non_group(f: &Field, _: u64) -> Result<Vec<Check>, ClassifyError> {
    let g = cat::non_group_sl2xsl2(f)?;
    let u = g.universal_group();
    let zz2 = FgAbelianGroup::from_relations_i64(2, &[&[0, 2]]).expect("valid");
    let gr = g.induced_group_grading();
    let deg = |v: &[i64]| gr.degree_of(&cat::vec_of(f, v));
    let (e, beta, mbeta, delta) =
        (deg(&[0, 0, 1, 0, 0, 0]), deg(&[1, 0, 0, 0, 0, 0]), deg(&[0, 1, 0, 0, 0, 0]), deg(&[0, 0, 0, 1, 0, 0]));
    let grp = gr.group();
    let degrees_ok = match (e, beta, mbeta, delta) {
        (Some(e), Some(b), Some(mb), Some(d)) => {
            e.is_zero()
                && grp.element_order(&b).is_none()
                && grp.add(&b, &mb).is_zero()
                && grp.element_order(&d) == Some(2.into())
        }
        _ => false,
    };
    let comps = [
        span(f, &[&[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 1]]),
        span(f, &[&[1, 0, 0, 0, 0, 0]]),
        span(f, &[&[0, 1, 0, 0, 0, 0]]),
        span(f, &[&[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0]]),
    ];
    let comps_ok = gr.len() == 4 && comps.iter().all(|c| gr.components().contains(c));
    Ok(vec![
        check("validates as a grading", g.len() == 5, ""),
        check("not a group-grading", !g.is_group_grading(), ""),
        check("universal group is Z x Z/2", u.group.is_isomorphic(&zz2), describe(&u.group)),
        check("induced group-grading has the four displayed components", comps_ok, format!("{gr:?}")),
        check("degrees e, b, -b and an element of order 2", degrees_ok, ""),
    ])
}

fn free_products(f: &Field) -> Result<Vec<(&'static str, GGrading, GGrading, GGrading)>, ClassifyError> {
    let g1 = cat::gamma1(f);
    let g2 = cat::gamma2(f)?;
    let pairs = [("gamma1xgamma1", &g1, &g1), ("gamma1xgamma2", &g1, &g2), ("gamma2xgamma2", &g2, &g2)];
    pairs
        .into_iter()
        .map(|(n, a, b)| {
            let free = free_product_group_grading(&[a.grading(), b.grading()])?;
            Ok((n, a.clone(), b.clone(), free))
        })
        .collect()
}

fn fineness_inputs(
    gg: &GGrading,
    seed: u64,
    flag: impl Fn(&GGrading) -> Option<bool>,
) -> Result<Vec<FinenessInput>, ClassifyError> {
    Ok(decompose_graded(gg, seed)?
        .into_iter()
        .map(|fct| {
            let fine = flag(&fct.grading);
            FinenessInput::new(fct.grading, fine)
        })
        .collect())
}

fn run_free_products(f: &Field, seed: u64) -> Result<Vec<Check>, ClassifyError> {
    let expected = [
        FgAbelianGroup::integers(2),
        FgAbelianGroup::from_invariants(1, &[2, 2]),
        FgAbelianGroup::from_invariants(0, &[2, 2, 2, 2]),
    ];
    let sizes = [5, 6, 6];
    let mut out = Vec::new();
    for ((name, a, b, free), (u, n)) in free_products(f)?.into_iter().zip(expected.iter().zip(sizes)) {
        let induced = product_grading(&[a.grading(), b.grading()])?.induced_group_grading();
        out.push(check(
            &format!("{name}: universal group"),
            free.group().is_isomorphic(u) && free.is_universal(),
            describe(free.group()),
        ));
        out.push(check(&format!("{name}: {n} homogeneous components"), free.len() == n, format!("{free:?}")));
        out.push(check(
            &format!("{name}: free product is the induced group-grading of the product"),
            free.grading() == induced.grading(),
            "",
        ));
        let parts = decompose_graded(&free, seed)?;
        out.push(check(
            &format!("{name}: two graded-simple factors recovering the grading"),
            parts.len() == 2 && factors_reproduce(&free, &parts),
            "",
        ));
        let factors = fineness_inputs(&free, seed, sl2_fineness_oracle)?;
        let verdict = fine_criteria_check(&factors)?;
        out.push(check(&format!("{name}: fine"), verdict.fine, format!("{verdict:?}")));
    }
    Ok(out)
}

/// Fineness of a loop grading from the fineness of its base, valid when
/// the base is graded by its universal group.
fn loop_fineness(l: &LoopAlgebra, base_fine: Option<bool>) -> Option<bool> {
    if l.base().is_universal() {
        base_fine
    } else {
        None
    }
}

fn z_z2() -> FgAbelianGroup {
    FgAbelianGroup::from_relations_i64(2, &[&[0, 2]]).expect("valid")
}

fn loop_checks(
    name: &str,
    l: &LoopAlgebra,
    chars: Option<Vec<Character>>,
    expected: &GGrading,
    seed: u64,
) -> Result<Vec<Check>, ClassifyError> {
    let mut out = Vec::new();
    let chars = match chars {
        Some(c) => c,
        None => crate::loops::split_loop(l)?.characters,
    };
    let s = split_loop_with(l, chars)?;
    out.push(check(&format!("{name}: split loop reproduces the grading"), s.image_grading == *expected, ""));
    out.push(check(
        &format!("{name}: character matrix is regular"),
        !s.determinant.is_zero(),
        s.determinant.to_string(),
    ));
    let r = verify_loop_universal(l)?;
    out.push(check(&format!("{name}: universal group of the loop is G"), r.certified(), describe(&r.universal.group)));
    let gcs = is_graded_central_simple(expected, seed)?;
    out.push(check(&format!("{name}: graded-central-simple"), gcs.is_graded_central_simple(), ""));
    let rec = recover_base(expected, seed)?;
    let base_ok = sl2_grading_classifier(&rec.base)? == sl2_grading_classifier(l.base())?
        || sl2_grading_classifier(&rec.base)?.isomorphic(&sl2_grading_classifier(l.base())?);
    out.push(check(
        &format!("{name}: recovered base has the type of the original"),
        base_ok && rec.base.group().is_isomorphic(l.base().group()),
        describe(rec.base.group()),
    ));
    let rt = recover_base(l.grading(), seed)?;
    let bi = base_isomorphism(l, &rt)?;
    out.push(check(
        &format!("{name}: round trip through the loop is a graded isomorphism"),
        bi.graded && rt.profile.centroid_dim == l.kernel_elements().len(),
        "",
    ));
    let fine = loop_fineness(l, sl2_fineness_oracle(l.base()));
    let factors = fineness_inputs(expected, seed, |_| fine)?;
    let verdict = fine_criteria_check(&factors)?;
    out.push(check(&format!("{name}: fine"), factors.len() == 1 && verdict.fine, format!("{verdict:?}")));
    Ok(out)
}

fn run_loop_gradings(f: &Field, seed: u64) -> Result<Vec<Check>, ClassifyError> {
    let g = z_z2();
    let z = FgAbelianGroup::integers(1);
    let pi = GroupHom::from_images(&g, &z, &[z.generator(0), z.zero()])?;
    let l1 = build_loop(&cat::gamma1(f), &pi)?;
    let gl1 = cat::gamma_l1(f, &g, &g.from_presentation_i64(&[0, 1]), &g.from_presentation_i64(&[1, 0]))?;
    let mut out = loop_checks("gamma_l1", &l1, None, &gl1, seed)?;

    let c = FgAbelianGroup::from_invariants(0, &[2, 2, 2]);
    let k = cat::klein();
    let pi = GroupHom::from_images(&c, &k, &[k.generator(0), k.generator(1), k.zero()])?;
    let l2 = build_loop(&cat::gamma2(f)?, &pi)?;
    let p = |x: &[i64]| c.from_presentation_i64(x);
    let gl2 = cat::gamma_l2(f, &c, &p(&[0, 0, 1]), &p(&[1, 0, 0]), &p(&[0, 1, 0]))?;
    out.extend(loop_checks("gamma_l2", &l2, None, &gl2, seed)?);

    // E <-> F, H -> -H on the base extends to the loops of gamma1
    let a = cat::sl2(f);
    let swap = AlgebraMap::new(a.clone(), a, Matrix::from_i64(f, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]))?;
    let ext = loop_equivalence(&l1, &l1, &swap)?;
    out.push(check("gamma_l1: the Chevalley involution extends to the loop", ext.extends(), ""));
    Ok(out)
}

fn run_z4z2(f: &Field, seed: u64) -> Result<Vec<Check>, ClassifyError> {
    let g = cat::z4z2();
    let k = cat::klein();
    let pi = GroupHom::from_images(&g, &k, &[k.generator(0), k.generator(1)])?;
    let l = build_loop(&cat::gamma2(f)?, &pi)?;
    let i = f.root_of_unity(4)?;
    let chars = vec![Character::trivial(&g, f), Character::from_presentation_values(&g, f, &[i, f.one()])?];
    let expected = cat::sl2xsl2_z4z2(f)?;
    let mut out = vec![check(
        "kernel is generated by (2,0)",
        l.kernel().contains(&g.from_presentation_i64(&[2, 0])) && l.kernel_elements().len() == 2,
        "",
    )];
    out.extend(loop_checks("z4z2", &l, Some(chars), &expected, seed)?);
    Ok(out)
}

fn run_trivial_fine(f: &Field, seed: u64) -> Result<Vec<Check>, ClassifyError> {
    let a = cat::trivial_fine(f);
    let lu = a.left_unities();
    let unity_ok = lu.is_unique() && lu.particular == Some(cat::vec_of(f, &[1, 0]));
    let mut out = vec![
        check("simple", is_simple(&a, seed)?.is_simple(), ""),
        check("a is the only left unity", unity_ok, format!("{lu:?}")),
    ];
    for fld in [Field::rationals(), Field::prime(2)] {
        let t = cat::trivial_fine(&fld);
        let prod = Arc::new(Algebra::direct_product(&[&t, &t])?);
        let gg = GGrading::trivial(&prod, &FgAbelianGroup::trivial());
        let factors = fineness_inputs(&gg, seed, |_| Some(true))?;
        let verdict = fine_criteria_check(&factors)?;
        let want = fld.characteristic() == 2;
        out.push(check(
            &format!("trivial x trivial over {fld} is {}", if want { "fine" } else { "not fine" }),
            factors.len() == 2 && verdict.fine == want,
            format!("{verdict:?}"),
        ));
    }
    Ok(out)
}

/// The eight maps fixing 1 and sending {u, v} to {±u, ±v}.
pub(crate) fn jordan_candidates(f: &Field) -> Result<Vec<AlgebraMap>, ClassifyError> {
    let a = cat::jordan_j(f);
    let mut out = Vec::new();
    for swap in [false, true] {
        for su in [1, -1] {
            for sv in [1, -1] {
                let (cu, cv) = if swap { ([0, 0, su], [0, sv, 0]) } else { ([0, su, 0], [0, 0, sv]) };
                let cols = [cat::vec_of(f, &[1, 0, 0]), cat::vec_of(f, &cu), cat::vec_of(f, &cv)];
                out.push(AlgebraMap::new(a.clone(), a.clone(), Matrix::from_columns(f, 3, &cols))?);
            }
        }
    }
    Ok(out)
}

fn run_jordan(f: &Field, seed: u64) -> Result<Vec<Check>, ClassifyError> {
    let j1 = cat::jordan_gamma1(f)?;
    let j2 = cat::jordan_gamma2(f)?;
    let k = cat::klein();
    let u = cat::z4z2();
    let pi = GroupHom::from_images(&u, &k, &[k.generator(0), k.generator(1)])?;
    let l1 = build_loop(&j1, &pi)?;
    let l2 = build_loop(&j2, &pi)?;
    let id = AlgebraMap::identity(j1.algebra());
    let swap_k = GroupHom::from_images(&k, &k, &[k.generator(1), k.generator(0)])?;
    let alpha_ok = match check_equivalence(&id, j1.grading(), j2.grading()) {
        Some(eq) => {
            let (_, b1) = j1.universal_hom()?;
            let (_, b2) = j2.universal_hom()?;
            b1.inverse().expect("universal").then(&eq.alpha).then(&b2).same_map(&swap_k)
        }
        None => false,
    };
    let no_iso = matches!(solve_hom_extension(&swap_k, &pi, &pi, true), Ok(None) | Err(GroupError::NoLift));
    let id_lifts = solve_hom_extension(&GroupHom::identity(&k), &pi, &pi, true)?.is_some();
    let mut none_extend = true;
    let mut equivalences = 0;
    for phi in jordan_candidates(f)? {
        if check_equivalence(&phi, j1.grading(), j2.grading()).is_some() {
            equivalences += 1;
            none_extend &= !loop_equivalence(&l1, &l2, &phi)?.extends();
        }
    }
    Ok(vec![
        check("J is simple", is_simple(j1.algebra(), seed)?.is_simple(), ""),
        check("both gradings are universal", j1.is_universal() && j2.is_universal(), ""),
        check("identity induces the swap on (Z/2)^2", alpha_ok, ""),
        check("swap has no isomorphic lift along Z/4 x Z/2 -> (Z/2)^2", no_iso, ""),
        check("identity lifts", id_lifts, ""),
        check(
            "no candidate equivalence extends to the loops",
            none_extend && equivalences == 8,
            format!("{equivalences} equivalences tried"),
        ),
    ])
}

fn run_constructors(f: &Field, _: u64) -> Result<Vec<Check>, ClassifyError> {
    let z3 = FgAbelianGroup::cyclic(3);
    let t1 = cat::sl2_type1(f, &z3, &z3.generator(0))?;
    let t2 = cat::sl2_type1(f, &z3, &z3.neg(&z3.generator(0)))?;
    let z2 = FgAbelianGroup::cyclic(2);
    let t3 = cat::sl2_type1(f, &z2, &z2.generator(0))?;
    let k = cat::klein();
    let p2 = cat::sl2_type2(f, &k, &k.generator(0), &k.generator(1))?;
    let p3 = cat::sl2_type2(f, &k, &k.generator(1), &k.generator(0))?;
    let z4 = FgAbelianGroup::cyclic(4);
    let bad = cat::sl2_type2(f, &z4, &z4.generator(0), &z4.scale(&2.into(), &z4.generator(0)));
    let d = |g: &GGrading| sl2_grading_classifier(g);
    Ok(vec![
        check("type 1 over Z/3: g and -g give isomorphic gradings", d(&t1)?.isomorphic(&d(&t2)?), ""),
        check(
            "type 1 with g of order 2 has two components",
            t3.len() == 2 && matches!(d(&t3)?, Sl2Descriptor::Type1 { .. }),
            "",
        ),
        check("type 2 depends only on T", d(&p2)?.isomorphic(&d(&p3)?), ""),
        check("type 2 needs an elementary 2-subgroup", bad.is_err(), format!("{:?}", bad.err())),
        check("type 1 and type 2 are distinguished", !d(&t3)?.isomorphic(&d(&p2)?), ""),
    ])
}
