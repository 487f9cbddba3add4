use std::sync::Arc;

use serde_json::{json, Value};

use gradalg::abgroup::{Character, GroupHom};
use gradalg::algebra::{centroid, decompose_semisimple, is_simple, Algebra, AlgebraMap};
use gradalg::classify::{self, decompose_graded, factors_reproduce, loop_equivalence, LoopEquivalenceOutcome};
use gradalg::grading::{
    check_g_isomorphism, free_product_group_grading, product_g_grading, product_grading, GGrading, Grading,
};
use gradalg::json::{self as js, GradingSpec, LoopSpec};
use gradalg::linalg::Subspace;
use gradalg::loops::{
    build_loop, graded_centroid, nilpotent_witness, recover_base, split_loop, split_loop_with, verify_loop_universal,
    LoopAlgebra,
};
use gradalg::scalar::Field;

use crate::report::{math, CliError, Report};

pub struct Ctx {
    pub seed: u64,
    pub field: Option<Field>,
}

pub fn read_instance(path: &str) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Schema(format!("{path}: {e}")))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("{path}: {e}")))?;
    js::check_version(&v)?;
    Ok(v)
}

fn grading_spec(v: &Value, ctx: &Ctx) -> Result<GradingSpec, CliError> {
    Ok(js::grading_from_json(v, ctx.field.as_ref(), "$")?)
}

fn ggrading(spec: &GradingSpec) -> Result<GGrading, CliError> {
    match spec.ggrading() {
        Some(r) => r.map_err(math),
        None => Err(CliError::Schema("$: this command needs `group` and `degrees`".into())),
    }
}

/// A bare algebra or an object with an `algebra` key.
fn algebra_of(v: &Value, ctx: &Ctx) -> Result<Arc<Algebra>, CliError> {
    match v.get("algebra") {
        Some(a) => Ok(js::algebra_from_json(a, ctx.field.as_ref(), "$.algebra")?),
        None => Ok(js::algebra_from_json(v, ctx.field.as_ref(), "$")?),
    }
}

fn components_json(cs: &[Subspace]) -> Value {
    Value::Array(cs.iter().map(|c| Value::Array(c.basis().iter().map(|v| js::vector_to_json(v)).collect())).collect())
}

pub fn validate(v: &Value, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let spec = grading_spec(v, ctx)?;
    let g = match spec.grading() {
        Ok(g) => g,
        Err(e) => {
            r.check_with("grading validates", false, json!(e.to_string()));
            return Ok(());
        }
    };
    r.check("grading validates", true);
    r.set("components", json!(g.len()));
    r.set("dims", json!(g.components().iter().map(|c| c.dim()).collect::<Vec<_>>()));
    r.set("group_grading", json!(g.is_group_grading()));
    if let Some(res) = spec.ggrading() {
        match res {
            Ok(gg) => {
                r.check("degrees are compatible with products", true);
                r.set("universal", json!(gg.is_universal()));
            }
            Err(e) => r.check_with("degrees are compatible with products", false, json!(e.to_string())),
        }
    }
    Ok(())
}

/// Universal groups reported on their canonical generators.
fn universal_json(g: &Grading) -> Value {
    let u = g.universal_group();
    let (c, iso) = u.group.canonical_presentation();
    json!({
        "group": js::group_to_json(&c),
        "degrees": u.degrees.iter().map(|d| js::element_to_json(&c, &iso.apply(d))).collect::<Vec<_>>(),
    })
}

pub fn universal_group(v: &Value, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let g = grading_spec(v, ctx)?.grading().map_err(math)?;
    let u = g.universal_group();
    let respected =
        g.product_triples().iter().all(|&(a, b, c)| u.group.add(&u.degrees[a], &u.degrees[b]) == u.degrees[c]);
    r.check("degrees satisfy every product relation", respected);
    r.set("universal_group", universal_json(&g));
    r.set("group_grading", json!(g.is_group_grading()));
    Ok(())
}

pub fn induce(v: &Value, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let g = grading_spec(v, ctx)?.grading().map_err(math)?;
    let gr = g.induced_group_grading();
    r.check("induced grading is a coarsening", g.refinement_map(gr.grading()).is_some());
    r.check("induced grading is a group-grading", gr.grading().is_group_grading());
    let (c, iso) = gr.group().canonical_presentation();
    let gr = gr.regrade(&iso).map_err(math)?;
    r.set("induced", js::ggrading_summary(&gr));
    r.set("group", js::group_to_json(&c));
    Ok(())
}

fn factor_specs(v: &Value, ctx: &Ctx) -> Result<Vec<GradingSpec>, CliError> {
    let fs = v
        .get("factors")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Schema("$: missing `factors` array".into()))?;
    let specs = fs
        .iter()
        .enumerate()
        .map(|(i, f)| js::grading_from_json(f, ctx.field.as_ref(), &format!("$.factors[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    if specs.is_empty() {
        return Err(CliError::Schema("$.factors: empty".into()));
    }
    if specs.iter().any(|s| s.algebra.field() != specs[0].algebra.field()) {
        return Err(CliError::Schema("$.factors: factors over different fields".into()));
    }
    Ok(specs)
}

pub fn product(kind: &str, v: &Value, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let specs = factor_specs(v, ctx)?;
    match kind {
        "grading" | "free" => {
            let gs = specs.iter().map(|s| s.grading().map_err(math)).collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&Grading> = gs.iter().collect();
            let p = product_grading(&refs).map_err(math)?;
            if kind == "grading" {
                r.check("product is a grading", true);
                r.set("product", js::grading_to_json(&p));
                r.set("universal_group", universal_json(&p));
            } else {
                let free = free_product_group_grading(&refs).map_err(math)?;
                let induced = p.induced_group_grading();
                r.check(
                    "free product is the induced group-grading of the product",
                    free.grading() == induced.grading(),
                );
                r.check("free product is graded by its universal group", free.is_universal());
                let (c, iso) = free.group().canonical_presentation();
                let free = free.regrade(&iso).map_err(math)?;
                r.set("group", js::group_to_json(&c));
                r.set("components", js::ggrading_summary(&free));
            }
        }
        "g" => {
            let gs = specs.iter().map(ggrading).collect::<Result<Vec<_>, _>>()?;
            let group = match v.get("group") {
                Some(g) => js::group_from_json(g, "$.group")?,
                None => gs[0].group().clone(),
            };
            let refs: Vec<&GGrading> = gs.iter().collect();
            let p = product_g_grading(&group, &refs).map_err(math)?;
            r.check("product G-grading validates", true);
            r.set("product", js::ggrading_to_json(&p));
        }
        other => return Err(CliError::Schema(format!("unknown product kind `{other}`"))),
    }
    Ok(())
}

fn loop_of(spec: &LoopSpec) -> Result<LoopAlgebra, CliError> {
    let base = ggrading(&spec.base)?;
    let pi = GroupHom::from_images(&spec.domain, base.group(), &spec.images).map_err(math)?;
    build_loop(&base, &pi).map_err(math)
}

fn loop_spec(v: &Value, ctx: &Ctx) -> Result<LoopSpec, CliError> {
    Ok(js::loop_from_json(v, ctx.field.as_ref(), "$")?)
}

fn kernel_json(l: &LoopAlgebra) -> Value {
    let g = l.pi().domain();
    json!(l.kernel_elements().iter().map(|h| js::element_to_json(g, h)).collect::<Vec<_>>())
}

pub fn loop_cmd(action: &str, v: &Value, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    if action == "recover" {
        return loop_recover(v, ctx, r);
    }
    let spec = loop_spec(v, ctx)?;
    let l = loop_of(&spec)?;
    r.set("dim", json!(l.dim()));
    r.set("kernel", kernel_json(&l));
    match action {
        "build" => {
            r.check(
                "dimension is dim A times the kernel order",
                l.dim() == l.base().algebra().dim() * l.kernel_elements().len(),
            );
            let labels: Vec<String> = (0..l.dim()).map(|i| l.algebra().label(i)).collect();
            r.set("labels", json!(labels));
            r.set("loop", js::ggrading_to_json(l.grading()));
        }
        "verify" => {
            let u = verify_loop_universal(&l).map_err(math)?;
            r.check("alpha is an isomorphism onto the universal group", u.alpha_is_iso);
            r.check("induced map to the base universal group is onto", u.pi_u_surjective);
            r.check("the square of group maps commutes", u.square_commutes);
            r.check("kernels correspond", u.kernel_bijection);
            let (c, _) = u.universal.group.canonical_presentation();
            r.set("universal_group", js::group_to_json(&c));
        }
        "split" => {
            let s = match &spec.characters {
                Some(vals) => {
                    let f = l.algebra().field();
                    let chars = vals
                        .iter()
                        .map(|x| Character::from_presentation_values(&spec.domain, f, x).map_err(math))
                        .collect::<Result<Vec<_>, _>>()?;
                    split_loop_with(&l, chars).map_err(math)?
                }
                None => split_loop(&l).map_err(math)?,
            };
            r.check("Phi is an algebra isomorphism", s.phi.is_isomorphism());
            r.check_with("character matrix is regular", !s.determinant.is_zero(), js::scalar_to_json(&s.determinant));
            r.check(
                "Phi carries the loop grading onto the product grading",
                check_g_isomorphism(&s.phi, l.grading(), &s.image_grading),
            );
            r.set("phi", js::matrix_to_json(s.phi.matrix()));
            r.set(
                "characters",
                json!(s
                    .characters
                    .iter()
                    .map(|c| (0..spec.domain.generator_count())
                        .map(|i| js::scalar_to_json(&c.eval(&spec.domain.generator(i))))
                        .collect::<Vec<_>>())
                    .collect::<Vec<_>>()),
            );
            r.set("components", js::ggrading_summary(&s.image_grading));
        }
        "witness" => {
            let w = nilpotent_witness(&l).map_err(math)?;
            let a = l.algebra();
            r.check("c squared is zero", w.element.mul(&w.element).is_zero());
            r.check("cL is a nonzero proper ideal", !w.ideal.is_zero() && !w.ideal.is_full() && a.is_ideal(&w.ideal));
            r.check("cL has zero square", a.product_subspace(&w.ideal, &w.ideal).is_zero());
            let ns = decompose_semisimple(a, ctx.seed);
            r.check_with(
                "loop algebra is not semisimple",
                ns.is_err(),
                json!(ns.err().map(|e| crate::report::error_name(&format!("{e:?}")))),
            );
            r.set("element", js::matrix_to_json(&w.element));
            r.set("ideal", components_json(std::slice::from_ref(&w.ideal)));
        }
        other => return Err(CliError::Schema(format!("unknown loop action `{other}`"))),
    }
    Ok(())
}

/// From a G-grading, or from a loop descriptor whose loop is rebuilt first.
fn loop_recover(v: &Value, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let gg = if v.get("base").is_some() {
        loop_of(&loop_spec(v, ctx)?)?.grading().clone()
    } else {
        ggrading(&grading_spec(v, ctx)?)?
    };
    let rec = recover_base(&gg, ctx.seed).map_err(math)?;
    r.check("centroid is graded", rec.profile.centroid_dim == rec.profile.basis().len());
    r.check("support of the centroid is a subgroup", rec.profile.support_is_subgroup);
    r.check(
        "recovered loop is G-graded-isomorphic to the input",
        rec.iso.is_isomorphism() && check_g_isomorphism(&rec.iso, &gg, rec.loop_algebra.grading()),
    );
    r.set("centroid_dim", json!(rec.profile.centroid_dim));
    let g = gg.group();
    r.set("centroid_support", json!(rec.profile.support.iter().map(|h| js::element_to_json(g, h)).collect::<Vec<_>>()));
    r.set("base", js::ggrading_to_json(&rec.base));
    r.set("pi", js::hom_to_json(&rec.pi));
    Ok(())
}

pub fn decompose(kind: &str, v: &Value, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    match kind {
        "simple" => {
            let a = algebra_of(v, ctx)?;
            let ideals = decompose_semisimple(&a, ctx.seed).map_err(math)?;
            let total = ideals.iter().fold(Subspace::zero(a.field(), a.dim()), |acc, i| acc.sum(i));
            let dims: usize = ideals.iter().map(|i| i.dim()).sum();
            r.check("ideals span the algebra directly", total.is_full() && dims == a.dim());
            let mut all_simple = true;
            for i in &ideals {
                let (sub, _) = a.subalgebra(i).map_err(math)?;
                all_simple &= is_simple(&sub, ctx.seed).map_err(math)?.is_simple();
            }
            r.check("every ideal is simple", all_simple);
            r.set("ideals", components_json(&ideals));
        }
        "graded" => {
            let gg = ggrading(&grading_spec(v, ctx)?)?;
            let parts = decompose_graded(&gg, ctx.seed).map_err(math)?;
            r.check("factors reproduce the grading", factors_reproduce(&gg, &parts));
            let tree: Vec<Value> = parts
                .iter()
                .map(|p| {
                    json!({
                        "ideal": components_json(std::slice::from_ref(&p.ideal)),
                        "constituents": p.constituents,
                        "graded_central": p.profile.is_graded_central(),
                        "centroid_dim": p.profile.centroid_dim,
                        "components": js::ggrading_summary(&p.grading),
                    })
                })
                .collect();
            r.set("factors", Value::Array(tree));
        }
        other => return Err(CliError::Schema(format!("unknown decomposition `{other}`"))),
    }
    Ok(())
}

pub fn centroid_cmd(v: &Value, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let graded = if v.get("base").is_some() {
        Some(loop_of(&loop_spec(v, ctx)?)?.grading().clone())
    } else if v.get("components").is_some() && v.get("group").is_some() {
        Some(ggrading(&grading_spec(v, ctx)?)?)
    } else {
        None
    };
    if let Some(gg) = graded {
        let p = graded_centroid(&gg).map_err(math)?;
        r.check("centroid is the sum of its graded pieces", true);
        let g = gg.group();
        r.set("dim", json!(p.centroid_dim));
        r.set("graded_central", json!(p.is_graded_central()));
        r.set(
            "pieces",
            json!(p
                .pieces
                .iter()
                .map(|(h, ms)| json!({
                    "degree": js::element_to_json(g, h),
                    "basis": ms.iter().map(js::matrix_to_json).collect::<Vec<_>>(),
                }))
                .collect::<Vec<_>>()),
        );
    } else {
        let a = algebra_of(v, ctx)?;
        let c = centroid(&a);
        let ops = a.multiplication_operators();
        r.check("basis commutes with all multiplications", c.iter().all(|m| ops.iter().all(|o| m.mul(o) == o.mul(m))));
        r.set("dim", json!(c.len()));
        r.set("basis", json!(c.iter().map(js::matrix_to_json).collect::<Vec<_>>()));
    }
    Ok(())
}

pub fn equivalence_extend(v: &Value, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let l1v = v.get("loop1").ok_or_else(|| CliError::Schema("$: missing `loop1`".into()))?;
    let s1 = js::loop_from_json(l1v, ctx.field.as_ref(), "$.loop1")?;
    let s2 = match v.get("loop2") {
        Some(x) => js::loop_from_json(x, ctx.field.as_ref(), "$.loop2")?,
        None => s1.clone(),
    };
    let l1 = loop_of(&s1)?;
    let l2 = loop_of(&s2)?;
    let a1 = l1.base().algebra();
    let a2 = l2.base().algebra();
    if a1.dim() != a2.dim() {
        return Err(CliError::Schema("$: the bases have different dimensions".into()));
    }
    let m = v.get("map").ok_or_else(|| CliError::Schema("$: missing `map`".into()))?;
    let m = js::matrix_from_json(a1.field(), a2.dim(), a1.dim(), m, "$.map")?;
    let phi = AlgebraMap::new(a1.clone(), a2.clone(), m).map_err(math)?;
    let out = loop_equivalence(&l1, &l2, &phi).map_err(math)?;
    r.set("extends", json!(out.extends()));
    match out {
        LoopEquivalenceOutcome::Extended(e) => {
            r.check("psi is an equivalence of the loops", e.psi.is_isomorphism());
            r.set("psi", js::matrix_to_json(e.psi.matrix()));
            r.set("alpha", js::hom_to_json(&e.alpha));
        }
        LoopEquivalenceOutcome::NoIsoLift => r.set("reason", json!("no isomorphism lifts the group map")),
        LoopEquivalenceOutcome::NoLift => r.set("reason", json!("no homomorphism lifts the group map")),
    }
    Ok(())
}

pub fn catalog_list(r: &mut Report) {
    let list: Vec<Value> = classify::catalog()
        .iter()
        .map(|e| json!({"key": e.key.to_string(), "name": e.name, "description": e.description, "field": e.default_field().to_string()}))
        .collect();
    r.set("entries", Value::Array(list));
}

pub fn catalog_run(name: &str, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let names: Vec<&'static str> = if name == "all" {
        let mut v: Vec<&str> = classify::catalog().iter().map(|e| e.name).collect();
        v.sort();
        v
    } else {
        match classify::find_entry(name) {
            Some(e) => vec![e.name],
            None => return Err(CliError::Schema(format!("unknown catalog entry `{name}`"))),
        }
    };
    let field = ctx.field.clone();
    let seed = ctx.seed;
    // entries are independent; results are merged in name order
    let outcomes: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = names
            .iter()
            .map(|n| {
                let f = field.clone();
                s.spawn(move || classify::run_entry(n, f.as_ref(), seed))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("catalog entry panicked")).collect()
    });
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    for (n, out) in names.iter().zip(outcomes) {
        match out {
            Ok(rep) => {
                for c in &rep.checks {
                    r.check_with(format!("{}: {}", rep.name, c.name), c.passed, detail(&c.detail));
                }
                entries.push(json!({"name": rep.name, "field": rep.field, "passed": rep.passed()}));
            }
            Err(classify::ClassifyError::UnsupportedField(m)) if names.len() > 1 => {
                skipped.push(json!({"name": n, "reason": m}))
            }
            Err(e) => return Err(math(e)),
        }
    }
    r.set("entries", Value::Array(entries));
    if !skipped.is_empty() {
        r.set("skipped", Value::Array(skipped));
    }
    Ok(())
}

fn detail(s: &str) -> Value {
    if s.is_empty() {
        Value::Null
    } else {
        Value::String(s.to_string())
    }
}
