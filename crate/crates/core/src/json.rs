//! JSON instance and report encoding. Scalars are strings; group elements
//! are integer lists in presentation coordinates.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::abgroup::{FgAbelianGroup, GroupElement, GroupHom, IntMatrix};
use crate::algebra::Algebra;
use crate::grading::{GGrading, Grading};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::{Field, FieldSpec, Scalar};

pub const FORMAT_VERSION: u64 = 1;

/// The input does not have the documented shape.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("schema: {path}: {msg}")]
pub struct SchemaError {
    pub path: String,
    pub msg: String,
}

fn err<T>(path: &str, msg: impl Into<String>) -> Result<T, SchemaError> {
    Err(SchemaError { path: path.to_string(), msg: msg.into() })
}

fn sub(path: &str, key: impl std::fmt::Display) -> String {
    format!("{path}.{key}")
}

fn obj<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, SchemaError> {
    v.as_object().map_or_else(|| err(path, "expected an object"), Ok)
}

fn arr<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, SchemaError> {
    v.as_array().map_or_else(|| err(path, "expected an array"), Ok)
}

fn field_of<'a>(m: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, SchemaError> {
    m.get(key).map_or_else(|| err(path, format!("missing `{key}`")), Ok)
}

fn usize_of(v: &Value, path: &str) -> Result<usize, SchemaError> {
    match v.as_u64() {
        Some(n) => Ok(n as usize),
        None => err(path, "expected a nonnegative integer"),
    }
}

fn bigint_of(v: &Value, path: &str) -> Result<BigInt, SchemaError> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(BigInt::from_str(&n.to_string()).expect("integer")),
        Value::String(s) => BigInt::from_str(s.trim()).or_else(|_| err(path, format!("not an integer: `{s}`"))),
        _ => err(path, "expected an integer"),
    }
}

/// Checks `version` when present.
pub fn check_version(v: &Value) -> Result<(), SchemaError> {
    if let Some(ver) = v.get("version") {
        if ver.as_u64() != Some(FORMAT_VERSION) {
            return err("$.version", format!("unsupported version {ver}, expected {FORMAT_VERSION}"));
        }
    }
    Ok(())
}

pub fn field_from_json(v: &Value, path: &str) -> Result<Field, SchemaError> {
    let s = v.as_str().map_or_else(|| err(path, "expected a field string such as \"Q\""), Ok)?;
    let spec = FieldSpec::from_str(s).or_else(|e| err(path, e.to_string()))?;
    Field::new(spec).or_else(|e| err(path, e.to_string()))
}

pub fn field_to_json(f: &Field) -> Value {
    Value::String(f.to_string())
}

fn rational_of(v: &Value, path: &str) -> Result<BigRational, SchemaError> {
    match v {
        Value::String(s) => BigRational::from_str(s.trim()).or_else(|_| err(path, format!("not a rational: `{s}`"))),
        Value::Number(_) => bigint_of(v, path).map(BigRational::from_integer),
        _ => err(path, "expected a rational string"),
    }
}

/// `"a/b"`, an integer, or `{"N": n, "coeffs": [...]}` in ℚ(ζ_N).
pub fn scalar_from_json(f: &Field, v: &Value, path: &str) -> Result<Scalar, SchemaError> {
    let s = match v {
        Value::Object(m) => {
            let n = usize_of(field_of(m, "N", path)?, &sub(path, "N"))?;
            let ok = match f.spec() {
                FieldSpec::Cyclotomic(k) => k as usize == n,
                FieldSpec::Rationals => n <= 2,
                FieldSpec::Prime(_) => false,
            };
            if !ok {
                return err(path, format!("coefficients in Q(zeta_{n}) but the field is {f}"));
            }
            let cs = arr(field_of(m, "coeffs", path)?, &sub(path, "coeffs"))?;
            let qs = cs
                .iter()
                .enumerate()
                .map(|(i, c)| rational_of(c, &format!("{path}.coeffs[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            f.from_coeffs(&qs)
        }
        _ => f.from_rational(&rational_of(v, path)?),
    };
    s.or_else(|e| err(path, e.to_string()))
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rat(q) => Value::String(q.to_string()),
        Scalar::Cyc(c, v) => json!({
            "N": c.order(),
            "coeffs": v.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        }),
        Scalar::Fp(a, _) => json!(a),
    }
}

pub fn vector_from_json(f: &Field, dim: usize, v: &Value, path: &str) -> Result<Vector, SchemaError> {
    let xs = arr(v, path)?;
    if xs.len() != dim {
        return err(path, format!("vector of length {}, expected {dim}", xs.len()));
    }
    xs.iter().enumerate().map(|(i, x)| scalar_from_json(f, x, &format!("{path}[{i}]"))).collect()
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

/// Rows of scalars.
pub fn matrix_from_json(f: &Field, rows: usize, cols: usize, v: &Value, path: &str) -> Result<Matrix, SchemaError> {
    let rs = arr(v, path)?;
    if rs.len() != rows {
        return err(path, format!("{} rows, expected {rows}", rs.len()));
    }
    let rs = rs
        .iter()
        .enumerate()
        .map(|(i, r)| vector_from_json(f, cols, r, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(f, cols, &rs))
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_to_json(m.row(r))).collect())
}

fn int_rows(v: &Value, cols: usize, path: &str) -> Result<Vec<Vec<BigInt>>, SchemaError> {
    arr(v, path)?
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let p = format!("{path}[{i}]");
            let xs = arr(r, &p)?;
            if xs.len() != cols {
                return err(&p, format!("row of length {}, expected {cols}", xs.len()));
            }
            xs.iter().enumerate().map(|(j, x)| bigint_of(x, &format!("{p}[{j}]"))).collect()
        })
        .collect()
}

/// `{"generators": n, "relations": [[...]]}` or `{"free_rank": r, "torsion": [...]}`.
pub fn group_from_json(v: &Value, path: &str) -> Result<FgAbelianGroup, SchemaError> {
    let m = obj(v, path)?;
    if let Some(n) = m.get("generators") {
        let n = usize_of(n, &sub(path, "generators"))?;
        let rows = match m.get("relations") {
            Some(r) => int_rows(r, n, &sub(path, "relations"))?,
            None => Vec::new(),
        };
        return FgAbelianGroup::from_presentation(n, IntMatrix::from_rows(n, &rows))
            .or_else(|e| err(path, e.to_string()));
    }
    let r = usize_of(field_of(m, "free_rank", path)?, &sub(path, "free_rank"))?;
    let t = match m.get("torsion") {
        Some(t) => arr(t, &sub(path, "torsion"))?
            .iter()
            .enumerate()
            .map(|(i, d)| match d.as_u64() {
                Some(d) if d >= 1 => Ok(d),
                _ => err(&format!("{path}.torsion[{i}]"), "expected a positive integer"),
            })
            .collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
    };
    Ok(FgAbelianGroup::from_invariants(r, &t))
}

/// The presentation plus its invariants; elements elsewhere in the same
/// report use this presentation.
pub fn group_to_json(g: &FgAbelianGroup) -> Value {
    let rows: Vec<Vec<Value>> = g.relations().row_vectors().iter().map(|r| r.iter().map(int_value).collect()).collect();
    json!({
        "generators": g.generator_count(),
        "relations": rows,
        "free_rank": g.free_rank(),
        "torsion": g.torsion().iter().map(int_value).collect::<Vec<_>>(),
        "structure": g.to_string(),
    })
}

/// Integers as JSON numbers when they fit, strings otherwise.
fn int_value(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(n) => json!(n),
        Err(_) => Value::String(x.to_string()),
    }
}

pub fn element_from_json(g: &FgAbelianGroup, v: &Value, path: &str) -> Result<GroupElement, SchemaError> {
    let xs = arr(v, path)?;
    if xs.len() != g.generator_count() {
        return err(
            path,
            format!("element with {} coordinates, group has {} generators", xs.len(), g.generator_count()),
        );
    }
    let c = xs.iter().enumerate().map(|(i, x)| bigint_of(x, &format!("{path}[{i}]"))).collect::<Result<Vec<_>, _>>()?;
    Ok(g.from_presentation_coords(&c))
}

pub fn element_to_json(g: &FgAbelianGroup, e: &GroupElement) -> Value {
    Value::Array(g.to_presentation_coords(e).iter().map(int_value).collect())
}

/// `{"domain": group, "codomain": group, "matrix": [[...]]}`; row i of the
/// matrix is the image of generator i of the domain. `codomain` may be
/// omitted when the caller supplies it.
pub struct HomSpec {
    pub domain: FgAbelianGroup,
    pub codomain: FgAbelianGroup,
    pub images: Vec<GroupElement>,
}

impl HomSpec {
    pub fn build(&self) -> Result<GroupHom, crate::abgroup::GroupError> {
        GroupHom::from_images(&self.domain, &self.codomain, &self.images)
    }
}

pub fn hom_from_json(v: &Value, codomain: Option<&FgAbelianGroup>, path: &str) -> Result<HomSpec, SchemaError> {
    let m = obj(v, path)?;
    let domain = group_from_json(field_of(m, "domain", path)?, &sub(path, "domain"))?;
    let codomain = match (m.get("codomain"), codomain) {
        (Some(c), _) => group_from_json(c, &sub(path, "codomain"))?,
        (None, Some(c)) => c.clone(),
        (None, None) => return err(path, "missing `codomain`"),
    };
    let rows = arr(field_of(m, "matrix", path)?, &sub(path, "matrix"))?;
    if rows.len() != domain.generator_count() {
        return err(
            &sub(path, "matrix"),
            format!("{} rows for {} domain generators", rows.len(), domain.generator_count()),
        );
    }
    let images = rows
        .iter()
        .enumerate()
        .map(|(i, r)| element_from_json(&codomain, r, &format!("{path}.matrix[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HomSpec { domain, codomain, images })
}

pub fn hom_to_json(h: &GroupHom) -> Value {
    json!({
        "domain": group_to_json(h.domain()),
        "codomain": group_to_json(h.codomain()),
        "matrix": h.presentation_images().iter().map(|e| element_to_json(h.codomain(), e)).collect::<Vec<_>>(),
    })
}

/// `{"field", "dim", "table", "labels"?}`; `table` lists the products
/// e_i e_j in the order (0,0), (0,1), …, each as `[[k, coeff], ...]`. A
/// nested `dim × dim` table is accepted too. `field` overrides the file's field.
pub fn algebra_from_json(v: &Value, field: Option<&Field>, path: &str) -> Result<Arc<Algebra>, SchemaError> {
    let m = obj(v, path)?;
    let f = match field {
        Some(f) => f.clone(),
        None => field_from_json(field_of(m, "field", path)?, &sub(path, "field"))?,
    };
    let dim = usize_of(field_of(m, "dim", path)?, &sub(path, "dim"))?;
    if dim == 0 {
        return err(&sub(path, "dim"), "dimension must be positive");
    }
    let tpath = sub(path, "table");
    let t = arr(field_of(m, "table", path)?, &tpath)?;
    let flat: Vec<(String, &Value)> = if t.len() == dim * dim {
        t.iter().enumerate().map(|(i, e)| (format!("{tpath}[{i}]"), e)).collect()
    } else if t.len() == dim
        && t.iter().all(|r| {
            r.as_array().is_some_and(|r| {
                r.len() == dim
                    && r.iter().all(|e| e.is_array())
                    && r.iter().all(|e| e.as_array().unwrap().iter().all(|p| p.is_array()))
            })
        })
    {
        t.iter()
            .enumerate()
            .flat_map(|(i, r)| {
                let tp = tpath.clone();
                r.as_array().unwrap().iter().enumerate().map(move |(j, e)| (format!("{tp}[{i}][{j}]"), e))
            })
            .collect()
    } else {
        return err(&tpath, format!("expected {} products (or a {dim} x {dim} table), found {}", dim * dim, t.len()));
    };
    let mut table = Vec::with_capacity(dim * dim);
    for (p, e) in flat {
        let mut entry = Vec::new();
        for (n, term) in arr(e, &p)?.iter().enumerate() {
            let tp = format!("{p}[{n}]");
            let pair = arr(term, &tp)?;
            if pair.len() != 2 {
                return err(&tp, "expected [k, coeff]");
            }
            let k = usize_of(&pair[0], &tp)?;
            if k >= dim {
                return err(&tp, format!("basis index {k} out of range"));
            }
            entry.push((k, scalar_from_json(&f, &pair[1], &tp)?));
        }
        table.push(entry);
    }
    let mut a = Algebra::from_table(&f, dim, table).or_else(|e| err(path, e.to_string()))?;
    if let Some(l) = m.get("labels") {
        let ls = arr(l, &sub(path, "labels"))?;
        if ls.len() != dim {
            return err(&sub(path, "labels"), format!("{} labels for dimension {dim}", ls.len()));
        }
        let names: Vec<&str> = ls
            .iter()
            .map(|x| x.as_str().map_or_else(|| err(&sub(path, "labels"), "labels must be strings"), Ok))
            .collect::<Result<_, _>>()?;
        a = a.with_labels(&names);
    }
    Ok(Arc::new(a))
}

pub fn algebra_to_json(a: &Algebra) -> Value {
    let table: Vec<Value> = a
        .table()
        .iter()
        .map(|e| Value::Array(e.iter().map(|(k, c)| json!([k, scalar_to_json(c)])).collect()))
        .collect();
    let mut m = Map::new();
    m.insert("field".into(), field_to_json(a.field()));
    m.insert("dim".into(), json!(a.dim()));
    m.insert("table".into(), Value::Array(table));
    if let Some(l) = a.labels() {
        m.insert("labels".into(), json!(l));
    }
    Value::Object(m)
}

/// A parsed grading instance; validation is left to the caller.
#[derive(Debug, Clone)]
pub struct GradingSpec {
    pub algebra: Arc<Algebra>,
    pub components: Vec<Vec<Vector>>,
    pub group: Option<(FgAbelianGroup, Vec<GroupElement>)>,
}

impl GradingSpec {
    pub fn grading(&self) -> Result<Grading, crate::grading::GradingError> {
        crate::grading::validate_grading(&self.algebra, &self.components)
    }

    /// Requires `group` and `degrees`.
    pub fn ggrading(&self) -> Option<Result<GGrading, crate::grading::GradingError>> {
        let (g, degs) = self.group.as_ref()?;
        let f = self.algebra.field();
        let d = self.algebra.dim();
        let pieces = self
            .components
            .iter()
            .zip(degs)
            .map(|(c, g)| (g.clone(), Subspace::span(f, d, c.iter().cloned())))
            .collect();
        Some(GGrading::new(self.algebra.clone(), g.clone(), pieces))
    }
}

/// `{"algebra", "components"}` plus optional `{"group", "degrees"}`.
pub fn grading_from_json(v: &Value, field: Option<&Field>, path: &str) -> Result<GradingSpec, SchemaError> {
    let m = obj(v, path)?;
    let algebra = algebra_from_json(field_of(m, "algebra", path)?, field, &sub(path, "algebra"))?;
    let f = algebra.field().clone();
    let d = algebra.dim();
    let cpath = sub(path, "components");
    let components = arr(field_of(m, "components", path)?, &cpath)?
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let p = format!("{cpath}[{i}]");
            arr(c, &p)?
                .iter()
                .enumerate()
                .map(|(j, v)| vector_from_json(&f, d, v, &format!("{p}[{j}]")))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let group = match (m.get("group"), m.get("degrees")) {
        (None, None) => None,
        (Some(g), Some(ds)) => {
            let g = group_from_json(g, &sub(path, "group"))?;
            let dp = sub(path, "degrees");
            let ds = arr(ds, &dp)?;
            if ds.len() != components.len() {
                return err(&dp, format!("{} degrees for {} components", ds.len(), components.len()));
            }
            let degs = ds
                .iter()
                .enumerate()
                .map(|(i, x)| element_from_json(&g, x, &format!("{dp}[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            Some((g, degs))
        }
        _ => return err(path, "`group` and `degrees` go together"),
    };
    Ok(GradingSpec { algebra, components, group })
}

fn components_to_json(cs: &[Subspace]) -> Value {
    Value::Array(cs.iter().map(|c| Value::Array(c.basis().iter().map(|v| vector_to_json(v)).collect())).collect())
}

pub fn grading_to_json(g: &Grading) -> Value {
    json!({
        "algebra": algebra_to_json(g.algebra()),
        "components": components_to_json(g.components()),
    })
}

pub fn ggrading_to_json(gg: &GGrading) -> Value {
    let group = gg.group();
    json!({
        "algebra": algebra_to_json(gg.algebra()),
        "components": components_to_json(gg.components()),
        "group": group_to_json(group),
        "degrees": gg.degrees().iter().map(|d| element_to_json(group, d)).collect::<Vec<_>>(),
    })
}

/// Components and degrees only, for reports that already carry the algebra.
pub fn ggrading_summary(gg: &GGrading) -> Value {
    let group = gg.group();
    Value::Array(
        gg.components()
            .iter()
            .zip(gg.degrees())
            .map(|(c, d)| {
                json!({
                    "degree": element_to_json(group, d),
                    "basis": c.basis().iter().map(|v| vector_to_json(v)).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

/// `{"base": ggrading, "pi": hom}`, with `pi` ending in the base's group,
/// plus optional `characters`: values on the generators of `pi`'s domain.
#[derive(Debug, Clone)]
pub struct LoopSpec {
    pub base: GradingSpec,
    pub domain: FgAbelianGroup,
    pub images: Vec<GroupElement>,
    pub characters: Option<Vec<Vec<Scalar>>>,
}

pub fn loop_from_json(v: &Value, field: Option<&Field>, path: &str) -> Result<LoopSpec, SchemaError> {
    let m = obj(v, path)?;
    let base = grading_from_json(field_of(m, "base", path)?, field, &sub(path, "base"))?;
    let Some((bg, _)) = &base.group else {
        return err(&sub(path, "base"), "the base needs `group` and `degrees`");
    };
    let pi = hom_from_json(field_of(m, "pi", path)?, Some(bg), &sub(path, "pi"))?;
    if pi.codomain != *bg {
        return err(&sub(path, "pi"), "codomain differs from the base group");
    }
    let f = base.algebra.field().clone();
    let characters = match m.get("characters") {
        None => None,
        Some(c) => {
            let cp = sub(path, "characters");
            let n = pi.domain.generator_count();
            Some(
                arr(c, &cp)?
                    .iter()
                    .enumerate()
                    .map(|(i, x)| vector_from_json(&f, n, x, &format!("{cp}[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?,
            )
        }
    };
    Ok(LoopSpec { base, domain: pi.domain, images: pi.images, characters })
}
