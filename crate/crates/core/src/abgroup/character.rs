//! Characters G → F^× and their extension from a finite subgroup.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{int_solve, FgAbelianGroup, GroupElement, GroupError, GroupHom, IntMatrix};
use crate::scalar::{modp, Field, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    group: FgAbelianGroup,
    field: Field,
    /// Values on the canonical generators.
    values: Vec<Scalar>,
}

impl Character {
    pub fn new(group: &FgAbelianGroup, field: &Field, values: Vec<Scalar>) -> Result<Character, GroupError> {
        if values.len() != group.rank() {
            return Err(GroupError::Dimension(format!(
                "{} values for {} canonical generators",
                values.len(),
                group.rank()
            )));
        }
        for (i, v) in values.iter().enumerate() {
            if v.is_zero() {
                return Err(GroupError::IllDefined(format!("zero value on generator {i}")));
            }
            let d = group.modulus(i);
            if !d.is_zero() && !v.pow_int(&d).is_one() {
                return Err(GroupError::IllDefined(format!(
                    "value {v} on a generator of order {d} is not a {d}-th root of unity"
                )));
            }
        }
        Ok(Character { group: group.clone(), field: field.clone(), values })
    }

    /// From values on the presentation generators.
    pub fn from_presentation_values(
        group: &FgAbelianGroup,
        field: &Field,
        values: &[Scalar],
    ) -> Result<Character, GroupError> {
        if values.len() != group.generator_count() {
            return Err(GroupError::Dimension(format!(
                "{} values for {} generators",
                values.len(),
                group.generator_count()
            )));
        }
        if values.iter().any(|v| v.is_zero()) {
            return Err(GroupError::IllDefined("zero character value".into()));
        }
        let canon = (0..group.rank())
            .map(|i| {
                let x = group.to_presentation_coords(&group.canonical_generator(i));
                x.iter().zip(values).fold(field.one(), |acc, (e, v)| &acc * &v.pow_int(e))
            })
            .collect();
        let chi = Character::new(group, field, canon)?;
        for (j, v) in values.iter().enumerate() {
            if chi.eval(&group.generator(j)) != *v {
                return Err(GroupError::IllDefined(format!("values violate the relators at generator {j}")));
            }
        }
        Ok(chi)
    }

    pub fn trivial(group: &FgAbelianGroup, field: &Field) -> Character {
        Character { group: group.clone(), field: field.clone(), values: vec![field.one(); group.rank()] }
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn eval(&self, x: &GroupElement) -> Scalar {
        let mut acc = self.field.one();
        for (v, e) in self.values.iter().zip(&x.0) {
            if !e.is_zero() {
                acc = &acc * &v.pow_int(e);
            }
        }
        acc
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(Scalar::is_one)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Character) -> Character {
        Character {
            group: self.group.clone(),
            field: self.field.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        }
    }

    /// Pullback along a hom into this character's group.
    pub fn pullback(&self, h: &GroupHom) -> Character {
        let values = (0..h.domain().rank()).map(|i| self.eval(&h.apply(&h.domain().canonical_generator(i)))).collect();
        Character { group: h.domain().clone(), field: self.field.clone(), values }
    }
}

/// All characters of a finite group, trivial first, in lexicographic order
/// of their exponent vectors against the field's distinguished roots.
pub fn characters_of_finite_group(h: &FgAbelianGroup, field: &Field) -> Result<Vec<Character>, GroupError> {
    if !h.is_finite() {
        return Err(GroupError::InfiniteGroup);
    }
    let roots: Vec<Scalar> = h
        .torsion()
        .iter()
        .map(|d| field.root_of_unity(d.to_u64().expect("small torsion")))
        .collect::<Result<_, _>>()?;
    let exps = h.elements()?;
    Ok(exps
        .into_iter()
        .map(|e| Character {
            group: h.clone(),
            field: field.clone(),
            values: roots.iter().zip(&e.0).map(|(z, a)| z.pow_int(a)).collect(),
        })
        .collect())
}

/// Extends χ on K to G along the embedding K → G. Free generators of G get
/// value 1; torsion generators get the lexicographically least admissible
/// exponents against the distinguished roots of unity.
pub fn extend_character(chi: &Character, embedding: &GroupHom) -> Result<Character, GroupError> {
    extend_character_pinned(chi, embedding, &[])
}

/// As [`extend_character`], with caller-chosen values on some canonical
/// generators of G.
pub fn extend_character_pinned(
    chi: &Character,
    embedding: &GroupHom,
    pins: &[(usize, Scalar)],
) -> Result<Character, GroupError> {
    let field = chi.field();
    let g = embedding.codomain();
    let k = embedding.domain();
    let w = field.roots_of_unity_order();
    let r = g.free_rank();
    let s = g.torsion().len();

    let mut values: Vec<Option<Scalar>> = vec![None; g.rank()];
    for i in 0..r {
        values[i] = Some(field.one());
    }
    for (i, v) in pins {
        if *i >= g.rank() || v.is_zero() {
            return Err(GroupError::IllDefined(format!("bad pinned value on generator {i}")));
        }
        values[*i] = Some(v.clone());
    }

    // torsion generator i: value = root(gᵢ)^cᵢ, gᵢ = gcd(dᵢ, w)
    let gs: Vec<u64> = g.torsion().iter().map(|d| d.gcd(&BigInt::from(w)).to_u64().unwrap()).collect();
    let mut fixed: Vec<Option<u64>> = vec![None; s];
    for (j, &gj) in gs.iter().enumerate() {
        if let Some(v) = &values[r + j] {
            let root = field.root_of_unity(gj)?;
            let c = (0..gj).find(|&c| root.pow(c) == *v).ok_or_else(|| {
                GroupError::IllDefined(format!("pinned value {v} is not an admissible root of unity"))
            })?;
            fixed[j] = Some(c);
        }
    }

    let images: Vec<GroupElement> = (0..k.rank()).map(|j| embedding.apply(&k.canonical_generator(j))).collect();
    // right-hand sides: exponent of χ(k_j) / Π_free value^m
    let mut rhs = Vec::with_capacity(images.len());
    for (j, m) in images.iter().enumerate() {
        let mut target = chi.values()[j].clone();
        for i in 0..r {
            if !m.0[i].is_zero() {
                let v = values[i].as_ref().unwrap();
                target = &target * &v.pow_int(&-&m.0[i]);
            }
        }
        let a = unity_exponent(field, &target).ok_or_else(|| {
            GroupError::IllDefined(format!("character value {target} is not a root of unity in {field}"))
        })?;
        rhs.push(BigInt::from(a));
    }

    let q = images.len();
    let coef = |i: usize, j: usize| -> BigInt { &images[j].0[r + i] * BigInt::from(w / gs[i]) };
    let solvable = |fixed: &[Option<u64>]| -> bool {
        if q == 0 {
            return true;
        }
        let free_idx: Vec<usize> = (0..s).filter(|&i| fixed[i].is_none()).collect();
        let mut rows: Vec<Vec<BigInt>> = free_idx.iter().map(|&i| (0..q).map(|j| coef(i, j)).collect()).collect();
        for j in 0..q {
            let mut row = vec![BigInt::zero(); q];
            row[j] = BigInt::from(w);
            rows.push(row);
        }
        let t: Vec<BigInt> = (0..q)
            .map(|j| {
                let mut x = rhs[j].clone();
                for i in 0..s {
                    if let Some(c) = fixed[i] {
                        x -= coef(i, j) * BigInt::from(c);
                    }
                }
                x
            })
            .collect();
        int_solve(&IntMatrix::from_rows(q, &rows), &t).is_some()
    };

    if !solvable(&fixed) {
        let exponent = g.torsion().iter().fold(BigInt::from(1), |acc, d| acc.lcm(d));
        return Err(ScalarError::NoSuchRoot { n: exponent.to_u64().unwrap_or(0), field: field.to_string() }.into());
    }
    for i in 0..s {
        if fixed[i].is_some() {
            continue;
        }
        let mut chosen = None;
        for c in 0..gs[i] {
            fixed[i] = Some(c);
            if solvable(&fixed) {
                chosen = Some(c);
                break;
            }
        }
        fixed[i] = chosen;
        debug_assert!(chosen.is_some());
    }
    for i in 0..s {
        values[r + i] = Some(field.root_of_unity(gs[i])?.pow(fixed[i].unwrap()));
    }
    let ext = Character::new(g, field, values.into_iter().map(Option::unwrap).collect())?;
    if ext.pullback(embedding) != *chi {
        return Err(GroupError::IllDefined("extension does not restrict to the given character".into()));
    }
    Ok(ext)
}

/// a with v = ζ_w^a for the field's distinguished primitive w-th root ζ_w.
fn unity_exponent(field: &Field, v: &Scalar) -> Option<u64> {
    let w = field.roots_of_unity_order();
    if !v.pow(w).is_one() {
        return None;
    }
    let mut o = w;
    for q in modp::prime_factors(w) {
        while o.is_multiple_of(q) && v.pow(o / q).is_one() {
            o /= q;
        }
    }
    let root = field.root_of_unity(o).ok()?;
    let mut acc = field.one();
    for t in 0..o {
        if acc == *v {
            return Some(t * (w / o));
        }
        acc = &acc * &root;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_over_q() {
        let h = FgAbelianGroup::cyclic(2);
        let q = Field::Rationals;
        let chars = characters_of_finite_group(&h, &q).unwrap();
        assert_eq!(chars.len(), 2);
        assert!(chars[0].is_trivial());
        assert_eq!(chars[1].values(), &[q.from_i64(-1)]);
    }

    #[test]
    fn z3_needs_cube_roots() {
        let h = FgAbelianGroup::cyclic(3);
        assert!(characters_of_finite_group(&h, &Field::Rationals).is_err());
        let k = Field::cyclotomic(3);
        let chars = characters_of_finite_group(&h, &k).unwrap();
        let z = k.zeta();
        let vals: Vec<Scalar> = chars.iter().map(|c| c.values()[0].clone()).collect();
        assert_eq!(vals, vec![k.one(), z.clone(), &z * &z]);
    }

    #[test]
    fn extension_needs_fourth_root() {
        let g = FgAbelianGroup::cyclic(4);
        let sub = g.subgroup(&[g.element_i64(&[2])]);
        let q = Field::Rationals;
        let chi = Character::new(&sub.group, &q, vec![q.from_i64(-1)]).unwrap();
        assert!(matches!(
            extend_character(&chi, &sub.embedding),
            Err(GroupError::Scalar(ScalarError::NoSuchRoot { .. }))
        ));
        let k = Field::cyclotomic(4);
        let chi = Character::new(&sub.group, &k, vec![k.from_i64(-1)]).unwrap();
        let ext = extend_character(&chi, &sub.embedding).unwrap();
        assert_eq!(ext.values(), &[k.zeta()]);
    }
}
