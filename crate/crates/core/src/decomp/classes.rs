use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::Subset;

/// Largest ground set on which boundary classes are computed exhaustively.
pub const SIM_LIMIT: usize = 16;

/// The equivalence classes of subsets of `U` under "same independent extensions
/// into `E - U`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryClasses {
    u: Subset,
    /// Each class is sorted lexicographically; classes are ordered by their
    /// least member.
    classes: Vec<Vec<Subset>>,
}

impl BoundaryClasses {
    pub fn boundary(&self) -> Subset {
        self.u
    }

    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<Subset>] {
        &self.classes
    }

    pub fn representatives(&self) -> Vec<Subset> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn class_of(&self, x: Subset) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&x))
    }
}

/// Independence of `X ∪ Z` for every `Z ⊆ rest`, packed in the order of
/// [`Subset::subsets`].
pub(crate) fn extension_vector(
    indep: &dyn Fn(Subset) -> bool,
    x: Subset,
    rest: Subset,
) -> Vec<u64> {
    let mut bits = vec![0u64; (1usize << rest.len()).div_ceil(64)];
    for (j, z) in rest.subsets().enumerate() {
        if indep(x.union(z)) {
            bits[j / 64] |= 1 << (j % 64);
        }
    }
    bits
}

/// First `Z ⊆ rest` on which `X ∪ Z` and `X' ∪ Z` differ in independence.
pub(crate) fn distinguishing_extension(
    m: &dyn Matroid,
    x: Subset,
    x2: Subset,
    rest: Subset,
) -> Option<Subset> {
    rest.subsets()
        .find(|&z| m.is_independent(x.union(z)) != m.is_independent(x2.union(z)))
}

pub(crate) fn group_by_key<K: Hash + Eq>(u: Subset, key: impl Fn(Subset) -> K) -> Vec<Vec<Subset>> {
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut classes: Vec<Vec<Subset>> = Vec::new();
    for x in u.subsets() {
        let k = key(x);
        match index.get(&k) {
            Some(&i) => classes[i].push(x),
            None => {
                index.insert(k, classes.len());
                classes.push(vec![x]);
            }
        }
    }
    for c in &mut classes {
        c.sort_by(|a, b| a.lex_cmp(*b));
    }
    classes.sort_by(|a, b| a[0].lex_cmp(b[0]));
    classes
}

pub(crate) fn classes_with(
    indep: &dyn Fn(Subset) -> bool,
    full: Subset,
    u: Subset,
) -> BoundaryClasses {
    let rest = full.difference(u);
    BoundaryClasses {
        u,
        classes: group_by_key(u, |x| extension_vector(indep, x, rest)),
    }
}

fn check_boundary(m: &dyn Matroid, u: Subset) -> Result<()> {
    Error::guard("boundary classes", m.size(), SIM_LIMIT)?;
    m.ground().check(u)
}

pub fn sim_classes(m: &dyn Matroid, u: Subset) -> Result<BoundaryClasses> {
    check_boundary(m, u)?;
    Ok(classes_with(&|x| m.is_independent(x), m.ground().full(), u))
}

/// A pair in the same coarse class that some extension `Z` separates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementViolation {
    pub x: Subset,
    pub x_prime: Subset,
    pub z: Subset,
}

/// Whether every pair related by `coarse` is equivalent under [`sim_classes`].
pub fn check_refines(
    m: &dyn Matroid,
    u: Subset,
    coarse: &dyn Fn(Subset, Subset) -> bool,
) -> Result<bool> {
    check_boundary(m, u)?;
    let rest = m.ground().full().difference(u);
    let indep = |x: Subset| m.is_independent(x);
    let vectors: Vec<(Subset, Vec<u64>)> = u
        .subsets()
        .map(|x| (x, extension_vector(&indep, x, rest)))
        .collect();
    Ok(vectors
        .iter()
        .all(|(x, vx)| vectors.iter().all(|(y, vy)| vx == vy || !coarse(*x, *y))))
}

/// Keyed form of [`check_refines`]: subsets with equal keys must be equivalent.
/// Returns the first violation found, scanning subsets in numeric order.
pub fn check_refines_by_key<K: Hash + Eq>(
    m: &dyn Matroid,
    u: Subset,
    key: impl Fn(Subset) -> K,
) -> Result<Option<RefinementViolation>> {
    check_boundary(m, u)?;
    let rest = m.ground().full().difference(u);
    let indep = |x: Subset| m.is_independent(x);
    let mut seen: HashMap<K, (Subset, Vec<u64>)> = HashMap::new();
    for x in u.subsets() {
        let v = extension_vector(&indep, x, rest);
        match seen.get(&key(x)) {
            Some((first, fv)) if *fv != v => {
                let z = distinguishing_extension(m, *first, x, rest).expect("vectors differ");
                return Ok(Some(RefinementViolation {
                    x: *first,
                    x_prime: x,
                    z,
                }));
            }
            Some(_) => {}
            None => {
                seen.insert(key(x), (x, v));
            }
        }
    }
    Ok(None)
}

/// Number of classes of subsets of `U` under equality of `key`.
pub fn count_classes_by_key<K: Hash + Eq>(u: Subset, key: impl Fn(Subset) -> K) -> usize {
    group_by_key(u, key).len()
}
