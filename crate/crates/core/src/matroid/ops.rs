use crate::error::{Error, Result};
use crate::matroid::{IndependenceTable, Matroid};
use crate::set::Subset;

/// Size limit for the partition scan behind [`is_n_connected`].
pub const CONNECTIVITY_LIMIT: usize = 20;

fn greedy_basis(m: &dyn Matroid, x: Subset) -> Subset {
    let mut basis = Subset::EMPTY;
    for p in x.iter() {
        let cand = basis.with(p);
        if m.is_independent(cand) {
            basis = cand;
        }
    }
    basis
}

/// Size of a maximal independent subset of `x`, grown greedily in ascending order.
pub fn rank(m: &dyn Matroid, x: Subset) -> Result<usize> {
    m.ground().check(x)?;
    Ok(greedy_basis(m, x).len())
}

pub fn rank_ids(m: &dyn Matroid, ids: &[u32]) -> Result<usize> {
    let x = m.ground().subset_of_ids(ids.iter().copied())?;
    rank(m, x)
}

pub(crate) fn basis_of(m: &dyn Matroid, x: Subset) -> Subset {
    greedy_basis(m, x)
}

pub fn closure(m: &dyn Matroid, x: Subset) -> Result<Subset> {
    m.ground().check(x)?;
    let basis = greedy_basis(m, x);
    let mut cl = x;
    for p in m.ground().full().difference(x).iter() {
        if !m.is_independent(basis.with(p)) {
            cl.insert(p);
        }
    }
    Ok(cl)
}

pub fn is_flat(m: &dyn Matroid, x: Subset) -> Result<bool> {
    Ok(closure(m, x)? == x)
}

/// `r(U) + r(E - U) - r(E)`.
pub fn connectivity(m: &dyn Matroid, u: Subset) -> Result<usize> {
    m.ground().check(u)?;
    let full = m.ground().full();
    Ok(
        greedy_basis(m, u).len() + greedy_basis(m, full.difference(u)).len()
            - greedy_basis(m, full).len(),
    )
}

pub fn connectivity_ids(m: &dyn Matroid, ids: &[u32]) -> Result<usize> {
    let u = m.ground().subset_of_ids(ids.iter().copied())?;
    connectivity(m, u)
}

/// `true` iff no partition `(U, V)` with `|U|, |V| >= k` has `λ(U) < k` for some `k < n`.
pub fn is_n_connected(m: &dyn Matroid, n: usize) -> Result<bool> {
    let size = m.size();
    Error::guard("connectivity scan", size, CONNECTIVITY_LIMIT)?;
    let table = IndependenceTable::build(m)?;
    let full = m.ground().full();
    for u in full.subsets() {
        let (a, b) = (u.len(), size - u.len());
        let smaller = a.min(b);
        if smaller == 0 {
            continue;
        }
        let lambda = table.connectivity(u);
        // A k-separation with k < n exists iff lambda < k <= min side for some such k.
        if lambda < smaller.min(n.saturating_sub(1)) {
            return Ok(false);
        }
    }
    Ok(true)
}
