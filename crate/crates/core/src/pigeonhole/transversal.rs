use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::set::Subset;
use crate::zoo::BipartitePresentation;

/// Which side of the boundary `(U, V)` a subset lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    U,
    V,
}

/// A tuple `(S1, Z, S3, S4)` drawn from the corners `B∩P∩S`, `A∩Q∩S`,
/// `A∩P∩S` and `B∩Q∩S` of the cover `S`, where `P` is the side the
/// certified subset lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FtCertificate {
    pub side: Side,
    pub s1: Subset,
    pub z: Subset,
    pub s3: Subset,
    pub s4: Subset,
}

/// Dependent, or the set of accepted certificate tuples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FtSignature {
    Dependent,
    Independent(BTreeSet<FtCertificate>),
}

/// Corners of the cover relative to the side `P`.
struct Corners {
    bp: Subset,
    aq: Subset,
    ap: Subset,
    bq: Subset,
    p: Subset,
}

fn corners(g: &BipartitePresentation, cover: Subset, u: Subset, side: Side) -> Corners {
    let full = g.ground().full();
    let p = match side {
        Side::U => u,
        Side::V => full.difference(u),
    };
    let q = full.difference(p);
    let (a, b) = (g.a_side(), g.b_side());
    Corners {
        bp: b.intersection(p).intersection(cover),
        aq: a.intersection(q).intersection(cover),
        ap: a.intersection(p).intersection(cover),
        bq: b.intersection(q).intersection(cover),
        p,
    }
}

/// A minimum vertex cover of the edges joining `A` and `B` across `(U, E - U)`,
/// obtained from a maximum matching by König's construction.
pub fn ft_boundary_cover(g: &BipartitePresentation, u: Subset) -> Subset {
    let (h, lpos, rpos) = g.subgraph(g.a_side(), g.b_side(), |a, b| {
        u.contains(a) != u.contains(b)
    });
    let m = h.max_matching();
    let (lc, rc) = h.konig_cover(&m);
    Subset::from_positions(
        lc.into_iter()
            .map(|i| lpos[i])
            .chain(rc.into_iter().map(|i| rpos[i])),
    )
}

/// Whether some matching certifying `X` has signature with first, third and
/// fourth entries `S1, S3, S4` and admits `Z` in its second entry.
pub fn ft_certificate_test(
    g: &BipartitePresentation,
    cover: Subset,
    u: Subset,
    x: Subset,
    c: &FtCertificate,
) -> Result<bool> {
    if !g.is_independent(x) {
        return Err(Error::domain(
            "certificates are defined for independent sets only",
        ));
    }
    let k = corners(g, cover, u, c.side);
    if !x.is_subset(k.p) {
        return Err(Error::domain(
            "X is not contained in the certificate's side",
        ));
    }
    if !(c.s1.is_subset(k.bp)
        && c.z.is_subset(k.aq)
        && c.s3.is_subset(k.ap)
        && c.s4.is_subset(k.bq))
    {
        return Ok(false);
    }
    Ok(accepts(g, cover, &k, x, c))
}

fn accepts(
    g: &BipartitePresentation,
    cover: Subset,
    k: &Corners,
    x: Subset,
    c: &FtCertificate,
) -> bool {
    let b = g.b_side();
    if !x.intersection(k.bp).is_subset(c.s1) || !c.s3.is_subset(x) {
        return false;
    }
    let xa = x.intersection(g.a_side());
    let b_p = b.intersection(k.p);
    let b_q = b.difference(k.p);
    let free_p = b_p.difference(cover.union(x));
    let s1_out = c.s1.difference(x);
    let far_q = b_q.difference(cover);
    let left = xa.union(c.z);
    let right = free_p.union(s1_out).union(far_q).union(c.s4);
    let (h, lpos, rpos) = g.subgraph(left, right, |a, bv| {
        if c.s3.contains(a) {
            far_q.contains(bv)
        } else if xa.contains(a) {
            free_p.contains(bv) || s1_out.contains(bv) || c.s4.contains(bv)
        } else {
            free_p.contains(bv)
        }
    });
    let req_left: Vec<usize> = (0..lpos.len()).collect();
    let req_right: Vec<usize> = rpos
        .iter()
        .enumerate()
        .filter(|(_, &p)| s1_out.contains(p) || c.s4.contains(p))
        .map(|(i, _)| i)
        .collect();
    h.has_matching_covering(&req_left, &req_right)
}

/// Every accepted tuple for `X` on the given side.
pub fn ft_signature(
    g: &BipartitePresentation,
    cover: Subset,
    u: Subset,
    side: Side,
    x: Subset,
) -> FtSignature {
    if !g.is_independent(x) {
        return FtSignature::Dependent;
    }
    let k = corners(g, cover, u, side);
    let forced_s1 = x.intersection(k.bp);
    let mut out = BTreeSet::new();
    for s1 in
        k.bp.difference(forced_s1)
            .subsets()
            .map(|s| s.union(forced_s1))
    {
        for z in k.aq.subsets() {
            for s3 in k.ap.intersection(x).subsets() {
                for s4 in k.bq.subsets() {
                    let c = FtCertificate {
                        side,
                        s1,
                        z,
                        s3,
                        s4,
                    };
                    if accepts(g, cover, &k, x, &c) {
                        out.insert(c);
                    }
                }
            }
        }
    }
    FtSignature::Independent(out)
}

/// Compatibility of a tuple for a subset of `U` with one for a subset of `V`:
/// `S1 ∩ T4 = ∅`, `S4 ∩ T1 = ∅`, and each `Z` slot equals the other's `S3`.
pub fn ft_compatible(c: &FtCertificate, d: &FtCertificate) -> Result<bool> {
    let (c, d) = match (c.side, d.side) {
        (Side::U, Side::V) => (c, d),
        (Side::V, Side::U) => (d, c),
        _ => return Err(Error::domain("certificates must come from opposite sides")),
    };
    Ok(c.s1.is_disjoint(d.s4) && c.s4.is_disjoint(d.s1) && c.z == d.s3 && d.z == c.s3)
}

/// Whether some pair of accepted tuples is compatible.
pub fn ft_signatures_compatible(x: &FtSignature, y: &FtSignature) -> bool {
    match (x, y) {
        (FtSignature::Independent(a), FtSignature::Independent(b)) => a
            .iter()
            .any(|c| b.iter().any(|d| ft_compatible(c, d).unwrap_or(false))),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{check_refines_by_key, count_classes_by_key};
    use crate::matroid::{connectivity, Matroid};
    use crate::pigeonhole::bounds::ft_cover_bound;
    use crate::zoo::fundamental_transversal_oracle;

    /// Every matching joining `X ∩ A` injectively into `B - X`, as (a, b) pairs.
    fn certifying_matchings(g: &BipartitePresentation, x: Subset) -> Vec<Vec<(usize, usize)>> {
        fn go(
            g: &BipartitePresentation,
            left: &[usize],
            avail: Subset,
            cur: &mut Vec<(usize, usize)>,
            out: &mut Vec<Vec<(usize, usize)>>,
        ) {
            let Some((&a, rest)) = left.split_first() else {
                out.push(cur.clone());
                return;
            };
            for &b in g.neighbours(a) {
                if avail.contains(b) {
                    cur.push((a, b));
                    go(g, rest, avail.without(b), cur, out);
                    cur.pop();
                }
            }
        }
        let left: Vec<usize> = x.intersection(g.a_side()).iter().collect();
        let mut out = Vec::new();
        go(
            g,
            &left,
            g.b_side().difference(x),
            &mut Vec::new(),
            &mut out,
        );
        out
    }

    /// Accepted tuples computed straight from the four defining clauses.
    fn brute_signature(
        g: &BipartitePresentation,
        cover: Subset,
        u: Subset,
        side: Side,
        x: Subset,
    ) -> FtSignature {
        let ms = certifying_matchings(g, x);
        if ms.is_empty() {
            return FtSignature::Dependent;
        }
        let k = corners(g, cover, u, side);
        let b_p = g.b_side().intersection(k.p);
        let free_p = b_p.difference(cover.union(x));
        let mut out = BTreeSet::new();
        for m in ms {
            let matched_b = Subset::from_positions(m.iter().map(|&(_, b)| b));
            let s1 = k.bp.intersection(x.union(matched_b));
            let s3 = Subset::from_positions(
                m.iter()
                    .filter(|&&(a, b)| k.ap.contains(a) && !k.p.contains(b) && !cover.contains(b))
                    .map(|&(a, _)| a),
            );
            let s4 = Subset::from_positions(
                m.iter()
                    .filter(|&&(a, b)| k.bq.contains(b) && k.p.contains(a))
                    .map(|&(_, b)| b),
            );
            for z in k.aq.subsets() {
                // Z must match into the free part of B ∩ P avoiding M's vertices.
                let zl: Vec<usize> = z.iter().collect();
                let avail = free_p.difference(matched_b);
                let mut ok = false;
                let mut stack = vec![(0usize, avail)];
                while let Some((i, av)) = stack.pop() {
                    if i == zl.len() {
                        ok = true;
                        break;
                    }
                    for &b in g.neighbours(zl[i]) {
                        if av.contains(b) {
                            stack.push((i + 1, av.without(b)));
                        }
                    }
                }
                if ok {
                    out.insert(FtCertificate {
                        side,
                        s1,
                        z,
                        s3,
                        s4,
                    });
                }
            }
        }
        FtSignature::Independent(out)
    }

    /// Small presentations: `A = {1..a}`, `B = {a+1..a+b}`, edges from a bitmask.
    fn presentation(a: u32, b: u32, bits: u64) -> BipartitePresentation {
        let mut edges = Vec::new();
        let mut i = 0;
        for x in 1..=a {
            for y in a + 1..=a + b {
                if bits >> i & 1 == 1 {
                    edges.push((x, y));
                }
                i += 1;
            }
        }
        BipartitePresentation::new((1..=a).collect(), (a + 1..=a + b).collect(), edges).unwrap()
    }

    fn sample() -> Vec<BipartitePresentation> {
        let mut out = Vec::new();
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for (a, b) in [(2, 2), (3, 2), (2, 3), (3, 3), (4, 3)] {
            for _ in 0..6 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                out.push(presentation(a, b, state >> 20));
            }
        }
        out
    }

    #[test]
    fn cover_is_small_and_covers() {
        for g in sample() {
            let m = fundamental_transversal_oracle(&g);
            for u in g.ground().full().subsets() {
                let s = ft_boundary_cover(&g, u);
                assert!(s.len() <= connectivity(&m, u).unwrap());
                for a in g.a_side().iter() {
                    for &b in g.neighbours(a) {
                        if u.contains(a) != u.contains(b) {
                            assert!(s.contains(a) || s.contains(b));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tuple_test_matches_definitions() {
        for g in sample().into_iter().take(18) {
            let full = g.ground().full();
            for u in full.subsets().step_by(3) {
                let cover = ft_boundary_cover(&g, u);
                for side in [Side::U, Side::V] {
                    let p = if side == Side::U {
                        u
                    } else {
                        full.difference(u)
                    };
                    for x in p.subsets() {
                        assert_eq!(
                            ft_signature(&g, cover, u, side, x),
                            brute_signature(&g, cover, u, side, x),
                            "{g:?} U={u:?} X={x:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn compatibility_decides_independence_of_unions() {
        for g in sample() {
            let m = fundamental_transversal_oracle(&g);
            let full = g.ground().full();
            for u in full.subsets() {
                let v = full.difference(u);
                let cover = ft_boundary_cover(&g, u);
                let sx: Vec<_> = u
                    .subsets()
                    .map(|x| (x, ft_signature(&g, cover, u, Side::U, x)))
                    .collect();
                let sy: Vec<_> = v
                    .subsets()
                    .map(|y| (y, ft_signature(&g, cover, u, Side::V, y)))
                    .collect();
                for (x, a) in &sx {
                    for (y, b) in &sy {
                        if *a == FtSignature::Dependent || *b == FtSignature::Dependent {
                            continue;
                        }
                        assert_eq!(
                            m.is_independent(x.union(*y)),
                            ft_signatures_compatible(a, b)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn signatures_refine_and_respect_bound() {
        for g in sample() {
            let m = fundamental_transversal_oracle(&g);
            for u in g.ground().full().subsets() {
                let cover = ft_boundary_cover(&g, u);
                let key = |x| ft_signature(&g, cover, u, Side::U, x);
                assert!(check_refines_by_key(&m, u, key).unwrap().is_none());
                assert!(ft_cover_bound(cover.len()).admits(count_classes_by_key(u, key)));
            }
        }
    }

    #[test]
    fn basic_examples() {
        let g = BipartitePresentation::new(vec![1], vec![2], vec![]).unwrap();
        let u = Subset(0b01);
        let cover = ft_boundary_cover(&g, u);
        assert!(cover.is_empty());
        let empty = FtCertificate {
            side: Side::U,
            s1: Subset::EMPTY,
            z: Subset::EMPTY,
            s3: Subset::EMPTY,
            s4: Subset::EMPTY,
        };
        assert_eq!(
            ft_signature(&g, cover, u, Side::U, Subset::EMPTY),
            FtSignature::Independent(BTreeSet::from([empty]))
        );
        assert!(ft_certificate_test(&g, cover, u, Subset::EMPTY, &empty).unwrap());
        let other = FtCertificate {
            side: Side::V,
            ..empty
        };
        assert!(ft_compatible(&empty, &other).unwrap());
        assert!(ft_compatible(&empty, &empty).is_err());

        let g = BipartitePresentation::new(vec![1], vec![2], vec![(1, 2)]).unwrap();
        let cover = ft_boundary_cover(&g, u);
        assert_eq!(cover.len(), 1);
        // S3 must lie inside X.
        let bad = FtCertificate {
            s3: cover.intersection(g.a_side()),
            ..empty
        };
        assert!(!ft_certificate_test(&g, cover, u, Subset::EMPTY, &bad).unwrap());
        let clash = FtCertificate {
            s1: Subset(0b10),
            ..other
        };
        let clash_u = FtCertificate {
            s4: Subset(0b10),
            ..empty
        };
        assert!(!ft_compatible(&clash_u, &clash).unwrap());
    }
}
