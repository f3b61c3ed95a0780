use std::fmt;

/// A class-count bound. Bounds that overflow `u128` are still finite but are
/// never the binding side of a comparison at the sizes this crate handles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Finite(u128),
    /// Finite but at least `2^128`.
    Huge,
    /// No bound exists (for example frame matroids over an infinite group).
    Unbounded,
}

impl Bound {
    pub fn admits(self, count: usize) -> bool {
        match self {
            Bound::Finite(b) => count as u128 <= b,
            Bound::Huge | Bound::Unbounded => true,
        }
    }

    fn plus_one(self) -> Bound {
        match self {
            Bound::Finite(b) => b.checked_add(1).map_or(Bound::Huge, Bound::Finite),
            other => other,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(b) => write!(f, "{b}"),
            Bound::Huge => f.write_str(">=2^128"),
            Bound::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// `2^e`, or `Huge` once it leaves `u128`.
fn pow2(e: Bound) -> Bound {
    match e {
        Bound::Finite(e) if e < 128 => Bound::Finite(1 << e),
        Bound::Unbounded => Bound::Unbounded,
        _ => Bound::Huge,
    }
}

fn checked_pow(base: u128, exp: u128) -> Bound {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        match acc.checked_mul(base) {
            Some(v) => acc = v,
            None => return Bound::Huge,
        }
    }
    Bound::Finite(acc)
}

/// Uniform matroids: `λ + 2`.
pub fn uniform_bound(lambda: usize) -> Bound {
    Bound::Finite(lambda as u128 + 2)
}

/// `GF(q)`-represented matroids: `2^((q^λ - 1)/(q - 1)) + 1`, the number of
/// subspaces of a `λ`-dimensional space being at most `2` to the number of its
/// one-dimensional subspaces.
pub fn linear_bound(q: u32, lambda: usize) -> Bound {
    let points = match checked_pow(q as u128, lambda as u128) {
        Bound::Finite(v) => Bound::Finite((v - 1) / (q as u128 - 1)),
        other => other,
    };
    pow2(points).plus_one()
}

/// Fundamental transversal matroids as a function of `λ`: `2^(2^(2^λ)) + 1`.
pub fn ft_lambda_bound(lambda: usize) -> Bound {
    pow2(pow2(pow2(Bound::Finite(lambda as u128)))).plus_one()
}

/// Bound for the accepted-tuple signatures over a cover `S`: `2^(2^(4|S|)) + 1`.
pub fn ft_cover_bound(cover_size: usize) -> Bound {
    pow2(pow2(Bound::Finite(4 * cover_size as u128))).plus_one()
}

/// Boundary vertices of a 3-connected frame matroid: `14λ - 12`, with `λ`
/// taken to be at least 1.
pub fn frame_vertex_bound(lambda: usize) -> usize {
    14 * lambda.max(1) - 12
}

/// Frame signatures over a boundary of `n` vertices and a group of the given
/// order: each boundary vertex picks a block (or none), a tag and a gain, so
/// at most `(2(n + 1)|H|)^n + 1` classes.
pub fn frame_class_bound(boundary: usize, group_order: Option<usize>) -> Bound {
    match group_order {
        None if boundary > 0 => Bound::Unbounded,
        None => Bound::Finite(2),
        Some(h) => {
            let base = 2 * (boundary as u128 + 1) * h as u128;
            checked_pow(base, boundary as u128).plus_one()
        }
    }
}

/// Decomposition-width implied by a class bound `π` monotone in `λ`: every
/// displayed set of a width-`bw` decomposition has `λ ≤ bw - 1`.
pub fn dw_bound(pi: impl Fn(usize) -> Bound, branch_width: usize) -> Bound {
    pi(branch_width.saturating_sub(1))
}

/// Every per-class bound at one value of `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsTable {
    pub lambda: usize,
    pub uniform: Bound,
    pub linear_gf2: Bound,
    pub linear_gf3: Bound,
    pub ft_lambda: Bound,
    /// `2^(2^(4λ)) + 1`, using `|S| ≤ λ`.
    pub ft_cover: Bound,
    pub frame_vertices: usize,
}

impl BoundsTable {
    pub fn at(lambda: usize) -> BoundsTable {
        BoundsTable {
            lambda,
            uniform: uniform_bound(lambda),
            linear_gf2: linear_bound(2, lambda),
            linear_gf3: linear_bound(3, lambda),
            ft_lambda: ft_lambda_bound(lambda),
            ft_cover: ft_cover_bound(lambda),
            frame_vertices: frame_vertex_bound(lambda),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(uniform_bound(2), Bound::Finite(4));
        assert_eq!(linear_bound(2, 1), Bound::Finite(3));
        assert_eq!(linear_bound(2, 2), Bound::Finite(9));
        assert_eq!(linear_bound(3, 2), Bound::Finite(17));
        assert_eq!(linear_bound(2, 0), Bound::Finite(2));
        assert_eq!(ft_lambda_bound(0), Bound::Finite(5));
        assert_eq!(ft_lambda_bound(1), Bound::Finite(17));
        assert_eq!(ft_lambda_bound(3), Bound::Huge);
        assert_eq!(ft_cover_bound(1), Bound::Finite(65537));
        assert_eq!(ft_cover_bound(2), Bound::Huge);
        assert_eq!(frame_vertex_bound(0), 2);
        assert_eq!(frame_vertex_bound(2), 16);
        assert_eq!(frame_class_bound(1, Some(1)), Bound::Finite(5));
        assert_eq!(frame_class_bound(2, None), Bound::Unbounded);
    }

    #[test]
    fn monotone_in_lambda() {
        for l in 0..6 {
            let (a, b) = (BoundsTable::at(l), BoundsTable::at(l + 1));
            for (x, y) in [
                (a.uniform, b.uniform),
                (a.linear_gf2, b.linear_gf2),
                (a.linear_gf3, b.linear_gf3),
                (a.ft_lambda, b.ft_lambda),
            ] {
                if let (Bound::Finite(x), Bound::Finite(y)) = (x, y) {
                    assert!(x <= y);
                }
            }
            assert!(a.frame_vertices <= b.frame_vertices);
        }
        assert!(Bound::Huge.admits(usize::MAX));
        assert!(!Bound::Finite(3).admits(4));
    }
}
