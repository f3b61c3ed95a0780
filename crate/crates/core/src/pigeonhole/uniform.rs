use crate::error::{Error, Result};
use crate::set::Subset;

/// Classes of subsets of `U` in `U_{r,n}` by size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UniformBucket {
    Dependent,
    /// Every size up to `r(U) - λ`: such sets extend exactly by the independent `Z`.
    Small,
    Size(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformRefinement {
    rank_u: usize,
    lambda: usize,
}

impl UniformRefinement {
    pub fn bucket(&self, x: Subset) -> UniformBucket {
        let k = x.len();
        if k > self.rank_u {
            UniformBucket::Dependent
        } else if k + self.lambda <= self.rank_u {
            UniformBucket::Small
        } else {
            UniformBucket::Size(k)
        }
    }
}

pub fn uniform_refinement(
    r: usize,
    n: usize,
    u: Subset,
    lambda: usize,
) -> Result<UniformRefinement> {
    if r > n || !u.is_subset(Subset::full(n)) {
        return Err(Error::domain("invalid uniform matroid or boundary"));
    }
    let rank_u = r.min(u.len());
    let rank_v = r.min(n - u.len());
    let actual = rank_u + rank_v - r;
    if lambda < actual {
        return Err(Error::domain(format!(
            "lambda {lambda} is below the connectivity {actual}"
        )));
    }
    Ok(UniformRefinement { rank_u, lambda })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{check_refines_by_key, count_classes_by_key};
    use crate::matroid::connectivity;
    use crate::zoo::uniform_oracle;

    #[test]
    fn refines_on_every_boundary() {
        for n in 0..=7 {
            for r in 0..=n {
                let m = uniform_oracle(r, n).unwrap();
                for u in Subset::full(n).subsets() {
                    let lambda = connectivity(&m, u).unwrap();
                    let f = uniform_refinement(r, n, u, lambda).unwrap();
                    assert!(check_refines_by_key(&m, u, |x| f.bucket(x))
                        .unwrap()
                        .is_none());
                    assert!(count_classes_by_key(u, |x| f.bucket(x)) <= lambda + 2);
                }
            }
        }
    }

    #[test]
    fn buckets_and_errors() {
        let f = uniform_refinement(2, 4, Subset(0b11), 2).unwrap();
        assert_eq!(f.bucket(Subset(0b01)), f.bucket(Subset(0b10)));
        assert!(uniform_refinement(2, 4, Subset(0b11), 1).is_err());
    }
}
