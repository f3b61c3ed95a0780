//! Dense linear algebra over prime fields.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// `None` unless `p` is prime.
    pub fn new(p: u32) -> Option<Self> {
        is_prime(p).then_some(PrimeField { p })
    }

    pub fn order(self) -> u32 {
        self.p
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn neg(self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(a % self.p != 0, "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    fn pow(self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc = 1u32;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Reduces `rows` in place to reduced row-echelon form, drops zero rows and
    /// returns the pivot columns.
    pub fn rref(self, rows: &mut Vec<Vec<u32>>) -> Vec<usize> {
        let width = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..width {
            let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(r, found);
            let inv = self.inv(rows[r][col]);
            for v in rows[r].iter_mut() {
                *v = self.mul(*v, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let factor = rows[i][col];
                    for j in 0..width {
                        let sub = self.mul(factor, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], sub);
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Rank of a set of vectors.
    pub fn rank(self, vectors: &[Vec<u32>]) -> usize {
        let mut rows = vectors.to_vec();
        self.rref(&mut rows).len()
    }

    /// A basis of `{c : Σ c_i v_i = 0}` for the given vectors `v_i` of equal length.
    pub fn kernel(self, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let k = vectors.len();
        if k == 0 {
            return Vec::new();
        }
        let dim = vectors[0].len();
        // Rows of the matrix whose columns are the vectors.
        let mut rows: Vec<Vec<u32>> = (0..dim)
            .map(|i| vectors.iter().map(|v| v[i]).collect())
            .collect();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut sol = vec![0u32; k];
                sol[f] = 1;
                for (row, &pc) in rows.iter().zip(&pivots) {
                    sol[pc] = self.neg(row[f]);
                }
                sol
            })
            .collect()
    }

    /// Canonical basis of the intersection of the spans of `a` and `b`.
    ///
    /// Solves `Σ x_i a_i = Σ y_j b_j` through the kernel of the juxtaposed
    /// generators `[a | -b]` and returns the reduced echelon form of the images.
    pub fn span_intersection(self, a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let dim = a[0].len();
        let mut gens: Vec<Vec<u32>> = a.to_vec();
        gens.extend(b.iter().map(|v| v.iter().map(|&x| self.neg(x)).collect()));
        let mut images: Vec<Vec<u32>> = self
            .kernel(&gens)
            .into_iter()
            .map(|c| {
                let mut v = vec![0u32; dim];
                for (coef, col) in c.iter().zip(a) {
                    for i in 0..dim {
                        v[i] = self.add(v[i], self.mul(*coef, col[i]));
                    }
                }
                v
            })
            .collect();
        self.rref(&mut images);
        images
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u32| d * d <= p).all(|d| p % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..20).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(PrimeField::new(4).is_none());
    }

    #[test]
    fn inverses_multiply_to_one() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn kernel_vectors_are_relations() {
        let f = PrimeField::new(3).unwrap();
        let vs = vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 0]];
        let ker = f.kernel(&vs);
        assert_eq!(ker.len(), 2);
        for c in ker {
            for i in 0..2 {
                let s = vs
                    .iter()
                    .zip(&c)
                    .fold(0, |acc, (v, &ci)| f.add(acc, f.mul(ci, v[i])));
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn intersection_of_two_planes_in_three_space() {
        let f = PrimeField::new(2).unwrap();
        let a = vec![vec![1, 0, 0], vec![0, 1, 0]];
        let b = vec![vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(f.span_intersection(&a, &b), vec![vec![0, 1, 0]]);
    }
}
