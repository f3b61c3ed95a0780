use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};
use crate::zoo::gf::PrimeField;

/// A matrix over GF(p); column `i` represents element `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRep {
    field: PrimeField,
    rows: Vec<Vec<u32>>,
    columns: Vec<Vec<u32>>,
}

impl LinearRep {
    /// Entries are reduced mod `p`; rows must have equal length.
    pub fn new(p: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        let field =
            PrimeField::new(p).ok_or_else(|| Error::domain(format!("{p} is not a prime")))?;
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::domain("matrix rows have different lengths"));
        }
        let rows: Vec<Vec<u32>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| v % p).collect())
            .collect();
        let columns = (0..width)
            .map(|c| rows.iter().map(|r| r[c]).collect())
            .collect();
        Ok(LinearRep {
            field,
            rows,
            columns,
        })
    }

    /// Builds from column vectors of equal length.
    pub fn from_columns(p: u32, columns: Vec<Vec<u32>>) -> Result<Self> {
        let height = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != height) {
            return Err(Error::domain("columns have different lengths"));
        }
        let rows = (0..height)
            .map(|r| columns.iter().map(|c| c[r]).collect())
            .collect();
        LinearRep::new(p, rows)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn prime(&self) -> u32 {
        self.field.order()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn column(&self, pos: usize) -> &[u32] {
        &self.columns[pos]
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn columns_of(&self, x: Subset) -> Vec<Vec<u32>> {
        x.iter().map(|p| self.columns[p].clone()).collect()
    }
}

pub struct LinearOracle {
    rep: LinearRep,
    ground: GroundSet,
}

impl LinearOracle {
    pub fn rep(&self) -> &LinearRep {
        &self.rep
    }
}

impl Matroid for LinearOracle {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn is_independent(&self, x: Subset) -> bool {
        self.rep.field.rank(&self.rep.columns_of(x)) == x.len()
    }
}

pub fn linear_oracle(rep: &LinearRep) -> Result<LinearOracle> {
    Ok(LinearOracle {
        ground: GroundSet::one_based(rep.num_columns())?,
        rep: rep.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::same_matroid;
    use crate::zoo::uniform_oracle;

    #[test]
    fn identity_columns_are_free() {
        let rep = LinearRep::new(2, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let m = linear_oracle(&rep).unwrap();
        assert!(m.ground().full().subsets().all(|x| m.is_independent(x)));
    }

    #[test]
    fn parallel_columns_over_gf3() {
        let rep = LinearRep::from_columns(3, vec![vec![1, 0], vec![2, 0]]).unwrap();
        let m = linear_oracle(&rep).unwrap();
        assert!(!m.is_independent(Subset(0b11)));
        assert!(m.is_independent(Subset(0b01)));
    }

    #[test]
    fn binary_triangle_is_u23() {
        let rep = LinearRep::from_columns(2, vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let m = linear_oracle(&rep).unwrap();
        let u = uniform_oracle(2, 3).unwrap();
        assert!(same_matroid(&m, &u));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(LinearRep::new(6, vec![vec![1]]).is_err());
    }
}
