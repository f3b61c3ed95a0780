use std::fmt;

use crate::error::{Error, Result};

/// A group element. For table groups this is the row index in the
/// multiplication table; for the integers it is the integer itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub i64);

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Gain groups: finite groups given by a multiplication table, or `(Z, +)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Group {
    Table {
        identity: usize,
        table: Vec<Vec<usize>>,
        inverses: Vec<usize>,
    },
    Integers,
}

impl Group {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(identity: usize, table: Vec<Vec<usize>>) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::domain("group table is empty"));
        }
        if identity >= n {
            return Err(Error::domain(format!("identity {identity} out of range")));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&c| c >= n) {
                return Err(Error::domain("group table is not a closed square table"));
            }
        }
        for a in 0..n {
            if table[identity][a] != a || table[a][identity] != a {
                return Err(Error::domain(format!("{identity} is not an identity")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::domain(format!(
                            "table is not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for (a, row) in table.iter().enumerate() {
            match (0..n).find(|&b| row[b] == identity && table[b][a] == identity) {
                Some(b) => inverses.push(b),
                None => return Err(Error::domain(format!("{a} has no inverse"))),
            }
        }
        Ok(Group::Table {
            identity,
            table,
            inverses,
        })
    }

    /// The cyclic group of order `n` with identity 0.
    pub fn cyclic(n: usize) -> Result<Group> {
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Group::from_table(0, table)
    }

    /// The symmetric group on three letters, elements in lexicographic order of
    /// their one-line notation; index 0 is the identity.
    pub fn symmetric3() -> Group {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        Group::from_table(0, table).expect("S3 table is a group")
    }

    pub fn identity(&self) -> Elem {
        match self {
            Group::Table { identity, .. } => Elem(*identity as i64),
            Group::Integers => Elem(0),
        }
    }

    pub fn order(&self) -> Option<usize> {
        match self {
            Group::Table { table, .. } => Some(table.len()),
            Group::Integers => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == Some(1)
    }

    pub fn contains(&self, a: Elem) -> bool {
        match self {
            Group::Table { table, .. } => a.0 >= 0 && (a.0 as usize) < table.len(),
            Group::Integers => true,
        }
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::domain(format!("{a} is not a group element")))
        }
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self {
            Group::Table { table, .. } => Elem(table[a.0 as usize][b.0 as usize] as i64),
            Group::Integers => Elem(a.0 + b.0),
        }
    }

    pub fn inv(&self, a: Elem) -> Elem {
        match self {
            Group::Table { inverses, .. } => Elem(inverses[a.0 as usize] as i64),
            Group::Integers => Elem(-a.0),
        }
    }

    /// The non-identity element with the smallest index (1 for the integers).
    pub fn least_non_identity(&self) -> Option<Elem> {
        match self {
            Group::Table {
                identity, table, ..
            } => (0..table.len())
                .find(|a| a != identity)
                .map(|a| Elem(a as i64)),
            Group::Integers => Some(Elem(1)),
        }
    }

    /// Every element of a finite group, in index order.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        self.order()
            .map(|n| (0..n).map(|a| Elem(a as i64)).collect())
    }
}
