//! Small finite groups given by multiplication tables.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("unknown group {0:?} (expected Zn, S3, D4 or Q8)")]
    UnknownName(String),
    #[error("invalid group table: {0}")]
    Invalid(String),
}

/// `table[a][b]` is the index of the product `ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupTable {
    /// Checks closure, identity, inverses and associativity.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<GroupTable, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Invalid("empty table".into()));
        }
        if names.len() != n {
            return Err(GroupError::Invalid(format!("{} names for {n} elements", names.len())));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::Invalid(format!("row {a} has length {}", row.len())));
            }
            if let Some(&b) = row.iter().find(|&&b| b >= n) {
                return Err(GroupError::Invalid(format!("entry {b} out of range in row {a}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| GroupError::Invalid("no identity element".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
                return Err(GroupError::Invalid(format!("element {} has no inverse", names[a])));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::Invalid(format!(
                            "not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(GroupTable { names, table, identity })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.identity).unwrap()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn cyclic(n: usize) -> GroupTable {
        assert!(n >= 1);
        let names = (0..n)
            .map(|a| match a {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{a}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable {
            names,
            table,
            identity: 0,
        }
    }

    pub fn symmetric3() -> GroupTable {
        from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]])
    }

    /// Symmetries of a square acting on its vertices.
    pub fn dihedral4() -> GroupTable {
        from_permutations(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
    }

    pub fn quaternion8() -> GroupTable {
        // units 1, i, j, k with signs; index = 2 * unit + sign
        let names: Vec<String> = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        // unit products: (unit, sign flip)
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (u, flip) = unit_mul(a / 2, b / 2);
                        let sign = (a % 2) ^ (b % 2) ^ usize::from(flip);
                        2 * u + sign
                    })
                    .collect()
            })
            .collect();
        GroupTable {
            names,
            table,
            identity: 0,
        }
    }

    /// `Zn` (n >= 1), `S3`, `D4` or `Q8`.
    pub fn named(name: &str) -> Result<GroupTable, GroupError> {
        match name {
            "S3" => Ok(GroupTable::symmetric3()),
            "D4" => Ok(GroupTable::dihedral4()),
            "Q8" => Ok(GroupTable::quaternion8()),
            _ => name
                .strip_prefix('Z')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .map(GroupTable::cyclic)
                .ok_or_else(|| GroupError::UnknownName(name.to_string())),
        }
    }
}

/// Closure of the given permutations, identity first, then breadth-first
/// discovery order; elements are named in cycle notation.
fn from_permutations(gens: &[Vec<usize>]) -> GroupTable {
    let deg = gens[0].len();
    let id: Vec<usize> = (0..deg).collect();
    let mut elems = vec![id.clone()];
    let mut index = BTreeMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<usize> = (0..deg).map(|i| elems[x][g[i]]).collect();
            if !index.contains_key(&y) {
                index.insert(y.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(y);
            }
        }
    }
    let n = elems.len();
    // (a*b)(i) = a(b(i))
    let table = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let c: Vec<usize> = (0..deg).map(|i| elems[a][elems[b][i]]).collect();
                    index[&c]
                })
                .collect()
        })
        .collect();
    GroupTable {
        names: elems.iter().map(|p| cycle_notation(p)).collect(),
        table,
        identity: 0,
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let mut x = p[s];
        while x != s {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        let parts: Vec<String> = cyc.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", parts.join(" ")));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_groups_are_groups() {
        for (name, order, abelian) in [
            ("Z1", 1, true),
            ("Z6", 6, true),
            ("S3", 6, false),
            ("D4", 8, false),
            ("Q8", 8, false),
        ] {
            let g = GroupTable::named(name).unwrap();
            assert_eq!(g.order(), order);
            assert_eq!(g.is_abelian(), abelian);
            let checked = GroupTable::new(g.names.clone(), g.table.clone()).unwrap();
            assert_eq!(checked.identity, 0);
        }
        assert!(GroupTable::named("Z0").is_err());
        assert!(GroupTable::named("A5").is_err());
    }

    #[test]
    fn q8_has_one_involution() {
        let q = GroupTable::quaternion8();
        let inv: Vec<usize> = (0..8).filter(|&a| q.element_order(a) == 2).collect();
        assert_eq!(inv, vec![1]);
        let d = GroupTable::dihedral4();
        assert_eq!((0..8).filter(|&a| d.element_order(a) == 2).count(), 5);
    }

    #[test]
    fn bad_table_rejected() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(GroupTable::new(names.clone(), vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(GroupTable::new(names, vec![vec![0, 1], vec![1, 2]]).is_err());
    }
}
