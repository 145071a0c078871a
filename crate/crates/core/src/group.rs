//! Finite groups as multiplication tables, and finitely generated abelian
//! groups given by a moduli vector.

use crate::error::BuildError;
use std::fmt;

/// A finite group presented by its multiplication table.
///
/// Elements are `0..n`; `table[a][b]` is the product. Associativity,
/// a two-sided identity and inverses are verified by [`GroupTable::new`],
/// which reports the first failing triple otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<GroupTable, BuildError> {
        let n = table.len();
        if n == 0 {
            return Err(BuildError::NotAGroup("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(BuildError::NotAGroup(format!("row {a} has length {}", row.len())));
            }
            for (b, &ab) in row.iter().enumerate() {
                if ab >= n {
                    return Err(BuildError::NotAGroup(format!(
                        "product of {a} and {b} is {ab}, outside 0..{n}"
                    )));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| BuildError::NotAGroup("no two-sided identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(BuildError::NotAGroup(format!(
                            "associativity fails at triple ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| BuildError::NotAGroup(format!("element {a} has no inverse")))?;
        }
        Ok(GroupTable { order: n, table, identity, inverse })
    }

    /// Cyclic group of the given order.
    pub fn cyclic(n: usize) -> GroupTable {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::new(table).expect("cyclic table is a group")
    }

    /// The symmetric group S3 (used as a nonabelian fixture).
    pub fn symmetric3() -> GroupTable {
        // elements: permutations of {0,1,2} in lex order of their one-line form
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
            // (p ∘ q)(x) = p(q(x))
            [p[q[0]], p[q[1]], p[q[2]]]
        };
        let index = |p: &[usize; 3]| perms.iter().position(|x| x == p).unwrap();
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index(&compose(a, b))).collect())
            .collect();
        GroupTable::new(table).expect("S3 table is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

/// Element of Z_{n_1} x ... x Z_{n_r}, written additively as an integer
/// tuple. Tuples are always stored reduced (`0 <= x_k < n_k` when `n_k > 0`,
/// arbitrary integer when `n_k = 0`).
pub type GroupElem = Vec<i64>;

/// Finitely generated abelian group given by moduli `(n_1, ..., n_r)`,
/// with `n_k = 0` meaning an infinite cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    moduli: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(moduli: Vec<u64>) -> AbelianGroup {
        AbelianGroup { moduli }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_finite(&self) -> bool {
        self.moduli.iter().all(|&n| n > 0)
    }

    pub fn order(&self) -> Option<usize> {
        if self.is_finite() {
            Some(self.moduli.iter().map(|&n| n as usize).product::<usize>().max(1))
        } else {
            None
        }
    }

    pub fn reduce(&self, g: &[i64]) -> GroupElem {
        assert_eq!(g.len(), self.moduli.len(), "tuple length mismatch");
        g.iter()
            .zip(&self.moduli)
            .map(|(&x, &n)| if n == 0 { x } else { x.rem_euclid(n as i64) })
            .collect()
    }

    pub fn zero(&self) -> GroupElem {
        vec![0; self.moduli.len()]
    }

    pub fn generator(&self, k: usize) -> GroupElem {
        let mut g = self.zero();
        g[k] = 1;
        self.reduce(&g)
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> GroupElem {
        let raw: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&raw)
    }

    pub fn neg(&self, a: &[i64]) -> GroupElem {
        let raw: Vec<i64> = a.iter().map(|x| -x).collect();
        self.reduce(&raw)
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    /// All elements with infinite-factor coordinates in `[-bound, bound]`
    /// (finite factors run over their whole range). Lexicographic order.
    pub fn elements_within(&self, bound: i64) -> Vec<GroupElem> {
        let ranges: Vec<Vec<i64>> = self
            .moduli
            .iter()
            .map(|&n| {
                if n == 0 {
                    (-bound..=bound).collect()
                } else {
                    (0..n as i64).collect()
                }
            })
            .collect();
        let mut out = vec![Vec::new()];
        for range in &ranges {
            let mut next = Vec::with_capacity(out.len() * range.len());
            for prefix in &out {
                for &x in range {
                    let mut p = prefix.clone();
                    p.push(x);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    /// All elements of a finite group, in lexicographic order.
    pub fn all_elements(&self) -> Option<Vec<GroupElem>> {
        if !self.is_finite() {
            return None;
        }
        Some(self.elements_within(0))
    }

    /// Multiplication table of a finite abelian group, for conversion to the
    /// structure-constant backend. Returns the table plus the element list.
    pub fn to_table(&self) -> Option<(GroupTable, Vec<GroupElem>)> {
        let elems = self.all_elements()?;
        let index = |g: &GroupElem| elems.iter().position(|x| x == g).unwrap();
        let table: Vec<Vec<usize>> = elems
            .iter()
            .map(|a| elems.iter().map(|b| index(&self.add(a, b))).collect())
            .collect();
        Some((GroupTable::new(table).expect("abelian table is a group"), elems))
    }
}

pub fn format_elem(g: &[i64]) -> String {
    format!("({})", g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .moduli
            .iter()
            .map(|&n| if n == 0 { "Z".to_string() } else { format!("Z/{n}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_check_out() {
        let g = GroupTable::cyclic(4);
        assert_eq!(g.order(), 4);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inverse(1), 3);
        assert_eq!(g.mul(2, 3), 1);
    }

    #[test]
    fn bad_tables_name_the_failure() {
        // last entry breaks associativity of Z/3
        let mut t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        t[2][2] = 2;
        let err = GroupTable::new(t).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("triple") || msg.contains("inverse"), "unexpected: {msg}");
    }

    #[test]
    fn s3_is_a_group_of_order_6() {
        let g = GroupTable::symmetric3();
        assert_eq!(g.order(), 6);
        // S3 is nonabelian: find a pair with ab != ba
        let noncommuting = (0..6).any(|a| (0..6).any(|b| g.mul(a, b) != g.mul(b, a)));
        assert!(noncommuting);
    }

    #[test]
    fn abelian_reduction_and_enumeration() {
        let g = AbelianGroup::new(vec![2, 0]);
        assert_eq!(g.reduce(&[3, -1]), vec![1, -1]);
        assert_eq!(g.add(&[1, 2], &[1, -5]), vec![0, -3]);
        let box1 = g.elements_within(1);
        assert_eq!(box1.len(), 2 * 3);
        assert!(!g.is_finite());

        let h = AbelianGroup::new(vec![2, 3]);
        assert_eq!(h.order(), Some(6));
        let (table, elems) = h.to_table().unwrap();
        assert_eq!(table.order(), 6);
        assert_eq!(elems.len(), 6);
    }

    #[test]
    fn trivial_group_is_modulus_one() {
        let g = AbelianGroup::new(vec![1]);
        assert_eq!(g.order(), Some(1));
        assert_eq!(g.generator(0), vec![0]);
        assert!(g.is_zero(&g.generator(0)));
    }
}
