//! Exact linear algebra: an incremental sparse echelon basis and a dense
//! Gauss-Jordan inverse.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type SparseVec<K> = BTreeMap<K, Rational>;

/// `acc -= c * row`, dropping cancelled entries.
pub fn axpy_neg<K: Ord + Clone>(acc: &mut SparseVec<K>, c: &Rational, row: &SparseVec<K>) {
    use std::collections::btree_map::Entry;
    for (k, x) in row {
        let d = c * x;
        match acc.entry(k.clone()) {
            Entry::Vacant(v) => {
                v.insert(-d);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() -= &d;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

/// Reduced row echelon form: rows indexed by their leading (largest) key,
/// each scaled so the leading coefficient is 1, and no pivot key appears in
/// any other row.
#[derive(Clone, Debug, Default)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The remainder of `v` modulo the span; zero iff `v` is in the span.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let mut done: SparseVec<K> = BTreeMap::new();
        while let Some((k, c)) = v.pop_last() {
            match self.rows.get(&k) {
                Some(row) => {
                    // the row's leading entry is 1 and cancels `c` exactly
                    for (rk, x) in row.iter().rev().skip(1) {
                        let d = &c * x;
                        use std::collections::btree_map::Entry;
                        match v.entry(rk.clone()) {
                            Entry::Vacant(e) => {
                                e.insert(-d);
                            }
                            Entry::Occupied(mut o) => {
                                *o.get_mut() -= &d;
                                if o.get().is_zero() {
                                    o.remove();
                                }
                            }
                        }
                    }
                }
                None => {
                    done.insert(k, c);
                }
            }
        }
        done
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce_leading(v).is_none()
    }

    /// Reduces until the leading key is not a pivot; `None` when `v` reduces to zero.
    fn reduce_leading(&self, mut v: SparseVec<K>) -> Option<SparseVec<K>> {
        loop {
            let (k, _) = v.last_key_value()?;
            let Some(row) = self.rows.get(k) else {
                return Some(v);
            };
            let (_, c) = v.pop_last().expect("nonempty");
            for (rk, x) in row.iter().rev().skip(1) {
                let d = &c * x;
                use std::collections::btree_map::Entry;
                match v.entry(rk.clone()) {
                    Entry::Vacant(e) => {
                        e.insert(-d);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() -= &d;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        self.insert_row(v).is_some()
    }

    /// Adds `v` to the span and returns the new row (`v` reduced and
    /// normalized), or `None` when `v` was already in the span.
    pub fn insert_row(&mut self, v: SparseVec<K>) -> Option<&SparseVec<K>> {
        let mut v = self.reduce(v);
        let (k, lead) = v.last_key_value().map(|(k, c)| (k.clone(), c.clone()))?;
        if !lead.is_one() {
            let inv = lead.recip().expect("nonzero lead");
            for x in v.values_mut() {
                *x *= &inv;
            }
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&k).cloned() {
                axpy_neg(row, &c, &v);
            }
        }
        self.rows.insert(k.clone(), v);
        self.rows.get(&k)
    }

    /// Rows ordered by ascending leading key.
    pub fn rows(&self) -> impl Iterator<Item = (&K, &SparseVec<K>)> {
        self.rows.iter()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Rows whose leading key is at most `bound`; under an order where the
    /// keys outside a region sort above those inside it, these rows span the
    /// intersection of the span with that region.
    pub fn rows_up_to<'a>(&'a self, bound: &K) -> impl Iterator<Item = &'a SparseVec<K>> + 'a {
        self.rows.range(..=bound.clone()).map(|(_, r)| r)
    }
}

/// Exact inverse of a square matrix by Gauss-Jordan elimination.
pub fn invert(matrix: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<Rational>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
        a.swap(col, pivot);
        let inv = a[col][col].recip().expect("nonzero pivot");
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let c = row[col].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &(&c * p);
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Rank of a dense matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut e = Echelon::new();
    for row in rows {
        let v: SparseVec<usize> = row
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn sv(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(k, c)| (k, q(c))).collect()
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(sv(&[(0, 1), (1, 1)])));
        assert!(e.insert(sv(&[(1, 1), (2, 1)])));
        assert!(!e.insert(sv(&[(0, 2), (1, 4), (2, 2)])));
        assert!(e.contains(sv(&[(0, 1), (2, -1)])));
        assert!(!e.contains(sv(&[(2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.reduce(sv(&[(0, 1), (2, -1)])).is_empty());
    }

    #[test]
    fn inverse_of_small_matrix() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert_eq!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]), Err(Error::Singular));
        assert_eq!(rank(&[vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
    }
}
