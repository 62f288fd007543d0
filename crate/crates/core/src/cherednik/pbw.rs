use std::collections::{BTreeMap, HashMap};

use super::algebra::{HElem, PbwKey};
use crate::perm::Permutation;
use crate::upoly::CPoly;

/// Sparse row over `Q[c]`, keyed by column.
type Row = BTreeMap<usize, CPoly>;

/// Incremental row echelon form over `Q(c)` with fraction-free updates.
#[derive(Default)]
struct CEchelon {
    pivots: BTreeMap<usize, Row>,
}

fn normalize(row: &mut Row) {
    let mut g = CPoly::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.degree() == Some(0) {
            break;
        }
    }
    if g.degree().unwrap_or(0) > 0 {
        for v in row.values_mut() {
            *v = v.exact_div(&g).expect("content divides");
        }
    }
    if let Some((_, lead)) = row.iter().next() {
        let s = lead.leading().recip();
        for v in row.values_mut() {
            *v = v.scale(&s);
        }
    }
}

impl CEchelon {
    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Returns whether `row` was independent of the current rows.
    fn insert(&mut self, mut row: Row) -> bool {
        loop {
            let Some((&lead, _)) = row.iter().next() else {
                return false;
            };
            let Some(prow) = self.pivots.get(&lead) else {
                normalize(&mut row);
                self.pivots.insert(lead, row);
                return true;
            };
            let p = &prow[&lead];
            let a = row[&lead].clone();
            let mut next: Row = BTreeMap::new();
            for (&k, v) in &row {
                let t = v * p;
                if !t.is_zero() {
                    next.insert(k, t);
                }
            }
            for (&k, v) in prow {
                let t = &next.get(&k).cloned().unwrap_or_else(CPoly::zero) - &(v * &a);
                if t.is_zero() {
                    next.remove(&k);
                } else {
                    next.insert(k, t);
                }
            }
            normalize(&mut next);
            row = next;
        }
    }
}

/// Words of length `<= d` in `x_0..x_{n-1}, y_0..y_{n-1}` (letters `0..2n`),
/// PBW-ordered words first.
fn words(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut all = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..2 * n {
                let mut v: Vec<usize> = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    let sorted = |w: &Vec<usize>| w.windows(2).all(|p| p[0] <= p[1]);
    all.sort_by_key(|w| !sorted(w));
    all
}

/// Dimension over `Q(c)` of the span of `w . word` for all group elements
/// `w` and words of total degree `<= d` in the `x` and `y` generators.
pub fn pbw_count(n: usize, d: usize) -> usize {
    let mut columns: HashMap<PbwKey, usize> = HashMap::new();
    let mut ech = CEchelon::default();
    for word in words(n, d) {
        let mut base = HElem::one(n);
        for &l in word.iter().rev() {
            base = if l < n {
                let mut e = vec![0; n];
                e[l] = 1;
                base.lmul_x_pow(&e)
            } else {
                base.lmul_y(l - n)
            };
        }
        for w in Permutation::all(n) {
            let elem = base.lmul_w(&w);
            let mut row = Row::new();
            for (k, c) in elem.terms() {
                let next = columns.len();
                let col = *columns.entry(k.clone()).or_insert(next);
                row.insert(col, c.clone());
            }
            ech.insert(row);
        }
    }
    ech.rank()
}

/// `n! * C(2n + d, d)`
pub fn pbw_expected(n: usize, d: usize) -> usize {
    let fact: usize = (1..=n).product();
    let mut binom = 1usize;
    for k in 1..=d {
        binom = binom * (2 * n + k) / k;
    }
    fact * binom
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(pbw_count(2, 0), 2);
        assert_eq!(pbw_count(2, 1), 10);
        assert_eq!(pbw_count(3, 1), 42);
        assert_eq!(pbw_expected(3, 1), 42);
        assert_eq!(pbw_expected(2, 2), 2 * 15);
    }
}
