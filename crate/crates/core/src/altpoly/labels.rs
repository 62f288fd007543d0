use std::sync::Arc;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{var_names, MPoly, Monomial};
use crate::rational::Rational;

/// `(x-degree, y-degree)`
pub type Bidegree = (u32, u32);

/// `x_1..x_n, y_1..y_n`
pub fn bivariate_vars(n: usize) -> Arc<[String]> {
    var_names("x", n)
        .iter()
        .chain(var_names("y", n).iter())
        .cloned()
        .collect()
}

/// Bidegree of a bihomogeneous polynomial (of its leading term otherwise).
pub fn bidegree(f: &MPoly) -> Option<Bidegree> {
    let n = f.nvars() / 2;
    f.leading_term().map(|(m, _)| {
        let dx = m.0[..n].iter().sum();
        let dy = m.0[n..].iter().sum();
        (dx, dy)
    })
}

/// `n` distinct exponent pairs `(p, q)`, kept in descending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32)>", into = "Vec<(u32, u32)>")]
pub struct WedgeLabel(Vec<(u32, u32)>);

impl WedgeLabel {
    pub fn new(mut pairs: Vec<(u32, u32)>) -> Result<Self> {
        pairs.sort_by(|a, b| b.cmp(a));
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!(
                "repeated exponent pair in {pairs:?}"
            )));
        }
        Ok(WedgeLabel(pairs))
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn bidegree(&self) -> Bidegree {
        self.0.iter().fold((0, 0), |(a, b), (p, q)| (a + p, b + q))
    }

    /// The monomials `x^p y^q` in two variables `(x, y)`, in label order.
    pub fn monomials(&self) -> Vec<MPoly> {
        let vars: Arc<[String]> = vec!["x".to_string(), "y".to_string()].into();
        self.0
            .iter()
            .map(|&(p, q)| {
                MPoly::monomial(Arc::clone(&vars), Monomial(vec![p, q]), Rational::one())
            })
            .collect()
    }
}

impl TryFrom<Vec<(u32, u32)>> for WedgeLabel {
    type Error = Error;

    fn try_from(v: Vec<(u32, u32)>) -> Result<Self> {
        WedgeLabel::new(v)
    }
}

impl From<WedgeLabel> for Vec<(u32, u32)> {
    fn from(l: WedgeLabel) -> Self {
        l.0
    }
}

/// `det(x_j^{p_t} y_j^{q_t})`, rows indexed by the label, columns by the variable index.
pub fn alternant(label: &WedgeLabel) -> MPoly {
    let n = label.n();
    let vars = bivariate_vars(n);
    let mut out = MPoly::zero(Arc::clone(&vars));
    for s in Permutation::all(n) {
        let mut e = vec![0u32; 2 * n];
        for (t, &(p, q)) in label.pairs().iter().enumerate() {
            let j = s.apply(t);
            e[j] += p;
            e[n + j] += q;
        }
        out.add_term(Monomial(e), &Rational::from_integer(s.sign().into()));
    }
    out
}

/// `σ.f = sgn(σ) f` for all adjacent transpositions acting diagonally.
pub fn is_alternating(f: &MPoly) -> bool {
    let n = f.nvars() / 2;
    (0..n.saturating_sub(1)).all(|k| {
        let s = Permutation::transposition(n, k, k + 1);
        f.permute_blocks(&s, 2) == f.neg()
    })
}

/// Labels whose alternants form a basis of `A` in bidegree `d`.
pub fn a_basis(n: usize, d: Bidegree) -> Vec<WedgeLabel> {
    let pairs: Vec<(u32, u32)> = (0..=d.0)
        .flat_map(|p| (0..=d.1).map(move |q| (p, q)))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(
        pairs: &[(u32, u32)],
        start: usize,
        n: usize,
        left: Bidegree,
        chosen: &mut Vec<(u32, u32)>,
        out: &mut Vec<WedgeLabel>,
    ) {
        if chosen.len() == n {
            if left == (0, 0) {
                out.push(WedgeLabel::new(chosen.clone()).expect("distinct by construction"));
            }
            return;
        }
        for k in start..pairs.len() {
            let (p, q) = pairs[k];
            if p <= left.0 && q <= left.1 {
                chosen.push((p, q));
                go(pairs, k + 1, n, (left.0 - p, left.1 - q), chosen, out);
                chosen.pop();
            }
        }
    }
    go(&pairs, 0, n, d, &mut chosen, &mut out);
    out.sort();
    out
}

/// Elementary symmetric polynomial `e_r(y_1..y_n)` in the bivariate ring.
pub fn elementary_y(n: usize, r: usize) -> MPoly {
    let vars = bivariate_vars(n);
    let mut out = MPoly::zero(Arc::clone(&vars));
    fn subsets(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, acc: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            acc.push(cur.clone());
            return;
        }
        for k in start..n {
            cur.push(k);
            subsets(n, r, k + 1, cur, acc);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    subsets(n, r, 0, &mut Vec::new(), &mut all);
    for s in all {
        let mut e = vec![0u32; 2 * n];
        for k in s {
            e[n + k] = 1;
        }
        out.add_term(Monomial(e), &Rational::one());
    }
    if out.is_zero() && r == 0 {
        return MPoly::one(vars);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn lab(v: &[(u32, u32)]) -> WedgeLabel {
        WedgeLabel::new(v.to_vec()).unwrap()
    }

    fn var(n: usize, k: usize) -> MPoly {
        MPoly::var(bivariate_vars(n), k)
    }

    #[test]
    fn two_variable_alternants() {
        let (x1, x2, y1, y2) = (var(2, 0), var(2, 1), var(2, 2), var(2, 3));
        assert_eq!(alternant(&lab(&[(0, 0), (1, 0)])), x1.sub(&x2));
        assert_eq!(alternant(&lab(&[(0, 0), (0, 1)])), y1.sub(&y2));
        assert_eq!(
            alternant(&lab(&[(1, 0), (0, 1)])),
            x1.mul(&y2).sub(&x2.mul(&y1))
        );
    }

    #[test]
    fn alternants_alternate() {
        for l in a_basis(3, (2, 2)) {
            assert!(is_alternating(&alternant(&l)));
        }
        assert!(!is_alternating(&var(2, 0)));
    }

    #[test]
    fn basis_examples() {
        assert_eq!(a_basis(2, (1, 0)), vec![lab(&[(1, 0), (0, 0)])]);
        assert!(a_basis(2, (0, 0)).is_empty());
        assert_eq!(a_basis(1, (2, 3)).len(), 1);
        assert!(WedgeLabel::new(vec![(1, 0), (1, 0)]).is_err());
    }

    #[test]
    fn elementary() {
        let e1 = elementary_y(2, 1);
        assert_eq!(e1, var(2, 2).add(&var(2, 3)));
        assert_eq!(elementary_y(2, 2), var(2, 2).mul(&var(2, 3)));
        assert_eq!(e1.eval(&[int(0), int(0), int(2), int(5)]), int(7));
    }
}
