//! Sparse multivariate polynomials with a pluggable coefficient ring.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order, so iteration order (and hence serialization) is
//! canonical. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::upoly::CPoly;

/// Coefficient rings an [`MPoly`] can carry: `Q` itself or `Q[c]`.
pub trait Coeff:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: Rational) -> Self;
    /// Exact quotient, `None` if `rhs` does not divide `self`.
    fn try_div(&self, rhs: &Self) -> Option<Self>;
    fn to_text(&self) -> String;
    fn from_text(s: &str) -> Result<Self>;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
    fn to_text(&self) -> String {
        format_rational(self)
    }
    fn from_text(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

impl Coeff for CPoly {
    fn zero() -> Self {
        CPoly::zero()
    }
    fn one() -> Self {
        CPoly::one()
    }
    fn is_zero(&self) -> bool {
        CPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: Rational) -> Self {
        CPoly::constant(r)
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        self.exact_div(rhs).ok()
    }
    fn to_text(&self) -> String {
        self.format_in("c")
    }
    fn from_text(s: &str) -> Result<Self> {
        CPoly::parse_in(s, "c")
    }
}

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly<C: Coeff = Rational> {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, C>,
}

/// Polynomials with coefficients in `Q[c]`.
pub type PolyC = MPoly<CPoly>;

pub fn var_names(prefix: &str, n: usize) -> Arc<[String]> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(vars: Arc<[String]>) -> Self {
        MPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, c: C) -> Self {
        let n = vars.len();
        Self::monomial(vars, Monomial::one(n), c)
    }

    pub fn one(vars: Arc<[String]>) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn var(vars: Arc<[String]>, k: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[k] = 1;
        Self::monomial(vars, Monomial(e), C::one())
    }

    pub fn monomial(vars: Arc<[String]>, m: Monomial, c: C) -> Self {
        assert_eq!(m.0.len(), vars.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { vars, terms }
    }

    pub fn from_terms(vars: Arc<[String]>, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable sets"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.vars.clone());
        }
        Self::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(m, c)| (m.clone(), c.mul(s))),
        )
    }

    pub fn mul_monomial(&self, m: &Monomial, s: &C) -> Self {
        Self::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(k, c)| (k.mul(m), c.mul(s))),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut out = Self::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / g`, failing with `NotDivisible` on a nonzero remainder.
    ///
    /// If `f = q g` then `LT(f) = LT(q) LT(g)` under any monomial order, so the
    /// first leading term that `LT(g)` fails to divide proves non-divisibility.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        self.check_ring(g);
        let (lm, lc) = g.leading_term().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.vars.clone());
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Err(Error::NotDivisible);
            }
            let qc = c.try_div(lc).ok_or(Error::NotDivisible)?;
            let qm = lm.quotient_of(m);
            rem = rem.sub(&g.mul_monomial(&qm, &qc));
            quot.add_term(qm, &qc);
        }
        Ok(quot)
    }

    pub fn derivative(&self, k: usize) -> Self {
        Self::from_terms(
            self.vars.clone(),
            self.terms.iter().filter(|(m, _)| m.0[k] > 0).map(|(m, c)| {
                let mut e = m.0.clone();
                let mult = e[k];
                e[k] -= 1;
                (
                    Monomial(e),
                    c.mul(&C::from_rational(Rational::from_integer(mult.into()))),
                )
            }),
        )
    }

    /// Substitution `v_k -> v_{w(k)}` applied to the first `w.len()` variables
    /// (and, for `blocks > 1`, repeated on each consecutive block of that size).
    /// This is the left action `(w.f)(v) = f(w^{-1} v)`.
    pub fn permute_blocks(&self, w: &Permutation, blocks: usize) -> Self {
        let n = w.len();
        assert_eq!(n * blocks, self.nvars(), "permutation size");
        Self::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; m.0.len()];
                for b in 0..blocks {
                    for k in 0..n {
                        e[b * n + w.apply(k)] = m.0[b * n + k];
                    }
                }
                (Monomial(e), c.clone())
            }),
        )
    }

    pub fn permute(&self, w: &Permutation) -> Self {
        self.permute_blocks(w, 1)
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Rational]) -> C {
        assert_eq!(point.len(), self.nvars());
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut v = <Rational as One>::one();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    v *= x;
                }
            }
            acc = acc.add(&c.mul(&C::from_rational(v)));
        }
        acc
    }

    /// Same polynomial viewed over a different (equal-length) variable list.
    pub fn rename(&self, vars: Arc<[String]>) -> Self {
        assert_eq!(vars.len(), self.nvars());
        MPoly {
            vars,
            terms: self.terms.clone(),
        }
    }

    /// Coefficientwise map into another ring.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        MPoly::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    /// Wire form: terms in descending graded-lex order.
    pub fn to_wire(&self) -> Vec<TermWire> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| TermWire {
                exps: m.0.clone(),
                coef: c.to_text(),
            })
            .collect()
    }

    pub fn from_wire(vars: Arc<[String]>, terms: &[TermWire]) -> Result<Self> {
        let mut p = Self::zero(vars);
        for t in terms {
            if t.exps.len() != p.nvars() {
                return Err(Error::Parse(format!(
                    "exponent vector of length {} for {} variables",
                    t.exps.len(),
                    p.nvars()
                )));
            }
            p.add_term(Monomial(t.exps.clone()), &C::from_text(&t.coef)?);
        }
        Ok(p)
    }
}

impl MPoly<Rational> {
    pub fn to_c(&self) -> PolyC {
        self.map_coeffs(|r| CPoly::constant(r.clone()))
    }
}

impl PolyC {
    /// Substitute a rational value for `c`.
    pub fn specialize(&self, c: &Rational) -> MPoly<Rational> {
        self.map_coeffs(|p| p.eval(c))
    }
}

/// One serialized term: `{"exps": [..], "coef": ".."}`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TermWire {
    pub exps: Vec<u32>,
    pub coef: String,
}

impl<C: Coeff> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coeff> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> =
                m.0.iter()
                    .zip(self.vars.iter())
                    .filter(|(e, _)| **e > 0)
                    .map(|(e, v)| {
                        if *e == 1 {
                            v.clone()
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn xs(n: usize) -> Arc<[String]> {
        var_names("x", n)
    }

    #[test]
    fn exact_division_examples() {
        let v = xs(2);
        let x1 = MPoly::<Rational>::var(v.clone(), 0);
        let x2 = MPoly::<Rational>::var(v.clone(), 1);
        let d = x1.sub(&x2);
        let f = x1.pow(2).sub(&x2.pow(2));
        assert_eq!(f.exact_div(&d).unwrap(), x1.add(&x2));
        let f3 = x1.pow(3).sub(&x2.pow(3));
        let expect = x1.pow(2).add(&x1.mul(&x2)).add(&x2.pow(2));
        assert_eq!(f3.exact_div(&d).unwrap(), expect);
        let one = MPoly::one(v.clone());
        assert_eq!(f3.exact_div(&one).unwrap(), f3);
        assert_eq!(x1.pow(2).add(&one).exact_div(&d), Err(Error::NotDivisible));
        assert_eq!(f.exact_div(&MPoly::zero(v)), Err(Error::DivisionByZero));
    }

    #[test]
    fn permutation_action_is_left() {
        let v = xs(3);
        let x1 = MPoly::<Rational>::var(v.clone(), 0);
        let w = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let u = Permutation::transposition(3, 0, 1);
        // w.x1 = x_{w(1)} = x2
        assert_eq!(x1.permute(&w), MPoly::var(v.clone(), 1));
        let f = x1.mul(&MPoly::var(v.clone(), 1).pow(2));
        assert_eq!(f.permute(&u).permute(&w), f.permute(&w.compose(&u)));
    }

    #[test]
    fn wire_is_canonical() {
        let v = xs(2);
        let f = MPoly::<Rational>::from_terms(
            v.clone(),
            [
                (Monomial(vec![0, 0]), int(3)),
                (Monomial(vec![1, 1]), int(-1)),
                (Monomial(vec![2, 0]), int(2)),
            ],
        );
        let w = f.to_wire();
        assert_eq!(w[0].exps, vec![2, 0]);
        assert_eq!(w[2].coef, "3");
        assert_eq!(MPoly::from_wire(v, &w).unwrap(), f);
    }
}
