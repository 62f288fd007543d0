use std::collections::BTreeMap;

use crate::poly::{MPoly, Monomial};
use crate::rational::Rational;

/// Span of polynomials kept with pairwise distinct leading monomials and
/// monic leading coefficients. A polynomial lies in the span iff repeated
/// leading-term cancellation reduces it to zero.
#[derive(Clone, Debug, Default)]
pub struct PolyEchelon {
    rows: BTreeMap<Monomial, MPoly>,
    originals: Vec<MPoly>,
}

impl PolyEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, f: &MPoly) -> MPoly {
        let mut r = f.clone();
        while let Some((m, c)) = r.leading_term() {
            let Some(row) = self.rows.get(m) else {
                break;
            };
            let c: Rational = c.clone();
            r = r.sub(&row.scale(&c));
        }
        r
    }

    pub fn contains(&self, f: &MPoly) -> bool {
        self.reduce(f).is_zero()
    }

    /// Adds `f` if independent; returns whether it was.
    pub fn insert(&mut self, f: &MPoly) -> bool {
        let r = self.reduce(f);
        let Some((m, c)) = r.leading_term() else {
            return false;
        };
        let m = m.clone();
        let r = r.scale(&c.recip());
        self.rows.insert(m, r);
        self.originals.push(f.clone());
        true
    }

    /// The independent inputs, in insertion order.
    pub fn basis(&self) -> &[MPoly] {
        &self.originals
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::var_names;

    #[test]
    fn span_membership() {
        let vars = var_names("x", 2);
        let (a, b) = (MPoly::var(vars.clone(), 0), MPoly::var(vars.clone(), 1));
        let mut e = PolyEchelon::new();
        assert!(e.insert(&a.add(&b)));
        assert!(e.insert(&a.sub(&b)));
        assert!(!e.insert(&a));
        assert!(e.contains(&b));
        assert!(!e.contains(&a.mul(&b)));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.basis().len(), 2);
    }
}
