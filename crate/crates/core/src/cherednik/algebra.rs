use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::upoly::CPoly;

/// Basis element `x^x w y^y` of the PBW basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwKey {
    pub x: Vec<u32>,
    pub w: Permutation,
    pub y: Vec<u32>,
}

impl PbwKey {
    pub fn degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.y.iter().sum::<u32>()
    }
}

/// `σ . x^e`: exponent of `x_{σ(k)}` becomes `e_k`.
pub(crate) fn permute_exps(s: &Permutation, e: &[u32]) -> Vec<u32> {
    let mut out = vec![0; e.len()];
    for (k, &v) in e.iter().enumerate() {
        out[s.apply(k)] = v;
    }
    out
}

/// Element of `H_c` as a combination of PBW keys with coefficients in `Q[c]`.
/// No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HElem {
    n: usize,
    terms: BTreeMap<PbwKey, CPoly>,
}

impl HElem {
    pub fn zero(n: usize) -> Self {
        HElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, key: PbwKey) -> Self {
        let mut e = HElem::zero(n);
        e.add_term(key, &CPoly::one());
        e
    }

    pub fn scalar(n: usize, c: CPoly) -> Self {
        let mut e = HElem::zero(n);
        e.add_term(Self::unit_key(n), &c);
        e
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, CPoly::one())
    }

    /// The parameter `c` as a central element.
    pub fn c(n: usize) -> Self {
        Self::scalar(n, CPoly::var())
    }

    fn unit_key(n: usize) -> PbwKey {
        PbwKey {
            x: vec![0; n],
            w: Permutation::identity(n),
            y: vec![0; n],
        }
    }

    /// `x_i`, 0-based.
    pub fn x(n: usize, i: usize) -> Self {
        let mut k = Self::unit_key(n);
        k.x[i] = 1;
        Self::basis(n, k)
    }

    /// `y_i`, 0-based.
    pub fn y(n: usize, i: usize) -> Self {
        let mut k = Self::unit_key(n);
        k.y[i] = 1;
        Self::basis(n, k)
    }

    pub fn group(w: &Permutation) -> Self {
        let n = w.len();
        let mut k = Self::unit_key(n);
        k.w = w.clone();
        Self::basis(n, k)
    }

    /// Symmetrizer `e = (1/n!) Σ_σ σ`.
    pub fn symmetrizer(n: usize) -> Self {
        let all = Permutation::all(n);
        let inv = CPoly::constant(Rational::from_integer((all.len() as i64).into()).recip());
        let mut e = HElem::zero(n);
        for w in all {
            let mut k = Self::unit_key(n);
            k.w = w;
            e.add_term(k, &inv);
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwKey, &CPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(PbwKey::degree).max()
    }

    pub fn add_term(&mut self, key: PbwKey, c: &CPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn same_n(&self, other: &HElem) {
        assert_eq!(self.n, other.n, "elements of algebras with different n");
    }

    pub fn add(&self, other: &HElem) -> HElem {
        self.same_n(other);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &HElem) -> HElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HElem {
        self.scale(&CPoly::constant(-Rational::one()))
    }

    pub fn scale(&self, s: &CPoly) -> HElem {
        let mut out = HElem::zero(self.n);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &(c * s));
        }
        out
    }

    /// `x^e . self`
    pub fn lmul_x_pow(&self, e: &[u32]) -> HElem {
        let mut out = HElem::zero(self.n);
        for (k, c) in &self.terms {
            let x = k.x.iter().zip(e).map(|(a, b)| a + b).collect();
            out.add_term(
                PbwKey {
                    x,
                    w: k.w.clone(),
                    y: k.y.clone(),
                },
                c,
            );
        }
        out
    }

    /// `σ . self`
    pub fn lmul_w(&self, s: &Permutation) -> HElem {
        let mut out = HElem::zero(self.n);
        for (k, c) in &self.terms {
            out.add_term(
                PbwKey {
                    x: permute_exps(s, &k.x),
                    w: s.compose(&k.w),
                    y: k.y.clone(),
                },
                c,
            );
        }
        out
    }

    /// `y_i . self`, commuting `y_i` past `x^a` factor by factor and then past `w`.
    pub fn lmul_y(&self, i: usize) -> HElem {
        let n = self.n;
        let c_poly = CPoly::var();
        let minus_c = -&c_poly;
        let mut out = HElem::zero(n);
        for (k, coef) in &self.terms {
            let mut y = k.y.clone();
            y[k.w.inverse().apply(i)] += 1;
            out.add_term(
                PbwKey {
                    x: k.x.clone(),
                    w: k.w.clone(),
                    y,
                },
                coef,
            );
            // [y_i, x^a] = Σ_t prefix [y_i, x_j] suffix over the factors x_j of x^a.
            let mut prefix = vec![0u32; n];
            for j in 0..n {
                for _ in 0..k.x[j] {
                    let mut suffix: Vec<u32> =
                        k.x.iter().zip(&prefix).map(|(a, p)| a - p).collect();
                    suffix[j] -= 1;
                    let mut push = |s: &Permutation, scalar: &CPoly| {
                        let moved = permute_exps(s, &suffix);
                        let x = prefix.iter().zip(&moved).map(|(a, b)| a + b).collect();
                        out.add_term(
                            PbwKey {
                                x,
                                w: s.compose(&k.w),
                                y: k.y.clone(),
                            },
                            &(coef * scalar),
                        );
                    };
                    if j != i {
                        push(&Permutation::transposition(n, i, j), &c_poly);
                    } else {
                        push(&Permutation::identity(n), &CPoly::one());
                        for other in (0..n).filter(|&o| o != i) {
                            push(&Permutation::transposition(n, i, other), &minus_c);
                        }
                    }
                    prefix[j] += 1;
                }
            }
        }
        out
    }

    /// `y^e . self`
    pub fn lmul_y_pow(&self, e: &[u32]) -> HElem {
        let mut out = self.clone();
        for (i, &m) in e.iter().enumerate() {
            for _ in 0..m {
                out = out.lmul_y(i);
            }
        }
        out
    }

    pub fn mul(&self, other: &HElem) -> HElem {
        self.same_n(other);
        let mut out = HElem::zero(self.n);
        let mut by_y: BTreeMap<&Vec<u32>, HElem> = BTreeMap::new();
        for (k, c) in &self.terms {
            let yb = by_y.entry(&k.y).or_insert_with(|| other.lmul_y_pow(&k.y));
            let t = yb.lmul_w(&k.w).lmul_x_pow(&k.x).scale(c);
            out = out.add(&t);
        }
        out
    }

    pub fn commutator(&self, other: &HElem) -> HElem {
        self.mul(other).sub(&other.mul(self))
    }

    /// Automorphism `x_i -> y_i`, `y_i -> -x_i`, `w -> w`.
    pub fn fourier(&self) -> HElem {
        let mut out = HElem::zero(self.n);
        for (k, c) in &self.terms {
            let sign = if k.y.iter().sum::<u32>() % 2 == 0 {
                c.clone()
            } else {
                -c
            };
            let moved = HElem::basis(
                self.n,
                PbwKey {
                    x: permute_exps(&k.w, &k.y),
                    w: k.w.clone(),
                    y: vec![0; self.n],
                },
            );
            out = out.add(&moved.lmul_y_pow(&k.x).scale(&sign));
        }
        out
    }

    /// Substitutes a rational value for `c`; used only for speed.
    pub fn specialize(&self, c: &Rational) -> HElem {
        let mut out = HElem::zero(self.n);
        for (k, p) in &self.terms {
            out.add_term(k.clone(), &CPoly::constant(p.eval(c)));
        }
        out
    }

    pub fn to_wire(&self) -> Vec<HTermWire> {
        self.terms
            .iter()
            .map(|(k, c)| HTermWire {
                x: k.x.clone(),
                w: k.w.to_one_based(),
                y: k.y.clone(),
                coef: c.format_in("c"),
            })
            .collect()
    }

    pub fn from_wire(n: usize, terms: &[HTermWire]) -> Result<HElem> {
        let mut out = HElem::zero(n);
        for t in terms {
            if t.x.len() != n || t.y.len() != n || t.w.len() != n {
                return Err(Error::Parse(format!("term of wrong size for n = {n}")));
            }
            let key = PbwKey {
                x: t.x.clone(),
                w: Permutation::from_one_based(&t.w)?,
                y: t.y.clone(),
            };
            out.add_term(key, &CPoly::parse_in(&t.coef, "c")?);
        }
        Ok(out)
    }
}

/// One serialized PBW term; `w` lists 1-based images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HTermWire {
    pub x: Vec<u32>,
    pub w: Vec<usize>,
    pub y: Vec<u32>,
    pub coef: String,
}

impl fmt::Debug for HElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("({c}) x^{:?} {:?} y^{:?}", k.x, k.w, k.y))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, i: usize, j: usize) -> HElem {
        HElem::group(&Permutation::transposition(n, i, j))
    }

    #[test]
    fn defining_relations() {
        for n in 2..=4 {
            let one = HElem::one(n);
            let c = HElem::c(n);
            for i in 0..n {
                let mut expect = one.clone();
                for k in (0..n).filter(|&k| k != i) {
                    expect = expect.sub(&c.mul(&s(n, i, k)));
                }
                assert_eq!(HElem::y(n, i).commutator(&HElem::x(n, i)), expect);
                for j in (0..n).filter(|&j| j != i) {
                    assert_eq!(
                        HElem::y(n, i).commutator(&HElem::x(n, j)),
                        c.mul(&s(n, i, j))
                    );
                    assert!(HElem::y(n, i).commutator(&HElem::y(n, j)).is_zero());
                    assert!(HElem::x(n, i).commutator(&HElem::x(n, j)).is_zero());
                    let sij = s(n, i, j);
                    assert_eq!(sij.mul(&HElem::x(n, i)), HElem::x(n, j).mul(&sij));
                    assert_eq!(sij.mul(&HElem::y(n, i)), HElem::y(n, j).mul(&sij));
                }
            }
        }
    }

    #[test]
    fn unit_and_associativity() {
        let n = 3;
        let a = HElem::y(n, 0).mul(&HElem::x(n, 1)).add(&s(n, 0, 2));
        let b = HElem::x(n, 0).mul(&HElem::y(n, 2)).mul(&HElem::x(n, 0));
        let c = HElem::y(n, 1).mul(&HElem::y(n, 1)).add(&HElem::x(n, 2));
        assert_eq!(a.mul(&HElem::one(n)), a);
        assert_eq!(HElem::one(n).mul(&a), a);
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn fourier_on_generators() {
        let n = 2;
        assert_eq!(HElem::x(n, 0).fourier(), HElem::y(n, 0));
        assert_eq!(HElem::y(n, 0).fourier(), HElem::x(n, 0).neg());
        for g in [HElem::x(n, 1), HElem::y(n, 0), s(n, 0, 1)] {
            assert_eq!(g.fourier().fourier().fourier().fourier(), g);
        }
        let (y, x) = (HElem::y(n, 0), HElem::x(n, 0));
        assert_eq!(y.mul(&x).fourier(), y.fourier().mul(&x.fourier()));
    }

    #[test]
    fn wire_round_trip() {
        let n = 2;
        let a = HElem::y(n, 0)
            .mul(&HElem::x(n, 1))
            .add(&s(n, 0, 1).scale(&CPoly::var()));
        let w = a.to_wire();
        assert_eq!(HElem::from_wire(n, &w).unwrap(), a);
    }
}
