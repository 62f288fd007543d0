use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::quadruple::Quadruple;
use crate::error::{Error, Result};
use crate::matrix::{RatMatrix, RatVector};
use crate::poly::MPoly;
use crate::rational::Rational;

/// `f(X, Y)` under the lift `x^p y^q -> X^p Y^q`; `f` has variables `(x, y)`.
pub fn eval_lift(f: &MPoly, x: &RatMatrix, y: &RatMatrix) -> Result<RatMatrix> {
    if f.nvars() != 2 {
        return Err(Error::InvalidInput(format!(
            "expected a polynomial in two variables, got {}",
            f.nvars()
        )));
    }
    let n = x.require_square()?;
    let mut out = RatMatrix::zeros(n, n);
    for (m, c) in f.terms() {
        let term = x.pow(m.0[0]).mul(&y.pow(m.0[1]));
        out = out.add(&term.scale(c));
    }
    Ok(out)
}

fn check_len(fs: &[MPoly], q: &Quadruple) -> Result<()> {
    q.validate()?;
    if fs.len() != q.n {
        return Err(Error::DimensionMismatch(format!(
            "need {} polynomials, got {}",
            q.n,
            fs.len()
        )));
    }
    Ok(())
}

/// `det[f_1(X,Y) i | ... | f_n(X,Y) i]`
pub fn psi(fs: &[MPoly], q: &Quadruple) -> Result<Rational> {
    check_len(fs, q)?;
    let cols = fs
        .iter()
        .map(|f| Ok(eval_lift(f, &q.x, &q.y)?.mul_vec(&q.i)))
        .collect::<Result<Vec<RatVector>>>()?;
    if cols.is_empty() {
        return Ok(num_traits::One::one());
    }
    RatMatrix::from_columns(&cols)?.det()
}

/// Determinant of the rows `j f_t(X,Y)`.
pub fn phi(fs: &[MPoly], q: &Quadruple) -> Result<Rational> {
    check_len(fs, q)?;
    let rows = fs
        .iter()
        .map(|f| Ok(RatMatrix::vec_mul(&q.j, &eval_lift(f, &q.x, &q.y)?).0))
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(num_traits::One::one());
    }
    RatMatrix::from_rows(rows)?.det()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    X,
    Y,
    /// Stands for `ij`, equivalently `-[X,Y]` on the variety.
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                'X' => Ok(Letter::X),
                'Y' => Ok(Letter::Y),
                'Z' => Ok(Letter::Z),
                other => Err(Error::Parse(format!("unexpected letter {other:?} in word"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l:?}")?;
        }
        Ok(())
    }
}

fn trace_with(word: &Word, q: &Quadruple, z: &RatMatrix) -> Rational {
    let mut acc = RatMatrix::identity(q.n);
    for l in &word.0 {
        let m = match l {
            Letter::X => &q.x,
            Letter::Y => &q.y,
            Letter::Z => z,
        };
        acc = acc.mul(m);
    }
    if q.n == 0 {
        return Rational::zero();
    }
    acc.trace()
}

/// `Tr` of the word with `Z = ij`.
pub fn invariant_trace(word: &Word, q: &Quadruple) -> Rational {
    trace_with(word, q, &RatMatrix::outer(&q.i, &q.j))
}

/// `Tr` of the word with `Z = -[X,Y]`; agrees with `invariant_trace` on the variety.
pub fn invariant_trace_commutator(word: &Word, q: &Quadruple) -> Rational {
    trace_with(
        word,
        q,
        &RatMatrix::commutator(&q.x, &q.y).scale(&-<Rational as num_traits::One>::one()),
    )
}
