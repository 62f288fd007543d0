use std::collections::HashMap;
use std::sync::Arc;

use super::algebra::HElem;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{Monomial, PolyC};
use crate::rational::Rational;
use crate::upoly::CPoly;

fn check(n: usize, f: &PolyC) -> Result<()> {
    if f.nvars() == n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "polynomial in {} variables for n = {n}",
            f.nvars()
        )))
    }
}

/// `[y_i, x_j] g`: `c s_ij g` for `i != j`, `g - c Σ_{k != i} s_ik g` for `i = j`.
pub(super) fn commutator_on(i: usize, j: usize, g: &PolyC) -> PolyC {
    let n = g.nvars();
    let c = CPoly::var();
    if i != j {
        return g.permute(&Permutation::transposition(n, i, j)).scale(&c);
    }
    let mut out = g.clone();
    for k in (0..n).filter(|&k| k != i) {
        out = out.sub(&g.permute(&Permutation::transposition(n, i, k)).scale(&c));
    }
    out
}

fn y_on_monomial(
    i: usize,
    m: &Monomial,
    vars: &Arc<[String]>,
    memo: &mut HashMap<Monomial, PolyC>,
) -> PolyC {
    if let Some(p) = memo.get(m) {
        return p.clone();
    }
    let out = match m.0.iter().position(|&e| e > 0) {
        None => PolyC::zero(Arc::clone(vars)),
        Some(j) => {
            let mut rest = m.clone();
            rest.0[j] -= 1;
            let inner = y_on_monomial(i, &rest, vars, memo);
            let mut xj = Monomial::one(m.0.len());
            xj.0[j] = 1;
            let g = PolyC::monomial(Arc::clone(vars), rest, CPoly::one());
            inner
                .mul_monomial(&xj, &CPoly::one())
                .add(&commutator_on(i, j, &g))
        }
    };
    memo.insert(m.clone(), out.clone());
    out
}

/// `y_i` on the induced module: `y_i 1 = 0`, `y_i (x_j g) = x_j y_i g + [y_i, x_j] g`.
pub fn act_y(i: usize, f: &PolyC) -> PolyC {
    let vars = Arc::clone(f.vars());
    let mut memo = HashMap::new();
    let mut out = PolyC::zero(Arc::clone(&vars));
    for (m, c) in f.terms() {
        out = out.add(&y_on_monomial(i, m, &vars, &mut memo).scale(c));
    }
    out
}

/// Action of `a` on `C[x_1..x_n]`: `x` multiplies, `w` permutes variables, `y` as in `act_y`.
pub fn act_poly(a: &HElem, f: &PolyC) -> Result<PolyC> {
    check(a.n(), f)?;
    let vars = Arc::clone(f.vars());
    let mut cache: HashMap<&Vec<u32>, PolyC> = HashMap::new();
    let mut out = PolyC::zero(Arc::clone(&vars));
    for (k, c) in a.terms() {
        let yf = cache
            .entry(&k.y)
            .or_insert_with(|| {
                let mut g = f.clone();
                for (i, &e) in k.y.iter().enumerate() {
                    for _ in 0..e {
                        g = act_y(i, &g);
                    }
                }
                g
            })
            .clone();
        let moved = yf.permute(&k.w);
        out = out.add(&moved.mul_monomial(&Monomial(k.x.clone()), c));
    }
    Ok(out)
}

/// `∂_i f - c Σ_{j != i} (f - s_ij f) / (x_i - x_j)`; agrees with `act_y(i, f)`.
pub fn dunkl(i: usize, f: &PolyC) -> Result<PolyC> {
    let n = f.nvars();
    if i >= n {
        return Err(Error::InvalidInput(format!(
            "index {} out of range 1..={n}",
            i + 1
        )));
    }
    let vars = f.vars();
    let c = CPoly::var();
    let mut out = f.derivative(i);
    for j in (0..n).filter(|&j| j != i) {
        let diff = f.sub(&f.permute(&Permutation::transposition(n, i, j)));
        let lin = PolyC::var(Arc::clone(vars), i).sub(&PolyC::var(Arc::clone(vars), j));
        let q = diff.exact_div(&lin).map_err(|_| {
            Error::InternalInconsistency("difference quotient left a remainder".into())
        })?;
        out = out.sub(&q.scale(&c));
    }
    Ok(out)
}

/// `(1/n!) Σ_σ σ.f`
pub fn symmetrize(f: &PolyC) -> PolyC {
    let all = Permutation::all(f.nvars());
    let inv = CPoly::constant(Rational::from_integer((all.len() as i64).into()).recip());
    let mut out = PolyC::zero(Arc::clone(f.vars()));
    for w in &all {
        out = out.add(&f.permute(w));
    }
    out.scale(&inv)
}

pub fn is_symmetric(f: &PolyC) -> bool {
    let n = f.nvars();
    (0..n.saturating_sub(1)).all(|k| f.permute(&Permutation::transposition(n, k, k + 1)) == *f)
}

/// Action of a spherical element `u = e h e` on a symmetric polynomial; the
/// output is checked to be symmetric.
pub fn spherical_act(u: &HElem, f: &PolyC) -> Result<PolyC> {
    if !is_symmetric(f) {
        return Err(Error::InvalidInput(
            "input polynomial is not symmetric".into(),
        ));
    }
    let out = act_poly(u, f)?;
    if is_symmetric(&out) {
        Ok(out)
    } else {
        Err(Error::NotSymmetric(format!("{out}")))
    }
}
