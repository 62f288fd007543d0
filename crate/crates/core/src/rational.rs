//! Exact rationals. Backed by `num-rational`'s arbitrary-precision `BigRational`,
//! which keeps values in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;
pub type Integer = BigInt;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
            let q = BigInt::from_str(q.trim()).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
            if q.is_zero() {
                return Err(Error::Parse(format!("{t:?}: zero denominator")));
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(
            BigInt::from_str(t).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?,
        ),
    };
    Ok(parsed)
}

/// Greatest integer `<= r`.
pub fn floor(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// Simplest rational (smallest denominator, then smallest magnitude) strictly
/// inside the open interval `(lo, hi)`; `hi = None` means `+inf`.
pub fn simplest_between(lo: &Rational, hi: Option<&Rational>) -> Rational {
    if let Some(h) = hi {
        debug_assert!(lo < h);
        if lo.is_negative() && h.is_positive() {
            return zero();
        }
        if !h.is_positive() {
            // Mirror into the positive half-line.
            let mirrored = simplest_between(&-h, Some(&-lo));
            return -mirrored;
        }
    }
    let candidate = Rational::from_integer(floor(lo) + 1);
    match hi {
        None => candidate,
        Some(h) if &candidate < h => candidate,
        Some(h) => {
            let fl = Rational::from_integer(floor(lo));
            let lo_frac = lo - &fl;
            let hi_frac = h - &fl;
            // lo_frac in [0,1), hi_frac in (0,1].
            let inv_lo = if lo_frac.is_zero() {
                None
            } else {
                Some(lo_frac.recip())
            };
            let inner = simplest_between(&hi_frac.recip(), inv_lo.as_ref());
            fl + inner.recip()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_round_trips() {
        for s in ["0", "7", "-3/4", "12/5"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&rat(1, 3), Some(&rat(1, 2))), rat(2, 5));
        assert_eq!(simplest_between(&rat(-1, 2), Some(&rat(1, 2))), zero());
        assert_eq!(simplest_between(&rat(5, 2), Some(&rat(7, 2))), int(3));
        assert_eq!(simplest_between(&rat(-7, 2), Some(&rat(-5, 2))), int(-3));
        assert_eq!(simplest_between(&int(3), Some(&int(4))), rat(7, 2));
        assert_eq!(
            simplest_between(&rat(299, 100), Some(&rat(301, 100))),
            int(3)
        );
        assert_eq!(
            simplest_between(&rat(-11, 20), Some(&rat(-9, 20))),
            rat(-1, 2)
        );
    }
}
