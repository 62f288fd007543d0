//! JSON wire forms: rationals as `"p/q"` strings, matrices as arrays of rows.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::matrix::{RatMatrix, RatVector};
use crate::rational::{format_rational, parse_rational, Rational};

pub fn rational_to_string(r: &Rational) -> String {
    format_rational(r)
}

pub fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn parse_strings(v: &[String]) -> crate::Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

impl Serialize for RatVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        strings(&self.0).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        parse_strings(&raw).map(RatVector).map_err(D::Error::custom)
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows()).map(|r| strings(&self.row(r).0)).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<Vec<String>>::deserialize(d)?;
        let rows = raw
            .iter()
            .map(|r| parse_strings(r))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        RatMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}

/// Serde adapter for a single `Rational` field.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        format_rational(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(D::Error::custom)
    }
}

/// Serde adapter for `Vec<Rational>` fields.
pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        strings(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        parse_strings(&raw).map_err(D::Error::custom)
    }
}
