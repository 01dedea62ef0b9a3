//! Exact univariate polynomials and rational functions in `q` over the rationals.

mod poly;
mod ratfunc;

pub use poly::{Poly, PolyJson};
pub use ratfunc::{eval_at_int, RatFunc};

use num::BigRational;

use crate::error::{Error, Result};

/// `f` as an integer polynomial, or an integrality error naming `what`.
pub fn as_integer_polynomial(f: &RatFunc, what: &str) -> Result<Poly> {
    f.as_integer_polynomial()
        .ok_or_else(|| Error::Integrality(format!("{what}: expected an integer polynomial, got {f}")))
}

pub fn expand_at_one(f: &RatFunc, order: usize) -> Result<Vec<BigRational>> {
    f.expand_at_one(order)
}

pub fn is_positive_in_qminus1(p: &Poly) -> bool {
    p.is_positive_in_qminus1()
}

/// Serializes any `Display` value as a JSON string (exact rationals, big integers).
pub fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}
