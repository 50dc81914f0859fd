//! Exact rational helpers shared by the identity checks and reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serializer;

pub type Rational = BigRational;

pub fn int<T: Into<BigInt>>(x: T) -> Rational {
    Rational::from_integer(x.into())
}

pub fn frac<T: Into<BigInt>>(num: T, den: T) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Always `p/q`, including integers (`2/1`), so readers can parse every
/// rational field the same way.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_fraction(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(p.trim().parse().ok()?, q))
        }
        None => Some(int(s.parse::<BigInt>().ok()?)),
    }
}

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_fraction_string(r))
}

pub fn serialize_opt<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&to_fraction_string(r)),
        None => s.serialize_none(),
    }
}
