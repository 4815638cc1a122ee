//! Rationals extended by a single absorbing `inf`.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::{Error, Result};

/// A reduced rational number or positive infinity.
///
/// `inf` compares greater than every finite value and never takes part in
/// arithmetic; callers must check finiteness before combining entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtRat {
    Finite(BigRational),
    Infinity,
}

impl ExtRat {
    pub fn from_int(v: i64) -> Self {
        ExtRat::Finite(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Self {
        ExtRat::Finite(BigRational::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExtRat::Finite(q) => Some(q),
            ExtRat::Infinity => None,
        }
    }

    /// Parses an integer, a fraction `p/q`, or the token `inf`.
    pub fn parse(token: &str) -> Result<Self> {
        let t = token.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(ExtRat::Infinity);
        }
        if let Some((p, q)) = t.split_once('/') {
            let num: BigInt = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator in {t:?}")))?;
            let den: BigInt = q
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator in {t:?}")))?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {t:?}")));
            }
            return Ok(ExtRat::Finite(BigRational::new(num, den)));
        }
        let num: BigInt = t
            .parse()
            .map_err(|_| Error::Parse(format!("bad number {t:?}")))?;
        Ok(ExtRat::Finite(BigRational::from_integer(num)))
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Infinity, ExtRat::Infinity) => Ordering::Equal,
            (ExtRat::Infinity, ExtRat::Finite(_)) => Ordering::Greater,
            (ExtRat::Finite(_), ExtRat::Infinity) => Ordering::Less,
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Infinity => write!(f, "inf"),
            ExtRat::Finite(q) => write!(f, "{}", rational_string(q)),
        }
    }
}

/// Renders a rational as `p` or `p/q` in lowest terms.
pub fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
