//! Values in [0, ∞], the codomain of every distance in this crate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonnegative real number or infinity. Never NaN, never negative.
///
/// The total order places every finite value below `ExtReal::INFINITY`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtReal(f64);

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal(0.0);
    pub const INFINITY: ExtReal = ExtReal(f64::INFINITY);

    /// Wraps a raw float, rejecting negatives and NaN.
    pub fn new(value: f64) -> Result<ExtReal> {
        if value.is_nan() || value < 0.0 {
            Err(Error::precondition(format!(
                "extended real must be in [0, inf], got {value}"
            )))
        } else {
            Ok(ExtReal(value))
        }
    }

    /// Wraps a value known to be nonnegative; panics otherwise.
    pub fn finite(value: f64) -> ExtReal {
        ExtReal::new(value).expect("finite extended real out of domain")
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    /// Absolute difference, with |∞ − ∞| = 0.
    pub fn abs_diff(self, other: ExtReal) -> ExtReal {
        if self.is_infinite() && other.is_infinite() {
            ExtReal::ZERO
        } else {
            ExtReal((self.0 - other.0).abs())
        }
    }
}

/// Addition on [0, ∞]: finite values add numerically, infinity absorbs.
pub fn ext_add(a: ExtReal, b: ExtReal) -> ExtReal {
    ExtReal(a.0 + b.0)
}

impl Add for ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: ExtReal) -> ExtReal {
        ext_add(self, rhs)
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        // Total by invariant: no NaN can be constructed.
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_infinite() {
            serializer.serialize_str("inf")
        } else {
            serializer.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(v) => ExtReal::new(v).map_err(D::Error::custom),
            Raw::Str(s) if s == "inf" => Ok(ExtReal::INFINITY),
            Raw::Str(s) => Err(D::Error::custom(format!(
                "expected number or \"inf\", got {s:?}"
            ))),
        }
    }
}
