use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{Scalar, Tolerances};
use crate::error::{Error, Result};

/// A value on the extended real line.
///
/// The infinities are problem-status conventions: `PlusInfinity` for an empty
/// feasible set, `MinusInfinity` for a cost that is unbounded below or whose
/// infimum is not attained. They never arise from IEEE arithmetic; build
/// finite values through [`ExtendedReal::finite`], which rejects NaN and
/// IEEE infinities.
#[derive(Clone, Copy, Debug)]
pub enum ExtendedReal<T> {
    MinusInfinity,
    Finite(T),
    PlusInfinity,
}

impl<T: Scalar> ExtendedReal<T> {
    pub fn finite(value: T) -> Result<Self> {
        if value.is_nan() {
            Err(Error::NotANumber("extended real"))
        } else if value.is_infinite() {
            Err(Error::NonFinite {
                context: "extended real",
                value: value.as_f64(),
            })
        } else {
            Ok(ExtendedReal::Finite(value))
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    pub fn is_plus_infinity(&self) -> bool {
        matches!(self, ExtendedReal::PlusInfinity)
    }

    pub fn is_minus_infinity(&self) -> bool {
        matches!(self, ExtendedReal::MinusInfinity)
    }

    pub fn finite_value(&self) -> Option<T> {
        match *self {
            ExtendedReal::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Same variant, ignoring the finite payload.
    pub fn same_kind(&self, other: &Self) -> bool {
        std::mem::discriminant(self) == std::mem::discriminant(other)
    }

    /// `self >= mu` for a real level `mu`.
    pub fn le_real(&self, mu: T) -> bool {
        match *self {
            ExtendedReal::MinusInfinity => true,
            ExtendedReal::Finite(v) => v <= mu,
            ExtendedReal::PlusInfinity => false,
        }
    }
}

impl<T: Scalar> PartialEq for ExtendedReal<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: Scalar> Eq for ExtendedReal<T> {}

impl<T: Scalar> PartialOrd for ExtendedReal<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for ExtendedReal<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedReal::*;
        match (self, other) {
            (MinusInfinity, MinusInfinity) | (PlusInfinity, PlusInfinity) => Ordering::Equal,
            (MinusInfinity, _) | (_, PlusInfinity) => Ordering::Less,
            (PlusInfinity, _) | (_, MinusInfinity) => Ordering::Greater,
            (Finite(a), Finite(b)) => a
                .partial_cmp(b)
                .expect("finite extended reals never hold NaN"),
        }
    }
}

impl<T: Scalar> fmt::Display for ExtendedReal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::MinusInfinity => f.write_str("-inf"),
            ExtendedReal::Finite(v) => write!(f, "{v}"),
            ExtendedReal::PlusInfinity => f.write_str("+inf"),
        }
    }
}

/// Finite values serialize as numbers, the infinities as the strings
/// `"+inf"` and `"-inf"`.
impl<T: Scalar> Serialize for ExtendedReal<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedReal::MinusInfinity => serializer.serialize_str("-inf"),
            ExtendedReal::PlusInfinity => serializer.serialize_str("+inf"),
            ExtendedReal::Finite(v) => v.serialize(serializer),
        }
    }
}

pub fn ext_min<T: Scalar>(a: ExtendedReal<T>, b: ExtendedReal<T>) -> ExtendedReal<T> {
    std::cmp::min(a, b)
}

pub fn ext_max<T: Scalar>(a: ExtendedReal<T>, b: ExtendedReal<T>) -> ExtendedReal<T> {
    std::cmp::max(a, b)
}

/// Compares two extended reals, treating finite values within `value_eps` as
/// equal. Infinities compare exactly.
pub fn ext_compare<T: Scalar>(
    a: ExtendedReal<T>,
    b: ExtendedReal<T>,
    tol: &Tolerances<T>,
) -> Ordering {
    match (a, b) {
        (ExtendedReal::Finite(x), ExtendedReal::Finite(y)) if (x - y).abs() <= tol.value_eps => {
            Ordering::Equal
        }
        _ => a.cmp(&b),
    }
}
