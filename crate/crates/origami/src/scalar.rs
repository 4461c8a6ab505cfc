//! Certified-precision real arithmetic.
//!
//! Every coordinate in the crate is a [`Scalar`]: an arbitrary-precision
//! binary float (MPFR-backed) tagged with its working mantissa width.
//! Equality is never exact; all geometric predicates compare through the
//! tolerance [`Scalar::eps`], `2^(-precision_bits/2)`, so that a value
//! carrying `p` bits of mantissa is trusted to roughly half its digits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

/// Smallest permitted mantissa width.
pub const MIN_PRECISION: u32 = 64;

/// Default mantissa width for newly created scalars.
pub const DEFAULT_PRECISION: u32 = 256;

static GLOBAL_PRECISION: AtomicU32 = AtomicU32::new(DEFAULT_PRECISION);

/// Sets the mantissa width used by all subsequent default-precision
/// constructors. Clamped to [`MIN_PRECISION`].
pub fn set_precision(bits: u32) {
    GLOBAL_PRECISION.store(bits.max(MIN_PRECISION), AtomicOrdering::SeqCst);
}

/// Current default mantissa width.
pub fn precision() -> u32 {
    GLOBAL_PRECISION.load(AtomicOrdering::SeqCst)
}

/// Arbitrary-precision real number with a tolerance contract.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct Scalar(Float);

impl Scalar {
    /// Zero at the default precision.
    pub fn zero() -> Self {
        Scalar(Float::with_val(precision(), 0))
    }

    /// One at the default precision.
    pub fn one() -> Self {
        Scalar(Float::with_val(precision(), 1))
    }

    pub fn from_int(v: i64) -> Self {
        Scalar(Float::with_val(precision(), v))
    }

    /// Exact embedding of an `f64` (binary, so lossless).
    pub fn from_f64(v: f64) -> Self {
        Scalar(Float::with_val(precision(), v))
    }

    pub fn from_f64_prec(bits: u32, v: f64) -> Self {
        Scalar(Float::with_val(bits.max(MIN_PRECISION), v))
    }

    pub fn from_int_prec(bits: u32, v: i64) -> Self {
        Scalar(Float::with_val(bits.max(MIN_PRECISION), v))
    }

    /// Ratio of two integers, rounded once at the target precision.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::from_int(num) / Scalar::from_int(den)
    }

    /// Parses a decimal literal (optional sign, fraction, exponent) at the
    /// default precision.
    pub fn parse(text: &str) -> Option<Self> {
        Self::parse_prec(precision(), text)
    }

    pub fn parse_prec(bits: u32, text: &str) -> Option<Self> {
        Float::parse(text)
            .ok()
            .map(|incomplete| Scalar(Float::with_val(bits.max(MIN_PRECISION), incomplete)))
    }

    pub fn pi() -> Self {
        Scalar(Float::with_val(precision(), Constant::Pi))
    }

    /// Mantissa width of this value.
    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Returns the same value carried at `bits` of mantissa.
    pub fn with_prec(&self, bits: u32) -> Self {
        let mut f = self.0.clone();
        f.set_prec(bits.max(MIN_PRECISION));
        Scalar(f)
    }

    /// Comparison tolerance of this value: `2^(-prec/2)`.
    pub fn eps(&self) -> Scalar {
        let p = self.prec();
        Scalar(Float::with_val(p, Float::i_exp(1, -((p / 2) as i32))))
    }

    /// Tolerance used when comparing two values of possibly different
    /// precision: the looser (larger) of the two.
    pub fn eps_pair(a: &Scalar, b: &Scalar) -> Scalar {
        let p = a.prec().min(b.prec());
        Scalar(Float::with_val(p, Float::i_exp(1, -((p / 2) as i32))))
    }

    /// Three-valued comparison: `Equal` means within the pair tolerance.
    pub fn cmp_eps(&self, other: &Scalar) -> Ordering {
        let eps = Scalar::eps_pair(self, other);
        let diff = self - other;
        if diff.0.clone().abs() <= eps.0 {
            Ordering::Equal
        } else if diff.0.is_sign_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// True when `|self - other|` is within the pair tolerance.
    pub fn eq_eps(&self, other: &Scalar) -> bool {
        self.cmp_eps(other) == Ordering::Equal
    }

    /// True when `|self|` is within this value's own tolerance.
    pub fn is_zero_eps(&self) -> bool {
        self.0.clone().abs() <= self.eps().0
    }

    pub fn abs(&self) -> Scalar {
        Scalar(self.0.clone().abs())
    }

    pub fn sqrt(&self) -> Scalar {
        Scalar(self.0.clone().sqrt())
    }

    pub fn cbrt(&self) -> Scalar {
        Scalar(self.0.clone().cbrt())
    }

    /// `sqrt(self^2 + other^2)` without intermediate overflow.
    pub fn hypot(&self, other: &Scalar) -> Scalar {
        Scalar(self.0.clone().hypot(&other.0))
    }

    pub fn cos(&self) -> Scalar {
        Scalar(self.0.clone().cos())
    }

    pub fn sin(&self) -> Scalar {
        Scalar(self.0.clone().sin())
    }

    pub fn acos(&self) -> Scalar {
        Scalar(self.0.clone().acos())
    }

    /// Angle of the vector `(x, y) = (other, self)`, in `(-pi, pi]`.
    pub fn atan2(&self, other: &Scalar) -> Scalar {
        Scalar(self.0.clone().atan2(&other.0))
    }

    pub fn powi(&self, exp: i32) -> Scalar {
        Scalar(self.0.clone().pow(exp))
    }

    pub fn recip(&self) -> Scalar {
        Scalar(self.0.clone().recip())
    }

    pub fn min_val(&self, other: &Scalar) -> Scalar {
        if self.0 <= other.0 {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn max_val(&self, other: &Scalar) -> Scalar {
        if self.0 >= other.0 {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    /// Nearest `f64` (for rendering and diagnostics only).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Decimal rendering with `digits` significant digits, suitable for
    /// re-parsing. Uses plain or exponent notation as rug chooses.
    pub fn to_decimal(&self, digits: usize) -> String {
        self.0.to_string_radix(10, Some(digits.max(2)))
    }

    /// `2^exp` at the default precision; the building block for the
    /// acceptance tolerances.
    pub fn exp2i(exp: i32) -> Scalar {
        Scalar(Float::with_val(precision(), Float::i_exp(1, exp)))
    }

    /// Converts degrees to radians at this value's precision.
    pub fn deg_to_rad(&self) -> Scalar {
        let pi = Scalar(Float::with_val(self.prec(), Constant::Pi));
        self * &(pi / Scalar::from_int_prec(self.prec(), 180))
    }

    /// Converts radians to degrees at this value's precision.
    pub fn rad_to_deg(&self) -> Scalar {
        let pi = Scalar(Float::with_val(self.prec(), Constant::Pi));
        self * &(Scalar::from_int_prec(self.prec(), 180) / pi)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.0.to_string_radix(10, Some(17)))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_string_radix(10, Some(17)))
    }
}

fn join_prec(a: &Scalar, b: &Scalar) -> u32 {
    a.prec().max(b.prec())
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let prec = join_prec(self, rhs);
                let mut out = Float::with_val(prec, &self.0);
                out = Float::$method(out, &rhs.0);
                Scalar(out)
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0.clone())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}
