//! Index values: exact integers, exact rationals or `f64`, with promotion on
//! arithmetic and tolerance-aware comparison.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default relative tolerance for floating-point comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueMode {
    Integer,
    Rational,
    Float,
}

impl fmt::Display for ValueMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ValueMode::Integer => "exact-integer",
            ValueMode::Rational => "exact-rational",
            ValueMode::Float => "float",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum IndexValue {
    Integer(BigInt),
    Rational(BigRational),
    Float(f64),
}

impl IndexValue {
    pub fn zero() -> Self {
        IndexValue::Integer(BigInt::zero())
    }

    pub fn one() -> Self {
        IndexValue::Integer(BigInt::one())
    }

    pub fn int(v: i64) -> Self {
        IndexValue::Integer(BigInt::from(v))
    }

    /// `num / den`, reduced; collapses to an integer when `den` divides `num`.
    pub fn ratio(num: i64, den: i64) -> Self {
        IndexValue::Rational(BigRational::new(num.into(), den.into())).normalized()
    }

    pub fn mode(&self) -> ValueMode {
        match self {
            IndexValue::Integer(_) => ValueMode::Integer,
            IndexValue::Rational(_) => ValueMode::Rational,
            IndexValue::Float(_) => ValueMode::Float,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, IndexValue::Float(_))
    }

    fn normalized(self) -> Self {
        match self {
            IndexValue::Rational(r) if r.is_integer() => IndexValue::Integer(r.to_integer()),
            other => other,
        }
    }

    fn to_rational(&self) -> Option<BigRational> {
        match self {
            IndexValue::Integer(i) => Some(BigRational::from_integer(i.clone())),
            IndexValue::Rational(r) => Some(r.clone()),
            IndexValue::Float(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            IndexValue::Integer(i) => i.to_f64().unwrap_or(f64::NAN),
            IndexValue::Rational(r) => {
                r.to_f64().unwrap_or_else(|| {
                    // numerator or denominator beyond f64 range
                    let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
                    let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
                    n / d
                })
            }
            IndexValue::Float(x) => *x,
        }
    }

    /// Integer power.
    pub fn pow(&self, exp: u32) -> IndexValue {
        match self {
            IndexValue::Integer(i) => IndexValue::Integer(num_traits::pow(i.clone(), exp as usize)),
            IndexValue::Rational(r) => {
                IndexValue::Rational(num_traits::pow(r.clone(), exp as usize)).normalized()
            }
            IndexValue::Float(x) => IndexValue::Float(x.powi(exp as i32)),
        }
    }

    /// Exact when both sides are exact; otherwise equality means
    /// `|self - other| <= tol * max(1, |other|)`.
    pub fn compare(&self, other: &IndexValue, tol: f64) -> Ordering {
        if let (Some(a), Some(b)) = (self.to_rational(), other.to_rational()) {
            return a.cmp(&b);
        }
        let (a, b) = (self.to_f64(), other.to_f64());
        if (a - b).abs() <= tol * b.abs().max(1.0) {
            Ordering::Equal
        } else {
            a.partial_cmp(&b).unwrap_or(Ordering::Equal)
        }
    }

    pub fn approx_eq(&self, other: &IndexValue, tol: f64) -> bool {
        self.compare(other, tol) == Ordering::Equal
    }

    /// Exact rendering: integers in full, rationals as `p/q`, floats at
    /// 12 significant digits.
    pub fn exact_repr(&self) -> String {
        match self {
            IndexValue::Integer(i) => i.to_string(),
            IndexValue::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            IndexValue::Float(x) => format_float(*x),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            IndexValue::Integer(i) => i.is_negative(),
            IndexValue::Rational(r) => r.is_negative(),
            IndexValue::Float(x) => *x < 0.0,
        }
    }
}

impl From<i64> for IndexValue {
    fn from(v: i64) -> Self {
        IndexValue::int(v)
    }
}

impl From<BigInt> for IndexValue {
    fn from(v: BigInt) -> Self {
        IndexValue::Integer(v)
    }
}

impl From<f64> for IndexValue {
    fn from(v: f64) -> Self {
        IndexValue::Float(v)
    }
}

impl Add for &IndexValue {
    type Output = IndexValue;

    fn add(self, rhs: &IndexValue) -> IndexValue {
        use IndexValue::*;
        match (self, rhs) {
            (Integer(a), Integer(b)) => Integer(a + b),
            (Float(_), _) | (_, Float(_)) => Float(self.to_f64() + rhs.to_f64()),
            _ => {
                let (a, b) = (self.to_rational().unwrap(), rhs.to_rational().unwrap());
                Rational(a + b).normalized()
            }
        }
    }
}

impl Add for IndexValue {
    type Output = IndexValue;

    fn add(self, rhs: IndexValue) -> IndexValue {
        &self + &rhs
    }
}

impl Mul for &IndexValue {
    type Output = IndexValue;

    fn mul(self, rhs: &IndexValue) -> IndexValue {
        use IndexValue::*;
        match (self, rhs) {
            (Integer(a), Integer(b)) => Integer(a * b),
            (Float(_), _) | (_, Float(_)) => Float(self.to_f64() * rhs.to_f64()),
            _ => {
                let (a, b) = (self.to_rational().unwrap(), rhs.to_rational().unwrap());
                Rational(a * b).normalized()
            }
        }
    }
}

impl Mul for IndexValue {
    type Output = IndexValue;

    fn mul(self, rhs: IndexValue) -> IndexValue {
        &self * &rhs
    }
}

impl Sum for IndexValue {
    fn sum<I: Iterator<Item = IndexValue>>(iter: I) -> Self {
        iter.fold(IndexValue::zero(), |acc, v| acc + v)
    }
}

impl Product for IndexValue {
    fn product<I: Iterator<Item = IndexValue>>(iter: I) -> Self {
        iter.fold(IndexValue::one(), |acc, v| acc * v)
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Integer(i) => write!(f, "{i}"),
            IndexValue::Rational(_) => f.write_str(&format_float(self.to_f64())),
            IndexValue::Float(x) => f.write_str(&format_float(*x)),
        }
    }
}

/// `%.12g`-style rendering: 12 significant digits, trailing zeros trimmed.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!(
            "{}e{}{:02}",
            trim_zeros(mantissa),
            if exp < 0 { '-' } else { '+' },
            exp.abs()
        )
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}
