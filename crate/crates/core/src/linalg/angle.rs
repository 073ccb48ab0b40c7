use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Float, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// The angle `q·π` for a rational `q`, kept in lowest terms.
///
/// Sine and cosine are exact whenever they are `0` or `±1`, i.e. whenever
/// `q` is a multiple of `1/2`; everything else is evaluated in floating
/// point and flagged as inexact.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RationalAngle(Ratio<i64>);

/// A trigonometric value, with a flag telling whether it is exact.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Trig {
    pub value: f64,
    pub exact: bool,
}

impl RationalAngle {
    pub const ZERO: Self = Self(Ratio::new_raw(0, 1));

    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Invalid("angle denominator must be nonzero".into()));
        }
        Ok(Self(Ratio::new(num, den)))
    }

    /// `n·π`.
    pub fn integer(n: i64) -> Self {
        Self(Ratio::from_integer(n))
    }

    pub fn from_ratio(q: Ratio<i64>) -> Self {
        Self(q)
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn num(&self) -> i64 {
        *self.0.numer()
    }

    /// Always positive.
    pub fn den(&self) -> i64 {
        *self.0.denom()
    }

    /// The multiple of `π`, as a float.
    pub fn turns_of_pi(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn radians(&self) -> f64 {
        self.turns_of_pi() * core::f64::consts::PI
    }

    pub fn half(&self) -> Self {
        Self(self.0 / 2)
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// `sin(qπ) = 0 ⇔ q ∈ ℤ`.
    pub fn sin_is_zero(&self) -> bool {
        self.0.is_integer()
    }

    /// `cos(qπ) = 1 ⇔ q ∈ 2ℤ`.
    pub fn cos_is_one(&self) -> bool {
        self.0.is_integer() && self.0.numer().is_even()
    }

    /// `cos(qπ) = -1 ⇔ q ∈ 2ℤ + 1`.
    pub fn cos_is_minus_one(&self) -> bool {
        self.0.is_integer() && self.0.numer().is_odd()
    }

    /// `q mod 2`, in `[0, 2)`.
    fn reduced(&self) -> Ratio<i64> {
        let two = Ratio::from_integer(2);
        let r = self.0 % two;
        if r.is_negative() {
            r + two
        } else {
            r
        }
    }

    pub fn sin(&self) -> Trig {
        let r = self.reduced();
        if r.is_integer() {
            return Trig { value: 0.0, exact: true };
        }
        if *r.denom() == 2 {
            let value = if *r.numer() == 1 { 1.0 } else { -1.0 };
            return Trig { value, exact: true };
        }
        Trig { value: Float::sin(r.to_f64().unwrap_or(f64::NAN) * core::f64::consts::PI), exact: false }
    }

    pub fn cos(&self) -> Trig {
        let r = self.reduced();
        if r.is_integer() {
            let value = if r.is_zero() { 1.0 } else { -1.0 };
            return Trig { value, exact: true };
        }
        if *r.denom() == 2 {
            return Trig { value: 0.0, exact: true };
        }
        Trig { value: Float::cos(r.to_f64().unwrap_or(f64::NAN) * core::f64::consts::PI), exact: false }
    }
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// accepted only if it lies within `tol` of `x`.
///
/// Walks the continued-fraction convergents of `x`.
pub fn approximate_rational(x: f64, max_den: i64, tol: f64) -> Option<Ratio<i64>> {
    if !x.is_finite() {
        return None;
    }
    let (mut h_prev, mut h) = (1i64, Float::floor(x) as i64);
    let (mut k_prev, mut k) = (0i64, 1i64);
    let mut frac = x - Float::floor(x);
    loop {
        if (x - h as f64 / k as f64).abs() <= tol {
            return Some(Ratio::new(h, k));
        }
        if frac.abs() < 1e-15 {
            return None;
        }
        let inv = 1.0 / frac;
        let a = Float::floor(inv);
        frac = inv - a;
        let a = a as i64;
        let k_next = a.checked_mul(k)?.checked_add(k_prev)?;
        if k_next > max_den {
            return None;
        }
        let h_next = a.checked_mul(h)?.checked_add(h_prev)?;
        (h_prev, h, k_prev, k) = (h, h_next, k, k_next);
    }
}

impl From<i64> for RationalAngle {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl Add for RationalAngle {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for RationalAngle {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Neg for RationalAngle {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl Mul<i64> for RationalAngle {
    type Output = Self;
    fn mul(self, rhs: i64) -> Self {
        Self(self.0 * rhs)
    }
}

impl Mul<Ratio<i64>> for RationalAngle {
    type Output = Self;
    fn mul(self, rhs: Ratio<i64>) -> Self {
        Self(self.0 * rhs)
    }
}

/// Formats as `num/den pi`.
impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} pi", self.num(), self.den())
    }
}

impl fmt::Debug for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `a/b`, `a`, or either followed by ` pi`.
impl FromStr for RationalAngle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_suffix("pi").map(str::trim_end).unwrap_or(s);
        let bad = || Error::Invalid(alloc::format!("cannot parse rational angle `{s}`"));
        match s.split_once('/') {
            Some((a, b)) => {
                let a = a.trim().parse::<i64>().map_err(|_| bad())?;
                let b = b.trim().parse::<i64>().map_err(|_| bad())?;
                Self::new(a, b)
            }
            None => s.parse::<i64>().map(Self::integer).map_err(|_| bad()),
        }
    }
}
