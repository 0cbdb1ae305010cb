use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{gcd, Field, Pid, RingOps};
use crate::error::{Error, Result};

/// Element of the fraction field of a ground ring, kept reduced with a
/// normalized denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frac<R: Pid> {
    num: R,
    den: R,
}

impl<R: Pid> Frac<R> {
    /// Panics on a zero denominator.
    pub fn new(num: R, den: R) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Frac { num, den: R::one() };
        }
        let g = gcd(&num, &den);
        let (n, d) = (num.exact_div(&g), den.exact_div(&g));
        let u = d.normalizing_unit();
        Frac {
            num: u.clone() * n,
            den: u * d,
        }
    }

    pub fn from_ring(r: R) -> Self {
        Frac {
            num: r,
            den: R::one(),
        }
    }

    pub fn num(&self) -> &R {
        &self.num
    }

    pub fn den(&self) -> &R {
        &self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the element lies in `R`.
    pub fn to_ring(&self) -> Option<R> {
        self.is_integral().then(|| self.num.clone())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            None => Ok(Self::from_ring(R::parse(s)?)),
            Some((n, d)) => {
                let strip = |x: &str| {
                    let x = x.trim();
                    x.strip_prefix('(')
                        .and_then(|y| y.strip_suffix(')'))
                        .unwrap_or(x)
                        .to_string()
                };
                let (n, d) = (R::parse(&strip(n))?, R::parse(&strip(d))?);
                if d.is_zero() {
                    return Err(Error::parse(s, "zero denominator"));
                }
                Ok(Self::new(n, d))
            }
        }
    }
}

impl<R: Pid> From<R> for Frac<R> {
    fn from(r: R) -> Self {
        Self::from_ring(r)
    }
}

impl<R: Pid> Add for Frac<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Frac::new(self.num + rhs.num, self.den);
        }
        Frac::new(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<R: Pid> Sub for Frac<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Pid> Mul for Frac<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return Frac::from_ring(self.num * rhs.num);
        }
        Frac::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl<R: Pid> Div for Frac<R> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<R: Pid> Neg for Frac<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Frac {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<R: Pid> RingOps for Frac<R> {
    fn zero() -> Self {
        Frac::from_ring(R::zero())
    }
    fn one() -> Self {
        Frac::from_ring(R::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_i64(n: i64) -> Self {
        Frac::from_ring(R::from_i64(n))
    }
}

impl<R: Pid> Field for Frac<R> {
    fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverting zero");
        Frac::new(self.den.clone(), self.num.clone())
    }
}

impl<R: Pid> fmt::Display for Frac<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl<R: Pid> fmt::Debug for Frac<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Rationals.
pub type Rational = Frac<super::Integer>;
