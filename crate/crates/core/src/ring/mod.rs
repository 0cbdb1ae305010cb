//! Ground rings: the principal ideal domains the engine works over, and
//! their fraction fields.
//!
//! Two ground rings are supported: the integers ([`Integer`]) and univariate
//! polynomial rings over a prime field ([`FpPoly`]). Both are Euclidean, so
//! gcds, Hermite and Smith forms and complete factorization are available.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Result;

mod fp_poly;
mod frac;
mod integer;
pub mod modp;
pub mod zpoly;

pub use fp_poly::FpPoly;
pub use frac::{Frac, Rational};
pub use integer::Integer;

/// Arithmetic shared by ground-ring elements and fraction-field elements.
pub trait RingOps:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A field: a ring where every nonzero element is invertible.
pub trait Field: RingOps {
    /// Panics on zero.
    fn inv(&self) -> Self;
}

/// Runtime description of a ground ring, as it appears in input files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroundRing {
    Integers,
    PolyOverFiniteField { p: u64 },
}

impl GroundRing {
    pub fn characteristic(&self) -> u64 {
        match self {
            GroundRing::Integers => 0,
            GroundRing::PolyOverFiniteField { p } => *p,
        }
    }
}

impl Display for GroundRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroundRing::Integers => write!(f, "Z"),
            GroundRing::PolyOverFiniteField { p } => write!(f, "F_{p}[t]"),
        }
    }
}

/// A Euclidean domain with canonical representatives, used as the ground
/// ring `R`.
///
/// `div_rem` must return the canonical remainder (non-negative for the
/// integers, lower degree for polynomials) whenever the divisor is
/// normalized; Hermite forms rely on this for uniqueness.
pub trait Pid: RingOps + Eq + Hash + Ord {
    fn ground() -> GroundRing;

    fn characteristic() -> u64 {
        Self::ground().characteristic()
    }

    /// Euclidean division. Panics if `d` is zero.
    fn div_rem(&self, d: &Self) -> (Self, Self);

    /// A unit `u` such that `u * self` is normalized (positive, or monic).
    /// Returns one for zero.
    fn normalizing_unit(&self) -> Self;

    /// Inverse of a unit; `None` if not a unit.
    fn unit_inverse(&self) -> Option<Self>;

    /// Euclidean size (absolute value, or degree + 1); zero for zero.
    fn size(&self) -> u64;

    /// Complete factorization into normalized primes with multiplicities.
    /// Units and zero yield an empty list.
    fn factor(&self) -> Vec<(Self, u32)>;

    fn is_prime(&self) -> bool {
        let f = self.factor();
        f.len() == 1 && f[0].1 == 1
    }

    /// Characteristic of the residue field `R / prime`. Errors if it does not
    /// fit a machine word.
    fn residue_char(prime: &Self) -> Result<u64>;

    /// Degree of the residue field `R / prime` over its prime field.
    fn residue_degree(prime: &Self) -> usize;

    /// Coordinates of `self mod prime` over the prime field of `R / prime`.
    fn to_residue(&self, prime: &Self) -> Vec<u64>;

    /// Canonical lift of residue coordinates back to `R`.
    fn from_residue(coords: &[u64], prime: &Self) -> Self;

    fn parse(s: &str) -> Result<Self>;

    /// Factor a squarefree polynomial over the fraction field into monic
    /// irreducible factors. Only available where a factoring algorithm is
    /// implemented; the default reports that none is.
    fn factor_over_fraction_field(_poly: &[Frac<Self>]) -> Option<Vec<Vec<Frac<Self>>>> {
        None
    }

    fn normalized(&self) -> Self {
        self.normalizing_unit() * self.clone()
    }

    fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Exact quotient; panics when `d` does not divide `self`.
    fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact division {self} / {d}");
        q
    }
}

pub fn gcd<R: Pid>(a: &R, b: &R) -> R {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.div_rem(&y).1;
        x = y;
        y = r;
    }
    x.normalized()
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`, `g` normalized.
pub fn xgcd<R: Pid>(a: &R, b: &R) -> (R, R, R) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (R::one(), R::zero());
    let (mut t0, mut t1) = (R::zero(), R::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = s0 - q.clone() * s1.clone();
        s0 = std::mem::replace(&mut s1, s);
        let t = t0 - q * t1.clone();
        t0 = std::mem::replace(&mut t1, t);
    }
    let u = r0.normalizing_unit();
    (u.clone() * r0, u.clone() * s0, u * t0)
}

pub fn lcm<R: Pid>(a: &R, b: &R) -> R {
    if a.is_zero() || b.is_zero() {
        return R::zero();
    }
    (a.clone() * b.exact_div(&gcd(a, b))).normalized()
}

/// Multiplicity of `prime` in `a`; `None` for `a = 0`.
pub fn valuation<R: Pid>(a: &R, prime: &R) -> Option<u32> {
    if a.is_zero() {
        return None;
    }
    let mut v = 0;
    let mut x = a.clone();
    loop {
        let (q, r) = x.div_rem(prime);
        if !r.is_zero() {
            return Some(v);
        }
        x = q;
        v += 1;
    }
}

pub fn pow<T: RingOps>(base: &T, mut e: u64) -> T {
    let mut acc = T::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b.clone();
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * b;
        }
    }
    acc
}
