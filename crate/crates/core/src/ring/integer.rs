use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive};

use super::{zpoly, Frac, GroundRing, Pid, RingOps};
use crate::error::{Error, Result};

/// Arbitrary-precision integers, the ground ring `Z`.
pub type Integer = BigInt;

impl RingOps for BigInt {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Pid for BigInt {
    fn ground() -> GroundRing {
        GroundRing::Integers
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!RingOps::is_zero(d), "division by zero");
        // remainder in [0, |d|)
        let (q, r) = self.div_mod_floor(d);
        if r.is_negative() {
            (q + 1, r - d)
        } else {
            (q, r)
        }
    }

    fn normalizing_unit(&self) -> Self {
        if self.is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::from(1)
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn size(&self) -> u64 {
        self.abs().to_u64().unwrap_or(u64::MAX)
    }

    fn factor(&self) -> Vec<(Self, u32)> {
        if RingOps::is_zero(self) {
            return Vec::new();
        }
        let mut out: Vec<(BigInt, u32)> = Vec::new();
        let mut n = self.abs();
        let push = |p: BigInt, out: &mut Vec<(BigInt, u32)>| {
            if let Some(e) = out.iter_mut().find(|(q, _)| *q == p) {
                e.1 += 1;
            } else {
                out.push((p, 1));
            }
        };
        let mut d = 2u64;
        while d < 10_000 {
            let bd = BigInt::from(d);
            if &bd * &bd > n {
                break;
            }
            while (&n % &bd).is_zero() {
                n /= &bd;
                push(bd.clone(), &mut out);
            }
            d += if d == 2 { 1 } else { 2 };
        }
        let mut stack = vec![n];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if is_probable_prime(&m) {
                push(m, &mut out);
                continue;
            }
            let f = pollard_rho(&m);
            stack.push(&m / &f);
            stack.push(f);
        }
        out.sort();
        out
    }

    fn residue_char(prime: &Self) -> Result<u64> {
        prime
            .abs()
            .to_u64()
            .ok_or_else(|| Error::Unsupported(format!("prime {prime} does not fit a machine word")))
    }

    fn residue_degree(_prime: &Self) -> usize {
        1
    }

    fn to_residue(&self, prime: &Self) -> Vec<u64> {
        let r = self.mod_floor(&prime.abs());
        vec![r.to_u64().expect("residue fits")]
    }

    fn from_residue(coords: &[u64], _prime: &Self) -> Self {
        BigInt::from(coords[0])
    }

    fn parse(s: &str) -> Result<Self> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::parse(s, format!("bad integer: {e}")))
    }

    fn factor_over_fraction_field(poly: &[Frac<Self>]) -> Option<Vec<Vec<Frac<Self>>>> {
        let int = zpoly::primitive_from_rational(poly);
        let factors = zpoly::factor_squarefree(&int);
        Some(
            factors
                .into_iter()
                .map(|f| {
                    let lc = f.last().expect("nonzero factor").clone();
                    f.into_iter().map(|c| Frac::new(c, lc.clone())).collect()
                })
                .collect(),
        )
    }
}

fn modpow(b: &BigInt, e: &BigInt, m: &BigInt) -> BigInt {
    b.modpow(e, m)
}

/// Miller-Rabin with the first twelve prime bases; deterministic below 3.3e24.
pub(crate) fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        let bb = BigInt::from(b);
        if *n == bb {
            return true;
        }
        if (n % &bb).is_zero() {
            return false;
        }
    }
    let nm1: BigInt = n - 1u32;
    let mut d = nm1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'outer: for &b in &BASES {
        let mut x = modpow(&BigInt::from(b), &d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard's rho; `n` must be composite and odd.
fn pollard_rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::from(1);
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = BigInt::from(1);
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn remainder_is_canonical() {
        assert_eq!(Pid::div_rem(&z(-7), &z(3)), (z(-3), z(2)));
        assert_eq!(Pid::div_rem(&z(7), &z(-3)), (z(-2), z(1)));
        assert_eq!(Pid::div_rem(&z(-7), &z(-3)), (z(3), z(2)));
    }

    #[test]
    fn factors_small_and_large() {
        assert_eq!(z(-12).factor(), vec![(z(2), 2), (z(3), 1)]);
        assert!(z(1).factor().is_empty());
        let big = BigInt::from(1_000_003u64) * BigInt::from(998_244_353u64);
        assert_eq!(big.factor(), vec![(z(1_000_003), 1), (z(998_244_353), 1)]);
        assert!(z(97).is_prime());
        assert!(!z(91).is_prime());
    }
}
