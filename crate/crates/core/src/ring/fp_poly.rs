use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::modp;
use super::{GroundRing, Pid, RingOps};
use crate::error::{Error, Result};

/// Polynomials in `t` over the prime field `F_P`, the ground ring `F_P[t]`.
///
/// Coefficients are stored low to high without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly<const P: u64> {
    coeffs: Vec<u64>,
}

impl<const P: u64> FpPoly<P> {
    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        FpPoly {
            coeffs: modp::ptrim(coeffs.into_iter().map(|c| c % P).collect()),
        }
    }

    /// The generator `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![0, 1])
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        modp::pdeg(&self.coeffs)
    }
}

impl<const P: u64> PartialOrd for FpPoly<P> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<const P: u64> Ord for FpPoly<P> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<const P: u64> Add for FpPoly<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        FpPoly {
            coeffs: modp::padd(&self.coeffs, &rhs.coeffs, P),
        }
    }
}

impl<const P: u64> Sub for FpPoly<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        FpPoly {
            coeffs: modp::psub(&self.coeffs, &rhs.coeffs, P),
        }
    }
}

impl<const P: u64> Mul for FpPoly<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        FpPoly {
            coeffs: modp::pmul(&self.coeffs, &rhs.coeffs, P),
        }
    }
}

impl<const P: u64> Neg for FpPoly<P> {
    type Output = Self;
    fn neg(self) -> Self {
        FpPoly {
            coeffs: self.coeffs.iter().map(|&c| modp::neg(c, P)).collect(),
        }
    }
}

impl<const P: u64> fmt::Display for FpPoly<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, c) => write!(f, "{c}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl<const P: u64> fmt::Debug for FpPoly<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<const P: u64> RingOps for FpPoly<P> {
    fn zero() -> Self {
        FpPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::from_coeffs(vec![1])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        Self::from_coeffs(vec![n.rem_euclid(P as i64) as u64])
    }
}

impl<const P: u64> Pid for FpPoly<P> {
    fn ground() -> GroundRing {
        GroundRing::PolyOverFiniteField { p: P }
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let (q, r) = modp::pdivrem(&self.coeffs, &d.coeffs, P);
        (FpPoly { coeffs: q }, FpPoly { coeffs: r })
    }

    fn normalizing_unit(&self) -> Self {
        match self.coeffs.last() {
            None => Self::one(),
            Some(&l) => Self::from_coeffs(vec![modp::inv(l, P)]),
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            Some(Self::from_coeffs(vec![modp::inv(self.coeffs[0], P)]))
        } else {
            None
        }
    }

    fn size(&self) -> u64 {
        self.coeffs.len() as u64
    }

    fn factor(&self) -> Vec<(Self, u32)> {
        if self.coeffs.len() <= 1 {
            return Vec::new();
        }
        let mut out: Vec<(Self, u32)> = modp::factor(&self.coeffs, P)
            .into_iter()
            .map(|(g, m)| (FpPoly { coeffs: g }, m))
            .collect();
        out.sort();
        out
    }

    fn residue_char(_prime: &Self) -> Result<u64> {
        Ok(P)
    }

    fn residue_degree(prime: &Self) -> usize {
        prime.degree().unwrap_or(0)
    }

    fn to_residue(&self, prime: &Self) -> Vec<u64> {
        let mut r = self.div_rem(prime).1.coeffs;
        r.resize(Self::residue_degree(prime), 0);
        r
    }

    fn from_residue(coords: &[u64], _prime: &Self) -> Self {
        Self::from_coeffs(coords.to_vec())
    }

    /// Parses strings such as `t^2+1`, `3t+4` or `0`.
    fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::parse(s, "empty polynomial"));
        }
        if let Some(bad) = s
            .chars()
            .find(|c| !matches!(c, '0'..='9' | 't' | '^' | '+'))
        {
            return Err(Error::parse(&s, format!("unexpected character '{bad}'")));
        }
        let mut coeffs: Vec<u64> = Vec::new();
        for term in s.split('+') {
            let (c, e) = match term.find('t') {
                None => (term, 0usize),
                Some(pos) => {
                    let rest = &term[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|x| x.parse().ok())
                            .ok_or_else(|| Error::parse(term, "bad exponent"))?
                    };
                    (&term[..pos], e)
                }
            };
            let c: u64 = if c.is_empty() && term.contains('t') {
                1
            } else {
                c.parse()
                    .map_err(|_| Error::parse(term, "bad coefficient"))?
            };
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] = modp::add(coeffs[e], c % P, P);
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F2 = FpPoly<2>;
    type F5 = FpPoly<5>;

    #[test]
    fn parse_and_print() {
        let f = F5::parse("3t^2+t+4").unwrap();
        assert_eq!(f.coeffs(), &[4, 1, 3]);
        assert_eq!(f.to_string(), "3t^2+t+4");
        assert_eq!(F2::parse("t^2+1").unwrap().to_string(), "t^2+1");
        assert!(F2::parse("t-1").is_err());
        assert_eq!(F2::parse("0").unwrap(), F2::zero());
    }

    #[test]
    fn factorization_and_residues() {
        // t^2 + 1 = (t+1)^2 over F_2
        let f = F2::parse("t^2+1").unwrap();
        assert_eq!(f.factor(), vec![(F2::parse("t+1").unwrap(), 2)]);
        assert!(F2::t().is_prime());
        let pi = F2::parse("t^2+t+1").unwrap();
        assert!(pi.is_prime());
        assert_eq!(F2::residue_degree(&pi), 2);
        let a = F2::parse("t^3").unwrap();
        // t^3 = 1 mod t^2+t+1
        assert_eq!(a.to_residue(&pi), vec![1, 0]);
    }
}
