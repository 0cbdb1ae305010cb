//! Algebras over a prime field `F_p`, used for residue rings `Λ/pΛ`.

use crate::error::{Error, Result};
use crate::ring::modp;

/// Finite-dimensional `F_p`-algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpAlgebra {
    p: u64,
    consts: Vec<Vec<Vec<u64>>>,
    one: Vec<u64>,
}

impl FpAlgebra {
    pub fn new(p: u64, consts: Vec<Vec<Vec<u64>>>, one: Vec<u64>) -> Self {
        FpAlgebra { p, consts, one }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.one.len()
    }

    pub fn one(&self) -> &[u64] {
        &self.one
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let (n, p) = (self.dim(), self.p);
        let mut out = vec![0u64; n];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let c = modp::mul(a, b, p);
                for (o, &s) in out.iter_mut().zip(&self.consts[i][j]) {
                    if s != 0 {
                        *o = modp::add(*o, modp::mul(c, s, p), p);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = self.one.clone();
        let mut b = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Left multiplication by `x`; entry `(k, j)` is coordinate `k` of `x b_j`.
    pub fn left_matrix(&self, x: &[u64]) -> Vec<Vec<u64>> {
        let n = self.dim();
        let cols: Vec<Vec<u64>> = (0..n).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        (0..n)
            .map(|k| (0..n).map(|j| cols[j][k]).collect())
            .collect()
    }

    /// Jacobson radical, by iterated traces of `p`-power lifts.
    ///
    /// With `I_{-1} = A` and `g_i(x) = Tr(L̃(x)^{p^i}) / p^i mod p` computed on
    /// an integer lift of the regular representation, each
    /// `I_i = {x ∈ I_{i-1} : g_i(xy) = 0 for all y}` is an ideal, and
    /// `I_l` with `p^l ≤ dim < p^{l+1}` is the radical. The plain trace form
    /// (`i = 0` alone) is only correct when `p > dim`.
    pub fn radical(&self) -> Result<Vec<Vec<u64>>> {
        let (n, p) = (self.dim(), self.p);
        let mut ideal: Vec<Vec<u64>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let mut level = 0u32;
        let mut pl: u64 = 1;
        loop {
            if ideal.is_empty() {
                break;
            }
            let rows: Vec<Vec<u64>> = ideal
                .iter()
                .map(|v| {
                    (0..n)
                        .map(|j| self.lifted_trace(&self.mul(v, &self.basis_vector(j)), level))
                        .collect::<Result<Vec<u64>>>()
                })
                .collect::<Result<_>>()?;
            let ker = modp::left_kernel(&rows, n, p);
            let next: Vec<Vec<u64>> = ker.iter().map(|c| combine(c, &ideal, n, p)).collect();
            ideal = modp::span_basis(&next, p);
            match pl.checked_mul(p) {
                Some(q) if q <= n as u64 => {
                    pl = q;
                    level += 1;
                }
                _ => break,
            }
        }
        Ok(ideal)
    }

    /// `Tr(L̃(x)^{p^i}) / p^i mod p`, computed modulo `p^{i+1}`.
    fn lifted_trace(&self, x: &[u64], i: u32) -> Result<u64> {
        let p = self.p;
        let modulus = p.pow(i + 1);
        let mut m = self.left_matrix(x);
        for _ in 0..i {
            // raise to the p-th power
            let base = m.clone();
            for _ in 1..p {
                m = mat_mul_mod(&m, &base, modulus);
            }
        }
        let tr = (0..m.len()).fold(0u64, |acc, k| (acc + m[k][k]) % modulus);
        let pi = p.pow(i);
        if tr % pi != 0 {
            return Err(Error::Internal(format!(
                "trace of a {}-th power is not divisible by {pi}",
                pi
            )));
        }
        Ok((tr / pi) % p)
    }

    /// Basis of the center `{x : x b_j = b_j x}`.
    pub fn center(&self) -> Vec<Vec<u64>> {
        let (n, p) = (self.dim(), self.p);
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|a| {
                (0..n)
                    .flat_map(|j| (0..n).map(move |k| (j, k)))
                    .map(|(j, k)| modp::sub(self.consts[a][j][k], self.consts[j][a][k], p))
                    .collect()
            })
            .collect();
        let ker = modp::left_kernel(&rows, n * n, p);
        modp::span_basis(&ker, p)
    }

    /// Quotient by a two-sided ideal, with a complement of the ideal as the
    /// lifts of the quotient basis.
    pub fn quotient(&self, ideal: &[Vec<u64>]) -> Result<Quotient> {
        let (n, p) = (self.dim(), self.p);
        let ideal = modp::span_basis(ideal, p);
        let lifts = modp::complement(&ideal, n, p);
        let mut q = Quotient {
            alg: FpAlgebra::new(p, Vec::new(), Vec::new()),
            lifts,
            ideal,
        };
        let consts = q
            .lifts
            .iter()
            .map(|a| {
                q.lifts
                    .iter()
                    .map(|b| q.project(&self.mul(a, b)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let one = q.project(&self.one)?;
        q.alg = FpAlgebra::new(p, consts, one);
        Ok(q)
    }

    /// Number of primitive idempotents of the commutative subalgebra spanned
    /// by `sub` (given in this algebra's coordinates, assumed reduced): the
    /// dimension of the fixed space of Frobenius.
    pub fn count_primitive_idempotents(&self, sub: &[Vec<u64>]) -> Result<usize> {
        Ok(self.frobenius_fixed(sub)?.len())
    }

    /// Basis of `{z ∈ span(sub) : z^p = z}`.
    fn frobenius_fixed(&self, sub: &[Vec<u64>]) -> Result<Vec<Vec<u64>>> {
        let (n, p) = (self.dim(), self.p);
        let sub = modp::span_basis(sub, p);
        let k = sub.len();
        let rows: Vec<Vec<u64>> = sub
            .iter()
            .enumerate()
            .map(|(a, v)| {
                let c = modp::solve_in_span(&sub, &self.pow(v, p), p)
                    .ok_or_else(|| Error::Internal("subspace not closed under powers".into()))?;
                Ok((0..k)
                    .map(|b| modp::sub(c[b], u64::from(a == b), p))
                    .collect())
            })
            .collect::<Result<_>>()?;
        let ker = modp::left_kernel(&rows, k, p);
        Ok(ker.iter().map(|c| combine(c, &sub, n, p)).collect())
    }

    /// Primitive idempotents of a reduced commutative subalgebra containing 1.
    pub fn primitive_idempotents(&self, sub: &[Vec<u64>]) -> Result<Vec<Vec<u64>>> {
        let p = self.p;
        let fixed = self.frobenius_fixed(sub)?;
        let mut idems = vec![self.one.clone()];
        for b in &fixed {
            let mut next = Vec::new();
            for e in &idems {
                for a in 0..p {
                    // indicator of b = a: 1 - (b - a)^{p-1}
                    let mut shifted = b.clone();
                    for (s, o) in shifted.iter_mut().zip(&self.one) {
                        *s = modp::sub(*s, modp::mul(a, *o, p), p);
                    }
                    let pw = self.pow(&shifted, p - 1);
                    let ind: Vec<u64> = self
                        .one
                        .iter()
                        .zip(&pw)
                        .map(|(o, w)| modp::sub(*o, *w, p))
                        .collect();
                    let f = self.mul(e, &ind);
                    if f.iter().any(|&x| x != 0) {
                        next.push(f);
                    }
                }
            }
            idems = next;
        }
        if idems.len() != fixed.len() {
            return Err(Error::Internal(format!(
                "found {} idempotents for a split part of dimension {}",
                idems.len(),
                fixed.len()
            )));
        }
        Ok(idems)
    }
}

/// Quotient of an [`FpAlgebra`] by a two-sided ideal.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub alg: FpAlgebra,
    /// Preimages of the quotient basis.
    pub lifts: Vec<Vec<u64>>,
    /// Echelon basis of the ideal.
    pub ideal: Vec<Vec<u64>>,
}

impl Quotient {
    /// Coordinates of the image of `v` in the quotient.
    pub fn project(&self, v: &[u64]) -> Result<Vec<u64>> {
        let p = self.alg.p;
        let mut full = self.lifts.clone();
        full.extend(self.ideal.iter().cloned());
        let c = modp::solve_in_span(&full, v, p)
            .ok_or_else(|| Error::Internal("complement does not span".into()))?;
        Ok(c[..self.lifts.len()].to_vec())
    }

    /// A preimage of quotient coordinates `c`.
    pub fn lift(&self, c: &[u64]) -> Vec<u64> {
        let n = self
            .lifts
            .first()
            .or(self.ideal.first())
            .map_or(0, Vec::len);
        combine(c, &self.lifts, n, self.alg.p)
    }
}

fn combine(c: &[u64], vectors: &[Vec<u64>], n: usize, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; n];
    for (a, v) in c.iter().zip(vectors) {
        if *a == 0 {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o = modp::add(*o, modp::mul(*a, *x, p), p);
        }
    }
    out
}

fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i][k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = (out[i][j] + x * b[k][j]) % m;
            }
        }
    }
    out
}
