//! Endomorphism orders of lattices and the valuation on a division algebra.

use std::sync::Arc;

use super::Order;
use crate::algebra::{Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::exactlin::{integral_preimage, Lattice, Matrix};
use crate::ring::{valuation, Frac, Integer, Pid, Rational, RingOps};

/// `End_Δ(M) = {x ∈ Mat_r(D) : xM ⊆ M}` for a lattice `M ⊂ D^r`.
///
/// Vectors of `D^r` are columns `(v_1, …, v_r)` stored as `r` consecutive
/// blocks of `D`-coordinates, and `M` is first replaced by the right
/// `Δ`-module `MΔ` it generates. The result lives in
/// [`Algebra::matrix_over`]`(D, r)`.
pub fn endomorphism_order<R: Pid>(delta: &Order<R>, m: &Lattice<R>, r: usize) -> Result<Order<R>> {
    let d = delta.algebra();
    let dd = d.dim();
    if r == 0 || m.dim() != r * dd {
        return Err(Error::DimensionMismatch(format!(
            "lattice of rank {} in D^{r} with dim D = {dd}",
            m.dim()
        )));
    }
    let block_mul = |v: &[Frac<R>], x: &[Frac<R>]| -> Vec<Frac<R>> {
        v.chunks(dd).flat_map(|vj| d.mul(vj, x)).collect()
    };
    let mut gens = m.basis_vectors();
    for v in m.basis_vectors() {
        for x in delta.basis_vectors() {
            gens.push(block_mul(&v, &x));
        }
    }
    let mm = Lattice::from_rows(gens, r * dd)?;
    let beta = mm.basis_vectors();
    let big = Arc::new(Algebra::matrix_over(d, r));
    let n = big.dim();
    // basis element (i, j, k) = d_k at position (i, j): component i of the
    // image of v is d_k v_j
    let rows: Vec<Vec<Frac<R>>> = (0..n)
        .map(|a| {
            let (i, j, k) = (a / (r * dd), (a / dd) % r, a % dd);
            let dk = d.basis_vector(k);
            beta.iter()
                .flat_map(|v| {
                    let mut img = vec![Frac::zero(); r * dd];
                    let prod = d.mul(&dk, &v[j * dd..(j + 1) * dd]);
                    img[i * dd..(i + 1) * dd].clone_from_slice(&prod);
                    mm.coordinates(&img)
                })
                .collect()
        })
        .collect();
    let lattice = integral_preimage(&Matrix::from_rows(rows, beta.len() * r * dd)?)?;
    Order::new(big, lattice)
}

/// `w(a) = v_p(Nrd(a)) / n` on a central simple algebra of dimension `n²`.
///
/// The norm of the regular representation is `Nrd(a)^n`, so this equals
/// `v_p(det L(a)) / n²` and no root has to be extracted.
pub fn valuation_w<R: Pid>(a: &AlgebraElement<R>, p: &R) -> Result<Rational> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let prime = super::residue::check_prime(p)?;
    let alg = a.algebra();
    let dim = alg.dim();
    if alg.center().nrows() != 1 {
        return Err(Error::NotCentralSimple(
            "center is larger than the ground field".into(),
        ));
    }
    let n = (1..=dim).find(|k| k * k >= dim).unwrap_or(1);
    if n * n != dim {
        return Err(Error::NotCentralSimple(format!(
            "dimension {dim} is not a square"
        )));
    }
    let det = a.regular_representation().det();
    if det.is_zero() {
        return Err(Error::Unsupported("valuation of a zero divisor".into()));
    }
    let v = |x: &R| valuation(x, &prime).expect("nonzero") as i64;
    let num = v(det.num()) - v(det.den());
    Ok(Frac::new(Integer::from(num), Integer::from((n * n) as i64)))
}
