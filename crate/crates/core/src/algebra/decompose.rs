use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::ring::{Frac, Pid, RingOps};

/// Splitting of an algebra into blocks `A e_i` along central idempotents.
#[derive(Clone, Debug)]
pub struct Decomposition<R: Pid> {
    pub idempotents: Vec<Vec<Frac<R>>>,
    pub factors: Vec<Algebra<R>>,
    /// Row `k` of `embeddings[i]` is the image of basis element `k` of
    /// factor `i` in the parent's coordinates.
    pub embeddings: Vec<Matrix<Frac<R>>>,
}

const MAX_ATTEMPTS: usize = 64;

/// Primitive central idempotents, summing to one.
///
/// Factors the minimal polynomial of a random central element (coordinates
/// in `{-2, …, 2}` drawn from `seed`), retrying until the element generates
/// the whole center. Needs a factoring algorithm over the fraction field,
/// which only exists in characteristic zero; elsewhere the caller has to
/// supply the idempotents unless the center is one-dimensional.
pub fn central_idempotents<R: Pid>(alg: &Algebra<R>, seed: u64) -> Result<Vec<Vec<Frac<R>>>> {
    let z = alg.center();
    if z.nrows() == 1 {
        return Ok(vec![alg.one().to_vec()]);
    }
    if R::characteristic() != 0 {
        return Err(Error::NeedsSuppliedIdempotents);
    }
    if !alg.is_separable_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let zrows = z.row_vecs();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut c = alg.zero();
        for row in &zrows {
            let k = Frac::from_ring(R::from_i64(rng.gen_range(-2..=2)));
            for (ci, ri) in c.iter_mut().zip(row) {
                *ci = ci.clone() + k.clone() * ri.clone();
            }
        }
        let f = alg.minimal_polynomial(&c);
        if f.len() - 1 < zrows.len() {
            continue;
        }
        let factors = R::factor_over_fraction_field(&f).ok_or(Error::NeedsSuppliedIdempotents)?;
        if factors.len() == 1 {
            return Ok(vec![alg.one().to_vec()]);
        }
        let idems = split_by_factors(alg, &z, &c, &factors)?;
        verify_idempotents(alg, &idems)?;
        return Ok(idems);
    }
    Err(Error::Internal(
        "no random central element generated the center".into(),
    ))
}

/// `Z = ⊕ ker f_i(c)`; the components of `1` in this sum are the idempotents.
fn split_by_factors<R: Pid>(
    alg: &Algebra<R>,
    z: &Matrix<Frac<R>>,
    c: &[Frac<R>],
    factors: &[Vec<Frac<R>>],
) -> Result<Vec<Vec<Frac<R>>>> {
    let zrows = z.row_vecs();
    let mut blocks: Vec<Vec<Vec<Frac<R>>>> = Vec::new();
    for f in factors {
        // f(c) by Horner
        let mut y = alg.zero();
        for coef in f.iter().rev() {
            y = alg.mul(&y, c);
            for (yi, oi) in y.iter_mut().zip(alg.one()) {
                *yi = yi.clone() + coef.clone() * oi.clone();
            }
        }
        // kernel of multiplication by y on Z, in Z-coordinates
        let images: Vec<Vec<Frac<R>>> = zrows.iter().map(|zr| alg.mul(&y, zr)).collect();
        let m = Matrix::from_rows(images, alg.dim())?;
        let ker = m.left_kernel();
        blocks.push(ker.mul(z).row_vecs());
    }
    let all: Vec<Vec<Frac<R>>> = blocks.iter().flatten().cloned().collect();
    if all.len() != zrows.len() {
        return Err(Error::Internal(
            "center does not split along the factors".into(),
        ));
    }
    let stacked = Matrix::from_rows(all, alg.dim())?;
    let coords = stacked
        .solve_left(alg.one())
        .ok_or_else(|| Error::Internal("unit outside the center".into()))?;
    let mut out = Vec::with_capacity(blocks.len());
    let mut off = 0;
    for b in &blocks {
        let mut e = alg.zero();
        for (k, row) in b.iter().enumerate() {
            let a = &coords[off + k];
            for (ei, ri) in e.iter_mut().zip(row) {
                *ei = ei.clone() + a.clone() * ri.clone();
            }
        }
        off += b.len();
        out.push(e);
    }
    Ok(out)
}

/// Central, idempotent, pairwise orthogonal, nonzero and summing to one.
pub fn verify_idempotents<R: Pid>(alg: &Algebra<R>, idems: &[Vec<Frac<R>>]) -> Result<()> {
    let bad = |m: String| Err(Error::BadIdempotents(m));
    if idems.is_empty() {
        return bad("empty idempotent list".into());
    }
    let mut sum = alg.zero();
    for (i, e) in idems.iter().enumerate() {
        if e.len() != alg.dim() {
            return bad(format!("idempotent {i} has the wrong length"));
        }
        if e.iter().all(RingOps::is_zero) {
            return bad(format!("idempotent {i} is zero"));
        }
        if !alg.is_central(e) {
            return bad(format!("idempotent {i} is not central"));
        }
        if alg.mul(e, e) != *e {
            return bad(format!("element {i} is not idempotent"));
        }
        for (j, f) in idems.iter().enumerate().skip(i + 1) {
            if alg.mul(e, f).iter().any(|x| !x.is_zero()) {
                return bad(format!("idempotents {i} and {j} are not orthogonal"));
            }
        }
        for (s, x) in sum.iter_mut().zip(e) {
            *s = s.clone() + x.clone();
        }
    }
    if sum != alg.one() {
        return bad("idempotents do not sum to one".into());
    }
    Ok(())
}

/// Blocks `A e_i` as algebras in their own right.
pub fn decompose<R: Pid>(alg: &Algebra<R>, idems: &[Vec<Frac<R>>]) -> Result<Decomposition<R>> {
    verify_idempotents(alg, idems)?;
    let mut factors = Vec::new();
    let mut embeddings = Vec::new();
    for e in idems {
        let gens: Vec<Vec<Frac<R>>> = (0..alg.dim())
            .map(|j| alg.mul(&alg.basis_vector(j), e))
            .collect();
        let basis = Matrix::from_rows(gens, alg.dim())?.row_space();
        factors.push(alg.subalgebra(&basis, e)?);
        embeddings.push(basis);
    }
    let total: usize = factors.iter().map(Algebra::dim).sum();
    if total != alg.dim() {
        return Err(Error::Internal("block dimensions do not add up".into()));
    }
    Ok(Decomposition {
        idempotents: idems.to_vec(),
        factors,
        embeddings,
    })
}
