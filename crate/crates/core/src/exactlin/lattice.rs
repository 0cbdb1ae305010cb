use super::normal_form::{hnf, snf};
use super::Matrix;
use crate::error::{Error, Result};
use crate::ring::{Field, Frac, Pid, RingOps};

/// Full-rank `R`-lattice in `K^n`, stored by its row-style Hermite basis.
///
/// The basis is canonical: two lattices are equal exactly when their bases
/// are identical, so the derived `PartialEq` is lattice equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice<R: Pid> {
    basis: Matrix<Frac<R>>,
}

/// Hermite basis (nonzero rows only) of the `R`-span of the rows of `gens`.
pub fn hnf_basis<R: Pid>(gens: &Matrix<Frac<R>>) -> Matrix<Frac<R>> {
    let d = gens.common_denominator();
    let scaled = gens.map(|x| x.clone() * Frac::from_ring(d.clone()));
    let h = hnf(&scaled.to_ring().expect("denominators cleared"));
    let dinv = Frac::from_ring(d).inv();
    let rank = h.rank();
    Matrix::from_fn(rank, gens.ncols(), |i, j| {
        Frac::from_ring(h.h[(i, j)].clone()) * dinv.clone()
    })
}

impl<R: Pid> Lattice<R> {
    /// The lattice spanned by the rows of `gens`.
    pub fn from_generators(gens: &Matrix<Frac<R>>) -> Result<Self> {
        let basis = hnf_basis(gens);
        if basis.nrows() != gens.ncols() {
            return Err(Error::RankDeficient);
        }
        Ok(Lattice { basis })
    }

    pub fn from_rows(rows: Vec<Vec<Frac<R>>>, dim: usize) -> Result<Self> {
        Self::from_generators(&Matrix::from_rows(rows, dim)?)
    }

    /// `R^n`.
    pub fn standard(n: usize) -> Self {
        Lattice {
            basis: Matrix::identity(n),
        }
    }

    pub fn basis(&self) -> &Matrix<Frac<R>> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Frac<R>>> {
        self.basis.row_vecs()
    }

    /// Coordinates of `v` in the lattice basis.
    pub fn coordinates(&self, v: &[Frac<R>]) -> Vec<Frac<R>> {
        self.basis
            .solve_left(v)
            .expect("full-rank basis spans the ambient space")
    }

    pub fn contains_vector(&self, v: &[Frac<R>]) -> bool {
        self.coordinates(v).iter().all(Frac::is_integral)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Lattice<R>) -> bool {
        let inv = self.basis.inverse().expect("nonsingular basis");
        other.basis.mul(&inv).is_integral()
    }

    /// Determinant of the basis, normalized by a unit of `R`.
    pub fn det(&self) -> Frac<R> {
        let d = (0..self.dim()).fold(Frac::one(), |acc, i| acc * self.basis[(i, i)].clone());
        let u = d.num().normalizing_unit();
        Frac::from_ring(u) * d
    }

    pub fn sum(&self, other: &Lattice<R>) -> Lattice<R> {
        Lattice {
            basis: hnf_basis(&self.basis.vstack(&other.basis)),
        }
    }

    pub fn intersection(&self, other: &Lattice<R>) -> Lattice<R> {
        // c ∈ R^n with c * B1 * B2^{-1} ∈ R^n
        let n = self.dim();
        let m = self
            .basis
            .mul(&other.basis.inverse().expect("nonsingular basis"));
        let cond = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                if i == j {
                    Frac::one()
                } else {
                    Frac::zero()
                }
            } else {
                m[(i, j - n)].clone()
            }
        });
        let coeffs = integral_preimage(&cond).expect("identity block has full row rank");
        Lattice::from_generators(&coeffs.basis.mul(&self.basis)).expect("full rank")
    }

    pub fn scale(&self, c: &Frac<R>) -> Lattice<R> {
        assert!(!c.is_zero(), "scaling a lattice by zero");
        Lattice::from_generators(&self.basis.scale(c)).expect("full rank")
    }

    /// Image under a nonsingular linear map given as a matrix acting on row
    /// vectors.
    pub fn transform(&self, m: &Matrix<Frac<R>>) -> Result<Lattice<R>> {
        Lattice::from_generators(&self.basis.mul(m))
    }
}

/// `{c ∈ K^n : c * m ∈ R^k}` for a matrix `m` of full row rank `n`.
pub fn integral_preimage<R: Pid>(m: &Matrix<Frac<R>>) -> Result<Lattice<R>> {
    let n = m.nrows();
    let d = m.common_denominator();
    let scaled = m
        .map(|x| x.clone() * Frac::from_ring(d.clone()))
        .to_ring()
        .expect("denominators cleared");
    let s = snf(&scaled);
    let inv = s.invariant_factors();
    if inv.len() < n {
        return Err(Error::RankDeficient);
    }
    let gens = Matrix::from_fn(n, n, |i, j| {
        Frac::new(d.clone(), inv[i].clone()) * Frac::from_ring(s.u[(i, j)].clone())
    });
    Lattice::from_generators(&gens)
}

/// Generalized index `[sup : sub]` as `det(sub) / det(sup)`, normalized.
pub fn lattice_index<R: Pid>(sub: &Lattice<R>, sup: &Lattice<R>) -> Result<R> {
    if sub.dim() != sup.dim() {
        return Err(Error::DimensionMismatch(
            "lattices of different rank".into(),
        ));
    }
    if !sup.contains(sub) {
        return Err(Error::NotSublattice);
    }
    let q = sub.det() * sup.det().inv();
    Ok(q.to_ring()
        .expect("index of a sublattice is integral")
        .normalized())
}

/// Smallest sublattice of `ambient` containing `gens` with torsion-free
/// quotient. The generators must span the ambient space and lie in the
/// ambient lattice.
pub fn saturate<R: Pid>(gens: &Matrix<Frac<R>>, ambient: &Lattice<R>) -> Result<Lattice<R>> {
    let l = Lattice::from_generators(gens)?;
    if !ambient.contains(&l) {
        return Err(Error::NotSublattice);
    }
    let pure = purify(gens, ambient);
    Lattice::from_generators(&pure)
}

/// `ambient ∩ span_K(gens)` for arbitrary (possibly rank-deficient)
/// generators, returned as a Hermite basis in ambient coordinates.
pub fn purify<R: Pid>(gens: &Matrix<Frac<R>>, ambient: &Lattice<R>) -> Matrix<Frac<R>> {
    let n = ambient.dim();
    let inv = ambient.basis().inverse().expect("nonsingular basis");
    let coords = gens.mul(&inv);
    let ker = coords.right_kernel();
    if ker.nrows() == 0 {
        return ambient.basis().clone();
    }
    // c ∈ R^n with c * ker^T = 0
    let cond = ker.transpose();
    let d = cond.common_denominator();
    let cond = cond
        .map(|x| x.clone() * Frac::from_ring(d.clone()))
        .to_ring()
        .expect("denominators cleared");
    let kernel = ring_left_kernel(&cond);
    if kernel.nrows() == 0 {
        return Matrix::zeros(0, n);
    }
    hnf_basis(&kernel.to_frac().mul(ambient.basis()))
}

/// Basis over `R` of `{c ∈ R^k : c * m = 0}`.
pub fn ring_left_kernel<R: Pid>(m: &Matrix<R>) -> Matrix<R> {
    let h = hnf(m);
    let rank = h.rank();
    let idx: Vec<usize> = (rank..m.nrows()).collect();
    h.u.select_rows(&idx)
}

/// Whether `v` lies in the `R`-span of the rows of `gens`.
pub fn in_row_span<R: Pid>(gens: &Matrix<R>, v: &[R]) -> bool {
    let h = hnf(gens);
    let mut v = v.to_vec();
    for (i, &pc) in h.pivots.iter().enumerate() {
        let pivot = &h.h[(i, pc)];
        let (q, r) = v[pc].div_rem(pivot);
        if !r.is_zero() {
            return false;
        }
        if !q.is_zero() {
            for (j, x) in v.iter_mut().enumerate() {
                *x = x.clone() - q.clone() * h.h[(i, j)].clone();
            }
        }
    }
    v.iter().all(RingOps::is_zero)
}
