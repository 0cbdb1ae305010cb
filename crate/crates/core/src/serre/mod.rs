//! The tensor construction `M ⊗_O A` for a right `O`-module `M` and an
//! abelian variety `A` with `O ⊂ End(A)`.
//!
//! Abelian varieties are modelled by their isogeny type (simple factors with
//! endomorphism algebras and multiplicities) and, for integral questions, by
//! a period lattice carrying an `O`-action.

use std::collections::BTreeSet;
use std::ops::Range;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::order::Order;
use crate::ring::{Integer, Rational};

mod lattice;

pub use lattice::{
    check_naturality, induced_map, minimal_isogeny, tensor_lattice, InducedMap, IsogenyDescriptor,
    KernelAtPrime, PeriodLattice, TensorLattice,
};

/// One simple factor `B_i^{n_i}` of an isogeny type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyFactor {
    pub label: String,
    /// Dimension of `B_i`.
    pub dim: usize,
    /// `D_i = End⁰(B_i)`.
    pub endo: Arc<Algebra<Integer>>,
    pub mult: usize,
}

/// `[∏ B_i^{n_i}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyType {
    factors: Vec<IsogenyFactor>,
}

/// Largest `s · dim E` handled by [`tensor_isogeny_class`].
pub const TENSOR_SIZE_BOUND: usize = 4096;

impl IsogenyType {
    pub fn new(factors: Vec<IsogenyFactor>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for f in &factors {
            if !seen.insert(f.label.as_str()) {
                return Err(Error::parse(
                    "factors",
                    format!("duplicate label {}", f.label),
                ));
            }
            if f.dim == 0 {
                return Err(Error::parse(
                    "factors",
                    format!("factor {} has dimension 0", f.label),
                ));
            }
        }
        Ok(IsogenyType { factors })
    }

    pub fn factors(&self) -> &[IsogenyFactor] {
        &self.factors
    }

    /// `Σ n_i dim B_i`.
    pub fn dimension(&self) -> usize {
        self.factors.iter().map(|f| f.mult * f.dim).sum()
    }

    /// Same factors with new multiplicities.
    pub fn with_multiplicities(&self, mults: &[usize]) -> Self {
        let factors = self
            .factors
            .iter()
            .zip(mults)
            .map(|(f, &m)| IsogenyFactor {
                mult: m,
                ..f.clone()
            })
            .collect();
        IsogenyType { factors }
    }

    /// `E = ∏ Mat_{n_i}(D_i)` over the factors with `n_i > 0`, and the
    /// coordinate range of each factor's block (empty when `n_i = 0`).
    pub fn endomorphism_algebra(&self) -> (Algebra<Integer>, Vec<Range<usize>>) {
        let mut parts = Vec::new();
        let mut ranges = Vec::new();
        let mut off = 0;
        for f in &self.factors {
            if f.mult == 0 {
                ranges.push(off..off);
                continue;
            }
            let block = Algebra::matrix_over(&f.endo, f.mult);
            ranges.push(off..off + block.dim());
            off += block.dim();
            parts.push(block);
        }
        if parts.is_empty() {
            return (zero_algebra(), ranges);
        }
        (Algebra::product(&parts), ranges)
    }
}

fn zero_algebra() -> Algebra<Integer> {
    Algebra::new(Vec::new(), Vec::new(), Vec::new()).expect("the zero algebra is valid")
}

/// A right `O`-module `M = O^s / Σ ρ_i O` given by relation rows `ρ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    order: Order<Integer>,
    s: usize,
    /// `alpha[i][j]` is `ρ_ij` in algebra coordinates.
    alpha: Vec<Vec<Vec<Rational>>>,
}

impl ModulePresentation {
    pub fn new(order: Order<Integer>, s: usize, alpha: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = order.dim();
        for (i, row) in alpha.iter().enumerate() {
            if row.len() != s {
                return Err(Error::DimensionMismatch(format!(
                    "relation {i} has {} entries for {s} generators",
                    row.len()
                )));
            }
            for (j, x) in row.iter().enumerate() {
                if x.len() != n {
                    return Err(Error::DimensionMismatch(format!(
                        "entry ({i}, {j}) has {} coordinates in an algebra of dimension {n}",
                        x.len()
                    )));
                }
                if !order.contains_element(x) {
                    return Err(Error::InputNotIntegral(format!(
                        "entry ({i}, {j}) does not lie in the order"
                    )));
                }
            }
        }
        Ok(ModulePresentation { order, s, alpha })
    }

    /// The free module `O^s`.
    pub fn free(order: Order<Integer>, s: usize) -> Self {
        ModulePresentation {
            order,
            s,
            alpha: Vec::new(),
        }
    }

    pub fn order(&self) -> &Order<Integer> {
        &self.order
    }

    /// Number of generators.
    pub fn generators(&self) -> usize {
        self.s
    }

    /// Number of relations.
    pub fn relations(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[Vec<Vec<Rational>>] {
        &self.alpha
    }
}

/// Coordinates of an order element in the order basis.
pub(crate) fn order_coords(o: &Order<Integer>, x: &[Rational]) -> Vec<Integer> {
    o.coordinates(x)
        .into_iter()
        .map(|c| c.to_ring().expect("element of the order"))
        .collect()
}

/// Checks that `psi` (row `a` = image of algebra basis element `a`) is an
/// injective unital algebra map into `e`.
pub(crate) fn check_embedding(
    src: &Algebra<Integer>,
    e: &Algebra<Integer>,
    psi: &Matrix<Rational>,
) -> Result<()> {
    let bad = |m: String| Err(Error::EmbeddingNotAlgebraMap(m));
    if psi.nrows() != src.dim() || psi.ncols() != e.dim() {
        return bad(format!(
            "expected a {} x {} matrix, got {} x {}",
            src.dim(),
            e.dim(),
            psi.nrows(),
            psi.ncols()
        ));
    }
    if psi.vec_mul(src.one()) != e.one() {
        return bad("unit is not mapped to the unit".into());
    }
    for a in 0..src.dim() {
        for b in 0..src.dim() {
            let lhs = psi.vec_mul(&src.mul(&src.basis_vector(a), &src.basis_vector(b)));
            let rhs = e.mul(psi.row(a), psi.row(b));
            if lhs != rhs {
                return bad(format!(
                    "product of basis elements {a} and {b} is not preserved"
                ));
            }
        }
    }
    if psi.rank() != src.dim() {
        return bad("map is not injective".into());
    }
    Ok(())
}

/// Isogeny type of `M ⊗_O A`.
///
/// With `E = End⁰(A) = ∏ Mat_{n_i}(D_i)` and `W = M ⊗_O E = E^s / Σ ψ(ρ_i) E`,
/// the block `W ε_i` is a sum of `m_i` copies of the minimal right ideal of
/// `Mat_{n_i}(D_i)`, which has dimension `n_i dim D_i`. `embedding` gives
/// the images of the algebra basis of `O ⊗ Q` in `E`.
pub fn tensor_isogeny_class(
    m: &ModulePresentation,
    ty: &IsogenyType,
    embedding: &Matrix<Rational>,
) -> Result<IsogenyType> {
    if ty.dimension() == 0 {
        return Ok(ty.clone());
    }
    let (e, ranges) = ty.endomorphism_algebra();
    let src = m.order.algebra();
    check_embedding(src, &e, embedding)?;
    let s = m.s;
    let size = s * e.dim();
    if size > TENSOR_SIZE_BOUND {
        return Err(Error::DimensionTooLarge(size, TENSOR_SIZE_BOUND));
    }
    let images: Vec<Vec<Vec<Rational>>> = m
        .alpha
        .iter()
        .map(|row| row.iter().map(|x| embedding.vec_mul(x)).collect())
        .collect();
    let mut mults = Vec::with_capacity(ty.factors.len());
    for (f, range) in ty.factors.iter().zip(&ranges) {
        let block = range.len();
        if block == 0 {
            mults.push(0);
            continue;
        }
        let width = s * block;
        let mut rows = Vec::new();
        for rho in &images {
            for k in range.clone() {
                let b = e.basis_vector(k);
                let v: Vec<Rational> = rho
                    .iter()
                    .flat_map(|x| e.mul(x, &b)[range.clone()].to_vec())
                    .collect();
                rows.push(v);
            }
        }
        let rank = if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(rows, width)?.rank()
        };
        let w = width - rank;
        let ideal = f.mult * f.endo.dim();
        if !w.is_multiple_of(ideal) {
            return Err(Error::Internal(format!(
                "block {} has dimension {w}, not a multiple of {ideal}",
                f.label
            )));
        }
        mults.push(w / ideal);
    }
    Ok(ty.with_multiplicities(&mults))
}

/// `dim(M ⊗_O A) = Σ m_i dim B_i`.
pub fn tensor_dimension(ty: &IsogenyType) -> usize {
    ty.dimension()
}
