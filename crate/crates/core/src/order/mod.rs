//! Orders: full-rank lattices in an algebra that contain 1 and are closed
//! under multiplication.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{hnf_basis, Lattice, Matrix};
use crate::ring::{Frac, Pid};

mod endo;
mod maximal;
mod residue;

pub use endo::{endomorphism_order, valuation_w};
pub(crate) use maximal::candidate_primes;
pub use maximal::{
    certify, idealizer, integral_closure_commutative, is_maximal_at_p, maximal_order,
    p_maximal_order, MaximalOrderOptions, MaximalityCertificate, PrimeCertificate,
};
pub use residue::{
    power_law_holds, radical_mod_p, two_sided_ideals_over_p, IDEAL_ENUMERATION_BOUND,
};

/// An `R`-order in an algebra, stored by the Hermite basis of its lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order<R: Pid> {
    alg: Arc<Algebra<R>>,
    lattice: Lattice<R>,
}

impl<R: Pid> Order<R> {
    /// Checks that the lattice contains 1 and is multiplicatively closed.
    pub fn new(alg: Arc<Algebra<R>>, lattice: Lattice<R>) -> Result<Self> {
        if lattice.dim() != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "lattice of rank {} in an algebra of dimension {}",
                lattice.dim(),
                alg.dim()
            )));
        }
        if !lattice.contains_vector(alg.one()) {
            return Err(Error::NotAnOrder("does not contain 1".into()));
        }
        let inv = lattice.basis().inverse().expect("nonsingular basis");
        let rows = lattice.basis_vectors();
        for (i, a) in rows.iter().enumerate() {
            for (j, b) in rows.iter().enumerate() {
                let c = inv.vec_mul(&alg.mul(a, b));
                if !c.iter().all(Frac::is_integral) {
                    return Err(Error::NotAnOrder(format!(
                        "product of basis elements {i} and {j} leaves the lattice"
                    )));
                }
            }
        }
        Ok(Order { alg, lattice })
    }

    /// Order spanned by the rows of `basis`.
    pub fn from_basis(alg: Arc<Algebra<R>>, basis: &Matrix<Frac<R>>) -> Result<Self> {
        if basis.ncols() != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "basis vectors of length {} in an algebra of dimension {}",
                basis.ncols(),
                alg.dim()
            )));
        }
        let lattice = Lattice::from_generators(basis).map_err(|_| Error::NotFullRank)?;
        Self::new(alg, lattice)
    }

    /// The order spanned by the algebra's own basis.
    pub fn standard(alg: Arc<Algebra<R>>) -> Result<Self> {
        let n = alg.dim();
        Self::new(alg, Lattice::standard(n))
    }

    pub fn algebra(&self) -> &Arc<Algebra<R>> {
        &self.alg
    }

    pub fn lattice(&self) -> &Lattice<R> {
        &self.lattice
    }

    pub fn basis(&self) -> &Matrix<Frac<R>> {
        self.lattice.basis()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Frac<R>>> {
        self.lattice.basis_vectors()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn contains_element(&self, x: &[Frac<R>]) -> bool {
        self.lattice.contains_vector(x)
    }

    /// `other ⊆ self` as lattices.
    pub fn contains(&self, other: &Order<R>) -> bool {
        self.lattice.contains(&other.lattice)
    }

    /// Structure constants in the order basis; integral by the order axioms.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<R>>> {
        let inv = self.basis().inverse().expect("nonsingular basis");
        let rows = self.basis_vectors();
        rows.iter()
            .map(|a| {
                rows.iter()
                    .map(|b| {
                        inv.vec_mul(&self.alg.mul(a, b))
                            .iter()
                            .map(|c| c.to_ring().expect("order is closed"))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// Coordinates of `x` in the order basis.
    pub fn coordinates(&self, x: &[Frac<R>]) -> Vec<Frac<R>> {
        self.lattice.coordinates(x)
    }

    /// `Λ ∩ Z(A)`, as basis rows in algebra coordinates.
    pub fn center_lattice(&self) -> Matrix<Frac<R>> {
        crate::exactlin::purify(&self.alg.center(), &self.lattice)
    }
}

/// Which side(s) of the order stabilize an ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// A full-rank lattice in the algebra stable under the order on the given
/// side(s).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeIdeal<R: Pid> {
    lattice: Lattice<R>,
    side: Side,
}

impl<R: Pid> LatticeIdeal<R> {
    pub fn new(order: &Order<R>, lattice: Lattice<R>, side: Side) -> Result<Self> {
        let ok_left = matches!(side, Side::Right)
            || lattice_product(order.algebra(), order.lattice(), &lattice)
                .is_ok_and(|p| lattice.contains(&p));
        let ok_right = matches!(side, Side::Left)
            || lattice_product(order.algebra(), &lattice, order.lattice())
                .is_ok_and(|p| lattice.contains(&p));
        if !(ok_left && ok_right) {
            return Err(Error::NotSublattice);
        }
        Ok(LatticeIdeal { lattice, side })
    }

    pub(crate) fn new_unchecked(lattice: Lattice<R>, side: Side) -> Self {
        LatticeIdeal { lattice, side }
    }

    pub fn lattice(&self) -> &Lattice<R> {
        &self.lattice
    }

    pub fn side(&self) -> Side {
        self.side
    }
}

/// The lattice spanned by all products `ab`.
pub fn lattice_product<R: Pid>(
    alg: &Algebra<R>,
    a: &Lattice<R>,
    b: &Lattice<R>,
) -> Result<Lattice<R>> {
    let prods: Vec<Vec<Frac<R>>> = a
        .basis_vectors()
        .iter()
        .flat_map(|x| b.basis_vectors().into_iter().map(move |y| alg.mul(x, &y)))
        .collect();
    Lattice::from_generators(&Matrix::from_rows(prods, alg.dim())?)
}

/// `I^k` for `k ≥ 1`; `I^0` is taken to be the order itself.
pub fn lattice_power<R: Pid>(order: &Order<R>, ideal: &Lattice<R>, k: u32) -> Result<Lattice<R>> {
    let mut acc = order.lattice().clone();
    for _ in 0..k {
        acc = lattice_product(order.algebra(), &acc, ideal)?;
    }
    Ok(acc)
}

/// Checks integrality of `x` through the characteristic polynomial of its
/// left multiplication.
fn check_integral<R: Pid>(alg: &Algebra<R>, x: &[Frac<R>]) -> Result<()> {
    let cp = alg.left_matrix(x).charpoly();
    if let Some(c) = cp.iter().find(|c| !c.is_integral()) {
        return Err(Error::NotIntegral {
            element: format_coords(x),
            coefficient: c.to_string(),
        });
    }
    Ok(())
}

pub(crate) fn format_coords<R: Pid>(x: &[Frac<R>]) -> String {
    let parts: Vec<String> = x.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

const CLOSURE_ROUNDS: usize = 64;

/// Smallest order containing the generators (and 1).
///
/// Iterates `L ← L + L·L` from the span of the generators. Every new basis
/// element is tested for integrality, so generators that do not lie in a
/// common order are reported instead of looping.
pub fn order_closure<R: Pid>(alg: Arc<Algebra<R>>, gens: &[Vec<Frac<R>>]) -> Result<Order<R>> {
    let n = alg.dim();
    for g in gens {
        if g.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "generator of length {} in dimension {n}",
                g.len()
            )));
        }
        check_integral(&alg, g)?;
    }
    let mut rows = gens.to_vec();
    rows.push(alg.one().to_vec());
    let mut basis = hnf_basis(&Matrix::from_rows(rows, n)?);
    for _ in 0..CLOSURE_ROUNDS {
        let cur = basis.row_vecs();
        let mut all = cur.clone();
        for a in &cur {
            for b in &cur {
                all.push(alg.mul(a, b));
            }
        }
        let next = hnf_basis(&Matrix::from_rows(all, n)?);
        if next == basis {
            if basis.nrows() < n {
                return Err(Error::NotFullRank);
            }
            let lattice = Lattice::from_generators(&basis)?;
            return Order::new(alg, lattice);
        }
        for row in next.row_vecs() {
            check_integral(&alg, &row)?;
        }
        basis = next;
    }
    Err(Error::Internal("order closure did not stabilize".into()))
}

/// Determinant of the trace form on the order basis.
///
/// Zero exactly when the trace form of the algebra is degenerate.
pub fn discriminant<R: Pid>(o: &Order<R>) -> R {
    o.alg
        .trace_gram(&o.basis_vectors())
        .det()
        .to_ring()
        .expect("trace form of an order is integral")
}
