//! Period lattices with an order action, `M ⊗_O T`, and minimal isogenies.

use std::collections::BTreeMap;

use super::{order_coords, IsogenyType, ModulePresentation};
use crate::error::{Error, Result};
use crate::exactlin::{in_row_span, snf, Lattice, Matrix};
use crate::order::Order;
use crate::ring::{Integer, Pid, Rational, RingOps};

/// A lattice `T ⊂ Q^k` with a left action of an order, standing in for a
/// Tate module.
///
/// The action is stored as the matrices (acting on column vectors of `Q^k`)
/// of the algebra's basis elements, so any element of `O ⊗ Q` acts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodLattice {
    order: Order<Integer>,
    /// `None` models `∏_ℓ T_ℓ` at once.
    prime: Option<Integer>,
    lattice: Lattice<Integer>,
    action: Vec<Matrix<Rational>>,
}

impl PeriodLattice {
    /// `mats[a]` is the action of `gens[a]`; the generators must form a
    /// basis of the algebra.
    pub fn new(
        order: Order<Integer>,
        lattice: Lattice<Integer>,
        gens: &[Vec<Rational>],
        mats: &[Matrix<Rational>],
        prime: Option<Integer>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::ActionMismatch(m));
        let n = order.dim();
        let k = lattice.dim();
        if gens.len() != n || mats.len() != n {
            return bad(format!("expected {n} action matrices, got {}", mats.len()));
        }
        if let Some(m) = mats.iter().find(|m| m.nrows() != k || m.ncols() != k) {
            return bad(format!(
                "action matrix of shape {}x{} on a lattice of rank {k}",
                m.nrows(),
                m.ncols()
            ));
        }
        let g = Matrix::from_rows(gens.to_vec(), n)?;
        let ginv = g
            .inverse()
            .ok_or_else(|| Error::ActionMismatch("generators do not span the algebra".into()))?;
        // e_k = Σ_a ginv[k][a] gens[a]
        let action: Vec<Matrix<Rational>> = (0..n)
            .map(|kk| {
                (0..n).fold(Matrix::zeros(k, k), |acc, a| {
                    acc.add(&mats[a].scale(&ginv[(kk, a)]))
                })
            })
            .collect();
        let t = PeriodLattice {
            order,
            prime,
            lattice,
            action,
        };
        t.validate()?;
        Ok(t)
    }

    /// Action given on the order's own basis.
    pub fn with_order_action(
        order: Order<Integer>,
        lattice: Lattice<Integer>,
        mats: &[Matrix<Rational>],
        prime: Option<Integer>,
    ) -> Result<Self> {
        let gens = order.basis_vectors();
        Self::new(order, lattice, &gens, mats, prime)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::ActionMismatch(m));
        let alg = self.order.algebra().clone();
        let k = self.lattice.dim();
        if self.ambient_action(alg.one()) != Matrix::identity(k) {
            return bad("the unit does not act as the identity".into());
        }
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let prod = alg.mul(&alg.basis_vector(a), &alg.basis_vector(b));
                if self.ambient_action(&prod) != self.action[a].mul(&self.action[b]) {
                    return bad(format!(
                        "basis elements {a} and {b} do not act multiplicatively"
                    ));
                }
            }
        }
        for (i, l) in self.order.basis_vectors().iter().enumerate() {
            if !self.coord_action(l).is_integral() {
                return bad(format!(
                    "order basis element {i} does not preserve the lattice"
                ));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> &Order<Integer> {
        &self.order
    }

    pub fn prime(&self) -> Option<&Integer> {
        self.prime.as_ref()
    }

    pub fn lattice(&self) -> &Lattice<Integer> {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.dim()
    }

    /// Action of `x ∈ O ⊗ Q` on column vectors of `Q^k`.
    pub fn ambient_action(&self, x: &[Rational]) -> Matrix<Rational> {
        let k = self.lattice.dim();
        x.iter()
            .zip(&self.action)
            .fold(Matrix::zeros(k, k), |acc, (c, m)| acc.add(&m.scale(c)))
    }

    /// Action matrices of the order basis elements.
    pub fn order_action(&self) -> Vec<Matrix<Rational>> {
        self.order
            .basis_vectors()
            .iter()
            .map(|l| self.ambient_action(l))
            .collect()
    }

    /// Action of `x` on lattice coordinates (row vectors): `c ↦ c N(x)` with
    /// `N(x) = B A(x)^T B^{-1}`. Note `N(xy) = N(y) N(x)`.
    pub fn coord_action(&self, x: &[Rational]) -> Matrix<Rational> {
        let b = self.lattice.basis();
        let binv = b.inverse().expect("nonsingular basis");
        b.mul(&self.ambient_action(x).transpose()).mul(&binv)
    }

    fn coord_action_z(&self, x: &[Rational]) -> Matrix<Integer> {
        self.coord_action(x)
            .to_ring()
            .expect("order elements preserve the lattice")
    }

    /// `O'T` with the action extended to a larger order `O' ⊇ O`.
    pub fn extend_to(&self, bigger: &Order<Integer>) -> Result<PeriodLattice> {
        if bigger.algebra() != self.order.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        if !bigger.contains(&self.order) {
            return Err(Error::NotContained);
        }
        let k = self.lattice.dim();
        let mut rows = Vec::new();
        for l in bigger.basis_vectors() {
            let at = self.ambient_action(&l).transpose();
            for beta in self.lattice.basis_vectors() {
                rows.push(at.vec_mul(&beta));
            }
        }
        let lattice = Lattice::from_rows(rows, k)?;
        let mats = bigger
            .basis_vectors()
            .iter()
            .map(|l| self.ambient_action(l))
            .collect::<Vec<_>>();
        PeriodLattice::with_order_action(bigger.clone(), lattice, &mats, self.prime.clone())
    }
}

/// Torsion-free part of `M ⊗_O T = T^s / Σ ρ_i T` and the elementary
/// divisors of its torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorLattice {
    pub rank: usize,
    /// Non-unit invariant factors of the torsion subgroup.
    pub divisors: Vec<Integer>,
    /// Relation rows spanning `Σ ρ_i T` inside `Z^{sk}` (lattice coordinates
    /// of `T^s`).
    pub relations: Matrix<Integer>,
    /// `Z^{sk} → Z^rank`, the projection onto the torsion-free quotient.
    pub projection: Matrix<Integer>,
    /// Rows lifting the standard basis of `Z^rank` back to `Z^{sk}`.
    pub section: Matrix<Integer>,
}

fn same_order(m: &ModulePresentation, t: &PeriodLattice) -> Result<()> {
    if m.order() != t.order() {
        return Err(Error::ActionMismatch(
            "the lattice carries an action of a different order".into(),
        ));
    }
    Ok(())
}

pub fn tensor_lattice(m: &ModulePresentation, t: &PeriodLattice) -> Result<TensorLattice> {
    same_order(m, t)?;
    let k = t.rank();
    let s = m.generators();
    let width = s * k;
    let mut rows = Vec::new();
    for rho in m.alpha() {
        let blocks: Vec<Matrix<Integer>> = rho.iter().map(|x| t.coord_action_z(x)).collect();
        for l in 0..k {
            rows.push(
                blocks
                    .iter()
                    .flat_map(|b| b.row(l).to_vec())
                    .collect::<Vec<_>>(),
            );
        }
    }
    let relations = Matrix::from_rows(rows, width)?;
    let sn = snf(&relations);
    let inv = sn.invariant_factors();
    let r = inv.len();
    let free: Vec<usize> = (r..width).collect();
    let vinv =
        sn.v.to_frac()
            .inverse()
            .expect("unimodular")
            .to_ring()
            .expect("unimodular inverse is integral");
    Ok(TensorLattice {
        rank: width - r,
        divisors: inv.into_iter().filter(|d| !d.is_unit()).collect(),
        relations,
        projection: sn.v.select_cols(&free),
        section: vinv.select_rows(&free),
    })
}

/// The map a module homomorphism `φ: M1 → M2` induces on the torsion-free
/// lattices, together with the lattices themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    pub source: TensorLattice,
    pub target: TensorLattice,
    /// `φ ⊗ 1: T^{s1} → T^{s2}` in lattice coordinates.
    pub on_free_modules: Matrix<Integer>,
    /// `r1 x r2` matrix on the torsion-free quotients.
    pub matrix: Matrix<Integer>,
}

/// `φ` sends generator `j` of `M1` to `(φ_jk)_k ∈ O^{s2}`.
pub fn induced_map(
    m1: &ModulePresentation,
    m2: &ModulePresentation,
    phi: &[Vec<Vec<Rational>>],
    t: &PeriodLattice,
) -> Result<InducedMap> {
    same_order(m1, t)?;
    same_order(m2, t)?;
    let o = t.order();
    let alg = o.algebra();
    let (s1, s2, n, k) = (m1.generators(), m2.generators(), o.dim(), t.rank());
    if phi.len() != s1 || phi.iter().any(|r| r.len() != s2) {
        return Err(Error::NotAModuleMap(format!(
            "expected a {s1} x {s2} matrix over the order"
        )));
    }
    for (j, row) in phi.iter().enumerate() {
        for (kk, x) in row.iter().enumerate() {
            if x.len() != n || !o.contains_element(x) {
                return Err(Error::NotAModuleMap(format!(
                    "entry ({j}, {kk}) is not an element of the order"
                )));
            }
        }
    }
    // φ(ρ_i) must lie in Σ ρ'_l O
    let span_rows: Vec<Vec<Integer>> = m2
        .alpha()
        .iter()
        .flat_map(|rho| {
            o.basis_vectors().into_iter().map(move |b| {
                rho.iter()
                    .flat_map(|x| order_coords(o, &alg.mul(x, &b)))
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    let span = Matrix::from_rows(span_rows, s2 * n)?;
    for (i, rho) in m1.alpha().iter().enumerate() {
        let w: Vec<Integer> = (0..s2)
            .flat_map(|kk| {
                let sum = rho.iter().enumerate().fold(alg.zero(), |acc, (j, r)| {
                    add(&acc, &alg.mul(&phi[j][kk], r))
                });
                order_coords(o, &sum)
            })
            .collect();
        let inside = if span.nrows() == 0 {
            w.iter().all(RingOps::is_zero)
        } else {
            in_row_span(&span, &w)
        };
        if !inside {
            return Err(Error::NotAModuleMap(format!(
                "relation {i} of the source is not mapped into the relations of the target"
            )));
        }
    }
    let mut big = Matrix::from_fn(s1 * k, s2 * k, |_, _| Integer::zero());
    for j in 0..s1 {
        for kk in 0..s2 {
            let blk = t.coord_action_z(&phi[j][kk]);
            for a in 0..k {
                for b in 0..k {
                    big[(j * k + a, kk * k + b)] = blk[(a, b)].clone();
                }
            }
        }
    }
    let source = tensor_lattice(m1, t)?;
    let target = tensor_lattice(m2, t)?;
    let matrix = source.section.mul(&big).mul(&target.projection);
    Ok(InducedMap {
        source,
        target,
        on_free_modules: big,
        matrix,
    })
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

/// Whether `T(φ_A) ∘ ξ_1 = ξ_2 ∘ (φ ⊗ 1)` on every generator of `T^{s1}`,
/// where `ξ_i` is the projection onto the torsion-free part.
pub fn check_naturality(
    m1: &ModulePresentation,
    m2: &ModulePresentation,
    phi: &[Vec<Vec<Rational>>],
    t: &PeriodLattice,
) -> Result<bool> {
    let map = induced_map(m1, m2, phi, t)?;
    let direct = map.on_free_modules.mul(&map.target.projection);
    let via = map.source.projection.mul(&map.matrix);
    let relations_vanish = map.source.relations.mul(&direct).is_zero();
    Ok(relations_vanish && direct == via)
}

/// Elementary divisors of one prime in the kernel of an isogeny.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelAtPrime {
    pub prime: Integer,
    pub elementary_divisors: Vec<Integer>,
}

/// The isogeny `A → O' ⊗_O A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyDescriptor {
    pub source: IsogenyType,
    pub target: IsogenyType,
    pub per_prime_kernel: Vec<KernelAtPrime>,
    pub degree: Integer,
    /// `O'T` for each input lattice.
    pub lattices: Vec<PeriodLattice>,
}

/// Realizes `ι: A → O' ⊗_O A` on period lattices as `T ⊂ O'T`, the
/// smallest `O'`-stable lattice containing `T`. The kernel of `ι` is
/// `O'T / T`.
pub fn minimal_isogeny(
    o: &Order<Integer>,
    o_prime: &Order<Integer>,
    ty: &IsogenyType,
    lattices: &[PeriodLattice],
) -> Result<IsogenyDescriptor> {
    if o.algebra() != o_prime.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    if !o_prime.contains(o) {
        return Err(Error::NotContained);
    }
    let mut by_prime: BTreeMap<Integer, Vec<Integer>> = BTreeMap::new();
    let mut targets = Vec::new();
    for t in lattices {
        if t.order() != o {
            return Err(Error::ActionMismatch(
                "lattice carries an action of a different order".into(),
            ));
        }
        let big = t.extend_to(o_prime)?;
        let rel = t
            .lattice()
            .basis()
            .mul(&big.lattice().basis().inverse().expect("nonsingular"))
            .to_ring()
            .expect("T lies in O'T");
        for d in snf(&rel).invariant_factors() {
            for (q, e) in d.factor() {
                if t.prime().is_some_and(|l| *l != q) {
                    continue;
                }
                by_prime
                    .entry(q.clone())
                    .or_default()
                    .push(crate::ring::pow(&q, e as u64));
            }
        }
        targets.push(big);
    }
    let mut degree = Integer::one();
    let per_prime_kernel = by_prime
        .into_iter()
        .map(|(prime, mut divs)| {
            divs.sort();
            for d in &divs {
                degree = degree.clone() * d.clone();
            }
            KernelAtPrime {
                prime,
                elementary_divisors: divs,
            }
        })
        .collect();
    Ok(IsogenyDescriptor {
        source: ty.clone(),
        target: ty.clone(),
        per_prime_kernel,
        degree,
        lattices: targets,
    })
}
