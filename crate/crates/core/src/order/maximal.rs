//! Idealizers, `p`-maximalization and maximality certificates.

use std::sync::Arc;

use super::residue::{check_prime, Semisimple};
use super::{discriminant, order_closure, LatticeIdeal, Order, Side};
use crate::algebra::{central_idempotents, verify_idempotents};
use crate::error::{Error, Result};
use crate::exactlin::{integral_preimage, Lattice, Matrix};
use crate::ring::{valuation, Frac, Pid};

/// `{x ∈ A : x I ⊆ I}` (left) or `{x : I x ⊆ I}` (right); for
/// [`Side::TwoSided`] the intersection of both.
pub fn idealizer<R: Pid>(o: &Order<R>, ideal: &LatticeIdeal<R>, side: Side) -> Result<Order<R>> {
    idealizer_of(o, ideal.lattice(), side)
}

pub(crate) fn idealizer_of<R: Pid>(o: &Order<R>, lat: &Lattice<R>, side: Side) -> Result<Order<R>> {
    let alg = o.algebra();
    let n = alg.dim();
    let one_side = |left: bool| -> Result<Lattice<R>> {
        let beta = lat.basis_vectors();
        let rows: Vec<Vec<Frac<R>>> = (0..n)
            .map(|a| {
                let e = alg.basis_vector(a);
                beta.iter()
                    .flat_map(|b| {
                        let prod = if left { alg.mul(&e, b) } else { alg.mul(b, &e) };
                        lat.coordinates(&prod)
                    })
                    .collect()
            })
            .collect();
        integral_preimage(&Matrix::from_rows(rows, n * n)?)
    };
    let lattice = match side {
        Side::Left => one_side(true)?,
        Side::Right => one_side(false)?,
        Side::TwoSided => one_side(true)?.intersection(&one_side(false)?),
    };
    Order::new(alg.clone(), lattice)
}

/// Idealizers that a `p`-maximal order must leave fixed: both sides of the
/// radical and of every maximal two-sided ideal over `p`. Returns the first
/// one that is strictly larger.
fn enlarge_at<R: Pid>(o: &Order<R>, ss: &Semisimple<R>) -> Result<Option<Order<R>>> {
    let j = ss.radical(o)?;
    let mut targets = vec![j];
    let maximal = ss.maximal_ideals(o)?;
    if maximal.len() > 1 {
        targets.extend(maximal);
    }
    for t in &targets {
        for side in [Side::Left, Side::Right] {
            let l = idealizer_of(o, t, side)?;
            if l != *o {
                return Ok(Some(l));
            }
        }
    }
    Ok(None)
}

const ROUNDS_WITHOUT_DISCRIMINANT: usize = 256;

/// An order containing `o` that is maximal at `p` and agrees with `o` at
/// every other prime.
///
/// Replaces the order by the idealizer of its radical while that grows; once
/// the order is hereditary at `p`, the idealizers of the maximal two-sided
/// ideals over `p` are used to leave non-maximal hereditary orders.
pub fn p_maximal_order<R: Pid>(o: &Order<R>, p: &R) -> Result<Order<R>> {
    let prime = check_prime(p)?;
    let disc = discriminant(o);
    let n = o.dim();
    let bound = if disc.is_zero() {
        ROUNDS_WITHOUT_DISCRIMINANT
    } else {
        n * n * valuation(&disc, &prime).unwrap_or(0) as usize + 1
    };
    let mut cur = o.clone();
    for _ in 0..=bound {
        let ss = Semisimple::new(&cur, &prime)?;
        match enlarge_at(&cur, &ss)? {
            Some(bigger) => cur = bigger,
            None => return Ok(cur),
        }
    }
    Err(Error::Internal(format!(
        "maximalization at {prime} did not stabilize within {bound} steps"
    )))
}

/// Outcome of the maximality test at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCertificate<R: Pid> {
    pub prime: R,
    pub idealizer_fixed: bool,
    pub residue_simple: bool,
}

impl<R: Pid> PrimeCertificate<R> {
    pub fn verdict(&self) -> bool {
        self.idealizer_fixed && self.residue_simple
    }
}

/// Maximality test at all candidate primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityCertificate<R: Pid> {
    pub order: Order<R>,
    pub candidate_primes: Vec<R>,
    pub per_prime: Vec<PrimeCertificate<R>>,
    pub verdict: bool,
}

/// `idealizer_fixed`: the order is its own left and right idealizer of the
/// radical and of each maximal ideal over `p` (it is hereditary at `p` and
/// not properly contained in a hereditary order there).
///
/// `residue_simple`: every simple factor of `Λ/rad` comes from its own
/// prime of the center, i.e. the primitive idempotents of the image of
/// `Z(Λ)` in `Λ/rad` are exactly the primitive central idempotents. For a
/// simple algebra whose center has one prime over `p` this is the statement
/// that `Λ/rad` is simple.
pub fn is_maximal_at_p<R: Pid>(o: &Order<R>, p: &R) -> Result<PrimeCertificate<R>> {
    let prime = check_prime(p)?;
    let ss = Semisimple::new(o, &prime)?;
    let idealizer_fixed = enlarge_at(o, &ss)?.is_none();
    let residue_simple = ss.simple_factor_count()? == ss.center_image_count(o)?;
    Ok(PrimeCertificate {
        prime,
        idealizer_fixed,
        residue_simple,
    })
}

/// Prime divisors of the discriminant together with `extra`, sorted and
/// without repetitions.
pub(crate) fn candidate_primes<R: Pid>(o: &Order<R>, extra: &[R]) -> Result<Vec<R>> {
    let disc = discriminant(o);
    if disc.is_zero() && extra.is_empty() {
        return Err(Error::NeedsSuppliedPrimes);
    }
    let mut primes: Vec<R> = disc.factor().into_iter().map(|(q, _)| q).collect();
    for q in extra {
        primes.push(check_prime(q)?);
    }
    primes.sort();
    primes.dedup();
    Ok(primes)
}

/// Runs [`is_maximal_at_p`] at every candidate prime.
pub fn certify<R: Pid>(o: &Order<R>, extra_primes: &[R]) -> Result<MaximalityCertificate<R>> {
    let candidate_primes = candidate_primes(o, extra_primes)?;
    let per_prime = candidate_primes
        .iter()
        .map(|q| is_maximal_at_p(o, q))
        .collect::<Result<Vec<_>>>()?;
    let verdict = per_prime.iter().all(PrimeCertificate::verdict);
    Ok(MaximalityCertificate {
        order: o.clone(),
        candidate_primes,
        per_prime,
        verdict,
    })
}

/// Inputs for [`maximal_order`] beyond the starting order.
#[derive(Clone, Debug)]
pub struct MaximalOrderOptions<R: Pid> {
    /// Primitive central idempotents of the algebra. Computed when absent,
    /// which is only possible in characteristic zero or for a trivial
    /// center.
    pub idempotents: Option<Vec<Vec<Frac<R>>>>,
    /// Primes to treat in addition to those dividing the discriminant.
    pub extra_primes: Vec<R>,
    pub seed: u64,
    /// Skip the semisimplicity check in characteristic zero.
    pub trusted_semisimple: bool,
}

impl<R: Pid> Default for MaximalOrderOptions<R> {
    fn default() -> Self {
        MaximalOrderOptions {
            idempotents: None,
            extra_primes: Vec::new(),
            seed: 0,
            trusted_semisimple: false,
        }
    }
}

/// A maximal order containing `start`.
///
/// Adjoins the central idempotents and the integral closure of `Λ ∩ Z(A)`
/// in the center, then maximalizes at each candidate prime. Because the
/// idempotents lie in the intermediate order, every later enlargement
/// respects the block decomposition.
pub fn maximal_order<R: Pid>(start: &Order<R>, opts: &MaximalOrderOptions<R>) -> Result<Order<R>> {
    let alg = start.algebra().clone();
    if R::characteristic() == 0 && !opts.trusted_semisimple && !alg.is_separable_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let mut gens = start.basis_vectors();
    if let Some(e) = &opts.idempotents {
        verify_idempotents(&alg, e)?;
        gens.extend(e.iter().cloned());
    } else if !alg.is_commutative() {
        gens.extend(central_idempotents(&alg, opts.seed)?);
    }
    if !alg.is_commutative() {
        gens.extend(maximal_center(start, opts)?);
    }
    let mut lam = order_closure(alg, &gens)?;
    for q in candidate_primes(&lam, &opts.extra_primes)? {
        lam = p_maximal_order(&lam, &q)?;
    }
    Ok(lam)
}

/// Basis (in algebra coordinates) of the maximal order of the center that
/// contains `Λ ∩ Z(A)`.
fn maximal_center<R: Pid>(
    start: &Order<R>,
    opts: &MaximalOrderOptions<R>,
) -> Result<Vec<Vec<Frac<R>>>> {
    let alg = start.algebra();
    let z = start.center_lattice();
    if z.nrows() <= 1 {
        return Ok(z.row_vecs());
    }
    let zalg = Arc::new(alg.subalgebra(&z, alg.one())?);
    let zorder = Order::standard(zalg)?;
    let sub = MaximalOrderOptions {
        idempotents: None,
        extra_primes: opts.extra_primes.clone(),
        seed: opts.seed,
        trusted_semisimple: opts.trusted_semisimple,
    };
    let zmax = maximal_order(&zorder, &sub)?;
    Ok(zmax.basis().mul(&z).row_vecs())
}

/// The integral closure of the ground ring in a commutative algebra, i.e.
/// its unique maximal order.
pub fn integral_closure_commutative<R: Pid>(o: &Order<R>, extra_primes: &[R]) -> Result<Order<R>> {
    if !o.algebra().is_commutative() {
        return Err(Error::NotCommutative);
    }
    let opts = MaximalOrderOptions {
        extra_primes: extra_primes.to_vec(),
        ..MaximalOrderOptions::default()
    };
    maximal_order(o, &opts)
}
