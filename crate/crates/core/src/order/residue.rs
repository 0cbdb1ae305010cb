//! The finite rings `Λ/πΛ` and the ideals of `Λ` lying over `π`.

use std::collections::BTreeSet;

use super::{lattice_power, LatticeIdeal, Order, Side};
use crate::algebra::finite::{FpAlgebra, Quotient};
use crate::error::{Error, Result};
use crate::exactlin::Lattice;
use crate::ring::{modp, Frac, Pid};

/// `Λ/πΛ` as an algebra over the prime field of `R/π`.
///
/// Basis element `m*deg + k` is `t^k λ_m`, where `λ_m` runs over the order
/// basis and `t^k` over the canonical basis of the residue field.
pub(crate) struct Residue<R: Pid> {
    pub prime: R,
    pub deg: usize,
    pub alg: FpAlgebra,
}

pub(crate) fn check_prime<R: Pid>(p: &R) -> Result<R> {
    if !p.is_prime() {
        return Err(Error::NotPrime(p.to_string()));
    }
    Ok(p.normalized())
}

impl<R: Pid> Residue<R> {
    pub fn new(o: &Order<R>, prime: &R) -> Result<Self> {
        let prime = check_prime(prime)?;
        let p = R::residue_char(&prime)?;
        let deg = R::residue_degree(&prime);
        let n = o.dim();
        let big = n * deg;
        let consts = o.structure_constants();
        let units: Vec<R> = (0..deg)
            .map(|a| {
                let mut e = vec![0u64; deg];
                e[a] = 1;
                R::from_residue(&e, &prime)
            })
            .collect();
        let mut table = vec![vec![vec![0u64; big]; big]; big];
        for i in 0..n {
            for j in 0..n {
                for a in 0..deg {
                    for b in 0..deg {
                        let tab = units[a].clone() * units[b].clone();
                        let out = &mut table[i * deg + a][j * deg + b];
                        for (m, c) in consts[i][j].iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let r = (tab.clone() * c.clone()).to_residue(&prime);
                            out[m * deg..(m + 1) * deg].copy_from_slice(&r);
                        }
                    }
                }
            }
        }
        let one = Self::reduce_coords(&o.coordinates(o.algebra().one()), &prime, deg)?;
        Ok(Residue {
            prime,
            deg,
            alg: FpAlgebra::new(p, table, one),
        })
    }

    fn reduce_coords(c: &[Frac<R>], prime: &R, deg: usize) -> Result<Vec<u64>> {
        let mut out = Vec::with_capacity(c.len() * deg);
        for x in c {
            let r = x
                .to_ring()
                .ok_or_else(|| Error::Internal("element outside the order".into()))?;
            out.extend(r.to_residue(prime));
        }
        Ok(out)
    }

    /// Residue of an element of `Λ` given in algebra coordinates.
    pub fn reduce(&self, o: &Order<R>, x: &[Frac<R>]) -> Result<Vec<u64>> {
        Self::reduce_coords(&o.coordinates(x), &self.prime, self.deg)
    }

    /// Canonical lift of a residue vector to `Λ`, in algebra coordinates.
    pub fn lift(&self, o: &Order<R>, v: &[u64]) -> Vec<Frac<R>> {
        let coeffs: Vec<Frac<R>> = v
            .chunks(self.deg)
            .map(|ch| Frac::from_ring(R::from_residue(ch, &self.prime)))
            .collect();
        o.basis().vec_mul(&coeffs)
    }

    /// The lattice `πΛ + lifts(vectors)`.
    pub fn preimage(&self, o: &Order<R>, vectors: &[Vec<u64>]) -> Result<Lattice<R>> {
        let pi = Frac::from_ring(self.prime.clone());
        let mut rows: Vec<Vec<Frac<R>>> = o.basis().scale(&pi).row_vecs();
        rows.extend(vectors.iter().map(|v| self.lift(o, v)));
        Lattice::from_rows(rows, o.dim())
    }
}

/// `Λ/J` for the radical `J`, with the radical itself.
pub(crate) struct Semisimple<R: Pid> {
    pub residue: Residue<R>,
    pub rad: Vec<Vec<u64>>,
    pub quotient: Quotient,
}

impl<R: Pid> Semisimple<R> {
    pub fn new(o: &Order<R>, prime: &R) -> Result<Self> {
        let residue = Residue::new(o, prime)?;
        let rad = residue.alg.radical()?;
        let quotient = residue.alg.quotient(&rad)?;
        Ok(Semisimple {
            residue,
            rad,
            quotient,
        })
    }

    pub fn radical(&self, o: &Order<R>) -> Result<Lattice<R>> {
        self.residue.preimage(o, &self.rad)
    }

    /// Maximal two-sided ideals of `Λ` over `π`: preimages of `S(1 - e)`
    /// for the primitive central idempotents `e` of `S = Λ/J`.
    pub fn maximal_ideals(&self, o: &Order<R>) -> Result<Vec<Lattice<R>>> {
        let s = &self.quotient.alg;
        let p = s.p();
        let idems = s.primitive_idempotents(&s.center())?;
        if idems.len() == 1 {
            return Ok(vec![self.radical(o)?]);
        }
        idems
            .iter()
            .map(|e| {
                let f: Vec<u64> = s
                    .one()
                    .iter()
                    .zip(e)
                    .map(|(a, b)| modp::sub(*a, *b, p))
                    .collect();
                let mut gens: Vec<Vec<u64>> = (0..s.dim())
                    .map(|i| self.quotient.lift(&s.mul(&s.basis_vector(i), &f)))
                    .collect();
                gens.extend(self.rad.iter().cloned());
                self.residue.preimage(o, &gens)
            })
            .collect()
    }

    /// Number of simple factors of `Λ/J`.
    pub fn simple_factor_count(&self) -> Result<usize> {
        let s = &self.quotient.alg;
        s.count_primitive_idempotents(&s.center())
    }

    /// Number of primitive idempotents of the image of `Z(Λ)` in `Λ/J`.
    pub fn center_image_count(&self, o: &Order<R>) -> Result<usize> {
        let s = &self.quotient.alg;
        let z = o.center_lattice();
        let mut img = Vec::new();
        for row in z.row_vecs() {
            let r = self.residue.reduce(o, &row)?;
            img.push(self.quotient.project(&r)?);
        }
        img.push(s.one().to_vec());
        s.count_primitive_idempotents(&img)
    }
}

/// The two-sided ideal `J ⊇ πΛ` with `J/πΛ` the Jacobson radical of `Λ/πΛ`.
pub fn radical_mod_p<R: Pid>(o: &Order<R>, prime: &R) -> Result<LatticeIdeal<R>> {
    let ss = Semisimple::new(o, prime)?;
    Ok(LatticeIdeal::new_unchecked(ss.radical(o)?, Side::TwoSided))
}

/// Largest residue dimension accepted by [`two_sided_ideals_over_p`].
pub const IDEAL_ENUMERATION_BOUND: usize = 16;

const ENUMERATION_SIZE_LIMIT: u128 = 1 << 20;

/// All two-sided ideals `I` with `πΛ ⊆ I ⊆ Λ`, smallest first.
///
/// Enumerates the principal ideals of `Λ/πΛ` generated by every vector up
/// to scaling and closes the set under sums, so the cost grows like `p^N`
/// with `N` the residue dimension.
pub fn two_sided_ideals_over_p<R: Pid>(o: &Order<R>, prime: &R) -> Result<Vec<LatticeIdeal<R>>> {
    let res = Residue::new(o, prime)?;
    let a = &res.alg;
    let (n, p) = (a.dim(), a.p());
    if n > IDEAL_ENUMERATION_BOUND {
        return Err(Error::DimensionTooLarge(n, IDEAL_ENUMERATION_BOUND));
    }
    // v ↦ b_i v b_j as n x n matrices acting on coordinate vectors
    let maps: Vec<Vec<Vec<u64>>> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let bi = a.basis_vector(i);
            let bj = a.basis_vector(j);
            (0..n)
                .map(|k| a.mul(&a.mul(&bi, &a.basis_vector(k)), &bj))
                .collect()
        })
        .collect();
    let mut ideals: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    ideals.insert(Vec::new());
    let total = (p as u128).pow(n as u32);
    if total > ENUMERATION_SIZE_LIMIT {
        return Err(Error::Unsupported(format!(
            "residue ring has {p}^{n} elements; ideal enumeration is limited to {ENUMERATION_SIZE_LIMIT}"
        )));
    }
    let mut v = vec![0u64; n];
    for code in 1..total {
        let mut c = code;
        for x in v.iter_mut() {
            *x = (c % p as u128) as u64;
            c /= p as u128;
        }
        // projective representative: leading nonzero coordinate is 1
        if v.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        let gens: Vec<Vec<u64>> = maps
            .iter()
            .map(|m| {
                let mut out = vec![0u64; n];
                for (k, &x) in v.iter().enumerate() {
                    if x != 0 {
                        for (o, y) in out.iter_mut().zip(&m[k]) {
                            *o = modp::add(*o, modp::mul(x, *y, p), p);
                        }
                    }
                }
                out
            })
            .collect();
        ideals.insert(modp::span_basis(&gens, p));
    }
    loop {
        let list: Vec<Vec<Vec<u64>>> = ideals.iter().cloned().collect();
        let mut added = false;
        for (i, x) in list.iter().enumerate() {
            for y in &list[i + 1..] {
                let mut both = x.clone();
                both.extend(y.iter().cloned());
                if ideals.insert(modp::span_basis(&both, p)) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut sorted: Vec<Vec<Vec<u64>>> = ideals.into_iter().collect();
    sorted.sort_by_key(|b| b.len());
    sorted
        .iter()
        .map(|b| {
            Ok(LatticeIdeal::new_unchecked(
                res.preimage(o, b)?,
                Side::TwoSided,
            ))
        })
        .collect()
}

/// Whether every two-sided ideal between `πΛ` and `Λ` is a power of the
/// radical.
pub fn power_law_holds<R: Pid>(o: &Order<R>, prime: &R) -> Result<bool> {
    let ideals = two_sided_ideals_over_p(o, prime)?;
    let j = radical_mod_p(o, prime)?;
    let pl = o.lattice().scale(&Frac::from_ring(prime.clone()));
    let mut powers = Vec::new();
    for k in 0.. {
        let q = lattice_power(o, j.lattice(), k)?;
        if !q.contains(&pl) {
            break;
        }
        let done = q == pl;
        powers.push(q);
        if done || k as usize > o.dim() * R::residue_degree(prime) {
            break;
        }
    }
    Ok(ideals.iter().all(|i| powers.contains(i.lattice())))
}
