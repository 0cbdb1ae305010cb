//! Finite-dimensional algebras over the fraction field of a ground ring,
//! presented by structure constants.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::ring::{Frac, Pid, RingOps};

mod decompose;
pub mod finite;
mod parse;

pub use decompose::{central_idempotents, decompose, verify_idempotents, Decomposition};
pub use parse::parse_poly;

/// Algebra with basis `b_0, …, b_{n-1}` and `b_i b_j = Σ_k c[i][j][k] b_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Algebra<R: Pid> {
    names: Vec<String>,
    consts: Vec<Vec<Vec<Frac<R>>>>,
    one: Vec<Frac<R>>,
    // trace of left multiplication by each basis element
    traces: Vec<Frac<R>>,
}

impl<R: Pid> Algebra<R> {
    /// Validates shape, associativity on all basis triples, and the unit.
    pub fn new(
        names: Vec<String>,
        consts: Vec<Vec<Vec<Frac<R>>>>,
        one: Vec<Frac<R>>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("algebra of dimension 0".into()));
        }
        let shape_ok = consts.len() == n
            && consts
                .iter()
                .all(|row| row.len() == n && row.iter().all(|v| v.len() == n))
            && one.len() == n;
        if !shape_ok {
            return Err(Error::DimensionMismatch(format!(
                "structure constants must be {n}x{n}x{n} with a unit of length {n}"
            )));
        }
        let alg = Self::new_unchecked(names, consts, one);
        alg.check_associative()?;
        alg.check_unit()?;
        Ok(alg)
    }

    pub(crate) fn new_unchecked(
        names: Vec<String>,
        consts: Vec<Vec<Vec<Frac<R>>>>,
        one: Vec<Frac<R>>,
    ) -> Self {
        let n = names.len();
        let traces = (0..n)
            .map(|i| (0..n).fold(Frac::zero(), |acc, m| acc + consts[i][m][m].clone()))
            .collect();
        Algebra {
            names,
            consts,
            one,
            traces,
        }
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = &self.consts[i][j];
                for k in 0..n {
                    let left = self.mul(ij, &self.basis_vector(k));
                    let jk = &self.consts[j][k];
                    let right = self.mul(&self.basis_vector(i), jk);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim() {
            let b = self.basis_vector(i);
            if self.mul(&self.one, &b) != b || self.mul(&b, &self.one) != b {
                return Err(Error::BadUnit);
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Frac<R>>>] {
        &self.consts
    }

    pub fn one(&self) -> &[Frac<R>] {
        &self.one
    }

    pub fn zero(&self) -> Vec<Frac<R>> {
        vec![Frac::zero(); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Frac<R>> {
        let mut v = self.zero();
        v[i] = Frac::one();
        v
    }

    /// Product of two coordinate vectors.
    pub fn mul(&self, x: &[Frac<R>], y: &[Frac<R>]) -> Vec<Frac<R>> {
        let n = self.dim();
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.clone() * yj.clone();
                let row = &self.consts[i][j];
                for k in 0..n {
                    if !row[k].is_zero() {
                        out[k] = out[k].clone() + c.clone() * row[k].clone();
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[Frac<R>], e: u64) -> Vec<Frac<R>> {
        let mut acc = self.one.clone();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Matrix of left multiplication by `x`; column `j` holds `x·b_j`, so
    /// the representation is multiplicative: `L(xy) = L(x) L(y)`.
    pub fn left_matrix(&self, x: &[Frac<R>]) -> Matrix<Frac<R>> {
        let n = self.dim();
        let cols: Vec<Vec<Frac<R>>> = (0..n).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_fn(n, n, |k, j| cols[j][k].clone())
    }

    /// Trace of left multiplication by `x`.
    pub fn trace(&self, x: &[Frac<R>]) -> Frac<R> {
        x.iter()
            .zip(&self.traces)
            .filter(|(a, _)| !a.is_zero())
            .fold(Frac::zero(), |acc, (a, t)| acc + a.clone() * t.clone())
    }

    /// Gram matrix of the trace form on the given vectors.
    pub fn trace_gram(&self, vectors: &[Vec<Frac<R>>]) -> Matrix<Frac<R>> {
        let k = vectors.len();
        Matrix::from_fn(k, k, |i, j| self.trace(&self.mul(&vectors[i], &vectors[j])))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.consts[i][j] == self.consts[j][i]))
    }

    /// Whether `x` commutes with every basis element.
    pub fn is_central(&self, x: &[Frac<R>]) -> bool {
        (0..self.dim()).all(|j| {
            let b = self.basis_vector(j);
            self.mul(x, &b) == self.mul(&b, x)
        })
    }

    /// Basis (echelon rows) of the center, the solutions of `x b_j = b_j x`.
    pub fn center(&self) -> Matrix<Frac<R>> {
        let n = self.dim();
        let m = Matrix::from_fn(n, n * n, |a, col| {
            let (j, k) = (col / n, col % n);
            self.consts[a][j][k].clone() - self.consts[j][a][k].clone()
        });
        m.left_kernel().row_space()
    }

    /// Trace-form criterion: the Gram matrix of `(x, y) ↦ Tr L(xy)` is
    /// nonsingular.
    pub fn is_separable_semisimple(&self) -> bool {
        let basis: Vec<_> = (0..self.dim()).map(|i| self.basis_vector(i)).collect();
        !self.trace_gram(&basis).det().is_zero()
    }

    /// Monic minimal polynomial of `x`, constant term first.
    pub fn minimal_polynomial(&self, x: &[Frac<R>]) -> Vec<Frac<R>> {
        let mut powers: Vec<Vec<Frac<R>>> = vec![self.one.clone()];
        loop {
            let next = self.mul(powers.last().expect("nonempty"), x);
            let m = Matrix::from_rows(powers.clone(), self.dim()).expect("uniform rows");
            if let Some(c) = m.solve_left(&next) {
                let mut poly: Vec<Frac<R>> = c.into_iter().map(|a| -a).collect();
                poly.push(Frac::one());
                return poly;
            }
            powers.push(next);
        }
    }

    /// Structure of the subalgebra spanned by the rows of `basis`, which
    /// must be closed under multiplication and contain `unit`.
    pub fn subalgebra(&self, basis: &Matrix<Frac<R>>, unit: &[Frac<R>]) -> Result<Algebra<R>> {
        let rows = basis.row_vecs();
        let coords = |v: &[Frac<R>]| {
            basis.solve_left(v).ok_or_else(|| {
                Error::Internal("subspace is not closed under multiplication".into())
            })
        };
        let consts = rows
            .iter()
            .map(|a| {
                rows.iter()
                    .map(|b| coords(&self.mul(a, b)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let names = (0..rows.len()).map(|i| format!("u{i}")).collect();
        Ok(Algebra::new_unchecked(names, consts, coords(unit)?))
    }

    // -- constructors ------------------------------------------------------

    /// `Mat_n(K)` with matrix units `e_ij` in row-major order.
    pub fn matrix(n: usize) -> Self {
        assert!(n >= 1);
        let dim = n * n;
        let names = (0..n)
            .flat_map(|i| (0..n).map(move |j| unit_name(n, i, j)))
            .collect();
        let consts = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|b| {
                        let (i, j) = (a / n, a % n);
                        let (k, l) = (b / n, b % n);
                        let mut v = vec![Frac::zero(); dim];
                        if j == k {
                            v[i * n + l] = Frac::one();
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let mut one = vec![Frac::zero(); dim];
        for i in 0..n {
            one[i * n + i] = Frac::one();
        }
        Self::new_unchecked(names, consts, one)
    }

    /// Quaternion algebra `(a, b | K)`: `i² = a`, `j² = b`, `k = ij = -ji`.
    pub fn quaternion(a: Frac<R>, b: Frac<R>) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::DimensionMismatch(
                "quaternion parameters must be nonzero".into(),
            ));
        }
        let z = Frac::<R>::zero;
        let o = Frac::<R>::one;
        let ab = a.clone() * b.clone();
        let v = |c: [Frac<R>; 4]| c.to_vec();
        // rows: 1, i, j, k
        let consts = vec![
            vec![
                v([o(), z(), z(), z()]),
                v([z(), o(), z(), z()]),
                v([z(), z(), o(), z()]),
                v([z(), z(), z(), o()]),
            ],
            vec![
                v([z(), o(), z(), z()]),
                v([a.clone(), z(), z(), z()]),
                v([z(), z(), z(), o()]),
                v([z(), z(), a.clone(), z()]),
            ],
            vec![
                v([z(), z(), o(), z()]),
                v([z(), z(), z(), -o()]),
                v([b.clone(), z(), z(), z()]),
                v([z(), -b.clone(), z(), z()]),
            ],
            vec![
                v([z(), z(), z(), o()]),
                v([z(), z(), -a, z()]),
                v([z(), b, z(), z()]),
                v([-ab, z(), z(), z()]),
            ],
        ];
        let names = ["1", "i", "j", "k"].iter().map(|s| s.to_string()).collect();
        Ok(Self::new_unchecked(names, consts, v([o(), z(), z(), z()])))
    }

    /// `K[x]/(f)` with basis `1, x, …, x^{n-1}`; `modulus` is given constant
    /// term first and need not be monic.
    pub fn poly_quotient(modulus: &[Frac<R>]) -> Result<Self> {
        let mut f = modulus.to_vec();
        while f.last().is_some_and(|c| c.is_zero()) {
            f.pop();
        }
        if f.len() < 2 {
            return Err(Error::DimensionMismatch(
                "modulus must have positive degree".into(),
            ));
        }
        let n = f.len() - 1;
        let lead = f[n].clone();
        let f: Vec<Frac<R>> = f.into_iter().map(|c| c / lead.clone()).collect();
        // reductions of x^0 .. x^{2n-2}
        let mut pows: Vec<Vec<Frac<R>>> = Vec::with_capacity(2 * n);
        for e in 0..(2 * n).saturating_sub(1) {
            if e < n {
                let mut v = vec![Frac::zero(); n];
                v[e] = Frac::one();
                pows.push(v);
            } else {
                // x * x^{e-1}
                let prev = &pows[e - 1];
                let top = prev[n - 1].clone();
                let mut v = vec![Frac::zero(); n];
                v[1..n].clone_from_slice(&prev[..n - 1]);
                for k in 0..n {
                    v[k] = v[k].clone() - top.clone() * f[k].clone();
                }
                pows.push(v);
            }
        }
        let consts = (0..n)
            .map(|i| (0..n).map(|j| pows[i + j].clone()).collect())
            .collect();
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let mut one = vec![Frac::zero(); n];
        one[0] = Frac::one();
        Ok(Self::new_unchecked(names, consts, one))
    }

    /// Direct product; basis is the concatenation of the factor bases.
    pub fn product(factors: &[Algebra<R>]) -> Self {
        assert!(!factors.is_empty());
        let dim: usize = factors.iter().map(Algebra::dim).sum();
        let mut consts = vec![vec![vec![Frac::zero(); dim]; dim]; dim];
        let mut one = vec![Frac::zero(); dim];
        let mut names = Vec::with_capacity(dim);
        let mut off = 0;
        for (f, alg) in factors.iter().enumerate() {
            let d = alg.dim();
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        consts[off + i][off + j][off + k] = alg.consts[i][j][k].clone();
                    }
                }
                one[off + i] = alg.one[i].clone();
                names.push(format!("{}[{f}]", alg.names[i]));
            }
            off += d;
        }
        Self::new_unchecked(names, consts, one)
    }

    /// `Mat_r(D)` with basis `e_ij ⊗ d_k`, index `(i*r + j)*dim D + k`.
    pub fn matrix_over(d: &Algebra<R>, r: usize) -> Self {
        assert!(r >= 1);
        let dd = d.dim();
        let dim = r * r * dd;
        let idx = |i: usize, j: usize, k: usize| (i * r + j) * dd + k;
        let mut consts = vec![vec![vec![Frac::zero(); dim]; dim]; dim];
        for i in 0..r {
            for j in 0..r {
                for l in 0..r {
                    for a in 0..dd {
                        for b in 0..dd {
                            for c in 0..dd {
                                consts[idx(i, j, a)][idx(j, l, b)][idx(i, l, c)] =
                                    d.consts[a][b][c].clone();
                            }
                        }
                    }
                }
            }
        }
        let mut one = vec![Frac::zero(); dim];
        for i in 0..r {
            for k in 0..dd {
                one[idx(i, i, k)] = d.one[k].clone();
            }
        }
        let names = (0..r)
            .flat_map(|i| (0..r).map(move |j| (i, j)))
            .flat_map(|(i, j)| {
                d.names.iter().map(move |dn| {
                    let e = unit_name(r, i, j);
                    if dd == 1 {
                        e
                    } else {
                        format!("{e}*{dn}")
                    }
                })
            })
            .collect();
        Self::new_unchecked(names, consts, one)
    }
}

fn unit_name(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("e{}{}", i + 1, j + 1)
    } else {
        format!("e{}_{}", i + 1, j + 1)
    }
}

/// An element together with the algebra it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement<R: Pid> {
    alg: Arc<Algebra<R>>,
    coords: Vec<Frac<R>>,
}

impl<R: Pid> AlgebraElement<R> {
    pub fn new(alg: Arc<Algebra<R>>, coords: Vec<Frac<R>>) -> Result<Self> {
        if coords.len() != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "element has {} coordinates, algebra has dimension {}",
                coords.len(),
                alg.dim()
            )));
        }
        Ok(AlgebraElement { alg, coords })
    }

    pub fn one(alg: Arc<Algebra<R>>) -> Self {
        let coords = alg.one.clone();
        AlgebraElement { alg, coords }
    }

    pub fn algebra(&self) -> &Arc<Algebra<R>> {
        &self.alg
    }

    pub fn coords(&self) -> &[Frac<R>] {
        &self.coords
    }

    fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) || self.alg == other.alg
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if !self.same_algebra(other) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgebraElement {
            alg: self.alg.clone(),
            coords: self.alg.mul(&self.coords, &other.coords),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.same_algebra(other) {
            return Err(Error::AlgebraMismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(AlgebraElement {
            alg: self.alg.clone(),
            coords,
        })
    }

    pub fn regular_representation(&self) -> Matrix<Frac<R>> {
        self.alg.left_matrix(&self.coords)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RingOps::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FpPoly, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn qv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn defining_relations() {
        let a = Algebra::<crate::ring::Integer>::poly_quotient(&qv(&[-1, 0, 1])).unwrap();
        let x = qv(&[0, 1]);
        assert_eq!(a.mul(&x, &x), qv(&[1, 0]));
        assert_eq!(
            a.left_matrix(&x),
            Matrix::from_rows(vec![qv(&[0, 1]), qv(&[1, 0])], 2).unwrap()
        );
        assert!(a.left_matrix(&qv(&[0, 0])).is_zero());
        assert_eq!(a.left_matrix(a.one()), Matrix::identity(2));

        let m = Algebra::<crate::ring::Integer>::matrix(2);
        // e12 * e21 = e11
        assert_eq!(
            m.mul(&m.basis_vector(1), &m.basis_vector(2)),
            m.basis_vector(0)
        );
        let x = qv(&[1, 2, 3, 4]);
        assert_eq!(m.mul(m.one(), &x), x);
    }

    #[test]
    fn constructors_are_associative() {
        let h = Algebra::<crate::ring::Integer>::quaternion(q(-1), q(-3)).unwrap();
        Algebra::new(h.names.clone(), h.consts.clone(), h.one.clone()).unwrap();
        let m = Algebra::matrix_over(&h, 2);
        assert_eq!(m.dim(), 16);
        let p = Algebra::product(&[h.clone(), Algebra::matrix(2)]);
        Algebra::new(p.names.clone(), p.consts.clone(), p.one.clone()).unwrap();
        let f = Algebra::<FpPoly<2>>::poly_quotient(&[
            Frac::from_ring(FpPoly::t()),
            Frac::zero(),
            Frac::one(),
        ])
        .unwrap();
        Algebra::new(f.names.clone(), f.consts.clone(), f.one.clone()).unwrap();
    }

    #[test]
    fn rejects_bad_tables() {
        let m = Algebra::<crate::ring::Integer>::matrix(2);
        let mut c = m.consts.clone();
        c[0][0][0] = q(2);
        assert!(matches!(
            Algebra::new(m.names.clone(), c, m.one.clone()),
            Err(Error::NotAssociative(..)) | Err(Error::BadUnit)
        ));
        assert_eq!(
            Algebra::new(m.names.clone(), m.consts.clone(), qv(&[1, 0, 0, 0])),
            Err(Error::BadUnit)
        );
    }

    #[test]
    fn centers() {
        let m = Algebra::<crate::ring::Integer>::matrix(2);
        assert_eq!(m.center().nrows(), 1);
        let c = Algebra::<crate::ring::Integer>::poly_quotient(&qv(&[-1, 0, 1])).unwrap();
        assert_eq!(c.center().nrows(), 2);
        let h = Algebra::<crate::ring::Integer>::quaternion(q(-1), q(-1)).unwrap();
        let z = h.center();
        assert_eq!(z, Matrix::from_rows(vec![qv(&[1, 0, 0, 0])], 4).unwrap());
    }

    #[test]
    fn trace_form_separability() {
        let dual = Algebra::<crate::ring::Integer>::poly_quotient(&qv(&[0, 0, 1])).unwrap();
        let basis: Vec<_> = (0..2).map(|i| dual.basis_vector(i)).collect();
        assert_eq!(
            dual.trace_gram(&basis),
            Matrix::from_rows(vec![qv(&[2, 0]), qv(&[0, 0])], 2).unwrap()
        );
        assert!(!dual.is_separable_semisimple());
        let m = Algebra::<crate::ring::Integer>::matrix(2);
        let mb: Vec<_> = (0..4).map(|i| m.basis_vector(i)).collect();
        assert_eq!(m.trace_gram(&mb).det(), q(-16));
        assert!(m.is_separable_semisimple());
        let f = Algebra::<FpPoly<2>>::poly_quotient(&[
            Frac::from_ring(FpPoly::t()),
            Frac::zero(),
            Frac::one(),
        ])
        .unwrap();
        assert!(!f.is_separable_semisimple());
    }

    #[test]
    fn element_wrapper_checks_algebra() {
        let a = Arc::new(Algebra::<crate::ring::Integer>::matrix(2));
        let b = Arc::new(Algebra::<crate::ring::Integer>::poly_quotient(&qv(&[1, 0, 1])).unwrap());
        let x = AlgebraElement::one(a.clone());
        let y = AlgebraElement::one(b);
        assert_eq!(x.multiply(&y), Err(Error::AlgebraMismatch));
        let z = AlgebraElement::new(a, qv(&[1, 2, 3, 4])).unwrap();
        assert_eq!(x.multiply(&z).unwrap(), z);
    }

    #[test]
    fn minimal_polynomials() {
        let h = Algebra::<crate::ring::Integer>::quaternion(q(-1), q(-1)).unwrap();
        // 1 + i satisfies x^2 - 2x + 2
        assert_eq!(h.minimal_polynomial(&qv(&[1, 1, 0, 0])), qv(&[2, -2, 1]));
        assert_eq!(h.minimal_polynomial(h.one()), qv(&[-1, 1]));
    }
}
