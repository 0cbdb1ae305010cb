//! Builders shared by the integration suites.
#![allow(dead_code)]

use std::sync::Arc;

use maxord::algebra::Algebra;
use maxord::exactlin::{Lattice, Matrix};
use maxord::order::{maximal_order, MaximalOrderOptions, Order};
use maxord::ring::{Integer, Rational, RingOps};
use maxord::serre::{IsogenyFactor, IsogenyType, ModulePresentation, PeriodLattice};
use rand::Rng;

pub fn q(x: i64) -> Rational {
    Rational::from_i64(x)
}

pub fn qv(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn qs(v: &[&str]) -> Vec<Rational> {
    v.iter()
        .map(|x| Rational::parse(x).expect("fraction"))
        .collect()
}

pub fn int(x: i64) -> Integer {
    Integer::from_i64(x)
}

pub fn rows(r: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(r.iter().map(|x| qv(x)).collect(), r[0].len()).expect("rectangular")
}

/// `Q[x]/(x^2 - d)` in the basis `1, x`.
pub fn quadratic_algebra(d: i64) -> Arc<Algebra<Integer>> {
    Arc::new(Algebra::poly_quotient(&[q(-d), q(0), q(1)]).expect("x^2 - d"))
}

pub fn rational_line() -> Arc<Algebra<Integer>> {
    Arc::new(Algebra::poly_quotient(&[q(0), q(1)]).expect("x"))
}

pub fn mat2() -> Arc<Algebra<Integer>> {
    Arc::new(Algebra::matrix(2))
}

/// `Z + f·O_K` inside `Q(√d)`.
pub fn quadratic_order(d: i64, f: i64) -> Order<Integer> {
    let alg = quadratic_algebra(d);
    let ok = maximal_order(
        &Order::standard(alg.clone()).unwrap(),
        &MaximalOrderOptions::default(),
    )
    .unwrap();
    let mut gens = vec![alg.one().to_vec()];
    gens.extend(
        ok.basis_vectors()
            .iter()
            .map(|v| v.iter().map(|x| x.clone() * q(f)).collect()),
    );
    Order::new(alg, Lattice::from_rows(gens, 2).unwrap()).unwrap()
}

/// Upper-triangular integral 2x2 matrices, with basis `E11, E12, E22`.
pub fn upper_triangular() -> Order<Integer> {
    let m = Algebra::<Integer>::matrix(2);
    let c = m.subalgebra(&triangular_embedding(), m.one()).unwrap();
    Order::standard(Arc::new(c)).unwrap()
}

/// Images of `E11, E12, E22` in `Mat_2(Q)`.
pub fn triangular_embedding() -> Matrix<Rational> {
    rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])
}

/// Order of `Mat_2(Q)` spanned by the given 2x2 matrices (row-major).
pub fn mat2_order(gens: &[[i64; 4]]) -> Order<Integer> {
    let basis: Vec<Vec<Rational>> = gens.iter().map(|g| qv(g)).collect();
    Order::new(mat2(), Lattice::from_rows(basis, 4).unwrap()).unwrap()
}

/// `{[[a, b], [n c, d]]}`.
pub fn eichler(n: i64) -> Order<Integer> {
    mat2_order(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, n, 0], [0, 0, 0, 1]])
}

/// `Z + f·Mat_2(Z)`.
pub fn scaled_mat2(f: i64) -> Order<Integer> {
    mat2_order(&[[1, 0, 0, 1], [f, 0, 0, 0], [0, f, 0, 0], [0, 0, f, 0]])
}

pub fn factor(label: &str, dim: usize, endo: Arc<Algebra<Integer>>, mult: usize) -> IsogenyType {
    IsogenyType::new(vec![IsogenyFactor {
        label: label.into(),
        dim,
        endo,
        mult,
    }])
    .unwrap()
}

/// The algebra acting on `Q^k` by left multiplication on itself, restricted
/// to the lattice `o`.
pub fn regular_lattice(o: &Order<Integer>) -> PeriodLattice {
    let alg = o.algebra();
    let gens: Vec<Vec<Rational>> = (0..alg.dim()).map(|i| alg.basis_vector(i)).collect();
    let mats: Vec<Matrix<Rational>> = gens.iter().map(|g| alg.left_matrix(g)).collect();
    PeriodLattice::new(o.clone(), o.lattice().clone(), &gens, &mats, None).unwrap()
}

/// `Mat_2` acting on `L ⊕ L ⊂ Q^2 ⊕ Q^2` (two columns), with `L` given by
/// rows. This is the Tate module of `E^2` for an elliptic curve `E` with
/// `End⁰(E) = Q`.
pub fn mat2_lattice(o: &Order<Integer>, l: &[&[i64]]) -> PeriodLattice {
    let unit = |i: usize, j: usize| Matrix::from_fn(2, 2, |r, c| q(i64::from(r == i && c == j)));
    let gens: Vec<Vec<Rational>> = (0..4).map(|i| o.algebra().basis_vector(i)).collect();
    let mats: Vec<Matrix<Rational>> = (0..4)
        .map(|i| Matrix::block_diag(&[unit(i / 2, i % 2), unit(i / 2, i % 2)]))
        .collect();
    let base = rows(l);
    let lattice =
        Lattice::from_rows(Matrix::block_diag(&[base.clone(), base]).row_vecs(), 4).unwrap();
    PeriodLattice::new(o.clone(), lattice, &gens, &mats, None).unwrap()
}

/// `T(E^2) = Z^2 ⊕ Z^2` with the upper-triangular order acting on each
/// column.
pub fn triangular_lattice(o: &Order<Integer>) -> PeriodLattice {
    let emb = triangular_embedding();
    let unit = |v: &[Rational]| Matrix::from_fn(2, 2, |r, c| v[2 * r + c].clone());
    let mats: Vec<Matrix<Rational>> = emb
        .row_vecs()
        .iter()
        .map(|v| Matrix::block_diag(&[unit(v), unit(v)]))
        .collect();
    PeriodLattice::with_order_action(o.clone(), Lattice::standard(4), &mats, None).unwrap()
}

/// One of the three test rings for the tensor construction, with a
/// matching isogeny type, embedding and Tate-module lattice.
pub struct SerreSetting {
    pub name: &'static str,
    pub order: Order<Integer>,
    pub ty: IsogenyType,
    pub embedding: Matrix<Rational>,
    pub lattice: PeriodLattice,
}

pub fn serre_settings() -> Vec<SerreSetting> {
    // O = Z, A = E with End⁰(E) = Q, T = Z^2
    let z = Order::standard(rational_line()).unwrap();
    let tz = PeriodLattice::with_order_action(
        z.clone(),
        Lattice::standard(2),
        &[Matrix::identity(2)],
        None,
    )
    .unwrap();
    // O = Z[i], A = E with CM by Z[i], T = Z[i]
    let gauss = Order::standard(quadratic_algebra(-1)).unwrap();
    let tg = regular_lattice(&gauss);
    let tri = upper_triangular();
    let tt = triangular_lattice(&tri);
    vec![
        SerreSetting {
            name: "Z",
            order: z,
            ty: factor("E", 1, rational_line(), 1),
            embedding: rows(&[&[1]]),
            lattice: tz,
        },
        SerreSetting {
            name: "Z[i]",
            order: gauss,
            ty: factor("E", 1, quadratic_algebra(-1), 1),
            embedding: rows(&[&[1, 0], &[0, 1]]),
            lattice: tg,
        },
        SerreSetting {
            name: "upper-triangular",
            order: tri,
            ty: factor("E", 1, rational_line(), 2),
            embedding: triangular_embedding(),
            lattice: tt,
        },
    ]
}

/// A random element of `o` with order coordinates in `{-bound, …, bound}`,
/// in algebra coordinates.
pub fn random_element(rng: &mut impl Rng, o: &Order<Integer>, bound: i64) -> Vec<Rational> {
    let n = o.dim();
    let c: Vec<Rational> = (0..n).map(|_| q(rng.gen_range(-bound..=bound))).collect();
    o.basis().vec_mul(&c)
}

pub fn random_matrix(
    rng: &mut impl Rng,
    o: &Order<Integer>,
    r: usize,
    s: usize,
    bound: i64,
) -> Vec<Vec<Vec<Rational>>> {
    (0..r)
        .map(|_| (0..s).map(|_| random_element(rng, o, bound)).collect())
        .collect()
}

/// `ρ φ` for a relation row `ρ` and a module map `φ` (generator `j` goes to
/// row `j` of `φ`): component `k` is `Σ_j φ_jk ρ_j`.
pub fn push_forward(
    alg: &Algebra<Integer>,
    rho: &[Vec<Rational>],
    phi: &[Vec<Vec<Rational>>],
) -> Vec<Vec<Rational>> {
    let s2 = phi.first().map_or(0, Vec::len);
    (0..s2)
        .map(|k| {
            rho.iter().enumerate().fold(alg.zero(), |acc, (j, r)| {
                let prod = alg.mul(&phi[j][k], r);
                acc.iter().zip(prod).map(|(a, b)| a.clone() + b).collect()
            })
        })
        .collect()
}

/// The module `O^{s}` modulo the given relation rows.
pub fn presentation(
    o: &Order<Integer>,
    s: usize,
    alpha: Vec<Vec<Vec<Rational>>>,
) -> ModulePresentation {
    ModulePresentation::new(o.clone(), s, alpha).unwrap()
}

/// The identity map `O^s → O^s`.
pub fn identity_map(o: &Order<Integer>, s: usize) -> Vec<Vec<Vec<Rational>>> {
    let alg = o.algebra();
    (0..s)
        .map(|j| {
            (0..s)
                .map(|k| {
                    if j == k {
                        alg.one().to_vec()
                    } else {
                        alg.zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// The `Q`-linear map `x ↦ φ x` on `(O ⊗ Q)^s`, as a matrix on row
/// vectors.
pub fn rational_map(alg: &Algebra<Integer>, phi: &[Vec<Vec<Rational>>]) -> Matrix<Rational> {
    let (s1, n) = (phi.len(), alg.dim());
    let s2 = phi.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for j in 0..s1 {
        for b in 0..n {
            let mut rho = vec![alg.zero(); s1];
            rho[j] = alg.basis_vector(b);
            out.push(push_forward(alg, &rho, phi).concat());
        }
    }
    Matrix::from_rows(out, s2 * n).unwrap()
}
