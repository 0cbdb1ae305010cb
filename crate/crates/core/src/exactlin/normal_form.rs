//! Hermite and Smith normal forms over a Euclidean ground ring.
//!
//! Both work directly over `R` with unimodular gcd steps, so no fractions
//! appear in intermediate results.

use super::Matrix;
use crate::error::{Error, Result};
use crate::ring::{xgcd, Frac, Pid};

/// Row-style Hermite normal form `h = u * m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hnf<R: Pid> {
    pub h: Matrix<R>,
    pub u: Matrix<R>,
    /// Pivot column of each nonzero row of `h`.
    pub pivots: Vec<usize>,
}

impl<R: Pid> Hnf<R> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Replace rows `(a, b)` by `(x*ra + y*rb, z*ra + w*rb)`.
fn combine_rows<R: Pid>(m: &mut Matrix<R>, a: usize, b: usize, [x, y, z, w]: [&R; 4]) {
    for j in 0..m.ncols() {
        let (ra, rb) = (m[(a, j)].clone(), m[(b, j)].clone());
        m[(a, j)] = x.clone() * ra.clone() + y.clone() * rb.clone();
        m[(b, j)] = z.clone() * ra + w.clone() * rb;
    }
}

fn combine_cols<R: Pid>(m: &mut Matrix<R>, a: usize, b: usize, [x, y, z, w]: [&R; 4]) {
    for i in 0..m.nrows() {
        let (ca, cb) = (m[(i, a)].clone(), m[(i, b)].clone());
        m[(i, a)] = x.clone() * ca.clone() + y.clone() * cb.clone();
        m[(i, b)] = z.clone() * ca + w.clone() * cb;
    }
}

fn add_row_multiple<R: Pid>(m: &mut Matrix<R>, target: usize, src: usize, c: &R) {
    for j in 0..m.ncols() {
        let v = m[(target, j)].clone() + c.clone() * m[(src, j)].clone();
        m[(target, j)] = v;
    }
}

fn add_col_multiple<R: Pid>(m: &mut Matrix<R>, target: usize, src: usize, c: &R) {
    for i in 0..m.nrows() {
        let v = m[(i, target)].clone() + c.clone() * m[(i, src)].clone();
        m[(i, target)] = v;
    }
}

fn scale_row<R: Pid>(m: &mut Matrix<R>, i: usize, c: &R) {
    for j in 0..m.ncols() {
        let v = c.clone() * m[(i, j)].clone();
        m[(i, j)] = v;
    }
}

/// Hermite normal form of a matrix over `R`.
///
/// Pivots are normalized (positive, or monic) and entries above each pivot
/// are canonical remainders, so two matrices with the same row space have
/// identical `h`.
pub fn hnf<R: Pid>(m: &Matrix<R>) -> Hnf<R> {
    let (k, n) = (m.nrows(), m.ncols());
    let mut h = m.clone();
    let mut u = Matrix::<R>::identity(k);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == k {
            break;
        }
        for i in row + 1..k {
            if h[(i, col)].is_zero() {
                continue;
            }
            let a = h[(row, col)].clone();
            let b = h[(i, col)].clone();
            let (g, s, t) = xgcd(&a, &b);
            let (ag, bg) = (a.exact_div(&g), b.exact_div(&g));
            let nb = -bg;
            combine_rows(&mut h, row, i, [&s, &t, &nb, &ag]);
            combine_rows(&mut u, row, i, [&s, &t, &nb, &ag]);
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        let unit = h[(row, col)].normalizing_unit();
        scale_row(&mut h, row, &unit);
        scale_row(&mut u, row, &unit);
        let pivot = h[(row, col)].clone();
        for i in 0..row {
            let q = h[(i, col)].div_rem(&pivot).0;
            if !q.is_zero() {
                let nq = -q;
                add_row_multiple(&mut h, i, row, &nq);
                add_row_multiple(&mut u, i, row, &nq);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Hnf { h, u, pivots }
}

/// Hermite form of a matrix given over the fraction field; entries must be
/// integral.
pub fn hnf_frac<R: Pid>(m: &Matrix<Frac<R>>) -> Result<Hnf<R>> {
    let ring = m.to_ring().ok_or_else(|| {
        let bad = m
            .entries()
            .iter()
            .find(|x| !x.is_integral())
            .map(ToString::to_string)
            .unwrap_or_default();
        Error::InputNotIntegral(bad)
    })?;
    Ok(hnf(&ring))
}

/// Smith normal form `s = u * m * v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf<R: Pid> {
    pub s: Matrix<R>,
    pub u: Matrix<R>,
    pub v: Matrix<R>,
}

impl<R: Pid> Snf<R> {
    /// Nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<R> {
        (0..self.s.nrows().min(self.s.ncols()))
            .map(|i| self.s[(i, i)].clone())
            .filter(|d| !d.is_zero())
            .collect()
    }
}

/// Smith normal form over `R`: diagonal, normalized, each entry dividing
/// the next.
pub fn snf<R: Pid>(m: &Matrix<R>) -> Snf<R> {
    let (k, n) = (m.nrows(), m.ncols());
    let mut s = m.clone();
    let mut u = Matrix::<R>::identity(k);
    let mut v = Matrix::<R>::identity(n);
    for t in 0..k.min(n) {
        // smallest nonzero entry of the trailing block goes to (t, t)
        let best = (t..k)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !s[(i, j)].is_zero())
            .min_by_key(|&(i, j)| s[(i, j)].size());
        let Some((bi, bj)) = best else { break };
        s.swap_rows(t, bi);
        u.swap_rows(t, bi);
        s.swap_cols(t, bj);
        v.swap_cols(t, bj);
        loop {
            for i in t + 1..k {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let a = s[(t, t)].clone();
                let b = s[(i, t)].clone();
                // plain elimination keeps the other rows out of row t
                if a.divides(&b) {
                    let q = -b.exact_div(&a);
                    add_row_multiple(&mut s, i, t, &q);
                    add_row_multiple(&mut u, i, t, &q);
                    continue;
                }
                let (g, x, y) = xgcd(&a, &b);
                let (ag, bg) = (a.exact_div(&g), b.exact_div(&g));
                let nb = -bg;
                combine_rows(&mut s, t, i, [&x, &y, &nb, &ag]);
                combine_rows(&mut u, t, i, [&x, &y, &nb, &ag]);
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let a = s[(t, t)].clone();
                let b = s[(t, j)].clone();
                if a.divides(&b) {
                    let q = -b.exact_div(&a);
                    add_col_multiple(&mut s, j, t, &q);
                    add_col_multiple(&mut v, j, t, &q);
                    continue;
                }
                let (g, x, y) = xgcd(&a, &b);
                let (ag, bg) = (a.exact_div(&g), b.exact_div(&g));
                let nb = -bg;
                combine_cols(&mut s, t, j, [&x, &y, &nb, &ag]);
                combine_cols(&mut v, t, j, [&x, &y, &nb, &ag]);
            }
            let column_clear = (t + 1..k).all(|i| s[(i, t)].is_zero());
            if !column_clear {
                continue;
            }
            let d = s[(t, t)].clone();
            let offender = (t + 1..k)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !d.divides(&s[(i, j)]));
            match offender {
                None => break,
                Some((i, _)) => {
                    let one = R::one();
                    add_row_multiple(&mut s, t, i, &one);
                    add_row_multiple(&mut u, t, i, &one);
                }
            }
        }
        let unit = s[(t, t)].normalizing_unit();
        scale_row(&mut s, t, &unit);
        scale_row(&mut u, t, &unit);
    }
    Snf { s, u, v }
}
