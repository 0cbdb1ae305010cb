//! Word-sized prime field arithmetic: dense vectors, matrices and
//! polynomials over `F_p` with coefficients stored as `u64` in `[0, p)`.
#![allow(clippy::needless_range_loop)]

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + p as u128 - b as u128) % p as u128) as u64
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn neg(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b, p);
        }
        b = mul(b, b, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero element; `p` must be prime.
pub fn inv(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverting zero mod {p}");
    pow(a, p - 2, p)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let s = inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mul(*x, s, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    let v = mul(f, rows[r][j], p);
                    rows[i][j] = sub(rows[i][j], v, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis (in echelon form) of the span of `vectors`.
pub fn span_basis(vectors: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let mut rows = vectors.to_vec();
    rref(&mut rows, p);
    rows
}

pub fn rank(vectors: &[Vec<u64>], p: u64) -> usize {
    span_basis(vectors, p).len()
}

/// Basis of `{x : sum_i x_i * vectors[i] = 0}` where every vector has
/// length `width`.
pub fn left_kernel(vectors: &[Vec<u64>], width: usize, p: u64) -> Vec<Vec<u64>> {
    let n = vectors.len();
    // augment with identity and eliminate on the original columns
    let mut rows: Vec<Vec<u64>> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut row = v.clone();
            row.resize(width, 0);
            row.extend((0..n).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    let total = width + n;
    let mut r = 0;
    for c in 0..width {
        let Some(piv) = (r..n).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let s = inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mul(*x, s, p);
        }
        for i in 0..n {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..total {
                    let v = mul(f, rows[r][j], p);
                    rows[i][j] = sub(rows[i][j], v, p);
                }
            }
        }
        r += 1;
    }
    rows[r..].iter().map(|row| row[width..].to_vec()).collect()
}

/// Coordinates of `v` with respect to `basis` (any independent list), if
/// `v` lies in their span.
pub fn solve_in_span(basis: &[Vec<u64>], v: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut vectors = basis.to_vec();
    vectors.push(v.to_vec());
    let ker = left_kernel(&vectors, v.len(), p);
    let sol = ker.into_iter().find(|k| *k.last().unwrap() != 0)?;
    let s = neg(inv(*sol.last().unwrap(), p), p);
    Some(sol[..basis.len()].iter().map(|&x| mul(x, s, p)).collect())
}

/// Extend an independent list to a basis of `F_p^width` by standard vectors.
/// Returns only the added vectors.
pub fn complement(basis: &[Vec<u64>], width: usize, p: u64) -> Vec<Vec<u64>> {
    let mut current = basis.to_vec();
    let mut added = Vec::new();
    let mut r = rank(&current, p);
    for i in 0..width {
        let e: Vec<u64> = (0..width).map(|j| u64::from(i == j)).collect();
        current.push(e.clone());
        let r2 = rank(&current, p);
        if r2 > r {
            added.push(e);
            r = r2;
        } else {
            current.pop();
        }
    }
    added
}

// ---------------------------------------------------------------------------
// polynomials, coefficients low to high, no trailing zeros
// ---------------------------------------------------------------------------

pub fn ptrim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn pdeg(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn padd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    ptrim(
        (0..n)
            .map(|i| add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
            .collect(),
    )
}

pub fn psub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    ptrim(
        (0..n)
            .map(|i| sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
            .collect(),
    )
}

pub fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add(out[i + j], mul(x, y, p), p);
        }
    }
    ptrim(out)
}

pub fn pscale(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    ptrim(a.iter().map(|&x| mul(x, c, p)).collect())
}

/// Division with remainder; panics on a zero divisor.
pub fn pdivrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = pdeg(b).expect("polynomial division by zero");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), ptrim(r));
    }
    let lead_inv = inv(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = mul(r[i + db], lead_inv, p);
        q[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = sub(r[i + j], mul(c, bj, p), p);
            }
        }
    }
    r.truncate(db);
    (ptrim(q), ptrim(r))
}

pub fn prem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    pdivrem(a, b, p).1
}

pub fn pmonic(a: &[u64], p: u64) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&l) => pscale(a, inv(l, p), p),
    }
}

pub fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut x, mut y) = (ptrim(a.to_vec()), ptrim(b.to_vec()));
    while !y.is_empty() {
        let r = prem(&x, &y, p);
        x = y;
        y = r;
    }
    pmonic(&x, p)
}

/// Extended gcd over `F_p`: `(g, s, t)` with `s*a + t*b = g` monic.
pub fn pxgcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (ptrim(a.to_vec()), ptrim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = pdivrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = psub(&s0, &pmul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = psub(&t0, &pmul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    let l = inv(*r0.last().expect("xgcd of zeros"), p);
    (pscale(&r0, l, p), pscale(&s0, l, p), pscale(&t0, l, p))
}

pub fn pderiv(a: &[u64], p: u64) -> Vec<u64> {
    ptrim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul(c, i as u64 % p, p))
            .collect(),
    )
}

pub fn ppowmod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = prem(&[1], m, p);
    let b = prem(base, m, p);
    for i in (0..e.bits()).rev() {
        acc = prem(&pmul(&acc, &acc, p), m, p);
        if e.bit(i) {
            acc = prem(&pmul(&acc, &b, p), m, p);
        }
    }
    acc
}

fn pth_root(a: &[u64], p: u64) -> Vec<u64> {
    ptrim(a.iter().step_by(p as usize).copied().collect())
}

/// Squarefree decomposition of a monic polynomial: `(factor, multiplicity)`.
pub fn squarefree(f: &[u64], p: u64) -> Vec<(Vec<u64>, u32)> {
    let f = pmonic(f, p);
    let mut out = Vec::new();
    if pdeg(&f).unwrap_or(0) == 0 {
        return out;
    }
    let d = pderiv(&f, p);
    if d.is_empty() {
        for (g, m) in squarefree(&pth_root(&f, p), p) {
            out.push((g, m * p as u32));
        }
        return out;
    }
    let mut c = pgcd(&f, &d, p);
    let mut w = pdivrem(&f, &c, p).0;
    let mut i = 1;
    while pdeg(&w).unwrap_or(0) > 0 {
        let y = pgcd(&w, &c, p);
        let z = pdivrem(&w, &y, p).0;
        if pdeg(&z).unwrap_or(0) > 0 {
            out.push((pmonic(&z, p), i));
        }
        i += 1;
        w = y;
        c = pdivrem(&c, &w, p).0;
    }
    if pdeg(&c).unwrap_or(0) > 0 {
        for (g, m) in squarefree(&pth_root(&c, p), p) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn distinct_degree(f: &[u64], p: u64) -> Vec<(Vec<u64>, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x = vec![0, 1];
    let mut h = x.clone();
    let pe = BigUint::from(p);
    let mut d = 0;
    while pdeg(&f).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = ppowmod(&h, &pe, &f, p);
        let g = pgcd(&psub(&h, &x, p), &f, p);
        if pdeg(&g).unwrap_or(0) > 0 {
            f = pdivrem(&f, &g, p).0;
            h = prem(&h, &f, p);
            out.push((g, d));
        }
    }
    if pdeg(&f).unwrap_or(0) > 0 {
        let deg = pdeg(&f).unwrap();
        out.push((f, deg));
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2).
fn equal_degree(f: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    let n = pdeg(f).unwrap();
    if n == d {
        return vec![f.to_vec()];
    }
    loop {
        let a: Vec<u64> = ptrim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if pdeg(&a).unwrap_or(0) == 0 {
            continue;
        }
        let g = pgcd(&a, f, p);
        let candidate = if pdeg(&g).unwrap_or(0) > 0 {
            g
        } else if p == 2 {
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = prem(&pmul(&t, &t, p), f, p);
                acc = padd(&acc, &t, p);
            }
            pgcd(&acc, f, p)
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            let b = ppowmod(&a, &e, f, p);
            pgcd(&psub(&b, &[1], p), f, p)
        };
        let cd = pdeg(&candidate).unwrap_or(0);
        if cd > 0 && cd < n {
            let other = pdivrem(f, &candidate, p).0;
            let mut out = equal_degree(&candidate, d, p, rng);
            out.extend(equal_degree(&other, d, p, rng));
            return out;
        }
    }
}

/// Complete factorization of a nonzero polynomial into monic irreducibles,
/// sorted by (degree, coefficients). Deterministic.
pub fn factor(f: &[u64], p: u64) -> Vec<(Vec<u64>, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out: Vec<(Vec<u64>, u32)> = Vec::new();
    for (g, m) in squarefree(f, p) {
        for (h, d) in distinct_degree(&g, p) {
            for irr in equal_degree(&h, d, p, &mut rng) {
                out.push((irr, m));
            }
        }
    }
    out.sort_by_key(|(g, _)| (g.len(), g.iter().rev().copied().collect::<Vec<_>>()));
    let mut merged: Vec<(Vec<u64>, u32)> = Vec::new();
    for (g, m) in out {
        match merged.last_mut() {
            Some(last) if last.0 == g => last.1 += m,
            _ => merged.push((g, m)),
        }
    }
    merged
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(fs: &[(Vec<u64>, u32)], p: u64) -> Vec<u64> {
        let mut acc = vec![1];
        for (g, m) in fs {
            for _ in 0..*m {
                acc = pmul(&acc, g, p);
            }
        }
        acc
    }

    #[test]
    fn factors_reconstruct() {
        // (x^2+1)(x+1)^3 over F_3, x^4 + x over F_2, x^5 - x over F_5
        for (f, p) in [
            (
                pmul(&[1, 0, 1], &pmul(&[1, 1], &pmul(&[1, 1], &[1, 1], 3), 3), 3),
                3u64,
            ),
            (vec![0, 1, 0, 0, 1], 2),
            (vec![0, 4, 0, 0, 0, 1], 5),
            (vec![1, 0, 0, 0, 1], 2),
            (vec![0, 0, 1], 2),
        ] {
            let fs = factor(&f, p);
            assert_eq!(expand(&fs, p), pmonic(&f, p));
            for (g, _) in &fs {
                // irreducible: no roots of smaller degree factor found by re-factoring
                let again = factor(g, p);
                assert_eq!(again, vec![(g.clone(), 1)]);
            }
        }
        assert_eq!(factor(&[0, 4, 0, 0, 0, 1], 5).len(), 5);
    }

    #[test]
    fn kernel_and_span() {
        let p = 5;
        let v = vec![vec![1, 2, 3], vec![0, 1, 4], vec![1, 3, 2]];
        let ker = left_kernel(&v, 3, p);
        assert_eq!(ker.len(), 1);
        let k = &ker[0];
        for j in 0..3 {
            let s = (0..3).fold(0, |acc, i| add(acc, mul(k[i], v[i][j], p), p));
            assert_eq!(s, 0);
        }
        let c = solve_in_span(&v[..2], &v[2], p).unwrap();
        for j in 0..3 {
            let s = add(mul(c[0], v[0][j], p), mul(c[1], v[1][j], p), p);
            assert_eq!(s, v[2][j]);
        }
    }
}
