//! Integer polynomials and their factorization (Zassenhaus: factor modulo a
//! good prime, Hensel-lift, recombine).
//!
//! Coefficients are stored low to high without trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{modp, Frac, Integer};

pub type ZPoly = Vec<BigInt>;

fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub fn primitive_part(a: &[BigInt]) -> ZPoly {
    let c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if a.last().unwrap().is_negative() {
        -c
    } else {
        c
    };
    a.iter().map(|x| x / &sign).collect()
}

/// Clear denominators of a rational polynomial and take the primitive part.
pub fn primitive_from_rational(poly: &[Frac<Integer>]) -> ZPoly {
    let l = poly.iter().fold(BigInt::one(), |l, c| l.lcm(c.den()));
    let ints: ZPoly = poly.iter().map(|c| c.num() * (&l / c.den())).collect();
    primitive_part(&trim(ints))
}

/// Exact division over `Z`; `None` when `b` does not divide `a`.
pub fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = b.len().checked_sub(1)?;
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return if trim(r).is_empty() {
            Some(Vec::new())
        } else {
            None
        };
    }
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let (c, rem) = r[i + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(trim(q))
    } else {
        None
    }
}

fn to_modp(a: &[BigInt], p: u64) -> Vec<u64> {
    let bp = BigInt::from(p);
    modp::ptrim(
        a.iter()
            .map(|c| c.mod_floor(&bp).to_u64().unwrap())
            .collect(),
    )
}

fn from_modp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Lift `f = g*h mod p` (g monic, coprime factors) to `f = G*H mod p^k`.
fn hensel_pair(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (one, s, t) = modp::pxgcd(g, h, p);
    debug_assert_eq!(one, vec![1]);
    let bp = BigInt::from(p);
    let mut gz = from_modp(g);
    let mut hz = from_modp(h);
    let mut m = bp.clone();
    for _ in 1..k {
        let diff = sub(f, &mul(&gz, &hz));
        let e: ZPoly = diff.iter().map(|c| c / &m).collect();
        let e = to_modp(&e, p);
        let (q, a) = modp::pdivrem(&modp::pmul(&t, &e, p), g, p);
        let b = modp::padd(&modp::pmul(&s, &e, p), &modp::pmul(h, &q, p), p);
        let next = &m * &bp;
        gz = reduce(&add_scaled(&gz, &from_modp(&a), &m), &next);
        hz = reduce(&add_scaled(&hz, &from_modp(&b), &m), &next);
        m = next;
    }
    (gz, hz)
}

fn add_scaled(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero) * m)
            .collect(),
    )
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| {
        (3..)
            .step_by(2)
            .take_while(|d| d * d <= n)
            .all(|d| n % d != 0)
    })
}

/// Factor a squarefree integer polynomial into primitive irreducible
/// factors with positive leading coefficients. Constant content is dropped.
pub fn factor_squarefree(f: &[BigInt]) -> Vec<ZPoly> {
    let f = primitive_part(f);
    let n = match f.len().checked_sub(1) {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f],
        Some(n) => n,
    };
    let lc = f[n].clone();
    let p = small_primes()
        .find(|&p| {
            if (&lc % BigInt::from(p)).is_zero() {
                return false;
            }
            let fp = to_modp(&f, p);
            let g = modp::pgcd(&fp, &modp::pderiv(&fp, p), p);
            g == vec![1]
        })
        .expect("some prime keeps the polynomial squarefree");
    let modular: Vec<Vec<u64>> = modp::factor(&to_modp(&f, p), p)
        .into_iter()
        .map(|(g, _)| g)
        .collect();
    if modular.len() == 1 {
        return vec![f];
    }
    // Mignotte-style bound on factor coefficients
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1;
    let bound = (BigInt::one() << n) * norm * lc.abs() * 2;
    let bp = BigInt::from(p);
    let mut k = 1u32;
    let mut m = bp.clone();
    while m <= bound {
        m *= &bp;
        k += 1;
    }

    let mut lifted: Vec<ZPoly> = Vec::new();
    let mut current = f.clone();
    let lc_p = to_modp(std::slice::from_ref(&lc), p);
    for i in 0..modular.len() - 1 {
        let rest = modular[i + 1..]
            .iter()
            .fold(lc_p.clone(), |acc, g| modp::pmul(&acc, g, p));
        let (g, h) = hensel_pair(&current, &modular[i], &rest, p, k);
        lifted.push(g);
        current = h;
    }
    // last factor: current = lc * g_r mod m
    let lc_inv = lc.modinv(&m).expect("lc invertible mod p^k");
    lifted.push(reduce(
        &current.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(),
        &m,
    ));

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut g_rest = f;
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        for subset in combinations(&remaining, size) {
            let lc_rest = g_rest.last().unwrap().clone();
            let cand = subset.iter().fold(vec![lc_rest.clone()], |acc, &i| {
                reduce(&mul(&acc, &lifted[i]), &m)
            });
            let cand = primitive_part(&symmetric(&cand, &m));
            if let Some(q) = exact_div(&g_rest, &cand) {
                out.push(cand);
                g_rest = primitive_part(&q);
                remaining.retain(|i| !subset.contains(i));
                continue 'outer;
            }
        }
        size += 1;
    }
    out.push(g_rest);
    out.sort_by_key(|g| (g.len(), g.clone()));
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn product(fs: &[ZPoly]) -> ZPoly {
        fs.iter().fold(z(&[1]), |acc, f| mul(&acc, f))
    }

    #[test]
    fn swinnerton_dyer_style_cases() {
        // x^4 + 1 is irreducible over Q but splits modulo every prime
        assert_eq!(
            factor_squarefree(&z(&[1, 0, 0, 0, 1])),
            vec![z(&[1, 0, 0, 0, 1])]
        );
        // (x^2 - 2)(x^2 - 3)
        let f = mul(&z(&[-2, 0, 1]), &z(&[-3, 0, 1]));
        assert_eq!(factor_squarefree(&f), vec![z(&[-3, 0, 1]), z(&[-2, 0, 1])]);
    }

    #[test]
    fn non_monic_factors() {
        let parts = vec![z(&[1, 2]), z(&[-1, 3]), z(&[5, 0, 7]), z(&[1, 1, 0, 2])];
        let f = product(&parts);
        let got = factor_squarefree(&f);
        assert_eq!(got.len(), 4);
        assert_eq!(product(&got), f);
    }

    #[test]
    fn x_squared_minus_one() {
        let got = factor_squarefree(&z(&[-1, 0, 1]));
        assert_eq!(got, vec![z(&[-1, 1]), z(&[1, 1])]);
    }
}
