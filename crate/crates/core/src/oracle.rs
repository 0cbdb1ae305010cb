//! Brute-force reference computations that share no code with the order
//! engine beyond rational arithmetic. Used by `selftest` and the test
//! suites to check maximal orders independently.

use crate::ring::{Field, Rational, RingOps};

/// Multiplication on coordinate vectors.
pub type Product<'a> = &'a dyn Fn(&[Rational], &[Rational]) -> Vec<Rational>;

/// Grows an order one index-`p` superlattice at a time.
///
/// Every lattice `L + Z·w` with `p·w ∈ L` is tried, for each `p` in
/// `primes`; a candidate is kept when it is closed under `mul` and passes
/// `accept`. Stops when no candidate survives. `basis` must contain `one`
/// in its span and be closed under multiplication.
pub fn saturate_by_superlattices(
    mul: Product,
    accept: &dyn Fn(&[Rational]) -> bool,
    basis: Vec<Vec<Rational>>,
    primes: &[u64],
) -> Vec<Vec<Rational>> {
    let n = basis.len();
    let mut basis = basis;
    'grow: loop {
        for &p in primes {
            for v in projective_points(p, n) {
                let cand = enlarge(&basis, &v, p);
                if cand.iter().all(|b| accept(b)) && closed(mul, &cand) {
                    basis = cand;
                    continue 'grow;
                }
            }
        }
        return basis;
    }
}

/// Points of `P^{n-1}(F_p)`, each scaled so that its last nonzero entry is 1.
fn projective_points(p: u64, n: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for lead in 0..n {
        let free = lead as u32;
        for k in 0..p.pow(free) {
            let mut v = vec![0u64; n];
            let mut rest = k;
            for slot in v.iter_mut().take(lead) {
                *slot = rest % p;
                rest /= p;
            }
            v[lead] = 1;
            out.push(v);
        }
    }
    out
}

/// `L + Z·(Σ v_i b_i)/p`: the new vector replaces the basis element at the
/// position of the last nonzero entry of `v`.
fn enlarge(basis: &[Vec<Rational>], v: &[u64], p: u64) -> Vec<Vec<Rational>> {
    let lead = v.iter().rposition(|&c| c != 0).expect("nonzero point");
    let inv_p = Rational::from_i64(p as i64).inv();
    let dim = basis[0].len();
    let w: Vec<Rational> = (0..dim)
        .map(|k| {
            v.iter().zip(basis).fold(Rational::zero(), |acc, (&c, b)| {
                acc + Rational::from_i64(c as i64) * b[k].clone()
            }) * inv_p.clone()
        })
        .collect();
    let mut out = basis.to_vec();
    out[lead] = w;
    out
}

fn closed(mul: Product, basis: &[Vec<Rational>]) -> bool {
    basis.iter().all(|a| {
        basis.iter().all(|b| {
            coordinates(basis, &mul(a, b)).is_some_and(|c| c.iter().all(Rational::is_integral))
        })
    })
}

/// Solves `x · basis = v` by Gaussian elimination.
pub fn coordinates(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    let n = basis.len();
    let dim = v.len();
    // augmented system: columns are the basis vectors, last column is v
    let mut rows: Vec<Vec<Rational>> = (0..dim)
        .map(|k| {
            let mut r: Vec<Rational> = basis.iter().map(|b| b[k].clone()).collect();
            r.push(v[k].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(piv) = (row..dim).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, piv);
        let inv = rows[row][col].inv();
        for x in rows[row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..dim {
            if r != row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot_row = rows[row].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot_row) {
                    *x = x.clone() - f.clone() * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if rows[row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][n].clone();
    }
    Some(x)
}

/// Whether two lattices given by bases coincide.
pub fn same_lattice(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    let inside = |x: &[Vec<Rational>], y: &[Vec<Rational>]| {
        x.iter()
            .all(|v| coordinates(y, v).is_some_and(|c| c.iter().all(Rational::is_integral)))
    };
    a.len() == b.len() && inside(a, b) && inside(b, a)
}

/// Maximal order of `Q(√d)` grown from `Z[√d]`, in coordinates `(1, √d)`.
/// Candidates must consist of integral elements: trace `2a` and norm
/// `a² - d b²` in `Z`.
pub fn quadratic_maximal_order(d: i64) -> Vec<Vec<Rational>> {
    let dq = Rational::from_i64(d);
    let mul = move |x: &[Rational], y: &[Rational]| {
        vec![
            x[0].clone() * y[0].clone() + dq.clone() * x[1].clone() * y[1].clone(),
            x[0].clone() * y[1].clone() + x[1].clone() * y[0].clone(),
        ]
    };
    let dq = Rational::from_i64(d);
    let integral = move |x: &[Rational]| {
        let trace = Rational::from_i64(2) * x[0].clone();
        let norm = x[0].clone() * x[0].clone() - dq.clone() * x[1].clone() * x[1].clone();
        trace.is_integral() && norm.is_integral()
    };
    let start = vec![
        vec![Rational::one(), Rational::zero()],
        vec![Rational::zero(), Rational::one()],
    ];
    saturate_by_superlattices(
        &mul,
        &integral,
        start,
        &prime_divisors(4 * d.unsigned_abs()),
    )
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Squarefree `d` with `2 ≤ |d| ≤ bound`, plus `-1`.
pub fn squarefree_discriminants(bound: i64) -> Vec<i64> {
    (-bound..=bound)
        .filter(|&d| d != 0 && d != 1)
        .filter(|&d| {
            let a = d.unsigned_abs();
            (2..=a).take_while(|p| p * p <= a).all(|p| a % (p * p) != 0)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        Rational::parse(s).unwrap()
    }

    #[test]
    fn known_rings_of_integers() {
        // d ≡ 1 mod 4 gains (1 + √d)/2, the others stay Z[√d]
        let m = quadratic_maximal_order(-3);
        assert!(same_lattice(
            &m,
            &[vec![q("1"), q("0")], vec![q("1/2"), q("1/2")]]
        ));
        let m = quadratic_maximal_order(5);
        assert!(same_lattice(
            &m,
            &[vec![q("1"), q("0")], vec![q("1/2"), q("1/2")]]
        ));
        for d in [-1, 2, 3, -5, 6] {
            let m = quadratic_maximal_order(d);
            assert!(
                same_lattice(&m, &[vec![q("1"), q("0")], vec![q("0"), q("1")]]),
                "{d}"
            );
        }
    }

    #[test]
    fn projective_point_count() {
        assert_eq!(projective_points(2, 2).len(), 3);
        assert_eq!(projective_points(3, 3).len(), 13);
    }

    #[test]
    fn discriminant_list() {
        let ds = squarefree_discriminants(10);
        assert!(ds.contains(&-1) && ds.contains(&10) && ds.contains(&-7));
        assert!(!ds.contains(&8) && !ds.contains(&-9) && !ds.contains(&1));
    }
}
