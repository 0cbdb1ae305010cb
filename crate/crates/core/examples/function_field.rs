//! The inseparable extension F_2(t)[x]/(x^2 + t): the order F_2[t]{1, t x}
//! becomes F_2[t]{1, x} at the prime t.

use std::sync::Arc;

use maxord::algebra::{parse_poly, Algebra};
use maxord::exactlin::{lattice_index, Matrix};
use maxord::order::{is_maximal_at_p, maximal_order, MaximalOrderOptions, Order};
use maxord::ring::{FpPoly, Frac, RingOps};

type F2t = FpPoly<2>;

fn main() -> maxord::Result<()> {
    let alg = Arc::new(Algebra::<F2t>::poly_quotient(&parse_poly::<F2t>(
        "x^2+t", 'x',
    )?)?);
    let t = Frac::from_ring(F2t::t());
    let start = Order::from_basis(
        alg,
        &Matrix::from_rows(
            vec![vec![Frac::one(), Frac::zero()], vec![Frac::zero(), t]],
            2,
        )?,
    )?;
    println!("separable: {}", start.algebra().is_separable_semisimple());
    let opts = MaximalOrderOptions {
        extra_primes: vec![F2t::t()],
        ..MaximalOrderOptions::default()
    };
    let m = maximal_order(&start, &opts)?;
    println!("index: {}", lattice_index(start.lattice(), m.lattice())?);
    let cert = is_maximal_at_p(&m, &F2t::t())?;
    println!("certificate at t: {}", cert.verdict());
    Ok(())
}
