//! The minimal isogeny A → O' ⊗_O A for Z[sqrt(-3)] ⊂ Z[ω] acting on a CM
//! elliptic curve, realized on the period lattice Z[sqrt(-3)].

use std::sync::Arc;

use maxord::algebra::Algebra;
use maxord::exactlin::{Lattice, Matrix};
use maxord::order::{maximal_order, MaximalOrderOptions, Order};
use maxord::ring::{Integer, Rational, RingOps};
use maxord::serre::{minimal_isogeny, IsogenyFactor, IsogenyType, PeriodLattice};

fn main() -> maxord::Result<()> {
    let alg = Arc::new(Algebra::<Integer>::poly_quotient(&[
        Rational::from_i64(3),
        Rational::zero(),
        Rational::one(),
    ])?);
    let o = Order::standard(alg.clone())?;
    let big = maximal_order(&o, &MaximalOrderOptions::default())?;
    // the action of x = sqrt(-3) on Z[sqrt(-3)] in the basis 1, x
    let x = Matrix::from_rows(
        vec![
            vec![Rational::zero(), Rational::from_i64(-3)],
            vec![Rational::one(), Rational::zero()],
        ],
        2,
    )?;
    let t = PeriodLattice::with_order_action(
        o.clone(),
        Lattice::standard(2),
        &[Matrix::identity(2), x],
        None,
    )?;
    let ty = IsogenyType::new(vec![IsogenyFactor {
        label: "E".into(),
        dim: 1,
        endo: alg,
        mult: 1,
    }])?;
    let d = minimal_isogeny(&o, &big, &ty, &[t])?;
    println!("degree {}", d.degree);
    for k in &d.per_prime_kernel {
        println!(
            "kernel at {}: elementary divisors {:?}",
            k.prime, k.elementary_divisors
        );
    }
    Ok(())
}
