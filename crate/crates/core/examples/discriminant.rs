//! Discriminants of a few orders and their factorizations.

use std::sync::Arc;

use maxord::algebra::Algebra;
use maxord::order::{discriminant, Order};
use maxord::ring::{Integer, Pid, Rational, RingOps};

fn main() -> maxord::Result<()> {
    let cubic = Algebra::<Integer>::poly_quotient(&[
        Rational::from_i64(-2),
        Rational::zero(),
        Rational::zero(),
        Rational::one(),
    ])?;
    let quaternions = Algebra::quaternion(Rational::from_i64(-1), Rational::from_i64(-3))?;
    for (name, alg) in [
        ("Z[2^(1/3)]", cubic),
        ("Z<i, j | i^2=-1, j^2=-3>", quaternions),
    ] {
        let d = discriminant(&Order::standard(Arc::new(alg))?);
        let factors: Vec<String> = d.factor().iter().map(|(p, e)| format!("{p}^{e}")).collect();
        println!("{name}: disc {d} = {}", factors.join(" * "));
    }
    Ok(())
}
