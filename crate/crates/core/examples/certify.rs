//! Per-prime maximality certificates for a maximal and a non-maximal order.

use std::sync::Arc;

use maxord::algebra::Algebra;
use maxord::order::{certify, Order};
use maxord::ring::{Integer, Rational, RingOps};

fn main() -> maxord::Result<()> {
    // Z[sqrt(-3)] sits with index 2 in the Eisenstein integers
    let alg = Arc::new(Algebra::<Integer>::poly_quotient(&[
        Rational::from_i64(3),
        Rational::zero(),
        Rational::one(),
    ])?);
    let o = Order::standard(alg)?;
    let c = certify(&o, &[])?;
    for p in &c.per_prime {
        println!(
            "Z[sqrt(-3)] at {}: idealizer_fixed={} residue_simple={}",
            p.prime, p.idealizer_fixed, p.residue_simple
        );
    }
    println!("Z[sqrt(-3)] maximal: {}", c.verdict);

    let mat = Order::standard(Arc::new(Algebra::<Integer>::matrix(2)))?;
    let c = certify(&mat, &[Integer::from_i64(2), Integer::from_i64(5)])?;
    println!("Mat_2(Z) maximal at 2 and 5: {}", c.verdict);
    Ok(())
}
