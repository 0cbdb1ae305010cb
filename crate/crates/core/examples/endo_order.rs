//! Endomorphism orders of lattices in D^r and the valuation w on Mat_2(Q).

use std::sync::Arc;

use maxord::algebra::{Algebra, AlgebraElement};
use maxord::exactlin::Lattice;
use maxord::order::{discriminant, endomorphism_order, valuation_w, Order};
use maxord::ring::{Frac, Integer, Rational, RingOps};

fn main() -> maxord::Result<()> {
    let q = Arc::new(Algebra::<Integer>::poly_quotient(&[
        Rational::zero(),
        Rational::one(),
    ])?);
    let z = Order::standard(q)?;
    // M = Z + 3Z in Q^2: End(M) is conjugate to Mat_2(Z), so its discriminant
    // matches that of Mat_2(Z)
    let m = Lattice::from_rows(
        vec![
            vec![Rational::one(), Rational::zero()],
            vec![Rational::zero(), Rational::from_i64(3)],
        ],
        2,
    )?;
    let e = endomorphism_order(&z, &m, 2)?;
    println!("End(Z + 3Z) basis:");
    for row in e.basis_vectors() {
        let entries: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  [{}]", entries.join(", "));
    }
    println!("discriminant {}", discriminant(&e));

    let mat = Arc::new(Algebra::<Integer>::matrix(2));
    let a = AlgebraElement::new(
        mat,
        vec![
            Frac::from_i64(2),
            Frac::zero(),
            Frac::zero(),
            Frac::from_i64(4),
        ],
    )?;
    println!(
        "w_2(diag(2, 4)) = {}",
        valuation_w(&a, &Integer::from_i64(2))?
    );
    Ok(())
}
