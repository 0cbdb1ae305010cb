//! Radical over 2 of Z[sqrt(-3)], and the two-sided ideals of Mat_2(Z) over 3.

use std::sync::Arc;

use maxord::algebra::Algebra;
use maxord::exactlin::lattice_index;
use maxord::order::{
    lattice_power, power_law_holds, radical_mod_p, two_sided_ideals_over_p, Order,
};
use maxord::ring::{Integer, Rational, RingOps};

fn main() -> maxord::Result<()> {
    let two = Integer::from_i64(2);
    let alg = Arc::new(Algebra::<Integer>::poly_quotient(&[
        Rational::from_i64(3),
        Rational::zero(),
        Rational::one(),
    ])?);
    let o = Order::standard(alg)?;
    let rad = radical_mod_p(&o, &two)?;
    let sq = lattice_power(&o, rad.lattice(), 2)?;
    println!("[O : rad] = {}", lattice_index(rad.lattice(), o.lattice())?);
    println!(
        "rad^2 = 2 rad: {}",
        sq == rad.lattice().scale(&Rational::from_i64(2))
    );
    println!("power law at 2: {}", power_law_holds(&o, &two)?);

    let three = Integer::from_i64(3);
    let mat = Order::standard(Arc::new(Algebra::<Integer>::matrix(2)))?;
    let ideals = two_sided_ideals_over_p(&mat, &three)?;
    println!(
        "two-sided ideals of Mat_2(Z) between 3 Mat_2(Z) and Mat_2(Z): {}",
        ideals.len()
    );
    println!("power law at 3: {}", power_law_holds(&mat, &three)?);
    Ok(())
}
