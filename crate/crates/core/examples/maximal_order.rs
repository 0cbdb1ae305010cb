//! Enlarges the Lipschitz quaternions `Z<i, j>` to the Hurwitz order.

use std::sync::Arc;

use maxord::algebra::Algebra;
use maxord::exactlin::lattice_index;
use maxord::order::{certify, discriminant, maximal_order, MaximalOrderOptions, Order};
use maxord::ring::{Integer, Rational, RingOps};

fn main() -> maxord::Result<()> {
    let minus_one = Rational::from_i64(-1);
    let alg = Arc::new(Algebra::<Integer>::quaternion(
        minus_one.clone(),
        minus_one,
    )?);
    let lipschitz = Order::standard(alg)?;
    let hurwitz = maximal_order(&lipschitz, &MaximalOrderOptions::default())?;
    println!("basis of the maximal order (rows in 1, i, j, k):");
    for row in hurwitz.basis_vectors() {
        let entries: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  [{}]", entries.join(", "));
    }
    println!(
        "index over Lipschitz: {}",
        lattice_index(lipschitz.lattice(), hurwitz.lattice())?
    );
    println!(
        "discriminants: {} -> {}",
        discriminant(&lipschitz),
        discriminant(&hurwitz)
    );
    println!("certified maximal: {}", certify(&hurwitz, &[])?.verdict);
    Ok(())
}
