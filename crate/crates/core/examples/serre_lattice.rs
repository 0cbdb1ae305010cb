//! Period lattices of M ⊗_O A and the map induced by the inclusion
//! O/E11 O → O/E22 O, x ↦ E12 x, over the upper-triangular order.

use std::sync::Arc;

use maxord::algebra::Algebra;
use maxord::exactlin::{Lattice, Matrix};
use maxord::order::Order;
use maxord::ring::{Integer, Rational, RingOps};
use maxord::serre::{
    check_naturality, induced_map, tensor_lattice, ModulePresentation, PeriodLattice,
};

fn q(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_i64(x)).collect()
}

fn unit(i: usize, j: usize) -> Matrix<Rational> {
    Matrix::from_fn(2, 2, |r, c| Rational::from_i64(i64::from(r == i && c == j)))
}

fn main() -> maxord::Result<()> {
    let mat = Algebra::<Integer>::matrix(2);
    let basis = Matrix::from_rows(
        vec![q(&[1, 0, 0, 0]), q(&[0, 1, 0, 0]), q(&[0, 0, 0, 1])],
        4,
    )?;
    let tri = Order::standard(Arc::new(mat.subalgebra(&basis, mat.one())?))?;
    // O acts on T = Z^2 by matrix multiplication
    let t = PeriodLattice::with_order_action(
        tri.clone(),
        Lattice::standard(2),
        &[unit(0, 0), unit(0, 1), unit(1, 1)],
        None,
    )?;
    let m1 = ModulePresentation::new(tri.clone(), 1, vec![vec![q(&[1, 0, 0])]])?;
    let m2 = ModulePresentation::new(tri.clone(), 1, vec![vec![q(&[0, 0, 1])]])?;
    for (name, m) in [("O/E11 O", &m1), ("O/E22 O", &m2)] {
        let r = tensor_lattice(m, &t)?;
        println!(
            "{name} ⊗ T: rank {}, torsion divisors {:?}",
            r.rank, r.divisors
        );
    }
    let phi = vec![vec![q(&[0, 1, 0])]];
    let map = induced_map(&m1, &m2, &phi, &t)?;
    println!("induced map on lattices: {:?}", map.matrix);
    println!("natural: {}", check_naturality(&m1, &m2, &phi, &t)?);
    Ok(())
}
