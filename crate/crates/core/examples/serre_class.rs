//! Isogeny classes of M ⊗_O E^2 for the three cyclic modules over the
//! upper-triangular order O, with O ⊗ Q embedded in Mat_2(Q) = End⁰(E^2).

use std::sync::Arc;

use maxord::algebra::Algebra;
use maxord::exactlin::Matrix;
use maxord::order::Order;
use maxord::ring::{Integer, Rational, RingOps};
use maxord::serre::{
    tensor_dimension, tensor_isogeny_class, IsogenyFactor, IsogenyType, ModulePresentation,
};

fn q(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_i64(x)).collect()
}

fn main() -> maxord::Result<()> {
    let mat = Algebra::<Integer>::matrix(2);
    let rows = vec![q(&[1, 0, 0, 0]), q(&[0, 1, 0, 0]), q(&[0, 0, 0, 1])];
    let basis = Matrix::from_rows(rows.clone(), 4)?;
    let tri = Order::standard(Arc::new(mat.subalgebra(&basis, mat.one())?))?;
    let embedding = Matrix::from_rows(rows, 4)?;
    let e2 = IsogenyType::new(vec![IsogenyFactor {
        label: "E".into(),
        dim: 1,
        endo: Arc::new(Algebra::poly_quotient(&q(&[0, 1]))?),
        mult: 2,
    }])?;
    // basis of O is E11, E12, E22
    let modules = [
        ("O/E11 O", vec![vec![q(&[1, 0, 0])]]),
        ("O/E22 O", vec![vec![q(&[0, 0, 1])]]),
        (
            "O/(E12, E22)O",
            vec![vec![q(&[0, 1, 0])], vec![q(&[0, 0, 1])]],
        ),
    ];
    for (name, alpha) in modules {
        let m = ModulePresentation::new(tri.clone(), 1, alpha)?;
        let ty = tensor_isogeny_class(&m, &e2, &embedding)?;
        println!(
            "{name} ⊗ E^2 ~ E^{} (dimension {})",
            ty.factors()[0].mult,
            tensor_dimension(&ty)
        );
    }
    Ok(())
}
