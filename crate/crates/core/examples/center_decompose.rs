//! Center and Wedderburn decomposition of `Q x Mat_2(Q)`.

use maxord::algebra::{central_idempotents, decompose, Algebra};
use maxord::ring::{Integer, Rational, RingOps};

fn main() -> maxord::Result<()> {
    let line = Algebra::<Integer>::poly_quotient(&[Rational::zero(), Rational::one()])?;
    let alg = Algebra::product(&[line, Algebra::matrix(2)]);
    println!("dim {}, center dim {}", alg.dim(), alg.center().nrows());
    println!("separable semisimple: {}", alg.is_separable_semisimple());
    let idems = central_idempotents(&alg, 7)?;
    let d = decompose(&alg, &idems)?;
    for (e, f) in d.idempotents.iter().zip(&d.factors) {
        let coords: Vec<String> = e.iter().map(ToString::to_string).collect();
        println!(
            "idempotent [{}] cuts out a factor of dim {}",
            coords.join(", "),
            f.dim()
        );
    }
    Ok(())
}
