//! Hermite and Smith normal forms, lattice index and intersection over Z.

use maxord::exactlin::{hnf, lattice_index, snf, Lattice, Matrix};
use maxord::ring::{Integer, Rational, RingOps};

fn ints(rows: &[&[i64]]) -> Matrix<Integer> {
    let n = rows[0].len();
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Integer::from_i64(x)).collect())
            .collect(),
        n,
    )
    .expect("rectangular")
}

fn main() -> maxord::Result<()> {
    let m = ints(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let h = hnf(&m);
    println!("HNF rank {}:", h.rank());
    for i in 0..h.h.nrows() {
        println!(
            "  {:?}",
            h.h.row(i)
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        );
    }
    let s = snf(&m);
    println!(
        "invariant factors: {:?}",
        s.invariant_factors()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    let sub = Lattice::<Integer>::from_generators(&m.to_frac())?;
    let full = Lattice::standard(3);
    println!("[Z^3 : L] = {}", lattice_index(&sub, &full)?);
    let half = full.scale(&Rational::new(Integer::one(), Integer::from_i64(2)));
    println!("L contained in (1/2)Z^3: {}", half.contains(&sub));
    println!(
        "[L : L ∩ 4Z^3] = {}",
        lattice_index(&sub.intersection(&full.scale(&Rational::from_i64(4))), &sub)?
    );
    Ok(())
}
