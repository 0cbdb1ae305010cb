//! Presentation independence and torsion vanishing for the tensor
//! construction.

mod common;

use common::*;
use maxord::ring::{Rational, RingOps};
use maxord::serre::{tensor_isogeny_class, tensor_lattice, ModulePresentation};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The same module with a redundant relation and a redundant generator
/// `g = Σ e_j c_j` appended.
fn inflate(rng: &mut ChaCha8Rng, m: &ModulePresentation) -> ModulePresentation {
    let o = m.order();
    let alg = o.algebra();
    let s = m.generators();
    let mut alpha: Vec<Vec<Vec<Rational>>> = m.alpha().to_vec();
    if let (Some(a), Some(b)) = (alpha.first().cloned(), alpha.last().cloned()) {
        let (x, y) = (random_element(rng, o, 2), random_element(rng, o, 2));
        let combo = a
            .iter()
            .zip(&b)
            .map(|(u, v)| {
                alg.mul(u, &x)
                    .into_iter()
                    .zip(alg.mul(v, &y))
                    .map(|(p, q)| p + q)
                    .collect()
            })
            .collect();
        alpha.push(combo);
    }
    let c: Vec<Vec<Rational>> = (0..s).map(|_| random_element(rng, o, 2)).collect();
    let mut alpha: Vec<Vec<Vec<Rational>>> = alpha
        .into_iter()
        .map(|mut row| {
            row.push(alg.zero());
            row
        })
        .collect();
    let mut extra: Vec<Vec<Rational>> = c
        .iter()
        .map(|x| x.iter().map(|v| -v.clone()).collect())
        .collect();
    extra.push(alg.one().to_vec());
    alpha.push(extra);
    presentation(o, s + 1, alpha)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn presentations_of_one_module_agree(seed in any::<u64>(), which in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let setting = serre_settings().swap_remove(which);
        let o = &setting.order;
        let s = rng.gen_range(1..=2);
        let r = rng.gen_range(0..=2);
        let m = presentation(o, s, random_matrix(&mut rng, o, r, s, 2));
        let big = inflate(&mut rng, &m);
        let (a, b) = (tensor_lattice(&m, &setting.lattice).unwrap(), tensor_lattice(&big, &setting.lattice).unwrap());
        prop_assert_eq!(a.rank, b.rank);
        prop_assert_eq!(a.divisors, b.divisors);
        let ta = tensor_isogeny_class(&m, &setting.ty, &setting.embedding).unwrap();
        let tb = tensor_isogeny_class(&big, &setting.ty, &setting.embedding).unwrap();
        prop_assert_eq!(ta, tb);
    }

    #[test]
    fn finite_modules_vanish(c in 1i64..=9, seed in any::<u64>(), which in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let setting = serre_settings().swap_remove(which);
        let o = &setting.order;
        let alg = o.algebra();
        let cone: Vec<Rational> = alg.one().iter().map(|x| x.clone() * q(c)).collect();
        let mut alpha = vec![vec![cone]];
        alpha.extend(random_matrix(&mut rng, o, 1, 1, 3));
        let m = presentation(o, 1, alpha);
        let l = tensor_lattice(&m, &setting.lattice).unwrap();
        prop_assert_eq!(l.rank, 0);
        // T / cT has order c^rank(T); the extra relation can only shrink it
        let order = l.divisors.iter().fold(maxord::ring::Integer::one(), |acc, d| acc * d.clone());
        let bound = (0..setting.lattice.rank()).fold(maxord::ring::Integer::one(), |acc, _| acc * int(c));
        prop_assert!(bound.clone() % order.clone() == int(0), "{} does not divide {}", order, bound);
        let ty = tensor_isogeny_class(&m, &setting.ty, &setting.embedding).unwrap();
        prop_assert_eq!(ty.dimension(), 0);
    }
}
