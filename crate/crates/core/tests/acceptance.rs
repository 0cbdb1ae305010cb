//! The eight acceptance criteria. Runs as a plain binary and prints one
//! PASS/FAIL line per criterion with its runtime against the pinned bound.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::*;
use maxord::algebra::{parse_poly, Algebra};
use maxord::cli::{execute, Command, Flags, EXIT_NEGATIVE};
use maxord::exactlin::{hnf, lattice_index, ring_left_kernel, snf, Lattice, Matrix};
use maxord::oracle::{quadratic_maximal_order, same_lattice, squarefree_discriminants};
use maxord::order::{
    discriminant, is_maximal_at_p, lattice_power, maximal_order, p_maximal_order, power_law_holds,
    radical_mod_p, two_sided_ideals_over_p, MaximalOrderOptions, Order,
};
use maxord::ring::{FpPoly, Frac, Integer, Pid, Rational, RingOps};
use maxord::serre::{
    check_naturality, induced_map, minimal_isogeny, tensor_dimension, tensor_isogeny_class,
    tensor_lattice, ModulePresentation, PeriodLattice,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

type Outcome = Result<String, String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

const SEED: u64 = 20_240_601;

struct Criterion {
    name: &'static str,
    bound: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            name: "1 serre-class golden values for M1, M2, M3",
            bound: Duration::from_secs(1),
            run: serre_golden_values,
        },
        Criterion {
            name: "2 quadratic oracle sweep |d| <= 50",
            bound: Duration::from_secs(30),
            run: quadratic_oracle_sweep,
        },
        Criterion {
            name: "3 Lipschitz to Hurwitz",
            bound: Duration::from_secs(5),
            run: lipschitz_to_hurwitz,
        },
        Criterion {
            name: "4 inseparable F2[t] fixture",
            bound: Duration::from_secs(1),
            run: inseparable_fixture,
        },
        Criterion {
            name: "5 ideal power law on 10 maximal orders",
            bound: Duration::from_secs(10),
            run: ideal_power_law,
        },
        Criterion {
            name: "6 functor properties on random presentations",
            bound: Duration::from_secs(60),
            run: functor_properties,
        },
        Criterion {
            name: "7 minimal isogeny chains",
            bound: Duration::from_secs(10),
            run: minimal_isogeny_chains,
        },
        Criterion {
            name: "8 negative controls",
            bound: Duration::from_secs(10),
            run: negative_controls,
        },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let timing = format!(
            "{} ms, bound {} ms",
            elapsed.as_millis(),
            c.bound.as_millis()
        );
        match result {
            Ok(detail) if elapsed <= c.bound => {
                println!("PASS criterion {} ({timing}): {detail}", c.name)
            }
            Ok(detail) => {
                failures += 1;
                println!(
                    "FAIL criterion {} ({timing}): over time bound; {detail}",
                    c.name
                );
            }
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {} ({timing}): {why}", c.name);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn fixture(text: &str) -> Value {
    serde_json::from_str(text).expect("fixture is valid JSON")
}

fn run_fixture_input(doc: &Value, command: Command, flags: Flags) -> maxord::cli::Report {
    execute(command, &doc["input"], &flags).expect("fixture runs")
}

fn serre_golden_values() -> Outcome {
    // through the JSON front end, as shipped in the fixtures
    let docs = [
        fixture(include_str!("../fixtures/serre_m1.json")),
        fixture(include_str!("../fixtures/serre_m2.json")),
        fixture(include_str!("../fixtures/serre_m3.json")),
    ];
    let mut got = Vec::new();
    for d in &docs {
        let r = run_fixture_input(d, Command::SerreClass, Flags::default());
        got.push((
            r.document["multiplicities"].clone(),
            r.document["dimension"].clone(),
        ));
    }
    let want = vec![
        (json!([1]), json!(1)),
        (json!([1]), json!(1)),
        (json!([0]), json!(0)),
    ];
    ensure(got == want, || format!("front end gave {got:?}"))?;
    // and directly through the library
    let o = upper_triangular();
    let ty = factor("E", 1, rational_line(), 2);
    let gens: [&[&[i64]]; 3] = [&[&[1, 0, 0]], &[&[0, 0, 1]], &[&[0, 1, 0], &[0, 0, 1]]];
    let mut dims = Vec::new();
    for g in gens {
        let m = presentation(&o, 1, g.iter().map(|r| vec![qv(r)]).collect());
        let out =
            tensor_isogeny_class(&m, &ty, &triangular_embedding()).map_err(|e| e.to_string())?;
        dims.push((out.factors()[0].mult, tensor_dimension(&out)));
    }
    ensure(dims == vec![(1, 1), (1, 1), (0, 0)], || {
        format!("library gave {dims:?}")
    })?;
    Ok("multiplicities (1, 1, 0), dimensions (1, 1, 0)".into())
}

fn quadratic_oracle_sweep() -> Outcome {
    let ds = squarefree_discriminants(50);
    for &d in &ds {
        let start = Order::standard(quadratic_algebra(d)).unwrap();
        let m = maximal_order(&start, &MaximalOrderOptions::default())
            .map_err(|e| format!("d = {d}: {e}"))?;
        let oracle = quadratic_maximal_order(d);
        ensure(same_lattice(&m.basis_vectors(), &oracle), || {
            format!("d = {d}: lattices differ")
        })?;
        let hnf_oracle = Lattice::<Integer>::from_rows(oracle, 2).unwrap();
        ensure(hnf_oracle.basis() == m.basis(), || {
            format!("d = {d}: HNF bases differ")
        })?;
    }
    Ok(format!(
        "{} fields agree with the superlattice oracle",
        ds.len()
    ))
}

fn lipschitz_to_hurwitz() -> Outcome {
    let alg = Arc::new(Algebra::<Integer>::quaternion(q(-1), q(-1)).unwrap());
    let lipschitz = Order::standard(alg).unwrap();
    let hurwitz =
        maximal_order(&lipschitz, &MaximalOrderOptions::default()).map_err(|e| e.to_string())?;
    let index = lattice_index(lipschitz.lattice(), hurwitz.lattice()).unwrap();
    ensure(index == int(2), || format!("index {index}"))?;
    ensure(
        hurwitz.contains_element(&qs(&["1/2", "1/2", "1/2", "1/2"])),
        || "(1+i+j+k)/2 missing".into(),
    )?;
    let cert = is_maximal_at_p(&hurwitz, &int(2)).unwrap();
    ensure(cert.idealizer_fixed && cert.residue_simple, || {
        format!("{cert:?}")
    })?;
    let (din, dout) = (discriminant(&lipschitz), discriminant(&hurwitz));
    ensure(
        din.clone() == dout.clone() * index.clone() * index.clone(),
        || format!("disc {din} vs {dout}"),
    )?;
    ensure(din.clone() == dout.clone() * int(4), || {
        "ratio is not 4".into()
    })?;
    Ok(format!(
        "index 2, disc {din} -> {dout}, certificate at 2 passes"
    ))
}

type F2t = FpPoly<2>;

fn inseparable_fixture() -> Outcome {
    let alg =
        Arc::new(Algebra::<F2t>::poly_quotient(&parse_poly::<F2t>("x^2-t", 'x').unwrap()).unwrap());
    let t = F2t::t();
    let tx = Frac::from_ring(t.clone());
    let start = Order::from_basis(
        alg.clone(),
        &Matrix::from_rows(
            vec![vec![Frac::one(), Frac::zero()], vec![Frac::zero(), tx]],
            2,
        )
        .unwrap(),
    )
    .unwrap();
    let m = p_maximal_order(&start, &t).map_err(|e| e.to_string())?;
    let standard = Order::standard(alg).unwrap();
    ensure(m.basis() == standard.basis(), || {
        format!("got basis {:?}", m.basis())
    })?;
    let cert = is_maximal_at_p(&m, &t).unwrap();
    ensure(cert.verdict(), || format!("{cert:?}"))?;
    // the same through the front end with --primes t
    let doc = fixture(include_str!("../fixtures/inseparable.json"));
    let flags = Flags {
        primes: Some("t".into()),
        ..Flags::default()
    };
    let r = run_fixture_input(&doc, Command::MaximalOrder, flags);
    ensure(
        r.document["basis"] == json!([["1", "0"], ["0", "1"]]),
        || format!("front end gave {}", r.document["basis"]),
    )?;
    Ok("{1, t x} -> {1, x}, certificate at t passes".into())
}

fn ideal_power_law() -> Outcome {
    let standard_max = |alg: Arc<Algebra<Integer>>| {
        maximal_order(
            &Order::standard(alg).unwrap(),
            &MaximalOrderOptions::default(),
        )
        .unwrap()
    };
    let quaternions = Arc::new(Algebra::<Integer>::quaternion(q(-1), q(-1)).unwrap());
    let cube_root = Arc::new(Algebra::<Integer>::poly_quotient(&qv(&[-2, 0, 0, 1])).unwrap());
    let integer_cases: Vec<(&str, Order<Integer>, i64)> = vec![
        ("Mat2(Z) at 2", Order::standard(mat2()).unwrap(), 2),
        ("Mat2(Z) at 3", Order::standard(mat2()).unwrap(), 3),
        ("Mat2(Z) at 5", Order::standard(mat2()).unwrap(), 5),
        (
            "Z[i] at 2",
            Order::standard(quadratic_algebra(-1)).unwrap(),
            2,
        ),
        (
            "Z[i] at 3",
            Order::standard(quadratic_algebra(-1)).unwrap(),
            3,
        ),
        ("Hurwitz at 2", standard_max(quaternions), 2),
        (
            "Z[(1+sqrt(-3))/2] at 2",
            standard_max(quadratic_algebra(-3)),
            2,
        ),
        (
            "Z[(1+sqrt(5))/2] at 5",
            standard_max(quadratic_algebra(5)),
            5,
        ),
        ("Z[2^(1/3)] at 3", standard_max(cube_root), 3),
    ];
    let mut count = 0;
    for (name, o, p) in &integer_cases {
        let cert = is_maximal_at_p(o, &int(*p)).unwrap();
        ensure(cert.verdict(), || format!("{name}: not certified maximal"))?;
        let ideals = two_sided_ideals_over_p(o, &int(*p)).unwrap();
        ensure(power_law_holds(o, &int(*p)).unwrap(), || {
            format!(
                "{name}: {} ideals, not all powers of the radical",
                ideals.len()
            )
        })?;
        count += 1;
    }
    let alg =
        Arc::new(Algebra::<F2t>::poly_quotient(&parse_poly::<F2t>("x^2-t", 'x').unwrap()).unwrap());
    let f = Order::standard(alg).unwrap();
    let t = F2t::t();
    ensure(is_maximal_at_p(&f, &t).unwrap().verdict(), || {
        "F2[t] fixture not certified".into()
    })?;
    ensure(power_law_holds(&f, &t).unwrap(), || {
        "F2[t] fixture at t".into()
    })?;
    count += 1;
    Ok(format!(
        "{count} certified-maximal fixtures, every two-sided ideal is a power of rad"
    ))
}

/// Relation rows making `O^s` finite: `c_j e_j` for nonzero integers `c_j`.
fn torsion_relations(
    rng: &mut ChaCha8Rng,
    o: &Order<Integer>,
    s: usize,
) -> Vec<Vec<Vec<Rational>>> {
    let alg = o.algebra();
    let mut rows: Vec<Vec<Vec<Rational>>> = (0..s)
        .map(|j| {
            let c = q(rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 });
            (0..s)
                .map(|k| {
                    if k == j {
                        alg.one().iter().map(|x| x.clone() * c.clone()).collect()
                    } else {
                        alg.zero()
                    }
                })
                .collect()
        })
        .collect();
    let extra = rng.gen_range(0..=1);
    rows.extend(random_matrix(rng, o, extra, s, 2));
    rows
}

/// HNF of the saturation of the row space of `a` in `Z^width`.
fn saturation(a: &Matrix<Integer>, width: usize) -> Matrix<Integer> {
    if a.nrows() == 0 {
        return hnf(&Matrix::zeros(0, width)).h;
    }
    // kernel vectors of `a` as rows; the saturation is their annihilator
    let k = a.to_frac().right_kernel();
    if k.nrows() == 0 {
        return hnf(&Matrix::identity(width)).h;
    }
    let scaled = k
        .scale(&Frac::from_ring(k.common_denominator()))
        .to_ring()
        .expect("cleared");
    hnf(&ring_left_kernel(&scaled.transpose())).h
}

fn kernel_hnf(m: &Matrix<Integer>) -> Matrix<Integer> {
    if m.ncols() == 0 {
        return hnf(&Matrix::identity(m.nrows())).h;
    }
    hnf(&ring_left_kernel(m)).h
}

fn lattice_rank(m: &Matrix<Integer>) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        0
    } else {
        m.to_frac().rank()
    }
}

fn rank_is_twice_dimension(m: &ModulePresentation, s: &SerreSetting) -> Result<(), String> {
    let l = tensor_lattice(m, &s.lattice).map_err(|e| e.to_string())?;
    let ty = tensor_isogeny_class(m, &s.ty, &s.embedding).map_err(|e| e.to_string())?;
    ensure(l.rank == 2 * tensor_dimension(&ty), || {
        format!(
            "{}: rank {} but dimension {}",
            s.name,
            l.rank,
            tensor_dimension(&ty)
        )
    })
}

fn functor_properties() -> Outcome {
    const CASES_PER_RING: usize = 34;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut presentations = 0;
    for s in serre_settings() {
        let o = &s.order;
        let alg = o.algebra().clone();
        let t: &PeriodLattice = &s.lattice;
        for case in 0..CASES_PER_RING {
            let tag = |what: &str| format!("{} case {case}: {what}", s.name);
            // (a) torsion modules
            let st = rng.gen_range(1..=2);
            let mt = presentation(o, st, torsion_relations(&mut rng, o, st));
            let lt = tensor_lattice(&mt, t).map_err(|e| tag(&e.to_string()))?;
            ensure(lt.rank == 0, || {
                tag(&format!("torsion module has rank {}", lt.rank))
            })?;
            rank_is_twice_dimension(&mt, &s)?;

            // a map φ: M1 → M2 and its cokernel M3
            let (s1, s2) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
            let count = rng.gen_range(0..=1);

            let alpha1 = random_matrix(&mut rng, o, count, s1, 2);
            let phi = random_matrix(&mut rng, o, s1, s2, 2);
            let count = rng.gen_range(0..=1);

            let mut alpha2 = random_matrix(&mut rng, o, count, s2, 2);
            alpha2.extend(alpha1.iter().map(|rho| push_forward(&alg, rho, &phi)));
            let m1 = presentation(o, s1, alpha1.clone());
            let m2 = presentation(o, s2, alpha2.clone());
            let mut alpha3 = alpha2.clone();
            alpha3.extend(phi.iter().cloned());
            let m3 = presentation(o, s2, alpha3);
            presentations += 4;

            // (c) naturality
            ensure(
                check_naturality(&m1, &m2, &phi, t).map_err(|e| tag(&e.to_string()))?,
                || tag("naturality square fails"),
            )?;
            // (b) right exactness: L2 → L3 is onto with kernel the saturated image of L1
            let f = induced_map(&m1, &m2, &phi, t).map_err(|e| tag(&e.to_string()))?;
            let g =
                induced_map(&m2, &m3, &identity_map(o, s2), t).map_err(|e| tag(&e.to_string()))?;
            let (r2, r3) = (g.source.rank, g.target.rank);
            ensure(lattice_rank(&g.matrix) == r3, || {
                tag("L2 → L3 has infinite cokernel")
            })?;
            if r3 > 0 && r2 > 0 {
                let onto = snf(&g.matrix)
                    .invariant_factors()
                    .iter()
                    .all(|d| d.is_unit());
                ensure(onto, || tag("L2 → L3 is not surjective"))?;
            }
            if r2 > 0 {
                ensure(kernel_hnf(&g.matrix) == saturation(&f.matrix, r2), || {
                    tag("kernel of L2 → L3 differs from the saturated image of L1")
                })?;
            }
            // (e) on every module
            for m in [&m1, &m2, &m3] {
                rank_is_twice_dimension(m, &s).map_err(|e| tag(&e))?;
            }

            // (d) rationally invertible maps
            let sd = rng.gen_range(1..=2);
            let psi = loop {
                let cand = random_matrix(&mut rng, o, sd, sd, 2);
                if !rational_map(&alg, &cand).det().is_zero() {
                    break cand;
                }
            };
            let count = rng.gen_range(0..=2);

            let beta = random_matrix(&mut rng, o, count, sd, 2);
            let n1 = presentation(o, sd, beta.clone());
            let n2 = presentation(
                o,
                sd,
                beta.iter()
                    .map(|rho| push_forward(&alg, rho, &psi))
                    .collect(),
            );
            presentations += 2;
            let h = induced_map(&n1, &n2, &psi, t).map_err(|e| tag(&e.to_string()))?;
            let rank = lattice_rank(&h.matrix);
            ensure(
                h.source.rank == h.target.rank && rank == h.target.rank,
                || {
                    tag(&format!(
                        "invertible map gives rank {rank} between lattices of rank {} and {}",
                        h.source.rank, h.target.rank
                    ))
                },
            )?;
        }
    }
    ensure(presentations >= 100, || {
        format!("only {presentations} presentations")
    })?;
    Ok(format!(
        "{presentations} presentations over Z, Z[i] and upper-triangular Mat2(Z), (a)-(e) hold"
    ))
}

fn divisors(n: i64) -> Vec<i64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Checks one chain `o ⊆ o2 ⊆ o1` acting on `t`.
fn chain(
    o: &Order<Integer>,
    o2: &Order<Integer>,
    o1: &Order<Integer>,
    ty: &maxord::serre::IsogenyType,
    t: &PeriodLattice,
    tag: &str,
) -> Result<(), String> {
    ensure(o1.contains(o2) && o2.contains(o), || {
        format!("{tag}: not a chain")
    })?;
    let e = |x: maxord::Error| format!("{tag}: {x}");
    let full = minimal_isogeny(o, o1, ty, std::slice::from_ref(t)).map_err(e)?;
    let mid = minimal_isogeny(o, o2, ty, std::slice::from_ref(t)).map_err(e)?;
    let t2 = mid.lattices[0].clone();
    let alpha = minimal_isogeny(o2, o1, ty, std::slice::from_ref(&t2)).map_err(e)?;
    let (l1, l2, l) = (full.lattices[0].lattice(), t2.lattice(), t.lattice());
    ensure(l1.contains(l2) && l2.contains(l), || {
        format!("{tag}: lattices not nested")
    })?;
    ensure(alpha.lattices[0].lattice() == l1, || {
        format!("{tag}: o'(o''T) differs from o'T")
    })?;
    let idx = |a: &Lattice<Integer>, b: &Lattice<Integer>| lattice_index(a, b).map_err(e);
    ensure(
        full.degree == idx(l, l1)? && mid.degree == idx(l, l2)? && alpha.degree == idx(l2, l1)?,
        || format!("{tag}: degrees disagree with lattice indices"),
    )?;
    ensure(
        full.degree == alpha.degree.clone() * mid.degree.clone(),
        || {
            format!(
                "{tag}: {} != {} * {}",
                full.degree, alpha.degree, mid.degree
            )
        },
    )
}

fn minimal_isogeny_chains() -> Outcome {
    const CHAINS: usize = 12;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let ds: Vec<i64> = squarefree_discriminants(30);
    let mut nontrivial = 0;
    for i in 0..CHAINS {
        let d = *ds.choose(&mut rng).unwrap();
        let f = rng.gen_range(2..=12);
        let g = *divisors(f).choose(&mut rng).unwrap();
        let (o, o2, o1) = (
            quadratic_order(d, f),
            quadratic_order(d, g),
            quadratic_order(d, 1),
        );
        let ty = factor("E", 1, quadratic_algebra(d), 1);
        chain(
            &o,
            &o2,
            &o1,
            &ty,
            &regular_lattice(&o),
            &format!("quadratic chain {i} (d={d}, f={f}, g={g})"),
        )?;
        nontrivial += usize::from(g != 1 && g != f);
    }
    let ty = factor("E", 1, rational_line(), 2);
    for i in 0..CHAINS {
        let n = rng.gen_range(2..=12);
        let m = *divisors(n).choose(&mut rng).unwrap();
        let (o, o2) = if i % 2 == 0 {
            (eichler(n), eichler(m))
        } else {
            (scaled_mat2(n), scaled_mat2(m))
        };
        let o1 = Order::standard(mat2()).unwrap();
        let t = mat2_lattice(&o, &[&[1, 0], &[0, n]]);
        chain(
            &o,
            &o2,
            &o1,
            &ty,
            &t,
            &format!("Mat2 chain {i} (n={n}, m={m})"),
        )?;
        nontrivial += usize::from(m != 1 && m != n);
    }
    Ok(format!(
        "{} chains, {nontrivial} with a proper middle order",
        2 * CHAINS
    ))
}

fn negative_controls() -> Outcome {
    let z3 = json!({"algebra": {"poly_quotient": {"modulus": "x^2+3"}}});
    let flags = |p: &str| Flags {
        primes: Some(p.into()),
        ..Flags::default()
    };
    let r = execute(Command::Certify, &z3, &flags("2")).map_err(|e| e.to_string())?;
    ensure(
        r.document["verdict"] == json!(false) && r.exit_code() == EXIT_NEGATIVE,
        || format!("Z[sqrt(-3)]: {}", r.document),
    )?;
    ensure(r.document["failing_primes"] == json!(["2"]), || {
        "Z[sqrt(-3)] fails elsewhere".into()
    })?;
    let scaled = json!({
        "algebra": {"matrix": {"n": 2}},
        "basis": [["1", "0", "0", "1"], ["5", "0", "0", "0"], ["0", "5", "0", "0"], ["0", "0", "5", "0"]],
    });
    let r = execute(Command::Certify, &scaled, &flags("5")).map_err(|e| e.to_string())?;
    ensure(
        r.document["verdict"] == json!(false) && r.exit_code() == EXIT_NEGATIVE,
        || format!("Z + 5 Mat2(Z): {}", r.document),
    )?;
    ensure(r.document["failing_primes"] == json!(["5"]), || {
        "Z + 5 Mat2(Z) fails elsewhere".into()
    })?;

    let o = Order::standard(quadratic_algebra(-3)).unwrap();
    let two = int(2);
    let rad = radical_mod_p(&o, &two).unwrap();
    let expected = Lattice::from_rows(vec![qv(&[2, 0]), qv(&[1, 1])], 2).unwrap();
    ensure(rad.lattice() == &expected, || {
        "radical is not {2, 1 + sqrt(-3)}".into()
    })?;
    let sq = lattice_power(&o, rad.lattice(), 2).unwrap();
    ensure(sq == rad.lattice().scale(&q(2)), || "rad^2 != 2 rad".into())?;
    let ideals: Vec<Lattice<Integer>> = two_sided_ideals_over_p(&o, &two)
        .unwrap()
        .iter()
        .map(|i| i.lattice().clone())
        .collect();
    ensure(
        ideals == vec![o.lattice().scale(&q(2)), expected, o.lattice().clone()],
        || format!("ideals over 2: {ideals:?}"),
    )?;
    ensure(!power_law_holds(&o, &two).unwrap(), || {
        "power law unexpectedly holds".into()
    })?;
    Ok("both certify verdicts false with exit 2; rad^2 = 2 rad in Z[sqrt(-3)]".into())
}
