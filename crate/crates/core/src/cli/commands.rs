//! The individual commands, generic over the ground ring.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use super::{selftest, Command, Flags, Report};
use crate::algebra::{central_idempotents, decompose, Algebra};
use crate::error::{Error, Result};
use crate::exactlin::{lattice_index, Lattice};
use crate::io::{
    isogeny_type_json, period_lattice_json, rational_matrix, read_isogeny_type,
    read_period_lattice, read_presentation, Ground, Node,
};
use crate::order::{
    certify, discriminant, endomorphism_order, maximal_order, power_law_holds, radical_mod_p,
    two_sided_ideals_over_p, MaximalOrderOptions, Order,
};
use crate::ring::{FpPoly, Frac, Integer, Pid};
use crate::serre::{
    check_naturality, induced_map, minimal_isogeny, tensor_dimension, tensor_isogeny_class,
    tensor_lattice,
};

/// Instantiates a generic command for the ground ring of a document.
macro_rules! over_ground {
    ($g:expr, $f:ident($($arg:expr),*)) => {
        match $g.characteristic() {
            0 => $f::<Integer>($($arg),*),
            2 => $f::<FpPoly<2>>($($arg),*),
            3 => $f::<FpPoly<3>>($($arg),*),
            5 => $f::<FpPoly<5>>($($arg),*),
            7 => $f::<FpPoly<7>>($($arg),*),
            11 => $f::<FpPoly<11>>($($arg),*),
            13 => $f::<FpPoly<13>>($($arg),*),
            17 => $f::<FpPoly<17>>($($arg),*),
            19 => $f::<FpPoly<19>>($($arg),*),
            23 => $f::<FpPoly<23>>($($arg),*),
            29 => $f::<FpPoly<29>>($($arg),*),
            31 => $f::<FpPoly<31>>($($arg),*),
            37 => $f::<FpPoly<37>>($($arg),*),
            41 => $f::<FpPoly<41>>($($arg),*),
            43 => $f::<FpPoly<43>>($($arg),*),
            47 => $f::<FpPoly<47>>($($arg),*),
            53 => $f::<FpPoly<53>>($($arg),*),
            59 => $f::<FpPoly<59>>($($arg),*),
            61 => $f::<FpPoly<61>>($($arg),*),
            p => Err(Error::Unsupported(format!(
                "ground ring F_{p}[t]; supported characteristics are the primes below 64"
            ))),
        }
    };
}

pub(super) fn execute(command: Command, input: &Value, flags: &Flags) -> Result<Report> {
    let root = Node::root(input);
    let ground_of = |key: Option<&str>| -> Result<Ground> {
        match key {
            None => Ground::of(&root),
            Some(k) => Ground::of(&root.get(k)?),
        }
    };
    match command {
        Command::Center => {
            let g = ground_of(None)?;
            over_ground!(g, center(g, &root))
        }
        Command::Decompose => {
            let g = ground_of(None)?;
            over_ground!(g, decompose_cmd(g, &root, flags))
        }
        Command::MaximalOrder => {
            let g = ground_of(None)?;
            over_ground!(g, maximal_order_cmd(g, &root, flags))
        }
        Command::Certify => {
            let g = ground_of(None)?;
            over_ground!(g, certify_cmd(g, &root, flags))
        }
        Command::Radical => {
            let g = ground_of(None)?;
            over_ground!(g, radical(g, &root, flags))
        }
        Command::Disc => {
            let g = ground_of(None)?;
            over_ground!(g, disc(g, &root))
        }
        Command::EndoOrder => {
            let g = ground_of(Some("delta"))?;
            over_ground!(g, endo_order(g, &root))
        }
        Command::SerreClass => serre_class(&root),
        Command::SerreLattice => serre_lattice(&root),
        Command::MinimalIsogeny => minimal_isogeny_cmd(&root),
        Command::Selftest => selftest::run(None, flags.seed),
    }
}

type AlgebraAndOrder<R> = (Arc<Algebra<R>>, Option<Order<R>>);

/// The algebra of an algebra or order document, and the order if one is given.
fn algebra_and_order<R: Pid>(g: Ground, root: &Node) -> Result<AlgebraAndOrder<R>> {
    if root.has("algebra") {
        let o = g.order::<R>(root, None)?;
        return Ok((o.algebra().clone(), Some(o)));
    }
    Ok((Arc::new(g.algebra::<R>(root)?), None))
}

fn primes<R: Pid>(g: Ground, flags: &Flags) -> Result<Vec<R>> {
    match &flags.primes {
        None => Ok(Vec::new()),
        Some(text) => {
            let ps: Vec<R> = g.element_list(text, "--primes")?;
            match ps.iter().find(|p| !p.is_prime()) {
                Some(p) => Err(Error::NotPrime(g.ring_text(p)).at("--primes")),
                None => Ok(ps),
            }
        }
    }
}

fn idempotents<R: Pid>(g: Ground, flags: &Flags, dim: usize) -> Result<Option<Vec<Vec<Frac<R>>>>> {
    let Some(v) = &flags.idempotents else {
        return Ok(None);
    };
    let root = Node::root(v);
    let m = match root.opt("idempotents") {
        Some(n) => g.matrix::<R>(&n, Some(dim))?,
        None => g.matrix::<R>(&root, Some(dim))?,
    };
    Ok(Some(m.row_vecs()))
}

fn center<R: Pid>(g: Ground, root: &Node) -> Result<Report> {
    let (alg, order) = algebra_and_order::<R>(g, root)?;
    let z = alg.center();
    let mut doc = Map::new();
    doc.insert("dim".into(), json!(z.nrows()));
    doc.insert("basis".into(), g.matrix_json(&z));
    doc.insert("commutative".into(), json!(alg.is_commutative()));
    doc.insert(
        "separable_semisimple".into(),
        json!(alg.is_separable_semisimple()),
    );
    if let Some(o) = order {
        doc.insert("order_center".into(), g.matrix_json(&o.center_lattice()));
    }
    Ok(Report::positive(Value::Object(doc)))
}

fn decompose_cmd<R: Pid>(g: Ground, root: &Node, flags: &Flags) -> Result<Report> {
    let (alg, _) = algebra_and_order::<R>(g, root)?;
    let idems = match idempotents::<R>(g, flags, alg.dim())? {
        Some(e) => e,
        None => central_idempotents(&alg, flags.seed).map_err(|e| e.at("$"))?,
    };
    let d = decompose(&alg, &idems).map_err(|e| e.at("--idempotents-file"))?;
    let factors: Vec<Value> = d
        .factors
        .iter()
        .zip(&d.embeddings)
        .map(|(f, emb)| {
            json!({
                "dim": f.dim(),
                "center_dim": f.center().nrows(),
                "algebra": g.algebra_json(f),
                "embedding": g.matrix_json(emb),
            })
        })
        .collect();
    let idem_rows: Vec<Value> = d.idempotents.iter().map(|e| g.vector_json(e)).collect();
    Ok(Report::positive(json!({
        "idempotents": idem_rows,
        "factors": factors,
    })))
}

fn maximal_order_cmd<R: Pid>(g: Ground, root: &Node, flags: &Flags) -> Result<Report> {
    let o = g.order::<R>(root, None)?;
    let opts = MaximalOrderOptions {
        idempotents: idempotents::<R>(g, flags, o.algebra().dim())?,
        extra_primes: primes(g, flags)?,
        seed: flags.seed,
        trusted_semisimple: flags.trusted,
    };
    let m = maximal_order(&o, &opts).map_err(|e| e.at("$"))?;
    let mut doc = g.order_json(&m);
    let index = lattice_index(o.lattice(), m.lattice()).map_err(|e| e.at("$"))?;
    let obj = doc.as_object_mut().expect("order documents are objects");
    obj.insert("discriminant".into(), g.ring_json(&discriminant(&m)));
    obj.insert("start_discriminant".into(), g.ring_json(&discriminant(&o)));
    obj.insert("index".into(), g.ring_json(&index));
    Ok(Report::positive(doc))
}

fn certify_cmd<R: Pid>(g: Ground, root: &Node, flags: &Flags) -> Result<Report> {
    let o = g.order::<R>(root, None)?;
    let c = certify(&o, &primes(g, flags)?).map_err(|e| e.at("$"))?;
    let failing: Vec<Value> = c
        .per_prime
        .iter()
        .filter(|p| !p.verdict())
        .map(|p| g.ring_json(&p.prime))
        .collect();
    Ok(Report {
        failed: false,
        document: json!({
            "candidate_primes": c.candidate_primes.iter().map(|p| g.ring_json(p)).collect::<Vec<_>>(),
            "certificates": c.per_prime.iter().map(|p| g.certificate_json(p)).collect::<Vec<_>>(),
            "failing_primes": failing,
            "verdict": c.verdict,
        }),
        negative: !c.verdict,
    })
}

fn radical<R: Pid>(g: Ground, root: &Node, flags: &Flags) -> Result<Report> {
    let o = g.order::<R>(root, None)?;
    let mut ps = primes::<R>(g, flags)?;
    if ps.is_empty() {
        ps = crate::order::candidate_primes(&o, &[]).map_err(|e| e.at("$"))?;
    }
    let mut out = Vec::new();
    for p in &ps {
        let rad = radical_mod_p(&o, p).map_err(|e| e.at("--primes"))?;
        let index = lattice_index(rad.lattice(), o.lattice()).map_err(|e| e.at("$"))?;
        let mut entry = Map::new();
        entry.insert("prime".into(), g.ring_json(p));
        entry.insert("basis".into(), g.matrix_json(rad.lattice().basis()));
        entry.insert("index".into(), g.ring_json(&index));
        if flags.ideals {
            let ideals = two_sided_ideals_over_p(&o, p).map_err(|e| e.at("$"))?;
            entry.insert(
                "two_sided_ideals".into(),
                Value::Array(
                    ideals
                        .iter()
                        .map(|i| g.matrix_json(i.lattice().basis()))
                        .collect(),
                ),
            );
            entry.insert(
                "power_law".into(),
                json!(power_law_holds(&o, p).map_err(|e| e.at("$"))?),
            );
        }
        out.push(Value::Object(entry));
    }
    Ok(Report::positive(json!({ "radicals": out })))
}

fn disc<R: Pid>(g: Ground, root: &Node) -> Result<Report> {
    let o = g.order::<R>(root, None)?;
    let d = discriminant(&o);
    let factors: Vec<Value> = d
        .factor()
        .iter()
        .map(|(p, e)| json!({"prime": g.ring_json(p), "exponent": e}))
        .collect();
    Ok(Report::positive(json!({
        "discriminant": g.ring_json(&d),
        "factorization": factors,
    })))
}

fn endo_order<R: Pid>(g: Ground, root: &Node) -> Result<Report> {
    let delta = g.order::<R>(&root.get("delta")?, None)?;
    let ln = root.get("lattice")?;
    let m = g.matrix::<R>(&ln, None)?;
    let dd = delta.dim();
    let r = match root.opt("r") {
        Some(r) => r.usize()?,
        None if m.ncols() % dd == 0 => m.ncols() / dd,
        None => return Err(ln.error(format!("width {} is not a multiple of {dd}", m.ncols()))),
    };
    let lattice = Lattice::from_rows(m.row_vecs(), m.ncols()).map_err(|e| e.at(ln.path()))?;
    if lattice.dim() != m.nrows() {
        return Err(ln.error("lattice rows are linearly dependent"));
    }
    let e = endomorphism_order(&delta, &lattice, r).map_err(|e| e.at("$"))?;
    let mut doc = g.order_json(&e);
    doc.as_object_mut()
        .expect("order documents are objects")
        .insert("discriminant".into(), g.ring_json(&discriminant(&e)));
    Ok(Report::positive(doc))
}

fn integers_only(root: &Node, key: &str) -> Result<()> {
    let n = root.get(key)?;
    let o = n.opt("order").unwrap_or_else(|| n.clone());
    if Ground::of(&o)? != Ground::INTEGERS {
        return Err(n.error("the tensor construction is only available over Z"));
    }
    Ok(())
}

fn serre_class(root: &Node) -> Result<Report> {
    integers_only(root, "presentation")?;
    let m = read_presentation(&root.get("presentation")?, None)?;
    let (ty, endos) = read_isogeny_type(&root.get("type")?)?;
    let out = if ty.dimension() == 0 {
        ty.clone()
    } else {
        let emb = root.get("embedding")?;
        let psi = rational_matrix(&emb, None)?;
        tensor_isogeny_class(&m, &ty, &psi).map_err(|e| e.at(emb.path()))?
    };
    let mults: Vec<usize> = out.factors().iter().map(|f| f.mult).collect();
    Ok(Report::positive(json!({
        "type": isogeny_type_json(&out, &endos),
        "multiplicities": mults,
        "dimension": tensor_dimension(&out),
    })))
}

fn serre_lattice(root: &Node) -> Result<Report> {
    integers_only(root, "presentation")?;
    let m = read_presentation(&root.get("presentation")?, None)?;
    let ln = root.get("lattice")?;
    let t = read_period_lattice(&ln, m.order())?;
    let r = tensor_lattice(&m, &t).map_err(|e| e.at(ln.path()))?;
    let g = Ground::INTEGERS;
    let mut doc = Map::new();
    doc.insert("rank".into(), json!(r.rank));
    doc.insert(
        "divisors".into(),
        Value::Array(r.divisors.iter().map(|d| g.ring_json(d)).collect()),
    );
    doc.insert("relations".into(), g.ring_matrix_json(&r.relations));
    doc.insert("projection".into(), g.ring_matrix_json(&r.projection));
    doc.insert("section".into(), g.ring_matrix_json(&r.section));
    let mut negative = false;
    if let Some(mn) = root.opt("map") {
        let target = read_presentation(&mn.get("target")?, Some(m.order()))?;
        let phin = mn.get("phi")?;
        let dim = m.order().dim();
        let phi = phin
            .items()?
            .iter()
            .map(|row| {
                row.items()?
                    .iter()
                    .map(|x| g.vector::<Integer>(x, Some(dim)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let map = induced_map(&m, &target, &phi, &t).map_err(|e| e.at(phin.path()))?;
        let natural = check_naturality(&m, &target, &phi, &t).map_err(|e| e.at(phin.path()))?;
        let rank = if map.matrix.nrows() == 0 || map.matrix.ncols() == 0 {
            0
        } else {
            map.matrix.to_frac().rank()
        };
        negative = !natural;
        doc.insert(
            "map".into(),
            json!({
                "matrix": g.ring_matrix_json(&map.matrix),
                "natural": natural,
                "finite_cokernel": rank == map.target.rank,
                "finite_kernel": rank == map.source.rank,
            }),
        );
    }
    Ok(Report {
        document: Value::Object(doc),
        negative,
        failed: false,
    })
}

fn minimal_isogeny_cmd(root: &Node) -> Result<Report> {
    integers_only(root, "order")?;
    let g = Ground::INTEGERS;
    let o = g.order::<Integer>(&root.get("order")?, None)?;
    let ln = root.get("larger")?;
    let larger = g.order::<Integer>(&ln, Some(o.algebra()))?;
    let (ty, endos) = read_isogeny_type(&root.get("type")?)?;
    let lattices = match root.opt("lattices") {
        None => Vec::new(),
        Some(ls) => ls
            .items()?
            .iter()
            .map(|l| read_period_lattice(l, &o))
            .collect::<Result<Vec<_>>>()?,
    };
    let d = minimal_isogeny(&o, &larger, &ty, &lattices).map_err(|e| e.at(ln.path()))?;
    let index = lattice_index(o.lattice(), larger.lattice()).map_err(|e| e.at(ln.path()))?;
    let kernel: Vec<Value> = d
        .per_prime_kernel
        .iter()
        .map(|k| {
            json!({
                "prime": g.ring_json(&k.prime),
                "elementary_divisors": k.elementary_divisors.iter().map(|x| g.ring_json(x)).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(Report::positive(json!({
        "degree": g.ring_json(&d.degree),
        "kernel": kernel,
        "order_index": g.ring_json(&index),
        "lattices": d.lattices.iter().map(period_lattice_json).collect::<Vec<_>>(),
        "source": isogeny_type_json(&d.source, &endos),
        "target": isogeny_type_json(&d.target, &endos),
    })))
}
