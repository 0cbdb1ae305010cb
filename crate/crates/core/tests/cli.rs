//! The JSON front end: round trips, determinism, and the exit-code contract
//! of the binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command as Process;

use maxord::cli::{execute, render, Command, Flags, Format, EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK};
use maxord::io::{read_certificate, read_isogeny_type, read_period_lattice, Ground, Node};
use maxord::order::Order;
use maxord::ring::Integer;
use serde_json::{json, Value};

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn fixtures() -> Vec<(String, Value)> {
    let mut files: Vec<PathBuf> = fs::read_dir(fixtures_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let doc = serde_json::from_str(&fs::read_to_string(&p).unwrap()).unwrap();
            (p.file_name().unwrap().to_string_lossy().into_owned(), doc)
        })
        .collect()
}

fn fixture_flags(doc: &Value) -> Flags {
    let f = &doc["flags"];
    Flags {
        primes: f["primes"].as_str().map(str::to_string),
        idempotents: f.get("idempotents").cloned(),
        seed: f["seed"].as_u64().unwrap_or(0),
        trusted: f["trusted"].as_bool().unwrap_or(false),
        ideals: f["ideals"].as_bool().unwrap_or(false),
    }
}

fn run(command: Command, input: &Value, flags: &Flags) -> Value {
    execute(command, input, flags).unwrap().document
}

fn primes(p: &str) -> Flags {
    Flags {
        primes: Some(p.into()),
        ..Flags::default()
    }
}

#[test]
fn fixture_outputs_reparse_and_are_deterministic() {
    for (name, doc) in fixtures() {
        let command: Command = doc["command"].as_str().unwrap().parse().unwrap();
        let flags = fixture_flags(&doc);
        let first = execute(command, &doc["input"], &flags).unwrap();
        let text = render(&first.document, Format::Json);
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, first.document, "{name}");
        let second = execute(command, &doc["input"], &flags).unwrap();
        assert_eq!(render(&second.document, Format::Json), text, "{name}");
        assert!(!render(&first.document, Format::Text).is_empty(), "{name}");
    }
}

#[test]
fn maximal_orders_feed_back_into_certify_and_disc() {
    let inputs = [
        (
            json!({"algebra": {"quaternion": {"a": "-1", "b": "-1"}}}),
            "2",
        ),
        (
            json!({"algebra": {"poly_quotient": {"modulus": "x^3-2"}}}),
            "2",
        ),
        (
            json!({"algebra": {"ground": {"poly": {"p": 2, "var": "t"}}, "poly_quotient": {"modulus": "x^2+t"}},
                "basis": [["1", "0"], ["0", "t"]]}),
            "t",
        ),
    ];
    for (input, p) in inputs {
        let out = run(Command::MaximalOrder, &input, &primes(p));
        let cert = run(Command::Certify, &out, &primes(p));
        assert_eq!(cert["verdict"], json!(true), "{out}");
        let disc = run(Command::Disc, &out, &Flags::default());
        assert_eq!(disc["discriminant"], out["discriminant"]);
        // certificates re-read under their schema
        let ground = Ground::of(&Node::root(&out)).unwrap();
        for c in cert["certificates"].as_array().unwrap() {
            match ground.characteristic() {
                0 => assert!(read_certificate::<Integer>(ground, &Node::root(c))
                    .unwrap()
                    .verdict()),
                _ => assert!(
                    read_certificate::<maxord::ring::FpPoly<2>>(ground, &Node::root(c))
                        .unwrap()
                        .verdict()
                ),
            }
        }
    }
}

#[test]
fn decomposition_factors_are_algebra_documents() {
    let input = json!({"algebra": {"product": [{"matrix": {"n": 2}}, {"poly_quotient": {"modulus": "x^2+1"}}]}});
    let out = run(Command::Decompose, &input["algebra"], &Flags::default());
    let factors = out["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 2);
    for f in factors {
        let center = run(Command::Center, &f["algebra"], &Flags::default());
        assert_eq!(center["dim"], f["center_dim"]);
    }
}

#[test]
fn endo_orders_are_order_documents() {
    let input = json!({
        "delta": {"algebra": {"poly_quotient": {"modulus": "x^2+1"}}},
        "lattice": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "3", "0"], ["0", "0", "0", "3"]],
    });
    let out = run(Command::EndoOrder, &input, &Flags::default());
    let cert = run(Command::Certify, &out, &Flags::default());
    assert_eq!(cert["verdict"], json!(true));
}

fn eisenstein_pair() -> Value {
    let alg = json!({"poly_quotient": {"modulus": "x^2+3"}});
    json!({
        "order": {"algebra": alg},
        "larger": {"algebra": alg, "basis": [["1", "0"], ["1/2", "1/2"]]},
        "type": {"factors": [{"label": "E", "dim": 1, "endo": alg, "mult": 1}]},
        "lattices": [{"basis": [["1", "0"], ["0", "1"]], "action": [[["1", "0"], ["0", "1"]], [["0", "-3"], ["1", "0"]]]}],
    })
}

#[test]
fn minimal_isogeny_outputs_reparse() {
    let input = eisenstein_pair();
    let out = run(Command::MinimalIsogeny, &input, &Flags::default());
    assert_eq!(out["degree"], json!("2"));
    assert_eq!(
        out["kernel"],
        json!([{"prime": "2", "elementary_divisors": ["2"]}])
    );
    // the saturated lattice carries an action of the larger order
    let g = Ground::INTEGERS;
    let larger: Order<Integer> = g.order(&Node::root(&input["larger"]), None).unwrap();
    let t = read_period_lattice(&Node::root(&out["lattices"][0]), &larger).unwrap();
    assert_eq!(t.rank(), 2);
    // and the echoed type is a valid type document
    let (ty, _) = read_isogeny_type(&Node::root(&out["target"])).unwrap();
    assert_eq!(ty.dimension(), 1);
    // a serre-lattice run over the larger order accepts it
    let lattice_input = json!({
        "presentation": {"order": input["larger"], "generators": 1, "alpha": []},
        "lattice": out["lattices"][0],
    });
    let r = run(Command::SerreLattice, &lattice_input, &Flags::default());
    assert_eq!(r["rank"], json!(2));
}

#[test]
fn errors_carry_codes_and_locations() {
    let bad = json!({"algebra": {"matrix": {"n": 2}}, "basis": [["1", "0", "0", "1"], ["2", "0", "0", "2"]]});
    let e = execute(Command::MaximalOrder, &bad, &Flags::default()).unwrap_err();
    assert_eq!(e.location(), Some("$.basis"));
    let e = execute(
        Command::Certify,
        &json!({"algebra": {"matrix": {"n": 2}}}),
        &primes("4"),
    )
    .unwrap_err();
    assert_eq!(e.location(), Some("--primes"));
    let e = execute(
        Command::Disc,
        &json!({"algebra": {"matrix": {"n": "two"}}}),
        &Flags::default(),
    )
    .unwrap_err();
    assert!(
        e.location().unwrap().starts_with("$.algebra.matrix"),
        "{:?}",
        e.location()
    );
}

fn binary(args: &[&str], dir: &Path) -> (i32, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_maxord"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    fs::write(
        p.join("z3.json"),
        r#"{"algebra": {"poly_quotient": {"modulus": "x^2+3"}}}"#,
    )
    .unwrap();
    fs::write(
        p.join("bad.json"),
        r#"{"algebra": {"matrix": {"n": 2}}, "basis": [["1","0","0","0"]]}"#,
    )
    .unwrap();
    fs::write(p.join("broken.json"), "{").unwrap();

    let (code, out) = binary(&["maximal-order", "z3.json"], p);
    assert_eq!(code, EXIT_OK);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["basis"], json!([["1/2", "1/2"], ["0", "1"]]));

    let (code, out) = binary(&["certify", "z3.json", "--primes", "2"], p);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(
        serde_json::from_str::<Value>(&out).unwrap()["verdict"],
        json!(false)
    );
    let (code, out) = binary(&["certify", "z3.json", "--format", "text"], p);
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(out.starts_with("order is NOT maximal\n"));

    for (file, loc) in [("bad.json", "$.basis"), ("broken.json", "broken.json")] {
        let (code, out) = binary(&["disc", file], p);
        assert_eq!(code, EXIT_ERROR, "{file}");
        let doc: Value = serde_json::from_str(&out).unwrap();
        let err = &doc["error"];
        assert!(
            err["code"].is_string() && err["message"].is_string(),
            "{doc}"
        );
        assert!(err["location"].as_str().unwrap().contains(loc), "{doc}");
    }
    let (code, _) = binary(&["disc", "missing.json"], p);
    assert_eq!(code, EXIT_ERROR);
}

#[test]
fn binary_output_files_references_and_idempotents() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    fs::write(p.join("alg.json"), r#"{"matrix": {"n": 2}}"#).unwrap();
    fs::write(
        p.join("order.json"),
        r#"{"algebra": "alg.json", "basis": [["1","0","0","0"],["0","1","0","0"],["0","0","3","0"],["0","0","0","1"]]}"#,
    )
    .unwrap();
    fs::write(
        p.join("idems.json"),
        r#"{"idempotents": [["1","0","0","1"]]}"#,
    )
    .unwrap();
    let (code, out) = binary(
        &[
            "maximal-order",
            "order.json",
            "--idempotents-file",
            "idems.json",
            "-o",
            "out.json",
        ],
        p,
    );
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let doc: Value =
        serde_json::from_str(&fs::read_to_string(p.join("out.json")).unwrap()).unwrap();
    assert_eq!(doc["index"], json!("3"));
    // the written order is itself a valid input
    let (code, _) = binary(&["certify", "out.json"], p);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn selftest_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (c1, a) = binary(&["selftest", "--seed", "42"], dir.path());
    let (c2, b) = binary(&["selftest", "--seed", "42"], dir.path());
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    assert_eq!(a, b);
    let fixtures = fixtures_dir();
    let (c3, c) = binary(
        &["selftest", fixtures.to_str().unwrap(), "--seed", "42"],
        dir.path(),
    );
    assert_eq!(c3, EXIT_OK);
    assert_eq!(a, c);
}
