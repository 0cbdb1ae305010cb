//! JSON documents: reading inputs with located errors and writing results.
//!
//! Scalars are fraction strings (`"3"`, `"-1/2"`, `"t^2+1"`, `"t/(t+1)"`),
//! vectors are arrays of scalars and matrices arrays of rows. Numbers are
//! accepted on input for integer scalars; output always uses strings.

use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algebra::{parse_poly, Algebra};
use crate::error::{Error, Result};
use crate::exactlin::{Lattice, Matrix};
use crate::order::{Order, PrimeCertificate};
use crate::ring::{Frac, Integer, Pid, Rational, RingOps};
use crate::serre::{IsogenyFactor, IsogenyType, ModulePresentation, PeriodLattice};

/// Keys whose string values name another JSON file to inline.
const REFERENCE_KEYS: [&str; 6] = [
    "algebra",
    "order",
    "delta",
    "larger",
    "type",
    "presentation",
];
const MAX_REFERENCE_DEPTH: usize = 16;

/// A JSON value together with its path from the document root.
#[derive(Clone)]
pub struct Node<'a> {
    value: &'a Value,
    path: String,
}

impl<'a> Node<'a> {
    pub fn root(value: &'a Value) -> Node<'a> {
        Node {
            value,
            path: "$".into(),
        }
    }

    pub fn value(&self) -> &'a Value {
        self.value
    }

    pub fn path(&self) -> &str {
        &self.path
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(&self.path, message)
    }

    fn child(&self, value: &'a Value, suffix: String) -> Node<'a> {
        Node {
            value,
            path: format!("{}{}", self.path, suffix),
        }
    }

    /// A field that may be absent or null.
    pub fn opt(&self, key: &str) -> Option<Node<'a>> {
        match self.value.get(key) {
            None | Some(Value::Null) => None,
            Some(v) => Some(self.child(v, format!(".{key}"))),
        }
    }

    pub fn get(&self, key: &str) -> Result<Node<'a>> {
        if !self.value.is_object() {
            return Err(self.error("expected an object"));
        }
        self.opt(key)
            .ok_or_else(|| self.error(format!("missing field '{key}'")))
    }

    pub fn has(&self, key: &str) -> bool {
        self.opt(key).is_some()
    }

    pub fn items(&self) -> Result<Vec<Node<'a>>> {
        let arr = self
            .value
            .as_array()
            .ok_or_else(|| self.error("expected an array"))?;
        Ok(arr
            .iter()
            .enumerate()
            .map(|(i, v)| self.child(v, format!("[{i}]")))
            .collect())
    }

    pub fn str(&self) -> Result<&'a str> {
        self.value
            .as_str()
            .ok_or_else(|| self.error("expected a string"))
    }

    pub fn usize(&self) -> Result<usize> {
        if let Some(n) = self.value.as_u64() {
            return usize::try_from(n).map_err(|_| self.error("number too large"));
        }
        if let Some(s) = self.value.as_str() {
            return s
                .trim()
                .parse()
                .map_err(|_| self.error("expected a non-negative integer"));
        }
        Err(self.error("expected a non-negative integer"))
    }

    /// A scalar as text: strings as they are, integral numbers printed.
    pub fn scalar_text(&self) -> Result<String> {
        match self.value {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
            _ => Err(self.error("expected a fraction string")),
        }
    }
}

/// The ground ring of a document: `"Z"` or `{"poly": {"p": 2, "var": "t"}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ground {
    /// Zero for the integers.
    p: u64,
    var: char,
}

impl Ground {
    pub const INTEGERS: Ground = Ground { p: 0, var: 't' };

    pub fn poly(p: u64, var: char) -> Ground {
        Ground { p, var }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn read(n: &Node) -> Result<Ground> {
        if let Some(s) = n.value().as_str() {
            return match s {
                "Z" => Ok(Ground::INTEGERS),
                _ => Err(n.error(format!("unknown ground ring '{s}'"))),
            };
        }
        let poly = n.get("poly")?;
        let p = poly.get("p")?.usize()? as u64;
        let var = match poly.opt("var") {
            None => 't',
            Some(v) => {
                let s = v.str()?;
                let mut chars = s.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) if c.is_ascii_lowercase() && c != 'x' => c,
                    _ => return Err(v.error("variable must be one lowercase letter other than x")),
                }
            }
        };
        if p < 2 || !crate::ring::Integer::from(p).is_prime() {
            return Err(poly.get("p")?.error(format!("{p} is not prime")));
        }
        Ok(Ground { p, var })
    }

    /// Ground of an algebra or order document (the `ground` field of the
    /// algebra, defaulting to `Z`).
    pub fn of(n: &Node) -> Result<Ground> {
        let alg = n.opt("algebra").unwrap_or_else(|| n.clone());
        match alg.opt("ground") {
            Some(g) => Ground::read(&g),
            None => Ok(Ground::INTEGERS),
        }
    }

    pub fn to_json(&self) -> Value {
        if self.p == 0 {
            json!("Z")
        } else {
            json!({"poly": {"p": self.p, "var": self.var.to_string()}})
        }
    }

    /// Rewrite user text to the engine's variable `t`.
    fn internal(&self, n: &Node, text: &str) -> Result<String> {
        if self.p == 0 || self.var == 't' {
            return Ok(text.to_string());
        }
        if text.contains('t') {
            return Err(n.error(format!(
                "unexpected variable 't' (the ground variable is '{}')",
                self.var
            )));
        }
        Ok(text.replace(self.var, "t"))
    }

    fn external(&self, text: String) -> String {
        if self.p == 0 || self.var == 't' {
            text
        } else {
            text.replace('t', &self.var.to_string())
        }
    }

    pub fn scalar<R: Pid>(&self, n: &Node) -> Result<Frac<R>> {
        let text = self.internal(n, &n.scalar_text()?)?;
        Frac::parse(&text).map_err(|e| e.at(n.path()))
    }

    /// A ground-ring element, e.g. a prime.
    pub fn element<R: Pid>(&self, n: &Node, text: &str) -> Result<R> {
        let text = self.internal(n, text)?;
        R::parse(text.trim()).map_err(|e| e.at(n.path()))
    }

    /// A comma-separated list of ground-ring elements such as `"2,3"` or `"t,t+1"`.
    pub fn element_list<R: Pid>(&self, text: &str, location: &str) -> Result<Vec<R>> {
        let v = Value::String(text.to_string());
        let n = Node {
            value: &v,
            path: location.to_string(),
        };
        text.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| self.element(&n, s))
            .collect()
    }

    pub fn vector<R: Pid>(&self, n: &Node, len: Option<usize>) -> Result<Vec<Frac<R>>> {
        let items = n.items()?;
        if let Some(l) = len {
            if items.len() != l {
                return Err(n.error(format!("expected {l} entries, got {}", items.len())));
            }
        }
        items.iter().map(|x| self.scalar(x)).collect()
    }

    pub fn matrix<R: Pid>(&self, n: &Node, cols: Option<usize>) -> Result<Matrix<Frac<R>>> {
        let rows = n.items()?;
        let width = match (cols, rows.first()) {
            (Some(c), _) => c,
            (None, Some(r)) => r.items()?.len(),
            (None, None) => 0,
        };
        let data = rows
            .iter()
            .map(|r| self.vector(r, Some(width)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(data, width).map_err(|e| e.at(n.path()))
    }

    pub fn ring_text<R: Pid>(&self, r: &R) -> String {
        self.external(r.to_string())
    }

    pub fn scalar_json<R: Pid>(&self, x: &Frac<R>) -> Value {
        Value::String(self.external(x.to_string()))
    }

    pub fn ring_json<R: Pid>(&self, r: &R) -> Value {
        Value::String(self.ring_text(r))
    }

    pub fn vector_json<R: Pid>(&self, v: &[Frac<R>]) -> Value {
        Value::Array(v.iter().map(|x| self.scalar_json(x)).collect())
    }

    pub fn matrix_json<R: Pid>(&self, m: &Matrix<Frac<R>>) -> Value {
        Value::Array((0..m.nrows()).map(|i| self.vector_json(m.row(i))).collect())
    }

    pub fn ring_matrix_json<R: Pid>(&self, m: &Matrix<R>) -> Value {
        Value::Array(
            (0..m.nrows())
                .map(|i| Value::Array(m.row(i).iter().map(|x| self.ring_json(x)).collect()))
                .collect(),
        )
    }

    /// An algebra: the explicit form or one of the shorthands
    /// `{"matrix": {"n": 2}}`, `{"quaternion": {"a": "-1", "b": "-1"}}`,
    /// `{"poly_quotient": {"modulus": "x^2+3"}}`, `{"product": [...]}`, or
    /// the string `"Q"` (`"K"`) for the ground field itself.
    pub fn algebra<R: Pid>(&self, n: &Node) -> Result<Algebra<R>> {
        if let Some(s) = n.value().as_str() {
            return match s {
                "Q" | "K" => {
                    Algebra::poly_quotient(&[Frac::zero(), Frac::one()]).map_err(|e| e.at(n.path()))
                }
                _ => Err(n.error(format!("unknown algebra '{s}'"))),
            };
        }
        if let Some(g) = n.opt("ground") {
            if Ground::read(&g)? != *self {
                return Err(g.error("ground ring differs from the enclosing document"));
            }
        }
        if let Some(m) = n.opt("matrix") {
            let size = m.get("n")?.usize()?;
            if size == 0 {
                return Err(m.error("matrix size must be positive"));
            }
            return Ok(Algebra::matrix(size));
        }
        if let Some(q) = n.opt("quaternion") {
            let a = self.scalar(&q.get("a")?)?;
            let b = self.scalar(&q.get("b")?)?;
            return Algebra::quaternion(a, b).map_err(|e| e.at(q.path()));
        }
        if let Some(p) = n.opt("poly_quotient") {
            let m = p.get("modulus")?;
            let text = self.internal(&m, m.str()?)?;
            let modulus = parse_poly::<R>(&text, 'x').map_err(|e| e.at(m.path()))?;
            return Algebra::poly_quotient(&modulus).map_err(|e| e.at(p.path()));
        }
        if let Some(p) = n.opt("product") {
            let parts = p
                .items()?
                .iter()
                .map(|f| self.algebra(f))
                .collect::<Result<Vec<_>>>()?;
            if parts.is_empty() {
                return Err(p.error("empty product"));
            }
            return Ok(Algebra::product(&parts));
        }
        let dim = n.get("dim")?.usize()?;
        let names = match n.opt("basis") {
            None => (0..dim).map(|i| format!("e{i}")).collect(),
            Some(b) => {
                let names = b
                    .items()?
                    .iter()
                    .map(|x| x.str().map(str::to_string))
                    .collect::<Result<Vec<_>>>()?;
                if names.len() != dim {
                    return Err(b.error(format!("expected {dim} basis names, got {}", names.len())));
                }
                names
            }
        };
        let mul = n.get("mul")?;
        let slabs = mul.items()?;
        if slabs.len() != dim {
            return Err(mul.error(format!("expected {dim} rows, got {}", slabs.len())));
        }
        let consts = slabs
            .iter()
            .map(|slab| {
                let rows = slab.items()?;
                if rows.len() != dim {
                    return Err(slab.error(format!("expected {dim} entries, got {}", rows.len())));
                }
                rows.iter()
                    .map(|r| self.vector(r, Some(dim)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let one = self.vector(&n.get("one")?, Some(dim))?;
        Algebra::new(names, consts, one).map_err(|e| e.at(n.path()))
    }

    pub fn algebra_json<R: Pid>(&self, alg: &Algebra<R>) -> Value {
        let mul: Vec<Value> = alg
            .structure_constants()
            .iter()
            .map(|slab| Value::Array(slab.iter().map(|v| self.vector_json(v)).collect()))
            .collect();
        json!({
            "ground": self.to_json(),
            "dim": alg.dim(),
            "basis": alg.names(),
            "mul": mul,
            "one": self.vector_json(alg.one()),
        })
    }

    /// An order document `{"algebra": ..., "basis": ...}`; a bare algebra
    /// stands for the order spanned by its basis. `fallback` supplies the
    /// algebra when the document has none.
    pub fn order<R: Pid>(&self, n: &Node, fallback: Option<&Arc<Algebra<R>>>) -> Result<Order<R>> {
        let alg = match (n.opt("algebra"), fallback) {
            (Some(a), _) => Arc::new(self.algebra(&a)?),
            (None, Some(f)) if !n.has("dim") && !is_shorthand(n) => f.clone(),
            (None, _) if n.has("basis") && !n.has("dim") => {
                return Err(n.error("missing field 'algebra'"))
            }
            (None, _) => {
                return Order::standard(Arc::new(self.algebra(n)?)).map_err(|e| e.at(n.path()));
            }
        };
        match n.opt("basis") {
            None => Order::standard(alg).map_err(|e| e.at(n.path())),
            Some(b) => {
                let basis = self.matrix(&b, Some(alg.dim()))?;
                Order::from_basis(alg, &basis).map_err(|e| e.at(b.path()))
            }
        }
    }

    pub fn order_json<R: Pid>(&self, o: &Order<R>) -> Value {
        json!({
            "algebra": self.algebra_json(o.algebra()),
            "basis": self.matrix_json(o.basis()),
        })
    }

    pub fn certificate_json<R: Pid>(&self, c: &PrimeCertificate<R>) -> Value {
        json!({
            "prime": self.ring_json(&c.prime),
            "idealizer_fixed": c.idealizer_fixed,
            "residue_simple": c.residue_simple,
        })
    }
}

fn is_shorthand(n: &Node) -> bool {
    n.value().is_string()
        || ["matrix", "quaternion", "poly_quotient", "product"]
            .iter()
            .any(|k| n.has(k))
}

/// A certificate document `{"prime", "idealizer_fixed", "residue_simple"}`.
pub fn read_certificate<R: Pid>(g: Ground, n: &Node) -> Result<PrimeCertificate<R>> {
    let flag = |key: &str| -> Result<bool> {
        let f = n.get(key)?;
        f.value()
            .as_bool()
            .ok_or_else(|| f.error("expected a boolean"))
    };
    let p = n.get("prime")?;
    Ok(PrimeCertificate {
        prime: g.element(&p, p.str()?)?,
        idealizer_fixed: flag("idealizer_fixed")?,
        residue_simple: flag("residue_simple")?,
    })
}

/// `{"factors": [{"label", "dim", "endo", "mult"}]}`. The `endo` values are
/// returned as given so that results can echo them.
pub fn read_isogeny_type(n: &Node) -> Result<(IsogenyType, Vec<Value>)> {
    let mut factors = Vec::new();
    let mut endos = Vec::new();
    for f in n.get("factors")?.items()? {
        let e = f.get("endo")?;
        let endo = Ground::INTEGERS.algebra::<Integer>(&e)?;
        endos.push(e.value().clone());
        factors.push(IsogenyFactor {
            label: f.get("label")?.str()?.to_string(),
            dim: f.get("dim")?.usize()?,
            endo: Arc::new(endo),
            mult: f.get("mult")?.usize()?,
        });
    }
    let ty = IsogenyType::new(factors).map_err(|e| e.at(n.path()))?;
    Ok((ty, endos))
}

pub fn isogeny_type_json(ty: &IsogenyType, endos: &[Value]) -> Value {
    let factors: Vec<Value> = ty
        .factors()
        .iter()
        .zip(endos)
        .map(|(f, e)| json!({"label": f.label, "dim": f.dim, "endo": e, "mult": f.mult}))
        .collect();
    json!({ "factors": factors })
}

/// `{"order", "alpha", "generators"?}` over the integers. `alpha[i][j]` is
/// the coordinate vector of `ρ_ij` in the algebra basis; `generators` is
/// only needed when there are no relations.
pub fn read_presentation(
    n: &Node,
    fallback: Option<&Order<Integer>>,
) -> Result<ModulePresentation> {
    let g = Ground::INTEGERS;
    let order = match (n.opt("order"), fallback) {
        (Some(o), _) => {
            require_integers(&o)?;
            g.order::<Integer>(&o, None)?
        }
        (None, Some(o)) => o.clone(),
        (None, None) => return Err(n.error("missing field 'order'")),
    };
    let dim = order.dim();
    let rows = match n.opt("alpha") {
        Some(a) => a.items()?,
        None => Vec::new(),
    };
    let s = match (n.opt("generators"), rows.first()) {
        (Some(s), _) => s.usize()?,
        (None, Some(r)) => r.items()?.len(),
        (None, None) => return Err(n.error("a presentation without relations needs 'generators'")),
    };
    let alpha = rows
        .iter()
        .map(|r| {
            let entries = r.items()?;
            if entries.len() != s {
                return Err(r.error(format!("expected {s} entries, got {}", entries.len())));
            }
            entries
                .iter()
                .map(|x| g.vector::<Integer>(x, Some(dim)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    ModulePresentation::new(order, s, alpha).map_err(|e| e.at(n.path()))
}

pub fn presentation_json(m: &ModulePresentation) -> Value {
    let g = Ground::INTEGERS;
    let alpha: Vec<Value> = m
        .alpha()
        .iter()
        .map(|row| Value::Array(row.iter().map(|x| g.vector_json(x)).collect()))
        .collect();
    json!({
        "order": g.order_json(m.order()),
        "generators": m.generators(),
        "alpha": alpha,
    })
}

/// `{"basis", "action", "prime"?}`: `action[a]` is the matrix by which order
/// basis element `a` acts on column vectors of the ambient space.
pub fn read_period_lattice(n: &Node, order: &Order<Integer>) -> Result<PeriodLattice> {
    let g = Ground::INTEGERS;
    let basis = g.matrix::<Integer>(&n.get("basis")?, None)?;
    let k = basis.ncols();
    let lattice = Lattice::from_rows(basis.row_vecs(), k).map_err(|e| e.at(n.path()))?;
    if lattice.dim() != basis.nrows() {
        return Err(n.get("basis")?.error("basis rows are linearly dependent"));
    }
    let mats = n
        .get("action")?
        .items()?
        .iter()
        .map(|m| g.matrix::<Integer>(m, Some(k)))
        .collect::<Result<Vec<_>>>()?;
    let prime = match n.opt("prime") {
        None => None,
        Some(p) => Some(g.element::<Integer>(&p, &p.scalar_text()?)?),
    };
    PeriodLattice::with_order_action(order.clone(), lattice, &mats, prime)
        .map_err(|e| e.at(n.path()))
}

pub fn period_lattice_json(t: &PeriodLattice) -> Value {
    let g = Ground::INTEGERS;
    let mut m = Map::new();
    m.insert("basis".into(), g.matrix_json(t.lattice().basis()));
    m.insert(
        "action".into(),
        Value::Array(t.order_action().iter().map(|a| g.matrix_json(a)).collect()),
    );
    if let Some(p) = t.prime() {
        m.insert("prime".into(), g.ring_json(p));
    }
    Value::Object(m)
}

fn require_integers(n: &Node) -> Result<()> {
    if Ground::of(n)? != Ground::INTEGERS {
        return Err(n.error("the tensor construction is only available over Z"));
    }
    Ok(())
}

pub fn rational_matrix(n: &Node, cols: Option<usize>) -> Result<Matrix<Rational>> {
    Ground::INTEGERS.matrix::<Integer>(n, cols)
}

/// Inline every file reference (a string under one of the reference keys)
/// relative to `base`.
pub fn resolve_references(value: &mut Value, base: &Path) -> Result<()> {
    resolve_at(value, base, "$", 0)
}

fn resolve_at(value: &mut Value, base: &Path, path: &str, depth: usize) -> Result<()> {
    match value {
        Value::Object(map) => {
            for (k, v) in map.iter_mut() {
                let here = format!("{path}.{k}");
                if let Value::String(s) = v {
                    if REFERENCE_KEYS.contains(&k.as_str())
                        && !matches!(s.as_str(), "Q" | "K" | "Z")
                    {
                        if depth >= MAX_REFERENCE_DEPTH {
                            return Err(Error::parse(here, "file references nested too deeply"));
                        }
                        let file = base.join(s.as_str());
                        let mut loaded = load_json(&file).map_err(|e| e.at(&here))?;
                        let dir = file.parent().map(Path::to_path_buf).unwrap_or_default();
                        resolve_at(&mut loaded, &dir, &here, depth + 1)?;
                        *v = loaded;
                        continue;
                    }
                }
                resolve_at(v, base, &here, depth)?;
            }
            Ok(())
        }
        Value::Array(items) => {
            for (i, v) in items.iter_mut().enumerate() {
                resolve_at(v, base, &format!("{path}[{i}]"), depth)?;
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

pub fn load_json(file: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::parse(file.display().to_string(), format!("cannot read file: {e}")))?;
    parse_json(&text, &file.display().to_string())
}

pub fn parse_json(text: &str, origin: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        Error::parse(
            format!("{origin}:{}:{}", e.line(), e.column()),
            format!("invalid JSON: {e}"),
        )
    })
}
