//! The JSON exchange format.
//!
//! A document names its ground field and lists objects. Every tensor is a
//! list of sparse entries whose leading integers are basis indices, inputs
//! before outputs, and whose last element is an exact scalar string:
//!
//! - `product`: `[i, j, k, v]`, `e_i e_j` has coefficient `v` on `e_k`
//! - `coproduct`: `[k, i, j, v]`, `Delta(e_k)` has `v` on `e_i (x) e_j`
//! - `counit`: `[k, v]`
//! - `antipode`: `[k, i, v]`, `S(e_k)` has `v` on `e_i`
//! - `coaction`: `[j, l, m, v]`, `alpha(a_j)` has `v` on `a_l (x) h_m`
//! - `action`: `[x, j, i, v]`, `e_x . v_j` has `v` on `v_i`

use std::collections::{BTreeSet, HashMap};
use std::io::Write;

use igalois_core::assoc::{AlgModule, StructureAlgebra};
use igalois_core::coact::ComoduleAlgebra;
use igalois_core::exactla::{validate_scalar_literal, Field, Matrix, PrimeField, Rationals, ScalarField};
use igalois_core::hopf::HopfData;
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

/// An exact scalar, `"n"` or `"n/d"`, checked for syntax while parsing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Scalar(pub String);

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        validate_scalar_literal(&s).map_err(serde::de::Error::custom)?;
        Ok(Scalar(s))
    }
}

pub type Entry1 = (usize, Scalar);
pub type Entry2 = (usize, usize, Scalar);
pub type Entry3 = (usize, usize, usize, Scalar);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub version: u32,
    pub field: String,
    pub objects: Vec<ObjectSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ObjectSpec {
    Hopf(HopfSpec),
    Algebra(AlgebraSpec),
    Comodule(ComoduleSpec),
    Module(ModuleSpec),
}

impl ObjectSpec {
    pub fn name(&self) -> &str {
        match self {
            ObjectSpec::Hopf(s) => &s.name,
            ObjectSpec::Algebra(s) => &s.name,
            ObjectSpec::Comodule(s) => &s.name,
            ObjectSpec::Module(s) => &s.name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSpec {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub product: Vec<Entry3>,
    pub coproduct: Vec<Entry3>,
    pub counit: Vec<Entry1>,
    pub antipode: Vec<Entry2>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub product: Vec<Entry3>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleSpec {
    pub name: String,
    pub hopf: String,
    pub algebra: String,
    pub coaction: Vec<Entry3>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub name: String,
    pub algebra: String,
    pub dim: usize,
    pub action: Vec<Entry3>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object<K: Field> {
    Hopf(HopfData<K>),
    Algebra(StructureAlgebra<K>),
    Comodule { hopf: String, algebra: String, value: ComoduleAlgebra<K> },
    Module { algebra: String, value: AlgModule<K> },
}

impl<K: Field> Object<K> {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Hopf(_) => "hopf",
            Object::Algebra(_) => "algebra",
            Object::Comodule { .. } => "comodule",
            Object::Module { .. } => "module",
        }
    }
}

/// A document resolved over a concrete field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loaded<K: Field> {
    pub field: K,
    pub objects: Vec<(String, Object<K>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyLoaded {
    Q(Loaded<Rationals>),
    Fp(Loaded<PrimeField>),
}

pub fn parse_document(text: &str) -> Result<Document, CliError> {
    let doc: Document = serde_json::from_str(text)?;
    if doc.version != FORMAT_VERSION {
        return Err(CliError::schema(format!("unsupported format version {}", doc.version)));
    }
    Ok(doc)
}

pub fn load(text: &str) -> Result<AnyLoaded, CliError> {
    resolve(&parse_document(text)?)
}

pub fn resolve(doc: &Document) -> Result<AnyLoaded, CliError> {
    let field: ScalarField = doc.field.parse().map_err(|e| CliError::schema(format!("field: {e}")))?;
    Ok(match field {
        ScalarField::Rationals => AnyLoaded::Q(Loaded::from_document(Rationals, doc)?),
        ScalarField::PrimeField(p) => {
            let k = PrimeField::new(p).map_err(|e| CliError::schema(e.to_string()))?;
            AnyLoaded::Fp(Loaded::from_document(k, doc)?)
        }
    })
}

struct Ctx<'a, K: Field> {
    k: &'a K,
    object: &'a str,
}

impl<K: Field> Ctx<'_, K> {
    fn err(&self, what: &str, msg: impl std::fmt::Display) -> CliError {
        CliError::schema(format!("object {:?}, {what}: {msg}", self.object))
    }

    fn scalar(&self, what: &str, n: usize, s: &Scalar) -> Result<K::Elem, CliError> {
        self.k.parse_elem(&s.0).map_err(|e| self.err(&format!("{what} entry {n}"), e))
    }

    fn check_index(&self, what: &str, n: usize, idx: &[usize], bounds: &[usize]) -> Result<(), CliError> {
        for (i, b) in idx.iter().zip(bounds) {
            if i >= b {
                return Err(self.err(&format!("{what} entry {n}"), format!("index {i} out of range 0..{b}")));
            }
        }
        Ok(())
    }

    /// Entries arrive as `(entry number, row, col, value)`.
    fn fill(
        &self,
        what: &str,
        rows: usize,
        cols: usize,
        entries: impl Iterator<Item = (usize, usize, usize, Result<K::Elem, CliError>)>,
    ) -> Result<Matrix<K>, CliError> {
        let mut m = Matrix::zeros(self.k, rows, cols);
        let mut seen = BTreeSet::new();
        for (n, r, c, v) in entries {
            if !seen.insert((r, c)) {
                return Err(self.err(&format!("{what} entry {n}"), "duplicate entry"));
            }
            m.set(r, c, v?);
        }
        Ok(m)
    }

    fn labels(&self, dim: usize, labels: &[String]) -> Result<(), CliError> {
        if labels.len() != dim {
            return Err(self.err("labels", format!("{} labels for dimension {dim}", labels.len())));
        }
        Ok(())
    }

    fn algebra(&self, dim: usize, labels: &[String], product: &[Entry3]) -> Result<StructureAlgebra<K>, CliError> {
        self.labels(dim, labels)?;
        for (n, (i, j, l, _)) in product.iter().enumerate() {
            self.check_index("product", n, &[*i, *j, *l], &[dim; 3])?;
        }
        let mult = self.fill(
            "product",
            dim * dim,
            dim,
            product.iter().enumerate().map(|(n, (i, j, l, v))| (n, i * dim + j, *l, self.scalar("product", n, v))),
        )?;
        StructureAlgebra::from_mult_tensor(self.k, labels.to_vec(), &mult).map_err(|e| self.err("product", e))
    }
}

impl<K: Field> Loaded<K> {
    pub fn from_document(k: K, doc: &Document) -> Result<Self, CliError> {
        let mut objects: Vec<(String, Object<K>)> = Vec::with_capacity(doc.objects.len());
        let mut index: HashMap<String, usize> = HashMap::new();
        for spec in &doc.objects {
            let cx = Ctx { k: &k, object: spec.name() };
            let lookup = |name: &str| index.get(name).map(|&i| &objects[i].1);
            let obj = match spec {
                ObjectSpec::Hopf(s) => {
                    let n = s.dim;
                    let algebra = cx.algebra(n, &s.labels, &s.product)?;
                    for (e, (c, i, j, _)) in s.coproduct.iter().enumerate() {
                        cx.check_index("coproduct", e, &[*c, *i, *j], &[n; 3])?;
                    }
                    for (e, (c, _)) in s.counit.iter().enumerate() {
                        cx.check_index("counit", e, &[*c], &[n])?;
                    }
                    for (e, (c, i, _)) in s.antipode.iter().enumerate() {
                        cx.check_index("antipode", e, &[*c, *i], &[n; 2])?;
                    }
                    let coproduct = cx.fill(
                        "coproduct",
                        n * n,
                        n,
                        s.coproduct
                            .iter()
                            .enumerate()
                            .map(|(e, (c, i, j, v))| (e, i * n + j, *c, cx.scalar("coproduct", e, v))),
                    )?;
                    let counit = cx.fill(
                        "counit",
                        1,
                        n,
                        s.counit.iter().enumerate().map(|(e, (c, v))| (e, 0, *c, cx.scalar("counit", e, v))),
                    )?;
                    let antipode = cx.fill(
                        "antipode",
                        n,
                        n,
                        s.antipode.iter().enumerate().map(|(e, (c, i, v))| (e, *i, *c, cx.scalar("antipode", e, v))),
                    )?;
                    let h = HopfData::new(algebra, coproduct, counit.row(0).to_vec(), antipode)
                        .map_err(|e| cx.err("shape", e))?;
                    Object::Hopf(h)
                }
                ObjectSpec::Algebra(s) => Object::Algebra(cx.algebra(s.dim, &s.labels, &s.product)?),
                ObjectSpec::Comodule(s) => {
                    let Some(Object::Hopf(h)) = lookup(&s.hopf) else {
                        return Err(cx.err("hopf", format!("{:?} is not an earlier hopf object", s.hopf)));
                    };
                    let Some(Object::Algebra(a)) = lookup(&s.algebra) else {
                        return Err(cx.err("algebra", format!("{:?} is not an earlier algebra object", s.algebra)));
                    };
                    let (na, nh) = (a.dim(), h.dim());
                    for (e, (j, l, m, _)) in s.coaction.iter().enumerate() {
                        cx.check_index("coaction", e, &[*j, *l, *m], &[na, na, nh])?;
                    }
                    let coaction = cx.fill(
                        "coaction",
                        na * nh,
                        na,
                        s.coaction
                            .iter()
                            .enumerate()
                            .map(|(e, (j, l, m, v))| (e, l * nh + m, *j, cx.scalar("coaction", e, v))),
                    )?;
                    let value = ComoduleAlgebra::new(h.clone(), a.clone(), coaction).map_err(|e| cx.err("shape", e))?;
                    Object::Comodule { hopf: s.hopf.clone(), algebra: s.algebra.clone(), value }
                }
                ObjectSpec::Module(s) => {
                    let Some(Object::Algebra(a)) = lookup(&s.algebra) else {
                        return Err(cx.err("algebra", format!("{:?} is not an earlier algebra object", s.algebra)));
                    };
                    let (na, d) = (a.dim(), s.dim);
                    for (e, (x, j, i, _)) in s.action.iter().enumerate() {
                        cx.check_index("action", e, &[*x, *j, *i], &[na, d, d])?;
                    }
                    let stacked = cx.fill(
                        "action",
                        na * d,
                        d,
                        s.action.iter().enumerate().map(|(e, (x, j, i, v))| (e, x * d + i, *j, cx.scalar("action", e, v))),
                    )?;
                    let action = (0..na)
                        .map(|x| Matrix::from_fn(&k, d, d, |r, c| stacked.get(x * d + r, c).clone()))
                        .collect();
                    let value = AlgModule::new(a, d, action).map_err(|e| cx.err("shape", e))?;
                    Object::Module { algebra: s.algebra.clone(), value }
                }
            };
            if index.insert(spec.name().to_string(), objects.len()).is_some() {
                return Err(CliError::schema(format!("duplicate object name {:?}", spec.name())));
            }
            objects.push((spec.name().to_string(), obj));
        }
        Ok(Loaded { field: k, objects })
    }

    pub fn new(field: K) -> Self {
        Loaded { field, objects: Vec::new() }
    }

    pub fn push(&mut self, name: &str, object: Object<K>) -> &mut Self {
        self.objects.push((name.to_string(), object));
        self
    }

    pub fn get(&self, name: &str) -> Option<&Object<K>> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    /// The named object, or the only object accepted by `pick` when no name
    /// is given.
    pub fn select<'a, T>(
        &'a self,
        name: Option<&str>,
        what: &str,
        pick: impl Fn(&'a Object<K>) -> Option<T>,
    ) -> Result<(&'a str, T), CliError> {
        if let Some(name) = name {
            let (n, obj) = self
                .objects
                .iter()
                .find(|(n, _)| n == name)
                .ok_or_else(|| CliError::Usage(format!("no object named {name:?}")))?;
            let t = pick(obj).ok_or_else(|| CliError::Usage(format!("object {name:?} is not a {what}")))?;
            return Ok((n.as_str(), t));
        }
        let mut hits = self.objects.iter().filter_map(|(n, o)| pick(o).map(|t| (n.as_str(), t)));
        match (hits.next(), hits.next()) {
            (Some(hit), None) => Ok(hit),
            (None, _) => Err(CliError::Usage(format!("document holds no {what}"))),
            (Some(_), Some(_)) => Err(CliError::Usage(format!("document holds several objects of kind {what}; pass --object"))),
        }
    }

    pub fn to_document(&self) -> Document {
        let k = &self.field;
        let s = |x: &K::Elem| Scalar(k.format_elem(x));
        let product = |a: &StructureAlgebra<K>| {
            let n = a.dim();
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    out.extend(a.product_entry(i, j).iter().map(|(l, v)| (i, j, *l, s(v))));
                }
            }
            out
        };
        let objects = self
            .objects
            .iter()
            .map(|(name, obj)| match obj {
                Object::Hopf(h) => {
                    let n = h.dim();
                    let mut coproduct = Vec::new();
                    let mut antipode = Vec::new();
                    for c in 0..n {
                        for r in 0..n * n {
                            let v = h.coproduct().get(r, c);
                            if !k.is_zero(v) {
                                coproduct.push((c, r / n, r % n, s(v)));
                            }
                        }
                        for i in 0..n {
                            let v = h.antipode().get(i, c);
                            if !k.is_zero(v) {
                                antipode.push((c, i, s(v)));
                            }
                        }
                    }
                    let counit =
                        h.counit().iter().enumerate().filter(|(_, v)| !k.is_zero(v)).map(|(c, v)| (c, s(v))).collect();
                    ObjectSpec::Hopf(HopfSpec {
                        name: name.clone(),
                        dim: n,
                        labels: h.labels().to_vec(),
                        product: product(h.algebra()),
                        coproduct,
                        counit,
                        antipode,
                    })
                }
                Object::Algebra(a) => ObjectSpec::Algebra(AlgebraSpec {
                    name: name.clone(),
                    dim: a.dim(),
                    labels: a.labels().to_vec(),
                    product: product(a),
                }),
                Object::Comodule { hopf, algebra, value } => {
                    let nh = value.hopf().dim();
                    let mut coaction = Vec::new();
                    for j in 0..value.dim() {
                        for r in 0..value.dim() * nh {
                            let v = value.coaction().get(r, j);
                            if !k.is_zero(v) {
                                coaction.push((j, r / nh, r % nh, s(v)));
                            }
                        }
                    }
                    ObjectSpec::Comodule(ComoduleSpec {
                        name: name.clone(),
                        hopf: hopf.clone(),
                        algebra: algebra.clone(),
                        coaction,
                    })
                }
                Object::Module { algebra, value } => {
                    let d = value.dim();
                    let mut action = Vec::new();
                    for (x, m) in value.action().iter().enumerate() {
                        for j in 0..d {
                            for i in 0..d {
                                let v = m.get(i, j);
                                if !k.is_zero(v) {
                                    action.push((x, j, i, s(v)));
                                }
                            }
                        }
                    }
                    ObjectSpec::Module(ModuleSpec { name: name.clone(), algebra: algebra.clone(), dim: d, action })
                }
            })
            .collect();
        Document { version: FORMAT_VERSION, field: k.descriptor().to_string(), objects }
    }

    pub fn to_json(&self) -> String {
        to_json(&self.to_document())
    }
}

/// Pretty JSON with one sparse entry per line.
pub fn to_json(doc: &Document) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, EntryFormatter::default());
    doc.serialize(&mut ser).expect("documents serialize");
    out.push(b'\n');
    String::from_utf8(out).expect("JSON is UTF-8")
}

/// Indents the outer levels and prints anything nested five deep (the
/// entry tuples) on one line.
#[derive(Default)]
struct EntryFormatter {
    /// Per open container: whether a value has been written.
    open: Vec<bool>,
}

impl EntryFormatter {
    const INLINE_DEPTH: usize = 5;

    fn inline(&self) -> bool {
        self.open.len() >= Self::INLINE_DEPTH
    }

    fn newline<W: ?Sized + Write>(&self, w: &mut W, depth: usize) -> std::io::Result<()> {
        w.write_all(b"\n")?;
        for _ in 0..depth {
            w.write_all(b"  ")?;
        }
        Ok(())
    }

    fn begin<W: ?Sized + Write>(&mut self, w: &mut W, open: &[u8]) -> std::io::Result<()> {
        self.open.push(false);
        w.write_all(open)
    }

    fn end<W: ?Sized + Write>(&mut self, w: &mut W, close: &[u8]) -> std::io::Result<()> {
        let inline = self.inline();
        let had = self.open.pop().unwrap_or(false);
        if had && !inline {
            self.newline(w, self.open.len())?;
        }
        w.write_all(close)
    }

    fn item<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> std::io::Result<()> {
        if !first {
            w.write_all(b",")?;
        }
        if self.inline() {
            if !first {
                w.write_all(b" ")?;
            }
            Ok(())
        } else {
            self.newline(w, self.open.len())
        }
    }

    fn mark(&mut self) {
        if let Some(last) = self.open.last_mut() {
            *last = true;
        }
    }
}

impl serde_json::ser::Formatter for EntryFormatter {
    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.begin(w, b"[")
    }
    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.end(w, b"]")
    }
    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> std::io::Result<()> {
        self.item(w, first)
    }
    fn end_array_value<W: ?Sized + Write>(&mut self, _: &mut W) -> std::io::Result<()> {
        self.mark();
        Ok(())
    }
    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.begin(w, b"{")
    }
    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.end(w, b"}")
    }
    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> std::io::Result<()> {
        self.item(w, first)
    }
    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        w.write_all(b": ")
    }
    fn end_object_value<W: ?Sized + Write>(&mut self, _: &mut W) -> std::io::Result<()> {
        self.mark();
        Ok(())
    }
}
