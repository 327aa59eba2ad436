use std::fmt::Write;

use igalois_core::assoc::{BlockStatus, MoritaVerdict, SearchConfig, StructureAlgebra};
use igalois_core::coact::ComoduleAlgebra;
use igalois_core::exactla::{Field, Matrix};
use igalois_core::igalois::IGaloisObject;
use igalois_core::report::AxiomReport;
use igalois_core::Error;

use crate::document::{Loaded, Object};
use crate::error::CliError;

/// Outcome of a command: the exit code and, for `correspond`, the new
/// document.
pub struct Finished<K: Field> {
    pub code: u8,
    pub document: Option<Loaded<K>>,
}

impl<K: Field> Finished<K> {
    fn code(code: u8) -> Self {
        Finished { code, document: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    ToGalois,
    ToHomogeneous,
}

pub fn vector<K: Field>(k: &K, v: &[K::Elem]) -> String {
    let parts: Vec<String> = v.iter().map(|x| k.format_elem(x)).collect();
    format!("[{}]", parts.join(", "))
}

/// `2*a - b` style rendering on the basis labels.
pub fn combination<K: Field>(k: &K, labels: &[String], v: &[K::Elem]) -> String {
    let mut out = String::new();
    for (label, c) in labels.iter().zip(v) {
        if k.is_zero(c) {
            continue;
        }
        let s = k.format_elem(c);
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        let sign = match (out.is_empty(), neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let coeff = if mag == "1" { String::new() } else { format!("{mag}*") };
        write!(out, "{sign}{coeff}{label}").unwrap();
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Cycle notation, `id` for the identity.
pub fn permutation_word(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        let parts: Vec<String> = cycle.iter().map(usize::to_string).collect();
        write!(out, "({})", parts.join(" ")).unwrap();
    }
    if out.is_empty() {
        "id".into()
    } else {
        out
    }
}

fn matrix_rows<K: Field>(out: &mut String, m: &Matrix<K>) {
    for r in 0..m.rows() {
        writeln!(out, "  {}", vector(m.field(), m.row(r))).unwrap();
    }
}

fn axiom_lines(out: &mut String, report: &AxiomReport) {
    for c in &report.checks {
        match &c.witness {
            None => writeln!(out, "  {}: pass", c.axiom).unwrap(),
            Some(w) => writeln!(out, "  {}: FAIL at {w:?}", c.axiom).unwrap(),
        }
    }
}

fn verdict_word(v: MoritaVerdict) -> &'static str {
    match v {
        MoritaVerdict::Strict => "strict",
        MoritaVerdict::SurjectiveOnly => "surjective only",
        MoritaVerdict::NotSurjective => "not surjective",
    }
}

fn comodule_of<K: Field>(o: &Object<K>) -> Option<&ComoduleAlgebra<K>> {
    match o {
        Object::Comodule { value, .. } => Some(value),
        _ => None,
    }
}

/// Every object's axioms. Exit code 0 iff all hold.
pub fn check<K: Field>(doc: &Loaded<K>, out: &mut String) -> Result<Finished<K>, CliError> {
    let mut ok = true;
    for (name, obj) in &doc.objects {
        writeln!(out, "{} {name}:", obj.kind()).unwrap();
        match obj {
            Object::Hopf(h) => {
                let r = h.check_hopf(None)?;
                ok &= r.passed();
                axiom_lines(out, &r);
            }
            Object::Algebra(a) => {
                let assoc = a.check_associative(None)?;
                match assoc {
                    None => writeln!(out, "  associativity: pass").unwrap(),
                    Some(w) => writeln!(out, "  associativity: FAIL at {w:?}").unwrap(),
                }
                let unit = a.find_unit().is_some();
                writeln!(out, "  unit: {}", if unit { "pass" } else { "FAIL" }).unwrap();
                ok &= assoc.is_none() && unit;
            }
            Object::Comodule { value, .. } => {
                let r = value.check_comodule_algebra(None)?;
                ok &= r.passed();
                axiom_lines(out, &r);
            }
            Object::Module { value, .. } => match value.check(None) {
                Ok(()) => writeln!(out, "  module axioms: pass").unwrap(),
                Err(Error::AxiomViolation(msg)) => {
                    ok = false;
                    writeln!(out, "  module axioms: FAIL ({msg})").unwrap();
                }
                Err(e) => return Err(e.into()),
            },
        }
    }
    writeln!(out, "verdict: {}", if ok { "pass" } else { "fail" }).unwrap();
    Ok(Finished::code(if ok { 0 } else { 1 }))
}

pub fn analyze<K: Field>(doc: &Loaded<K>, object: Option<&str>, out: &mut String) -> Result<Finished<K>, CliError> {
    let (name, c) = doc.select(object, "comodule", comodule_of)?;
    let k = &doc.field;
    writeln!(out, "comodule {name} over {}: dim A = {}, dim H = {}", k.descriptor(), c.dim(), c.hopf().dim()).unwrap();
    c.check_comodule_algebra(None)?.into_result()?;
    let galois = c.is_galois()?;
    writeln!(out, "galois: {}", if galois { "yes" } else { "no" }).unwrap();
    if !galois {
        return Err(Error::NotGalois.into());
    }
    let g = IGaloisObject::analyze(c)?;
    writeln!(out, "|I| = {}", g.index_count()).unwrap();
    writeln!(out, "component dimensions:").unwrap();
    for row in g.component_dims() {
        let parts: Vec<String> = row.iter().map(usize::to_string).collect();
        writeln!(out, "  [{}]", parts.join(", ")).unwrap();
    }
    let classes: Vec<String> = g
        .connectivity()?
        .iter()
        .map(|cls| format!("{{{}}}", cls.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    writeln!(out, "connectivity classes: {}", classes.join(" ")).unwrap();
    let inv = g.invariant_functionals()?;
    writeln!(out, "invariant functionals: {}", inv.space.len()).unwrap();
    writeln!(out, "psi_A completion: {:?}", inv.completion).unwrap();
    writeln!(out, "mu: {}", permutation_word(&inv.mu)).unwrap();
    let md = g.modular_data()?;
    let labels = c.algebra().labels();
    writeln!(out, "delta_A: {} = {}", vector(k, &md.delta_a), combination(k, labels, &md.delta_a)).unwrap();
    let normalized = normalized_modular(&g, &md.delta_a);
    writeln!(out, "delta_A normalized: {}", combination(k, labels, &normalized)).unwrap();
    writeln!(out, "delta_A': {} = {}", vector(k, &md.delta_a_prime), combination(k, labels, &md.delta_a_prime))
        .unwrap();
    writeln!(out, "nu: {}", vector(k, &md.nu)).unwrap();
    writeln!(out, "sigma_A:").unwrap();
    matrix_rows(out, &md.sigma_a);
    let routes = g.check_nakayama_routes();
    let eig = g.check_eigen_relations();
    match &routes {
        Ok(()) => writeln!(out, "nakayama routes: equal").unwrap(),
        Err(e) => writeln!(out, "nakayama routes: differ ({e})").unwrap(),
    }
    match &eig {
        Ok(()) => writeln!(out, "eigen relations: hold").unwrap(),
        Err(e) => writeln!(out, "eigen relations: fail ({e})").unwrap(),
    }
    Ok(Finished::code(if routes.is_ok() && eig.is_ok() { 0 } else { 1 }))
}

/// `sum_i p_i delta_A` with every summand scaled to leading coefficient 1.
/// Rescaling the components of `psi_A` moves `delta_A` only within this
/// normal form.
pub fn normalized_modular<K: Field>(g: &IGaloisObject<K>, delta: &[K::Elem]) -> Vec<K::Elem> {
    let k = g.field();
    let a = g.base().algebra();
    let mut out = vec![k.zero(); a.dim()];
    for p in g.idempotents() {
        let d = a.mul(p, delta);
        if let Some(lead) = d.iter().find(|x| !k.is_zero(x)) {
            let inv = k.inv(lead).expect("nonzero");
            for (o, x) in out.iter_mut().zip(&d) {
                *o = k.mul_add(o, &inv, x);
            }
        }
    }
    out
}

fn galois_summary<K: Field>(out: &mut String, g: &IGaloisObject<K>) -> Result<(), CliError> {
    writeln!(out, "|I| = {}", g.index_count()).unwrap();
    writeln!(out, "component dimensions: {:?}", g.component_dims()).unwrap();
    writeln!(out, "connected: {}", if g.is_connected()? { "yes" } else { "no" }).unwrap();
    Ok(())
}

fn single_comodule<K: Field>(k: &K, hopf: &str, c: ComoduleAlgebra<K>) -> Loaded<K> {
    let mut doc = Loaded::new(k.clone());
    doc.push(hopf, Object::Hopf(c.hopf().clone()))
        .push("A", Object::Algebra(c.algebra().clone()))
        .push("C", Object::Comodule { hopf: hopf.into(), algebra: "A".into(), value: c });
    doc
}

pub fn correspond<K: Field>(
    doc: &Loaded<K>,
    object: Option<&str>,
    direction: Direction,
    index: usize,
    cfg: &SearchConfig,
    out: &mut String,
) -> Result<Finished<K>, CliError> {
    let (name, c) = doc.select(object, "comodule", comodule_of)?;
    let hopf_name = match doc.get(name) {
        Some(Object::Comodule { hopf, .. }) if hopf != "A" && hopf != "C" => hopf.clone(),
        _ => "H".to_string(),
    };
    let k = &doc.field;
    c.check_comodule_algebra(None)?.into_result()?;
    match direction {
        Direction::ToGalois => {
            writeln!(out, "homogeneous {name} -> I-Galois corner of (C # H^) # H").unwrap();
            let built = c.galois_from_homogeneous(cfg)?;
            let b = built.object.base();
            let d = built.double.comodule.algebra();
            writeln!(out, "dim D = {}, dim B = {}", d.dim(), b.dim()).unwrap();
            galois_summary(out, &built.object)?;
            let corner = d.corner(&built.idempotent)?;
            let verdict = corner.context.verify(None)?;
            writeln!(out, "idempotent full: {}", if corner.full { "yes" } else { "no" }).unwrap();
            writeln!(out, "morita context D ~ B: {}", verdict_word(verdict)).unwrap();
            let ok = corner.full && verdict == MoritaVerdict::Strict;
            Ok(Finished { code: if ok { 0 } else { 1 }, document: Some(single_comodule(k, &hopf_name, b.clone())) })
        }
        Direction::ToHomogeneous => {
            writeln!(out, "I-Galois {name} -> homogeneous corner A_{index}{index}").unwrap();
            let g = IGaloisObject::analyze(c)?;
            galois_summary(out, &g)?;
            let corner = g.homogeneous_from_galois(index)?;
            writeln!(out, "dim A_{index}{index} = {}", corner.comodule.dim()).unwrap();
            for (j, v) in corner.contexts.iter().enumerate() {
                writeln!(out, "morita context A_{index}{index} ~ A_{j}{j}: {}", verdict_word(*v)).unwrap();
            }
            let ok = corner.contexts.iter().all(|v| *v == MoritaVerdict::Strict);
            Ok(Finished { code: if ok { 0 } else { 1 }, document: Some(single_comodule(k, &hopf_name, corner.comodule)) })
        }
    }
}

fn wedderburn_lines<K: Field>(out: &mut String, a: &StructureAlgebra<K>, cfg: &SearchConfig) -> Result<bool, CliError> {
    let rad = a.radical()?;
    writeln!(out, "radical dimension: {}", rad.dim()).unwrap();
    let form = a.wedderburn(cfg)?;
    for (b, blk) in form.blocks.iter().enumerate() {
        let degree = blk.degree.map(|n| n.to_string()).unwrap_or_else(|| "?".into());
        let status = match blk.status {
            BlockStatus::Split => "split",
            BlockStatus::Undetermined => "undetermined",
        };
        write!(out, "block {b}: dim {}, degree {degree}, {status}", blk.block.dim()).unwrap();
        if let Some(note) = &blk.note {
            write!(out, " ({note})").unwrap();
        }
        out.push('\n');
    }
    Ok(form.all_split())
}

/// Meataxe for a module; Wedderburn blocks for an algebra, the algebra of
/// a Hopf object, or the smash product of a comodule algebra.
pub fn decompose<K: Field>(
    doc: &Loaded<K>,
    object: Option<&str>,
    cfg: &SearchConfig,
    out: &mut String,
) -> Result<Finished<K>, CliError> {
    let (name, obj) = doc.select(object, "object", Some)?;
    writeln!(out, "{} {name}:", obj.kind()).unwrap();
    let ok = match obj {
        Object::Module { value, .. } => {
            let parts = value.meataxe_decompose(cfg)?;
            let dims: Vec<usize> = parts.iter().map(|s| s.module.dim()).collect();
            writeln!(out, "simple summands: {}", parts.len()).unwrap();
            writeln!(out, "dimensions: {dims:?}").unwrap();
            true
        }
        Object::Algebra(a) => wedderburn_lines(out, a, cfg)?,
        Object::Hopf(h) => wedderburn_lines(out, h.algebra(), cfg)?,
        Object::Comodule { value, .. } => {
            let s = value.smash()?;
            writeln!(out, "smash product dimension: {}", s.algebra.dim()).unwrap();
            wedderburn_lines(out, &s.algebra, cfg)?
        }
    };
    Ok(Finished::code(if ok { 0 } else { 1 }))
}
