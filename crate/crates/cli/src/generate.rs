use igalois_core::assoc::{default_labels, AlgModule, StructureAlgebra};
use igalois_core::coact::ComoduleAlgebra;
use igalois_core::examples::{
    cocycle_twisted_group_algebra, dual_group_algebra, free_gset_function_algebra, graded_matrix_algebra,
    group_algebra, klein_quaternion_cocycle, self_coaction, sweedler_h4, translation_action, z2_sign_cocycle,
    GroupTable,
};
use igalois_core::exactla::Field;
use igalois_core::hopf::HopfData;

use crate::document::{Loaded, Object};
use crate::error::CliError;

pub const EXAMPLE_NAMES: &[&str] = &[
    "sweedler",
    "group <G>",
    "dual-group <G>",
    "free-gset <G> <n>",
    "graded-matrix <G>",
    "point <G>",
    "trivial <G> <n>",
    "self-twice <G>",
    "sign-twist",
    "quaternion-twist",
    "regular-module <G>",
];

/// `Z<n>`, `V4` or `S3`.
pub fn parse_group(s: &str) -> Result<GroupTable, CliError> {
    match s {
        "V4" | "Klein" => Ok(GroupTable::klein()),
        "S3" => Ok(GroupTable::symmetric3()),
        _ => match s.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if (1..=12).contains(&n) => Ok(GroupTable::cyclic(n)),
            _ => Err(CliError::Usage(format!("unknown group {s:?}; expected Z<n> (n <= 12), V4 or S3"))),
        },
    }
}

fn comodule_doc<K: Field>(k: &K, c: ComoduleAlgebra<K>) -> Loaded<K> {
    let mut out = Loaded::new(k.clone());
    out.push("H", Object::Hopf(c.hopf().clone()))
        .push("A", Object::Algebra(c.algebra().clone()))
        .push("C", Object::Comodule { hopf: "H".into(), algebra: "A".into(), value: c });
    out
}

fn hopf_doc<K: Field>(k: &K, h: HopfData<K>) -> Loaded<K> {
    comodule_doc(k, self_coaction(&h))
}

fn count(s: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| CliError::Usage(format!("expected a count, got {s:?}")))
}

pub fn example<K: Field>(k: &K, name: &str, params: &[String]) -> Result<Loaded<K>, CliError> {
    let p: Vec<&str> = params.iter().map(String::as_str).collect();
    let math = CliError::Math;
    Ok(match (name, p.as_slice()) {
        ("sweedler", []) => hopf_doc(k, sweedler_h4(k).map_err(math)?),
        ("group", [g]) => hopf_doc(k, group_algebra(k, &parse_group(g)?)),
        ("dual-group", [g]) => hopf_doc(k, dual_group_algebra(k, &parse_group(g)?)),
        ("free-gset", [g, n]) => {
            let g = parse_group(g)?;
            let n = count(n)?;
            if n == 0 || n % g.order() != 0 {
                return Err(CliError::Usage(format!("a free set for a group of order {} needs a multiple of it", g.order())));
            }
            let c = free_gset_function_algebra(k, &g, n, &translation_action(&g, n / g.order())).map_err(math)?;
            comodule_doc(k, c)
        }
        ("graded-matrix", [g]) => comodule_doc(k, graded_matrix_algebra(k, &parse_group(g)?)),
        ("point", [g]) => {
            let h = group_algebra(k, &parse_group(g)?);
            let a = StructureAlgebra::from_fn(k, vec!["1".into()], |_, _| vec![k.one()]);
            comodule_doc(k, ComoduleAlgebra::trivial(&h, &a).map_err(math)?)
        }
        ("trivial", [g, n]) => {
            let h = group_algebra(k, &parse_group(g)?);
            let n = count(n)?;
            let a = StructureAlgebra::from_fn(k, default_labels("e", n), |i, j| {
                (0..n).map(|l| if i == j && j == l { k.one() } else { k.zero() }).collect()
            });
            comodule_doc(k, ComoduleAlgebra::trivial(&h, &a).map_err(math)?)
        }
        ("self-twice", [g]) => {
            let c = self_coaction(&group_algebra(k, &parse_group(g)?));
            comodule_doc(k, c.direct_sum(&c).map_err(math)?)
        }
        ("sign-twist", []) => {
            comodule_doc(k, cocycle_twisted_group_algebra(k, &GroupTable::cyclic(2), &z2_sign_cocycle(k)).map_err(math)?)
        }
        ("quaternion-twist", []) => comodule_doc(
            k,
            cocycle_twisted_group_algebra(k, &GroupTable::klein(), &klein_quaternion_cocycle(k)).map_err(math)?,
        ),
        ("regular-module", [g]) => {
            let h = group_algebra(k, &parse_group(g)?);
            let a = h.algebra().clone();
            let mut out = Loaded::new(k.clone());
            out.push("A", Object::Algebra(a.clone()))
                .push("M", Object::Module { algebra: "A".into(), value: AlgModule::regular(&a) });
            out
        }
        _ => {
            return Err(CliError::Usage(format!(
                "unknown example {name:?} with {} parameter(s); known: {}",
                p.len(),
                EXAMPLE_NAMES.join(", ")
            )))
        }
    })
}
