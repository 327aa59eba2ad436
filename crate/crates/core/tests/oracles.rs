mod common;

use common::brute::{all_submodules, composition_dims, nilpotent_radical};
use common::families::{algebras, modules};
use igalois_core::assoc::{AlgModule, SearchConfig};
use igalois_core::exactla::{PrimeField, Subspace};
use proptest::prelude::*;

fn agree(v: &AlgModule<PrimeField>, semisimple: bool, cfg: &SearchConfig) -> Result<(), String> {
    let subs = all_submodules(v);
    let simple = subs.len() == 2;
    let got = v.is_simple(cfg).map_err(|e| e.to_string())?;
    if got != simple {
        return Err(format!("is_simple = {got}, oracle finds {} submodules", subs.len()));
    }
    if !semisimple {
        return Ok(());
    }
    let parts = v.meataxe_decompose(cfg).map_err(|e| e.to_string())?;
    let k = v.field();
    let mut total = Subspace::zero(k, v.dim());
    for p in &parts {
        if !subs.contains(&p.subspace) {
            return Err("summand is not a submodule".into());
        }
        let inside = subs.iter().filter(|s| s.is_subspace_of(&p.subspace)).count();
        if inside != 2 {
            return Err(format!("summand of dim {} is not simple", p.subspace.dim()));
        }
        total = total.join(&p.subspace);
    }
    let dims: Vec<usize> = parts.iter().map(|p| p.subspace.dim()).collect();
    if !total.is_full() || dims.iter().sum::<usize>() != v.dim() {
        return Err("summands do not form a direct sum decomposition".into());
    }
    let mut sorted = dims.clone();
    sorted.sort();
    if sorted != composition_dims(&subs, v.dim()) || sorted != dims {
        return Err(format!("summand dims {dims:?} disagree with composition factors"));
    }
    Ok(())
}

#[test]
fn radical_matches_nilpotent_ideal_search() {
    for p in [3, 5] {
        let k = PrimeField::new(p).unwrap();
        for (name, d) in algebras(&k) {
            assert_eq!(d.radical().unwrap(), nilpotent_radical(&d), "{name} over F{p}");
        }
    }
}

#[test]
fn module_theory_matches_submodule_enumeration() {
    let cfg = SearchConfig::default();
    for p in [3, 5] {
        let k = PrimeField::new(p).unwrap();
        for (name, d) in algebras(&k) {
            let ss = d.is_semisimple().unwrap();
            for (i, v) in modules(&d, 7).iter().enumerate() {
                if let Err(e) = agree(v, ss, &cfg) {
                    panic!("{name} over F{p}, module {i} (dim {}): {e}", v.dim());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn seeds_do_not_change_verdicts(seed in any::<u64>(), pick in 0usize..16, p in prop::sample::select(vec![3u64, 5])) {
        let k = PrimeField::new(p).unwrap();
        let algs = algebras(&k);
        let (_, d) = &algs[pick % algs.len()];
        let ss = d.is_semisimple().unwrap();
        let cfg = SearchConfig { seed, ..SearchConfig::default() };
        for v in modules(d, seed).iter().take(3) {
            prop_assert_eq!(agree(v, ss, &cfg), Ok(()));
        }
    }
}
