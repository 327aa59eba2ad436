use std::path::{Path, PathBuf};
use std::process::Command;

use igalois_cli::document::{load, AnyLoaded, Loaded, Object};
use igalois_cli::error::CliError;
use igalois_cli::generate::example;
use igalois_core::assoc::StructureAlgebra;
use igalois_core::exactla::{Field, PrimeField, Rationals};
use proptest::prelude::*;

struct Out {
    code: u8,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Out {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = igalois_cli::run(std::iter::once("igalois").chain(args.iter().copied()), &mut stdout, &mut stderr);
    Out { code, stdout: String::from_utf8(stdout).unwrap(), stderr: String::from_utf8(stderr).unwrap() }
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_str().unwrap().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("igalois-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_scratch(name: &str, text: &str) -> String {
    let p = scratch(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn kz2_text() -> String {
    std::fs::read_to_string(fixture("kz2.json")).unwrap()
}

#[test]
fn check_passes_on_valid_documents() {
    for f in ["kz2.json", "sweedler.json", "free_gset_z2.json", "graded_m2_f5.json", "regular_s3_f5.json"] {
        let out = run(&["check", &fixture(f)]);
        assert_eq!(out.code, 0, "{f}: {}", out.stderr);
        assert!(out.stdout.ends_with("verdict: pass\n"), "{f}");
    }
}

#[test]
fn check_reports_the_failing_axiom() {
    let out = run(&["check", &fixture("kz2_bad_antipode.json")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("antipode left: FAIL"));
    assert!(out.stdout.ends_with("verdict: fail\n"));
}

#[test]
fn malformed_value_reports_position() {
    let out = run(&["check", &fixture("invalid/bad_value.json")]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("error [Syntax]: parse error at line 32, column"), "{}", out.stderr);
    assert!(out.stderr.contains("1/0"));
}

#[test]
fn missing_file_is_an_io_error() {
    let out = run(&["check", "/nonexistent/doc.json"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("error [Io]"));
}

#[test]
fn schema_violations_exit_with_two() {
    let base = kz2_text();
    let cases = [
        ("unknown field", base.replacen("\"dim\": 2,", "\"dim\": 2, \"extra\": 1,", 1)),
        ("version", base.replacen("\"version\": 1", "\"version\": 2", 1)),
        ("label count", base.replacen("\"g\"\n      ],", "\"g\", \"h\"\n      ],", 1)),
        ("index range", base.replacen("[1, 1, 0, \"1\"]", "[1, 1, 5, \"1\"]", 1)),
        ("field", base.replacen("\"field\": \"Q\"", "\"field\": \"Fp:4\"", 1)),
        ("fraction over Fp", base.replacen("\"field\": \"Q\"", "\"field\": \"Fp:5\"", 1).replacen("\"1\"]", "\"1/5\"]", 1)),
        ("unknown reference", base.replacen("\"hopf\": \"H\"", "\"hopf\": \"X\"", 1)),
    ];
    for (what, text) in cases {
        assert_ne!(text, base, "{what}: substitution did not apply");
        let out = run(&["check", &write_scratch("schema.json", &text)]);
        assert_eq!(out.code, 2, "{what}: {}", out.stderr);
        assert!(out.stderr.starts_with("error ["), "{what}");
    }
}

#[test]
fn duplicate_entries_are_rejected() {
    let text = kz2_text().replacen("[0, 0, 0, \"1\"],", "[0, 0, 0, \"1\"],\n        [0, 0, 0, \"2\"],", 1);
    assert!(matches!(load(&text), Err(CliError::Schema(_))));
}

#[test]
fn analyze_free_set_with_two_orbits() {
    let out = run(&["analyze", &fixture("free_gset_z2.json"), "--object", "C"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let s = &out.stdout;
    assert!(s.contains("galois: yes"));
    assert!(s.contains("|I| = 2"));
    assert!(s.contains("mu: id"));
    assert!(s.contains("nakayama routes: equal"));
    assert!(s.contains("eigen relations: hold"));
}

#[test]
fn analyze_sweedler() {
    let out = run(&["analyze", &fixture("sweedler.json"), "--object", "C"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("|I| = 1"));
    assert!(out.stdout.contains("delta_A normalized: g\n"), "{}", out.stdout);
}

#[test]
fn analyze_trivial_coaction_is_not_galois() {
    let out = run(&["analyze", &fixture("trivial_coaction.json"), "--object", "C"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("[NotGalois]"), "{}", out.stderr);
}

#[test]
fn ambiguous_object_is_a_usage_error() {
    let out = run(&["decompose", &fixture("kz2.json")]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("error [Usage]"));
    let out = run(&["analyze", &fixture("kz2.json"), "--object", "nope"]);
    assert_eq!(out.code, 2);
}

fn reanalyze(path: &Path) -> Out {
    run(&["analyze", path.to_str().unwrap(), "--object", "C"])
}

#[test]
fn correspond_to_galois() {
    for (f, n) in [("kz2.json", 1), ("point_kz2.json", 2)] {
        let dest = scratch(&format!("galois-{f}"));
        let out = run(&["correspond", &fixture(f), "--object", "C", "--direction", "to-galois", "--output", dest.to_str().unwrap()]);
        assert_eq!(out.code, 0, "{f}: {}", out.stderr);
        assert!(out.stdout.contains("morita context D ~ B: strict"), "{f}");
        let check = run(&["check", dest.to_str().unwrap()]);
        assert_eq!(check.code, 0, "{f}: {}", check.stdout);
        let again = reanalyze(&dest);
        assert_eq!(again.code, 0, "{f}: {}", again.stderr);
        assert!(again.stdout.contains(&format!("|I| = {n}\n")), "{f}: {}", again.stdout);
    }
}

#[test]
fn correspond_to_homogeneous() {
    let dest = scratch("corner.json");
    let out = run(&[
        "correspond",
        &fixture("graded_m2_f5.json"),
        "--object",
        "C",
        "--direction",
        "to-homogeneous",
        "--index",
        "1",
        "--output",
        dest.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("strict"));
    match load(&std::fs::read_to_string(&dest).unwrap()).unwrap() {
        AnyLoaded::Fp(l) => match l.get("C") {
            Some(Object::Comodule { value, .. }) => {
                assert_eq!(value.dim(), 1);
                assert!(value.is_homogeneous().unwrap());
            }
            other => panic!("unexpected object {other:?}"),
        },
        AnyLoaded::Q(_) => panic!("field changed"),
    }
}

#[test]
fn correspond_preconditions() {
    let dest = scratch("unused.json");
    let dest = dest.to_str().unwrap();
    let out = run(&["correspond", &fixture("disconnected.json"), "--object", "C", "--direction", "to-homogeneous", "--output", dest]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("[Disconnected]"), "{}", out.stderr);
    let out = run(&["correspond", &fixture("free_gset_z2.json"), "--object", "C", "--direction", "to-galois", "--output", dest]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("[NotHomogeneous]"), "{}", out.stderr);
    let out = run(&["correspond", &fixture("kz2.json"), "--object", "C", "--direction", "to-galois"]);
    assert_eq!(out.code, 2);
}

#[test]
fn examples_pass_their_own_checks() {
    for args in [vec!["sweedler"], vec!["group", "Z2"], vec!["free-gset", "Z2", "4"], vec!["point", "S3"], vec!["sign-twist"]] {
        let mut full = vec!["example"];
        full.extend(&args);
        let out = run(&full);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        let path = write_scratch("example.json", &out.stdout);
        assert_eq!(run(&["check", &path]).code, 0, "{args:?}");
    }
}

#[test]
fn unknown_examples_are_usage_errors() {
    assert_eq!(run(&["example", "moonshine"]).code, 2);
    assert_eq!(run(&["example", "group", "Z99"]).code, 2);
    assert_eq!(run(&["example", "free-gset", "Z3", "4"]).code, 2);
    assert_eq!(run(&["example", "group", "Z2", "--field", "Fp:6"]).code, 2);
}

#[test]
fn decompose_module_and_algebra() {
    let out = run(&["decompose", &fixture("regular_s3_f5.json"), "--object", "M"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("simple summands: 4"));
    assert!(out.stdout.contains("dimensions: [1, 1, 2, 2]"));

    let out = run(&["decompose", &fixture("kz2.json"), "--object", "A"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("radical dimension: 0"));
    assert_eq!(out.stdout.matches("split").count(), 2, "{}", out.stdout);
}

#[test]
fn bundled_fixtures_match_the_generators() {
    let q = Rationals;
    let f5 = PrimeField::new(5).unwrap();
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let cases: [(&str, &str, Vec<String>); 8] = [
        ("kz2.json", "group", s(&["Z2"])),
        ("sweedler.json", "sweedler", vec![]),
        ("free_gset_z2.json", "free-gset", s(&["Z2", "4"])),
        ("trivial_coaction.json", "trivial", s(&["Z2", "2"])),
        ("point_kz2.json", "point", s(&["Z2"])),
        ("disconnected.json", "self-twice", s(&["Z2"])),
        ("dual_z2.json", "dual-group", s(&["Z2"])),
        ("quaternion.json", "quaternion-twist", vec![]),
    ];
    for (file, name, params) in cases {
        let text = std::fs::read_to_string(fixture(file)).unwrap();
        assert_eq!(example(&q, name, &params).unwrap().to_json(), text, "{file}");
    }
    for (file, name, params) in [("graded_m2_f5.json", "graded-matrix", s(&["Z2"])), ("regular_s3_f5.json", "regular-module", s(&["S3"]))] {
        let text = std::fs::read_to_string(fixture(file)).unwrap();
        assert_eq!(example(&f5, name, &params).unwrap().to_json(), text, "{file}");
    }
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["--seed", "3", "decompose", "regular_s3_f5.json", "--object", "M"],
        vec!["--seed", "3", "analyze", "sweedler.json", "--object", "C"],
        vec!["check", "graded_m2_f5.json"],
    ] {
        let args: Vec<String> = args.iter().map(|a| if a.ends_with(".json") { fixture(a) } else { a.to_string() }).collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = run(&args);
        let b = run(&args);
        assert_eq!((a.code, &a.stdout, &a.stderr), (b.code, &b.stdout, &b.stderr));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_igalois");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["check", &fixture("kz2.json")]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("verdict: pass"));
    assert_eq!(status(&["check", &fixture("kz2_bad_antipode.json")]).status.code(), Some(1));
    assert_eq!(status(&["check", &fixture("invalid/bad_value.json")]).status.code(), Some(2));
    assert_eq!(status(&["frobnicate"]).status.code(), Some(2));
    let ex = status(&["example", "group", "Z3"]);
    assert_eq!(ex.status.code(), Some(0));
    assert!(matches!(load(&String::from_utf8(ex.stdout).unwrap()), Ok(AnyLoaded::Q(_))));
}

fn random_algebra(k: &PrimeField, n: usize, entries: &[u64]) -> StructureAlgebra<PrimeField> {
    StructureAlgebra::from_fn(k, (0..n).map(|i| format!("x{i}")).collect(), |i, j| {
        (0..n).map(|l| entries[(i * n + j) * n + l] % k.modulus()).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // The document format stores arbitrary structure constants, associative or not.
    #[test]
    fn documents_round_trip(n in 1usize..4, entries in prop::collection::vec(0u64..7, 27), p in prop::sample::select(vec![2u64, 3, 7])) {
        let k = PrimeField::new(p).unwrap();
        let mut l = Loaded::new(k);
        l.push("A", Object::Algebra(random_algebra(&k, n, &entries)));
        let text = l.to_json();
        match load(&text) {
            Ok(AnyLoaded::Fp(back)) => {
                prop_assert_eq!(back.to_json(), text);
                prop_assert_eq!(back, l);
            }
            other => prop_assert!(false, "reload failed: {:?}", other),
        }
    }

    #[test]
    fn rational_scalars_round_trip(num in -50i64..50, den in 1i64..20) {
        let q = Rationals;
        let v = q.div(&q.from_i64(num), &q.from_i64(den)).unwrap();
        let a = StructureAlgebra::from_fn(&q, vec!["u".into()], |_, _| vec![v.clone()]);
        let mut l = Loaded::new(q);
        l.push("A", Object::Algebra(a));
        match load(&l.to_json()) {
            Ok(AnyLoaded::Q(back)) => prop_assert_eq!(back, l),
            other => prop_assert!(false, "reload failed: {:?}", other),
        }
    }
}
