use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;

use super::json::*;
use super::*;
use crate::derivedcat::{DbIndec, DbObject};
use crate::dgkernel::homology_homs;
use crate::dgkernel::random::{random_complex, ComplexBounds};

fn run_args(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("orbitcat").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(x: &T) {
    let text = serde_json::to_string(&Envelope::new(x)).unwrap();
    let back: Envelope<T> = serde_json::from_str(&text).unwrap();
    assert_eq!(back.schema, SCHEMA);
    assert_eq!(&back.body, x);
}

#[test]
fn quiver_text_parses() {
    let q = input::parse_quiver("# A_3, zigzag\nvertices 3\narrow 1 2\narrow 3 2 # sink in the middle\n").unwrap();
    assert_eq!(q.arrows(), &[(0, 1), (2, 1)]);
    assert_eq!(input::parse_quiver(&input::format_quiver(&q)).unwrap(), q);
    let inline = input::parse_quiver("vertices 3; arrow 1 2; arrow 3 2").unwrap();
    assert_eq!(inline, q);
}

#[test]
fn quiver_text_errors() {
    assert!(matches!(input::parse_quiver("arrow 1 2"), Err(Error::Parse(_))));
    assert!(matches!(input::parse_quiver("vertices 2\narrow 1 3"), Err(Error::InvalidVertex(3))));
    assert!(matches!(input::parse_quiver("vertices 2\narrow 0 1"), Err(Error::InvalidVertex(0))));
    assert!(matches!(input::parse_quiver("vertices 2\nedge 1 2"), Err(Error::Parse(_))));
    assert!(matches!(input::parse_quiver("vertices x"), Err(Error::Parse(_))));
    assert!(matches!(input::parse_quiver("vertices 2; vertices 2"), Err(Error::Parse(_))));
    assert!(matches!(input::parse_quiver(""), Err(Error::Parse(_))));
}

#[test]
fn oracle_agrees_on_fixed_pairs() {
    let q = Arc::new(Quiver::linear_a(2));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let x = Arc::new(random_complex(&mut rng, &q, Field::Rational, ComplexBounds::default()).unwrap());
        let y = Arc::new(random_complex(&mut rng, &q, Field::Rational, ComplexBounds::default()).unwrap());
        assert_eq!(homotopy_dim(&x, &y).unwrap(), homology_homs(&x, &y).unwrap().0);
    }
}

#[test]
fn oracle_on_the_resolution_of_a_simple() {
    // P_2 -> P_1 resolves S_1: End = k, and Hom to P_1 in degree 0 is zero
    let q = Arc::new(Quiver::linear_a(2));
    let db = DerivedCategory::new(q, Field::Rational).unwrap();
    let s1 = db.module_index((0, 0)).unwrap();
    let r = db.realize(DbIndec::new(s1, 0)).unwrap();
    assert_eq!(homotopy_dim(&r.complex, &r.complex).unwrap(), 1);
    let p1 = db.realize(DbIndec::new(db.module_index((0, 1)).unwrap(), 0)).unwrap();
    assert_eq!(homotopy_dim(&r.complex, &p1.complex).unwrap(), 0);
    assert_eq!(homotopy_dim(&p1.complex, &r.complex).unwrap(), 1);
}

#[test]
fn ar_quiver_of_a1() {
    let c = OrbitCategory::cluster(Arc::new(Quiver::linear_a(1)), Field::Rational).unwrap();
    let ar = ar::ar_quiver(&c, (-1, 1)).unwrap();
    assert_eq!(ar.nodes.len(), 3);
    assert!(ar.edges.is_empty());
}

#[test]
fn ar_quiver_of_a2() {
    let c = OrbitCategory::cluster(Arc::new(Quiver::linear_a(2)), Field::Rational).unwrap();
    let ar = ar::ar_quiver(&c, (0, c.period() - 1)).unwrap();
    let colors: BTreeSet<&str> = ar.nodes.iter().map(|n| n.color.as_str()).collect();
    assert_eq!(colors.len(), 5);
    // same color on a node exactly when the labels share an orbit
    for a in &ar.nodes {
        for b in &ar.nodes {
            assert_eq!(a.color == b.color, c.canonical(a.label) == c.canonical(b.label));
        }
    }
    // ZA_2 is a line: every node has at most one arrow in and one out
    for i in 0..ar.nodes.len() {
        assert!(ar.edges.iter().filter(|e| e.0 == i).count() <= 1);
        assert!(ar.edges.iter().filter(|e| e.1 == i).count() <= 1);
    }
    assert_eq!(ar.edges.len(), 14);
    let first = ar::export_ar_quiver(&c, (0, 4)).unwrap();
    let second = ar::export_ar_quiver(&c, (0, 4)).unwrap();
    assert_eq!(first, second);
    assert!(first.starts_with("digraph ar {"));
    round_trip(&ar);
}

#[test]
fn ar_quiver_of_a3_meshes() {
    // in ZA_3 the middle row has two arrows in and two out
    let c = OrbitCategory::cluster(Arc::new(Quiver::linear_a(3)), Field::Rational).unwrap();
    let ar = ar::ar_quiver(&c, (0, 3)).unwrap();
    let db = c.db();
    for (i, n) in ar.nodes.iter().enumerate() {
        let (lo, hi) = db.interval(n.label.module);
        let outs = ar.edges.iter().filter(|e| e.0 == i).count();
        assert!(outs <= 2);
        if hi - lo == 1 && n.label.shift < 3 {
            // the modules of length two sit in the middle row
            assert_eq!(outs, 2, "{}", n.label);
        }
    }
    assert!(ar.edges.iter().all(|e| e.2 == 1));
}

#[test]
fn json_round_trips() {
    let q = Quiver::new(3, vec![(0, 1), (2, 1)]).unwrap();
    let qj = QuiverJson::new(&q);
    round_trip(&qj);
    assert_eq!(qj.to_quiver().unwrap(), q);

    let db = DerivedCategory::new(Arc::new(q), Field::Rational).unwrap();
    for x in db.labels(-1, 1) {
        let l = LabelJson::new(&db, x);
        round_trip(&l);
        assert_eq!(l.resolve(&db).unwrap(), x);
    }
    let mut obj = DbObject::zero();
    obj.add(DbIndec::new(0, 1), 2);
    obj.add(DbIndec::new(3, -1), 1);
    let parts = object_to_json(&db, &obj);
    round_trip(&parts);
    assert_eq!(object_from_json(&db, &parts).unwrap(), obj);

    let reports = verify::verify_all(1, 0, Field::Rational);
    for r in &reports {
        round_trip(r);
    }
    round_trip(&OrbitHomRow {
        x: LabelJson { module: (1, 2), shift: 0 },
        y: LabelJson { module: (2, 2), shift: -1 },
        total: 1,
        support: [(-3, 1)].into_iter().collect(),
    });
}

#[test]
fn command_outputs_parse_back() {
    for args in [
        vec!["quiver", "validate", "--n", "3"],
        vec!["db", "homs", "--n", "2", "--lo", "-1", "--hi", "1"],
        vec!["orbit", "homs", "--n", "2"],
        vec!["orbit", "indecs", "--n", "3"],
        vec!["geom", "diagonals", "--n", "2"],
        vec!["geom", "bijection", "--n", "3", "--check"],
        vec!["braid", "check", "--m", "4"],
        vec!["braid", "quotient", "--m", "2"],
    ] {
        let mut full = args.clone();
        full.extend(["--format", "json"]);
        let (code, out, err) = run_args(&full);
        assert_eq!(code, 0, "{args:?}: {err}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        let text = serde_json::to_string(&v).unwrap();
        match args[0..2] {
            ["quiver", _] => round_trip(&serde_json::from_str::<Envelope<QuiverReport>>(&text).unwrap().body),
            ["db", _] => round_trip(&serde_json::from_str::<Envelope<DbHoms>>(&text).unwrap().body),
            ["orbit", "homs"] => round_trip(&serde_json::from_str::<Envelope<OrbitHoms>>(&text).unwrap().body),
            ["orbit", _] => round_trip(&serde_json::from_str::<Envelope<OrbitIndecs>>(&text).unwrap().body),
            ["geom", "diagonals"] => round_trip(&serde_json::from_str::<Envelope<Diagonals>>(&text).unwrap().body),
            ["geom", _] => round_trip(&serde_json::from_str::<Envelope<Bijection>>(&text).unwrap().body),
            ["braid", "check"] => round_trip(&serde_json::from_str::<Envelope<BraidReport>>(&text).unwrap().body),
            _ => round_trip(&serde_json::from_str::<Envelope<QuotientReport>>(&text).unwrap().body),
        }
    }
}

#[test]
fn rational_matrices_are_strings() {
    let (code, out, _) = run_args(&["quiver", "validate", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coxeter"], serde_json::json!([["0", "-1"], ["1", "-1"]]));
    assert_eq!(v["class"], "A_2");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run_args(&["orbit", "homs", "--n", "2", "--pad", "1"]).0, 2);
    assert_eq!(run_args(&["quiver", "validate"]).0, 2);
    assert_eq!(run_args(&["quiver", "validate", "--n", "2", "--field", "p:12"]).0, 2);
    assert_eq!(run_args(&["db", "homs", "--n", "2", "--format", "dot"]).0, 2);
    assert_eq!(run_args(&["nonsense"]).0, 2);
    // D = 0: τ³Σ² on A_2
    let (code, _, err) = run_args(&["orbit", "homs", "--n", "2", "--tau", "3", "--sigma", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("finite order"));
    let (code, _, err) = run_args(&["quiver", "validate", "--quiver", "vertices 4; arrow 1 2; arrow 3 2; arrow 4 2"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(run_args(&["orbit", "indecs", "--quiver", "vertices 4; arrow 1 2; arrow 3 2; arrow 4 2"]).0, 2);
}

#[test]
fn failed_verification_exits_1() {
    let (code, _, err) = run_args(&["braid", "quotient", "--m", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("does not induce"));
}

#[test]
fn quiver_file_is_read() {
    let dir = std::env::temp_dir().join(format!("orbitcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a3.quiver");
    std::fs::write(&path, "vertices 3\narrow 2 1\narrow 2 3\n").unwrap();
    let (code, out, err) = run_args(&["orbit", "cy-check", "--quiver-file", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("PASS"));
    std::fs::remove_dir_all(&dir).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_matches_homology_homs(seed in 0u64..10_000, zig in proptest::bool::ANY) {
        let q = if zig {
            Quiver::new(3, vec![(0, 1), (2, 1)]).unwrap()
        } else {
            Quiver::linear_a(2)
        };
        let q = Arc::new(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bounds = ComplexBounds { lo: -1, hi: 1, ..ComplexBounds::default() };
        let x = Arc::new(random_complex(&mut rng, &q, Field::Rational, bounds).unwrap());
        let y = Arc::new(random_complex(&mut rng, &q, Field::Rational, bounds).unwrap());
        prop_assert_eq!(homotopy_dim(&x, &y).unwrap(), homology_homs(&x, &y).unwrap().0);
    }

    #[test]
    fn complexes_round_trip_through_json(seed in 0u64..10_000, prime in proptest::bool::ANY) {
        let field = if prime { Field::prime(7).unwrap() } else { Field::Rational };
        let q = Arc::new(Quiver::new(3, vec![(1, 0), (1, 2)]).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_complex(&mut rng, &q, field, ComplexBounds::default()).unwrap();
        let j = ComplexJson::new(&c);
        let text = serde_json::to_string(&Envelope::new(&j)).unwrap();
        let back: Envelope<ComplexJson> = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back.body, &j);
        prop_assert_eq!(back.body.to_complex().unwrap(), c);
    }
}
