//! Verification suites: each runs a family of exact identities and reports
//! every violated case with both sides.

use std::fmt::Display;
use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braidk0::{orbit_quotient_action, verify_braid_relations};
use crate::clustergeom::{cluster_tilting_objects, diagonals, geom_bijection, triangulations};
use crate::derivedcat::DerivedCategory;
use crate::dgkernel::random::{random_chain_map, random_cofibration, random_complex, ComplexBounds};
use crate::dgkernel::{
    homology_homs, quotient_matches_cone, triangle_is_exact, verify_cone_representability,
    verify_cone_representability_with, ChainMap, Complex, Corruption,
};
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::orbitcat::OrbitCategory;
use crate::quiverrep::{hom_space, projective, Quiver};

use super::oracle;

/// One violated identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub wall_ms: u64,
    /// Measured side facts (maxima, counts) worth printing.
    #[serde(default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

// collects cases, then stamps the elapsed time
struct Builder {
    suite: String,
    start: Instant,
    cases: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Builder {
    fn new(suite: &str) -> Builder {
        Builder {
            suite: suite.to_string(),
            start: Instant::now(),
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, inputs: impl Display, lhs: impl Display, rhs: impl Display, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                inputs: inputs.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn eq<T: PartialEq + Display>(&mut self, inputs: impl Display, lhs: T, rhs: T) {
        let ok = lhs == rhs;
        self.check(inputs, lhs, rhs, ok);
    }

    fn error(&mut self, inputs: impl Display, e: &Error) {
        self.check(inputs, format!("error: {e}"), "a result", false);
    }

    fn extend(&mut self, cases: usize, failures: Vec<Failure>) {
        self.cases += cases;
        self.failures.extend(failures);
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(self) -> Report {
        Report {
            suite: self.suite,
            cases: self.cases,
            failures: self.failures,
            wall_ms: self.start.elapsed().as_millis() as u64,
            notes: self.notes,
        }
    }
}

/// Every orientation of the `A_n` path, by arrow direction bits.
pub fn orientations(n: usize) -> Vec<Quiver> {
    if n == 1 {
        return vec![Quiver::linear_a(1)];
    }
    (0..1u32 << (n - 1))
        .map(|mask| {
            let arrows = (0..n - 1)
                .map(|i| if mask >> i & 1 == 1 { (i + 1, i) } else { (i, i + 1) })
                .collect();
            Quiver::new(n, arrows).expect("valid vertices")
        })
        .collect()
}

pub fn describe(q: &Quiver) -> String {
    let arrows: Vec<String> = q.arrows().iter().map(|&(s, t)| format!("{}>{}", s + 1, t + 1)).collect();
    format!("A_{}[{}]", q.vertex_count(), arrows.join(","))
}

// per-case results computed in parallel, merged in input order
fn parallel<T: Sync, F>(items: &[T], f: F) -> (usize, Vec<Failure>)
where
    F: Fn(&T) -> (usize, Vec<Failure>) + Sync + Send,
{
    let parts: Vec<(usize, Vec<Failure>)> = items.par_iter().map(f).collect();
    parts.into_iter().fold((0, Vec::new()), |(c, mut fs), (c2, f2)| {
        fs.extend(f2);
        (c + c2, fs)
    })
}

fn fail(inputs: impl Display, lhs: impl Display, rhs: impl Display) -> Failure {
    Failure {
        inputs: inputs.to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

/// `dim Hom(X, Y) = dim Hom(Y, νX)` for all label pairs with shifts in
/// `shifts`, every orientation of `A_n` for `n` in `ranks`.
pub fn serre_suite(ranks: std::ops::RangeInclusive<usize>, shifts: (i64, i64), field: Field) -> Report {
    let quivers: Vec<Quiver> = ranks.flat_map(orientations).collect();
    serre_report(&quivers, shifts, field)
}

/// The Serre identity on the given quivers.
pub fn serre_report(quivers: &[Quiver], shifts: (i64, i64), field: Field) -> Report {
    let mut b = Builder::new("serre");
    let (cases, failures) = parallel(quivers, |q| {
        let db = match DerivedCategory::new(Arc::new(q.clone()), field) {
            Ok(db) => db,
            Err(e) => return (1, vec![fail(describe(q), format!("error: {e}"), "a category")]),
        };
        let labels = db.labels(shifts.0, shifts.1);
        let mut out = Vec::new();
        for &x in &labels {
            for &y in &labels {
                let lhs = db.hom_dim(x, y).unwrap_or(usize::MAX);
                let rhs = db.hom_dim(y, db.serre(x)).unwrap_or(usize::MAX - 1);
                if lhs != rhs {
                    out.push(fail(format!("{} X={x} Y={y}", describe(q)), lhs, rhs));
                }
            }
        }
        (labels.len() * labels.len(), out)
    });
    b.extend(cases, failures);
    b.finish()
}

fn clusters(quivers: &[Quiver], field: Field) -> Vec<(Quiver, Result<OrbitCategory>)> {
    quivers
        .iter()
        .map(|q| {
            let c = OrbitCategory::cluster(Arc::new(q.clone()), field);
            (q.clone(), c)
        })
        .collect()
}

/// 2-Calabi-Yau identity and `Ext¹` symmetry for every pair of orbit
/// indecomposables.
pub fn two_cy_suite(ranks: std::ops::RangeInclusive<usize>, field: Field) -> Report {
    let quivers: Vec<Quiver> = ranks.flat_map(orientations).collect();
    two_cy_report(&quivers, field)
}

/// The 2-Calabi-Yau identities on the cluster categories of the given
/// quivers.
pub fn two_cy_report(quivers: &[Quiver], field: Field) -> Report {
    let mut b = Builder::new("2-CY");
    let cats = clusters(quivers, field);
    let (cases, failures) = parallel(&cats, |(q, c)| {
        let c = match c {
            Ok(c) => c,
            Err(e) => return (1, vec![fail(describe(q), format!("error: {e}"), "a category")]),
        };
        let objs = c.indecomposables();
        let mut out = Vec::new();
        let mut cases = 0;
        for &x in &objs {
            for &y in &objs {
                cases += 2;
                let inputs = format!("{} X={x} Y={y}", describe(q));
                let lhs = c.orbit_hom_dim(x.0, y.0).map(|h| h.total);
                let rhs = c.orbit_hom_dim(y.0, c.suspend(x, 2).0).map(|h| h.total);
                match (lhs, rhs) {
                    (Ok(l), Ok(r)) if l == r => {}
                    (l, r) => out.push(fail(format!("{inputs} Hom(X,Y) vs Hom(Y,Σ²X)"), fmt_res(&l), fmt_res(&r))),
                }
                let (e1, e2) = (c.ext1(x, y), c.ext1(y, x));
                match (e1, e2) {
                    (Ok(l), Ok(r)) if l == r => {}
                    (l, r) => out.push(fail(format!("{inputs} Ext¹(X,Y) vs Ext¹(Y,X)"), fmt_res(&l), fmt_res(&r))),
                }
            }
        }
        (cases, out)
    });
    b.extend(cases, failures);
    b.finish()
}

fn fmt_res<T: Display>(r: &Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Finite support with vanishing padded edges (`support_ranks`), and
/// degree-0 dg orbit hom against the orbit hom total (`dg_ranks`).
pub fn orbit_dg_suite(
    support_ranks: std::ops::RangeInclusive<usize>,
    dg_ranks: std::ops::RangeInclusive<usize>,
    pad: i64,
    field: Field,
) -> Report {
    let mut b = Builder::new("finiteness+dg-compare");
    for n in support_ranks {
        let c = match OrbitCategory::cluster(Arc::new(Quiver::linear_a(n)), field) {
            Ok(c) => c,
            Err(e) => {
                b.error(format!("A_{n}"), &e);
                continue;
            }
        };
        let objs = c.indecomposables();
        let pairs: Vec<_> = objs.iter().flat_map(|&x| objs.iter().map(move |&y| (x, y))).collect();
        let (cases, failures) = parallel(&pairs, |&(x, y)| match c.orbit_hom_dim_padded(x.0, y.0, pad) {
            Ok(h) => {
                let width = match (h.support.keys().next(), h.support.keys().last()) {
                    (Some(a), Some(z)) => z - a + 1,
                    _ => 0,
                };
                let mut out = Vec::new();
                if width > 3 {
                    out.push(fail(format!("A_{n} X={x} Y={y} support width"), width, "≤ 3"));
                }
                if h.support.keys().any(|k| k.abs() > 10) {
                    out.push(fail(format!("A_{n} X={x} Y={y} support"), format!("{:?}", h.support), "inside [-10, 10]"));
                }
                (1, out)
            }
            Err(e) => (1, vec![fail(format!("A_{n} X={x} Y={y}"), format!("error: {e}"), "finite support")]),
        });
        b.extend(cases, failures);
    }
    for n in dg_ranks {
        let c = match OrbitCategory::cluster(Arc::new(Quiver::linear_a(n)), field) {
            Ok(c) => c,
            Err(e) => {
                b.error(format!("A_{n}"), &e);
                continue;
            }
        };
        let objs = c.indecomposables();
        let pairs: Vec<_> = objs.iter().flat_map(|&x| objs.iter().map(move |&y| (x, y))).collect();
        let results: Vec<_> = pairs
            .par_iter()
            .map(|&(x, y)| (x, y, c.dg_orbit_hom(x.0, y.0), c.orbit_hom_dim(x.0, y.0)))
            .collect();
        let mut p_n = 0;
        for (x, y, dg, orb) in results {
            let inputs = format!("A_{n} X={x} Y={y}");
            match (dg, orb) {
                (Ok(dg), Ok(orb)) => {
                    p_n = p_n.max(dg.stabilization);
                    b.eq(inputs, dg.degree(0), orb.total);
                }
                (dg, orb) => b.check(inputs, fmt_res(&dg.map(|d| d.degree(0))), fmt_res(&orb.map(|o| o.total)), false),
            }
        }
        b.note(format!("A_{n}: stabilization index p* = {p_n}"));
        if n == 2 {
            b.check("A_2 p*", p_n, "≤ 3", p_n <= 3);
        }
    }
    b.finish()
}

fn a2() -> Arc<Quiver> {
    Arc::new(Quiver::linear_a(2))
}

fn random_a2(rng: &mut ChaCha8Rng, field: Field) -> Result<Arc<Complex>> {
    Ok(Arc::new(random_complex(rng, &a2(), field, ComplexBounds::default())?))
}

// P_2 -> P_1 over A_2 in degrees 1, 0: a fixed instance every corruption
// must break
fn resolution_of_simple(field: Field) -> Result<Arc<Complex>> {
    let q = a2();
    let p1 = projective(&q, field, 0)?;
    let p2 = projective(&q, field, 1)?;
    let h = hom_space(&p2, &p1)?;
    Ok(Arc::new(Complex::new(0, vec![p1, p2], vec![h.basis()[0].clone()])?))
}

/// Cone representability on `cases` random `(f, Z)` over `A_2`, and
/// detection of each injected corruption.
pub fn cone_suite(seed: u64, cases: usize, field: Field) -> Report {
    let mut b = Builder::new("cone-representability");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = Vec::with_capacity(cases);
    for i in 0..cases {
        let made = (|| -> Result<(ChainMap, Arc<Complex>)> {
            let (x, y, z) = (random_a2(&mut rng, field)?, random_a2(&mut rng, field)?, random_a2(&mut rng, field)?);
            Ok((random_chain_map(&mut rng, &x, &y, 2)?, z))
        })();
        match made {
            Ok(inst) => instances.push(inst),
            Err(e) => b.error(format!("case {i}"), &e),
        }
    }
    let results: Vec<Result<bool>> = instances.par_iter().map(|(f, z)| verify_cone_representability(f, z)).collect();
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(ok) => b.check(format!("seed {seed} case {i}"), ok, true, ok),
            Err(e) => b.error(format!("seed {seed} case {i}"), &e),
        }
    }
    let witness = resolution_of_simple(field).map(|x| (ChainMap::identity(&x), x));
    for c in [Corruption::SignFlip, Corruption::DroppedSummand, Corruption::SwappedOrder] {
        let mut caught = 0;
        if let Ok((f, z)) = &witness {
            if verify_cone_representability_with(f, z, c) == Ok(false) {
                caught += 1;
            }
        }
        for (f, z) in &instances {
            if verify_cone_representability_with(f, z, c) == Ok(false) {
                caught += 1;
            }
        }
        b.note(format!("{c:?} detected on {caught} of {} instances", instances.len() + 1));
        b.check(format!("corruption {c:?}"), format!("detected {caught}×"), "detected at least once", caught > 0);
        let on_witness = matches!(&witness, Ok((f, z)) if verify_cone_representability_with(f, z, c) == Ok(false));
        b.check(format!("corruption {c:?} on the resolution of S_1"), on_witness, true, on_witness);
    }
    b.finish()
}

/// `homology_homs` against the brute-force oracle on random pairs.
pub fn homotopy_suite(seed: u64, cases: usize, field: Field) -> Report {
    let mut b = Builder::new("homotopy-oracle");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(cases);
    for i in 0..cases {
        match (random_a2(&mut rng, field), random_a2(&mut rng, field)) {
            (Ok(x), Ok(y)) => pairs.push((x, y)),
            (Err(e), _) | (_, Err(e)) => b.error(format!("case {i}"), &e),
        }
    }
    let results: Vec<_> = pairs
        .par_iter()
        .map(|(x, y)| (homology_homs(x, y).map(|h| h.0), oracle::homotopy_dim(x, y)))
        .collect();
    let mut nonzero = 0;
    for (i, (dg, brute)) in results.into_iter().enumerate() {
        let inputs = format!("seed {seed} case {i}");
        match (dg, brute) {
            (Ok(a), Ok(o)) => {
                nonzero += usize::from(a > 0);
                b.eq(inputs, a, o);
            }
            (a, o) => b.check(inputs, fmt_res(&a), fmt_res(&o), false),
        }
    }
    b.note(format!("{nonzero} of {cases} pairs have nonzero homotopy classes"));
    b.finish()
}

fn catalan(n: usize) -> usize {
    (0..n).fold(1usize, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Orbit counts, tilting counts and the polygon bijection for `A_n`.
pub fn counting_suite(ranks: std::ops::RangeInclusive<usize>, field: Field) -> Report {
    let mut b = Builder::new("counting+geom");
    for n in ranks {
        let inputs = format!("A_{n}");
        let mut run = || -> Result<()> {
            let c = OrbitCategory::cluster(Arc::new(Quiver::linear_a(n)), field)?;
            let objs = c.indecomposables().len();
            let diags = diagonals(n)?.len();
            b.eq(format!("{inputs} orbit indecomposables vs n(n+3)/2"), objs, n * (n + 3) / 2);
            b.eq(format!("{inputs} orbit indecomposables vs diagonals"), objs, diags);
            let mut tilting = cluster_tilting_objects(&c)?;
            let tri = triangulations(n)?;
            b.eq(format!("{inputs} tilting objects vs Catalan(n+1)"), tilting.len(), catalan(n + 1));
            b.eq(format!("{inputs} triangulations vs Catalan(n+1)"), tri.len(), catalan(n + 1));
            let bij = geom_bijection(&c)?;
            let ok = bij.check(&c)?;
            b.check(format!("{inputs} bijection matches crossings"), ok, true, ok);
            let mut moved: Vec<_> = tri.iter().map(|t| bij.transport(t)).collect();
            moved.sort();
            tilting.sort();
            let same = moved == tilting;
            b.check(format!("{inputs} triangulations transported onto tilting sets"), same, true, same);
            Ok(())
        };
        if let Err(e) = run() {
            b.error(&inputs, &e);
        }
    }
    b.finish()
}

/// Braid relations for `m` in `relation_ranks` (every orientation) and
/// triviality on `coker(1 − [F])` for `m` in `quotient_ranks`.
pub fn braid_suite(
    relation_ranks: std::ops::RangeInclusive<usize>,
    quotient_ranks: std::ops::RangeInclusive<usize>,
) -> Report {
    let mut b = Builder::new("braid");
    for m in relation_ranks {
        for q in orientations(m) {
            match verify_braid_relations(&q) {
                Ok(c) => {
                    let lhs = if c.ok() { "all relations hold".to_string() } else { c.failures.join("; ") };
                    b.check(describe(&q), lhs, "all relations hold", c.ok());
                }
                Err(e) => b.error(describe(&q), &e),
            }
        }
    }
    for m in quotient_ranks {
        let q = Quiver::linear_a(m);
        let inputs = format!("A_{m} action on coker(1 − [F])");
        match orbit_quotient_action(&q) {
            Ok(a) => {
                b.note(format!("A_{m}: invariants {:?}", a.invariants));
                b.check(inputs, if a.trivial { "trivial" } else { "nontrivial" }, "trivial", a.trivial);
            }
            Err(e) => b.error(inputs, &e),
        }
    }
    b.finish()
}

/// Quotients by random cofibrations against cones, and exactness of the
/// hom sequence of random elementary triangles.
pub fn cofibration_suite(seed: u64, cases: usize, field: Field) -> Report {
    let mut b = Builder::new("cofibration");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bounds = ComplexBounds::default();
    for i in 0..cases {
        let inputs = format!("seed {seed} case {i}");
        let run = |rng: &mut ChaCha8Rng| -> Result<(bool, bool)> {
            let inc = random_cofibration(rng, &a2(), field, bounds)?;
            let q = quotient_matches_cone(&inc)?;
            let (x, y, z) = (random_a2(rng, field)?, random_a2(rng, field)?, random_a2(rng, field)?);
            let f = random_chain_map(rng, &x, &y, 2)?;
            Ok((q, triangle_is_exact(&f, &z)?))
        };
        match run(&mut rng) {
            Ok((q, t)) => {
                b.check(format!("{inputs} H(Y/X) ≅ H(cone)"), q, true, q);
                b.check(format!("{inputs} triangle exactness"), t, true, t);
            }
            Err(e) => b.error(inputs, &e),
        }
    }
    b.finish()
}

/// Every suite, scaled by the maximal rank `n`.
pub fn verify_all(n: usize, seed: u64, field: Field) -> Vec<Report> {
    let n = n.max(1);
    vec![
        serre_suite(1..=n, (-3, 3), field),
        two_cy_suite(1..=n, field),
        orbit_dg_suite(1..=n, 1..=n.min(3), 2, field),
        cone_suite(seed, 30, field),
        homotopy_suite(seed, 50, field),
        counting_suite(1..=n.min(5), field),
        braid_suite(1..=n.clamp(2, 6), 1..=n.min(4)),
        cofibration_suite(seed, 20, field),
    ]
}
