//! The `orbitcat` command line: argument parsing, dispatch, rendering and
//! the verification runner.

pub mod ar;
pub mod input;
pub mod json;
mod oracle;
pub mod verify;

pub use oracle::homotopy_dim;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::braidk0::{orbit_quotient_action, verify_braid_relations, FormKind, K0Lattice};
use crate::clustergeom::{cluster_tilting_objects, crossing, crossing_graph_dot, diagonals, geom_bijection, triangulations};
use crate::derivedcat::DerivedCategory;
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::orbitcat::{AutoEquivalence, OrbitCategory};
use crate::quiverrep::{cartan_matrix, coxeter_matrix, euler_matrix, Quiver};

use json::*;
use verify::Report;

/// Default padding of orbit hom windows; overrides may only widen it.
pub const DEFAULT_PAD: i64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    /// `q` for the rationals, `p` or `p:<prime>` for a prime field.
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Padding of the orbit hom window, at least 2.
    #[arg(long, global = true, default_value_t = DEFAULT_PAD)]
    pub pad: i64,
    /// Linearly oriented `A_n`.
    #[arg(long, short = 'n', global = true)]
    pub n: Option<usize>,
    /// Quiver text with `;` between lines, e.g. "vertices 2; arrow 1 2".
    #[arg(long, global = true, conflicts_with = "quiver_file")]
    pub quiver: Option<String>,
    #[arg(long, global = true)]
    pub quiver_file: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(name = "orbitcat", version, about = "Exact computations in orbit and cluster categories of type-A quivers")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quiver checks.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// The bounded derived category.
    #[command(subcommand)]
    Db(DbCmd),
    /// Orbit categories; the cluster category unless --tau/--sigma say otherwise.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// Polygon model of the cluster category.
    #[command(subcommand)]
    Geom(GeomCmd),
    /// Braid action on the Grothendieck group.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Subcommand)]
pub enum QuiverCmd {
    /// Dynkin type, Euler, Cartan and Coxeter matrices.
    Validate,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Shifts {
    #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
    pub lo: i64,
    #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
    pub hi: i64,
}

#[derive(Debug, Subcommand)]
pub enum DbCmd {
    /// Nonzero hom dimensions between labels in a shift window.
    Homs(Shifts),
    /// Serre duality on every pair of labels in a shift window.
    SerreCheck(Shifts),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Equivalence {
    /// Power of τ in F = τ^p Σ^s.
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    pub tau: i64,
    /// Power of Σ in F = τ^p Σ^s.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub sigma: i64,
}

#[derive(Debug, Subcommand)]
pub enum OrbitCmd {
    /// Orbit hom dimensions between all orbit indecomposables.
    Homs(Equivalence),
    /// Canonical representatives of the orbits.
    Indecs(Equivalence),
    /// The 2-Calabi-Yau identity on all pairs (cluster category only).
    CyCheck,
    /// Degree-wise dg orbit homs against orbit homs.
    DgCompare(Equivalence),
    /// The AR quiver on a window of shifts, colored by orbit.
    ArQuiver {
        #[command(flatten)]
        equivalence: Equivalence,
        /// Shift window `lo,hi`; defaults to one period.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GeomCmd {
    /// Diagonals of the (n+3)-gon and their crossings.
    Diagonals,
    /// Cluster-tilting objects against triangulations.
    TiltingCount,
    /// The bijection from diagonals to orbit indecomposables.
    Bijection {
        /// Also check that crossings match Ext¹.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Rank {
    /// Rank of the linear `A_m` quiver; otherwise the quiver options apply.
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum BraidCmd {
    /// Braid, commutation and form relations of the generators.
    Check(Rank),
    /// The induced action on coker(1 − [F]).
    Quotient(Rank),
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Every suite up to rank n.
    All,
}

// what a command produced, before rendering
struct Outcome {
    json: serde_json::Value,
    table: String,
    dot: Option<String>,
    passed: bool,
}

fn outcome<T: Serialize>(body: T, table: String, passed: bool) -> Result<Outcome> {
    let value = serde_json::to_value(Envelope::new(body)).map_err(|e| Error::Internal(e.to_string()))?;
    Ok(Outcome {
        json: value,
        table,
        dot: None,
        passed,
    })
}

/// Exit status for a library error: bad input is a usage error, anything
/// the computation itself rejects is a verification failure.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotInduced(_)
        | Error::Internal(_)
        | Error::NoStabilization(_)
        | Error::NonFiniteSupport(_)
        | Error::NoBijection => 1,
        _ => 2,
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let text = match cli.config.format {
                Format::Json => serde_json::to_string_pretty(&o.json).expect("values serialize") + "\n",
                Format::Dot => match &o.dot {
                    Some(d) => d.clone(),
                    None => {
                        let _ = writeln!(err, "error: --format dot is only available for orbit ar-quiver and geom diagonals");
                        return 2;
                    }
                },
                Format::Table => o.table.clone(),
            };
            let _ = write!(out, "{text}");
            if o.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if cli.config.format == Format::Json {
                let body = Envelope::new(ErrorReport { error: e.to_string() });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("serializes"));
            }
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

impl Config {
    pub fn field(&self) -> Result<Field> {
        Ok(self.field.parse::<Field>()?)
    }

    pub fn pad(&self) -> Result<i64> {
        if self.pad < DEFAULT_PAD {
            return Err(Error::OutOfRange(format!("--pad {} is below the default {DEFAULT_PAD}", self.pad)));
        }
        Ok(self.pad)
    }

    pub fn quiver(&self) -> Result<Quiver> {
        if let Some(text) = &self.quiver {
            return input::parse_quiver(text);
        }
        if let Some(path) = &self.quiver_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            return input::parse_quiver(&text);
        }
        match self.n {
            Some(0) => Err(Error::OutOfRange("--n must be at least 1".into())),
            Some(n) => Ok(Quiver::linear_a(n)),
            None => Err(Error::Parse("no quiver given: use --n, --quiver or --quiver-file".into())),
        }
    }

    /// The polygon rank: `--n`, or the vertex count of the given quiver.
    pub fn rank(&self) -> Result<usize> {
        Ok(self.quiver()?.vertex_count())
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let cfg = &cli.config;
    // reject a bad configuration even where the verb ignores it
    cfg.field()?;
    cfg.pad()?;
    match &cli.command {
        Command::Quiver(QuiverCmd::Validate) => quiver_validate(cfg),
        Command::Db(DbCmd::Homs(s)) => db_homs(cfg, *s),
        Command::Db(DbCmd::SerreCheck(s)) => {
            let q = cfg.quiver()?;
            let r = verify::serre_report(&[q], (s.lo, s.hi), cfg.field()?);
            report_outcome(r)
        }
        Command::Orbit(OrbitCmd::Homs(e)) => orbit_homs(cfg, *e),
        Command::Orbit(OrbitCmd::Indecs(e)) => orbit_indecs(cfg, *e),
        Command::Orbit(OrbitCmd::CyCheck) => {
            let q = cfg.quiver()?;
            q.validate()?;
            report_outcome(verify::two_cy_report(&[q], cfg.field()?))
        }
        Command::Orbit(OrbitCmd::DgCompare(e)) => dg_compare(cfg, *e),
        Command::Orbit(OrbitCmd::ArQuiver { equivalence, window }) => ar_quiver(cfg, *equivalence, window.as_deref()),
        Command::Geom(GeomCmd::Diagonals) => geom_diagonals(cfg),
        Command::Geom(GeomCmd::TiltingCount) => tilting_count(cfg),
        Command::Geom(GeomCmd::Bijection { check }) => bijection(cfg, *check),
        Command::Braid(BraidCmd::Check(r)) => braid_check(cfg, *r),
        Command::Braid(BraidCmd::Quotient(r)) => braid_quotient(cfg, *r),
        Command::Verify(VerifyCmd::All) => verify_all(cfg),
    }
}

fn orbit_category(cfg: &Config, e: Equivalence) -> Result<OrbitCategory> {
    let db = Arc::new(DerivedCategory::new(Arc::new(cfg.quiver()?), cfg.field()?)?);
    OrbitCategory::new(db, AutoEquivalence::new(e.tau, e.sigma))
}

fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(c);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(w - c.chars().count()));
            }
        }
        s.push('\n');
        s
    };
    let mut s = line(headers.to_vec());
    for r in rows {
        s.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    s
}

fn label(l: &LabelJson) -> String {
    format!("Σ^{} [{},{}]", l.shift, l.module.0, l.module.1)
}

fn grid<T: ToString>(m: &[Vec<T>]) -> String {
    let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(T::to_string).collect()).collect();
    let width = rows.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for r in &rows {
        let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(s, "  {}", cells.join(" "));
    }
    s
}

fn quiver_validate(cfg: &Config) -> Result<Outcome> {
    let q = cfg.quiver()?;
    let class = q.validate()?;
    let body = QuiverReport {
        quiver: QuiverJson::new(&q),
        class: class.to_string(),
        coxeter_number: class.coxeter_number(),
        euler: euler_matrix(&q),
        cartan: matrix_strings(&cartan_matrix(&q)?),
        coxeter: matrix_strings(&coxeter_matrix(&q)?),
    };
    let mut t = format!("type {}  (Coxeter number {})\n", body.class, body.coxeter_number);
    let _ = write!(t, "\nEuler matrix\n{}\nCartan matrix\n{}\nCoxeter matrix\n{}", grid(&body.euler), grid(&body.cartan), grid(&body.coxeter));
    outcome(body, t, true)
}

fn db_homs(cfg: &Config, s: Shifts) -> Result<Outcome> {
    if s.lo > s.hi {
        return Err(Error::OutOfRange(format!("empty shift window [{}, {}]", s.lo, s.hi)));
    }
    let db = DerivedCategory::new(Arc::new(cfg.quiver()?), cfg.field()?)?;
    let labels = db.labels(s.lo, s.hi);
    let mut homs = Vec::new();
    for &x in &labels {
        for &y in &labels {
            let dim = db.hom_dim(x, y)?;
            if dim > 0 {
                homs.push(HomRow {
                    x: LabelJson::new(&db, x),
                    y: LabelJson::new(&db, y),
                    dim,
                });
            }
        }
    }
    let rows: Vec<Vec<String>> = homs.iter().map(|h| vec![label(&h.x), label(&h.y), h.dim.to_string()]).collect();
    let table = render_table(&["X", "Y", "dim Hom"], &rows);
    outcome(DbHoms { shifts: (s.lo, s.hi), homs }, table, true)
}

fn orbit_homs(cfg: &Config, e: Equivalence) -> Result<Outcome> {
    let c = orbit_category(cfg, e)?;
    let pad = cfg.pad()?;
    let db = c.db();
    let objs = c.indecomposables();
    let mut homs = Vec::new();
    for &x in &objs {
        for &y in &objs {
            let h = c.orbit_hom_dim_padded(x.0, y.0, pad)?;
            homs.push(OrbitHomRow {
                x: LabelJson::new(db, x.0),
                y: LabelJson::new(db, y.0),
                total: h.total,
                support: h.support,
            });
        }
    }
    let rows: Vec<Vec<String>> = homs
        .iter()
        .map(|h| {
            let sup: Vec<String> = h.support.iter().map(|(n, d)| format!("{n}:{d}")).collect();
            vec![label(&h.x), label(&h.y), h.total.to_string(), sup.join(" ")]
        })
        .collect();
    let table = render_table(&["X", "Y", "dim", "n:dim Hom(X, FⁿY)"], &rows);
    let body = OrbitHoms {
        equivalence: c.equivalence().to_string(),
        period: c.period(),
        homs,
    };
    outcome(body, table, true)
}

fn orbit_indecs(cfg: &Config, e: Equivalence) -> Result<Outcome> {
    let c = orbit_category(cfg, e)?;
    let objects: Vec<LabelJson> = c.indecomposables().iter().map(|o| LabelJson::new(c.db(), o.0)).collect();
    let mut table = format!("F = {}: {} orbits\n", c.equivalence(), objects.len());
    for o in &objects {
        let _ = writeln!(table, "  {}", label(o));
    }
    let body = OrbitIndecs {
        equivalence: c.equivalence().to_string(),
        count: objects.len(),
        objects,
    };
    outcome(body, table, true)
}

fn dg_compare(cfg: &Config, e: Equivalence) -> Result<Outcome> {
    let c = orbit_category(cfg, e)?;
    let db = c.db();
    let objs = c.indecomposables();
    let mut rows = Vec::new();
    for &x in &objs {
        for &y in &objs {
            let dg = c.dg_orbit_hom(x.0, y.0)?;
            let orb = c.orbit_hom_dim(x.0, y.0)?;
            rows.push(DgRow {
                x: LabelJson::new(db, x.0),
                y: LabelJson::new(db, y.0),
                dg: dg.dims,
                orbit_total: orb.total,
                stabilization: dg.stabilization,
            });
        }
    }
    let agree = rows.iter().all(|r| r.dg.get(&0).copied().unwrap_or(0) == r.orbit_total);
    let max_stabilization = rows.iter().map(|r| r.stabilization).max().unwrap_or(0);
    let lines: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let dims: Vec<String> = r.dg.iter().map(|(d, n)| format!("{d}:{n}")).collect();
            vec![
                label(&r.x),
                label(&r.y),
                r.dg.get(&0).copied().unwrap_or(0).to_string(),
                r.orbit_total.to_string(),
                r.stabilization.to_string(),
                dims.join(" "),
            ]
        })
        .collect();
    let mut table = render_table(&["X", "Y", "dg H0", "orbit", "p*", "degree:dim"], &lines);
    let _ = writeln!(table, "{}; largest stabilization index {max_stabilization}", if agree { "agree" } else { "DISAGREE" });
    let body = DgCompare {
        rows,
        agree,
        max_stabilization,
    };
    outcome(body, table, agree)
}

fn parse_window(w: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("window {w:?} is not of the form lo,hi"));
    let (lo, hi) = w.split_once(',').ok_or_else(bad)?;
    let (lo, hi): (i64, i64) = (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?);
    if lo > hi {
        return Err(Error::OutOfRange(format!("empty window [{lo}, {hi}]")));
    }
    Ok((lo, hi))
}

fn ar_quiver(cfg: &Config, e: Equivalence, window: Option<&str>) -> Result<Outcome> {
    let c = orbit_category(cfg, e)?;
    let window = match window {
        Some(w) => parse_window(w)?,
        None => (0, c.period().abs() - 1),
    };
    let quiver = ar::ar_quiver(&c, window)?;
    let dot = ar::to_dot(&c, &quiver);
    let mut o = outcome(quiver, dot.clone(), true)?;
    o.dot = Some(dot);
    Ok(o)
}

fn geom_diagonals(cfg: &Config) -> Result<Outcome> {
    let n = cfg.rank()?;
    let diags = diagonals(n)?;
    let mut crossings = Vec::new();
    for (k, &a) in diags.iter().enumerate() {
        for &b in &diags[k + 1..] {
            if crossing(a, b)? {
                crossings.push(((a.i, a.j), (b.i, b.j)));
            }
        }
    }
    let mut table = format!("{} diagonals of the {}-gon\n", diags.len(), n + 3);
    for d in &diags {
        let _ = writeln!(table, "  {d}");
    }
    let _ = writeln!(table, "{} crossing pairs", crossings.len());
    let body = Diagonals {
        rank: n,
        polygon: n + 3,
        diagonals: diags.iter().map(|d| (d.i, d.j)).collect(),
        crossings,
    };
    let mut o = outcome(body, table, true)?;
    o.dot = Some(crossing_graph_dot(n)?);
    Ok(o)
}

fn tilting_count(cfg: &Config) -> Result<Outcome> {
    let n = cfg.rank()?;
    let c = OrbitCategory::cluster(Arc::new(Quiver::linear_a(n)), cfg.field()?)?;
    let count = cluster_tilting_objects(&c)?.len();
    let tri = triangulations(n)?.len();
    let table = format!("cluster-tilting objects  {count}\ntriangulations           {tri}\n");
    outcome(
        TiltingCount {
            rank: n,
            count,
            triangulations: tri,
        },
        table,
        count == tri,
    )
}

fn bijection(cfg: &Config, check: bool) -> Result<Outcome> {
    let n = cfg.rank()?;
    let c = OrbitCategory::cluster(Arc::new(Quiver::linear_a(n)), cfg.field()?)?;
    let b = geom_bijection(&c)?;
    let pairs: Vec<BijectionPair> = b
        .map
        .iter()
        .map(|(d, o)| BijectionPair {
            diagonal: (d.i, d.j),
            object: LabelJson::new(c.db(), o.0),
        })
        .collect();
    let checked = if check { Some(b.check(&c)?) } else { None };
    let rows: Vec<Vec<String>> = pairs
        .iter()
        .map(|p| vec![format!("({},{})", p.diagonal.0, p.diagonal.1), label(&p.object)])
        .collect();
    let mut table = render_table(&["diagonal", "object"], &rows);
    if let Some(ok) = checked {
        let _ = writeln!(table, "crossings match Ext¹: {ok}");
    }
    let body = Bijection {
        rank: n,
        pairs,
        check: checked,
    };
    outcome(body, table, checked.unwrap_or(true))
}

fn braid_quiver(cfg: &Config, r: Rank) -> Result<Quiver> {
    match r.m {
        Some(0) => Err(Error::OutOfRange("--m must be at least 1".into())),
        Some(m) => Ok(Quiver::linear_a(m)),
        None => cfg.quiver(),
    }
}

fn braid_check(cfg: &Config, r: Rank) -> Result<Outcome> {
    let q = braid_quiver(cfg, r)?;
    let lat = K0Lattice::new(&q)?;
    let c = verify_braid_relations(&q)?;
    let body = BraidReport {
        m: c.rank,
        form: lat.form(FormKind::Antisymmetric).to_rows(),
        generators: lat.generators().iter().map(|t| t.to_rows()).collect(),
        braid: c.braid,
        far_commutation: c.far_commutation,
        form_preserved: c.form_preserved,
        unimodular: c.unimodular,
        failures: c.failures.clone(),
    };
    let mut table = String::new();
    for (i, t) in body.generators.iter().enumerate() {
        let _ = write!(table, "T{}\n{}", i + 1, grid(t));
    }
    let _ = writeln!(
        table,
        "braid {}  far commutation {}  form preserved {}  unimodular {}",
        body.braid, body.far_commutation, body.form_preserved, body.unimodular
    );
    for f in &body.failures {
        let _ = writeln!(table, "  failed: {f}");
    }
    let ok = c.ok();
    outcome(body, table, ok)
}

fn braid_quotient(cfg: &Config, r: Rank) -> Result<Outcome> {
    let q = braid_quiver(cfg, r)?;
    let lat = K0Lattice::new(&q)?;
    let a = orbit_quotient_action(&q)?;
    let body = QuotientReport {
        m: lat.rank(),
        cluster_class: lat.cluster_class()?.to_rows(),
        invariants: a.invariants.clone(),
        generator_images: a.generator_images.iter().map(|t| t.to_rows()).collect(),
        trivial: a.trivial,
    };
    let summands: Vec<String> = a
        .invariants
        .iter()
        .filter(|&&d| d != 1)
        .map(|&d| if d == 0 { "ℤ".to_string() } else { format!("ℤ/{d}") })
        .collect();
    let lattice = if summands.is_empty() { "0".to_string() } else { summands.join(" ⊕ ") };
    let table = format!("coker(1 − [F]) ≅ {lattice}\ninduced action trivial: {}\n", a.trivial);
    outcome(body, table, a.trivial)
}

fn report_table(r: &Report) -> String {
    let mut s = format!(
        "{:<24} {:>6} cases  {:>4} failures  {:>6} ms  {}\n",
        r.suite,
        r.cases,
        r.failures.len(),
        r.wall_ms,
        if r.passed() { "PASS" } else { "FAIL" }
    );
    for n in &r.notes {
        let _ = writeln!(s, "    {n}");
    }
    for f in r.failures.iter().take(20) {
        let _ = writeln!(s, "    {}: {} vs {}", f.inputs, f.lhs, f.rhs);
    }
    if r.failures.len() > 20 {
        let _ = writeln!(s, "    ... {} more", r.failures.len() - 20);
    }
    s
}

fn report_outcome(r: Report) -> Result<Outcome> {
    let table = report_table(&r);
    let ok = r.passed();
    outcome(r, table, ok)
}

fn verify_all(cfg: &Config) -> Result<Outcome> {
    let n = cfg.n.unwrap_or(2);
    if n == 0 {
        return Err(Error::OutOfRange("--n must be at least 1".into()));
    }
    let reports = verify::verify_all(n, cfg.seed, cfg.field()?);
    let passed = reports.iter().all(Report::passed);
    let mut table: String = reports.iter().map(report_table).collect();
    let _ = writeln!(table, "{}", if passed { "all suites passed" } else { "some suites FAILED" });
    outcome(
        VerifyAll {
            n,
            seed: cfg.seed,
            passed,
            reports,
        },
        table,
        passed,
    )
}

#[cfg(test)]
mod tests;
