//! JSON shapes emitted by the command line. Every document carries a
//! top-level `"schema": 1`; matrices are row-major lists of `"p/q"` strings.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::de::{self, DeserializeOwned};
use serde::{ser, Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Value};

use crate::derivedcat::{DbIndec, DbObject, DerivedCategory};
use crate::dgkernel::Complex;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::quiverrep::{Quiver, Rep, RepMap};

use super::verify::Report;

pub const SCHEMA: u32 = 1;

/// A versioned document: the body's fields next to `"schema"`, or the body
/// under `"data"` when it is not a JSON object.
#[derive(Debug, Clone, PartialEq)]
pub struct Envelope<T> {
    pub schema: u32,
    pub body: T,
}

impl<T> Envelope<T> {
    pub fn new(body: T) -> Envelope<T> {
        Envelope { schema: SCHEMA, body }
    }
}

impl<T: Serialize> Serialize for Envelope<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let body = serde_json::to_value(&self.body).map_err(ser::Error::custom)?;
        let mut map = match body {
            Value::Object(m) => m,
            other => Map::from_iter([("data".to_string(), other)]),
        };
        map.insert("schema".into(), Value::from(self.schema));
        map.serialize(s)
    }
}

impl<'de, T: DeserializeOwned> Deserialize<'de> for Envelope<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut map = Map::deserialize(d)?;
        let schema = map
            .remove("schema")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| de::Error::missing_field("schema"))?;
        if schema != u64::from(SCHEMA) {
            return Err(de::Error::custom(format!("unsupported schema {schema}")));
        }
        let body = match map.remove("data") {
            Some(v) if map.is_empty() => v,
            Some(v) => {
                map.insert("data".into(), v);
                Value::Object(map)
            }
            None => Value::Object(map),
        };
        let body = T::deserialize(body).map_err(de::Error::custom)?;
        Ok(Envelope { schema: SCHEMA, body })
    }
}

pub type StringMatrix = Vec<Vec<String>>;

pub fn matrix_strings(m: &Matrix) -> StringMatrix {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect()
}

/// Parse row-major strings; `cols` fixes the width of an empty matrix.
pub fn parse_matrix(field: Field, rows: &StringMatrix, cols: usize) -> Result<Matrix> {
    let mut entries = Vec::with_capacity(rows.len() * cols);
    for row in rows {
        if row.len() != cols {
            return Err(Error::Parse(format!("matrix row of length {} where {cols} expected", row.len())));
        }
        for s in row {
            entries.push(field.parse(s)?);
        }
    }
    Ok(Matrix::new(field, rows.len(), cols, entries)?)
}

/// A label, with its module written as a 1-based interval of path positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelJson {
    pub module: (usize, usize),
    pub shift: i64,
}

impl LabelJson {
    pub fn new(db: &DerivedCategory, x: DbIndec) -> LabelJson {
        let (lo, hi) = db.interval(x.module);
        LabelJson {
            module: (lo + 1, hi + 1),
            shift: x.shift,
        }
    }

    pub fn resolve(self, db: &DerivedCategory) -> Result<DbIndec> {
        let (lo, hi) = self.module;
        if lo == 0 || hi == 0 {
            return Err(Error::Parse("interval positions are 1-based".into()));
        }
        let m = db
            .module_index((lo - 1, hi - 1))
            .ok_or_else(|| Error::Parse(format!("no module with interval [{lo},{hi}]")))?;
        Ok(DbIndec::new(m, self.shift))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub module: (usize, usize),
    pub shift: i64,
    pub mult: usize,
}

pub fn object_to_json(db: &DerivedCategory, x: &DbObject) -> Vec<SummandJson> {
    x.summands()
        .map(|(a, mult)| {
            let l = LabelJson::new(db, a);
            SummandJson {
                module: l.module,
                shift: l.shift,
                mult,
            }
        })
        .collect()
}

pub fn object_from_json(db: &DerivedCategory, parts: &[SummandJson]) -> Result<DbObject> {
    let mut x = DbObject::zero();
    for p in parts {
        x.add(
            LabelJson {
                module: p.module,
                shift: p.shift,
            }
            .resolve(db)?,
            p.mult,
        );
    }
    Ok(x)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: usize,
    /// 1-based `(source, target)`.
    pub arrows: Vec<(usize, usize)>,
}

impl QuiverJson {
    pub fn new(q: &Quiver) -> QuiverJson {
        QuiverJson {
            vertices: q.vertex_count(),
            arrows: q.arrows().iter().map(|&(s, t)| (s + 1, t + 1)).collect(),
        }
    }

    pub fn to_quiver(&self) -> Result<Quiver> {
        let mut arrows = Vec::with_capacity(self.arrows.len());
        for &(s, t) in &self.arrows {
            if s == 0 || t == 0 {
                return Err(Error::InvalidVertex(0));
            }
            arrows.push((s - 1, t - 1));
        }
        Quiver::new(self.vertices, arrows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub degree: i64,
    pub dims: Vec<usize>,
    /// One matrix per arrow, `dims[target] × dims[source]`.
    pub arrows: Vec<StringMatrix>,
    /// The differential out of this degree, one matrix per vertex.
    pub differential: Vec<StringMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub field: String,
    pub quiver: QuiverJson,
    pub terms: Vec<TermJson>,
}

impl ComplexJson {
    pub fn new(c: &Complex) -> ComplexJson {
        let nv = c.quiver().vertex_count();
        let terms = match c.range() {
            None => Vec::new(),
            Some(_) => c
                .degrees()
                .map(|k| {
                    let t = c.term(k);
                    let d = c.d(k);
                    TermJson {
                        degree: k,
                        dims: t.dims().to_vec(),
                        arrows: t.maps().iter().map(matrix_strings).collect(),
                        differential: (0..nv).map(|v| matrix_strings(d.component(v))).collect(),
                    }
                })
                .collect(),
        };
        ComplexJson {
            field: c.field().to_string(),
            quiver: QuiverJson::new(c.quiver()),
            terms,
        }
    }

    pub fn to_complex(&self) -> Result<Complex> {
        let field: Field = self.field.parse()?;
        let q = Arc::new(self.quiver.to_quiver()?);
        let Some(first) = self.terms.first() else {
            return Ok(Complex::zero(q, field));
        };
        let mut reps = Vec::with_capacity(self.terms.len());
        for (j, t) in self.terms.iter().enumerate() {
            if t.degree != first.degree + j as i64 {
                return Err(Error::Parse("terms must occupy consecutive degrees".into()));
            }
            if t.dims.len() != q.vertex_count() || t.arrows.len() != q.arrows().len() {
                return Err(Error::Parse(format!("term in degree {} has the wrong shape", t.degree)));
            }
            let maps = q
                .arrows()
                .iter()
                .zip(&t.arrows)
                .map(|(&(s, _), m)| parse_matrix(field, m, t.dims[s]))
                .collect::<Result<Vec<_>>>()?;
            reps.push(Rep::new(q.clone(), field, t.dims.clone(), maps)?);
        }
        let mut diffs = Vec::new();
        for j in 1..self.terms.len() {
            let t = &self.terms[j];
            if t.differential.len() != q.vertex_count() {
                return Err(Error::Parse(format!("differential in degree {} has the wrong shape", t.degree)));
            }
            let comps = (0..q.vertex_count())
                .map(|v| parse_matrix(field, &t.differential[v], t.dims[v]))
                .collect::<Result<Vec<_>>>()?;
            diffs.push(RepMap::new(field, comps));
        }
        Complex::build(q, field, first.degree, reps, diffs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverReport {
    pub quiver: QuiverJson,
    pub class: String,
    pub coxeter_number: usize,
    pub euler: Vec<Vec<i64>>,
    pub cartan: StringMatrix,
    pub coxeter: StringMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomRow {
    pub x: LabelJson,
    pub y: LabelJson,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DbHoms {
    pub shifts: (i64, i64),
    /// Nonzero entries only.
    pub homs: Vec<HomRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitHomRow {
    pub x: LabelJson,
    pub y: LabelJson,
    pub total: usize,
    pub support: BTreeMap<i64, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitHoms {
    pub equivalence: String,
    pub period: i64,
    pub homs: Vec<OrbitHomRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitIndecs {
    pub equivalence: String,
    pub count: usize,
    pub objects: Vec<LabelJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DgRow {
    pub x: LabelJson,
    pub y: LabelJson,
    pub dg: BTreeMap<i64, usize>,
    pub orbit_total: usize,
    pub stabilization: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DgCompare {
    pub rows: Vec<DgRow>,
    pub agree: bool,
    pub max_stabilization: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagonals {
    pub rank: usize,
    pub polygon: usize,
    pub diagonals: Vec<(usize, usize)>,
    pub crossings: Vec<((usize, usize), (usize, usize))>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingCount {
    pub rank: usize,
    pub count: usize,
    pub triangulations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionPair {
    pub diagonal: (usize, usize),
    pub object: LabelJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bijection {
    pub rank: usize,
    pub pairs: Vec<BijectionPair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidReport {
    pub m: usize,
    pub form: Vec<Vec<i64>>,
    pub generators: Vec<Vec<Vec<i64>>>,
    pub braid: bool,
    pub far_commutation: bool,
    pub form_preserved: bool,
    pub unimodular: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientReport {
    pub m: usize,
    pub cluster_class: Vec<Vec<i64>>,
    pub invariants: Vec<i64>,
    pub generator_images: Vec<Vec<Vec<i64>>>,
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyAll {
    pub n: usize,
    pub seed: u64,
    pub passed: bool,
    pub reports: Vec<Report>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: String,
}
