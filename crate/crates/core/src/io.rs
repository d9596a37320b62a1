//! JSON formats for quivers, parameters, modules, groups and SRA parameters.
//!
//! Scalars are strings in the grammar of [`Scalar::parse`]; integers are also
//! accepted on input. Positions and adjacent transpositions are 1-based.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::quiver::{DimVector, Quiver, Weight};
use crate::ratmat::{Mat, Scalar};
use crate::sra::{GammaData, SraParams};
use crate::symg::YoungDiagram;
use crate::wreathmod::{Params, Tuple, WreathModule};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Text(String),
    Int(i64),
}

impl ScalarText {
    pub fn parse(&self, m: u32) -> Result<Scalar> {
        match self {
            ScalarText::Text(s) => Scalar::parse(s, m),
            ScalarText::Int(k) => Ok(Scalar::int(*k)),
        }
    }
}

impl From<&Scalar> for ScalarText {
    fn from(s: &Scalar) -> Self {
        ScalarText::Text(s.to_string())
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

#[derive(Serialize, Deserialize)]
struct EdgeFile {
    name: String,
    tail: String,
    head: String,
}

#[derive(Serialize, Deserialize)]
struct QuiverFile {
    vertices: Vec<String>,
    edges: Vec<EdgeFile>,
}

pub fn quiver_from_json(s: &str) -> Result<Quiver> {
    let f: QuiverFile = serde_json::from_str(s).map_err(json_err)?;
    let edges: Vec<(&str, &str, &str)> = f.edges.iter().map(|e| (e.name.as_str(), e.tail.as_str(), e.head.as_str())).collect();
    let names: Vec<&str> = f.vertices.iter().map(String::as_str).collect();
    Quiver::new(&names, &edges)
}

pub fn quiver_to_json(q: &Quiver) -> String {
    let f = QuiverFile {
        vertices: q.vertices().to_vec(),
        edges: q
            .edges()
            .iter()
            .map(|e| EdgeFile {
                name: e.name.clone(),
                tail: q.vertex_name(e.tail).into(),
                head: q.vertex_name(e.head).into(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&f).expect("serializable")
}

fn one() -> u32 {
    1
}

#[derive(Serialize, Deserialize)]
struct ParamsFile {
    n: usize,
    lambda: BTreeMap<String, ScalarText>,
    nu: ScalarText,
    #[serde(default = "one")]
    cyclotomic_order: u32,
}

/// A weight given as `{vertex: scalar}`; every vertex must appear.
pub fn weight_from_map(q: &Quiver, map: &BTreeMap<String, ScalarText>, m: u32) -> Result<Weight> {
    let mut w = vec![None; q.n_vertices()];
    for (name, value) in map {
        w[q.vertex(name)?] = Some(value.parse(m)?);
    }
    w.into_iter()
        .enumerate()
        .map(|(i, x)| x.ok_or_else(|| Error::Parse(format!("weight misses vertex {}", q.vertex_name(i)))))
        .collect()
}

fn weight_to_map(q: &Quiver, w: &[Scalar]) -> BTreeMap<String, ScalarText> {
    w.iter().enumerate().map(|(i, x)| (q.vertex_name(i).to_string(), x.into())).collect()
}

fn params_from_file(q: &Quiver, f: &ParamsFile) -> Result<Params> {
    if f.cyclotomic_order == 0 {
        return Err(Error::Parse("cyclotomic_order must be positive".into()));
    }
    let m = f.cyclotomic_order;
    let mut p = Params::new(q.clone(), f.n, weight_from_map(q, &f.lambda, m)?, f.nu.parse(m)?)?;
    p.order = p.order.max(m);
    Ok(p)
}

fn params_to_file(p: &Params, order: u32) -> ParamsFile {
    ParamsFile {
        n: p.n,
        lambda: weight_to_map(&p.quiver, &p.lambda),
        nu: (&p.nu).into(),
        cyclotomic_order: order,
    }
}

pub fn params_from_json(q: &Quiver, s: &str) -> Result<Params> {
    let f: ParamsFile = serde_json::from_str(s).map_err(json_err)?;
    params_from_file(q, &f)
}

pub fn params_to_json(p: &Params) -> String {
    serde_json::to_string_pretty(&params_to_file(p, p.order)).expect("serializable")
}

#[derive(Serialize, Deserialize)]
struct SupportEntry {
    tuple: Vec<String>,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeAction {
    edge: String,
    position: usize,
    source_tuple: Vec<String>,
    matrix: Vec<Vec<ScalarText>>,
}

#[derive(Serialize, Deserialize)]
struct SnAction {
    adjacent: usize,
    source_tuple: Vec<String>,
    matrix: Vec<Vec<ScalarText>>,
}

#[derive(Serialize, Deserialize)]
struct ModuleFile {
    params: ParamsFile,
    support: Vec<SupportEntry>,
    #[serde(default)]
    edge_actions: Vec<EdgeAction>,
    #[serde(default)]
    sn_actions: Vec<SnAction>,
}

fn tuple_from_names(q: &Quiver, names: &[String], n: usize) -> Result<Tuple> {
    if names.len() != n {
        return Err(Error::Parse(format!("tuple {names:?} has length {}, expected {n}", names.len())));
    }
    names.iter().map(|s| q.vertex(s)).collect()
}

fn tuple_names(q: &Quiver, j: &[usize]) -> Vec<String> {
    j.iter().map(|&v| q.vertex_name(v).to_string()).collect()
}

fn matrix_from_rows(rows: &[Vec<ScalarText>], shape: (usize, usize), m: u32, what: &str) -> Result<Mat> {
    let (r, c) = shape;
    let ok = rows.len() == r && rows.iter().all(|row| row.len() == c);
    if !ok && !(r == 0 && rows.is_empty()) {
        let got_c = rows.first().map_or(0, Vec::len);
        return Err(Error::ShapeMismatch(format!("{what}: matrix is {}x{got_c}, expected {r}x{c}", rows.len())));
    }
    let data = rows.iter().flatten().map(|x| x.parse(m)).collect::<Result<Vec<_>>>()?;
    Mat::from_data(r, c, data)
}

fn matrix_to_rows(m: &Mat) -> Vec<Vec<ScalarText>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(ScalarText::from).collect()).collect()
}

pub fn module_from_json(q: &Quiver, s: &str) -> Result<WreathModule> {
    let f: ModuleFile = serde_json::from_str(s).map_err(json_err)?;
    let params = params_from_file(q, &f.params)?;
    let (n, m) = (params.n, params.order);
    let mut v = WreathModule::zero(params);
    for e in &f.support {
        let j = tuple_from_names(q, &e.tuple, n)?;
        if v.dim(&j) != 0 {
            return Err(Error::Parse(format!("tuple {:?} listed twice", e.tuple)));
        }
        v.set_dim(j, e.dim);
    }
    for e in &f.edge_actions {
        let a = q.arrow(&e.edge)?;
        let j = tuple_from_names(q, &e.source_tuple, n)?;
        if e.position == 0 || e.position > n {
            return Err(Error::Parse(format!("position {} out of range 1..={n}", e.position)));
        }
        let l = e.position - 1;
        if q.tail(a) != j[l] {
            return Err(Error::Parse(format!("edge {} does not start at position {} of {:?}", e.edge, e.position, e.source_tuple)));
        }
        let target = v.edge_target(a, l, &j);
        let what = format!("edge {} at {:?}", e.edge, e.source_tuple);
        let mat = matrix_from_rows(&e.matrix, (v.dim(&target), v.dim(&j)), m, &what)?;
        v.set_edge(a, l, j, mat);
    }
    for e in &f.sn_actions {
        if e.adjacent == 0 || e.adjacent >= n {
            return Err(Error::Parse(format!("adjacent {} out of range 1..{n}", e.adjacent)));
        }
        let k = e.adjacent - 1;
        let j = tuple_from_names(q, &e.source_tuple, n)?;
        let mut target = j.clone();
        target.swap(k, k + 1);
        let what = format!("s_{} at {:?}", e.adjacent, e.source_tuple);
        let mat = matrix_from_rows(&e.matrix, (v.dim(&target), v.dim(&j)), m, &what)?;
        v.set_sn(k, j, mat);
    }
    Ok(v)
}

/// The cyclotomic order needed to write every scalar of the module.
pub fn module_order(v: &WreathModule) -> u32 {
    let entries = v.stored_edges().map(|(_, m)| m).chain(v.stored_sn().map(|(_, m)| m));
    entries.flat_map(Mat::entries).map(Scalar::order).fold(v.params.order, u32::max)
}

/// Canonical form: tuples in index order, only nonzero matrices.
pub fn module_to_json(v: &WreathModule) -> String {
    let q = v.quiver();
    let f = ModuleFile {
        params: params_to_file(&v.params, module_order(v)),
        support: v.support().iter().map(|(j, &dim)| SupportEntry { tuple: tuple_names(q, j), dim }).collect(),
        edge_actions: v
            .stored_edges()
            .map(|((a, l, j), m)| EdgeAction {
                edge: q.arrow_name(*a),
                position: l + 1,
                source_tuple: tuple_names(q, j),
                matrix: matrix_to_rows(m),
            })
            .collect(),
        sn_actions: v
            .stored_sn()
            .map(|((k, j), m)| SnAction { adjacent: k + 1, source_tuple: tuple_names(q, j), matrix: matrix_to_rows(m) })
            .collect(),
    };
    serde_json::to_string_pretty(&f).expect("serializable")
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum GammaFile {
    Cyclic {
        m: usize,
    },
    Table {
        order: usize,
        identity: String,
        #[serde(default = "one")]
        cyclotomic_order: u32,
        table: BTreeMap<String, BTreeMap<String, ScalarText>>,
    },
}

/// Parse a group description. Table rows follow the quiver's vertex order
/// when a quiver is given, otherwise the order of the row names.
pub fn gamma_from_json(s: &str, quiver: Option<&Quiver>) -> Result<GammaData> {
    let f: GammaFile = serde_json::from_str(s).map_err(json_err)?;
    match f {
        GammaFile::Cyclic { m } => GammaData::cyclic(m),
        GammaFile::Table { order, identity, cyclotomic_order, table } => {
            let rows: Vec<String> = match quiver {
                Some(q) => q.vertices().to_vec(),
                None => table.keys().cloned().collect(),
            };
            let first = table.values().next().ok_or_else(|| Error::CharacterTable("empty table".into()))?;
            let mut elements = vec![identity.clone()];
            elements.extend(first.keys().filter(|k| **k != identity).cloned());
            let mut values = Vec::new();
            for r in &rows {
                let row = table.get(r).ok_or_else(|| Error::CharacterTable(format!("no row for vertex {r}")))?;
                if row.len() != elements.len() {
                    return Err(Error::CharacterTable(format!("row {r} has {} entries", row.len())));
                }
                let vals = elements
                    .iter()
                    .map(|e| {
                        row.get(e)
                            .ok_or_else(|| Error::CharacterTable(format!("row {r} misses element {e}")))?
                            .parse(cyclotomic_order)
                    })
                    .collect::<Result<Vec<_>>>()?;
                values.push(vals);
            }
            GammaData::from_table(order, cyclotomic_order, rows, elements, values)
        }
    }
}

#[derive(Deserialize)]
struct SraFile {
    t: ScalarText,
    k: ScalarText,
    #[serde(default)]
    c: BTreeMap<String, ScalarText>,
}

pub fn sra_from_json(s: &str, g: &GammaData) -> Result<SraParams> {
    let f: SraFile = serde_json::from_str(s).map_err(json_err)?;
    let m = g.cyclotomic_order;
    let c = f.c.iter().map(|(k, v)| Ok((k.clone(), v.parse(m)?))).collect::<Result<_>>()?;
    Ok(SraParams { t: f.t.parse(m)?, k: f.k.parse(m)?, c })
}

/// Input of a deformability check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionsRequest {
    pub lambda0: Weight,
    pub lambda: Weight,
    pub nu: Scalar,
    pub word: Vec<usize>,
    pub blocks: Vec<(YoungDiagram, DimVector)>,
}

#[derive(Deserialize)]
struct BlockFile {
    diagram: Vec<usize>,
    alpha: BTreeMap<String, i64>,
}

#[derive(Deserialize)]
struct RequestFile {
    #[serde(default = "one")]
    cyclotomic_order: u32,
    lambda0: BTreeMap<String, ScalarText>,
    lambda: BTreeMap<String, ScalarText>,
    nu: ScalarText,
    #[serde(default)]
    word: Vec<String>,
    blocks: Vec<BlockFile>,
}

/// `{"lambda0":{..},"lambda":{..},"nu":"..","word":["0"],"blocks":[{"diagram":[2],"alpha":{"1":1}}]}`;
/// vertices missing from `alpha` count as zero.
pub fn conditions_request_from_json(q: &Quiver, s: &str) -> Result<ConditionsRequest> {
    let f: RequestFile = serde_json::from_str(s).map_err(json_err)?;
    let m = f.cyclotomic_order;
    let word = f.word.iter().map(|v| q.vertex(v)).collect::<Result<_>>()?;
    let mut blocks = Vec::new();
    for b in &f.blocks {
        let mut alpha = vec![0; q.n_vertices()];
        for (v, &c) in &b.alpha {
            alpha[q.vertex(v)?] = c;
        }
        blocks.push((YoungDiagram::new(b.diagram.clone())?, alpha));
    }
    Ok(ConditionsRequest {
        lambda0: weight_from_map(q, &f.lambda0, m)?,
        lambda: weight_from_map(q, &f.lambda, m)?,
        nu: f.nu.parse(m)?,
        word,
        blocks,
    })
}
