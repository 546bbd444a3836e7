//! JSON wire formats: geometries, subspaces, base subsets, Grassmann maps
//! and recognition reports. Serialization is deterministic (struct field
//! order, sorted collections) so repeated runs produce identical bytes.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::chow::{GrassmannMap, RecognitionResult};
use crate::gf::FieldSpec;
use crate::grassmann::{Ambient, GrassmannSpace};
use crate::linspace::LinearSpace;
use crate::projspace::{build_pg, PgSpace, SubRref};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("geometry file does not match a rebuildable projective space: {0}")]
    PgMismatch(String),
    #[error("map file is inconsistent: {0}")]
    BadMap(String),
    #[error("unsupported field: {0}")]
    Field(#[from] crate::gf::FieldError),
    #[error("bad geometry: {0}")]
    BadGeometry(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeometryJson {
    pub label: String,
    pub n_points: usize,
    pub lines: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    /// Projective dimension, present when the geometry is a built PG.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Normalized homogeneous coordinates per point, for built PGs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<Vec<u8>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub dim: i64,
    pub rref: Vec<Vec<u8>>,
}

impl SubspaceJson {
    pub fn of(s: &SubRref) -> SubspaceJson {
        SubspaceJson {
            dim: s.dim(),
            rref: s.rows.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BaseSubsetJson {
    pub frame: Vec<usize>,
    pub k: i64,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapJson {
    /// Path to the source geometry file, relative to the map file.
    pub source: String,
    pub target: String,
    pub k: i64,
    pub map: Vec<usize>,
}

pub fn geometry_of_space(space: &LinearSpace) -> GeometryJson {
    GeometryJson {
        label: space.label.clone(),
        n_points: space.n_points,
        lines: space.lines.iter().map(|l| l.to_vec()).collect(),
        field: None,
        n: None,
        coords: None,
    }
}

pub fn geometry_of_pg(pg: &PgSpace) -> GeometryJson {
    let mut g = geometry_of_space(&pg.space);
    g.field = Some(pg.field.designator());
    g.n = Some(pg.n);
    g.coords = Some(pg.points.clone());
    g
}

/// Rebuilds an ambient from a geometry file. Files carrying field and
/// coordinates are rebuilt as projective spaces and verified against the
/// stored incidence data; anything else loads as an abstract space.
pub fn ambient_from_geometry(g: &GeometryJson) -> Result<Arc<Ambient>, FormatError> {
    if let (Some(field), Some(n)) = (&g.field, g.n) {
        let spec = FieldSpec::catalog(field)?;
        let pg = build_pg(n, spec).map_err(|e| FormatError::PgMismatch(e.to_string()))?;
        if pg.space.n_points != g.n_points || pg.space.lines.len() != g.lines.len() {
            return Err(FormatError::PgMismatch(format!(
                "expected {} points / {} lines, file has {} / {}",
                pg.space.n_points,
                pg.space.lines.len(),
                g.n_points,
                g.lines.len()
            )));
        }
        for (i, line) in g.lines.iter().enumerate() {
            let file_line = BitSet::from_iter(g.n_points, line.iter().copied());
            if pg.space.lines[i] != file_line {
                return Err(FormatError::PgMismatch(format!(
                    "line {i} differs from the canonical enumeration"
                )));
            }
        }
        return Ok(Arc::new(Ambient::Pg(pg)));
    }
    for line in &g.lines {
        if line.iter().any(|&p| p >= g.n_points) {
            return Err(FormatError::BadGeometry("line point out of range".into()));
        }
    }
    let space = LinearSpace::from_point_lists(g.label.clone(), g.n_points, &g.lines);
    Ok(Arc::new(Ambient::Abstract(Arc::new(space))))
}

pub fn read_geometry(path: &Path) -> Result<GeometryJson, FormatError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), FormatError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// Loads a Grassmann map: geometry paths in the file are resolved relative
/// to the map file's directory.
pub fn load_map(path: &Path) -> Result<GrassmannMap, FormatError> {
    let text = std::fs::read_to_string(path)?;
    let mj: MapJson = serde_json::from_str(&text)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let src_g = read_geometry(&base.join(&mj.source))?;
    let tgt_g = read_geometry(&base.join(&mj.target))?;
    let src_amb = ambient_from_geometry(&src_g)?;
    let tgt_amb = ambient_from_geometry(&tgt_g)?;
    let source = Arc::new(
        GrassmannSpace::enumerate(src_amb, mj.k).map_err(|e| FormatError::BadMap(e.to_string()))?,
    );
    let target = Arc::new(
        GrassmannSpace::enumerate(tgt_amb, mj.k).map_err(|e| FormatError::BadMap(e.to_string()))?,
    );
    GrassmannMap::new(source, target, mj.map).map_err(|e| FormatError::BadMap(e.to_string()))
}

#[derive(Debug, Serialize)]
pub struct RecognitionJson {
    pub verdict: crate::chow::Verdict,
    pub witness: Option<Vec<usize>>,
    pub witness_into_dual: bool,
    pub checks: crate::chow::RecognitionChecks,
}

pub fn recognition_to_json(r: &RecognitionResult) -> RecognitionJson {
    RecognitionJson {
        verdict: r.verdict,
        witness: r.witness.as_ref().map(|w| w.map.clone()),
        witness_into_dual: r.witness_into_dual,
        checks: r.checks.clone(),
    }
}

/// DOT rendering of a Grassmann adjacency graph; node ids are element
/// indices, one edge per adjacent pair.
pub fn adjacency_dot(g: &GrassmannSpace) -> String {
    let mut out = String::from("graph grassmann {\n");
    for i in 0..g.len() {
        out.push_str(&format!("  {i};\n"));
    }
    for i in 0..g.len() {
        for j in g.adj[i].iter() {
            if j > i {
                out.push_str(&format!("  {i} -- {j};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// JSON export of a Grassmann space: canonical element forms plus the
/// adjacency matrix as row-major bitstrings.
#[derive(Debug, Serialize)]
pub struct GrassmannJson {
    pub k: i64,
    pub elements: Vec<GrassElementJson>,
    pub adjacency: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct GrassElementJson {
    pub points: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rref: Option<Vec<Vec<u8>>>,
}

pub fn grassmann_to_json(g: &GrassmannSpace) -> GrassmannJson {
    GrassmannJson {
        k: g.k,
        elements: g
            .elements
            .iter()
            .map(|e| GrassElementJson {
                points: e.points.to_vec(),
                rref: e.rref.as_ref().map(|r| r.rows.clone()),
            })
            .collect(),
        adjacency: (0..g.len())
            .map(|i| {
                (0..g.len())
                    .map(|j| if g.adj[i].contains(j) { '1' } else { '0' })
                    .collect()
            })
            .collect(),
    }
}
