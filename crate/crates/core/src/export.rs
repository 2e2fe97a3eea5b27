//! Realization bundles and their mesh and graph renderings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::coxeter::Root;
use crate::faces::BoundedComplex;
use crate::grid::{FerrersRegion, GridPoint};
use crate::projection::{parse_staircase, projected};
use crate::trees::TamariLattice;

pub const SCHEMA: &str = "nubrick.realization/1";

/// Conventions that fix every number in a bundle.
pub const CONVENTIONS: &str = "origin top-left, x east, y south; letter s_(x+y+1); \
reading columns left to right, bottom to top; reflections act on the left; \
pipes enter on the left edge top to bottom; tree ids in sorted node order";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool_version: String,
    pub conventions: String,
    pub fingerprint: String,
}

impl Metadata {
    pub fn current() -> Self {
        let digest = Sha256::digest(CONVENTIONS.as_bytes());
        let fingerprint = digest.iter().take(8).map(|b| format!("{b:02x}")).collect();
        Metadata {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            conventions: CONVENTIONS.to_string(),
            fingerprint,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRecord {
    pub id: usize,
    pub nodes: Vec<GridPoint>,
    pub positions: Vec<usize>,
    pub brick: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub lower: usize,
    pub upper: usize,
    /// Always `"up"`: from the smaller tree to the larger one.
    pub direction: String,
    pub node: GridPoint,
    pub replacement: GridPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRecord {
    pub base: usize,
    pub ascents: Vec<GridPoint>,
    pub vertices: Vec<usize>,
    pub dim: usize,
    /// Cyclic vertex order of two-dimensional faces.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polygon: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationBundle {
    pub schema: String,
    pub path: String,
    pub rank: usize,
    /// `false` when the path has no projection and vertices are raw brick
    /// vectors.
    pub projected: bool,
    pub trees: Vec<TreeRecord>,
    pub vertices: BTreeMap<usize, Vec<i64>>,
    pub edges: Vec<EdgeRecord>,
    pub faces: Vec<FaceRecord>,
    /// Bruhat-cone generators of the word without its `s_1` and `s_n` letters.
    pub cone: Vec<Root>,
    /// Bruhat-cone generators of the full word.
    pub cone_full_word: Vec<Root>,
    pub metadata: Metadata,
}

impl RealizationBundle {
    pub fn coordinate_dim(&self) -> usize {
        self.vertices.values().next().map_or(0, Vec::len)
    }
}

/// Vertices are `y(T)` for staircase paths and brick vectors otherwise.
pub fn export_realization(region: &FerrersRegion) -> RealizationBundle {
    let complex = BoundedComplex::new(region);
    let lattice = complex.lattice();
    let spec = parse_staircase(region.path()).ok();
    let coords: Vec<Vec<i64>> = match &spec {
        Some(spec) => {
            let proj: Vec<Vec<i64>> = lattice
                .trees()
                .iter()
                .map(|t| projected(region, spec, t).expect("staircase brick vectors have constant ends"))
                .collect();
            let base = proj[lattice.min_id()].clone();
            proj.iter().map(|p| p.iter().zip(&base).map(|(a, b)| a - b).collect()).collect()
        }
        None => complex.bricks().to_vec(),
    };
    let skeleton: BTreeSet<(usize, usize)> = complex.one_skeleton().into_iter().collect();
    let trees = lattice
        .trees()
        .iter()
        .enumerate()
        .map(|(id, t)| TreeRecord {
            id,
            nodes: t.nodes().to_vec(),
            positions: complex.facets()[id].positions().to_vec(),
            brick: complex.bricks()[id].clone(),
        })
        .collect();
    let edges = lattice
        .edges()
        .iter()
        .map(|e| EdgeRecord {
            lower: e.lower,
            upper: e.upper,
            direction: "up".to_string(),
            node: e.node,
            replacement: e.replacement,
        })
        .collect();
    let faces = complex
        .faces()
        .iter()
        .map(|f| FaceRecord {
            base: f.interior_face.base,
            ascents: f.interior_face.ascents.clone(),
            vertices: f.vertex_ids.clone(),
            dim: f.dim(),
            polygon: (f.dim() == 2).then(|| cyclic_order(&f.vertex_ids, &skeleton)).flatten(),
        })
        .collect();
    RealizationBundle {
        schema: SCHEMA.to_string(),
        path: region.path().to_string(),
        rank: region.rank(),
        projected: spec.is_some(),
        trees,
        vertices: coords.into_iter().enumerate().collect(),
        edges,
        faces,
        cone: complex.instance().without_extreme_letters().bruhat_cone(),
        cone_full_word: complex.instance().bruhat_cone(),
        metadata: Metadata::current(),
    }
}

/// Walks the polygon bounded by the skeleton edges among `vertices`,
/// starting at the smallest id towards its smaller neighbour.
fn cyclic_order(vertices: &[usize], skeleton: &BTreeSet<(usize, usize)>) -> Option<Vec<usize>> {
    let neighbours = |v: usize| -> Vec<usize> {
        vertices.iter().copied().filter(|&u| skeleton.contains(&(u.min(v), u.max(v)))).collect()
    };
    let start = *vertices.first()?;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = *neighbours(start).iter().min()?;
    while cur != start {
        order.push(cur);
        let next = neighbours(cur).into_iter().find(|&u| u != prev)?;
        prev = cur;
        cur = next;
        if order.len() > vertices.len() {
            return None;
        }
    }
    (order.len() == vertices.len()).then_some(order)
}

/// OFF mesh of the two-dimensional faces, fan-triangulated. `None` when
/// the coordinates live in more than three dimensions.
pub fn to_off(bundle: &RealizationBundle) -> Option<String> {
    if bundle.coordinate_dim() > 3 {
        return None;
    }
    let triangles: Vec<[usize; 3]> = bundle
        .faces
        .iter()
        .filter_map(|f| f.polygon.as_ref())
        .flat_map(|poly| (1..poly.len() - 1).map(move |k| [poly[0], poly[k], poly[k + 1]]))
        .collect();
    let mut out = String::from("OFF\n");
    writeln!(out, "{} {} 0", bundle.vertices.len(), triangles.len()).unwrap();
    for coords in bundle.vertices.values() {
        let padded: Vec<String> = (0..3).map(|k| coords.get(k).copied().unwrap_or(0).to_string()).collect();
        writeln!(out, "{}", padded.join(" ")).unwrap();
    }
    for [a, b, c] in triangles {
        writeln!(out, "3 {a} {b} {c}").unwrap();
    }
    Some(out)
}

/// Hasse diagram in DOT syntax, nodes and edges in id order.
pub fn lattice_dot(lattice: &TamariLattice) -> String {
    let mut out = String::from("digraph tamari {\n  rankdir=BT;\n");
    for (id, t) in lattice.trees().iter().enumerate() {
        writeln!(out, "  T{id} [label=\"T{id} {t}\"];").unwrap();
    }
    let mut edges: Vec<(usize, usize)> = lattice.edges().iter().map(|e| (e.lower, e.upper)).collect();
    edges.sort_unstable();
    for (a, b) in edges {
        writeln!(out, "  T{a} -> T{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
