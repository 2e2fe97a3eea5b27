//! ν-trees, rotations and the ν-Tamari lattice.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{FerrersRegion, GridPoint};

/// A maximal set of pairwise ν-compatible points, sorted by `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NuTree {
    nodes: Vec<GridPoint>,
}

impl NuTree {
    /// Validates compatibility and maximality.
    pub fn from_points(region: &FerrersRegion, points: impl IntoIterator<Item = GridPoint>) -> Result<Self> {
        let mut nodes: Vec<GridPoint> = points.into_iter().collect();
        nodes.sort();
        nodes.dedup();
        for &p in &nodes {
            if !region.contains(p) {
                return Err(Error::PointOutsideRegion(p));
            }
        }
        if !is_nu_tree(region, &nodes) {
            return Err(Error::NotATree);
        }
        Ok(NuTree { nodes })
    }

    pub(crate) fn from_sorted_unchecked(nodes: Vec<GridPoint>) -> Self {
        NuTree { nodes }
    }

    pub fn nodes(&self) -> &[GridPoint] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        self.nodes.binary_search(&p).is_ok()
    }

    pub fn nearest_north(&self, q: GridPoint) -> Option<GridPoint> {
        self.nodes.iter().filter(|t| t.x == q.x && t.y < q.y).max_by_key(|t| t.y).copied()
    }

    pub fn nearest_south(&self, q: GridPoint) -> Option<GridPoint> {
        self.nodes.iter().filter(|t| t.x == q.x && t.y > q.y).min_by_key(|t| t.y).copied()
    }

    pub fn nearest_east(&self, q: GridPoint) -> Option<GridPoint> {
        self.nodes.iter().filter(|t| t.y == q.y && t.x > q.x).min_by_key(|t| t.x).copied()
    }

    pub fn nearest_west(&self, q: GridPoint) -> Option<GridPoint> {
        self.nodes.iter().filter(|t| t.y == q.y && t.x < q.x).max_by_key(|t| t.x).copied()
    }

    /// The next node to the north or, failing that, to the west.
    pub fn parent(&self, q: GridPoint) -> Option<GridPoint> {
        self.nearest_north(q).or_else(|| self.nearest_west(q))
    }

    /// Nodes with a node due north and a node due east.
    pub fn ascents(&self) -> Vec<GridPoint> {
        self.nodes
            .iter()
            .copied()
            .filter(|&q| q != GridPoint::ROOT && self.nearest_north(q).is_some() && self.nearest_east(q).is_some())
            .collect()
    }

    /// Nodes admitting a left rotation: a node due west and one due south.
    pub fn descents(&self) -> Vec<GridPoint> {
        self.nodes
            .iter()
            .copied()
            .filter(|&q| self.nearest_west(q).is_some() && self.nearest_south(q).is_some())
            .collect()
    }

    /// Right rotation at an ascent `q`. Returns the new tree and the node
    /// `q'` that replaced `q`.
    pub fn rotate(&self, q: GridPoint) -> Result<(NuTree, GridPoint)> {
        if !self.contains(q) || q == GridPoint::ROOT {
            return Err(Error::NotAnAscent(q));
        }
        let (Some(p), Some(r)) = (self.nearest_north(q), self.nearest_east(q)) else {
            return Err(Error::NotAnAscent(q));
        };
        let swapped = GridPoint::new(r.x, p.y);
        Ok((self.exchange(q, swapped), swapped))
    }

    /// Left rotation at a descent `q'`, the inverse of [`NuTree::rotate`].
    pub fn rotate_down(&self, q: GridPoint) -> Result<(NuTree, GridPoint)> {
        let (Some(p), Some(r)) = (self.nearest_west(q), self.nearest_south(q)) else {
            return Err(Error::NotAnAscent(q));
        };
        let swapped = GridPoint::new(p.x, r.y);
        Ok((self.exchange(q, swapped), swapped))
    }

    fn exchange(&self, out: GridPoint, into: GridPoint) -> NuTree {
        let mut nodes: Vec<GridPoint> = self.nodes.iter().copied().filter(|&t| t != out).collect();
        let at = nodes.binary_search(&into).unwrap_err();
        nodes.insert(at, into);
        NuTree { nodes }
    }
}

impl fmt::Display for NuTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.nodes.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

pub fn is_nu_tree(region: &FerrersRegion, nodes: &[GridPoint]) -> bool {
    for (a, &p) in nodes.iter().enumerate() {
        if nodes[a + 1..].iter().any(|&q| region.incompatible_unchecked(p, q)) {
            return false;
        }
    }
    region
        .points()
        .iter()
        .all(|&p| nodes.contains(&p) || nodes.iter().any(|&q| region.incompatible_unchecked(p, q)))
}

/// A tree with a subset of its nodes marked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedTree {
    pub tree: NuTree,
    pub marks: Vec<GridPoint>,
}

impl MarkedTree {
    pub fn new(tree: NuTree, marks: impl IntoIterator<Item = GridPoint>) -> Result<Self> {
        let mut marks: Vec<GridPoint> = marks.into_iter().collect();
        marks.sort();
        marks.dedup();
        if let Some(&bad) = marks.iter().find(|&&m| !tree.contains(m)) {
            return Err(Error::PointOutsideRegion(bad));
        }
        Ok(MarkedTree { tree, marks })
    }

    pub fn unmarked(tree: NuTree) -> Self {
        MarkedTree { tree, marks: Vec::new() }
    }

    pub fn marks_are_ascents(&self) -> bool {
        let asc = self.tree.ascents();
        self.marks.iter().all(|m| asc.contains(m))
    }
}

/// The interior face `I = T \ A` for a tree `T` and ascent subset `A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InteriorFace {
    pub base: usize,
    pub ascents: Vec<GridPoint>,
    /// 1-based word positions of `T \ A`, increasing.
    pub positions: Vec<usize>,
}

impl InteriorFace {
    /// Dimension of the corresponding associahedron face.
    pub fn dim(&self) -> usize {
        self.ascents.len()
    }
}

/// The minimal element of the ν-Tamari lattice.
pub fn min_tree(region: &FerrersRegion) -> NuTree {
    // any maximal compatible set, pushed down until no left rotation applies
    let mut nodes: Vec<GridPoint> = Vec::new();
    for &p in region.reading() {
        if nodes.iter().all(|&q| !region.incompatible_unchecked(p, q)) {
            nodes.push(p);
        }
    }
    nodes.sort();
    let mut tree = NuTree::from_sorted_unchecked(nodes);
    while let Some(&q) = tree.descents().first() {
        tree = tree.rotate_down(q).expect("descent admits a left rotation").0;
    }
    tree
}

/// One right rotation in the Hasse diagram: `lower --node--> upper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rotation {
    pub lower: usize,
    pub upper: usize,
    /// The ascent of the lower tree that was rotated.
    pub node: GridPoint,
    /// The node that replaced it in the upper tree.
    pub replacement: GridPoint,
}

/// All ν-trees in canonical order with the rotation edges between them.
#[derive(Debug, Clone)]
pub struct TamariLattice {
    trees: Vec<NuTree>,
    index: HashMap<NuTree, usize>,
    edges: Vec<Rotation>,
    min: usize,
}

impl TamariLattice {
    pub fn new(region: &FerrersRegion) -> Self {
        let trees = enumerate_trees(region);
        let index: HashMap<NuTree, usize> = trees.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        let mut edges = Vec::new();
        for (k, t) in trees.iter().enumerate() {
            for q in t.ascents() {
                let (up, replacement) = t.rotate(q).expect("ascent");
                edges.push(Rotation { lower: k, upper: index[&up], node: q, replacement });
            }
        }
        let min = index[&min_tree(region)];
        TamariLattice { trees, index, edges, min }
    }

    pub fn trees(&self) -> &[NuTree] {
        &self.trees
    }

    pub fn tree(&self, id: usize) -> &NuTree {
        &self.trees[id]
    }

    pub fn id_of(&self, tree: &NuTree) -> Option<usize> {
        self.index.get(tree).copied()
    }

    pub fn edges(&self) -> &[Rotation] {
        &self.edges
    }

    pub fn min_id(&self) -> usize {
        self.min
    }

    /// Trees without ascents; a lattice has exactly one.
    pub fn maximal_ids(&self) -> Vec<usize> {
        (0..self.trees.len()).filter(|&k| self.trees[k].ascents().is_empty()).collect()
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// `up[a][b]` iff `a ≤ b` in the rotation order.
    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        let k = self.trees.len();
        let mut up = vec![vec![false; k]; k];
        let mut succ = vec![Vec::new(); k];
        for e in &self.edges {
            succ[e.lower].push(e.upper);
        }
        for (start, row) in up.iter_mut().enumerate() {
            let mut queue = VecDeque::from([start]);
            row[start] = true;
            while let Some(a) = queue.pop_front() {
                for &b in &succ[a] {
                    if !row[b] {
                        row[b] = true;
                        queue.push_back(b);
                    }
                }
            }
        }
        up
    }

    /// Checks that every pair has a unique least upper bound and greatest
    /// lower bound in the transitive closure.
    pub fn is_lattice(&self) -> bool {
        let le = self.order_matrix();
        let k = self.trees.len();
        let bound_unique = |a: usize, b: usize, upper: bool| {
            let rel = |x: usize, y: usize| if upper { le[x][y] } else { le[y][x] };
            let bounds: Vec<usize> = (0..k).filter(|&c| rel(a, c) && rel(b, c)).collect();
            bounds.iter().filter(|&&c| bounds.iter().all(|&d| rel(c, d))).count() == 1
        };
        (0..k).all(|a| (a..k).all(|b| bound_unique(a, b, true) && bound_unique(a, b, false)))
    }

    /// All pairs `(T, A)` with `A` a subset of the ascents of `T`, ordered by
    /// tree id and then by subset bitmask.
    pub fn interior_faces(&self, region: &FerrersRegion) -> Vec<InteriorFace> {
        let mut faces = Vec::new();
        for (id, t) in self.trees.iter().enumerate() {
            let asc = t.ascents();
            for mask in 0u64..(1u64 << asc.len()) {
                let chosen: Vec<GridPoint> =
                    asc.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect();
                let mut positions: Vec<usize> = t
                    .nodes()
                    .iter()
                    .filter(|p| !chosen.contains(p))
                    .map(|&p| region.position_of(p).expect("tree node lies in the region"))
                    .collect();
                positions.sort_unstable();
                faces.push(InteriorFace { base: id, ascents: chosen, positions });
            }
        }
        faces
    }
}

/// Breadth-first search over right rotations from the minimal tree, returned
/// in canonical order.
pub fn enumerate_trees(region: &FerrersRegion) -> Vec<NuTree> {
    let start = min_tree(region);
    let mut seen = std::collections::HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(t) = queue.pop_front() {
        for q in t.ascents() {
            let (up, _) = t.rotate(q).expect("ascent");
            if seen.insert(up.clone()) {
                queue.push_back(up);
            }
        }
        out.push(t);
    }
    out.sort();
    out
}

pub fn tamari_hasse(region: &FerrersRegion) -> TamariLattice {
    TamariLattice::new(region)
}

pub fn interior_faces(region: &FerrersRegion) -> Vec<InteriorFace> {
    TamariLattice::new(region).interior_faces(region)
}
