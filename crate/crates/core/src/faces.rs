//! Bounded faces of the brick polyhedron of `SC(Q_ν, w_ν)` and the cone
//! feasibility test for marked trees.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::Root;
use crate::error::{Error, Result};
use crate::grid::{FerrersRegion, GridPoint};
use crate::linalg;
use crate::subword::{tree_facet, Facet, SubwordInstance};
use crate::trees::{InteriorFace, MarkedTree, TamariLattice};

/// Strict comparisons `x_i > x_j` and equalities `x_i = x_j` over the
/// coordinates `1..=vars`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ConstraintSystem {
    pub vars: usize,
    pub strict: Vec<(usize, usize)>,
    pub equal: Vec<(usize, usize)>,
}

impl ConstraintSystem {
    pub fn new(vars: usize) -> Self {
        ConstraintSystem { vars, strict: Vec::new(), equal: Vec::new() }
    }

    /// A witness with decreasing integer values along a topological order
    /// of the equality classes, or `None` when the system has no solution.
    pub fn solve(&self) -> Option<Vec<i64>> {
        let mut uf = UnionFind::new(self.vars);
        for &(i, j) in &self.equal {
            uf.union(i - 1, j - 1);
        }
        let class: Vec<usize> = (0..self.vars).map(|v| uf.find(v)).collect();
        let mut succ = vec![BTreeSet::new(); self.vars];
        let mut indeg = vec![0usize; self.vars];
        for &(i, j) in &self.strict {
            let (a, b) = (class[i - 1], class[j - 1]);
            if a == b {
                return None;
            }
            if succ[a].insert(b) {
                indeg[b] += 1;
            }
        }
        let roots: BTreeSet<usize> = class.iter().copied().collect();
        let mut queue: VecDeque<usize> = roots.iter().copied().filter(|&c| indeg[c] == 0).collect();
        let mut value = vec![0i64; self.vars];
        let mut next = roots.len() as i64;
        let mut placed = 0;
        while let Some(c) = queue.pop_front() {
            value[c] = next;
            next -= 1;
            placed += 1;
            for &d in &succ[c] {
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    queue.push_back(d);
                }
            }
        }
        (placed == roots.len()).then(|| class.iter().map(|&c| value[c]).collect())
    }

    pub fn is_satisfied_by(&self, x: &[i64]) -> bool {
        x.len() == self.vars
            && self.strict.iter().all(|&(i, j)| x[i - 1] > x[j - 1])
            && self.equal.iter().all(|&(i, j)| x[i - 1] == x[j - 1])
    }
}

impl fmt::Display for ConstraintSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .strict
            .iter()
            .map(|(i, j)| format!("x{i} > x{j}"))
            .chain(self.equal.iter().map(|(i, j)| format!("x{i} = x{j}")))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut r = v;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = v;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// `⟨x, β_t⟩ > 0` for unmarked nodes and `= 0` for marked ones, with
/// `β_t` the root at the node's word position.
pub fn constraint_system(region: &FerrersRegion, instance: &SubwordInstance, marked: &MarkedTree) -> ConstraintSystem {
    let facet = tree_facet(region, &marked.tree);
    let roots = instance.all_roots(&facet);
    let mut cs = ConstraintSystem::new(instance.dim());
    for &t in marked.tree.nodes() {
        let r = roots[region.index_of(t).expect("tree node lies in the region")];
        if marked.marks.contains(&t) {
            cs.equal.push((r.i.min(r.j), r.i.max(r.j)));
        } else {
            cs.strict.push((r.i, r.j));
        }
    }
    cs
}

pub fn feasible(cs: &ConstraintSystem) -> bool {
    cs.solve().is_some()
}

/// The face `B^I` for `I = T \ A`, described by its vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundedFace {
    pub interior_face: InteriorFace,
    /// Ids of all trees whose facet contains `I`, increasing.
    pub vertex_ids: Vec<usize>,
    pub vertices: Vec<Vec<i64>>,
}

impl BoundedFace {
    pub fn dim(&self) -> usize {
        self.interior_face.dim()
    }
}

/// The bounded part of the brick polyhedron: one face per interior face.
#[derive(Debug, Clone)]
pub struct BoundedComplex {
    instance: SubwordInstance,
    lattice: TamariLattice,
    facets: Vec<Facet>,
    bricks: Vec<Vec<i64>>,
    faces: Vec<BoundedFace>,
}

impl BoundedComplex {
    pub fn new(region: &FerrersRegion) -> Self {
        let instance = SubwordInstance::for_region(region);
        let lattice = TamariLattice::new(region);
        let facets: Vec<Facet> = lattice.trees().iter().map(|t| tree_facet(region, t)).collect();
        let bricks: Vec<Vec<i64>> = facets.iter().map(|f| instance.brick_vector(f)).collect();
        let faces = lattice
            .interior_faces(region)
            .into_iter()
            .map(|face| {
                let vertex_ids: Vec<usize> =
                    (0..facets.len()).filter(|&k| facets[k].is_superset_of(&face.positions)).collect();
                let vertices = vertex_ids.iter().map(|&k| bricks[k].clone()).collect();
                BoundedFace { interior_face: face, vertex_ids, vertices }
            })
            .collect();
        BoundedComplex { instance, lattice, facets, bricks, faces }
    }

    pub fn instance(&self) -> &SubwordInstance {
        &self.instance
    }

    pub fn lattice(&self) -> &TamariLattice {
        &self.lattice
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Brick vector of each tree, indexed by tree id.
    pub fn bricks(&self) -> &[Vec<i64>] {
        &self.bricks
    }

    pub fn faces(&self) -> &[BoundedFace] {
        &self.faces
    }

    pub fn faces_of_dim(&self, dim: usize) -> impl Iterator<Item = &BoundedFace> {
        self.faces.iter().filter(move |f| f.dim() == dim)
    }

    /// `face a ≤ face b` iff the interior face of `b` is contained in that
    /// of `a`.
    pub fn face_leq(&self, a: usize, b: usize) -> bool {
        let (pa, pb) = (&self.faces[a].interior_face.positions, &self.faces[b].interior_face.positions);
        pb.iter().all(|k| pa.binary_search(k).is_ok())
    }

    /// Cover pairs `(a, b)` with `a ⋖ b` in the face poset.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.faces.len();
        let up: Vec<Vec<usize>> =
            (0..k).map(|a| (0..k).filter(|&b| b != a && self.face_leq(a, b)).collect()).collect();
        let mut out = Vec::new();
        for (a, above) in up.iter().enumerate() {
            for &b in above {
                if !above.iter().any(|&c| c != b && up[c].contains(&b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Vertex pairs of the one-dimensional faces, each sorted, in sorted order.
    pub fn one_skeleton(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .faces_of_dim(1)
            .map(|f| {
                assert_eq!(f.vertex_ids.len(), 2, "an edge has two vertices");
                (f.vertex_ids[0], f.vertex_ids[1])
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Roots `r(T, a)` of the ascents marked in a face.
    pub fn face_roots(&self, region: &FerrersRegion, face: &InteriorFace) -> Vec<Root> {
        let roots = self.instance.all_roots(&self.facets[face.base]);
        face.ascents.iter().map(|&a| roots[region.index_of(a).expect("ascent lies in the region")]).collect()
    }
}

/// `(n+1, n, ..., 1)`.
pub fn default_eta(dim: usize) -> Vec<i64> {
    (1..=dim as i64).rev().collect()
}

/// The vertex tree minimizing `⟨η, b(J)⟩` over the face.
pub fn minimal_vertex(face: &BoundedFace, eta: &[i64]) -> Result<usize> {
    let value = |v: &[i64]| v.iter().zip(eta).map(|(a, b)| a * b).sum::<i64>();
    let mut best: Option<(i64, usize)> = None;
    let mut tie: Option<(usize, usize)> = None;
    for (&id, v) in face.vertex_ids.iter().zip(&face.vertices) {
        let val = value(v);
        match best {
            Some((b, other)) if val == b => tie = Some((other, id)),
            Some((b, _)) if val > b => {}
            _ => {
                best = Some((val, id));
                tie = None;
            }
        }
    }
    if let Some((a, b)) = tie {
        return Err(Error::FunctionalTie(a, b));
    }
    Ok(best.map(|(_, id)| id).expect("a face has at least one vertex"))
}

/// Every other vertex lies in `b(T) + cone R(T)`.
pub fn local_cone_check(complex: &BoundedComplex, tree: usize) -> bool {
    let facet = &complex.facets[tree];
    let dim = complex.instance.dim();
    let gens: Vec<Vec<i64>> = complex.instance.root_configuration(facet).iter().map(|r| r.to_vector(dim)).collect();
    let base = &complex.bricks[tree];
    complex.bricks.iter().enumerate().filter(|&(k, _)| k != tree).all(|(_, b)| {
        let diff: Vec<i64> = b.iter().zip(base).map(|(x, y)| x - y).collect();
        linalg::cone_contains(&gens, &diff)
    })
}

/// Whether the roots at the chosen nodes are linearly independent.
pub fn independence_check(
    region: &FerrersRegion,
    instance: &SubwordInstance,
    facet: &Facet,
    nodes: &[GridPoint],
) -> bool {
    let roots = instance.all_roots(facet);
    let vectors: Vec<Vec<i64>> = nodes
        .iter()
        .map(|&a| roots[region.index_of(a).expect("node lies in the region")].to_vector(instance.dim()))
        .collect();
    linalg::rank(&vectors) == nodes.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{min_tree, NuTree};

    fn region(s: &str) -> FerrersRegion {
        FerrersRegion::new(&s.parse().unwrap())
    }

    fn pts(list: &[(usize, usize)]) -> Vec<GridPoint> {
        list.iter().map(|&(x, y)| GridPoint::new(x, y)).collect()
    }

    fn marked(f: &FerrersRegion, nodes: &[(usize, usize)], marks: &[(usize, usize)]) -> MarkedTree {
        MarkedTree::new(NuTree::from_points(f, pts(nodes)).unwrap(), pts(marks)).unwrap()
    }

    #[test]
    fn pentagon_system_is_feasible() {
        let f = region("ENEEN");
        let inst = SubwordInstance::for_region(&f);
        let tm = MarkedTree::new(min_tree(&f), pts(&[(0, 1), (0, 2)])).unwrap();
        let cs = constraint_system(&f, &inst, &tm);
        assert_eq!(cs.strict, vec![(1, 2), (4, 5), (3, 5), (5, 6)]);
        assert_eq!(cs.equal, vec![(2, 3), (3, 4)]);
        let x = cs.solve().unwrap();
        assert!(cs.is_satisfied_by(&x));
    }

    #[test]
    fn infeasible_examples() {
        let f = region("ENEEN");
        let inst = SubwordInstance::for_region(&f);
        let m3 = MarkedTree::new(min_tree(&f), pts(&[(1, 2), (2, 1)])).unwrap();
        assert!(!feasible(&constraint_system(&f, &inst, &m3)));
        let m4 = marked(&f, &[(0, 0), (1, 0), (1, 2), (2, 0), (2, 1), (3, 1)], &[(1, 0), (1, 2)]);
        assert!(!feasible(&constraint_system(&f, &inst, &m4)));
    }

    #[test]
    fn solver_basics() {
        let mut cs = ConstraintSystem::new(3);
        assert_eq!(cs.solve(), Some(vec![3, 2, 1]));
        cs.strict = vec![(3, 1), (1, 2)];
        let x = cs.solve().unwrap();
        assert!(cs.is_satisfied_by(&x));
        cs.equal = vec![(2, 3)];
        assert!(cs.solve().is_none());
        let cyc = ConstraintSystem { vars: 2, strict: vec![(1, 2), (2, 1)], equal: vec![] };
        assert!(!feasible(&cyc));
        assert_eq!(cyc.to_string(), "x1 > x2, x2 > x1");
    }

    #[test]
    fn eneen_complex() {
        let f = region("ENEEN");
        let bc = BoundedComplex::new(&f);
        assert_eq!(bc.faces_of_dim(0).count(), 7);
        let two: Vec<usize> = bc.faces_of_dim(2).map(|face| face.vertex_ids.len()).collect();
        let mut sorted = two.clone();
        sorted.sort();
        assert_eq!(sorted, vec![4, 5]);
        let mut hasse: Vec<(usize, usize)> =
            bc.lattice().edges().iter().map(|e| (e.lower.min(e.upper), e.lower.max(e.upper))).collect();
        hasse.sort();
        assert_eq!(bc.one_skeleton(), hasse);
        for (a, b) in bc.covers() {
            assert_eq!(bc.faces()[b].dim(), bc.faces()[a].dim() + 1);
        }
    }

    #[test]
    fn minimal_vertices_are_bases() {
        let f = region("ENEEN");
        let bc = BoundedComplex::new(&f);
        let eta = default_eta(6);
        assert_eq!(eta, vec![6, 5, 4, 3, 2, 1]);
        for face in bc.faces() {
            assert_eq!(minimal_vertex(face, &eta).unwrap(), face.interior_face.base);
        }
        let tie = BoundedFace {
            interior_face: bc.faces()[0].interior_face.clone(),
            vertex_ids: vec![0, 1],
            vertices: vec![vec![1, 0], vec![0, 1]],
        };
        assert_eq!(minimal_vertex(&tie, &[1, 1]), Err(Error::FunctionalTie(0, 1)));
    }

    #[test]
    fn local_cones_and_independence() {
        let f = region("ENEEN");
        let bc = BoundedComplex::new(&f);
        for t in 0..bc.lattice().len() {
            assert!(local_cone_check(&bc, t));
        }
        let t0 = bc.lattice().min_id();
        let asc = bc.lattice().tree(t0).ascents();
        assert!(independence_check(&f, bc.instance(), &bc.facets()[t0], &asc));
        assert!(independence_check(&f, bc.instance(), &bc.facets()[t0], &[]));
    }
}
