//! Cross-module invariant suite.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::faces::{
    constraint_system, default_eta, independence_check, local_cone_check, minimal_vertex, BoundedComplex,
};
use crate::grid::{FerrersRegion, LatticePath};
use crate::linalg;
use crate::oracle::maximal_compatible_sets;
use crate::pipedream::PipeDream;
use crate::projection::{area_coords, parse_staircase, predicted_y_change, rotation_area, y_coords_from, projected};
use crate::subword::w_nu;
use crate::trees::{enumerate_trees, MarkedTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Outcome {
    fn from_result(name: &str, result: std::result::Result<String, String>) -> Self {
        match result {
            Ok(detail) => Outcome { name: name.to_string(), status: Status::Pass, detail },
            Err(detail) => Outcome { name: name.to_string(), status: Status::Fail, detail },
        }
    }

    fn skip(name: &str, detail: &str) -> Self {
        Outcome { name: name.to_string(), status: Status::Skip, detail: detail.to_string() }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub path: String,
    pub outcomes: Vec<Outcome>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(Outcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, failure: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(failure())
    }
}

/// Enumeration, brick vectors, pipe dreams and flips.
pub fn structure_checks(region: &FerrersRegion, complex: &BoundedComplex) -> Vec<Outcome> {
    let lattice = complex.lattice();
    let instance = complex.instance();
    let w = w_nu(region);
    let mut out = Vec::new();

    out.push(Outcome::from_result("tree-enumeration-oracle", (|| -> Check {
        let oracle = maximal_compatible_sets(region);
        let flips: Vec<Vec<_>> = enumerate_trees(region).iter().map(|t| t.nodes().to_vec()).collect();
        ensure(oracle == flips, || format!("flip search found {} trees, brute force {}", flips.len(), oracle.len()))?;
        Ok(format!("{} trees", flips.len()))
    })()));

    out.push(Outcome::from_result("tree-size", (|| -> Check {
        let want = region.points().len() - w.length();
        for t in lattice.trees() {
            ensure(t.len() == want, || format!("tree {t} has {} nodes, want {want}", t.len()))?;
        }
        Ok(format!("{want} nodes each"))
    })()));

    out.push(Outcome::from_result("brick-fast-equals-definition", (|| -> Check {
        for (id, t) in lattice.trees().iter().enumerate() {
            let fast = PipeDream::new(region, t).brick_vector(region);
            let def = &complex.bricks()[id];
            ensure(&fast == def, || format!("T{id}: pipes {fast:?} vs definition {def:?}"))?;
        }
        Ok(format!("{} trees", lattice.len()))
    })()));

    out.push(Outcome::from_result("exit-permutation-constant", (|| -> Check {
        for (id, t) in lattice.trees().iter().enumerate() {
            let e = PipeDream::new(region, t).exit_permutation();
            ensure(e == w, || format!("T{id} exits as {e}, w = {w}"))?;
        }
        Ok(format!("w = {w}"))
    })()));

    out.push(Outcome::from_result("complements-reduced", (|| -> Check {
        for (id, f) in complex.facets().iter().enumerate() {
            ensure(instance.is_facet(f), || format!("T{id} complement is not a reduced word for w"))?;
        }
        Ok(format!("length {}", w.length()))
    })()));

    out.push(Outcome::from_result("pipe-turns-at-most-two", (|| -> Check {
        for (id, t) in lattice.trees().iter().enumerate() {
            let turns = PipeDream::new(region, t).turn_counts();
            ensure(turns.iter().all(|&c| c <= 2), || format!("T{id} turn counts {turns:?}"))?;
        }
        Ok(String::from("ok"))
    })()));

    out.push(Outcome::from_result("rotation-flip-agreement", (|| -> Check {
        for e in lattice.edges() {
            let lo = &complex.facets()[e.lower];
            let k = region.position_of(e.node).expect("node in region");
            let (hi, kp) = instance.flip(lo, k).map_err(|err| format!("T{} at {}: {err}", e.lower, e.node))?;
            ensure(hi == complex.facets()[e.upper], || format!("flip of T{} at {} misses T{}", e.lower, k, e.upper))?;
            ensure(region.point_at(kp) == Ok(e.replacement), || format!("partner {kp} is not {}", e.replacement))?;
            let r = instance.root_function(lo, k).expect("valid position");
            ensure(r.is_positive(), || format!("T{} at {}: root {r} is negative", e.lower, e.node))?;
            let (back, _) = lattice.tree(e.upper).rotate_down(e.replacement).map_err(|err| err.to_string())?;
            ensure(&back == lattice.tree(e.lower), || format!("left rotation does not invert T{}", e.lower))?;
        }
        Ok(format!("{} edges", lattice.edges().len()))
    })()));

    out.push(Outcome::from_result("brick-rotation-law", (|| -> Check {
        for e in lattice.edges() {
            let area = rotation_area(lattice.tree(e.lower), e.node).map_err(|err| err.to_string())?;
            let root = instance
                .root_function(&complex.facets()[e.lower], region.position_of(e.node).expect("node in region"))
                .expect("valid position");
            let (lo, hi) = (&complex.bricks()[e.lower], &complex.bricks()[e.upper]);
            let mut want = lo.clone();
            want[root.i - 1] += area;
            want[root.j - 1] -= area;
            ensure(&want == hi, || format!("T{} -> T{}: got {hi:?}, want {want:?}", e.lower, e.upper))?;
        }
        Ok(String::from("ok"))
    })()));

    out
}

/// Feasibility, dimensions, poset structure and local cones.
pub fn face_checks(region: &FerrersRegion, complex: &BoundedComplex) -> Vec<Outcome> {
    let lattice = complex.lattice();
    let instance = complex.instance();
    let faces = complex.faces();
    let mut out = Vec::new();

    out.push(Outcome::from_result("feasible-ascent-subsets", (|| -> Check {
        for face in faces {
            let f = &face.interior_face;
            let marked = MarkedTree::new(lattice.tree(f.base).clone(), f.ascents.iter().copied())
                .map_err(|e| e.to_string())?;
            let cs = constraint_system(region, instance, &marked);
            let witness = cs.solve().ok_or_else(|| format!("T{} with marks {:?} is infeasible", f.base, f.ascents))?;
            ensure(cs.is_satisfied_by(&witness), || format!("witness {witness:?} fails {cs}"))?;
        }
        Ok(format!("{} marked trees", faces.len()))
    })()));

    out.push(Outcome::from_result("unique-representation", (|| -> Check {
        let mut seen: Vec<&Vec<usize>> = faces.iter().map(|f| &f.interior_face.positions).collect();
        seen.sort();
        let before = seen.len();
        seen.dedup();
        ensure(seen.len() == before, || format!("{} repeated interior faces", before - seen.len()))?;
        Ok(format!("{before} interior faces"))
    })()));

    out.push(Outcome::from_result("dimension-law", (|| -> Check {
        for face in faces {
            let r = linalg::affine_rank(&face.vertices).unwrap_or(0);
            ensure(r == face.dim(), || format!("face at T{} has affine rank {r}, |A| = {}", face.interior_face.base, face.dim()))?;
        }
        Ok(format!("max dimension {}", faces.iter().map(|f| f.dim()).max().unwrap_or(0)))
    })()));

    out.push(Outcome::from_result("vertex-count-law", (|| -> Check {
        for face in faces {
            let n = face.vertex_ids.len();
            let ok = match face.dim() {
                0 => n == 1 && face.vertex_ids[0] == face.interior_face.base,
                1 => n == 2,
                d => n > d,
            };
            ensure(ok, || format!("face at T{} of dim {} has {n} vertices", face.interior_face.base, face.dim()))?;
        }
        Ok(String::from("ok"))
    })()));

    out.push(Outcome::from_result("root-independence", (|| -> Check {
        for face in faces {
            let f = &face.interior_face;
            ensure(independence_check(region, instance, &complex.facets()[f.base], &f.ascents), || {
                format!("roots at {:?} in T{} are dependent", f.ascents, f.base)
            })?;
        }
        Ok(String::from("ok"))
    })()));

    out.push(Outcome::from_result("anti-isomorphism", (|| -> Check {
        let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
        for (x, fx) in faces.iter().enumerate() {
            for (y, fy) in faces.iter().enumerate() {
                let contained = subset(&fx.interior_face.positions, &fy.interior_face.positions);
                let reversed = subset(&fy.vertex_ids, &fx.vertex_ids);
                ensure(contained == reversed, || format!("faces {x} and {y} break order reversal"))?;
                if x < y {
                    ensure(fx.vertex_ids != fy.vertex_ids, || format!("faces {x} and {y} share a vertex set"))?;
                }
            }
        }
        Ok(format!("{} faces", faces.len()))
    })()));

    out.push(Outcome::from_result("one-skeleton-is-hasse", (|| -> Check {
        let mut hasse: Vec<(usize, usize)> =
            lattice.edges().iter().map(|e| (e.lower.min(e.upper), e.lower.max(e.upper))).collect();
        hasse.sort_unstable();
        let skeleton = complex.one_skeleton();
        ensure(skeleton == hasse, || format!("{} skeleton edges vs {} rotations", skeleton.len(), hasse.len()))?;
        Ok(format!("{} edges", hasse.len()))
    })()));

    out.push(Outcome::from_result("face-covers-rank-one", (|| -> Check {
        for (a, b) in complex.covers() {
            ensure(faces[b].dim() == faces[a].dim() + 1, || format!("cover {a} < {b} skips a dimension"))?;
        }
        Ok(String::from("ok"))
    })()));

    out.push(Outcome::from_result("minimal-vertex-is-base", (|| -> Check {
        let eta = default_eta(instance.dim());
        for face in faces {
            let m = minimal_vertex(face, &eta).map_err(|e| e.to_string())?;
            ensure(m == face.interior_face.base, || format!("face based at T{} minimizes at T{m}", face.interior_face.base))?;
        }
        Ok(String::from("ok"))
    })()));

    out.push(Outcome::from_result("local-cones", (|| -> Check {
        for t in 0..lattice.len() {
            ensure(local_cone_check(complex, t), || format!("T{t}: some vertex leaves b(T) + cone R(T)"))?;
        }
        Ok(String::from("ok"))
    })()));

    out.push(Outcome::from_result("bruhat-cone-in-vertex-cones", (|| -> Check {
        let cone = instance.bruhat_cone();
        let dim = instance.dim();
        for (id, f) in complex.facets().iter().enumerate() {
            let arcs: Vec<(usize, usize)> = instance.root_configuration(f).iter().map(|r| (r.i, r.j)).collect();
            for beta in &cone {
                ensure(linalg::root_cone_contains(&arcs, &beta.to_vector(dim)), || format!("{beta} not in cone R(T{id})"))?;
            }
        }
        Ok(format!("{} generators", cone.len()))
    })()));

    out
}

/// Projection identities; skipped for paths outside the staircase family.
pub fn projection_checks(region: &FerrersRegion, complex: &BoundedComplex) -> Vec<Outcome> {
    const NAMES: [&str; 5] =
        ["y-equals-area", "y-translation", "flip-y-law", "projection-dimension", "face-projection-rank"];
    let spec = match parse_staircase(region.path()) {
        Ok(s) => s,
        Err(e) => return NAMES.iter().map(|n| Outcome::skip(n, &e.to_string())).collect(),
    };
    let lattice = complex.lattice();
    let instance = complex.instance();
    let base = match projected(region, &spec, lattice.tree(lattice.min_id())) {
        Ok(b) => b,
        Err(e) => return NAMES.iter().map(|n| Outcome::from_result(n, Err(e.to_string()))).collect(),
    };
    let ys: std::result::Result<Vec<Vec<i64>>, String> = lattice
        .trees()
        .iter()
        .map(|t| y_coords_from(region, &spec, t, &base).map_err(|e| e.to_string()))
        .collect();
    let ys = match ys {
        Ok(ys) => ys,
        Err(e) => return NAMES.iter().map(|n| Outcome::from_result(n, Err(e.clone()))).collect(),
    };
    let mut out = Vec::new();

    out.push(Outcome::from_result(NAMES[0], (|| -> Check {
        for (id, t) in lattice.trees().iter().enumerate() {
            let area = area_coords(t, spec.n()).map_err(|e| e.to_string())?;
            ensure(area == ys[id], || format!("T{id}: y = {:?}, area = {area:?}", ys[id]))?;
        }
        Ok(format!("{} trees", ys.len()))
    })()));

    out.push(Outcome::from_result(NAMES[1], (|| -> Check {
        ensure(ys[lattice.min_id()].iter().all(|&v| v == 0), || String::from("y(T_0) is not zero"))?;
        for (id, y) in ys.iter().enumerate() {
            ensure(y.iter().all(|&v| v >= 0), || format!("T{id}: y = {y:?} has a negative entry"))?;
        }
        Ok(String::from("ok"))
    })()));

    out.push(Outcome::from_result(NAMES[2], (|| -> Check {
        for e in lattice.edges() {
            let area = rotation_area(lattice.tree(e.lower), e.node).map_err(|err| err.to_string())?;
            let root = instance
                .root_function(&complex.facets()[e.lower], region.position_of(e.node).expect("node in region"))
                .expect("valid position");
            let want = predicted_y_change(&spec, root, area)
                .ok_or_else(|| format!("root {root} touches a dropped coordinate"))?;
            let got: Vec<i64> = ys[e.upper].iter().zip(&ys[e.lower]).map(|(a, b)| a - b).collect();
            ensure(got == want, || format!("T{} -> T{}: change {got:?}, want {want:?}", e.lower, e.upper))?;
        }
        Ok(format!("{} edges", lattice.edges().len()))
    })()));

    out.push(Outcome::from_result(NAMES[3], (|| -> Check {
        let want = spec.n() - 1;
        let r = linalg::affine_rank(&ys).unwrap_or(0);
        ensure(r == want, || format!("affine rank {r}, want {want}"))?;
        let max_asc = lattice.trees().iter().map(|t| t.ascents().len()).max().unwrap_or(0);
        ensure(max_asc == want, || format!("max ascents {max_asc}, want {want}"))?;
        Ok(format!("dimension {want}"))
    })()));

    out.push(Outcome::from_result(NAMES[4], (|| -> Check {
        for face in complex.faces() {
            let pts: Vec<Vec<i64>> = face.vertex_ids.iter().map(|&k| ys[k].clone()).collect();
            let r = linalg::affine_rank(&pts).unwrap_or(0);
            ensure(r == face.dim(), || format!("face at T{} collapses to rank {r}", face.interior_face.base))?;
        }
        Ok(String::from("ok"))
    })()));

    out
}

/// Runs every check on one path.
pub fn run_checks(path: &LatticePath) -> Report {
    let region = FerrersRegion::new(path);
    let complex = BoundedComplex::new(&region);
    let mut outcomes = structure_checks(&region, &complex);
    outcomes.extend(face_checks(&region, &complex));
    outcomes.extend(projection_checks(&region, &complex));
    Report { path: path.to_string(), outcomes }
}
