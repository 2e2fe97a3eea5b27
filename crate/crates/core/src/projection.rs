//! Dimension-reducing projection for paths `(NE^{k_n})…(NE^{k_1})` and the
//! area coordinates of trees.

use serde::{Deserialize, Serialize};

use crate::coxeter::Root;
use crate::error::{Error, Result};
use crate::grid::{FerrersRegion, GridPoint, LatticePath, Step};
use crate::pipedream::brick_vector_fast;
use crate::trees::{min_tree, NuTree};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionSpec {
    /// `(k_1, …, k_n)`; `k_1` belongs to the last block of the path.
    pub ks: Vec<usize>,
    /// Reduced dimension `n + Σ (k_i - 1)`.
    pub big_n: usize,
    /// `M_1, …, M_n` as sorted subsets of `1..=N`.
    pub m_sets: Vec<Vec<usize>>,
    /// Constant first and last brick coordinates.
    pub first: i64,
    pub last: i64,
}

impl ProjectionSpec {
    pub fn n(&self) -> usize {
        self.ks.len()
    }

    /// 1-based index of the group `M_j` holding a reduced coordinate.
    pub fn group_of(&self, coord: usize) -> Option<usize> {
        self.m_sets.iter().position(|m| m.contains(&coord)).map(|j| j + 1)
    }

    /// Drops the constant first and last coordinates.
    pub fn reduce(&self, b: &[i64]) -> Result<Vec<i64>> {
        if b.len() != self.big_n + 2 {
            return Err(Error::LengthMismatch { expected: self.big_n + 2, found: b.len() });
        }
        let (first, last) = (b[0], b[b.len() - 1]);
        if first != self.first || last != self.last {
            return Err(Error::NonConstantEnds { first, last, want_first: self.first, want_last: self.last });
        }
        Ok(b[1..b.len() - 1].to_vec())
    }

    /// Group sums `x_{M_j}`.
    pub fn pi1(&self, reduced: &[i64]) -> Result<Vec<i64>> {
        if reduced.len() != self.big_n {
            return Err(Error::LengthMismatch { expected: self.big_n, found: reduced.len() });
        }
        Ok(self.m_sets.iter().map(|m| m.iter().map(|&i| reduced[i - 1]).sum()).collect())
    }

    /// Prefix sums of the first `n - 1` group sums.
    pub fn project(&self, reduced: &[i64]) -> Result<Vec<i64>> {
        let sums = self.pi1(reduced)?;
        Ok(sums[..sums.len() - 1]
            .iter()
            .scan(0i64, |acc, &v| {
                *acc += v;
                Some(*acc)
            })
            .collect())
    }
}

/// Parses a path with no two consecutive north steps that starts with `N`
/// and ends with `E`.
pub fn parse_staircase(path: &LatticePath) -> Result<ProjectionSpec> {
    let steps = path.steps();
    if steps.first() != Some(&Step::N) || steps.last() != Some(&Step::E) {
        return Err(Error::NotNormalized);
    }
    if let Some(k) = steps.windows(2).position(|w| w == [Step::N, Step::N]) {
        return Err(Error::ConsecutiveNorth(k));
    }
    let mut blocks: Vec<usize> = Vec::new();
    for s in steps {
        match s {
            Step::N => blocks.push(0),
            Step::E => *blocks.last_mut().expect("path starts with N") += 1,
        }
    }
    blocks.reverse();
    let ks = blocks;
    let n = ks.len();
    let big_n = n + ks.iter().map(|k| k - 1).sum::<usize>();
    let mut used = vec![false; big_n + 1];
    let mut m_sets = Vec::with_capacity(n);
    for (j, &k) in ks.iter().enumerate() {
        let rest: Vec<usize> = (1..=big_n).filter(|&i| !used[i]).collect();
        let mut m: Vec<usize> = rest[rest.len() - (k - 1)..].to_vec();
        for &i in &m {
            used[i] = true;
        }
        m.push(j + 1);
        m.sort_unstable();
        m_sets.push(m);
    }
    let region = FerrersRegion::new(path);
    Ok(ProjectionSpec { ks, big_n, m_sets, first: -(region.points().len() as i64), last: 0 })
}

/// `π(b̃(T))` for every tree through its brick vector.
pub fn projected(region: &FerrersRegion, spec: &ProjectionSpec, tree: &NuTree) -> Result<Vec<i64>> {
    spec.project(&spec.reduce(&brick_vector_fast(region, tree))?)
}

/// `y(T) = π(b̃(T)) - π(b̃(T_0))`.
pub fn y_coords(region: &FerrersRegion, spec: &ProjectionSpec, tree: &NuTree) -> Result<Vec<i64>> {
    let base = projected(region, spec, &min_tree(region))?;
    y_coords_from(region, spec, tree, &base)
}

pub(crate) fn y_coords_from(
    region: &FerrersRegion,
    spec: &ProjectionSpec,
    tree: &NuTree,
    base: &[i64],
) -> Result<Vec<i64>> {
    Ok(projected(region, spec, tree)?.iter().zip(base).map(|(a, b)| a - b).collect())
}

/// Boxes left of the path from the root to the leftmost node on each
/// horizontal line `1..levels`.
pub fn area_coords(tree: &NuTree, levels: usize) -> Result<Vec<i64>> {
    (1..levels)
        .map(|i| {
            let mut v = tree
                .nodes()
                .iter()
                .filter(|p| p.y == i)
                .min_by_key(|p| p.x)
                .copied()
                .ok_or(Error::EmptyLevel(i))?;
            let mut area = 0i64;
            while v != GridPoint::ROOT {
                let p = tree.parent(v).expect("every non-root node has a parent");
                if p.x == v.x {
                    area += (v.x * (v.y - p.y)) as i64;
                }
                v = p;
            }
            Ok(area)
        })
        .collect()
}

/// Area of the rectangle swept by the right rotation at `q`.
pub fn rotation_area(tree: &NuTree, q: GridPoint) -> Result<i64> {
    let (Some(p), Some(r)) = (tree.nearest_north(q), tree.nearest_east(q)) else {
        return Err(Error::NotAnAscent(q));
    };
    Ok(((r.x - q.x) * (q.y - p.y)) as i64)
}

/// Change of `y` predicted for a rotation whose root touches pipes `i < j`:
/// `+area` on the coordinates `g(i) ≤ ℓ < g(j)`.
pub fn predicted_y_change(spec: &ProjectionSpec, root: Root, area: i64) -> Option<Vec<i64>> {
    let gi = spec.group_of(root.i - 1)?;
    let gj = spec.group_of(root.j - 1)?;
    Some((1..spec.n()).map(|l| if gi <= l && l < gj { area } else { 0 }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::TamariLattice;

    fn spec(s: &str) -> ProjectionSpec {
        parse_staircase(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn m_sets() {
        let s = spec("NENEENE");
        assert_eq!(s.ks, vec![1, 2, 1]);
        assert_eq!(s.big_n, 4);
        assert_eq!(s.m_sets, vec![vec![1], vec![2, 4], vec![3]]);
        let s = spec("NENENEENE");
        assert_eq!(s.big_n, 5);
        assert_eq!(s.m_sets, vec![vec![1], vec![2, 5], vec![3], vec![4]]);
        let s = spec("NENENE");
        assert_eq!(s.m_sets, vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn parse_errors() {
        let p = |s: &str| parse_staircase(&s.parse().unwrap());
        assert_eq!(p("NENNE"), Err(Error::ConsecutiveNorth(2)));
        assert_eq!(p("ENEEN"), Err(Error::NotNormalized));
        assert_eq!(p("NEN"), Err(Error::NotNormalized));
    }

    #[test]
    fn worked_chain() {
        let s = spec("NENENEENE");
        let b = [-17, -13, -13, -9, -13, -2, 0];
        let reduced = s.reduce(&b).unwrap();
        assert_eq!(reduced, vec![-13, -13, -9, -13, -2]);
        assert_eq!(s.pi1(&reduced).unwrap(), vec![-13, -15, -9, -13]);
        assert_eq!(s.project(&reduced).unwrap(), vec![-13, -28, -37]);
        assert_eq!(s.project(&[0; 5]).unwrap(), vec![0; 3]);
        assert!(s.project(&[0; 4]).is_err());
        assert!(matches!(s.reduce(&[-16, 0, 0, 0, 0, 0, 0]), Err(Error::NonConstantEnds { .. })));
    }

    #[test]
    fn y_equals_area() {
        for nu in ["NENEENE", "NENENEENE", "NEENEE"] {
            let path: LatticePath = nu.parse().unwrap();
            let f = FerrersRegion::new(&path);
            let s = parse_staircase(&path).unwrap();
            for t in TamariLattice::new(&f).trees() {
                assert_eq!(y_coords(&f, &s, t).unwrap(), area_coords(t, s.n()).unwrap(), "{nu} {t}");
            }
            assert_eq!(y_coords(&f, &s, &min_tree(&f)).unwrap(), vec![0; s.n() - 1]);
        }
    }

    #[test]
    fn empty_level() {
        let f = FerrersRegion::new(&"NENE".parse().unwrap());
        let t0 = min_tree(&f);
        assert_eq!(area_coords(&t0, 2).unwrap(), vec![0]);
        assert_eq!(area_coords(&t0, 4), Err(Error::EmptyLevel(3)));
    }
}
