//! Lattice paths, Ferrers regions and the reading word `Q_ν`.
//!
//! Coordinates have their origin at the top-left corner of the region, with
//! `x` growing east and `y` growing south, so the lattice distance to the
//! corner is `x + y`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coxeter::GenWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridPoint {
    pub x: usize,
    pub y: usize,
}

impl GridPoint {
    pub const ROOT: GridPoint = GridPoint { x: 0, y: 0 };

    pub fn new(x: usize, y: usize) -> Self {
        GridPoint { x, y }
    }

    /// Lattice distance to the top-left corner.
    pub fn diagonal(&self) -> usize {
        self.x + self.y
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    N,
    E,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::EmptyPath);
        }
        Ok(LatticePath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn north_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::N).count()
    }

    pub fn east_count(&self) -> usize {
        self.steps.len() - self.north_count()
    }

    /// All-north or all-east paths give a complex with a single facet.
    pub fn is_degenerate(&self) -> bool {
        self.north_count() == 0 || self.east_count() == 0
    }

    /// Prepends `N` and appends `E`.
    pub fn normalized(&self) -> LatticePath {
        let mut steps = Vec::with_capacity(self.steps.len() + 2);
        steps.push(Step::N);
        steps.extend_from_slice(&self.steps);
        steps.push(Step::E);
        LatticePath { steps }
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(k, c)| match c.to_ascii_uppercase() {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                _ => Err(Error::InvalidStep(c, k)),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::new(steps)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

pub fn parse_path(text: &str) -> Result<LatticePath> {
    text.parse()
}

/// The Ferrers region weakly above a path together with its point set `A_ν`
/// and the reading word.
#[derive(Debug, Clone)]
pub struct FerrersRegion {
    path: LatticePath,
    row_max: Vec<usize>,
    points: Vec<GridPoint>,
    rank: usize,
    word: GenWord,
    /// Word position (0-based) to point.
    reading: Vec<GridPoint>,
    /// Dense `(y, x)` table of 0-based word positions.
    position_table: Vec<Vec<Option<usize>>>,
}

impl FerrersRegion {
    pub fn new(path: &LatticePath) -> Self {
        let height = path.north_count();
        let mut row_max = vec![0; height + 1];
        // walk from the bottom-left corner
        let (mut x, mut y) = (0usize, height);
        for step in path.steps() {
            match step {
                Step::E => x += 1,
                Step::N => {
                    row_max[y] = x;
                    y -= 1;
                }
            }
        }
        row_max[0] = x;

        let mut points: Vec<GridPoint> = row_max
            .iter()
            .enumerate()
            .flat_map(|(y, &m)| (0..=m).map(move |x| GridPoint { x, y }))
            .collect();
        points.sort();
        let rank = points.iter().map(GridPoint::diagonal).max().unwrap_or(0) + 1;

        // columns left to right, each read bottom to top
        let rm = &row_max;
        let reading: Vec<GridPoint> = (0..=row_max[0])
            .flat_map(|col| {
                (0..=height).rev().filter(move |&y| rm[y] >= col).map(move |y| GridPoint { x: col, y })
            })
            .collect();
        let mut position_table = vec![vec![None; row_max[0] + 1]; height + 1];
        for (k, p) in reading.iter().enumerate() {
            position_table[p.y][p.x] = Some(k);
        }
        let letters = reading.iter().map(|p| p.diagonal() + 1).collect();
        let word = GenWord::new(letters, rank).expect("labels are bounded by the rank");

        FerrersRegion { path: path.clone(), row_max, points, rank, word, reading, position_table }
    }

    pub fn path(&self) -> &LatticePath {
        &self.path
    }

    /// Rank `n`; the ambient group is `S_{n+1}`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of coordinates, `n + 1`.
    pub fn dim(&self) -> usize {
        self.rank + 1
    }

    pub fn row_max(&self) -> &[usize] {
        &self.row_max
    }

    pub fn height(&self) -> usize {
        self.row_max.len() - 1
    }

    pub fn width(&self) -> usize {
        self.row_max[0]
    }

    /// `A_ν`, sorted by `(x, y)`.
    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        p.y < self.row_max.len() && p.x <= self.row_max[p.y]
    }

    /// `Q_ν`.
    pub fn word(&self) -> &GenWord {
        &self.word
    }

    /// Points in word order: `reading()[k]` carries letter `k + 1`.
    pub fn reading(&self) -> &[GridPoint] {
        &self.reading
    }

    /// 0-based word position of a point.
    pub fn index_of(&self, p: GridPoint) -> Option<usize> {
        self.position_table.get(p.y).and_then(|row| row.get(p.x)).copied().flatten()
    }

    /// 1-based word position of a point, as used in facet listings.
    pub fn position_of(&self, p: GridPoint) -> Option<usize> {
        self.index_of(p).map(|k| k + 1)
    }

    /// Point at a 1-based word position.
    pub fn point_at(&self, position: usize) -> Result<GridPoint> {
        if position == 0 || position > self.reading.len() {
            return Err(Error::PositionOutOfRange { position, len: self.reading.len() });
        }
        Ok(self.reading[position - 1])
    }

    /// Incompatible iff one point is strictly south-west of the other and
    /// the rectangle they span lies inside the region.
    pub(crate) fn incompatible_unchecked(&self, p: GridPoint, q: GridPoint) -> bool {
        let (sw, ne) = if p.x < q.x && p.y > q.y {
            (p, q)
        } else if q.x < p.x && q.y > p.y {
            (q, p)
        } else {
            return false;
        };
        // the south-east corner decides containment for a Ferrers shape
        ne.x <= self.row_max[sw.y]
    }

    pub fn compatible(&self, p: GridPoint, q: GridPoint) -> Result<bool> {
        for r in [p, q] {
            if !self.contains(r) {
                return Err(Error::PointOutsideRegion(r));
            }
        }
        Ok(!self.incompatible_unchecked(p, q))
    }
}

pub fn build_region(path: &LatticePath) -> FerrersRegion {
    FerrersRegion::new(path)
}
