//! Pipe dreams on the staircase board and the fast brick-vector route.
//!
//! The board holds the cells `x + y ≤ n`; cells on `x + y = n` are half
//! cells where every pipe turns. Pipe `i` enters on the left edge at row
//! `i - 1` heading east and leaves through the top edge.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::Permutation;
use crate::grid::{FerrersRegion, GridPoint};
use crate::trees::NuTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tile {
    Cross,
    Elbow,
    /// A half cell on the outer anti-diagonal.
    Turn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
enum Heading {
    East,
    North,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipeTrace {
    pub pipe: usize,
    /// Cells in visiting order.
    pub cells: Vec<GridPoint>,
    /// Column through which the pipe leaves the top edge.
    pub exit_column: usize,
    /// `entry_rows[x]` is the row where the pipe enters column `x` heading
    /// east, for every column up to the exit.
    pub entry_rows: Vec<usize>,
    /// Elbow turns from east to north at points of `A_ν`.
    pub turns: usize,
}

impl PipeTrace {
    /// Whether the point lies below the pipe.
    pub fn is_above(&self, p: GridPoint) -> bool {
        self.exit_column < p.x || self.entry_rows[p.x] <= p.y
    }
}

#[derive(Debug, Clone)]
pub struct PipeDream {
    rank: usize,
    tiles: Vec<Vec<Tile>>,
    traces: Vec<PipeTrace>,
}

impl PipeDream {
    pub fn new(region: &FerrersRegion, tree: &NuTree) -> Self {
        let n = region.rank();
        let tiles: Vec<Vec<Tile>> = (0..=n)
            .map(|y| {
                (0..=n - y)
                    .map(|x| {
                        let p = GridPoint::new(x, y);
                        if x + y == n {
                            Tile::Turn
                        } else if region.contains(p) && !tree.contains(p) {
                            Tile::Cross
                        } else {
                            Tile::Elbow
                        }
                    })
                    .collect()
            })
            .collect();
        let traces = (0..=n).map(|row| trace(region, &tiles, row)).collect();
        PipeDream { rank: n, tiles, traces }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn tile(&self, p: GridPoint) -> Option<Tile> {
        self.tiles.get(p.y).and_then(|row| row.get(p.x)).copied()
    }

    pub fn traces(&self) -> &[PipeTrace] {
        &self.traces
    }

    /// The permutation read along the top edge: `w(c)` is the pipe leaving
    /// through column `c - 1`.
    pub fn exit_permutation(&self) -> Permutation {
        let mut window = vec![0; self.rank + 1];
        for t in &self.traces {
            window[t.exit_column] = t.pipe;
        }
        Permutation::from_window(window).expect("pipes leave through distinct columns")
    }

    /// Number of points of `A_ν` lying below each pipe.
    pub fn points_below(&self, region: &FerrersRegion) -> Vec<usize> {
        self.traces.iter().map(|t| region.points().iter().filter(|&&p| t.is_above(p)).count()).collect()
    }

    /// `b(T)_i = -#{points below pipe i}`.
    pub fn brick_vector(&self, region: &FerrersRegion) -> Vec<i64> {
        self.points_below(region).into_iter().map(|c| -(c as i64)).collect()
    }

    pub fn turn_counts(&self) -> Vec<usize> {
        self.traces.iter().map(|t| t.turns).collect()
    }
}

fn trace(region: &FerrersRegion, tiles: &[Vec<Tile>], row: usize) -> PipeTrace {
    let (mut x, mut y) = (0usize, row);
    let mut heading = Heading::East;
    let mut cells = Vec::new();
    let mut entry_rows = vec![row];
    let mut turns = 0;
    loop {
        let here = GridPoint::new(x, y);
        cells.push(here);
        let tile = tiles[y][x];
        let bends = tile != Tile::Cross;
        if bends && heading == Heading::East && region.contains(here) {
            turns += 1;
        }
        heading = match (heading, bends) {
            (Heading::East, true) | (Heading::North, false) => Heading::North,
            (Heading::North, true) | (Heading::East, false) => Heading::East,
        };
        match heading {
            Heading::East => {
                x += 1;
                entry_rows.push(y);
            }
            Heading::North => {
                if y == 0 {
                    break;
                }
                y -= 1;
            }
        }
    }
    PipeTrace { pipe: row + 1, cells, exit_column: x, entry_rows, turns }
}

/// Brick vector through the pipe dream of the tree.
pub fn brick_vector_fast(region: &FerrersRegion, tree: &NuTree) -> Vec<i64> {
    PipeDream::new(region, tree).brick_vector(region)
}

impl fmt::Display for PipeDream {
    /// One line per row: `+` cross, `r` elbow, `/` half cell.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.tiles {
            let line: String = row
                .iter()
                .map(|t| match t {
                    Tile::Cross => '+',
                    Tile::Elbow => 'r',
                    Tile::Turn => '/',
                })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
