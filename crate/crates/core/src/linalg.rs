//! Exact rational linear algebra for small integer systems.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn to_rational(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
fn row_reduce(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let lead = m[row][col].clone();
        for v in m[row].iter_mut() {
            *v = &*v / &lead;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[row].clone();
                for (target, x) in m[r][col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                    *target -= &factor * x;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// Rank of a list of integer vectors.
pub fn rank(vectors: &[Vec<i64>]) -> usize {
    let mut m = to_rational(vectors);
    row_reduce(&mut m).len()
}

/// Dimension of the affine hull, `None` for an empty set.
pub fn affine_rank(points: &[Vec<i64>]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<Vec<i64>> = rest.iter().map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect()).collect();
    Some(rank(&diffs))
}

/// A linear inequality `coeffs · t + constant ≥ 0` in the free variables.
#[derive(Debug, Clone)]
struct Inequality {
    coeffs: Vec<BigRational>,
    constant: BigRational,
}

/// Whether `target` is a nonnegative combination of `generators`.
///
/// Solves `G a = target` by elimination, then decides `a ≥ 0` on the
/// solution space by Fourier–Motzkin.
pub fn cone_contains(generators: &[Vec<i64>], target: &[i64]) -> bool {
    let dim = target.len();
    let m = generators.len();
    // augmented system: one row per coordinate, one column per generator
    let mut aug: Vec<Vec<BigRational>> = (0..dim)
        .map(|c| {
            generators
                .iter()
                .map(|g| BigRational::from_integer(BigInt::from(g[c])))
                .chain(std::iter::once(BigRational::from_integer(BigInt::from(target[c]))))
                .collect()
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.last() == Some(&m) {
        return false;
    }
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    // a_pivot = rhs - Σ coeff · a_free ≥ 0 and a_free ≥ 0
    let mut system: Vec<Inequality> = pivots
        .iter()
        .enumerate()
        .map(|(r, _)| Inequality {
            coeffs: free.iter().map(|&f| -aug[r][f].clone()).collect(),
            constant: aug[r][m].clone(),
        })
        .collect();
    for k in 0..free.len() {
        let mut coeffs = vec![BigRational::zero(); free.len()];
        coeffs[k] = BigRational::one();
        system.push(Inequality { coeffs, constant: BigRational::zero() });
    }
    fourier_motzkin_feasible(system, free.len())
}

fn fourier_motzkin_feasible(mut system: Vec<Inequality>, vars: usize) -> bool {
    for v in (0..vars).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for ineq in system {
            if ineq.coeffs[v].is_positive() {
                pos.push(ineq);
            } else if ineq.coeffs[v].is_negative() {
                neg.push(ineq);
            } else {
                rest.push(ineq);
            }
        }
        for p in &pos {
            for q in &neg {
                // scale so the coefficients of v cancel
                let (sp, sq) = (-q.coeffs[v].clone(), p.coeffs[v].clone());
                let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(a, b)| a * &sp + b * &sq).collect();
                let constant = &p.constant * &sp + &q.constant * &sq;
                rest.push(Inequality { coeffs, constant });
            }
        }
        if rest.iter().any(|ineq| ineq.coeffs.iter().all(Zero::is_zero) && ineq.constant.is_negative()) {
            return false;
        }
        rest.retain(|ineq| !ineq.coeffs.iter().all(Zero::is_zero));
        dedup(&mut rest);
        system = rest;
    }
    system.iter().all(|ineq| !ineq.constant.is_negative())
}

fn dedup(system: &mut Vec<Inequality>) {
    // normalize by the first nonzero coefficient magnitude
    for ineq in system.iter_mut() {
        if let Some(lead) = ineq.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in ineq.coeffs.iter_mut() {
                *c = &*c / &lead;
            }
            ineq.constant = &ineq.constant / &lead;
        }
    }
    let mut seen = std::collections::HashSet::new();
    system.retain(|ineq| seen.insert((ineq.coeffs.clone(), ineq.constant.clone())));
}

/// Cone membership for generators of the form `e_i - e_j`, decided as an
/// uncapacitated flow problem: feasible iff the entries sum to zero and no
/// set closed under the arcs `i -> j` has positive total demand.
pub fn root_cone_contains(arcs: &[(usize, usize)], target: &[i64]) -> bool {
    let n = target.len();
    assert!(n < 64, "flow criterion is limited to 63 coordinates");
    if target.iter().sum::<i64>() != 0 {
        return false;
    }
    let mut out_mask = vec![0u64; n];
    for &(i, j) in arcs {
        out_mask[i - 1] |= 1 << (j - 1);
    }
    (1u64..(1u64 << n)).all(|set| {
        let closed = (0..n).filter(|k| set >> k & 1 == 1).all(|k| out_mask[k] & !set == 0);
        !closed || (0..n).filter(|k| set >> k & 1 == 1).map(|k| target[k]).sum::<i64>() <= 0
    })
}
