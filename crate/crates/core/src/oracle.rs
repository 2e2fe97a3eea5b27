//! Brute-force reference computations, independent of the rotation code.

use crate::grid::{FerrersRegion, GridPoint};

/// Two points clash when one lies strictly south-west of the other and the
/// south-east corner of their rectangle is in the region.
fn clash(region: &FerrersRegion, p: GridPoint, q: GridPoint) -> bool {
    let (sw, ne) = match (p.x.cmp(&q.x), p.y.cmp(&q.y)) {
        (std::cmp::Ordering::Less, std::cmp::Ordering::Greater) => (p, q),
        (std::cmp::Ordering::Greater, std::cmp::Ordering::Less) => (q, p),
        _ => return false,
    };
    region.contains(GridPoint::new(ne.x, sw.y))
}

/// All maximal sets of pairwise compatible points, each sorted, in sorted
/// order.
pub fn maximal_compatible_sets(region: &FerrersRegion) -> Vec<Vec<GridPoint>> {
    let points = region.points();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    search(region, points, 0, &mut chosen, &mut out);
    out.sort();
    out
}

fn search(
    region: &FerrersRegion,
    points: &[GridPoint],
    at: usize,
    chosen: &mut Vec<GridPoint>,
    out: &mut Vec<Vec<GridPoint>>,
) {
    if at == points.len() {
        let maximal = points
            .iter()
            .all(|&p| chosen.contains(&p) || chosen.iter().any(|&q| clash(region, p, q)));
        if maximal {
            let mut set = chosen.clone();
            set.sort();
            out.push(set);
        }
        return;
    }
    let p = points[at];
    if chosen.iter().all(|&q| !clash(region, p, q)) {
        chosen.push(p);
        search(region, points, at + 1, chosen, out);
        chosen.pop();
    }
    search(region, points, at + 1, chosen, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let count = |s: &str| maximal_compatible_sets(&FerrersRegion::new(&s.parse().unwrap())).len();
        assert_eq!(count("EEN"), 3);
        assert_eq!(count("ENEEN"), 7);
        assert_eq!(count("N"), 1);
        assert_eq!(count("NENENE"), 5);
    }
}
