use proptest::prelude::*;

use nubrick::coxeter::{bruhat_leq, positive_roots, GenWord, Permutation};
use nubrick::grid::{FerrersRegion, GridPoint, LatticePath, Step};
use nubrick::linalg::{cone_contains, root_cone_contains};
use nubrick::oracle::maximal_compatible_sets;
use nubrick::pipedream::brick_vector_fast;
use nubrick::projection::{area_coords, parse_staircase, y_coords};
use nubrick::subword::{tree_facet, w_nu, SubwordInstance};
use nubrick::trees::{min_tree, TamariLattice};

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|w| Permutation::from_window(w).unwrap())
}

fn small_path() -> impl Strategy<Value = LatticePath> {
    prop::collection::vec(prop::bool::ANY, 1..=9)
        .prop_map(|bits| LatticePath::new(bits.into_iter().map(|b| if b { Step::N } else { Step::E }).collect()).unwrap())
        .prop_filter("at most 12 lattice points", |p| FerrersRegion::new(p).points().len() <= 12)
}

fn staircase() -> impl Strategy<Value = LatticePath> {
    prop::collection::vec(1usize..=3, 1..=4)
        .prop_map(|ks| {
            let steps = ks.iter().flat_map(|&k| std::iter::once(Step::N).chain(std::iter::repeat_n(Step::E, k))).collect();
            LatticePath::new(steps).unwrap()
        })
        .prop_filter("at most 15 lattice points", |p| FerrersRegion::new(p).points().len() <= 15)
}

proptest! {
    #[test]
    fn length_is_inversion_count(w in permutation(7)) {
        let inv = (0..w.size())
            .flat_map(|i| (i + 1..w.size()).map(move |j| (i, j)))
            .filter(|&(i, j)| w.window()[i] > w.window()[j])
            .count();
        prop_assert_eq!(w.length(), inv);
        prop_assert_eq!(w.inverse().length(), inv);
    }

    #[test]
    fn bruhat_order_bounds(w in permutation(6)) {
        let e = Permutation::identity(w.size());
        prop_assert!(bruhat_leq(&e, &w).unwrap());
        prop_assert!(bruhat_leq(&w, &w).unwrap());
        for beta in positive_roots(w.size()) {
            let up = w.reflect_left(beta);
            prop_assert_eq!(up.reflect_left(beta), w.clone());
            let below = up.length() > w.length();
            prop_assert_eq!(bruhat_leq(&w, &up).unwrap(), below);
        }
    }

    #[test]
    fn demazure_dominates_subwords(letters in prop::collection::vec(1usize..=4, 0..10), mask in any::<u16>()) {
        let word = GenWord::new(letters, 4).unwrap();
        let dem = word.demazure_product();
        let sub = word.subword((0..word.len()).filter(|k| mask >> k & 1 == 1));
        prop_assert!(bruhat_leq(&sub.evaluate(), &dem).unwrap());
        prop_assert_eq!(word.is_reduced(), word.evaluate().length() == word.len());
    }

    #[test]
    fn roots_act_by_coordinates(w in permutation(6), i in 1usize..6, d in 1usize..6) {
        let j = i + d;
        prop_assume!(j <= w.size());
        let beta = nubrick::coxeter::Root::new(i, j, w.size()).unwrap();
        let image = w.act_on_root(beta).to_vector(w.size());
        let v = beta.to_vector(w.size());
        for k in 1..=w.size() {
            prop_assert_eq!(image[w.apply(k) - 1], v[k - 1]);
        }
    }

    #[test]
    fn flip_enumeration_matches_oracle(path in small_path()) {
        let f = FerrersRegion::new(&path);
        let lattice = TamariLattice::new(&f);
        let flips: Vec<Vec<GridPoint>> = lattice.trees().iter().map(|t| t.nodes().to_vec()).collect();
        prop_assert_eq!(flips, maximal_compatible_sets(&f));
        prop_assert_eq!(lattice.maximal_ids().len(), 1);
        prop_assert!(min_tree(&f).descents().is_empty());
        prop_assert!(lattice.trees().iter().all(|t| t.contains(GridPoint::ROOT)));
    }

    #[test]
    fn brick_routes_agree(path in small_path()) {
        let f = FerrersRegion::new(&path);
        let inst = SubwordInstance::for_region(&f);
        let total: i64 = -f.word().letters().iter().map(|&q| q as i64).sum::<i64>();
        for t in TamariLattice::new(&f).trees() {
            let fast = brick_vector_fast(&f, t);
            prop_assert_eq!(&fast, &inst.brick_vector(&tree_facet(&f, t)));
            prop_assert_eq!(fast.iter().sum::<i64>(), total);
        }
        prop_assert_eq!(inst.w(), &w_nu(&f));
    }

    #[test]
    fn rotations_invert(path in small_path()) {
        let f = FerrersRegion::new(&path);
        for t in TamariLattice::new(&f).trees() {
            for q in t.ascents() {
                let (up, q2) = t.rotate(q).unwrap();
                let (back, q3) = up.rotate_down(q2).unwrap();
                prop_assert_eq!(&back, t);
                prop_assert_eq!(q3, q);
            }
        }
    }

    #[test]
    fn y_is_area(path in staircase()) {
        let f = FerrersRegion::new(&path);
        let spec = parse_staircase(&path).unwrap();
        for t in TamariLattice::new(&f).trees() {
            prop_assert_eq!(y_coords(&f, &spec, t).unwrap(), area_coords(t, spec.n()).unwrap());
        }
    }

    #[test]
    fn cone_tests_agree(arcs in prop::collection::vec((1usize..=4, 1usize..=4), 0..6), t in prop::collection::vec(-3i64..=3, 3)) {
        let arcs: Vec<(usize, usize)> = arcs.into_iter().filter(|(i, j)| i != j).collect();
        let mut target = t.clone();
        target.push(-t.iter().sum::<i64>());
        let gens: Vec<Vec<i64>> = arcs
            .iter()
            .map(|&(i, j)| {
                let mut v = vec![0; 4];
                v[i - 1] = 1;
                v[j - 1] = -1;
                v
            })
            .collect();
        prop_assert_eq!(cone_contains(&gens, &target), root_cone_contains(&arcs, &target));
    }
}
