//! Subword complexes `SC(Q, w)`, their root and weight functions, flips and
//! the definitional brick vector.
//!
//! Facets are sets of 1-based word positions whose complement is a reduced
//! expression for `w`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::coxeter::{bruhat_leq, positive_roots, GenWord, Permutation, Root, WeightVector};
use crate::error::{Error, Result};
use crate::grid::FerrersRegion;
use crate::trees::{min_tree, NuTree};

/// A set of 1-based word positions, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Facet {
    positions: Vec<usize>,
}

impl Facet {
    pub fn new(positions: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = positions.into_iter().collect();
        Facet { positions: set.into_iter().collect() }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn contains(&self, k: usize) -> bool {
        self.positions.binary_search(&k).is_ok()
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn is_superset_of(&self, positions: &[usize]) -> bool {
        positions.iter().all(|&k| self.contains(k))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubwordInstance {
    word: GenWord,
    w: Permutation,
}

impl SubwordInstance {
    pub fn new(word: GenWord, w: Permutation) -> Result<Self> {
        if w.size() != word.rank() + 1 {
            return Err(Error::RankMismatch { left: word.rank() + 1, right: w.size() });
        }
        Ok(SubwordInstance { word, w })
    }

    /// `SC(Q_ν, w_ν)`.
    pub fn for_region(region: &FerrersRegion) -> Self {
        SubwordInstance { word: region.word().clone(), w: w_nu(region) }
    }

    pub fn word(&self) -> &GenWord {
        &self.word
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of coordinates, `n + 1`.
    pub fn dim(&self) -> usize {
        self.word.rank() + 1
    }

    fn check_position(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.len() {
            return Err(Error::PositionOutOfRange { position: k, len: self.len() });
        }
        Ok(())
    }

    /// Whether the complement of `positions` is a reduced word for `w`.
    pub fn is_facet(&self, facet: &Facet) -> bool {
        if facet.positions.iter().any(|&k| k == 0 || k > self.len()) {
            return false;
        }
        let complement = self.complement_word(facet);
        complement.len() == self.w.length() && complement.evaluate() == self.w
    }

    fn complement_word(&self, facet: &Facet) -> GenWord {
        self.word.subword((0..self.len()).filter(|&k| !facet.contains(k + 1)))
    }

    /// `Π Q_{{1..k-1} \ I}` for every `k`, so entry `k-1` is the prefix
    /// product used at position `k`.
    fn prefix_products(&self, facet: &Facet) -> Vec<Permutation> {
        let mut state = Permutation::identity(self.dim());
        let mut out = Vec::with_capacity(self.len());
        for (idx, &p) in self.word.letters().iter().enumerate() {
            out.push(state.clone());
            if !facet.contains(idx + 1) {
                state = state.times_simple(p);
            }
        }
        out
    }

    fn prefix_product(&self, facet: &Facet, k: usize) -> Permutation {
        let letters: Vec<usize> =
            (1..k).filter(|&i| !facet.contains(i)).map(|i| self.word.letters()[i - 1]).collect();
        crate::coxeter::evaluate_letters(&letters, self.word.rank())
    }

    /// `r(I, k)`.
    pub fn root_function(&self, facet: &Facet, k: usize) -> Result<Root> {
        self.check_position(k)?;
        let q = self.word.letters()[k - 1];
        Ok(self.prefix_product(facet, k).act_on_root(Root::simple(q)))
    }

    /// `ω(I, k)`.
    pub fn weight_function(&self, facet: &Facet, k: usize) -> Result<WeightVector> {
        self.check_position(k)?;
        let q = self.word.letters()[k - 1];
        self.prefix_product(facet, k).act_on_weight(&WeightVector::fundamental(q, self.dim()))
    }

    /// `r(I, k)` for all positions at once.
    pub fn all_roots(&self, facet: &Facet) -> Vec<Root> {
        self.prefix_products(facet)
            .iter()
            .zip(self.word.letters())
            .map(|(pre, &q)| pre.act_on_root(Root::simple(q)))
            .collect()
    }

    /// Root configuration `R(I)`, listed in position order.
    pub fn root_configuration(&self, facet: &Facet) -> Vec<Root> {
        let roots = self.all_roots(facet);
        facet.positions.iter().map(|&k| roots[k - 1]).collect()
    }

    /// `b(I) = -Σ_k ω(I, k)`.
    pub fn brick_vector(&self, facet: &Facet) -> Vec<i64> {
        let mut b = vec![0i64; self.dim()];
        for (pre, &q) in self.prefix_products(facet).iter().zip(self.word.letters()) {
            for v in 1..=q {
                b[pre.apply(v) - 1] -= 1;
            }
        }
        b
    }

    /// Exchanges `k ∈ I` for the unique `k' ∉ I` keeping the complement a
    /// reduced word for `w`. Returns the new facet and `k'`.
    pub fn flip(&self, facet: &Facet, k: usize) -> Result<(Facet, usize)> {
        self.check_position(k)?;
        if !facet.contains(k) || !self.is_facet(facet) {
            return Err(Error::NotFlippable(k));
        }
        let partners: Vec<usize> = (1..=self.len())
            .filter(|&kp| !facet.contains(kp))
            .filter(|&kp| {
                let next = Facet::new(facet.positions.iter().copied().filter(|&i| i != k).chain([kp]));
                self.is_facet(&next)
            })
            .collect();
        match partners.as_slice() {
            [] => Err(Error::NotFlippable(k)),
            [kp] => Ok((Facet::new(facet.positions.iter().copied().filter(|&i| i != k).chain([*kp])), *kp)),
            _ => panic!("exchange property violated: several partners {partners:?} for position {k}"),
        }
    }

    /// Generators `β ∈ Φ⁺` with `w ⋖ s_β w ≤ Dem(Q)`, in lexicographic order.
    pub fn bruhat_cone(&self) -> Vec<Root> {
        let dem = self.word.demazure_product();
        let len = self.w.length();
        positive_roots(self.dim())
            .filter(|&beta| {
                let up = self.w.reflect_left(beta);
                up.length() == len + 1 && bruhat_leq(&up, &dem).expect("same size")
            })
            .collect()
    }

    /// `Q_I`: the word with the letters at the given positions deleted.
    pub fn without_positions(&self, positions: &[usize]) -> SubwordInstance {
        let word = self.word.subword((0..self.len()).filter(|k| !positions.contains(&(k + 1))));
        SubwordInstance { word, w: self.w.clone() }
    }

    /// Deletes every occurrence of `s_1` and `s_n`.
    pub fn without_extreme_letters(&self) -> SubwordInstance {
        let n = self.word.rank();
        let drop: Vec<usize> =
            (1..=self.len()).filter(|&k| matches!(self.word.letters()[k - 1], l if l == 1 || l == n)).collect();
        self.without_positions(&drop)
    }

    /// All facets by exhaustive search over position subsets. Exponential;
    /// meant for small words.
    pub fn facets_brute_force(&self) -> Vec<Facet> {
        let m = self.len();
        let size = m.checked_sub(self.w.length());
        let Some(size) = size else { return Vec::new() };
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(size);
        fn rec(inst: &SubwordInstance, start: usize, size: usize, chosen: &mut Vec<usize>, out: &mut Vec<Facet>) {
            if chosen.len() == size {
                let f = Facet::new(chosen.iter().copied());
                if inst.is_facet(&f) {
                    out.push(f);
                }
                return;
            }
            for k in start..=inst.len() {
                if inst.len() - k + 1 < size - chosen.len() {
                    break;
                }
                chosen.push(k);
                rec(inst, k + 1, size, chosen, out);
                chosen.pop();
            }
        }
        rec(self, 1, size, &mut chosen, &mut out);
        out
    }
}

/// `w_ν`: product of the letters in the complement of the minimal tree.
pub fn w_nu(region: &FerrersRegion) -> Permutation {
    complement_product(region, &min_tree(region))
}

/// Product of the letters of `Q_ν` outside the tree, in word order.
pub fn complement_product(region: &FerrersRegion, tree: &NuTree) -> Permutation {
    let letters: Vec<usize> = region
        .reading()
        .iter()
        .zip(region.word().letters())
        .filter(|(p, _)| !tree.contains(**p))
        .map(|(_, &q)| q)
        .collect();
    crate::coxeter::evaluate_letters(&letters, region.rank())
}

pub fn tree_facet(region: &FerrersRegion, tree: &NuTree) -> Facet {
    Facet::new(tree.nodes().iter().map(|&p| region.position_of(p).expect("tree node lies in the region")))
}

pub fn facet_tree(region: &FerrersRegion, instance: &SubwordInstance, facet: &Facet) -> Result<NuTree> {
    if !instance.is_facet(facet) {
        return Err(Error::NotAFacet(facet.positions().to_vec()));
    }
    let points = facet.positions().iter().map(|&k| region.point_at(k)).collect::<Result<Vec<_>>>()?;
    NuTree::from_points(region, points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::TamariLattice;

    fn region(s: &str) -> FerrersRegion {
        FerrersRegion::new(&s.parse().unwrap())
    }

    #[test]
    fn w_nu_eneen() {
        let f = region("ENEEN");
        assert_eq!(w_nu(&f).window(), &[1, 4, 3, 5, 2, 6]);
    }

    #[test]
    fn w_nu_independent_of_tree() {
        for nu in ["EEN", "ENEEN", "NENEN", "EENNE"] {
            let f = region(nu);
            let w = w_nu(&f);
            for t in TamariLattice::new(&f).trees() {
                assert_eq!(complement_product(&f, t), w, "{nu}");
            }
        }
    }

    #[test]
    fn single_tree_gives_identity() {
        let f = region("EEE");
        assert_eq!(w_nu(&f), Permutation::identity(f.dim()));
        assert_eq!(TamariLattice::new(&f).len(), 1);
    }

    #[test]
    fn facet_round_trip() {
        let f = region("ENEEN");
        let inst = SubwordInstance::for_region(&f);
        let t0 = min_tree(&f);
        let facet = tree_facet(&f, &t0);
        assert_eq!(facet.positions(), &[1, 2, 3, 4, 7, 9]);
        assert_eq!(facet_tree(&f, &inst, &facet).unwrap(), t0);
        assert!(facet_tree(&f, &inst, &Facet::new([1, 2, 3])).is_err());
    }

    #[test]
    fn root_and_weight_functions() {
        let f = region("ENEEN");
        let inst = SubwordInstance::for_region(&f);
        let facet = tree_facet(&f, &min_tree(&f));
        assert_eq!(inst.root_function(&facet, 1).unwrap(), Root::simple(3));
        assert_eq!(inst.weight_function(&facet, 1).unwrap(), WeightVector::fundamental(3, 6));
        let conf = inst.root_configuration(&facet);
        assert_eq!(conf.len(), 6);
        assert!(conf.iter().all(Root::is_positive));
        assert!(inst.root_function(&facet, 11).is_err());
        assert!(inst.weight_function(&facet, 0).is_err());
        for k in 1..=10 {
            let w = inst.weight_function(&facet, k).unwrap();
            assert!(w.coords.iter().all(|&c| c == 0 || c == 1));
            assert_eq!(w.coords.iter().sum::<i64>(), inst.word().letters()[k - 1] as i64);
            assert_eq!(inst.all_roots(&facet)[k - 1], inst.root_function(&facet, k).unwrap());
        }
    }

    #[test]
    fn brick_vectors_eneen() {
        let f = region("ENEEN");
        let inst = SubwordInstance::for_region(&f);
        let t0 = tree_facet(&f, &min_tree(&f));
        assert_eq!(inst.brick_vector(&t0), vec![-10, -9, -6, -5, -1, 0]);
        for t in TamariLattice::new(&f).trees() {
            assert_eq!(inst.brick_vector(&tree_facet(&f, t)).iter().sum::<i64>(), -31);
        }
    }

    #[test]
    fn flips_match_rotations() {
        let f = region("ENEEN");
        let inst = SubwordInstance::for_region(&f);
        let lat = TamariLattice::new(&f);
        for e in lat.edges() {
            let lo = tree_facet(&f, lat.tree(e.lower));
            let k = f.position_of(e.node).unwrap();
            let (hi, kp) = inst.flip(&lo, k).unwrap();
            assert_eq!(hi, tree_facet(&f, lat.tree(e.upper)));
            assert_eq!(kp, f.position_of(e.replacement).unwrap());
            assert!(kp > k);
            assert!(inst.root_function(&lo, k).unwrap().is_positive());
            assert_eq!(inst.flip(&hi, kp).unwrap(), (lo, k));
        }
        // the root is in every facet
        let t0 = tree_facet(&f, &min_tree(&f));
        assert_eq!(inst.flip(&t0, 3), Err(Error::NotFlippable(3)));
        assert_eq!(inst.flip(&t0, 5), Err(Error::NotFlippable(5)));
    }

    #[test]
    fn bruhat_cone_eneen() {
        let f = region("ENEEN");
        let inst = SubwordInstance::for_region(&f);
        let full: Vec<(usize, usize)> = inst.bruhat_cone().iter().map(|r| (r.i, r.j)).collect();
        assert_eq!(full, vec![(1, 2), (1, 3), (1, 4), (2, 6), (3, 5), (4, 5), (5, 6)]);
        let trimmed = inst.without_extreme_letters();
        assert_eq!(trimmed.word().letters(), &[3, 2, 4, 3, 2, 4, 3, 4]);
        assert_eq!(trimmed.bruhat_cone(), vec![Root { i: 3, j: 5 }, Root { i: 4, j: 5 }]);
    }

    #[test]
    fn cone_empty_when_w_is_demazure() {
        let word = GenWord::new(vec![1, 2, 1], 2).unwrap();
        let inst = SubwordInstance::new(word.clone(), word.demazure_product()).unwrap();
        assert!(inst.bruhat_cone().is_empty());
    }

    #[test]
    fn brute_force_facets_match_trees() {
        let f = region("ENEEN");
        let inst = SubwordInstance::for_region(&f);
        let mut from_trees: Vec<Facet> = TamariLattice::new(&f).trees().iter().map(|t| tree_facet(&f, t)).collect();
        from_trees.sort();
        assert_eq!(inst.facets_brute_force(), from_trees);
    }
}
