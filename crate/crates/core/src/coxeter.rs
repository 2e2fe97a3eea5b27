//! The symmetric group `S_{n+1}` as a Coxeter group of type `A_n`.
//!
//! Words in the simple transpositions `s_p = (p, p+1)` evaluate left to right
//! on positions: multiplying by `s_p` on the right swaps entries `p` and `p+1`
//! of the one-line window. Permutations act on roots and weights by permuting
//! coordinates, so `w(e_i - e_j) = e_{w(i)} - e_{w(j)}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=k` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation { window: (1..=size).collect() }
    }

    pub fn from_window(window: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; window.len()];
        for &v in &window {
            if v == 0 || v > window.len() || seen[v - 1] {
                return Err(Error::NotAPermutation(window));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { window })
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// Number of points permuted (`n + 1` for `S_{n+1}`).
    pub fn size(&self) -> usize {
        self.window.len()
    }

    /// Image of the 1-based index `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { window: inv }
    }

    /// Inversion count, which equals the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right multiplication by `s_p`: swaps positions `p` and `p+1`.
    pub fn times_simple(&self, p: usize) -> Self {
        let mut window = self.window.clone();
        window.swap(p - 1, p);
        Permutation { window }
    }

    /// Left multiplication by the reflection `s_β`, the transposition of the
    /// values `β.i` and `β.j`.
    pub fn reflect_left(&self, beta: Root) -> Self {
        let window = self
            .window
            .iter()
            .map(|&v| {
                if v == beta.i {
                    beta.j
                } else if v == beta.j {
                    beta.i
                } else {
                    v
                }
            })
            .collect();
        Permutation { window }
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        check_same_size(self.size(), other.size())?;
        Ok(Permutation { window: other.window.iter().map(|&v| self.apply(v)).collect() })
    }

    pub fn act_on_root(&self, r: Root) -> Root {
        Root { i: self.apply(r.i), j: self.apply(r.j) }
    }

    pub fn act_on_weight(&self, v: &WeightVector) -> Result<WeightVector> {
        check_same_size(self.size(), v.coords.len())?;
        let mut out = vec![0; v.coords.len()];
        for (i, &c) in v.coords.iter().enumerate() {
            out[self.window[i] - 1] = c;
        }
        Ok(WeightVector { coords: out })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

fn check_same_size(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::RankMismatch { left, right });
    }
    Ok(())
}

/// The root `e_i - e_j` with 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize, size: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > size || j > size {
            return Err(Error::InvalidRoot(i, j, size));
        }
        Ok(Root { i, j })
    }

    /// The simple root `α_p = e_p - e_{p+1}`.
    pub fn simple(p: usize) -> Self {
        Root { i: p, j: p + 1 }
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn negate(&self) -> Self {
        Root { i: self.j, j: self.i }
    }

    pub fn to_vector(&self, size: usize) -> Vec<i64> {
        let mut v = vec![0; size];
        v[self.i - 1] = 1;
        v[self.j - 1] = -1;
        v
    }

    /// `⟨x, e_i - e_j⟩`.
    pub fn pair(&self, x: &[i64]) -> i64 {
        x[self.i - 1] - x[self.j - 1]
    }
}

impl std::ops::Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        self.negate()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub coords: Vec<i64>,
}

impl WeightVector {
    /// `ω_p = e_1 + ... + e_p` in `R^size`.
    pub fn fundamental(p: usize, size: usize) -> Self {
        WeightVector { coords: (0..size).map(|k| i64::from(k < p)).collect() }
    }
}

/// A word in the simple generators `s_1..s_rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenWord {
    letters: Vec<usize>,
    rank: usize,
}

impl GenWord {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&p| p == 0 || p > rank) {
            return Err(Error::GeneratorOutOfRange { index: bad, rank });
        }
        Ok(GenWord { letters, rank })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Subword on the given 0-based indices, in increasing order.
    pub fn subword<I: IntoIterator<Item = usize>>(&self, indices: I) -> GenWord {
        GenWord { letters: indices.into_iter().map(|k| self.letters[k]).collect(), rank: self.rank }
    }

    pub fn evaluate(&self) -> Permutation {
        evaluate_letters(&self.letters, self.rank)
    }

    pub fn is_reduced(&self) -> bool {
        self.evaluate().length() == self.letters.len()
    }

    /// Fold that multiplies by a letter only when the length goes up.
    pub fn demazure_product(&self) -> Permutation {
        let mut state = Permutation::identity(self.rank + 1);
        for &p in &self.letters {
            // s_p increases length iff the window is ascending at p
            if state.window[p - 1] < state.window[p] {
                state = state.times_simple(p);
            }
        }
        state
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "s{p}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn evaluate_letters(letters: &[usize], rank: usize) -> Permutation {
    let mut w = Permutation::identity(rank + 1);
    for &p in letters {
        w.window.swap(p - 1, p);
    }
    w
}

/// Bruhat order via the rank-matrix criterion: `u ≤ w` iff for all `a, b`,
/// `#{c ≤ a : u(c) ≥ b} ≤ #{c ≤ a : w(c) ≥ b}`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    check_same_size(u.size(), w.size())?;
    let k = u.size();
    let mut cu = vec![0usize; k + 2];
    let mut cw = vec![0usize; k + 2];
    for a in 0..k {
        // running counts of prefix values ≥ b, for every b at once
        cu[1..=u.window[a]].iter_mut().for_each(|c| *c += 1);
        cw[1..=w.window[a]].iter_mut().for_each(|c| *c += 1);
        if (1..=k).any(|b| cu[b] > cw[b]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `w ⋖ s_β w` in Bruhat order, with `s_β` acting on the left.
pub fn bruhat_cover_up(w: &Permutation, beta: Root) -> Result<bool> {
    if beta.i == 0 || beta.j == 0 || beta.i.max(beta.j) > w.size() || beta.i == beta.j {
        return Err(Error::InvalidRoot(beta.i, beta.j, w.size()));
    }
    if !beta.is_positive() {
        return Err(Error::NotPositive(beta.i, beta.j));
    }
    Ok(w.reflect_left(beta).length() == w.length() + 1)
}

/// All positive roots of `S_size` in lexicographic order.
pub fn positive_roots(size: usize) -> impl Iterator<Item = Root> {
    (1..=size).flat_map(move |i| (i + 1..=size).map(move |j| Root { i, j }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(w: &[usize]) -> Permutation {
        Permutation::from_window(w.to_vec()).unwrap()
    }

    fn word(letters: &[usize], rank: usize) -> GenWord {
        GenWord::new(letters.to_vec(), rank).unwrap()
    }

    const Q_ENEEN: [usize; 10] = [3, 2, 1, 4, 3, 2, 4, 3, 5, 4];

    #[test]
    fn evaluate_examples() {
        assert_eq!(word(&[], 5).evaluate(), Permutation::identity(6));
        assert_eq!(word(&[2, 3, 2, 4], 5).evaluate(), perm(&[1, 4, 3, 5, 2, 6]));
        assert_eq!(word(&[3, 2, 3, 4], 5).evaluate(), perm(&[1, 4, 3, 5, 2, 6]));
    }

    #[test]
    fn out_of_range_letter() {
        assert_eq!(GenWord::new(vec![1, 6], 5), Err(Error::GeneratorOutOfRange { index: 6, rank: 5 }));
        assert!(GenWord::new(vec![0], 5).is_err());
        assert!(Permutation::from_window(vec![1, 1, 2]).is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(perm(&[1, 4, 3, 5, 2, 6]).length(), 4);
        assert_eq!(perm(&[2, 1]).length(), 1);
    }

    #[test]
    fn reducedness() {
        assert!(word(&[2, 3, 2, 4], 5).is_reduced());
        assert!(!word(&[1, 1], 5).is_reduced());
        // Q_nu for ENEEN evaluates to a permutation of length 10.
        let q = word(&Q_ENEEN, 5);
        assert_eq!(q.evaluate().length(), 10);
        assert!(q.is_reduced());
    }

    #[test]
    fn cover_examples() {
        let w = perm(&[1, 4, 3, 5, 2, 6]);
        assert!(bruhat_cover_up(&Permutation::identity(6), Root::simple(3)).unwrap());
        assert!(bruhat_cover_up(&w, Root { i: 4, j: 5 }).unwrap());
        // [2,4,3,5,1,6] has length 5
        assert!(bruhat_cover_up(&w, Root { i: 1, j: 2 }).unwrap());
        assert!(!bruhat_cover_up(&w, Root { i: 2, j: 4 }).unwrap());
        assert_eq!(bruhat_cover_up(&w, Root { i: 5, j: 4 }), Err(Error::NotPositive(5, 4)));
    }

    #[test]
    fn demazure_examples() {
        assert_eq!(word(&[], 3).demazure_product(), Permutation::identity(4));
        assert_eq!(word(&[1, 1, 2, 1], 2).demazure_product(), perm(&[3, 2, 1]));
        let w = word(&[2, 3, 2, 4], 5);
        assert_eq!(w.demazure_product(), w.evaluate());
        let dem = word(&Q_ENEEN, 5).demazure_product();
        assert_eq!(dem, perm(&[4, 5, 3, 6, 1, 2]));
        let w_nu = perm(&[1, 4, 3, 5, 2, 6]);
        assert!(bruhat_leq(&w_nu, &dem).unwrap());
        for beta in [Root { i: 4, j: 5 }, Root { i: 3, j: 5 }] {
            assert!(bruhat_cover_up(&w_nu, beta).unwrap());
            assert!(bruhat_leq(&w_nu.reflect_left(beta), &dem).unwrap());
        }
    }

    #[test]
    fn root_and_weight_actions() {
        let s3 = word(&[3], 5).evaluate();
        assert_eq!(s3.act_on_root(Root::simple(4)), Root { i: 3, j: 5 });
        let s1 = word(&[1], 5).evaluate();
        assert_eq!(s1.act_on_root(Root::simple(1)), Root { i: 2, j: 1 });
        let id = Permutation::identity(6);
        assert_eq!(id.act_on_root(Root { i: 2, j: 5 }), Root { i: 2, j: 5 });

        let w2 = WeightVector::fundamental(2, 6);
        assert_eq!(id.act_on_weight(&w2).unwrap().coords, vec![1, 1, 0, 0, 0, 0]);
        let s2 = word(&[2], 5).evaluate();
        assert_eq!(s2.act_on_weight(&w2).unwrap().coords, vec![1, 0, 1, 0, 0, 0]);
        let s3s2 = word(&[3, 2], 5).evaluate();
        assert_eq!(s3s2.act_on_weight(&w2).unwrap().coords, vec![1, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn rank_mismatch() {
        assert_eq!(
            bruhat_leq(&Permutation::identity(3), &Permutation::identity(4)),
            Err(Error::RankMismatch { left: 3, right: 4 })
        );
    }
}
