//! Weyl group elements as integer matrices on the weight lattice.
//!
//! Elements compare by matrix. Lengths and descents are read off the action
//! on positive roots; reduced words come from stripping the smallest right
//! descent, so printed forms are canonical.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::cartan::{CartanData, Weight};
use crate::error::{Error, Result};

/// An element of the Weyl group of a finite-type root system.
#[derive(Clone)]
pub struct WeylElement {
    cartan: Arc<CartanData>,
    /// Row-major `n x n`; column `j` is the image of `omega_j`.
    matrix: Vec<i64>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.cartan.cartan_type() == other.cartan.cartan_type() && self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({})", self.reduce_word())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.reduce_word())
    }
}

/// A sequence of simple-reflection indices (zero-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ReducedWord {
    /// `s1*s2*s1`, or `id` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

impl WeylElement {
    pub fn identity(cartan: &Arc<CartanData>) -> Self {
        let n = cartan.rank();
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1;
        }
        WeylElement {
            cartan: cartan.clone(),
            matrix,
        }
    }

    pub fn simple_reflection(cartan: &Arc<CartanData>, i: usize) -> Result<Self> {
        cartan.check_index(i)?;
        Ok(Self::identity(cartan).right_mul_simple(i))
    }

    /// The product `s_{i_1} ... s_{i_k}` (not necessarily reduced).
    pub fn from_word(cartan: &Arc<CartanData>, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(cartan);
        for &i in word {
            cartan.check_index(i)?;
            w = w.right_mul_simple(i);
        }
        Ok(w)
    }

    /// The longest element: greedily extend by right ascents until none remain.
    pub fn longest(cartan: &Arc<CartanData>) -> Self {
        let mut w = Self::identity(cartan);
        'outer: loop {
            for i in 0..cartan.rank() {
                if !w.is_right_descent(i) {
                    w = w.right_mul_simple(i);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// Parses `s1*s2*s1`, a digit string `121`, or the reserved names `id`,
    /// `e` and `w0`. Letters are one-based.
    pub fn parse(cartan: &Arc<CartanData>, s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "" | "id" | "e" => return Ok(Self::identity(cartan)),
            "w0" => return Ok(Self::longest(cartan)),
            _ => {}
        }
        let letters: Vec<usize> = if s.contains('*') || s.starts_with('s') {
            s.split('*')
                .map(|tok| {
                    let tok = tok.trim();
                    let digits = tok.strip_prefix('s').unwrap_or(tok);
                    digits
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad Weyl letter `{tok}`")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad Weyl letter `{c}`")))
                })
                .collect::<Result<_>>()?
        };
        let word = letters
            .into_iter()
            .map(|l| {
                if l == 0 || l > cartan.rank() {
                    Err(Error::Parse(format!(
                        "letter s{l} out of range for rank {}",
                        cartan.rank()
                    )))
                } else {
                    Ok(l - 1)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_word(cartan, &word)
    }

    pub fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    fn n(&self) -> usize {
        self.cartan.rank()
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n();
        (0..n).all(|r| (0..n).all(|c| self.matrix[r * n + c] == i64::from(r == c)))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.cartan.cartan_type() == other.cartan.cartan_type() {
            Ok(())
        } else {
            Err(Error::CartanMismatch(
                self.cartan.cartan_type().to_string(),
                other.cartan.cartan_type().to_string(),
            ))
        }
    }

    /// `(self * other)(lambda) = self(other(lambda))`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.n();
        let mut matrix = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                matrix[r * n + c] = (0..n)
                    .map(|k| self.matrix[r * n + k] * other.matrix[k * n + c])
                    .sum();
            }
        }
        Ok(WeylElement {
            cartan: self.cartan.clone(),
            matrix,
        })
    }

    pub fn inverse(&self) -> Self {
        let mut word = self.reduce_word().0;
        word.reverse();
        Self::from_word(&self.cartan, &word).expect("letters come from this group")
    }

    pub fn act(&self, lam: &Weight) -> Weight {
        let n = self.n();
        debug_assert_eq!(lam.rank(), n);
        Weight(
            (0..n)
                .map(|r| (0..n).map(|c| self.matrix[r * n + c] * lam.0[c]).sum())
                .collect(),
        )
    }

    /// `w s_i`: only column `i` changes, to `w(omega_i - alpha_i)`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let n = self.n();
        let alpha = self.cartan.simple_root_unchecked(i);
        let image = self.act(&alpha);
        let mut matrix = self.matrix.clone();
        for r in 0..n {
            matrix[r * n + i] -= image.0[r];
        }
        WeylElement {
            cartan: self.cartan.clone(),
            matrix,
        }
    }

    /// `s_i w`: apply `s_i` to every column.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let n = self.n();
        let alpha = self.cartan.simple_root_unchecked(i);
        let mut matrix = self.matrix.clone();
        for c in 0..n {
            let m = matrix[i * n + c];
            if m != 0 {
                for r in 0..n {
                    matrix[r * n + c] -= m * alpha.0[r];
                }
            }
        }
        WeylElement {
            cartan: self.cartan.clone(),
            matrix,
        }
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.cartan
            .positive_root_weights()
            .iter()
            .filter(|beta| !self.cartan.is_positive_root(&self.act(beta)))
            .count()
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        let alpha = self.cartan.simple_root_unchecked(i);
        !self.cartan.is_positive_root(&self.act(&alpha))
    }

    /// `{i : l(w s_i) < l(w)}`.
    pub fn right_descents(&self) -> BTreeSet<usize> {
        (0..self.n())
            .filter(|&i| self.is_right_descent(i))
            .collect()
    }

    /// `{i : l(s_i w) < l(w)}`, computed as right descents of the inverse.
    pub fn left_descents(&self) -> BTreeSet<usize> {
        self.inverse().right_descents()
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        // s_i w < w iff w^{-1}(alpha_i) < 0.
        self.inverse().is_right_descent(i)
    }

    /// Canonical reduced word: repeatedly strip the smallest right descent.
    pub fn reduce_word(&self) -> ReducedWord {
        let mut letters = Vec::new();
        let mut w = self.clone();
        while let Some(i) = (0..self.n()).find(|&i| w.is_right_descent(i)) {
            letters.push(i);
            w = w.right_mul_simple(i);
        }
        letters.reverse();
        ReducedWord(letters)
    }

    /// Every reduced word for this element, sorted lexicographically.
    pub fn reduced_words(&self) -> Vec<ReducedWord> {
        fn go(w: &WeylElement, suffix: &mut Vec<usize>, out: &mut Vec<ReducedWord>) {
            let descents = w.right_descents();
            if descents.is_empty() {
                let mut word = suffix.clone();
                word.reverse();
                out.push(ReducedWord(word));
                return;
            }
            for i in descents {
                suffix.push(i);
                go(&w.right_mul_simple(i), suffix, out);
                suffix.pop();
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Bruhat order `self <= other`, by the descent recursion: for a right
    /// descent `s` of `w`, `u <= w` iff `us <= ws` (when `s` is also a
    /// descent of `u`) or `u <= ws` (otherwise).
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        assert_eq!(
            self.cartan.cartan_type(),
            other.cartan.cartan_type(),
            "Bruhat comparison across Weyl groups"
        );
        let mut u = self.clone();
        let mut w = other.clone();
        loop {
            let Some(s) = (0..w.n()).find(|&i| w.is_right_descent(i)) else {
                return u.is_identity();
            };
            if u.is_right_descent(s) {
                u = u.right_mul_simple(s);
            }
            w = w.right_mul_simple(s);
        }
    }

    /// Whether every letter of the canonical reduced word lies in `generators`.
    pub fn in_parabolic(&self, generators: &BTreeSet<usize>) -> bool {
        self.reduce_word().0.iter().all(|i| generators.contains(i))
    }

    /// `min` coset representative of `w W_J`.
    pub fn min_coset_rep_for(&self, generators: &BTreeSet<usize>) -> Self {
        let mut w = self.clone();
        while let Some(&i) = generators.iter().find(|&&i| w.is_right_descent(i)) {
            w = w.right_mul_simple(i);
        }
        w
    }

    /// `max` coset representative of `w W_J`.
    pub fn max_coset_rep_for(&self, generators: &BTreeSet<usize>) -> Self {
        let mut w = self.clone();
        while let Some(&i) = generators.iter().find(|&&i| !w.is_right_descent(i)) {
            w = w.right_mul_simple(i);
        }
        w
    }

    /// Minimal-length representative of `w W_lambda`.
    pub fn min_coset_rep(&self, lam: &Weight) -> Result<Self> {
        Ok(self.min_coset_rep_for(&stabilizer_generators(&self.cartan, lam)?))
    }

    /// Maximal-length representative of `w W_lambda`.
    pub fn max_coset_rep(&self, lam: &Weight) -> Result<Self> {
        Ok(self.max_coset_rep_for(&stabilizer_generators(&self.cartan, lam)?))
    }
}

/// `{i : <alpha_i^vee, lambda> = 0}`, the generators of `W_lambda`.
pub fn stabilizer_generators(cartan: &CartanData, lam: &Weight) -> Result<BTreeSet<usize>> {
    cartan.check_dominant(lam)?;
    Ok((0..cartan.rank()).filter(|&i| lam.0[i] == 0).collect())
}

/// Membership of `w` in the standard parabolic subgroup generated by `generators`.
pub fn parabolic_membership(w: &WeylElement, generators: &BTreeSet<usize>) -> bool {
    w.in_parabolic(generators)
}

/// `floor(w)^lambda` lies in `W_sigma` for `sigma = ceil(u)^mu`, where
/// `W_sigma` is generated by the left descents of `sigma`.
pub fn kouno_criterion(
    lam: &Weight,
    w: &WeylElement,
    mu: &Weight,
    u: &WeylElement,
) -> Result<bool> {
    w.check_same(u)?;
    let sigma = u.max_coset_rep(mu)?;
    let generators = sigma.left_descents();
    let floor_w = w.min_coset_rep(lam)?;
    Ok(parabolic_membership(&floor_w, &generators))
}

/// All elements by breadth-first search from the identity, ordered by length
/// and then by canonical reduced word. Refuses groups larger than `limit`.
pub fn enumerate_group(cartan: &Arc<CartanData>, limit: usize) -> Result<Vec<WeylElement>> {
    let id = WeylElement::identity(cartan);
    let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for i in 0..cartan.rank() {
            let next = w.right_mul_simple(i);
            if !seen.contains(&next) {
                if seen.len() >= limit {
                    return Err(Error::GroupTooLarge(limit));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        out.push(w);
    }
    let mut keyed: Vec<(usize, ReducedWord, WeylElement)> = out
        .into_iter()
        .map(|w| (w.length(), w.reduce_word(), w))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(keyed.into_iter().map(|(_, _, w)| w).collect())
}

/// Default cap for [`enumerate_group`]; covers every group through rank 4.
pub const DEFAULT_GROUP_LIMIT: usize = 2_000_000;

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> Arc<CartanData> {
        CartanData::from_label(&format!("A{n}")).unwrap()
    }

    fn word(c: &Arc<CartanData>, letters: &[usize]) -> WeylElement {
        WeylElement::from_word(c, letters).unwrap()
    }

    #[test]
    fn multiplication_and_braid_relation() {
        let c = a(2);
        let s1 = WeylElement::simple_reflection(&c, 0).unwrap();
        let s2 = WeylElement::simple_reflection(&c, 1).unwrap();
        assert!(s1.multiply(&s1).unwrap().is_identity());
        assert_eq!(s1.multiply(&s2).unwrap().length(), 2);
        let lhs = s1.multiply(&s2).unwrap().multiply(&s1).unwrap();
        let rhs = s2.multiply(&s1).unwrap().multiply(&s2).unwrap();
        assert_eq!(lhs, rhs);
        let g2 = CartanData::from_label("G2").unwrap();
        let t = WeylElement::identity(&g2);
        assert!(matches!(s1.multiply(&t), Err(Error::CartanMismatch(..))));
    }

    #[test]
    fn product_acts_by_composition() {
        let c = a(2);
        let s1 = WeylElement::simple_reflection(&c, 0).unwrap();
        let s2 = WeylElement::simple_reflection(&c, 1).unwrap();
        let lam = Weight::new(vec![3, -1]);
        let composed = s1.act(&s2.act(&lam));
        assert_eq!(s1.multiply(&s2).unwrap().act(&lam), composed);
        assert_eq!(
            c.reflect(0, &c.reflect(1, &lam).unwrap()).unwrap(),
            composed
        );
    }

    #[test]
    fn lengths() {
        let c = a(2);
        assert_eq!(WeylElement::identity(&c).length(), 0);
        assert_eq!(word(&c, &[0, 1, 0]).length(), 3);
        assert_eq!(WeylElement::longest(&c), word(&c, &[0, 1, 0]));
        let g2 = CartanData::from_label("G2").unwrap();
        assert_eq!(WeylElement::longest(&g2).length(), 6);
    }

    #[test]
    fn g2_longest_element_by_brute_force() {
        // (s1 s2)^3 has six letters; no word of length < 6 equals it.
        let g2 = CartanData::from_label("G2").unwrap();
        let w0 = word(&g2, &[0, 1, 0, 1, 0, 1]);
        assert_eq!(w0, WeylElement::longest(&g2));
        assert_eq!(w0.length(), 6);
        for len in 0..6usize {
            for mask in 0..(1usize << len) {
                let letters: Vec<usize> = (0..len).map(|k| (mask >> k) & 1).collect();
                assert_ne!(word(&g2, &letters), w0);
            }
        }
        // w0 acts as -1 in type G2.
        assert_eq!(w0.act(&Weight::new(vec![1, 0])), Weight::new(vec![-1, 0]));
    }

    #[test]
    fn descents_and_reduced_words() {
        let c = a(2);
        let id = WeylElement::identity(&c);
        assert!(id.right_descents().is_empty());
        assert!(id.reduce_word().is_empty());
        let s1s2 = word(&c, &[0, 1]);
        assert_eq!(s1s2.right_descents(), BTreeSet::from([1]));
        assert_eq!(s1s2.left_descents(), BTreeSet::from([0]));
        assert_eq!(s1s2.reduce_word(), ReducedWord(vec![0, 1]));
        assert_eq!(s1s2.to_string(), "s1*s2");
        let w0 = WeylElement::longest(&c);
        assert_eq!(w0.right_descents(), BTreeSet::from([0, 1]));
        assert_eq!(
            w0.reduced_words(),
            vec![ReducedWord(vec![0, 1, 0]), ReducedWord(vec![1, 0, 1])]
        );
        let a1 = a(1);
        assert_eq!(
            WeylElement::simple_reflection(&a1, 0)
                .unwrap()
                .reduce_word(),
            ReducedWord(vec![0])
        );
    }

    #[test]
    fn a2_enumeration_lengths() {
        // Oracle: the six elements of S_3 and their inversion counts.
        let c = a(2);
        let all = enumerate_group(&c, 100).unwrap();
        assert_eq!(all.len(), 6);
        let lengths: Vec<usize> = all.iter().map(|w| w.length()).collect();
        assert_eq!(lengths, vec![0, 1, 1, 2, 2, 3]);
        for w in &all {
            assert_eq!(w.length(), w.reduce_word().len());
            assert_eq!(
                WeylElement::from_word(&c, w.reduce_word().letters()).unwrap(),
                *w
            );
        }
    }

    #[test]
    fn group_orders() {
        for (label, order) in [
            ("A3", 24),
            ("B3", 48),
            ("C3", 48),
            ("G2", 12),
            ("D4", 192),
            ("F4", 1152),
        ] {
            let c = CartanData::from_label(label).unwrap();
            let all = enumerate_group(&c, 10_000).unwrap();
            assert_eq!(all.len(), order, "{label}");
            let w0 = WeylElement::longest(&c);
            assert_eq!(w0.length(), c.positive_roots().len());
        }
        let a3 = a(3);
        assert!(matches!(
            enumerate_group(&a3, 10),
            Err(Error::GroupTooLarge(10))
        ));
    }

    #[test]
    fn parse_words() {
        let c = a(2);
        assert_eq!(
            WeylElement::parse(&c, "s1*s2*s1").unwrap(),
            WeylElement::longest(&c)
        );
        assert_eq!(
            WeylElement::parse(&c, "121").unwrap(),
            WeylElement::longest(&c)
        );
        assert_eq!(
            WeylElement::parse(&c, "w0").unwrap(),
            WeylElement::longest(&c)
        );
        assert!(WeylElement::parse(&c, "id").unwrap().is_identity());
        assert!(WeylElement::parse(&c, "e").unwrap().is_identity());
        assert_eq!(WeylElement::parse(&c, "s2").unwrap(), word(&c, &[1]));
        assert_eq!(WeylElement::parse(&c, "1").unwrap(), word(&c, &[0]));
        assert!(WeylElement::parse(&c, "s3").is_err());
        assert!(WeylElement::parse(&c, "s0").is_err());
        assert!(WeylElement::parse(&c, "1x").is_err());
    }

    /// Oracle: `u <= w` iff some subword of a reduced word of `w` is a
    /// reduced word of `u`.
    fn subword_lower_set(w: &WeylElement) -> HashSet<WeylElement> {
        let letters = w.reduce_word().0;
        let mut out = HashSet::new();
        for mask in 0..(1usize << letters.len()) {
            let sub: Vec<usize> = letters
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &l)| l)
                .collect();
            let u = WeylElement::from_word(w.cartan(), &sub).unwrap();
            if u.length() == sub.len() {
                out.insert(u);
            }
        }
        out
    }

    #[test]
    fn bruhat_examples() {
        let c = a(2);
        let s1 = word(&c, &[0]);
        let s2 = word(&c, &[1]);
        assert!(s1.bruhat_leq(&word(&c, &[1, 0])));
        assert!(!s1.bruhat_leq(&s2));
        assert!(word(&c, &[0, 1]).bruhat_leq(&word(&c, &[0, 1, 0])));
        for w in enumerate_group(&c, 10).unwrap() {
            assert!(WeylElement::identity(&c).bruhat_leq(&w));
        }
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for n in [2, 3] {
            let c = a(n);
            let all = enumerate_group(&c, 100).unwrap();
            let mut pairs = 0;
            for w in &all {
                let lower = subword_lower_set(w);
                for u in &all {
                    assert_eq!(u.bruhat_leq(w), lower.contains(u), "{u} <= {w}");
                    pairs += 1;
                }
            }
            assert_eq!(pairs, all.len() * all.len());
        }
    }

    #[test]
    fn stabilizers() {
        let c = a(2);
        assert!(stabilizer_generators(&c, &Weight::new(vec![1, 1]))
            .unwrap()
            .is_empty());
        assert_eq!(
            stabilizer_generators(&c, &Weight::new(vec![1, 0])).unwrap(),
            BTreeSet::from([1])
        );
        assert_eq!(
            stabilizer_generators(&c, &Weight::new(vec![0, 0])).unwrap(),
            BTreeSet::from([0, 1])
        );
        assert!(matches!(
            stabilizer_generators(&c, &Weight::new(vec![-1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn coset_representatives() {
        let c = a(2);
        let om1 = Weight::new(vec![1, 0]);
        let om2 = Weight::new(vec![0, 1]);
        let rho = Weight::new(vec![1, 1]);
        assert_eq!(
            word(&c, &[0, 1]).min_coset_rep(&om1).unwrap(),
            word(&c, &[0])
        );
        assert_eq!(
            word(&c, &[0]).max_coset_rep(&om1).unwrap(),
            word(&c, &[0, 1])
        );
        assert_eq!(
            word(&c, &[1]).max_coset_rep(&om2).unwrap(),
            word(&c, &[1, 0])
        );
        let id = WeylElement::identity(&c);
        for w in enumerate_group(&c, 10).unwrap() {
            assert_eq!(w.min_coset_rep(&rho).unwrap(), w);
            assert_eq!(w.max_coset_rep(&rho).unwrap(), w);
        }
        assert_eq!(id.min_coset_rep(&om1).unwrap(), id);
    }

    #[test]
    fn coset_properties_exhaustive() {
        for n in [2, 3] {
            let c = a(n);
            let all = enumerate_group(&c, 100).unwrap();
            let weights: Vec<Weight> = (0..1usize << n)
                .map(|mask| {
                    Weight::new((0..n).map(|k| ((mask >> k) & 1) as i64).collect::<Vec<_>>())
                })
                .collect();
            for lam in &weights {
                let j = stabilizer_generators(&c, lam).unwrap();
                for w in &all {
                    let lo = w.min_coset_rep(lam).unwrap();
                    let hi = w.max_coset_rep(lam).unwrap();
                    assert_eq!(lo.min_coset_rep(lam).unwrap(), lo);
                    assert_eq!(hi.max_coset_rep(lam).unwrap(), hi);
                    assert!(lo.bruhat_leq(w) && w.bruhat_leq(&hi));
                    let ratio = lo.inverse().multiply(&hi).unwrap();
                    assert!(parabolic_membership(&ratio, &j));
                    // Brute-force oracle over the coset w W_lambda.
                    let coset: Vec<&WeylElement> = all
                        .iter()
                        .filter(|v| parabolic_membership(&w.inverse().multiply(v).unwrap(), &j))
                        .collect();
                    let min_len = coset.iter().map(|v| v.length()).min().unwrap();
                    let max_len = coset.iter().map(|v| v.length()).max().unwrap();
                    assert_eq!(lo.length(), min_len);
                    assert_eq!(hi.length(), max_len);
                    for v in &coset {
                        assert_eq!(lam.clone(), w.inverse().multiply(v).unwrap().act(lam));
                    }
                }
            }
        }
    }

    #[test]
    fn parabolic_examples() {
        let c = a(2);
        let id = WeylElement::identity(&c);
        assert!(parabolic_membership(&id, &BTreeSet::new()));
        assert!(!parabolic_membership(&word(&c, &[1]), &BTreeSet::from([0])));
        assert!(parabolic_membership(
            &word(&c, &[0, 1, 0]),
            &BTreeSet::from([0, 1])
        ));
    }

    #[test]
    fn kouno_examples() {
        let c = a(2);
        let om1 = Weight::new(vec![1, 0]);
        let om2 = Weight::new(vec![0, 1]);
        let rho = Weight::new(vec![1, 1]);
        let s1 = word(&c, &[0]);
        let s2 = word(&c, &[1]);
        let s1s2 = word(&c, &[0, 1]);
        assert!(!kouno_criterion(&om2, &s2, &om1, &s1).unwrap());
        assert!(!kouno_criterion(&rho, &s1s2, &rho, &s1s2).unwrap());
        let id = WeylElement::identity(&c);
        for u in enumerate_group(&c, 10).unwrap() {
            for lam in [&om1, &om2, &rho] {
                assert!(kouno_criterion(lam, &id, &rho, &u).unwrap());
            }
        }
    }

    #[test]
    fn kouno_is_coset_invariant() {
        let c = a(2);
        let all = enumerate_group(&c, 10).unwrap();
        let weights = [
            Weight::new(vec![1, 0]),
            Weight::new(vec![0, 1]),
            Weight::new(vec![1, 1]),
            Weight::new(vec![0, 0]),
        ];
        for lam in &weights {
            let jl = stabilizer_generators(&c, lam).unwrap();
            for mu in &weights {
                let jm = stabilizer_generators(&c, mu).unwrap();
                for w in &all {
                    for u in &all {
                        let base = kouno_criterion(lam, w, mu, u).unwrap();
                        for w2 in all.iter().filter(|v| {
                            parabolic_membership(&w.inverse().multiply(v).unwrap(), &jl)
                        }) {
                            for u2 in all.iter().filter(|v| {
                                parabolic_membership(&u.inverse().multiply(v).unwrap(), &jm)
                            }) {
                                assert_eq!(kouno_criterion(lam, w2, mu, u2).unwrap(), base);
                            }
                        }
                    }
                }
            }
        }
    }
}
