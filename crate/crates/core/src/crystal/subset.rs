use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use super::CrystalGraph;
use crate::error::{Error, Result};
use crate::weyl::ReducedWord;

/// A subset of an ambient crystal's elements.
///
/// Subsets always keep their ambient so that strings, `eps` and `phi` are
/// measured in the ambient crystal rather than in the induced graph.
#[derive(Clone, Debug)]
pub struct Subcrystal {
    ambient: Arc<CrystalGraph>,
    members: BTreeSet<usize>,
}

impl PartialEq for Subcrystal {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) && self.members == other.members
    }
}

impl Subcrystal {
    pub fn new(
        ambient: Arc<CrystalGraph>,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&b) = members.iter().next_back() {
            if b >= ambient.len() {
                return Err(Error::ElementOutOfRange {
                    element: b,
                    len: ambient.len(),
                });
            }
        }
        Ok(Subcrystal { ambient, members })
    }

    pub fn full(ambient: Arc<CrystalGraph>) -> Self {
        let members = (0..ambient.len()).collect();
        Subcrystal { ambient, members }
    }

    pub fn singleton(ambient: Arc<CrystalGraph>, b: usize) -> Result<Self> {
        Self::new(ambient, [b])
    }

    pub(crate) fn from_set(ambient: Arc<CrystalGraph>, members: BTreeSet<usize>) -> Self {
        debug_assert!(members.iter().all(|&b| b < ambient.len()));
        Subcrystal { ambient, members }
    }

    pub fn ambient(&self) -> &Arc<CrystalGraph> {
        &self.ambient
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, b: usize) -> bool {
        self.members.contains(&b)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &Subcrystal) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Same members, viewed inside another ambient of the same size.
    pub fn rehome(&self, ambient: Arc<CrystalGraph>) -> Result<Self> {
        Self::new(ambient, self.members.iter().copied())
    }

    pub fn intersection(&self, other: &Subcrystal) -> Subcrystal {
        Self::from_set(
            self.ambient.clone(),
            self.members.intersection(&other.members).copied().collect(),
        )
    }

    /// `{f_i^m(x) : x in X, 0 <= m <= phi_i(x)}`.
    pub fn closure_fi(&self, i: usize) -> Subcrystal {
        let g = &self.ambient;
        let mut out = self.members.clone();
        for &x in &self.members {
            let mut cur = x;
            while let Some(next) = g.f(cur, i) {
                if !out.insert(next) {
                    // already saturated below this point
                    break;
                }
                cur = next;
            }
        }
        Self::from_set(self.ambient.clone(), out)
    }

    /// `{e_i^m(x) : x in X, 0 <= m <= eps_i(x)}`.
    pub fn closure_ei(&self, i: usize) -> Subcrystal {
        let g = &self.ambient;
        let mut out = self.members.clone();
        for &x in &self.members {
            let mut cur = x;
            while let Some(next) = g.e(cur, i) {
                if !out.insert(next) {
                    break;
                }
                cur = next;
            }
        }
        Self::from_set(self.ambient.clone(), out)
    }

    /// `F_{i_1} ... F_{i_l} (X)`: the last letter is applied first.
    pub fn closure_f(&self, word: &ReducedWord) -> Subcrystal {
        word.letters()
            .iter()
            .rev()
            .fold(self.clone(), |acc, &i| acc.closure_fi(i))
    }

    /// `E_{i_1} ... E_{i_l} (X)`, last letter first.
    pub fn closure_e(&self, word: &ReducedWord) -> Subcrystal {
        word.letters()
            .iter()
            .rev()
            .fold(self.clone(), |acc, &i| acc.closure_ei(i))
    }

    /// Closure under the whole monoid generated by the `f_i`.
    pub fn closure_f_all(&self) -> Subcrystal {
        self.saturate(|g, b, i| g.f(b, i))
    }

    /// Closure under the whole monoid generated by the `e_i`.
    pub fn closure_e_all(&self) -> Subcrystal {
        self.saturate(|g, b, i| g.e(b, i))
    }

    fn saturate(&self, step: impl Fn(&CrystalGraph, usize, usize) -> Option<usize>) -> Subcrystal {
        let g = &self.ambient;
        let mut out = self.members.clone();
        let mut queue: VecDeque<usize> = self.members.iter().copied().collect();
        while let Some(b) = queue.pop_front() {
            for i in 0..g.rank() {
                if let Some(next) = step(g, b, i) {
                    if out.insert(next) {
                        queue.push_back(next);
                    }
                }
            }
        }
        Self::from_set(self.ambient.clone(), out)
    }

    /// Whether `e_i(x)` lies in the set (or is 0) for all members and colors.
    pub fn is_e_closed(&self) -> bool {
        let g = &self.ambient;
        self.members
            .iter()
            .all(|&b| (0..g.rank()).all(|i| g.e(b, i).is_none_or(|a| self.members.contains(&a))))
    }

    /// Members that are highest weight in the ambient crystal.
    pub fn highest_weight_members(&self) -> Vec<usize> {
        self.iter()
            .filter(|&b| self.ambient.is_highest_weight(b))
            .collect()
    }

    /// Connected component of `b` in the ambient crystal.
    pub fn component_of(ambient: &Arc<CrystalGraph>, b: usize) -> Result<Subcrystal> {
        if b >= ambient.len() {
            return Err(Error::ElementOutOfRange {
                element: b,
                len: ambient.len(),
            });
        }
        Ok(Self::singleton(ambient.clone(), b)?.connected_closure())
    }

    /// Fixed point of `F` and `E` closures: the union of the components met.
    pub fn connected_closure(&self) -> Subcrystal {
        let mut cur = self.clone();
        loop {
            let next = cur.closure_f_all().closure_e_all();
            if next.members == cur.members {
                return cur;
            }
            cur = next;
        }
    }

    /// All connected components of the ambient, ordered by smallest element.
    pub fn component_split(ambient: &Arc<CrystalGraph>) -> Vec<Subcrystal> {
        let (labels, count) = ambient.component_labels();
        let mut parts = vec![BTreeSet::new(); count];
        for (b, &l) in labels.iter().enumerate() {
            parts[l].insert(b);
        }
        parts
            .into_iter()
            .map(|m| Self::from_set(ambient.clone(), m))
            .collect()
    }
}
