//! Finite normal crystals stored as weighted, colored graphs.
//!
//! Only `f_i` edges are stored; `e_i` is their inverse, and `0` is the
//! absence of an edge. `epsilon_i` / `phi_i` are always obtained by walking
//! strings, never cached on elements.

mod io;
mod iso;
mod subset;
mod validate;

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanData, Weight};
use crate::error::{Error, Result};

pub use io::{CrystalJson, DotStyle, EdgeJson, ElementJson, SubsetJson};
pub use iso::{canonical_component_iso, ComponentIso, IsoFailure};
pub use subset::Subcrystal;
pub use validate::{validate, Axiom, ValidationReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Tableaux,
    Tensor,
    Sum,
    Import,
    Component,
    Modified,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::Tableaux => "tableaux",
            Provenance::Tensor => "tensor",
            Provenance::Sum => "sum",
            Provenance::Import => "import",
            Provenance::Component => "component",
            Provenance::Modified => "modified",
        };
        f.write_str(s)
    }
}

/// Factor sizes of a tensor product; elements are laid out row-major,
/// left factor outer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorLayout {
    pub left_len: usize,
    pub right_len: usize,
}

/// `left ⊗ right`, as indices into the two factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement {
    pub left: usize,
    pub right: usize,
}

impl TensorLayout {
    pub fn index(&self, left: usize, right: usize) -> usize {
        left * self.right_len + right
    }

    pub fn split(&self, b: usize) -> TensorElement {
        TensorElement {
            left: b / self.right_len,
            right: b % self.right_len,
        }
    }
}

/// A finite crystal graph.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    cartan: Arc<CartanData>,
    weights: Vec<Weight>,
    f: Vec<Vec<Option<usize>>>,
    e: Vec<Vec<Option<usize>>>,
    provenance: Provenance,
    layout: Option<TensorLayout>,
}

impl CrystalGraph {
    /// Builds a graph from weights and `(color, from, to)` edges for `f`.
    ///
    /// Fails when two `f_i` edges leave or enter the same element, since
    /// then `e_i` and `f_i` cannot be mutually inverse partial maps.
    pub fn from_edges(
        cartan: Arc<CartanData>,
        weights: Vec<Weight>,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
        provenance: Provenance,
    ) -> Result<Self> {
        let n = cartan.rank();
        let len = weights.len();
        for wt in &weights {
            cartan.check_weight(wt)?;
        }
        let mut f = vec![vec![None; len]; n];
        let mut e = vec![vec![None; len]; n];
        for (i, from, to) in edges {
            cartan.check_index(i)?;
            for b in [from, to] {
                if b >= len {
                    return Err(Error::ElementOutOfRange { element: b, len });
                }
            }
            if f[i][from].is_some() {
                return Err(Error::InvalidCrystal(format!(
                    "C3: two f_{} edges leave element {from}",
                    i + 1
                )));
            }
            if e[i][to].is_some() {
                return Err(Error::InvalidCrystal(format!(
                    "C3: two f_{} edges enter element {to}",
                    i + 1
                )));
            }
            f[i][from] = Some(to);
            e[i][to] = Some(from);
        }
        Ok(CrystalGraph {
            cartan,
            weights,
            f,
            e,
            provenance,
            layout: None,
        })
    }

    pub fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn tensor_layout(&self) -> Option<TensorLayout> {
        self.layout
    }

    pub fn weight(&self, b: usize) -> &Weight {
        &self.weights[b]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn f(&self, b: usize, i: usize) -> Option<usize> {
        self.f[i][b]
    }

    pub fn e(&self, b: usize, i: usize) -> Option<usize> {
        self.e[i][b]
    }

    /// Length of the `e_i` chain above `b`. Chains are capped at `len()`
    /// steps so a cyclic (invalid) graph cannot loop forever.
    pub fn eps(&self, b: usize, i: usize) -> usize {
        chain_len(&self.e[i], b)
    }

    /// Length of the `f_i` chain below `b`.
    pub fn phi(&self, b: usize, i: usize) -> usize {
        chain_len(&self.f[i], b)
    }

    /// `(eps_i(b), phi_i(b))` for every element, in one pass over the strings.
    pub fn string_data(&self, i: usize) -> Vec<(usize, usize)> {
        let mut out = vec![(usize::MAX, usize::MAX); self.len()];
        for string in self.i_strings(i) {
            let len = string.len();
            for (k, &b) in string.iter().enumerate() {
                out[b] = (k, len - 1 - k);
            }
        }
        // Elements on cycles are not on any string; fall back to walking.
        for (b, slot) in out.iter_mut().enumerate() {
            if slot.0 == usize::MAX {
                *slot = (self.eps(b, i), self.phi(b, i));
            }
        }
        out
    }

    /// All `i`-strings, each listed from its top (`e_i` undefined) downward.
    /// Elements on `f_i`-cycles belong to no string.
    pub fn i_strings(&self, i: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for b in 0..self.len() {
            if self.e[i][b].is_none() {
                let mut string = vec![b];
                let mut cur = b;
                while let Some(next) = self.f[i][cur] {
                    string.push(next);
                    cur = next;
                }
                out.push(string);
            }
        }
        out
    }

    /// Every `f` edge as `(color, from, to)`, sorted by color then source.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.f.iter().enumerate().flat_map(|(i, fi)| {
            fi.iter()
                .enumerate()
                .filter_map(move |(b, t)| t.map(|t| (i, b, t)))
        })
    }

    pub fn is_highest_weight(&self, b: usize) -> bool {
        (0..self.rank()).all(|i| self.e[i][b].is_none())
    }

    /// Elements with every `e_i` undefined, with their weights.
    pub fn highest_weight_elements(&self) -> Vec<(usize, Weight)> {
        (0..self.len())
            .filter(|&b| self.is_highest_weight(b))
            .map(|b| (b, self.weights[b].clone()))
            .collect()
    }

    /// The unique highest-weight element of a connected crystal.
    pub fn top(&self) -> Result<usize> {
        let hw = self.highest_weight_elements();
        match hw.as_slice() {
            [(b, _)] if self.is_connected() => Ok(*b),
            _ => Err(Error::Hypothesis(format!(
                "expected a connected crystal with one highest-weight element, found {} components and {} highest-weight elements",
                self.component_labels().1,
                hw.len()
            ))),
        }
    }

    /// Component id per element (undirected reachability) and the count.
    /// Ids are assigned in order of each component's smallest element.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.len()];
        let mut count = 0;
        for start in 0..self.len() {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(b) = queue.pop_front() {
                for i in 0..self.rank() {
                    for next in [self.f[i][b], self.e[i][b]].into_iter().flatten() {
                        if label[next] == usize::MAX {
                            label[next] = count;
                            queue.push_back(next);
                        }
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    /// Tensor product with the convention
    /// `f_i(b1 ⊗ b2) = f_i(b1) ⊗ b2` if `eps_i(b2) < phi_i(b1)`, else `b1 ⊗ f_i(b2)`.
    pub fn tensor(&self, other: &CrystalGraph) -> Result<CrystalGraph> {
        check_same(&self.cartan, &other.cartan)?;
        let layout = TensorLayout {
            left_len: self.len(),
            right_len: other.len(),
        };
        let mut weights = Vec::with_capacity(self.len() * other.len());
        for a in 0..self.len() {
            for b in 0..other.len() {
                weights.push(&self.weights[a] + &other.weights[b]);
            }
        }
        let mut edges = Vec::new();
        for i in 0..self.rank() {
            let left = self.string_data(i);
            let right = other.string_data(i);
            for (a, &(_, phi_a)) in left.iter().enumerate() {
                for (b, &(eps_b, _)) in right.iter().enumerate() {
                    let target = if eps_b < phi_a {
                        self.f[i][a].map(|fa| layout.index(fa, b))
                    } else {
                        other.f[i][b].map(|fb| layout.index(a, fb))
                    };
                    if let Some(t) = target {
                        edges.push((i, layout.index(a, b), t));
                    }
                }
            }
        }
        let mut g =
            CrystalGraph::from_edges(self.cartan.clone(), weights, edges, Provenance::Tensor)?;
        g.layout = Some(layout);
        Ok(g)
    }

    /// Copy without the `f_i` edge leaving `b`; marked as modified.
    pub fn remove_edge(&self, b: usize, i: usize) -> Result<CrystalGraph> {
        self.cartan.check_index(i)?;
        if b >= self.len() {
            return Err(Error::ElementOutOfRange {
                element: b,
                len: self.len(),
            });
        }
        let target = self.f[i][b].ok_or(Error::EdgeAbsent {
            element: b,
            color: i + 1,
        })?;
        let mut g = self.clone();
        g.f[i][b] = None;
        g.e[i][target] = None;
        g.provenance = Provenance::Modified;
        Ok(g)
    }

    /// The sub-graph induced on `members`, reindexed in increasing order.
    pub fn restrict(
        &self,
        members: &[usize],
        provenance: Provenance,
    ) -> Result<(CrystalGraph, Vec<usize>)> {
        let mut index = vec![usize::MAX; self.len()];
        for (k, &b) in members.iter().enumerate() {
            index[b] = k;
        }
        let weights = members.iter().map(|&b| self.weights[b].clone()).collect();
        let edges = self
            .edges()
            .filter(|&(_, from, to)| index[from] != usize::MAX && index[to] != usize::MAX)
            .map(|(i, from, to)| (i, index[from], index[to]))
            .collect::<Vec<_>>();
        let g = CrystalGraph::from_edges(self.cartan.clone(), weights, edges, provenance)?;
        Ok((g, members.to_vec()))
    }
}

/// Disjoint union; indices of later summands are offset by earlier sizes.
pub fn direct_sum(gs: &[&CrystalGraph]) -> Result<CrystalGraph> {
    let first = gs
        .first()
        .ok_or_else(|| Error::Hypothesis("direct sum of no crystals".into()))?;
    let cartan = first.cartan.clone();
    let mut weights = Vec::new();
    let mut edges = Vec::new();
    for g in gs {
        check_same(&cartan, &g.cartan)?;
        let offset = weights.len();
        weights.extend(g.weights.iter().cloned());
        edges.extend(g.edges().map(|(i, a, b)| (i, a + offset, b + offset)));
    }
    CrystalGraph::from_edges(cartan, weights, edges, Provenance::Sum)
}

fn check_same(a: &CartanData, b: &CartanData) -> Result<()> {
    if a.cartan_type() == b.cartan_type() {
        Ok(())
    } else {
        Err(Error::CartanMismatch(
            a.cartan_type().to_string(),
            b.cartan_type().to_string(),
        ))
    }
}

fn chain_len(map: &[Option<usize>], start: usize) -> usize {
    let mut k = 0;
    let mut cur = start;
    while let Some(next) = map[cur] {
        k += 1;
        cur = next;
        if k > map.len() {
            break;
        }
    }
    k
}
