use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use super::{CrystalGraph, Subcrystal};

/// Element map from a component onto a target crystal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentIso {
    /// Source element (ambient index) to target element.
    pub forward: BTreeMap<usize, usize>,
}

impl ComponentIso {
    pub fn map(&self, b: usize) -> Option<usize> {
        self.forward.get(&b).copied()
    }
}

/// Why the anchored traversal could not build an isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoFailure {
    /// The source does not have exactly one highest-weight element.
    HighestWeightCount(usize),
    /// The target does not have exactly one highest-weight element.
    TargetNotHighestWeight,
    WeightMismatch {
        source: usize,
        target: usize,
    },
    /// `f_i` or `e_i` is defined on one side only, or disagrees with the
    /// map built so far.
    EdgeMismatch {
        source: usize,
        target: usize,
        color: usize,
    },
    SizeMismatch {
        source: usize,
        target: usize,
    },
}

impl fmt::Display for IsoFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoFailure::HighestWeightCount(k) => {
                write!(f, "component has {k} highest-weight elements")
            }
            IsoFailure::TargetNotHighestWeight => {
                write!(f, "target is not a highest-weight crystal")
            }
            IsoFailure::WeightMismatch { source, target } => {
                write!(f, "weight of {source} differs from weight of {target}")
            }
            IsoFailure::EdgeMismatch {
                source,
                target,
                color,
            } => write!(
                f,
                "color {} edges differ at source {source} / target {target}",
                color + 1
            ),
            IsoFailure::SizeMismatch { source, target } => {
                write!(f, "component has {source} elements, target has {target}")
            }
        }
    }
}

/// The unique morphism sending highest weight to highest weight, built by a
/// parallel breadth-first walk over `e_i` and `f_i` edges.
///
/// Edges leaving the component are treated as part of it, so `component`
/// should be closed under all edges (a union of connected components).
pub fn canonical_component_iso(
    component: &Subcrystal,
    target: &CrystalGraph,
) -> Result<ComponentIso, IsoFailure> {
    let g = component.ambient();
    let hw = component.highest_weight_members();
    if hw.len() != 1 {
        return Err(IsoFailure::HighestWeightCount(hw.len()));
    }
    let target_hw = target.highest_weight_elements();
    if target_hw.len() != 1 {
        return Err(IsoFailure::TargetNotHighestWeight);
    }
    let (src_top, tgt_top) = (hw[0], target_hw[0].0);
    if component.len() != target.len() {
        return Err(IsoFailure::SizeMismatch {
            source: component.len(),
            target: target.len(),
        });
    }
    let mut forward = BTreeMap::new();
    let mut backward = vec![usize::MAX; target.len()];
    forward.insert(src_top, tgt_top);
    backward[tgt_top] = src_top;
    let mut queue = VecDeque::from([(src_top, tgt_top)]);
    while let Some((s, t)) = queue.pop_front() {
        if g.weight(s) != target.weight(t) {
            return Err(IsoFailure::WeightMismatch {
                source: s,
                target: t,
            });
        }
        for i in 0..g.rank() {
            for (sn, tn) in [(g.f(s, i), target.f(t, i)), (g.e(s, i), target.e(t, i))] {
                let mismatch = IsoFailure::EdgeMismatch {
                    source: s,
                    target: t,
                    color: i,
                };
                match (sn, tn) {
                    (None, None) => {}
                    (Some(sn), Some(tn)) => match forward.get(&sn) {
                        Some(&seen) if seen != tn => return Err(mismatch),
                        Some(_) => {}
                        None => {
                            if backward[tn] != usize::MAX || !component.contains(sn) {
                                return Err(mismatch);
                            }
                            forward.insert(sn, tn);
                            backward[tn] = sn;
                            queue.push_back((sn, tn));
                        }
                    },
                    _ => return Err(mismatch),
                }
            }
        }
    }
    if forward.len() != component.len() {
        return Err(IsoFailure::SizeMismatch {
            source: component.len(),
            target: forward.len(),
        });
    }
    Ok(ComponentIso { forward })
}
