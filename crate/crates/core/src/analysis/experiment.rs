//! Cutting the `f_i` edges that end in broken hinges of `B_w(rho)^{⊗2}` in
//! `A_2`, and recognizing the result by its induced structure.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::{find_hinges, is_extremal, product_subset, HingeReport};
use crate::cartan::{CartanData, Weight};
use crate::crystal::{canonical_component_iso, CrystalGraph, Provenance, Subcrystal};
use crate::demazure::{
    decompose_demazure, demazure_subset, Decomposition, DecompositionFailure, DemazureLabel,
};
use crate::error::Result;
use crate::models;
use crate::weyl::{enumerate_group, WeylElement, DEFAULT_GROUP_LIMIT};

/// Decomposes `s` using only the edges with both ends in `s`: every
/// connected piece must be isomorphic, weights included, to some
/// `B_w(nu)` with its highest weight `nu` dominant.
///
/// Suited to structures that are no longer normal crystals, where the
/// ambient components carry no meaning.
pub fn decompose_induced(s: &Subcrystal) -> Result<Decomposition> {
    let members: Vec<usize> = s.iter().collect();
    let (induced, _) = s.ambient().restrict(&members, Provenance::Component)?;
    let induced = Arc::new(induced);
    let c = induced.cartan().clone();
    let group = enumerate_group(&c, DEFAULT_GROUP_LIMIT)?;
    let mut labels = Vec::new();
    for (k, piece) in Subcrystal::component_split(&induced)
        .into_iter()
        .enumerate()
    {
        let hw = piece.highest_weight_members();
        let [top] = hw.as_slice() else {
            return Ok(Err(DecompositionFailure::HighestWeightCount {
                component: k,
                count: hw.len(),
            }));
        };
        let failure = DecompositionFailure::NotDemazure {
            component: k,
            top: members[*top],
        };
        let nu = induced.weight(*top).clone();
        if !nu.is_dominant() {
            return Ok(Err(failure));
        }
        match match_demazure(&c, &group, &piece, &nu)? {
            Some(label) => labels.push(label),
            None => return Ok(Err(failure)),
        }
    }
    Ok(Ok(labels))
}

fn match_demazure(
    c: &Arc<CartanData>,
    group: &[WeylElement],
    piece: &Subcrystal,
    nu: &Weight,
) -> Result<Option<DemazureLabel>> {
    let model = models::highest_weight_crystal(c, nu)?;
    let mut tried = BTreeSet::new();
    for w in group {
        let rep = w.min_coset_rep(nu)?;
        if !tried.insert(rep.matrix().to_vec()) {
            continue;
        }
        let target = demazure_subset(&model, &rep)?;
        if target.len() != piece.len() {
            continue;
        }
        let members: Vec<usize> = target.iter().collect();
        let (graph, _) = model.restrict(&members, Provenance::Component)?;
        if canonical_component_iso(piece, &graph).is_ok() {
            return DemazureLabel::new(nu.clone(), &rep).map(Some);
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemovalMode {
    /// Leave the product untouched.
    Skip,
    /// Remove only the edge into the first broken hinge.
    Single,
    All,
}

#[derive(Clone, Debug)]
pub struct StructureVerdict {
    pub extremal: bool,
    /// Broken hinges whose incoming `f_i` edge is still present.
    pub n_broken: usize,
    pub decomposition: Decomposition,
}

impl StructureVerdict {
    pub fn is_demazure_sum(&self) -> bool {
        self.decomposition.is_ok()
    }
}

#[derive(Clone, Debug)]
pub struct EdgeRemovalReport {
    pub before_graph: Arc<CrystalGraph>,
    pub subset: BTreeSet<usize>,
    pub hinges: HingeReport,
    pub before: StructureVerdict,
    /// `(color, from, to)` of each removed `f` edge.
    pub removed: Vec<(usize, usize, usize)>,
    pub after_graph: Option<Arc<CrystalGraph>>,
    pub after: Option<StructureVerdict>,
}

impl EdgeRemovalReport {
    pub fn succeeded(&self) -> bool {
        self.after
            .as_ref()
            .is_some_and(|v| v.extremal && v.is_demazure_sum())
    }
}

/// Builds `B_{s1 s2}(rho) ⊗ B_{s1 s2}(rho)` in `A_2`, removes the `f` edges
/// `e_i(h) -> h` into its broken hinges `h` as selected by `mode`, and
/// re-runs extremality and decomposition.
pub fn edge_removal_experiment(mode: RemovalMode) -> Result<EdgeRemovalReport> {
    let c = CartanData::from_label("A2")?;
    let rho = c.rho();
    let g = models::highest_weight_crystal(&c, &rho)?;
    let x = demazure_subset(&g, &WeylElement::from_word(&c, &[0, 1])?)?;
    let p = product_subset(&x, &x)?;
    let ambient = p.product.ambient().clone();
    let hinges = find_hinges(&p)?;
    let before = StructureVerdict {
        extremal: is_extremal(&p.product)?.extremal,
        n_broken: hinges.n_broken(),
        decomposition: decompose_demazure(&p.product)?,
    };
    let selected: Vec<_> = match mode {
        RemovalMode::Skip => Vec::new(),
        RemovalMode::Single => hinges.broken().take(1).collect(),
        RemovalMode::All => hinges.broken().collect(),
    };
    let removed: Vec<(usize, usize, usize)> = selected
        .iter()
        .map(|h| {
            let from = ambient
                .e(h.element, h.color)
                .expect("hinges have e_i defined");
            (h.color, from, h.element)
        })
        .collect();
    let (after_graph, after) = if mode == RemovalMode::Skip {
        (None, None)
    } else {
        let mut modified = (*ambient).clone();
        for &(color, from, _) in &removed {
            modified = modified.remove_edge(from, color)?;
        }
        let modified = Arc::new(modified);
        let s = p.product.rehome(modified.clone())?;
        let n_broken = hinges
            .broken()
            .filter(|h| modified.e(h.element, h.color).is_some())
            .count();
        let verdict = StructureVerdict {
            extremal: is_extremal(&s)?.extremal,
            n_broken,
            decomposition: decompose_induced(&s)?,
        };
        (Some(modified), Some(verdict))
    };
    Ok(EdgeRemovalReport {
        before_graph: ambient,
        subset: p.product.members().clone(),
        hinges,
        before,
        removed,
        after_graph,
        after,
    })
}
