//! Demazure subcrystals `B_w(lambda) = F_w {b_lambda}`, their recognition
//! inside `B(nu)`, decomposition of subsets of normal crystals, and the
//! Demazure character formula as an independent polynomial oracle.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::cartan::{CartanData, Weight};
use crate::crystal::{canonical_component_iso, ComponentIso, CrystalGraph, Subcrystal};
use crate::error::{Error, Result};
pub use crate::laurent::LaurentPolynomial;
use crate::models;
use crate::weyl::{ReducedWord, WeylElement};

/// The pair `(nu, w)` naming `B_w(nu)`, with `w` reduced to `floor(w)^nu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DemazureLabel {
    pub weight: Weight,
    pub weyl: WeylElement,
}

impl DemazureLabel {
    pub fn new(weight: Weight, w: &WeylElement) -> Result<Self> {
        let weyl = w.min_coset_rep(&weight)?;
        Ok(DemazureLabel { weight, weyl })
    }
}

impl fmt::Display for DemazureLabel {
    /// `B_{s1*s2}(1,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B_{{{}}}{}", self.weyl, self.weight)
    }
}

/// `B_w(lambda)` inside a connected `g ≅ B(lambda)`, via the canonical reduced word.
pub fn demazure_subset(g: &Arc<CrystalGraph>, w: &WeylElement) -> Result<Subcrystal> {
    let top = g.top()?;
    Ok(demazure_from(g, top, &w.reduce_word()))
}

/// `F_word {top}` in any ambient.
pub fn demazure_from(g: &Arc<CrystalGraph>, top: usize, word: &ReducedWord) -> Subcrystal {
    Subcrystal::singleton(g.clone(), top)
        .expect("top is an element of g")
        .closure_f(word)
}

/// Whether `F_w {b_lambda}` is the same set for every reduced word of `w`.
pub fn reduced_word_independence_check(g: &Arc<CrystalGraph>, w: &WeylElement) -> Result<bool> {
    let top = g.top()?;
    let mut sets = w
        .reduced_words()
        .into_iter()
        .map(|word| demazure_from(g, top, &word));
    let first = sets.next().expect("every element has a reduced word");
    Ok(sets.all(|s| s == first))
}

/// A shortest word `[i_1, ..., i_k]` with `b` in `F_{i_1} ... F_{i_k} {b_lambda}`.
///
/// Breadth-first over words, extending on the left. A non-reduced answer
/// is reported as a falsified theorem.
pub fn minimal_expansion_word(g: &Arc<CrystalGraph>, b: usize) -> Result<ReducedWord> {
    let top = g.top()?;
    if b >= g.len() {
        return Err(Error::ElementOutOfRange {
            element: b,
            len: g.len(),
        });
    }
    let start = Subcrystal::singleton(g.clone(), top)?;
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::from([start.members().clone()]);
    let mut queue = VecDeque::from([(Vec::<usize>::new(), start)]);
    while let Some((word, set)) = queue.pop_front() {
        if set.contains(b) {
            let w = WeylElement::from_word(g.cartan(), &word)?;
            if w.length() != word.len() {
                return Err(Error::TheoremFalsified(format!(
                    "minimal expansion word {} for element {b} is not reduced",
                    ReducedWord(word)
                )));
            }
            return Ok(ReducedWord(word));
        }
        for i in 0..g.rank() {
            if word.first() == Some(&i) {
                continue;
            }
            let next = set.closure_fi(i);
            if seen.insert(next.members().clone()) {
                let mut longer = Vec::with_capacity(word.len() + 1);
                longer.push(i);
                longer.extend_from_slice(&word);
                queue.push_back((longer, next));
            }
        }
    }
    Err(Error::Hypothesis(format!(
        "element {b} is not below the highest weight"
    )))
}

/// Identifies `target` as `F_w {top}` by breadth-first search over the
/// left weak order, pruning any step whose closure leaves `target`.
pub fn recognize_from(
    g: &Arc<CrystalGraph>,
    top: usize,
    target: &BTreeSet<usize>,
) -> Result<Option<DemazureLabel>> {
    if !target.contains(&top) {
        return Ok(None);
    }
    let nu = g.weight(top).clone();
    let start = Subcrystal::singleton(g.clone(), top)?;
    let id = WeylElement::identity(g.cartan());
    if start.members() == target {
        return DemazureLabel::new(nu, &id).map(Some);
    }
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::from([start.members().clone()]);
    let mut queue = VecDeque::from([(id, start)]);
    while let Some((w, set)) = queue.pop_front() {
        for i in 0..g.rank() {
            if w.is_left_descent(i) {
                continue;
            }
            let next = set.closure_fi(i);
            if !next.members().is_subset(target) || !seen.insert(next.members().clone()) {
                continue;
            }
            let longer = w.left_mul_simple(i);
            if next.members() == target {
                return DemazureLabel::new(nu, &longer).map(Some);
            }
            queue.push_back((longer, next));
        }
    }
    Ok(None)
}

/// Recognizes a subset of a connected `B(nu)` as a Demazure crystal.
pub fn recognize_demazure(s: &Subcrystal) -> Result<Option<DemazureLabel>> {
    let top = s.ambient().top()?;
    recognize_from(s.ambient(), top, s.members())
}

/// One connected component of a normal crystal, matched to its model.
#[derive(Clone, Debug)]
pub struct ComponentModel {
    pub top: usize,
    pub weight: Weight,
    pub members: BTreeSet<usize>,
    /// `Some` when a model `B(nu)` exists for the type.
    pub model: Option<(Arc<CrystalGraph>, ComponentIso)>,
}

/// `C ∩ S` for one component `C` of the ambient met by `S`.
#[derive(Clone, Debug)]
pub struct ComponentPiece {
    pub component: usize,
    pub top: usize,
    pub weight: Weight,
    pub members: BTreeSet<usize>,
    pub contains_top: bool,
    pub label: Option<DemazureLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionFailure {
    /// The component's highest-weight element is missing from the subset.
    MissingHighestWeight { component: usize, top: usize },
    /// The piece is not `B_w(nu)` for any `w`.
    NotDemazure { component: usize, top: usize },
    /// A piece of an induced structure without a unique highest weight.
    HighestWeightCount { component: usize, count: usize },
}

impl fmt::Display for DecompositionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionFailure::MissingHighestWeight { component, top } => write!(
                f,
                "component {component} meets the subset but its highest-weight element {top} is missing"
            ),
            DecompositionFailure::NotDemazure { component, top } => write!(
                f,
                "component {component} (highest weight element {top}) meets the subset in a non-Demazure set"
            ),
            DecompositionFailure::HighestWeightCount { component, count } => {
                write!(f, "piece {component} has {count} highest-weight elements")
            }
        }
    }
}

/// Labels of a successful decomposition, or the first failing component.
pub type Decomposition = std::result::Result<Vec<DemazureLabel>, DecompositionFailure>;

/// Precomputed component structure of a normal crystal, so that many
/// subsets of the same ambient can be decomposed cheaply.
#[derive(Clone, Debug)]
pub struct Decomposer {
    ambient: Arc<CrystalGraph>,
    component_of: Vec<usize>,
    components: Vec<ComponentModel>,
}

impl Decomposer {
    /// Fails when some component has no unique dominant highest weight or
    /// is not isomorphic to its model.
    pub fn new(ambient: Arc<CrystalGraph>) -> Result<Self> {
        let (component_of, _) = ambient.component_labels();
        let mut components = Vec::new();
        for comp in Subcrystal::component_split(&ambient) {
            let hw = comp.highest_weight_members();
            let [top] = hw.as_slice() else {
                return Err(Error::InvalidCrystal(format!(
                    "component with {} highest-weight elements",
                    hw.len()
                )));
            };
            let weight = ambient.weight(*top).clone();
            let model = match models::highest_weight_crystal(ambient.cartan(), &weight) {
                Ok(model) => {
                    let iso = canonical_component_iso(&comp, &model)
                        .map_err(|e| Error::InvalidCrystal(format!("component of {top}: {e}")))?;
                    Some((model, iso))
                }
                Err(Error::NoModel(_)) => None,
                Err(e) => return Err(e),
            };
            components.push(ComponentModel {
                top: *top,
                weight,
                members: comp.members().clone(),
                model,
            });
        }
        Ok(Decomposer {
            ambient,
            component_of,
            components,
        })
    }

    pub fn ambient(&self) -> &Arc<CrystalGraph> {
        &self.ambient
    }

    pub fn components(&self) -> &[ComponentModel] {
        &self.components
    }

    pub fn component_index(&self, b: usize) -> usize {
        self.component_of[b]
    }

    /// Every component met by `s`, with its intersection and recognition.
    pub fn pieces(&self, s: &Subcrystal) -> Result<Vec<ComponentPiece>> {
        let mut grouped: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.components.len()];
        for b in s.iter() {
            grouped[self.component_of[b]].insert(b);
        }
        let mut out = Vec::new();
        for (k, members) in grouped.into_iter().enumerate() {
            if members.is_empty() {
                continue;
            }
            let comp = &self.components[k];
            let contains_top = members.contains(&comp.top);
            let label = if contains_top {
                self.recognize_piece(comp, &members)?
            } else {
                None
            };
            out.push(ComponentPiece {
                component: k,
                top: comp.top,
                weight: comp.weight.clone(),
                members,
                contains_top,
                label,
            });
        }
        Ok(out)
    }

    fn recognize_piece(
        &self,
        comp: &ComponentModel,
        members: &BTreeSet<usize>,
    ) -> Result<Option<DemazureLabel>> {
        match &comp.model {
            Some((model, iso)) => {
                let image: BTreeSet<usize> = members
                    .iter()
                    .map(|&b| iso.map(b).expect("iso covers the component"))
                    .collect();
                recognize_from(model, model.top()?, &image)
            }
            None => recognize_from(&self.ambient, comp.top, members),
        }
    }

    /// Decomposes `s` into Demazure crystals, component by component.
    pub fn decompose(&self, s: &Subcrystal) -> Result<Decomposition> {
        let mut labels = Vec::new();
        for piece in self.pieces(s)? {
            if !piece.contains_top {
                return Ok(Err(DecompositionFailure::MissingHighestWeight {
                    component: piece.component,
                    top: piece.top,
                }));
            }
            match piece.label {
                Some(label) => labels.push(label),
                None => {
                    return Ok(Err(DecompositionFailure::NotDemazure {
                        component: piece.component,
                        top: piece.top,
                    }))
                }
            }
        }
        Ok(Ok(labels))
    }
}

/// Decomposes a subset of a normal crystal as a direct sum of Demazure crystals.
pub fn decompose_demazure(s: &Subcrystal) -> Result<Decomposition> {
    Decomposer::new(s.ambient().clone())?.decompose(s)
}

/// `sum_{b in S} x^{wt(b)}`.
pub fn character(s: &Subcrystal) -> LaurentPolynomial {
    s.iter()
        .map(|b| (s.ambient().weight(b).clone(), 1))
        .collect()
}

/// The Demazure operator `pi_i`, extended linearly from
/// `pi_i x^lam = sum_{k=0}^{m} x^{lam - k alpha_i}` for `m = <alpha_i^vee, lam> >= 0`,
/// `0` for `m = -1`, and `-sum_{k=1}^{-m-1} x^{lam + k alpha_i}` for `m <= -2`.
pub fn demazure_operator(
    c: &CartanData,
    i: usize,
    f: &LaurentPolynomial,
) -> Result<LaurentPolynomial> {
    let alpha = c.simple_root(i)?;
    let mut out = LaurentPolynomial::zero();
    for (lam, coeff) in f.terms() {
        let m = c.pairing(i, lam)?;
        if m >= 0 {
            let mut cur = lam.clone();
            for _ in 0..=m {
                out.add_term(cur.clone(), coeff);
                cur = &cur - &alpha;
            }
        } else if m <= -2 {
            let mut cur = lam.clone();
            for _ in 1..=(-m - 1) {
                cur = &cur + &alpha;
                out.add_term(cur.clone(), -coeff);
            }
        }
    }
    Ok(out)
}

/// `pi_{i_1} ... pi_{i_l} (x^lam)`, last letter first.
pub fn demazure_character(
    c: &CartanData,
    word: &ReducedWord,
    lam: &Weight,
) -> Result<LaurentPolynomial> {
    c.check_weight(lam)?;
    word.letters()
        .iter()
        .rev()
        .try_fold(LaurentPolynomial::monomial(lam.clone()), |acc, &i| {
            demazure_operator(c, i, &acc)
        })
}

/// The Weyl character of `V(lam)`: the Demazure character of `w0`.
pub fn weyl_character(c: &Arc<CartanData>, lam: &Weight) -> LaurentPolynomial {
    let w0 = WeylElement::longest(c).reduce_word();
    demazure_character(c, &w0, lam).expect("weight length checked by caller")
}

/// `character(B_w(lambda)) == pi_word(x^lambda)` for the canonical word.
pub fn demazure_character_check(g: &Arc<CrystalGraph>, w: &WeylElement) -> Result<bool> {
    let top = g.top()?;
    let lam = g.weight(top).clone();
    let word = w.reduce_word();
    let lhs = character(&demazure_from(g, top, &word));
    Ok(lhs == demazure_character(g.cartan(), &word, &lam)?)
}

/// As [`demazure_character_check`], over every reduced word of `w`: both the
/// crystal subset and the operator product are recomputed per word.
pub fn demazure_character_check_all_words(g: &Arc<CrystalGraph>, w: &WeylElement) -> Result<bool> {
    let top = g.top()?;
    let lam = g.weight(top).clone();
    for word in w.reduced_words() {
        let lhs = character(&demazure_from(g, top, &word));
        if lhs != demazure_character(g.cartan(), &word, &lam)? {
            return Ok(false);
        }
    }
    Ok(true)
}
