//! Extremality of subsets, `i`-hinges in tensor products, and the
//! equivalence of extremality, hinge-freeness, Kouno's criterion and
//! Demazure decomposability for products of Demazure crystals.

mod diagonal;
mod experiment;
mod sweep;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::cartan::{CartanData, Weight};
use crate::crystal::{CrystalGraph, Subcrystal, TensorLayout};
use crate::demazure::{demazure_subset, Decomposer, Decomposition, DemazureLabel};
use crate::error::{Error, Result};
use crate::models;
use crate::tableaux::dimension_oracle;
use crate::weyl::{kouno_criterion, WeylElement};

pub use diagonal::{
    diagonal_component, diagonal_component_in, diagonal_theorem_check, factor_closure_check,
    tensor_power_diagonal_check, DiagonalReport, FactorClosureReport,
};
pub use experiment::{
    decompose_induced, edge_removal_experiment, EdgeRemovalReport, RemovalMode, StructureVerdict,
};
pub use sweep::{
    e_closed_extremal_subsets, extremal_factor_sweep, sweep, weights_up_to, ExtremalFactorSweep,
    SweepConfig, SweepResult, SweepRow,
};

/// Default cap on the number of elements of a constructed product.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// How a subset meets one `i`-string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringViolation {
    pub color: usize,
    /// The whole string, top first.
    pub string: Vec<usize>,
    /// The members of the subset on it, in string order.
    pub intersection: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalityReport {
    pub extremal: bool,
    pub violations: Vec<StringViolation>,
}

/// Checks that every `i`-string meets `s` in nothing, everything, or its top alone.
pub fn is_extremal(s: &Subcrystal) -> Result<ExtremalityReport> {
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    let g = s.ambient();
    let mut violations = Vec::new();
    for color in 0..g.rank() {
        for string in g.i_strings(color) {
            let intersection: Vec<usize> =
                string.iter().copied().filter(|&b| s.contains(b)).collect();
            let ok = intersection.is_empty()
                || intersection.len() == string.len()
                || intersection == [string[0]];
            if !ok {
                violations.push(StringViolation {
                    color,
                    string,
                    intersection,
                });
            }
        }
    }
    Ok(ExtremalityReport {
        extremal: violations.is_empty(),
        violations,
    })
}

/// `X ⊗ Y` as a subset of the ambient product of the factors' ambients.
#[derive(Clone, Debug)]
pub struct ProductSubset {
    pub left: Subcrystal,
    pub right: Subcrystal,
    pub product: Subcrystal,
}

impl ProductSubset {
    pub fn layout(&self) -> TensorLayout {
        self.product
            .ambient()
            .tensor_layout()
            .expect("product ambient is a tensor product")
    }
}

pub fn product_subset(x: &Subcrystal, y: &Subcrystal) -> Result<ProductSubset> {
    let ambient = Arc::new(x.ambient().tensor(y.ambient())?);
    product_subset_in(ambient, x, y)
}

/// As [`product_subset`], reusing an already built `ambient = gx ⊗ gy`.
pub fn product_subset_in(
    ambient: Arc<CrystalGraph>,
    x: &Subcrystal,
    y: &Subcrystal,
) -> Result<ProductSubset> {
    let layout = ambient
        .tensor_layout()
        .filter(|l| l.left_len == x.ambient().len() && l.right_len == y.ambient().len())
        .ok_or_else(|| {
            Error::Hypothesis("ambient is not the product of the factor ambients".into())
        })?;
    let members: Vec<usize> = x
        .iter()
        .flat_map(|a| y.iter().map(move |b| layout.index(a, b)))
        .collect();
    Ok(ProductSubset {
        left: x.clone(),
        right: y.clone(),
        product: Subcrystal::new(ambient, members)?,
    })
}

/// An `i`-hinge `x ⊗ y` of `X ⊗ Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hinge {
    /// Index in the ambient product.
    pub element: usize,
    pub left: usize,
    pub right: usize,
    pub color: usize,
    pub broken: bool,
    /// `x ⊗ f_i(y)`, present when the hinge is broken.
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HingeReport {
    pub hinges: Vec<Hinge>,
}

impl HingeReport {
    pub fn broken(&self) -> impl Iterator<Item = &Hinge> {
        self.hinges.iter().filter(|h| h.broken)
    }

    pub fn n_broken(&self) -> usize {
        self.broken().count()
    }
}

/// Scans `X ⊗ Y` for elements with `eps_i(x) > 0 = phi_i(x)` and
/// `eps_i(y) = 0 < phi_i(y)`, using factor data only, then confirms in the
/// ambient product that `e_i` moves the left factor and `f_i` the right.
pub fn find_hinges(p: &ProductSubset) -> Result<HingeReport> {
    let (gx, gy) = (p.left.ambient(), p.right.ambient());
    let ambient = p.product.ambient();
    let layout = p.layout();
    let mut hinges = Vec::new();
    for i in 0..gx.rank() {
        let sx = gx.string_data(i);
        let sy = gy.string_data(i);
        for x in p.left.iter() {
            if !(sx[x].0 > 0 && sx[x].1 == 0) {
                continue;
            }
            for y in p.right.iter() {
                if !(sy[y].0 == 0 && sy[y].1 > 0) {
                    continue;
                }
                let element = layout.index(x, y);
                let ex = gx.e(x, i).expect("eps > 0");
                let fy = gy.f(y, i).expect("phi > 0");
                if ambient.e(element, i) != Some(layout.index(ex, y))
                    || ambient.f(element, i) != Some(layout.index(x, fy))
                {
                    return Err(Error::TheoremFalsified(format!(
                        "at the {}-hinge {x}⊗{y}, e_{0} does not act on the left or f_{0} not on the right",
                        i + 1
                    )));
                }
                let broken = !p.right.contains(fy);
                hinges.push(Hinge {
                    element,
                    left: x,
                    right: y,
                    color: i,
                    broken,
                    witness: broken.then(|| layout.index(x, fy)),
                });
            }
        }
    }
    hinges.sort_by_key(|h| (h.element, h.color));
    Ok(HingeReport { hinges })
}

/// Extremality of `X ⊗ Y` for extremal `X`, `Y`, computed by the string
/// scan and by the hinge scan; a disagreement is an error.
pub fn hinge_criterion(p: &ProductSubset) -> Result<bool> {
    for (side, s) in [("left", &p.left), ("right", &p.right)] {
        if !is_extremal(s)?.extremal {
            return Err(Error::Hypothesis(format!("{side} factor is not extremal")));
        }
    }
    let by_strings = is_extremal(&p.product)?.extremal;
    let by_hinges = find_hinges(p)?.n_broken() == 0;
    if by_strings != by_hinges {
        return Err(Error::TheoremFalsified(format!(
            "string scan says extremal = {by_strings}, hinge scan says hinge-free = {by_hinges}"
        )));
    }
    Ok(by_strings)
}

/// The four verdicts on `B_w(lambda) ⊗ B_u(mu)`.
#[derive(Clone, Debug)]
pub struct ProductClassification {
    pub lambda: Weight,
    pub w: WeylElement,
    pub mu: Weight,
    pub u: WeylElement,
    pub extremal: bool,
    pub n_broken: usize,
    pub kouno: bool,
    pub demazure_sum: Decomposition,
    pub hinges: HingeReport,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    AllTrue,
    AllFalse,
    Disagreement,
}

impl ProductClassification {
    pub fn broken_hinge_free(&self) -> bool {
        self.n_broken == 0
    }

    pub fn booleans(&self) -> [bool; 4] {
        [
            self.extremal,
            self.broken_hinge_free(),
            self.kouno,
            self.demazure_sum.is_ok(),
        ]
    }

    pub fn verdict(&self) -> Verdict {
        match self.booleans() {
            [true, true, true, true] => Verdict::AllTrue,
            [false, false, false, false] => Verdict::AllFalse,
            _ => Verdict::Disagreement,
        }
    }

    /// Labels joined by `;`, or the failure reason.
    pub fn labels_text(&self) -> String {
        match &self.demazure_sum {
            Ok(labels) => labels
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(";"),
            Err(failure) => format!("none: {failure}"),
        }
    }
}

impl fmt::Display for ProductClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "B_{{{}}}{} ⊗ B_{{{}}}{}",
            self.w, self.lambda, self.u, self.mu
        )?;
        writeln!(f, "extremal: {}", self.extremal)?;
        writeln!(
            f,
            "broken-hinge-free: {} ({} broken)",
            self.broken_hinge_free(),
            self.n_broken
        )?;
        writeln!(f, "kouno: {}", self.kouno)?;
        write!(f, "demazure sum: {}", self.labels_text())
    }
}

/// Reusable context for classifying many `B_w(lambda) ⊗ B_u(mu)` with fixed
/// `lambda`, `mu`: the factor crystals, their product, and its decomposer.
pub struct ProductClassifier {
    lambda: Weight,
    mu: Weight,
    gx: Arc<CrystalGraph>,
    gy: Arc<CrystalGraph>,
    decomposer: Decomposer,
}

impl ProductClassifier {
    pub fn new(c: &Arc<CartanData>, lambda: &Weight, mu: &Weight, budget: usize) -> Result<Self> {
        let needed = dimension_oracle(c, lambda)?.saturating_mul(dimension_oracle(c, mu)?);
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded {
                needed: usize::try_from(needed).unwrap_or(usize::MAX),
                budget,
            });
        }
        let gx = models::highest_weight_crystal(c, lambda)?;
        let gy = models::highest_weight_crystal(c, mu)?;
        let ambient = Arc::new(gx.tensor(&gy)?);
        Ok(ProductClassifier {
            lambda: lambda.clone(),
            mu: mu.clone(),
            gx,
            gy,
            decomposer: Decomposer::new(ambient)?,
        })
    }

    pub fn ambient(&self) -> &Arc<CrystalGraph> {
        self.decomposer.ambient()
    }

    pub fn product(&self, w: &WeylElement, u: &WeylElement) -> Result<ProductSubset> {
        let x = demazure_subset(&self.gx, w)?;
        let y = demazure_subset(&self.gy, u)?;
        product_subset_in(self.ambient().clone(), &x, &y)
    }

    /// All four verdicts, without judging whether they agree.
    pub fn classify(&self, w: &WeylElement, u: &WeylElement) -> Result<ProductClassification> {
        let p = self.product(w, u)?;
        let hinges = find_hinges(&p)?;
        Ok(ProductClassification {
            lambda: self.lambda.clone(),
            w: w.clone(),
            mu: self.mu.clone(),
            u: u.clone(),
            extremal: is_extremal(&p.product)?.extremal,
            n_broken: hinges.n_broken(),
            kouno: kouno_criterion(&self.lambda, w, &self.mu, u)?,
            demazure_sum: self.decomposer.decompose(&p.product)?,
            hinges,
        })
    }
}

/// Classifies `B_w(lambda) ⊗ B_u(mu)`; disagreeing verdicts are an error.
pub fn classify_demazure_product(
    lambda: &Weight,
    w: &WeylElement,
    mu: &Weight,
    u: &WeylElement,
) -> Result<ProductClassification> {
    let c = w.cartan();
    let record = ProductClassifier::new(c, lambda, mu, DEFAULT_BUDGET)?.classify(w, u)?;
    if record.verdict() == Verdict::Disagreement {
        return Err(Error::TheoremFalsified(format!(
            "verdicts disagree:\n{record}"
        )));
    }
    Ok(record)
}

/// Labels of a decomposition as a set, for order-free comparisons.
pub fn label_set(labels: &[DemazureLabel]) -> BTreeSet<String> {
    labels.iter().map(ToString::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::tests::assert_tensor_string_formulas;
    use crate::weyl::enumerate_group;

    fn a(n: usize) -> Arc<CartanData> {
        CartanData::from_label(&format!("A{n}")).unwrap()
    }

    fn wt(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn bl(c: &Arc<CartanData>, v: &[i64]) -> Arc<CrystalGraph> {
        models::highest_weight_crystal(c, &wt(v)).unwrap()
    }

    fn el(c: &Arc<CartanData>, s: &str) -> WeylElement {
        WeylElement::parse(c, s).unwrap()
    }

    fn path(g: &CrystalGraph, ops: &[usize]) -> usize {
        ops.iter().rev().fold(0, |b, &i| g.f(b, i).unwrap())
    }

    #[test]
    fn extremality_examples() {
        let c = a(2);
        let g = bl(&c, &[1, 1]);
        assert!(is_extremal(&Subcrystal::full(g.clone())).unwrap().extremal);
        let triple = Subcrystal::new(g.clone(), [0, path(&g, &[0]), path(&g, &[1])]).unwrap();
        assert!(is_extremal(&triple).unwrap().extremal);
        let bad = Subcrystal::new(g.clone(), [path(&g, &[0])]).unwrap();
        let report = is_extremal(&bad).unwrap();
        assert!(!report.extremal);
        for v in &report.violations {
            assert!(!v.intersection.is_empty());
            assert_ne!(v.intersection.len(), v.string.len());
            assert_ne!(v.intersection, [v.string[0]]);
        }
        assert!(matches!(
            is_extremal(&Subcrystal::new(g, []).unwrap()),
            Err(Error::EmptySubset)
        ));
    }

    #[test]
    fn rank_one_broken_hinge() {
        let c = a(1);
        let g = bl(&c, &[1]);
        let x = demazure_subset(&g, &el(&c, "s1")).unwrap();
        let y = Subcrystal::singleton(g.clone(), 0).unwrap();
        let p = product_subset(&x, &y).unwrap();
        assert_tensor_string_formulas(&g, &g, p.product.ambient());
        let report = is_extremal(&p.product).unwrap();
        assert!(!report.extremal);
        assert_eq!(report.violations[0].string.len(), 3);
        assert_eq!(report.violations[0].intersection.len(), 2);
        let hinges = find_hinges(&p).unwrap();
        assert_eq!(hinges.hinges.len(), 1);
        let h = &hinges.hinges[0];
        assert_eq!((h.left, h.right, h.color, h.broken), (1, 0, 0, true));
        assert_eq!(h.witness, Some(p.layout().index(1, 1)));
        assert_eq!(
            (g.eps(1, 0), g.phi(1, 0), g.eps(0, 0), g.phi(0, 0)),
            (1, 0, 0, 1)
        );
        assert!(decompose_ok(&p).is_err());
        assert!(!hinge_criterion(&p).unwrap());
    }

    fn decompose_ok(p: &ProductSubset) -> Decomposition {
        crate::demazure::decompose_demazure(&p.product).unwrap()
    }

    #[test]
    fn sizes_of_products() {
        let c = a(2);
        let x = demazure_subset(&bl(&c, &[0, 1]), &el(&c, "s2")).unwrap();
        let y = demazure_subset(&bl(&c, &[1, 0]), &el(&c, "s1")).unwrap();
        let p = product_subset(&x, &y).unwrap();
        assert_eq!((x.len(), y.len(), p.product.len()), (2, 2, 4));
        assert_eq!(p.product.ambient().len(), 9);
        assert!(!hinge_criterion(&p).unwrap());
    }

    #[test]
    fn tensor_square_hinges() {
        let c = a(2);
        let g = bl(&c, &[1, 1]);
        let x = demazure_subset(&g, &el(&c, "s1*s2")).unwrap();
        let p = product_subset(&x, &x).unwrap();
        assert_eq!(p.product.len(), 25);
        assert_eq!(p.product.ambient().len(), 64);
        let report = find_hinges(&p).unwrap();
        let broken: Vec<(usize, usize, usize)> = report
            .broken()
            .map(|h| (h.left, h.right, h.color))
            .collect();
        let b = 0;
        let f2b = path(&g, &[1]);
        let f1b = path(&g, &[0]);
        let f1f1f2b = path(&g, &[0, 0, 1]);
        let mut expected = vec![(f2b, f1b, 1), (f2b, f1f1f2b, 1)];
        expected.sort();
        let mut got = broken.clone();
        got.sort();
        assert_eq!(got, expected);
        // The f_2 edges into the hinges leave b ⊗ f_1 b and b ⊗ f_1^2 f_2 b.
        let amb = p.product.ambient();
        let l = p.layout();
        for (h, src) in [
            (l.index(f2b, f1b), l.index(b, f1b)),
            (l.index(f2b, f1f1f2b), l.index(b, f1f1f2b)),
        ] {
            assert_eq!(amb.e(h, 1), Some(src));
        }
    }

    #[test]
    fn hinge_criterion_examples() {
        let c = a(2);
        let g = bl(&c, &[1, 1]);
        let h = bl(&c, &[1, 0]);
        let top = Subcrystal::singleton(g.clone(), 0).unwrap();
        let y = demazure_subset(&h, &el(&c, "s1")).unwrap();
        assert!(hinge_criterion(&product_subset(&top, &y).unwrap()).unwrap());
        let x = demazure_subset(&g, &el(&c, "s2*s1")).unwrap();
        assert!(
            hinge_criterion(&product_subset(&x, &Subcrystal::full(h.clone())).unwrap()).unwrap()
        );
        let full = Subcrystal::full(g.clone());
        let bad = Subcrystal::new(g.clone(), [path(&g, &[0])]).unwrap();
        assert!(matches!(
            hinge_criterion(&product_subset(&bad, &full).unwrap()),
            Err(Error::Hypothesis(_))
        ));
        let r = find_hinges(&product_subset(&top, &full).unwrap()).unwrap();
        assert_eq!(r.n_broken(), 0);
    }

    #[test]
    fn hinge_locality() {
        let c = a(2);
        let g = bl(&c, &[1, 1]);
        let x = demazure_subset(&g, &el(&c, "s1*s2")).unwrap();
        let p = product_subset(&x, &x).unwrap();
        let report = find_hinges(&p).unwrap();
        for h in &report.hinges {
            let fy = g.f(h.right, h.color).unwrap();
            for drop in x.iter().filter(|&b| b != fy && b != h.right) {
                let smaller = Subcrystal::new(g.clone(), x.iter().filter(|&b| b != drop)).unwrap();
                let q = product_subset_in(p.product.ambient().clone(), &x, &smaller).unwrap();
                let again = find_hinges(&q).unwrap();
                let same = again
                    .hinges
                    .iter()
                    .find(|k| k.element == h.element && k.color == h.color)
                    .unwrap();
                assert_eq!(same.broken, h.broken);
            }
        }
    }

    #[test]
    fn classification_examples() {
        let c = a(2);
        let r = classify_demazure_product(&wt(&[0, 1]), &el(&c, "s2"), &wt(&[1, 0]), &el(&c, "s1"))
            .unwrap();
        assert_eq!(r.verdict(), Verdict::AllFalse);
        assert!(r.n_broken >= 1);
        let rho = wt(&[1, 1]);
        let w = el(&c, "s1*s2");
        let r = classify_demazure_product(&rho, &w, &rho, &w).unwrap();
        assert_eq!(r.verdict(), Verdict::AllFalse);
        assert_eq!(r.n_broken, 2);
        let r = classify_demazure_product(&rho, &w, &rho, &el(&c, "w0")).unwrap();
        assert_eq!(r.verdict(), Verdict::AllTrue);
        let r = classify_demazure_product(&rho, &el(&c, "id"), &rho, &w).unwrap();
        assert_eq!(r.verdict(), Verdict::AllTrue);
    }

    #[test]
    fn products_with_full_right_factor_decompose() {
        let c = a(2);
        let w0 = WeylElement::longest(&c);
        for (l, m) in [([1, 0], [0, 1]), ([1, 1], [1, 0]), ([2, 0], [1, 1])] {
            let cl = ProductClassifier::new(&c, &wt(&l), &wt(&m), DEFAULT_BUDGET).unwrap();
            assert_tensor_string_formulas(&bl(&c, &l), &bl(&c, &m), cl.ambient());
            for w in enumerate_group(&c, 10).unwrap() {
                let r = cl.classify(&w, &w0).unwrap();
                assert_eq!(r.verdict(), Verdict::AllTrue, "{r}");
            }
        }
    }

    #[test]
    fn budget_guard() {
        let c = a(2);
        assert!(matches!(
            ProductClassifier::new(&c, &wt(&[1, 1]), &wt(&[1, 1]), 63),
            Err(Error::BudgetExceeded {
                needed: 64,
                budget: 63
            })
        ));
    }
}
