//! The component of a tensor product through `b_lambda ⊗ b_mu`, and its
//! intersections with products of Demazure crystals.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::{is_extremal, product_subset_in, ProductSubset};
use crate::cartan::{CartanData, Weight};
use crate::crystal::{canonical_component_iso, CrystalGraph, Subcrystal};
use crate::demazure::{
    demazure_from, demazure_subset, minimal_expansion_word, recognize_from, DemazureLabel,
};
use crate::error::{Error, Result};
use crate::models;
use crate::tableaux::dimension_oracle;
use crate::weyl::WeylElement;

/// The connected component of `gx ⊗ gy` containing `b_lambda ⊗ b_mu`.
pub fn diagonal_component(gx: &CrystalGraph, gy: &CrystalGraph) -> Result<Subcrystal> {
    let (tx, ty) = (gx.top()?, gy.top()?);
    let ambient = Arc::new(gx.tensor(gy)?);
    diagonal_component_in(&ambient, tx, ty)
}

/// As [`diagonal_component`] inside an already built product.
pub fn diagonal_component_in(
    product: &Arc<CrystalGraph>,
    top_x: usize,
    top_y: usize,
) -> Result<Subcrystal> {
    let layout = product
        .tensor_layout()
        .ok_or_else(|| Error::Hypothesis("not a tensor product".into()))?;
    Subcrystal::component_of(product, layout.index(top_x, top_y))
}

/// Maps `piece ⊆ component` into `B(nu)` and recognizes the image.
fn recognize_in_model(
    component: &Subcrystal,
    piece: &BTreeSet<usize>,
    nu: &Weight,
) -> Result<Option<DemazureLabel>> {
    let model = models::highest_weight_crystal(component.ambient().cartan(), nu)?;
    let iso = canonical_component_iso(component, &model)
        .map_err(|e| Error::TheoremFalsified(format!("diagonal component is not B{nu}: {e}")))?;
    let image: BTreeSet<usize> = piece
        .iter()
        .map(|&b| iso.map(b).expect("piece lies in the component"))
        .collect();
    recognize_from(&model, model.top()?, &image)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalReport {
    /// Recognition of the intersection's image in `B(lambda + mu)`.
    pub image: Option<DemazureLabel>,
    pub expected: DemazureLabel,
    /// Every `x ⊗ y` of the component has `y` in `B_w(mu)` for the least
    /// `w` with `x` in `B_w(lambda)`.
    pub right_factor_bounded: bool,
}

impl DiagonalReport {
    pub fn holds(&self) -> bool {
        self.right_factor_bounded && self.image.as_ref() == Some(&self.expected)
    }
}

/// Checks that the diagonal component meets `B_u(lambda) ⊗ B_v(mu)` in a
/// copy of `B_u(lambda + mu)`.
///
/// Requires `<alpha_i^vee, mu> = 0` whenever `<alpha_i^vee, lambda> = 0`, and `u <= v`.
pub fn diagonal_theorem_check(
    lambda: &Weight,
    mu: &Weight,
    u: &WeylElement,
    v: &WeylElement,
) -> Result<DiagonalReport> {
    let c = u.cartan();
    c.check_dominant(lambda)?;
    c.check_dominant(mu)?;
    for i in 0..c.rank() {
        if lambda.0[i] == 0 && mu.0[i] != 0 {
            return Err(Error::Hypothesis(format!(
                "<alpha_{0}^vee, lambda> = 0 but <alpha_{0}^vee, mu> = {1}",
                i + 1,
                mu.0[i]
            )));
        }
    }
    if !u.bruhat_leq(v) {
        return Err(Error::Hypothesis(format!(
            "{u} is not below {v} in Bruhat order"
        )));
    }
    let gx = models::highest_weight_crystal(c, lambda)?;
    let gy = models::highest_weight_crystal(c, mu)?;
    let ambient = Arc::new(gx.tensor(&gy)?);
    let diag = diagonal_component_in(&ambient, gx.top()?, gy.top()?)?;
    let p = product_subset_in(
        ambient.clone(),
        &demazure_subset(&gx, u)?,
        &demazure_subset(&gy, v)?,
    )?;
    let piece: BTreeSet<usize> = diag.intersection(&p.product).members().clone();
    let nu = lambda + mu;
    let image = recognize_in_model(&diag, &piece, &nu)?;
    let expected = DemazureLabel::new(nu, u)?;
    let right_factor_bounded = check_right_factor_bound(&gx, &gy, &diag)?;
    Ok(DiagonalReport {
        image,
        expected,
        right_factor_bounded,
    })
}

fn check_right_factor_bound(
    gx: &Arc<CrystalGraph>,
    gy: &Arc<CrystalGraph>,
    diag: &Subcrystal,
) -> Result<bool> {
    let layout = diag.ambient().tensor_layout().expect("product");
    let top_y = gy.top()?;
    let mut cache: HashMap<Vec<usize>, Subcrystal> = HashMap::new();
    for b in diag.iter() {
        let t = layout.split(b);
        let word = minimal_expansion_word(gx, t.left)?;
        let y_set = cache
            .entry(word.0.clone())
            .or_insert_with(|| demazure_from(gy, top_y, &word));
        if !y_set.contains(t.right) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that the component of `B(lambda)^{⊗m}` through `b_lambda^{⊗m}`
/// meets `B_w(lambda)^{⊗m}` in a copy of `B_w(m lambda)`. Products are
/// bracketed to the left.
pub fn tensor_power_diagonal_check(
    lambda: &Weight,
    w: &WeylElement,
    m: usize,
    budget: usize,
) -> Result<bool> {
    if m == 0 {
        return Err(Error::Hypothesis("tensor power must be at least 1".into()));
    }
    let c: &Arc<CartanData> = w.cartan();
    let dim = dimension_oracle(c, lambda)?;
    let needed = (0..m).try_fold(1u128, |acc, _| acc.checked_mul(dim));
    match needed {
        Some(n) if n <= budget as u128 => {}
        _ => {
            return Err(Error::BudgetExceeded {
                needed: needed.map_or(usize::MAX, |n| usize::try_from(n).unwrap_or(usize::MAX)),
                budget,
            })
        }
    }
    let g = models::highest_weight_crystal(c, lambda)?;
    let factor = demazure_subset(&g, w)?;
    let top = g.top()?;
    let mut power: ProductSubset;
    let mut subset = factor.clone();
    let mut top_m = top;
    for _ in 1..m {
        let ambient = Arc::new(subset.ambient().tensor(&g)?);
        power = product_subset_in(ambient, &subset, &factor)?;
        top_m = power.layout().index(top_m, top);
        subset = power.product;
    }
    let ambient = subset.ambient().clone();
    let diag = Subcrystal::component_of(&ambient, top_m)?;
    let piece = diag.intersection(&subset).members().clone();
    let nu = lambda.scale(m as i64);
    let label = recognize_in_model(&diag, &piece, &nu)?;
    Ok(label == Some(DemazureLabel::new(nu, w)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorClosureReport {
    pub left_e_closed: bool,
    pub right_e_closed: bool,
    /// Evaluated only when the right factor is E-closed.
    pub left_extremal: Option<bool>,
    pub right_extremal: bool,
}

/// For extremal `X ⊗ Y`: `X` must be E-closed, and extremal as soon as `Y`
/// is E-closed. Violations are reported as a falsified theorem.
pub fn factor_closure_check(p: &ProductSubset) -> Result<FactorClosureReport> {
    if !is_extremal(&p.product)?.extremal {
        return Err(Error::Hypothesis("product is not extremal".into()));
    }
    let left_e_closed = p.left.is_e_closed();
    let right_e_closed = p.right.is_e_closed();
    let left_extremal = if right_e_closed {
        Some(is_extremal(&p.left)?.extremal)
    } else {
        None
    };
    if !left_e_closed || left_extremal == Some(false) {
        return Err(Error::TheoremFalsified(format!(
            "extremal product with left factor E-closed = {left_e_closed}, extremal = {left_extremal:?}"
        )));
    }
    Ok(FactorClosureReport {
        left_e_closed,
        right_e_closed,
        left_extremal,
        right_extremal: is_extremal(&p.right)?.extremal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::DEFAULT_BUDGET;
    use crate::weyl::enumerate_group;

    fn a(n: usize) -> Arc<CartanData> {
        CartanData::from_label(&format!("A{n}")).unwrap()
    }

    fn wt(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn diagonal_components() {
        let c = a(1);
        let g = models::highest_weight_crystal(&c, &wt(&[1])).unwrap();
        let d = diagonal_component(&g, &g).unwrap();
        assert_eq!(d.len(), 3);
        let b2 = models::highest_weight_crystal(&c, &wt(&[2])).unwrap();
        assert!(canonical_component_iso(&d, &b2).is_ok());
        let c2 = a(2);
        let rho = models::highest_weight_crystal(&c2, &wt(&[1, 1])).unwrap();
        let d = diagonal_component(&rho, &rho).unwrap();
        assert_eq!(
            d.len() as u128,
            dimension_oracle(&c2, &wt(&[2, 2])).unwrap()
        );
        assert_eq!(d.len(), 27);
    }

    #[test]
    fn diagonal_theorem_examples() {
        let c = a(2);
        let rho = wt(&[1, 1]);
        let w = WeylElement::parse(&c, "s1*s2").unwrap();
        let r = diagonal_theorem_check(&rho, &rho, &w, &w).unwrap();
        assert!(r.holds());
        assert_eq!(r.image.unwrap().to_string(), "B_{s1*s2}(2,2)");
        let id = WeylElement::identity(&c);
        assert!(diagonal_theorem_check(&rho, &rho, &id, &id)
            .unwrap()
            .holds());
        let w0 = WeylElement::longest(&c);
        let full = diagonal_theorem_check(&rho, &wt(&[1, 0]), &w0, &w0).unwrap();
        assert!(full.holds());
    }

    #[test]
    fn diagonal_theorem_all_pairs() {
        let c = a(2);
        let group = enumerate_group(&c, 10).unwrap();
        for (l, m) in [
            ([1, 1], [1, 1]),
            ([1, 1], [2, 0]),
            ([1, 0], [2, 0]),
            ([2, 1], [1, 1]),
        ] {
            for u in &group {
                for v in group.iter().filter(|v| u.bruhat_leq(v)) {
                    let r = diagonal_theorem_check(&wt(&l), &wt(&m), u, v).unwrap();
                    assert!(r.holds(), "{l:?} {m:?} {u} {v}: {r:?}");
                }
            }
        }
    }

    #[test]
    fn diagonal_theorem_hypotheses() {
        let c = a(2);
        let w = WeylElement::parse(&c, "s1").unwrap();
        let id = WeylElement::identity(&c);
        assert!(matches!(
            diagonal_theorem_check(&wt(&[1, 0]), &wt(&[1, 1]), &w, &w),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            diagonal_theorem_check(&wt(&[1, 1]), &wt(&[1, 1]), &w, &id),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn tensor_powers() {
        let c = a(2);
        let rho = wt(&[1, 1]);
        let w = WeylElement::parse(&c, "s1*s2").unwrap();
        for m in 1..=3 {
            assert!(
                tensor_power_diagonal_check(&rho, &w, m, DEFAULT_BUDGET).unwrap(),
                "m = {m}"
            );
        }
        assert!(matches!(
            tensor_power_diagonal_check(&rho, &w, 3, 511),
            Err(Error::BudgetExceeded { needed: 512, .. })
        ));
        assert!(tensor_power_diagonal_check(&rho, &w, 0, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn factor_closure() {
        let c = a(2);
        let lam = wt(&[2, 2]);
        let mu = wt(&[2, 0]);
        let gx = models::highest_weight_crystal(&c, &lam).unwrap();
        let gy = models::highest_weight_crystal(&c, &mu).unwrap();
        let w = WeylElement::parse(&c, "s2*s1").unwrap();
        let ambient = Arc::new(gx.tensor(&gy).unwrap());
        let x = demazure_subset(&gx, &w).unwrap();
        let p = product_subset_in(ambient.clone(), &x, &Subcrystal::full(gy.clone())).unwrap();
        let r = factor_closure_check(&p).unwrap();
        assert_eq!(r.left_extremal, Some(true));
        assert!(r.left_e_closed && r.right_e_closed);

        let top = Subcrystal::singleton(gx.clone(), 0).unwrap();
        let y = Subcrystal::new(gy.clone(), [0, gy.f(0, 0).unwrap()]).unwrap();
        let p = product_subset_in(ambient.clone(), &top, &y).unwrap();
        let r = factor_closure_check(&p).unwrap();
        assert_eq!(r.left_extremal, Some(true));
        assert!(r.right_e_closed);
        assert!(!r.right_extremal);

        // A right factor that is not E-closed skips the second clause.
        let y = Subcrystal::new(gy.clone(), [gy.f(0, 0).unwrap()]).unwrap();
        let p = product_subset_in(ambient, &top, &y).unwrap();
        let r = factor_closure_check(&p).unwrap();
        assert!(!r.right_e_closed);
        assert_eq!(r.left_extremal, None);
    }
}
