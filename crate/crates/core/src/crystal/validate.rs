use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::{canonical_component_iso, CrystalGraph, Provenance, Subcrystal};
use crate::demazure::{character, weyl_character};
use crate::models;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `phi_i - eps_i = <alpha_i^vee, wt>`.
    C1,
    /// `f_i` lowers the weight by `alpha_i`.
    C2,
    /// `e_i` and `f_i` are inverse partial bijections.
    C3,
    /// Strings are finite.
    C4,
    /// A component lacks a unique dominant highest-weight element.
    HighestWeight,
    /// A component is not isomorphic to `B(nu)`.
    ComponentIso,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
            Axiom::C4 => "C4",
            Axiom::HighestWeight => "highest-weight",
            Axiom::ComponentIso => "component-iso",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub element: Option<usize>,
    /// Zero-based color.
    pub color: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.axiom)?;
        if let Some(b) = self.element {
            write!(f, " element {b}")?;
        }
        if let Some(i) = self.color {
            write!(f, " color {}", i + 1)?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

/// Checks the crystal axioms and, unless the graph is marked modified, that
/// every component is isomorphic to `B(nu)` for its highest weight `nu`.
///
/// For types without a built-in model the component check compares the
/// component's character with the Weyl character instead.
pub fn validate(g: &CrystalGraph) -> ValidationReport {
    let mut violations = Vec::new();
    let c = g.cartan();
    for (i, from, to) in g.edges() {
        let alpha = c.simple_root_unchecked(i);
        if g.weight(to) != &(g.weight(from) - &alpha) {
            violations.push(Violation {
                axiom: Axiom::C2,
                element: Some(from),
                color: Some(i),
                detail: format!(
                    "wt(f(b)) = {} but wt(b) - alpha = {}",
                    g.weight(to),
                    g.weight(from) - &alpha
                ),
            });
        }
    }
    for i in 0..g.rank() {
        let on_string: HashSet<usize> = g.i_strings(i).into_iter().flatten().collect();
        for b in 0..g.len() {
            if !on_string.contains(&b) {
                violations.push(Violation {
                    axiom: Axiom::C4,
                    element: Some(b),
                    color: Some(i),
                    detail: "element lies on an infinite (cyclic) string".into(),
                });
                continue;
            }
            let lhs = g.phi(b, i) as i64 - g.eps(b, i) as i64;
            let rhs = g.weight(b).0[i];
            if lhs != rhs {
                violations.push(Violation {
                    axiom: Axiom::C1,
                    element: Some(b),
                    color: Some(i),
                    detail: format!("phi - eps = {lhs} but <alpha^vee, wt> = {rhs}"),
                });
            }
        }
    }
    if !violations.is_empty() || g.provenance() == Provenance::Modified {
        return ValidationReport { violations };
    }

    let ambient = Arc::new(g.clone());
    for comp in Subcrystal::component_split(&ambient) {
        let hw = comp.highest_weight_members();
        let anchor = comp.iter().next();
        if hw.len() != 1 {
            violations.push(Violation {
                axiom: Axiom::HighestWeight,
                element: anchor,
                color: None,
                detail: format!("component has {} highest-weight elements", hw.len()),
            });
            continue;
        }
        let nu = g.weight(hw[0]).clone();
        if !nu.is_dominant() {
            violations.push(Violation {
                axiom: Axiom::HighestWeight,
                element: Some(hw[0]),
                color: None,
                detail: format!("highest weight {nu} is not dominant"),
            });
            continue;
        }
        match models::highest_weight_crystal(c, &nu) {
            Ok(model) => {
                if let Err(e) = canonical_component_iso(&comp, &model) {
                    violations.push(Violation {
                        axiom: Axiom::ComponentIso,
                        element: Some(hw[0]),
                        color: None,
                        detail: format!("not isomorphic to B{nu}: {e}"),
                    });
                }
            }
            Err(_) => {
                if character(&comp) != weyl_character(c, &nu) {
                    violations.push(Violation {
                        axiom: Axiom::ComponentIso,
                        element: Some(hw[0]),
                        color: None,
                        detail: format!("character differs from that of B{nu}"),
                    });
                }
            }
        }
    }
    ValidationReport { violations }
}
