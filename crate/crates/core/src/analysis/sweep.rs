//! Exhaustive grids over `(lambda, mu, w, u)`, and the hinge criterion for
//! arbitrary E-closed extremal factors.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;

use super::{
    find_hinges, is_extremal, product_subset_in, ProductClassification, ProductClassifier,
};
use crate::cartan::{CartanData, Weight};
use crate::crystal::{CrystalGraph, Subcrystal};
use crate::error::{Error, Result};
use crate::weyl::{enumerate_group, kouno_criterion, WeylElement, DEFAULT_GROUP_LIMIT};

/// Dominant weights with every coordinate in `0..=bound`, lexicographically.
pub fn weights_up_to(c: &CartanData, bound: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..c.rank() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=bound).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Weight::new).collect()
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub cartan: Arc<CartanData>,
    pub lambdas: Vec<Weight>,
    pub mus: Vec<Weight>,
    /// Worker threads; `0` lets the pool decide.
    pub jobs: usize,
    /// Largest ambient product allowed.
    pub budget: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub lambda: Weight,
    pub mu: Weight,
    pub w: WeylElement,
    pub u: WeylElement,
    pub n_broken: usize,
    pub extremal: bool,
    /// Evaluated on `w`, `u` as given rather than their coset representatives.
    pub kouno: bool,
    pub demazure_sum: bool,
    pub labels: String,
}

impl SweepRow {
    pub fn agrees(&self) -> bool {
        let verdicts = [
            self.extremal,
            self.n_broken == 0,
            self.kouno,
            self.demazure_sum,
        ];
        verdicts.iter().all(|&v| v == verdicts[0])
    }

    fn from_record(
        record: &ProductClassification,
        w: &WeylElement,
        u: &WeylElement,
        kouno: bool,
    ) -> Self {
        SweepRow {
            lambda: record.lambda.clone(),
            mu: record.mu.clone(),
            w: w.clone(),
            u: u.clone(),
            n_broken: record.n_broken,
            extremal: record.extremal,
            kouno,
            demazure_sum: record.demazure_sum.is_ok(),
            labels: match &record.demazure_sum {
                Ok(labels) => labels
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(";"),
                Err(_) => "-".into(),
            },
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn disagreements(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.agrees())
    }

    pub fn n_disagreements(&self) -> usize {
        self.disagreements().count()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} instances, {} disagreements",
            self.rows.len(),
            self.n_disagreements()
        )
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from(
            "lambda\tmu\tw\tu\tn_broken_hinges\textremal\tkouno\tdemazure_sum\tlabels\n",
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.lambda, r.mu, r.w, r.u, r.n_broken, r.extremal, r.kouno, r.demazure_sum, r.labels
            );
        }
        out
    }
}

/// Classifies `B_w(lambda) ⊗ B_u(mu)` for every grid point. Work for a
/// point is shared with every other point having the same coset
/// representatives. Rows come out in grid order: `lambda`, `mu`, `w`, `u`.
pub fn sweep(config: &SweepConfig) -> Result<SweepResult> {
    let c = &config.cartan;
    let group = enumerate_group(c, DEFAULT_GROUP_LIMIT)?;
    let pairs: Vec<(&Weight, &Weight)> = config
        .lambdas
        .iter()
        .flat_map(|l| config.mus.iter().map(move |m| (l, m)))
        .collect();
    let run = || {
        pairs
            .par_iter()
            .map(|(l, m)| sweep_pair(c, l, m, &group, config.budget))
            .collect::<Result<Vec<Vec<SweepRow>>>>()
    };
    let chunks = if config.jobs == 0 {
        run()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::Hypothesis(format!("thread pool: {e}")))?
            .install(run)?
    };
    Ok(SweepResult {
        rows: chunks.into_iter().flatten().collect(),
    })
}

fn sweep_pair(
    c: &Arc<CartanData>,
    lambda: &Weight,
    mu: &Weight,
    group: &[WeylElement],
    budget: usize,
) -> Result<Vec<SweepRow>> {
    let classifier = ProductClassifier::new(c, lambda, mu, budget)?;
    let mut cache: HashMap<(WeylElement, WeylElement), ProductClassification> = HashMap::new();
    let mut rows = Vec::with_capacity(group.len() * group.len());
    for w in group {
        let rw = w.min_coset_rep(lambda)?;
        for u in group {
            let ru = u.min_coset_rep(mu)?;
            let key = (rw.clone(), ru.clone());
            if !cache.contains_key(&key) {
                let record = classifier.classify(&rw, &ru)?;
                cache.insert(key.clone(), record);
            }
            let kouno = kouno_criterion(lambda, w, mu, u)?;
            rows.push(SweepRow::from_record(&cache[&key], w, u, kouno));
        }
    }
    Ok(rows)
}

/// Every nonempty subset of `g` that is closed under all `e_i` and extremal.
/// Brute force; refuses crystals with more than 20 elements.
pub fn e_closed_extremal_subsets(g: &Arc<CrystalGraph>) -> Result<Vec<Subcrystal>> {
    if g.len() > 20 {
        return Err(Error::BudgetExceeded {
            needed: g.len(),
            budget: 20,
        });
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << g.len()) {
        let s = Subcrystal::new(g.clone(), (0..g.len()).filter(|&b| mask >> b & 1 == 1))?;
        if s.is_e_closed() && is_extremal(&s)?.extremal {
            out.push(s);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtremalFactorSweep {
    pub instances: usize,
    pub extremal_products: usize,
    pub disagreements: usize,
}

/// For every ordered pair of crystals in `crystals` and every pair of
/// E-closed extremal subsets of them, compares the string scan of `X ⊗ Y`
/// against the absence of broken hinges.
pub fn extremal_factor_sweep(crystals: &[Arc<CrystalGraph>]) -> Result<ExtremalFactorSweep> {
    let subsets = crystals
        .iter()
        .map(e_closed_extremal_subsets)
        .collect::<Result<Vec<_>>>()?;
    let mut out = ExtremalFactorSweep::default();
    for (gx, xs) in crystals.iter().zip(&subsets) {
        for (gy, ys) in crystals.iter().zip(&subsets) {
            let ambient = Arc::new(gx.tensor(gy)?);
            for x in xs {
                for y in ys {
                    let p = product_subset_in(ambient.clone(), x, y)?;
                    let by_strings = is_extremal(&p.product)?.extremal;
                    let by_hinges = find_hinges(&p)?.n_broken() == 0;
                    out.instances += 1;
                    out.extremal_products += usize::from(by_strings);
                    out.disagreements += usize::from(by_strings != by_hinges);
                }
            }
        }
    }
    Ok(out)
}
