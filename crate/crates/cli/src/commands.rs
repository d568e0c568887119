use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use serde_json::json;

use demkit_core::analysis::{
    edge_removal_experiment, sweep as run_sweep, weights_up_to, HingeReport, ProductClassifier,
    RemovalMode, SweepConfig, Verdict, DEFAULT_BUDGET,
};
use demkit_core::demazure::{
    demazure_character, demazure_character_check_all_words, demazure_subset,
};
use demkit_core::models::highest_weight_crystal;
use demkit_core::tableaux::dimension_oracle;
use demkit_core::{
    validate, CartanData, CrystalGraph, DemazureLabel, DotStyle, Weight, WeylElement,
};

use crate::{
    AnalyzeArgs, CharArgs, CrystalArgs, DemazureArgs, ExperimentArgs, Format, Outcome, OutputArgs,
    ProductArgs, SweepArgs, TensorArgs,
};

fn cartan(label: &str) -> Result<Arc<CartanData>> {
    Ok(CartanData::from_label(label)?)
}

fn weight(c: &CartanData, s: &str) -> Result<Weight> {
    let w = Weight::parse(s)?;
    c.check_weight(&w)?;
    Ok(w)
}

fn weyl(c: &Arc<CartanData>, s: &str) -> Result<WeylElement> {
    Ok(WeylElement::parse(c, s)?)
}

/// Writes `text` to `--out`, or prints it when no file is given.
fn emit(output: &OutputArgs, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => write_file(path, text),
        None => {
            println!("{}", text.trim_end_matches('\n'));
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn wants_output(output: &OutputArgs) -> bool {
    output.out.is_some() || output.format.is_some()
}

fn format_or(output: &OutputArgs, default: Format) -> Format {
    output.format.unwrap_or(default)
}

fn summary_line(g: &CrystalGraph) -> String {
    let hw = g.highest_weight_elements();
    match hw.as_slice() {
        [(_, wt)] => format!("{} elements, hw {wt}", g.len()),
        _ => {
            let list: Vec<String> = hw.iter().map(|(_, wt)| wt.to_string()).collect();
            format!(
                "{} elements, {} highest weights: {}",
                g.len(),
                hw.len(),
                list.join(" ")
            )
        }
    }
}

fn check_budget(needed: u128, budget: usize) -> Result<()> {
    if needed > budget as u128 {
        return Err(demkit_core::Error::BudgetExceeded {
            needed: usize::try_from(needed).unwrap_or(usize::MAX),
            budget,
        }
        .into());
    }
    Ok(())
}

pub fn crystal(args: &CrystalArgs) -> Result<Outcome> {
    let g: Arc<CrystalGraph> = match &args.import {
        Some(path) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Arc::new(CrystalGraph::from_json(&text)?)
        }
        None => {
            let c = cartan(args.ty.as_deref().expect("required by clap"))?;
            let lam = weight(&c, args.weight.as_deref().expect("required by clap"))?;
            highest_weight_crystal(&c, &lam)?
        }
    };
    if args.validate {
        let report = validate(&g);
        if !report.passed() {
            for v in &report.violations {
                eprintln!("violation: {v}");
            }
            bail!(
                "crystal failed validation with {} violation(s)",
                report.violations.len()
            );
        }
        println!("valid");
    }
    println!("{}", summary_line(&g));
    if wants_output(&args.output) {
        let text = match format_or(&args.output, Format::Json) {
            Format::Json => g.to_json(),
            Format::Dot => g.to_dot(&DotStyle::default()),
            Format::Tsv => bail!("tsv output is only available for sweep"),
        };
        emit(&args.output, &text)?;
    }
    Ok(Outcome::Success)
}

pub fn demazure(args: &DemazureArgs) -> Result<Outcome> {
    let c = cartan(&args.ty)?;
    let lam = weight(&c, &args.weight)?;
    let w = weyl(&c, &args.w)?;
    let g = highest_weight_crystal(&c, &lam)?;
    let s = demazure_subset(&g, &w)?;
    let label = DemazureLabel::new(lam, &w)?;
    println!("{label}: {} of {} elements", s.len(), g.len());
    if wants_output(&args.output) {
        let text = match format_or(&args.output, Format::Json) {
            Format::Json => s.to_json(),
            Format::Dot => g.to_dot(&DotStyle {
                subset: Some(s.members().clone()),
                ..Default::default()
            }),
            Format::Tsv => bail!("tsv output is only available for sweep"),
        };
        emit(&args.output, &text)?;
    }
    Ok(Outcome::Success)
}

struct Product {
    lambda: Weight,
    mu: Weight,
    w: WeylElement,
    u: WeylElement,
}

fn parse_product(args: &ProductArgs) -> Result<(Arc<CartanData>, Product)> {
    let c = cartan(&args.ty)?;
    let lambda = weight(&c, &args.lambda)?;
    let mu = weight(&c, &args.mu)?;
    let w = weyl(&c, &args.w)?;
    let u = weyl(&c, &args.u)?;
    Ok((c, Product { lambda, mu, w, u }))
}

pub fn tensor(args: &TensorArgs) -> Result<Outcome> {
    let (c, p) = parse_product(&args.product)?;
    let budget = args.budget.budget.unwrap_or(DEFAULT_BUDGET);
    check_budget(
        dimension_oracle(&c, &p.lambda)? * dimension_oracle(&c, &p.mu)?,
        budget,
    )?;
    let classifier = ProductClassifier::new(&c, &p.lambda, &p.mu, budget)?;
    let product = classifier.product(&p.w, &p.u)?;
    let ambient = classifier.ambient();
    let (labels, _) = ambient.component_labels();
    let met: BTreeSet<usize> = product.product.iter().map(|b| labels[b]).collect();
    println!("ambient: {}", summary_line(ambient));
    println!(
        "subset: {} elements in {} of {} components",
        product.product.len(),
        met.len(),
        ambient.component_labels().1
    );
    if wants_output(&args.output) {
        let text = match format_or(&args.output, Format::Json) {
            Format::Json => ambient.to_json(),
            Format::Dot => ambient.to_dot(&DotStyle {
                subset: Some(product.product.members().clone()),
                ..Default::default()
            }),
            Format::Tsv => bail!("tsv output is only available for sweep"),
        };
        emit(&args.output, &text)?;
    }
    Ok(Outcome::Success)
}

fn hinge_json(report: &HingeReport) -> String {
    let hinges: Vec<_> = report
        .hinges
        .iter()
        .map(|h| {
            json!({
                "broken": h.broken,
                "element": h.element,
                "i": h.color + 1,
                "left": h.left,
                "right": h.right,
                "witness": h.witness,
            })
        })
        .collect();
    json!({ "hinges": hinges }).to_string()
}

fn hinge_style(report: &HingeReport, subset: &BTreeSet<usize>) -> DotStyle {
    DotStyle {
        subset: Some(subset.clone()),
        highlight_nodes: report.broken().map(|h| h.element).collect(),
        highlight_edges: report.broken().map(|h| (h.color, h.element)).collect(),
    }
}

pub fn analyze(args: &AnalyzeArgs) -> Result<Outcome> {
    let (c, p) = parse_product(&args.product)?;
    let budget = args.budget.budget.unwrap_or(DEFAULT_BUDGET);
    let classifier = ProductClassifier::new(&c, &p.lambda, &p.mu, budget)?;
    let record = classifier.classify(&p.w, &p.u)?;
    println!("{record}");
    for h in &record.hinges.hinges {
        let state = match h.witness {
            Some(wit) => format!("broken, witness {wit}"),
            None => "intact".into(),
        };
        println!(
            "hinge {} = {}⊗{} color {}: {state}",
            h.element,
            h.left,
            h.right,
            h.color + 1
        );
    }
    println!("broken hinges: {}", record.n_broken);
    if wants_output(&args.output) {
        let subset = classifier.product(&p.w, &p.u)?.product.members().clone();
        let text = match format_or(&args.output, Format::Json) {
            Format::Json => hinge_json(&record.hinges),
            Format::Dot => classifier
                .ambient()
                .to_dot(&hinge_style(&record.hinges, &subset)),
            Format::Tsv => bail!("tsv output is only available for sweep"),
        };
        emit(&args.output, &text)?;
    }
    Ok(match record.verdict() {
        Verdict::AllTrue => Outcome::Success,
        Verdict::AllFalse => Outcome::VerdictFalse,
        Verdict::Disagreement => {
            eprintln!("verdicts disagree");
            Outcome::Falsified
        }
    })
}

fn parse_weight_list(c: &CartanData, s: &str) -> Result<Vec<Weight>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let w = weight(c, t.trim())?;
            c.check_dominant(&w)?;
            Ok(w)
        })
        .collect()
}

pub fn sweep(args: &SweepArgs) -> Result<Outcome> {
    let c = cartan(&args.ty)?;
    if c.rank() > 3 && args.budget.budget.is_none() {
        bail!("sweeps above rank 3 need an explicit --budget");
    }
    let weights = match (&args.weights, args.weight_bound) {
        (Some(list), _) => parse_weight_list(&c, list)?,
        (None, Some(bound)) if bound >= 0 => weights_up_to(&c, bound),
        (None, Some(bound)) => bail!("weight bound must be nonnegative, got {bound}"),
        (None, None) => bail!("give --weight-bound or --weights"),
    };
    if let Some(f) = args.output.format {
        if f != Format::Tsv {
            bail!("sweep writes tsv only");
        }
    }
    let config = SweepConfig {
        cartan: c,
        lambdas: weights.clone(),
        mus: weights,
        jobs: args.jobs,
        budget: args.budget.budget.unwrap_or(DEFAULT_BUDGET),
    };
    let result = run_sweep(&config)?;
    let tsv = result.to_tsv();
    match &args.output.out {
        Some(path) => {
            write_file(path, &tsv)?;
            println!("{}", result.summary());
        }
        None => {
            print!("{tsv}");
            eprintln!("{}", result.summary());
        }
    }
    for row in result.disagreements() {
        eprintln!(
            "disagreement: {} {} {} {}",
            row.lambda, row.mu, row.w, row.u
        );
    }
    Ok(if result.n_disagreements() > 0 {
        Outcome::Falsified
    } else {
        Outcome::Success
    })
}

pub fn character(args: &CharArgs) -> Result<Outcome> {
    let c = cartan(&args.ty)?;
    let lam = weight(&c, &args.weight)?;
    let w = weyl(&c, &args.w)?;
    let p = demazure_character(&c, &w.reduce_word(), &lam)?;
    println!("{p}");
    if args.check {
        c.check_dominant(&lam)?;
        let g = highest_weight_crystal(&c, &lam)?;
        if !demazure_character_check_all_words(&g, &w)? {
            eprintln!("crystal character differs from the operator formula");
            return Ok(Outcome::Falsified);
        }
        println!("matches the crystal for every reduced word");
    }
    Ok(Outcome::Success)
}

pub fn experiment(args: &ExperimentArgs) -> Result<Outcome> {
    let mode = if args.skip_removal {
        RemovalMode::Skip
    } else if args.single {
        RemovalMode::Single
    } else {
        RemovalMode::All
    };
    let report = edge_removal_experiment(mode)?;
    let describe = |extremal: bool, n_broken: usize, d: &demkit_core::Decomposition| {
        let sum = match d {
            Ok(labels) => {
                let names: Vec<String> = labels.iter().map(ToString::to_string).collect();
                format!("recognized as {}", names.join(" ⊕ "))
            }
            Err(failure) => format!("not a Demazure sum ({failure})"),
        };
        format!("{n_broken} broken hinges, extremal: {extremal}, {sum}")
    };
    println!(
        "before: {}",
        describe(
            report.before.extremal,
            report.before.n_broken,
            &report.before.decomposition
        )
    );
    for (color, from, to) in &report.removed {
        println!("removed f_{} edge {from} -> {to}", color + 1);
    }
    if let Some(after) = &report.after {
        println!(
            "after: {}",
            describe(after.extremal, after.n_broken, &after.decomposition)
        );
    }
    if wants_output(&args.output) {
        let graph = report.after_graph.as_ref().unwrap_or(&report.before_graph);
        let text = match format_or(&args.output, Format::Dot) {
            Format::Json => graph.to_json(),
            Format::Dot => graph.to_dot(&hinge_style(&report.hinges, &report.subset)),
            Format::Tsv => bail!("tsv output is only available for sweep"),
        };
        emit(&args.output, &text)?;
    }
    Ok(match mode {
        RemovalMode::Skip => Outcome::Success,
        RemovalMode::Single if report.succeeded() => Outcome::Success,
        RemovalMode::Single => Outcome::VerdictFalse,
        RemovalMode::All if report.succeeded() => Outcome::Success,
        RemovalMode::All => Outcome::Falsified,
    })
}
