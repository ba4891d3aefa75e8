use std::io::Write;
use std::path::Path;

use anyhow::Context;
use serde_json::{json, Value};

use rank2_crystal::extremal::{highest_vector, lowest_vector};
use rank2_crystal::families::{component_family, displayed_family, table_rows, xi_family, RegimeKind, TableRow};
use rank2_crystal::polyhedral::{first_violation, xi_closure_default, ClosureOptions, FormFamily};
use rank2_crystal::verify::{run_suite, summary_json, Suite, VerifyOptions};
use rank2_crystal::{
    bfs_component_with, classify_weight, BfsOptions, CartanRank2, Direction, LambdaVector, Regime, Weight,
    WeightClassification,
};

use crate::config::{Format, RunConfig};
use crate::Usage;

pub enum Status {
    Done,
    /// Exit 1: no vector, not a member, or a failed check.
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SeedChoice {
    Highest,
    Lowest,
    Zero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DirectionArg {
    Lower,
    Raise,
    Both,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Lower => Direction::Lower,
            DirectionArg::Raise => Direction::Raise,
            DirectionArg::Both => Direction::Both,
        }
    }
}

fn print_json(out: &mut impl Write, v: &Value) -> anyhow::Result<()> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn no_dot(cfg: &RunConfig, what: &str) -> anyhow::Result<()> {
    if cfg.format == Format::Dot {
        return Err(Usage(format!("--format dot only applies to `graph`, not `{what}`")).into());
    }
    Ok(())
}

fn closure_options(cfg: &RunConfig) -> anyhow::Result<ClosureOptions> {
    Ok(ClosureOptions {
        window: cfg.window_checked()?,
        max_depth: cfg.depth,
        budget: cfg.budget,
        parallel: true,
    })
}

fn index_text(prefix: &str, n: Option<usize>) -> String {
    match n {
        None => "none".to_string(),
        Some(0) => "zero vector".to_string(),
        Some(n) => format!("{prefix}{n}"),
    }
}

pub fn classify(cfg: &RunConfig, out: &mut impl Write) -> anyhow::Result<Status> {
    no_dot(cfg, "classify")?;
    let wc = classify_weight(&cfg.cartan()?, &cfg.weight()?)?;
    match cfg.format {
        Format::Json => {
            let mut v = serde_json::to_value(&wc)?;
            v["highest_index"] = json!(wc.highest_index());
            v["lowest_index"] = json!(wc.lowest_index());
            print_json(out, &v)?;
        }
        _ => {
            writeln!(out, "{wc}")?;
            writeln!(
                out,
                "highest {}, lowest {}",
                index_text("H_-", wc.highest_index()),
                index_text("L_", wc.lowest_index())
            )?;
        }
    }
    Ok(Status::Done)
}

pub fn extremal(cfg: &RunConfig, highest: bool, out: &mut impl Write) -> anyhow::Result<Status> {
    no_dot(cfg, if highest { "hwv" } else { "lwv" })?;
    let (c, w) = (cfg.cartan()?, cfg.weight()?);
    let v = if highest {
        highest_vector(&c, &w)?
    } else {
        lowest_vector(&c, &w)?
    };
    match (&v, cfg.format) {
        (Some(v), Format::Json) => print_json(out, &v.to_json())?,
        (Some(v), _) => writeln!(out, "{v}")?,
        (None, Format::Json) => writeln!(out, "null")?,
        (None, _) => writeln!(out, "none")?,
    }
    Ok(if v.is_some() { Status::Done } else { Status::Negative })
}

fn default_seed(c: &CartanRank2, w: &Weight) -> anyhow::Result<(LambdaVector, Direction)> {
    if let Some(h) = highest_vector(c, w)? {
        return Ok((h, Direction::Lower));
    }
    if let Some(l) = lowest_vector(c, w)? {
        return Ok((l, Direction::Raise));
    }
    Ok((LambdaVector::zero(*c, w.clone()), Direction::Both))
}

pub fn graph(
    cfg: &RunConfig,
    seed: Option<SeedChoice>,
    direction: Option<DirectionArg>,
    out: &mut impl Write,
) -> anyhow::Result<Status> {
    let (c, w) = (cfg.cartan()?, cfg.weight()?);
    let (start, default_dir) = match seed {
        None => default_seed(&c, &w)?,
        Some(SeedChoice::Highest) => (
            highest_vector(&c, &w)?.ok_or_else(|| Usage(format!("{w} has no highest vector on {c}")))?,
            Direction::Lower,
        ),
        Some(SeedChoice::Lowest) => (
            lowest_vector(&c, &w)?.ok_or_else(|| Usage(format!("{w} has no lowest vector on {c}")))?,
            Direction::Raise,
        ),
        Some(SeedChoice::Zero) => (LambdaVector::zero(c, w.clone()), Direction::Both),
    };
    let opts = BfsOptions {
        depth: cfg.depth,
        direction: direction.map_or(default_dir, Direction::from),
        node_budget: cfg.budget,
        parallel: true,
    };
    let g = bfs_component_with(&start, &opts)?;
    match cfg.format {
        Format::Json => print_json(out, &g.to_json())?,
        _ => write!(out, "{}", g.to_dot())?,
    }
    Ok(Status::Done)
}

/// The regime family that applies to the weight: its own highest regime, else its
/// lowest regime.
fn weight_regime(wc: &WeightClassification) -> Option<(RegimeKind, usize)> {
    let r: Regime = if wc.highest_index().is_some_and(|n| n > 0) {
        wc.regime()
    } else {
        wc.lowest_regime()?
    };
    RegimeKind::of(r)
}

fn family_text(f: &FormFamily, out: &mut impl Write) -> anyhow::Result<()> {
    let k = f.k.map_or_else(String::new, |k| format!(" k={k}"));
    writeln!(
        out,
        "{}{k} window={} depth={} saturated={} forms={}",
        f.name.as_str(),
        f.window,
        f.depth,
        f.saturated,
        f.forms.len()
    )?;
    for form in &f.forms {
        writeln!(out, "{form} >= 0")?;
    }
    Ok(())
}

fn rows_output(cfg: &RunConfig, rows: &[TableRow], out: &mut impl Write) -> anyhow::Result<()> {
    if cfg.format == Format::Json {
        let v: Vec<Value> = rows
            .iter()
            .map(|r| json!({"row": r.row, "j": r.j, "i": r.i, "form": r.form.to_json()}))
            .collect();
        print_json(out, &Value::Array(v))
    } else {
        for r in rows {
            writeln!(out, "row {} j={} i={}: {} >= 0", r.row, r.j, r.i, r.form)?;
        }
        Ok(())
    }
}

pub fn xi(
    cfg: &RunConfig,
    family: &str,
    k: Option<usize>,
    table: bool,
    (j_max, i_max): (usize, usize),
    out: &mut impl Write,
) -> anyhow::Result<Status> {
    no_dot(cfg, "xi")?;
    let c = cfg.cartan()?;
    let opts = closure_options(cfg)?;
    let fam = match family {
        "closure" => xi_closure_default(&c, &opts)?,
        "displayed" => displayed_family(&c, opts.window as usize),
        "component" => {
            let w = cfg.weight()?;
            let wc = classify_weight(&c, &w)?;
            let (kind, k) = weight_regime(&wc)
                .ok_or_else(|| rank2_crystal::Error::PreconditionViolation(format!("{} has no regime family", wc.regime())))?;
            component_family(&c, &w, kind, k, &opts)?
        }
        n => {
            let kind = n
                .parse::<u8>()
                .ok()
                .and_then(RegimeKind::from_number)
                .ok_or_else(|| Usage(format!("unknown family `{n}`; use closure, displayed, component or 1-4")))?;
            let k = match k {
                Some(k) if k >= 1 => k,
                Some(_) => return Err(Usage("--k must be at least 1".into()).into()),
                None => {
                    let wc = classify_weight(&c, &cfg.weight()?)?;
                    match weight_regime(&wc) {
                        Some((found, k)) if found == kind => k,
                        _ => {
                            return Err(rank2_crystal::Error::RegimeMismatch {
                                family: kind.family_name().as_str().to_string(),
                                expected: kind.regime(1).name().to_string(),
                                found: wc.regime().to_string(),
                            }
                            .into())
                        }
                    }
                }
            };
            if table {
                rows_output(cfg, &table_rows(&c, kind, k, j_max, i_max), out)?;
                return Ok(Status::Done);
            }
            xi_family(&c, &cfg.weight()?, kind, k, &opts)?
        }
    };
    if table {
        return Err(Usage("--table needs a regime family 1-4".into()).into());
    }
    match cfg.format {
        Format::Json => print_json(out, &fam.to_json())?,
        _ => family_text(&fam, out)?,
    }
    Ok(Status::Done)
}

pub fn member(cfg: &RunConfig, path: &Path, out: &mut impl Write) -> anyhow::Result<Status> {
    no_dot(cfg, "member")?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Usage(format!("cannot read vector {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Usage(format!("vector {} is not JSON: {e}", path.display())))?;
    let x = LambdaVector::from_json(&value).with_context(|| format!("reading {}", path.display()))?;
    let (c, w) = (*x.cartan(), x.weight().clone());
    let opts = closure_options(cfg)?;
    let wc = classify_weight(&c, &w)?;
    let fam = match weight_regime(&wc) {
        Some((kind, k)) => component_family(&c, &w, kind, k, &opts)?,
        None => xi_closure_default(&c, &opts)?,
    };
    let violation = first_violation(&x, &fam)?;
    match cfg.format {
        Format::Json => {
            let v = json!({
                "member": violation.is_none(),
                "family": fam.name.as_str(),
                "k": fam.k,
                "forms": fam.forms.len(),
                "violation": violation.as_ref().map(|(f, v)| json!({
                    "form": f.to_json(),
                    "text": f.to_string(),
                    "value": rank2_crystal::json::int_value(v),
                })),
            });
            print_json(out, &v)?;
        }
        _ => match &violation {
            None => writeln!(out, "member ({} forms of {})", fam.forms.len(), fam.name.as_str())?,
            Some((f, v)) => writeln!(out, "not a member: {f} = {v} < 0")?,
        },
    }
    Ok(if violation.is_none() { Status::Done } else { Status::Negative })
}

pub fn verify(
    cfg: &RunConfig,
    suite: &str,
    samples: Option<usize>,
    seed: Option<u64>,
    out: &mut impl Write,
) -> anyhow::Result<Status> {
    no_dot(cfg, "verify")?;
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::from_name(suite).ok_or_else(|| Usage(format!("unknown suite `{suite}`")))?]
    };
    let mut opts = VerifyOptions::default();
    if let Some(n) = samples {
        opts.random_vectors = n;
    }
    if let Some(s) = seed {
        opts.seed = s;
    }
    let outcomes: Vec<_> = suites.into_iter().flat_map(|s| run_suite(s, &opts)).collect();
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    match cfg.format {
        Format::Json => print_json(out, &summary_json(&outcomes))?,
        _ => {
            for o in &outcomes {
                writeln!(out, "{o}")?;
            }
            writeln!(out, "{} checks, {failed} failed", outcomes.len())?;
        }
    }
    Ok(if failed == 0 { Status::Done } else { Status::Negative })
}
