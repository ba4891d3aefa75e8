//! Run configuration: flags layered over an optional flat `key=value` file.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context};
use rank2_crystal::graph::{DEFAULT_DEPTH, DEFAULT_NODE_BUDGET};
use rank2_crystal::{CartanRank2, Int, Weight};

use crate::Usage;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

pub const DEFAULT_WINDOW: i64 = 12;

/// Fully resolved settings shared by every command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub c1: Option<u32>,
    pub c2: Option<u32>,
    pub l1: Option<Int>,
    pub l2: Option<Int>,
    pub depth: usize,
    pub window: i64,
    pub budget: usize,
    pub format: Format,
    pub threads: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            c1: None,
            c2: None,
            l1: None,
            l2: None,
            depth: DEFAULT_DEPTH,
            window: DEFAULT_WINDOW,
            budget: DEFAULT_NODE_BUDGET,
            format: Format::Text,
            threads: None,
        }
    }
}

/// Settings as given on one layer; `None` leaves the layer below in place.
#[derive(Debug, Clone, Default, PartialEq, Eq, clap::Args)]
pub struct Overrides {
    #[arg(long, global = true)]
    pub c1: Option<u32>,
    #[arg(long, global = true)]
    pub c2: Option<u32>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub l1: Option<Int>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub l2: Option<Int>,
    /// BFS depth, or closure depth for `xi` and `member`.
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Largest |index| a family or box may touch.
    #[arg(long, global = true)]
    pub window: Option<i64>,
    /// Node, form or step budget.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for BFS and closures; output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

fn parse<T: FromStr>(key: &str, value: &str, line: usize) -> anyhow::Result<T>
where
    T::Err: fmt::Display,
{
    value
        .parse()
        .map_err(|e| anyhow::Error::new(Usage(format!("config line {line}: bad value for `{key}`: {e}"))))
}

impl Overrides {
    /// Reads `key = value` lines; `#` starts a comment.
    pub fn from_file_text(text: &str) -> anyhow::Result<Overrides> {
        let mut o = Overrides::default();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let Some((key, value)) = body.split_once('=') else {
                bail!(Usage(format!("config line {line}: expected key=value")));
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "c1" => o.c1 = Some(parse(key, value, line)?),
                "c2" => o.c2 = Some(parse(key, value, line)?),
                "l1" => o.l1 = Some(parse(key, value, line)?),
                "l2" => o.l2 = Some(parse(key, value, line)?),
                "depth" => o.depth = Some(parse(key, value, line)?),
                "window" => o.window = Some(parse(key, value, line)?),
                "budget" => o.budget = Some(parse(key, value, line)?),
                "format" => {
                    let f = <Format as clap::ValueEnum>::from_str(value, false)
                        .map_err(|e| Usage(format!("config line {line}: {e}")))?;
                    o.format = Some(f);
                }
                "threads" => o.threads = Some(parse(key, value, line)?),
                other => bail!(Usage(format!("config line {line}: unknown key `{other}`"))),
            }
        }
        Ok(o)
    }

    pub fn from_file(path: &Path) -> anyhow::Result<Overrides> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::from_file_text(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn apply(self, mut base: RunConfig) -> RunConfig {
        base.c1 = self.c1.or(base.c1);
        base.c2 = self.c2.or(base.c2);
        base.l1 = self.l1.or(base.l1);
        base.l2 = self.l2.or(base.l2);
        base.depth = self.depth.unwrap_or(base.depth);
        base.window = self.window.unwrap_or(base.window);
        base.budget = self.budget.unwrap_or(base.budget);
        base.format = self.format.unwrap_or(base.format);
        base.threads = self.threads.or(base.threads);
        base
    }
}

impl RunConfig {
    pub fn cartan(&self) -> anyhow::Result<CartanRank2> {
        let (Some(c1), Some(c2)) = (self.c1, self.c2) else {
            bail!(Usage("--c1 and --c2 are required".into()));
        };
        Ok(CartanRank2::new(c1, c2)?)
    }

    pub fn weight(&self) -> anyhow::Result<Weight> {
        let (Some(l1), Some(l2)) = (&self.l1, &self.l2) else {
            bail!(Usage("--l1 and --l2 are required".into()));
        };
        Ok(Weight::new(l1.clone(), l2.clone()))
    }

    pub fn window_checked(&self) -> anyhow::Result<i64> {
        if self.window < 1 {
            bail!(Usage(format!("--window must be positive, got {}", self.window)));
        }
        Ok(self.window)
    }
}
