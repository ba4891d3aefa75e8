//! Bounded breadth-first exploration of a connected component.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::crystal::{e_tilde, f_tilde, wt};
use crate::error::{Error, Result};
use crate::json::int_value;
use crate::vector::LambdaVector;

pub const DEFAULT_DEPTH: usize = 8;
pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Direction {
    /// Follow `f_1`, `f_2`.
    #[default]
    Lower,
    /// Follow `e_1`, `e_2`.
    Raise,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BfsOptions {
    pub depth: usize,
    pub direction: Direction,
    pub node_budget: usize,
    pub parallel: bool,
}

impl Default for BfsOptions {
    fn default() -> Self {
        BfsOptions {
            depth: DEFAULT_DEPTH,
            direction: Direction::Lower,
            node_budget: DEFAULT_NODE_BUDGET,
            parallel: true,
        }
    }
}

/// Nodes in canonical order; edge `(u, i, v)` means `f_i(nodes[u]) = nodes[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    pub nodes: Vec<LambdaVector>,
    pub edges: Vec<(usize, u8, usize)>,
    pub seed: usize,
    pub depth: usize,
    /// No undiscovered neighbour remains, so the whole component was found.
    pub saturated: bool,
}

fn neighbours(x: &LambdaVector, direction: Direction) -> Vec<LambdaVector> {
    let mut out = Vec::with_capacity(4);
    for i in [1, 2] {
        if direction != Direction::Raise {
            out.extend(f_tilde(x, i));
        }
        if direction != Direction::Lower {
            out.extend(e_tilde(x, i));
        }
    }
    out
}

pub fn bfs_component(seed: &LambdaVector, depth: usize) -> Result<CrystalGraph> {
    bfs_component_with(
        seed,
        &BfsOptions {
            depth,
            ..BfsOptions::default()
        },
    )
}

pub fn bfs_component_with(seed: &LambdaVector, opts: &BfsOptions) -> Result<CrystalGraph> {
    let mut seen: BTreeSet<LambdaVector> = BTreeSet::new();
    seen.insert(seed.clone());
    let mut frontier = vec![seed.clone()];
    let mut saturated = false;
    for level in 0..=opts.depth {
        let expanded: Vec<Vec<LambdaVector>> = if opts.parallel {
            frontier
                .par_iter()
                .map(|x| neighbours(x, opts.direction))
                .collect()
        } else {
            frontier.iter().map(|x| neighbours(x, opts.direction)).collect()
        };
        let fresh: BTreeSet<LambdaVector> = expanded
            .into_iter()
            .flatten()
            .filter(|y| !seen.contains(y))
            .collect();
        if fresh.is_empty() {
            saturated = true;
            break;
        }
        if level == opts.depth {
            break;
        }
        if seen.len() + fresh.len() > opts.node_budget {
            return Err(Error::NodeBudgetExceeded(opts.node_budget));
        }
        seen.extend(fresh.iter().cloned());
        frontier = fresh.into_iter().collect();
    }

    let nodes: Vec<LambdaVector> = seen.into_iter().collect();
    let position: BTreeMap<&LambdaVector, usize> =
        nodes.iter().enumerate().map(|(n, x)| (x, n)).collect();
    let edge_lists: Vec<Vec<(usize, u8, usize)>> = nodes
        .par_iter()
        .enumerate()
        .map(|(u, x)| {
            [1u8, 2]
                .into_iter()
                .filter_map(|i| {
                    let y = f_tilde(x, i)?;
                    position.get(&y).map(|&v| (u, i, v))
                })
                .collect()
        })
        .collect();
    let edges = edge_lists.into_iter().flatten().collect();
    let seed = position[seed];
    Ok(CrystalGraph {
        nodes,
        edges,
        seed,
        depth: opts.depth,
        saturated,
    })
}

fn node_label(x: &LambdaVector) -> String {
    let mut s = String::new();
    for (k, v) in x.entries().iter().rev() {
        if !s.is_empty() {
            s.push(' ');
        }
        let _ = write!(s, "x{k}={v}");
    }
    if s.is_empty() {
        s.push('0');
    }
    let (w1, w2) = wt(x);
    let _ = write!(s, "\\nwt=({w1},{w2})");
    s
}

impl CrystalGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (n, x) in self.nodes.iter().enumerate() {
            let shape = if n == self.seed { ", shape=box" } else { "" };
            let _ = writeln!(out, "  n{n} [label=\"{}\"{shape}];", node_label(x));
        }
        for (u, i, v) in &self.edges {
            let _ = writeln!(out, "  n{u} -> n{v} [label=\"{i}\"];");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .map(|x| {
                let (w1, w2) = wt(x);
                json!({
                    "entries": x.to_json()["entries"].clone(),
                    "wt": [int_value(&w1), int_value(&w2)],
                })
            })
            .collect();
        let edges: Vec<Value> = self.edges.iter().map(|(u, i, v)| json!([u, i, v])).collect();
        json!({
            "nodes": nodes,
            "edges": edges,
            "seed": self.seed,
            "depth": self.depth,
            "saturated": self.saturated,
        })
    }
}
