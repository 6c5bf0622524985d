//! Wall-clock comparison of the `O(k)` formula routes against the linear and
//! quadratic tree algorithms.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use serde::Serialize;
use wiener_trees::closed_forms::{evaluate, Method};
use wiener_trees::composition::replay_family;
use wiener_trees::oracle::{wiener_bfs, wiener_linear};
use wiener_trees::{Integer, TreeFamily};

use crate::Failure;

/// Largest tree the quadratic tier runs on by default.
pub const DEFAULT_BFS_LIMIT: usize = 5000;

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timings {
    pub closed: u128,
    pub replay: u128,
    /// `None` when the tree is over the node budget.
    pub build: Option<u128>,
    pub linear: Option<u128>,
    pub bfs: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub family: &'static str,
    pub order: i64,
    pub nodes: String,
    pub value: String,
    /// Every tier that ran produced the same value.
    pub consistent: bool,
    /// Nanoseconds per tier. Not deterministic; everything else in the row is.
    pub timings_ns: Timings,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

pub fn bench(
    family: TreeFamily,
    max_order: i64,
    node_budget: usize,
    bfs_limit: usize,
) -> Result<Vec<Row>, Failure> {
    let min = family.min_nonempty_order();
    if max_order < min {
        return Err(Failure::usage(format!(
            "--max-order must be at least {min} for {family}"
        )));
    }
    let mut rows = Vec::new();
    for k in min..=max_order {
        let nodes = family.node_count(k)?;
        let (closed, closed_t) = timed(|| evaluate(family, k, Method::ClosedForm));
        let closed = closed?.value;
        let (replay, replay_t) = timed(|| replay_family(family, k));
        let replay = replay?.w;

        let mut timings = Timings {
            closed: closed_t.as_nanos(),
            replay: replay_t.as_nanos(),
            ..Timings::default()
        };
        let mut values: Vec<Integer> = vec![replay];
        let n = nodes.to_usize().filter(|&n| n <= node_budget);
        if let Some(n) = n {
            let (tree, build_t) = timed(|| family.generate(k, node_budget));
            let tree = tree?;
            timings.build = Some(build_t.as_nanos());
            let (linear, linear_t) = timed(|| wiener_linear(&tree));
            values.push(linear?);
            timings.linear = Some(linear_t.as_nanos());
            if n <= bfs_limit {
                let (bfs, bfs_t) = timed(|| wiener_bfs(&tree));
                values.push(bfs?);
                timings.bfs = Some(bfs_t.as_nanos());
            }
        }
        rows.push(Row {
            family: family.name(),
            order: k,
            nodes: nodes.to_string(),
            consistent: values.iter().all(|v| *v == closed),
            value: closed.to_string(),
            timings_ns: timings,
        });
    }
    Ok(rows)
}

fn show(ns: Option<u128>) -> String {
    match ns {
        Some(ns) => format!("{:.3}", ns as f64 / 1000.0),
        None => "skipped".to_string(),
    }
}

pub fn render(rows: &[Row]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>6} {:>14} {:>12} {:>12} {:>12} {:>12} {:>12}  value",
        "order", "nodes", "closed_us", "replay_us", "build_us", "linear_us", "bfs_us"
    );
    for r in rows {
        let t = &r.timings_ns;
        let nodes = if r.nodes.len() > 14 {
            format!("~10^{}", r.nodes.len() - 1)
        } else {
            r.nodes.clone()
        };
        let _ = writeln!(
            out,
            "{:>6} {:>14} {:>12} {:>12} {:>12} {:>12} {:>12}  {}{}",
            r.order,
            nodes,
            show(Some(t.closed)),
            show(Some(t.replay)),
            show(t.build),
            show(t.linear),
            show(t.bfs),
            r.value,
            if r.consistent { "" } else { "  MISMATCH" }
        );
    }
    out
}
