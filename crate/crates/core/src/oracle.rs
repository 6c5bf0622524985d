//! Ground-truth Wiener index and distance sums computed on materialized trees.
//!
//! These never look at which family a tree came from. Everything the
//! formula side claims is checked against them.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tree::RootedTree;
use crate::Integer;

/// Sum of BFS distances from `source`. A tree with `n < 2^32` nodes has
/// every such sum below `n^2 < 2^64`.
fn bfs_distance_sum(
    adj: &[Vec<usize>],
    source: usize,
    dist: &mut [u32],
    queue: &mut VecDeque<usize>,
) -> u64 {
    dist.fill(u32::MAX);
    dist[source] = 0;
    queue.clear();
    queue.push_back(source);
    let mut total = 0u64;
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        total += u64::from(du);
        for &w in &adj[u] {
            if dist[w] == u32::MAX {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    total
}

/// `D_T(v)`: the sum of distances from `v` to every node of `tree`.
pub fn distance_sum(tree: &RootedTree, v: usize) -> Result<Integer> {
    if !tree.contains(v) {
        return Err(Error::UnknownNode(v));
    }
    let adj = tree.adjacency();
    let mut dist = vec![0; tree.len()];
    let sum = bfs_distance_sum(&adj, v, &mut dist, &mut VecDeque::new());
    Ok(sum.into())
}

/// Distance sums from every node, in node order.
pub fn all_distance_sums(tree: &RootedTree) -> Vec<Integer> {
    let adj = tree.adjacency();
    let n = tree.len();
    (0..n)
        .into_par_iter()
        .map_init(
            || (vec![0u32; n], VecDeque::with_capacity(n)),
            |(dist, queue), v| BigInt::from(bfs_distance_sum(&adj, v, dist, queue)),
        )
        .collect()
}

/// Wiener index as half the sum of all ordered-pair distances, with one
/// breadth-first traversal per node. Quadratic; the reference oracle.
///
/// ```
/// use wiener_trees::{oracle::wiener_bfs, RootedTree};
/// assert_eq!(wiener_bfs(&RootedTree::path(3)).unwrap(), 4.into());
/// ```
pub fn wiener_bfs(tree: &RootedTree) -> Result<Integer> {
    if tree.is_empty() {
        return Err(Error::EmptyTree);
    }
    let doubled: Integer = all_distance_sums(tree).into_iter().sum();
    debug_assert!((&doubled % 2u32).is_zero());
    Ok(doubled / 2u32)
}

/// Wiener index by edge contributions: removing the edge above a subtree of
/// size `s` splits the tree into `s` and `n - s` nodes, and that edge lies on
/// exactly `s * (n - s)` shortest paths. Linear.
pub fn wiener_linear(tree: &RootedTree) -> Result<Integer> {
    if tree.is_empty() {
        return Err(Error::EmptyTree);
    }
    let n = tree.len() as u128;
    let sizes = tree.subtree_sizes();
    let mut total = BigInt::zero();
    for (v, &s) in sizes.iter().enumerate() {
        if tree.parent(v).is_some() {
            let s = s as u128;
            total += s * (n - s);
        }
    }
    Ok(total)
}
