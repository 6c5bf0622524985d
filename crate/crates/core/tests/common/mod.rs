#![allow(dead_code)]

use rand::Rng;
use wiener_trees::RootedTree;

/// Random recursive tree: node `i` picks its parent uniformly from `0..i`.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> RootedTree {
    let edges: Vec<(usize, usize)> = (1..n).map(|c| (rng.gen_range(0..c), c)).collect();
    RootedTree::from_edges(n, edges).unwrap()
}

fn depth(tree: &RootedTree, mut v: usize) -> u64 {
    let mut d = 0;
    while let Some(p) = tree.parent(v) {
        v = p;
        d += 1;
    }
    d
}

/// Distance between `a` and `b` by climbing to their lowest common ancestor.
pub fn pair_distance(tree: &RootedTree, mut a: usize, mut b: usize) -> u64 {
    let (mut da, mut db) = (depth(tree, a), depth(tree, b));
    let mut steps = 0;
    while da > db {
        a = tree.parent(a).unwrap();
        da -= 1;
        steps += 1;
    }
    while db > da {
        b = tree.parent(b).unwrap();
        db -= 1;
        steps += 1;
    }
    while a != b {
        a = tree.parent(a).unwrap();
        b = tree.parent(b).unwrap();
        steps += 2;
    }
    steps
}

/// Wiener index by enumerating every unordered pair.
pub fn wiener_by_pairs(tree: &RootedTree) -> u64 {
    let n = tree.len();
    let mut total = 0;
    for a in 0..n {
        for b in a + 1..n {
            total += pair_distance(tree, a, b);
        }
    }
    total
}

/// Sum of distances from the root of `tree` to the nodes of the subtree
/// below `child`.
pub fn root_distance_into_subtree(tree: &RootedTree, child: usize) -> u64 {
    let mut total = 0;
    let mut stack = vec![(child, 1u64)];
    while let Some((v, d)) = stack.pop() {
        total += d;
        stack.extend(tree.children(v).iter().map(|&c| (c, d + 1)));
    }
    total
}
