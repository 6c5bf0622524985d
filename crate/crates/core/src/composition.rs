//! Wiener index algebra on tree summaries.
//!
//! A [`TreeSummary`] records `(n, W, D)`: node count, Wiener index, and the
//! distance sum from one anchor node. Gluing two trees at their anchors or
//! joining the anchors by a new edge yields a summary of the result, so the
//! recursive families can be evaluated without ever building a tree.
//!
//! Anchor propagation:
//!
//! * identify: the glued node is the new anchor, and each side contributes
//!   its own distance sum: `D = D_a + D_b`.
//! * join: the anchor stays at `a`'s anchor, and every node of `b` is one
//!   edge farther from it than from `b`'s anchor: `D = D_a + D_b + n_b`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::oracle::{distance_sum, wiener_bfs};
use crate::tree::{RootedTree, TreeFamily};
use crate::Integer;

/// `(node count, Wiener index, anchored distance sum)` of a non-empty tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeSummary {
    pub n: Integer,
    pub w: Integer,
    pub d_anchor: Integer,
}

impl TreeSummary {
    pub fn new(n: impl Into<Integer>, w: impl Into<Integer>, d_anchor: impl Into<Integer>) -> Self {
        TreeSummary {
            n: n.into(),
            w: w.into(),
            d_anchor: d_anchor.into(),
        }
    }

    /// One node, anchored at itself.
    pub fn vertex() -> Self {
        TreeSummary::new(1, 0, 0)
    }

    /// Summary of a materialized tree anchored at `anchor`, computed by the
    /// oracles.
    pub fn of_tree(tree: &RootedTree, anchor: usize) -> Result<Self> {
        Ok(TreeSummary {
            n: tree.len().into(),
            w: wiener_bfs(tree)?,
            d_anchor: distance_sum(tree, anchor)?,
        })
    }

    /// Checks the coarse bounds every real tree summary satisfies:
    /// `n >= 1`, `0 <= D <= (n-1)^2`, `0 <= W <= (n^3 - n) / 6`,
    /// and `W = D = 0` when `n = 1`.
    pub fn is_plausible(&self) -> bool {
        let one = BigInt::one();
        if self.n < one || self.w.sign() == num_bigint::Sign::Minus {
            return false;
        }
        if self.d_anchor.sign() == num_bigint::Sign::Minus {
            return false;
        }
        if self.n == one {
            return self.w.is_zero() && self.d_anchor.is_zero();
        }
        let m = &self.n - &one;
        let path_w = (&self.n * &self.n * &self.n - &self.n) / 6u32;
        self.d_anchor <= &m * &m && self.w <= path_w
    }

    /// Glue `self` and `other` together at their anchors (a node shared by
    /// both trees). The shared node is the result's anchor.
    pub fn identify(&self, other: &TreeSummary) -> TreeSummary {
        let one = BigInt::one();
        TreeSummary {
            n: &self.n + &other.n - &one,
            w: &self.w
                + &other.w
                + (&self.n - &one) * &other.d_anchor
                + (&other.n - &one) * &self.d_anchor,
            d_anchor: &self.d_anchor + &other.d_anchor,
        }
    }

    /// Connect the anchors of `self` and `other` by a new edge. The result
    /// stays anchored at `self`'s anchor.
    pub fn join(&self, other: &TreeSummary) -> TreeSummary {
        TreeSummary {
            n: &self.n + &other.n,
            w: &self.w
                + &other.w
                + &self.n * &other.d_anchor
                + &other.n * &self.d_anchor
                + &self.n * &other.n,
            d_anchor: &self.d_anchor + &other.d_anchor + &other.n,
        }
    }
}

/// Summary of the order-`k` tree of `family`, anchored at its root, built
/// by replaying the family's recursive construction through [`TreeSummary::join`].
///
/// Binary Fibonacci trees of order 0 are empty and have no summary.
///
/// ```
/// use wiener_trees::{composition::{replay_family, TreeSummary}, TreeFamily};
/// let s = replay_family(TreeFamily::BinaryFibonacci, 4).unwrap();
/// assert_eq!(s, TreeSummary::new(7, 50, 11));
/// ```
pub fn replay_family(family: TreeFamily, k: i64) -> Result<TreeSummary> {
    family.check_order(k, family.min_nonempty_order())?;
    let summary = match family {
        TreeFamily::Binomial => {
            let mut t = TreeSummary::vertex();
            for _ in 0..k {
                t = t.join(&t);
            }
            t
        }
        TreeFamily::Fibonacci => {
            // (T_{f_{i-1}}, T_{f_i}) from i = 0
            let (mut older, mut newer) = (TreeSummary::vertex(), TreeSummary::vertex());
            for _ in 1..=k {
                let next = newer.join(&older);
                older = std::mem::replace(&mut newer, next);
            }
            newer
        }
        TreeFamily::BinaryFibonacci => {
            // (T^b_{f_{i-1}}, T^b_{f_i}) from i = 1; None is the empty tree.
            let mut older: Option<TreeSummary> = None;
            let mut newer = TreeSummary::vertex();
            for _ in 2..=k {
                let mut next = TreeSummary::vertex().join(&newer);
                if let Some(right) = &older {
                    next = next.join(right);
                }
                older = Some(std::mem::replace(&mut newer, next));
            }
            newer
        }
    };
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{Position, RootedTree};

    fn s(n: i64, w: i64, d: i64) -> TreeSummary {
        TreeSummary::new(n, w, d)
    }

    #[test]
    fn identify_examples() {
        assert_eq!(s(1, 0, 0).identify(&s(1, 0, 0)), s(1, 0, 0));
        assert_eq!(s(2, 1, 1).identify(&s(2, 1, 1)), s(3, 4, 2));
        assert_eq!(s(2, 1, 1).identify(&s(3, 4, 2)), s(4, 9, 3));
    }

    #[test]
    fn identify_example_matches_materialized_tree() {
        // Pendant edge glued onto the middle of a 3-path: a star with 3 leaves,
        // anchored at its center.
        let tree = RootedTree::star(3);
        assert_eq!(TreeSummary::of_tree(&tree, 0).unwrap(), s(4, 9, 3));
    }

    #[test]
    fn join_examples() {
        assert_eq!(s(1, 0, 0).join(&s(1, 0, 0)), s(2, 1, 1));
        assert_eq!(s(2, 1, 1).join(&s(1, 0, 0)), s(3, 4, 2));
        assert_eq!(s(4, 10, 4).join(&s(2, 1, 1)), s(6, 31, 7));
    }

    #[test]
    fn join_example_matches_materialized_tree() {
        // {4,10,4} is T_{B_2} at its root; {2,1,1} is an edge at one end.
        let mut tree = crate::tree::gen_binomial(2).unwrap();
        tree.graft(0, &RootedTree::path(2), Position::Rightmost);
        assert_eq!(TreeSummary::of_tree(&tree, 0).unwrap(), s(6, 31, 7));
    }

    #[test]
    fn replay_examples() {
        assert_eq!(replay_family(TreeFamily::Fibonacci, 2).unwrap(), s(3, 4, 2));
        assert_eq!(replay_family(TreeFamily::Binomial, 2).unwrap(), s(4, 10, 4));
        assert_eq!(
            replay_family(TreeFamily::BinaryFibonacci, 4).unwrap(),
            s(7, 50, 11)
        );
        assert_eq!(
            replay_family(TreeFamily::Fibonacci, -1).unwrap(),
            s(1, 0, 0)
        );
        assert_eq!(
            replay_family(TreeFamily::BinaryFibonacci, 1).unwrap(),
            s(1, 0, 0)
        );
    }

    #[test]
    fn replay_rejects_out_of_range_orders() {
        assert!(replay_family(TreeFamily::BinaryFibonacci, 0).is_err());
        assert!(replay_family(TreeFamily::Fibonacci, -2).is_err());
        assert!(replay_family(TreeFamily::Binomial, -1).is_err());
    }

    #[test]
    fn pendant_vertex_two_ways() {
        for a in [s(1, 0, 0), s(3, 4, 2), s(7, 50, 11), s(4, 10, 4)] {
            assert_eq!(a.identify(&s(2, 1, 1)), a.join(&TreeSummary::vertex()));
        }
    }

    #[test]
    fn plausibility_bounds() {
        assert!(s(1, 0, 0).is_plausible());
        assert!(s(4, 9, 3).is_plausible());
        assert!(!s(1, 1, 0).is_plausible());
        assert!(!s(0, 0, 0).is_plausible());
        assert!(!s(3, 5, 2).is_plausible());
    }
}
