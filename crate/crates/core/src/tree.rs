//! Explicit ordered rooted trees, the three recursive families, and the
//! edge-list text format.
//!
//! Generated trees use dense ids `0..n` in construction order with the root
//! at `0`. Every generator works by grafting copies of smaller trees, so
//! nothing recurses on the order.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive};

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::exact_arith::{fib, pow2};
use crate::Integer;

/// Default cap on the number of nodes a generator will materialize.
pub const DEFAULT_NODE_BUDGET: usize = 1 << 22;

/// The three recursively defined tree families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeFamily {
    /// `T_{B_k}`: two copies of `T_{B_{k-1}}`, one hung as the leftmost child
    /// of the other's root. `2^k` nodes.
    Binomial,
    /// `T_{f_k}`: `T_{f_{k-2}}` hung as the rightmost child of the root of
    /// `T_{f_{k-1}}`. `F_{k+2}` nodes, defined for `k >= -1`.
    Fibonacci,
    /// `T^b_{f_k}`: a fresh root with `T^b_{f_{k-1}}` on the left and
    /// `T^b_{f_{k-2}}` on the right. `F_{k+2} - 1` nodes; order 0 is empty.
    BinaryFibonacci,
}

impl TreeFamily {
    pub const ALL: [TreeFamily; 3] = [
        TreeFamily::Binomial,
        TreeFamily::Fibonacci,
        TreeFamily::BinaryFibonacci,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TreeFamily::Binomial => "binomial",
            TreeFamily::Fibonacci => "fibonacci",
            TreeFamily::BinaryFibonacci => "binary-fibonacci",
        }
    }

    /// Smallest order for which the family defines a tree.
    pub fn min_order(self) -> i64 {
        match self {
            TreeFamily::Binomial | TreeFamily::BinaryFibonacci => 0,
            TreeFamily::Fibonacci => -1,
        }
    }

    /// Smallest order whose tree has at least one node.
    pub fn min_nonempty_order(self) -> i64 {
        match self {
            TreeFamily::BinaryFibonacci => 1,
            other => other.min_order(),
        }
    }

    pub(crate) fn check_order(self, k: i64, min: i64) -> Result<u64> {
        if k < min {
            return Err(Error::InvalidOrder {
                what: self.name(),
                order: k,
            });
        }
        Ok((k - self.min_order()) as u64)
    }

    /// Number of nodes in the order-`k` tree, without building it.
    ///
    /// ```
    /// use wiener_trees::TreeFamily;
    /// assert_eq!(TreeFamily::Binomial.node_count(5).unwrap(), 32.into());
    /// assert_eq!(TreeFamily::Fibonacci.node_count(4).unwrap(), 8.into());
    /// assert_eq!(TreeFamily::BinaryFibonacci.node_count(4).unwrap(), 7.into());
    /// ```
    pub fn node_count(self, k: i64) -> Result<Integer> {
        self.check_order(k, self.min_order())?;
        Ok(match self {
            TreeFamily::Binomial => pow2(k as u64),
            TreeFamily::Fibonacci => fib((k + 2) as u64),
            TreeFamily::BinaryFibonacci => fib((k + 2) as u64) - Integer::one(),
        })
    }

    /// Builds the order-`k` tree, refusing if it would exceed `budget` nodes.
    pub fn generate(self, k: i64, budget: usize) -> Result<RootedTree> {
        let required = self.node_count(k)?;
        if required.to_usize().is_none_or(|n| n > budget) {
            return Err(Error::ResourceLimit {
                order: k,
                required,
                budget,
            });
        }
        Ok(match self {
            TreeFamily::Binomial => build_binomial(k as u32),
            TreeFamily::Fibonacci => build_fibonacci(k),
            TreeFamily::BinaryFibonacci => build_binary_fibonacci(k as u32),
        })
    }
}

impl fmt::Display for TreeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TreeFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "binomial" => Ok(TreeFamily::Binomial),
            "fibonacci" => Ok(TreeFamily::Fibonacci),
            "binary-fibonacci" => Ok(TreeFamily::BinaryFibonacci),
            other => Err(format!(
                "unknown family {other:?} (expected binomial, fibonacci or binary-fibonacci)"
            )),
        }
    }
}

/// Where a grafted subtree goes among the existing children.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Leftmost,
    Rightmost,
}

/// An ordered rooted tree stored as parent links plus ordered child lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootedTree {
    root: Option<usize>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl RootedTree {
    /// The tree with no nodes.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single() -> Self {
        RootedTree {
            root: Some(0),
            parent: vec![None],
            children: vec![Vec::new()],
        }
    }

    /// A path `0 - 1 - ... - (n-1)` rooted at `0`.
    pub fn path(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        for v in 1..n {
            edges.push((v - 1, v));
        }
        Self::from_edges(n, edges).expect("a path is a tree")
    }

    /// A star: root `0` with `leaves` children.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("a star is a tree")
    }

    /// Builds a tree from `(parent, child)` pairs; each parent's children are
    /// ordered as the pairs appear.
    ///
    /// Errors carry the 1-based index of the offending pair, offset by one so
    /// that it matches the line number in the edge-list format.
    pub fn from_edges<I>(node_count: usize, edges: I) -> std::result::Result<Self, ParseError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = EdgeBuilder::new(node_count);
        let mut line = 1;
        for (p, c) in edges {
            line += 1;
            builder.add(line, p, c)?;
        }
        builder.finish(line + 1)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Undirected degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len() + usize::from(self.parent[v].is_some())
    }

    /// `(parent, child)` pairs, grouped by parent in id order and by child
    /// order within each parent.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.children
            .iter()
            .enumerate()
            .flat_map(|(p, cs)| cs.iter().map(move |&c| (p, c)))
    }

    /// Undirected adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<Vec<usize>> = self.children.clone();
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                adj[v].push(p);
            }
        }
        adj
    }

    /// Nodes in pre-order (parent before children, children left to right).
    pub fn preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.len());
        let mut stack: Vec<usize> = self.root.into_iter().collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children[v].iter().rev());
        }
        order
    }

    /// Number of nodes in the subtree below each node (inclusive).
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![1; self.len()];
        for &v in self.preorder().iter().rev() {
            if let Some(p) = self.parent[v] {
                sizes[p] += sizes[v];
            }
        }
        sizes
    }

    /// Child counts in pre-order. Two ordered trees are equal up to
    /// relabeling exactly when their shapes are equal.
    pub fn shape(&self) -> Vec<usize> {
        self.preorder()
            .into_iter()
            .map(|v| self.children[v].len())
            .collect()
    }

    /// Copies `other` under node `at`, as its leftmost or rightmost child.
    /// The copied nodes get ids `self.len()..` in `other`'s id order.
    pub fn graft(&mut self, at: usize, other: &RootedTree, position: Position) {
        let Some(other_root) = other.root else {
            return;
        };
        let offset = self.len();
        self.parent.extend(
            other
                .parent
                .iter()
                .map(|p| Some(p.map_or(at, |p| p + offset))),
        );
        self.children.extend(
            other
                .children
                .iter()
                .map(|cs| cs.iter().map(|c| c + offset).collect()),
        );
        match position {
            Position::Leftmost => self.children[at].insert(0, other_root + offset),
            Position::Rightmost => self.children[at].push(other_root + offset),
        }
    }

    /// Renders the edge-list format: the node count on the first line, then
    /// one `parent child` line per edge.
    pub fn serialize(&self) -> String {
        let mut out = format!("{}\n", self.len());
        for (p, c) in self.edges() {
            out.push_str(&format!("{p} {c}\n"));
        }
        out
    }

    /// Parses the edge-list format produced by [`RootedTree::serialize`].
    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        let mut lines: Vec<&str> = text.split('\n').collect();
        if lines.last() == Some(&"") {
            lines.pop();
        }
        let header = lines
            .first()
            .map(|l| l.trim())
            .filter(|l| !l.is_empty())
            .ok_or(ParseError {
                line: 1,
                kind: ParseErrorKind::MissingHeader,
            })?;
        let node_count = parse_number(header, 1)?;
        let mut builder = EdgeBuilder::new(node_count);
        for (i, raw) in lines.iter().enumerate().skip(1) {
            let line = i + 1;
            let mut fields = raw.split_ascii_whitespace();
            let (Some(p), Some(c), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::BadEdgeLine(raw.to_string()),
                });
            };
            builder.add(line, parse_number(p, line)?, parse_number(c, line)?)?;
        }
        builder.finish(lines.len() + 1)
    }
}

impl FromStr for RootedTree {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        RootedTree::parse(s)
    }
}

fn parse_number(s: &str, line: usize) -> std::result::Result<usize, ParseError> {
    s.parse().map_err(|_| ParseError {
        line,
        kind: ParseErrorKind::BadNumber(s.to_string()),
    })
}

/// Incremental validation of an edge sequence.
struct EdgeBuilder {
    node_count: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    components: DisjointSets,
    edges: usize,
}

impl EdgeBuilder {
    fn new(node_count: usize) -> Self {
        EdgeBuilder {
            node_count,
            parent: vec![None; node_count],
            children: vec![Vec::new(); node_count],
            components: DisjointSets::new(node_count),
            edges: 0,
        }
    }

    fn add(&mut self, line: usize, p: usize, c: usize) -> std::result::Result<(), ParseError> {
        let err = |kind| Err(ParseError { line, kind });
        for node in [p, c] {
            if node >= self.node_count {
                return err(ParseErrorKind::NodeOutOfRange {
                    node,
                    node_count: self.node_count,
                });
            }
        }
        if p == c {
            return err(ParseErrorKind::SelfLoop(p));
        }
        if self.parent[c] == Some(p) || self.parent[p] == Some(c) {
            return err(ParseErrorKind::DuplicateEdge {
                parent: p,
                child: c,
            });
        }
        if self.parent[c].is_some() {
            return err(ParseErrorKind::MultipleParents { child: c });
        }
        if !self.components.union(p, c) {
            return err(ParseErrorKind::Cycle {
                parent: p,
                child: c,
            });
        }
        self.parent[c] = Some(p);
        self.children[p].push(c);
        self.edges += 1;
        Ok(())
    }

    fn finish(self, eof_line: usize) -> std::result::Result<RootedTree, ParseError> {
        // With an acyclic edge set, fewer than n - 1 edges means a forest.
        if self.node_count > 0 && self.edges + 1 < self.node_count {
            let mut roots = (0..self.node_count).filter(|&v| self.parent[v].is_none());
            let first = roots.next().expect("a forest has a root");
            let second = roots
                .next()
                .expect("a forest with < n-1 edges has two roots");
            return Err(ParseError {
                line: eof_line,
                kind: ParseErrorKind::MultipleRoots { first, second },
            });
        }
        let root = (0..self.node_count).find(|&v| self.parent[v].is_none());
        Ok(RootedTree {
            root,
            parent: self.parent,
            children: self.children,
        })
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Merges the sets of `a` and `b`; false if they were already one set.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

fn build_binomial(k: u32) -> RootedTree {
    let mut tree = RootedTree::single();
    for _ in 0..k {
        let copy = tree.clone();
        tree.graft(0, &copy, Position::Leftmost);
    }
    tree
}

fn build_fibonacci(k: i64) -> RootedTree {
    // (T_{f_{i-1}}, T_{f_i}) starting from i = 0.
    let mut older = RootedTree::single();
    let mut newer = RootedTree::single();
    for _ in 1..=k {
        let mut next = newer.clone();
        next.graft(0, &older, Position::Rightmost);
        older = std::mem::replace(&mut newer, next);
    }
    newer
}

fn build_binary_fibonacci(k: u32) -> RootedTree {
    if k == 0 {
        return RootedTree::empty();
    }
    let mut older = RootedTree::empty();
    let mut newer = RootedTree::single();
    for _ in 2..=k {
        let mut next = RootedTree::single();
        next.graft(0, &newer, Position::Rightmost);
        next.graft(0, &older, Position::Rightmost);
        older = std::mem::replace(&mut newer, next);
    }
    newer
}

/// `T_{B_k}` with the default node budget.
pub fn gen_binomial(k: u32) -> Result<RootedTree> {
    TreeFamily::Binomial.generate(k.into(), DEFAULT_NODE_BUDGET)
}

/// `T_{f_k}` with the default node budget; `k >= -1`.
pub fn gen_fibonacci(k: i64) -> Result<RootedTree> {
    TreeFamily::Fibonacci.generate(k, DEFAULT_NODE_BUDGET)
}

/// `T^b_{f_k}` with the default node budget.
pub fn gen_binary_fibonacci(k: u32) -> Result<RootedTree> {
    TreeFamily::BinaryFibonacci.generate(k.into(), DEFAULT_NODE_BUDGET)
}
