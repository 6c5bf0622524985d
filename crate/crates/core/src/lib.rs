//! Exact Wiener indices of binomial trees, Fibonacci trees and binary
//! Fibonacci trees.
//!
//! The crate has two independent sides that are checked against each other:
//!
//! * [`closed_forms`] and [`composition`] compute Wiener indices and root
//!   distance sums from the order `k` alone, in `O(k)` big-integer
//!   operations.
//! * [`tree`] materializes the trees and [`oracle`] measures them directly by
//!   breadth-first search and by edge contributions.
//!
//! All quantities are [`Integer`]s (arbitrary precision); no value is ever
//! rounded.
//!
//! ```
//! use wiener_trees::{closed_forms, oracle, tree};
//!
//! let t = tree::gen_fibonacci(10)?;
//! assert_eq!(oracle::wiener_bfs(&t)?, closed_forms::wiener_fib(10)?);
//! # Ok::<(), wiener_trees::Error>(())
//! ```

pub mod closed_forms;
pub mod composition;
mod error;
pub mod exact_arith;
pub mod oracle;
pub mod tree;

pub use closed_forms::{FormulaResult, Method};
pub use composition::TreeSummary;
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use tree::{RootedTree, TreeFamily};

/// Arbitrary-precision signed integer used for every count, distance sum and
/// Wiener index.
pub type Integer = num_bigint::BigInt;

// Compile the guide's code listings as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/trees.md")]
    struct Trees;
    #[doc = include_str!("../../../book/src/oracles.md")]
    struct Oracles;
    #[doc = include_str!("../../../book/src/composition.md")]
    struct Composition;
    #[doc = include_str!("../../../book/src/binomial.md")]
    struct Binomial;
    #[doc = include_str!("../../../book/src/fibonacci.md")]
    struct Fibonacci;
    #[doc = include_str!("../../../book/src/binary-fibonacci.md")]
    struct BinaryFibonacci;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
    #[doc = include_str!("../../../README.md")]
    struct Readme;
}
