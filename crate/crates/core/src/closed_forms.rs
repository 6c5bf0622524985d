//! Closed forms and recurrences for Wiener indices and root distance sums of
//! the three families.
//!
//! Everything here works from the order `k` alone, in `O(k)` big-integer
//! operations, and every division is checked to be exact.
//!
//! Notation used below: `W(k)` is the Wiener index of the order-`k` tree and
//! `D(k)` the sum of distances from its root.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::composition::replay_family;
use crate::error::{Error, Result};
use crate::exact_arith::{exact_div, pow2};
use crate::tree::TreeFamily;
use crate::Integer;

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Closed-form distance sums plugged into the Wiener recurrence, or a
    /// fully closed form where one exists (binomial trees).
    ClosedForm,
    /// Every quantity by upward iteration of its recurrence.
    Recurrence,
    /// The summary algebra of [`crate::composition`].
    Replay,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed",
            Method::Recurrence => "recurrence",
            Method::Replay => "replay",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "closed" | "closed_form" | "closed-form" => Ok(Method::ClosedForm),
            "recurrence" => Ok(Method::Recurrence),
            "replay" => Ok(Method::Replay),
            other => Err(format!(
                "unknown method {other:?} (expected closed, recurrence or replay)"
            )),
        }
    }
}

/// A Wiener index together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    pub family: TreeFamily,
    pub order: i64,
    pub value: Integer,
    pub method: Method,
}

/// Wiener index of the order-`k` tree of `family` by the chosen method.
pub fn evaluate(family: TreeFamily, k: i64, method: Method) -> Result<FormulaResult> {
    let value = match (family, method) {
        (_, Method::Replay) => replay_family(family, k)?.w,
        (TreeFamily::Binomial, Method::ClosedForm) => wiener_binomial(binomial_order(k)?),
        (TreeFamily::Binomial, Method::Recurrence) => {
            wiener_binomial_recurrence(binomial_order(k)?)
        }
        (TreeFamily::Fibonacci, Method::ClosedForm) => wiener_fib(k)?,
        (TreeFamily::Fibonacci, Method::Recurrence) => wiener_fib_recurrence(k)?,
        (TreeFamily::BinaryFibonacci, Method::ClosedForm) => wiener_binfib(binfib_order(k)?)?,
        (TreeFamily::BinaryFibonacci, Method::Recurrence) => {
            wiener_binfib_recurrence(binfib_order(k)?)?
        }
    };
    Ok(FormulaResult {
        family,
        order: k,
        value,
        method,
    })
}

fn binomial_order(k: i64) -> Result<u32> {
    u32::try_from(k).map_err(|_| Error::InvalidOrder {
        what: "binomial",
        order: k,
    })
}

fn binfib_order(k: i64) -> Result<u32> {
    u32::try_from(k)
        .ok()
        .filter(|&k| k >= 1)
        .ok_or(Error::InvalidOrder {
            what: "binary-fibonacci",
            order: k,
        })
}

fn require_order(what: &'static str, k: u32, min: u32) -> Result<()> {
    if k < min {
        Err(Error::InvalidOrder {
            what,
            order: k.into(),
        })
    } else {
        Ok(())
    }
}

fn int(v: impl Into<BigInt>) -> Integer {
    v.into()
}

/// Consecutive Fibonacci numbers `F_m, F_{m+1}, F_{m+2}, F_{m+3}`, shifted by
/// one addition per step.
#[derive(Clone)]
struct FibWindow([Integer; 4]);

impl FibWindow {
    /// Window starting at `F_start`, built by additions from `F_0`.
    fn starting_at(start: u32) -> Self {
        let mut w = FibWindow([int(0), int(1), int(1), int(2)]);
        for _ in 0..start {
            w.advance();
        }
        w
    }

    fn get(&self, offset: usize) -> &Integer {
        &self.0[offset]
    }

    fn advance(&mut self) {
        let next = &self.0[2] + &self.0[3];
        self.0.rotate_left(1);
        self.0[3] = next;
    }
}

/// Fibonacci numbers `F_0..=F_max`, by additions.
fn fib_table(max: u32) -> Vec<Integer> {
    let mut table = vec![int(0), int(1)];
    while table.len() <= max as usize {
        let next = &table[table.len() - 1] + &table[table.len() - 2];
        table.push(next);
    }
    table.truncate(max as usize + 1);
    table
}

// ---------------------------------------------------------------------------
// Binomial trees

/// Sum of distances from the root of `T_{B_k}` to the nodes of the copy of
/// `T_{B_{k-1}}` hung below it: `(k + 1) 2^{k-2}`.
pub fn d_binomial_cross(k: u32) -> Result<Integer> {
    require_order("binomial cross distance sum", k, 1)?;
    exact_div(&(int(k + 1) * pow2(k.into())), &int(4))
}

/// Sum of distances from the root of a copy of `T_{B_{k-1}}` within that
/// copy: `(k - 1) 2^{k-2}`.
pub fn d_binomial_within(k: u32) -> Result<Integer> {
    require_order("binomial within distance sum", k, 1)?;
    exact_div(&(int(k - 1) * pow2(k.into())), &int(4))
}

/// `W(T_{B_k}) = (k - 1) 2^{2k-1} + 2^{k-1}`, with `W(T_{B_0}) = 0`.
///
/// ```
/// use wiener_trees::closed_forms::wiener_binomial;
/// assert_eq!(wiener_binomial(3), 68.into());
/// ```
pub fn wiener_binomial(k: u32) -> Integer {
    if k == 0 {
        return Integer::zero();
    }
    let k64 = u64::from(k);
    int(k - 1) * pow2(2 * k64 - 1) + pow2(k64 - 1)
}

/// Iterates `W(k) = 2 W(k-1) + k 2^{2k-2}` from `W(0) = 0`.
pub fn wiener_binomial_recurrence(k: u32) -> Integer {
    let mut w = Integer::zero();
    for i in 1..=u64::from(k) {
        w = 2 * w + int(i) * pow2(2 * i - 2);
    }
    w
}

// ---------------------------------------------------------------------------
// Fibonacci trees

/// Root distance sum of `T_{f_k}`: `(k F_{k+2} + (k + 2) F_k) / 5`.
pub fn d_fib(k: u32) -> Result<Integer> {
    let f = FibWindow::starting_at(k);
    d_fib_from_window(k, &f)
}

/// `D(m)` from a window starting at `F_m`.
fn d_fib_from_window(m: u32, f: &FibWindow) -> Result<Integer> {
    let numerator = int(m) * f.get(2) + int(m + 2) * f.get(0);
    exact_div(&numerator, &int(5))
}

/// Iterates `D(k) = D(k-1) + D(k-2) + F_k` from `D(0) = 0, D(1) = 1`.
pub fn d_fib_recurrence(k: u32) -> Integer {
    let (mut older, mut newer) = (int(0), int(1));
    if k == 0 {
        return older;
    }
    // f = (F_{i-1}, F_i)
    let mut f = (int(1), int(1));
    for _ in 2..=k {
        let next = &newer + &older + &f.1;
        older = std::mem::replace(&mut newer, next);
        f = (f.1.clone(), &f.0 + &f.1);
    }
    newer
}

/// `sum_{j=1}^{k+1} F_j F_{k+1-j}`.
pub fn d_fib_convolution(k: u32) -> Integer {
    let f = fib_table(k + 1);
    (1..=k as usize + 1)
        .map(|j| &f[j] * &f[k as usize + 1 - j])
        .sum()
}

/// Tally of big-integer operations performed by an instrumented evaluation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCount {
    pub additions: u64,
    pub multiplications: u64,
    pub divisions: u64,
}

impl OpCount {
    pub fn total(&self) -> u64 {
        self.additions + self.multiplications + self.divisions
    }

    fn add(&mut self, a: &Integer, b: &Integer) -> Integer {
        self.additions += 1;
        a + b
    }

    fn mul(&mut self, a: &Integer, b: &Integer) -> Integer {
        self.multiplications += 1;
        a * b
    }

    fn div5(&mut self, a: &Integer) -> Result<Integer> {
        self.divisions += 1;
        exact_div(a, &int(5))
    }
}

/// Wiener index of `T_{f_k}`, `k >= -1`.
///
/// Keeps the two previous Wiener indices and a sliding window of Fibonacci
/// numbers, and at each step evaluates the two root distance sums it needs
/// by their closed form:
///
/// `W(i) = W(i-1) + W(i-2) + F_{i+1} D(i-2) + F_i D(i-1) + F_{i+1} F_i`.
///
/// ```
/// use wiener_trees::closed_forms::wiener_fib;
/// assert_eq!(wiener_fib(2).unwrap(), 4.into());
/// assert_eq!(wiener_fib(6).unwrap(), 666.into());
/// ```
pub fn wiener_fib(k: i64) -> Result<Integer> {
    wiener_fib_counted(k).map(|(w, _)| w)
}

/// [`wiener_fib`] together with the number of big-integer operations used.
pub fn wiener_fib_counted(k: i64) -> Result<(Integer, OpCount)> {
    let mut ops = OpCount::default();
    match k {
        ..-1 => {
            return Err(Error::InvalidOrder {
                what: "fibonacci",
                order: k,
            })
        }
        -1 | 0 => return Ok((int(0), ops)),
        1 => return Ok((int(1), ops)),
        2 => return Ok((int(4), ops)),
        _ => {}
    }
    // f = [F_{i-2}, F_{i-1}, F_i, F_{i+1}] at i = 3
    let mut f = [int(1), int(1), int(2), int(3)];
    let (mut w_older, mut w_newer) = (int(1), int(4));
    for i in 3..=k {
        let [f_m2, f_m1, f_i, f_p1] = &f;
        // D(i-1) and D(i-2) by the closed form
        let d1 = {
            let a = ops.mul(&int(i - 1), f_p1);
            let b = ops.mul(&int(i + 1), f_m1);
            let s = ops.add(&a, &b);
            ops.div5(&s)?
        };
        let d2 = {
            let a = ops.mul(&int(i - 2), f_i);
            let b = ops.mul(&int(i), f_m2);
            let s = ops.add(&a, &b);
            ops.div5(&s)?
        };
        let cross_older = ops.mul(f_p1, &d2);
        let cross_newer = ops.mul(f_i, &d1);
        let pairs = ops.mul(f_p1, f_i);
        let mut w = ops.add(&w_newer, &w_older);
        w = ops.add(&w, &cross_older);
        w = ops.add(&w, &cross_newer);
        w = ops.add(&w, &pairs);
        w_older = std::mem::replace(&mut w_newer, w);

        let next = ops.add(f_i, f_p1);
        f.rotate_left(1);
        f[3] = next;
    }
    Ok((w_newer, ops))
}

/// Wiener index of `T_{f_k}` with the root distance sums also obtained by
/// iteration rather than closed form.
pub fn wiener_fib_recurrence(k: i64) -> Result<Integer> {
    match k {
        ..-1 => {
            return Err(Error::InvalidOrder {
                what: "fibonacci",
                order: k,
            })
        }
        -1 | 0 => return Ok(int(0)),
        _ => {}
    }
    // At step i: w = (W(i-2), W(i-1)), d = (D(i-2), D(i-1)), f = (F_i, F_{i+1}).
    let mut w = (int(0), int(0));
    let mut d = (int(0), int(0));
    let mut f = (int(1), int(1));
    for _ in 1..=k {
        let next_w = &w.1 + &w.0 + &f.1 * &d.0 + &f.0 * &d.1 + &f.1 * &f.0;
        // D(i) = D(i-1) + D(i-2) + F_i
        let next_d = &d.1 + &d.0 + &f.0;
        w = (std::mem::take(&mut w.1), next_w);
        d = (std::mem::take(&mut d.1), next_d);
        f = (f.1.clone(), &f.0 + &f.1);
    }
    Ok(w.1)
}

// ---------------------------------------------------------------------------
// Binary Fibonacci trees

/// Root distance sum of `T^b_{f_k}`:
/// `((k - 3) F_{k+3} + 2 (k - 2) F_{k+2}) / 5 + 2`.
pub fn d_binfib(k: u32) -> Result<Integer> {
    require_order("binary-fibonacci distance sum", k, 1)?;
    d_binfib_from_window(k, &FibWindow::starting_at(k))
}

/// `D(m)` from a window starting at `F_m`. Also valid at `m = 0`, where
/// it gives 0 for the empty tree.
fn d_binfib_from_window(m: u32, f: &FibWindow) -> Result<Integer> {
    let m = i64::from(m);
    let numerator = int(m - 3) * f.get(3) + int(2 * (m - 2)) * f.get(2);
    Ok(exact_div(&numerator, &int(5))? + 2)
}

/// Iterates `D(k) = D(k-1) + D(k-2) + F_{k+2} - 2` from `D(1) = 0, D(2) = 1`.
pub fn d_binfib_recurrence(k: u32) -> Result<Integer> {
    require_order("binary-fibonacci distance sum", k, 1)?;
    let (mut older, mut newer) = (int(0), int(1));
    if k == 1 {
        return Ok(older);
    }
    // f = F_{i+2} at i = 3
    let (mut f_prev, mut f) = (int(3), int(5));
    for _ in 3..=k {
        let next = &newer + &older + &f - 2;
        older = std::mem::replace(&mut newer, next);
        let f_next = &f + &f_prev;
        f_prev = std::mem::replace(&mut f, f_next);
    }
    Ok(newer)
}

/// `sum_{j=2}^{k+1} (F_{j+2} - 2) F_{k+1-j}`.
pub fn d_binfib_convolution(k: u32) -> Result<Integer> {
    require_order("binary-fibonacci distance sum", k, 1)?;
    let f = fib_table(k + 3);
    let k = k as usize;
    Ok((2..=k + 1).map(|j| (&f[j + 2] - 2) * &f[k + 1 - j]).sum())
}

/// One step of the binary Fibonacci Wiener recurrence.
///
/// The left part `T_1` is `T^b_{f_{k-1}}` together with the new root `r` and
/// the edge `(r, r')` to the old root, so `|T_1| = F_{k+1}`,
/// `W(T_1) = W(k-1) + D(k-1) + F_{k+1} - 1` and
/// `D_{T_1}(r) = D(k-1) + F_{k+1} - 1`. The right part is `T^b_{f_{k-2}}`
/// with `F_k - 1` nodes, joined to `r` by one edge.
fn binfib_step(
    w_older: &Integer,
    w_newer: &Integer,
    d_older: &Integer,
    d_newer: &Integer,
    f_k: &Integer,
    f_k1: &Integer,
) -> Integer {
    let left_n = f_k1;
    let left_d = d_newer + f_k1 - 1;
    let left_w = w_newer + &left_d;
    let right_n = f_k - 1;
    left_w + w_older + left_n * d_older + &right_n * &left_d + left_n * &right_n
}

/// Wiener index of `T^b_{f_k}`, `k >= 1`, with root distance sums by their
/// closed form.
///
/// ```
/// use wiener_trees::closed_forms::wiener_binfib;
/// assert_eq!(wiener_binfib(3).unwrap(), 10.into());
/// assert_eq!(wiener_binfib(4).unwrap(), 50.into());
/// ```
pub fn wiener_binfib(k: u32) -> Result<Integer> {
    require_order("binary-fibonacci", k, 1)?;
    // Step i needs W(i-1), W(i-2), D(i-1), D(i-2), F_i, F_{i+1}.
    // The window starts at F_{i-2} so both distance sums can read from it.
    let (mut w_older, mut w_newer) = (int(0), int(0));
    let mut f = FibWindow::starting_at(0);
    for i in 2..=k {
        let d_older = d_binfib_from_window(i - 2, &f)?;
        f.advance();
        let d_newer = d_binfib_from_window(i - 1, &f)?;
        let w = binfib_step(&w_older, &w_newer, &d_older, &d_newer, f.get(1), f.get(2));
        w_older = std::mem::replace(&mut w_newer, w);
    }
    Ok(w_newer)
}

/// Same recurrence as [`wiener_binfib`], with the distance sums iterated.
pub fn wiener_binfib_recurrence(k: u32) -> Result<Integer> {
    require_order("binary-fibonacci", k, 1)?;
    // W(0) = D(0) = 0 stand in for the empty tree; the step degenerates to
    // attaching the root above T^b_{f_1}.
    let (mut w_older, mut w_newer) = (int(0), int(0));
    let (mut d_older, mut d_newer) = (int(0), int(0));
    // (F_i, F_{i+1}) at i = 2
    let (mut f_i, mut f_i1) = (int(1), int(2));
    for _ in 2..=k {
        let w = binfib_step(&w_older, &w_newer, &d_older, &d_newer, &f_i, &f_i1);
        // D(i) = D(i-1) + D(i-2) + F_{i+2} - 2
        let d = &d_newer + &d_older + &f_i + &f_i1 - 2;
        w_older = std::mem::replace(&mut w_newer, w);
        d_older = std::mem::replace(&mut d_newer, d);
        let f_next = &f_i + &f_i1;
        f_i = std::mem::replace(&mut f_i1, f_next);
    }
    Ok(w_newer)
}

/// The join recurrence applied without counting the new root as part of the
/// left subtree:
///
/// `W(k) = W(k-1) + W(k-2) + F_{k+1} D(k-2) + (F_k - 1) D(k-1) + F_{k+1} (F_k - 1)`
///
/// from `W(1) = 0, W(2) = 1`. It drops the root-to-left-subtree edge terms and
/// so undercounts from `k = 3` on (5 instead of 10). Kept only to document
/// that discrepancy; use [`wiener_binfib`].
pub fn wiener_binfib_literal(k: u32) -> Result<Integer> {
    require_order("binary-fibonacci", k, 1)?;
    if k == 1 {
        return Ok(int(0));
    }
    let (mut w_older, mut w_newer) = (int(0), int(1));
    // window starts at F_{i-2}
    let mut f = FibWindow::starting_at(1);
    for i in 3..=k {
        let d_older = d_binfib_from_window(i - 2, &f)?;
        f.advance();
        let d_newer = d_binfib_from_window(i - 1, &f)?;
        let (f_i, f_i1) = (f.get(1), f.get(2));
        let w = &w_newer + &w_older + f_i1 * d_older + (f_i - 1) * d_newer + f_i1 * (f_i - 1);
        w_older = std::mem::replace(&mut w_newer, w);
    }
    Ok(w_newer)
}
