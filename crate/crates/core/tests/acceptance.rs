//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each, and
//! exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use wiener_trees::closed_forms::{
    d_binfib, d_binfib_convolution, d_binfib_recurrence, d_fib, d_fib_convolution,
    d_fib_recurrence, wiener_binfib, wiener_binfib_literal, wiener_binomial,
    wiener_binomial_recurrence, wiener_fib, wiener_fib_counted,
};
use wiener_trees::composition::replay_family;
use wiener_trees::oracle::{distance_sum, wiener_bfs, wiener_linear};
use wiener_trees::tree::{gen_binary_fibonacci, gen_binomial, gen_fibonacci};
use wiener_trees::{Integer, TreeFamily, TreeSummary};

type Outcome = Result<String, String>;

/// (name, check, time limit in seconds)
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || {
        format!("{what}: got {got:?}, expected {want:?}")
    })
}

fn err(e: wiener_trees::Error) -> String {
    e.to_string()
}

fn binomial_closed_form() -> Outcome {
    for k in 0..=12u32 {
        let oracle = wiener_bfs(&gen_binomial(k).map_err(err)?).map_err(err)?;
        eq(
            &format!("k = {k} closed vs bfs"),
            wiener_binomial(k),
            oracle,
        )?;
    }
    for k in 0..=200u32 {
        let closed = wiener_binomial(k);
        eq(
            &format!("k = {k} recurrence"),
            wiener_binomial_recurrence(k),
            closed.clone(),
        )?;
        let replay = replay_family(TreeFamily::Binomial, k.into()).map_err(err)?;
        eq(&format!("k = {k} replay"), replay.w, closed)?;
    }
    Ok("bfs k = 0..12; recurrence and replay k = 0..200".into())
}

fn fibonacci_wiener() -> Outcome {
    eq("W(T_f1)", wiener_fib(1).map_err(err)?, 1.into())?;
    eq("W(T_f2)", wiener_fib(2).map_err(err)?, 4.into())?;
    for k in 1..=18 {
        let oracle = wiener_bfs(&gen_fibonacci(k).map_err(err)?).map_err(err)?;
        eq(&format!("k = {k}"), wiener_fib(k).map_err(err)?, oracle)?;
    }
    Ok("k = 1..18 against bfs (6765 nodes at k = 18); W1 = 1, W2 = 4".into())
}

fn fibonacci_distance_sum() -> Outcome {
    for k in 0..=18u32 {
        let oracle = distance_sum(&gen_fibonacci(k.into()).map_err(err)?, 0).map_err(err)?;
        eq(
            &format!("k = {k} vs oracle"),
            d_fib(k).map_err(err)?,
            oracle,
        )?;
    }
    for k in 0..=300u32 {
        // d_fib fails with NotDivisible if 5 does not divide the numerator.
        let closed = d_fib(k).map_err(err)?;
        eq(
            &format!("k = {k} recurrence"),
            d_fib_recurrence(k),
            closed.clone(),
        )?;
        eq(
            &format!("k = {k} convolution"),
            d_fib_convolution(k),
            closed,
        )?;
    }
    Ok("oracle k = 0..18; recurrence, convolution, exact /5 for k = 0..300".into())
}

fn binary_fibonacci_distance_sum() -> Outcome {
    eq("D(1)", d_binfib(1).map_err(err)?, 0.into())?;
    eq("D(2)", d_binfib(2).map_err(err)?, 1.into())?;
    for k in 1..=18u32 {
        let oracle = distance_sum(&gen_binary_fibonacci(k).map_err(err)?, 0).map_err(err)?;
        eq(
            &format!("k = {k} vs oracle"),
            d_binfib(k).map_err(err)?,
            oracle,
        )?;
    }
    for k in 1..=300u32 {
        let closed = d_binfib(k).map_err(err)?;
        eq(
            &format!("k = {k} recurrence"),
            d_binfib_recurrence(k).map_err(err)?,
            closed.clone(),
        )?;
        eq(
            &format!("k = {k} convolution"),
            d_binfib_convolution(k).map_err(err)?,
            closed,
        )?;
    }
    Ok("oracle k = 1..18; recurrence and convolution k = 1..300; D1 = 0, D2 = 1".into())
}

fn binary_fibonacci_wiener() -> Outcome {
    for k in 1..=18u32 {
        let oracle = wiener_bfs(&gen_binary_fibonacci(k).map_err(err)?).map_err(err)?;
        eq(&format!("k = {k}"), wiener_binfib(k).map_err(err)?, oracle)?;
    }
    let t3 = gen_binary_fibonacci(3).map_err(err)?;
    let enumerated = common::wiener_by_pairs(&t3);
    eq("pair enumeration of T^b_3", enumerated, 10)?;
    let literal = wiener_binfib_literal(3).map_err(err)?;
    eq("uncorrected recurrence at k = 3", literal.clone(), 5.into())?;
    ensure(literal != Integer::from(enumerated), || {
        "literal form should mismatch".into()
    })?;
    Ok("corrected form matches bfs k = 1..18; uncorrected form gives 5 vs 10 at k = 3".into())
}

fn oracle_cross_validation() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let mut largest = 0;
    for i in 0..500 {
        let n = rand::Rng::gen_range(&mut rng, 1..=1000);
        largest = largest.max(n);
        let tree = common::random_tree(&mut rng, n);
        eq(
            &format!("tree #{i} (n = {n})"),
            wiener_linear(&tree).map_err(err)?,
            wiener_bfs(&tree).map_err(err)?,
        )?;
    }
    Ok(format!("500 random trees, largest n = {largest}"))
}

fn composition_soundness() -> Outcome {
    let mut checked = 0;
    for family in TreeFamily::ALL {
        let mut k = family.min_nonempty_order();
        while family.node_count(k).map_err(err)? <= Integer::from(5000) {
            let tree = family.generate(k, 5000).map_err(err)?;
            let oracle = TreeSummary::of_tree(&tree, 0).map_err(err)?;
            eq(
                &format!("{family} k = {k}"),
                oracle.n.clone(),
                family.node_count(k).map_err(err)?,
            )?;
            eq(
                &format!("{family} k = {k}"),
                replay_family(family, k).map_err(err)?,
                oracle,
            )?;
            checked += 1;
            k += 1;
        }
    }
    Ok(format!(
        "{checked} (family, order) pairs with at most 5000 nodes"
    ))
}

fn cost_property() -> Outcome {
    let orders = [100i64, 200, 400, 800];
    let counts: Vec<u64> = orders
        .iter()
        .map(|&k| wiener_fib_counted(k).map(|(_, ops)| ops.total()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    for i in 1..orders.len() {
        let count_ratio = counts[i] as f64 / counts[i - 1] as f64;
        let order_ratio = orders[i] as f64 / orders[i - 1] as f64;
        ensure((count_ratio / order_ratio - 1.0).abs() <= 0.10, || {
            format!("count ratio {count_ratio:.4} vs order ratio {order_ratio}")
        })?;
    }
    let start = Instant::now();
    wiener_fib(500).map_err(err)?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("wiener_fib(500) took {elapsed:?}")
    })?;
    Ok(format!(
        "op counts {counts:?}; wiener_fib(500) in {elapsed:?}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 binomial closed form", binomial_closed_form, Some(60)),
        ("2 fibonacci wiener recurrence", fibonacci_wiener, Some(120)),
        (
            "3 fibonacci root distance sum",
            fibonacci_distance_sum,
            Some(30),
        ),
        (
            "4 binary fibonacci root distance sum",
            binary_fibonacci_distance_sum,
            Some(30),
        ),
        (
            "5 binary fibonacci wiener (corrected)",
            binary_fibonacci_wiener,
            None,
        ),
        (
            "6 linear oracle vs bfs oracle",
            oracle_cross_validation,
            Some(60),
        ),
        (
            "7 composition algebra soundness",
            composition_soundness,
            None,
        ),
        ("8 linear operation count", cost_property, None),
    ];
    let mut failures = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(secs)) = (&outcome, limit) {
            if elapsed > Duration::from_secs(secs) {
                outcome = Err(format!("took {elapsed:?}, limit {secs} s"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failures += 1;
                println!("FAIL  criterion {name}: {why} [{elapsed:.2?}]");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
