//! Arbitrary-precision helpers shared by every formula in the crate.
//!
//! Fibonacci numbers follow `F_0 = 0, F_1 = F_2 = 1`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Integer;

/// Returns `F_n` using fast doubling.
///
/// Walks the bits of `n` from the top, keeping `(F_m, F_{m+1})` and applying
/// `F_{2m} = F_m (2 F_{m+1} - F_m)` and `F_{2m+1} = F_m^2 + F_{m+1}^2`.
///
/// ```
/// use wiener_trees::exact_arith::fib;
/// assert_eq!(fib(17), 1597.into());
/// ```
pub fn fib(n: u64) -> Integer {
    let mut a = BigUint::zero();
    let mut b = BigUint::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        // 2b >= a always holds for consecutive Fibonacci numbers.
        let c = &a * ((&b << 1u32) - &a);
        let d = &a * &a + &b * &b;
        if (n >> bit) & 1 == 0 {
            a = c;
            b = d;
        } else {
            b = &c + &d;
            a = d;
        }
    }
    BigInt::from(a)
}

/// Returns `2^k`.
pub fn pow2(k: u64) -> Integer {
    BigInt::one() << k
}

/// Divides `a` by `d`, failing loudly if the division is not exact.
pub fn exact_div(a: &Integer, d: &Integer) -> Result<Integer> {
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = a.div_rem(d);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NotDivisible {
            dividend: a.clone(),
            divisor: d.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_fibs(count: usize) -> Vec<Integer> {
        let mut out = vec![BigInt::zero(), BigInt::one()];
        while out.len() < count {
            let next = &out[out.len() - 1] + &out[out.len() - 2];
            out.push(next);
        }
        out.truncate(count);
        out
    }

    #[test]
    fn fib_examples() {
        assert_eq!(fib(0), 0.into());
        assert_eq!(fib(1), 1.into());
        assert_eq!(fib(2), 1.into());
        assert_eq!(fib(17), 1597.into());
    }

    #[test]
    fn fast_doubling_matches_addition_recurrence() {
        for (n, expected) in naive_fibs(1001).into_iter().enumerate() {
            assert_eq!(fib(n as u64), expected, "F_{n}");
        }
    }

    #[test]
    fn cassini_identity() {
        for n in 1..=500u64 {
            let lhs = fib(n - 1) * fib(n + 1) - fib(n) * fib(n);
            let rhs = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(lhs, rhs.into(), "n = {n}");
        }
    }

    #[test]
    fn fibonacci_distance_sum_numerator_divisible_by_five() {
        let five = BigInt::from(5);
        for k in 0..=1000u64 {
            let num = BigInt::from(k) * fib(k + 2) + BigInt::from(k + 2) * fib(k);
            exact_div(&num, &five).unwrap();
        }
    }

    #[test]
    fn pow2_examples() {
        assert_eq!(pow2(0), 1.into());
        assert_eq!(pow2(1), 2.into());
        assert_eq!(pow2(10), 1024.into());
    }

    #[test]
    fn exact_div_examples() {
        let five = BigInt::from(5);
        assert_eq!(exact_div(&10.into(), &five), Ok(2.into()));
        assert_eq!(exact_div(&0.into(), &five), Ok(0.into()));
        assert!(matches!(
            exact_div(&11.into(), &five),
            Err(Error::NotDivisible { .. })
        ));
        assert_eq!(exact_div(&1.into(), &0.into()), Err(Error::DivisionByZero));
        assert_eq!(exact_div(&(-10).into(), &five), Ok((-2).into()));
    }
}
