//! Arbitrary-precision rational scalars and their canonical text form.
//!
//! Rationals serialize as decimal-free strings `"num"` or `"num/den"` with the
//! denominator always positive; [`num::BigRational`] keeps values in lowest
//! terms after every operation.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};

/// The exact scalar domain used everywhere in the workspace.
pub type Q = BigRational;

/// The rational `n`.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The rational `n/d`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `"num"` or `"num/den"`.
pub fn q_to_string(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the `"num"` / `"num/den"` form produced by [`q_to_string`].
pub fn q_from_str(s: &str) -> Result<Q, String> {
    let parse_int = |t: &str| -> Result<BigInt, String> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| format!("invalid integer {t:?}: {e}"))
    };
    match s.split_once('/') {
        None => Ok(Q::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Q::new(parse_int(n)?, den))
        }
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Generalized binomial coefficient `C(top, k)` for rational `top`, via the
/// falling-factorial formula `top·(top−1)···(top−k+1)/k!`.
pub fn binom(top: &Q, k: u64) -> Q {
    let mut acc = Q::one();
    for j in 0..k {
        acc *= (top - qi(j as i64)) / qi(j as i64 + 1);
    }
    acc
}

/// True iff the rational is a nonnegative integer.
pub fn is_nonneg_integer(x: &Q) -> bool {
    x.denom().is_one() && !x.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for (n, d, s) in [(3, 1, "3"), (-8, 3, "-8/3"), (0, 5, "0"), (5, -10, "-1/2")] {
            let x = q(n, d);
            assert_eq!(q_to_string(&x), s);
            assert_eq!(q_from_str(s).unwrap(), x);
        }
        assert!(q_from_str("1/0").is_err());
        assert!(q_from_str("abc").is_err());
    }

    #[test]
    fn binom_matches_integers() {
        assert_eq!(binom(&qi(6), 2), qi(15));
        assert_eq!(binom(&qi(3), 5), qi(0));
        assert_eq!(binom(&q(5, 2), 2), q(15, 8));
        assert_eq!(binom(&qi(-1), 3), qi(-1));
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
