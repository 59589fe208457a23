//! Dense univariate polynomials over the exact rationals.
//!
//! Polynomials carry their indeterminate (`t` or `x`) so that mixed-variable
//! arithmetic is rejected instead of silently reinterpreted. Coefficients are
//! stored by ascending degree with no trailing zeros; the zero polynomial has
//! an empty coefficient vector and degree `None` (the distinguished sentinel,
//! chosen so degree-bound assertions treat 0 as passing).

use crate::rational::{q_from_str, q_to_string, qi, Q};
use num::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// The indeterminate of a [`UniPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    /// The residue-side variable `t` (lowest-weight parameter).
    T,
    /// The Zhu-algebra variable `x = t(t − 2(p−1))/(4p)`.
    X,
}

impl Var {
    /// Canonical lowercase name used in serialization.
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::X => "x",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Errors raised by polynomial operations. Operations that verify claims
/// convert these into structured verdicts rather than panicking.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum PolyError {
    /// Mixed `t`/`x` arithmetic.
    #[error("indeterminate mismatch: {0} vs {1}")]
    VarMismatch(Var, Var),
    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,
    /// `exact_divide` found a nonzero remainder; it is carried for reports.
    #[error("nonzero remainder: {remainder}")]
    NonzeroRemainder {
        /// The offending remainder polynomial.
        remainder: UniPoly,
    },
    /// Interpolation points with a repeated abscissa.
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(String),
    /// Input to `to_x_poly` not invariant under `t ↦ 2(p−1) − t`.
    #[error("polynomial is not symmetric under the deck involution (stuck at degree {degree})")]
    NotSymmetric {
        /// Degree at which the leading-term reduction got stuck.
        degree: usize,
    },
}

/// A dense univariate polynomial over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Q>,
}

impl UniPoly {
    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros.
    pub fn new(var: Var, mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    /// The zero polynomial.
    pub fn zero(var: Var) -> Self {
        UniPoly { var, coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(var: Var, c: Q) -> Self {
        Self::new(var, vec![c])
    }

    /// The monomial `c·v^deg`.
    pub fn monomial(var: Var, c: Q, deg: usize) -> Self {
        let mut coeffs = vec![Q::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(var, coeffs)
    }

    /// The monic product `∏ (v − r)` over the given roots, times `lead`.
    pub fn from_roots(var: Var, roots: &[Q], lead: Q) -> Self {
        let mut acc = Self::constant(var, lead);
        for r in roots {
            let lin = Self::new(var, vec![-r.clone(), Q::one()]);
            acc = acc.mul(&lin).expect("same var");
        }
        acc
    }

    /// The indeterminate.
    pub fn var(&self) -> Var {
        self.var
    }

    /// Ascending-degree coefficients (no trailing zeros).
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True iff this is the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    /// Coefficient of degree `i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn check_var(&self, other: &Self) -> Result<(), PolyError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(PolyError::VarMismatch(self.var, other.var))
        }
    }

    /// Exact sum.
    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Q::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Ok(Self::new(self.var, coeffs))
    }

    /// Exact difference.
    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero(self.var);
        }
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self::new(self.var, coeffs))
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg remainder < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        self.check_var(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        let dlead = divisor.leading().unwrap();
        let qlen = rem.len().saturating_sub(dlen - 1);
        let mut quot = vec![Q::zero(); qlen];
        while rem.len() >= dlen {
            let c = rem.last().unwrap() / dlead;
            let shift = rem.len() - dlen;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let v = &c * d;
                rem[shift + i] -= v;
            }
            quot[shift] = c;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(self.var, quot), Self::new(self.var, rem)))
    }

    /// Exact quotient; a nonzero remainder is an error carrying the remainder
    /// (it signals a falsified divisibility claim upstream).
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NonzeroRemainder { remainder: r })
        }
    }

    /// Monic normalization (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic greatest common divisor via exact Euclidean division;
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Unique polynomial of degree `< points.len()` through the given points.
    pub fn lagrange_interpolate(var: Var, points: &[(Q, Q)]) -> Result<Self, PolyError> {
        for (i, (xi, _)) in points.iter().enumerate() {
            for (xj, _) in &points[..i] {
                if xi == xj {
                    return Err(PolyError::DuplicateAbscissa(q_to_string(xi)));
                }
            }
        }
        let mut acc = Self::zero(var);
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut li = Self::constant(var, yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let denom = xi - xj;
                let lin = Self::new(var, vec![-xj / &denom, denom.recip()]);
                li = li.mul(&lin)?;
            }
            acc = acc.add(&li)?;
        }
        Ok(acc)
    }

    /// Converts a `t`-polynomial invariant under `t ↦ 2(p−1) − t` into the
    /// unique `x`-polynomial with `f(t(t − 2(p−1))/(4p)) = F(t)`, by iterated
    /// leading-term reduction against powers of `x(t)`.
    pub fn to_x_poly(&self, p: u32) -> Result<Self, PolyError> {
        assert_eq!(self.var, Var::T, "to_x_poly takes a t-polynomial");
        // x(t) = t²/(4p) − 2(p−1)t/(4p)
        let xt = UniPoly::new(
            Var::T,
            vec![
                Q::zero(),
                Q::new((-2 * (p as i64 - 1)).into(), (4 * p as i64).into()),
                Q::new(1.into(), (4 * p as i64).into()),
            ],
        );
        let mut out: Vec<(usize, Q)> = Vec::new();
        let mut cur = self.clone();
        while let Some(d) = cur.degree() {
            if d == 0 {
                out.push((0, cur.coeff(0)));
                break;
            }
            if d % 2 != 0 {
                return Err(PolyError::NotSymmetric { degree: d });
            }
            let half = d / 2;
            let c = cur.leading().unwrap() * qi(4 * p as i64).pow(half as i32);
            let mut xp = UniPoly::constant(Var::T, Q::one());
            for _ in 0..half {
                xp = xp.mul(&xt)?;
            }
            cur = cur.sub(&xp.scale(&c))?;
            if cur.degree().is_some_and(|nd| nd >= d) {
                return Err(PolyError::NotSymmetric { degree: d });
            }
            out.push((half, c));
        }
        let maxdeg = out.iter().map(|(d, _)| *d).max().unwrap_or(0);
        let mut coeffs = vec![Q::zero(); maxdeg + 1];
        for (d, c) in out {
            coeffs[d] = c;
        }
        Ok(Self::new(Var::X, coeffs))
    }

    /// Composes an `x`-polynomial with `x(t) = t(t − 2(p−1))/(4p)`, yielding
    /// the symmetric `t`-polynomial (the inverse direction of `to_x_poly`).
    pub fn subst_x_of_t(&self, p: u32) -> Self {
        assert_eq!(self.var, Var::X, "subst_x_of_t takes an x-polynomial");
        let xt = UniPoly::new(
            Var::T,
            vec![
                Q::zero(),
                Q::new((-2 * (p as i64 - 1)).into(), (4 * p as i64).into()),
                Q::new(1.into(), (4 * p as i64).into()),
            ],
        );
        let mut acc = UniPoly::zero(Var::T);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&xt).expect("same var");
            acc = acc.add(&UniPoly::constant(Var::T, c.clone())).expect("same var");
        }
        acc
    }

    /// Human-readable rendering like `(-8/3)*x^2 + (2/3)*x`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = q_to_string(c);
            let term = match i {
                0 => format!("({cs})"),
                1 => format!("({cs})*{}", self.var),
                _ => format!("({cs})*{}^{}", self.var, i),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// Outcome of [`proportionality_scalar`].
#[derive(Clone, Debug, PartialEq)]
pub struct Proportionality {
    /// The scalar `c` with `a = c·b`.
    pub scalar: Q,
    /// Set when both inputs are zero, where any scalar works; the
    /// distinguished scalar 1 is returned.
    pub ambiguous: bool,
}

/// Returns `c` with `a = c·b` if such a scalar exists (`c = 0` when `a = 0`,
/// `b ≠ 0`); `None` when the polynomials are not proportional. When both are
/// zero the scalar is the distinguished 1 with the `ambiguous` flag set.
pub fn proportionality_scalar(a: &UniPoly, b: &UniPoly) -> Option<Proportionality> {
    if a.var() != b.var() {
        return None;
    }
    if a.is_zero() && b.is_zero() {
        return Some(Proportionality { scalar: Q::one(), ambiguous: true });
    }
    if a.is_zero() {
        return Some(Proportionality { scalar: Q::zero(), ambiguous: false });
    }
    if b.is_zero() || a.degree() != b.degree() {
        return None;
    }
    let c = a.leading().unwrap() / b.leading().unwrap();
    if a.sub(&b.scale(&c)).unwrap().is_zero() {
        Some(Proportionality { scalar: c, ambiguous: false })
    } else {
        None
    }
}

/// The affine exponent expression `a·t + b` appearing in factors like
/// `(1+z)^{2p − t − 3/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineExponent {
    /// Coefficient of `t`.
    pub a: Q,
    /// Constant shift.
    pub b: Q,
}

impl AffineExponent {
    /// `a·t + b`.
    pub fn new(a: Q, b: Q) -> Self {
        AffineExponent { a, b }
    }

    /// The plain exponent `t`.
    pub fn t() -> Self {
        Self::new(Q::one(), Q::zero())
    }

    /// The constant exponent `b`.
    pub fn constant(b: Q) -> Self {
        Self::new(Q::zero(), b)
    }

    /// Evaluation at a rational `t`.
    pub fn eval(&self, t: &Q) -> Q {
        &self.a * t + &self.b
    }

    /// As a degree ≤ 1 polynomial in `t`.
    pub fn as_poly(&self) -> UniPoly {
        UniPoly::new(Var::T, vec![self.b.clone(), self.a.clone()])
    }
}

/// The generalized binomial polynomial `C(L(t), k) = ∏_{j=0}^{k−1}(L(t) − j)/k!`,
/// a degree-`k` polynomial in `t` (degree 0 when `L` is constant).
pub fn binom_poly(l: &AffineExponent, k: u64) -> UniPoly {
    let mut acc = UniPoly::constant(Var::T, Q::one());
    let mut kfact = Q::one();
    for j in 0..k {
        let lin = UniPoly::new(Var::T, vec![&l.b - qi(j as i64), l.a.clone()]);
        acc = acc.mul(&lin).expect("same var");
        kfact *= qi(j as i64 + 1);
    }
    acc.scale(&kfact.recip())
}

// ---------------------------------------------------------------------------
// Serialization: {"var": "t"|"x", "coeffs": ["num/den", ...]}
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    var: String,
    coeffs: Vec<String>,
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            var: self.var.name().into(),
            coeffs: self.coeffs.iter().map(q_to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let var = match repr.var.as_str() {
            "t" => Var::T,
            "x" => Var::X,
            other => return Err(D::Error::custom(format!("unknown indeterminate {other:?}"))),
        };
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| q_from_str(s).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UniPoly::new(var, coeffs))
    }
}

impl Serialize for AffineExponent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (q_to_string(&self.a), q_to_string(&self.b)).serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffineExponent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (a, b) = <(String, String)>::deserialize(d)?;
        Ok(AffineExponent::new(
            q_from_str(&a).map_err(D::Error::custom)?,
            q_from_str(&b).map_err(D::Error::custom)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn xp(coeffs: &[(i64, i64)]) -> UniPoly {
        UniPoly::new(Var::X, coeffs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn binom_poly_examples() {
        // C(t, 0) = 1
        assert!(binom_poly(&AffineExponent::t(), 0).is_one());
        // C(t, 2) = (t² − t)/2
        let c2 = binom_poly(&AffineExponent::t(), 2);
        assert_eq!(c2.coeffs(), &[q(0, 1), q(-1, 2), q(1, 2)]);
        // C(t + 3/2, 2) = (1/2)t² + t + 3/8
        let c = binom_poly(&AffineExponent::new(qi(1), q(3, 2)), 2);
        assert_eq!(c.coeffs(), &[q(3, 8), q(1, 1), q(1, 2)]);
    }

    #[test]
    fn gcd_examples() {
        // gcd(8x−3, 32x−9) = 1
        let a = xp(&[(-3, 1), (8, 1)]);
        let b = xp(&[(-9, 1), (32, 1)]);
        assert!(a.gcd(&b).unwrap().is_one());
        // gcd(x²−1, x−1) = x−1
        let a = xp(&[(-1, 1), (0, 1), (1, 1)]);
        let b = xp(&[(-1, 1), (1, 1)]);
        assert_eq!(a.gcd(&b).unwrap(), b);
        // gcd(0, 0) = 0
        assert!(UniPoly::zero(Var::X).gcd(&UniPoly::zero(Var::X)).unwrap().is_zero());
    }

    #[test]
    fn exact_divide_examples() {
        let num = xp(&[(-1, 1), (0, 1), (1, 1)]);
        let den = xp(&[(1, 1), (1, 1)]);
        assert_eq!(num.exact_divide(&den).unwrap(), xp(&[(-1, 1), (1, 1)]));
        let bad = xp(&[(0, 1), (1, 1)]);
        match num.exact_divide(&bad) {
            Err(PolyError::NonzeroRemainder { remainder }) => {
                assert_eq!(remainder, xp(&[(-1, 1)]));
            }
            other => panic!("expected remainder error, got {other:?}"),
        }
    }

    #[test]
    fn lagrange_examples() {
        let id = UniPoly::lagrange_interpolate(
            Var::X,
            &[(qi(0), qi(0)), (qi(1), qi(1))],
        )
        .unwrap();
        assert_eq!(id, xp(&[(0, 1), (1, 1)]));
        let c = UniPoly::lagrange_interpolate(Var::X, &[(qi(2), qi(5))]).unwrap();
        assert_eq!(c, xp(&[(5, 1)]));
        let dup = UniPoly::lagrange_interpolate(
            Var::X,
            &[(qi(1), qi(0)), (qi(1), qi(2))],
        );
        assert!(matches!(dup, Err(PolyError::DuplicateAbscissa(_))));
    }

    #[test]
    fn to_x_examples() {
        // constant
        let one = UniPoly::constant(Var::T, Q::one());
        assert!(one.to_x_poly(3).unwrap().is_one());
        // t² − 2(p−1)t ↦ 4p·x
        for p in [1u32, 2, 5] {
            let f = UniPoly::new(Var::T, vec![qi(0), qi(-2 * (p as i64 - 1)), qi(1)]);
            assert_eq!(f.to_x_poly(p).unwrap(), xp(&[(0, 1), (4 * p as i64, 1)]));
        }
        // p = 1: −(1/6)(t⁴ − t²) ↦ −(8/3)x² + (2/3)x
        let f = UniPoly::new(Var::T, vec![qi(0), qi(0), q(1, 6), qi(0), q(-1, 6)]);
        assert_eq!(f.to_x_poly(1).unwrap(), xp(&[(0, 1), (2, 3), (-8, 3)]));
        // asymmetric input rejected
        let bad = UniPoly::new(Var::T, vec![qi(0), qi(1)]);
        assert!(matches!(bad.to_x_poly(1), Err(PolyError::NotSymmetric { .. })));
    }

    #[test]
    fn proportionality_examples() {
        let two = proportionality_scalar(&xp(&[(2, 1), (2, 1)]), &xp(&[(1, 1), (1, 1)])).unwrap();
        assert_eq!(two.scalar, qi(2));
        assert!(!two.ambiguous);
        assert!(proportionality_scalar(&xp(&[(1, 1), (1, 1)]), &xp(&[(-1, 1), (1, 1)])).is_none());
        let amb =
            proportionality_scalar(&UniPoly::zero(Var::X), &UniPoly::zero(Var::X)).unwrap();
        assert!(amb.ambiguous);
        assert_eq!(amb.scalar, Q::one());
        let zero = proportionality_scalar(&UniPoly::zero(Var::X), &xp(&[(1, 1)])).unwrap();
        assert_eq!(zero.scalar, Q::zero());
    }

    #[test]
    fn serde_round_trip() {
        let f = xp(&[(-3, 1), (8, 5)]);
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(js, r#"{"var":"x","coeffs":["-3","8/5"]}"#);
        let back: UniPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
    }
}
