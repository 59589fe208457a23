//! Exact truncated `q`-series with fractional exponents.
//!
//! Exponents live in `(1/N)ℤ` for a per-series denominator `N`; arithmetic
//! between series with different `N` rescales both to the least common
//! multiple, so mixed-lattice operations are always exact. Every series
//! carries a validity `order`: all exponents strictly below it are exactly
//! represented. Multiplication shrinks the validity bound according to the
//! factors' minimal exponents, so truncation never silently loses terms.

use exact_core::rational::{q_to_string, Q};
use num::{BigInt, One, ToPrimitive, Zero};
use std::collections::BTreeMap;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn q_to_i64(x: &Q) -> i64 {
    debug_assert!(x.denom().is_one());
    x.numer().to_i64().expect("exponent numerator fits i64")
}

/// A truncated formal series `Σ c_e q^e` with rational exponents and exact
/// rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries {
    /// Exponent lattice denominator: keys mean `key / denom`.
    denom: i64,
    /// Nonzero coefficients by scaled exponent.
    terms: BTreeMap<i64, Q>,
    /// Exponents `< order` are exactly represented.
    order: Q,
}

impl QSeries {
    /// The zero series, exact below `order`.
    pub fn zero(order: Q) -> Self {
        QSeries { denom: 1, terms: BTreeMap::new(), order }
    }

    /// The single term `coeff·q^exp`.
    pub fn monomial(exp: &Q, coeff: Q, order: Q) -> Self {
        let mut s = Self::zero(order);
        s.add_term(exp, coeff);
        s
    }

    /// Validity bound.
    pub fn order(&self) -> &Q {
        &self.order
    }

    /// Exponent lattice denominator.
    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// Adds `coeff·q^exp` in place (dropped if `exp ≥ order`).
    pub fn add_term(&mut self, exp: &Q, coeff: Q) {
        if coeff.is_zero() || *exp >= self.order {
            return;
        }
        let d = exp.denom().to_i64().expect("exponent denominator fits i64");
        if self.denom % d != 0 {
            self.rescale(lcm(self.denom, d));
        }
        let key = q_to_i64(&(exp * Q::from_integer(BigInt::from(self.denom))));
        let entry = self.terms.entry(key).or_insert_with(Q::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn rescale(&mut self, new_denom: i64) {
        debug_assert!(new_denom % self.denom == 0);
        let f = new_denom / self.denom;
        if f == 1 {
            return;
        }
        self.terms = self.terms.iter().map(|(k, v)| (k * f, v.clone())).collect();
        self.denom = new_denom;
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (Q, &Q)> + '_ {
        let d = self.denom;
        self.terms.iter().map(move |(k, v)| (Q::new(BigInt::from(*k), BigInt::from(d)), v))
    }

    /// Coefficient at an exact exponent.
    pub fn coeff(&self, exp: &Q) -> Q {
        let scaled = exp * Q::from_integer(BigInt::from(self.denom));
        if !scaled.denom().is_one() {
            return Q::zero();
        }
        self.terms.get(&q_to_i64(&scaled)).cloned().unwrap_or_else(Q::zero)
    }

    /// Smallest exponent with nonzero coefficient.
    pub fn min_exp(&self) -> Option<Q> {
        self.terms
            .keys()
            .next()
            .map(|k| Q::new(BigInt::from(*k), BigInt::from(self.denom)))
    }

    /// True iff no nonzero terms are stored.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True iff empty.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Copy truncated to a (smaller or equal) validity bound.
    pub fn truncated(&self, order: &Q) -> Self {
        let mut out = self.clone();
        out.order = order.clone().min(self.order.clone());
        let bound = &out.order * Q::from_integer(BigInt::from(self.denom));
        out.terms.retain(|k, _| Q::from_integer(BigInt::from(*k)) < bound);
        out
    }

    fn common(mut a: Self, mut b: Self) -> (Self, Self) {
        let d = lcm(a.denom, b.denom);
        a.rescale(d);
        b.rescale(d);
        (a, b)
    }

    /// Exact sum; validity is the smaller of the two bounds.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.clone().min(other.order.clone());
        let (mut a, b) = Self::common(self.truncated(&order), other.truncated(&order));
        for (k, v) in b.terms {
            let entry = a.terms.entry(k).or_insert_with(Q::zero);
            *entry += v;
            if entry.is_zero() {
                a.terms.remove(&k);
            }
        }
        a
    }

    /// Exact difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Q) -> Self {
        let mut out = self.clone();
        if s.is_zero() {
            out.terms.clear();
            return out;
        }
        for v in out.terms.values_mut() {
            *v *= s;
        }
        out
    }

    /// Multiplies every exponent's position: `q^e ↦ q^{e+delta}`.
    pub fn shifted(&self, delta: &Q) -> Self {
        let mut out = self.clone();
        let d = delta.denom().to_i64().expect("shift denominator fits i64");
        if out.denom % d != 0 {
            out.rescale(lcm(out.denom, d));
        }
        let kd = q_to_i64(&(delta * Q::from_integer(BigInt::from(out.denom))));
        out.terms = out.terms.iter().map(|(k, v)| (k + kd, v.clone())).collect();
        out.order = &self.order + delta;
        out
    }

    /// Exact truncated product. The result is valid below
    /// `min(a.order + min_exp(b), b.order + min_exp(a))`.
    pub fn mul(&self, other: &Self) -> Self {
        let amin = self.min_exp().unwrap_or_else(Q::zero);
        let bmin = other.min_exp().unwrap_or_else(Q::zero);
        let order = (&self.order + bmin).min(&other.order + amin);
        let (a, b) = Self::common(self.clone(), other.clone());
        let mut out = QSeries { denom: a.denom, terms: BTreeMap::new(), order: order.clone() };
        let bound = &order * Q::from_integer(BigInt::from(a.denom));
        for (ka, va) in &a.terms {
            for (kb, vb) in &b.terms {
                let k = ka + kb;
                if Q::from_integer(BigInt::from(k)) >= bound {
                    break; // b is sorted ascending
                }
                let prod = va * vb;
                let entry = out.terms.entry(k).or_insert_with(Q::zero);
                *entry += prod;
                if entry.is_zero() {
                    out.terms.remove(&k);
                }
            }
        }
        out
    }

    /// Exact equality of all terms below `order`; panics if either side's
    /// validity does not reach `order` (a truncation-management bug).
    pub fn eq_to_order(&self, other: &Self, order: &Q) -> bool {
        assert!(
            self.order >= *order && other.order >= *order,
            "comparison order {} exceeds validity ({}, {})",
            order,
            self.order,
            other.order
        );
        self.truncated(order).same_terms(&other.truncated(order))
    }

    fn same_terms(&self, other: &Self) -> bool {
        let (a, b) = Self::common(self.clone(), other.clone());
        a.terms == b.terms
    }

    /// First exponent at which the two series differ below `order`, with the
    /// two coefficients — the witness for a falsified identity.
    pub fn first_difference(&self, other: &Self, order: &Q) -> Option<(Q, Q, Q)> {
        let diff = self.truncated(order).sub(&other.truncated(order));
        diff.min_exp().map(|e| (e.clone(), self.coeff(&e), other.coeff(&e)))
    }

    /// TSV rows `exponent <tab> coefficient`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (e, c) in self.iter() {
            out.push_str(&format!("{}\t{}\n", q_to_string(&e), q_to_string(c)));
        }
        out
    }
}

/// A pair `base + τ·tau_part`, the structural form of the `τ ∂Θ / η`
/// spanning elements; linear operations act componentwise and `τ` is never
/// given a numeric value.
#[derive(Clone, Debug, PartialEq)]
pub struct TauQSeries {
    /// The τ-free component.
    pub base: QSeries,
    /// The coefficient of τ.
    pub tau_part: QSeries,
}

impl TauQSeries {
    /// A τ-free element.
    pub fn plain(base: QSeries) -> Self {
        let order = base.order().clone();
        TauQSeries { base, tau_part: QSeries::zero(order) }
    }

    /// A pure τ-component element.
    pub fn tau(tau_part: QSeries) -> Self {
        let order = tau_part.order().clone();
        TauQSeries { base: QSeries::zero(order), tau_part }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::{q, qi};

    #[test]
    fn lattice_rescaling_is_automatic() {
        let a = QSeries::monomial(&q(1, 3), qi(1), qi(10));
        let b = QSeries::monomial(&q(1, 4), qi(2), qi(10));
        let s = a.add(&b);
        assert_eq!(s.denom() % 12, 0);
        assert_eq!(s.coeff(&q(1, 3)), qi(1));
        assert_eq!(s.coeff(&q(1, 4)), qi(2));
        assert_eq!(s.coeff(&q(1, 2)), qi(0));
    }

    #[test]
    fn mul_respects_validity() {
        // (q^{-1} + ...valid<5) * (q^2) is valid below 7? No: below 5+2=7
        let a = QSeries::monomial(&qi(-1), qi(1), qi(5));
        let b = QSeries::monomial(&qi(2), qi(3), qi(100));
        let p = a.mul(&b);
        assert_eq!(p.coeff(&qi(1)), qi(3));
        assert_eq!(*p.order(), qi(7));
    }

    #[test]
    fn first_difference_witness() {
        let a = QSeries::monomial(&qi(1), qi(1), qi(10));
        let mut b = a.clone();
        b.add_term(&qi(3), qi(5));
        assert!(a.eq_to_order(&b, &qi(3)));
        assert!(!a.eq_to_order(&b, &qi(4)));
        let (e, ca, cb) = a.first_difference(&b, &qi(10)).unwrap();
        assert_eq!((e, ca, cb), (qi(3), qi(0), qi(5)));
    }
}
