//! Truncated multivariate Laurent expansion and iterated formal residues.
//!
//! Products of factors `(z_a − z_b)^n`, `(1 + z_a)^{E(t)}` (affine exponent
//! `E`), and pure monomials `z_a^n` are expanded as multivariate Laurent
//! series and the iterated residue — the coefficient of `∏ z_i^{−1}` — is
//! extracted as an exact polynomial in `t`.
//!
//! # Expansion convention
//!
//! `(A − B)^n` with `n < 0` expands in **nonnegative powers of the
//! second-written symbol**: `Σ_{k≥0} C(n,k) (−1)^k A^{n−k} B^k` (the region
//! `|A| > |B|`). The two orderings `(z₁ − z₂)` and `(z₂ − z₁)` are therefore
//! distinct factors and are never normalized into one another; integrands
//! that subtract the two orderings rely on this.
//!
//! # Strategy
//!
//! Factors are multiplied one at a time into an accumulator of monomials
//! (exponent vector ↦ coefficient polynomial in `t`), pruning every monomial
//! that can no longer reach exponent −1 in some variable given the exponent
//! ranges of the factors still to come. Residues are recomputed at a slack
//! order and compared, so a returned value is always truncation-stable.

pub mod cache;
pub mod specs;

use exact_core::poly::{binom_poly, AffineExponent, PolyError, UniPoly, Var};
use exact_core::rational::{binom, qi, Q};
use num::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::collections::HashMap;
use thiserror::Error;

/// Exponent vector over the spec's ordered variable list.
type Exps = SmallVec<[i32; 6]>;
/// Raw dense coefficient polynomial in `t` (ascending degree).
type Poly = Vec<Q>;

/// One factor of a residue integrand.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Factor {
    /// `(first − second)^power`; for negative powers the expansion region is
    /// nonnegative powers of `second`.
    Difference {
        /// The dominant variable (`|first| > |second|` when power < 0).
        first: String,
        /// The expansion variable.
        second: String,
        /// Integer exponent; nonnegative powers are exact polynomials.
        power: i64,
    },
    /// `(1 + var)^{E(t)}` with affine exponent `E`.
    OnePlus {
        /// The variable.
        var: String,
        /// The affine exponent `a·t + b`.
        exponent: AffineExponent,
    },
    /// `var^power`.
    Monomial {
        /// The variable.
        var: String,
        /// Integer exponent.
        power: i64,
    },
}

impl Factor {
    fn vars(&self) -> SmallVec<[&str; 2]> {
        match self {
            Factor::Difference { first, second, .. } => {
                SmallVec::from_slice(&[first.as_str(), second.as_str()])
            }
            Factor::OnePlus { var, .. } | Factor::Monomial { var, .. } => {
                SmallVec::from_slice(&[var.as_str()])
            }
        }
    }
}

/// A labeled residue computation: the integrand factors over an ordered
/// variable list, at family parameter `p`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResidueSpec {
    /// Cache / report label, e.g. `twisted-f`.
    pub label: String,
    /// Family parameter.
    pub p: u32,
    /// Ordered formal variables.
    pub vars: Vec<String>,
    /// Integrand factors, multiplied left to right.
    pub factors: Vec<Factor>,
}

impl ResidueSpec {
    /// Checks that every factor variable appears in `vars`.
    pub fn validate(&self) -> Result<(), EngineError> {
        for f in &self.factors {
            for v in f.vars() {
                if !self.vars.iter().any(|w| w == v) {
                    return Err(EngineError::UnknownVariable {
                        label: self.label.clone(),
                        var: v.to_string(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Resource and stability knobs for the engine.
#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Maximum number of stored monomials before aborting with
    /// [`EngineError::ResourceCap`].
    pub max_monomials: usize,
    /// Extra truncation order used for the stability recomputation.
    pub stability_slack: u32,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { max_monomials: 50_000_000, stability_slack: 4 }
    }
}

/// Engine failures. Falsified mathematical claims are *not* errors — they are
/// reported by the callers; these are resource/convention problems.
#[derive(Clone, Debug, Error)]
pub enum EngineError {
    /// Residue changed between `order` and `order + slack`.
    #[error("{label}: residue not stable at truncation order {order}")]
    TruncationUnstable {
        /// Spec label.
        label: String,
        /// The insufficient order.
        order: u32,
    },
    /// Stored monomials exceeded the configured cap.
    #[error("{label}: monomial count {monomials} exceeds cap {cap}")]
    ResourceCap {
        /// Spec label.
        label: String,
        /// Stored monomials when the cap tripped.
        monomials: usize,
        /// The configured cap.
        cap: usize,
    },
    /// A factor references a variable missing from the spec.
    #[error("{label}: factor variable {var} not in variable list")]
    UnknownVariable {
        /// Spec label.
        label: String,
        /// The missing variable.
        var: String,
    },
    /// Polynomial arithmetic error (propagated).
    #[error(transparent)]
    Poly(#[from] PolyError),
    /// Cache I/O or decode failure.
    #[error("cache error: {0}")]
    Cache(String),
}

// --- raw dense polynomial helpers (ascending degree, trailing zeros trimmed)

fn pnorm(v: &mut Poly) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn pmul(a: &[Q], b: &[Q]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    pnorm(&mut r);
    r
}

fn padd_assign(a: &mut Poly, b: &[Q]) {
    if a.len() < b.len() {
        a.resize(b.len(), Q::zero());
    }
    for (i, y) in b.iter().enumerate() {
        a[i] += y;
    }
    pnorm(a);
}

/// One expanded term of a factor: exponent deltas plus a coefficient
/// polynomial in `t`.
struct Term {
    delta: Exps,
    coeff: Poly,
}

fn expand_factor(f: &Factor, order: u32, var_index: &HashMap<&str, usize>, nv: usize) -> Vec<Term> {
    let mk = |pairs: &[(usize, i64)], coeff: Poly| {
        let mut delta: Exps = SmallVec::from_elem(0, nv);
        for &(v, e) in pairs {
            delta[v] += e as i32;
        }
        Term { delta, coeff }
    };
    match f {
        Factor::Monomial { var, power } => {
            vec![mk(&[(var_index[var.as_str()], *power)], vec![Q::one()])]
        }
        Factor::OnePlus { var, exponent } => {
            let v = var_index[var.as_str()];
            (0..=order as u64)
                .map(|k| {
                    let c = binom_poly(exponent, k);
                    mk(&[(v, k as i64)], c.coeffs().to_vec())
                })
                .collect()
        }
        Factor::Difference { first, second, power } => {
            let (a, b) = (var_index[first.as_str()], var_index[second.as_str()]);
            let kmax = if *power >= 0 { *power as u64 } else { order as u64 };
            (0..=kmax)
                .map(|k| {
                    let mut c = binom(&qi(*power), k);
                    if k % 2 == 1 {
                        c = -c;
                    }
                    mk(&[(a, power - k as i64), (b, k as i64)], vec![c])
                })
                .filter(|t| !t.coeff.is_empty() && !t.coeff[0].is_zero())
                .collect()
        }
    }
}

/// Exponent range `(lo, hi)` that `f` can contribute to variable `v`.
fn factor_range(f: &Factor, order: u32, v: &str) -> (i64, i64) {
    match f {
        Factor::Monomial { var, power } => {
            if var == v {
                (*power, *power)
            } else {
                (0, 0)
            }
        }
        Factor::OnePlus { var, .. } => {
            if var == v {
                (0, order as i64)
            } else {
                (0, 0)
            }
        }
        Factor::Difference { first, second, power } => {
            if *power >= 0 {
                if first == v || second == v {
                    (0, *power)
                } else {
                    (0, 0)
                }
            } else if first == v {
                (*power - order as i64, *power)
            } else if second == v {
                (0, order as i64)
            } else {
                (0, 0)
            }
        }
    }
}

fn merge_maps(
    mut a: HashMap<Exps, Poly>,
    b: HashMap<Exps, Poly>,
) -> HashMap<Exps, Poly> {
    if a.len() < b.len() {
        return merge_maps(b, a);
    }
    for (k, v) in b {
        match a.entry(k) {
            std::collections::hash_map::Entry::Occupied(mut e) => padd_assign(e.get_mut(), &v),
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(v);
            }
        }
    }
    a.retain(|_, v| !v.is_empty());
    a
}

/// Single residue evaluation at a fixed truncation order, without the
/// stability recomputation. Exposed so prune-soundness can be tested
/// (`prune = false` keeps every monomial).
pub fn residue_single(
    spec: &ResidueSpec,
    order: u32,
    prune: bool,
    cfg: &EngineConfig,
) -> Result<UniPoly, EngineError> {
    spec.validate()?;
    let nv = spec.vars.len();
    let var_index: HashMap<&str, usize> =
        spec.vars.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();

    let mut acc: HashMap<Exps, Poly> = HashMap::new();
    acc.insert(SmallVec::from_elem(0, nv), vec![Q::one()]);

    for (fi, f) in spec.factors.iter().enumerate() {
        // Reachability window per variable over the remaining factors: a
        // monomial survives only if exponent + lo ≤ −1 ≤ exponent + hi.
        let mut ranges = vec![(0i64, 0i64); nv];
        for g in &spec.factors[fi + 1..] {
            for (vi, v) in spec.vars.iter().enumerate() {
                let (lo, hi) = factor_range(g, order, v);
                ranges[vi].0 += lo;
                ranges[vi].1 += hi;
            }
        }
        let terms = expand_factor(f, order, &var_index, nv);

        let entries: Vec<(Exps, Poly)> = acc.into_iter().collect();
        let process = |chunk: &[(Exps, Poly)]| {
            let mut local: HashMap<Exps, Poly> = HashMap::new();
            for (ev, pl) in chunk {
                for term in &terms {
                    let mut ne = ev.clone();
                    for (i, d) in term.delta.iter().enumerate() {
                        ne[i] += d;
                    }
                    if prune {
                        let reachable = ne.iter().zip(&ranges).all(|(&e, &(lo, hi))| {
                            e as i64 + lo <= -1 && -1 <= e as i64 + hi
                        });
                        if !reachable {
                            continue;
                        }
                    }
                    let prod = pmul(pl, &term.coeff);
                    if prod.is_empty() {
                        continue;
                    }
                    match local.entry(ne) {
                        std::collections::hash_map::Entry::Occupied(mut e) => {
                            padd_assign(e.get_mut(), &prod)
                        }
                        std::collections::hash_map::Entry::Vacant(e) => {
                            e.insert(prod);
                        }
                    }
                }
            }
            local.retain(|_, v| !v.is_empty());
            local
        };

        acc = if entries.len() >= 512 {
            let chunk = (entries.len() / (4 * rayon::current_num_threads())).max(64);
            entries
                .par_chunks(chunk)
                .map(process)
                .reduce(HashMap::new, merge_maps)
        } else {
            process(&entries)
        };

        if acc.len() > cfg.max_monomials {
            return Err(EngineError::ResourceCap {
                label: spec.label.clone(),
                monomials: acc.len(),
                cap: cfg.max_monomials,
            });
        }
    }

    let target: Exps = SmallVec::from_elem(-1, nv);
    let coeffs = acc.remove(&target).unwrap_or_default();
    let poly = UniPoly::new(Var::T, coeffs);
    // The coefficient ring is Q[t] with degree bounded by 16p for every
    // integrand this engine is pointed at; violation means a planner bug.
    if let Some(d) = poly.degree() {
        assert!(
            d as u32 <= 16 * spec.p,
            "{}: residue degree {d} exceeds the 16p cap",
            spec.label
        );
    }
    Ok(poly)
}

/// The iterated residue of `spec` at truncation `order`, recomputed at
/// `order + slack` for the truncation-stability postcondition.
pub fn residue(spec: &ResidueSpec, order: u32, cfg: &EngineConfig) -> Result<UniPoly, EngineError> {
    let first = residue_single(spec, order, true, cfg)?;
    let second = residue_single(spec, order + cfg.stability_slack, true, cfg)?;
    if first != second {
        return Err(EngineError::TruncationUnstable { label: spec.label.clone(), order });
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::q;

    fn spec(vars: &[&str], factors: Vec<Factor>) -> ResidueSpec {
        ResidueSpec {
            label: "test".into(),
            p: 1,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            factors,
        }
    }

    fn diff(a: &str, b: &str, n: i64) -> Factor {
        Factor::Difference { first: a.into(), second: b.into(), power: n }
    }

    #[test]
    fn expand_positive_difference_is_exact() {
        let s = spec(&["z1", "z2"], vec![]);
        let idx: HashMap<&str, usize> =
            s.vars.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let terms = expand_factor(&diff("z1", "z2", 2), 10, &idx, 2);
        // z1² − 2 z1 z2 + z2²
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0].delta.as_slice(), &[2, 0]);
        assert_eq!(terms[1].coeff, vec![qi(-2)]);
        assert_eq!(terms[2].delta.as_slice(), &[0, 2]);
    }

    #[test]
    fn expand_geometric_series() {
        let s = spec(&["z1", "z2"], vec![]);
        let idx: HashMap<&str, usize> =
            s.vars.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let terms = expand_factor(&diff("z1", "z2", -1), 2, &idx, 2);
        // z1^{−1} + z2 z1^{−2} + z2² z1^{−3}
        assert_eq!(terms.len(), 3);
        for (k, t) in terms.iter().enumerate() {
            assert_eq!(t.delta.as_slice(), &[-1 - k as i32, k as i32]);
            assert_eq!(t.coeff, vec![qi(1)]);
        }
    }

    #[test]
    fn expand_one_plus_binomial_series() {
        let s = spec(&["z"], vec![]);
        let idx: HashMap<&str, usize> =
            s.vars.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let terms = expand_factor(
            &Factor::OnePlus { var: "z".into(), exponent: AffineExponent::t() },
            2,
            &idx,
            1,
        );
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0].coeff, vec![qi(1)]);
        assert_eq!(terms[1].coeff, vec![qi(0), qi(1)]);
        assert_eq!(terms[2].coeff, vec![qi(0), q(-1, 2), q(1, 2)]);
    }

    #[test]
    fn residue_of_monomials() {
        let cfg = EngineConfig::default();
        let s = spec(&["z1"], vec![Factor::Monomial { var: "z1".into(), power: -1 }]);
        assert!(residue(&s, 4, &cfg).unwrap().is_one());
        let s = spec(&["z1"], vec![Factor::Monomial { var: "z1".into(), power: 0 }]);
        assert!(residue(&s, 4, &cfg).unwrap().is_zero());
    }
}
