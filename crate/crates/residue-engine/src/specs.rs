//! Ready-made residue specifications for the twisted and untwisted
//! Zhu-algebra integrands, with default truncation orders and disk caching.
//!
//! Every integrand here is a *difference of two expansion orderings* of one
//! negative-power factor; under the fixed expansion convention the two
//! orderings give different series and only their difference is the intended
//! polynomial.

use crate::cache::DiskCache;
use crate::{residue, EngineConfig, EngineError, Factor, ResidueSpec};
use exact_core::poly::{AffineExponent, UniPoly};
use exact_core::rational::{q, qi, Q};
use num::One;

fn diff(a: &str, b: &str, n: i64) -> Factor {
    Factor::Difference { first: a.into(), second: b.into(), power: n }
}

fn mono(v: &str, n: i64) -> Factor {
    Factor::Monomial { var: v.into(), power: n }
}

fn oneplus(v: &str, e: AffineExponent) -> Factor {
    Factor::OnePlus { var: v.into(), exponent: e }
}

/// Which of the two twisted integrands to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistedKind {
    /// Numerator monomial `z₁^{2p−1}` (yields `f`).
    F,
    /// Numerator monomial `z₁^{2p−3}` (yields `g`).
    G,
}

impl TwistedKind {
    fn label(self) -> &'static str {
        match self {
            TwistedKind::F => "twisted-f",
            TwistedKind::G => "twisted-g",
        }
    }
}

/// Default truncation order for the three-variable twisted residues.
pub fn twisted_order(p: u32) -> u32 {
    6 * p + 2
}

/// Default truncation order for the five-variable untwisted residues.
pub fn untwisted_order(p: u32) -> u32 {
    16 * p + 2
}

/// One ordering of the twisted integrand
/// `z₁^{e} (1+z₁)^{2p−t−3/2} (1+z₂)^t (1+z₃)^t (z₂z₃)^{−2p}
///  (z₁−z₂)^{∓2p} (z₁−z₃)^{−2p} (z₂−z₃)^{2p}`
/// over `Res_{z₁,z₂,z₃}`; `swap_12` selects `(z₂−z₁)^{−2p}` instead.
pub fn twisted_spec(p: u32, kind: TwistedKind, swap_12: bool) -> ResidueSpec {
    let e1 = match kind {
        TwistedKind::F => 2 * p as i64 - 1,
        TwistedKind::G => 2 * p as i64 - 3,
    };
    let d12 = if swap_12 {
        diff("z2", "z1", -2 * p as i64)
    } else {
        diff("z1", "z2", -2 * p as i64)
    };
    // Factor order groups each variable's expansion together so pruning can
    // collapse variables early; the t-dependent (1+z)-factors come last in
    // their group.
    let factors = vec![
        diff("z2", "z3", 2 * p as i64),
        mono("z3", -2 * p as i64),
        d12,
        diff("z1", "z3", -2 * p as i64),
        oneplus("z3", AffineExponent::t()),
        mono("z2", -2 * p as i64),
        oneplus("z2", AffineExponent::t()),
        mono("z1", e1),
        oneplus("z1", AffineExponent::new(-Q::one(), qi(2 * p as i64) - q(3, 2))),
    ];
    ResidueSpec {
        label: format!("{}-{}", kind.label(), if swap_12 { "swapped" } else { "direct" }),
        p,
        vars: vec!["z1".into(), "z2".into(), "z3".into()],
        factors,
    }
}

/// Untwisted five-variable integrand. `ztilde` selects the `z^{8p−3}`
/// numerator used by the second generator; `kernel3_reversed` flips the
/// `(z − z₃)` kernel factor to `(z₃ − z)`.
pub fn untwisted_spec(p: u32, ztilde: bool, kernel3_reversed: bool) -> ResidueSpec {
    let p4 = 4 * p as i64;
    let ez = if ztilde { 8 * p as i64 - 3 } else { 8 * p as i64 - 1 };
    let k3 = if kernel3_reversed { diff("z3", "z", -p4) } else { diff("z", "z3", -p4) };
    let factors = vec![
        // z4 group: Δ₄ columns involving z4, the kernel factor, the monomial,
        // and the binomial series.
        diff("z1", "z4", 2 * p as i64),
        diff("z2", "z4", 2 * p as i64),
        diff("z3", "z4", 2 * p as i64),
        diff("z", "z4", -p4),
        mono("z4", -p4),
        oneplus("z4", AffineExponent::t()),
        // z3 group
        diff("z1", "z3", 2 * p as i64),
        diff("z2", "z3", 2 * p as i64),
        k3,
        mono("z3", -p4),
        oneplus("z3", AffineExponent::t()),
        // z2 group
        diff("z1", "z2", 2 * p as i64),
        diff("z2", "z", -p4),
        mono("z2", -p4),
        oneplus("z2", AffineExponent::t()),
        // z1 group
        diff("z1", "z", -p4),
        mono("z1", -p4),
        oneplus("z1", AffineExponent::t()),
        // z group
        mono("z", ez),
        oneplus("z", AffineExponent::new(qi(-2), qi(6 * p as i64 - 2))),
    ];
    let name = match (ztilde, kernel3_reversed) {
        (false, _) => "untwisted-G",
        (true, false) => "untwisted-Gt-direct",
        (true, true) => "untwisted-Gt-reversed",
    };
    ResidueSpec {
        label: name.into(),
        p,
        vars: vec!["z".into(), "z1".into(), "z2".into(), "z3".into(), "z4".into()],
        factors,
    }
}

fn cached_difference(
    label: &str,
    p: u32,
    order: u32,
    cfg: &EngineConfig,
    cache: Option<&DiskCache>,
    build: impl Fn(bool) -> ResidueSpec + Sync,
) -> Result<UniPoly, EngineError> {
    if let Some(c) = cache {
        if let Some(poly) = c.get(label, p) {
            return Ok(poly);
        }
    }
    let a = residue(&build(false), order, cfg)?;
    let b = residue(&build(true), order, cfg)?;
    let result = a.sub(&b)?;
    if let Some(c) = cache {
        c.put(label, p, &result).map_err(|e| EngineError::Cache(e.to_string()))?;
    }
    Ok(result)
}

/// The pair `(F_tw, G_tw)` of twisted residues at parameter `p`, each the
/// difference of the two `(z₁ − z₂)`-orderings, both invariant under
/// `t ↦ 2(p−1) − t`.
pub fn twisted_pair(
    p: u32,
    cfg: &EngineConfig,
    cache: Option<&DiskCache>,
) -> Result<(UniPoly, UniPoly), EngineError> {
    let order = twisted_order(p);
    let f = cached_difference("twisted-f", p, order, cfg, cache, |swap| {
        twisted_spec(p, TwistedKind::F, swap)
    })?;
    let g = cached_difference("twisted-g", p, order, cfg, cache, |swap| {
        twisted_spec(p, TwistedKind::G, swap)
    })?;
    Ok((f, g))
}

/// The untwisted residue `G_p(t)` (difference of the two kernel orderings of
/// `(z − z₃)`, numerator `z^{8p−1}`).
pub fn untwisted_g(
    p: u32,
    cfg: &EngineConfig,
    cache: Option<&DiskCache>,
) -> Result<UniPoly, EngineError> {
    cached_difference("untwisted-G", p, untwisted_order(p), cfg, cache, |rev| {
        untwisted_spec(p, false, rev)
    })
}

/// The untwisted residue `G̃_p(t)` (numerator `z^{8p−3}`, difference of the
/// `(z₃ − z)` and `(z − z₃)` kernel orderings).
pub fn untwisted_gtilde(
    p: u32,
    cfg: &EngineConfig,
    cache: Option<&DiskCache>,
) -> Result<UniPoly, EngineError> {
    if let Some(c) = cache {
        if let Some(poly) = c.get("untwisted-Gt", p) {
            return Ok(poly);
        }
    }
    let order = untwisted_order(p);
    let a = residue(&untwisted_spec(p, true, true), order, cfg)?;
    let b = residue(&untwisted_spec(p, true, false), order, cfg)?;
    let result = a.sub(&b)?;
    if let Some(c) = cache {
        c.put("untwisted-Gt", p, &result).map_err(|e| EngineError::Cache(e.to_string()))?;
    }
    Ok(result)
}
