//! Zhu-algebra polynomial assembly and claim verdicts.
//!
//! Builds the per-`p` family of polynomials attached to the singlet / triplet
//! Zhu algebras — `f_p`, `h_p`, the twisted quotients `f₁`, `g₁`, the
//! interpolation polynomial `r_p` (two independent routes), `ℓ_p`, the
//! constant-term-conjecture scalar `A_p`, the interpolants `g_p^m`, and the
//! spectrum sets — and returns structured verdicts instead of panicking when
//! an identity fails to reproduce.

use exact_core::poly::{binom_poly, proportionality_scalar, AffineExponent, PolyError, UniPoly, Var};
use exact_core::rational::{factorial, q, qi, Q};
use num::{One, Zero};
use residue_engine::cache::DiskCache;
use residue_engine::specs::{twisted_pair, untwisted_g, untwisted_gtilde};
use residue_engine::{EngineConfig, EngineError};
use thiserror::Error;

/// Failures that are not claim verdicts (malformed input, engine resources).
#[derive(Debug, Error)]
pub enum ZhuError {
    /// Residue engine failure.
    #[error(transparent)]
    Engine(#[from] EngineError),
    /// Polynomial arithmetic failure.
    #[error(transparent)]
    Poly(#[from] PolyError),
    /// The product form of `f_p` does not match its residue definition.
    #[error("f_p root mismatch: product form {product} differs from {computed}")]
    RootMismatch {
        /// `B̃_p · ∏ (x − h_{i,1})`.
        product: UniPoly,
        /// `to_x_poly` of the defining residue polynomial.
        computed: UniPoly,
    },
    /// A stated degree bound failed.
    #[error("degree bound violated: deg = {degree:?}, bound = {bound}")]
    DegreeBoundViolated {
        /// Actual degree.
        degree: Option<usize>,
        /// Claimed bound.
        bound: usize,
    },
    /// `ℓ_p` has a root outside the `h`-value candidate grid.
    #[error("unexpected root: residual factor {residual} has no roots on the candidate grid")]
    UnexpectedRoot {
        /// The unfactored residual polynomial.
        residual: UniPoly,
    },
}

/// Outcome of an exact division attempt: quotient, or the nonzero remainder.
pub type Division = Result<UniPoly, UniPoly>;

fn divide(a: &UniPoly, b: &UniPoly) -> Result<Division, PolyError> {
    match a.exact_divide(b) {
        Ok(quot) => Ok(Ok(quot)),
        Err(PolyError::NonzeroRemainder { remainder }) => Ok(Err(remainder)),
        Err(e) => Err(e),
    }
}

// ---------------------------------------------------------------------------
// Weight grid
// ---------------------------------------------------------------------------

/// The conformal weight `h_{i,j} = ((jp − i)² − (p−1)²)/(4p)`; `i` may be
/// half-integral.
pub fn h_weight(p: u32, i: &Q, j: i64) -> Q {
    let jp = qi(j * p as i64);
    let d = qi((p as i64 - 1) * (p as i64 - 1));
    ((&jp - i) * (&jp - i) - d) / qi(4 * p as i64)
}

/// `h_{i,j}` for integer `i`.
pub fn h_int(p: u32, i: i64, j: i64) -> Q {
    h_weight(p, &qi(i), j)
}

/// `h_{i,1}` for half-integral `i = n/2`.
pub fn h_half(p: u32, twice_i: i64, j: i64) -> Q {
    h_weight(p, &q(twice_i, 2), j)
}

/// The finite candidate root grid `{h_{i,1} : i ∈ (1/2)ℤ, 0 < i < 5p}`,
/// deduplicated and sorted.
pub fn candidate_grid(p: u32) -> Vec<Q> {
    let mut vals: Vec<Q> = (1..10 * p as i64).map(|n| h_half(p, n, 1)).collect();
    vals.sort();
    vals.dedup();
    vals
}

// ---------------------------------------------------------------------------
// Closed-form polynomials
// ---------------------------------------------------------------------------

/// `B_p = (3p−1)!(2p)! / ((4p−1)! p!)`.
pub fn bp_constant(p: u32) -> Q {
    let p = p as u64;
    Q::new(
        factorial(3 * p - 1) * factorial(2 * p),
        factorial(4 * p - 1) * factorial(p),
    )
}

/// `C_p = (4p)^{2p−1} / (2p−1)!²`.
pub fn cp_constant(p: u32) -> Q {
    let f = factorial(2 * p as u64 - 1);
    Q::new(num::BigInt::from(4 * p).pow(2 * p - 1), &f * &f)
}

/// `P(x) = ∏_{i=1}^{2p−1} (x − h_{i,1})`.
pub fn p_poly(p: u32) -> UniPoly {
    let roots: Vec<Q> = (1..2 * p as i64).map(|i| h_int(p, i, 1)).collect();
    UniPoly::from_roots(Var::X, &roots, Q::one())
}

/// The singlet polynomial `f_p` from its defining residue value
/// `F(t) = (−1)^p B_p C(t, 3p−1) C(t+p, 3p−1)`, converted to `x`, together
/// with its leading coefficient `B̃_p`. The product form
/// `B̃_p ∏_{i=1}^{3p−1}(x − h_{i,1})` is verified exactly.
pub fn singlet_fp(p: u32) -> Result<(UniPoly, Q), ZhuError> {
    let k = 3 * p as u64 - 1;
    let mut ft = binom_poly(&AffineExponent::t(), k)
        .mul(&binom_poly(&AffineExponent::new(Q::one(), qi(p as i64)), k))?
        .scale(&bp_constant(p));
    if p % 2 == 1 {
        ft = ft.neg();
    }
    let fx = ft.to_x_poly(p)?;
    let lead = fx.leading().cloned().unwrap_or_else(Q::zero);
    let roots: Vec<Q> = (1..=3 * p as i64 - 1).map(|i| h_int(p, i, 1)).collect();
    let product = UniPoly::from_roots(Var::X, &roots, lead.clone());
    if product != fx {
        return Err(ZhuError::RootMismatch { product, computed: fx });
    }
    Ok((fx, lead))
}

/// `h_p(x) = ∏_{i=1}^{p} (x − h_{p+1/2−i,1})`, monic of degree `p`.
pub fn hp_poly(p: u32) -> UniPoly {
    let roots: Vec<Q> = (1..=p as i64)
        .map(|i| h_half(p, 2 * p as i64 + 1 - 2 * i, 1))
        .collect();
    UniPoly::from_roots(Var::X, &roots, Q::one())
}

/// The abscissae/value pairs defining `r_p`: `r_p(h_{4p−i,1}) = −2 f_p` for
/// `i = 1..p` and `r_p(h_{3p+1/2−j,1}) = −½ f_p` for `j = 1..2p`.
pub fn rp_conditions(p: u32, fp: &UniPoly) -> Vec<(Q, Q)> {
    let mut pts = Vec::new();
    for i in 1..=p as i64 {
        let x = h_int(p, 4 * p as i64 - i, 1);
        let y = fp.eval(&x) * qi(-2);
        pts.push((x, y));
    }
    for j in 1..=2 * p as i64 {
        let x = h_half(p, 6 * p as i64 + 1 - 2 * j, 1);
        let y = fp.eval(&x) * q(-1, 2);
        pts.push((x, y));
    }
    pts
}

/// The unique degree ≤ 3p−1 interpolant through the `r_p` conditions.
pub fn rp_interpolated(p: u32) -> Result<UniPoly, ZhuError> {
    let (fp, _) = singlet_fp(p)?;
    Ok(UniPoly::lagrange_interpolate(Var::X, &rp_conditions(p, &fp))?)
}

/// Published reference values of `r_p` for `p = 1, 2` (comparison is up to
/// one global sign shared across both).
pub fn reference_rp(p: u32) -> Option<UniPoly> {
    match p {
        // r₁ = −(908x² − 515x + 27)/105
        1 => Some(UniPoly::new(
            Var::X,
            vec![q(-27, 105), q(515, 105), q(-908, 105)],
        )),
        // r₂ = 8(−8505 − 16875x + 655191x² − 1359879x³ + 642800x⁴ + 10048x⁵)/984555
        2 => Some(
            UniPoly::new(
                Var::X,
                vec![
                    qi(-8505),
                    qi(-16875),
                    qi(655191),
                    qi(-1359879),
                    qi(642800),
                    qi(10048),
                ],
            )
            .scale(&q(8, 984555)),
        ),
        _ => None,
    }
}

/// Published reference quotients `(f₁, g₁)` for `p = 2..5` (each up to a
/// nonzero rational scalar).
pub fn reference_f1g1(p: u32) -> Option<(UniPoly, UniPoly)> {
    let mk = |cs: &[i64]| UniPoly::new(Var::X, cs.iter().map(|&c| qi(c)).collect());
    match p {
        2 => Some((mk(&[-3, 8]), mk(&[-9, 32]))),
        3 => Some((mk(&[105, -256, 256]), mk(&[455, -1136, 1536]))),
        4 => Some((
            mk(&[-23625, 68960, -59392, 32768]),
            mk(&[-401625, 1216000, -1024000, 786432]),
        )),
        5 => Some((
            mk(&[2837835, -9007488, 10473984, -4587520, 1638400]),
            mk(&[3972969, -12744144, 15591168, -6410240, 3276800]),
        )),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Residue-backed verdicts
// ---------------------------------------------------------------------------

/// Verdict bundle for the twisted factorization `f = f₁ h_p`, `g = g₁ h_p`.
#[derive(Clone, Debug)]
pub struct TwistedFactorization {
    /// `to_x_poly` of the twisted `F` residue.
    pub f_x: UniPoly,
    /// `to_x_poly` of the twisted `G` residue.
    pub g_x: UniPoly,
    /// Quotient by `h_p`, or the falsifying remainder.
    pub f1: Division,
    /// Quotient by `h_p`, or the falsifying remainder.
    pub g1: Division,
    /// `gcd(f₁, g₁) = 1`; `None` when either division failed.
    pub coprime: Option<bool>,
}

/// Computes both twisted residues, divides by `h_p`, and tests coprimality.
/// A nonzero remainder is a falsified-divisibility outcome, not an error.
pub fn twisted_factorize(
    p: u32,
    cfg: &EngineConfig,
    cache: Option<&DiskCache>,
) -> Result<TwistedFactorization, ZhuError> {
    let (ft, gt) = twisted_pair(p, cfg, cache)?;
    let f_x = ft.to_x_poly(p)?;
    let g_x = gt.to_x_poly(p)?;
    let hp = hp_poly(p);
    let f1 = divide(&f_x, &hp)?;
    let g1 = divide(&g_x, &hp)?;
    let coprime = match (&f1, &g1) {
        (Ok(a), Ok(b)) => Some(a.gcd(b)?.is_one()),
        _ => None,
    };
    Ok(TwistedFactorization { f_x, g_x, f1, g1, coprime })
}

/// The untwisted square-relation coefficients `f = f_p + r_p`,
/// `g = −f_p·r_p`, with the degree bounds `deg f ≤ 3p−1`, `deg g ≤ 6p−2`
/// asserted.
pub fn untwisted_square_relation(p: u32) -> Result<(UniPoly, UniPoly), ZhuError> {
    let (fp, _) = singlet_fp(p)?;
    let rp = rp_interpolated(p)?;
    let f_untw = fp.add(&rp)?;
    let g_untw = fp.mul(&rp)?.neg();
    let check = |poly: &UniPoly, bound: usize| -> Result<(), ZhuError> {
        if poly.degree().is_some_and(|d| d > bound) {
            Err(ZhuError::DegreeBoundViolated { degree: poly.degree(), bound })
        } else {
            Ok(())
        }
    };
    check(&f_untw, 3 * p as usize - 1)?;
    check(&g_untw, 6 * p as usize - 2)?;
    Ok((f_untw, g_untw))
}

/// Verdict bundle for the `G̃_p` constant-term conjecture and the `ℓ_p`
/// factorization.
#[derive(Clone, Debug)]
pub struct EllConjecture {
    /// The residue polynomial `G̃_p(t)`.
    pub gtilde: UniPoly,
    /// Proportionality scalar against
    /// `C(t+p+1/2, 4p)·C(t+2p, 4p−1)·C(t, 4p−1)`; `None` = not proportional.
    pub a_p: Option<Q>,
    /// Both sides zero (scalar ambiguous).
    pub ambiguous: bool,
    /// `ℓ_p = to_x_poly(G̃_p)/f_p`, or the falsifying remainder.
    pub ell: Division,
    /// Whether the root multiset of `ℓ_p` equals
    /// `{h_{i,1} : i = 3p..4p−1} ∪ {h_{3p+1/2−j,1} : j = 1..2p}`
    /// (`None` when the division failed).
    pub roots_match: Option<bool>,
    /// The expected root list.
    pub expected_roots: Vec<Q>,
}

/// Expected `ℓ_p` roots: `h_{i,1}` for `i = 3p..4p−1` and `h_{3p+1/2−j,1}`
/// for `j = 1..2p`.
pub fn ell_expected_roots(p: u32) -> Vec<Q> {
    let mut roots: Vec<Q> = (3 * p as i64..4 * p as i64).map(|i| h_int(p, i, 1)).collect();
    roots.extend((1..=2 * p as i64).map(|j| h_half(p, 6 * p as i64 + 1 - 2 * j, 1)));
    roots
}

/// Runs the three `G̃_p` sub-checks (conjectured binomial form, divisibility
/// by `f_p`, root set of `ℓ_p`).
pub fn ellp_and_conjecture(
    p: u32,
    cfg: &EngineConfig,
    cache: Option<&DiskCache>,
) -> Result<EllConjecture, ZhuError> {
    let gtilde = untwisted_gtilde(p, cfg, cache)?;
    let pi = p as i64;
    let rhs = binom_poly(&AffineExponent::new(Q::one(), qi(pi) + q(1, 2)), 4 * p as u64)
        .mul(&binom_poly(
            &AffineExponent::new(Q::one(), qi(2 * pi)),
            4 * p as u64 - 1,
        ))?
        .mul(&binom_poly(&AffineExponent::t(), 4 * p as u64 - 1))?;
    let prop = proportionality_scalar(&gtilde, &rhs);
    let (a_p, ambiguous) = match prop {
        Some(pr) => (Some(pr.scalar), pr.ambiguous),
        None => (None, false),
    };
    let (fp, _) = singlet_fp(p)?;
    let ell = divide(&gtilde.to_x_poly(p)?, &fp)?;
    let expected_roots = ell_expected_roots(p);
    let roots_match = match &ell {
        Ok(ellp) => {
            let lead = ellp.leading().cloned().unwrap_or_else(Q::zero);
            let product = UniPoly::from_roots(Var::X, &expected_roots, lead);
            Some(product == *ellp)
        }
        Err(_) => None,
    };
    Ok(EllConjecture { gtilde, a_p, ambiguous, ell, roots_match, expected_roots })
}

/// Verdict for the `G_p` cross-check of `r_p`.
#[derive(Clone, Debug)]
pub struct RpCrosscheck {
    /// `to_x_poly(G_p)/f_p`, or the falsifying remainder.
    pub quotient: Division,
    /// Sign `ε ∈ {+1, −1}` with `ε·quotient = f_p + r_p(interpolated)`;
    /// `None` when no sign works (falsified) or the division failed.
    pub sign: Option<i8>,
}

/// Checks that the residue route through `G_p` reproduces the interpolation
/// route: `±(to_x_poly(G_p)/f_p) = f_p + r_p`, recording which sign.
pub fn rp_crosscheck_residue(
    p: u32,
    cfg: &EngineConfig,
    cache: Option<&DiskCache>,
) -> Result<RpCrosscheck, ZhuError> {
    let g = untwisted_g(p, cfg, cache)?;
    let (fp, _) = singlet_fp(p)?;
    let quotient = divide(&g.to_x_poly(p)?, &fp)?;
    let sign = match &quotient {
        Ok(quot) => {
            let target = fp.add(&rp_interpolated(p)?)?;
            if *quot == target {
                Some(1)
            } else if quot.neg() == target {
                Some(-1)
            } else {
                None
            }
        }
        Err(_) => None,
    };
    Ok(RpCrosscheck { quotient, sign })
}

/// The interpolant `g_p^m`: value `f_p` on `{h_{i,m+1}}_{i=1..p}` (`m` even)
/// or `{h_{p+i,m+2}}_{i=1..p}` (`m` odd), and `−½f_p` on
/// `{h_{3p+1/2−j,1}}_{j=1..2p}`; unique of degree ≤ 3p−1.
pub fn gp_interpolant(p: u32, m: u32) -> Result<UniPoly, ZhuError> {
    let (fp, _) = singlet_fp(p)?;
    let mut pts = Vec::new();
    for i in 1..=p as i64 {
        let x = if m % 2 == 0 {
            h_int(p, i, m as i64 + 1)
        } else {
            h_int(p, p as i64 + i, m as i64 + 2)
        };
        let y = fp.eval(&x);
        pts.push((x, y));
    }
    for j in 1..=2 * p as i64 {
        let x = h_half(p, 6 * p as i64 + 1 - 2 * j, 1);
        let y = fp.eval(&x) * q(-1, 2);
        pts.push((x, y));
    }
    Ok(UniPoly::lagrange_interpolate(Var::X, &pts)?)
}

/// The spectrum variety data: the curve `y = f_p(x)` plus isolated points.
#[derive(Clone, Debug)]
pub struct SpectrumSet {
    /// Family parameter.
    pub p: u32,
    /// Isolated points `(x, r_p(x))` over the roots of `ℓ_p`, sorted by `x`,
    /// with multiplicity.
    pub isolated: Vec<(Q, Q)>,
    /// How many roots are of type `h_{4p−i,1}` (`i = 1..p`).
    pub count_type_h3: usize,
    /// How many roots are of type `h_{3p+1/2−j,1}` (`j = 1..2p`).
    pub count_type_sigma: usize,
}

/// Extracts the isolated spectrum points by scanning the candidate grid for
/// roots of `ℓ_p` (no general root finding); a residual factor with no grid
/// roots falsifies the factorization claim.
pub fn spectrum_sets(p: u32, ell: &UniPoly, rp: &UniPoly) -> Result<SpectrumSet, ZhuError> {
    let grid = candidate_grid(p);
    let mut rest = ell.clone();
    let mut roots = Vec::new();
    for x0 in &grid {
        loop {
            if rest.degree().is_none_or(|d| d == 0) {
                break;
            }
            if !rest.eval(x0).is_zero() {
                break;
            }
            let lin = UniPoly::new(Var::X, vec![-x0.clone(), Q::one()]);
            rest = rest.exact_divide(&lin)?;
            roots.push(x0.clone());
        }
    }
    if rest.degree().is_some_and(|d| d > 0) {
        return Err(ZhuError::UnexpectedRoot { residual: rest });
    }
    let type_h3: Vec<Q> = (1..=p as i64).map(|i| h_int(p, 4 * p as i64 - i, 1)).collect();
    let type_sigma: Vec<Q> =
        (1..=2 * p as i64).map(|j| h_half(p, 6 * p as i64 + 1 - 2 * j, 1)).collect();
    roots.sort();
    let isolated: Vec<(Q, Q)> = roots.iter().map(|x| (x.clone(), rp.eval(x))).collect();
    let count_type_h3 = roots.iter().filter(|x| type_h3.contains(x)).count();
    let count_type_sigma = roots.iter().filter(|x| type_sigma.contains(x)).count();
    Ok(SpectrumSet { p, isolated, count_type_h3, count_type_sigma })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_weight_examples() {
        for p in 1..=6 {
            assert!(h_int(p, 1, 1).is_zero());
        }
        assert_eq!(h_half(2, 1, 1), q(5, 32));
        // symmetry h_{i,j} = h_{2jp−i,j}
        for p in 1..=5u32 {
            for j in 1..=4i64 {
                for i in 1..=(4 * p as i64) {
                    assert_eq!(h_int(p, i, j), h_int(p, 2 * j * p as i64 - i, j));
                }
            }
        }
    }

    #[test]
    fn index_identity_h4p_minus_i() {
        // h_{4p−i,1} = h_{i,3} for i = 1..p, p ≤ 10
        for p in 1..=10u32 {
            for i in 1..=p as i64 {
                assert_eq!(h_int(p, 4 * p as i64 - i, 1), h_int(p, i, 3));
            }
        }
    }

    #[test]
    fn singlet_fp_oracles() {
        let (f1, b1) = singlet_fp(1).unwrap();
        assert_eq!(b1, q(-8, 3));
        assert_eq!(f1, UniPoly::new(Var::X, vec![qi(0), q(2, 3), q(-8, 3)]));
        let (f2, _) = singlet_fp(2).unwrap();
        assert_eq!(
            f2,
            UniPoly::new(
                Var::X,
                vec![qi(0), qi(0), q(16, 525), q(208, 1575), q(-256, 315), q(1024, 1575)]
            )
        );
        // f_p vanishes on the listed roots and not on the S^{(2)} abscissae
        for p in 1..=6u32 {
            let (fp, _) = singlet_fp(p).unwrap();
            for i in 1..=3 * p as i64 - 1 {
                assert!(fp.eval(&h_int(p, i, 1)).is_zero());
            }
            for i in 1..=p as i64 {
                assert!(!fp.eval(&h_int(p, 4 * p as i64 - i, 1)).is_zero());
            }
        }
    }

    #[test]
    fn hp_poly_oracles() {
        assert_eq!(hp_poly(1), UniPoly::new(Var::X, vec![q(-1, 16), qi(1)]));
        let h2 = UniPoly::from_roots(Var::X, &[q(-3, 32), q(5, 32)], Q::one());
        assert_eq!(hp_poly(2), h2);
        assert!(hp_poly(5).leading().unwrap().is_one());
    }

    #[test]
    fn rp_matches_reference_up_to_global_sign() {
        // The interpolant is the exact negative of the published r₁ and r₂.
        for p in [1u32, 2] {
            let interp = rp_interpolated(p).unwrap();
            let reference = reference_rp(p).unwrap();
            assert_eq!(interp.neg(), reference, "p = {p}");
        }
        // spot value: r₂(3) = −2 f₂(3) = −192 on the interpolation route
        let r2 = rp_interpolated(2).unwrap();
        assert_eq!(r2.eval(&qi(3)), qi(-192));
    }

    #[test]
    fn twisted_factorize_small_p() {
        let cfg = EngineConfig::default();
        for p in [2u32, 3] {
            let tf = twisted_factorize(p, &cfg, None).unwrap();
            let (rf, rg) = reference_f1g1(p).unwrap();
            let f1 = tf.f1.unwrap();
            let g1 = tf.g1.unwrap();
            let sf = proportionality_scalar(&f1, &rf).unwrap();
            let sg = proportionality_scalar(&g1, &rg).unwrap();
            assert!(!sf.scalar.is_zero() && !sf.ambiguous);
            assert!(!sg.scalar.is_zero() && !sg.ambiguous);
            assert_eq!(tf.coprime, Some(true));
        }
        // p = 1 is the genuine outlier: g is NOT divisible by h₁; the
        // remainder is the constant −1/64.
        let tf = twisted_factorize(1, &cfg, None).unwrap();
        assert!(tf.f1.is_ok());
        let rem = tf.g1.unwrap_err();
        assert_eq!(rem, UniPoly::new(Var::X, vec![q(-1, 64)]));
    }

    #[test]
    fn root_containment_of_hp() {
        let cfg = EngineConfig::default();
        for p in [1u32, 2, 3] {
            let tf = twisted_factorize(p, &cfg, None).unwrap();
            for i in 1..=p as i64 {
                let root = h_half(p, 2 * p as i64 + 1 - 2 * i, 1);
                assert!(tf.f_x.eval(&root).is_zero());
                // At p = 1 the G-side residue is genuinely not divisible by
                // h₁ (constant remainder −1/64), so its root containment
                // holds only for p ≥ 2.
                if p >= 2 {
                    assert!(tf.g_x.eval(&root).is_zero());
                }
            }
        }
    }

    #[test]
    fn ellp_p1_oracles() {
        let cfg = EngineConfig::default();
        let ec = ellp_and_conjecture(1, &cfg, None).unwrap();
        assert_eq!(ec.a_p, Some(q(-512, 175)));
        assert!(!ec.ambiguous);
        let ell = ec.ell.unwrap();
        assert_eq!(ell.degree(), Some(3));
        assert_eq!(ec.roots_match, Some(true));
        let mut expected = ec.expected_roots.clone();
        expected.sort();
        assert_eq!(expected, vec![q(1, 16), q(9, 16), qi(1)]);
        // spectrum points
        let rp = rp_interpolated(1).unwrap();
        let spec = spectrum_sets(1, &ell, &rp).unwrap();
        assert_eq!(spec.isolated.len(), 3);
        assert_eq!(spec.count_type_h3, 1);
        assert_eq!(spec.count_type_sigma, 2);
        assert_eq!(spec.isolated[2].0, qi(1));
        assert_eq!(spec.isolated[2].1, rp.eval(&qi(1)));
    }

    #[test]
    fn rp_crosscheck_p1() {
        let cfg = EngineConfig::default();
        let cc = rp_crosscheck_residue(1, &cfg, None).unwrap();
        assert_eq!(cc.sign, Some(-1));
        let quot = cc.quotient.unwrap();
        assert_eq!(quot.degree(), Some(2));
        // consistency with the square relation: −quotient = f_untw
        let (f_untw, _) = untwisted_square_relation(1).unwrap();
        assert_eq!(quot.neg(), f_untw);
    }

    #[test]
    fn rp_crosscheck_p2() {
        let cfg = EngineConfig::default();
        let cc = rp_crosscheck_residue(2, &cfg, None).unwrap();
        // the sign is the same global −1 seen at p = 1
        assert_eq!(cc.sign, Some(-1));
        assert_eq!(cc.quotient.unwrap().degree(), Some(5));
    }

    #[test]
    fn square_relation_bounds() {
        for p in 1..=3u32 {
            let (f_untw, g_untw) = untwisted_square_relation(p).unwrap();
            assert!(f_untw.degree().unwrap() <= 3 * p as usize - 1);
            assert!(g_untw.degree().unwrap() <= 6 * p as usize - 2);
            // g_untw(root of f_p) = 0
            let (fp, _) = singlet_fp(p).unwrap();
            let _ = fp;
            assert!(g_untw.eval(&h_int(p, 1, 1)).is_zero());
        }
    }

    #[test]
    fn gp_interpolant_examples() {
        let g = gp_interpolant(1, 2).unwrap();
        assert_eq!(g.eval(&qi(1)), qi(-2));
        assert_eq!(g.eval(&q(9, 16)), q(15, 64));
        for (p, m) in [(1u32, 2u32), (2, 2), (2, 3), (3, 4)] {
            let g = gp_interpolant(p, m).unwrap();
            assert!(g.degree().unwrap_or(0) <= 3 * p as usize - 1);
        }
    }

    #[test]
    fn constants() {
        assert_eq!(bp_constant(1), q(2, 3));
        assert_eq!(cp_constant(1), qi(4));
        assert_eq!(cp_constant(2), Q::new(num::BigInt::from(512), num::BigInt::from(36)));
        assert_eq!(p_poly(1).degree(), Some(1));
        assert_eq!(p_poly(3).degree(), Some(5));
    }
}
