//! Identity checks on characters, each returning an exact verdict together
//! with a first-difference witness when an identity fails.

use crate::basis::{eta_inv, theta};
use crate::characters::{
    coset_character, fock_character, lambda0_pm_characters, m1_split_characters,
    virasoro_plus_sum,
};
use crate::series::QSeries;
use exact_core::rational::{q, q_to_string, qi, Q};
use serde_json::{json, Value};

fn witness(label: &str, a: &QSeries, b: &QSeries, order: &Q) -> Value {
    match a.first_difference(b, order) {
        None => Value::Null,
        Some((e, ca, cb)) => json!({
            "identity": label,
            "exponent": q_to_string(&e),
            "lhs": q_to_string(&ca),
            "rhs": q_to_string(&cb),
        }),
    }
}

/// Verdict on the theta splitting identity
/// `Θ_{2i,4p} + Θ_{4p-2i,4p} = Θ_{i,p} = Σ_{n=0}^{m-1} Θ_{2pmn+im, pm²}`
/// (odd `m`), checked term by term below `order`.
#[derive(Clone, Debug)]
pub struct ThetaIdentityCheck {
    /// `Θ_{2i,4p} + Θ_{4p-2i,4p} = Θ_{i,p}`.
    pub split_holds: bool,
    /// `Θ_{i,p} = Σ_n Θ_{2pmn+im, pm²}`.
    pub refinement_holds: bool,
    /// First differing term, if any check failed.
    pub witness: Value,
}

/// Checks the theta splitting identity for odd `m`.
pub fn theta_identity_check(p: u32, m: u32, i: i64, order: i64) -> ThetaIdentityCheck {
    assert!(m % 2 == 1, "identity requires odd m");
    let (pi, mi) = (p as i64, m as i64);
    let ord = qi(order);
    let lhs = theta(2 * i, 4 * pi, order).add(&theta(4 * pi - 2 * i, 4 * pi, order));
    let mid = theta(i, pi, order);
    let mut rhs = QSeries::zero(ord.clone());
    for n in 0..mi {
        rhs = rhs.add(&theta(2 * pi * mi * n + i * mi, pi * mi * mi, order));
    }
    let split_holds = lhs.eq_to_order(&mid, &ord);
    let refinement_holds = mid.eq_to_order(&rhs, &ord);
    let witness = if !split_holds {
        witness("theta-split", &lhs, &mid, &ord)
    } else if !refinement_holds {
        witness("theta-refinement", &mid, &rhs, &ord)
    } else {
        Value::Null
    };
    ThetaIdentityCheck { split_holds, refinement_holds, witness }
}

/// Verdicts on the consistency claims tying `Λ(i)₀^±` to the Virasoro sum,
/// the coset sum, and the theta difference, all below `order`.
#[derive(Clone, Debug)]
pub struct CharacterChecks {
    /// The multiplicity-weighted Virasoro sum equals `ch Λ(i)₀⁺`.
    pub virasoro_matches_plus: bool,
    /// `ch Λ(i)₀⁺ + ch Λ(i)₀⁻` equals the full coset sum
    /// `Σ_n q^{p((i-1)/2p + mn - c*)²}/η`. Holds for `i = p`; for `i < p` the
    /// pair spans a proper subquotient and the identity genuinely fails.
    pub sum_matches_coset: bool,
    /// `ch Λ(i)₀⁺ - ch Λ(i)₀⁻ = (Θ_{2(p-i),4p} - Θ_{2(p+i),4p})/η`.
    pub difference_matches_theta: bool,
    /// First differing term of the Virasoro-sum identity, if it failed.
    pub virasoro_witness: Value,
    /// First differing term of the coset partition, if it failed.
    pub coset_witness: Value,
    /// First differing term of the theta difference, if it failed.
    pub difference_witness: Value,
}

/// Runs the three `Λ(i)₀^±` consistency checks.
pub fn character_checks(p: u32, m: u32, i: u32, order: i64) -> CharacterChecks {
    let (pi, ii) = (p as i64, i as i64);
    let margin = qi(order - 2);
    let (plus, minus) = lambda0_pm_characters(p, m, i, order);
    let vir = virasoro_plus_sum(p, m, i, order);
    let coset = coset_character(p, m as i64, &q(ii - 1, 2 * pi), order);
    let eta = eta_inv(order);
    let tdiff = theta(2 * (pi - ii), 4 * pi, order)
        .sub(&theta(2 * (pi + ii), 4 * pi, order))
        .mul(&eta)
        .truncated(&qi(order));
    let sum = plus.add(&minus);
    let diff = plus.sub(&minus);
    let virasoro_matches_plus = vir.eq_to_order(&plus, &margin);
    let sum_matches_coset = sum.eq_to_order(&coset, &margin);
    let difference_matches_theta = diff.eq_to_order(&tdiff, &margin);
    let verdict = |ok: bool, label: &str, a: &QSeries, b: &QSeries| {
        if ok {
            Value::Null
        } else {
            witness(label, a, b, &margin)
        }
    };
    CharacterChecks {
        virasoro_matches_plus,
        sum_matches_coset,
        difference_matches_theta,
        virasoro_witness: verdict(virasoro_matches_plus, "virasoro-sum", &vir, &plus),
        coset_witness: verdict(sum_matches_coset, "coset-partition", &sum, &coset),
        difference_witness: verdict(difference_matches_theta, "theta-difference", &diff, &tdiff),
    }
}

/// Checks that the `±` Fock eigenspace characters sum back to the full Fock
/// character below `order`.
pub fn fock_split_check(p: u32, order: i64) -> (bool, Value) {
    let (plus, minus) = m1_split_characters(p, order);
    let total = plus.add(&minus);
    let fock = fock_character(p, order);
    let ord = qi(order);
    let ok = total.eq_to_order(&fock, &ord);
    let w = if ok { Value::Null } else { witness("fock-split", &total, &fock, &ord) };
    (ok, w)
}
