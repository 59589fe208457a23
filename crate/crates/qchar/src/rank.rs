//! Exact linear-algebra over truncated series: the rank of a family of
//! (possibly τ-carrying) series, the modular-closure spanning family, and the
//! dimension counts for the order-four orbifold's irreducible characters.

use crate::basis::{dtheta, eta_inv, theta};
use crate::characters::{coset_character, lambda0_pm_characters};
use crate::series::TauQSeries;
use exact_core::rational::{q, qi, Q};
use num::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// Rank of the family over ℚ, treating each distinct `(component, exponent)`
/// pair with exponent `< order` as an independent coordinate (`component` 0
/// is the τ-free part, 1 the τ part). Exact Gaussian elimination.
pub fn rank_of(rows: &[TauQSeries], order: &Q) -> usize {
    let mut maps: Vec<BTreeMap<(u8, Q), Q>> = Vec::with_capacity(rows.len());
    let mut cols: BTreeSet<(u8, Q)> = BTreeSet::new();
    for row in rows {
        let mut m = BTreeMap::new();
        for (tag, part) in [(0u8, &row.base), (1, &row.tau_part)] {
            assert!(part.order() >= order, "row validity below rank order");
            for (e, c) in part.truncated(order).iter() {
                cols.insert((tag, e.clone()));
                m.insert((tag, e), c.clone());
            }
        }
        maps.push(m);
    }
    let cols: Vec<(u8, Q)> = cols.into_iter().collect();
    let mut matrix: Vec<Vec<Q>> = maps
        .iter()
        .map(|m| cols.iter().map(|c| m.get(c).cloned().unwrap_or_else(Q::zero)).collect())
        .collect();
    let (nr, nc) = (matrix.len(), cols.len());
    let mut rank = 0usize;
    for c in 0..nc {
        let Some(piv) = (rank..nr).find(|&r| !matrix[r][c].is_zero()) else {
            continue;
        };
        matrix.swap(rank, piv);
        let pv = matrix[rank][c].clone();
        for r in 0..nr {
            if r != rank && !matrix[r][c].is_zero() {
                let f = &matrix[r][c] / &pv;
                for cc in c..nc {
                    let delta = &f * &matrix[rank][cc];
                    matrix[r][cc] -= delta;
                }
            }
        }
        rank += 1;
        if rank == nr {
            break;
        }
    }
    rank
}

/// The spanning family whose rank measures the modular closure of the
/// order-`2m` orbifold characters:
/// `{Θ_{i,pm²}/η} ∪ {Θ_{i,4p}/η} ∪ {∂Θ_{i,p}/η} ∪ {τ ∂Θ_{i,p}/η}`.
pub fn closure_family(p: u32, m: u32, order: i64) -> Vec<TauQSeries> {
    let (pi, mi) = (p as i64, m as i64);
    let eta = eta_inv(order);
    let ord = qi(order);
    let mut rows = Vec::new();
    for i in 0..=pi * mi * mi {
        rows.push(TauQSeries::plain(theta(i, pi * mi * mi, order + 1).mul(&eta).truncated(&ord)));
    }
    for i in 0..=4 * pi {
        rows.push(TauQSeries::plain(theta(i, 4 * pi, order + 1).mul(&eta).truncated(&ord)));
    }
    for i in 1..pi {
        rows.push(TauQSeries::plain(dtheta(i, pi, order + 1).mul(&eta).truncated(&ord)));
    }
    for i in 1..pi {
        rows.push(TauQSeries::tau(dtheta(i, pi, order + 1).mul(&eta).truncated(&ord)));
    }
    rows
}

/// Rank of the modular-closure family, with a stability flag: the rank is
/// recomputed from series truncated `10` orders deeper and must agree.
pub fn modular_closure_rank(p: u32, m: u32, order: i64) -> (usize, bool) {
    let r1 = rank_of(&closure_family(p, m, order), &qi(order));
    let r2 = rank_of(&closure_family(p, m, order + 10), &qi(order + 10));
    (r1, r1 == r2)
}

/// Expected closure rank: `6p-1` for `m = 1`, `(m²+2)p-1` for even `m`,
/// `(m²+5)p-1` for odd `m ≥ 3`.
pub fn expected_closure_rank(p: u32, m: u32) -> usize {
    let (p, m) = (p as usize, m as usize);
    if m == 1 {
        6 * p - 1
    } else if m % 2 == 0 {
        (m * m + 2) * p - 1
    } else {
        (m * m + 5) * p - 1
    }
}

/// For the order-four (`m = 2`) orbifold: the dimension of the span of the
/// irreducible-module characters `{Λ(i)₀^±, Π(i)⁺, R(j)}` and the dimension
/// after adjoining the theta-family closure rows; expected `(5p, 6p-1)`.
pub fn d2_span_dims(p: u32, order: i64) -> (usize, usize) {
    let pi = p as i64;
    let ord = qi(order);
    let mut rows = Vec::new();
    for i in 1..=p {
        let (plus, minus) = lambda0_pm_characters(p, 2, i, order);
        rows.push(TauQSeries::plain(plus));
        rows.push(TauQSeries::plain(minus));
    }
    for i in 1..=pi {
        let off = q(pi + i - 1, 2 * pi) + qi(1);
        rows.push(TauQSeries::plain(
            coset_character(p, 2, &off, order).scale(&q(1, 2)),
        ));
    }
    for j in 1..=2 * pi {
        let off = q(3 * pi - j, 2 * pi) - q(1, 4 * pi);
        rows.push(TauQSeries::plain(coset_character(p, 2, &off, order)));
    }
    let irreducible_span = rank_of(&rows, &ord);
    let eta = eta_inv(order);
    for i in 0..=4 * pi {
        rows.push(TauQSeries::plain(theta(i, 4 * pi, order + 1).mul(&eta).truncated(&ord)));
    }
    for i in 1..pi {
        rows.push(TauQSeries::plain(dtheta(i, pi, order + 1).mul(&eta).truncated(&ord)));
    }
    for i in 1..pi {
        rows.push(TauQSeries::tau(dtheta(i, pi, order + 1).mul(&eta).truncated(&ord)));
    }
    let closure_span = rank_of(&rows, &ord);
    (irreducible_span, closure_span)
}
