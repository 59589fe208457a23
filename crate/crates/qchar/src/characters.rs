//! Orbifold module characters: coset-shaped sums over shifted lattices, the
//! `Λ(i)₀^±` pair, the infinite Virasoro multiplicity sum, and the rank-one
//! Fock-space splitting.

use crate::basis::{chl_with, eta_inv, prod_inv};
use crate::series::QSeries;
use exact_core::rational::{q, qi, Q};
use num::{BigInt, One, ToPrimitive};

/// `(p-1)/2p`, the lattice point whose square gives the minimal conformal
/// weight shift at central charge `c_{p,1}`.
pub fn c_star(p: u32) -> Q {
    q(p as i64 - 1, 2 * p as i64)
}

/// `Σ_{n∈ℤ} q^{p(offset + step·n - (p-1)/2p)²} / η`, exact below `order`.
pub fn coset_character(p: u32, step: i64, offset: &Q, order: i64) -> QSeries {
    assert!(step != 0);
    let ord = qi(order);
    let raw_ord = qi(order + 1);
    let cs = c_star(p);
    let pp = qi(p as i64);
    let st = qi(step);
    let mut raw = QSeries::zero(raw_ord);
    // exponent p(offset + step·n - c*)², vertex at n = (c* - offset)/step
    let vertex = (&cs - offset) / &st;
    let m0 = vertex.floor().numer().to_i64().expect("vertex fits i64");
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { m0 } else { m0 - 1 };
        loop {
            let x = offset + &st * Q::from_integer(BigInt::from(n)) - &cs;
            let e = &pp * (&x * &x);
            if e >= qi(order + 1) {
                let nq = Q::from_integer(BigInt::from(n));
                if (dir == 1 && nq > vertex) || (dir == -1 && nq < vertex) {
                    break;
                }
            } else {
                raw.add_term(&e, Q::one());
            }
            n += dir;
        }
    }
    raw.mul(&eta_inv(order)).truncated(&ord)
}

/// The character pair `(ch Λ(i)₀⁺, ch Λ(i)₀⁻)` for the order-`2m` orbifold,
/// each exact below `order`. Both share the doubly-infinite weighted lattice
/// sum `W` and tail `T`; they differ in the even- versus odd-indexed
/// difference block.
pub fn lambda0_pm_characters(p: u32, m: u32, i: u32, order: i64) -> (QSeries, QSeries) {
    assert!(m >= 1 && i >= 1 && i <= p);
    let (p, m, i) = (p as i64, m as i64, i as i64);
    let raw_ord = qi(order + 1);
    let beta = q(p - i, 2 * p);
    let betap = q(p + i, 2 * p);
    let pp = qi(p);

    let exp_at = |x: &Q| -> Q { &pp * (x * x) };

    // W = Σ_{n≠0} n Σ_{k=0}^{m-1} q^{p(mn+k+β)²}
    let mut w = QSeries::zero(raw_ord.clone());
    for k in 0..m {
        let shift = qi(k) + &beta;
        for dir in [1i64, -1] {
            let mut n = dir;
            loop {
                let x = qi(m * n) + &shift;
                let e = exp_at(&x);
                if e >= qi(order + 1) {
                    // vertex sits in n ∈ (-2, 1) for all k, β; both
                    // directions are monotone past the first step
                    if n.abs() > 2 {
                        break;
                    }
                } else {
                    w.add_term(&e, qi(n));
                }
                n += dir;
            }
        }
    }

    // T = Σ_{n≥1} q^{p(n-β)²}
    let mut t = QSeries::zero(raw_ord.clone());
    let mut n = 1i64;
    loop {
        let x = qi(n) - &beta;
        let e = exp_at(&x);
        if e >= qi(order + 1) {
            break;
        }
        t.add_term(&e, Q::one());
        n += 1;
    }

    // D_even / D_odd = Σ_{n≥0} (q^{p(a+β)²} - q^{p(a+β')²}), a = 2n resp. 2n+1
    let mut d_even = QSeries::zero(raw_ord.clone());
    let mut d_odd = QSeries::zero(raw_ord.clone());
    for (target, parity) in [(&mut d_even, 0i64), (&mut d_odd, 1)] {
        let mut n = 0i64;
        loop {
            let a = qi(2 * n + parity);
            let e1 = exp_at(&(&a + &beta));
            let e2 = exp_at(&(&a + &betap));
            if e1 >= qi(order + 1) && e2 >= qi(order + 1) {
                break;
            }
            target.add_term(&e1, Q::one());
            target.add_term(&e2, -Q::one());
            n += 1;
        }
    }

    let eta = eta_inv(order);
    let ord = qi(order);
    let plus = w.add(&t).add(&d_even).mul(&eta).truncated(&ord);
    let minus = w.add(&t).add(&d_odd).mul(&eta).truncated(&ord);
    (plus, minus)
}

/// `Σ_{n≥1} n Σ_{k=0}^{m-1} chL(i, 2(nm+k)+1) + Σ_{k≥0} chL(i, 4k+1)` —
/// the multiplicity-weighted sum of irreducible Virasoro characters claimed
/// to decompose `Λ(i)₀⁺`; exact below `order`.
pub fn virasoro_plus_sum(p: u32, m: u32, i: u32, order: i64) -> QSeries {
    assert!(m >= 1 && i >= 1 && i <= p);
    let eta = eta_inv(order);
    let (pi, mi, ii) = (p as i64, m as i64, i as i64);
    let mut r = QSeries::zero(qi(order));
    let lead = |s: i64| q((s * pi - ii) * (s * pi - ii), 4 * pi) - q(1, 24);
    let mut n = 1i64;
    loop {
        // smallest s in this block is 2nm+1, so its chL leads the block
        if lead(2 * n * mi + 1) >= qi(order) && n > 2 {
            break;
        }
        for k in 0..mi {
            let s = 2 * (n * mi + k) + 1;
            r = r.add(&chl_with(&eta, p, ii, s).scale(&qi(n)));
        }
        n += 1;
    }
    let mut k = 0i64;
    loop {
        let s = 4 * k + 1;
        if lead(s) >= qi(order) && k > 2 {
            break;
        }
        r = r.add(&chl_with(&eta, p, ii, s));
        k += 1;
    }
    r.truncated(&qi(order))
}

/// Characters of the `±1`-eigenspaces of the rank-one Fock space under the
/// sign involution: `½(∏(1-qⁿ)^{-1} ± ∏(1+qⁿ)^{-1})·q^{(p-1)²/4p - 1/24}`.
pub fn m1_split_characters(p: u32, order: i64) -> (QSeries, QSeries) {
    let pi = p as i64;
    let delta = q((pi - 1) * (pi - 1), 4 * pi) - q(1, 24);
    let inner = order - delta.floor().numer().to_i64().unwrap() + 2;
    let parts = prod_inv(1, inner);
    let alt = prod_inv(-1, inner);
    let half = q(1, 2);
    let ord = qi(order);
    let plus = parts.add(&alt).scale(&half).shifted(&delta).truncated(&ord);
    let minus = parts.sub(&alt).scale(&half).shifted(&delta).truncated(&ord);
    (plus, minus)
}

/// The full rank-one Fock character `q^{(p-1)²/4p} / η`, exact below `order`.
pub fn fock_character(p: u32, order: i64) -> QSeries {
    let pi = p as i64;
    eta_inv(order)
        .shifted(&q((pi - 1) * (pi - 1), 4 * pi))
        .truncated(&qi(order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_leading_exponent() {
        // offset (i-1)/2p with i = p gives the vacuum-type coset: the n = 0
        // term contributes q^{p(c* - (p-1)/2p)²} = q⁰ against 1/η.
        let s = coset_character(2, 1, &q(1, 4), 30);
        assert_eq!(s.min_exp().unwrap(), q(-1, 24));
    }

    #[test]
    fn coset_reflection_symmetry() {
        // reflecting offset about c* reindexes n ↦ -n, leaving the sum fixed
        for p in [1u32, 2, 3] {
            let cs = c_star(p);
            for num in -3i64..=3 {
                let off = q(num, 2 * p as i64);
                let refl = &cs + (&cs - &off);
                let a = coset_character(p, 2, &off, 25);
                let b = coset_character(p, 2, &refl, 25);
                assert!(a.eq_to_order(&b, &qi(25)));
            }
        }
    }

    #[test]
    fn fock_split_sums_to_fock() {
        for p in [1u32, 2, 3] {
            let (plus, minus) = m1_split_characters(p, 30);
            let total = plus.add(&minus);
            assert!(total.eq_to_order(&fock_character(p, 30), &qi(30)));
        }
    }

    #[test]
    fn lambda_characters_have_nonnegative_integer_coefficients() {
        use num::Signed;
        for (p, m) in [(1u32, 1u32), (1, 2), (2, 2), (2, 3)] {
            for i in 1..=p {
                let (plus, minus) = lambda0_pm_characters(p, m, i, 25);
                for ch in [plus, minus] {
                    for (e, c) in ch.iter() {
                        assert!(c.is_integer() && !c.is_negative(), "coeff {} at {}", c, e);
                    }
                }
            }
        }
    }
}
