//! Randomized checks of the combinatorial identities.

use exact_core::rational::Q;
use num::{BigInt, Zero};
use proptest::prelude::*;
use spectra::{exp_poly_coeff_scan, factorial_det_identity};

fn arb_q_nonzero_first() -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((-9i64..=9, 1i64..=4), 1..=5).prop_map(|raw| {
        let mut coeffs: Vec<Q> = raw
            .into_iter()
            .map(|(n, d)| Q::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        if coeffs[0].is_zero() {
            coeffs[0] = Q::new(BigInt::from(1), BigInt::from(1));
        }
        coeffs
    })
}

proptest! {
    #[test]
    fn exp_scan_never_all_vanish(
        coeffs in arb_q_nonzero_first(),
        n in 1u64..=8,
        k in 1u64..=8,
    ) {
        prop_assert!(exp_poly_coeff_scan(&coeffs, n, k).is_ok());
    }

    #[test]
    fn determinant_closed_form_holds(n in 1u64..=6, k in 1u64..=6, p in 0u64..=5) {
        let (_, _, equal) = factorial_det_identity(n, k, p);
        prop_assert!(equal);
    }
}
