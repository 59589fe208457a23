//! The acceptance gate: thirteen exact criteria covering the whole toolkit,
//! printed one line each (run with `--nocapture` to see them).
//!
//! Every comparison is exact (tolerance zero) up to the stated scalar/sign
//! freedoms. All residue computations share one disk cache so expensive
//! polynomials are computed once across criteria.

use exact_core::poly::{UniPoly, Var};
use exact_core::rational::{q, qi, Q};
use num::{One, Zero};
use residue_engine::cache::DiskCache;
use residue_engine::specs::{twisted_order, twisted_spec, TwistedKind};
use residue_engine::{residue_single, EngineConfig};
use std::time::Instant;
use wverify::output::{render_reports, zero_wall_times, Format};
use wverify::suites::{self, Suite};
use wverify::RunConfig;

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn check(&mut self, n: u32, label: &str, f: impl FnOnce() -> Result<String, String>) {
        let t = Instant::now();
        match f() {
            Ok(detail) => println!(
                "criterion {:2}: pass — {} ({}; {} ms)",
                n,
                label,
                detail,
                t.elapsed().as_millis()
            ),
            Err(why) => {
                println!("criterion {:2}: FAIL — {} ({})", n, label, why);
                self.failures.push(format!("criterion {}: {}", n, why));
            }
        }
    }
}

fn ensure(cond: bool, msg: impl Fn() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn acceptance_criteria() {
    let cache_dir = tempfile::tempdir().unwrap();
    let cache = DiskCache::new(cache_dir.path()).unwrap();
    let engine = EngineConfig::default();
    let mut gate = Gate { failures: Vec::new() };

    // 1. Twisted table reproduction for p = 2..5.
    gate.check(1, "twisted table reproduction p=2..5", || {
        let cfg = RunConfig {
            p_range: (2, 5),
            cache_dir: Some(cache_dir.path().to_path_buf()),
            ..RunConfig::default()
        };
        let reports = suites::run_suites(&cfg, &[Suite::Twisted])?;
        ensure(reports.len() == 12, || format!("expected 12 reports, got {}", reports.len()))?;
        for r in &reports {
            ensure(r.status == wverify::ClaimStatus::Pass, || {
                format!("{} is {:?}", r.claim_id, r.status)
            })?;
        }
        Ok("12/12 claims pass (divisibility, coprimality, table scalar match)".into())
    });

    // 2. Extended coprimality gcd(f1, g1) = 1 for p <= 8.
    gate.check(2, "coprimality gcd(f1,g1)=1 for p=2..8", || {
        for p in 2..=8 {
            let tf = zhu_lab::twisted_factorize(p, &engine, Some(&cache))
                .map_err(|e| e.to_string())?;
            ensure(tf.coprime == Some(true), || format!("p={} coprime={:?}", p, tf.coprime))?;
        }
        Ok("7/7 quotient pairs coprime".into())
    });

    // 3. Printed r_1, r_2 reproduced up to one shared global sign.
    gate.check(3, "printed r_p examples up to one global sign", || {
        let mut signs = Vec::new();
        for p in [1u32, 2] {
            let interp = zhu_lab::rp_interpolated(p).map_err(|e| e.to_string())?;
            let printed = zhu_lab::reference_rp(p).expect("printed value exists");
            let sign = if interp == printed {
                1i8
            } else if interp.neg() == printed {
                -1
            } else {
                return Err(format!("r_{} differs by more than a sign", p));
            };
            signs.push(sign);
        }
        ensure(signs[0] == signs[1], || format!("signs differ: {:?}", signs))?;
        Ok(format!("shared sign {}", signs[0]))
    });

    // 4 & 6 share the conjecture bundle; compute it once per p.
    let mut bundles = Vec::new();
    gate.check(4, "constant-term conjecture for p=1,2", || {
        for p in [1u32, 2] {
            let ec = zhu_lab::ellp_and_conjecture(p, &engine, Some(&cache))
                .map_err(|e| e.to_string())?;
            match (&ec.a_p, ec.ambiguous) {
                (Some(a), false) if !a.is_zero() => {}
                other => return Err(format!("p={} proportionality {:?}", p, other)),
            }
            bundles.push((p, ec));
        }
        let a1 = bundles[0].1.a_p.clone().unwrap();
        ensure(a1 == q(-512, 175), || format!("A_1 = {}", a1))?;
        Ok(format!(
            "A_1 = {}, A_2 = {}",
            bundles[0].1.a_p.clone().unwrap(),
            bundles[1].1.a_p.clone().unwrap()
        ))
    });

    // 5. Residue cross-check of r_p at p = 1.
    gate.check(5, "residue cross-check of r_1", || {
        let cc = zhu_lab::rp_crosscheck_residue(1, &engine, Some(&cache))
            .map_err(|e| e.to_string())?;
        match cc.sign {
            Some(sign) => Ok(format!("routes agree with sign {}", sign)),
            None => Err("routes disagree beyond a sign".into()),
        }
    });

    // 6. ell_p root sets for p = 1, 2.
    gate.check(6, "ell_p factorization root sets p=1,2", || {
        ensure(bundles.len() == 2, || "criterion 4 did not complete".into())?;
        for (p, ec) in &bundles {
            ensure(ec.roots_match == Some(true), || {
                format!("p={} roots_match={:?}", p, ec.roots_match)
            })?;
            let ell = ec.ell.as_ref().map_err(|_| format!("p={} division failed", p))?;
            ensure(ell.degree() == Some(3 * *p as usize), || {
                format!("p={} deg {:?}", p, ell.degree())
            })?;
        }
        Ok("root multisets match {h_(i,1)} ∪ {h_(3p+1/2-j,1)} exactly".into())
    });

    // 7. Factorial determinant identity over the full grid.
    gate.check(7, "factorial determinant identity", || {
        for n in 1..=6 {
            for k in 1..=6 {
                for big_p in 0..=5 {
                    let (det, closed, equal) = spectra::factorial_det_identity(n, k, big_p);
                    ensure(equal, || {
                        format!("n={} k={} P={}: {} vs {}", n, k, big_p, det, closed)
                    })?;
                }
            }
        }
        Ok("216/216 cases, (i-1)! index reading".into())
    });

    // 8. Weight tables: distinctness, row counts, D_2 verbatim match.
    gate.check(8, "weight tables p<=5, m<=5", || {
        for p in 1..=5u32 {
            for m in 2..=5u32 {
                let table = spectra::weight_table(p, m).map_err(|e| e.to_string())?;
                let counts = spectra::distinctness_and_counts(&table);
                ensure(counts.passes(), || {
                    format!("p={} m={}: {} rows, {} dupes", p, m, counts.rows, counts.duplicates.len())
                })?;
                ensure(
                    counts.expected_rows == ((m * m + 7) * p) as usize,
                    || format!("p={} m={} expected_rows {}", p, m, counts.expected_rows),
                )?;
                if m == 2 {
                    ensure(
                        counts.d2_counts == Some((11 * p as usize, 12 * p as usize - 1)),
                        || format!("p={} d2 counts {:?}", p, counts.d2_counts),
                    )?;
                }
            }
            ensure(
                spectra::d2_verbatim_check(p).map_err(|e| e.to_string())?,
                || format!("p={} m=2 table is not the printed one", p),
            )?;
        }
        Ok("(m²+7)p distinct triples; m=2 tables verbatim; counts 11p, 12p-1".into())
    });

    // 9. Generator conformal weights.
    gate.check(9, "generator weights p<=10, m<=6", || {
        for p in 1..=10 {
            for m in 1..=6 {
                let ((a, b, c), ok) = spectra::generator_weights(p, m);
                ensure(ok, || format!("p={} m={}: got ({}, {}, {})", p, m, a, b, c))?;
            }
        }
        Ok("(2, 6p-2, m²p+m(p-1)) reproduced on the full grid".into())
    });

    // 10. Theta splitting identity at order 40.
    gate.check(10, "theta identity p=1..3, odd m<=5, order 40", || {
        for p in [1u32, 2, 3] {
            for m in [1u32, 3, 5] {
                for i in 0..=2 * p as i64 {
                    let chk = qchar::theta_identity_check(p, m, i, 40);
                    ensure(chk.split_holds && chk.refinement_holds, || {
                        format!("p={} m={} i={}: {}", p, m, i, chk.witness)
                    })?;
                }
            }
        }
        Ok("all splittings and refinements exact".into())
    });

    // 11. Character consistency to order 50.
    gate.check(11, "character consistency p=1..2, m=1..3, order 50", || {
        for p in [1u32, 2] {
            for m in [1u32, 2, 3] {
                for i in 1..=p {
                    // character_checks compares at order − 2
                    let chk = qchar::character_checks(p, m, i, 52);
                    ensure(chk.virasoro_matches_plus, || {
                        format!("p={} m={} i={} virasoro: {}", p, m, i, chk.virasoro_witness)
                    })?;
                    ensure(chk.difference_matches_theta, || {
                        format!("p={} m={} i={} theta diff: {}", p, m, i, chk.difference_witness)
                    })?;
                    // the coset partition is a character identity at i = p
                    // (for i < p the pair spans a proper subquotient)
                    if i == p {
                        ensure(chk.sum_matches_coset, || {
                            format!("p={} m={} i={} coset: {}", p, m, i, chk.coset_witness)
                        })?;
                    }
                }
            }
            let (ok, w) = qchar::fock_split_check(p, 50);
            ensure(ok, || format!("p={} Fock split: {}", p, w))?;
        }
        Ok("Virasoro sums, theta differences, i=p coset partitions, Fock splits".into())
    });

    // 12. Modular closure ranks and D_2 span dimensions.
    gate.check(12, "modular closure ranks and d2 spans", || {
        for p in [1u32, 2] {
            for m in [1u32, 2, 3, 4] {
                let (rank, stable) = qchar::modular_closure_rank(p, m, 30);
                let expected = qchar::expected_closure_rank(p, m);
                ensure(stable, || format!("p={} m={} rank unstable", p, m))?;
                ensure(rank == expected, || {
                    format!("p={} m={}: rank {} expected {}", p, m, rank, expected)
                })?;
            }
            let dims = qchar::d2_span_dims(p, 30);
            let expected = (5 * p as usize, 6 * p as usize - 1);
            ensure(dims == expected, || format!("p={}: dims {:?} expected {:?}", p, dims, expected))?;
        }
        Ok("ranks (m²+2)p-1 / (m²+5)p-1 / 6p-1; spans (5p, 6p-1)".into())
    });

    // 13. Engine soundness.
    gate.check(13, "engine soundness (stability, pruning, determinism, round-trip)", || {
        // truncation stability: order vs order + 4
        for p in [1u32, 2] {
            for kind in [TwistedKind::F, TwistedKind::G] {
                let spec = twisted_spec(p, kind, false);
                let a = residue_single(&spec, twisted_order(p), true, &engine)
                    .map_err(|e| e.to_string())?;
                let b = residue_single(&spec, twisted_order(p) + 4, true, &engine)
                    .map_err(|e| e.to_string())?;
                ensure(a == b, || format!("p={} unstable under +4", p))?;
            }
        }
        // prune-soundness at p = 1
        for kind in [TwistedKind::F, TwistedKind::G] {
            for swap in [false, true] {
                let spec = twisted_spec(1, kind, swap);
                let pruned = residue_single(&spec, twisted_order(1), true, &engine)
                    .map_err(|e| e.to_string())?;
                let full = residue_single(&spec, twisted_order(1), false, &engine)
                    .map_err(|e| e.to_string())?;
                ensure(pruned == full, || "pruning changed a residue".into())?;
            }
        }
        // determinism: 1 vs 8 workers, cold caches, byte-identical reports
        let mut renders = Vec::new();
        for jobs in [1usize, 8] {
            let dir = tempfile::tempdir().unwrap();
            let cfg = RunConfig {
                p_range: (2, 3),
                jobs,
                cache_dir: Some(dir.path().to_path_buf()),
                ..RunConfig::default()
            };
            let reports = suites::run_suites(&cfg, &[Suite::Twisted])?;
            renders.push(render_reports(&zero_wall_times(&reports), Format::Json));
        }
        ensure(renders[0] == renders[1], || "worker count changed the report bytes".into())?;
        // to_x_poly round-trip on symmetric polynomials
        for p in [1u32, 2, 3] {
            for coeffs in [vec![qi(3)], vec![qi(1), qi(-2)], vec![q(1, 7), qi(0), qi(5), q(-3, 2)]] {
                let fx = UniPoly::new(Var::X, coeffs);
                let back = fx.subst_x_of_t(p).to_x_poly(p).map_err(|e| e.to_string())?;
                ensure(back == fx, || format!("round-trip failed at p={}", p))?;
            }
        }
        let _one: Q = Q::one();
        Ok("stability, pruning, 1-vs-8-worker determinism, round-trips all exact".into())
    });

    assert!(
        gate.failures.is_empty(),
        "acceptance failures:\n{}",
        gate.failures.join("\n")
    );
}
