//! Acceptance criteria, one line per criterion. Exit status is non-zero if
//! any criterion fails or exceeds its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use finite_analogues::analytic::{bla101_partial, gamma_ref, mascheroni_partial};
use finite_analogues::arith::sieve_primes;
use finite_analogues::dobinski::{bell, check_truncation_identity, coeff_family, g_seq, numeric_identity_check, verify_dobinski};
use finite_analogues::euler::{
    ell_a, l1, verify_binom_cong, verify_eisenstein, verify_interlude, verify_kluyver, verify_log_additivity,
    verify_mascheroni, verify_mascheroni_at_minus_one,
};
use finite_analogues::gregory::{
    check_binom_recurrence, check_integral_characterization, check_log_inverse_identity, check_shift_identity,
    gregory_explicit, gregory_polynomial,
};
use finite_analogues::search::search;
use finite_analogues::series::check_euler_operator_ode;
use finite_analogues::stirling::{stirling1_row_mod, stirling_rows};
use finite_analogues::{Integer, PrimeCtx, PrimeWindow, Rational, RationalPolynomial, SearchTarget, VerificationReport};

type Outcome = Result<String, String>;

fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// All records pass and at least one prime was checked.
fn complete(rep: &VerificationReport) -> Result<usize, String> {
    if let Some(c) = rep.failures().next() {
        return Err(format!("{}: p={} index={:?} lhs={} rhs={}", rep.summary(), c.prime, c.index, c.lhs, c.rhs));
    }
    ensure(!rep.records.is_empty(), || format!("{}: nothing checked", rep.summary()))?;
    Ok(rep.records.len())
}

fn poly(coeffs: &[(i64, i64)]) -> RationalPolynomial {
    RationalPolynomial::new(coeffs.iter().map(|&(n, d)| q(n, d)).collect())
}

fn ac1_tables() -> Outcome {
    let ints = |v: Vec<Integer>| v.iter().map(|i| i.to_i64().unwrap()).collect::<Vec<_>>();
    ensure(ints(bell(7)) == [1, 1, 2, 5, 15, 52, 203, 877], || "bell".into())?;
    ensure(ints(g_seq(7)) == [0, 1, 1, 3, 9, 31, 121, 523], || "g".into())?;
    let fam = coeff_family(2, 8);
    let col = |j| (0..=8).map(|n| fam.b(j, n).eval(&q(1, 1))).collect::<Vec<_>>();
    ensure(col(0) == [1, 0, 1, 1, 2, 5, 13, 36, 109], || format!("b_2,0 {:?}", col(0)))?;
    ensure(col(1) == [0, 1, 0, 1, 2, 4, 10, 29, 90], || format!("b_2,1 {:?}", col(1)))?;
    let displayed = [
        poly(&[(1, 1)]),
        poly(&[(1, 2), (1, 1)]),
        poly(&[(-1, 12), (0, 1), (6, 12)]),
        poly(&[(1, 24), (0, 1), (-6, 24), (4, 24)]),
        poly(&[(-19, 720), (0, 1), (120, 720), (-120, 720), (30, 720)]),
    ];
    for (n, want) in displayed.iter().enumerate() {
        let got = gregory_polynomial(n);
        ensure(&got == want, || format!("G_{n} = {got}, want {want}"))?;
    }
    Ok("Bell, g, b_2j and G_0..G_4".into())
}

fn ac2_dobinski() -> Outcome {
    let window = PrimeWindow::new(5, 2003);
    let mut checks = 0;
    for r in 1..=3 {
        for x in [q(1, 1), q(1, 2), q(-2, 1), q(7, 3)] {
            let rep = verify_dobinski(r, 20, &x, &window);
            checks += complete(&rep)?;
            ensure(rep.skipped.is_empty(), || format!("{}: unexpected skips {:?}", rep.summary(), rep.skipped))?;
        }
    }
    Ok(format!("{checks} (p, n) checks"))
}

fn ac3_truncation() -> Outcome {
    let mut count = 0;
    for r in 1..=3 {
        for n in 0..=10 {
            for big_n in 1..=30 {
                for x in [q(1, 1), q(1, 2), q(-2, 1), q(7, 3)] {
                    ensure(check_truncation_identity(r, n, big_n, &x), || format!("r={r} n={n} N={big_n} x={x}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} grid points"))
}

fn ac4_euler() -> Outcome {
    let window = PrimeWindow::new(5, 1009);
    let mut checks = 0;
    for x in [q(0, 1), q(-1, 1), q(-2, 1), q(1, 2), q(7, 3)] {
        checks += complete(&verify_mascheroni(&x, &window))?;
        for k in 2..=5 {
            checks += complete(&verify_interlude(k, &x, &window))?;
        }
        for m in 1..=3 {
            checks += complete(&verify_kluyver(m, &x, &window))?;
        }
    }
    let special = verify_mascheroni_at_minus_one(&window);
    checks += complete(&special)?;
    ensure(special.skipped.is_empty(), || format!("gamma_M(-1) skipped {:?}", special.skipped))?;
    Ok(format!("{checks} prime checks"))
}

fn ac5_lemmas() -> Outcome {
    let window = PrimeWindow::new(5, 1009);
    let mut checks = 0;
    for x in [q(0, 1), q(1, 1), q(2, 1), q(-1, 1), q(-3, 1), q(1, 2), q(5, 3), q(7, 3)] {
        checks += complete(&verify_eisenstein(&x, &window))?;
    }
    let pool = [q(2, 1), q(3, 1), q(5, 1), q(1, 2), q(-4, 1), q(7, 3)];
    for x in &pool {
        for y in &pool {
            checks += complete(&verify_log_additivity(x, y, &window))?;
        }
    }
    for x in [q(-1, 1), q(0, 1), q(3, 1), q(-2, 1), q(1, 2), q(7, 3), q(-7, 3)] {
        checks += complete(&verify_binom_cong(&x, &window))?;
    }
    for x in [q(2, 1), q(1, 2), q(-3, 1), q(7, 3)] {
        let rhs = ell_a(&x, &window).sub(&ell_a(&Rational::from(&x - 1), &window));
        ensure(l1(&x, &window).agrees_with(&rhs), || format!("L_1({x})"))?;
        checks += window.primes().len();
    }
    for p in sieve_primes(2, 1009) {
        let fact = PrimeCtx::new(p).fact_table()[(p - 1) as usize];
        ensure(fact == p - 1, || format!("(p-1)! = {fact} at p = {p}"))?;
        checks += 1;
    }
    for p in sieve_primes(5, 199) {
        let row = stirling1_row_mod((p - 1) as usize, &PrimeCtx::new(p));
        ensure(row[1..].iter().all(|&v| v == 1), || format!("[p-1 j] at p={p}"))?;
        checks += row.len() - 1;
    }
    Ok(format!("{checks} checks"))
}

fn ac6_symbolic() -> Outcome {
    for n in 1..=30 {
        ensure(gregory_explicit(n) == gregory_polynomial(n), || format!("explicit formula n={n}"))?;
        ensure(check_binom_recurrence(n), || format!("binomial recurrence n={n}"))?;
    }
    for n in 0..=10 {
        for big_n in 1..=5 {
            for x in [q(0, 1), q(1, 2), q(-7, 3)] {
                ensure(check_shift_identity(n, big_n, &x), || format!("shift n={n} N={big_n} x={x}"))?;
            }
        }
    }
    for k in 2..=25 {
        ensure(check_log_inverse_identity(k), || format!("log-inverse k={k}"))?;
    }
    for n in 0..=15 {
        ensure(check_integral_characterization(n), || format!("integral n={n}"))?;
    }
    let st = stirling_rows(20);
    let fam = coeff_family(1, 20);
    for n in 0..=20 {
        let want = RationalPolynomial::new((0..=n).map(|k| Rational::from(st.second(n, k).clone())).collect());
        ensure(fam.b(0, n) == &want, || format!("b_1,0({n}; x)"))?;
    }
    for r in 1..=3 {
        ensure(check_euler_operator_ode(r, 30), || format!("Euler operator r={r}"))?;
    }
    Ok("all identities".into())
}

fn ac7_numeric() -> Outcome {
    let mut count = 0;
    for r in 1..=2 {
        for n in 0..=8 {
            match numeric_identity_check(r, n, &q(1, 1), 60, 1e-20) {
                Ok(true) => count += 1,
                Ok(false) => return Err(format!("r={r} n={n} outside 1e-20")),
                Err(e) => return Err(format!("r={r} n={n}: {e}")),
            }
        }
    }
    Ok(format!("{count} cases at 1e-20"))
}

fn ac8_real_gamma() -> Outcome {
    const TERMS: usize = 10_000;
    const PREC: u32 = 128;
    const TOL: f64 = 1e-3;
    let zero = q(0, 1);
    let (m1, k1, m0) = std::thread::scope(|s| {
        let a = s.spawn(|| mascheroni_partial(&zero, 1, TERMS, PREC));
        let b = s.spawn(|| bla101_partial(1, &zero, TERMS, PREC));
        let c = s.spawn(|| mascheroni_partial(&zero, 0, TERMS, PREC));
        (a.join().unwrap(), b.join().unwrap(), c.join().unwrap())
    });
    let (m1, k1, m0) = (m1.map_err(|e| e.to_string())?, k1.map_err(|e| e.to_string())?, m0.map_err(|e| e.to_string())?);
    let err = m1.abs_diff(&gamma_ref(256));
    ensure(err < TOL, || format!("|m=1 partial - gamma| = {err:e}"))?;
    ensure(k1 == m0 && k1.precision() == PREC, || format!("k=1 {k1} differs from m=0 {m0}"))?;
    Ok(format!("|error| = {err:.3e}, k=1 and m=0 bit-identical"))
}

fn ac9_search() -> Outcome {
    let wilson = search(SearchTarget::Wilson, &PrimeWindow::new(5, 600), None).map_err(|e| e.to_string())?;
    ensure(wilson == [5, 13, 563], || format!("Wilson primes {wilson:?}"))?;
    let ea = search(SearchTarget::EAZero, &PrimeWindow::new(5, 50), None).map_err(|e| e.to_string())?;
    ensure(ea.contains(&5), || format!("e_A zeros {ea:?}"))?;
    Ok(format!("Wilson {wilson:?}, e_A zeros {ea:?}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, Duration, fn() -> Outcome); 9] = [
        ("AC1", "table reproduction", Duration::from_secs(1), ac1_tables),
        ("AC2", "Dobinski congruences", Duration::from_secs(120), ac2_dobinski),
        ("AC3", "truncation lemma", Duration::from_secs(10), ac3_truncation),
        ("AC4", "Euler congruences", Duration::from_secs(300), ac4_euler),
        ("AC5", "congruence lemmas", Duration::from_secs(60), ac5_lemmas),
        ("AC6", "symbolic identities", Duration::from_secs(30), ac6_symbolic),
        ("AC7", "numeric Dobinski", Duration::from_secs(10), ac7_numeric),
        ("AC8", "real gamma", Duration::from_secs(60), ac8_real_gamma),
        ("AC9", "search reproduction", Duration::from_secs(60), ac9_search),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over budget")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{id} {status} {name} ({:.2} s of {} s): {detail}", elapsed.as_secs_f64(), budget.as_secs());
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
