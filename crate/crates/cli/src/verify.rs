//! The identity suite behind `meandric verify`.

use std::time::Instant;

use anyhow::Result;
use meandric::analysis::{catalan_squared_moments, hankel_determinant};
use meandric::enumeration::{
    count_all, join_power_sum_by_colourings, join_power_sum_full, mixed_join_sum,
    mixed_join_sum_by_colourings, CountOptions, CountReport,
};
use meandric::freeprob::{
    cumulants_to_moments, moments_to_cumulants, nu_cumulants, nu_t_cumulant_polynomials,
    square_cumulants, verify_functional_equation, CumulantSequence,
};
use meandric::meander::{is_irreducible_doubled, is_irreducible_lattice, MeandricSystem};
use meandric::nc_lattice::{enumerate_nc, SetPartition};
use meandric::reference::meander_numbers;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::json;

use crate::Format;

pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, outcome: Result<String, String>) -> Check {
    match outcome {
        Ok(detail) => Check {
            name,
            passed: true,
            detail,
        },
        Err(detail) => Check {
            name,
            passed: false,
            detail,
        },
    }
}

fn big(v: u64) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn run_suite(max_n: usize, opts: &CountOptions) -> Result<Vec<Check>> {
    let reference = meander_numbers();
    let reports: Vec<CountReport> = (1..=max_n)
        .map(|n| count_all(n, opts))
        .collect::<Result<_, _>>()?;
    let mut checks = Vec::new();

    checks.push(check("meander counts match the reference table", {
        let bad: Vec<usize> = reports
            .iter()
            .filter(|r| reference.get(r.n - 1) != Some(&BigInt::from(r.meanders)))
            .map(|r| r.n)
            .collect();
        if bad.is_empty() {
            Ok(format!("n = 1..{max_n}"))
        } else {
            Err(format!("mismatch at n = {bad:?}"))
        }
    }));

    checks.push(check(
        "interval, doubled-join and lattice irreducibility agree",
        {
            let top = max_n.min(7);
            let mut outcome = Ok(String::new());
            let mut pairs = 0u64;
            'sizes: for n in 1..=top {
                let all: Vec<SetPartition> = enumerate_nc(n)?.collect();
                for a in &all {
                    for b in &all {
                        let direct = MeandricSystem::new(a, b)?.is_irreducible_direct();
                        let doubled = is_irreducible_doubled(a, b)?;
                        let lattice = is_irreducible_lattice(a, b)?;
                        pairs += 1;
                        if direct != doubled || doubled != lattice {
                            outcome = Err(format!("disagree on ({a}, {b})"));
                            break 'sizes;
                        }
                    }
                }
            }
            outcome.map(|_| format!("{pairs} pairs, n = 1..{top}"))
        },
    ));

    checks.push(check(
        "irreducible counts are cumulants of the squared Catalan moments",
        {
            let k = moments_to_cumulants(&catalan_squared_moments(2 * max_n));
            match reports
                .iter()
                .find(|r| k.term(2 * r.n) != big(r.irreducible))
            {
                None => Ok(format!("n = 1..{max_n}")),
                Some(r) => Err(format!(
                    "n = {}: {} vs {}",
                    r.n,
                    r.irreducible,
                    k.term(2 * r.n)
                )),
            }
        },
    ));

    checks.push(check(
        "R-transform functional equation, squared Catalan moments",
        {
            let m = catalan_squared_moments(20);
            let k = moments_to_cumulants(&m);
            match verify_functional_equation(&m, &k, 20) {
                Ok(true) => Ok("order 20".into()),
                Ok(false) => Err("non-zero residual".into()),
                Err(e) => Err(e.to_string()),
            }
        },
    ));

    checks.push(check("meet-zero pairs from irreducible cumulants", {
        let irr: Vec<BigRational> = reports.iter().map(|r| big(r.irreducible)).collect();
        let k = CumulantSequence::from_even_terms(&irr)?;
        let mut outcome = Ok(format!("n = 1..{max_n}"));
        for r in &reports {
            let s = square_cumulants(&k, r.n)?;
            if s != big(r.b2) {
                outcome = Err(format!("n = {}: {} vs {}", r.n, r.b2, s));
                break;
            }
        }
        outcome
    }));

    checks.push(check("strictly non-crossing counts are moments of nu", {
        let moments = cumulants_to_moments(&nu_cumulants(&reference)?);
        match reports
            .iter()
            .find(|r| moments.term(2 * r.n) != big(r.strictly_noncrossing))
        {
            None => Ok(format!("n = 1..{max_n}")),
            Some(r) => Err(format!("n = {}: {}", r.n, r.strictly_noncrossing)),
        }
    }));

    checks.push(check(
        "cumulant polynomials of nu_t: Q(0) = 0, Q'(0) = meanders, Q(1) = irreducible",
        {
            let hists: Vec<Vec<BigInt>> = reports
                .iter()
                .map(|r| r.histogram.iter().map(|&h| h.into()).collect())
                .collect();
            let q = nu_t_cumulant_polynomials(&hists)?;
            let mut outcome = Ok(format!("p = 1..{max_n}"));
            for (qp, r) in q.iter().zip(&reports) {
                let ok = qp.eval(&0.into()).is_zero()
                    && qp.derivative_at_zero() == r.meanders.into()
                    && qp.eval(&1.into()) == r.irreducible.into();
                if !ok {
                    outcome = Err(format!("p = {}: Q = {qp}", r.n));
                    break;
                }
            }
            outcome
        },
    ));

    checks.push(check("join power sums match their colouring expansions", {
        let mut outcome = Ok(format!(
            "full lattice n = 1..{}, mixed n = 1..{}, d = 1..3",
            max_n.min(5),
            max_n.min(2)
        ));
        'outer: for d in 1..=3u64 {
            for n in 1..=max_n.min(5) {
                if join_power_sum_full(n, d)? != join_power_sum_by_colourings(n, d)? {
                    outcome = Err(format!("full lattice n = {n}, d = {d}"));
                    break 'outer;
                }
            }
            for n in 1..=max_n.min(2) {
                if mixed_join_sum(n, d)? != mixed_join_sum_by_colourings(n, d)? {
                    outcome = Err(format!("mixed n = {n}, d = {d}"));
                    break 'outer;
                }
            }
        }
        outcome
    }));

    checks.push(check(
        "Hankel determinant of nu moments, size 10, is negative",
        {
            let started = Instant::now();
            let moments = cumulants_to_moments(&nu_cumulants(&reference)?);
            let det = hankel_determinant(&moments, 10)?;
            if det.is_negative() {
                Ok(format!(
                    "{} digits, {:.2?}",
                    det.to_string().len() - 1,
                    started.elapsed()
                ))
            } else {
                Err(format!("det = {det}"))
            }
        },
    ));

    Ok(checks)
}

pub fn render(checks: &[Check], format: Format) -> String {
    match format {
        Format::Json => {
            let items: Vec<_> = checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            serde_json::to_string_pretty(&items).expect("plain values serialise")
        }
        Format::Csv => {
            let mut out = String::from("name,passed,detail\n");
            for c in checks {
                out.push_str(&format!(
                    "\"{}\",{},\"{}\"\n",
                    c.name,
                    c.passed,
                    c.detail.replace('"', "'")
                ));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("{tag}  {}: {}\n", c.name, c.detail));
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            out.push_str(&format!(
                "{} passed, {failed} failed\n",
                checks.len() - failed
            ));
            out
        }
    }
}
