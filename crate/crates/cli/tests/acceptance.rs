//! The ten acceptance criteria. Each prints one PASS/FAIL line; the test
//! fails if any criterion does.

use std::sync::Arc;
use std::time::{Duration, Instant};

use tauideal::{
    tau, BigRational, FrobeniusConfig, MonomialIdeal, NewtonPolyhedron, TauRequest, ToricRing,
};
use tauideal_cli::campaigns::{run_campaign, tic_vs_star_table, veronese_check, CheckOptions};
use tauideal_cli::io::Rat;
use tauideal_cli::report::CampaignReport;

const REGULAR_POWERS_LIMIT: Duration = Duration::from_secs(10);
const VERONESE_LIMIT: Duration = Duration::from_secs(30);
const CONCORDANCE_LIMIT: Duration = Duration::from_secs(300);
const CONCORDANCE_INCONCLUSIVE_MAX: f64 = 0.05;
const CONCORDANCE_QMAX: u64 = 128;
const BRIANCON_SKODA_LIMIT: Duration = Duration::from_secs(60);
const SUBADDITIVITY_RESTRICTION_LIMIT: Duration = Duration::from_secs(120);
const COLON_LIMIT: Duration = Duration::from_secs(30);
const REGULARITY_LIMIT: Duration = Duration::from_secs(60);
const SCALING_LIMIT: Duration = Duration::from_secs(120);
const THRESHOLD_LIMIT: Duration = Duration::from_secs(1);
const TIC_LIMIT: Duration = Duration::from_secs(60);
const TIC_QMAX: u64 = 128;

struct Verdict {
    ok: bool,
    detail: String,
}

fn opts() -> CheckOptions {
    CheckOptions {
        omit_timing: true,
        ..CheckOptions::default()
    }
}

/// All instances pass, none inconclusive.
fn clean(reports: &[CampaignReport]) -> Verdict {
    let ok = reports.iter().all(|r| r.passes == r.instances);
    let detail = reports
        .iter()
        .map(|r| format!("{} {}/{}", r.campaign, r.passes, r.instances))
        .collect::<Vec<_>>()
        .join(", ");
    let failures: String = reports.iter().flat_map(|r| &r.failures).take(3).map(|f| format!("; {}", f.detail)).collect();
    Verdict {
        ok,
        detail: detail + &failures,
    }
}

fn campaigns(names: &[&str], o: &CheckOptions) -> Vec<CampaignReport> {
    names.iter().map(|n| run_campaign(n, o).expect("known campaign")).collect()
}

fn regular_powers() -> Verdict {
    clean(&campaigns(&["regular_powers"], &opts()))
}

fn veronese() -> Verdict {
    let mut bad = Vec::new();
    let mut count = 0;
    for (d, r) in [(2, 2), (2, 3), (3, 2)] {
        for l in 1..=5 {
            count += 1;
            let (e, ok) = veronese_check(d, r, l).expect("valid parameters");
            let closed = ((l * r) as i64 - (d as i64 - 1)).max(0) as u64;
            if !ok || e != closed.div_ceil(r) {
                bad.push(format!("(d={d}, r={r}, l={l})"));
            }
        }
    }
    Verdict {
        ok: bad.is_empty(),
        detail: format!("{}/{count} match the closed form {}", count - bad.len(), bad.join(" ")),
    }
}

fn concordance() -> Verdict {
    let o = CheckOptions {
        frobenius: FrobeniusConfig::new(2, CONCORDANCE_QMAX, 8).unwrap(),
        ..opts()
    };
    let rep = run_campaign("concordance", &o).unwrap();
    let rate = rep.inconclusive() as f64 / rep.instances as f64;
    Verdict {
        ok: rep.counterexamples() == 0 && rate < CONCORDANCE_INCONCLUSIVE_MAX,
        detail: format!(
            "{} instances, {} disagreements, inconclusive rate {:.3} (limit {CONCORDANCE_INCONCLUSIVE_MAX})",
            rep.instances,
            rep.counterexamples(),
            rate
        ),
    }
}

fn briancon_skoda() -> Verdict {
    clean(&campaigns(&["briancon_skoda"], &opts()))
}

fn subadditivity_restriction() -> Verdict {
    clean(&campaigns(&["subadditivity", "restriction"], &opts()))
}

fn colon() -> Verdict {
    clean(&campaigns(&["colon_formula"], &opts()))
}

fn regularity() -> Verdict {
    // the fixed instances: units for d = 2..5 and the x y witness
    let o = CheckOptions {
        instances: Some(0),
        ..opts()
    };
    clean(&campaigns(&["regularity"], &o))
}

fn scaling() -> Verdict {
    clean(&campaigns(&["power_scaling", "monotonicity", "reduction_invariance", "tau_times_ideal"], &opts()))
}

fn jumping_thresholds() -> Verdict {
    let ring = Arc::new(ToricRing::polynomial(2).unwrap());
    let a = MonomialIdeal::from_i64s(ring.clone(), &[&[2, 0], &[0, 3]]).unwrap();
    let m = MonomialIdeal::variables(ring.clone()).unwrap();
    let unit = MonomialIdeal::unit(ring.clone());
    let at = |n: i64, d: i64| tau(&TauRequest::new(a.clone(), Rat::new(n, d).0).unwrap()).unwrap();
    let w = ring.w();
    let p = NewtonPolyhedron::new(&a).unwrap().scale(&Rat::new(5, 6).0).unwrap();
    // w = (1, 1) lies on the facet 3x + 2y = 5 of (5/6) P(a)
    let on_boundary = p.contains(w, false).unwrap() && !p.contains(w, true).unwrap();
    let ok = at(1, 3) == unit && at(5, 6) == m && at(1, 1) == m && on_boundary;
    Verdict {
        ok,
        detail: format!("t=1/3: {}, t=5/6: {}, t=1: {}, boundary detected: {on_boundary}", at(1, 3), at(5, 6), at(1, 1)),
    }
}

fn tight_integral_closure() -> Verdict {
    let cfg = FrobeniusConfig::new(2, TIC_QMAX, 8).unwrap();
    let table = tic_vs_star_table(2, 1, 6, &cfg).unwrap();
    let agree = table.iter().filter(|(_, a, b)| a == b).count();
    let inside = table.iter().filter(|(_, a, _)| *a).count();
    Verdict {
        ok: agree == table.len() && inside > 0 && inside < table.len(),
        detail: format!("{agree}/{} monomials agree, {inside} inside", table.len()),
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, Duration, fn() -> Verdict); 10] = [
        ("1 regular powers", REGULAR_POWERS_LIMIT, regular_powers),
        ("2 veronese", VERONESE_LIMIT, veronese),
        ("3 oracle concordance", CONCORDANCE_LIMIT, concordance),
        ("4 briancon-skoda", BRIANCON_SKODA_LIMIT, briancon_skoda),
        ("5 subadditivity and restriction", SUBADDITIVITY_RESTRICTION_LIMIT, subadditivity_restriction),
        ("6 colon formula", COLON_LIMIT, colon),
        ("7 regularity", REGULARITY_LIMIT, regularity),
        ("8 scaling laws", SCALING_LIMIT, scaling),
        ("9 jumping thresholds", THRESHOLD_LIMIT, jumping_thresholds),
        ("10 tight integral closure", TIC_LIMIT, tight_integral_closure),
    ];
    let mut failed = Vec::new();
    for (name, limit, check) in criteria {
        let started = Instant::now();
        let v = check();
        let took = started.elapsed();
        let ok = v.ok && took <= limit;
        println!(
            "{} criterion {name}: {} [{:.2} s, limit {} s]",
            if ok { "PASS" } else { "FAIL" },
            v.detail,
            took.as_secs_f64(),
            limit.as_secs()
        );
        if !ok {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn thresholds_are_exact_rationals() {
    // t just below 5/6 still gives R
    let ring = Arc::new(ToricRing::polynomial(2).unwrap());
    let a = MonomialIdeal::from_i64s(ring.clone(), &[&[2, 0], &[0, 3]]).unwrap();
    let below = BigRational::new(5_000_000.into(), 6_000_001.into());
    assert!(tau(&TauRequest::new(a.clone(), below).unwrap()).unwrap().is_unit());
    assert!(!tau(&TauRequest::new(a, Rat::new(5, 6).0).unwrap()).unwrap().is_unit());
}
