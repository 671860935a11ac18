//! Property campaigns: each runs fixed regression instances followed by
//! seeded random ones and checks one containment or identity exactly.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use tauideal::{
    frobenius_root_tau_oracle, tau, tau_is_unit, tau_socle_oracle, tau_veronese, tight_closure_member_at_q,
    tight_integral_closure_at_q, veronese_maximal_ideal, BigRational, Error, FrobeniusConfig, LatticeVector,
    MonomialIdeal, TauRequest, ToricRing, VerdictStatus, Witness,
};

use crate::generate::{instance_rng, random_orthant_ideal, random_semigroup_ideal, IdealShape};
use crate::io::{IdealSpec, Rat, RingSpec};
use crate::report::{CampaignReport, Failure, FailureKind, InstanceRecord};
use crate::CliError;

/// Options shared by all campaigns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub seed: u64,
    /// Number of random instances; each campaign has its own default.
    pub instances: Option<usize>,
    /// Run only this instance index.
    pub only: Option<usize>,
    pub frobenius: FrobeniusConfig,
    pub shape: IdealShape,
    /// Report `wall_ms = 0`, making reports byte-identical across runs.
    pub omit_timing: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: 0,
            instances: None,
            only: None,
            frobenius: FrobeniusConfig::default(),
            shape: IdealShape::default(),
            omit_timing: false,
        }
    }
}

enum Outcome {
    Pass,
    Counterexample(String),
    Inconclusive(String),
}

/// The data of one instance and its outcome.
struct Trial {
    ring: RingSpec,
    ideals: Vec<MonomialIdeal>,
    t: Option<BigRational>,
    params: BTreeMap<String, i64>,
    outcome: Outcome,
}

impl Trial {
    fn new(ring: RingSpec, ideals: Vec<MonomialIdeal>) -> Trial {
        Trial {
            ring,
            ideals,
            t: None,
            params: BTreeMap::new(),
            outcome: Outcome::Pass,
        }
    }

    fn t(mut self, t: &BigRational) -> Trial {
        self.t = Some(t.clone());
        self
    }

    fn param(mut self, key: &str, v: i64) -> Trial {
        self.params.insert(key.into(), v);
        self
    }

    /// Records the first violated check.
    fn check(mut self, ok: bool, detail: impl FnOnce() -> String) -> Trial {
        if ok {
            return self;
        }
        if matches!(self.outcome, Outcome::Pass) {
            self.outcome = Outcome::Counterexample(detail());
        }
        self
    }

    fn inconclusive(mut self, detail: String) -> Trial {
        if matches!(self.outcome, Outcome::Pass) {
            self.outcome = Outcome::Inconclusive(detail);
        }
        self
    }
}

struct Ctx<'a> {
    index: usize,
    fixed: usize,
    rng: ChaCha8Rng,
    opts: &'a CheckOptions,
}

impl Ctx<'_> {
    fn random_index(&self) -> Option<usize> {
        self.index.checked_sub(self.fixed)
    }
}

type Runner = fn(&mut Ctx) -> Result<Trial, CliError>;

struct Campaign {
    name: &'static str,
    fixed: usize,
    random: usize,
    run: Runner,
}

const CAMPAIGNS: &[Campaign] = &[
    Campaign { name: "briancon_skoda", fixed: 1, random: 100, run: briancon_skoda },
    Campaign { name: "subadditivity", fixed: 1, random: 100, run: subadditivity },
    Campaign { name: "restriction", fixed: 1, random: 100, run: restriction },
    Campaign { name: "colon_formula", fixed: COLON_CASES, random: 0, run: colon_formula },
    Campaign { name: "regular_powers", fixed: 40, random: 0, run: regular_powers },
    Campaign { name: "regularity", fixed: 5, random: 20, run: regularity },
    Campaign { name: "reduction_invariance", fixed: 0, random: 60, run: reduction_invariance },
    Campaign { name: "power_scaling", fixed: 0, random: 60, run: power_scaling },
    Campaign { name: "tau_times_ideal", fixed: 0, random: 60, run: tau_times_ideal },
    Campaign { name: "tic_vs_star", fixed: TIC_CASES.len(), random: 0, run: tic_vs_star },
    Campaign { name: "bs_integral", fixed: BS_INTEGRAL_CASES.len(), random: 0, run: bs_integral },
    Campaign { name: "veronese", fixed: VERONESE_CASES.len(), random: 0, run: veronese },
    Campaign { name: "monotonicity", fixed: 0, random: 60, run: monotonicity },
    Campaign { name: "concordance", fixed: CONCORDANCE_FIXED, random: 150, run: concordance },
];

pub fn campaign_names() -> Vec<&'static str> {
    CAMPAIGNS.iter().map(|c| c.name).collect()
}

/// Runs a campaign; instances run in parallel and are reported in order.
pub fn run_campaign(name: &str, opts: &CheckOptions) -> Result<CampaignReport, CliError> {
    let campaign = CAMPAIGNS
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| CliError::Input(format!("unknown campaign {name:?}; known: {}", campaign_names().join(", "))))?;
    let total = campaign.fixed + opts.instances.unwrap_or(campaign.random);
    let indices: Vec<usize> = match opts.only {
        Some(k) if k < total => vec![k],
        Some(k) => return Err(CliError::Input(format!("instance {k} out of range (0..{total})"))),
        None => (0..total).collect(),
    };
    let started = Instant::now();
    let results: Vec<(InstanceRecord, Outcome)> = indices
        .par_iter()
        .map(|&index| {
            let mut ctx = Ctx {
                index,
                fixed: campaign.fixed,
                rng: instance_rng(opts.seed, campaign.name, index),
                opts,
            };
            let trial = (campaign.run)(&mut ctx).unwrap_or_else(|e| {
                let outcome = match e {
                    CliError::Core(Error::EnumerationBound(_)) => Outcome::Inconclusive(e.to_string()),
                    _ => Outcome::Counterexample(format!("error: {e}")),
                };
                Trial {
                    outcome,
                    ..Trial::new(RingSpec::orthant(1), Vec::new())
                }
            });
            (record(campaign.name, index, opts, &trial), trial.outcome)
        })
        .collect();
    let wall_ms = if opts.omit_timing {
        0
    } else {
        started.elapsed().as_millis() as u64
    };
    let mut passes = 0;
    let mut failures = Vec::new();
    for (instance, outcome) in results {
        match outcome {
            Outcome::Pass => passes += 1,
            Outcome::Counterexample(detail) => failures.push(Failure {
                kind: FailureKind::Counterexample,
                detail,
                instance,
            }),
            Outcome::Inconclusive(detail) => failures.push(Failure {
                kind: FailureKind::Inconclusive,
                detail,
                instance,
            }),
        }
    }
    Ok(CampaignReport {
        campaign: campaign.name.into(),
        instances: indices.len(),
        passes,
        failures,
        wall_ms,
    })
}

fn record(name: &str, index: usize, opts: &CheckOptions, trial: &Trial) -> InstanceRecord {
    let mut replay = format!("tauideal check {name} --seed {} --only {index}", opts.seed);
    let defaults = CheckOptions::default();
    if let Some(n) = opts.instances {
        replay.push_str(&format!(" --instances {n}"));
    }
    if opts.frobenius.qmax != defaults.frobenius.qmax {
        replay.push_str(&format!(" --qmax {}", opts.frobenius.qmax));
    }
    if opts.frobenius.prime != defaults.frobenius.prime {
        replay.push_str(&format!(" --prime {}", opts.frobenius.prime));
    }
    if opts.frobenius.cbox != defaults.frobenius.cbox {
        replay.push_str(&format!(" --cbox {}", opts.frobenius.cbox));
    }
    if opts.shape != defaults.shape {
        replay.push_str(&format!(" --max-exp {} --max-gens {}", opts.shape.max_exp, opts.shape.max_gens));
    }
    InstanceRecord {
        index,
        seed: opts.seed,
        ring: trial.ring.clone(),
        ideals: trial.ideals.iter().map(IdealSpec::of).collect(),
        t: trial.t.clone().map(Rat),
        params: trial.params.clone(),
        replay,
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    Rat::new(n, d).0
}

fn poly(d: usize) -> Result<Arc<ToricRing>, CliError> {
    Ok(Arc::new(ToricRing::polynomial(d)?))
}

fn tau_of(a: &MonomialIdeal, t: &BigRational) -> Result<MonomialIdeal, CliError> {
    Ok(tau(&TauRequest::new(a.clone(), t.clone())?)?)
}

fn contains(big: &MonomialIdeal, small: &MonomialIdeal) -> Result<bool, CliError> {
    Ok(big.contains_ideal(small)?)
}

/// A random polynomial ring of rank `lo..=hi` and an ideal in it.
fn random_orthant(ctx: &mut Ctx, lo: usize, hi: usize) -> Result<(usize, MonomialIdeal), CliError> {
    let d = ctx.rng.gen_range(lo..=hi);
    let ring = poly(d)?;
    let a = random_orthant_ideal(&mut ctx.rng, &ring, ctx.opts.shape);
    Ok((d, a))
}

fn pick<T: Clone>(rng: &mut ChaCha8Rng, xs: &[T]) -> T {
    xs[rng.gen_range(0..xs.len())].clone()
}

fn briancon_skoda(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let (d, a, n) = match ctx.random_index() {
        None => (2, MonomialIdeal::from_i64s(poly(2)?, &[&[2, 0], &[0, 3]])?, 2u64),
        Some(k) => {
            let (d, a) = random_orthant(ctx, 1, 3)?;
            (d, a, (k % 4) as u64)
        }
    };
    let r = a.gens().len() as u64;
    let one = rat(1, 1);
    let lhs = tau_of(&a.power(n + r - 1), &one)?;
    let rhs = a.power(n);
    let ok = contains(&rhs, &lhs)?;
    Ok(Trial::new(RingSpec::orthant(d), vec![a])
        .t(&one)
        .param("n", n as i64)
        .param("generators", r as i64)
        .check(ok, || format!("tau(a^{}) = {lhs} is not inside a^{n} = {rhs}", n + r - 1)))
}

fn orthant_pair(ctx: &mut Ctx, lo: usize) -> Result<(usize, MonomialIdeal, MonomialIdeal), CliError> {
    let (d, a) = random_orthant(ctx, lo, 3)?;
    let b = random_orthant_ideal(&mut ctx.rng, a.ring(), ctx.opts.shape);
    Ok((d, a, b))
}

fn subadditivity(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let (d, a, b) = match ctx.random_index() {
        None => {
            let m = MonomialIdeal::variables(poly(2)?)?;
            (2, m.clone(), m)
        }
        Some(_) => orthant_pair(ctx, 1)?,
    };
    let one = rat(1, 1);
    let lhs = tau_of(&a.multiply(&b)?, &one)?;
    let rhs = tau_of(&a, &one)?.multiply(&tau_of(&b, &one)?)?;
    let ok = contains(&rhs, &lhs)?;
    Ok(Trial::new(RingSpec::orthant(d), vec![a, b])
        .t(&one)
        .check(ok, || format!("tau(ab) = {lhs} is not inside tau(a) tau(b) = {rhs}")))
}

fn restriction(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let (d, a, axis) = match ctx.random_index() {
        None => (2, MonomialIdeal::from_i64s(poly(2)?, &[&[2, 0], &[0, 3]])?, 0),
        Some(_) => {
            let (d, a) = random_orthant(ctx, 2, 3)?;
            let axis = ctx.rng.gen_range(0..d);
            (d, a, axis)
        }
    };
    let one = rat(1, 1);
    let restricted = a.kill_variable(axis)?;
    let trial = Trial::new(RingSpec::orthant(d), vec![a.clone()])
        .t(&one)
        .param("axis", axis as i64);
    if restricted.is_zero() {
        // τ of the zero ideal is zero
        return Ok(trial);
    }
    let lhs = tau_of(&restricted, &one)?;
    let rhs = tau_of(&a, &one)?.kill_variable(axis)?;
    let ok = contains(&rhs, &lhs)?;
    Ok(trial.check(ok, || format!("tau(aS) = {lhs} is not inside tau(a)S = {rhs}")))
}

/// `(d, l, r)` for `d ∈ {2, 3}`, `l ∈ 1..=4`, `r ∈ 0..=d(l-1)+2`.
fn colon_case(k: usize) -> (usize, u64, u64) {
    let mut k = k;
    for d in [2usize, 3] {
        for l in 1..=4u64 {
            let rs = d as u64 * (l - 1) + 3;
            if (k as u64) < rs {
                return (d, l, k as u64);
            }
            k -= rs as usize;
        }
    }
    unreachable!("colon case index out of range")
}

const COLON_CASES: usize = 24 + 30;

/// `I : J` straight from the definition, scanning `[0, hi]^d`.
pub fn brute_force_colon(i: &MonomialIdeal, j: &MonomialIdeal, hi: i64) -> Result<MonomialIdeal, CliError> {
    let d = i.ring().dim();
    let mut pts = vec![vec![]];
    for _ in 0..d {
        pts = pts
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=hi).map(move |c| {
                    let mut p = p.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    let mut members = Vec::new();
    for p in pts {
        let m = LatticeVector::from_i64s(&p);
        let mut inside = true;
        for g in j.gens() {
            if !i.contains(&(&m + g))? {
                inside = false;
                break;
            }
        }
        if inside {
            members.push(m);
        }
    }
    Ok(MonomialIdeal::new(i.ring().clone(), members)?)
}

fn colon_formula(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let (d, l, r) = colon_case(ctx.index);
    let ring = poly(d)?;
    let j = MonomialIdeal::variables(ring.clone())?;
    let bracket = j.bracket_power(l)?;
    let jr = j.power(r);
    let e = (d as i64 * l as i64 - r as i64 - d as i64 + 1).max(0) as u64;
    let formula = j.power(e).sum(&bracket)?;
    let computed = bracket.colon(&jr)?;
    let brute = brute_force_colon(&bracket, &jr, l as i64)?;
    Ok(Trial::new(RingSpec::orthant(d), vec![bracket, jr])
        .param("l", l as i64)
        .param("r", r as i64)
        .check(computed == formula, || format!("colon {computed} differs from the formula {formula}"))
        .check(brute == formula, || format!("brute-force colon {brute} differs from the formula {formula}")))
}

fn regular_powers(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let d = ctx.index / 8 + 1;
    let n = (ctx.index % 8 + 1) as u64;
    let m = MonomialIdeal::variables(poly(d)?)?;
    let one = rat(1, 1);
    let got = tau_of(&m.power(n), &one)?;
    let e = (n + 1).saturating_sub(d as u64);
    let expect = m.power(e);
    Ok(Trial::new(RingSpec::orthant(d), vec![m])
        .t(&one)
        .param("n", n as i64)
        .check(got == expect, || format!("tau(m^{n}) = {got}, expected m^{e} = {expect}")))
}

fn regularity(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let cfg = &ctx.opts.frobenius;
    let one = rat(1, 1);
    match ctx.index {
        k @ 0..=3 => {
            let d = k + 2;
            let m = MonomialIdeal::variables(poly(d)?)?;
            let unit = tau_is_unit(&TauRequest::new(m.power(d as u64 - 1), one.clone())?)?;
            Ok(Trial::new(RingSpec::orthant(d), vec![m])
                .t(&one)
                .check(unit, || format!("tau(m^{}) is not the unit ideal", d - 1)))
        }
        4 => {
            // x y is not in the m-tight closure of (x^2, y^2)
            let ring = poly(2)?;
            let i = MonomialIdeal::from_i64s(ring.clone(), &[&[2, 0], &[0, 2]])?;
            let m = MonomialIdeal::variables(ring)?;
            let v = tight_closure_member_at_q(&i, &m, &one, &LatticeVector::from_i64s(&[1, 1]), cfg)?;
            let witnessed = match &v.witness {
                Some(Witness::AllMultipliersFail { failures }) => {
                    failures.len() == (cfg.cbox as usize + 1).pow(2)
                }
                _ => false,
            };
            Ok(Trial::new(RingSpec::orthant(2), vec![i, m])
                .t(&one)
                .check(v.status == VerdictStatus::FailsAtQ && witnessed, || {
                    format!("x y was not refuted by every multiplier: {v:?}")
                }))
        }
        _ => {
            // J^{*a^t} = J for (x^l, y^l) whenever τ(a^t) = R
            let ring = poly(2)?;
            let a = random_orthant_ideal(&mut ctx.rng, &ring, ctx.opts.shape);
            let t = pick(&mut ctx.rng, &[rat(1, 3), rat(1, 2), rat(1, 1)]);
            let l = ctx.rng.gen_range(1..=2i64);
            let j = MonomialIdeal::from_i64s(ring.clone(), &[&[l, 0], &[0, l]])?;
            let mut trial = Trial::new(RingSpec::orthant(2), vec![a.clone(), j.clone()])
                .t(&t)
                .param("l", l);
            if !tau_is_unit(&TauRequest::new(a.clone(), t.clone())?)? {
                return Ok(trial.param("vacuous", 1));
            }
            for z0 in 0..l {
                for z1 in 0..l {
                    let z = LatticeVector::from_i64s(&[z0, z1]);
                    let v = tight_closure_member_at_q(&j, &a, &t, &z, cfg)?;
                    // a multiplier that survives up to qmax proves nothing
                    if v.status == VerdictStatus::HoldsUpToQmax {
                        trial = trial.inconclusive(format!("x^{z} survived up to q = {} with {:?}", v.qmax, v.witness));
                    }
                }
            }
            Ok(trial)
        }
    }
}

fn random_t(ctx: &mut Ctx) -> BigRational {
    pick(&mut ctx.rng, &[rat(1, 3), rat(1, 2), rat(5, 6), rat(1, 1), rat(3, 2), rat(2, 1)])
}

fn reduction_invariance(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let (d, a) = random_orthant(ctx, 1, 3)?;
    let t = random_t(ctx);
    let base = tau_of(&a, &t)?;
    let closure = a.integral_closure()?;
    let via_closure = tau_of(&closure, &t)?;
    let mut trial = Trial::new(RingSpec::orthant(d), vec![a.clone()])
        .t(&t)
        .check(via_closure == base, || format!("tau of the integral closure is {via_closure}, tau(a) is {base}"));
    // reductions obtained by dropping one generator
    for g in a.gens() {
        let rest: Vec<LatticeVector> = a.gens().iter().filter(|h| *h != g).cloned().collect();
        if rest.is_empty() {
            continue;
        }
        let b = MonomialIdeal::new(a.ring().clone(), rest)?;
        if b.integral_closure()? == closure {
            let tb = tau_of(&b, &t)?;
            trial = trial.check(tb == base, || format!("reduction {b} has tau {tb}, tau(a) is {base}"));
        }
    }
    Ok(trial)
}

fn power_scaling(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let (d, a) = random_orthant(ctx, 1, 3)?;
    let n = ctx.rng.gen_range(1..=3u64);
    let t = pick(&mut ctx.rng, &[rat(1, 3), rat(1, 2), rat(5, 6), rat(1, 1)]);
    let lhs = tau_of(&a.power(n), &t)?;
    let rhs = tau_of(&a, &(&t * rat(n as i64, 1)))?;
    Ok(Trial::new(RingSpec::orthant(d), vec![a])
        .t(&t)
        .param("n", n as i64)
        .check(lhs == rhs, || format!("tau((a^{n})^t) = {lhs} but tau(a^(nt)) = {rhs}")))
}

fn tau_times_ideal(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let (d, a, b) = orthant_pair(ctx, 1)?;
    let one = rat(1, 1);
    let lhs = tau_of(&a, &one)?.multiply(&b)?;
    let rhs = tau_of(&a.multiply(&b)?, &one)?;
    let ok = contains(&rhs, &lhs)?;
    Ok(Trial::new(RingSpec::orthant(d), vec![a, b])
        .t(&one)
        .check(ok, || format!("tau(a) b = {lhs} is not inside tau(ab) = {rhs}")))
}

fn monotonicity(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let (d, a, c) = orthant_pair(ctx, 1)?;
    let s = random_t(ctx);
    let t = random_t(ctx);
    let (s, t) = if s <= t { (s, t) } else { (t, s) };
    let ts = tau_of(&a, &s)?;
    let tt = tau_of(&a, &t)?;
    // b = ac ⊆ a
    let b = a.multiply(&c)?;
    let tb = tau_of(&b, &t)?;
    Ok(Trial::new(RingSpec::orthant(d), vec![a, c])
        .t(&t)
        .check(contains(&ts, &tt)?, || format!("tau(a^{t}) = {tt} is not inside tau(a^{s}) = {ts}"))
        .check(contains(&tt, &tb)?, || format!("tau(b^{t}) = {tb} is not inside tau(a^{t}) = {tt}")))
}

/// `(l, r)` in `k[x, y]`.
const TIC_CASES: &[(i64, i64)] = &[(2, 1), (2, 2), (3, 1), (3, 2)];

/// Monomials of `k[x, y]` of degree at most `top`.
fn plane_monomials(top: i64) -> Vec<LatticeVector> {
    (0..=top)
        .flat_map(|s| (0..=s).map(move |i| LatticeVector::from_i64s(&[i, s - i])))
        .collect()
}

/// Membership verdicts of the tight integral closure of
/// `{J^{dl-r}, x^l, y^l}` and of the `J^r`-tight closure of `(x^l, y^l)`
/// on every monomial of degree at most `top`, as `(z, integral, tight)`.
pub fn tic_vs_star_table(
    l: i64,
    r: i64,
    top: i64,
    cfg: &FrobeniusConfig,
) -> Result<Vec<(LatticeVector, bool, bool)>, CliError> {
    let ring = poly(2)?;
    let j = MonomialIdeal::variables(ring.clone())?;
    let xl = MonomialIdeal::from_i64s(ring.clone(), &[&[l, 0]])?;
    let yl = MonomialIdeal::from_i64s(ring.clone(), &[&[0, l]])?;
    let family = [j.power((2 * l - r) as u64), xl, yl];
    let bracket = j.bracket_power(l as u64)?;
    let jr = j.power(r as u64);
    let one = rat(1, 1);
    plane_monomials(top)
        .into_iter()
        .map(|z| {
            let integral = tight_integral_closure_at_q(&family, &z, cfg)?.holds();
            let tight = tight_closure_member_at_q(&bracket, &jr, &one, &z, cfg)?.holds();
            Ok((z, integral, tight))
        })
        .collect()
}

fn tic_vs_star(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let (l, r) = TIC_CASES[ctx.index];
    let table = tic_vs_star_table(l, r, 6, &ctx.opts.frobenius)?;
    let j = MonomialIdeal::variables(poly(2)?)?;
    let mut trial = Trial::new(RingSpec::orthant(2), vec![j]).param("l", l).param("r", r);
    for (z, integral, tight) in table {
        trial = trial.check(integral == tight, || {
            format!("x^{z}: tight integral closure says {integral}, tight closure says {tight}")
        });
    }
    Ok(trial)
}

/// `(d, l, r)`.
const BS_INTEGRAL_CASES: &[(usize, u64, u64)] = &[
    (2, 1, 1),
    (2, 1, 2),
    (2, 2, 1),
    (2, 2, 2),
    (2, 2, 3),
    (2, 3, 1),
    (2, 3, 2),
    (2, 3, 4),
    (3, 1, 1),
    (3, 2, 1),
    (3, 2, 2),
];

fn bs_integral(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let (d, l, r) = BS_INTEGRAL_CASES[ctx.index];
    let ring = poly(d)?;
    let j = MonomialIdeal::variables(ring)?;
    let bracket = j.bracket_power(l)?;
    let jr = j.power(r);
    let target = bracket.sum(&j.power(d as u64 * l - r).integral_closure()?)?;
    let one = rat(1, 1);
    let mut trial = Trial::new(RingSpec::orthant(d), vec![target.clone()])
        .param("l", l as i64)
        .param("r", r as i64);
    for z in target.gens() {
        let v = tight_closure_member_at_q(&bracket, &jr, &one, z, &ctx.opts.frobenius)?;
        trial = trial.check(v.holds(), || format!("x^{z} was refuted: {:?}", v.witness));
    }
    Ok(trial)
}

/// `(d, r, l)`.
const VERONESE_CASES: &[(usize, u64, u64)] = &[
    (2, 2, 1),
    (2, 2, 2),
    (2, 2, 3),
    (2, 2, 4),
    (2, 2, 5),
    (2, 3, 1),
    (2, 3, 2),
    (2, 3, 3),
    (2, 3, 4),
    (2, 3, 5),
    (3, 2, 1),
    (3, 2, 2),
    (3, 2, 3),
    (3, 2, 4),
    (3, 2, 5),
    (3, 3, 1),
    (3, 3, 2),
    (4, 2, 1),
    (4, 2, 2),
];

/// `τ(m^l)` on the toric model of the `r`-th Veronese of `k[x_1..x_d]`
/// against `m^e` for the closed-form exponent `e`.
pub fn veronese_check(d: usize, r: u64, l: u64) -> Result<(u64, bool), CliError> {
    let m = veronese_maximal_ideal(d, r)?;
    let e = tau_veronese(d as u64, r, l)?;
    let got = tau_of(&m.power(l), &rat(1, 1))?;
    Ok((e, got == m.power(e)))
}

fn veronese(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let (d, r, l) = VERONESE_CASES[ctx.index];
    let (e, ok) = veronese_check(d, r, l)?;
    let m = veronese_maximal_ideal(d, r)?;
    Ok(Trial::new(RingSpec::veronese(d, r), vec![m])
        .t(&rat(1, 1))
        .param("l", l as i64)
        .param("e", e as i64)
        .check(ok, || format!("tau(m^{l}) is not m^{e}")))
}

/// Fixed concordance instances ahead of the random ones.
const CONCORDANCE_FIXED: usize = 6;

/// What every oracle said about one `(a, t)`.
#[derive(Clone, Debug)]
pub struct Concordance {
    pub polyhedral: MonomialIdeal,
    pub socle: Vec<(u64, MonomialIdeal, usize)>,
    pub root: Option<(Option<MonomialIdeal>, bool)>,
}

impl Concordance {
    pub fn agree(&self) -> bool {
        self.socle.iter().all(|(_, s, _)| s == &self.polyhedral)
            && self
                .root
                .as_ref()
                .map_or(true, |(r, _)| r.as_ref().map_or(true, |r| r == &self.polyhedral))
    }

    /// Some oracle did not reach a verdict.
    pub fn inconclusive(&self) -> bool {
        self.socle.iter().any(|(_, _, n)| *n > 0) || self.root.as_ref().is_some_and(|(r, asc)| r.is_none() || !asc)
    }
}

/// Polyhedral, socle (at each prime) and, in polynomial rings, root oracles.
pub fn concordance_of(a: &MonomialIdeal, t: &BigRational, cfg: &FrobeniusConfig, primes: &[u64]) -> Result<Concordance, CliError> {
    let polyhedral = tau_of(a, t)?;
    let mut socle = Vec::new();
    for &p in primes {
        let c = FrobeniusConfig { prime: p, ..cfg.clone() };
        let rep = tau_socle_oracle(a, t, &c)?;
        socle.push((p, rep.ideal, rep.inconclusive.len()));
    }
    let root = if a.ring().is_orthant() {
        let rep = frobenius_root_tau_oracle(a, t, cfg)?;
        Some((rep.ideal, rep.ascending))
    } else {
        None
    };
    Ok(Concordance { polyhedral, socle, root })
}

fn concordance(ctx: &mut Ctx) -> Result<Trial, CliError> {
    let ts = [rat(1, 2), rat(1, 1), rat(3, 2)];
    let (ring_spec, a, t) = match ctx.random_index() {
        None => match ctx.index {
            0 => (RingSpec::orthant(2), MonomialIdeal::from_i64s(poly(2)?, &[&[2, 0], &[0, 3]])?, rat(5, 6)),
            1 => (RingSpec::orthant(2), MonomialIdeal::unit(poly(2)?), rat(3, 2)),
            k => {
                let (d, r) = [(2, 2), (2, 3), (3, 2), (2, 2)][k - 2];
                let ring = Arc::new(ToricRing::veronese(d, r)?);
                let a = random_semigroup_ideal(&mut ctx.rng, &ring, 2 * r as i64 + 2, 3);
                (RingSpec::veronese(d, r), a, ts[k % 3].clone())
            }
        },
        Some(k) => {
            let (d, a) = random_orthant(ctx, 1, 3)?;
            (RingSpec::orthant(d), a, ts[k % 3].clone())
        }
    };
    let cfg = &ctx.opts.frobenius;
    let other = if cfg.prime == 2 { 3 } else { 2 };
    let c = concordance_of(&a, &t, cfg, &[cfg.prime, other])?;
    let trial = Trial::new(ring_spec, vec![a]).t(&t);
    if !c.agree() {
        return Ok(trial.check(false, || format!("oracles disagree: {c:?}")));
    }
    if c.inconclusive() {
        return Ok(trial.inconclusive(format!("an oracle did not stabilize: {c:?}")));
    }
    Ok(trial)
}
