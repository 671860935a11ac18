//! The five commands. Each returns its rendered output and an exit code.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use tauideal::{frobenius_root_tau_oracle, tau, tau_socle_oracle, FrobeniusConfig, MonomialIdeal, NewtonPolyhedron, TauRequest};

use crate::campaigns::{concordance_of, run_campaign, veronese_check, CheckOptions};
use crate::io::{load, IdealSpec, PolyhedronSpec, Rat, RingSpec};
use crate::report::{CampaignReport, Failure, FailureKind, InstanceRecord};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Polyhedral,
    Socle,
    Root,
    All,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit: u8,
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("reports serialize") + "\n",
        Format::Text => text(),
    }
}

/// One method's answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodResult {
    pub method: Method,
    /// `None` when the oracle did not settle on an ideal.
    pub generators: Option<Vec<Vec<i64>>>,
    /// Monomials the socle oracle could not decide.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inconclusive: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauReport {
    pub t: Rat,
    pub results: Vec<MethodResult>,
    /// Present when several methods ran.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

impl TauReport {
    fn exit_code(&self) -> u8 {
        if self.agreement == Some(false) {
            1
        } else if self.results.iter().any(|r| r.generators.is_none() || r.inconclusive.unwrap_or(0) > 0) {
            2
        } else {
            0
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let gens = match &r.generators {
                Some(g) => serde_json::to_string(g).expect("integers serialize"),
                None => "not stabilized".into(),
            };
            out.push_str(&format!("{:?}: {gens}", r.method).to_lowercase());
            if let Some(n) = r.inconclusive.filter(|n| *n > 0) {
                out.push_str(&format!(" ({n} undecided monomials)"));
            }
            out.push('\n');
        }
        if let Some(a) = self.agreement {
            out.push_str(&format!("agreement: {a}\n"));
        }
        out
    }
}

fn generators(ideal: &MonomialIdeal) -> Vec<Vec<i64>> {
    IdealSpec::of(ideal).generators
}

pub fn cmd_tau(
    ring: &RingSpec,
    ideal: &IdealSpec,
    t: &Rat,
    method: Method,
    cfg: &FrobeniusConfig,
    format: Format,
) -> Result<Output, CliError> {
    let ring = ring.build()?;
    let a = ideal.build(&ring)?;
    if method == Method::Root && !ring.is_orthant() {
        return Err(CliError::Input("the root method needs a polynomial ring".into()));
    }
    let wanted = |m: Method| method == m || method == Method::All;
    let mut results = Vec::new();
    if wanted(Method::Polyhedral) {
        let g = tau(&TauRequest::new(a.clone(), t.0.clone())?)?;
        results.push(MethodResult {
            method: Method::Polyhedral,
            generators: Some(generators(&g)),
            inconclusive: None,
        });
    }
    if wanted(Method::Socle) {
        let rep = tau_socle_oracle(&a, &t.0, cfg)?;
        results.push(MethodResult {
            method: Method::Socle,
            generators: Some(generators(&rep.ideal)),
            inconclusive: Some(rep.inconclusive.len()),
        });
    }
    if wanted(Method::Root) && ring.is_orthant() {
        let rep = frobenius_root_tau_oracle(&a, &t.0, cfg)?;
        results.push(MethodResult {
            method: Method::Root,
            generators: rep.ideal.as_ref().filter(|_| rep.ascending).map(generators),
            inconclusive: None,
        });
    }
    let agreement = (results.len() > 1).then(|| {
        let settled: Vec<_> = results.iter().filter_map(|r| r.generators.as_ref()).collect();
        settled.windows(2).all(|w| w[0] == w[1])
    });
    let report = TauReport {
        t: t.clone(),
        results,
        agreement,
    };
    Ok(Output {
        text: render(format, &report, || report.to_text()),
        exit: report.exit_code(),
    })
}

pub fn cmd_newton(ring: &RingSpec, ideal: &IdealSpec, t: &Rat, format: Format) -> Result<Output, CliError> {
    let ring = ring.build()?;
    let a = ideal.build(&ring)?;
    let p = NewtonPolyhedron::new(&a)?.scale(&t.0)?;
    let spec = PolyhedronSpec::of(&p);
    let text = || {
        let row = |v: &[Rat]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
        let mut out = format!("t = {}\n", spec.t);
        for v in &spec.vertices {
            out.push_str(&format!("vertex ({})\n", row(v)));
        }
        for r in &spec.rays {
            out.push_str(&format!("ray {r:?}\n"));
        }
        for (n, rhs) in &spec.facets {
            out.push_str(&format!("facet <x, {n:?}> >= {rhs}\n"));
        }
        out
    };
    Ok(Output {
        text: render(format, &spec, text),
        exit: 0,
    })
}

pub fn cmd_check(name: &str, opts: &CheckOptions, format: Format) -> Result<Output, CliError> {
    let report = run_campaign(name, opts)?;
    Ok(report_output(&report, format))
}

fn report_output(report: &CampaignReport, format: Format) -> Output {
    Output {
        text: render(format, report, || report.to_text()),
        exit: report.exit_code(),
    }
}

/// JSON files of a corpus directory, sorted by name.
fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(CliError::Input(format!("{}: no .json ideals", dir.display())));
    }
    Ok(files)
}

/// Every oracle on every `(ideal, t)` pair of a corpus.
pub fn cmd_crosscheck(
    ring_arg: &str,
    corpus: &Path,
    ts: &[Rat],
    cfg: &FrobeniusConfig,
    omit_timing: bool,
    format: Format,
) -> Result<Output, CliError> {
    let ring_spec: RingSpec = load(ring_arg)?;
    let ring = ring_spec.build()?;
    let files = corpus_files(corpus)?;
    let mut pairs = Vec::new();
    for f in &files {
        let spec: IdealSpec = load(&f.to_string_lossy())?;
        let ideal = spec.build(&ring)?;
        for t in ts {
            pairs.push((f.clone(), ideal.clone(), t.clone()));
        }
    }
    let other = if cfg.prime == 2 { 3 } else { 2 };
    let started = Instant::now();
    let outcomes: Vec<Option<Failure>> = pairs
        .par_iter()
        .enumerate()
        .map(|(index, (file, a, t))| {
            let instance = InstanceRecord {
                index,
                seed: 0,
                ring: ring_spec.clone(),
                ideals: vec![IdealSpec::of(a)],
                t: Some(t.clone()),
                params: BTreeMap::new(),
                replay: format!(
                    "tauideal tau --ring {ring_arg} --ideal {} --t {t} --method all --qmax {} --prime {}",
                    file.display(),
                    cfg.qmax,
                    cfg.prime
                ),
            };
            let fail = |kind, detail| Some(Failure { kind, detail, instance: instance.clone() });
            match concordance_of(a, &t.0, cfg, &[cfg.prime, other]) {
                Err(e) => fail(FailureKind::Counterexample, format!("error: {e}")),
                Ok(c) if !c.agree() => fail(FailureKind::Counterexample, format!("oracles disagree: {c:?}")),
                Ok(c) if c.inconclusive() => fail(FailureKind::Inconclusive, format!("an oracle did not stabilize: {c:?}")),
                Ok(_) => None,
            }
        })
        .collect();
    let failures: Vec<Failure> = outcomes.into_iter().flatten().collect();
    let report = CampaignReport {
        campaign: "crosscheck".into(),
        instances: pairs.len(),
        passes: pairs.len() - failures.len(),
        failures,
        wall_ms: if omit_timing { 0 } else { started.elapsed().as_millis() as u64 },
    };
    Ok(report_output(&report, format))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeroneseReport {
    pub d: usize,
    pub r: u64,
    pub l: u64,
    /// `τ(m^l) = m^exponent`.
    pub exponent: u64,
    /// The toric model reproduces the closed form.
    pub verified: bool,
}

pub fn cmd_veronese(d: usize, r: u64, l: u64, format: Format) -> Result<Output, CliError> {
    let (exponent, verified) = veronese_check(d, r, l)?;
    let report = VeroneseReport { d, r, l, exponent, verified };
    let text = || {
        format!(
            "veronese({d},{r}): tau(m^{l}) = m^{exponent} ({})\n",
            if verified { "verified on the toric model" } else { "MODEL DISAGREES" }
        )
    };
    Ok(Output {
        text: render(format, &report, text),
        exit: if verified { 0 } else { 1 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x2y3() -> IdealSpec {
        IdealSpec {
            generators: vec![vec![2, 0], vec![0, 3]],
        }
    }

    #[test]
    fn tau_all_methods_agree_on_x2y3() {
        let out = cmd_tau(&RingSpec::orthant(2), &x2y3(), &Rat::integer(1), Method::All, &FrobeniusConfig::default(), Format::Json).unwrap();
        let rep: TauReport = serde_json::from_str(&out.text).unwrap();
        assert_eq!(rep.agreement, Some(true));
        assert_eq!(rep.results.len(), 3);
        assert_eq!(rep.results[0].generators, Some(vec![vec![0, 1], vec![1, 0]]));
        assert_eq!(out.exit, 0);
    }

    #[test]
    fn root_method_rejects_veronese_rings() {
        let m = IdealSpec {
            generators: vec![vec![0, 1]],
        };
        let r = cmd_tau(&RingSpec::veronese(2, 2), &m, &Rat::integer(1), Method::Root, &FrobeniusConfig::default(), Format::Text);
        assert!(matches!(r, Err(CliError::Input(_))));
    }

    #[test]
    fn newton_text_lists_facets() {
        let out = cmd_newton(&RingSpec::orthant(2), &x2y3(), &Rat::integer(1), Format::Text).unwrap();
        assert!(out.text.contains("facet <x, [3, 2]> >= 6"), "{}", out.text);
    }
}
