//! Finite-`q` Frobenius-side computations, independent of the interior
//! criterion: the graded socle test on the injective hull `E`, the
//! Frobenius-root chain for polynomial rings, and tight-closure membership
//! experiments with monomial multipliers `c`.
//!
//! Every answer is a statement about the examined range `q = p, p², … ≤
//! qmax` and is labelled as such by its [`Verdict`].

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::antichain::Points;
use crate::enumerate::upset_generators;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{ceil, floor, LatticeVector};
use crate::polyhedron::NewtonPolyhedron;
use crate::tau::search_start;
use crate::toric::ToricRing;

/// Prime, largest `q`, and multiplier box for the finite-`q` sweeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusConfig {
    pub prime: u64,
    pub qmax: u64,
    /// Candidate multipliers `x^c` range over `0 <= c_i <= cbox`.
    pub cbox: u64,
}

impl Default for FrobeniusConfig {
    fn default() -> Self {
        FrobeniusConfig {
            prime: 2,
            qmax: 128,
            cbox: 8,
        }
    }
}

impl FrobeniusConfig {
    pub fn new(prime: u64, qmax: u64, cbox: u64) -> Result<FrobeniusConfig> {
        let cfg = FrobeniusConfig { prime, qmax, cbox };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if !is_prime(self.prime) {
            return Err(Error::InvalidParameter(format!("{} is not prime", self.prime)));
        }
        if self.qmax < self.prime {
            return Err(Error::InvalidParameter(format!(
                "qmax {} is below the prime {}",
                self.qmax, self.prime
            )));
        }
        Ok(())
    }

    /// `p, p², …` up to `qmax`.
    pub fn powers(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut q = self.prime;
        while q <= self.qmax {
            out.push(q);
            match q.checked_mul(self.prime) {
                Some(next) => q = next,
                None => break,
            }
        }
        out
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| p % k != 0)
}

fn check_prime_power(q: u64, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let mut r = q;
    while r > 1 && r % p == 0 {
        r /= p;
    }
    if r == 1 && q > 1 {
        Ok(())
    } else {
        Err(Error::NotPrimePower { q, p })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    /// The property held at every examined `q`, but too few `q` were
    /// examined to call it stable.
    HoldsUpToQmax,
    /// A concrete witness refutes the property.
    FailsAtQ,
    /// The property held at every examined `q`, at least two of them.
    Stabilized,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A lattice point of the socle intersection at `q`.
    SoclePoint { q: u64, point: LatticeVector },
    /// A multiplier `x^c` that passed at every examined `q`.
    Multiplier { c: LatticeVector },
    /// Every candidate multiplier with the first `q` at which it failed.
    AllMultipliersFail { failures: Vec<(LatticeVector, u64)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub witness: Option<Witness>,
    /// Largest `q` examined.
    pub qmax: u64,
    pub prime: u64,
}

impl Verdict {
    /// The tested property held throughout the examined range.
    pub fn holds(&self) -> bool {
        self.status != VerdictStatus::FailsAtQ
    }

    pub fn is_conclusive(&self) -> bool {
        self.status != VerdictStatus::HoldsUpToQmax
    }
}

/// A degree `u ∈ -σ∨ ∩ M` of the injective hull `E = ⊕ k · x^u`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SoclePoint {
    u: LatticeVector,
}

impl SoclePoint {
    pub fn new(ring: &ToricRing, u: LatticeVector) -> Result<SoclePoint> {
        ring.check_point(&-&u)?;
        Ok(SoclePoint { u })
    }

    /// The degree `-m` dual to the monomial `x^m`.
    pub fn dual_to(ring: &ToricRing, m: &LatticeVector) -> Result<SoclePoint> {
        ring.check_point(m)?;
        Ok(SoclePoint { u: -m })
    }

    pub fn u(&self) -> &LatticeVector {
        &self.u
    }
}

/// The finite-`q` socle test for fixed `(a, t)`.
///
/// `(qu + qtP) ∩ ((q-1)w - σ∨) ∩ M` is nonempty iff some `y` with
/// `(q-1)w - y ∈ M`, `y ∈ σ∨`, and `y` minimal in that coset under
/// subtraction of `σ∨ ∩ M` puts `x = (q-1)w - y` into `qu + qtP`: the
/// polyhedron is up-closed under `σ∨`. Those minimal `y` satisfy
/// `ℓ(y) < Σ_ρ ℓ(ρ)` (write `y` in a simplicial cone of rays with all
/// coefficients below 1), so each coset contributes a short fixed list.
struct SocleSystem<'a> {
    ring: &'a ToricRing,
    facets: Vec<(LatticeVector, BigRational)>,
    offsets: RefCell<HashMap<Vec<BigRational>, Arc<Vec<LatticeVector>>>>,
}

impl<'a> SocleSystem<'a> {
    fn new(ideal: &'a MonomialIdeal, t: &BigRational) -> Result<SocleSystem<'a>> {
        if t.is_negative() {
            return Err(Error::NegativeScale);
        }
        let scaled = NewtonPolyhedron::new(ideal)?.scale(t)?;
        Ok(SocleSystem {
            ring: ideal.ring(),
            facets: scaled
                .inequalities()
                .iter()
                .map(|f| (f.normal.clone(), f.rhs.clone()))
                .collect(),
            offsets: RefCell::new(HashMap::new()),
        })
    }

    /// A lattice point of the intersection at `q`, or `None` when empty.
    fn witness(&self, u: &LatticeVector, q: u64) -> Option<LatticeVector> {
        let qb = BigInt::from(q);
        let c = self.ring.w().scaled(&BigRational::from_integer(&qb - 1u32));
        let base: Vec<BigInt> = c.coords().iter().map(floor).collect();
        let frac: Vec<BigRational> = c
            .coords()
            .iter()
            .zip(&base)
            .map(|(x, b)| x - BigRational::from_integer(b.clone()))
            .collect();
        let qu = u.scaled(&qb);
        let base = LatticeVector::new(base);
        let thresholds: Vec<BigInt> = self
            .facets
            .iter()
            .map(|(_, b)| ceil(&(b * BigRational::from_integer(qb.clone()))))
            .collect();
        let offsets = self.offsets_for(frac);
        offsets.iter().find_map(|z| {
            // y = frac + z, x = c - y
            let x = &base - z;
            let shifted = &x - &qu;
            self.facets
                .iter()
                .zip(&thresholds)
                .all(|((a, _), th)| &shifted.dot(a) >= th)
                .then_some(x)
        })
    }

    /// Integral `z` with `y = frac + z` minimal in `(frac + M) ∩ σ∨`.
    fn offsets_for(&self, frac: Vec<BigRational>) -> Arc<Vec<LatticeVector>> {
        if let Some(hit) = self.offsets.borrow().get(&frac) {
            return hit.clone();
        }
        let ring = self.ring;
        let d = ring.dim();
        let total = BigRational::from_integer(ring.ray_degree_sum());
        let mut lo = vec![BigRational::zero(); d];
        let mut hi = vec![BigRational::zero(); d];
        for ray in ring.sigma_dual().rays() {
            let deg = BigRational::from_integer(ring.degree(ray));
            for i in 0..d {
                let c = &total * BigRational::from_integer(ray.coords()[i].clone()) / &deg;
                if c < lo[i] {
                    lo[i] = c.clone();
                }
                if c > hi[i] {
                    hi[i] = c;
                }
            }
        }
        let lo: Vec<i64> = (0..d).map(|i| ceil(&(&lo[i] - &frac[i])).to_i64().expect("small box")).collect();
        let hi: Vec<i64> = (0..d).map(|i| floor(&(&hi[i] - &frac[i])).to_i64().expect("small box")).collect();

        let mut found: Vec<(LatticeVector, Vec<BigRational>)> = Vec::new();
        let mut cur = lo.clone();
        if lo.iter().zip(&hi).all(|(a, b)| a <= b) {
            loop {
                let z = LatticeVector::from_i64s(&cur);
                let y: Vec<BigRational> = frac
                    .iter()
                    .zip(z.coords())
                    .map(|(f, c)| f + BigRational::from_integer(c.clone()))
                    .collect();
                let vals: Vec<BigRational> = ring
                    .cone_generators()
                    .iter()
                    .map(|n| y.iter().zip(n.coords()).map(|(a, b)| a * b).sum())
                    .collect();
                let ell: BigRational = vals.iter().sum();
                if vals.iter().all(|v| !v.is_negative()) && ell < total {
                    found.push((z, vals));
                }
                let mut i = 0;
                while i < d && cur[i] == hi[i] {
                    cur[i] = lo[i];
                    i += 1;
                }
                if i == d {
                    break;
                }
                cur[i] += 1;
            }
        }
        let minimal: Vec<LatticeVector> = found
            .iter()
            .filter(|(z, v)| {
                !found
                    .iter()
                    .any(|(z2, v2)| z2 != z && v2.iter().zip(v.iter()).all(|(a, b)| a <= b))
            })
            .map(|(z, _)| z.clone())
            .collect();
        let minimal = Arc::new(minimal);
        self.offsets.borrow_mut().insert(frac, minimal.clone());
        minimal
    }

    fn in_star(&self, u: &LatticeVector, cfg: &FrobeniusConfig) -> Verdict {
        let qs = cfg.powers();
        for &q in &qs {
            if let Some(point) = self.witness(u, q) {
                return Verdict {
                    status: VerdictStatus::FailsAtQ,
                    witness: Some(Witness::SoclePoint { q, point }),
                    qmax: q,
                    prime: cfg.prime,
                };
            }
        }
        Verdict {
            status: if qs.len() >= 2 {
                VerdictStatus::Stabilized
            } else {
                VerdictStatus::HoldsUpToQmax
            },
            witness: None,
            qmax: qs.last().copied().unwrap_or(0),
            prime: cfg.prime,
        }
    }
}

/// `(qu + q·tP(a)) ∩ ((q-1)w - σ∨) ∩ M = ∅`, decided exactly.
pub fn socle_piece_vanishes_at_q(
    ideal: &MonomialIdeal,
    t: &BigRational,
    u: &SoclePoint,
    q: u64,
    prime: u64,
) -> Result<bool> {
    check_prime_power(q, prime)?;
    if u.u.dim() != ideal.ring().dim() {
        return Err(Error::LengthMismatch {
            expected: ideal.ring().dim(),
            got: u.u.dim(),
        });
    }
    let sys = SocleSystem::new(ideal, t)?;
    Ok(sys.witness(&u.u, q).is_none())
}

/// Whether `x^u` lies in `0^{*a^t}_E`, swept over `q = p, …, qmax` with the
/// test element `c = 1`.
///
/// A nonempty socle piece at any `q` refutes membership for good; emptiness
/// throughout is reported as [`VerdictStatus::Stabilized`] once at least two
/// `q` were examined.
pub fn in_star_e(ideal: &MonomialIdeal, t: &BigRational, u: &SoclePoint, cfg: &FrobeniusConfig) -> Result<Verdict> {
    cfg.validate()?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let sys = SocleSystem::new(ideal, t)?;
    Ok(sys.in_star(&u.u, cfg))
}

/// `τ(a^t)` computed as `Ann_R(0^{*a^t}_E)` at finite `q`, with the verdict
/// behind every examined monomial.
#[derive(Clone, Debug)]
pub struct SocleOracleReport {
    pub ideal: MonomialIdeal,
    /// Examined monomials `m` with the verdict for `x^{-m} ∈ 0^{*}_E`.
    pub verdicts: Vec<(LatticeVector, Verdict)>,
    /// Monomials whose verdict was not conclusive; they are treated as
    /// outside the ideal.
    pub inconclusive: Vec<LatticeVector>,
}

pub fn tau_socle_oracle(ideal: &MonomialIdeal, t: &BigRational, cfg: &FrobeniusConfig) -> Result<SocleOracleReport> {
    cfg.validate()?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ring = ideal.ring().clone();
    let sys = SocleSystem::new(ideal, t)?;
    let scaled = NewtonPolyhedron::new(ideal)?.scale(t)?;
    let start = search_start(&scaled, &ring);
    let seen: RefCell<Vec<(LatticeVector, Verdict)>> = RefCell::new(Vec::new());
    let gens = upset_generators(&ring, &start, |m| {
        let v = sys.in_star(&-m, cfg);
        let member = !v.holds();
        seen.borrow_mut().push((m.clone(), v));
        member
    })?;
    let mut verdicts = seen.into_inner();
    verdicts.sort_by(|a, b| a.0.cmp(&b.0));
    verdicts.dedup_by(|a, b| a.0 == b.0);
    let inconclusive = verdicts
        .iter()
        .filter(|(_, v)| !v.is_conclusive())
        .map(|(m, _)| m.clone())
        .collect();
    Ok(SocleOracleReport {
        ideal: MonomialIdeal::new(ring, gens)?,
        verdicts,
        inconclusive,
    })
}

/// The chain `(a^{⌈tq⌉})^{[1/q]}` over the examined `q`.
#[derive(Clone, Debug)]
pub struct RootOracleReport {
    pub chain: Vec<(u64, MonomialIdeal)>,
    /// Each term is contained in the next.
    pub ascending: bool,
    /// The last term, when the last two terms agree.
    pub ideal: Option<MonomialIdeal>,
}

fn orthant_points(ideal: &MonomialIdeal) -> Result<Points> {
    let d = ideal.ring().dim();
    let mut p = Points::new(d);
    for g in ideal.gens() {
        let row = g
            .to_i64s()
            .ok_or_else(|| Error::InvalidParameter("exponent exceeds 64 bits".into()))?;
        p.push(&row);
    }
    Ok(p)
}

fn points_ideal(ring: &Arc<ToricRing>, p: &Points) -> MonomialIdeal {
    MonomialIdeal::from_trusted(ring.clone(), p.iter().map(LatticeVector::from_i64s).collect())
}

/// `a^n` for increasing `n`, reusing the previous power.
struct PowerLadder {
    gens: Points,
    n: u64,
    cur: Points,
}

impl PowerLadder {
    fn new(gens: Points) -> PowerLadder {
        let mut one = Points::new(gens.d);
        one.push(&vec![0; gens.d]);
        PowerLadder { gens, n: 0, cur: one }
    }

    fn power(&mut self, n: u64) -> &Points {
        assert!(n >= self.n, "powers are requested in increasing order");
        while self.n < n {
            self.cur = self.cur.times(&self.gens);
            self.n += 1;
        }
        &self.cur
    }
}

fn ceil_tq(t: &BigRational, q: u64) -> Result<u64> {
    ceil(&(t * BigRational::from_integer(BigInt::from(q))))
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter("exponent ⌈tq⌉ out of range".into()))
}

/// `τ(a^t)` in a polynomial ring as the stable value of the ascending chain
/// `(a^{⌈tq⌉})^{[1/q]}`, `q = p, …, qmax`.
pub fn frobenius_root_tau_oracle(ideal: &MonomialIdeal, t: &BigRational, cfg: &FrobeniusConfig) -> Result<RootOracleReport> {
    cfg.validate()?;
    ideal.require_orthant("frobenius_root_tau_oracle")?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if t.is_negative() {
        return Err(Error::NegativeScale);
    }
    let ring = ideal.ring().clone();
    let mut ladder = PowerLadder::new(orthant_points(ideal)?);
    let mut chain: Vec<(u64, MonomialIdeal)> = Vec::new();
    for q in cfg.powers() {
        let n = ceil_tq(t, q)?;
        let root = ladder.power(n).floor_div(q as i64);
        chain.push((q, points_ideal(&ring, &root)));
    }
    let mut ascending = true;
    for w in chain.windows(2) {
        ascending &= w[1].1.contains_ideal(&w[0].1)?;
    }
    let ideal = match chain.as_slice() {
        [.., (_, a), (_, b)] if a == b => Some(b.clone()),
        _ => None,
    };
    Ok(RootOracleReport { chain, ascending, ideal })
}

/// Candidate multipliers in `[0, cbox]^d`, by total degree then
/// lexicographically.
fn multiplier_box(d: usize, cbox: u64) -> Vec<Vec<i64>> {
    let side = cbox as i64 + 1;
    let count = (side as usize).pow(d as u32);
    let mut out: Vec<Vec<i64>> = (0..count)
        .map(|mut k| {
            (0..d)
                .map(|_| {
                    let c = (k % side as usize) as i64;
                    k /= side as usize;
                    c
                })
                .collect()
        })
        .collect();
    out.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    out
}

/// Runs `passes(c, q)` for every multiplier in the box and every examined
/// `q`; the first multiplier passing at all `q` wins.
fn multiplier_sweep<F>(d: usize, cfg: &FrobeniusConfig, mut passes: F) -> Verdict
where
    F: FnMut(&[i64], usize) -> bool,
{
    let qs = cfg.powers();
    let mut failures = Vec::new();
    for c in multiplier_box(d, cfg.cbox) {
        match (0..qs.len()).find(|&k| !passes(&c, k)) {
            None => {
                return Verdict {
                    status: VerdictStatus::HoldsUpToQmax,
                    witness: Some(Witness::Multiplier {
                        c: LatticeVector::from_i64s(&c),
                    }),
                    qmax: *qs.last().expect("validated"),
                    prime: cfg.prime,
                }
            }
            Some(k) => failures.push((LatticeVector::from_i64s(&c), qs[k])),
        }
    }
    Verdict {
        status: VerdictStatus::FailsAtQ,
        witness: Some(Witness::AllMultipliersFail { failures }),
        qmax: *qs.last().expect("validated"),
        prime: cfg.prime,
    }
}

fn monomial_i64(ring: &ToricRing, z: &LatticeVector) -> Result<Vec<i64>> {
    ring.check_point(z)?;
    z.to_i64s()
        .ok_or_else(|| Error::InvalidParameter("exponent exceeds 64 bits".into()))
}

/// Whether `x^z ∈ I^{*a^t}` in a polynomial ring: some monomial `c` in the
/// box with `c · z^q · a^{⌈tq⌉} ⊆ I^{[q]}` at every examined `q`.
pub fn tight_closure_member_at_q(
    i: &MonomialIdeal,
    a: &MonomialIdeal,
    t: &BigRational,
    z: &LatticeVector,
    cfg: &FrobeniusConfig,
) -> Result<Verdict> {
    cfg.validate()?;
    i.require_orthant("tight_closure_member_at_q")?;
    i.check_same_ring(a)?;
    if t.is_negative() {
        return Err(Error::NegativeScale);
    }
    let ring = i.ring();
    let d = ring.dim();
    let z = monomial_i64(ring, z)?;
    let base = orthant_points(i)?;
    let mut ladder = PowerLadder::new(orthant_points(a)?);
    // per q: generators of I^{[q]} and the exponents q z + g, g ∈ a^{⌈tq⌉}
    let mut levels: Vec<(Points, Points)> = Vec::new();
    for q in cfg.powers() {
        let qi = q as i64;
        let bracket = Points {
            d,
            data: base.data.iter().map(|c| c * qi).collect(),
        };
        let mut targets = Points::new(d);
        for g in ladder.power(ceil_tq(t, q)?).iter() {
            let row: Vec<i64> = g.iter().zip(&z).map(|(g, z)| g + qi * z).collect();
            targets.push(&row);
        }
        levels.push((bracket, targets));
    }
    let mut buf = vec![0i64; d];
    Ok(multiplier_sweep(d, cfg, |c, k| {
        let (bracket, targets) = &levels[k];
        targets.iter().all(|tg| {
            for j in 0..d {
                buf[j] = tg[j] + c[j];
            }
            bracket.covers(&buf)
        })
    }))
}

/// Whether `x^z ∈ {I_1, …, I_n}^*` in a polynomial ring: some monomial `c`
/// in the box with `c · z^q ∈ Σ I_i^q` (ordinary powers) at every examined
/// `q`.
pub fn tight_integral_closure_at_q(ideals: &[MonomialIdeal], z: &LatticeVector, cfg: &FrobeniusConfig) -> Result<Verdict> {
    cfg.validate()?;
    let first = ideals.first().ok_or(Error::Empty)?;
    first.require_orthant("tight_integral_closure_at_q")?;
    for other in ideals {
        first.check_same_ring(other)?;
    }
    let ring = first.ring();
    let d = ring.dim();
    let z = monomial_i64(ring, z)?;
    let mut ladders: Vec<PowerLadder> = ideals
        .iter()
        .map(|i| orthant_points(i).map(PowerLadder::new))
        .collect::<Result<_>>()?;
    let mut levels: Vec<(Points, Vec<i64>)> = Vec::new();
    for q in cfg.powers() {
        let mut sum = Points::new(d);
        for l in ladders.iter_mut() {
            sum.data.extend_from_slice(&l.power(q).data);
        }
        let zq: Vec<i64> = z.iter().map(|c| c * q as i64).collect();
        levels.push((sum.minimal(), zq));
    }
    let mut buf = vec![0i64; d];
    Ok(multiplier_sweep(d, cfg, |c, k| {
        let (sum, zq) = &levels[k];
        for j in 0..d {
            buf[j] = zq[j] + c[j];
        }
        sum.covers(&buf)
    }))
}
