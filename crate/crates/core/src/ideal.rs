//! Monomial ideals of a toric ring.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::enumerate::upset_generators;
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::polyhedron::NewtonPolyhedron;
use crate::toric::ToricRing;

/// A monomial ideal, stored as its minimal generators (sorted).
///
/// The zero ideal has no generators; the unit ideal is generated by the
/// zero exponent.
#[derive(Clone)]
pub struct MonomialIdeal {
    ring: Arc<ToricRing>,
    gens: Vec<LatticeVector>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

fn same_ring(a: &Arc<ToricRing>, b: &Arc<ToricRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Minimal elements of `points` under divisibility in `ring`, sorted.
pub(crate) fn minimal_elements(ring: &ToricRing, mut points: Vec<LatticeVector>) -> Vec<LatticeVector> {
    points.sort_by_cached_key(|p| (ring.degree(p), p.clone()));
    points.dedup();
    if ring.is_orthant() && ring.dim() == 2 {
        return staircase_2d(points);
    }
    let mut kept: Vec<LatticeVector> = Vec::new();
    let mut kept_vals: Vec<Vec<BigInt>> = Vec::new();
    for p in points {
        let pv = ring.valuations(&p);
        // A divisor has degree <= that of p, so it was seen already.
        if kept_vals.iter().any(|g| g.iter().zip(&pv).all(|(a, b)| a <= b)) {
            continue;
        }
        kept.push(p);
        kept_vals.push(pv);
    }
    kept.sort();
    kept
}

/// Pareto-minimal points of the plane orthant order by a sweep in x.
fn staircase_2d(mut points: Vec<LatticeVector>) -> Vec<LatticeVector> {
    points.sort();
    let mut kept: Vec<LatticeVector> = Vec::new();
    for p in points {
        let y = &p.coords()[1];
        if kept.last().map_or(true, |k| y < &k.coords()[1]) {
            kept.push(p);
        }
    }
    kept
}

impl MonomialIdeal {
    /// The ideal generated by `raw_gens`, reduced to minimal generators.
    pub fn new(ring: Arc<ToricRing>, raw_gens: Vec<LatticeVector>) -> Result<MonomialIdeal> {
        for g in &raw_gens {
            ring.check_point(g)?;
        }
        Ok(Self::from_trusted(ring, raw_gens))
    }

    pub fn from_i64s(ring: Arc<ToricRing>, raw_gens: &[&[i64]]) -> Result<MonomialIdeal> {
        Self::new(ring, raw_gens.iter().map(|c| LatticeVector::from_i64s(c)).collect())
    }

    pub(crate) fn from_trusted(ring: Arc<ToricRing>, raw_gens: Vec<LatticeVector>) -> MonomialIdeal {
        let gens = minimal_elements(&ring, raw_gens);
        MonomialIdeal { ring, gens }
    }

    pub fn zero(ring: Arc<ToricRing>) -> MonomialIdeal {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Arc<ToricRing>) -> MonomialIdeal {
        let d = ring.dim();
        MonomialIdeal {
            ring,
            gens: vec![LatticeVector::zero(d)],
        }
    }

    /// `(x_1, ..., x_d)` in a polynomial ring.
    pub fn variables(ring: Arc<ToricRing>) -> Result<MonomialIdeal> {
        if !ring.is_orthant() {
            return Err(Error::UnsupportedRing("variables"));
        }
        let d = ring.dim();
        let gens = (0..d).map(|i| LatticeVector::unit(d, i)).collect();
        Ok(Self::from_trusted(ring, gens))
    }

    /// `(x_1^{l_1}, ..., x_d^{l_d})` in a polynomial ring.
    pub fn pure_powers(ring: Arc<ToricRing>, exponents: &[u64]) -> Result<MonomialIdeal> {
        if !ring.is_orthant() {
            return Err(Error::UnsupportedRing("pure_powers"));
        }
        if exponents.len() != ring.dim() {
            return Err(Error::LengthMismatch {
                expected: ring.dim(),
                got: exponents.len(),
            });
        }
        let d = ring.dim();
        let gens = exponents
            .iter()
            .enumerate()
            .map(|(i, &l)| LatticeVector::unit(d, i).scaled(&BigInt::from(l)))
            .collect();
        Ok(Self::from_trusted(ring, gens))
    }

    pub fn ring(&self) -> &Arc<ToricRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[LatticeVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub(crate) fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub(crate) fn require_orthant(&self, op: &'static str) -> Result<()> {
        if self.ring.is_orthant() {
            Ok(())
        } else {
            Err(Error::UnsupportedRing(op))
        }
    }

    /// `x^m ∈ I`.
    pub fn contains(&self, m: &LatticeVector) -> Result<bool> {
        self.ring.check_point(m)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &LatticeVector) -> bool {
        self.gens.iter().any(|g| self.ring.divides(g, m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_trusted(self.ring.clone(), gens))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a + b);
            }
        }
        Ok(Self::from_trusted(self.ring.clone(), gens))
    }

    /// `I^n`, with `I^0 = R`.
    pub fn power(&self, n: u64) -> MonomialIdeal {
        let mut result = Self::unit(self.ring.clone());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.multiply(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base).expect("same ring");
            }
        }
        result
    }

    /// `I ∩ J` in a polynomial ring, via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        self.require_orthant("intersect")?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.join(b));
            }
        }
        Ok(Self::from_trusted(self.ring.clone(), gens))
    }

    /// `I : J`, the largest monomial ideal `K` with `K J ⊆ I`.
    ///
    /// In a polynomial ring this is `∩_{g} (I : x^g)` with `(I : x^g)`
    /// generated by `max(h - g, 0)`. Other toric rings fall back to a search
    /// over monomials by degree.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        if other.is_zero() {
            return Ok(Self::unit(self.ring.clone()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.ring.clone()));
        }
        if self.ring.is_orthant() {
            let mut acc = Self::unit(self.ring.clone());
            for g in &other.gens {
                let gens = self
                    .gens
                    .iter()
                    .map(|h| {
                        LatticeVector::new(
                            h.coords()
                                .iter()
                                .zip(g.coords())
                                .map(|(a, b)| (a - b).max(BigInt::zero()))
                                .collect(),
                        )
                    })
                    .collect();
                let quotient = Self::from_trusted(self.ring.clone(), gens);
                acc = acc.intersect(&quotient)?;
            }
            return Ok(acc);
        }
        let start = self.gens.iter().map(|h| self.ring.degree(h)).max().unwrap_or_default()
            + self.ring.ray_degree_sum();
        let gens = upset_generators(&self.ring, &start, |m| {
            other.gens.iter().all(|g| self.contains_unchecked(&(m + g)))
        })?;
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens,
        })
    }

    /// `I^{[q]}`, generated by the `q`-th powers of the generators.
    pub fn bracket_power(&self, q: u64) -> Result<MonomialIdeal> {
        if q == 0 {
            return Err(Error::InvalidParameter("bracket power needs q >= 1".into()));
        }
        let k = BigInt::from(q);
        let gens = self.gens.iter().map(|g| g.scaled(&k)).collect();
        Ok(Self::from_trusted(self.ring.clone(), gens))
    }

    /// `I^{[1/q]}`: the smallest monomial ideal whose `q`-th bracket power
    /// contains `I`, by componentwise floor division (polynomial rings).
    pub fn frobenius_root(&self, q: u64) -> Result<MonomialIdeal> {
        self.require_orthant("frobenius_root")?;
        if q == 0 {
            return Err(Error::InvalidParameter("frobenius root needs q >= 1".into()));
        }
        let k = BigInt::from(q);
        let gens = self
            .gens
            .iter()
            .map(|g| LatticeVector::new(g.coords().iter().map(|c| c.div_floor(&k)).collect()))
            .collect();
        Ok(Self::from_trusted(self.ring.clone(), gens))
    }

    /// Integral closure: the monomials with exponent in the Newton
    /// polyhedron.
    pub fn integral_closure(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let p = NewtonPolyhedron::new(self)?;
        // A minimal lattice point of P lies within one half-open
        // fundamental parallelepiped of a point of conv(vertices).
        let top = p
            .vertices()
            .iter()
            .map(|v| crate::lattice::ceil(&v.dot_lattice(self.ring.degree_functional())))
            .max()
            .unwrap_or_default();
        let start = top + self.ring.ray_degree_sum();
        let gens = upset_generators(&self.ring, &start, |m| p.contains_lattice(m, false))?;
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens,
        })
    }

    /// Image of `I` in `R / x_axis R ≅ k[other variables]` (polynomial rings,
    /// `d >= 2`; `axis` is zero-based).
    pub fn kill_variable(&self, axis: usize) -> Result<MonomialIdeal> {
        self.require_orthant("kill_variable")?;
        let d = self.ring.dim();
        if axis >= d {
            return Err(Error::InvalidParameter(format!("axis {axis} out of range for d = {d}")));
        }
        if d < 2 {
            return Err(Error::InvalidParameter("cannot kill the only variable".into()));
        }
        let quotient = Arc::new(ToricRing::polynomial(d - 1)?);
        let gens = self
            .gens
            .iter()
            .filter(|g| g.coords()[axis].is_zero())
            .map(|g| g.without(axis))
            .collect();
        Ok(Self::from_trusted(quotient, gens))
    }

    /// Smallest `ℓ`-degree of a generator, or `None` for the zero ideal.
    pub fn order(&self) -> Option<BigInt> {
        self.gens.iter().map(|g| self.ring.degree(g)).min()
    }
}
