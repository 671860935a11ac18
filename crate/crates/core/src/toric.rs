//! Q-Gorenstein toric rings `R = k[σ∨ ∩ M]` with `M = Z^d`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::cone::{gorenstein_vector, Cone};
use crate::error::{Error, Result};
use crate::lattice::{primitivize, LatticeVector, RationalVector};

/// A toric ring given by the primitive generators `n_1, ..., n_s` of `σ`.
///
/// Besides the two cones this caches the Q-Gorenstein vector `w`, the
/// Gorenstein index, and the grading functional `ℓ = Σ n_i`, which is
/// strictly positive on `σ∨ \ {0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricRing {
    sigma: Cone,
    sigma_dual: Cone,
    w: RationalVector,
    gorenstein_index: BigInt,
    degree_functional: LatticeVector,
    max_ray_degree: BigInt,
    orthant: bool,
}

impl ToricRing {
    /// Builds the ring from the generators of `σ`. Refuses rings that are not
    /// Q-Gorenstein, cones that are not full-dimensional or strongly convex,
    /// and generators that are not extreme rays.
    pub fn new(cone_generators: &[LatticeVector]) -> Result<ToricRing> {
        if cone_generators.is_empty() {
            return Err(Error::Empty);
        }
        let prims: Vec<LatticeVector> = cone_generators.iter().map(primitivize).collect::<Result<_>>()?;
        let (w, gorenstein_index) = gorenstein_vector(&prims)?;
        let sigma = Cone::from_rays(&prims)?;
        let sigma_dual = sigma.dual();
        let d = sigma.dim();
        let degree_functional = sigma
            .rays()
            .iter()
            .fold(LatticeVector::zero(d), |acc, n| &acc + n);
        let max_ray_degree = sigma_dual
            .rays()
            .iter()
            .map(|r| r.dot(&degree_functional))
            .max()
            .expect("full-dimensional cone has rays");
        let orthant = sigma.is_standard_orthant();
        Ok(ToricRing {
            sigma,
            sigma_dual,
            w,
            gorenstein_index,
            degree_functional,
            max_ray_degree,
            orthant,
        })
    }

    /// The polynomial ring `k[x_1, ..., x_d]`.
    pub fn polynomial(d: usize) -> Result<ToricRing> {
        if d == 0 {
            return Err(Error::InvalidParameter("polynomial ring needs d >= 1".into()));
        }
        let gens: Vec<LatticeVector> = (0..d).map(|i| LatticeVector::unit(d, i)).collect();
        ToricRing::new(&gens)
    }

    /// The `r`-th Veronese subring of `k[x_1, ..., x_d]`, written in the basis
    /// `e_1 - e_d, ..., e_{d-1} - e_d, r e_d` of the sublattice of exponents
    /// with degree divisible by `r`.
    ///
    /// In these coordinates `σ` is generated by `e_1, ..., e_{d-1}` and
    /// `(-1, ..., -1, r)`; use [`ToricRing::veronese_exponent`] to translate
    /// ordinary exponents.
    pub fn veronese(d: usize, r: u64) -> Result<ToricRing> {
        if d == 0 || r == 0 {
            return Err(Error::InvalidParameter("veronese needs d >= 1 and r >= 1".into()));
        }
        let mut gens: Vec<LatticeVector> = (0..d - 1).map(|i| LatticeVector::unit(d, i)).collect();
        let mut last = vec![-1i64; d];
        last[d - 1] = r as i64;
        gens.push(LatticeVector::from_i64s(&last));
        ToricRing::new(&gens)
    }

    /// Coordinates in the [`ToricRing::veronese`] model of the ordinary
    /// exponent `e`, or `None` when `r` does not divide its degree.
    pub fn veronese_exponent(e: &[i64], r: u64) -> Option<LatticeVector> {
        let total: i64 = e.iter().sum();
        if total.rem_euclid(r as i64) != 0 {
            return None;
        }
        let mut c = e.to_vec();
        let last = c.len() - 1;
        c[last] = total / r as i64;
        Some(LatticeVector::from_i64s(&c))
    }

    pub fn dim(&self) -> usize {
        self.sigma.dim()
    }

    pub fn sigma(&self) -> &Cone {
        &self.sigma
    }

    pub fn sigma_dual(&self) -> &Cone {
        &self.sigma_dual
    }

    /// The primitive generators `n_i` of `σ`.
    pub fn cone_generators(&self) -> &[LatticeVector] {
        self.sigma.rays()
    }

    pub fn w(&self) -> &RationalVector {
        &self.w
    }

    pub fn gorenstein_index(&self) -> &BigInt {
        &self.gorenstein_index
    }

    /// `ℓ = Σ n_i`.
    pub fn degree_functional(&self) -> &LatticeVector {
        &self.degree_functional
    }

    /// Largest `ℓ`-degree of a primitive extreme ray of `σ∨`.
    pub fn max_ray_degree(&self) -> &BigInt {
        &self.max_ray_degree
    }

    /// Sum of the `ℓ`-degrees of all extreme rays of `σ∨`.
    pub fn ray_degree_sum(&self) -> BigInt {
        self.sigma_dual.rays().iter().map(|r| self.degree(r)).sum()
    }

    /// True when `σ∨` is the standard orthant, i.e. `R` is a polynomial ring
    /// in the given coordinates.
    pub fn is_orthant(&self) -> bool {
        self.orthant
    }

    pub fn degree(&self, m: &LatticeVector) -> BigInt {
        m.dot(&self.degree_functional)
    }

    /// `m ∈ σ∨ ∩ M`.
    pub fn in_semigroup(&self, m: &LatticeVector) -> bool {
        m.dim() == self.dim() && self.sigma_dual.contains(m)
    }

    /// `x^g` divides `x^h` in `R`: `h - g ∈ σ∨ ∩ M`.
    pub fn divides(&self, g: &LatticeVector, h: &LatticeVector) -> bool {
        self.sigma
            .rays()
            .iter()
            .all(|n| !(h.dot(n) - g.dot(n)).is_negative())
    }

    /// Coordinates `(<m, n_1>, ..., <m, n_s>)`; divisibility is the product
    /// order on these.
    pub fn valuations(&self, m: &LatticeVector) -> Vec<BigInt> {
        self.sigma.rays().iter().map(|n| m.dot(n)).collect()
    }

    pub(crate) fn check_point(&self, m: &LatticeVector) -> Result<()> {
        if m.dim() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                got: m.dim(),
            });
        }
        if !self.sigma_dual.contains(m) {
            return Err(Error::OutsideSemigroup(m.coords().to_vec()));
        }
        Ok(())
    }

    /// Gorenstein index 1.
    pub fn is_gorenstein(&self) -> bool {
        self.gorenstein_index.is_one()
    }
}
