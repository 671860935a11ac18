//! Newton polyhedra `P(a) = conv(exponents of a) + σ∨` and their rational
//! multiples.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cone::{dual_extreme_rays, Cone};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{LatticeVector, RationalVector};

/// The inequality `<x, normal> >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: LatticeVector,
    pub rhs: BigRational,
}

impl Facet {
    pub fn evaluate(&self, p: &RationalVector) -> BigRational {
        p.dot_lattice(&self.normal)
    }
}

/// `t · P(a)` with both representations.
///
/// The facet list is irredundant and every normal is primitive, so two
/// polyhedra are equal exactly when their facet lists agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    generators_used: Vec<LatticeVector>,
    recession: Cone,
    vertices: Vec<RationalVector>,
    rays: Vec<LatticeVector>,
    inequalities: Vec<Facet>,
    scale: BigRational,
}

impl NewtonPolyhedron {
    /// `P(a)`, computed by homogenizing to the cone over
    /// `{(g, 1)} ∪ {(ρ, 0)}` and running double description twice.
    pub fn new(ideal: &MonomialIdeal) -> Result<NewtonPolyhedron> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let ring = ideal.ring();
        let d = ring.dim();
        let lift = |v: &LatticeVector, h: i64| {
            let mut c = v.coords().to_vec();
            c.push(BigInt::from(h));
            LatticeVector::new(c)
        };
        let mut homogeneous: Vec<LatticeVector> = ideal.gens().iter().map(|g| lift(g, 1)).collect();
        homogeneous.extend(ring.sigma_dual().rays().iter().map(|r| lift(r, 0)));

        let facet_normals = dual_extreme_rays(&homogeneous)?;
        let mut inequalities = Vec::new();
        for f in &facet_normals {
            let normal = LatticeVector::new(f.coords()[..d].to_vec());
            if normal.is_zero() {
                // the face at infinity, x_{d+1} >= 0
                continue;
            }
            let g = normal.coords().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
            let rhs = -&f.coords()[d] / &g;
            inequalities.push(Facet {
                normal: LatticeVector::new(normal.coords().iter().map(|c| c / &g).collect()),
                rhs: BigRational::from_integer(rhs),
            });
        }
        inequalities.sort();

        let extreme = dual_extreme_rays(&facet_normals)?;
        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        for e in extreme {
            let h = e.coords()[d].clone();
            let x = LatticeVector::new(e.coords()[..d].to_vec());
            if h.is_positive() {
                vertices.push(RationalVector::new(
                    x.coords().iter().map(|c| BigRational::new(c.clone(), h.clone())).collect(),
                ));
            } else {
                rays.push(x);
            }
        }
        vertices.sort();
        rays.sort();

        Ok(NewtonPolyhedron {
            dim: d,
            generators_used: ideal.gens().to_vec(),
            recession: ring.sigma_dual().clone(),
            vertices,
            rays,
            inequalities,
            scale: BigRational::one(),
        })
    }

    /// `t · P`. Vertices and right-hand sides scale, rays do not; `t = 0`
    /// gives the recession cone itself.
    pub fn scale(&self, t: &BigRational) -> Result<NewtonPolyhedron> {
        if t.is_negative() {
            return Err(Error::NegativeScale);
        }
        if t.is_zero() {
            let inequalities = self
                .recession
                .halfspaces()
                .iter()
                .map(|h| Facet {
                    normal: h.clone(),
                    rhs: BigRational::zero(),
                })
                .collect();
            return Ok(NewtonPolyhedron {
                vertices: vec![RationalVector::zero(self.dim)],
                rays: self.recession.rays().to_vec(),
                inequalities,
                scale: BigRational::zero(),
                ..self.clone()
            });
        }
        Ok(NewtonPolyhedron {
            vertices: self.vertices.iter().map(|v| v.scaled(t)).collect(),
            inequalities: self
                .inequalities
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    rhs: &f.rhs * t,
                })
                .collect(),
            scale: &self.scale * t,
            ..self.clone()
        })
    }

    /// Closed (`strict = false`) or interior (`strict = true`) membership.
    pub fn contains(&self, p: &RationalVector, strict: bool) -> Result<bool> {
        if p.dim() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                got: p.dim(),
            });
        }
        Ok(self.inequalities.iter().all(|f| {
            let v = f.evaluate(p);
            if strict {
                v > f.rhs
            } else {
                v >= f.rhs
            }
        }))
    }

    pub(crate) fn contains_lattice(&self, m: &LatticeVector, strict: bool) -> bool {
        self.inequalities.iter().all(|f| {
            let v = BigRational::from_integer(m.dot(&f.normal));
            if strict {
                v > f.rhs
            } else {
                v >= f.rhs
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators_used(&self) -> &[LatticeVector] {
        &self.generators_used
    }

    pub fn recession(&self) -> &Cone {
        &self.recession
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn inequalities(&self) -> &[Facet] {
        &self.inequalities
    }

    pub fn scale_factor(&self) -> &BigRational {
        &self.scale
    }

    /// Same point set: identical facet systems.
    pub fn same_region(&self, other: &NewtonPolyhedron) -> bool {
        self.inequalities == other.inequalities
    }
}
