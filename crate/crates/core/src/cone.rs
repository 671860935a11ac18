//! Rational polyhedral cones and the double-description conversion between
//! half-space and ray representations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{independent_subset, kernel_vector, primitivize, rank, LatticeVector};

/// A full-dimensional strongly convex cone with both representations.
///
/// `halfspaces` are primitive inner facet normals: the cone is
/// `{x : <x, h> >= 0 for all h}`. `rays` are its primitive extreme rays.
/// Both lists are sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    rays: Vec<LatticeVector>,
    halfspaces: Vec<LatticeVector>,
}

struct Ray {
    v: LatticeVector,
    tight: BTreeSet<usize>,
}

fn common_dim(vs: &[LatticeVector]) -> Result<usize> {
    let d = vs.first().ok_or(Error::Empty)?.dim();
    if d == 0 {
        return Err(Error::InvalidParameter("rank-0 lattice".into()));
    }
    for v in vs {
        if v.dim() != d {
            return Err(Error::LengthMismatch {
                expected: d,
                got: v.dim(),
            });
        }
    }
    Ok(d)
}

/// Extreme rays of the cone `{x : <x, h> >= 0 for every h in halfspaces}`.
///
/// Incremental double description: start from the simplicial cone cut out
/// by `d` independent half-spaces, then insert the remaining ones, combining
/// each pair of rays on opposite sides that are adjacent (their common tight
/// constraints have rank `d - 2`). The result is the complete irredundant
/// list of primitive extreme rays, sorted.
pub fn dual_extreme_rays(halfspaces: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    let d = common_dim(halfspaces)?;
    let hs: Vec<LatticeVector> = halfspaces
        .iter()
        .filter(|h| !h.is_zero())
        .map(primitivize)
        .collect::<Result<_>>()?;
    if rank(&hs) < d {
        return Err(Error::NotPointed);
    }
    let basis = independent_subset(&hs);
    debug_assert_eq!(basis.len(), d);

    let mut rays: Vec<Ray> = Vec::with_capacity(d);
    for &j in &basis {
        let others: Vec<LatticeVector> =
            basis.iter().filter(|&&i| i != j).map(|&i| hs[i].clone()).collect();
        let mut v = kernel_vector(&others, d).ok_or(Error::NotPointed)?;
        if v.dot(&hs[j]).is_negative() {
            v = -&v;
        }
        let tight = basis.iter().copied().filter(|&i| i != j).collect();
        rays.push(Ray { v, tight });
    }

    let rest: Vec<usize> = (0..hs.len()).filter(|i| !basis.contains(i)).collect();
    for k in rest {
        let h = &hs[k];
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut next = Vec::new();
        for ray in rays {
            let s = ray.v.dot(h);
            if s.is_positive() {
                pos.push((s, ray));
            } else if s.is_negative() {
                neg.push((s, ray));
            } else {
                let mut tight = ray.tight;
                tight.insert(k);
                next.push(Ray { v: ray.v, tight });
            }
        }
        if d >= 2 {
            for (sp, p) in &pos {
                for (sn, n) in &neg {
                    let common: BTreeSet<usize> = p.tight.intersection(&n.tight).copied().collect();
                    if common.len() + 2 < d {
                        continue;
                    }
                    if rank(common.iter().map(|&i| &hs[i])) != d - 2 {
                        continue;
                    }
                    let combo = &n.v.scaled(sp) - &p.v.scaled(sn);
                    let mut tight = common;
                    tight.insert(k);
                    next.push(Ray {
                        v: primitivize(&combo)?,
                        tight,
                    });
                }
            }
        }
        next.extend(pos.into_iter().map(|(_, r)| r));
        rays = next;
    }

    let mut out: Vec<LatticeVector> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    if rank(&out) < d {
        return Err(Error::NotFullDimensional);
    }
    Ok(out)
}

impl Cone {
    /// The cone generated by `generators`, each of which must be an extreme ray.
    pub fn from_rays(generators: &[LatticeVector]) -> Result<Cone> {
        let dim = common_dim(generators)?;
        let mut rays: Vec<LatticeVector> = generators.iter().map(primitivize).collect::<Result<_>>()?;
        rays.sort();
        rays.dedup();
        // Facets of cone(rays) are the extreme rays of its dual, so the
        // error roles swap.
        let halfspaces = dual_extreme_rays(&rays).map_err(|e| match e {
            Error::NotPointed => Error::NotFullDimensional,
            Error::NotFullDimensional => Error::NotPointed,
            other => other,
        })?;
        let extreme = dual_extreme_rays(&halfspaces)?;
        if let Some(extra) = rays.iter().find(|r| extreme.binary_search(r).is_err()) {
            return Err(Error::RedundantGenerator(extra.coords().to_vec()));
        }
        Ok(Cone {
            dim,
            rays: extreme,
            halfspaces,
        })
    }

    /// The cone `{x : <x, h> >= 0}`, with redundant inequalities removed.
    pub fn from_halfspaces(halfspaces: &[LatticeVector]) -> Result<Cone> {
        let dim = common_dim(halfspaces)?;
        let rays = dual_extreme_rays(halfspaces)?;
        let facets = dual_extreme_rays(&rays)?;
        Ok(Cone {
            dim,
            rays,
            halfspaces: facets,
        })
    }

    /// The dual cone: rays and facet normals trade places.
    pub fn dual(&self) -> Cone {
        Cone {
            dim: self.dim,
            rays: self.halfspaces.clone(),
            halfspaces: self.rays.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn halfspaces(&self) -> &[LatticeVector] {
        &self.halfspaces
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        self.halfspaces.iter().all(|h| !v.dot(h).is_negative())
    }

    /// True when the cone is the standard nonnegative orthant.
    pub fn is_standard_orthant(&self) -> bool {
        self.rays.len() == self.dim
            && (0..self.dim).all(|i| self.rays.contains(&LatticeVector::unit(self.dim, i)))
    }

    /// See [`gorenstein_vector`].
    pub fn gorenstein_vector(&self) -> Result<(crate::lattice::RationalVector, BigInt)> {
        gorenstein_vector(&self.rays)
    }
}

/// The unique `w` with `<w, n_i> = 1` for every generator `n_i`, and the
/// least positive `r` with `r w` integral.
pub fn gorenstein_vector(generators: &[LatticeVector]) -> Result<(crate::lattice::RationalVector, BigInt)> {
    common_dim(generators)?;
    let ones = vec![num_rational::BigRational::one(); generators.len()];
    let w = crate::lattice::solve_unique(generators, &ones)?.ok_or(Error::NotQGorenstein)?;
    let r = w.denominator_lcm();
    debug_assert!(!r.is_zero());
    Ok((w, r))
}
