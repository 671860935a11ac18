//! Lattice points of `σ∨ ∩ M` by `ℓ`-degree, and the generator search for
//! up-closed sets of monomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::antichain::Points;
use crate::error::{Error, Result};
use crate::lattice::{ceil, floor, LatticeVector};
use crate::toric::ToricRing;

const MAX_DOUBLINGS: usize = 10;

/// All points of `σ∨ ∩ M` with `ℓ(m) <= max_degree`, sorted by degree and
/// then lexicographically.
pub fn points_up_to(ring: &ToricRing, max_degree: &BigInt) -> Result<Vec<LatticeVector>> {
    if max_degree.is_negative() {
        return Ok(Vec::new());
    }
    let d = ring.dim();
    // The region is the polytope conv(0, D ρ / ℓ(ρ)) over the extreme rays ρ.
    let mut lo = vec![BigInt::zero(); d];
    let mut hi = vec![BigInt::zero(); d];
    for ray in ring.sigma_dual().rays() {
        let deg = ring.degree(ray);
        for i in 0..d {
            let c = BigRational::new(max_degree * &ray.coords()[i], deg.clone());
            lo[i] = lo[i].clone().min(floor(&c));
            hi[i] = hi[i].clone().max(ceil(&c));
        }
    }
    let too_big = || Error::EnumerationBound(max_degree.clone());
    let lo: Vec<i64> = lo.iter().map(|x| x.to_i64().ok_or_else(too_big)).collect::<Result<_>>()?;
    let hi: Vec<i64> = hi.iter().map(|x| x.to_i64().ok_or_else(too_big)).collect::<Result<_>>()?;

    let halfspaces: Vec<Vec<i64>> = ring
        .sigma_dual()
        .halfspaces()
        .iter()
        .map(|h| h.to_i64s().ok_or_else(too_big))
        .collect::<Result<_>>()?;
    let ell = ring.degree_functional().to_i64s().ok_or_else(too_big)?;
    let cap = max_degree.to_i64().ok_or_else(too_big)?;

    let mut out: Vec<(i64, Vec<i64>)> = Vec::new();
    let mut cur = lo.clone();
    loop {
        let inside = halfspaces.iter().all(|h| dot_i64(h, &cur) >= 0);
        if inside {
            let deg = dot_i64(&ell, &cur);
            if deg <= cap {
                out.push((deg, cur.clone()));
            }
        }
        // odometer step
        let mut i = 0;
        loop {
            if i == d {
                out.sort();
                return Ok(out.into_iter().map(|(_, c)| LatticeVector::from_i64s(&c)).collect());
            }
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }
}

fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Minimal generators of an up-closed set `U ⊆ σ∨ ∩ M` given by membership
/// predicate.
///
/// Points are scanned by increasing degree up to a bound `D` (initially
/// `start`). The answer is accepted once every member of degree in
/// `(D, D + ĝ]` is divisible by a generator already found, `ĝ` being the
/// largest degree of an extreme ray of `σ∨`; otherwise `D` doubles.
pub fn upset_generators<F>(ring: &ToricRing, start: &BigInt, member: F) -> Result<Vec<LatticeVector>>
where
    F: Fn(&LatticeVector) -> bool,
{
    let step = ring.max_ray_degree().clone();
    let mut bound = start.clone().max(BigInt::zero());
    for _ in 0..MAX_DOUBLINGS {
        let pts = points_up_to(ring, &(&bound + &step))?;
        let mut gens: Vec<LatticeVector> = Vec::new();
        let mut vals: Vec<Vec<BigInt>> = Vec::new();
        let mut saturated = true;
        for p in &pts {
            let pv = ring.valuations(p);
            let covered = vals.iter().any(|g| g.iter().zip(&pv).all(|(a, b)| a <= b));
            if covered {
                continue;
            }
            if member(p) {
                if ring.degree(p) <= bound {
                    gens.push(p.clone());
                    vals.push(pv);
                } else {
                    saturated = false;
                    break;
                }
            }
        }
        if saturated {
            gens.sort();
            return Ok(gens);
        }
        bound = (&bound * 2u32).max(&bound + 1u32);
    }
    Err(Error::EnumerationBound(bound))
}

/// [`upset_generators`] for `{m ∈ N^d : <m, a_k> >= θ_k}` in a polynomial
/// ring with nonnegative normals `a_k`, with the same bound doubling and
/// saturation rule.
///
/// Each minimal element is `(m', f(m'))` with `f(m')` the least admissible
/// last coordinate over the prefix `m'`, so only prefixes are scanned.
/// Returns `None` when the data does not fit this shape or 64 bits.
pub(crate) fn orthant_threshold_generators(
    normals: &[LatticeVector],
    thresholds: &[BigInt],
    start: &BigInt,
) -> Option<Result<Vec<LatticeVector>>> {
    let d = normals.first()?.dim();
    let normals: Vec<Vec<i64>> = normals.iter().map(|a| a.to_i64s()).collect::<Option<_>>()?;
    if normals.iter().flatten().any(|&c| c < 0 || c > 1 << 20) {
        return None;
    }
    let thresholds: Vec<i64> = thresholds.iter().map(|t| t.to_i64()).collect::<Option<_>>()?;
    if thresholds.iter().any(|t| t.abs() > 1 << 40) {
        return None;
    }
    let mut bound = start.to_i64()?.max(0);
    for _ in 0..MAX_DOUBLINGS {
        let cap = bound.checked_add(1)?;
        if cap > 1 << 20 {
            return Some(Err(Error::EnumerationBound(BigInt::from(bound))));
        }
        let mut cands = Points::new(d);
        let mut prefix = vec![0i64; d];
        column_minima(&normals, &thresholds, &mut prefix, 0, cap, &mut cands);
        let minimal = cands.minimal();
        if minimal.iter().all(|p| p.iter().sum::<i64>() <= bound) {
            let mut gens: Vec<LatticeVector> = minimal.iter().map(LatticeVector::from_i64s).collect();
            gens.sort();
            return Some(Ok(gens));
        }
        bound = bound.checked_mul(2)?.max(bound + 1);
    }
    Some(Err(Error::EnumerationBound(BigInt::from(bound))))
}

/// Pushes `(m', f(m'))` for every prefix `m'` with `|m'| + f(m') <= cap`.
fn column_minima(normals: &[Vec<i64>], thresholds: &[i64], prefix: &mut Vec<i64>, i: usize, cap: i64, out: &mut Points) {
    let d = prefix.len();
    let used: i64 = prefix[..i].iter().sum();
    if i + 1 < d {
        for c in 0..=cap - used {
            prefix[i] = c;
            column_minima(normals, thresholds, prefix, i + 1, cap, out);
        }
        prefix[i] = 0;
        return;
    }
    let mut last = 0i64;
    for (a, &th) in normals.iter().zip(thresholds) {
        let s: i64 = a[..d - 1].iter().zip(&prefix[..d - 1]).map(|(x, y)| x * y).sum();
        let need = th - s;
        if need <= 0 {
            continue;
        }
        if a[d - 1] == 0 {
            return;
        }
        last = last.max((need + a[d - 1] - 1) / a[d - 1]);
    }
    if used + last <= cap {
        prefix[d - 1] = last;
        out.push(prefix);
        prefix[d - 1] = 0;
    }
}
