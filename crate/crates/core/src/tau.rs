//! Test ideals `τ(a^t)` of monomial ideals: `x^m ∈ τ(a^t)` exactly when
//! `m + w` lies in the interior of `t · P(a)`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::enumerate::{orthant_threshold_generators, upset_generators};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{ceil, floor, LatticeVector};
use crate::polyhedron::NewtonPolyhedron;
use crate::toric::ToricRing;

/// A nonzero monomial ideal `a` together with an exponent `t >= 0`.
#[derive(Clone, Debug)]
pub struct TauRequest {
    ideal: MonomialIdeal,
    t: BigRational,
}

impl TauRequest {
    pub fn new(ideal: MonomialIdeal, t: BigRational) -> Result<TauRequest> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if t.is_negative() {
            return Err(Error::NegativeScale);
        }
        Ok(TauRequest { ideal, t })
    }

    pub fn ring(&self) -> &Arc<ToricRing> {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn t(&self) -> &BigRational {
        &self.t
    }
}

/// The interior test `m + w ∈ Int(t P)` compiled to integer thresholds:
/// for integral `m` it reads `<m, a_k> >= floor(t b_k - <w, a_k>) + 1`.
struct InteriorCriterion {
    normals: Vec<LatticeVector>,
    thresholds: Vec<BigInt>,
}

impl InteriorCriterion {
    fn new(scaled: &NewtonPolyhedron, ring: &ToricRing) -> Self {
        let (normals, thresholds) = scaled
            .inequalities()
            .iter()
            .map(|f| {
                let slack = &f.rhs - ring.w().dot_lattice(&f.normal);
                (f.normal.clone(), floor(&slack) + 1)
            })
            .unzip();
        InteriorCriterion { normals, thresholds }
    }

    fn holds(&self, m: &LatticeVector) -> bool {
        self.normals
            .iter()
            .zip(&self.thresholds)
            .all(|(a, b)| &m.dot(a) >= b)
    }
}

/// `τ(a^t)`.
///
/// `t = 0` returns the unit ideal. Otherwise minimal generators are found by
/// scanning `σ∨ ∩ M` by `ℓ`-degree up to
/// `⌈max_v ℓ(v + w)⌉ + ĝ` (over the vertices `v` of `t P(a)`), with the
/// saturation check of [`upset_generators`]; failure to saturate is an
/// error rather than a truncated answer.
pub fn tau(req: &TauRequest) -> Result<MonomialIdeal> {
    let ring = req.ring().clone();
    if req.t.is_zero() {
        return Ok(MonomialIdeal::unit(ring));
    }
    let scaled = NewtonPolyhedron::new(&req.ideal)?.scale(&req.t)?;
    let criterion = InteriorCriterion::new(&scaled, &ring);
    let start = search_start(&scaled, &ring);
    if ring.is_orthant() {
        if let Some(gens) = orthant_threshold_generators(&criterion.normals, &criterion.thresholds, &start) {
            return MonomialIdeal::new(ring, gens?);
        }
    }
    let gens = upset_generators(&ring, &start, |m| criterion.holds(m))?;
    MonomialIdeal::new(ring, gens)
}

/// `⌈max_v ℓ(v + w)⌉ + ĝ` over the vertices `v` of `scaled`.
pub(crate) fn search_start(scaled: &NewtonPolyhedron, ring: &ToricRing) -> BigInt {
    let ell = ring.degree_functional();
    let top = scaled
        .vertices()
        .iter()
        .map(|v| ceil(&(v + ring.w()).dot_lattice(ell)))
        .max()
        .unwrap_or_default();
    top + ring.max_ray_degree()
}

/// `τ(a^t) = R`, decided by the single interior test at `m = 0`.
pub fn tau_is_unit(req: &TauRequest) -> Result<bool> {
    if req.t.is_zero() {
        return Ok(true);
    }
    let scaled = NewtonPolyhedron::new(&req.ideal)?.scale(&req.t)?;
    scaled.contains(req.ring().w(), true)
}

/// Exponent `e` with `τ(m^l) = m^e` in the `r`-th Veronese subring of
/// `k[x_1, ..., x_d]`: `e = ⌈l - (d - 1) / r⌉`, clamped at 0.
pub fn tau_veronese(d: u64, r: u64, l: u64) -> Result<u64> {
    if d == 0 || r == 0 || l == 0 {
        return Err(Error::InvalidParameter("tau_veronese needs d, r, l >= 1".into()));
    }
    // ⌈(l r - d + 1) / r⌉ with signed numerator
    let num = (l * r) as i128 - d as i128 + 1;
    let e = Integer::div_ceil(&num, &(r as i128));
    Ok(e.max(0) as u64)
}

/// The graded maximal ideal (all monomials of degree `r`) of the `r`-th
/// Veronese subring of `k[x_1, ..., x_d]`, in the coordinates of
/// [`ToricRing::veronese`].
pub fn veronese_maximal_ideal(d: usize, r: u64) -> Result<MonomialIdeal> {
    let ring = Arc::new(ToricRing::veronese(d, r)?);
    let mut gens = Vec::new();
    let mut e = vec![0i64; d];
    fill_degree(&mut e, 0, r as i64, &mut |c| {
        gens.push(ToricRing::veronese_exponent(c, r).expect("degree r"))
    });
    MonomialIdeal::new(ring, gens)
}

fn fill_degree(e: &mut Vec<i64>, i: usize, left: i64, out: &mut impl FnMut(&[i64])) {
    if i + 1 == e.len() {
        e[i] = left;
        out(e);
        return;
    }
    for k in 0..=left {
        e[i] = k;
        fill_degree(e, i + 1, left - k, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rational;

    fn k(d: usize) -> Arc<ToricRing> {
        Arc::new(ToricRing::polynomial(d).unwrap())
    }

    fn tau_of(ideal: &MonomialIdeal, t: BigRational) -> MonomialIdeal {
        tau(&TauRequest::new(ideal.clone(), t).unwrap()).unwrap()
    }

    #[test]
    fn maximal_ideal_cubed() {
        let r = k(2);
        let m = MonomialIdeal::variables(r.clone()).unwrap();
        assert_eq!(tau_of(&m.power(3), rational(1, 1)), m.power(2));
    }

    #[test]
    fn x2_y3_thresholds() {
        let r = k(2);
        let a = MonomialIdeal::from_i64s(r.clone(), &[&[2, 0], &[0, 3]]).unwrap();
        let m = MonomialIdeal::variables(r.clone()).unwrap();
        assert_eq!(tau_of(&a, rational(1, 1)), m);
        assert!(tau_of(&a, rational(1, 3)).is_unit());
        assert_eq!(tau_of(&a, rational(5, 6)), m);
        assert!(tau_of(&a, rational(0, 1)).is_unit());
    }

    #[test]
    fn unit_test_examples() {
        let m3 = MonomialIdeal::variables(k(3)).unwrap();
        assert!(tau_is_unit(&TauRequest::new(m3.power(2), rational(1, 1)).unwrap()).unwrap());
        let m2 = MonomialIdeal::variables(k(2)).unwrap();
        assert!(tau_is_unit(&TauRequest::new(m2, rational(1, 1)).unwrap()).unwrap());
        let a = MonomialIdeal::from_i64s(k(2), &[&[2, 0], &[0, 3]]).unwrap();
        assert!(!tau_is_unit(&TauRequest::new(a, rational(1, 1)).unwrap()).unwrap());
    }

    #[test]
    fn veronese_closed_form() {
        assert_eq!(tau_veronese(2, 2, 3).unwrap(), 3);
        assert_eq!(tau_veronese(3, 2, 2).unwrap(), 1);
        for r in 1..5 {
            for l in 1..6 {
                assert_eq!(tau_veronese(1, r, l).unwrap(), l);
            }
        }
        assert_eq!(tau_veronese(5, 1, 1).unwrap(), 0);
    }

    #[test]
    fn veronese_maximal_ideal_generators() {
        let m = veronese_maximal_ideal(2, 2).unwrap();
        assert_eq!(m.gens().len(), 3);
        let m = veronese_maximal_ideal(3, 2).unwrap();
        assert_eq!(m.gens().len(), 6);
    }

    #[test]
    fn request_validation() {
        let r = k(2);
        assert_eq!(
            TauRequest::new(MonomialIdeal::zero(r.clone()), rational(1, 1)).unwrap_err(),
            Error::ZeroIdeal
        );
        assert_eq!(
            TauRequest::new(MonomialIdeal::unit(r), rational(-1, 1)).unwrap_err(),
            Error::NegativeScale
        );
    }
}
