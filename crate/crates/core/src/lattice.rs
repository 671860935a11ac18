//! Exact vectors of `M = Z^d`, `N = Hom(M, Z)` and `M_R`, plus the small
//! amount of exact linear algebra the cone code needs.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An integer vector, either an exponent `m ∈ M` or a dual vector `n ∈ N`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<BigInt>);

/// A vector of `M_R` with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(Vec<BigRational>);

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        LatticeVector(vec![BigInt::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[axis] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Coordinates as `i64`, when they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Dot product. Callers guarantee equal lengths; see [`pairing`] for
    /// the checked public form.
    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, k: &BigInt) -> LatticeVector {
        LatticeVector(self.0.iter().map(|c| c * k).collect())
    }

    /// Componentwise maximum (the exponent of an lcm).
    pub fn join(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        )
    }

    /// Componentwise `>=`.
    pub fn dominates(&self, other: &LatticeVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector(self.0.iter().cloned().map(BigRational::from_integer).collect())
    }

    /// Drops coordinate `axis`.
    pub fn without(&self, axis: usize) -> LatticeVector {
        let mut c = self.0.clone();
        c.remove(axis);
        LatticeVector(c)
    }
}

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        RationalVector(vec![BigRational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn scaled(&self, k: &BigRational) -> RationalVector {
        RationalVector(self.0.iter().map(|c| c * k).collect())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Returns the vector as a lattice vector when every coordinate is integral.
    pub fn to_lattice(&self) -> Option<LatticeVector> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(LatticeVector)
    }

    pub fn dot_lattice(&self, n: &LatticeVector) -> BigRational {
        debug_assert_eq!(self.dim(), n.dim());
        self.0
            .iter()
            .zip(n.coords())
            .map(|(a, b)| a * BigRational::from_integer(b.clone()))
            .sum()
    }
}

impl From<LatticeVector> for RationalVector {
    fn from(v: LatticeVector) -> Self {
        v.to_rational()
    }
}

impl<'a> Add<&'a LatticeVector> for &'a LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a LatticeVector> for &'a LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }
}

impl<'a> Add<&'a RationalVector> for &'a RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: &RationalVector) -> RationalVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a RationalVector> for &'a RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: &RationalVector) -> RationalVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The duality pairing `<m, n>` of `M_R` with `N`.
pub fn pairing(m: &RationalVector, n: &LatticeVector) -> Result<BigRational> {
    if m.dim() != n.dim() {
        return Err(Error::LengthMismatch {
            expected: m.dim(),
            got: n.dim(),
        });
    }
    Ok(m.dot_lattice(n))
}

/// Divides `v` by the gcd of its coordinates. The sign of every coordinate
/// is kept.
pub fn primitivize(v: &LatticeVector) -> Result<LatticeVector> {
    let g = v.coords().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(LatticeVector(v.coords().iter().map(|c| c / &g).collect()))
}

#[cfg(test)]
pub(crate) fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Least integer `>= x`.
pub(crate) fn ceil(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

/// Greatest integer `<= x`.
pub(crate) fn floor(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

/// Row-reduces a copy of `rows` over Q and returns the reduced rows together
/// with the pivot column of each.
fn row_reduce(rows: &[Vec<BigRational>]) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let delta = &f * &m[r][j];
                    m[i][j] = &m[i][j] - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

fn to_rational_rows<'a, I>(rows: I) -> Vec<Vec<BigRational>>
where
    I: IntoIterator<Item = &'a LatticeVector>,
{
    rows.into_iter()
        .map(|v| v.coords().iter().cloned().map(BigRational::from_integer).collect())
        .collect()
}

/// Rank of a set of integer vectors.
pub fn rank<'a, I>(rows: I) -> usize
where
    I: IntoIterator<Item = &'a LatticeVector>,
{
    let rows = to_rational_rows(rows);
    if rows.is_empty() {
        return 0;
    }
    row_reduce(&rows).1.len()
}

/// Indices of a maximal linearly independent subset, chosen greedily in order.
pub(crate) fn independent_subset(rows: &[LatticeVector]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..rows.len() {
        let candidate = chosen.iter().map(|&j| &rows[j]).chain(std::iter::once(&rows[i]));
        if rank(candidate) == chosen.len() + 1 {
            chosen.push(i);
        }
    }
    chosen
}

/// Solves `A x = b` over Q. Returns `None` when the system is inconsistent
/// and `Err(NotFullDimensional)` when the solution is not unique.
pub(crate) fn solve_unique(a: &[LatticeVector], b: &[BigRational]) -> Result<Option<RationalVector>> {
    let n = a.first().map_or(0, LatticeVector::dim);
    let augmented: Vec<Vec<BigRational>> = to_rational_rows(a)
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs.clone());
            row
        })
        .collect();
    let (reduced, pivots) = row_reduce(&augmented);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    if pivots.len() < n {
        return Err(Error::NotFullDimensional);
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &c) in reduced.iter().zip(&pivots) {
        x[c] = row[n].clone();
    }
    Ok(Some(RationalVector::new(x)))
}

/// Primitive integer vector spanning the one-dimensional kernel of `rows`
/// (which must have rank `d - 1`), with unspecified sign.
pub(crate) fn kernel_vector(rows: &[LatticeVector], dim: usize) -> Option<LatticeVector> {
    let (reduced, pivots) = row_reduce(&to_rational_rows(rows));
    if pivots.len() + 1 != dim {
        return None;
    }
    let free = (0..dim).find(|c| !pivots.contains(c))?;
    let mut x = vec![BigRational::zero(); dim];
    x[free] = BigRational::one();
    for (row, &c) in reduced.iter().zip(&pivots) {
        x[c] = -row[free].clone();
    }
    let lcm = x.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = x
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    primitivize(&LatticeVector(ints)).ok()
}
