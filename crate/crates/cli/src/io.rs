//! JSON payloads: rings, ideals, rationals, and polyhedra.
//!
//! Rationals print as JSON integers when integral and as `"num/den"`
//! strings otherwise; both forms parse.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use tauideal::{BigInt, BigRational, LatticeVector, MonomialIdeal, NewtonPolyhedron, ToricRing};

use crate::CliError;

/// An exact rational.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn new(n: i64, d: i64) -> Rat {
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn integer(n: i64) -> Rat {
        Rat::new(n, 1)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Rat, CliError> {
        let bad = || CliError::Input(format!("not a rational: {s:?}"));
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err(bad());
        }
        Ok(Rat(BigRational::new(n, d)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match (self.0.is_integer(), i64::try_from(self.0.numer())) {
            (true, Ok(n)) => s.serialize_i64(n),
            _ => s.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        struct RatVisitor;

        impl Visitor<'_> for RatVisitor {
            type Value = Rat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"num/den\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rat, E> {
                Ok(Rat::integer(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rat, E> {
                Ok(Rat(BigRational::from_integer(BigInt::from(v))))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
                v.parse().map_err(|e: CliError| E::custom(e.to_string()))
            }
        }

        d.deserialize_any(RatVisitor)
    }
}

/// A toric ring: generators of `σ`, or a shape hint that determines them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone_generators: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape_hint: Option<String>,
}

/// The parsed form of a shape hint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Orthant,
    Veronese { d: usize, r: u64 },
    Custom,
}

impl FromStr for Shape {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Shape, CliError> {
        let s = s.trim();
        if s == "orthant" {
            return Ok(Shape::Orthant);
        }
        if s == "custom" {
            return Ok(Shape::Custom);
        }
        let bad = || CliError::Input(format!("unknown shape hint {s:?}"));
        let inner = s
            .strip_prefix("veronese(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (d, r) = inner.split_once(',').ok_or_else(bad)?;
        Ok(Shape::Veronese {
            d: d.trim().parse().map_err(|_| bad())?,
            r: r.trim().parse().map_err(|_| bad())?,
        })
    }
}

impl RingSpec {
    pub fn orthant(d: usize) -> RingSpec {
        RingSpec {
            d,
            cone_generators: None,
            shape_hint: Some("orthant".into()),
        }
    }

    pub fn veronese(d: usize, r: u64) -> RingSpec {
        RingSpec {
            d,
            cone_generators: None,
            shape_hint: Some(format!("veronese({d},{r})")),
        }
    }

    /// Explicit generators win over the hint.
    pub fn build(&self) -> Result<Arc<ToricRing>, CliError> {
        let ring = match (&self.cone_generators, &self.shape_hint) {
            (Some(gens), _) => {
                let gens: Vec<LatticeVector> = gens.iter().map(|g| LatticeVector::from_i64s(g)).collect();
                ToricRing::new(&gens)?
            }
            (None, Some(hint)) => match hint.parse::<Shape>()? {
                Shape::Orthant => ToricRing::polynomial(self.d)?,
                Shape::Veronese { d, r } => ToricRing::veronese(d, r)?,
                Shape::Custom => return Err(CliError::Input("a custom ring needs cone_generators".into())),
            },
            (None, None) => return Err(CliError::Input("ring needs cone_generators or shape_hint".into())),
        };
        if ring.dim() != self.d {
            return Err(CliError::Input(format!("ring has rank {} but d = {}", ring.dim(), self.d)));
        }
        Ok(Arc::new(ring))
    }

    /// Explicit generators of `ring` with the given hint.
    pub fn describe(ring: &ToricRing, hint: Option<String>) -> RingSpec {
        RingSpec {
            d: ring.dim(),
            cone_generators: Some(ring.cone_generators().iter().map(vector_i64).collect()),
            shape_hint: hint,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    pub generators: Vec<Vec<i64>>,
}

impl IdealSpec {
    pub fn of(ideal: &MonomialIdeal) -> IdealSpec {
        IdealSpec {
            generators: ideal.gens().iter().map(vector_i64).collect(),
        }
    }

    pub fn build(&self, ring: &Arc<ToricRing>) -> Result<MonomialIdeal, CliError> {
        let gens = self.generators.iter().map(|g| LatticeVector::from_i64s(g)).collect();
        Ok(MonomialIdeal::new(ring.clone(), gens)?)
    }
}

/// Vertices, rays and facets `<x, normal> >= rhs` of `t · P(a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyhedronSpec {
    pub t: Rat,
    pub vertices: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<i64>>,
    pub facets: Vec<(Vec<i64>, Rat)>,
}

impl PolyhedronSpec {
    pub fn of(p: &NewtonPolyhedron) -> PolyhedronSpec {
        PolyhedronSpec {
            t: Rat(p.scale_factor().clone()),
            vertices: p
                .vertices()
                .iter()
                .map(|v| v.coords().iter().map(|c| Rat(c.clone())).collect())
                .collect(),
            rays: p.rays().iter().map(vector_i64).collect(),
            facets: p
                .inequalities()
                .iter()
                .map(|f| (vector_i64(&f.normal), Rat(f.rhs.clone())))
                .collect(),
        }
    }
}

/// Exponents are bounded by the input data, which arrives as `i64`.
pub fn vector_i64(v: &LatticeVector) -> Vec<i64> {
    v.to_i64s().expect("exponent exceeds 64 bits")
}

/// Reads a JSON payload from a file, or inline when the argument itself
/// starts with `{`.
pub fn load<T: for<'de> Deserialize<'de>>(arg: &str) -> Result<T, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| CliError::Input(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{arg}: {e}")))
}
