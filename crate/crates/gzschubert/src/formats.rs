//! JSON shapes for faces, polynomials, characters, Laurent polynomials and
//! degree evaluations.

use gzschubert_core::chars::Character;
use gzschubert_core::error::Error;
use gzschubert_core::gz::{Edge, EdgeKind, FaceDiagram};
use gzschubert_core::parabox::Laurent;
use gzschubert_core::poly::{Poly, RatPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceJson {
    pub n: usize,
    pub edges: Vec<(usize, usize, String)>,
}

impl From<&FaceDiagram> for FaceJson {
    fn from(f: &FaceDiagram) -> Self {
        let edges = f
            .edges()
            .map(|e| (e.row, e.col, if e.kind == EdgeKind::L { "L" } else { "R" }.to_string()))
            .collect();
        FaceJson { n: f.n(), edges }
    }
}

impl TryFrom<&FaceJson> for FaceDiagram {
    type Error = Error;

    fn try_from(j: &FaceJson) -> Result<Self, Error> {
        let edges = j
            .edges
            .iter()
            .map(|(row, col, kind)| match kind.as_str() {
                "L" => Ok(Edge::l(*row, *col)),
                "R" => Ok(Edge::r(*row, *col)),
                other => Err(Error::InvalidFace(format!("edge kind {:?}", other))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        FaceDiagram::new(j.n, edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub exps: Vec<u32>,
    pub coef: String,
}

/// `{"poly": [{"exps": [..], "coef": "p/q"}]}`, terms in graded
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub poly: Vec<PolyTerm>,
}

impl<C: gzschubert_core::poly::Coeff + std::fmt::Display> From<&Poly<C>> for PolyJson {
    fn from(p: &Poly<C>) -> Self {
        let poly = p
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| PolyTerm { exps: e.clone(), coef: c.to_string() })
            .collect();
        PolyJson { poly }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Internal(format!("not a rational number: {:?}", s));
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p.trim().parse().map_err(|_| bad())?, q))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

impl PolyJson {
    /// The polynomial in `nvars` variables; every term must have that many
    /// exponents.
    pub fn to_poly(&self, nvars: usize) -> Result<RatPoly, Error> {
        let terms = self
            .poly
            .iter()
            .map(|t| Ok((t.exps.clone(), parse_rational(&t.coef)?)))
            .collect::<Result<Vec<_>, Error>>()?;
        Poly::from_terms(nvars, terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTerm {
    pub u: Vec<i64>,
    pub mult: i64,
}

/// Character terms sorted by `u`.
pub fn character_to_json(c: &Character) -> Result<Vec<CharacterTerm>, Error> {
    c.terms()
        .map(|(u, m)| {
            let mult = m.to_i64().ok_or_else(|| Error::Internal(format!("multiplicity {} overflows", m)))?;
            Ok(CharacterTerm { u: u.clone(), mult })
        })
        .collect()
}

pub fn character_from_json(n: usize, u0: i64, terms: &[CharacterTerm]) -> Result<Character, Error> {
    let mut c = Character::zero(n, u0);
    for t in terms {
        c.add(t.u.clone(), BigInt::from(t.mult))?;
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentTerm {
    pub exp: i64,
    pub coef: String,
}

pub fn laurent_to_json(f: &Laurent) -> Vec<LaurentTerm> {
    f.terms().map(|(exp, c)| LaurentTerm { exp, coef: c.to_string() }).collect()
}

pub fn laurent_from_json(terms: &[LaurentTerm]) -> Result<Laurent, Error> {
    let mut f = Laurent::zero();
    for t in terms {
        let c: BigInt = t.coef.parse().map_err(|_| Error::Internal(format!("not an integer: {:?}", t.coef)))?;
        f.add_term(t.exp, c);
    }
    Ok(f)
}

/// `p/q` in lowest terms, or `p` for integers.
pub fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeJson {
    pub lambda: Vec<i64>,
    pub perm: Vec<usize>,
    pub operator: String,
    pub volume: String,
    pub dual_volume: String,
}
