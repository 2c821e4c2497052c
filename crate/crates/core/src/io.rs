//! JSON exchange formats. Rationals are written as `"p/q"` strings and read
//! from strings or integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, parse_rational, LaurentPoly, Matrix, Rational};
use crate::contraction::{CurveId, DecoratedGraph, GraphCombination, LinkingTable, Slot};
use crate::diagram::{named_basis, DiagramKey, DiagramVector, JacobiDiagram};
use crate::error::{Error, Result};
use crate::knot::SeifertData;
use crate::surgery::{IntersectionLinkTable, MilnorTensor};

/// A rational given as a JSON integer or string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Str(String),
}

impl Num {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            Num::Int(n) => Ok(Rational::from_integer(BigInt::from(*n))),
            Num::Str(s) => parse_rational(s),
        }
    }
}

impl From<&Rational> for Num {
    fn from(r: &Rational) -> Self {
        Num::Str(format_rational(r))
    }
}

/// Types with a JSON exchange format.
pub trait Exchange: Sized {
    type Wire: Serialize + DeserializeOwned;
    fn to_wire(&self) -> Self::Wire;
    fn from_wire(w: Self::Wire) -> Result<Self>;
}

pub fn to_json<T: Exchange>(x: &T) -> String {
    serde_json::to_string(&x.to_wire()).expect("wire types serialize")
}

pub fn to_value<T: Exchange>(x: &T) -> serde_json::Value {
    serde_json::to_value(x.to_wire()).expect("wire types serialize")
}

pub fn from_json<T: Exchange>(s: &str) -> Result<T> {
    let w: T::Wire = serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))?;
    T::from_wire(w)
}

pub fn from_value<T: Exchange>(v: serde_json::Value) -> Result<T> {
    let w: T::Wire = serde_json::from_value(v).map_err(|e| Error::Schema(e.to_string()))?;
    T::from_wire(w)
}

fn one() -> u64 {
    1
}

fn one_num() -> Num {
    Num::Int(1)
}

fn b_default() -> i64 {
    1
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeifertWire {
    pub genus: usize,
    #[serde(rename = "V")]
    pub v: Vec<Vec<Num>>,
    #[serde(default = "one")]
    pub d: u64,
    #[serde(default = "b_default")]
    pub b: i64,
    #[serde(default = "one_num")]
    pub h1: Num,
}

fn matrix_from(rows: &[Vec<Num>]) -> Result<Matrix<Rational>> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(Num::to_rational).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

impl Exchange for SeifertData {
    type Wire = SeifertWire;

    fn to_wire(&self) -> SeifertWire {
        let m = self.matrix();
        SeifertWire {
            genus: self.genus(),
            v: (0..m.rows()).map(|i| (0..m.cols()).map(|j| Num::from(m.get(i, j))).collect()).collect(),
            d: self.order(),
            b: self.framing() as i64,
            h1: Num::from(self.h1()),
        }
    }

    fn from_wire(w: SeifertWire) -> Result<Self> {
        let v = if w.v.is_empty() { Matrix::zeros(0, 0) } else { matrix_from(&w.v)? };
        SeifertData::new(w.genus, v, w.d, w.b, w.h1.to_rational()?)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkingWire {
    pub lk: Vec<(String, String, Num)>,
}

impl Exchange for LinkingTable {
    type Wire = LinkingWire;

    fn to_wire(&self) -> LinkingWire {
        LinkingWire { lk: self.iter().map(|(a, b, v)| (a.to_string(), b.to_string(), Num::from(v))).collect() }
    }

    fn from_wire(w: LinkingWire) -> Result<Self> {
        let mut t = LinkingTable::new();
        for (a, b, v) in w.lk {
            t.insert(a, b, v.to_rational()?)?;
        }
        Ok(t)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MilnorWire {
    pub n: usize,
    pub mu: Vec<(usize, usize, usize, Num)>,
}

impl Exchange for MilnorTensor {
    type Wire = MilnorWire;

    fn to_wire(&self) -> MilnorWire {
        MilnorWire { n: self.degree(), mu: self.entries().map(|(&(i, j, k), v)| (i, j, k, Num::from(v))).collect() }
    }

    fn from_wire(w: MilnorWire) -> Result<Self> {
        let entries = w.mu.iter().map(|(i, j, k, v)| Ok(((*i, *j, *k), v.to_rational()?))).collect::<Result<Vec<_>>>()?;
        MilnorTensor::new(w.n, entries)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EllWire {
    pub ell: Vec<([usize; 2], [usize; 2], Num)>,
}

impl Exchange for IntersectionLinkTable {
    type Wire = EllWire;

    fn to_wire(&self) -> EllWire {
        EllWire { ell: self.entries().map(|(&((i, j), (k, l)), v)| ([i, j], [k, l], Num::from(v))).collect() }
    }

    fn from_wire(w: EllWire) -> Result<Self> {
        let mut t = IntersectionLinkTable::new();
        for ([i, j], [k, l], v) in w.ell {
            t.insert((i, j), (k, l), v.to_rational()?)?;
        }
        Ok(t)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramWire {
    pub vertices: Vec<[u64; 3]>,
    pub edges: Vec<[u64; 2]>,
}

impl Exchange for JacobiDiagram {
    type Wire = DiagramWire;

    fn to_wire(&self) -> DiagramWire {
        let (vertices, edges) = self.to_vertices();
        DiagramWire { vertices, edges }
    }

    fn from_wire(w: DiagramWire) -> Result<Self> {
        JacobiDiagram::from_vertices(&w.vertices, &w.edges)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum SlotWire {
    Leg(String),
    Edge(usize),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorWire {
    #[serde(default)]
    pub vertices: Vec<[SlotWire; 3]>,
    #[serde(default)]
    pub struts: Vec<(String, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermWire {
    pub coeff: Num,
    pub factors: Vec<FactorWire>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CombinationWire {
    pub terms: Vec<TermWire>,
}

impl Exchange for DecoratedGraph {
    type Wire = FactorWire;

    fn to_wire(&self) -> FactorWire {
        let slot = |s: &Slot| match s {
            Slot::Leg(c) => SlotWire::Leg(c.to_string()),
            Slot::Edge(e) => SlotWire::Edge(*e),
        };
        FactorWire {
            vertices: self.vertices().iter().map(|v| [slot(&v[0]), slot(&v[1]), slot(&v[2])]).collect(),
            struts: self.struts().iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        }
    }

    fn from_wire(w: FactorWire) -> Result<Self> {
        let slot = |s: SlotWire| match s {
            SlotWire::Leg(c) => Slot::Leg(CurveId::new(c)),
            SlotWire::Edge(e) => Slot::Edge(e),
        };
        let vertices = w.vertices.into_iter().map(|v| v.map(slot)).collect();
        let struts = w.struts.into_iter().map(|(a, b)| (CurveId::new(a), CurveId::new(b))).collect();
        DecoratedGraph::new(vertices, struts)
    }
}

impl Exchange for GraphCombination {
    type Wire = CombinationWire;

    fn to_wire(&self) -> CombinationWire {
        CombinationWire {
            terms: self
                .terms()
                .iter()
                .map(|t| TermWire { coeff: Num::from(&t.coeff), factors: t.factors.iter().map(|f| f.to_wire()).collect() })
                .collect(),
        }
    }

    fn from_wire(w: CombinationWire) -> Result<Self> {
        let mut out = GraphCombination::new();
        for t in w.terms {
            let factors = t.factors.into_iter().map(DecoratedGraph::from_wire).collect::<Result<Vec<_>>>()?;
            out.push(t.coeff.to_rational()?, factors);
        }
        Ok(out)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaurentTermWire {
    pub num: Num,
    pub den: Num,
    pub exp_num: i64,
    pub exp_den: u64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaurentWire {
    pub terms: Vec<LaurentTermWire>,
}

impl Exchange for LaurentPoly {
    type Wire = LaurentWire;

    fn to_wire(&self) -> LaurentWire {
        let terms = self
            .terms()
            .into_iter()
            .map(|(c, e, d)| LaurentTermWire {
                num: Num::Str(c.numer().to_string()),
                den: Num::Str(c.denom().to_string()),
                exp_num: e,
                exp_den: d,
            })
            .collect();
        LaurentWire { terms }
    }

    fn from_wire(w: LaurentWire) -> Result<Self> {
        let mut p = LaurentPoly::zero();
        for t in w.terms {
            let den = t.den.to_rational()?;
            if den == Rational::from_integer(0.into()) {
                return Err(Error::Schema("zero coefficient denominator".into()));
            }
            if t.exp_den == 0 {
                return Err(Error::Schema("zero exponent denominator".into()));
            }
            p = p + LaurentPoly::monomial(t.num.to_rational()? / den, t.exp_num, t.exp_den);
        }
        Ok(p)
    }
}

/// Coordinates keyed by the names of [`named_basis`], or by hex keys in
/// degrees without named diagrams.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorWire {
    pub degree: usize,
    pub coords: BTreeMap<String, Num>,
}

impl Exchange for DiagramVector {
    type Wire = VectorWire;

    fn to_wire(&self) -> VectorWire {
        let coords = self.named_coordinates().expect("supported degree");
        VectorWire { degree: self.degree(), coords: coords.into_iter().map(|(k, v)| (k, Num::from(&v))).collect() }
    }

    fn from_wire(w: VectorWire) -> Result<Self> {
        let named = named_basis(w.degree);
        let mut out = DiagramVector::zero(w.degree);
        for (name, c) in &w.coords {
            let c = c.to_rational()?;
            match &named {
                Some(basis) => {
                    let (_, d) = basis
                        .iter()
                        .find(|(n, _)| n == name)
                        .ok_or_else(|| Error::Schema(format!("unknown basis element {name:?} in degree {}", w.degree)))?;
                    out.add_diagram(d, &c)?;
                }
                None => out.add_key(DiagramKey::from_hex(name)?, &c),
            }
        }
        out.reduce()
    }
}
