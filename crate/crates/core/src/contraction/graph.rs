use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::linking::CurveId;
use crate::algebra::Rational;
use crate::error::{Error, Result};

/// One position in the cyclic order at a vertex: a leg ending on a named
/// curve, or one end of an internal edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Leg(CurveId),
    Edge(usize),
}

/// Uni-trivalent graph whose univalent vertices are labelled by curves,
/// possibly with struts (an edge with two labelled ends and no trivalent
/// vertex).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DecoratedGraph {
    vertices: Vec<[Slot; 3]>,
    struts: Vec<(CurveId, CurveId)>,
}

impl DecoratedGraph {
    /// Every internal edge id must occur in exactly two slots.
    pub fn new(vertices: Vec<[Slot; 3]>, struts: Vec<(CurveId, CurveId)>) -> Result<Self> {
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        for slot in vertices.iter().flatten() {
            if let Slot::Edge(e) = slot {
                *seen.entry(*e).or_default() += 1;
            }
        }
        if let Some((e, k)) = seen.iter().find(|(_, &k)| k != 2) {
            return Err(Error::Structural(format!("internal edge {e} has {k} ends")));
        }
        Ok(DecoratedGraph { vertices, struts })
    }

    /// A single vertex with three legs in the given cyclic order.
    pub fn tripod(a: impl Into<CurveId>, b: impl Into<CurveId>, c: impl Into<CurveId>) -> Self {
        DecoratedGraph { vertices: vec![[Slot::Leg(a.into()), Slot::Leg(b.into()), Slot::Leg(c.into())]], struts: Vec::new() }
    }

    pub fn strut(a: impl Into<CurveId>, b: impl Into<CurveId>) -> Self {
        DecoratedGraph { vertices: Vec::new(), struts: vec![(a.into(), b.into())] }
    }

    pub fn vertices(&self) -> &[[Slot; 3]] {
        &self.vertices
    }

    pub fn struts(&self) -> &[(CurveId, CurveId)] {
        &self.struts
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of univalent ends, strut ends included.
    pub fn leg_count(&self) -> usize {
        let legs = self.vertices.iter().flatten().filter(|s| matches!(s, Slot::Leg(_))).count();
        legs + 2 * self.struts.len()
    }

    /// The reversed cyclic order at vertex `v`.
    pub fn flipped_at(&self, v: usize) -> Self {
        let mut g = self.clone();
        g.vertices[v].swap(1, 2);
        g
    }
}

/// One summand: a rational coefficient times the disjoint union of factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub factors: Vec<DecoratedGraph>,
}

/// Finite rational combination of disjoint unions of decorated graphs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GraphCombination {
    terms: Vec<Term>,
}

impl GraphCombination {
    pub fn new() -> Self {
        Self::default()
    }

    /// The empty graph with coefficient one, the unit for `disjoint_union`.
    pub fn unit() -> Self {
        GraphCombination { terms: vec![Term { coeff: Rational::one(), factors: Vec::new() }] }
    }

    pub fn single(g: DecoratedGraph) -> Self {
        GraphCombination { terms: vec![Term { coeff: Rational::one(), factors: vec![g] }] }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn push(&mut self, coeff: Rational, factors: Vec<DecoratedGraph>) {
        if !coeff.is_zero() {
            self.terms.push(Term { coeff, factors });
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::new();
        for t in &self.terms {
            out.push(&t.coeff * c, t.factors.clone());
        }
        out
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out
    }

    /// Bilinear extension of disjoint union.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for a in &self.terms {
            for b in &other.terms {
                let mut f = a.factors.clone();
                f.extend(b.factors.iter().cloned());
                out.push(&a.coeff * &b.coeff, f);
            }
        }
        out
    }

    /// Disjoint union of all the given combinations.
    pub fn union_all<'a>(parts: impl IntoIterator<Item = &'a GraphCombination>) -> Self {
        parts.into_iter().fold(Self::unit(), |acc, p| acc.disjoint_union(p))
    }
}
