use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use num_traits::Zero;

use super::enumerate::{check_degree, enumerate_diagrams, MAX_DEGREE};
use super::jacobi::{DiagramKey, JacobiDiagram};
use super::reference;
use crate::algebra::{Matrix, Rational};
use crate::error::Result;

/// The space of degree `n` diagrams modulo the AS and IHX relations, with a
/// fixed basis of generator classes.
#[derive(Debug)]
pub struct Quotient {
    degree: usize,
    generators: Vec<DiagramKey>,
    basis: Vec<DiagramKey>,
    pivots: Vec<(DiagramKey, BTreeMap<DiagramKey, Rational>)>,
    relation_count: usize,
}

static CACHE: [OnceLock<Quotient>; MAX_DEGREE + 1] = [const { OnceLock::new() }; MAX_DEGREE + 1];

/// The quotient space in degree `n`, built on first use and cached.
pub fn quotient(n: usize) -> Result<&'static Quotient> {
    check_degree(n)?;
    Ok(CACHE[n].get_or_init(|| Quotient::build(n)))
}

/// Diagrams that should survive as basis elements when they span.
fn preferred(n: usize) -> Vec<DiagramKey> {
    let named: Vec<JacobiDiagram> = match n {
        1 => vec![reference::theta()],
        2 => vec![reference::theta_theta(), reference::tetrahedron()],
        _ => Vec::new(),
    };
    named.iter().map(|d| d.canonical_form().key).collect()
}

/// The three IHX terms at the edge through half-edge `h`. Their sum is zero.
pub fn ihx_terms(d: &JacobiDiagram, h: usize) -> Option<[JacobiDiagram; 3]> {
    let h2 = d.mate(h);
    let (u, v) = (h / 3, h2 / 3);
    if u == v {
        return None;
    }
    let rot = |x: usize| {
        let base = 3 * (x / 3);
        let k = x - base;
        [x, base + (k + 1) % 3, base + (k + 2) % 3]
    };
    let [_, a, b] = rot(h);
    let [_, c, dd] = rot(h2);
    let mut vertices: Vec<[usize; 3]> = (0..d.vertex_count()).map(|w| [3 * w, 3 * w + 1, 3 * w + 2]).collect();
    let mut term = |top: [usize; 3], bottom: [usize; 3]| {
        vertices[u] = top;
        vertices[v] = bottom;
        d.regroup(&vertices).expect("IHX regrouping keeps the diagram valid")
    };
    Some([
        term([a, b, h], [h2, c, dd]),
        term([b, c, h], [h2, a, dd]),
        term([c, a, h], [h2, b, dd]),
    ])
}

impl Quotient {
    fn build(n: usize) -> Quotient {
        let classes = enumerate_diagrams(n).expect("degree checked");
        let pref = preferred(n);
        let mut generators: Vec<DiagramKey> = classes
            .iter()
            .filter(|c| c.sign != 0 && !pref.contains(&c.key))
            .map(|c| c.key.clone())
            .collect();
        generators.extend(pref.iter().cloned());
        let column: BTreeMap<&DiagramKey, usize> = generators.iter().enumerate().map(|(i, k)| (k, i)).collect();

        let mut relations: BTreeSet<Vec<(usize, Rational)>> = BTreeSet::new();
        for class in &classes {
            let d = JacobiDiagram::from_key(&class.key);
            for (h, _) in d.edges() {
                let Some(terms) = ihx_terms(&d, h) else { continue };
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                for t in &terms {
                    let cf = t.canonical_form();
                    if cf.sign == 0 {
                        continue;
                    }
                    *row.entry(column[&cf.key]).or_insert_with(Rational::zero) += Rational::from_integer(cf.sign.into());
                }
                row.retain(|_, c| !c.is_zero());
                let Some(lead) = row.values().next().cloned() else { continue };
                relations.insert(row.into_iter().map(|(i, c)| (i, c / &lead)).collect());
            }
        }

        let m = Matrix::from_fn(relations.len(), generators.len(), |_, _| Rational::zero());
        let mut m = m;
        for (r, rel) in relations.iter().enumerate() {
            for (c, x) in rel {
                m.set(r, *c, x.clone());
            }
        }
        let e = m.rref();
        let pivots = e
            .pivots
            .iter()
            .enumerate()
            .map(|(r, &p)| {
                let row = (0..generators.len())
                    .filter(|&c| !e.matrix.get(r, c).is_zero())
                    .map(|c| (generators[c].clone(), e.matrix.get(r, c).clone()))
                    .collect();
                (generators[p].clone(), row)
            })
            .collect();
        let basis = (0..generators.len())
            .filter(|c| !e.pivots.contains(c))
            .map(|c| generators[c].clone())
            .collect();
        Quotient { degree: n, generators, basis, pivots, relation_count: relations.len() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis classes, each meaning its reference orientation.
    pub fn basis(&self) -> &[DiagramKey] {
        &self.basis
    }

    /// All classes that are nonzero modulo AS.
    pub fn generators(&self) -> &[DiagramKey] {
        &self.generators
    }

    /// Number of distinct IHX relations used.
    pub fn relation_count(&self) -> usize {
        self.relation_count
    }

    /// Rewrite a combination of generator classes in the basis.
    pub(crate) fn reduce(&self, v: &BTreeMap<DiagramKey, Rational>) -> BTreeMap<DiagramKey, Rational> {
        let mut v = v.clone();
        for (p, row) in &self.pivots {
            let Some(c) = v.get(p).cloned() else { continue };
            for (k, x) in row {
                let slot = v.entry(k.clone()).or_insert_with(Rational::zero);
                *slot -= &c * x;
            }
        }
        v.retain(|_, c| !c.is_zero());
        debug_assert!(v.keys().all(|k| self.basis.contains(k)));
        v
    }

    /// Coefficient vector of a reduced combination in basis order.
    pub(crate) fn coords(&self, reduced: &BTreeMap<DiagramKey, Rational>) -> Vec<Rational> {
        self.basis.iter().map(|k| reduced.get(k).cloned().unwrap_or_else(Rational::zero)).collect()
    }
}
