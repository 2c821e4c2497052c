//! Diagrams with labelled edges: every edge labelled by a distinct index, or
//! two thirds of the edges labelled so that each vertex meets exactly one
//! unlabelled edge.

use std::collections::BTreeMap;

use super::enumerate::{check_degree, enumerate_diagrams};
use super::jacobi::{for_each_permutation, JacobiDiagram};
use crate::error::Result;

/// An isomorphism class of edge-labelled diagrams, carried by a reference
/// orientation of the underlying diagram.
#[derive(Clone, Debug)]
pub struct LabelledDiagram {
    pub diagram: JacobiDiagram,
    /// Label of the edge through each half-edge, `None` when unlabelled.
    pub edge_labels: Vec<Option<usize>>,
    /// Half-edge automorphisms of the diagram preserving every label.
    pub automorphisms: u64,
}

impl LabelledDiagram {
    /// Labels around vertex `v` in its cyclic order.
    pub fn vertex_labels(&self, v: usize) -> [Option<usize>; 3] {
        [self.edge_labels[3 * v], self.edge_labels[3 * v + 1], self.edge_labels[3 * v + 2]]
    }

    /// Number of connected components that are theta graphs.
    pub fn theta_components(&self) -> usize {
        self.diagram.components().iter().filter(|c| c.len() == 2).count()
    }

    /// Unlabelled edges as half-edge pairs.
    pub fn unlabelled_edges(&self) -> Vec<(usize, usize)> {
        self.diagram.edges().into_iter().filter(|&(a, _)| self.edge_labels[a].is_none()).collect()
    }
}

type Shape = (Vec<(usize, usize, usize)>, Vec<(usize, usize)>);

fn shape(d: &JacobiDiagram, labels: &[Option<usize>], perm: &[usize]) -> Shape {
    let mut lab = Vec::new();
    let mut unl = Vec::new();
    for (a, b) in d.edges() {
        let (u, v) = (perm[a / 3], perm[b / 3]);
        let (u, v) = (u.min(v), u.max(v));
        match labels[a] {
            Some(l) => lab.push((l, u, v)),
            None => unl.push((u, v)),
        }
    }
    lab.sort_unstable();
    unl.sort_unstable();
    (lab, unl)
}

/// Minimal shape over vertex relabellings and the number of relabellings
/// achieving it.
fn canonical_shape(d: &JacobiDiagram, labels: &[Option<usize>]) -> (Shape, u64) {
    let mut best: Option<Shape> = None;
    let mut count = 0u64;
    for_each_permutation(d.vertex_count(), |p| {
        let s = shape(d, labels, p);
        match &best {
            Some(b) if &s > b => {}
            Some(b) if &s == b => count += 1,
            _ => {
                best = Some(s);
                count = 1;
            }
        }
    });
    (best.unwrap_or_default(), count)
}

fn collect(
    n: usize,
    mut labellings: impl FnMut(&JacobiDiagram, &mut dyn FnMut(Vec<Option<usize>>)),
) -> Result<Vec<LabelledDiagram>> {
    check_degree(n)?;
    let mut out = Vec::new();
    for class in enumerate_diagrams(n)?.into_iter().filter(|c| c.sign != 0) {
        let d = JacobiDiagram::from_key(&class.key);
        let mut seen: BTreeMap<Shape, LabelledDiagram> = BTreeMap::new();
        labellings(&d, &mut |labels| {
            let (s, automorphisms) = canonical_shape(&d, &labels);
            seen.entry(s).or_insert_with(|| LabelledDiagram { diagram: d.clone(), edge_labels: labels, automorphisms });
        });
        out.extend(seen.into_values());
    }
    Ok(out)
}

fn assign(d: &JacobiDiagram, edges: &[(usize, usize)], order: &[usize]) -> Vec<Option<usize>> {
    let mut labels = vec![None; 3 * d.vertex_count()];
    for (label0, &e) in order.iter().enumerate() {
        let (a, b) = edges[e];
        labels[a] = Some(label0 + 1);
        labels[b] = Some(label0 + 1);
    }
    labels
}

/// Isomorphism classes of degree `n` diagrams whose `3n` edges carry the
/// labels `1..=3n` bijectively.
pub fn fully_labelled(n: usize) -> Result<Vec<LabelledDiagram>> {
    collect(n, |d, emit| {
        let edges = d.edges();
        for_each_permutation(edges.len(), |p| emit(assign(d, &edges, p)));
    })
}

/// Isomorphism classes of degree `n` diagrams with `2n` edges labelled
/// `1..=2n` injectively and each vertex meeting exactly one unlabelled edge.
pub fn two_thirds_labelled(n: usize) -> Result<Vec<LabelledDiagram>> {
    collect(n, |d, emit| {
        let edges = d.edges();
        let m = edges.len();
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != n {
                continue;
            }
            let mut hits = vec![0u8; d.vertex_count()];
            for (i, &(a, b)) in edges.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    hits[a / 3] += 1;
                    hits[b / 3] += 1;
                }
            }
            if hits.iter().any(|&h| h != 1) {
                continue;
            }
            let kept: Vec<(usize, usize)> =
                edges.iter().enumerate().filter(|(i, _)| mask & (1 << i) == 0).map(|(_, &e)| e).collect();
            for_each_permutation(kept.len(), |p| emit(assign(d, &kept, p)));
        }
    })
}
