#![allow(dead_code)]

use std::collections::BTreeMap;

use finik::algebra::{rat, Matrix};
use finik::contraction::{GraphCombination, LinkingTable, Slot};
use finik::knot::SeifertData;
use finik::{DiagramVector, JacobiDiagram, Rational};
use proptest::prelude::*;

pub fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap()
}

pub fn trefoil() -> SeifertData {
    SeifertData::integral(qm(&[&[-1, 1], &[0, -1]])).unwrap()
}

pub fn figure_eight() -> SeifertData {
    SeifertData::integral(qm(&[&[1, 1], &[0, -1]])).unwrap()
}

/// Seifert matrix with `V - Vᵀ = J` from free upper-triangle entries.
pub fn seifert_from_upper(genus: usize, upper: &[i64]) -> Matrix<Rational> {
    let n = 2 * genus;
    let mut it = upper.iter().copied().cycle();
    let mut v = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = it.next().unwrap_or(0);
            v.set(i, j, rat(x));
            if j != i {
                let jij = i64::from(i % 2 == 0 && j == i + 1);
                v.set(j, i, rat(x - jij));
            }
        }
    }
    v
}

/// Integral Seifert matrices of genus 1 or 2 with small entries.
pub fn seifert_strategy() -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..=2, prop::collection::vec(-3i64..=3, 10)).prop_map(|(g, upper)| seifert_from_upper(g, &upper))
}

/// Contraction by direct enumeration for strut-free combinations: every
/// pairing of the legs is produced by matching the last open leg first, the
/// glued diagram assembled from half-edge slots, and weighted by the product
/// of linking numbers.
pub fn brute_force_contract(g: &GraphCombination, lk: &LinkingTable, n: usize) -> DiagramVector {
    let mut out = DiagramVector::zero(n);
    for term in g.terms() {
        let mut mate: Vec<Option<usize>> = Vec::new();
        let mut legs = Vec::new();
        for f in &term.factors {
            assert!(f.struts().is_empty(), "oracle handles strut-free graphs only");
            let base = mate.len();
            mate.resize(base + 3 * f.vertices().len(), None);
            let mut edge_ends: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (v, slots) in f.vertices().iter().enumerate() {
                for (k, s) in slots.iter().enumerate() {
                    match s {
                        Slot::Leg(c) => legs.push((base + 3 * v + k, c.clone())),
                        Slot::Edge(e) => edge_ends.entry(*e).or_default().push(base + 3 * v + k),
                    }
                }
            }
            for ends in edge_ends.values() {
                mate[ends[0]] = Some(ends[1]);
                mate[ends[1]] = Some(ends[0]);
            }
        }
        if mate.len() != 6 * n || legs.len() % 2 == 1 {
            continue;
        }
        let mut open: Vec<usize> = (0..legs.len()).collect();
        let mut pairs = Vec::new();
        pairings(&mut open, &mut pairs, &mut |pairs| {
            if pairs.iter().any(|&(a, b)| legs[a].0 / 3 == legs[b].0 / 3) {
                return;
            }
            let mut m = mate.clone();
            let mut w = term.coeff.clone();
            for &(a, b) in pairs {
                let (ha, ca) = &legs[a];
                let (hb, cb) = &legs[b];
                m[*ha] = Some(*hb);
                m[*hb] = Some(*ha);
                w *= lk.get(ca, cb).unwrap().clone();
            }
            let d = JacobiDiagram::from_mates(m.into_iter().map(Option::unwrap).collect()).unwrap();
            out.add_diagram(&d, &w).unwrap();
        });
    }
    out.reduce().unwrap()
}

fn pairings(open: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, f: &mut impl FnMut(&[(usize, usize)])) {
    let Some(last) = open.pop() else {
        f(pairs);
        return;
    };
    for i in 0..open.len() {
        let other = open.remove(i);
        pairs.push((other, last));
        pairings(open, pairs, f);
        pairs.pop();
        open.insert(i, other);
    }
    open.push(last);
}
