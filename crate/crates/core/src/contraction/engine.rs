use std::collections::BTreeMap;

use num_traits::Zero;

use super::graph::{GraphCombination, Slot, Term};
use super::linking::{CurveId, LinkingTable};
use crate::algebra::Rational;
use crate::diagram::{quotient, DiagramKey, DiagramVector, JacobiDiagram};
use crate::error::Result;

/// How terms of a combination are distributed over threads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is enabled and runs
    /// sequentially otherwise.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") { Execution::Parallel } else { Execution::Sequential }
    }
}

/// Contract all legs of `g` in pairs using `lk` and reduce the resulting
/// degree `n` diagrams modulo AS and IHX.
pub fn contract(g: &GraphCombination, lk: &LinkingTable, n: usize) -> Result<DiagramVector> {
    contract_with(g, lk, n, Execution::default())
}

pub fn contract_with(g: &GraphCombination, lk: &LinkingTable, n: usize, exec: Execution) -> Result<DiagramVector> {
    quotient(n)?;
    let partials: Vec<Result<BTreeMap<DiagramKey, Rational>>> = match exec {
        Execution::Sequential => g.terms().iter().map(|t| contract_term(t, lk, n)).collect(),
        Execution::Parallel => parallel_map(g.terms(), |t| contract_term(t, lk, n)),
    };
    let mut v = DiagramVector::zero(n);
    for p in partials {
        for (k, c) in p? {
            v.add_key(k, &c);
        }
    }
    v.reduce()
}

#[cfg(feature = "parallel")]
fn parallel_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R>(items: &[T], f: impl Fn(&T) -> R) -> Vec<R> {
    items.iter().map(f).collect()
}

#[derive(Clone, Copy, Debug)]
enum End {
    Leg(usize),
    Strut(usize),
}

struct Flat {
    mate: Vec<usize>,
    ends: Vec<End>,
    labels: Vec<CurveId>,
}

const UNSET: usize = usize::MAX;

fn flatten(term: &Term) -> Flat {
    let mut mate = Vec::new();
    let mut ends = Vec::new();
    let mut labels = Vec::new();
    let mut strut_count = 0;
    for f in &term.factors {
        let base = mate.len();
        mate.extend(std::iter::repeat_n(UNSET, 3 * f.vertex_count()));
        let mut open: BTreeMap<usize, usize> = BTreeMap::new();
        for (v, slots) in f.vertices().iter().enumerate() {
            for (k, s) in slots.iter().enumerate() {
                let h = base + 3 * v + k;
                match s {
                    Slot::Leg(c) => {
                        ends.push(End::Leg(h));
                        labels.push(c.clone());
                    }
                    Slot::Edge(e) => match open.remove(e) {
                        Some(other) => {
                            mate[h] = other;
                            mate[other] = h;
                        }
                        None => {
                            open.insert(*e, h);
                        }
                    },
                }
            }
        }
        for (a, b) in f.struts() {
            ends.push(End::Strut(strut_count));
            labels.push(a.clone());
            ends.push(End::Strut(strut_count));
            labels.push(b.clone());
            strut_count += 1;
        }
    }
    Flat { mate, ends, labels }
}

fn contract_term(term: &Term, lk: &LinkingTable, n: usize) -> Result<BTreeMap<DiagramKey, Rational>> {
    let mut out = BTreeMap::new();
    let flat = flatten(term);
    if flat.mate.len() != 6 * n {
        log::debug!("term with {} trivalent vertices skipped in degree {n}", flat.mate.len() / 3);
        return Ok(out);
    }
    if flat.ends.len() % 2 == 1 {
        return Ok(out);
    }
    // index of the partner end of each strut end
    let mut strut_other = vec![UNSET; flat.ends.len()];
    let mut first_end: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, e) in flat.ends.iter().enumerate() {
        if let End::Strut(s) = e {
            match first_end.remove(s) {
                Some(j) => {
                    strut_other[i] = j;
                    strut_other[j] = i;
                }
                None => {
                    first_end.insert(*s, i);
                }
            }
        }
    }
    let mut partner = vec![UNSET; flat.ends.len()];
    let mut err = None;
    for_each_matching(&mut partner, &mut |partner| {
        if err.is_some() {
            return;
        }
        match glue(&flat, &strut_other, partner, lk) {
            Ok(Some((key, w))) => {
                let slot = out.entry(key).or_insert_with(Rational::zero);
                *slot += w * &term.coeff;
            }
            Ok(None) => {}
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

fn for_each_matching(partner: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    let Some(i) = partner.iter().position(|&p| p == UNSET) else {
        f(partner);
        return;
    };
    for j in i + 1..partner.len() {
        if partner[j] != UNSET {
            continue;
        }
        partner[i] = j;
        partner[j] = i;
        for_each_matching(partner, f);
        partner[i] = UNSET;
        partner[j] = UNSET;
    }
}

/// Diagram and weight of one perfect matching, or `None` when it
/// contributes nothing. Linking numbers are only looked up once the glued
/// diagram is known to be nonzero.
fn glue(
    flat: &Flat,
    strut_other: &[usize],
    partner: &[usize],
    lk: &LinkingTable,
) -> Result<Option<(DiagramKey, Rational)>> {
    let mut mate = flat.mate.clone();
    let mut visited = vec![false; flat.ends.len()];
    for (i, e) in flat.ends.iter().enumerate() {
        let End::Leg(h) = *e else { continue };
        if visited[i] {
            continue;
        }
        visited[i] = true;
        let mut cur = partner[i];
        while let End::Strut(..) = flat.ends[cur] {
            visited[cur] = true;
            let other = strut_other[cur];
            visited[other] = true;
            cur = partner[other];
        }
        visited[cur] = true;
        let End::Leg(h2) = flat.ends[cur] else { unreachable!() };
        mate[h] = h2;
        mate[h2] = h;
    }
    if visited.iter().any(|v| !v) {
        log::warn!("matching closes a cycle of struts; contribution dropped");
        return Ok(None);
    }
    let d = JacobiDiagram::from_mates(mate)?;
    if d.has_loop() {
        return Ok(None);
    }
    let cf = d.canonical_form();
    if cf.sign == 0 {
        return Ok(None);
    }
    let mut w = Rational::from_integer(cf.sign.into());
    for (i, &j) in partner.iter().enumerate() {
        if i < j {
            let x = lk.get(&flat.labels[i], &flat.labels[j])?;
            if x.is_zero() {
                w = Rational::zero();
            } else if !w.is_zero() {
                w *= x;
            }
        }
    }
    if w.is_zero() {
        return Ok(None);
    }
    Ok(Some((cf.key, w)))
}
