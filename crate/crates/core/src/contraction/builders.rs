use std::collections::BTreeMap;

use num_traits::Zero;

use super::graph::{DecoratedGraph, GraphCombination, Slot};
use super::linking::{CurveId, LinkingTable};
use crate::algebra::{Matrix, Rational};
use crate::error::{Error, Result};

/// A curve of a symplectic basis `x_1, y_1, ..., x_g, y_g` of a surface, or
/// its positive push-off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceCurve {
    /// Position in the basis ordering `x_1, y_1, x_2, ...`, from zero.
    pub basis_index: usize,
    pub pushed: bool,
}

/// Conventional name of a basis curve on surface (or copy) `copy`:
/// `x2@1`, `y1@3+` and so on.
pub fn surface_curve(copy: usize, c: SurfaceCurve) -> CurveId {
    let kind = if c.basis_index % 2 == 0 { 'x' } else { 'y' };
    let plus = if c.pushed { "+" } else { "" };
    CurveId::new(format!("{kind}{}@{copy}{plus}", c.basis_index / 2 + 1))
}

/// `I(Σ)`: for each pair `(j, k)` a two-vertex graph whose lower vertex
/// carries `x_j, y_j` and whose upper vertex carries `x_k⁺, y_k⁺`, read
/// counterclockwise as `(edge, y_j, x_j)` and `(x_k⁺, y_k⁺, edge)`.
pub fn i_sigma(genus: usize, name: impl Fn(SurfaceCurve) -> CurveId) -> GraphCombination {
    i_sigma_oriented(genus, name, false)
}

/// `I(Σ)` with the lower vertex orientation reversed when `flip` is set,
/// which negates the whole combination.
pub fn i_sigma_oriented(genus: usize, name: impl Fn(SurfaceCurve) -> CurveId, flip: bool) -> GraphCombination {
    let leg = |i: usize, pushed: bool| Slot::Leg(name(SurfaceCurve { basis_index: i, pushed }));
    let mut out = GraphCombination::new();
    for j in 0..genus {
        for k in 0..genus {
            let lower = if flip {
                [Slot::Edge(0), leg(2 * j, false), leg(2 * j + 1, false)]
            } else {
                [Slot::Edge(0), leg(2 * j + 1, false), leg(2 * j, false)]
            };
            let upper = [leg(2 * k, true), leg(2 * k + 1, true), Slot::Edge(0)];
            let g = DecoratedGraph::new(vec![lower, upper], Vec::new()).expect("two vertices joined once");
            out.push(Rational::from_integer(1.into()), vec![g]);
        }
    }
    out
}

/// Antisymmetric trilinear form on `1..=g`, stored on strictly increasing
/// index triples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trilinear {
    pub g: usize,
    values: BTreeMap<(usize, usize, usize), Rational>,
}

impl Trilinear {
    pub fn new(g: usize, entries: impl IntoIterator<Item = ((usize, usize, usize), Rational)>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for ((i, j, k), v) in entries {
            if !(1 <= i && i < j && j < k && k <= g) {
                return Err(Error::Schema(format!("trilinear index ({i}, {j}, {k}) must satisfy 1 <= i < j < k <= {g}")));
            }
            if values.insert((i, j, k), v).is_some() {
                return Err(Error::Schema(format!("trilinear index ({i}, {j}, {k}) given twice")));
            }
        }
        values.retain(|_, v: &mut Rational| !v.is_zero());
        Ok(Trilinear { g, values })
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Rational)> {
        self.values.iter()
    }
}

/// `Σ_{i<j<k} I(i,j,k) · Y(d_i, d_j, d_k)` for the given dual curves.
pub fn tripods(form: &Trilinear, duals: &[CurveId]) -> Result<GraphCombination> {
    if duals.len() != form.g {
        return Err(Error::Dimension(format!("{} dual curves for a form on {} indices", duals.len(), form.g)));
    }
    let mut out = GraphCombination::new();
    for (&(i, j, k), v) in form.entries() {
        let t = DecoratedGraph::tripod(duals[i - 1].clone(), duals[j - 1].clone(), duals[k - 1].clone());
        out.push(v.clone(), vec![t]);
    }
    Ok(out)
}

/// Linking numbers among `copies` parallel copies of a Seifert surface with
/// matrix `v` (`v[i][j] = lk(b_i, b_j⁺)`), copy `s` lying above copy `t`
/// for `s > t`. Copies are numbered from 1 and curves named by
/// [`surface_curve`].
pub fn seifert_linking_table(v: &Matrix<Rational>, copies: usize) -> LinkingTable {
    let n = v.rows();
    let mut t = LinkingTable::new();
    let name = |s, i, pushed| surface_curve(s, SurfaceCurve { basis_index: i, pushed });
    for s in 1..=copies {
        for i in 0..n {
            for j in 0..n {
                t.insert(name(s, i, false), name(s, j, true), v.get(i, j).clone())
                    .expect("fresh entries");
            }
        }
        for r in s + 1..=copies {
            for i in 0..n {
                for j in 0..n {
                    for pi in [false, true] {
                        for pj in [false, true] {
                            t.insert(name(s, i, pi), name(r, j, pj), v.get(i, j).clone())
                                .expect("fresh entries");
                        }
                    }
                }
            }
        }
    }
    t
}
