use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::lens::SurgerySpec;
use crate::algebra::{rat, Rational};
use crate::contraction::{
    contract, i_sigma, surface_curve, tripods, CurveId, GraphCombination, LinkingTable, Trilinear,
};
use crate::diagram::{fully_labelled, two_thirds_labelled, DiagramVector};
use crate::error::{Error, Result};

fn check_labelled_degree(n: usize) -> Result<()> {
    if !(1..=2).contains(&n) {
        return Err(Error::Capability(n, "labelled-diagram brackets are implemented for degrees 1 and 2".into()));
    }
    Ok(())
}

fn check_coeffs(coeffs: &[SurgerySpec], expected: usize) -> Result<Rational> {
    if coeffs.len() != expected {
        return Err(Error::Precondition(format!("expected {expected} surgery coefficients, got {}", coeffs.len())));
    }
    Ok(coeffs.iter().map(SurgerySpec::inverse_slope).fold(Rational::one(), |a, b| a * b))
}

/// `Z_n([M; L])` for a boundary link with `r` components bounding disjoint
/// surfaces of the given genera: `(1/2ⁿ)⟨⟨⊔ᵢ -(qᵢ/pᵢ) I(Σⁱ)⟩⟩` when `r = n`
/// and `0` when `r > n`. Curves of surface `i` (from 1) are named by
/// [`surface_curve`] with copy index `i`.
pub fn bracket_boundary(n: usize, genera: &[usize], lk: &LinkingTable, coeffs: &[SurgerySpec]) -> Result<DiagramVector> {
    let r = genera.len();
    if coeffs.len() != r {
        return Err(Error::Precondition(format!("{r} surfaces but {} surgery coefficients", coeffs.len())));
    }
    if r > n {
        return Ok(DiagramVector::zero(n));
    }
    if r < n {
        return Err(Error::Precondition(format!("degree {n} bracket needs at least {n} components, got {r}")));
    }
    let parts: Vec<GraphCombination> = genera
        .iter()
        .zip(coeffs)
        .enumerate()
        .map(|(i, (&g, s))| i_sigma(g, |c| surface_curve(i + 1, c)).scale(&-s.inverse_slope()))
        .collect();
    let v = contract(&GraphCombination::union_all(parts.iter()), lk, n)?;
    v.scale(&(rat(1) / rat(1 << n))).reduce()
}

/// Trilinear intersection form of a rational homology handlebody together
/// with the curves dual to its basis.
#[derive(Clone, Debug)]
pub struct HandlebodyDatum {
    pub form: Trilinear,
    pub duals: Vec<CurveId>,
}

/// `⟨⟨⊔ᵢ T(I_{AᵢAᵢ′})⟩⟩_n` for `2n` LP-surgery data.
pub fn bracket_lp(n: usize, data: &[HandlebodyDatum], lk: &LinkingTable) -> Result<DiagramVector> {
    if data.len() != 2 * n {
        return Err(Error::Precondition(format!("degree {n} needs {} handlebody data, got {}", 2 * n, data.len())));
    }
    let parts = data.iter().map(|h| tripods(&h.form, &h.duals)).collect::<Result<Vec<_>>>()?;
    contract(&GraphCombination::union_all(parts.iter()), lk, n)?.reduce()
}

/// Milnor triple numbers `μ(i, j, k)` of an algebraically split link with
/// `3n` components, fully antisymmetric.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MilnorTensor {
    n: usize,
    values: BTreeMap<(usize, usize, usize), Rational>,
}

/// Sorts three distinct indices, returning the sign of the sorting permutation.
fn sort3(mut a: [usize; 3]) -> (i32, [usize; 3]) {
    let mut sign = 1;
    for (i, j) in [(0, 1), (1, 2), (0, 1)] {
        if a[i] > a[j] {
            a.swap(i, j);
            sign = -sign;
        }
    }
    (sign, a)
}

impl MilnorTensor {
    pub fn new(n: usize, entries: impl IntoIterator<Item = ((usize, usize, usize), Rational)>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for ((i, j, k), v) in entries {
            if [i, j, k].iter().any(|&x| x < 1 || x > 3 * n) || i == j || j == k || i == k {
                return Err(Error::Schema(format!("Milnor index ({i}, {j}, {k}) needs distinct entries in 1..={}", 3 * n)));
            }
            let (sign, [a, b, c]) = sort3([i, j, k]);
            let v = if sign < 0 { -v } else { v };
            if let Some(old) = values.insert((a, b, c), v.clone()) {
                if old != v {
                    return Err(Error::Schema(format!("conflicting Milnor values for ({i}, {j}, {k})")));
                }
            }
        }
        Ok(MilnorTensor { n, values })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        if i == j || j == k || i == k {
            return Rational::zero();
        }
        let (sign, [a, b, c]) = sort3([i, j, k]);
        let v = self.values.get(&(a, b, c)).cloned().unwrap_or_else(Rational::zero);
        if sign < 0 {
            -v
        } else {
            v
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Rational)> {
        self.values.iter()
    }
}

/// `Z_n([M; L])` for an algebraically split link of `3n` components:
/// `Π(qᵢ/pᵢ) Σ_Γ μ_Γ / 2^{θ(Γ)} [Γ]` over edge-labelled diagrams, where `μ_Γ`
/// multiplies the Milnor numbers read around the vertices.
pub fn bracket_as(n: usize, mu: &MilnorTensor, coeffs: &[SurgerySpec]) -> Result<DiagramVector> {
    check_labelled_degree(n)?;
    if mu.n != n {
        return Err(Error::Dimension(format!("Milnor tensor of degree {} used in degree {n}", mu.n)));
    }
    let scale = check_coeffs(coeffs, 3 * n)?;
    let mut out = DiagramVector::zero(n);
    for g in fully_labelled(n)? {
        let mut w = Rational::one();
        for v in 0..g.diagram.vertex_count() {
            let [a, b, c] = g.vertex_labels(v).map(|l| l.expect("fully labelled"));
            w *= mu.get(a, b, c);
        }
        if !w.is_zero() {
            out.add_diagram(&g.diagram, &(w / rat(1 << g.theta_components())))?;
        }
    }
    out.scale(&scale).reduce()
}

/// `lk(Fᵢ ∩ Fⱼ, F_k⁺ ∩ F_l⁺)` for the surfaces of a link with vanishing
/// linking numbers and Milnor triple numbers. The intersection curve
/// `Fⱼ ∩ Fᵢ` is `Fᵢ ∩ Fⱼ` reversed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntersectionLinkTable {
    values: BTreeMap<((usize, usize), (usize, usize)), Rational>,
}

fn orient(p: (usize, usize)) -> Result<(bool, (usize, usize))> {
    match p.0.cmp(&p.1) {
        std::cmp::Ordering::Less => Ok((false, p)),
        std::cmp::Ordering::Greater => Ok((true, (p.1, p.0))),
        std::cmp::Ordering::Equal => Err(Error::Schema(format!("surface pair ({}, {}) must be distinct", p.0, p.1))),
    }
}

fn normalize(a: (usize, usize), b: (usize, usize)) -> Result<(bool, ((usize, usize), (usize, usize)))> {
    let (fa, a) = orient(a)?;
    let (fb, b) = orient(b)?;
    Ok((fa != fb, (a.min(b), a.max(b))))
}

impl IntersectionLinkTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, a: (usize, usize), b: (usize, usize), value: Rational) -> Result<()> {
        let (flip, key) = normalize(a, b)?;
        let value = if flip { -value } else { value };
        match self.values.get(&key) {
            Some(old) if *old != value => {
                Err(Error::Schema(format!("conflicting values for F{}∩F{} and F{}∩F{}", a.0, a.1, b.0, b.1)))
            }
            _ => {
                self.values.insert(key, value);
                Ok(())
            }
        }
    }

    pub fn get(&self, a: (usize, usize), b: (usize, usize)) -> Result<Rational> {
        let (flip, key) = normalize(a, b)?;
        let v = self.values.get(&key).ok_or_else(|| {
            Error::MissingLinking(format!("F{}∩F{}", a.0, a.1), format!("F{}∩F{}", b.0, b.1))
        })?;
        Ok(if flip { -v } else { v.clone() })
    }

    pub fn entries(&self) -> impl Iterator<Item = (&((usize, usize), (usize, usize)), &Rational)> {
        self.values.iter()
    }
}

/// `Z_n([M; L])` for a `2n` component link with vanishing Milnor triple
/// numbers: `Π(qᵢ/pᵢ) Σ_Γ ℓ((Fᵢ); Γ) / ♯Aut_{2/3}(Γ) [Γ]` over 2/3-labelled
/// diagrams. A vertex labelled `i, j` followed by its unlabelled edge
/// carries `Fᵢ ∩ Fⱼ`; each unlabelled edge contributes the linking number
/// of the curves at its two ends.
pub fn bracket_as_mu0(n: usize, ell: &IntersectionLinkTable, coeffs: &[SurgerySpec]) -> Result<DiagramVector> {
    check_labelled_degree(n)?;
    let scale = check_coeffs(coeffs, 2 * n)?;
    let mut out = DiagramVector::zero(n);
    for g in two_thirds_labelled(n)? {
        let curve = |v: usize| {
            let l = g.vertex_labels(v);
            let at = l.iter().position(Option::is_none).expect("one unlabelled edge per vertex");
            (l[(at + 1) % 3].expect("labelled"), l[(at + 2) % 3].expect("labelled"))
        };
        let mut w = Rational::one();
        for (a, b) in g.unlabelled_edges() {
            w *= ell.get(curve(a / 3), curve(b / 3))?;
        }
        if !w.is_zero() {
            out.add_diagram(&g.diagram, &(w / rat(g.automorphisms as i64)))?;
        }
    }
    out.scale(&scale).reduce()
}
