use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::{rat, Rational};
use crate::contraction::{contract, i_sigma, CurveId, GraphCombination, LinkingTable, SurfaceCurve};
use crate::diagram::{DiagramVector, WeightSystem};
use crate::error::{Error, Result};
use crate::knot::{stacked_bracket, SeifertData, SingularLinkingMatrix};
use crate::Execution;

/// Leading coefficient `Y^{(n)} = (1/(n! 2ⁿ d^{2n})) ⟨⟨I(F¹) ⊔ ... ⊔ I(Fⁿ)⟩⟩`
/// of the degree `n` surgery polynomial of a knot of order `d`.
pub fn y_leading(n: usize, s: &SeifertData) -> Result<DiagramVector> {
    if !(1..=2).contains(&n) {
        return Err(Error::Capability(n, "surgery polynomial coefficients are implemented for degrees 1 and 2".into()));
    }
    let v = stacked_bracket(s, n, Execution::default())?;
    let factorial: i64 = (1..=n as i64).product();
    let d = s.order() as i64;
    let denom = rat(factorial << n) * rat(d).pow(2 * n as i32);
    v.scale(&denom.recip()).reduce()
}

/// `Y^{(n-1)} = ((-1)^{n-1}/(n-1)!) (((n-1)/2 + q/p) Z_n([M; L_n]) + Z_n([M(K; p/q); L_{n-1}]))`
/// from the two brackets supplied by the caller.
pub fn y_penultimate(n: usize, q_over_p: &Rational, z_n: &DiagramVector, z_surgered: &DiagramVector) -> Result<DiagramVector> {
    if n < 1 {
        return Err(Error::Precondition("penultimate coefficient needs n >= 1".into()));
    }
    if z_n.degree() != n || z_surgered.degree() != n {
        return Err(Error::Dimension(format!("brackets of degrees {} and {} used in degree {n}", z_n.degree(), z_surgered.degree())));
    }
    let factorial: i64 = (1..n as i64).product();
    let sign = if (n - 1).is_even() { 1 } else { -1 };
    let mut out = z_n.scale(&(rat(n as i64 - 1) / rat(2) + q_over_p));
    out.add_vector(z_surgered)?;
    out.scale(&(rat(sign) / rat(factorial))).reduce()
}

fn singular_curve(i: usize, c: SurfaceCurve) -> CurveId {
    let kind = if c.basis_index == 0 { "m" } else { "l" };
    let plus = if c.pushed { "+" } else { "" };
    CurveId::new(format!("{kind}{i}{plus}"))
}

/// Linking numbers of the meridians `mᵢ` and longitudes `lᵢ` of the two
/// tori around the double points of a singular knot after `1/r` surgery,
/// with their positive push-offs `mᵢ+`, `lᵢ+`.
pub fn singular_pair_linking_table(m: &SingularLinkingMatrix, r: &Rational) -> Result<LinkingTable> {
    if m.double_points() != 2 {
        return Err(Error::Capability(m.double_points(), "the degree two singular formula needs 2 double points".into()));
    }
    let mut t = LinkingTable::new();
    let name = |kind: &str, i: usize, plus: bool| format!("{kind}{i}{}", if plus { "+" } else { "" });
    for i in 1..=2 {
        t.insert(name("m", i, false), name("m", i, true), -r)?;
        t.insert(name("l", i, false), name("l", i, true), -m.get(i - 1, i - 1))?;
        t.insert(name("m", i, false), name("l", i, true), Rational::zero())?;
        t.insert(name("m", i, true), name("l", i, false), rat(1))?;
    }
    for p1 in [false, true] {
        for p2 in [false, true] {
            t.insert(name("l", 1, p1), name("l", 2, p2), m.get(0, 1).clone())?;
            t.insert(name("m", 1, p1), name("m", 2, p2), -r)?;
            t.insert(name("m", 1, p1), name("l", 2, p2), Rational::zero())?;
            t.insert(name("l", 1, p1), name("m", 2, p2), Rational::zero())?;
        }
    }
    Ok(t)
}

/// `(1/4) p^c⟨⟨I₁ ⊔ I₂⟩⟩` computed by the contraction engine, where `Iᵢ` is
/// the genus one `I(Σ)` on the torus around the `i`-th double point.
pub fn y2_singular_engine(m: &SingularLinkingMatrix, r: &Rational) -> Result<DiagramVector> {
    let lk = singular_pair_linking_table(m, r)?;
    let parts: Vec<GraphCombination> = (1..=2).map(|i| i_sigma(1, |c| singular_curve(i, c))).collect();
    let v = contract(&GraphCombination::union_all(parts.iter()), &lk, 2)?;
    v.scale(&(rat(1) / rat(4))).project_connected()
}

/// `W₂` value of the degree two surgery polynomial of a singular knot with
/// two double points: `(1/2)((5ℓ₁₂² + 2ℓ₁₁ℓ₂₂) r² - ℓ₁₂ r)`. The contraction
/// engine recomputes it and must agree.
pub fn y2_singular_polynomial(m: &SingularLinkingMatrix, r: &Rational) -> Result<Rational> {
    if m.double_points() != 2 {
        return Err(Error::Capability(m.double_points(), "the degree two singular formula needs 2 double points".into()));
    }
    let (l11, l12, l22) = (m.get(0, 0), m.get(0, 1), m.get(1, 1));
    let closed = ((rat(5) * l12 * l12 + rat(2) * l11 * l22) * r * r - l12 * r) / rat(2);
    let engine = WeightSystem::w2().evaluate(&y2_singular_engine(m, r)?)?;
    if engine != closed {
        return Err(Error::Consistency(format!("degree two singular polynomial: closed form {closed}, contraction {engine}")));
    }
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, Matrix};

    fn sing(l11: i64, l12: i64, l22: i64) -> SingularLinkingMatrix {
        SingularLinkingMatrix::new(Matrix::from_rows(vec![vec![rat(l11), rat(l12)], vec![rat(l12), rat(l22)]]).unwrap()).unwrap()
    }

    #[test]
    fn singular_examples() {
        assert_eq!(y2_singular_polynomial(&sing(0, 0, 0), &rat(3)).unwrap(), rat(0));
        assert_eq!(y2_singular_polynomial(&sing(0, 1, 0), &rat(1)).unwrap(), rat(2));
        assert_eq!(y2_singular_polynomial(&sing(1, 0, 1), &rat(1)).unwrap(), rat(1));
        for (a, b, c) in [(2, -3, 5), (-1, 4, 0), (3, 3, -2)] {
            for r in [rat(0), rat(2), ratio(-3, 7)] {
                y2_singular_polynomial(&sing(a, b, c), &r).unwrap();
            }
        }
    }

    #[test]
    fn leading_coefficient_trefoil() {
        let v = Matrix::from_rows(vec![vec![rat(-1), rat(1)], vec![rat(0), rat(-1)]]).unwrap();
        let s = SeifertData::integral(v).unwrap();
        assert_eq!(WeightSystem::w1().evaluate(&y_leading(1, &s).unwrap()).unwrap(), rat(1));
        let l2 = crate::knot::lambda2_second(&s).unwrap();
        assert_eq!(WeightSystem::w2().evaluate(&y_leading(2, &s).unwrap()).unwrap(), l2);
        assert!(y_leading(3, &s).is_err());
    }
}
