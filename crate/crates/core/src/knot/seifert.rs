use num_traits::Zero;

use crate::algebra::{rat, LaurentPoly, Matrix, Rational};
use crate::contraction::{contract_with, i_sigma, seifert_linking_table, surface_curve, Execution, GraphCombination};
use crate::diagram::{DiagramVector, WeightSystem};
use crate::error::{Error, Result};

/// Seifert data of a knot `K` of order `d` in a rational homology sphere
/// `M`: a surface bounded by `d/b` parallel copies of a curve on the
/// boundary of a tubular neighbourhood, with Seifert matrix
/// `V[i][j] = lk(b_i, b_j⁺)` in the ordering `x_1, y_1, ..., x_g, y_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    genus: usize,
    v: Matrix<Rational>,
    d: u64,
    b: u64,
    h1: Rational,
}

/// Block diagonal matrix with blocks `[[0, 1], [-1, 0]]`.
pub fn intersection_form(genus: usize) -> Matrix<Rational> {
    Matrix::from_fn(2 * genus, 2 * genus, |i, j| {
        if i / 2 != j / 2 || i == j {
            Rational::zero()
        } else if i % 2 == 0 {
            rat(1)
        } else {
            rat(-1)
        }
    })
}

impl SeifertData {
    /// Checks the shape of `V`, `V - Vᵀ = J`, `d >= 1`, `b >= 1`, `h1 > 0`.
    pub fn new(genus: usize, v: Matrix<Rational>, d: u64, b: i64, h1: Rational) -> Result<Self> {
        if v.rows() != 2 * genus || v.cols() != 2 * genus {
            return Err(Error::Dimension(format!(
                "Seifert matrix is {}x{}, expected {}x{} for genus {genus}",
                v.rows(),
                v.cols(),
                2 * genus,
                2 * genus
            )));
        }
        if v.sub(&v.transpose())? != intersection_form(genus) {
            return Err(Error::Precondition("V - V^T must equal the symplectic intersection matrix".into()));
        }
        if d == 0 {
            return Err(Error::Precondition("order d must be positive".into()));
        }
        if b <= 0 {
            return Err(Error::Precondition(format!("framing b = {b} must be positive")));
        }
        if h1 <= Rational::zero() {
            return Err(Error::Precondition("|H_1(M)| must be positive".into()));
        }
        Ok(SeifertData { genus, v, d, b: b as u64, h1 })
    }

    /// Null-homologous knot in an integral homology sphere.
    pub fn integral(v: Matrix<Rational>) -> Result<Self> {
        let genus = v.rows() / 2;
        Self::new(genus, v, 1, 1, rat(1))
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.v
    }

    pub fn order(&self) -> u64 {
        self.d
    }

    pub fn framing(&self) -> u64 {
        self.b
    }

    pub fn h1(&self) -> &Rational {
        &self.h1
    }

    /// Surface stabilized by a hollow handle: a new pair `(m, ℓ)` where the
    /// meridian `m` links nothing, `lk(ℓ, m⁺) = -1`, `ℓ` links the old basis
    /// curves (and their push-offs) by `links` and has self-linking
    /// `self_link`.
    pub fn with_hollow_handle(&self, links: &[Rational], self_link: Rational) -> Result<SeifertData> {
        let n = 2 * self.genus;
        if links.len() != n {
            return Err(Error::Dimension(format!("{} linking numbers for {n} basis curves", links.len())));
        }
        let v = Matrix::from_fn(n + 2, n + 2, |i, j| match (i, j) {
            (i, j) if i < n && j < n => self.v.get(i, j).clone(),
            (i, j) if i == n || j == n => {
                if (i, j) == (n + 1, n) {
                    rat(-1)
                } else {
                    Rational::zero()
                }
            }
            (i, j) if i == n + 1 && j == n + 1 => self_link.clone(),
            (i, j) => links[i.min(j)].clone(),
        });
        SeifertData::new(self.genus + 1, v, self.d, self.b as i64, self.h1.clone())
    }
}

fn rho() -> LaurentPoly {
    LaurentPoly::monomial(rat(1), 1, 2)
}

fn rho_inv() -> LaurentPoly {
    LaurentPoly::monomial(rat(1), -1, 2)
}

/// `Δ_Σ(τ) = det(τ^(1/2) V - τ^(-1/2) Vᵀ)`.
pub fn seifert_determinant(v: &Matrix<Rational>) -> Result<LaurentPoly> {
    let (r, ri) = (rho(), rho_inv());
    let m = Matrix::from_fn(v.rows(), v.cols(), |i, j| {
        &r.scale(v.get(i, j)) - &ri.scale(v.get(j, i))
    });
    m.det()
}

/// `x^(1/(2k)) - x^(-1/(2k))`.
fn half_difference(k: u64) -> LaurentPoly {
    &LaurentPoly::monomial(rat(1), 1, 2 * k) - &LaurentPoly::monomial(rat(1), -1, 2 * k)
}

/// Alexander polynomial `Δ(K)(t)`, normalized so that `Δ(1) = |H_1(M)|/d`
/// and `Δ(t) = Δ(1/t)`.
pub fn alexander_from_seifert(s: &SeifertData) -> Result<LaurentPoly> {
    let sigma = seifert_determinant(&s.v)?.substitute_power(1, s.d);
    let ratio = half_difference(s.b).div_exact(&half_difference(s.d)).map_err(|_| {
        Error::Consistency(format!("framing b = {} does not divide the order d = {}", s.b, s.d))
    })?;
    let d = rat(s.d as i64);
    let factor = &s.h1 / &d * (rat(s.b as i64) / &d);
    Ok((&sigma * &ratio).scale(&factor))
}

/// `Δ(d) = (τ^(d/2) - τ^(-d/2)) / (d (τ^(1/2) - τ^(-1/2)))`.
pub fn delta_d_closed_form(d: u64) -> Result<LaurentPoly> {
    if d == 0 {
        return Err(Error::Precondition("d must be positive".into()));
    }
    let num = &LaurentPoly::monomial(rat(1), d as i64, 2) - &LaurentPoly::monomial(rat(1), -(d as i64), 2);
    Ok(num.div_exact(&half_difference(1))?.scale(&Rational::new(1.into(), d.into())))
}

/// `Δ(d)` as the determinant of the `(d-1)x(d-1)` matrix indexed by
/// `2..=d` with first row `ρδ_{2j} - z/d` and rows
/// `ρ(δ_{ij} - δ_{2j}) - ρ^(-1) δ_{(i-1)j}`, where `ρ = τ^(1/2)` and
/// `z = ρ - ρ^(-1)`.
pub fn delta_d_determinant(d: u64) -> Result<LaurentPoly> {
    if d == 0 {
        return Err(Error::Precondition("d must be positive".into()));
    }
    let n = (d - 1) as usize;
    let (r, ri) = (rho(), rho_inv());
    let z_over_d = (&r - &ri).scale(&Rational::new(1.into(), d.into()));
    let delta = |a: usize, b: usize| if a == b { rat(1) } else { rat(0) };
    let m = Matrix::from_fn(n, n, |i0, j0| {
        let (i, j) = (i0 + 2, j0 + 2);
        if i == 2 {
            &r.scale(&delta(2, j)) - &z_over_d
        } else {
            &r.scale(&(delta(i, j) - delta(2, j))) - &ri.scale(&delta(i - 1, j))
        }
    });
    m.det()
}

/// `λ′(K) = (d/|H_1|) Δ″(1)/2 - 1/(24 d²) + 1/24`.
pub fn lambda_prime_alexander(s: &SeifertData) -> Result<Rational> {
    let delta = alexander_from_seifert(s)?;
    let d = rat(s.d as i64);
    Ok(&d / &s.h1 * delta.derivative_at_one(2) / rat(2) - (&d * &d * rat(24)).recip() + Rational::new(1.into(), 24.into()))
}

/// `⟨⟨I(Σ)⟩⟩` contracted with the Seifert linking numbers.
pub fn i_sigma_bracket(s: &SeifertData) -> Result<DiagramVector> {
    let g = i_sigma(s.genus, |c| surface_curve(1, c));
    contract_with(&g, &seifert_linking_table(&s.v, 1), 1, Execution::default())
}

/// `⟨⟨I(Σ)⟩⟩_{W₁}/(2d²) + 1/(24b²) - 1/(24d²) - 1/(24d²) + 1/24`.
pub fn lambda_prime_contraction(s: &SeifertData) -> Result<Rational> {
    let w = WeightSystem::w1().evaluate(&i_sigma_bracket(s)?)?;
    let d2 = rat((s.d * s.d) as i64);
    let b2 = rat((s.b * s.b) as i64);
    let inv24 = |x: &Rational| (x * rat(24)).recip();
    Ok(w / (rat(2) * &d2) + inv24(&b2) - inv24(&d2) - inv24(&d2) + inv24(&rat(1)))
}

/// Degree one part of the Casson-Walker invariant of surgeries on `K`,
/// computed by both the Alexander route and the contraction route, which
/// must agree.
pub fn lambda_prime(s: &SeifertData) -> Result<Rational> {
    let a = lambda_prime_alexander(s)?;
    let c = lambda_prime_contraction(s)?;
    if a != c {
        return Err(Error::Consistency(format!("lambda' routes disagree: Alexander {a}, contraction {c}")));
    }
    Ok(a)
}

/// `λ₂″(K) = (1/8) ⟨⟨I(F¹) ⊔ I(F²)⟩⟩_{W₂}` for a null-homologous knot.
pub fn lambda2_second(s: &SeifertData) -> Result<Rational> {
    lambda2_second_with(s, Execution::default())
}

pub fn lambda2_second_with(s: &SeifertData, exec: Execution) -> Result<Rational> {
    if s.d != 1 {
        return Err(Error::Precondition(format!("lambda2'' needs a null-homologous knot, got order {}", s.d)));
    }
    let v = stacked_bracket(s, 2, exec)?;
    Ok(WeightSystem::w2().evaluate(&v)? / rat(8))
}

/// `⟨⟨I(F¹) ⊔ ... ⊔ I(Fⁿ)⟩⟩` for `copies` stacked parallel copies.
pub fn stacked_bracket(s: &SeifertData, copies: usize, exec: Execution) -> Result<DiagramVector> {
    let parts: Vec<GraphCombination> = (1..=copies).map(|c| i_sigma(s.genus, |x| surface_curve(c, x))).collect();
    let g = GraphCombination::union_all(parts.iter());
    contract_with(&g, &seifert_linking_table(&s.v, copies), copies, exec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap()
    }

    fn t(c: i64, e: i64) -> LaurentPoly {
        LaurentPoly::monomial(rat(c), e, 1)
    }

    #[test]
    fn trefoil_and_figure_eight() {
        let trefoil = SeifertData::integral(qm(&[&[-1, 1], &[0, -1]])).unwrap();
        let expected = &(&t(1, 1) + &t(-1, 0)) + &t(1, -1);
        assert_eq!(alexander_from_seifert(&trefoil).unwrap(), expected);
        assert_eq!(lambda_prime(&trefoil).unwrap(), rat(1));
        let eight = SeifertData::integral(qm(&[&[1, 1], &[0, -1]])).unwrap();
        let expected = &(&t(-1, 1) + &t(3, 0)) + &t(-1, -1);
        assert_eq!(alexander_from_seifert(&eight).unwrap(), expected);
        assert_eq!(lambda_prime(&eight).unwrap(), rat(-1));
    }

    #[test]
    fn unknot() {
        let u = SeifertData::integral(Matrix::from_rows(vec![]).unwrap()).unwrap();
        assert_eq!(alexander_from_seifert(&u).unwrap(), LaurentPoly::one());
        assert_eq!(lambda_prime(&u).unwrap(), rat(0));
        assert_eq!(lambda2_second(&u).unwrap(), rat(0));
    }

    #[test]
    fn delta_d_small_cases() {
        assert_eq!(delta_d_closed_form(1).unwrap(), LaurentPoly::one());
        assert_eq!(delta_d_determinant(1).unwrap(), LaurentPoly::one());
        let half = ratio(1, 2);
        let d2 = &LaurentPoly::monomial(half.clone(), 1, 2) + &LaurentPoly::monomial(half, -1, 2);
        assert_eq!(delta_d_closed_form(2).unwrap(), d2);
        assert_eq!(delta_d_determinant(2).unwrap(), d2);
        let third = ratio(1, 3);
        let d3 = &(&LaurentPoly::monomial(third.clone(), 1, 1) + &LaurentPoly::constant(third.clone()))
            + &LaurentPoly::monomial(third, -1, 1);
        assert_eq!(delta_d_determinant(3).unwrap(), d3);
    }

    #[test]
    fn validation() {
        assert!(SeifertData::integral(qm(&[&[1, 0], &[0, 1]])).is_err());
        assert!(SeifertData::new(1, qm(&[&[-1, 1], &[0, -1]]), 1, 0, rat(1)).is_err());
        assert!(SeifertData::new(2, qm(&[&[-1, 1], &[0, -1]]), 1, 1, rat(1)).is_err());
        let bad = SeifertData::new(1, qm(&[&[-1, 1], &[0, -1]]), 2, 3, rat(1)).unwrap();
        assert!(matches!(alexander_from_seifert(&bad), Err(Error::Consistency(_))));
    }

    #[test]
    fn rational_knot_alexander_normalization() {
        let s = SeifertData::new(1, qm(&[&[2, 1], &[0, 3]]), 2, 1, rat(6)).unwrap();
        let delta = alexander_from_seifert(&s).unwrap();
        assert!(delta.is_symmetric());
        assert_eq!(delta.eval_at_one(), rat(3));
        assert_eq!(lambda_prime_alexander(&s).unwrap(), lambda_prime_contraction(&s).unwrap());
    }
}
