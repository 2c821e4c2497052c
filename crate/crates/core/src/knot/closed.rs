use num_traits::Zero;

use crate::algebra::{rat, Matrix, Rational};
use crate::error::{Error, Result};

/// Odd twist parameters of the pretzel knot `K(x, y, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PretzelParams {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl PretzelParams {
    pub fn new(x: i64, y: i64, z: i64) -> Result<Self> {
        for (name, v) in [("x", x), ("y", y), ("z", z)] {
            if v % 2 == 0 {
                return Err(Error::Precondition(format!("pretzel parameter {name} = {v} must be odd")));
            }
        }
        Ok(PretzelParams { x, y, z })
    }
}

/// `w₃(K(x,y,z)) = (x²(y+z) + y²(x+z) + z²(x+y))/32 + xyz/8 + (x+y+z)/16`.
pub fn w3_pretzel(p: PretzelParams) -> Rational {
    let (x, y, z) = (rat(p.x), rat(p.y), rat(p.z));
    let cubic = &x * &x * (&y + &z) + &y * &y * (&x + &z) + &z * &z * (&x + &y);
    cubic / rat(32) + &x * &y * &z / rat(8) + (&x + &y + &z) / rat(16)
}

/// `λ′(K(x,y,z)) = (xy + yz + zx + 1)/4`.
pub fn lambda_prime_pretzel(p: PretzelParams) -> Rational {
    rat(p.x * p.y + p.y * p.z + p.z * p.x + 1) / rat(4)
}

/// `w₃` of a pretzel knot whose genus one surface is embedded so that its
/// band cores have the given `λ′` invariants:
/// `w₃(K(x,y,z)) - (x/2)λ′X - (y/2)λ′Y - (z/2)λ′Z + (3/2)λ′XY`.
pub fn w3_embedded_genus_one(
    p: PretzelParams,
    lx: &Rational,
    ly: &Rational,
    lz: &Rational,
    lxy: &Rational,
) -> Rational {
    let half = |k: i64, l: &Rational| rat(k) * l / rat(2);
    w3_pretzel(p) - half(p.x, lx) - half(p.y, ly) - half(p.z, lz) + half(3, lxy)
}

/// Symmetric linking matrix of the smoothings of a singular knot with `k`
/// pairwise unlinked double points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularLinkingMatrix {
    ell: Matrix<Rational>,
}

impl SingularLinkingMatrix {
    pub fn new(ell: Matrix<Rational>) -> Result<Self> {
        if !ell.is_square() {
            return Err(Error::Dimension("singular linking matrix must be square".into()));
        }
        if ell != ell.transpose() {
            return Err(Error::Precondition("singular linking matrix must be symmetric".into()));
        }
        Ok(SingularLinkingMatrix { ell })
    }

    pub fn double_points(&self) -> usize {
        self.ell.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.ell.get(i, j)
    }
}

/// The invariants determined by the linking matrix of a singular knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularInvariants {
    /// One double point: `λ′(K^s) = ℓ₁₁`.
    One { lambda_prime: Rational },
    /// Two double points: `w₃(K^s) = -ℓ₁₂/2` and `C(K^s) = 0`.
    Two { w3: Rational, c: Rational },
}

pub fn singular_invariants(m: &SingularLinkingMatrix) -> Result<SingularInvariants> {
    match m.double_points() {
        1 => Ok(SingularInvariants::One { lambda_prime: m.get(0, 0).clone() }),
        2 => Ok(SingularInvariants::Two { w3: -m.get(0, 1) / rat(2), c: Rational::zero() }),
        k => Err(Error::Capability(k, "1 or 2 double points".into())),
    }
}

/// `w₃(K⁺) - w₃(K⁻)` for a crossing change whose smoothing has components
/// `K′`, `K″`: `(λ′K′ + λ′K″)/2 - (λ′K⁺ + λ′K⁻ + lk(K′,K″)²)/4`.
pub fn w3_crossing_change(
    lp_k1: &Rational,
    lp_k2: &Rational,
    lp_plus: &Rational,
    lp_minus: &Rational,
    lk: &Rational,
) -> Rational {
    (lp_k1 + lp_k2) / rat(2) - (lp_plus + lp_minus + lk * lk) / rat(4)
}

/// `ν_abc = a·lk(Σ₀∩Σ₁, Σ₂∩Σ₃) + b·lk(Σ₀∩Σ₂, Σ₃∩Σ₁) + c·lk(Σ₀∩Σ₃, Σ₁∩Σ₂)`,
/// defined for `a + b + c = 0`.
pub fn nu_abc(a: &Rational, b: &Rational, c: &Rational, l01_23: &Rational, l02_31: &Rational, l03_12: &Rational) -> Result<Rational> {
    if !(a + b + c).is_zero() {
        return Err(Error::Precondition(format!("a + b + c = {} must vanish", a + b + c)));
    }
    Ok(a * l01_23 + b * l02_31 + c * l03_12)
}

/// `μ(01,23) = ν_{1,0,-1}`.
pub fn mu_01_23(l01_23: &Rational, l02_31: &Rational, l03_12: &Rational) -> Rational {
    nu_abc(&rat(1), &rat(0), &rat(-1), l01_23, l02_31, l03_12).expect("coefficients sum to zero")
}

/// `μ(10,23) = ν_{-1,1,0}`.
pub fn mu_10_23(l01_23: &Rational, l02_31: &Rational, l03_12: &Rational) -> Rational {
    nu_abc(&rat(-1), &rat(1), &rat(0), l01_23, l02_31, l03_12).expect("coefficients sum to zero")
}

fn check_orders(ds: &[u64]) -> Result<Rational> {
    if ds.iter().any(|&d| d == 0) {
        return Err(Error::Precondition("component orders must be positive".into()));
    }
    Ok(ds.iter().fold(rat(1), |acc, &d| acc * rat((d * d) as i64)))
}

/// `λ′(K₁, K₂) = -lk(Σ₁∩Σ₂, (Σ₁∩Σ₂)∥) / (d₁² d₂²)`.
pub fn lambda_prime_pair(d1: u64, d2: u64, self_lk_intersection: &Rational) -> Result<Rational> {
    Ok(-self_lk_intersection / check_orders(&[d1, d2])?)
}

/// `λ′(K₁, K₂, K₃) = ⟨Σ₁,Σ₂,Σ₃⟩² / (d₁² d₂² d₃²)`.
pub fn lambda_prime_triple(d1: u64, d2: u64, d3: u64, triple: &Rational) -> Result<Rational> {
    Ok(triple * triple / check_orders(&[d1, d2, d3])?)
}

/// `λ′` of an algebraically split link with `n >= 4` components vanishes.
pub fn lambda_prime_many(n: usize) -> Result<Rational> {
    if n < 4 {
        return Err(Error::Precondition(format!("{n} components: use the pair or triple formula")));
    }
    Ok(Rational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn pretzel_values() {
        let trivial = PretzelParams::new(-1, 1, 1).unwrap();
        assert_eq!(w3_pretzel(trivial), rat(0));
        assert_eq!(lambda_prime_pretzel(trivial), rat(0));
        let trefoil = PretzelParams::new(1, 1, 1).unwrap();
        assert_eq!(w3_pretzel(trefoil), ratio(1, 2));
        assert_eq!(lambda_prime_pretzel(trefoil), rat(1));
        assert!(PretzelParams::new(2, 1, 1).is_err());
    }

    #[test]
    fn embedded_genus_one_linearity() {
        let p = PretzelParams::new(1, 3, -5).unwrap();
        let (z, o) = (rat(0), rat(1));
        assert_eq!(w3_embedded_genus_one(p, &z, &z, &z, &z), w3_pretzel(p));
        assert_eq!(w3_embedded_genus_one(p, &o, &z, &z, &z), w3_pretzel(p) - ratio(1, 2));
        assert_eq!(w3_embedded_genus_one(p, &z, &z, &z, &o), w3_pretzel(p) + ratio(3, 2));
    }

    #[test]
    fn singular() {
        let one = SingularLinkingMatrix::new(Matrix::from_rows(vec![vec![rat(1)]]).unwrap()).unwrap();
        assert_eq!(singular_invariants(&one).unwrap(), SingularInvariants::One { lambda_prime: rat(1) });
        let two = SingularLinkingMatrix::new(Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(4)]]).unwrap()).unwrap();
        assert_eq!(singular_invariants(&two).unwrap(), SingularInvariants::Two { w3: ratio(-1, 2), c: rat(0) });
        let three = SingularLinkingMatrix::new(Matrix::zeros(3, 3)).unwrap();
        assert!(matches!(singular_invariants(&three), Err(Error::Capability(3, _))));
        assert!(SingularLinkingMatrix::new(Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(2), rat(0)]]).unwrap()).is_err());
    }

    #[test]
    fn nu_examples() {
        let (z, five, two) = (rat(0), rat(5), rat(2));
        assert_eq!(nu_abc(&z, &z, &z, &five, &z, &two).unwrap(), rat(0));
        assert_eq!(nu_abc(&rat(1), &z, &rat(-1), &five, &z, &two).unwrap(), rat(3));
        assert!(nu_abc(&rat(1), &z, &z, &five, &z, &two).is_err());
    }

    #[test]
    fn link_formulas() {
        assert_eq!(lambda_prime_pair(1, 1, &rat(1)).unwrap(), rat(-1));
        assert_eq!(lambda_prime_triple(1, 1, 1, &rat(-1)).unwrap(), rat(1));
        assert_eq!(lambda_prime_pair(2, 3, &rat(9)).unwrap(), ratio(-1, 4));
        assert_eq!(lambda_prime_many(4).unwrap(), rat(0));
        assert!(lambda_prime_pair(0, 1, &rat(1)).is_err());
    }

    #[test]
    fn crossing_change_zero() {
        let z = rat(0);
        assert_eq!(w3_crossing_change(&z, &z, &z, &z, &z), rat(0));
    }
}
