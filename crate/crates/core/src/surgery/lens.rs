use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::{rat, ratio, Rational};
use crate::error::{Error, Result};

/// Surgery coefficient `p/q` with `p != 0` and `gcd(p, q) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurgerySpec {
    p: i64,
    q: i64,
}

impl SurgerySpec {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 {
            return Err(Error::Precondition("surgery coefficient needs p != 0".into()));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::Precondition(format!("p = {p} and q = {q} are not coprime")));
        }
        Ok(SurgerySpec { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `q/p`.
    pub fn inverse_slope(&self) -> Rational {
        ratio(self.q, self.p)
    }
}

/// Classical Dedekind sum `s(p, q) = Σ_{k=1}^{q-1} ((k/q)) ((kp/q))` with the
/// sawtooth `((x)) = x - floor(x) - 1/2` off the integers and `0` on them.
pub fn dedekind_sum(p: i64, q: i64) -> Result<Rational> {
    if q < 1 {
        return Err(Error::Precondition(format!("Dedekind sum needs q >= 1, got {q}")));
    }
    // Σ (2k - q)(2r - q) / (4q²) over k with r = kp mod q nonzero
    let mut total = BigInt::zero();
    let (p, q) = (p as i128, q as i128);
    for k in 1..q {
        let r = (k * p).rem_euclid(q);
        if r != 0 {
            total += BigInt::from((2 * k - q) * (2 * r - q));
        }
    }
    Ok(Rational::new(total, BigInt::from(4 * q * q)))
}

/// Casson-Walker invariant `λ(L(p, -q))` of `p/q` surgery on the unknot:
/// `(q/p)(-1/24 - (p²+1)/(24q²)) + sign(pq)/8 + s(p,q)/2` with `q > 0`.
pub fn lambda_lens(s: SurgerySpec) -> Result<Rational> {
    let (p, q) = if s.q < 0 { (-s.p, -s.q) } else { (s.p, s.q) };
    if q == 0 {
        return Ok(Rational::zero());
    }
    let (pr, qr) = (rat(p), rat(q));
    let main = &qr / &pr * (ratio(-1, 24) - (&pr * &pr + rat(1)) / (rat(24) * &qr * &qr));
    let sign = ratio((p.signum() * q.signum()) as i64, 8);
    Ok(main + sign + dedekind_sum(p, q)? / rat(2))
}

/// `λ(M(K; p/q)) = λ(M) + (q/p) λ′(K) + λ(L(p, -q))`.
pub fn lambda_surgery(lambda_m: &Rational, lambda_prime: &Rational, s: SurgerySpec) -> Result<Rational> {
    Ok(lambda_m + s.inverse_slope() * lambda_prime + lambda_lens(s)?)
}

/// `λ₂(M(K; 1/r)) = λ₂(M) + λ₂″(K) r² + w₃(K) r` for an integer `r`.
pub fn lambda2_integral_surgery(lambda2_m: &Rational, lambda2_second: &Rational, w3: &Rational, r: i64) -> Rational {
    let r = rat(r);
    lambda2_m + lambda2_second * &r * &r + w3 * &r
}

/// `λ₂(M(K; p/q)) = λ₂(M) + λ₂″ (q/p)² + w₃ (q/p) + C(K; q/p) + λ₂(L(p, -q))`
/// with the correction `C` and the lens space term supplied by the caller.
pub fn lambda2_surgery(
    lambda2_m: &Rational,
    lambda2_second: &Rational,
    w3: &Rational,
    c: &Rational,
    lambda2_lens: &Rational,
    s: SurgerySpec,
) -> Rational {
    let r = s.inverse_slope();
    lambda2_m + lambda2_second * &r * &r + w3 * &r + c + lambda2_lens
}
