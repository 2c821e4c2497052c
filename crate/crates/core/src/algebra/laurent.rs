use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, rat, Rational};
use crate::error::{Error, Result};

/// Laurent polynomial in `t` with rational exponents sharing one common
/// denominator `D`: a finite sum of `c_e t^(e/D)`.
///
/// `D` is kept minimal, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    root: u64,
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { root: 1, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 1)
    }

    /// `coeff * t^(num/den)`.
    pub fn monomial(coeff: Rational, num: i64, den: u64) -> Self {
        assert!(den > 0, "exponent denominator must be positive");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(num, coeff);
        }
        LaurentPoly { root: den, terms }.normalized()
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1, 1)
    }

    /// Common exponent denominator `D`.
    pub fn root_order(&self) -> u64 {
        self.root
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order as `(coeff, exp_num, exp_den)`, each
    /// exponent in lowest terms.
    pub fn terms(&self) -> Vec<(Rational, i64, u64)> {
        self.terms
            .iter()
            .map(|(&e, c)| {
                let g = (e.unsigned_abs()).gcd(&self.root).max(1);
                (c.clone(), e / g as i64, self.root / g)
            })
            .collect()
    }

    /// Coefficient of `t^(num/den)`.
    pub fn coeff(&self, num: i64, den: u64) -> Rational {
        let scaled = num as i128 * self.root as i128;
        if scaled % den as i128 != 0 {
            return Rational::zero();
        }
        let e = (scaled / den as i128) as i64;
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            self.root = 1;
            return self;
        }
        let g = self
            .terms
            .keys()
            .fold(self.root, |g, &e| g.gcd(&e.unsigned_abs()));
        if g > 1 {
            self.root /= g;
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(e, c)| (e / g as i64, c))
                .collect();
        }
        self
    }

    fn with_root(&self, root: u64) -> BTreeMap<i64, Rational> {
        debug_assert_eq!(root % self.root, 0);
        let k = (root / self.root) as i64;
        self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentPoly {
            root: self.root,
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
        .normalized()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitute `t -> t^(num/den)`.
    pub fn substitute_power(&self, num: i64, den: u64) -> Self {
        assert!(den > 0 && num != 0, "substitution exponent must be nonzero");
        LaurentPoly {
            root: self.root * den,
            terms: self.terms.iter().map(|(&e, c)| (e * num, c.clone())).collect(),
        }
        .normalized()
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// `k`-th derivative at `t = 1`: the sum of `c_e` times the falling
    /// factorial of the exponent `e/D` of length `k`.
    pub fn derivative_at_one(&self, k: u32) -> Rational {
        let mut total = Rational::zero();
        for (&e, c) in &self.terms {
            let x = Rational::new(e.into(), self.root.into());
            let mut f = Rational::one();
            for j in 0..k {
                f *= &x - rat(j as i64);
            }
            total += c * f;
        }
        total
    }

    /// `P(t^-1) == P(t)`.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&e, c)| self.terms.get(&-e) == Some(c))
    }

    /// Exact quotient `self / divisor`; fails when the divisor does not
    /// divide in the Laurent ring.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let root = self.root.lcm(&divisor.root);
        let a = self.with_root(root);
        let b = divisor.with_root(root);
        let a0 = *a.keys().next().unwrap();
        let b0 = *b.keys().next().unwrap();
        // Dense polynomials in u = t^(1/root) with nonzero constant terms.
        let dense = |m: &BTreeMap<i64, Rational>, shift: i64| {
            let top = *m.keys().next_back().unwrap() - shift;
            let mut v = vec![Rational::zero(); top as usize + 1];
            for (&e, c) in m {
                v[(e - shift) as usize] = c.clone();
            }
            v
        };
        let mut rem = dense(&a, a0);
        let den = dense(&b, b0);
        if rem.len() < den.len() {
            return Err(Error::InexactDivision(format!("{self} by {divisor}")));
        }
        let lead = den.last().unwrap().clone();
        let qlen = rem.len() - den.len() + 1;
        let mut quot = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + den.len() - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("{self} by {divisor}")));
        }
        let terms = quot
            .into_iter()
            .enumerate()
            .map(|(i, c)| (i as i64 + a0 - b0, c))
            .collect();
        Ok(LaurentPoly { root, terms }.normalized())
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let root = self.root.lcm(&other.root);
        let mut terms = self.with_root(root);
        for (e, c) in other.with_root(root) {
            let slot = terms.entry(e).or_insert_with(Rational::zero);
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        LaurentPoly { root, terms }.normalized()
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.combine(rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.combine(rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let root = self.root.lcm(&rhs.root);
        let a = self.with_root(root);
        let b = rhs.with_root(root);
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                *terms.entry(ea + eb).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        LaurentPoly { root, terms }.normalized()
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            root: self.root,
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (c, num, den)) in self.terms().into_iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c) };
            if i == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mono = match (num, den) {
                (0, _) => String::new(),
                (1, 1) => "t".to_string(),
                (n, 1) => format!("t^{n}"),
                (n, d) => format!("t^({n}/{d})"),
            };
            if mono.is_empty() {
                f.write_str(&format_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", format_rational(&mag), mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn mono(c: i64, n: i64, d: u64) -> LaurentPoly {
        LaurentPoly::monomial(rat(c), n, d)
    }

    #[test]
    fn root_order_is_minimal() {
        let p = &mono(1, 1, 2) * &mono(1, 1, 2);
        assert_eq!(p, LaurentPoly::t());
        assert_eq!(p.root_order(), 1);
        assert_eq!(mono(3, 2, 4).root_order(), 2);
    }

    #[test]
    fn exact_division() {
        // (t - t^-1) / (t^(1/2) - t^(-1/2)) = t^(1/2) + t^(-1/2)
        let num = &mono(1, 1, 1) - &mono(1, -1, 1);
        let den = &mono(1, 1, 2) - &mono(1, -1, 2);
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q, &mono(1, 1, 2) + &mono(1, -1, 2));
        assert!(den.div_exact(&num).is_err());
        let one_plus_t = &LaurentPoly::one() + &LaurentPoly::t();
        assert!(LaurentPoly::t().div_exact(&one_plus_t).is_err());
    }

    #[test]
    fn derivatives_at_one() {
        // t - 1 + t^-1: P''(1) = 0 + (-1)(-2) = 2
        let p = &(&mono(1, 1, 1) - &mono(1, 0, 1)) + &mono(1, -1, 1);
        assert_eq!(p.eval_at_one(), rat(1));
        assert_eq!(p.derivative_at_one(1), rat(0));
        assert_eq!(p.derivative_at_one(2), rat(2));
        let h = mono(1, 1, 2);
        assert_eq!(h.derivative_at_one(2), ratio(-1, 4));
    }

    #[test]
    fn coefficient_lookup_and_display() {
        let p = &mono(2, 1, 2) - &mono(1, -3, 1);
        assert_eq!(p.coeff(1, 2), rat(2));
        assert_eq!(p.coeff(2, 4), rat(2));
        assert_eq!(p.coeff(-3, 1), rat(-1));
        assert_eq!(p.coeff(1, 3), rat(0));
        assert_eq!(p.to_string(), "2*t^(1/2) - t^-3");
        assert!(!p.is_symmetric());
    }

    #[test]
    fn substitution() {
        let p = &mono(1, 1, 1) + &mono(5, -2, 1);
        let q = p.substitute_power(1, 3);
        assert_eq!(q.coeff(1, 3), rat(1));
        assert_eq!(q.coeff(-2, 3), rat(5));
        assert_eq!(q.substitute_power(3, 1), p);
        assert_eq!(p.substitute_power(-1, 1).coeff(2, 1), rat(5));
    }
}
