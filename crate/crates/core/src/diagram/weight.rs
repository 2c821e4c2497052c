use std::collections::BTreeMap;

use num_traits::Zero;

use super::jacobi::{DiagramKey, JacobiDiagram};
use super::quotient::quotient;
use super::reference;
use super::vector::DiagramVector;
use crate::algebra::{rat, Matrix, Rational};
use crate::error::{Error, Result};

/// Linear functional on the degree `n` diagram space, stored by its values
/// on the quotient basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    degree: usize,
    values: BTreeMap<DiagramKey, Rational>,
}

impl WeightSystem {
    /// The functional taking the prescribed values on the given oriented
    /// diagrams. They must form a basis of the quotient.
    pub fn from_references(degree: usize, refs: &[(JacobiDiagram, Rational)]) -> Result<Self> {
        let q = quotient(degree)?;
        if refs.len() != q.dim() {
            return Err(Error::Dimension(format!("{} reference values for a {}-dimensional space", refs.len(), q.dim())));
        }
        let mut rows = Vec::with_capacity(refs.len());
        for (d, _) in refs {
            let v = DiagramVector::from_diagram(d);
            if v.degree() != degree {
                return Err(Error::Dimension(format!("reference diagram of degree {} in degree {degree}", v.degree())));
            }
            rows.push(v.coordinates()?.into_iter().map(|(_, c)| c).collect::<Vec<_>>());
        }
        let m = Matrix::from_fn(refs.len(), q.dim(), |i, j| rows[i][j].clone());
        let b: Vec<Rational> = refs.iter().map(|(_, x)| x.clone()).collect();
        let w = m.solve(&b)?;
        Ok(WeightSystem { degree, values: q.basis().iter().cloned().zip(w).collect() })
    }

    /// Degree one: the planar theta has weight 2.
    pub fn w1() -> Self {
        Self::from_references(1, &[(reference::theta(), rat(2))]).expect("degree one weight system")
    }

    /// Degree two: the planar tetrahedron has weight 1 and two thetas weight 0.
    pub fn w2() -> Self {
        Self::from_references(2, &[(reference::tetrahedron(), rat(1)), (reference::theta_theta(), rat(0))])
            .expect("degree two weight system")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn evaluate(&self, v: &DiagramVector) -> Result<Rational> {
        if v.degree() != self.degree {
            return Err(Error::Dimension(format!("weight system of degree {} on a degree {} vector", self.degree, v.degree())));
        }
        let r = v.reduce()?;
        Ok(r.coeffs().iter().fold(Rational::zero(), |acc, (k, c)| acc + c * self.values.get(k).cloned().unwrap_or_default()))
    }

    pub fn value_on(&self, d: &JacobiDiagram) -> Result<Rational> {
        self.evaluate(&DiagramVector::from_diagram(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn calibration_values() {
        let w1 = WeightSystem::w1();
        assert_eq!(w1.value_on(&reference::theta()).unwrap(), rat(2));
        assert_eq!(w1.value_on(&reference::theta_same()).unwrap(), rat(-2));
        let w2 = WeightSystem::w2();
        assert_eq!(w2.value_on(&reference::tetrahedron()).unwrap(), rat(1));
        assert_eq!(w2.value_on(&reference::theta_theta()).unwrap(), rat(0));
    }

    #[test]
    fn ladder_is_twice_tetrahedron() {
        assert_eq!(WeightSystem::w2().value_on(&reference::ladder()).unwrap(), rat(2));
    }
}
