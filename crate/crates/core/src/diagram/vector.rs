use std::collections::BTreeMap;

use num_traits::Zero;

use super::jacobi::{DiagramKey, JacobiDiagram};
use super::quotient::quotient;
use super::reference;
use crate::algebra::{Matrix, Rational};
use crate::error::{Error, Result};

/// Rational combination of degree `n` diagram classes, each key standing for
/// its reference orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramVector {
    degree: usize,
    coeffs: BTreeMap<DiagramKey, Rational>,
}

/// Oriented diagrams used to report coordinates by name.
pub fn named_basis(n: usize) -> Option<Vec<(&'static str, JacobiDiagram)>> {
    match n {
        0 => Some(vec![("empty", JacobiDiagram::empty())]),
        1 => Some(vec![("theta", reference::theta())]),
        2 => Some(vec![("theta2", reference::theta_theta()), ("tet", reference::tetrahedron())]),
        _ => None,
    }
}

impl DiagramVector {
    pub fn zero(degree: usize) -> Self {
        DiagramVector { degree, coeffs: BTreeMap::new() }
    }

    pub fn from_diagram(d: &JacobiDiagram) -> Self {
        let mut v = Self::zero(d.degree());
        v.add_diagram(d, &Rational::from_integer(1.into())).expect("degree matches");
        v
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<DiagramKey, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, key: &DiagramKey) -> Rational {
        self.coeffs.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Add `c` times an oriented diagram. Diagrams equal to their own
    /// negative (looped ones included) contribute nothing.
    pub fn add_diagram(&mut self, d: &JacobiDiagram, c: &Rational) -> Result<()> {
        if d.vertex_count() != 2 * self.degree {
            return Err(Error::Structural(format!(
                "diagram with {} vertices added to a degree {} vector",
                d.vertex_count(),
                self.degree
            )));
        }
        let cf = d.canonical_form();
        if cf.sign != 0 {
            self.add_key(cf.key, &(c * Rational::from_integer(cf.sign.into())));
        }
        Ok(())
    }

    /// Add `c` times the reference orientation of `key`.
    pub fn add_key(&mut self, key: DiagramKey, c: &Rational) {
        let slot = self.coeffs.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn add_vector(&mut self, other: &DiagramVector) -> Result<()> {
        if other.degree != self.degree {
            return Err(Error::Dimension(format!("degrees {} and {}", self.degree, other.degree)));
        }
        for (k, c) in &other.coeffs {
            self.add_key(k.clone(), c);
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        DiagramVector { degree: self.degree, coeffs: self.coeffs.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    /// Rewrite in the basis of the quotient by AS and IHX.
    pub fn reduce(&self) -> Result<Self> {
        let q = quotient(self.degree)?;
        Ok(DiagramVector { degree: self.degree, coeffs: q.reduce(&self.coeffs) })
    }

    /// Drop every disconnected diagram, then reduce. Connectedness is
    /// preserved by IHX, so this is well defined on the quotient.
    pub fn project_connected(&self) -> Result<Self> {
        let coeffs = self.coeffs.iter().filter(|(k, _)| k.is_connected()).map(|(k, c)| (k.clone(), c.clone())).collect();
        DiagramVector { degree: self.degree, coeffs }.reduce()
    }

    /// Coordinates in the quotient basis, in basis order.
    pub fn coordinates(&self) -> Result<Vec<(DiagramKey, Rational)>> {
        let q = quotient(self.degree)?;
        let r = q.reduce(&self.coeffs);
        Ok(q.basis().iter().cloned().zip(q.coords(&r)).collect())
    }

    /// Coordinates against the named planar diagrams where available
    /// (`theta`; `theta2`, `tet`), otherwise against the basis keys in hex.
    pub fn named_coordinates(&self) -> Result<Vec<(String, Rational)>> {
        let q = quotient(self.degree)?;
        let target = q.coords(&q.reduce(&self.coeffs));
        let Some(named) = named_basis(self.degree) else {
            return Ok(q.basis().iter().map(|k| k.to_hex()).zip(target).collect());
        };
        // columns are the named diagrams written in the quotient basis
        let cols: Vec<Vec<Rational>> = named
            .iter()
            .map(|(_, d)| q.coords(&DiagramVector::from_diagram(d).reduce().map(|v| v.coeffs).unwrap_or_default()))
            .collect();
        let m = Matrix::from_fn(q.dim(), named.len(), |i, j| cols[j][i].clone());
        let x = m.solve(&target)?;
        Ok(named.iter().map(|(n, _)| n.to_string()).zip(x).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn named_coordinates_of_planar_theta() {
        let v = DiagramVector::from_diagram(&reference::theta());
        assert_eq!(v.named_coordinates().unwrap(), vec![("theta".to_string(), rat(1))]);
        let w = DiagramVector::from_diagram(&reference::theta_same());
        assert_eq!(w.named_coordinates().unwrap(), vec![("theta".to_string(), rat(-1))]);
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let mut v = DiagramVector::zero(2);
        assert!(v.add_diagram(&reference::theta(), &rat(1)).is_err());
        assert!(v.add_vector(&DiagramVector::zero(1)).is_err());
    }
}
