use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{format_rational, Rational};
use crate::error::{Error, Result};

/// Name of an oriented curve (or a pushed-off copy) in the ambient manifold.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveId(String);

impl CurveId {
    pub fn new(name: impl Into<String>) -> Self {
        CurveId(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for CurveId {
    fn from(s: &str) -> Self {
        CurveId(s.to_string())
    }
}

impl From<String> for CurveId {
    fn from(s: String) -> Self {
        CurveId(s)
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Symmetric table of linking numbers indexed by unordered curve pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinkingTable {
    entries: BTreeMap<(CurveId, CurveId), Rational>,
}

fn ordered(a: &CurveId, b: &CurveId) -> (CurveId, CurveId) {
    if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) }
}

impl LinkingTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record `lk(a, b)`. Re-entering a pair with a different value is an
    /// error.
    pub fn insert(&mut self, a: impl Into<CurveId>, b: impl Into<CurveId>, value: Rational) -> Result<()> {
        let key = ordered(&a.into(), &b.into());
        match self.entries.get(&key) {
            Some(old) if *old != value => Err(Error::Schema(format!(
                "conflicting linking numbers for ({}, {}): {} and {}",
                key.0,
                key.1,
                format_rational(old),
                format_rational(&value)
            ))),
            _ => {
                self.entries.insert(key, value);
                Ok(())
            }
        }
    }

    pub fn get(&self, a: &CurveId, b: &CurveId) -> Result<&Rational> {
        self.entries
            .get(&ordered(a, b))
            .ok_or_else(|| Error::MissingLinking(a.to_string(), b.to_string()))
    }

    pub fn contains(&self, a: &CurveId, b: &CurveId) -> bool {
        self.entries.contains_key(&ordered(a, b))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CurveId, &CurveId, &Rational)> {
        self.entries.iter().map(|((a, b), v)| (a, b, v))
    }

    /// Add every entry of `other`, failing on conflicts.
    pub fn merge(&mut self, other: &LinkingTable) -> Result<()> {
        for (a, b, v) in other.iter() {
            self.insert(a.clone(), b.clone(), v.clone())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn symmetric_lookup() {
        let mut t = LinkingTable::new();
        t.insert("b", "a", rat(3)).unwrap();
        assert_eq!(t.get(&"a".into(), &"b".into()).unwrap(), &rat(3));
        t.insert("a", "b", rat(3)).unwrap();
        assert!(t.insert("a", "b", rat(4)).is_err());
        let err = t.get(&"a".into(), &"c".into()).unwrap_err();
        assert_eq!(err, Error::MissingLinking("a".into(), "c".into()));
    }
}
