use std::collections::BTreeMap;

use super::jacobi::{CanonicalForm, DiagramKey, JacobiDiagram};
use crate::error::{Error, Result};

/// Largest degree for which diagram spaces are built.
pub const MAX_DEGREE: usize = 3;

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::Capability(n, format!("0..={MAX_DEGREE}")))
    } else {
        Ok(())
    }
}

/// Every loop-free trivalent diagram with `2n` vertices, connected or not,
/// one representative per isomorphism class in reference orientation,
/// sorted by key. Classes with sign zero (equal to their negative) are
/// included and marked by `sign == 0`.
pub fn enumerate_diagrams(n: usize) -> Result<Vec<CanonicalForm>> {
    check_degree(n)?;
    let v = 2 * n;
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).collect();
    let mut found: BTreeMap<DiagramKey, CanonicalForm> = BTreeMap::new();
    let mut a = vec![vec![0u8; v]; v];
    let mut rem = vec![3u8; v];
    fill(0, &pairs, &mut a, &mut rem, &mut |a| {
        let d = JacobiDiagram::from_key(&key_of(a));
        let cf = d.canonical_form();
        found.entry(cf.key.clone()).or_insert(cf);
    });
    Ok(found.into_values().collect())
}

fn key_of(a: &[Vec<u8>]) -> DiagramKey {
    DiagramKey::from_adjacency(a)
}

fn fill(k: usize, pairs: &[(usize, usize)], a: &mut [Vec<u8>], rem: &mut [u8], out: &mut impl FnMut(&[Vec<u8>])) {
    if k == pairs.len() {
        if rem.iter().all(|&r| r == 0) {
            out(a);
        }
        return;
    }
    let (i, j) = pairs[k];
    // vertex i has no later pair left once j is its last partner
    let last_for_i = j == a.len() - 1;
    let lo = if last_for_i { rem[i] } else { 0 };
    for m in lo..=rem[i].min(rem[j]) {
        a[i][j] = m;
        a[j][i] = m;
        rem[i] -= m;
        rem[j] -= m;
        fill(k + 1, pairs, a, rem, out);
        rem[i] += m;
        rem[j] += m;
    }
    a[i][j] = 0;
    a[j][i] = 0;
}
