use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Uni-trivalent-free Jacobi diagram: a trivalent graph whose vertices carry
/// a cyclic order of their half-edges.
///
/// Half-edges `3v`, `3v+1`, `3v+2` belong to vertex `v`, listed in their
/// cyclic order. `mate` is the fixed-point-free involution pairing the two
/// half-edges of each edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct JacobiDiagram {
    mate: Vec<usize>,
}

/// Canonical encoding of an unoriented diagram: the vertex count followed by
/// the upper triangle (diagonal included) of the minimal multigraph
/// adjacency matrix over all vertex relabellings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramKey(Vec<u8>);

/// Canonical key of a diagram together with the sign relating the given
/// orientation to the reference orientation of the key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub key: DiagramKey,
    /// `+1`, `-1`, or `0` when the diagram equals its own negative.
    pub sign: i8,
    /// Automorphisms acting on half-edges.
    pub automorphisms: u64,
}

impl DiagramKey {
    pub fn vertex_count(&self) -> usize {
        self.0[0] as usize
    }

    pub fn degree(&self) -> usize {
        self.vertex_count() / 2
    }

    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn adjacency(&self) -> Vec<Vec<u8>> {
        let v = self.vertex_count();
        let mut a = vec![vec![0u8; v]; v];
        let mut it = self.0[1..].iter();
        for i in 0..v {
            for j in i..v {
                let x = *it.next().expect("truncated diagram key");
                a[i][j] = x;
                a[j][i] = x;
            }
        }
        a
    }

    pub fn has_loop(&self) -> bool {
        let a = self.adjacency();
        (0..a.len()).any(|i| a[i][i] > 0)
    }

    pub fn components(&self) -> usize {
        components_of(&self.adjacency()).len()
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bad = || Error::Schema(format!("bad diagram key {s:?}"));
        if s.len() % 2 != 0 || s.is_empty() {
            return Err(bad());
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).map_err(|_| bad()))
            .collect::<Result<Vec<u8>>>()?;
        let v = bytes[0] as usize;
        if bytes.len() != 1 + v * (v + 1) / 2 {
            return Err(bad());
        }
        let key = DiagramKey(bytes);
        let a = key.adjacency();
        if a.iter().enumerate().any(|(i, row)| row.iter().sum::<u8>() + row[i] != 3) {
            return Err(bad());
        }
        Ok(key)
    }

    pub(crate) fn from_adjacency(a: &[Vec<u8>]) -> Self {
        let v = a.len();
        let mut bytes = Vec::with_capacity(1 + v * (v + 1) / 2);
        bytes.push(v as u8);
        for i in 0..v {
            for j in i..v {
                bytes.push(a[i][j]);
            }
        }
        DiagramKey(bytes)
    }
}

impl fmt::Debug for DiagramKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiagramKey({})", self.to_hex())
    }
}

impl fmt::Display for DiagramKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

fn components_of(a: &[Vec<u8>]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            for w in 0..n {
                if a[u][w] > 0 && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Calls `f` on every permutation of `0..n`, as `perm[old] = new`.
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

impl JacobiDiagram {
    /// Diagram from a mate array; `mate.len()` must be a multiple of three.
    pub fn from_mates(mate: Vec<usize>) -> Result<Self> {
        if mate.len() % 3 != 0 {
            return Err(Error::Structural(format!("{} half-edges is not a multiple of 3", mate.len())));
        }
        for (h, &m) in mate.iter().enumerate() {
            if m >= mate.len() || m == h || mate[m] != h {
                return Err(Error::Structural(format!("half-edge {h} is not properly paired")));
            }
        }
        Ok(JacobiDiagram { mate })
    }

    /// Diagram from the exchange format: vertices list their half-edge ids in
    /// cyclic order, edges pair half-edge ids. Ids are arbitrary integers.
    pub fn from_vertices(vertices: &[[u64; 3]], edges: &[[u64; 2]]) -> Result<Self> {
        let mut pos: HashMap<u64, usize> = HashMap::new();
        for (v, hs) in vertices.iter().enumerate() {
            for (k, &h) in hs.iter().enumerate() {
                if pos.insert(h, 3 * v + k).is_some() {
                    return Err(Error::Structural(format!("half-edge {h} occurs at more than one vertex slot")));
                }
            }
        }
        let mut mate = vec![usize::MAX; 3 * vertices.len()];
        for &[a, b] in edges {
            let (Some(&pa), Some(&pb)) = (pos.get(&a), pos.get(&b)) else {
                return Err(Error::Structural(format!("edge ({a}, {b}) uses an unknown half-edge")));
            };
            if pa == pb || mate[pa] != usize::MAX || mate[pb] != usize::MAX {
                return Err(Error::Structural(format!("edge ({a}, {b}) reuses a half-edge")));
            }
            mate[pa] = pb;
            mate[pb] = pa;
        }
        if let Some(h) = mate.iter().position(|&m| m == usize::MAX) {
            let id = pos.iter().find(|(_, &p)| p == h).map(|(id, _)| *id).unwrap_or_default();
            return Err(Error::Structural(format!("half-edge {id} is not on any edge")));
        }
        Ok(JacobiDiagram { mate })
    }

    /// Exchange-format description with half-edge ids `0..3V`.
    pub fn to_vertices(&self) -> (Vec<[u64; 3]>, Vec<[u64; 2]>) {
        let vs = (0..self.vertex_count())
            .map(|v| [3 * v as u64, 3 * v as u64 + 1, 3 * v as u64 + 2])
            .collect();
        let es = self.edges().into_iter().map(|(a, b)| [a as u64, b as u64]).collect();
        (vs, es)
    }

    pub fn empty() -> Self {
        JacobiDiagram { mate: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.mate.len() / 3
    }

    /// Half the number of vertices.
    pub fn degree(&self) -> usize {
        self.vertex_count() / 2
    }

    pub fn mate(&self, h: usize) -> usize {
        self.mate[h]
    }

    pub fn mates(&self) -> &[usize] {
        &self.mate
    }

    /// Edges as half-edge pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.mate.len()).filter(|&h| h < self.mate[h]).map(|h| (h, self.mate[h])).collect()
    }

    pub fn has_loop(&self) -> bool {
        (0..self.mate.len()).any(|h| h / 3 == self.mate[h] / 3)
    }

    pub fn adjacency(&self) -> Vec<Vec<u8>> {
        let n = self.vertex_count();
        let mut a = vec![vec![0u8; n]; n];
        for (x, y) in self.edges() {
            let (u, v) = (x / 3, y / 3);
            a[u][v] += 1;
            if u != v {
                a[v][u] += 1;
            }
        }
        a
    }

    /// Vertex sets of the connected components, each sorted, in order of
    /// their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(&self.adjacency())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn disjoint_union(&self, other: &JacobiDiagram) -> JacobiDiagram {
        let shift = self.mate.len();
        let mut mate = self.mate.clone();
        mate.extend(other.mate.iter().map(|&m| m + shift));
        JacobiDiagram { mate }
    }

    /// Rebuild with vertex `v` getting the half-edges `vertices[v]` (old
    /// half-edge ids) in that cyclic order. Mates are kept.
    pub fn regroup(&self, vertices: &[[usize; 3]]) -> Result<JacobiDiagram> {
        let vs: Vec<[u64; 3]> = vertices.iter().map(|t| t.map(|h| h as u64)).collect();
        let es: Vec<[u64; 2]> = self.edges().into_iter().map(|(a, b)| [a as u64, b as u64]).collect();
        JacobiDiagram::from_vertices(&vs, &es)
    }

    /// Relabel vertices by `perm[old] = new` and rotate the cyclic order at
    /// each vertex by `rot[old]` steps. Describes the same oriented diagram.
    pub fn relabelled(&self, perm: &[usize], rot: &[usize]) -> JacobiDiagram {
        let n = self.vertex_count();
        let mut vertices = vec![[0usize; 3]; n];
        for v in 0..n {
            let r = rot[v] % 3;
            vertices[perm[v]] = [3 * v + r, 3 * v + (r + 1) % 3, 3 * v + (r + 2) % 3];
        }
        self.regroup(&vertices).expect("relabelling preserves validity")
    }

    /// Reverse the cyclic order at vertex `v`.
    pub fn flipped_at(&self, v: usize) -> JacobiDiagram {
        let mut vertices: Vec<[usize; 3]> = (0..self.vertex_count()).map(|u| [3 * u, 3 * u + 1, 3 * u + 2]).collect();
        vertices[v] = [3 * v, 3 * v + 2, 3 * v + 1];
        self.regroup(&vertices).expect("flipping preserves validity")
    }

    /// Canonical key, orientation sign and automorphism count, by brute force
    /// over vertex permutations.
    pub fn canonical_form(&self) -> CanonicalForm {
        let a = self.adjacency();
        let n = a.len();
        let mut best: Option<Vec<u8>> = None;
        let mut minimizers: Vec<Vec<usize>> = Vec::new();
        let mut buf = Vec::with_capacity(n * (n + 1) / 2);
        let mut inv = vec![0usize; n];
        for_each_permutation(n, |perm| {
            for (old, &new) in perm.iter().enumerate() {
                inv[new] = old;
            }
            buf.clear();
            for i in 0..n {
                for j in i..n {
                    buf.push(a[inv[i]][inv[j]]);
                }
            }
            match &best {
                Some(b) if buf.as_slice() > b.as_slice() => {}
                Some(b) if buf.as_slice() == b.as_slice() => minimizers.push(perm.to_vec()),
                _ => {
                    best = Some(buf.clone());
                    minimizers.clear();
                    minimizers.push(perm.to_vec());
                }
            }
        });
        let mut bytes = vec![n as u8];
        bytes.extend(best.unwrap_or_default());
        let key = DiagramKey(bytes);

        let mut edge_factor = 1u64;
        for i in 0..n {
            for j in i + 1..n {
                edge_factor *= factorial(a[i][j] as u64);
            }
            edge_factor *= factorial(a[i][i] as u64) << a[i][i];
        }
        let automorphisms = minimizers.len() as u64 * edge_factor;

        let sign = if self.has_loop() {
            0
        } else {
            let copies = self.copy_indices();
            let mut signs = minimizers.iter().map(|p| self.orientation_sign(p, &copies));
            let first = signs.next().unwrap_or(1);
            if signs.all(|s| s == first) { first } else { 0 }
        };
        CanonicalForm { key, sign, automorphisms }
    }

    /// Index of each half-edge among the parallel edges joining its two
    /// endpoints; both half-edges of an edge get the same index.
    fn copy_indices(&self) -> Vec<usize> {
        let mut copy = vec![0usize; self.mate.len()];
        let mut count: HashMap<(usize, usize), usize> = HashMap::new();
        for (x, y) in self.edges() {
            let (u, v) = (x / 3, y / 3);
            let k = count.entry((u.min(v), u.max(v))).or_insert(0);
            copy[x] = *k;
            copy[y] = *k;
            *k += 1;
        }
        copy
    }

    fn orientation_sign(&self, perm: &[usize], copies: &[usize]) -> i8 {
        let mut sign = 1i8;
        for v in 0..self.vertex_count() {
            let slot: Vec<(usize, usize)> =
                (0..3).map(|k| (perm[self.mate[3 * v + k] / 3], copies[3 * v + k])).collect();
            let mut order = [0usize, 1, 2];
            order.sort_by_key(|&k| slot[k]);
            let cyclic = matches!(order, [0, 1, 2] | [1, 2, 0] | [2, 0, 1]);
            if !cyclic {
                sign = -sign;
            }
        }
        sign
    }

    /// The reference orientation of a key: at each vertex the half-edges are
    /// ordered by neighbour index, then by parallel copy.
    pub fn from_key(key: &DiagramKey) -> JacobiDiagram {
        let a = key.adjacency();
        let n = a.len();
        let mut slot: HashMap<(usize, usize, usize), usize> = HashMap::new();
        for i in 0..n {
            let mut k = 0;
            for j in 0..n {
                let m = if i == j { 2 * a[i][i] } else { a[i][j] } as usize;
                for c in 0..m {
                    slot.insert((i, j, c), 3 * i + k);
                    k += 1;
                }
            }
        }
        let mut mate = vec![0usize; 3 * n];
        for i in 0..n {
            for j in i..n {
                for c in 0..a[i][j] as usize {
                    let (x, y) = if i == j {
                        (slot[&(i, i, 2 * c)], slot[&(i, i, 2 * c + 1)])
                    } else {
                        (slot[&(i, j, c)], slot[&(j, i, c)])
                    };
                    mate[x] = y;
                    mate[y] = x;
                }
            }
        }
        JacobiDiagram { mate }
    }
}

impl fmt::Debug for JacobiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (vs, es) = self.to_vertices();
        write!(f, "JacobiDiagram {{ vertices: {vs:?}, edges: {es:?} }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta_same() -> JacobiDiagram {
        JacobiDiagram::from_vertices(&[[0, 1, 2], [3, 4, 5]], &[[0, 3], [1, 4], [2, 5]]).unwrap()
    }

    #[test]
    fn permutations_are_exhaustive() {
        let mut seen = std::collections::HashSet::new();
        for_each_permutation(4, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn theta_automorphisms_and_sign() {
        let cf = theta_same().canonical_form();
        assert_eq!(cf.automorphisms, 12);
        assert_eq!(cf.sign, 1);
        let flipped = theta_same().flipped_at(0).canonical_form();
        assert_eq!(flipped.key, cf.key);
        assert_eq!(flipped.sign, -1);
    }

    #[test]
    fn reference_orientation_round_trip() {
        let key = theta_same().canonical_form().key;
        let r = JacobiDiagram::from_key(&key);
        assert_eq!(r.canonical_form().sign, 1);
        assert_eq!(DiagramKey::from_hex(&key.to_hex()).unwrap(), key);
    }

    #[test]
    fn looped_diagram_has_zero_sign() {
        // dumbbell: two loops joined by an edge
        let d = JacobiDiagram::from_vertices(&[[0, 1, 2], [3, 4, 5]], &[[0, 1], [2, 3], [4, 5]]).unwrap();
        assert!(d.has_loop());
        assert_eq!(d.canonical_form().sign, 0);
    }

    #[test]
    fn malformed_inputs() {
        assert!(JacobiDiagram::from_vertices(&[[0, 1, 2], [3, 4, 5]], &[[0, 3], [1, 4]]).is_err());
        assert!(JacobiDiagram::from_vertices(&[[0, 1, 2], [2, 4, 5]], &[[0, 4], [1, 5]]).is_err());
        assert!(JacobiDiagram::from_vertices(&[[0, 1, 2], [3, 4, 5]], &[[0, 3], [1, 4], [2, 9]]).is_err());
        assert!(JacobiDiagram::from_mates(vec![1, 0]).is_err());
        assert!(DiagramKey::from_hex("zz").is_err());
    }
}
