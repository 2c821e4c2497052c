//! Named diagrams drawn in the plane, each vertex oriented counterclockwise.

use super::jacobi::JacobiDiagram;

fn build(vertices: &[[u64; 3]], edges: &[[u64; 2]]) -> JacobiDiagram {
    JacobiDiagram::from_vertices(vertices, edges).expect("reference diagram is well formed")
}

/// The theta graph drawn as a circle with a horizontal chord.
pub fn theta() -> JacobiDiagram {
    // left vertex: (top, bottom, middle); right vertex: (top, middle, bottom)
    build(&[[0, 1, 2], [3, 4, 5]], &[[0, 3], [1, 5], [2, 4]])
}

/// The theta graph with both vertices reading the three edges in the same
/// cyclic order. Equal to `-theta()`.
pub fn theta_same() -> JacobiDiagram {
    build(&[[0, 1, 2], [3, 4, 5]], &[[0, 3], [1, 4], [2, 5]])
}

/// Two planar thetas side by side.
pub fn theta_theta() -> JacobiDiagram {
    theta().disjoint_union(&theta())
}

/// The tetrahedron drawn as a triangle with a central vertex.
pub fn tetrahedron() -> JacobiDiagram {
    // centre O, outer A, B, C counterclockwise
    build(
        &[[0, 1, 2], [3, 4, 5], [6, 7, 8], [9, 10, 11]],
        &[[0, 4], [1, 7], [2, 10], [3, 8], [6, 11], [5, 9]],
    )
}

/// The ladder: an oval with two vertical chords, so the two left vertices and
/// the two right vertices are each joined twice.
pub fn ladder() -> JacobiDiagram {
    // T1 (top, left arc, chord), B1 (bottom, chord, left arc),
    // T2 (top, chord, right arc), B2 (right arc, chord, bottom)
    build(
        &[[0, 1, 2], [3, 4, 5], [6, 7, 8], [9, 10, 11]],
        &[[0, 6], [3, 11], [1, 5], [2, 4], [8, 9], [7, 10]],
    )
}
