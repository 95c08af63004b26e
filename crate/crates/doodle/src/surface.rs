//! Rotation system of a regular neighborhood of the diagram, boundary
//! tracing, and the minimal genus.
//!
//! The 4-valent graph has one vertex per crossing and one edge per arc of
//! the cyclic word (edge `k` runs from occurrence `k` to occurrence `k+1`).
//! At a crossing, the four half-edge ends are arranged counterclockwise as
//!
//! * `(in1, out2, out1, in2)` when the sign is `+1`,
//! * `(in1, in2, out1, out2)` when the sign is `-1`,
//!
//! where `in1`/`out1` belong to the first visit and `in2`/`out2` to the
//! second. This is exactly the arrangement in which the second-visit strand
//! crosses the first-visit strand from left to right iff the sign is `+1`.
//! Boundary components of the thickened graph are the orbits of
//! "cross the edge, then take the rotation successor".

use crate::gauss::{Sign, SignedGaussCode};
use serde::Serialize;

/// End identifiers: edge `e` has its tail end at `2e` and head end at `2e+1`.
pub fn tail_end(edge: usize) -> usize {
    2 * edge
}

pub fn head_end(edge: usize) -> usize {
    2 * edge + 1
}

/// Embedded 4-valent graph of a code: cyclic half-edge orders per crossing.
#[derive(Clone, Debug)]
pub struct RotationSystem {
    crossings: usize,
    edge_count: usize,
    rotation: Vec<[usize; 4]>,
    end_at: Vec<(u32, u8)>,
}

impl RotationSystem {
    /// Build the rotation system of `code`'s regular neighborhood. The empty
    /// code yields the empty system.
    pub fn build(code: &SignedGaussCode) -> Self {
        let n = code.crossing_count();
        if n == 0 {
            return RotationSystem {
                crossings: 0,
                edge_count: 0,
                rotation: Vec::new(),
                end_at: Vec::new(),
            };
        }
        let l = code.word_len();
        let mut rotation = Vec::with_capacity(n);
        let mut end_at = vec![(u32::MAX, 0u8); 2 * l];
        for v in 0..n {
            let [p, q] = code.occurrences(v as u32);
            let in1 = head_end((p + l - 1) % l);
            let out1 = tail_end(p);
            let in2 = head_end((q + l - 1) % l);
            let out2 = tail_end(q);
            let order = match code.sign(v as u32) {
                Sign::Plus => [in1, out2, out1, in2],
                Sign::Minus => [in1, in2, out1, out2],
            };
            for (idx, &end) in order.iter().enumerate() {
                end_at[end] = (v as u32, idx as u8);
            }
            rotation.push(order);
        }
        RotationSystem {
            crossings: n,
            edge_count: l,
            rotation,
            end_at,
        }
    }

    pub fn crossings(&self) -> usize {
        self.crossings
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Counterclockwise half-edge ends at a vertex.
    pub fn rotation(&self, vertex: u32) -> [usize; 4] {
        self.rotation[vertex as usize]
    }

    /// Vertex and rotation index (0..4) of an end.
    pub fn end_position(&self, end: usize) -> (u32, u8) {
        self.end_at[end]
    }

    /// Counterclockwise successor of an end around its vertex.
    pub fn rotation_successor(&self, end: usize) -> usize {
        let (v, idx) = self.end_at[end];
        self.rotation[v as usize][(idx as usize + 1) % 4]
    }

    /// Number of boundary components of the thickened graph. The empty
    /// system counts as one disk boundary.
    pub fn boundary_components(&self) -> usize {
        if self.crossings == 0 {
            return 1;
        }
        // A directed edge side is encoded by its departure end; crossing the
        // edge lands on the opposite end (xor 1).
        let sides = 2 * self.edge_count;
        let mut visited = vec![false; sides];
        let mut faces = 0;
        for start in 0..sides {
            if visited[start] {
                continue;
            }
            faces += 1;
            let mut side = start;
            while !visited[side] {
                visited[side] = true;
                side = self.rotation_successor(side ^ 1);
            }
        }
        faces
    }

    /// Lengths of the boundary orbits, in discovery order. Their sum is
    /// twice the edge count; used by consistency tests.
    pub fn boundary_orbit_lengths(&self) -> Vec<usize> {
        let sides = 2 * self.edge_count;
        let mut visited = vec![false; sides];
        let mut out = Vec::new();
        for start in 0..sides {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut side = start;
            while !visited[side] {
                visited[side] = true;
                len += 1;
                side = self.rotation_successor(side ^ 1);
            }
            out.push(len);
        }
        out
    }
}

/// Crossing count, boundary component count, and genus of the capped-off
/// neighborhood.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceSummary {
    pub crossings: usize,
    pub boundary_components: usize,
    pub genus: usize,
}

/// Minimal genus of the code's diagram: `g = (m + 2 - |boundary|) / 2`.
/// The empty code lives on the sphere (one disk boundary, genus 0).
pub fn minimal_genus(code: &SignedGaussCode) -> SurfaceSummary {
    let m = code.crossing_count();
    if m == 0 {
        return SurfaceSummary {
            crossings: 0,
            boundary_components: 1,
            genus: 0,
        };
    }
    let rs = RotationSystem::build(code);
    let boundary = rs.boundary_components();
    let num = m + 2 - boundary;
    assert!(
        boundary <= m + 2 && num % 2 == 0,
        "genus parity violation for m={m}, boundary={boundary}: internal bug"
    );
    SurfaceSummary {
        crossings: m,
        boundary_components: boundary,
        genus: num / 2,
    }
}

/// True iff the diagram's minimal genus is zero.
pub fn is_planar(code: &SignedGaussCode) -> bool {
    minimal_genus(code).genus == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::SignedGaussCode;

    fn code(text: &str) -> SignedGaussCode {
        SignedGaussCode::parse(text).unwrap()
    }

    #[test]
    fn monogon_structure() {
        let rs = RotationSystem::build(&code("a a | a=+1"));
        assert_eq!(rs.crossings(), 1);
        assert_eq!(rs.edge_count(), 2);
        assert_eq!(rs.boundary_components(), 3);
        let g = minimal_genus(&code("a a | a=+1"));
        assert_eq!(
            g,
            SurfaceSummary {
                crossings: 1,
                boundary_components: 3,
                genus: 0
            }
        );
        // mirror image is planar too
        assert_eq!(minimal_genus(&code("a a | a=-1")).genus, 0);
    }

    #[test]
    fn torus_example() {
        let g = minimal_genus(&code("a b a b | a=+1, b=+1"));
        assert_eq!(g.boundary_components, 2);
        assert_eq!(g.genus, 1);
        // every signing of the interleaved two-crossing word is toroidal
        for signs in ["a=+1, b=-1", "a=-1, b=+1", "a=-1, b=-1"] {
            let g = minimal_genus(&code(&format!("a b a b | {signs}")));
            assert_eq!(g.genus, 1);
        }
    }

    #[test]
    fn empty_code_convention() {
        let g = minimal_genus(&SignedGaussCode::empty());
        assert_eq!(
            g,
            SurfaceSummary {
                crossings: 0,
                boundary_components: 1,
                genus: 0
            }
        );
        assert!(is_planar(&SignedGaussCode::empty()));
    }

    #[test]
    fn three_crossing_signings() {
        // Braid-closure signs give a planar curve; uniform signs do not.
        assert_eq!(
            minimal_genus(&code("a b c a b c | a=+1, b=-1, c=+1")).boundary_components,
            5
        );
        assert!(is_planar(&code("a b c a b c | a=+1, b=-1, c=+1")));
        assert_eq!(
            minimal_genus(&code("a b c a b c | a=+1, b=+1, c=+1")).genus,
            1
        );
    }

    #[test]
    fn planarity_examples() {
        assert!(!is_planar(&code("a b a b | a=+1, b=+1")));
        assert!(is_planar(&code("a a | a=+1")));
    }

    #[test]
    fn orbits_partition_sides() {
        let mut rng_codes = vec![
            code("a b a c b c | a=+1, b=+1, c=-1"),
            code("a b c a b c | a=-1, b=-1, c=+1"),
            code("a b b a | a=+1, b=-1"),
        ];
        rng_codes.push(code("a a | a=+1"));
        for c in rng_codes {
            let rs = RotationSystem::build(&c);
            let lengths = rs.boundary_orbit_lengths();
            assert_eq!(lengths.iter().sum::<usize>(), 2 * rs.edge_count());
            assert_eq!(lengths.len(), rs.boundary_components());
        }
    }

    #[test]
    fn genus_invariant_under_relabeling() {
        let c = code("a b c a b c | a=+1, b=-1, c=+1");
        let renamed = code("x y z x y z | x=+1, y=-1, z=+1");
        assert_eq!(minimal_genus(&c), minimal_genus(&renamed));
    }

    #[test]
    fn genus_invariant_under_basepoint_rotation() {
        let samples = [
            "a b c a b c | a=+1, b=-1, c=+1",
            "a b a c b c | a=+1, b=+1, c=-1",
            "a b a b | a=+1, b=+1",
            "a a | a=-1",
        ];
        for text in samples {
            let c = code(text);
            let g = minimal_genus(&c).genus;
            for k in 0..c.word_len() {
                assert_eq!(minimal_genus(&c.rotate_basepoint(k)).genus, g, "{text} @ {k}");
            }
        }
    }
}
