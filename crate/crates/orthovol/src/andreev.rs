//! Realizability of a combinatorial type as a finite-volume right-angled
//! hyperbolic 3-polyhedron.
//!
//! A combinatorial 3-polytope is realizable if and only if it is neither a
//! tetrahedron nor a triangular prism, every vertex lies in at most four
//! faces, and it contains no prismatic circuit of length three or four. A
//! prismatic circuit is a cycle of faces meeting in pairwise disjoint edges;
//! here "disjoint" means the edges share no vertex, and two faces
//! "intersect" when they share at least one vertex.
//!
//! The circuit searches are brute force over face triples/quadruples, pruned
//! through the face-adjacency structure. At desk scale (a few hundred faces)
//! this is exact and fast; searches run in lexicographic face order so the
//! reported witness is deterministic.

use std::collections::BTreeMap;

use crate::polytope::Polytope;
use crate::{Edge, FaceId, VertexId};

/// Realizability classification per vertex kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizabilityClass {
    /// Realizable with every vertex finite (trivalent).
    CompactRA,
    /// Realizable with every vertex ideal (4-valent).
    IdealRA,
    /// Realizable with vertices of both kinds.
    MixedRA,
    /// Not realizable; the witness pinpoints the forbidden configuration.
    NotRealizable(AndreevWitness),
}

impl RealizabilityClass {
    pub fn is_realizable(&self) -> bool {
        !matches!(self, RealizabilityClass::NotRealizable(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            RealizabilityClass::CompactRA => "compact",
            RealizabilityClass::IdealRA => "ideal",
            RealizabilityClass::MixedRA => "mixed",
            RealizabilityClass::NotRealizable(_) => "not-realizable",
        }
    }
}

impl std::fmt::Display for RealizabilityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RealizabilityClass::NotRealizable(w) => write!(f, "not-realizable ({w})"),
            other => write!(f, "{}", other.label()),
        }
    }
}

/// A re-checkable certificate that a combinatorial type violates one of the
/// realizability conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AndreevWitness {
    /// The combinatorial type is the tetrahedron.
    Tetrahedron,
    /// The combinatorial type is the triangular prism.
    TriangularPrism,
    /// A vertex lies in five or more faces.
    OverfullVertex {
        vertex: VertexId,
        faces: Vec<FaceId>,
    },
    /// Faces `(base, flank1, flank2)` where the base meets each flank in an
    /// edge, the two edges share no vertex, yet the flanks intersect.
    PrismaticThreeCircuit {
        faces: [FaceId; 3],
        edges: [Edge; 2],
    },
    /// Four faces meeting cyclically in pairwise disjoint edges.
    PrismaticFourCircuit {
        faces: [FaceId; 4],
        edges: [Edge; 4],
    },
}

impl AndreevWitness {
    /// Re-check the witness against a polytope, independently of the search
    /// that produced it.
    pub fn recheck(&self, p: &Polytope) -> bool {
        match self {
            AndreevWitness::Tetrahedron => degree_signature(p) == (4, vec![3, 3, 3, 3]),
            AndreevWitness::TriangularPrism => {
                degree_signature(p) == (6, vec![3, 3, 4, 4, 4])
            }
            AndreevWitness::OverfullVertex { vertex, faces } => p
                .vertex_faces(*vertex)
                .map(|fs| fs.len() >= 5 && fs == faces.as_slice())
                .unwrap_or(false),
            AndreevWitness::PrismaticThreeCircuit { faces, edges } => {
                let [f, f1, f2] = *faces;
                let [e1, e2] = *edges;
                shared_edge(p, f, f1) == Some(e1)
                    && shared_edge(p, f, f2) == Some(e2)
                    && !e1.touches(&e2)
                    && faces_share_vertex(p, f1, f2)
            }
            AndreevWitness::PrismaticFourCircuit { faces, edges } => {
                for i in 0..4 {
                    if shared_edge(p, faces[i], faces[(i + 1) % 4]) != Some(edges[i]) {
                        return false;
                    }
                    for j in 0..i {
                        if edges[i].touches(&edges[j]) {
                            return false;
                        }
                    }
                }
                faces.iter().collect::<std::collections::HashSet<_>>().len() == 4
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            AndreevWitness::Tetrahedron => "tetrahedron",
            AndreevWitness::TriangularPrism => "triangular-prism",
            AndreevWitness::OverfullVertex { .. } => "overfull-vertex",
            AndreevWitness::PrismaticThreeCircuit { .. } => "prismatic-3-circuit",
            AndreevWitness::PrismaticFourCircuit { .. } => "prismatic-4-circuit",
        }
    }
}

impl std::fmt::Display for AndreevWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AndreevWitness::Tetrahedron => write!(f, "tetrahedron"),
            AndreevWitness::TriangularPrism => write!(f, "triangular prism"),
            AndreevWitness::OverfullVertex { vertex, faces } => {
                write!(f, "vertex {vertex} lies in {} faces", faces.len())
            }
            AndreevWitness::PrismaticThreeCircuit { faces, edges } => write!(
                f,
                "prismatic 3-circuit: face {} meets faces {} and {} in disjoint edges {} and {}",
                faces[0], faces[1], faces[2], edges[0], edges[1]
            ),
            AndreevWitness::PrismaticFourCircuit { faces, .. } => write!(
                f,
                "prismatic 4-circuit through faces {}, {}, {}, {}",
                faces[0], faces[1], faces[2], faces[3]
            ),
        }
    }
}

fn degree_signature(p: &Polytope) -> (usize, Vec<usize>) {
    let mut degrees: Vec<usize> = p.faces().iter().map(|f| f.len()).collect();
    degrees.sort_unstable();
    (p.vertex_count(), degrees)
}

// The shared edge of two faces when they are cleanly adjacent: exactly one
// common edge and no further common vertices, so the set intersection is
// literally that edge. Used for witness re-checks; the searches use the
// precomputed tables below.
fn shared_edge(p: &Polytope, f: FaceId, g: FaceId) -> Option<Edge> {
    let mut found: Option<Edge> = None;
    let face = p.face(f).ok()?;
    for (i, &a) in face.iter().enumerate() {
        let b = face[(i + 1) % face.len()];
        let e = Edge::new(a, b);
        let [h1, h2] = p.edge_faces(e).ok()?;
        if h1 == g || h2 == g {
            if found.is_some() {
                return None;
            }
            found = Some(e);
        }
    }
    let e = found?;
    let fg = p.face(g).ok()?;
    let shared = p.face(f).ok()?.iter().filter(|v| fg.contains(v)).count();
    if shared == 2 {
        Some(e)
    } else {
        None
    }
}

fn faces_share_vertex(p: &Polytope, f: FaceId, g: FaceId) -> bool {
    let fg = p.face(g).unwrap();
    p.face(f).unwrap().iter().any(|v| fg.contains(v))
}

// Per-face lookup tables for the circuit searches: sorted vertex lists and
// clean edge-neighbour maps, built once per search.
struct FaceTables {
    sorted: Vec<Vec<VertexId>>,
    clean: Vec<BTreeMap<FaceId, Edge>>,
}

impl FaceTables {
    fn build(p: &Polytope) -> FaceTables {
        let sorted: Vec<Vec<VertexId>> = p
            .faces()
            .iter()
            .map(|f| {
                let mut v = f.clone();
                v.sort_unstable();
                v
            })
            .collect();
        let mut raw: Vec<BTreeMap<FaceId, (Edge, usize)>> = vec![BTreeMap::new(); p.face_count()];
        for (fid, face) in p.faces().iter().enumerate() {
            for (i, &a) in face.iter().enumerate() {
                let b = face[(i + 1) % face.len()];
                let e = Edge::new(a, b);
                let [h1, h2] = p.edge_faces(e).unwrap();
                let g = if h1 == fid { h2 } else { h1 };
                let entry = raw[fid].entry(g).or_insert((e, 0));
                entry.1 += 1;
            }
        }
        let shared_count = |f: FaceId, g: FaceId| -> usize {
            let (a, b) = (&sorted[f], &sorted[g]);
            let (mut i, mut j, mut n) = (0, 0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        n += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
            n
        };
        let clean = raw
            .iter()
            .enumerate()
            .map(|(f, m)| {
                m.iter()
                    .filter(|(&g, &(_, count))| count == 1 && shared_count(f, g) == 2)
                    .map(|(&g, &(e, _))| (g, e))
                    .collect()
            })
            .collect();
        FaceTables { sorted, clean }
    }

    fn share_vertex(&self, f: FaceId, g: FaceId) -> bool {
        let (a, b) = (&self.sorted[f], &self.sorted[g]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

fn find_three_circuit_with(p: &Polytope, tables: &FaceTables) -> Option<AndreevWitness> {
    for f in 0..p.face_count() {
        let items: Vec<(FaceId, Edge)> = tables.clean[f].iter().map(|(&g, &e)| (g, e)).collect();
        for (i, &(f1, e1)) in items.iter().enumerate() {
            if f1 == f {
                continue;
            }
            for &(f2, e2) in items.iter().skip(i + 1) {
                if f2 == f || f2 == f1 {
                    continue;
                }
                if !e1.touches(&e2) && tables.share_vertex(f1, f2) {
                    return Some(AndreevWitness::PrismaticThreeCircuit {
                        faces: [f, f1, f2],
                        edges: [e1, e2],
                    });
                }
            }
        }
    }
    None
}

fn find_four_circuit_with(p: &Polytope, tables: &FaceTables) -> Option<AndreevWitness> {
    for f1 in 0..p.face_count() {
        for (&f2, &e1) in &tables.clean[f1] {
            if f2 == f1 {
                continue;
            }
            for (&f3, &e2) in &tables.clean[f2] {
                if f3 == f1 || f3 == f2 || e2.touches(&e1) {
                    continue;
                }
                for (&f4, &e3) in &tables.clean[f3] {
                    if f4 == f1 || f4 == f2 || f4 == f3 {
                        continue;
                    }
                    if e3.touches(&e1) || e3.touches(&e2) {
                        continue;
                    }
                    let Some(&e4) = tables.clean[f4].get(&f1) else {
                        continue;
                    };
                    if e4.touches(&e1) || e4.touches(&e2) || e4.touches(&e3) {
                        continue;
                    }
                    return Some(AndreevWitness::PrismaticFourCircuit {
                        faces: [f1, f2, f3, f4],
                        edges: [e1, e2, e3, e4],
                    });
                }
            }
        }
    }
    None
}

/// Search for a prismatic 3-circuit: a face meeting two others in disjoint
/// edges while those two intersect. Returns the lexicographically first
/// witness in `(f, f', f'')` order, or `None`.
pub fn find_prismatic_three_circuit(p: &Polytope) -> Option<AndreevWitness> {
    find_three_circuit_with(p, &FaceTables::build(p))
}

/// Search for a prismatic 4-circuit: four faces meeting cyclically in
/// pairwise disjoint edges. Returns the lexicographically first witness in
/// `(f1, f2, f3, f4)` order, or `None`.
pub fn find_prismatic_four_circuit(p: &Polytope) -> Option<AndreevWitness> {
    find_four_circuit_with(p, &FaceTables::build(p))
}

/// Decide realizability and classify by vertex kinds.
///
/// The forbidden configurations are checked in a fixed order — tetrahedron,
/// triangular prism, overfull vertex, prismatic 3-circuit, prismatic
/// 4-circuit — and the first witness found is returned.
pub fn classify(p: &Polytope) -> RealizabilityClass {
    if degree_signature(p) == (4, vec![3, 3, 3, 3]) {
        return RealizabilityClass::NotRealizable(AndreevWitness::Tetrahedron);
    }
    if degree_signature(p) == (6, vec![3, 3, 4, 4, 4]) {
        return RealizabilityClass::NotRealizable(AndreevWitness::TriangularPrism);
    }
    if let Some(v) = p.has_overfull_vertex() {
        return RealizabilityClass::NotRealizable(AndreevWitness::OverfullVertex {
            vertex: v,
            faces: p.vertex_faces(v).unwrap().to_vec(),
        });
    }
    let tables = FaceTables::build(p);
    if let Some(w) = find_three_circuit_with(p, &tables) {
        return RealizabilityClass::NotRealizable(w);
    }
    if let Some(w) = find_four_circuit_with(p, &tables) {
        return RealizabilityClass::NotRealizable(w);
    }
    if p.is_all_finite() {
        RealizabilityClass::CompactRA
    } else if p.is_all_ideal() {
        RealizabilityClass::IdealRA
    } else {
        RealizabilityClass::MixedRA
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::polytope::{CombinatorialPolytope, Polytope};

    #[test]
    fn tetrahedron_rejected() {
        let class = classify(&catalog::tetrahedron());
        assert_eq!(
            class,
            RealizabilityClass::NotRealizable(AndreevWitness::Tetrahedron)
        );
    }

    #[test]
    fn triangular_prism_rejected() {
        let p = catalog::triangular_prism();
        let class = classify(&p);
        assert_eq!(
            class,
            RealizabilityClass::NotRealizable(AndreevWitness::TriangularPrism)
        );
        // A direct circuit scan also finds a 3-circuit witness among the
        // three squares.
        let w = find_prismatic_three_circuit(&p).expect("prism has a 3-circuit");
        assert!(w.recheck(&p));
    }

    #[test]
    fn cube_rejected_with_four_circuit() {
        let p = catalog::cube();
        match classify(&p) {
            RealizabilityClass::NotRealizable(w @ AndreevWitness::PrismaticFourCircuit { .. }) => {
                assert!(w.recheck(&p));
            }
            other => panic!("cube should fail on a 4-circuit, got {other:?}"),
        }
        assert!(find_prismatic_three_circuit(&p).is_none());
    }

    #[test]
    fn square_pyramid_rejected_with_three_circuit() {
        let p = Polytope::new(CombinatorialPolytope::new(
            "square-pyramid",
            vec![
                vec![0, 1, 2, 3],
                vec![0, 4, 1],
                vec![1, 4, 2],
                vec![2, 4, 3],
                vec![3, 4, 0],
            ],
        ))
        .unwrap();
        match classify(&p) {
            RealizabilityClass::NotRealizable(w @ AndreevWitness::PrismaticThreeCircuit { .. }) => {
                assert!(w.recheck(&p));
            }
            other => panic!("square pyramid should fail condition 3, got {other:?}"),
        }
    }

    #[test]
    fn overfull_vertex_rejected() {
        // A pentagonal pyramid has a 5-valent apex; overfull wins before the
        // circuit checks.
        let p = Polytope::new(CombinatorialPolytope::new(
            "pentagonal-pyramid",
            vec![
                vec![0, 1, 2, 3, 4],
                vec![0, 5, 1],
                vec![1, 5, 2],
                vec![2, 5, 3],
                vec![3, 5, 4],
                vec![4, 5, 0],
            ],
        ))
        .unwrap();
        match classify(&p) {
            RealizabilityClass::NotRealizable(w @ AndreevWitness::OverfullVertex { vertex: 5, .. }) => {
                assert!(w.recheck(&p));
            }
            other => panic!("expected overfull vertex, got {other:?}"),
        }
    }

    #[test]
    fn antiprisms_are_ideal() {
        for n in 3..=50 {
            let p = catalog::antiprism(n).unwrap();
            assert_eq!(classify(&p), RealizabilityClass::IdealRA, "A({n})");
        }
    }

    #[test]
    fn loebell_polytopes_are_compact() {
        for n in 5..=50 {
            let p = catalog::loebell(n).unwrap();
            assert_eq!(classify(&p), RealizabilityClass::CompactRA, "L({n})");
        }
    }

    #[test]
    fn no_circuits_in_small_realizable_types() {
        for p in [
            catalog::antiprism(3).unwrap(),
            catalog::antiprism(4).unwrap(),
            catalog::loebell(5).unwrap(),
            catalog::loebell(6).unwrap(),
        ] {
            assert!(find_prismatic_three_circuit(&p).is_none(), "{}", p.name());
            assert!(find_prismatic_four_circuit(&p).is_none(), "{}", p.name());
        }
    }

    #[test]
    fn split_antiprism_is_mixed() {
        let a = catalog::antiprism(6).unwrap();
        let s = catalog::split_ideal_vertex(&a, 0).unwrap();
        assert_eq!(classify(&s), RealizabilityClass::MixedRA);
    }

    #[test]
    fn compact_types_have_no_small_faces() {
        for n in 5..=50 {
            let p = catalog::loebell(n).unwrap();
            assert_eq!(classify(&p), RealizabilityClass::CompactRA);
            let pr = p.profile();
            assert_eq!(pr.count(3), 0);
            assert_eq!(pr.count(4), 0);
        }
    }

    #[test]
    fn realizable_types_have_six_faces_and_five_neighbours() {
        for p in [
            catalog::antiprism(3).unwrap(),
            catalog::antiprism(7).unwrap(),
            catalog::loebell(5).unwrap(),
            catalog::loebell(9).unwrap(),
        ] {
            assert!(classify(&p).is_realizable());
            assert!(p.face_count() >= 6);
            for f in 0..p.face_count() {
                assert!(p.face_neighbours(f).unwrap() >= 5, "{} face {f}", p.name());
            }
        }
    }
}
