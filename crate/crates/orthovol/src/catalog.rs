//! Generators for the standard polytope families and the default
//! verification catalog.
//!
//! Vertex numbering is fixed so generated polytopes serialize identically
//! across runs:
//!
//! * antiprism `A(n)`: top base `0..n`, bottom base `n..2n`;
//! * Loebell `L(n)`: top base `0..n`, upper ring `n..2n`, lower ring
//!   `2n..3n`, bottom base `3n..4n`.

use crate::lobachevsky::ErrBoundedValue;
use crate::polytope::{CombinatorialPolytope, Polytope};
use crate::surgery::{self, FaceSelector};
use crate::volumes;
use crate::{Error, FaceId, VertexId};

/// The ideal right-angled antiprism `A(n)`: two `n`-gonal bases and `2n`
/// lateral triangles on `2n` vertices. `A(3)` is the regular octahedron.
pub fn antiprism(n: usize) -> Result<Polytope, Error> {
    if n < 3 {
        return Err(Error::ParameterOutOfRange {
            what: "antiprism parameter n",
            got: n as i64,
            requirement: "n >= 3",
        });
    }
    let t = |i: usize| i % n;
    let b = |i: usize| n + (i % n);
    let mut faces: Vec<Vec<VertexId>> = Vec::with_capacity(2 * n + 2);
    faces.push((0..n).collect());
    faces.push((0..n).map(b).collect());
    for i in 0..n {
        faces.push(vec![t(i), t(i + 1), b(i)]);
        faces.push(vec![b(i), b(i + 1), t(i + 1)]);
    }
    let raw = CombinatorialPolytope::new(format!("A({n})"), faces);
    Polytope::new(raw).map_err(Error::InvalidPolytope)
}

/// The compact right-angled Loebell polytope `L(n)`: two `n`-gonal bases and
/// `2n` lateral pentagons on `4n` vertices. `L(5)` is the regular
/// dodecahedron.
pub fn loebell(n: usize) -> Result<Polytope, Error> {
    if n < 5 {
        return Err(Error::ParameterOutOfRange {
            what: "Loebell parameter n",
            got: n as i64,
            requirement: "n >= 5",
        });
    }
    let t = |i: usize| i % n;
    let u = |i: usize| n + (i % n);
    let m = |i: usize| 2 * n + (i % n);
    let b = |i: usize| 3 * n + (i % n);
    let mut faces: Vec<Vec<VertexId>> = Vec::with_capacity(2 * n + 2);
    faces.push((0..n).collect());
    faces.push((0..n).map(b).collect());
    for i in 0..n {
        faces.push(vec![t(i), t(i + 1), u(i + 1), m(i), u(i)]);
    }
    for i in 0..n {
        faces.push(vec![b(i), b(i + 1), m(i + 1), u(i + 1), m(i)]);
    }
    let raw = CombinatorialPolytope::new(format!("L({n})"), faces);
    Polytope::new(raw).map_err(Error::InvalidPolytope)
}

/// Split an ideal (4-valent) vertex into an edge with two finite endpoints.
///
/// The new edge is placed into the pair of opposite faces at `v` that
/// contains the smallest incident face id. This is the combinatorial move
/// that resolves a cusp into a short edge, and it is how the mixed-vertex
/// fixtures are authored: face-doubling never mixes vertex kinds, and
/// truncating an ideal vertex is forbidden (the four faces around the cut
/// would form a prismatic 4-circuit).
pub fn split_ideal_vertex(p: &Polytope, v: VertexId) -> Result<Polytope, Error> {
    let faces_at_v = p.vertex_faces(v)?;
    if faces_at_v.len() != 4 {
        return Err(Error::ParameterOutOfRange {
            what: "valence of the split vertex",
            got: faces_at_v.len() as i64,
            requirement: "exactly 4 (an ideal vertex)",
        });
    }
    let neighbours_in = |f: FaceId| -> (VertexId, VertexId) {
        let face = p.face(f).unwrap();
        let k = face.len();
        let pos = face.iter().position(|&x| x == v).unwrap();
        (face[(pos + k - 1) % k], face[(pos + 1) % k])
    };
    let other_face_at = |g: FaceId, u: VertexId| -> FaceId {
        let [a, b] = p.edge_faces(crate::Edge::new(v, u)).unwrap();
        if a == g {
            b
        } else {
            a
        }
    };
    // Rotation order of the faces at v, starting from the smallest id and
    // stepping toward its smaller edge-neighbour.
    let f0 = faces_at_v[0];
    let mut rotation = vec![f0];
    let (a, b) = neighbours_in(f0);
    let mut current = other_face_at(f0, a).min(other_face_at(f0, b));
    let mut via = if other_face_at(f0, a) <= other_face_at(f0, b) {
        a
    } else {
        b
    };
    while rotation.len() < 4 {
        rotation.push(current);
        let (x, y) = neighbours_in(current);
        let out = if x == via { y } else { x };
        via = out;
        current = other_face_at(current, out);
    }
    // The first endpoint owns the edges flanking rotation[1], the second
    // those flanking rotation[3]; the new edge lies in rotation[0] and
    // rotation[2].
    let first = p.vertex_count();
    let second = p.vertex_count() + 1;
    let pair_key = |g: FaceId, h: FaceId| if g < h { (g, h) } else { (h, g) };
    let mut owner = std::collections::HashMap::new();
    owner.insert(pair_key(rotation[0], rotation[1]), first);
    owner.insert(pair_key(rotation[1], rotation[2]), first);
    owner.insert(pair_key(rotation[2], rotation[3]), second);
    owner.insert(pair_key(rotation[3], rotation[0]), second);

    let mut faces: Vec<Vec<VertexId>> = Vec::with_capacity(p.face_count());
    for (g, face) in p.faces().iter().enumerate() {
        let Some(pos) = face.iter().position(|&x| x == v) else {
            faces.push(face.clone());
            continue;
        };
        let k = face.len();
        let prev = face[(pos + k - 1) % k];
        let next = face[(pos + 1) % k];
        let o_prev = owner[&pair_key(g, other_face_at(g, prev))];
        let o_next = owner[&pair_key(g, other_face_at(g, next))];
        let mut cycle: Vec<VertexId> = Vec::with_capacity(k + 1);
        for (i, &x) in face.iter().enumerate() {
            if i == pos {
                cycle.push(o_prev);
                if o_next != o_prev {
                    cycle.push(o_next);
                }
            } else {
                cycle.push(x);
            }
        }
        faces.push(cycle);
    }
    let raw = compact_ids(format!("{}-split{}", p.name(), v), faces);
    Polytope::new(raw).map_err(Error::InvalidPolytope)
}

/// Contract `count` finite edges into ideal vertices, chosen greedily in
/// lexicographic order so that no face ends up containing two of the new
/// ideal vertices.
///
/// Contracting an edge with trivalent endpoints merges them into a 4-valent
/// vertex and shortens the two faces containing the edge by one. On the
/// dodecahedron this models the degeneration that pulls an edge to the
/// boundary at infinity; with three pairwise-far edges the twelve faces
/// split into six quads and six pentagons, each touching exactly one ideal
/// vertex.
pub fn contract_edges_to_ideal(p: &Polytope, count: usize) -> Result<Polytope, Error> {
    let mut picked: Vec<crate::Edge> = Vec::with_capacity(count);
    let mut blocked_faces: Vec<FaceId> = Vec::new();
    for &e in p.edges() {
        if picked.len() == count {
            break;
        }
        let (a, b) = (e.0, e.1);
        if p.vertex_faces(a)?.len() != 3 || p.vertex_faces(b)?.len() != 3 {
            continue;
        }
        let mut touched: Vec<FaceId> = p
            .vertex_faces(a)?
            .iter()
            .chain(p.vertex_faces(b)?.iter())
            .copied()
            .collect();
        touched.sort_unstable();
        touched.dedup();
        if touched.iter().any(|f| blocked_faces.contains(f)) {
            continue;
        }
        blocked_faces.extend(touched);
        picked.push(e);
    }
    if picked.len() < count {
        return Err(Error::ParameterOutOfRange {
            what: "contractible edge count",
            got: picked.len() as i64,
            requirement: "enough pairwise-far finite edges",
        });
    }
    // All selected edges touch disjoint face sets, so one rewrite pass is
    // enough: drop the second endpoint where the edge is consecutive, remap
    // it elsewhere.
    let mut faces: Vec<Vec<VertexId>> = p.faces().to_vec();
    for &crate::Edge(a, b) in &picked {
        for face in &mut faces {
            let has_a = face.contains(&a);
            let has_b = face.contains(&b);
            if has_a && has_b {
                let k = face.len();
                let consecutive = (0..k).any(|i| {
                    let pair = (face[i], face[(i + 1) % k]);
                    pair == (a, b) || pair == (b, a)
                });
                if !consecutive {
                    return Err(Error::DoublingContract(format!(
                        "edge ({a},{b}) meets a face in two non-adjacent vertices"
                    )));
                }
                face.retain(|&x| x != b);
            } else if has_b {
                for x in face.iter_mut() {
                    if *x == b {
                        *x = a;
                    }
                }
            }
        }
    }
    let raw = compact_ids(format!("{}-contract{}", p.name(), count), faces);
    Polytope::new(raw).map_err(Error::InvalidPolytope)
}

pub(crate) fn compact_ids(name: String, faces: Vec<Vec<VertexId>>) -> CombinatorialPolytope {
    let max = faces.iter().flatten().max().copied().unwrap_or(0);
    let mut used = vec![false; max + 1];
    for &v in faces.iter().flatten() {
        used[v] = true;
    }
    let mut remap = vec![usize::MAX; max + 1];
    let mut next = 0;
    for (v, &u) in used.iter().enumerate() {
        if u {
            remap[v] = next;
            next += 1;
        }
    }
    let faces = faces
        .iter()
        .map(|face| face.iter().map(|&v| remap[v]).collect())
        .collect();
    CombinatorialPolytope::new(name, faces)
}

/// The tetrahedron: the smallest simplicial 3-polytope, never realizable as
/// a right-angled polyhedron.
pub fn tetrahedron() -> Polytope {
    Polytope::new(CombinatorialPolytope::new(
        "tetrahedron",
        vec![vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![2, 3, 0]],
    ))
    .expect("tetrahedron is a valid complex")
}

/// The triangular prism, the other type excluded outright by the
/// realizability conditions.
pub fn triangular_prism() -> Polytope {
    Polytope::new(CombinatorialPolytope::new(
        "triangular-prism",
        vec![
            vec![0, 1, 2],
            vec![3, 5, 4],
            vec![0, 3, 4, 1],
            vec![1, 4, 5, 2],
            vec![2, 5, 3, 0],
        ],
    ))
    .expect("prism is a valid complex")
}

/// The cube; its equatorial four-circuit makes it non-realizable.
pub fn cube() -> Polytope {
    Polytope::new(CombinatorialPolytope::new(
        "cube",
        vec![
            vec![0, 1, 2, 3],
            vec![4, 7, 6, 5],
            vec![0, 4, 5, 1],
            vec![1, 5, 6, 2],
            vec![2, 6, 7, 3],
            vec![3, 7, 4, 0],
        ],
    ))
    .expect("cube is a valid complex")
}

/// Iterated doubling of the octahedron along faces whose edge-neighbours are
/// all triangles. Stage `i` has `V = 6, 9, 15, 27, 51, 99, …` vertices
/// (`V_{i+1} = 2 V_i − 3`) and only triangular and quadrilateral faces.
pub fn octa_double_chain(depth: usize) -> Result<Vec<Polytope>, Error> {
    let start = antiprism(3)?;
    let chain = surgery::double_chain(&start, depth, &FaceSelector::AllTriangleNeighbours)?;
    Ok(chain
        .stages
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let name = format!("octa-chain-{i}");
            p.with_name(name)
        })
        .collect())
}

/// A catalog entry: a named polytope plus its closed-form volume when the
/// family has one.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub polytope: Polytope,
    pub known_volume: Option<ErrBoundedValue>,
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        self.polytope.name()
    }
}

fn entry(polytope: Polytope, known_volume: Option<ErrBoundedValue>) -> CatalogEntry {
    CatalogEntry {
        polytope,
        known_volume,
    }
}

/// Which part of the default catalog to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Ideal,
    Compact,
    Mixed,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ideal" => Ok(Suite::Ideal),
            "compact" => Ok(Suite::Compact),
            "mixed" => Ok(Suite::Mixed),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite '{other}'")),
        }
    }
}

const FAMILY_MAX: usize = 50;

/// Ideal catalog: antiprisms `A(3..=50)`, the octahedron doubling chain to
/// depth 5, and doubles of each antiprism along one base and one lateral
/// triangle.
pub fn ideal_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 3..=FAMILY_MAX {
        let p = antiprism(n).unwrap();
        out.push(entry(p, Some(volumes::vol_antiprism(n as u64).unwrap())));
    }
    for p in octa_double_chain(5).unwrap() {
        let vol = if p.vertex_count() == 6 {
            Some(volumes::vol_antiprism(3).unwrap())
        } else if p.vertex_count() == 9 {
            // The double of the octahedron along a face has twice its volume.
            Some(volumes::vol_antiprism(3).unwrap().scale(2.0))
        } else {
            None
        };
        out.push(entry(p, vol));
    }
    for n in 3..=FAMILY_MAX {
        let a = antiprism(n).unwrap();
        // Face 0 is a base n-gon; face 2 is a lateral triangle.
        for (f, tag) in [(0usize, "base"), (2usize, "tri")] {
            let d = surgery::double_along_face(&a, f).unwrap();
            let name = format!("A({n})-double-{tag}");
            out.push(entry(d.with_name(name), None));
        }
    }
    out
}

/// Compact catalog: Loebell polytopes `L(5..=50)` and doubles along one base
/// and one lateral pentagon.
pub fn compact_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 5..=FAMILY_MAX {
        let p = loebell(n).unwrap();
        out.push(entry(p, Some(volumes::vol_loebell(n as u64).unwrap())));
    }
    for n in 5..=FAMILY_MAX {
        let l = loebell(n).unwrap();
        for (f, tag) in [(0usize, "base"), (2usize, "pent")] {
            let d = surgery::double_along_face(&l, f).unwrap();
            let name = format!("L({n})-double-{tag}");
            out.push(entry(d.with_name(name), None));
        }
    }
    out
}

/// Mixed catalog: hand-authored fixtures. Doubling preserves vertex kinds,
/// so mixed types come from splitting ideal vertices of antiprisms into
/// finite edges, plus doubles of those along a face with both vertex kinds.
pub fn mixed_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in [4usize, 5, 6, 8, 10, 12] {
        let a = antiprism(n).unwrap();
        let s1 = split_ideal_vertex(&a, 0).unwrap();
        out.push(entry(s1.clone(), None));
        // Double along a triangle with one finite vertex: the output keeps
        // finite vertices, so it stays mixed. (Doubling along the grown
        // quad with two finite vertices would delete them all and produce
        // an ideal type.)
        let tri = (0..s1.face_count())
            .find(|&f| {
                let vs = s1.face(f).unwrap();
                vs.len() == 3
                    && vs
                        .iter()
                        .filter(|&&v| s1.vertex_faces(v).unwrap().len() == 3)
                        .count()
                        == 1
            })
            .expect("splitting leaves a triangle with one finite vertex");
        let d = surgery::double_along_face(&s1, tri).unwrap();
        out.push(entry(d.with_name(format!("A({n})-split-double-tri")), None));
        // Split a second ideal vertex (the largest id lies on the far base).
        let far = (0..s1.vertex_count())
            .rev()
            .find(|&v| s1.vertex_faces(v).unwrap().len() == 4)
            .expect("split antiprism keeps ideal vertices");
        let s2 = split_ideal_vertex(&s1, far).unwrap();
        out.push(entry(s2, None));
    }
    // Partially ideal Loebell polytopes: contract pairwise-far edges into
    // ideal vertices. The k = 3 dodecahedron has no face with more than 6
    // neighbours, the population where the five-face neighbour claim bites.
    for k in 1..=3 {
        let l5 = loebell(5).unwrap();
        out.push(entry(contract_edges_to_ideal(&l5, k).unwrap(), None));
    }
    let l6 = loebell(6).unwrap();
    out.push(entry(contract_edges_to_ideal(&l6, 1).unwrap(), None));
    out
}

/// The default catalog used by `verify`, `report` and the acceptance suite.
pub fn default_catalog(suite: Suite) -> Vec<CatalogEntry> {
    match suite {
        Suite::Ideal => ideal_catalog(),
        Suite::Compact => compact_catalog(),
        Suite::Mixed => mixed_catalog(),
        Suite::All => {
            let mut out = ideal_catalog();
            out.extend(compact_catalog());
            out.extend(mixed_catalog());
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::validate;

    #[test]
    fn antiprism_rejects_small_n() {
        assert!(antiprism(2).is_err());
        assert!(antiprism(3).is_ok());
    }

    #[test]
    fn loebell_rejects_small_n() {
        assert!(loebell(4).is_err());
        assert!(loebell(5).is_ok());
    }

    #[test]
    fn generated_families_validate() {
        for n in 3..=30 {
            let a = antiprism(n).unwrap();
            assert_eq!(a.vertex_count(), 2 * n);
            assert!(a.is_all_ideal(), "A({n}) should be all-ideal");
        }
        for n in 5..=30 {
            let l = loebell(n).unwrap();
            assert_eq!(l.vertex_count(), 4 * n);
            assert!(l.is_all_finite(), "L({n}) should be all-finite");
        }
    }

    #[test]
    fn fixtures_validate() {
        assert_eq!(tetrahedron().vertex_count(), 4);
        assert_eq!(triangular_prism().face_count(), 5);
        assert_eq!(cube().edge_count(), 12);
    }

    #[test]
    fn splitting_swaps_one_ideal_for_two_finite() {
        let a = antiprism(6).unwrap();
        let s = split_ideal_vertex(&a, 0).unwrap();
        let pr = s.profile();
        assert_eq!(pr.v_inf, 11);
        assert_eq!(pr.v_f, 2);
        assert_eq!(pr.v, 13);
        // F unchanged, one new edge; two faces grow by one vertex.
        assert_eq!(pr.f, a.face_count());
        assert_eq!(pr.e, a.edge_count() + 1);
        assert_eq!(pr.max_face_degree(), 7);
    }

    #[test]
    fn split_output_is_valid_complex() {
        let a = antiprism(4).unwrap();
        let s = split_ideal_vertex(&a, 2).unwrap();
        let raw = CombinatorialPolytope::new(s.name().to_string(), s.faces().to_vec());
        assert!(validate(&raw).is_ok());
    }

    #[test]
    fn split_rejects_finite_vertices() {
        let l = loebell(5).unwrap();
        assert!(split_ideal_vertex(&l, 0).is_err());
    }

    #[test]
    fn contracted_dodecahedron_counts() {
        let l5 = loebell(5).unwrap();
        for k in 1..=3usize {
            let c = contract_edges_to_ideal(&l5, k).unwrap();
            let pr = c.profile();
            assert_eq!(pr.v_inf, k);
            assert_eq!(pr.v_f, 20 - 2 * k);
            assert_eq!(pr.f, 12);
            assert_eq!(pr.e, 30 - k);
        }
        // Three far contractions split the faces into six quads and six
        // pentagons, and no face has more than 6 neighbours.
        let c3 = contract_edges_to_ideal(&l5, 3).unwrap();
        assert_eq!(c3.profile().count(4), 6);
        assert_eq!(c3.profile().count(5), 6);
        for f in 0..c3.face_count() {
            assert!(c3.face_neighbours(f).unwrap() <= 6);
        }
        assert!(contract_edges_to_ideal(&l5, 4).is_err());
    }

    #[test]
    fn mixed_fixtures_satisfy_mixed_count_identities() {
        // 3 V_F + 4 V_inf = 2E and F = V_F/2 + V_inf + 2.
        for entry in mixed_catalog() {
            let pr = entry.polytope.profile();
            assert_eq!(3 * pr.v_f + 4 * pr.v_inf, 2 * pr.e, "{}", entry.name());
            assert_eq!(2 * pr.f, pr.v_f + 2 * pr.v_inf + 4, "{}", entry.name());
            assert!(pr.v_f > 0 && pr.v_inf > 0, "{}", entry.name());
        }
    }
}
