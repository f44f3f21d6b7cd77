//! Combinatorial face-doubling: gluing a polyhedron to its mirror image
//! across a face plane.
//!
//! Doubling a right-angled polyhedron `P` along a face `f` produces another
//! right-angled polyhedron. Combinatorially:
//!
//! * finite (trivalent) vertices of `f` disappear — their two off-face edges
//!   straighten into one;
//! * ideal (4-valent) vertices of `f` are identified with their mirror
//!   images and stay ideal;
//! * each face sharing an edge with `f` merges with its mirror image into a
//!   single face whose degree follows the vertex-retention rule: a `k`-gon
//!   becomes a `(2k−2)`-gon, `(2k−3)`-gon or `(2k−4)`-gon according to how
//!   many endpoints of the shared edge are ideal;
//! * all other faces are copied once per side.
//!
//! The vertex counts obey `V′_∞ = 2V_∞ − k_∞(f)` and `V′_F = 2V_F − 2k_F(f)`
//! where `k_∞(f)`, `k_F(f)` count the ideal and finite vertices of `f`; the
//! construction re-validates its output and checks both contracts rather
//! than trusting the formulas.

use crate::andreev::{self, RealizabilityClass};
use crate::lobachevsky::{v3, v8, ErrBoundedValue};
use crate::polytope::{CombinatorialPolytope, Polytope};
use crate::{Edge, Error, FaceId, VertexId};

/// Parameters of one doubling step: the chosen face and its vertex split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StageRecord {
    pub face: FaceId,
    /// Ideal vertices of the glued face.
    pub k_inf: usize,
    /// Finite vertices of the glued face.
    pub k_f: usize,
}

/// Result of an iterated doubling: `stages[0]` is the input, and
/// `stages[i+1]` is `stages[i]` doubled along `records[i].face`.
#[derive(Debug, Clone)]
pub struct DoubleChain {
    pub stages: Vec<Polytope>,
    pub records: Vec<StageRecord>,
}

/// Strategy for choosing the face to double along at each stage.
#[derive(Debug, Clone)]
pub enum FaceSelector {
    /// Smallest face id for which doubling succeeds.
    FirstValid,
    /// Face of maximal degree, smallest id on ties.
    MaxDegree,
    /// Smallest-id triangle whose edge-neighbours are all triangles.
    AllTriangleNeighbours,
    /// Fixed list of face ids, one per stage.
    Explicit(Vec<FaceId>),
}

impl FaceSelector {
    /// Choose the face to double along at the given stage.
    pub fn select(&self, p: &Polytope, stage: usize) -> Result<FaceId, Error> {
        match self {
            FaceSelector::FirstValid => Ok(0),
            FaceSelector::MaxDegree => {
                let best = (0..p.face_count())
                    .max_by_key(|&f| (p.face(f).unwrap().len(), usize::MAX - f))
                    .ok_or(Error::NoFaceSelected { stage })?;
                Ok(best)
            }
            FaceSelector::AllTriangleNeighbours => (0..p.face_count())
                .find(|&f| {
                    p.face(f).unwrap().len() == 3
                        && p.face_edge_neighbours(f)
                            .unwrap()
                            .iter()
                            .all(|&g| p.face(g).unwrap().len() == 3)
                })
                .ok_or(Error::NoFaceSelected { stage }),
            FaceSelector::Explicit(list) => {
                list.get(stage).copied().ok_or(Error::NoFaceSelected { stage })
            }
        }
    }
}

impl std::str::FromStr for FaceSelector {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first-valid" => Ok(FaceSelector::FirstValid),
            "max-degree" => Ok(FaceSelector::MaxDegree),
            "all-triangle-neighbours" => Ok(FaceSelector::AllTriangleNeighbours),
            other => Err(format!(
                "unknown selector '{other}' (expected first-valid, max-degree or all-triangle-neighbours)"
            )),
        }
    }
}

/// Ideal and finite vertex counts of a face.
pub fn face_vertex_split(p: &Polytope, f: FaceId) -> Result<(usize, usize), Error> {
    let face = p.face(f)?;
    let mut k_inf = 0;
    let mut k_f = 0;
    for &v in face {
        match p.vertex_faces(v)?.len() {
            3 => k_f += 1,
            4 => k_inf += 1,
            _ => return Err(Error::OverfullVertexPresent(v)),
        }
    }
    Ok((k_inf, k_f))
}

/// Double `p` along face `f`.
///
/// Requires `p` to be realizable; the output is validated and the vertex
/// count contracts are enforced before it is returned.
pub fn double_along_face(p: &Polytope, f: FaceId) -> Result<Polytope, Error> {
    let class = andreev::classify(p);
    if let RealizabilityClass::NotRealizable(w) = class {
        return Err(Error::NotRealizable(w));
    }
    double_along_face_unchecked(p, f)
}

/// The construction itself, without the realizability precondition. For
/// callers that have already classified `p` and sweep over many faces; the
/// output is still validated and contract-checked.
pub fn double_along_face_unchecked(p: &Polytope, f: FaceId) -> Result<Polytope, Error> {
    let glue_face = p.face(f)?.to_vec();
    let v = p.vertex_count();
    let is_glue_vertex: Vec<bool> = {
        let mut flags = vec![false; v];
        for &x in &glue_face {
            flags[x] = true;
        }
        flags
    };
    let deleted: Vec<bool> = (0..v)
        .map(|x| is_glue_vertex[x] && p.vertex_faces(x).unwrap().len() == 3)
        .collect();

    // Faces sharing an edge with f merge with their mirrors; each must share
    // exactly one edge, otherwise the merged cycle would degenerate.
    let mut shared_edge_count: Vec<usize> = vec![0; p.face_count()];
    for (i, &a) in glue_face.iter().enumerate() {
        let b = glue_face[(i + 1) % glue_face.len()];
        let [g1, g2] = p.edge_faces(Edge::new(a, b))?;
        let g = if g1 == f { g2 } else { g1 };
        shared_edge_count[g] += 1;
    }
    for (g, &count) in shared_edge_count.iter().enumerate() {
        if count > 1 {
            return Err(Error::DoublingMultiSharedEdges { face: g, count });
        }
    }

    // Id mapping: side A keeps source order, then side B survivors.
    let mut map_a = vec![usize::MAX; v];
    let mut next = 0;
    for x in 0..v {
        if !deleted[x] {
            map_a[x] = next;
            next += 1;
        }
    }
    let mut map_b = vec![usize::MAX; v];
    for x in 0..v {
        if deleted[x] {
            continue;
        }
        if is_glue_vertex[x] {
            map_b[x] = map_a[x];
        } else {
            map_b[x] = next;
            next += 1;
        }
    }

    let mut faces: Vec<Vec<VertexId>> = Vec::with_capacity(2 * p.face_count());
    for (g, face) in p.faces().iter().enumerate() {
        if g == f {
            continue;
        }
        if shared_edge_count[g] == 1 {
            // Locate the glued edge (a, b) inside g's cycle, oriented as g
            // traverses it.
            let k = face.len();
            let pos = (0..k)
                .find(|&i| {
                    let e = Edge::new(face[i], face[(i + 1) % k]);
                    is_glue_vertex[face[i]]
                        && is_glue_vertex[face[(i + 1) % k]]
                        && p.edge_faces(e).map(|fs| fs.contains(&f)).unwrap_or(false)
                })
                .expect("counted shared edge must exist");
            let u = face[pos];
            let w = face[(pos + 1) % k];
            // Interior of g's cycle from w around to u, exclusive.
            let interior: Vec<VertexId> = (2..k).map(|off| face[(pos + off) % k]).collect();
            let mut cycle: Vec<VertexId> = Vec::with_capacity(2 * k);
            if !deleted[w] {
                cycle.push(map_a[w]);
            }
            cycle.extend(interior.iter().map(|&x| map_a[x]));
            if !deleted[u] {
                cycle.push(map_a[u]);
            }
            cycle.extend(interior.iter().rev().map(|&x| map_b[x]));
            faces.push(cycle);
        } else {
            faces.push(face.iter().map(|&x| map_a[x]).collect());
            faces.push(face.iter().rev().map(|&x| map_b[x]).collect());
        }
    }

    let name = format!("{}-double-f{}", p.name(), f);
    let doubled = Polytope::new(CombinatorialPolytope::new(name, faces))
        .map_err(Error::DoublingDefect)?;

    // Vertex-count contracts.
    let (k_inf, k_f) = face_vertex_split(p, f)?;
    let before = p.profile();
    let after = doubled.profile();
    if after.v_inf != 2 * before.v_inf - k_inf || after.v_f != 2 * before.v_f - 2 * k_f {
        return Err(Error::DoublingContract(format!(
            "face {f}: got (V_inf, V_F) = ({}, {}), expected ({}, {})",
            after.v_inf,
            after.v_f,
            2 * before.v_inf - k_inf,
            2 * before.v_f - 2 * k_f
        )));
    }
    Ok(doubled)
}

/// Iterated doubling: `depth` steps with faces chosen by `selector`.
pub fn double_chain(
    p: &Polytope,
    depth: usize,
    selector: &FaceSelector,
) -> Result<DoubleChain, Error> {
    if let RealizabilityClass::NotRealizable(w) = andreev::classify(p) {
        return Err(Error::NotRealizable(w));
    }
    let mut stages = vec![p.clone()];
    let mut records = Vec::with_capacity(depth);
    for stage in 0..depth {
        let current = stages.last().unwrap();
        let face = selector.select(current, stage)?;
        let (k_inf, k_f) = face_vertex_split(current, face)?;
        let next = double_along_face_unchecked(current, face)?;
        records.push(StageRecord {
            face,
            k_inf,
            k_f,
        });
        stages.push(next);
    }
    Ok(DoubleChain { stages, records })
}

/// Faces with at least 6 neighbouring faces, sorted by id.
pub fn n6_faces(p: &Polytope) -> Vec<FaceId> {
    (0..p.face_count())
        .filter(|&f| p.face_neighbours(f).unwrap() >= 6)
        .collect()
}

/// The volume deficit contributed by doubling stage `i` (1-based) along a
/// face with `k_inf` ideal and `k_f` finite vertices:
/// `cᵢ = (v₈ / 2^{i+1}) k_inf + (5 v₃ / 2^{i+2}) k_f`.
pub fn doubling_series_term(stage: u32, k_inf: u64, k_f: u64) -> ErrBoundedValue {
    let a = v8().scale(k_inf as f64 / 2f64.powi(stage as i32 + 1));
    let b = v3().scale(5.0 * k_f as f64 / 2f64.powi(stage as i32 + 2));
    a + b
}

/// Sum of the stage deficits of a recorded chain.
pub fn chain_series_sum(records: &[StageRecord]) -> ErrBoundedValue {
    let mut total = ErrBoundedValue::exact(0.0);
    for (i, rec) in records.iter().enumerate() {
        total = total + doubling_series_term(i as u32 + 1, rec.k_inf as u64, rec.k_f as u64);
    }
    total
}
