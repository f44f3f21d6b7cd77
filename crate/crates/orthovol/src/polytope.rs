//! Immutable combinatorial model of a 3-polytope and its counting invariants.
//!
//! A combinatorial polytope is given by its faces, each a cyclic list of
//! vertex ids. Validation checks that the face complex is a 2-sphere: every
//! edge bounds exactly two faces, the faces around every vertex close into a
//! single rotation cycle, the Euler relation `V − E + F = 2` holds, and both
//! the 1-skeleton and the face-adjacency graph are connected.
//!
//! All counting operations use exact integer or rational arithmetic; no
//! floating point enters this module.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::{Edge, Error, FaceId, Rational, VertexId};

/// Raw input: a named face list. May violate the polytope invariants;
/// [`validate`] reports every violation and [`Polytope::new`] refuses bad
/// input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialPolytope {
    pub name: String,
    pub faces: Vec<Vec<VertexId>>,
}

impl CombinatorialPolytope {
    pub fn new(name: impl Into<String>, faces: Vec<Vec<VertexId>>) -> Self {
        CombinatorialPolytope {
            name: name.into(),
            faces,
        }
    }

    /// Vertex count derived as max id + 1.
    pub fn vertex_count(&self) -> usize {
        self.faces
            .iter()
            .flatten()
            .max()
            .map(|&m| m + 1)
            .unwrap_or(0)
    }
}

/// A single invariant violation, naming the offending face/vertex/edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    FaceTooSmall { face: FaceId, len: usize },
    RepeatedVertexInFace { face: FaceId, vertex: VertexId },
    EdgeFaceCount { edge: Edge, count: usize },
    UnusedVertex { vertex: VertexId },
    LowValence { vertex: VertexId, valence: usize },
    BrokenVertexRotation { vertex: VertexId },
    EulerRelation { v: usize, e: usize, f: usize },
    DisconnectedSkeleton,
    DisconnectedFaceGraph,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::FaceTooSmall { face, len } => {
                write!(f, "face {face} has only {len} vertices (need >= 3)")
            }
            Violation::RepeatedVertexInFace { face, vertex } => {
                write!(f, "vertex {vertex} repeats within face {face}")
            }
            Violation::EdgeFaceCount { edge, count } => {
                write!(f, "edge {edge} lies in {count} faces, not exactly 2")
            }
            Violation::UnusedVertex { vertex } => {
                write!(f, "vertex {vertex} appears in no face")
            }
            Violation::LowValence { vertex, valence } => {
                write!(f, "vertex {vertex} has valence {valence} (need >= 3)")
            }
            Violation::BrokenVertexRotation { vertex } => {
                write!(f, "faces at vertex {vertex} do not close into a single rotation cycle")
            }
            Violation::EulerRelation { v, e, f: ff } => {
                write!(f, "Euler relation fails: V - E + F = {v} - {e} + {ff} != 2")
            }
            Violation::DisconnectedSkeleton => write!(f, "vertex 1-skeleton is disconnected"),
            Violation::DisconnectedFaceGraph => {
                write!(f, "face-adjacency graph is disconnected")
            }
        }
    }
}

/// Outcome of [`validate`]: ok iff no violations were found.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        let lines: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", lines.join("; "))
    }
}

/// Vertex classification by incident-face count.
///
/// In a right-angled polyhedron a trivalent vertex is finite (lies inside
/// hyperbolic space) and a 4-valent vertex is ideal (lies on the boundary at
/// infinity). Higher valences cannot be realized but stay representable so
/// the realizability check can reject them with a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Finite,
    Ideal,
    Overfull,
}

impl VertexKind {
    pub fn from_valence(valence: usize) -> VertexKind {
        match valence {
            3 => VertexKind::Finite,
            4 => VertexKind::Ideal,
            _ => VertexKind::Overfull,
        }
    }
}

/// Exact incidence counts of a validated polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceProfile {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    /// Face degree -> number of faces of that degree.
    pub p_k: BTreeMap<usize, usize>,
    /// Incident-face count per vertex id.
    pub valence: Vec<usize>,
    /// Number of trivalent (finite) vertices.
    pub v_f: usize,
    /// Number of 4-valent (ideal) vertices.
    pub v_inf: usize,
}

impl IncidenceProfile {
    pub fn max_face_degree(&self) -> usize {
        self.p_k.keys().last().copied().unwrap_or(0)
    }

    /// True when every face is a triangle or a quadrilateral.
    pub fn only_34_faces(&self) -> bool {
        self.p_k.keys().all(|&k| k == 3 || k == 4)
    }

    pub fn count(&self, k: usize) -> usize {
        self.p_k.get(&k).copied().unwrap_or(0)
    }
}

/// Check every combinatorial invariant, returning all violations as data.
pub fn validate(p: &CombinatorialPolytope) -> ValidationReport {
    let mut violations = Vec::new();
    let face_count = p.faces.len();
    let vertex_count = p.vertex_count();

    for (fid, face) in p.faces.iter().enumerate() {
        if face.len() < 3 {
            violations.push(Violation::FaceTooSmall {
                face: fid,
                len: face.len(),
            });
        }
        let mut seen = HashSet::new();
        for &v in face {
            if !seen.insert(v) {
                violations.push(Violation::RepeatedVertexInFace {
                    face: fid,
                    vertex: v,
                });
            }
        }
    }

    // Every consecutive pair must appear in exactly two faces.
    let mut edge_count: BTreeMap<Edge, usize> = BTreeMap::new();
    for face in &p.faces {
        for (i, &a) in face.iter().enumerate() {
            let b = face[(i + 1) % face.len()];
            if a != b {
                *edge_count.entry(Edge::new(a, b)).or_insert(0) += 1;
            }
        }
    }
    for (&edge, &count) in &edge_count {
        if count != 2 {
            violations.push(Violation::EdgeFaceCount { edge, count });
        }
    }

    // Per-vertex incidences and rotation cycles.
    let mut vertex_faces: Vec<Vec<FaceId>> = vec![Vec::new(); vertex_count];
    for (fid, face) in p.faces.iter().enumerate() {
        for &v in face {
            if !vertex_faces[v].contains(&fid) {
                vertex_faces[v].push(fid);
            }
        }
    }
    for v in 0..vertex_count {
        if vertex_faces[v].is_empty() {
            violations.push(Violation::UnusedVertex { vertex: v });
            continue;
        }
        let valence = vertex_faces[v].len();
        if valence < 3 {
            violations.push(Violation::LowValence { vertex: v, valence });
        }
        if !single_rotation_cycle(p, v, &vertex_faces[v]) {
            violations.push(Violation::BrokenVertexRotation { vertex: v });
        }
    }

    let edge_total = edge_count.len();
    if vertex_count + face_count != edge_total + 2 {
        violations.push(Violation::EulerRelation {
            v: vertex_count,
            e: edge_total,
            f: face_count,
        });
    }

    if vertex_count > 0 {
        let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); vertex_count];
        for &Edge(a, b) in edge_count.keys() {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        if !connected(vertex_count, |v| adjacency[v].clone()) {
            violations.push(Violation::DisconnectedSkeleton);
        }
        let mut edge_faces: HashMap<Edge, Vec<FaceId>> = HashMap::new();
        for (fid, face) in p.faces.iter().enumerate() {
            for (i, &a) in face.iter().enumerate() {
                let b = face[(i + 1) % face.len()];
                if a != b {
                    edge_faces.entry(Edge::new(a, b)).or_default().push(fid);
                }
            }
        }
        let face_adjacency = |f: FaceId| -> Vec<FaceId> {
            let mut out = Vec::new();
            let face = &p.faces[f];
            for (i, &a) in face.iter().enumerate() {
                let b = face[(i + 1) % face.len()];
                if a == b {
                    continue;
                }
                for &g in &edge_faces[&Edge::new(a, b)] {
                    if g != f {
                        out.push(g);
                    }
                }
            }
            out
        };
        if face_count > 0 && !connected(face_count, face_adjacency) {
            violations.push(Violation::DisconnectedFaceGraph);
        }
    } else {
        violations.push(Violation::EulerRelation { v: 0, e: 0, f: 0 });
    }

    ValidationReport { violations }
}

// Walk the faces around `v`: consecutive faces share an edge at `v`, and the
// walk must visit every incident face exactly once before closing.
fn single_rotation_cycle(p: &CombinatorialPolytope, v: VertexId, faces_at_v: &[FaceId]) -> bool {
    // edge (v, u) -> faces containing it
    let mut at_edge: HashMap<VertexId, Vec<FaceId>> = HashMap::new();
    for &fid in faces_at_v {
        let face = &p.faces[fid];
        let k = face.len();
        if k < 3 {
            return false;
        }
        let Some(pos) = face.iter().position(|&x| x == v) else {
            return false;
        };
        if face.iter().filter(|&&x| x == v).count() != 1 {
            return false;
        }
        let prev = face[(pos + k - 1) % k];
        let next = face[(pos + 1) % k];
        at_edge.entry(prev).or_default().push(fid);
        at_edge.entry(next).or_default().push(fid);
    }
    if at_edge.values().any(|fs| fs.len() != 2) {
        return false;
    }
    if faces_at_v.len() < 3 {
        return false;
    }
    // Walk: step from a face through one of its two edges to the other face.
    let start = faces_at_v[0];
    let first_edge = *at_edge
        .iter()
        .find(|(_, fs)| fs.contains(&start))
        .expect("start face has edges")
        .0;
    let mut visited = HashSet::new();
    let mut current = start;
    let mut via = first_edge;
    loop {
        if !visited.insert(current) {
            return false;
        }
        // The other edge of `current` at v.
        let face = &p.faces[current];
        let k = face.len();
        let pos = face.iter().position(|&x| x == v).unwrap();
        let prev = face[(pos + k - 1) % k];
        let next = face[(pos + 1) % k];
        let out_edge = if via == prev { next } else { prev };
        // The other face at that edge.
        let fs = &at_edge[&out_edge];
        let other = if fs[0] == current { fs[1] } else { fs[0] };
        if other == start {
            break;
        }
        current = other;
        via = out_edge;
    }
    visited.len() == faces_at_v.len()
}

fn connected<F: Fn(usize) -> Vec<usize>>(n: usize, neighbours: F) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for y in neighbours(x) {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    reached == n
}

/// A validated combinatorial 3-polytope with cached incidence structures.
///
/// Construction runs [`validate`]; every instance satisfies all invariants,
/// so the counting operations below are total up to their own domain
/// requirements. Values are immutable after construction and every operation
/// is a pure function.
#[derive(Debug, Clone)]
pub struct Polytope {
    name: String,
    faces: Vec<Vec<VertexId>>,
    vertex_faces: Vec<Vec<FaceId>>,
    adjacency: Vec<Vec<VertexId>>,
    edges: Vec<Edge>,
    edge_faces: HashMap<Edge, [FaceId; 2]>,
    profile: IncidenceProfile,
}

impl Polytope {
    pub fn new(raw: CombinatorialPolytope) -> Result<Polytope, ValidationReport> {
        let report = validate(&raw);
        if !report.is_ok() {
            return Err(report);
        }
        let vertex_count = raw.vertex_count();
        let mut vertex_faces: Vec<Vec<FaceId>> = vec![Vec::new(); vertex_count];
        let mut edge_faces_accum: BTreeMap<Edge, Vec<FaceId>> = BTreeMap::new();
        for (fid, face) in raw.faces.iter().enumerate() {
            for (i, &a) in face.iter().enumerate() {
                let b = face[(i + 1) % face.len()];
                edge_faces_accum.entry(Edge::new(a, b)).or_default().push(fid);
                vertex_faces[a].push(fid);
            }
        }
        for fs in &mut vertex_faces {
            fs.sort_unstable();
        }
        let edges: Vec<Edge> = edge_faces_accum.keys().copied().collect();
        let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); vertex_count];
        for &Edge(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        let edge_faces: HashMap<Edge, [FaceId; 2]> = edge_faces_accum
            .into_iter()
            .map(|(e, mut fs)| {
                fs.sort_unstable();
                (e, [fs[0], fs[1]])
            })
            .collect();

        let mut p_k: BTreeMap<usize, usize> = BTreeMap::new();
        for face in &raw.faces {
            *p_k.entry(face.len()).or_insert(0) += 1;
        }
        let valence: Vec<usize> = vertex_faces.iter().map(|fs| fs.len()).collect();
        let v_f = valence.iter().filter(|&&d| d == 3).count();
        let v_inf = valence.iter().filter(|&&d| d == 4).count();
        let profile = IncidenceProfile {
            v: vertex_count,
            e: edges.len(),
            f: raw.faces.len(),
            p_k,
            valence,
            v_f,
            v_inf,
        };
        Ok(Polytope {
            name: raw.name,
            faces: raw.faces,
            vertex_faces,
            adjacency,
            edges,
            edge_faces,
            profile,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Polytope {
        self.name = name.into();
        self
    }

    pub fn faces(&self) -> &[Vec<VertexId>] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> Result<&[VertexId], Error> {
        self.faces
            .get(f)
            .map(|v| v.as_slice())
            .ok_or(Error::UnknownFace(f))
    }

    pub fn vertex_count(&self) -> usize {
        self.profile.v
    }

    pub fn edge_count(&self) -> usize {
        self.profile.e
    }

    pub fn face_count(&self) -> usize {
        self.profile.f
    }

    /// Lexicographically sorted edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The two faces bounding an edge, sorted by id.
    pub fn edge_faces(&self, e: Edge) -> Result<[FaceId; 2], Error> {
        self.edge_faces.get(&e).copied().ok_or(Error::UnknownEdge(e))
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edge_faces.contains_key(&e)
    }

    /// Faces incident to `v`, sorted by id.
    pub fn vertex_faces(&self, v: VertexId) -> Result<&[FaceId], Error> {
        self.vertex_faces
            .get(v)
            .map(|f| f.as_slice())
            .ok_or(Error::UnknownVertex(v))
    }

    /// Vertices adjacent to `v` (joined by an edge), sorted.
    pub fn adjacent(&self, v: VertexId) -> Result<&[VertexId], Error> {
        self.adjacency
            .get(v)
            .map(|a| a.as_slice())
            .ok_or(Error::UnknownVertex(v))
    }

    pub fn vertex_kind(&self, v: VertexId) -> Result<VertexKind, Error> {
        self.profile
            .valence
            .get(v)
            .map(|&d| VertexKind::from_valence(d))
            .ok_or(Error::UnknownVertex(v))
    }

    /// True when every vertex is 4-valent.
    pub fn is_all_ideal(&self) -> bool {
        self.profile.v_inf == self.profile.v
    }

    /// True when every vertex is trivalent.
    pub fn is_all_finite(&self) -> bool {
        self.profile.v_f == self.profile.v
    }

    pub fn has_overfull_vertex(&self) -> Option<VertexId> {
        self.profile.valence.iter().position(|&d| d >= 5)
    }

    /// The exact incidence profile.
    pub fn profile(&self) -> &IncidenceProfile {
        &self.profile
    }

    /// Number of vertices sharing a face with `v` but not an edge.
    pub fn quasi_adjacent_count(&self, v: VertexId) -> Result<usize, Error> {
        let faces = self.vertex_faces(v)?;
        let mut cofacial: HashSet<VertexId> = HashSet::new();
        for &f in faces {
            cofacial.extend(self.faces[f].iter().copied());
        }
        cofacial.remove(&v);
        let adjacent = self.adjacent(v)?;
        Ok(cofacial
            .iter()
            .filter(|u| !adjacent.contains(u))
            .count())
    }

    /// Average number of quasi-adjacent vertices, by direct summation, as an
    /// exact rational. Defined for all-ideal polytopes.
    pub fn avg_quasi_adjacent(&self) -> Result<Rational, Error> {
        if !self.is_all_ideal() {
            return Err(Error::RequiresAllIdeal);
        }
        let mut total: i64 = 0;
        for v in 0..self.vertex_count() {
            total += self.quasi_adjacent_count(v)? as i64;
        }
        Ok(Rational::new(total, self.vertex_count() as i64))
    }

    /// The four faces arranged around an edge whose endpoints are trivalent:
    /// the two faces containing the edge plus the third face at each
    /// endpoint.
    pub fn faces_around_edge(&self, e: Edge) -> Result<[FaceId; 4], Error> {
        let [f1, f3] = self.edge_faces(e)?;
        let third = |v: VertexId| -> Result<FaceId, Error> {
            let fs = self.vertex_faces(v)?;
            if fs.len() != 3 {
                return Err(Error::RequiresTrivalentEndpoints(e));
            }
            fs.iter()
                .copied()
                .find(|&f| f != f1 && f != f3)
                .ok_or(Error::RequiresTrivalentEndpoints(e))
        };
        let f2 = third(e.0)?;
        let f4 = third(e.1)?;
        Ok([f1, f2, f3, f4])
    }

    /// Number of vertices quasi-incident to an edge with trivalent
    /// endpoints: vertices other than the endpoints that share a face with
    /// an endpoint.
    pub fn quasi_incident_vertices(&self, e: Edge) -> Result<usize, Error> {
        let _ = self.edge_faces(e)?;
        for endpoint in [e.0, e.1] {
            if self.profile.valence[endpoint] != 3 {
                return Err(Error::RequiresTrivalentEndpoints(e));
            }
        }
        let mut seen: HashSet<VertexId> = HashSet::new();
        for endpoint in [e.0, e.1] {
            for &f in self.vertex_faces(endpoint)? {
                seen.extend(self.faces[f].iter().copied());
            }
        }
        seen.remove(&e.0);
        seen.remove(&e.1);
        Ok(seen.len())
    }

    /// Number of distinct faces other than `f` sharing at least one vertex
    /// with `f`.
    pub fn face_neighbours(&self, f: FaceId) -> Result<usize, Error> {
        let face = self.face(f)?;
        let mut seen: HashSet<FaceId> = HashSet::new();
        for &v in face {
            seen.extend(self.vertex_faces[v].iter().copied());
        }
        seen.remove(&f);
        Ok(seen.len())
    }

    /// The formula value `(8V∞ + 3V_F) / (V∞ + V_F/2 + 2)` for the average
    /// number of neighbouring faces, as an exact rational. Requires that no
    /// vertex is overfull.
    pub fn avg_face_neighbours(&self) -> Result<Rational, Error> {
        if let Some(v) = self.has_overfull_vertex() {
            return Err(Error::OverfullVertexPresent(v));
        }
        let v_inf = self.profile.v_inf as i64;
        let v_f = self.profile.v_f as i64;
        Ok(Rational::new(16 * v_inf + 6 * v_f, 2 * v_inf + v_f + 4))
    }

    /// True when face `f` is quasi-incident to vertex `v`: not incident, but
    /// some face incident to `v` shares an edge with `f`.
    pub fn face_quasi_incident_to_vertex(&self, f: FaceId, v: VertexId) -> Result<bool, Error> {
        let face = self.face(f)?;
        if face.contains(&v) {
            return Ok(false);
        }
        let at_v = self.vertex_faces(v)?;
        for (i, &a) in face.iter().enumerate() {
            let b = face[(i + 1) % face.len()];
            let [g1, g2] = self.edge_faces[&Edge::new(a, b)];
            let other = if g1 == f { g2 } else { g1 };
            if at_v.contains(&other) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Faces sharing an edge with `f`, deduplicated and sorted.
    pub fn face_edge_neighbours(&self, f: FaceId) -> Result<Vec<FaceId>, Error> {
        let face = self.face(f)?;
        let mut out: Vec<FaceId> = Vec::with_capacity(face.len());
        for (i, &a) in face.iter().enumerate() {
            let b = face[(i + 1) % face.len()];
            let [g1, g2] = self.edge_faces[&Edge::new(a, b)];
            out.push(if g1 == f { g2 } else { g1 });
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// The smallest vertex id with no incident and no quasi-incident
    /// triangular face, if one exists.
    pub fn triangle_free_vertex(&self) -> Option<VertexId> {
        'vertices: for v in 0..self.vertex_count() {
            for &f in &self.vertex_faces[v] {
                if self.faces[f].len() == 3 {
                    continue 'vertices;
                }
                // Triangles sharing an edge with an incident face are
                // quasi-incident to v unless they are themselves incident.
                let face = &self.faces[f];
                for (i, &a) in face.iter().enumerate() {
                    let b = face[(i + 1) % face.len()];
                    let [g1, g2] = self.edge_faces[&Edge::new(a, b)];
                    let other = if g1 == f { g2 } else { g1 };
                    if self.faces[other].len() == 3 && !self.faces[other].contains(&v) {
                        continue 'vertices;
                    }
                }
            }
            return Some(v);
        }
        None
    }

    /// Number of vertices that are incident or quasi-incident to face `f`.
    pub fn face_incident_or_quasi_incident_vertices(&self, f: FaceId) -> Result<usize, Error> {
        let face = self.face(f)?;
        let mut count = face.len();
        for v in 0..self.vertex_count() {
            if self.face_quasi_incident_to_vertex(f, v)? {
                count += 1;
            }
        }
        Ok(count)
    }
}
