//! Machine verification of the combinatorial existence claims and the
//! bound-consistency properties over polytope catalogs.
//!
//! Each claim is checked only on populations satisfying its hypotheses;
//! "not applicable" is a distinct verdict from "fails". A failing verdict on
//! a realizable input would contradict an established statement, so the
//! callers treat it as a build-breaking event.
//!
//! The averaging identities are exact rational equalities between a direct
//! count and a closed form derived from the incidence profile; no floating
//! point is involved.

use crate::andreev::{self, RealizabilityClass};
use crate::bounds;
use crate::catalog::CatalogEntry;
use crate::polytope::{IncidenceProfile, Polytope};
use crate::{Edge, FaceId, Rational, VertexId};

/// Identifier of a verifiable claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimId {
    /// Ideal, `V > 24`: some vertex has at least 4 quasi-adjacent vertices.
    QuasiAdjacentFour,
    /// Ideal, `V > 72`, only {3,4}-gonal faces: some vertex has no incident
    /// or quasi-incident triangle.
    TriangleFreeVertex,
    /// Compact, `V > 80`: some edge has at least 14 quasi-incident vertices,
    /// equivalently face degrees around it summing to at least 24.
    FatEdge,
    /// `V_F + V_inf > 15`, `V_inf >= 1`: some face has at least 6 neighbours.
    SixNeighbourFace,
    /// `V_F + V_inf > 14`, `V_inf >= 3`, no face with 7 or more neighbours:
    /// at least 5 faces have at least 6 neighbours.
    FiveSixNeighbourFaces,
    /// `V_inf >= 6` and some face has at most 5 neighbours: some face has at
    /// least 7 neighbours.
    SevenNeighbourFace,
    /// `V_F + V_inf > 14`, `V_inf >= 1`: the set of faces with at least 6
    /// neighbours contains one that is not an ideal triangle.
    NonIdealTriangleN6,
    /// Ideal: the direct quasi-adjacency average equals its closed form.
    QuasiAdjacentAverage,
    /// Compact: the direct edge quasi-incidence average equals its closed
    /// form.
    EdgeQuasiIncidentAverage,
    /// Realizable: the direct face-neighbour average equals the profile
    /// formula.
    FaceNeighbourAverage,
    /// Families with closed-form volumes: the volume lies between the best
    /// lower and upper bounds.
    BoundSoundness,
}

impl ClaimId {
    pub fn name(&self) -> &'static str {
        match self {
            ClaimId::QuasiAdjacentFour => "quasi-adjacent-four",
            ClaimId::TriangleFreeVertex => "triangle-free-vertex",
            ClaimId::FatEdge => "fat-edge",
            ClaimId::SixNeighbourFace => "six-neighbour-face",
            ClaimId::FiveSixNeighbourFaces => "five-six-neighbour-faces",
            ClaimId::SevenNeighbourFace => "seven-neighbour-face",
            ClaimId::NonIdealTriangleN6 => "n6-non-ideal-triangle",
            ClaimId::QuasiAdjacentAverage => "quasi-adjacent-average",
            ClaimId::EdgeQuasiIncidentAverage => "edge-quasi-incident-average",
            ClaimId::FaceNeighbourAverage => "face-neighbour-average",
            ClaimId::BoundSoundness => "bound-soundness",
        }
    }

    pub const PER_ENTRY: [ClaimId; 10] = [
        ClaimId::QuasiAdjacentFour,
        ClaimId::TriangleFreeVertex,
        ClaimId::FatEdge,
        ClaimId::SixNeighbourFace,
        ClaimId::FiveSixNeighbourFaces,
        ClaimId::SevenNeighbourFace,
        ClaimId::NonIdealTriangleN6,
        ClaimId::QuasiAdjacentAverage,
        ClaimId::EdgeQuasiIncidentAverage,
        ClaimId::FaceNeighbourAverage,
    ];
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails => write!(f, "FAILS"),
            Verdict::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// The certifying object of a holding claim, re-checkable through the
/// corresponding counting operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimWitness {
    Vertex { id: VertexId, count: usize },
    Edge { edge: Edge, count: usize },
    Face { id: FaceId, count: usize },
    Faces(Vec<FaceId>),
}

impl std::fmt::Display for ClaimWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClaimWitness::Vertex { id, count } => write!(f, "vertex {id} (count {count})"),
            ClaimWitness::Edge { edge, count } => write!(f, "edge {edge} (count {count})"),
            ClaimWitness::Face { id, count } => write!(f, "face {id} (count {count})"),
            ClaimWitness::Faces(ids) => {
                let s: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
                write!(f, "faces [{}]", s.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClaimResult {
    pub claim: ClaimId,
    /// Name of the polytope the claim was checked on.
    pub subject: String,
    /// Catalog the subject came from.
    pub population: String,
    pub verdict: Verdict,
    pub witness: Option<ClaimWitness>,
    pub detail: String,
}

impl ClaimResult {
    fn holds(claim: ClaimId, subject: &str, witness: Option<ClaimWitness>, detail: String) -> Self {
        ClaimResult {
            claim,
            subject: subject.to_string(),
            population: String::new(),
            verdict: Verdict::Holds,
            witness,
            detail,
        }
    }

    fn fails(claim: ClaimId, subject: &str, detail: String) -> Self {
        ClaimResult {
            claim,
            subject: subject.to_string(),
            population: String::new(),
            verdict: Verdict::Fails,
            witness: None,
            detail,
        }
    }

    fn not_applicable(claim: ClaimId, subject: &str, reason: &str) -> Self {
        ClaimResult {
            claim,
            subject: subject.to_string(),
            population: String::new(),
            verdict: Verdict::NotApplicable,
            witness: None,
            detail: reason.to_string(),
        }
    }

    /// One deterministic output line.
    pub fn line(&self) -> String {
        let mut s = format!("{:<28} {:<24} {}", self.claim.name(), self.subject, self.verdict);
        if let Some(w) = &self.witness {
            s.push_str(&format!(" witness={w}"));
        }
        if !self.detail.is_empty() {
            s.push_str(&format!(" ({})", self.detail));
        }
        s
    }
}

/// Closed form for the average quasi-adjacency count of an all-ideal
/// polytope: `4 − 24/V + (1/V) Σ_{k≥5} (k² − 7k + 12) p_k`.
pub fn quasi_adjacent_closed_form(profile: &IncidenceProfile) -> Rational {
    let v = profile.v as i64;
    let correction: i64 = profile
        .p_k
        .iter()
        .filter(|(&k, _)| k >= 5)
        .map(|(&k, &c)| {
            let k = k as i64;
            (k * k - 7 * k + 12) * c as i64
        })
        .sum();
    Rational::new(4, 1) - Rational::new(24, v) + Rational::new(correction, v)
}

/// Closed form for the average number of quasi-incident vertices over the
/// edges of an all-finite polytope:
/// `14 − 120/E + (2/E) Σ_{k≥7} (k² − 11k + 30) p_k`.
pub fn edge_quasi_incident_closed_form(profile: &IncidenceProfile) -> Rational {
    let e = profile.e as i64;
    let correction: i64 = profile
        .p_k
        .iter()
        .filter(|(&k, _)| k >= 7)
        .map(|(&k, &c)| {
            let k = k as i64;
            (k * k - 11 * k + 30) * c as i64
        })
        .sum();
    Rational::new(14, 1) - Rational::new(120, e) + Rational::new(2 * correction, e)
}

/// Some vertex of an ideal polytope with more than 24 vertices has at least
/// 4 quasi-adjacent vertices; the average count obeys its closed form and
/// exceeds 3.
pub fn verify_quasi_adjacent_four(p: &Polytope, class: &RealizabilityClass) -> ClaimResult {
    let claim = ClaimId::QuasiAdjacentFour;
    if *class != RealizabilityClass::IdealRA {
        return ClaimResult::not_applicable(claim, p.name(), "requires an ideal polytope");
    }
    if p.vertex_count() <= 24 {
        return ClaimResult::not_applicable(claim, p.name(), "requires V > 24");
    }
    let mut best: (VertexId, usize) = (0, 0);
    for v in 0..p.vertex_count() {
        let q = p.quasi_adjacent_count(v).unwrap();
        if q > best.1 {
            best = (v, q);
        }
    }
    let avg = p.avg_quasi_adjacent().unwrap();
    let closed = quasi_adjacent_closed_form(p.profile());
    if avg != closed {
        return ClaimResult::fails(
            claim,
            p.name(),
            format!("average {avg} does not match closed form {closed}"),
        );
    }
    let floor = Rational::new(4, 1) - Rational::new(24, p.vertex_count() as i64);
    if avg < floor || avg <= Rational::new(3, 1) {
        return ClaimResult::fails(claim, p.name(), format!("average {avg} below proof floor"));
    }
    if best.1 < 4 {
        return ClaimResult::fails(
            claim,
            p.name(),
            format!("maximal quasi-adjacency is only {}", best.1),
        );
    }
    ClaimResult::holds(
        claim,
        p.name(),
        Some(ClaimWitness::Vertex {
            id: best.0,
            count: best.1,
        }),
        format!("average {avg}"),
    )
}

/// An ideal polytope with more than 72 vertices and only {3,4}-gonal faces
/// has a vertex with no incident or quasi-incident triangle; moreover every
/// triangle blocks at most 9 vertices.
pub fn verify_triangle_free_vertex(p: &Polytope, class: &RealizabilityClass) -> ClaimResult {
    let claim = ClaimId::TriangleFreeVertex;
    if *class != RealizabilityClass::IdealRA {
        return ClaimResult::not_applicable(claim, p.name(), "requires an ideal polytope");
    }
    if p.vertex_count() <= 72 {
        return ClaimResult::not_applicable(claim, p.name(), "requires V > 72");
    }
    if !p.profile().only_34_faces() {
        return ClaimResult::not_applicable(claim, p.name(), "requires only 3- and 4-gonal faces");
    }
    for f in 0..p.face_count() {
        if p.face(f).unwrap().len() == 3 {
            let blocked = p.face_incident_or_quasi_incident_vertices(f).unwrap();
            if blocked > 9 {
                return ClaimResult::fails(
                    claim,
                    p.name(),
                    format!("triangle {f} blocks {blocked} vertices (> 9)"),
                );
            }
        }
    }
    match p.triangle_free_vertex() {
        Some(v) => ClaimResult::holds(
            claim,
            p.name(),
            Some(ClaimWitness::Vertex { id: v, count: 0 }),
            String::new(),
        ),
        None => ClaimResult::fails(claim, p.name(), "no triangle-free vertex found".to_string()),
    }
}

/// A compact polytope with more than 80 vertices has an edge with at least
/// 14 quasi-incident vertices; the face degrees around it sum to at least
/// 24, and the edge average obeys its closed form.
pub fn verify_fat_edge(p: &Polytope, class: &RealizabilityClass) -> ClaimResult {
    let claim = ClaimId::FatEdge;
    if *class != RealizabilityClass::CompactRA {
        return ClaimResult::not_applicable(claim, p.name(), "requires a compact polytope");
    }
    if p.vertex_count() <= 80 {
        return ClaimResult::not_applicable(claim, p.name(), "requires V > 80");
    }
    let mut total: i64 = 0;
    let mut witness: Option<(Edge, usize)> = None;
    for &e in p.edges() {
        let q = p.quasi_incident_vertices(e).unwrap();
        total += q as i64;
        if witness.is_none() && q >= 14 {
            witness = Some((e, q));
        }
    }
    let avg = Rational::new(total, p.edge_count() as i64);
    let closed = edge_quasi_incident_closed_form(p.profile());
    if avg != closed {
        return ClaimResult::fails(
            claim,
            p.name(),
            format!("edge average {avg} does not match closed form {closed}"),
        );
    }
    let Some((e, q)) = witness else {
        return ClaimResult::fails(
            claim,
            p.name(),
            "no edge with 14 quasi-incident vertices".to_string(),
        );
    };
    let around = p.faces_around_edge(e).unwrap();
    let degree_sum: usize = around.iter().map(|&f| p.face(f).unwrap().len()).sum();
    if degree_sum < 24 {
        return ClaimResult::fails(
            claim,
            p.name(),
            format!("witness edge {e} has degree sum {degree_sum} < 24"),
        );
    }
    ClaimResult::holds(
        claim,
        p.name(),
        Some(ClaimWitness::Edge { edge: e, count: q }),
        format!("degree sum {degree_sum}, average {avg}"),
    )
}

fn neighbour_counts(p: &Polytope) -> Vec<usize> {
    (0..p.face_count())
        .map(|f| p.face_neighbours(f).unwrap())
        .collect()
}

/// With `V_F + V_inf > 15` and at least one ideal vertex, some face has at
/// least 6 neighbours.
pub fn verify_six_neighbour_face(p: &Polytope, class: &RealizabilityClass) -> ClaimResult {
    let claim = ClaimId::SixNeighbourFace;
    if !class.is_realizable() {
        return ClaimResult::not_applicable(claim, p.name(), "requires a realizable polytope");
    }
    let profile = p.profile();
    if profile.v <= 15 {
        return ClaimResult::not_applicable(claim, p.name(), "requires V_F + V_inf > 15");
    }
    if profile.v_inf < 1 {
        return ClaimResult::not_applicable(claim, p.name(), "requires V_inf >= 1");
    }
    let counts = neighbour_counts(p);
    match counts.iter().position(|&c| c >= 6) {
        Some(f) => ClaimResult::holds(
            claim,
            p.name(),
            Some(ClaimWitness::Face {
                id: f,
                count: counts[f],
            }),
            String::new(),
        ),
        None => ClaimResult::fails(claim, p.name(), "all faces have <= 5 neighbours".to_string()),
    }
}

/// With `V_F + V_inf > 14`, at least 3 ideal vertices and no face with 7 or
/// more neighbours, at least 5 faces have at least 6 neighbours.
pub fn verify_five_six_neighbour_faces(p: &Polytope, class: &RealizabilityClass) -> ClaimResult {
    let claim = ClaimId::FiveSixNeighbourFaces;
    if !class.is_realizable() {
        return ClaimResult::not_applicable(claim, p.name(), "requires a realizable polytope");
    }
    let profile = p.profile();
    if profile.v <= 14 {
        return ClaimResult::not_applicable(claim, p.name(), "requires V_F + V_inf > 14");
    }
    if profile.v_inf < 3 {
        return ClaimResult::not_applicable(claim, p.name(), "requires V_inf >= 3");
    }
    let counts = neighbour_counts(p);
    if counts.iter().any(|&c| c >= 7) {
        return ClaimResult::not_applicable(claim, p.name(), "a face has >= 7 neighbours");
    }
    let six: Vec<FaceId> = (0..p.face_count()).filter(|&f| counts[f] >= 6).collect();
    if six.len() >= 5 {
        ClaimResult::holds(
            claim,
            p.name(),
            Some(ClaimWitness::Faces(six)),
            String::new(),
        )
    } else {
        ClaimResult::fails(
            claim,
            p.name(),
            format!("only {} faces with 6 neighbours", six.len()),
        )
    }
}

/// With at least 6 ideal vertices and some face having at most 5 neighbours,
/// some face has at least 7 neighbours.
pub fn verify_seven_neighbour_face(p: &Polytope, class: &RealizabilityClass) -> ClaimResult {
    let claim = ClaimId::SevenNeighbourFace;
    if !class.is_realizable() {
        return ClaimResult::not_applicable(claim, p.name(), "requires a realizable polytope");
    }
    if p.profile().v_inf < 6 {
        return ClaimResult::not_applicable(claim, p.name(), "requires V_inf >= 6");
    }
    let counts = neighbour_counts(p);
    if !counts.iter().any(|&c| c <= 5) {
        return ClaimResult::not_applicable(claim, p.name(), "no face with <= 5 neighbours");
    }
    match counts.iter().position(|&c| c >= 7) {
        Some(f) => ClaimResult::holds(
            claim,
            p.name(),
            Some(ClaimWitness::Face {
                id: f,
                count: counts[f],
            }),
            String::new(),
        ),
        None => ClaimResult::fails(claim, p.name(), "no face with >= 7 neighbours".to_string()),
    }
}

// A triangular face all of whose vertices are ideal.
fn is_ideal_triangle(p: &Polytope, f: FaceId) -> bool {
    let face = p.face(f).unwrap();
    face.len() == 3
        && face
            .iter()
            .all(|&v| p.vertex_faces(v).unwrap().len() == 4)
}

/// With `V_F + V_inf > 14` and at least one ideal vertex, the faces with at
/// least 6 neighbours include one that is not an ideal triangle.
///
/// The hypothesis `V_inf >= 1` is required: the regular dodecahedron has 20
/// vertices but no face with 6 neighbours at all.
pub fn verify_n6_non_ideal_triangle(p: &Polytope, class: &RealizabilityClass) -> ClaimResult {
    let claim = ClaimId::NonIdealTriangleN6;
    if !class.is_realizable() {
        return ClaimResult::not_applicable(claim, p.name(), "requires a realizable polytope");
    }
    let profile = p.profile();
    if profile.v <= 14 {
        return ClaimResult::not_applicable(claim, p.name(), "requires V_F + V_inf > 14");
    }
    if profile.v_inf < 1 {
        return ClaimResult::not_applicable(claim, p.name(), "requires V_inf >= 1");
    }
    let n6 = crate::surgery::n6_faces(p);
    match n6.iter().copied().find(|&f| !is_ideal_triangle(p, f)) {
        Some(f) => {
            let count = p.face_neighbours(f).unwrap();
            ClaimResult::holds(
                claim,
                p.name(),
                Some(ClaimWitness::Face { id: f, count }),
                String::new(),
            )
        }
        None => ClaimResult::fails(
            claim,
            p.name(),
            format!("all {} faces with >= 6 neighbours are ideal triangles", n6.len()),
        ),
    }
}

/// The direct quasi-adjacency average of an ideal polytope equals its
/// closed form, as exact rationals.
pub fn verify_quasi_adjacent_average(p: &Polytope, class: &RealizabilityClass) -> ClaimResult {
    let claim = ClaimId::QuasiAdjacentAverage;
    if *class != RealizabilityClass::IdealRA {
        return ClaimResult::not_applicable(claim, p.name(), "requires an ideal polytope");
    }
    let direct = p.avg_quasi_adjacent().unwrap();
    let closed = quasi_adjacent_closed_form(p.profile());
    if direct == closed {
        ClaimResult::holds(claim, p.name(), None, format!("average {direct}"))
    } else {
        ClaimResult::fails(claim, p.name(), format!("direct {direct} != closed {closed}"))
    }
}

/// The direct edge quasi-incidence average of a compact polytope equals its
/// closed form, as exact rationals.
pub fn verify_edge_quasi_incident_average(
    p: &Polytope,
    class: &RealizabilityClass,
) -> ClaimResult {
    let claim = ClaimId::EdgeQuasiIncidentAverage;
    if *class != RealizabilityClass::CompactRA {
        return ClaimResult::not_applicable(claim, p.name(), "requires a compact polytope");
    }
    let total: i64 = p
        .edges()
        .iter()
        .map(|&e| p.quasi_incident_vertices(e).unwrap() as i64)
        .sum();
    let direct = Rational::new(total, p.edge_count() as i64);
    let closed = edge_quasi_incident_closed_form(p.profile());
    if direct == closed {
        ClaimResult::holds(claim, p.name(), None, format!("average {direct}"))
    } else {
        ClaimResult::fails(claim, p.name(), format!("direct {direct} != closed {closed}"))
    }
}

/// The direct face-neighbour average equals `(8V_inf + 3V_F) / (V_inf +
/// V_F/2 + 2)`, as exact rationals.
pub fn verify_face_neighbour_average(p: &Polytope, class: &RealizabilityClass) -> ClaimResult {
    let claim = ClaimId::FaceNeighbourAverage;
    if !class.is_realizable() {
        return ClaimResult::not_applicable(claim, p.name(), "requires a realizable polytope");
    }
    let total: i64 = (0..p.face_count())
        .map(|f| p.face_neighbours(f).unwrap() as i64)
        .sum();
    let direct = Rational::new(total, p.face_count() as i64);
    let formula = p.avg_face_neighbours().unwrap();
    if direct == formula {
        ClaimResult::holds(claim, p.name(), None, format!("average {direct}"))
    } else {
        ClaimResult::fails(
            claim,
            p.name(),
            format!("direct {direct} != formula {formula}"),
        )
    }
}

/// For an entry with a closed-form volume, the volume lies between the best
/// lower and upper bounds (within the combined error bounds).
pub fn verify_bound_soundness(entry: &CatalogEntry) -> ClaimResult {
    let claim = ClaimId::BoundSoundness;
    let name = entry.name().to_string();
    let Some(volume) = entry.known_volume else {
        return ClaimResult::not_applicable(claim, &name, "no closed-form volume");
    };
    let report = match bounds::bound_report(&entry.polytope) {
        Ok(r) => r,
        Err(e) => return ClaimResult::fails(claim, &name, format!("bound report failed: {e}")),
    };
    let (upper_id, upper) = report.best_upper.expect("realizable types have upper bounds");
    let (lower_id, lower) = report.best_lower.expect("realizable types have lower bounds");
    if !volume.le_within(&upper) {
        return ClaimResult::fails(
            claim,
            &name,
            format!("volume {} exceeds {} = {}", volume.value, upper_id, upper.value),
        );
    }
    if !lower.le_within(&volume) {
        return ClaimResult::fails(
            claim,
            &name,
            format!("volume {} below {} = {}", volume.value, lower_id, lower.value),
        );
    }
    ClaimResult::holds(
        claim,
        &name,
        None,
        format!(
            "{} <= {} <= {}",
            lower.value, volume.value, upper.value
        ),
    )
}

/// Run every claim against every entry of a catalog. Results come in
/// catalog order, claims in declaration order, bound-soundness last.
pub fn run_claims(entries: &[CatalogEntry], population: &str) -> Vec<ClaimResult> {
    let mut out = Vec::new();
    for entry in entries {
        let p = &entry.polytope;
        let class = andreev::classify(p);
        for claim in ClaimId::PER_ENTRY {
            let mut result = match claim {
                ClaimId::QuasiAdjacentFour => verify_quasi_adjacent_four(p, &class),
                ClaimId::TriangleFreeVertex => verify_triangle_free_vertex(p, &class),
                ClaimId::FatEdge => verify_fat_edge(p, &class),
                ClaimId::SixNeighbourFace => verify_six_neighbour_face(p, &class),
                ClaimId::FiveSixNeighbourFaces => verify_five_six_neighbour_faces(p, &class),
                ClaimId::SevenNeighbourFace => verify_seven_neighbour_face(p, &class),
                ClaimId::NonIdealTriangleN6 => verify_n6_non_ideal_triangle(p, &class),
                ClaimId::QuasiAdjacentAverage => verify_quasi_adjacent_average(p, &class),
                ClaimId::EdgeQuasiIncidentAverage => {
                    verify_edge_quasi_incident_average(p, &class)
                }
                ClaimId::FaceNeighbourAverage => verify_face_neighbour_average(p, &class),
                ClaimId::BoundSoundness => unreachable!("not a per-entry claim"),
            };
            result.population = population.to_string();
            out.push(result);
        }
    }
    for entry in entries {
        let mut result = verify_bound_soundness(entry);
        result.population = population.to_string();
        out.push(result);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::surgery;

    fn classified(p: &Polytope) -> RealizabilityClass {
        andreev::classify(p)
    }

    #[test]
    fn quasi_adjacent_four_examples() {
        let a13 = catalog::antiprism(13).unwrap();
        let r = verify_quasi_adjacent_four(&a13, &classified(&a13));
        assert_eq!(r.verdict, Verdict::Holds);
        match r.witness {
            Some(ClaimWitness::Vertex { id, count }) => {
                assert!(count >= 4);
                assert_eq!(a13.quasi_adjacent_count(id).unwrap(), count);
            }
            other => panic!("expected vertex witness, got {other:?}"),
        }
        // Boundary case V = 24 is out of scope.
        let a12 = catalog::antiprism(12).unwrap();
        let r = verify_quasi_adjacent_four(&a12, &classified(&a12));
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn quasi_adjacent_four_on_chain() {
        let chain = catalog::octa_double_chain(3).unwrap();
        let p = &chain[3];
        assert_eq!(p.vertex_count(), 27);
        let r = verify_quasi_adjacent_four(p, &classified(p));
        assert_eq!(r.verdict, Verdict::Holds);
    }

    #[test]
    fn triangle_free_vertex_on_deep_chain() {
        let chain = catalog::octa_double_chain(5).unwrap();
        let p = &chain[5];
        assert_eq!(p.vertex_count(), 99);
        let r = verify_triangle_free_vertex(p, &classified(p));
        assert_eq!(r.verdict, Verdict::Holds, "{}", r.detail);
        match r.witness {
            Some(ClaimWitness::Vertex { id, .. }) => {
                assert_eq!(p.triangle_free_vertex(), Some(id));
            }
            other => panic!("expected vertex witness, got {other:?}"),
        }
        // The octahedron itself has every face triangular.
        let a3 = catalog::antiprism(3).unwrap();
        let r = verify_triangle_free_vertex(&a3, &classified(&a3));
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn fat_edge_examples() {
        let l21 = catalog::loebell(21).unwrap();
        let r = verify_fat_edge(&l21, &classified(&l21));
        assert_eq!(r.verdict, Verdict::Holds, "{}", r.detail);
        match r.witness {
            Some(ClaimWitness::Edge { edge, count }) => {
                assert_eq!(l21.quasi_incident_vertices(edge).unwrap(), count);
                assert!(count >= 14);
            }
            other => panic!("expected edge witness, got {other:?}"),
        }
        let l25 = catalog::loebell(25).unwrap();
        assert_eq!(verify_fat_edge(&l25, &classified(&l25)).verdict, Verdict::Holds);
        let l5 = catalog::loebell(5).unwrap();
        assert_eq!(
            verify_fat_edge(&l5, &classified(&l5)).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn dodecahedron_average_is_ten() {
        // Every edge of L(5) has exactly 10 quasi-incident vertices and the
        // closed form agrees.
        let l5 = catalog::loebell(5).unwrap();
        let closed = edge_quasi_incident_closed_form(l5.profile());
        assert_eq!(closed, Rational::new(10, 1));
        let r = verify_edge_quasi_incident_average(&l5, &classified(&l5));
        assert_eq!(r.verdict, Verdict::Holds);
    }

    #[test]
    fn six_neighbour_face_examples() {
        let a9 = catalog::antiprism(9).unwrap();
        let r = verify_six_neighbour_face(&a9, &classified(&a9));
        assert_eq!(r.verdict, Verdict::Holds);
        let l5 = catalog::loebell(5).unwrap();
        let r = verify_six_neighbour_face(&l5, &classified(&l5));
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn seven_neighbour_face_on_split_antiprism() {
        let a = catalog::antiprism(6).unwrap();
        let s = catalog::split_ideal_vertex(&a, 0).unwrap();
        let r = verify_seven_neighbour_face(&s, &classified(&s));
        assert_eq!(r.verdict, Verdict::Holds, "{}", r.detail);
        // Antiprisms have no face with <= 5 neighbours.
        let r = verify_seven_neighbour_face(&a, &classified(&a));
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn n6_claims() {
        let a8 = catalog::antiprism(8).unwrap();
        let r = verify_n6_non_ideal_triangle(&a8, &classified(&a8));
        assert_eq!(r.verdict, Verdict::Holds);
        // Compact types are excluded; the dodecahedron would be a
        // counterexample to the unrestricted statement.
        let l5 = catalog::loebell(5).unwrap();
        let r = verify_n6_non_ideal_triangle(&l5, &classified(&l5));
        assert_eq!(r.verdict, Verdict::NotApplicable);
        // Doubles of Loebell polytopes have merged faces with >= 6
        // neighbours.
        let d = surgery::double_along_face(&l5, 0).unwrap();
        assert!(!surgery::n6_faces(&d).is_empty());
    }

    #[test]
    fn averaging_identities_on_families() {
        for n in [3usize, 4, 7, 12, 20] {
            let a = catalog::antiprism(n).unwrap();
            let class = classified(&a);
            assert_eq!(
                verify_quasi_adjacent_average(&a, &class).verdict,
                Verdict::Holds,
                "A({n})"
            );
            assert_eq!(
                verify_face_neighbour_average(&a, &class).verdict,
                Verdict::Holds,
                "A({n})"
            );
        }
        for n in [5usize, 6, 9, 21] {
            let l = catalog::loebell(n).unwrap();
            let class = classified(&l);
            assert_eq!(
                verify_edge_quasi_incident_average(&l, &class).verdict,
                Verdict::Holds,
                "L({n})"
            );
            assert_eq!(
                verify_face_neighbour_average(&l, &class).verdict,
                Verdict::Holds,
                "L({n})"
            );
        }
    }

    #[test]
    fn bound_soundness_on_small_families() {
        for n in 3..=12 {
            let entry = &catalog::ideal_catalog()[n - 3];
            assert_eq!(entry.name(), format!("A({n})"));
            let r = verify_bound_soundness(entry);
            assert_eq!(r.verdict, Verdict::Holds, "{}: {}", entry.name(), r.detail);
        }
    }

    #[test]
    fn mixed_catalog_has_no_failures() {
        let entries = catalog::mixed_catalog();
        let results = run_claims(&entries, "mixed");
        for r in &results {
            assert_ne!(r.verdict, Verdict::Fails, "{}", r.line());
        }
        // The mixed populations exercise the positive paths of the
        // neighbour-count claims.
        assert!(results
            .iter()
            .any(|r| r.claim == ClaimId::SixNeighbourFace && r.verdict == Verdict::Holds));
        assert!(results
            .iter()
            .any(|r| r.claim == ClaimId::SevenNeighbourFace && r.verdict == Verdict::Holds));
        assert!(results
            .iter()
            .any(|r| r.claim == ClaimId::NonIdealTriangleN6 && r.verdict == Verdict::Holds));
        // The triply contracted dodecahedron has no face with 7 or more
        // neighbours, so the five-face claim applies and certifies.
        assert!(results.iter().any(
            |r| r.claim == ClaimId::FiveSixNeighbourFaces && r.verdict == Verdict::Holds
        ));
    }
}
