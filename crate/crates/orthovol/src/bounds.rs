//! Volume bounds for right-angled hyperbolic polyhedra, driven by vertex
//! counts and face data, with applicability logic and best-bound selection.
//!
//! Every bound is an affine combination of the two volume constants `v₈`
//! (regular ideal octahedron) and `v₃` (regular ideal tetrahedron), or of
//! Lobachevsky values in the case of the cone decompositions. A
//! [`BoundReport`] evaluates every bound — including ones dominated by
//! better ones — so the audit trail stays complete; `best_upper` and
//! `best_lower` compare central values, since the error bounds are many
//! orders of magnitude below the gaps between bounds.

use std::f64::consts::PI;

use crate::andreev::{self, RealizabilityClass};
use crate::lobachevsky::{self, v3, v8, ErrBoundedValue};
use crate::polytope::Polytope;
use crate::{Error, FaceId, VertexId};

/// Identifier of one bound formula. Declaration order fixes report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    IdealLowerAtkinson,
    IdealUpperAtkinson,
    IdealUpperAtLeast9,
    IdealUpperAbove24,
    IdealUpperKGonal,
    IdealUpperQuadTriOnly,
    IdealApexVertexCone,
    IdealApexFaceCone,
    CompactLowerAtkinson,
    CompactUpperAtkinson,
    CompactUpperAtLeast24,
    CompactUpperAbove80,
    CompactUpperKGonal,
    CompactUpperFaceTriple,
    MixedLowerAtkinson,
    MixedUpperAtkinson,
    MixedUpperAbove15,
}

impl BoundId {
    pub const ALL: [BoundId; 17] = [
        BoundId::IdealLowerAtkinson,
        BoundId::IdealUpperAtkinson,
        BoundId::IdealUpperAtLeast9,
        BoundId::IdealUpperAbove24,
        BoundId::IdealUpperKGonal,
        BoundId::IdealUpperQuadTriOnly,
        BoundId::IdealApexVertexCone,
        BoundId::IdealApexFaceCone,
        BoundId::CompactLowerAtkinson,
        BoundId::CompactUpperAtkinson,
        BoundId::CompactUpperAtLeast24,
        BoundId::CompactUpperAbove80,
        BoundId::CompactUpperKGonal,
        BoundId::CompactUpperFaceTriple,
        BoundId::MixedLowerAtkinson,
        BoundId::MixedUpperAtkinson,
        BoundId::MixedUpperAbove15,
    ];

    pub fn is_upper(&self) -> bool {
        !matches!(
            self,
            BoundId::IdealLowerAtkinson
                | BoundId::CompactLowerAtkinson
                | BoundId::MixedLowerAtkinson
        )
    }

    /// Whether the source states the inequality strictly. Metadata only;
    /// never enforced numerically.
    pub fn strict(&self) -> bool {
        matches!(
            self,
            BoundId::CompactUpperAtkinson
                | BoundId::MixedUpperAtkinson
                | BoundId::MixedUpperAbove15
        )
    }

    /// Stable column name for reports.
    pub fn column(&self) -> &'static str {
        match self {
            BoundId::IdealLowerAtkinson => "ideal_lower_atkinson",
            BoundId::IdealUpperAtkinson => "ideal_upper_atkinson",
            BoundId::IdealUpperAtLeast9 => "ideal_upper_at_least_9",
            BoundId::IdealUpperAbove24 => "ideal_upper_above_24",
            BoundId::IdealUpperKGonal => "ideal_upper_kgonal",
            BoundId::IdealUpperQuadTriOnly => "ideal_upper_quad_tri_only",
            BoundId::IdealApexVertexCone => "ideal_apex_vertex_cone",
            BoundId::IdealApexFaceCone => "ideal_apex_face_cone",
            BoundId::CompactLowerAtkinson => "compact_lower_atkinson",
            BoundId::CompactUpperAtkinson => "compact_upper_atkinson",
            BoundId::CompactUpperAtLeast24 => "compact_upper_at_least_24",
            BoundId::CompactUpperAbove80 => "compact_upper_above_80",
            BoundId::CompactUpperKGonal => "compact_upper_kgonal",
            BoundId::CompactUpperFaceTriple => "compact_upper_face_triple",
            BoundId::MixedLowerAtkinson => "mixed_lower_atkinson",
            BoundId::MixedUpperAtkinson => "mixed_upper_atkinson",
            BoundId::MixedUpperAbove15 => "mixed_upper_above_15",
        }
    }

    /// Human-readable description of where the bound comes from.
    pub fn provenance(&self) -> &'static str {
        match self {
            BoundId::IdealLowerAtkinson => "Atkinson's lower vertex-count bound, ideal case",
            BoundId::IdealUpperAtkinson => "Atkinson's upper vertex-count bound, ideal case",
            BoundId::IdealUpperAtLeast9 => "refined ideal upper bound for V >= 9, sharp at the doubled octahedron",
            BoundId::IdealUpperAbove24 => "ideal upper bound from a vertex with >= 4 quasi-adjacent vertices (V > 24)",
            BoundId::IdealUpperKGonal => "ideal upper bound from a k-gonal facet",
            BoundId::IdealUpperQuadTriOnly => "ideal upper bound for types with only 3- and 4-gonal faces, V >= 73",
            BoundId::IdealApexVertexCone => "cone decomposition graded by quasi-adjacency to an apex vertex",
            BoundId::IdealApexFaceCone => "cone decomposition summed over faces around an apex vertex",
            BoundId::CompactLowerAtkinson => "Atkinson's lower vertex-count bound, compact case",
            BoundId::CompactUpperAtkinson => "Atkinson's upper vertex-count bound, compact case",
            BoundId::CompactUpperAtLeast24 => "refined compact upper bound for V >= 24",
            BoundId::CompactUpperAbove80 => "compact upper bound from an edge with fat faces around it (V > 80)",
            BoundId::CompactUpperKGonal => "compact upper bound from a k-gonal face, k >= 5",
            BoundId::CompactUpperFaceTriple => "compact upper bound from an adjacent face triple, via doubling",
            BoundId::MixedLowerAtkinson => "Atkinson's lower bound for mixed vertex kinds",
            BoundId::MixedUpperAtkinson => "Atkinson's upper bound for mixed vertex kinds",
            BoundId::MixedUpperAbove15 => "mixed upper bound from iterated doubling (V_inf + V_F > 15)",
        }
    }
}

impl std::fmt::Display for BoundId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.column())
    }
}

/// Atkinson's two-sided bound for ideal polyhedra with `V >= 6` vertices:
/// `(v₈/4)V − v₈/2 ≤ Vol ≤ (v₈/2)V − 2v₈`.
pub fn ideal_atkinson(v: u64) -> Result<(ErrBoundedValue, ErrBoundedValue), Error> {
    if v < 6 {
        return Err(Error::ParameterOutOfRange {
            what: "ideal vertex count V",
            got: v as i64,
            requirement: "V >= 6",
        });
    }
    let lower = v8().scale(v as f64 / 4.0 - 0.5);
    let upper = v8().scale(v as f64 / 2.0 - 2.0);
    Ok((lower, upper))
}

/// Upper bound `(v₈/2)V − (5/2)v₈` for ideal polyhedra with `V >= 9`.
pub fn ideal_upper_at_least_9(v: u64) -> Result<ErrBoundedValue, Error> {
    if v < 9 {
        return Err(Error::ParameterOutOfRange {
            what: "ideal vertex count V",
            got: v as i64,
            requirement: "V >= 9",
        });
    }
    Ok(v8().scale(v as f64 / 2.0 - 2.5))
}

/// The three refined ideal upper bounds, each emitted when applicable:
/// `V > 24`, a `k`-gonal facet, and the only-{3,4}-faces case with `V >= 73`.
pub fn ideal_upper_refinements(
    v: u64,
    max_face_k: u64,
    only_34_faces: bool,
) -> Vec<(BoundId, u64, ErrBoundedValue)> {
    let mut out = Vec::new();
    if v > 24 {
        out.push((
            BoundId::IdealUpperAbove24,
            0,
            v8().scale(v as f64 / 2.0 - 3.0),
        ));
    }
    if max_face_k >= 3 {
        let k = max_face_k;
        out.push((
            BoundId::IdealUpperKGonal,
            k,
            v8().scale(v as f64 / 2.0 - (k as f64 + 5.0) / 4.0),
        ));
    }
    if only_34_faces && v >= 73 {
        let value = v8().scale(v as f64 / 2.0 - 9.0) + v3().scale(20.0);
        out.push((BoundId::IdealUpperQuadTriOnly, 0, value));
    }
    out
}

fn require_ideal(p: &Polytope) -> Result<(), Error> {
    match andreev::classify(p) {
        RealizabilityClass::IdealRA => Ok(()),
        RealizabilityClass::NotRealizable(w) => Err(Error::NotRealizable(w)),
        _ => Err(Error::RequiresAllIdeal),
    }
}

// (V − 4 − m/2) · v₈/2 with m the apex's quasi-adjacency count.
fn vertex_cone_value(p: &Polytope, apex: VertexId) -> Result<ErrBoundedValue, Error> {
    let m = p.quasi_adjacent_count(apex)?;
    let v = p.vertex_count() as f64;
    Ok(v8().scale((v - 4.0 - m as f64 / 2.0) / 2.0))
}

// Σ over faces not containing the apex: (k−1)Λ(π/(2k−2)) when the face is
// quasi-incident to the apex, k·Λ(π/k) otherwise. Incident faces contribute
// nothing.
fn face_cone_value(p: &Polytope, apex: VertexId) -> Result<ErrBoundedValue, Error> {
    let mut total = ErrBoundedValue::exact(0.0);
    for f in 0..p.face_count() {
        let face = p.face(f)?;
        if face.contains(&apex) {
            continue;
        }
        let k = face.len() as f64;
        let term = if p.face_quasi_incident_to_vertex(f, apex)? {
            lobachevsky::eval_with_input_err(PI / (2.0 * k - 2.0), f64::EPSILON).scale(k - 1.0)
        } else {
            lobachevsky::eval_with_input_err(PI / k, f64::EPSILON).scale(k)
        };
        total = total + term;
    }
    Ok(total)
}

// A face not containing the apex that shares edges with two or more faces
// incident to the apex; the face-cone classification is not backed by a
// projection argument in that configuration.
fn face_cone_degenerate(p: &Polytope, apex: VertexId) -> bool {
    let at_apex = p.vertex_faces(apex).unwrap();
    for f in 0..p.face_count() {
        if p.face(f).unwrap().contains(&apex) {
            continue;
        }
        let neighbours = p.face_edge_neighbours(f).unwrap();
        let count = neighbours.iter().filter(|g| at_apex.contains(g)).count();
        if count >= 2 {
            return true;
        }
    }
    false
}

/// Apex bound through the quasi-adjacency count of one vertex.
pub fn apex_vertex_bound(p: &Polytope, apex: VertexId) -> Result<ErrBoundedValue, Error> {
    require_ideal(p)?;
    vertex_cone_value(p, apex)
}

/// Apex bound through the face cones around one vertex.
pub fn apex_face_bound(p: &Polytope, apex: VertexId) -> Result<ErrBoundedValue, Error> {
    require_ideal(p)?;
    face_cone_value(p, apex)
}

/// Which cone decomposition produced an apex bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApexMethod {
    VertexCone,
    FaceCone,
}

impl std::fmt::Display for ApexMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ApexMethod::VertexCone => write!(f, "vertex-cone"),
            ApexMethod::FaceCone => write!(f, "face-cone"),
        }
    }
}

/// The minimum apex bound over all apexes and both methods. Near-ties go to
/// the smaller vertex id, then to the vertex method.
pub fn best_apex_bound(p: &Polytope) -> Result<(VertexId, ApexMethod, ErrBoundedValue), Error> {
    require_ideal(p)?;
    const TIE_MARGIN: f64 = 1e-9;
    let mut best: Option<(VertexId, ApexMethod, ErrBoundedValue)> = None;
    for apex in 0..p.vertex_count() {
        for (method, value) in [
            (ApexMethod::VertexCone, vertex_cone_value(p, apex)?),
            (ApexMethod::FaceCone, face_cone_value(p, apex)?),
        ] {
            let better = match &best {
                None => true,
                Some((_, _, b)) => value.value < b.value - TIE_MARGIN,
            };
            if better {
                best = Some((apex, method, value));
            }
        }
    }
    Ok(best.expect("polytope has vertices"))
}

/// The compact vertex-count bounds, each emitted when applicable. Requires
/// `V = 20` or `V >= 24`, the possible vertex counts of compact types.
pub fn compact_bounds(v: u64, max_face_k: u64) -> Result<Vec<(BoundId, u64, ErrBoundedValue)>, Error> {
    if v != 20 && v < 24 {
        return Err(Error::ParameterOutOfRange {
            what: "compact vertex count V",
            got: v as i64,
            requirement: "V = 20 or V >= 24",
        });
    }
    let vf = v as f64;
    let mut out = vec![
        (
            BoundId::CompactLowerAtkinson,
            0,
            v8().scale(vf / 32.0 - 0.25),
        ),
        (
            BoundId::CompactUpperAtkinson,
            0,
            v3().scale(5.0 * vf / 8.0 - 25.0 / 4.0),
        ),
    ];
    if v >= 24 {
        out.push((
            BoundId::CompactUpperAtLeast24,
            0,
            v3().scale(5.0 * vf / 8.0 - 35.0 / 4.0),
        ));
    }
    if v > 80 {
        out.push((
            BoundId::CompactUpperAbove80,
            0,
            v3().scale(5.0 * vf / 8.0 - 10.0),
        ));
    }
    if max_face_k >= 5 {
        let k = max_face_k as f64;
        out.push((
            BoundId::CompactUpperKGonal,
            max_face_k,
            v3().scale(5.0 * vf / 8.0 - (5.0 * k + 35.0) / 8.0),
        ));
    }
    Ok(out)
}

/// Compact upper bound `(V − k₁ − k₂ − k₃ + 4) · 5v₃/8` from three faces
/// where the middle one is adjacent to the other two.
pub fn face_triple_bound(v: u64, k1: u64, k2: u64, k3: u64) -> Result<ErrBoundedValue, Error> {
    if v < 20 {
        return Err(Error::ParameterOutOfRange {
            what: "compact vertex count V",
            got: v as i64,
            requirement: "V >= 20",
        });
    }
    for k in [k1, k2, k3] {
        if k < 5 {
            return Err(Error::ParameterOutOfRange {
                what: "face degree k",
                got: k as i64,
                requirement: "k >= 5",
            });
        }
    }
    let coeff = v as f64 - (k1 + k2 + k3) as f64 + 4.0;
    Ok(v3().scale(5.0 * coeff / 8.0))
}

/// The mixed-vertex bounds, each emitted when applicable.
pub fn mixed_bounds(v_inf: u64, v_f: u64) -> Result<Vec<(BoundId, u64, ErrBoundedValue)>, Error> {
    if v_inf == 0 && v_f == 0 {
        return Err(Error::ParameterOutOfRange {
            what: "vertex counts",
            got: 0,
            requirement: "V_inf + V_F >= 1",
        });
    }
    let (i, f) = (v_inf as f64, v_f as f64);
    let mut out = vec![
        (
            BoundId::MixedLowerAtkinson,
            0,
            v8().scale(i / 8.0 + f / 32.0 - 0.25),
        ),
        (
            BoundId::MixedUpperAtkinson,
            0,
            v8().scale(i / 2.0 - 0.5) + v3().scale(5.0 * f / 8.0),
        ),
    ];
    if v_inf + v_f > 15 {
        out.push((
            BoundId::MixedUpperAbove15,
            0,
            v8().scale(i / 2.0 - 1.0) + v3().scale(5.0 * f / 8.0 - 2.5),
        ));
    }
    Ok(out)
}

/// The adjacent face triple maximizing `k₁ + k₂ + k₃`, which minimizes the
/// doubled-face bound. Lexicographic tie-break on `(f₁, f₂, f₃)`.
pub fn best_face_triple(p: &Polytope) -> Option<([FaceId; 3], [u64; 3])> {
    let mut best: Option<(u64, [FaceId; 3])> = None;
    for f2 in 0..p.face_count() {
        let neighbours = p.face_edge_neighbours(f2).ok()?;
        for (i, &f1) in neighbours.iter().enumerate() {
            for &f3 in neighbours.iter().skip(i + 1) {
                let sum = (p.face(f1).ok()?.len()
                    + p.face(f2).ok()?.len()
                    + p.face(f3).ok()?.len()) as u64;
                let candidate = (sum, [f1, f2, f3]);
                let replace = match &best {
                    None => true,
                    Some((s, t)) => {
                        sum > *s || (sum == *s && [f1, f2, f3] < *t)
                    }
                };
                if replace {
                    best = Some(candidate);
                }
            }
        }
    }
    best.map(|(_, faces)| {
        let ks = [
            p.face(faces[0]).unwrap().len() as u64,
            p.face(faces[1]).unwrap().len() as u64,
            p.face(faces[2]).unwrap().len() as u64,
        ];
        (faces, ks)
    })
}

/// One row of a bound report.
#[derive(Debug, Clone)]
pub struct BoundEntry {
    pub id: BoundId,
    /// The face degree `k` for the k-gonal bounds, when applicable.
    pub param: Option<u64>,
    pub applicable: bool,
    /// Why the bound does not apply, or a caveat attached to its value.
    pub reason: Option<String>,
    pub value: Option<ErrBoundedValue>,
}

/// Every bound evaluated against one polytope, with the extremal applicable
/// bounds singled out.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub class: RealizabilityClass,
    pub entries: Vec<BoundEntry>,
    pub best_upper: Option<(BoundId, ErrBoundedValue)>,
    pub best_lower: Option<(BoundId, ErrBoundedValue)>,
}

impl BoundReport {
    pub fn entry(&self, id: BoundId) -> &BoundEntry {
        self.entries
            .iter()
            .find(|e| e.id == id)
            .expect("report carries every bound id")
    }
}

impl std::fmt::Display for BoundReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "class: {}", self.class)?;
        for e in &self.entries {
            let value = match (&e.value, e.param) {
                (Some(v), Some(k)) => format!("{} (k = {k})", crate::report::sig9(v.value)),
                (Some(v), None) => crate::report::sig9(v.value),
                (None, _) => "-".to_string(),
            };
            let note = match (&e.reason, e.applicable) {
                (Some(r), true) => format!("  [{r}]"),
                (Some(r), false) => format!("  not applicable: {r}"),
                (None, _) => String::new(),
            };
            writeln!(f, "  {:<28} {}{}", e.id.column(), value, note)?;
        }
        if let Some((id, v)) = &self.best_upper {
            writeln!(f, "best upper: {} = {}", id.column(), crate::report::sig9(v.value))?;
        }
        if let Some((id, v)) = &self.best_lower {
            writeln!(f, "best lower: {} = {}", id.column(), crate::report::sig9(v.value))?;
        }
        Ok(())
    }
}

/// Evaluate every bound against `p`.
///
/// Errors when `p` is not realizable; bounds say nothing about such types.
pub fn bound_report(p: &Polytope) -> Result<BoundReport, Error> {
    let class = andreev::classify(p);
    if let RealizabilityClass::NotRealizable(w) = class {
        return Err(Error::NotRealizable(w));
    }
    let profile = p.profile();
    let v = profile.v as u64;
    let v_inf = profile.v_inf as u64;
    let v_f = profile.v_f as u64;
    let max_k = profile.max_face_degree() as u64;
    let is_ideal = class == RealizabilityClass::IdealRA;
    let is_compact = class == RealizabilityClass::CompactRA;

    let mut entries: Vec<BoundEntry> = BoundId::ALL
        .iter()
        .map(|&id| BoundEntry {
            id,
            param: None,
            applicable: false,
            reason: None,
            value: None,
        })
        .collect();
    let set = |entries: &mut Vec<BoundEntry>, id: BoundId, param: Option<u64>, value: ErrBoundedValue| {
        let e = entries.iter_mut().find(|e| e.id == id).unwrap();
        e.param = param;
        e.applicable = true;
        e.value = Some(value);
    };
    let skip = |entries: &mut Vec<BoundEntry>, id: BoundId, reason: &str| {
        let e = entries.iter_mut().find(|e| e.id == id).unwrap();
        e.reason = Some(reason.to_string());
    };

    if is_ideal {
        let (lower, upper) = ideal_atkinson(v)?;
        set(&mut entries, BoundId::IdealLowerAtkinson, None, lower);
        set(&mut entries, BoundId::IdealUpperAtkinson, None, upper);
        match ideal_upper_at_least_9(v) {
            Ok(value) => set(&mut entries, BoundId::IdealUpperAtLeast9, None, value),
            Err(_) => skip(&mut entries, BoundId::IdealUpperAtLeast9, "requires V >= 9"),
        }
        let refinements = ideal_upper_refinements(v, max_k, profile.only_34_faces());
        for (id, k, value) in refinements {
            let param = if id == BoundId::IdealUpperKGonal {
                Some(k)
            } else {
                None
            };
            set(&mut entries, id, param, value);
        }
        if v <= 24 {
            skip(&mut entries, BoundId::IdealUpperAbove24, "requires V > 24");
        }
        if !(profile.only_34_faces() && v >= 73) {
            skip(
                &mut entries,
                BoundId::IdealUpperQuadTriOnly,
                "requires only 3- and 4-gonal faces and V >= 73",
            );
        }
        // Best apex bounds per method.
        let mut best_vertex: Option<ErrBoundedValue> = None;
        let mut best_face: Option<(VertexId, ErrBoundedValue)> = None;
        for apex in 0..p.vertex_count() {
            let vc = vertex_cone_value(p, apex)?;
            if best_vertex.map_or(true, |b| vc.value < b.value) {
                best_vertex = Some(vc);
            }
            let fc = face_cone_value(p, apex)?;
            if best_face.as_ref().map_or(true, |(_, b)| fc.value < b.value) {
                best_face = Some((apex, fc));
            }
        }
        set(
            &mut entries,
            BoundId::IdealApexVertexCone,
            None,
            best_vertex.unwrap(),
        );
        let (face_apex, face_value) = best_face.unwrap();
        set(&mut entries, BoundId::IdealApexFaceCone, None, face_value);
        if face_cone_degenerate(p, face_apex) {
            entries
                .iter_mut()
                .find(|e| e.id == BoundId::IdealApexFaceCone)
                .unwrap()
                .reason = Some("degenerate-projection unverified".to_string());
        }
    } else {
        for id in [
            BoundId::IdealLowerAtkinson,
            BoundId::IdealUpperAtkinson,
            BoundId::IdealUpperAtLeast9,
            BoundId::IdealUpperAbove24,
            BoundId::IdealUpperKGonal,
            BoundId::IdealUpperQuadTriOnly,
            BoundId::IdealApexVertexCone,
            BoundId::IdealApexFaceCone,
        ] {
            skip(&mut entries, id, "polytope is not all-ideal");
        }
    }

    if is_compact {
        for (id, k, value) in compact_bounds(v, max_k)? {
            let param = if id == BoundId::CompactUpperKGonal {
                Some(k)
            } else {
                None
            };
            set(&mut entries, id, param, value);
        }
        if v < 24 {
            skip(&mut entries, BoundId::CompactUpperAtLeast24, "requires V >= 24");
        }
        if v <= 80 {
            skip(&mut entries, BoundId::CompactUpperAbove80, "requires V > 80");
        }
        if let Some((faces, ks)) = best_face_triple(p) {
            let value = face_triple_bound(v, ks[0], ks[1], ks[2])?;
            let e = entries
                .iter_mut()
                .find(|e| e.id == BoundId::CompactUpperFaceTriple)
                .unwrap();
            e.applicable = true;
            e.value = Some(value);
            e.reason = Some(format!(
                "faces ({}, {}, {}) of degrees ({}, {}, {})",
                faces[0], faces[1], faces[2], ks[0], ks[1], ks[2]
            ));
        }
    } else {
        for id in [
            BoundId::CompactLowerAtkinson,
            BoundId::CompactUpperAtkinson,
            BoundId::CompactUpperAtLeast24,
            BoundId::CompactUpperAbove80,
            BoundId::CompactUpperKGonal,
            BoundId::CompactUpperFaceTriple,
        ] {
            skip(&mut entries, id, "polytope is not all-finite");
        }
    }

    // The mixed-kind bounds hold for any finite-volume right-angled
    // polyhedron, with either count possibly zero.
    for (id, _, value) in mixed_bounds(v_inf, v_f)? {
        set(&mut entries, id, None, value);
    }
    if v_inf + v_f <= 15 {
        skip(
            &mut entries,
            BoundId::MixedUpperAbove15,
            "requires V_inf + V_F > 15",
        );
    }

    // Several bounds coincide exactly at sharp cases (the octahedron makes
    // three of them equal v8), where float noise in different evaluation
    // routes would make the winner arbitrary. Ties within the margin go to
    // declaration order; genuine gaps between distinct bounds are >= 1e-3.
    const TIE_MARGIN: f64 = 1e-9;
    let mut best_upper: Option<(BoundId, ErrBoundedValue)> = None;
    let mut best_lower: Option<(BoundId, ErrBoundedValue)> = None;
    for e in &entries {
        let (Some(value), true) = (e.value, e.applicable) else {
            continue;
        };
        if e.id.is_upper() {
            if best_upper
                .as_ref()
                .map_or(true, |(_, b)| value.value < b.value - TIE_MARGIN)
            {
                best_upper = Some((e.id, value));
            }
        } else if best_lower
            .as_ref()
            .map_or(true, |(_, b)| value.value > b.value + TIE_MARGIN)
        {
            best_lower = Some((e.id, value));
        }
    }

    Ok(BoundReport {
        class,
        entries,
        best_upper,
        best_lower,
    })
}
