//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Every tolerance is pinned here; nothing is deferred to later
//! calibration. Run with `cargo test --test acceptance` (add
//! `-- --nocapture` to see the per-criterion lines).

mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6, PI};

use orthovol::andreev::{classify, AndreevWitness, RealizabilityClass};
use orthovol::bounds::{self, BoundId};
use orthovol::catalog::{self, Suite};
use orthovol::harness::{self, ClaimId, Verdict};
use orthovol::lobachevsky::{lobachevsky, v3, v8, Angle};
use orthovol::polytope::CombinatorialPolytope;
use orthovol::surgery;
use orthovol::volumes;
use orthovol::{format, report};

fn lob(x: f64) -> orthovol::ErrBoundedValue {
    lobachevsky(Angle::new(x).unwrap())
}

fn pass(n: u32, label: &str) {
    println!("acceptance {n:>2} {label:<42} PASS");
}

#[test]
fn c01_volume_constants_match_quoted_digits() {
    let v8 = v8();
    assert!(
        (v8.value - 3.663862).abs() < 5e-7,
        "octahedron constant {} vs quoted 3.663862",
        v8.value
    );
    // The quoted 1.014941 truncates 1.0149416064..., so the rounding-style
    // 5e-7 window cannot contain the true value; assert the truncation
    // semantics plus a far tighter pin against an independent evaluation.
    let v3 = v3();
    assert_eq!((v3.value * 1e6).floor(), 1014941.0);
    assert!((v3.value - 1.014941).abs() < 1e-6);
    assert!((v3.value - 1.0149416064096536).abs() < 1e-13);
    assert!((v8.value - 3.6638623767088760).abs() < 1e-13);
    pass(1, "volume constants match quoted digits");
}

#[test]
fn c02_tetrahedron_constant_identity() {
    let diff = v3() - lob(FRAC_PI_6).scale(2.0);
    assert!(diff.value.abs() <= 1e-11, "v3 - 2Λ(π/6) = {}", diff.value);
    pass(2, "tetrahedron constant identity");
}

#[test]
fn c03_lobachevsky_self_tests() {
    // Oddness.
    for x in common::samples(11, 1000, -8.0, 8.0) {
        let a = lob(x);
        let b = lob(-x);
        assert!(
            (a.value + b.value).abs() <= a.abs_err + b.abs_err,
            "oddness at {x}"
        );
    }
    // π-periodicity.
    for x in common::samples(13, 1000, -4.0, 4.0) {
        let a = lob(x);
        let b = lob(x + PI);
        assert!(
            (a.value - b.value).abs() <= a.abs_err + b.abs_err,
            "periodicity at {x}"
        );
    }
    // Duplication: Λ(2x) = 2Λ(x) + 2Λ(x + π/2).
    for x in common::samples(17, 1000, 1e-6, FRAC_PI_2) {
        let lhs = lob(2.0 * x);
        let a = lob(x);
        let b = lob(x + FRAC_PI_2);
        let resid = lhs.value - 2.0 * a.value - 2.0 * b.value;
        let budget = lhs.abs_err + 2.0 * a.abs_err + 2.0 * b.abs_err;
        assert!(resid.abs() <= budget, "duplication at {x}: {resid}");
        assert!(
            resid.abs() <= 4.0 * lhs.abs_err.max(a.abs_err).max(b.abs_err),
            "duplication margin at {x}"
        );
    }
    // Concavity on [0, π/2].
    let xs = common::samples(19, 1000, 0.0, FRAC_PI_2);
    let ys = common::samples(23, 1000, 0.0, FRAC_PI_2);
    for (x, y) in xs.iter().zip(&ys) {
        let (a, b) = (x.min(*y), x.max(*y));
        if a == b {
            continue;
        }
        let mid = lob(0.5 * (a + b));
        let la = lob(a);
        let lb = lob(b);
        let tol = mid.abs_err + 0.5 * (la.abs_err + lb.abs_err) + 1e-12;
        assert!(
            mid.value >= 0.5 * (la.value + lb.value) - tol,
            "concavity at ({a}, {b})"
        );
    }
    // Cross-check against the independent quadrature of the defining
    // integral.
    for i in 1..=100 {
        let x = FRAC_PI_2 * (i as f64) / 100.0;
        let series = lob(x).value;
        let quad = common::lobachevsky_quadrature(x);
        assert!(
            (series - quad).abs() <= 1e-9,
            "quadrature at {x}: {series} vs {quad}"
        );
    }
    // Maximum at π/6.
    let peak = lob(FRAC_PI_6);
    for x in common::samples(29, 1000, 0.0, FRAC_PI_2) {
        let l = lob(x);
        assert!(
            peak.value >= l.value - 2.0 * l.abs_err.max(peak.abs_err),
            "maximum at π/6 vs {x}"
        );
    }
    pass(3, "oddness/periodicity/duplication/concavity");
}

#[test]
fn c04_family_volumes() {
    let a3 = volumes::vol_antiprism(3).unwrap();
    let diff = a3 - v8();
    assert!(diff.value.abs() <= 1e-10, "Vol(A(3)) - v8 = {}", diff.value);
    let a4 = volumes::vol_antiprism(4).unwrap();
    assert!(
        (a4.value - 6.023046).abs() < 5e-7,
        "Vol(A(4)) = {}",
        a4.value
    );
    pass(4, "closed-form family volumes");
}

#[test]
fn c05_sharpness_at_small_vertex_counts() {
    let (lower, upper) = bounds::ideal_atkinson(6).unwrap();
    assert!((lower.value - v8().value).abs() <= 1e-9);
    assert!((upper.value - v8().value).abs() <= 1e-9);

    let at9 = bounds::ideal_upper_at_least_9(9).unwrap();
    assert!((at9.value - 2.0 * v8().value).abs() <= 1e-9);

    // The double of the octahedron along a face realizes V = 9 and has
    // twice the octahedron volume.
    let a3 = catalog::antiprism(3).unwrap();
    let double = surgery::double_along_face(&a3, 0).unwrap();
    assert_eq!(double.vertex_count(), 9);
    assert_eq!(classify(&double), RealizabilityClass::IdealRA);
    let double_volume = volumes::vol_antiprism(3).unwrap().scale(2.0);
    assert!(
        (at9.value - double_volume.value).abs() <= at9.abs_err + double_volume.abs_err + 1e-9
    );
    pass(5, "sharp bounds at V = 6 and V = 9");
}

#[test]
fn c06_antiprism_four_apex_bound() {
    // The vertex-cone bound at any apex of A(4) is exactly 14Λ(π/4), as a
    // formula instance, and dominates the true volume.
    let a4 = catalog::antiprism(4).unwrap();
    let fourteen = lob(FRAC_PI_4).scale(14.0);
    let best_vertex_cone = (0..a4.vertex_count())
        .map(|apex| bounds::apex_vertex_bound(&a4, apex).unwrap())
        .min_by(|a, b| a.value.total_cmp(&b.value))
        .unwrap();
    assert_eq!(best_vertex_cone.value, fourteen.value);
    let in_report = bounds::bound_report(&a4).unwrap();
    let entry = in_report.entry(BoundId::IdealApexVertexCone);
    assert_eq!(entry.value.unwrap().value, fourteen.value);
    let vol = volumes::vol_antiprism(4).unwrap();
    assert!(vol.le_within(&fourteen));
    pass(6, "apex vertex-cone bound on A(4)");
}

#[test]
fn c07_classification_sweep() {
    assert_eq!(
        classify(&catalog::tetrahedron()),
        RealizabilityClass::NotRealizable(AndreevWitness::Tetrahedron)
    );
    assert_eq!(
        classify(&catalog::triangular_prism()),
        RealizabilityClass::NotRealizable(AndreevWitness::TriangularPrism)
    );
    match classify(&catalog::cube()) {
        RealizabilityClass::NotRealizable(w @ AndreevWitness::PrismaticFourCircuit { .. }) => {
            assert!(w.recheck(&catalog::cube()));
        }
        other => panic!("cube should fail on a prismatic 4-circuit, got {other:?}"),
    }
    for n in 3..=50 {
        let a = catalog::antiprism(n).unwrap();
        assert_eq!(classify(&a), RealizabilityClass::IdealRA, "A({n})");
    }
    for n in 5..=50 {
        let l = catalog::loebell(n).unwrap();
        assert_eq!(classify(&l), RealizabilityClass::CompactRA, "L({n})");
    }
    // Every compact entry, doubles included, avoids 3- and 4-gonal faces.
    for entry in catalog::compact_catalog() {
        let pr = entry.polytope.profile();
        assert_eq!(pr.count(3), 0, "{}", entry.name());
        assert_eq!(pr.count(4), 0, "{}", entry.name());
        assert_eq!(
            classify(&entry.polytope),
            RealizabilityClass::CompactRA,
            "{}",
            entry.name()
        );
    }
    pass(7, "classification sweep");
}

#[test]
fn c08_exact_averaging_identities() {
    let entries = catalog::default_catalog(Suite::All);
    let results = harness::run_claims(&entries, "all");
    let mut ideal_holds = 0;
    let mut compact_holds = 0;
    let mut neighbour_holds = 0;
    for r in &results {
        match r.claim {
            ClaimId::QuasiAdjacentAverage => {
                assert_ne!(r.verdict, Verdict::Fails, "{}", r.line());
                if r.verdict == Verdict::Holds {
                    ideal_holds += 1;
                }
            }
            ClaimId::EdgeQuasiIncidentAverage => {
                assert_ne!(r.verdict, Verdict::Fails, "{}", r.line());
                if r.verdict == Verdict::Holds {
                    compact_holds += 1;
                }
            }
            ClaimId::FaceNeighbourAverage => {
                assert_eq!(r.verdict, Verdict::Holds, "{}", r.line());
                neighbour_holds += 1;
            }
            _ => {}
        }
    }
    // Every ideal entry checks the quasi-adjacency identity, every compact
    // entry the edge identity, and every entry the neighbour identity.
    let ideal_count = entries
        .iter()
        .filter(|e| e.polytope.is_all_ideal())
        .count();
    let compact_count = entries
        .iter()
        .filter(|e| e.polytope.is_all_finite())
        .count();
    assert_eq!(ideal_holds, ideal_count);
    assert_eq!(compact_holds, compact_count);
    assert_eq!(neighbour_holds, entries.len());
    pass(8, "exact averaging identities");
}

#[test]
fn c09_existence_claims_zero_failures() {
    let entries = catalog::default_catalog(Suite::All);
    let results = harness::run_claims(&entries, "all");
    for r in &results {
        assert_ne!(r.verdict, Verdict::Fails, "{}", r.line());
    }
    let holds = |claim: ClaimId, subject: &str| {
        results
            .iter()
            .find(|r| r.claim == claim && r.subject == subject)
            .map(|r| r.verdict == Verdict::Holds)
            .unwrap_or(false)
    };
    // Quasi-adjacency existence on every ideal entry beyond 24 vertices.
    for entry in &entries {
        if entry.polytope.is_all_ideal() && entry.polytope.vertex_count() > 24 {
            assert!(
                holds(ClaimId::QuasiAdjacentFour, entry.name()),
                "{} should certify a 4-quasi-adjacent vertex",
                entry.name()
            );
        }
    }
    // Triangle-free vertex on the deepest chain entry.
    assert!(holds(ClaimId::TriangleFreeVertex, "octa-chain-5"));
    // Fat edges on the large Loebell polytopes.
    for n in 21..=50 {
        assert!(holds(ClaimId::FatEdge, &format!("L({n})")), "L({n})");
    }
    // The neighbour-count claims certify positively somewhere.
    for claim in [
        ClaimId::SixNeighbourFace,
        ClaimId::FiveSixNeighbourFaces,
        ClaimId::SevenNeighbourFace,
        ClaimId::NonIdealTriangleN6,
    ] {
        assert!(
            results
                .iter()
                .any(|r| r.claim == claim && r.verdict == Verdict::Holds),
            "{claim} never holds"
        );
    }
    pass(9, "existence claims, zero failures");
}

#[test]
fn c10_doubling_contracts_exhaustive() {
    let entries = catalog::default_catalog(Suite::All);
    for entry in &entries {
        let p = &entry.polytope;
        assert!(classify(p).is_realizable(), "{}", entry.name());
        let before = p.profile().clone();
        for f in 0..p.face_count() {
            let (k_inf, k_f) = surgery::face_vertex_split(p, f).unwrap();
            let d = surgery::double_along_face_unchecked(p, f)
                .unwrap_or_else(|e| panic!("{} face {f}: {e}", entry.name()));
            let after = d.profile();
            assert_eq!(after.v_inf, 2 * before.v_inf - k_inf, "{} f{f}", entry.name());
            assert_eq!(after.v_f, 2 * before.v_f - 2 * k_f, "{} f{f}", entry.name());
            assert!(
                classify(&d).is_realizable(),
                "double of {} along {f} lost realizability",
                entry.name()
            );
        }
    }
    // The octahedron chain: V = 6, 9, 15, 27, 51, 99 with only {3,4} faces.
    let chain = catalog::octa_double_chain(5).unwrap();
    let vs: Vec<usize> = chain.iter().map(|p| p.vertex_count()).collect();
    assert_eq!(vs, vec![6, 9, 15, 27, 51, 99]);
    for p in &chain {
        assert!(p.profile().only_34_faces());
        assert!(p.is_all_ideal());
    }
    pass(10, "doubling contracts, exhaustive over faces");
}

#[test]
fn c11_bound_soundness_and_ordering_gaps() {
    // Closed-form volumes stay inside the best bound bracket on both
    // families.
    for suite in [Suite::Ideal, Suite::Compact] {
        let entries = catalog::default_catalog(suite);
        for entry in &entries {
            if entry.known_volume.is_none() {
                continue;
            }
            let r = harness::verify_bound_soundness(entry);
            assert_eq!(r.verdict, Verdict::Holds, "{}", r.line());
        }
    }
    // Chains of refinements shrink by fixed steps.
    for v in [26u64, 30, 50, 99] {
        let (_, atkinson) = bounds::ideal_atkinson(v).unwrap();
        let at9 = bounds::ideal_upper_at_least_9(v).unwrap();
        let above24 = bounds::ideal_upper_refinements(v, 3, false)
            .into_iter()
            .find(|(id, _, _)| *id == BoundId::IdealUpperAbove24)
            .unwrap()
            .2;
        assert!(((atkinson.value - at9.value) - 0.5 * v8().value).abs() <= 1e-9);
        assert!(((at9.value - above24.value) - 0.5 * v8().value).abs() <= 1e-9);
    }
    for v in [84u64, 100, 200] {
        let rows = bounds::compact_bounds(v, 5).unwrap();
        let get = |id: BoundId| {
            rows.iter()
                .find(|(i, _, _)| *i == id)
                .map(|(_, _, value)| value.value)
                .unwrap()
        };
        let atkinson = get(BoundId::CompactUpperAtkinson);
        let at24 = get(BoundId::CompactUpperAtLeast24);
        let above80 = get(BoundId::CompactUpperAbove80);
        assert!(((atkinson - at24) - 2.5 * v3().value).abs() <= 1e-9);
        assert!(((at24 - above80) - 1.25 * v3().value).abs() <= 1e-9);
    }
    for (v_inf, v_f) in [(10u64, 8u64), (16, 0), (0, 20), (9, 9)] {
        let rows = bounds::mixed_bounds(v_inf, v_f).unwrap();
        let atkinson = rows
            .iter()
            .find(|(i, _, _)| *i == BoundId::MixedUpperAtkinson)
            .unwrap()
            .2
            .value;
        let refined = rows
            .iter()
            .find(|(i, _, _)| *i == BoundId::MixedUpperAbove15)
            .unwrap()
            .2
            .value;
        let gap = 0.5 * v8().value + 2.5 * v3().value;
        assert!(((atkinson - refined) - gap).abs() <= 1e-9);
    }
    pass(11, "bound soundness and ordering gaps");
}

#[test]
fn c12_doubling_deficit_series() {
    // With two ideal and two finite vertices glued at every stage the
    // deficits sum to (v8 + 5v3/2)(1 - 2^{-n}).
    for n in 1..=30 {
        let mut total = orthovol::ErrBoundedValue::exact(0.0);
        for i in 1..=n {
            total = total + surgery::doubling_series_term(i, 2, 2);
        }
        let closed = (v8() + v3().scale(2.5)).scale(1.0 - 2f64.powi(-(n as i32)));
        assert!(
            (total.value - closed.value).abs() <= 1e-9,
            "n = {n}: {} vs {}",
            total.value,
            closed.value
        );
    }
    pass(12, "doubling deficit series");
}

#[test]
fn c13_cli_round_trip_and_deterministic_report() {
    // Round-trip: parsing a serialized polytope reproduces its canonical
    // form, for every generated entry.
    for entry in catalog::default_catalog(Suite::All) {
        let p = &entry.polytope;
        let raw = CombinatorialPolytope::new(p.name().to_string(), p.faces().to_vec());
        let text = format::serialize(&raw);
        let back = format::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", entry.name()));
        assert_eq!(back, format::canonicalize(&raw), "{}", entry.name());
    }
    // Report regeneration is byte-identical, both in-process and through
    // two runs of the binary.
    let entries = catalog::default_catalog(Suite::All);
    assert_eq!(report::report_csv(&entries), report::report_csv(&entries));

    let dir = std::env::temp_dir().join("orthovol-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let out1 = dir.join("report1.csv");
    let out2 = dir.join("report2.csv");
    for out in [&out1, &out2] {
        let status = std::process::Command::new(env!("CARGO_BIN_EXE_orthovol"))
            .args(["report", "-o"])
            .arg(out)
            .status()
            .expect("spawn report");
        assert!(status.success());
    }
    let bytes1 = std::fs::read(&out1).unwrap();
    let bytes2 = std::fs::read(&out2).unwrap();
    assert!(!bytes1.is_empty());
    assert_eq!(bytes1, bytes2, "report bytes differ across runs");
    pass(13, "round-trip and deterministic report");
}
