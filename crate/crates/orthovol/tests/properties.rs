//! Property tests for representation invariance and the doubling contracts.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orthovol::catalog;
use orthovol::format;
use orthovol::polytope::CombinatorialPolytope;
use orthovol::surgery;

// Rotate and optionally reverse each face cycle, then shuffle the face
// order: a different representation of the same combinatorial polytope.
fn scramble(p: &CombinatorialPolytope, seed: u64) -> CombinatorialPolytope {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<Vec<usize>> = p
        .faces
        .iter()
        .map(|face| {
            let k = face.len();
            let shift = rng.gen_range(0..k);
            let mut cycle: Vec<usize> = (0..k).map(|i| face[(i + shift) % k]).collect();
            if rng.gen_bool(0.5) {
                cycle.reverse();
            }
            cycle
        })
        .collect();
    faces.shuffle(&mut rng);
    CombinatorialPolytope::new(p.name.clone(), faces)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_representation_invariant(n in 3usize..16, seed in any::<u64>()) {
        let p = catalog::antiprism(n).unwrap();
        let raw = CombinatorialPolytope::new(p.name().to_string(), p.faces().to_vec());
        let scrambled = scramble(&raw, seed);
        prop_assert_eq!(format::canonicalize(&raw), format::canonicalize(&scrambled));
        prop_assert_eq!(
            format::parse(&format::serialize(&scrambled)).unwrap(),
            format::canonicalize(&raw)
        );
    }

    #[test]
    fn doubling_contracts_on_random_faces(ideal in any::<bool>(), n in 5usize..24, pick in any::<u64>()) {
        let p = if ideal {
            catalog::antiprism(n).unwrap()
        } else {
            catalog::loebell(n).unwrap()
        };
        let f = (pick as usize) % p.face_count();
        let (k_inf, k_f) = surgery::face_vertex_split(&p, f).unwrap();
        let d = surgery::double_along_face(&p, f).unwrap();
        let before = p.profile();
        let after = d.profile();
        prop_assert_eq!(after.v_inf, 2 * before.v_inf - k_inf);
        prop_assert_eq!(after.v_f, 2 * before.v_f - 2 * k_f);
        // Doubling preserves vertex-kind purity.
        prop_assert_eq!(p.is_all_ideal(), d.is_all_ideal());
        prop_assert_eq!(p.is_all_finite(), d.is_all_finite());
        // Serialized doubles still round-trip.
        let raw = CombinatorialPolytope::new(d.name().to_string(), d.faces().to_vec());
        prop_assert_eq!(
            format::parse(&format::serialize(&raw)).unwrap(),
            format::canonicalize(&raw)
        );
    }
}
