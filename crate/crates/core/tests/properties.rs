mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn run(check: common::Check, seed: u64) -> Result<(), TestCaseError> {
    check(&mut ChaCha8Rng::seed_from_u64(seed)).map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reflection_closure(seed in any::<u64>()) {
        run(common::reflection_closure, seed)?;
    }

    #[test]
    fn generate_of_positive_basis(seed in any::<u64>()) {
        run(common::generate_basis_identity, seed)?;
    }

    #[test]
    fn rebase_has_one_noncompact_per_component(seed in any::<u64>()) {
        run(common::rebase_one_noncompact, seed)?;
    }

    #[test]
    fn dominate_laws(seed in any::<u64>()) {
        run(common::dominate_properties, seed)?;
    }

    #[test]
    fn diagram_coroot_round_trip(seed in any::<u64>()) {
        run(common::psi_round_trip, seed)?;
    }

    #[test]
    fn diagram_reflection_agrees_with_roots(seed in any::<u64>()) {
        run(common::diagram_reflection_matches_roots, seed)?;
    }

    #[test]
    fn weyl_witnesses_are_sound(seed in any::<u64>()) {
        run(common::weyl_witness_soundness, seed)?;
    }
}
