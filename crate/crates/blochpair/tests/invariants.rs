//! Module-level invariants exercised over the full catalog, one test per
//! check in the runtime verification suite.

use blochpair::suite;

fn check(name: &str, result: Result<(), String>) {
    if let Err(e) = result {
        panic!("{name}: {e}");
    }
}

#[test]
fn pauli_algebra_is_internally_consistent() {
    check("pauli-algebra", suite::pauli_algebra_consistent());
}

#[test]
fn catalog_groups_satisfy_group_laws() {
    check("catalog-groups", suite::catalog_groups_valid());
}

#[test]
fn clifford_gates_permute_the_catalog() {
    check(
        "clifford-permutation",
        suite::clifford_action_permutes_catalog(),
    );
}

#[test]
fn classification_agrees_with_reduced_density() {
    check(
        "classification-reduced-density",
        suite::classification_matches_reduced_density(),
    );
}

#[test]
fn two_quarter_turns_compose_into_a_half_turn() {
    check("double-turn", suite::double_turn_composition());
}

#[test]
fn enumeration_is_deterministic() {
    check(
        "enumeration-determinism",
        suite::enumeration_deterministic(),
    );
}

#[test]
fn group_density_ket_roundtrip_is_lossless() {
    check("oracle-roundtrip", suite::oracle_roundtrip());
}

#[test]
fn catalog_densities_are_projectors() {
    check("projector-laws", suite::density_projector_laws());
}

#[test]
fn frame_level_rotations_match_group_level() {
    check(
        "local-rotation-consistency",
        suite::local_rotation_frame_consistency(),
    );
}

#[test]
fn fixed_axis_locks_leave_states_unchanged() {
    check("fixed-axis-locks", suite::fixed_axis_locks_hold());
}

#[test]
fn rotations_and_cliffords_reach_the_same_states() {
    check(
        "rotation-closure",
        suite::rotation_closure_matches_clifford_closure(),
    );
}

#[test]
fn catalog_files_roundtrip() {
    check("catalog-file-roundtrip", suite::catalog_file_roundtrip());
}

#[test]
fn random_gate_paths_replay_onto_their_targets() {
    check("path-replay", suite::path_replay(20260809, 100));
}

#[test]
fn rendering_is_deterministic_for_every_state() {
    check("render-determinism", suite::render_deterministic());
}
