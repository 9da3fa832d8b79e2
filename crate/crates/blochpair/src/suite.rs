//! Runtime verification checks over the whole crate: catalog counts, the
//! group-sum identity, eigen-equations, frame bijections, rotation/oracle
//! agreement, rendering determinism and file round-trips.
//!
//! Each check returns `Ok(())` or a message naming the first failure, so
//! the CLI can print one line per check and exit nonzero on any failure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{
    enumerate_catalog, enumerate_groups, gate_path, state_id_of, StabilizerState,
};
use crate::catalog_io;
use crate::frame::{
    apply_local_rotation, axis_lock_of, fixed_axis_pairs, frame_from_group, frame_rotation_of,
    group_from_frame, permute_frame, Alignment, AxisPermutation, FrameRep, SignedAxis,
};
use crate::group::{StabilizerGroup, StateClass, STANDARD_GATES};
use crate::oracle::{
    apply_unitary_quarter, density_from_group, density_from_ket, identity_matrix, ket_from_density,
    mat_mul, reduced_density_qubit1, stabilizer_of_ket, stabilizes, ExactDensity, ExactKet,
};
use crate::pauli::{Gaussian, PauliOp, Sign};
use crate::render::{render_svg, SceneSpec};

pub type CheckResult = Result<(), String>;

fn ensure(condition: bool, message: impl FnOnce() -> String) -> CheckResult {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn op(text: &str) -> PauliOp {
    text.parse().expect("fixture Pauli parses")
}

fn fixture_group(g1: &str, g2: &str) -> StabilizerGroup {
    StabilizerGroup::from_generators(op(g1), op(g2)).expect("fixture group is valid")
}

fn ket(amplitudes: [(i64, i64); 4]) -> ExactKet {
    ExactKet::from_ints(amplitudes).expect("fixture ket is nonzero")
}

/// 60 states total: 36 separable, 24 maximally entangled.
pub fn catalog_counts() -> CheckResult {
    let catalog = enumerate_catalog();
    let separable = catalog
        .iter()
        .filter(|s| s.class == StateClass::Separable)
        .count();
    ensure(catalog.len() == 60, || {
        format!("expected 60 states, found {}", catalog.len())
    })?;
    ensure(separable == 36, || {
        format!("expected 36 separable states, found {separable}")
    })?;
    ensure(catalog.len() - separable == 24, || {
        format!(
            "expected 24 entangled states, found {}",
            catalog.len() - separable
        )
    })
}

/// The group sum divided by four equals the ket projector, exactly.
pub fn group_sum_identity() -> CheckResult {
    for state in enumerate_catalog() {
        let from_group = density_from_group(&state.group);
        let from_ket = density_from_ket(&state.ket);
        ensure(from_group == from_ket, || {
            format!("state {}: group sum and ket projector differ", state.id)
        })?;
    }
    Ok(())
}

/// Every member fixes the ket; all 27 signed non-members fail to.
pub fn eigen_equations() -> CheckResult {
    for state in enumerate_catalog() {
        for member in state.group.members() {
            ensure(stabilizes(*member, &state.ket), || {
                format!("state {}: member {member} does not fix the ket", state.id)
            })?;
        }
        let mut non_members = 0;
        for candidate in PauliOp::signed_non_identity() {
            if state.group.contains(&candidate) {
                continue;
            }
            non_members += 1;
            ensure(!stabilizes(candidate, &state.ket), || {
                format!("state {}: non-member {candidate} fixes the ket", state.id)
            })?;
        }
        ensure(non_members == 27, || {
            format!(
                "state {}: expected 27 non-members, found {non_members}",
                state.id
            )
        })?;
    }
    Ok(())
}

/// Brute-force stabilizer search on the four named kets recovers their
/// known groups.
pub fn named_group_fixtures() -> CheckResult {
    let fixtures: [(&str, ExactKet, StabilizerGroup); 4] = [
        (
            "up-up",
            ket([(1, 0), (0, 0), (0, 0), (0, 0)]),
            fixture_group("+ZI", "+IZ"),
        ),
        (
            "up-left",
            ket([(1, 0), (-1, 0), (0, 0), (0, 0)]),
            fixture_group("+ZI", "-IX"),
        ),
        (
            "psi-minus",
            ket([(0, 0), (1, 0), (-1, 0), (0, 0)]),
            fixture_group("-ZZ", "-XX"),
        ),
        (
            "phi-plus-i",
            ket([(1, 0), (0, 0), (0, 0), (0, 1)]),
            fixture_group("+ZZ", "+XY"),
        ),
    ];
    for (name, ket, expected) in fixtures {
        let found = stabilizer_of_ket(&ket).map_err(|e| format!("{name}: {e}"))?;
        ensure(found == expected, || {
            format!("{name}: search found {found}, expected {expected}")
        })?;
    }
    Ok(())
}

fn quarter_rotation_density() -> ExactDensity {
    // (1/4)·[[1, i, -1, i], [-i, 1, i, 1], [-1, -i, 1, -i], [-i, 1, i, 1]]
    let e = |re: i64, im: i64| Gaussian::new(re, im);
    let entries = [
        [e(1, 0), e(0, 1), e(-1, 0), e(0, 1)],
        [e(0, -1), e(1, 0), e(0, 1), e(1, 0)],
        [e(-1, 0), e(0, -1), e(1, 0), e(0, -1)],
        [e(0, -1), e(1, 0), e(0, 1), e(1, 0)],
    ];
    ExactDensity::new(entries, 4).expect("fixture density is valid")
}

/// Cyclically permuting the singlet frame's second-sphere labels walks
/// through the known group, density and kets, exactly.
pub fn cyclic_permutation_pipeline() -> CheckResult {
    let singlet = fixture_group("-ZZ", "-XX");
    let cycle = AxisPermutation::forward_cycle();

    let once = permute_frame(&frame_from_group(&singlet), &cycle).map_err(|e| e.to_string())?;
    let group_once = group_from_frame(&once).map_err(|e| e.to_string())?;
    let expected_once = fixture_group("-ZY", "-YX");
    ensure(group_once == expected_once, || {
        format!("one cycle gave {group_once}, expected {expected_once}")
    })?;
    ensure(group_once.contains(&op("-XZ")), || {
        "one cycle is missing the -XZ member".to_string()
    })?;

    let density_once = density_from_group(&group_once);
    ensure(density_once == quarter_rotation_density(), || {
        "density after one cycle does not match the known matrix".to_string()
    })?;
    let ket_once = ket_from_density(&density_once).map_err(|e| e.to_string())?;
    let expected_ket_once = ket([(1, 0), (0, -1), (-1, 0), (0, -1)]);
    ensure(
        ket_once.amplitudes() == expected_ket_once.amplitudes() && ket_once.norm_sq() == 4,
        || format!("ket after one cycle is {ket_once}, expected {expected_ket_once}"),
    )?;

    let twice = permute_frame(&once, &cycle).map_err(|e| e.to_string())?;
    let group_twice = group_from_frame(&twice).map_err(|e| e.to_string())?;
    let ket_twice =
        ket_from_density(&density_from_group(&group_twice)).map_err(|e| e.to_string())?;
    let expected_ket_twice = ket([(1, 0), (-1, 0), (0, -1), (0, -1)]);
    ensure(
        ket_twice.amplitudes() == expected_ket_twice.amplitudes() && ket_twice.norm_sq() == 4,
        || format!("ket after two cycles is {ket_twice}, expected {expected_ket_twice}"),
    )?;

    let thrice = permute_frame(&twice, &cycle).map_err(|e| e.to_string())?;
    ensure(thrice == frame_from_group(&singlet), || {
        "three cycles should return to the singlet frame".to_string()
    })
}

/// One quarter turn generated by I⊗Y carries ∣↑↑⟩ to ∣↑←⟩, at group level
/// and at ket level.
pub fn quarter_turn_fixture() -> CheckResult {
    let start = fixture_group("+ZI", "+IZ");
    let rotated = start
        .apply_rotation(op("IY"), 1)
        .map_err(|e| e.to_string())?;
    let expected = fixture_group("+ZI", "-IX");
    ensure(rotated == expected, || {
        format!("rotation gave {rotated}, expected {expected}")
    })?;
    let moved = apply_unitary_quarter(op("IY"), &ket([(1, 0), (0, 0), (0, 0), (0, 0)]));
    let target = ket([(1, 0), (-1, 0), (0, 0), (0, 0)]);
    ensure(moved.projectively_equal(&target), || {
        format!("ket-level rotation gave {moved}, expected {target} projectively")
    })
}

/// Entangled frames are exactly the 24 determinant -1 signed permutations,
/// separable frames exactly the 36 arrow pairs, and frames invert back to
/// their groups.
pub fn frame_bijections() -> CheckResult {
    let catalog = enumerate_catalog();

    let mut entangled_frames: Vec<Alignment> = Vec::new();
    let mut separable_frames: Vec<(SignedAxis, SignedAxis)> = Vec::new();
    for state in &catalog {
        match &state.frame {
            FrameRep::Entangled { alignment } => entangled_frames.push(*alignment),
            FrameRep::Separable { arrow1, arrow2 } => separable_frames.push((*arrow1, *arrow2)),
        }
        let recovered = group_from_frame(&state.frame).map_err(|e| e.to_string())?;
        ensure(recovered == state.group, || {
            format!("state {}: frame does not invert to its group", state.id)
        })?;
    }

    entangled_frames.sort_by_key(|a| *a.entries());
    entangled_frames.dedup();
    let mut improper: Vec<Alignment> = Alignment::all_signed_permutations()
        .into_iter()
        .filter(|a| a.det() == -1)
        .collect();
    improper.sort_by_key(|a| *a.entries());
    ensure(entangled_frames == improper, || {
        format!(
            "entangled frames cover {} of the 24 determinant -1 alignments",
            entangled_frames.len()
        )
    })?;
    for alignment in Alignment::all_signed_permutations() {
        let frame = FrameRep::Entangled { alignment };
        let result = group_from_frame(&frame);
        if alignment.det() == -1 {
            let group = result.map_err(|e| e.to_string())?;
            ensure(state_id_of(&catalog, &group).is_some(), || {
                "an improper alignment produced a group outside the catalog".to_string()
            })?;
        } else {
            ensure(result.is_err(), || {
                "a determinant +1 alignment was accepted".to_string()
            })?;
        }
    }

    separable_frames.sort();
    separable_frames.dedup();
    ensure(separable_frames.len() == 36, || {
        format!(
            "separable frames cover {} of the 36 arrow pairs",
            separable_frames.len()
        )
    })
}

/// Group-level quarter turns agree with the dense ket evolution for every
/// state, every generator and every turn count.
pub fn rotation_matches_ket_oracle() -> CheckResult {
    let catalog = enumerate_catalog();
    for state in &catalog {
        for generator in PauliOp::positive_paulis() {
            let mut evolved = state.ket;
            for turns in 1..=3u32 {
                evolved = apply_unitary_quarter(generator, &evolved);
                let via_group = state
                    .group
                    .apply_rotation(generator, turns)
                    .map_err(|e| e.to_string())?;
                let via_ket = stabilizer_of_ket(&evolved).map_err(|e| {
                    format!(
                        "state {} generator {generator} turns {turns}: {e}",
                        state.id
                    )
                })?;
                ensure(via_group == via_ket, || {
                    format!(
                        "state {} generator {generator} turns {turns}: tableau {via_group} vs oracle {via_ket}",
                        state.id
                    )
                })?;
            }
        }
    }
    Ok(())
}

/// Every entangled frame is left-handed, and stays so under every gate.
pub fn handedness_preserved() -> CheckResult {
    let catalog = enumerate_catalog();
    for state in &catalog {
        if let FrameRep::Entangled { alignment } = &state.frame {
            ensure(alignment.det() == -1, || {
                format!("state {}: entangled frame has determinant +1", state.id)
            })?;
        }
        for gate in STANDARD_GATES {
            let image = state.group.apply_clifford(gate);
            if let FrameRep::Entangled { alignment } = frame_from_group(&image) {
                ensure(alignment.det() == -1, || {
                    format!(
                        "state {} after {gate}: entangled frame has determinant +1",
                        state.id
                    )
                })?;
            }
            // Single-sphere gates cannot change the entanglement class.
            if matches!(
                gate,
                crate::group::CliffordGate::Hadamard(_) | crate::group::CliffordGate::Phase(_)
            ) {
                ensure(image.classify() == state.class, || {
                    format!("state {}: local gate {gate} changed the class", state.id)
                })?;
            }
        }
    }
    Ok(())
}

/// The cyclic label permutation equals a composition of two sphere-2
/// quarter turns (an order-3 rotation of the axis cube), at group level.
pub fn cyclic_permutation_is_two_quarter_turns() -> CheckResult {
    let catalog = enumerate_catalog();
    let entangled: Vec<&StabilizerState> = catalog
        .iter()
        .filter(|s| s.class == StateClass::Entangled)
        .collect();
    let cycle = AxisPermutation::forward_cycle();
    let locals = [op("IX"), op("IY"), op("IZ")];

    let mut found = None;
    'search: for first in locals {
        for first_turns in 1..=3u32 {
            for second in locals {
                for second_turns in 1..=3u32 {
                    let compose = |g: &StabilizerGroup| {
                        g.apply_rotation(first, first_turns)
                            .and_then(|g| g.apply_rotation(second, second_turns))
                            .expect("valid turn counts")
                    };
                    let matches_cycle = entangled.iter().all(|state| {
                        let via_frame = permute_frame(&state.frame, &cycle)
                            .and_then(|f| group_from_frame(&f))
                            .expect("cycle keeps entangled frames valid");
                        compose(&state.group) == via_frame
                    });
                    if matches_cycle {
                        found = Some((first, first_turns, second, second_turns));
                        break 'search;
                    }
                }
            }
        }
    }
    let Some((first, first_turns, second, second_turns)) = found else {
        return Err(
            "no pair of sphere-2 quarter turns realizes the cyclic permutation".to_string(),
        );
    };
    let compose = |g: &StabilizerGroup| {
        g.apply_rotation(first, first_turns)
            .and_then(|g| g.apply_rotation(second, second_turns))
            .expect("valid turn counts")
    };
    for state in &entangled {
        let cubed = compose(&compose(&compose(&state.group)));
        ensure(cubed == state.group, || {
            format!(
                "composition {first}^{first_turns}, {second}^{second_turns} is not of order 3 on state {}",
                state.id
            )
        })?;
    }
    Ok(())
}

/// Rendering is a pure function, and the element counts distinguish the
/// two classes.
pub fn render_deterministic() -> CheckResult {
    for state in enumerate_catalog() {
        let scene = SceneSpec::new(state.frame);
        let first = render_svg(&scene);
        let second = render_svg(&scene);
        ensure(first == second, || {
            format!("state {}: rendering is not deterministic", state.id)
        })?;
        let arrows = first.matches("class=\"statevector-arrow\"").count();
        let dots = first.matches("class=\"center-dot\"").count();
        let expected = match state.class {
            StateClass::Separable => (2, 0),
            StateClass::Entangled => (0, 2),
        };
        ensure((arrows, dots) == expected, || {
            format!(
                "state {}: render has {arrows} arrows and {dots} dots for a {} state",
                state.id, state.class
            )
        })?;
    }
    Ok(())
}

/// The symplectic product, commutation and dense matrices agree with each
/// other over all canonical operator pairs.
pub fn pauli_algebra_consistent() -> CheckResult {
    let all = PauliOp::hermitian_canonical();
    for a in &all {
        for b in &all {
            let product = a.mul(b);
            let dense_product = mat_mul(&a.to_dense(), &b.to_dense());
            ensure(product.to_dense() == dense_product, || {
                format!("dense product of {a} and {b} disagrees with the symplectic product")
            })?;
            let dense_commutes = dense_product == mat_mul(&b.to_dense(), &a.to_dense());
            ensure(a.commutes_with(b) == dense_commutes, || {
                format!("commutation of {a} and {b} disagrees with the dense commutator")
            })?;
            if a.commutes_with(b) {
                ensure(product.is_hermitian(), || {
                    format!("product of commuting {a} and {b} is not Hermitian")
                })?;
            }
        }
    }
    ensure(PauliOp::IDENTITY.to_dense() == identity_matrix(), || {
        "identity operator does not map to the identity matrix".to_string()
    })
}

/// Structural invariants of every catalog group.
pub fn catalog_groups_valid() -> CheckResult {
    for state in enumerate_catalog() {
        let members = state.group.members();
        ensure(members[0] == PauliOp::IDENTITY, || {
            format!("state {}: identity is not the first member", state.id)
        })?;
        let mut distinct = members.to_vec();
        distinct.sort();
        distinct.dedup();
        ensure(distinct.len() == 4, || {
            format!("state {}: group does not have 4 distinct members", state.id)
        })?;
        for a in members {
            ensure(a.sign().is_some(), || {
                format!("state {}: member {a} is not sign-canonical", state.id)
            })?;
            ensure(!a.is_minus_identity(), || {
                format!("state {}: -I\u{2297}I is a member", state.id)
            })?;
            for b in members {
                ensure(a.commutes_with(b), || {
                    format!("state {}: members {a} and {b} anticommute", state.id)
                })?;
                ensure(state.group.contains(&a.mul(b)), || {
                    format!("state {}: group is not closed under {a}\u{b7}{b}", state.id)
                })?;
            }
        }
    }
    Ok(())
}

/// Every gate acts as a permutation of the catalog whose orbits cover it.
pub fn clifford_action_permutes_catalog() -> CheckResult {
    let catalog = enumerate_catalog();
    for gate in STANDARD_GATES {
        let mut image_ids = Vec::with_capacity(catalog.len());
        for state in &catalog {
            let image = state.group.apply_clifford(gate);
            let id = state_id_of(&catalog, &image)
                .ok_or_else(|| format!("{gate} leaves the catalog from state {}", state.id))?;
            image_ids.push(id);
        }
        let mut sorted = image_ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        ensure(sorted.len() == catalog.len(), || {
            format!("{gate} is not a bijection on the catalog")
        })?;
        // Orbit partition: following the permutation from every state visits
        // each state exactly once across all cycles.
        let mut visited = vec![false; catalog.len()];
        let mut covered = 0usize;
        for start in 0..catalog.len() {
            if visited[start] {
                continue;
            }
            let mut cursor = start;
            loop {
                ensure(!visited[cursor], || {
                    format!("{gate} orbits overlap at state {cursor}")
                })?;
                visited[cursor] = true;
                covered += 1;
                cursor = image_ids[cursor];
                if cursor == start {
                    break;
                }
            }
        }
        ensure(covered == catalog.len(), || {
            format!("{gate} orbits do not cover the catalog")
        })?;
    }
    Ok(())
}

/// A state is entangled exactly when its one-qubit reduced state is I/2.
pub fn classification_matches_reduced_density() -> CheckResult {
    for state in enumerate_catalog() {
        let reduced = reduced_density_qubit1(&density_from_group(&state.group));
        let mixed = reduced.is_maximally_mixed();
        let entangled = state.class == StateClass::Entangled;
        ensure(mixed == entangled, || {
            format!(
                "state {}: reduced state mixedness {mixed} does not match class {}",
                state.id, state.class
            )
        })?;
    }
    Ok(())
}

/// Two quarter turns equal one half turn, for every generator and state.
pub fn double_turn_composition() -> CheckResult {
    for state in enumerate_catalog() {
        for generator in PauliOp::positive_paulis() {
            let twice = state
                .group
                .apply_rotation(generator, 1)
                .and_then(|g| g.apply_rotation(generator, 1))
                .map_err(|e| e.to_string())?;
            let half_turn = state
                .group
                .apply_rotation(generator, 2)
                .map_err(|e| e.to_string())?;
            ensure(twice == half_turn, || {
                format!(
                    "state {} generator {generator}: two quarter turns differ from a half turn",
                    state.id
                )
            })?;
        }
    }
    Ok(())
}

/// Repeated enumeration yields the identical ordered catalog.
pub fn enumeration_deterministic() -> CheckResult {
    let first = enumerate_catalog();
    let second = enumerate_catalog();
    ensure(first == second, || {
        "two enumerations produced different catalogs".to_string()
    })
}

/// Group → density → ket → stabilizer search lands back on the group.
pub fn oracle_roundtrip() -> CheckResult {
    for state in enumerate_catalog() {
        let density = density_from_group(&state.group);
        let ket = ket_from_density(&density).map_err(|e| e.to_string())?;
        let recovered = stabilizer_of_ket(&ket).map_err(|e| e.to_string())?;
        ensure(recovered == state.group, || {
            format!("state {}: oracle round trip lost the group", state.id)
        })?;
    }
    Ok(())
}

/// Catalog densities are projectors (Hermiticity and unit trace hold by
/// construction).
pub fn density_projector_laws() -> CheckResult {
    for state in enumerate_catalog() {
        let density = density_from_group(&state.group);
        ensure(density.is_projector(), || {
            format!("state {}: density is not idempotent", state.id)
        })?;
    }
    Ok(())
}

/// Rotating the frame directly agrees with rotating the group and reading
/// the frame back, for all local generators, turn counts and states.
pub fn local_rotation_frame_consistency() -> CheckResult {
    let locals = [op("XI"), op("YI"), op("ZI"), op("IX"), op("IY"), op("IZ")];
    for state in enumerate_catalog() {
        for generator in locals {
            for turns in 1..=3u32 {
                let description = frame_rotation_of(generator, turns);
                let via_frame =
                    apply_local_rotation(&state.frame, &description).map_err(|e| e.to_string())?;
                let via_group = frame_from_group(
                    &state
                        .group
                        .apply_rotation(generator, turns)
                        .map_err(|e| e.to_string())?,
                );
                ensure(via_frame == via_group, || {
                    format!(
                        "state {} generator {generator} turns {turns}: frame-level rotation diverges",
                        state.id
                    )
                })?;
            }
        }
    }
    Ok(())
}

/// Rotating about any listed fixed axis (pair) leaves the state unchanged.
pub fn fixed_axis_locks_hold() -> CheckResult {
    for state in enumerate_catalog() {
        let locks = fixed_axis_pairs(&state.group);
        ensure(locks.len() == 3, || {
            format!(
                "state {}: expected 3 locks, found {}",
                state.id,
                locks.len()
            )
        })?;
        for member in state.group.non_identity_members() {
            let lock = axis_lock_of(&member);
            ensure(locks.contains(&lock), || {
                format!("state {}: member {member} has no listed lock", state.id)
            })?;
            let generator = match member.sign() {
                Some(Sign::Plus) => member,
                Some(Sign::Minus) => member.negated(),
                None => unreachable!("members are sign-canonical"),
            };
            for turns in 1..=3u32 {
                let rotated = state
                    .group
                    .apply_rotation(generator, turns)
                    .map_err(|e| e.to_string())?;
                ensure(rotated == state.group, || {
                    format!(
                        "state {}: rotation about {lock} (member {member}) moved the state",
                        state.id
                    )
                })?;
            }
        }
    }
    Ok(())
}

/// Quarter-turn rotations reach exactly the same 60 states as the Clifford
/// gates.
pub fn rotation_closure_matches_clifford_closure() -> CheckResult {
    let via_cliffords = enumerate_groups(|g| {
        STANDARD_GATES
            .iter()
            .map(|gate| g.apply_clifford(*gate))
            .collect()
    });
    let via_rotations = enumerate_groups(|g| {
        PauliOp::positive_paulis()
            .into_iter()
            .map(|p| g.apply_rotation(p, 1).expect("one quarter turn is valid"))
            .collect()
    });
    ensure(via_rotations.len() == via_cliffords.len(), || {
        format!(
            "rotation closure has {} states, Clifford closure {}",
            via_rotations.len(),
            via_cliffords.len()
        )
    })?;
    let mut a = via_cliffords;
    let mut b = via_rotations;
    a.sort_by_key(StabilizerGroup::sort_key);
    b.sort_by_key(StabilizerGroup::sort_key);
    ensure(a == b, || {
        "rotation closure and Clifford closure differ as sets".to_string()
    })
}

/// The catalog survives a write/read cycle on disk.
pub fn catalog_file_roundtrip() -> CheckResult {
    let catalog = enumerate_catalog();
    let dir = std::env::temp_dir();
    let path = dir.join(format!("blochpair-verify-{}.json", std::process::id()));
    let result = (|| -> CheckResult {
        catalog_io::write_catalog(&catalog, &path).map_err(|e| e.to_string())?;
        let restored = catalog_io::read_catalog(&path).map_err(|e| e.to_string())?;
        ensure(restored == catalog, || {
            "catalog changed across a file round trip".to_string()
        })
    })();
    let _ = std::fs::remove_file(&path);
    result
}

/// Shortest gate paths replay onto their targets for seeded random pairs.
pub fn path_replay(seed: u64, samples: usize) -> CheckResult {
    let catalog = enumerate_catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let from = &catalog[rng.gen_range(0..catalog.len())];
        let to = &catalog[rng.gen_range(0..catalog.len())];
        let path = gate_path(&from.group, &to.group);
        let mut cursor = from.group.clone();
        for gate in &path {
            cursor = cursor.apply_clifford(*gate);
        }
        ensure(cursor == to.group, || {
            format!(
                "path from {} to {} replays to the wrong state",
                from.id, to.id
            )
        })?;
    }
    Ok(())
}

/// Everything `blochpair verify` runs, in a stable order.
pub fn all_checks(seed: u64) -> Vec<(&'static str, CheckResult)> {
    vec![
        ("catalog-counts", catalog_counts()),
        ("group-sum-identity", group_sum_identity()),
        ("eigen-equations", eigen_equations()),
        ("named-group-fixtures", named_group_fixtures()),
        ("cyclic-permutation-pipeline", cyclic_permutation_pipeline()),
        ("quarter-turn-fixture", quarter_turn_fixture()),
        ("frame-bijections", frame_bijections()),
        ("rotation-matches-ket-oracle", rotation_matches_ket_oracle()),
        ("handedness-preserved", handedness_preserved()),
        (
            "cyclic-permutation-is-two-quarter-turns",
            cyclic_permutation_is_two_quarter_turns(),
        ),
        ("render-deterministic", render_deterministic()),
        ("pauli-algebra-consistent", pauli_algebra_consistent()),
        ("catalog-groups-valid", catalog_groups_valid()),
        (
            "clifford-action-permutes-catalog",
            clifford_action_permutes_catalog(),
        ),
        (
            "classification-matches-reduced-density",
            classification_matches_reduced_density(),
        ),
        ("double-turn-composition", double_turn_composition()),
        ("enumeration-deterministic", enumeration_deterministic()),
        ("oracle-roundtrip", oracle_roundtrip()),
        ("density-projector-laws", density_projector_laws()),
        (
            "local-rotation-frame-consistency",
            local_rotation_frame_consistency(),
        ),
        ("fixed-axis-locks-hold", fixed_axis_locks_hold()),
        (
            "rotation-closure-matches-clifford-closure",
            rotation_closure_matches_clifford_closure(),
        ),
        ("catalog-file-roundtrip", catalog_file_roundtrip()),
        ("path-replay", path_replay(seed, 100)),
    ]
}
