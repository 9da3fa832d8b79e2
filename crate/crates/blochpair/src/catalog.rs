//! Enumeration of the full state catalog and gate-path search over it.
//!
//! Breadth-first search from the ∣↑↑⟩ group under the six generating gates,
//! deduplicating on canonical generator pairs. Layers are emitted in BFS
//! order with a lexicographic tie-break inside each layer, so repeated runs
//! produce the identical ordered catalog: 60 states, 36 separable and 24
//! maximally entangled.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::frame::{frame_from_group, FrameRep};
use crate::group::{CliffordGate, StabilizerGroup, StateClass, STANDARD_GATES};
use crate::oracle::{density_from_group, ket_from_density, ExactKet};
use crate::pauli::{PauliLetter, PauliOp, Sign};

/// One catalog entry: every view of the same state, mutually consistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerState {
    pub id: usize,
    pub group: StabilizerGroup,
    pub class: StateClass,
    pub ket: ExactKet,
    pub frame: FrameRep,
}

/// The group of ∣↑↑⟩, the enumeration root.
pub fn initial_group() -> StabilizerGroup {
    StabilizerGroup::from_generators(
        PauliOp::from_letters(Sign::Plus, PauliLetter::Z, PauliLetter::I),
        PauliOp::from_letters(Sign::Plus, PauliLetter::I, PauliLetter::Z),
    )
    .expect("the computational-basis group is valid")
}

/// Deterministic list of all two-qubit stabilizer states.
pub fn enumerate_catalog() -> Vec<StabilizerState> {
    let groups = enumerate_groups(|g| {
        STANDARD_GATES
            .iter()
            .map(|gate| g.apply_clifford(*gate))
            .collect()
    });
    groups
        .into_iter()
        .enumerate()
        .map(|(id, group)| {
            let class = group.classify();
            let density = density_from_group(&group);
            let ket =
                ket_from_density(&density).expect("group-sum densities are rank-1 projectors");
            let frame = frame_from_group(&group);
            StabilizerState {
                id,
                group,
                class,
                ket,
                frame,
            }
        })
        .collect()
}

/// BFS closure of the initial group under an arbitrary move set, in
/// deterministic layer order.
pub fn enumerate_groups<F>(moves: F) -> Vec<StabilizerGroup>
where
    F: Fn(&StabilizerGroup) -> Vec<StabilizerGroup>,
{
    let root = initial_group();
    let mut seen: HashSet<StabilizerGroup> = HashSet::new();
    seen.insert(root.clone());
    let mut ordered = vec![root.clone()];
    let mut frontier = vec![root];
    while !frontier.is_empty() {
        let mut next: Vec<StabilizerGroup> = Vec::new();
        for group in &frontier {
            for image in moves(group) {
                if seen.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        next.sort_by_key(StabilizerGroup::sort_key);
        ordered.extend(next.iter().cloned());
        frontier = next;
    }
    ordered
}

/// Catalog index of a group, independent of its generator presentation.
pub fn state_id_of(catalog: &[StabilizerState], group: &StabilizerGroup) -> Option<usize> {
    let canonical = group.canonicalize();
    catalog.iter().position(|s| s.group == canonical)
}

/// Shortest gate word carrying `from` to `to`, found by BFS over the catalog.
pub fn gate_path(from: &StabilizerGroup, to: &StabilizerGroup) -> Vec<CliffordGate> {
    let start = from.canonicalize();
    let goal = to.canonicalize();
    if start == goal {
        return Vec::new();
    }
    let mut parents: HashMap<StabilizerGroup, (StabilizerGroup, CliffordGate)> = HashMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(start.clone());
    while let Some(group) = queue.pop_front() {
        for gate in STANDARD_GATES {
            let image = group.apply_clifford(gate);
            if image == start || parents.contains_key(&image) {
                continue;
            }
            parents.insert(image.clone(), (group.clone(), gate));
            if image == goal {
                let mut path = vec![gate];
                let mut cursor = group;
                while cursor != start {
                    let (prev, g) = parents[&cursor].clone();
                    path.push(g);
                    cursor = prev;
                }
                path.reverse();
                return path;
            }
            queue.push_back(image);
        }
    }
    unreachable!("all stabilizer groups share one Clifford orbit")
}

/// Named states used throughout the examples.
pub fn resolve_alias(name: &str) -> Option<StabilizerGroup> {
    let gens: (&str, &str) = match name.to_ascii_lowercase().as_str() {
        "up-up" | "upup" => ("+ZI", "+IZ"),
        "up-left" | "upleft" => ("+ZI", "-IX"),
        "psi-" | "psi-minus" => ("-ZZ", "-XX"),
        "phi+i" | "phi-plus-i" => ("+ZZ", "+XY"),
        _ => return None,
    };
    Some(
        StabilizerGroup::from_generators(gens.0.parse().unwrap(), gens.1.parse().unwrap())
            .expect("alias generators are valid"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_sixty_states() {
        let catalog = enumerate_catalog();
        assert_eq!(catalog.len(), 60);
        let separable = catalog
            .iter()
            .filter(|s| s.class == StateClass::Separable)
            .count();
        assert_eq!(separable, 36);
        assert_eq!(catalog.len() - separable, 24);
    }

    #[test]
    fn catalog_contains_the_named_states() {
        let catalog = enumerate_catalog();
        for alias in ["up-up", "up-left", "Psi-", "Phi+i"] {
            let group = resolve_alias(alias).unwrap();
            assert!(
                state_id_of(&catalog, &group).is_some(),
                "{alias} missing from catalog"
            );
        }
    }

    #[test]
    fn root_state_is_id_zero() {
        let catalog = enumerate_catalog();
        assert_eq!(state_id_of(&catalog, &initial_group()), Some(0));
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate_catalog();
        let b = enumerate_catalog();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.group, y.group);
            assert_eq!(x.id, y.id);
        }
    }

    #[test]
    fn gate_paths_replay_to_their_target() {
        let catalog = enumerate_catalog();
        let from = initial_group();
        for target in catalog.iter().step_by(7) {
            let path = gate_path(&from, &target.group);
            let mut cursor = from.clone();
            for gate in path {
                cursor = cursor.apply_clifford(gate);
            }
            assert_eq!(cursor, target.group);
        }
    }

    #[test]
    fn unknown_alias_is_none() {
        assert!(resolve_alias("bell-nope").is_none());
    }
}
