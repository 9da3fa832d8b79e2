//! Stabilizer groups of two-qubit states: closure from a generating pair,
//! separable/entangled classification, Clifford-gate and quarter-turn
//! conjugation, and a canonical generator form used for deduplication.
//!
//! A valid group holds exactly four Hermitian sign-±1 operators including
//! the identity and never -I⊗I. Any two distinct non-identity members
//! generate it, and their product is the third.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::pauli::{PauliLetter, PauliOp, Qubit, Sign};

/// Separable or maximally entangled; no other classes occur for two-qubit
/// stabilizer states.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum StateClass {
    Separable,
    Entangled,
}

impl fmt::Display for StateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateClass::Separable => write!(f, "separable"),
            StateClass::Entangled => write!(f, "entangled"),
        }
    }
}

/// One of the generating Clifford gates. The phase gate is diag(1, i).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CliffordGate {
    Hadamard(Qubit),
    Phase(Qubit),
    Cnot { control: Qubit, target: Qubit },
}

/// The gate set used for reachability: both qubit assignments of each gate.
pub const STANDARD_GATES: [CliffordGate; 6] = [
    CliffordGate::Hadamard(Qubit::One),
    CliffordGate::Hadamard(Qubit::Two),
    CliffordGate::Phase(Qubit::One),
    CliffordGate::Phase(Qubit::Two),
    CliffordGate::Cnot {
        control: Qubit::One,
        target: Qubit::Two,
    },
    CliffordGate::Cnot {
        control: Qubit::Two,
        target: Qubit::One,
    },
];

impl CliffordGate {
    /// Conjugation images of the generators X1, Z1, X2, Z2, in that order.
    fn generator_images(self) -> [PauliOp; 4] {
        let x = |q: Qubit| PauliOp::single(q, PauliLetter::X);
        let z = |q: Qubit| PauliOp::single(q, PauliLetter::Z);
        let y = |q: Qubit| PauliOp::single(q, PauliLetter::Y);
        let mut images = [x(Qubit::One), z(Qubit::One), x(Qubit::Two), z(Qubit::Two)];
        match self {
            CliffordGate::Hadamard(q) => {
                images[2 * q.index()] = z(q);
                images[2 * q.index() + 1] = x(q);
            }
            CliffordGate::Phase(q) => {
                images[2 * q.index()] = y(q);
            }
            CliffordGate::Cnot { control, target } => {
                assert_ne!(control, target, "CNOT control and target must differ");
                images[2 * control.index()] = x(control).mul(&x(target));
                images[2 * target.index() + 1] = z(control).mul(&z(target));
            }
        }
        images
    }
}

impl fmt::Display for CliffordGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliffordGate::Hadamard(q) => write!(f, "H{q}"),
            CliffordGate::Phase(q) => write!(f, "S{q}"),
            CliffordGate::Cnot { control, target } => write!(f, "CNOT{control}{target}"),
        }
    }
}

impl FromStr for CliffordGate {
    type Err = String;

    fn from_str(s: &str) -> Result<CliffordGate, String> {
        match s.to_ascii_uppercase().as_str() {
            "H1" => Ok(CliffordGate::Hadamard(Qubit::One)),
            "H2" => Ok(CliffordGate::Hadamard(Qubit::Two)),
            "S1" => Ok(CliffordGate::Phase(Qubit::One)),
            "S2" => Ok(CliffordGate::Phase(Qubit::Two)),
            "CNOT12" => Ok(CliffordGate::Cnot {
                control: Qubit::One,
                target: Qubit::Two,
            }),
            "CNOT21" => Ok(CliffordGate::Cnot {
                control: Qubit::Two,
                target: Qubit::One,
            }),
            other => Err(format!(
                "unknown gate {other:?}: expected one of H1, H2, S1, S2, CNOT12, CNOT21"
            )),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GroupError {
    #[error("generators anticommute; a stabilizer group is abelian")]
    AnticommutingGenerators,
    #[error("generators are dependent; two distinct non-identity operators are required")]
    DependentGenerators,
    #[error("-I\u{2297}I cannot be a stabilizer group member")]
    MinusIdentityInGroup,
    #[error("generators must be Hermitian with sign \u{b1}1")]
    NonHermitianGenerator,
    #[error("rotation angle must be 1, 2 or 3 quarter turns, got {0}")]
    UnsupportedAngle(u32),
    #[error("rotation generator must be one of the 15 sign-positive non-identity Paulis")]
    InvalidRotationGenerator,
}

/// The four-element abelian group fixing a two-qubit stabilizer state.
///
/// Generators are kept in symplectic row-reduced echelon form over the
/// column order (x1, z1, x2, z2); equal groups always carry identical
/// generator pairs, so the derived `Eq`/`Hash` give set semantics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StabilizerGroup {
    generators: [PauliOp; 2],
    members: [PauliOp; 4],
}

impl StabilizerGroup {
    /// Close `{g1, g2}` into the full group `{I, g1, g2, g1·g2}`.
    pub fn from_generators(g1: PauliOp, g2: PauliOp) -> Result<StabilizerGroup, GroupError> {
        if g1.sign().is_none() || g2.sign().is_none() {
            return Err(GroupError::NonHermitianGenerator);
        }
        if g1.is_minus_identity() || g2.is_minus_identity() {
            return Err(GroupError::MinusIdentityInGroup);
        }
        if !g1.commutes_with(&g2) {
            return Err(GroupError::AnticommutingGenerators);
        }
        let product = g1.mul(&g2);
        if product.is_minus_identity() {
            return Err(GroupError::MinusIdentityInGroup);
        }
        if g1.is_identity() || g2.is_identity() || g1 == g2 {
            return Err(GroupError::DependentGenerators);
        }
        Ok(StabilizerGroup::assemble([g1, g2, product]))
    }

    fn assemble(non_identity: [PauliOp; 3]) -> StabilizerGroup {
        debug_assert!(non_identity.iter().all(|m| m.sign().is_some()));
        let generators = canonical_pair(&non_identity);
        let mut rest = non_identity;
        rest.sort();
        StabilizerGroup {
            generators,
            members: [PauliOp::IDENTITY, rest[0], rest[1], rest[2]],
        }
    }

    /// Canonical generator pair.
    pub fn generators(&self) -> (PauliOp, PauliOp) {
        (self.generators[0], self.generators[1])
    }

    /// All four members, identity first, the rest in a fixed order.
    pub fn members(&self) -> &[PauliOp; 4] {
        &self.members
    }

    pub fn non_identity_members(&self) -> [PauliOp; 3] {
        [self.members[1], self.members[2], self.members[3]]
    }

    pub fn contains(&self, op: &PauliOp) -> bool {
        self.members.contains(op)
    }

    /// Separable groups carry a ±P⊗I member; entangled groups have all
    /// three non-identity members two-sided.
    pub fn classify(&self) -> StateClass {
        let single_sided = self.members.iter().any(|m| {
            let (a, b) = m.letters();
            a != PauliLetter::I && b == PauliLetter::I
        });
        if single_sided {
            StateClass::Separable
        } else {
            StateClass::Entangled
        }
    }

    /// Conjugate every member by the gate.
    pub fn apply_clifford(&self, gate: CliffordGate) -> StabilizerGroup {
        let images = gate.generator_images();
        let g1 = conjugate_by_images(&self.generators[0], &images);
        let g2 = conjugate_by_images(&self.generators[1], &images);
        StabilizerGroup::from_generators(g1, g2)
            .expect("Clifford conjugation preserves group validity")
    }

    /// Conjugate by `exp(i·quarter_turns·(π/4)·generator)`. Members commuting
    /// with the generator are untouched; each quarter turn maps an
    /// anticommuting member q to i·generator·q.
    pub fn apply_rotation(
        &self,
        generator: PauliOp,
        quarter_turns: u32,
    ) -> Result<StabilizerGroup, GroupError> {
        if !(1..=3).contains(&quarter_turns) {
            return Err(GroupError::UnsupportedAngle(quarter_turns));
        }
        if generator.sign() != Some(Sign::Plus) || generator.is_identity() {
            return Err(GroupError::InvalidRotationGenerator);
        }
        let rotate = |mut q: PauliOp| {
            for _ in 0..quarter_turns {
                if !q.commutes_with(&generator) {
                    q = generator.mul(&q).times_i();
                }
            }
            q
        };
        Ok(
            StabilizerGroup::from_generators(
                rotate(self.generators[0]),
                rotate(self.generators[1]),
            )
            .expect("quarter-turn conjugation preserves group validity"),
        )
    }

    /// Recompute the canonical generator pair from the member set.
    pub fn canonicalize(&self) -> StabilizerGroup {
        StabilizerGroup::assemble(self.non_identity_members())
    }

    pub(crate) fn sort_key(&self) -> [(u8, u8); 2] {
        [self.generators[0].sort_key(), self.generators[1].sort_key()]
    }
}

impl fmt::Display for StabilizerGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

fn conjugate_by_images(op: &PauliOp, images: &[PauliOp; 4]) -> PauliOp {
    let mut acc = PauliOp::with_phase(op.phase_i_power());
    let factors = [
        (op.x_bit(Qubit::One), 0usize),
        (op.z_bit(Qubit::One), 1),
        (op.x_bit(Qubit::Two), 2),
        (op.z_bit(Qubit::Two), 3),
    ];
    for (present, index) in factors {
        if present {
            acc = acc.mul(&images[index]);
        }
    }
    acc
}

/// Row-reduced echelon basis of the three non-identity members. The second
/// row is the unique member whose leading symplectic column is latest; the
/// first is the member that is zero in that column.
fn canonical_pair(non_identity: &[PauliOp; 3]) -> [PauliOp; 2] {
    let lead = |p: &PauliOp| p.leading_column().expect("member has support");
    let row2 = *non_identity
        .iter()
        .max_by_key(|p| lead(p))
        .expect("three members");
    debug_assert_eq!(
        non_identity
            .iter()
            .filter(|p| lead(p) == lead(&row2))
            .count(),
        1,
        "maximal leading column is unique"
    );
    let pivot = lead(&row2);
    let row1 = *non_identity
        .iter()
        .find(|p| **p != row2 && !p.symplectic_bits()[pivot])
        .expect("exactly one remaining member clears the second pivot");
    [row1, row2]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> PauliOp {
        s.parse().unwrap()
    }

    fn group(g1: &str, g2: &str) -> StabilizerGroup {
        StabilizerGroup::from_generators(op(g1), op(g2)).unwrap()
    }

    #[test]
    fn closure_of_the_up_up_group() {
        let g = group("ZI", "IZ");
        for m in ["+II", "+ZI", "+IZ", "+ZZ"] {
            assert!(g.contains(&op(m)), "missing {m}");
        }
    }

    #[test]
    fn closure_of_the_singlet_group() {
        let g = group("-ZZ", "-XX");
        for m in ["+II", "-ZZ", "-XX", "-YY"] {
            assert!(g.contains(&op(m)), "missing {m}");
        }
    }

    #[test]
    fn anticommuting_generators_are_rejected() {
        assert_eq!(
            StabilizerGroup::from_generators(op("ZI"), op("XI")),
            Err(GroupError::AnticommutingGenerators)
        );
    }

    #[test]
    fn dependent_generators_are_rejected() {
        assert_eq!(
            StabilizerGroup::from_generators(op("ZZ"), op("ZZ")),
            Err(GroupError::DependentGenerators)
        );
        assert_eq!(
            StabilizerGroup::from_generators(op("II"), op("ZZ")),
            Err(GroupError::DependentGenerators)
        );
    }

    #[test]
    fn minus_identity_is_rejected() {
        assert_eq!(
            StabilizerGroup::from_generators(op("XI"), op("-XI")),
            Err(GroupError::MinusIdentityInGroup)
        );
        assert_eq!(
            StabilizerGroup::from_generators(op("-II"), op("ZZ")),
            Err(GroupError::MinusIdentityInGroup)
        );
    }

    #[test]
    fn non_hermitian_generators_are_rejected() {
        let xz = op("XI").mul(&op("ZI"));
        assert_eq!(
            StabilizerGroup::from_generators(xz, op("IZ")),
            Err(GroupError::NonHermitianGenerator)
        );
    }

    #[test]
    fn classification_by_single_sided_members() {
        assert_eq!(group("ZI", "IZ").classify(), StateClass::Separable);
        assert_eq!(group("-ZZ", "-XX").classify(), StateClass::Entangled);
        assert_eq!(group("ZZ", "XY").classify(), StateClass::Entangled);
    }

    #[test]
    fn phase_gate_fixes_the_up_up_group() {
        let g = group("ZI", "IZ");
        assert_eq!(g.apply_clifford(CliffordGate::Phase(Qubit::One)), g);
    }

    #[test]
    fn quarter_turn_moves_up_up_to_up_left() {
        let g = group("ZI", "IZ");
        let rotated = g.apply_rotation(op("IY"), 1).unwrap();
        assert_eq!(rotated, group("ZI", "-IX"));
    }

    #[test]
    fn full_turn_is_rejected() {
        let g = group("ZI", "IZ");
        assert_eq!(
            g.apply_rotation(op("IY"), 4),
            Err(GroupError::UnsupportedAngle(4))
        );
        assert_eq!(
            g.apply_rotation(op("IY"), 0),
            Err(GroupError::UnsupportedAngle(0))
        );
    }

    #[test]
    fn signed_or_identity_rotation_generators_are_rejected() {
        let g = group("ZI", "IZ");
        assert_eq!(
            g.apply_rotation(op("-IY"), 1),
            Err(GroupError::InvalidRotationGenerator)
        );
        assert_eq!(
            g.apply_rotation(PauliOp::IDENTITY, 1),
            Err(GroupError::InvalidRotationGenerator)
        );
    }

    #[test]
    fn canonical_form_row_reduces() {
        let g = group("ZZ", "ZI");
        assert_eq!(g.generators(), (op("ZI"), op("IZ")));
    }

    #[test]
    fn canonical_form_is_idempotent_and_order_free() {
        let a = group("-ZZ", "-XX");
        let b = group("-XX", "-ZZ");
        assert_eq!(a, b);
        assert_eq!(a.canonicalize(), a);
        assert_eq!(a.generators(), b.generators());
    }
}
