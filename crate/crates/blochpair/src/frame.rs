//! The paired-sphere picture of a two-qubit stabilizer state and the moves
//! that act on it.
//!
//! A separable state records, per sphere, which signed coordinate axis faces
//! along the statevector arrow; the two transverse axes are physically
//! unconstrained and never stored. A maximally entangled state records the
//! relative alignment of the two coordinate frames as a 3×3 signed
//! permutation with determinant -1: the second frame is always left-handed
//! relative to the first.
//!
//! The dictionary with stabilizer groups: a member `s·P⊗Q` says axis `p₁`
//! is co-directional with `s·q₂` (entry `s` in row `axis(Q)`, column
//! `axis(P)`); a member `s·P⊗I` or `s·I⊗Q` says the signed axis faces along
//! that sphere's arrow. The sign always rides on the sphere-2 axis.

use std::fmt;

use thiserror::Error;

use crate::group::{StabilizerGroup, StateClass};
use crate::pauli::{PauliLetter, PauliOp, Qubit, Sign};

/// Bloch-sphere coordinate axis label.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn from_index(index: usize) -> Axis {
        Axis::ALL[index]
    }

    pub fn letter(self) -> PauliLetter {
        match self {
            Axis::X => PauliLetter::X,
            Axis::Y => PauliLetter::Y,
            Axis::Z => PauliLetter::Z,
        }
    }

    pub fn of_letter(letter: PauliLetter) -> Option<Axis> {
        match letter {
            PauliLetter::I => None,
            PauliLetter::X => Some(Axis::X),
            PauliLetter::Y => Some(Axis::Y),
            PauliLetter::Z => Some(Axis::Z),
        }
    }

    /// Ordered axis pair whose plane is swept by a quarter turn about `self`:
    /// z ↦ (x, y), x ↦ (y, z), y ↦ (z, x).
    pub fn plane(self) -> (Axis, Axis) {
        match self {
            Axis::Z => (Axis::X, Axis::Y),
            Axis::X => (Axis::Y, Axis::Z),
            Axis::Y => (Axis::Z, Axis::X),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::X => write!(f, "x"),
            Axis::Y => write!(f, "y"),
            Axis::Z => write!(f, "z"),
        }
    }
}

/// One of the six directions ±x, ±y, ±z.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedAxis {
    pub axis: Axis,
    pub sign: Sign,
}

impl SignedAxis {
    pub fn new(axis: Axis, sign: Sign) -> SignedAxis {
        SignedAxis { axis, sign }
    }

    pub fn flipped(self) -> SignedAxis {
        SignedAxis {
            axis: self.axis,
            sign: self.sign.flipped(),
        }
    }
}

impl fmt::Display for SignedAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign, self.axis)
    }
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum FrameError {
    #[error("alignment is not a signed permutation matrix")]
    NotSignedPermutation,
    #[error("alignment has determinant +1; entangled frames require determinant -1")]
    WrongHandedness,
    #[error("axis permutation must be a proper rotation (determinant +1)")]
    ImproperPermutation,
    #[error("axis permutations apply only to entangled frames")]
    SeparableFrame,
    #[error("frame-level rotation is defined for local (single-sphere) planes only")]
    NonLocalRotation,
}

/// 3×3 signed permutation recording which signed sphere-2 axis is
/// co-directional with each sphere-1 axis. Row = sphere-2 axis, column =
/// sphere-1 axis.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alignment {
    entries: [[i8; 3]; 3],
}

impl Alignment {
    pub fn from_entries(entries: [[i8; 3]; 3]) -> Result<Alignment, FrameError> {
        for row in &entries {
            for v in row {
                if ![-1, 0, 1].contains(v) {
                    return Err(FrameError::NotSignedPermutation);
                }
            }
        }
        for (i, row) in entries.iter().enumerate() {
            let row_nonzero = row.iter().filter(|v| **v != 0).count();
            let col_nonzero = entries.iter().filter(|r| r[i] != 0).count();
            if row_nonzero != 1 || col_nonzero != 1 {
                return Err(FrameError::NotSignedPermutation);
            }
        }
        Ok(Alignment { entries })
    }

    pub fn entries(&self) -> &[[i8; 3]; 3] {
        &self.entries
    }

    pub fn entry(&self, row: Axis, col: Axis) -> i8 {
        self.entries[row.index()][col.index()]
    }

    /// The signed sphere-2 axis co-directional with the given sphere-1 axis.
    pub fn column(&self, sphere1_axis: Axis) -> SignedAxis {
        for row in Axis::ALL {
            let v = self.entry(row, sphere1_axis);
            if v != 0 {
                return SignedAxis::new(row, Sign::from_i64(v as i64).unwrap());
            }
        }
        unreachable!("signed permutation has a nonzero entry per column")
    }

    /// The signed sphere-1 direction along which the given sphere-2 axis faces.
    pub fn row(&self, sphere2_axis: Axis) -> SignedAxis {
        for col in Axis::ALL {
            let v = self.entry(sphere2_axis, col);
            if v != 0 {
                return SignedAxis::new(col, Sign::from_i64(v as i64).unwrap());
            }
        }
        unreachable!("signed permutation has a nonzero entry per row")
    }

    pub fn det(&self) -> i8 {
        let m = &self.entries;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// All 48 signed permutation matrices.
    pub fn all_signed_permutations() -> Vec<Alignment> {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let mut out = Vec::with_capacity(48);
        for perm in perms {
            for signs in 0..8u8 {
                let mut entries = [[0i8; 3]; 3];
                for (col, &row) in perm.iter().enumerate() {
                    let sign = if signs & (1 << col) == 0 { 1 } else { -1 };
                    entries[row][col] = sign;
                }
                out.push(Alignment { entries });
            }
        }
        out
    }
}

/// The drawable content of the two-sphere picture.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FrameRep {
    Separable {
        arrow1: SignedAxis,
        arrow2: SignedAxis,
    },
    Entangled {
        alignment: Alignment,
    },
}

impl fmt::Display for FrameRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameRep::Separable { arrow1, arrow2 } => {
                write!(f, "arrow1 = {arrow1}, arrow2 = {arrow2}")
            }
            FrameRep::Entangled { alignment } => {
                write!(f, "alignment: ")?;
                for (i, col) in Axis::ALL.into_iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    let pair = alignment.column(col);
                    write!(f, "{col}1 \u{2225} {}{}2", pair.sign, pair.axis)?;
                }
                Ok(())
            }
        }
    }
}

/// Read the picture off the stabilizer group.
pub fn frame_from_group(group: &StabilizerGroup) -> FrameRep {
    match group.classify() {
        StateClass::Separable => {
            let mut arrow1 = None;
            let mut arrow2 = None;
            for member in group.non_identity_members() {
                let (a, b) = member.letters();
                let sign = member.sign().expect("group members carry a sign");
                match (Axis::of_letter(a), Axis::of_letter(b)) {
                    (Some(axis), None) => arrow1 = Some(SignedAxis::new(axis, sign)),
                    (None, Some(axis)) => arrow2 = Some(SignedAxis::new(axis, sign)),
                    _ => {}
                }
            }
            FrameRep::Separable {
                arrow1: arrow1.expect("separable group has a \u{b1}P\u{2297}I member"),
                arrow2: arrow2.expect("separable group has a \u{b1}I\u{2297}Q member"),
            }
        }
        StateClass::Entangled => {
            let mut entries = [[0i8; 3]; 3];
            for member in group.non_identity_members() {
                let (a, b) = member.letters();
                let p = Axis::of_letter(a).expect("entangled members are two-sided");
                let q = Axis::of_letter(b).expect("entangled members are two-sided");
                let sign = member.sign().expect("group members carry a sign");
                entries[q.index()][p.index()] = sign.as_i64() as i8;
            }
            let alignment = Alignment::from_entries(entries)
                .expect("entangled group fills a signed permutation");
            debug_assert_eq!(alignment.det(), -1);
            FrameRep::Entangled { alignment }
        }
    }
}

/// Invert `frame_from_group`: reconstruct the group from the picture.
pub fn group_from_frame(frame: &FrameRep) -> Result<StabilizerGroup, FrameError> {
    match frame {
        FrameRep::Separable { arrow1, arrow2 } => {
            let g1 = signed_member(arrow1.sign, arrow1.axis.letter(), PauliLetter::I);
            let g2 = signed_member(arrow2.sign, PauliLetter::I, arrow2.axis.letter());
            Ok(StabilizerGroup::from_generators(g1, g2)
                .expect("one-sided arrow members always close"))
        }
        FrameRep::Entangled { alignment } => {
            if alignment.det() != -1 {
                return Err(FrameError::WrongHandedness);
            }
            let mut members = Vec::with_capacity(3);
            for col in Axis::ALL {
                let pair = alignment.column(col);
                members.push(signed_member(pair.sign, col.letter(), pair.axis.letter()));
            }
            let group = StabilizerGroup::from_generators(members[0], members[1])
                .expect("determinant -1 alignments close into a group");
            debug_assert!(group.contains(&members[2]));
            Ok(group)
        }
    }
}

fn signed_member(sign: Sign, first: PauliLetter, second: PauliLetter) -> PauliOp {
    PauliOp::from_letters(sign, first, second)
}

/// A relabeling of the sphere-2 axes: each source axis maps to a signed
/// target axis.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct AxisPermutation {
    map: [SignedAxis; 3],
}

impl AxisPermutation {
    pub fn new(map: [SignedAxis; 3]) -> Result<AxisPermutation, FrameError> {
        let mut seen = [false; 3];
        for target in map {
            if seen[target.axis.index()] {
                return Err(FrameError::NotSignedPermutation);
            }
            seen[target.axis.index()] = true;
        }
        Ok(AxisPermutation { map })
    }

    pub fn identity() -> AxisPermutation {
        AxisPermutation {
            map: Axis::ALL.map(|a| SignedAxis::new(a, Sign::Plus)),
        }
    }

    /// The positive relabeling {x, y, z} → {z, x, y}.
    pub fn forward_cycle() -> AxisPermutation {
        AxisPermutation {
            map: [
                SignedAxis::new(Axis::Z, Sign::Plus),
                SignedAxis::new(Axis::X, Sign::Plus),
                SignedAxis::new(Axis::Y, Sign::Plus),
            ],
        }
    }

    pub fn target(&self, source: Axis) -> SignedAxis {
        self.map[source.index()]
    }

    pub fn det(&self) -> i8 {
        // Permutation parity times the product of signs.
        let perm: Vec<usize> = self.map.iter().map(|t| t.axis.index()).collect();
        let mut parity = 1i8;
        for i in 0..3 {
            for j in (i + 1)..3 {
                if perm[i] > perm[j] {
                    parity = -parity;
                }
            }
        }
        let signs: i8 = self.map.iter().map(|t| t.sign.as_i64() as i8).product();
        parity * signs
    }
}

/// Relabel the sphere-2 axes of an entangled frame. Proper rotations keep
/// the frame in the determinant -1 family; improper ones are rejected.
pub fn permute_frame(frame: &FrameRep, perm: &AxisPermutation) -> Result<FrameRep, FrameError> {
    let FrameRep::Entangled { alignment } = frame else {
        return Err(FrameError::SeparableFrame);
    };
    if perm.det() != 1 {
        return Err(FrameError::ImproperPermutation);
    }
    let mut entries = [[0i8; 3]; 3];
    for q in Axis::ALL {
        let target = perm.target(q);
        for p in Axis::ALL {
            let v = alignment.entry(q, p);
            if v != 0 {
                entries[target.axis.index()][p.index()] = v * target.sign.as_i64() as i8;
            }
        }
    }
    let alignment =
        Alignment::from_entries(entries).expect("relabeling preserves signed permutations");
    debug_assert_eq!(alignment.det(), -1);
    Ok(FrameRep::Entangled { alignment })
}

/// Which plane a quarter-turn generator sweeps: a single sphere's coordinate
/// plane for local generators, an axis pair across the spheres otherwise.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RotationPlane {
    Local {
        sphere: Qubit,
        plane: (Axis, Axis),
        quarter_turns: u32,
    },
    NonLocal {
        sphere1_axis: Axis,
        sphere2_axis: Axis,
        quarter_turns: u32,
    },
}

impl fmt::Display for RotationPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RotationPlane::Local {
                sphere,
                plane,
                quarter_turns,
            } => write!(
                f,
                "sphere {sphere}, plane ({}{sphere}, {}{sphere}), {quarter_turns} quarter turn(s)",
                plane.0, plane.1
            ),
            RotationPlane::NonLocal {
                sphere1_axis,
                sphere2_axis,
                quarter_turns,
            } => write!(
                f,
                "non-local, axes ({sphere1_axis}1, {sphere2_axis}2), {quarter_turns} quarter turn(s)"
            ),
        }
    }
}

/// Describe the plane swept by `exp(i·quarter_turns·(π/4)·generator)`.
pub fn frame_rotation_of(generator: PauliOp, quarter_turns: u32) -> RotationPlane {
    assert!(
        generator.sign() == Some(Sign::Plus) && !generator.is_identity(),
        "rotation generator must be a sign-positive non-identity Pauli"
    );
    assert!(
        (1..=3).contains(&quarter_turns),
        "quarter turns must be 1..=3"
    );
    let (a, b) = generator.letters();
    match (Axis::of_letter(a), Axis::of_letter(b)) {
        (Some(axis), None) => RotationPlane::Local {
            sphere: Qubit::One,
            plane: axis.plane(),
            quarter_turns,
        },
        (None, Some(axis)) => RotationPlane::Local {
            sphere: Qubit::Two,
            plane: axis.plane(),
            quarter_turns,
        },
        (Some(p), Some(q)) => RotationPlane::NonLocal {
            sphere1_axis: p,
            sphere2_axis: q,
            quarter_turns,
        },
        (None, None) => unreachable!("identity excluded above"),
    }
}

/// One quarter turn in the plane (a, b): a ↦ -b, b ↦ a, the third axis fixed.
fn quarter_turn_in_plane(sa: SignedAxis, plane: (Axis, Axis)) -> SignedAxis {
    let (a, b) = plane;
    if sa.axis == a {
        SignedAxis::new(b, sa.sign.flipped())
    } else if sa.axis == b {
        SignedAxis::new(a, sa.sign)
    } else {
        sa
    }
}

/// Apply a local plane rotation directly to the picture. Matches the
/// group-level conjugation by the same generator.
pub fn apply_local_rotation(
    frame: &FrameRep,
    rotation: &RotationPlane,
) -> Result<FrameRep, FrameError> {
    let RotationPlane::Local {
        sphere,
        plane,
        quarter_turns,
    } = rotation
    else {
        return Err(FrameError::NonLocalRotation);
    };
    let turn = |mut sa: SignedAxis| {
        for _ in 0..*quarter_turns {
            sa = quarter_turn_in_plane(sa, *plane);
        }
        sa
    };
    match frame {
        FrameRep::Separable { arrow1, arrow2 } => match sphere {
            Qubit::One => Ok(FrameRep::Separable {
                arrow1: turn(*arrow1),
                arrow2: *arrow2,
            }),
            Qubit::Two => Ok(FrameRep::Separable {
                arrow1: *arrow1,
                arrow2: turn(*arrow2),
            }),
        },
        FrameRep::Entangled { alignment } => {
            let mut entries = [[0i8; 3]; 3];
            for q in Axis::ALL {
                for p in Axis::ALL {
                    let v = alignment.entry(q, p);
                    if v == 0 {
                        continue;
                    }
                    let sign = Sign::from_i64(v as i64).unwrap();
                    match sphere {
                        // Sphere-2 rotations relabel rows, sphere-1 columns.
                        Qubit::Two => {
                            let moved = turn(SignedAxis::new(q, sign));
                            entries[moved.axis.index()][p.index()] = moved.sign.as_i64() as i8;
                        }
                        Qubit::One => {
                            let moved = turn(SignedAxis::new(p, sign));
                            entries[q.index()][moved.axis.index()] = moved.sign.as_i64() as i8;
                        }
                    }
                }
            }
            let alignment =
                Alignment::from_entries(entries).expect("rotation preserves signed permutations");
            Ok(FrameRep::Entangled { alignment })
        }
    }
}

/// An axis (or axis pair) the state is invariant under rotating about.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum AxisLock {
    Single { sphere: Qubit, axis: SignedAxis },
    Pair { sphere1: Axis, sphere2: SignedAxis },
}

impl fmt::Display for AxisLock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let short = |sa: &SignedAxis, sphere: &str| match sa.sign {
            Sign::Plus => format!("{}{sphere}", sa.axis),
            Sign::Minus => format!("-{}{sphere}", sa.axis),
        };
        match self {
            AxisLock::Single { sphere, axis } => {
                write!(f, "{{{}}}", short(axis, &sphere.to_string()))
            }
            AxisLock::Pair { sphere1, sphere2 } => {
                write!(f, "({sphere1}1, {})", short(sphere2, "2"))
            }
        }
    }
}

/// The lock encoded by one non-identity group member.
pub fn axis_lock_of(member: &PauliOp) -> AxisLock {
    let (a, b) = member.letters();
    let sign = member.sign().expect("group members carry a sign");
    match (Axis::of_letter(a), Axis::of_letter(b)) {
        (Some(axis), None) => AxisLock::Single {
            sphere: Qubit::One,
            axis: SignedAxis::new(axis, sign),
        },
        (None, Some(axis)) => AxisLock::Single {
            sphere: Qubit::Two,
            axis: SignedAxis::new(axis, sign),
        },
        (Some(p), Some(q)) => AxisLock::Pair {
            sphere1: p,
            sphere2: SignedAxis::new(q, sign),
        },
        (None, None) => unreachable!("the identity encodes no lock"),
    }
}

/// Per group member, the axes about which (simultaneous) rotation leaves the
/// state unchanged. Signs ride on the sphere-2 axis for pairs; single-sphere
/// locks are listed before pairs, sphere 1 before sphere 2.
pub fn fixed_axis_pairs(group: &StabilizerGroup) -> Vec<AxisLock> {
    let mut locks: Vec<AxisLock> = group
        .non_identity_members()
        .iter()
        .map(axis_lock_of)
        .collect();
    locks.sort_by_key(|lock| match lock {
        AxisLock::Single { sphere, axis } => (0usize, sphere.index(), axis.axis.index()),
        AxisLock::Pair { sphere1, sphere2 } => (1, sphere1.index(), sphere2.axis.index()),
    });
    locks
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

    fn minus_identity_alignment() -> Alignment {
        Alignment::from_entries([[-1, 0, 0], [0, -1, 0], [0, 0, -1]]).unwrap()
    }

    #[test]
    fn singlet_frame_is_minus_identity() {
        let frame = frame_from_group(&group("-ZZ", "-XX"));
        assert_eq!(
            frame,
            FrameRep::Entangled {
                alignment: minus_identity_alignment()
            }
        );
    }

    #[test]
    fn phi_plus_i_frame_pairs_axes() {
        // Members Z⊗Z, X⊗Y, Y⊗X: z1∥z2, x1∥y2, y1∥x2, all positive.
        let frame = frame_from_group(&group("ZZ", "XY"));
        let FrameRep::Entangled { alignment } = frame else {
            panic!("expected an entangled frame");
        };
        assert_eq!(
            alignment.column(Axis::Z),
            SignedAxis::new(Axis::Z, Sign::Plus)
        );
        assert_eq!(
            alignment.column(Axis::X),
            SignedAxis::new(Axis::Y, Sign::Plus)
        );
        assert_eq!(
            alignment.column(Axis::Y),
            SignedAxis::new(Axis::X, Sign::Plus)
        );
        assert_eq!(alignment.det(), -1);
    }

    #[test]
    fn up_left_frame_has_signed_arrow() {
        let frame = frame_from_group(&group("ZI", "-IX"));
        assert_eq!(
            frame,
            FrameRep::Separable {
                arrow1: SignedAxis::new(Axis::Z, Sign::Plus),
                arrow2: SignedAxis::new(Axis::X, Sign::Minus),
            }
        );
    }

    #[test]
    fn frames_invert_back_to_groups() {
        let singlet = group("-ZZ", "-XX");
        assert_eq!(
            group_from_frame(&frame_from_group(&singlet)).unwrap(),
            singlet
        );
        let up_up = group("ZI", "IZ");
        assert_eq!(
            group_from_frame(&FrameRep::Separable {
                arrow1: SignedAxis::new(Axis::Z, Sign::Plus),
                arrow2: SignedAxis::new(Axis::Z, Sign::Plus),
            })
            .unwrap(),
            up_up
        );
    }

    #[test]
    fn proper_alignments_are_rejected() {
        let identity = Alignment::from_entries([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(
            group_from_frame(&FrameRep::Entangled {
                alignment: identity
            }),
            Err(FrameError::WrongHandedness)
        );
    }

    #[test]
    fn malformed_alignments_are_rejected() {
        assert_eq!(
            Alignment::from_entries([[1, 1, 0], [0, 0, 1], [0, 0, 0]]),
            Err(FrameError::NotSignedPermutation)
        );
        assert_eq!(
            Alignment::from_entries([[2, 0, 0], [0, 1, 0], [0, 0, 1]]),
            Err(FrameError::NotSignedPermutation)
        );
    }

    #[test]
    fn cyclic_permutation_of_singlet_frame() {
        let frame = frame_from_group(&group("-ZZ", "-XX"));
        let permuted = permute_frame(&frame, &AxisPermutation::forward_cycle()).unwrap();
        let expected = frame_from_group(&group("-ZY", "-YX"));
        assert_eq!(permuted, expected);
        assert_eq!(group_from_frame(&permuted).unwrap(), group("-ZY", "-YX"));
    }

    #[test]
    fn identity_permutation_is_neutral() {
        let frame = frame_from_group(&group("ZZ", "XY"));
        assert_eq!(
            permute_frame(&frame, &AxisPermutation::identity()).unwrap(),
            frame
        );
    }

    #[test]
    fn improper_permutations_are_rejected() {
        let frame = frame_from_group(&group("-ZZ", "-XX"));
        let swap = AxisPermutation::new([
            SignedAxis::new(Axis::Y, Sign::Plus),
            SignedAxis::new(Axis::X, Sign::Plus),
            SignedAxis::new(Axis::Z, Sign::Plus),
        ])
        .unwrap();
        assert_eq!(
            permute_frame(&frame, &swap),
            Err(FrameError::ImproperPermutation)
        );
    }

    #[test]
    fn permuting_a_separable_frame_is_rejected() {
        let frame = frame_from_group(&group("ZI", "IZ"));
        assert_eq!(
            permute_frame(&frame, &AxisPermutation::forward_cycle()),
            Err(FrameError::SeparableFrame)
        );
    }

    #[test]
    fn rotation_planes_of_local_generators() {
        assert_eq!(
            frame_rotation_of(op("IY"), 1),
            RotationPlane::Local {
                sphere: Qubit::Two,
                plane: (Axis::Z, Axis::X),
                quarter_turns: 1,
            }
        );
        assert_eq!(
            frame_rotation_of(op("ZI"), 1),
            RotationPlane::Local {
                sphere: Qubit::One,
                plane: (Axis::X, Axis::Y),
                quarter_turns: 1,
            }
        );
    }

    #[test]
    fn rotation_plane_of_a_two_sided_generator() {
        assert_eq!(
            frame_rotation_of(op("XY"), 1),
            RotationPlane::NonLocal {
                sphere1_axis: Axis::X,
                sphere2_axis: Axis::Y,
                quarter_turns: 1,
            }
        );
    }

    #[test]
    fn local_rotation_moves_the_arrow() {
        // Quarter turn in the (z2, x2) plane carries +z2 to -x2.
        let frame = frame_from_group(&group("ZI", "IZ"));
        let rotated = apply_local_rotation(&frame, &frame_rotation_of(op("IY"), 1)).unwrap();
        assert_eq!(
            rotated,
            FrameRep::Separable {
                arrow1: SignedAxis::new(Axis::Z, Sign::Plus),
                arrow2: SignedAxis::new(Axis::X, Sign::Minus),
            }
        );
    }

    #[test]
    fn non_local_plane_cannot_rotate_a_frame() {
        let frame = frame_from_group(&group("ZI", "IZ"));
        assert_eq!(
            apply_local_rotation(&frame, &frame_rotation_of(op("XY"), 1)),
            Err(FrameError::NonLocalRotation)
        );
    }

    #[test]
    fn fixed_axes_of_the_permuted_singlet() {
        let locks = fixed_axis_pairs(&group("-ZY", "-YX"));
        let text: Vec<String> = locks.iter().map(|l| l.to_string()).collect();
        assert!(text.contains(&"(z1, -y2)".to_string()));
        assert!(text.contains(&"(y1, -x2)".to_string()));
        assert!(text.contains(&"(x1, -z2)".to_string()));
    }

    #[test]
    fn fixed_axes_of_up_left() {
        let locks = fixed_axis_pairs(&group("ZI", "-IX"));
        let text: Vec<String> = locks.iter().map(|l| l.to_string()).collect();
        assert!(text.contains(&"{z1}".to_string()));
        assert!(text.contains(&"{-x2}".to_string()));
        assert!(text.contains(&"(z1, -x2)".to_string()));
    }

    #[test]
    fn fixed_axes_of_up_up() {
        let locks = fixed_axis_pairs(&group("ZI", "IZ"));
        let text: Vec<String> = locks.iter().map(|l| l.to_string()).collect();
        assert!(text.contains(&"{z1}".to_string()));
        assert!(text.contains(&"{z2}".to_string()));
        assert!(text.contains(&"(z1, z2)".to_string()));
    }
}
