//! Signed two-qubit Pauli operators in binary-symplectic form.
//!
//! An operator is stored as `i^phase · (X^x1 Z^z1) ⊗ (X^x2 Z^z2)` with the
//! phase a power of the imaginary unit mod 4. Multiplication XORs the bit
//! pairs and accumulates the commutation phase, so transient products may
//! carry ±i even though everything stored in a stabilizer group is Hermitian
//! with a plain ±1 sign. The canonical display form is `s·(A ⊗ B)` with
//! `A, B ∈ {I, X, Y, Z}` and `Y = iXZ`, which makes an operator Hermitian
//! exactly when its stored phase plus its Y-count is even.
//!
//! Dense matrices use the basis order (|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩) with
//! `Z|↑⟩ = +|↑⟩`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use thiserror::Error;

/// Exact complex-integer scalar shared by the dense layer.
pub type Gaussian = Complex<i64>;

/// 4×4 Gaussian-integer matrix in the fixed two-qubit basis order.
pub type DenseMatrix = [[Gaussian; 4]; 4];

pub(crate) const G0: Gaussian = Gaussian { re: 0, im: 0 };
pub(crate) const G1: Gaussian = Gaussian { re: 1, im: 0 };

/// Tensor-factor slot of a two-qubit operator.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Qubit {
    One,
    Two,
}

impl Qubit {
    pub const BOTH: [Qubit; 2] = [Qubit::One, Qubit::Two];

    pub fn index(self) -> usize {
        match self {
            Qubit::One => 0,
            Qubit::Two => 1,
        }
    }

    pub fn other(self) -> Qubit {
        match self {
            Qubit::One => Qubit::Two,
            Qubit::Two => Qubit::One,
        }
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index() + 1)
    }
}

/// A ±1 sign.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Single-qubit Pauli letter in canonical display form.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const ALL: [PauliLetter; 4] = [
        PauliLetter::I,
        PauliLetter::X,
        PauliLetter::Y,
        PauliLetter::Z,
    ];

    fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> PauliLetter {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }

    fn from_char(c: char) -> Option<PauliLetter> {
        match c {
            'I' => Some(PauliLetter::I),
            'X' => Some(PauliLetter::X),
            'Y' => Some(PauliLetter::Y),
            'Z' => Some(PauliLetter::Z),
            _ => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }
}

impl fmt::Display for PauliLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A two-qubit Pauli operator with full i-power phase tracking.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliOp {
    phase: u8,
    x: [bool; 2],
    z: [bool; 2],
}

impl PauliOp {
    pub const IDENTITY: PauliOp = PauliOp {
        phase: 0,
        x: [false; 2],
        z: [false; 2],
    };

    /// Build `sign·(first ⊗ second)` from canonical display letters.
    pub fn from_letters(sign: Sign, first: PauliLetter, second: PauliLetter) -> PauliOp {
        let (x1, z1) = first.bits();
        let (x2, z2) = second.bits();
        let mut phase: u8 = match sign {
            Sign::Plus => 0,
            Sign::Minus => 2,
        };
        // Y = iXZ, so each Y factor adds one stored power of i.
        if x1 && z1 {
            phase = (phase + 1) % 4;
        }
        if x2 && z2 {
            phase = (phase + 1) % 4;
        }
        PauliOp {
            phase,
            x: [x1, x2],
            z: [z1, z2],
        }
    }

    /// The positive single-qubit operator `letter` on `qubit`, identity elsewhere.
    pub fn single(qubit: Qubit, letter: PauliLetter) -> PauliOp {
        match qubit {
            Qubit::One => PauliOp::from_letters(Sign::Plus, letter, PauliLetter::I),
            Qubit::Two => PauliOp::from_letters(Sign::Plus, PauliLetter::I, letter),
        }
    }

    pub(crate) fn with_phase(phase: u8) -> PauliOp {
        PauliOp {
            phase: phase % 4,
            x: [false; 2],
            z: [false; 2],
        }
    }

    pub fn phase_i_power(&self) -> u8 {
        self.phase
    }

    pub fn x_bit(&self, qubit: Qubit) -> bool {
        self.x[qubit.index()]
    }

    pub fn z_bit(&self, qubit: Qubit) -> bool {
        self.z[qubit.index()]
    }

    fn y_count(&self) -> u8 {
        (0..2).filter(|&q| self.x[q] && self.z[q]).count() as u8
    }

    /// Power of i in front of the canonical `A ⊗ B` form; even iff Hermitian.
    pub fn display_phase(&self) -> u8 {
        (self.phase + 4 - self.y_count()) % 4
    }

    pub fn is_hermitian(&self) -> bool {
        self.display_phase().is_multiple_of(2)
    }

    /// Canonical sign, when the operator is Hermitian.
    pub fn sign(&self) -> Option<Sign> {
        match self.display_phase() {
            0 => Some(Sign::Plus),
            2 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn letters(&self) -> (PauliLetter, PauliLetter) {
        (
            PauliLetter::from_bits(self.x[0], self.z[0]),
            PauliLetter::from_bits(self.x[1], self.z[1]),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.phase == 0 && !self.has_support()
    }

    pub fn is_minus_identity(&self) -> bool {
        self.phase == 2 && !self.has_support()
    }

    fn has_support(&self) -> bool {
        self.x[0] || self.x[1] || self.z[0] || self.z[1]
    }

    /// Exact operator product including accumulated i-powers.
    pub fn mul(&self, rhs: &PauliOp) -> PauliOp {
        let mut phase = (self.phase + rhs.phase) % 4;
        // Pushing each right-hand X past a left-hand Z on the same qubit
        // costs a factor of -1.
        for q in 0..2 {
            if self.z[q] && rhs.x[q] {
                phase = (phase + 2) % 4;
            }
        }
        PauliOp {
            phase,
            x: [self.x[0] ^ rhs.x[0], self.x[1] ^ rhs.x[1]],
            z: [self.z[0] ^ rhs.z[0], self.z[1] ^ rhs.z[1]],
        }
    }

    /// Commutation from the symplectic inner product of the bit vectors.
    pub fn commutes_with(&self, rhs: &PauliOp) -> bool {
        let mut anti = false;
        for q in 0..2 {
            anti ^= self.x[q] && rhs.z[q];
            anti ^= self.z[q] && rhs.x[q];
        }
        !anti
    }

    pub fn negated(&self) -> PauliOp {
        PauliOp {
            phase: (self.phase + 2) % 4,
            ..*self
        }
    }

    pub fn times_i(&self) -> PauliOp {
        PauliOp {
            phase: (self.phase + 1) % 4,
            ..*self
        }
    }

    /// Exact 4×4 matrix of the operator.
    pub fn to_dense(&self) -> DenseMatrix {
        fn xz_factor(x: bool, z: bool) -> [[Gaussian; 2]; 2] {
            let one = G1;
            let neg = Gaussian { re: -1, im: 0 };
            match (x, z) {
                (false, false) => [[one, G0], [G0, one]],
                (true, false) => [[G0, one], [one, G0]],
                (false, true) => [[one, G0], [G0, neg]],
                // XZ = -iY
                (true, true) => [[G0, neg], [one, G0]],
            }
        }
        let a = xz_factor(self.x[0], self.z[0]);
        let b = xz_factor(self.x[1], self.z[1]);
        let unit = match self.phase {
            0 => Gaussian { re: 1, im: 0 },
            1 => Gaussian { re: 0, im: 1 },
            2 => Gaussian { re: -1, im: 0 },
            3 => Gaussian { re: 0, im: -1 },
            _ => unreachable!(),
        };
        let mut out = [[G0; 4]; 4];
        for (r1, a_row) in a.iter().enumerate() {
            for (c1, &a_val) in a_row.iter().enumerate() {
                for (r2, b_row) in b.iter().enumerate() {
                    for (c2, &b_val) in b_row.iter().enumerate() {
                        out[2 * r1 + r2][2 * c1 + c2] = unit * a_val * b_val;
                    }
                }
            }
        }
        out
    }

    /// The 15 sign-positive non-identity operators, in a fixed order.
    pub fn positive_paulis() -> Vec<PauliOp> {
        let mut out = Vec::with_capacity(15);
        for a in PauliLetter::ALL {
            for b in PauliLetter::ALL {
                if a == PauliLetter::I && b == PauliLetter::I {
                    continue;
                }
                out.push(PauliOp::from_letters(Sign::Plus, a, b));
            }
        }
        out
    }

    /// The 30 signed non-identity Hermitian operators.
    pub fn signed_non_identity() -> Vec<PauliOp> {
        let mut out = Vec::with_capacity(30);
        for p in PauliOp::positive_paulis() {
            out.push(p);
            out.push(p.negated());
        }
        out
    }

    /// All 32 Hermitian operators in canonical sign form, identity included.
    pub fn hermitian_canonical() -> Vec<PauliOp> {
        let mut out = Vec::with_capacity(32);
        for sign in [Sign::Plus, Sign::Minus] {
            for a in PauliLetter::ALL {
                for b in PauliLetter::ALL {
                    out.push(PauliOp::from_letters(sign, a, b));
                }
            }
        }
        out
    }

    /// Symplectic bit row in the fixed column order (x1, z1, x2, z2).
    pub(crate) fn symplectic_bits(&self) -> [bool; 4] {
        [self.x[0], self.z[0], self.x[1], self.z[1]]
    }

    pub(crate) fn leading_column(&self) -> Option<usize> {
        self.symplectic_bits().iter().position(|&b| b)
    }

    pub(crate) fn sort_key(&self) -> (u8, u8) {
        let bits = self.symplectic_bits();
        let mut key = 0u8;
        for (i, &b) in bits.iter().enumerate() {
            if b {
                key |= 1 << (3 - i);
            }
        }
        (key, self.phase)
    }
}

impl PartialOrd for PauliOp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PauliOp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.letters();
        let prefix = match self.display_phase() {
            0 => "+",
            1 => "i",
            2 => "-",
            3 => "-i",
            _ => unreachable!(),
        };
        write!(f, "{prefix}{a}{b}")
    }
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PauliParseError {
    #[error(
        "malformed Pauli {0:?}: expected an optional sign followed by two letters from I, X, Y, Z"
    )]
    Malformed(String),
}

impl FromStr for PauliOp {
    type Err = PauliParseError;

    /// Parse `sign? letter letter`, e.g. `+ZI`, `-IX`, `ZZ`. Phases other
    /// than ±1 are rejected: they cannot appear in a stored group.
    fn from_str(s: &str) -> Result<PauliOp, PauliParseError> {
        let malformed = || PauliParseError::Malformed(s.to_string());
        let mut chars: Vec<char> = s.chars().collect();
        let sign = match chars.first() {
            Some('+') => {
                chars.remove(0);
                Sign::Plus
            }
            // Accept the typographic minus alongside ASCII.
            Some('-') | Some('\u{2212}') => {
                chars.remove(0);
                Sign::Minus
            }
            _ => Sign::Plus,
        };
        if chars.len() != 2 {
            return Err(malformed());
        }
        let first = PauliLetter::from_char(chars[0]).ok_or_else(malformed)?;
        let second = PauliLetter::from_char(chars[1]).ok_or_else(malformed)?;
        Ok(PauliOp::from_letters(sign, first, second))
    }
}
