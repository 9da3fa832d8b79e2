//! Independent dense layer: exact kets, density matrices, the group-sum
//! identity ρ = (1/4)·ΣM, eigen-equation checks and brute-force stabilizer
//! search.
//!
//! All arithmetic is over Gaussian integers. A ket keeps its amplitudes
//! unnormalized next to `norm_sq = Σ|amplitude|²`, so the physical vector is
//! `amplitudes / √norm_sq`; a density keeps an integer matrix next to its
//! denominator. No floating point appears anywhere.

use std::fmt;

use thiserror::Error;

use crate::group::StabilizerGroup;
use crate::pauli::{DenseMatrix, Gaussian, PauliOp, G0, G1};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum OracleError {
    #[error("density is not a rank-1 projector")]
    NotPure,
    #[error("ket is not a stabilizer state: fewer than 3 signed Paulis fix it")]
    NotStabilizerState,
    #[error("ket amplitudes are all zero")]
    ZeroKet,
    #[error("invalid density: {0}")]
    InvalidDensity(&'static str),
}

/// An exact state vector: Gaussian-integer amplitudes over √norm_sq.
///
/// `norm_sq` is derived from the amplitudes, so the representation is always
/// normalized in the mathematical sense; for catalog states it is a power of
/// two (1, 2 or 4).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactKet {
    amplitudes: [Gaussian; 4],
    norm_sq: i64,
}

impl ExactKet {
    pub fn new(amplitudes: [Gaussian; 4]) -> Result<ExactKet, OracleError> {
        let norm_sq: i64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm_sq == 0 {
            return Err(OracleError::ZeroKet);
        }
        Ok(ExactKet {
            amplitudes,
            norm_sq,
        })
    }

    pub fn from_ints(amplitudes: [(i64, i64); 4]) -> Result<ExactKet, OracleError> {
        ExactKet::new(amplitudes.map(|(re, im)| Gaussian::new(re, im)))
    }

    pub fn amplitudes(&self) -> &[Gaussian; 4] {
        &self.amplitudes
    }

    pub fn norm_sq(&self) -> i64 {
        self.norm_sq
    }

    /// Equality of the physical states: global phase and scale ignored.
    pub fn projectively_equal(&self, other: &ExactKet) -> bool {
        density_from_ket(self) == density_from_ket(other)
    }
}

impl fmt::Display for ExactKet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.amplitudes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_gaussian(*a))?;
        }
        write!(f, ")")?;
        let norm = self.norm_sq;
        if norm > 1 {
            write!(f, "/{}", format_sqrt(norm))?;
        }
        Ok(())
    }
}

/// An exact density matrix `entries / denom`, Hermitian with unit trace,
/// stored with the greatest common divisor removed.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactDensity {
    entries: DenseMatrix,
    denom: i64,
}

impl ExactDensity {
    pub fn new(entries: DenseMatrix, denom: i64) -> Result<ExactDensity, OracleError> {
        if denom <= 0 {
            return Err(OracleError::InvalidDensity("denominator must be positive"));
        }
        for (r, row) in entries.iter().enumerate() {
            for (c, value) in row.iter().enumerate() {
                if *value != entries[c][r].conj() {
                    return Err(OracleError::InvalidDensity("matrix is not Hermitian"));
                }
            }
        }
        let trace: Gaussian = (0..4).map(|i| entries[i][i]).sum();
        if trace != Gaussian::new(denom, 0) {
            return Err(OracleError::InvalidDensity(
                "trace does not equal the denominator",
            ));
        }
        Ok(ExactDensity::reduce(entries, denom))
    }

    fn reduce(mut entries: DenseMatrix, mut denom: i64) -> ExactDensity {
        let mut g = denom;
        for row in &entries {
            for v in row {
                g = gcd(g, v.re.abs());
                g = gcd(g, v.im.abs());
            }
        }
        if g > 1 {
            for row in &mut entries {
                for v in row.iter_mut() {
                    *v = Gaussian::new(v.re / g, v.im / g);
                }
            }
            denom /= g;
        }
        ExactDensity { entries, denom }
    }

    pub fn entries(&self) -> &DenseMatrix {
        &self.entries
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// True when the matrix is idempotent, i.e. a projector.
    pub fn is_projector(&self) -> bool {
        let squared = mat_mul(&self.entries, &self.entries);
        let scaled = mat_scale(&self.entries, Gaussian::new(self.denom, 0));
        squared == scaled
    }
}

impl fmt::Display for ExactDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            writeln!(f)?;
        } else {
            writeln!(f, "(1/{}) \u{b7}", self.denom)?;
        }
        for row in &self.entries {
            write!(f, "  [")?;
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", format_gaussian(*v))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Sum the four group members and divide by 4: ρ = (1/2ⁿ)·Σ M with n = 2.
pub fn density_from_group(group: &StabilizerGroup) -> ExactDensity {
    let mut sum = [[G0; 4]; 4];
    for member in group.members() {
        let dense = member.to_dense();
        for r in 0..4 {
            for c in 0..4 {
                sum[r][c] += dense[r][c];
            }
        }
    }
    ExactDensity::reduce(sum, 4)
}

/// The projector |ψ⟩⟨ψ| of an exact ket.
pub fn density_from_ket(ket: &ExactKet) -> ExactDensity {
    let amps = ket.amplitudes();
    let mut entries = [[G0; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            entries[r][c] = amps[r] * amps[c].conj();
        }
    }
    ExactDensity::reduce(entries, ket.norm_sq())
}

/// Extract the unique unit eigenvector of a rank-1 projector. The global
/// phase is fixed by making the first nonzero amplitude a positive real.
pub fn ket_from_density(density: &ExactDensity) -> Result<ExactKet, OracleError> {
    if !density.is_projector() {
        return Err(OracleError::NotPure);
    }
    // For ρ = ψψ†, column j of the entries is ψ·conj(ψ_j)·denom. Taking the
    // first column with a nonzero diagonal lands the first nonzero amplitude
    // on a positive real, which is exactly the wanted phase convention.
    let pivot = (0..4)
        .find(|&j| density.entries[j][j] != G0)
        .ok_or(OracleError::NotPure)?;
    let mut column = [G0; 4];
    for (k, value) in column.iter_mut().enumerate() {
        *value = density.entries[k][pivot];
    }
    let mut g: i64 = 0;
    for v in &column {
        g = gcd(g, v.re.abs());
        g = gcd(g, v.im.abs());
    }
    if g > 1 {
        for v in column.iter_mut() {
            *v = Gaussian::new(v.re / g, v.im / g);
        }
    }
    ExactKet::new(column)
}

/// Exact eigen-equation check: M·amplitudes = amplitudes.
pub fn stabilizes(member: PauliOp, ket: &ExactKet) -> bool {
    let image = mat_vec(&member.to_dense(), ket.amplitudes());
    image == *ket.amplitudes()
}

/// Scan all 30 signed non-identity Hermitian Paulis for the three that fix
/// the ket and close them into a group.
pub fn stabilizer_of_ket(ket: &ExactKet) -> Result<StabilizerGroup, OracleError> {
    let fixing: Vec<PauliOp> = PauliOp::signed_non_identity()
        .into_iter()
        .filter(|m| stabilizes(*m, ket))
        .collect();
    if fixing.len() != 3 {
        return Err(OracleError::NotStabilizerState);
    }
    let group = StabilizerGroup::from_generators(fixing[0], fixing[1])
        .map_err(|_| OracleError::NotStabilizerState)?;
    if !group.contains(&fixing[2]) {
        return Err(OracleError::NotStabilizerState);
    }
    Ok(group)
}

/// Apply (I + iP)/√2 exactly: amplitudes pick up i·P·amplitudes and the
/// squared norm doubles.
pub fn apply_unitary_quarter(generator: PauliOp, ket: &ExactKet) -> ExactKet {
    debug_assert!(generator.is_hermitian());
    let rotated = mat_vec(&generator.to_dense(), ket.amplitudes());
    let i = Gaussian::new(0, 1);
    let mut amps = *ket.amplitudes();
    for (a, r) in amps.iter_mut().zip(rotated) {
        *a += i * r;
    }
    ExactKet {
        amplitudes: amps,
        norm_sq: 2 * ket.norm_sq(),
    }
}

/// 2×2 reduced state of qubit 1, with its own denominator.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ReducedDensity {
    pub entries: [[Gaussian; 2]; 2],
    pub denom: i64,
}

impl ReducedDensity {
    pub fn is_maximally_mixed(&self) -> bool {
        let two = Gaussian::new(2, 0);
        let d = Gaussian::new(self.denom, 0);
        two * self.entries[0][0] == d
            && two * self.entries[1][1] == d
            && self.entries[0][1] == G0
            && self.entries[1][0] == G0
    }
}

/// Partial trace over qubit 2.
pub fn reduced_density_qubit1(density: &ExactDensity) -> ReducedDensity {
    let mut entries = [[G0; 2]; 2];
    for (a, row) in entries.iter_mut().enumerate() {
        for (b, value) in row.iter_mut().enumerate() {
            for k in 0..2 {
                *value += density.entries[2 * a + k][2 * b + k];
            }
        }
    }
    let mut g = density.denom;
    for row in &entries {
        for v in row {
            g = gcd(g, v.re.abs());
            g = gcd(g, v.im.abs());
        }
    }
    if g > 1 {
        for row in entries.iter_mut() {
            for v in row.iter_mut() {
                *v = Gaussian::new(v.re / g, v.im / g);
            }
        }
    }
    ReducedDensity {
        entries,
        denom: density.denom / g.max(1),
    }
}

pub(crate) fn mat_mul(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let mut out = [[G0; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            let mut acc = G0;
            for k in 0..4 {
                acc += a[r][k] * b[k][c];
            }
            out[r][c] = acc;
        }
    }
    out
}

pub(crate) fn mat_vec(m: &DenseMatrix, v: &[Gaussian; 4]) -> [Gaussian; 4] {
    let mut out = [G0; 4];
    for r in 0..4 {
        for k in 0..4 {
            out[r] += m[r][k] * v[k];
        }
    }
    out
}

pub(crate) fn mat_scale(m: &DenseMatrix, s: Gaussian) -> DenseMatrix {
    let mut out = *m;
    for row in out.iter_mut() {
        for v in row.iter_mut() {
            *v *= s;
        }
    }
    out
}

pub(crate) fn identity_matrix() -> DenseMatrix {
    let mut out = [[G0; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = G1;
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn format_gaussian(v: Gaussian) -> String {
    match (v.re, v.im) {
        (0, 0) => "0".to_string(),
        (re, 0) => re.to_string(),
        (0, 1) => "i".to_string(),
        (0, -1) => "-i".to_string(),
        (0, im) => format!("{im}i"),
        (re, 1) => format!("{re}+i"),
        (re, -1) => format!("{re}-i"),
        (re, im) if im > 0 => format!("{re}+{im}i"),
        (re, im) => format!("{re}{im}i"),
    }
}

/// Render √n for the power-of-two norms that occur in practice: √1 = 1,
/// √2, √4 = 2, √8 = 2√2, ...
fn format_sqrt(n: i64) -> String {
    let mut root = 1i64;
    let mut rest = n;
    while rest % 4 == 0 {
        root *= 2;
        rest /= 4;
    }
    match (root, rest) {
        (r, 1) => r.to_string(),
        (1, rem) => format!("\u{221a}{rem}"),
        (r, rem) => format!("{r}\u{221a}{rem}"),
    }
}
