//! Checks against an independently written dense reference: literal 2×2
//! Pauli matrices, a hand-rolled Kronecker product and exact gate matrices.
//! Nothing here reuses the library's symplectic-to-dense path except as the
//! object under test.

use blochpair::group::{CliffordGate, StabilizerGroup};
use blochpair::oracle::{apply_unitary_quarter, density_from_ket, ExactDensity, ExactKet};
use blochpair::pauli::{Gaussian, PauliLetter, PauliOp, Qubit};

type Mat2 = [[Gaussian; 2]; 2];
type Mat4 = [[Gaussian; 4]; 4];

fn g(re: i64, im: i64) -> Gaussian {
    Gaussian::new(re, im)
}

const fn gz() -> Gaussian {
    Gaussian { re: 0, im: 0 }
}

fn letter_matrix(letter: PauliLetter) -> Mat2 {
    match letter {
        PauliLetter::I => [[g(1, 0), gz()], [gz(), g(1, 0)]],
        PauliLetter::X => [[gz(), g(1, 0)], [g(1, 0), gz()]],
        PauliLetter::Y => [[gz(), g(0, -1)], [g(0, 1), gz()]],
        PauliLetter::Z => [[g(1, 0), gz()], [gz(), g(-1, 0)]],
    }
}

fn kron(a: Mat2, b: Mat2) -> Mat4 {
    let mut out = [[gz(); 4]; 4];
    for r1 in 0..2 {
        for c1 in 0..2 {
            for r2 in 0..2 {
                for c2 in 0..2 {
                    out[2 * r1 + r2][2 * c1 + c2] = a[r1][c1] * b[r2][c2];
                }
            }
        }
    }
    out
}

fn matmul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[gz(); 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            for k in 0..4 {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    out
}

fn scaled(m: &Mat4, s: Gaussian) -> Mat4 {
    let mut out = *m;
    for row in out.iter_mut() {
        for v in row.iter_mut() {
            *v *= s;
        }
    }
    out
}

fn adjoint(m: &Mat4) -> Mat4 {
    let mut out = [[gz(); 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            out[r][c] = m[c][r].conj();
        }
    }
    out
}

fn identity4() -> Mat4 {
    let mut out = [[gz(); 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = g(1, 0);
    }
    out
}

/// Reference matrix of a canonical signed operator.
fn reference_dense(op: &PauliOp) -> Mat4 {
    let (a, b) = op.letters();
    let sign = op.sign().expect("canonical ops carry a sign");
    scaled(
        &kron(letter_matrix(a), letter_matrix(b)),
        g(sign.as_i64(), 0),
    )
}

/// Exact unnormalized gate matrix together with c where U·U† = c·I.
#[allow(clippy::needless_range_loop)]
fn gate_matrix(gate: CliffordGate) -> (Mat4, i64) {
    let single = |q: Qubit, m: Mat2| -> Mat4 {
        let id = letter_matrix(PauliLetter::I);
        match q {
            Qubit::One => kron(m, id),
            Qubit::Two => kron(id, m),
        }
    };
    match gate {
        // √2·H = X + Z
        CliffordGate::Hadamard(q) => {
            let h = [[g(1, 0), g(1, 0)], [g(1, 0), g(-1, 0)]];
            (single(q, h), 2)
        }
        CliffordGate::Phase(q) => {
            let s = [[g(1, 0), gz()], [gz(), g(0, 1)]];
            (single(q, s), 1)
        }
        CliffordGate::Cnot { control, target } => {
            // Permutation matrix: flip the target bit where the control is ↓.
            let mut m = [[gz(); 4]; 4];
            for col in 0..4usize {
                let bits = [col >> 1 & 1, col & 1];
                let mut out_bits = bits;
                if bits[control.index()] == 1 {
                    out_bits[target.index()] ^= 1;
                }
                let row = (out_bits[0] << 1) | out_bits[1];
                m[row][col] = g(1, 0);
            }
            (m, 1)
        }
    }
}

fn op(text: &str) -> PauliOp {
    text.parse().unwrap()
}

fn group(g1: &str, g2: &str) -> StabilizerGroup {
    StabilizerGroup::from_generators(op(g1), op(g2)).unwrap()
}

#[test]
fn to_dense_matches_the_reference_for_all_canonical_operators() {
    for p in PauliOp::hermitian_canonical() {
        assert_eq!(p.to_dense(), reference_dense(&p), "dense form of {p}");
    }
}

#[test]
fn to_dense_of_minus_z_tensor_y() {
    // Kronecker product by hand: entries (1,2)=i, (2,1)=-i, (3,4)=-i, (4,3)=i.
    let m = op("-ZY").to_dense();
    let mut expected = [[gz(); 4]; 4];
    expected[0][1] = g(0, 1);
    expected[1][0] = g(0, -1);
    expected[2][3] = g(0, -1);
    expected[3][2] = g(0, 1);
    assert_eq!(m, expected);
}

#[test]
fn products_match_dense_matrix_products() {
    let all = PauliOp::hermitian_canonical();
    for a in &all {
        for b in &all {
            let product = a.mul(b);
            // Transient products may be non-Hermitian; build their reference
            // from the dense factors instead.
            let expected = matmul(&reference_dense(a), &reference_dense(b));
            assert_eq!(product.to_dense(), expected, "{a} \u{b7} {b}");
        }
    }
}

#[test]
fn commutation_matches_the_dense_commutator() {
    let all = PauliOp::hermitian_canonical();
    for a in &all {
        for b in &all {
            let ab = matmul(&reference_dense(a), &reference_dense(b));
            let ba = matmul(&reference_dense(b), &reference_dense(a));
            assert_eq!(a.commutes_with(b), ab == ba, "commutation of {a}, {b}");
        }
    }
    assert!(op("ZZ").commutes_with(&op("XX")));
    assert!(!op("ZI").commutes_with(&op("XI")));
}

/// Dense-derived conjugation image of one operator under a gate.
fn single_image(gate: CliffordGate, operator: &PauliOp) -> PauliOp {
    let (u, scale) = gate_matrix(gate);
    let expected = matmul(&matmul(&u, &reference_dense(operator)), &adjoint(&u));
    for candidate in PauliOp::hermitian_canonical() {
        if scaled(&reference_dense(&candidate), g(scale, 0)) == expected {
            return candidate;
        }
    }
    panic!("conjugation left the signed Pauli set");
}

#[test]
fn clifford_conjugation_matches_dense_conjugation_on_every_catalog_group() {
    use blochpair::catalog::enumerate_catalog;
    use blochpair::group::STANDARD_GATES;
    let catalog = enumerate_catalog();
    for gate in STANDARD_GATES {
        for state in &catalog {
            let (g1, g2) = state.group.generators();
            let expected =
                StabilizerGroup::from_generators(single_image(gate, &g1), single_image(gate, &g2))
                    .expect("dense conjugation preserves group validity");
            assert_eq!(
                state.group.apply_clifford(gate),
                expected,
                "{gate} on state {}",
                state.id
            );
        }
    }
}

#[test]
fn quarter_turn_member_rule_matches_dense_conjugation() {
    // One turn: q ↦ q or i·p·q. t turns compose; compare against
    // (I + iP)^t · M · ((I - iP))^t with scale 2^t.
    let i = g(0, 1);
    for p in PauliOp::positive_paulis() {
        let p_dense = p.to_dense();
        let mut u = identity4();
        for (r, row) in p_dense.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                u[r][c] += i * v;
            }
        }
        let u_dag = adjoint(&u);
        for turns in 1..=3u32 {
            let mut u_t = identity4();
            let mut u_t_dag = identity4();
            for _ in 0..turns {
                u_t = matmul(&u_t, &u);
                u_t_dag = matmul(&u_t_dag, &u_dag);
            }
            for m in PauliOp::hermitian_canonical() {
                let mut rotated = m;
                for _ in 0..turns {
                    if !rotated.commutes_with(&p) {
                        rotated = p.mul(&rotated).times_i();
                    }
                }
                let expected = matmul(&matmul(&u_t, &m.to_dense()), &u_t_dag);
                assert_eq!(
                    scaled(&rotated.to_dense(), g(1 << turns, 0)),
                    expected,
                    "rotation by {p}, {turns} turn(s), on {m}"
                );
            }
        }
    }
}

#[test]
fn hadamard_conjugates_z_to_x_at_group_level() {
    let before = group("ZI", "IZ");
    let after = before.apply_clifford(CliffordGate::Hadamard(Qubit::One));
    assert_eq!(after, group("XI", "IZ"));
}

#[test]
fn cnot_spreads_x_and_z_at_group_level() {
    let before = group("XI", "IZ");
    let after = before.apply_clifford(CliffordGate::Cnot {
        control: Qubit::One,
        target: Qubit::Two,
    });
    assert_eq!(after, group("XX", "ZZ"));
}

#[test]
fn ket_evolution_matches_dense_projector_conjugation() {
    let kets = [
        ExactKet::from_ints([(1, 0), (0, 0), (0, 0), (0, 0)]).unwrap(),
        ExactKet::from_ints([(0, 0), (1, 0), (-1, 0), (0, 0)]).unwrap(),
        ExactKet::from_ints([(1, 0), (0, 0), (0, 0), (0, 1)]).unwrap(),
        ExactKet::from_ints([(1, 0), (-1, 0), (0, -1), (0, -1)]).unwrap(),
    ];
    let i = g(0, 1);
    for p in PauliOp::positive_paulis() {
        let mut u = identity4();
        let p_dense = p.to_dense();
        for (r, row) in p_dense.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                u[r][c] += i * v;
            }
        }
        let u_dag = adjoint(&u);
        for ket in &kets {
            let evolved = apply_unitary_quarter(p, ket);
            let amps = ket.amplitudes();
            let mut outer = [[gz(); 4]; 4];
            for r in 0..4 {
                for c in 0..4 {
                    outer[r][c] = amps[r] * amps[c].conj();
                }
            }
            let conjugated = matmul(&matmul(&u, &outer), &u_dag);
            let expected = ExactDensity::new(conjugated, 2 * ket.norm_sq()).unwrap();
            assert_eq!(density_from_ket(&evolved), expected, "rotation {p}");
        }
    }
}
