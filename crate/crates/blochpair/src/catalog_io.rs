//! Catalog persistence: a JSON array of state records with exact integer
//! payloads only.
//!
//! Each record is `{id, generators, class, ket, frame}`. A ket amplitude is
//! a triple `[re, im, d]` meaning `(re + im·i) / 2^(d/2)`, with `d` the
//! base-2 logarithm of the squared norm. Frames serialize as
//! `{"arrow1": "+z", "arrow2": "-x"}` or
//! `{"alignment": {"x1": "+y2", "y1": "+x2", "z1": "+z2"}}`.
//!
//! Reading re-validates everything: group closure, classification, the
//! eigen-equations of the ket and the frame correspondence. A file that
//! parses but violates any of those fails with `InvariantViolation`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::StabilizerState;
use crate::frame::{frame_from_group, Alignment, Axis, FrameRep, SignedAxis};
use crate::group::{StabilizerGroup, StateClass};
use crate::oracle::{stabilizes, ExactKet};
use crate::pauli::{Gaussian, PauliOp, Sign};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("schema: {0}")]
    Schema(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct StateRecord {
    pub id: usize,
    pub generators: [String; 2],
    pub class: String,
    pub ket: [[i64; 3]; 4],
    pub frame: FrameRecord,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged, deny_unknown_fields)]
pub enum FrameRecord {
    Separable { arrow1: String, arrow2: String },
    Entangled { alignment: AlignmentRecord },
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AlignmentRecord {
    pub x1: String,
    pub y1: String,
    pub z1: String,
}

pub fn state_record(state: &StabilizerState) -> StateRecord {
    let (g1, g2) = state.group.generators();
    let norm = state.ket.norm_sq();
    debug_assert!(
        norm > 0 && norm & (norm - 1) == 0,
        "catalog norms are powers of two"
    );
    let log = norm.trailing_zeros() as i64;
    let ket = state.ket.amplitudes().map(|a: Gaussian| [a.re, a.im, log]);
    StateRecord {
        id: state.id,
        generators: [g1.to_string(), g2.to_string()],
        class: state.class.to_string(),
        ket,
        frame: frame_record(&state.frame),
    }
}

pub fn frame_record(frame: &FrameRep) -> FrameRecord {
    match frame {
        FrameRep::Separable { arrow1, arrow2 } => FrameRecord::Separable {
            arrow1: arrow1.to_string(),
            arrow2: arrow2.to_string(),
        },
        FrameRep::Entangled { alignment } => {
            let paired = |axis: Axis| {
                let partner = alignment.column(axis);
                format!("{}{}2", partner.sign, partner.axis)
            };
            FrameRecord::Entangled {
                alignment: AlignmentRecord {
                    x1: paired(Axis::X),
                    y1: paired(Axis::Y),
                    z1: paired(Axis::Z),
                },
            }
        }
    }
}

fn parse_signed_axis(text: &str, expect_sphere: Option<char>) -> Result<SignedAxis, CatalogError> {
    let bad = || CatalogError::Schema(format!("malformed axis {text:?}"));
    let mut chars = text.chars();
    let sign = match chars.next().ok_or_else(bad)? {
        '+' => Sign::Plus,
        '-' | '\u{2212}' => Sign::Minus,
        _ => return Err(bad()),
    };
    let axis = match chars.next().ok_or_else(bad)? {
        'x' => Axis::X,
        'y' => Axis::Y,
        'z' => Axis::Z,
        _ => return Err(bad()),
    };
    match (expect_sphere, chars.next()) {
        (None, None) => {}
        (Some(want), Some(got)) if want == got => {
            if chars.next().is_some() {
                return Err(bad());
            }
        }
        _ => return Err(bad()),
    }
    Ok(SignedAxis::new(axis, sign))
}

pub fn frame_from_record(record: &FrameRecord) -> Result<FrameRep, CatalogError> {
    match record {
        FrameRecord::Separable { arrow1, arrow2 } => Ok(FrameRep::Separable {
            arrow1: parse_signed_axis(arrow1, None)?,
            arrow2: parse_signed_axis(arrow2, None)?,
        }),
        FrameRecord::Entangled { alignment } => {
            let mut entries = [[0i8; 3]; 3];
            for (col, text) in [
                (Axis::X, &alignment.x1),
                (Axis::Y, &alignment.y1),
                (Axis::Z, &alignment.z1),
            ] {
                let partner = parse_signed_axis(text, Some('2'))?;
                entries[partner.axis.index()][col.index()] = partner.sign.as_i64() as i8;
            }
            let alignment = Alignment::from_entries(entries)
                .map_err(|e| CatalogError::InvariantViolation(e.to_string()))?;
            Ok(FrameRep::Entangled { alignment })
        }
    }
}

pub fn state_from_record(
    record: &StateRecord,
    expected_id: usize,
) -> Result<StabilizerState, CatalogError> {
    if record.id != expected_id {
        return Err(CatalogError::InvariantViolation(format!(
            "state ids must be sequential: found {} at position {expected_id}",
            record.id
        )));
    }
    let parse_gen = |text: &String| -> Result<PauliOp, CatalogError> {
        text.parse()
            .map_err(|e: crate::pauli::PauliParseError| CatalogError::Schema(e.to_string()))
    };
    let g1 = parse_gen(&record.generators[0])?;
    let g2 = parse_gen(&record.generators[1])?;
    let group = StabilizerGroup::from_generators(g1, g2)
        .map_err(|e| CatalogError::InvariantViolation(format!("state {expected_id}: {e}")))?;

    let class = match record.class.as_str() {
        "separable" => StateClass::Separable,
        "entangled" => StateClass::Entangled,
        other => return Err(CatalogError::Schema(format!("unknown class {other:?}"))),
    };
    if class != group.classify() {
        return Err(CatalogError::InvariantViolation(format!(
            "state {expected_id}: class does not match the group"
        )));
    }

    let log = record.ket[0][2];
    if record.ket.iter().any(|t| t[2] != log) {
        return Err(CatalogError::InvariantViolation(format!(
            "state {expected_id}: ket amplitudes disagree on the norm exponent"
        )));
    }
    if !(0..=62).contains(&log) {
        return Err(CatalogError::Schema(format!(
            "state {expected_id}: norm exponent {log} out of range"
        )));
    }
    let amplitudes = record.ket.map(|[re, im, _]| Gaussian::new(re, im));
    let ket = ExactKet::new(amplitudes)
        .map_err(|e| CatalogError::InvariantViolation(format!("state {expected_id}: {e}")))?;
    if ket.norm_sq() != 1i64 << log {
        return Err(CatalogError::InvariantViolation(format!(
            "state {expected_id}: amplitudes do not sum to the declared norm"
        )));
    }
    for member in group.members() {
        if !stabilizes(*member, &ket) {
            return Err(CatalogError::InvariantViolation(format!(
                "state {expected_id}: member {member} does not fix the ket"
            )));
        }
    }

    let frame = frame_from_record(&record.frame)?;
    if frame != frame_from_group(&group) {
        return Err(CatalogError::InvariantViolation(format!(
            "state {expected_id}: frame does not match the group"
        )));
    }

    Ok(StabilizerState {
        id: record.id,
        group,
        class,
        ket,
        frame,
    })
}

pub fn catalog_to_json(states: &[StabilizerState]) -> String {
    let records: Vec<StateRecord> = states.iter().map(state_record).collect();
    serde_json::to_string_pretty(&records).expect("records serialize")
}

pub fn catalog_from_json(text: &str) -> Result<Vec<StabilizerState>, CatalogError> {
    let records: Vec<StateRecord> =
        serde_json::from_str(text).map_err(|e| CatalogError::Schema(e.to_string()))?;
    records
        .iter()
        .enumerate()
        .map(|(i, r)| state_from_record(r, i))
        .collect()
}

/// Lossless catalog export.
pub fn write_catalog(states: &[StabilizerState], path: &Path) -> Result<(), CatalogError> {
    fs::write(path, catalog_to_json(states))?;
    Ok(())
}

/// Read a catalog back, re-validating every stored invariant.
pub fn read_catalog(path: &Path) -> Result<Vec<StabilizerState>, CatalogError> {
    let text = fs::read_to_string(path)?;
    catalog_from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::enumerate_catalog;

    #[test]
    fn full_catalog_round_trips() {
        let catalog = enumerate_catalog();
        let json = catalog_to_json(&catalog);
        let restored = catalog_from_json(&json).unwrap();
        assert_eq!(catalog, restored);
    }

    #[test]
    fn minus_identity_generator_is_an_invariant_violation() {
        let catalog = enumerate_catalog();
        let mut records: Vec<StateRecord> = catalog.iter().map(state_record).collect();
        records[0].generators[0] = "-II".to_string();
        let json = serde_json::to_string(&records).unwrap();
        match catalog_from_json(&json) {
            Err(CatalogError::InvariantViolation(_)) => {}
            other => panic!("expected InvariantViolation, got {other:?}"),
        }
    }

    #[test]
    fn bad_pauli_text_is_a_schema_error() {
        let catalog = enumerate_catalog();
        let mut records: Vec<StateRecord> = catalog.iter().map(state_record).collect();
        records[0].generators[0] = "ZQ".to_string();
        let json = serde_json::to_string(&records).unwrap();
        match catalog_from_json(&json) {
            Err(CatalogError::Schema(_)) => {}
            other => panic!("expected Schema, got {other:?}"),
        }
    }

    #[test]
    fn truncated_file_is_a_schema_error() {
        let catalog = enumerate_catalog();
        let json = catalog_to_json(&catalog);
        let truncated = &json[..json.len() / 2];
        match catalog_from_json(truncated) {
            Err(CatalogError::Schema(_)) => {}
            other => panic!("expected Schema, got {other:?}"),
        }
    }

    #[test]
    fn tampered_ket_is_an_invariant_violation() {
        let catalog = enumerate_catalog();
        let mut records: Vec<StateRecord> = catalog.iter().map(state_record).collect();
        records[3].ket[0] = [7, 0, records[3].ket[0][2]];
        let json = serde_json::to_string(&records).unwrap();
        match catalog_from_json(&json) {
            Err(CatalogError::InvariantViolation(_)) => {}
            other => panic!("expected InvariantViolation, got {other:?}"),
        }
    }

    #[test]
    fn tampered_frame_is_an_invariant_violation() {
        let catalog = enumerate_catalog();
        let mut records: Vec<StateRecord> = catalog.iter().map(state_record).collect();
        // Swap the frames of a separable and another separable state.
        let other = records[1].frame.clone();
        let zero = records[0].frame.clone();
        assert_ne!(other, zero);
        records[0].frame = other;
        let json = serde_json::to_string(&records).unwrap();
        match catalog_from_json(&json) {
            Err(CatalogError::InvariantViolation(_)) => {}
            other => panic!("expected InvariantViolation, got {other:?}"),
        }
    }

    #[test]
    fn files_round_trip_on_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalog.json");
        let catalog = enumerate_catalog();
        write_catalog(&catalog, &path).unwrap();
        let restored = read_catalog(&path).unwrap();
        assert_eq!(catalog, restored);
    }
}
