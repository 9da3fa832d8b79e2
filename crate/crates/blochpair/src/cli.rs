//! Command-line surface: catalog listing/export, state inspection, gate and
//! rotation application, axis permutation, SVG rendering, gate-path search
//! and the runtime verification suite.
//!
//! Human-readable text by default; `--json` emits the catalog record
//! schemas. Exit status 0 on success, 1 on domain errors (the message names
//! the violated precondition), 2 on usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{enumerate_catalog, gate_path, resolve_alias, state_id_of, StabilizerState};
use crate::catalog_io::{catalog_to_json, state_record, write_catalog};
use crate::frame::{
    fixed_axis_pairs, frame_rotation_of, group_from_frame, permute_frame, Axis, AxisPermutation,
    SignedAxis,
};
use crate::group::{CliffordGate, StabilizerGroup};
use crate::oracle::{density_from_group, reduced_density_qubit1};
use crate::pauli::{PauliOp, Sign};
use crate::render::{render_svg, SceneSpec};

#[derive(Parser, Debug)]
#[command(
    name = "blochpair",
    version,
    about = "Exact two-qubit stabilizer states and their paired-Bloch-sphere pictures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List all 60 states, or export the catalog as JSON
    Catalog {
        /// Emit the JSON catalog instead of the table
        #[arg(long)]
        json: bool,
        /// Write the output to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show one state: group, class, ket, density, frame and fixed axes
    Show {
        #[command(flatten)]
        selector: StateSelector,
        #[arg(long)]
        json: bool,
    },
    /// Apply a Clifford gate or a quarter-turn rotation to a state
    Apply {
        #[command(flatten)]
        selector: StateSelector,
        /// Gate name: H1, H2, S1, S2, CNOT12 or CNOT21
        #[arg(long, conflicts_with_all = ["rotation", "turns"])]
        gate: Option<String>,
        /// Sign-positive Pauli generating the rotation, e.g. IY or XY
        #[arg(long)]
        rotation: Option<String>,
        /// Number of quarter turns (1..=3)
        #[arg(long, default_value_t = 1)]
        turns: u32,
        #[arg(long)]
        json: bool,
    },
    /// Relabel the second sphere's axes along a closed cycle
    Permute {
        #[command(flatten)]
        selector: StateSelector,
        /// Cycle such as "x2>z2>y2>x2"; signed targets like "-y2" allowed
        #[arg(long)]
        cycle: String,
        #[arg(long)]
        json: bool,
    },
    /// Run every runtime invariant check
    Verify {
        /// Seed for the randomized path-replay check
        #[arg(long, default_value_t = 0x0b10c)]
        seed: u64,
    },
    /// Render a state's two-sphere picture as SVG
    Render {
        #[command(flatten)]
        selector: StateSelector,
        /// Output file
        #[arg(long)]
        out: PathBuf,
    },
    /// Shortest gate sequence between two states
    Path {
        /// Source state: id, alias or generator pair
        #[arg(long)]
        from: String,
        /// Target state: id, alias or generator pair
        #[arg(long)]
        to: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct StateSelector {
    /// Catalog index (0..=59)
    #[arg(long)]
    id: Option<usize>,
    /// Named state: up-up, up-left, Psi-, Phi+i
    #[arg(long)]
    state: Option<String>,
    /// Generator pair, e.g. "+ZI,+IZ"
    #[arg(long)]
    generators: Option<String>,
}

/// Domain-level failure; the message names the violated precondition.
#[derive(Debug)]
pub struct CliError(pub String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for CliError {}

fn err(message: impl Into<String>) -> CliError {
    CliError(message.into())
}

fn parse_generator_pair(text: &str) -> Result<StabilizerGroup, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(err(format!(
            "expected two comma-separated Paulis, got {text:?}"
        )));
    }
    let g1: PauliOp = parts[0].parse().map_err(|e| err(format!("{e}")))?;
    let g2: PauliOp = parts[1].parse().map_err(|e| err(format!("{e}")))?;
    StabilizerGroup::from_generators(g1, g2).map_err(|e| err(format!("{e}")))
}

fn resolve_selector(
    catalog: &[StabilizerState],
    selector: &StateSelector,
) -> Result<usize, CliError> {
    if let Some(id) = selector.id {
        if id >= catalog.len() {
            return Err(err(format!(
                "state id {id} out of range: the catalog has {} states",
                catalog.len()
            )));
        }
        return Ok(id);
    }
    if let Some(name) = &selector.state {
        let group = resolve_text_state(catalog, name)?;
        return Ok(group);
    }
    let group = parse_generator_pair(
        selector
            .generators
            .as_ref()
            .expect("clap enforces one selector"),
    )?;
    state_id_of(catalog, &group).ok_or_else(|| err("group is not a stabilizer state"))
}

/// Accept an alias, a numeric id, or a generator pair.
fn resolve_text_state(catalog: &[StabilizerState], text: &str) -> Result<usize, CliError> {
    if let Some(group) = resolve_alias(text) {
        return state_id_of(catalog, &group)
            .ok_or_else(|| err("alias resolved outside the catalog"));
    }
    if let Ok(id) = text.parse::<usize>() {
        if id < catalog.len() {
            return Ok(id);
        }
        return Err(err(format!(
            "state id {id} out of range: the catalog has {} states",
            catalog.len()
        )));
    }
    if text.contains(',') {
        let group = parse_generator_pair(text)?;
        return state_id_of(catalog, &group).ok_or_else(|| err("group is not a stabilizer state"));
    }
    Err(err(format!(
        "unknown state {text:?}: expected an alias (up-up, up-left, Psi-, Phi+i), an id, or a generator pair"
    )))
}

fn parse_cycle(text: &str) -> Result<AxisPermutation, CliError> {
    let tokens: Vec<&str> = text.split('>').map(str::trim).collect();
    if tokens.len() < 2 {
        return Err(err(format!(
            "cycle {text:?} must name at least two sphere-2 axes separated by '>'"
        )));
    }
    let parse_token = |token: &str| -> Result<SignedAxis, CliError> {
        let bad = || {
            err(format!(
                "malformed cycle token {token:?}: expected e.g. x2 or -y2"
            ))
        };
        let mut chars: Vec<char> = token.chars().collect();
        let sign = match chars.first() {
            Some('+') => {
                chars.remove(0);
                Sign::Plus
            }
            Some('-') | Some('\u{2212}') => {
                chars.remove(0);
                Sign::Minus
            }
            _ => Sign::Plus,
        };
        if chars.len() != 2 || chars[1] != '2' {
            return Err(bad());
        }
        let axis = match chars[0] {
            'x' => Axis::X,
            'y' => Axis::Y,
            'z' => Axis::Z,
            _ => return Err(bad()),
        };
        Ok(SignedAxis::new(axis, sign))
    };
    let parsed: Vec<SignedAxis> = tokens
        .iter()
        .map(|t| parse_token(t))
        .collect::<Result<_, _>>()?;
    let first = parsed[0];
    let last = parsed[parsed.len() - 1];
    if first.sign != Sign::Plus {
        return Err(err("the cycle's first axis must be unsigned"));
    }
    if last.axis != first.axis {
        return Err(err(format!(
            "cycle {text:?} must close: the last axis must equal the first"
        )));
    }
    let mut map: [Option<SignedAxis>; 3] = [None; 3];
    for window in parsed.windows(2) {
        let source = window[0].axis;
        if map[source.index()].is_some() {
            return Err(err(format!("cycle {text:?} names axis {source}2 twice")));
        }
        map[source.index()] = Some(window[1]);
    }
    let full = Axis::ALL.map(|axis| map[axis.index()].unwrap_or(SignedAxis::new(axis, Sign::Plus)));
    AxisPermutation::new(full).map_err(|e| err(format!("{e}")))
}

#[derive(Serialize)]
struct PathRecord {
    from: usize,
    to: usize,
    gates: Vec<String>,
}

fn describe_state(catalog: &[StabilizerState], id: usize) -> String {
    let state = &catalog[id];
    let mut out = String::new();
    let _ = writeln!(out, "state {id} ({})", state.class);
    let _ = writeln!(out, "group: {}", state.group);
    let (g1, g2) = state.group.generators();
    let _ = writeln!(out, "generators: {g1}, {g2}");
    let _ = writeln!(out, "ket: {}", state.ket);
    let _ = write!(out, "density: {}", density_from_group(&state.group));
    let reduced = reduced_density_qubit1(&density_from_group(&state.group));
    let _ = writeln!(
        out,
        "reduced qubit-1 state: {}",
        if reduced.is_maximally_mixed() {
            "maximally mixed (I/2)"
        } else {
            "pure"
        }
    );
    let _ = writeln!(out, "frame: {}", state.frame);
    let locks: Vec<String> = fixed_axis_pairs(&state.group)
        .iter()
        .map(|l| l.to_string())
        .collect();
    let _ = writeln!(out, "fixed axes: {}", locks.join(", "));
    out
}

fn state_json(catalog: &[StabilizerState], id: usize) -> String {
    serde_json::to_string_pretty(&state_record(&catalog[id])).expect("record serializes")
}

/// Execute a parsed command, returning what should go to stdout.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Catalog { json, out } => {
            let catalog = enumerate_catalog();
            if json {
                let text = catalog_to_json(&catalog);
                if let Some(path) = out {
                    write_catalog(&catalog, &path).map_err(|e| err(format!("{e}")))?;
                    Ok(format!(
                        "wrote {} states to {}\n",
                        catalog.len(),
                        path.display()
                    ))
                } else {
                    Ok(text + "\n")
                }
            } else {
                let mut table = String::new();
                for state in &catalog {
                    let (g1, g2) = state.group.generators();
                    let _ = writeln!(
                        table,
                        "{:>2}  {:<10} {}, {}",
                        state.id,
                        state.class.to_string(),
                        g1,
                        g2
                    );
                }
                if let Some(path) = out {
                    std::fs::write(&path, &table).map_err(|e| err(format!("io: {e}")))?;
                    Ok(format!(
                        "wrote {} states to {}\n",
                        catalog.len(),
                        path.display()
                    ))
                } else {
                    Ok(table)
                }
            }
        }
        Command::Show { selector, json } => {
            let catalog = enumerate_catalog();
            let id = resolve_selector(&catalog, &selector)?;
            if json {
                Ok(state_json(&catalog, id) + "\n")
            } else {
                Ok(describe_state(&catalog, id))
            }
        }
        Command::Apply {
            selector,
            gate,
            rotation,
            turns,
            json,
        } => {
            let catalog = enumerate_catalog();
            let id = resolve_selector(&catalog, &selector)?;
            let group = &catalog[id].group;
            let mut plane_note = None;
            let moved = match (gate, rotation) {
                (Some(name), None) => {
                    let gate: CliffordGate = name.parse().map_err(|e: String| err(e))?;
                    group.apply_clifford(gate)
                }
                (None, Some(pauli_text)) => {
                    let generator: PauliOp = pauli_text
                        .to_ascii_uppercase()
                        .parse()
                        .map_err(|e| err(format!("{e}")))?;
                    let result = group
                        .apply_rotation(generator, turns)
                        .map_err(|e| err(format!("{e}")))?;
                    plane_note = Some(frame_rotation_of(generator, turns));
                    result
                }
                _ => return Err(err("exactly one of --gate or --rotation is required")),
            };
            let moved_id = state_id_of(&catalog, &moved).expect("moves stay inside the catalog");
            if json {
                Ok(state_json(&catalog, moved_id) + "\n")
            } else {
                let mut out = format!("state {id} -> state {moved_id}\n");
                if let Some(plane) = plane_note {
                    let _ = writeln!(out, "rotation: {plane}");
                }
                out.push_str(&describe_state(&catalog, moved_id));
                Ok(out)
            }
        }
        Command::Permute {
            selector,
            cycle,
            json,
        } => {
            let catalog = enumerate_catalog();
            let id = resolve_selector(&catalog, &selector)?;
            let permutation = parse_cycle(&cycle)?;
            let frame =
                permute_frame(&catalog[id].frame, &permutation).map_err(|e| err(format!("{e}")))?;
            let group = group_from_frame(&frame).map_err(|e| err(format!("{e}")))?;
            let moved_id =
                state_id_of(&catalog, &group).expect("axis permutations stay inside the catalog");
            if json {
                Ok(state_json(&catalog, moved_id) + "\n")
            } else {
                let mut out = format!("state {id} -> state {moved_id}\n");
                out.push_str(&describe_state(&catalog, moved_id));
                Ok(out)
            }
        }
        Command::Verify { seed } => {
            let checks = crate::suite::all_checks(seed);
            let mut out = String::new();
            let mut failures = 0usize;
            for (name, result) in &checks {
                match result {
                    Ok(()) => {
                        let _ = writeln!(out, "{name}: PASS");
                    }
                    Err(message) => {
                        failures += 1;
                        let _ = writeln!(out, "{name}: FAIL ({message})");
                    }
                }
            }
            let _ = writeln!(out, "{} checks, {failures} failures", checks.len());
            if failures > 0 {
                Err(err(out))
            } else {
                Ok(out)
            }
        }
        Command::Render { selector, out } => {
            let catalog = enumerate_catalog();
            let id = resolve_selector(&catalog, &selector)?;
            let svg = render_svg(&SceneSpec::new(catalog[id].frame));
            std::fs::write(&out, svg).map_err(|e| err(format!("io: {e}")))?;
            Ok(format!("wrote state {id} to {}\n", out.display()))
        }
        Command::Path { from, to, json } => {
            let catalog = enumerate_catalog();
            let from_id = resolve_text_state(&catalog, &from)?;
            let to_id = resolve_text_state(&catalog, &to)?;
            let path = gate_path(&catalog[from_id].group, &catalog[to_id].group);
            let gates: Vec<String> = path.iter().map(|g| g.to_string()).collect();
            if json {
                let record = PathRecord {
                    from: from_id,
                    to: to_id,
                    gates,
                };
                Ok(serde_json::to_string_pretty(&record).expect("record serializes") + "\n")
            } else if gates.is_empty() {
                Ok(format!("state {from_id} is already state {to_id}\n"))
            } else {
                Ok(format!(
                    "state {from_id} -> state {to_id} in {} gate(s): {}\n",
                    gates.len(),
                    gates.join(" ")
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run_args(args: &[&str]) -> Result<String, CliError> {
        let mut argv = vec!["blochpair"];
        argv.extend_from_slice(args);
        run(Cli::parse_from(argv))
    }

    #[test]
    fn show_by_generators_prints_the_group() {
        let out = run_args(&["show", "--generators", "+ZI,+IZ"]).unwrap();
        assert!(out.contains("separable"));
        assert!(out.contains("{+II, +IZ, +ZI, +ZZ}"));
        assert!(out.contains("ket: (1, 0, 0, 0)"));
        assert!(out.contains("fixed axes: {z1}, {z2}, (z1, z2)"));
    }

    #[test]
    fn permuting_the_singlet_reaches_the_cycled_group() {
        let out = run_args(&["permute", "--state", "Psi-", "--cycle", "x2>z2>y2>x2"]).unwrap();
        assert!(out.contains("-ZY"));
        assert!(out.contains("-YX"));
        assert!(out.contains("-XZ"));
    }

    #[test]
    fn path_between_aliases_replays() {
        let out = run_args(&["path", "--from", "up-up", "--to", "Psi-"]).unwrap();
        assert!(out.contains("->"));
    }

    #[test]
    fn anticommuting_generators_are_a_domain_error() {
        let result = run_args(&["show", "--generators", "+ZI,+XI"]);
        assert!(result.is_err());
        assert!(result.unwrap_err().to_string().contains("anticommute"));
    }

    #[test]
    fn malformed_pauli_is_a_domain_error() {
        let result = run_args(&["show", "--generators", "+ZQ,+IZ"]);
        assert!(result.is_err());
    }

    #[test]
    fn open_cycles_are_rejected() {
        let result = run_args(&["permute", "--state", "Psi-", "--cycle", "x2>z2>y2"]);
        assert!(result.unwrap_err().to_string().contains("close"));
    }

    #[test]
    fn improper_cycles_are_rejected() {
        let result = run_args(&["permute", "--state", "Psi-", "--cycle", "x2>z2>x2"]);
        assert!(result.unwrap_err().to_string().contains("proper rotation"));
    }

    #[test]
    fn signed_cycles_are_accepted_when_proper() {
        // x -> -y, y -> x is a quarter turn about z: determinant +1.
        let out = run_args(&["permute", "--state", "Psi-", "--cycle", "x2>-y2>x2"]).unwrap();
        assert!(out.contains("state"));
    }
}
