//! Deterministic SVG rendering of the two-sphere picture.
//!
//! The projection and styling are compile-time constants, element order and
//! numeric formatting are fixed, so the output bytes depend only on the
//! frame and the sphere labels.

use crate::frame::{Alignment, Axis, FrameRep, SignedAxis};
use crate::pauli::{Qubit, Sign};

/// What to draw: a frame plus the subscript shown on each sphere's labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SceneSpec {
    pub frame: FrameRep,
    pub labels: (String, String),
}

impl SceneSpec {
    pub fn new(frame: FrameRep) -> SceneSpec {
        SceneSpec {
            frame,
            labels: ("1".to_string(), "2".to_string()),
        }
    }
}

// Orthographic view angles matching the usual textbook sphere viewpoint:
// polar 70°, azimuth 20°. The four trig values are pinned as literals so the
// projection never depends on the platform's libm.
const COS_AZIMUTH: f64 = 0.9396926207859084; // cos 20°
const SIN_AZIMUTH: f64 = 0.3420201433256687; // sin 20°
const COS_POLAR: f64 = 0.3420201433256687; // cos 70°
const SIN_POLAR: f64 = 0.9396926207859084; // sin 70°

const SPHERE_RADIUS: f64 = 100.0;
const CENTERS: [(f64, f64); 2] = [(165.0, 175.0), (495.0, 175.0)];
const CANVAS_WIDTH: f64 = 660.0;
const CANVAS_HEIGHT: f64 = 350.0;
const AXIS_REACH: f64 = 1.25;
const LABEL_REACH: f64 = 1.44;
const EQUATOR_SEGMENTS: usize = 72;

/// Project a unit-sphere point to screen offsets (y grows downward).
fn project(point: [f64; 3]) -> (f64, f64) {
    let [x, y, z] = point;
    let horizontal = COS_AZIMUTH * x + SIN_AZIMUTH * y;
    let vertical = -COS_POLAR * SIN_AZIMUTH * x + COS_POLAR * COS_AZIMUTH * y + SIN_POLAR * z;
    (horizontal, -vertical)
}

fn fmt4(value: f64) -> String {
    let text = format!("{value:.4}");
    if text == "-0.0000" {
        "0.0000".to_string()
    } else {
        text
    }
}

fn place(center: (f64, f64), point: [f64; 3], scale: f64) -> (String, String) {
    let (dx, dy) = project(point);
    (
        fmt4(center.0 + SPHERE_RADIUS * scale * dx),
        fmt4(center.1 + SPHERE_RADIUS * scale * dy),
    )
}

fn unit(direction: [i8; 3]) -> [f64; 3] {
    direction.map(f64::from)
}

/// Directions at which the labels x, y, z are drawn for one sphere.
///
/// Separable spheres only fix the arrow-aligned axis; the transverse pair is
/// completed to a right-handed frame by the single quarter- or half-turn
/// that carries +z onto the arrow axis. Entangled sphere 2 reads each label
/// direction off the alignment; entangled sphere 1 and any +z arrow keep the
/// reference frame.
fn axis_directions(frame: &FrameRep, sphere: Qubit) -> [[i8; 3]; 3] {
    const REFERENCE: [[i8; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    match (frame, sphere) {
        (FrameRep::Separable { arrow1, .. }, Qubit::One) => completed_frame(*arrow1),
        (FrameRep::Separable { arrow2, .. }, Qubit::Two) => completed_frame(*arrow2),
        (FrameRep::Entangled { .. }, Qubit::One) => REFERENCE,
        (FrameRep::Entangled { alignment }, Qubit::Two) => aligned_frame(alignment),
    }
}

fn completed_frame(arrow: SignedAxis) -> [[i8; 3]; 3] {
    match (arrow.axis, arrow.sign) {
        (Axis::Z, Sign::Plus) => [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        (Axis::Z, Sign::Minus) => [[-1, 0, 0], [0, 1, 0], [0, 0, -1]],
        (Axis::X, Sign::Plus) => [[0, 0, 1], [0, 1, 0], [-1, 0, 0]],
        (Axis::X, Sign::Minus) => [[0, 0, -1], [0, 1, 0], [1, 0, 0]],
        (Axis::Y, Sign::Plus) => [[1, 0, 0], [0, 0, 1], [0, -1, 0]],
        (Axis::Y, Sign::Minus) => [[1, 0, 0], [0, 0, -1], [0, 1, 0]],
    }
}

fn aligned_frame(alignment: &Alignment) -> [[i8; 3]; 3] {
    let mut directions = [[0i8; 3]; 3];
    for label in Axis::ALL {
        let facing = alignment.row(label);
        let mut direction = [0i8; 3];
        direction[facing.axis.index()] = facing.sign.as_i64() as i8;
        directions[label.index()] = direction;
    }
    directions
}

fn subscript(text: &str) -> String {
    text.chars()
        .map(|c| match c {
            '0'..='9' => char::from_u32(0x2080 + (c as u32 - '0' as u32)).unwrap(),
            other => other,
        })
        .collect()
}

/// Render the scene to a complete SVG document. Pure and byte-deterministic.
pub fn render_svg(scene: &SceneSpec) -> String {
    let mut svg = String::with_capacity(8 * 1024);
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{CANVAS_WIDTH}\" height=\"{CANVAS_HEIGHT}\" \
         viewBox=\"0 0 {CANVAS_WIDTH} {CANVAS_HEIGHT}\">\n"
    ));
    svg.push_str("  <defs>\n");
    svg.push_str(
        "    <marker id=\"axis-head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" orient=\"auto\">\n      <path d=\"M0,0 L6,3 L0,6 Z\" fill=\"#333333\"/>\n    </marker>\n",
    );
    svg.push_str(
        "    <marker id=\"state-head\" markerWidth=\"7\" markerHeight=\"7\" refX=\"5\" refY=\"2.5\" orient=\"auto\">\n      <path d=\"M0,0 L5,2.5 L0,5 Z\" fill=\"#e08020\"/>\n    </marker>\n",
    );
    svg.push_str("  </defs>\n");
    if matches!(scene.frame, FrameRep::Separable { .. }) {
        svg.push_str(
            "  <!-- transverse axes are a display convention: only the arrow-aligned axis is \
             fixed by the state; the remaining axes complete a right-handed frame via the \
             rotation carrying +z onto the arrow axis -->\n",
        );
    }
    let labels = [&scene.labels.0, &scene.labels.1];
    for sphere in Qubit::BOTH {
        let center = CENTERS[sphere.index()];
        let sub = subscript(labels[sphere.index()]);
        svg.push_str(&format!("  <g id=\"sphere-{}\">\n", sphere.index() + 1));
        render_sphere_shell(&mut svg, center);
        let directions = axis_directions(&scene.frame, sphere);
        for axis in Axis::ALL {
            render_axis(&mut svg, center, directions[axis.index()], axis, &sub);
        }
        match scene.frame {
            FrameRep::Separable { .. } => render_state_arrow(&mut svg, center),
            FrameRep::Entangled { .. } => render_center_dot(&mut svg, center),
        }
        svg.push_str("  </g>\n");
    }
    svg.push_str("</svg>\n");
    svg
}

fn render_sphere_shell(svg: &mut String, center: (f64, f64)) {
    svg.push_str(&format!(
        "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#f4f4f8\" stroke=\"#888888\" stroke-width=\"1\"/>\n",
        fmt4(center.0),
        fmt4(center.1),
        fmt4(SPHERE_RADIUS)
    ));
    // Equator circle, drawn as a sampled projected path.
    let mut path = String::new();
    for step in 0..=EQUATOR_SEGMENTS {
        let angle = 2.0 * std::f64::consts::PI * (step as f64) / (EQUATOR_SEGMENTS as f64);
        let (x, y) = place(center, [angle.cos(), angle.sin(), 0.0], 1.0);
        if step == 0 {
            path.push_str(&format!("M {x} {y}"));
        } else {
            path.push_str(&format!(" L {x} {y}"));
        }
    }
    svg.push_str(&format!(
        "    <path d=\"{path}\" fill=\"none\" stroke=\"#aaaaaa\" stroke-width=\"0.8\" stroke-dasharray=\"4,4\"/>\n"
    ));
}

fn render_axis(svg: &mut String, center: (f64, f64), direction: [i8; 3], label: Axis, sub: &str) {
    let dir = unit(direction);
    let (x0, y0) = (fmt4(center.0), fmt4(center.1));
    let (x1, y1) = place(center, dir, AXIS_REACH);
    svg.push_str(&format!(
        "    <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y1}\" stroke=\"#333333\" \
         stroke-width=\"1.2\" marker-end=\"url(#axis-head)\"/>\n"
    ));
    let (lx, ly) = place(center, dir, LABEL_REACH);
    svg.push_str(&format!(
        "    <text x=\"{lx}\" y=\"{ly}\" font-family=\"sans-serif\" font-size=\"15\" \
         text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"#111111\">{label}{sub}</text>\n"
    ));
}

fn render_state_arrow(svg: &mut String, center: (f64, f64)) {
    // The statevector arrow is always drawn along the screen +z direction;
    // the frame's arrow-aligned axis is what moves instead.
    let (x0, y0) = (fmt4(center.0), fmt4(center.1));
    let (x1, y1) = place(center, [0.0, 0.0, 1.0], 1.0);
    svg.push_str(&format!(
        "    <line class=\"statevector-arrow\" x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y1}\" \
         stroke=\"#e08020\" stroke-width=\"4\" marker-end=\"url(#state-head)\"/>\n"
    ));
}

fn render_center_dot(svg: &mut String, center: (f64, f64)) {
    svg.push_str(&format!(
        "    <circle class=\"center-dot\" cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"#e08020\"/>\n",
        fmt4(center.0),
        fmt4(center.1)
    ));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::frame_from_group;
    use crate::group::StabilizerGroup;

    fn frame_of(g1: &str, g2: &str) -> FrameRep {
        let group =
            StabilizerGroup::from_generators(g1.parse().unwrap(), g2.parse().unwrap()).unwrap();
        frame_from_group(&group)
    }

    #[test]
    fn rendering_is_pure() {
        let scene = SceneSpec::new(frame_of("ZI", "-IX"));
        assert_eq!(render_svg(&scene), render_svg(&scene));
    }

    #[test]
    fn separable_scenes_draw_two_arrows() {
        let svg = render_svg(&SceneSpec::new(frame_of("ZI", "IZ")));
        assert_eq!(svg.matches("class=\"statevector-arrow\"").count(), 2);
        assert_eq!(svg.matches("class=\"center-dot\"").count(), 0);
    }

    #[test]
    fn entangled_scenes_draw_two_dots() {
        let svg = render_svg(&SceneSpec::new(frame_of("-ZZ", "-XX")));
        assert_eq!(svg.matches("class=\"center-dot\"").count(), 2);
        assert_eq!(svg.matches("class=\"statevector-arrow\"").count(), 0);
    }

    #[test]
    fn labels_use_subscripts() {
        let svg = render_svg(&SceneSpec::new(frame_of("ZI", "IZ")));
        assert!(svg.contains("x\u{2081}"));
        assert!(svg.contains("z\u{2082}"));
    }

    #[test]
    fn negative_zero_is_normalized() {
        assert_eq!(fmt4(-0.000001), "0.0000");
        assert_eq!(fmt4(-0.2), "-0.2000");
    }
}
