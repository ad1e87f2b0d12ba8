//! SVG rendering of straightening traces: punctures as crosses, the static
//! curve solid, the moving curve dashed, supports as translucent fills.

use bigonkit::bigon::StraighteningTrace;
use bigonkit::curves::PunctureSet;
use bigonkit::geom::{Point, Rational};
use num_traits::ToPrimitive;

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

struct Bounds {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl Bounds {
    fn new() -> Bounds {
        Bounds {
            min_x: f64::INFINITY,
            min_y: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }

    fn add(&mut self, p: &Point) {
        let (x, y) = (f(&p.x), f(&p.y));
        self.min_x = self.min_x.min(x);
        self.min_y = self.min_y.min(y);
        self.max_x = self.max_x.max(x);
        self.max_y = self.max_y.max(y);
    }

    fn view_box(&self) -> String {
        let pad = ((self.max_x - self.min_x) + (self.max_y - self.min_y)).max(1.0) * 0.05;
        format!(
            "{:.4} {:.4} {:.4} {:.4}",
            self.min_x - pad,
            self.min_y - pad,
            (self.max_x - self.min_x) + 2.0 * pad,
            (self.max_y - self.min_y) + 2.0 * pad
        )
    }
}

fn poly_attr(pts: &[Point]) -> String {
    let mut out = String::new();
    for (i, p) in pts.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&format!("{:.6},{:.6}", f(&p.x), f(&p.y)));
    }
    out
}

/// Frames of a trace: the state of the moving curve before each step plus
/// the final state. Each frame shows the step's support region.
pub fn trace_frames(
    alpha: &[Point],
    alpha_closed: bool,
    moving_states: &[Vec<Point>],
    moving_closed: bool,
    trace: &StraighteningTrace,
    punctures: &PunctureSet,
) -> Vec<String> {
    let mut bounds = Bounds::new();
    for p in alpha.iter().chain(punctures.iter()) {
        bounds.add(p);
    }
    for state in moving_states {
        for p in state {
            bounds.add(p);
        }
    }
    for step in &trace.steps {
        for poly in &step.support {
            for p in poly {
                bounds.add(p);
            }
        }
    }
    let vb = bounds.view_box();
    let mut frames = Vec::new();
    for (i, state) in moving_states.iter().enumerate() {
        let mut body = String::new();
        if let Some(step) = trace.steps.get(i) {
            for poly in &step.support {
                if poly.len() >= 3 {
                    body.push_str(&format!(
                        "  <polygon points=\"{}\" fill=\"#7fc97f\" fill-opacity=\"0.35\" stroke=\"none\"/>\n",
                        poly_attr(poly)
                    ));
                }
            }
        }
        body.push_str(&curve_element(alpha, alpha_closed, "#000000", false));
        body.push_str(&curve_element(state, moving_closed, "#d35400", true));
        for p in punctures.iter() {
            body.push_str(&cross_element(p));
        }
        frames.push(frame(&vb, &body));
    }
    frames
}

/// Overlay all frames with an opacity ramp into one SVG document.
pub fn overlay(frames_body: &[String]) -> String {
    // Frames are full documents; extract their inner bodies and restack.
    let mut vb = String::from("0 0 1 1");
    let mut inner = String::new();
    let n = frames_body.len().max(1);
    for (i, doc) in frames_body.iter().enumerate() {
        if let Some(v) = extract_view_box(doc) {
            vb = v;
        }
        let opacity = 0.25 + 0.75 * ((i + 1) as f64 / n as f64);
        inner.push_str(&format!("  <g opacity=\"{opacity:.4}\">\n"));
        inner.push_str(&extract_body(doc));
        inner.push_str("  </g>\n");
    }
    frame(&vb, &inner)
}

fn frame(view_box: &str, body: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{view_box}\">\n<g transform=\"scale(1,-1)\">\n{body}</g>\n</svg>\n"
    )
}

fn curve_element(pts: &[Point], closed: bool, color: &str, dashed: bool) -> String {
    let tag = if closed { "polygon" } else { "polyline" };
    let dash = if dashed {
        " stroke-dasharray=\"0.15,0.1\""
    } else {
        ""
    };
    format!(
        "  <{tag} points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"0.06\"{dash}/>\n",
        poly_attr(pts)
    )
}

fn cross_element(p: &Point) -> String {
    let (x, y) = (f(&p.x), f(&p.y));
    let r = 0.12;
    format!(
        "  <path d=\"M {:.4} {:.4} L {:.4} {:.4} M {:.4} {:.4} L {:.4} {:.4}\" stroke=\"#c0392b\" stroke-width=\"0.05\" fill=\"none\"/>\n",
        x - r, y - r, x + r, y + r, x - r, y + r, x + r, y - r
    )
}

fn extract_view_box(doc: &str) -> Option<String> {
    let start = doc.find("viewBox=\"")? + "viewBox=\"".len();
    let end = doc[start..].find('"')? + start;
    Some(doc[start..end].to_string())
}

fn extract_body(doc: &str) -> String {
    let start = doc.find("<g transform").and_then(|i| doc[i..].find('\n').map(|j| i + j + 1));
    let end = doc.rfind("</g>");
    match (start, end) {
        (Some(s), Some(e)) if s < e => doc[s..e].to_string(),
        _ => String::new(),
    }
}
