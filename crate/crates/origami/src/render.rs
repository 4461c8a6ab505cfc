//! Crease-pattern SVG and machine-readable trace JSON.
//!
//! Figure conventions: start-configuration lines solid, creases dashed,
//! derived points as crosses, landmark names as labels. The JSON side
//! serializes numbers as decimal strings carrying `precision_bits / 3`
//! significant digits, which is more than enough for exact binary
//! round-trips, and steps are addressed positionally as `s0, s1, ...`.

use crate::axioms::Axiom;
use crate::error::{Error, Result};
use crate::geom::{Line, Point};
use crate::scalar::Scalar;
use crate::trace::{Object, StepOp, Trace, TraceStep};
use serde_json::Value;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Rendering options for [`emit_svg`].
#[derive(Clone, Debug)]
pub struct SvgOptions {
    pub width_px: u32,
    pub margin_px: u32,
    pub labels: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width_px: 640,
            margin_px: 24,
            labels: true,
        }
    }
}

struct Bounds {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

fn bounds(trace: &Trace) -> Bounds {
    let mut b = Bounds {
        min_x: f64::INFINITY,
        min_y: f64::INFINITY,
        max_x: f64::NEG_INFINITY,
        max_y: f64::NEG_INFINITY,
    };
    for step in &trace.steps {
        if let Object::Point(p) = &step.result {
            b.min_x = b.min_x.min(p.x.to_f64());
            b.max_x = b.max_x.max(p.x.to_f64());
            b.min_y = b.min_y.min(p.y.to_f64());
            b.max_y = b.max_y.max(p.y.to_f64());
        }
    }
    if !b.min_x.is_finite() {
        b = Bounds {
            min_x: 0.0,
            min_y: 0.0,
            max_x: 1.0,
            max_y: 1.0,
        };
    }
    let pad = ((b.max_x - b.min_x).max(b.max_y - b.min_y).max(1e-9)) * 0.08;
    b.min_x -= pad;
    b.min_y -= pad;
    b.max_x += pad;
    b.max_y += pad;
    b
}

/// Clips an infinite line to a rectangle; `None` when it misses.
fn clip_line(l: &Line, b: &Bounds) -> Option<((f64, f64), (f64, f64))> {
    let (a, bb, c) = (l.a().to_f64(), l.b().to_f64(), l.c().to_f64());
    // point on line + direction
    let (px, py) = (-a * c, -bb * c);
    let (dx, dy) = (-bb, a);
    let mut t_min = f64::NEG_INFINITY;
    let mut t_max = f64::INFINITY;
    // slab clipping against x and y ranges
    for (p0, d, lo, hi) in [
        (px, dx, b.min_x, b.max_x),
        (py, dy, b.min_y, b.max_y),
    ] {
        if d.abs() < 1e-15 {
            if p0 < lo || p0 > hi {
                return None;
            }
        } else {
            let (mut t0, mut t1) = ((lo - p0) / d, (hi - p0) / d);
            if t0 > t1 {
                std::mem::swap(&mut t0, &mut t1);
            }
            t_min = t_min.max(t0);
            t_max = t_max.min(t1);
        }
    }
    if t_min >= t_max {
        return None;
    }
    Some((
        (px + t_min * dx, py + t_min * dy),
        (px + t_max * dx, py + t_max * dy),
    ))
}

/// Renders a trace as an SVG 1.1 crease pattern. Output is byte-identical
/// for identical input.
pub fn emit_svg(trace: &Trace, opts: &SvgOptions) -> Result<String> {
    if trace.steps.is_empty() {
        return Err(Error::EmptyTrace);
    }
    let b = bounds(trace);
    // keep the drawable region non-empty whatever the options say
    let margin = (opts.margin_px as f64).min(opts.width_px as f64 / 4.0);
    let span_x = b.max_x - b.min_x;
    let span_y = b.max_y - b.min_y;
    let scale = (opts.width_px as f64 - 2.0 * margin).max(1.0) / span_x;
    let height = span_y * scale + 2.0 * margin;
    // mathematical up renders up
    let map = |p: (f64, f64)| -> (f64, f64) {
        (
            margin + (p.0 - b.min_x) * scale,
            height - margin - (p.1 - b.min_y) * scale,
        )
    };

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{:.2}" viewBox="0 0 {} {:.2}">"#,
        opts.width_px, height, opts.width_px, height
    );
    let _ = writeln!(
        svg,
        r#"<style>.start{{stroke:#222;stroke-width:1.6}}.crease{{stroke:#c22;stroke-width:1;stroke-dasharray:6 4}}.mark{{stroke:#06c;stroke-width:1.2}}.lbl{{font:12px sans-serif;fill:#111}}</style>"#
    );

    // names for labels: landmark name of each step, if any
    let mut names: BTreeMap<usize, &str> = BTreeMap::new();
    for (name, &idx) in &trace.landmarks {
        names.entry(idx).or_insert(name.as_str());
    }

    for (i, step) in trace.steps.iter().enumerate() {
        match (&step.op, &step.result) {
            (StepOp::GivenLine, Object::Line(l)) => {
                if let Some((p, q)) = clip_line(l, &b) {
                    let (p, q) = (map(p), map(q));
                    let _ = writeln!(
                        svg,
                        r#"<line class="start" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
                        p.0, p.1, q.0, q.1
                    );
                }
            }
            (StepOp::Fold { .. }, Object::Line(l)) => {
                if let Some((p, q)) = clip_line(l, &b) {
                    let (p, q) = (map(p), map(q));
                    let _ = writeln!(
                        svg,
                        r#"<line class="crease" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
                        p.0, p.1, q.0, q.1
                    );
                }
            }
            (op, Object::Point(p)) => {
                let (x, y) = map((p.x.to_f64(), p.y.to_f64()));
                let r = 3.0;
                if !matches!(op, StepOp::GivenPoint) {
                    let _ = writeln!(
                        svg,
                        r#"<path class="mark" d="M {:.3} {:.3} L {:.3} {:.3} M {:.3} {:.3} L {:.3} {:.3}"/>"#,
                        x - r, y - r, x + r, y + r, x - r, y + r, x + r, y - r
                    );
                }
                if opts.labels {
                    if let Some(name) = names.get(&i) {
                        let _ = writeln!(
                            svg,
                            r#"<text class="lbl" x="{:.3}" y="{:.3}">{}</text>"#,
                            x + 4.0,
                            y - 4.0,
                            xml_escape(name)
                        );
                    }
                }
            }
            _ => {}
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

fn scalar_json(s: &Scalar, digits: usize) -> String {
    format!("\"{}\"", s.to_decimal(digits))
}

fn object_json(obj: &Object, digits: usize) -> String {
    match obj {
        Object::Point(p) => format!(
            r#"{{"point":[{},{}]}}"#,
            scalar_json(&p.x, digits),
            scalar_json(&p.y, digits)
        ),
        Object::Line(l) => format!(
            r#"{{"line":[{},{},{}]}}"#,
            scalar_json(l.a(), digits),
            scalar_json(l.b(), digits),
            scalar_json(l.c(), digits)
        ),
    }
}

/// Serializes a trace. Steps are emitted in order and referenced by
/// position (`s0, s1, ...`); numbers are decimal strings.
pub fn emit_json(trace: &Trace) -> String {
    let digits = (trace.precision_bits / 3) as usize;
    let mut out = String::new();
    let _ = write!(out, r#"{{"precision_bits":{},"steps":["#, trace.precision_bits);
    for (i, step) in trace.steps.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&step_json(step, digits));
    }
    out.push_str("],\"landmarks\":{");
    for (i, (name, &idx)) in trace.landmarks.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        // value snapshot plus the step it names, so parsing re-binds exactly
        let value = object_json(&trace.steps[idx].result, digits);
        let _ = write!(
            out,
            r#""{}":{{"step":"s{idx}",{}"#,
            json_escape(name),
            &value[1..]
        );
    }
    let _ = write!(out, r#"}},"target":"{}"}}"#, json_escape(&trace.target));
    out
}

fn step_json(step: &TraceStep, digits: usize) -> String {
    let result = object_json(&step.result, digits);
    match &step.op {
        StepOp::GivenPoint => format!(r#"{{"kind":"point","inputs":[],"result":{result}}}"#),
        StepOp::GivenLine => format!(r#"{{"kind":"fold","inputs":[],"result":{result}}}"#),
        StepOp::Fold {
            axiom,
            inputs,
            branch,
        } => {
            let ins: Vec<String> = inputs.iter().map(|i| format!("\"s{i}\"")).collect();
            format!(
                r#"{{"kind":"fold","axiom":"{}","inputs":[{}],"branch":{},"result":{}}}"#,
                axiom.name(),
                ins.join(","),
                branch,
                result
            )
        }
        StepOp::Intersect { g, h } => {
            format!(r#"{{"kind":"point","inputs":["s{g}","s{h}"],"result":{result}}}"#)
        }
        StepOp::ReflectPoint { p, across } => {
            format!(r#"{{"kind":"point","inputs":["s{p}","s{across}"],"result":{result}}}"#)
        }
    }
}

fn parse_err(msg: &str) -> Error {
    Error::Parse(crate::error::ParseError {
        line: 0,
        column: 0,
        message: msg.to_string(),
        token: String::new(),
    })
}

fn value_scalar(v: &Value, bits: u32) -> Result<Scalar> {
    let text = v.as_str().ok_or_else(|| parse_err("number must be a string"))?;
    Scalar::parse_prec(bits, text).ok_or_else(|| parse_err("invalid decimal number"))
}

fn value_object(v: &Value, bits: u32) -> Result<Object> {
    if let Some(arr) = v.get("point").and_then(|p| p.as_array()) {
        if arr.len() != 2 {
            return Err(parse_err("point needs two coordinates"));
        }
        return Ok(Object::Point(Point::new(
            value_scalar(&arr[0], bits)?,
            value_scalar(&arr[1], bits)?,
        )));
    }
    if let Some(arr) = v.get("line").and_then(|l| l.as_array()) {
        if arr.len() != 3 {
            return Err(parse_err("line needs three coefficients"));
        }
        return Ok(Object::Line(Line::new(
            value_scalar(&arr[0], bits)?,
            value_scalar(&arr[1], bits)?,
            value_scalar(&arr[2], bits)?,
        )?));
    }
    Err(parse_err("result must be a point or a line"))
}

fn step_ref(v: &Value) -> Result<usize> {
    let name = v.as_str().ok_or_else(|| parse_err("input must be a name"))?;
    name.strip_prefix('s')
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| parse_err("inputs are positional names s0, s1, ..."))
}

/// Parses trace JSON produced by [`emit_json`].
pub fn parse_json(text: &str) -> Result<Trace> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| parse_err(&format!("invalid JSON: {e}")))?;
    let bits = root
        .get("precision_bits")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| parse_err("missing precision_bits"))? as u32;
    let steps_json = root
        .get("steps")
        .and_then(|v| v.as_array())
        .ok_or_else(|| parse_err("missing steps"))?;

    let mut steps: Vec<TraceStep> = vec![];
    for sv in steps_json {
        let kind = sv
            .get("kind")
            .and_then(|v| v.as_str())
            .ok_or_else(|| parse_err("step without kind"))?;
        let result = value_object(
            sv.get("result").ok_or_else(|| parse_err("step without result"))?,
            bits,
        )?;
        let inputs: Vec<usize> = match sv.get("inputs").and_then(|v| v.as_array()) {
            Some(arr) => arr.iter().map(step_ref).collect::<Result<_>>()?,
            None => vec![],
        };
        let op = match kind {
            "fold" => {
                if let Some(ax) = sv.get("axiom").and_then(|v| v.as_str()) {
                    let axiom = Axiom::parse(ax).ok_or_else(|| parse_err("unknown axiom"))?;
                    let branch = sv.get("branch").and_then(|v| v.as_u64()).unwrap_or(0) as usize;
                    StepOp::Fold {
                        axiom,
                        inputs,
                        branch,
                    }
                } else if inputs.is_empty() {
                    StepOp::GivenLine
                } else {
                    return Err(parse_err("fold step needs an axiom or no inputs"));
                }
            }
            "point" => {
                if inputs.is_empty() {
                    StepOp::GivenPoint
                } else if inputs.len() == 2 {
                    let types_ok = |i: usize| i < steps.len();
                    if !types_ok(inputs[0]) || !types_ok(inputs[1]) {
                        return Err(parse_err("point step references later objects"));
                    }
                    let first_is_point = steps[inputs[0]].result.as_point().is_some();
                    let second_is_line = steps[inputs[1]].result.as_line().is_some();
                    if first_is_point && second_is_line {
                        StepOp::ReflectPoint {
                            p: inputs[0],
                            across: inputs[1],
                        }
                    } else {
                        StepOp::Intersect {
                            g: inputs[0],
                            h: inputs[1],
                        }
                    }
                } else {
                    return Err(parse_err("point step takes zero or two inputs"));
                }
            }
            other => return Err(parse_err(&format!("unknown step kind '{other}'"))),
        };
        steps.push(TraceStep { op, result });
    }

    let mut landmarks = BTreeMap::new();
    if let Some(map) = root.get("landmarks").and_then(|v| v.as_object()) {
        for (name, v) in map {
            // prefer the explicit step reference; fall back to value
            // matching for hand-written files
            let idx = match v.get("step") {
                Some(r) => step_ref(r)?,
                None => {
                    let obj = value_object(v, bits)?;
                    steps
                        .iter()
                        .rposition(|s| s.result.eq_eps(&obj))
                        .ok_or_else(|| parse_err(&format!("landmark '{name}' matches no step")))?
                }
            };
            if idx >= steps.len() {
                return Err(parse_err(&format!("landmark '{name}' out of range")));
            }
            let obj = value_object(v, bits)?;
            if !steps[idx].result.eq_eps(&obj) {
                return Err(parse_err(&format!(
                    "landmark '{name}' disagrees with its step"
                )));
            }
            landmarks.insert(name.clone(), idx);
        }
    }
    let target = root
        .get("target")
        .and_then(|v| v.as_str())
        .unwrap_or_default()
        .to_string();
    let trace = Trace {
        precision_bits: bits,
        steps,
        landmarks,
        target,
    };
    trace.check_structure()?;
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn svg_structure_for_haga() {
        let t = constructions::haga_third(&Scalar::from_int(8)).unwrap();
        let svg = emit_svg(&t, &SvgOptions::default()).unwrap();
        assert!(svg.starts_with("<?xml"));
        assert!(svg.contains("</svg>"));
        // four solid start edges, at least two dashed creases, the G label
        assert_eq!(svg.matches(r#"class="start""#).count(), 4);
        assert!(svg.matches(r#"class="crease""#).count() >= 2);
        assert!(svg.contains(">G</text>"));
    }

    #[test]
    fn svg_heptagon_vertex_markers() {
        let t = constructions::heptagon().unwrap();
        let svg = emit_svg(&t, &SvgOptions::default()).unwrap();
        // vertex 2 carries its construction name Q; the rest are V<k>
        assert!(svg.contains(">Q</text>"));
        for k in [1, 3, 4, 5, 6, 7] {
            assert!(svg.contains(&format!(">V{k}</text>")), "missing vertex {k}");
        }
    }

    #[test]
    fn svg_label_toggle() {
        let t = constructions::haga_third(&Scalar::from_int(8)).unwrap();
        let opts = SvgOptions {
            labels: false,
            ..SvgOptions::default()
        };
        let svg = emit_svg(&t, &opts).unwrap();
        assert!(!svg.contains("<text"));
    }

    #[test]
    fn svg_empty_trace_rejected() {
        let t = Trace {
            precision_bits: 256,
            steps: vec![],
            landmarks: BTreeMap::new(),
            target: String::new(),
        };
        assert_eq!(
            emit_svg(&t, &SvgOptions::default()).unwrap_err(),
            Error::EmptyTrace
        );
    }

    #[test]
    fn svg_bytes_deterministic() {
        let t = constructions::golden_section(&Scalar::from_int(2)).unwrap();
        let a = emit_svg(&t, &SvgOptions::default()).unwrap();
        let b = emit_svg(&t, &SvgOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn json_round_trip_haga() {
        let t = constructions::haga_third(&Scalar::from_int(8)).unwrap();
        let json = emit_json(&t);
        let back = parse_json(&json).unwrap();
        assert!(t.eq_eps(&back));
        assert!(back.check_replay().is_ok());
    }

    #[test]
    fn json_round_trip_delian_has_bprime() {
        let t = constructions::delian_double().unwrap();
        let json = emit_json(&t);
        assert!(json.contains("\"Bprime\""));
        let back = parse_json(&json).unwrap();
        assert!(t.eq_eps(&back));
        // the ratio is still checkable on the parsed landmarks
        let x = constructions::landmark_distance(&back, "D", "Bprime").unwrap();
        let y = constructions::landmark_distance(&back, "A", "Bprime").unwrap();
        let resid = &x * &x * &x - &(Scalar::from_int(2) * &y * &y * &y);
        assert!(resid.abs() <= Scalar::exp2i(-180));
    }

    #[test]
    fn json_single_fold_schema() {
        let start = crate::trace::StartConfig::unit();
        let mut b = crate::trace::TraceBuilder::with_start(&start);
        let p = b.point_ref("A").unwrap();
        let q = b.point_ref("C").unwrap();
        b.fold_o2(p, q, "t").unwrap();
        let t = b.finish("t");
        let json = emit_json(&t);
        assert!(json.contains(r#""axiom":"O2""#));
        assert!(json.contains(r#""branch":0"#));
        assert!(json.contains(r#""kind":"fold""#));
        assert!(json.contains(r#""precision_bits":256"#));
    }

    #[test]
    fn json_bytes_deterministic() {
        let t = constructions::cube_root(&Scalar::from_int(2)).unwrap();
        assert_eq!(emit_json(&t), emit_json(&t));
    }
}
