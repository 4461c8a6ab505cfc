//! Replayable construction traces.
//!
//! A trace is the finite sequence that defines a constructed object: given
//! start objects, then fold steps (axiom invocations with a recorded branch
//! choice) and derived points (intersections of prior creases, or images of
//! prior points under a prior crease, which is the physical fold action).
//! Landmarks
//! give public names to selected steps; replaying a trace re-executes every
//! step through the axiom solvers and must reproduce all landmarks.

use crate::axioms::{self, Axiom, Fold};
use crate::error::{Error, Result};
use crate::geom::{Line, Point};
use crate::scalar::{precision, Scalar};
use std::collections::BTreeMap;

/// A step result: a folded sheet knows only points and straight creases.
#[derive(Clone, Debug)]
pub enum Object {
    Point(Point),
    Line(Line),
}

impl Object {
    pub fn as_point(&self) -> Option<&Point> {
        match self {
            Object::Point(p) => Some(p),
            Object::Line(_) => None,
        }
    }

    pub fn as_line(&self) -> Option<&Line> {
        match self {
            Object::Line(l) => Some(l),
            Object::Point(_) => None,
        }
    }

    pub fn eq_eps(&self, other: &Object) -> bool {
        match (self, other) {
            (Object::Point(a), Object::Point(b)) => a.eq_eps(b),
            (Object::Line(a), Object::Line(b)) => a.is_same_within(b, 8),
            _ => false,
        }
    }
}

/// How a step was produced.
#[derive(Clone, Debug, PartialEq)]
pub enum StepOp {
    /// Part of the start configuration (or a script declaration).
    GivenPoint,
    GivenLine,
    /// An axiom invocation; `branch` indexes the canonical solution list.
    Fold {
        axiom: Axiom,
        inputs: Vec<usize>,
        branch: usize,
    },
    /// Intersection point of two prior creases.
    Intersect { g: usize, h: usize },
    /// Image of a prior point under the fold along a prior crease.
    ReflectPoint { p: usize, across: usize },
}

#[derive(Clone, Debug)]
pub struct TraceStep {
    pub op: StepOp,
    pub result: Object,
}

/// An executed construction: steps, named landmarks, and the landmark
/// carrying the result.
#[derive(Clone, Debug)]
pub struct Trace {
    pub precision_bits: u32,
    pub steps: Vec<TraceStep>,
    /// Landmark name -> step index.
    pub landmarks: BTreeMap<String, usize>,
    pub target: String,
}

impl Trace {
    pub fn landmark_point(&self, name: &str) -> Option<&Point> {
        self.landmarks
            .get(name)
            .and_then(|&i| self.steps[i].result.as_point())
    }

    pub fn landmark_line(&self, name: &str) -> Option<&Line> {
        self.landmarks
            .get(name)
            .and_then(|&i| self.steps[i].result.as_line())
    }

    pub fn target_object(&self) -> Option<&Object> {
        self.landmarks.get(&self.target).map(|&i| &self.steps[i].result)
    }

    /// Structural well-formedness: inputs reference earlier steps with the
    /// right types and arities.
    pub fn check_structure(&self) -> Result<()> {
        let err = |detail: &str, at: usize| {
            Err(Error::Script {
                line: at,
                detail: detail.into(),
            })
        };
        for (i, step) in self.steps.iter().enumerate() {
            match &step.op {
                StepOp::GivenPoint => {
                    if step.result.as_point().is_none() {
                        return err("given-point step carries a line", i);
                    }
                }
                StepOp::GivenLine => {
                    if step.result.as_line().is_none() {
                        return err("given-line step carries a point", i);
                    }
                }
                StepOp::Fold {
                    axiom,
                    inputs,
                    branch,
                } => {
                    if step.result.as_line().is_none() {
                        return err("fold step must produce a crease", i);
                    }
                    if *branch >= axiom.max_solutions() {
                        return err("branch index beyond the axiom's maximum", i);
                    }
                    let signature: &[bool] = match axiom {
                        Axiom::O2 | Axiom::O3 => &[true, true],
                        Axiom::O4 => &[false, false],
                        Axiom::O5 => &[true, false, true],
                        Axiom::O6 => &[true, false, true, false],
                        Axiom::Lot => &[false, true],
                        Axiom::O1 => return err("O1 is recorded as a point step", i),
                    };
                    if inputs.len() != signature.len() {
                        return err("fold arity mismatch", i);
                    }
                    for (&idx, &wants_point) in inputs.iter().zip(signature) {
                        if idx >= i {
                            return err("step references a later object", i);
                        }
                        let ok = if wants_point {
                            self.steps[idx].result.as_point().is_some()
                        } else {
                            self.steps[idx].result.as_line().is_some()
                        };
                        if !ok {
                            return err("fold input has the wrong type", i);
                        }
                    }
                }
                StepOp::Intersect { g, h } => {
                    if *g >= i || *h >= i {
                        return err("step references a later object", i);
                    }
                    if self.steps[*g].result.as_line().is_none()
                        || self.steps[*h].result.as_line().is_none()
                    {
                        return err("intersection needs two creases", i);
                    }
                }
                StepOp::ReflectPoint { p, across } => {
                    if *p >= i || *across >= i {
                        return err("step references a later object", i);
                    }
                    if self.steps[*p].result.as_point().is_none()
                        || self.steps[*across].result.as_line().is_none()
                    {
                        return err("reflection needs a point and a crease", i);
                    }
                }
            }
        }
        for (name, &idx) in &self.landmarks {
            if idx >= self.steps.len() {
                return Err(Error::Script {
                    line: 0,
                    detail: format!("landmark '{name}' out of range"),
                });
            }
        }
        if !self.target.is_empty() && !self.landmarks.contains_key(&self.target) {
            return Err(Error::Script {
                line: 0,
                detail: format!("target '{}' is not a landmark", self.target),
            });
        }
        Ok(())
    }

    /// Re-executes every step through the axiom solvers. Given steps keep
    /// their stored value; everything else is recomputed. Returns the
    /// recomputed objects.
    pub fn replay(&self) -> Result<Vec<Object>> {
        let mut objects: Vec<Object> = Vec::with_capacity(self.steps.len());
        for step in self.steps.iter() {
            let obj = match &step.op {
                StepOp::GivenPoint | StepOp::GivenLine => step.result.clone(),
                StepOp::Fold {
                    axiom,
                    inputs,
                    branch,
                } => {
                    let pt = |k: usize| objects[inputs[k]].as_point().unwrap();
                    let ln = |k: usize| objects[inputs[k]].as_line().unwrap();
                    let folds: Vec<Fold> = match axiom {
                        Axiom::O2 => vec![axioms::fold_o2(pt(0), pt(1))?],
                        Axiom::O3 => vec![axioms::fold_o3(pt(0), pt(1))?],
                        Axiom::O4 => axioms::fold_o4(ln(0), ln(1))?,
                        Axiom::O5 => axioms::fold_o5(pt(0), ln(1), pt(2)),
                        Axiom::O6 => axioms::fold_o6(pt(0), ln(1), pt(2), ln(3))?,
                        Axiom::Lot => vec![axioms::fold_lot(ln(0), pt(1))],
                        Axiom::O1 => unreachable!("checked by structure"),
                    };
                    if *branch >= folds.len() {
                        return Err(Error::BranchUnavailable {
                            requested: *branch,
                            available: folds.len(),
                        });
                    }
                    Object::Line(folds[*branch].crease.clone())
                }
                StepOp::Intersect { g, h } => {
                    let gl = objects[*g].as_line().unwrap();
                    let hl = objects[*h].as_line().unwrap();
                    let point = gl.intersect(hl).ok_or(Error::DegenerateConfiguration)?;
                    Object::Point(point)
                }
                StepOp::ReflectPoint { p, across } => {
                    let point = objects[*p].as_point().unwrap();
                    let crease = objects[*across].as_line().unwrap();
                    Object::Point(crease.reflect_point(point))
                }
            };
            objects.push(obj);
        }
        Ok(objects)
    }

    /// Replays and checks that every landmark is reproduced within 8x eps.
    pub fn check_replay(&self) -> Result<()> {
        self.check_structure()?;
        let objects = self.replay()?;
        for (name, &idx) in &self.landmarks {
            if !objects[idx].eq_eps(&self.steps[idx].result) {
                return Err(Error::Script {
                    line: idx,
                    detail: format!("replay diverged at landmark '{name}'"),
                });
            }
        }
        Ok(())
    }

    /// Structural + value comparison at tolerance; landmark names must
    /// match and carry eps-equal values.
    pub fn eq_eps(&self, other: &Trace) -> bool {
        if self.steps.len() != other.steps.len()
            || self.target != other.target
            || self.precision_bits != other.precision_bits
        {
            return false;
        }
        for (a, b) in self.steps.iter().zip(other.steps.iter()) {
            if a.op != b.op || !a.result.eq_eps(&b.result) {
                return false;
            }
        }
        if self.landmarks.len() != other.landmarks.len() {
            return false;
        }
        for (name, &idx) in &self.landmarks {
            match other.landmarks.get(name) {
                Some(&odx) => {
                    if !self.steps[idx].result.eq_eps(&other.steps[odx].result) {
                        return false;
                    }
                }
                None => return false,
            }
        }
        true
    }
}

/// The start configuration: a paper square with named corners and edge
/// lines, plus any construction-specific given objects.
#[derive(Clone, Debug)]
pub struct StartConfig {
    pub side: Scalar,
    pub extra_points: Vec<(String, Point)>,
    pub extra_lines: Vec<(String, Line)>,
}

impl StartConfig {
    /// Square `[0, side]^2` with corners `A B C D` counterclockwise from
    /// the origin and edges `AB BC CD DA`; `AB` is the x-axis, `DA` the
    /// y-axis. The side must be positive.
    pub fn square(side: Scalar) -> StartConfig {
        assert!(
            !side.is_sign_negative() && !side.is_zero_eps(),
            "start square needs a positive side"
        );
        StartConfig {
            side,
            extra_points: vec![],
            extra_lines: vec![],
        }
    }

    pub fn unit() -> StartConfig {
        StartConfig::square(Scalar::one())
    }

    pub fn with_point(mut self, name: &str, p: Point) -> StartConfig {
        self.extra_points.push((name.to_string(), p));
        self
    }

    pub fn with_line(mut self, name: &str, l: Line) -> StartConfig {
        self.extra_lines.push((name.to_string(), l));
        self
    }

    /// All named start objects in a fixed order.
    pub fn objects(&self) -> Vec<(String, Object)> {
        let s = &self.side;
        let zero = Scalar::zero();
        let a = Point::new(zero.clone(), zero.clone());
        let b = Point::new(s.clone(), zero.clone());
        let c = Point::new(s.clone(), s.clone());
        let d = Point::new(zero.clone(), s.clone());
        let edge = |p: &Point, q: &Point| Line::through(p, q).expect("square corners distinct");
        let mut out = vec![
            ("A".to_string(), Object::Point(a.clone())),
            ("B".to_string(), Object::Point(b.clone())),
            ("C".to_string(), Object::Point(c.clone())),
            ("D".to_string(), Object::Point(d.clone())),
            ("AB".to_string(), Object::Line(edge(&a, &b))),
            ("BC".to_string(), Object::Line(edge(&b, &c))),
            ("CD".to_string(), Object::Line(edge(&c, &d))),
            ("DA".to_string(), Object::Line(edge(&d, &a))),
        ];
        for (name, p) in &self.extra_points {
            out.push((name.clone(), Object::Point(p.clone())));
        }
        for (name, l) in &self.extra_lines {
            out.push((name.clone(), Object::Line(l.clone())));
        }
        out
    }
}

/// Typed handle to a point step.
#[derive(Copy, Clone, Debug)]
pub struct PointRef(pub usize);

/// Typed handle to a crease step.
#[derive(Copy, Clone, Debug)]
pub struct LineRef(pub usize);

/// Records steps while executing them, producing a [`Trace`].
pub struct TraceBuilder {
    steps: Vec<TraceStep>,
    landmarks: BTreeMap<String, usize>,
    names: BTreeMap<String, usize>,
}

impl TraceBuilder {
    pub fn new() -> TraceBuilder {
        TraceBuilder {
            steps: vec![],
            landmarks: BTreeMap::new(),
            names: BTreeMap::new(),
        }
    }

    /// Imports every start object as a named given step.
    pub fn with_start(start: &StartConfig) -> TraceBuilder {
        let mut b = TraceBuilder::new();
        for (name, obj) in start.objects() {
            match obj {
                Object::Point(p) => {
                    b.given_point(&name, p);
                }
                Object::Line(l) => {
                    b.given_line(&name, l);
                }
            }
        }
        b
    }

    fn push(&mut self, name: &str, op: StepOp, result: Object) -> usize {
        let idx = self.steps.len();
        self.steps.push(TraceStep { op, result });
        if !name.is_empty() {
            self.landmarks.insert(name.to_string(), idx);
            self.names.insert(name.to_string(), idx);
        }
        idx
    }

    pub fn given_point(&mut self, name: &str, p: Point) -> PointRef {
        PointRef(self.push(name, StepOp::GivenPoint, Object::Point(p)))
    }

    pub fn given_line(&mut self, name: &str, l: Line) -> LineRef {
        LineRef(self.push(name, StepOp::GivenLine, Object::Line(l)))
    }

    pub fn point(&self, r: PointRef) -> &Point {
        self.steps[r.0].result.as_point().expect("typed handle")
    }

    pub fn line(&self, r: LineRef) -> &Line {
        self.steps[r.0].result.as_line().expect("typed handle")
    }

    pub fn point_ref(&self, name: &str) -> Option<PointRef> {
        let &idx = self.names.get(name)?;
        self.steps[idx].result.as_point().map(|_| PointRef(idx))
    }

    pub fn line_ref(&self, name: &str) -> Option<LineRef> {
        let &idx = self.names.get(name)?;
        self.steps[idx].result.as_line().map(|_| LineRef(idx))
    }

    fn record_fold(
        &mut self,
        name: &str,
        axiom: Axiom,
        inputs: Vec<usize>,
        folds: Vec<Fold>,
        branch: usize,
    ) -> Result<LineRef> {
        if branch >= folds.len() {
            return Err(Error::BranchUnavailable {
                requested: branch,
                available: folds.len(),
            });
        }
        let crease = folds[branch].crease.clone();
        let idx = self.push(
            name,
            StepOp::Fold {
                axiom,
                inputs,
                branch,
            },
            Object::Line(crease),
        );
        Ok(LineRef(idx))
    }

    pub fn fold_o2(&mut self, p: PointRef, q: PointRef, name: &str) -> Result<LineRef> {
        let folds = vec![axioms::fold_o2(self.point(p), self.point(q))?];
        self.record_fold(name, Axiom::O2, vec![p.0, q.0], folds, 0)
    }

    pub fn fold_o3(&mut self, p: PointRef, q: PointRef, name: &str) -> Result<LineRef> {
        let folds = vec![axioms::fold_o3(self.point(p), self.point(q))?];
        self.record_fold(name, Axiom::O3, vec![p.0, q.0], folds, 0)
    }

    pub fn fold_o4(&mut self, g: LineRef, h: LineRef, branch: usize, name: &str) -> Result<LineRef> {
        let folds = axioms::fold_o4(self.line(g), self.line(h))?;
        self.record_fold(name, Axiom::O4, vec![g.0, h.0], folds, branch)
    }

    pub fn fold_o5(
        &mut self,
        p: PointRef,
        g: LineRef,
        q: PointRef,
        branch: usize,
        name: &str,
    ) -> Result<LineRef> {
        let folds = axioms::fold_o5(self.point(p), self.line(g), self.point(q));
        self.record_fold(name, Axiom::O5, vec![p.0, g.0, q.0], folds, branch)
    }

    pub fn fold_o6(
        &mut self,
        p: PointRef,
        pl: LineRef,
        q: PointRef,
        ql: LineRef,
        branch: usize,
        name: &str,
    ) -> Result<LineRef> {
        let folds = axioms::fold_o6(self.point(p), self.line(pl), self.point(q), self.line(ql))?;
        self.record_fold(name, Axiom::O6, vec![p.0, pl.0, q.0, ql.0], folds, branch)
    }

    /// Solves the simultaneous fold and projects to the creases, so callers
    /// can pick a branch geometrically before recording it.
    pub fn peek_o6(
        &self,
        p: PointRef,
        pl: LineRef,
        q: PointRef,
        ql: LineRef,
    ) -> Result<Vec<Line>> {
        Ok(
            axioms::fold_o6(self.point(p), self.line(pl), self.point(q), self.line(ql))?
                .into_iter()
                .map(|f| f.crease)
                .collect(),
        )
    }

    pub fn peek_o5(&self, p: PointRef, g: LineRef, q: PointRef) -> Vec<Line> {
        axioms::fold_o5(self.point(p), self.line(g), self.point(q))
            .into_iter()
            .map(|f| f.crease)
            .collect()
    }

    pub fn peek_o4(&self, g: LineRef, h: LineRef) -> Result<Vec<Line>> {
        Ok(axioms::fold_o4(self.line(g), self.line(h))?
            .into_iter()
            .map(|f| f.crease)
            .collect())
    }

    pub fn fold_lot(&mut self, g: LineRef, q: PointRef, name: &str) -> Result<LineRef> {
        let folds = vec![axioms::fold_lot(self.line(g), self.point(q))];
        self.record_fold(name, Axiom::Lot, vec![g.0, q.0], folds, 0)
    }

    pub fn intersect(&mut self, g: LineRef, h: LineRef, name: &str) -> Result<PointRef> {
        let p = self
            .line(g)
            .intersect(self.line(h))
            .ok_or(Error::DegenerateConfiguration)?;
        let idx = self.push(name, StepOp::Intersect { g: g.0, h: h.0 }, Object::Point(p));
        Ok(PointRef(idx))
    }

    pub fn reflect(&mut self, p: PointRef, across: LineRef, name: &str) -> PointRef {
        let img = self.line(across).reflect_point(self.point(p));
        let idx = self.push(
            name,
            StepOp::ReflectPoint {
                p: p.0,
                across: across.0,
            },
            Object::Point(img),
        );
        PointRef(idx)
    }

    /// Adds a landmark name for an already recorded step.
    pub fn landmark_point(&mut self, name: &str, r: PointRef) {
        self.landmarks.insert(name.to_string(), r.0);
        self.names.insert(name.to_string(), r.0);
    }

    pub fn landmark_line(&mut self, name: &str, r: LineRef) {
        self.landmarks.insert(name.to_string(), r.0);
        self.names.insert(name.to_string(), r.0);
    }

    pub fn finish(self, target: &str) -> Trace {
        Trace {
            precision_bits: precision(),
            steps: self.steps,
            landmarks: self.landmarks,
            target: target.to_string(),
        }
    }
}

impl Default for TraceBuilder {
    fn default() -> Self {
        TraceBuilder::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_trace() -> Trace {
        let start = StartConfig::square(Scalar::from_int(2));
        let mut b = TraceBuilder::with_start(&start);
        let a = b.point_ref("A").unwrap();
        let c = b.point_ref("C").unwrap();
        let diag = b.fold_o2(a, c, "diag").unwrap();
        let b_corner = b.point_ref("B").unwrap();
        let d_corner = b.point_ref("D").unwrap();
        let anti = b.fold_o2(b_corner, d_corner, "anti").unwrap();
        let center = b.intersect(diag, anti, "O").unwrap();
        let img = b.reflect(b_corner, diag, "Bimg");
        let _ = (center, img);
        b.finish("O")
    }

    #[test]
    fn builder_records_and_replays() {
        let t = sample_trace();
        assert!(t.check_structure().is_ok());
        assert!(t.check_replay().is_ok());
        let o = t.landmark_point("O").unwrap();
        assert!(o.eq_eps(&Point::from_f64(1.0, 1.0)));
        // folding B over the main diagonal lands on D
        let img = t.landmark_point("Bimg").unwrap();
        assert!(img.eq_eps(&Point::from_f64(0.0, 2.0)));
    }

    #[test]
    fn tampered_landmark_fails_replay() {
        let mut t = sample_trace();
        let &idx = t.landmarks.get("O").unwrap();
        t.steps[idx].result = Object::Point(Point::from_f64(1.0, 1.001));
        assert!(t.check_replay().is_err());
    }

    #[test]
    fn forward_reference_is_rejected() {
        let mut t = sample_trace();
        // wire the first fold to reference a later step
        let late = t.landmarks["Bimg"];
        for step in t.steps.iter_mut() {
            if let StepOp::Fold { inputs, .. } = &mut step.op {
                inputs[0] = late;
                break;
            }
        }
        assert!(t.check_structure().is_err());
    }

    #[test]
    fn branch_out_of_range_is_rejected() {
        let start = StartConfig::unit();
        let mut b = TraceBuilder::with_start(&start);
        let ab = b.line_ref("AB").unwrap();
        let cd = b.line_ref("CD").unwrap();
        // parallel edges: exactly one mid-parallel, branch 1 must fail
        let err = b.fold_o4(ab, cd, 1, "mid").unwrap_err();
        assert!(matches!(err, Error::BranchUnavailable { available: 1, .. }));
    }

    #[test]
    fn trace_equality_at_tolerance() {
        let t1 = sample_trace();
        let mut t2 = sample_trace();
        assert!(t1.eq_eps(&t2));
        let &idx = t2.landmarks.get("O").unwrap();
        t2.steps[idx].result = Object::Point(Point::from_f64(1.0, 1.01));
        assert!(!t1.eq_eps(&t2));
    }
}
