//! The six single-fold axioms plus the perpendicular-drop corollary.
//!
//! Each solver is total: it returns every admissible crease, deduplicated
//! and sorted by direction angle then offset, so scripts can address
//! branches stably. A [`Fold`] keeps the crease together with the axiom and
//! the resolved inputs that produced it, which is what [`verify_fold`]
//! re-checks.
//!
//! The simultaneous fold (point onto line, point onto line) is the
//! cubic-solving axiom: after a similarity carries `P` to the origin and its
//! target line to `y = 2`, the crease `y = m x + b` forces `b = m^2 + 1`,
//! and the second incidence condition becomes a cubic in the slope `m`.

use crate::error::{Error, Result};
use crate::geom::{intersect_line_circle, Circle, Line, Point};
use crate::polysolve::{solve_cubic, solve_quadratic};
use crate::scalar::Scalar;

/// Which fold primitive produced a crease.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// Intersection of two creases (produces a point, not a crease).
    O1,
    /// Crease through two points.
    O2,
    /// Fold one point onto another: perpendicular bisector.
    O3,
    /// Fold line onto line: mid-parallel or angle bisectors.
    O4,
    /// Fold a point onto a line with the crease through an anchor point.
    O5,
    /// Fold two points onto two lines simultaneously.
    O6,
    /// Fold a line onto itself through a point: the perpendicular drop.
    Lot,
}

impl Axiom {
    /// Maximum number of creases an invocation can produce.
    pub fn max_solutions(self) -> usize {
        match self {
            Axiom::O1 | Axiom::O2 | Axiom::O3 | Axiom::Lot => 1,
            Axiom::O4 | Axiom::O5 => 2,
            Axiom::O6 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axiom::O1 => "O1",
            Axiom::O2 => "O2",
            Axiom::O3 => "O3",
            Axiom::O4 => "O4",
            Axiom::O5 => "O5",
            Axiom::O6 => "O6",
            Axiom::Lot => "LOT",
        }
    }

    pub fn parse(text: &str) -> Option<Axiom> {
        Some(match text {
            "O1" => Axiom::O1,
            "O2" => Axiom::O2,
            "O3" => Axiom::O3,
            "O4" => Axiom::O4,
            "O5" => Axiom::O5,
            "O6" => Axiom::O6,
            "LOT" => Axiom::Lot,
            _ => return None,
        })
    }
}

/// Geometric argument of a fold, kept for later verification.
#[derive(Clone, Debug)]
pub enum FoldInput {
    Point(Point),
    Line(Line),
}

/// A crease with its provenance.
#[derive(Clone, Debug)]
pub struct Fold {
    pub crease: Line,
    pub axiom: Axiom,
    pub inputs: Vec<FoldInput>,
    /// Position among this invocation's solutions after canonical ordering.
    pub branch_index: usize,
}

fn within(v: &Scalar, mult: i64) -> bool {
    v.abs() <= Scalar::from_int(mult) * &v.eps()
}

fn near_line(l: &Line, p: &Point) -> bool {
    within(&l.distance_to(p), 8)
}

/// Dedupes, sorts canonically and wraps creases as folds.
fn finalize(creases: Vec<Line>, axiom: Axiom, inputs: Vec<FoldInput>) -> Vec<Fold> {
    let mut unique: Vec<Line> = vec![];
    for c in creases {
        if !unique.iter().any(|u| u.is_same(&c)) {
            unique.push(c);
        }
    }
    unique.sort_by(|a, b| a.canonical_cmp(b));
    unique
        .into_iter()
        .enumerate()
        .map(|(i, crease)| Fold {
            crease,
            axiom,
            inputs: inputs.clone(),
            branch_index: i,
        })
        .collect()
}

/// Axiom 1: the intersection point of two non-parallel creases.
pub fn fold_o1(g: &Line, h: &Line) -> Option<Point> {
    g.intersect(h)
}

/// Axiom 2: the crease through two distinct points.
pub fn fold_o2(p: &Point, q: &Point) -> Result<Fold> {
    let crease = Line::through(p, q)?;
    Ok(Fold {
        crease,
        axiom: Axiom::O2,
        inputs: vec![FoldInput::Point(p.clone()), FoldInput::Point(q.clone())],
        branch_index: 0,
    })
}

/// Axiom 3: fold `q` onto `p`; the crease is the perpendicular bisector.
pub fn fold_o3(p: &Point, q: &Point) -> Result<Fold> {
    let crease = Line::midperpendicular(p, q)?;
    Ok(Fold {
        crease,
        axiom: Axiom::O3,
        inputs: vec![FoldInput::Point(p.clone()), FoldInput::Point(q.clone())],
        branch_index: 0,
    })
}

/// Axiom 4: fold `g` onto `h`. Parallel lines give the mid-parallel,
/// crossing lines the two (mutually perpendicular) angle bisectors.
pub fn fold_o4(g: &Line, h: &Line) -> Result<Vec<Fold>> {
    if g.is_same(h) {
        return Err(Error::IdenticalLines);
    }
    let inputs = vec![FoldInput::Line(g.clone()), FoldInput::Line(h.clone())];
    if g.is_parallel(h) {
        // canonical form gives parallel lines identical normals
        let mid = Line::new(
            g.a().clone(),
            g.b().clone(),
            (g.c() + h.c()) * &Scalar::from_ratio(1, 2),
        )?;
        return Ok(finalize(vec![mid], Axiom::O4, inputs));
    }
    let sum = Line::new(g.a() + h.a(), g.b() + h.b(), g.c() + h.c());
    let diff = Line::new(g.a() - h.a(), g.b() - h.b(), g.c() - h.c());
    let creases = [sum, diff].into_iter().flatten().collect();
    Ok(finalize(creases, Axiom::O4, inputs))
}

/// Crease lines of axiom 5 without the provenance wrapper: fold `p` onto
/// `g` such that the crease passes through `anchor`. Implemented as the
/// circle construction: the images of `p` are the intersections of `g`
/// with the circle around `anchor` through `p`.
fn o5_creases(p: &Point, g: &Line, anchor: &Point) -> Vec<Line> {
    if p.distance(anchor).is_zero_eps() {
        return vec![];
    }
    let circle = match Circle::around(anchor, p) {
        Ok(c) => c,
        Err(_) => return vec![],
    };
    let mut creases = vec![];
    for image in intersect_line_circle(g, &circle) {
        let crease = if image.eq_eps(p) {
            // p itself lies on g; the crease fixing p is the line p-anchor
            Line::through(p, anchor)
        } else {
            Line::midperpendicular(p, &image)
        };
        if let Ok(c) = crease {
            creases.push(c);
        }
    }
    creases
}

/// Axiom 5: fold `p` onto `g` with the crease through `q`; 0 to 2 creases.
pub fn fold_o5(p: &Point, g: &Line, q: &Point) -> Vec<Fold> {
    let inputs = vec![
        FoldInput::Point(p.clone()),
        FoldInput::Line(g.clone()),
        FoldInput::Point(q.clone()),
    ];
    finalize(o5_creases(p, g, q), Axiom::O5, inputs)
}

/// Similarity frame carrying a point to the origin and its line to `y = 2`.
struct Frame {
    origin: Point,
    cos: Scalar,
    sin: Scalar,
    scale: Scalar,
}

impl Frame {
    /// Requires `p` to be off the line `pl`.
    fn normalizing(p: &Point, pl: &Line) -> Frame {
        let signed = pl.eval(p);
        let sign = if signed.is_sign_negative() {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        Frame {
            origin: p.clone(),
            cos: &sign * pl.b(),
            sin: &sign * pl.a(),
            scale: Scalar::from_int(2) / &signed.abs(),
        }
    }

    fn to_frame_point(&self, p: &Point) -> Point {
        let dx = &p.x - &self.origin.x;
        let dy = &p.y - &self.origin.y;
        Point::new(
            &self.scale * &(&self.cos * &dx - &self.sin * &dy),
            &self.scale * &(&self.sin * &dx + &self.cos * &dy),
        )
    }

    /// Frame coefficients of a world line: `(R n, scale * eval(origin))`.
    fn to_frame_line(&self, l: &Line) -> (Scalar, Scalar, Scalar) {
        let a = &self.cos * l.a() - &self.sin * l.b();
        let b = &self.sin * l.a() + &self.cos * l.b();
        let c = &self.scale * &l.eval(&self.origin);
        (a, b, c)
    }

    /// World line from frame coefficients.
    fn line_to_world(&self, a: &Scalar, b: &Scalar, c: &Scalar) -> Result<Line> {
        let wa = &self.cos * a + &self.sin * b;
        let wb = -&self.sin * a + &self.cos * b;
        let wc = c / &self.scale - &(&wa * &self.origin.x + &wb * &self.origin.y);
        Line::new(wa, wb, wc)
    }
}

/// Creases perpendicular to `base` that reflect `q` onto `ql`.
/// At most one exists unless `ql` is parallel to `base` (then none, or the
/// excluded infinite family when `q` already lies on `ql`).
fn perp_creases(base: &Line, q: &Point, ql: &Line) -> Vec<Line> {
    // crease normal = direction of `base`
    let na = -base.b();
    let nb = base.a().clone();
    let dot = &na * ql.a() + &nb * ql.b();
    if dot.is_zero_eps() {
        return vec![];
    }
    let d = ql.eval(q) / &(Scalar::from_int(2) * &dot);
    let c = &d - &(&na * &q.x + &nb * &q.y);
    Line::new(na, nb, c).into_iter().collect()
}

/// Axiom 6: fold `p` onto `pl` and `q` onto `ql` simultaneously; up to
/// three creases (the common tangents of the two fold parabolas).
///
/// Case analysis: with both points off their lines and the lines crossing,
/// the similarity frame reduces the problem to the slope cubic. Parallel
/// target lines drop the cubic term (a quadratic, at most two creases).
/// A point sitting on its target line splits the solutions into creases
/// through that point (an anchored point-onto-line solve for the other
/// pair) plus at most one crease perpendicular to the incident line. The
/// fully incident parallel configuration admits infinitely many creases
/// and is rejected, as are coincident points or identical lines.
pub fn fold_o6(p: &Point, pl: &Line, q: &Point, ql: &Line) -> Result<Vec<Fold>> {
    if p.distance(q).is_zero_eps() || pl.is_same(ql) {
        return Err(Error::DegenerateConfiguration);
    }
    let p_on = pl.contains(p);
    let q_on = ql.contains(q);
    if p_on && q_on && pl.is_parallel(ql) {
        return Err(Error::DegenerateConfiguration);
    }

    let mut creases: Vec<Line> = vec![];
    if p_on {
        // crease through p, or perpendicular to pl
        creases.extend(o5_creases(q, ql, p));
        creases.extend(perp_creases(pl, q, ql));
    } else if q_on {
        creases.extend(o5_creases(p, pl, q));
        creases.extend(perp_creases(ql, p, pl));
    } else {
        let frame = Frame::normalizing(p, pl);
        let fq = frame.to_frame_point(q);
        let (u, v) = (fq.x, fq.y);
        let (qa, qb, qc) = frame.to_frame_line(ql);
        let mut slopes: Vec<Scalar> = vec![];
        if qa.is_zero_eps() {
            // target line parallel to y = 2: the slope condition is quadratic
            let h = -(&qc / &qb);
            let two = Scalar::from_int(2);
            let ca = &v + &two - &h;
            let cb = &two * &u;
            let cc = &two - &v - &h;
            if !ca.is_zero_eps() {
                if let Ok(roots) = solve_quadratic(&ca, &cb, &cc) {
                    slopes.extend(roots.roots());
                }
            } else if !cb.is_zero_eps() {
                slopes.push(-(&cc / &cb));
            }
        } else {
            // q: x + r y + s = 0; image-on-line gives the slope cubic
            // 2m^3 + (u - rv - 2r - s) m^2 - (2v - 2 + 2ru) m - (u - rv + 2r + s) = 0
            let r = &qb / &qa;
            let sc = &qc / &qa;
            let two = Scalar::from_int(2);
            let rv = &r * &v;
            let c3 = two.clone();
            let c2 = &u - &rv - &(&two * &r) - &sc;
            let c1 = -(&two * &v - &two + &(&two * &r * &u));
            let c0 = -(&u - &rv + &(&two * &r) + &sc);
            if let Ok(roots) = solve_cubic(&c3, &c2, &c1, &c0) {
                slopes.extend(roots.roots());
            }
        }
        for m in slopes {
            // crease in frame: m x - y + (m^2 + 1) = 0
            let b = &m * &m + &Scalar::one();
            if let Ok(line) = frame.line_to_world(&m, &-Scalar::one(), &b) {
                creases.push(line);
            }
        }
    }

    // keep only creases that satisfy both incidence conditions
    creases.retain(|t| near_line(pl, &t.reflect_point(p)) && near_line(ql, &t.reflect_point(q)));

    let inputs = vec![
        FoldInput::Point(p.clone()),
        FoldInput::Line(pl.clone()),
        FoldInput::Point(q.clone()),
        FoldInput::Line(ql.clone()),
    ];
    Ok(finalize(creases, Axiom::O6, inputs))
}

/// The perpendicular-drop corollary: fold `g` onto itself with the crease
/// through `q`.
pub fn fold_lot(g: &Line, q: &Point) -> Fold {
    Fold {
        crease: g.perpendicular_through(q),
        axiom: Axiom::Lot,
        inputs: vec![FoldInput::Line(g.clone()), FoldInput::Point(q.clone())],
        branch_index: 0,
    }
}

/// Parametrizes the creases mapping `p` onto `pl` by the image point
/// `X(t) = foot + t * dir(pl)` and returns the residual of the second
/// incidence condition as an exact cubic in `t` (coefficients ascending),
/// together with the node points used. Test oracle machinery: independent
/// of the slope-cubic route inside [`fold_o6`].
pub fn o6_incidence_cubic(
    p: &Point,
    pl: &Line,
    q: &Point,
    ql: &Line,
    bits: u32,
) -> [Scalar; 4] {
    let up_pt = |pt: &Point| Point::new(pt.x.with_prec(bits), pt.y.with_prec(bits));
    let up_ln = |l: &Line| {
        Line::new(
            l.a().with_prec(bits),
            l.b().with_prec(bits),
            l.c().with_prec(bits),
        )
        .unwrap()
    };
    let (p, q) = (up_pt(p), up_pt(q));
    let (pl, ql) = (up_ln(pl), up_ln(ql));
    let foot = pl.point_on();
    let dir = (-pl.b(), pl.a().clone());
    // residual numerator g(t) = eval_ql(reflect(q, midperp(p, X(t)))) * |X(t)-p|^2
    let residual = |t: &Scalar| -> Scalar {
        let x = Point::new(&foot.x + &(t * &dir.0), &foot.y + &(t * &dir.1));
        let dx = &x.x - &p.x;
        let dy = &x.y - &p.y;
        let norm2 = &dx * &dx + &dy * &dy;
        let mid = p.midpoint(&x);
        // un-normalized reflection of q across the perpendicular bisector
        let d = (&dx * &(&q.x - &mid.x) + &dy * &(&q.y - &mid.y)) / &norm2;
        let two = Scalar::from_int_prec(bits, 2);
        let img = Point::new(&q.x - &(&two * &d * &dx), &q.y - &(&two * &d * &dy));
        ql.eval(&img) * &norm2
    };
    let g0 = residual(&Scalar::from_int_prec(bits, 0));
    let g1 = residual(&Scalar::from_int_prec(bits, 1));
    let gm1 = residual(&Scalar::from_int_prec(bits, -1));
    let g2 = residual(&Scalar::from_int_prec(bits, 2));
    // Newton-style interpolation on nodes -1, 0, 1, 2
    let half = Scalar::from_ratio(1, 2).with_prec(bits);
    let c0 = g0.clone();
    let c2 = (&g1 + &gm1) * &half - &g0;
    let odd = (&g1 - &gm1) * &half;
    let rhs = &g2 - &c0 - &(Scalar::from_int_prec(bits, 4) * &c2);
    let c3 = (&rhs - &(Scalar::from_int_prec(bits, 2) * &odd)) / &Scalar::from_int_prec(bits, 6);
    let c1 = &odd - &c3;
    [c0, c1, c2, c3]
}

/// Re-checks the defining predicate of a fold's axiom against its crease,
/// at 8x the comparison tolerance.
pub fn verify_fold(fold: &Fold) -> bool {
    let t = &fold.crease;
    match (fold.axiom, fold.inputs.as_slice()) {
        (Axiom::O2, [FoldInput::Point(p), FoldInput::Point(q)]) => {
            within(&t.eval(p), 8) && within(&t.eval(q), 8)
        }
        (Axiom::O3, [FoldInput::Point(p), FoldInput::Point(q)]) => {
            within(&p.distance(&t.reflect_point(q)), 8)
        }
        (Axiom::O4, [FoldInput::Line(g), FoldInput::Line(h)]) => {
            let image = t.reflect_line(g);
            image.is_same_within(h, 8)
        }
        (Axiom::O5, [FoldInput::Point(p), FoldInput::Line(g), FoldInput::Point(q)]) => {
            near_line(g, &t.reflect_point(p)) && within(&t.eval(q), 8)
        }
        (
            Axiom::O6,
            [FoldInput::Point(p), FoldInput::Line(pl), FoldInput::Point(q), FoldInput::Line(ql)],
        ) => near_line(pl, &t.reflect_point(p)) && near_line(ql, &t.reflect_point(q)),
        (Axiom::Lot, [FoldInput::Line(g), FoldInput::Point(q)]) => {
            let dot = t.a() * g.a() + t.b() * g.b();
            within(&dot, 8) && within(&t.eval(q), 8)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Parabola;
    use crate::polysolve::Polynomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(x: f64, y: f64) -> Point {
        Point::from_f64(x, y)
    }

    fn ln(a: f64, b: f64, c: f64) -> Line {
        Line::from_f64(a, b, c).unwrap()
    }

    #[test]
    fn o1_delegates_to_line_intersection() {
        assert!(fold_o1(&ln(1.0, 0.0, 0.0), &ln(0.0, 1.0, 0.0))
            .unwrap()
            .eq_eps(&pt(0.0, 0.0)));
        assert!(fold_o1(&ln(0.0, 1.0, 0.0), &ln(0.0, 1.0, -2.0)).is_none());
        assert!(fold_o1(&ln(2.0, -1.0, 0.0), &ln(1.0, 0.0, -1.0))
            .unwrap()
            .eq_eps(&pt(1.0, 2.0)));
    }

    #[test]
    fn o2_connecting_creases() {
        let f = fold_o2(&pt(0.0, 0.0), &pt(1.0, 1.0)).unwrap();
        assert!(f.crease.is_same(&ln(1.0, -1.0, 0.0)));
        let f = fold_o2(&pt(1.0, 0.0), &pt(0.0, 1.0)).unwrap();
        assert!(f.crease.is_same(&ln(1.0, 1.0, -1.0)));
        let f = fold_o2(&pt(0.0, 0.0), &pt(0.0, 3.0)).unwrap();
        assert!(f.crease.is_same(&ln(1.0, 0.0, 0.0)));
        assert!(fold_o2(&pt(1.0, 1.0), &pt(1.0, 1.0)).is_err());
    }

    #[test]
    fn o3_point_onto_point() {
        let f = fold_o3(&pt(0.0, 0.0), &pt(2.0, 0.0)).unwrap();
        assert!(f.crease.is_same(&ln(1.0, 0.0, -1.0)));
        let f = fold_o3(&pt(-1.0, 0.0), &pt(1.0, 0.0)).unwrap();
        assert!(f.crease.is_same(&ln(1.0, 0.0, 0.0)));
        // the crease maps q exactly onto p
        let f = fold_o3(&pt(0.7, -0.2), &pt(-1.3, 2.9)).unwrap();
        assert!(f.crease.reflect_point(&pt(-1.3, 2.9)).eq_eps(&pt(0.7, -0.2)));
    }

    #[test]
    fn o4_mid_parallel_and_bisectors() {
        let folds = fold_o4(&ln(0.0, 1.0, 0.0), &ln(0.0, 1.0, -2.0)).unwrap();
        assert_eq!(folds.len(), 1);
        assert!(folds[0].crease.is_same(&ln(0.0, 1.0, -1.0)));

        let folds = fold_o4(&ln(0.0, 1.0, 0.0), &ln(1.0, 0.0, 0.0)).unwrap();
        assert_eq!(folds.len(), 2);
        assert!(folds[0].crease.is_same(&ln(1.0, -1.0, 0.0)));
        assert!(folds[1].crease.is_same(&ln(1.0, 1.0, 0.0)));

        // the bisector pair is mutually perpendicular
        let dot = folds[0].crease.a() * folds[1].crease.a()
            + folds[0].crease.b() * folds[1].crease.b();
        assert!(dot.is_zero_eps());

        assert_eq!(
            fold_o4(&ln(0.0, 1.0, 0.0), &ln(0.0, 1.0, 0.0)).unwrap_err(),
            Error::IdenticalLines
        );
    }

    #[test]
    fn o4_bisects_sixty_degrees() {
        // y = 0 against y = sqrt(3) x: bisectors at 30 and 120 degrees,
        // oracle via the half-angle of the direction angles
        let sqrt3 = 3f64.sqrt();
        let folds = fold_o4(&ln(0.0, 1.0, 0.0), &ln(sqrt3, -1.0, 0.0)).unwrap();
        let angles: Vec<f64> = folds
            .iter()
            .map(|f| f.crease.direction_angle().rad_to_deg().to_f64())
            .collect();
        assert!((angles[0] - 30.0).abs() < 1e-50);
        assert!((angles[1] - 120.0).abs() < 1e-50);
    }

    #[test]
    fn o5_tangent_cases() {
        // circle around the anchor through p is tangent to g
        let folds = fold_o5(&pt(0.0, 0.0), &ln(0.0, 1.0, 1.0), &pt(0.0, -0.5));
        assert_eq!(folds.len(), 1);
        assert!(folds[0].crease.is_same(&ln(0.0, 1.0, 0.5)));

        let folds = fold_o5(&pt(0.0, 2.0), &ln(0.0, 1.0, 0.0), &pt(0.0, 1.0));
        assert_eq!(folds.len(), 1);
        assert!(folds[0].crease.is_same(&ln(0.0, 1.0, -1.0)));

        // no solution when the circle misses the line
        let folds = fold_o5(&pt(0.0, 2.0), &ln(0.0, 1.0, 5.0), &pt(0.0, 1.0));
        assert!(folds.is_empty());
    }

    #[test]
    fn o5_parabola_tangent_slopes() {
        // folding the focus (0,1) onto the directrix y = -1 through (3, 2)
        // yields the tangents of x^2 = 4y through that point; slopes are the
        // roots {1, 2} of m^2 - 3m + 2
        let folds = fold_o5(&pt(0.0, 1.0), &ln(0.0, 1.0, 1.0), &pt(3.0, 2.0));
        assert_eq!(folds.len(), 2);
        let s0 = folds[0].crease.slope().unwrap();
        let s1 = folds[1].crease.slope().unwrap();
        assert!(s0.eq_eps(&Scalar::one()));
        assert!(s1.eq_eps(&Scalar::from_int(2)));
    }

    #[test]
    fn o6_cube_root_crease() {
        // P=(-1,0), p: x=1, Q=(0,-k), q: y=k has the unique crease
        // y = -x/cbrt(k) + cbrt(k)
        let k = 8.0;
        let folds = fold_o6(
            &pt(-1.0, 0.0),
            &ln(1.0, 0.0, -1.0),
            &pt(0.0, -k),
            &ln(0.0, 1.0, -k),
        )
        .unwrap();
        assert_eq!(folds.len(), 1);
        assert!(folds[0].crease.is_same(&ln(0.5, 1.0, -2.0)));
        assert!(verify_fold(&folds[0]));

        let folds = fold_o6(
            &pt(-1.0, 0.0),
            &ln(1.0, 0.0, -1.0),
            &pt(0.0, -1.0),
            &ln(0.0, 1.0, -1.0),
        )
        .unwrap();
        assert_eq!(folds.len(), 1);
        assert!(folds[0].crease.is_same(&ln(1.0, 1.0, -1.0)));
    }

    #[test]
    fn o6_exclusion_clause() {
        // P on p, Q on q, p parallel q: infinitely many creases
        assert_eq!(
            fold_o6(
                &pt(0.0, 0.0),
                &ln(0.0, 1.0, 0.0),
                &pt(1.0, 2.0),
                &ln(0.0, 1.0, -2.0),
            )
            .unwrap_err(),
            Error::DegenerateConfiguration
        );
        // distinctness of the inputs is part of the contract
        assert!(fold_o6(&pt(1.0, 1.0), &ln(0.0, 1.0, 0.0), &pt(1.0, 1.0), &ln(1.0, 0.0, 0.0)).is_err());
        assert!(fold_o6(&pt(1.0, 1.0), &ln(0.0, 1.0, 0.0), &pt(2.0, 2.0), &ln(0.0, 1.0, 0.0)).is_err());
    }

    #[test]
    fn o6_incident_point_cases() {
        // P on p, Q on q, lines crossing: the perpendicular drops and the
        // connecting line, all three distinct here
        let folds = fold_o6(
            &pt(1.0, 0.0),
            &ln(0.0, 1.0, 0.0),
            &pt(0.0, 2.0),
            &ln(1.0, 0.0, 0.0),
        )
        .unwrap();
        assert_eq!(folds.len(), 3);
        for f in &folds {
            assert!(verify_fold(f), "crease {:?} fails its predicate", f.crease);
        }
    }

    #[test]
    fn o6_parallel_target_lines_quadratic_case() {
        // P off p, q parallel to p: at most two creases
        let folds = fold_o6(
            &pt(0.0, 0.0),
            &ln(0.0, 1.0, -2.0),
            &pt(3.0, 1.0),
            &ln(0.0, 1.0, 1.0),
        )
        .unwrap();
        assert!(!folds.is_empty() && folds.len() <= 2);
        for f in &folds {
            assert!(verify_fold(f));
        }
    }

    #[test]
    fn lot_cases() {
        let f = fold_lot(&ln(0.0, 1.0, 0.0), &pt(2.0, 0.0));
        assert!(f.crease.is_same(&ln(1.0, 0.0, -2.0)));
        let f = fold_lot(&ln(0.0, 1.0, 0.0), &pt(0.0, 1.0));
        assert!(f.crease.is_same(&ln(1.0, 0.0, 0.0)));
        let f = fold_lot(&ln(1.0, 1.0, -1.0), &pt(0.0, 0.0));
        assert!(f.crease.is_same(&ln(1.0, -1.0, 0.0)));
        assert!(verify_fold(&f));
    }

    #[test]
    fn verify_rejects_perturbed_crease() {
        let mut f = fold_o3(&pt(0.0, 0.0), &pt(2.0, 0.0)).unwrap();
        assert!(verify_fold(&f));
        f.crease = ln(1.0, 0.0, -1.001);
        assert!(!verify_fold(&f));
    }

    fn random_point(rng: &mut ChaCha8Rng) -> Point {
        pt(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0))
    }

    fn random_line(rng: &mut ChaCha8Rng) -> Line {
        loop {
            let p = random_point(rng);
            let q = random_point(rng);
            if let Ok(l) = Line::through(&p, &q) {
                return l;
            }
        }
    }

    #[test]
    fn soundness_sweep_all_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..1000 {
            let p = random_point(&mut rng);
            let q = random_point(&mut rng);
            let g = random_line(&mut rng);
            let h = random_line(&mut rng);

            if let Ok(f) = fold_o2(&p, &q) {
                assert!(verify_fold(&f));
            }
            if let Ok(f) = fold_o3(&p, &q) {
                assert!(verify_fold(&f));
            }
            if let Ok(folds) = fold_o4(&g, &h) {
                for f in folds {
                    assert!(verify_fold(&f), "O4 failed");
                }
            }
            for f in fold_o5(&p, &g, &q) {
                assert!(verify_fold(&f), "O5 failed");
            }
            if let Ok(folds) = fold_o6(&p, &g, &q, &h) {
                for f in folds {
                    assert!(verify_fold(&f), "O6 failed");
                }
            }
            assert!(verify_fold(&fold_lot(&g, &p)));
        }
    }

    #[test]
    fn o5_matches_circle_construction() {
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        for _ in 0..1000 {
            let p = random_point(&mut rng);
            let q = random_point(&mut rng);
            let g = random_line(&mut rng);
            if p.distance(&q).is_zero_eps() {
                continue;
            }
            let folds = fold_o5(&p, &g, &q);
            let circle = match Circle::around(&q, &p) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let images = intersect_line_circle(&g, &circle);
            let mut expected: Vec<Line> = vec![];
            for img in &images {
                let crease = if img.eq_eps(&p) {
                    Line::through(&p, &q)
                } else {
                    Line::midperpendicular(&p, img)
                };
                if let Ok(c) = crease {
                    if !expected.iter().any(|e| e.is_same(&c)) {
                        expected.push(c);
                    }
                }
            }
            assert_eq!(folds.len(), expected.len());
            for f in &folds {
                assert!(expected.iter().any(|e| e.is_same(&f.crease)));
            }
        }
    }

    /// Discriminant of the crease-parabola intersection; zero means the
    /// crease touches the parabola in a double point.
    fn tangency_discriminant(crease: &Line, parabola: &Parabola) -> Scalar {
        let x0 = crease.point_on();
        let dir = (-crease.b(), crease.a().clone());
        let wx = &x0.x - &parabola.focus.x;
        let wy = &x0.y - &parabola.focus.y;
        let e0 = parabola.directrix.eval(&x0);
        let ed = parabola.directrix.a() * &dir.0 + parabola.directrix.b() * &dir.1;
        let a = Scalar::one() - &ed * &ed;
        let b = &wx * &dir.0 + &wy * &dir.1 - &(&e0 * &ed);
        let c = &wx * &wx + &wy * &wy - &(&e0 * &e0);
        Scalar::from_int(4) * (&b * &b - &(&a * &c))
    }

    #[test]
    fn creases_are_parabola_tangents() {
        // every crease carrying P onto p (P off p) touches the parabola
        // {focus P, directrix p} exactly once
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let bound = Scalar::exp2i(-100);
        let mut seen = 0;
        while seen < 300 {
            let p = random_point(&mut rng);
            let g = random_line(&mut rng);
            if g.contains(&p) {
                continue;
            }
            let parabola = Parabola::new(p.clone(), g.clone()).unwrap();
            let q = random_point(&mut rng);
            for f in fold_o5(&p, &g, &q) {
                let disc = tangency_discriminant(&f.crease, &parabola);
                assert!(disc.abs() <= bound, "O5 disc = {}", disc.to_f64());
                seen += 1;
            }
            let h = random_line(&mut rng);
            if let Ok(folds) = fold_o6(&p, &g, &q, &h) {
                for f in folds {
                    let disc = tangency_discriminant(&f.crease, &parabola);
                    assert!(disc.abs() <= bound, "O6 disc = {}", disc.to_f64());
                    seen += 1;
                }
            }
        }
    }

    #[test]
    fn o6_parallel_targets_linear_subcase() {
        // with q at exactly the image height the slope equation loses its
        // quadratic term and a single crease remains
        let folds = fold_o6(
            &pt(0.0, 0.0),
            &ln(0.0, 1.0, -2.0),
            &pt(1.0, 1.0),
            &ln(0.0, 1.0, -3.0),
        )
        .unwrap();
        assert_eq!(folds.len(), 1);
        // the crease is y = x + 2
        assert!(folds[0].crease.is_same(&ln(1.0, -1.0, 2.0)));
        assert!(verify_fold(&folds[0]));
    }

    #[test]
    fn o6_parallel_targets_against_incidence_polynomial() {
        // with pl parallel to ql the incidence residual drops to degree 2;
        // the same interpolation oracle applies after trimming
        let mut rng = ChaCha8Rng::seed_from_u64(4096);
        let mut checked = 0;
        while checked < 200 {
            let p = random_point(&mut rng);
            let q = random_point(&mut rng);
            let pl = random_line(&mut rng);
            // a genuinely parallel second line at a random offset
            let ql = match Line::new(
                pl.a().clone(),
                pl.b().clone(),
                pl.c() + &Scalar::from_f64(rng.gen_range(0.5..4.0)),
            ) {
                Ok(l) => l,
                Err(_) => continue,
            };
            if pl.contains(&p) || ql.contains(&q) || p.distance(&q).is_zero_eps() {
                continue;
            }
            let folds = match fold_o6(&p, &pl, &q, &ql) {
                Ok(f) => f,
                Err(_) => continue,
            };
            for f in &folds {
                assert!(verify_fold(f), "parallel-case crease fails its predicate");
            }
            let coeffs = o6_incidence_cubic(&p, &pl, &q, &ql, 512);
            let poly = Polynomial::new(coeffs.to_vec());
            assert!(poly.degree() <= 2, "parallel targets must not give a cubic");
            let roots = match poly.degree() {
                2 => solve_quadratic(&poly.coeffs()[2], &poly.coeffs()[1], &poly.coeffs()[0])
                    .unwrap()
                    .roots(),
                1 => vec![-(&poly.coeffs()[0] / &poly.coeffs()[1])],
                _ => vec![],
            };
            assert_eq!(folds.len(), roots.len(), "parallel-case count mismatch");
            checked += 1;
        }
    }

    #[test]
    fn o6_incident_point_against_angle_sweep() {
        // P on pl: every crease passes through P or stands perpendicular to
        // pl. Count the through-P family by scanning the pencil of lines at
        // P for sign changes of the second incidence residual.
        let mut rng = ChaCha8Rng::seed_from_u64(8192);
        let mut checked = 0;
        while checked < 120 {
            let pl = random_line(&mut rng);
            let foot = pl.point_on();
            let t = Scalar::from_f64(rng.gen_range(-3.0..3.0));
            let p = Point::new(&foot.x - &(&t * pl.b()), &foot.y + &(&t * pl.a()));
            let q = random_point(&mut rng);
            let ql = random_line(&mut rng);
            if ql.contains(&q) || p.distance(&q).is_zero_eps() || pl.is_same(&ql) {
                continue;
            }
            if pl.is_parallel(&ql) {
                continue;
            }
            let folds = match fold_o6(&p, &pl, &q, &ql) {
                Ok(f) => f,
                Err(_) => continue,
            };
            for f in &folds {
                assert!(verify_fold(f), "incident-case crease fails its predicate");
            }
            // pencil sweep: crease through p at angle theta reflects q to a
            // continuous image curve; roots of the residual are solutions
            let residual = |theta: f64| -> Scalar {
                let ang = Scalar::from_f64(theta);
                let crease = Line::new(-ang.sin(), ang.cos(), ang.sin() * &p.x - ang.cos() * &p.y)
                    .unwrap();
                ql.eval(&crease.reflect_point(&q))
            };
            let n = 720;
            let mut through_p = 0usize;
            let mut prev = residual(0.0);
            for i in 1..=n {
                let theta = std::f64::consts::PI * i as f64 / n as f64;
                let cur = residual(theta);
                if prev.is_sign_negative() != cur.is_sign_negative() && !cur.is_zero_eps() {
                    through_p += 1;
                }
                prev = cur;
            }
            // the perpendicular family contributes at most one more crease
            let perp = perp_creases(&pl, &q, &ql).len();
            let through_found = folds
                .iter()
                .filter(|f| f.crease.contains(&p))
                .count();
            assert_eq!(through_found, through_p, "through-point family count");
            assert!(folds.len() <= through_p + perp);
            checked += 1;
        }
    }

    #[test]
    fn o6_completeness_against_incidence_cubic() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut checked = 0;
        while checked < 300 {
            let p = random_point(&mut rng);
            let q = random_point(&mut rng);
            let pl = random_line(&mut rng);
            let ql = random_line(&mut rng);
            if pl.contains(&p) || ql.contains(&q) || p.distance(&q).is_zero_eps() {
                continue;
            }
            if pl.is_same(&ql) || pl.is_parallel(&ql) {
                continue;
            }
            let folds = match fold_o6(&p, &pl, &q, &ql) {
                Ok(f) => f,
                Err(_) => continue,
            };
            let coeffs = o6_incidence_cubic(&p, &pl, &q, &ql, 512);
            let poly = Polynomial::new(coeffs.to_vec());
            let roots = match poly.degree() {
                3 => solve_cubic(&poly.coeffs()[3], &poly.coeffs()[2], &poly.coeffs()[1], &poly.coeffs()[0])
                    .unwrap()
                    .roots(),
                2 => solve_quadratic(&poly.coeffs()[2], &poly.coeffs()[1], &poly.coeffs()[0])
                    .unwrap()
                    .roots(),
                _ => continue,
            };
            // map the image-parameter roots back to crease direction angles
            let foot = pl.point_on();
            let dir = (-pl.b(), pl.a().clone());
            let mut want: Vec<Scalar> = vec![];
            for t in roots {
                let image = Point::new(&foot.x + &(&t * &dir.0), &foot.y + &(&t * &dir.1));
                if image.eq_eps(&p) {
                    continue;
                }
                let crease = Line::midperpendicular(&p, &image).unwrap();
                let angle = crease.direction_angle();
                if !want.iter().any(|w| w.eq_eps(&angle)) {
                    want.push(angle);
                }
            }
            want.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let got: Vec<Scalar> = folds.iter().map(|f| f.crease.direction_angle()).collect();
            assert_eq!(got.len(), want.len(), "solution count mismatch");
            for (g, w) in got.iter().zip(want.iter()) {
                assert!(
                    (g - &w.with_prec(g.prec())).abs() <= Scalar::exp2i(-120),
                    "crease angle deviates: {} vs {}",
                    g.to_f64(),
                    w.to_f64()
                );
            }
            checked += 1;
        }
    }
}
