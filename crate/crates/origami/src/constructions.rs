//! The named constructions, each executed through the axiom solvers and
//! recorded as a replayable [`Trace`].
//!
//! Branch choices at multi-solution folds are made geometrically at build
//! time (the figures, not the formulas, disambiguate which crease a
//! construction means) and recorded in the trace, so replay is exact.

use crate::axioms;
use crate::error::{Error, Result};
use crate::geom::{Line, Point};
use crate::scalar::Scalar;
use crate::trace::{LineRef, PointRef, StartConfig, Trace, TraceBuilder};

/// Angle of the ray `from -> to` against the positive x-axis, in degrees.
pub fn ray_angle_deg(from: &Point, to: &Point) -> Scalar {
    (&to.y - &from.y).atan2(&(&to.x - &from.x)).rad_to_deg()
}

fn require_positive(v: &Scalar, what: &str) -> Result<()> {
    if v.is_sign_negative() || v.is_zero_eps() {
        return Err(Error::OutOfRange(format!("{what} must be positive")));
    }
    Ok(())
}

/// First crease index satisfying a geometric predicate.
fn pick_branch(creases: &[Line], pred: impl Fn(&Line) -> bool) -> Result<usize> {
    creases
        .iter()
        .position(pred)
        .ok_or_else(|| Error::OutOfRange("no fold branch matches the figure".into()))
}

/// Haga's one-fold third: fold corner `B` onto the midpoint `M` of the top
/// edge; the image of edge `AB` crosses the left edge at the third point
/// `G` with `AG = side/3`.
pub fn haga_third(side: &Scalar) -> Result<Trace> {
    require_positive(side, "side")?;
    let start = StartConfig::square(side.clone());
    let mut b = TraceBuilder::with_start(&start);
    let corner_a = b.point_ref("A").unwrap();
    let corner_b = b.point_ref("B").unwrap();
    let corner_c = b.point_ref("C").unwrap();
    let corner_d = b.point_ref("D").unwrap();
    let cd = b.line_ref("CD").unwrap();
    let bc_edge = b.line_ref("BC").unwrap();
    let da = b.line_ref("DA").unwrap();

    let mid_fold = b.fold_o3(corner_c, corner_d, "midCD")?;
    let m = b.intersect(mid_fold, cd, "M")?;
    let crease = b.fold_o3(m, corner_b, "crease")?;
    let e = b.intersect(crease, bc_edge, "E")?;
    let _bimg = b.reflect(corner_b, crease, "Bprime");
    let aimg = b.reflect(corner_a, crease, "Aprime");
    let folded_edge = b.fold_o2(aimg, m, "foldedAB")?;
    let g = b.intersect(folded_edge, da, "G")?;
    let _ = (e, g);
    Ok(b.finish("G"))
}

/// Golden section of the square edge: midline, one diagonal of a half
/// rectangle, then the bisector of the diagonal's angle with the base; the
/// bisector meets the left edge at `G` with `AD/AG = AG/GD = (1+sqrt 5)/2`.
pub fn golden_section(side: &Scalar) -> Result<Trace> {
    require_positive(side, "side")?;
    let start = StartConfig::square(side.clone());
    let mut b = TraceBuilder::with_start(&start);
    let corner_b = b.point_ref("B").unwrap();
    let ab = b.line_ref("AB").unwrap();
    let bc = b.line_ref("BC").unwrap();
    let cd = b.line_ref("CD").unwrap();
    let da = b.line_ref("DA").unwrap();

    let ef = b.fold_o4(da, bc, 0, "EF")?;
    let e = b.intersect(ef, ab, "E")?;
    let f = b.intersect(ef, cd, "F")?;
    let _ = e;
    let diag = b.fold_o2(corner_b, f, "BF")?;

    // the inner bisector is the one crossing the left edge between A and D
    let side_val = side.clone();
    let creases = b.peek_o4(diag, ab)?;
    let da_line = b.line(da).clone();
    let branch = pick_branch(&creases, |c| {
        match c.intersect(&da_line) {
            Some(p) => {
                !p.y.is_sign_negative()
                    && !p.y.is_zero_eps()
                    && p.y.cmp_eps(&side_val) == std::cmp::Ordering::Less
            }
            None => false,
        }
    })?;
    let bis = b.fold_o4(diag, ab, branch, "bisector")?;
    let h = b.intersect(bis, ef, "H")?;
    let g = b.intersect(bis, da, "G")?;
    let _ = (h, g);
    Ok(b.finish("G"))
}

/// Cube doubling on a side-3 square: Haga thirds give the horizontal third
/// lines, then one simultaneous fold puts `B` on the left edge and `E` on
/// the upper third line; the image `B'` splits the edge in ratio
/// `cbrt(2) : 1`.
pub fn delian_double() -> Result<Trace> {
    let side = Scalar::from_int(3);
    let start = StartConfig::square(side);
    let mut b = TraceBuilder::with_start(&start);
    let a = b.point_ref("A").unwrap();
    let corner_b = b.point_ref("B").unwrap();
    let c = b.point_ref("C").unwrap();
    let d = b.point_ref("D").unwrap();
    let cd = b.line_ref("CD").unwrap();
    let bc_edge = b.line_ref("BC").unwrap();
    let da = b.line_ref("DA").unwrap();

    // Haga third on the left edge: G = (0, 1)
    let mid_fold = b.fold_o3(c, d, "midCD")?;
    let m = b.intersect(mid_fold, cd, "M")?;
    let haga = b.fold_o3(m, corner_b, "haga")?;
    let aimg = b.reflect(a, haga, "Aprime");
    let folded_edge = b.fold_o2(aimg, m, "foldedAB")?;
    let g = b.intersect(folded_edge, da, "G")?;

    // third lines: y = 1 through G, y = 2 as the bisector fold of D onto G
    let lower_third = b.fold_lot(da, g, "lowerThird")?;
    let upper_third = b.fold_o3(d, g, "upperThird")?;
    let h = b.intersect(upper_third, da, "H")?;
    let e = b.intersect(lower_third, bc_edge, "E")?;
    let _ = h;

    // the simultaneous fold B -> DA, E -> upper third line (unique here)
    let crease = b.fold_o6(corner_b, da, e, upper_third, 0, "crease")?;
    let bprime = b.reflect(corner_b, crease, "Bprime");
    let _eprime = b.reflect(e, crease, "Eprime");
    let _ = bprime;
    Ok(b.finish("Bprime"))
}

/// Abe's trisection on a square of side 2. The angle `0 < alpha < 90`
/// (degrees) opens at corner `A` between the base edge and a given ray.
/// One simultaneous fold sends `A` to the quarter line and `E = (0, 1)` to
/// the ray; the rays to the image of `A` and to the crease's intersection
/// with the quarter line trisect the angle.
pub fn trisect_angle_abe(alpha_deg: &Scalar) -> Result<Trace> {
    let ninety = Scalar::from_int(90);
    if alpha_deg.is_sign_negative()
        || alpha_deg.is_zero_eps()
        || alpha_deg.cmp_eps(&ninety) != std::cmp::Ordering::Less
    {
        return Err(Error::OutOfRange(
            "trisection input must lie strictly between 0 and 90 degrees".into(),
        ));
    }
    let alpha = alpha_deg.deg_to_rad();
    let ray = Line::new(alpha.sin(), -alpha.cos(), Scalar::zero())?;
    let start = StartConfig::square(Scalar::from_int(2)).with_line("ray", ray);
    let mut b = TraceBuilder::with_start(&start);
    let a = b.point_ref("A").unwrap();
    let d = b.point_ref("D").unwrap();
    let ab = b.line_ref("AB").unwrap();
    let da = b.line_ref("DA").unwrap();
    let ray = b.line_ref("ray").unwrap();

    // EF: the horizontal midline y = 1; GH: its mid-parallel with the base
    let ef = b.fold_o3(a, d, "EF")?;
    let e = b.intersect(ef, da, "E")?;
    let gh = b.fold_o4(ef, ab, 0, "GH")?;

    // fold A onto GH and E onto the ray; the wanted branch reflects A into
    // the first quadrant
    let creases = b.peek_o6(a, gh, e, ray)?;
    let a_pt = b.point(a).clone();
    let branch = pick_branch(&creases, |c| {
        let img = c.reflect_point(&a_pt);
        !img.x.is_sign_negative() && !img.x.is_zero_eps()
    })?;
    let crease = b.fold_o6(a, gh, e, ray, branch, "crease")?;
    let aimg = b.reflect(a, crease, "Aimg");
    let i = b.intersect(crease, gh, "I")?;
    let _eimg = b.reflect(e, crease, "Eimg");
    let _ = (aimg, i);
    Ok(b.finish("Aimg"))
}

/// Angle trisection for an acute angle given by three points, following the
/// midpoint/double-perpendicular figure: `M` is the midpoint of `PQ`, `p`
/// the perpendicular to `QR` through `M`, `q` the perpendicular to `p`
/// through `M`; the simultaneous fold of `P` onto `p` and `Q` onto `q`
/// whose crease crosses segment `PM` yields the trisectors `QS` and `QV`.
pub fn trisect_angle_lemma2(p: &Point, q: &Point, r: &Point) -> Result<Trace> {
    let qp = p.distance(q);
    let qr = r.distance(q);
    if qp.is_zero_eps() || qr.is_zero_eps() {
        return Err(Error::CoincidentPoints);
    }
    let dot = (&p.x - &q.x) * &(&r.x - &q.x) + &((&p.y - &q.y) * &(&r.y - &q.y));
    let cross = (&p.x - &q.x) * &(&r.y - &q.y) - &((&p.y - &q.y) * &(&r.x - &q.x));
    if cross.is_zero_eps() {
        return Err(Error::DegenerateConfiguration);
    }
    let cosang = &dot / &(&qp * &qr);
    if cosang.is_sign_negative() || cosang.is_zero_eps() {
        return Err(Error::OutOfRange("the angle must be acute".into()));
    }

    let start = StartConfig::unit()
        .with_point("P", p.clone())
        .with_point("Q", q.clone())
        .with_point("R", r.clone());
    let mut b = TraceBuilder::with_start(&start);
    let pp = b.point_ref("P").unwrap();
    let qq = b.point_ref("Q").unwrap();
    let rr = b.point_ref("R").unwrap();

    let mid_fold = b.fold_o3(pp, qq, "midPQ")?;
    let pq_line = b.fold_o2(pp, qq, "PQ")?;
    let m = b.intersect(mid_fold, pq_line, "M")?;
    let qr_line = b.fold_o2(qq, rr, "QR")?;
    let p_lot = b.fold_lot(qr_line, m, "p")?;
    let q_lot = b.fold_lot(p_lot, m, "q")?;

    // the crease that crosses segment PM
    let creases = b.peek_o6(pp, p_lot, qq, q_lot)?;
    let (p_val, m_val) = (b.point(pp).clone(), b.point(m).clone());
    let branch = pick_branch(&creases, |c| {
        let ep = c.eval(&p_val);
        let em = c.eval(&m_val);
        ep.is_sign_negative() != em.is_sign_negative()
            && !ep.is_zero_eps()
            && !em.is_zero_eps()
    })?;
    let crease = b.fold_o6(pp, p_lot, qq, q_lot, branch, "crease")?;
    let s = b.reflect(qq, crease, "S");
    let t = b.reflect(pp, crease, "T");
    let v = b.intersect(crease, q_lot, "V")?;
    let _ = (s, t, v);
    Ok(b.finish("S"))
}

/// One-fold cube root: the simultaneous fold for `P = (-1, 0)`, `p: x = 1`,
/// `Q = (0, -k)`, `q: y = k` has the unique crease
/// `y = -x / cbrt(k) + cbrt(k)`, which meets the y-axis at `(0, cbrt(k))`.
pub fn cube_root(k: &Scalar) -> Result<Trace> {
    require_positive(k, "k")?;
    let p = Point::new(-Scalar::one(), Scalar::zero());
    let q = Point::new(Scalar::zero(), -k);
    let q_line = Line::new(Scalar::zero(), Scalar::one(), -k)?;
    let start = StartConfig::unit()
        .with_point("P", p)
        .with_point("Q", q)
        .with_line("q", q_line);
    let mut b = TraceBuilder::with_start(&start);
    let pp = b.point_ref("P").unwrap();
    let qq = b.point_ref("Q").unwrap();
    let p_line = b.line_ref("BC").unwrap(); // x = 1 on the unit square
    let ql = b.line_ref("q").unwrap();
    let da = b.line_ref("DA").unwrap(); // the y-axis

    let crease = b.fold_o6(pp, p_line, qq, ql, 0, "t")?;
    let _pimg = b.reflect(pp, crease, "Pimg");
    let _qimg = b.reflect(qq, crease, "Qimg");
    let r = b.intersect(crease, da, "R")?;
    let _ = r;
    Ok(b.finish("R"))
}

/// Cube root of a ratio from the common tangent of `y^2 = 2ax` and
/// `x^2 = 2by`: fold focus onto directrix for both parabolas at once. The
/// tangent's slope is `-cbrt(a/b)`; the unit-run slope triangle on the
/// line `x = -1` exposes the value as the distance `P0 P1`.
pub fn cube_root_ratio(a: &Scalar, bq: &Scalar) -> Result<Trace> {
    require_positive(a, "a")?;
    require_positive(bq, "b")?;
    let half = Scalar::from_ratio(1, 2);
    let f1 = Point::new(a * &half, Scalar::zero());
    let l1 = Line::new(Scalar::one(), Scalar::zero(), a * &half)?; // x = -a/2
    let f2 = Point::new(Scalar::zero(), bq * &half);
    let l2 = Line::new(Scalar::zero(), Scalar::one(), bq * &half)?; // y = -b/2
    let unit_left = Line::new(Scalar::one(), Scalar::zero(), Scalar::one())?; // x = -1
    let start = StartConfig::unit()
        .with_point("F1", f1)
        .with_point("F2", f2)
        .with_line("l1", l1)
        .with_line("l2", l2)
        .with_line("unitLeft", unit_left);
    let mut b = TraceBuilder::with_start(&start);
    let f1 = b.point_ref("F1").unwrap();
    let f2 = b.point_ref("F2").unwrap();
    let l1 = b.line_ref("l1").unwrap();
    let l2 = b.line_ref("l2").unwrap();
    let unit_left = b.line_ref("unitLeft").unwrap();
    let da = b.line_ref("DA").unwrap();

    let tangent = b.fold_o6(f1, l1, f2, l2, 0, "t")?;
    let t0 = b.intersect(tangent, da, "T0")?;
    let run = b.fold_lot(da, t0, "run")?; // horizontal through T0
    let p0 = b.intersect(run, unit_left, "P0")?;
    let p1 = b.intersect(tangent, unit_left, "P1")?;
    let _ = (p0, p1);
    Ok(b.finish("P1"))
}

/// Distance between two point landmarks.
pub fn landmark_distance(trace: &Trace, a: &str, b: &str) -> Option<Scalar> {
    Some(trace.landmark_point(a)?.distance(trace.landmark_point(b)?))
}

/// Solves `x^3 + px^2 + qx + r = 0` by folding the common tangents of the
/// parabolas `(y - q/2)^2 = 2r (x + p/2)` and `x^2 = 2y`; every crease
/// slope is a real root.
pub fn solve_cubic_by_folding(p: &Scalar, q: &Scalar, r: &Scalar) -> Result<Vec<Scalar>> {
    let half = Scalar::from_ratio(1, 2);
    let f1 = Point::new((&-p + r) * &half, q * &half);
    let l1 = Line::new(Scalar::one(), Scalar::zero(), (p + r) * &half)?; // x = (-p - r)/2
    let f2 = Point::new(Scalar::zero(), half.clone());
    let l2 = Line::new(Scalar::zero(), Scalar::one(), half.clone())?; // y = -1/2
    let folds = axioms::fold_o6(&f1, &l1, &f2, &l2)?;
    let mut slopes: Vec<Scalar> = folds
        .iter()
        .filter_map(|f| f.crease.slope())
        .collect();
    slopes.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    Ok(slopes)
}

/// Real roots of `x^2 + px + q = 0` as the slopes of the creases folding
/// the focus `(0, 1)` onto the directrix `y = -1` through `(-p, q)`.
pub fn fold_quadratic_roots(p: &Scalar, q: &Scalar) -> Vec<Scalar> {
    let focus = Point::new(Scalar::zero(), Scalar::one());
    let directrix = Line::new(Scalar::zero(), Scalar::one(), Scalar::one()).unwrap();
    let anchor = Point::new(-p, q.clone());
    let mut slopes: Vec<Scalar> = axioms::fold_o5(&focus, &directrix, &anchor)
        .iter()
        .filter_map(|f| f.crease.slope())
        .collect();
    slopes.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    slopes
}

/// The regular 7-gon on a side-2 square: eighth-line landmarks, one
/// simultaneous fold pinning `cos(2pi/7)`, one anchored fold lifting the
/// vertex onto the circle, then reflections around the center.
pub fn heptagon() -> Result<Trace> {
    let start = StartConfig::square(Scalar::from_int(2));
    let mut b = TraceBuilder::with_start(&start);
    let ab = b.line_ref("AB").unwrap();
    let bc = b.line_ref("BC").unwrap();
    let cd = b.line_ref("CD").unwrap();
    let da = b.line_ref("DA").unwrap();

    let a_mid = b.fold_o4(ab, cd, 0, "a")?; // y = 1
    let b_mid = b.fold_o4(bc, da, 0, "b")?; // x = 1
    let center = b.intersect(a_mid, b_mid, "O")?;
    let c_quarter = b.fold_o4(a_mid, cd, 0, "c")?; // y = 3/2
    let d_quarter = b.fold_o4(b_mid, da, 0, "d")?; // x = 1/2
    let lower_quarter = b.fold_o4(a_mid, ab, 0, "cLow")?; // y = 1/2
    let e_eighth = b.fold_o4(lower_quarter, a_mid, 0, "e")?; // y = 3/4

    let e_pt = b.intersect(b_mid, c_quarter, "E")?;
    let f_pt = b.intersect(d_quarter, e_eighth, "F")?;
    let g_pt = b.intersect(b_mid, e_eighth, "G")?;
    let p_vertex = b.intersect(a_mid, bc, "V1")?;
    let _ = g_pt;

    // fold E onto the horizontal midline and F onto the vertical one; the
    // figure's branch reflects E to the right half, F below center
    let creases = b.peek_o6(e_pt, a_mid, f_pt, b_mid)?;
    let e_val = b.point(e_pt).clone();
    let f_val = b.point(f_pt).clone();
    let one = Scalar::one();
    let branch = pick_branch(&creases, |c| {
        let ei = c.reflect_point(&e_val);
        let fi = c.reflect_point(&f_val);
        ei.x.cmp_eps(&one) == std::cmp::Ordering::Greater
            && fi.y.cmp_eps(&one) == std::cmp::Ordering::Less
    })?;
    let big_fold = b.fold_o6(e_pt, a_mid, f_pt, b_mid, branch, "fold6")?;
    let e_img = b.reflect(e_pt, big_fold, "Eprime");
    let _f_img = b.reflect(f_pt, big_fold, "Fprime");

    // vertical through E', then lift V1 onto it around the center
    let f_line = b.fold_lot(a_mid, e_img, "f")?;
    let creases = b.peek_o5(p_vertex, f_line, center);
    let p_val = b.point(p_vertex).clone();
    let branch = pick_branch(&creases, |c| {
        c.reflect_point(&p_val).y.cmp_eps(&one) == std::cmp::Ordering::Greater
    })?;
    let lift = b.fold_o5(p_vertex, f_line, center, branch, "lift")?;
    let q = b.reflect(p_vertex, lift, "Q");
    b.landmark_point("V2", q);

    // remaining vertices by reflecting the previous vertex around the line
    // through the center and the current one
    let mut prev = p_vertex;
    let mut cur = q;
    for k in 3..=7 {
        let axis = b.fold_o2(center, cur, &format!("axis{k}"))?;
        let next = b.reflect(prev, axis, &format!("V{k}"));
        prev = cur;
        cur = next;
    }
    Ok(b.finish("Q"))
}

/// Extracts the slope value materialized on the right edge by the 17-gon
/// cascade: the landmark sits at `(2, 1 + value)`.
pub fn heptadecagon_value(trace: &Trace, name: &str) -> Option<Scalar> {
    trace.landmark_point(name).map(|p| &p.y - &Scalar::one())
}

/// The regular 17-gon on a side-2 square, via the quadratic cascade
///
/// ```text
/// y^2 + y - 4 = 0          -> y1 > 0 > y2
/// n^2 - y1 n - 1 = 0       -> n2 < 0
/// m^2 - y2 m - 1 = 0       -> m2 < 0
/// v^2 - n2 v + m2 = 0      -> v1 = 2 cos(4pi/17) > 0
/// ```
///
/// Each quadratic is folded as focus-onto-directrix creases through an
/// anchor point (the slopes are the roots); every anchor after the first is
/// itself constructed by folds from the previous stage's value point. The
/// vertex stage places `x = 1 - cos(4pi/17)` and walks the circle by
/// reflections.
pub fn heptadecagon() -> Result<Trace> {
    let q1_anchor = Point::new(Scalar::zero(), Scalar::from_int(-3));
    let start = StartConfig::square(Scalar::from_int(2)).with_point("Q1", q1_anchor);
    let mut b = TraceBuilder::with_start(&start);
    let corner_a = b.point_ref("A").unwrap();
    let corner_c = b.point_ref("C").unwrap();
    let ab = b.line_ref("AB").unwrap();
    let bc = b.line_ref("BC").unwrap();
    let cd = b.line_ref("CD").unwrap();
    let da = b.line_ref("DA").unwrap();

    let h_mid = b.fold_o4(ab, cd, 0, "hMid")?; // y = 1
    let v_mid = b.fold_o4(bc, da, 0, "vMid")?; // x = 1
    let center = b.intersect(h_mid, v_mid, "M")?;
    let focus = b.intersect(v_mid, cd, "F")?; // (1, 2)
    let diag = b.fold_o2(corner_a, corner_c, "diag")?; // y = x
    let e_mid = b.intersect(h_mid, bc, "Emid")?; // (2, 1)

    // one cascade stage: fold the focus (1,2) onto the base edge with the
    // crease through the anchor; keep the branch whose slope matches
    // `want_positive`, and park the slope as the point (2, 1 + slope)
    let stage = |b: &mut TraceBuilder,
                     anchor: PointRef,
                     want_positive: bool,
                     name: &str|
     -> Result<(LineRef, PointRef)> {
        let creases = b.peek_o5(focus, ab, anchor);
        let branch = pick_branch(&creases, |c| match c.slope() {
            Some(m) => m.is_sign_negative() != want_positive,
            None => false,
        })?;
        let crease = b.fold_o5(focus, ab, anchor, branch, &format!("{name}_crease"))?;
        let normal = b.fold_lot(crease, center, &format!("{name}_n"))?;
        let par = b.fold_lot(normal, center, &format!("{name}_par"))?;
        let val = b.intersect(par, bc, name)?;
        Ok((crease, val))
    };

    // y^2 + y - 4: anchor (-p, q) + center offset = (0, -3), a given
    let q1 = b.point_ref("Q1").unwrap();
    let (_c_y1, y1_val) = stage(&mut b, q1, true, "y1")?;
    let (_c_y2, y2_val) = stage(&mut b, q1, false, "y2")?;

    // anchor (1 + y1, 0) for n^2 - y1 n - 1: swap coordinates across the
    // diagonal, drop onto the base edge
    let root_anchor = |b: &mut TraceBuilder, val: PointRef, name: &str| -> Result<PointRef> {
        let swapped = b.reflect(val, diag, &format!("{name}_swap"));
        let vertical = b.fold_lot(ab, swapped, &format!("{name}_vert"))?;
        b.intersect(vertical, ab, name)
    };
    let q2 = root_anchor(&mut b, y1_val, "Q2")?;
    let (_c_n2, n2_val) = stage(&mut b, q2, false, "n2")?;
    let q3 = root_anchor(&mut b, y2_val, "Q3")?;
    let (_c_m2, m2_val) = stage(&mut b, q3, false, "m2")?;

    // anchor (1 + n2, 1 + m2) for v^2 - n2 v + m2
    let n2_swap = b.reflect(n2_val, diag, "n2_swap");
    let q4_vert = b.fold_lot(ab, n2_swap, "q4_vert")?;
    let q4_horiz = b.fold_lot(bc, m2_val, "q4_horiz")?;
    let q4 = b.intersect(q4_vert, q4_horiz, "Q4")?;
    let (_c_v1, v1_val) = stage(&mut b, q4, true, "v1")?;

    // halve v1: the perpendicular bisector of (2, 1 + v1) and (2, 1) is the
    // horizontal y = 1 + v1/2, giving cos(4pi/17) above the midline
    let half_fold = b.fold_o3(v1_val, e_mid, "halfFold")?;
    let half_pt = b.intersect(half_fold, bc, "halfPt")?; // (2, 1 + cos)
    let cos_swap = b.reflect(half_pt, diag, "cosSwap"); // (1 + cos, 2)
    let cos_mirror = b.reflect(cos_swap, v_mid, "cosMirror"); // (1 - cos, 2)
    let ell = b.fold_lot(ab, cos_mirror, "ell")?; // x = 1 - cos(4pi/17)

    // vertices: start at the left edge midpoint, fold it onto `ell` around
    // the center, then walk the circle by reflections
    let v_start = b.intersect(h_mid, da, "P1")?;
    let creases = b.peek_o5(v_start, ell, center);
    let start_val = b.point(v_start).clone();
    let one = Scalar::one();
    let branch = pick_branch(&creases, |c| {
        c.reflect_point(&start_val).y.cmp_eps(&one) == std::cmp::Ordering::Greater
    })?;
    let lift = b.fold_o5(v_start, ell, center, branch, "lift")?;
    let second = b.reflect(v_start, lift, "P2");

    let mut prev = v_start;
    let mut cur = second;
    for k in 3..=17 {
        let axis = b.fold_o2(center, cur, &format!("axis{k}"))?;
        let next = b.reflect(prev, axis, &format!("P{k}"));
        prev = cur;
        cur = next;
    }
    Ok(b.finish("v1"))
}
