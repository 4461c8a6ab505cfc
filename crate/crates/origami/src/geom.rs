//! Planar primitives and the compass-and-straightedge base constructions.
//!
//! Lines are stored in normalized implicit form `a*x + b*y + c = 0` with
//! `a^2 + b^2 = 1` and a canonical sign, so two descriptions of the same
//! locus compare equal field by field. All predicates go through the
//! [`Scalar`] tolerance.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::cmp::Ordering;

/// A point in the plane.
#[derive(Clone, Debug)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_f64(x: f64, y: f64) -> Self {
        Point::new(Scalar::from_f64(x), Scalar::from_f64(y))
    }

    pub fn origin() -> Self {
        Point::new(Scalar::zero(), Scalar::zero())
    }

    pub fn distance(&self, other: &Point) -> Scalar {
        (&self.x - &other.x).hypot(&(&self.y - &other.y))
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let half = Scalar::from_ratio(1, 2);
        Point::new(
            (&self.x + &other.x) * &half,
            (&self.y + &other.y) * &half,
        )
    }

    pub fn eq_eps(&self, other: &Point) -> bool {
        self.x.eq_eps(&other.x) && self.y.eq_eps(&other.y)
    }

    /// Lexicographic order by (x, y); used for deterministic multi-point
    /// results.
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        match self.x.partial_cmp(&other.x) {
            Some(Ordering::Equal) | None => {
                self.y.partial_cmp(&other.y).unwrap_or(Ordering::Equal)
            }
            Some(ord) => ord,
        }
    }
}

/// An oriented-free line `a*x + b*y + c = 0`, normalized and sign-canonical.
#[derive(Clone, Debug)]
pub struct Line {
    a: Scalar,
    b: Scalar,
    c: Scalar,
}

impl Line {
    /// Builds a line from raw coefficients, normalizing `a^2 + b^2 = 1` and
    /// fixing the canonical sign: the first of `(a, b)` that is nonzero at
    /// tolerance is made positive.
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Line> {
        let norm = a.hypot(&b);
        if norm.is_zero_eps() {
            return Err(Error::DegenerateLine);
        }
        // skip the division when the normal is already unit to the last few
        // bits: renormalizing would only churn the bottom of the mantissa,
        // and bit-stable canonicalization is what makes replay exact
        let already_unit =
            (&norm - &Scalar::one()).abs() <= Scalar::exp2i(-((norm.prec() as i32) - 8));
        let (mut a, mut b, mut c) = if already_unit {
            (a, b, c)
        } else {
            (&a / &norm, &b / &norm, &c / &norm)
        };
        let flip = if !a.is_zero_eps() {
            a.is_sign_negative()
        } else {
            b.is_sign_negative()
        };
        if flip {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    pub fn from_f64(a: f64, b: f64, c: f64) -> Result<Line> {
        Line::new(Scalar::from_f64(a), Scalar::from_f64(b), Scalar::from_f64(c))
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    /// Signed distance of `p` from the line (the normal form is unit).
    pub fn eval(&self, p: &Point) -> Scalar {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    pub fn distance_to(&self, p: &Point) -> Scalar {
        self.eval(p).abs()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero_eps()
    }

    /// The line through two distinct points.
    pub fn through(p: &Point, q: &Point) -> Result<Line> {
        if p.distance(q).is_zero_eps() {
            return Err(Error::CoincidentPoints);
        }
        let dx = &q.x - &p.x;
        let dy = &q.y - &p.y;
        // normal = rotate(direction, 90deg)
        let a = -&dy;
        let b = dx.clone();
        let c = -(&a * &p.x + &b * &p.y);
        Line::new(a, b, c)
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        (&self.a * &other.b - &other.a * &self.b).is_zero_eps()
    }

    pub fn is_same(&self, other: &Line) -> bool {
        self.a.eq_eps(&other.a) && self.b.eq_eps(&other.b) && self.c.eq_eps(&other.c)
    }

    /// Field-wise comparison at a multiple of the base tolerance.
    pub fn is_same_within(&self, other: &Line, mult: i64) -> bool {
        let m = Scalar::from_int(mult);
        let close = |x: &Scalar, y: &Scalar| (x - y).abs() <= &m * &Scalar::eps_pair(x, y);
        close(&self.a, &other.a) && close(&self.b, &other.b) && close(&self.c, &other.c)
    }

    /// Intersection point of two lines; `None` when parallel at tolerance.
    pub fn intersect(&self, other: &Line) -> Option<Point> {
        let det = &self.a * &other.b - &other.a * &self.b;
        if det.is_zero_eps() {
            return None;
        }
        let x = (&self.b * &other.c - &other.b * &self.c) / &det;
        let y = (&other.a * &self.c - &self.a * &other.c) / &det;
        Some(Point::new(x, y))
    }

    /// Mirror image of `p` across this line.
    pub fn reflect_point(&self, p: &Point) -> Point {
        let d = self.eval(p);
        let two = Scalar::from_int(2);
        Point::new(&p.x - &(&two * &d * &self.a), &p.y - &(&two * &d * &self.b))
    }

    /// Mirror image of a whole line: reflect two sample points and join.
    pub fn reflect_line(&self, other: &Line) -> Line {
        let p0 = other.point_on();
        let p1 = Point::new(&p0.x - &other.b, &p0.y + &other.a);
        let q0 = self.reflect_point(&p0);
        let q1 = self.reflect_point(&p1);
        // the images of two distinct points stay distinct (isometry)
        Line::through(&q0, &q1).expect("reflection preserves distinctness")
    }

    /// The foot of the perpendicular from the origin; a convenient sample
    /// point on the line.
    pub fn point_on(&self) -> Point {
        Point::new(-(&self.a * &self.c), -(&self.b * &self.c))
    }

    /// Perpendicular to this line through `p`.
    pub fn perpendicular_through(&self, p: &Point) -> Line {
        let a = -&self.b;
        let b = self.a.clone();
        let c = -(&a * &p.x + &b * &p.y);
        Line::new(a, b, c).expect("unit normal stays unit")
    }

    /// Perpendicular bisector of the segment `pq`.
    pub fn midperpendicular(p: &Point, q: &Point) -> Result<Line> {
        if p.distance(q).is_zero_eps() {
            return Err(Error::CoincidentPoints);
        }
        let m = p.midpoint(q);
        let a = &q.x - &p.x;
        let b = &q.y - &p.y;
        let c = -(&a * &m.x + &b * &m.y);
        Line::new(a, b, c)
    }

    /// Direction angle in `[0, pi)`: the angle of the line's direction
    /// vector folded into a half-turn. Used for canonical solution order.
    pub fn direction_angle(&self) -> Scalar {
        // direction = (-b, a)
        let mut theta = self.a.atan2(&(-&self.b));
        let pi = Scalar::pi().with_prec(theta.prec());
        if theta.is_sign_negative() {
            theta = &theta + &pi;
        }
        // atan2 can return exactly pi for horizontal lines; fold to 0
        if theta.cmp_eps(&pi) == Ordering::Equal {
            theta = &theta - &pi;
        }
        theta
    }

    /// Slope `-a/b`; `None` for vertical lines.
    pub fn slope(&self) -> Option<Scalar> {
        if self.b.is_zero_eps() {
            None
        } else {
            Some(-(&self.a / &self.b))
        }
    }

    /// Total order for canonical solution lists: direction angle, then
    /// offset `c`.
    pub fn canonical_cmp(&self, other: &Line) -> Ordering {
        let ta = self.direction_angle();
        let tb = other.direction_angle();
        match ta.cmp_eps(&tb) {
            Ordering::Equal => match self.c.cmp_eps(&other.c) {
                Ordering::Equal => Ordering::Equal,
                ord => ord,
            },
            ord => ord,
        }
    }
}

/// A circle given by center and radius. Circles are never drawn by folds;
/// they exist as loci for the intersection constructions.
#[derive(Clone, Debug)]
pub struct Circle {
    pub center: Point,
    pub radius: Scalar,
}

impl Circle {
    pub fn new(center: Point, radius: Scalar) -> Result<Circle> {
        if radius.is_zero_eps() || radius.is_sign_negative() {
            return Err(Error::OutOfRange("circle radius must be positive".into()));
        }
        Ok(Circle { center, radius })
    }

    /// Circle around `center` through `through`.
    pub fn around(center: &Point, through: &Point) -> Result<Circle> {
        Circle::new(center.clone(), center.distance(through))
    }
}

/// A parabola as focus + directrix; the locus folded by the point-onto-line
/// axioms.
#[derive(Clone, Debug)]
pub struct Parabola {
    pub focus: Point,
    pub directrix: Line,
}

impl Parabola {
    pub fn new(focus: Point, directrix: Line) -> Result<Parabola> {
        if directrix.distance_to(&focus).is_zero_eps() {
            return Err(Error::DegenerateConfiguration);
        }
        Ok(Parabola { focus, directrix })
    }

    /// True when `p` is equidistant from focus and directrix.
    pub fn contains(&self, p: &Point) -> bool {
        self.focus
            .distance(p)
            .eq_eps(&self.directrix.distance_to(p))
    }
}

/// Intersection of a line and a circle: 0, 1 (tangent) or 2 points,
/// ordered lexicographically.
pub fn intersect_line_circle(g: &Line, circle: &Circle) -> Vec<Point> {
    let d = g.eval(&circle.center);
    // foot of the perpendicular from the center
    let foot = Point::new(
        &circle.center.x - &(&d * g.a()),
        &circle.center.y - &(&d * g.b()),
    );
    let disc = &circle.radius * &circle.radius - &d * &d;
    if disc.is_zero_eps() {
        return vec![foot];
    }
    if disc.is_sign_negative() {
        return vec![];
    }
    let h = disc.sqrt();
    // direction along the line
    let (dx, dy) = (-g.b(), g.a().clone());
    let p1 = Point::new(&foot.x + &(&h * &dx), &foot.y + &(&h * &dy));
    let p2 = Point::new(&foot.x - &(&h * &dx), &foot.y - &(&h * &dy));
    sort_points(vec![p1, p2])
}

/// Intersection of two circles via the radical line.
pub fn intersect_circles(c1: &Circle, c2: &Circle) -> Result<Vec<Point>> {
    if c1.center.distance(&c2.center).is_zero_eps() {
        return Err(Error::ConcentricCircles);
    }
    // Subtracting the two circle equations leaves the radical line
    // 2(x2-x1) x + 2(y2-y1) y + (|p1|^2 - r1^2) - (|p2|^2 - r2^2) = 0.
    let two = Scalar::from_int(2);
    let a = &two * &(&c2.center.x - &c1.center.x);
    let b = &two * &(&c2.center.y - &c1.center.y);
    let pow1 = &c1.center.x * &c1.center.x + &c1.center.y * &c1.center.y
        - &c1.radius * &c1.radius;
    let pow2 = &c2.center.x * &c2.center.x + &c2.center.y * &c2.center.y
        - &c2.radius * &c2.radius;
    let c = &pow1 - &pow2;
    let radical = Line::new(a, b, c)?;
    Ok(intersect_line_circle(&radical, c1))
}

/// Sorts points lexicographically by (x, y).
pub fn sort_points(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort_by(|p, q| p.lex_cmp(q));
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(x: f64, y: f64) -> Point {
        Point::from_f64(x, y)
    }

    #[test]
    fn line_through_axis_cases() {
        let l = Line::through(&pt(0.0, 0.0), &pt(1.0, 0.0)).unwrap();
        assert!(l.a().is_zero_eps());
        assert!(l.b().eq_eps(&Scalar::one()));
        assert!(l.c().is_zero_eps());

        let l = Line::through(&pt(0.0, 0.0), &pt(0.0, 1.0)).unwrap();
        assert!(l.a().eq_eps(&Scalar::one()));
        assert!(l.b().is_zero_eps());
    }

    #[test]
    fn line_through_unit_diagonal() {
        // x + y = 1, the third line of the start configuration
        let l = Line::through(&pt(1.0, 0.0), &pt(0.0, 1.0)).unwrap();
        let inv_sqrt2 = Scalar::from_int(2).sqrt().recip();
        assert!(l.a().eq_eps(&inv_sqrt2));
        assert!(l.b().eq_eps(&inv_sqrt2));
        assert!(l.c().eq_eps(&-&inv_sqrt2));
    }

    #[test]
    fn line_through_coincident_points_fails() {
        assert_eq!(
            Line::through(&pt(2.0, 3.0), &pt(2.0, 3.0)).unwrap_err(),
            Error::CoincidentPoints
        );
    }

    #[test]
    fn canonicalization_is_point_order_independent() {
        let l1 = Line::through(&pt(0.3, -1.7), &pt(2.9, 0.4)).unwrap();
        let l2 = Line::through(&pt(2.9, 0.4), &pt(0.3, -1.7)).unwrap();
        assert!(l1.is_same(&l2));
        let l3 = Line::new(l1.a().clone(), l1.b().clone(), l1.c().clone()).unwrap();
        assert!(l1.is_same(&l3), "canonical form must be idempotent");
    }

    #[test]
    fn intersect_lines_cases() {
        let x0 = Line::from_f64(1.0, 0.0, 0.0).unwrap();
        let y0 = Line::from_f64(0.0, 1.0, 0.0).unwrap();
        let p = x0.intersect(&y0).unwrap();
        assert!(p.eq_eps(&pt(0.0, 0.0)));

        let diag = Line::through(&pt(1.0, 0.0), &pt(0.0, 1.0)).unwrap();
        let p = y0.intersect(&diag).unwrap();
        assert!(p.eq_eps(&pt(1.0, 0.0)));

        // parallel lines have no intersection
        let y1 = Line::from_f64(0.0, 1.0, -1.0).unwrap();
        assert!(y0.intersect(&y1).is_none());
    }

    #[test]
    fn intersect_lines_marked_ruler_slopes() {
        // y = 2x against y = (b/(a-s)) x - bs/(a-s), a=3 b=1 s=1:
        // the crossing abscissa is bs/(ms - ma + b) = -1/3.
        let l1 = Line::from_f64(2.0, -1.0, 0.0).unwrap();
        let l2 = Line::from_f64(0.5, -1.0, -0.5).unwrap();
        let p = l1.intersect(&l2).unwrap();
        assert!(p.x.eq_eps(&Scalar::from_ratio(-1, 3)));
    }

    #[test]
    fn reflect_point_basics() {
        let g = Line::from_f64(0.0, 1.0, -1.0).unwrap(); // y = 1
        let p = g.reflect_point(&pt(0.0, 0.0));
        assert!(p.eq_eps(&pt(0.0, 2.0)));

        // a point on the line is fixed
        let q = g.reflect_point(&pt(5.0, 1.0));
        assert!(q.eq_eps(&pt(5.0, 1.0)));
    }

    #[test]
    fn reflect_point_cube_root_crease() {
        // crease y = -x/2 + 2 carries (-1, 0) onto the line x = 1
        let crease = Line::from_f64(0.5, 1.0, -2.0).unwrap();
        let img = crease.reflect_point(&pt(-1.0, 0.0));
        assert!(img.x.eq_eps(&Scalar::one()), "image x = {}", img.x);
        assert!(img.y.eq_eps(&Scalar::from_int(4)));
        // oracle: the two linear conditions of the reflection
        // (midpoint on crease, displacement parallel to the normal)
        let mid = pt(-1.0, 0.0).midpoint(&img);
        assert!(crease.contains(&mid));
        let dx = &img.x - &Scalar::from_int(-1);
        let dy = &img.y - &Scalar::zero();
        let cross = &dx * crease.b() - &dy * crease.a();
        assert!(cross.is_zero_eps(), "PP' must be parallel to the normal");
    }

    #[test]
    fn reflect_line_cases() {
        let g = Line::from_f64(1.0, -1.0, 0.0).unwrap(); // y = x
        let h = Line::from_f64(0.0, 1.0, 0.0).unwrap(); // y = 0
        let r = g.reflect_line(&h);
        let x0 = Line::from_f64(1.0, 0.0, 0.0).unwrap();
        assert!(r.is_same(&x0), "y=0 across y=x is x=0");

        // a line reflected across itself is itself
        let s = g.reflect_line(&g);
        assert!(s.is_same(&g));

        // y=0 across the crease y = -x/2 + 2: slope -4/3, fixed point (4, 0);
        // oracle: reflect three points and check collinearity.
        let crease = Line::from_f64(0.5, 1.0, -2.0).unwrap();
        let img = crease.reflect_line(&h);
        let slope = img.slope().unwrap();
        assert!(slope.eq_eps(&Scalar::from_ratio(-4, 3)), "slope {}", slope);
        assert!(img.contains(&pt(4.0, 0.0)));
        for x in [-3.0, 0.0, 7.5] {
            let p = crease.reflect_point(&pt(x, 0.0));
            assert!(img.contains(&p));
        }
    }

    #[test]
    fn perpendiculars() {
        let y0 = Line::from_f64(0.0, 1.0, 0.0).unwrap();
        let l = y0.perpendicular_through(&pt(3.0, 5.0));
        assert!(l.is_same(&Line::from_f64(1.0, 0.0, -3.0).unwrap()));

        let diag = Line::through(&pt(1.0, 0.0), &pt(0.0, 1.0)).unwrap();
        let l = diag.perpendicular_through(&pt(0.0, 0.0));
        assert!(l.is_same(&Line::from_f64(1.0, -1.0, 0.0).unwrap()));

        let l = y0.perpendicular_through(&pt(0.0, 1.0));
        assert!(l.is_same(&Line::from_f64(1.0, 0.0, 0.0).unwrap()));
    }

    #[test]
    fn midperpendicular_cases() {
        let l = Line::midperpendicular(&pt(0.0, 0.0), &pt(2.0, 0.0)).unwrap();
        assert!(l.is_same(&Line::from_f64(1.0, 0.0, -1.0).unwrap()));
        let l = Line::midperpendicular(&pt(0.0, 0.0), &pt(0.0, 2.0)).unwrap();
        assert!(l.is_same(&Line::from_f64(0.0, 1.0, -1.0).unwrap()));
        let l = Line::midperpendicular(&pt(-1.0, 0.0), &pt(1.0, 0.0)).unwrap();
        assert!(l.is_same(&Line::from_f64(1.0, 0.0, 0.0).unwrap()));
        // the construction swaps the endpoints
        let p = pt(0.3, 1.4);
        let q = pt(-2.0, 0.7);
        let l = Line::midperpendicular(&p, &q).unwrap();
        assert!(l.reflect_point(&p).eq_eps(&q));
        assert_eq!(
            Line::midperpendicular(&p, &p).unwrap_err(),
            Error::CoincidentPoints
        );
    }

    #[test]
    fn line_circle_intersections() {
        let k = Circle::new(pt(0.0, 0.0), Scalar::one()).unwrap();
        let y0 = Line::from_f64(0.0, 1.0, 0.0).unwrap();
        let pts = intersect_line_circle(&y0, &k);
        assert_eq!(pts.len(), 2);
        assert!(pts[0].eq_eps(&pt(-1.0, 0.0)));
        assert!(pts[1].eq_eps(&pt(1.0, 0.0)));

        // tangent case collapses to one point
        let y1 = Line::from_f64(0.0, 1.0, -1.0).unwrap();
        let pts = intersect_line_circle(&y1, &k);
        assert_eq!(pts.len(), 1);
        assert!(pts[0].eq_eps(&pt(0.0, 1.0)));

        let k4 = Circle::new(pt(0.0, 0.0), Scalar::from_int(4)).unwrap();
        let x16_5 = Scalar::from_ratio(16, 5);
        let y12_5 = Scalar::from_ratio(12, 5);
        let x32 = Line::new(Scalar::one(), Scalar::zero(), -&x16_5).unwrap();
        let pts = intersect_line_circle(&x32, &k4);
        assert_eq!(pts.len(), 2);
        assert!(pts[0].x.eq_eps(&x16_5) && pts[0].y.eq_eps(&-&y12_5));
        assert!(pts[1].x.eq_eps(&x16_5) && pts[1].y.eq_eps(&y12_5));

        let y9 = Line::from_f64(0.0, 1.0, -9.0).unwrap();
        assert!(intersect_line_circle(&y9, &k).is_empty());
    }

    #[test]
    fn circle_circle_intersections() {
        let k1 = Circle::new(pt(0.0, 0.0), Scalar::from_int(2)).unwrap();
        let k2 = Circle::new(pt(2.0, 0.0), Scalar::from_int(2)).unwrap();
        let pts = intersect_circles(&k1, &k2).unwrap();
        assert_eq!(pts.len(), 2);
        let sqrt3 = Scalar::from_int(3).sqrt();
        assert!(pts[0].x.eq_eps(&Scalar::one()) && pts[0].y.eq_eps(&-&sqrt3));
        assert!(pts[1].x.eq_eps(&Scalar::one()) && pts[1].y.eq_eps(&sqrt3));

        // radical line x = (a^2 - b^2 + c^2) / 2a = 16/5 for radii 4 and 3
        let k1 = Circle::new(pt(0.0, 0.0), Scalar::from_int(4)).unwrap();
        let k2 = Circle::new(pt(5.0, 0.0), Scalar::from_int(3)).unwrap();
        let pts = intersect_circles(&k1, &k2).unwrap();
        assert_eq!(pts.len(), 2);
        let x16_5 = Scalar::from_ratio(16, 5);
        let y12_5 = Scalar::from_ratio(12, 5);
        assert!(pts[0].x.eq_eps(&x16_5) && pts[0].y.eq_eps(&-&y12_5));
        assert!(pts[1].x.eq_eps(&x16_5) && pts[1].y.eq_eps(&y12_5));

        let k3 = Circle::new(pt(3.0, 0.0), Scalar::one()).unwrap();
        let k0 = Circle::new(pt(0.0, 0.0), Scalar::one()).unwrap();
        assert!(intersect_circles(&k0, &k3).unwrap().is_empty());

        let shifted = Circle::new(pt(0.0, 0.0), Scalar::from_int(3)).unwrap();
        assert_eq!(
            intersect_circles(&k0, &shifted).unwrap_err(),
            Error::ConcentricCircles
        );
    }

    #[test]
    fn reflection_involution_and_isometry_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..400 {
            let g = Line::through(
                &pt(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)),
                &pt(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)),
            );
            let g = match g {
                Ok(g) => g,
                Err(_) => continue,
            };
            let p = pt(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let q = pt(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let p2 = g.reflect_point(&g.reflect_point(&p));
            assert!(p2.eq_eps(&p), "involution failed");
            let d1 = p.distance(&q);
            let d2 = g.reflect_point(&p).distance(&g.reflect_point(&q));
            assert!(d1.eq_eps(&d2), "isometry failed");
            // midpoint lies on the mirror
            let img = g.reflect_point(&p);
            assert!(g.contains(&p.midpoint(&img)));
        }
    }

    // Brute-force oracle: reduce to the axis-aligned frame (center distance d
    // along the x-axis), solve x = (d^2 - r2^2 + r1^2) / 2d and
    // y = +-sqrt(r1^2 - x^2) at doubled precision, and rotate back.
    fn circle_intersection_oracle(c1: &Circle, c2: &Circle) -> Vec<Point> {
        let bits = c1.radius.prec() * 2;
        let up = |s: &Scalar| s.with_prec(bits);
        let (x1, y1) = (up(&c1.center.x), up(&c1.center.y));
        let (x2, y2) = (up(&c2.center.x), up(&c2.center.y));
        let (r1, r2) = (up(&c1.radius), up(&c2.radius));
        let dx = &x2 - &x1;
        let dy = &y2 - &y1;
        let d = dx.hypot(&dy);
        let two = Scalar::from_int_prec(bits, 2);
        let x = (&d * &d - &r2 * &r2 + &r1 * &r1) / (&two * &d);
        let disc = &r1 * &r1 - &x * &x;
        if disc.is_sign_negative() && !disc.is_zero_eps() {
            return vec![];
        }
        let y = disc.abs().sqrt();
        let (ux, uy) = (&dx / &d, &dy / &d);
        let mut out = vec![];
        for sign in [Scalar::one(), -Scalar::one()] {
            let sy = &sign * &y;
            let px = &x1 + &(&x * &ux) - &(&sy * &uy);
            let py = &y1 + &(&x * &uy) + &(&sy * &ux);
            out.push(Point::new(px, py));
        }
        if out[0].eq_eps(&out[1]) {
            out.pop();
        }
        sort_points(out)
    }

    #[test]
    fn circle_intersection_matches_bruteforce_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut checked = 0;
        while checked < 1000 {
            let c1 = Circle::new(
                pt(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0)),
                Scalar::from_f64(rng.gen_range(0.2..4.0)),
            )
            .unwrap();
            let c2 = Circle::new(
                pt(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0)),
                Scalar::from_f64(rng.gen_range(0.2..4.0)),
            )
            .unwrap();
            if c1.center.distance(&c2.center).is_zero_eps() {
                continue;
            }
            let got = intersect_circles(&c1, &c2).unwrap();
            let want = circle_intersection_oracle(&c1, &c2);
            // skip near-tangent draws where the point count is eps-fragile
            let d = c1.center.distance(&c2.center);
            let outer = (&c1.radius + &c2.radius - &d).abs();
            let inner = ((&c1.radius - &c2.radius).abs() - &d).abs();
            if outer.to_f64() < 1e-6 || inner.to_f64() < 1e-6 {
                continue;
            }
            assert_eq!(got.len(), want.len(), "solution count differs");
            for (g, w) in got.iter().zip(want.iter()) {
                assert!(g.eq_eps(w), "intersection point differs");
            }
            checked += 1;
        }
    }
}
