//! Angle trisection two ways: the two-crease fold on a square sheet, and
//! the midpoint/perpendicular figure for an angle given by three points.
//! Both are cross-checked against the marked-ruler simulation, which finds
//! the sliding position by bisection rather than by dividing by three.

use origami::constructions::{ray_angle_deg, trisect_angle_abe, trisect_angle_lemma2};
use origami::geom::Point;
use origami::neusis::archimedes_trisect;
use origami::scalar::Scalar;

fn main() {
    println!("alpha    fold alpha/3     ruler alpha/3    |difference|");
    for deg in (10..=80).step_by(10) {
        let alpha = Scalar::from_int(deg);
        let trace = trisect_angle_abe(&alpha).unwrap();
        let a = trace.landmark_point("A").unwrap();
        let folded = ray_angle_deg(a, trace.landmark_point("Aimg").unwrap());
        let ruler = archimedes_trisect(&alpha).unwrap();
        println!(
            "{deg:>5}    {:<16.12} {:<16.12} {:.3e}",
            folded.to_f64(),
            ruler.to_f64(),
            (&folded - &ruler).abs().to_f64()
        );
    }

    // the same result from a raw point triple (60 degrees at Q)
    let p = Point::from_f64(1.0, 3f64.sqrt());
    let q = Point::origin();
    let r = Point::from_f64(3.0, 0.0);
    let trace = trisect_angle_lemma2(&p, &q, &r).unwrap();
    let s = trace.landmark_point("S").unwrap();
    let v = trace.landmark_point("V").unwrap();
    println!("\npoint-triple trisection of 60 degrees:");
    println!("  ray to S: {} deg", ray_angle_deg(&q, s).to_f64());
    println!("  ray to V: {} deg", ray_angle_deg(&q, v).to_f64());
}
