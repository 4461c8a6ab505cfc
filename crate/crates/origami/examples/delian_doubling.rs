//! Doubling the cube: impossible with compass and straightedge, one
//! simultaneous fold with origami.
//!
//! On a side-3 square ruled into thirds, fold B onto the left edge while E
//! lands on the upper third line. The image point splits the edge into
//! segments with ratio exactly cbrt(2).

use origami::constructions::{delian_double, landmark_distance};
use origami::render::{emit_svg, SvgOptions};
use origami::scalar::Scalar;

fn main() {
    let trace = delian_double().unwrap();
    let x = landmark_distance(&trace, "D", "Bprime").unwrap();
    let y = landmark_distance(&trace, "A", "Bprime").unwrap();

    println!("DB' = x = {x}");
    println!("AB' = y = {y}");
    println!("x + y   = {}", &x + &y);
    println!("x / y   = {}", &x / &y);
    println!("cbrt(2) = {}", Scalar::from_int(2).cbrt());
    let resid = &x * &x * &x - Scalar::from_int(2) * &y * &y * &y;
    println!("|x^3 - 2 y^3| = {:.3e}", resid.abs().to_f64());

    let svg = emit_svg(&trace, &SvgOptions::default()).unwrap();
    std::fs::write("delian.svg", svg).unwrap();
    println!("crease pattern written to delian.svg");
}
