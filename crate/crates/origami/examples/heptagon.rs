//! The regular 7-gon: the smallest polygon beyond compass and
//! straightedge, and a one-cubic-fold job for origami.
//!
//! The vertex abscissa cos(2pi/7) is the positive root of
//! 8y^3 + 4y^2 - 4y - 1, pinned by folding two eighth-line landmarks onto
//! the square's midlines simultaneously.

use origami::constructions::heptagon;
use origami::polysolve::solve_cubic;
use origami::render::{emit_svg, SvgOptions};
use origami::scalar::Scalar;

fn main() {
    let trace = heptagon().unwrap();
    let center = trace.landmark_point("O").unwrap();
    let q = trace.landmark_point("Q").unwrap();

    let roots = solve_cubic(
        &Scalar::from_int(8),
        &Scalar::from_int(4),
        &Scalar::from_int(-4),
        &Scalar::from_int(-1),
    )
    .unwrap();
    let algebraic = roots.roots().pop().unwrap();
    let folded = &q.x - &center.x;
    println!("folded vertex abscissa:  {folded}");
    println!("root of 8y^3+4y^2-4y-1:  {algebraic}");
    println!("difference: {:.3e}", (&folded - &algebraic).abs().to_f64());

    println!("\nvertex angles around the center (degrees):");
    for k in 1..=7 {
        let v = trace.landmark_point(&format!("V{k}")).unwrap();
        let ang = (&v.y - &center.y).atan2(&(&v.x - &center.x)).rad_to_deg();
        println!("  V{k}: {:>12.6}", ang.to_f64());
    }

    let svg = emit_svg(&trace, &SvgOptions::default()).unwrap();
    std::fs::write("heptagon.svg", svg).unwrap();
    println!("crease pattern written to heptagon.svg");
}
