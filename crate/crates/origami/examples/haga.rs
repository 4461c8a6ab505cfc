//! Haga's theorem: one fold divides a square's edge in thirds.
//!
//! Fold corner B onto the midpoint M of the top edge. The folded-over
//! bottom edge crosses the left edge exactly at height side/3, and the
//! triangle pinned at the right edge is a scaled 3-4-5.
//!
//! ```sh
//! cargo run --example haga
//! ```

use origami::constructions::{haga_third, landmark_distance};
use origami::render::{emit_svg, SvgOptions};
use origami::scalar::Scalar;

fn main() {
    let side = Scalar::from_int(8);
    let trace = haga_third(&side).expect("side is positive");

    let e = trace.landmark_point("E").unwrap();
    let c = trace.landmark_point("C").unwrap();
    let m = trace.landmark_point("M").unwrap();
    println!("side 8 square, fold B -> M:");
    println!("  EC = {}  (a leg of the fold triangle)", e.distance(c));
    println!("  EM = {}  (its hypotenuse)", e.distance(m));
    println!(
        "  AG = {}  = side/3",
        landmark_distance(&trace, "A", "G").unwrap()
    );
    println!(
        "  DG = {}  = 2 side/3",
        landmark_distance(&trace, "D", "G").unwrap()
    );

    trace.check_replay().expect("trace replays");
    let svg = emit_svg(&trace, &SvgOptions::default()).unwrap();
    std::fs::write("haga.svg", svg).unwrap();
    println!("crease pattern written to haga.svg");
}
