//! Gauss' 17-gon by folding.
//!
//! The cosine of the central angle unwinds into a cascade of four
//! quadratics; each is solved by a focus-onto-directrix fold whose crease
//! slope is a root, and each anchor point is built by folds from the
//! previous stage:
//!
//! ```text
//! y^2 + y - 4 = 0       y1 > 0 > y2
//! n^2 - y1 n - 1 = 0    n2 < 0
//! m^2 - y2 m - 1 = 0    m2 < 0
//! v^2 - n2 v + m2 = 0   v1 = 2 cos(4 pi / 17)
//! ```

use origami::constructions::{heptadecagon, heptadecagon_value};
use origami::render::{emit_svg, SvgOptions};
use origami::scalar::Scalar;

fn main() {
    let trace = heptadecagon().unwrap();
    for name in ["y1", "y2", "n2", "m2", "v1"] {
        let v = heptadecagon_value(&trace, name).unwrap();
        println!("{name} = {}", v.to_decimal(40));
    }
    let v1 = heptadecagon_value(&trace, "v1").unwrap();
    let exact = Scalar::from_int(2) * (Scalar::pi() * Scalar::from_ratio(4, 17)).cos();
    println!("2 cos(4 pi / 17) = {}", exact.to_decimal(40));
    println!("cascade error: {:.3e}", (&v1 - &exact).abs().to_f64());

    let center = trace.landmark_point("M").unwrap();
    let mut angles: Vec<f64> = (1..=17)
        .map(|k| {
            let v = trace.landmark_point(&format!("P{k}")).unwrap();
            (&v.y - &center.y)
                .atan2(&(&v.x - &center.x))
                .rad_to_deg()
                .to_f64()
        })
        .collect();
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let gaps: Vec<f64> = angles.windows(2).map(|w| w[1] - w[0]).collect();
    println!(
        "\n17 vertices; central-angle gaps range {:.12} .. {:.12} (exact {:.12})",
        gaps.iter().cloned().fold(f64::INFINITY, f64::min),
        gaps.iter().cloned().fold(0.0, f64::max),
        360.0 / 17.0
    );

    let svg = emit_svg(&trace, &SvgOptions::default()).unwrap();
    std::fs::write("heptadecagon.svg", svg).unwrap();
    println!("crease pattern written to heptadecagon.svg");
}
