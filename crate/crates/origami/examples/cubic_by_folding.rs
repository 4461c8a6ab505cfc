//! Solving cubics by paper folding.
//!
//! Every real root of x^3 + p x^2 + q x + r appears as the slope of a
//! crease folding the focus of (y - q/2)^2 = 2r (x + p/2) onto its
//! directrix while the focus of x^2 = 2y lands on y = -1/2: the creases
//! are exactly the common tangents of the two parabolas.

use origami::constructions::solve_cubic_by_folding;
use origami::polysolve::solve_cubic;
use origami::scalar::Scalar;

fn show(p: f64, q: f64, r: f64) {
    let (ps, qs, rs) = (Scalar::from_f64(p), Scalar::from_f64(q), Scalar::from_f64(r));
    let folded = solve_cubic_by_folding(&ps, &qs, &rs).unwrap();
    let solved = solve_cubic(&Scalar::one(), &ps, &qs, &rs).unwrap();
    println!("x^3 + {p} x^2 + {q} x + {r}:");
    let mut worst = 0f64;
    for (f, s) in folded.iter().zip(solved.roots().iter()) {
        worst = worst.max((f - s).abs().to_f64());
        println!("  crease slope {:<22.17} cardano {:.17}", f.to_f64(), s.to_f64());
    }
    println!("  max deviation {worst:.3e}\n");
}

fn main() {
    show(0.0, 0.0, -2.0); // the cube-doubling cubic
    show(0.0, -3.0, -1.0); // the 60-degree trisection cubic
    show(-6.0, 11.0, -6.0); // (x-1)(x-2)(x-3)
    show(1.0, -1.0, -0.5);
}
