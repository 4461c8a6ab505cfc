//! Cube roots three ways.
//!
//! 1. The one-fold construction: fold (-1,0) onto x=1 and (0,-k) onto y=k
//!    at once; the crease is y = -x/cbrt(k) + cbrt(k).
//! 2. The common tangent of the parabolas y^2 = 2ax and x^2 = 2by, whose
//!    slope is -cbrt(a/b), read off a unit-run slope triangle.
//! 3. The marked-ruler configuration of Nicomedes, solved through its
//!    quartic (4x + k)(x^3 - k).

use origami::constructions::{cube_root, cube_root_ratio, landmark_distance};
use origami::neusis::nicomedes_cuberoot;
use origami::scalar::Scalar;

fn main() {
    println!("k      fold cbrt(k)        ruler cbrt(k)       direct");
    for k in [2.0, 3.0, 5.0, 7.9] {
        let k = Scalar::from_f64(k);
        let trace = cube_root(&k).unwrap();
        let folded = &trace.landmark_point("R").unwrap().y;
        let ruler = nicomedes_cuberoot(&k).unwrap();
        println!(
            "{:<6} {:<19.15} {:<19.15} {:.15}",
            k.to_f64(),
            folded.to_f64(),
            ruler.to_f64(),
            k.cbrt().to_f64()
        );
    }

    let trace = cube_root(&Scalar::from_int(8)).unwrap();
    let crease = trace.landmark_line("t").unwrap();
    println!(
        "\nk = 8 crease: {:.4} x + {:.4} y + {:.4} = 0  (y = -x/2 + 2)",
        crease.a().to_f64(),
        crease.b().to_f64(),
        crease.c().to_f64()
    );

    let trace = cube_root_ratio(&Scalar::from_int(8), &Scalar::one()).unwrap();
    println!(
        "tangent of y^2 = 16x and x^2 = 2y has slope {} and slope-triangle rise {}",
        trace.landmark_line("t").unwrap().slope().unwrap().to_f64(),
        landmark_distance(&trace, "P0", "P1").unwrap().to_f64()
    );
}
