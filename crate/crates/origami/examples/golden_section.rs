//! Dividing a square edge in the golden ratio with three folds: the
//! vertical midline, the diagonal of a half rectangle, and the bisector of
//! the angle that diagonal makes with the base.

use origami::constructions::{golden_section, landmark_distance};
use origami::scalar::Scalar;

fn main() {
    let trace = golden_section(&Scalar::from_int(2)).unwrap();
    let phi = (Scalar::one() + Scalar::from_int(5).sqrt()) / Scalar::from_int(2);

    let ad = landmark_distance(&trace, "A", "D").unwrap();
    let ag = landmark_distance(&trace, "A", "G").unwrap();
    let gd = landmark_distance(&trace, "G", "D").unwrap();
    println!("phi      = {phi}");
    println!("AD / AG  = {}", &ad / &ag);
    println!("AG / GD  = {}", &ag / &gd);
    println!(
        "EH       = {}  (= 1/phi on the midline)",
        landmark_distance(&trace, "E", "H").unwrap()
    );
    println!(
        "max deviation from phi: {:.3e}",
        (&ad / &ag - &phi).abs().max_val(&(&ag / &gd - &phi).abs()).to_f64()
    );
}
