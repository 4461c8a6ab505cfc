//! Classifying numbers by their minimal polynomial: compass-and-
//! straightedge needs an iterated-square-root tower, folding accepts any
//! tower of degree-2 and degree-3 steps.

use origami::constructibility::classify_int_poly;

fn main() {
    let cases: [(&str, Vec<i64>); 6] = [
        ("z^3 - 2 (cube doubling)", vec![-2, 0, 0, 1]),
        ("y^3 - 3y - 1 (60-degree trisection)", vec![-1, -3, 0, 1]),
        ("x^2 - 5", vec![-5, 0, 1]),
        ("x^4 - 2", vec![-2, 0, 0, 0, 1]),
        ("x^4 + x + 1", vec![1, 1, 0, 0, 1]),
        ("x - 7", vec![-7, 1]),
    ];
    for (label, coeffs) in cases {
        let r = classify_int_poly(&coeffs).unwrap();
        println!("{label}");
        println!("  compass: {:<8} origami: {}", r.zul.as_str(), r.origami.as_str());
        println!("  {}", r.witness);
    }
}
