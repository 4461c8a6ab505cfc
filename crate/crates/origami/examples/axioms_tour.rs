//! A tour of the seven fold primitives on one configuration: how many
//! creases each returns and what each crease does.

use origami::axioms::{
    fold_lot, fold_o1, fold_o2, fold_o3, fold_o4, fold_o5, fold_o6, verify_fold,
};
use origami::geom::{Line, Point};

fn main() {
    let p = Point::from_f64(0.0, 1.0);
    let q = Point::from_f64(2.0, 0.0);
    let x_axis = Line::from_f64(0.0, 1.0, 0.0).unwrap();
    let y_axis = Line::from_f64(1.0, 0.0, 0.0).unwrap();

    let hit = fold_o1(&x_axis, &y_axis).unwrap();
    println!("O1  intersect two creases        -> point ({}, {})", hit.x, hit.y);

    let f = fold_o2(&p, &q).unwrap();
    println!("O2  crease through two points    -> {}", show(&f.crease));

    let f = fold_o3(&p, &q).unwrap();
    println!("O3  point onto point             -> {}", show(&f.crease));

    let folds = fold_o4(&x_axis, &y_axis).unwrap();
    println!("O4  line onto line               -> {} creases (angle bisectors)", folds.len());
    for f in &folds {
        println!("      {}", show(&f.crease));
    }

    let folds = fold_o5(&p, &x_axis, &q);
    println!("O5  point onto line through q    -> {} creases (parabola tangents)", folds.len());
    for f in &folds {
        println!("      {} verified: {}", show(&f.crease), verify_fold(f));
    }

    let q_line = Line::from_f64(1.0, 0.0, 1.0).unwrap(); // x = -1
    let folds = fold_o6(&p, &x_axis, &q, &q_line).unwrap();
    println!("O6  two points onto two lines    -> {} creases (common tangents)", folds.len());
    for f in &folds {
        println!("      {} verified: {}", show(&f.crease), verify_fold(f));
    }

    let f = fold_lot(&x_axis, &p);
    println!("LOT line onto itself through p   -> {}", show(&f.crease));
}

fn show(l: &Line) -> String {
    format!(
        "{:+.4} x {:+.4} y {:+.4} = 0",
        l.a().to_f64(),
        l.b().to_f64(),
        l.c().to_f64()
    )
}
