//! The construction-script language end to end: parse, pretty-print,
//! interpret, inspect the resulting trace, and show a position-carrying
//! parse error.

use origami::render;
use origami::script::{interpret, parse, pretty_print};
use origami::trace::StartConfig;

const SOURCE: &str = "\
# fold the two diagonals and meet in the middle
fold O2 A C as d1
fold O2 B D as d2
point d1 x d2 as O

# lift the base edge onto the top edge: the horizontal midline
fold O4 AB CD as mid
assert_near dist(O, mid) 0 1e-50

# a point-onto-line fold through O picks a branch explicitly
point F = (0.5, 1)
line  l = 0 1 -0.25
fold O5 F l O choose 0 as t
";

fn main() {
    let prog = parse(SOURCE).expect("the demo script parses");
    print!("{}", pretty_print(&prog));

    let trace = interpret(&prog, &StartConfig::unit()).expect("and runs");
    let o = trace.landmark_point("O").unwrap();
    println!("\ncenter O = ({}, {})", o.x, o.y);
    println!("steps recorded: {}", trace.steps.len());
    println!("replay: {:?}", trace.check_replay().is_ok());

    let json = render::emit_json(&trace);
    println!("trace JSON is {} bytes; landmarks carried: {:?}", json.len(),
        trace.landmarks.keys().collect::<Vec<_>>());

    // parse errors point at the offending token
    let bad = "fold O9 A B as t";
    match parse(bad) {
        Err(e) => println!("\n'{bad}' -> error at {}:{}: {} ({})", e.line, e.column, e.message, e.token),
        Ok(_) => unreachable!(),
    }
}
