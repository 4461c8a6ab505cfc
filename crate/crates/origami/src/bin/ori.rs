//! Command-line front end.
//!
//! ```text
//! ori run <script.ori> [--out trace.json] [--svg pattern.svg] [--side S] [--bits N]
//! ori verify <suite|all> [--bits N]
//! ori ngon <n> --system <zul|origami>
//! ori solve-cubic <p> <q> <r> [--bits N]
//! ori svg <trace.json> [--out pattern.svg] [--width W] [--margin M] [--no-labels]
//! ```
//!
//! Exit codes: 0 ok, 1 verification or assertion failure, 2 parse error,
//! 3 numeric or fold error, 64 usage. Machine-readable output (JSON or
//! TSV) goes to stdout, diagnostics to stderr. `ORIGAMI_BITS` or `--bits`
//! set the working mantissa width (default 256).

use origami::render::{self, SvgOptions};
use origami::scalar::{set_precision, Scalar};
use origami::script;
use origami::trace::StartConfig;
use origami::verify;
use origami::Error;
use std::fs;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NUMERIC: u8 = 3;
const EXIT_USAGE: u8 = 64;

const USAGE: &str = "\
usage: ori <command> [args]

commands:
  run <script.ori> [--out FILE] [--svg FILE] [--side S] [--bits N]
      parse and execute a construction script; trace JSON to --out or stdout
  verify <suite|all> [--bits N]
      run built-in check suites; suites: haga golden delian trisect
      cuberoot cubic heptagon heptadecagon ngon-tables
  ngon <n> --system <zul|origami>
      constructibility report for the regular n-gon
  solve-cubic <p> <q> <r> [--bits N]
      roots of x^3 + p x^2 + q x + r by folding and by formula
  svg <trace.json> [--out FILE] [--width W] [--margin M] [--no-labels]
      render trace JSON as a crease-pattern SVG
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    ExitCode::from(dispatch(&args))
}

fn usage(msg: &str) -> u8 {
    if !msg.is_empty() {
        eprintln!("ori: {msg}");
    }
    eprint!("{USAGE}");
    EXIT_USAGE
}

fn error_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_) => EXIT_PARSE,
        Error::AssertFailed { .. } => EXIT_FAIL,
        _ => EXIT_NUMERIC,
    }
}

/// Pulls `--flag VALUE` out of the argument list.
fn take_flag(args: &mut Vec<String>, flag: &str) -> Option<String> {
    let pos = args.iter().position(|a| a == flag)?;
    if pos + 1 >= args.len() {
        return None;
    }
    let value = args.remove(pos + 1);
    args.remove(pos);
    Some(value)
}

fn take_switch(args: &mut Vec<String>, flag: &str) -> bool {
    if let Some(pos) = args.iter().position(|a| a == flag) {
        args.remove(pos);
        true
    } else {
        false
    }
}

fn apply_precision(args: &mut Vec<String>) -> Result<(), u8> {
    let mut bits: Option<u32> = None;
    if let Ok(env_bits) = std::env::var("ORIGAMI_BITS") {
        match env_bits.parse() {
            Ok(b) => bits = Some(b),
            Err(_) => {
                eprintln!("ori: ORIGAMI_BITS is not a number");
                return Err(EXIT_USAGE);
            }
        }
    }
    if let Some(flag) = take_flag(args, "--bits") {
        match flag.parse() {
            Ok(b) => bits = Some(b),
            Err(_) => {
                eprintln!("ori: --bits expects a number");
                return Err(EXIT_USAGE);
            }
        }
    }
    if let Some(b) = bits {
        set_precision(b);
    }
    Ok(())
}

fn dispatch(args: &[String]) -> u8 {
    let mut args = args.to_vec();
    if args.is_empty() {
        return usage("missing command");
    }
    if let Err(code) = apply_precision(&mut args) {
        return code;
    }
    let command = args.remove(0);
    match command.as_str() {
        "run" => cmd_run(args),
        "verify" => cmd_verify(args),
        "ngon" => cmd_ngon(args),
        "solve-cubic" => cmd_solve_cubic(args),
        "svg" => cmd_svg(args),
        "help" | "--help" | "-h" => {
            print!("{USAGE}");
            EXIT_OK
        }
        other => usage(&format!("unknown command '{other}'")),
    }
}

fn cmd_run(mut args: Vec<String>) -> u8 {
    let out = take_flag(&mut args, "--out");
    let svg = take_flag(&mut args, "--svg");
    let side = take_flag(&mut args, "--side");
    if args.len() != 1 {
        return usage("run expects exactly one script path");
    }
    let path = &args[0];
    let source = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("ori: cannot read {path}: {e}");
            return EXIT_USAGE;
        }
    };
    let prog = match script::parse(&source) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{path}:{e}");
            return EXIT_PARSE;
        }
    };
    let side = match side {
        Some(text) => match Scalar::parse(&text) {
            Some(s) if !s.is_sign_negative() && !s.is_zero_eps() => s,
            _ => return usage("--side expects a positive number"),
        },
        None => Scalar::one(),
    };
    let start = StartConfig::square(side);
    let trace = match script::interpret(&prog, &start) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{path}: {e}");
            return error_code(&e);
        }
    };
    let json = render::emit_json(&trace);
    if let Some(out) = out {
        if let Err(e) = fs::write(&out, &json) {
            eprintln!("ori: cannot write {out}: {e}");
            return EXIT_NUMERIC;
        }
    } else {
        println!("{json}");
    }
    if let Some(svg_path) = svg {
        match render::emit_svg(&trace, &SvgOptions::default()) {
            Ok(doc) => {
                if let Err(e) = fs::write(&svg_path, doc) {
                    eprintln!("ori: cannot write {svg_path}: {e}");
                    return EXIT_NUMERIC;
                }
            }
            Err(e) => {
                eprintln!("ori: {e}");
                return error_code(&e);
            }
        }
    }
    EXIT_OK
}

fn cmd_verify(args: Vec<String>) -> u8 {
    if args.len() != 1 {
        return usage("verify expects one suite name or 'all'");
    }
    let names: Vec<&str> = if args[0] == "all" {
        verify::SUITE_NAMES.to_vec()
    } else if verify::SUITE_NAMES.contains(&args[0].as_str()) {
        vec![args[0].as_str()]
    } else {
        return usage(&format!("unknown suite '{}'", args[0]));
    };
    let mut all_pass = true;
    for name in names {
        match verify::run_suite(name) {
            Ok(suite) => {
                for check in &suite.checks {
                    println!(
                        "{}\t{}\t{}\t{}",
                        suite.name,
                        if check.pass { "PASS" } else { "FAIL" },
                        check.label,
                        check.detail
                    );
                    all_pass &= check.pass;
                }
            }
            Err(e) => {
                eprintln!("ori: suite {name}: {e}");
                return error_code(&e);
            }
        }
    }
    if all_pass {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn cmd_ngon(mut args: Vec<String>) -> u8 {
    let system = match take_flag(&mut args, "--system") {
        Some(s) => s,
        None => return usage("ngon requires --system zul|origami"),
    };
    if args.len() != 1 {
        return usage("ngon expects one integer");
    }
    let n: u64 = match args[0].parse() {
        Ok(n) => n,
        Err(_) => return usage("ngon expects an integer"),
    };
    let report = match system.as_str() {
        "zul" => origami::constructibility::zul_ngon_constructible(n),
        "origami" => origami::constructibility::origami_ngon_constructible(n),
        _ => return usage("--system must be 'zul' or 'origami'"),
    };
    match report {
        Ok(r) => {
            let verdict = match system.as_str() {
                "zul" => r.zul,
                _ => r.origami,
            };
            println!("{n}\t{system}\t{verdict}\t{}", r.witness);
            EXIT_OK
        }
        Err(e) => {
            eprintln!("ori: {e}");
            usage("")
        }
    }
}

fn cmd_solve_cubic(args: Vec<String>) -> u8 {
    if args.len() != 3 {
        return usage("solve-cubic expects three coefficients p q r");
    }
    let mut coeffs = vec![];
    for a in &args {
        match Scalar::parse(a) {
            Some(s) => coeffs.push(s),
            None => return usage(&format!("'{a}' is not a number")),
        }
    }
    let folded = match origami::constructions::solve_cubic_by_folding(
        &coeffs[0], &coeffs[1], &coeffs[2],
    ) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("ori: folding failed: {e}");
            return error_code(&e);
        }
    };
    let solved = match origami::polysolve::solve_cubic(
        &Scalar::one(),
        &coeffs[0],
        &coeffs[1],
        &coeffs[2],
    ) {
        Ok(r) => r.roots(),
        Err(e) => {
            eprintln!("ori: solver failed: {e}");
            return error_code(&e);
        }
    };
    let digits = (origami::scalar::precision() / 3) as usize;
    let mut worst = Scalar::zero();
    for (i, (f, s)) in folded.iter().zip(solved.iter()).enumerate() {
        let dev = (f - s).abs();
        worst = worst.max_val(&dev);
        println!(
            "root{}\t{}\t{}\t{:.3e}",
            i,
            f.to_decimal(digits),
            s.to_decimal(digits),
            dev.to_f64()
        );
    }
    println!("max_deviation\t{:.3e}", worst.to_f64());
    if folded.len() != solved.len() {
        eprintln!(
            "ori: crease count {} differs from root count {}",
            folded.len(),
            solved.len()
        );
        return EXIT_FAIL;
    }
    EXIT_OK
}

fn cmd_svg(mut args: Vec<String>) -> u8 {
    let out = take_flag(&mut args, "--out");
    let width = take_flag(&mut args, "--width");
    let margin = take_flag(&mut args, "--margin");
    let no_labels = take_switch(&mut args, "--no-labels");
    if args.len() != 1 {
        return usage("svg expects one trace JSON path");
    }
    let text = match fs::read_to_string(&args[0]) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("ori: cannot read {}: {e}", args[0]);
            return EXIT_USAGE;
        }
    };
    let trace = match render::parse_json(&text) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("ori: {e}");
            return error_code(&e);
        }
    };
    let mut opts = SvgOptions::default();
    if let Some(w) = width {
        match w.parse() {
            Ok(w) => opts.width_px = w,
            Err(_) => return usage("--width expects a number"),
        }
    }
    if let Some(m) = margin {
        match m.parse() {
            Ok(m) => opts.margin_px = m,
            Err(_) => return usage("--margin expects a number"),
        }
    }
    opts.labels = !no_labels;
    match render::emit_svg(&trace, &opts) {
        Ok(doc) => {
            if let Some(out) = out {
                if let Err(e) = fs::write(&out, doc) {
                    eprintln!("ori: cannot write {out}: {e}");
                    return EXIT_NUMERIC;
                }
            } else {
                print!("{doc}");
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("ori: {e}");
            error_code(&e)
        }
    }
}
