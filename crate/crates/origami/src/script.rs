//! The construction-script language.
//!
//! One statement per line; `#` starts a comment. Declarations introduce
//! named points and lines, `fold` invokes an axiom (with a mandatory
//! `choose k` whenever more than one crease comes back at run time),
//! `point g x h as P` intersects two creases, and `assert_near` checks a
//! numeric expectation. Identifiers resolve against the standard square
//! names (`A B C D AB BC CD DA`) plus everything declared earlier.
//!
//! ```text
//! point P = (0, 1)
//! line  l = 0 1 1
//! fold O5 P l Q choose 1 as t
//! point t x AB as G
//! assert_near G.x 0.5 1e-30
//! ```

use crate::axioms::Axiom;
use crate::error::{Error, ParseError, Result};
use crate::geom::{Line, Point};
use crate::scalar::Scalar;
use crate::trace::{LineRef, PointRef, StartConfig, Trace, TraceBuilder};
use std::collections::BTreeMap;

/// Numeric or coordinate expression inside `assert_near`.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    CoordX(String),
    CoordY(String),
    Num(String),
    Dist(String, String),
}

/// One parsed statement. Numeric literals keep their lexemes, so printing
/// and re-parsing is lossless.
#[derive(Clone, Debug, PartialEq)]
pub enum Item {
    PointDecl {
        name: String,
        x: String,
        y: String,
    },
    LineDecl {
        name: String,
        a: String,
        b: String,
        c: String,
    },
    Fold {
        axiom: Axiom,
        args: Vec<String>,
        choose: Option<usize>,
        name: String,
    },
    IntersectStmt {
        g: String,
        h: String,
        name: String,
    },
    AssertNear {
        e1: Expr,
        e2: Expr,
        tol: String,
    },
}

/// A parsed program; `lines[i]` is the 1-based source line of `items[i]`.
#[derive(Clone, Debug)]
pub struct ScriptProgram {
    pub items: Vec<Item>,
    pub lines: Vec<usize>,
}

impl ScriptProgram {
    /// Structural equality, ignoring source positions.
    pub fn same_structure(&self, other: &ScriptProgram) -> bool {
        self.items == other.items
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(String),
    LParen,
    RParen,
    Comma,
    Equals,
    Dot,
}

struct Lexed {
    tok: Tok,
    col: usize,
}

fn lex_line(text: &str, line_no: usize) -> std::result::Result<Vec<Lexed>, ParseError> {
    let mut out = vec![];
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let col = i + 1;
        match c {
            '#' => break,
            c if c.is_whitespace() => {
                i += 1;
            }
            '(' => {
                out.push(Lexed { tok: Tok::LParen, col });
                i += 1;
            }
            ')' => {
                out.push(Lexed { tok: Tok::RParen, col });
                i += 1;
            }
            ',' => {
                out.push(Lexed { tok: Tok::Comma, col });
                i += 1;
            }
            '=' => {
                out.push(Lexed { tok: Tok::Equals, col });
                i += 1;
            }
            '.' if i + 1 < bytes.len() && !bytes[i + 1].is_ascii_digit() => {
                out.push(Lexed { tok: Tok::Dot, col });
                i += 1;
            }
            c if c.is_ascii_digit()
                || c == '.'
                || ((c == '-' || c == '+')
                    && i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_digit() || bytes[i + 1] == '.')) =>
            {
                let start = i;
                i += 1; // sign or first digit
                while i < bytes.len()
                    && (bytes[i].is_ascii_digit()
                        || bytes[i] == '.'
                        || bytes[i] == 'e'
                        || bytes[i] == 'E'
                        || ((bytes[i] == '+' || bytes[i] == '-')
                            && (bytes[i - 1] == 'e' || bytes[i - 1] == 'E')))
                {
                    i += 1;
                }
                let lexeme: String = bytes[start..i].iter().collect();
                if Scalar::parse(&lexeme).is_none() {
                    return Err(ParseError {
                        line: line_no,
                        column: col,
                        message: "malformed number".into(),
                        token: lexeme,
                    });
                }
                out.push(Lexed {
                    tok: Tok::Num(lexeme),
                    col,
                });
            }
            c if c.is_alphanumeric() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                out.push(Lexed {
                    tok: Tok::Ident(bytes[start..i].iter().collect()),
                    col,
                });
            }
            other => {
                return Err(ParseError {
                    line: line_no,
                    column: col,
                    message: "unexpected character".into(),
                    token: other.to_string(),
                });
            }
        }
    }
    Ok(out)
}

/// Object kinds known at parse time, for arity and type checking.
#[derive(Copy, Clone, PartialEq)]
enum Kind {
    Point,
    Line,
}

fn axiom_signature(axiom: Axiom) -> &'static [Kind] {
    match axiom {
        Axiom::O1 | Axiom::O4 => &[Kind::Line, Kind::Line],
        Axiom::O2 | Axiom::O3 => &[Kind::Point, Kind::Point],
        Axiom::O5 => &[Kind::Point, Kind::Line, Kind::Point],
        Axiom::O6 => &[Kind::Point, Kind::Line, Kind::Point, Kind::Line],
        Axiom::Lot => &[Kind::Line, Kind::Point],
    }
}

struct LineParser<'a> {
    toks: &'a [Lexed],
    pos: usize,
    line: usize,
}

impl<'a> LineParser<'a> {
    fn err(&self, message: &str) -> ParseError {
        let (column, token) = match self.toks.get(self.pos) {
            Some(l) => (
                l.col,
                match &l.tok {
                    Tok::Ident(s) | Tok::Num(s) => s.clone(),
                    Tok::LParen => "(".into(),
                    Tok::RParen => ")".into(),
                    Tok::Comma => ",".into(),
                    Tok::Equals => "=".into(),
                    Tok::Dot => ".".into(),
                },
            ),
            None => (
                self.toks.last().map(|l| l.col + 1).unwrap_or(1),
                "<end of line>".into(),
            ),
        };
        ParseError {
            line: self.line,
            column,
            message: message.into(),
            token,
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|l| &l.tok);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_ident(&mut self, what: &str) -> std::result::Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.err(&format!("expected {what}"))),
        }
    }

    fn expect_num(&mut self) -> std::result::Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Num(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.err("expected a number")),
        }
    }

    fn expect_tok(&mut self, tok: Tok, what: &str) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {what}")))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        if let Some(Tok::Ident(s)) = self.peek() {
            if s == kw {
                self.pos += 1;
                return true;
            }
        }
        false
    }

    fn done(&self) -> bool {
        self.pos == self.toks.len()
    }
}

/// Parses script text. All identifier uses are resolved against the
/// standard square names plus prior declarations, so undefined or duplicate
/// names are parse errors with positions.
pub fn parse(source: &str) -> std::result::Result<ScriptProgram, ParseError> {
    let mut names: BTreeMap<String, Kind> = BTreeMap::new();
    for p in ["A", "B", "C", "D"] {
        names.insert(p.to_string(), Kind::Point);
    }
    for l in ["AB", "BC", "CD", "DA"] {
        names.insert(l.to_string(), Kind::Line);
    }

    let mut items = vec![];
    let mut lines = vec![];
    for (i, raw) in source.lines().enumerate() {
        let line_no = i + 1;
        let toks = lex_line(raw, line_no)?;
        if toks.is_empty() {
            continue;
        }
        let mut p = LineParser {
            toks: &toks,
            pos: 0,
            line: line_no,
        };

        let item = parse_item(&mut p, &mut names)?;
        if !p.done() {
            return Err(p.err("trailing tokens after statement"));
        }
        items.push(item);
        lines.push(line_no);
    }
    Ok(ScriptProgram { items, lines })
}

fn declare(
    p: &LineParser,
    names: &mut BTreeMap<String, Kind>,
    name: &str,
    kind: Kind,
) -> std::result::Result<(), ParseError> {
    if names.contains_key(name) {
        let mut e = p.err("duplicate name");
        e.message = format!("duplicate name '{name}'");
        return Err(e);
    }
    names.insert(name.to_string(), kind);
    Ok(())
}

fn resolve(
    p: &LineParser,
    names: &BTreeMap<String, Kind>,
    name: &str,
) -> std::result::Result<Kind, ParseError> {
    names.get(name).copied().ok_or_else(|| {
        let mut e = p.err("undefined identifier");
        e.message = format!("undefined identifier '{name}'");
        e.token = name.to_string();
        e
    })
}

fn parse_item(
    p: &mut LineParser,
    names: &mut BTreeMap<String, Kind>,
) -> std::result::Result<Item, ParseError> {
    if p.keyword("point") {
        let name = p.expect_ident("a name")?;
        if p.peek() == Some(&Tok::Equals) {
            // point NAME = (x, y)
            p.bump();
            p.expect_tok(Tok::LParen, "'('")?;
            let x = p.expect_num()?;
            p.expect_tok(Tok::Comma, "','")?;
            let y = p.expect_num()?;
            p.expect_tok(Tok::RParen, "')'")?;
            declare(p, names, &name, Kind::Point)?;
            return Ok(Item::PointDecl { name, x, y });
        }
        // point G x H as P
        let g = name;
        if resolve(p, names, &g)? != Kind::Line {
            let mut e = p.err("intersection needs lines");
            e.message = format!("'{g}' is not a line");
            return Err(e);
        }
        if !p.keyword("x") {
            return Err(p.err("expected 'x' or '='"));
        }
        let h = p.expect_ident("a line name")?;
        if resolve(p, names, &h)? != Kind::Line {
            let mut e = p.err("intersection needs lines");
            e.message = format!("'{h}' is not a line");
            return Err(e);
        }
        if !p.keyword("as") {
            return Err(p.err("expected 'as'"));
        }
        let result = p.expect_ident("a result name")?;
        declare(p, names, &result, Kind::Point)?;
        return Ok(Item::IntersectStmt { g, h, name: result });
    }

    if p.keyword("line") {
        let name = p.expect_ident("a name")?;
        p.expect_tok(Tok::Equals, "'='")?;
        let a = p.expect_num()?;
        let b = p.expect_num()?;
        let c = p.expect_num()?;
        declare(p, names, &name, Kind::Line)?;
        return Ok(Item::LineDecl { name, a, b, c });
    }

    if p.keyword("fold") {
        let axiom_col = p.toks.get(p.pos).map(|l| l.col).unwrap_or(1);
        let axiom_name = p.expect_ident("an axiom")?;
        let axiom = Axiom::parse(&axiom_name).ok_or_else(|| {
            let mut e = p.err("unknown axiom");
            e.token = axiom_name.clone();
            e.column = axiom_col;
            e
        })?;
        let sig = axiom_signature(axiom);
        let mut args = vec![];
        for want in sig {
            let arg = p.expect_ident("an argument name")?;
            let kind = resolve(p, names, &arg)?;
            if kind != *want {
                let mut e = p.err("argument type mismatch");
                e.message = format!(
                    "'{arg}' is a {}, expected a {}",
                    if kind == Kind::Point { "point" } else { "line" },
                    if *want == Kind::Point { "point" } else { "line" }
                );
                return Err(e);
            }
            args.push(arg);
        }
        let mut choose = None;
        if p.keyword("choose") {
            let n = p.expect_num()?;
            let idx: usize = n.parse().map_err(|_| p.err("choose expects a small integer"))?;
            choose = Some(idx);
        }
        if !p.keyword("as") {
            return Err(p.err("expected 'as'"));
        }
        let name = p.expect_ident("a result name")?;
        // the intersection axiom binds a point, every other fold a crease
        let kind = if axiom == Axiom::O1 { Kind::Point } else { Kind::Line };
        declare(p, names, &name, kind)?;
        return Ok(Item::Fold {
            axiom,
            args,
            choose,
            name,
        });
    }

    if p.keyword("assert_near") {
        let e1 = parse_expr(p, names)?;
        let e2 = parse_expr(p, names)?;
        let tol = p.expect_num()?;
        return Ok(Item::AssertNear { e1, e2, tol });
    }

    Err(p.err("expected 'point', 'line', 'fold' or 'assert_near'"))
}

fn parse_expr(
    p: &mut LineParser,
    names: &BTreeMap<String, Kind>,
) -> std::result::Result<Expr, ParseError> {
    if let Some(Tok::Num(_)) = p.peek() {
        return Ok(Expr::Num(p.expect_num()?));
    }
    let ident = p.expect_ident("an expression")?;
    if ident == "dist" {
        p.expect_tok(Tok::LParen, "'('")?;
        let a = p.expect_ident("a name")?;
        resolve(p, names, &a)?;
        p.expect_tok(Tok::Comma, "','")?;
        let b = p.expect_ident("a name")?;
        resolve(p, names, &b)?;
        p.expect_tok(Tok::RParen, "')'")?;
        return Ok(Expr::Dist(a, b));
    }
    if resolve(p, names, &ident)? != Kind::Point {
        let mut e = p.err("coordinate access needs a point");
        e.message = format!("'{ident}' is not a point");
        return Err(e);
    }
    p.expect_tok(Tok::Dot, "'.'")?;
    let axis = p.expect_ident("'x' or 'y'")?;
    match axis.as_str() {
        "x" => Ok(Expr::CoordX(ident)),
        "y" => Ok(Expr::CoordY(ident)),
        _ => Err(p.err("expected 'x' or 'y'")),
    }
}

fn expr_text(e: &Expr) -> String {
    match e {
        Expr::CoordX(n) => format!("{n}.x"),
        Expr::CoordY(n) => format!("{n}.y"),
        Expr::Num(n) => n.clone(),
        Expr::Dist(a, b) => format!("dist({a}, {b})"),
    }
}

/// Canonical text form; parsing it back gives a structurally identical
/// program.
pub fn pretty_print(prog: &ScriptProgram) -> String {
    let mut out = String::new();
    for item in &prog.items {
        let line = match item {
            Item::PointDecl { name, x, y } => format!("point {name} = ({x}, {y})"),
            Item::LineDecl { name, a, b, c } => format!("line {name} = {a} {b} {c}"),
            Item::Fold {
                axiom,
                args,
                choose,
                name,
            } => {
                let mut s = format!("fold {} {}", axiom.name(), args.join(" "));
                if let Some(k) = choose {
                    s.push_str(&format!(" choose {k}"));
                }
                s.push_str(&format!(" as {name}"));
                s
            }
            Item::IntersectStmt { g, h, name } => format!("point {g} x {h} as {name}"),
            Item::AssertNear { e1, e2, tol } => {
                format!("assert_near {} {} {}", expr_text(e1), expr_text(e2), tol)
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

enum Slot {
    Point(PointRef),
    Line(LineRef),
}

fn script_err(line: usize, detail: impl Into<String>) -> Error {
    Error::Script {
        line,
        detail: detail.into(),
    }
}

/// Executes a parsed program against a start configuration, producing a
/// trace. `choose` is mandatory whenever a fold returns more than one
/// crease; the zero-based branch indexes the canonical solution order.
pub fn interpret(prog: &ScriptProgram, start: &StartConfig) -> Result<Trace> {
    let mut b = TraceBuilder::with_start(start);
    let mut env: BTreeMap<String, Slot> = BTreeMap::new();
    for (name, _) in start.objects() {
        if let Some(r) = b.point_ref(&name) {
            env.insert(name, Slot::Point(r));
        } else if let Some(r) = b.line_ref(&name) {
            env.insert(name, Slot::Line(r));
        }
    }
    let mut last_name = String::new();

    let num = |lex: &str, line: usize| -> Result<Scalar> {
        Scalar::parse(lex).ok_or_else(|| script_err(line, format!("bad number '{lex}'")))
    };

    for (item, &line) in prog.items.iter().zip(prog.lines.iter()) {
        match item {
            Item::PointDecl { name, x, y } => {
                if env.contains_key(name) {
                    return Err(script_err(line, format!("name '{name}' already defined")));
                }
                let p = Point::new(num(x, line)?, num(y, line)?);
                let r = b.given_point(name, p);
                env.insert(name.clone(), Slot::Point(r));
            }
            Item::LineDecl { name, a, b: bb, c } => {
                if env.contains_key(name) {
                    return Err(script_err(line, format!("name '{name}' already defined")));
                }
                let l = Line::new(num(a, line)?, num(bb, line)?, num(c, line)?)
                    .map_err(|e| script_err(line, e.to_string()))?;
                let r = b.given_line(name, l);
                env.insert(name.clone(), Slot::Line(r));
            }
            Item::Fold {
                axiom,
                args,
                choose,
                name,
            } => {
                let point_arg = |env: &BTreeMap<String, Slot>, i: usize| -> Result<PointRef> {
                    match env.get(&args[i]) {
                        Some(Slot::Point(r)) => Ok(*r),
                        _ => Err(script_err(line, format!("'{}' is not a point", args[i]))),
                    }
                };
                let line_arg = |env: &BTreeMap<String, Slot>, i: usize| -> Result<LineRef> {
                    match env.get(&args[i]) {
                        Some(Slot::Line(r)) => Ok(*r),
                        _ => Err(script_err(line, format!("'{}' is not a line", args[i]))),
                    }
                };
                if env.contains_key(name) {
                    return Err(script_err(line, format!("name '{name}' already defined")));
                }
                if *axiom == Axiom::O1 {
                    if let Some(k) = choose {
                        if *k >= 1 {
                            return Err(Error::BranchUnavailable {
                                requested: *k,
                                available: 1,
                            });
                        }
                    }
                    let g = line_arg(&env, 0)?;
                    let h = line_arg(&env, 1)?;
                    let r = b
                        .intersect(g, h, name)
                        .map_err(|e| script_err(line, e.to_string()))?;
                    env.insert(name.clone(), Slot::Point(r));
                    last_name = name.clone();
                    continue;
                }
                // count solutions first: choose is mandatory beyond one
                let creases = match axiom {
                    Axiom::O2 | Axiom::O3 => {
                        let p0 = b.point(point_arg(&env, 0)?).clone();
                        let p1 = b.point(point_arg(&env, 1)?).clone();
                        match axiom {
                            Axiom::O2 => crate::axioms::fold_o2(&p0, &p1).map(|f| vec![f.crease]),
                            _ => crate::axioms::fold_o3(&p0, &p1).map(|f| vec![f.crease]),
                        }
                    }
                    Axiom::O4 => b.peek_o4(line_arg(&env, 0)?, line_arg(&env, 1)?),
                    Axiom::O5 => Ok(b.peek_o5(
                        point_arg(&env, 0)?,
                        line_arg(&env, 1)?,
                        point_arg(&env, 2)?,
                    )),
                    Axiom::O6 => b.peek_o6(
                        point_arg(&env, 0)?,
                        line_arg(&env, 1)?,
                        point_arg(&env, 2)?,
                        line_arg(&env, 3)?,
                    ),
                    Axiom::Lot => {
                        let g = line_arg(&env, 0)?;
                        let q = point_arg(&env, 1)?;
                        Ok(vec![crate::axioms::fold_lot(b.line(g), b.point(q)).crease])
                    }
                    Axiom::O1 => unreachable!(),
                }
                .map_err(|e| script_err(line, e.to_string()))?;

                if creases.is_empty() {
                    return Err(script_err(line, "fold has no solution"));
                }
                if creases.len() > 1 && choose.is_none() {
                    return Err(script_err(
                        line,
                        format!("{} solutions: 'choose' is required", creases.len()),
                    ));
                }
                let branch = choose.unwrap_or(0);
                if branch >= creases.len() {
                    return Err(Error::BranchUnavailable {
                        requested: branch,
                        available: creases.len(),
                    });
                }
                let r = match axiom {
                    Axiom::O2 => b.fold_o2(point_arg(&env, 0)?, point_arg(&env, 1)?, name),
                    Axiom::O3 => b.fold_o3(point_arg(&env, 0)?, point_arg(&env, 1)?, name),
                    Axiom::O4 => b.fold_o4(line_arg(&env, 0)?, line_arg(&env, 1)?, branch, name),
                    Axiom::O5 => b.fold_o5(
                        point_arg(&env, 0)?,
                        line_arg(&env, 1)?,
                        point_arg(&env, 2)?,
                        branch,
                        name,
                    ),
                    Axiom::O6 => b.fold_o6(
                        point_arg(&env, 0)?,
                        line_arg(&env, 1)?,
                        point_arg(&env, 2)?,
                        line_arg(&env, 3)?,
                        branch,
                        name,
                    ),
                    Axiom::Lot => b.fold_lot(line_arg(&env, 0)?, point_arg(&env, 1)?, name),
                    Axiom::O1 => unreachable!(),
                }
                .map_err(|e| script_err(line, e.to_string()))?;
                env.insert(name.clone(), Slot::Line(r));
                last_name = name.clone();
            }
            Item::IntersectStmt { g, h, name } => {
                if env.contains_key(name) {
                    return Err(script_err(line, format!("name '{name}' already defined")));
                }
                let g = match env.get(g) {
                    Some(Slot::Line(r)) => *r,
                    _ => return Err(script_err(line, format!("'{g}' is not a line"))),
                };
                let h = match env.get(h) {
                    Some(Slot::Line(r)) => *r,
                    _ => return Err(script_err(line, format!("'{h}' is not a line"))),
                };
                let r = b
                    .intersect(g, h, name)
                    .map_err(|e| script_err(line, e.to_string()))?;
                env.insert(name.clone(), Slot::Point(r));
                last_name = name.clone();
            }
            Item::AssertNear { e1, e2, tol } => {
                let eval = |e: &Expr| -> Result<Scalar> {
                    match e {
                        Expr::Num(n) => num(n, line),
                        Expr::CoordX(n) => match env.get(n) {
                            Some(Slot::Point(r)) => Ok(b.point(*r).x.clone()),
                            _ => Err(script_err(line, format!("'{n}' is not a point"))),
                        },
                        Expr::CoordY(n) => match env.get(n) {
                            Some(Slot::Point(r)) => Ok(b.point(*r).y.clone()),
                            _ => Err(script_err(line, format!("'{n}' is not a point"))),
                        },
                        Expr::Dist(x, y) => match (env.get(x), env.get(y)) {
                            (Some(Slot::Point(a)), Some(Slot::Point(c))) => {
                                Ok(b.point(*a).distance(b.point(*c)))
                            }
                            (Some(Slot::Point(a)), Some(Slot::Line(l))) => {
                                Ok(b.line(*l).distance_to(b.point(*a)))
                            }
                            (Some(Slot::Line(l)), Some(Slot::Point(a))) => {
                                Ok(b.line(*l).distance_to(b.point(*a)))
                            }
                            _ => Err(script_err(
                                line,
                                "dist needs two points or a point and a line",
                            )),
                        },
                    }
                };
                let v1 = eval(e1)?;
                let v2 = eval(e2)?;
                let tol = num(tol, line)?;
                let gap = (&v1 - &v2).abs();
                if gap > tol {
                    return Err(Error::AssertFailed {
                        line,
                        detail: format!(
                            "assert_near {} {}: |{} - {}| = {} > {}",
                            expr_text(e1),
                            expr_text(e2),
                            v1.to_f64(),
                            v2.to_f64(),
                            gap.to_f64(),
                            tol.to_f64()
                        ),
                    });
                }
            }
        }
    }
    Ok(b.finish(&last_name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const HAGA: &str = "\
# Haga's third: fold B onto the midpoint of the top edge
fold O3 C D as midfold
point midfold x CD as M
fold O3 M B as crease
point crease x BC as E
point crease x AB as W
fold O2 W M as image
point image x DA as G
";

    #[test]
    fn parses_declarations_and_folds() {
        let src = "point P = (0,0)\npoint Q = (1,0)\nfold O2 P Q as l1\n";
        let prog = parse(src).unwrap();
        assert_eq!(prog.items.len(), 3);
        assert!(matches!(prog.items[0], Item::PointDecl { .. }));
        assert!(matches!(
            prog.items[2],
            Item::Fold {
                axiom: Axiom::O2,
                ..
            }
        ));
    }

    #[test]
    fn parses_choose() {
        let src = "point P = (0,1)\nline l = 0 1 1\npoint Q = (3,2)\nfold O5 P l Q choose 1 as t\n";
        let prog = parse(src).unwrap();
        match &prog.items[3] {
            Item::Fold { choose, .. } => assert_eq!(*choose, Some(1)),
            other => panic!("unexpected item {other:?}"),
        }
    }

    #[test]
    fn unknown_axiom_position() {
        let err = parse("fold O9 A B as t\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.column, 6);
        assert_eq!(err.token, "O9");
        assert!(err.message.contains("unknown axiom"));
    }

    #[test]
    fn undefined_and_duplicate_names() {
        let err = parse("fold O2 A Z as t\n").unwrap_err();
        assert!(err.message.contains("undefined identifier 'Z'"));

        let err = parse("point P = (1,2)\npoint P = (3,4)\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("duplicate name 'P'"));
    }

    #[test]
    fn planted_error_positions() {
        // missing comma in a point declaration
        let err = parse("point P = (1 2)\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 14));
        // line declaration with a word where a number belongs
        let err = parse("line l = 1 x 0\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.column, 12);
        // type mismatch: folding two lines with O2
        let err = parse("fold O2 AB CD as t\n").unwrap_err();
        assert!(err.message.contains("expected a point"));
    }

    #[test]
    fn haga_script_runs() {
        let prog = parse(HAGA).unwrap();
        let start = StartConfig::square(Scalar::from_int(8));
        let trace = interpret(&prog, &start).unwrap();
        let g = trace.landmark_point("G").unwrap();
        let want = Scalar::from_ratio(8, 3);
        assert!((&g.y - &want).abs() <= Scalar::exp2i(-200));
        assert_eq!(trace.target, "G");
        assert!(trace.check_replay().is_ok());
    }

    #[test]
    fn assert_near_pass_and_fail() {
        let src = "fold O3 A B as m\nassert_near dist(A, m) dist(B, m) 1e-30\n";
        let prog = parse(src).unwrap();
        assert!(interpret(&prog, &StartConfig::unit()).is_ok());

        let src = "fold O3 A B as m\nassert_near dist(A, m) 0.7 1e-3\n";
        let prog = parse(src).unwrap();
        match interpret(&prog, &StartConfig::unit()) {
            Err(Error::AssertFailed { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected assert failure, got {other:?}"),
        }
    }

    #[test]
    fn choose_required_and_branch_unavailable() {
        // the bisector fold of two crossing edges has two solutions
        let src = "fold O4 AB DA as bis\n";
        let prog = parse(src).unwrap();
        match interpret(&prog, &StartConfig::unit()) {
            Err(Error::Script { detail, .. }) => assert!(detail.contains("choose")),
            other => panic!("expected choose error, got {other:?}"),
        }

        // a tangent point-onto-line fold has one crease; choose 3 is out
        let src = "point P = (0.5, 1)\npoint Q = (0.5, 0.5)\nfold O5 P AB Q choose 3 as t\n";
        let prog = parse(src).unwrap();
        match interpret(&prog, &StartConfig::unit()) {
            Err(Error::BranchUnavailable { requested: 3, .. }) => {}
            other => panic!("expected BranchUnavailable, got {other:?}"),
        }

        // the intersection axiom has a unique result
        let src = "fold O1 AB DA choose 1 as P\n";
        let prog = parse(src).unwrap();
        match interpret(&prog, &StartConfig::unit()) {
            Err(Error::BranchUnavailable { requested: 1, .. }) => {}
            other => panic!("expected BranchUnavailable, got {other:?}"),
        }
        let src = "fold O1 AB DA as P\nassert_near P.x 0 1e-40\n";
        let prog = parse(src).unwrap();
        assert!(interpret(&prog, &StartConfig::unit()).is_ok());
    }

    #[test]
    fn pretty_print_round_trip_fixed() {
        let prog = parse(HAGA).unwrap();
        let printed = pretty_print(&prog);
        let again = parse(&printed).unwrap();
        assert!(prog.same_structure(&again));
        // a second print is a fixed point
        assert_eq!(printed, pretty_print(&again));
    }

    #[test]
    fn pretty_print_round_trip_random_programs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let formats = ["{:.3}", "{:.1}", "{}", "{:e}"];
        for _ in 0..100 {
            let mut src = String::new();
            let n_pts = rng.gen_range(2..5);
            for i in 0..n_pts {
                let x = rng.gen_range(-4.0..4.0_f64);
                let y = rng.gen_range(-4.0..4.0_f64);
                let fmt = formats[rng.gen_range(0..formats.len())];
                let xs = match fmt {
                    "{:.3}" => format!("{x:.3}"),
                    "{:.1}" => format!("{x:.1}"),
                    "{:e}" => format!("{x:e}"),
                    _ => format!("{x}"),
                };
                let ys = format!("{y:.4}");
                src.push_str(&format!("point P{i} = ({xs}, {ys})\n"));
            }
            for i in 0..rng.gen_range(1..4) {
                let a = rng.gen_range(0..n_pts);
                let mut b = rng.gen_range(0..n_pts);
                if b == a {
                    b = (b + 1) % n_pts;
                }
                let ax = if rng.gen_bool(0.5) { "O2" } else { "O3" };
                src.push_str(&format!("fold {ax} P{a} P{b} as f{i}\n"));
            }
            src.push_str("assert_near P0.x P0.x 1e-10\n");
            let prog = match parse(&src) {
                Ok(p) => p,
                Err(e) => panic!("generated program failed to parse: {e}\n{src}"),
            };
            let again = parse(&pretty_print(&prog)).unwrap();
            assert!(prog.same_structure(&again), "round trip failed for\n{src}");
        }
    }

    #[test]
    fn interpretation_is_deterministic() {
        let prog = parse(HAGA).unwrap();
        let start = StartConfig::square(Scalar::from_int(8));
        let t1 = interpret(&prog, &start).unwrap();
        let t2 = interpret(&prog, &start).unwrap();
        assert_eq!(crate::render::emit_json(&t1), crate::render::emit_json(&t2));
    }
}
