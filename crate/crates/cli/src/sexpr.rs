//! Text and JSON forms of terms.
//!
//! Text is the s-expression printed by `SpaceExpr`'s `Display`:
//! `(wedge (sphere 3) (loop (sphere 2)))`. The JSON mirror writes each node
//! as `{"op": "...", "args": [...]}`; atoms carry `name` and the optional
//! `series`, `loop_series` and `suspension` keys instead of `args`.

use polyloop_core::{Atom, SpaceExpr};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Word(String),
}

fn tokenize(text: &str) -> Vec<Tok> {
    let mut out = Vec::new();
    let mut word = String::new();
    for c in text.chars() {
        if c == '(' || c == ')' || c.is_whitespace() {
            if !word.is_empty() {
                out.push(Tok::Word(std::mem::take(&mut word)));
            }
            match c {
                '(' => out.push(Tok::Open),
                ')' => out.push(Tok::Close),
                _ => {}
            }
        } else {
            word.push(c);
        }
    }
    if !word.is_empty() {
        out.push(Tok::Word(word));
    }
    out
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expect_close(&mut self) -> CliResult<()> {
        match self.next() {
            Some(Tok::Close) => Ok(()),
            other => Err(invalid(format!("expected ')', found {other:?}"))),
        }
    }

    fn word(&mut self) -> CliResult<String> {
        match self.next() {
            Some(Tok::Word(w)) => Ok(w),
            other => Err(invalid(format!("expected a word, found {other:?}"))),
        }
    }

    fn terms_until_close(&mut self) -> CliResult<Vec<SpaceExpr>> {
        let mut xs = Vec::new();
        while self.peek() != Some(&Tok::Close) {
            xs.push(self.term()?);
        }
        self.expect_close()?;
        Ok(xs)
    }

    fn numbers_until_close(&mut self) -> CliResult<Vec<i128>> {
        let mut xs = Vec::new();
        while self.peek() != Some(&Tok::Close) {
            let w = self.word()?;
            xs.push(w.parse().map_err(|_| invalid(format!("bad coefficient {w}")))?);
        }
        self.expect_close()?;
        Ok(xs)
    }

    fn atom(&mut self) -> CliResult<SpaceExpr> {
        let mut atom = Atom::new(self.word()?);
        loop {
            match self.next() {
                Some(Tok::Close) => return Ok(SpaceExpr::atom(atom)),
                Some(Tok::Word(w)) if w == "suspension" => atom = atom.as_suspension(),
                Some(Tok::Open) => {
                    let tag = self.word()?;
                    let cs = self.numbers_until_close()?;
                    atom = match tag.as_str() {
                        "series" => atom.with_series(cs)?,
                        "loop-series" => atom.with_loop_series(cs)?,
                        _ => return Err(invalid(format!("unknown atom option {tag}"))),
                    };
                }
                other => return Err(invalid(format!("unexpected {other:?} in atom"))),
            }
        }
    }

    fn term(&mut self) -> CliResult<SpaceExpr> {
        match self.next() {
            Some(Tok::Open) => {}
            other => return Err(invalid(format!("expected '(', found {other:?}"))),
        }
        let head = self.word()?;
        let one = |p: &mut Parser| -> CliResult<SpaceExpr> {
            let x = p.term()?;
            p.expect_close()?;
            Ok(x)
        };
        let two = |p: &mut Parser| -> CliResult<(SpaceExpr, SpaceExpr)> {
            let a = p.term()?;
            let b = p.term()?;
            p.expect_close()?;
            Ok((a, b))
        };
        Ok(match head.as_str() {
            "point" => {
                self.expect_close()?;
                SpaceExpr::Point
            }
            "sphere" => {
                let w = self.word()?;
                let d: u32 = w.parse().map_err(|_| invalid(format!("bad dimension {w}")))?;
                if d == 0 {
                    return Err(invalid("sphere dimension must be at least 1"));
                }
                self.expect_close()?;
                SpaceExpr::Sphere(d)
            }
            "atom" => self.atom()?,
            "wedge" => SpaceExpr::Wedge(self.terms_until_close()?),
            "prod" => SpaceExpr::Prod(self.terms_until_close()?),
            "smash" => SpaceExpr::Smash(self.terms_until_close()?),
            "susp" => SpaceExpr::susp(one(self)?),
            "loop" => SpaceExpr::loop_of(one(self)?),
            "cone" => SpaceExpr::cone(one(self)?),
            "join" => {
                let (a, b) = two(self)?;
                SpaceExpr::join(a, b)
            }
            "rhalfsmash" => {
                let (a, b) = two(self)?;
                SpaceExpr::half_smash(a, b)
            }
            other => return Err(invalid(format!("unknown constructor {other}"))),
        })
    }
}

/// Parses the s-expression form of a term.
pub fn parse(text: &str) -> CliResult<SpaceExpr> {
    let mut p = Parser { toks: tokenize(text), pos: 0 };
    let e = p.term()?;
    if p.pos != p.toks.len() {
        return Err(invalid("trailing input after term"));
    }
    Ok(e)
}

/// The JSON mirror of a term.
pub fn to_json(e: &SpaceExpr) -> Value {
    let node = |op: &str, args: Vec<Value>| json!({ "op": op, "args": args });
    let many = |xs: &[SpaceExpr]| xs.iter().map(to_json).collect::<Vec<_>>();
    match e {
        SpaceExpr::Point => node("point", vec![]),
        SpaceExpr::Sphere(d) => node("sphere", vec![json!(d)]),
        SpaceExpr::Atom(a) => {
            let mut v = json!({ "op": "atom", "name": a.name() });
            if let Some(s) = a.series() {
                v["series"] = json!(s);
            }
            if let Some(s) = a.loop_series() {
                v["loop_series"] = json!(s);
            }
            if a.is_suspension() {
                v["suspension"] = json!(true);
            }
            v
        }
        SpaceExpr::Wedge(xs) => node("wedge", many(xs)),
        SpaceExpr::Prod(xs) => node("prod", many(xs)),
        SpaceExpr::Smash(xs) => node("smash", many(xs)),
        SpaceExpr::Susp(x) => node("susp", vec![to_json(x)]),
        SpaceExpr::Loop(x) => node("loop", vec![to_json(x)]),
        SpaceExpr::Cone(x) => node("cone", vec![to_json(x)]),
        SpaceExpr::Join(a, b) => node("join", vec![to_json(a), to_json(b)]),
        SpaceExpr::RHalfSmash(a, b) => node("rhalfsmash", vec![to_json(a), to_json(b)]),
    }
}

fn coeffs(v: &Value, key: &str) -> CliResult<Option<Vec<i128>>> {
    match v.get(key) {
        None => Ok(None),
        Some(list) => serde_json::from_value(list.clone())
            .map(Some)
            .map_err(|e| invalid(format!("{key}: {e}"))),
    }
}

/// Reads the JSON mirror of a term.
pub fn from_json(v: &Value) -> CliResult<SpaceExpr> {
    let op = v.get("op").and_then(Value::as_str).ok_or_else(|| invalid("node without \"op\""))?;
    if op == "atom" {
        let name = v.get("name").and_then(Value::as_str).ok_or_else(|| invalid("atom without name"))?;
        let mut atom = Atom::new(name);
        if let Some(s) = coeffs(v, "series")? {
            atom = atom.with_series(s)?;
        }
        if let Some(s) = coeffs(v, "loop_series")? {
            atom = atom.with_loop_series(s)?;
        }
        if v.get("suspension").and_then(Value::as_bool) == Some(true) {
            atom = atom.as_suspension();
        }
        return Ok(SpaceExpr::atom(atom));
    }
    let args = match v.get("args") {
        Some(Value::Array(a)) => a.as_slice(),
        None => &[],
        Some(_) => return Err(invalid("\"args\" must be a list")),
    };
    let terms = || args.iter().map(from_json).collect::<CliResult<Vec<_>>>();
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(invalid(format!("{op} takes {n} argument(s), got {}", args.len())))
        }
    };
    Ok(match op {
        "point" => SpaceExpr::Point,
        "sphere" => {
            arity(1)?;
            match args[0].as_u64() {
                Some(d) if d >= 1 && d <= u64::from(u32::MAX) => SpaceExpr::Sphere(d as u32),
                _ => return Err(invalid("sphere dimension must be a positive integer")),
            }
        }
        "wedge" => SpaceExpr::Wedge(terms()?),
        "prod" => SpaceExpr::Prod(terms()?),
        "smash" => SpaceExpr::Smash(terms()?),
        "susp" | "loop" | "cone" => {
            arity(1)?;
            let x = from_json(&args[0])?;
            match op {
                "susp" => SpaceExpr::susp(x),
                "loop" => SpaceExpr::loop_of(x),
                _ => SpaceExpr::cone(x),
            }
        }
        "join" | "rhalfsmash" => {
            arity(2)?;
            let (a, b) = (from_json(&args[0])?, from_json(&args[1])?);
            if op == "join" {
                SpaceExpr::join(a, b)
            } else {
                SpaceExpr::half_smash(a, b)
            }
        }
        other => return Err(invalid(format!("unknown op {other}"))),
    })
}

/// Accepts either form: JSON when the text starts with `{`.
pub fn parse_any(text: &str) -> CliResult<SpaceExpr> {
    let t = text.trim();
    if t.starts_with('{') {
        from_json(&serde_json::from_str(t)?)
    } else {
        parse(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for text in [
            "(wedge (sphere 3) (loop (sphere 2)))",
            "(prod (point) (cone (sphere 1)) (join (sphere 1) (susp (sphere 2))))",
            "(rhalfsmash (atom C suspension) (smash (sphere 1) (atom X (series 1 0 2))))",
            "(atom CP_inf (loop-series 1 1))",
        ] {
            let e = parse(text).unwrap();
            assert_eq!(e.to_string(), text);
            assert_eq!(from_json(&to_json(&e)).unwrap(), e);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        for text in ["(sphere 0)", "(wedge (sphere 2)", "(loop)", "(frob)", "(sphere 2) x", "(atom X (series 2))"] {
            assert!(parse(text).is_err(), "{text}");
        }
        assert!(from_json(&json!({"op": "join", "args": [{"op": "point"}]})).is_err());
    }

    #[test]
    fn json_shape() {
        let e = parse("(loop (sphere 2))").unwrap();
        assert_eq!(to_json(&e), json!({"op": "loop", "args": [{"op": "sphere", "args": [2]}]}));
        assert_eq!(parse_any(r#"{"op":"sphere","args":[4]}"#).unwrap(), SpaceExpr::Sphere(4));
    }
}
