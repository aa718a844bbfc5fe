//! Parser and renderer for the expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | symbol | blade | call | '(' expr ')'
//! symbol := ident ('[' integer (',' integer)? ']')?
//! blade  := 'Id' | 'e' digits ('^' 'e' digits)*
//! call   := name ('[' ident ']')? '(' expr (',' expr)* (',' integer)? ')'
//! ```
//!
//! A bare integer in last argument position is a slot index.

use std::fmt;

use gebra_core::Sym;
use num_bigint::BigInt;
use thiserror::Error;

/// Call vocabulary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Func {
    Wedge,
    Cmul,
    Lc,
    Ev,
    Gco,
    Cco,
    Gantipode,
    Gradeinv,
    Sp,
    Vectorpart,
    Switch,
    Gswitch,
    T,
}

impl Func {
    pub const ALL: [Func; 13] = [
        Func::Wedge,
        Func::Cmul,
        Func::Lc,
        Func::Ev,
        Func::Gco,
        Func::Cco,
        Func::Gantipode,
        Func::Gradeinv,
        Func::Sp,
        Func::Vectorpart,
        Func::Switch,
        Func::Gswitch,
        Func::T,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Wedge => "wedge",
            Func::Cmul => "cmul",
            Func::Lc => "lc",
            Func::Ev => "ev",
            Func::Gco => "gco",
            Func::Cco => "cco",
            Func::Gantipode => "gantipode",
            Func::Gradeinv => "gradeinv",
            Func::Sp => "sp",
            Func::Vectorpart => "vectorpart",
            Func::Switch => "switch",
            Func::Gswitch => "gswitch",
            Func::T => "t",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(BigInt),
    Symbol(Sym),
    /// Generator indices as written; empty for `Id`.
    Blade(Vec<usize>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call {
        func: Func,
        form: Option<String>,
        args: Vec<Expr>,
        slot: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message} (expected {})", expected.join(" | "))]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Punct(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "'{n}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Punct(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((Tok::Num(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
        } else if "+-*/^()[],=".contains(c) {
            out.push((Tok::Punct(c), i));
            i += 1;
        } else {
            let ch = src[i..].chars().next().expect("in bounds");
            return Err(ParseError {
                offset: i,
                message: format!("unexpected character '{ch}'"),
                expected: vec!["expression".into()],
            });
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

/// `Some(k)` for identifiers of the form `e<k>`.
fn generator_index(s: &str) -> Option<usize> {
    let digits = s.strip_prefix('e')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn looks_like_blade(s: &str) -> bool {
    s.len() > 1 && s.starts_with('e') && s.as_bytes()[1].is_ascii_digit()
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            message: format!("unexpected {}", self.peek()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&[&format!("'{c}'")])
        }
    }

    fn small_int<T: TryFrom<u64>>(&mut self, what: &str) -> Result<T, ParseError> {
        let at = self.offset();
        let Tok::Num(n) = self.peek().clone() else {
            return self.fail(&[what]);
        };
        self.bump();
        u64::try_from(&n)
            .ok()
            .and_then(|v| T::try_from(v).ok())
            .ok_or_else(|| ParseError {
                offset: at,
                message: format!("{what} {n} is too large"),
                expected: vec![what.into()],
            })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let (base, is_blade) = self.atom()?;
        if !is_blade && self.eat('^') {
            let e = self.small_int::<u32>("exponent")?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    /// Parses an atom; the flag marks a bare blade, whose `^` is the wedge.
    fn atom(&mut self) -> Result<(Expr, bool), ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok((Expr::Number(n), false))
            }
            Tok::Punct('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok((e, false))
            }
            Tok::Ident(name) => {
                self.bump();
                self.after_ident(name, at)
            }
            _ => self.fail(&["number", "symbol", "blade", "call", "'('", "'-'"]),
        }
    }

    fn after_ident(&mut self, name: String, at: usize) -> Result<(Expr, bool), ParseError> {
        if name == "Id" {
            return Ok((Expr::Blade(Vec::new()), true));
        }
        if let Some(k) = generator_index(&name) {
            let mut idx = vec![k];
            while *self.peek() == Tok::Punct('^') {
                self.bump();
                match self.peek() {
                    Tok::Ident(s) if generator_index(s).is_some() => {
                        idx.push(generator_index(s).expect("checked"));
                        self.bump();
                    }
                    other => {
                        return Err(ParseError {
                            offset: self.offset(),
                            message: format!("unexpected {other} after '^' in a blade"),
                            expected: vec!["generator 'e<digits>'".into()],
                        });
                    }
                }
            }
            return Ok((Expr::Blade(idx), true));
        }
        if looks_like_blade(&name) {
            return Err(ParseError {
                offset: at,
                message: format!("'{name}' is not blade syntax; join generators with '^' as in e1^e2"),
                expected: vec!["blade".into()],
            });
        }
        let func = Func::from_name(&name);
        match (self.peek().clone(), self.peek_at(1).clone()) {
            (Tok::Punct('['), Tok::Num(_)) => {
                self.bump();
                let mut idx = vec![self.small_int::<u32>("index")?];
                if self.eat(',') {
                    idx.push(self.small_int::<u32>("index")?);
                }
                self.expect(']')?;
                Ok((Expr::Symbol(Sym::indexed(&name, &idx)), false))
            }
            (Tok::Punct('['), _) | (Tok::Punct('('), _) => {
                let Some(func) = func else {
                    return Err(ParseError {
                        offset: at,
                        message: format!("unknown function '{name}'"),
                        expected: Func::ALL.iter().map(|f| f.name().to_string()).collect(),
                    });
                };
                let form = if self.eat('[') {
                    let Tok::Ident(tag) = self.peek().clone() else {
                        return Err(ParseError {
                            offset: self.offset(),
                            message: format!("unexpected {} in form tag", self.peek()),
                            expected: vec!["form name".into()],
                        });
                    };
                    self.bump();
                    self.expect(']')?;
                    Some(tag)
                } else {
                    None
                };
                self.expect('(')?;
                let (args, slot) = self.arguments()?;
                Ok((Expr::Call { func, form, args, slot }, false))
            }
            _ => Ok((Expr::Symbol(Sym::new(&name)), false)),
        }
    }

    fn arguments(&mut self) -> Result<(Vec<Expr>, Option<usize>), ParseError> {
        let mut args = vec![self.expr()?];
        let mut slot = None;
        while self.eat(',') {
            if matches!(self.peek(), Tok::Num(_)) && *self.peek_at(1) == Tok::Punct(')') {
                slot = Some(self.small_int::<usize>("slot")?);
                break;
            }
            args.push(self.expr()?);
        }
        if *self.peek() != Tok::Punct(')') {
            return self.fail(&["','", "')'"]);
        }
        self.bump();
        Ok((args, slot))
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.fail(&["operator", "end of input"])
        }
    }
}

fn parser(src: &str) -> Result<Parser, ParseError> {
    Ok(Parser { toks: lex(src)?, pos: 0 })
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = parser(src)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Comma-separated expressions, as in a matrix row.
pub fn parse_list(src: &str) -> Result<Vec<Expr>, ParseError> {
    let mut p = parser(src)?;
    let mut out = vec![p.expr()?];
    while p.eat(',') {
        out.push(p.expr()?);
    }
    p.finish()?;
    Ok(out)
}

/// `sym = expr` pairs separated by commas.
pub fn parse_bindings(src: &str) -> Result<Vec<(Sym, Expr)>, ParseError> {
    let mut p = parser(src)?;
    let mut out = Vec::new();
    loop {
        let at = p.offset();
        let sym = match p.atom()? {
            (Expr::Symbol(s), _) => s,
            _ => {
                return Err(ParseError {
                    offset: at,
                    message: "left side of a binding must be a symbol".into(),
                    expected: vec!["symbol".into()],
                })
            }
        };
        p.expect('=')?;
        out.push((sym, p.expr()?));
        if !p.eat(',') {
            break;
        }
    }
    p.finish()?;
    Ok(out)
}

/// Binding strength used to decide where parentheses are needed.
fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(..) => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn wrap(e: &Expr, min: u8) -> String {
    if prec(e) < min {
        format!("({})", render(e))
    } else {
        render(e)
    }
}

pub fn render(e: &Expr) -> String {
    match e {
        Expr::Number(n) => n.to_string(),
        Expr::Symbol(s) => s.to_string(),
        Expr::Blade(idx) if idx.is_empty() => "Id".into(),
        Expr::Blade(idx) => idx.iter().map(|i| format!("e{i}")).collect::<Vec<_>>().join("^"),
        Expr::Neg(x) => format!("-{}", wrap(x, 3)),
        Expr::Add(a, b) => format!("{} + {}", wrap(a, 1), wrap(b, 2)),
        Expr::Sub(a, b) => format!("{} - {}", wrap(a, 1), wrap(b, 2)),
        Expr::Mul(a, b) => format!("{}*{}", wrap(a, 2), wrap(b, 3)),
        Expr::Div(a, b) => format!("{}/{}", wrap(a, 2), wrap(b, 3)),
        Expr::Pow(x, k) => {
            let base = match **x {
                Expr::Number(_) | Expr::Symbol(_) | Expr::Call { .. } => render(x),
                _ => format!("({})", render(x)),
            };
            format!("{base}^{k}")
        }
        Expr::Call { func, form, args, slot } => {
            let mut parts: Vec<String> = args.iter().map(render).collect();
            if let Some(s) = slot {
                parts.push(s.to_string());
            }
            let tag = form.as_ref().map(|t| format!("[{t}]")).unwrap_or_default();
            format!("{}{tag}({})", func.name(), parts.join(", "))
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(func: Func, args: Vec<Expr>, slot: Option<usize>) -> Expr {
        Expr::Call { func, form: None, args, slot }
    }

    #[test]
    fn coproduct_call() {
        assert_eq!(parse("gco(e1^e2)").unwrap(), call(Func::Gco, vec![Expr::Blade(vec![1, 2])], None));
    }

    #[test]
    fn old_blade_names_are_rejected() {
        let err = parse("cmul[B](e1we2, e2^e3)").unwrap_err();
        assert_eq!(err.offset, 8);
        assert!(err.message.contains("e1^e2"), "{}", err.message);
    }

    #[test]
    fn trailing_integer_is_a_slot() {
        let t = Expr::Call {
            func: Func::T,
            form: None,
            args: (1..=4).map(|k| Expr::Blade(vec![k])).collect(),
            slot: None,
        };
        assert_eq!(parse("gswitch(t(e1,e2,e3,e4), 2)").unwrap(), call(Func::Gswitch, vec![t], Some(2)));
    }

    #[test]
    fn form_tags_and_indexed_symbols() {
        let e = parse("cmul[BI](b[1,2]*e1, x[3])").unwrap();
        let Expr::Call { form, args, .. } = e else { panic!() };
        assert_eq!(form.as_deref(), Some("BI"));
        assert_eq!(args[1], Expr::Symbol(Sym::indexed("x", &[3])));
    }

    #[test]
    fn errors_carry_offset_and_expectations() {
        let err = parse("e1 + * e2").unwrap_err();
        assert_eq!(err.offset, 5);
        assert!(err.expected.iter().any(|s| s == "blade"));
        assert_eq!(parse("frob(e1)").unwrap_err().offset, 0);
        assert_eq!(parse("e1^2").unwrap_err().offset, 3);
        assert_eq!(parse("(e1").unwrap_err().expected, vec!["')'".to_string()]);
    }

    #[test]
    fn precedence() {
        assert_eq!(render(&parse("a - (b - c)").unwrap()), "a - (b - c)");
        assert_eq!(render(&parse("a - b - c").unwrap()), "a - b - c");
        assert_eq!(render(&parse("-x^2*y").unwrap()), "-x^2*y");
        assert_eq!(render(&parse("(-x)^2").unwrap()), "(-x)^2");
        assert_eq!(render(&parse("2*(e1 + e2^e3)").unwrap()), "2*(e1 + e2^e3)");
    }

    #[test]
    fn bindings() {
        let b = parse_bindings("b[1,2]=3, p[1,1] = 1/2").unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].0, Sym::indexed("b", &[1, 2]));
        assert!(parse_bindings("e1=2").is_err());
    }
}
