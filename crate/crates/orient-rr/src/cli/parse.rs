//! Hand-rolled lexer and recursive-descent parser for the script DSL.
//!
//! Parsing includes name resolution: every referenced name must be
//! declared earlier, names are unique, and declarations are acyclic by
//! construction. Errors carry a line/column and one of four stable codes:
//! `P_SYNTAX`, `P_UNKNOWN_IDENT`, `P_ARITY`, `P_RANGE`.

use std::collections::BTreeMap;

use super::ast::*;
use crate::algebra::rational::Rational;
use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseCode {
    Syntax,
    UnknownIdent,
    Arity,
    Range,
}

impl ParseCode {
    pub fn as_str(&self) -> &'static str {
        match self {
            ParseCode::Syntax => "P_SYNTAX",
            ParseCode::UnknownIdent => "P_UNKNOWN_IDENT",
            ParseCode::Arity => "P_ARITY",
            ParseCode::Range => "P_RANGE",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ParseError {
    pub code: ParseCode,
    pub message: String,
    pub line: u32,
    pub col: u32,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}:{}:{}: {}",
            self.code.as_str(),
            self.line,
            self.col,
            self.message
        )
    }
}

type PResult<T> = Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Punct(&'static str),
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: u32,
    col: u32,
}

fn lex(text: &str) -> PResult<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = 1u32;
    let mut col = 1u32;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        if ch == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if ch == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                col += 1;
            }
            continue;
        }
        let (tline, tcol) = (line, col);
        if ch.is_ascii_alphabetic() || ch == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Token { tok: Tok::Ident(s), line: tline, col: tcol });
            continue;
        }
        if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            let n: i64 = s.parse().map_err(|_| ParseError {
                code: ParseCode::Range,
                message: format!("integer literal `{s}` out of range"),
                line: tline,
                col: tcol,
            })?;
            out.push(Token { tok: Tok::Int(n), line: tline, col: tcol });
            continue;
        }
        let two: String = {
            let mut it = chars.clone();
            let a = it.next().unwrap_or(' ');
            let b = it.next().unwrap_or(' ');
            [a, b].iter().collect()
        };
        if two == "==" {
            chars.next();
            chars.next();
            col += 2;
            out.push(Token { tok: Tok::Punct("=="), line: tline, col: tcol });
            continue;
        }
        let punct = match ch {
            ';' => ";",
            '=' => "=",
            '(' => "(",
            ')' => ")",
            ',' => ",",
            '@' => "@",
            '+' => "+",
            '-' => "-",
            '*' => "*",
            '^' => "^",
            ':' => ":",
            '/' => "/",
            _ => {
                return Err(ParseError {
                    code: ParseCode::Syntax,
                    message: format!("unexpected character `{ch}`"),
                    line: tline,
                    col: tcol,
                })
            }
        };
        chars.next();
        col += 1;
        out.push(Token { tok: Tok::Punct(punct), line: tline, col: tcol });
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum NameKind {
    Space,
    Bundle,
    Embed,
    Orient,
    Pair,
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    names: BTreeMap<String, NameKind>,
}

pub const CHECK_SUBJECTS: &[&str] =
    &["fgl", "pbf", "thom", "classes", "duality", "gysin", "grr", "hrr", "all"];

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, code: ParseCode, message: impl Into<String>) -> PResult<T> {
        let t = self.peek();
        Err(ParseError { code, message: message.into(), line: t.line, col: t.col })
    }

    fn expect_punct(&mut self, p: &'static str) -> PResult<()> {
        if self.peek().tok == Tok::Punct(p) {
            self.next();
            Ok(())
        } else {
            self.err(ParseCode::Syntax, format!("expected `{p}`"))
        }
    }

    fn expect_ident(&mut self) -> PResult<String> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            _ => self.err(ParseCode::Syntax, "expected an identifier"),
        }
    }

    fn expect_nat(&mut self, what: &str) -> PResult<u16> {
        // a '-' before a numeral in a count position is a range error
        if self.peek().tok == Tok::Punct("-") {
            return self.err(ParseCode::Range, format!("{what} must be non-negative"));
        }
        match self.peek().tok {
            Tok::Int(n) if (0..=u16::MAX as i64).contains(&n) => {
                self.next();
                Ok(n as u16)
            }
            Tok::Int(_) => self.err(ParseCode::Range, format!("{what} out of range")),
            _ => self.err(ParseCode::Syntax, format!("expected {what}")),
        }
    }

    fn expect_int(&mut self) -> PResult<i64> {
        let neg = if self.peek().tok == Tok::Punct("-") {
            self.next();
            true
        } else {
            false
        };
        match self.peek().tok {
            Tok::Int(n) => {
                self.next();
                Ok(if neg { -n } else { n })
            }
            _ => self.err(ParseCode::Syntax, "expected an integer"),
        }
    }

    fn resolve(&self, name: &str, kind: NameKind) -> PResult<String> {
        match self.names.get(name) {
            Some(k) if *k == kind => Ok(name.to_string()),
            Some(k) => self.err(
                ParseCode::UnknownIdent,
                format!("`{name}` is declared as a {k:?}, not a {kind:?}"),
            ),
            None => self.err(ParseCode::UnknownIdent, format!("`{name}` is not declared")),
        }
    }

    fn resolve_next(&mut self, kind: NameKind) -> PResult<String> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(s) => {
                let r = self.resolve(&s, kind)?;
                self.next();
                Ok(r)
            }
            _ => self.err(ParseCode::Syntax, "expected a declared name"),
        }
    }

    fn declare(&mut self, name: &str, kind: NameKind) -> PResult<()> {
        if self.names.contains_key(name) {
            return self.err(
                ParseCode::Syntax,
                format!("name `{name}` is already declared"),
            );
        }
        self.names.insert(name.to_string(), kind);
        Ok(())
    }

    fn script(&mut self) -> PResult<Script> {
        let mut items = Vec::new();
        while self.peek().tok != Tok::Eof {
            items.push(self.item()?);
        }
        Ok(Script { items })
    }

    fn item(&mut self) -> PResult<Item> {
        let kw = match self.peek().tok.clone() {
            Tok::Ident(s) => s,
            _ => return self.err(ParseCode::Syntax, "expected a declaration or command"),
        };
        let item = match kw.as_str() {
            "theory" => {
                self.next();
                let name = self.expect_ident()?;
                let theory = if name == "universal" {
                    self.expect_punct(":")?;
                    let k = self.expect_nat("universal parameter count")?;
                    if k == 0 || k > 8 {
                        return self.err(ParseCode::Range, "universal:k requires 1 <= k <= 8");
                    }
                    format!("universal:{k}")
                } else if name == "additive" || name == "multiplicative" {
                    name
                } else {
                    return self.err(
                        ParseCode::UnknownIdent,
                        format!("unknown theory `{name}`"),
                    );
                };
                Item::Decl(Decl::Theory(theory))
            }
            "space" => {
                self.next();
                let name = self.expect_ident()?;
                self.expect_punct("=")?;
                let expr = self.space_expr()?;
                self.declare(&name, NameKind::Space)?;
                Item::Decl(Decl::Space { name, expr })
            }
            "bundle" => {
                self.next();
                let name = self.expect_ident()?;
                self.expect_punct("=")?;
                let expr = self.bundle_expr()?;
                self.declare(&name, NameKind::Bundle)?;
                Item::Decl(Decl::Bundle { name, expr })
            }
            "embed" => {
                self.next();
                let name = self.expect_ident()?;
                self.expect_punct("=")?;
                let expr = self.embed_expr()?;
                self.declare(&name, NameKind::Embed)?;
                Item::Decl(Decl::Embed { name, expr })
            }
            "orient" => {
                self.next();
                let name = self.expect_ident()?;
                self.expect_punct("=")?;
                let which = self.expect_ident()?;
                let native = match which.as_str() {
                    "native" => true,
                    "identity" => false,
                    _ => {
                        return self.err(
                            ParseCode::UnknownIdent,
                            "orientations are `identity` or `native`",
                        )
                    }
                };
                self.declare(&name, NameKind::Orient)?;
                Item::Decl(Decl::Orient { name, native })
            }
            "pair" => {
                self.next();
                let name = self.expect_ident()?;
                self.expect_punct("=")?;
                self.expect_punct("(")?;
                let first = self.resolve_next(NameKind::Orient)?;
                self.expect_punct(",")?;
                let second = self.resolve_next(NameKind::Orient)?;
                self.expect_punct(")")?;
                self.declare(&name, NameKind::Pair)?;
                Item::Decl(Decl::Pair { name, first, second })
            }
            "eval" => {
                self.next();
                Item::Cmd(Cmd::Eval(self.class_expr()?))
            }
            "push" | "pull" => {
                self.next();
                let morphism = self.morphism_name()?;
                let expr = self.class_expr()?;
                Item::Cmd(if kw == "push" {
                    Cmd::Push { morphism, expr }
                } else {
                    Cmd::Pull { morphism, expr }
                })
            }
            "assert" => {
                self.next();
                let lhs = self.class_expr()?;
                self.expect_punct("==")?;
                let rhs = self.class_expr()?;
                Item::Cmd(Cmd::Assert { lhs, rhs })
            }
            "check" => {
                self.next();
                let subject = self.expect_ident()?;
                if !CHECK_SUBJECTS.contains(&subject.as_str()) {
                    return self.err(
                        ParseCode::UnknownIdent,
                        format!(
                            "unknown check `{subject}`; expected one of {}",
                            CHECK_SUBJECTS.join(", ")
                        ),
                    );
                }
                Item::Cmd(Cmd::Check { subject })
            }
            other => {
                return self.err(
                    ParseCode::Syntax,
                    format!("unknown declaration or command `{other}`"),
                )
            }
        };
        self.expect_punct(";")?;
        Ok(item)
    }

    /// `push`/`pull` act along an embedding or a projective-bundle space.
    fn morphism_name(&mut self) -> PResult<String> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(s) => match self.names.get(&s) {
                Some(NameKind::Embed) | Some(NameKind::Space) => {
                    self.next();
                    Ok(s)
                }
                Some(_) => self.err(
                    ParseCode::UnknownIdent,
                    format!("`{s}` is neither an embedding nor a space"),
                ),
                None => self.err(ParseCode::UnknownIdent, format!("`{s}` is not declared")),
            },
            _ => self.err(ParseCode::Syntax, "expected an embedding or space name"),
        }
    }

    fn space_expr(&mut self) -> PResult<SpaceExpr> {
        let kw = self.expect_ident()?;
        match kw.as_str() {
            "proj" => {
                let n = self.expect_nat("projective dimension")?;
                Ok(SpaceExpr::Proj(n))
            }
            "projbundle" => {
                self.expect_punct("(")?;
                let base = self.resolve_next(NameKind::Space)?;
                self.expect_punct(",")?;
                let bundle = self.resolve_next(NameKind::Bundle)?;
                self.expect_punct(")")?;
                Ok(SpaceExpr::ProjBundle { base, bundle })
            }
            "completion" => {
                self.expect_punct("(")?;
                let bundle = self.resolve_next(NameKind::Bundle)?;
                self.expect_punct(")")?;
                Ok(SpaceExpr::Completion { bundle })
            }
            "kunneth" => {
                self.expect_punct("(")?;
                let proj = self.resolve_next(NameKind::Space)?;
                self.expect_punct(")")?;
                Ok(SpaceExpr::Kunneth { proj })
            }
            other => self.err(
                ParseCode::UnknownIdent,
                format!("unknown space constructor `{other}`"),
            ),
        }
    }

    fn bundle_expr(&mut self) -> PResult<BundleExpr> {
        let kw = match self.peek().tok.clone() {
            Tok::Ident(s) => s,
            _ => return self.err(ParseCode::Syntax, "expected a bundle expression"),
        };
        match kw.as_str() {
            "trivial" => {
                self.next();
                self.expect_punct("(")?;
                let rank = self.expect_nat("bundle rank")?;
                self.expect_punct(")")?;
                self.expect_punct("@")?;
                let space = self.resolve_next(NameKind::Space)?;
                Ok(BundleExpr::Trivial { rank, space })
            }
            "O" | "o" => {
                self.next();
                self.expect_punct("(")?;
                let d = self.expect_int()?;
                self.expect_punct(")")?;
                self.expect_punct("@")?;
                let space = self.resolve_next(NameKind::Space)?;
                Ok(BundleExpr::OLine { d, space })
            }
            "roots" => {
                self.next();
                self.expect_punct("(")?;
                let mut roots = Vec::new();
                if self.peek().tok != Tok::Punct(")") {
                    loop {
                        roots.push(self.class_expr()?);
                        if self.peek().tok == Tok::Punct(",") {
                            self.next();
                        } else {
                            break;
                        }
                    }
                }
                self.expect_punct(")")?;
                self.expect_punct("@")?;
                let space = self.resolve_next(NameKind::Space)?;
                Ok(BundleExpr::Roots { roots, space })
            }
            "sum" | "tensor" => {
                self.next();
                self.expect_punct("(")?;
                let a = self.bundle_expr()?;
                if self.peek().tok == Tok::Punct(")") {
                    return self.err(ParseCode::Arity, format!("`{kw}` expects two bundles"));
                }
                self.expect_punct(",")?;
                let b = self.bundle_expr()?;
                self.expect_punct(")")?;
                Ok(if kw == "sum" {
                    BundleExpr::Sum(Box::new(a), Box::new(b))
                } else {
                    BundleExpr::Tensor(Box::new(a), Box::new(b))
                })
            }
            "dual" => {
                self.next();
                self.expect_punct("(")?;
                let a = self.bundle_expr()?;
                if self.peek().tok == Tok::Punct(",") {
                    return self.err(ParseCode::Arity, "`dual` expects one bundle");
                }
                self.expect_punct(")")?;
                Ok(BundleExpr::Dual(Box::new(a)))
            }
            "quotient" => {
                self.next();
                self.expect_punct("(")?;
                let space = self.resolve_next(NameKind::Space)?;
                self.expect_punct(")")?;
                Ok(BundleExpr::Quotient { space })
            }
            "tangent" => {
                self.next();
                self.expect_punct("(")?;
                let space = self.resolve_next(NameKind::Space)?;
                self.expect_punct(")")?;
                Ok(BundleExpr::Tangent { space })
            }
            _ => {
                let name = self.resolve_next(NameKind::Bundle)?;
                Ok(BundleExpr::Named(name))
            }
        }
    }

    fn embed_expr(&mut self) -> PResult<EmbedExpr> {
        let kw = self.expect_ident()?;
        match kw.as_str() {
            "zerosection" => {
                self.expect_punct("(")?;
                let bundle = self.bundle_expr()?;
                if self.peek().tok == Tok::Punct(")") {
                    return self.err(
                        ParseCode::Arity,
                        "`zerosection` expects a bundle and its completion space",
                    );
                }
                self.expect_punct(",")?;
                let total = self.resolve_next(NameKind::Space)?;
                self.expect_punct(")")?;
                Ok(EmbedExpr::ZeroSection { bundle, total })
            }
            "linear" => {
                self.expect_punct("(")?;
                let source = self.resolve_next(NameKind::Space)?;
                self.expect_punct(",")?;
                let target = self.resolve_next(NameKind::Space)?;
                self.expect_punct(")")?;
                Ok(EmbedExpr::Linear { source, target })
            }
            "diagonal" => {
                self.expect_punct("(")?;
                let proj = self.resolve_next(NameKind::Space)?;
                self.expect_punct(",")?;
                let square = self.resolve_next(NameKind::Space)?;
                self.expect_punct(")")?;
                Ok(EmbedExpr::Diagonal { proj, square })
            }
            "identity" => {
                self.expect_punct("(")?;
                let space = self.resolve_next(NameKind::Space)?;
                self.expect_punct(")")?;
                Ok(EmbedExpr::Identity { space })
            }
            other => self.err(
                ParseCode::UnknownIdent,
                format!("unknown embedding constructor `{other}`"),
            ),
        }
    }

    fn class_expr(&mut self) -> PResult<ClassExpr> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Punct("+") => {
                    self.next();
                    let rhs = self.term()?;
                    acc = ClassExpr::Add(Box::new(acc), Box::new(rhs));
                }
                Tok::Punct("-") => {
                    self.next();
                    let rhs = self.term()?;
                    acc = ClassExpr::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<ClassExpr> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Punct("*") {
            self.next();
            let rhs = self.factor()?;
            acc = ClassExpr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> PResult<ClassExpr> {
        let base = self.atom()?;
        if self.peek().tok == Tok::Punct("^") {
            self.next();
            let n = self.expect_nat("exponent")?;
            return Ok(ClassExpr::Pow(Box::new(base), n as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<ClassExpr> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Punct("-") => {
                self.next();
                let inner = self.factor()?;
                Ok(ClassExpr::Neg(Box::new(inner)))
            }
            Tok::Punct("(") => {
                self.next();
                let inner = self.class_expr()?;
                self.expect_punct(")")?;
                Ok(inner)
            }
            Tok::Int(n) => {
                self.next();
                if self.peek().tok == Tok::Punct("/") {
                    self.next();
                    let d = match self.peek().tok {
                        Tok::Int(d) if d > 0 => {
                            self.next();
                            d
                        }
                        Tok::Int(_) => {
                            return self.err(ParseCode::Range, "denominator must be positive")
                        }
                        _ => return self.err(ParseCode::Syntax, "expected a denominator"),
                    };
                    return Ok(ClassExpr::Rational(Rational::new(
                        BigInt::from(n),
                        BigInt::from(d),
                    )));
                }
                Ok(ClassExpr::Rational(Rational::from_integer(BigInt::from(n))))
            }
            Tok::Ident(name) => match name.as_str() {
                "h" => {
                    self.next();
                    self.expect_punct("@")?;
                    let space = self.resolve_next(NameKind::Space)?;
                    Ok(ClassExpr::Hyperplane { space })
                }
                "chern" => {
                    self.next();
                    self.expect_punct("(")?;
                    let i = self.expect_nat("Chern index")?;
                    if self.peek().tok == Tok::Punct(")") {
                        return self.err(ParseCode::Arity, "`chern` expects an index and a bundle");
                    }
                    self.expect_punct(",")?;
                    let bundle = self.bundle_expr()?;
                    self.expect_punct(")")?;
                    Ok(ClassExpr::Chern { i: i as u32, bundle: Box::new(bundle) })
                }
                "c1" => {
                    self.next();
                    self.expect_punct("(")?;
                    let bundle = self.bundle_expr()?;
                    self.expect_punct(")")?;
                    Ok(ClassExpr::C1 { bundle: Box::new(bundle) })
                }
                "c1tensor" => {
                    self.next();
                    self.expect_punct("(")?;
                    let l1 = self.bundle_expr()?;
                    if self.peek().tok == Tok::Punct(")") {
                        return self.err(ParseCode::Arity, "`c1tensor` expects two line bundles");
                    }
                    self.expect_punct(",")?;
                    let l2 = self.bundle_expr()?;
                    self.expect_punct(")")?;
                    Ok(ClassExpr::C1Tensor { l1: Box::new(l1), l2: Box::new(l2) })
                }
                "euler" => {
                    self.next();
                    self.expect_punct("(")?;
                    let bundle = self.bundle_expr()?;
                    self.expect_punct(")")?;
                    Ok(ClassExpr::Euler { bundle: Box::new(bundle) })
                }
                "thom" => {
                    self.next();
                    self.expect_punct("(")?;
                    let bundle = self.bundle_expr()?;
                    if self.peek().tok == Tok::Punct(")") {
                        return self.err(
                            ParseCode::Arity,
                            "`thom` expects a bundle and its completion space",
                        );
                    }
                    self.expect_punct(",")?;
                    let total = self.resolve_next(NameKind::Space)?;
                    self.expect_punct(")")?;
                    Ok(ClassExpr::Thom { bundle: Box::new(bundle), total })
                }
                "todd" => {
                    self.next();
                    self.expect_punct("(")?;
                    let pair = self.resolve_next(NameKind::Pair)?;
                    if self.peek().tok == Tok::Punct(")") {
                        return self.err(
                            ParseCode::Arity,
                            "`todd` expects a pair and one or two bundles",
                        );
                    }
                    self.expect_punct(",")?;
                    let plus = self.bundle_expr()?;
                    let minus = if self.peek().tok == Tok::Punct(",") {
                        self.next();
                        Some(Box::new(self.bundle_expr()?))
                    } else {
                        None
                    };
                    self.expect_punct(")")?;
                    Ok(ClassExpr::Todd { pair, plus: Box::new(plus), minus })
                }
                "push" | "pull" => {
                    self.next();
                    self.expect_punct("(")?;
                    let morphism = self.morphism_name()?;
                    self.expect_punct(",")?;
                    let expr = self.class_expr()?;
                    self.expect_punct(")")?;
                    Ok(if name == "push" {
                        ClassExpr::Push { morphism, expr: Box::new(expr) }
                    } else {
                        ClassExpr::Pull { morphism, expr: Box::new(expr) }
                    })
                }
                "beta" => {
                    self.next();
                    Ok(ClassExpr::Symbol(name))
                }
                _ if name.starts_with('b')
                    && name.len() > 1
                    && name[1..].chars().all(|c| c.is_ascii_digit()) =>
                {
                    self.next();
                    Ok(ClassExpr::Symbol(name))
                }
                other => self.err(
                    ParseCode::UnknownIdent,
                    format!("`{other}` is not a class expression"),
                ),
            },
            _ => self.err(ParseCode::Syntax, "expected a class expression"),
        }
    }
}

/// Parse and name-resolve a script.
pub fn parse(text: &str) -> PResult<Script> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, names: BTreeMap::new() };
    p.script()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_basic_script() {
        let s = parse("theory multiplicative; space P2 = proj 2; eval chern(1, O(1)@P2);")
            .unwrap();
        assert_eq!(s.items.len(), 3);
        assert!(matches!(&s.items[2], Item::Cmd(Cmd::Eval(ClassExpr::Chern { i: 1, .. }))));
    }

    #[test]
    fn negative_dimension_is_a_range_error() {
        let e = parse("space X = proj -1;").unwrap_err();
        assert_eq!(e.code, ParseCode::Range);
        assert_eq!(e.line, 1);
    }

    #[test]
    fn undeclared_name_is_unknown_ident() {
        let e = parse("eval chern(1, E);").unwrap_err();
        assert_eq!(e.code, ParseCode::UnknownIdent);
    }

    #[test]
    fn missing_argument_is_arity_error() {
        let e = parse("space P1 = proj 1; eval chern(1);").unwrap_err();
        assert_eq!(e.code, ParseCode::Arity);
    }

    #[test]
    fn wrong_kind_reference_is_rejected() {
        let e = parse("space P1 = proj 1; eval c1(P1);").unwrap_err();
        assert_eq!(e.code, ParseCode::UnknownIdent);
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let e = parse("space X = proj 1; space X = proj 2;").unwrap_err();
        assert_eq!(e.code, ParseCode::Syntax);
    }

    #[test]
    fn comments_and_rationals() {
        let s = parse("# a comment\nspace P1 = proj 1;\neval 3/2 * h@P1; # trailing\n").unwrap();
        match &s.items[1] {
            Item::Cmd(Cmd::Eval(ClassExpr::Mul(a, _))) => {
                assert_eq!(
                    **a,
                    ClassExpr::Rational(crate::algebra::rational::rat(3, 2))
                );
            }
            other => panic!("unexpected parse: {other:?}"),
        }
    }

    #[test]
    fn print_parse_fixpoint() {
        let src = "theory universal:2;\nspace P1 = proj 1;\nspace P2 = proj 2;\nbundle E = sum(O(1)@P1, trivial(1)@P1);\nbundle F = dual(E);\nspace PE = projbundle(P1, E);\nspace PB = completion(E);\nembed i = zerosection(E, PB);\nembed j = linear(P1, P2);\norient o1 = native;\norient o2 = identity;\npair ph = (o1, o2);\neval chern(1, F) + 2 * h@P1;\neval todd(ph, E, F);\neval -h@P2 * (h@P2 - 3) ^ 2;\npush i h@P1;\npull PE h@P1;\nassert h@P1 * h@P1 == 0;\ncheck fgl;\n";
        let ast1 = parse(src).unwrap();
        let printed = ast1.to_string();
        let ast2 = parse(&printed).unwrap();
        assert_eq!(ast1, ast2);
        // printing is idempotent
        assert_eq!(printed, ast2.to_string());
    }
}
