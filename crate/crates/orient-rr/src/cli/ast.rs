//! Script syntax tree and the canonical pretty-printer.
//!
//! Scripts are line-oriented: declarations and commands terminated by `;`,
//! `#` comments to end of line. Class expressions use infix arithmetic;
//! `@space` suffixes disambiguate bundle bases.

use crate::algebra::rational::{render, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct Script {
    pub items: Vec<Item>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Item {
    Decl(Decl),
    Cmd(Cmd),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Decl {
    Theory(String),
    Space { name: String, expr: SpaceExpr },
    Bundle { name: String, expr: BundleExpr },
    Embed { name: String, expr: EmbedExpr },
    Orient { name: String, native: bool },
    Pair { name: String, first: String, second: String },
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpaceExpr {
    Proj(u16),
    ProjBundle { base: String, bundle: String },
    Completion { bundle: String },
    Kunneth { proj: String },
}

#[derive(Debug, Clone, PartialEq)]
pub enum BundleExpr {
    Named(String),
    Trivial { rank: u16, space: String },
    OLine { d: i64, space: String },
    Roots { roots: Vec<ClassExpr>, space: String },
    Sum(Box<BundleExpr>, Box<BundleExpr>),
    Dual(Box<BundleExpr>),
    Tensor(Box<BundleExpr>, Box<BundleExpr>),
    Quotient { space: String },
    Tangent { space: String },
}

#[derive(Debug, Clone, PartialEq)]
pub enum EmbedExpr {
    ZeroSection { bundle: BundleExpr, total: String },
    Linear { source: String, target: String },
    Diagonal { proj: String, square: String },
    Identity { space: String },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cmd {
    Eval(ClassExpr),
    Push { morphism: String, expr: ClassExpr },
    Pull { morphism: String, expr: ClassExpr },
    Assert { lhs: ClassExpr, rhs: ClassExpr },
    Check { subject: String },
}

#[derive(Debug, Clone, PartialEq)]
pub enum ClassExpr {
    Rational(Rational),
    /// a coefficient-ring symbol: `beta`, `b1`, ...
    Symbol(String),
    /// `h@SPACE`: the top hyperplane class of the space
    Hyperplane { space: String },
    Neg(Box<ClassExpr>),
    Add(Box<ClassExpr>, Box<ClassExpr>),
    Sub(Box<ClassExpr>, Box<ClassExpr>),
    Mul(Box<ClassExpr>, Box<ClassExpr>),
    Pow(Box<ClassExpr>, u32),
    Chern { i: u32, bundle: Box<BundleExpr> },
    C1 { bundle: Box<BundleExpr> },
    C1Tensor { l1: Box<BundleExpr>, l2: Box<BundleExpr> },
    Euler { bundle: Box<BundleExpr> },
    /// `thom(E, TOTAL)`: the Thom class inside the declared completion
    Thom { bundle: Box<BundleExpr>, total: String },
    /// `todd(PAIR, E)` or `todd(PAIR, E, F)` for the virtual bundle E - F
    Todd { pair: String, plus: Box<BundleExpr>, minus: Option<Box<BundleExpr>> },
    Push { morphism: String, expr: Box<ClassExpr> },
    Pull { morphism: String, expr: Box<ClassExpr> },
}

impl std::fmt::Display for Script {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for item in &self.items {
            writeln!(f, "{item}")?;
        }
        Ok(())
    }
}

impl std::fmt::Display for Item {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Item::Decl(d) => write!(f, "{d};"),
            Item::Cmd(c) => write!(f, "{c};"),
        }
    }
}

impl std::fmt::Display for Decl {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Decl::Theory(t) => write!(f, "theory {t}"),
            Decl::Space { name, expr } => write!(f, "space {name} = {expr}"),
            Decl::Bundle { name, expr } => write!(f, "bundle {name} = {expr}"),
            Decl::Embed { name, expr } => write!(f, "embed {name} = {expr}"),
            Decl::Orient { name, native } => {
                write!(f, "orient {name} = {}", if *native { "native" } else { "identity" })
            }
            Decl::Pair { name, first, second } => write!(f, "pair {name} = ({first}, {second})"),
        }
    }
}

impl std::fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceExpr::Proj(n) => write!(f, "proj {n}"),
            SpaceExpr::ProjBundle { base, bundle } => write!(f, "projbundle({base}, {bundle})"),
            SpaceExpr::Completion { bundle } => write!(f, "completion({bundle})"),
            SpaceExpr::Kunneth { proj } => write!(f, "kunneth({proj})"),
        }
    }
}

impl std::fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BundleExpr::Named(n) => write!(f, "{n}"),
            BundleExpr::Trivial { rank, space } => write!(f, "trivial({rank})@{space}"),
            BundleExpr::OLine { d, space } => write!(f, "O({d})@{space}"),
            BundleExpr::Roots { roots, space } => {
                write!(f, "roots(")?;
                for (i, r) in roots.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{r}")?;
                }
                write!(f, ")@{space}")
            }
            BundleExpr::Sum(a, b) => write!(f, "sum({a}, {b})"),
            BundleExpr::Dual(a) => write!(f, "dual({a})"),
            BundleExpr::Tensor(a, b) => write!(f, "tensor({a}, {b})"),
            BundleExpr::Quotient { space } => write!(f, "quotient({space})"),
            BundleExpr::Tangent { space } => write!(f, "tangent({space})"),
        }
    }
}

impl std::fmt::Display for EmbedExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EmbedExpr::ZeroSection { bundle, total } => {
                write!(f, "zerosection({bundle}, {total})")
            }
            EmbedExpr::Linear { source, target } => write!(f, "linear({source}, {target})"),
            EmbedExpr::Diagonal { proj, square } => write!(f, "diagonal({proj}, {square})"),
            EmbedExpr::Identity { space } => write!(f, "identity({space})"),
        }
    }
}

impl std::fmt::Display for Cmd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cmd::Eval(e) => write!(f, "eval {e}"),
            Cmd::Push { morphism, expr } => write!(f, "push {morphism} {expr}"),
            Cmd::Pull { morphism, expr } => write!(f, "pull {morphism} {expr}"),
            Cmd::Assert { lhs, rhs } => write!(f, "assert {lhs} == {rhs}"),
            Cmd::Check { subject } => write!(f, "check {subject}"),
        }
    }
}

/// Precedence levels for printing with minimal parentheses while
/// preserving the parse tree (operators are left-associative).
fn prec(e: &ClassExpr) -> u8 {
    match e {
        ClassExpr::Add(..) | ClassExpr::Sub(..) => 1,
        ClassExpr::Mul(..) => 2,
        ClassExpr::Neg(..) => 3,
        ClassExpr::Pow(..) => 4,
        _ => 5,
    }
}

fn fmt_at(e: &ClassExpr, min: u8, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
    let p = prec(e);
    if p < min {
        write!(f, "(")?;
    }
    match e {
        ClassExpr::Rational(r) => write!(f, "{}", render(r))?,
        ClassExpr::Symbol(s) => write!(f, "{s}")?,
        ClassExpr::Hyperplane { space } => write!(f, "h@{space}")?,
        ClassExpr::Neg(a) => {
            write!(f, "-")?;
            fmt_at(a, 4, f)?;
        }
        ClassExpr::Add(a, b) => {
            fmt_at(a, 1, f)?;
            write!(f, " + ")?;
            fmt_at(b, 2, f)?;
        }
        ClassExpr::Sub(a, b) => {
            fmt_at(a, 1, f)?;
            write!(f, " - ")?;
            fmt_at(b, 2, f)?;
        }
        ClassExpr::Mul(a, b) => {
            fmt_at(a, 2, f)?;
            write!(f, " * ")?;
            fmt_at(b, 3, f)?;
        }
        ClassExpr::Pow(a, n) => {
            fmt_at(a, 5, f)?;
            write!(f, "^{n}")?;
        }
        ClassExpr::Chern { i, bundle } => write!(f, "chern({i}, {bundle})")?,
        ClassExpr::C1 { bundle } => write!(f, "c1({bundle})")?,
        ClassExpr::C1Tensor { l1, l2 } => write!(f, "c1tensor({l1}, {l2})")?,
        ClassExpr::Euler { bundle } => write!(f, "euler({bundle})")?,
        ClassExpr::Thom { bundle, total } => write!(f, "thom({bundle}, {total})")?,
        ClassExpr::Todd { pair, plus, minus } => match minus {
            Some(m) => write!(f, "todd({pair}, {plus}, {m})")?,
            None => write!(f, "todd({pair}, {plus})")?,
        },
        ClassExpr::Push { morphism, expr } => write!(f, "push({morphism}, {expr})")?,
        ClassExpr::Pull { morphism, expr } => write!(f, "pull({morphism}, {expr})")?,
    }
    if p < min {
        write!(f, ")")?;
    }
    Ok(())
}

impl std::fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt_at(self, 0, f)
    }
}
