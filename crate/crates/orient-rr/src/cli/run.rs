//! Script evaluation: a session builds the declared objects, executes
//! commands against the engine, and emits a deterministic report.
//!
//! Output is JSON whenever the script contains a `check` command or the
//! `--json` flag is set; otherwise a plain line per result. Two runs of
//! the same script are byte-identical.

use std::collections::BTreeMap;

use serde::Serialize;

use super::ast::*;
use crate::algebra::ring::RingElem;
use crate::classes::OrientedCtx;
use crate::error::{EngineError, Result};
use crate::fgl::{Orientation, Theory};
use crate::gysin::{
    diagonal_embedding_into, pushforward_embedding, pushforward_projection, KunnethSquare,
};
use crate::report::{Status, Verdict};
use crate::rr::OrientationPair;
use crate::space::{Bundle, Embedding, Space, SpaceKind, VirtualBundle};
use crate::suites;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone)]
pub struct Flags {
    pub theory: Option<Theory>,
    pub truncation: u32,
    pub max_dim: u32,
    pub json: bool,
}

impl Default for Flags {
    fn default() -> Self {
        Flags { theory: None, truncation: 10, max_dim: 3, json: false }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ResultEntry {
    pub command: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orientation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: String,
    pub theory: String,
    pub orientations: Vec<String>,
    pub truncation: u32,
    pub results: Vec<ResultEntry>,
}

impl Report {
    /// 0 success, 1 verification failure or engine error, 3 internal
    /// invariant violation (2 is reserved for usage/parse errors).
    pub fn exit_code(&self) -> i32 {
        let mut code = 0;
        for r in &self.results {
            if r.code.as_deref() == Some("E_INTERNAL") {
                return 3;
            }
            if r.status == "fail" || r.status == "error" {
                code = 1;
            }
        }
        code
    }

    /// Whether the report should render as JSON (forced by any check).
    pub fn wants_json(&self, flags: &Flags) -> bool {
        flags.json || self.results.iter().any(|r| r.check.is_some())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let line = match r.status.as_str() {
                "ok" => format!("{} => {}", r.command, r.value.as_deref().unwrap_or("")),
                "pass" | "fail" => match (&r.lhs, &r.rhs) {
                    (Some(l), Some(rr)) => {
                        format!("{} => {}: lhs = {} rhs = {}", r.command, r.status, l, rr)
                    }
                    _ => format!("{} => {}", r.command, r.status),
                },
                _ => format!(
                    "{} => error[{}]: {}",
                    r.command,
                    r.code.as_deref().unwrap_or("?"),
                    r.value.as_deref().unwrap_or("")
                ),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

fn entry_ok(command: String, value: String) -> ResultEntry {
    ResultEntry {
        command,
        status: "ok".into(),
        value: Some(value),
        check: None,
        space: None,
        orientation: None,
        lhs: None,
        rhs: None,
        code: None,
    }
}

fn entry_error(command: String, err: &EngineError) -> ResultEntry {
    ResultEntry {
        command,
        status: "error".into(),
        value: Some(err.to_string()),
        check: None,
        space: None,
        orientation: None,
        lhs: None,
        rhs: None,
        code: Some(err.code().to_string()),
    }
}

fn entry_verdict(command: &str, v: Verdict) -> ResultEntry {
    ResultEntry {
        command: command.to_string(),
        status: match v.status {
            Status::Pass => "pass".into(),
            Status::Fail => "fail".into(),
            Status::Error => "error".into(),
        },
        value: None,
        check: Some(v.check),
        space: Some(v.space),
        orientation: Some(v.orientation),
        lhs: Some(v.lhs),
        rhs: Some(v.rhs),
        code: v.code,
    }
}

struct Session {
    theory: Theory,
    order: u32,
    max_dim: u32,
    ctx: OrientedCtx,
    spaces: BTreeMap<String, Space>,
    bundles: BTreeMap<String, Bundle>,
    embeddings: BTreeMap<String, Embedding>,
    squares: BTreeMap<String, KunnethSquare>,
    orients: BTreeMap<String, Orientation>,
    pairs: BTreeMap<String, OrientationPair>,
}

impl Session {
    fn new(theory: Theory, order: u32, max_dim: u32) -> Result<Session> {
        Ok(Session {
            theory,
            order,
            max_dim,
            ctx: OrientedCtx::new(theory.native_orientation(order))?,
            spaces: BTreeMap::new(),
            bundles: BTreeMap::new(),
            embeddings: BTreeMap::new(),
            squares: BTreeMap::new(),
            orients: BTreeMap::new(),
            pairs: BTreeMap::new(),
        })
    }

    fn space(&self, name: &str) -> Result<&Space> {
        self.spaces.get(name).ok_or_else(|| EngineError::Construction {
            reason: format!("space `{name}` was not built"),
        })
    }

    fn bundle(&self, name: &str) -> Result<&Bundle> {
        self.bundles.get(name).ok_or_else(|| EngineError::Construction {
            reason: format!("bundle `{name}` was not built"),
        })
    }

    /// A generator name for a new projectivization: the lowercased space
    /// name, suffixed until fresh in the base ring.
    fn fresh_gen(&self, base: &Space, space_name: &str) -> String {
        let stem: String = space_name.to_lowercase();
        let stem = if stem.is_empty() { "z".to_string() } else { stem };
        if base.ring().gen_index(&stem).is_none() {
            return stem;
        }
        for k in 2.. {
            let cand = format!("{stem}{k}");
            if base.ring().gen_index(&cand).is_none() {
                return cand;
            }
        }
        unreachable!()
    }

    fn build_space(&mut self, name: &str, expr: &SpaceExpr) -> Result<Space> {
        match expr {
            SpaceExpr::Proj(n) => Space::projective_space(*n, self.theory.coeff_ring(self.order)),
            SpaceExpr::ProjBundle { base, bundle } => {
                let bundle = self.bundle(bundle)?.clone();
                let base_space = self.space(base)?;
                if bundle.base() != base_space {
                    return Err(EngineError::BaseMismatch {
                        left: base.clone(),
                        right: "bundle base".into(),
                    });
                }
                let gen = self.fresh_gen(bundle.base(), name);
                Space::proj_bundle(&bundle, name, &gen)
            }
            SpaceExpr::Completion { bundle } => {
                let bundle = self.bundle(bundle)?.clone();
                let completed = bundle.sum(&Bundle::trivial(bundle.base(), 1))?;
                let gen = self.fresh_gen(bundle.base(), name);
                Space::proj_bundle(&completed, name, &gen)
            }
            SpaceExpr::Kunneth { proj } => {
                let proj = self.space(proj)?.clone();
                let k = KunnethSquare::new(&proj)?;
                let square = k.square().clone();
                self.squares.insert(name.to_string(), k);
                Ok(square)
            }
        }
    }

    fn build_bundle(&self, expr: &BundleExpr) -> Result<Bundle> {
        match expr {
            BundleExpr::Named(name) => Ok(self.bundle(name)?.clone()),
            BundleExpr::Trivial { rank, space } => {
                Ok(Bundle::trivial(self.space(space)?, *rank as usize))
            }
            BundleExpr::OLine { d, space } => Bundle::o_line(self.space(space)?, *d),
            BundleExpr::Roots { roots, space } => {
                let space = self.space(space)?.clone();
                let elems: Vec<RingElem> =
                    roots.iter().map(|r| self.eval_class(r)).collect::<Result<_>>()?;
                let coerced: Vec<RingElem> = elems
                    .into_iter()
                    .map(|e| self.coerce_to(&e, space.ring()))
                    .collect::<Result<_>>()?;
                Bundle::from_roots(&space, coerced)
            }
            BundleExpr::Sum(a, b) => self.build_bundle(a)?.sum(&self.build_bundle(b)?),
            BundleExpr::Dual(a) => self.build_bundle(a)?.dual(),
            BundleExpr::Tensor(a, b) => {
                let a = self.build_bundle(a)?;
                let b = self.build_bundle(b)?;
                if b.rank() == 1 {
                    a.tensor_line(&b)
                } else if a.rank() == 1 {
                    b.tensor_line(&a)
                } else {
                    Err(EngineError::BundleData {
                        reason: "tensor requires at least one rank-1 factor".into(),
                    })
                }
            }
            BundleExpr::Quotient { space } => crate::space::universal_quotient(self.space(space)?),
            BundleExpr::Tangent { space } => crate::space::relative_tangent(self.space(space)?),
        }
    }

    fn build_embedding(&mut self, expr: &EmbedExpr) -> Result<Embedding> {
        match expr {
            EmbedExpr::ZeroSection { bundle, total } => {
                let bundle = self.build_bundle(bundle)?;
                let total = self.space(total)?.clone();
                Embedding::zero_section_into(&bundle, &total, &self.ctx)
            }
            EmbedExpr::Linear { source, target } => {
                let source = self.space(source)?.clone();
                let target = self.space(target)?.clone();
                Embedding::linear(&source, &target, &self.ctx)
            }
            EmbedExpr::Diagonal { proj, square } => {
                let k = match self.squares.get(square) {
                    Some(k) => k.clone(),
                    None => {
                        let proj = self.space(proj)?.clone();
                        let square = self.space(square)?.clone();
                        KunnethSquare::attach(&proj, &square)?
                    }
                };
                diagonal_embedding_into(&k, &self.ctx)
            }
            EmbedExpr::Identity { space } => {
                let space = self.space(space)?.clone();
                Embedding::identity(&space, &self.ctx)
            }
        }
    }

    /// Coerce constants (elements of the generator-free ring) into a
    /// target ring; anything else must already live there.
    fn coerce_to(&self, x: &RingElem, ring: &crate::algebra::ring::CohRing) -> Result<RingElem> {
        if x.ring() == ring {
            return Ok(x.clone());
        }
        if x.ring().num_gens() == 0 && x.ring().coeff_ring() == ring.coeff_ring() {
            return Ok(ring.from_coeff(x.gen_zero_part()));
        }
        Err(EngineError::BaseMismatch {
            left: x.render(),
            right: "a different ring".into(),
        })
    }

    fn combine(
        &self,
        a: RingElem,
        b: RingElem,
        f: impl Fn(&RingElem, &RingElem) -> RingElem,
    ) -> Result<RingElem> {
        if a.ring() == b.ring() {
            return Ok(f(&a, &b));
        }
        if a.ring().num_gens() == 0 {
            let a2 = self.coerce_to(&a, b.ring())?;
            return Ok(f(&a2, &b));
        }
        if b.ring().num_gens() == 0 {
            let b2 = self.coerce_to(&b, a.ring())?;
            return Ok(f(&a, &b2));
        }
        Err(EngineError::BaseMismatch {
            left: "left operand".into(),
            right: "right operand".into(),
        })
    }

    fn eval_class(&self, expr: &ClassExpr) -> Result<RingElem> {
        let point = crate::algebra::ring::CohRing::point(self.theory.coeff_ring(self.order));
        match expr {
            ClassExpr::Rational(r) => Ok(point.from_rational(r.clone())),
            ClassExpr::Symbol(s) => Ok(point.from_coeff(point.coeff_ring().symbol(s)?)),
            ClassExpr::Hyperplane { space } => {
                let space = self.space(space)?;
                space.hyperplane().ok_or_else(|| EngineError::Construction {
                    reason: format!("space `{}` has no hyperplane class", space.name()),
                })
            }
            ClassExpr::Neg(a) => Ok(self.eval_class(a)?.neg()),
            ClassExpr::Add(a, b) => {
                self.combine(self.eval_class(a)?, self.eval_class(b)?, |x, y| x.add(y))
            }
            ClassExpr::Sub(a, b) => {
                self.combine(self.eval_class(a)?, self.eval_class(b)?, |x, y| x.sub(y))
            }
            ClassExpr::Mul(a, b) => {
                self.combine(self.eval_class(a)?, self.eval_class(b)?, |x, y| x.mul(y))
            }
            ClassExpr::Pow(a, n) => Ok(self.eval_class(a)?.pow(*n)),
            ClassExpr::Chern { i, bundle } => {
                crate::classes::chern(*i as usize, &self.build_bundle(bundle)?, &self.ctx)
            }
            ClassExpr::C1 { bundle } => crate::classes::c1(&self.build_bundle(bundle)?, &self.ctx),
            ClassExpr::C1Tensor { l1, l2 } => crate::classes::c1_tensor(
                &self.build_bundle(l1)?,
                &self.build_bundle(l2)?,
                &self.ctx,
            ),
            ClassExpr::Euler { bundle } => {
                crate::classes::euler(&self.build_bundle(bundle)?, &self.ctx)
            }
            ClassExpr::Thom { bundle, total } => {
                let bundle = self.build_bundle(bundle)?;
                let total = self.space(total)?;
                crate::classes::thom_class_in(total, &bundle, &self.ctx)
            }
            ClassExpr::Todd { pair, plus, minus } => {
                let pair = self.pairs.get(pair).ok_or_else(|| EngineError::Construction {
                    reason: format!("pair `{pair}` was not built"),
                })?;
                let plus = self.build_bundle(plus)?;
                let v = match minus {
                    Some(m) => VirtualBundle::new(plus, self.build_bundle(m)?)?,
                    None => VirtualBundle::from_bundle(plus),
                };
                crate::classes::todd(pair.phi(), &v, pair.ctx2())
            }
            ClassExpr::Push { morphism, expr } => {
                let x = self.eval_class(expr)?;
                self.push_along(morphism, &x)
            }
            ClassExpr::Pull { morphism, expr } => {
                let x = self.eval_class(expr)?;
                self.pull_along(morphism, &x)
            }
        }
    }

    fn push_along(&self, morphism: &str, x: &RingElem) -> Result<RingElem> {
        if let Some(e) = self.embeddings.get(morphism) {
            let x = self.coerce_to(x, e.source().ring())?;
            return Ok(pushforward_embedding(e, &x));
        }
        let space = self.space(morphism)?;
        let x = self.coerce_to(x, space.ring())?;
        pushforward_projection(space, &x, &self.ctx)
    }

    fn pull_along(&self, morphism: &str, x: &RingElem) -> Result<RingElem> {
        if let Some(e) = self.embeddings.get(morphism) {
            let x = self.coerce_to(x, e.target().ring())?;
            return Ok(e.restrict(&x));
        }
        let space = self.space(morphism)?;
        match space.kind() {
            SpaceKind::ProjBundle { base, .. } => {
                let x = self.coerce_to(x, base.ring())?;
                Ok(space.pullback_from_base(&x))
            }
            SpaceKind::Point => Err(EngineError::Construction {
                reason: format!("`{}` has no projection to pull along", space.name()),
            }),
        }
    }

    fn orientation(&self, native: bool) -> Orientation {
        if native {
            self.theory.native_orientation(self.order)
        } else {
            self.theory.reference_orientation(self.order)
        }
    }
}

/// Execute a parsed script under the given flags.
pub fn run(script: &Script, flags: &Flags) -> Report {
    // the script's own theory declaration wins over the flag
    let mut theory = flags.theory.unwrap_or(Theory::Additive);
    for item in &script.items {
        if let Item::Decl(Decl::Theory(t)) = item {
            if let Some(t) = Theory::parse(t) {
                theory = t;
            }
        }
    }
    let order = flags.truncation;
    let mut results = Vec::new();
    let mut session = match Session::new(theory, order, flags.max_dim) {
        Ok(s) => s,
        Err(err) => {
            results.push(entry_error("theory".into(), &err));
            return Report {
                version: SCHEMA_VERSION.to_string(),
                theory: theory.label(),
                orientations: vec![],
                truncation: order,
                results,
            };
        }
    };

    for item in &script.items {
        match item {
            Item::Decl(decl) => {
                let command = decl.to_string();
                match decl {
                    Decl::Theory(_) => {}
                    Decl::Space { name, expr } => match session.build_space(name, expr) {
                        Ok(space) => {
                            session.spaces.insert(name.clone(), space);
                        }
                        Err(err) => results.push(entry_error(command, &err)),
                    },
                    Decl::Bundle { name, expr } => match session.build_bundle(expr) {
                        Ok(b) => {
                            session.bundles.insert(name.clone(), b);
                        }
                        Err(err) => results.push(entry_error(command, &err)),
                    },
                    Decl::Embed { name, expr } => match session.build_embedding(expr) {
                        Ok(e) => {
                            session.embeddings.insert(name.clone(), e);
                        }
                        Err(err) => results.push(entry_error(command, &err)),
                    },
                    Decl::Orient { name, native } => {
                        let o = session.orientation(*native);
                        session.orients.insert(name.clone(), o);
                    }
                    Decl::Pair { name, first, second } => {
                        let (a, b) = (
                            session.orients.get(first).cloned(),
                            session.orients.get(second).cloned(),
                        );
                        match (a, b) {
                            (Some(a), Some(b)) => match OrientationPair::new(&a, &b) {
                                Ok(p) => {
                                    session.pairs.insert(name.clone(), p);
                                }
                                Err(err) => results.push(entry_error(command, &err)),
                            },
                            _ => results.push(entry_error(
                                command,
                                &EngineError::Construction {
                                    reason: "pair references an unbuilt orientation".into(),
                                },
                            )),
                        }
                    }
                }
            }
            Item::Cmd(cmd) => {
                let command = cmd.to_string();
                match cmd {
                    Cmd::Eval(e) => match session.eval_class(e) {
                        Ok(v) => results.push(entry_ok(command, v.render())),
                        Err(err) => results.push(entry_error(command, &err)),
                    },
                    Cmd::Push { morphism, expr } => {
                        match session
                            .eval_class(expr)
                            .and_then(|x| session.push_along(morphism, &x))
                        {
                            Ok(v) => results.push(entry_ok(command, v.render())),
                            Err(err) => results.push(entry_error(command, &err)),
                        }
                    }
                    Cmd::Pull { morphism, expr } => {
                        match session
                            .eval_class(expr)
                            .and_then(|x| session.pull_along(morphism, &x))
                        {
                            Ok(v) => results.push(entry_ok(command, v.render())),
                            Err(err) => results.push(entry_error(command, &err)),
                        }
                    }
                    Cmd::Assert { lhs, rhs } => {
                        let outcome = session.eval_class(lhs).and_then(|l| {
                            let r = session.eval_class(rhs)?;
                            let equal = match session.combine(l.clone(), r.clone(), |a, b| {
                                a.sub(b)
                            }) {
                                Ok(diff) => diff.is_zero(),
                                Err(_) => false,
                            };
                            Ok((l, r, equal))
                        });
                        match outcome {
                            Ok((l, r, equal)) => results.push(ResultEntry {
                                command,
                                status: if equal { "pass".into() } else { "fail".into() },
                                value: None,
                                check: None,
                                space: None,
                                orientation: None,
                                lhs: Some(l.render()),
                                rhs: Some(r.render()),
                                code: None,
                            }),
                            Err(err) => results.push(entry_error(command, &err)),
                        }
                    }
                    Cmd::Check { subject } => {
                        match suites::run_suite(subject, theory, session.max_dim, session.order) {
                            Ok(verdicts) => {
                                for v in verdicts {
                                    results.push(entry_verdict(&command, v));
                                }
                            }
                            Err(err) => results.push(entry_error(command, &err)),
                        }
                    }
                }
            }
        }
    }

    let mut orientations = vec![theory.reference_orientation(order).label().to_string()];
    let native = theory.native_orientation(order);
    if !native.is_identity() {
        orientations.push(native.label().to_string());
    }
    Report {
        version: SCHEMA_VERSION.to_string(),
        theory: theory.label(),
        orientations,
        truncation: order,
        results,
    }
}

/// Parse and run a script from text; parse errors come back as `Err`.
pub fn run_text(text: &str, flags: &Flags) -> std::result::Result<Report, super::parse::ParseError> {
    let script = super::parse::parse(text)?;
    Ok(run(&script, flags))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_basic_script() {
        let report = run_text(
            "theory multiplicative; space P2 = proj 2; eval chern(1, O(1)@P2);",
            &Flags::default(),
        )
        .unwrap();
        assert_eq!(report.results.len(), 1);
        assert_eq!(report.results[0].status, "ok");
        // c1(O(1)) = theta(-h) = -h - 1/2 beta h^2
        assert_eq!(
            report.results[0].value.as_deref(),
            Some("-h - 1/2*beta*h^2")
        );
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn push_projection_gives_beta() {
        let report = run_text(
            "theory multiplicative; space P1 = proj 1; push P1 1;",
            &Flags::default(),
        )
        .unwrap();
        assert_eq!(report.results[0].value.as_deref(), Some("beta"));
    }

    #[test]
    fn assert_pass_and_fail_exit_codes() {
        let report = run_text(
            "space P1 = proj 1; assert h@P1 * h@P1 == 0;",
            &Flags::default(),
        )
        .unwrap();
        assert_eq!(report.results[0].status, "pass");
        assert_eq!(report.exit_code(), 0);

        let report = run_text(
            "space P1 = proj 1; assert h@P1 == 0;",
            &Flags::default(),
        )
        .unwrap();
        assert_eq!(report.results[0].status, "fail");
        assert_eq!(report.exit_code(), 1);
    }

    #[test]
    fn engine_errors_are_report_entries_with_codes() {
        // truncation too low for evaluating theta on P3
        let flags = Flags { truncation: 2, ..Flags::default() };
        let report = run_text(
            "theory multiplicative; space P3 = proj 3; eval chern(1, O(1)@P3);",
            &flags,
        )
        .unwrap();
        assert_eq!(report.results[0].status, "error");
        assert_eq!(report.results[0].code.as_deref(), Some("E_TRUNCATION_UNSOUND"));
        assert_eq!(report.exit_code(), 1);
    }

    #[test]
    fn internal_invariant_violations_map_to_exit_3() {
        let mut report = run_text("space P1 = proj 1; eval h@P1;", &Flags::default()).unwrap();
        assert_eq!(report.exit_code(), 0);
        report.results.push(entry_error(
            "synthetic".into(),
            &EngineError::Internal { reason: "forced".into() },
        ));
        assert_eq!(report.exit_code(), 3);
    }

    #[test]
    fn check_produces_verdicts_and_json() {
        let report = run_text("check fgl;", &Flags::default()).unwrap();
        assert!(report.results.iter().all(|r| r.status == "pass"));
        assert!(report.wants_json(&Flags::default()));
        let json = report.to_json();
        assert!(json.contains("\"version\": \"1\""));
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn engine_error_codes_reachable_from_scripts() {
        let cases = [
            // coefficient symbol not declared by the additive theory
            ("eval beta;", "E_UNKNOWN_SYMBOL"),
            // projectivizing a rank-0 bundle
            (
                "space P1 = proj 1; bundle Z = trivial(0)@P1; space X = projbundle(P1, Z);",
                "E_DEGENERATE_BUNDLE",
            ),
            // a root must be a weight-1 class
            ("space P1 = proj 1; bundle B = roots(1)@P1;", "E_BUNDLE_DATA"),
            // root from a different ring
            (
                "space P1 = proj 1; space P2 = proj 2; bundle B = roots(h@P1)@P2;",
                "E_BASE_MISMATCH",
            ),
            // zero section into a space that is not the completion
            (
                "space P1 = proj 1; space P2 = proj 2; bundle L = O(1)@P1; embed i = zerosection(L, P2);",
                "E_CONSTRUCTION",
            ),
        ];
        for (src, code) in cases {
            let report = run_text(src, &Flags::default()).unwrap();
            let found = report
                .results
                .iter()
                .any(|r| r.status == "error" && r.code.as_deref() == Some(code));
            assert!(found, "expected {code} from `{src}`: {:?}", report.results);
            assert_eq!(report.exit_code(), 1);
        }
    }

    #[test]
    fn deterministic_output() {
        let src = "theory universal:2; space P2 = proj 2; eval chern(2, sum(O(1)@P2, O(-1)@P2)); check hrr;";
        let a = run_text(src, &Flags::default()).unwrap().to_json();
        let b = run_text(src, &Flags::default()).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn full_workflow_script() {
        let src = "\
theory multiplicative;
space P1 = proj 1;
bundle E = O(-1)@P1;
space PB = completion(E);
embed i = zerosection(E, PB);
orient nat = native;
orient ref = identity;
pair ph = (nat, ref);
eval todd(ph, E);
push i h@P1;
pull i h@PB;
assert push(i, 1) == thom(E, PB);
space Q = kunneth(P1);
embed d = diagonal(P1, Q);
push d 1;
";
        let report = run_text(src, &Flags::default()).unwrap();
        for r in &report.results {
            assert_ne!(r.status, "error", "{:?}", r);
        }
        assert_eq!(report.exit_code(), 0);
    }
}
