//! Riemann-Roch verification: orientation pairs, Todd corrections, virtual
//! tangent bundles, and exact-equality checks across orientation pairs.
//!
//! One ring carries both orientations' class systems, so a morphism of
//! oriented theories acts as the identity on elements and all of its
//! content sits in the comparison series `Phi = theta1 o theta2^{-1}`. The
//! verifier computes both sides of each formula in normal form and demands
//! exact equality; there are no tolerances.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::coeff::CoeffRing;
use crate::algebra::rational::Rational;
use crate::algebra::ring::RingElem;
use crate::algebra::series::Series;
use crate::classes::{self, OrientedCtx};
use crate::error::{EngineError, Result};
use crate::fgl::{comparison_series, Orientation, Theory};
use crate::gysin::{
    diagonal_embedding, pushforward_embedding, rebuild_embedding, ProjectionPushforward,
};
use crate::report::Verdict;
use crate::space::{relative_tangent, Bundle, Embedding, Space, SpaceKind, VirtualBundle};

/// A pair of orientations over one coefficient ring, with the comparison
/// series `Phi = theta1 o theta2^{-1}` joining them.
#[derive(Debug, Clone)]
pub struct OrientationPair {
    ctx1: OrientedCtx,
    ctx2: OrientedCtx,
    phi: Series,
}

impl OrientationPair {
    pub fn new(theta1: &Orientation, theta2: &Orientation) -> Result<OrientationPair> {
        let phi = comparison_series(theta1, theta2)?;
        // the coefficient of t^i is homogeneous of weight 1 - i
        if !phi.is_weight_homogeneous(1) {
            return Err(EngineError::Internal {
                reason: format!("comparison series not weight-homogeneous: {}", phi.render()),
            });
        }
        Ok(OrientationPair {
            ctx1: OrientedCtx::new(theta1.clone())?,
            ctx2: OrientedCtx::new(theta2.clone())?,
            phi,
        })
    }

    pub fn ctx1(&self) -> &OrientedCtx {
        &self.ctx1
    }

    pub fn ctx2(&self) -> &OrientedCtx {
        &self.ctx2
    }

    pub fn phi(&self) -> &Series {
        &self.phi
    }

    pub fn label(&self) -> String {
        format!("({},{})", self.ctx1.label(), self.ctx2.label())
    }
}

/// The virtual tangent bundle of a factorized lci morphism: the restricted
/// relative tangent bundle of the projection minus the normal bundle of
/// the immersion.
#[derive(Debug, Clone)]
pub struct VirtualTangent {
    bundle: VirtualBundle,
    relative_dim: i64,
}

impl VirtualTangent {
    pub fn bundle(&self) -> &VirtualBundle {
        &self.bundle
    }

    pub fn relative_dim(&self) -> i64 {
        self.relative_dim
    }
}

/// `tau_f = [i^{-1} T_p] - [N_i]` for the factorization
/// `source -> P -> base` carried by the embedding.
pub fn virtual_tangent(e: &Embedding) -> Result<VirtualTangent> {
    let p = e.target();
    let r = match p.kind() {
        SpaceKind::ProjBundle { rank, .. } => *rank as i64,
        SpaceKind::Point => {
            return Err(EngineError::Construction {
                reason: format!("`{}` is not a projective bundle", p.name()),
            })
        }
    };
    let tp = relative_tangent(p)?;
    let restricted = tp.restrict_along(e.restriction_map(), e.source());
    let bundle = VirtualBundle::new(restricted, e.normal().clone())?;
    let relative_dim = (r - 1) - e.codim() as i64;
    debug_assert_eq!(bundle.virtual_rank(), relative_dim);
    Ok(VirtualTangent { bundle, relative_dim })
}

fn embedding_label(e: &Embedding) -> String {
    use crate::space::EmbeddingKind::*;
    match e.kind() {
        Identity => format!("identity({})", e.source().name()),
        ZeroSection { .. } => {
            format!("zero_section({}->{})", e.source().name(), e.target().name())
        }
        Linear => format!("linear({}->{})", e.source().name(), e.target().name()),
        Diagonal { .. } => format!("diagonal({})", e.source().name()),
    }
}

/// Closed-immersion Riemann-Roch:
/// `i_*^{(1)}(z) = i_*^{(2)}(td_Phi(-[N]) . z)` exactly.
pub fn verify_rr_closed(pair: &OrientationPair, e: &Embedding, z: &RingElem) -> Verdict {
    let check = format!("rr_closed[{},z={}]", embedding_label(e), z);
    let space = e.target().name().to_string();
    let run = || -> Result<(RingElem, RingElem)> {
        let e1 = if e.orientation_label() == pair.ctx1.label() {
            e.clone()
        } else {
            rebuild_embedding(e, &pair.ctx1)?
        };
        let e2 = rebuild_embedding(e, &pair.ctx2)?;
        let lhs = pushforward_embedding(&e1, z);
        let td = classes::todd(
            &pair.phi,
            &VirtualBundle::from_bundle(e.normal().clone()).negate(),
            &pair.ctx2,
        )?;
        let rhs = pushforward_embedding(&e2, &td.mul(z));
        Ok((lhs, rhs))
    };
    match run() {
        Ok((lhs, rhs)) => Verdict::compare(check, space, pair.label(), &lhs, &rhs, lhs == rhs),
        Err(err) => Verdict::error(check, space, pair.label(), &err),
    }
}

/// Projection Riemann-Roch:
/// `p_*^{(1)}(alpha) = p_*^{(2)}(td_Phi(T_p) . alpha)` exactly.
pub fn verify_rr_projection(pair: &OrientationPair, p: &Space, alpha: &RingElem) -> Verdict {
    let push1 = ProjectionPushforward::new(p, &pair.ctx1);
    let push2 = ProjectionPushforward::new(p, &pair.ctx2);
    match (push1, push2) {
        (Ok(push1), Ok(push2)) => {
            verify_rr_projection_with(pair, p, &push1, &push2, alpha)
        }
        (Err(err), _) | (_, Err(err)) => Verdict::error(
            format!("rr_projection[alpha={alpha}]"),
            p.name(),
            pair.label(),
            &err,
        ),
    }
}

/// Projection Riemann-Roch with prebuilt pushforwards (the duality data is
/// the expensive part; sweeps share it).
pub fn verify_rr_projection_with(
    pair: &OrientationPair,
    p: &Space,
    push1: &ProjectionPushforward,
    push2: &ProjectionPushforward,
    alpha: &RingElem,
) -> Verdict {
    let check = format!("rr_projection[alpha={alpha}]");
    let run = || -> Result<(RingElem, RingElem)> {
        let lhs = push1.apply(alpha)?;
        let tp = relative_tangent(p)?;
        let td = classes::todd(&pair.phi, &VirtualBundle::from_bundle(tp), &pair.ctx2)?;
        let rhs = push2.apply(&td.mul(alpha))?;
        Ok((lhs, rhs))
    };
    match run() {
        Ok((lhs, rhs)) => Verdict::compare(check, p.name(), pair.label(), &lhs, &rhs, lhs == rhs),
        Err(err) => Verdict::error(check, p.name(), pair.label(), &err),
    }
}

/// General Riemann-Roch for a factorized projective lci morphism:
/// `f_*^{(1)}(y) = f_*^{(2)}(td_Phi(tau_f) . y)` with `f_* = p_* i_*`.
pub fn verify_grr_lci(pair: &OrientationPair, e: &Embedding, y: &RingElem) -> Verdict {
    let check = format!("grr_lci[{},y={}]", embedding_label(e), y);
    let space = e.target().name().to_string();
    let run = || -> Result<(RingElem, RingElem)> {
        let e1 = if e.orientation_label() == pair.ctx1.label() {
            e.clone()
        } else {
            rebuild_embedding(e, &pair.ctx1)?
        };
        let e2 = rebuild_embedding(e, &pair.ctx2)?;
        let p = e.target();
        let push1 = ProjectionPushforward::new(p, &pair.ctx1)?;
        let push2 = ProjectionPushforward::new(p, &pair.ctx2)?;
        let lhs = push1.apply(&pushforward_embedding(&e1, y))?;
        let tau = virtual_tangent(e)?;
        let td = classes::todd(&pair.phi, tau.bundle(), &pair.ctx2)?;
        let rhs = push2.apply(&pushforward_embedding(&e2, &td.mul(y)))?;
        Ok((lhs, rhs))
    };
    match run() {
        Ok((lhs, rhs)) => Verdict::compare(check, space, pair.label(), &lhs, &rhs, lhs == rhs),
        Err(err) => Verdict::error(check, space, pair.label(), &err),
    }
}

/// The Euler characteristic `chi(P^n, O(d))` computed through the engine:
/// push the K-class of `O(d)` to the point in the multiplicative
/// orientation and extract the `beta^n` coefficient.
pub fn hrr_number(n: u16, d: i64, order: u32) -> Result<Rational> {
    let theory = Theory::Multiplicative;
    let ctx = OrientedCtx::new(theory.native_orientation(order))?;
    let pn = Space::projective_space(n, theory.coeff_ring(order))?;
    let h = pn.hyperplane().expect("projective space");
    // the K-class of O(d): 1 - beta c1(O(d)^dual); the dual has reference
    // root d h
    let c = ctx.first_chern_of_root(&h.scale_rational(&crate::algebra::rational::rat_int(d)))?;
    let beta = pn.ring().from_coeff(CoeffRing::laurent_beta().beta(1)?);
    let alpha = pn.ring().one().sub(&beta.mul(&c));
    let pushed = ProjectionPushforward::new(&pn, &ctx)?.apply(&alpha)?;
    Ok(pushed.gen_zero_part().coeff_of(&[n as i32]))
}

/// The orientation pairs a theory contributes to the verification sweeps:
/// every ordered pair from {identity, native} over the theory's ring.
pub fn theory_pairs(theory: Theory, order: u32) -> Result<Vec<OrientationPair>> {
    let id = theory.reference_orientation(order);
    let native = theory.native_orientation(order);
    let mut orientations = vec![id];
    if !native.is_identity() {
        orientations.push(native);
    }
    let mut out = Vec::new();
    for a in &orientations {
        for b in &orientations {
            out.push(OrientationPair::new(a, b)?);
        }
    }
    Ok(out)
}

/// The stock of embeddings the closed-immersion sweep exercises: zero
/// sections of rank <= 2 bundles over the point and over P^1, linear
/// embeddings P^m in P^n for n <= max_dim, and the diagonal of P^1.
/// Embeddings are built in the first orientation of each pair and rebuilt
/// as needed.
fn sweep_embeddings(theory: Theory, max_dim: u32, order: u32) -> Result<Vec<Embedding>> {
    let coeff = theory.coeff_ring(order);
    let ctx = OrientedCtx::new(theory.reference_orientation(order))?;
    let mut out = Vec::new();

    let pt = Space::point(coeff.clone());
    for rank in 1..=2usize {
        if rank as u32 + 1 > max_dim + 1 {
            continue;
        }
        let e = Bundle::trivial(&pt, rank);
        let (_, emb) = Embedding::zero_section(&e, &format!("T{rank}"), "z", &ctx)?;
        out.push(emb);
    }

    let p1 = Space::projective_space(1, coeff.clone())?;
    let h = p1.hyperplane().expect("P1");
    let bundles: Vec<(String, Vec<RingElem>)> = vec![
        ("O(h)".into(), vec![h.clone()]),
        ("O(-h)".into(), vec![h.neg()]),
        ("O+O(h)".into(), vec![p1.ring().zero(), h.clone()]),
        ("O(h)+O(-h)".into(), vec![h.clone(), h.neg()]),
    ];
    for (name, roots) in bundles {
        if 1 + roots.len() as u32 + 1 > max_dim + 2 {
            continue;
        }
        let e = Bundle::from_roots(&p1, roots)?;
        let (_, emb) = Embedding::zero_section(&e, &format!("T[{name}]"), "z", &ctx)?;
        out.push(emb);
    }

    let spaces: Vec<Space> = (0..=max_dim.min(3) as u16)
        .map(|n| Space::projective_space(n, coeff.clone()))
        .collect::<Result<_>>()?;
    for m in 0..spaces.len() {
        for n in (m + 1)..spaces.len() {
            out.push(Embedding::linear(&spaces[m], &spaces[n], &ctx)?);
        }
    }

    let (_, diag) = diagonal_embedding(&p1, &ctx)?;
    out.push(diag);
    Ok(out)
}

/// The projective bundles the projection sweep exercises: `P(E)` for split
/// `E` of rank <= 3 with roots in {0, h, -h} over the point and over P^1.
fn sweep_projections(theory: Theory, max_dim: u32, order: u32) -> Result<Vec<Space>> {
    let coeff = theory.coeff_ring(order);
    let mut out = Vec::new();
    for n in 0..=2u16 {
        if n as u32 <= max_dim {
            out.push(Space::projective_space(n, coeff.clone())?);
        }
    }
    let p1 = Space::projective_space(1, coeff.clone())?;
    let h = p1.hyperplane().expect("P1");
    let choices = [p1.ring().zero(), h.clone(), h.neg()];
    // multisets of sizes 2..3 (rank-1 bundles give base-isomorphic spaces)
    let mut idx = 0usize;
    for a in 0..3 {
        for b in a..3 {
            let roots = vec![choices[a].clone(), choices[b].clone()];
            if 1 + roots.len() as u32 - 1 <= max_dim {
                let e = Bundle::from_roots(&p1, roots)?;
                out.push(Space::proj_bundle(&e, &format!("PE{idx}"), "k")?);
            }
            idx += 1;
            for c in b..3 {
                let roots =
                    vec![choices[a].clone(), choices[b].clone(), choices[c].clone()];
                if 1 + roots.len() as u32 - 1 <= max_dim {
                    let e = Bundle::from_roots(&p1, roots)?;
                    out.push(Space::proj_bundle(&e, &format!("PE{idx}"), "k")?);
                }
                idx += 1;
            }
        }
    }
    Ok(out)
}

fn basis_elements(space: &Space) -> Vec<RingElem> {
    space
        .ring()
        .basis()
        .into_iter()
        .map(|b| space.ring().monomial(b, space.ring().coeff_ring().one()))
        .collect()
}

/// Worker count from `ORIENT_RR_THREADS` (default 1).
pub fn worker_count() -> usize {
    std::env::var("ORIENT_RR_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|n| *n >= 1)
        .unwrap_or(1)
}

/// Run independent verification closures, preserving input order. All
/// shared data is immutable; parallelism is just an execution strategy.
fn run_tasks(tasks: Vec<Box<dyn FnOnce() -> Verdict + Send>>) -> Vec<Verdict> {
    let workers = worker_count();
    if workers <= 1 {
        return tasks.into_iter().map(|t| t()).collect();
    }
    let n = tasks.len();
    let mut slots: Vec<Option<Verdict>> = Vec::with_capacity(n);
    slots.resize_with(n, || None);
    let slots = std::sync::Mutex::new(slots);
    let queue = std::sync::Mutex::new(tasks.into_iter().enumerate().collect::<Vec<_>>());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let item = queue.lock().expect("queue lock").pop();
                match item {
                    Some((i, task)) => {
                        let v = task();
                        slots.lock().expect("slots lock")[i] = Some(v);
                    }
                    None => break,
                }
            });
        }
    });
    slots
        .into_inner()
        .expect("slots lock")
        .into_iter()
        .map(|v| v.expect("task completed"))
        .collect()
}

/// Full closed-immersion Riemann-Roch sweep for a theory.
pub fn sweep_rr_closed(theory: Theory, max_dim: u32, order: u32) -> Result<Vec<Verdict>> {
    let pairs = theory_pairs(theory, order)?;
    let embeddings = sweep_embeddings(theory, max_dim, order)?;
    let mut tasks: Vec<Box<dyn FnOnce() -> Verdict + Send>> = Vec::new();
    for pair in &pairs {
        for e in &embeddings {
            for z in basis_elements(e.source()) {
                let pair = pair.clone();
                let e = e.clone();
                tasks.push(Box::new(move || verify_rr_closed(&pair, &e, &z)));
            }
        }
    }
    Ok(run_tasks(tasks))
}

/// Full projection Riemann-Roch sweep for a theory. Duality data per
/// (space, orientation) is computed once and shared read-only.
pub fn sweep_rr_projection(theory: Theory, max_dim: u32, order: u32) -> Result<Vec<Verdict>> {
    let pairs = theory_pairs(theory, order)?;
    let spaces = sweep_projections(theory, max_dim, order)?;
    // single-writer phase: populate the duality cache
    let mut cache: BTreeMap<(usize, String), Arc<ProjectionPushforward>> = BTreeMap::new();
    for (si, p) in spaces.iter().enumerate() {
        for pair in &pairs {
            for ctx in [pair.ctx1(), pair.ctx2()] {
                let key = (si, ctx.label().to_string());
                if let std::collections::btree_map::Entry::Vacant(slot) = cache.entry(key) {
                    slot.insert(Arc::new(ProjectionPushforward::new(p, ctx)?));
                }
            }
        }
    }
    let mut tasks: Vec<Box<dyn FnOnce() -> Verdict + Send>> = Vec::new();
    for (si, p) in spaces.iter().enumerate() {
        for pair in &pairs {
            let push1 = cache[&(si, pair.ctx1().label().to_string())].clone();
            let push2 = cache[&(si, pair.ctx2().label().to_string())].clone();
            for alpha in basis_elements(p) {
                let pair = pair.clone();
                let p = p.clone();
                let push1 = push1.clone();
                let push2 = push2.clone();
                tasks.push(Box::new(move || {
                    verify_rr_projection_with(&pair, &p, &push1, &push2, &alpha)
                }));
            }
        }
    }
    Ok(run_tasks(tasks))
}

/// General Riemann-Roch sweep over factorized lci morphisms, including the
/// two-factorization independence checks for `P^0 in P^1 in P^2 -> pt`.
pub fn sweep_grr(theory: Theory, max_dim: u32, order: u32) -> Result<Vec<Verdict>> {
    let coeff = theory.coeff_ring(order);
    let pairs = theory_pairs(theory, order)?;
    let ctx0 = OrientedCtx::new(theory.reference_orientation(order))?;
    let top = max_dim.min(3) as u16;
    let spaces: Vec<Space> = (0..=top)
        .map(|n| Space::projective_space(n, coeff.clone()))
        .collect::<Result<_>>()?;
    let mut embeddings: Vec<Embedding> = Vec::new();
    for m in 0..spaces.len() {
        for n in m..spaces.len() {
            embeddings.push(Embedding::linear(&spaces[m], &spaces[n], &ctx0)?);
        }
    }
    let mut tasks: Vec<Box<dyn FnOnce() -> Verdict + Send>> = Vec::new();
    for pair in &pairs {
        for e in &embeddings {
            for y in basis_elements(e.source()) {
                let pair = pair.clone();
                let e = e.clone();
                tasks.push(Box::new(move || verify_grr_lci(&pair, &e, &y)));
            }
        }
    }
    let mut out = run_tasks(tasks);

    // factorization independence: the same morphism P^0 -> pt through two
    // different projective embeddings gives identical pushforwards
    if spaces.len() >= 3 {
        let p0 = &spaces[0];
        for pair in &pairs {
            let run = || -> Result<(RingElem, RingElem)> {
                let via1 = {
                    let e = Embedding::linear(p0, &spaces[1], pair.ctx1())?;
                    ProjectionPushforward::new(&spaces[1], pair.ctx1())?
                        .apply(&pushforward_embedding(&e, &p0.ring().one()))?
                };
                let via2 = {
                    let e = Embedding::linear(p0, &spaces[2], pair.ctx1())?;
                    ProjectionPushforward::new(&spaces[2], pair.ctx1())?
                        .apply(&pushforward_embedding(&e, &p0.ring().one()))?
                };
                Ok((via1, via2))
            };
            out.push(match run() {
                Ok((lhs, rhs)) => Verdict::compare(
                    "factorization_independence[P0->pt]",
                    "pt",
                    pair.label(),
                    &lhs,
                    &rhs,
                    lhs == rhs,
                ),
                Err(err) => {
                    Verdict::error("factorization_independence[P0->pt]", "pt", pair.label(), &err)
                }
            });
        }
    }
    Ok(out)
}

/// Hirzebruch numbers against the engine, as verdicts.
pub fn sweep_hrr(order: u32) -> Vec<Verdict> {
    let mut out = Vec::new();
    for n in 0..=3u16 {
        for d in -(n as i64)..=5 {
            let check = format!("hrr[n={n},d={d}]");
            match hrr_number(n, d, order) {
                Ok(chi) => {
                    let expect = binomial_extended(n as i64 + d, n as i64);
                    let ok = chi == expect;
                    out.push(Verdict::compare(
                        check,
                        format!("P{n}"),
                        "multiplicative",
                        crate::algebra::rational::render(&chi),
                        crate::algebra::rational::render(&expect),
                        ok,
                    ));
                }
                Err(err) => out.push(Verdict::error(check, format!("P{n}"), "multiplicative", &err)),
            }
        }
    }
    out
}

/// Binomial `C(m, k)` extended by zero for `m < k` (Pascal recursion; an
/// oracle independent of the pushforward machinery).
pub fn binomial_extended(m: i64, k: i64) -> Rational {
    use crate::algebra::rational::rat_int;
    if k < 0 || m < k {
        return rat_int(0);
    }
    let mut row = vec![rat_int(1)];
    for _ in 0..m {
        let mut next = vec![rat_int(1)];
        for j in 1..row.len() {
            next.push(&row[j - 1] + &row[j]);
        }
        next.push(rat_int(1));
        row = next;
    }
    row[k as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_int;

    fn pair(theory: Theory, order: u32) -> OrientationPair {
        OrientationPair::new(
            &theory.native_orientation(order),
            &theory.reference_orientation(order),
        )
        .unwrap()
    }

    #[test]
    fn make_pair_examples() {
        // (theta, theta): Phi = t
        let o = Theory::Multiplicative.native_orientation(8);
        let p = OrientationPair::new(&o, &o).unwrap();
        let t = Series::var(o.ring().clone(), vec!["t".into()], 0, 8);
        assert_eq!(p.phi(), &t);

        // (multiplicative, identity): Phi = theta_mult
        let p = pair(Theory::Multiplicative, 8);
        assert_eq!(p.phi(), Theory::Multiplicative.native_orientation(8).theta());

        // mismatched rings are rejected
        let a = Theory::Additive.native_orientation(8);
        let b = Theory::Multiplicative.native_orientation(8);
        assert!(OrientationPair::new(&a, &b).is_err());
    }

    #[test]
    fn virtual_tangent_ranks() {
        let ctx = OrientedCtx::new(Theory::Additive.reference_orientation(10)).unwrap();
        let q = CoeffRing::Rationals;
        // identity of P^2 into itself: tau = [T_p] - 0, rank 2
        let p2 = Space::projective_space(2, q.clone()).unwrap();
        let e = Embedding::identity(&p2, &ctx).unwrap();
        let tau = virtual_tangent(&e).unwrap();
        assert_eq!(tau.relative_dim(), 2);
        // P^0 in P^1: virtual rank 0
        let p0 = Space::projective_space(0, q.clone()).unwrap();
        let p1 = Space::projective_space(1, q.clone()).unwrap();
        let e = Embedding::linear(&p0, &p1, &ctx).unwrap();
        let tau = virtual_tangent(&e).unwrap();
        assert_eq!(tau.relative_dim(), 0);
        // zero section of E into P(E + 1): virtual rank 0
        let h = p1.hyperplane().unwrap();
        let eb = Bundle::line(&p1, h).unwrap();
        let (_, emb) = Embedding::zero_section(&eb, "T", "z", &ctx).unwrap();
        let tau = virtual_tangent(&emb).unwrap();
        assert_eq!(tau.relative_dim(), 0);
        // codimension-0 virtual tangents have unit Todd weight-0 part
        let p = pair(Theory::Additive, 10);
        let td = classes::todd(p.phi(), tau.bundle(), p.ctx2()).unwrap();
        assert_eq!(td.weight_part(0), emb.source().ring().one());
    }

    #[test]
    fn rr_closed_identity_phi_is_syntactic() {
        let o = Theory::Multiplicative.native_orientation(10);
        let p = OrientationPair::new(&o, &o).unwrap();
        let ctx = OrientedCtx::new(o).unwrap();
        let p1 = Space::projective_space(1, CoeffRing::laurent_beta()).unwrap();
        let h = p1.hyperplane().unwrap();
        let e = Bundle::line(&p1, h).unwrap();
        let (_, emb) = Embedding::zero_section(&e, "T", "z", &ctx).unwrap();
        let v = verify_rr_closed(&p, &emb, &p1.ring().one());
        assert!(v.passed(), "{:?}", v);
        assert_eq!(v.lhs, v.rhs);
    }

    #[test]
    fn rr_closed_zero_section_of_twist_on_p1() {
        // the worked example: zero section of O(h) on P^1, multiplicative
        // vs identity over the Laurent ring, z = 1
        let p = pair(Theory::Multiplicative, 10);
        let ctx1 = p.ctx1().clone();
        let p1 = Space::projective_space(1, CoeffRing::laurent_beta()).unwrap();
        let h = p1.hyperplane().unwrap();
        let e = Bundle::line(&p1, h).unwrap();
        let (_, emb) = Embedding::zero_section(&e, "T", "z", &ctx1).unwrap();
        let v = verify_rr_closed(&p, &emb, &p1.ring().one());
        assert!(v.passed(), "{:?}", v);
        // and for every basis class
        for z in basis_elements(&p1) {
            assert!(verify_rr_closed(&p, &emb, &z).passed());
        }
    }

    #[test]
    fn rr_closed_linear_p1_in_p2() {
        let p = pair(Theory::Multiplicative, 10);
        let q = CoeffRing::laurent_beta();
        let p1 = Space::projective_space(1, q.clone()).unwrap();
        let p2 = Space::projective_space(2, q.clone()).unwrap();
        let e = Embedding::linear(&p1, &p2, p.ctx1()).unwrap();
        let h = p1.hyperplane().unwrap();
        let v = verify_rr_closed(&p, &e, &h);
        assert!(v.passed(), "{:?}", v);
    }

    #[test]
    fn rr_projection_p1_encodes_euler_characteristic() {
        // p_*^{(mult)}(1) = beta = chi(P^1, O) beta; the identity side
        // corrects by td(T_p)
        let p = pair(Theory::Multiplicative, 10);
        let p1 = Space::projective_space(1, CoeffRing::laurent_beta()).unwrap();
        let v = verify_rr_projection(&p, &p1, &p1.ring().one());
        assert!(v.passed(), "{:?}", v);
        assert_eq!(v.lhs, "beta");
    }

    #[test]
    fn rr_projection_exhaustive_p2_basis() {
        let p = pair(Theory::Multiplicative, 10);
        let p2 = Space::projective_space(2, CoeffRing::laurent_beta()).unwrap();
        for alpha in basis_elements(&p2) {
            let v = verify_rr_projection(&p, &p2, &alpha);
            assert!(v.passed(), "{:?}", v);
        }
    }

    #[test]
    fn grr_reduces_to_projection_for_identity() {
        let p = pair(Theory::Multiplicative, 10);
        let p1 = Space::projective_space(1, CoeffRing::laurent_beta()).unwrap();
        let e = Embedding::identity(&p1, p.ctx1()).unwrap();
        let v1 = verify_grr_lci(&p, &e, &p1.ring().one());
        let v2 = verify_rr_projection(&p, &p1, &p1.ring().one());
        assert!(v1.passed() && v2.passed());
        assert_eq!(v1.lhs, v2.lhs);
        assert_eq!(v1.rhs, v2.rhs);
    }

    #[test]
    fn grr_composite_p1_in_p2() {
        let p = pair(Theory::Multiplicative, 10);
        let q = CoeffRing::laurent_beta();
        let p1 = Space::projective_space(1, q.clone()).unwrap();
        let p2 = Space::projective_space(2, q.clone()).unwrap();
        let e = Embedding::linear(&p1, &p2, p.ctx1()).unwrap();
        let v = verify_grr_lci(&p, &e, &p1.ring().one());
        assert!(v.passed(), "{:?}", v);
    }

    #[test]
    fn hrr_numbers_match_binomials() {
        for n in 0..=2u16 {
            for d in -(n as i64)..=3 {
                let chi = hrr_number(n, d, 10).unwrap();
                assert_eq!(
                    chi,
                    binomial_extended(n as i64 + d, n as i64),
                    "n={n} d={d}"
                );
            }
        }
        assert_eq!(hrr_number(1, 0, 10).unwrap(), rat_int(1));
        assert_eq!(hrr_number(2, 1, 10).unwrap(), rat_int(3));
        assert_eq!(hrr_number(3, -1, 10).unwrap(), rat_int(0));
    }

    #[test]
    fn small_universal_sweeps_pass() {
        for v in sweep_rr_closed(Theory::Universal(2), 1, 10).unwrap() {
            assert!(v.passed(), "{:?}", v);
        }
        for v in sweep_rr_projection(Theory::Universal(2), 1, 10).unwrap() {
            assert!(v.passed(), "{:?}", v);
        }
    }

    use crate::algebra::coeff::CoeffRing;
}
