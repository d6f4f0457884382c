//! Named verification suites: bounded, deterministic sweeps over the
//! engine's identities. The CLI `check` command and the acceptance tests
//! both run these.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::ring::RingElem;
use crate::classes::{self, OrientedCtx};
use crate::error::Result;
use crate::fgl::{comparison_series, FormalGroupLaw, Theory};
use crate::gysin::{
    self, pushforward_embedding, DualityData, KunnethSquare, ProjectionPushforward,
};
use crate::report::Verdict;
use crate::rr;
use crate::space::{Bundle, Embedding, Space, VirtualBundle};

fn ok(check: impl Into<String>, space: impl Into<String>, orientation: impl Into<String>) -> Verdict {
    Verdict::compare(check, space, orientation, "verified", "verified", true)
}

fn residual_verdict(name: &str, which: &str, residual: &crate::algebra::series::Series) -> Verdict {
    Verdict::compare(
        format!("fgl_{which}[{name}]"),
        "-",
        name,
        residual.render(),
        "0",
        residual.is_zero(),
    )
}

/// Unit, commutativity and associativity residuals for the theory's laws.
pub fn suite_fgl(theory: Theory, order: u32) -> Result<Vec<Verdict>> {
    let mut laws: Vec<FormalGroupLaw> =
        vec![FormalGroupLaw::additive(theory.coeff_ring(order), order)];
    let native = theory.native_orientation(order);
    if !native.is_identity() {
        laws.push(native.induced_law()?);
    }
    if theory == Theory::Multiplicative {
        laws.push(FormalGroupLaw::multiplicative(order));
    }
    let mut out = Vec::new();
    for law in &laws {
        let rep = law.check();
        out.push(residual_verdict(law.name(), "unit_x", &rep.unit_x));
        out.push(residual_verdict(law.name(), "unit_y", &rep.unit_y));
        out.push(residual_verdict(law.name(), "commutativity", &rep.commutativity));
        out.push(residual_verdict(law.name(), "associativity", &rep.associativity));
    }
    if theory == Theory::Multiplicative {
        // the conjugated law agrees with the direct construction
        let conj = Theory::Multiplicative.native_orientation(order).induced_law()?;
        let direct = FormalGroupLaw::multiplicative(order);
        out.push(Verdict::compare(
            "fgl_conjugation[multiplicative]",
            "-",
            "multiplicative",
            conj.series().render(),
            direct.series().render(),
            conj.series() == direct.series(),
        ));
    }
    Ok(out)
}

/// The projective bundles the structural suites run over: rank <= 4 over
/// the point and rank <= 3 over P^1.
fn structure_spaces(theory: Theory, order: u32, max_rank_over_p1: usize) -> Result<Vec<Space>> {
    let coeff = theory.coeff_ring(order);
    let mut out = Vec::new();
    for n in 0..=3u16 {
        out.push(Space::projective_space(n, coeff.clone())?);
    }
    let p1 = Space::projective_space(1, coeff.clone())?;
    let h = p1.hyperplane().expect("P1");
    let zero = p1.ring().zero();
    let root_sets: Vec<Vec<RingElem>> = vec![
        vec![h.clone()],
        vec![zero.clone(), h.clone()],
        vec![h.clone(), h.neg()],
        vec![zero.clone(), h.clone(), h.neg()],
        vec![zero.clone(), zero.clone(), h.clone(), h.neg()],
    ];
    for (i, roots) in root_sets.into_iter().enumerate() {
        if roots.len() > max_rank_over_p1 {
            continue;
        }
        let e = Bundle::from_roots(&p1, roots)?;
        out.push(Space::proj_bundle(&e, &format!("PB{i}"), "k")?);
    }
    Ok(out)
}

/// Projective bundle theorem: each tested ring is a free module of the
/// predicted rank on the predicted monomial basis, and the hyperplane
/// relation holds in every orientation.
pub fn suite_pbf(theory: Theory, order: u32) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    let ref_ctx = OrientedCtx::new(theory.reference_orientation(order))?;
    let native_ctx = OrientedCtx::new(theory.native_orientation(order))?;
    for space in structure_spaces(theory, order, 3)? {
        let (base, bundle, r) = match space.kind() {
            crate::space::SpaceKind::ProjBundle { base, bundle, rank, .. } => {
                (base.clone(), bundle.clone(), *rank as u64)
            }
            _ => continue,
        };
        let predicted = base.ring().rank() * r;
        out.push(Verdict::compare(
            "pbf_module_rank",
            space.name(),
            "-",
            space.ring().rank().to_string(),
            predicted.to_string(),
            space.ring().rank() == predicted,
        ));
        let basis = space.ring().basis();
        let bounded = basis.len() as u64 == space.ring().rank()
            && basis.iter().all(|e| {
                e.iter()
                    .zip(space.ring().gens())
                    .all(|(x, g)| *x < g.degree)
            });
        out.push(Verdict::compare(
            "pbf_basis_monomials",
            space.name(),
            "-",
            basis.len().to_string(),
            space.ring().rank().to_string(),
            bounded,
        ));
        // the defining relation, in both class systems
        for ctx in [&ref_ctx, &native_ctx] {
            let h = space.hyperplane().expect("projective bundle");
            let th = ctx.first_chern_of_root(&h)?;
            let mut rel = space.ring().zero();
            for i in 0..=(r as usize) {
                let ci = classes::chern(i, &bundle, ctx)?;
                rel = rel.add(
                    &space
                        .pullback_from_base(&ci)
                        .mul(&th.neg().pow(r as u32 - i as u32)),
                );
            }
            out.push(Verdict::compare(
                "pbf_hyperplane_relation",
                space.name(),
                ctx.label(),
                rel.render(),
                "0",
                rel.is_zero(),
            ));
        }
    }
    Ok(out)
}

/// Thom/quotient identity: `thom(E) = c_rank(xi)` for split bundles of
/// rank <= 3 over P^1 and P^2.
pub fn suite_thom(theory: Theory, order: u32) -> Result<Vec<Verdict>> {
    let coeff = theory.coeff_ring(order);
    let ctx = OrientedCtx::new(theory.native_orientation(order))?;
    let mut out = Vec::new();
    for base_dim in [1u16, 2] {
        let base = Space::projective_space(base_dim, coeff.clone())?;
        let h = base.hyperplane().expect("projective space");
        let zero = base.ring().zero();
        let root_sets: Vec<Vec<RingElem>> = vec![
            vec![zero.clone()],
            vec![h.clone()],
            vec![h.neg()],
            vec![zero.clone(), h.clone()],
            vec![h.clone(), h.neg()],
            vec![zero.clone(), h.clone(), h.neg()],
        ];
        for (i, roots) in root_sets.into_iter().enumerate() {
            let e = Bundle::from_roots(&base, roots)?;
            let rank = e.rank();
            let (total, th) = classes::thom(&e, &format!("T{base_dim}_{i}"), "z", &ctx)?;
            let xi = crate::space::universal_quotient(&total)?;
            let top = classes::euler(&xi, &ctx)?;
            out.push(Verdict::compare(
                format!("thom_equals_top_chern_of_quotient[rank={rank}]"),
                total.name(),
                ctx.label(),
                th.render(),
                top.render(),
                th == top,
            ));
        }
    }
    Ok(out)
}

fn random_roots(rng: &mut ChaCha8Rng, space: &Space, max_rank: usize) -> Bundle {
    let h = space.hyperplane().expect("projective space");
    let rank = rng.gen_range(1..=max_rank);
    let roots: Vec<RingElem> = (0..rank)
        .map(|_| {
            let c: i64 = rng.gen_range(-2..=2);
            h.scale_rational(&crate::algebra::rational::rat_int(c))
        })
        .collect();
    Bundle::from_roots(space, roots).expect("roots are valid weight-1 classes")
}

/// Whitney and Todd multiplicativity on randomized bundles over P^3. The
/// instance count is per identity; failures carry both normal forms.
pub fn suite_classes(theory: Theory, order: u32, instances: u32) -> Result<Vec<Verdict>> {
    let coeff = theory.coeff_ring(order);
    let ctx = OrientedCtx::new(theory.native_orientation(order))?;
    let p3 = Space::projective_space(3, coeff.clone())?;
    let phi = comparison_series(
        &theory.native_orientation(order),
        &theory.reference_orientation(order),
    )?;
    let ref_ctx = OrientedCtx::new(theory.reference_orientation(order))?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x071e + theory.coeff_ring(order).arity() as u64);
    let mut whitney_fail = None;
    for _ in 0..instances {
        let a = random_roots(&mut rng, &p3, 3);
        let b = random_roots(&mut rng, &p3, 3);
        let s = a.sum(&b)?;
        let lhs = classes::total_chern(&s, &ctx)?;
        let rhs = classes::total_chern(&a, &ctx)?.mul(&classes::total_chern(&b, &ctx)?);
        if lhs != rhs {
            whitney_fail = Some((lhs, rhs));
            break;
        }
    }
    let mut todd_fail = None;
    for _ in 0..instances {
        let v = VirtualBundle::new(random_roots(&mut rng, &p3, 2), random_roots(&mut rng, &p3, 2))?;
        let w = VirtualBundle::new(random_roots(&mut rng, &p3, 2), random_roots(&mut rng, &p3, 2))?;
        let vw = VirtualBundle::new(v.plus.sum(&w.plus)?, v.minus.sum(&w.minus)?)?;
        let lhs = classes::todd(&phi, &vw, &ref_ctx)?;
        let rhs = classes::todd(&phi, &v, &ref_ctx)?.mul(&classes::todd(&phi, &w, &ref_ctx)?);
        if lhs != rhs {
            todd_fail = Some((lhs, rhs));
            break;
        }
    }
    let mut out = Vec::new();
    out.push(match whitney_fail {
        None => ok(format!("whitney_sum[{instances} instances]"), "P3", ctx.label()),
        Some((l, r)) => Verdict::compare(
            format!("whitney_sum[{instances} instances]"),
            "P3",
            ctx.label(),
            l.render(),
            r.render(),
            false,
        ),
    });
    out.push(match todd_fail {
        None => ok(format!("todd_multiplicative[{instances} instances]"), "P3", ref_ctx.label()),
        Some((l, r)) => Verdict::compare(
            format!("todd_multiplicative[{instances} instances]"),
            "P3",
            ref_ctx.label(),
            l.render(),
            r.render(),
            false,
        ),
    });
    Ok(out)
}

/// Duality triangularity for every tested projective bundle, in both the
/// reference and native orientations.
pub fn suite_duality(theory: Theory, order: u32) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    let ref_ctx = OrientedCtx::new(theory.reference_orientation(order))?;
    let native_ctx = OrientedCtx::new(theory.native_orientation(order))?;
    for space in structure_spaces(theory, order, 4)? {
        if space.proj_rank().is_none() {
            continue;
        }
        let k = KunnethSquare::new(&space)?;
        for ctx in [&ref_ctx, &native_ctx] {
            match DualityData::new(&k, ctx) {
                Ok(_) => out.push(ok("duality_triangular_unit_diagonal", space.name(), ctx.label())),
                Err(err) => out.push(Verdict::error(
                    "duality_triangular_unit_diagonal",
                    space.name(),
                    ctx.label(),
                    &err,
                )),
            }
        }
    }
    Ok(out)
}

/// Section identity, projection formulas, functoriality and
/// self-intersection checks.
pub fn suite_gysin(theory: Theory, order: u32) -> Result<Vec<Verdict>> {
    let coeff = theory.coeff_ring(order);
    let ctx = OrientedCtx::new(theory.native_orientation(order))?;
    let ref_ctx = OrientedCtx::new(theory.reference_orientation(order))?;
    let mut out = Vec::new();

    // p_* s_* = identity on the full monomial basis, in both class systems
    let pt = Space::point(coeff.clone());
    let p1 = Space::projective_space(1, coeff.clone())?;
    let h = p1.hyperplane().expect("P1");
    let mut sections: Vec<(Space, Embedding)> = Vec::new();
    for orient in [&ref_ctx, &ctx] {
        for rank in 1..=2usize {
            let e = Bundle::trivial(&pt, rank);
            sections.push(Embedding::zero_section(&e, &format!("S{rank}"), "z", orient)?);
        }
        for roots in
            [vec![h.clone()], vec![p1.ring().zero(), h.clone()], vec![h.clone(), h.neg()]]
        {
            let e = Bundle::from_roots(&p1, roots)?;
            sections.push(Embedding::zero_section(&e, "S", "z", orient)?);
        }
        if theory == Theory::Additive {
            break; // the native orientation is the reference one
        }
    }
    for (total, emb) in &sections {
        let orient = if emb.orientation_label() == ctx.label() { &ctx } else { &ref_ctx };
        let push = ProjectionPushforward::new(total, orient)?;
        let mut failed = None;
        for b in emb.source().ring().basis() {
            let x = emb.source().ring().monomial(b, coeff.one());
            let back = push.apply(&pushforward_embedding(emb, &x))?;
            if back != x {
                failed = Some((back, x));
                break;
            }
        }
        out.push(match failed {
            None => ok("section_identity_on_basis", total.name(), emb.orientation_label()),
            Some((l, r)) => Verdict::compare(
                "section_identity_on_basis",
                total.name(),
                emb.orientation_label(),
                l.render(),
                r.render(),
                false,
            ),
        });
    }

    // projection formula, randomized, for both pushforward kinds
    let mut rng = ChaCha8Rng::seed_from_u64(0x9d5);
    let random_elem = |rng: &mut ChaCha8Rng, ring: &crate::algebra::ring::CohRing| {
        let mut x = ring.zero();
        for b in ring.basis() {
            if rng.gen_bool(0.5) {
                x = x.add(&ring.monomial(b, ring.coeff_ring().from_int(rng.gen_range(-3..=3))));
            }
        }
        x
    };
    let e = Bundle::from_roots(&p1, vec![p1.ring().zero(), h.clone()])?;
    let pe = Space::proj_bundle(&e, "PE", "k")?;
    let push = ProjectionPushforward::new(&pe, &ctx)?;
    let mut fail = None;
    for _ in 0..40 {
        let x = random_elem(&mut rng, p1.ring());
        let y = random_elem(&mut rng, pe.ring());
        let lhs = push.apply(&pe.pullback_from_base(&x).mul(&y))?;
        let rhs = x.mul(&push.apply(&y)?);
        if lhs != rhs {
            fail = Some((lhs, rhs));
            break;
        }
    }
    out.push(match fail {
        None => ok("projection_formula_projection[40 instances]", pe.name(), ctx.label()),
        Some((l, r)) => Verdict::compare(
            "projection_formula_projection[40 instances]",
            pe.name(),
            ctx.label(),
            l.render(),
            r.render(),
            false,
        ),
    });

    let p2 = Space::projective_space(2, coeff.clone())?;
    let emb = Embedding::linear(&p1, &p2, &ctx)?;
    let mut fail = None;
    for _ in 0..40 {
        let x = random_elem(&mut rng, p2.ring());
        let z = random_elem(&mut rng, p1.ring());
        let lhs = pushforward_embedding(&emb, &emb.restrict(&x).mul(&z));
        let rhs = x.mul(&pushforward_embedding(&emb, &z));
        if lhs != rhs {
            fail = Some((lhs, rhs));
            break;
        }
    }
    out.push(match fail {
        None => ok("projection_formula_embedding[40 instances]", p2.name(), ctx.label()),
        Some((l, r)) => Verdict::compare(
            "projection_formula_embedding[40 instances]",
            p2.name(),
            ctx.label(),
            l.render(),
            r.render(),
            false,
        ),
    });

    // functoriality: the chain P^0 in P^1 in P^2 -> pt versus the direct
    // embedding, on every basis class of the source
    let p0 = Space::projective_space(0, coeff.clone())?;
    let i01 = Embedding::linear(&p0, &p1, &ctx)?;
    let i12 = Embedding::linear(&p1, &p2, &ctx)?;
    let i02 = Embedding::linear(&p0, &p2, &ctx)?;
    for b in p0.ring().basis() {
        let z = p0.ring().monomial(b, coeff.one());
        let chain = pushforward_embedding(&i12, &pushforward_embedding(&i01, &z));
        let direct = pushforward_embedding(&i02, &z);
        out.push(Verdict::compare(
            format!("gysin_functoriality[z={z}]"),
            "P2",
            ctx.label(),
            chain.render(),
            direct.render(),
            chain == direct,
        ));
        let push1 = ProjectionPushforward::new(&p1, &ctx)?;
        let push2 = ProjectionPushforward::new(&p2, &ctx)?;
        let via1 = push1.apply(&pushforward_embedding(&i01, &z))?;
        let via2 = push2.apply(&direct)?;
        out.push(Verdict::compare(
            format!("factorization_independence[z={z}]"),
            "pt",
            ctx.label(),
            via1.render(),
            via2.render(),
            via1 == via2,
        ));
    }

    // self-intersection for every constructor embedding
    for (_, emb) in &sections {
        out.push(gysin::self_intersection_check(emb, &ctx));
    }
    for e in [&i01, &i12, &i02] {
        out.push(gysin::self_intersection_check(e, &ctx));
    }
    let (_, diag) = gysin::diagonal_embedding(&p1, &ctx)?;
    out.push(gysin::self_intersection_check(&diag, &ctx));

    // excess classes: equal normals give 1; against a zero-rank inner
    // normal the excess is the Euler class of the outer normal
    let excess_same = classes::excess_class(&i01, &i01, &ctx)?;
    out.push(Verdict::compare(
        "excess_equal_normals",
        p1.name(),
        ctx.label(),
        excess_same.render(),
        "1",
        excess_same == p0.ring().one(),
    ));
    let idp0 = Embedding::identity(&p0, &ctx)?;
    let excess_full = classes::excess_class(&i02, &idp0, &ctx)?;
    let expect = classes::euler(i02.normal(), &ctx)?;
    out.push(Verdict::compare(
        "excess_self_intersection",
        p2.name(),
        ctx.label(),
        excess_full.render(),
        expect.render(),
        excess_full == expect,
    ));
    Ok(out)
}

/// The full Riemann-Roch battery: closed immersions, projections, lci
/// composites and factorization independence.
pub fn suite_grr(theory: Theory, max_dim: u32, order: u32) -> Result<Vec<Verdict>> {
    let mut out = rr::sweep_rr_closed(theory, max_dim, order)?;
    out.extend(rr::sweep_rr_projection(theory, max_dim, order)?);
    out.extend(rr::sweep_grr(theory, max_dim, order)?);
    Ok(out)
}

/// Hirzebruch numbers against the independent binomial oracle.
pub fn suite_hrr(order: u32) -> Vec<Verdict> {
    rr::sweep_hrr(order)
}

/// Everything, for `check all`.
pub fn suite_all(theory: Theory, max_dim: u32, order: u32) -> Result<Vec<Verdict>> {
    let mut out = suite_fgl(theory, order)?;
    out.extend(suite_pbf(theory, order)?);
    out.extend(suite_thom(theory, order)?);
    out.extend(suite_classes(theory, order, 100)?);
    out.extend(suite_duality(theory, order)?);
    out.extend(suite_gysin(theory, order)?);
    out.extend(suite_grr(theory, max_dim, order)?);
    out.extend(suite_hrr(order));
    Ok(out)
}

/// Dispatch a named check suite.
pub fn run_suite(subject: &str, theory: Theory, max_dim: u32, order: u32) -> Result<Vec<Verdict>> {
    match subject {
        "fgl" => suite_fgl(theory, order),
        "pbf" => suite_pbf(theory, order),
        "thom" => suite_thom(theory, order),
        "classes" => suite_classes(theory, order, 100),
        "duality" => suite_duality(theory, order),
        "gysin" => suite_gysin(theory, order),
        "grr" => suite_grr(theory, max_dim, order),
        "hrr" => Ok(suite_hrr(order)),
        "all" => suite_all(theory, max_dim, order),
        other => Err(crate::error::EngineError::UnknownSymbol { name: other.to_string() }),
    }
}
