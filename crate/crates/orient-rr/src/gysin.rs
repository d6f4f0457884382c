//! Gysin pushforwards.
//!
//! Closed immersions push forward by lift-then-multiply with the
//! fundamental class. Projective-bundle projections push forward as the
//! transpose of pullback with respect to the duality co-pairing: the
//! diagonal class of the Künneth square is expanded over the monomial
//! basis, giving a matrix that is triangular with unit (anti-)diagonal
//! after reducing coefficients to generator degree zero; the resulting
//! linear system is solved exactly by back-substitution plus a finite
//! nilpotent correction.

#![allow(clippy::needless_range_loop)] // index-based matrix code reads better here

use crate::algebra::coeff::Coeff;
use crate::algebra::ring::{MonomialEmbed, RingElem, RingMap};
use crate::classes::{self, OrientedCtx};
use crate::error::{EngineError, Result};
use crate::report::Verdict;
use crate::space::{
    relative_tangent, universal_quotient, Bundle, Embedding, EmbeddingKind, Space, SpaceKind,
};

/// The fiber square `P x_X P` of a projective bundle, realized as the
/// projectivization of the pulled-back bundle over `P`. Its ring is free
/// of rank `r^2` over the base ring on the monomials `h1^i h2^j`.
#[derive(Debug, Clone)]
pub struct KunnethSquare {
    proj: Space,
    square: Space,
    base: Space,
    rank: usize,
    /// generator index of `h1` (the first factor's hyperplane class)
    g1: usize,
    /// generator index of `h2`
    g2: usize,
}

impl KunnethSquare {
    pub fn new(proj: &Space) -> Result<KunnethSquare> {
        let (base, bundle, g1) = match proj.kind() {
            SpaceKind::ProjBundle { base, bundle, gen_index, .. } => {
                (base.clone(), bundle.clone(), *gen_index)
            }
            SpaceKind::Point => {
                return Err(EngineError::Construction {
                    reason: format!("`{}` is not a projective bundle", proj.name()),
                })
            }
        };
        let upstairs = bundle.pullback_to(proj)?;
        let g1_name = proj.ring().gen_name(g1).to_string();
        let mut square = None;
        for suffix in ["2", "22", "222"] {
            let gen = format!("{g1_name}{suffix}");
            if proj.ring().gen_index(&gen).is_none() {
                square = Some(Space::proj_bundle(
                    &upstairs,
                    &format!("{}x{}", proj.name(), proj.name()),
                    &gen,
                )?);
                break;
            }
        }
        let square = square.ok_or_else(|| EngineError::Construction {
            reason: "could not pick a fresh generator name for the square".into(),
        })?;
        let rank = bundle.rank();
        let g2 = square.ring().num_gens() - 1;
        Ok(KunnethSquare { proj: proj.clone(), square, base, rank, g1, g2 })
    }

    /// Rebuild the wrapper around an existing square space (used when
    /// recomputing duality data in a second orientation).
    pub fn attach(proj: &Space, square: &Space) -> Result<KunnethSquare> {
        let (base, g1) = match proj.kind() {
            SpaceKind::ProjBundle { base, gen_index, .. } => (base.clone(), *gen_index),
            SpaceKind::Point => {
                return Err(EngineError::Construction {
                    reason: format!("`{}` is not a projective bundle", proj.name()),
                })
            }
        };
        let rank = proj.proj_rank().expect("projective bundle");
        match square.kind() {
            SpaceKind::ProjBundle { base: b, rank: r, .. }
                if b == proj && *r as usize == rank => {}
            _ => {
                return Err(EngineError::Construction {
                    reason: format!("`{}` is not the square of `{}`", square.name(), proj.name()),
                })
            }
        }
        let g2 = square.ring().num_gens() - 1;
        Ok(KunnethSquare { proj: proj.clone(), square: square.clone(), base, rank, g1, g2 })
    }

    pub fn proj(&self) -> &Space {
        &self.proj
    }

    pub fn square(&self) -> &Space {
        &self.square
    }

    pub fn base(&self) -> &Space {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Pullback along the first projection `P x_X P -> P`.
    pub fn factor1(&self, x: &RingElem) -> RingElem {
        self.square.pullback_from_base(x)
    }

    /// Pullback along the second projection: `h1` goes to `h2`.
    pub fn factor2(&self, x: &RingElem) -> Result<RingElem> {
        let pr = self.proj.ring();
        let mut map: Vec<usize> = (0..pr.num_gens()).collect();
        map[self.g1] = self.g2;
        let emb = MonomialEmbed::new(pr.clone(), self.square.ring().clone(), map)?;
        Ok(emb.apply(x))
    }

    /// `h1` as an element of the square's ring.
    pub fn h1(&self) -> RingElem {
        self.square.ring().gen(self.g1)
    }

    /// `h2` as an element of the square's ring.
    pub fn h2(&self) -> RingElem {
        self.square.ring().gen(self.g2)
    }

    /// Decompose a square-ring element over the basis `h1^i h2^j` with
    /// base-ring coefficients.
    pub fn coords(&self, x: &RingElem) -> Vec<Vec<RingElem>> {
        let r = self.rank;
        let br = self.base.ring();
        let mut out = vec![vec![br.zero(); r]; r];
        for (e, c) in x.terms() {
            let i = e[self.g1] as usize;
            let j = e[self.g2] as usize;
            let mut be = e.clone();
            be.truncate(br.num_gens());
            let mono = br.monomial(be, c.clone());
            out[i][j] = out[i][j].add(&mono);
        }
        out
    }

    /// Decompose an element of `E(P)` over the basis `h1^k` with base-ring
    /// coefficients.
    pub fn proj_coords(&self, x: &RingElem) -> Vec<RingElem> {
        let r = self.rank;
        let br = self.base.ring();
        let mut out = vec![br.zero(); r];
        for (e, c) in x.terms() {
            let k = e[self.g1] as usize;
            let mut be = e.clone();
            be.truncate(br.num_gens());
            let mono = br.monomial(be, c.clone());
            out[k] = out[k].add(&mono);
        }
        out
    }
}

/// The diagonal class of the Künneth square: the transversal zero-locus
/// class of `Hom(lambda_1, xi_2)`, a bundle of rank `r - 1`. Restricting
/// both hyperplane classes to the diagonal recovers the Euler class of the
/// relative tangent bundle.
pub fn diagonal_class(k: &KunnethSquare, ctx: &OrientedCtx) -> Result<RingElem> {
    let lambda1_dual = Bundle::line(&k.square, k.h1().neg())?;
    let xi = universal_quotient(&k.proj)?;
    let xi2 = {
        let pr = k.proj.ring();
        let mut map: Vec<usize> = (0..pr.num_gens()).collect();
        map[k.g1] = k.g2;
        let emb = MonomialEmbed::new(pr.clone(), k.square.ring().clone(), map)?;
        let classes: Vec<RingElem> =
            (1..=xi.rank()).map(|i| Ok(emb.apply(&xi.chern_ref(i)?))).collect::<Result<_>>()?;
        Bundle::from_chern_data(&k.square, xi.rank(), classes)?
    };
    classes::top_chern_line_tensor(&lambda1_dual, &xi2, ctx)
}

/// The duality data of a projective bundle in a given orientation: the
/// diagonal class, its coefficient matrix `C` over the base ring
/// (`diag = sum C_ij h1^i h2^j`), and the generator-degree-zero reduction
/// used for back-substitution.
#[derive(Debug, Clone)]
pub struct DualityData {
    kunneth: KunnethSquare,
    orientation: String,
    diag: RingElem,
    c: Vec<Vec<RingElem>>,
    /// inverse of the gen-degree-0 reduction of `c`, over the coefficient ring
    cbar_inv: Vec<Vec<Coeff>>,
}

impl DualityData {
    /// Compute and validate duality data. The structural assertions are
    /// the computable form of the triangularity of the duality matrix:
    /// with columns reversed, the reduced matrix is lower-triangular with
    /// an invertible diagonal; violations are internal-inconsistency
    /// errors, never silently accepted.
    pub fn new(k: &KunnethSquare, ctx: &OrientedCtx) -> Result<DualityData> {
        let diag = diagonal_class(k, ctx)?;
        let c = k.coords(&diag);
        let r = k.rank;
        let cr = k.base.ring().coeff_ring().clone();
        // gen-degree-0 reduction
        let mut cbar = vec![vec![cr.zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                cbar[i][j] = c[i][j].gen_zero_part();
            }
        }
        for (i, row) in cbar.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if i + j < r - 1 && !entry.is_zero() {
                    return Err(EngineError::Internal {
                        reason: format!(
                            "duality matrix not triangular: reduced entry ({i},{j}) = {}",
                            cr.render(entry)
                        ),
                    });
                }
                if i + j == r - 1 && !cr.is_unit(entry) {
                    return Err(EngineError::Internal {
                        reason: format!(
                            "duality matrix diagonal entry ({i},{j}) = {} is not a unit",
                            cr.render(entry)
                        ),
                    });
                }
            }
        }
        // invert the reduction: M[i][j'] = cbar[i][r-1-j'] is lower
        // triangular with unit diagonal; forward-substitute M^{-1} and
        // un-permute.
        let m = |i: usize, jp: usize| &cbar[i][r - 1 - jp];
        let mut minv = vec![vec![cr.zero(); r]; r];
        for col in 0..r {
            // solve M * x = e_col column by column
            let mut x = vec![cr.zero(); r];
            for i in 0..r {
                let mut rhs = if i == col { cr.one() } else { cr.zero() };
                for (j, xj) in x.iter().enumerate().take(i) {
                    rhs = cr.sub(&rhs, &cr.mul(m(i, j), xj)?);
                }
                x[i] = cr.mul(&cr.inverse(m(i, i))?, &rhs)?;
            }
            for i in 0..r {
                minv[i][col] = x[i].clone();
            }
        }
        // cbar = M P with the column reversal P, so cbar^{-1} = P M^{-1}
        let mut cbar_inv = vec![vec![cr.zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                cbar_inv[i][j] = minv[r - 1 - i][j].clone();
            }
        }
        Ok(DualityData {
            kunneth: k.clone(),
            orientation: ctx.label().to_string(),
            diag,
            c,
            cbar_inv,
        })
    }

    pub fn kunneth(&self) -> &KunnethSquare {
        &self.kunneth
    }

    pub fn orientation(&self) -> &str {
        &self.orientation
    }

    pub fn diagonal(&self) -> &RingElem {
        &self.diag
    }

    pub fn matrix(&self) -> &Vec<Vec<RingElem>> {
        &self.c
    }

    /// Solve `x . C = a` over the base ring: back-substitution through the
    /// reduced matrix plus a finite Neumann correction for the
    /// generator-positive part. The residual is verified exactly.
    pub fn solve(&self, a: &[RingElem]) -> Result<Vec<RingElem>> {
        let r = self.kunneth.rank;
        let br = self.kunneth.base.ring().clone();
        let apply_rinv = |v: &[RingElem]| -> Vec<RingElem> {
            (0..r)
                .map(|j| {
                    let mut acc = br.zero();
                    for (k, vk) in v.iter().enumerate() {
                        acc = acc.add(&vk.scale(&self.cbar_inv[k][j]));
                    }
                    acc
                })
                .collect()
        };
        let mul_n = |v: &[RingElem]| -> Vec<RingElem> {
            (0..r)
                .map(|j| {
                    let mut acc = br.zero();
                    for (k, vk) in v.iter().enumerate() {
                        let n_kj = self.c[k][j].sub(&br.from_coeff(self.c[k][j].gen_zero_part()));
                        acc = acc.add(&vk.mul(&n_kj));
                    }
                    acc
                })
                .collect()
        };
        let mut x = apply_rinv(a);
        for _ in 0..=br.nilpotency_bound() + 1 {
            let xn = mul_n(&x);
            let rhs: Vec<RingElem> = (0..r).map(|j| a[j].sub(&xn[j])).collect();
            let next = apply_rinv(&rhs);
            if next == x {
                break;
            }
            x = next;
        }
        // exact residual check
        for j in 0..r {
            let mut acc = br.zero();
            for (k, xk) in x.iter().enumerate() {
                acc = acc.add(&xk.mul(&self.c[k][j]));
            }
            if acc != a[j] {
                return Err(EngineError::Internal {
                    reason: format!("duality solve residual nonzero in column {j}"),
                });
            }
        }
        Ok(x)
    }
}

/// Pushforward along a closed immersion: lift then multiply by the
/// fundamental class. Independent of the lift because the fundamental
/// class kills the kernel of restriction (a constructor invariant).
pub fn pushforward_embedding(e: &Embedding, z: &RingElem) -> RingElem {
    e.lift(z).mul(e.fdl())
}

/// A reusable projection pushforward: duality data computed once.
pub struct ProjectionPushforward {
    duality: DualityData,
}

impl ProjectionPushforward {
    pub fn new(p: &Space, ctx: &OrientedCtx) -> Result<ProjectionPushforward> {
        let k = KunnethSquare::new(p)?;
        Ok(ProjectionPushforward { duality: DualityData::new(&k, ctx)? })
    }

    pub fn from_duality(duality: DualityData) -> ProjectionPushforward {
        ProjectionPushforward { duality }
    }

    pub fn duality(&self) -> &DualityData {
        &self.duality
    }

    /// `p_*(alpha)`: solve the duality system and return the coordinate of
    /// the solved functional at 1.
    pub fn apply(&self, alpha: &RingElem) -> Result<RingElem> {
        let a = self.duality.kunneth.proj_coords(alpha);
        let x = self.duality.solve(&a)?;
        Ok(x[0].clone())
    }
}

/// One-shot projection pushforward.
pub fn pushforward_projection(p: &Space, alpha: &RingElem, ctx: &OrientedCtx) -> Result<RingElem> {
    ProjectionPushforward::new(p, ctx)?.apply(alpha)
}

/// Pushforward of a projective lci morphism through the factorization
/// `source -> P -> base`: `f_* = p_* i_*`.
pub fn pushforward_lci(e: &Embedding, y: &RingElem, ctx: &OrientedCtx) -> Result<RingElem> {
    let mid = pushforward_embedding(e, y);
    pushforward_projection(e.target(), &mid, ctx)
}

/// The diagonal embedding of a projective bundle into its Künneth square.
/// The normal bundle is the relative tangent bundle; the fundamental class
/// is the diagonal class.
pub fn diagonal_embedding(p: &Space, ctx: &OrientedCtx) -> Result<(KunnethSquare, Embedding)> {
    let k = KunnethSquare::new(p)?;
    let e = diagonal_embedding_into(&k, ctx)?;
    Ok((k, e))
}

/// Diagonal embedding into an existing square.
pub fn diagonal_embedding_into(k: &KunnethSquare, ctx: &OrientedCtx) -> Result<Embedding> {
    let pr = k.proj().ring().clone();
    let sq = k.square().ring().clone();
    let mut images: Vec<RingElem> = (0..pr.num_gens()).map(|i| pr.gen(i)).collect();
    images.push(pr.gen(k.g1)); // h2 restricts to the same hyperplane class
    let restrict = RingMap::new(sq.clone(), pr.clone(), images);
    let lift = MonomialEmbed::new(pr, sq, (0..k.proj().ring().num_gens()).collect())?;
    let fdl = diagonal_class(k, ctx)?;
    let normal = relative_tangent(k.proj())?;
    Embedding::build(
        k.proj().clone(),
        k.square().clone(),
        restrict,
        lift,
        fdl,
        normal,
        EmbeddingKind::Diagonal { proj: k.proj().clone() },
        ctx,
    )
}

/// Rebuild an embedding's class data in another orientation. The spaces
/// and module maps are orientation-independent; only the fundamental class
/// changes.
pub fn rebuild_embedding(e: &Embedding, ctx: &OrientedCtx) -> Result<Embedding> {
    match e.kind() {
        EmbeddingKind::Identity => Embedding::identity(e.source(), ctx),
        EmbeddingKind::ZeroSection { bundle } => {
            Embedding::zero_section_into(bundle, e.target(), ctx)
        }
        EmbeddingKind::Linear => Embedding::linear(e.source(), e.target(), ctx),
        EmbeddingKind::Diagonal { proj } => {
            let k = KunnethSquare::attach(proj, e.target())?;
            diagonal_embedding_into(&k, ctx)
        }
    }
}

/// Self-intersection report: restricting the pushforward of 1 along the
/// embedding must give the Euler class of the normal bundle.
pub fn self_intersection_check(e: &Embedding, ctx: &OrientedCtx) -> Verdict {
    let lhs = e.restrict(&pushforward_embedding(e, &e.source().ring().one()));
    match classes::euler(e.normal(), ctx) {
        Ok(rhs) => Verdict::compare(
            "self_intersection",
            e.target().name(),
            ctx.label(),
            &lhs,
            &rhs,
            lhs == rhs,
        ),
        Err(err) => Verdict::error("self_intersection", e.target().name(), ctx.label(), &err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::CoeffRing;
    use crate::fgl::Theory;

    fn ctx(theory: Theory, order: u32) -> OrientedCtx {
        OrientedCtx::new(theory.native_orientation(order)).unwrap()
    }

    fn ref_ctx(theory: Theory, order: u32) -> OrientedCtx {
        OrientedCtx::new(theory.reference_orientation(order)).unwrap()
    }

    #[test]
    fn kunneth_square_ranks() {
        // P^1: rank 4 over Q; P^2: rank 9; P(E) rank 2 over P^1: 4 over
        // the base, 8 over Q
        let p1 = Space::projective_space(1, CoeffRing::Rationals).unwrap();
        let k = KunnethSquare::new(&p1).unwrap();
        assert_eq!(k.square().ring().rank(), 4);

        let p2 = Space::projective_space(2, CoeffRing::Rationals).unwrap();
        let k = KunnethSquare::new(&p2).unwrap();
        assert_eq!(k.square().ring().rank(), 9);

        let h = p1.hyperplane().unwrap();
        let e = Bundle::from_roots(&p1, vec![p1.ring().zero(), h]).unwrap();
        let pe = Space::proj_bundle(&e, "PE", "k").unwrap();
        let kq = KunnethSquare::new(&pe).unwrap();
        assert_eq!(kq.rank(), 2);
        assert_eq!(kq.square().ring().rank(), 8);
    }

    #[test]
    fn diagonal_class_p1_additive() {
        let c = ref_ctx(Theory::Additive, 10);
        let p1 = Space::projective_space(1, CoeffRing::Rationals).unwrap();
        let k = KunnethSquare::new(&p1).unwrap();
        let d = diagonal_class(&k, &c).unwrap();
        // -h1 - h2 in this sign convention
        assert_eq!(d, k.h1().neg().sub(&k.h2()));
        assert_eq!(d.weight(), Some(1));
    }

    #[test]
    fn diagonal_restricts_to_relative_tangent_euler() {
        for theory in [Theory::Additive, Theory::Multiplicative, Theory::Universal(2)] {
            let c = ctx(theory, 10);
            let p2 = Space::projective_space(2, c.coeff_ring().clone()).unwrap();
            let (k, emb) = diagonal_embedding(&p2, &c).unwrap();
            let tp = relative_tangent(&p2).unwrap();
            let euler_tp = classes::euler(&tp, &c).unwrap();
            assert_eq!(emb.restrict(&diagonal_class(&k, &c).unwrap()), euler_tp);
        }
    }

    #[test]
    fn duality_matrix_shapes() {
        // P^1 additive: C anti-diagonal with -1 entries
        let c = ref_ctx(Theory::Additive, 10);
        let p1 = Space::projective_space(1, CoeffRing::Rationals).unwrap();
        let k = KunnethSquare::new(&p1).unwrap();
        let d = DualityData::new(&k, &c).unwrap();
        let m = d.matrix();
        assert!(m[0][0].is_zero());
        assert!(m[1][1].is_zero());
        assert_eq!(m[0][1], k.base().ring().from_int(-1));
        assert_eq!(m[1][0], k.base().ring().from_int(-1));

        // P^2 additive: anti-diagonal +1
        let p2 = Space::projective_space(2, CoeffRing::Rationals).unwrap();
        let k = KunnethSquare::new(&p2).unwrap();
        let d = DualityData::new(&k, &c).unwrap();
        let m = d.matrix();
        for i in 0..3 {
            for j in 0..3 {
                if i + j == 2 {
                    assert_eq!(m[i][j], k.base().ring().from_int(1));
                } else {
                    assert!(m[i][j].is_zero(), "entry ({i},{j}) = {}", m[i][j]);
                }
            }
        }

        // r = 1: C = [1]
        let pt = Space::point(CoeffRing::Rationals);
        let line = Bundle::trivial(&pt, 1);
        let p0 = Space::proj_bundle(&line, "P0", "h").unwrap();
        let k = KunnethSquare::new(&p0).unwrap();
        let d = DualityData::new(&k, &c).unwrap();
        assert_eq!(d.matrix()[0][0], pt.ring().one());
    }

    #[test]
    fn projection_pushforward_on_projective_spaces() {
        // additive P^1: p_*(1) = 0, p_*(h) = -1
        let c = ref_ctx(Theory::Additive, 10);
        let p1 = Space::projective_space(1, CoeffRing::Rationals).unwrap();
        let h = p1.hyperplane().unwrap();
        let push = ProjectionPushforward::new(&p1, &c).unwrap();
        assert!(push.apply(&p1.ring().one()).unwrap().is_zero());
        let minus_one = push.apply(&h).unwrap();
        assert_eq!(minus_one.render(), "-1");

        // additive P^2: p_*(h^2) = 1
        let p2 = Space::projective_space(2, CoeffRing::Rationals).unwrap();
        let h = p2.hyperplane().unwrap();
        let push = ProjectionPushforward::new(&p2, &c).unwrap();
        assert!(push.apply(&p2.ring().one()).unwrap().is_zero());
        assert!(push.apply(&h).unwrap().is_zero());
        assert_eq!(push.apply(&h.pow(2)).unwrap().render(), "1");
    }

    #[test]
    fn projection_pushforward_multiplicative_p1() {
        // p_*(1) = beta in the multiplicative orientation
        let c = ctx(Theory::Multiplicative, 10);
        let p1 = Space::projective_space(1, CoeffRing::laurent_beta()).unwrap();
        let push = ProjectionPushforward::new(&p1, &c).unwrap();
        let v = push.apply(&p1.ring().one()).unwrap();
        let beta = CoeffRing::laurent_beta().beta(1).unwrap();
        assert_eq!(v, v.ring().from_coeff(beta));
    }

    #[test]
    fn section_identity_on_basis() {
        // p_* s_* = identity on all of E(X) for the canonical section of
        // P(E + 1), E of rank <= 2 over P^1
        for theory in [Theory::Additive, Theory::Multiplicative] {
            let c = ctx(theory, 10);
            let p1 = Space::projective_space(1, c.coeff_ring().clone()).unwrap();
            let h = p1.hyperplane().unwrap();
            for roots in [vec![h.clone()], vec![h.clone(), h.neg()]] {
                let e = Bundle::from_roots(&p1, roots).unwrap();
                let (total, emb) = Embedding::zero_section(&e, "T", "z", &c).unwrap();
                let push = ProjectionPushforward::new(&total, &c).unwrap();
                for b in p1.ring().basis() {
                    let x = p1.ring().monomial(b, p1.ring().coeff_ring().one());
                    let pushed = push.apply(&pushforward_embedding(&emb, &x)).unwrap();
                    assert_eq!(pushed, x, "theory {}", theory.label());
                }
            }
        }
    }

    #[test]
    fn pushforward_unit_is_fundamental_class() {
        let c = ref_ctx(Theory::Additive, 10);
        let pt = Space::point(CoeffRing::Rationals);
        let e = Bundle::trivial(&pt, 1);
        let (total, emb) = Embedding::zero_section(&e, "P1", "h", &c).unwrap();
        // zero section of the trivial line on a point into P^1: 1 -> -h
        let pushed = pushforward_embedding(&emb, &pt.ring().one());
        assert_eq!(pushed, total.hyperplane().unwrap().neg());
    }

    #[test]
    fn projection_formula_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let c = ctx(Theory::Multiplicative, 10);
        let p1 = Space::projective_space(1, CoeffRing::laurent_beta()).unwrap();
        let h = p1.hyperplane().unwrap();
        let e = Bundle::from_roots(&p1, vec![p1.ring().zero(), h.clone()]).unwrap();
        let pe = Space::proj_bundle(&e, "PE", "k").unwrap();
        let push = ProjectionPushforward::new(&pe, &c).unwrap();

        let rand_elem = |rng: &mut rand_chacha::ChaCha8Rng, ring: &crate::algebra::ring::CohRing| {
            let mut x = ring.zero();
            for b in ring.basis() {
                if rng.gen_bool(0.5) {
                    x = x.add(&ring.monomial(b, ring.coeff_ring().from_int(rng.gen_range(-3..=3))));
                }
            }
            x
        };
        for _ in 0..25 {
            let x = rand_elem(&mut rng, p1.ring());
            let y = rand_elem(&mut rng, pe.ring());
            let lhs = push.apply(&pe.pullback_from_base(&x).mul(&y)).unwrap();
            let rhs = x.mul(&push.apply(&y).unwrap());
            assert_eq!(lhs, rhs);
        }

        // and for an embedding pushforward
        let cq = ref_ctx(Theory::Additive, 10);
        let p1q = Space::projective_space(1, CoeffRing::Rationals).unwrap();
        let p2q = Space::projective_space(2, CoeffRing::Rationals).unwrap();
        let emb = Embedding::linear(&p1q, &p2q, &cq).unwrap();
        for _ in 0..25 {
            let x = rand_elem(&mut rng, p2q.ring());
            let z = rand_elem(&mut rng, p1q.ring());
            let lhs = pushforward_embedding(&emb, &emb.restrict(&x).mul(&z));
            let rhs = x.mul(&pushforward_embedding(&emb, &z));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn linear_embedding_fundamental_classes() {
        let c = ref_ctx(Theory::Additive, 10);
        // P^0 in P^1: fdl = -h
        let p0 = Space::projective_space(0, CoeffRing::Rationals).unwrap();
        let p1 = Space::projective_space(1, CoeffRing::Rationals).unwrap();
        let e = Embedding::linear(&p0, &p1, &c).unwrap();
        assert_eq!(e.fdl(), &p1.hyperplane().unwrap().neg());
        // P^1 in P^2 has codimension 1: fdl = -h; P^0 in P^2: (-h)^2 = h^2
        let p2 = Space::projective_space(2, CoeffRing::Rationals).unwrap();
        let e = Embedding::linear(&p1, &p2, &c).unwrap();
        assert_eq!(e.fdl(), &p2.hyperplane().unwrap().neg());
        let e = Embedding::linear(&p0, &p2, &c).unwrap();
        assert_eq!(e.fdl(), &p2.hyperplane().unwrap().pow(2));
        // m = n: identity, fdl = 1
        let e = Embedding::linear(&p1, &p1, &c).unwrap();
        assert_eq!(e.fdl(), &p1.ring().one());
        assert_eq!(e.codim(), 0);
    }

    #[test]
    fn composite_gysin_two_factorizations() {
        // (P^0 -> P^1 -> P^2) on 1 equals (P^0 -> P^2) on 1, both pushed to
        // the point through the two projections
        let c = ref_ctx(Theory::Additive, 10);
        let q = CoeffRing::Rationals;
        let p0 = Space::projective_space(0, q.clone()).unwrap();
        let p1 = Space::projective_space(1, q.clone()).unwrap();
        let p2 = Space::projective_space(2, q.clone()).unwrap();
        let i01 = Embedding::linear(&p0, &p1, &c).unwrap();
        let i12 = Embedding::linear(&p1, &p2, &c).unwrap();
        let i02 = Embedding::linear(&p0, &p2, &c).unwrap();

        // closed-immersion functoriality in the middle space
        let via_chain = pushforward_embedding(&i12, &pushforward_embedding(&i01, &p0.ring().one()));
        let direct = pushforward_embedding(&i02, &p0.ring().one());
        assert_eq!(via_chain, direct);

        // through the projections to the point
        let push1 = ProjectionPushforward::new(&p1, &c).unwrap();
        let push2 = ProjectionPushforward::new(&p2, &c).unwrap();
        let a = push1.apply(&pushforward_embedding(&i01, &p0.ring().one())).unwrap();
        let b = push2.apply(&direct).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn diagonal_embedding_over_nontrivial_base() {
        // P(O + O(h)) over P^1: the duality matrix picks up base-class
        // entries, and the diagonal is a section of the square's own
        // projection, so pushing forward and projecting is the identity
        let c = ctx(Theory::Multiplicative, 10);
        let p1 = Space::projective_space(1, CoeffRing::laurent_beta()).unwrap();
        let h = p1.hyperplane().unwrap();
        let e = Bundle::from_roots(&p1, vec![p1.ring().zero(), h.clone()]).unwrap();
        let pe = Space::proj_bundle(&e, "PE", "k").unwrap();
        let (k, emb) = diagonal_embedding(&pe, &c).unwrap();
        assert_eq!(emb.codim(), 1);
        // restriction along the diagonal gives the relative tangent Euler class
        let tp = relative_tangent(&pe).unwrap();
        assert_eq!(emb.restrict(emb.fdl()), classes::euler(&tp, &c).unwrap());
        // pushing 1 forward along the diagonal gives the diagonal class
        assert_eq!(pushforward_embedding(&emb, &pe.ring().one()), *emb.fdl());
        // pi_* delta_* = identity on the whole module basis
        let push = ProjectionPushforward::new(k.square(), &c).unwrap();
        for b in pe.ring().basis() {
            let x = pe.ring().monomial(b, pe.ring().coeff_ring().one());
            let back = push.apply(&pushforward_embedding(&emb, &x)).unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn self_intersection_reports() {
        let c = ctx(Theory::Multiplicative, 10);
        let p1 = Space::projective_space(1, CoeffRing::laurent_beta()).unwrap();
        let h = p1.hyperplane().unwrap();
        let e = Bundle::line(&p1, h.clone()).unwrap();
        let (_, emb) = Embedding::zero_section(&e, "T", "z", &c).unwrap();
        let v = self_intersection_check(&emb, &c);
        assert!(v.passed(), "{:?}", v);
    }

    #[test]
    fn duality_solve_matches_adjugate_oracle() {
        // brute-force oracle: invert the full matrix C by cofactor
        // expansion over the base ring and compare the x0 coordinate
        let c = ctx(Theory::Multiplicative, 10);
        let p1 = Space::projective_space(1, CoeffRing::laurent_beta()).unwrap();
        let h = p1.hyperplane().unwrap();
        let e = Bundle::from_roots(&p1, vec![p1.ring().zero(), h.clone()]).unwrap();
        let pe = Space::proj_bundle(&e, "PE", "k").unwrap();
        let push = ProjectionPushforward::new(&pe, &c).unwrap();
        let cm = push.duality().matrix();
        let br = p1.ring().clone();
        // 2x2 inverse via adjugate
        let det = cm[0][0].mul(&cm[1][1]).sub(&cm[0][1].mul(&cm[1][0]));
        let det_inv = det.inverse().unwrap();
        let inv = [
            [cm[1][1].mul(&det_inv), cm[0][1].neg().mul(&det_inv)],
            [cm[1][0].neg().mul(&det_inv), cm[0][0].mul(&det_inv)],
        ];
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let mut alpha = pe.ring().zero();
            for b in pe.ring().basis() {
                if rng.gen_bool(0.5) {
                    alpha = alpha.add(
                        &pe.ring()
                            .monomial(b, br.coeff_ring().from_int(rng.gen_range(-3..=3))),
                    );
                }
            }
            let k = KunnethSquare::new(&pe).unwrap();
            let a = k.proj_coords(&alpha);
            // x = a . C^{-1}; x0 = a0 inv[0][0] + a1 inv[1][0]
            let x0 = a[0].mul(&inv[0][0]).add(&a[1].mul(&inv[1][0]));
            assert_eq!(push.apply(&alpha).unwrap(), x0);
        }
    }

    #[test]
    fn pushforward_weights() {
        // embedding raises weight by the codimension; projection lowers it
        // by the relative dimension
        let c = ref_ctx(Theory::Additive, 10);
        let q = CoeffRing::Rationals;
        let p1 = Space::projective_space(1, q.clone()).unwrap();
        let p3 = Space::projective_space(3, q.clone()).unwrap();
        let emb = Embedding::linear(&p1, &p3, &c).unwrap();
        let h = p1.hyperplane().unwrap();
        let pushed = pushforward_embedding(&emb, &h);
        assert_eq!(pushed.weight(), Some(1 + 2));
        let push = ProjectionPushforward::new(&p3, &c).unwrap();
        let down = push.apply(&p3.hyperplane().unwrap().pow(3)).unwrap();
        assert_eq!(down.weight(), Some(0));
    }
}
