//! Characteristic classes for a chosen orientation: Chern, first Chern of
//! tensor products through the group law, Thom, Euler, excess, and Todd —
//! all as exact elements of the ambient cohomology ring.
//!
//! The orientation context fixes the first-Chern normalization
//! `c1(L) = theta(x)`, where `x` is the reference weight-1 class of `L`.
//! Classes of non-split (`ChernData`) bundles are computed by formal-root
//! transport: introduce roots, apply the relevant series factor per root,
//! reduce symmetrically, substitute the stored classes. Nilpotency makes
//! every step exact; when the truncation order cannot guarantee that, the
//! operation refuses instead of truncating.

use crate::algebra::coeff::CoeffRing;
use crate::algebra::ring::{CohRing, RingElem};
use crate::algebra::series::Series;
use crate::algebra::symmetric::{elementary_of, SymPoly};
use crate::error::{EngineError, Result};
use crate::fgl::{FormalGroupLaw, Orientation};
use crate::space::{Bundle, BundleData, Space, VirtualBundle};

/// An orientation together with its induced group law and formal inverse,
/// computed once. Context switching never touches the underlying rings.
#[derive(Debug, Clone)]
pub struct OrientedCtx {
    orientation: Orientation,
    law: FormalGroupLaw,
    law_inverse: Series,
}

impl OrientedCtx {
    pub fn new(orientation: Orientation) -> Result<OrientedCtx> {
        let law = orientation.induced_law()?;
        let law_inverse = law.inverse_series()?;
        Ok(OrientedCtx { orientation, law, law_inverse })
    }

    pub fn label(&self) -> &str {
        self.orientation.label()
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn theta(&self) -> &Series {
        self.orientation.theta()
    }

    pub fn law(&self) -> &FormalGroupLaw {
        &self.law
    }

    pub fn law_inverse(&self) -> &Series {
        &self.law_inverse
    }

    pub fn coeff_ring(&self) -> &CoeffRing {
        self.orientation.ring()
    }

    pub fn order(&self) -> u32 {
        self.orientation.order()
    }

    /// `theta` evaluated at a reference weight-1 class: the oriented first
    /// Chern class of the line bundle with that reference root.
    pub fn first_chern_of_root(&self, root: &RingElem) -> Result<RingElem> {
        root.ring().evaluate_series(self.theta(), std::slice::from_ref(root))
    }

    /// The oriented first Chern class of the dual of the line bundle with
    /// the given oriented first Chern class: the formal inverse.
    pub fn inverse_class(&self, c1: &RingElem) -> Result<RingElem> {
        c1.ring().evaluate_series(&self.law_inverse, std::slice::from_ref(c1))
    }
}

/// Oriented Chern classes of the line factors (concrete for root bundles),
/// or `None` for Chern-data bundles.
fn oriented_roots(bundle: &Bundle, ctx: &OrientedCtx) -> Result<Option<Vec<RingElem>>> {
    match bundle.data() {
        BundleData::Roots(roots) => {
            let mut out = Vec::with_capacity(roots.len());
            for r in roots {
                out.push(ctx.first_chern_of_root(r)?);
            }
            Ok(Some(out))
        }
        BundleData::ChernData { .. } => Ok(None),
    }
}

/// Convolution of elementary symmetric functions of concrete elements.
fn elementary_concrete(ring: &CohRing, values: &[RingElem]) -> Vec<RingElem> {
    let mut acc: Vec<RingElem> = vec![ring.one()];
    for v in values {
        let mut next = Vec::with_capacity(acc.len() + 1);
        next.push(acc[0].clone());
        for j in 1..acc.len() {
            next.push(acc[j].add(&acc[j - 1].mul(v)));
        }
        next.push(acc[acc.len() - 1].mul(v));
        acc = next;
    }
    acc
}

/// A univariate series turned into a formal-root factor polynomial
/// `s(y_i)`, truncated at the ring's nilpotency bound.
fn series_factor(ring: &CohRing, s: &Series, nvars: usize, var: usize, cap: u32) -> Result<SymPoly> {
    if s.order() < cap {
        return Err(EngineError::TruncationUnsound { order: s.order(), bound: cap });
    }
    let mut p = SymPoly::zero(ring.clone(), nvars, cap);
    for (e, c) in s.terms() {
        let mut ye = vec![0u16; nvars];
        if e[0] > cap {
            continue;
        }
        ye[var] = e[0] as u16;
        p.add_term(ye, ring.from_coeff(c.clone()));
    }
    Ok(p)
}

/// Reference Chern classes of a bundle as substitution values `e_k`.
fn reference_classes(bundle: &Bundle) -> Result<Vec<RingElem>> {
    (1..=bundle.rank()).map(|k| bundle.chern_ref(k)).collect()
}

/// Oriented Chern class `c_i(E)`: `c_0 = 1`, zero above the rank,
/// elementary symmetric functions of the transformed roots in between.
pub fn chern(i: usize, bundle: &Bundle, ctx: &OrientedCtx) -> Result<RingElem> {
    let ring = bundle.base().ring().clone();
    if i == 0 {
        return Ok(ring.one());
    }
    if i > bundle.rank() {
        return Ok(ring.zero());
    }
    match oriented_roots(bundle, ctx)? {
        Some(roots) => Ok(elementary_concrete(&ring, &roots)[i].clone()),
        None => {
            // formal-root transport: e_i(theta(y_1)..theta(y_r)) reduced and
            // substituted with the stored reference classes
            let n = bundle.rank();
            let cap = ring.nilpotency_bound();
            let factors: Vec<SymPoly> = (0..n)
                .map(|j| series_factor(&ring, ctx.theta(), n, j, cap))
                .collect::<Result<_>>()?;
            let elems = elementary_of(&ring, n, cap, &factors);
            elems[i].reduce_and_substitute(&reference_classes(bundle)?)
        }
    }
}

/// Oriented total Chern class.
pub fn total_chern(bundle: &Bundle, ctx: &OrientedCtx) -> Result<RingElem> {
    let mut acc = bundle.base().ring().one();
    for i in 1..=bundle.rank() {
        acc = acc.add(&chern(i, bundle, ctx)?);
    }
    Ok(acc)
}

/// Oriented first Chern class of a rank-1 bundle.
pub fn c1(line: &Bundle, ctx: &OrientedCtx) -> Result<RingElem> {
    if line.rank() != 1 {
        return Err(EngineError::BundleData {
            reason: format!("c1 expects a rank-1 bundle, got rank {}", line.rank()),
        });
    }
    chern(1, line, ctx)
}

/// `c1(L1 (x) L2) = F(c1(L1), c1(L2))`: the group law evaluated at the two
/// oriented first Chern classes.
pub fn c1_tensor(l1: &Bundle, l2: &Bundle, ctx: &OrientedCtx) -> Result<RingElem> {
    if l1.base() != l2.base() {
        return Err(EngineError::BaseMismatch {
            left: l1.base().name().to_string(),
            right: l2.base().name().to_string(),
        });
    }
    let a = c1(l1, ctx)?;
    let b = c1(l2, ctx)?;
    a.ring().evaluate_series(ctx.law().series(), &[a.clone(), b])
}

/// Euler class: the top Chern class.
pub fn euler(bundle: &Bundle, ctx: &OrientedCtx) -> Result<RingElem> {
    chern(bundle.rank(), bundle, ctx)
}

/// The Thom class of `E` inside a prebuilt projective completion
/// `P(E + 1)`: `sum_i p^*(c_i(E)) (-c1(lambda))^{n-i}`.
pub fn thom_class_in(total: &Space, bundle: &Bundle, ctx: &OrientedCtx) -> Result<RingElem> {
    let n = bundle.rank();
    let h = total.hyperplane().ok_or_else(|| EngineError::Construction {
        reason: format!("`{}` is not a projective bundle", total.name()),
    })?;
    let c1_lambda = ctx.first_chern_of_root(&h)?;
    let minus = c1_lambda.neg();
    let mut acc = total.ring().zero();
    for i in 0..=n {
        let ci = chern(i, bundle, ctx)?;
        let lifted = total.pullback_from_base(&ci);
        acc = acc.add(&lifted.mul(&minus.pow((n - i) as u32)));
    }
    Ok(acc)
}

/// Build the projective completion of `E` and its Thom class.
pub fn thom(bundle: &Bundle, name: &str, gen: &str, ctx: &OrientedCtx) -> Result<(Space, RingElem)> {
    if bundle.rank() == 0 {
        return Err(EngineError::DegenerateBundle);
    }
    let completed = bundle.sum(&Bundle::trivial(bundle.base(), 1))?;
    let total = Space::proj_bundle(&completed, name, gen)?;
    let class = thom_class_in(&total, bundle, ctx)?;
    Ok((total, class))
}

/// Top Chern class of `L (x) E` for a line bundle `L` and a rank-n bundle
/// `E`: the product of `F(c1 L, z_i)` over formal oriented roots `z_i` of
/// `E`, reduced and substituted with the oriented Chern classes of `E`.
pub fn top_chern_line_tensor(line: &Bundle, bundle: &Bundle, ctx: &OrientedCtx) -> Result<RingElem> {
    if line.base() != bundle.base() {
        return Err(EngineError::BaseMismatch {
            left: line.base().name().to_string(),
            right: bundle.base().name().to_string(),
        });
    }
    let ring = bundle.base().ring().clone();
    let a = c1(line, ctx)?;
    let n = bundle.rank();
    if n == 0 {
        return Ok(ring.one());
    }
    // partial evaluation of F(a, t): a univariate series in t with ring
    // coefficients A_k = sum_i F_ik a^i
    let bound = ring.nilpotency_bound();
    let f = ctx.law().series();
    if f.order() < bound {
        return Err(EngineError::TruncationUnsound { order: f.order(), bound });
    }
    let mut a_pows: Vec<RingElem> = vec![ring.one()];
    let mut partial: Vec<RingElem> = vec![ring.zero(); bound as usize + 1];
    for (e, c) in f.terms() {
        let (i, k) = (e[0], e[1]);
        if k > bound || i > bound {
            continue;
        }
        while a_pows.len() <= i as usize {
            let next = a_pows.last().unwrap().mul(&a);
            a_pows.push(next);
        }
        partial[k as usize] =
            partial[k as usize].add(&a_pows[i as usize].scale(&c.clone()));
    }
    match bundle.data() {
        BundleData::Roots(_) => {
            let roots = oriented_roots(bundle, ctx)?.expect("roots bundle");
            let mut acc = ring.one();
            for z in &roots {
                // evaluate the partial series at the concrete oriented root
                let mut val = ring.zero();
                let mut zp = ring.one();
                for coeff in partial.iter() {
                    val = val.add(&coeff.mul(&zp));
                    zp = zp.mul(z);
                }
                acc = acc.mul(&val);
            }
            Ok(acc)
        }
        BundleData::ChernData { .. } => {
            let cap = bound;
            let factors: Vec<SymPoly> = (0..n)
                .map(|j| {
                    let mut p = SymPoly::zero(ring.clone(), n, cap);
                    for (k, coeff) in partial.iter().enumerate() {
                        let mut ye = vec![0u16; n];
                        ye[j] = k as u16;
                        p.add_term(ye, coeff.clone());
                    }
                    p
                })
                .collect();
            let mut prod = SymPoly::one(ring.clone(), n, cap);
            for f in &factors {
                prod = prod.mul(f);
            }
            let oriented: Vec<RingElem> =
                (1..=n).map(|k| chern(k, bundle, ctx)).collect::<Result<_>>()?;
            prod.reduce_and_substitute(&oriented)
        }
    }
}

/// The excess class of a pair of embeddings with the same source: the top
/// Chern class of the quotient of their normal bundles, computed by
/// Whitney division of oriented total Chern classes. A nonzero tail above
/// the rank difference means the normals do not embed and is an error.
pub fn excess_class(
    outer: &crate::space::Embedding,
    inner: &crate::space::Embedding,
    ctx: &OrientedCtx,
) -> Result<RingElem> {
    if outer.source() != inner.source() {
        return Err(EngineError::InvalidExcess {
            reason: format!(
                "embeddings have different sources: `{}` vs `{}`",
                outer.source().name(),
                inner.source().name()
            ),
        });
    }
    let big = outer.normal();
    let small = inner.normal();
    if small.rank() > big.rank() {
        return Err(EngineError::InvalidExcess {
            reason: format!(
                "inner normal rank {} exceeds outer normal rank {}",
                small.rank(),
                big.rank()
            ),
        });
    }
    let e = (big.rank() - small.rank()) as i64;
    let ring = outer.source().ring().clone();
    let quotient_total = total_chern(big, ctx)?.mul(&total_chern(small, ctx)?.inverse()?);
    let comps = quotient_total.weight_components();
    for (w, part) in &comps {
        if *w > e && !part.is_zero() {
            return Err(EngineError::InvalidExcess {
                reason: format!("excess Chern class in weight {w} beyond rank {e}"),
            });
        }
    }
    if e == 0 {
        return Ok(ring.one());
    }
    Ok(comps.get(&e).cloned().unwrap_or_else(|| ring.zero()))
}

/// The Todd class of a virtual bundle for a comparison series `Phi`:
/// multiplicative, with `td(-L) = (Phi(t)/t)(c1 L)` on line bundles. The
/// context is the target orientation whose first Chern class feeds `t`.
pub fn todd(phi: &Series, v: &VirtualBundle, ctx: &OrientedCtx) -> Result<RingElem> {
    if phi.vars().len() != 1
        || !phi.constant_term().is_zero()
        || phi.coeff(&[1]) != phi.ring().one()
    {
        return Err(EngineError::OrientationShape {
            linear: phi.ring().render(&phi.coeff(&[1])),
        });
    }
    let g = phi.shift_down()?; // Phi(t)/t, unit constant term
    let g_theta = g.compose_with_unit_tail(ctx.theta())?;
    let plus_factor = g_theta.reciprocal()?;
    let td_plus = multiplicative_transport(&plus_factor, &v.plus, ctx)?;
    let td_minus_inv = multiplicative_transport(&g_theta, &v.minus, ctx)?;
    Ok(td_plus.mul(&td_minus_inv))
}

/// Product of `u(y_i)` over the reference roots of a bundle, where `u` is
/// a univariate series with unit constant term (a multiplicative
/// characteristic class factor in the reference root variable).
fn multiplicative_transport(u: &Series, bundle: &Bundle, ctx: &OrientedCtx) -> Result<RingElem> {
    let _ = ctx;
    let ring = bundle.base().ring().clone();
    match bundle.data() {
        BundleData::Roots(roots) => {
            let mut acc = ring.one();
            for r in roots {
                let val = ring.evaluate_series(u, std::slice::from_ref(r))?;
                acc = acc.mul(&val);
            }
            Ok(acc)
        }
        BundleData::ChernData { .. } => {
            let n = bundle.rank();
            if n == 0 {
                return Ok(ring.one());
            }
            let cap = ring.nilpotency_bound();
            let mut prod = SymPoly::one(ring.clone(), n, cap);
            for j in 0..n {
                prod = prod.mul(&series_factor(&ring, u, n, j, cap)?);
            }
            prod.reduce_and_substitute(&reference_classes(bundle)?)
        }
    }
}

trait ComposeUnitTail {
    fn compose_with_unit_tail(&self, inner: &Series) -> Result<Series>;
}

impl ComposeUnitTail for Series {
    /// Compose `self(inner)` where `self` may have a nonzero constant term
    /// (the constant passes through untouched since `inner(0) = 0`).
    fn compose_with_unit_tail(&self, inner: &Series) -> Result<Series> {
        let c0 = self.constant_term();
        let tail = self.sub(&Series::constant(
            self.ring().clone(),
            self.vars().to_vec(),
            self.order(),
            c0.clone(),
        ));
        let composed = tail.compose(inner)?;
        Ok(composed.add(&Series::constant(
            composed.ring().clone(),
            composed.vars().to_vec(),
            composed.order(),
            c0,
        )))
    }
}
