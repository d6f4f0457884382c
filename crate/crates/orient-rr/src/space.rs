//! The geometric model: points, iterated projective bundles, vector
//! bundles, and closed-immersion records.
//!
//! A `Space` is either a point or `P(E)` over a smaller space. Its
//! cohomology ring is presented once and for all with the hyperplane
//! relation `h^r = c1(E) h^{r-1} - c2(E) h^{r-2} + ...` written in the
//! reference (identity) orientation; every other orientation's classes are
//! computed inside that same ring, so one ring carries all class systems.
//!
//! Bundles are split by fiat: `Roots` stores reference first Chern classes
//! of the line factors, `ChernData` stores reference Chern classes of
//! genuinely non-split derived bundles (universal quotients, relative
//! tangents). The splitting principle turns any characteristic-class
//! computation on `ChernData` into symmetric-function algebra.
//!
//! An `Embedding` packages a closed immersion: a restriction ring map, a
//! monomial lift splitting it, the fundamental class, and the normal
//! bundle. Pushing forward is lift-then-multiply; the constructor checks
//! the invariants that make this well defined (the fundamental class kills
//! the kernel of restriction, and restricts to the Euler class of the
//! normal bundle).

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::coeff::CoeffRing;
use crate::algebra::ring::{CohRing, ExpVec, MonomialEmbed, RingElem, RingMap};
use crate::algebra::symmetric::{elementary_of, SymPoly};
use crate::classes::{self, OrientedCtx};
use crate::error::{EngineError, Result};

#[derive(Debug)]
pub enum SpaceKind {
    Point,
    ProjBundle {
        base: Space,
        bundle: Bundle,
        /// index of the fresh hyperplane generator in the ring
        gen_index: usize,
        rank: u16,
        pullback: MonomialEmbed,
    },
}

#[derive(Debug)]
pub struct SpaceData {
    pub name: String,
    pub kind: SpaceKind,
    pub ring: CohRing,
    pub dim: u32,
}

/// Shared immutable handle to a space. Two spaces are interchangeable
/// exactly when their ring presentations agree, so equality is delegated
/// to the rings.
#[derive(Debug, Clone)]
pub struct Space(Arc<SpaceData>);

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.ring == other.0.ring
    }
}
impl Eq for Space {}

impl Space {
    pub fn point(coeff: CoeffRing) -> Space {
        Space(Arc::new(SpaceData {
            name: "pt".to_string(),
            kind: SpaceKind::Point,
            ring: CohRing::point(coeff),
            dim: 0,
        }))
    }

    /// `P(E)` over the base of `E`, with hyperplane relation from the
    /// reference Chern classes of `E`.
    pub fn proj_bundle(bundle: &Bundle, name: &str, gen: &str) -> Result<Space> {
        let base = bundle.base().clone();
        let r = bundle.rank();
        if r == 0 {
            return Err(EngineError::DegenerateBundle);
        }
        let n = base.ring().num_gens() + 1;
        let mut tail: BTreeMap<ExpVec, _> = BTreeMap::new();
        for i in 1..=r {
            // h^r = sum_i (-1)^{i+1} c_i(E) h^{r-i}
            let mut ci = bundle.chern_ref(i)?;
            if i % 2 == 0 {
                ci = ci.neg();
            }
            for (e, c) in ci.terms() {
                let mut t = e.clone();
                t.resize(n, 0);
                t[n - 1] = (r - i) as u16;
                let entry = tail.entry(t).or_insert_with(|| base.ring().coeff_ring().zero());
                *entry = base.ring().coeff_ring().add(entry, c);
            }
        }
        tail.retain(|_, c| !c.is_zero());
        let ring = base.ring().extend(gen, r as u16, tail)?;
        let gen_index = n - 1;
        let pullback = MonomialEmbed::new(
            base.ring().clone(),
            ring.clone(),
            (0..base.ring().num_gens()).collect(),
        )?;
        Ok(Space(Arc::new(SpaceData {
            name: name.to_string(),
            kind: SpaceKind::ProjBundle {
                base: base.clone(),
                bundle: bundle.clone(),
                gen_index,
                rank: r as u16,
                pullback,
            },
            ring,
            dim: base.dim() + (r as u32 - 1),
        })))
    }

    /// `P^n` over a point: the projectivization of the trivial bundle of
    /// rank `n + 1`, with relation `h^{n+1} = 0`.
    pub fn projective_space(n: u16, coeff: CoeffRing) -> Result<Space> {
        let pt = Space::point(coeff);
        let triv = Bundle::trivial(&pt, n as usize + 1);
        Space::proj_bundle(&triv, &format!("P{n}"), "h")
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn ring(&self) -> &CohRing {
        &self.0.ring
    }

    pub fn dim(&self) -> u32 {
        self.0.dim
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.0.kind
    }

    pub fn is_point(&self) -> bool {
        matches!(self.0.kind, SpaceKind::Point)
    }

    pub fn base(&self) -> Option<&Space> {
        match &self.0.kind {
            SpaceKind::Point => None,
            SpaceKind::ProjBundle { base, .. } => Some(base),
        }
    }

    /// The bundle this space projectivizes.
    pub fn proj_bundle_data(&self) -> Option<&Bundle> {
        match &self.0.kind {
            SpaceKind::Point => None,
            SpaceKind::ProjBundle { bundle, .. } => Some(bundle),
        }
    }

    /// Rank of the projectivized bundle.
    pub fn proj_rank(&self) -> Option<usize> {
        match &self.0.kind {
            SpaceKind::Point => None,
            SpaceKind::ProjBundle { rank, .. } => Some(*rank as usize),
        }
    }

    /// The hyperplane class `h` of the top projectivization (reference
    /// first Chern class of the tautological subbundle).
    pub fn hyperplane(&self) -> Option<RingElem> {
        match &self.0.kind {
            SpaceKind::Point => None,
            SpaceKind::ProjBundle { gen_index, .. } => Some(self.0.ring.gen(*gen_index)),
        }
    }

    /// `p^*`: re-express a base class in this bundle's ring.
    pub fn pullback_from_base(&self, x: &RingElem) -> RingElem {
        match &self.0.kind {
            SpaceKind::Point => panic!("a point has no base"),
            SpaceKind::ProjBundle { pullback, .. } => pullback.apply(x),
        }
    }

    /// True when this is the projectivization of a trivial bundle over a
    /// point (i.e. `P^m`), returning `m`.
    pub fn is_projective_space(&self) -> Option<u16> {
        match &self.0.kind {
            SpaceKind::Point => None,
            SpaceKind::ProjBundle { base, bundle, rank, .. } => {
                if base.is_point() && bundle.is_trivial() {
                    Some(rank - 1)
                } else {
                    None
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
pub enum BundleData {
    /// Reference first Chern classes of the line factors.
    Roots(Vec<RingElem>),
    /// Reference Chern classes `c_1..c_r` of a non-split bundle.
    ChernData { rank: usize, classes: Vec<RingElem> },
}

/// A vector bundle on a space, as splitting data in the reference
/// orientation.
#[derive(Debug, Clone)]
pub struct Bundle {
    base: Space,
    data: BundleData,
}

impl Bundle {
    /// Validate a prospective root / Chern class: weight homogeneous of the
    /// stated weight, generator-positive, effective. These are the
    /// conditions under which nilpotency bounds and weight-vanishing make
    /// every later evaluation exact.
    fn validate_class(x: &RingElem, weight: i64) -> Result<()> {
        if x.is_zero() {
            return Ok(());
        }
        if x.weight() != Some(weight) {
            return Err(EngineError::BundleData {
                reason: format!("class `{x}` is not homogeneous of weight {weight}"),
            });
        }
        if !x.is_gen_positive() {
            return Err(EngineError::BundleData {
                reason: format!("class `{x}` has a generator-degree-0 part"),
            });
        }
        if !x.is_effective() {
            return Err(EngineError::BundleData {
                reason: format!("class `{x}` has positive-weight coefficients"),
            });
        }
        Ok(())
    }

    pub fn from_roots(base: &Space, roots: Vec<RingElem>) -> Result<Bundle> {
        for r in &roots {
            if r.ring() != base.ring() {
                return Err(EngineError::BaseMismatch {
                    left: base.name().to_string(),
                    right: "root from another ring".to_string(),
                });
            }
            Self::validate_class(r, 1)?;
        }
        Ok(Bundle { base: base.clone(), data: BundleData::Roots(roots) })
    }

    pub fn from_chern_data(base: &Space, rank: usize, classes: Vec<RingElem>) -> Result<Bundle> {
        if classes.len() != rank {
            return Err(EngineError::BundleData {
                reason: format!("expected {rank} classes, got {}", classes.len()),
            });
        }
        for (i, c) in classes.iter().enumerate() {
            if c.ring() != base.ring() {
                return Err(EngineError::BaseMismatch {
                    left: base.name().to_string(),
                    right: "class from another ring".to_string(),
                });
            }
            Self::validate_class(c, i as i64 + 1)?;
        }
        Ok(Bundle { base: base.clone(), data: BundleData::ChernData { rank, classes } })
    }

    pub fn trivial(base: &Space, rank: usize) -> Bundle {
        Bundle {
            base: base.clone(),
            data: BundleData::Roots(vec![base.ring().zero(); rank]),
        }
    }

    /// Line bundle with the given reference first Chern class.
    pub fn line(base: &Space, root: RingElem) -> Result<Bundle> {
        Bundle::from_roots(base, vec![root])
    }

    /// `O(d)` relative to the top hyperplane class: the d-th twist of the
    /// dual tautological bundle, so the reference root is `-d h`.
    pub fn o_line(base: &Space, d: i64) -> Result<Bundle> {
        let h = base.hyperplane().ok_or_else(|| EngineError::Construction {
            reason: format!("space `{}` has no hyperplane class", base.name()),
        })?;
        Bundle::line(base, h.scale_rational(&crate::algebra::rational::rat_int(-d)))
    }

    pub fn base(&self) -> &Space {
        &self.base
    }

    pub fn data(&self) -> &BundleData {
        &self.data
    }

    pub fn rank(&self) -> usize {
        match &self.data {
            BundleData::Roots(r) => r.len(),
            BundleData::ChernData { rank, .. } => *rank,
        }
    }

    pub fn is_trivial(&self) -> bool {
        match &self.data {
            BundleData::Roots(r) => r.iter().all(|x| x.is_zero()),
            BundleData::ChernData { classes, .. } => classes.iter().all(|x| x.is_zero()),
        }
    }

    /// Reference Chern class `c_i`; `c_0 = 1`, zero above the rank.
    pub fn chern_ref(&self, i: usize) -> Result<RingElem> {
        let ring = self.base.ring();
        if i == 0 {
            return Ok(ring.one());
        }
        if i > self.rank() {
            return Ok(ring.zero());
        }
        match &self.data {
            BundleData::Roots(roots) => {
                // e_i of concrete nilpotent roots, by direct convolution
                let mut acc: Vec<RingElem> = vec![ring.one()];
                for r in roots {
                    let mut next = Vec::with_capacity(acc.len() + 1);
                    next.push(acc[0].clone());
                    for j in 1..acc.len() {
                        next.push(acc[j].add(&acc[j - 1].mul(r)));
                    }
                    next.push(acc[acc.len() - 1].mul(r));
                    acc = next;
                }
                Ok(acc[i].clone())
            }
            BundleData::ChernData { classes, .. } => Ok(classes[i - 1].clone()),
        }
    }

    /// Reference total Chern class `1 + c_1 + ... + c_r`.
    pub fn total_chern_ref(&self) -> Result<RingElem> {
        let mut acc = self.base.ring().one();
        for i in 1..=self.rank() {
            acc = acc.add(&self.chern_ref(i)?);
        }
        Ok(acc)
    }

    fn assert_same_base(&self, other: &Bundle) -> Result<()> {
        if self.base != other.base {
            return Err(EngineError::BaseMismatch {
                left: self.base.name().to_string(),
                right: other.base.name().to_string(),
            });
        }
        Ok(())
    }

    /// Whitney sum. Root lists concatenate; Chern vectors convolve.
    pub fn sum(&self, other: &Bundle) -> Result<Bundle> {
        self.assert_same_base(other)?;
        match (&self.data, &other.data) {
            (BundleData::Roots(a), BundleData::Roots(b)) => {
                let mut r = a.clone();
                r.extend(b.iter().cloned());
                Ok(Bundle { base: self.base.clone(), data: BundleData::Roots(r) })
            }
            _ => {
                let rank = self.rank() + other.rank();
                let mut classes = Vec::with_capacity(rank);
                for k in 1..=rank {
                    let mut ck = self.base.ring().zero();
                    for i in 0..=k {
                        ck = ck.add(&self.chern_ref(i)?.mul(&other.chern_ref(k - i)?));
                    }
                    classes.push(ck);
                }
                Bundle::from_chern_data(&self.base, rank, classes)
            }
        }
    }

    /// Dual bundle: roots negate (the reference law is additive), Chern
    /// classes pick up alternating signs.
    pub fn dual(&self) -> Result<Bundle> {
        match &self.data {
            BundleData::Roots(roots) => Ok(Bundle {
                base: self.base.clone(),
                data: BundleData::Roots(roots.iter().map(|r| r.neg()).collect()),
            }),
            BundleData::ChernData { rank, classes } => {
                let classes = classes
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == 0 { c.neg() } else { c.clone() })
                    .collect();
                Bundle::from_chern_data(&self.base, *rank, classes)
            }
        }
    }

    /// Tensor by a line bundle: roots shift by the line's root under the
    /// reference law; Chern data is routed through symmetric reduction.
    pub fn tensor_line(&self, line: &Bundle) -> Result<Bundle> {
        self.assert_same_base(line)?;
        if line.rank() != 1 {
            return Err(EngineError::BundleData {
                reason: format!("tensor_line expects a rank-1 bundle, got rank {}", line.rank()),
            });
        }
        let ell = match &line.data {
            BundleData::Roots(r) => r[0].clone(),
            BundleData::ChernData { classes, .. } => classes[0].clone(),
        };
        match &self.data {
            BundleData::Roots(roots) => Ok(Bundle {
                base: self.base.clone(),
                data: BundleData::Roots(roots.iter().map(|r| r.add(&ell)).collect()),
            }),
            BundleData::ChernData { rank, classes } => {
                // e_k(y_i + l), reduced to elementary functions of the y_i
                // and substituted with the stored classes
                let ring = self.base.ring().clone();
                let n = *rank;
                let cap = n as u32;
                let factors: Vec<SymPoly> = (0..n)
                    .map(|i| {
                        let mut p = SymPoly::constant(ring.clone(), n, cap, ell.clone());
                        let mut e = vec![0u16; n];
                        e[i] = 1;
                        p.add_term(e, ring.one());
                        p
                    })
                    .collect();
                let elems = elementary_of(&ring, n, cap, &factors);
                let mut new_classes = Vec::with_capacity(n);
                for ek in elems.iter().skip(1) {
                    new_classes.push(ek.reduce_and_substitute(classes)?);
                }
                Bundle::from_chern_data(&self.base, n, new_classes)
            }
        }
    }

    /// Re-express the bundle data on a projective bundle over its base.
    pub fn pullback_to(&self, upstairs: &Space) -> Result<Bundle> {
        match upstairs.kind() {
            SpaceKind::ProjBundle { base, .. } if base == &self.base => {}
            _ => {
                return Err(EngineError::BaseMismatch {
                    left: self.base.name().to_string(),
                    right: upstairs.name().to_string(),
                })
            }
        }
        let data = match &self.data {
            BundleData::Roots(roots) => {
                BundleData::Roots(roots.iter().map(|r| upstairs.pullback_from_base(r)).collect())
            }
            BundleData::ChernData { rank, classes } => BundleData::ChernData {
                rank: *rank,
                classes: classes.iter().map(|c| upstairs.pullback_from_base(c)).collect(),
            },
        };
        Ok(Bundle { base: upstairs.clone(), data })
    }

    /// Restrict the bundle data along a ring map (e.g. an embedding's
    /// restriction).
    pub fn restrict_along(&self, map: &RingMap, new_base: &Space) -> Bundle {
        let data = match &self.data {
            BundleData::Roots(roots) => {
                BundleData::Roots(roots.iter().map(|r| map.apply(r)).collect())
            }
            BundleData::ChernData { rank, classes } => BundleData::ChernData {
                rank: *rank,
                classes: classes.iter().map(|c| map.apply(c)).collect(),
            },
        };
        Bundle { base: new_base.clone(), data }
    }
}

/// Formal difference of bundles on one base.
#[derive(Debug, Clone)]
pub struct VirtualBundle {
    pub plus: Bundle,
    pub minus: Bundle,
}

impl VirtualBundle {
    pub fn new(plus: Bundle, minus: Bundle) -> Result<VirtualBundle> {
        plus.assert_same_base(&minus)?;
        Ok(VirtualBundle { plus, minus })
    }

    pub fn from_bundle(plus: Bundle) -> VirtualBundle {
        let minus = Bundle::trivial(plus.base(), 0);
        VirtualBundle { plus, minus }
    }

    pub fn negate(&self) -> VirtualBundle {
        VirtualBundle { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    pub fn base(&self) -> &Space {
        self.plus.base()
    }

    pub fn virtual_rank(&self) -> i64 {
        self.plus.rank() as i64 - self.minus.rank() as i64
    }
}

/// The tautological subbundle of the top projectivization: rank 1 with
/// reference root `h`.
pub fn tautological_sub(p: &Space) -> Result<Bundle> {
    let h = p.hyperplane().ok_or_else(|| EngineError::Construction {
        reason: format!("`{}` is not a projective bundle", p.name()),
    })?;
    Bundle::line(p, h)
}

/// The universal quotient bundle of `P(E)`: rank `r - 1`, total Chern
/// class `c(p^* E) / c(lambda)`, computed by exact division (the
/// hyperplane class is nilpotent). Applied to a projective completion
/// `P(E + 1)` the same formula yields the rank-`r` quotient of `E + 1`.
pub fn universal_quotient(p: &Space) -> Result<Bundle> {
    let bundle = p.proj_bundle_data().ok_or_else(|| EngineError::Construction {
        reason: format!("`{}` is not a projective bundle", p.name()),
    })?;
    let r = bundle.rank();
    let h = p.hyperplane().expect("projective bundle has a hyperplane class");
    let upstairs_total = p.pullback_from_base(&bundle.total_chern_ref()?);
    let lambda_total_inv = p.ring().one().add(&h).inverse()?;
    let total = upstairs_total.mul(&lambda_total_inv);
    let comps = total.weight_components();
    let mut classes = Vec::with_capacity(r - 1);
    for i in 1..r {
        classes.push(comps.get(&(i as i64)).cloned().unwrap_or_else(|| p.ring().zero()));
    }
    for (w, part) in &comps {
        if *w >= r as i64 && !part.is_zero() {
            return Err(EngineError::Internal {
                reason: format!(
                    "universal quotient Chern class in weight {w} beyond rank {}",
                    r - 1
                ),
            });
        }
    }
    Bundle::from_chern_data(p, r - 1, classes)
}

/// The relative tangent bundle of `p: P(E) -> X`, realized through the
/// Euler-sequence identity as `lambda^dual (x) quotient`: reference roots
/// `y_i - h` over the formal roots of the universal quotient.
pub fn relative_tangent(p: &Space) -> Result<Bundle> {
    let xi = universal_quotient(p)?;
    let n = xi.rank();
    let ring = p.ring().clone();
    let h = p.hyperplane().expect("projective bundle has a hyperplane class");
    let cap = n as u32;
    let factors: Vec<SymPoly> = (0..n)
        .map(|i| {
            let mut f = SymPoly::constant(ring.clone(), n, cap, h.neg());
            let mut e = vec![0u16; n];
            e[i] = 1;
            f.add_term(e, ring.one());
            f
        })
        .collect();
    let elems = elementary_of(&ring, n, cap, &factors);
    let xi_classes: Vec<RingElem> = (1..=n).map(|k| xi.chern_ref(k)).collect::<Result<_>>()?;
    let mut classes = Vec::with_capacity(n);
    for ek in elems.iter().skip(1) {
        classes.push(ek.reduce_and_substitute(&xi_classes)?);
    }
    Bundle::from_chern_data(p, n, classes)
}

#[derive(Debug, Clone)]
pub enum EmbeddingKind {
    Identity,
    ZeroSection { bundle: Bundle },
    Linear,
    Diagonal { proj: Space },
}

/// A closed-immersion record. Supports lift-and-multiply pushforward.
#[derive(Debug, Clone)]
pub struct Embedding {
    source: Space,
    target: Space,
    codim: u32,
    restrict: RingMap,
    lift: MonomialEmbed,
    fdl: RingElem,
    normal: Bundle,
    kind: EmbeddingKind,
    orientation: String,
}

impl Embedding {
    pub fn source(&self) -> &Space {
        &self.source
    }

    pub fn target(&self) -> &Space {
        &self.target
    }

    pub fn codim(&self) -> u32 {
        self.codim
    }

    pub fn fdl(&self) -> &RingElem {
        &self.fdl
    }

    pub fn normal(&self) -> &Bundle {
        &self.normal
    }

    pub fn kind(&self) -> &EmbeddingKind {
        &self.kind
    }

    pub fn orientation_label(&self) -> &str {
        &self.orientation
    }

    pub fn restriction_map(&self) -> &RingMap {
        &self.restrict
    }

    pub fn restrict(&self, x: &RingElem) -> RingElem {
        self.restrict.apply(x)
    }

    pub fn lift(&self, z: &RingElem) -> RingElem {
        self.lift.apply(z)
    }

    /// Validate and freeze an embedding record. Checks, in order: the lift
    /// splits the restriction, the fundamental class has the right weight,
    /// restricts to the Euler class of the normal bundle, and kills the
    /// kernel of restriction (so pushforward is independent of the lift).
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn build(
        source: Space,
        target: Space,
        restrict: RingMap,
        lift: MonomialEmbed,
        fdl: RingElem,
        normal: Bundle,
        kind: EmbeddingKind,
        ctx: &OrientedCtx,
    ) -> Result<Embedding> {
        let codim = normal.rank() as u32;
        if !fdl.is_zero() && codim > 0 && fdl.weight() != Some(codim as i64) {
            return Err(EngineError::Construction {
                reason: format!("fundamental class `{fdl}` not homogeneous of weight {codim}"),
            });
        }
        for b in source.ring().basis() {
            let mu = source.ring().monomial(b, source.ring().coeff_ring().one());
            if restrict.apply(&lift.apply(&mu)) != mu {
                return Err(EngineError::Construction {
                    reason: format!("lift does not split restriction on `{mu}`"),
                });
            }
        }
        let euler = classes::euler(&normal, ctx)?;
        if restrict.apply(&fdl) != euler {
            return Err(EngineError::Construction {
                reason: format!(
                    "restrict(fdl) = {} but euler(normal) = {}",
                    restrict.apply(&fdl),
                    euler
                ),
            });
        }
        for b in target.ring().basis() {
            let mu = target.ring().monomial(b, target.ring().coeff_ring().one());
            let diff = mu.sub(&lift.apply(&restrict.apply(&mu)));
            if !fdl.mul(&diff).is_zero() {
                return Err(EngineError::Construction {
                    reason: format!(
                        "fundamental class does not annihilate ker(restrict): witness `{mu}`"
                    ),
                });
            }
        }
        Ok(Embedding {
            source,
            target,
            codim,
            restrict,
            lift,
            fdl,
            normal,
            kind,
            orientation: ctx.label().to_string(),
        })
    }

    /// The identity embedding of a space into itself (codimension 0).
    pub fn identity(space: &Space, ctx: &OrientedCtx) -> Result<Embedding> {
        let ring = space.ring().clone();
        let images = (0..ring.num_gens()).map(|i| ring.gen(i)).collect();
        let restrict = RingMap::new(ring.clone(), ring.clone(), images);
        let lift = MonomialEmbed::new(ring.clone(), ring.clone(), (0..ring.num_gens()).collect())?;
        Embedding::build(
            space.clone(),
            space.clone(),
            restrict,
            lift,
            ring.one(),
            Bundle::trivial(space, 0),
            EmbeddingKind::Identity,
            ctx,
        )
    }

    /// The zero section of `E` into the projective completion `P(E + 1)`.
    /// Returns the completion space and the embedding; the fundamental
    /// class is the Thom class of `E` in the chosen orientation.
    pub fn zero_section(
        bundle: &Bundle,
        name: &str,
        gen: &str,
        ctx: &OrientedCtx,
    ) -> Result<(Space, Embedding)> {
        let x = bundle.base().clone();
        let completed = bundle.sum(&Bundle::trivial(&x, 1))?;
        let total = Space::proj_bundle(&completed, name, gen)?;
        let emb = Embedding::zero_section_into(bundle, &total, ctx)?;
        Ok((total, emb))
    }

    /// Zero section into an already-built completion `P(E + 1)`.
    pub fn zero_section_into(
        bundle: &Bundle,
        total: &Space,
        ctx: &OrientedCtx,
    ) -> Result<Embedding> {
        let x = bundle.base().clone();
        match total.kind() {
            SpaceKind::ProjBundle { base, rank, .. }
                if base == &x && *rank as usize == bundle.rank() + 1 => {}
            _ => {
                return Err(EngineError::Construction {
                    reason: format!("`{}` is not the projective completion", total.name()),
                });
            }
        }
        let xr = x.ring().clone();
        let tr = total.ring().clone();
        // restriction: base generators map to themselves, the new h to 0
        // (the tautological bundle is trivial along the zero section)
        let mut images: Vec<RingElem> = (0..xr.num_gens()).map(|i| xr.gen(i)).collect();
        images.push(xr.zero());
        let restrict = RingMap::new(tr.clone(), xr.clone(), images);
        let lift = MonomialEmbed::new(xr, tr, (0..x.ring().num_gens()).collect())?;
        let fdl = classes::thom_class_in(total, bundle, ctx)?;
        Embedding::build(
            x,
            total.clone(),
            restrict,
            lift,
            fdl,
            bundle.clone(),
            EmbeddingKind::ZeroSection { bundle: bundle.clone() },
            ctx,
        )
    }

    /// Linear embedding of `P^m` into `P^n`: the transversal zero locus of
    /// `O(1)^{n-m}`, with fundamental class `theta(-h)^{n-m}`.
    pub fn linear(source: &Space, target: &Space, ctx: &OrientedCtx) -> Result<Embedding> {
        let m = source.is_projective_space().ok_or_else(|| EngineError::Construction {
            reason: format!("`{}` is not a projective space", source.name()),
        })?;
        let n = target.is_projective_space().ok_or_else(|| EngineError::Construction {
            reason: format!("`{}` is not a projective space", target.name()),
        })?;
        if m > n {
            return Err(EngineError::Construction {
                reason: format!("cannot embed P^{m} into P^{n}"),
            });
        }
        if source.ring().coeff_ring() != target.ring().coeff_ring() {
            return Err(EngineError::BaseMismatch {
                left: source.name().to_string(),
                right: target.name().to_string(),
            });
        }
        if m == n {
            return Embedding::identity(source, ctx);
        }
        let sr = source.ring().clone();
        let tr = target.ring().clone();
        let restrict = RingMap::new(tr.clone(), sr.clone(), vec![sr.gen(0)]);
        let lift = MonomialEmbed::new(sr.clone(), tr.clone(), vec![0])?;
        let h_t = target.hyperplane().expect("projective space");
        let theta_dual = ctx.first_chern_of_root(&h_t.neg())?;
        let fdl = theta_dual.pow((n - m) as u32);
        let h_s = source.hyperplane().expect("projective space");
        let normal = Bundle::from_roots(source, vec![h_s.neg(); (n - m) as usize])?;
        Embedding::build(
            source.clone(),
            target.clone(),
            restrict,
            lift,
            fdl,
            normal,
            EmbeddingKind::Linear,
            ctx,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_int;

    fn q() -> CoeffRing {
        CoeffRing::Rationals
    }

    #[test]
    fn projective_space_rings() {
        let p1 = Space::projective_space(1, q()).unwrap();
        assert_eq!(p1.ring().rank(), 2);
        let h = p1.hyperplane().unwrap();
        assert!(h.mul(&h).is_zero());

        let p2 = Space::projective_space(2, CoeffRing::laurent_beta()).unwrap();
        assert_eq!(p2.ring().rank(), 3);
        assert!(p2.hyperplane().unwrap().pow(3).is_zero());
        assert!(!p2.hyperplane().unwrap().pow(2).is_zero());
        assert_eq!(p2.dim(), 2);
    }

    #[test]
    fn proj_bundle_relation_from_chern_classes() {
        // P(O + O(h)) over P^1: relation k^2 = h k
        let p1 = Space::projective_space(1, q()).unwrap();
        let h = p1.hyperplane().unwrap();
        let e = Bundle::from_roots(&p1, vec![p1.ring().zero(), h.clone()]).unwrap();
        let pe = Space::proj_bundle(&e, "PE", "k").unwrap();
        let k = pe.hyperplane().unwrap();
        let hh = pe.pullback_from_base(&h);
        assert_eq!(k.pow(2), hh.mul(&k));
        assert_eq!(pe.ring().rank(), 4);
        assert_eq!(pe.dim(), 2);

        // the defining relation: sum_i c_i(E) (-k)^{2-i} = 0
        let c1 = pe.pullback_from_base(&e.chern_ref(1).unwrap());
        let c2 = pe.pullback_from_base(&e.chern_ref(2).unwrap());
        let rel = k.pow(2).sub(&c1.mul(&k)).add(&c2);
        assert!(rel.is_zero());
    }

    #[test]
    fn rank_zero_bundle_cannot_be_projectivized() {
        let pt = Space::point(q());
        let zero = Bundle::trivial(&pt, 0);
        assert!(matches!(
            Space::proj_bundle(&zero, "X", "h"),
            Err(EngineError::DegenerateBundle)
        ));
    }

    #[test]
    fn whitney_on_random_root_bundles() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let p2 = Space::projective_space(2, q()).unwrap();
        let h = p2.hyperplane().unwrap();
        let choices = [
            p2.ring().zero(),
            h.clone(),
            h.neg(),
            h.scale_rational(&rat_int(2)),
            h.scale_rational(&rat_int(-2)),
        ];
        for _ in 0..40 {
            let ra: Vec<_> = (0..rng.gen_range(1..=3))
                .map(|_| choices[rng.gen_range(0..choices.len())].clone())
                .collect();
            let rb: Vec<_> = (0..rng.gen_range(1..=3))
                .map(|_| choices[rng.gen_range(0..choices.len())].clone())
                .collect();
            let a = Bundle::from_roots(&p2, ra).unwrap();
            let b = Bundle::from_roots(&p2, rb).unwrap();
            let s = a.sum(&b).unwrap();
            assert_eq!(
                s.total_chern_ref().unwrap(),
                a.total_chern_ref().unwrap().mul(&b.total_chern_ref().unwrap())
            );
        }
    }

    #[test]
    fn sum_of_trivial_is_trivial() {
        let p1 = Space::projective_space(1, q()).unwrap();
        let a = Bundle::trivial(&p1, 2);
        let b = Bundle::trivial(&p1, 1);
        let s = a.sum(&b).unwrap();
        assert_eq!(s.rank(), 3);
        for i in 1..=3 {
            assert!(s.chern_ref(i).unwrap().is_zero());
        }
    }

    #[test]
    fn dual_and_tensor_line_roots() {
        let p1 = Space::projective_space(1, q()).unwrap();
        let h = p1.hyperplane().unwrap();
        let e = Bundle::from_roots(&p1, vec![h.clone()]).unwrap();
        let d = e.dual().unwrap();
        match d.data() {
            BundleData::Roots(r) => assert_eq!(r[0], h.neg()),
            _ => panic!("dual of roots should be roots"),
        }
        // tensor with the trivial line is the identity
        let t = e.tensor_line(&Bundle::trivial(&p1, 1)).unwrap();
        assert_eq!(t.chern_ref(1).unwrap(), h);
        // trivial tensor L has root c1(L)
        let t2 = Bundle::trivial(&p1, 1).tensor_line(&e).unwrap();
        assert_eq!(t2.chern_ref(1).unwrap(), h);
    }

    #[test]
    fn tensor_line_chern_data_route() {
        // rank-2 Chern data on P^2 tensored by O(c1 = h):
        // compare against the split computation with the same classes
        let p2 = Space::projective_space(2, q()).unwrap();
        let h = p2.hyperplane().unwrap();
        let split = Bundle::from_roots(&p2, vec![h.clone(), h.neg()]).unwrap();
        let data = Bundle::from_chern_data(
            &p2,
            2,
            vec![split.chern_ref(1).unwrap(), split.chern_ref(2).unwrap()],
        )
        .unwrap();
        let line = Bundle::line(&p2, h.clone()).unwrap();
        let a = split.tensor_line(&line).unwrap();
        let b = data.tensor_line(&line).unwrap();
        for i in 1..=2 {
            assert_eq!(a.chern_ref(i).unwrap(), b.chern_ref(i).unwrap());
        }
    }

    #[test]
    fn universal_quotient_on_projective_spaces() {
        // P^2: c(xi) = 1/(1+h) = 1 - h + h^2
        let p2 = Space::projective_space(2, q()).unwrap();
        let h = p2.hyperplane().unwrap();
        let xi = universal_quotient(&p2).unwrap();
        assert_eq!(xi.rank(), 2);
        assert_eq!(xi.chern_ref(1).unwrap(), h.neg());
        assert_eq!(xi.chern_ref(2).unwrap(), h.pow(2));

        // P^1: c1(xi) = -h, rank 1
        let p1 = Space::projective_space(1, q()).unwrap();
        let xi = universal_quotient(&p1).unwrap();
        assert_eq!(xi.rank(), 1);
        assert_eq!(xi.chern_ref(1).unwrap(), p1.hyperplane().unwrap().neg());
    }

    #[test]
    fn quotient_whitney_identity() {
        // c(lambda) c(xi) = c(p^* E) for a nontrivial bundle
        let p1 = Space::projective_space(1, q()).unwrap();
        let h = p1.hyperplane().unwrap();
        let e = Bundle::from_roots(&p1, vec![p1.ring().zero(), h.clone()]).unwrap();
        let pe = Space::proj_bundle(&e, "PE", "k").unwrap();
        let lambda = tautological_sub(&pe).unwrap();
        let xi = universal_quotient(&pe).unwrap();
        let lhs = lambda
            .total_chern_ref()
            .unwrap()
            .mul(&xi.total_chern_ref().unwrap());
        let rhs = pe.pullback_from_base(&e.total_chern_ref().unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn relative_tangent_classes() {
        // P^1: c1(T_p) = -2h; P^2: c1(T_p) = -3h
        let p1 = Space::projective_space(1, q()).unwrap();
        let t1 = relative_tangent(&p1).unwrap();
        assert_eq!(t1.rank(), 1);
        assert_eq!(
            t1.chern_ref(1).unwrap(),
            p1.hyperplane().unwrap().scale_rational(&rat_int(-2))
        );

        let p2 = Space::projective_space(2, q()).unwrap();
        let t2 = relative_tangent(&p2).unwrap();
        assert_eq!(t2.rank(), 2);
        assert_eq!(
            t2.chern_ref(1).unwrap(),
            p2.hyperplane().unwrap().scale_rational(&rat_int(-3))
        );
    }

    #[test]
    fn base_mismatch_is_rejected() {
        let p1 = Space::projective_space(1, q()).unwrap();
        let p2 = Space::projective_space(2, q()).unwrap();
        let a = Bundle::trivial(&p1, 1);
        let b = Bundle::trivial(&p2, 1);
        assert!(matches!(a.sum(&b), Err(EngineError::BaseMismatch { .. })));
    }

    #[test]
    fn bundle_data_validation() {
        let p1 = Space::projective_space(1, q()).unwrap();
        let h = p1.hyperplane().unwrap();
        // a root must be weight-1: h is, a constant is not
        assert!(Bundle::from_roots(&p1, vec![h.clone()]).is_ok());
        assert!(Bundle::from_roots(&p1, vec![p1.ring().one()]).is_err());
        // Chern data weights must match their index
        assert!(Bundle::from_chern_data(&p1, 2, vec![h.clone(), h.clone()]).is_err());
    }
}
