//! Finitely presented graded quotient rings with a monomial normal form.
//!
//! A `CohRing` is a free module over its coefficient ring with basis the
//! monomials `h1^e1 ... hn^en`, `e_i < d_i`. Each generator `h_i` carries a
//! monic rewrite rule `h_i^{d_i} -> tail_i` where the tail only involves
//! generators `h_j` with `j <= i` (and then only powers of `h_i` below
//! `d_i`). This triangular shape makes the rewrite system terminating and
//! the normal form unique; no Groebner machinery is needed.
//!
//! Weights: every generator has weight 1; coefficient monomials carry their
//! own (non-positive, for everything the geometry produces) weights. The
//! nilpotency bound `sum (d_i - 1)` controls when truncated series can be
//! evaluated exactly at generator-positive elements.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::coeff::{Coeff, CoeffRing};
use super::rational::Rational;
use super::series::Series;
use crate::error::{EngineError, Result};

pub type ExpVec = Vec<u16>;
type TermMap = BTreeMap<ExpVec, Coeff>;

#[derive(Debug, PartialEq)]
pub struct Generator {
    pub name: String,
    pub degree: u16,
    /// Rewrite of `h_i^{degree}`, already in normal form.
    tail: TermMap,
}

#[derive(Debug, PartialEq)]
pub struct RingData {
    coeff: CoeffRing,
    gens: Vec<Generator>,
}

/// Shared handle to a ring presentation. Cloning is cheap; two handles are
/// the same ring iff their presentations agree (pointer equality is the
/// fast path).
#[derive(Debug, Clone)]
pub struct CohRing(Arc<RingData>);

impl PartialEq for CohRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for CohRing {}

impl CohRing {
    /// The ring with no generators: just the coefficient ring.
    pub fn point(coeff: CoeffRing) -> Self {
        CohRing(Arc::new(RingData { coeff, gens: Vec::new() }))
    }

    pub fn coeff_ring(&self) -> &CoeffRing {
        &self.0.coeff
    }

    pub fn gens(&self) -> &[Generator] {
        &self.0.gens
    }

    pub fn num_gens(&self) -> usize {
        self.0.gens.len()
    }

    pub fn gen_name(&self, i: usize) -> &str {
        &self.0.gens[i].name
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.0.gens.iter().position(|g| g.name == name)
    }

    /// Module rank over the coefficient ring: product of the degrees.
    pub fn rank(&self) -> u64 {
        self.0.gens.iter().map(|g| g.degree as u64).product()
    }

    /// `sum (d_i - 1)`: the largest generator degree of any normal-form
    /// monomial, hence a nilpotency bound for generator-positive elements.
    pub fn nilpotency_bound(&self) -> u32 {
        self.0.gens.iter().map(|g| g.degree as u32 - 1).sum()
    }

    /// Extend by one generator of degree `degree` with rewrite tail `tail`
    /// (given over this extended ring's exponent vectors, must be normal).
    /// The tail coefficients must be weight-homogeneous and effective; this
    /// is what keeps nilpotency bounds and weight vanishing arguments exact.
    pub fn extend(&self, name: &str, degree: u16, tail_raw: TermMap) -> Result<CohRing> {
        if degree == 0 {
            return Err(EngineError::DegenerateBundle);
        }
        if self.gen_index(name).is_some() {
            return Err(EngineError::Construction {
                reason: format!("generator name `{name}` already used"),
            });
        }
        let n = self.num_gens() + 1;
        let mut gens: Vec<Generator> = self
            .0
            .gens
            .iter()
            .map(|g| Generator {
                name: g.name.clone(),
                degree: g.degree,
                tail: g.tail.iter().map(|(e, c)| (pad(e, n), c.clone())).collect(),
            })
            .collect();
        for (e, c) in &tail_raw {
            assert_eq!(e.len(), n, "tail exponent arity mismatch");
            if e[n - 1] >= degree {
                return Err(EngineError::Construction {
                    reason: "rewrite tail not below the relation degree".into(),
                });
            }
            if !self.0.coeff.is_effective(c) {
                return Err(EngineError::BundleData {
                    reason: "relation coefficients must be effective (non-positive weights)".into(),
                });
            }
        }
        gens.push(Generator { name: name.to_string(), degree, tail: tail_raw });
        Ok(CohRing(Arc::new(RingData { coeff: self.0.coeff.clone(), gens })))
    }

    pub fn zero(&self) -> RingElem {
        RingElem { ring: self.clone(), terms: TermMap::new() }
    }

    pub fn one(&self) -> RingElem {
        self.from_coeff(self.0.coeff.one())
    }

    pub fn from_coeff(&self, c: Coeff) -> RingElem {
        let mut terms = TermMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; self.num_gens()], c);
        }
        RingElem { ring: self.clone(), terms }
    }

    pub fn from_int(&self, n: i64) -> RingElem {
        self.from_coeff(self.0.coeff.from_int(n))
    }

    pub fn from_rational(&self, r: Rational) -> RingElem {
        self.from_coeff(self.0.coeff.from_rational(r))
    }

    /// The generator `h_i` as an element.
    pub fn gen(&self, i: usize) -> RingElem {
        let mut e = vec![0; self.num_gens()];
        e[i] = 1;
        self.monomial(e, self.0.coeff.one())
    }

    pub fn monomial(&self, expo: ExpVec, c: Coeff) -> RingElem {
        let mut raw = TermMap::new();
        if !c.is_zero() {
            raw.insert(expo, c);
        }
        RingElem { ring: self.clone(), terms: self.normal_form(raw) }
    }

    /// All normal-form basis monomials (exponent of `h_i` below `d_i`),
    /// in graded-lex-stable deterministic order.
    pub fn basis(&self) -> Vec<ExpVec> {
        let mut out = vec![Vec::new()];
        for g in &self.0.gens {
            let mut next = Vec::with_capacity(out.len() * g.degree as usize);
            for e in &out {
                for k in 0..g.degree {
                    let mut e2 = e.clone();
                    e2.push(k);
                    next.push(e2);
                }
            }
            out = next;
        }
        out
    }

    /// Reduce a raw term map to normal form. Always reduces at the largest
    /// violating generator index; the triangular tails make this terminate.
    pub fn normal_form(&self, raw: TermMap) -> TermMap {
        let mut out = TermMap::new();
        let mut work: Vec<(ExpVec, Coeff)> = raw.into_iter().collect();
        while let Some((expo, c)) = work.pop() {
            if c.is_zero() {
                continue;
            }
            let viol = (0..self.num_gens())
                .rev()
                .find(|&i| expo[i] >= self.0.gens[i].degree);
            match viol {
                None => {
                    let entry = out.entry(expo).or_insert_with(|| self.0.coeff.zero());
                    *entry = self.0.coeff.add(entry, &c);
                    // zero entries pruned at the end
                }
                Some(i) => {
                    let g = &self.0.gens[i];
                    let mut rem = expo;
                    rem[i] -= g.degree;
                    if g.tail.is_empty() {
                        continue; // h_i^{d_i} -> 0
                    }
                    for (te, tc) in &g.tail {
                        let e: ExpVec = rem.iter().zip(te).map(|(a, b)| a + b).collect();
                        let prod = self
                            .0
                            .coeff
                            .mul(&c, tc)
                            .expect("relation coefficients stay inside the ring");
                        work.push((e, prod));
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Evaluate a truncated series at nilpotent ring elements, exactly.
    ///
    /// Soundness: each argument must have no generator-degree-0 part (so it
    /// is nilpotent, with index bounded by the ring's nilpotency bound) and
    /// the series order must reach that bound. Otherwise we refuse rather
    /// than return a silently truncated value.
    pub fn evaluate_series(&self, f: &Series, args: &[RingElem]) -> Result<RingElem> {
        assert_eq!(f.vars().len(), args.len(), "evaluation arity mismatch");
        assert_eq!(f.ring(), self.coeff_ring(), "series over a different coefficient ring");
        let bound = self.nilpotency_bound();
        if f.order() < bound {
            return Err(EngineError::TruncationUnsound { order: f.order(), bound });
        }
        for a in args {
            assert_eq!(&a.ring, self, "evaluation argument from a different ring");
            if !a.is_gen_positive() {
                return Err(EngineError::NonNilpotentArgument);
            }
        }
        let mut powers: Vec<Vec<RingElem>> = args.iter().map(|_| vec![self.one()]).collect();
        let mut acc = self.zero();
        for (e, c) in f.terms() {
            if e.iter().sum::<u32>() > bound {
                continue; // dies on nilpotents of this ring
            }
            let mut term = self.from_coeff(c.clone());
            for (i, &exp) in e.iter().enumerate() {
                while powers[i].len() <= exp as usize {
                    let next = powers[i].last().unwrap().mul(&args[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][exp as usize]);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

fn pad(e: &[u16], n: usize) -> ExpVec {
    let mut v = e.to_vec();
    v.resize(n, 0);
    v
}

/// An element of a `CohRing`, stored in normal form.
#[derive(Debug, Clone)]
pub struct RingElem {
    ring: CohRing,
    terms: TermMap,
}

impl PartialEq for RingElem {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}
impl Eq for RingElem {}

impl RingElem {
    pub fn ring(&self) -> &CohRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff_at(&self, expo: &[u16]) -> Coeff {
        self.terms
            .get(expo)
            .cloned()
            .unwrap_or_else(|| self.ring.coeff_ring().zero())
    }

    fn assert_same_ring(&self, other: &RingElem) {
        assert!(self.ring == other.ring, "ring elements from different presentations");
    }

    pub fn add(&self, other: &RingElem) -> RingElem {
        self.assert_same_ring(other);
        let cr = self.ring.coeff_ring();
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(|| cr.zero());
            *entry = cr.add(entry, c);
        }
        terms.retain(|_, c| !c.is_zero());
        RingElem { ring: self.ring.clone(), terms }
    }

    pub fn neg(&self) -> RingElem {
        let cr = self.ring.coeff_ring();
        RingElem {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), cr.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &RingElem) -> RingElem {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RingElem) -> RingElem {
        self.assert_same_ring(other);
        let cr = self.ring.coeff_ring();
        let mut raw = TermMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: ExpVec = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = cr.mul(ca, cb).expect("coefficient product stays inside the ring");
                let entry = raw.entry(e).or_insert_with(|| cr.zero());
                *entry = cr.add(entry, &c);
            }
        }
        RingElem { ring: self.ring.clone(), terms: self.ring.normal_form(raw) }
    }

    pub fn pow(&self, n: u32) -> RingElem {
        let mut acc = self.ring.one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &Coeff) -> RingElem {
        let cr = self.ring.coeff_ring();
        let mut terms = TermMap::new();
        for (e, v) in &self.terms {
            let p = cr.mul(v, c).expect("coefficient product stays inside the ring");
            if !p.is_zero() {
                terms.insert(e.clone(), p);
            }
        }
        RingElem { ring: self.ring.clone(), terms }
    }

    pub fn scale_rational(&self, r: &Rational) -> RingElem {
        self.scale(&self.ring.coeff_ring().from_rational(r.clone()))
    }

    /// The part supported on the empty generator monomial.
    pub fn gen_zero_part(&self) -> Coeff {
        self.coeff_at(&vec![0; self.ring.num_gens()])
    }

    /// True when every term has generator degree >= 1 (so the element is
    /// nilpotent in this ring).
    pub fn is_gen_positive(&self) -> bool {
        self.terms.keys().all(|e| e.iter().any(|x| *x > 0))
    }

    /// True when every coefficient monomial has weight <= 0.
    pub fn is_effective(&self) -> bool {
        let cr = self.ring.coeff_ring();
        self.terms.values().all(|c| cr.is_effective(c))
    }

    /// Weight of a term = generator degree + coefficient-monomial weight.
    pub fn weight_components(&self) -> BTreeMap<i64, RingElem> {
        let cr = self.ring.coeff_ring();
        let mut out: BTreeMap<i64, RingElem> = BTreeMap::new();
        for (e, c) in &self.terms {
            let gdeg: i64 = e.iter().map(|x| *x as i64).sum();
            for (w, part) in cr.weight_parts(c) {
                let entry = out.entry(gdeg + w).or_insert_with(|| self.ring.zero());
                let add = RingElem {
                    ring: self.ring.clone(),
                    terms: [(e.clone(), part)].into_iter().collect(),
                };
                *entry = entry.add(&add);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// The weight, for homogeneous elements (`None` if mixed; zero is
    /// homogeneous of every weight and reports `Some(w)` for no single w,
    /// so callers treat `is_zero` first).
    pub fn weight(&self) -> Option<i64> {
        let comps = self.weight_components();
        match comps.len() {
            0 => None,
            1 => comps.keys().next().copied(),
            _ => None,
        }
    }

    pub fn weight_part(&self, w: i64) -> RingElem {
        self.weight_components().remove(&w).unwrap_or_else(|| self.ring.zero())
    }

    /// Inverse of a unit: invertible generator-degree-0 part plus nilpotent
    /// remainder, inverted by a finite geometric series.
    pub fn inverse(&self) -> Result<RingElem> {
        let cr = self.ring.coeff_ring();
        let c0 = self.gen_zero_part();
        let c0_inv = cr.inverse(&c0)?;
        let mut n = self.scale(&c0_inv).neg();
        n = n.add(&self.ring.one());
        // n is generator-positive
        let mut acc = self.ring.one();
        let mut pw = self.ring.one();
        for _ in 0..self.ring.nilpotency_bound() {
            pw = pw.mul(&n);
            if pw.is_zero() {
                break;
            }
            acc = acc.add(&pw);
        }
        Ok(acc.scale(&c0_inv))
    }

    /// Canonical rendering: graded-lex term order, coefficient monomials in
    /// the coefficient ring's deterministic order.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let cr = self.ring.coeff_ring();
        let mut keys: Vec<&ExpVec> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().map(|x| *x as u32).sum();
            let db: u32 = b.iter().map(|x| *x as u32).sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, ex)| **ex != 0)
                .map(|(g, ex)| {
                    if *ex == 1 {
                        self.ring.gen_name(g).to_string()
                    } else {
                        format!("{}^{}", self.ring.gen_name(g), ex)
                    }
                })
                .collect();
            let cs = cr.render(c);
            let piece = if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono.join("*")
            } else if cs == "-1" {
                format!("-{}", mono.join("*"))
            } else if cs.contains(' ') {
                format!("({})*{}", cs, mono.join("*"))
            } else {
                format!("{}*{}", cs, mono.join("*"))
            };
            if i == 0 {
                out.push_str(&piece);
            } else if let Some(rest) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&piece);
            }
        }
        out
    }
}

impl std::fmt::Display for RingElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// A coefficient-ring-preserving ring map determined by generator images.
#[derive(Debug, Clone)]
pub struct RingMap {
    source: CohRing,
    target: CohRing,
    images: Vec<RingElem>,
}

impl RingMap {
    pub fn new(source: CohRing, target: CohRing, images: Vec<RingElem>) -> Self {
        assert_eq!(images.len(), source.num_gens());
        for img in &images {
            assert!(img.ring() == &target, "image from the wrong ring");
        }
        assert_eq!(source.coeff_ring(), target.coeff_ring());
        RingMap { source, target, images }
    }

    pub fn source(&self) -> &CohRing {
        &self.source
    }

    pub fn target(&self) -> &CohRing {
        &self.target
    }

    pub fn apply(&self, x: &RingElem) -> RingElem {
        assert!(x.ring() == &self.source, "ring map applied to foreign element");
        let mut powers: Vec<Vec<RingElem>> =
            self.images.iter().map(|_| vec![self.target.one()]).collect();
        let mut acc = self.target.zero();
        for (e, c) in x.terms() {
            let mut term = self.target.from_coeff(c.clone());
            for (i, &exp) in e.iter().enumerate() {
                while powers[i].len() <= exp as usize {
                    let next = powers[i].last().unwrap().mul(&self.images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][exp as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }
}

/// A module map that sends normal-form monomials to monomials: generator
/// `i` of the source is placed at generator `gen_map[i]` of the target,
/// coefficients unchanged. Used for the canonical lifts of the embeddings
/// in this model and for projection pullbacks.
#[derive(Debug, Clone)]
pub struct MonomialEmbed {
    source: CohRing,
    target: CohRing,
    gen_map: Vec<usize>,
}

impl MonomialEmbed {
    pub fn new(source: CohRing, target: CohRing, gen_map: Vec<usize>) -> Result<Self> {
        assert_eq!(gen_map.len(), source.num_gens());
        assert_eq!(source.coeff_ring(), target.coeff_ring());
        for (i, &j) in gen_map.iter().enumerate() {
            if source.gens()[i].degree > target.gens()[j].degree {
                return Err(EngineError::Construction {
                    reason: "monomial embedding does not preserve normal forms".into(),
                });
            }
        }
        Ok(MonomialEmbed { source, target, gen_map })
    }

    pub fn source(&self) -> &CohRing {
        &self.source
    }

    pub fn target(&self) -> &CohRing {
        &self.target
    }

    pub fn apply(&self, x: &RingElem) -> RingElem {
        assert!(x.ring() == &self.source, "monomial embed applied to foreign element");
        let mut raw = TermMap::new();
        for (e, c) in x.terms() {
            let mut t = vec![0u16; self.target.num_gens()];
            for (i, &exp) in e.iter().enumerate() {
                t[self.gen_map[i]] += exp;
            }
            raw.insert(t, c.clone());
        }
        RingElem { ring: self.target.clone(), terms: self.target.normal_form(raw) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_int;

    /// `Q[h]/(h^{n+1})`: the cohomology of projective n-space with trivial
    /// relation tail.
    fn pn(n: u16) -> CohRing {
        CohRing::point(CoeffRing::Rationals)
            .extend("h", n + 1, TermMap::new())
            .unwrap()
    }

    #[test]
    fn normal_form_kills_top_powers() {
        let p1 = pn(1);
        let h = p1.gen(0);
        assert!(h.mul(&h).is_zero()); // h^2 = 0 in CH(P^1)
        assert_eq!(h, p1.gen(0)); // already normal

        let p2 = pn(2);
        let h = p2.gen(0);
        assert!(h.pow(3).is_zero());
        assert!(h.pow(2).mul(&h.pow(2)).is_zero());
        assert!(!h.pow(2).is_zero());
    }

    #[test]
    fn nontrivial_relation_tail() {
        // k^2 = h k (the ring of P(O + O(h)) over P^1)
        let base = pn(1);
        let mut tail = TermMap::new();
        tail.insert(vec![1, 1], CoeffRing::Rationals.one());
        let ring = base.extend("k", 2, tail).unwrap();
        let h = ring.gen(0);
        let k = ring.gen(1);
        assert_eq!(k.pow(2), h.mul(&k));
        assert!(k.pow(3).is_zero()); // k^3 = h k^2 = h^2 k = 0
        assert_eq!(ring.rank(), 4);
        assert_eq!(ring.nilpotency_bound(), 2);
    }

    #[test]
    fn normal_form_is_idempotent_and_bounded() {
        let ring = pn(3);
        let h = ring.gen(0);
        let x = h.add(&h.pow(2).scale_rational(&rat_int(5)));
        for (e, _) in x.terms() {
            assert!(e[0] < 4);
        }
        // re-normalizing a normal element is the identity
        let renorm = RingElem {
            ring: ring.clone(),
            terms: ring.normal_form(x.terms.clone()),
        };
        assert_eq!(renorm, x);
    }

    #[test]
    fn ring_axioms_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let base = pn(2);
        let mut tail = TermMap::new();
        tail.insert(vec![1, 1], CoeffRing::Rationals.one());
        let ring = base.extend("k", 2, tail).unwrap();

        let random_elem = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut e = ring.zero();
            for b in ring.basis() {
                if rng.gen_bool(0.4) {
                    let c: i64 = rng.gen_range(-4..=4);
                    e = e.add(&ring.monomial(b.clone(), ring.coeff_ring().from_int(c)));
                }
            }
            e
        };
        for _ in 0..200 {
            let a = random_elem(&mut rng);
            let b = random_elem(&mut rng);
            let c = random_elem(&mut rng);
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }
    }

    #[test]
    fn evaluate_geometric_series_on_p2() {
        // f = t/(1-t) = t + t^2 + ..., evaluated at h in CH(P^2): h + h^2
        let ring = pn(2);
        let h = ring.gen(0);
        let q = CoeffRing::Rationals;
        let t = Series::var(q.clone(), vec!["t".into()], 0, 10);
        let f = t
            .mul(&Series::one(q.clone(), vec!["t".into()], 10).sub(&t).reciprocal().unwrap())
            .unwrap();
        let v = ring.evaluate_series(&f, std::slice::from_ref(&h)).unwrap();
        assert_eq!(v, h.add(&h.pow(2)));
    }

    #[test]
    fn evaluate_identity_and_constant() {
        let ring = pn(2);
        let h = ring.gen(0);
        let q = CoeffRing::Rationals;
        let t = Series::var(q.clone(), vec!["t".into()], 0, 10);
        assert_eq!(ring.evaluate_series(&t, std::slice::from_ref(&h)).unwrap(), h);
        let c = Series::constant(q.clone(), vec!["t".into()], 10, q.from_int(7));
        assert_eq!(
            ring.evaluate_series(&c, &[ring.zero()]).unwrap(),
            ring.from_int(7)
        );
    }

    #[test]
    fn evaluate_refuses_unsound_truncation() {
        let ring = pn(4); // bound 4
        let q = CoeffRing::Rationals;
        let t = Series::var(q, vec!["t".into()], 0, 3);
        let err = ring.evaluate_series(&t, &[ring.gen(0)]).unwrap_err();
        assert!(matches!(err, EngineError::TruncationUnsound { order: 3, bound: 4 }));
    }

    #[test]
    fn evaluate_refuses_non_nilpotent_argument() {
        let ring = pn(2);
        let q = CoeffRing::Rationals;
        let t = Series::var(q, vec!["t".into()], 0, 10);
        let arg = ring.one().add(&ring.gen(0));
        assert!(matches!(
            ring.evaluate_series(&t, &[arg]),
            Err(EngineError::NonNilpotentArgument)
        ));
    }

    #[test]
    fn evaluate_is_multiplicative() {
        let ring = pn(3);
        let h = ring.gen(0);
        let q = CoeffRing::Rationals;
        let t = Series::var(q.clone(), vec!["t".into()], 0, 10);
        let f = t.add(&t.pow(2).unwrap());
        let g = t.scale_rational(&rat_int(2)).add(&t.pow(3).unwrap().neg());
        let x = h.add(&h.pow(2));
        let lhs = ring.evaluate_series(&f.mul(&g).unwrap(), std::slice::from_ref(&x)).unwrap();
        let rhs = ring
            .evaluate_series(&f, std::slice::from_ref(&x))
            .unwrap()
            .mul(&ring.evaluate_series(&g, &[x]).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn weights_and_effectiveness() {
        let lb = CoeffRing::laurent_beta();
        let ring = CohRing::point(lb.clone()).extend("h", 3, TermMap::new()).unwrap();
        let h = ring.gen(0);
        let beta = ring.from_coeff(lb.beta(1).unwrap());
        let x = h.pow(2).mul(&beta); // weight 2 - 1 = 1
        assert_eq!(x.weight(), Some(1));
        assert!(x.is_effective());
        let y = x.add(&h); // weights 1 and 1: homogeneous
        assert_eq!(y.weight(), Some(1));
        let z = x.add(&h.pow(2)); // weights 1 and 2
        assert_eq!(z.weight(), None);
        assert_eq!(z.weight_part(2), h.pow(2));
    }

    #[test]
    fn unit_inverse() {
        let ring = pn(3);
        let h = ring.gen(0);
        let u = ring.one().add(&h);
        let v = u.inverse().unwrap();
        assert_eq!(u.mul(&v), ring.one());
        // 1/(1+h) = 1 - h + h^2 - h^3
        assert_eq!(
            v,
            ring.one()
                .sub(&h)
                .add(&h.pow(2))
                .sub(&h.pow(3))
        );
        assert!(h.inverse().is_err());
    }

    #[test]
    fn monomial_embed_and_ring_map() {
        let p1 = pn(1);
        let p2 = pn(2);
        let inc = MonomialEmbed::new(p1.clone(), p2.clone(), vec![0]).unwrap();
        let lifted = inc.apply(&p1.gen(0));
        assert_eq!(lifted, p2.gen(0));
        // restriction P^2 -> P^1 sends h to h
        let restrict = RingMap::new(p2.clone(), p1.clone(), vec![p1.gen(0)]);
        assert_eq!(restrict.apply(&p2.gen(0).pow(2)), p1.zero());
        assert_eq!(restrict.apply(&p2.gen(0)), p1.gen(0));
    }

    #[test]
    fn rendering_is_graded_lex() {
        let base = pn(2);
        let mut tail = TermMap::new();
        tail.insert(vec![1, 1], CoeffRing::Rationals.one());
        let ring = base.extend("k", 2, tail).unwrap();
        let h = ring.gen(0);
        let k = ring.gen(1);
        let x = k.add(&h.pow(2)).add(&h.mul(&k).scale_rational(&rat_int(-3))).add(&ring.from_int(2));
        assert_eq!(x.render(), "2 + k + h^2 - 3*h*k");
    }
}
