//! Symmetric polynomials in formal Chern roots, reduced to the elementary
//! symmetric basis.
//!
//! This is the computational form of the splitting principle: a
//! characteristic class of a bundle given by Chern data is expanded in
//! formal roots `y_1..y_n`, reduced to a polynomial in the elementary
//! symmetric functions `e_1..e_n`, and then the `e_k` are substituted by
//! the actual Chern classes. Coefficients live in a `CohRing`, so partially
//! evaluated (nilpotent) classes can appear inside the factors.
//!
//! Reduction is the classical leading-monomial algorithm, run degree by
//! degree; it is exact on each homogeneous slice.

use std::collections::BTreeMap;

use super::ring::{CohRing, RingElem};
use crate::error::{EngineError, Result};

type YExp = Vec<u16>;

/// A polynomial in formal root variables `y_1..y_n` with `CohRing`
/// coefficients, truncated at a total-degree cap (degrees above the cap
/// die after substitution by nilpotent classes, so dropping them is exact
/// for the engine's uses).
#[derive(Debug, Clone, PartialEq)]
pub struct SymPoly {
    ring: CohRing,
    nvars: usize,
    cap: u32,
    terms: BTreeMap<YExp, RingElem>,
}

fn ydeg(e: &[u16]) -> u32 {
    e.iter().map(|x| *x as u32).sum()
}

impl SymPoly {
    pub fn zero(ring: CohRing, nvars: usize, cap: u32) -> Self {
        SymPoly { ring, nvars, cap, terms: BTreeMap::new() }
    }

    pub fn constant(ring: CohRing, nvars: usize, cap: u32, c: RingElem) -> Self {
        let mut p = SymPoly::zero(ring, nvars, cap);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(ring: CohRing, nvars: usize, cap: u32) -> Self {
        let c = ring.one();
        SymPoly::constant(ring, nvars, cap, c)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: YExp, c: RingElem) {
        debug_assert_eq!(e.len(), self.nvars);
        if ydeg(&e) > self.cap || c.is_zero() {
            return;
        }
        let cur = self.terms.remove(&e);
        let sum = match cur {
            Some(v) => v.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        out.cap = self.cap.min(other.cap);
        out.terms.retain(|e, _| ydeg(e) <= out.cap);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        let mut neg = other.clone();
        neg.terms = neg.terms.into_iter().map(|(e, c)| (e, c.neg())).collect();
        self.add(&neg)
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, other.nvars);
        let cap = self.cap.min(other.cap);
        let mut out = SymPoly::zero(self.ring.clone(), self.nvars, cap);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                if ydeg(ea) + ydeg(eb) > cap {
                    continue;
                }
                let e: YExp = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &RingElem) -> SymPoly {
        let mut out = SymPoly::zero(self.ring.clone(), self.nvars, self.cap);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.mul(c));
        }
        out
    }

    /// Apply a permutation of the variables.
    fn permute(&self, perm: &[usize]) -> SymPoly {
        let mut out = SymPoly::zero(self.ring.clone(), self.nvars, self.cap);
        for (e, c) in &self.terms {
            let mut e2 = vec![0u16; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                e2[perm[i]] = x;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Invariance under all adjacent transpositions (which generate the
    /// symmetric group).
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.nvars.saturating_sub(1) {
            let mut perm: Vec<usize> = (0..self.nvars).collect();
            perm.swap(i, i + 1);
            if self.permute(&perm) != *self {
                return false;
            }
        }
        true
    }

    /// The elementary symmetric polynomial `e_k(y_1..y_n)` as a `SymPoly`.
    pub fn elementary(ring: CohRing, nvars: usize, cap: u32, k: usize) -> SymPoly {
        let mut out = SymPoly::zero(ring.clone(), nvars, cap);
        if k > nvars {
            return out;
        }
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            let mut e = vec![0u16; nvars];
            for &i in &subset {
                e[i] = 1;
            }
            out.add_term(e, ring.one());
            // next k-subset in lex order
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if subset[i] != i + nvars - k {
                    break;
                }
            }
            if subset[i] == i + nvars - k {
                return out;
            }
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }

    /// Expand a polynomial in the elementary symmetric functions (exponent
    /// vector over e_1..e_n -> coefficient) back into the roots.
    pub fn expand_elementary(
        ring: &CohRing,
        nvars: usize,
        cap: u32,
        epoly: &BTreeMap<YExp, RingElem>,
    ) -> SymPoly {
        let mut out = SymPoly::zero(ring.clone(), nvars, cap);
        let mut cache: Vec<SymPoly> = (0..=nvars)
            .map(|k| SymPoly::elementary(ring.clone(), nvars, cap, k))
            .collect();
        cache[0] = SymPoly::one(ring.clone(), nvars, cap);
        for (ee, c) in epoly {
            let mut term = SymPoly::constant(ring.clone(), nvars, cap, c.clone());
            for (k, &exp) in ee.iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&cache[k + 1]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Rewrite a symmetric polynomial as a polynomial in `e_1..e_n`,
    /// exactly, degree slice by degree slice. Errors if not symmetric.
    pub fn reduce_elementary(&self) -> Result<BTreeMap<YExp, RingElem>> {
        if !self.is_symmetric() {
            return Err(EngineError::NotSymmetric);
        }
        let mut out: BTreeMap<YExp, RingElem> = BTreeMap::new();
        let mut rest = self.clone();
        while !rest.is_zero() {
            // lex-greatest exponent: for a symmetric polynomial this is a
            // partition (weakly decreasing)
            let lead = rest.terms.keys().max_by(|a, b| a.cmp(b)).unwrap().clone();
            let c = rest.terms.get(&lead).unwrap().clone();
            if lead.windows(2).any(|w| w[0] < w[1]) {
                return Err(EngineError::NotSymmetric);
            }
            // leading monomial of prod e_k^{m_k} with m_k = lead_k - lead_{k+1}
            let mut eexp = vec![0u16; self.nvars];
            for k in 0..self.nvars {
                let next = if k + 1 < self.nvars { lead[k + 1] } else { 0 };
                eexp[k] = lead[k] - next;
            }
            let mut single = BTreeMap::new();
            single.insert(eexp.clone(), c.clone());
            let expanded = SymPoly::expand_elementary(&self.ring, self.nvars, self.cap, &single);
            rest = rest.sub(&expanded);
            let entry = out.remove(&eexp);
            let sum = match entry {
                Some(v) => v.add(&c),
                None => c,
            };
            if !sum.is_zero() {
                out.insert(eexp, sum);
            }
        }
        Ok(out)
    }

    /// Substitute concrete values for `e_1..e_n` in a reduced polynomial.
    pub fn substitute_elementary(
        ring: &CohRing,
        epoly: &BTreeMap<YExp, RingElem>,
        values: &[RingElem],
    ) -> RingElem {
        let mut acc = ring.zero();
        for (ee, c) in epoly {
            let mut term = c.clone();
            for (k, &exp) in ee.iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&values[k]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// One-shot: reduce a symmetric polynomial and substitute the given
    /// elementary values (the Chern classes of the bundle being split).
    pub fn reduce_and_substitute(&self, values: &[RingElem]) -> Result<RingElem> {
        assert_eq!(values.len(), self.nvars);
        let reduced = self.reduce_elementary()?;
        Ok(SymPoly::substitute_elementary(&self.ring, &reduced, values))
    }
}

/// Elementary symmetric functions `e_0..e_m` of a list of polynomial
/// factors, built by the usual one-factor-at-a-time convolution.
pub fn elementary_of(ring: &CohRing, nvars: usize, cap: u32, factors: &[SymPoly]) -> Vec<SymPoly> {
    let mut acc = vec![SymPoly::one(ring.clone(), nvars, cap)];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() + 1);
        next.push(acc[0].clone());
        for j in 1..acc.len() {
            next.push(acc[j].add(&acc[j - 1].mul(f)));
        }
        next.push(acc[acc.len() - 1].mul(f));
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::CoeffRing;

    fn qring() -> CohRing {
        CohRing::point(CoeffRing::Rationals)
    }

    fn var(ring: &CohRing, n: usize, i: usize, cap: u32) -> SymPoly {
        let mut p = SymPoly::zero(ring.clone(), n, cap);
        let mut e = vec![0u16; n];
        e[i] = 1;
        p.add_term(e, ring.one());
        p
    }

    #[test]
    fn e1_and_e3_definitions() {
        let r = qring();
        // y1 + y2 -> e1
        let p = var(&r, 2, 0, 6).add(&var(&r, 2, 1, 6));
        let red = p.reduce_elementary().unwrap();
        assert_eq!(red.len(), 1);
        assert_eq!(red.get(&vec![1, 0]).unwrap(), &r.one());

        // y1 y2 y3 -> e3
        let p = var(&r, 3, 0, 6).mul(&var(&r, 3, 1, 6)).mul(&var(&r, 3, 2, 6));
        let red = p.reduce_elementary().unwrap();
        assert_eq!(red.len(), 1);
        assert_eq!(red.get(&vec![0, 0, 1]).unwrap(), &r.one());
    }

    #[test]
    fn power_sum_two_vars() {
        // y1^2 + y2^2 = e1^2 - 2 e2
        let r = qring();
        let p = {
            let y1 = var(&r, 2, 0, 6);
            let y2 = var(&r, 2, 1, 6);
            y1.mul(&y1).add(&y2.mul(&y2))
        };
        let red = p.reduce_elementary().unwrap();
        assert_eq!(red.get(&vec![2, 0]).unwrap(), &r.one());
        assert_eq!(red.get(&vec![0, 1]).unwrap(), &r.from_int(-2));
        assert_eq!(red.len(), 2);
    }

    #[test]
    fn rejects_non_symmetric_input() {
        let r = qring();
        let p = var(&r, 2, 0, 6); // y1 alone
        assert!(matches!(p.reduce_elementary(), Err(EngineError::NotSymmetric)));
    }

    #[test]
    fn substitution_round_trip() {
        // reduce then substitute e_k(roots) reproduces evaluation at roots
        let r = CohRing::point(CoeffRing::Rationals)
            .extend("h", 4, BTreeMap::new())
            .unwrap();
        let h = r.gen(0);
        let roots = [h.clone(), h.scale_rational(&crate::algebra::rational::rat_int(2))];
        // P = y1^2 y2 + y1 y2^2 (symmetric)
        let y1 = var(&r, 2, 0, 6);
        let y2 = var(&r, 2, 1, 6);
        let p = y1.mul(&y1).mul(&y2).add(&y1.mul(&y2).mul(&y2));
        let e1 = roots[0].add(&roots[1]);
        let e2 = roots[0].mul(&roots[1]);
        let via_reduction = p.reduce_and_substitute(&[e1, e2]).unwrap();
        // direct evaluation: r1^2 r2 + r1 r2^2 = 2h^3 + 4h^3 = 6h^3
        let direct = roots[0]
            .pow(2)
            .mul(&roots[1])
            .add(&roots[0].mul(&roots[1].pow(2)));
        assert_eq!(via_reduction, direct);
    }

    proptest::proptest! {
        #[test]
        fn random_symmetric_round_trip(seed in 0u64..500) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let r = qring();
            let n = rng.gen_range(1usize..=4);
            let cap = 6;
            // random polynomial in e_1..e_n of degree <= 6
            let mut epoly: BTreeMap<Vec<u16>, RingElem> = BTreeMap::new();
            for _ in 0..rng.gen_range(1..=4) {
                let mut ee = vec![0u16; n];
                let mut deg = 0u32;
                for (k, slot) in ee.iter_mut().enumerate() {
                    let m = rng.gen_range(0..=2u16);
                    if deg + (k as u32 + 1) * m as u32 <= cap {
                        *slot = m;
                        deg += (k as u32 + 1) * m as u32;
                    }
                }
                let c: i64 = rng.gen_range(-3..=3);
                if c != 0 {
                    epoly.insert(ee, r.from_int(c));
                }
            }
            let p = SymPoly::expand_elementary(&r, n, cap, &epoly);
            proptest::prop_assert!(p.is_symmetric());
            let red = p.reduce_elementary().unwrap();
            let back = SymPoly::expand_elementary(&r, n, cap, &red);
            proptest::prop_assert!(back.sub(&p).is_zero());
        }
    }
}
