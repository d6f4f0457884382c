//! Coefficient rings: the ground rings the whole engine computes over.
//!
//! Three families are supported:
//! - `Rationals`: plain exact rationals.
//! - `LaurentBeta`: Laurent polynomials in a single invertible generator
//!   `beta` of weight -1, with a declared exponent window. Arithmetic that
//!   would leave the window is an error, never a silent truncation.
//! - `Universal`: polynomials in `b1..bk` with `b_i` of weight `-i`,
//!   truncated by total weight magnitude. Discarding heavy monomials is the
//!   defining relation of the ring, not an error.
//!
//! Elements are sparse sums of monomials in the ring generators with
//! [`Rational`] coefficients. Every element decomposes into
//! weight-homogeneous parts.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::rational::{render, Rational};
use crate::error::EngineError;

/// Descriptor of a coefficient ring. Cheap to clone and compare.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffRing {
    /// Exact rationals, no generators.
    Rationals,
    /// Laurent ring in `beta` (weight -1); exponents restricted to
    /// `[-window, window]`.
    LaurentBeta { window: i32 },
    /// `b1..bk` with `b_i` of weight `-i`; monomials of total weight
    /// magnitude above `weight_cap` are discarded by the ring relation.
    Universal { k: usize, weight_cap: u32 },
}

/// A coefficient-ring element: exponent vectors over the ring generators
/// mapped to nonzero rationals. The exponent vector is empty for
/// `Rationals`, length 1 for `LaurentBeta`, length `k` for `Universal`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coeff {
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl CoeffRing {
    pub fn laurent_beta() -> Self {
        CoeffRing::LaurentBeta { window: 64 }
    }

    pub fn universal(k: usize, weight_cap: u32) -> Self {
        CoeffRing::Universal { k, weight_cap }
    }

    /// Number of ring generators (length of exponent vectors).
    pub fn arity(&self) -> usize {
        match self {
            CoeffRing::Rationals => 0,
            CoeffRing::LaurentBeta { .. } => 1,
            CoeffRing::Universal { k, .. } => *k,
        }
    }

    /// Generator names, in exponent-vector order.
    pub fn symbols(&self) -> Vec<String> {
        match self {
            CoeffRing::Rationals => vec![],
            CoeffRing::LaurentBeta { .. } => vec!["beta".to_string()],
            CoeffRing::Universal { k, .. } => (1..=*k).map(|i| format!("b{i}")).collect(),
        }
    }

    /// Weight of a monomial. `beta` has weight -1, `b_i` has weight `-i`.
    pub fn monomial_weight(&self, expo: &[i32]) -> i64 {
        match self {
            CoeffRing::Rationals => 0,
            CoeffRing::LaurentBeta { .. } => -(expo[0] as i64),
            CoeffRing::Universal { .. } => {
                -expo.iter().enumerate().map(|(i, e)| (i as i64 + 1) * *e as i64).sum::<i64>()
            }
        }
    }

    fn admits(&self, expo: &[i32]) -> Result<bool, EngineError> {
        match self {
            CoeffRing::Rationals => Ok(true),
            CoeffRing::LaurentBeta { window } => {
                if expo[0].abs() > *window {
                    Err(EngineError::CoeffWindow {
                        exponent: expo[0],
                        window: *window,
                    })
                } else {
                    Ok(true)
                }
            }
            CoeffRing::Universal { weight_cap, .. } => {
                Ok(self.monomial_weight(expo).unsigned_abs() <= *weight_cap as u64)
            }
        }
    }

    pub fn zero(&self) -> Coeff {
        Coeff { terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Coeff {
        self.from_rational(Rational::from_integer(1.into()))
    }

    pub fn from_rational(&self, r: Rational) -> Coeff {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(vec![0; self.arity()], r);
        }
        Coeff { terms }
    }

    pub fn from_int(&self, n: i64) -> Coeff {
        self.from_rational(super::rational::rat_int(n))
    }

    /// `beta^e` in the Laurent ring.
    pub fn beta(&self, e: i32) -> Result<Coeff, EngineError> {
        match self {
            CoeffRing::LaurentBeta { .. } => {
                self.admits(&[e])?;
                let mut terms = BTreeMap::new();
                terms.insert(vec![e], Rational::from_integer(1.into()));
                Ok(Coeff { terms })
            }
            _ => Err(EngineError::UnknownSymbol { name: "beta".into() }),
        }
    }

    /// The generator `b_i` (1-based) of the universal ring.
    pub fn b(&self, i: usize) -> Result<Coeff, EngineError> {
        match self {
            CoeffRing::Universal { k, .. } if i >= 1 && i <= *k => {
                let mut expo = vec![0; *k];
                expo[i - 1] = 1;
                let mut terms = BTreeMap::new();
                terms.insert(expo, Rational::from_integer(1.into()));
                Ok(Coeff { terms })
            }
            _ => Err(EngineError::UnknownSymbol { name: format!("b{i}") }),
        }
    }

    /// Element from a symbol name, if the ring declares it.
    pub fn symbol(&self, name: &str) -> Result<Coeff, EngineError> {
        if name == "beta" {
            return self.beta(1);
        }
        if let Some(idx) = name.strip_prefix('b').and_then(|s| s.parse::<usize>().ok()) {
            if matches!(self, CoeffRing::Universal { .. }) {
                return self.b(idx);
            }
        }
        Err(EngineError::UnknownSymbol { name: name.into() })
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        let mut terms = a.terms.clone();
        for (e, c) in &b.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Coeff { terms }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        Coeff {
            terms: a.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Result<Coeff, EngineError> {
        let mut terms: BTreeMap<Vec<i32>, Rational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if !self.admits(&e)? {
                    // universal ring: heavy monomials die by the ring relation
                    continue;
                }
                let entry = terms.entry(e).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Coeff { terms })
    }

    pub fn scale(&self, a: &Coeff, r: &Rational) -> Coeff {
        if r.is_zero() {
            return self.zero();
        }
        Coeff {
            terms: a.terms.iter().map(|(e, c)| (e.clone(), c * r)).collect(),
        }
    }

    /// Multiplicative inverse, when `a` is a unit: any nonzero rational, a
    /// single Laurent monomial, or a universal element with nonzero constant
    /// term (its heavier part is nilpotent in the truncated ring).
    pub fn inverse(&self, a: &Coeff) -> Result<Coeff, EngineError> {
        if a.is_zero() {
            return Err(EngineError::NotAUnit { value: self.render(a) });
        }
        match self {
            CoeffRing::Rationals => {
                let c = a.terms.values().next().unwrap();
                Ok(self.from_rational(c.recip()))
            }
            CoeffRing::LaurentBeta { .. } => {
                if a.terms.len() != 1 {
                    return Err(EngineError::NotAUnit { value: self.render(a) });
                }
                let (e, c) = a.terms.iter().next().unwrap();
                self.admits(&[-e[0]])?;
                let mut terms = BTreeMap::new();
                terms.insert(vec![-e[0]], c.recip());
                Ok(Coeff { terms })
            }
            CoeffRing::Universal { weight_cap, .. } => {
                let zero_expo = vec![0; self.arity()];
                let c0 = a
                    .terms
                    .get(&zero_expo)
                    .cloned()
                    .ok_or_else(|| EngineError::NotAUnit { value: self.render(a) })?;
                // a = c0 (1 - n) with n of strictly negative weight; invert by
                // a finite geometric series (n is nilpotent past the cap).
                let mut n = self.scale(a, &c0.recip());
                n.terms.remove(&zero_expo);
                n = self.neg(&n);
                let mut acc = self.one();
                let mut pw = self.one();
                for _ in 0..*weight_cap {
                    pw = self.mul(&pw, &n)?;
                    if pw.is_zero() {
                        break;
                    }
                    acc = self.add(&acc, &pw);
                }
                Ok(self.scale(&acc, &c0.recip()))
            }
        }
    }

    pub fn is_unit(&self, a: &Coeff) -> bool {
        self.inverse(a).is_ok()
    }

    /// Split into weight-homogeneous parts.
    pub fn weight_parts(&self, a: &Coeff) -> BTreeMap<i64, Coeff> {
        let mut out: BTreeMap<i64, Coeff> = BTreeMap::new();
        for (e, c) in &a.terms {
            let w = self.monomial_weight(e);
            out.entry(w)
                .or_insert_with(|| self.zero())
                .terms
                .insert(e.clone(), c.clone());
        }
        out
    }

    /// True when every monomial has weight <= 0. Classes produced by the
    /// geometry only ever carry such coefficients; the nilpotency bounds
    /// used for exact series evaluation rely on it.
    pub fn is_effective(&self, a: &Coeff) -> bool {
        a.terms.keys().all(|e| self.monomial_weight(e) <= 0)
    }

    /// Canonical rendering, deterministic term order.
    pub fn render(&self, a: &Coeff) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let syms = self.symbols();
        let mut parts = Vec::new();
        for (e, c) in &a.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, ex)| **ex != 0)
                .map(|(i, ex)| {
                    if *ex == 1 {
                        syms[i].clone()
                    } else {
                        format!("{}^{}", syms[i], ex)
                    }
                })
                .collect();
            let piece = if mono.is_empty() {
                render(c)
            } else if c == &Rational::from_integer(1.into()) {
                mono.join("*")
            } else if c == &Rational::from_integer((-1).into()) {
                format!("-{}", mono.join("*"))
            } else {
                format!("{}*{}", render(c), mono.join("*"))
            };
            parts.push(piece);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational multiple of the empty monomial (the "constant" part).
    pub fn constant_part(&self, ring: &CoeffRing) -> Rational {
        self.terms
            .get(&vec![0; ring.arity()])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Rational value of an element that must be a pure rational.
    pub fn as_rational(&self, ring: &CoeffRing) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|x| *x == 0) {
                return Some(c.clone());
            }
        }
        let _ = ring;
        None
    }

    /// Coefficient of `beta^e` / the given exponent vector.
    pub fn coeff_of(&self, expo: &[i32]) -> Rational {
        self.terms.get(expo).cloned().unwrap_or_else(Rational::zero)
    }

    /// Report-only: evaluate every ring generator at 1, forgetting the
    /// grading. This is how classical numbers are displayed from graded
    /// values; it is never valid inside a graded assertion.
    pub fn ungraded_value(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Rational)> {
        self.terms.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_int;

    #[test]
    fn laurent_arithmetic_and_window() {
        let r = CoeffRing::LaurentBeta { window: 3 };
        let b = r.beta(1).unwrap();
        let b2 = r.mul(&b, &b).unwrap();
        assert_eq!(r.monomial_weight(&[2]), -2);
        assert_eq!(r.render(&b2), "beta^2");
        let binv = r.inverse(&b).unwrap();
        assert_eq!(r.mul(&b, &binv).unwrap(), r.one());
        // blowing the window errors instead of truncating
        let b3 = r.mul(&b2, &b).unwrap();
        assert!(r.mul(&b3, &b).is_err());
    }

    #[test]
    fn universal_truncates_by_weight_as_ring_relation() {
        let r = CoeffRing::universal(2, 3);
        let b1 = r.b(1).unwrap();
        let b2 = r.b(2).unwrap();
        let p = r.mul(&b1, &b2).unwrap(); // weight -3: kept
        assert!(!p.is_zero());
        let q = r.mul(&p, &b1).unwrap(); // weight -4: discarded by relation
        assert!(q.is_zero());
    }

    #[test]
    fn universal_inverse_of_unit() {
        let r = CoeffRing::universal(2, 4);
        let u = r.add(&r.one(), &r.b(1).unwrap()); // 1 + b1
        let inv = r.inverse(&u).unwrap();
        assert_eq!(r.mul(&u, &inv).unwrap(), r.one());
        assert!(r.inverse(&r.b(1).unwrap()).is_err());
    }

    #[test]
    fn weight_parts_and_effectiveness() {
        let r = CoeffRing::laurent_beta();
        let e = r.add(&r.one(), &r.beta(2).unwrap());
        let parts = r.weight_parts(&e);
        assert_eq!(parts.len(), 2);
        assert!(parts.contains_key(&0) && parts.contains_key(&-2));
        assert!(r.is_effective(&e));
        assert!(!r.is_effective(&r.beta(-1).unwrap()));
    }

    #[test]
    fn rendering() {
        let r = CoeffRing::universal(3, 10);
        let mut e = r.b(1).unwrap();
        e = r.mul(&e, &r.b(3).unwrap()).unwrap();
        e = r.add(&e, &r.from_rational(crate::algebra::rational::rat(-1, 2)));
        assert_eq!(r.render(&e), "-1/2 + b1*b3");
        assert_eq!(r.render(&r.zero()), "0");
        assert_eq!(r.from_int(0), r.zero());
        assert_eq!(r.from_int(2).as_rational(&r), Some(rat_int(2)));
        // report-only weight forgetting: -1/2 + b1*b3 at b := 1
        assert_eq!(e.ungraded_value(), crate::algebra::rational::rat(1, 2));
    }
}
