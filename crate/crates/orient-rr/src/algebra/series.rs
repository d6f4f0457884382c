//! Truncated multivariate power series over a coefficient ring.
//!
//! A `Series` stores the coefficients of all monomials of total degree at
//! most `order`; everything above the order is unknown and dropped. Two
//! series are equal iff all retained coefficients agree. Composition and
//! reversion are exact modulo the truncation order.
//!
//! Invariants:
//! - no stored exponent vector has total degree > `order`
//! - no stored coefficient is zero
//! - all binary operations require the same variable list and coefficient ring

use std::collections::BTreeMap;

use super::coeff::{Coeff, CoeffRing};
use super::rational::{factorial, rat_int, Rational};
use crate::error::{EngineError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    ring: CoeffRing,
    vars: Vec<String>,
    order: u32,
    terms: BTreeMap<Vec<u32>, Coeff>,
}

fn total_degree(expo: &[u32]) -> u32 {
    expo.iter().sum()
}

impl Series {
    pub fn zero(ring: CoeffRing, vars: Vec<String>, order: u32) -> Self {
        Series { ring, vars, order, terms: BTreeMap::new() }
    }

    pub fn constant(ring: CoeffRing, vars: Vec<String>, order: u32, c: Coeff) -> Self {
        let mut s = Series::zero(ring, vars, order);
        s.set(vec![0; s.vars.len()], c);
        s
    }

    pub fn one(ring: CoeffRing, vars: Vec<String>, order: u32) -> Self {
        let c = ring.one();
        Series::constant(ring, vars, order, c)
    }

    /// The variable `vars[idx]` as a series.
    pub fn var(ring: CoeffRing, vars: Vec<String>, idx: usize, order: u32) -> Self {
        let mut s = Series::zero(ring, vars, order);
        let mut e = vec![0; s.vars.len()];
        e[idx] = 1;
        let c = s.ring.one();
        s.set(e, c);
        s
    }

    /// Univariate series in `var` from `(exponent, coefficient)` pairs.
    pub fn univariate(
        ring: CoeffRing,
        var: &str,
        order: u32,
        coeffs: impl IntoIterator<Item = (u32, Coeff)>,
    ) -> Self {
        let mut s = Series::zero(ring, vec![var.to_string()], order);
        for (e, c) in coeffs {
            s.set(vec![e], c);
        }
        s
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, expo: &[u32]) -> Coeff {
        self.terms.get(expo).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Coeff)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(&vec![0; self.vars.len()])
    }

    fn set(&mut self, expo: Vec<u32>, c: Coeff) {
        debug_assert_eq!(expo.len(), self.vars.len());
        if total_degree(&expo) > self.order || c.is_zero() {
            self.terms.remove(&expo);
        } else {
            self.terms.insert(expo, c);
        }
    }

    fn add_to(&mut self, expo: Vec<u32>, c: &Coeff) {
        if total_degree(&expo) > self.order || c.is_zero() {
            return;
        }
        let cur = self.coeff(&expo);
        let sum = self.ring.add(&cur, c);
        self.set(expo, sum);
    }

    fn assert_compatible(&self, other: &Series) {
        assert_eq!(self.ring, other.ring, "series over different coefficient rings");
        assert_eq!(self.vars, other.vars, "series in different variables");
    }

    pub fn add(&self, other: &Series) -> Series {
        self.assert_compatible(other);
        let order = self.order.min(other.order);
        let mut out = Series::zero(self.ring.clone(), self.vars.clone(), order);
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_to(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Series {
        let mut out = self.clone();
        out.terms = out
            .terms
            .into_iter()
            .map(|(e, c)| {
                let n = self.ring.neg(&c);
                (e, n)
            })
            .collect();
        out
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.assert_compatible(other);
        let order = self.order.min(other.order);
        let mut out = Series::zero(self.ring.clone(), self.vars.clone(), order);
        for (ea, ca) in &self.terms {
            if total_degree(ea) > order {
                continue;
            }
            for (eb, cb) in &other.terms {
                let deg = total_degree(ea) + total_degree(eb);
                if deg > order {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = self.ring.mul(ca, cb)?;
                out.add_to(e, &c);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> Result<Series> {
        let mut out = Series::zero(self.ring.clone(), self.vars.clone(), self.order);
        for (e, v) in &self.terms {
            let p = self.ring.mul(v, c)?;
            out.add_to(e.clone(), &p);
        }
        Ok(out)
    }

    pub fn scale_rational(&self, r: &Rational) -> Series {
        let c = self.ring.from_rational(r.clone());
        self.scale(&c).expect("rational scaling cannot overflow")
    }

    pub fn pow(&self, n: u32) -> Result<Series> {
        let mut acc = Series::one(self.ring.clone(), self.vars.clone(), self.order);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Lower the truncation order (dropping higher terms).
    pub fn truncate(&self, order: u32) -> Series {
        let mut out = Series::zero(self.ring.clone(), self.vars.clone(), order.min(self.order));
        for (e, c) in &self.terms {
            out.add_to(e.clone(), c);
        }
        out
    }

    /// Substitute `args[i]` for variable `i`. All arguments must share one
    /// variable list and have zero constant term (so that the result is
    /// well defined at the truncation order).
    pub fn substitute(&self, args: &[Series]) -> Result<Series> {
        assert_eq!(args.len(), self.vars.len(), "substitution arity mismatch");
        let (vars, order) = match args.first() {
            Some(a) => (a.vars.clone(), a.order.min(self.order)),
            None => (Vec::new(), self.order),
        };
        for a in args {
            assert_eq!(a.ring, self.ring, "substitution over a different coefficient ring");
            assert_eq!(a.vars, vars, "substitution arguments in different variables");
            if !a.constant_term().is_zero() {
                return Err(EngineError::CompositionDomain {
                    constant: self.ring.render(&a.constant_term()),
                });
            }
        }
        let mut out = Series::zero(self.ring.clone(), vars.clone(), order);
        // memoized powers of each argument
        let mut powers: Vec<Vec<Series>> = args
            .iter()
            .map(|_| vec![Series::one(self.ring.clone(), vars.clone(), order)])
            .collect();
        for (e, c) in &self.terms {
            let mut term = Series::constant(self.ring.clone(), vars.clone(), order, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                while powers[i].len() <= exp as usize {
                    let last = powers[i].last().unwrap();
                    let next = last.mul(&args[i].truncate(order))?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][exp as usize])?;
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Composition `self(g)` for univariate `self`; `g` may be multivariate
    /// with zero constant term.
    pub fn compose(&self, g: &Series) -> Result<Series> {
        assert_eq!(self.vars.len(), 1, "compose expects a univariate outer series");
        self.substitute(std::slice::from_ref(g))
    }

    /// Compositional inverse of a univariate series with zero constant term
    /// and unit linear coefficient: `self(rev(t)) = t` modulo the order.
    pub fn reverse(&self) -> Result<Series> {
        assert_eq!(self.vars.len(), 1, "reverse expects a univariate series");
        if !self.constant_term().is_zero() {
            return Err(EngineError::CompositionDomain {
                constant: self.ring.render(&self.constant_term()),
            });
        }
        let lin = self.coeff(&[1]);
        let lin_inv = self
            .ring
            .inverse(&lin)
            .map_err(|_| EngineError::ReversionUnit { linear: self.ring.render(&lin) })?;
        let n = self.order;
        let t = Series::var(self.ring.clone(), self.vars.clone(), 0, n);
        let mut rev = t.scale(&lin_inv)?;
        for k in 2..=n {
            let err = self.compose(&rev)?.sub(&t).coeff(&[k]);
            if err.is_zero() {
                continue;
            }
            // self(rev + eps t^k) = self(rev) + lin * eps t^k + O(t^(k+1))
            let eps = self.ring.neg(&self.ring.mul(&err, &lin_inv)?);
            let mut corr = Series::zero(self.ring.clone(), self.vars.clone(), n);
            corr.set(vec![k], eps);
            rev = rev.add(&corr);
        }
        debug_assert!(self.compose(&rev).unwrap().sub(&t).is_zero());
        Ok(rev)
    }

    /// Multiplicative inverse of a series with unit constant term.
    pub fn reciprocal(&self) -> Result<Series> {
        let c0 = self.constant_term();
        let c0_inv = self.ring.inverse(&c0)?;
        // self = c0 (1 - n) with n of positive valuation; geometric series.
        let mut n = self.scale(&c0_inv)?.neg();
        n.add_to(vec![0; self.vars.len()], &self.ring.one());
        let mut acc = Series::one(self.ring.clone(), self.vars.clone(), self.order);
        let mut pw = Series::one(self.ring.clone(), self.vars.clone(), self.order);
        for _ in 0..self.order {
            pw = pw.mul(&n)?;
            if pw.is_zero() {
                break;
            }
            acc = acc.add(&pw);
        }
        acc.scale(&c0_inv)
    }

    /// Divide a univariate series with zero constant term by its variable.
    pub fn shift_down(&self) -> Result<Series> {
        assert_eq!(self.vars.len(), 1);
        if !self.constant_term().is_zero() {
            return Err(EngineError::SeriesShape {
                reason: "cannot divide by t: nonzero constant term".into(),
            });
        }
        let mut out = Series::zero(self.ring.clone(), self.vars.clone(), self.order);
        for (e, c) in &self.terms {
            out.set(vec![e[0] - 1], c.clone());
        }
        Ok(out)
    }

    /// Rename variables (same arity).
    pub fn rename_vars(&self, vars: Vec<String>) -> Series {
        assert_eq!(vars.len(), self.vars.len());
        Series { ring: self.ring.clone(), vars, order: self.order, terms: self.terms.clone() }
    }

    /// Check that the coefficient of every monomial of total degree d is
    /// weight-homogeneous of weight `principal - d` (with variables counted
    /// at weight 1). Group-law and orientation series satisfy this with
    /// `principal = 1`.
    pub fn is_weight_homogeneous(&self, principal: i64) -> bool {
        self.terms.iter().all(|(e, c)| {
            let target = principal - total_degree(e) as i64;
            self.ring.weight_parts(c).keys().all(|w| *w == target)
        })
    }

    /// Canonical rendering; terms in graded-lex order.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            total_degree(a)
                .cmp(&total_degree(b))
                .then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, ex)| **ex != 0)
                .map(|(v, ex)| {
                    if *ex == 1 {
                        self.vars[v].clone()
                    } else {
                        format!("{}^{}", self.vars[v], ex)
                    }
                })
                .collect();
            let cs = self.ring.render(c);
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

/// `exp(c t) - 1` truncated: `sum_{k>=1} c^k t^k / k!`.
pub fn exp_minus_one(ring: &CoeffRing, var: &str, order: u32, c: &Coeff) -> Result<Series> {
    let mut s = Series::zero(ring.clone(), vec![var.to_string()], order);
    let mut cp = ring.one();
    for k in 1..=order {
        cp = ring.mul(&cp, c)?;
        let val = ring.scale(&cp, &factorial(k).recip());
        s.set(vec![k], val);
    }
    Ok(s)
}

/// `-log(1 - c t)` truncated: `sum_{k>=1} c^k t^k / k`.
pub fn neg_log_one_minus(ring: &CoeffRing, var: &str, order: u32, c: &Coeff) -> Result<Series> {
    let mut s = Series::zero(ring.clone(), vec![var.to_string()], order);
    let mut cp = ring.one();
    for k in 1..=order {
        cp = ring.mul(&cp, c)?;
        let val = ring.scale(&cp, &rat_int(k as i64).recip());
        s.set(vec![k], val);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn q() -> CoeffRing {
        CoeffRing::Rationals
    }

    fn t(order: u32) -> Series {
        Series::var(q(), vec!["t".into()], 0, order)
    }

    #[test]
    fn identity_composition() {
        // f = t composed with any g (zero constant term) gives g back
        let f = t(6);
        let g = t(6).add(&t(6).pow(2).unwrap().scale_rational(&rat(3, 1)));
        assert_eq!(f.compose(&g).unwrap(), g);
    }

    #[test]
    fn compose_square_example() {
        // f = t^2, g = t + t^2, order 3: (t + t^2)^2 = t^2 + 2t^3
        let f = t(3).pow(2).unwrap();
        let g = t(3).add(&t(3).pow(2).unwrap());
        let h = f.compose(&g).unwrap();
        let mut expect = Series::zero(q(), vec!["t".into()], 3);
        expect.set(vec![2], q().one());
        expect.set(vec![3], q().from_int(2));
        assert_eq!(h, expect);
    }

    #[test]
    fn compose_rejects_nonzero_constant() {
        let f = t(4);
        let g = Series::one(q(), vec!["t".into()], 4);
        assert!(matches!(f.compose(&g), Err(EngineError::CompositionDomain { .. })));
    }

    #[test]
    fn exp_compose_log_is_identity_to_order_8() {
        let one = q().one();
        let e = exp_minus_one(&q(), "t", 8, &one).unwrap();
        // log(1+t) = -(-log(1-(-t)))
        let l = neg_log_one_minus(&q(), "t", 8, &q().from_int(-1)).unwrap().neg();
        assert_eq!(e.compose(&l).unwrap(), t(8));
        assert_eq!(l.compose(&e).unwrap(), t(8));
    }

    #[test]
    fn reversion_examples() {
        // t reverses to t
        assert_eq!(t(5).reverse().unwrap(), t(5));

        // t - beta t^2 reverses to t + beta t^2 + 2 beta^2 t^3 at order 3
        let ring = CoeffRing::laurent_beta();
        let beta = ring.beta(1).unwrap();
        let f = Series::univariate(
            ring.clone(),
            "t",
            3,
            [(1u32, ring.one()), (2u32, ring.neg(&beta))],
        );
        let r = f.reverse().unwrap();
        assert_eq!(r.coeff(&[1]), ring.one());
        assert_eq!(r.coeff(&[2]), beta);
        assert_eq!(r.coeff(&[3]), ring.mul(&beta, &beta).map(|b2| ring.scale(&b2, &rat(2, 1))).unwrap());

        // 1 - e^{-t} reverses to -log(1 - t) at order 4
        let one = q().one();
        let f = exp_minus_one(&q(), "t", 4, &q().from_int(-1)).unwrap().neg(); // 1 - e^{-t} - 1 shifted: e^{-t}-1 negated
        let lg = neg_log_one_minus(&q(), "t", 4, &one).unwrap();
        assert_eq!(f.reverse().unwrap(), lg);
        assert_eq!(f.compose(&lg).unwrap(), t(4));
    }

    #[test]
    fn reversion_requires_unit_linear_term() {
        let f = t(4).pow(2).unwrap();
        assert!(matches!(f.reverse(), Err(EngineError::ReversionUnit { .. })));
    }

    #[test]
    fn reciprocal_of_unit_series() {
        // 1/(1 - t) = 1 + t + t^2 + ...
        let one = Series::one(q(), vec!["t".into()], 5);
        let f = one.sub(&t(5));
        let r = f.reciprocal().unwrap();
        for k in 0..=5u32 {
            assert_eq!(r.coeff(&[k]), q().one());
        }
        assert_eq!(f.mul(&r).unwrap(), one);
    }

    #[test]
    fn multivariate_substitution() {
        // F(x, y) = x + y + x*y, substitute x = t, y = t^2
        let ring = q();
        let vars = vec!["x".to_string(), "y".to_string()];
        let mut f = Series::zero(ring.clone(), vars, 4);
        f.set(vec![1, 0], ring.one());
        f.set(vec![0, 1], ring.one());
        f.set(vec![1, 1], ring.one());
        let a = t(4);
        let b = t(4).pow(2).unwrap();
        let g = f.substitute(&[a, b]).unwrap();
        let mut expect = Series::zero(ring.clone(), vec!["t".into()], 4);
        expect.set(vec![1], ring.one());
        expect.set(vec![2], ring.one());
        expect.set(vec![3], ring.one());
        assert_eq!(g, expect);
    }

    proptest::proptest! {
        #[test]
        fn reversion_is_an_involution(coeffs in proptest::collection::vec(-5i64..=5, 0..6)) {
            // f = t + c2 t^2 + ... reverses twice to itself
            let ring = q();
            let mut f = t(8);
            for (k, c) in coeffs.iter().enumerate() {
                if *c != 0 {
                    let term = Series::univariate(
                        ring.clone(),
                        "t",
                        8,
                        [(k as u32 + 2, ring.from_int(*c))],
                    );
                    f = f.add(&term);
                }
            }
            let back = f.reverse().unwrap().reverse().unwrap();
            proptest::prop_assert_eq!(back, f);
        }
    }

    #[test]
    fn rendering_is_graded_lex() {
        let ring = q();
        let vars = vec!["x".to_string(), "y".to_string()];
        let mut f = Series::zero(ring.clone(), vars, 3);
        f.set(vec![0, 2], ring.from_int(1));
        f.set(vec![2, 0], ring.from_int(1));
        f.set(vec![1, 1], ring.from_int(-2));
        f.set(vec![1, 0], ring.from_int(1));
        assert_eq!(f.render(), "x + x^2 - 2*x*y + y^2");
    }
}
