//! Formal group laws and orientations.
//!
//! Every coefficient ring here carries the additive law as its reference.
//! An orientation is a reparameterization series `theta(t) = t + O(t^2)`;
//! its induced group law is the conjugate
//! `F(x, y) = theta(theta^{-1}(x) + theta^{-1}(y))`. Over the rational
//! coefficient rings used in this engine, every law arises this way.
//!
//! Built-in theories:
//! - `additive`: rationals, identity orientation, `F = x + y`.
//! - `multiplicative`: Laurent ring in `beta`,
//!   `theta = (1 - e^{-beta t})/beta`, `F = x + y - beta x y`.
//! - `universal:k`: truncated ring in `b1..bk`,
//!   `theta = t + b1 t^2 + ... + bk t^{k+1}`, the generic reparameterized
//!   law.

use crate::algebra::coeff::{Coeff, CoeffRing};

use crate::algebra::series::{exp_minus_one, Series};
use crate::error::{EngineError, Result};

pub const DEFAULT_ORDER: u32 = 10;

/// A commutative formal group law as a bivariate truncated series.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalGroupLaw {
    name: String,
    series: Series,
}

/// Residuals of the group-law axioms; all zero for an actual law.
#[derive(Debug, Clone)]
pub struct FglReport {
    pub name: String,
    pub unit_x: Series,
    pub unit_y: Series,
    pub commutativity: Series,
    pub associativity: Series,
}

impl FglReport {
    pub fn passed(&self) -> bool {
        self.unit_x.is_zero()
            && self.unit_y.is_zero()
            && self.commutativity.is_zero()
            && self.associativity.is_zero()
    }
}

fn xy_vars() -> Vec<String> {
    vec!["x".to_string(), "y".to_string()]
}

impl FormalGroupLaw {
    /// Wrap a raw bivariate series as a law (validity is what `check`
    /// reports; construction does not enforce it).
    pub fn from_series(name: &str, series: Series) -> Self {
        assert_eq!(series.vars().len(), 2, "a group law is a bivariate series");
        FormalGroupLaw { name: name.to_string(), series }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn series(&self) -> &Series {
        &self.series
    }

    pub fn ring(&self) -> &CoeffRing {
        self.series.ring()
    }

    pub fn order(&self) -> u32 {
        self.series.order()
    }

    /// `F(x, y) = x + y`.
    pub fn additive(ring: CoeffRing, order: u32) -> Self {
        let x = Series::var(ring.clone(), xy_vars(), 0, order);
        let y = Series::var(ring, xy_vars(), 1, order);
        FormalGroupLaw::from_series("additive", x.add(&y))
    }

    /// `F(x, y) = x + y - beta x y` over the Laurent ring.
    pub fn multiplicative(order: u32) -> Self {
        let ring = CoeffRing::laurent_beta();
        let beta = ring.beta(1).expect("laurent ring has beta");
        let x = Series::var(ring.clone(), xy_vars(), 0, order);
        let y = Series::var(ring.clone(), xy_vars(), 1, order);
        let xy = x.mul(&y).expect("series product");
        let f = x.add(&y).sub(&xy.scale(&beta).expect("series scale"));
        FormalGroupLaw::from_series("multiplicative", f)
    }

    /// Formal inverse: the unique `i(x) = -x + O(x^2)` with
    /// `F(x, i(x)) = 0`, solved order by order.
    pub fn inverse_series(&self) -> Result<Series> {
        let ring = self.ring().clone();
        let order = self.order();
        let t = Series::var(ring.clone(), vec!["x".to_string()], 0, order);
        let mut inv = t.neg();
        for k in 2..=order {
            let err = self.series.substitute(&[t.clone(), inv.clone()])?.coeff(&[k]);
            if err.is_zero() {
                continue;
            }
            // dF/dy(x, i(x)) = 1 + O(x), so the t^k correction is -err
            let corr = Series::univariate(ring.clone(), "x", order, [(k, ring.neg(&err))]);
            inv = inv.add(&corr);
        }
        let residual = self.series.substitute(&[t, inv.clone()])?;
        if !residual.is_zero() {
            return Err(EngineError::Internal {
                reason: format!("formal inverse does not close: residual {}", residual.render()),
            });
        }
        Ok(inv)
    }

    /// Axiom residuals at the working truncation order.
    pub fn check(&self) -> FglReport {
        let ring = self.ring().clone();
        let order = self.order();
        let x1 = Series::var(ring.clone(), vec!["x".to_string()], 0, order);
        let zero1 = Series::zero(ring.clone(), vec!["x".to_string()], order);
        let unit_x = self
            .series
            .substitute(&[x1.clone(), zero1.clone()])
            .expect("unit substitution")
            .sub(&x1);
        let unit_y = self
            .series
            .substitute(&[zero1, x1.clone()])
            .expect("unit substitution")
            .sub(&x1);

        let x = Series::var(ring.clone(), xy_vars(), 0, order);
        let y = Series::var(ring.clone(), xy_vars(), 1, order);
        let commutativity = self
            .series
            .sub(&self.series.substitute(&[y.clone(), x.clone()]).expect("swap substitution"));

        let v3: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
        let x3 = Series::var(ring.clone(), v3.clone(), 0, order);
        let y3 = Series::var(ring.clone(), v3.clone(), 1, order);
        let z3 = Series::var(ring.clone(), v3, 2, order);
        let fxy = self.series.substitute(&[x3.clone(), y3.clone()]).expect("assoc substitution");
        let fyz = self.series.substitute(&[y3, z3.clone()]).expect("assoc substitution");
        let left = self.series.substitute(&[fxy, z3]).expect("assoc substitution");
        let right = self.series.substitute(&[x3, fyz]).expect("assoc substitution");
        let associativity = left.sub(&right);

        FglReport { name: self.name.clone(), unit_x, unit_y, commutativity, associativity }
    }
}

/// An orientation relative to the additive reference law: a univariate
/// series `theta(t) = t + O(t^2)` expressing the oriented first Chern class
/// in terms of the reference one.
#[derive(Debug, Clone, PartialEq)]
pub struct Orientation {
    label: String,
    theta: Series,
}

impl Orientation {
    pub fn new(label: &str, theta: Series) -> Result<Self> {
        assert_eq!(theta.vars().len(), 1, "orientation series is univariate");
        if !theta.constant_term().is_zero() {
            return Err(EngineError::OrientationShape {
                linear: theta.ring().render(&theta.constant_term()),
            });
        }
        let lin = theta.coeff(&[1]);
        if lin != theta.ring().one() {
            return Err(EngineError::OrientationShape { linear: theta.ring().render(&lin) });
        }
        Ok(Orientation { label: label.to_string(), theta })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn theta(&self) -> &Series {
        &self.theta
    }

    pub fn ring(&self) -> &CoeffRing {
        self.theta.ring()
    }

    pub fn order(&self) -> u32 {
        self.theta.order()
    }

    pub fn is_identity(&self) -> bool {
        let t = Series::var(self.ring().clone(), vec!["t".to_string()], 0, self.order());
        self.theta.rename_vars(vec!["t".to_string()]) == t
    }

    /// `theta = t`: the reference orientation of any coefficient ring.
    pub fn identity(ring: CoeffRing, order: u32) -> Self {
        let t = Series::var(ring, vec!["t".to_string()], 0, order);
        Orientation { label: "identity".to_string(), theta: t }
    }

    /// `theta = (1 - e^{-beta t}) / beta` over the Laurent ring.
    pub fn multiplicative(order: u32) -> Self {
        let ring = CoeffRing::laurent_beta();
        let minus_beta = ring.neg(&ring.beta(1).expect("beta"));
        let beta_inv = ring.beta(-1).expect("beta^{-1}");
        // (e^{-beta t} - 1) * (-1/beta)
        let theta = exp_minus_one(&ring, "t", order, &minus_beta)
            .expect("exp series")
            .scale(&ring.neg(&beta_inv))
            .expect("scale");
        Orientation { label: "multiplicative".to_string(), theta }
    }

    /// `theta = t + b1 t^2 + ... + bk t^{k+1}` over the universal ring.
    pub fn universal(k: usize, order: u32) -> Self {
        let ring = CoeffRing::universal(k, order.max(1));
        let mut coeffs: Vec<(u32, Coeff)> = vec![(1, ring.one())];
        for i in 1..=k {
            coeffs.push((i as u32 + 1, ring.b(i).expect("b_i")));
        }
        let theta = Series::univariate(ring, "t", order, coeffs);
        Orientation { label: format!("universal:{k}"), theta }
    }

    /// The conjugated law `F(x,y) = theta(theta^{-1} x + theta^{-1} y)`.
    pub fn induced_law(&self) -> Result<FormalGroupLaw> {
        let ring = self.ring().clone();
        let order = self.order();
        let theta_inv = self.theta.reverse()?;
        let x = Series::var(ring.clone(), xy_vars(), 0, order);
        let y = Series::var(ring, xy_vars(), 1, order);
        let u = theta_inv.compose(&x)?;
        let v = theta_inv.compose(&y)?;
        let f = self.theta.compose(&u.add(&v))?;
        Ok(FormalGroupLaw::from_series(&format!("induced:{}", self.label), f))
    }
}

/// The comparison series of an orientation pair over one reference:
/// `Phi = theta1 o theta2^{-1}`, so `Phi(t) = t + O(t^2)` with the
/// coefficient of `t^i` of weight `1 - i`.
pub fn comparison_series(theta1: &Orientation, theta2: &Orientation) -> Result<Series> {
    if theta1.ring() != theta2.ring() {
        return Err(EngineError::Incompatibility {
            reason: format!(
                "orientations `{}` and `{}` live over different coefficient rings",
                theta1.label(),
                theta2.label()
            ),
        });
    }
    let inv2 = theta2.theta.reverse()?;
    theta1.theta.compose(&inv2)
}

/// Theory descriptors named on the CLI: `additive`, `multiplicative`,
/// `universal:k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theory {
    Additive,
    Multiplicative,
    Universal(usize),
}

impl Theory {
    pub fn parse(s: &str) -> Option<Theory> {
        match s {
            "additive" => Some(Theory::Additive),
            "multiplicative" => Some(Theory::Multiplicative),
            _ => {
                let k = s.strip_prefix("universal:")?.parse().ok()?;
                Some(Theory::Universal(k))
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            Theory::Additive => "additive".into(),
            Theory::Multiplicative => "multiplicative".into(),
            Theory::Universal(k) => format!("universal:{k}"),
        }
    }

    pub fn coeff_ring(&self, order: u32) -> CoeffRing {
        match self {
            Theory::Additive => CoeffRing::Rationals,
            Theory::Multiplicative => CoeffRing::laurent_beta(),
            Theory::Universal(k) => CoeffRing::universal(*k, order.max(1)),
        }
    }

    /// The theory's own orientation over its coefficient ring.
    pub fn native_orientation(&self, order: u32) -> Orientation {
        match self {
            Theory::Additive => Orientation::identity(CoeffRing::Rationals, order),
            Theory::Multiplicative => Orientation::multiplicative(order),
            Theory::Universal(k) => Orientation::universal(*k, order),
        }
    }

    /// The identity orientation over this theory's coefficient ring.
    pub fn reference_orientation(&self, order: u32) -> Orientation {
        Orientation::identity(self.coeff_ring(order), order)
    }
}
