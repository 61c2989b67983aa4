//! Exact root certificate for the degree-six polynomial behind the doubling
//! lemma, computed in ℚ(√3) without floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::audit::AuditReport;

type Q = Ratio<i128>;

/// `r + s·√3` with rational `r`, `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt3 {
    pub r: Q,
    pub s: Q,
}

impl QSqrt3 {
    pub fn new(r: Q, s: Q) -> Self {
        QSqrt3 { r, s }
    }

    pub fn int(r: i128, s: i128) -> Self {
        QSqrt3::new(Q::from_integer(r), Q::from_integer(s))
    }

    pub fn zero() -> Self {
        QSqrt3::int(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    /// Exact sign: compares `r²` with `3s²` when the parts disagree in sign.
    pub fn signum(&self) -> Ordering {
        let sr = self.r.cmp(&Q::zero());
        let ss = self.s.cmp(&Q::zero());
        match (sr, ss) {
            (Ordering::Equal, o) | (o, Ordering::Equal) => o,
            (a, b) if a == b => a,
            (a, _) => {
                let r2 = self.r * self.r;
                let s2 = self.s * self.s * Q::from_integer(3);
                match r2.cmp(&s2) {
                    Ordering::Greater => a,
                    Ordering::Less => a.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn scale(self, q: Q) -> Self {
        QSqrt3::new(self.r * q, self.s * q)
    }

    pub fn to_f64(&self) -> f64 {
        let f = |q: Q| *q.numer() as f64 / *q.denom() as f64;
        f(self.r) + f(self.s) * 3f64.sqrt()
    }
}

impl Add for QSqrt3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        QSqrt3::new(self.r + o.r, self.s + o.s)
    }
}

impl Sub for QSqrt3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        QSqrt3::new(self.r - o.r, self.s - o.s)
    }
}

impl Neg for QSqrt3 {
    type Output = Self;
    fn neg(self) -> Self {
        QSqrt3::new(-self.r, -self.s)
    }
}

impl Mul for QSqrt3 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        QSqrt3::new(
            self.r * o.r + Q::from_integer(3) * self.s * o.s,
            self.r * o.s + self.s * o.r,
        )
    }
}

/// `p√3/q`, with the numerator `1` omitted.
fn surd(s: Q) -> String {
    let numer = match *s.numer() {
        1 => String::new(),
        -1 => "-".into(),
        p => p.to_string(),
    };
    if *s.denom() == 1 {
        format!("{numer}√3")
    } else {
        format!("{numer}√3/{}", s.denom())
    }
}

impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r.is_zero(), self.s.is_zero()) {
            (_, true) => write!(f, "{}", self.r),
            (true, false) => write!(f, "{}", surd(self.s)),
            (false, false) => {
                let sign = if self.s.is_negative() { '−' } else { '+' };
                write!(f, "{} {} {}", self.r, sign, surd(self.s.abs()))
            }
        }
    }
}

/// Polynomial with coefficients in ℚ(√3), lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<QSqrt3>);

impl Poly {
    pub fn eval(&self, x: QSqrt3) -> QSqrt3 {
        self.0.iter().rev().fold(QSqrt3::zero(), |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(Q::from_integer(i as i128)))
                .collect(),
        )
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

/// `256γ⁶ − 192√3γ⁵ − 112γ⁴ + 168√3γ³ − 60γ² − 36√3γ + 27`.
pub fn doubling_sextic() -> Poly {
    Poly(vec![
        QSqrt3::int(27, 0),
        QSqrt3::int(0, -36),
        QSqrt3::int(-60, 0),
        QSqrt3::int(0, 168),
        QSqrt3::int(-112, 0),
        QSqrt3::int(0, -192),
        QSqrt3::int(256, 0),
    ])
}

/// `√3/2 = cos(π/6)`.
pub fn gamma0() -> QSqrt3 {
    QSqrt3::new(Q::zero(), Q::new(1, 2))
}

/// Reference list of the six derivative values that the computed ones are
/// compared against.
pub fn published_derivatives() -> [QSqrt3; 6] {
    [
        QSqrt3::int(0, 6),
        QSqrt3::int(384, 0),
        QSqrt3::int(0, 2554),
        QSqrt3::int(31872, 0),
        QSqrt3::int(0, 69120),
        QSqrt3::int(184320, 0),
    ]
}

#[derive(Clone, Debug)]
pub struct SexticCheck {
    pub gamma: QSqrt3,
    pub coefficients: Vec<QSqrt3>,
    pub value_at_gamma: QSqrt3,
    /// `p⁽ʲ⁾(γ₀)` for `j = 1..=6`.
    pub derivatives: Vec<QSqrt3>,
    pub value_at_one: QSqrt3,
}

impl SexticCheck {
    pub fn compute() -> Self {
        let p = doubling_sextic();
        let g = gamma0();
        let mut derivatives = Vec::with_capacity(6);
        let mut d = p.clone();
        for _ in 0..6 {
            d = d.derivative();
            derivatives.push(d.eval(g));
        }
        SexticCheck {
            gamma: g,
            coefficients: p.0.clone(),
            value_at_gamma: p.eval(g),
            derivatives,
            value_at_one: p.eval(QSqrt3::int(1, 0)),
        }
    }

    /// Taylor expansion about `γ₀`: `p(γ₀ + h) = p(γ₀) + Σ p⁽ʲ⁾(γ₀) hʲ / j!`.
    /// With `p(γ₀) = 0` and every coefficient positive, `p > 0` for all
    /// `h > 0`, so in particular no root lies in `(γ₀, 1)`.
    pub fn no_root_certified(&self) -> bool {
        self.value_at_gamma.is_zero()
            && self
                .derivatives
                .iter()
                .all(|d| d.signum() == Ordering::Greater)
    }

    /// Indices (1-based derivative order) where the computed value differs
    /// from the published one.
    pub fn mismatches(&self) -> Vec<usize> {
        self.derivatives
            .iter()
            .zip(published_derivatives())
            .enumerate()
            .filter(|(_, (a, b))| *a != b)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn matches_published(&self) -> bool {
        self.mismatches().is_empty()
    }
}

fn strs(v: &[QSqrt3]) -> Value {
    Value::from(v.iter().map(|q| q.to_string()).collect::<Vec<_>>())
}

/// Runs the certificate. `passed` reflects the no-root certificate;
/// agreement with the published derivative list is reported separately in
/// `details.matches_published` with the mismatching orders as witness.
pub fn sextic_check() -> AuditReport {
    let s = SexticCheck::compute();
    let published = published_derivatives();
    let mismatches = s.mismatches();
    let min_slack = s
        .derivatives
        .iter()
        .map(|d| d.to_f64())
        .fold(f64::INFINITY, f64::min);
    let mut report = AuditReport::new("sextic")
        .detail("arithmetic", "exact rationals over Q(sqrt 3)")
        .detail("gamma", s.gamma.to_string())
        .detail("coefficients", strs(&s.coefficients))
        .detail("value_at_gamma", s.value_at_gamma.to_string())
        .detail("derivatives", strs(&s.derivatives))
        .detail("published_derivatives", strs(&published))
        .detail("matches_published", mismatches.is_empty())
        .detail("value_at_one", s.value_at_one.to_string())
        .detail("no_root_certified", s.no_root_certified());
    report.min_slack = min_slack;
    if !mismatches.is_empty() {
        let diff: Vec<Value> = mismatches
            .iter()
            .map(|&j| {
                json!({
                    "order": j,
                    "computed": s.derivatives[j - 1].to_string(),
                    "published": published[j - 1].to_string(),
                })
            })
            .collect();
        report.set_detail("published_mismatch", diff);
    }
    if !s.no_root_certified() {
        report.fail(json!({ "derivatives": strs(&s.derivatives) }));
    }
    report
}
