//! The Lobachevsky function and derived volume constants.
//!
//! The Lobachevsky function is
//!
//! ```text
//! Λ(x) = −∫₀ˣ log |2 sin t| dt.
//! ```
//!
//! It is odd, π-periodic, concave on `[0, π/2]` and maximal at `π/6`. Volumes
//! of right-angled hyperbolic 3-polyhedra are additive combinations of its
//! values, so every quantity produced here carries a conservative absolute
//! error bound alongside the `f64` value.
//!
//! # Evaluation
//!
//! Arguments are first reduced into `[0, π/2]` using oddness and
//! π-periodicity. On the reduced range the function is evaluated through the
//! classical expansion of `log(sin t / t)` in even zeta values:
//!
//! ```text
//! Λ(y) = y − y·log(2y) + y·Σ_{n≥1} ζ(2n)/(n(2n+1)) · (y/π)^{2n}
//! ```
//!
//! With `y ≤ π/2` the terms decay like `4^{−n}`, so roughly twenty-five terms
//! reach `f64` round-off. The truncation tail is bounded by the geometric
//! series and folded into the reported error, which stays below `1e-13` on
//! the reduced range.

use std::sync::LazyLock;

use crate::Error;

/// A binary64 value together with an absolute error bound.
///
/// Arithmetic propagates bounds conservatively: errors add under `+`/`-`
/// and scale under multiplication by an exact constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrBoundedValue {
    pub value: f64,
    pub abs_err: f64,
}

impl ErrBoundedValue {
    pub fn new(value: f64, abs_err: f64) -> Self {
        debug_assert!(abs_err >= 0.0);
        ErrBoundedValue { value, abs_err }
    }

    /// An exactly known value.
    pub fn exact(value: f64) -> Self {
        ErrBoundedValue {
            value,
            abs_err: 0.0,
        }
    }

    /// Scale by an exact constant.
    pub fn scale(self, c: f64) -> Self {
        ErrBoundedValue {
            value: self.value * c,
            abs_err: self.abs_err * c.abs() + ulp_slack(self.value * c),
        }
    }

    /// Widen the error bound by `extra`.
    pub fn widen(self, extra: f64) -> Self {
        ErrBoundedValue {
            value: self.value,
            abs_err: self.abs_err + extra,
        }
    }

    /// True when `x` lies within the error interval.
    pub fn contains(&self, x: f64) -> bool {
        (self.value - x).abs() <= self.abs_err
    }

    /// True when the two intervals overlap, i.e. the values agree within the
    /// combined error bound.
    pub fn agrees_with(&self, other: &ErrBoundedValue) -> bool {
        (self.value - other.value).abs() <= self.abs_err + other.abs_err
    }

    /// `self ≤ other` up to the combined error bound.
    pub fn le_within(&self, other: &ErrBoundedValue) -> bool {
        self.value <= other.value + self.abs_err + other.abs_err
    }
}

impl std::ops::Add for ErrBoundedValue {
    type Output = ErrBoundedValue;
    fn add(self, rhs: ErrBoundedValue) -> ErrBoundedValue {
        let value = self.value + rhs.value;
        ErrBoundedValue {
            value,
            abs_err: self.abs_err + rhs.abs_err + ulp_slack(value),
        }
    }
}

impl std::ops::Sub for ErrBoundedValue {
    type Output = ErrBoundedValue;
    fn sub(self, rhs: ErrBoundedValue) -> ErrBoundedValue {
        let value = self.value - rhs.value;
        ErrBoundedValue {
            value,
            abs_err: self.abs_err + rhs.abs_err + ulp_slack(value),
        }
    }
}

impl std::ops::Neg for ErrBoundedValue {
    type Output = ErrBoundedValue;
    fn neg(self) -> ErrBoundedValue {
        ErrBoundedValue {
            value: -self.value,
            abs_err: self.abs_err,
        }
    }
}

impl std::fmt::Display for ErrBoundedValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (±{:.2e})", self.value, self.abs_err)
    }
}

// Rounding slack for one arithmetic operation on the given magnitude.
fn ulp_slack(x: f64) -> f64 {
    x.abs() * f64::EPSILON
}

/// A finite angle in radians.
///
/// The Lobachevsky function is π-periodic and odd, so any finite angle is
/// acceptable; reduction happens inside the evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angle {
    radians: f64,
}

impl Angle {
    pub fn new(radians: f64) -> Result<Self, Error> {
        if radians.is_finite() {
            Ok(Angle { radians })
        } else {
            Err(Error::NonFiniteAngle)
        }
    }

    pub fn radians(&self) -> f64 {
        self.radians
    }
}

impl TryFrom<f64> for Angle {
    type Error = Error;
    fn try_from(radians: f64) -> Result<Self, Error> {
        Angle::new(radians)
    }
}

// ζ(2n) for n = 1..=ZETA_TERMS. The first five have classical closed forms;
// the rest converge fast enough for direct summation.
const ZETA_TERMS: usize = 32;

static ZETA_EVEN: LazyLock<[f64; ZETA_TERMS + 1]> = LazyLock::new(|| {
    use std::f64::consts::PI;
    let mut z = [0.0f64; ZETA_TERMS + 1];
    z[1] = PI * PI / 6.0;
    z[2] = PI.powi(4) / 90.0;
    z[3] = PI.powi(6) / 945.0;
    z[4] = PI.powi(8) / 9450.0;
    z[5] = PI.powi(10) / 93555.0;
    for n in 6..=ZETA_TERMS {
        let s = 2 * n as i32;
        let mut sum = 0.0;
        // Sum backwards so the tiny terms accumulate first.
        for k in (1..=40u32).rev() {
            sum += (k as f64).powi(-s);
        }
        // Integral tail bound for k > 40; below 1e-18 for s >= 12.
        sum += 41f64.powi(1 - s) / (s as f64 - 1.0);
        z[n] = sum;
    }
    z
});

/// Series evaluation on the reduced range `[0, π/2]`.
///
/// Returns the value and a bound on truncation plus round-off error.
fn eval_reduced(y: f64) -> (f64, f64) {
    debug_assert!((0.0..=std::f64::consts::FRAC_PI_2 + 1e-9).contains(&y));
    if y == 0.0 {
        return (0.0, 0.0);
    }
    let zeta = &*ZETA_EVEN;
    let q = (y / std::f64::consts::PI).powi(2); // <= 1/4 + rounding
    let mut sum = 0.0;
    let mut qn = 1.0;
    let mut tail = 0.0;
    for n in 1..=ZETA_TERMS {
        qn *= q;
        let term = zeta[n] / ((n * (2 * n + 1)) as f64) * qn;
        sum += term;
        if term < 1e-18 {
            // Coefficients decrease, so the remainder is geometrically bounded.
            tail = term * q / (1.0 - q);
            break;
        }
        if n == ZETA_TERMS {
            tail = term * q / (1.0 - q);
        }
    }
    let value = y - y * (2.0 * y).ln() + y * sum;
    // Truncation tail plus a conservative allowance for the ~30 floating
    // point operations above.
    let err = y * tail + 8.0 * f64::EPSILON * (value.abs() + y);
    (value, err)
}

fn reduce(x: f64) -> (f64, f64, f64) {
    use std::f64::consts::{FRAC_PI_2, PI};
    if (0.0..=FRAC_PI_2).contains(&x) {
        return (x, 1.0, 0.0);
    }
    // Map into [0, π) by periodicity, then into [0, π/2] by oddness around π.
    let mut y = x.rem_euclid(PI);
    let mut sign = 1.0;
    if y > FRAC_PI_2 {
        y = PI - y;
        sign = -1.0;
    }
    // The reduction argument error is at the ulp scale of |x|; it enters the
    // function value through the derivative log|2 sin y|, which blows up only
    // near the zero of sin.
    let arg_err = (x.abs() + PI) * f64::EPSILON + 1.3e-16;
    let s = 2.0 * y.sin();
    let deriv = if s > 0.0 { s.ln().abs() + 1.0 } else { 50.0 };
    (y, sign, arg_err * deriv)
}

/// The Lobachevsky function `Λ(x) = −∫₀ˣ log|2 sin t| dt`.
///
/// The absolute error bound is at most `1e-12` for `x ∈ [0, π/2]` (in
/// practice a few `1e-15`).
pub fn lobachevsky(x: Angle) -> ErrBoundedValue {
    eval(x.radians())
}

/// Evaluate at a raw `f64` argument known to be finite.
pub(crate) fn eval(x: f64) -> ErrBoundedValue {
    let (y, sign, red_err) = reduce(x);
    let (value, err) = eval_reduced(y);
    ErrBoundedValue::new(sign * value, err + red_err)
}

/// Evaluate at an argument that itself carries an absolute error, folding
/// the propagated uncertainty through the derivative into the bound.
pub(crate) fn eval_with_input_err(x: f64, x_err: f64) -> ErrBoundedValue {
    let out = eval(x);
    let (y, _, _) = reduce(x);
    let s = 2.0 * y.sin();
    let deriv = if s > 0.0 { s.ln().abs() + 1.0 } else { 50.0 };
    out.widen(x_err * deriv)
}

/// `v₈ = 8Λ(π/4)`, the volume of the regular ideal hyperbolic octahedron.
pub fn v8() -> ErrBoundedValue {
    static V8: LazyLock<ErrBoundedValue> =
        LazyLock::new(|| eval(std::f64::consts::FRAC_PI_4).scale(8.0));
    *V8
}

/// `v₃ = 3Λ(π/3)`, the volume of the regular ideal hyperbolic tetrahedron.
pub fn v3() -> ErrBoundedValue {
    static V3: LazyLock<ErrBoundedValue> =
        LazyLock::new(|| eval(std::f64::consts::FRAC_PI_3).scale(3.0));
    *V3
}

/// Volume `½Λ(α)` of the orthoscheme with parameter `α ∈ [0, π/2]`.
///
/// An orthoscheme is a tetrahedron with three right dihedral angles; cone
/// decompositions of ideal right-angled polyhedra are assembled from them.
pub fn orthoscheme_volume(alpha: Angle) -> Result<ErrBoundedValue, Error> {
    let a = alpha.radians();
    if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&a) {
        return Err(Error::AngleOutOfRange(a));
    }
    Ok(eval(a).scale(0.5))
}
