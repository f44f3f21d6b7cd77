//! Closed-form volumes for the two families that have them.
//!
//! Only the antiprisms `A(n)` and the Loebell polytopes `L(n)` (and hence
//! the regular ideal octahedron `A(3)` and the right-angled dodecahedron
//! `L(5)`) admit closed forms; volumes of other combinatorial types require
//! a geometric realization, which is out of scope, so no approximation is
//! offered for them.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::lobachevsky::{self, ErrBoundedValue};
use crate::Error;

// Allowance for the rounding of one platform arccos/cos evaluation.
const TRIG_ARG_ERR: f64 = 1e-14;

/// Volume of the ideal right-angled antiprism `A(n)`:
/// `2n · [Λ(π/4 + π/2n) + Λ(π/4 − π/2n)]`.
pub fn vol_antiprism(n: u64) -> Result<ErrBoundedValue, Error> {
    if n < 3 {
        return Err(Error::ParameterOutOfRange {
            what: "antiprism parameter n",
            got: n as i64,
            requirement: "n >= 3",
        });
    }
    let half_step = PI / (2.0 * n as f64);
    let arg_err = 2.0 * f64::EPSILON;
    let a = lobachevsky::eval_with_input_err(FRAC_PI_4 + half_step, arg_err);
    let b = lobachevsky::eval_with_input_err(FRAC_PI_4 - half_step, arg_err);
    Ok((a + b).scale(2.0 * n as f64))
}

/// Volume of the compact right-angled Loebell polytope `L(n)`:
/// `(n/2) · [2Λ(θ) + Λ(θ + π/n) + Λ(θ − π/n) − Λ(2θ − π/2)]` with
/// `θ = π/2 − arccos(1/(2 cos(π/n)))`.
pub fn vol_loebell(n: u64) -> Result<ErrBoundedValue, Error> {
    if n < 5 {
        return Err(Error::ParameterOutOfRange {
            what: "Loebell parameter n",
            got: n as i64,
            requirement: "n >= 5",
        });
    }
    let nf = n as f64;
    let step = PI / nf;
    let theta = FRAC_PI_2 - (1.0 / (2.0 * step.cos())).acos();
    // One cos, one division and one arccos feed theta.
    let theta_err = 2.0 * TRIG_ARG_ERR;
    let t0 = lobachevsky::eval_with_input_err(theta, theta_err).scale(2.0);
    let t1 = lobachevsky::eval_with_input_err(theta + step, theta_err + f64::EPSILON);
    let t2 = lobachevsky::eval_with_input_err(theta - step, theta_err + f64::EPSILON);
    let t3 = lobachevsky::eval_with_input_err(2.0 * theta - FRAC_PI_2, 2.0 * theta_err);
    Ok((t0 + t1 + t2 - t3).scale(nf / 2.0))
}
