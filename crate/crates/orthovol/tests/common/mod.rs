//! Shared oracles for the integration tests: an adaptive-quadrature route
//! to the Lobachevsky function, independent of the series evaluation in the
//! library, and deterministic sampling.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// ln(sin t / t), extended by continuity at 0. Smooth on [0, π/2].
fn log_sinc(t: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else {
        (t.sin() / t).ln()
    }
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * eps {
        left + right + delta / 15.0
    } else {
        adaptive(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1)
            + adaptive(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1)
    }
}

fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, eps: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(&f, a, b, fa, fm, fb, whole, eps, 40)
}

/// Quadrature route to Λ(x) on `[0, π/2]`: split off the log singularity
/// analytically and integrate the smooth remainder adaptively.
pub fn lobachevsky_quadrature(x: f64) -> f64 {
    assert!((0.0..=std::f64::consts::FRAC_PI_2 + 1e-12).contains(&x));
    if x == 0.0 {
        return 0.0;
    }
    x - x * (2.0 * x).ln() - integrate(log_sinc, 0.0, x, 1e-13)
}

/// Deterministic uniform samples for the property suites.
pub fn samples(seed: u64, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_range(lo..hi)).collect()
}
