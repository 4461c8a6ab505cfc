//! Marked-ruler (neusis) simulations.
//!
//! These are the independent cross-checks for the fold constructions: the
//! Archimedes trisection slides a unit-marked ruler through the angle's
//! vertex circle, the Nicomedes cube root drives a quartic whose positive
//! root is the cube root. Both deliberately avoid the closed forms they are
//! meant to certify: the trisection is solved by bisection on the actual
//! sliding configuration at doubled precision, the cube root goes through
//! the general quartic solver.

use crate::error::{Error, Result};
use crate::polysolve::solve_quartic;
use crate::scalar::Scalar;

/// Archimedes' sliding-ruler trisection of an acute angle, in degrees.
///
/// Configuration: the angle `alpha` sits at the origin between the positive
/// x-axis and the ray to `A` on the unit circle. The ruler passes through
/// `A`, crosses the circle at `S` and the axis at `R` with `RS = 1`; the
/// angle the ruler makes at `R` is the third of `alpha`. `R`'s position is
/// found by bisection on the chord condition, never via `alpha / 3`.
pub fn archimedes_trisect(alpha_deg: &Scalar) -> Result<Scalar> {
    let ninety = Scalar::from_int(90);
    if alpha_deg.is_sign_negative()
        || alpha_deg.is_zero_eps()
        || alpha_deg.cmp_eps(&ninety) != std::cmp::Ordering::Less
    {
        return Err(Error::OutOfRange(
            "trisection input must lie strictly between 0 and 90 degrees".into(),
        ));
    }

    let bits = alpha_deg.prec() * 2;
    let alpha = alpha_deg.with_prec(bits).deg_to_rad();
    let ax = alpha.cos();
    let ay = alpha.sin();
    let one = Scalar::from_int_prec(bits, 1);
    let two = Scalar::from_int_prec(bits, 2);

    // distance from R = (-r, 0) to the near circle intersection along the
    // ray towards A, minus the ruler mark distance 1
    let chord_gap = |r: &Scalar| -> Scalar {
        let dx = &ax + r;
        let dy = ay.clone();
        let len = dx.hypot(&dy);
        let ux = &dx / &len;
        // t^2 + 2 (R . u) t + (|R|^2 - 1) = 0 with R outside the circle;
        // the smaller positive root is the entry point S
        let r_dot_u = -(r * &ux);
        let disc = &r_dot_u * &r_dot_u - &(r * r) + &one;
        let t_near = -&r_dot_u - &disc.abs().sqrt();
        &t_near - &one
    };

    // bracket the sliding position: at r -> 1+ the chord gap is -1, and it
    // grows without bound as the ruler slides out
    let mut lo = &one + &Scalar::exp2i(-((bits / 2) as i32)).with_prec(bits);
    let mut hi = two.clone();
    let mut guard = 0;
    while chord_gap(&hi).is_sign_negative() {
        hi = &hi * &two;
        guard += 1;
        if guard > 64 {
            return Err(Error::OutOfRange("ruler cannot reach the line".into()));
        }
    }
    for _ in 0..(bits + 16) {
        let mid = (&lo + &hi) * &Scalar::from_ratio(1, 2).with_prec(bits);
        if chord_gap(&mid).is_sign_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r = (&lo + &hi) * &Scalar::from_ratio(1, 2).with_prec(bits);
    let beta = ay.atan2(&(&ax + &r)).rad_to_deg();
    Ok(beta.with_prec(alpha_deg.prec()))
}

/// Nicomedes' cube root for `0 < k < 8`: the marked-ruler configuration
/// reduces to `4x^4 + kx^3 - 4kx - k^2 = 0`, which factors as
/// `(4x + k)(x^3 - k)`; the sliding distance is the positive root.
pub fn nicomedes_cuberoot(k: &Scalar) -> Result<Scalar> {
    let eight = Scalar::from_int(8);
    if k.is_sign_negative() || k.is_zero_eps() || k.cmp_eps(&eight) != std::cmp::Ordering::Less {
        return Err(Error::OutOfRange(
            "the triangle configuration needs 0 < k < 8".into(),
        ));
    }
    let four = Scalar::from_int(4);
    let roots = solve_quartic(&four, k, &Scalar::zero(), &-(&four * k), &-(k * k))?;
    roots
        .roots()
        .into_iter()
        .find(|x| !x.is_sign_negative() && !x.is_zero_eps())
        .ok_or_else(|| Error::OutOfRange("quartic lost its positive root".into()))
}

/// Cube root of any positive number by 8-adic rescaling:
/// `cbrt(8^n k) = 2^n cbrt(k)`.
pub fn cuberoot_scaled(x: &Scalar) -> Result<Scalar> {
    if x.is_sign_negative() || x.is_zero_eps() {
        return Err(Error::OutOfRange("cube-root input must be positive".into()));
    }
    let eight = Scalar::from_int(8);
    let two = Scalar::from_int(2);
    let mut k = x.clone();
    let mut factor = Scalar::one();
    while k.cmp_eps(&eight) != std::cmp::Ordering::Less {
        k = &k / &eight;
        factor = &factor * &two;
    }
    Ok(&factor * &nicomedes_cuberoot(&k)?)
}
