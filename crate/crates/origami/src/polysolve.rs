//! Real-root solvers for degrees 2 through 4.
//!
//! The cubic follows Cardano's formulas with the trigonometric casework for
//! the three-real-root discriminant branch (the "casus irreducibilis"), the
//! quartic reduces through the resolvent cubic. Closed forms are followed by
//! Newton polishing because cancellation is visible in residuals even at 256
//! bits of mantissa.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::cmp::Ordering;

/// Dense univariate polynomial, coefficients in ascending degree order.
#[derive(Clone, Debug)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    /// Trims eps-zero leading coefficients.
    pub fn new(mut coeffs: Vec<Scalar>) -> Polynomial {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero_eps() {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Scalar::zero());
        }
        Polynomial { coeffs }
    }

    pub fn from_f64(coeffs: &[f64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| Scalar::from_f64(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> &Scalar {
        self.coeffs.last().unwrap()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero().with_prec(x.prec());
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::new(vec![Scalar::zero()]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| Scalar::from_int(i as i64) * c)
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn max_abs_coeff(&self) -> Scalar {
        let mut m = Scalar::zero();
        for c in &self.coeffs {
            m = m.max_val(&c.abs());
        }
        m
    }
}

/// Sorted real roots with multiplicities. Roots are strictly increasing at
/// tolerance; pushing an eps-equal root merges multiplicities.
#[derive(Clone, Debug, Default)]
pub struct RootSet {
    entries: Vec<(Scalar, u32)>,
}

impl RootSet {
    pub fn new() -> RootSet {
        RootSet::default()
    }

    pub fn push(&mut self, root: Scalar, mult: u32) {
        for (r, m) in self.entries.iter_mut() {
            if r.eq_eps(&root) {
                *m += mult;
                return;
            }
        }
        let at = self
            .entries
            .iter()
            .position(|(r, _)| root.partial_cmp(r) == Some(Ordering::Less))
            .unwrap_or(self.entries.len());
        self.entries.insert(at, (root, mult));
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn roots(&self) -> Vec<Scalar> {
        self.entries.iter().map(|(r, _)| r.clone()).collect()
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.entries.iter().map(|(_, m)| *m).collect()
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.entries.iter().map(|(_, m)| *m).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Scalar, u32)> {
        self.entries.iter()
    }
}

/// A few Newton steps against the original polynomial; accepts a step only
/// while the residual shrinks.
fn polish(poly: &Polynomial, x0: Scalar) -> Scalar {
    let deriv = poly.derivative();
    let scale = poly.max_abs_coeff();
    let mut x = x0;
    let mut fx = poly.eval(&x);
    for _ in 0..64 {
        if fx.is_zero_eps() {
            break;
        }
        let d = deriv.eval(&x);
        if d.abs().cmp_eps(&(&scale * &x.eps())) != Ordering::Greater {
            break;
        }
        let next = &x - &(&fx / &d);
        let fnext = poly.eval(&next);
        if fnext.abs() < fx.abs() {
            x = next;
            fx = fnext;
        } else {
            break;
        }
    }
    x
}

/// Real roots of `a x^2 + b x + c = 0`. Cancellation-stable: the root pair
/// is computed through `q = -(b + sign(b) sqrt(disc)) / 2`.
pub fn solve_quadratic(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<RootSet> {
    if a.is_zero_eps() {
        return Err(Error::NotQuadratic);
    }
    let mut out = RootSet::new();
    let four = Scalar::from_int(4);
    let disc = b * b - &four * a * c;
    if disc.is_zero_eps() {
        out.push(-(b / &(Scalar::from_int(2) * a)), 2);
        return Ok(out);
    }
    if disc.is_sign_negative() {
        return Ok(out);
    }
    let sq = disc.sqrt();
    let half = Scalar::from_ratio(1, 2);
    let q = if b.is_sign_negative() {
        -(b - &sq) * &half
    } else {
        -(b + &sq) * &half
    };
    let poly = Polynomial::new(vec![c.clone(), b.clone(), a.clone()]);
    out.push(polish(&poly, &q / a), 1);
    out.push(polish(&poly, c / &q), 1);
    Ok(out)
}

/// Real roots of the depressed cubic `y^3 + p y + q = 0`.
///
/// Discriminant `D = (q/2)^2 + (p/3)^3`. `D > 0`: a single real root
/// `cbrt(z1) + cbrt(z2)` from Cardano's pair `z = -q/2 +- sqrt(D)`.
/// `D < 0`: three real roots `sqrt(-4p/3) cos(r + k*120deg)` with
/// `cos(3r) = (-q/2) sqrt(-27/p^3)`. `D ~ 0`: multiple-root boundary.
pub fn solve_cubic_depressed(p: &Scalar, q: &Scalar) -> RootSet {
    let poly = Polynomial::new(vec![
        q.clone(),
        p.clone(),
        Scalar::zero(),
        Scalar::one(),
    ]);
    let mut out = RootSet::new();
    let half = Scalar::from_ratio(1, 2);
    let third = Scalar::from_ratio(1, 3);
    let q_half = q * &half;
    let p_third = p * &third;
    let disc = &q_half * &q_half + &p_third * &p_third * &p_third;

    if disc.is_zero_eps() {
        if p.is_zero_eps() {
            // y^3 ~ -q: a triple root at zero, or a single real root for a
            // q that is tiny but not negligible
            let root = polish(&poly, (-q).cbrt());
            let mult = if q.is_zero_eps() { 3 } else { 1 };
            out.push(root, mult);
            return out;
        }
        // the remaining boundary has p < 0: single root 3q/p, double -3q/2p
        let three = Scalar::from_int(3);
        out.push(polish(&poly, &three * q / p), 1);
        out.push(polish(&poly, -(&three * q) / &(Scalar::from_int(2) * p)), 2);
        return out;
    }

    if disc.is_sign_negative() {
        // three real roots; p < 0 here
        let minus27 = Scalar::from_int(-27);
        let mut cos3r = -&q_half * (&minus27 / &(p * p * p)).sqrt();
        // clamp rounding spill outside [-1, 1]
        let one = Scalar::one();
        if cos3r > one {
            cos3r = one.clone();
        }
        if cos3r < -&one {
            cos3r = -one;
        }
        let r = cos3r.acos() * &third;
        let amp = (Scalar::from_int(-4) * p * &third).sqrt();
        let turn = Scalar::pi() * &Scalar::from_ratio(2, 3); // 120 degrees
        for k in 0..3 {
            let angle = &r + &(Scalar::from_int(k) * &turn);
            out.push(polish(&poly, &amp * &angle.cos()), 1);
        }
        return out;
    }

    // one real root: pick the larger-magnitude Cardano branch to avoid
    // cancellation, recover the partner through A*B = -p/3
    let sq = disc.sqrt();
    let z1 = -&q_half + &sq;
    let z2 = -&q_half - &sq;
    let (big, small) = if z1.abs() >= z2.abs() {
        (z1, z2)
    } else {
        (z2, z1)
    };
    let a = big.cbrt();
    let b = if a.is_zero_eps() {
        small.cbrt()
    } else {
        -(&p_third / &a)
    };
    out.push(polish(&poly, &a + &b), 1);
    out
}

/// Real roots of a general cubic via the Tschirnhaus shift `x = y - c2/3c3`.
pub fn solve_cubic(c3: &Scalar, c2: &Scalar, c1: &Scalar, c0: &Scalar) -> Result<RootSet> {
    if c3.is_zero_eps() {
        return Err(Error::NotCubic);
    }
    let a2 = c2 / c3;
    let a1 = c1 / c3;
    let a0 = c0 / c3;
    let third = Scalar::from_ratio(1, 3);
    let shift = &a2 * &third;
    let p = &a1 - &(&a2 * &a2 * &third);
    let q = Scalar::from_ratio(2, 27) * &a2 * &a2 * &a2 - &(&a2 * &a1 * &third) + &a0;
    let depressed = solve_cubic_depressed(&p, &q);
    let poly = Polynomial::new(vec![c0.clone(), c1.clone(), c2.clone(), c3.clone()]);
    let mut out = RootSet::new();
    for (y, m) in depressed.iter() {
        out.push(polish(&poly, y - &shift), *m);
    }
    Ok(out)
}

/// Real roots of a general quartic.
///
/// Depression by `x = y - c3/4c4` gives `y^4 + p y^2 + q y + r`; `q = 0`
/// short-circuits to a biquadratic; otherwise the completed square
/// `(y^2 + z/2)^2 = (z - p) y^2 - q y + (z^2/4 - r)` is split through the
/// resolvent cubic `z^3 - p z^2 - 4 r z - (q^2 - 4 p r) = 0`, taking the
/// smallest real resolvent root with `z >= p`.
pub fn solve_quartic(
    c4: &Scalar,
    c3: &Scalar,
    c2: &Scalar,
    c1: &Scalar,
    c0: &Scalar,
) -> Result<RootSet> {
    if c4.is_zero_eps() {
        return Err(Error::NotQuartic);
    }
    let b = c3 / c4;
    let c = c2 / c4;
    let d = c1 / c4;
    let e = c0 / c4;
    let shift = &b / &Scalar::from_int(4);

    let p = (Scalar::from_int(8) * &c - &(Scalar::from_int(3) * &b * &b)) / &Scalar::from_int(8);
    let q = (&b * &b * &b - &(Scalar::from_int(4) * &b * &c) + &(Scalar::from_int(8) * &d))
        / &Scalar::from_int(8);
    let r = -(Scalar::from_int(3) * &b * &b * &b * &b - &(Scalar::from_int(16) * &b * &b * &c)
        + &(Scalar::from_int(64) * &b * &d)
        - &(Scalar::from_int(256) * &e))
        / &Scalar::from_int(256);

    let poly = Polynomial::new(vec![
        c0.clone(),
        c1.clone(),
        c2.clone(),
        c3.clone(),
        c4.clone(),
    ]);
    let mut out = RootSet::new();

    if q.is_zero_eps() {
        // biquadratic in y^2
        let z_roots = solve_quadratic(&Scalar::one(), &p, &r)?;
        for (z, m) in z_roots.iter() {
            if z.is_zero_eps() {
                out.push(polish(&poly, -&shift), 2 * m);
            } else if !z.is_sign_negative() {
                let s = z.sqrt();
                out.push(polish(&poly, &s - &shift), *m);
                out.push(polish(&poly, -&s - &shift), *m);
            }
        }
        return Ok(out);
    }

    let res_c0 = -(&q * &q - &(Scalar::from_int(4) * &p * &r));
    let resolvent = solve_cubic(&Scalar::one(), &-&p, &(Scalar::from_int(-4) * &r), &res_c0)?;
    let z = resolvent
        .roots()
        .into_iter()
        .find(|z| {
            let margin = z - &p;
            !margin.is_sign_negative() || margin.is_zero_eps()
        })
        .ok_or(Error::NotQuartic)?;

    let g = (&z - &p).abs().sqrt();
    let h = -(&q / &(Scalar::from_int(2) * &g));
    let half_z = &z * &Scalar::from_ratio(1, 2);
    // y^2 + z/2 = +-(g y + h)
    for (sg, sh) in [(-&g, &half_z - &h), (g.clone(), &half_z + &h)] {
        if let Ok(roots) = solve_quadratic(&Scalar::one(), &sg, &sh) {
            for (y, m) in roots.iter() {
                out.push(polish(&poly, y - &shift), *m);
            }
        }
    }
    Ok(out)
}
