//! Which numbers and regular n-gons are constructible with which tools.
//!
//! Compass and straightedge reach exactly the iterated-square-root field:
//! n-gons demand `n = 2^s * (distinct Fermat primes)` (Gauss). Folding adds
//! cube roots and trisection, lifting the criterion to
//! `n = 2^r 3^s * (distinct Pierpont primes)` and number fields to towers
//! of degree-2 and degree-3 steps.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Three-valued verdict: the degree conditions are necessary, but a full
/// tower certificate is not always computable here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl TriState {
    pub fn as_str(self) -> &'static str {
        match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        }
    }
}

impl std::fmt::Display for TriState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a report talks about.
#[derive(Clone, Debug)]
pub enum Subject {
    Ngon(u64),
    /// Coefficients of a (caller-certified irreducible) rational polynomial,
    /// ascending degree.
    MinimalPolynomial(Vec<BigRational>),
}

/// Classification of a number or n-gon, with textual evidence.
#[derive(Clone, Debug)]
pub struct ConstructibilityReport {
    pub subject: Subject,
    pub zul: TriState,
    pub origami: TriState,
    pub witness: String,
}

/// Deterministic Miller-Rabin for `u64` (the fixed witness set is exact for
/// every 64-bit integer).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            exp >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime of the form `2^(2^k) + 1`.
pub fn is_fermat_prime(p: u64) -> bool {
    if !is_prime_u64(p) {
        return false;
    }
    let m = p - 1;
    // p - 1 must be 2^e with the exponent e itself a power of two
    if m == 0 || m & (m - 1) != 0 {
        return false;
    }
    let e = m.trailing_zeros();
    e >= 1 && e & (e - 1) == 0
}

/// Prime of the form `2^u * 3^v + 1`.
pub fn is_pierpont_prime(p: u64) -> bool {
    if !is_prime_u64(p) {
        return false;
    }
    let mut m = p - 1;
    while m % 2 == 0 {
        m /= 2;
    }
    while m % 3 == 0 {
        m /= 3;
    }
    m == 1
}

/// True when `d` has no prime factor other than 2 and 3: the admissible
/// field degrees `2^a 3^b` of fold towers.
pub fn degree_tower_admissible(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut m = d;
    while m % 2 == 0 {
        m /= 2;
    }
    while m % 3 == 0 {
        m /= 3;
    }
    m == 1
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = vec![];
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn factor_string(factors: &[(u64, u32)]) -> String {
    factors
        .iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

/// Gauss' criterion: the regular n-gon is compass-and-straightedge
/// constructible iff `n = 2^s * p1 ... pk` with distinct Fermat primes.
pub fn zul_ngon_constructible(n: u64) -> Result<ConstructibilityReport> {
    if n < 3 {
        return Err(Error::OutOfRange("an n-gon needs n >= 3".into()));
    }
    let factors = factorize(n);
    let mut ok = true;
    let mut reason = String::new();
    for (p, e) in &factors {
        if *p == 2 {
            continue;
        }
        if !is_fermat_prime(*p) {
            ok = false;
            reason = format!("{p} is not a Fermat prime");
            break;
        }
        if *e > 1 {
            ok = false;
            reason = format!("Fermat prime {p} repeats ({p}^{e})");
            break;
        }
    }
    let witness = if ok {
        format!(
            "{n} = {} (power of two times distinct Fermat primes)",
            factor_string(&factors)
        )
    } else {
        format!("{n} = {}; {reason}", factor_string(&factors))
    };
    // everything euclidean is also foldable; a zul-no polygon may still be
    // foldable, which the origami criterion decides separately
    let origami = if ok {
        TriState::Yes
    } else {
        origami_ngon_verdict(&factors)
    };
    Ok(ConstructibilityReport {
        subject: Subject::Ngon(n),
        zul: if ok { TriState::Yes } else { TriState::No },
        origami,
        witness,
    })
}

fn origami_ngon_verdict(factors: &[(u64, u32)]) -> TriState {
    for (p, e) in factors {
        if *p == 2 || *p == 3 {
            continue;
        }
        if !is_pierpont_prime(*p) || *e > 1 {
            return TriState::No;
        }
    }
    TriState::Yes
}

/// The folding criterion: `n = 2^r 3^s * p1 ... pk` with distinct Pierpont
/// primes greater than 3 (powers of 3 fold into the `3^s` part).
pub fn origami_ngon_constructible(n: u64) -> Result<ConstructibilityReport> {
    if n < 3 {
        return Err(Error::OutOfRange("an n-gon needs n >= 3".into()));
    }
    let factors = factorize(n);
    let verdict = origami_ngon_verdict(&factors);
    let witness = match verdict {
        TriState::Yes => {
            let detail: Vec<String> = factors
                .iter()
                .filter(|(p, _)| *p != 2 && *p != 3)
                .map(|(p, _)| {
                    let mut m = p - 1;
                    let mut u = 0;
                    let mut v = 0;
                    while m % 2 == 0 {
                        m /= 2;
                        u += 1;
                    }
                    while m % 3 == 0 {
                        m /= 3;
                        v += 1;
                    }
                    format!("{p} = 2^{u} 3^{v} + 1")
                })
                .collect();
            if detail.is_empty() {
                format!("{n} = {} (2-3 smooth)", factor_string(&factors))
            } else {
                format!(
                    "{n} = {}; Pierpont: {}",
                    factor_string(&factors),
                    detail.join(", ")
                )
            }
        }
        _ => {
            let bad = factors
                .iter()
                .find(|(p, e)| *p > 3 && (!is_pierpont_prime(*p) || *e > 1))
                .map(|(p, e)| {
                    if *e > 1 {
                        format!("factor {p} repeats")
                    } else {
                        format!("{p} is not a Pierpont prime")
                    }
                })
                .unwrap_or_default();
            format!("{n} = {}; {bad}", factor_string(&factors))
        }
    };
    let zul = zul_verdict(&factors);
    Ok(ConstructibilityReport {
        subject: Subject::Ngon(n),
        zul,
        origami: verdict,
        witness,
    })
}

fn zul_verdict(factors: &[(u64, u32)]) -> TriState {
    for (p, e) in factors {
        if *p == 2 {
            continue;
        }
        if !is_fermat_prime(*p) || *e > 1 {
            return TriState::No;
        }
    }
    TriState::Yes
}

/// Integer roots of a monic integer cubic, by divisor search on the
/// constant term.
fn monic_cubic_has_integer_root(c2: &BigInt, c1: &BigInt, c0: &BigInt) -> bool {
    let eval = |w: &BigInt| ((w + c2) * w + c1) * w + c0;
    if c0.is_zero() {
        return true;
    }
    let target = c0.abs();
    let mut d = BigInt::one();
    // divisors come in pairs around sqrt; enumerate the small halves
    let limit = target.sqrt() + 1;
    while d <= limit {
        if (&target % &d).is_zero() {
            for cand in [d.clone(), &target / &d] {
                for signed in [cand.clone(), -cand.clone()] {
                    if eval(&signed).is_zero() {
                        return true;
                    }
                }
            }
        }
        d += 1;
    }
    false
}

/// Whether the resolvent cubic of a rational quartic has a rational root
/// (the 2-tower witness used for the degree-4 verdict).
fn quartic_resolvent_has_rational_root(
    b: &BigRational,
    c: &BigRational,
    d: &BigRational,
    e: &BigRational,
) -> bool {
    // depress: y^4 + p y^2 + q y + r
    let three = BigRational::from_integer(3.into());
    let four = BigRational::from_integer(4.into());
    let eight = BigRational::from_integer(8.into());
    let sixteen = BigRational::from_integer(16.into());
    let sixtyfour = BigRational::from_integer(64.into());
    let two56 = BigRational::from_integer(256.into());
    let p = (&eight * c - &three * b * b) / &eight;
    let q = (b * b * b - &four * b * c + &eight * d) / &eight;
    let r = -(&three * b * b * b * b - &sixteen * b * b * c + &sixtyfour * b * d - &two56 * e)
        / &two56;
    // resolvent z^3 - p z^2 - 4 r z - (q^2 - 4 p r)
    let r2 = -&p;
    let r1 = -&four * &r;
    let r0 = -(&q * &q - &four * &p * &r);
    // scale to a monic integer cubic: w = lcm-cleared z
    let lcm = |a: &BigInt, b: &BigInt| -> BigInt { a / a.gcd(b) * b };
    let den = lcm(
        &lcm(r2.denom(), r1.denom()),
        r0.denom(),
    );
    // z = w / den: w^3 + r2*den w^2 + r1*den^2 w + r0*den^3
    let c2 = (&r2 * BigRational::from_integer(den.clone())).to_integer();
    let c1 = (&r1 * BigRational::from_integer(&den * &den)).to_integer();
    let c0 = (&r0 * BigRational::from_integer(&den * &den * &den)).to_integer();
    monic_cubic_has_integer_root(&c2, &c1, &c0)
}

/// Classifies the real roots of an irreducible rational polynomial of
/// degree 1 to 4. Irreducibility is a caller promise; it is what makes the
/// degree argument valid.
pub fn classify_number(coeffs: &[BigRational]) -> Result<ConstructibilityReport> {
    let mut trimmed = coeffs.to_vec();
    while trimmed.len() > 1 && trimmed.last().map(|c| c.is_zero()) == Some(true) {
        trimmed.pop();
    }
    let degree = trimmed.len().saturating_sub(1);
    let subject = Subject::MinimalPolynomial(trimmed.clone());
    let (zul, origami, witness) = match degree {
        1 => (
            TriState::Yes,
            TriState::Yes,
            "degree 1: the number is rational".to_string(),
        ),
        2 => (
            TriState::Yes,
            TriState::Yes,
            "degree 2: a single quadratic extension".to_string(),
        ),
        3 => (
            // an irreducible cubic admits no 2-power tower, but one fold
            // (degree-3 step) reaches it
            TriState::No,
            TriState::Yes,
            "degree 3: no square-root tower exists; one cubic fold suffices".to_string(),
        ),
        4 => {
            let lead = trimmed[4].clone();
            let b = &trimmed[3] / &lead;
            let c = &trimmed[2] / &lead;
            let d = &trimmed[1] / &lead;
            let e = &trimmed[0] / &lead;
            if quartic_resolvent_has_rational_root(&b, &c, &d, &e) {
                (
                    TriState::Yes,
                    TriState::Yes,
                    "degree 4: resolvent cubic has a rational root (2-tower witness)"
                        .to_string(),
                )
            } else {
                (
                    TriState::Unknown,
                    TriState::Yes,
                    "degree 4: no rational resolvent root found; 2-tower uncertified"
                        .to_string(),
                )
            }
        }
        d => return Err(Error::UnsupportedDegree(d)),
    };
    Ok(ConstructibilityReport {
        subject,
        zul,
        origami,
        witness,
    })
}

/// Convenience wrapper for integer coefficient lists.
pub fn classify_int_poly(coeffs: &[i64]) -> Result<ConstructibilityReport> {
    let rat: Vec<BigRational> = coeffs
        .iter()
        .map(|&c| BigRational::from_integer(c.into()))
        .collect();
    classify_number(&rat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_primes() {
        assert!(is_fermat_prime(3));
        assert!(is_fermat_prime(5));
        assert!(is_fermat_prime(17));
        assert!(is_fermat_prime(257));
        assert!(is_fermat_prime(65537));
        assert!(!is_fermat_prime(7));
        assert!(!is_fermat_prime(2));
        assert!(!is_fermat_prime(9)); // 2^3 + 1, not prime and wrong form
        assert!(!is_fermat_prime(4294967297)); // 2^32 + 1 = 641 * 6700417
    }

    #[test]
    fn pierpont_primes() {
        assert!(is_pierpont_prime(2));
        assert!(is_pierpont_prime(3));
        assert!(is_pierpont_prime(7)); // 2 * 3 + 1
        assert!(is_pierpont_prime(13)); // 4 * 3 + 1
        assert!(is_pierpont_prime(19)); // 2 * 9 + 1
        assert!(!is_pierpont_prime(11)); // 10 = 2 * 5
        assert!(!is_pierpont_prime(23)); // 22 = 2 * 11
        assert!(!is_pierpont_prime(15)); // composite
    }

    #[test]
    fn tower_degrees() {
        assert!(degree_tower_admissible(1));
        assert!(degree_tower_admissible(6));
        assert!(degree_tower_admissible(48));
        assert!(!degree_tower_admissible(10));
        assert!(!degree_tower_admissible(7));
    }

    #[test]
    fn ngon_classics() {
        assert_eq!(zul_ngon_constructible(17).unwrap().zul, TriState::Yes);
        assert_eq!(zul_ngon_constructible(7).unwrap().zul, TriState::No);
        assert_eq!(zul_ngon_constructible(15).unwrap().zul, TriState::Yes);
        assert_eq!(origami_ngon_constructible(7).unwrap().origami, TriState::Yes);
        assert_eq!(origami_ngon_constructible(11).unwrap().origami, TriState::No);
        assert_eq!(origami_ngon_constructible(9).unwrap().origami, TriState::Yes);
        assert!(zul_ngon_constructible(2).is_err());
    }

    #[test]
    fn ngon_tables_up_to_twenty() {
        let zul: Vec<u64> = (3..=20)
            .filter(|&n| zul_ngon_constructible(n).unwrap().zul == TriState::Yes)
            .collect();
        assert_eq!(zul, vec![3, 4, 5, 6, 8, 10, 12, 15, 16, 17, 20]);
        let origami_only: Vec<u64> = (3..=20)
            .filter(|&n| {
                let r = origami_ngon_constructible(n).unwrap();
                r.origami == TriState::Yes && r.zul == TriState::No
            })
            .collect();
        assert_eq!(origami_only, vec![7, 9, 13, 14, 18, 19]);
    }

    #[test]
    fn euclidean_is_contained_in_origami() {
        for n in 3..=10000u64 {
            let z = zul_ngon_constructible(n).unwrap();
            if z.zul == TriState::Yes {
                assert_eq!(z.origami, TriState::Yes, "containment broke at {n}");
            }
        }
    }

    #[test]
    fn doubling_closure() {
        for n in 3..=5000u64 {
            let this = zul_ngon_constructible(n).unwrap().zul;
            let doubled = zul_ngon_constructible(2 * n).unwrap().zul;
            if this == TriState::Yes {
                assert_eq!(doubled, TriState::Yes, "zul doubling broke at {n}");
            }
            let this = origami_ngon_constructible(n).unwrap().origami;
            let doubled = origami_ngon_constructible(2 * n).unwrap().origami;
            if this == TriState::Yes {
                assert_eq!(doubled, TriState::Yes, "fold doubling broke at {n}");
            }
        }
    }

    #[test]
    fn divisor_closure() {
        for a in 3..=60u64 {
            for b in 1..=25u64 {
                let ab = a * b;
                if origami_ngon_constructible(ab).unwrap().origami == TriState::Yes {
                    assert_eq!(
                        origami_ngon_constructible(a).unwrap().origami,
                        TriState::Yes,
                        "divisor closure broke at {a} | {ab}"
                    );
                }
                if zul_ngon_constructible(ab).unwrap().zul == TriState::Yes {
                    assert_eq!(
                        zul_ngon_constructible(a).unwrap().zul,
                        TriState::Yes,
                        "zul divisor closure broke at {a} | {ab}"
                    );
                }
            }
        }
    }

    #[test]
    fn classify_cube_root_of_two() {
        let r = classify_int_poly(&[-2, 0, 0, 1]).unwrap();
        assert_eq!(r.zul, TriState::No);
        assert_eq!(r.origami, TriState::Yes);
    }

    #[test]
    fn classify_trisection_cubic() {
        let r = classify_int_poly(&[-1, -3, 0, 1]).unwrap();
        assert_eq!(r.zul, TriState::No);
        assert_eq!(r.origami, TriState::Yes);
    }

    #[test]
    fn classify_sqrt_five() {
        let r = classify_int_poly(&[-5, 0, 1]).unwrap();
        assert_eq!(r.zul, TriState::Yes);
        assert_eq!(r.origami, TriState::Yes);
    }

    #[test]
    fn classify_quartics() {
        // x^4 - 2: resolvent z^3 + 8z = z (z^2 + 8): rational root 0
        let r = classify_int_poly(&[-2, 0, 0, 0, 1]).unwrap();
        assert_eq!(r.zul, TriState::Yes);
        // x^4 + x + 1 has Galois group S4 (resolvent irreducible over Q)
        let r = classify_int_poly(&[1, 1, 0, 0, 1]).unwrap();
        assert_eq!(r.zul, TriState::Unknown);
        assert_eq!(r.origami, TriState::Yes);
    }

    #[test]
    fn classify_rejects_high_degree() {
        assert!(matches!(
            classify_int_poly(&[1, 0, 0, 0, 0, 1]).unwrap_err(),
            Error::UnsupportedDegree(5)
        ));
    }

    #[test]
    fn report_invariant_zul_implies_origami() {
        for coeffs in [
            vec![-2i64, 0, 0, 1],
            vec![-5, 0, 1],
            vec![3, 1],
            vec![-2, 0, 0, 0, 1],
            vec![1, 1, 0, 0, 1],
        ] {
            let r = classify_int_poly(&coeffs).unwrap();
            if r.zul == TriState::Yes {
                assert_eq!(r.origami, TriState::Yes);
            }
        }
    }
}
