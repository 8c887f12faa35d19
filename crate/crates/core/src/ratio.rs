//! Ratios of integer products, used for the factorial quotients in the
//! spring-mass closed forms and the proof factors.
//!
//! The quotient is evaluated exactly in `u128` (kept reduced by gcd) while it
//! fits, so small cases round once at the final division. Larger cases fall
//! back to an interleaved floating-point product that keeps the running value
//! near one.

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn exact(num: &[u64], den: &[u64]) -> Option<(u128, u128)> {
    let mut d: u128 = 1;
    for &f in den {
        d = d.checked_mul(u128::from(f))?;
    }
    let mut n: u128 = 1;
    for &f in num {
        let mut f = u128::from(f);
        let g = gcd(f, d);
        f /= g;
        d /= g;
        let g = gcd(n, d);
        n /= g;
        d /= g;
        n = n.checked_mul(f)?;
    }
    let g = gcd(n, d);
    Some((n / g, d / g))
}

fn interleaved(num: &[u64], den: &[u64]) -> f64 {
    let (mut i, mut j) = (0, 0);
    let mut acc = 1.0_f64;
    while i < num.len() || j < den.len() {
        if j < den.len() && (acc >= 1.0 || i == num.len()) {
            acc /= den[j] as f64;
            j += 1;
        } else {
            acc *= num[i] as f64;
            i += 1;
        }
    }
    acc
}

/// Evaluates `prod(num) / prod(den)` for positive integer factors.
pub(crate) fn product_ratio(num: &[u64], den: &[u64]) -> f64 {
    debug_assert!(num.iter().chain(den).all(|&f| f > 0));
    match exact(num, den) {
        Some((n, d)) => n as f64 / d as f64,
        None => interleaved(num, den),
    }
}

/// Inclusive integer range `lo..=hi` as a factor list; empty when `hi < lo`.
pub(crate) fn factors(lo: u64, hi: u64) -> Vec<u64> {
    if hi < lo {
        Vec::new()
    } else {
        (lo..=hi).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ratios_are_exact() {
        // 6!/(3! 3!) = 20
        assert_eq!(product_ratio(&factors(4, 6), &factors(1, 3)), 20.0);
        assert_eq!(product_ratio(&[], &[]), 1.0);
        assert_eq!(product_ratio(&[1], &[3]), 1.0 / 3.0);
    }

    #[test]
    fn fallback_matches_exact_where_both_apply() {
        let num = factors(20, 40);
        let den = factors(1, 21);
        let a = product_ratio(&num, &den);
        let b = interleaved(&num, &den);
        assert!(((a - b) / a).abs() < 1e-13);
    }

    #[test]
    fn large_ratios_stay_finite() {
        // C(600, 300) ~ 1.35e179
        let r = product_ratio(&factors(301, 600), &factors(1, 300));
        assert!(r.is_finite());
        assert!((r.log10() - 179.13).abs() < 0.01);
    }
}
