//! Exact evaluation of the probability bounds behind the extension-index
//! lower bounds.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::ExtensionError;

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn binom_big(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let mut c = BigUint::one();
    for i in 0..b {
        c = c * big(a - i) / big(i + 1);
    }
    c
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn log2_rational(q: &BigRational) -> f64 {
    let (n, d) = (q.numer().magnitude(), q.denom().magnitude());
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    log2_big(n) - log2_big(d)
}

fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(60);
    (x >> shift).to_f64().unwrap().log2() + shift as f64
}

/// `C(kn, k-1) · 2^{k-1} · (1 - 2^{1-k})^n`, exactly.
///
/// Bounds the probability that the random `k`-partite graph with classes of
/// size `n` fails `ea_k`.
pub fn turan_tail_bound(k: usize, n: usize) -> BigRational {
    assert!(k >= 2, "turan_tail_bound needs k >= 2");
    let (k, n) = (k as u64, n as u64);
    let scale = big(1) << (k - 1);
    let count = binom_big(k * n, k - 1) * &scale;
    let q = (&scale - 1u32).pow(n as u32);
    let den = scale.pow(n as u32);
    ratio(count * q, den)
}

/// The `n ≥ k` at which the bound is largest. The ratio of consecutive terms,
/// `C(k(n+1), k-1) / C(kn, k-1) · (1 - 2^{1-k})`, decreases in `n`, so the
/// bound rises to a single peak and then falls.
pub fn turan_tail_peak(k: usize) -> usize {
    let mut n = k;
    while successor_ratio(k, n) > BigRational::one() {
        n += 1;
    }
    n
}

/// `bound(n + 1) / bound(n)`.
pub fn successor_ratio(k: usize, n: usize) -> BigRational {
    let (k, n) = (k as u64, n as u64);
    let scale = big(1) << (k - 1);
    ratio(
        binom_big(k * (n + 1), k - 1) * (&scale - 1u32),
        binom_big(k * n, k - 1) * scale,
    )
}

/// Least `n ≥ k` with `turan_tail_bound(k, n) < threshold`, by doubling and
/// bisection past the peak.
pub fn least_n_below(k: usize, threshold: &BigRational) -> usize {
    let peak = turan_tail_peak(k);
    let below = |n: usize| turan_tail_bound(k, n) < *threshold;
    // Up to the peak the bound only grows, so a scan settles it there; past
    // the peak the predicate is monotone.
    if let Some(n) = (k..=peak).find(|&n| below(n)) {
        return n;
    }
    let (mut lo, mut hi) = (peak, peak * 2);
    while !below(hi) {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if below(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// A value `m · 2^{-e}` used as a certified upper bound.
#[derive(Debug, Clone)]
struct Dyadic {
    m: BigUint,
    e: u64,
}

const DYADIC_BITS: u64 = 256;

impl Dyadic {
    fn mul_up(&self, other: &Dyadic) -> Dyadic {
        let mut m = &self.m * &other.m;
        let mut e = self.e + other.e;
        let bits = m.bits();
        if bits > DYADIC_BITS {
            let s = bits - DYADIC_BITS;
            m = (m >> s) + 1u32;
            e -= s.min(e);
        }
        Dyadic { m, e }
    }

    /// An upper bound on `self^exp` (exact when no rounding was needed).
    fn pow_up(&self, mut exp: u64) -> Dyadic {
        let mut acc = Dyadic { m: big(1), e: 0 };
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_up(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_up(&base);
            }
        }
        acc
    }
}

const RENDER_BITS: u64 = 4096;

fn render(q: &BigRational) -> String {
    let (n, d) = (q.numer().magnitude(), q.denom().magnitude());
    if n.bits().max(d.bits()) <= RENDER_BITS {
        q.to_string()
    } else {
        format!(
            "~2^{:.3} ({}-bit numerator, {}-bit denominator)",
            log2_rational(q),
            n.bits(),
            d.bits()
        )
    }
}

/// `num / 2^den_log` in lowest terms.
fn render_dyadic(num: BigUint, den_log: u64) -> String {
    let tz = num.trailing_zeros().unwrap_or(0).min(den_log);
    let (num, den_log) = (num >> tz, den_log - tz);
    if num.bits().max(den_log) <= RENDER_BITS {
        ratio(num, big(1) << den_log).to_string()
    } else {
        format!("~2^{:.3} ({}-bit numerator, denominator 2^{den_log})", log2_big(&num) - den_log as f64, num.bits())
    }
}

/// Largest size of the power `(1 - 2^{1-k})^e` evaluated exactly, in bits of
/// the denominator.
const EXACT_BITS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub ell: usize,
    pub n: u64,
    /// `⌊ℓ/2 − 2 log₂ ℓ + 2⌋`.
    pub k: usize,
    /// The resulting lower bound on the extension index, `k + 1`.
    pub lower_bound: usize,
    /// `p(ℓ, n) = n(n−1)⋯(n−ℓ+1) · 2^{−ℓ(ℓ−1)/2}` as an exact fraction.
    pub p: String,
    pub p_log2: f64,
    /// `p(ℓ, n) < 1/(2n)`, decided exactly.
    pub p_holds: bool,
    /// `q(n, k) = C(n, k−1) · 2^{k−1} · (1 − 2^{1−k})^{n−k+1}`, exactly when
    /// `q_exact`, otherwise a certified upper bound.
    pub q: String,
    pub q_exact: bool,
    pub q_log2: f64,
    /// `q(n, k) < 2 n^{−11}`, decided exactly (on the upper bound when the
    /// exact value is too large to form).
    pub q_holds: bool,
}

/// Largest integer `m` with `m ≤ ℓ/2 − 2 log₂ ℓ + 2`, i.e. `ℓ⁴ ≤ 2^{ℓ+4−2m}`.
fn bound_k(ell: u64) -> i64 {
    let l4 = big(ell).pow(4);
    let mut m: i64 = (ell as i64 + 4) / 2;
    loop {
        let e = ell as i64 + 4 - 2 * m;
        if e >= 0 && l4 <= big(1) << e as u64 {
            return m;
        }
        m -= 1;
    }
}

/// Evaluates the two inequalities in the proof of the extension-index lower
/// bound for patterns on `ell` vertices.
pub fn alice_lower_bound(ell: usize) -> Result<BoundReport, ExtensionError> {
    if ell < 16 {
        return Err(ExtensionError::SmallEll { ell });
    }
    let l = ell as u64;
    let log_n = if l % 2 == 0 { l / 2 - 1 } else { (l - 3) / 2 };
    let n = 1u64 << log_n;
    let k = bound_k(l) as u64;

    let falling: BigUint = (0..l).map(|i| big(n - i)).product();
    let p = ratio(falling, big(1) << (l * (l - 1) / 2));
    let p_holds = p < ratio(big(1), big(2 * n));

    // 2 n^{-11} = 2^{1 - 11 log n}.
    let lhs_scale = binom_big(n, k - 1) << (k - 1);
    let e = n - k + 1;
    let n11 = big(n).pow(11);
    let (q_text, q_exact, q_log2, q_holds) = if (k - 1) * e <= EXACT_BITS {
        // q = num / 2^{(k-1)e}; compare num · n^11 < 2 · 2^{(k-1)e} in integers.
        let num = &lhs_scale * ((big(1) << (k - 1)) - 1u32).pow(e as u32);
        let den_log = (k - 1) * e;
        let holds = &num * &n11 < big(1) << (den_log + 1);
        let log2 = log2_big(&num) - den_log as f64;
        (render_dyadic(num, den_log), true, log2, holds)
    } else {
        let base = Dyadic {
            m: (big(1) << (k - 1)) - 1u32,
            e: k - 1,
        };
        let up = base.pow_up(e);
        // q ≤ lhs_scale · m / 2^e' < 2 / n^11  ⇔  lhs_scale · m · n^11 < 2^{e'+1}.
        let num = &lhs_scale * &up.m;
        let holds = &num * &n11 < big(1) << (up.e + 1);
        let log2 = log2_big(&num) - up.e as f64;
        (render_dyadic(num, up.e), false, log2, holds)
    };
    Ok(BoundReport {
        ell,
        n,
        k: k as usize,
        lower_bound: k as usize + 1,
        p: render(&p),
        p_log2: log2_rational(&p),
        p_holds,
        q: q_text,
        q_exact,
        q_log2,
        q_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn bound_parameters() {
        // Float evaluation of ⌊ℓ/2 − 2 log₂ ℓ + 2⌋ as an independent check,
        // away from the integer boundaries where rounding could matter.
        for ell in 16..=200u64 {
            let x = ell as f64 / 2.0 - 2.0 * (ell as f64).log2() + 2.0;
            if (x - x.round()).abs() > 1e-9 {
                assert_eq!(bound_k(ell), x.floor() as i64, "ell = {ell}");
            }
        }
        // ℓ = 16 sits exactly on a boundary: 8 − 8 + 2 = 2.
        assert_eq!(bound_k(16), 2);
        let r16 = alice_lower_bound(16).unwrap();
        assert_eq!((r16.n, r16.k), (128, 2));
        assert!(r16.p_holds && r16.q_holds && r16.q_exact);
        assert_eq!(alice_lower_bound(17).unwrap().n, 128);
        assert!(alice_lower_bound(15).is_err());
    }

    #[test]
    fn q_for_ell_16_by_hand() {
        // k = 2, n = 128: q = 128 · 2 · (1/2)^127 = 2^{-119}.
        let rep = alice_lower_bound(16).unwrap();
        assert_eq!(rep.q, format!("1/{}", big(1) << 119u32));
    }

    #[test]
    fn even_range_holds() {
        for ell in (16..=64).step_by(2) {
            let rep = alice_lower_bound(ell).unwrap();
            assert!(rep.p_holds, "p fails at {ell}");
            assert!(rep.q_holds, "q fails at {ell}");
        }
    }

    #[test]
    fn dyadic_rounding_is_upward() {
        // (3/4)^200 computed with rounding against the exact value.
        let d = Dyadic { m: big(3), e: 2 }.pow_up(200);
        let exact = ratio(big(3).pow(200), big(4).pow(200));
        let up = ratio(d.m.clone(), big(1) << d.e);
        assert!(up >= exact);
        assert!(up < exact * r(1001, 1000));
    }

    #[test]
    fn tail_bound_shape() {
        assert!(turan_tail_bound(3, 3) > r(1, 1));
        assert_eq!(turan_tail_bound(2, 1), r(2, 1));
        // C(3n, 2) · 4 · (3/4)^n at n = 3: 36 · 4 · 27/64.
        assert_eq!(turan_tail_bound(3, 3), r(36 * 4 * 27, 64));
        let peak = turan_tail_peak(3);
        assert_eq!(peak, 7);
        let mut prev = turan_tail_bound(3, peak);
        for n in peak + 1..=400 {
            let cur = turan_tail_bound(3, n);
            assert!(cur < prev, "n = {n}");
            prev = cur;
        }
        for n in 3..peak {
            assert!(turan_tail_bound(3, n) < turan_tail_bound(3, n + 1));
        }
        // Past the peak, consecutive ratios stay below one all the way out.
        for n in (peak..10_000).step_by(97) {
            assert!(successor_ratio(3, n) < BigRational::one());
        }
    }

    #[test]
    fn least_n() {
        let one = r(1, 1);
        let n = least_n_below(3, &one);
        assert!(turan_tail_bound(3, n) < one);
        assert!(turan_tail_bound(3, n - 1) >= one);
        let m = least_n_below(3, &r(1, 20));
        assert!(m > n);
        assert!(turan_tail_bound(3, m) < r(1, 20));
        assert!(turan_tail_bound(3, m - 1) >= r(1, 20));
    }
}
