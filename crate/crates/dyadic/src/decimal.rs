//! Exact decimal display of big-integer ratios.
//!
//! The counting functions produce exact integers whose ratios are far outside
//! floating-point habits (the chiral fraction at a few thousand is ~10⁻⁴⁷),
//! so display conversions are done in integer arithmetic with explicit
//! rounding rather than by casting.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Correctly rounded (nearest, ties to even) `f64` value of `num / den`.
pub fn ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    assert!(!den.is_zero());
    if num.is_zero() {
        return 0.0;
    }
    // Scale so the integer quotient carries 54–56 significant bits, then
    // round to the 53-bit significand using the remainder as the sticky bit.
    let shift = 55 - (num.bits() as i64 - den.bits() as i64);
    let (q, r) = if shift >= 0 {
        (num << shift).div_rem(den)
    } else {
        num.div_rem(&(den << (-shift) as u64))
    };
    let extra = q.bits() as i64 - 53;
    debug_assert!(extra >= 1);
    let keep = &q >> extra as u64;
    let cut = &q - (&keep << extra as u64);
    let half = BigUint::one() << (extra - 1) as u64;
    let round_up = cut > half || (cut == half && (!r.is_zero() || keep.bit(0)));
    let mut mantissa = if round_up { &keep + 1u32 } else { keep };
    let mut exp = extra - shift;
    if mantissa.bits() == 54 {
        mantissa >>= 1;
        exp += 1;
    }
    let m: u64 = (&mantissa).try_into().expect("53-bit mantissa");
    m as f64 * 2f64.powi(exp as i32)
}

/// Exact scientific notation of `num / den` with `sig` significant decimal
/// digits, rounded half to even: `d.dd…de±EE`.
pub fn sci_string(num: &BigUint, den: &BigUint, sig: usize) -> String {
    assert!(sig >= 1 && !den.is_zero());
    if num.is_zero() {
        return format!("{:.*}e0", sig.saturating_sub(1), 0.0);
    }
    let ten = BigUint::from(10u32);
    // Decimal exponent e with 10^e ≤ num/den < 10^{e+1}, from a bit-length
    // first guess corrected by exact comparisons.
    let mut e =
        ((num.bits() as i64 - den.bits() as i64) as f64 * std::f64::consts::LOG10_2).floor() as i64;
    let cmp_pow10 = |e: i64| -> std::cmp::Ordering {
        // compare num/den with 10^e
        if e >= 0 {
            num.cmp(&(den * ten.pow(e as u32)))
        } else {
            (num * ten.pow((-e) as u32)).cmp(den)
        }
    };
    while cmp_pow10(e) == std::cmp::Ordering::Less {
        e -= 1;
    }
    while cmp_pow10(e + 1) != std::cmp::Ordering::Less {
        e += 1;
    }

    // digits = round(num/den · 10^{sig−1−e}), half to even.
    let scale = sig as i64 - 1 - e;
    let (scaled_num, scaled_den) = if scale >= 0 {
        (num * ten.pow(scale as u32), den.clone())
    } else {
        (num.clone(), den * ten.pow((-scale) as u32))
    };
    let (mut q, r) = scaled_num.div_rem(&scaled_den);
    let twice_r = &r << 1;
    if twice_r > scaled_den || (twice_r == scaled_den && q.bit(0)) {
        q += 1u32;
    }
    let mut digits = q.to_string();
    let mut e10 = e;
    if digits.len() > sig {
        // rounding carried into a new leading digit (… → 10^sig)
        digits.truncate(sig);
        e10 += 1;
    }
    debug_assert_eq!(digits.len(), sig);
    if sig == 1 {
        format!("{digits}e{e10}")
    } else {
        format!("{}.{}e{}", &digits[..1], &digits[1..], e10)
    }
}
