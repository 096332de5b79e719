use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::BigRational;

/// `floor(2^bits · atan(1/x))` together with a bound on the accumulated
/// truncation error, in units of `2^-bits`.
fn atan_inv_fixed(x: u32, bits: usize) -> (BigInt, u64) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << bits) / &x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    // Each term carries at most two truncations; the alternating tail is
    // below one unit once `power` reaches zero.
    (sum, 2 * k + 2)
}

/// Rational bounds `lo < π < hi` with `hi - lo < 2^-(bits - 8)`.
pub fn pi_bounds(bits: usize) -> (BigRational, BigRational) {
    let work = bits + 16;
    let (a5, e5) = atan_inv_fixed(5, work);
    let (a239, e239) = atan_inv_fixed(239, work);
    let mid = a5 * 16 - a239 * 4;
    let slack = BigInt::from(16 * e5 + 4 * e239 + 1);
    let scale = BigInt::one() << work;
    (
        BigRational::new(&mid - &slack, scale.clone()),
        BigRational::new(&mid + &slack, scale),
    )
}

/// Rational bounds on π² at roughly `bits` bits of accuracy.
pub fn pi_squared_bounds(bits: usize) -> (BigRational, BigRational) {
    let (lo, hi) = pi_bounds(bits + 4);
    (&lo * &lo, &hi * &hi)
}
