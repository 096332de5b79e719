use crate::exact::{rat, PolynomialQ};

/// Generalized Laguerre polynomial `L_degree^alpha` (modern convention,
/// `L_d^α(0) = C(d+α, d)`) from the three-term recurrence
/// `(d+1) L_{d+1} = (2d+α+1-x) L_d - (d+α) L_{d-1}`.
pub fn laguerre(alpha: u32, degree: u32) -> PolynomialQ {
    let a = alpha as i64;
    let mut prev = PolynomialQ::one();
    if degree == 0 {
        return prev;
    }
    let mut cur = PolynomialQ::from_integers(&[1 + a, -1]);
    for d in 1..degree as i64 {
        let linear = PolynomialQ::from_integers(&[2 * d + a + 1, -1]);
        let next = (&(&linear * &cur) - &prev.scale(&rat(d + a, 1))).scale(&rat(1, d + 1));
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{factorial, int, BigRational};
    use num_bigint::BigInt;

    fn binomial(n: u32, k: u32) -> BigInt {
        factorial(n) / (factorial(k) * factorial(n - k))
    }

    /// `Σ_k (-1)^k C(d+α, d-k) x^k / k!`
    fn series(alpha: u32, degree: u32) -> PolynomialQ {
        PolynomialQ::new(
            (0..=degree)
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    BigRational::new(binomial(degree + alpha, degree - k) * sign, factorial(k))
                })
                .collect(),
        )
    }

    #[test]
    fn small_cases() {
        assert_eq!(laguerre(3, 0), PolynomialQ::one());
        assert_eq!(laguerre(1, 1), PolynomialQ::from_integers(&[2, -1]));
        assert_eq!(laguerre(0, 2), PolynomialQ::new(vec![int(1), int(-2), rat(1, 2)]));
    }

    #[test]
    fn recurrence_matches_series() {
        for alpha in 0..=9 {
            for degree in 0..=14 {
                assert_eq!(laguerre(alpha, degree), series(alpha, degree), "L_{degree}^{alpha}");
            }
        }
    }

    #[test]
    fn three_term_identity() {
        let x = PolynomialQ::x();
        for alpha in 0..=5u32 {
            for d in 1..=10u32 {
                let a = alpha as i64;
                let di = d as i64;
                let lhs = laguerre(alpha, d + 1).scale(&int(di + 1));
                let rhs = &(&(&PolynomialQ::constant(int(2 * di + a + 1)) - &x) * &laguerre(alpha, d))
                    - &laguerre(alpha, d - 1).scale(&int(di + a));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
