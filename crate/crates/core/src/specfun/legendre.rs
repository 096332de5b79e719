use num_traits::Zero;

use crate::exact::{int, rat, BigRational, PiSquaredElement, PolynomialQ};

/// Degree-`ell` Legendre polynomial from Bonnet's recurrence
/// `(k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}`.
pub fn legendre_p(ell: u32) -> PolynomialQ {
    legendre_pair(ell).0
}

/// `(P_ell, W_ell)` where `Q_ell = P_ell·artanh(x) - W_ell`. Both obey the
/// same three-term recurrence; only the seeds differ.
fn legendre_pair(ell: u32) -> (PolynomialQ, PolynomialQ) {
    let x = PolynomialQ::x();
    let mut p = (PolynomialQ::one(), x.clone());
    let mut w = (PolynomialQ::zero(), PolynomialQ::one());
    if ell == 0 {
        return (p.0, w.0);
    }
    for k in 1..ell {
        let a = rat(2 * k as i64 + 1, k as i64 + 1);
        let b = rat(k as i64, k as i64 + 1);
        let next_p = &(&x * &p.1).scale(&a) - &p.0.scale(&b);
        let next_w = &(&x * &w.1).scale(&a) - &w.0.scale(&b);
        p = (p.1, next_p);
        w = (w.1, next_w);
    }
    (p.1, w.1)
}

/// Legendre function of the second kind on `(-1, 1)` in split form
/// `Q_ell(x) = a_part(x)·artanh(x) - w_part(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LegendreQRep {
    pub ell: u32,
    pub a_part: PolynomialQ,
    pub w_part: PolynomialQ,
}

pub fn legendre_q(ell: u32) -> LegendreQRep {
    let (a_part, w_part) = legendre_pair(ell);
    LegendreQRep { ell, a_part, w_part }
}

impl LegendreQRep {
    /// `Q_ell(x)` for `|x| < 1`; infinite at the endpoints.
    pub fn eval(&self, x: f64) -> f64 {
        self.eval_with_artanh(x, x.atanh())
    }

    /// Evaluation with `artanh(x)` supplied by the caller, which lets
    /// callers near `x = ±1` pass an accurately computed value.
    pub fn eval_with_artanh(&self, x: f64, artanh_x: f64) -> f64 {
        self.a_part.eval_f64(x) * artanh_x - self.w_part.eval_f64(x)
    }

    /// Exact `∫_{-1}^{1} Q_ell(x) p(x) dx`, which is always rational.
    pub fn integrate_against(&self, p: &PolynomialQ) -> BigRational {
        let with_artanh = &self.a_part * p;
        let artanh_part = with_artanh
            .coeffs()
            .iter()
            .enumerate()
            .fold(BigRational::zero(), |acc, (k, c)| acc + c * artanh_moment(k as u32));
        artanh_part - (&self.w_part * p).integrate_symmetric()
    }

    /// Exact `∫_{-1}^{1} Q_ell(x)² dx` by expanding the square and using the
    /// moments of `artanh` and `artanh²`. Independent of [`q_norm_sq`].
    pub fn norm_sq_by_moments(&self) -> PiSquaredElement {
        let a2 = &self.a_part * &self.a_part;
        let aw = &self.a_part * &self.w_part;
        let w2 = &self.w_part * &self.w_part;
        let mut total = PiSquaredElement::rational(w2.integrate_symmetric());
        for (k, c) in a2.coeffs().iter().enumerate() {
            total = &total + &artanh_sq_moment(k as u32).scale(c);
        }
        let cross = aw
            .coeffs()
            .iter()
            .enumerate()
            .fold(BigRational::zero(), |acc, (k, c)| acc + c * artanh_moment(k as u32));
        &total - &PiSquaredElement::rational(cross * int(2))
    }
}

/// `∫_{-1}^{1} x^k artanh(x) dx`. Zero for even `k`; for `k = 2j+1`,
/// integrating by parts against `(x^{2j+2} - 1)/(2j+2)` leaves
/// `(1/(2j+2)) ∫ (1 + x² + … + x^{2j}) dx`.
pub fn artanh_moment(k: u32) -> BigRational {
    if k.is_multiple_of(2) {
        return BigRational::zero();
    }
    let j = (k - 1) / 2;
    let inner = (0..=j).fold(BigRational::zero(), |acc, i| acc + rat(2, 2 * i as i64 + 1));
    inner * rat(1, 2 * j as i64 + 2)
}

/// `∫_{-1}^{1} x^k artanh(x)² dx`. Zero for odd `k`; for `k = 2j` it is
/// `π²/(6(2j+1)) + (2/(2j+1)) Σ_{i<j} artanh_moment(2i+1)`.
pub fn artanh_sq_moment(k: u32) -> PiSquaredElement {
    if k % 2 == 1 {
        return PiSquaredElement::zero();
    }
    let j = k / 2;
    let odd = 2 * j as i64 + 1;
    let rational = (0..j).fold(BigRational::zero(), |acc, i| acc + artanh_moment(2 * i + 1)) * rat(2, odd);
    PiSquaredElement::linear(rational, rat(1, 6 * odd))
}

/// `∫_{-1}^{1} Q_{ell_q}(x) P_{ell_p}(x) dx`.
pub fn pq_overlap(ell_q: u32, ell_p: u32) -> BigRational {
    if (ell_q + ell_p).is_multiple_of(2) {
        // Q_q·P_p is odd on (-1, 1).
        return BigRational::zero();
    }
    let q = ell_q as i64;
    let p = ell_p as i64;
    rat(2, (p - q) * (p + q + 1))
}

/// `‖Q_ell‖² = ∫_{-1}^{1} Q_ell(x)² dx` as an element of ℚ(π²).
///
/// Parseval in the Legendre basis gives `Σ_{ℓ'} (2ℓ'+1)/2 · pq_overlap(ℓ, ℓ')²`.
/// Each term equals `(2/(2ℓ+1))(1/a² - 1/b²)` with `a = ℓ'-ℓ` odd and
/// `b = ℓ'+ℓ+1` even. The finitely many `ℓ' < ℓ` terms are summed
/// directly; for `ℓ' > ℓ` the `a` run over all positive odd integers
/// (sum π²/8) and the `b` over even integers from `2ℓ+2` (sum π²/24 minus
/// the first `ℓ` even reciprocal squares).
pub fn q_norm_sq(ell: u32) -> PiSquaredElement {
    let head = (0..ell)
        .filter(|lp| (ell + lp) % 2 == 1)
        .fold(BigRational::zero(), |acc, lp| {
            let c = pq_overlap(ell, lp);
            acc + rat(2 * lp as i64 + 1, 2) * &c * &c
        });
    let even_head = (1..=ell as i64).fold(BigRational::zero(), |acc, j| acc + rat(1, 4 * j * j));
    let weight = rat(2, 2 * ell as i64 + 1);
    let tail = PiSquaredElement::linear(&weight * even_head, &weight * rat(1, 12));
    &tail + &PiSquaredElement::rational(head)
}
