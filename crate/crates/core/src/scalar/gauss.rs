use num_complex::Complex;
use num_traits::Zero;

use super::Rational;

/// `re + im·i` with rational parts.
pub type GaussRational = Complex<Rational>;

pub fn gauss(re: Rational, im: Rational) -> GaussRational {
    Complex::new(re, im)
}

pub trait GaussExt {
    fn real(q: Rational) -> Self;
    fn is_real(&self) -> bool;
    /// `|z|²`, always rational.
    fn abs2(&self) -> Rational;
}

impl GaussExt for GaussRational {
    fn real(q: Rational) -> Self {
        Complex::new(q, Rational::zero())
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    fn abs2(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}
