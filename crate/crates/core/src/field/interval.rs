use num_traits::{Signed, Zero};

use super::Rational;

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RealInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RealInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        RealInterval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        RealInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn strictly_inside(&self, outer: &RealInterval) -> bool {
        outer.lo < self.lo && self.hi < outer.hi
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RealInterval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        RealInterval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo)
    }

    pub fn neg(&self) -> Self {
        RealInterval::new(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.lo == self.hi && rhs.lo == rhs.hi {
            return RealInterval::point(&self.lo * &rhs.lo);
        }
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().cloned().unwrap_or_else(Rational::zero);
        let hi = products.iter().max().cloned().unwrap_or_else(Rational::zero);
        RealInterval::new(lo, hi)
    }

    pub fn hull(&self, rhs: &Self) -> Self {
        RealInterval::new(
            self.lo.clone().min(rhs.lo.clone()),
            self.hi.clone().max(rhs.hi.clone()),
        )
    }

    fn halves(&self) -> [RealInterval; 2] {
        let m = self.mid();
        [
            RealInterval::new(self.lo.clone(), m.clone()),
            RealInterval::new(m, self.hi.clone()),
        ]
    }
}

/// Axis-parallel rectangle in the complex plane.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexInterval {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexInterval {
    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        ComplexInterval { re, im }
    }

    pub fn point(re: Rational, im: Rational) -> Self {
        ComplexInterval::new(RealInterval::point(re), RealInterval::point(im))
    }

    pub fn point_real(re: Rational) -> Self {
        ComplexInterval::point(re, Rational::zero())
    }

    pub fn center(&self) -> (Rational, Rational) {
        (self.re.mid(), self.im.mid())
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn strictly_inside(&self, outer: &ComplexInterval) -> bool {
        self.re.strictly_inside(&outer.re) && self.im.strictly_inside(&outer.im)
    }

    pub fn inside(&self, outer: &ComplexInterval) -> bool {
        outer.re.lo <= self.re.lo
            && self.re.hi <= outer.re.hi
            && outer.im.lo <= self.im.lo
            && self.im.hi <= outer.im.hi
    }

    pub fn max_width(&self) -> Rational {
        self.re.width().max(self.im.width())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        ComplexInterval::new(self.re.add(&rhs.re), self.im.add(&rhs.im))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        ComplexInterval::new(self.re.sub(&rhs.re), self.im.sub(&rhs.im))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let re = self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im));
        let im = self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re));
        ComplexInterval::new(re, im)
    }

    pub fn conj(&self) -> Self {
        ComplexInterval::new(self.re.clone(), self.im.neg())
    }

    /// Multiplication by `i^k`.
    pub fn rotate(&self, k: u32) -> Self {
        match k % 4 {
            0 => self.clone(),
            1 => ComplexInterval::new(self.im.neg(), self.re.clone()),
            2 => ComplexInterval::new(self.re.neg(), self.im.neg()),
            _ => ComplexInterval::new(self.im.clone(), self.re.neg()),
        }
    }

    pub fn hull(&self, rhs: &Self) -> Self {
        ComplexInterval::new(self.re.hull(&rhs.re), self.im.hull(&rhs.im))
    }

    /// The four quadrants obtained by bisecting both sides.
    pub fn quarters(&self) -> [ComplexInterval; 4] {
        let [r0, r1] = self.re.halves();
        let [i0, i1] = self.im.halves();
        [
            ComplexInterval::new(r0.clone(), i0.clone()),
            ComplexInterval::new(r0, i1.clone()),
            ComplexInterval::new(r1.clone(), i0),
            ComplexInterval::new(r1, i1),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn iv(a: i64, b: i64) -> RealInterval {
        RealInterval::new(rat(a, 1), rat(b, 1))
    }

    #[test]
    fn real_multiplication_encloses_products() {
        let p = iv(-2, 3).mul(&iv(-1, 4));
        assert_eq!(p, iv(-8, 12));
    }

    #[test]
    fn complex_rotation() {
        let z = ComplexInterval::point(rat(1, 1), rat(2, 1));
        assert_eq!(z.rotate(1), ComplexInterval::point(rat(-2, 1), rat(1, 1)));
        assert_eq!(z.rotate(4), z);
    }
}
