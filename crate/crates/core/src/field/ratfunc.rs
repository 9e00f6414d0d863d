use std::fmt;
use std::sync::Arc;

use super::mpoly::MPoly;
use super::number_field::{NumberField, NumberFieldElement};
use super::{Rational, Scalar};

/// `Q(θ)(t₁, …, t_k)`: a purely transcendental extension of a number field,
/// with named parameters.
#[derive(Clone, PartialEq, Debug)]
pub struct FunctionField {
    base: NumberField,
    params: Arc<Vec<String>>,
}

impl FunctionField {
    pub fn new(base: NumberField, params: Vec<String>) -> Self {
        FunctionField {
            base,
            params: Arc::new(params),
        }
    }

    pub fn base(&self) -> &NumberField {
        &self.base
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn nvars(&self) -> usize {
        self.params.len()
    }

    pub fn param(&self, i: usize) -> RatFunc {
        RatFunc::from_poly(self, MPoly::var(&self.base, self.nvars(), i))
    }

    pub fn constant(&self, c: NumberFieldElement) -> RatFunc {
        RatFunc::from_poly(self, MPoly::constant(c, self.nvars()))
    }

    pub fn rational(&self, q: Rational) -> RatFunc {
        self.constant(self.base.from_rational(q))
    }
}

/// Quotient of two polynomials, kept in lowest terms with a monic
/// denominator, so equality is structural.
#[derive(Clone, PartialEq)]
pub struct RatFunc {
    field: FunctionField,
    num: MPoly<NumberFieldElement>,
    den: MPoly<NumberFieldElement>,
}

impl RatFunc {
    pub fn from_poly(field: &FunctionField, num: MPoly<NumberFieldElement>) -> Self {
        let den = MPoly::one(&field.base, field.nvars());
        RatFunc {
            field: field.clone(),
            num,
            den,
        }
    }

    /// Builds `num / den` and reduces. Panics if `den` is zero.
    pub fn new(
        field: &FunctionField,
        num: MPoly<NumberFieldElement>,
        den: MPoly<NumberFieldElement>,
    ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = RatFunc {
            field: field.clone(),
            num,
            den,
        };
        f.normalize();
        f
    }

    fn normalize(&mut self) {
        let n = self.field.nvars();
        if self.num.is_zero() {
            self.den = MPoly::one(&self.field.base, n);
            return;
        }
        if !self.den.is_constant() && !self.num.is_constant() {
            let g = self.num.gcd(&self.den);
            if !g.is_constant() {
                self.num = self.num.div_exact(&g).expect("gcd divides numerator");
                self.den = self.den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let lc = self.den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.inv();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn field(&self) -> &FunctionField {
        &self.field
    }

    pub fn numer(&self) -> &MPoly<NumberFieldElement> {
        &self.num
    }

    pub fn denom(&self) -> &MPoly<NumberFieldElement> {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Value when the function is constant.
    pub fn constant_value(&self) -> Option<NumberFieldElement> {
        if self.is_constant() {
            Some(self.num.constant_term().div(&self.den.constant_term()))
        } else {
            None
        }
    }

    /// Parameters occurring in numerator or denominator.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut v = self.num.support_vars();
        v.extend(self.den.support_vars());
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn derivative(&self, v: usize) -> Self {
        let dn = self.num.derivative(v);
        let dd = self.den.derivative(v);
        if dd.is_zero() {
            return RatFunc::new(&self.field, dn, self.den.clone());
        }
        let num = dn.mul(&self.den).sub(&self.num.mul(&dd));
        RatFunc::new(&self.field, num, self.den.mul(&self.den))
    }

    /// Evaluates at a point; `None` if the denominator vanishes there.
    pub fn eval(&self, point: &[NumberFieldElement]) -> Option<NumberFieldElement> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point).div(&d))
    }

    /// Substitutes `t_v := value` (a constant), keeping the parameter list.
    pub fn substitute(&self, v: usize, value: &NumberFieldElement) -> Option<Self> {
        let den = self.den.substitute(v, value);
        if den.is_zero() {
            return None;
        }
        Some(RatFunc::new(&self.field, self.num.substitute(v, value), den))
    }

    pub fn total_degree(&self) -> u32 {
        self.num.total_degree().max(self.den.total_degree())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.field.params();
        let num = self.num.display_with(names);
        if self.den.is_constant() {
            return write!(f, "{num}");
        }
        let den = self.den.display_with(names);
        let wrap = |s: String, n: usize| if n > 1 || s.contains(['+', ' ']) { format!("({s})") } else { s };
        write!(
            f,
            "{}/{}",
            wrap(num, self.num.num_terms()),
            wrap(den, self.den.num_terms())
        )
    }
}

impl Scalar for RatFunc {
    type Ctx = FunctionField;

    fn context(&self) -> FunctionField {
        self.field.clone()
    }

    fn zero_in(ctx: &FunctionField) -> Self {
        RatFunc::from_poly(ctx, MPoly::zero(&ctx.base, ctx.nvars()))
    }

    fn one_in(ctx: &FunctionField) -> Self {
        RatFunc::from_poly(ctx, MPoly::one(&ctx.base, ctx.nvars()))
    }

    fn from_rational(ctx: &FunctionField, q: &Rational) -> Self {
        ctx.rational(q.clone())
    }

    fn is_zero_el(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one_el(&self) -> bool {
        self.num == self.den
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RatFunc::new(&self.field, self.num.add(&rhs.num), self.den.clone());
        }
        RatFunc::new(
            &self.field,
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero_in(&self.field);
        }
        RatFunc::new(&self.field, self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    fn neg(&self) -> Self {
        RatFunc {
            field: self.field.clone(),
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc::new(&self.field, self.den.clone(), self.num.clone())
    }

    fn size(&self) -> usize {
        let s = |p: &MPoly<NumberFieldElement>| -> usize {
            p.terms().map(|(_, c)| 1 + c.size()).sum::<usize>()
        };
        s(&self.num) + s(&self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn field2() -> FunctionField {
        FunctionField::new(NumberField::rationals(), vec!["t1".into(), "t2".into()])
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let k = field2();
        let (t1, t2) = (k.param(0), k.param(1));
        let f = t1.mul(&t1).sub(&t2.mul(&t2)).div(&t1.sub(&t2));
        assert_eq!(f, t1.add(&t2));
        assert!(f.denom().is_constant());
        let g = t1.div(&t1.mul(&k.rational(rat(2, 1))));
        assert_eq!(g, k.rational(rat(1, 2)));
    }

    #[test]
    fn quotient_rule() {
        let k = field2();
        let t1 = k.param(0);
        let f = RatFunc::one_in(&k).div(&t1); // 1/t
        assert_eq!(f.derivative(0), t1.mul(&t1).inv().neg());
    }

    #[test]
    fn evaluation_detects_poles() {
        let k = field2();
        let (t1, t2) = (k.param(0), k.param(1));
        let f = t2.div(&t1.sub(&k.rational(rat(1, 1))));
        let q = NumberField::rationals();
        assert!(f.eval(&[q.from_rational(rat(1, 1)), q.from_rational(rat(5, 1))]).is_none());
        assert_eq!(
            f.eval(&[q.from_rational(rat(3, 1)), q.from_rational(rat(5, 1))]),
            Some(q.from_rational(rat(5, 2)))
        );
    }

    #[test]
    fn displays_with_parameter_names() {
        let k = field2();
        let (t1, t2) = (k.param(0), k.param(1));
        let f = t1.mul(&t1).add(&k.rational(rat(1, 1))).div(&t2);
        assert_eq!(f.to_string(), "(t1^2 + 1)/t2");
    }
}
