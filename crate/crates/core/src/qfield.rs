//! Exact arithmetic in the field Q(q) of rational functions in one indeterminate.
//!
//! Elements are stored as a coprime pair `num / den` of polynomials with
//! rational coefficients, with `den` monic. Negative powers of `q` are plain
//! rational functions whose denominator is a power of `q`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Builds the rational `num / den`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Dense univariate polynomial, coefficients indexed by degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * q^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Integer coefficients in ascending degree order.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Largest `k` with `q^k` dividing the polynomial.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    fn shift_down(&self, k: usize) -> Poly {
        Poly { coeffs: self.coeffs[k..].to_vec() }
    }

    fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn eval(&self, a: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c;
        }
        acc
    }

    /// Euclidean division over Q.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let ddeg = divisor.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let lead_inv = divisor.coeffs[ddeg].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (t, dc) in divisor.coeffs.iter().enumerate() {
                let sub = &c * dc;
                rem[k + t] -= sub;
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    fn exact_div(&self, divisor: &Poly) -> Poly {
        if divisor.is_one() {
            return self.clone();
        }
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (va, vb) = (self.valuation(), other.valuation());
        let v = va.min(vb);
        let a = self.shift_down(va);
        let b = other.shift_down(vb);
        let core = if a.is_constant() || b.is_constant() {
            Poly::one()
        } else if a == b {
            a.monic()
        } else {
            primitive_prs_gcd(&a, &b)
        };
        core.shift_up(v)
    }

    fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

/// Clears denominators and divides out the content.
fn primitive_integer_part(p: &Poly) -> Vec<BigInt> {
    let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    make_primitive(ints)
}

fn make_primitive(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    while ints.last().is_some_and(|c| c.is_zero()) {
        ints.pop();
    }
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    let sign_fix = if ints.last().is_some_and(|c| c.is_negative()) { -content } else { content };
    ints.iter().map(|c| c / &sign_fix).collect()
}

/// Pseudo-remainder of `a` by `b` over the integers.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while rem.len() > db {
        let lr = rem.last().cloned().unwrap();
        let shift = rem.len() - 1 - db;
        for c in rem.iter_mut() {
            *c *= lb;
        }
        for (t, bc) in b.iter().enumerate() {
            rem[shift + t] -= &lr * bc;
        }
        rem.pop();
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    rem
}

fn primitive_prs_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = primitive_integer_part(a);
    let mut y = primitive_integer_part(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = make_primitive(r);
    }
    Poly::from_coeffs(x.into_iter().map(Rational::from_integer).collect()).monic()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &Poly) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in p.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let abs = c.abs();
        if negative {
            write!(f, "-")?;
        } else if !first {
            write!(f, "+")?;
        }
        first = false;
        let coeff = if abs.is_integer() { abs.to_integer().to_string() } else { format!("({abs})") };
        match k {
            0 => write!(f, "{abs}")?,
            _ => {
                if !abs.is_one() {
                    write!(f, "{coeff}")?;
                }
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self)
    }
}

/// An element of Q(q) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    /// Canonical representative of `num / den`.
    pub fn normalize(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.exact_div(&g), den.exact_div(&g)) };
        let lead = den.leading().cloned().unwrap();
        if lead.is_one() {
            Ok(RatFunc { num, den })
        } else {
            let inv = lead.recip();
            Ok(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
        }
    }

    fn from_parts(num: Poly, den: Poly) -> RatFunc {
        RatFunc::normalize(num, den).expect("denominator is a nonzero product")
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc::from_rational(Rational::from_integer(c.into()))
    }

    pub fn from_rational(c: Rational) -> Self {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        RatFunc::q_pow(1)
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        let m = Poly::monomial(Rational::one(), e.unsigned_abs() as usize);
        if e >= 0 {
            RatFunc { num: m, den: Poly::one() }
        } else {
            RatFunc { num: Poly::one(), den: m }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value if this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_one() {
            Some(self.num.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        RatFunc::normalize(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        RatFunc { num: base.num.pow(e), den: base.den.pow(e) }
    }

    /// Evaluates at `q = a`.
    pub fn specialize(&self, a: &Rational) -> Result<Rational> {
        let den = self.den.eval(a);
        if den.is_zero() {
            return Err(Error::SpecializationPole);
        }
        Ok(self.num.eval(a) / den)
    }
}

/// `[k] = (q^k - q^-k) / (q - q^-1)`.
pub fn q_int(k: u32) -> RatFunc {
    // q^{1-k} (1 + q^2 + ... + q^{2k-2})
    if k == 0 {
        return RatFunc::zero();
    }
    let coeffs: Vec<Rational> =
        (0..2 * k - 1).map(|t| if t % 2 == 0 { Rational::one() } else { Rational::zero() }).collect();
    RatFunc::from_parts(Poly::from_coeffs(coeffs), Poly::monomial(Rational::one(), (k - 1) as usize))
}

/// `[k]! = [1][2]...[k]`, with `[0]! = 1`.
pub fn q_factorial(k: u32) -> RatFunc {
    (1..=k).fold(RatFunc::one(), |acc, t| &acc * &q_int(t))
}

/// Standalone form of [`RatFunc::specialize`].
pub fn specialize(f: &RatFunc, a: &Rational) -> Result<Rational> {
    f.specialize(a)
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc { num, den: Poly::one() };
            }
            return RatFunc::from_parts(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let lhs_cof = rhs.den.exact_div(&g);
        let rhs_cof = self.den.exact_div(&g);
        let num = &(&self.num * &lhs_cof) + &(&rhs.num * &rhs_cof);
        let den = &self.den * &lhs_cof;
        RatFunc::from_parts(num, den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: Poly::one() };
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        let lead = den.leading().cloned().unwrap();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] for a `Result`.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for RatFunc {
    /// Ascending-degree sparse form, `num` or `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write_poly(f, &self.num);
        }
        let wrap = |p: &Poly| {
            p.coeffs.iter().filter(|c| !c.is_zero()).count() > 1 || p.coeffs.iter().any(|c| !c.is_integer())
        };
        if wrap(&self.num) {
            write!(f, "({})/", self.num)?;
        } else {
            write!(f, "{}/", self.num)?;
        }
        if wrap(&self.den) {
            write!(f, "({})", self.den)
        } else {
            write!(f, "{}", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn q() -> RatFunc {
        RatFunc::q()
    }

    #[test]
    fn normalize_cancels_common_factor() {
        let f = RatFunc::normalize(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f.numer(), &p(&[1, 1]));
        assert!(f.denom().is_one());
    }

    #[test]
    fn normalize_zero_and_content() {
        let z = RatFunc::normalize(Poly::zero(), p(&[0, 0, 0, 1])).unwrap();
        assert!(z.is_zero());
        assert!(z.denom().is_one());
        let f = RatFunc::normalize(p(&[0, 2]), p(&[2])).unwrap();
        assert_eq!(f, q());
    }

    #[test]
    fn normalize_rejects_zero_denominator() {
        let err = RatFunc::normalize(p(&[1]), Poly::zero()).unwrap_err();
        assert_eq!(err.to_string(), "division by zero polynomial");
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(0), RatFunc::zero());
        assert_eq!(q_int(1), RatFunc::one());
        assert_eq!(q_int(2), &q() + &RatFunc::q_pow(-1));
        let three = &(&RatFunc::q_pow(2) + &RatFunc::one()) + &RatFunc::q_pow(-2);
        assert_eq!(q_int(3), three);
        assert_eq!(q_factorial(0), RatFunc::one());
        assert_eq!(q_factorial(2), q_int(2));
        assert_eq!(q_factorial(3), &q_int(2) * &three);
    }

    #[test]
    fn q_int_times_q_minus_inverse() {
        let diff = &q() - &RatFunc::q_pow(-1);
        for k in 0..=8 {
            let lhs = &q_int(k) * &diff;
            let rhs = &RatFunc::q_pow(k as i64) - &RatFunc::q_pow(-(k as i64));
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn specialization() {
        let f = &q() + &RatFunc::q_pow(-1);
        assert_eq!(f.specialize(&rational(2, 1)).unwrap(), rational(5, 2));
        let pole = RatFunc::normalize(p(&[1]), p(&[-1, 1])).unwrap();
        assert_eq!(pole.specialize(&rational(1, 1)).unwrap_err().to_string(), "specialization pole");
        // [2][3] at 5/7 evaluated independently: (a + 1/a)(a^2 + 1 + 1/a^2)
        let a = rational(5, 7);
        let ai = a.recip();
        let expected = (&a + &ai) * (&a * &a + Rational::one() + &ai * &ai);
        assert_eq!(q_factorial(3).specialize(&a).unwrap(), expected);
    }

    #[test]
    fn gcd_handles_non_monomial_factors() {
        // (q+1)(q-2) and (q+1)(2q+3)
        let a = &p(&[1, 1]) * &p(&[-2, 1]);
        let b = &p(&[1, 1]) * &p(&[3, 2]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        let f = RatFunc::normalize(a.clone(), b.clone()).unwrap();
        assert_eq!(f.numer(), &p(&[-2, 1]).scale(&rational(1, 2)));
        assert_eq!(f.denom(), &p(&[3, 2]).monic());
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(q_int(2).to_string(), "(1+q^2)/q");
        assert_eq!((&q() - &RatFunc::one()).to_string(), "-1+q");
        assert_eq!(RatFunc::from_rational(rational(-3, 2)).to_string(), "-3/2");
        assert_eq!(RatFunc::q_pow(-2).to_string(), "1/q^2");
    }
}
