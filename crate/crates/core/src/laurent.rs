//! Laurent polynomials in `q^(1/4)` with exact integer (or Gaussian integer)
//! coefficients.
//!
//! Exponents are stored in quarter units: the key `e` stands for `q^(e/4)`.
//! Quarter powers are enough for everything downstream: bracket weights live
//! in half powers, half-twist matrix entries in quarter powers. Storage is a
//! sorted map with no zero coefficients, so equality of values is equality of
//! representations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Coefficient ring for [`Laurent`]. Implemented for `i128` and [`Gauss`].
pub trait Coeff: Clone + Eq + std::hash::Hash + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse when `self` is a unit, `None` otherwise.
    fn unit_inv(&self) -> Option<Self>;
    /// Exact quotient `self / rhs`, `None` when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    /// Sign pulled in front of the printed term, plus the residual magnitude
    /// text. `None` magnitude means ±1, which is elided next to a q power.
    fn display_split(&self) -> (bool, Option<String>);
}

impl Coeff for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn neg(&self) -> Self {
        self.checked_neg().expect("coefficient overflow")
    }
    fn add(&self, rhs: &Self) -> Self {
        self.checked_add(*rhs).expect("coefficient overflow")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(*rhs).expect("coefficient overflow")
    }
    fn unit_inv(&self) -> Option<Self> {
        match *self {
            1 => Some(1),
            -1 => Some(-1),
            _ => None,
        }
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if *rhs == 0 || self % rhs != 0 {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn display_split(&self) -> (bool, Option<String>) {
        let neg = *self < 0;
        let mag = self.unsigned_abs();
        (neg, if mag == 1 { None } else { Some(mag.to_string()) })
    }
}

/// Gaussian integer `re + im·i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gauss {
    pub re: i128,
    pub im: i128,
}

impl Gauss {
    pub const fn new(re: i128, im: i128) -> Self {
        Gauss { re, im }
    }
    pub const I: Gauss = Gauss { re: 0, im: 1 };

    pub fn conj(&self) -> Self {
        Gauss::new(self.re, self.im.checked_neg().expect("coefficient overflow"))
    }

    /// Squared absolute value `re^2 + im^2`.
    fn norm(&self) -> i128 {
        self.re
            .checked_mul(self.re)
            .and_then(|a| self.im.checked_mul(self.im).and_then(|b| a.checked_add(b)))
            .expect("coefficient overflow")
    }
}

impl Coeff for Gauss {
    fn zero() -> Self {
        Gauss::new(0, 0)
    }
    fn one() -> Self {
        Gauss::new(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }
    fn neg(&self) -> Self {
        Gauss::new(Coeff::neg(&self.re), Coeff::neg(&self.im))
    }
    fn add(&self, rhs: &Self) -> Self {
        Gauss::new(Coeff::add(&self.re, &rhs.re), Coeff::add(&self.im, &rhs.im))
    }
    fn mul(&self, rhs: &Self) -> Self {
        let re = Coeff::mul(&self.re, &rhs.re).checked_sub(Coeff::mul(&self.im, &rhs.im));
        let im = Coeff::mul(&self.re, &rhs.im).checked_add(Coeff::mul(&self.im, &rhs.re));
        Gauss::new(re.expect("coefficient overflow"), im.expect("coefficient overflow"))
    }
    fn unit_inv(&self) -> Option<Self> {
        // The units of Z[i] are 1, -1, i, -i; each inverse is the conjugate.
        if self.norm() == 1 {
            Some(self.conj())
        } else {
            None
        }
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let n = rhs.norm();
        if n == 0 {
            return None;
        }
        let num = Coeff::mul(self, &rhs.conj());
        Some(Gauss::new(Coeff::div_exact(&num.re, &n)?, Coeff::div_exact(&num.im, &n)?))
    }
    fn display_split(&self) -> (bool, Option<String>) {
        if self.im == 0 {
            return self.re.display_split();
        }
        let mut s = String::from("(");
        if self.re != 0 {
            s.push_str(&self.re.to_string());
            if self.im > 0 {
                s.push('+');
            }
        }
        match self.im {
            1 => s.push('i'),
            -1 => s.push_str("-i"),
            v => {
                s.push_str(&v.to_string());
                s.push('i');
            }
        }
        s.push(')');
        (false, Some(s))
    }
}

/// Sparse Laurent polynomial in `q^(1/4)` over the coefficient ring `C`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Laurent<C: Coeff> {
    terms: BTreeMap<i64, C>,
}

/// Integer-coefficient values, where both engines normally live.
pub type LaurentQ = Laurent<i128>;
/// Gaussian-integer values, needed only by the imaginary half-twist variant.
pub type LaurentQi = Laurent<Gauss>;

impl<C: Coeff> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// `coeff * q^(quarters/4)`.
    pub fn monomial(quarters: i64, coeff: C) -> Self {
        let mut p = Self::zero();
        p.add_term(quarters, coeff);
        p
    }

    /// `q^(quarters/4)`.
    pub fn q_pow(quarters: i64) -> Self {
        Self::monomial(quarters, C::one())
    }

    /// `±q^(quarters/4)`.
    pub fn signed_monomial(negative: bool, quarters: i64) -> Self {
        let c = if negative { C::neg(&C::one()) } else { C::one() };
        Self::monomial(quarters, c)
    }

    /// `(±q^(quarters/4))^k` for any integer `k`. The base is a unit, so
    /// negative `k` is fine.
    pub fn unit_pow(negative: bool, quarters: i64, k: i64) -> Self {
        let e = quarters.checked_mul(k).expect("exponent overflow");
        Self::signed_monomial(negative && k % 2 != 0, e)
    }

    /// Quantum integer `[n] = q^(n-1) + q^(n-3) + ... + q^(-n+1)`.
    pub fn quantum_integer(n: u32) -> Self {
        let n = n as i64;
        let mut p = Self::zero();
        for j in 0..n {
            p.add_term(4 * (n - 1 - 2 * j), C::one());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0) == C::one()
    }

    /// Coefficient of `q^(quarters/4)`.
    pub fn coeff(&self, quarters: i64) -> C {
        self.terms.get(&quarters).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Adds `coeff * q^(quarters/4)` in place, dropping the entry if it
    /// cancels.
    pub fn add_term(&mut self, quarters: i64, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(quarters) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &Self) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, rhs: &Self) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.neg());
        }
    }

    /// Adds `scale * q^(shift/4) * rhs` in place. The convolution core; both
    /// engines spend most of their time here.
    pub fn add_scaled(&mut self, rhs: &Self, shift: i64, scale: &C) {
        if scale.is_zero() {
            return;
        }
        for (e, c) in rhs.terms() {
            self.add_term(e.checked_add(shift).expect("exponent overflow"), c.mul(scale));
        }
    }

    pub fn mul_coeff(&self, scale: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, 0, scale);
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Image under `q^(1/4) -> q^(-1/4)`: every exponent is negated. Sends
    /// the value of a diagram to the value of its mirror image.
    pub fn mirror(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(-e, c.clone());
        }
        out
    }

    /// Sum of coefficients, the evaluation at `q = 1`.
    pub fn eval_at_one(&self) -> C {
        let mut acc = C::zero();
        for (_, c) in self.terms() {
            acc = acc.add(c);
        }
        acc
    }

    /// Inverse when `self` is a unit of the ring, i.e. a single term with a
    /// unit coefficient.
    pub fn inv_unit(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(Self::monomial(-e, c.unit_inv()?))
    }

    /// Exact quotient `self / divisor`, or `None` when the division does not
    /// come out exactly. Requires the divisor's top coefficient to be a unit
    /// (true of every divisor used here, e.g. `[2]`).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_top = divisor.max_exp().unwrap();
        let d_top_inv = divisor.coeff(d_top).unit_inv()?;
        // A true quotient's lowest exponent: there are no zero divisors, so
        // bottoms multiply. Dropping below it means the division is inexact.
        let q_floor = self.min_exp().unwrap() - divisor.min_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let r_top = rem.max_exp().unwrap();
            let qe = r_top - d_top;
            if qe < q_floor {
                return None;
            }
            let qc = rem.coeff(r_top).mul(&d_top_inv);
            quot.add_term(qe, qc.clone());
            rem.add_scaled(divisor, qe, &qc.neg());
        }
        Some(quot)
    }
}

impl LaurentQ {
    /// Reinterprets integer coefficients as Gaussian integers.
    pub fn to_gaussian(&self) -> LaurentQi {
        let mut out = LaurentQi::zero();
        for (e, c) in self.terms() {
            out.add_term(e, Gauss::new(*c, 0));
        }
        out
    }
}

impl LaurentQi {
    /// Back to integer coefficients, `None` if any imaginary part survives.
    pub fn to_integer(&self) -> Option<LaurentQ> {
        let mut out = LaurentQ::zero();
        for (e, c) in self.terms() {
            if c.im != 0 {
                return None;
            }
            out.add_term(e, c.re);
        }
        Some(out)
    }
}

impl<C: Coeff> std::ops::Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        let mut out = Laurent::zero();
        out.sub_assign_ref(self);
        out
    }
}

impl<C: Coeff> std::ops::Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<C: Coeff> std::ops::Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl<C: Coeff> std::ops::Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (e, c) in self.terms() {
            out.add_scaled(rhs, e, c);
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<C: Coeff> std::ops::$trait for Laurent<C> {
            type Output = Laurent<C>;
            fn $method(self, rhs: Self) -> Laurent<C> {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl<C: Coeff> std::ops::$trait<&Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $method(self, rhs: &Laurent<C>) -> Laurent<C> {
                std::ops::$trait::$method(&self, rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<C: Coeff> std::ops::Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

fn fmt_q_power(f: &mut fmt::Formatter<'_>, quarters: i64) -> fmt::Result {
    debug_assert_ne!(quarters, 0);
    if quarters == 4 {
        write!(f, "q")
    } else if quarters % 4 == 0 {
        write!(f, "q^{}", quarters / 4)
    } else {
        let g = if quarters % 2 == 0 { 2 } else { 1 };
        write!(f, "q^({}/{})", quarters / g, 4 / g)
    }
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    /// Canonical text form: terms in strictly descending exponent order,
    /// exponents as reduced fractions (`q^(3/2)`, `q^-1`, bare `q`), unit
    /// coefficients elided, constants bare. The zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let (negative, magnitude) = c.display_split();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (&magnitude, *e) {
                (None, 0) => write!(f, "1")?,
                (None, _) => {}
                (Some(m), _) => write!(f, "{m}")?,
            }
            if *e != 0 {
                fmt_q_power(f, *e)?;
            }
        }
        Ok(())
    }
}

/// Failure while reading the text form of a polynomial. Positions are byte
/// offsets into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseLaurentError {
    #[error("empty polynomial text")]
    Empty,
    #[error("unexpected character '{found}' at byte {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("unexpected end of input at byte {pos}")]
    UnexpectedEnd { pos: usize },
    #[error("number too large at byte {pos}")]
    IntOverflow { pos: usize },
    #[error("exponent denominator {den} at byte {pos} does not divide 4")]
    BadDenominator { pos: usize, den: i64 },
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn err_here(&self) -> ParseLaurentError {
        match self.peek() {
            Some(b) => ParseLaurentError::Unexpected { pos: self.pos, found: b as char },
            None => ParseLaurentError::UnexpectedEnd { pos: self.pos },
        }
    }

    fn digits(&mut self) -> Result<i128, ParseLaurentError> {
        let start = self.pos;
        let mut v: i128 = 0;
        while let Some(b @ b'0'..=b'9') = self.peek() {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as i128))
                .ok_or(ParseLaurentError::IntOverflow { pos: start })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err_here());
        }
        Ok(v)
    }

    /// Signed integer, for exponents.
    fn int(&mut self) -> Result<i64, ParseLaurentError> {
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let start = self.pos;
        let v = self.digits()?;
        let v = i64::try_from(v).map_err(|_| ParseLaurentError::IntOverflow { pos: start })?;
        Ok(if neg { -v } else { v })
    }

    /// Exponent after `^`: either a plain integer or a parenthesized
    /// fraction with denominator dividing 4. Returns quarter units.
    fn exponent(&mut self) -> Result<i64, ParseLaurentError> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let num = self.int()?;
            let den = if self.peek() == Some(b'/') {
                self.pos += 1;
                let den_pos = self.pos;
                let den = self.int()?;
                if den <= 0 || 4 % den != 0 {
                    return Err(ParseLaurentError::BadDenominator { pos: den_pos, den });
                }
                den
            } else {
                1
            };
            if self.peek() != Some(b')') {
                return Err(self.err_here());
            }
            self.pos += 1;
            num.checked_mul(4 / den).ok_or(ParseLaurentError::IntOverflow { pos: self.pos })
        } else {
            let v = self.int()?;
            v.checked_mul(4).ok_or(ParseLaurentError::IntOverflow { pos: self.pos })
        }
    }

    /// One term, sign already consumed: `coeff`, `coeff qpart`, or `qpart`.
    fn term(&mut self, out: &mut LaurentQ, negative: bool) -> Result<(), ParseLaurentError> {
        let mut coeff: i128 = 1;
        let mut saw_coeff = false;
        if matches!(self.peek(), Some(b'0'..=b'9')) {
            coeff = self.digits()?;
            saw_coeff = true;
            self.skip_ws();
        }
        let mut quarters = 0;
        if self.peek() == Some(b'q') {
            self.pos += 1;
            quarters = 4;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                quarters = self.exponent()?;
            }
        } else if !saw_coeff {
            return Err(self.err_here());
        }
        out.add_term(quarters, if negative { -coeff } else { coeff });
        Ok(())
    }
}

impl FromStr for LaurentQ {
    type Err = ParseLaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let mut out = LaurentQ::zero();
        p.skip_ws();
        if p.peek().is_none() {
            return Err(ParseLaurentError::Empty);
        }
        let mut first = true;
        loop {
            let negative = match p.peek() {
                Some(b'-') => {
                    p.pos += 1;
                    true
                }
                Some(b'+') if first => {
                    p.pos += 1;
                    false
                }
                Some(b'+') => {
                    p.pos += 1;
                    false
                }
                _ if first => false,
                _ => return Err(p.err_here()),
            };
            p.skip_ws();
            p.term(&mut out, negative)?;
            first = false;
            p.skip_ws();
            if p.peek().is_none() {
                return Ok(out);
            }
            match p.peek() {
                Some(b'+') | Some(b'-') => continue,
                _ => return Err(p.err_here()),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(quarters: i64) -> LaurentQ {
        LaurentQ::q_pow(quarters)
    }

    #[test]
    fn canonical_display() {
        let loop_value = -(&q(4) + &q(-4));
        assert_eq!(loop_value.to_string(), "-q - q^-1");
        assert_eq!(q(6).to_string(), "q^(3/2)");
        assert_eq!(q(-6).to_string(), "q^(-3/2)");
        assert_eq!(q(1).to_string(), "q^(1/4)");
        assert_eq!(q(0).to_string(), "1");
        assert_eq!(LaurentQ::zero().to_string(), "0");
        assert_eq!(LaurentQ::monomial(0, -3).to_string(), "-3");
        assert_eq!(LaurentQ::monomial(8, 2).to_string(), "2q^2");
        let mixed = &LaurentQ::monomial(8, 2) - &(&q(4) + &LaurentQ::monomial(-4, -5));
        assert_eq!(mixed.to_string(), "2q^2 - q + 5q^-1");
        assert_eq!(LaurentQ::monomial(4, -1).to_string(), "-q");
        assert_eq!(LaurentQ::quantum_integer(2).to_string(), "q + q^-1");
    }

    #[test]
    fn gauss_display() {
        let p = LaurentQi::monomial(3, Gauss::I);
        assert_eq!(p.to_string(), "(i)q^(3/4)");
        let m = LaurentQi::monomial(0, Gauss::new(1, -2));
        assert_eq!(m.to_string(), "(1-2i)");
        let r = LaurentQi::monomial(4, Gauss::new(-2, 0));
        assert_eq!(r.to_string(), "-2q");
    }

    #[test]
    fn parse_accepts_printer_output_and_variants() {
        let cases = [
            ("-q - q^-1", -(&q(4) + &q(-4))),
            ("q^(3/2)", q(6)),
            ("0", LaurentQ::zero()),
            ("q - q", LaurentQ::zero()),
            ("2q^2 - q + 5q^-1", {
                let mut p = LaurentQ::zero();
                p.add_term(8, 2);
                p.add_term(4, -1);
                p.add_term(-4, 5);
                p
            }),
            ("+q^(-1/2)", q(-2)),
            ("q^(2/2)", q(4)),
            ("  3  +  q^(1/4) ", {
                let mut p = LaurentQ::zero();
                p.add_term(0, 3);
                p.add_term(1, 1);
                p
            }),
        ];
        for (text, want) in cases {
            let got: LaurentQ = text.parse().unwrap_or_else(|e| panic!("{text:?}: {e}"));
            assert_eq!(got, want, "parsing {text:?}");
        }
    }

    #[test]
    fn parse_rejects_with_position() {
        assert_eq!("".parse::<LaurentQ>(), Err(ParseLaurentError::Empty));
        assert_eq!(
            "q^^2".parse::<LaurentQ>(),
            Err(ParseLaurentError::Unexpected { pos: 2, found: '^' })
        );
        assert_eq!(
            "q^(1/3)".parse::<LaurentQ>(),
            Err(ParseLaurentError::BadDenominator { pos: 5, den: 3 })
        );
        assert_eq!(
            "q +".parse::<LaurentQ>(),
            Err(ParseLaurentError::UnexpectedEnd { pos: 3 })
        );
        assert_eq!(
            "2x".parse::<LaurentQ>(),
            Err(ParseLaurentError::Unexpected { pos: 1, found: 'x' })
        );
        assert_eq!(
            "q^(1/2".parse::<LaurentQ>(),
            Err(ParseLaurentError::UnexpectedEnd { pos: 6 })
        );
        assert!("q~".parse::<LaurentQ>().is_err());
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(LaurentQ::quantum_integer(0), LaurentQ::zero());
        assert_eq!(LaurentQ::quantum_integer(1), LaurentQ::one());
        assert_eq!(LaurentQ::quantum_integer(3).to_string(), "q^2 + 1 + q^-2");
        for n in 0..12u32 {
            assert_eq!(LaurentQ::quantum_integer(n).eval_at_one(), n as i128);
        }
        // [m][n] expands as a sum of [m+n-1-2j]; spot check [2][3] = [4] + [2].
        let lhs = &LaurentQ::quantum_integer(2) * &LaurentQ::quantum_integer(3);
        let rhs = &LaurentQ::quantum_integer(4) + &LaurentQ::quantum_integer(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_powers() {
        // (-q^(3/2))^k, the twist normalization.
        assert_eq!(LaurentQ::unit_pow(true, 6, 0), LaurentQ::one());
        assert_eq!(LaurentQ::unit_pow(true, 6, 1).to_string(), "-q^(3/2)");
        assert_eq!(LaurentQ::unit_pow(true, 6, 2).to_string(), "q^3");
        assert_eq!(LaurentQ::unit_pow(true, 6, -1).to_string(), "-q^(-3/2)");
        let u = LaurentQ::unit_pow(true, 6, -3);
        assert_eq!(&u * &LaurentQ::unit_pow(true, 6, 3), LaurentQ::one());
        assert_eq!(u.inv_unit().unwrap(), LaurentQ::unit_pow(true, 6, 3));
        assert_eq!(LaurentQ::quantum_integer(2).inv_unit(), None);
    }

    #[test]
    fn mirror_is_a_ring_involution() {
        let a: LaurentQ = "2q^2 - q + 5q^-1".parse().unwrap();
        let b: LaurentQ = "q^(1/2) - 3".parse().unwrap();
        assert_eq!(a.mirror().mirror(), a);
        assert_eq!((&a * &b).mirror(), &a.mirror() * &b.mirror());
        assert_eq!((&a + &b).mirror(), &a.mirror() + &b.mirror());
        assert_eq!(a.mirror().to_string(), "5q - q^-1 + 2q^-2");
    }

    #[test]
    fn exact_division() {
        let two = LaurentQ::quantum_integer(2);
        let a: LaurentQ = "q^2 - 3q + q^(1/2)".parse().unwrap();
        let prod = &a * &two;
        assert_eq!(prod.div_exact(&two), Some(a));
        // [3] + 1 = [2]^2 is divisible; [3] alone is not.
        let sq = &LaurentQ::quantum_integer(3) + &LaurentQ::one();
        assert_eq!(sq.div_exact(&two), Some(two.clone()));
        assert_eq!(LaurentQ::quantum_integer(3).div_exact(&two), None);
        assert_eq!(LaurentQ::one().div_exact(&two), None);
        assert_eq!(LaurentQ::zero().div_exact(&two), Some(LaurentQ::zero()));
        assert_eq!(two.div_exact(&LaurentQ::zero()), None);
        // Divisor with non-unit top coefficient is out of scope.
        let double = LaurentQ::monomial(0, 2);
        assert_eq!(two.div_exact(&double), None);
    }

    #[test]
    fn gaussian_arithmetic() {
        let i = LaurentQi::monomial(0, Gauss::I);
        assert_eq!((&i * &i).to_string(), "-1");
        assert_eq!(i.inv_unit().unwrap().to_string(), "(-i)");
        let z = Gauss::new(3, 4);
        assert_eq!(z.unit_inv(), None);
        assert_eq!(Coeff::mul(&z, &z.conj()), Gauss::new(25, 0));
        assert_eq!(z.div_exact(&Gauss::new(0, 1)), Some(Gauss::new(4, -3)));
        assert_eq!(Gauss::new(1, 0).div_exact(&Gauss::new(1, 1)), None);
        let p: LaurentQ = "q - 2".parse().unwrap();
        assert_eq!(p.to_gaussian().to_integer(), Some(p));
        assert_eq!(i.to_integer(), None);
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentQ> {
        proptest::collection::vec((-40i64..40, -9i128..9), 0..8).prop_map(|ts| {
            let mut p = LaurentQ::zero();
            for (e, c) in ts {
                p.add_term(e, c);
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &LaurentQ::zero(), a.clone());
            prop_assert_eq!(&a * &LaurentQ::one(), a.clone());
            prop_assert_eq!(&a - &a, LaurentQ::zero());
        }

        #[test]
        fn display_parse_roundtrip(a in arb_laurent()) {
            let text = a.to_string();
            let back: LaurentQ = text.parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn division_inverts_multiplication(a in arb_laurent(), k in -10i64..10) {
            // Divisors with unit top coefficient: [2] shifted around.
            let d = LaurentQ::q_pow(k) * LaurentQ::quantum_integer(2);
            let prod = &a * &d;
            prop_assert_eq!(prod.div_exact(&d), Some(a));
        }
    }
}
