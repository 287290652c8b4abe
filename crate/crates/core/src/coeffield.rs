//! Exact arithmetic in the rational function field Q(α).
//!
//! An [`AlphaFraction`] stores a numerator and a denominator with integer
//! coefficients in ascending degree. The canonical form is unique:
//!
//! 1. the numerator and denominator are coprime over Q[α];
//! 2. their integer contents are coprime;
//! 3. the leading coefficient of the denominator is positive;
//! 4. zero is stored as `0/1`.
//!
//! Equal field elements therefore compare equal structurally, which the
//! rest of the crate relies on for hashing and exact zero tests.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors raised by field operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    /// Division by the zero element of Q(α).
    #[error("division by zero in Q(alpha)")]
    DivisionByZero,
    /// Evaluation at a pole of the fraction.
    #[error("denominator vanishes at alpha = {0}")]
    SingularValue(String),
    /// Malformed textual or JSON input.
    #[error("cannot parse field element: {0}")]
    Parse(String),
}

/// Arithmetic operation selector for [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Polynomial in α with rational coefficients, ascending degree.
///
/// The zero polynomial has no coefficients and no trailing coefficient is
/// ever zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaPolynomial {
    coeffs: Vec<BigRational>,
}

impl AlphaPolynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        AlphaPolynomial { coeffs }
    }

    /// Ascending coefficient list.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exact value at a rational point (Horner scheme).
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Element of Q(α) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlphaFraction {
    num: Vec<BigInt>,
    den: Vec<BigInt>,
}

// Integer polynomial helpers. Slices are ascending and trimmed unless noted.

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_default();
        let y = b.get(k);
        out.push(match y {
            Some(y) => x - y,
            None => x,
        });
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() == 1 {
        return b.iter().map(|c| c * &a[0]).collect();
    }
    if b.len() == 1 {
        return a.iter().map(|c| c * &b[0]).collect();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_scale(a: &[BigInt], s: &BigInt) -> Vec<BigInt> {
    if s.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * s).collect()
}

fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn div_exact_int(a: &[BigInt], s: &BigInt) -> Vec<BigInt> {
    if s.is_one() {
        return a.to_vec();
    }
    a.iter().map(|c| c / s).collect()
}

/// Exact division `a / b` over Z[α]; the caller guarantees divisibility.
fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if b.len() == 1 {
        return div_exact_int(a, &b[0]);
    }
    if a.len() < b.len() {
        return Vec::new();
    }
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let top = &rem[k + db];
        if top.is_zero() {
            continue;
        }
        let c = top / lb;
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    trim(&mut q);
    q
}

/// Pseudo-remainder of `a` by `b` (deg a >= deg b >= 1).
fn poly_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        trim(&mut r);
    }
    r
}

fn primitive(a: &[BigInt]) -> Vec<BigInt> {
    let c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let mut p = div_exact_int(a, &c);
    if p.last().is_some_and(|l| l.is_negative()) {
        for x in p.iter_mut() {
            *x = -&*x;
        }
    }
    p
}

/// Tests whether the primitive linear polynomial `b = b0 + b1·α` divides `a`.
fn linear_divides(a: &[BigInt], b: &[BigInt]) -> bool {
    // a(-b0/b1) = 0  <=>  sum_k a_k (-b0)^k b1^(n-k) = 0
    let n = a.len() - 1;
    let root_num = -&b[0];
    let mut acc = BigInt::zero();
    let mut pow_num = BigInt::one();
    let mut pow_den = vec![BigInt::one(); n + 1];
    for k in 1..=n {
        pow_den[k] = &pow_den[k - 1] * &b[1];
    }
    for (k, ak) in a.iter().enumerate() {
        if !ak.is_zero() {
            acc += ak * &pow_num * &pow_den[n - k];
        }
        pow_num *= &root_num;
    }
    acc.is_zero()
}

/// Primitive gcd over Z[α] with positive leading coefficient.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return primitive(b);
    }
    if b.is_empty() {
        return primitive(a);
    }
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    if y.len() == 2 {
        return if linear_divides(&x, &y) {
            y
        } else {
            vec![BigInt::one()]
        };
    }
    loop {
        let r = poly_prem(&x, &y);
        if r.is_empty() {
            return y;
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        x = y;
        y = primitive(&r);
    }
}

fn eval_int_poly(p: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

impl AlphaFraction {
    /// The zero element.
    pub fn zero() -> Self {
        AlphaFraction {
            num: Vec::new(),
            den: vec![BigInt::one()],
        }
    }

    /// The unit element.
    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The indeterminate α.
    pub fn alpha() -> Self {
        Self::linear(1, 0)
    }

    /// Integer constant.
    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    /// Integer constant from a big integer.
    pub fn from_bigint(n: BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        AlphaFraction {
            num: vec![n],
            den: vec![BigInt::one()],
        }
    }

    /// Rational constant.
    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_parts(vec![r.numer().clone()], vec![r.denom().clone()])
    }

    /// Rational constant `p/q`; panics when `q = 0`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::from_parts(vec![BigInt::from(p)], vec![BigInt::from(q)])
    }

    /// The linear element `a·α + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        let mut num = vec![BigInt::from(b), BigInt::from(a)];
        trim(&mut num);
        Self::from_parts(num, vec![BigInt::one()])
    }

    /// Builds `num/den` from ascending integer coefficients.
    pub fn from_int_polys(num: Vec<BigInt>, den: Vec<BigInt>) -> Result<Self, FieldError> {
        let mut num = num;
        let mut den = den;
        trim(&mut num);
        trim(&mut den);
        if den.is_empty() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::from_parts(num, den))
    }

    /// Builds `num/den` from rational-coefficient polynomials.
    pub fn from_polys(num: &AlphaPolynomial, den: &AlphaPolynomial) -> Result<Self, FieldError> {
        if den.coeffs.is_empty() {
            return Err(FieldError::DivisionByZero);
        }
        let lcm = num
            .coeffs
            .iter()
            .chain(den.coeffs.iter())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let clear = |p: &AlphaPolynomial| -> Vec<BigInt> {
            p.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect()
        };
        Self::from_int_polys(clear(num), clear(den))
    }

    /// Canonicalizes a trimmed pair with nonzero denominator.
    fn from_parts(num: Vec<BigInt>, den: Vec<BigInt>) -> Self {
        debug_assert!(!den.is_empty());
        if num.is_empty() {
            return Self::zero();
        }
        let (num, den) = if num.len() > 1 && den.len() > 1 {
            let g = poly_gcd(&num, &den);
            if g.len() > 1 {
                (poly_div_exact(&num, &g), poly_div_exact(&den, &g))
            } else {
                (num, den)
            }
        } else {
            (num, den)
        };
        Self::normalize_content(num, den)
    }

    /// Fixes integer contents and the sign, assuming Q[α]-coprimality.
    fn normalize_content(num: Vec<BigInt>, den: Vec<BigInt>) -> Self {
        let cn = content(&num);
        let cd = content(&den);
        let g = cn.gcd(&cd);
        let mut num = div_exact_int(&num, &g);
        let mut den = div_exact_int(&den, &g);
        if den.last().is_some_and(|l| l.is_negative()) {
            for c in num.iter_mut().chain(den.iter_mut()) {
                *c = -&*c;
            }
        }
        AlphaFraction { num, den }
    }

    /// Ascending integer coefficients of the numerator.
    pub fn numer(&self) -> &[BigInt] {
        &self.num
    }

    /// Ascending integer coefficients of the denominator.
    pub fn denom(&self) -> &[BigInt] {
        &self.den
    }

    /// Numerator as a rational-coefficient polynomial.
    pub fn numerator(&self) -> AlphaPolynomial {
        AlphaPolynomial::new(self.num.iter().cloned().map(BigRational::from_integer).collect())
    }

    /// Denominator as a rational-coefficient polynomial.
    pub fn denominator(&self) -> AlphaPolynomial {
        AlphaPolynomial::new(self.den.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num.len() == 1 && self.den.len() == 1 && self.num[0] == self.den[0]
    }

    /// True when the element does not depend on α.
    pub fn is_constant(&self) -> bool {
        self.num.len() <= 1 && self.den.len() == 1
    }

    /// The rational value when the element does not depend on α.
    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        let n = self.num.first().cloned().unwrap_or_default();
        Some(BigRational::new(n, self.den[0].clone()))
    }

    /// Decomposes an element of the form `a·α + b` with integer `a`, `b`.
    pub fn as_integer_linear(&self) -> Option<(BigInt, BigInt)> {
        if self.den.len() != 1 || !self.den[0].is_one() || self.num.len() > 2 {
            return None;
        }
        let b = self.num.first().cloned().unwrap_or_default();
        let a = self.num.get(1).cloned().unwrap_or_default();
        Some((a, b))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::normalize_content(self.den.clone(), self.num.clone()))
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self * &other.inv()?)
    }

    /// Multiplication by a rational constant.
    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let num = poly_scale(&self.num, r.numer());
        let den = poly_scale(&self.den, r.denom());
        Self::normalize_content(num, den)
    }

    /// Multiplication by an integer constant.
    pub fn scale_int(&self, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return Self::zero();
        }
        let num = poly_scale(&self.num, &BigInt::from(k));
        Self::normalize_content(num, self.den.clone())
    }

    /// Multiplication by α.
    pub fn mul_alpha(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if self.den.len() > 1 && self.den[0].is_zero() {
            // α divides the denominator: cancel instead of shifting.
            let den = self.den[1..].to_vec();
            return Self::normalize_content(self.num.clone(), den);
        }
        let mut num = Vec::with_capacity(self.num.len() + 1);
        num.push(BigInt::zero());
        num.extend(self.num.iter().cloned());
        AlphaFraction {
            num,
            den: self.den.clone(),
        }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i32) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact value at `α = x`.
    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational, FieldError> {
        let d = eval_int_poly(&self.den, x);
        if d.is_zero() {
            return Err(FieldError::SingularValue(x.to_string()));
        }
        Ok(eval_int_poly(&self.num, x) / d)
    }

    /// The image under the substitution `α ↦ -α`.
    pub fn negate_alpha(&self) -> Self {
        let flip = |p: &[BigInt]| -> Vec<BigInt> {
            p.iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect()
        };
        Self::normalize_content(flip(&self.num), flip(&self.den))
    }

    /// Degree of the numerator minus degree of the denominator (`None` for 0).
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.num.len() as i64 - self.den.len() as i64)
    }

    /// Plain-text rendering using `a` for α, e.g. `(4*a^2+16*a+12)/(2*a^2+5*a+2)`.
    pub fn to_text(&self) -> String {
        let n = format_int_poly(&self.num);
        if self.den.len() == 1 && self.den[0].is_one() {
            return n;
        }
        let d = format_int_poly(&self.den);
        let wrap = |p: &[BigInt], s: String| {
            if p.iter().filter(|c| !c.is_zero()).count() > 1 || p.iter().any(|c| c.is_negative()) {
                format!("({s})")
            } else {
                s
            }
        };
        let n = wrap(&self.num, n);
        let d = wrap(&self.den, d);
        format!("{n}/{d}")
    }
}

fn format_int_poly(p: &[BigInt]) -> String {
    if p.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mono = match k {
            0 => String::new(),
            1 => "a".to_string(),
            _ => format!("a^{k}"),
        };
        if k == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

impl Default for AlphaFraction {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for AlphaFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for AlphaFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl PartialOrd for AlphaFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural total order used only for deterministic sorting.
impl Ord for AlphaFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num.len(), &self.num, self.den.len(), &self.den).cmp(&(
            other.num.len(),
            &other.num,
            other.den.len(),
            &other.den,
        ))
    }
}

fn add_fractions(a: &AlphaFraction, b: &AlphaFraction, negate_b: bool) -> AlphaFraction {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let combine = |x: &[BigInt], y: &[BigInt]| {
        if negate_b {
            poly_sub(x, y)
        } else {
            poly_add(x, y)
        }
    };
    if a.den == b.den {
        let num = combine(&a.num, &b.num);
        if num.is_empty() {
            return AlphaFraction::zero();
        }
        return AlphaFraction::from_parts(num, a.den.clone());
    }
    if a.den.len() == 1 && b.den.len() == 1 {
        let da = &a.den[0];
        let db = &b.den[0];
        let l = da.lcm(db);
        let num = combine(&poly_scale(&a.num, &(&l / da)), &poly_scale(&b.num, &(&l / db)));
        if num.is_empty() {
            return AlphaFraction::zero();
        }
        return AlphaFraction::from_parts(num, vec![l]);
    }
    let g = poly_gcd(&a.den, &b.den);
    let (ra, rb) = if g.len() > 1 {
        (poly_div_exact(&a.den, &g), poly_div_exact(&b.den, &g))
    } else {
        (a.den.clone(), b.den.clone())
    };
    let num = combine(&poly_mul(&a.num, &rb), &poly_mul(&b.num, &ra));
    if num.is_empty() {
        return AlphaFraction::zero();
    }
    let den = poly_mul(&a.den, &rb);
    AlphaFraction::from_parts(num, den)
}

fn mul_fractions(a: &AlphaFraction, b: &AlphaFraction) -> AlphaFraction {
    if a.is_zero() || b.is_zero() {
        return AlphaFraction::zero();
    }
    if a.is_constant() && b.is_constant() {
        let num = poly_mul(&a.num, &b.num);
        let den = poly_mul(&a.den, &b.den);
        return AlphaFraction::normalize_content(num, den);
    }
    // Cross cancellation keeps the product coprime over Q[α].
    let g1 = poly_gcd(&a.num, &b.den);
    let g2 = poly_gcd(&b.num, &a.den);
    let (an, bd) = if g1.len() > 1 {
        (poly_div_exact(&a.num, &g1), poly_div_exact(&b.den, &g1))
    } else {
        (a.num.clone(), b.den.clone())
    };
    let (bn, ad) = if g2.len() > 1 {
        (poly_div_exact(&b.num, &g2), poly_div_exact(&a.den, &g2))
    } else {
        (b.num.clone(), a.den.clone())
    };
    AlphaFraction::normalize_content(poly_mul(&an, &bn), poly_mul(&ad, &bd))
}

/// Applies a field operation, reporting division by zero.
pub fn arith(a: &AlphaFraction, b: &AlphaFraction, op: ArithOp) -> Result<AlphaFraction, FieldError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

/// Exact value of `a` at `α = x`.
pub fn evaluate(a: &AlphaFraction, x: &BigRational) -> Result<BigRational, FieldError> {
    a.evaluate(x)
}

impl Neg for &AlphaFraction {
    type Output = AlphaFraction;
    fn neg(self) -> AlphaFraction {
        AlphaFraction {
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for AlphaFraction {
    type Output = AlphaFraction;
    fn neg(mut self) -> AlphaFraction {
        for c in self.num.iter_mut() {
            *c = -&*c;
        }
        self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&AlphaFraction> for &AlphaFraction {
            type Output = AlphaFraction;
            fn $method(self, rhs: &AlphaFraction) -> AlphaFraction {
                $body(self, rhs)
            }
        }
        impl $trait<AlphaFraction> for AlphaFraction {
            type Output = AlphaFraction;
            fn $method(self, rhs: AlphaFraction) -> AlphaFraction {
                $body(&self, &rhs)
            }
        }
        impl $trait<&AlphaFraction> for AlphaFraction {
            type Output = AlphaFraction;
            fn $method(self, rhs: &AlphaFraction) -> AlphaFraction {
                $body(&self, rhs)
            }
        }
        impl $trait<AlphaFraction> for &AlphaFraction {
            type Output = AlphaFraction;
            fn $method(self, rhs: AlphaFraction) -> AlphaFraction {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_fractions(a, b, false));
forward_binop!(Sub, sub, |a, b| add_fractions(a, b, true));
forward_binop!(Mul, mul, mul_fractions);
forward_binop!(Div, div, |a: &AlphaFraction, b: &AlphaFraction| a
    .checked_div(b)
    .expect("division by zero in Q(alpha)"));

impl AddAssign<&AlphaFraction> for AlphaFraction {
    fn add_assign(&mut self, rhs: &AlphaFraction) {
        *self = add_fractions(self, rhs, false);
    }
}

impl SubAssign<&AlphaFraction> for AlphaFraction {
    fn sub_assign(&mut self, rhs: &AlphaFraction) {
        *self = add_fractions(self, rhs, true);
    }
}

impl MulAssign<&AlphaFraction> for AlphaFraction {
    fn mul_assign(&mut self, rhs: &AlphaFraction) {
        *self = mul_fractions(self, rhs);
    }
}

#[derive(Serialize, Deserialize)]
struct FractionJson {
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for AlphaFraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FractionJson {
            num: self.num.iter().map(|c| c.to_string()).collect(),
            den: self.den.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlphaFraction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = FractionJson::deserialize(d)?;
        let parse = |v: &[String]| -> Result<Vec<BigInt>, D::Error> {
            v.iter()
                .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
                .collect()
        };
        AlphaFraction::from_int_polys(parse(&raw.num)?, parse(&raw.den)?)
            .map_err(serde::de::Error::custom)
    }
}

/// Parses a rational number written as `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let s = s.trim();
    let bad = || FieldError::Parse(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(FieldError::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
