//! Exact coefficient fields: the rationals, odd prime fields, and univariate
//! rational functions in a parameter `t` over either.
//!
//! A [`Field`] value is a field *instance* (it carries the modulus, the base
//! field, ...); elements are plain values of the associated `Elem` type and
//! all arithmetic goes through the instance.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operand does not belong to the field {0}")]
    MixedFields(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("modulus {0} is too large (limit 2^31)")]
    ModulusTooLarge(u64),
    #[error("valuation of zero is undefined")]
    ValuationOfZero,
    #[error("pole at t = {0}")]
    Pole(String),
    #[error("cannot parse `{0}` as a field literal")]
    BadLiteral(String),
    #[error("unknown field spec `{0}`")]
    BadSpec(String),
}

/// A field instance with exact arithmetic.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    /// Canonical spec string, e.g. `QQ`, `GF(3)`, `QQ(t)`.
    fn name(&self) -> String;
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Whether `a` is a well-formed (canonical) element of this instance.
    fn contains(&self, a: &Self::Elem) -> bool;

    fn format(&self, a: &Self::Elem) -> String;

    /// Parses a numeric literal: an integer or `p/q`.
    fn parse_literal(&self, s: &str) -> Result<Self::Elem, FieldError>;

    /// Named constants of the field (the parameter `t` of a function field).
    fn symbol(&self, _name: &str) -> Option<Self::Elem> {
        None
    }

    /// Every element, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// A random element; small height for infinite fields.
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn random_nonzero(&self, rng: &mut dyn RngCore) -> Self::Elem {
        loop {
            let a = self.random(rng);
            if !self.is_zero(&a) {
                return a;
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked arithmetic: both operands must belong to `field`.
pub fn scalar_arith<F: Field>(
    field: &F,
    a: &F::Elem,
    b: &F::Elem,
    op: ArithOp,
) -> Result<F::Elem, FieldError> {
    if !field.contains(a) || !field.contains(b) {
        return Err(FieldError::MixedFields(field.name()));
    }
    Ok(match op {
        ArithOp::Add => field.add(a, b),
        ArithOp::Sub => field.sub(a, b),
        ArithOp::Mul => field.mul(a, b),
        ArithOp::Div => field.div(a, b)?,
    })
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn name(&self) -> String {
        "QQ".into()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn contains(&self, a: &BigRational) -> bool {
        // `Ratio` keeps itself reduced with a positive denominator.
        a.denom().is_positive()
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn parse_literal(&self, s: &str) -> Result<BigRational, FieldError> {
        BigRational::from_str(s.trim()).map_err(|_| FieldError::BadLiteral(s.to_string()))
    }
    fn random(&self, rng: &mut dyn RngCore) -> BigRational {
        self.from_int(rng.gen_range(-9..=9))
    }
}

/// The prime field GF(p) for an odd prime p < 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= 1 << 31 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn name(&self) -> String {
        format!("GF({})", self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Result<u64, FieldError> {
        if *a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.pow(a, self.p - 2))
    }
    fn contains(&self, a: &u64) -> bool {
        *a < self.p
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse_literal(&self, s: &str) -> Result<u64, FieldError> {
        let bad = || FieldError::BadLiteral(s.to_string());
        let r = BigRational::from_str(s.trim()).map_err(|_| bad())?;
        let p = BigInt::from(self.p);
        let num = (r.numer() % &p + &p) % &p;
        let den = (r.denom() % &p + &p) % &p;
        let num = num.to_u64().ok_or_else(bad)?;
        let den = den.to_u64().ok_or_else(bad)?;
        self.div(&num, &den)
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
    fn random(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// An element of k(t): `num / den` with coefficient lists in increasing
/// degree, no trailing zeros, `den` monic and coprime to `num`. Zero is
/// `0 / 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<E> {
    num: Vec<E>,
    den: Vec<E>,
}

impl<E> RatFunc<E> {
    pub fn numerator(&self) -> &[E] {
        &self.num
    }
    pub fn denominator(&self) -> &[E] {
        &self.den
    }
}

/// The rational function field k(t) over a base field k.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunctions<F: Field> {
    base: F,
}

impl<F: Field> RationalFunctions<F> {
    pub fn new(base: F) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    /// The parameter `t`.
    pub fn t(&self) -> RatFunc<F::Elem> {
        RatFunc {
            num: vec![self.base.zero(), self.base.one()],
            den: vec![self.base.one()],
        }
    }

    pub fn constant(&self, c: F::Elem) -> RatFunc<F::Elem> {
        let num = if self.base.is_zero(&c) { vec![] } else { vec![c] };
        RatFunc {
            num,
            den: vec![self.base.one()],
        }
    }

    /// Builds `num / den` from coefficient lists (increasing degree).
    pub fn from_parts(&self, num: Vec<F::Elem>, den: Vec<F::Elem>) -> Result<RatFunc<F::Elem>, FieldError> {
        let den = poly_trim(&self.base, den);
        if den.is_empty() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.normalize(poly_trim(&self.base, num), den))
    }

    fn normalize(&self, num: Vec<F::Elem>, den: Vec<F::Elem>) -> RatFunc<F::Elem> {
        let k = &self.base;
        if num.is_empty() {
            return RatFunc {
                num,
                den: vec![k.one()],
            };
        }
        let g = poly_gcd(k, &num, &den);
        let (mut num, _) = poly_divrem(k, &num, &g);
        let (mut den, _) = poly_divrem(k, &den, &g);
        let lc = k.inv(den.last().expect("nonzero denominator")).expect("nonzero lc");
        for c in num.iter_mut() {
            *c = k.mul(c, &lc);
        }
        for c in den.iter_mut() {
            *c = k.mul(c, &lc);
        }
        RatFunc { num, den }
    }

    /// Order of vanishing at t = 0 (negative for a pole).
    pub fn valuation(&self, f: &RatFunc<F::Elem>) -> Result<i64, FieldError> {
        if f.num.is_empty() {
            return Err(FieldError::ValuationOfZero);
        }
        Ok(low_order(&self.base, &f.num) as i64 - low_order(&self.base, &f.den) as i64)
    }

    pub fn evaluate_at(&self, f: &RatFunc<F::Elem>, t0: &F::Elem) -> Result<F::Elem, FieldError> {
        let k = &self.base;
        let d = poly_eval(k, &f.den, t0);
        if k.is_zero(&d) {
            return Err(FieldError::Pole(k.format(t0)));
        }
        k.div(&poly_eval(k, &f.num, t0), &d)
    }

    /// Multiplies by t^e (e may be negative).
    pub fn shift(&self, f: &RatFunc<F::Elem>, e: i64) -> RatFunc<F::Elem> {
        if e == 0 || f.num.is_empty() {
            return f.clone();
        }
        let k = &self.base;
        let pad = |p: &[F::Elem], e: usize| {
            let mut v = vec![k.zero(); e];
            v.extend_from_slice(p);
            v
        };
        if e > 0 {
            self.normalize(pad(&f.num, e as usize), f.den.clone())
        } else {
            self.normalize(f.num.clone(), pad(&f.den, (-e) as usize))
        }
    }

    pub fn is_polynomial(&self, f: &RatFunc<F::Elem>) -> bool {
        f.den.len() == 1
    }
}

impl<F: Field> Field for RationalFunctions<F> {
    type Elem = RatFunc<F::Elem>;

    fn name(&self) -> String {
        format!("{}(t)", self.base.name())
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn zero(&self) -> Self::Elem {
        self.constant(self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_int(n))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_empty()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let k = &self.base;
        if a.den == b.den {
            return self.normalize(poly_add(k, &a.num, &b.num), a.den.clone());
        }
        let num = poly_add(k, &poly_mul(k, &a.num, &b.den), &poly_mul(k, &b.num, &a.den));
        self.normalize(num, poly_mul(k, &a.den, &b.den))
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let k = &self.base;
        if a.num.is_empty() || b.num.is_empty() {
            return self.zero();
        }
        self.normalize(poly_mul(k, &a.num, &b.num), poly_mul(k, &a.den, &b.den))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFunc {
            num: a.num.iter().map(|c| self.base.neg(c)).collect(),
            den: a.den.clone(),
        }
    }
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError> {
        if a.num.is_empty() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.normalize(a.den.clone(), a.num.clone()))
    }
    fn contains(&self, a: &Self::Elem) -> bool {
        let k = &self.base;
        let trimmed = |p: &[F::Elem]| p.last().map_or(true, |c| !k.is_zero(c));
        if !a.num.iter().chain(a.den.iter()).all(|c| k.contains(c)) {
            return false;
        }
        if !trimmed(&a.num) || a.den.is_empty() || !trimmed(&a.den) {
            return false;
        }
        if !k.is_one(a.den.last().unwrap()) {
            return false;
        }
        if a.num.is_empty() {
            return a.den.len() == 1;
        }
        poly_gcd(k, &a.num, &a.den).len() == 1
    }
    fn format(&self, a: &Self::Elem) -> String {
        let k = &self.base;
        let num = format_poly(k, &a.num);
        if a.den.len() == 1 {
            if a.num.iter().filter(|c| !k.is_zero(c)).count() <= 1 {
                num
            } else {
                format!("({num})")
            }
        } else {
            format!("({num})/({})", format_poly(k, &a.den))
        }
    }
    fn parse_literal(&self, s: &str) -> Result<Self::Elem, FieldError> {
        Ok(self.constant(self.base.parse_literal(s)?))
    }
    fn symbol(&self, name: &str) -> Option<Self::Elem> {
        (name == "t").then(|| self.t())
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        let num = vec![self.base.random(rng), self.base.random(rng)];
        self.normalize(poly_trim(&self.base, num), vec![self.base.one()])
    }
}

fn poly_trim<F: Field>(k: &F, mut p: Vec<F::Elem>) -> Vec<F::Elem> {
    while p.last().is_some_and(|c| k.is_zero(c)) {
        p.pop();
    }
    p
}

fn low_order<F: Field>(k: &F, p: &[F::Elem]) -> usize {
    p.iter().position(|c| !k.is_zero(c)).unwrap_or(0)
}

fn poly_add<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let out = (0..n)
        .map(|i| k.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    poly_trim(k, out)
}

fn poly_mul<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    poly_trim(k, out)
}

fn poly_divrem<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lc_inv = k.inv(b.last().expect("nonzero divisor")).expect("nonzero lc");
    let mut quot = vec![k.zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = k.mul(rem.last().unwrap(), &lc_inv);
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] = k.sub(&rem[shift + j], &k.mul(&c, y));
        }
        quot[shift] = c;
        rem = poly_trim(k, rem);
    }
    (poly_trim(k, quot), rem)
}

fn poly_gcd<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let (_, r) = poly_divrem(k, &x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        return vec![k.one()];
    }
    let lc = k.inv(x.last().unwrap()).unwrap();
    x.iter().map(|c| k.mul(c, &lc)).collect()
}

fn poly_eval<F: Field>(k: &F, p: &[F::Elem], x: &F::Elem) -> F::Elem {
    p.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
}

fn format_poly<F: Field>(k: &F, p: &[F::Elem]) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.iter().enumerate().rev() {
        if k.is_zero(c) {
            continue;
        }
        let mut s = k.format(c);
        let negative = s.starts_with('-');
        if negative {
            s.remove(0);
        }
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{i}"),
        };
        if mono.is_empty() {
            out.push_str(&s);
        } else if s == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{s}*{mono}"));
        }
    }
    out
}

/// Parsed form of the field grammar `QQ`, `GF(p)`, `QQ(t)`, `GF(p)(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
    Functions(Box<FieldSpec>),
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, FieldError> {
        let s = s.trim();
        let bad = || FieldError::BadSpec(s.to_string());
        if let Some(base) = s.strip_suffix("(t)") {
            let base: FieldSpec = base.parse().map_err(|_| bad())?;
            if matches!(base, FieldSpec::Functions(_)) {
                return Err(bad());
            }
            return Ok(FieldSpec::Functions(Box::new(base)));
        }
        if s == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?
            .trim()
            .parse::<u64>()
            .map_err(|_| bad())?;
        PrimeField::new(p)?;
        Ok(FieldSpec::Prime(p))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Functions(b) => write!(f, "{b}(t)"),
        }
    }
}

/// Runs `$body` with `$k` bound to the concrete field described by a
/// [`FieldSpec`]. The body is instantiated once per field type.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$k:ident| $body:expr) => {{
        use $crate::field::{FieldSpec, PrimeField, RationalFunctions, Rationals};
        match $spec {
            FieldSpec::Rationals => {
                let $k = Rationals;
                $body
            }
            FieldSpec::Prime(p) => {
                let $k = PrimeField::new(*p).expect("validated prime");
                $body
            }
            FieldSpec::Functions(base) => match base.as_ref() {
                FieldSpec::Prime(p) => {
                    let $k = RationalFunctions::new(PrimeField::new(*p).expect("validated prime"));
                    $body
                }
                _ => {
                    let $k = RationalFunctions::new(Rationals);
                    $body
                }
            },
        }
    }};
}
