//! Exact scalars from the cyclotomic field Q(zeta_m).
//!
//! A [`CycScalar`] is a residue modulo the m-th cyclotomic polynomial Phi_m:
//! a vector of `phi(m)` rational coefficients in the power basis
//! `1, zeta, ..., zeta^(phi(m)-1)`. Phi_m is irreducible over Q, so the
//! residue ring is a field and every nonzero scalar has an inverse, computed
//! by the extended Euclidean algorithm on polynomials.
//!
//! Scalars of different orders mix freely: binary operations lift both sides
//! into Q(zeta_lcm) through the embedding `zeta_m = zeta_M^(M/m)`. Equality
//! is equality after such a lift, so the rational `1/2` at order 1 equals the
//! same value carried at order 12.
//!
//! The literal syntax used by the interchange format and the identity DSL is
//! parsed and printed here: `z` denotes zeta_m for a caller-supplied order m,
//! and literals are sums of rational multiples of powers of `z`, for example
//! `-1/2*z^3 + 1`. Printing is canonical (ascending powers, reduced
//! rationals) and reparses to the same value.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero in Q(zeta_{order})")]
    DivisionByZero { order: u64 },
    #[error("scalar literal error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("cyclotomic order {0} is not a positive integer")]
    BadOrder(u64),
}

/// Euler's totient, by trial factorisation. Orders stay desk-sized.
pub fn euler_phi(mut m: u64) -> u64 {
    assert!(m >= 1, "totient of zero");
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut pk = 1u64;
            while m % p == 0 {
                m /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if m > 1 {
        phi *= m - 1;
    }
    phi
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Little-endian polynomial subtraction helper: a -= c * x^shift * b.
fn poly_submul(a: &mut Vec<BigRational>, c: &BigRational, shift: usize, b: &[BigRational]) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigRational::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        let t = c * bi;
        a[i + shift] -= t;
    }
}

fn poly_trim(a: &mut Vec<BigRational>) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

/// Exact division with remainder by a monic-leading divisor. Panics on a zero
/// divisor; callers only divide by cyclotomic polynomials and monic gcd
/// intermediates.
fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem: Vec<BigRational> = num.to_vec();
    poly_trim(&mut rem);
    let mut den = den.to_vec();
    poly_trim(&mut den);
    let dlead = den.last().expect("polynomial division by zero").clone();
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let mut quo = vec![BigRational::zero(); rem.len() - dd];
    while rem.len() > dd {
        let shift = rem.len() - 1 - dd;
        let c = rem.last().unwrap() / &dlead;
        quo[shift] = c.clone();
        poly_submul(&mut rem, &c, shift, &den);
        poly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
        if rem.len() - 1 < dd {
            break;
        }
    }
    (quo, rem)
}

/// The m-th cyclotomic polynomial as little-endian rational coefficients,
/// computed by dividing x^m - 1 by the cyclotomic polynomials of the proper
/// divisors of m. Results are cached process-wide.
pub fn cyclotomic_poly(m: u64) -> Vec<BigRational> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigRational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&m) {
        return hit.clone();
    }
    assert!(m >= 1, "cyclotomic order must be positive");
    let result = if m == 1 {
        vec![big(-1), big(1)]
    } else {
        let mut num = vec![BigRational::zero(); (m + 1) as usize];
        num[0] = big(-1);
        num[m as usize] = big(1);
        let mut acc = num;
        for d in 1..m {
            if m % d == 0 {
                let phi_d = cyclotomic_poly(d);
                let (q, r) = poly_divmod(&acc, &phi_d);
                assert!(r.is_empty(), "x^m - 1 must be divisible by Phi_d");
                acc = q;
            }
        }
        acc
    };
    assert_eq!(result.len() as u64 - 1, euler_phi(m));
    cache.lock().unwrap().insert(m, result.clone());
    result
}

/// An element of Q(zeta_m), stored as the residue of a polynomial in zeta_m
/// modulo Phi_m. `coeffs` always has length exactly phi(m).
#[derive(Debug, Clone)]
pub struct CycScalar {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl CycScalar {
    fn from_poly(order: u64, mut poly: Vec<BigRational>) -> Self {
        let phi = euler_phi(order) as usize;
        if poly.len() > phi {
            let modulus = cyclotomic_poly(order);
            let (_, r) = poly_divmod(&poly, &modulus);
            poly = r;
        }
        poly.resize(phi, BigRational::zero());
        CycScalar { order, coeffs: poly }
    }

    pub fn zero() -> Self {
        CycScalar::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        CycScalar::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        CycScalar { order: 1, coeffs: vec![q] }
    }

    pub fn from_integer(n: i64) -> Self {
        CycScalar::from_rational(big(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        CycScalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// zeta_m^k, at cyclotomic order m.
    pub fn root_of_unity(m: u64, k: i64) -> Self {
        assert!(m >= 1, "root of unity needs a positive order");
        let k = k.rem_euclid(m as i64) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        CycScalar::from_poly(m, poly)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value when the residue is a constant polynomial.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Reinterpret in Q(zeta_target) through zeta_m = zeta_target^(target/m).
    /// The current order must divide the target order.
    pub fn lift_to(&self, target: u64) -> Self {
        assert!(
            target % self.order == 0,
            "order {} does not divide lift target {}",
            self.order,
            target
        );
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        CycScalar::from_poly(target, poly)
    }

    fn common_order(&self, rhs: &CycScalar) -> u64 {
        num_integer::lcm(self.order, rhs.order)
    }

    pub fn add(&self, rhs: &CycScalar) -> CycScalar {
        let m = self.common_order(rhs);
        let a = self.lift_to(m);
        let b = rhs.lift_to(m);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        CycScalar { order: m, coeffs }
    }

    pub fn sub(&self, rhs: &CycScalar) -> CycScalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> CycScalar {
        CycScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &CycScalar) -> CycScalar {
        let m = self.common_order(rhs);
        let a = self.lift_to(m);
        let b = rhs.lift_to(m);
        let mut poly = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = x * y;
                poly[i + j] += t;
            }
        }
        CycScalar::from_poly(m, poly)
    }

    pub fn scale(&self, q: &BigRational) -> CycScalar {
        CycScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_m; Phi_m is irreducible over Q so every nonzero residue inverts.
    pub fn inverse(&self) -> Result<CycScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero { order: self.order });
        }
        if let Some(q) = self.as_rational() {
            return Ok(CycScalar::from_rational(q.recip()).lift_to(self.order));
        }
        let modulus = cyclotomic_poly(self.order);
        // Extended gcd on (self, Phi_m): maintain r = u * self (mod Phi_m).
        let mut r0: Vec<BigRational> = self.coeffs.clone();
        poly_trim(&mut r0);
        let mut r1 = modulus.clone();
        let mut u0 = vec![BigRational::one()];
        let mut u1: Vec<BigRational> = Vec::new();
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let mut u = u0.clone();
            // u = u0 - q * u1
            for (i, qi) in q.iter().enumerate() {
                if !qi.is_zero() {
                    poly_submul(&mut u, qi, i, &u1);
                }
            }
            poly_trim(&mut u);
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
        }
        // r0 is a nonzero constant multiple of gcd = 1.
        assert_eq!(r0.len(), 1, "residue shares a factor with an irreducible modulus");
        let lead = r0[0].recip();
        let inv: Vec<BigRational> = u0.iter().map(|c| c * &lead).collect();
        Ok(CycScalar::from_poly(self.order, inv))
    }

    pub fn div(&self, rhs: &CycScalar) -> Result<CycScalar, ScalarError> {
        Ok(self.mul(&rhs.inverse()?))
    }

    pub fn pow(&self, e: i64) -> Result<CycScalar, ScalarError> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = CycScalar::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc.lift_to(num_integer::lcm(self.order, acc.order)))
    }

    /// True when the value is a root of unity of Q(zeta_m); the unit group of
    /// roots of unity there is generated by -zeta_m, of order lcm(2, m).
    pub fn is_root_of_unity(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let n = num_integer::lcm(2, self.order) as i64;
        self.pow(n).map(|v| v.is_one()).unwrap_or(false)
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        let m = self.common_order(other);
        self.lift_to(m).coeffs == other.lift_to(m).coeffs
    }
}

impl Eq for CycScalar {}

impl std::ops::Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        CycScalar::add(self, rhs)
    }
}

impl std::ops::Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        CycScalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        CycScalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar::neg(self)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycScalar {
    /// Canonical literal form: nonzero terms in ascending powers of `z`,
    /// coefficients as reduced rationals, e.g. `1 - 1/2*z^3`. Reparses to the
    /// same value at the same order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write_rational(f, &mag)?;
            } else {
                if !mag.is_one() {
                    write_rational(f, &mag)?;
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{k}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

struct Lexer<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { text: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn error(&self, msg: &str) -> ScalarError {
        ScalarError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a digit"));
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }
}

/// Parse a scalar literal, with `z` meaning zeta_order.
///
/// Grammar: sums and differences of terms, a term is a `*`-separated product
/// of atoms, an atom is a rational `p` or `p/q`, the symbol `z` with an
/// optional caret power, or a parenthesised literal.
pub fn parse_scalar(text: &str, order: u64) -> Result<CycScalar, ScalarError> {
    if order == 0 {
        return Err(ScalarError::BadOrder(order));
    }
    let mut lx = Lexer::new(text);
    let v = parse_sum(&mut lx, order)?;
    if lx.peek().is_some() {
        return Err(lx.error("trailing input after literal"));
    }
    Ok(v)
}

fn parse_sum(lx: &mut Lexer, order: u64) -> Result<CycScalar, ScalarError> {
    let mut negate = false;
    match lx.peek() {
        Some(b'+') => {
            lx.bump();
        }
        Some(b'-') => {
            lx.bump();
            negate = true;
        }
        _ => {}
    }
    let mut acc = parse_product(lx, order)?;
    if negate {
        acc = acc.neg();
    }
    loop {
        match lx.peek() {
            Some(b'+') => {
                lx.bump();
                let t = parse_product(lx, order)?;
                acc = acc.add(&t);
            }
            Some(b'-') => {
                lx.bump();
                let t = parse_product(lx, order)?;
                acc = acc.sub(&t);
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_product(lx: &mut Lexer, order: u64) -> Result<CycScalar, ScalarError> {
    let mut acc = parse_atom(lx, order)?;
    while let Some(b'*') = lx.peek() {
        lx.bump();
        let t = parse_atom(lx, order)?;
        acc = acc.mul(&t);
    }
    Ok(acc)
}

fn parse_atom(lx: &mut Lexer, order: u64) -> Result<CycScalar, ScalarError> {
    match lx.peek() {
        Some(b'(') => {
            lx.bump();
            let inner = parse_sum(lx, order)?;
            match lx.bump() {
                Some(b')') => Ok(inner),
                _ => Err(lx.error("expected ')'")),
            }
        }
        Some(b'z') => {
            lx.bump();
            let mut k = 1i64;
            if let Some(b'^') = lx.peek() {
                lx.bump();
                let mut sign = 1i64;
                if let Some(b'-') = lx.peek() {
                    lx.bump();
                    sign = -1;
                }
                let n = lx.integer()?;
                // z^order = 1, so exponents reduce modulo the order.
                let n: i64 = (&n % BigInt::from(order))
                    .try_into()
                    .map_err(|_| lx.error("exponent out of range"))?;
                k = sign * n;
            }
            Ok(CycScalar::root_of_unity(order, k))
        }
        Some(c) if c.is_ascii_digit() => {
            let num = lx.integer()?;
            if let Some(b'/') = lx.peek() {
                lx.bump();
                let den = lx.integer()?;
                if den.is_zero() {
                    return Err(lx.error("zero denominator"));
                }
                Ok(CycScalar::from_rational(BigRational::new(num, den)))
            } else {
                Ok(CycScalar::from_rational(BigRational::from_integer(num)))
            }
        }
        _ => Err(lx.error("expected a rational, 'z', or '('")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_small_values() {
        let expect = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), *e);
        }
    }

    #[test]
    fn cyclotomic_polynomials_match_known_forms() {
        // Phi_1 = x - 1, Phi_2 = x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1.
        assert_eq!(cyclotomic_poly(1), vec![big(-1), big(1)]);
        assert_eq!(cyclotomic_poly(2), vec![big(1), big(1)]);
        assert_eq!(cyclotomic_poly(4), vec![big(1), big(0), big(1)]);
        assert_eq!(cyclotomic_poly(6), vec![big(1), big(-1), big(1)]);
        // Phi_12 = x^4 - x^2 + 1.
        assert_eq!(
            cyclotomic_poly(12),
            vec![big(1), big(0), big(-1), big(0), big(1)]
        );
    }

    #[test]
    fn primitive_root_has_full_order() {
        let z = CycScalar::root_of_unity(5, 1);
        let mut acc = CycScalar::one();
        for _ in 0..4 {
            acc = acc.mul(&z);
            assert!(!acc.is_one());
        }
        acc = acc.mul(&z);
        assert!(acc.is_one());
    }

    #[test]
    fn inverse_of_primitive_fifth_root() {
        // zeta^-1 = zeta^4 = -1 - zeta - zeta^2 - zeta^3 modulo Phi_5.
        let z = CycScalar::root_of_unity(5, 1);
        let inv = z.inverse().unwrap();
        assert_eq!(inv, CycScalar::root_of_unity(5, 4));
        assert_eq!(inv.coeffs(), vec![big(-1), big(-1), big(-1), big(-1)]);
        assert!(z.mul(&inv).is_one());
    }

    #[test]
    fn sixth_root_squares_to_third_root() {
        let z6 = CycScalar::root_of_unity(6, 1);
        let z3 = CycScalar::root_of_unity(3, 1);
        assert_eq!(z6.mul(&z6), z3);
    }

    #[test]
    fn cross_order_equality_and_mixing() {
        let half = CycScalar::ratio(1, 2);
        let half12 = half.lift_to(12);
        assert_eq!(half, half12);
        let z4 = CycScalar::root_of_unity(4, 1);
        let z12_cubed = CycScalar::root_of_unity(12, 3);
        assert_eq!(z4, z12_cubed);
        let s = z4.add(&CycScalar::root_of_unity(3, 1));
        assert_eq!(s.order(), 12);
    }

    #[test]
    fn division_by_zero_reports_order() {
        let e = CycScalar::zero().inverse().unwrap_err();
        assert_eq!(e, ScalarError::DivisionByZero { order: 1 });
    }

    #[test]
    fn literal_round_trip() {
        let v = parse_scalar("-1/2*z^3 + 1", 8).unwrap();
        let printed = v.to_string();
        assert_eq!(printed, "1 - 1/2*z^3");
        assert_eq!(parse_scalar(&printed, 8).unwrap(), v);
    }

    #[test]
    fn literal_whitespace_insensitive() {
        let a = parse_scalar(" - 1/2 * z ^ 3+1 ", 8).unwrap();
        let b = parse_scalar("-1/2*z^3+1", 8).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn literal_z_at_order_one_is_one() {
        assert!(parse_scalar("z", 1).unwrap().is_one());
        assert_eq!(parse_scalar("z", 2).unwrap(), CycScalar::from_integer(-1));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_scalar("1 +", 4).is_err());
        assert!(parse_scalar("q", 4).is_err());
        assert!(parse_scalar("1/0", 4).is_err());
        assert!(parse_scalar("(1", 4).is_err());
        assert!(parse_scalar("1 1", 4).is_err());
    }

    #[test]
    fn root_of_unity_detection() {
        assert!(CycScalar::root_of_unity(12, 7).is_root_of_unity());
        assert!(CycScalar::from_integer(-1).is_root_of_unity());
        assert!(!CycScalar::from_integer(2).is_root_of_unity());
        assert!(!CycScalar::zero().is_root_of_unity());
        let half = CycScalar::ratio(1, 2);
        assert!(!half.is_root_of_unity());
    }

    #[test]
    fn power_with_negative_exponent() {
        let z = CycScalar::root_of_unity(7, 2);
        let p = z.pow(-3).unwrap();
        assert!(p.mul(&z.pow(3).unwrap()).is_one());
    }
}
