//! Exact arithmetic in the group ring Z[Z_m] of formal integer combinations
//! of m-th roots of unity.
//!
//! Values are kept in redundant group-ring form so that large sums of phases
//! stay cheap; equality of the represented complex numbers is decided on
//! demand by reduction modulo the m-th cyclotomic polynomial. Numeric
//! evaluation happens only at the presentation boundary and carries an
//! explicit error bound.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::linking::ModOne;

/// Default cap on the common root-of-unity order.
pub const DEFAULT_ORDER_CAP: u64 = 1_000_000;

/// Formal sum `sum_k c_k zeta_m^k` with integer coefficients.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    order: u64,
    coeffs: BTreeMap<u64, BigInt>,
}

impl CyclotomicNumber {
    pub fn zero() -> Self {
        CyclotomicNumber {
            order: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(BigInt::one())
    }

    pub fn from_int(c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        CyclotomicNumber { order: 1, coeffs }
    }

    /// `zeta_order^exp`.
    pub fn root(order: u64, exp: u64) -> Self {
        assert!(order >= 1);
        let mut coeffs = BTreeMap::new();
        coeffs.insert(exp % order, BigInt::one());
        CyclotomicNumber { order, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &BTreeMap<u64, BigInt> {
        &self.coeffs
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Structurally zero (no stored terms). See [`CyclotomicNumber::is_zero`]
    /// for equality with the complex number 0.
    pub fn is_structurally_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn insert(&mut self, exp: u64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = exp % self.order;
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// Re-express in a multiple of the current order.
    fn to_order(&self, new_order: u64) -> CyclotomicNumber {
        debug_assert_eq!(new_order % self.order, 0);
        let stride = new_order / self.order;
        CyclotomicNumber {
            order: new_order,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&k, c)| (k * stride, c.clone()))
                .collect(),
        }
    }

    fn unify(a: &Self, b: &Self, cap: u64) -> Result<(Self, Self)> {
        let l = (a.order as u128).lcm(&(b.order as u128));
        if l > cap as u128 {
            return Err(Error::OrderOverflow {
                needed: l.to_string(),
                cap,
            });
        }
        let l = l as u64;
        Ok((a.to_order(l), b.to_order(l)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.add_capped(other, DEFAULT_ORDER_CAP)
    }

    pub fn add_capped(&self, other: &Self, cap: u64) -> Result<Self> {
        let (mut a, b) = Self::unify(self, other, cap)?;
        for (&k, c) in &b.coeffs {
            a.insert(k, c.clone());
        }
        Ok(a)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_capped(other, DEFAULT_ORDER_CAP)
    }

    pub fn mul_capped(&self, other: &Self, cap: u64) -> Result<Self> {
        let (a, b) = Self::unify(self, other, cap)?;
        let mut out = CyclotomicNumber {
            order: a.order,
            coeffs: BTreeMap::new(),
        };
        for (&i, ci) in &a.coeffs {
            for (&j, cj) in &b.coeffs {
                out.insert((i + j) % a.order, ci * cj);
            }
        }
        Ok(out)
    }

    /// Complex conjugation: `zeta^k -> zeta^(m-k)`.
    pub fn conjugate(&self) -> Self {
        let m = self.order;
        CyclotomicNumber {
            order: m,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&k, c)| (if k == 0 { 0 } else { m - k }, c.clone()))
                .collect(),
        }
    }

    /// `self * conjugate(self)`, exact.
    pub fn abs_sq(&self) -> Result<Self> {
        self.mul(&self.conjugate())
    }

    /// True iff the represented complex number is 0: the coefficient
    /// polynomial reduces to 0 modulo the m-th cyclotomic polynomial.
    pub fn is_zero(&self) -> bool {
        if self.coeffs.is_empty() {
            return true;
        }
        let mut poly = vec![BigInt::zero(); self.order as usize];
        for (&k, c) in &self.coeffs {
            poly[k as usize] = c.clone();
        }
        let phi = cyclotomic_polynomial(self.order);
        let rem = poly_rem(poly, &phi);
        rem.iter().all(Zero::is_zero)
    }

    /// Equality of the represented complex numbers.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.sub(other)?.is_zero())
    }

    /// The represented value as a rational integer, if it is one. The
    /// residue modulo the cyclotomic polynomial is expressed over the power
    /// basis, so the value is a rational integer iff the residue is constant.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.coeffs.is_empty() {
            return Some(BigInt::zero());
        }
        let mut poly = vec![BigInt::zero(); self.order as usize];
        for (&k, c) in &self.coeffs {
            poly[k as usize] = c.clone();
        }
        let phi = cyclotomic_polynomial(self.order);
        let rem = poly_rem(poly, &phi);
        if rem.iter().skip(1).all(Zero::is_zero) {
            Some(rem.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    /// Floating approximation with a guaranteed absolute error bound.
    /// Effective precision is clamped to 12 significant digits (f64 path).
    pub fn numeric(&self, precision: u32) -> GaussianApprox {
        let precision = precision.clamp(1, 12);
        let m = self.order as f64;
        let (mut re, mut im, mut total_abs) = (0.0f64, 0.0f64, 0.0f64);
        for (&k, c) in &self.coeffs {
            let cf = big_to_f64(c);
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / m;
            re += cf * angle.cos();
            im += cf * angle.sin();
            total_abs += cf.abs();
        }
        let n_terms = self.coeffs.len() as f64;
        // per-term rounding plus summation rounding, both proportional to
        // the total coefficient mass; clamped precision keeps this within
        // the advertised 10^(1-precision) * sum|c_k| envelope
        let err_float = total_abs * (n_terms + 8.0) * f64::EPSILON;
        let err_envelope = total_abs * 10f64.powi(1 - precision as i32);
        debug_assert!(err_float <= err_envelope || total_abs == 0.0);
        GaussianApprox {
            re,
            im,
            err: err_float,
        }
    }
}

fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::INFINITY)
}

/// Phase term `e^(2 pi i * scale * q)` as an exact root of unity.
/// Callers pass negated arguments for `e^(-2 pi i ...)` conventions.
pub fn root_term(q: &ModOne, scale: &BigInt) -> Result<CyclotomicNumber> {
    root_term_capped(q, scale, DEFAULT_ORDER_CAP)
}

pub fn root_term_capped(q: &ModOne, scale: &BigInt, cap: u64) -> Result<CyclotomicNumber> {
    let r = q.scale_int(scale);
    let den = r.denom();
    if *den > BigInt::from(cap) {
        return Err(Error::OrderOverflow {
            needed: den.to_string(),
            cap,
        });
    }
    let m = den.to_u64().expect("checked against cap");
    let k = r.numer().to_u64().expect("numerator in [0, den)");
    Ok(CyclotomicNumber::root(m, k))
}

/// Coefficients of the m-th cyclotomic polynomial, ascending, monic.
/// Computed by dividing x^m - 1 by the cyclotomic polynomials of the
/// proper divisors of m.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    let mut memo: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    let divisors: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
    for &d in &divisors {
        // x^d - 1
        let mut p = vec![BigInt::zero(); d as usize + 1];
        p[0] = -BigInt::one();
        p[d as usize] = BigInt::one();
        for &e in &divisors {
            if e < d && d % e == 0 {
                p = poly_div_exact(p, &memo[&e]);
            }
        }
        memo.insert(d, p);
    }
    memo.remove(&m).unwrap()
}

/// Exact quotient of polynomials over Z; divisor must be monic and divide.
fn poly_div_exact(mut num: Vec<BigInt>, den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let nd = num.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = num[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, dc) in den.iter().enumerate() {
            num[k + i] -= &c * dc;
        }
    }
    debug_assert!(num.iter().all(Zero::is_zero), "division not exact");
    quot
}

/// Remainder of `num` modulo the monic polynomial `den`.
fn poly_rem(mut num: Vec<BigInt>, den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    while num.len() > dd {
        let top = num.len() - 1;
        let c = num.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        for (i, dc) in den.iter().enumerate().take(dd) {
            num[top - dd + i] -= &c * dc;
        }
    }
    num
}

/// Numeric view with a guaranteed absolute error bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussianApprox {
    pub re: f64,
    pub im: f64,
    pub err: f64,
}

impl Serialize for GaussianApprox {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GaussianApprox", 3)?;
        st.serialize_field("re", &self.re)?;
        st.serialize_field("im", &self.im)?;
        st.serialize_field("err", &self.err)?;
        st.end()
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, c) in &self.coeffs {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{}^{}", self.order, k)?,
                (_, false) => write!(f, "{mag}*z{}^{}", self.order, k)?,
            }
        }
        Ok(())
    }
}

// JSON: {"order": m, "coeffs": {"k": c, ...}}
impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: BTreeMap<String, serde_json::Number> = self
            .coeffs
            .iter()
            .map(|(k, c)| {
                (
                    k.to_string(),
                    c.to_string().parse().expect("integer coefficient"),
                )
            })
            .collect();
        let mut st = s.serialize_struct("CyclotomicNumber", 2)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}
