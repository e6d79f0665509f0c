//! Exact arithmetic with cyclotomic integers.
//!
//! An element of `Z[ω]`, `ω = exp(2πi/r)`, is stored as its coordinate
//! vector in the power basis `1, ω, ..., ω^(φ(r)-1)` of the ring of
//! integers, i.e. as a polynomial in `ω` reduced modulo the `r`-th
//! cyclotomic polynomial `Φ_r`. Because the basis is a basis, equality and
//! zero-testing are exact coefficient comparisons — no floating point is
//! involved anywhere in this module except the explicit [`CycloInt::to_complex`]
//! embedding.
//!
//! `Φ_r` is computed by exact division of `x^r - 1` by the product of
//! `Φ_d` over proper divisors `d | r`, and cached per order together with a
//! table of the reduced powers `ω^0, ..., ω^(r-1)`.
//!
//! Coefficient arithmetic is `i64` and checked: an overflow is a bug in the
//! caller's problem sizing and panics rather than wrapping silently.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

pub type Complex64 = nalgebra::Complex<f64>;

#[inline]
fn cadd(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("overflow in cyclotomic arithmetic")
}

#[inline]
fn cmul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("overflow in cyclotomic arithmetic")
}

/// Multiplies two integer polynomials given by ascending coefficients.
fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = cadd(out[i + j], cmul(x, y));
        }
    }
    out
}

/// Divides `num` by the monic polynomial `den` exactly, panicking on a
/// nonzero remainder.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let d = den.len() - 1;
    assert!(rem.len() > d, "degree of numerator below divisor");
    let mut quot = vec![0i64; rem.len() - d];
    for t in (d..rem.len()).rev() {
        let c = rem[t];
        if c == 0 {
            continue;
        }
        quot[t - d] = c;
        for (s, &m) in den.iter().enumerate() {
            rem[t - d + s] = cadd(rem[t - d + s], -cmul(c, m));
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

/// The `r`-th cyclotomic polynomial as ascending coefficients
/// (so `cyclotomic_poly(4) == [1, 0, 1]` for `x² + 1`).
pub fn cyclotomic_poly(r: usize) -> Vec<i64> {
    assert!(r >= 1);
    fn go(r: usize, memo: &mut HashMap<usize, Vec<i64>>) -> Vec<i64> {
        if let Some(p) = memo.get(&r) {
            return p.clone();
        }
        let mut num = vec![0i64; r + 1];
        num[0] = -1;
        num[r] = 1;
        let mut poly = num;
        for d in 1..r {
            if r.is_multiple_of(d) {
                let phi_d = go(d, memo);
                poly = poly_div_exact(&poly, &phi_d);
            }
        }
        memo.insert(r, poly.clone());
        poly
    }
    go(r, &mut HashMap::new())
}

/// Per-order data shared by all `CycloInt` values of that order.
struct OrderData {
    /// Degree of `Φ_r` = rank of the ring of integers.
    phi: usize,
    /// `Φ_r`, ascending, monic.
    modulus: Vec<i64>,
    /// `powers[e]` = coordinates of `ω^e` for `e` in `0..r`.
    powers: Vec<Vec<i64>>,
}

impl OrderData {
    /// Reduces an arbitrary-degree coefficient vector modulo `Φ_r` in place
    /// and truncates it to length `phi`.
    fn reduce(&self, v: &mut Vec<i64>) {
        for t in (self.phi..v.len()).rev() {
            let c = v[t];
            if c == 0 {
                continue;
            }
            v[t] = 0;
            for (s, &m) in self.modulus.iter().enumerate().take(self.phi) {
                v[t - self.phi + s] = cadd(v[t - self.phi + s], -cmul(c, m));
            }
        }
        v.resize(self.phi, 0);
    }
}

fn order_data(r: usize) -> Arc<OrderData> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<OrderData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(d) = guard.get(&r) {
        return Arc::clone(d);
    }
    let modulus = cyclotomic_poly(r);
    let phi = modulus.len() - 1;
    let data = OrderData {
        phi,
        modulus,
        powers: Vec::new(),
    };
    let mut powers = Vec::with_capacity(r);
    for e in 0..r {
        let mut v = vec![0i64; e + 1];
        v[e] = 1;
        data.reduce(&mut v);
        powers.push(v);
    }
    let full = Arc::new(OrderData {
        phi: data.phi,
        modulus: data.modulus,
        powers,
    });
    guard.insert(r, Arc::clone(&full));
    full
}

/// An exact cyclotomic integer of a fixed order `r`, i.e. an element of
/// `Z[exp(2πi/r)]` in power-basis coordinates.
///
/// All binary operations require equal orders and panic otherwise; use
/// [`CycloInt::embed`] to move into a larger ring first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCycloInt")]
pub struct CycloInt {
    order: usize,
    coeffs: Vec<i64>,
}

#[derive(Deserialize)]
struct RawCycloInt {
    order: usize,
    coeffs: Vec<i64>,
}

impl TryFrom<RawCycloInt> for CycloInt {
    type Error = String;

    fn try_from(raw: RawCycloInt) -> std::result::Result<Self, String> {
        if raw.order == 0 {
            return Err("cyclotomic order must be positive".into());
        }
        let phi = order_data(raw.order).phi;
        if raw.coeffs.len() != phi {
            return Err(format!(
                "expected {} coefficients for order {}, got {}",
                phi,
                raw.order,
                raw.coeffs.len()
            ));
        }
        Ok(CycloInt {
            order: raw.order,
            coeffs: raw.coeffs,
        })
    }
}

impl CycloInt {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1);
        let phi = order_data(order).phi;
        CycloInt {
            order,
            coeffs: vec![0; phi],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: usize, value: i64) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = value;
        c
    }

    /// `ω^k` where `ω = exp(2πi/order)`; `k` is taken modulo `order`.
    pub fn root_of_unity(order: usize, k: usize) -> Self {
        assert!(order >= 1);
        let data = order_data(order);
        CycloInt {
            order,
            coeffs: data.powers[k % order].clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        CycloInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|&c| cmul(c, k)).collect(),
        }
    }

    /// Applies the Galois substitution `ω -> ω^s`; `s` must be coprime to
    /// the order for this to be an automorphism, which the callers here
    /// (complex conjugation) guarantee.
    fn substitute(&self, s: usize) -> Self {
        let data = order_data(self.order);
        let mut out = CycloInt::zero(self.order);
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let pw = &data.powers[(k * s) % self.order];
            for (i, &p) in pw.iter().enumerate() {
                out.coeffs[i] = cadd(out.coeffs[i], cmul(c, p));
            }
        }
        out
    }

    /// Complex conjugation, `ω -> ω^(r-1)`.
    pub fn conjugate(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        self.substitute(self.order - 1)
    }

    /// Re-expresses the value in the cyclotomic ring of a larger order;
    /// fails unless `self.order` divides `target`.
    pub fn embed(&self, target: usize) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.order) {
            return Err(Error::InvalidInput(format!(
                "cannot embed order {} into order {}",
                self.order, target
            )));
        }
        let stride = target / self.order;
        let data = order_data(target);
        let mut out = CycloInt::zero(target);
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let pw = &data.powers[(k * stride) % target];
            for (i, &p) in pw.iter().enumerate() {
                out.coeffs[i] = cadd(out.coeffs[i], cmul(c, p));
            }
        }
        Ok(out)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_int(&self) -> Option<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    /// Divides every coordinate by `k` if all are divisible.
    pub fn div_exact(&self, k: i64) -> Option<Self> {
        assert!(k != 0);
        if self.coeffs.iter().any(|&c| c % k != 0) {
            return None;
        }
        Some(CycloInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|&c| c / k).collect(),
        })
    }

    /// Numerical embedding into `C` with `ω -> exp(2πi/r)`.
    pub fn to_complex(&self) -> Complex64 {
        let r = self.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / r;
            acc += Complex64::new(theta.cos(), theta.sin()).scale(c as f64);
        }
        acc
    }
}

impl Add for &CycloInt {
    type Output = CycloInt;

    fn add(self, rhs: &CycloInt) -> CycloInt {
        assert_eq!(self.order, rhs.order, "mixed cyclotomic orders");
        CycloInt {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| cadd(a, b))
                .collect(),
        }
    }
}

impl Sub for &CycloInt {
    type Output = CycloInt;

    fn sub(self, rhs: &CycloInt) -> CycloInt {
        self + &(-rhs)
    }
}

impl Neg for &CycloInt {
    type Output = CycloInt;

    fn neg(self) -> CycloInt {
        self.scale(-1)
    }
}

impl Mul for &CycloInt {
    type Output = CycloInt;

    fn mul(self, rhs: &CycloInt) -> CycloInt {
        assert_eq!(self.order, rhs.order, "mixed cyclotomic orders");
        let mut prod = poly_mul(&self.coeffs, &rhs.coeffs);
        if prod.is_empty() {
            return CycloInt::zero(self.order);
        }
        let data = order_data(self.order);
        data.reduce(&mut prod);
        CycloInt {
            order: self.order,
            coeffs: prod,
        }
    }
}

impl fmt::Display for CycloInt {
    /// Renders as an integer combination of powers of `ω`, highest power
    /// first, e.g. `2ω^3 - ω + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "ω")?;
                    } else {
                        write!(f, "ω^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloInt(order {}: {})", self.order, self)
    }
}
