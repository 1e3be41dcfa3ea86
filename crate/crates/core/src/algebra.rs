//! Scalar substrate: prime-power fields, finite abelian groups with a canonical
//! element indexing, and complex roots of unity.
//!
//! Group and field elements are plain `usize` indices in `0..order`. The
//! identity (or zero) is always index 0, and for fields index 1 is the
//! multiplicative identity.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex scalar used by every matrix and state in the crate.
pub type ComplexScalar = Complex64;

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Smallest prime dividing `n`, or `None` for `n < 2`.
pub fn smallest_prime_factor(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return Some(k);
        }
        k += 1;
    }
    Some(n)
}

/// Decomposes `q = p^n`, returning `(p, n)`.
pub fn prime_power(q: usize) -> Option<(usize, u32)> {
    let p = smallest_prime_factor(q)?;
    let mut rest = q;
    let mut n = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

/// Finite field GF(p^n).
///
/// Elements are enumerated by their coefficient vectors over GF(p): element
/// `e` is the polynomial whose coefficient of `x^k` is the k-th base-p digit
/// of `e`. The modulus is the monic irreducible of degree `n` whose lower
/// coefficients, read as a base-p integer, are smallest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: usize,
    n: u32,
    q: usize,
    modulus: Vec<usize>,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, n) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let modulus = smallest_irreducible(p, n as usize);

        let digits: Vec<Vec<usize>> = (0..q).map(|e| to_digits(e, p, n as usize)).collect();
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<usize> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = from_digits(&sum, p);
                mul[a * q + b] = from_digits(&poly_mul_mod(&digits[a], &digits[b], &modulus, p), p);
            }
        }
        let neg = (0..q)
            .map(|a| {
                (0..q)
                    .find(|&b| add[a * q + b] == 0)
                    .expect("additive inverse")
            })
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q)
                        .find(|&b| mul[a * q + b] == 1)
                        .expect("nonzero elements are invertible")
                }
            })
            .collect();

        Ok(Self {
            p,
            n,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Coefficients of the modulus polynomial, constant term first.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a])
    }

    /// Coefficient vector of element `a`, constant term first.
    pub fn coefficients(&self, a: usize) -> Vec<usize> {
        to_digits(a, self.p, self.n as usize)
    }
}

fn to_digits(mut e: usize, p: usize, n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(e % p);
        e /= p;
    }
    out
}

fn from_digits(digits: &[usize], p: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Product of two reduced polynomials modulo a monic `modulus` of degree n.
fn poly_mul_mod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let n = modulus.len() - 1;
    let mut prod = vec![0; 2 * n.max(1)];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (n..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        // subtract c * x^(deg-n) * modulus
        for (k, &m) in modulus.iter().enumerate() {
            let idx = deg - n + k;
            prod[idx] = (prod[idx] + p * p - c * m % p) % p;
        }
    }
    prod.truncate(n);
    prod
}

fn poly_rem(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    // b monic
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if c != 0 {
            for (k, &m) in b.iter().enumerate() {
                r[shift + k] = (r[shift + k] + p * p - c * m % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(poly: &[usize], p: usize) -> bool {
    let n = poly.len() - 1;
    for k in 1..=n / 2 {
        for low in 0..p.pow(k as u32) {
            let mut divisor = to_digits(low, p, k);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: usize, n: usize) -> Vec<usize> {
    if n == 1 {
        return vec![0, 1];
    }
    (0..p.pow(n as u32))
        .map(|low| {
            let mut poly = to_digits(low, p, n);
            poly.push(1);
            poly
        })
        .find(|poly| is_irreducible(poly, p))
        .expect("an irreducible polynomial of every degree exists")
}

/// Serializable description of a finite abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Cyclic { d: usize },
    Product { factors: Vec<usize> },
    Field { q: usize },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic { d } => write!(f, "Z{d}"),
            GroupSpec::Product { factors } => {
                let names: Vec<String> = factors.iter().map(|d| format!("Z{d}")).collect();
                write!(f, "{}", names.join("×"))
            }
            GroupSpec::Field { q } => write!(f, "GF({q})+"),
        }
    }
}

/// A finite abelian group realized as a product of cyclic factors.
///
/// Elements are canonical indices under the mixed-radix encoding with the
/// first factor most significant, so in Z2×Z6 the pair (i, j) has index 6i + j.
/// The additive group of GF(p^n) uses n factors of p, which agrees with the
/// field's own element enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    spec: GroupSpec,
    radices: Vec<usize>,
    order: usize,
}

impl FiniteGroup {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        let radices = match &spec {
            GroupSpec::Cyclic { d } => vec![*d],
            GroupSpec::Product { factors } => {
                if factors.is_empty() {
                    return Err(Error::InvalidParameter(
                        "product group needs at least one factor".into(),
                    ));
                }
                factors.clone()
            }
            GroupSpec::Field { q } => {
                let (p, n) = prime_power(*q).ok_or(Error::NotPrimePower(*q))?;
                vec![p; n as usize]
            }
        };
        if let Some(&bad) = radices.iter().find(|&&r| r == 0) {
            return Err(Error::InvalidOrder(bad));
        }
        let order = radices.iter().product();
        Ok(Self {
            spec,
            radices,
            order,
        })
    }

    pub fn cyclic(d: usize) -> Result<Self> {
        Self::new(GroupSpec::Cyclic { d })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Components of an element, first factor first.
    pub fn components(&self, mut a: usize) -> Vec<usize> {
        let mut out = vec![0; self.radices.len()];
        for (slot, &r) in out.iter_mut().zip(&self.radices).rev() {
            *slot = a % r;
            a /= r;
        }
        out
    }

    pub fn index_of(&self, components: &[usize]) -> Result<usize> {
        if components.len() != self.radices.len() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} components, got {}",
                self.radices.len(),
                components.len()
            )));
        }
        let mut idx = 0;
        for (&c, &r) in components.iter().zip(&self.radices) {
            if c >= r {
                return Err(Error::ElementOutOfRange {
                    element: c,
                    order: r,
                });
            }
            idx = idx * r + c;
        }
        Ok(idx)
    }

    /// Group operation.
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, r| (x + y) % r)
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.combine(a, 0, |x, _, r| (r - x) % r)
    }

    /// `a ⊙ b⁻¹`.
    pub fn diff(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, r| (x + r - y) % r)
    }

    fn combine(
        &self,
        mut a: usize,
        mut b: usize,
        f: impl Fn(usize, usize, usize) -> usize,
    ) -> usize {
        if self.radices.len() == 1 {
            return f(a, b, self.order);
        }
        let mut out = 0;
        let mut scale = 1;
        for &r in self.radices.iter().rev() {
            out += f(a % r, b % r, r) * scale;
            scale *= r;
            a /= r;
            b /= r;
        }
        out
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.order
    }

    /// Human-readable element label: the index for cyclic groups, the
    /// concatenated components otherwise (e.g. `13` for (1,3) in Z2×Z6).
    pub fn label(&self, a: usize) -> String {
        match self.spec {
            GroupSpec::Cyclic { .. } => a.to_string(),
            _ => self
                .components(a)
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(""),
        }
    }
}

/// Table of the n-th roots of unity, `table[k] = e^{2πik/n}`.
#[derive(Debug, Clone)]
pub struct RootTable {
    roots: Vec<Complex64>,
}

impl RootTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        Ok(Self {
            roots: (0..n).map(|k| exact_root(n, k)).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.roots.len()
    }

    /// `ω_n^k` with `k` reduced modulo `n`.
    pub fn get(&self, k: i64) -> Complex64 {
        let n = self.roots.len() as i64;
        self.roots[k.rem_euclid(n) as usize]
    }
}

/// `e^{2πik/n}`, with `k` reduced modulo `n`.
pub fn root_of_unity(n: usize, k: i64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    Ok(exact_root(n, k.rem_euclid(n as i64) as usize))
}

fn exact_root(n: usize, k: usize) -> Complex64 {
    // quarter turns are exact
    if (4 * k).is_multiple_of(n) {
        return match (4 * k) / n {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, TAU * k as f64 / n as f64)
}
