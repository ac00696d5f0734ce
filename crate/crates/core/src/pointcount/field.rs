//! Finite fields `F_q`, `q = p^m`, with elements encoded as integers in `0..q`.
//!
//! An element `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` (modulo the defining
//! polynomial) is stored as `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`; for `m = 1`
//! this is the usual residue. Multiplication in extensions goes through
//! discrete log tables built from a primitive element.

use crate::error::{Error, Result};

pub type Elem = u32;

/// Largest extension-field order for which log tables are built.
pub const MAX_EXTENSION_ORDER: u64 = 1 << 26;

const ADD_TABLE_LIMIT: u64 = 1024;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    /// Monic defining polynomial, coefficients low to high (length `m + 1`).
    modulus: Vec<u32>,
    generator: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
    add_table: Option<Vec<Elem>>,
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteField").field("p", &self.p).field("m", &self.m).field("modulus", &self.modulus).finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

/// Field of order `p^m`. For `m > 1` the defining polynomial is the
/// lexicographically smallest monic irreducible of degree `m`, comparing
/// coefficient sequences `(c_0, c_1, ..., c_{m-1})` from the constant term up.
pub fn field_make(p: u64, m: u32) -> Result<FiniteField> {
    if !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidDegree);
    }
    if m == 1 {
        return Ok(FiniteField::prime(p as u32));
    }
    let q = (p as u128).pow(m);
    if q > MAX_EXTENSION_ORDER as u128 {
        return Err(Error::Unsupported(format!("extension field of order {q} is too large for log tables")));
    }
    let modulus = smallest_irreducible(p, m);
    Ok(FiniteField::extension(p as u32, m, modulus))
}

impl FiniteField {
    fn prime(p: u32) -> Self {
        let mut field = FiniteField {
            p,
            m: 1,
            q: p,
            modulus: vec![0, 1],
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
        };
        field.generator = field.find_generator();
        field
    }

    fn extension(p: u32, m: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(m);
        let mut field =
            FiniteField { p, m, q, modulus, generator: 0, exp: Vec::new(), log: Vec::new(), add_table: None };
        field.generator = field.find_generator();
        let order = q as usize - 1;
        let mut exp = Vec::with_capacity(order);
        let mut log = vec![0u32; q as usize];
        let mut x: Elem = 1;
        for i in 0..order {
            exp.push(x);
            log[x as usize] = i as u32;
            x = field.poly_mul(x, field.generator);
        }
        debug_assert_eq!(x, 1);
        field.exp = exp;
        field.log = log;
        if (q as u64) <= ADD_TABLE_LIMIT {
            let mut table = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = field.digit_add(a, b);
                }
            }
            field.add_table = Some(table);
        }
        field
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// A primitive element (generator of the multiplicative group).
    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    pub fn element(&self, value: u64) -> Result<Elem> {
        if value >= self.q as u64 {
            return Err(Error::InvalidElement { value, order: self.q as u64 });
        }
        Ok(value as Elem)
    }

    /// Element from polynomial coefficients, constant term first.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.m as usize {
            return Err(Error::Usage(format!("{} coefficients given for a degree-{} extension", coeffs.len(), self.m)));
        }
        let mut value: u64 = 0;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(Error::InvalidElement { value: c as u64, order: self.p as u64 });
            }
            value = value * self.p as u64 + c as u64;
        }
        Ok(value as Elem)
    }

    pub fn coeffs(&self, mut a: Elem) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m as usize);
        for _ in 0..self.m {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    /// Image of the integer `n` under `Z -> F_q`.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p as i64) as Elem
    }

    fn digit_add(&self, mut a: Elem, mut b: Elem) -> Elem {
        let p = self.p;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += (a % p + b % p) % p * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.m == 1 {
            let s = a as u64 + b as u64;
            let p = self.p as u64;
            (if s >= p { s - p } else { s }) as Elem
        } else if let Some(table) = &self.add_table {
            table[(a * self.q + b) as usize]
        } else {
            self.digit_add(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.m == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            let p = self.p;
            let mut a = a;
            let mut out = 0;
            let mut place = 1;
            for _ in 0..self.m {
                out += (p - a % p) % p * place;
                a /= p;
                place *= p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.m == 1 {
            (a as u64 * b as u64 % self.p as u64) as Elem
        } else if a == 0 || b == 0 {
            0
        } else {
            let order = self.q - 1;
            let e = self.log[a as usize] + self.log[b as usize];
            self.exp[(if e >= order { e - order } else { e }) as usize]
        }
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.q as u64 - 2))
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut order = self.q as u64 - 1;
        for r in prime_factors(order) {
            while order.is_multiple_of(r) && self.pow(a, order / r) == 1 {
                order /= r;
            }
        }
        Some(order)
    }

    fn find_generator(&self) -> Elem {
        let order = self.q as u64 - 1;
        let factors = prime_factors(order);
        let power = |a: Elem, e: u64| -> Elem {
            let mut base = a;
            let mut acc = 1;
            let mut e = e;
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.slow_mul(acc, base);
                }
                base = self.slow_mul(base, base);
                e >>= 1;
            }
            acc
        };
        (1..self.q)
            .find(|&g| factors.iter().all(|&r| power(g, order / r) != 1))
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        if self.m == 1 {
            (a as u64 * b as u64 % self.p as u64) as Elem
        } else {
            self.poly_mul(a, b)
        }
    }

    /// Schoolbook product modulo the defining polynomial.
    fn poly_mul(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p as u64;
        let m = self.m as usize;
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for d in (m..prod.len()).rev() {
            let lead = prod[d];
            if lead != 0 {
                for (k, &f) in self.modulus[..m].iter().enumerate() {
                    let idx = d - m + k;
                    prod[idx] = (prod[idx] + (p - lead) * f as u64) % p;
                }
                prod[d] = 0;
            }
        }
        let digits: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        self.from_coeffs(&digits).expect("reduced coefficients")
    }
}

// Polynomials over F_p as coefficient vectors, constant term first, no
// trailing zeros.

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while r.len() > df {
        let d = r.len() - 1;
        let coef = r[d] * lead_inv % p;
        for (k, &c) in f.iter().enumerate() {
            let idx = d - df + k;
            r[idx] = (r[idx] + (p - coef) * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, f, p)
}

fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, f, p);
        }
        b = poly_mulmod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or: a degree-`m` polynomial is irreducible iff it shares no factor
/// with `x^(p^i) - x` for `1 <= i <= m/2`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let m = f.len() - 1;
    let x = vec![0u64, 1];
    let mut xp = x.clone();
    for _ in 0..m / 2 {
        xp = poly_powmod(&xp, p, &f, p);
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = poly_gcd(&f, &trim(diff), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn smallest_irreducible(p: u64, m: u32) -> Vec<u32> {
    let total = p.pow(m);
    for idx in 0..total {
        // c_0 is the most significant digit of idx
        let mut coeffs = vec![0u64; m as usize + 1];
        let mut rest = idx;
        for slot in coeffs[..m as usize].iter_mut().rev() {
            *slot = rest % p;
            rest /= p;
        }
        coeffs[m as usize] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs.into_iter().map(|c| c as u32).collect();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
