//! Elementary number-theoretic primitives.
//!
//! Kronecker symbols, p-adic valuations, factorization by trial division,
//! Tonelli-Shanks square roots, and dense polynomial arithmetic modulo a
//! prime (Frobenius remainders and distinct-degree factorization patterns).
//! Inputs in this crate stay well below 10^7, so trial division and a
//! deterministic Miller-Rabin check are all that is needed.

use crate::{Error, Result};

/// A prime together with its exponent in a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin primality check, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    // This witness set is deterministic for n < 3.3 * 10^24.
    'witness: for a in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Kronecker symbol (n/m) for m >= 1, extended multiplicatively over the
/// prime factorization of m.
///
/// (n/1) = 1; (n/2) is 0 for even n and +-1 according to n mod 8; (n/p) for
/// odd prime p is the Legendre symbol.
pub fn kronecker(n: i64, m: u64) -> i32 {
    assert!(m >= 1, "kronecker denominator must be >= 1");
    let mut result = 1i32;
    let mut m = m;
    while m % 2 == 0 {
        result *= kronecker_two(n);
        m /= 2;
    }
    for PrimePower { prime, exponent } in factorize(m) {
        let s = legendre(n, prime);
        for _ in 0..exponent {
            result *= s;
        }
    }
    result
}

fn kronecker_two(n: i64) -> i32 {
    match n.rem_euclid(8) {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => 0,
    }
}

/// Legendre symbol (n/p) for an odd prime p, by Euler's criterion.
fn legendre(n: i64, p: u64) -> i32 {
    debug_assert!(p % 2 == 1 && is_prime(p));
    let r = n.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// The p-adic valuation of n: the largest e with p^e | n. Requires n >= 1.
pub fn valuation(n: u64, p: u64) -> u32 {
    assert!(n >= 1, "valuation of 0 is undefined");
    assert!(p >= 2);
    let mut n = n;
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

/// Factorization of n >= 1 by trial division, primes strictly increasing.
/// Returns an empty list for n = 1.
pub fn factorize(n: u64) -> Vec<PrimePower> {
    assert!(n >= 1, "cannot factorize 0");
    let mut out = Vec::new();
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push(PrimePower {
                prime: p,
                exponent: e,
            });
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(PrimePower {
            prime: n,
            exponent: 1,
        });
    }
    out
}

/// Square root of a modulo an odd prime p, by Tonelli-Shanks.
///
/// Returns the smaller of the two roots when a is a nonzero quadratic
/// residue, 0 when p | a, and None when a is a non-residue.
pub fn sqrt_mod(a: i64, p: u64) -> Option<u64> {
    assert!(p > 2 && is_prime(p), "sqrt_mod requires an odd prime");
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return Some(0);
    }
    if legendre(a as i64, p) != 1 {
        return None;
    }
    let r = if p % 4 == 3 {
        pow_mod(a, (p + 1) / 4, p)
    } else {
        tonelli_shanks(a, p)
    };
    Some(r.min(p - r))
}

fn tonelli_shanks(a: u64, p: u64) -> u64 {
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while legendre(z as i64, p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

/// A dense polynomial over the prime field F_p.
///
/// Coefficients are stored by ascending degree, reduced into [0, p), with
/// the leading coefficient nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    /// Build a polynomial from signed integer coefficients (ascending degree).
    pub fn new(p: u64, coeffs: &[i64]) -> Self {
        assert!(is_prime(p), "modulus must be prime");
        let coeffs = coeffs
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect();
        let mut poly = ModPoly { modulus: p, coeffs };
        poly.trim();
        poly
    }

    pub fn zero(p: u64) -> Self {
        ModPoly {
            modulus: p,
            coeffs: Vec::new(),
        }
    }

    /// The monomial z.
    pub fn z(p: u64) -> Self {
        ModPoly::new(p, &[0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Multiply by a scalar.
    pub fn scale(&self, k: u64) -> Self {
        let p = self.modulus;
        let mut out = ModPoly {
            modulus: p,
            coeffs: self.coeffs.iter().map(|&c| mul_mod(c, k % p, p)).collect(),
        };
        out.trim();
        out
    }

    pub fn sub(&self, rhs: &ModPoly) -> Self {
        assert_eq!(self.modulus, rhs.modulus);
        let p = self.modulus;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![0u64; n];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *c = (a + p - b) % p;
        }
        let mut out = ModPoly { modulus: p, coeffs };
        out.trim();
        out
    }

    pub fn mul(&self, rhs: &ModPoly) -> Self {
        assert_eq!(self.modulus, rhs.modulus);
        let p = self.modulus;
        if self.is_zero() || rhs.is_zero() {
            return ModPoly::zero(p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        let mut out = ModPoly { modulus: p, coeffs };
        out.trim();
        out
    }

    /// Remainder of self modulo a monic divisor.
    pub fn rem(&self, divisor: &ModPoly) -> Self {
        assert_eq!(self.modulus, divisor.modulus);
        assert!(divisor.is_monic(), "rem requires a monic divisor");
        let p = self.modulus;
        let d = divisor.degree().unwrap();
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() > d {
            let lead = *coeffs.last().unwrap();
            let shift = coeffs.len() - 1 - d;
            if lead != 0 {
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    let t = mul_mod(lead, dc, p);
                    coeffs[shift + i] = (coeffs[shift + i] + p - t) % p;
                }
            }
            coeffs.pop();
        }
        let mut out = ModPoly { modulus: p, coeffs };
        out.trim();
        out
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let p = self.modulus;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
            .collect();
        let mut out = ModPoly { modulus: p, coeffs };
        out.trim();
        out
    }

    /// Monic gcd.
    pub fn gcd(&self, rhs: &ModPoly) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let lead = *b.coeffs.last().unwrap();
            let monic_b = b.scale(pow_mod(lead, self.modulus - 2, self.modulus));
            let r = a.rem(&monic_b);
            a = monic_b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = *a.coeffs.last().unwrap();
        a.scale(pow_mod(lead, self.modulus - 2, self.modulus))
    }

    /// Exact quotient by a monic divisor that divides self.
    fn div_exact(&self, divisor: &ModPoly) -> Self {
        let p = self.modulus;
        let d = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - d;
            quot[shift] = lead;
            if lead != 0 {
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    let t = mul_mod(lead, dc, p);
                    rem[shift + i] = (rem[shift + i] + p - t) % p;
                }
            }
            rem.pop();
        }
        debug_assert!(rem.iter().all(|&c| c == 0), "division was not exact");
        let mut out = ModPoly {
            modulus: p,
            coeffs: quot,
        };
        out.trim();
        out
    }
}

/// rem(z^p, w(z)) modulo p, by square-and-multiply with remainder reduction
/// at every step. Requires w monic of degree >= 1.
pub fn frobenius_rem(w: &ModPoly) -> Result<ModPoly> {
    if !w.is_monic() || w.degree() == Some(0) || w.is_zero() {
        return Err(Error::NotMonic);
    }
    Ok(pow_z_rem(w, w.modulus()))
}

/// rem(z^e, w(z)) mod p for monic w.
fn pow_z_rem(w: &ModPoly, e: u64) -> ModPoly {
    let p = w.modulus();
    let z = ModPoly::z(p).rem(w);
    let mut acc = ModPoly::new(p, &[1]);
    let mut base = z;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base).rem(w);
        }
        base = base.mul(&base).rem(w);
        e >>= 1;
    }
    acc
}

/// Multiset of degrees of the irreducible factors of a squarefree monic w
/// over F_p, by distinct-degree factorization. The number of factors of
/// degree k is deg(g_k)/k where g_k = gcd(z^{p^k} - z, remaining cofactor),
/// so no equal-degree splitting is needed.
///
/// Returns the degrees sorted ascending. Errors if w is not squarefree.
pub fn factor_degree_pattern(w: &ModPoly) -> Result<Vec<usize>> {
    if !w.is_monic() || w.is_zero() || w.degree() == Some(0) {
        return Err(Error::NotMonic);
    }
    let p = w.modulus();
    if w.gcd(&w.derivative()).degree() != Some(0) {
        return Err(Error::NotSquarefree { p });
    }
    let mut cofactor = w.clone();
    let mut degrees = Vec::new();
    // h = z^{p^k} mod cofactor, advanced by one Frobenius power per round.
    let mut h = ModPoly::z(p).rem(&cofactor);
    let mut k = 0usize;
    while let Some(d) = cofactor.degree() {
        if d == 0 {
            break;
        }
        k += 1;
        if 2 * k > d {
            // Whatever remains is a single irreducible factor.
            degrees.push(d);
            break;
        }
        h = poly_pow_rem(&h, p, &cofactor);
        let g = h.sub(&ModPoly::z(p).rem(&cofactor)).gcd(&cofactor);
        if let Some(gd) = g.degree() {
            if gd > 0 {
                debug_assert_eq!(gd % k, 0);
                for _ in 0..gd / k {
                    degrees.push(k);
                }
                cofactor = cofactor.div_exact(&g);
                h = h.rem(&cofactor);
            }
        }
    }
    degrees.sort_unstable();
    debug_assert_eq!(degrees.iter().sum::<usize>(), w.degree().unwrap());
    Ok(degrees)
}

/// poly^e mod w for monic w.
fn poly_pow_rem(poly: &ModPoly, e: u64, w: &ModPoly) -> ModPoly {
    let p = w.modulus();
    let mut acc = ModPoly::new(p, &[1]).rem(w);
    let mut base = poly.rem(w);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base).rem(w);
        }
        base = base.mul(&base).rem(w);
        e >>= 1;
    }
    acc
}
