//! Polynomial and finite-field scalars for shift-structured codes.
//!
//! Three layers live here.  [`F2Poly`] is a binary polynomial packed into the
//! bits of a `u128` (degree at most 127), with division, gcd, and the
//! index-reversal substitution `x -> x^(n-1)` used when working modulo
//! `x^n - 1`.  [`Gf4Poly`] is a dense polynomial over GF(4) with the same
//! ring operations plus conjugation and the conjugate-reciprocal normal form
//! that shows up when dualizing shift-invariant codes.  [`F2Field`] is a
//! runtime-constructed binary extension field GF(2^s): the modulus is the
//! first irreducible polynomial of the requested degree in a fixed scan
//! order, so every run of the library agrees on the representation, and the
//! field can hand out elements of any multiplicative order dividing
//! `2^s - 1`.  [`CyclotomicCoset`] enumerates orbits of residues under a
//! fixed multiplier, which is how irreducible factors of `x^n - kappa` are
//! indexed before they are ever written down.
//!
//! String forms put the constant term first, matching the coordinate order
//! of code vectors: `"1w1"` is `1 + wx + x^2`.

use std::fmt;
use std::str::FromStr;

use crate::gf4::Gf4;
use crate::Error;

/// A polynomial over GF(2), bit `j` holding the coefficient of `x^j`.
///
/// Degrees up to 127 fit; products assert that they stay in range.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct F2Poly {
    bits: u128,
}

impl F2Poly {
    /// The zero polynomial.
    pub fn zero() -> F2Poly {
        F2Poly { bits: 0 }
    }

    /// The constant polynomial 1.
    pub fn one() -> F2Poly {
        F2Poly { bits: 1 }
    }

    /// The monomial `x^d`.
    pub fn monomial(d: usize) -> F2Poly {
        assert!(d < 128, "monomial degree {d} out of range");
        F2Poly { bits: 1 << d }
    }

    /// Builds a polynomial from raw coefficient bits.
    pub fn from_bits(bits: u128) -> F2Poly {
        F2Poly { bits }
    }

    /// The raw coefficient bits.
    pub fn bits(self) -> u128 {
        self.bits
    }

    /// `x^n - 1`, which over GF(2) is `x^n + 1`.
    pub fn x_n_minus_1(n: usize) -> F2Poly {
        assert!(n >= 1 && n < 128, "length {n} out of range");
        F2Poly { bits: (1 << n) | 1 }
    }

    /// True when every coefficient is zero.
    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// The degree, or `None` for the zero polynomial.
    pub fn degree(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(127 - self.bits.leading_zeros() as usize)
        }
    }

    /// The coefficient of `x^j`.
    pub fn coeff(self, j: usize) -> bool {
        j < 128 && (self.bits >> j) & 1 == 1
    }

    /// Sum (coefficientwise XOR).
    pub fn add(self, rhs: F2Poly) -> F2Poly {
        F2Poly {
            bits: self.bits ^ rhs.bits,
        }
    }

    /// Product; asserts the result degree stays below 128.
    pub fn mul(self, rhs: F2Poly) -> F2Poly {
        if self.bits == 0 || rhs.bits == 0 {
            return F2Poly::zero();
        }
        let da = self.degree().unwrap();
        let db = rhs.degree().unwrap();
        assert!(da + db < 128, "product degree {} out of range", da + db);
        let mut out = 0u128;
        for j in 0..=da {
            if (self.bits >> j) & 1 == 1 {
                out ^= rhs.bits << j;
            }
        }
        F2Poly { bits: out }
    }

    /// Quotient and remainder on division by a nonzero polynomial.
    pub fn divmod(self, d: F2Poly) -> (F2Poly, F2Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut rem = self.bits;
        let mut quo = 0u128;
        loop {
            let dr = match (F2Poly { bits: rem }).degree() {
                Some(v) if v >= dd => v,
                _ => break,
            };
            quo |= 1 << (dr - dd);
            rem ^= d.bits << (dr - dd);
        }
        (F2Poly { bits: quo }, F2Poly { bits: rem })
    }

    /// Remainder on division by a nonzero polynomial.
    pub fn rem(self, d: F2Poly) -> F2Poly {
        self.divmod(d).1
    }

    /// True when `self` divides `other` (zero divides only zero).
    pub fn divides(self, other: F2Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Greatest common divisor (zero for two zero arguments).
    pub fn gcd(self, other: F2Poly) -> F2Poly {
        let (mut a, mut b) = (self, other);
        while !b.is_zero() {
            let r = a.rem(b);
            a = b;
            b = r;
        }
        a
    }

    /// The substitution `x -> x^(n-1)` reduced modulo `x^n - 1`: coefficient
    /// `j` moves to position `n - j` (position 0 stays).  Requires the degree
    /// to be below `n`; applying it twice gives the polynomial back.
    pub fn reverse_mod(self, n: usize) -> F2Poly {
        assert!(n >= 1 && n < 128, "length {n} out of range");
        assert!(
            self.degree().map_or(true, |d| d < n),
            "degree must be below the modulus length"
        );
        let mut out = 0u128;
        for j in 0..n {
            if (self.bits >> j) & 1 == 1 {
                out |= 1 << (if j == 0 { 0 } else { n - j });
            }
        }
        F2Poly { bits: out }
    }

    /// True when the polynomial equals its own `x -> x^(n-1)` substitution.
    pub fn is_reverse_symmetric(self, n: usize) -> bool {
        self.reverse_mod(n) == self
    }

    /// Every product of a subset of `factors`, deduplicated and sorted by
    /// degree then by coefficient bits.  Handy for walking all divisors of a
    /// squarefree polynomial given its irreducible factors.
    pub fn subset_products(factors: &[F2Poly]) -> Vec<F2Poly> {
        let mut out = vec![F2Poly::one()];
        for &f in factors {
            let mut next = out.clone();
            for g in &out {
                next.push(g.mul(f));
            }
            out = next;
        }
        out.sort_by_key(|g| (g.degree().map_or(0, |d| d + 1), g.bits));
        out.dedup();
        out
    }
}

impl FromStr for F2Poly {
    type Err = Error;

    /// Parses `'0'`/`'1'` characters, constant term first.
    fn from_str(s: &str) -> Result<F2Poly, Error> {
        if s.is_empty() || s.len() > 128 {
            return Err(Error::Parse(format!(
                "binary polynomial string has bad length {}",
                s.len()
            )));
        }
        let mut bits = 0u128;
        for (j, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << j,
                _ => return Err(Error::BadChar(c)),
            }
        }
        Ok(F2Poly { bits })
    }
}

impl fmt::Display for F2Poly {
    /// Coefficients as `'0'`/`'1'`, constant term first; zero prints `"0"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            None => write!(f, "0"),
            Some(d) => {
                for j in 0..=d {
                    write!(f, "{}", if self.coeff(j) { '1' } else { '0' })?;
                }
                Ok(())
            }
        }
    }
}

/// A dense polynomial over GF(4), constant term first, trailing zeros
/// trimmed away so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gf4Poly {
    coeffs: Vec<Gf4>,
}

impl Gf4Poly {
    /// The zero polynomial.
    pub fn zero() -> Gf4Poly {
        Gf4Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Gf4Poly {
        Gf4Poly::constant(Gf4::One)
    }

    /// A constant polynomial.
    pub fn constant(c: Gf4) -> Gf4Poly {
        Gf4Poly::from_coeffs(vec![c])
    }

    /// The monomial `c x^d`.
    pub fn monomial(d: usize, c: Gf4) -> Gf4Poly {
        let mut coeffs = vec![Gf4::Zero; d + 1];
        coeffs[d] = c;
        Gf4Poly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients, constant term first.
    pub fn from_coeffs(mut coeffs: Vec<Gf4>) -> Gf4Poly {
        while coeffs.last() == Some(&Gf4::Zero) {
            coeffs.pop();
        }
        Gf4Poly { coeffs }
    }

    /// Lifts a binary polynomial coefficientwise.
    pub fn from_f2(p: F2Poly) -> Gf4Poly {
        let coeffs = match p.degree() {
            None => Vec::new(),
            Some(d) => (0..=d)
                .map(|j| if p.coeff(j) { Gf4::One } else { Gf4::Zero })
                .collect(),
        };
        Gf4Poly { coeffs }
    }

    /// `x^n - kappa`, which in characteristic 2 is `x^n + kappa`.
    pub fn x_n_minus_kappa(n: usize, kappa: Gf4) -> Gf4Poly {
        assert!(n >= 1, "length must be positive");
        assert!(kappa != Gf4::Zero, "the shift constant must be nonzero");
        let mut coeffs = vec![Gf4::Zero; n + 1];
        coeffs[0] = kappa;
        coeffs[n] = Gf4::One;
        Gf4Poly { coeffs }
    }

    /// The coefficients, constant term first, with no trailing zeros.
    pub fn coeffs(&self) -> &[Gf4] {
        &self.coeffs
    }

    /// The coefficient of `x^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> Gf4 {
        self.coeffs.get(j).copied().unwrap_or(Gf4::Zero)
    }

    /// True when every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<Gf4> {
        self.coeffs.last().copied()
    }

    /// Sum.
    pub fn add(&self, rhs: &Gf4Poly) -> Gf4Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect();
        Gf4Poly::from_coeffs(coeffs)
    }

    /// Product.
    pub fn mul(&self, rhs: &Gf4Poly) -> Gf4Poly {
        if self.is_zero() || rhs.is_zero() {
            return Gf4Poly::zero();
        }
        let mut coeffs = vec![Gf4::Zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == Gf4::Zero {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Gf4Poly::from_coeffs(coeffs)
    }

    /// Every coefficient multiplied by `c`.
    pub fn scale(&self, c: Gf4) -> Gf4Poly {
        Gf4Poly::from_coeffs(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Quotient and remainder on division by a nonzero polynomial.
    pub fn divmod(&self, d: &Gf4Poly) -> (Gf4Poly, Gf4Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.leading().unwrap().inverse().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![Gf4::Zero; self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let c = rem.leading().unwrap() * lead_inv;
            quo[dr - dd] = c;
            rem = rem.add(&d.mul(&Gf4Poly::monomial(dr - dd, c)));
        }
        (Gf4Poly::from_coeffs(quo), rem)
    }

    /// Remainder on division by a nonzero polynomial.
    pub fn rem(&self, d: &Gf4Poly) -> Gf4Poly {
        self.divmod(d).1
    }

    /// True when `self` divides `other` (zero divides only zero).
    pub fn divides(&self, other: &Gf4Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Conjugates every coefficient (swaps `w` and `W`).
    pub fn conj(&self) -> Gf4Poly {
        Gf4Poly {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }

    /// Scales the polynomial so its leading coefficient is 1.
    pub fn monic(&self) -> Gf4Poly {
        match self.leading() {
            None => Gf4Poly::zero(),
            Some(l) => self.scale(l.inverse().unwrap()),
        }
    }

    /// The monic polynomial whose roots are the inverted conjugates
    /// `1 / conj(root)` of this one's roots: conjugate, reverse the
    /// coefficients, and rescale to leading coefficient 1.  Requires a
    /// nonzero constant term so the degree is preserved; an involution on
    /// monic polynomials with nonzero constant term.
    pub fn conj_reciprocal_monic(&self) -> Gf4Poly {
        assert!(
            self.coeff(0) != Gf4::Zero,
            "conjugate reciprocal needs a nonzero constant term"
        );
        let mut coeffs: Vec<Gf4> = self.coeffs.iter().rev().map(|c| c.conj()).collect();
        let lead_inv = coeffs.last().unwrap().inverse().unwrap();
        for c in &mut coeffs {
            *c = *c * lead_inv;
        }
        Gf4Poly { coeffs }
    }

    /// Evaluates the polynomial at a point.
    pub fn eval(&self, x: Gf4) -> Gf4 {
        let mut acc = Gf4::Zero;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl FromStr for Gf4Poly {
    type Err = Error;

    /// Parses `0`/`1`/`w`/`W` characters, constant term first.
    fn from_str(s: &str) -> Result<Gf4Poly, Error> {
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial string".into()));
        }
        let mut coeffs = Vec::with_capacity(s.len());
        for c in s.chars() {
            coeffs.push(Gf4::from_char(c).ok_or(Error::BadChar(c))?);
        }
        Ok(Gf4Poly::from_coeffs(coeffs))
    }
}

impl fmt::Display for Gf4Poly {
    /// Coefficient characters, constant term first; zero prints `"0"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for &c in &self.coeffs {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The binary extension field GF(2^s), elements packed into `u64` bits.
///
/// The modulus is found at construction time: candidates `x^s + c` are
/// scanned in increasing order of the low coefficient bits `c` and the first
/// irreducible one wins, so the representation is reproducible without any
/// table of primitive polynomials.  Elements are polynomial residues; bit
/// `j` of an element is the coefficient of `x^j`.
#[derive(Clone, Debug)]
pub struct F2Field {
    s: u32,
    modulus: F2Poly,
}

impl F2Field {
    /// Constructs GF(2^s) for `1 <= s <= 60`.
    pub fn new(s: u32) -> F2Field {
        assert!((1..=60).contains(&s), "field exponent {s} out of range");
        let mut c = 1u128;
        loop {
            let candidate = F2Poly::from_bits((1u128 << s) | c);
            if is_irreducible(candidate) {
                return F2Field {
                    s,
                    modulus: candidate,
                };
            }
            c += 2;
            assert!(c < 1 << s, "no irreducible modulus found");
        }
    }

    /// The exponent s of the field size 2^s.
    pub fn exponent(&self) -> u32 {
        self.s
    }

    /// The irreducible modulus polynomial.
    pub fn modulus(&self) -> F2Poly {
        self.modulus
    }

    /// The order of the multiplicative group, `2^s - 1`.
    pub fn group_order(&self) -> u64 {
        ((1u128 << self.s) - 1) as u64
    }

    /// Field product.
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let mut acc = 0u128;
        let b = b as u128;
        for j in 0..self.s {
            if (a >> j) & 1 == 1 {
                acc ^= b << j;
            }
        }
        let m = self.modulus.bits();
        let mut deg = 127u32.saturating_sub(acc.leading_zeros());
        while acc != 0 && deg >= self.s {
            acc ^= m << (deg - self.s);
            deg = 127u32.saturating_sub(acc.leading_zeros());
        }
        acc as u64
    }

    /// Field power with a `u64` exponent.
    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// A deterministic element of exact multiplicative order `n`.
    /// Requires `n` to divide `2^s - 1`.
    pub fn root_of_unity(&self, n: u64) -> u64 {
        assert!(n >= 1 && self.group_order() % n == 0, "order {n} unavailable");
        let cofactor = self.group_order() / n;
        let primes = prime_factors(n);
        let mut z = 2u64;
        loop {
            assert!(z < 1 << self.s, "exhausted field without finding a root");
            let e = self.pow(z, cofactor);
            if e != 0 && primes.iter().all(|&p| self.pow(e, n / p) != 1) {
                return e;
            }
            z += 1;
        }
    }
}

/// True when a binary polynomial of degree at least 1 is irreducible,
/// by checking that `x^(2^s) = x` in the quotient ring while no proper
/// Frobenius step fixes a nontrivial factor.
fn is_irreducible(f: F2Poly) -> bool {
    let s = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if s == 1 {
        return true;
    }
    let x = F2Poly::monomial(1);
    let mut powers = Vec::with_capacity(s + 1);
    let mut t = x;
    powers.push(t);
    for _ in 0..s {
        t = t.mul(t).rem(f);
        powers.push(t);
    }
    if powers[s] != x {
        return false;
    }
    for p in prime_factors(s as u64) {
        let mid = powers[s / p as usize].add(x);
        if f.gcd(mid).degree() != Some(0) {
            return false;
        }
    }
    true
}

/// The distinct prime factors of `n`, by trial division.
fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The multiplicative order of `base` modulo `modulus` (which must be
/// coprime to the base).
pub(crate) fn multiplicative_order(base: u64, modulus: u64) -> u32 {
    assert!(modulus > 1, "order undefined modulo {modulus}");
    let mut t = base % modulus;
    let mut k = 1u32;
    while t != 1 {
        t = t * (base % modulus) % modulus;
        k += 1;
        assert!(
            u64::from(k) <= modulus,
            "base is not invertible modulo the length"
        );
    }
    k
}

/// The irreducible factors of `x^n - 1` over GF(2), sorted by degree then
/// by coefficient bits.  Requires odd `n`, which keeps the polynomial
/// squarefree so the factors are distinct; their product is checked to give
/// back `x^n - 1` exactly.
pub fn factor_x_n_minus_1(n: usize) -> Vec<F2Poly> {
    assert!(n >= 1 && n % 2 == 1, "length must be odd");
    if n == 1 {
        return vec![F2Poly::x_n_minus_1(1)];
    }
    let s = multiplicative_order(2, n as u64);
    let field = F2Field::new(s);
    let xi = field.root_of_unity(n as u64);
    let mut out: Vec<F2Poly> = cyclotomic_cosets(n, 2, 0..n)
        .iter()
        .map(|coset| {
            // Multiply out (x - xi^t) over the members; the result must
            // have base-field coefficients.
            let mut coeffs: Vec<u64> = vec![1];
            for &t in &coset.members {
                let root = field.pow(xi, t as u64);
                let mut next = vec![0u64; coeffs.len() + 1];
                for (i, &cf) in coeffs.iter().enumerate() {
                    next[i + 1] ^= cf;
                    next[i] ^= field.mul(cf, root);
                }
                coeffs = next;
            }
            let mut bits = 0u128;
            for (i, &cf) in coeffs.iter().enumerate() {
                assert!(cf <= 1, "factor coefficient escaped the base field");
                bits |= (cf as u128) << i;
            }
            F2Poly::from_bits(bits)
        })
        .collect();
    out.sort_by_key(|g| (g.degree().unwrap(), g.bits()));
    let product = out.iter().fold(F2Poly::one(), |acc, &g| acc.mul(g));
    assert_eq!(product, F2Poly::x_n_minus_1(n), "factorization must multiply back");
    out
}

/// An orbit of residues modulo `modulus` under repeated multiplication by a
/// fixed multiplier, stored with its smallest member as representative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicCoset {
    /// The modulus the residues live in.
    pub modulus: usize,
    /// The smallest member of the orbit.
    pub representative: usize,
    /// All members in increasing order.
    pub members: Vec<usize>,
}

/// Partitions a set of residues modulo `modulus` into multiplier orbits,
/// sorted by representative.  The residue set must be closed under the
/// multiplier or the orbit walk would escape it.
pub fn cyclotomic_cosets(
    modulus: usize,
    multiplier: usize,
    residues: impl IntoIterator<Item = usize>,
) -> Vec<CyclotomicCoset> {
    let mut seen = vec![false; modulus];
    let mut pool: Vec<usize> = residues.into_iter().collect();
    pool.sort_unstable();
    let in_pool = {
        let mut mask = vec![false; modulus];
        for &r in &pool {
            mask[r % modulus] = true;
        }
        mask
    };
    let mut out = Vec::new();
    for &start in &pool {
        let start = start % modulus;
        if seen[start] {
            continue;
        }
        let mut members = Vec::new();
        let mut t = start;
        loop {
            assert!(in_pool[t], "residue set is not closed under the multiplier");
            seen[t] = true;
            members.push(t);
            t = t * multiplier % modulus;
            if t == start {
                break;
            }
        }
        members.sort_unstable();
        out.push(CyclotomicCoset {
            modulus,
            representative: members[0],
            members,
        });
    }
    out.sort_by_key(|c| c.representative);
    out
}
