//! Arithmetic in the four-element field GF(4) = {0, 1, ω, ω̄}.
//!
//! The two non-subfield elements satisfy ω² = ω + 1 = ω̄, ω³ = 1, and
//! ω·ω̄ = 1. Conjugation is the Frobenius map x̄ = x², which fixes 0 and 1
//! and swaps ω ↔ ω̄. The trace onto F₂ is Tr(x) = x + x̄, so
//! Tr(0) = Tr(1) = 0 and Tr(ω) = Tr(ω̄) = 1.
//!
//! # Representation
//!
//! Every element is written in the basis {ω, ω̄}: x = a·ω + b·ω̄ with
//! a, b ∈ F₂. The packed byte value is `a | b << 1`:
//!
//! | element | (a, b) | byte | char |
//! |---------|--------|------|------|
//! | 0       | (0, 0) | 0    | `0`  |
//! | ω       | (1, 0) | 1    | `w`  |
//! | ω̄       | (0, 1) | 2    | `W`  |
//! | 1       | (1, 1) | 3    | `1`  |
//!
//! In this basis addition is XOR, conjugation swaps the two bits, and the
//! trace is their XOR — which is what makes the basis convenient for the
//! bit-sliced vector arithmetic in [`crate::vector`].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of GF(4), packed as described in the [module docs](self).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
#[repr(u8)]
pub enum Gf4 {
    /// The additive identity.
    #[default]
    Zero = 0,
    /// ω, a primitive cube root of unity.
    Omega = 1,
    /// ω̄ = ω² = ω + 1, the conjugate of ω.
    OmegaBar = 2,
    /// The multiplicative identity.
    One = 3,
}

use Gf4::{Omega, OmegaBar, One, Zero};

/// All four elements in packed-byte order `0, ω, ω̄, 1`.
pub const ALL: [Gf4; 4] = [Zero, Omega, OmegaBar, One];

/// The three nonzero elements in packed-byte order `ω, ω̄, 1`.
pub const NONZERO: [Gf4; 3] = [Omega, OmegaBar, One];

/// Multiplication table indexed by packed byte values.
///
/// Derived from (a₁ω + b₁ω̄)(a₂ω + b₂ω̄) = a₁a₂ω̄ + (a₁b₂ + a₂b₁)·1 + b₁b₂ω,
/// using ω² = ω̄, ω̄² = ω, ωω̄ = 1, and 1 = ω + ω̄.
const MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
    [0, 1, 2, 3],
];

impl Gf4 {
    /// Reconstructs an element from its packed byte value (low bit `a`,
    /// high bit `b`). Only the two low bits are used.
    #[inline]
    pub fn from_bits(v: u8) -> Gf4 {
        match v & 3 {
            0 => Zero,
            1 => Omega,
            2 => OmegaBar,
            _ => One,
        }
    }

    /// Builds a·ω + b·ω̄ from the two basis coefficients.
    #[inline]
    pub fn from_parts(a: bool, b: bool) -> Gf4 {
        Gf4::from_bits(a as u8 | (b as u8) << 1)
    }

    /// The packed byte value `a | b << 1`.
    #[inline]
    pub fn bits(self) -> u8 {
        self as u8
    }

    /// The coefficient of ω in the {ω, ω̄} basis.
    #[inline]
    pub fn a_part(self) -> bool {
        self as u8 & 1 != 0
    }

    /// The coefficient of ω̄ in the {ω, ω̄} basis.
    #[inline]
    pub fn b_part(self) -> bool {
        self as u8 & 2 != 0
    }

    /// Conjugation x̄ = x²: fixes 0 and 1, swaps ω and ω̄.
    #[inline]
    pub fn conj(self) -> Gf4 {
        let v = self as u8;
        Gf4::from_bits((v & 1) << 1 | v >> 1)
    }

    /// The trace Tr(x) = x + x̄ onto F₂, reported as a boolean
    /// (`true` = 1). Nonzero exactly on {ω, ω̄}.
    #[inline]
    pub fn trace(self) -> bool {
        let v = self as u8;
        (v ^ v >> 1) & 1 != 0
    }

    /// The multiplicative inverse; `None` for 0.
    #[inline]
    pub fn inverse(self) -> Option<Gf4> {
        match self {
            Zero => None,
            Omega => Some(OmegaBar),
            OmegaBar => Some(Omega),
            One => Some(One),
        }
    }

    /// ωᵉ for e ≥ 0 (cyclic with period 3).
    #[inline]
    pub fn omega_pow(e: u32) -> Gf4 {
        [One, Omega, OmegaBar][(e % 3) as usize]
    }

    /// The exponent e ∈ {0, 1, 2} with x = ωᵉ; `None` for 0.
    #[inline]
    pub fn log_omega(self) -> Option<u32> {
        match self {
            Zero => None,
            One => Some(0),
            Omega => Some(1),
            OmegaBar => Some(2),
        }
    }

    /// Parses one of the four text characters `0`, `1`, `w` (= ω),
    /// `W` (= ω̄).
    pub fn from_char(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Zero),
            '1' => Some(One),
            'w' => Some(Omega),
            'W' => Some(OmegaBar),
            _ => None,
        }
    }

    /// The text character for this element (inverse of [`Gf4::from_char`]).
    pub fn to_char(self) -> char {
        match self {
            Zero => '0',
            One => '1',
            Omega => 'w',
            OmegaBar => 'W',
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4::from_bits(self as u8 ^ rhs as u8)
    }
}

impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        *self = *self + rhs;
    }
}

// In characteristic 2 subtraction coincides with addition; both operators
// are provided so polynomial code can be written in the usual notation.
impl Sub for Gf4 {
    type Output = Gf4;
    #[inline]
    fn sub(self, rhs: Gf4) -> Gf4 {
        self + rhs
    }
}

impl SubAssign for Gf4 {
    #[inline]
    fn sub_assign(&mut self, rhs: Gf4) {
        *self += rhs;
    }
}

impl Neg for Gf4 {
    type Output = Gf4;
    #[inline]
    fn neg(self) -> Gf4 {
        self
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4::from_bits(MUL[self as usize][rhs as usize])
    }
}

impl MulAssign for Gf4 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent multiplication oracle: GF(4) as F₂[x]/(x² + x + 1) with
    /// ω ↦ x. The element a·ω + b·ω̄ = a·x + b·(x+1) has polynomial
    /// coefficients (c₀, c₁) = (b, a⊕b).
    fn mul_oracle(u: Gf4, v: Gf4) -> Gf4 {
        fn to_poly(x: Gf4) -> (bool, bool) {
            (x.b_part(), x.a_part() ^ x.b_part())
        }
        fn from_poly(c0: bool, c1: bool) -> Gf4 {
            // c0·1 + c1·x = c0(ω+ω̄) + c1ω, so a = c0⊕c1, b = c0.
            Gf4::from_parts(c0 ^ c1, c0)
        }
        let (u0, u1) = to_poly(u);
        let (v0, v1) = to_poly(v);
        // (u0 + u1 x)(v0 + v1 x) = u0v0 + (u0v1 + u1v0) x + u1v1 x², and
        // x² reduces to x + 1.
        let d0 = (u0 & v0) ^ (u1 & v1);
        let d1 = (u0 & v1) ^ (u1 & v0) ^ (u1 & v1);
        from_poly(d0, d1)
    }

    #[test]
    fn multiplication_matches_polynomial_oracle() {
        for &u in &ALL {
            for &v in &ALL {
                assert_eq!(u * v, mul_oracle(u, v), "{u} * {v}");
            }
        }
    }

    #[test]
    fn field_axioms_hold() {
        for &u in &ALL {
            assert_eq!(u + Zero, u);
            assert_eq!(u * One, u);
            assert_eq!(u + u, Zero);
            for &v in &ALL {
                assert_eq!(u + v, v + u);
                assert_eq!(u * v, v * u);
                for &w in &ALL {
                    assert_eq!((u + v) * w, u * w + v * w);
                    assert_eq!((u * v) * w, u * (v * w));
                }
            }
        }
        for &u in &NONZERO {
            assert_eq!(u * u.inverse().unwrap(), One);
        }
    }

    #[test]
    fn omega_relations() {
        assert_eq!(Omega * Omega, OmegaBar);
        assert_eq!(Omega + One, OmegaBar);
        assert_eq!(Omega * OmegaBar, One);
        assert_eq!(Omega * Omega * Omega, One);
        assert_eq!(OmegaBar * OmegaBar, Omega);
    }

    #[test]
    fn conjugation_is_squaring() {
        for &u in &ALL {
            assert_eq!(u.conj(), u * u);
            assert_eq!(u.conj().conj(), u);
        }
        assert_eq!(Omega.conj(), OmegaBar);
        assert_eq!(One.conj(), One);
    }

    #[test]
    fn trace_values() {
        assert!(!Zero.trace());
        assert!(!One.trace());
        assert!(Omega.trace());
        assert!(OmegaBar.trace());
        // Tr(x) = x + x̄ lands in {0, 1} and is F₂-linear.
        for &u in &ALL {
            for &v in &ALL {
                assert_eq!((u + v).trace(), u.trace() ^ v.trace());
            }
        }
    }

    #[test]
    fn char_round_trip() {
        for &u in &ALL {
            assert_eq!(Gf4::from_char(u.to_char()), Some(u));
        }
        assert_eq!(Gf4::from_char('x'), None);
    }

    #[test]
    fn omega_powers() {
        assert_eq!(Gf4::omega_pow(0), One);
        assert_eq!(Gf4::omega_pow(1), Omega);
        assert_eq!(Gf4::omega_pow(2), OmegaBar);
        assert_eq!(Gf4::omega_pow(3), One);
        for e in 0..9 {
            assert_eq!(Gf4::omega_pow(e).log_omega(), Some(e % 3));
        }
    }
}
