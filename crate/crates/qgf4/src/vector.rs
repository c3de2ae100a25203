//! Bit-sliced vectors over GF(4) and their binary symplectic images.
//!
//! A length-n vector u over GF(4) is stored as two n-bit rows `a` and `b`
//! with uᵢ = aᵢ·ω + bᵢ·ω̄ (see [`crate::gf4`] for the scalar encoding).
//! The map φ(a|b) = ωa + ω̄b identifies u with a binary vector
//! (a|b) ∈ F₂²ⁿ, and under this identification
//!
//! * the weight of u (number of nonzero coordinates) equals the symplectic
//!   weight of (a|b) (number of i with (aᵢ, bᵢ) ≠ (0,0)),
//! * the trace inner product u ∗ v = Σᵢ Tr(uᵢ·v̄ᵢ) equals the symplectic
//!   form a·b′ + a′·b of the images.
//!
//! Both facts reduce to one-word popcount/AND operations here, which is
//! what every enumeration loop in this crate runs on.

use std::fmt;
use std::str::FromStr;

use crate::gf4::Gf4;
use crate::Error;

/// Number of 64-bit words needed to hold `n` bits.
#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A vector in GF(4)ⁿ, bit-sliced into an ω-part `a` and an ω̄-part `b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gf4Vector {
    n: usize,
    a: Vec<u64>,
    b: Vec<u64>,
}

/// A binary vector (a|b) ∈ F₂²ⁿ carrying the symplectic form
/// ⟨(a|b), (a′|b′)⟩ = a·b′ + a′·b.
///
/// [`SymplecticVector::to_gf4`] and [`Gf4Vector::to_symplectic`] realize
/// the weight- and form-preserving correspondence φ from the
/// [module docs](self).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymplecticVector {
    n: usize,
    a: Vec<u64>,
    b: Vec<u64>,
}

impl Gf4Vector {
    /// The zero vector of length `n`.
    pub fn zero(n: usize) -> Gf4Vector {
        Gf4Vector {
            n,
            a: vec![0; words_for(n)],
            b: vec![0; words_for(n)],
        }
    }

    /// Builds a vector from raw bit rows; both slices must have exactly
    /// `words_for(n)` words and no bits set at positions ≥ n.
    pub(crate) fn from_raw(n: usize, a: Vec<u64>, b: Vec<u64>) -> Gf4Vector {
        debug_assert_eq!(a.len(), words_for(n));
        debug_assert_eq!(b.len(), words_for(n));
        if n % 64 != 0 && !a.is_empty() {
            let mask = (1u64 << (n % 64)) - 1;
            debug_assert_eq!(a[a.len() - 1] & !mask, 0);
            debug_assert_eq!(b[b.len() - 1] & !mask, 0);
        }
        Gf4Vector { n, a, b }
    }

    /// Builds a vector from its coordinates.
    pub fn from_coords(coords: &[Gf4]) -> Gf4Vector {
        let mut v = Gf4Vector::zero(coords.len());
        for (i, &c) in coords.iter().enumerate() {
            v.set(i, c);
        }
        v
    }

    /// The length n.
    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    /// Whether the length is zero.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The ω-part bit row.
    #[inline]
    pub(crate) fn a_words(&self) -> &[u64] {
        &self.a
    }

    /// The ω̄-part bit row.
    #[inline]
    pub(crate) fn b_words(&self) -> &[u64] {
        &self.b
    }

    /// Coordinate i.
    #[inline]
    pub fn get(&self, i: usize) -> Gf4 {
        debug_assert!(i < self.n);
        let a = self.a[i / 64] >> (i % 64) & 1;
        let b = self.b[i / 64] >> (i % 64) & 1;
        Gf4::from_bits((a | b << 1) as u8)
    }

    /// Sets coordinate i.
    #[inline]
    pub fn set(&mut self, i: usize, x: Gf4) {
        debug_assert!(i < self.n);
        let w = i / 64;
        let m = 1u64 << (i % 64);
        if x.a_part() {
            self.a[w] |= m;
        } else {
            self.a[w] &= !m;
        }
        if x.b_part() {
            self.b[w] |= m;
        } else {
            self.b[w] &= !m;
        }
    }

    /// Whether every coordinate is zero.
    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&w| w == 0) && self.b.iter().all(|&w| w == 0)
    }

    /// The number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(&x, &y)| (x | y).count_ones() as usize)
            .sum()
    }

    /// In-place coordinatewise sum (XOR of both bit rows).
    pub fn add_assign(&mut self, rhs: &Gf4Vector) {
        debug_assert_eq!(self.n, rhs.n);
        for (x, y) in self.a.iter_mut().zip(&rhs.a) {
            *x ^= y;
        }
        for (x, y) in self.b.iter_mut().zip(&rhs.b) {
            *x ^= y;
        }
    }

    /// Coordinatewise sum.
    pub fn plus(&self, rhs: &Gf4Vector) -> Gf4Vector {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    /// Scalar multiple s·u.
    ///
    /// In the (a, b) slicing: ω·u has parts (b, a⊕b), ω̄·u has parts
    /// (a⊕b, a), and 1·u is u itself — three word-level XOR/swap patterns.
    pub fn scale(&self, s: Gf4) -> Gf4Vector {
        let n = self.n;
        match s {
            Gf4::Zero => Gf4Vector::zero(n),
            Gf4::One => self.clone(),
            Gf4::Omega => {
                let a = self.b.clone();
                let b: Vec<u64> = self.a.iter().zip(&self.b).map(|(&x, &y)| x ^ y).collect();
                Gf4Vector { n, a, b }
            }
            Gf4::OmegaBar => {
                let a: Vec<u64> = self.a.iter().zip(&self.b).map(|(&x, &y)| x ^ y).collect();
                let b = self.a.clone();
                Gf4Vector { n, a, b }
            }
        }
    }

    /// Coordinatewise conjugation (swaps the two bit rows).
    pub fn conj(&self) -> Gf4Vector {
        Gf4Vector {
            n: self.n,
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// The trace inner product u ∗ v = Σᵢ Tr(uᵢ·v̄ᵢ) ∈ F₂.
    ///
    /// Expanding the scalar formula gives the symplectic expression
    /// parity(a ∧ b′) ⊕ parity(a′ ∧ b), evaluated wordwise.
    pub fn trace_inner(&self, rhs: &Gf4Vector) -> bool {
        debug_assert_eq!(self.n, rhs.n);
        let mut acc = 0u32;
        for i in 0..self.a.len() {
            acc ^= (self.a[i] & rhs.b[i]).count_ones() ^ (self.b[i] & rhs.a[i]).count_ones();
        }
        acc & 1 != 0
    }

    /// The hermitian inner product Σᵢ uᵢ·v̄ᵢ ∈ GF(4).
    ///
    /// Each basis coefficient of the sum is an XOR of coordinatewise
    /// products, so the whole sum reduces to three wordwise AND-parities.
    pub fn hermitian_inner(&self, rhs: &Gf4Vector) -> Gf4 {
        debug_assert_eq!(self.n, rhs.n);
        let (mut paa, mut pab, mut pba, mut pbb) = (0u32, 0u32, 0u32, 0u32);
        for i in 0..self.a.len() {
            paa ^= (self.a[i] & rhs.a[i]).count_ones();
            pab ^= (self.a[i] & rhs.b[i]).count_ones();
            pba ^= (self.b[i] & rhs.a[i]).count_ones();
            pbb ^= (self.b[i] & rhs.b[i]).count_ones();
        }
        // uᵢ·v̄ᵢ with uᵢ=(a₁,b₁), v̄ᵢ=(b₂,a₂) has parts
        // (a₁a₂ ⊕ b₁a₂ ⊕ b₁b₂... ) — worked out: a-part = b₁a₂ ⊕ a₁a₂ ⊕ b₁b₂,
        // b-part = a₁b₂ ⊕ a₁a₂ ⊕ b₁b₂.
        let a = (pba ^ paa ^ pbb) & 1;
        let b = (pab ^ paa ^ pbb) & 1;
        Gf4::from_bits((a | b << 1) as u8)
    }

    /// The support as a sorted list of coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.get(i) != Gf4::Zero).collect()
    }

    /// The symplectic image φ⁻¹(u) = (a|b).
    pub fn to_symplectic(&self) -> SymplecticVector {
        SymplecticVector {
            n: self.n,
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }

    /// Concatenation u‖v.
    pub fn concat(&self, rhs: &Gf4Vector) -> Gf4Vector {
        let mut out = Gf4Vector::zero(self.n + rhs.n);
        for i in 0..self.n {
            out.set(i, self.get(i));
        }
        for i in 0..rhs.n {
            out.set(self.n + i, rhs.get(i));
        }
        out
    }

    /// The vector with coordinate `at` removed.
    pub fn delete_coord(&self, at: usize) -> Gf4Vector {
        assert!(at < self.n);
        let mut out = Gf4Vector::zero(self.n - 1);
        for i in 0..self.n - 1 {
            out.set(i, self.get(if i < at { i } else { i + 1 }));
        }
        out
    }

    /// Applies a coordinate permutation: result[j] = self[perm[j]].
    pub fn permute(&self, perm: &[usize]) -> Gf4Vector {
        assert_eq!(perm.len(), self.n);
        let mut out = Gf4Vector::zero(self.n);
        for (j, &src) in perm.iter().enumerate() {
            out.set(j, self.get(src));
        }
        out
    }

    /// Compares coordinatewise in the packed-byte order 0 < ω < ω̄ < 1,
    /// first differing coordinate decides. Used wherever a deterministic
    /// "first" vector must be chosen.
    pub fn lex_cmp(&self, rhs: &Gf4Vector) -> std::cmp::Ordering {
        debug_assert_eq!(self.n, rhs.n);
        for i in 0..self.n {
            let o = self.get(i).bits().cmp(&rhs.get(i).bits());
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl SymplecticVector {
    /// The zero vector with n coordinate pairs.
    pub fn zero(n: usize) -> SymplecticVector {
        SymplecticVector {
            n,
            a: vec![0; words_for(n)],
            b: vec![0; words_for(n)],
        }
    }

    /// The number of coordinate pairs n (the binary length is 2n).
    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    /// Whether the length is zero.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The pair (aᵢ, bᵢ).
    #[inline]
    pub fn get(&self, i: usize) -> (bool, bool) {
        debug_assert!(i < self.n);
        (
            self.a[i / 64] >> (i % 64) & 1 != 0,
            self.b[i / 64] >> (i % 64) & 1 != 0,
        )
    }

    /// Sets the pair (aᵢ, bᵢ).
    pub fn set(&mut self, i: usize, a: bool, b: bool) {
        debug_assert!(i < self.n);
        let w = i / 64;
        let m = 1u64 << (i % 64);
        if a {
            self.a[w] |= m;
        } else {
            self.a[w] &= !m;
        }
        if b {
            self.b[w] |= m;
        } else {
            self.b[w] &= !m;
        }
    }

    /// The symplectic weight: the number of pairs with (aᵢ, bᵢ) ≠ (0, 0).
    pub fn weight(&self) -> usize {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(&x, &y)| (x | y).count_ones() as usize)
            .sum()
    }

    /// The symplectic form ⟨u, v⟩ = a·b′ + a′·b ∈ F₂.
    pub fn symplectic_inner(&self, rhs: &SymplecticVector) -> bool {
        debug_assert_eq!(self.n, rhs.n);
        let mut acc = 0u32;
        for i in 0..self.a.len() {
            acc ^= (self.a[i] & rhs.b[i]).count_ones() ^ (self.b[i] & rhs.a[i]).count_ones();
        }
        acc & 1 != 0
    }

    /// The GF(4) image φ(a|b) = ωa + ω̄b.
    pub fn to_gf4(&self) -> Gf4Vector {
        Gf4Vector {
            n: self.n,
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }
}

impl fmt::Display for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", self.get(i).to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Gf4Vector {
    type Err = Error;

    /// Parses a string over the alphabet `{0, 1, w, W}`.
    fn from_str(s: &str) -> Result<Gf4Vector, Error> {
        let mut coords = Vec::with_capacity(s.len());
        for c in s.chars() {
            coords.push(Gf4::from_char(c).ok_or(Error::BadChar(c))?);
        }
        Ok(Gf4Vector::from_coords(&coords))
    }
}
