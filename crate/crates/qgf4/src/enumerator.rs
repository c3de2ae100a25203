//! Weight enumerators and the exact dual-distribution transform.
//!
//! For an additive code C of size 2^r and length n, the weight
//! distribution A₀..Aₙ counts codewords by weight. The distribution of
//! the trace dual C^⊥ is the exact integer sequence
//!
//! ```text
//! A′ⱼ = 2^{-r} · [coefficient of x^{n-j} y^j in W(x + 3y, x − y)]
//! ```
//!
//! where W(x, y) = Σ Aⱼ x^{n-j} yⱼ. Equivalently, with binary Krawtchouk
//! kernels for alphabet size 4, A′ⱼ = 2^{-r} Σᵢ Aᵢ·Kⱼ(i), where
//! Kⱼ(x) = Σₛ (−1)ˢ 3^{j−s} C(x,s) C(n−x, j−s). Both forms are
//! implemented here (the second also feeds the linear-programming
//! bounds); all arithmetic is exact big-integer arithmetic with a
//! divisibility check standing in for 2^{-r}.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::Error;

/// The weight distribution A₀..Aₙ of a length-n code, as exact
/// nonnegative integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightEnumerator {
    counts: Vec<BigUint>,
}

impl WeightEnumerator {
    /// Builds an enumerator from exact counts (index = weight). The
    /// length n of the code is `counts.len() - 1`.
    pub fn new(counts: Vec<BigUint>) -> WeightEnumerator {
        assert!(!counts.is_empty());
        WeightEnumerator { counts }
    }

    /// Builds an enumerator from machine-word counts.
    pub fn from_u64(counts: &[u64]) -> WeightEnumerator {
        WeightEnumerator::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// The code length n.
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    /// The count Aⱼ (zero beyond n).
    pub fn coeff(&self, j: usize) -> &BigUint {
        static ZERO: BigUint = BigUint::ZERO;
        self.counts.get(j).unwrap_or(&ZERO)
    }

    /// All counts, index = weight.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.counts
    }

    /// The total number of codewords Σ Aⱼ.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// The least nonzero weight with Aⱼ > 0, i.e. the minimum distance of
    /// the code itself; `None` for the zero code.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&j| !self.counts[j].is_zero())
    }

    /// Whether every codeword has even weight.
    pub fn is_even(&self) -> bool {
        self.counts
            .iter()
            .enumerate()
            .all(|(j, c)| j % 2 == 0 || c.is_zero())
    }

    /// Renders the nonzero terms as `A_0=1 A_6=396 ...`.
    pub fn to_term_string(&self) -> String {
        let terms: Vec<String> = self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| format!("A_{j}={c}"))
            .collect();
        terms.join(" ")
    }
}

/// C(n, k) as an exact big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k.min(n - k) {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// The quaternary Krawtchouk polynomial value
/// Kⱼ(x) = Σₛ (−1)ˢ 3^{j−s} C(x, s) C(n−x, j−s).
pub fn krawtchouk(n: usize, j: usize, x: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for s in 0..=j {
        let term = BigInt::from(3u32).pow((j - s) as u32) * binomial(x, s) * binomial(n - x, j - s);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The exact dual weight distribution 2^{-r}·W(x+3y, x−y) of a
/// distribution W belonging to a code with 2^r words.
///
/// Computed by expanding the substituted polynomial with binomial
/// convolutions. Fails with [`Error::NonIntegralTransform`] if any
/// resulting coefficient is not divisible by 2^r or is negative — which
/// can only happen if `w` is not the distribution of a genuine size-2^r
/// code.
pub fn macwilliams(w: &WeightEnumerator, r: u32) -> Result<WeightEnumerator, Error> {
    let n = w.n();
    // acc[j] accumulates the coefficient of x^{n-j} y^j.
    let mut acc = vec![BigInt::zero(); n + 1];
    for i in 0..=n {
        if w.coeff(i).is_zero() {
            continue;
        }
        let a_i = BigInt::from(w.coeff(i).clone());
        // Expand (x+3y)^{n-i} (x−y)^i: the y^j coefficient is
        // Σ_{s} C(i, s)(−1)^s · C(n−i, j−s) 3^{j−s}, i.e. krawtchouk(n, j, i).
        for (j, slot) in acc.iter_mut().enumerate() {
            *slot += &a_i * krawtchouk(n, j, i);
        }
    }
    let denom = BigInt::one() << r;
    let mut counts = Vec::with_capacity(n + 1);
    for c in acc {
        if c.is_negative() || (&c % &denom) != BigInt::zero() {
            return Err(Error::NonIntegralTransform);
        }
        counts.push((c / &denom).to_biguint().expect("nonnegative"));
    }
    Ok(WeightEnumerator::new(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn we(counts: &[u64]) -> WeightEnumerator {
        WeightEnumerator::from_u64(counts)
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(12, 6), BigInt::from(924));
    }

    #[test]
    fn krawtchouk_top_row() {
        // K_j(0) = 3^j C(n, j): expanding (x+3y)^n directly.
        for n in 0..8 {
            for j in 0..=n {
                assert_eq!(
                    krawtchouk(n, j, 0),
                    BigInt::from(3u32).pow(j as u32) * binomial(n, j)
                );
            }
        }
    }

    #[test]
    fn krawtchouk_orthogonality() {
        // Σ_x K_i(x) K_j(x) C(n,x) 3^x = δ_ij 4^n C(n,i) 3^i — the standard
        // orthogonality relation, an independent consistency check.
        let n = 6;
        for i in 0..=n {
            for j in 0..=n {
                let mut acc = BigInt::zero();
                for x in 0..=n {
                    acc += krawtchouk(n, i, x)
                        * krawtchouk(n, j, x)
                        * binomial(n, x)
                        * BigInt::from(3u32).pow(x as u32);
                }
                let expect = if i == j {
                    BigInt::from(4u32).pow(n as u32)
                        * binomial(n, i)
                        * BigInt::from(3u32).pow(i as u32)
                } else {
                    BigInt::zero()
                };
                assert_eq!(acc, expect, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn zero_code_transforms_to_full_space() {
        // W = x^n (the zero code, r = 0) → (x+3y)^n, the distribution of
        // the full space: A_j = 3^j C(n, j).
        for n in 1..7usize {
            let mut counts = vec![0u64; n + 1];
            counts[0] = 1;
            let full = macwilliams(&we(&counts), 0).unwrap();
            for j in 0..=n {
                let expect = (BigInt::from(3u32).pow(j as u32) * binomial(n, j))
                    .to_biguint()
                    .unwrap();
                assert_eq!(*full.coeff(j), expect);
            }
        }
    }

    #[test]
    fn non_integral_input_rejected() {
        // "Distribution" A_0=1, A_1=1 at n=2 with r=2 is not a real code's
        // distribution; the transform must not silently round.
        assert!(matches!(
            macwilliams(&we(&[1, 1, 0]), 2),
            Err(Error::NonIntegralTransform)
        ));
    }

    #[test]
    fn min_nonzero_and_evenness() {
        let w = we(&[1, 0, 0, 0, 396, 0, 234]);
        assert_eq!(w.min_nonzero_weight(), Some(4));
        assert!(w.is_even());
        assert!(!we(&[1, 2, 1]).is_even());
        assert_eq!(we(&[1]).min_nonzero_weight(), None);
        assert_eq!(w.total(), BigUint::from(631u32));
    }
}
