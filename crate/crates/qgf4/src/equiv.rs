//! Equivalence of codes under the monomial group of order 6ⁿ·n!.
//!
//! The group acting on GF(4)ⁿ is generated by coordinate permutations
//! together with, independently in each coordinate, the six permutations
//! of the nonzero field elements (generated by multiplication by ω and
//! conjugation). It preserves weights and trace inner products, so
//! equivalent codes share all weight and duality data. Two codes are
//! equivalent when some group element maps one onto the other; the
//! stabilizer of a code is its automorphism group, and the orbit size is
//! 6ⁿ·n!/|Aut|.
//!
//! Everything here is exhaustive search, practical up to length 6
//! (6⁶·6! ≈ 3.4·10⁷ elements); the default guard refuses longer inputs.

use num_bigint::BigUint;
use rand::Rng;

use crate::code::{invariant_key, AdditiveCode};
use crate::gf4::Gf4;
use crate::vector::Gf4Vector;
use crate::{Budget, Error};

/// The six local actions on GF(4), indexed s + 3c for x ↦ ωˢ·(x or x̄):
///
/// | index | action      |
/// |-------|-------------|
/// | 0     | identity    |
/// | 1     | x ↦ ωx      |
/// | 2     | x ↦ ω̄x      |
/// | 3     | x ↦ x̄      |
/// | 4     | x ↦ ωx̄     |
/// | 5     | x ↦ ω̄x̄    |
pub const LOCAL_ACTIONS: usize = 6;

/// Applies local action `action` (see [`LOCAL_ACTIONS`]) to a scalar.
#[inline]
pub fn local_apply(action: u8, x: Gf4) -> Gf4 {
    let y = if action >= 3 { x.conj() } else { x };
    y * Gf4::omega_pow((action % 3) as u32)
}

/// One element of the monomial group: new coordinate j receives old
/// coordinate `perm[j]` transformed by `locals[j]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    /// Source coordinate for each target position.
    pub perm: Vec<usize>,
    /// Local action index (0..6) applied at each target position.
    pub locals: Vec<u8>,
}

impl GroupElement {
    /// The identity element at length n.
    pub fn identity(n: usize) -> GroupElement {
        GroupElement {
            perm: (0..n).collect(),
            locals: vec![0; n],
        }
    }

    /// A uniformly random element at length n.
    pub fn random(n: usize, rng: &mut impl Rng) -> GroupElement {
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher–Yates shuffle.
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let locals = (0..n).map(|_| rng.gen_range(0..6) as u8).collect();
        GroupElement { perm, locals }
    }

    /// The image of a vector.
    pub fn apply_vector(&self, v: &Gf4Vector) -> Gf4Vector {
        let n = self.perm.len();
        assert_eq!(v.len(), n);
        let mut out = Gf4Vector::zero(n);
        for j in 0..n {
            out.set(j, local_apply(self.locals[j], v.get(self.perm[j])));
        }
        out
    }

    /// The image of a code.
    pub fn apply_code(&self, c: &AdditiveCode) -> AdditiveCode {
        AdditiveCode::from_generators(
            c.n(),
            c.generators().iter().map(|g| self.apply_vector(g)),
        )
    }
}

/// The group order 6ⁿ·n!.
pub fn group_order(n: usize) -> BigUint {
    let mut out = BigUint::from(1u32);
    for i in 1..=n {
        out *= 6u32 * i as u32;
    }
    out
}

/// All permutations of 0..n in a deterministic order.
fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

/// Packed canonical form used in the scan loops: the RREF of the
/// transformed basis over interleaved bits, one u32 per row (fits
/// 2n ≤ 24 bits).
fn canon_u32(rows: &mut Vec<u32>) {
    let mut out_idx = 0;
    for col in 0..32 {
        let bit = 1u32 << col;
        let Some(p) = (out_idx..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(out_idx, p);
        let prow = rows[out_idx];
        for (i, r) in rows.iter_mut().enumerate() {
            if i != out_idx && *r & bit != 0 {
                *r ^= prow;
            }
        }
        out_idx += 1;
        if out_idx == rows.len() {
            break;
        }
    }
    rows.truncate(out_idx);
}

/// Generator coordinates as small arrays for the scan loops.
fn coords_of(c: &AdditiveCode) -> Vec<Vec<u8>> {
    c.generators()
        .iter()
        .map(|g| (0..g.len()).map(|i| g.get(i).bits()).collect())
        .collect()
}

/// Local action lookup table: `LUT[action][packed value]`.
fn local_lut() -> [[u8; 4]; 6] {
    let mut lut = [[0u8; 4]; 6];
    for (a, row) in lut.iter_mut().enumerate() {
        for (v, slot) in row.iter_mut().enumerate() {
            *slot = local_apply(a as u8, Gf4::from_bits(v as u8)).bits();
        }
    }
    lut
}

/// Shared exhaustive scan: calls `visit` with the canonical u32 form of
/// g(C) for every group element g, stopping early if `visit` returns
/// `true`.
pub(crate) fn scan_group(c: &AdditiveCode, mut visit: impl FnMut(&[u32]) -> bool) {
    let n = c.n();
    let gens = coords_of(c);
    let lut = local_lut();
    let perms = all_perms(n);
    let mut locals = vec![0u8; n];
    let mut rows: Vec<u32> = Vec::with_capacity(gens.len());
    for perm in &perms {
        // Pre-permute the generators once per permutation.
        let permuted: Vec<Vec<u8>> = gens
            .iter()
            .map(|g| perm.iter().map(|&s| g[s]).collect())
            .collect();
        locals.iter_mut().for_each(|l| *l = 0);
        loop {
            rows.clear();
            for g in &permuted {
                let mut row = 0u32;
                for j in 0..n {
                    row |= (lut[locals[j] as usize][g[j] as usize] as u32) << (2 * j);
                }
                rows.push(row);
            }
            canon_u32(&mut rows);
            if visit(&rows) {
                return;
            }
            // Odometer over the 6ⁿ local combinations.
            let mut j = 0;
            loop {
                if j == n {
                    break;
                }
                locals[j] += 1;
                if locals[j] < 6 {
                    break;
                }
                locals[j] = 0;
                j += 1;
            }
            if j == n {
                break;
            }
        }
    }
}

/// The canonical u32 form of a code itself (identity element).
pub(crate) fn self_key(c: &AdditiveCode) -> Vec<u32> {
    let mut rows: Vec<u32> = coords_of(c)
        .iter()
        .map(|g| {
            let mut row = 0u32;
            for (j, &v) in g.iter().enumerate() {
                row |= (v as u32) << (2 * j);
            }
            row
        })
        .collect();
    canon_u32(&mut rows);
    rows
}

/// Whether some monomial group element maps `a` onto `b`, by exhaustive
/// scan. Lengths above `limit_n` (conventionally 6) are refused.
pub fn are_equivalent(
    a: &AdditiveCode,
    b: &AdditiveCode,
    limit_n: usize,
) -> Result<bool, Error> {
    if a.n() != b.n() || a.rank() != b.rank() {
        return Ok(false);
    }
    let n = a.n();
    if n > limit_n {
        return Err(Error::LengthTooLarge { n, limit: limit_n });
    }
    // The group preserves weights and column value-set ranks; unequal
    // invariants settle the question without a scan.
    let budget = Budget::log2(2 * limit_n as u32);
    if invariant_key(a, budget)? != invariant_key(b, budget)? {
        return Ok(false);
    }
    let target = self_key(b);
    let mut found = false;
    scan_group(a, |key| {
        if key == target {
            found = true;
        }
        found
    });
    Ok(found)
}

/// |Aut(C)|: the number of group elements fixing C, by exhaustive scan.
pub fn automorphism_order(c: &AdditiveCode, limit_n: usize) -> Result<u64, Error> {
    let n = c.n();
    if n > limit_n {
        return Err(Error::LengthTooLarge { n, limit: limit_n });
    }
    let target = self_key(c);
    let mut count = 0u64;
    scan_group(c, |key| {
        if key == target {
            count += 1;
        }
        false
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(gens: &[&str]) -> AdditiveCode {
        AdditiveCode::from_strs(gens)
    }

    #[test]
    fn local_actions_permute_nonzero_elements() {
        // The six actions fix 0 and induce the six permutations of
        // {1, ω, ω̄} — all distinct.
        let mut seen = std::collections::HashSet::new();
        for a in 0..6u8 {
            assert_eq!(local_apply(a, Gf4::Zero), Gf4::Zero);
            let img: Vec<Gf4> = crate::gf4::NONZERO
                .iter()
                .map(|&x| local_apply(a, x))
                .collect();
            assert_eq!(
                img.iter().collect::<std::collections::HashSet<_>>().len(),
                3
            );
            seen.insert(img);
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn group_order_values() {
        assert_eq!(group_order(1), BigUint::from(6u32));
        assert_eq!(group_order(2), BigUint::from(72u32));
        assert_eq!(group_order(3), BigUint::from(1296u32));
    }

    #[test]
    fn elements_preserve_weight_and_inner_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = 5;
            let g = GroupElement::random(n, &mut rng);
            let u = random_vector(n, &mut rng);
            let v = random_vector(n, &mut rng);
            assert_eq!(g.apply_vector(&u).weight(), u.weight());
            assert_eq!(
                g.apply_vector(&u).trace_inner(&g.apply_vector(&v)),
                u.trace_inner(&v)
            );
        }
    }

    fn random_vector(n: usize, rng: &mut impl Rng) -> Gf4Vector {
        let coords: Vec<Gf4> = (0..n)
            .map(|_| Gf4::from_bits(rng.gen_range(0..4)))
            .collect();
        Gf4Vector::from_coords(&coords)
    }

    #[test]
    fn code_equivalent_to_its_images() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let code = c(&["w10w", "01w1", "11ww"]);
        for _ in 0..3 {
            let g = GroupElement::random(4, &mut rng);
            let image = g.apply_code(&code);
            assert!(are_equivalent(&code, &image, 6).unwrap());
        }
        assert!(are_equivalent(&code, &code, 6).unwrap());
    }

    #[test]
    fn inequivalent_codes_detected() {
        // Different weight distributions: ⟨11⟩ vs ⟨10⟩.
        assert!(!are_equivalent(&c(&["11"]), &c(&["10"]), 6).unwrap());
        // Same distribution but different column structure: ⟨1w⟩ vs ⟨11⟩
        // are equivalent (scale column 1); ⟨1w, w1⟩ vs ⟨11, ww⟩?
        assert!(are_equivalent(&c(&["1w"]), &c(&["11"]), 6).unwrap());
    }

    #[test]
    fn length_guard() {
        let long = AdditiveCode::zero(7);
        assert!(matches!(
            are_equivalent(&long, &long, 6),
            Err(Error::LengthTooLarge { n: 7, limit: 6 })
        ));
    }

    #[test]
    fn automorphism_order_divides_group_order() {
        let code = c(&["w1", "1w"]);
        let aut = automorphism_order(&code, 6).unwrap();
        assert!(aut >= 1);
        assert_eq!(72 % aut, 0);
        // Aut order is invariant under conjugation by any element.
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = GroupElement::random(2, &mut rng);
        assert_eq!(automorphism_order(&g.apply_code(&code), 6).unwrap(), aut);
    }

    #[test]
    fn full_code_is_fixed_by_everything() {
        let full = AdditiveCode::full(3);
        assert_eq!(
            automorphism_order(&full, 6).unwrap(),
            1296 // 6³·3!
        );
    }
}
