//! Enumeration and classification of self-dual codes at small length.
//!
//! A self-dual code of length n is a maximal isotropic F₂-subspace of
//! the 2n-dimensional symplectic space carrying the trace inner
//! product; there are exactly `Π_{j=1..n} (2^j + 1)` of them.
//! [`enumerate_selfdual`] visits each exactly once by depth-first
//! extension of reduced echelon bases, so no duplicate filtering (and no
//! memory proportional to the count) is needed. [`classify_selfdual`]
//! partitions the enumeration into orbits of the monomial group of order
//! 6ⁿ·n!, reporting one canonical representative per equivalence class
//! with its automorphism order (by orbit–stabilizer) and whether it
//! splits as a direct sum across a coordinate partition. The exact mass
//! identity `Σ 1/|Aut| = Π(2^j+1) / (6^n n!)`, summed over the classes,
//! is a complete consistency check of counts, orbits, and stabilizers at
//! once.
//!
//! [`weight2_decomposition`] handles the codes generated entirely by
//! weight-2 words: each connected component of coordinates is, up to
//! coordinatewise relabelling of the nonzero scalars, either the full
//! length-2 repetition piece `{(t, σt)}` of rank 2 or the even-weight
//! binary span of rank m−1 on its m coordinates — the building blocks
//! [`crate::constructions::dn_plus`]\(2\) and
//! [`crate::constructions::dn_code`]\(m\).

use std::collections::HashSet;

use num_bigint::BigUint;
use num_rational::BigRational;

use crate::code::AdditiveCode;
use crate::equiv::{scan_group, self_key};
use crate::f2::BinMatrix;
use crate::gf4::Gf4;
use crate::vector::Gf4Vector;
use crate::{Budget, Error};

/// Longest length [`enumerate_selfdual`] accepts.
pub const ENUMERATION_LIMIT: usize = 6;
/// Longest length [`classify_selfdual`] accepts (full orbit scans).
pub const CLASSIFY_LIMIT: usize = 5;

const EVEN_BITS: u32 = 0x5555_5555;

/// Symplectic product of two packed words (coordinate j at bits 2j,
/// 2j+1).
fn symp(u: u32, v: u32) -> bool {
    let x = (u & (v >> 1)) ^ ((u >> 1) & v);
    (x & EVEN_BITS).count_ones() % 2 == 1
}

/// The bit-swapped companion: bit q of the result is bit q⊕1 of `r`,
/// so `⟨x, r⟩ = parity(x & swapped(r))`.
fn swapped(r: u32) -> u32 {
    ((r & EVEN_BITS) << 1) | ((r >> 1) & EVEN_BITS)
}

fn unpack_rows(n: usize, rows: &[u32]) -> Vec<Gf4Vector> {
    rows.iter()
        .map(|&row| {
            let mut v = Gf4Vector::zero(n);
            for j in 0..n {
                v.set(j, Gf4::from_bits(((row >> (2 * j)) & 3) as u8));
            }
            v
        })
        .collect()
}

/// The total number of self-dual codes of length n:
/// `Π_{j=1..n} (2^j + 1)`.
pub fn selfdual_count(n: usize) -> BigUint {
    let mut out = BigUint::from(1u32);
    for j in 1..=n {
        out *= (BigUint::from(1u32) << j) + 1u32;
    }
    out
}

/// Visits every self-dual code of length n exactly once and returns how
/// many there were.
///
/// Each code is produced as the unique reduced echelon basis of its
/// packed symplectic image, built one row at a time in decreasing pivot
/// order: a new row must be zero at the previous pivots, the previous
/// rows must be zero at the new pivot, and the new row must be
/// orthogonal to all previous rows — a small exact linear system whose
/// solution set is walked deterministically. Lengths above
/// [`ENUMERATION_LIMIT`] are refused (the count grows as Π(2^j+1)).
pub fn enumerate_selfdual(
    n: usize,
    mut visit: impl FnMut(AdditiveCode),
) -> Result<u64, Error> {
    assert!(n >= 1, "length must be positive");
    if n > ENUMERATION_LIMIT {
        return Err(Error::LengthTooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut rows: Vec<u32> = Vec::with_capacity(n);
    let mut count = 0u64;
    extend(n, &mut rows, 2 * n, 0, &mut |basis| {
        let code = AdditiveCode::from_generators(n, unpack_rows(n, basis));
        debug_assert_eq!(code.rank(), n);
        debug_assert!(code.is_self_dual());
        count += 1;
        visit(code);
    });
    Ok(count)
}

/// Depth-first reduced-echelon extension: `rows` hold pivots in
/// decreasing order below `pivot_limit`, `used` is the pivot mask.
fn extend(
    n: usize,
    rows: &mut Vec<u32>,
    pivot_limit: usize,
    used: u32,
    emit: &mut impl FnMut(&[u32]),
) {
    if rows.len() == n {
        emit(rows);
        return;
    }
    let remaining = n - rows.len();
    let full: u32 = if 2 * n == 32 { !0 } else { (1u32 << (2 * n)) - 1 };
    // The new pivot must leave room for the rest, and the rows already
    // chosen must be zero in its column (reduced form).
    for p in (remaining - 1..pivot_limit).rev() {
        let pbit = 1u32 << p;
        if used & pbit != 0 || rows.iter().any(|&r| r & pbit != 0) {
            continue;
        }
        // Free positions: strictly above the pivot, not at used pivots.
        let free = full & !((pbit << 1) - 1) & !used;
        // Orthogonality to each existing row: parity((pbit|x) & swapped).
        let mut eqs: Vec<(u32, bool)> = rows
            .iter()
            .map(|&r| {
                let s = swapped(r);
                (s & free, s & pbit != 0)
            })
            .collect();
        let Some((particular, kernel)) = solve_bits(&mut eqs, free) else {
            continue;
        };
        for pick in 0..(1u64 << kernel.len()) {
            let mut x = particular;
            for (b, k) in kernel.iter().enumerate() {
                if pick >> b & 1 == 1 {
                    x ^= k;
                }
            }
            let row = pbit | x;
            debug_assert!(rows.iter().all(|&r| !symp(row, r)));
            rows.push(row);
            extend(n, rows, p, used | pbit, emit);
            rows.pop();
        }
    }
}

/// Solves a system of parity equations `(mask, rhs)` over the bit
/// positions of `free` (every mask must be contained in `free`).
/// Returns a particular solution and a basis of the solution-space
/// kernel — one vector per non-pivot position of `free`, including
/// positions no equation touches — or `None` if inconsistent.
fn solve_bits(eqs: &mut [(u32, bool)], free: u32) -> Option<(u32, Vec<u32>)> {
    let mut pivots: Vec<(u32, usize)> = Vec::new(); // (bit, equation index)
    for i in 0..eqs.len() {
        for &(bit, j) in &pivots {
            if eqs[i].0 & bit != 0 {
                let (mj, rj) = eqs[j];
                eqs[i].0 ^= mj;
                eqs[i].1 ^= rj;
            }
        }
        if eqs[i].0 == 0 {
            if eqs[i].1 {
                return None;
            }
            continue;
        }
        let bit = eqs[i].0 & eqs[i].0.wrapping_neg();
        // Clear this pivot from the earlier reduced equations.
        for &(_, j) in &pivots {
            if eqs[j].0 & bit != 0 {
                let (mi, ri) = eqs[i];
                eqs[j].0 ^= mi;
                eqs[j].1 ^= ri;
            }
        }
        pivots.push((bit, i));
    }
    let mut particular = 0u32;
    let mut pivot_mask = 0u32;
    for &(bit, i) in &pivots {
        pivot_mask |= bit;
        if eqs[i].1 {
            particular |= bit;
        }
    }
    let mut kernel = Vec::new();
    let mut frees = free & !pivot_mask;
    while frees != 0 {
        let q = frees & frees.wrapping_neg();
        frees ^= q;
        let mut vec = q;
        for &(bit, i) in &pivots {
            if eqs[i].0 & q != 0 {
                vec |= bit;
            }
        }
        kernel.push(vec);
    }
    kernel.sort_unstable();
    Some((particular, kernel))
}

/// One equivalence class of self-dual codes.
#[derive(Clone, Debug)]
pub struct SelfdualClass {
    /// The orbit member with the lexicographically least canonical
    /// basis — the same code every run.
    pub representative: AdditiveCode,
    /// Number of monomial group elements fixing the representative.
    pub aut_order: u64,
    /// Number of distinct codes in the orbit (= 6ⁿ·n!/aut_order).
    pub orbit_size: u64,
    /// Whether no proper coordinate split writes the code as a direct
    /// sum of two smaller self-dual codes.
    pub indecomposable: bool,
}

/// Partitions all self-dual codes of length n into equivalence classes
/// under the monomial group, in a deterministic order.
///
/// Each unclassified code seeds a full orbit scan (all 6ⁿ·n! images),
/// the automorphism order follows by orbit–stabilizer, and the whole
/// sweep is balanced by the exact mass identity
/// `Σ 1/|Aut| = Π(2^j+1)/(6^n n!)`. Lengths above [`CLASSIFY_LIMIT`]
/// are refused.
pub fn classify_selfdual(n: usize) -> Result<Vec<SelfdualClass>, Error> {
    assert!(n >= 1, "length must be positive");
    if n > CLASSIFY_LIMIT {
        return Err(Error::LengthTooLarge {
            n,
            limit: CLASSIFY_LIMIT,
        });
    }
    let mut keys: Vec<Vec<u32>> = Vec::new();
    enumerate_selfdual(n, |code| keys.push(self_key(&code)))?;
    keys.sort_unstable();

    let group_order: u64 = (1..=n as u64).map(|i| 6 * i).product();
    let mut visited: HashSet<Vec<u32>> = HashSet::with_capacity(keys.len());
    let mut classes = Vec::new();
    for key in &keys {
        if visited.contains(key) {
            continue;
        }
        let representative = AdditiveCode::from_generators(n, unpack_rows(n, key));
        let mut orbit: HashSet<Vec<u32>> = HashSet::new();
        scan_group(&representative, |image| {
            orbit.insert(image.to_vec());
            false
        });
        let orbit_size = orbit.len() as u64;
        assert_eq!(
            group_order % orbit_size,
            0,
            "orbit size must divide the group order"
        );
        let indecomposable = !is_coordinate_decomposable(&representative);
        classes.push(SelfdualClass {
            representative,
            aut_order: group_order / orbit_size,
            orbit_size,
            indecomposable,
        });
        visited.extend(orbit);
    }
    assert_eq!(visited.len(), keys.len(), "orbits must cover the enumeration");
    Ok(classes)
}

/// Does some proper, nonempty coordinate subset S split the code as
/// (words supported in S) ⊕ (words supported off S)?
pub fn is_coordinate_decomposable(c: &AdditiveCode) -> bool {
    let n = c.n();
    if n < 2 {
        return false;
    }
    let rank = c.rank();
    for subset in 1..(1u64 << (n - 1)) {
        let inside = supported_dimension(c, subset);
        let outside = supported_dimension(c, !subset & ((1 << n) - 1));
        if inside + outside == rank {
            return true;
        }
    }
    false
}

/// Dimension of the subcode of words supported inside the coordinate
/// mask.
fn supported_dimension(c: &AdditiveCode, mask: u64) -> usize {
    let gens = c.generators();
    if gens.is_empty() {
        return 0;
    }
    let outside: Vec<usize> = (0..c.n()).filter(|&j| mask >> j & 1 == 0).collect();
    // Combination x of generators lies inside the mask exactly when the
    // outside symplectic bits vanish: x is in the kernel of the
    // (2·|outside|) × rank matrix of those bits.
    let mut m = BinMatrix::new(gens.len());
    for &j in &outside {
        let mut row_a = m.zero_row();
        let mut row_b = m.zero_row();
        for (col, g) in gens.iter().enumerate() {
            let x = g.get(j).bits();
            crate::f2::set_bit(&mut row_a, col, x & 1 != 0);
            crate::f2::set_bit(&mut row_b, col, x & 2 != 0);
        }
        m.push_row(row_a);
        m.push_row(row_b);
    }
    m.kernel_basis().len()
}

/// One connected piece of a code generated by weight-2 words.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Weight2Component {
    /// A rank-2 pair of coordinates carrying `{(t, σt) : t}` for an
    /// additive bijection σ — the piece built by
    /// [`crate::constructions::dn_plus`]\(2\).
    DPlus,
    /// m coordinates carrying the even-weight binary span (rank m−1) up
    /// to coordinatewise scalar relabelling — the piece built by
    /// [`crate::constructions::dn_code`]\(m\).
    D(usize),
}

/// Splits a self-orthogonal code generated by its weight-2 words into
/// its connected coordinate components and classifies each one,
/// returning the sorted multiset of component types.
///
/// Requirements checked: the code is self-orthogonal, no coordinate is
/// identically zero, and the weight-2 words span the whole code. Every
/// such code is a direct sum of [`Weight2Component::DPlus`] pieces and
/// [`Weight2Component::D`] pieces, and the classification is reached
/// structurally (per-coordinate value sets and ranks), so it is
/// invariant under coordinate permutations and scalar relabellings.
pub fn weight2_decomposition(c: &AdditiveCode) -> Result<Vec<Weight2Component>, Error> {
    let n = c.n();
    if !c.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    // Collect every weight-2 codeword by membership tests on pairs.
    let mut pair_words: Vec<Gf4Vector> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for xi in crate::gf4::NONZERO {
                for xj in crate::gf4::NONZERO {
                    let mut w = Gf4Vector::zero(n);
                    w.set(i, xi);
                    w.set(j, xj);
                    if c.contains(&w) {
                        pair_words.push(w);
                    }
                }
            }
        }
    }
    let spanned = AdditiveCode::from_generators(n, pair_words.iter().cloned());
    if spanned.rank() != c.rank() {
        return Err(Error::Precondition(
            "the weight-2 words must generate the whole code",
        ));
    }

    // Union the coordinates linked by a weight-2 word.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for w in &pair_words {
        let s = w.support();
        let (a, b) = (find(&mut parent, s[0]), find(&mut parent, s[1]));
        if a != b {
            parent[a] = b;
        }
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; n];
    for j in 0..n {
        let r = find(&mut parent, j);
        match root_of[r] {
            Some(idx) => components[idx].push(j),
            None => {
                root_of[r] = Some(components.len());
                components.push(vec![j]);
            }
        }
    }
    if components.iter().any(|comp| comp.len() == 1) {
        return Err(Error::Precondition(
            "every coordinate must meet a weight-2 word",
        ));
    }

    let mut out = Vec::new();
    for comp in &components {
        let words: Vec<&Gf4Vector> = pair_words
            .iter()
            .filter(|w| comp.contains(&w.support()[0]))
            .collect();
        let piece = AdditiveCode::from_generators(n, words.iter().map(|w| (*w).clone()));
        let m = comp.len();
        let rank = piece.rank();
        if m == 2 && rank == 2 {
            // Rank 2 on two coordinates: all three nonzero words must
            // have weight 2, making the piece the graph of an additive
            // bijection between the coordinates.
            let all_weight2 = piece.codewords().iter().all(|w| w.is_zero() || w.weight() == 2);
            if !all_weight2 {
                return Err(Error::Precondition(
                    "a rank-2 pair component must consist of weight-2 words",
                ));
            }
            out.push(Weight2Component::DPlus);
        } else if rank == m - 1 && scalar_relabelling_of_binary(&piece, comp) {
            out.push(Weight2Component::D(m));
        } else {
            return Err(Error::Precondition(
                "component is not an even-weight chain or a full pair",
            ));
        }
    }
    out.sort();
    Ok(out)
}

/// Is each coordinate of the piece confined to {0, λ} for a single
/// nonzero λ (so the piece is a scalar relabelling of a binary code)?
fn scalar_relabelling_of_binary(piece: &AdditiveCode, comp: &[usize]) -> bool {
    let words = piece.codewords();
    comp.iter().all(|&j| {
        let values: HashSet<u8> = words
            .iter()
            .map(|w| w.get(j).bits())
            .filter(|&b| b != 0)
            .collect();
        values.len() == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{direct_sum, dn_code, dn_plus};
    use crate::equiv::{are_equivalent, automorphism_order, GroupElement};
    use num_traits::One;
    use rand::SeedableRng;

    fn budget() -> Budget {
        Budget::log2(28)
    }

    #[test]
    fn enumeration_counts_match_the_product_formula() {
        let expected = [3u64, 15, 135, 2295, 75735];
        for n in 1..=5usize {
            let mut seen = HashSet::new();
            let count = enumerate_selfdual(n, |code| {
                if n <= 3 {
                    assert!(code.is_self_dual());
                }
                seen.insert(self_key(&code));
            })
            .unwrap();
            assert_eq!(count, expected[n - 1]);
            assert_eq!(seen.len() as u64, count, "codes must be pairwise distinct");
            assert_eq!(
                BigUint::from(count),
                selfdual_count(n),
                "closed form agrees"
            );
        }
        assert!(matches!(
            enumerate_selfdual(7, |_| {}),
            Err(Error::LengthTooLarge { n: 7, limit: 6 })
        ));
    }

    #[test]
    fn classification_reproduces_the_known_class_counts() {
        let t = [1usize, 2, 3, 6, 11];
        let i = [1usize, 1, 1, 2, 4];
        for n in 1..=5usize {
            let classes = classify_selfdual(n).unwrap();
            assert_eq!(classes.len(), t[n - 1], "t_{n}");
            assert_eq!(
                classes.iter().filter(|c| c.indecomposable).count(),
                i[n - 1],
                "i_{n}"
            );
            // Orbits tile the full enumeration.
            let total: u64 = classes.iter().map(|c| c.orbit_size).sum();
            assert_eq!(BigUint::from(total), selfdual_count(n));
            // Orbit–stabilizer in exact form.
            let group: u64 = (1..=n as u64).map(|j| 6 * j).product();
            for class in &classes {
                assert_eq!(class.aut_order * class.orbit_size, group);
            }
        }
    }

    #[test]
    fn the_mass_identity_holds_exactly() {
        use num_bigint::BigInt;
        for n in 1..=5usize {
            let classes = classify_selfdual(n).unwrap();
            let mut mass = BigRational::from_integer(BigInt::from(0));
            for class in &classes {
                mass += BigRational::new(BigInt::one(), BigInt::from(class.aut_order));
            }
            let group: u64 = (1..=n as u64).map(|j| 6 * j).product();
            let expected = BigRational::new(
                BigInt::from(selfdual_count(n)),
                BigInt::from(group),
            );
            assert_eq!(mass, expected, "length {n}");
        }
    }

    #[test]
    fn small_automorphism_orders_cross_check_the_direct_scan() {
        // The orbit-derived automorphism order must agree with the
        // element-by-element stabilizer count.
        for n in 1..=3usize {
            for class in classify_selfdual(n).unwrap() {
                let direct = automorphism_order(&class.representative, 6).unwrap();
                assert_eq!(direct, class.aut_order);
            }
        }
    }

    #[test]
    fn representatives_are_self_dual_with_bounded_distance() {
        for n in 1..=5usize {
            for class in classify_selfdual(n).unwrap() {
                let code = &class.representative;
                assert!(code.is_self_dual());
                let params = code.quantum_params(budget()).unwrap();
                assert_eq!(params.k, 0);
                let w = code.weight_distribution(budget()).unwrap();
                assert!(
                    params.d <= crate::bounds::selfdual_distance_bound(n, w.is_even()),
                    "length {n}"
                );
            }
        }
    }

    #[test]
    fn indecomposables_match_the_published_list() {
        // Length 4: the doubled pair chain and one genuinely quaternary
        // code.
        let classes4 = classify_selfdual(4).unwrap();
        let inde4: Vec<&SelfdualClass> = classes4.iter().filter(|c| c.indecomposable).collect();
        assert_eq!(inde4.len(), 2);
        let quaternary4 = AdditiveCode::from_strs(&["1100", "0011", "wwww", "01wW"]);
        assert!(quaternary4.is_self_dual());
        let mut matched_dplus = 0;
        let mut matched_listed = 0;
        for class in &inde4 {
            if are_equivalent(&class.representative, &dn_plus(4), 6).unwrap() {
                matched_dplus += 1;
            }
            if are_equivalent(&class.representative, &quaternary4, 6).unwrap() {
                matched_listed += 1;
            }
        }
        assert_eq!((matched_dplus, matched_listed), (1, 1));

        // Length 5: the chain, two listed codes, and a distance-3 code.
        let classes5 = classify_selfdual(5).unwrap();
        let inde5: Vec<&SelfdualClass> = classes5.iter().filter(|c| c.indecomposable).collect();
        assert_eq!(inde5.len(), 4);
        let listed_a = AdditiveCode::from_strs(&["11000", "00110", "00101", "01www", "ww001"]);
        let listed_b = AdditiveCode::from_strs(&["11000", "00110", "10101", "ww00w", "00www"]);
        assert!(listed_a.is_self_dual() && listed_b.is_self_dual());
        let mut found = [false; 4]; // chain, a, b, distance-3
        for class in &inde5 {
            let rep = &class.representative;
            if are_equivalent(rep, &dn_plus(5), 6).unwrap() {
                found[0] = true;
            } else if are_equivalent(rep, &listed_a, 6).unwrap() {
                found[1] = true;
            } else if are_equivalent(rep, &listed_b, 6).unwrap() {
                found[2] = true;
            } else {
                assert_eq!(rep.min_weight(budget()).unwrap(), Some(3));
                found[3] = true;
            }
        }
        assert_eq!(found, [true; 4]);
    }

    #[test]
    fn weight2_pieces_classify_chains_and_pairs() {
        assert_eq!(
            weight2_decomposition(&dn_code(4)).unwrap(),
            vec![Weight2Component::D(4)]
        );
        assert_eq!(
            weight2_decomposition(&dn_plus(2)).unwrap(),
            vec![Weight2Component::DPlus]
        );
        let sum = direct_sum(&dn_plus(2), &dn_code(2));
        assert_eq!(
            weight2_decomposition(&sum).unwrap(),
            vec![Weight2Component::DPlus, Weight2Component::D(2)]
        );
        let sum3 = direct_sum(&direct_sum(&dn_plus(2), &dn_plus(2)), &dn_code(3));
        assert_eq!(
            weight2_decomposition(&sum3).unwrap(),
            vec![
                Weight2Component::DPlus,
                Weight2Component::DPlus,
                Weight2Component::D(3)
            ]
        );
    }

    #[test]
    fn weight2_classification_is_equivalence_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let base = direct_sum(&dn_code(4), &dn_plus(2));
        let expected = vec![Weight2Component::DPlus, Weight2Component::D(4)];
        assert_eq!(weight2_decomposition(&base).unwrap(), expected);
        for _ in 0..10 {
            let g = GroupElement::random(6, &mut rng);
            assert_eq!(weight2_decomposition(&g.apply_code(&base)).unwrap(), expected);
        }
    }

    #[test]
    fn weight2_preconditions_are_enforced() {
        // No weight-2 words at all.
        let five = crate::catalog::five_one_three();
        assert!(matches!(
            weight2_decomposition(&five),
            Err(Error::Precondition(_))
        ));
        // A coordinate outside every weight-2 word.
        let padded = AdditiveCode::from_strs(&["110"]);
        assert!(matches!(
            weight2_decomposition(&padded),
            Err(Error::Precondition(_))
        ));
        // Not self-orthogonal.
        let skew = AdditiveCode::from_strs(&["11", "1w"]);
        assert!(matches!(
            weight2_decomposition(&skew),
            Err(Error::NotSelfOrthogonal)
        ));
    }

    #[test]
    fn decomposability_detects_direct_sums_and_nothing_else() {
        assert!(is_coordinate_decomposable(&direct_sum(
            &dn_plus(2),
            &dn_plus(3)
        )));
        assert!(!is_coordinate_decomposable(&dn_plus(4)));
        assert!(!is_coordinate_decomposable(&AdditiveCode::from_strs(&["1"])));
        // The hexacode is indecomposable.
        let hexacode = AdditiveCode::from_strs(&[
            "001111", "00wwww", "0101wW", "0w0wW1", "1001Ww", "w00w1W",
        ]);
        assert!(!is_coordinate_decomposable(&hexacode));
    }
}
