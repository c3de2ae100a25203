//! The stored table of best-known quantum code distances for lengths
//! 3 through 30, and machinery that recomputes both sides of each cell.
//!
//! Each cell (n, k) records the best distance interval `lower..=upper`
//! on record: `lower` is achieved by an explicit code, `upper` is the
//! tightest known nonexistence ceiling. [`regenerate`] rebuilds both
//! sides from scratch — lower bounds by constructing codes (catalog
//! entries, stock families, and closure under the propagation rules
//! for lengthening, puncturing, subcodes, deletion, and direct sums),
//! upper bounds from the feasibility tests in [`crate::bounds`] — so
//! the stored data can be audited cell by cell rather than trusted.
//!
//! A few cells carry a [`mark`](StoredCell::mark): their ceiling needs
//! a refinement beyond the generic machinery (impurity forcing, a
//! strengthened counting argument, or a parity split). Those ceilings
//! are taken from [`catalog::external_bounds`] and substituted into the
//! regenerated grid, clearly labelled, instead of being rederived.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::bounds::{lp_feasible, selfdual_distance_bound, singleton_ok, sphere_packing_ok};
use crate::catalog::{self, ExternalBoundKind};
use crate::code::AdditiveCode;
use crate::constructions::{css, shorten_by_support, trivial_code, uuv};
use crate::cyclic::cyclic_span;
use crate::f2::BinCode;
use crate::Budget;

/// Smallest length the stored table covers.
pub const MIN_N: usize = 3;
/// Largest length the stored table covers.
pub const MAX_N: usize = 30;
/// Largest logical dimension the stored table covers.
pub const MAX_K: usize = 23;

/// One cell of the stored table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StoredCell {
    /// Length.
    pub n: usize,
    /// Logical dimension.
    pub k: usize,
    /// Largest distance achieved by a known code.
    pub lower: usize,
    /// Smallest distance ruled out is `upper + 1`.
    pub upper: usize,
    /// Present when the ceiling needs a refinement beyond the generic
    /// feasibility machinery; identifies which kind.
    pub mark: Option<ExternalBoundKind>,
}

/// Rows of the stored table, one per length starting at [`MIN_N`], with
/// one token per logical dimension k = 0, 1, 2, … (capped at [`MAX_K`]).
/// Token grammar: `L` for a settled cell, `L-U` for an interval, with an
/// optional trailing mark letter `a` (impurity forcing), `b` (refined
/// counting), or `g` (parity split).
const ROW_TEXT: [&str; MAX_N - MIN_N + 1] = [
    "2 1 1 1",
    "2 2 2 1 1",
    "3 3 2 1 1 1",
    "4 3a 2 2 2 1 1",
    "3b 3 2 2 2 1 1 1",
    "4 3 3 3 2 2 2 1 1",
    "4 3 3 3 2 2 2 1 1 1",
    "4 4 4 3 3 2 2 2 2 1 1",
    "5 5 4 3 3 3 2 2 2 1 1 1",
    "6 5a 4 4 4 3 3 2 2 2 2 1 1",
    "5b 5 4 4 4 3-4 3 3 2 2 2 1 1 1",
    "6 5 4-5 4-5 4 4 4 3 3 2 2 2 2 1 1",
    "6 5 5 5 4b 4 4 3b 3 3 2 2 2 1 1 1",
    "6 6 6 5 4-5 4-5 4 3-4 3b 3 3 2 2 2 2 1 1",
    "7 7 6 5-6 4-5 4-5 4-5 4 4 4 3 3 2 2 2 1 1 1",
    "8 7 6 5-6 5-6 5 5 4 4 4 3 3 2b 2 2 2 2 1 1",
    "7-8 7 6 5-6 5-6 5-6 5 4-5 4g 4 3-4 3 3 2b 2 2 2 1 1 1",
    "8 7 6-7 5-7 5-6 5-6 5-6 4-5 4-5 4 4 3-4 3 3 2 2 2 2 2 1 1",
    "8 7 6-7 5-7 5-7 5-6 5-6 4-6a 4-5 4-5 4 4 3-4 3 3 3 2 2 2 1 1 1",
    "8 7-8 6-8 5-7 5-7 5-7 5-6 4-6 4-6 4-5 4-5 4 4 3-4 3b 3 2 2 2 2 2 1 1",
    "8-9 7-9 6-8 5-8 5-7 5-7 5-7 5-6 4-6 4-6 4-5 4-5 4 4 3-4 3 3 2 2 2 2 1 1 1",
    "8-10 8-9a 6-8 6-8 6-8 6-7 6-7 5-7 4-6 4-6 4-6 4-5 4-5 4 4 3-4 3 3 2 2 2 2 2 1",
    "8-9b 9 7-8 7-8 7-8 7-8 6-7 5-7 4-7 4-6 4-6 4-6 4-5 4-5 4 4 3-4 3 3 2 2 2 2 1",
    "8-10 9 8-9 8-9 8 7-8 6-8 5-8 4-7 4-7 4-6 4-6 4-6 4-5 4-5 4 4 3-4 3 3 2 2 2 2",
    "9-10 9 9 9 8-9 7-8 6-8 5-8 4-8 5-7 4-7 4-6 4-6 4-5 4-5 4-5 4 4 3-4 3 3 2 2 2",
    "10 10 10 9 8-9 7-9 6-8 6-8 6-8 5-8 5-7 5-7 5-6 5-6 5-6 4-5 4 4 4 3-4 3 3 2 2",
    "11 11 10 9-10 8-9 7-9 6-9 6-8 6-8 5-8 5-7 5-7 5-6 5-6 5-6 4-5 4-5 4 4 3-4 3-4 3 3 2",
    "12 11a 10 9-10 8-10 7-9 6-9 6-9 6-8 5-8 5-8 5-7 5-7 5-6 5-6 4-6 4-5 4-5 4 4 4 3-4 3 3",
];

fn parse_cell(n: usize, k: usize, token: &str) -> StoredCell {
    let (body, mark) = match token.as_bytes().last() {
        Some(b'a') => (&token[..token.len() - 1], Some(ExternalBoundKind::ImpureOnly)),
        Some(b'b') => (&token[..token.len() - 1], Some(ExternalBoundKind::RefinedCounting)),
        Some(b'g') => (&token[..token.len() - 1], Some(ExternalBoundKind::ParityDependent)),
        _ => (token, None),
    };
    let parse = |s: &str| s.parse::<usize>().unwrap_or_else(|_| panic!("bad token {token:?}"));
    let (lower, upper) = match body.split_once('-') {
        Some((l, u)) => (parse(l), parse(u)),
        None => {
            let v = parse(body);
            (v, v)
        }
    };
    assert!(
        1 <= lower && lower <= upper && upper <= n,
        "cell ({n}, {k}) holds the impossible interval {lower}-{upper}"
    );
    StoredCell { n, k, lower, upper, mark }
}

/// All stored cells, ordered by length and then by logical dimension.
pub fn stored_table() -> &'static [StoredCell] {
    static STORED: OnceLock<Vec<StoredCell>> = OnceLock::new();
    STORED.get_or_init(|| {
        let mut out = Vec::new();
        for (i, row) in ROW_TEXT.iter().enumerate() {
            let n = MIN_N + i;
            let tokens: Vec<&str> = row.split_whitespace().collect();
            assert_eq!(tokens.len(), n.min(MAX_K) + 1, "row for length {n}");
            for (k, token) in tokens.iter().enumerate() {
                out.push(parse_cell(n, k, token));
            }
        }
        out
    })
}

/// Looks up the stored cell at (n, k), if the table covers it.
pub fn stored_cell(n: usize, k: usize) -> Option<StoredCell> {
    if !(MIN_N..=MAX_N).contains(&n) || k > n.min(MAX_K) {
        return None;
    }
    let offset = (MIN_N..n).map(|m| m.min(MAX_K) + 1).sum::<usize>() + k;
    Some(stored_table()[offset])
}

/// The largest distance the generic machinery cannot rule out at (n, k):
/// the scan stops at the first d failing the Singleton bound, the
/// sphere-packing count (odd d), the self-dual distance cap (k = 0), or
/// linear-programming feasibility. Every test is monotone in d, so the
/// first failure settles the ceiling. Dimension-0 cells are held to the
/// pure constraint set, matching the convention that a self-dual code's
/// distance is its minimum nonzero weight.
pub fn computed_upper(n: usize, k: usize) -> usize {
    assert!(n >= 1 && k <= n, "need 0 <= k <= n with n positive");
    let pure = k == 0;
    let mut best = 1;
    for d in 2..=n {
        if !singleton_ok(n, k, d, pure) {
            break;
        }
        if d % 2 == 1 && !sphere_packing_ok(n, k, d) {
            break;
        }
        if k == 0 && d > selfdual_distance_bound(n, false) {
            break;
        }
        if !lp_feasible(n, k, d, pure, None).is_feasible() {
            break;
        }
        best = d;
    }
    best
}

/// Best distances achieved by explicitly constructible codes at one
/// (n, k): `any` over all codes, `pure` restricted to pure ones
/// (0 when no pure code is on record).
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct KnownDistance {
    /// Best distance over all known codes at this cell.
    pub any: usize,
    /// Best distance over known *pure* codes at this cell.
    pub pure: usize,
}

fn params_of(code: &AdditiveCode) -> Option<(usize, usize, usize, bool)> {
    let p = code.quantum_params(Budget::log2(20)).ok()?;
    Some((p.n, p.k, p.d, p.pure))
}

fn seed_facts(grid_n: usize) -> Vec<(usize, usize, usize, bool)> {
    let budget = Budget::log2(20);
    let mut seeds: Vec<(usize, usize, usize, bool)> = Vec::new();

    // Named reference codes carry claims that the catalog tests verify.
    for entry in catalog::list() {
        let c = entry.claim;
        if c.n <= grid_n {
            seeds.push((c.n, c.k, c.d, c.pure));
        }
    }

    // Stock families: weight-1 stabilizer rows give distance 1 at every
    // dimension; the all-one/all-ω construction gives distance 2 at the
    // largest dimension it supports (propagation fills in smaller k).
    for n in 1..=grid_n {
        for k in 0..=n {
            seeds.push((n, k, 1, true));
        }
        let k2 = if n % 2 == 0 { n.checked_sub(2) } else { n.checked_sub(3) };
        if let Some(k2) = k2 {
            if let Ok(code) = trivial_code(n, k2, 2) {
                seeds.extend(params_of(&code));
            }
        }
    }

    // The extended-Hamming [8,4,4] binary code, CSS-paired with itself,
    // gives a distance-4 self-dual code at length 8.
    if grid_n >= 8 {
        let e8 = BinCode::from_strs(&["11111111", "00001111", "00110011", "01010101"]);
        if let Ok(code) = css(&e8, &e8) {
            seeds.extend(params_of(&code));
        }
    }

    // Pasting two copies of the five-qubit code with (u, u + v) keeps
    // distance 4 at length 10.
    if grid_n >= 10 {
        let five = catalog::five_one_three();
        if let Ok(code) = uuv(&five, &five, budget) {
            seeds.extend(params_of(&code));
        }
    }

    // The graph code on a 9-cycle with chords between vertices three
    // apart is self-dual with minimum weight 4.
    if grid_n >= 9 {
        if let Ok(code) = cyclic_span(&["w10100101".parse().unwrap()]) {
            seeds.extend(params_of(&code));
        }
    }

    // Support-shortening the length-21 Hamming stabilizer walks
    // distance-3 codes down from [[20, 14, 3]] to [[7, 1, 3]].
    let hamming = catalog::gf4_simplex(3);
    for m in 1..21 {
        if 21 - m > grid_n {
            continue;
        }
        if let Ok(code) = shorten_by_support(&hamming, m, budget) {
            seeds.extend(params_of(&code));
        }
    }

    seeds
}

fn raise(
    any: &mut [Vec<usize>],
    pure: &mut [Vec<usize>],
    n: usize,
    k: usize,
    d: usize,
    is_pure: bool,
) -> bool {
    let mut changed = false;
    if any[n][k] < d {
        any[n][k] = d;
        changed = true;
    }
    if is_pure && pure[n][k] < d {
        pure[n][k] = d;
        changed = true;
    }
    changed
}

/// Best known achievable distances for every cell with n ≤ `max_n`,
/// regenerated from scratch: explicit seed codes, then closure under
/// the propagation rules. Lengthening trades nothing for an extra
/// coordinate but can leave the code impure; puncturing a pure code
/// trades one coordinate and one unit of distance for a logical qubit;
/// passing to a subcode drops a logical qubit (reaching k = 0 needs a
/// pure input); deleting a coordinate costs one unit of distance; and
/// direct sums add lengths and dimensions at the smaller distance.
pub fn known_lower_bounds(max_n: usize) -> HashMap<(usize, usize), KnownDistance> {
    // Codes a little longer than the window still matter: a length-n′
    // seed reaches length n′ − t at distance d − t by deleting or
    // puncturing t times. No seed claims distance above 9, so eight
    // lengths of headroom capture every descent that can land inside.
    let grid_n = max_n + 8;
    let mut any = vec![vec![0usize; grid_n + 2]; grid_n + 2];
    let mut pure = vec![vec![0usize; grid_n + 2]; grid_n + 2];
    for (n, k, d, is_pure) in seed_facts(grid_n) {
        if n <= grid_n && k <= n {
            raise(&mut any, &mut pure, n, k, d, is_pure);
        }
    }

    loop {
        let mut changed = false;
        for n in 1..=grid_n {
            for k in 0..=n {
                let (a, p) = (any[n][k], pure[n][k]);
                if a == 0 {
                    continue;
                }
                // Lengthening: [[n, k, d]] with k > 0 gives an impure
                // [[n+1, k, d]].
                if k > 0 && n + 1 <= grid_n {
                    changed |= raise(&mut any, &mut pure, n + 1, k, a, false);
                }
                // Puncturing a pure [[n, k, d]] with d >= 2 gives a pure
                // [[n-1, k+1, d-1]].
                if p >= 2 && n >= 2 && k + 1 <= n - 1 {
                    changed |= raise(&mut any, &mut pure, n - 1, k + 1, p - 1, true);
                }
                // Subcode: [[n, k, d]] with k > 1 gives [[n, k-1, d]];
                // from a pure code the step works for every k >= 1 and
                // stays pure.
                if k > 1 {
                    changed |= raise(&mut any, &mut pure, n, k - 1, a, false);
                }
                if k >= 1 && p > 0 {
                    changed |= raise(&mut any, &mut pure, n, k - 1, p, true);
                }
                // Deletion: [[n, k, d]] with d >= 2 and k <= n-1 gives
                // [[n-1, k, d-1]] of the same purity.
                if n >= 2 && k <= n - 1 {
                    if a >= 2 {
                        changed |= raise(&mut any, &mut pure, n - 1, k, a - 1, false);
                    }
                    if p >= 2 {
                        changed |= raise(&mut any, &mut pure, n - 1, k, p - 1, true);
                    }
                }
            }
        }
        // Direct sums.
        for n1 in 1..grid_n {
            for k1 in 0..=n1 {
                if any[n1][k1] == 0 {
                    continue;
                }
                for n2 in n1..=grid_n.saturating_sub(n1) {
                    for k2 in 0..=n2 {
                        let d = any[n1][k1].min(any[n2][k2]);
                        if d > 0 {
                            changed |= raise(&mut any, &mut pure, n1 + n2, k1 + k2, d, false);
                        }
                        let dp = pure[n1][k1].min(pure[n2][k2]);
                        if dp > 0 {
                            changed |= raise(&mut any, &mut pure, n1 + n2, k1 + k2, dp, true);
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut out = HashMap::new();
    for n in 1..=max_n {
        for k in 0..=n {
            if any[n][k] > 0 {
                out.insert((n, k), KnownDistance { any: any[n][k], pure: pure[n][k] });
            }
        }
    }
    out
}

/// One regenerated cell: the best constructible distance, the generic
/// machinery's ceiling, and the final ceiling after substituting any
/// external refinement recorded in the catalog.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ComputedCell {
    /// Length.
    pub n: usize,
    /// Logical dimension.
    pub k: usize,
    /// Best distance achieved by a code the crate can build.
    pub lower: usize,
    /// Ceiling from the generic feasibility machinery alone.
    pub generic_upper: usize,
    /// Final ceiling: the external refinement where one is recorded,
    /// otherwise `generic_upper`.
    pub upper: usize,
    /// The kind of external refinement applied, if any.
    pub mark: Option<ExternalBoundKind>,
}

/// Regenerates every cell with [`MIN_N`] ≤ n ≤ `max_n` (capped at
/// [`MAX_N`]), computing upper bounds in parallel. The output is
/// ordered by length and then by logical dimension, so equal inputs
/// give byte-identical renderings.
pub fn regenerate(max_n: usize) -> Vec<ComputedCell> {
    let max_n = max_n.min(MAX_N);
    let lowers = known_lower_bounds(max_n);
    let externals: HashMap<(usize, usize), (usize, ExternalBoundKind)> = catalog::external_bounds()
        .into_iter()
        .map(|b| ((b.n, b.k), (b.upper, b.kind)))
        .collect();
    let cells: Vec<(usize, usize)> = (MIN_N..=max_n)
        .flat_map(|n| (0..=n.min(MAX_K)).map(move |k| (n, k)))
        .collect();
    cells
        .into_par_iter()
        .map(|(n, k)| {
            let generic_upper = computed_upper(n, k);
            let (upper, mark) = match externals.get(&(n, k)) {
                Some(&(upper, kind)) => (upper, Some(kind)),
                None => (generic_upper, None),
            };
            let lower = lowers.get(&(n, k)).map_or(0, |c| c.any);
            ComputedCell { n, k, lower, generic_upper, upper, mark }
        })
        .collect()
}
