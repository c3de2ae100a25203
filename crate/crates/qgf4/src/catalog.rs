//! A library of named reference codes: every explicitly-presented code
//! used elsewhere in the crate, from the five-qubit code up to length-40
//! distance-savers, under stable public names.
//!
//! Each [`CatalogEntry`] couples a fixed generator presentation with the
//! parameters claimed for it. The presentations are data, not searches:
//! rebuilding an entry always yields the same generators, so tests and
//! the command-line tool can refer to "the" copy of a code rather than
//! an equivalence class. [`CatalogEntry::verify`] recomputes the quantum
//! parameters and compares them to the claim; the `metadata` field
//! carries side information (automorphism group orders, uniqueness and
//! transitivity notes) that is recorded but deliberately *not* checked,
//! because it is out of brute-force reach at these lengths.
//!
//! [`external_bounds`] lists the handful of (n, k) cells whose best
//! known distance ceiling comes from refinements beyond the linear
//! programming machinery in [`crate::bounds`] (impurity forcing,
//! strengthened counting arguments, parity-splitting); the table module
//! substitutes these stored ceilings where the generic machinery is too
//! weak.

use crate::code::AdditiveCode;
use crate::cyclic::{constacyclic_code, cyclic_span, quasicyclic_code};
use crate::gf4::Gf4;
use crate::vector::Gf4Vector;
use crate::{Budget, Error};

/// The (5, 2^4) code whose stabilizer rows are the cyclic shifts of
/// ωω̄ω̄ω0: the smallest single-error-correcting code, with parameters
/// [[5, 1, 3]].
pub fn five_one_three() -> AdditiveCode {
    AdditiveCode::from_strs(&["wWWw0", "0wWWw", "w0wWW", "Ww0wW"])
}

/// The hexacode, presented by quadratic evaluation: codewords are
/// (a, b, c, f(1), f(ω), f(ω̄)) for f(x) = ax² + bx + c over GF(4).
/// It is GF(4)-linear, trace self-dual, and has minimum weight 4,
/// giving the unique [[6, 0, 4]].
pub fn hexacode() -> AdditiveCode {
    let linear = ["1001Ww", "0101wW", "001111"];
    let mut gens: Vec<Gf4Vector> = Vec::new();
    for s in linear {
        let v: Gf4Vector = s.parse().expect("valid generator string");
        gens.push(v.scale(Gf4::Omega));
        gens.push(v);
    }
    AdditiveCode::from_generators(6, gens)
}

/// The GF(4)-linear simplex code of dimension m: columns run over the
/// (4^m − 1)/3 projective points (first nonzero coordinate normalized
/// to 1, in base-4 counting order). It is Hermitian self-orthogonal,
/// hence trace self-orthogonal, and is the stabilizer of the
/// single-error-correcting Hamming-type family:
/// [[(4^m − 1)/3, (4^m − 1)/3 − 2m, 3]] for m ≥ 2.
pub fn gf4_simplex(m: usize) -> AdditiveCode {
    assert!(m >= 2, "the simplex family starts at m = 2");
    let mut points: Vec<Vec<Gf4>> = Vec::new();
    for c in 1..(1usize << (2 * m)) {
        let p: Vec<Gf4> = (0..m)
            .map(|i| Gf4::from_bits(((c >> (2 * i)) & 3) as u8))
            .collect();
        let first = p.iter().find(|x| **x != Gf4::Zero).expect("c is nonzero");
        if *first == Gf4::One {
            points.push(p);
        }
    }
    let n = points.len();
    debug_assert_eq!(n, ((1usize << (2 * m)) - 1) / 3);
    let mut gens = Vec::new();
    for i in 0..m {
        let mut row = Gf4Vector::zero(n);
        for (j, p) in points.iter().enumerate() {
            row.set(j, p[i]);
        }
        gens.push(row.scale(Gf4::Omega));
        gens.push(row);
    }
    AdditiveCode::from_generators(n, gens)
}

/// Claimed parameters of a catalog entry, in the [[n, k, d]] sense.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClaimedParams {
    /// Length.
    pub n: usize,
    /// Logical dimension exponent.
    pub k: usize,
    /// Minimum distance.
    pub d: usize,
    /// Whether the code is pure (nondegenerate).
    pub pure: bool,
}

/// One named code with its claimed parameters and unverified side notes.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Stable public identifier.
    pub name: &'static str,
    /// One-line description of where the presentation comes from.
    pub summary: &'static str,
    /// The parameters this entry is claimed to have.
    pub claim: ClaimedParams,
    /// When set, `code` generates the *dual* of the self-orthogonal
    /// code the claim describes; [`CatalogEntry::verify`] dualizes
    /// before checking.
    pub dual_side: bool,
    /// The fixed generator presentation.
    pub code: AdditiveCode,
    /// Set by [`CatalogEntry::verify`] after the claim has been
    /// recomputed and matched.
    pub verified: bool,
    /// Recorded but unchecked claims (automorphism orders and the
    /// like), as key–value pairs.
    pub metadata: &'static [(&'static str, &'static str)],
}

impl CatalogEntry {
    /// Recomputes the quantum parameters of the entry's code (of its
    /// dual for `dual_side` entries) and records whether they match
    /// the claim exactly.
    pub fn verify(&mut self, budget: Budget) -> Result<bool, Error> {
        let code = if self.dual_side {
            self.code.dual()
        } else {
            self.code.clone()
        };
        let p = code.quantum_params(budget)?;
        self.verified = (p.n, p.k, p.d, p.pure)
            == (self.claim.n, self.claim.k, self.claim.d, self.claim.pure);
        Ok(self.verified)
    }
}

fn gv(s: &str) -> Gf4Vector {
    s.parse().expect("catalog generator strings are valid")
}

/// Additive span of the given rows exactly as printed.
fn additive(rows: &[&str]) -> AdditiveCode {
    AdditiveCode::from_strs(rows)
}

/// GF(4)-linear span: each printed row contributes itself and its
/// ω-multiple.
fn linear_span(n: usize, rows: &[&str]) -> AdditiveCode {
    let mut gens = Vec::with_capacity(2 * rows.len());
    for s in rows {
        let v = gv(s);
        gens.push(v.scale(Gf4::Omega));
        gens.push(v);
    }
    AdditiveCode::from_generators(n, gens)
}

/// The impure [[6,1,3]] code that is not a lengthened five-qubit code.
fn six_one_three_second() -> AdditiveCode {
    additive(&["000011", "011110", "0wwwww", "101wWw", "w0wW10"])
}

/// The unique [[8,3,3]]: all cyclic shifts of 01ωωω̄1ω̄ with a final 0
/// appended, together with the all-1 and all-ω rows.
fn eight_three_three() -> AdditiveCode {
    let base: Vec<Gf4> = "01wwW1W"
        .chars()
        .map(|c| Gf4::from_char(c).unwrap())
        .collect();
    let mut gens = Vec::new();
    for s in 0..7 {
        let mut coords: Vec<Gf4> = (0..7).map(|j| base[(j + 7 - s) % 7]).collect();
        coords.push(Gf4::Zero);
        gens.push(Gf4Vector::from_coords(&coords));
    }
    gens.push(gv("11111111"));
    gens.push(gv("wwwwwwww"));
    AdditiveCode::from_generators(8, gens)
}

/// The (12, 2^12) d = 6 self-dual code in block-matrix form.
fn dodecacode() -> AdditiveCode {
    additive(&[
        "000000111111",
        "000000wwwwww",
        "111111000000",
        "wwwwww000000",
        "0001wW0001wW",
        "000wW1000wW1",
        "1Ww0001Ww000",
        "w1W000w1W000",
        "0001WwwW1000",
        "000w1W1wW000",
        "1wW000000Ww1",
        "W1w0000001Ww",
    ])
}

/// The cyclic presentation of the dodecacode: all shifts of
/// ω10100100101.
fn dodecacode_cyclic() -> AdditiveCode {
    cyclic_span(&[gv("w10100100101")]).expect("fixed generator")
}

/// Rows of the (25, 2^24) linear code built by encoding each length-5
/// block of the five-qubit stabilizer through the five-qubit code
/// itself.
const CONCATENATED_25_ROWS: [&str; 12] = [
    "0000000000000000000001111",
    "00000000000000000000101wW",
    "0000000000000000111100000",
    "000000000000000101wW00000",
    "0000000000011110000000000",
    "0000000000101wW0000000000",
    "0000001111000000000000000",
    "00000101wW000000000000000",
    "0111100000000000000000000",
    "101wW00000000000000000000",
    "00000001Ww001Ww001Ww001Ww",
    "001Ww00000001Ww00w1W00Ww1",
];

/// The extra row extending the (25, 2^24) code to its (25, 2^26) dual.
const CONCATENATED_25_DUAL_ROW: &str = "0000000000001Ww00Ww100w1W";

fn concatenated_25() -> AdditiveCode {
    linear_span(25, &CONCATENATED_25_ROWS)
}

fn concatenated_25_dual() -> AdditiveCode {
    let mut rows: Vec<&str> = CONCATENATED_25_ROWS.to_vec();
    rows.push(CONCATENATED_25_DUAL_ROW);
    linear_span(25, &rows)
}

/// The (40, 2^7) additive code of the low-overhead distance-3 family.
fn extended_gottesman_40() -> AdditiveCode {
    additive(&[
        "0000000011111111111111111111111111111111",
        "00000000wwwwwwwwwwwwwwwwwwwwwwwwwwwwwwww",
        "001WwwW1w0101WwwW1010wW10wWwW1001WwWw01W",
        "01ww10WW0w00w0wW1W11W1WW1W11W1Ww0w00w0ww",
        "0w0W1W1w0110011wwWWwwWW00110011wwWWwwWW0",
        "10w0wW1W000wwww1111WWWW0000wwww1111WWWW0",
        "w0w1W1W0000111100001111wwwwWWWWwwwwWWWW0",
    ])
}

fn cyclic_15_0_6() -> AdditiveCode {
    cyclic_span(&[gv("w11010100101011")]).expect("fixed generator")
}

fn cyclic_21_0_8() -> AdditiveCode {
    cyclic_span(&[
        gv("WW1w00111101011011000"),
        gv("101110010111001011100"),
    ])
    .expect("fixed generators")
}

fn cyclic_23_0_8() -> AdditiveCode {
    cyclic_span(&[gv("w0101111000000001111010")]).expect("fixed generator")
}

fn cyclic_23_12_4() -> AdditiveCode {
    cyclic_span(&[gv("WWwWw11W11w1w1011000000")]).expect("fixed generator")
}

fn cyclic_25_0_8() -> AdditiveCode {
    cyclic_span(&[gv("111010w010111000000000000")]).expect("fixed generator")
}

fn qc(blocks: &[&str]) -> AdditiveCode {
    let seeds: Vec<Gf4Vector> = blocks.iter().map(|s| gv(s)).collect();
    quasicyclic_code(&seeds).expect("fixed seed blocks")
}

/// The (12, 2^8) linear code whose quantum code is [[12, 4, 4]].
fn note_i_12() -> AdditiveCode {
    linear_span(
        12,
        &["000000111111", "0011110011ww", "0101wW010w1w", "1001Ww01w0w1"],
    )
}

/// The (14, 2^8) linear code whose quantum code is [[14, 6, 4]].
fn note_i_14() -> AdditiveCode {
    linear_span(
        14,
        &[
            "00000011111111",
            "00111100001111",
            "0101wW01wW01wW",
            "1001Ww01Ww10wW",
        ],
    )
}

/// The (17, 2^8) two-weight ovoid code: the dual of the cyclic linear
/// code with generator polynomial 1 + ωx + x² + ωx³ + x⁴.
fn note_j_ovoid() -> AdditiveCode {
    let g = "1w1w1".parse().expect("fixed polynomial");
    constacyclic_code(&g, 17, Gf4::One)
        .expect("the quartic divides x^17 - 1")
        .dual()
}

/// A (17, 2^6) code found by random search, with trivial automorphism
/// group.
fn note_v() -> AdditiveCode {
    additive(&[
        "0010wWwW11wW0011W",
        "00w10w0WWW11wWW11",
        "01001w1wWWW0W1w0W",
        "0w0ww0W1W1wWw1ww1",
        "100wW001wwW1Ww0W1",
        "w001WWW0W0W1011wW",
    ])
}

/// The indecomposable length-4 self-dual code that is not a chain code.
fn indecomposable_4() -> AdditiveCode {
    additive(&["1100", "0011", "wwww", "01wW"])
}

fn indecomposable_5a() -> AdditiveCode {
    additive(&["11000", "00110", "00101", "01www", "ww001"])
}

fn indecomposable_5b() -> AdditiveCode {
    additive(&["11000", "00110", "10101", "ww00w", "00www"])
}

/// The unique (5, 2^5) self-dual code of minimum weight 3: the
/// five-qubit stabilizer extended by the all-ones row.
fn five_zero_three() -> AdditiveCode {
    let mut gens = five_one_three().generators();
    gens.push(gv("11111"));
    AdditiveCode::from_generators(5, gens)
}

struct Spec {
    name: &'static str,
    summary: &'static str,
    claim: ClaimedParams,
    dual_side: bool,
    build: fn() -> AdditiveCode,
    metadata: &'static [(&'static str, &'static str)],
}

const fn claim(n: usize, k: usize, d: usize, pure: bool) -> ClaimedParams {
    ClaimedParams { n, k, d, pure }
}

static SPECS: &[Spec] = &[
    Spec {
        name: "five_one_three",
        summary: "cyclic shifts of wWWw0; the smallest single-error-correcting code",
        claim: claim(5, 1, 3, true),
        dual_side: false,
        build: five_one_three,
        metadata: &[("unique", "yes"), ("linear", "yes")],
    },
    Spec {
        name: "hexacode",
        summary: "GF(4) span of 001111, 0101wW, 1001Ww; the unique distance-4 self-dual code of length 6",
        claim: claim(6, 0, 4, true),
        dual_side: false,
        build: hexacode,
        metadata: &[("aut_order", "2160"), ("linear", "yes")],
    },
    Spec {
        name: "six_one_three_second",
        summary: "the impure [[6,1,3]] code that is not a lengthened five-qubit code",
        claim: claim(6, 1, 3, false),
        dual_side: false,
        build: six_one_three_second,
        metadata: &[("inequivalent_to_lengthened_five_qubit", "yes")],
    },
    Spec {
        name: "eight_three_three",
        summary: "shifts of 01wwW1W with 0 appended, plus the all-1 and all-w rows",
        claim: claim(8, 3, 3, true),
        dual_side: false,
        build: eight_three_three,
        metadata: &[("aut_order", "168"), ("unique", "yes")],
    },
    Spec {
        name: "dodecacode",
        summary: "the (12,2^12) distance-6 self-dual code, block-matrix form",
        claim: claim(12, 0, 6, true),
        dual_side: false,
        build: dodecacode,
        metadata: &[("aut_order", "648"), ("coordinate_transitive", "yes")],
    },
    Spec {
        name: "dodecacode_cyclic",
        summary: "the dodecacode as the cyclic span of w10100100101",
        claim: claim(12, 0, 6, true),
        dual_side: false,
        build: dodecacode_cyclic,
        metadata: &[("equivalent_to", "dodecacode")],
    },
    Spec {
        name: "concatenated_25",
        summary: "the five-qubit code re-encoded through itself: a (25,2^24) linear code",
        claim: claim(25, 1, 9, false),
        dual_side: false,
        build: concatenated_25,
        metadata: &[("linear", "yes")],
    },
    Spec {
        name: "concatenated_25_dual",
        summary: "the (25,2^26) dual of concatenated_25, as printed",
        claim: claim(25, 1, 9, false),
        dual_side: true,
        build: concatenated_25_dual,
        metadata: &[("linear", "yes")],
    },
    Spec {
        name: "extended_gottesman_40",
        summary: "the (40,2^7) member of the low-overhead distance-3 family",
        claim: claim(40, 33, 3, true),
        dual_side: false,
        build: extended_gottesman_40,
        metadata: &[],
    },
    Spec {
        name: "cyclic_15_0_6",
        summary: "additive cyclic span of w11010100101011",
        claim: claim(15, 0, 6, true),
        dual_side: false,
        build: cyclic_15_0_6,
        metadata: &[],
    },
    Spec {
        name: "cyclic_21_0_8",
        summary: "additive cyclic span of WW1w00111101011011000 and a binary row",
        claim: claim(21, 0, 8, true),
        dual_side: false,
        build: cyclic_21_0_8,
        metadata: &[],
    },
    Spec {
        name: "cyclic_23_0_8",
        summary: "additive cyclic span of w0101111000000001111010",
        claim: claim(23, 0, 8, true),
        dual_side: false,
        build: cyclic_23_0_8,
        metadata: &[],
    },
    Spec {
        name: "cyclic_23_12_4",
        summary: "additive cyclic span of WWwWw11W11w1w1011000000",
        claim: claim(23, 12, 4, true),
        dual_side: false,
        build: cyclic_23_12_4,
        metadata: &[],
    },
    Spec {
        name: "cyclic_25_0_8",
        summary: "additive cyclic span of 111010w010111000000000000",
        claim: claim(25, 0, 8, true),
        dual_side: false,
        build: cyclic_25_0_8,
        metadata: &[],
    },
    Spec {
        name: "quasicyclic_14_0_6",
        summary: "linear quasicyclic, blocks 1000000 | W1Ww00w",
        claim: claim(14, 0, 6, true),
        dual_side: false,
        build: || qc(&["1000000", "W1Ww00w"]),
        metadata: &[],
    },
    Spec {
        name: "quasicyclic_14_8_3",
        summary: "linear quasicyclic, blocks 1011100 | 1Www10W",
        claim: claim(14, 8, 3, true),
        dual_side: false,
        build: || qc(&["1011100", "1Www10W"]),
        metadata: &[],
    },
    Spec {
        name: "quasicyclic_15_5_4",
        summary: "linear quasicyclic, blocks 10000 | 11W00 | 11ww0",
        claim: claim(15, 5, 4, true),
        dual_side: false,
        build: || qc(&["10000", "11W00", "11ww0"]),
        metadata: &[],
    },
    Spec {
        name: "quasicyclic_18_6_5",
        summary: "linear quasicyclic, blocks 110000 | 101W00 | 11w1w0",
        claim: claim(18, 6, 5, true),
        dual_side: false,
        build: || qc(&["110000", "101W00", "11w1w0"]),
        metadata: &[],
    },
    Spec {
        name: "quasicyclic_20_10_4",
        summary: "linear quasicyclic, blocks 10000 | 1W100 | 1111w | 11WwW",
        claim: claim(20, 10, 4, true),
        dual_side: false,
        build: || qc(&["10000", "1W100", "1111w", "11WwW"]),
        metadata: &[],
    },
    Spec {
        name: "quasicyclic_25_15_4",
        summary: "linear quasicyclic, blocks 10000 | 1w1w0 | 0101W | 1wWw1 | 10ww0",
        claim: claim(25, 15, 4, true),
        dual_side: false,
        build: || qc(&["10000", "1w1w0", "0101W", "1wWw1", "10ww0"]),
        metadata: &[],
    },
    Spec {
        name: "quasicyclic_28_14_5",
        summary: "linear quasicyclic, blocks wwW1000 | W0W1000 | 1WW1wW0 | WwWww00",
        claim: claim(28, 14, 5, true),
        dual_side: false,
        build: || qc(&["wwW1000", "W0W1000", "1WW1wW0", "WwWww00"]),
        metadata: &[],
    },
    Spec {
        name: "quasicyclic_30_20_4",
        summary: "linear quasicyclic, blocks 11100 | 10w00 | 11Ww0 | 1w1wW | 10w10 | 1w100",
        claim: claim(30, 20, 4, true),
        dual_side: false,
        build: || qc(&["11100", "10w00", "11Ww0", "1w1wW", "10w10", "1w100"]),
        metadata: &[],
    },
    Spec {
        name: "quasicyclic_40_30_4",
        summary: "linear quasicyclic, eight blocks of length 5",
        claim: claim(40, 30, 4, true),
        dual_side: false,
        build: || {
            qc(&[
                "001ww", "011w1", "0010W", "001w1", "00101", "1w1wW", "111Ww", "01w1W",
            ])
        },
        metadata: &[],
    },
    Spec {
        name: "note_i_12",
        summary: "a (12,2^8) linear code, also reachable as a u|u+v combination",
        claim: claim(12, 4, 4, true),
        dual_side: false,
        build: note_i_12,
        metadata: &[("aut_order", "720"), ("coordinate_transitive", "yes")],
    },
    Spec {
        name: "note_i_14",
        summary: "a (14,2^8) linear code",
        claim: claim(14, 6, 4, true),
        dual_side: false,
        build: note_i_14,
        metadata: &[("aut_order", "8064"), ("coordinate_transitive", "yes")],
    },
    Spec {
        name: "note_j_ovoid",
        summary: "the (17,2^8) two-weight code on the 17 points of an ovoid in PG(3,4)",
        claim: claim(17, 9, 4, true),
        dual_side: false,
        build: note_j_ovoid,
        metadata: &[
            ("aut_order", "48960"),
            ("own_weights", "0, 12, 16"),
        ],
    },
    Spec {
        name: "note_v",
        summary: "a (17,2^6) code found by random search",
        claim: claim(17, 11, 3, true),
        dual_side: false,
        build: note_v,
        metadata: &[("aut_order", "1")],
    },
    Spec {
        name: "indecomposable_4",
        summary: "the length-4 indecomposable self-dual code beyond the chain family",
        claim: claim(4, 0, 2, true),
        dual_side: false,
        build: indecomposable_4,
        metadata: &[],
    },
    Spec {
        name: "indecomposable_5a",
        summary: "first listed length-5 indecomposable self-dual code",
        claim: claim(5, 0, 2, true),
        dual_side: false,
        build: indecomposable_5a,
        metadata: &[],
    },
    Spec {
        name: "indecomposable_5b",
        summary: "second listed length-5 indecomposable self-dual code",
        claim: claim(5, 0, 2, true),
        dual_side: false,
        build: indecomposable_5b,
        metadata: &[],
    },
    Spec {
        name: "five_zero_three",
        summary: "the five-qubit stabilizer plus the all-ones row: a (5,2^5) distance-3 self-dual code",
        claim: claim(5, 0, 3, true),
        dual_side: false,
        build: five_zero_three,
        metadata: &[("unique", "yes")],
    },
    Spec {
        name: "hamming_21",
        summary: "dual of the GF(4) Hamming code of length 21 (the m = 3 simplex)",
        claim: claim(21, 15, 3, true),
        dual_side: false,
        build: || gf4_simplex(3),
        metadata: &[("linear", "yes")],
    },
    Spec {
        name: "hamming_85",
        summary: "dual of the GF(4) Hamming code of length 85 (the m = 4 simplex)",
        claim: claim(85, 77, 3, true),
        dual_side: false,
        build: || gf4_simplex(4),
        metadata: &[("linear", "yes")],
    },
];

/// All stable entry names, in catalog order.
pub fn names() -> Vec<&'static str> {
    SPECS.iter().map(|s| s.name).collect()
}

/// Builds the entry with the given name, or `None` if no such entry
/// exists. The returned entry is freshly built and not yet verified.
pub fn get(name: &str) -> Option<CatalogEntry> {
    SPECS.iter().find(|s| s.name == name).map(instantiate)
}

/// Builds every entry, in catalog order.
pub fn list() -> Vec<CatalogEntry> {
    SPECS.iter().map(instantiate).collect()
}

fn instantiate(spec: &Spec) -> CatalogEntry {
    CatalogEntry {
        name: spec.name,
        summary: spec.summary,
        claim: spec.claim,
        dual_side: spec.dual_side,
        code: (spec.build)(),
        verified: false,
        metadata: spec.metadata,
    }
}

/// Why a stored distance ceiling is better than the generic machinery.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExternalBoundKind {
    /// The ceiling itself is generic, but any code meeting it must be
    /// impure.
    ImpureOnly,
    /// A strengthened counting argument (beyond plain linear
    /// programming) lowers the ceiling; it applies to additive codes
    /// only, and the ceiling for nonadditive codes is one higher.
    RefinedCounting,
    /// The ceiling depends on the constraint that an additive code is
    /// either even or odd; without it the ceiling is one higher.
    ParityDependent,
}

/// A stored distance ceiling for one (n, k) cell that the generic
/// bound machinery cannot reproduce on its own.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ExternalBound {
    /// Length.
    pub n: usize,
    /// Logical dimension exponent.
    pub k: usize,
    /// The best known distance ceiling for additive codes at this cell.
    pub upper: usize,
    /// The nature of the refinement.
    pub kind: ExternalBoundKind,
}

/// The cells whose best known ceilings need refinements beyond the
/// machinery in [`crate::bounds`].
pub fn external_bounds() -> &'static [ExternalBound] {
    use ExternalBoundKind::*;
    const B: &[ExternalBound] = &[
        ExternalBound { n: 6, k: 1, upper: 3, kind: ImpureOnly },
        ExternalBound { n: 12, k: 1, upper: 5, kind: ImpureOnly },
        ExternalBound { n: 21, k: 7, upper: 6, kind: ImpureOnly },
        ExternalBound { n: 24, k: 1, upper: 9, kind: ImpureOnly },
        ExternalBound { n: 30, k: 1, upper: 11, kind: ImpureOnly },
        ExternalBound { n: 7, k: 0, upper: 3, kind: RefinedCounting },
        ExternalBound { n: 13, k: 0, upper: 5, kind: RefinedCounting },
        ExternalBound { n: 15, k: 4, upper: 4, kind: RefinedCounting },
        ExternalBound { n: 15, k: 7, upper: 3, kind: RefinedCounting },
        ExternalBound { n: 16, k: 8, upper: 3, kind: RefinedCounting },
        ExternalBound { n: 18, k: 12, upper: 2, kind: RefinedCounting },
        ExternalBound { n: 19, k: 13, upper: 2, kind: RefinedCounting },
        ExternalBound { n: 22, k: 14, upper: 3, kind: RefinedCounting },
        ExternalBound { n: 25, k: 0, upper: 9, kind: RefinedCounting },
        ExternalBound { n: 19, k: 8, upper: 4, kind: ParityDependent },
    ];
    B
}
