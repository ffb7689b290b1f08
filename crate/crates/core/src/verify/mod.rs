//! Executable verification of every law the model is built on.
//!
//! Each suite turns one cluster of defining equations into checks recorded in
//! a [`SuiteResult`]: the rewrite engine's confluence, the simplicial
//! identities on Γ, the sphere and the total space, the Dold–Kan round trip,
//! the loop-group laws, the twisting identities, horn filling, the pullback
//! comparison, the frozen golden tables, and the bundle-class invariant. A
//! final negative-control suite runs deliberately broken implementations
//! (see [`mutants`]) through the same detectors and fails if any escape.
//!
//! Suites are independent; [`run_all`] executes them on one thread each and
//! merges the results in a fixed order, so a report for a given seed and
//! bounds is byte-for-byte reproducible.

pub mod mutants;

use std::collections::BTreeMap;
use std::thread;

use crate::chain::ChainComplex;
use crate::error::Error;
use crate::gamma::{
    apply_word, gamma_basis, gamma_degeneracy, gamma_face, normalized_chains, GammaElement,
};
use crate::linalg::IntMat;
use crate::loop_group::{
    class_of, degree_invariant, fill_horn, is_moore_chain, loop_degeneracy, loop_face,
    symbol_generator_words, LoopWord,
};
use crate::operators::{DegeneracyWord, OperatorWord};
use crate::report::{Bounds, SuiteResult, VerificationReport};
use crate::sample::Sampler;
use crate::sphere::{s2_degeneracy, s2_face, s2_simplices, BaseSimplex};
use crate::twisted_product::{TotalSimplex, TwistedProduct};
use crate::twisting::{alpha, check_sphere_twisting, check_universal_twisting, eta, universal_zeta};
use crate::Result;

/// Every suite in the order it appears in a full report.
pub const SUITE_NAMES: [&str; 12] = [
    "operator-engine",
    "gamma-laws",
    "sphere-laws",
    "dold-kan",
    "loop-group",
    "twisting",
    "horn-filling",
    "twisted-product",
    "pullback-comparison",
    "golden-tables",
    "bundle-class",
    "negative-controls",
];

/// The suites whose checks are (mostly) randomized law instances; these are
/// the ones a full run drives past the thousand-check mark.
pub const LAW_SUITES: [&str; 6] = [
    "operator-engine",
    "gamma-laws",
    "sphere-laws",
    "loop-group",
    "twisting",
    "twisted-product",
];

type SuiteFn = fn(Bounds, u64) -> SuiteResult;

const SUITES: [(&str, SuiteFn); 12] = [
    ("operator-engine", suite_operator_engine),
    ("gamma-laws", suite_gamma_laws),
    ("sphere-laws", suite_sphere_laws),
    ("dold-kan", suite_dold_kan),
    ("loop-group", suite_loop_group),
    ("twisting", suite_twisting),
    ("horn-filling", suite_horn_filling),
    ("twisted-product", suite_twisted_product),
    ("pullback-comparison", suite_pullback_comparison),
    ("golden-tables", suite_golden_tables),
    ("bundle-class", suite_bundle_class_default),
    ("negative-controls", suite_negative_controls),
];

/// Run every suite concurrently and merge the results in the fixed
/// [`SUITE_NAMES`] order. Each suite derives its own sub-seed from `seed`, so
/// the report is a pure function of `(bounds, seed)`.
pub fn run_all(bounds: Bounds, seed: u64) -> VerificationReport {
    assert!(bounds.max_degree >= 2, "verification needs max_degree >= 2");
    assert!(bounds.samples >= 1, "verification needs samples >= 1");
    assert!(bounds.coeff_bound >= 1, "verification needs coeff_bound >= 1");
    let suites = thread::scope(|scope| {
        let handles: Vec<_> = SUITES
            .iter()
            .enumerate()
            .map(|(index, &(name, suite))| {
                let sub = suite_seed(seed, index as u64);
                (name, scope.spawn(move || suite(bounds, sub)))
            })
            .collect();
        handles
            .into_iter()
            .map(|(name, handle)| {
                let result = handle.join().expect("verification suite panicked");
                debug_assert_eq!(result.name, name);
                result
            })
            .collect()
    });
    VerificationReport {
        seed,
        bounds,
        suites,
    }
}

/// Just the deterministic golden-table suite, as its own report.
pub fn run_golden_tables() -> VerificationReport {
    let bounds = Bounds {
        max_degree: 7,
        samples: 0,
        coeff_bound: 5,
    };
    VerificationReport {
        seed: 0,
        bounds,
        suites: vec![suite_golden_tables(bounds, 0)],
    }
}

/// Just the bundle-class suite for a single class `m`, enumerating Moore
/// 2-cycles with coefficients bounded by `search_bound` (which must be ≥ 1).
pub fn run_bundle_class(class: i64, search_bound: i64) -> VerificationReport {
    assert!(search_bound >= 1, "search bound must be at least 1");
    let bounds = Bounds {
        max_degree: 2,
        samples: 0,
        coeff_bound: search_bound,
    };
    VerificationReport {
        seed: 0,
        bounds,
        suites: vec![bundle_class_checks(&[class], search_bound)],
    }
}

fn suite_seed(seed: u64, index: u64) -> u64 {
    seed ^ (index + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn check_eq<T: PartialEq>(
    result: &mut SuiteResult,
    law: &str,
    lhs: &Result<T>,
    rhs: &Result<T>,
    witness: impl FnOnce() -> String,
) {
    let ok = matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b);
    result.check(law, ok, witness);
}

fn law_complexes() -> Vec<ChainComplex> {
    vec![
        ChainComplex::sphere(2),
        ChainComplex::two_term(1, IntMat::from_rows(vec![vec![3]])).expect("valid complex"),
        ChainComplex::two_term(3, IntMat::from_rows(vec![vec![2, 0], vec![0, 3]]))
            .expect("valid complex"),
    ]
}

// ---------------------------------------------------------------------------
// operator-engine: canonical forms, idempotence, soundness, confluence
// ---------------------------------------------------------------------------

fn suite_operator_engine(bounds: Bounds, seed: u64) -> SuiteResult {
    let mut result = SuiteResult::new("operator-engine");
    let mut s = Sampler::new(seed, bounds);
    let oracles = law_complexes();
    for t in 0..bounds.samples {
        let source = s.degree(0);
        let len = s.count(6);
        let w = s.operator_word(source, len);
        let normal = match w.normalize() {
            Ok(n) => n,
            Err(e) => {
                result.check(
                    "operator: normalization is defined on every valid word",
                    false,
                    || format!("word `{w}` at degree {source}: {e}"),
                );
                continue;
            }
        };
        result.check(
            "operator: normal forms are canonical",
            normal.is_canonical(),
            || format!("word `{w}` at degree {source} normalized to non-canonical `{normal}`"),
        );
        result.check(
            "operator: normalization is idempotent",
            normal.normalize().as_ref() == Ok(&normal),
            || format!("normal form `{normal}` of `{w}` is not a fixed point"),
        );

        // Soundness: the word and its normal form act identically on Γ.
        let c = &oracles[t as usize % oracles.len()];
        let x = s.gamma_element(c, source);
        check_eq(
            &mut result,
            "operator: a word acts through its normal form",
            &apply_word(c, &w, &x),
            &apply_word(c, &normal, &x),
            || format!("word `{w}` at degree {source} on {x}"),
        );

        // Confluence with composition: normalizing the pieces first cannot
        // change the normal form of the composite.
        let outer_len = s.count(4);
        let v = s.operator_word(w.target_degree(), outer_len);
        let direct = v.compose(&w).and_then(|vw| vw.normalize());
        let pieces = v
            .normalize()
            .and_then(|nv| nv.compose(&normal))
            .and_then(|vw| vw.normalize());
        check_eq(
            &mut result,
            "operator: normalization commutes with composition",
            &direct,
            &pieces,
            || format!("outer `{v}`, inner `{w}` at degree {source}"),
        );
    }
    result
}

// ---------------------------------------------------------------------------
// gamma-laws: simplicial identities, additivity and linearity on Γ(C)
// ---------------------------------------------------------------------------

fn suite_gamma_laws(bounds: Bounds, seed: u64) -> SuiteResult {
    let mut result = SuiteResult::new("gamma-laws");
    let mut s = Sampler::new(seed, bounds);
    let complexes = law_complexes();
    for _ in 0..bounds.samples {
        let c = s.pick(&complexes);
        let n = s.degree(2);
        let x = s.gamma_element(c, n);

        // d_i d_j = d_{j-1} d_i for i < j.
        let j = 1 + s.count(n as usize - 1) as u32;
        let i = s.count(j as usize - 1) as u32;
        check_eq(
            &mut result,
            "gamma: d_i d_j = d_{j-1} d_i (i < j)",
            &gamma_face(c, j, &x).and_then(|y| gamma_face(c, i, &y)),
            &gamma_face(c, i, &x).and_then(|y| gamma_face(c, j - 1, &y)),
            || format!("i = {i}, j = {j}, x = {x}"),
        );

        // s_i s_j = s_{j+1} s_i for i <= j.
        let j = s.count(n as usize) as u32;
        let i = s.count(j as usize) as u32;
        check_eq(
            &mut result,
            "gamma: s_i s_j = s_{j+1} s_i (i <= j)",
            &gamma_degeneracy(c, j, &x).and_then(|y| gamma_degeneracy(c, i, &y)),
            &gamma_degeneracy(c, i, &x).and_then(|y| gamma_degeneracy(c, j + 1, &y)),
            || format!("i = {i}, j = {j}, x = {x}"),
        );

        // The mixed identity, all three cases.
        let j = s.count(n as usize) as u32;
        let i = s.count(n as usize + 1) as u32;
        let lhs = gamma_degeneracy(c, j, &x).and_then(|y| gamma_face(c, i, &y));
        let (law, rhs) = if i < j {
            (
                "gamma: d_i s_j = s_{j-1} d_i (i < j)",
                gamma_face(c, i, &x).and_then(|y| gamma_degeneracy(c, j - 1, &y)),
            )
        } else if i == j || i == j + 1 {
            ("gamma: d_i s_j = id (i = j, j+1)", Ok(x.clone()))
        } else {
            (
                "gamma: d_i s_j = s_j d_{i-1} (i > j+1)",
                gamma_face(c, i - 1, &x).and_then(|y| gamma_degeneracy(c, j, &y)),
            )
        };
        check_eq(&mut result, law, &lhs, &rhs, || {
            format!("i = {i}, j = {j}, x = {x}")
        });

        // Faces and degeneracies are additive and commute with scaling.
        let y = s.gamma_element(c, n);
        let k = s.coefficient();
        let i = s.count(n as usize) as u32;
        check_eq(
            &mut result,
            "gamma: d_i (x + y) = d_i x + d_i y",
            &x.add(&y).and_then(|sum| gamma_face(c, i, &sum)),
            &gamma_face(c, i, &x).and_then(|dx| gamma_face(c, i, &y).and_then(|dy| dx.add(&dy))),
            || format!("i = {i}, x = {x}, y = {y}"),
        );
        check_eq(
            &mut result,
            "gamma: s_i (x + y) = s_i x + s_i y",
            &x.add(&y).and_then(|sum| gamma_degeneracy(c, i, &sum)),
            &gamma_degeneracy(c, i, &x)
                .and_then(|sx| gamma_degeneracy(c, i, &y).and_then(|sy| sx.add(&sy))),
            || format!("i = {i}, x = {x}, y = {y}"),
        );
        check_eq(
            &mut result,
            "gamma: d_i (k x) = k d_i x",
            &gamma_face(c, i, &x.scale(k)),
            &gamma_face(c, i, &x).map(|dx| dx.scale(k)),
            || format!("i = {i}, k = {k}, x = {x}"),
        );
    }
    result
}

// ---------------------------------------------------------------------------
// sphere-laws: identities on the S² model, exhaustive then randomized
// ---------------------------------------------------------------------------

fn apply_word_s2(w: &OperatorWord, b: &BaseSimplex) -> Result<BaseSimplex> {
    use crate::operators::OpKind;
    let mut cur = b.clone();
    for op in w.ops().iter().rev() {
        cur = match op.kind {
            OpKind::Face => s2_face(op.index, &cur)?,
            OpKind::Degeneracy => s2_degeneracy(op.index, &cur)?,
        };
    }
    Ok(cur)
}

fn suite_sphere_laws(bounds: Bounds, seed: u64) -> SuiteResult {
    let mut result = SuiteResult::new("sphere-laws");
    let mut s = Sampler::new(seed, bounds);

    // Exhaustive simplicial identities on every simplex of low degree.
    for n in 0..=bounds.max_degree.min(6) {
        for b in s2_simplices(n) {
            if n >= 2 {
                for j in 1..=n {
                    for i in 0..j {
                        check_eq(
                            &mut result,
                            "sphere: d_i d_j = d_{j-1} d_i (i < j)",
                            &s2_face(j, &b).and_then(|y| s2_face(i, &y)),
                            &s2_face(i, &b).and_then(|y| s2_face(j - 1, &y)),
                            || format!("i = {i}, j = {j}, b = {b}"),
                        );
                    }
                }
            }
            for j in 0..=n {
                for i in 0..=j {
                    check_eq(
                        &mut result,
                        "sphere: s_i s_j = s_{j+1} s_i (i <= j)",
                        &s2_degeneracy(j, &b).and_then(|y| s2_degeneracy(i, &y)),
                        &s2_degeneracy(i, &b).and_then(|y| s2_degeneracy(j + 1, &y)),
                        || format!("i = {i}, j = {j}, b = {b}"),
                    );
                }
                for i in 0..=n + 1 {
                    let lhs = s2_degeneracy(j, &b).and_then(|y| s2_face(i, &y));
                    let (law, rhs) = if i < j {
                        (
                            "sphere: d_i s_j = s_{j-1} d_i (i < j)",
                            s2_face(i, &b).and_then(|y| s2_degeneracy(j - 1, &y)),
                        )
                    } else if i == j || i == j + 1 {
                        ("sphere: d_i s_j = id (i = j, j+1)", Ok(b.clone()))
                    } else {
                        (
                            "sphere: d_i s_j = s_j d_{i-1} (i > j+1)",
                            s2_face(i - 1, &b).and_then(|y| s2_degeneracy(j, &y)),
                        )
                    };
                    check_eq(&mut result, law, &lhs, &rhs, || {
                        format!("i = {i}, j = {j}, b = {b}")
                    });
                }
            }
        }
    }

    // Randomized: operator words act through their normal forms.
    for _ in 0..bounds.samples {
        let source = s.degree(0);
        let len = s.count(6);
        let w = s.operator_word(source, len);
        let b = s.base_simplex(source);
        check_eq(
            &mut result,
            "sphere: a word acts through its normal form",
            &apply_word_s2(&w, &b),
            &w.normalize().and_then(|n| apply_word_s2(&n, &b)),
            || format!("word `{w}` at degree {source} on {b}"),
        );
    }
    result
}

// ---------------------------------------------------------------------------
// dold-kan: normalized chains invert Γ, with the right ranks
// ---------------------------------------------------------------------------

fn suite_dold_kan(_bounds: Bounds, _seed: u64) -> SuiteResult {
    let mut result = SuiteResult::new("dold-kan");

    let complexes = [
        ChainComplex::sphere(2),
        ChainComplex::sphere(0),
        ChainComplex::two_term(1, IntMat::from_rows(vec![vec![1]])).expect("valid"),
        ChainComplex::two_term(2, IntMat::from_rows(vec![vec![3]])).expect("valid"),
        ChainComplex::two_term(3, IntMat::from_rows(vec![vec![2, 0], vec![0, 3]])).expect("valid"),
        ChainComplex::two_term(4, IntMat::from_rows(vec![vec![1, 1]])).expect("valid"),
    ];
    for c in &complexes {
        let top = c.top_degree().unwrap_or(0);
        let recovered = normalized_chains(c, top + 2);
        result.check(
            "dold-kan: normalized chains of Γ(C) recover C",
            &recovered == c,
            || format!("source ranks {:?}, recovered ranks {:?}", c.ranks(), recovered.ranks()),
        );
    }

    // The sphere complex stays a sphere through degree 8: rank 1 in degree 2,
    // rank 0 elsewhere, and no nonzero differentials.
    let n = normalized_chains(&ChainComplex::sphere(2), 8);
    result.check(
        "dold-kan: N(ΓZ(2)) has rank profile (0, 0, 1, 0, …)",
        n.ranks().iter().all(|(&d, &r)| r == usize::from(d == 2)),
        || format!("ranks {:?}", n.ranks()),
    );
    result.check(
        "dold-kan: N(ΓZ(2)) has zero differentials",
        n.differentials().values().all(IntMat::is_zero),
        || format!("differentials {:?}", n.differentials()),
    );

    // Truncating below the generator leaves nothing.
    let truncated = normalized_chains(&ChainComplex::sphere(2), 1);
    result.check(
        "dold-kan: truncation below the generator is empty",
        truncated.ranks().values().all(|&r| r == 0),
        || format!("ranks {:?}", truncated.ranks()),
    );

    // Γ_n(Z(2)) has one symbol per degeneracy word from degree 2, i.e.
    // C(n, n-2) of them.
    let c2 = ChainComplex::sphere(2);
    for n in 0..=12u32 {
        let expected = binomial(n, n.saturating_sub(2));
        let expected = if n < 2 { 0 } else { expected };
        result.check(
            "dold-kan: rank of Γ_n(Z(2)) is C(n, n-2)",
            gamma_basis(&c2, n).len() == expected,
            || format!("n = {n}: got {}, want {expected}", gamma_basis(&c2, n).len()),
        );
    }
    result
}

fn binomial(n: u32, k: u32) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc as usize
}

// ---------------------------------------------------------------------------
// loop-group: group laws, homomorphism laws, simplicial identities
// ---------------------------------------------------------------------------

fn suite_loop_group(bounds: Bounds, seed: u64) -> SuiteResult {
    let mut result = SuiteResult::new("loop-group");
    let mut s = Sampler::new(seed, bounds);
    let c = ChainComplex::sphere(2);
    for _ in 0..bounds.samples {
        let n = s.degree(0);
        let u = s.loop_word(&c, n);
        let v = s.loop_word(&c, n);
        let w = s.loop_word(&c, n);

        check_eq(
            &mut result,
            "loop: (u v) w = u (v w)",
            &u.multiply(&v).and_then(|uv| uv.multiply(&w)),
            &v.multiply(&w).and_then(|vw| u.multiply(&vw)),
            || format!("u = {u}, v = {v}, w = {w}"),
        );
        result.check(
            "loop: u u^-1 = e",
            u.multiply(&u.invert()).map(|p| p.is_identity()) == Ok(true),
            || format!("u = {u}"),
        );

        // Faces and degeneracies are group homomorphisms.
        if n >= 1 {
            let i = s.count(n as usize) as u32;
            check_eq(
                &mut result,
                "loop: d_i (u v) = d_i u · d_i v",
                &u.multiply(&v).and_then(|uv| loop_face(&c, i, &uv)),
                &loop_face(&c, i, &u).and_then(|du| {
                    loop_face(&c, i, &v).and_then(|dv| du.multiply(&dv))
                }),
                || format!("i = {i}, u = {u}, v = {v}"),
            );
        }
        let i = s.count(n as usize) as u32;
        check_eq(
            &mut result,
            "loop: s_i (u v) = s_i u · s_i v",
            &u.multiply(&v).and_then(|uv| loop_degeneracy(&c, i, &uv)),
            &loop_degeneracy(&c, i, &u)
                .and_then(|su| loop_degeneracy(&c, i, &v).and_then(|sv| su.multiply(&sv))),
            || format!("i = {i}, u = {u}, v = {v}"),
        );

        // A random simplicial identity instance on words.
        if n >= 2 {
            let j = 1 + s.count(n as usize - 1) as u32;
            let i = s.count(j as usize - 1) as u32;
            check_eq(
                &mut result,
                "loop: d_i d_j = d_{j-1} d_i (i < j)",
                &loop_face(&c, j, &u).and_then(|y| loop_face(&c, i, &y)),
                &loop_face(&c, i, &u).and_then(|y| loop_face(&c, j - 1, &y)),
                || format!("i = {i}, j = {j}, u = {u}"),
            );
        }
        let j = s.count(n as usize) as u32;
        let i = s.count(j as usize) as u32;
        check_eq(
            &mut result,
            "loop: s_i s_j = s_{j+1} s_i (i <= j)",
            &loop_degeneracy(&c, j, &u).and_then(|y| loop_degeneracy(&c, i, &y)),
            &loop_degeneracy(&c, i, &u).and_then(|y| loop_degeneracy(&c, j + 1, &y)),
            || format!("i = {i}, j = {j}, u = {u}"),
        );

        // ζ collapses s_0-images to the identity.
        let x = s.gamma_element(&c, n + 1);
        result.check(
            "loop: ζ(s_0 x) = e",
            gamma_degeneracy(&c, 0, &x)
                .and_then(|s0x| class_of(&s0x))
                .map(|g| g.is_identity())
                == Ok(true),
            || format!("x = {x}"),
        );

        // The winding number is additive and conjugation-invariant in
        // degree 1.
        let a = s.loop_word(&c, 1);
        let b = s.loop_word(&c, 1);
        result.check(
            "loop: deg(a b) = deg(a) + deg(b)",
            a.multiply(&b).and_then(|ab| degree_invariant(&ab))
                == degree_invariant(&a).and_then(|da| degree_invariant(&b).map(|db| da + db)),
            || format!("a = {a}, b = {b}"),
        );
        result.check(
            "loop: deg(b a b^-1) = deg(a)",
            b.multiply(&a).and_then(|ba| ba.multiply(&b.invert())).and_then(|c_| degree_invariant(&c_))
                == degree_invariant(&a),
            || format!("a = {a}, b = {b}"),
        );
    }
    result
}

// ---------------------------------------------------------------------------
// twisting: the four identities for η_m (exhaustive) and ζ (sampled)
// ---------------------------------------------------------------------------

fn suite_twisting(bounds: Bounds, seed: u64) -> SuiteResult {
    let mut result = SuiteResult::new("twisting");
    let mut s = Sampler::new(seed, bounds);
    for m in -2..=2i64 {
        check_sphere_twisting(|b| eta(m, b), bounds.max_degree, &mut result);
    }
    let c = ChainComplex::sphere(2);
    let elements: Vec<GammaElement> = (0..bounds.samples)
        .map(|_| {
            let n = s.degree(1);
            s.gamma_element(&c, n)
        })
        .collect();
    check_universal_twisting(universal_zeta, &c, &elements, &mut result);
    result
}

// ---------------------------------------------------------------------------
// horn-filling: every compatible horn fills in the group and in the bundle
// ---------------------------------------------------------------------------

fn suite_horn_filling(bounds: Bounds, seed: u64) -> SuiteResult {
    let mut result = SuiteResult::new("horn-filling");
    let mut s = Sampler::new(seed, bounds);
    let c = ChainComplex::sphere(2);
    let per_position = (bounds.samples / 10).max(100);

    for n in 1..=4u32 {
        for k in 0..=n {
            for _ in 0..per_position {
                // A compatible horn: the faces of an actual word.
                let u = s.loop_word(&c, n);
                let horn = horn_of(&c, &u, k).expect("faces of a word are defined");
                result.check(
                    "horn: every compatible loop-group horn fills",
                    fill_horn(&c, n, k, &horn).is_ok(),
                    || format!("n = {n}, k = {k}, horn from u = {u}"),
                );

                // The same in the total space, over the projected filler.
                let class = s.coefficient();
                let bundle = TwistedProduct::new(class);
                let t = s.total_simplex(&c, n);
                let mut faces = BTreeMap::new();
                for i in 0..=n {
                    if i != k {
                        faces.insert(i, bundle.face(i, &t).expect("face of a simplex"));
                    }
                }
                result.check(
                    "horn: every compatible total-space horn lifts over a base filler",
                    bundle.lift_horn(n, k, &faces, t.base()).is_ok(),
                    || format!("class {class}, n = {n}, k = {k}, horn from t = ({}, {})", t.fiber(), t.base()),
                );
            }
        }
    }

    // Incompatible faces are rejected before any filling happens.
    let u = class_of(&GammaElement::sphere_symbol(&[2, 1], 1).expect("valid"))
        .expect("not an s_0-image");
    let mut horn = horn_of(&c, &u, 1).expect("faces of a word are defined");
    let bump = class_of(&GammaElement::sphere_symbol(&[1], 1).expect("valid"))
        .expect("not an s_0-image");
    let corrupted = horn[&0].multiply(&bump).expect("same degree");
    horn.insert(0, corrupted);
    result.check(
        "horn: incompatible faces are rejected",
        matches!(fill_horn(&c, 3, 1, &horn), Err(Error::IncompatibleHorn { .. })),
        || "corrupted Λ^1 horn in degree 3 was not rejected".to_string(),
    );

    // Shape violations are rejected: a missing face, and a face at the hole.
    let full = horn_of(&c, &u, 2).expect("faces of a word are defined");
    let mut missing = full.clone();
    missing.remove(&0);
    result.check(
        "horn: a horn with a missing face is rejected",
        matches!(fill_horn(&c, 3, 2, &missing), Err(Error::MalformedHorn { .. })),
        || "horn with face 0 missing was accepted".to_string(),
    );
    let mut overfull = full.clone();
    overfull.insert(2, full[&0].clone());
    result.check(
        "horn: a horn providing the missing face is rejected",
        matches!(fill_horn(&c, 3, 2, &overfull), Err(Error::MalformedHorn { .. })),
        || "horn providing face k was accepted".to_string(),
    );

    // A lift over the wrong base filler is rejected.
    let bundle = TwistedProduct::hopf();
    let base = s2_degeneracy(1, &BaseSimplex::two_cell()).expect("s_1 y");
    let t = TotalSimplex::over(base);
    let mut faces = BTreeMap::new();
    for i in 0..=3u32 {
        if i != 1 {
            faces.insert(i, bundle.face(i, &t).expect("face of a simplex"));
        }
    }
    result.check(
        "horn: a lift over the wrong base filler is rejected",
        matches!(
            bundle.lift_horn(3, 1, &faces, &BaseSimplex::degenerate_point(3)),
            Err(Error::ProjectionMismatch { .. })
        ),
        || "lift over a mismatched base filler was accepted".to_string(),
    );

    result
}

fn horn_of(c: &ChainComplex, u: &LoopWord, k: u32) -> Result<BTreeMap<u32, LoopWord>> {
    let mut horn = BTreeMap::new();
    for i in 0..=u.degree() {
        if i != k {
            horn.insert(i, loop_face(c, i, u)?);
        }
    }
    Ok(horn)
}

// ---------------------------------------------------------------------------
// twisted-product: the total space is simplicial, the action commutes
// ---------------------------------------------------------------------------

fn suite_twisted_product(bounds: Bounds, seed: u64) -> SuiteResult {
    let mut result = SuiteResult::new("twisted-product");
    let mut s = Sampler::new(seed, bounds);
    let c = ChainComplex::sphere(2);
    let bundles: Vec<TwistedProduct> = (-2..=2).map(TwistedProduct::new).collect();
    for t in 0..bounds.samples {
        let bundle = &bundles[t as usize % bundles.len()];
        let n = s.degree(0);
        let x = s.total_simplex(&c, n);

        if n >= 2 {
            let j = 1 + s.count(n as usize - 1) as u32;
            let i = s.count(j as usize - 1) as u32;
            check_eq(
                &mut result,
                "total: d_i d_j = d_{j-1} d_i (i < j)",
                &bundle.face(j, &x).and_then(|y| bundle.face(i, &y)),
                &bundle.face(i, &x).and_then(|y| bundle.face(j - 1, &y)),
                || format!("class {}, i = {i}, j = {j}, x = ({}, {})", bundle.class(), x.fiber(), x.base()),
            );
        }
        let j = s.count(n as usize) as u32;
        let i = s.count(j as usize) as u32;
        check_eq(
            &mut result,
            "total: s_i s_j = s_{j+1} s_i (i <= j)",
            &bundle.degeneracy(j, &x).and_then(|y| bundle.degeneracy(i, &y)),
            &bundle.degeneracy(i, &x).and_then(|y| bundle.degeneracy(j + 1, &y)),
            || format!("class {}, i = {i}, j = {j}, x = ({}, {})", bundle.class(), x.fiber(), x.base()),
        );
        let j = s.count(n as usize) as u32;
        let i = s.count(n as usize + 1) as u32;
        let lhs = bundle.degeneracy(j, &x).and_then(|y| bundle.face(i, &y));
        let (law, rhs) = if i < j {
            (
                "total: d_i s_j = s_{j-1} d_i (i < j)",
                bundle.face(i, &x).and_then(|y| bundle.degeneracy(j - 1, &y)),
            )
        } else if i == j || i == j + 1 {
            ("total: d_i s_j = id (i = j, j+1)", Ok(x.clone()))
        } else {
            (
                "total: d_i s_j = s_j d_{i-1} (i > j+1)",
                bundle.face(i - 1, &x).and_then(|y| bundle.degeneracy(j, &y)),
            )
        };
        check_eq(&mut result, law, &lhs, &rhs, || {
            format!("class {}, i = {i}, j = {j}, x = ({}, {})", bundle.class(), x.fiber(), x.base())
        });

        // The right action commutes with faces and degeneracies, and the
        // projection forgets it.
        let h = s.loop_word(&c, n);
        if n >= 1 {
            let i = s.count(n as usize) as u32;
            check_eq(
                &mut result,
                "total: d_i (x · h) = d_i x · d_i h",
                &bundle.act(&x, &h).and_then(|xh| bundle.face(i, &xh)),
                &bundle.face(i, &x).and_then(|dx| {
                    loop_face(&c, i, &h).and_then(|dh| bundle.act(&dx, &dh))
                }),
                || format!("class {}, i = {i}, x = ({}, {}), h = {h}", bundle.class(), x.fiber(), x.base()),
            );
        }
        let i = s.count(n as usize) as u32;
        check_eq(
            &mut result,
            "total: s_i (x · h) = s_i x · s_i h",
            &bundle.act(&x, &h).and_then(|xh| bundle.degeneracy(i, &xh)),
            &bundle.degeneracy(i, &x).and_then(|sx| {
                loop_degeneracy(&c, i, &h).and_then(|sh| bundle.act(&sx, &sh))
            }),
            || format!("class {}, i = {i}, x = ({}, {}), h = {h}", bundle.class(), x.fiber(), x.base()),
        );
        result.check(
            "total: the projection is constant on orbits",
            bundle.act(&x, &h).map(|xh| bundle.project(&xh)) == Ok(bundle.project(&x)),
            || format!("class {}, x = ({}, {}), h = {h}", bundle.class(), x.fiber(), x.base()),
        );
    }
    result
}

// ---------------------------------------------------------------------------
// pullback-comparison: the map into the universal bundle is simplicial
// ---------------------------------------------------------------------------

fn suite_pullback_comparison(bounds: Bounds, seed: u64) -> SuiteResult {
    let mut result = SuiteResult::new("pullback-comparison");
    let mut s = Sampler::new(seed, bounds);
    let c = ChainComplex::sphere(2);
    let bundles: Vec<TwistedProduct> = (-2..=2).map(TwistedProduct::new).collect();
    for t in 0..bounds.samples {
        let bundle = &bundles[t as usize % bundles.len()];
        let universal = bundle.universal();
        let n = s.degree(0);
        let x = s.total_simplex(&c, n);
        let u = bundle.to_universal(&x);

        if n >= 1 {
            let i = s.count(n as usize) as u32;
            check_eq(
                &mut result,
                "pullback: to_universal commutes with d_i",
                &universal.face(i, &u),
                &bundle.face(i, &x).map(|y| bundle.to_universal(&y)),
                || format!("class {}, i = {i}, x = ({}, {})", bundle.class(), x.fiber(), x.base()),
            );
        }
        let i = s.count(n as usize) as u32;
        check_eq(
            &mut result,
            "pullback: to_universal commutes with s_i",
            &universal.degeneracy(i, &u),
            &bundle.degeneracy(i, &x).map(|y| bundle.to_universal(&y)),
            || format!("class {}, i = {i}, x = ({}, {})", bundle.class(), x.fiber(), x.base()),
        );
        let h = s.loop_word(&c, n);
        check_eq(
            &mut result,
            "pullback: to_universal commutes with the action",
            &universal.act(&u, &h),
            &bundle.act(&x, &h).map(|y| bundle.to_universal(&y)),
            || format!("class {}, x = ({}, {}), h = {h}", bundle.class(), x.fiber(), x.base()),
        );

        // The comparison map classifies the twist: ζ ∘ α = η_m.
        let base_degree = s.degree(1);
        let b = s.base_simplex(base_degree);
        check_eq(
            &mut result,
            "pullback: ζ(α(b)) = η(b)",
            &universal_zeta(&alpha(bundle.class(), &b)),
            &eta(bundle.class(), &b),
            || format!("class {}, b = {b}", bundle.class()),
        );
    }
    result
}

// ---------------------------------------------------------------------------
// golden-tables: frozen values of the model's published displays
// ---------------------------------------------------------------------------

/// The degree-three face and degeneracy tables of Γ(Z(2)): 12 face equalities
/// and 12 degeneracy equalities, checked for z ∈ {1, −2, 5} — 72 checks.
pub fn degree_three_table_checks(result: &mut SuiteResult) {
    let c = ChainComplex::sphere(2);
    for z in [1i64, -2, 5] {
        let sym = |indices: &[u32]| {
            GammaElement::sphere_symbol(indices, z).expect("valid symbol")
        };
        let chain = GammaElement::from_chain(2, vec![z]);
        let zero = GammaElement::zero(2);

        // Faces d_i(σ_j z): each row lists d_0, d_1, d_2, d_3.
        let face_rows: [(&[u32], [&GammaElement; 4]); 3] = [
            (&[0], [&chain, &chain, &zero, &zero]),
            (&[1], [&zero, &chain, &chain, &zero]),
            (&[2], [&zero, &zero, &chain, &chain]),
        ];
        for (indices, expected) in face_rows {
            let x = sym(indices);
            for (i, want) in expected.into_iter().enumerate() {
                result.check(
                    "golden: degree-three face table of Γ(Z(2))",
                    gamma_face(&c, i as u32, &x).as_ref() == Ok(want),
                    || format!("z = {z}, d_{i} of {x}"),
                );
            }
        }

        // Degeneracies s_i(σ_j z): each row lists the canonical two-index
        // words for s_0, s_1, s_2, s_3.
        let degeneracy_rows: [(&[u32], [[u32; 2]; 4]); 3] = [
            (&[0], [[1, 0], [1, 0], [2, 0], [3, 0]]),
            (&[1], [[2, 0], [2, 1], [2, 1], [3, 1]]),
            (&[2], [[3, 0], [3, 1], [3, 2], [3, 2]]),
        ];
        for (indices, expected) in degeneracy_rows {
            let x = sym(indices);
            for (i, word) in expected.into_iter().enumerate() {
                let want = GammaElement::sphere_symbol(&word, z).expect("valid symbol");
                result.check(
                    "golden: degree-three degeneracy table of Γ(Z(2))",
                    gamma_degeneracy(&c, i as u32, &x).as_ref() == Ok(&want),
                    || format!("z = {z}, s_{i} of {x}"),
                );
            }
        }
    }
}

/// The eight published values of the Hopf twisting η, plus the closed
/// formula on every base simplex of degree ≤ 7 (for classes 1, 2 and −1).
pub fn eta_table_checks(result: &mut SuiteResult) {
    let y = |indices: &[u32]| {
        BaseSimplex::from_parts(
            crate::sphere::Cell::TwoCell,
            DegeneracyWord::from_descending(indices.to_vec()).expect("descending"),
        )
        .expect("valid simplex")
    };
    let zeta = |indices: &[u32], m: i64| {
        class_of(&GammaElement::sphere_symbol(indices, m).expect("valid symbol"))
            .expect("not an s_0-image")
    };

    // The table, row by row, for the Hopf class m = 1.
    let expect = |label: &str, b: &BaseSimplex, want: &LoopWord, result: &mut SuiteResult| {
        result.check("golden: η value table", eta(1, b).as_ref() == Ok(want), || {
            format!("row {label}: η({b})")
        });
    };
    let e2 = LoopWord::identity(2);
    let e3 = LoopWord::identity(3);
    expect("η_2(y)", &BaseSimplex::two_cell(), &zeta(&[], 1), result);
    expect("η_3(s_1 y)", &y(&[1]), &zeta(&[1], 1), result);
    expect("η_3(s_2 y)", &y(&[2]), &zeta(&[2], 1), result);
    expect("η_3(s_0 y)", &y(&[0]), &e2, result);
    expect("η_4(s_2 s_1 y)", &y(&[2, 1]), &zeta(&[2, 1], 1), result);
    expect("η_4(s_3 s_2 y)", &y(&[3, 2]), &zeta(&[3, 2], 1), result);
    expect("η_4(s_3 s_1 y)", &y(&[3, 1]), &zeta(&[3, 1], 1), result);
    for i in 0..4u32 {
        expect(
            "η_4(s_i s_0 y)",
            &s2_degeneracy(i, &y(&[0])).expect("in range"),
            &e3,
            result,
        );
    }
    result.check(
        "golden: η value table",
        eta(1, &BaseSimplex::degenerate_point(1)).map(|g| g.is_identity()) == Ok(true),
        || "row η_1(s_0 *)".to_string(),
    );

    // The closed formula on every simplex of degree ≤ 7: degenerate points
    // and s_0-images vanish, and s_J y goes to ζ(σ_J (m z)).
    for m in [1i64, 2, -1] {
        for n in 1..=7u32 {
            for b in s2_simplices(n) {
                let expected = if b.is_degenerate() && b.cell() == crate::sphere::Cell::Basepoint {
                    LoopWord::identity(n - 1)
                } else if b.is_s0_image() {
                    LoopWord::identity(n - 1)
                } else {
                    zeta(b.word().indices(), m)
                };
                result.check(
                    "golden: η matches its closed formula",
                    eta(m, &b).as_ref() == Ok(&expected),
                    || format!("m = {m}, b = {b}"),
                );
            }
        }
    }
}

fn suite_golden_tables(_bounds: Bounds, _seed: u64) -> SuiteResult {
    let mut result = SuiteResult::new("golden-tables");
    let c = ChainComplex::sphere(2);

    degree_three_table_checks(&mut result);
    eta_table_checks(&mut result);

    // Free generators of the loop group over the sphere: the published sets
    // through degree 4, and the count n afterwards.
    let word_sets: [&[&[u32]]; 4] = [
        &[&[]],
        &[&[1], &[2]],
        &[&[2, 1], &[3, 1], &[3, 2]],
        &[&[3, 2, 1], &[4, 2, 1], &[4, 3, 1], &[4, 3, 2]],
    ];
    for (n, expected) in (1u32..=4).zip(word_sets) {
        let want: Vec<DegeneracyWord> = expected
            .iter()
            .map(|w| DegeneracyWord::from_descending(w.to_vec()).expect("descending"))
            .collect();
        result.check(
            "golden: single-symbol generator words of the loop group",
            symbol_generator_words(n) == want,
            || format!("degree {n}: got {:?}", symbol_generator_words(n)),
        );
    }
    for n in 1..=8u32 {
        result.check(
            "golden: the loop group has n single-symbol generators in degree n",
            symbol_generator_words(n).len() == n as usize,
            || format!("degree {n}: got {}", symbol_generator_words(n).len()),
        );
    }

    // The zeroth face of the unit over the 2-cell exposes the twist.
    for m in [0i64, 1, -1, 2] {
        let bundle = TwistedProduct::new(m);
        let unit = TotalSimplex::over(BaseSimplex::two_cell());
        let expected_fiber = if m == 0 {
            LoopWord::identity(1)
        } else {
            class_of(&GammaElement::from_chain(2, vec![m])).expect("not an s_0-image")
        };
        let got = bundle.face(0, &unit);
        result.check(
            "golden: ∂_0(e, y) = (η(y), s_0 *)",
            got.as_ref().map(|t| (t.fiber(), t.base()))
                == Ok((&expected_fiber, &BaseSimplex::degenerate_point(1))),
            || format!("class {m}"),
        );
    }

    // Winding numbers of explicit words.
    let one = class_of(&GammaElement::from_chain(2, vec![1])).expect("generator");
    let three = class_of(&GammaElement::from_chain(2, vec![3])).expect("generator");
    result.check(
        "golden: deg(1̄) = 1",
        degree_invariant(&one) == Ok(1),
        || "the generator has winding number 1".to_string(),
    );
    result.check(
        "golden: deg(3̄ · 1̄^-1) = 2",
        three
            .multiply(&one.invert())
            .and_then(|w| degree_invariant(&w))
            == Ok(2),
        || "3̄ · 1̄^-1 has winding number 2".to_string(),
    );

    // Horn fillers of the two published horns, and of all-identity horns.
    let zeta1 = class_of(&GammaElement::from_chain(2, vec![1])).expect("generator");
    let mut horn = BTreeMap::new();
    horn.insert(1u32, zeta1.clone());
    horn.insert(2u32, LoopWord::identity(1));
    result.check(
        "golden: the Λ^0 horn {d_1 = 1̄, d_2 = e} fills with ζ(σ_1 1)",
        fill_horn(&c, 2, 0, &horn).as_ref()
            == Ok(&class_of(&GammaElement::sphere_symbol(&[1], 1).expect("valid"))
                .expect("not an s_0-image")),
        || "sweep produced a different filler".to_string(),
    );
    let mut horn = BTreeMap::new();
    horn.insert(0u32, LoopWord::identity(1));
    horn.insert(1u32, zeta1);
    result.check(
        "golden: the Λ^2 horn {d_0 = e, d_1 = 1̄} fills with ζ(σ_2 1)",
        fill_horn(&c, 2, 2, &horn).as_ref()
            == Ok(&class_of(&GammaElement::sphere_symbol(&[2], 1).expect("valid"))
                .expect("not an s_0-image")),
        || "sweep produced a different filler".to_string(),
    );
    for n in 1..=4u32 {
        for k in 0..=n {
            let mut horn = BTreeMap::new();
            for i in 0..=n {
                if i != k {
                    horn.insert(i, LoopWord::identity(n - 1));
                }
            }
            result.check(
                "golden: the all-identity horn fills with the identity",
                fill_horn(&c, n, k, &horn).map(|u| u.is_identity()) == Ok(true),
                || format!("n = {n}, k = {k}"),
            );
        }
    }

    // The universal twisting on explicit elements.
    result.check(
        "golden: ζ(1 ∈ Γ_2) is the generator 1̄",
        universal_zeta(&GammaElement::from_chain(2, vec![1])).as_ref()
            == Ok(&class_of(&GammaElement::from_chain(2, vec![1])).expect("generator")),
        || "ζ of the degree-2 generator".to_string(),
    );
    result.check(
        "golden: ζ(σ_0 2) = e",
        universal_zeta(&GammaElement::sphere_symbol(&[0], 2).expect("valid"))
            .map(|g| g.is_identity())
            == Ok(true),
        || "ζ of an s_0-image".to_string(),
    );

    // The classifying map α on explicit simplices.
    result.check(
        "golden: α(m, y) = m · z",
        (-3..=3i64).all(|m| alpha(m, &BaseSimplex::two_cell()) == GammaElement::from_chain(2, vec![m])),
        || "α on the 2-cell".to_string(),
    );
    result.check(
        "golden: α(1, s_1 y) = σ_1 1",
        alpha(
            1,
            &BaseSimplex::from_parts(
                crate::sphere::Cell::TwoCell,
                DegeneracyWord::from_descending(vec![1]).expect("descending"),
            )
            .expect("valid"),
        ) == GammaElement::sphere_symbol(&[1], 1).expect("valid"),
        || "α on s_1 y".to_string(),
    );

    // Normalized chains of the spheres, frozen.
    let n2 = normalized_chains(&c, 8);
    result.check(
        "golden: N(ΓZ(2)) is Z in degree 2 with zero differentials",
        n2.ranks().iter().all(|(&d, &r)| r == usize::from(d == 2))
            && n2.differentials().values().all(IntMat::is_zero),
        || format!("ranks {:?}", n2.ranks()),
    );
    let recovered = normalized_chains(
        &ChainComplex::two_term(3, IntMat::from_rows(vec![vec![2, 0], vec![0, 3]])).expect("valid"),
        5,
    );
    result.check(
        "golden: N(Γ(C)) = C for a complex with a nonzero differential",
        recovered
            == ChainComplex::two_term(3, IntMat::from_rows(vec![vec![2, 0], vec![0, 3]]))
                .expect("valid"),
        || format!("recovered ranks {:?}", recovered.ranks()),
    );

    result
}

// ---------------------------------------------------------------------------
// bundle-class: the winding number classifies the family
// ---------------------------------------------------------------------------

/// All Moore 2-cycles over the sphere — words `g` of length ≤ 2 in generators
/// `ζ(a σ_0 + b σ_1 + c σ_2)` with coefficients bounded by `search_bound` and
/// exponents ±1, satisfying `∂_1 g = ∂_2 g = e` — deduplicated and in a
/// deterministic order.
///
/// Candidates are prefiltered by the exact criterion in the free group: a
/// face of a letter is `ζ((b+c) z)^{±1}` (for `∂_1`) or `ζ(c z)^{±1}` (for
/// `∂_2`), so a one- or two-letter word kills a face iff each letter's
/// coefficient vanishes or the two letters agree and their exponents cancel.
/// Every accepted candidate is then re-verified against the real faces.
pub fn enumerate_moore_two_cycles(search_bound: i64) -> Vec<LoopWord> {
    assert!(search_bound >= 1, "search bound must be at least 1");
    let letters = cycle_letters(search_bound);
    let mut seen: BTreeMap<String, LoopWord> = BTreeMap::new();

    for (x, e, a, b, c) in &letters {
        let _ = a;
        if b + c == 0 && *c == 0 {
            let g = class_of(x).expect("nonzero symbol").pow(*e);
            if !g.is_identity() {
                seen.entry(g.to_string()).or_insert(g);
            }
        }
    }
    for (x1, e1, _, b1, c1) in &letters {
        for (x2, e2, _, b2, c2) in &letters {
            if !(face_cancels(*b1 + *c1, *e1, *b2 + *c2, *e2)
                && face_cancels(*c1, *e1, *c2, *e2))
            {
                continue;
            }
            let g = class_of(x1)
                .expect("nonzero symbol")
                .pow(*e1)
                .multiply(&class_of(x2).expect("nonzero symbol").pow(*e2))
                .expect("same degree");
            if !g.is_identity() {
                seen.entry(g.to_string()).or_insert(g);
            }
        }
    }
    seen.into_values().collect()
}

/// One face of the candidate word is `ζ(m1 z)^{e1} ζ(m2 z)^{e2}`; in the free
/// group that is the identity iff both letters vanish or they agree and the
/// exponents cancel.
fn face_cancels(m1: i64, e1: i64, m2: i64, e2: i64) -> bool {
    (m1 == 0 && m2 == 0) || (m1 == m2 && e1 + e2 == 0)
}

/// The generators `ζ(a σ_0 + b σ_1 + c σ_2)^{±1}` with coefficients bounded
/// by `bound`, as `(element, exponent, a, b, c)`.
fn cycle_letters(bound: i64) -> Vec<(GammaElement, i64, i64, i64, i64)> {
    let mut letters = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                if a == 0 && b == 0 && c == 0 {
                    continue;
                }
                let mut x = GammaElement::zero(3);
                for (index, m) in [(0u32, a), (1, b), (2, c)] {
                    if m != 0 {
                        x = x
                            .add(&GammaElement::sphere_symbol(&[index], m).expect("valid symbol"))
                            .expect("same degree");
                    }
                }
                for e in [1i64, -1] {
                    letters.push((x.clone(), e, a, b, c));
                }
            }
        }
    }
    letters
}

fn bundle_class_checks(classes: &[i64], search_bound: i64) -> SuiteResult {
    let mut result = SuiteResult::new("bundle-class");
    let c = ChainComplex::sphere(2);

    // The winding number reads the class back off the twisting.
    for &m in classes {
        result.check(
            "bundle: deg(η_m(y)) = m",
            eta(m, &BaseSimplex::two_cell()).and_then(|g| degree_invariant(&g)) == Ok(m),
            || format!("class {m}"),
        );
    }
    if classes.contains(&0) {
        result.check(
            "bundle: the zero class twists trivially",
            eta(0, &BaseSimplex::two_cell()).map(|g| g.is_identity()) == Ok(true),
            || "η_0(y)".to_string(),
        );
    }

    // Every Moore 2-cycle has a boundary of winding number zero, so the
    // invariant descends to the fundamental group of the fiber.
    let cycles = enumerate_moore_two_cycles(search_bound);
    if search_bound >= 2 {
        result.check(
            "bundle: the search finds at least 100 Moore 2-cycles",
            cycles.len() >= 100,
            || format!("bound {search_bound}: found {}", cycles.len()),
        );
    }
    result.check(
        "bundle: the search finds at least one Moore 2-cycle",
        !cycles.is_empty(),
        || format!("bound {search_bound}: found none"),
    );
    for g in &cycles {
        result.check(
            "bundle: enumerated cycles are Moore chains",
            is_moore_chain(&c, g) == Ok(true),
            || format!("g = {g}"),
        );
        result.check(
            "bundle: deg(∂_0 g) = 0 for every Moore 2-cycle",
            loop_face(&c, 0, g).and_then(|d0| degree_invariant(&d0)) == Ok(0),
            || format!("g = {g}"),
        );
    }

    // Spot-check the prefilter's rejections against the real faces: sampled
    // rejected pairs must genuinely fail to be Moore chains.
    let letters = cycle_letters(search_bound);
    let mut rejected = 0usize;
    let mut checked = 0usize;
    'outer: for (x1, e1, _, b1, c1) in &letters {
        for (x2, e2, _, b2, c2) in &letters {
            if face_cancels(*b1 + *c1, *e1, *b2 + *c2, *e2) && face_cancels(*c1, *e1, *c2, *e2) {
                continue;
            }
            rejected += 1;
            if rejected % 97 != 0 {
                continue;
            }
            let g = class_of(x1)
                .expect("nonzero symbol")
                .pow(*e1)
                .multiply(&class_of(x2).expect("nonzero symbol").pow(*e2))
                .expect("same degree");
            result.check(
                "bundle: words rejected by the prefilter are not Moore chains",
                is_moore_chain(&c, &g) == Ok(false),
                || format!("g = {g}"),
            );
            checked += 1;
            if checked >= 120 {
                break 'outer;
            }
        }
    }

    result
}

fn suite_bundle_class_default(_bounds: Bounds, _seed: u64) -> SuiteResult {
    bundle_class_checks(&[-3, -2, -1, 0, 1, 2, 3], 2)
}

// ---------------------------------------------------------------------------
// negative-controls: broken implementations must be caught
// ---------------------------------------------------------------------------

fn suite_negative_controls(_bounds: Bounds, _seed: u64) -> SuiteResult {
    let mut result = SuiteResult::new("negative-controls");

    let engine_bugs = [
        (
            "control: face insertion without the index shift is detected",
            mutants::EngineBug::FaceInsertWithoutShift,
        ),
        (
            "control: degeneracy insertion without the index shift is detected",
            mutants::EngineBug::DegeneracyInsertWithoutShift,
        ),
        (
            "control: cancellation restricted to equal indices is detected",
            mutants::EngineBug::CancelOnlyAtEqualIndex,
        ),
    ];
    for (law, bug) in engine_bugs {
        result.check(law, expose_engine_mutant(bug).is_some(), || {
            "the broken rewrite agreed with the oracle on every probe".to_string()
        });
    }

    result.check(
        "control: a face rule that never differentiates is detected",
        expose_gamma_mutant().is_some(),
        || "the sloppy face rule matched the golden table".to_string(),
    );

    let twisting_mutants: [(&str, fn(&BaseSimplex) -> Result<LoopWord>); 4] = [
        (
            "control: a twisting with two degree-3 values swapped is detected",
            mutants::twisting_swapped_degree_three,
        ),
        (
            "control: a twisting with a doubled degree-3 value is detected",
            mutants::twisting_doubled_degree_three,
        ),
        (
            "control: a twisting trivial on the fundamental cell is detected",
            mutants::twisting_trivial_on_two_cell,
        ),
        (
            "control: a twisting alive on an s_0-image is detected",
            mutants::twisting_alive_on_s0_image,
        ),
    ];
    for (law, tau) in twisting_mutants {
        let mut scratch = SuiteResult::new("scratch");
        check_sphere_twisting(tau, 4, &mut scratch);
        let caught = scratch
            .violations
            .iter()
            .any(|v| v.law.starts_with("twisting:"));
        result.check(law, caught, || {
            "every twisting identity held for the broken twisting".to_string()
        });
    }

    result.check(
        "control: an untwisted zeroth face is detected",
        expose_untwisted_face_mutant().is_some(),
        || "the untwisted face matched both detectors".to_string(),
    );

    result
}

/// Drive a broken normalization over handpicked and sampled words until it
/// disagrees with the true engine on a Γ oracle; returns the witness.
pub fn expose_engine_mutant(bug: mutants::EngineBug) -> Option<String> {
    let oracles = law_complexes();
    let mut words: Vec<OperatorWord> = vec![
        OperatorWord::parse(2, "d1 d0").expect("valid probe"),
        OperatorWord::parse(2, "s1 s2").expect("valid probe"),
        OperatorWord::parse(1, "d1 s0").expect("valid probe"),
        OperatorWord::parse(3, "d2 s1 s0 d0").expect("valid probe"),
        OperatorWord::parse(2, "d1 d2 s0").expect("valid probe"),
    ];
    let bounds = Bounds {
        max_degree: 5,
        samples: 0,
        coeff_bound: 2,
    };
    let mut s = Sampler::new(0xBAD_5EED, bounds);
    for _ in 0..200 {
        let source = s.degree(0);
        let len = 2 + s.count(4);
        words.push(s.operator_word(source, len));
    }

    for w in &words {
        let correct = w.normalize().expect("valid word");
        let broken = match mutants::broken_normalize(bug, w) {
            Ok(b) => b,
            Err(e) => {
                return Some(format!(
                    "word `{w}` at degree {}: broken rewrite produced an ill-formed word ({e})",
                    w.source_degree()
                ))
            }
        };
        if broken == correct {
            continue;
        }
        for c in &oracles {
            for symbol in gamma_basis(c, w.source_degree()) {
                let x = symbol.element(c);
                let want = apply_word(c, w, &x).expect("valid word");
                match apply_word(c, &broken, &x) {
                    Err(e) => {
                        return Some(format!(
                            "word `{w}` at degree {}: broken normal form `{broken}` is not applicable ({e})",
                            w.source_degree()
                        ))
                    }
                    Ok(got) if got != want => {
                        return Some(format!(
                            "word `{w}` at degree {} on {x}: `{correct}` gives {want}, broken `{broken}` gives {got}",
                            w.source_degree()
                        ))
                    }
                    Ok(_) => {}
                }
            }
        }
    }
    None
}

/// The sloppy face rule must contradict the degree-three golden table.
pub fn expose_gamma_mutant() -> Option<String> {
    let c = ChainComplex::sphere(2);
    for z in [1i64, -2, 5] {
        for index in 0..=2u32 {
            let x = GammaElement::sphere_symbol(&[index], z).expect("valid symbol");
            for i in 0..=3u32 {
                let want = gamma_face(&c, i, &x).expect("in range");
                match mutants::gamma_face_sloppy(i, &x) {
                    Err(e) => return Some(format!("d_{i} of {x}: sloppy rule errored ({e})")),
                    Ok(got) if got != want => {
                        return Some(format!("d_{i} of {x}: want {want}, sloppy rule gives {got}"))
                    }
                    Ok(_) => {}
                }
            }
        }
    }
    None
}

/// The untwisted zeroth face must be caught twice over: by the golden value
/// of ∂_0(e, y), and by the comparison into the universal bundle.
pub fn expose_untwisted_face_mutant() -> Option<String> {
    let bundle = TwistedProduct::hopf();
    let unit = TotalSimplex::over(BaseSimplex::two_cell());

    let want = bundle.face(0, &unit).expect("in range");
    let got = mutants::untwisted_face(0, &unit).expect("in range");
    let golden_catch = got != want;

    let universal = bundle.universal();
    let through_map = universal
        .face(0, &bundle.to_universal(&unit))
        .expect("in range");
    let mutant_image = bundle.to_universal(&got);
    let comparison_catch = through_map != mutant_image;

    if golden_catch && comparison_catch {
        Some(format!(
            "∂_0(e, y): want ({}, {}), untwisted face gives ({}, {}); the universal comparison disagrees as well",
            want.fiber(),
            want.base(),
            got.fiber(),
            got.base()
        ))
    } else {
        None
    }
}
