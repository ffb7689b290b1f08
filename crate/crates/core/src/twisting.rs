//! Twisting functions: the glue between base and fiber.
//!
//! A twisting function on a base `B` with values in a simplicial group `G`
//! sends degree-`n` simplices to degree-`n-1` group elements so that the
//! twisted product built from it is simplicial. Concretely that means four
//! identities:
//!
//! ```text
//! (1) d_0 τ(b)         = τ(d_0 b)^{-1} · τ(d_1 b)
//! (2) d_i τ(b)         = τ(d_{i+1} b)      for i ≥ 1
//! (3) s_i τ(b)         = τ(s_{i+1} b)      for i ≥ 0
//! (4) τ(s_0 b)         = e
//! ```
//!
//! Two twistings are provided. [`universal_zeta`] is the class map on
//! `Γ(Z(2))` itself, which satisfies the identities by the very definition
//! of the loop group's faces and degeneracies. [`eta`] is its pullback to
//! the small sphere along the degree-`m` comparison map [`alpha`], written
//! out directly as a table on sphere simplices; `eta(m, b)` and
//! `universal_zeta(alpha(m, b))` agreeing is then a real cross-check, and
//! `m = ±1` gives the twisting of the Hopf bundle.

use crate::chain::ChainComplex;
use crate::error::Error;
use crate::gamma::{gamma_degeneracy, gamma_face, GammaElement};
use crate::loop_group::{class_of, loop_degeneracy, loop_face, LoopWord};
use crate::report::SuiteResult;
use crate::sphere::{s2_degeneracy, s2_face, BaseSimplex, Cell};
use crate::Result;

/// The comparison map of degree `m` from the sphere into `Γ(Z(2))`:
/// degeneracies of the 2-cell go to `m` times the matching symbol, point
/// simplices go to zero. This is a simplicial map because the chain
/// complex `Z(2)` has zero differential exactly where the 2-cell's faces
/// collapse to the basepoint.
pub fn alpha(m: i64, b: &BaseSimplex) -> GammaElement {
    match b.cell() {
        Cell::Basepoint => GammaElement::zero(b.degree()),
        Cell::TwoCell => GammaElement::sphere_symbol(b.word().indices(), m)
            .expect("sphere words are valid symbols"),
    }
}

/// The universal twisting on `Γ(Z(2))`: the class map into the loop group.
pub fn universal_zeta(x: &GammaElement) -> Result<LoopWord> {
    class_of(x)
}

/// The twisting of the degree-`m` sphere bundle, written directly: point
/// simplices, `s_0`-images, and `m = 0` all go to the identity; any other
/// degeneracy `s_J y` of the 2-cell goes to the free generator `ζ(m·s_J z)`.
/// Defined for `b` of degree ≥ 1.
pub fn eta(m: i64, b: &BaseSimplex) -> Result<LoopWord> {
    let n = b.degree();
    if n == 0 {
        return Err(Error::invalid(
            "twisting",
            "twisting functions start in degree 1",
        ));
    }
    match b.cell() {
        Cell::Basepoint => Ok(LoopWord::identity(n - 1)),
        Cell::TwoCell => {
            if m == 0 || b.is_s0_image() {
                return Ok(LoopWord::identity(n - 1));
            }
            class_of(&GammaElement::sphere_symbol(b.word().indices(), m)?)
        }
    }
}

/// Check the four twisting identities for `tau` on every sphere simplex of
/// degree ≤ `max_degree`, recording each check in `result`. The loop group
/// is taken over the sphere complex.
pub fn check_sphere_twisting<T>(tau: T, max_degree: u32, result: &mut SuiteResult)
where
    T: Fn(&BaseSimplex) -> Result<LoopWord>,
{
    let c = ChainComplex::sphere(2);
    let eval = |b: &BaseSimplex| -> LoopWord {
        tau(b).unwrap_or_else(|e| panic!("twisting undefined on {b}: {e}"))
    };
    for n in 0..=max_degree {
        for b in crate::sphere::s2_simplices(n) {
            // (4) needs nothing but s_0 b.
            let s0b = s2_degeneracy(0, &b).expect("s_0 exists");
            result.check("twisting: tau(s_0 b) = e", eval(&s0b).is_identity(), || {
                format!("b = {b}")
            });
            if n >= 1 {
                let tb = eval(&b);
                // (3) s_i τ(b) = τ(s_{i+1} b) for i ≤ n - 1.
                for i in 0..n {
                    let lhs = loop_degeneracy(&c, i, &tb).expect("degeneracy in range");
                    let rhs = eval(&s2_degeneracy(i + 1, &b).expect("in range"));
                    result.check("twisting: s_i tau(b) = tau(s_{i+1} b)", lhs == rhs, || {
                        format!("b = {b}, i = {i}")
                    });
                }
            }
            if n >= 2 {
                let tb = eval(&b);
                // (1) d_0 τ(b) = τ(d_0 b)^{-1} τ(d_1 b).
                let lhs = loop_face(&c, 0, &tb).expect("face in range");
                let rhs = eval(&s2_face(0, &b).expect("in range"))
                    .invert()
                    .multiply(&eval(&s2_face(1, &b).expect("in range")))
                    .expect("same degree");
                result.check(
                    "twisting: d_0 tau(b) = tau(d_0 b)^-1 tau(d_1 b)",
                    lhs == rhs,
                    || format!("b = {b}"),
                );
                // (2) d_i τ(b) = τ(d_{i+1} b) for 1 ≤ i ≤ n - 1.
                for i in 1..n {
                    let lhs = loop_face(&c, i, &tb).expect("face in range");
                    let rhs = eval(&s2_face(i + 1, &b).expect("in range"));
                    result.check("twisting: d_i tau(b) = tau(d_{i+1} b)", lhs == rhs, || {
                        format!("b = {b}, i = {i}")
                    });
                }
            }
        }
    }
}

/// Check the four twisting identities for `tau` on the supplied elements of
/// `Γ(C)` (each of degree ≥ 1), recording each check in `result`.
pub fn check_universal_twisting<T>(
    tau: T,
    c: &ChainComplex,
    elements: &[GammaElement],
    result: &mut SuiteResult,
) where
    T: Fn(&GammaElement) -> Result<LoopWord>,
{
    let eval = |x: &GammaElement| -> LoopWord {
        tau(x).unwrap_or_else(|e| panic!("twisting undefined on {x}: {e}"))
    };
    for x in elements {
        let n = x.degree();
        if n == 0 {
            continue;
        }
        let s0x = gamma_degeneracy(c, 0, x).expect("s_0 exists");
        result.check("twisting: tau(s_0 x) = e", eval(&s0x).is_identity(), || {
            format!("x = {x}")
        });
        let tx = eval(x);
        for i in 0..n {
            let lhs = loop_degeneracy(c, i, &tx).expect("degeneracy in range");
            let rhs = eval(&gamma_degeneracy(c, i + 1, x).expect("in range"));
            result.check("twisting: s_i tau(x) = tau(s_{i+1} x)", lhs == rhs, || {
                format!("x = {x}, i = {i}")
            });
        }
        if n >= 2 {
            let lhs = loop_face(c, 0, &tx).expect("face in range");
            let rhs = eval(&gamma_face(c, 0, x).expect("in range"))
                .invert()
                .multiply(&eval(&gamma_face(c, 1, x).expect("in range")))
                .expect("same degree");
            result.check(
                "twisting: d_0 tau(x) = tau(d_0 x)^-1 tau(d_1 x)",
                lhs == rhs,
                || format!("x = {x}"),
            );
            for i in 1..n {
                let lhs = loop_face(c, i, &tx).expect("face in range");
                let rhs = eval(&gamma_face(c, i + 1, x).expect("in range"));
                result.check("twisting: d_i tau(x) = tau(d_{i+1} x)", lhs == rhs, || {
                    format!("x = {x}, i = {i}")
                });
            }
        }
    }
}
