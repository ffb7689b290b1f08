//! Twisted cartesian products: the total space of the bundle.
//!
//! A total simplex is a pair (fiber word, base simplex) of equal degree.
//! All structure is componentwise except the zeroth face, which feeds the
//! base simplex through the twisting before it acts on the fiber:
//!
//! ```text
//! d_0(g, b) = (τ(b) · d_0 g, d_0 b)
//! d_i(g, b) = (d_i g, d_i b)         for i ≥ 1
//! s_i(g, b) = (s_i g, s_i b)
//! ```
//!
//! [`TwistedProduct`] is the bundle over the small sphere with twisting
//! `eta(class, ·)`; `class = ±1` is the Hopf fibration. [`UniversalProduct`]
//! is the same construction over `Γ(C)` with the universal twisting, and
//! [`TwistedProduct::to_universal`] maps the former into the latter over the
//! comparison map — a map of bundles, which the tests pin down by checking
//! it commutes with every face and degeneracy.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chain::ChainComplex;
use crate::error::Error;
use crate::gamma::{gamma_degeneracy, gamma_face, GammaElement};
use crate::loop_group::{fill_horn, loop_degeneracy, loop_face, LoopWord};
use crate::sphere::{s2_degeneracy, s2_face, BaseSimplex};
use crate::twisting::{alpha, eta, universal_zeta};
use crate::Result;

/// A simplex of the total space over the sphere.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TotalSimplex {
    fiber: LoopWord,
    base: BaseSimplex,
}

impl TotalSimplex {
    pub fn new(fiber: LoopWord, base: BaseSimplex) -> Result<Self> {
        if fiber.degree() != base.degree() {
            return Err(Error::DegreeMismatch {
                left: fiber.degree(),
                right: base.degree(),
            });
        }
        Ok(TotalSimplex { fiber, base })
    }

    /// The identity fiber over a base simplex.
    pub fn over(base: BaseSimplex) -> Self {
        TotalSimplex {
            fiber: LoopWord::identity(base.degree()),
            base,
        }
    }

    pub fn fiber(&self) -> &LoopWord {
        &self.fiber
    }

    pub fn base(&self) -> &BaseSimplex {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.base.degree()
    }
}

/// Wire form of a total simplex, carrying the bundle class it belongs to.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TotalSimplexPayload {
    pub fiber: LoopWord,
    pub base: BaseSimplex,
    pub class: i64,
}

impl TotalSimplexPayload {
    pub fn new(bundle: &TwistedProduct, simplex: &TotalSimplex) -> Self {
        TotalSimplexPayload {
            fiber: simplex.fiber.clone(),
            base: simplex.base.clone(),
            class: bundle.class(),
        }
    }

    /// Split into the bundle and the simplex, validating degrees.
    pub fn into_parts(self) -> Result<(TwistedProduct, TotalSimplex)> {
        let bundle = TwistedProduct::new(self.class);
        let simplex = TotalSimplex::new(self.fiber, self.base)?;
        Ok((bundle, simplex))
    }
}

/// The twisted product `G ×_η S²` for a fixed bundle class.
#[derive(Debug, Clone)]
pub struct TwistedProduct {
    class: i64,
    fiber_complex: ChainComplex,
}

impl TwistedProduct {
    pub fn new(class: i64) -> Self {
        TwistedProduct {
            class,
            fiber_complex: ChainComplex::sphere(2),
        }
    }

    /// The Hopf bundle.
    pub fn hopf() -> Self {
        TwistedProduct::new(1)
    }

    pub fn class(&self) -> i64 {
        self.class
    }

    pub fn fiber_complex(&self) -> &ChainComplex {
        &self.fiber_complex
    }

    fn twist(&self, b: &BaseSimplex) -> Result<LoopWord> {
        eta(self.class, b)
    }

    pub fn face(&self, i: u32, t: &TotalSimplex) -> Result<TotalSimplex> {
        let c = &self.fiber_complex;
        let base = s2_face(i, &t.base)?;
        let fiber = if i == 0 {
            self.twist(&t.base)?.multiply(&loop_face(c, 0, &t.fiber)?)?
        } else {
            loop_face(c, i, &t.fiber)?
        };
        TotalSimplex::new(fiber, base)
    }

    pub fn degeneracy(&self, i: u32, t: &TotalSimplex) -> Result<TotalSimplex> {
        TotalSimplex::new(
            loop_degeneracy(&self.fiber_complex, i, &t.fiber)?,
            s2_degeneracy(i, &t.base)?,
        )
    }

    /// The principal right action of the fiber group on the total space.
    pub fn act(&self, t: &TotalSimplex, h: &LoopWord) -> Result<TotalSimplex> {
        TotalSimplex::new(t.fiber.multiply(h)?, t.base.clone())
    }

    /// Bundle projection.
    pub fn project(&self, t: &TotalSimplex) -> BaseSimplex {
        t.base.clone()
    }

    /// Fill a horn in the total space over a given filler of its projected
    /// horn. `faces` maps each `i ≠ k` in `0..=degree` to a total simplex of
    /// degree `degree - 1`, and `base_filler` must be a base simplex whose
    /// faces project onto the horn. The fiber horn is solved by the group's
    /// own filler; the missing zeroth fiber face is untwisted first.
    pub fn lift_horn(
        &self,
        degree: u32,
        k: u32,
        faces: &BTreeMap<u32, TotalSimplex>,
        base_filler: &BaseSimplex,
    ) -> Result<TotalSimplex> {
        if degree == 0 || k > degree {
            return Err(Error::invalid(
                "horn",
                format!("no horn Λ^{k} in degree {degree}"),
            ));
        }
        if base_filler.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: base_filler.degree(),
                right: degree,
            });
        }
        let mut fiber_horn = BTreeMap::new();
        for i in 0..=degree {
            if i == k {
                if faces.contains_key(&i) {
                    return Err(Error::MalformedHorn { degree, missing: k });
                }
                continue;
            }
            let t = faces
                .get(&i)
                .ok_or(Error::MalformedHorn { degree, missing: k })?;
            if t.degree() != degree - 1 {
                return Err(Error::DegreeMismatch {
                    left: t.degree(),
                    right: degree - 1,
                });
            }
            if s2_face(i, base_filler)? != t.base {
                return Err(Error::ProjectionMismatch { index: i });
            }
            let fiber_face = if i == 0 {
                self.twist(base_filler)?.invert().multiply(&t.fiber)?
            } else {
                t.fiber.clone()
            };
            fiber_horn.insert(i, fiber_face);
        }
        let g = fill_horn(&self.fiber_complex, degree, k, &fiber_horn)?;
        let filler = TotalSimplex::new(g, base_filler.clone())?;
        for (&i, t) in faces {
            if &self.face(i, &filler)? != t {
                return Err(Error::FillerVerification { index: i });
            }
        }
        Ok(filler)
    }

    /// Push a total simplex into the universal bundle over `Γ(Z(2))` along
    /// the comparison map of this bundle's class.
    pub fn to_universal(&self, t: &TotalSimplex) -> UniversalTotalSimplex {
        UniversalTotalSimplex {
            fiber: t.fiber.clone(),
            base: alpha(self.class, &t.base),
        }
    }

    /// The universal bundle this one compares into.
    pub fn universal(&self) -> UniversalProduct {
        UniversalProduct::new(self.fiber_complex.clone())
    }
}

/// A simplex of the universal total space: fiber word over an element of
/// `Γ(C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalTotalSimplex {
    pub fiber: LoopWord,
    pub base: GammaElement,
}

impl UniversalTotalSimplex {
    pub fn new(fiber: LoopWord, base: GammaElement) -> Result<Self> {
        if fiber.degree() != base.degree() {
            return Err(Error::DegreeMismatch {
                left: fiber.degree(),
                right: base.degree(),
            });
        }
        Ok(UniversalTotalSimplex { fiber, base })
    }

    pub fn degree(&self) -> u32 {
        self.base.degree()
    }
}

/// The twisted product `G ×_ζ Γ(C)` with the universal twisting.
#[derive(Debug, Clone)]
pub struct UniversalProduct {
    complex: ChainComplex,
}

impl UniversalProduct {
    pub fn new(complex: ChainComplex) -> Self {
        UniversalProduct { complex }
    }

    pub fn face(&self, i: u32, t: &UniversalTotalSimplex) -> Result<UniversalTotalSimplex> {
        let c = &self.complex;
        let base = gamma_face(c, i, &t.base)?;
        let fiber = if i == 0 {
            universal_zeta(&t.base)?.multiply(&loop_face(c, 0, &t.fiber)?)?
        } else {
            loop_face(c, i, &t.fiber)?
        };
        UniversalTotalSimplex::new(fiber, base)
    }

    pub fn degeneracy(&self, i: u32, t: &UniversalTotalSimplex) -> Result<UniversalTotalSimplex> {
        UniversalTotalSimplex::new(
            loop_degeneracy(&self.complex, i, &t.fiber)?,
            gamma_degeneracy(&self.complex, i, &t.base)?,
        )
    }

    pub fn act(&self, t: &UniversalTotalSimplex, h: &LoopWord) -> Result<UniversalTotalSimplex> {
        UniversalTotalSimplex::new(t.fiber.multiply(h)?, t.base.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loop_group::class_of;
    use crate::operators::DegeneracyWord;
    use crate::sphere::{s2_simplices, Cell};

    fn gen_word(indices: &[u32], m: i64) -> LoopWord {
        class_of(&GammaElement::sphere_symbol(indices, m).unwrap()).unwrap()
    }

    fn y_word(indices: &[u32]) -> BaseSimplex {
        BaseSimplex::from_parts(
            Cell::TwoCell,
            DegeneracyWord::from_descending(indices.to_vec()).unwrap(),
        )
        .unwrap()
    }

    /// A small but representative census of total simplices per degree.
    fn total_samples(degree: u32) -> Vec<TotalSimplex> {
        let mut fibers = vec![LoopWord::identity(degree)];
        match degree {
            1 => fibers.push(gen_word(&[], 2)),
            2 => {
                fibers.push(gen_word(&[1], 1));
                fibers.push(gen_word(&[1], 1).multiply(&gen_word(&[2], -1)).unwrap());
            }
            n if n >= 3 => {
                let mut w = gen_word(&[2, 1], 1).pow(2);
                for _ in 3..n {
                    w = loop_degeneracy(&ChainComplex::sphere(2), 1, &w).unwrap();
                }
                fibers.push(w);
            }
            _ => {}
        }
        let mut out = Vec::new();
        for base in s2_simplices(degree) {
            for fiber in &fibers {
                out.push(TotalSimplex::new(fiber.clone(), base.clone()).unwrap());
            }
        }
        out
    }

    #[test]
    fn zeroth_face_of_the_unit_over_the_two_cell() {
        // The one value that separates this bundle from the product bundle:
        // d_0(e, y) = (ζ(z), s_0 *).
        let bundle = TwistedProduct::hopf();
        let t = TotalSimplex::over(BaseSimplex::two_cell());
        let d0 = bundle.face(0, &t).unwrap();
        assert_eq!(d0.base(), &BaseSimplex::degenerate_point(1));
        assert_eq!(d0.fiber(), &gen_word(&[], 1));
        // Higher faces stay untwisted.
        for i in 1..=2 {
            assert!(bundle.face(i, &t).unwrap().fiber().is_identity());
        }
        // The product bundle (class 0) has an identity fiber there instead.
        let flat = TwistedProduct::new(0);
        assert!(flat.face(0, &t).unwrap().fiber().is_identity());
        // Class m twists by ζ(m·z).
        for m in [-1i64, 2, 3] {
            let d0 = TwistedProduct::new(m).face(0, &t).unwrap();
            assert_eq!(d0.fiber(), &gen_word(&[], m));
        }
    }

    #[test]
    fn simplicial_identities_on_total_simplices() {
        for class in [1i64, -1, 2] {
            let bundle = TwistedProduct::new(class);
            for n in 0..=4u32 {
                for t in total_samples(n) {
                    if n >= 2 {
                        for j in 1..=n {
                            for i in 0..j {
                                assert_eq!(
                                    bundle.face(i, &bundle.face(j, &t).unwrap()).unwrap(),
                                    bundle.face(j - 1, &bundle.face(i, &t).unwrap()).unwrap(),
                                    "dd ({i},{j}) class {class}"
                                );
                            }
                        }
                    }
                    for j in 0..=n {
                        for i in 0..=j {
                            assert_eq!(
                                bundle
                                    .degeneracy(i, &bundle.degeneracy(j, &t).unwrap())
                                    .unwrap(),
                                bundle
                                    .degeneracy(j + 1, &bundle.degeneracy(i, &t).unwrap())
                                    .unwrap(),
                                "ss ({i},{j}) class {class}"
                            );
                        }
                        for i in 0..=n + 1 {
                            let sj = bundle.degeneracy(j, &t).unwrap();
                            let lhs = bundle.face(i, &sj).unwrap();
                            let rhs = if i == j || i == j + 1 {
                                t.clone()
                            } else if i < j {
                                bundle
                                    .degeneracy(j - 1, &bundle.face(i, &t).unwrap())
                                    .unwrap()
                            } else {
                                bundle
                                    .degeneracy(j, &bundle.face(i - 1, &t).unwrap())
                                    .unwrap()
                            };
                            assert_eq!(lhs, rhs, "ds ({i},{j}) class {class}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn action_is_simplicial_and_free_on_fibers() {
        let bundle = TwistedProduct::hopf();
        let c = bundle.fiber_complex().clone();
        let h = gen_word(&[1], 1).multiply(&gen_word(&[2], 2)).unwrap();
        for t in total_samples(2) {
            let th = bundle.act(&t, &h).unwrap();
            assert_eq!(bundle.project(&th), bundle.project(&t));
            for i in 0..=2u32 {
                assert_eq!(
                    bundle.face(i, &th).unwrap(),
                    bundle
                        .act(&bundle.face(i, &t).unwrap(), &loop_face(&c, i, &h).unwrap())
                        .unwrap(),
                    "face {i}"
                );
            }
            // Freeness: acting by a nontrivial element moves every simplex.
            assert_ne!(th, t);
            // Transitivity on the fiber: t·(f^{-1}·f') reaches any f'.
            let other = bundle.act(&t, &t.fiber().invert().multiply(&h).unwrap()).unwrap();
            assert_eq!(other.fiber(), &h);
        }
    }

    #[test]
    fn horn_lifting_over_a_base_filler() {
        let bundle = TwistedProduct::hopf();
        for n in 2..=3u32 {
            for t in total_samples(n) {
                for k in 0..=n {
                    let mut faces = BTreeMap::new();
                    for i in 0..=n {
                        if i != k {
                            faces.insert(i, bundle.face(i, &t).unwrap());
                        }
                    }
                    let filler = bundle.lift_horn(n, k, &faces, t.base()).unwrap();
                    assert_eq!(filler.base(), t.base());
                    for (&i, expected) in &faces {
                        assert_eq!(
                            &bundle.face(i, &filler).unwrap(),
                            expected,
                            "face {i}, horn {k}, degree {n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn horn_lifting_rejects_a_wrong_base_filler() {
        let bundle = TwistedProduct::hopf();
        let t = TotalSimplex::over(y_word(&[1]));
        let mut faces = BTreeMap::new();
        for i in 0..=3u32 {
            if i != 1 {
                faces.insert(i, bundle.face(i, &t).unwrap());
            }
        }
        // The degenerate point of degree 3 projects to the wrong horn.
        let err = bundle
            .lift_horn(3, 1, &faces, &BaseSimplex::degenerate_point(3))
            .unwrap_err();
        assert!(matches!(err, Error::ProjectionMismatch { .. }), "{err}");
    }

    #[test]
    fn comparison_into_the_universal_bundle_is_simplicial() {
        for class in [1i64, -2] {
            let bundle = TwistedProduct::new(class);
            let universal = bundle.universal();
            for n in 1..=4u32 {
                for t in total_samples(n) {
                    let u = bundle.to_universal(&t);
                    for i in 0..=n {
                        assert_eq!(
                            bundle.to_universal(&bundle.face(i, &t).unwrap()),
                            universal.face(i, &u).unwrap(),
                            "face {i} degree {n} class {class}"
                        );
                        assert_eq!(
                            bundle.to_universal(&bundle.degeneracy(i, &t).unwrap()),
                            universal.degeneracy(i, &u).unwrap(),
                            "degeneracy {i} degree {n} class {class}"
                        );
                    }
                    // The action commutes with the comparison too.
                    let h = t.fiber().invert();
                    assert_eq!(
                        bundle.to_universal(&bundle.act(&t, &h).unwrap()),
                        universal.act(&u, &h).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn payload_round_trip() {
        let bundle = TwistedProduct::hopf();
        let t = TotalSimplex::new(gen_word(&[2, 1], 1), y_word(&[2])).unwrap();
        let payload = TotalSimplexPayload::new(&bundle, &t);
        let json = serde_json::to_string(&payload).unwrap();
        let back: TotalSimplexPayload = serde_json::from_str(&json).unwrap();
        let (bundle2, t2) = back.into_parts().unwrap();
        assert_eq!(bundle2.class(), 1);
        assert_eq!(t2, t);
        // Mismatched degrees are rejected at into_parts.
        let bad = TotalSimplexPayload {
            fiber: gen_word(&[], 1),
            base: y_word(&[2]),
            class: 1,
        };
        assert!(bad.into_parts().is_err());
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        assert!(TotalSimplex::new(LoopWord::identity(2), BaseSimplex::basepoint()).is_err());
        assert!(
            UniversalTotalSimplex::new(LoopWord::identity(1), GammaElement::zero(3)).is_err()
        );
    }
}
