//! Face/degeneracy operator words and their canonical form.
//!
//! A word is a finite composite of face operators `d_i` and degeneracy
//! operators `s_i`, stored in display order (leftmost entry acts last) and
//! tagged with the degree of the simplex it is applied to. Words act on the
//! right, so in `d_1 s_1 s_0` the `s_0` acts first.
//!
//! Every word has a unique canonical form
//!
//! ```text
//! s_{h_k} ... s_{h_1} d_{j_1} ... d_{j_l}    h_k > ... > h_1,  j_1 < ... < j_l
//! ```
//!
//! reached by rewriting with the five simplicial identities
//!
//! ```text
//! d_i d_j = d_{j-1} d_i            (i < j)
//! s_i s_j = s_{j+1} s_i            (i <= j)
//! d_i s_j = s_{j-1} d_i            (i < j)
//! d_i s_j = id                     (i = j or i = j+1)
//! d_i s_j = s_j d_{i-1}            (i > j+1)
//! ```
//!
//! [`OperatorWord::normalize`] applies them with a rightmost-first insertion
//! strategy: each operator of the input is pushed from the left into an
//! already-canonical accumulator. Each insertion terminates because the
//! operator strictly advances through the accumulator (faces also shrink it
//! when a cancellation fires), and the result is independent of any choices
//! because no step ever has more than one applicable rule.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::Result;

/// Face (`d`) or degeneracy (`s`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpKind {
    Face,
    Degeneracy,
}

/// A single indexed operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Operator {
    pub kind: OpKind,
    pub index: u32,
}

impl Operator {
    pub fn face(index: u32) -> Self {
        Operator {
            kind: OpKind::Face,
            index,
        }
    }

    pub fn degeneracy(index: u32) -> Self {
        Operator {
            kind: OpKind::Degeneracy,
            index,
        }
    }

    /// Degree change: faces lower by one, degeneracies raise by one.
    fn shift(&self) -> i64 {
        match self.kind {
            OpKind::Face => -1,
            OpKind::Degeneracy => 1,
        }
    }

    /// Whether the operator may be applied to a simplex of this degree.
    fn applicable_at(&self, degree: u32) -> bool {
        match self.kind {
            OpKind::Face => degree >= 1 && self.index <= degree,
            OpKind::Degeneracy => self.index <= degree,
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OpKind::Face => write!(f, "d{}", self.index),
            OpKind::Degeneracy => write!(f, "s{}", self.index),
        }
    }
}

/// A canonical pure-degeneracy word `s_{h_k} ... s_{h_1}`, stored as its
/// strictly decreasing index sequence `[h_k, ..., h_1]` (display order).
///
/// The empty word is the identity. These words index the symbols of the
/// Dold–Kan construction and the degenerate simplices of the sphere model, so
/// they get a dedicated type with the two rewrite steps used everywhere:
/// composing with one more degeneracy and pushing a face through.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegeneracyWord(Vec<u32>);

/// Outcome of pushing a face through a degeneracy word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FacePush {
    /// The face cancelled against one of the degeneracies.
    Degeneracies(DegeneracyWord),
    /// The face survived: the word is `s_H d_j` with the returned index `j`
    /// now acting directly on the source.
    Through(DegeneracyWord, u32),
}

impl DegeneracyWord {
    /// The empty word.
    pub fn identity() -> Self {
        DegeneracyWord(Vec::new())
    }

    /// Build from indices in display order; they must strictly decrease.
    pub fn from_descending(indices: Vec<u32>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::invalid(
                "degeneracy word",
                format!("indices {indices:?} are not strictly decreasing"),
            ));
        }
        Ok(DegeneracyWord(indices))
    }

    /// Build from indices in application order (innermost first); they must
    /// strictly increase.
    pub fn from_ascending(mut indices: Vec<u32>) -> Result<Self> {
        indices.reverse();
        Self::from_descending(indices)
    }

    /// Indices in display order (strictly decreasing).
    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The innermost index (the one applied first), if any.
    pub fn innermost(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Is the word applicable to a simplex of degree `source`? Equivalent to
    /// all indices being below `source + len`.
    pub fn valid_from(&self, source: u32) -> bool {
        let target = source + self.0.len() as u32;
        self.0.first().map_or(true, |&top| top < target)
    }

    /// Canonical form of `s_i` composed on the left of this word.
    ///
    /// `s_i` is bubbled right past every `s_h` with `i <= h`, each such `h`
    /// becoming `h + 1`, until it sits above a strictly smaller index.
    pub fn with_degeneracy(&self, i: u32) -> DegeneracyWord {
        let mut w = self.0.clone();
        let mut pos = 0;
        while pos < w.len() && i <= w[pos] {
            w[pos] += 1;
            pos += 1;
        }
        w.insert(pos, i);
        DegeneracyWord(w)
    }

    /// Canonical form of `d_i` composed on the left of this word.
    pub fn with_face(&self, i: u32) -> FacePush {
        let mut w = self.0.clone();
        let mut i = i;
        for pos in 0..w.len() {
            let h = w[pos];
            if i < h {
                // d_i s_h = s_{h-1} d_i
                w[pos] = h - 1;
            } else if i == h || i == h + 1 {
                // d_i s_h = id
                w.remove(pos);
                return FacePush::Degeneracies(DegeneracyWord(w));
            } else {
                // d_i s_h = s_h d_{i-1}
                i -= 1;
            }
        }
        FacePush::Through(DegeneracyWord(w), i)
    }

    /// View as a full operator word from the given source degree.
    pub fn to_operator_word(&self, source_degree: u32) -> OperatorWord {
        OperatorWord {
            source_degree,
            ops: self.0.iter().map(|&i| Operator::degeneracy(i)).collect(),
        }
    }
}

impl fmt::Display for DegeneracyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An operator word together with the degree of its source.
///
/// `ops` is in display order: `ops[0]` acts last. The identity is the empty
/// sequence; no special token exists for it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OperatorWord {
    source_degree: u32,
    ops: Vec<Operator>,
}

impl OperatorWord {
    /// Build a word, checking that every operator is applicable at the degree
    /// it actually meets.
    pub fn new(source_degree: u32, ops: Vec<Operator>) -> Result<Self> {
        let word = OperatorWord { source_degree, ops };
        word.validate()?;
        Ok(word)
    }

    /// The identity word at a given degree.
    pub fn identity(source_degree: u32) -> Self {
        OperatorWord {
            source_degree,
            ops: Vec::new(),
        }
    }

    pub fn source_degree(&self) -> u32 {
        self.source_degree
    }

    /// Degree of the image: source plus degeneracies minus faces.
    pub fn target_degree(&self) -> u32 {
        let shift: i64 = self.ops.iter().map(Operator::shift).sum();
        (self.source_degree as i64 + shift) as u32
    }

    /// Operators in display order.
    pub fn ops(&self) -> &[Operator] {
        &self.ops
    }

    pub fn is_identity(&self) -> bool {
        self.ops.is_empty()
    }

    fn validate(&self) -> Result<()> {
        let mut degree = self.source_degree;
        // Walk in application order (right to left).
        for (k, op) in self.ops.iter().enumerate().rev() {
            if !op.applicable_at(degree) {
                return Err(Error::InvalidOperator {
                    position: k,
                    op: op.to_string(),
                    degree,
                });
            }
            degree = (degree as i64 + op.shift()) as u32;
        }
        Ok(())
    }

    /// The composite `self ∘ other`: `other` acts first. Errors unless
    /// `other`'s target degree matches `self`'s source degree.
    pub fn compose(&self, other: &OperatorWord) -> Result<OperatorWord> {
        if other.target_degree() != self.source_degree {
            return Err(Error::DegreeMismatch {
                left: self.source_degree,
                right: other.target_degree(),
            });
        }
        let mut ops = self.ops.clone();
        ops.extend_from_slice(&other.ops);
        OperatorWord::new(other.source_degree, ops)
    }

    /// Rewrite into canonical form `s_H d_J` with `H` strictly decreasing and
    /// `J` strictly increasing.
    pub fn normalize(&self) -> Result<OperatorWord> {
        self.validate()?;
        let mut degs = DegeneracyWord::identity();
        let mut faces: Vec<u32> = Vec::new(); // strictly increasing

        // Process in application order; each operator enters from the left of
        // the already-canonical accumulator.
        for op in self.ops.iter().rev() {
            match op.kind {
                OpKind::Degeneracy => degs = degs.with_degeneracy(op.index),
                OpKind::Face => match degs.with_face(op.index) {
                    FacePush::Degeneracies(w) => degs = w,
                    FacePush::Through(w, mut i) => {
                        degs = w;
                        // d_i d_j = d_j d_{i+1} for i >= j moves the new face
                        // right until the list is strictly increasing.
                        let mut pos = 0;
                        while pos < faces.len() && i >= faces[pos] {
                            i += 1;
                            pos += 1;
                        }
                        faces.insert(pos, i);
                    }
                },
            }
        }

        let mut ops: Vec<Operator> = degs.indices().iter().map(|&i| Operator::degeneracy(i)).collect();
        ops.extend(faces.into_iter().map(Operator::face));
        let word = OperatorWord {
            source_degree: self.source_degree,
            ops,
        };
        debug_assert!(word.validate().is_ok());
        debug_assert_eq!(word.target_degree(), self.target_degree());
        Ok(word)
    }

    /// Is the word already in canonical form?
    pub fn is_canonical(&self) -> bool {
        let first_face = self
            .ops
            .iter()
            .position(|op| op.kind == OpKind::Face)
            .unwrap_or(self.ops.len());
        let (degs, faces) = self.ops.split_at(first_face);
        faces.iter().all(|op| op.kind == OpKind::Face)
            && degs.windows(2).all(|p| p[0].index > p[1].index)
            && faces.windows(2).all(|p| p[0].index < p[1].index)
    }

    /// Parse the text syntax: whitespace-separated `s<k>` / `d<k>` tokens in
    /// display order. The empty string (or `"id"`) is the identity.
    pub fn parse(source_degree: u32, text: &str) -> Result<OperatorWord> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "id" {
            return Ok(OperatorWord::identity(source_degree));
        }
        let mut ops = Vec::new();
        for token in trimmed.split_whitespace() {
            let (kind, digits) = match token.split_at(1) {
                ("s", rest) => (OpKind::Degeneracy, rest),
                ("d", rest) => (OpKind::Face, rest),
                _ => {
                    return Err(Error::invalid(
                        "operator token",
                        format!("`{token}` (expected s<k> or d<k>)"),
                    ))
                }
            };
            let index: u32 = digits.parse().map_err(|_| {
                Error::invalid("operator token", format!("`{token}` has no valid index"))
            })?;
            ops.push(Operator { kind, index });
        }
        OperatorWord::new(source_degree, ops)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ops.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.ops.iter().map(|op| op.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

// JSON shape: {"src": r, "ops": [["s",3],["d",0]]}, ops in display order.
impl Serialize for OperatorWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            src: u32,
            ops: Vec<(&'a str, u32)>,
        }
        let ops = self
            .ops
            .iter()
            .map(|op| {
                (
                    match op.kind {
                        OpKind::Face => "d",
                        OpKind::Degeneracy => "s",
                    },
                    op.index,
                )
            })
            .collect();
        Wire {
            src: self.source_degree,
            ops,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OperatorWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            src: u32,
            ops: Vec<(String, u32)>,
        }
        let wire = Wire::deserialize(deserializer)?;
        let mut ops = Vec::with_capacity(wire.ops.len());
        for (kind, index) in wire.ops {
            let kind = match kind.as_str() {
                "d" => OpKind::Face,
                "s" => OpKind::Degeneracy,
                other => return Err(D::Error::custom(format!("unknown operator kind `{other}`"))),
            };
            ops.push(Operator { kind, index });
        }
        OperatorWord::new(wire.src, ops).map_err(D::Error::custom)
    }
}

/// All canonical degeneracy words from degree `source` to degree `target`, in
/// lexicographic order of their ascending index sequences.
///
/// These are exactly the strictly increasing `(target - source)`-subsets of
/// `0..target`, so there are `C(target, target - source)` of them.
pub fn enumerate_degeneracy_words(source: u32, target: u32) -> Result<Vec<DegeneracyWord>> {
    if target < source {
        return Err(Error::EmptyRange { from: source, target });
    }
    let k = (target - source) as usize;
    use itertools::Itertools;
    let words = (0..target)
        .combinations(k)
        .map(|asc| DegeneracyWord::from_ascending(asc).expect("combinations are increasing"))
        .collect();
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn face(i: u32) -> Operator {
        Operator::face(i)
    }

    fn deg(i: u32) -> Operator {
        Operator::degeneracy(i)
    }

    #[test]
    fn identity_normalizes_to_itself() {
        let w = OperatorWord::identity(3);
        assert_eq!(w.normalize().unwrap(), w);
        assert_eq!(w.target_degree(), 3);
    }

    #[test]
    fn face_degeneracy_cancellation() {
        // d_2 s_1 at source 2 is the identity (i = j + 1).
        let w = OperatorWord::new(2, vec![face(2), deg(1)]).unwrap();
        assert_eq!(w.normalize().unwrap(), OperatorWord::identity(2));
    }

    #[test]
    fn degeneracy_swap() {
        // s_0 s_1 at source 1 = s_2 s_0.
        let w = OperatorWord::new(1, vec![deg(0), deg(1)]).unwrap();
        let expected = OperatorWord::new(1, vec![deg(2), deg(0)]).unwrap();
        assert_eq!(w.normalize().unwrap(), expected);
    }

    #[test]
    fn face_slides_past_lower_degeneracy() {
        // d_1 s_1 s_0 at source 0 = s_0.
        let w = OperatorWord::new(0, vec![face(1), deg(1), deg(0)]).unwrap();
        let expected = OperatorWord::new(0, vec![deg(0)]).unwrap();
        assert_eq!(w.normalize().unwrap(), expected);
    }

    #[test]
    fn mixed_word_from_wire_example() {
        // s3 s1 d0 d2 from source 4: already canonical.
        let w = OperatorWord::parse(4, "s3 s1 d0 d2").unwrap();
        assert_eq!(w.normalize().unwrap(), w);
        assert_eq!(w.target_degree(), 4);
    }

    #[test]
    fn invalid_word_names_offending_position() {
        // At source 0 no face applies; position 1 is the first (rightmost
        // acting) operator here.
        let err = OperatorWord::new(0, vec![deg(0), face(0)]).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidOperator {
                position: 1,
                op: "d0".into(),
                degree: 0,
            }
        );
        // Degeneracy index above the degree it meets.
        let err = OperatorWord::new(1, vec![deg(3)]).unwrap_err();
        assert!(matches!(err, Error::InvalidOperator { position: 0, .. }));
    }

    #[test]
    fn enumeration_matches_binomials() {
        assert_eq!(enumerate_degeneracy_words(2, 2).unwrap().len(), 1);
        let deg3 = enumerate_degeneracy_words(2, 3).unwrap();
        assert_eq!(
            deg3,
            vec![
                DegeneracyWord::from_descending(vec![0]).unwrap(),
                DegeneracyWord::from_descending(vec![1]).unwrap(),
                DegeneracyWord::from_descending(vec![2]).unwrap(),
            ]
        );
        let deg4 = enumerate_degeneracy_words(2, 4).unwrap();
        let expected: Vec<DegeneracyWord> = [
            vec![1, 0],
            vec![2, 0],
            vec![3, 0],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ]
        .into_iter()
        .map(|v| DegeneracyWord::from_descending(v).unwrap())
        .collect();
        assert_eq!(deg4, expected);
        assert!(matches!(
            enumerate_degeneracy_words(3, 2),
            Err(Error::EmptyRange { .. })
        ));
    }

    fn binomial(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let mut acc = 1u64;
        for i in 0..k.min(n - k) {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn enumeration_counts_and_distinctness() {
        for source in 0..6u32 {
            for target in source..10u32 {
                let words = enumerate_degeneracy_words(source, target).unwrap();
                assert_eq!(
                    words.len() as u64,
                    binomial(target as u64, (target - source) as u64),
                    "count from {source} to {target}"
                );
                let mut sorted = words.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), words.len(), "duplicates from {source} to {target}");
                for w in &words {
                    assert!(w.valid_from(source));
                    assert_eq!(w.len() as u32, target - source);
                }
            }
        }
    }

    /// Random valid word: raw (is_degeneracy, index seed) pairs are repaired
    /// into applicable operators step by step.
    fn arb_word(source: u32, max_len: usize) -> impl Strategy<Value = OperatorWord> {
        proptest::collection::vec((any::<bool>(), any::<u32>()), 0..=max_len).prop_map(
            move |raw| {
                let mut degree = source;
                let mut ops_rev = Vec::new();
                for (is_deg, seed) in raw {
                    if is_deg || degree == 0 {
                        let index = seed % (degree + 1);
                        ops_rev.push(Operator::degeneracy(index));
                        degree += 1;
                    } else {
                        let index = seed % (degree + 1);
                        ops_rev.push(Operator::face(index));
                        degree -= 1;
                    }
                }
                ops_rev.reverse();
                OperatorWord::new(source, ops_rev).expect("constructed to be valid")
            },
        )
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(src in 0u32..5, w in (0u32..5).prop_flat_map(|s| arb_word(s, 12))) {
            let _ = src;
            let n = w.normalize().unwrap();
            prop_assert_eq!(n.normalize().unwrap(), n.clone());
            prop_assert_eq!(n.target_degree(), w.target_degree());
            prop_assert_eq!(n.source_degree(), w.source_degree());
        }

        #[test]
        fn normal_form_shape(w in (0u32..5).prop_flat_map(|s| arb_word(s, 12))) {
            let n = w.normalize().unwrap();
            // All degeneracies strictly decreasing, then all faces strictly increasing.
            let ops = n.ops();
            let first_face = ops.iter().position(|o| o.kind == OpKind::Face).unwrap_or(ops.len());
            let (degs, faces) = ops.split_at(first_face);
            prop_assert!(degs.iter().all(|o| o.kind == OpKind::Degeneracy));
            prop_assert!(faces.iter().all(|o| o.kind == OpKind::Face));
            prop_assert!(degs.windows(2).all(|p| p[0].index > p[1].index));
            prop_assert!(faces.windows(2).all(|p| p[0].index < p[1].index));
        }

        #[test]
        fn normalize_is_confluent_under_composition(
            inner in (0u32..5).prop_flat_map(|s| arb_word(s, 8)),
            raw_outer in proptest::collection::vec((any::<bool>(), any::<u32>()), 0..=8),
        ) {
            // Build the outer word at the degree where the inner word lands.
            let mid = inner.target_degree();
            let mut degree = mid;
            let mut ops_rev = Vec::new();
            for (is_deg, seed) in raw_outer {
                if is_deg || degree == 0 {
                    ops_rev.push(Operator::degeneracy(seed % (degree + 1)));
                    degree += 1;
                } else {
                    ops_rev.push(Operator::face(seed % (degree + 1)));
                    degree -= 1;
                }
            }
            ops_rev.reverse();
            let outer = OperatorWord::new(mid, ops_rev).unwrap();

            let direct = outer.compose(&inner).unwrap().normalize().unwrap();
            let staged = outer
                .normalize().unwrap()
                .compose(&inner.normalize().unwrap()).unwrap()
                .normalize().unwrap();
            prop_assert_eq!(direct, staged);
        }

        #[test]
        fn text_and_json_round_trip(w in (0u32..5).prop_flat_map(|s| arb_word(s, 10))) {
            let text = w.to_string();
            prop_assert_eq!(OperatorWord::parse(w.source_degree(), &text).unwrap(), w.clone());
            let json = serde_json::to_string(&w).unwrap();
            let back: OperatorWord = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, w);
        }
    }
}
