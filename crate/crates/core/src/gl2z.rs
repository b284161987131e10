//! Integer 2x2 matrices, GL(2, Z) arithmetic and bounded conjugacy search.

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A 2x2 integer matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IMat2(pub [[i64; 2]; 2]);

impl IMat2 {
    pub const IDENTITY: IMat2 = IMat2([[1, 0], [0, 1]]);

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        IMat2([[a, b], [c, d]])
    }

    pub fn det(&self) -> i64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> i64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs() == 1
    }

    pub fn mul(&self, rhs: &IMat2) -> IMat2 {
        let a = &self.0;
        let b = &rhs.0;
        IMat2([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    pub fn mul_vec(&self, v: [i64; 2]) -> [i64; 2] {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
        ]
    }

    pub fn transpose(&self) -> IMat2 {
        let m = &self.0;
        IMat2([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    /// Exact inverse; only unimodular matrices are invertible over the integers.
    pub fn inverse(&self) -> Result<IMat2> {
        let d = self.det();
        if d.abs() != 1 {
            return Err(Error::NonUnimodular { det: d });
        }
        let m = &self.0;
        // adjugate divided by det, with det = +-1
        Ok(IMat2([
            [d * m[1][1], -d * m[0][1]],
            [-d * m[1][0], d * m[0][0]],
        ]))
    }

    /// Transpose-inverse, the induced map on the dual lattice.
    pub fn transpose_inverse(&self) -> Result<IMat2> {
        Ok(self.inverse()?.transpose())
    }

    pub fn to_real(&self) -> Matrix2<f64> {
        Matrix2::new(
            self.0[0][0] as f64,
            self.0[0][1] as f64,
            self.0[1][0] as f64,
            self.0[1][1] as f64,
        )
    }

    /// Nearest integer matrix to `m`, with the largest element-wise rounding
    /// deviation.
    pub fn round_from(m: &Matrix2<f64>) -> (IMat2, f64) {
        let mut out = [[0i64; 2]; 2];
        let mut dev: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                let v = m[(i, j)];
                let r = v.round();
                dev = dev.max((v - r).abs());
                out[i][j] = r as i64;
            }
        }
        (IMat2(out), dev)
    }
}

impl std::fmt::Display for IMat2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1]
        )
    }
}

/// Outcome of a bounded GL(2, Z) conjugacy search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConjugacyDecision {
    /// A conjugator with `P A P^-1 = B` was found.
    Equivalent { conjugator: IMat2 },
    /// det or trace differ, so the matrices cannot be conjugate.
    Distinct { reason: String },
    /// Invariants agree but no conjugator exists within the entry bound.
    UndecidedWithinBound { bound: i64 },
}

impl ConjugacyDecision {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, ConjugacyDecision::Equivalent { .. })
    }
}

/// Decide GL(2, Z) conjugacy of `a` and `b` by exhaustive search over
/// conjugators with entries bounded by `bound`.
pub fn conjugacy_decision(a: &IMat2, b: &IMat2, bound: i64) -> ConjugacyDecision {
    if a.det() != b.det() {
        return ConjugacyDecision::Distinct {
            reason: format!("det mismatch: {} vs {}", a.det(), b.det()),
        };
    }
    if a.trace() != b.trace() {
        return ConjugacyDecision::Distinct {
            reason: format!("trace mismatch: {} vs {}", a.trace(), b.trace()),
        };
    }
    // P A = B P avoids rational inverses.
    for p in (-bound..=bound).flat_map(move |x| {
        (-bound..=bound).flat_map(move |y| {
            (-bound..=bound).flat_map(move |z| (-bound..=bound).map(move |w| IMat2([[x, y], [z, w]])))
        })
    }) {
        if p.det().abs() != 1 {
            continue;
        }
        if p.mul(a) == b.mul(&p) {
            return ConjugacyDecision::Equivalent { conjugator: p };
        }
    }
    ConjugacyDecision::UndecidedWithinBound { bound }
}

/// True iff `a` and `b` are conjugate within the bounded search.
pub fn conjugacy_equivalent(a: &IMat2, b: &IMat2, bound: i64) -> bool {
    conjugacy_decision(a, b, bound).is_equivalent()
}

/// Conjugacy class of a loop holonomy: a representative together with its
/// conjugation invariants and the loop it came from.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HolonomyClass {
    pub representative: IMat2,
    pub determinant: i64,
    pub trace: i64,
    pub loop_ids: Vec<String>,
}

impl HolonomyClass {
    pub fn new(representative: IMat2, loop_ids: Vec<String>) -> Self {
        HolonomyClass {
            determinant: representative.det(),
            trace: representative.trace(),
            representative,
            loop_ids,
        }
    }

    pub fn is_trivial(&self, bound: i64) -> bool {
        conjugacy_equivalent(&self.representative, &IMat2::IDENTITY, bound)
    }

    pub fn equivalent_to(&self, other: &HolonomyClass, bound: i64) -> bool {
        conjugacy_equivalent(&self.representative, &other.representative, bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_of_unimodular_is_exact() {
        let m = IMat2::new(1, 1, 0, 1);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, IMat2::new(1, -1, 0, 1));
        assert_eq!(m.mul(&inv), IMat2::IDENTITY);
        assert!(IMat2::new(2, 0, 0, 2).inverse().is_err());
    }

    #[test]
    fn identity_is_self_conjugate() {
        assert!(conjugacy_equivalent(&IMat2::IDENTITY, &IMat2::IDENTITY, 5));
    }

    #[test]
    fn opposite_shears_are_conjugate() {
        // diag(1, -1) conjugates the two parabolic shears.
        let a = IMat2::new(1, 1, 0, 1);
        let b = IMat2::new(1, -1, 0, 1);
        let d = conjugacy_decision(&a, &b, 5);
        assert!(d.is_equivalent());
        // and the lower-triangular one as well, via the swap matrix
        let c = IMat2::new(1, 0, 1, 1);
        assert!(conjugacy_equivalent(&a, &c, 5));
    }

    #[test]
    fn trace_mismatch_is_distinct() {
        let a = IMat2::new(1, 1, 0, 1);
        let b = IMat2::new(2, 1, 1, 1);
        match conjugacy_decision(&a, &b, 5) {
            ConjugacyDecision::Distinct { reason } => assert!(reason.contains("trace")),
            other => panic!("expected Distinct, got {other:?}"),
        }
    }

    #[test]
    fn double_shear_is_undecided_not_equivalent() {
        // Same det and trace, but P [[1,1],[0,1]] P^-1 = [[1,2],[0,1]] forces
        // det P = 2 s^2, impossible over the integers.
        let a = IMat2::new(1, 1, 0, 1);
        let b = IMat2::new(1, 2, 0, 1);
        match conjugacy_decision(&a, &b, 5) {
            ConjugacyDecision::UndecidedWithinBound { bound } => assert_eq!(bound, 5),
            other => panic!("expected UndecidedWithinBound, got {other:?}"),
        }
        assert!(!conjugacy_equivalent(&a, &b, 5));
    }

    fn small_unimodular() -> impl Strategy<Value = IMat2> {
        (-2i64..=2, -2i64..=2, -2i64..=2, -2i64..=2)
            .prop_map(|(a, b, c, d)| IMat2::new(a, b, c, d))
            .prop_filter("unimodular", |m| m.det().abs() == 1)
    }

    proptest! {
        #[test]
        fn conjugation_preserves_class(a in small_unimodular(), p in small_unimodular()) {
            let b = p.mul(&a).mul(&p.inverse().unwrap());
            prop_assert!(conjugacy_equivalent(&a, &b, 3));
        }

        #[test]
        fn round_trip_inverse(m in small_unimodular()) {
            prop_assert_eq!(m.mul(&m.inverse().unwrap()), IMat2::IDENTITY);
            prop_assert_eq!(m.inverse().unwrap().mul(&m), IMat2::IDENTITY);
        }
    }
}
