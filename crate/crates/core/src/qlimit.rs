//! Generic-`q` quantities, used to check the `q → 0` asymptotics numerically.
//!
//! Nothing else in the crate depends on this module; the crystal layers are
//! exact.

use alloc::vec::Vec;

use thiserror::Error;

use crate::half_int::HalfInt;

#[derive(Clone, Copy, Debug, PartialEq, Error)]
pub enum QError {
    #[error("q must lie strictly inside (0, 1), got {0}")]
    OutOfRange(f64),
    #[error("|m| = {m} exceeds j = {j}")]
    Domain { j: HalfInt, m: HalfInt },
}

/// A deformation parameter `0 < q < 1`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct QValue(f64);

impl QValue {
    pub fn new(q: f64) -> Result<Self, QError> {
        if q > 0.0 && q < 1.0 {
            Ok(QValue(q))
        } else {
            Err(QError::OutOfRange(q))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// `[x]_q = (q^x − q^{−x}) / (q − q^{−1})`.
pub fn q_number(x: f64, q: QValue) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let q = q.0;
    (libm::pow(q, x) - libm::pow(q, -x)) / (q - 1.0 / q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Raise,
    Lower,
}

/// `F±(j, m) = √([j ∓ m]_q [j ± m + 1]_q)`, zero at the annihilation boundary.
pub fn f_coefficient(j: HalfInt, m: HalfInt, direction: Direction, q: QValue) -> Result<f64, QError> {
    if j.is_negative() || m.abs() > j || !j.same_parity(m) {
        return Err(QError::Domain { j, m });
    }
    let (j, m) = (j.to_f64(), m.to_f64());
    let (a, b) = match direction {
        Direction::Raise => (j - m, j + m + 1.0),
        Direction::Lower => (j + m, j - m + 1.0),
    };
    Ok(libm::sqrt(q_number(a, q) * q_number(b, q)))
}

/// `[j]_q [j + 1]_q`, the Casimir eigenvalue up to normalisation.
pub fn casimir_eigenvalue(j: HalfInt, q: QValue) -> f64 {
    let j = j.to_f64();
    q_number(j, q) * q_number(j + 1.0, q)
}

/// Which asymptotic formula a [`LimitRow`] tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LimitKind {
    /// `[x]_q ~ q^{−x+1}`.
    QNumber,
    /// `F±(j, m) ~ q^{−j+½}` away from the boundary.
    Coefficient(Direction),
    /// `[j][j+1] ~ q^{−2j+1}`.
    Casimir,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitRow {
    pub kind: LimitKind,
    /// `x` for [`LimitKind::QNumber`], otherwise `j`.
    pub x: HalfInt,
    /// `m` for coefficient rows.
    pub m: Option<HalfInt>,
    pub value: f64,
    pub leading: f64,
    /// `|value / leading − 1|`.
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitReport {
    pub q: QValue,
    pub rows: Vec<LimitRow>,
}

impl LimitReport {
    pub fn max_deviation(&self) -> f64 {
        self.rows.iter().fold(0.0, |acc, r| acc.max(r.deviation))
    }

    pub fn max_deviation_of(&self, pick: impl Fn(LimitKind) -> bool) -> f64 {
        self.rows
            .iter()
            .filter(|r| pick(r.kind))
            .fold(0.0, |acc, r| acc.max(r.deviation))
    }

    pub fn within(&self, tolerance: f64) -> bool {
        self.max_deviation() <= tolerance
    }
}

fn row(kind: LimitKind, x: HalfInt, m: Option<HalfInt>, value: f64, leading: f64) -> LimitRow {
    LimitRow {
        kind,
        x,
        m,
        value,
        leading,
        deviation: libm::fabs(value / leading - 1.0),
    }
}

/// Relative deviations from the leading small-`q` behaviour for integers
/// `1 ≤ x ≤ max_x` and spins `½ ≤ j ≤ max_j`. Coefficient rows skip the
/// boundary weights where `F±` vanishes.
pub fn limit_checks(q: QValue, max_x: u32, max_j: HalfInt) -> LimitReport {
    let qf = q.0;
    let mut rows = Vec::new();
    for x in 1..=max_x {
        let xf = f64::from(x);
        rows.push(row(
            LimitKind::QNumber,
            HalfInt::from_int(x as i32),
            None,
            q_number(xf, q),
            libm::pow(qf, 1.0 - xf),
        ));
    }
    for j2 in 1..=max_j.twice().max(0) {
        let j = HalfInt::from_twice(j2);
        let jf = j.to_f64();
        let leading = libm::pow(qf, 0.5 - jf);
        for m2 in (-j2..=j2).step_by(2) {
            let m = HalfInt::from_twice(m2);
            for (dir, open) in [(Direction::Raise, m < j), (Direction::Lower, m > -j)] {
                if open {
                    let value = f_coefficient(j, m, dir, q).expect("valid weight");
                    rows.push(row(LimitKind::Coefficient(dir), j, Some(m), value, leading));
                }
            }
        }
        rows.push(row(
            LimitKind::Casimir,
            j,
            None,
            casimir_eigenvalue(j, q),
            libm::pow(qf, 1.0 - 2.0 * jf),
        ));
    }
    LimitReport { q, rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: f64) -> QValue {
        QValue::new(v).unwrap()
    }

    fn close(a: f64, b: f64, rel: f64) -> bool {
        libm::fabs(a - b) <= rel * libm::fabs(b)
    }

    #[test]
    fn q_number_values() {
        assert_eq!(q_number(0.0, q(0.5)), 0.0);
        assert!(close(q_number(1.0, q(0.5)), 1.0, 1e-12));
        assert!(close(q_number(2.0, q(0.5)), 2.5, 1e-12));
    }

    #[test]
    fn rejects_bad_q() {
        assert!(QValue::new(0.0).is_err());
        assert!(QValue::new(1.0).is_err());
        assert!(QValue::new(-0.3).is_err());
        assert!(QValue::new(f64::NAN).is_err());
    }

    #[test]
    fn coefficient_values() {
        let h = HalfInt::from_twice;
        assert_eq!(f_coefficient(h(1), h(1), Direction::Raise, q(0.5)).unwrap(), 0.0);
        assert!(close(
            f_coefficient(h(1), h(-1), Direction::Raise, q(0.5)).unwrap(),
            1.0,
            1e-12
        ));
        let small = q(1e-4);
        let f = f_coefficient(h(3), h(1), Direction::Raise, small).unwrap();
        assert!(close(f * 1e-4, 1.0, 1e-6));
        assert!(f_coefficient(h(1), h(3), Direction::Lower, small).is_err());
    }

    #[test]
    fn asymptotics_at_small_q() {
        let report = limit_checks(q(1e-4), 4, HalfInt::from_int(2));
        let half = |r: &LimitRow| r.kind == LimitKind::Casimir && r.x == HalfInt::HALF;
        assert!(report.rows.iter().filter(|r| !half(r)).all(|r| r.deviation < 1e-6));
        // [½][3/2] = q⁰ (1 − q³) / ((1 + q)(1 − q²)): first-order in q
        let r = report.rows.iter().find(|r| half(r)).unwrap();
        let exact = 1.0 - (1.0 - 1e-12) / ((1.0 + 1e-4) * (1.0 - 1e-8));
        assert!(close(r.deviation, exact, 1e-6));
        let x1 = report
            .rows
            .iter()
            .find(|r| r.kind == LimitKind::QNumber && r.x == HalfInt::ONE)
            .unwrap();
        assert!(x1.deviation < 1e-7);
    }
}
