use crate::error::{Error, Result};
use std::fmt;

/// Names for the normalized local energy functions attached to a pair of
/// boxes. All of them vanish on a pair of vacuum boxes and are nonnegative.
///
/// `V(a)` is `v_a` for `0 <= a <= n-1`, `VStar(a)` is `v*_a` for
/// `1 <= a <= n-1`, `W(a)` is `w_a` for `1 <= a <= n-1`, `WMinusV(a)` is
/// `w_a - v_a` for `1 <= a <= n-2`, and `V0Sigma1` is `v_0^{sigma_1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum EnergyKind {
    V(usize),
    V0Sigma1,
    VStar(usize),
    W(usize),
    WMinusV(usize),
}

impl EnergyKind {
    /// Checks the index range against the rank.
    pub fn validate(self, n: usize) -> Result<()> {
        let ok = match self {
            EnergyKind::V(a) => a <= n - 1,
            EnergyKind::V0Sigma1 => true,
            EnergyKind::VStar(a) => (1..=n - 1).contains(&a),
            EnergyKind::W(a) => (1..=n - 1).contains(&a),
            EnergyKind::WMinusV(a) => (1..=n - 2).contains(&a),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedKind(
                self.to_string(),
                format!("index out of range for rank n={n}"),
            ))
        }
    }

    /// The kinds whose counting function has a first-term color set:
    /// `v_0 .. v_{n-1}, v*_{n-1}, w_{n-2}-v_{n-2} .. w_1-v_1, v_0^{sigma_1}`,
    /// in the order used by the counting tables.
    pub fn counting_kinds(n: usize) -> Vec<EnergyKind> {
        let mut out: Vec<EnergyKind> = (0..n).map(EnergyKind::V).collect();
        out.push(EnergyKind::VStar(n - 1));
        for a in (1..=n - 2).rev() {
            out.push(EnergyKind::WMinusV(a));
        }
        out.push(EnergyKind::V0Sigma1);
        out
    }

    /// Every kind the energy report covers.
    pub fn report_kinds(n: usize) -> Vec<EnergyKind> {
        let mut out: Vec<EnergyKind> = (0..n).map(EnergyKind::V).collect();
        out.push(EnergyKind::V0Sigma1);
        out.extend((1..=n - 1).map(EnergyKind::VStar));
        out.extend((1..=n - 1).map(EnergyKind::W));
        out.extend((1..=n - 2).map(EnergyKind::WMinusV));
        out
    }

    /// Parses the textual form produced by `Display`: `v0`, `v*3`, `w2`,
    /// `w2-v2`, `v0^s1`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown energy kind {s:?}"));
        if s == "v0^s1" {
            return Ok(EnergyKind::V0Sigma1);
        }
        if let Some(rest) = s.strip_prefix("v*") {
            let a = rest.parse().map_err(|_| bad())?;
            return Ok(EnergyKind::VStar(a));
        }
        if let Some(rest) = s.strip_prefix('v') {
            let a = rest.parse().map_err(|_| bad())?;
            return Ok(EnergyKind::V(a));
        }
        if let Some(rest) = s.strip_prefix('w') {
            if let Some((wa, va)) = rest.split_once("-v") {
                let a: usize = wa.parse().map_err(|_| bad())?;
                let b: usize = va.parse().map_err(|_| bad())?;
                if a != b {
                    return Err(bad());
                }
                return Ok(EnergyKind::WMinusV(a));
            }
            let a = rest.parse().map_err(|_| bad())?;
            return Ok(EnergyKind::W(a));
        }
        Err(bad())
    }
}

impl fmt::Display for EnergyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnergyKind::V(a) => write!(f, "v{a}"),
            EnergyKind::V0Sigma1 => write!(f, "v0^s1"),
            EnergyKind::VStar(a) => write!(f, "v*{a}"),
            EnergyKind::W(a) => write!(f, "w{a}"),
            EnergyKind::WMinusV(a) => write!(f, "w{a}-v{a}"),
        }
    }
}
