//! Representation type of `S⁺(n,r)` and the computational evidence behind it.

mod cases;

use crate::error::{Error, Result};
use crate::linalg::is_prime;
use crate::reptype::RepType;
use crate::schur::{basis_dimension, embed_degree, truncate_columns, BasisKind, ScaleCap};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Write;

fn check_params(n: usize, p: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if p != 0 && !is_prime(p) {
        return Err(Error::BadCharacteristic(p));
    }
    Ok(())
}

fn is_finite(n: usize, r: usize, p: u64) -> bool {
    n == 1
        || r <= 1
        || (n == 2
            && match p {
                0 => true,
                2 => r <= 3,
                3 => r <= 4,
                _ => r as u64 <= p,
            })
}

/// Representation type of `S⁺(n,r)` over a field of characteristic `p`.
pub fn classify(n: usize, r: usize, p: u64) -> Result<RepType> {
    check_params(n, p)?;
    Ok(if is_finite(n, r, p) {
        RepType::Finite
    } else if (n, r, p) == (2, 5, 3) || (n == 3 && r == 2) {
        RepType::Tame
    } else {
        RepType::Wild
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    /// A cited external fact, not recomputed.
    External,
}

/// One executed check or cited fact.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    /// The argument the check belongs to.
    pub basis: String,
    pub outcome: Outcome,
    pub payload: serde_json::Value,
}

impl Check {
    pub(crate) fn pass(name: &str, basis: &str, payload: serde_json::Value) -> Self {
        Check { name: name.into(), basis: basis.into(), outcome: Outcome::Pass, payload }
    }

    pub(crate) fn external(name: &str, citation: &str) -> Self {
        Check {
            name: name.into(),
            basis: citation.into(),
            outcome: Outcome::External,
            payload: serde_json::Value::Null,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Every check ran and passed.
    Verified,
    /// The verdict rests on the classification theorem alone.
    Asserted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// `S⁺(n,s) ≅ e S⁺(n,s+1) e`.
    Degree,
    /// `S⁺(m,r) ≅ e S⁺(n,r) e`.
    Columns,
}

/// One idempotent truncation in a reduction chain.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub from: (usize, usize),
    pub to: (usize, usize),
    /// Number of basis pairs compared, when the embedding was recomputed.
    pub pairs_checked: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub n: usize,
    pub r: usize,
    pub p: u64,
    pub rep_type: RepType,
    pub status: Status,
    /// The case whose checks were run, when it differs from `(n,r)`.
    pub base_case: Option<(usize, usize)>,
    pub reduction: Vec<ReductionStep>,
    pub evidence: Vec<Check>,
    pub note: Option<String>,
}

impl Verdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn report(&self) -> String {
        let mut s = format!(
            "S⁺({},{}) over characteristic {}: {} ({})\n",
            self.n,
            self.r,
            self.p,
            self.rep_type,
            match self.status {
                Status::Verified => "verified",
                Status::Asserted => "asserted (theorem only)",
            }
        );
        if let Some(note) = &self.note {
            let _ = writeln!(s, "  note: {note}");
        }
        if let Some((m, t)) = self.base_case {
            let _ = writeln!(s, "  base case: S⁺({m},{t})");
        }
        for st in &self.reduction {
            let how = match st.pairs_checked {
                Some(k) => format!("certified on {k} basis pairs"),
                None => "above the certificate size, not recomputed".into(),
            };
            let _ = writeln!(
                s,
                "  {:?} step S⁺({},{}) -> S⁺({},{}): {how}",
                st.kind, st.from.0, st.from.1, st.to.0, st.to.1
            );
        }
        for c in &self.evidence {
            let mark = match c.outcome {
                Outcome::Pass => "pass",
                Outcome::External => "cited",
            };
            let payload = if c.payload.is_null() { String::new() } else { format!(" {}", c.payload) };
            let _ = writeln!(s, "  [{mark}] {} ({}){payload}", c.name, c.basis);
        }
        s
    }
}

/// Knobs for [`evidence`].
#[derive(Debug, Clone, Copy)]
pub struct EvidenceOptions {
    pub cap: ScaleCap,
    /// Largest target dimension for which a reduction step is recomputed.
    pub certificate_dim: u128,
}

impl Default for EvidenceOptions {
    fn default() -> Self {
        EvidenceOptions { cap: ScaleCap::default(), certificate_dim: 300 }
    }
}

/// The smallest case carrying the verdict, or `None` when there is no
/// computation behind it.
fn base_case(n: usize, r: usize, p: u64) -> Option<(usize, usize)> {
    match classify(n, r, p).ok()? {
        RepType::Finite => None,
        RepType::Tame => Some((n, r)),
        RepType::Wild => {
            if n >= 3 && r >= 3 {
                Some((3, 3))
            } else if n >= 4 && r == 2 {
                (p >= 3).then_some((4, 2))
            } else {
                // n = 2
                match p {
                    2 => Some((2, 4)),
                    3 | 5 => Some((2, 6)),
                    _ => Some((2, p as usize + 1)),
                }
            }
        }
    }
}

fn chain(base: (usize, usize), target: (usize, usize), p: u64, opts: &EvidenceOptions) -> Result<Vec<ReductionStep>> {
    let (m, s) = base;
    let (n, r) = target;
    let mut steps = Vec::new();
    for t in s..r {
        let pairs = if basis_dimension(m, t + 1, BasisKind::Borel) <= opts.certificate_dim {
            Some(embed_degree(m, t, p, &opts.cap)?.pairs_checked)
        } else {
            None
        };
        steps.push(ReductionStep { kind: StepKind::Degree, from: (m, t), to: (m, t + 1), pairs_checked: pairs });
    }
    if n > m {
        let pairs = if basis_dimension(n, r, BasisKind::Borel) <= opts.certificate_dim {
            Some(truncate_columns(n, m, r, p, &opts.cap)?.pairs_checked)
        } else {
            None
        };
        steps.push(ReductionStep { kind: StepKind::Columns, from: (m, r), to: (n, r), pairs_checked: pairs });
    }
    Ok(steps)
}

/// Verdict together with the checks that support it. A failing check is
/// returned as an error carrying its payload.
pub fn evidence(n: usize, r: usize, p: u64, opts: &EvidenceOptions) -> Result<Verdict> {
    let rep_type = classify(n, r, p)?;
    let mut v = Verdict {
        n,
        r,
        p,
        rep_type,
        status: Status::Asserted,
        base_case: None,
        reduction: Vec::new(),
        evidence: Vec::new(),
        note: None,
    };
    let Some(base) = base_case(n, r, p) else {
        v.note = Some(match rep_type {
            RepType::Finite if n == 1 => "S⁺(1,r) is one-dimensional".into(),
            RepType::Finite if r <= 1 => "S⁺(n,r) with r ≤ 1 is semisimple or one-dimensional".into(),
            RepType::Finite => "finite type from the known classification; the AR-quiver is not recomputed".into(),
            _ => "no witness is available for n ≥ 4, r = 2 in this characteristic".into(),
        });
        return Ok(v);
    };
    v.evidence = cases::run(base.0, base.1, p, &opts.cap)?;
    if base != (n, r) {
        v.base_case = Some(base);
        v.reduction = chain(base, (n, r), p, opts)?;
    }
    v.status = Status::Verified;
    Ok(v)
}

/// Verdicts over `1 ≤ n ≤ n_max`, `0 ≤ r ≤ r_max` for each characteristic,
/// ordered by `(p, n, r)`.
pub fn grid(n_max: usize, r_max: usize, chars: &[u64]) -> Result<Vec<(u64, usize, usize, RepType)>> {
    for &p in chars {
        check_params(1, p)?;
    }
    let cells: Vec<(u64, usize, usize)> =
        chars.iter().flat_map(|&p| (1..=n_max).flat_map(move |n| (0..=r_max).map(move |r| (p, n, r)))).collect();
    cells.par_iter().map(|&(p, n, r)| Ok((p, n, r, classify(n, r, p)?))).collect()
}

/// Grid as text, one table per characteristic; `F`, `T`, `W` per cell.
pub fn render_grid(cells: &[(u64, usize, usize, RepType)]) -> String {
    let mut s = String::new();
    let mut chars: Vec<u64> = cells.iter().map(|c| c.0).collect();
    chars.dedup();
    for p in chars {
        let row: Vec<_> = cells.iter().filter(|c| c.0 == p).collect();
        let r_max = row.iter().map(|c| c.2).max().unwrap_or(0);
        let n_max = row.iter().map(|c| c.1).max().unwrap_or(0);
        let _ = writeln!(s, "p = {p}");
        let _ = write!(s, "n\\r");
        for r in 0..=r_max {
            let _ = write!(s, " {r:>2}");
        }
        s.push('\n');
        for n in 1..=n_max {
            let _ = write!(s, "{n:>3}");
            for c in row.iter().filter(|c| c.1 == n) {
                let t = match c.3 {
                    RepType::Finite => 'F',
                    RepType::Tame => 'T',
                    RepType::Wild => 'W',
                };
                let _ = write!(s, "  {t}");
            }
            s.push('\n');
        }
    }
    s
}
