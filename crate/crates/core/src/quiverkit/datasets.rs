//! Quivers transcribed from drawings: two regular coverings of the quiver of
//! `S⁺(2,6)` under the swap action, wild subquivers inside them, and the
//! expected shapes of several Ext-quivers.
//!
//! Cover vertices are `v'` and `v''`. Arrows are labelled `{type}_{source}`.

use super::{GroupAction, Quiver, Subquiver};
use crate::error::Result;

fn cover(alpha: &[(&str, &str)], beta: &[(&str, &str)]) -> Result<(Quiver, GroupAction)> {
    let mut q = Quiver::new((0..=6).map(|v| format!("{v}'")).chain((0..=6).map(|v| format!("{v}''"))))?;
    for (kind, list) in [("α", alpha), ("β", beta)] {
        for (s, d) in list {
            q.add_arrow(s, d, format!("{kind}_{s}"), kind)?;
        }
    }
    let act = GroupAction::swap_primes(&q)?;
    Ok((q, act))
}

/// Covering of the quiver of `S⁺(2,6)` in characteristic 5.
pub fn covering_s26_p5() -> Result<(Quiver, GroupAction)> {
    cover(
        &[
            ("6'", "5'"),
            ("6''", "5''"),
            ("5'", "4'"),
            ("5''", "4''"),
            ("4'", "3''"),
            ("4''", "3'"),
            ("3'", "2'"),
            ("3''", "2''"),
            ("2'", "1'"),
            ("2''", "1''"),
            ("1'", "0'"),
            ("1''", "0''"),
        ],
        &[("6'", "1'"), ("6''", "1''"), ("5'", "0'"), ("5''", "0''")],
    )
}

/// Arrows of the wild subquiver of [`covering_s26_p5`].
pub const WILD_SUBQUIVER_S26_P5: [&str; 9] =
    ["α_4'", "α_3''", "α_2''", "α_1''", "α_5''", "α_4''", "α_6''", "β_5''", "β_6''"];

/// Covering of the quiver of `S⁺(2,6)` in characteristic 3.
pub fn covering_s26_p3() -> Result<(Quiver, GroupAction)> {
    cover(
        &[
            ("6'", "5'"),
            ("5'", "4'"),
            ("4'", "3'"),
            ("3'", "2''"),
            ("2''", "1''"),
            ("1''", "0''"),
            ("6''", "5''"),
            ("5''", "4''"),
            ("4''", "3''"),
            ("3''", "2'"),
            ("2'", "1'"),
            ("1'", "0'"),
        ],
        &[
            ("3'", "0'"),
            ("3''", "0''"),
            ("5''", "2''"),
            ("4''", "1''"),
            ("5'", "2'"),
            ("4'", "1'"),
            ("6''", "3'"),
            ("6'", "3''"),
        ],
    )
}

/// Arrows of the wild subquiver of [`covering_s26_p3`].
pub const WILD_SUBQUIVER_S26_P3: [&str; 10] =
    ["β_3'", "β_4''", "β_5'", "β_6'", "α_3'", "α_2''", "α_4''", "α_3''", "α_5'", "α_6'"];

/// Arrows of the wild subquiver of the quiver of `S⁺(2,p+1)`, `p ≥ 7`, as
/// labelled by [`super::borel2_presentation`].
pub fn wild_subquiver_s2_p_plus_1(p: u64) -> Vec<String> {
    let top = p as usize + 1;
    let mut v: Vec<String> = (1..=4).rev().map(|s| format!("α_{s}")).collect();
    v.extend((top - 2..=top).rev().map(|s| format!("α_{s}")));
    v.push(format!("β_{top}"));
    v.push(format!("β_{}", top - 1));
    v
}

pub fn subquiver(q: &Quiver, labels: &[impl AsRef<str>]) -> Result<Subquiver> {
    let l: Vec<&str> = labels.iter().map(|s| s.as_ref()).collect();
    Subquiver::from_arrow_labels(q, &l)
}

/// Weights spanning the wild truncation of `S⁺(3,3)`.
pub const XSET_S33: [&str; 5] = ["030", "120", "021", "111", "201"];

/// Expected arrows `(label, source, target)` of the quiver of the truncation
/// of `S⁺(3,3)` to [`XSET_S33`].
pub fn s33_truncation_arrows(p: u64) -> Vec<(&'static str, &'static str, &'static str)> {
    let mut v = vec![
        ("ξ_{122,222}", "030", "120"),
        ("ξ_{122,123}", "111", "120"),
        ("ξ_{113,123}", "111", "201"),
        ("ξ_{123,223}", "021", "111"),
        ("ξ_{222,223}", "021", "030"),
    ];
    if p == 2 {
        v.push(("ξ_{113,223}", "021", "201"));
    }
    v
}

/// Idempotents `ξ_{24}, ξ_{23}, ξ_{12}` of `S⁺(4,2)` as weights.
pub const S42_TRUNCATION: [&str; 3] = ["0101", "0110", "1100"];

/// Expected arrows of the quiver of the truncation of `S⁺(4,2)`.
pub const S42_TRUNCATION_ARROWS: [(&str, &str, &str); 3] =
    [("ξ_{23,24}", "0101", "0110"), ("ξ_{12,23}", "0110", "1100"), ("ξ_{12,32}", "0110", "1100")];

/// Expected arrows of the quiver of `S⁺(3,2)`; the two arrows of step 2
/// appear only in characteristic 2.
pub fn s32_arrows(p: u64) -> Vec<(&'static str, &'static str, &'static str)> {
    let mut v = vec![
        ("ξ_{23,33}", "002", "011"),
        ("ξ_{22,23}", "011", "020"),
        ("ξ_{12,22}", "020", "110"),
        ("ξ_{11,12}", "110", "200"),
        ("ξ_{13,23}", "011", "101"),
        ("ξ_{12,13}", "101", "110"),
    ];
    if p == 2 {
        v.push(("ξ_{22,33}", "002", "020"));
        v.push(("ξ_{11,22}", "020", "200"));
    }
    v
}
