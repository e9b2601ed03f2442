use super::{Quiver, QuiverWithRelations, Relation};
use crate::error::Result;
use crate::schur::check_char;

/// Type tag of arrows `λ₂ → λ₂ - p^d`: `α, β, γ, δ, ε`, then `α5, α6, …`.
pub fn arrow_type_name(d: u32) -> String {
    const LETTERS: [&str; 5] = ["α", "β", "γ", "δ", "ε"];
    LETTERS.get(d as usize).map(|s| s.to_string()).unwrap_or_else(|| format!("α{d}"))
}

/// Exponents `d` with `p^d ≤ r`; only `d = 0` in characteristic 0.
pub(crate) fn arrow_steps(r: usize, p: u64) -> Vec<(u32, usize)> {
    if p == 0 {
        return if r >= 1 { vec![(0, 1)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut q = 1usize;
    let mut d = 0;
    while q <= r {
        out.push((d, q));
        q = match q.checked_mul(p as usize) {
            Some(x) => x,
            None => break,
        };
        d += 1;
    }
    out
}

/// The quiver of `S⁺(2,r)` with its relations in characteristic `p`.
///
/// Vertex `v` stands for `λ = (r - v, v)`. There is one arrow of type
/// `α_d` from `v` to `v - p^d`; relations are the commutativity relations
/// `α_s α_t - α_t α_s` at `v ≥ p^s + p^t` and the monomials `α_s^p` at
/// `v ≥ p^{s+1}`.
pub fn borel2_presentation(r: usize, p: u64) -> Result<QuiverWithRelations> {
    check_char(p)?;
    let mut q = Quiver::new((0..=r).map(|v| v.to_string()))?;
    let steps = arrow_steps(r, p);
    // arrow[d][v] is the arrow of type α_d leaving v
    let mut arrow = vec![vec![None; r + 1]; steps.len()];
    for &(d, step) in &steps {
        let kind = arrow_type_name(d);
        for v in (step..=r).rev() {
            let a = q.add_arrow_by_index(v, v - step, format!("{kind}_{v}"), kind.clone())?;
            arrow[d as usize][v] = Some(a);
        }
    }
    let mut relations = Vec::new();
    if p > 0 {
        for v in (0..=r).rev() {
            for (si, &(_, ps)) in steps.iter().enumerate() {
                for (ti, &(_, pt)) in steps.iter().enumerate().skip(si + 1) {
                    if v >= ps + pt {
                        let st = vec![arrow[ti][v].expect("arrow"), arrow[si][v - pt].expect("arrow")];
                        let ts = vec![arrow[si][v].expect("arrow"), arrow[ti][v - ps].expect("arrow")];
                        relations.push(Relation::new(&q, vec![(1, st), (-1, ts)], p)?);
                    }
                }
                if v >= ps * p as usize {
                    let path = (0..p as usize).map(|k| arrow[si][v - k * ps].expect("arrow")).collect();
                    relations.push(Relation::new(&q, vec![(1, path)], p)?);
                }
            }
        }
    }
    Ok(QuiverWithRelations { quiver: q, relations, char: p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn set(v: &[&str]) -> BTreeSet<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn s26_relations() {
        let q = borel2_presentation(6, 3).unwrap();
        assert_eq!(
            q.rendered_relations(),
            set(&["(α^3)_6", "(α^3)_5", "(α^3)_4", "(α^3)_3", "(αβ-βα)_6", "(αβ-βα)_5", "(αβ-βα)_4"])
        );
        let q = borel2_presentation(6, 5).unwrap();
        assert_eq!(q.rendered_relations(), set(&["(α^5)_6", "(α^5)_5", "(αβ-βα)_6"]));
    }

    #[test]
    fn characteristic_zero_is_linear() {
        let q = borel2_presentation(4, 0).unwrap();
        assert_eq!(q.quiver.num_arrows(), 4);
        assert!(q.relations.is_empty());
        assert_eq!(borel2_presentation(0, 2).unwrap().quiver.num_arrows(), 0);
    }

    #[test]
    fn type_names() {
        assert_eq!(arrow_type_name(2), "γ");
        assert_eq!(arrow_type_name(7), "α7");
    }
}
