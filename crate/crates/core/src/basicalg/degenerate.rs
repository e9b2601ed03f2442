use crate::error::{Error, Result};
use crate::schur::{reduce_coef, StructureAlgebra};
use crate::symcomb::PairOrbit;
use std::collections::BTreeMap;

/// Non-negative degrees on the basis, zero on idempotents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingFunction {
    degrees: Vec<u32>,
}

impl GradingFunction {
    pub fn zero(a: &StructureAlgebra) -> Self {
        GradingFunction { degrees: vec![0; a.dim()] }
    }

    pub fn new(a: &StructureAlgebra, degrees: Vec<u32>) -> Result<Self> {
        if degrees.len() != a.dim() {
            return Err(Error::invalid("grading needs one degree per basis element"));
        }
        if let Some(&e) = a.idempotents().iter().find(|&&e| degrees[e] != 0) {
            return Err(Error::invalid(format!("grading is nonzero on the idempotent {}", a.label(e))));
        }
        Ok(GradingFunction { degrees })
    }

    /// Degrees given on `ξ` labels written as `("12", "23")`; others get 0.
    pub fn from_orbits(a: &StructureAlgebra, values: &[(&str, &str, u32)]) -> Result<Self> {
        let n = a.shape().map(|s| s.0).ok_or_else(|| Error::invalid("grading by ξ labels needs a Schur shape"))?;
        let mut degrees = vec![0; a.dim()];
        for &(i, j, d) in values {
            let o = PairOrbit::parse(n, i, j)?;
            let k = a.index_of_orbit(&o).ok_or_else(|| Error::invalid(format!("{o} is not a basis element")))?;
            degrees[k] = d;
        }
        GradingFunction::new(a, degrees)
    }

    /// The grading of `S⁺(3,2)` that degenerates it to a special biserial
    /// algebra.
    pub fn preset_s32(a: &StructureAlgebra) -> Result<Self> {
        if a.shape() != Some((3, 2)) {
            return Err(Error::invalid("the s32 preset applies to S⁺(3,2) only"));
        }
        GradingFunction::from_orbits(
            a,
            &[
                ("11", "22", 1),
                ("22", "33", 1),
                ("11", "13", 1),
                ("12", "13", 1),
                ("13", "23", 1),
                ("13", "33", 1),
                ("11", "33", 2),
                ("11", "23", 2),
                ("12", "23", 2),
                ("12", "33", 2),
            ],
        )
    }

    pub fn degree(&self, k: usize) -> u32 {
        self.degrees[k]
    }

    /// `φ(k) ≥ φ(h) + φ(l)` whenever `γ_{hl}^k ≠ 0` in the characteristic.
    pub fn check_admissible(&self, a: &StructureAlgebra) -> Result<()> {
        let p = a.characteristic();
        for (&(h, l), terms) in a.table() {
            for &(k, c) in terms {
                if reduce_coef(c, p) != 0 && self.degrees[k] < self.degrees[h] + self.degrees[l] {
                    return Err(Error::Inadmissible {
                        h: a.label(h).to_string(),
                        l: a.label(l).to_string(),
                        k: a.label(k).to_string(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// The limit product `μ₀` with its checks.
#[derive(Debug, Clone)]
pub struct Degeneration {
    pub algebra: StructureAlgebra,
    pub triples_checked: usize,
}

/// Keeps the structure constants with `φ(k) = φ(h) + φ(l)` and checks
/// that the result is associative with the same unit.
pub fn degenerate(a: &StructureAlgebra, phi: &GradingFunction) -> Result<Degeneration> {
    if phi.degrees.len() != a.dim() {
        return Err(Error::invalid("grading has the wrong length"));
    }
    phi.check_admissible(a)?;
    let mut table = BTreeMap::new();
    for (&(h, l), terms) in a.table() {
        let kept: Vec<(usize, i64)> =
            terms.iter().copied().filter(|&(k, _)| phi.degrees[k] == phi.degrees[h] + phi.degrees[l]).collect();
        if !kept.is_empty() {
            table.insert((h, l), kept);
        }
    }
    let b = a.with_table(table)?;
    let triples = b.check_associativity()?;
    b.check_idempotents()?;
    Ok(Degeneration { algebra: b, triples_checked: triples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::{build_algebra, BasisKind, LinearCombo, ScaleCap};

    fn s32(p: u64) -> StructureAlgebra {
        build_algebra(3, 2, p, BasisKind::Borel, &ScaleCap::default()).unwrap()
    }

    fn idx(a: &StructureAlgebra, i: &str, j: &str) -> usize {
        a.index_of_orbit(&PairOrbit::parse(3, i, j).unwrap()).unwrap()
    }

    #[test]
    fn preset_degenerates_long_product() {
        let a = s32(0);
        let phi = GradingFunction::preset_s32(&a).unwrap();
        let b = degenerate(&a, &phi).unwrap().algebra;
        let prod = b.product(idx(&b, "12", "22"), idx(&b, "22", "23"));
        assert_eq!(prod, LinearCombo::basis(idx(&b, "12", "32")));
        assert!(b.product(idx(&b, "11", "12"), idx(&b, "12", "22")).is_zero());
    }

    #[test]
    fn zero_grading_is_identity() {
        let a = s32(3);
        let b = degenerate(&a, &GradingFunction::zero(&a)).unwrap().algebra;
        assert_eq!(b.table(), a.table());
    }

    #[test]
    fn inadmissible_rejected() {
        let a = s32(0);
        let mut deg = vec![0; a.dim()];
        deg[idx(&a, "11", "12")] = 1;
        let phi = GradingFunction::new(&a, deg).unwrap();
        assert!(matches!(degenerate(&a, &phi), Err(Error::Inadmissible { .. })));
        let mut deg = vec![0; a.dim()];
        deg[a.idempotents()[0]] = 1;
        assert!(GradingFunction::new(&a, deg).is_err());
    }
}
