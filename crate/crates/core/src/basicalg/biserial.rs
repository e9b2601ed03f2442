use super::ext_quiver;
use crate::error::Result;
use crate::schur::StructureAlgebra;
use serde::Serialize;

/// Why an algebra fails to be special biserial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BiserialWitness {
    /// More than two arrows start or end at the vertex.
    Degree { vertex: String, incoming: usize, outgoing: usize },
    /// Several arrows compose nontrivially after `arrow`.
    Successors { arrow: String, others: Vec<String> },
    /// Several arrows compose nontrivially before `arrow`.
    Predecessors { arrow: String, others: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiserialReport {
    pub special_biserial: bool,
    pub witness: Option<BiserialWitness>,
}

/// Checks the special biserial conditions on the Ext-quiver, reading the
/// vanishing of two-arrow paths from the products of the arrow elements.
///
/// Uses the Wald-Waschbüsch definition: at most two arrows in and out of
/// every vertex, and for each arrow `β` at most one arrow `γ` with `γβ ≠ 0`
/// and at most one `δ` with `βδ ≠ 0`.
pub fn is_special_biserial(a: &StructureAlgebra) -> Result<BiserialReport> {
    let ext = ext_quiver(a)?;
    let q = &ext.quiver;
    let fail = |w| BiserialReport { special_biserial: false, witness: Some(w) };
    for v in 0..q.num_vertices() {
        let (inc, out) = (q.in_arrows(v).count(), q.out_arrows(v).count());
        if inc > 2 || out > 2 {
            return Ok(fail(BiserialWitness::Degree { vertex: q.vertices()[v].clone(), incoming: inc, outgoing: out }));
        }
    }
    let elem = |x: usize| ext.arrow_element[x];
    for b in 0..q.num_arrows() {
        let ar = q.arrow(b);
        let after: Vec<String> = q
            .out_arrows(ar.dst)
            .filter(|&g| !a.product(elem(g), elem(b)).is_zero())
            .map(|g| q.arrow(g).label.clone())
            .collect();
        if after.len() > 1 {
            return Ok(fail(BiserialWitness::Successors { arrow: ar.label.clone(), others: after }));
        }
        let before: Vec<String> = q
            .in_arrows(ar.src)
            .filter(|&d| !a.product(elem(b), elem(d)).is_zero())
            .map(|d| q.arrow(d).label.clone())
            .collect();
        if before.len() > 1 {
            return Ok(fail(BiserialWitness::Predecessors { arrow: ar.label.clone(), others: before }));
        }
    }
    Ok(BiserialReport { special_biserial: true, witness: None })
}
