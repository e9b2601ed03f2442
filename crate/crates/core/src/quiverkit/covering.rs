use super::{Path, Quiver, Relation, Subquiver};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// A finite group acting on a quiver by vertex and arrow permutations.
/// Element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    vertex_perms: Vec<Vec<usize>>,
    arrow_perms: Vec<Vec<usize>>,
}

fn is_bijection(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

impl GroupAction {
    /// Checks that every element permutes vertices and arrows compatibly
    /// with incidence and that the elements form a group.
    pub fn new(q: &Quiver, vertex_perms: Vec<Vec<usize>>, arrow_perms: Vec<Vec<usize>>) -> Result<Self> {
        if vertex_perms.is_empty() || vertex_perms.len() != arrow_perms.len() {
            return Err(Error::invalid("group action needs one vertex and one arrow permutation per element"));
        }
        for (vp, ap) in vertex_perms.iter().zip(&arrow_perms) {
            if vp.len() != q.num_vertices() || ap.len() != q.num_arrows() || !is_bijection(vp) || !is_bijection(ap) {
                return Err(Error::invalid("group element is not a permutation of the quiver"));
            }
            for (a, &b) in ap.iter().enumerate() {
                if q.arrow(b).src != vp[q.arrow(a).src] || q.arrow(b).dst != vp[q.arrow(a).dst] {
                    return Err(Error::invalid(format!(
                        "group element does not respect incidence at {}",
                        q.arrow(a).label
                    )));
                }
            }
        }
        let identity: Vec<usize> = (0..q.num_vertices()).collect();
        let id_arrows: Vec<usize> = (0..q.num_arrows()).collect();
        if vertex_perms[0] != identity || arrow_perms[0] != id_arrows {
            return Err(Error::invalid("first group element must be the identity"));
        }
        let act = GroupAction { vertex_perms, arrow_perms };
        for g in 0..act.order() {
            for h in 0..act.order() {
                let comp: Vec<usize> = act.vertex_perms[h].iter().map(|&v| act.vertex_perms[g][v]).collect();
                let comp_a: Vec<usize> = act.arrow_perms[h].iter().map(|&a| act.arrow_perms[g][a]).collect();
                let closed = (0..act.order()).any(|k| act.vertex_perms[k] == comp && act.arrow_perms[k] == comp_a);
                if !closed {
                    return Err(Error::invalid("group elements are not closed under composition"));
                }
            }
        }
        Ok(act)
    }

    pub fn trivial(q: &Quiver) -> Self {
        GroupAction {
            vertex_perms: vec![(0..q.num_vertices()).collect()],
            arrow_perms: vec![(0..q.num_arrows()).collect()],
        }
    }

    /// The involution exchanging `v'` and `v''`, with arrows matched by
    /// endpoints and type.
    pub fn swap_primes(q: &Quiver) -> Result<Self> {
        let swap = |label: &str| -> Option<String> {
            if let Some(base) = label.strip_suffix("''") {
                Some(format!("{base}'"))
            } else {
                label.strip_suffix('\'').map(|base| format!("{base}''"))
            }
        };
        let vp = q
            .vertices()
            .iter()
            .map(|v| {
                swap(v)
                    .and_then(|w| q.vertex_index(&w))
                    .ok_or_else(|| Error::invalid(format!("vertex {v} has no primed partner")))
            })
            .collect::<Result<Vec<_>>>()?;
        let ap = q
            .arrows()
            .iter()
            .map(|a| {
                let hits: Vec<usize> = (0..q.num_arrows())
                    .filter(|&b| {
                        let arr = q.arrow(b);
                        arr.src == vp[a.src] && arr.dst == vp[a.dst] && arr.kind == a.kind
                    })
                    .collect();
                match hits.as_slice() {
                    [b] => Ok(*b),
                    _ => Err(Error::invalid(format!("arrow {} has no unique partner", a.label))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        GroupAction::new(q, vec![(0..q.num_vertices()).collect(), vp], vec![(0..q.num_arrows()).collect(), ap])
    }

    pub fn order(&self) -> usize {
        self.vertex_perms.len()
    }

    pub fn vertex_image(&self, g: usize, v: usize) -> usize {
        self.vertex_perms[g][v]
    }

    pub fn arrow_image(&self, g: usize, a: usize) -> usize {
        self.arrow_perms[g][a]
    }

    /// No non-identity element fixes a vertex or an arrow.
    pub fn is_free(&self) -> bool {
        (1..self.order()).all(|g| {
            self.vertex_perms[g].iter().enumerate().all(|(v, &w)| v != w)
                && self.arrow_perms[g].iter().enumerate().all(|(a, &b)| a != b)
        })
    }
}

/// The covering map `Q̃ → Q̃/G` on indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub vertex: Vec<usize>,
    pub arrow: Vec<usize>,
}

fn strip_primes(s: &str) -> &str {
    s.trim_end_matches('\'')
}

/// Orbit quiver of a free action. A non-trivial orbit whose members agree
/// after removing primes gets that label; other orbits keep the label of
/// their smallest member.
pub fn quotient_by_group(q: &Quiver, act: &GroupAction) -> Result<(Quiver, Projection)> {
    if !act.is_free() {
        return Err(Error::NotFree("a non-identity element fixes a vertex or an arrow".into()));
    }
    let mut vproj = vec![usize::MAX; q.num_vertices()];
    let mut orbit_labels = Vec::new();
    for v in 0..q.num_vertices() {
        if vproj[v] != usize::MAX {
            continue;
        }
        let members: BTreeSet<usize> = (0..act.order()).map(|g| act.vertex_image(g, v)).collect();
        let stripped: BTreeSet<&str> = members.iter().map(|&w| strip_primes(&q.vertices()[w])).collect();
        let label = if members.len() > 1 && stripped.len() == 1 {
            stripped.into_iter().next().expect("one label").to_string()
        } else {
            q.vertices()[v].clone()
        };
        for &w in &members {
            vproj[w] = orbit_labels.len();
        }
        orbit_labels.push(label);
    }
    let mut quotient =
        Quiver::new(orbit_labels.clone()).map_err(|_| Error::invalid("orbits do not have distinct labels"))?;
    let mut aproj = vec![usize::MAX; q.num_arrows()];
    let mut pending = Vec::new();
    for a in 0..q.num_arrows() {
        if aproj[a] != usize::MAX {
            continue;
        }
        let slot = pending.len();
        for g in 0..act.order() {
            aproj[act.arrow_image(g, a)] = slot;
        }
        pending.push(a);
    }
    let mut used: BTreeMap<String, usize> = BTreeMap::new();
    let names: Vec<String> = pending
        .iter()
        .map(|&a| {
            let ar = q.arrow(a);
            if ar.kind.is_empty() {
                ar.label.clone()
            } else {
                format!("{}_{}", ar.kind, orbit_labels[vproj[ar.src]])
            }
        })
        .collect();
    for n in &names {
        *used.entry(n.clone()).or_insert(0) += 1;
    }
    for (slot, &a) in pending.iter().enumerate() {
        let ar = q.arrow(a);
        let label = if used[&names[slot]] == 1 { names[slot].clone() } else { ar.label.clone() };
        quotient.add_arrow_by_index(vproj[ar.src], vproj[ar.dst], label, ar.kind.clone())?;
    }
    Ok((quotient, Projection { vertex: vproj, arrow: aproj }))
}

/// A type-preserving isomorphism `a → b` as vertex and arrow maps.
pub fn find_isomorphism(a: &Quiver, b: &Quiver) -> Option<(Vec<usize>, Vec<usize>)> {
    if a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows() {
        return None;
    }
    let counts = |q: &Quiver| {
        let mut m: BTreeMap<(usize, usize, String), usize> = BTreeMap::new();
        for ar in q.arrows() {
            *m.entry((ar.src, ar.dst, ar.kind.clone())).or_insert(0) += 1;
        }
        m
    };
    let (ca, cb) = (counts(a), counts(b));
    let signature = |q: &Quiver, v: usize| {
        let mut s: Vec<(bool, String)> = q
            .arrows()
            .iter()
            .filter(|ar| ar.src == v || ar.dst == v)
            .map(|ar| (ar.src == v, ar.kind.clone()))
            .collect();
        s.sort();
        s
    };
    let sa: Vec<_> = (0..a.num_vertices()).map(|v| signature(a, v)).collect();
    let sb: Vec<_> = (0..b.num_vertices()).map(|v| signature(b, v)).collect();

    fn extend(
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ok: &dyn Fn(&[usize]) -> bool,
        candidates: &dyn Fn(usize) -> Vec<usize>,
    ) -> bool {
        if v == map.len() {
            return true;
        }
        for w in candidates(v) {
            if used[w] {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if ok(&map[..=v]) && extend(v + 1, map, used, ok, candidates) {
                return true;
            }
            used[w] = false;
        }
        false
    }

    let ok = |partial: &[usize]| {
        let k = partial.len();
        ca.iter()
            .filter(|((s, d, _), _)| *s < k && *d < k)
            .all(|((s, d, t), c)| cb.get(&(partial[*s], partial[*d], t.clone())) == Some(c))
            && cb.iter().filter(|((s, d, _), _)| partial.contains(s) && partial.contains(d)).count()
                == ca.iter().filter(|((s, d, _), _)| *s < k && *d < k).count()
    };
    let candidates = |v: usize| (0..b.num_vertices()).filter(|&w| sb[w] == sa[v]).collect::<Vec<_>>();
    let mut map = vec![0; a.num_vertices()];
    let mut used = vec![false; b.num_vertices()];
    if !extend(0, &mut map, &mut used, &ok, &candidates) {
        return None;
    }
    let mut taken = vec![false; b.num_arrows()];
    let mut amap = Vec::with_capacity(a.num_arrows());
    for ar in a.arrows() {
        let hit = (0..b.num_arrows()).find(|&x| {
            let br = b.arrow(x);
            !taken[x] && br.src == map[ar.src] && br.dst == map[ar.dst] && br.kind == ar.kind
        })?;
        taken[hit] = true;
        amap.push(hit);
    }
    Some((map, amap))
}

/// `r_G`: every relation on `Q̃/G` lifted at each vertex over its source.
pub fn lift_relations(
    cover: &Quiver,
    proj: &Projection,
    quotient: &Quiver,
    rels: &[Relation],
    p: u64,
) -> Result<Vec<Relation>> {
    let lift_path = |start: usize, path: &Path| -> Result<Path> {
        let mut cur = start;
        let mut out = Vec::with_capacity(path.len());
        for &a in path {
            let hits: Vec<usize> = cover.out_arrows(cur).filter(|&b| proj.arrow[b] == a).collect();
            match hits.as_slice() {
                [b] => {
                    out.push(*b);
                    cur = cover.arrow(*b).dst;
                }
                _ => {
                    return Err(Error::LiftFailure(format!(
                        "arrow {} has {} lifts at {}",
                        quotient.arrow(a).label,
                        hits.len(),
                        cover.vertices()[cur]
                    )))
                }
            }
        }
        Ok(out)
    };
    let mut out = Vec::new();
    for r in rels {
        let Some(src) = r.source(quotient) else { continue };
        for x in (0..cover.num_vertices()).filter(|&x| proj.vertex[x] == src) {
            let terms = r.terms().iter().map(|(c, path)| Ok((*c, lift_path(x, path)?))).collect::<Result<Vec<_>>>()?;
            let lifted = Relation::new(cover, terms, p)
                .map_err(|_| Error::LiftFailure("lifted paths are not parallel".into()))?;
            if !out.contains(&lifted) {
                out.push(lifted);
            }
        }
    }
    Ok(out)
}

/// Group elements mapping `sub` onto itself.
pub fn stabilizer_of_subquiver(act: &GroupAction, sub: &Subquiver) -> Vec<usize> {
    (0..act.order())
        .filter(|&g| {
            let vs: BTreeSet<usize> = sub.vertices.iter().map(|&v| act.vertex_image(g, v)).collect();
            let arr: BTreeSet<usize> = sub.arrows.iter().map(|&a| act.arrow_image(g, a)).collect();
            vs == sub.vertices && arr == sub.arrows
        })
        .collect()
}
