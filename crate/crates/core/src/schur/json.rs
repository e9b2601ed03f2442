use super::{Label, StructureAlgebra};
use crate::error::{Error, Result};
use crate::symcomb::{MultiIndex, PairOrbit};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LabelJson {
    Xi { i: Vec<u8>, j: Vec<u8> },
    Name { name: String },
}

struct Table<'a>(&'a BTreeMap<(usize, usize), Vec<(usize, i64)>>);

impl Serialize for Table<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for ((h, l), terms) in self.0 {
            m.serialize_entry(&format!("{h},{l}"), terms)?;
        }
        m.end()
    }
}

#[derive(Serialize)]
struct Out<'a> {
    n: Option<usize>,
    r: Option<usize>,
    char: u64,
    basis: Vec<LabelJson>,
    idempotents: &'a [usize],
    table: Table<'a>,
}

#[derive(Deserialize)]
struct In {
    n: Option<usize>,
    r: Option<usize>,
    char: u64,
    basis: Vec<LabelJson>,
    idempotents: Vec<usize>,
    table: BTreeMap<String, Vec<(usize, i64)>>,
}

pub(super) fn to_json(a: &StructureAlgebra) -> String {
    let basis = a
        .basis()
        .iter()
        .map(|l| match l {
            Label::Xi(o) => LabelJson::Xi { i: o.i().entries().to_vec(), j: o.j().entries().to_vec() },
            Label::Name(s) => LabelJson::Name { name: s.clone() },
        })
        .collect();
    let out = Out {
        n: a.shape().map(|s| s.0),
        r: a.shape().map(|s| s.1),
        char: a.characteristic(),
        basis,
        idempotents: a.idempotents(),
        table: Table(a.table()),
    };
    serde_json::to_string(&out).expect("serializable")
}

pub(super) fn from_json(s: &str) -> Result<StructureAlgebra> {
    let v: In = serde_json::from_str(s).map_err(|e| Error::invalid(format!("algebra JSON: {e}")))?;
    let shape = match (v.n, v.r) {
        (Some(n), Some(r)) => Some((n, r)),
        (None, None) => None,
        _ => return Err(Error::invalid("algebra JSON: give both n and r or neither")),
    };
    let basis = v
        .basis
        .into_iter()
        .map(|l| match l {
            LabelJson::Name { name } => Ok(Label::Name(name)),
            LabelJson::Xi { i, j } => {
                let n = shape.map(|s| s.0).unwrap_or_else(|| i.iter().chain(&j).copied().max().unwrap_or(1) as usize);
                let o = PairOrbit::canonical(&MultiIndex::new(n, i)?, &MultiIndex::new(n, j)?)?;
                Ok(Label::Xi(o))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = BTreeMap::new();
    for (key, terms) in v.table {
        let (h, l) = key
            .split_once(',')
            .and_then(|(h, l)| Some((h.trim().parse().ok()?, l.trim().parse().ok()?)))
            .ok_or_else(|| Error::invalid(format!("algebra JSON: bad table key {key:?}")))?;
        table.insert((h, l), terms);
    }
    StructureAlgebra::from_parts(shape, v.char, basis, v.idempotents, table)
}

#[cfg(test)]
mod tests {
    use crate::schur::{build_algebra, BasisKind, ScaleCap};

    #[test]
    fn round_trip() {
        let a = build_algebra(2, 2, 3, BasisKind::Borel, &ScaleCap::default()).unwrap();
        let s = a.to_json();
        assert!(s.starts_with("{\"n\":2,\"r\":2,\"char\":3,\"basis\":"));
        let b = crate::schur::StructureAlgebra::from_json(&s).unwrap();
        assert_eq!(b.basis(), a.basis());
        assert_eq!(b.table(), a.table());
        assert_eq!(b.to_json(), s);
    }
}
