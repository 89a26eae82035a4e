//! The serialized form of a character table.
//!
//! JSON output is canonical: field order is fixed by the struct layout,
//! every number is an integer, and each value is the canonical coefficient
//! vector of a cyclotomic integer (basis `1, z, ..., z^{N-2}` for prime `N`,
//! `1, i` for `N = 4`).

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use suzuki_core::{CharacterTable, CycloNum, Family, FieldContext, GroupParams};

use crate::Failure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    pub metadata: Metadata,
    pub classes: Vec<ClassEntry>,
    pub characters: Vec<CharacterEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub family: String,
    pub p: u32,
    pub m: u32,
    pub l: u32,
    /// Ascending coefficients of `epsilon`; absent for family A.
    pub epsilon: Option<Vec<u32>>,
    /// Ascending coefficients of the field modulus, leading 1 included.
    pub modulus: Vec<u32>,
    pub root_order: u32,
    pub order: u64,
    pub n: u32,
    pub k: u32,
    /// Whether the table was built by the VZ construction.
    pub vz: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassEntry {
    /// Coordinates `(a, z)` or `(a, b, z)`, each an ascending coefficient list.
    pub rep: Vec<Vec<u32>>,
    pub size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterEntry {
    pub degree: u64,
    pub provenance: String,
    pub values: Vec<Vec<i64>>,
}

fn malformed(msg: impl std::fmt::Display) -> Failure {
    Failure::Io(format!("ill-formed table document: {msg}"))
}

impl TableDocument {
    pub fn from_table(table: &CharacterTable) -> Self {
        let params = table.params();
        let f = params.field();
        let metadata = Metadata {
            family: params.family().to_string(),
            p: params.p(),
            m: params.m(),
            l: params.l(),
            epsilon: params.epsilon().map(|e| f.coeffs(e)),
            modulus: f.modulus().to_vec(),
            root_order: table.root_order(),
            order: params.order(),
            n: params.n(),
            k: params.k(),
            vz: params.is_vz() && params.vz_by_structure(),
        };
        let classes = table
            .classes()
            .iter()
            .map(|c| ClassEntry { rep: params.coordinates(&c.rep).into_iter().map(|x| f.coeffs(x)).collect(), size: c.size })
            .collect();
        let palette: Vec<Vec<i64>> = table.palette().iter().map(CycloNum::canonical_coeffs).collect();
        let characters = table
            .chars()
            .iter()
            .map(|c| CharacterEntry {
                degree: c.degree,
                provenance: c.provenance.clone(),
                values: c.values.iter().map(|&v| palette[v as usize].clone()).collect(),
            })
            .collect();
        TableDocument { metadata, classes, characters }
    }

    /// Compact canonical JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, Failure> {
        serde_json::from_str(text).map_err(malformed)
    }

    /// One row per character, one column per class.
    pub fn to_csv(&self) -> String {
        let n = self.metadata.root_order;
        let mut out = String::from("character,degree,provenance");
        for j in 0..self.classes.len() {
            write!(out, ",C{j}").unwrap();
        }
        out.push('\n');
        for (i, c) in self.characters.iter().enumerate() {
            write!(out, "{i},{},\"{}\"", c.degree, c.provenance.replace('"', "\"\"")).unwrap();
            for v in &c.values {
                write!(out, ",{}", CycloNum::from_coeffs(n, v)).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn params(&self) -> Result<GroupParams, Failure> {
        let md = &self.metadata;
        let family: Family = md.family.parse().map_err(malformed)?;
        let ctx = Arc::new(FieldContext::new(md.p, md.m, Some(&md.modulus)).map_err(malformed)?);
        let eps = md.epsilon.as_ref().map(|c| ctx.from_coeffs(c)).transpose().map_err(malformed)?;
        GroupParams::new(family, ctx, md.l, eps).map_err(malformed)
    }

    /// Rebuilds the table, checking the metadata and class list against a
    /// fresh structural enumeration. Values are taken as stored.
    pub fn to_table(&self) -> Result<CharacterTable, Failure> {
        let params = self.params()?;
        let md = &self.metadata;
        let expected = (params.root_order(), params.order(), params.n(), params.k());
        if (md.root_order, md.order, md.n, md.k) != expected {
            return Err(malformed(format!(
                "metadata (N, |G|, n, k) = {:?}, parameters give {expected:?}",
                (md.root_order, md.order, md.n, md.k)
            )));
        }
        let classes = params.conjugacy_classes();
        if classes.len() != self.classes.len() {
            return Err(malformed(format!("{} classes listed, the group has {}", self.classes.len(), classes.len())));
        }
        let f = params.field();
        for (j, (c, e)) in classes.iter().zip(&self.classes).enumerate() {
            let rep: Vec<Vec<u32>> = params.coordinates(&c.rep).into_iter().map(|x| f.coeffs(x)).collect();
            if rep != e.rep || c.size != e.size {
                return Err(malformed(format!("class {j} does not match the structural class order")));
            }
        }
        let n = params.root_order();
        let width = if n == 4 { 2 } else { n as usize - 1 };
        let mut chars = Vec::with_capacity(self.characters.len());
        for (i, c) in self.characters.iter().enumerate() {
            if let Some(j) = c.values.iter().position(|v| v.len() != width) {
                return Err(malformed(format!("character {i}, class {j}: expected {width} coefficients")));
            }
            let values = c.values.iter().map(|v| CycloNum::from_coeffs(n, v)).collect();
            chars.push((c.degree, c.provenance.clone(), values));
        }
        CharacterTable::from_values(&params, chars).map_err(malformed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use suzuki_core::character_table;

    fn doc(f: Family, p: u32, m: u32, l: u32, e: Option<u32>) -> TableDocument {
        let g = GroupParams::from_spec(f, p, m, l, e).unwrap();
        TableDocument::from_table(&character_table(&g).unwrap())
    }

    #[test]
    fn json_round_trip() {
        for d in [doc(Family::A, 2, 3, 1, None), doc(Family::C, 3, 2, 1, Some(0))] {
            let back = TableDocument::from_json(&d.to_json()).unwrap();
            assert_eq!(back, d);
            let t = back.to_table().unwrap();
            assert_eq!(TableDocument::from_table(&t), d);
        }
    }

    #[test]
    fn no_floats_in_json() {
        let s = doc(Family::A, 3, 2, 1, None).to_json();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        fn walk(v: &serde_json::Value) {
            match v {
                serde_json::Value::Number(n) => assert!(n.is_i64() || n.is_u64(), "{n}"),
                serde_json::Value::Array(a) => a.iter().for_each(walk),
                serde_json::Value::Object(o) => o.values().for_each(walk),
                _ => {}
            }
        }
        walk(&v);
    }

    #[test]
    fn csv_shape() {
        let d = doc(Family::A, 2, 2, 1, None);
        let csv = d.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), d.characters.len() + 1);
        assert!(lines[0].starts_with("character,degree,provenance,C0,C1"));
        assert!(lines[1].starts_with("0,1,\"linear"));
        assert!(lines[1].ends_with(",1+0*z^1"));
    }

    #[test]
    fn tampered_classes_are_rejected() {
        let mut d = doc(Family::A, 2, 3, 1, None);
        d.classes[3].size += 1;
        assert_eq!(d.to_table().unwrap_err().exit_code(), 3);
        let mut d = doc(Family::A, 2, 3, 1, None);
        d.characters[2].values[1].push(0);
        assert_eq!(d.to_table().unwrap_err().exit_code(), 3);
    }
}
