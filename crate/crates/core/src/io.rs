//! JSON and CSV forms of bracket tables.
//!
//! JSON output is compact with object keys in sorted order and a trailing
//! newline, so equal tables serialize to identical bytes.

use serde::{Deserialize, Serialize};

use crate::cartan::{build_cartan, CartanType, SignFunction};
use crate::error::{Error, Result};
use crate::roots::{generate_roots, RootSystem};
use crate::table::BracketTable;

pub const SCHEMA_VERSION: u32 = 1;

/// How a table was produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum Provenance {
    Inductive,
    ClosedForm,
    /// Orbit sums in `parent` under the automorphism with these 1-based
    /// node orbits.
    Folded { parent: String, automorphism: Vec<Vec<usize>> },
}

/// Serialized form of a [`BracketTable`].
///
/// `constants` holds `[a, b, a+b, N]` for every pair of root indices
/// `a < b` whose sum is a root; the entry for `(b, a)` is `-N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub schema_version: u32,
    pub type_label: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub epsilon: Vec<i64>,
    pub roots: Vec<Vec<i64>>,
    pub constants: Vec<[i64; 4]>,
    /// `alpha(h_i)`, one row per node `i`.
    pub cartan_action: Vec<Vec<i64>>,
    /// Coroot coordinates `c` with `[e_alpha, e_-alpha] = (-1)^ht sum c_i h_i`.
    pub opposite: Vec<Vec<i64>>,
    pub provenance: Provenance,
}

impl TableDocument {
    pub fn from_table(t: &BracketTable, provenance: Provenance) -> Self {
        let rs = t.root_system();
        TableDocument {
            schema_version: SCHEMA_VERSION,
            type_label: rs.cartan().cartan_type().to_string(),
            rank: rs.rank(),
            cartan: rs.cartan().entries().to_vec(),
            epsilon: t.epsilon().values().to_vec(),
            roots: rs.roots().iter().map(|r| r.coeffs().to_vec()).collect(),
            constants: t.sum_pairs().map(|(a, b, s, n)| [a as i64, b as i64, s as i64, n]).collect(),
            cartan_action: t.cartan_action_rows().to_vec(),
            opposite: (0..rs.len()).map(|a| t.opposite(a).to_vec()).collect(),
            provenance,
        }
    }

    /// Canonical bytes: compact JSON, sorted keys, `\n` at the end.
    pub fn to_json(&self) -> String {
        // serde_json::Value keeps object keys in a BTreeMap.
        let value = serde_json::to_value(self).expect("documents are plain data");
        let mut s = serde_json::to_string(&value).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Document(e.to_string()))
    }

    /// Rebuilds the table, checking the document against the root system
    /// regenerated from its type.
    pub fn to_table(&self) -> Result<BracketTable> {
        let bad = |m: String| Error::Document(m);
        if self.schema_version != SCHEMA_VERSION {
            return Err(bad(format!("schema version {} (expected {SCHEMA_VERSION})", self.schema_version)));
        }
        let ty: CartanType = self.type_label.parse()?;
        let cm = build_cartan(ty);
        if self.rank != ty.rank() || cm.entries() != self.cartan.as_slice() {
            return Err(bad(format!("rank or Cartan matrix does not match {ty}")));
        }
        let rs = generate_roots(&cm);
        let expected: Vec<Vec<i64>> = rs.roots().iter().map(|r| r.coeffs().to_vec()).collect();
        if expected != self.roots {
            return Err(bad("root list differs from the generated order".into()));
        }
        let eps = SignFunction::new(self.epsilon.clone())?;
        let r = rs.len();
        let mut constants = vec![0; r * r];
        let mut seen = vec![false; r * r];
        for entry in &self.constants {
            let idx = |v: i64| usize::try_from(v).ok().filter(|&k| k < r);
            let (Some(a), Some(b), Some(s)) = (idx(entry[0]), idx(entry[1]), idx(entry[2])) else {
                return Err(bad(format!("index out of range in {entry:?}")));
            };
            if a >= b || rs.sum(a, b) != Some(s) || seen[a * r + b] {
                return Err(bad(format!("malformed or repeated constant {entry:?}")));
            }
            seen[a * r + b] = true;
            constants[a * r + b] = entry[3];
            constants[b * r + a] = -entry[3];
        }
        let missing = (0..r).flat_map(|a| ((a + 1)..r).map(move |b| (a, b))).find(|&(a, b)| rs.sum(a, b).is_some() && !seen[a * r + b]);
        if let Some((a, b)) = missing {
            return Err(bad(format!("no constant for ({}, {})", rs.root(a), rs.root(b))));
        }
        BracketTable::from_parts(rs, eps, constants, self.cartan_action.clone(), self.opposite.clone())
            .map_err(|e| bad(e.to_string()))
    }

    /// `alpha,beta,sum,N` with compact root strings, one row per stored pair.
    pub fn to_csv(&self) -> String {
        let root = |k: i64| compact(&self.roots[k as usize]);
        let mut out = String::from("alpha,beta,sum,N\n");
        for &[a, b, s, n] in &self.constants {
            out.push_str(&format!("{},{},{},{}\n", root(a), root(b), root(s), n));
        }
        out
    }
}

fn compact(coeffs: &[i64]) -> String {
    crate::roots::Root::new(coeffs.to_vec()).to_string()
}

/// Serialized root system: type, Cartan matrix and the ordered roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemDocument {
    pub type_label: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_count: usize,
    pub roots: Vec<Vec<i64>>,
}

impl RootSystemDocument {
    pub fn new(rs: &RootSystem) -> Self {
        RootSystemDocument {
            type_label: rs.cartan().cartan_type().to_string(),
            rank: rs.rank(),
            cartan: rs.cartan().entries().to_vec(),
            positive_count: rs.positive_count(),
            roots: rs.roots().iter().map(|r| r.coeffs().to_vec()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::build_inductive;
    use crate::cartan::default_epsilon;

    fn doc(t: &str) -> (BracketTable, TableDocument) {
        let cm = build_cartan(t.parse().unwrap());
        let table = build_inductive(&generate_roots(&cm), &default_epsilon(&cm)).unwrap();
        let d = TableDocument::from_table(&table, Provenance::Inductive);
        (table, d)
    }

    #[test]
    fn a2_shape() {
        let (_, d) = doc("A2");
        assert_eq!(d.roots.len(), 6);
        assert_eq!(d.constants.len(), 6);
        let json = d.to_json();
        assert!(json.ends_with("}\n"));
        assert!(json.starts_with("{\"cartan\":"));
        assert!(json.contains("\"provenance\":{\"method\":\"inductive\"}"));
    }

    #[test]
    fn round_trip() {
        for ty in ["A2", "G2", "E6"] {
            let (t, d) = doc(ty);
            let json = d.to_json();
            let back = TableDocument::from_json(&json).unwrap();
            assert_eq!(back, d);
            let t2 = back.to_table().unwrap();
            assert_eq!(t2.constants(), t.constants());
            assert_eq!(TableDocument::from_table(&t2, Provenance::Inductive).to_json(), json);
        }
    }

    #[test]
    fn folded_provenance() {
        let p = Provenance::Folded { parent: "D4".into(), automorphism: vec![vec![3], vec![1, 2, 4]] };
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"method":"folded","parent":"D4","automorphism":[[3],[1,2,4]]}"#);
    }

    #[test]
    fn csv_rows() {
        let (_, d) = doc("D4");
        let csv = d.to_csv();
        assert!(csv.starts_with("alpha,beta,sum,N\n"));
        assert!(csv.lines().any(|l| l == "1110,-0110,1000,1"));
    }

    #[test]
    fn rejects_tampering() {
        let (_, mut d) = doc("A2");
        d.constants.pop();
        assert!(matches!(d.to_table(), Err(Error::Document(_))));
        let (_, mut d) = doc("A2");
        d.constants[0][2] = 0;
        assert!(d.to_table().is_err());
        assert!(TableDocument::from_json("{").is_err());
    }
}
