//! JSON ingestion formats for groups.
//!
//! * Cayley table: `{"order": n, "table": [[...], ...]}`
//! * Permutation generators: `{"degree": d, "generators": [[images...], ...]}`
//!
//! Both are 0-indexed.

use serde::{Deserialize, Serialize};

use super::FiniteGroup;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermutationsJson {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum GroupJson {
    Cayley(CayleyJson),
    Permutations(PermutationsJson),
}

/// Parses either ingestion format; `limit` bounds a permutation closure.
pub fn group_from_json(text: &str, limit: usize) -> Result<FiniteGroup> {
    let parsed: GroupJson = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
    match parsed {
        GroupJson::Cayley(c) => {
            if c.table.len() != c.order {
                return Err(Error::InvalidTable(format!(
                    "declared order {} but table has {} rows",
                    c.order,
                    c.table.len()
                )));
            }
            FiniteGroup::from_cayley(c.table)
        }
        GroupJson::Permutations(p) => {
            FiniteGroup::from_permutations(&p.generators, p.degree, limit)
        }
    }
}

pub fn group_to_cayley_json(g: &FiniteGroup) -> CayleyJson {
    CayleyJson {
        order: g.order(),
        table: g.cayley_rows(),
    }
}
