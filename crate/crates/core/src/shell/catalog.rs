//! Built-in algebras, addressed by ids such as `D7_14`.
//!
//! Ids `D{d}_{j}` with no table of their own resolve to the largest listed
//! `D{d'}_{j}`, `d' < d`, extended by `d - d'` trivial directions, so
//! `D8_14 = D7_14 ⊕ ℂ` and `D8_06 = D6_06 ⊕ ℂ²`. `C{n}` is the zero algebra.

use crate::algcore::{check_identities, direct_sum_with_trivial, Algebra};
use crate::degen::AlgebraSource;
use crate::error::{Error, Result};

type Table = &'static [(usize, usize, &'static [(usize, i64)])];

/// Listed tables, verbatim including the order of factors.
const LISTED: &[(&str, usize, Table)] = &[
    ("D5_01", 5, &[(1, 2, &[(3, 1)])]),
    ("D5_02", 5, &[(1, 2, &[(5, 1)]), (3, 4, &[(5, 1)])]),
    ("D5_03", 5, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)])]),
    ("D6_01", 6, &[(1, 2, &[(3, 1)])]),
    ("D6_02", 6, &[(1, 2, &[(5, 1)]), (3, 4, &[(5, 1)])]),
    ("D6_03", 6, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)])]),
    ("D6_04", 6, &[(1, 3, &[(5, 1)]), (2, 4, &[(6, 1)])]),
    ("D6_05", 6, &[(1, 2, &[(5, 1)]), (1, 3, &[(6, 1)]), (3, 4, &[(5, 1)])]),
    ("D6_06", 6, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (2, 3, &[(6, 1)])]),
    ("D7_07", 7, &[(1, 2, &[(7, 1)]), (3, 4, &[(7, 1)]), (5, 6, &[(7, 1)])]),
    ("D7_08", 7, &[(1, 2, &[(6, 1)]), (1, 4, &[(7, 1)]), (3, 5, &[(7, 1)])]),
    ("D7_09", 7, &[(1, 2, &[(6, 1)]), (1, 5, &[(7, 1)]), (3, 4, &[(6, 1)]), (2, 3, &[(7, 1)])]),
    ("D7_10", 7, &[(1, 2, &[(5, 1)]), (2, 3, &[(6, 1)]), (2, 4, &[(7, 1)])]),
    ("D7_11", 7, &[(1, 2, &[(5, 1)]), (2, 3, &[(6, 1)]), (3, 4, &[(7, 1)])]),
    ("D7_12", 7, &[(1, 2, &[(5, 1)]), (2, 3, &[(6, 1)]), (2, 4, &[(7, 1)]), (3, 4, &[(5, 1)])]),
    ("D7_13", 7, &[(1, 2, &[(5, 1)]), (1, 3, &[(6, 1)]), (2, 4, &[(7, 1)]), (3, 4, &[(5, 1)])]),
    ("D7_14", 7, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (1, 6, &[(7, 1)]), (2, 3, &[(6, 1)]), (2, 5, &[(7, -1)]), (3, 4, &[(7, 1)])]),
    ("D8_15", 8, &[(1, 2, &[(4, 1)]), (3, 2, &[(5, 1)]), (6, 7, &[(8, 1)])]),
    ("D8_16", 8, &[(1, 2, &[(5, 1)]), (3, 4, &[(5, 1)]), (6, 7, &[(8, 1)])]),
    ("D8_17", 8, &[(1, 2, &[(7, 1)]), (3, 4, &[(8, 1)]), (5, 6, &[(7, 1), (8, 1)])]),
    ("D8_18", 8, &[(1, 2, &[(7, 1)]), (4, 5, &[(7, 1)]), (1, 3, &[(8, 1)]), (4, 6, &[(8, 1)])]),
    ("D8_19", 8, &[(1, 2, &[(7, 1)]), (4, 5, &[(7, 1)]), (3, 4, &[(8, 1)]), (5, 6, &[(8, 1)])]),
    ("D8_20", 8, &[(1, 2, &[(7, 1)]), (3, 4, &[(7, 1)]), (5, 6, &[(7, 1)]), (4, 5, &[(8, 1)])]),
    ("D8_21", 8, &[(1, 2, &[(7, 1)]), (3, 4, &[(7, 1)]), (5, 6, &[(7, 1)]), (2, 3, &[(8, 1)]), (4, 5, &[(8, 1)])]),
    ("D8_22", 8, &[(1, 2, &[(6, 1)]), (4, 5, &[(6, 1)]), (2, 3, &[(7, 1)]), (1, 3, &[(8, 1)])]),
    ("D8_23", 8, &[(1, 2, &[(6, 1)]), (4, 5, &[(6, 1)]), (2, 3, &[(7, 1)]), (3, 4, &[(8, 1)])]),
    ("D8_24", 8, &[(1, 2, &[(6, 1)]), (2, 3, &[(7, 1)]), (4, 5, &[(7, 1)]), (3, 4, &[(8, 1)])]),
    ("D8_25", 8, &[(1, 2, &[(6, 1)]), (2, 3, &[(7, 1)]), (4, 5, &[(7, 1)]), (3, 4, &[(8, 1)]), (5, 1, &[(8, 1)])]),
    ("D8_26", 8, &[(1, 2, &[(6, 1)]), (1, 3, &[(7, 1)]), (1, 4, &[(8, 1)]), (2, 5, &[(7, 1)])]),
    ("D8_27", 8, &[(1, 2, &[(6, 1)]), (1, 3, &[(7, 1)]), (1, 4, &[(8, 1)]), (2, 3, &[(8, 1)]), (4, 5, &[(7, 1)])]),
    ("D8_28", 8, &[(1, 2, &[(6, 1)]), (1, 3, &[(7, 1)]), (1, 5, &[(8, 1)]), (2, 4, &[(8, 1)]), (3, 4, &[(6, 1)])]),
    ("D8_29", 8, &[(1, 2, &[(6, 1)]), (1, 3, &[(7, 1)]), (2, 3, &[(8, 1)]), (1, 4, &[(8, 1)]), (2, 5, &[(7, 1)])]),
    ("D8_30", 8, &[(1, 2, &[(6, 1)]), (1, 3, &[(7, 1)]), (2, 3, &[(8, 1)]), (1, 4, &[(8, 1)]), (2, 5, &[(7, 1)]), (4, 5, &[(6, 1)])]),
    ("D8_31", 8, &[(1, 2, &[(6, 1)]), (2, 3, &[(7, 1)]), (3, 4, &[(7, 1)]), (4, 5, &[(8, 1)])]),
    ("D8_32", 8, &[(1, 2, &[(6, 1)]), (2, 3, &[(7, 1)]), (3, 4, &[(8, 1)]), (4, 5, &[(7, 1)]), (5, 1, &[(7, 1)])]),
    ("D8_33", 8, &[(1, 2, &[(5, 1)]), (2, 3, &[(6, 1)]), (3, 4, &[(7, 1)]), (4, 1, &[(8, 1)])]),
    ("D8_34", 8, &[(1, 2, &[(5, 1)]), (1, 3, &[(6, 1)]), (2, 3, &[(7, 1)]), (1, 4, &[(8, 1)])]),
    ("D8_35", 8, &[(1, 2, &[(5, 1)]), (1, 3, &[(6, 1)]), (2, 4, &[(6, 1)]), (2, 3, &[(7, 1)]), (1, 4, &[(8, 1)])]),
    ("D8_36", 8, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (2, 3, &[(6, 1)]), (1, 6, &[(8, 1)]), (2, 5, &[(8, -1)]), (3, 4, &[(8, 1)]), (3, 7, &[(8, 1)])]),
    ("D9_37", 9, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (2, 3, &[(6, 1)]), (1, 6, &[(8, 1)]), (2, 5, &[(8, -1)]), (3, 4, &[(8, 1)]), (3, 7, &[(9, -1)])]),
    ("D9_38", 9, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (2, 3, &[(6, 1)]), (1, 6, &[(9, 1)]), (2, 5, &[(9, -1)]), (3, 4, &[(9, 1)]), (7, 8, &[(9, 1)])]),
];

/// Largest dimension addressable through the split convention.
pub const MAX_DIM: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub id: String,
    pub algebra: Algebra,
    pub provenance: String,
    pub is_lie: bool,
    /// Listed as indecomposable where the table appears.
    pub listed_indecomposable: bool,
    /// `(base id, k)` when the entry is `base ⊕ ℂ^k`.
    pub split_of: Option<(String, usize)>,
}

fn listed(id: &str) -> Option<&'static (&'static str, usize, Table)> {
    LISTED.iter().find(|(k, _, _)| *k == id)
}

fn parse_id(id: &str) -> Option<(usize, usize)> {
    let (d, j) = id.strip_prefix('D')?.split_once('_')?;
    if j.len() != 2 {
        return None;
    }
    Some((d.parse().ok()?, j.parse().ok()?))
}

fn provenance(id: &str) -> &'static str {
    match id {
        "D7_14" => "§1.3, non-split extension of D6_06",
        "D8_36" => "§1.4, extension of D7_06 by ∇1+∇4",
        "D9_37" => "§1.5.1, extension of D7_06 by (∇1, ∇4)",
        "D9_38" => "§1.5.2 case (1), extension of D8_06 by ∇1+∇8",
        _ if id.starts_with("D5_") => "§1.3, 5-dimensional cohomology table",
        _ if id.starts_with("D6_") => "§1.2, 6-dimensional table",
        _ if id.starts_with("D7_") => "§1.3, 7-dimensional 2-step nilpotent list",
        _ => "§1.4, 8-dimensional 2-step nilpotent list",
    }
}

fn listed_algebra(entry: &(&str, usize, Table)) -> Algebra {
    Algebra::from_int_table(entry.1, entry.2).expect("listed tables are valid")
}

/// The entry for `id`, or [`Error::UnknownId`].
pub fn get(id: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownId(id.to_string());
    if let Some(n) = id.strip_prefix('C') {
        let n: usize = n.parse().map_err(|_| unknown())?;
        if n == 0 || n > MAX_DIM {
            return Err(unknown());
        }
        return Ok(CatalogEntry {
            id: id.into(),
            algebra: Algebra::zero(n),
            provenance: "zero algebra".into(),
            is_lie: true,
            listed_indecomposable: false,
            split_of: None,
        });
    }
    if let Some(e) = listed(id) {
        let algebra = listed_algebra(e);
        return Ok(CatalogEntry {
            id: id.into(),
            is_lie: check_identities(&algebra).jacobi,
            algebra,
            provenance: provenance(id).into(),
            listed_indecomposable: !(id.starts_with("D5_") || id.starts_with("D6_")),
            split_of: None,
        });
    }
    let (d, j) = parse_id(id).ok_or_else(unknown)?;
    if d > MAX_DIM {
        return Err(unknown());
    }
    let (base, k) = (5..d)
        .rev()
        .find_map(|dd| listed(&format!("D{dd}_{j:02}")).map(|e| (e, d - dd)))
        .ok_or_else(unknown)?;
    let algebra = direct_sum_with_trivial(&listed_algebra(base), k);
    let mut provenance = format!("{} ⊕ C^{k}, split extension", base.0);
    if id == "D8_06" {
        provenance.push_str("; inferred for the 8-dimensional H² table header");
    }
    Ok(CatalogEntry {
        id: id.into(),
        is_lie: check_identities(&algebra).jacobi,
        algebra,
        provenance,
        listed_indecomposable: false,
        split_of: Some((base.0.to_string(), k)),
    })
}

/// Ids with their own table, in listing order.
pub fn listed_ids() -> Vec<&'static str> {
    LISTED.iter().map(|(k, _, _)| *k).collect()
}

/// Every `D{n}_{j}` that resolves, in index order.
pub fn ids_of_dim(n: usize) -> Vec<String> {
    (1..=99)
        .map(|j| format!("D{n}_{j:02}"))
        .filter(|id| parse_id(id).is_some() && get(id).is_ok())
        .collect()
}

/// The catalog as an [`AlgebraSource`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Catalog;

impl AlgebraSource for Catalog {
    fn algebra(&self, id: &str) -> Result<Algebra> {
        get(id).map(|e| e.algebra)
    }
}

/// Golden copies of the listed tables in the text format.
pub fn source_text(id: &str) -> Option<&'static str> {
    GOLDEN.iter().find(|(k, _)| *k == id).map(|(_, t)| *t)
}

macro_rules! golden {
    ($($id:literal),* $(,)?) => {
        const GOLDEN: &[(&str, &str)] = &[$(($id, include_str!(concat!("../../data/algebras/", $id, ".txt")))),*];
    };
}

golden!(
    "D5_01",
    "D5_02",
    "D5_03",
    "D6_01",
    "D6_02",
    "D6_03",
    "D6_04",
    "D6_05",
    "D6_06",
    "D7_07",
    "D7_08",
    "D7_09",
    "D7_10",
    "D7_11",
    "D7_12",
    "D7_13",
    "D7_14",
    "D8_15",
    "D8_16",
    "D8_17",
    "D8_18",
    "D8_19",
    "D8_20",
    "D8_21",
    "D8_22",
    "D8_23",
    "D8_24",
    "D8_25",
    "D8_26",
    "D8_27",
    "D8_28",
    "D8_29",
    "D8_30",
    "D8_31",
    "D8_32",
    "D8_33",
    "D8_34",
    "D8_35",
    "D8_36",
    "D9_37",
    "D9_38"
);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_ids_resolve() {
        let e = get("D8_14").unwrap();
        assert_eq!(e.split_of, Some(("D7_14".into(), 1)));
        assert_eq!(e.algebra, direct_sum_with_trivial(&get("D7_14").unwrap().algebra, 1));
        assert_eq!(get("D8_06").unwrap().split_of, Some(("D6_06".into(), 2)));
        assert_eq!(get("D7_01").unwrap().split_of, Some(("D6_01".into(), 1)));
        assert!(matches!(get("D7_15"), Err(Error::UnknownId(_))));
        assert!(matches!(get("X"), Err(Error::UnknownId(_))));
        assert!(get("C7").unwrap().algebra.is_zero_algebra());
    }

    #[test]
    fn dimension_listings() {
        assert_eq!(ids_of_dim(7).len(), 14);
        assert_eq!(ids_of_dim(8).len(), 36);
        assert_eq!(ids_of_dim(9).len(), 38);
        assert_eq!(listed_ids().len(), 41);
    }

    #[test]
    fn lie_flags() {
        assert!(!get("D7_14").unwrap().is_lie);
        assert!(get("D7_13").unwrap().is_lie);
        assert!(!get("D9_14").unwrap().is_lie);
    }
}
