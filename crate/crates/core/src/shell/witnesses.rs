//! Degeneration claims backed by the witness files in `data/witnesses`.
//!
//! A file holds one line `E<i> = …` per basis vector; see
//! [`parse_parametric_basis`].

use crate::degen::{DegenerationClaim, ParametricBasis};
use crate::error::Result;
use crate::exact::{q, MatrixQ, MatrixT};
use crate::shell::catalog;
use crate::shell::parse::parse_parametric_basis;

macro_rules! witness {
    ($src:literal, $dst:literal, $file:literal) => {
        ($src, $dst, $file, include_str!(concat!("../../data/witnesses/", $file)))
    };
}

/// `(source, target, file name, contents)`.
pub const WITNESS_FILES: &[(&str, &str, &str, &str)] = &[
    witness!("D7_01", "C7", "witness_d701_c7.txt"),
    witness!("D7_02", "D7_01", "witness_d702_d701.txt"),
    witness!("D7_03", "D7_01", "witness_d703_d701.txt"),
    witness!("D7_04", "D7_05", "witness_d704_d705.txt"),
    witness!("D7_05", "D7_02", "witness_d705_d702.txt"),
    witness!("D7_05", "D7_03", "witness_d705_d703.txt"),
    witness!("D7_06", "D7_03", "witness_d706_d703.txt"),
    witness!("D7_07", "D7_02", "witness_d707_d702.txt"),
    witness!("D7_08", "D7_04", "witness_d708_d704.txt"),
    witness!("D7_09", "D7_08", "witness_d709_d708.txt"),
    witness!("D7_10", "D7_03", "witness_d710_d703.txt"),
    witness!("D7_11", "D7_12", "witness_d711_d712.txt"),
    witness!("D7_12", "D7_06", "witness_d712_d706.txt"),
    witness!("D7_12", "D7_10", "witness_d712_d710.txt"),
    witness!("D7_13", "D7_11", "witness_d713_d711.txt"),
    witness!("D7_14", "D7_07", "witness_d714_d707.txt"),
    witness!("D7_14", "D7_12", "witness_d714_d712.txt"),
    witness!("D8_19", "D8_16", "witness_d819_d816.txt"),
    witness!("D8_21", "D8_18", "witness_d821_d818.txt"),
    witness!("D8_22", "D8_15", "witness_d822_d815.txt"),
    witness!("D8_27", "D8_22", "witness_d827_d822.txt"),
    witness!("D8_27", "D8_24", "witness_d827_d824.txt"),
    witness!("D8_28", "D8_23", "witness_d828_d823.txt"),
    witness!("D8_29", "D8_09", "witness_d829_d809.txt"),
    witness!("D8_29", "D8_26", "witness_d829_d826.txt"),
    witness!("D8_30", "D8_25", "witness_d830_d825.txt"),
    witness!("D8_30", "D8_27", "witness_d830_d827.txt"),
    witness!("D8_30", "D8_28", "witness_d830_d828.txt"),
    witness!("D8_30", "D8_29", "witness_d830_d829.txt"),
    witness!("D8_32", "D8_31", "witness_d832_d831.txt"),
    witness!("D8_35", "D8_13", "witness_d835_d813.txt"),
    witness!("D8_36", "D8_14", "witness_d836_d814.txt"),
    witness!("D8_36", "D8_20", "witness_d836_d820.txt"),
    witness!("D8_36", "D8_34", "witness_d836_d834.txt"),
];

/// Edges of the 7-dimensional graph with no witness.
pub const IMPORTED_7: &[(&str, &str)] = &[("D7_12", "D7_04")];

/// 8-dimensional edges with no witness: a rigid source reaching the
/// targets no monomial basis reaches.
pub const IMPORTED_8: &[(&str, &str)] =
    &[("D8_17", "D8_19"), ("D8_17", "D8_21"), ("D8_30", "D8_32"), ("D8_33", "D8_35")];

/// `49 - dim Der` as read off the figure of the 7-dimensional graph.
pub const FIGURE_LEVELS_7: &[(&str, usize)] = &[
    ("D7_09", 30),
    ("D7_13", 30),
    ("D7_11", 29),
    ("D7_14", 28),
    ("D7_08", 28),
    ("D7_12", 27),
    ("D7_04", 26),
    ("D7_05", 25),
    ("D7_10", 24),
    ("D7_06", 24),
    ("D7_03", 22),
    ("D7_07", 21),
    ("D7_02", 20),
    ("D7_01", 15),
    ("C7", 0),
];

/// The parsed witness for `source → target`, if a file exists.
pub fn witness(source: &str, target: &str) -> Option<Result<ParametricBasis>> {
    let (s, _, _, text) = WITNESS_FILES.iter().find(|(s, t, _, _)| *s == source && *t == target)?;
    let n = catalog::get(s).map(|e| e.algebra.dim()).unwrap_or(7);
    Some(parse_parametric_basis(text, n))
}

/// `b` extended by `E_{n+1} = e_{n+1}`.
pub fn lift(b: &ParametricBasis) -> ParametricBasis {
    let n = b.dim();
    let mut m = MatrixT::identity(n + 1);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, b.rows().get(i, j).clone());
        }
    }
    ParametricBasis::new(m).expect("lifted basis stays invertible")
}

fn lift_id(id: &str) -> String {
    match id {
        "C7" => "C8".into(),
        _ => id.replacen("D7_", "D8_", 1),
    }
}

/// `P` with `apply_basis_change(D8_36, P) = D8_14`: the new basis keeps
/// `e1, …, e6` and takes `E7 = e8`, `E8 = e7 - e4`.
pub fn d8_36_to_d8_14() -> MatrixQ {
    let mut rows = MatrixQ::identity(8);
    for (i, j, v) in [(6, 6, 0), (6, 7, 1), (7, 7, 0), (7, 6, 1), (7, 3, -1)] {
        rows.set(i, j, q(v));
    }
    rows.transpose().inverse().expect("invertible")
}

fn file_claims(dim: usize) -> Result<Vec<DegenerationClaim>> {
    let prefix = format!("D{dim}_");
    let mut out = Vec::new();
    for (s, t, _, _) in WITNESS_FILES.iter().filter(|(s, _, _, _)| s.starts_with(&prefix)) {
        let basis = witness(s, t).expect("listed")?;
        out.push(DegenerationClaim::witnessed(s, t, basis));
    }
    Ok(out)
}

/// The edges of the corrected 7-dimensional graph.
pub fn claims_7() -> Result<Vec<DegenerationClaim>> {
    let mut out = file_claims(7)?;
    out.extend(IMPORTED_7.iter().map(|(s, t)| DegenerationClaim::imported(s, t)));
    Ok(out)
}

/// The 7-dimensional edges lifted by `⊕ ℂ`, the 8-dimensional witnesses
/// and the imported edges.
pub fn claims_8() -> Result<Vec<DegenerationClaim>> {
    let mut out = Vec::new();
    for c in claims_7()? {
        let mut l = DegenerationClaim::imported(&lift_id(&c.source_id), &lift_id(&c.target_id));
        l.basis = c.basis.as_ref().map(lift);
        out.push(l);
    }
    for mut c in file_claims(8)? {
        if c.source_id == "D8_36" && c.target_id == "D8_14" {
            c.isomorphism = Some(d8_36_to_d8_14());
        }
        out.push(c);
    }
    out.extend(IMPORTED_8.iter().map(|(s, t)| DegenerationClaim::imported(s, t)));
    Ok(out)
}

/// Every catalog id of dimension `dim`, then the zero algebra `C{dim}`.
pub fn nodes(dim: usize) -> Vec<String> {
    let mut ids = catalog::ids_of_dim(dim);
    ids.push(format!("C{dim}"));
    ids
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::verify_isomorphism;
    use crate::degen::{verify_claim, ClaimStatus};
    use crate::shell::catalog::Catalog;

    #[test]
    fn every_file_verifies_literally() {
        for c in claims_7().unwrap().iter().chain(&claims_8().unwrap()) {
            let r = verify_claim(c, &Catalog).unwrap();
            let want = if c.basis.is_some() { ClaimStatus::Verified } else { ClaimStatus::Unwitnessed };
            assert_eq!(r.status, want, "{} -> {}", c.source_id, c.target_id);
        }
    }

    #[test]
    fn d8_36_is_split() {
        let a = catalog::get("D8_36").unwrap().algebra;
        let b = catalog::get("D8_14").unwrap().algebra;
        assert!(verify_isomorphism(&a, &b, &d8_36_to_d8_14()));
        let c = claims_8().unwrap().into_iter().find(|c| c.source_id == "D8_36" && c.target_id == "D8_14").unwrap();
        assert!(verify_claim(&c, &Catalog).unwrap().improper);
    }

    #[test]
    fn counts() {
        assert_eq!(claims_7().unwrap().len(), 18);
        assert_eq!(claims_8().unwrap().len(), 18 + 17 + 4);
        assert_eq!(nodes(7).len(), 15);
    }
}
