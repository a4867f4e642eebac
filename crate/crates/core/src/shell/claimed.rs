//! Published `H²` generator lists, verbatim (duplicates included).

/// `(id, generators)`; each generator is a cocycle expression.
pub const H2_GENERATORS: &[(&str, &[&str])] = &[
    ("D5_01", &["[d14]", "[d15]", "[d24]", "[d25]", "[d45]"]),
    ("D5_02", &["[d13]", "[d14]", "[d23]", "[d24]"]),
    ("D5_03", &["[d23]"]),
    ("D6_04", &["[d12]", "[d14]", "[d23]", "[d34]"]),
    ("D6_05", &["[d14]", "[d23]", "[d24]"]),
    ("D6_06", &["[d16] - [d25] + [d34]"]),
    ("D7_06", &["[d16] - [d25] + [d34]", "[d17]", "[d27]", "[d37]"]),
    (
        "D7_07",
        &["[d13]", "[d14]", "[d15]", "[d16]", "[d23]", "[d24]", "[d25]", "[d26]", "[d35]", "[d36]", "[d45]", "[d46]"],
    ),
    ("D7_08", &["[d13]", "[d14]", "[d15]", "[d23]", "[d24]", "[d25]", "[d34]", "[d45]"]),
    ("D7_09", &["[d13]", "[d14]", "[d24]", "[d25]", "[d35]", "[d45]"]),
    ("D7_10", &["[d13]", "[d14]", "[d34]"]),
    ("D7_11", &["[d13]", "[d14]", "[d24]"]),
    ("D7_12", &["[d13]", "[d14]"]),
    ("D7_13", &["[d14]", "[d23]"]),
    ("D8_06", &["[d16] - [d25] + [d34]", "[d17]", "[d18]", "[d27]", "[d28]", "[d37]", "[d38]", "[d78]"]),
    ("D8_15", &["[d13]", "[d16]", "[d17]", "[d26]", "[d27]", "[d36]", "[d37]"]),
    (
        "D8_16",
        &["[d13]", "[d14]", "[d16]", "[d17]", "[d23]", "[d24]", "[d26]", "[d27]", "[d36]", "[d37]", "[d46]", "[d47]"],
    ),
    (
        "D8_17",
        &["[d13]", "[d14]", "[d15]", "[d16]", "[d23]", "[d24]", "[d25]", "[d26]", "[d35]", "[d36]", "[d45]", "[d46]"],
    ),
    ("D8_18", &["[d14]", "[d15]", "[d16]", "[d23]", "[d24]", "[d25]", "[d26]", "[d34]", "[d35]", "[d36]", "[d56]"]),
    ("D8_19", &["[d13]", "[d14]", "[d15]", "[d16]", "[d23]", "[d24]", "[d25]", "[d26]", "[d35]", "[d36]", "[d46]"]),
    (
        "D8_20",
        &["[d13]", "[d14]", "[d15]", "[d16]", "[d23]", "[d24]", "[d25]", "[d13]", "[d26]", "[d35]", "[d36]", "[d46]"],
    ),
    ("D8_21", &["[d13]", "[d14]", "[d15]", "[d16]", "[d24]", "[d25]", "[d26]", "[d35]", "[d36]", "[d46]"]),
    ("D8_22", &["[d14]", "[d15]", "[d24]", "[d25]", "[d34]", "[d35]"]),
    ("D8_23", &["[d13]", "[d14]", "[d15]", "[d24]", "[d25]", "[d35]"]),
    ("D8_24", &["[d13]", "[d14]", "[d15]", "[d24]", "[d25]", "[d35]"]),
    ("D8_25", &["[d13]", "[d14]", "[d24]", "[d25]", "[d35]"]),
    ("D8_26", &["[d15]", "[d23]", "[d24]", "[d34]", "[d35]", "[d45]"]),
    ("D8_27", &["[d15]", "[d24]", "[d15]", "[d34]", "[d35]"]),
    ("D8_28", &["[d14]", "[d23]", "[d25]", "[d35]", "[d45]"]),
    ("D8_29", &["[d15]", "[d24]", "[d34]", "[d35]", "[d45]"]),
    ("D8_30", &["[d15]", "[d24]", "[d34]", "[d35]"]),
    ("D8_31", &["[d13]", "[d14]", "[d15]", "[d24]", "[d25]", "[d35]"]),
    ("D8_32", &["[d13]", "[d14]", "[d24]", "[d25]", "[d35]"]),
    ("D8_33", &["[d13]", "[d24]"]),
    ("D8_34", &["[d15]", "[d24]", "[d25]", "[d34]", "[d35]", "[d45]"]),
    ("D8_35", &["[d34]"]),
];

/// The listed generators for `id`.
pub fn h2_generators(id: &str) -> Option<&'static [&'static str]> {
    H2_GENERATORS.iter().find(|(k, _)| *k == id).map(|(_, g)| *g)
}

/// Generators that occur more than once in a row.
pub fn duplicates(gens: &[&str]) -> Vec<String> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for g in gens {
        if !seen.insert(*g) && !out.iter().any(|x: &String| x == g) {
            out.push(g.to_string());
        }
    }
    out
}

/// The der-dimension claims used by the refutations: `(source, targets)`.
pub const REFUTED: &[(&str, &[&str])] =
    &[("D7_14", &["D7_08", "D7_09", "D7_11", "D7_13"]), ("D8_36", &["D8_17", "D8_30", "D8_33"])];

pub const RIGID_7: &[&str] = &["D7_09", "D7_13", "D7_14"];
pub const RIGID_8: &[&str] = &["D8_17", "D8_30", "D8_33", "D8_36"];
