//! Command-line front end. [`dispatch`] does all the work so the binary
//! stays a one-liner and tests can call it directly.

use crate::algcore::{check_identities, fingerprint, Algebra, Identity};
use crate::cohom::{h2_basis, is_cocycle};
use crate::degen::{build_graph, necessary_conditions, verify_claim, DegenerationClaim};
use crate::error::{Error, Result};
use crate::exact::{fmt_vector, MatrixQ, Rational};
use crate::ext::{act, central_extension, check_extension_conditions, verify_automorphism, AutCandidate, CocycleTuple};
use crate::shell::catalog::{self, Catalog};
use crate::shell::claimed::{h2_generators, REFUTED};
use crate::shell::graphio::{emit_dot, emit_json, emit_text, Format};
use crate::shell::parse::{parse_algebra, parse_cocycle, parse_parametric_basis};
use crate::shell::report::{ReportDocument, Section, Verdict};
use crate::shell::verify::{h2_row_verdict, verify_all};
use crate::shell::witnesses;
use clap::{Parser, Subcommand};
use std::path::Path;

#[derive(Parser, Debug)]
#[command(name = "dualmock", version, about = "Exact checks for dual mock-Lie algebras")]
struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the catalog or show one entry.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Anticommutativity, antiassociativity and Jacobi.
    Check { algebra: String },
    /// Derivations, annihilator and lower central series.
    Invariants { algebra: String },
    /// Z², B² and H² with representatives.
    H2 { algebra: String },
    /// Central extension by one or more cocycles.
    Extend {
        algebra: String,
        #[arg(long = "cocycle", required = true)]
        cocycles: Vec<String>,
    },
    /// Automorphism action on cocycles.
    Act {
        algebra: String,
        #[arg(long)]
        matrix: String,
        #[arg(long = "cocycle", required = true)]
        cocycles: Vec<String>,
    },
    /// Verify a degeneration along a parametric basis.
    Degenerate {
        source: String,
        target: String,
        #[arg(long)]
        basis: String,
    },
    /// The degeneration graph of the given dimension.
    Graph {
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u8).range(7..=8))]
        dim: u8,
    },
    /// The full acceptance suite.
    VerifyAll,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show { id: String },
}

/// Runs one command line (without the program name) and returns the exit
/// code and the rendered output.
pub fn dispatch<S: AsRef<str>>(args: &[S]) -> (i32, String) {
    let argv = std::iter::once("dualmock").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let inputs: Vec<String> = args.iter().map(|s| s.as_ref().to_string()).collect();
    if let Command::Graph { dim } = &cli.command {
        if cli.format != Format::Text {
            return match graph(*dim as usize) {
                Ok(g) => (0, if cli.format == Format::Dot { emit_dot(&g) } else { emit_json(&g) }),
                Err(e) => render(ReportDocument::error("graph", &inputs, e), Format::Text),
            };
        }
    } else if cli.format == Format::Dot {
        return (2, "--format dot is only available for `graph`\n".into());
    }
    let name = command_name(&cli.command);
    let report = run(&cli.command, &inputs).unwrap_or_else(|e| ReportDocument::error(name, &inputs, e));
    render(report, cli.format)
}

fn render(r: ReportDocument, format: Format) -> (i32, String) {
    let code = if r.passed { 0 } else { 1 };
    let text = match format {
        Format::Json => r.to_json() + "\n",
        _ => r.to_text(),
    };
    (code, text)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Catalog { .. } => "catalog",
        Command::Check { .. } => "check",
        Command::Invariants { .. } => "invariants",
        Command::H2 { .. } => "h2",
        Command::Extend { .. } => "extend",
        Command::Act { .. } => "act",
        Command::Degenerate { .. } => "degenerate",
        Command::Graph { .. } => "graph",
        Command::VerifyAll => "verify-all",
    }
}

/// A catalog id, or a path to an algebra file.
fn load_algebra(arg: &str) -> Result<Algebra> {
    if Path::new(arg).is_file() {
        parse_algebra(&std::fs::read_to_string(arg)?)
    } else {
        catalog::get(arg).map(|e| e.algebra)
    }
}

/// Whitespace-separated rows of rationals.
pub fn parse_matrix(text: &str) -> Result<MatrixQ> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or_default();
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for tok in line.split_whitespace() {
            let col = line.find(tok).unwrap_or(0) + 1;
            let v: Rational = tok.parse().map_err(|_| Error::SyntaxError {
                line: k + 1,
                col,
                msg: format!("`{tok}` is not a rational"),
            })?;
            row.push(v);
        }
        rows.push(row);
    }
    let n = rows.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
    }
    Ok(MatrixQ::from_rows(n, &rows))
}

/// A witness file path, or the bare name of a bundled witness.
fn load_basis_text(arg: &str) -> Result<String> {
    if Path::new(arg).is_file() {
        return Ok(std::fs::read_to_string(arg)?);
    }
    let name = Path::new(arg).file_name().and_then(|s| s.to_str()).unwrap_or(arg);
    witnesses::WITNESS_FILES
        .iter()
        .find(|(_, _, f, _)| *f == name || f.strip_suffix(".txt") == Some(name))
        .map(|(_, _, _, t)| t.to_string())
        .ok_or_else(|| Error::Io(std::io::Error::new(std::io::ErrorKind::NotFound, format!("no such file `{arg}`"))))
}

fn tuple(a: &Algebra, exprs: &[String]) -> Result<CocycleTuple> {
    CocycleTuple::new(exprs.iter().map(|e| parse_cocycle(e, a.dim())).collect::<Result<Vec<_>>>()?)
}

pub fn graph(dim: usize) -> Result<crate::degen::DegenerationGraph> {
    let claims = if dim == 7 { witnesses::claims_7()? } else { witnesses::claims_8()? };
    let ids = witnesses::nodes(dim);
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    let mut g = build_graph(&Catalog, &ids, &claims)?;
    for (src, targets) in REFUTED.iter().filter(|(s, _)| s.starts_with(&format!("D{dim}_"))) {
        for t in *targets {
            g.refute(src, t)?;
        }
    }
    Ok(g)
}

fn identities_section(a: &Algebra) -> Section {
    let r = check_identities(a);
    let mut s = Section::new("identities");
    s.info("anticommutative", r.anticommutative)
        .info("antiassociative", r.antiassociative)
        .info("dual_mock_lie", r.dual_mock_lie)
        .info("jacobi", r.jacobi);
    for id in [Identity::Antiassociative, Identity::Jacobi] {
        if let Some(w) = r.witnesses_for(id).next() {
            let (i, j, k) = w.triple;
            s.info(
                format!("{id:?} witness (e{}, e{}, e{})", i + 1, j + 1, k + 1),
                format!("{} vs {}", fmt_vector(&w.lhs), fmt_vector(&w.rhs)),
            );
        }
    }
    s
}

fn run(cmd: &Command, inputs: &[String]) -> Result<ReportDocument> {
    let mut r = ReportDocument::new(command_name(cmd), inputs);
    match cmd {
        Command::Catalog { action: CatalogAction::List } => {
            let mut s = Section::new("catalog");
            for id in (5..=9).flat_map(catalog::ids_of_dim) {
                let e = catalog::get(&id)?;
                s.info(id, e.provenance);
            }
            r.add(s);
        }
        Command::Catalog { action: CatalogAction::Show { id } } => {
            let e = catalog::get(id)?;
            let mut s = Section::new(id.clone());
            s.info("provenance", &e.provenance)
                .info("dim", e.algebra.dim())
                .info("lie", e.is_lie)
                .info("listed as indecomposable", e.listed_indecomposable);
            if let Some((base, k)) = &e.split_of {
                s.info("split of", format!("{base} + C^{k}"));
            }
            for (i, j, v) in e.algebra.nonzero_products() {
                s.info(format!("e{} e{}", i + 1, j + 1), fmt_vector(&v));
            }
            r.add(s);
        }
        Command::Check { algebra } => {
            let a = load_algebra(algebra)?;
            let mut s = identities_section(&a);
            let dml = check_identities(&a).dual_mock_lie;
            s.check("dual mock-Lie", dml, dml);
            r.add(s);
        }
        Command::Invariants { algebra } => {
            let f = fingerprint(&load_algebra(algebra)?);
            let mut s = Section::new("invariants");
            s.info("dim", f.dim)
                .info("der_dim", f.der_dim)
                .info("orbit_dim", f.dim * f.dim - f.der_dim)
                .info("ann_dim", f.ann_dim)
                .info("lcs_dims", format!("{:?}", f.lcs_dims))
                .info("product_dims", format!("{:?}", f.product_dims));
            r.add(s);
        }
        Command::H2 { algebra } => {
            let a = load_algebra(algebra)?;
            let b = h2_basis(&a);
            let mut s = Section::new("H2");
            s.info("dim Z2", b.z2.len()).info("dim B2", b.b2.len());
            match h2_generators(algebra) {
                Some(gens) => {
                    let v = h2_row_verdict(b.h2_dim(), gens);
                    s.push("dim H2", b.h2_dim(), Some(gens.len().to_string()), v);
                    for g in gens {
                        let ok = is_cocycle(&a, &parse_cocycle(g, a.dim())?)?;
                        s.check(format!("claimed {g} in Z2"), ok, ok);
                    }
                }
                None => {
                    s.info("dim H2", b.h2_dim());
                }
            }
            for (k, f) in b.h2_reps.iter().enumerate() {
                s.info(format!("rep {}", k + 1), f);
            }
            r.add(s);
        }
        Command::Extend { algebra, cocycles } => {
            let a = load_algebra(algebra)?;
            let t = tuple(&a, cocycles)?;
            let rep = check_extension_conditions(&a, &t)?;
            let ext = central_extension(&a, &t)?;
            let ann = crate::algcore::annihilator(&ext).dim();
            let mut s = Section::new("extension");
            s.info("radical dim", rep.radical.dim())
                .info("radical ∩ Ann dim", rep.radical_ann_dim)
                .info("classes independent in H2", rep.classes_independent_in_h2)
                .info("T_s", rep.satisfies_ts())
                .check("Ann dim = radical ∩ Ann + s", ann, ann == rep.radical_ann_dim + t.len());
            r.add(s);
            let mut table = Section::new("table");
            table.info("dim", ext.dim());
            for (i, j, v) in ext.nonzero_products() {
                table.info(format!("e{} e{}", i + 1, j + 1), fmt_vector(&v));
            }
            r.add(table);
            r.add(identities_section(&ext));
        }
        Command::Act { algebra, matrix, cocycles } => {
            let a = load_algebra(algebra)?;
            let phi = AutCandidate::from(parse_matrix(&std::fs::read_to_string(matrix)?)?);
            let t = tuple(&a, cocycles)?;
            let mut s = Section::new("action");
            let auto = verify_automorphism(&a, &phi);
            s.check("automorphism", auto, auto);
            if auto {
                let out = act(&a, &phi, &t)?;
                for (k, f) in out.components.iter().enumerate() {
                    let ok = is_cocycle(&a, f)?;
                    s.info(format!("image {}", k + 1), f).check(format!("image {} in Z2", k + 1), ok, ok);
                }
            }
            r.add(s);
        }
        Command::Degenerate { source, target, basis } => {
            let n = catalog::get(source)?.algebra.dim();
            let b = parse_parametric_basis(&load_basis_text(basis)?, n)?;
            let rep = verify_claim(&DegenerationClaim::witnessed(source, target, b), &Catalog)?;
            let mut s = Section::new("claim");
            s.push("status", rep.status, None, Verdict::check(rep.status.is_verified()));
            s.info("literal", rep.literal);
            if let Some(m) = rep.fingerprint_match {
                s.info("fingerprint match", m);
            }
            if let Some(l) = &rep.limit {
                for (i, j, v) in l.nonzero_products() {
                    s.info(format!("limit e{} e{}", i + 1, j + 1), fmt_vector(&v));
                }
            }
            r.add(s);
            let nc = necessary_conditions(&catalog::get(source)?.algebra, &catalog::get(target)?.algebra)?;
            let mut s = Section::new("necessary conditions");
            for c in nc.checks {
                s.info(format!("{} ({})", c.name, c.detail), if c.passed { "holds" } else { "fails" });
            }
            r.add(s);
        }
        Command::Graph { dim } => {
            let g = graph(*dim as usize)?;
            let mut s = Section::new(format!("{dim}-dim graph"));
            for line in emit_text(&g).lines() {
                s.info("", line);
            }
            let rigid = g.rigid_candidates().join(", ");
            s.info("rigid candidates", rigid);
            r.add(s);
        }
        Command::VerifyAll => return Ok(verify_all()),
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h2_of_d5_01() {
        let (code, out) = dispatch(&["h2", "D5_01"]);
        assert!(out.contains("dim H2 = 5"), "{out}");
        assert_eq!(code, 0);
    }

    #[test]
    fn degenerate_with_bundled_witness() {
        let (code, out) = dispatch(&["degenerate", "D7_14", "D7_07", "--basis", "witness_d714_d707.txt"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("status = VERIFIED  PASS"));
    }

    #[test]
    fn check_d7_14() {
        let (code, out) = dispatch(&["check", "D7_14"]);
        assert_eq!(code, 0);
        assert!(out.contains("dual_mock_lie = true") && out.contains("jacobi = false"));
        assert!(out.contains("Jacobi witness (e1, e2, e3)"), "{out}");
    }

    #[test]
    fn errors_are_reported() {
        let (code, out) = dispatch(&["check", "D7_99"]);
        assert_eq!(code, 1);
        assert!(out.contains("unknown catalog id"));
        assert_eq!(dispatch(&["frobnicate"]).0, 2);
        assert_eq!(dispatch(&["check", "D7_14", "--format", "dot"]).0, 2);
    }

    #[test]
    fn graph_formats() {
        let (code, dot) = dispatch(&["graph", "--format", "dot"]);
        assert_eq!(code, 0);
        assert!(dot.contains("D7_14 -> D7_07"));
        let (_, json) = dispatch(&["graph", "--format", "json"]);
        assert!(crate::shell::graphio::parse_graph_json(&json).is_ok());
    }

    #[test]
    fn matrix_files() {
        let m = parse_matrix("1 0\n# c\n1/2 -3\n").unwrap();
        assert_eq!(m.get(1, 0), &crate::exact::qr(1, 2));
        assert!(matches!(parse_matrix("1 x\n0 1"), Err(Error::SyntaxError { line: 1, col: 3, .. })));
    }
}
