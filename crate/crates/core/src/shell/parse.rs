//! Text formats for algebras, cocycles and parametric bases.
//!
//! ```text
//! dim 3            [d16] - [d25] + 2*[d34]      E1 = t*e4
//! e1 e2 = e3       1/2 [d10,11]                 E2 = t^2 e2 - (1 + t^-1)*e3
//! ```
//!
//! Whitespace is ignored between tokens and `*` is optional. `#` starts a
//! comment. Indices are 1-based.

use crate::algcore::Algebra;
use crate::cohom::SkewForm;
use crate::degen::ParametricBasis;
use crate::error::{Error, Result};
use crate::exact::{Rational, TPoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Letter(char),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
    len: usize,
}

fn lex(line: &str, lineno: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Int(s.parse().expect("digits")), col, len: i - start });
        } else if c.is_alphabetic() {
            out.push(Token { tok: Tok::Letter(c), col, len: 1 });
            i += 1;
        } else if "+-−*/^=()[],".contains(c) {
            let c = if c == '−' { '-' } else { c };
            out.push(Token { tok: Tok::Sym(c), col, len: 1 });
            i += 1;
        } else {
            return Err(Error::SyntaxError { line: lineno, col, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn new(toks: &'a [Token], line: usize, text: &str) -> Self {
        Cursor { toks, pos: 0, line, end_col: text.chars().count() + 1 }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::SyntaxError { line: self.line, col: self.col(), msg: msg.into() })
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn eat_letter(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Letter(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected an integer"),
        }
    }

    /// Raw digits of the next integer token, for `d16`-style indices.
    fn digits(&mut self) -> Result<(String, usize)> {
        let col = self.col();
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Int(n), len, .. }) => {
                let s = format!("{:0>width$}", n, width = *len);
                self.pos += 1;
                Ok((s, col))
            }
            _ => self.err("expected an index"),
        }
    }

    fn index(&mut self, dim: usize) -> Result<usize> {
        let n = self.int()?;
        check_index(n.try_into().unwrap_or(usize::MAX), dim)
    }

    fn rational(&mut self) -> Result<Rational> {
        let p = self.int()?;
        if self.eat_sym('/') {
            let col = self.col();
            let d = self.int()?;
            if d.is_zero() {
                return Err(Error::SyntaxError { line: self.line, col, msg: "zero denominator".into() });
            }
            Ok(Rational::new(p, d))
        } else {
            Ok(Rational::from_integer(p))
        }
    }

    fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}

fn check_index(i: usize, dim: usize) -> Result<usize> {
    if i == 0 || i > dim {
        Err(Error::IndexOutOfRange { index: i, dim })
    } else {
        Ok(i - 1)
    }
}

/// Non-empty lines with their 1-based numbers and tokens.
fn lines(text: &str) -> Result<Vec<(usize, &str, Vec<Token>)>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let toks = lex(line, k + 1)?;
        if !toks.is_empty() {
            out.push((k + 1, line, toks));
        }
    }
    Ok(out)
}

/// A signed sum `± term ± term …` terminated by end of input or `stop`.
fn signed_sum<T>(
    cur: &mut Cursor<'_>,
    stop: Option<char>,
    mut term: impl FnMut(&mut Cursor<'_>, bool) -> Result<T>,
) -> Result<Vec<T>> {
    let mut out = Vec::new();
    let mut first = true;
    loop {
        let neg = if cur.eat_sym('-') {
            true
        } else if cur.eat_sym('+') || first {
            false
        } else {
            return cur.err("expected `+` or `-`");
        };
        out.push(term(cur, neg)?);
        first = false;
        if cur.at_end() || stop.is_some_and(|c| cur.peek() == Some(&Tok::Sym(c))) {
            return Ok(out);
        }
    }
}

fn optional_coefficient(cur: &mut Cursor<'_>) -> Result<Rational> {
    if matches!(cur.peek(), Some(Tok::Int(_))) {
        let c = cur.rational()?;
        cur.eat_sym('*');
        Ok(c)
    } else {
        Ok(Rational::one())
    }
}

/// `c*e<k>` or `0`.
fn vector(cur: &mut Cursor<'_>, dim: usize) -> Result<Vec<Rational>> {
    let mut v = vec![Rational::zero(); dim];
    if cur.peek() == Some(&Tok::Int(BigInt::zero())) && cur.toks.len() == cur.pos + 1 {
        cur.bump();
        return Ok(v);
    }
    for (k, c) in signed_sum(cur, None, |cur, neg| {
        let c = optional_coefficient(cur)?;
        if !cur.eat_letter('e') {
            return cur.err("expected a basis element `e<k>`");
        }
        let k = cur.index(dim)?;
        Ok((k, if neg { -c } else { c }))
    })? {
        v[k] += c;
    }
    Ok(v)
}

fn header(cur: &mut Cursor<'_>) -> Result<usize> {
    if !(cur.eat_letter('d') && cur.eat_letter('i') && cur.eat_letter('m')) {
        return cur.err("expected `dim N`");
    }
    let n: usize = cur.int()?.try_into().map_err(|_| Error::SyntaxError {
        line: cur.line,
        col: cur.col(),
        msg: "dimension too large".into(),
    })?;
    cur.finish()?;
    if n == 0 {
        return Err(Error::SyntaxError { line: cur.line, col: 5, msg: "dimension must be positive".into() });
    }
    Ok(n)
}

/// Parses the `dim N` / `e<i> e<j> = …` format.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let lines = lines(text)?;
    let Some(((hl, htext, htoks), rest)) = lines.split_first() else {
        return Err(Error::SyntaxError { line: 1, col: 1, msg: "expected `dim N`".into() });
    };
    let n = header(&mut Cursor::new(htoks, *hl, htext))?;
    let mut sc = vec![Rational::zero(); n * n * n];
    let mut seen = vec![false; n * n];
    for (lineno, text, toks) in rest {
        let mut cur = Cursor::new(toks, *lineno, text);
        let factor = |cur: &mut Cursor<'_>| -> Result<usize> {
            if !cur.eat_letter('e') {
                return cur.err("expected `e<i>`");
            }
            cur.index(n)
        };
        let i = factor(&mut cur)?;
        cur.eat_sym('*');
        let j = factor(&mut cur)?;
        cur.expect_sym('=')?;
        let v = vector(&mut cur, n)?;
        cur.finish()?;
        if i == j {
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            return Err(Error::SkewConflict { i: i + 1, j: j + 1 });
        }
        let conflict = |a: usize, b: usize, sign: bool, sc: &[Rational]| {
            (0..n).any(|k| {
                let want = if sign { -v[k].clone() } else { v[k].clone() };
                sc[(a * n + b) * n + k] != want
            })
        };
        if (seen[i * n + j] && conflict(i, j, false, &sc)) || (seen[j * n + i] && conflict(j, i, true, &sc)) {
            return Err(Error::SkewConflict { i: i + 1, j: j + 1 });
        }
        for (k, c) in v.into_iter().enumerate() {
            sc[(j * n + i) * n + k] = -c.clone();
            sc[(i * n + j) * n + k] = c;
        }
        seen[i * n + j] = true;
        seen[j * n + i] = true;
    }
    Algebra::from_tensor(n, sc)
}

/// `[d<i><j>]`, `[d<i>,<j>]` or the `Δ` spelling.
fn delta(cur: &mut Cursor<'_>, n: usize) -> Result<(usize, usize)> {
    cur.expect_sym('[')?;
    if !(cur.eat_letter('d') || cur.eat_letter('Δ')) {
        return cur.err("expected `d` or `Δ`");
    }
    let (first, col) = cur.digits()?;
    let (i, j) = if cur.eat_sym(',') {
        let (second, _) = cur.digits()?;
        (first.parse::<usize>().unwrap_or(usize::MAX), second.parse::<usize>().unwrap_or(usize::MAX))
    } else if first.len() == 2 {
        let b = first.as_bytes();
        ((b[0] - b'0') as usize, (b[1] - b'0') as usize)
    } else {
        return Err(Error::SyntaxError {
            line: cur.line,
            col,
            msg: "write two single-digit indices or separate them with `,`".into(),
        });
    };
    cur.expect_sym(']')?;
    if i == j {
        return Err(Error::DiagonalDelta(i));
    }
    Ok((check_index(i, n)?, check_index(j, n)?))
}

/// Parses `c1*[dij] ± c2*[dkl] …` (or `0`) into a form on an `n`-dimensional algebra.
pub fn parse_cocycle(text: &str, n: usize) -> Result<SkewForm> {
    let toks = lex(text.trim(), 1)?;
    let mut cur = Cursor::new(&toks, 1, text.trim());
    if cur.at_end() {
        return cur.err("empty expression");
    }
    if toks.len() == 1 && toks[0].tok == Tok::Int(BigInt::zero()) {
        return Ok(SkewForm::zero(n));
    }
    let terms = signed_sum(&mut cur, None, |cur, neg| {
        let c = optional_coefficient(cur)?;
        let (i, j) = delta(cur, n)?;
        Ok((i, j, if neg { -c } else { c }))
    })?;
    cur.finish()?;
    let mut out = SkewForm::zero(n);
    for (i, j, c) in terms {
        let (i, j, c) = if i < j { (i, j, c) } else { (j, i, -c) };
        out = out.add(&SkewForm::from_terms(n, &[(i, j, 1)]).scale(&c));
    }
    Ok(out)
}

/// One factor of a coefficient: a rational, `t^k` or a parenthesized sum.
fn poly_factor(cur: &mut Cursor<'_>) -> Result<TPoly> {
    match cur.peek() {
        Some(Tok::Int(_)) => Ok(TPoly::constant(cur.rational()?)),
        Some(Tok::Letter('t')) => {
            cur.bump();
            let mut e: i32 = 1;
            if cur.eat_sym('^') {
                let neg = cur.eat_sym('-');
                let col = cur.col();
                let k: i32 = cur.int()?.try_into().map_err(|_| Error::SyntaxError {
                    line: cur.line,
                    col,
                    msg: "exponent too large".into(),
                })?;
                e = if neg { -k } else { k };
            }
            Ok(TPoly::monomial(Rational::one(), e))
        }
        Some(Tok::Sym('(')) => {
            cur.bump();
            let parts = signed_sum(cur, Some(')'), |cur, neg| {
                let p = poly_product(cur)?;
                Ok(if neg { p.neg() } else { p })
            })?;
            cur.expect_sym(')')?;
            Ok(parts.iter().fold(TPoly::zero(), |acc, p| acc.add(p)))
        }
        _ => cur.err("expected a coefficient"),
    }
}

fn starts_factor(cur: &Cursor<'_>) -> bool {
    matches!(cur.peek(), Some(Tok::Int(_) | Tok::Letter('t') | Tok::Sym('(')))
}

/// A product of factors joined by optional `*`.
fn poly_product(cur: &mut Cursor<'_>) -> Result<TPoly> {
    let mut p = poly_factor(cur)?;
    loop {
        let save = cur.pos;
        let star = cur.eat_sym('*');
        if starts_factor(cur) {
            p = p.mul(&poly_factor(cur)?);
        } else {
            if star {
                cur.pos = save;
            }
            return Ok(p);
        }
    }
}

/// Parses `n` lines `E<i> = p1*e<j> ± …` with Laurent polynomial coefficients.
pub fn parse_parametric_basis(text: &str, n: usize) -> Result<ParametricBasis> {
    let mut rows: Vec<Option<Vec<TPoly>>> = vec![None; n];
    let mut last = 1;
    for (lineno, line, toks) in lines(text)? {
        last = lineno;
        let mut cur = Cursor::new(&toks, lineno, line);
        if !cur.eat_letter('E') {
            return cur.err("expected `E<i>`");
        }
        let col = cur.col();
        let i = cur.index(n)?;
        if rows[i].is_some() {
            return Err(Error::SyntaxError { line: lineno, col, msg: format!("E{} given twice", i + 1) });
        }
        cur.expect_sym('=')?;
        let mut row = vec![TPoly::zero(); n];
        let terms = signed_sum(&mut cur, None, |cur, neg| {
            let c = if starts_factor(cur) {
                let p = poly_product(cur)?;
                cur.eat_sym('*');
                p
            } else {
                TPoly::one()
            };
            if !cur.eat_letter('e') {
                return cur.err("expected a basis element `e<j>`");
            }
            let j = cur.index(n)?;
            Ok((j, if neg { c.neg() } else { c }))
        })?;
        cur.finish()?;
        for (j, c) in terms {
            row[j] = row[j].add(&c);
        }
        rows[i] = Some(row);
    }
    let mut full = Vec::with_capacity(n);
    for (i, r) in rows.into_iter().enumerate() {
        match r {
            Some(r) => full.push(r),
            None => {
                return Err(Error::SyntaxError { line: last, col: 1, msg: format!("missing line for E{}", i + 1) })
            }
        }
    }
    ParametricBasis::from_poly_rows(full)
}

/// The text form read back by [`parse_algebra`].
pub fn format_algebra(a: &Algebra) -> String {
    a.to_string()
}

/// The text form read back by [`parse_cocycle`].
pub fn format_cocycle(f: &SkewForm) -> String {
    f.to_string()
}

/// The text form read back by [`parse_parametric_basis`]. Entries must be
/// Laurent polynomials.
pub fn format_parametric_basis(b: &ParametricBasis) -> String {
    let n = b.dim();
    let mut out = String::new();
    for i in 0..n {
        let mut terms = Vec::new();
        for j in 0..n {
            let x = b.rows().get(i, j);
            if x.is_zero() {
                continue;
            }
            let den: Vec<_> = x.den().terms().collect();
            assert!(den.len() == 1, "entries of a printable basis are Laurent polynomials");
            let (e, c) = den[0];
            let p = x.num().shift(-e).scale(&(Rational::one() / c));
            terms.push(format!("({p})*e{}", j + 1));
        }
        let rhs = if terms.is_empty() { "0*e1".to_string() } else { terms.join(" + ") };
        out.push_str(&format!("E{} = {}\n", i + 1, rhs));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qr};
    use crate::shell::catalog;

    #[test]
    fn small_algebra() {
        let a = parse_algebra("dim 3\ne1 e2 = e3").unwrap();
        assert_eq!(a.c(0, 1, 2), &q(1));
        assert_eq!(a.c(1, 0, 2), &q(-1));
        assert!(matches!(parse_algebra("dim 2\ne1 e1 = e2"), Err(Error::SkewConflict { i: 1, j: 1 })));
    }

    #[test]
    fn d7_14_block() {
        let text = "dim 7\ne1 e2 = e4\ne1 e3 = e5\ne1 e6 = e7\ne2 e3 = e6\ne2 e5 = -e7\ne3 e4 = e7";
        assert_eq!(parse_algebra(text).unwrap(), catalog::get("D7_14").unwrap().algebra);
    }

    #[test]
    fn loose_spacing_and_coefficients() {
        let a = parse_algebra("  dim 4 # header\n\ne1e2=1/2e3 - 3*e4\ne2 e1 = -1/2 e3 + 3e4\n").unwrap();
        assert_eq!(a.c(0, 1, 2), &qr(1, 2));
        assert_eq!(a.c(0, 1, 3), &q(-3));
        assert!(matches!(parse_algebra("dim 3\ne1 e2 = e3\ne2 e1 = e3"), Err(Error::SkewConflict { i: 2, j: 1 })));
    }

    #[test]
    fn algebra_errors_carry_positions() {
        match parse_algebra("dim 3\ne1 e2 = e3 +") {
            Err(Error::SyntaxError { line: 2, col: 13, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_algebra("dim 3\ne1 e2 = %e3") {
            Err(Error::SyntaxError { line: 2, col: 9, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_algebra("dim 3\ne1 e4 = e3"), Err(Error::IndexOutOfRange { index: 4, dim: 3 })));
        assert!(matches!(parse_algebra(""), Err(Error::SyntaxError { line: 1, .. })));
    }

    #[test]
    fn golden_files_match_tables() {
        for id in catalog::listed_ids() {
            let text = catalog::source_text(id).unwrap();
            assert_eq!(parse_algebra(text).unwrap(), catalog::get(id).unwrap().algebra, "{id}");
        }
    }

    #[test]
    fn cocycles() {
        let f = parse_cocycle("[d16]-[d25]+[d34]", 7).unwrap();
        assert_eq!(f, SkewForm::from_terms(7, &[(0, 5, 1), (1, 4, -1), (2, 3, 1)]));
        let g = parse_cocycle("3*[d12]", 2).unwrap();
        assert_eq!(g.value(0, 1), q(3));
        assert!(matches!(parse_cocycle("[d11]", 3), Err(Error::DiagonalDelta(1))));
        assert!(matches!(parse_cocycle("[d18]", 7), Err(Error::IndexOutOfRange { index: 8, dim: 7 })));
        assert_eq!(parse_cocycle("[Δ21] − 1/2[d10,3]", 10).unwrap().value(2, 9), qr(1, 2));
        assert_eq!(parse_cocycle("0", 4).unwrap(), SkewForm::zero(4));
        assert!(matches!(parse_cocycle("[d123]", 12), Err(Error::SyntaxError { .. })));
    }

    #[test]
    fn d7_12_witness_text() {
        let text = "E1 = t*e4\nE2 = t^2*e2 - e3\nE3 = t*e3 + t*e5 + t^3*e6\nE4 = e1 + e2 + t^2*e4 - e5\n\
                    E5 = t*e7\nE6 = t^3*e6\nE7 = e5 + e6";
        let b = parse_parametric_basis(text, 7).unwrap();
        assert_eq!(b.rows().get(1, 1), &TPoly::monomial(q(1), 2).into());
        let lim = crate::degen::limit_algebra(&catalog::get("D7_14").unwrap().algebra, &b).unwrap();
        assert_eq!(lim, catalog::get("D7_12").unwrap().algebra);
    }

    #[test]
    fn basis_forms() {
        let id = parse_parametric_basis("E1 = e1\nE2 = e2\nE3 = e3", 3).unwrap();
        assert_eq!(id, ParametricBasis::identity(3));
        assert!(matches!(parse_parametric_basis("E1 = e1\nE2 = e1", 2), Err(Error::SingularBasis)));
        assert!(matches!(parse_parametric_basis("E1 = e1", 2), Err(Error::SyntaxError { .. })));
        let b = parse_parametric_basis("E1 = (1 + t^-1) * 2 t e1 - 1/2 e2\nE2 = t^-1e2", 2).unwrap();
        let p = TPoly::from_terms([(1, q(2)), (0, q(2))]);
        assert_eq!(b.rows().get(0, 0), &p.into());
        assert_eq!(b.rows().get(0, 1), &TPoly::constant(qr(-1, 2)).into());
        assert_eq!(b.rows().get(1, 1), &TPoly::monomial(q(1), -1).into());
    }

    #[test]
    fn round_trips() {
        let a = catalog::get("D9_38").unwrap().algebra;
        assert_eq!(parse_algebra(&format_algebra(&a)).unwrap(), a);
        let f = SkewForm::from_terms(11, &[(0, 9, 2), (3, 10, -1)]);
        assert_eq!(parse_cocycle(&format_cocycle(&f), 11).unwrap(), f);
        let b = parse_parametric_basis("E1 = (t - 2t^3)e1 + e2\nE2 = t^-2 e2", 2).unwrap();
        assert_eq!(parse_parametric_basis(&format_parametric_basis(&b), 2).unwrap(), b);
    }
}
