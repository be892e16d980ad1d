//! Line-oriented text format for laws.
//!
//! ```text
//! # comment
//! dim 3
//! name sl2
//! bracket e1 e2 = 2 e2
//! bracket e1 e3 = -2 e3
//! bracket e2 e3 = 1 e1
//! ```
//!
//! Coefficients are written `p/q`, `p/q i` or `p/q+r/s i`. A term may carry
//! a power of the deformation parameter, as in `1/2 eps^2 e3`. Basis vectors
//! are numbered from 1. Parameter families use `map eJ = ...` lines giving
//! the image of `eJ`.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::gaussian::GaussianRational;
use crate::laurent::Laurent;
use crate::law::StructureConstants;
use crate::matrix::Matrix;
use crate::{EpsilonScalar, Law, PerturbedLaw};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("line {line}: index e{index} out of range for dimension {dim}")]
    IndexOutOfRange { line: usize, index: usize, dim: usize },
    #[error("line {line}: bracket [e{left},e{right}] declared twice")]
    DuplicateBracket { line: usize, left: usize, right: usize },
    #[error("missing `dim` line")]
    MissingDim,
    #[error("document has eps terms where a constant law is expected")]
    Perturbed,
}

type DocResult<T> = std::result::Result<T, DocumentError>;

/// `coefficient * eps^eps * e_target`, with a 0-based target.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coefficient: GaussianRational,
    pub eps: i64,
    pub target: usize,
}

/// `[e_left, e_right] = terms`, 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketDecl {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraDocument {
    pub dim: usize,
    pub name: Option<String>,
    pub brackets: Vec<BracketDecl>,
}

impl AlgebraDocument {
    pub fn has_eps(&self) -> bool {
        self.brackets.iter().flat_map(|b| &b.terms).any(|t| t.eps != 0)
    }

    /// The law with constant coefficients; Jacobi is not checked.
    pub fn to_law(&self) -> DocResult<Law> {
        if self.has_eps() {
            return Err(DocumentError::Perturbed);
        }
        let entries = self
            .brackets
            .iter()
            .flat_map(|b| b.terms.iter().map(move |t| (b.left, b.right, t.target, t.coefficient.clone())));
        Ok(StructureConstants::from_entries(self.dim, entries).expect("validated while parsing"))
    }

    pub fn to_perturbed(&self) -> PerturbedLaw {
        let entries = self.brackets.iter().flat_map(|b| {
            b.terms
                .iter()
                .map(move |t| (b.left, b.right, t.target, Laurent::monomial(t.coefficient.clone(), t.eps)))
        });
        StructureConstants::from_entries(self.dim, entries).expect("validated while parsing")
    }

    pub fn from_law(law: &Law, name: Option<&str>) -> Self {
        Self::from_perturbed(&law.map(|c| Laurent::constant(c.clone())), name)
    }

    pub fn from_perturbed(law: &PerturbedLaw, name: Option<&str>) -> Self {
        let n = law.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<Term> = law
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .flat_map(|(k, x)| {
                        x.terms()
                            .map(|(e, c)| Term { coefficient: c.clone(), eps: e, target: k })
                            .collect::<Vec<_>>()
                    })
                    .collect();
                if !terms.is_empty() {
                    brackets.push(BracketDecl { left: i, right: j, terms });
                }
            }
        }
        Self { dim: n, name: name.map(str::to_string), brackets }
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[Term]) -> fmt::Result {
    for (n, t) in terms.iter().enumerate() {
        let text = t.coefficient.to_string();
        let (sign, body) = match (n, text.strip_prefix('-')) {
            (0, _) => ("", text.clone()),
            (_, Some(_)) => (" - ", (-t.coefficient.clone()).to_string()),
            (_, None) => (" + ", text.clone()),
        };
        write!(f, "{sign}{body}")?;
        if t.eps != 0 {
            write!(f, " eps^{}", t.eps)?;
        }
        write!(f, " e{}", t.target + 1)?;
    }
    if terms.is_empty() {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for AlgebraDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.dim)?;
        if let Some(name) = &self.name {
            writeln!(f, "name {name}")?;
        }
        for b in &self.brackets {
            write!(f, "bracket e{} e{} = ", b.left + 1, b.right + 1)?;
            write_terms(f, &b.terms)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn serialize(doc: &AlgebraDocument) -> String {
    doc.to_string()
}

#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token { text: &line[s..idx], column: s + 1 });
                start = None;
            }
            (false, None) => start = Some(idx),
            _ => {}
        }
    }
    out
}

struct LineParser<'a> {
    line: usize,
    dim: usize,
    tokens: Vec<Token<'a>>,
    pos: usize,
    end_column: usize,
}

impl<'a> LineParser<'a> {
    fn error(&self, column: usize, message: impl Into<String>) -> DocumentError {
        DocumentError::Parse { line: self.line, column, message: message.into() }
    }

    fn peek(&self) -> Option<Token<'a>> {
        self.tokens.get(self.pos).copied()
    }

    fn next(&mut self, what: &str) -> DocResult<Token<'a>> {
        let t = self.peek().ok_or_else(|| self.error(self.end_column, format!("expected {what}")))?;
        self.pos += 1;
        Ok(t)
    }

    fn basis(&mut self) -> DocResult<usize> {
        let t = self.next("a basis vector eK")?;
        let index = basis_index(t.text).ok_or_else(|| self.error(t.column, format!("expected eK, found `{}`", t.text)))?;
        if index == 0 || index > self.dim {
            return Err(DocumentError::IndexOutOfRange { line: self.line, index, dim: self.dim });
        }
        Ok(index - 1)
    }

    fn expect(&mut self, text: &str) -> DocResult<()> {
        let t = self.next(&format!("`{text}`"))?;
        if t.text != text {
            return Err(self.error(t.column, format!("expected `{text}`, found `{}`", t.text)));
        }
        Ok(())
    }

    fn terms(&mut self) -> DocResult<Vec<Term>> {
        let mut terms = Vec::new();
        if self.peek().is_some_and(|t| t.text == "0") && self.tokens.len() == self.pos + 1 {
            self.pos += 1;
            return Ok(terms);
        }
        let mut negate = false;
        loop {
            let first = self.peek().map_or(self.end_column, |t| t.column);
            let mut coefficient_text = Vec::new();
            while let Some(t) = self.peek() {
                if basis_index(t.text).is_some() || eps_power(t.text).is_some() {
                    break;
                }
                coefficient_text.push(t.text);
                self.pos += 1;
            }
            if coefficient_text.is_empty() {
                return Err(self.error(first, "expected a coefficient"));
            }
            let joined = coefficient_text.join(" ");
            let mut coefficient: GaussianRational =
                joined.parse().map_err(|_| self.error(first, format!("invalid coefficient `{joined}`")))?;
            if negate {
                coefficient = -coefficient;
            }
            let mut eps = 0;
            if let Some(power) = self.peek().and_then(|t| eps_power(t.text)) {
                eps = power;
                self.pos += 1;
            }
            let target = self.basis()?;
            terms.push(Term { coefficient, eps, target });
            match self.peek() {
                None => return Ok(terms),
                Some(t) if t.text == "+" || t.text == "-" => {
                    negate = t.text == "-";
                    self.pos += 1;
                }
                Some(t) => return Err(self.error(t.column, format!("expected `+` or `-`, found `{}`", t.text))),
            }
        }
    }

    fn finish(&self) -> DocResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.error(t.column, format!("unexpected `{}`", t.text))),
        }
    }
}

fn basis_index(text: &str) -> Option<usize> {
    let digits = text.strip_prefix('e')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn eps_power(text: &str) -> Option<i64> {
    if text == "eps" {
        return Some(1);
    }
    text.strip_prefix("eps^")?.parse().ok()
}

enum Declaration<'a> {
    Bracket(LineParser<'a>),
    Map(LineParser<'a>),
}

struct Header<'a> {
    dim: usize,
    name: Option<String>,
    body: Vec<Declaration<'a>>,
}

fn parse_lines<'a>(text: &'a str, body_keyword: &str) -> DocResult<Header<'a>> {
    let mut dim = None;
    let mut name = None;
    let mut body = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(content);
        let Some(&keyword) = tokens.first() else { continue };
        let end_column = content.trim_end().len() + 1;
        match keyword.text {
            "dim" => {
                if dim.is_some() {
                    return Err(DocumentError::Parse { line, column: 1, message: "`dim` declared twice".into() });
                }
                let value = tokens.get(1).ok_or(DocumentError::Parse {
                    line,
                    column: end_column,
                    message: "expected a dimension".into(),
                })?;
                let parsed = value.text.parse::<usize>().map_err(|_| DocumentError::Parse {
                    line,
                    column: value.column,
                    message: format!("invalid dimension `{}`", value.text),
                })?;
                if let Some(extra) = tokens.get(2) {
                    return Err(DocumentError::Parse { line, column: extra.column, message: "unexpected text".into() });
                }
                dim = Some(parsed);
            }
            "name" => {
                let rest = content[keyword.column - 1 + 4..].trim();
                if rest.is_empty() {
                    return Err(DocumentError::Parse { line, column: end_column, message: "expected a name".into() });
                }
                name = Some(rest.to_string());
            }
            k if k == body_keyword => {
                let Some(dim) = dim else {
                    return Err(DocumentError::Parse {
                        line,
                        column: 1,
                        message: "`dim` must come before declarations".into(),
                    });
                };
                let parser = LineParser { line, dim, tokens, pos: 1, end_column };
                body.push(if body_keyword == "bracket" { Declaration::Bracket(parser) } else { Declaration::Map(parser) });
            }
            other => {
                return Err(DocumentError::Parse {
                    line,
                    column: keyword.column,
                    message: format!("unknown keyword `{other}`"),
                })
            }
        }
    }
    let dim = dim.ok_or(DocumentError::MissingDim)?;
    Ok(Header { dim, name, body })
}

pub fn parse(text: &str) -> DocResult<AlgebraDocument> {
    let header = parse_lines(text, "bracket")?;
    let mut brackets: Vec<BracketDecl> = Vec::new();
    let mut seen = std::collections::BTreeMap::new();
    for decl in header.body {
        let Declaration::Bracket(mut p) = decl else { unreachable!() };
        let left = p.basis()?;
        let right = p.basis()?;
        p.expect("=")?;
        let terms = p.terms()?;
        p.finish()?;
        if left == right {
            if terms.iter().any(|t| !t.coefficient.is_zero()) {
                return Err(p.error(1, format!("[e{0},e{0}] must vanish", left + 1)));
            }
            continue;
        }
        let key = (left.min(right), left.max(right));
        if seen.insert(key, p.line).is_some() {
            return Err(DocumentError::DuplicateBracket { line: p.line, left: left + 1, right: right + 1 });
        }
        brackets.push(BracketDecl { left, right, terms });
    }
    // reversed declarations are stored with the opposite sign
    for b in brackets.iter_mut() {
        if b.left > b.right {
            std::mem::swap(&mut b.left, &mut b.right);
            for t in b.terms.iter_mut() {
                t.coefficient = -t.coefficient.clone();
            }
        }
    }
    Ok(AlgebraDocument { dim: header.dim, name: header.name, brackets })
}

/// Parses `map eJ = ...` lines into the matrix whose column `j` is the
/// image of `e_j`. Undeclared columns are zero.
pub fn parse_family(text: &str) -> DocResult<Matrix<EpsilonScalar>> {
    let header = parse_lines(text, "map")?;
    let n = header.dim;
    let mut m = Matrix::zeros(n, n);
    let mut declared = vec![false; n];
    for decl in header.body {
        let Declaration::Map(mut p) = decl else { unreachable!() };
        let j = p.basis()?;
        p.expect("=")?;
        let terms = p.terms()?;
        p.finish()?;
        if std::mem::replace(&mut declared[j], true) {
            return Err(DocumentError::DuplicateBracket { line: p.line, left: j + 1, right: j + 1 });
        }
        for t in terms {
            let entry: &mut EpsilonScalar = &mut m[(t.target, j)];
            *entry = entry.clone() + Laurent::monomial(t.coefficient, t.eps);
        }
    }
    Ok(m)
}

pub fn serialize_family(matrix: &Matrix<EpsilonScalar>) -> String {
    struct Family<'a>(&'a Matrix<EpsilonScalar>);
    impl fmt::Display for Family<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let m = self.0;
            writeln!(f, "dim {}", m.cols())?;
            for j in 0..m.cols() {
                let terms: Vec<Term> = (0..m.rows())
                    .flat_map(|k| {
                        m[(k, j)].terms().map(move |(e, c)| Term { coefficient: c.clone(), eps: e, target: k }).collect::<Vec<_>>()
                    })
                    .collect();
                write!(f, "map e{} = ", j + 1)?;
                write_terms(f, &terms)?;
                writeln!(f)?;
            }
            Ok(())
        }
    }
    Family(matrix).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn documented_examples() {
        let r2 = parse("dim 2\nbracket e1 e2 = 1 e2").unwrap();
        assert_eq!(r2.to_law().unwrap(), catalog::r2());
        let sl2 = parse("dim 3\nbracket e1 e2 = 2 e2\nbracket e1 e3 = -2 e3\nbracket e2 e3 = 1 e1").unwrap();
        assert_eq!(sl2.to_law().unwrap(), catalog::sl2());
        assert_eq!(
            parse("dim 3\nbracket e1 e5 = 1 e1"),
            Err(DocumentError::IndexOutOfRange { line: 2, index: 5, dim: 3 })
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse("dim 2\nbracket e1 e2 = 1 e2\nbracket e2 e1 = 1 e1"),
            Err(DocumentError::DuplicateBracket { line: 3, left: 2, right: 1 })
        );
        assert_eq!(
            parse("dim 2\nbracket e1 e2 = 1 x2"),
            Err(DocumentError::Parse { line: 2, column: 17, message: "invalid coefficient `1 x2`".into() })
        );
        assert!(matches!(parse("dim 2\nbracket e1 e2 1 e2"), Err(DocumentError::Parse { line: 2, column: 15, .. })));
        assert!(matches!(parse("bracket e1 e2 = 1 e2"), Err(DocumentError::Parse { line: 1, .. })));
        assert_eq!(parse("# nothing"), Err(DocumentError::MissingDim));
        assert!(matches!(parse("dim 2\nfoo"), Err(DocumentError::Parse { line: 2, column: 1, .. })));
    }

    #[test]
    fn coefficients_and_eps() {
        let doc = parse("dim 3\nname test\nbracket e1 e2 = 1/2+3/4 i e3 - 2 eps^2 e1 + -1/3 i eps^-1 e2").unwrap();
        assert_eq!(doc.name.as_deref(), Some("test"));
        let t = &doc.brackets[0].terms;
        assert_eq!(t[0].coefficient, "1/2+3/4 i".parse().unwrap());
        assert_eq!((t[1].coefficient.clone(), t[1].eps, t[1].target), (GaussianRational::from_integer(-2), 2, 0));
        assert_eq!(t[2].eps, -1);
        assert_eq!(doc.to_law(), Err(DocumentError::Perturbed));
        let text = serialize(&doc);
        assert_eq!(text, "dim 3\nname test\nbracket e1 e2 = 1/2+3/4 i e3 - 2 eps^2 e1 - 1/3 i eps^-1 e2\n");
        assert_eq!(parse(&text).unwrap(), doc);
    }

    #[test]
    fn reversed_brackets() {
        let doc = parse("dim 2\nbracket e2 e1 = 1 e2").unwrap();
        assert_eq!(doc.to_law().unwrap().coefficient(0, 1, 1), GaussianRational::from_integer(-1));
    }

    #[test]
    fn round_trip_catalog() {
        for (name, _, _) in catalog::CATALOG {
            let law = catalog::catalog_build(name, &[]).unwrap().law;
            let doc = AlgebraDocument::from_law(&law, Some(name));
            let text = serialize(&doc);
            let back = parse(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(serialize(&back), text);
            assert_eq!(back.to_law().unwrap(), law);
        }
    }

    #[test]
    fn families() {
        let m = parse_family("dim 2\nmap e1 = 1 eps e1\nmap e2 = 1 e1 + 1 eps^2 e2").unwrap();
        assert_eq!(m[(0, 0)], Laurent::epsilon());
        assert_eq!(m[(0, 1)], Laurent::constant(GaussianRational::from_integer(1)));
        assert_eq!(m[(1, 1)], Laurent::eps_pow(2));
        assert_eq!(parse_family(&serialize_family(&m)).unwrap(), m);
    }
}
