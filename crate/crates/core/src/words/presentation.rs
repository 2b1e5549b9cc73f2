//! Finite presentations and their line-oriented text format.
//!
//! ```text
//! # the quaternion group
//! generators: a b
//! relators: a^4 a^2*b^-2 [a,b]*a^2
//!   (ab)^2*a^2        # continuation lines extend the relator list
//! ```
//!
//! A word is a juxtaposition of atoms, optionally separated by `*`.
//! Atoms are a generator name, `[word,word]` or `(word)`, each optionally
//! followed by `^<int>`; `1` is the empty word. Generator names inside a
//! word are matched longest-first against the declared names.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use super::{Letter, Word, WordError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSymbol {
    pub name: String,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("presentation has no generators")]
    NoGenerators,
    #[error("invalid generator name {0:?}")]
    InvalidName(String),
    #[error("duplicate generator name {0:?}")]
    DuplicateName(String),
    #[error("relator {index}: {source}")]
    Relator { index: usize, source: WordError },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("undeclared generator at {0:?}")]
    UndeclaredGenerator(String),
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("{0:?} declared twice")]
    DuplicateSection(&'static str),
    #[error("{0}")]
    Invalid(PresentationError),
    #[error("exponent out of range")]
    ExponentRange,
}

/// Generator list plus relator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<GeneratorSymbol>,
    relators: Vec<Word>,
}

pub(crate) fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

impl Presentation {
    pub fn new<S: AsRef<str>>(names: &[S], relators: Vec<Word>) -> Result<Self, PresentationError> {
        if names.is_empty() {
            return Err(PresentationError::NoGenerators);
        }
        let mut seen = HashSet::new();
        let mut generators = Vec::with_capacity(names.len());
        for (index, name) in names.iter().enumerate() {
            let name = name.as_ref();
            if !valid_name(name) {
                return Err(PresentationError::InvalidName(name.to_string()));
            }
            if !seen.insert(name.to_string()) {
                return Err(PresentationError::DuplicateName(name.to_string()));
            }
            generators.push(GeneratorSymbol {
                name: name.to_string(),
                index,
            });
        }
        let rank = generators.len();
        let relators = relators
            .into_iter()
            .enumerate()
            .map(|(index, r)| {
                if r.rank() != rank {
                    Err(PresentationError::Relator {
                        index,
                        source: WordError::AlphabetMismatch {
                            left: rank,
                            right: r.rank(),
                        },
                    })
                } else {
                    Ok(r)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation {
            generators,
            relators,
        })
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_presentation(text)
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[GeneratorSymbol] {
        &self.generators
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator(&self, index: usize) -> Word {
        Word::generator(self.rank(), index)
    }

    /// Parses a single word over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        let names = self.names();
        let mut p = WordParser::new(text, 1, 1, &names);
        let w = p.word()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error(ParseErrorKind::Expected("end of word")));
        }
        Ok(w)
    }

    pub fn display_word<'a>(&'a self, w: &'a Word) -> String {
        w.display_with(&self.names()).to_string()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.names();
        writeln!(f, "generators: {}", names.join(" "))?;
        f.write_str("relators:")?;
        if self.relators.len() <= 8 {
            for r in &self.relators {
                write!(f, " {}", r.display_with(&names))?;
            }
            writeln!(f)?;
        } else {
            writeln!(f)?;
            for r in &self.relators {
                writeln!(f, "  {}", r.display_with(&names))?;
            }
        }
        Ok(())
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut names: Option<Vec<String>> = None;
    let mut relator_src: Option<Vec<(usize, usize, String)>> = None;
    let mut in_relators = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let trimmed = line.trim_start();
        let indent = line.chars().count() - trimmed.chars().count();
        if let Some(rest) = trimmed.strip_prefix("generators:") {
            if names.is_some() {
                return Err(ParseError {
                    line: line_no,
                    column: indent + 1,
                    kind: ParseErrorKind::DuplicateSection("generators"),
                });
            }
            let col0 = indent + "generators:".len();
            let mut list = Vec::new();
            for (col, tok) in tokens(rest) {
                if !valid_name(tok) {
                    return Err(ParseError {
                        line: line_no,
                        column: col0 + col + 1,
                        kind: ParseErrorKind::Invalid(PresentationError::InvalidName(
                            tok.to_string(),
                        )),
                    });
                }
                if list.iter().any(|n| n == tok) {
                    return Err(ParseError {
                        line: line_no,
                        column: col0 + col + 1,
                        kind: ParseErrorKind::Invalid(PresentationError::DuplicateName(
                            tok.to_string(),
                        )),
                    });
                }
                list.push(tok.to_string());
            }
            if list.is_empty() {
                return Err(ParseError {
                    line: line_no,
                    column: indent + 1,
                    kind: ParseErrorKind::EmptyGenerators,
                });
            }
            names = Some(list);
            in_relators = false;
        } else if let Some(rest) = trimmed.strip_prefix("relators:") {
            if names.is_none() {
                return Err(ParseError {
                    line: line_no,
                    column: indent + 1,
                    kind: ParseErrorKind::Expected("a generators line before relators"),
                });
            }
            if relator_src.is_some() {
                return Err(ParseError {
                    line: line_no,
                    column: indent + 1,
                    kind: ParseErrorKind::DuplicateSection("relators"),
                });
            }
            let col0 = indent + "relators:".len();
            relator_src = Some(
                split_relators(rest, line_no, col0)?
                    .into_iter()
                    .collect(),
            );
            in_relators = true;
        } else if in_relators {
            let list = relator_src.as_mut().expect("relator section open");
            list.extend(split_relators(line, line_no, 0)?);
        } else {
            return Err(ParseError {
                line: line_no,
                column: indent + 1,
                kind: ParseErrorKind::Expected("\"generators:\" or \"relators:\""),
            });
        }
    }

    let names = names.ok_or(ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::EmptyGenerators,
    })?;
    let mut relators = Vec::new();
    for (line, column, src) in relator_src.unwrap_or_default() {
        let mut p = WordParser::new(&src, line, column, &names);
        let w = p.word()?;
        if !p.at_end() {
            return Err(p.error(ParseErrorKind::Expected("end of relator")));
        }
        relators.push(w);
    }
    Presentation::new(&names, relators).map_err(|e| ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::Invalid(e),
    })
}

/// Whitespace-separated tokens with their 0-based char columns.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, c)) in s.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (true, Some((b, sc))) => {
                out.push((sc, &s[b..byte]));
                start = None;
            }
            (false, None) => start = Some((byte, col)),
            _ => {}
        }
    }
    if let Some((b, sc)) = start {
        out.push((sc, &s[b..]));
    }
    out
}

/// Splits a relator line at top-level whitespace; returns (line, 1-based column, text).
fn split_relators(
    s: &str,
    line: usize,
    col0: usize,
) -> Result<Vec<(usize, usize, String)>, ParseError> {
    let mut out = Vec::new();
    let mut depth: i32 = 0;
    let mut cur = String::new();
    let mut cur_col = 0;
    for (col, c) in s.chars().enumerate() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(ParseError {
                line,
                column: col0 + col + 1,
                kind: ParseErrorKind::Expected("matching opening bracket"),
            });
        }
        if c.is_whitespace() && depth == 0 {
            if !cur.is_empty() {
                out.push((line, cur_col, std::mem::take(&mut cur)));
            }
        } else {
            if cur.is_empty() {
                cur_col = col0 + col + 1;
            }
            cur.push(c);
        }
    }
    if depth != 0 {
        return Err(ParseError {
            line,
            column: col0 + s.chars().count() + 1,
            kind: ParseErrorKind::Expected("closing bracket"),
        });
    }
    if !cur.is_empty() {
        out.push((line, cur_col, cur));
    }
    Ok(out)
}

struct WordParser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    names: &'a [String],
}

impl<'a> WordParser<'a> {
    fn new(text: &str, line: usize, column: usize, names: &'a [String]) -> Self {
        WordParser {
            chars: text.chars().collect(),
            pos: 0,
            line,
            column,
            names,
        }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column + self.pos,
            kind,
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn rank(&self) -> usize {
        self.names.len()
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut acc = Word::identity(self.rank());
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(',') | Some(']') | Some(')') => return Ok(acc),
                Some('*') | Some('.') => {
                    self.pos += 1;
                    continue;
                }
                _ => {}
            }
            let atom = self.atom()?;
            acc = &acc * &atom;
        }
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        let base = match self.peek() {
            Some('[') => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(',')?;
                let v = self.word()?;
                self.expect(']')?;
                Word::commutator(&u, &v).expect("same alphabet")
            }
            Some('(') => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(')')?;
                u
            }
            Some('1') => {
                self.pos += 1;
                Word::identity(self.rank())
            }
            Some(_) => self.generator()?,
            None => return Err(self.error(ParseErrorKind::Expected("an atom"))),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(ParseErrorKind::Expected(match c {
                ',' => "','",
                ']' => "']'",
                ')' => "')'",
                _ => "delimiter",
            })))
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        if self.peek() == Some('-') || self.peek() == Some('+') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.error(ParseErrorKind::Expected("an integer exponent")));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        let e: i64 = s.parse().map_err(|_| self.error(ParseErrorKind::ExponentRange))?;
        if e.unsigned_abs() > 1_000_000 {
            return Err(self.error(ParseErrorKind::ExponentRange));
        }
        Ok(e)
    }

    fn generator(&mut self) -> Result<Word, ParseError> {
        let rest = &self.chars[self.pos..];
        let mut best: Option<(usize, usize)> = None;
        for (i, name) in self.names.iter().enumerate() {
            let n = name.chars().count();
            if n <= rest.len()
                && name.chars().zip(rest.iter()).all(|(a, &b)| a == b)
                && best.is_none_or(|(_, len)| n > len)
            {
                best = Some((i, n));
            }
        }
        match best {
            Some((g, n)) => {
                self.pos += n;
                Ok(Word::reduce(self.rank(), [Letter::new(g, false)]).expect("declared generator"))
            }
            None => {
                let tail: String = rest
                    .iter()
                    .take_while(|c| c.is_alphanumeric() || **c == '_')
                    .collect();
                let shown = if tail.is_empty() {
                    rest.iter().take(1).collect()
                } else {
                    tail
                };
                Err(self.error(ParseErrorKind::UndeclaredGenerator(shown)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_cyclic_group() {
        let p = Presentation::parse("generators: a\nrelators: a^2").unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.relators(), &[Word::from_signed(1, &[1, 1]).unwrap()]);
    }

    #[test]
    fn parses_klein_four() {
        let p = Presentation::parse("generators: a b\nrelators: a^2 b^2 [a,b]").unwrap();
        assert_eq!(p.rank(), 2);
        assert_eq!(p.relators().len(), 3);
        assert_eq!(
            p.relators()[2],
            Word::from_signed(2, &[-1, -2, 1, 2]).unwrap()
        );
    }

    #[test]
    fn empty_relator_list_is_free_group() {
        let p = Presentation::parse("generators: a\nrelators:").unwrap();
        assert!(p.relators().is_empty());
        let p = Presentation::parse("generators: a").unwrap();
        assert!(p.relators().is_empty());
    }

    #[test]
    fn juxtaposition_grouping_and_comments() {
        let text = "# S3\ngenerators: a b\nrelators: a^2 b^2 (ab)^3 # dihedral\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.relators()[2], Word::from_signed(2, &[1, 2, 1, 2, 1, 2]).unwrap());
        let p = Presentation::parse("generators: a b\nrelators: a^-1 [a, b]^2 1").unwrap();
        assert_eq!(p.relators()[0], Word::from_signed(2, &[-1]).unwrap());
        assert!(p.relators()[2].is_identity());
    }

    #[test]
    fn longest_name_wins() {
        let p = Presentation::parse("generators: x x1 y1\nrelators: x1y1x").unwrap();
        assert_eq!(p.relators()[0], Word::from_signed(3, &[2, 3, 1]).unwrap());
    }

    #[test]
    fn continuation_lines() {
        let p = Presentation::parse("generators: a\nrelators:\n  a^2\n  a^4\n").unwrap();
        assert_eq!(p.relators().len(), 2);
    }

    #[test]
    fn errors_carry_positions() {
        let e = Presentation::parse("generators: a\nrelators: a^2 b").unwrap_err();
        assert_eq!((e.line, e.column), (2, 15));
        assert!(matches!(e.kind, ParseErrorKind::UndeclaredGenerator(ref s) if s == "b"));

        let e = Presentation::parse("generators:\nrelators:").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::EmptyGenerators);

        let e = Presentation::parse("generators: a\nrelators: [a,a").unwrap_err();
        assert_eq!(e.line, 2);

        let e = Presentation::parse("relators: a").unwrap_err();
        assert_eq!(e.line, 1);

        let e = Presentation::parse("generators: a a").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Invalid(PresentationError::DuplicateName(_))));
    }

    fn arb_presentation() -> impl Strategy<Value = Presentation> {
        (1usize..4).prop_flat_map(|rank| {
            let word = prop::collection::vec((0..rank, any::<bool>()), 0..12).prop_map(
                move |ls| Word::reduce(rank, ls.into_iter().map(|(g, i)| Letter::new(g, i))).unwrap(),
            );
            prop::collection::vec(word, 0..12).prop_map(move |rels| {
                let names: Vec<String> = ["a", "bb", "x1"][..rank].iter().map(|s| s.to_string()).collect();
                Presentation::new(&names, rels).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_display(p in arb_presentation()) {
            let text = p.to_string();
            let q = Presentation::parse(&text).unwrap();
            prop_assert_eq!(p, q);
        }
    }
}
