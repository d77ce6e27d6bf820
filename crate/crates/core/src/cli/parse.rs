use std::fmt::Write;

use thiserror::Error;

use crate::braid::BraidWord;
use crate::diagram::{DiagramError, PDCode};

/// Positions are 1-based: token number for braid words, line number for PD text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty token at position {position}")]
    EmptyToken { position: usize },
    #[error("letter 0 at position {position} is not a generator")]
    ZeroLetter { position: usize },
    #[error("letter {letter} at position {position} needs more than {strands} strands")]
    LetterOutOfRange { letter: String, position: usize, strands: usize },
    #[error("token {token:?} at position {position} is not an integer")]
    NotInteger { token: String, position: usize },
    #[error("a braid needs at least one strand")]
    ZeroStrands,
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Parses whitespace-separated nonzero integers. Commas may also separate
/// letters, so `1,,2` is an empty token rather than silently `1 2`. Without
/// `strands` the word lives on `max |letter| + 1` strands.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord, ParseError> {
    let mut letters = Vec::new();
    let mut raw = Vec::new();
    let mut position = 0;
    for chunk in text.split_whitespace() {
        for token in chunk.split(',') {
            position += 1;
            if token.is_empty() {
                return Err(ParseError::EmptyToken { position });
            }
            let is_integer = {
                let digits = token.strip_prefix(['+', '-']).unwrap_or(token);
                !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
            };
            if !is_integer {
                return Err(ParseError::NotInteger { token: token.to_string(), position });
            }
            match token.parse::<i32>() {
                Ok(0) => return Err(ParseError::ZeroLetter { position }),
                Ok(g) => {
                    letters.push(g);
                    raw.push(position);
                }
                Err(_) => {
                    return Err(ParseError::LetterOutOfRange {
                        letter: token.to_string(),
                        position,
                        strands: strands.unwrap_or(usize::MAX),
                    })
                }
            }
        }
    }
    let n = match strands {
        Some(0) => return Err(ParseError::ZeroStrands),
        Some(n) => n,
        None => letters.iter().map(|g| g.unsigned_abs() as usize).max().unwrap_or(0) + 1,
    };
    for (&g, &position) in letters.iter().zip(&raw) {
        if g.unsigned_abs() as usize >= n {
            return Err(ParseError::LetterOutOfRange { letter: g.to_string(), position, strands: n });
        }
    }
    Ok(BraidWord::new(n, letters).expect("letters already validated"))
}

/// The letters of `b`, space separated. Strand count is not part of the text.
pub fn serialize_braid(b: &BraidWord) -> String {
    b.to_string()
}

/// Parses `X a b c d` crossing lines and an optional `O m` line of free
/// circles. Everything after `#` on a line is ignored.
pub fn parse_pd(text: &str) -> Result<PDCode, ParseError> {
    let mut crossings = Vec::new();
    let mut circles: Option<usize> = None;
    for (index, full) in text.lines().enumerate() {
        let line = index + 1;
        let content = full.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        let malformed = |reason: String| ParseError::MalformedLine { line, reason };
        match fields.as_slice() {
            [] => {}
            ["X", rest @ ..] => {
                if rest.len() != 4 {
                    return Err(malformed(format!("expected 4 arc ids after X, found {}", rest.len())));
                }
                let mut arcs = [0usize; 4];
                for (slot, field) in arcs.iter_mut().zip(rest) {
                    *slot = match field.parse::<usize>() {
                        Ok(0) | Err(_) => {
                            return Err(malformed(format!("arc id {field:?} is not a positive integer")))
                        }
                        Ok(a) => a,
                    };
                }
                crossings.push(arcs);
            }
            ["O", m] => {
                if circles.is_some() {
                    return Err(malformed("more than one O line".to_string()));
                }
                let m = m
                    .parse::<usize>()
                    .map_err(|_| malformed(format!("circle count {m:?} is not a nonnegative integer")))?;
                circles = Some(m);
            }
            ["O", ..] => return Err(malformed("expected exactly one count after O".to_string())),
            [head, ..] => return Err(malformed(format!("unknown line type {head:?}"))),
        }
    }
    Ok(PDCode::new(crossings, circles.unwrap_or(0))?)
}

/// Text that [`parse_pd`] reads back to the same diagram.
pub fn serialize_pd(pd: &PDCode) -> String {
    let mut out = String::new();
    for [a, b, c, d] in pd.crossings() {
        writeln!(out, "X {a} {b} {c} {d}").unwrap();
    }
    if pd.free_circles() > 0 {
        writeln!(out, "O {}", pd.free_circles()).unwrap();
    }
    out
}
