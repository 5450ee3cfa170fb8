//! Text grammar for elements, generator lists, matrices and ideal files.
//!
//! Terms are joined by `+`/`-`; products use `*` or juxtaposition; `/` divides
//! by a nonzero constant. In polynomial rings `^n` is a power, in exterior
//! algebras `^` is the wedge product. Identifiers resolve to ring variables,
//! then to field symbols such as `t`.

use thiserror::Error;

use crate::field::Field;
use crate::ring::{Element, Ring, RingError, RingKind, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown variable `{name}`")]
    UnknownVariable { line: usize, col: usize, name: String },
    #[error("line {line}: `{text}` is not homogeneous")]
    Inhomogeneous { line: usize, text: String },
    #[error("missing ring spec line")]
    MissingRing,
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer;

impl Lexer {
    fn tokenize(text: &str, line: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
        let chars: Vec<char> = text.chars().collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let single = match c {
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                '/' => Some(Tok::Slash),
                '^' => Some(Tok::Caret),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                _ => None,
            };
            if let Some(t) = single {
                out.push((t, col));
                i += 1;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(chars[start..i].iter().collect()), col));
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            } else {
                return Err(ParseError::Syntax {
                    line,
                    col,
                    msg: format!("unexpected character `{c}`"),
                });
            }
        }
        Ok(out)
    }
}

struct Parser<'a, F: Field> {
    ring: &'a Ring<F>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            col: self.col(),
            msg: msg.into(),
        }
    }

    fn expr(&mut self) -> Result<Element<F>, ParseError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element<F>, ParseError> {
        let mut acc = self.factor()?;
        let exterior = self.ring.kind() == RingKind::Exterior;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Caret) if exterior => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let col = self.col();
                    let d = self.factor()?;
                    let k = self.ring.field();
                    let c = match d.degree() {
                        Some(0) => d.coefficient(&crate::ring::Monomial::one()),
                        _ => {
                            return Err(ParseError::Syntax {
                                line: self.line,
                                col,
                                msg: "division only by nonzero constants".into(),
                            })
                        }
                    };
                    let inv = k.inv(&c).map_err(|e| ParseError::Syntax {
                        line: self.line,
                        col,
                        msg: e.to_string(),
                    })?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Element<F>, ParseError> {
        let base = self.atom()?;
        if self.ring.kind() == RingKind::Polynomial && self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    let e: usize = n.parse().map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Element<F>, ParseError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let c = self
                    .ring
                    .field()
                    .parse_literal(&n)
                    .map_err(|e| ParseError::Syntax {
                        line: self.line,
                        col,
                        msg: e.to_string(),
                    })?;
                Ok(Element::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.ring.variable_index(&name) {
                    Ok(self.ring.var(i))
                } else if let Some(c) = self.ring.field().symbol(&name) {
                    Ok(Element::constant(self.ring, c))
                } else {
                    Err(ParseError::UnknownVariable {
                        line: self.line,
                        col,
                        name,
                    })
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn parse_on_line<F: Field>(ring: &Ring<F>, text: &str, line: usize) -> Result<Element<F>, ParseError> {
    let toks = Lexer::tokenize(text, line)?;
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        line,
        end_col: text.chars().count() + 1,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parses one element.
pub fn parse_element<F: Field>(ring: &Ring<F>, text: &str) -> Result<Element<F>, ParseError> {
    parse_on_line(ring, text, 1)
}

fn homogeneous_on_line<F: Field>(ring: &Ring<F>, text: &str, line: usize) -> Result<Element<F>, ParseError> {
    let e = parse_on_line(ring, text, line)?;
    if !e.is_homogeneous() {
        return Err(ParseError::Inhomogeneous {
            line,
            text: text.trim().to_string(),
        });
    }
    Ok(e)
}

/// Parses a homogeneous element.
pub fn parse_homogeneous<F: Field>(ring: &Ring<F>, text: &str) -> Result<Element<F>, ParseError> {
    homogeneous_on_line(ring, text, 1)
}

/// Parses `;`-separated homogeneous generators; zero entries are dropped.
pub fn parse_generators<F: Field>(ring: &Ring<F>, text: &str) -> Result<Vec<Element<F>>, ParseError> {
    let mut out = Vec::new();
    for part in text.split(';').filter(|s| !s.trim().is_empty()) {
        let e = parse_homogeneous(ring, part)?;
        if !e.is_zero() {
            out.push(e);
        }
    }
    Ok(out)
}

/// Parses a matrix written as rows separated by `;`, entries by `,`.
pub fn parse_matrix<F: Field>(ring: &Ring<F>, text: &str) -> Result<Vec<Vec<Element<F>>>, ParseError> {
    let rows: Vec<Vec<Element<F>>> = text
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .enumerate()
        .map(|(i, row)| {
            row.split(',')
                .map(|entry| homogeneous_on_line(ring, entry, i + 1))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    if let Some(first) = rows.first() {
        if rows.iter().any(|r| r.len() != first.len()) {
            return Err(ParseError::Syntax {
                line: 1,
                col: 1,
                msg: "matrix rows have different lengths".into(),
            });
        }
    }
    Ok(rows)
}

/// An ideal file: a ring spec line followed by one generator per line.
/// `#` starts a comment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub ring: RingSpec,
    lines: Vec<(usize, String)>,
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut ring = None;
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            if ring.is_none() {
                ring = Some(body.parse::<RingSpec>()?);
            } else {
                lines.push((i + 1, body.to_string()));
            }
        }
        Ok(Self {
            ring: ring.ok_or(ParseError::MissingRing)?,
            lines,
        })
    }

    pub fn generator_texts(&self) -> impl Iterator<Item = &str> {
        self.lines.iter().map(|(_, s)| s.as_str())
    }

    /// Generators over a ring built from [`IdealFile::ring`]; errors carry
    /// file line numbers.
    pub fn generators<F: Field>(&self, ring: &Ring<F>) -> Result<Vec<Element<F>>, ParseError> {
        let mut out = Vec::new();
        for (line, text) in &self.lines {
            let e = homogeneous_on_line(ring, text, *line)?;
            if !e.is_zero() {
                out.push(e);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, RationalFunctions};

    #[test]
    fn polynomial_expressions() {
        let r = Ring::polynomial(3, Rationals).unwrap();
        let f = parse_element(&r, "x^2 - 2*x*y + y^2").unwrap();
        let xmy = parse_element(&r, "(x - y)").unwrap();
        assert_eq!(f, xmy.pow(2));
        assert_eq!(parse_element(&r, "3x*y/2").unwrap().to_string(), "3/2*x*y");
        assert_eq!(parse_element(&r, "-x+x").unwrap(), r.zero());
    }

    #[test]
    fn exterior_expressions() {
        let r = Ring::exterior(5, PrimeField::new(3).unwrap()).unwrap();
        let q = parse_homogeneous(&r, "e1^e2 + e3^e4").unwrap();
        assert_eq!(q.degree(), Some(2));
        assert_eq!(parse_element(&r, "e2^e1").unwrap().to_string(), "2*e1^e2");
        assert_eq!(q.to_string(), "e1^e2 + e3^e4");
    }

    #[test]
    fn parameter_symbol() {
        let k = RationalFunctions::new(Rationals);
        let r = Ring::polynomial(3, k).unwrap();
        let f = parse_element(&r, "x*y + t*y*(y + 2*z)").unwrap();
        assert_eq!(f.num_terms(), 3);
        assert!(parse_element(&Ring::polynomial(3, Rationals).unwrap(), "t*x").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let r = Ring::polynomial(3, Rationals).unwrap();
        assert_eq!(
            parse_element(&r, "x + q"),
            Err(ParseError::UnknownVariable {
                line: 1,
                col: 5,
                name: "q".into()
            })
        );
        assert!(matches!(
            parse_homogeneous(&r, "x + y^2"),
            Err(ParseError::Inhomogeneous { .. })
        ));
        assert!(matches!(parse_element(&r, "x + "), Err(ParseError::Syntax { col: 5, .. })));
        assert!(matches!(parse_element(&r, "x / y"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_element(&r, "x $ y"), Err(ParseError::Syntax { col: 3, .. })));
    }

    #[test]
    fn ideal_files() {
        let text = "# lex ideal\nS:3@QQ\nx^2\nx*y  # comment\n\nx*z^2\ny^4\ny^3*z\n";
        let file = IdealFile::parse(text).unwrap();
        let r = file.ring.build(Rationals).unwrap();
        let gens = file.generators(&r).unwrap();
        assert_eq!(gens.len(), 5);
        let bad = IdealFile::parse("S:3@QQ\nx\nx+y^2\n").unwrap();
        assert_eq!(
            bad.generators(&r),
            Err(ParseError::Inhomogeneous {
                line: 3,
                text: "x+y^2".into()
            })
        );
    }

    #[test]
    fn matrices() {
        let r = Ring::polynomial(3, Rationals).unwrap();
        let m = parse_matrix(&r, "x, y, y+z; 0, x, y").unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m[0].len(), 3);
        assert!(m[1][0].is_zero());
    }
}
