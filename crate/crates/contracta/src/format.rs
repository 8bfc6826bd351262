//! Text format for quivers with relations.
//!
//! ```text
//! algebra cusp {
//!   vertices: v;
//!   arrows: x: v->v, y: v->v;
//!   relations: x*y + y*x; x^2 - y^3;
//! }
//! ```
//!
//! Words are read left to right as paths. `^k` repeats the identifier in
//! front of it, a relation may be written `lhs = rhs`, and `#` starts a line
//! comment.

use std::fmt::Write as _;
use std::sync::Arc;

use contracta_core::quiverpres::Diagnostic;
use contracta_core::{Alphabet, NcPoly, Presentation, Quiver, Rational, Word};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: undeclared {kind} `{name}`")]
    Undeclared {
        line: usize,
        column: usize,
        kind: &'static str,
        name: String,
    },
    #[error("{line}:{column}: {diagnostic}")]
    Invalid {
        line: usize,
        column: usize,
        diagnostic: Diagnostic,
    },
    #[error(transparent)]
    Core(#[from] contracta_core::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Punct(&'static str),
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Punct(p) => format!("`{p}`"),
        Tok::Eof => "end of input".into(),
    }
}

fn lex(src: &str) -> Result<Vec<Token>, FormatError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - start;
            let digits: String = chars[start..i].iter().collect();
            Tok::Int(digits.parse().expect("ascii digits"))
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            i += 2;
            col += 2;
            Tok::Punct("->")
        } else {
            let p = match c {
                '{' => "{",
                '}' => "}",
                ':' => ":",
                ';' => ";",
                ',' => ",",
                '+' => "+",
                '-' => "-",
                '*' => "*",
                '/' => "/",
                '^' => "^",
                '=' => "=",
                _ => {
                    return Err(FormatError::Syntax {
                        line: l0,
                        column: c0,
                        message: format!("unexpected character `{c}`"),
                    })
                }
            };
            i += 1;
            col += 1;
            Tok::Punct(p)
        };
        out.push(Token {
            tok,
            line: l0,
            column: c0,
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

/// A parsed term before names are resolved: coefficient and identifiers
/// with their positions.
struct RawTerm {
    coeff: Rational,
    word: Vec<(String, usize, usize)>,
}

struct RawRelation {
    line: usize,
    column: usize,
    terms: Vec<RawTerm>,
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, t: &Token, expected: &str) -> Result<T, FormatError> {
        Err(FormatError::Syntax {
            line: t.line,
            column: t.column,
            message: format!("expected {expected}, found {}", describe(&t.tok)),
        })
    }

    fn is_punct(&self, p: &str) -> bool {
        matches!(&self.peek().tok, Tok::Punct(q) if *q == p)
    }

    fn punct(&mut self, p: &str) -> Result<Token, FormatError> {
        let t = self.next();
        match &t.tok {
            Tok::Punct(q) if *q == p => Ok(t),
            _ => self.error(&t, &format!("`{p}`")),
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize), FormatError> {
        let t = self.next();
        match t.tok {
            Tok::Ident(s) => Ok((s, t.line, t.column)),
            _ => self.error(&t, "an identifier"),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), FormatError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == kw => Ok(()),
            _ => self.error(&t, &format!("`{kw}`")),
        }
    }

    fn int(&mut self) -> Result<BigInt, FormatError> {
        let t = self.next();
        match t.tok {
            Tok::Int(n) => Ok(n),
            _ => self.error(&t, "an integer"),
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    /// `ID ("," ID)*`, possibly empty, up to `;`.
    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T, FormatError>) -> Result<Vec<T>, FormatError> {
        let mut out = Vec::new();
        if self.is_punct(";") {
            self.next();
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            let t = self.next();
            match &t.tok {
                Tok::Punct(",") => continue,
                Tok::Punct(";") => return Ok(out),
                _ => return self.error(&t, "`,` or `;`"),
            }
        }
    }

    fn term(&mut self, negate: bool) -> Result<RawTerm, FormatError> {
        let mut coeff = Rational::one();
        let mut word = Vec::new();
        if let Tok::Int(_) = self.peek().tok {
            let num = self.int()?;
            let den = if self.is_punct("/") {
                self.next();
                let at = self.peek().clone();
                let d = self.int()?;
                if d.is_zero() {
                    return Err(FormatError::Syntax {
                        line: at.line,
                        column: at.column,
                        message: "zero denominator".into(),
                    });
                }
                d
            } else {
                BigInt::one()
            };
            coeff = Rational::new(num, den);
            if !self.is_punct("*") {
                return Ok(RawTerm {
                    coeff: if negate { -coeff } else { coeff },
                    word,
                });
            }
            self.next();
        }
        loop {
            let (name, line, column) = self.ident()?;
            let mut times = 1usize;
            if self.is_punct("^") {
                self.next();
                let at = self.peek().clone();
                let k = self.int()?;
                times = usize::try_from(&k).ok().filter(|&k| k > 0).ok_or_else(|| FormatError::Syntax {
                    line: at.line,
                    column: at.column,
                    message: "exponent must be a positive integer".into(),
                })?;
            }
            for _ in 0..times {
                word.push((name.clone(), line, column));
            }
            if !self.is_punct("*") {
                break;
            }
            self.next();
        }
        Ok(RawTerm {
            coeff: if negate { -coeff } else { coeff },
            word,
        })
    }

    /// `["-"] TERM (("+"|"-") TERM)*`
    fn poly(&mut self, flip: bool, out: &mut Vec<RawTerm>) -> Result<(), FormatError> {
        let mut negate = false;
        if self.is_punct("-") {
            self.next();
            negate = true;
        }
        out.push(self.term(negate ^ flip)?);
        loop {
            if self.is_punct("+") {
                negate = false;
            } else if self.is_punct("-") {
                negate = true;
            } else {
                return Ok(());
            }
            self.next();
            out.push(self.term(negate ^ flip)?);
        }
    }

    fn relation(&mut self) -> Result<RawRelation, FormatError> {
        let start = self.peek().clone();
        let mut terms = Vec::new();
        self.poly(false, &mut terms)?;
        if self.is_punct("=") {
            self.next();
            self.poly(true, &mut terms)?;
        }
        Ok(RawRelation {
            line: start.line,
            column: start.column,
            terms,
        })
    }
}

/// Parses one `algebra` block and validates it.
pub fn parse_presentation(source: &str) -> Result<Presentation, FormatError> {
    let mut p = Parser {
        toks: lex(source)?,
        pos: 0,
    };
    p.keyword("algebra")?;
    let (name, _, _) = p.ident()?;
    p.punct("{")?;

    let mut vertices = Vec::new();
    if p.at_keyword("vertices") {
        p.next();
        p.punct(":")?;
        vertices = p.list(|p| p.ident())?;
    }
    let mut arrows = Vec::new();
    if p.at_keyword("arrows") {
        p.next();
        p.punct(":")?;
        arrows = p.list(|p| {
            let name = p.ident()?;
            p.punct(":")?;
            let src = p.ident()?;
            p.punct("->")?;
            let tgt = p.ident()?;
            Ok((name, src, tgt))
        })?;
    }
    let mut relations = Vec::new();
    if p.at_keyword("relations") {
        p.next();
        p.punct(":")?;
        while !p.is_punct("}") {
            relations.push(p.relation()?);
            let t = p.next();
            match &t.tok {
                Tok::Punct(";") => {}
                _ => return p.error(&t, "`;`"),
            }
        }
    }
    p.punct("}")?;
    let t = p.next();
    if t.tok != Tok::Eof {
        return p.error(&t, "end of input");
    }

    let declared: Vec<&str> = vertices.iter().map(|(v, _, _)| v.as_str()).collect();
    for (_, src, tgt) in &arrows {
        for (v, line, column) in [src, tgt] {
            if !declared.contains(&v.as_str()) {
                return Err(FormatError::Undeclared {
                    line: *line,
                    column: *column,
                    kind: "vertex",
                    name: v.clone(),
                });
            }
        }
    }
    for (i, (v, line, column)) in vertices.iter().enumerate() {
        if declared[..i].contains(&v.as_str()) {
            return Err(FormatError::Syntax {
                line: *line,
                column: *column,
                message: format!("vertex `{v}` declared twice"),
            });
        }
    }
    let triples: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(a, s, t)| (a.0.as_str(), s.0.as_str(), t.0.as_str()))
        .collect();
    let quiver = Quiver::new(declared.iter().copied(), &triples)?;
    let alphabet = Alphabet::new(arrows.iter().map(|(a, _, _)| a.0.clone()))?;

    let mut polys = Vec::with_capacity(relations.len());
    for r in &relations {
        let mut terms = Vec::with_capacity(r.terms.len());
        for t in &r.terms {
            let mut letters = Vec::with_capacity(t.word.len());
            for (name, line, column) in &t.word {
                let idx = alphabet.index_of(name).ok_or_else(|| FormatError::Undeclared {
                    line: *line,
                    column: *column,
                    kind: "arrow",
                    name: name.clone(),
                })?;
                letters.push(idx);
            }
            terms.push((Word::new(letters), t.coeff.clone()));
        }
        polys.push(NcPoly::from_terms(&alphabet, terms));
    }
    let pres = Presentation::new(name, quiver, polys)?;
    if let Err(diags) = pres.validate() {
        let d = diags.0.into_iter().next().expect("nonempty diagnostics");
        let rel = match &d {
            Diagnostic::NonComposable { relation, .. }
            | Diagnostic::MixedEndpoints { relation }
            | Diagnostic::ShortTerm { relation, .. }
            | Diagnostic::ZeroRelation { relation }
            | Diagnostic::ForeignAlphabet { relation } => *relation,
        };
        return Err(FormatError::Invalid {
            line: relations[rel].line,
            column: relations[rel].column,
            diagnostic: d,
        });
    }
    Ok(pres)
}

fn identifier(name: &str) -> String {
    let mut s: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '_' })
        .collect();
    if !s.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
        s.insert(0, '_');
    }
    s
}

/// Prints in the format read by [`parse_presentation`]. Names that are not
/// identifiers have their offending characters replaced by `_`.
pub fn print_presentation(p: &Presentation) -> String {
    let q = p.quiver();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {} {{", identifier(p.name()));
    let _ = writeln!(out, "  vertices: {};", q.vertices().join(", "));
    let arrows: Vec<String> = q
        .arrows()
        .iter()
        .map(|a| format!("{}: {}->{}", a.name, q.vertices()[a.source], q.vertices()[a.target]))
        .collect();
    let _ = writeln!(out, "  arrows: {};", arrows.join(", "));
    out.push_str("  relations:\n");
    for r in p.relations() {
        let _ = writeln!(out, "    {r};");
    }
    out.push_str("}\n");
    out
}

/// Polynomial over the given names, for command-line assignments such as
/// `1/2*e + e^2`.
pub fn parse_poly(source: &str, alphabet: &Arc<Alphabet>) -> Result<NcPoly, FormatError> {
    let mut p = Parser {
        toks: lex(source)?,
        pos: 0,
    };
    let mut terms = Vec::new();
    p.poly(false, &mut terms)?;
    let t = p.next();
    if t.tok != Tok::Eof {
        return p.error(&t, "end of expression");
    }
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let mut letters = Vec::new();
        for (name, line, column) in t.word {
            letters.push(alphabet.index_of(&name).ok_or(FormatError::Undeclared {
                line,
                column,
                kind: "generator",
                name,
            })?);
        }
        out.push((Word::new(letters), t.coeff));
    }
    Ok(NcPoly::from_terms(alphabet, out))
}
