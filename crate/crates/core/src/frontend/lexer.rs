use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(BigInt),
    /// Punctuation and operators, longest match first.
    Sym(&'static str),
    Eof,
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

const SYMBOLS: &[&str] = &[
    ":=", "->", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "+", "-", "*", "/", "(", ")", "{",
    "}", ";", ",", ":", "=", "<", ">", "&", "|", "'", "!",
];

/// Splits `text` into tokens. `#` and `//` start comments running to the end of the line.
pub(crate) fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let at = |tok| Token {
                tok,
                line: ln + 1,
                column,
            };
            if c.is_whitespace() {
                i += 1;
            } else if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
                break;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(at(Tok::Ident(chars[start..i].iter().collect())));
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(at(Tok::Int(digits.parse().expect("ascii digits"))));
            } else {
                let rest: String = chars[i..].iter().take(2).collect();
                match SYMBOLS.iter().find(|s| rest.starts_with(*s)) {
                    Some(s) => {
                        i += s.chars().count();
                        out.push(at(Tok::Sym(s)));
                    }
                    None => return Err(Error::parse(ln + 1, column, format!("unexpected character '{c}'"))),
                }
            }
        }
    }
    let line = text.lines().count().max(1);
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: text.lines().last().map_or(1, |l| l.chars().count() + 1),
    });
    Ok(out)
}

/// One cursor per nonblank line, each ending in its own end-of-input token.
pub(crate) fn lex_lines(text: &str) -> Result<Vec<Cursor>> {
    let mut lines: Vec<Vec<Token>> = Vec::new();
    for t in lex(text)? {
        if matches!(t.tok, Tok::Eof) {
            break;
        }
        match lines.last_mut() {
            Some(cur) if cur[0].line == t.line => cur.push(t),
            _ => lines.push(vec![t]),
        }
    }
    Ok(lines
        .into_iter()
        .map(|mut toks| {
            let last = toks.last().expect("nonempty line");
            let eof = Token {
                tok: Tok::Eof,
                line: last.line,
                column: last.column + 1,
            };
            toks.push(eof);
            Cursor::new(toks)
        })
        .collect())
}

/// A cursor over a token stream with positioned errors.
pub(crate) struct Cursor {
    toks: Vec<Token>,
    pos: usize,
}

impl Cursor {
    pub fn new(toks: Vec<Token>) -> Self {
        Cursor { toks, pos: 0 }
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    pub fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.column)
    }

    pub fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        Err(Error::parse(l, c, message))
    }

    pub fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(t) if *t == s)
    }

    pub fn is_keyword(&self, k: &str) -> bool {
        matches!(self.peek(), Tok::Ident(t) if t == k)
    }

    pub fn eat_sym(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn eat_keyword(&mut self, k: &str) -> bool {
        if self.is_keyword(k) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, s: &str) -> Result<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            self.error(format!("expected '{s}', found {}", describe(self.peek())))
        }
    }

    pub fn expect_keyword(&mut self, k: &str) -> Result<()> {
        if self.eat_keyword(k) {
            Ok(())
        } else {
            self.error(format!("expected '{k}', found {}", describe(self.peek())))
        }
    }

    pub fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            other => self.error(format!("expected an identifier, found {}", describe(&other))),
        }
    }

    pub fn mark(&self) -> usize {
        self.pos
    }

    pub fn reset(&mut self, mark: usize) {
        self.pos = mark;
    }

    pub fn at_eof(&self) -> bool {
        matches!(self.peek(), Tok::Eof)
    }

    pub fn expect_eof(&self) -> Result<()> {
        if self.at_eof() {
            Ok(())
        } else {
            self.error(format!("unexpected {}", describe(self.peek())))
        }
    }
}

pub(crate) fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Int(n) => format!("'{n}'"),
        Tok::Sym(s) => format!("'{s}'"),
        Tok::Eof => "end of input".into(),
    }
}
