//! Ordinal expressions for `ordinal-eval`.
//!
//! ```text
//! expr    := term (('⊕' | '(+)') term)*
//! term    := factor (('⊗' | '(x)') factor)*
//! factor  := primary ('**' nat)?
//! primary := 'ot[' expr ']' | '[' expr ']' | normal form
//! ```
//!
//! Normal forms use the ordinal text grammar (`w^(w + 1)*2 + 3`). `ot[a]`
//! is the order type of the strictly decreasing sequences in `a`.

use monord::{CnfOrdinal, Error};

pub fn eval(src: &str) -> Result<CnfOrdinal, Error> {
    let chars: Vec<char> = src.chars().collect();
    let mut p = Parser { chars, pos: 0 };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        let t: Vec<char> = token.chars().collect();
        if self.chars[self.pos..].starts_with(&t) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<CnfOrdinal, Error> {
        let mut acc = self.term()?;
        while self.eat("⊕") || self.eat("(+)") {
            acc = acc.nat_sum(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<CnfOrdinal, Error> {
        let mut acc = self.factor()?;
        while self.eat("⊗") || self.eat("(x)") {
            acc = acc.nat_prod(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<CnfOrdinal, Error> {
        let base = self.primary()?;
        if self.eat("**") {
            self.skip_ws();
            let start = self.pos;
            while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let n: u32 = digits
                .parse()
                .map_err(|_| self.error("expected a natural exponent after **"))?;
            return Ok(base.nat_pow(n));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<CnfOrdinal, Error> {
        if self.eat("ot[") {
            let inner = self.expr()?;
            return self.close(inner.ot_decreasing_sequences());
        }
        if self.eat("[") {
            let inner = self.expr()?;
            return self.close(inner);
        }
        self.literal()
    }

    fn close(&mut self, value: CnfOrdinal) -> Result<CnfOrdinal, Error> {
        if self.eat("]") {
            Ok(value)
        } else {
            Err(self.error("expected ']'"))
        }
    }

    /// A normal form runs until a top-level operator, `]` or `**`.
    fn literal(&mut self) -> Result<CnfOrdinal, Error> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(&c) = self.chars.get(self.pos) {
            let rest = &self.chars[self.pos..];
            if depth == 0
                && (c == '⊕'
                    || c == '⊗'
                    || c == ']'
                    || rest.starts_with(&['*', '*'])
                    || rest.starts_with(&['(', '+', ')'])
                    || rest.starts_with(&['(', 'x', ')']))
            {
                break;
            }
            match c {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                _ => {}
            }
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        if text.trim().is_empty() {
            return Err(self.error("expected an ordinal"));
        }
        text.trim_end().parse::<CnfOrdinal>().map_err(|e| match e {
            Error::Parse {
                column, message, ..
            } => Error::Parse {
                line: 1,
                column: start + column,
                message,
            },
            other => other,
        })
    }
}
