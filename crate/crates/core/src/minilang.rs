//! Function mini-language for the CLI and experiment configs:
//! `e:n`, `g:n`, `dirichlet:N`, `fejer:n`, `rand:K:seed`, `file:PATH`,
//! `scale:c:(...)`, `sum:(...):(...)`, `mod:n:(...)`.

use crate::coeff_file::read_coefficients;
use crate::error::{CoreError, Result};
use crate::kernels::KernelSpec;
use crate::poly::TrigPoly;
use num_complex::Complex64;
use std::path::Path;

#[derive(Clone, Debug, PartialEq)]
pub enum FnSpec {
    Kernel(KernelSpec),
    File(String),
    Scale(f64, Box<FnSpec>),
    Sum(Box<FnSpec>, Box<FnSpec>),
    Modulate(i64, Box<FnSpec>),
}

impl FnSpec {
    pub fn parse(s: &str) -> Result<FnSpec> {
        let mut cur = Cursor { s, pos: 0 };
        let spec = parse_expr(&mut cur)?;
        cur.skip_ws();
        if cur.pos != s.len() {
            return Err(CoreError::Parse(format!(
                "trailing input at byte {} in fn-spec {s:?}",
                cur.pos
            )));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<TrigPoly> {
        match self {
            FnSpec::Kernel(k) => k.build(),
            FnSpec::File(path) => read_coefficients(Path::new(path)),
            FnSpec::Scale(c, inner) => Ok(inner.build()?.scale(Complex64::new(*c, 0.0))),
            FnSpec::Sum(a, b) => Ok(a.build()?.add(&b.build()?)),
            FnSpec::Modulate(n, inner) => Ok(inner.build()?.modulate(*n)),
        }
    }

    pub fn descriptor(&self) -> String {
        match self {
            FnSpec::Kernel(KernelSpec::Dirichlet { order }) => format!("dirichlet:{order}"),
            FnSpec::Kernel(KernelSpec::Fejer { order }) => format!("fejer:{order}"),
            FnSpec::Kernel(KernelSpec::SalemG { order }) => format!("g:{order}"),
            FnSpec::Kernel(KernelSpec::Exponential { order }) => format!("e:{order}"),
            FnSpec::Kernel(KernelSpec::Random { degree, seed }) => format!("rand:{degree}:{seed}"),
            FnSpec::File(p) => format!("file:{p}"),
            FnSpec::Scale(c, inner) => format!("scale:{c}:({})", inner.descriptor()),
            FnSpec::Sum(a, b) => format!("sum:({}):({})", a.descriptor(), b.descriptor()),
            FnSpec::Modulate(n, inner) => format!("mod:{n}:({})", inner.descriptor()),
        }
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(' ') {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(CoreError::Parse(format!(
                "expected {c:?} at byte {} in fn-spec {:?}",
                self.pos, self.s
            )))
        }
    }

    /// Consume until one of the stop characters (not consumed) or end.
    fn take_until(&mut self, stops: &[char]) -> &'a str {
        let rest = self.rest();
        let end = rest
            .char_indices()
            .find(|(_, c)| stops.contains(c))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        self.pos += end;
        rest[..end].trim()
    }
}

fn parse_num<T: std::str::FromStr>(tok: &str, what: &str, full: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| CoreError::Parse(format!("bad {what} {tok:?} in fn-spec {full:?}")))
}

fn parse_paren_expr(cur: &mut Cursor) -> Result<FnSpec> {
    cur.expect('(')?;
    let inner = parse_expr(cur)?;
    cur.expect(')')?;
    Ok(inner)
}

fn parse_expr(cur: &mut Cursor) -> Result<FnSpec> {
    cur.skip_ws();
    let full = cur.s;
    let head = cur.take_until(&[':', ')']);
    match head {
        "e" | "g" | "dirichlet" | "fejer" => {
            cur.expect(':')?;
            let arg = cur.take_until(&[')']);
            Ok(FnSpec::Kernel(match head {
                "e" => KernelSpec::Exponential {
                    order: parse_num(arg, "order", full)?,
                },
                "g" => KernelSpec::SalemG {
                    order: parse_num(arg, "order", full)?,
                },
                "dirichlet" => KernelSpec::Dirichlet {
                    order: parse_num(arg, "order", full)?,
                },
                _ => KernelSpec::Fejer {
                    order: parse_num(arg, "order", full)?,
                },
            }))
        }
        "rand" => {
            cur.expect(':')?;
            let k = cur.take_until(&[':']);
            let degree = parse_num(k, "degree", full)?;
            cur.expect(':')?;
            let seed = parse_num(cur.take_until(&[')']), "seed", full)?;
            Ok(FnSpec::Kernel(KernelSpec::Random { degree, seed }))
        }
        "file" => {
            cur.expect(':')?;
            let path = cur.take_until(&[')']);
            if path.is_empty() {
                return Err(CoreError::Parse(format!("empty path in fn-spec {full:?}")));
            }
            Ok(FnSpec::File(path.to_string()))
        }
        "scale" => {
            cur.expect(':')?;
            let c = parse_num(cur.take_until(&[':']), "scale factor", full)?;
            cur.expect(':')?;
            Ok(FnSpec::Scale(c, Box::new(parse_paren_expr(cur)?)))
        }
        "mod" => {
            cur.expect(':')?;
            let n = parse_num(cur.take_until(&[':']), "modulation index", full)?;
            cur.expect(':')?;
            Ok(FnSpec::Modulate(n, Box::new(parse_paren_expr(cur)?)))
        }
        "sum" => {
            cur.expect(':')?;
            let a = parse_paren_expr(cur)?;
            cur.expect(':')?;
            let b = parse_paren_expr(cur)?;
            Ok(FnSpec::Sum(Box::new(a), Box::new(b)))
        }
        other => Err(CoreError::Parse(format!(
            "unknown function {other:?} in fn-spec {full:?}"
        ))),
    }
}
