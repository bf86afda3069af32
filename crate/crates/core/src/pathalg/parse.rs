//! Line-oriented reader for algebra files.
//!
//! ```text
//! file     := { line NEWLINE }
//! line     := "field" ("Q" | "GF" INT)
//!           | "vertices" LABEL { LABEL }
//!           | "arrow" NAME ":" LABEL "->" LABEL
//!           | "relation" ["-"] term { ("+" | "-") term }
//!           | "module" NAME "=" expr
//!           | "module" NAME "{" { item (";" | NEWLINE) } "}"
//! term     := [coeff "*"] NAME { "*" NAME }
//! coeff    := INT ["/" INT]
//! expr     := atom { "+" atom }
//! atom     := ("S" | "P" | "I") "(" LABEL ")" | "A" | "DA" | NAME
//! item     := "dim" INT { INT } | "map" NAME "=" matrix
//! matrix   := "[" [ row { "," row } ] "]"
//! row      := "[" [ entry { "," entry } ] "]"
//! entry    := ["-"] INT ["/" INT]
//! ```
//! `#` starts a comment that runs to the end of the line. Newlines inside
//! braces and brackets are insignificant.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{Algebra, Arrow, Quiver, Relation, DEFAULT_PATH_CAP};
use crate::error::{Error, Result};
use crate::exactlin::{Elem, FieldSpec, Mat};

/// A parsed file: the algebra and its module declarations in order.
#[derive(Debug)]
pub struct AlgebraFile {
    pub algebra: Arc<Algebra>,
    pub modules: Vec<ModuleDecl>,
}

impl AlgebraFile {
    pub fn module(&self, name: &str) -> Option<&ModuleDecl> {
        self.modules.iter().find(|m| m.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecl {
    pub name: String,
    pub body: ModuleBody,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleBody {
    Expr(Vec<ModuleExpr>),
    /// Vertex dimensions and the explicitly given arrow matrices.
    Explicit { dims: Vec<usize>, maps: Vec<(usize, Mat)> },
}

/// One summand of a module expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExpr {
    Simple(usize),
    Projective(usize),
    Injective(usize),
    Regular,
    Dual,
    Named(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Sym(&'static str),
    Newline,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

const SYMBOLS: [&str; 13] = ["->", ":", "+", "-", "*", "/", "=", "(", ")", "{", "}", "[", "]"];

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut depth = 0i64;
    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let content = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = content.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_alphanumeric() || c == '_' || c == '\'' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                out.push(Token { tok: Tok::Word(chars[start..i].iter().collect()), line, col });
                continue;
            }
            if c == ';' || c == ',' {
                let sym = if c == ';' { ";" } else { "," };
                out.push(Token { tok: Tok::Sym(sym), line, col });
                i += 1;
                continue;
            }
            let rest: String = chars[i..].iter().take(2).collect();
            let Some(sym) = SYMBOLS.iter().find(|s| rest.starts_with(**s)) else {
                return Err(Error::Syntax { line, col, msg: format!("unexpected character {c:?}") });
            };
            match *sym {
                "{" | "[" | "(" => depth += 1,
                "}" | "]" | ")" => depth -= 1,
                _ => {}
            }
            out.push(Token { tok: Tok::Sym(sym), line, col });
            i += sym.len();
        }
        if depth <= 0 {
            depth = 0;
            out.push(Token { tok: Tok::Newline, line, col: chars.len() + 1 });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |t| (t.line, t.col))
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.here();
        Err(Error::Syntax { line, col, msg: msg.into() })
    }

    fn word(&mut self, what: &str) -> Result<String> {
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.pos += 1;
                Ok(w)
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    fn sym(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            self.err(format!("expected '{s}'"))
        }
    }

    fn eat(&mut self, s: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(x)) if *x == s) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn end_of_line(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(Tok::Newline) => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err("expected end of line"),
        }
    }

    fn int(&mut self, what: &str) -> Result<BigInt> {
        let (line, col) = self.here();
        let w = self.word(what)?;
        w.parse::<BigInt>()
            .map_err(|_| Error::Syntax { line, col, msg: format!("expected {what}, found {w}") })
    }

    fn usize(&mut self, what: &str) -> Result<usize> {
        let (line, col) = self.here();
        let w = self.word(what)?;
        w.parse::<usize>()
            .map_err(|_| Error::Syntax { line, col, msg: format!("expected {what}, found {w}") })
    }

    fn scalar(&mut self, field: FieldSpec, allow_sign: bool) -> Result<Elem> {
        let (line, col) = self.here();
        let neg = allow_sign && self.eat("-");
        let num = self.int("number")?;
        let den = if self.eat("/") { self.int("denominator")? } else { BigInt::from(1) };
        let v = field.from_ratio(&num, &den).map_err(|e| Error::Syntax { line, col, msg: e.to_string() })?;
        Ok(if neg { field.neg(&v) } else { v })
    }
}

fn is_number(w: &str) -> bool {
    !w.is_empty() && w.chars().all(|c| c.is_ascii_digit())
}

/// Parse with the default path-length cap.
pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    parse_algebra_with_cap(text, DEFAULT_PATH_CAP)
}

pub fn parse_algebra_with_cap(text: &str, path_cap: usize) -> Result<AlgebraFile> {
    let toks = tokenize(text)?;
    let end = (text.lines().count().max(1), 1);
    let mut p = Parser { toks, pos: 0, end };
    let mut field: Option<FieldSpec> = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    // relation terms kept as arrow names until the quiver is complete
    let mut relations: Vec<(usize, usize, Vec<(Elem, Vec<String>)>)> = Vec::new();
    let mut modules: Vec<ModuleDecl> = Vec::new();
    let mut raw_maps: Vec<Vec<(String, usize, usize, Mat)>> = Vec::new();

    while let Some(t) = p.peek().cloned() {
        let (line, col) = p.here();
        let kw = match t {
            Tok::Newline => {
                p.pos += 1;
                continue;
            }
            Tok::Word(w) => w,
            Tok::Sym(s) => return p.err(format!("unexpected '{s}' at start of declaration")),
        };
        p.pos += 1;
        match kw.as_str() {
            "field" => {
                if field.is_some() {
                    return Err(Error::Syntax { line, col, msg: "duplicate field declaration".into() });
                }
                let name = p.word("field name")?;
                field = Some(match name.as_str() {
                    "Q" => FieldSpec::Rationals,
                    "GF" => {
                        let (l, c) = p.here();
                        let q = p.usize("prime")? as u64;
                        FieldSpec::prime(q).map_err(|e| Error::Syntax { line: l, col: c, msg: e.to_string() })?
                    }
                    other => {
                        return Err(Error::Syntax { line, col, msg: format!("unknown field {other}") })
                    }
                });
            }
            "vertices" => {
                if vertices.is_some() {
                    return Err(Error::Syntax { line, col, msg: "duplicate vertices declaration".into() });
                }
                let mut vs = Vec::new();
                while let Some(Tok::Word(_)) = p.peek() {
                    vs.push(p.word("vertex label")?);
                }
                if vs.is_empty() {
                    return p.err("expected at least one vertex label");
                }
                vertices = Some(vs);
            }
            "arrow" => {
                let Some(vs) = &vertices else {
                    return Err(Error::Syntax { line, col, msg: "arrow before vertices".into() });
                };
                let (nl, nc) = p.here();
                let name = p.word("arrow name")?;
                if !name.starts_with(|c: char| c.is_alphabetic()) {
                    return Err(Error::Syntax { line: nl, col: nc, msg: "arrow names start with a letter".into() });
                }
                p.sym(":")?;
                let s = vertex(&mut p, vs)?;
                p.sym("->")?;
                let t = vertex(&mut p, vs)?;
                arrows.push(Arrow { name, source: s, target: t });
            }
            "relation" => {
                let Some(f) = field else {
                    return Err(Error::Syntax { line, col, msg: "relation before field".into() });
                };
                let mut terms = Vec::new();
                let mut neg = p.eat("-");
                loop {
                    let coeff = match p.peek() {
                        Some(Tok::Word(w)) if is_number(w) => {
                            let c = p.scalar(f, false)?;
                            p.sym("*")?;
                            c
                        }
                        _ => f.one(),
                    };
                    let mut names = vec![p.word("arrow name")?];
                    while p.eat("*") {
                        names.push(p.word("arrow name")?);
                    }
                    terms.push((if neg { f.neg(&coeff) } else { coeff }, names));
                    if p.eat("+") {
                        neg = false;
                    } else if p.eat("-") {
                        neg = true;
                    } else {
                        break;
                    }
                }
                relations.push((line, col, terms));
            }
            "module" => {
                let Some(f) = field else {
                    return Err(Error::Syntax { line, col, msg: "module before field".into() });
                };
                let Some(vs) = &vertices else {
                    return Err(Error::Syntax { line, col, msg: "module before vertices".into() });
                };
                let (nl, nc) = p.here();
                let name = p.word("module name")?;
                if ["S", "P", "I", "A", "DA"].contains(&name.as_str()) {
                    return Err(Error::Syntax { line: nl, col: nc, msg: format!("{name} is reserved") });
                }
                if modules.iter().any(|m| m.name == name) {
                    return Err(Error::Syntax { line: nl, col: nc, msg: format!("duplicate module {name}") });
                }
                if p.eat("=") {
                    let mut parts = vec![atom(&mut p, vs, &modules)?];
                    while p.eat("+") {
                        parts.push(atom(&mut p, vs, &modules)?);
                    }
                    modules.push(ModuleDecl { name, body: ModuleBody::Expr(parts), line });
                    raw_maps.push(Vec::new());
                } else {
                    p.sym("{")?;
                    let (dims, maps) = explicit_body(&mut p, f, vs.len())?;
                    modules.push(ModuleDecl {
                        name,
                        body: ModuleBody::Explicit { dims, maps: Vec::new() },
                        line,
                    });
                    raw_maps.push(maps);
                }
            }
            other => return Err(Error::Syntax { line, col, msg: format!("unknown declaration {other}") }),
        }
        p.end_of_line()?;
    }

    let field = field.ok_or(Error::Syntax { line: 1, col: 1, msg: "missing field declaration".into() })?;
    let vertices = vertices.ok_or(Error::Syntax { line: 1, col: 1, msg: "missing vertices declaration".into() })?;
    let quiver = Quiver::new(vertices, arrows)?;

    let mut rels = Vec::new();
    for (line, col, terms) in relations {
        let mut out = Vec::new();
        for (c, names) in terms {
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let path = quiver.path_from_product(&refs).map_err(|e| Error::Syntax { line, col, msg: e.to_string() })?;
            out.push((c, path));
        }
        rels.push(Relation { terms: out });
    }
    let algebra = Algebra::new(field, quiver, rels, path_cap)?;

    for (decl, maps) in modules.iter_mut().zip(raw_maps) {
        if let ModuleBody::Explicit { dims, maps: resolved } = &mut decl.body {
            for (name, line, col, m) in maps {
                let q = algebra.quiver();
                let a = q
                    .arrow_index(&name)
                    .ok_or_else(|| Error::Syntax { line, col, msg: format!("unknown arrow {name}") })?;
                let (s, t) = (q.arrows[a].source, q.arrows[a].target);
                let m = if m.rows() == 0 && m.cols() == 0 { Mat::zeros(field, dims[t], dims[s]) } else { m };
                if m.rows() != dims[t] || m.cols() != dims[s] {
                    return Err(Error::Shape(format!(
                        "module {}: map {name} is {}x{}, expected {}x{}",
                        decl.name,
                        m.rows(),
                        m.cols(),
                        dims[t],
                        dims[s]
                    )));
                }
                if resolved.iter().any(|(b, _)| *b == a) {
                    return Err(Error::Syntax { line, col, msg: format!("map {name} given twice") });
                }
                resolved.push((a, m));
            }
            resolved.sort_by_key(|(a, _)| *a);
        }
    }
    Ok(AlgebraFile { algebra, modules })
}

fn vertex(p: &mut Parser, vs: &[String]) -> Result<usize> {
    let (line, col) = p.here();
    let v = p.word("vertex label")?;
    vs.iter()
        .position(|x| *x == v)
        .ok_or(Error::Syntax { line, col, msg: format!("unknown vertex {v}") })
}

fn atom(p: &mut Parser, vs: &[String], known: &[ModuleDecl]) -> Result<ModuleExpr> {
    let (line, col) = p.here();
    let w = p.word("module expression")?;
    let ctor: Option<fn(usize) -> ModuleExpr> = match w.as_str() {
        "S" => Some(ModuleExpr::Simple),
        "P" => Some(ModuleExpr::Projective),
        "I" => Some(ModuleExpr::Injective),
        _ => None,
    };
    if let Some(ctor) = ctor {
        p.sym("(")?;
        let v = vertex(p, vs)?;
        p.sym(")")?;
        return Ok(ctor(v));
    }
    match w.as_str() {
        "A" => Ok(ModuleExpr::Regular),
        "DA" => Ok(ModuleExpr::Dual),
        _ if known.iter().any(|m| m.name == w) => Ok(ModuleExpr::Named(w)),
        _ => Err(Error::Syntax { line, col, msg: format!("unknown module {w}") }),
    }
}

type RawMap = (String, usize, usize, Mat);

fn explicit_body(p: &mut Parser, field: FieldSpec, nv: usize) -> Result<(Vec<usize>, Vec<RawMap>)> {
    let mut dims: Option<Vec<usize>> = None;
    let mut maps = Vec::new();
    loop {
        while p.eat(";") {}
        if p.eat("}") {
            break;
        }
        let (line, col) = p.here();
        match p.word("'dim', 'map' or '}'")?.as_str() {
            "dim" => {
                if dims.is_some() {
                    return Err(Error::Syntax { line, col, msg: "duplicate dim".into() });
                }
                let mut d = Vec::new();
                while let Some(Tok::Word(_)) = p.peek() {
                    d.push(p.usize("dimension")?);
                }
                if d.len() != nv {
                    return Err(Error::Syntax {
                        line,
                        col,
                        msg: format!("{} dimensions given for {nv} vertices", d.len()),
                    });
                }
                dims = Some(d);
            }
            "map" => {
                if dims.is_none() {
                    return Err(Error::Syntax { line, col, msg: "map before dim".into() });
                }
                let (al, ac) = p.here();
                let name = p.word("arrow name")?;
                p.sym("=")?;
                let m = matrix(p, field)?;
                maps.push((name, al, ac, m));
            }
            other => return Err(Error::Syntax { line, col, msg: format!("unexpected {other}") }),
        }
    }
    let dims = dims.ok_or_else(|| {
        let (line, col) = p.here();
        Error::Syntax { line, col, msg: "module body lacks dim".into() }
    })?;
    Ok((dims, maps))
}

fn matrix(p: &mut Parser, field: FieldSpec) -> Result<Mat> {
    p.sym("[")?;
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    if !p.eat("]") {
        loop {
            p.sym("[")?;
            let mut row = Vec::new();
            if !p.eat("]") {
                loop {
                    row.push(p.scalar(field, true)?);
                    if p.eat("]") {
                        break;
                    }
                    p.sym(",")?;
                }
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return p.err("ragged matrix rows");
                }
            }
            rows.push(row);
            if p.eat("]") {
                break;
            }
            p.sym(",")?;
        }
    }
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    Mat::from_vec(field, r, c, rows.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_algebra("field Q\nvertices 1 2\narrow a : 1 => 2\n").unwrap_err();
        match err {
            Error::Syntax { line, col, .. } => assert_eq!((line, col), (3, 14)),
            other => panic!("unexpected {other}"),
        }
        let err = parse_algebra("field Q\nvertices 1 2\narrow a 1 -> 2\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, col: 9, .. }));
    }

    #[test]
    fn coefficients_and_signs() {
        let text = "field GF 7\nvertices 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\nrelation 3/2*b*a - 2*d*c\n";
        let f = parse_algebra(text).unwrap();
        let r = &f.algebra.relations()[0];
        let fld = f.algebra.field();
        // 3/2 = 3 * 4 = 12 = 5 mod 7; -2 = 5 mod 7
        assert_eq!(r.terms[0].0, fld.from_i64(5));
        assert_eq!(r.terms[1].0, fld.from_i64(5));
        assert_eq!(f.algebra.dim(), 9);
    }

    #[test]
    fn module_declarations() {
        let text = "field Q\nvertices 1 2\narrow a : 1 -> 2   # the only arrow\n\
                    module X { dim 1 1 ; map a = [[1]] }\n\
                    module Z {\n  dim 1 0\n}\n\
                    module M = P(1) + S(2) + X + DA\n";
        let f = parse_algebra(text).unwrap();
        assert_eq!(f.modules.len(), 3);
        match &f.module("M").unwrap().body {
            ModuleBody::Expr(parts) => assert_eq!(
                parts,
                &vec![
                    ModuleExpr::Projective(0),
                    ModuleExpr::Simple(1),
                    ModuleExpr::Named("X".into()),
                    ModuleExpr::Dual
                ]
            ),
            _ => panic!(),
        }
        match &f.module("Z").unwrap().body {
            ModuleBody::Explicit { dims, maps } => {
                assert_eq!(dims, &vec![1, 0]);
                assert!(maps.is_empty());
            }
            _ => panic!(),
        }
    }

    #[test]
    fn bad_map_shape() {
        let text = "field Q\nvertices 1 2\narrow a : 1 -> 2\nmodule X { dim 1 2 ; map a = [[1]] }\n";
        assert!(matches!(parse_algebra(text), Err(Error::Shape(_))));
    }

    #[test]
    fn unknown_module_reference() {
        let text = "field Q\nvertices 1\nmodule M = N\n";
        assert!(matches!(parse_algebra(text), Err(Error::Syntax { line: 3, .. })));
    }
}
