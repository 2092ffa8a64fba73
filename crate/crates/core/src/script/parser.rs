use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::MonomialOrder;

use super::ast::{Arg, BinOp, Expr, ExprKind, Pos, Script, Stmt, StmtKind};
use super::lexer::{tokenize, Tok, Token};

const RESERVED: [&str; 3] = ["ring", "order", "QQ"];

/// Functions callable from scripts.
pub const FUNCTIONS: [&str; 24] = [
    "ideal",
    "gb",
    "nf",
    "sat",
    "intersect",
    "eliminate",
    "hilbert",
    "length",
    "mingens",
    "contains",
    "equal",
    "recognize",
    "multstruct",
    "filtrations",
    "type",
    "check",
    "gorenstein",
    "multiplicity",
    "construct",
    "chain",
    "examples",
    "assert",
    "quotient",
    "hessian",
];

/// Named arguments whose value is a bare symbol rather than an expression.
pub const SYMBOL_ARGS: [&str; 1] = ["case"];

/// Functions whose positional arguments are bare symbols.
pub const SYMBOL_FUNCTIONS: [&str; 1] = ["examples"];

fn err(pos: Pos, msg: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        col: pos.col,
        msg: msg.into(),
    }
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Token> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            let t = self.peek();
            Err(err(t.pos, format!("expected {what}, found {}", t.tok.describe())))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Pos)> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(name) => {
                self.bump();
                Ok((name, t.pos))
            }
            other => Err(err(t.pos, format!("expected {what}, found {}", other.describe()))),
        }
    }

    fn script(&mut self) -> Result<Script> {
        let mut statements = Vec::new();
        while self.peek().tok != Tok::Eof {
            if self.eat(&Tok::Semi) {
                continue;
            }
            statements.push(self.statement()?);
            if !self.eat(&Tok::Semi) && self.peek().tok != Tok::Eof {
                let t = self.peek();
                return Err(err(t.pos, format!("expected ';', found {}", t.tok.describe())));
            }
        }
        Ok(Script { statements })
    }

    fn statement(&mut self) -> Result<Stmt> {
        let pos = self.peek().pos;
        if let Tok::Ident(name) = &self.peek().tok {
            if name == "ring" {
                return self.ring_decl();
            }
            if *self.peek2() == Tok::Eq {
                let (name, npos) = self.ident("a name")?;
                if RESERVED.contains(&name.as_str()) {
                    return Err(err(npos, format!("'{name}' is reserved")));
                }
                self.bump();
                let expr = self.expr()?;
                return Ok(Stmt {
                    kind: StmtKind::Assign { name, expr },
                    pos,
                });
            }
        }
        Ok(Stmt {
            kind: StmtKind::Expr(self.expr()?),
            pos,
        })
    }

    fn ring_decl(&mut self) -> Result<Stmt> {
        let pos = self.bump().pos;
        let (name, npos) = self.ident("a ring name")?;
        if RESERVED.contains(&name.as_str()) {
            return Err(err(npos, format!("'{name}' is reserved")));
        }
        self.expect(Tok::Eq, "'='")?;
        let (field, fpos) = self.ident("'QQ'")?;
        if field != "QQ" {
            return Err(err(fpos, format!("unsupported coefficient field '{field}'")));
        }
        self.expect(Tok::LBracket, "'['")?;
        let mut vars: Vec<String> = Vec::new();
        loop {
            let (v, vpos) = self.ident("a variable name")?;
            if RESERVED.contains(&v.as_str()) || FUNCTIONS.contains(&v.as_str()) {
                return Err(err(vpos, format!("'{v}' cannot be a variable name")));
            }
            if vars.contains(&v) {
                return Err(err(vpos, format!("duplicate variable '{v}'")));
            }
            vars.push(v);
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(Tok::RBracket, "']'")?;
        let order = if matches!(&self.peek().tok, Tok::Ident(s) if s == "order") {
            self.bump();
            let (o, opos) = self.ident("a monomial order")?;
            let text = if self.eat(&Tok::LParen) {
                let t = self.bump();
                let k = match t.tok {
                    Tok::Int(k) => k,
                    other => return Err(err(t.pos, format!("expected a block size, found {}", other.describe()))),
                };
                self.expect(Tok::RParen, "')'")?;
                format!("{o}({k})")
            } else {
                o
            };
            let order: MonomialOrder = text
                .parse()
                .map_err(|_| err(opos, format!("unknown monomial order '{text}'")))?;
            if let MonomialOrder::Block(k) = order {
                if k == 0 || k >= vars.len() {
                    return Err(err(opos, format!("block size {k} out of range")));
                }
            }
            Some(order)
        } else {
            None
        };
        Ok(Stmt {
            kind: StmtKind::Ring { name, vars, order },
            pos,
        })
    }

    fn expr(&mut self) -> Result<Expr> {
        self.binary(1)
    }

    fn binop(&self, min: u8) -> Option<BinOp> {
        let op = match self.peek().tok {
            Tok::Colon => BinOp::Colon,
            Tok::Plus => BinOp::Add,
            Tok::Minus => BinOp::Sub,
            Tok::Star => BinOp::Mul,
            Tok::Slash => BinOp::Div,
            _ => return None,
        };
        (op.precedence() >= min).then_some(op)
    }

    fn binary(&mut self, min: u8) -> Result<Expr> {
        if min > BinOp::Div.precedence() {
            return self.unary();
        }
        let mut lhs = self.binary(min + 1)?;
        while let Some(op) = self.binop(min) {
            if op.precedence() != min {
                break;
            }
            let opos = self.bump().pos;
            self.operand_start(opos, op)?;
            let rhs = self.binary(min + 1)?;
            let pos = lhs.pos;
            lhs = Expr {
                kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
        Ok(lhs)
    }

    fn operand_start(&self, opos: Pos, op: BinOp) -> Result<()> {
        match self.peek().tok {
            Tok::Ident(_) | Tok::Int(_) | Tok::LParen | Tok::LBracket | Tok::Minus => Ok(()),
            _ => Err(err(
                opos,
                format!("missing operand after '{}'", op.symbol().trim()),
            )),
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek().tok == Tok::Minus {
            let pos = self.bump().pos;
            self.operand_start(pos, BinOp::Sub)?;
            let e = self.unary()?;
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(e)),
                pos,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.peek().tok == Tok::Caret {
            let opos = self.bump().pos;
            self.operand_start(opos, BinOp::Pow)?;
            let exp = self.unary()?;
            let pos = base.pos;
            return Ok(Expr {
                kind: ExprKind::Binary(BinOp::Pow, Box::new(base), Box::new(exp)),
                pos,
            });
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        let t = self.bump();
        let pos = t.pos;
        let kind = match t.tok {
            Tok::Int(s) => ExprKind::Int(s),
            Tok::Ident(name) => {
                if RESERVED.contains(&name.as_str()) {
                    return Err(err(pos, format!("'{name}' is reserved")));
                }
                if self.eat(&Tok::LParen) {
                    ExprKind::Call {
                        name,
                        args: self.args()?,
                    }
                } else {
                    ExprKind::Ident(name)
                }
            }
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(Expr { kind: e.kind, pos });
            }
            Tok::LBracket => {
                let mut items = Vec::new();
                if !self.eat(&Tok::RBracket) {
                    loop {
                        items.push(self.expr()?);
                        if !self.eat(&Tok::Comma) {
                            break;
                        }
                    }
                    self.expect(Tok::RBracket, "']'")?;
                }
                ExprKind::List(items)
            }
            other => return Err(err(pos, format!("expected an expression, found {}", other.describe()))),
        };
        Ok(Expr { kind, pos })
    }

    fn args(&mut self) -> Result<Vec<Arg>> {
        let mut args = Vec::new();
        if self.eat(&Tok::RParen) {
            return Ok(args);
        }
        loop {
            let name = match (&self.peek().tok, self.peek2()) {
                (Tok::Ident(n), Tok::Eq) => {
                    let n = n.clone();
                    self.bump();
                    self.bump();
                    Some(n)
                }
                _ => None,
            };
            let value = self.expr()?;
            args.push(Arg { name, value });
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(Tok::RParen, "')'")?;
        Ok(args)
    }
}

/// Parses a script and checks that every identifier and function it uses
/// is defined where it is used.
pub fn parse(src: &str) -> Result<Script> {
    let script = parse_unchecked(src)?;
    check(&script)?;
    Ok(script)
}

/// Syntax only, no name resolution.
pub fn parse_unchecked(src: &str) -> Result<Script> {
    let toks = tokenize(src)?;
    Parser { toks, at: 0 }.script()
}

struct Scope {
    vars: BTreeSet<String>,
    names: BTreeSet<String>,
}

/// Static name resolution: ring variables of the active ring, names
/// assigned by earlier statements, and the known functions.
pub fn check(script: &Script) -> Result<()> {
    let mut scope = Scope {
        vars: BTreeSet::new(),
        names: BTreeSet::new(),
    };
    for stmt in &script.statements {
        match &stmt.kind {
            StmtKind::Ring { vars, .. } => {
                for v in vars {
                    if scope.names.contains(v) {
                        return Err(err(stmt.pos, format!("variable '{v}' shadows an assigned name")));
                    }
                }
                scope.vars = vars.iter().cloned().collect();
            }
            StmtKind::Assign { name, expr } => {
                check_expr(expr, &scope)?;
                if scope.vars.contains(name) {
                    return Err(err(stmt.pos, format!("cannot assign to ring variable '{name}'")));
                }
                if FUNCTIONS.contains(&name.as_str()) {
                    return Err(err(stmt.pos, format!("cannot assign to function name '{name}'")));
                }
                scope.names.insert(name.clone());
            }
            StmtKind::Expr(e) => check_expr(e, &scope)?,
        }
    }
    Ok(())
}

fn check_expr(e: &Expr, scope: &Scope) -> Result<()> {
    match &e.kind {
        ExprKind::Int(_) => Ok(()),
        ExprKind::Ident(n) => {
            if scope.vars.contains(n) || scope.names.contains(n) {
                Ok(())
            } else if FUNCTIONS.contains(&n.as_str()) {
                Err(err(e.pos, format!("function '{n}' used without arguments")))
            } else {
                Err(err(e.pos, format!("unknown identifier '{n}'")))
            }
        }
        ExprKind::Neg(inner) => check_expr(inner, scope),
        ExprKind::Binary(_, l, r) => {
            check_expr(l, scope)?;
            check_expr(r, scope)
        }
        ExprKind::List(items) => items.iter().try_for_each(|i| check_expr(i, scope)),
        ExprKind::Call { name, args } => {
            if !FUNCTIONS.contains(&name.as_str()) {
                return Err(err(e.pos, format!("unknown function '{name}'")));
            }
            for a in args {
                let symbolic = match &a.name {
                    Some(n) => SYMBOL_ARGS.contains(&n.as_str()),
                    None => SYMBOL_FUNCTIONS.contains(&name.as_str()),
                };
                if symbolic && matches!(a.value.kind, ExprKind::Ident(_)) {
                    continue;
                }
                check_expr(&a.value, scope)?;
            }
            Ok(())
        }
    }
}
