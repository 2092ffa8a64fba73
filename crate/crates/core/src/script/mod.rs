//! A small scripting language over the library: ring declarations,
//! assignments and commands, evaluated into a [`Report`](crate::report::Report).
//!
//! ```text
//! ring R = QQ[x,y] order grevlex;
//! I = ideal(x, y);
//! J = ideal(x^3, x*y, y^4);
//! S = multstruct(I, J);
//! filtrations(S);
//! construct(n=3, case=B);
//! ```

pub mod ast;
pub mod eval;
pub mod lexer;
pub mod parser;

mod ideal_file;

pub use ast::{Arg, BinOp, Expr, ExprKind, Pos, Script, Stmt, StmtKind};
pub use eval::{execute, run, Config, Value};
pub use ideal_file::{check_ideal_file, IdealFile};
pub use parser::{check, parse, parse_unchecked};
