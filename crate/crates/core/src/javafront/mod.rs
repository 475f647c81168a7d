//! The analyzed Java subset: parsing, the modeled JDBC API, and CFGs.

pub mod api;
pub mod ast;
pub mod cfg;
pub mod lexer;
mod parser;
mod print;

pub use api::{classify_call, ApiRole};
pub use ast::*;
pub use cfg::{build_cfg, BasicBlock, Cfg, CfgNode};
pub use parser::{parse_java, JavaSyntaxError};
pub use print::render_java;
