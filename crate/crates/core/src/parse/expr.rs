//! Coefficient expressions: numbers, single-letter variables and the
//! arithmetic that shows up in partial-information captions (`100-x`,
//! `1-y`, ...).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ExprError {
    #[error("unbound variable '{0}'")]
    UnboundVariable(char),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

/// Arithmetic tree over decimals and single-letter variables.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(f64),
    Variable(char),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Negate(Box<Expr>),
}

impl Expr {
    pub fn number(n: f64) -> Self {
        Expr::Number(n)
    }

    pub fn var(c: char) -> Self {
        Expr::Variable(c)
    }

    pub fn add(a: Expr, b: Expr) -> Self {
        Expr::Binary(BinOp::Add, Box::new(a), Box::new(b))
    }

    pub fn sub(a: Expr, b: Expr) -> Self {
        Expr::Binary(BinOp::Sub, Box::new(a), Box::new(b))
    }

    pub fn mul(a: Expr, b: Expr) -> Self {
        Expr::Binary(BinOp::Mul, Box::new(a), Box::new(b))
    }

    /// Evaluates under a full variable assignment.
    pub fn eval(&self, assignment: &BTreeMap<char, f64>) -> Result<f64, ExprError> {
        match self {
            Expr::Number(n) => Ok(*n),
            Expr::Variable(v) => assignment
                .get(v)
                .copied()
                .ok_or(ExprError::UnboundVariable(*v)),
            Expr::Binary(op, a, b) => {
                let (a, b) = (a.eval(assignment)?, b.eval(assignment)?);
                Ok(match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                })
            }
            Expr::Negate(e) => Ok(-e.eval(assignment)?),
        }
    }

    /// All variables occurring in the expression.
    pub fn variables(&self) -> BTreeSet<char> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<char>) {
        match self {
            Expr::Number(_) => {}
            Expr::Variable(v) => {
                out.insert(*v);
            }
            Expr::Binary(_, a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
            Expr::Negate(e) => e.collect_variables(out),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.variables().is_empty()
    }

    /// Writes the expression as `a * var + b` given that every other
    /// variable is bound. Returns `None` when the expression is nonlinear
    /// in `var` or references an unbound third variable.
    pub fn linear_in(&self, var: char, bound: &BTreeMap<char, f64>) -> Option<(f64, f64)> {
        match self {
            Expr::Number(n) => Some((0.0, *n)),
            Expr::Variable(v) if *v == var => Some((1.0, 0.0)),
            Expr::Variable(v) => bound.get(v).map(|&val| (0.0, val)),
            Expr::Negate(e) => {
                let (a, b) = e.linear_in(var, bound)?;
                Some((-a, -b))
            }
            Expr::Binary(op, lhs, rhs) => {
                let (a1, b1) = lhs.linear_in(var, bound)?;
                let (a2, b2) = rhs.linear_in(var, bound)?;
                match op {
                    BinOp::Add => Some((a1 + a2, b1 + b2)),
                    BinOp::Sub => Some((a1 - a2, b1 - b2)),
                    BinOp::Mul => {
                        if a1 == 0.0 {
                            Some((b1 * a2, b1 * b2))
                        } else if a2 == 0.0 {
                            Some((a1 * b2, b1 * b2))
                        } else {
                            None // quadratic in var
                        }
                    }
                }
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(n) => {
                if n.fract() == 0.0 && n.abs() < 1e15 {
                    write!(f, "{}", *n as i64)
                } else {
                    write!(f, "{n}")
                }
            }
            Expr::Variable(v) => write!(f, "{v}"),
            Expr::Binary(op, a, b) => {
                let op_str = match op {
                    BinOp::Add => "+",
                    BinOp::Sub => "-",
                    BinOp::Mul => "*",
                };
                write!(f, "({a}{op_str}{b})")
            }
            Expr::Negate(e) => write!(f, "(-{e})"),
        }
    }
}
