use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Dimension;
use crate::error::{Error, Result};

/// Numeric payload of a [`Quantity`], in SI base units.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Value {
    Scalar(f64),
    Vector([f64; 3]),
}

/// A real scalar or 3-vector tagged with its SI dimension.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Quantity {
    value: Value,
    dim: Dimension,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Dot,
    Cross,
}

/// Applies `op` to two quantities with full dimension checking.
pub fn quantity_arith(a: &Quantity, b: &Quantity, op: ArithOp) -> Result<Quantity> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b),
        ArithOp::Dot => a.dot(b),
        ArithOp::Cross => a.cross(b),
    }
}

impl Quantity {
    pub const fn scalar(value: f64, dim: Dimension) -> Quantity {
        Quantity {
            value: Value::Scalar(value),
            dim,
        }
    }

    pub const fn vector(value: [f64; 3], dim: Dimension) -> Quantity {
        Quantity {
            value: Value::Vector(value),
            dim,
        }
    }

    pub const fn dimensionless(value: f64) -> Quantity {
        Quantity::scalar(value, Dimension::DIMENSIONLESS)
    }

    pub fn value(&self) -> Value {
        self.value
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn is_vector(&self) -> bool {
        matches!(self.value, Value::Vector(_))
    }

    /// SI numeric value of a scalar quantity.
    pub fn as_scalar(&self) -> Result<f64> {
        match self.value {
            Value::Scalar(x) => Ok(x),
            Value::Vector(_) => Err(Error::NotAScalar { op: "as_scalar" }),
        }
    }

    pub fn as_vector(&self) -> Result<[f64; 3]> {
        match self.value {
            Value::Vector(v) => Ok(v),
            Value::Scalar(_) => Err(Error::NotAVector { op: "as_vector" }),
        }
    }

    /// Absolute value for scalars, Euclidean norm for vectors.
    pub fn magnitude(&self) -> f64 {
        match self.value {
            Value::Scalar(x) => x.abs(),
            Value::Vector(v) => norm3(v),
        }
    }

    /// Fails unless `self` carries exactly `expected`; `what` names the input.
    pub fn require(&self, expected: Dimension, what: &'static str) -> Result<&Quantity> {
        if self.dim == expected {
            Ok(self)
        } else {
            Err(Error::DimensionMismatch {
                op: what,
                left: self.dim,
                right: expected,
            })
        }
    }

    pub fn add(&self, other: &Quantity) -> Result<Quantity> {
        self.same_dim(other, "add")?;
        self.zip_same_shape(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Quantity) -> Result<Quantity> {
        self.same_dim(other, "sub")?;
        self.zip_same_shape(other, "sub", |a, b| a - b)
    }

    /// Product; at least one side must be a scalar (use `dot`/`cross` for two vectors).
    pub fn mul(&self, other: &Quantity) -> Result<Quantity> {
        let dim = self.dim.mul(other.dim);
        let value = match (self.value, other.value) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a * b),
            (Value::Scalar(a), Value::Vector(v)) | (Value::Vector(v), Value::Scalar(a)) => {
                Value::Vector(v.map(|x| a * x))
            }
            (Value::Vector(_), Value::Vector(_)) => return Err(Error::NotAScalar { op: "mul" }),
        };
        Ok(Quantity { value, dim })
    }

    /// Quotient; the divisor must be a scalar.
    pub fn div(&self, other: &Quantity) -> Result<Quantity> {
        let b = match other.value {
            Value::Scalar(b) => b,
            Value::Vector(_) => return Err(Error::NotAScalar { op: "div" }),
        };
        let dim = self.dim.div(other.dim);
        let value = match self.value {
            Value::Scalar(a) => Value::Scalar(a / b),
            Value::Vector(v) => Value::Vector(v.map(|x| x / b)),
        };
        Ok(Quantity { value, dim })
    }

    pub fn dot(&self, other: &Quantity) -> Result<Quantity> {
        self.same_dim(other, "dot")?;
        let (a, b) = self.vector_pair(other, "dot")?;
        Ok(Quantity::scalar(
            a[0] * b[0] + a[1] * b[1] + a[2] * b[2],
            self.dim.mul(other.dim),
        ))
    }

    /// Cross product. Operands may carry different dimensions (e.g. velocity × field),
    /// but both must be 3-vectors.
    pub fn cross(&self, other: &Quantity) -> Result<Quantity> {
        let (a, b) = self.vector_pair(other, "cross")?;
        Ok(Quantity::vector(
            [
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            ],
            self.dim.mul(other.dim),
        ))
    }

    /// Euclidean norm of a vector quantity, same dimension.
    pub fn norm(&self) -> Result<Quantity> {
        match self.value {
            Value::Vector(v) => Ok(Quantity::scalar(norm3(v), self.dim)),
            Value::Scalar(_) => Err(Error::NotAVector { op: "norm" }),
        }
    }

    pub fn scale(&self, factor: f64) -> Quantity {
        let value = match self.value {
            Value::Scalar(a) => Value::Scalar(a * factor),
            Value::Vector(v) => Value::Vector(v.map(|x| x * factor)),
        };
        Quantity { value, dim: self.dim }
    }

    pub fn recip(&self) -> Result<Quantity> {
        Quantity::dimensionless(1.0).div(self)
    }

    pub fn powi(&self, n: i8) -> Result<Quantity> {
        let x = self.as_scalar()?;
        Ok(Quantity::scalar(x.powi(i32::from(n)), self.dim.powi(n)))
    }

    pub fn sqrt(&self) -> Result<Quantity> {
        let x = self.as_scalar()?;
        let dim = self
            .dim
            .sqrt()
            .ok_or(Error::IrrationalDimension { dim: self.dim })?;
        Ok(Quantity::scalar(x.sqrt(), dim))
    }

    /// Ordering of two scalars of identical dimension.
    pub fn try_cmp(&self, other: &Quantity) -> Result<Option<Ordering>> {
        self.same_dim(other, "compare")?;
        Ok(self.as_scalar()?.partial_cmp(&other.as_scalar()?))
    }

    fn same_dim(&self, other: &Quantity, op: &'static str) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                op,
                left: self.dim,
                right: other.dim,
            })
        }
    }

    fn vector_pair(&self, other: &Quantity, op: &'static str) -> Result<([f64; 3], [f64; 3])> {
        match (self.value, other.value) {
            (Value::Vector(a), Value::Vector(b)) => Ok((a, b)),
            _ => Err(Error::NotAVector { op }),
        }
    }

    fn zip_same_shape(
        &self,
        other: &Quantity,
        op: &'static str,
        f: impl Fn(f64, f64) -> f64,
    ) -> Result<Quantity> {
        let value = match (self.value, other.value) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(f(a, b)),
            (Value::Vector(a), Value::Vector(b)) => {
                Value::Vector([f(a[0], b[0]), f(a[1], b[1]), f(a[2], b[2])])
            }
            (Value::Scalar(_), Value::Vector(_)) => return Err(Error::NotAScalar { op }),
            (Value::Vector(_), Value::Scalar(_)) => return Err(Error::NotAVector { op }),
        };
        Ok(Quantity { value, dim: self.dim })
    }
}

fn norm3(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            Value::Scalar(x) => write!(f, "{x:e}")?,
            Value::Vector(v) => write!(f, "({:e}, {:e}, {:e})", v[0], v[1], v[2])?,
        }
        if !self.dim.is_dimensionless() {
            write!(f, " {}", self.dim)?;
        }
        Ok(())
    }
}
