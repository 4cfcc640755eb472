use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{compose_uni_two, solve_two_sort_tree, Atom, Series, Table};

/// A species expression over the atom catalogue.
///
/// Evaluation yields unisort counts when no sort-`Y` ingredient appears and
/// two-sort counts otherwise. Binary nodes first cut both operands to the
/// smaller truncation, so derivatives can be mixed with undifferentiated
/// terms.
#[derive(Clone, Debug, PartialEq)]
pub enum SpeciesExpr {
    Atom(Atom),
    /// Two-sort rooted trees `A(X, Y)`.
    Tree,
    Sum(Box<SpeciesExpr>, Box<SpeciesExpr>),
    Difference(Box<SpeciesExpr>, Box<SpeciesExpr>),
    Product(Box<SpeciesExpr>, Box<SpeciesExpr>),
    /// Outer argument must evaluate to a unisort species.
    Compose(Box<SpeciesExpr>, Box<SpeciesExpr>),
    PointingX(Box<SpeciesExpr>),
    PointingY(Box<SpeciesExpr>),
    DerivativeX(Box<SpeciesExpr>),
    DerivativeY(Box<SpeciesExpr>),
    /// Unisort only.
    Integral(Box<SpeciesExpr>),
    RestrictSize(Box<SpeciesExpr>, usize),
    /// Unisort only.
    Log(Box<SpeciesExpr>),
}

/// Result of evaluating a [`SpeciesExpr`].
#[derive(Clone, Debug, PartialEq)]
pub enum Value<T> {
    Uni(Series<T>),
    Two(Table<T>),
}

impl<T: Scalar> Value<T> {
    pub fn truncation(&self) -> usize {
        match self {
            Value::Uni(s) => s.truncation(),
            Value::Two(t) => t.truncation(),
        }
    }

    fn truncate(&self, n: usize) -> Self {
        match self {
            Value::Uni(s) => Value::Uni(s.truncate(n)),
            Value::Two(t) => Value::Two(t.truncate(n)),
        }
    }

    fn into_two(self) -> Table<T> {
        match self {
            Value::Uni(s) => Table::from_series_x(&s),
            Value::Two(t) => t,
        }
    }

    pub fn into_series(self) -> Result<Series<T>> {
        match self {
            Value::Uni(s) => Ok(s),
            Value::Two(_) => Err(Error::Expression("expected a unisort species".into())),
        }
    }

    pub fn into_table(self) -> Table<T> {
        self.into_two()
    }
}

impl SpeciesExpr {
    pub fn atom(atom: Atom) -> Self {
        SpeciesExpr::Atom(atom)
    }

    pub fn sum(a: Self, b: Self) -> Self {
        SpeciesExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn difference(a: Self, b: Self) -> Self {
        SpeciesExpr::Difference(Box::new(a), Box::new(b))
    }

    pub fn product(a: Self, b: Self) -> Self {
        SpeciesExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn compose(outer: Self, inner: Self) -> Self {
        SpeciesExpr::Compose(Box::new(outer), Box::new(inner))
    }

    pub fn eval<T: Scalar>(&self, truncation: usize) -> Result<Value<T>> {
        use SpeciesExpr::*;
        let n = truncation;
        Ok(match self {
            Atom(super::Atom::Y) => Value::Two(Table::y(n)),
            Atom(a) => Value::Uni(a.coeffs(n)?),
            Tree => Value::Two(solve_two_sort_tree(n)),
            Sum(a, b) | Difference(a, b) | Product(a, b) => {
                let (a, b) = binary(a.eval(n)?, b.eval(n)?);
                match (self, a, b) {
                    (Sum(..), Value::Uni(a), Value::Uni(b)) => Value::Uni(a.sum(&b)?),
                    (Difference(..), Value::Uni(a), Value::Uni(b)) => Value::Uni(a.difference(&b)?),
                    (Product(..), Value::Uni(a), Value::Uni(b)) => Value::Uni(a.product(&b)?),
                    (Sum(..), a, b) => Value::Two(a.into_two().sum(&b.into_two())?),
                    (Difference(..), a, b) => Value::Two(a.into_two().difference(&b.into_two())?),
                    (_, a, b) => Value::Two(a.into_two().product(&b.into_two())?),
                }
            }
            Compose(outer, inner) => {
                let (outer, inner) = binary(outer.eval(n)?, inner.eval(n)?);
                let outer = outer.into_series()?;
                match inner {
                    Value::Uni(g) => Value::Uni(outer.compose(&g)?),
                    Value::Two(g) => Value::Two(compose_uni_two(&outer, &g)?),
                }
            }
            PointingX(a) => match a.eval(n)? {
                Value::Uni(s) => Value::Uni(s.pointing()),
                Value::Two(t) => Value::Two(t.pointing_x()),
            },
            PointingY(a) => Value::Two(a.eval::<T>(n)?.into_two().pointing_y()),
            DerivativeX(a) => match a.eval(n)? {
                Value::Uni(s) => Value::Uni(s.derivative()?),
                Value::Two(t) => Value::Two(t.partial_x()?),
            },
            DerivativeY(a) => Value::Two(a.eval::<T>(n)?.into_two().partial_y()?),
            Integral(a) => Value::Uni(a.eval::<T>(n)?.into_series()?.integral()),
            RestrictSize(a, m) => match a.eval(n)? {
                Value::Uni(s) => Value::Uni(s.restrict_size(*m)),
                Value::Two(t) => Value::Two(t.restrict_size(*m)),
            },
            Log(a) => Value::Uni(a.eval::<T>(n)?.into_series()?.log()?),
        })
    }
}

fn binary<T: Scalar>(a: Value<T>, b: Value<T>) -> (Value<T>, Value<T>) {
    let n = a.truncation().min(b.truncation());
    (a.truncate(n), b.truncate(n))
}
