use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{factorial, Scalar};

use super::Series;

/// The named species the coefficient calculus knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `1`, the empty-set species.
    One,
    /// Singletons of the first (internal) sort.
    X,
    /// Singletons of the second (leaf) sort; only meaningful in two-sort tables.
    Y,
    /// Sets.
    E,
    /// Sets of exactly `r` elements.
    ESize(usize),
    /// Nonempty sets.
    EPlus,
    /// Linear orders.
    L,
    LPlus,
    /// Permutations.
    S,
    SSize(usize),
    SPlus,
    /// Cycles.
    C,
    /// Cycles of length exactly `i`.
    CSize(usize),
    /// Derangements.
    Der,
    /// Ballots (ordered set partitions), `L(E_+)`.
    Bal,
    /// Set partitions, `E(E_+)`.
    Par,
}

impl Atom {
    /// Labeled counts truncated at `truncation`.
    pub fn coeffs<T: Scalar>(self, truncation: usize) -> Result<Series<T>> {
        let n = truncation;
        let label = self.to_string();
        let table = |f: &dyn Fn(usize) -> T| -> Vec<T> { (0..=n).map(f).collect() };
        let coeffs = match self {
            Atom::One => return Ok(Series::one(n)),
            Atom::X => return Ok(Series::x(n)),
            Atom::Y => return Err(Error::UnsupportedAtom("Y (two-sort only)".into())),
            Atom::E => table(&|_| T::one()),
            Atom::ESize(r) => table(&|m| if m == r { T::one() } else { T::zero() }),
            Atom::EPlus => table(&|m| if m > 0 { T::one() } else { T::zero() }),
            Atom::L | Atom::S => table(&|m| factorial(m)),
            Atom::LPlus | Atom::SPlus => table(&|m| if m > 0 { factorial(m) } else { T::zero() }),
            Atom::SSize(r) => table(&|m| if m == r { factorial(m) } else { T::zero() }),
            Atom::C => table(&|m| if m > 0 { factorial(m - 1) } else { T::zero() }),
            Atom::CSize(i) => table(&|m| if m == i && m > 0 { factorial(m - 1) } else { T::zero() }),
            Atom::Der => derangements(n),
            Atom::Bal => {
                let plus = Atom::EPlus.coeffs::<T>(n)?;
                return Ok(Atom::L.coeffs::<T>(n)?.compose(&plus)?.with_label(label));
            }
            Atom::Par => {
                let plus = Atom::EPlus.coeffs::<T>(n)?;
                return Ok(Atom::E.coeffs::<T>(n)?.compose(&plus)?.with_label(label));
            }
        };
        Ok(Series::concrete(label, coeffs))
    }
}

fn derangements<T: Scalar>(n: usize) -> Vec<T> {
    let mut d: Vec<T> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let value = match m {
            0 => T::one(),
            1 => T::zero(),
            _ => T::from_count(m - 1) * (d[m - 1].clone() + d[m - 2].clone()),
        };
        d.push(value);
    }
    d
}

/// Labeled counts of the atom called `name` (see [`Atom::from_str`]).
pub fn atom_coeffs<T: Scalar>(name: &str, truncation: usize) -> Result<Series<T>> {
    name.parse::<Atom>()?.coeffs(truncation)
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::One => write!(f, "1"),
            Atom::X => write!(f, "X"),
            Atom::Y => write!(f, "Y"),
            Atom::E => write!(f, "E"),
            Atom::ESize(r) => write!(f, "E_{r}"),
            Atom::EPlus => write!(f, "E_+"),
            Atom::L => write!(f, "L"),
            Atom::LPlus => write!(f, "L_+"),
            Atom::S => write!(f, "S"),
            Atom::SSize(r) => write!(f, "S_{r}"),
            Atom::SPlus => write!(f, "S_+"),
            Atom::C => write!(f, "C"),
            Atom::CSize(i) => write!(f, "C_{i}"),
            Atom::Der => write!(f, "Der"),
            Atom::Bal => write!(f, "Bal"),
            Atom::Par => write!(f, "Par"),
        }
    }
}

/// Accepts `1 X Y E L S C Der Bal Par`, the `_+` variants of `E L S`,
/// and sized variants written `E_3`, `S_2`, `C_4` (the underscore is optional).
impl FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let atom = match s {
            "1" => Atom::One,
            "X" => Atom::X,
            "Y" => Atom::Y,
            "E" => Atom::E,
            "E_+" | "E+" => Atom::EPlus,
            "L" => Atom::L,
            "L_+" | "L+" => Atom::LPlus,
            "S" => Atom::S,
            "S_+" | "S+" => Atom::SPlus,
            "C" => Atom::C,
            "Der" => Atom::Der,
            "Bal" => Atom::Bal,
            "Par" => Atom::Par,
            _ => {
                let (head, tail) = s.split_at(1.min(s.len()));
                let tail = tail.strip_prefix('_').unwrap_or(tail);
                let size: usize = tail.parse().map_err(|_| Error::UnsupportedAtom(s.to_string()))?;
                match head {
                    "E" => Atom::ESize(size),
                    "S" => Atom::SSize(size),
                    "C" => Atom::CSize(size),
                    _ => return Err(Error::UnsupportedAtom(s.to_string())),
                }
            }
        };
        Ok(atom)
    }
}
