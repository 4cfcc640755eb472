use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A map `[n] -> [n]`.
///
/// Values are stored zero-based (`values[v]` is the image of `v`, both in
/// `0..n`); text forms are one-based, so the word `"21"` is the
/// transposition of `{1, 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endofunction {
    values: Vec<usize>,
}

impl Endofunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if let Some(bad) = values.iter().find(|&&v| v >= n) {
            return Err(Error::Structure(format!("value {} out of range for size {n}", bad + 1)));
        }
        Ok(Endofunction { values })
    }

    /// From one-based images.
    pub fn from_one_based(values: &[usize]) -> Result<Self> {
        let zero_based = values
            .iter()
            .map(|&v| v.checked_sub(1).ok_or_else(|| Error::Structure("images are one-based".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(zero_based)
    }

    pub fn identity(n: usize) -> Self {
        Endofunction { values: (0..n).collect() }
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, v: usize) -> usize {
        self.values[v]
    }

    /// `self o other`.
    pub fn compose(&self, other: &Endofunction) -> Endofunction {
        Endofunction { values: other.values.iter().map(|&v| self.values[v]).collect() }
    }

    /// `f^(k)`, with `f^(0)` the identity.
    pub fn power(&self, k: usize) -> Endofunction {
        (0..k).fold(Endofunction::identity(self.size()), |acc, _| self.compose(&acc))
    }

    /// One-based images as a word: digits when every image is at most 9,
    /// comma-separated otherwise.
    pub fn to_word(&self) -> String {
        if self.values.iter().all(|&v| v < 9) {
            self.values.iter().map(|v| char::from(b'1' + *v as u8)).collect()
        } else {
            self.values.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for Endofunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word())
    }
}

/// Parses one-based words: `"693163933"`, or separated by commas/whitespace
/// (`"9,8,5,7,7,6,3,2,6,4,5,9,5,4,8"`) when images exceed 9.
impl FromStr for Endofunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let images: Vec<usize> = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad image `{t}`"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit `{c}`"))))
                .collect::<Result<_>>()?
        };
        Self::from_one_based(&images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        let f: Endofunction = "693163933".parse().unwrap();
        assert_eq!(f.apply(0), 5);
        assert_eq!(f.to_string(), "693163933");
        let g: Endofunction = "2, 1, 3".parse().unwrap();
        assert_eq!(g.to_word(), "213");
        assert!("40".parse::<Endofunction>().is_err());
        assert!("3".parse::<Endofunction>().is_err());
        assert_eq!("".parse::<Endofunction>().unwrap().size(), 0);
        let big = Endofunction::new((0..12).rev().collect()).unwrap();
        assert_eq!(big.to_word().parse::<Endofunction>().unwrap(), big);
    }

    #[test]
    fn powers() {
        let swap: Endofunction = "21".parse().unwrap();
        assert_eq!(swap.power(2), Endofunction::identity(2));
        assert_eq!(swap.power(3), swap);
        let f: Endofunction = "11".parse().unwrap();
        assert_eq!(f.compose(&f), f);
    }
}
