//! Permutations acting on the right.
//!
//! `p.then(q)` is the permutation "first `p`, then `q`", so that for loop
//! translations `R(x).then(R(y))` sends `z` to `(z*x)*y`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    image: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            image: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &i in &image {
            if i >= n || seen[i] {
                return Err(Error::Shape(format!("not a permutation of 0..{n}")));
            }
            seen[i] = true;
        }
        Ok(Perm {
            image: image.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Builds a permutation from images already known to be a bijection.
    pub(crate) fn from_images_unchecked(image: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = image.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i as u32 == v)
        });
        Perm { image }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.image[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            image: self.image.iter().map(|&i| other.image[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Perm { image: inv }
    }

    pub fn pow(&self, mut e: i64) -> Perm {
        let mut base = if e < 0 {
            e = -e;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycle lengths in ascending order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }

    pub fn fixed_points(&self) -> usize {
        self.image.iter().enumerate().filter(|(i, &v)| *i as u32 == v).count()
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.image
            .iter()
            .enumerate()
            .find(|(i, &v)| *i as u32 != v)
            .map(|(i, _)| i)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One-line image array, e.g. `p: 1 2 0`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("p:")?;
        for v in &self.image {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().strip_prefix("p:").ok_or_else(|| Error::Parse {
            line: 1,
            msg: "permutation must start with 'p:'".into(),
        })?;
        let image = body
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|e| Error::Parse {
                    line: 1,
                    msg: format!("bad point {t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(image)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_left_to_right() {
        let p = Perm::from_images(vec![1, 2, 0]).unwrap();
        let q = Perm::from_images(vec![0, 2, 1]).unwrap();
        // 0 -p-> 1 -q-> 2
        assert_eq!(p.then(&q).apply(0), 2);
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.order(), 3);
        assert_eq!(p.pow(3), Perm::identity(3));
        assert_eq!(p.pow(-1), p.inverse());
    }

    #[test]
    fn display_roundtrip() {
        let p = Perm::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(p.to_string(), "p: 1 2 0");
        assert_eq!("p: 1 2 0".parse::<Perm>().unwrap(), p);
        assert!("p: 1 1 0".parse::<Perm>().is_err());
        assert!("1 2 0".parse::<Perm>().is_err());
    }

    #[test]
    fn cycle_type_counts_fixed_points() {
        let p = Perm::from_images(vec![1, 0, 2, 4, 5, 3]).unwrap();
        assert_eq!(p.cycle_type(), vec![1, 2, 3]);
        assert_eq!(p.order(), 6);
        assert_eq!(p.fixed_points(), 1);
        assert_eq!(p.first_moved(), Some(0));
    }
}
