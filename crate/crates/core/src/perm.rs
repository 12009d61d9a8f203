//! Permutations of a finite point set with cycle-notation I/O.
//!
//! Points are 0-based `usize` in the API and 1-based in cycle notation.
//! Permutations act on the right: `omega^g = g.apply(omega)`, and
//! `compose(p, q)` applies `p` first, so `omega^(pq) = (omega^p)^q`.

use crate::error::{Error, Result};
use std::fmt;

/// A permutation of `{0, .., degree-1}`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    /// Identity permutation of the given degree.
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= u16::MAX as usize, "degree too large");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from an image vector; rejects non-bijections.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree > u16::MAX as usize {
            return Err(Error::DegreeTooLarge {
                degree,
                limit: u16::MAX as usize,
            });
        }
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &img in images {
            if img >= degree {
                return Err(Error::PointOutOfRange {
                    point: img,
                    degree,
                });
            }
            if seen[img] {
                return Err(Error::InvalidPermutation(format!(
                    "point {} occurs twice in image list",
                    img + 1
                )));
            }
            seen[img] = true;
            out.push(img as u16);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of the given degree from 0-based disjoint cycles.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        let mut perm = Permutation::identity(degree);
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from >= degree {
                    return Err(Error::PointOutOfRange {
                        point: from,
                        degree,
                    });
                }
                if touched[from] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} occurs in two cycles",
                        from + 1
                    )));
                }
                touched[from] = true;
                perm.images[from] = to as u16;
            }
        }
        // Re-validate: overlapping cycles could have broken bijectivity.
        let images: Vec<usize> = perm.images.iter().map(|&x| x as usize).collect();
        Permutation::from_images(&images)
    }

    /// Parses 1-based cycle notation such as `(1,2,3)(4,5)`; `()` is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty permutation text".into()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' at `{rest}`")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse("unbalanced '(' in cycle".into()))?;
            let body = &rest[1..close];
            rest = &rest[close + 1..];
            if body.is_empty() {
                continue; // `()` denotes the identity cycle
            }
            let mut cycle = Vec::new();
            for part in body.split(',') {
                let value: usize = part
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point `{part}`")))?;
                if value == 0 {
                    return Err(Error::Parse("cycle points are 1-based".into()));
                }
                if value > degree {
                    return Err(Error::PointOutOfRange {
                        point: value,
                        degree,
                    });
                }
                cycle.push(value - 1);
            }
            cycles.push(cycle);
        }
        Permutation::from_cycles(&cycles, degree)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a point under the right action.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `compose(p, q)` applies `p` first: `omega^(pq) = (omega^p)^q`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "compose requires equal degrees"
        );
        Permutation {
            images: self
                .images
                .iter()
                .map(|&mid| other.images[mid as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Power `self^k` for `k >= 0`.
    pub fn pow(&self, k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// Conjugate `self^s = s^-1 * self * s`; relabels points by `s`.
    pub fn conjugate(&self, s: &Permutation) -> Permutation {
        assert_eq!(self.degree(), s.degree(), "conjugate requires equal degrees");
        let mut images = vec![0u16; self.images.len()];
        for (i, &gi) in self.images.iter().enumerate() {
            images[s.images[i] as usize] = s.images[gi as usize];
        }
        Permutation { images }
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    /// Smallest point not fixed, if any.
    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i)
    }

    pub fn moved_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i)
            .collect()
    }

    /// Lengths of all cycles, including fixed points, sorted descending.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles(true).iter().map(|c| c.len()).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Cycle decomposition; cycles start at their smallest point and are
    /// ordered by that point. Fixed points included only when requested.
    pub fn cycles(&self, include_fixed: bool) -> Vec<Vec<usize>> {
        let degree = self.degree();
        let mut seen = vec![false; degree];
        let mut cycles = Vec::new();
        for start in 0..degree {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut point = self.apply(start);
            while point != start {
                seen[point] = true;
                cycle.push(point);
                point = self.apply(point);
            }
            if cycle.len() > 1 || include_fixed {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Extends the permutation to a larger degree, fixing the new points.
    pub fn extend_to(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u16..degree as u16);
        Permutation { images }
    }

    /// Relabels by an offset: point `i` becomes `i + shift` inside degree `degree`.
    pub fn shift(&self, shift: usize, degree: usize) -> Permutation {
        assert!(shift + self.degree() <= degree);
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + shift] = (x as usize + shift) as u16;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    /// 1-based disjoint cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles(false);
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (pos, point) in cycle.iter().enumerate() {
                if pos > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", point + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn compose_applies_left_factor_first() {
        let left = p("(1,2,3)", 3);
        let right = p("(1,2)", 3);
        // omega^(pq) = (omega^p)^q: 1->2->1, 2->3->3, 3->1->2.
        assert_eq!(left.compose(&right).to_string(), "(2,3)");
        assert_eq!(right.compose(&left).to_string(), "(1,3)");
    }

    #[test]
    fn conjugation_relabels_points() {
        let g = p("(1,2)", 3);
        let s = p("(2,3)", 3);
        assert_eq!(g.conjugate(&s).to_string(), "(1,3)");
        let direct = s.inverse().compose(&g).compose(&s);
        assert_eq!(g.conjugate(&s), direct);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let g = p("(1,2,3)(4,5)", 6);
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.inverse().compose(&g).is_identity());
    }

    #[test]
    fn parse_and_print_round_trip() {
        for text in ["()", "(1,2)", "(1,2,3)(4,5)", "(2,4)(3,6,5)"] {
            let perm = p(text, 6);
            assert_eq!(p(&perm.to_string(), 6), perm);
        }
        assert_eq!(p("()", 4), Permutation::identity(4));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(Permutation::parse_cycles("(1,2", 4).is_err());
        assert!(Permutation::parse_cycles("(0,1)", 4).is_err());
        assert!(Permutation::parse_cycles("(1,5)", 4).is_err());
        assert!(Permutation::parse_cycles("(1,2)(2,3)", 4).is_err());
        assert!(Permutation::parse_cycles("", 4).is_err());
        assert!(Permutation::parse_cycles("(1,x)", 4).is_err());
    }

    #[test]
    fn from_images_validates_bijectivity() {
        assert!(Permutation::from_images(&[0, 0, 1]).is_err());
        assert!(Permutation::from_images(&[0, 3]).is_err());
        assert!(Permutation::from_images(&[1, 0, 2]).is_ok());
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        assert_eq!(p("(1,2,3)(4,5)", 5).order(), 6);
        assert_eq!(p("()", 5).order(), 1);
        assert_eq!(p("(1,2,3,4,5,6,7)", 7).order(), 7);
    }

    #[test]
    fn conjugate_preserves_cycle_type() {
        let g = p("(1,2,3)(4,5)", 6);
        let s = p("(1,6,2)(3,4)", 6);
        assert_eq!(g.conjugate(&s).cycle_lengths(), g.cycle_lengths());
    }
}
