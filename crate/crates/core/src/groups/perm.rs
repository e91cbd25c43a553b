use std::fmt;
use std::str::FromStr;

use super::element::GroupElement;

/// A permutation of `{1, ..., m}`; stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed permutation {input:?}: {reason}")]
pub struct ParsePermError {
    pub input: String,
    pub reason: &'static str,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// From 0-based images; `None` unless a bijection.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Perm { images })
    }

    /// From 1-based cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Option<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                let b = cyc[(k + 1) % cyc.len()];
                if a == 0 || b == 0 || a as usize > degree || b as usize > degree {
                    return None;
                }
                if std::mem::replace(&mut touched[a as usize - 1], true) {
                    return None;
                }
                images[a as usize - 1] = b - 1;
            }
        }
        Some(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// The same permutation on a larger point set, fixing the new points.
    pub fn extend_to(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Perm { images }
    }

    /// Shift to act on points `offset..offset+m` of a `degree`-point set.
    pub fn shifted(&self, offset: usize, degree: usize) -> Self {
        let mut out = Perm::identity(degree);
        for (i, &j) in self.images.iter().enumerate() {
            out.images[offset + i] = (offset as u32) + j;
        }
        out
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = vec![];
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cyc = vec![];
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i as u32 + 1);
                i = self.images[i] as usize;
            }
            out.push(cyc);
        }
        out
    }
}

impl GroupElement for Perm {
    fn mul(&self, rhs: &Self) -> Self {
        Perm {
            images: self.images.iter().map(|&i| rhs.images[i as usize]).collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Perm { images }
    }

    fn identity_like(&self) -> Self {
        Perm::identity(self.degree())
    }

    fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    fn compatible(&self, other: &Self) -> bool {
        self.degree() == other.degree()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse cycle notation such as `(1,2,3,4)(5,7)`. Spaces may separate
/// points as well. The degree is the largest point mentioned.
impl FromStr for Perm {
    type Err = ParsePermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_cycles(s).and_then(|cycles| {
            let degree = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
            let refs: Vec<&[u32]> = cycles.iter().map(Vec::as_slice).collect();
            Perm::from_cycles(degree.max(1), &refs).ok_or_else(|| ParsePermError {
                input: s.to_string(),
                reason: "point repeated",
            })
        })
    }
}

pub(crate) fn parse_cycles(s: &str) -> Result<Vec<Vec<u32>>, ParsePermError> {
    let bad = |reason| ParsePermError {
        input: s.to_string(),
        reason,
    };
    let mut out = vec![];
    let mut rest = s.trim();
    while !rest.is_empty() {
        rest = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = rest.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let body = &rest[..close];
        let pts = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| bad("point is not a positive integer")))
            .collect::<Result<Vec<_>, _>>()?;
        if pts.contains(&0) {
            return Err(bad("points are numbered from 1"));
        }
        if !pts.is_empty() {
            out.push(pts);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(out)
}
