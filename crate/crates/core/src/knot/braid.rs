use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A word in the Artin generators: letter `+i` is `σ_i`, `-i` is `σ_i⁻¹`,
/// with `1 <= |i| <= strands - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse("a braid needs at least one strand".into()));
        }
        for (pos, &l) in letters.iter().enumerate() {
            if l == 0 {
                return Err(Error::ZeroLetter(pos));
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    /// Strand permutation of the braid: `perm[i]` is where the strand starting
    /// at position `i` ends up.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[p] = strand at position p
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        for (p, &s) in at.iter().enumerate() {
            pos[s] = p;
        }
        pos
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    pub fn ensure_knot(&self) -> Result<()> {
        match self.components() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }

    /// Markov stabilization: one more strand, with `σ_{n}` appended.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i64;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// `g · β · g⁻¹` for a single letter `g`.
    pub fn conjugate(&self, g: i64) -> Result<BraidWord> {
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        letters.push(-g);
        BraidWord::new(self.strands, letters)
    }

    /// Cyclic rotation of the word, which is a conjugation.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Every crossing flipped.
    pub fn mirror(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| -l).collect() }
    }
}

/// Grammar: an optional `<n>:` strand-count prefix, then signed integers
/// separated by whitespace. Without a prefix the strand count is
/// `max |letter| + 1`.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let (strands, body) = match text.split_once(':') {
        Some((head, rest)) => {
            let head = head.trim();
            let n: usize = head
                .strip_prefix("n=")
                .unwrap_or(head)
                .parse()
                .map_err(|_| Error::Parse(format!("bad strand count {head:?}")))?;
            (Some(n), rest)
        }
        None => (None, text),
    };
    let letters = body
        .split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let strands = strands.unwrap_or_else(|| {
        letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1
    });
    BraidWord::new(strands, letters)
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}
