use std::fmt;

use crate::error::Error;

/// Sign of a letter: positive or negative half twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn from_int(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }
}

/// A band generator `σ_{i,j}^{±1}` with `1 ≤ i < j`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandGenerator {
    i: u16,
    j: u16,
    sign: Sign,
}

impl BandGenerator {
    pub fn new(i: usize, j: usize, sign: Sign) -> Result<Self, Error> {
        if i == 0 || i >= j {
            return Err(Error::BadGenerator { i, j });
        }
        Ok(BandGenerator {
            i: i as u16,
            j: j as u16,
            sign,
        })
    }

    pub fn positive(i: usize, j: usize) -> Result<Self, Error> {
        Self::new(i, j, Sign::Positive)
    }

    pub fn negative(i: usize, j: usize) -> Result<Self, Error> {
        Self::new(i, j, Sign::Negative)
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn inverse(&self) -> BandGenerator {
        BandGenerator {
            sign: self.sign.flip(),
            ..*self
        }
    }
}

impl fmt::Display for BandGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Positive => write!(f, "s({},{})", self.i, self.j),
            Sign::Negative => write!(f, "s({},{})^-1", self.i, self.j),
        }
    }
}

/// A braid word in band generators on `n` strands.
///
/// Letters are read left to right. The word is never reduced implicitly, so
/// two different words for the same braid stay distinguishable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BandWord {
    n: usize,
    letters: Vec<BandGenerator>,
}

impl BandWord {
    pub fn identity(n: usize) -> Result<Self, Error> {
        Self::new(n, Vec::new())
    }

    pub fn new(n: usize, letters: Vec<BandGenerator>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroStrands);
        }
        if let Some(g) = letters.iter().find(|g| g.j() > n) {
            return Err(Error::IndexOutOfRange {
                index: g.j(),
                strands: n,
            });
        }
        Ok(BandWord { n, letters })
    }

    /// Builds a word from `(i, j, sign)` triples, panicking on malformed
    /// input. Meant for tests and fixed tables.
    pub fn from_triples(n: usize, triples: &[(usize, usize, i64)]) -> Self {
        let letters = triples
            .iter()
            .map(|&(i, j, s)| {
                BandGenerator::new(i, j, Sign::from_int(s).expect("sign must be ±1"))
                    .expect("valid generator")
            })
            .collect();
        BandWord::new(n, letters).expect("valid word")
    }

    pub(crate) fn from_parts_unchecked(n: usize, letters: Vec<BandGenerator>) -> Self {
        debug_assert!(letters.iter().all(|g| g.j() <= n));
        BandWord { n, letters }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BandGenerator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|g| g.sign().is_positive())
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.sign().value()).sum()
    }

    pub fn positive_count(&self) -> usize {
        self.letters.iter().filter(|g| g.sign().is_positive()).count()
    }

    pub fn negative_count(&self) -> usize {
        self.len() - self.positive_count()
    }

    /// The self-linking number `-n + exp` of the closure.
    pub fn self_linking(&self) -> i64 {
        -(self.n as i64) + self.exponent_sum()
    }

    pub fn inverse(&self) -> BandWord {
        BandWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &BandWord) -> Result<BandWord, Error> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BandWord { n: self.n, letters })
    }

    pub fn pow(&self, k: i64) -> BandWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BandWord { n: self.n, letters }
    }

    /// `δ = σ_{n-1,n} σ_{n-2,n-1} ⋯ σ_{1,2}`.
    pub fn delta(n: usize) -> Result<BandWord, Error> {
        let letters = (1..n)
            .rev()
            .map(|i| BandGenerator::positive(i, i + 1))
            .collect::<Result<Vec<_>, _>>()?;
        BandWord::new(n, letters)
    }

    pub fn delta_power(n: usize, k: i64) -> Result<BandWord, Error> {
        Ok(Self::delta(n)?.pow(k))
    }

    /// `g⁻¹ · w · g`.
    pub fn conjugate(&self, g: &BandWord) -> Result<BandWord, Error> {
        g.inverse().concat(self)?.concat(g)
    }
}

impl fmt::Display for BandWord {
    /// Prints in the input grammar, merging runs of equal letters into powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut idx = 0;
        while idx < self.letters.len() {
            let g = self.letters[idx];
            let mut run = 1;
            while idx + run < self.letters.len() && self.letters[idx + run] == g {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let exp = run as i64 * g.sign().value();
            if exp == 1 {
                write!(f, "s({},{})", g.i(), g.j())?;
            } else {
                write!(f, "s({},{})^{}", g.i(), g.j(), exp)?;
            }
            idx += run;
        }
        Ok(())
    }
}

/// An Artin generator `σ_k^{±1}`, `1 ≤ k ≤ n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArtinLetter {
    pub index: u16,
    pub sign: Sign,
}

impl ArtinLetter {
    /// Signed-integer encoding used by handle reduction: `+k` or `-k`.
    pub fn signed(&self) -> i16 {
        self.index as i16 * self.sign.value() as i16
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    n: usize,
    letters: Vec<ArtinLetter>,
}

impl ArtinWord {
    pub fn new(n: usize, letters: Vec<ArtinLetter>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroStrands);
        }
        if let Some(l) = letters
            .iter()
            .find(|l| l.index == 0 || l.index as usize >= n)
        {
            return Err(Error::IndexOutOfRange {
                index: l.index as usize,
                strands: n,
            });
        }
        Ok(ArtinWord { n, letters })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.letters
    }

    pub fn signed_letters(&self) -> Vec<i16> {
        self.letters.iter().map(ArtinLetter::signed).collect()
    }

    /// Each `σ_k` becomes the band generator `σ_{k,k+1}`.
    pub fn to_band_word(&self) -> BandWord {
        let letters = self
            .letters
            .iter()
            .map(|l| BandGenerator {
                i: l.index,
                j: l.index + 1,
                sign: l.sign,
            })
            .collect();
        BandWord::from_parts_unchecked(self.n, letters)
    }
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| match l.sign {
                Sign::Positive => format!("a{}", l.index),
                Sign::Negative => format!("a{}^-1", l.index),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Expands every band letter into Artin generators:
/// `σ_{i,j} = (σ_{j-1} ⋯ σ_{i+1}) σ_i (σ_{j-1} ⋯ σ_{i+1})⁻¹`.
pub fn band_to_artin(w: &BandWord) -> ArtinWord {
    let mut letters = Vec::new();
    for g in w.letters() {
        let (i, j) = (g.i() as u16, g.j() as u16);
        for k in (i + 1..j).rev() {
            letters.push(ArtinLetter {
                index: k,
                sign: Sign::Positive,
            });
        }
        letters.push(ArtinLetter {
            index: i,
            sign: g.sign(),
        });
        for k in i + 1..j {
            letters.push(ArtinLetter {
                index: k,
                sign: Sign::Negative,
            });
        }
    }
    ArtinWord {
        n: w.strands(),
        letters,
    }
}
