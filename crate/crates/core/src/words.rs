//! Words over `{0, a, 1}`, the four symmetry groups acting on them, and
//! brute-force orbit enumeration.
//!
//! Letters are ordered `0 < a < 1`; canonical representatives are orbit
//! minima in that order. Enumeration here is the reference the closed-form
//! counts in [`crate::counting`] are checked against, so it favours clarity
//! over speed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Zero,
    A,
    One,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::A => 'a',
            Letter::One => '1',
        }
    }

    /// Value of the letter at detuning `a`.
    pub fn value(self, a: f64) -> f64 {
        match self {
            Letter::Zero => 0.0,
            Letter::A => a,
            Letter::One => 1.0,
        }
    }

    fn swapped(self) -> Letter {
        match self {
            Letter::Zero => Letter::One,
            Letter::A => Letter::A,
            Letter::One => Letter::Zero,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    /// `{0, 1}`: labels of the stable equilibria.
    A2,
    /// `{0, a, 1}`.
    A3,
}

impl Alphabet {
    pub fn size(self) -> u32 {
        match self {
            Alphabet::A2 => 2,
            Alphabet::A3 => 3,
        }
    }

    pub fn letters(self) -> &'static [Letter] {
        match self {
            Alphabet::A2 => &[Letter::Zero, Letter::One],
            Alphabet::A3 => &[Letter::Zero, Letter::A, Letter::One],
        }
    }

    pub fn contains(self, letter: Letter) -> bool {
        self == Alphabet::A3 || letter != Letter::A
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::A2 => "a2",
            Alphabet::A3 => "a3",
        })
    }
}

impl FromStr for Alphabet {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a2" | "2" => Ok(Alphabet::A2),
            "a3" | "3" => Ok(Alphabet::A3),
            _ => Err(WordError::UnknownAlphabet(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("words must have at least one letter")]
    Empty,
    #[error("invalid letter {0:?}; expected '0', 'a' or '1'")]
    InvalidLetter(char),
    #[error("letter 'a' is not in the two-letter alphabet")]
    LetterOutsideAlphabet,
    #[error("unknown alphabet {0:?}")]
    UnknownAlphabet(String),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("enumerating {size}^{n} words exceeds the 2^30 guard")]
    TooLarge { size: u32, n: usize },
}

/// A finite word tagged with its alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet: Alphabet) -> Result<Self, WordError> {
        if letters.is_empty() {
            return Err(WordError::Empty);
        }
        if !letters.iter().all(|&l| alphabet.contains(l)) {
            return Err(WordError::LetterOutsideAlphabet);
        }
        Ok(Word { letters, alphabet })
    }

    /// Parses `s` as a word over `alphabet`.
    pub fn parse_in(s: &str, alphabet: Alphabet) -> Result<Self, WordError> {
        let letters = s
            .chars()
            .map(|c| match c {
                '0' => Ok(Letter::Zero),
                'a' => Ok(Letter::A),
                '1' => Ok(Letter::One),
                other => Err(WordError::InvalidLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Word::new(letters, alphabet)
    }

    /// Constant word of length `n`.
    pub fn constant(letter: Letter, n: usize, alphabet: Alphabet) -> Result<Self, WordError> {
        Word::new(vec![letter; n], alphabet)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Re-tags the word with `alphabet`, failing if a letter does not fit.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Self, WordError> {
        Word::new(self.letters.clone(), alphabet)
    }

    /// Whether the word avoids the letter `a`.
    pub fn is_binary(&self) -> bool {
        !self.letters.contains(&Letter::A)
    }

    /// The root `w|_a` of the decoupled system labelled by this word.
    pub fn values(&self, a: f64) -> Vec<f64> {
        self.letters.iter().map(|l| l.value(a)).collect()
    }

    /// One-step left rotation, `(r(w))_i = w_{1 + mod(i, n)}`.
    pub fn rotate(&self) -> Word {
        self.rotate_by(1)
    }

    /// `k`-fold left rotation.
    pub fn rotate_by(&self, k: usize) -> Word {
        let mut letters = self.letters.clone();
        let n = letters.len();
        letters.rotate_left(k % n);
        Word {
            letters,
            alphabet: self.alphabet,
        }
    }

    pub fn reflect(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word {
            letters,
            alphabet: self.alphabet,
        }
    }

    /// Swaps `0 <-> 1`, fixing `a`.
    pub fn permute_values(&self) -> Word {
        Word {
            letters: self.letters.iter().map(|l| l.swapped()).collect(),
            alphabet: self.alphabet,
        }
    }

    /// Smallest `m | n` such that the word is its `m`-prefix repeated.
    pub fn primitive_period(&self) -> usize {
        let n = self.len();
        (1..=n)
            .filter(|m| n.is_multiple_of(*m))
            .find(|&m| (m..n).all(|i| self.letters[i] == self.letters[i - m]))
            .unwrap_or(n)
    }

    /// The word of length `primitive_period()` whose repetition is `self`.
    pub fn primitive_root(&self) -> Word {
        let m = self.primitive_period();
        Word {
            letters: self.letters[..m].to_vec(),
            alphabet: self.alphabet,
        }
    }

    /// Every image of the word under the elements of `group`, one per group
    /// element (so duplicates appear for words with a nontrivial stabilizer).
    ///
    /// Element order: `r^i`, then `s r^i = r^i ∘ s`, then `π r^i`, then
    /// `π s r^i = r^i ∘ s ∘ π`, each for `i = 0..n`.
    pub fn images(&self, group: GroupKind) -> Vec<Word> {
        let n = self.len();
        let mut bases = vec![self.clone()];
        if group.has_reflection() {
            bases.push(self.reflect());
        }
        if group.has_permutation() {
            let swapped: Vec<Word> = bases.iter().map(Word::permute_values).collect();
            bases.extend(swapped);
        }
        let mut out = Vec::with_capacity(group.order(n));
        for base in &bases {
            for i in 0..n {
                out.push(base.rotate_by(i));
            }
        }
        out
    }

    /// Minimum of the orbit of the word under `group`.
    pub fn canonical(&self, group: GroupKind) -> Word {
        self.images(group)
            .into_iter()
            .min()
            .expect("orbit of a nonempty word is nonempty")
    }

    /// The word, repeated `times` times.
    pub fn repeat(&self, times: usize) -> Word {
        Word {
            letters: self.letters.repeat(times),
            alphabet: self.alphabet,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

/// Parses into the three-letter alphabet; use [`Word::parse_in`] to pick
/// another tag.
impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse_in(s, Alphabet::A3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    /// `C_n`: rotations.
    Cyclic,
    /// `D_n`: rotations and reflections.
    Dihedral,
    /// `C_n^Π`: rotations, optionally composed with the value swap.
    CyclicPi,
    /// `D_n^Π`: the full symmetry group.
    DihedralPi,
}

impl GroupKind {
    pub const ALL: [GroupKind; 4] = [
        GroupKind::Cyclic,
        GroupKind::Dihedral,
        GroupKind::CyclicPi,
        GroupKind::DihedralPi,
    ];

    pub fn has_reflection(self) -> bool {
        matches!(self, GroupKind::Dihedral | GroupKind::DihedralPi)
    }

    pub fn has_permutation(self) -> bool {
        matches!(self, GroupKind::CyclicPi | GroupKind::DihedralPi)
    }

    /// Number of group elements acting on words of length `n`.
    pub fn order(self, n: usize) -> usize {
        match self {
            GroupKind::Cyclic => n,
            GroupKind::Dihedral | GroupKind::CyclicPi => 2 * n,
            GroupKind::DihedralPi => 4 * n,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Cyclic => "c",
            GroupKind::Dihedral => "d",
            GroupKind::CyclicPi => "cpi",
            GroupKind::DihedralPi => "dpi",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts `c`, `d`, `cpi`, `dpi`, optionally with the word length embedded
/// as in `c3` or `d6pi`. Use [`parse_group`] to also recover that length.
impl FromStr for GroupKind {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group(s).map(|(g, _)| g)
    }
}

/// Parses a group name, returning the group and the length written into the
/// name, if any (`d6pi` yields `(DihedralPi, Some(6))`).
pub fn parse_group(s: &str) -> Result<(GroupKind, Option<usize>), WordError> {
    let lower = s.to_ascii_lowercase();
    let bad = || WordError::UnknownGroup(s.to_string());
    let mut chars = lower.chars();
    let dihedral = match chars.next() {
        Some('c') => false,
        Some('d') => true,
        _ => return Err(bad()),
    };
    let rest: String = chars.collect();
    let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
    let suffix = &rest[digits.len()..];
    let pi = match suffix {
        "" => false,
        "pi" | "_pi" | "^pi" => true,
        _ => return Err(bad()),
    };
    let n = if digits.is_empty() {
        None
    } else {
        Some(digits.parse::<usize>().map_err(|_| bad())?)
    };
    let group = match (dihedral, pi) {
        (false, false) => GroupKind::Cyclic,
        (true, false) => GroupKind::Dihedral,
        (false, true) => GroupKind::CyclicPi,
        (true, true) => GroupKind::DihedralPi,
    };
    Ok((group, n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    /// Minimum member.
    pub representative: Word,
    pub members: BTreeSet<Word>,
}

impl OrbitClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Upper bound on `n·log2(k)` accepted by [`enumerate_orbits`].
pub const ENUMERATION_BITS_LIMIT: f64 = 30.0;

/// Options for [`enumerate_orbits_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub lyndon_only: bool,
    /// Skip the `2^30` word-count guard.
    pub allow_large: bool,
}

/// All words of length `n` over `alphabet`, in lexicographic order.
pub fn all_words(n: usize, alphabet: Alphabet) -> impl Iterator<Item = Word> {
    let letters = alphabet.letters();
    let k = letters.len();
    let total = k.pow(n as u32);
    (0..total).map(move |mut index| {
        let mut buf = vec![letters[0]; n];
        for slot in buf.iter_mut().rev() {
            *slot = letters[index % k];
            index /= k;
        }
        Word {
            letters: buf,
            alphabet,
        }
    })
}

pub fn enumerate_orbits(
    n: usize,
    alphabet: Alphabet,
    group: GroupKind,
    lyndon_only: bool,
) -> Result<Vec<OrbitClass>, WordError> {
    enumerate_orbits_with(
        n,
        alphabet,
        group,
        EnumerationOptions {
            lyndon_only,
            allow_large: false,
        },
    )
}

/// Partitions the words of length `n` (only the aperiodic ones when
/// `lyndon_only`) into orbits of `group`, sorted by representative.
pub fn enumerate_orbits_with(
    n: usize,
    alphabet: Alphabet,
    group: GroupKind,
    options: EnumerationOptions,
) -> Result<Vec<OrbitClass>, WordError> {
    if n == 0 {
        return Err(WordError::Empty);
    }
    let bits = n as f64 * f64::from(alphabet.size()).log2();
    if bits > ENUMERATION_BITS_LIMIT && !options.allow_large {
        return Err(WordError::TooLarge {
            size: alphabet.size(),
            n,
        });
    }
    let keyed: Vec<(Word, Word)> = all_words(n, alphabet)
        .par_bridge()
        .filter(|w| !options.lyndon_only || w.primitive_period() == n)
        .map(|w| (w.canonical(group), w))
        .collect();
    let mut buckets: BTreeMap<Word, BTreeSet<Word>> = BTreeMap::new();
    for (rep, w) in keyed {
        buckets.entry(rep).or_default().insert(w);
    }
    Ok(buckets
        .into_iter()
        .map(|(representative, members)| OrbitClass {
            representative,
            members,
        })
        .collect())
}

/// Canonical representatives of the aperiodic `D_n^Π` classes, i.e. the
/// Lyndon permuted bracelets of length `n`.
pub fn representatives(n: usize, alphabet: Alphabet) -> Result<Vec<Word>, WordError> {
    representatives_for(n, alphabet, GroupKind::DihedralPi, true)
}

pub fn representatives_for(
    n: usize,
    alphabet: Alphabet,
    group: GroupKind,
    lyndon_only: bool,
) -> Result<Vec<Word>, WordError> {
    Ok(enumerate_orbits(n, alphabet, group, lyndon_only)?
        .into_iter()
        .map(|c| c.representative)
        .collect())
}
