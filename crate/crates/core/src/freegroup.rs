//! Word algebra in finitely generated free groups.
//!
//! Words are kept freely reduced at all times; conjugacy goes through the
//! cyclic normal form (a cyclically reduced core in its lexicographically
//! least rotation plus a conjugator).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Sign of a letter: a generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A single letter `x_i` or `x_i^-1`; generator indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: u32,
    pub sign: Sign,
}

impl Letter {
    pub fn new(gen: u32, sign: Sign) -> Self {
        debug_assert!(gen >= 1);
        Letter { gen, sign }
    }

    pub fn pos(gen: u32) -> Self {
        Letter::new(gen, Sign::Plus)
    }

    pub fn neg(gen: u32) -> Self {
        Letter::new(gen, Sign::Minus)
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            sign: self.sign.flip(),
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "x{}", self.gen),
            Sign::Minus => write!(f, "x{}^-1", self.gen),
        }
    }
}

/// A freely reduced word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    /// Single-generator word.
    pub fn generator(gen: u32) -> Word {
        Word {
            letters: vec![Letter::pos(gen)],
        }
    }

    /// Freely reduce a raw letter sequence.
    pub fn reduce(raw: impl IntoIterator<Item = Letter>) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for l in raw {
            match stack.last() {
                Some(&top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word { letters: stack }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self · other · self⁻¹`.
    pub fn conjugate(&self, other: &Word) -> Word {
        self.concat(other).concat(&self.invert())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n >= 0 { self.clone() } else { self.invert() };
        let mut acc = Word::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.concat(&base);
        }
        acc
    }

    /// Largest generator index appearing in the word (0 for the identity).
    pub fn max_generator(&self) -> u32 {
        self.letters.iter().map(|l| l.gen).max().unwrap_or(0)
    }

    /// `(core, conjugator)` with `self = conjugator · core · conjugator⁻¹`
    /// exactly (reading the core in its canonical rotation), and `core`
    /// cyclically reduced.
    pub fn cyclic_reduce(&self) -> (CyclicWord, Word) {
        let mut lo = 0usize;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo].cancels(self.letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        let stripped = &self.letters[lo..hi];
        let r = canonical_rotation(stripped);
        // stripped = u · canonical · u⁻¹ with u the prefix before the
        // canonical rotation point, so the full conjugator is prefix · u.
        let mut conj_letters = self.letters[..lo].to_vec();
        conj_letters.extend_from_slice(&stripped[..r]);
        let conj = Word {
            letters: conj_letters,
        };
        let n = stripped.len();
        let rotated = (0..n).map(|i| stripped[(r + i) % n]).collect();
        let core = CyclicWord { letters: rotated };
        debug_assert_eq!(conj.conjugate(&core.to_word()), *self);
        (core, conj)
    }

    /// A conjugator `t` with `self = t · other · t⁻¹`, when one exists.
    /// The returned witness always verifies exactly.
    pub fn conjugator_to(&self, other: &Word) -> Option<Word> {
        let (c1, t1) = self.cyclic_reduce();
        let (c2, t2) = other.cyclic_reduce();
        if c1 != c2 {
            return None;
        }
        // self = t1·c·t1⁻¹ and other = t2·c·t2⁻¹ share the canonical core c.
        let t = t1.concat(&t2.invert());
        debug_assert_eq!(t.conjugate(other), *self);
        Some(t)
    }

    pub fn is_conjugate(&self, other: &Word) -> bool {
        self.conjugator_to(other).is_some()
    }

    /// `(root, exponent)` with `self = root^exponent` and `root` primitive.
    ///
    /// Returns `None` on the trivial word, which is every power at once.
    pub fn primitive_root(&self) -> Option<(Word, u32)> {
        if self.is_empty() {
            return None;
        }
        let (core, conj) = self.cyclic_reduce();
        let n = core.len();
        debug_assert!(n > 0);
        for p in 1..=n {
            if n % p != 0 {
                continue;
            }
            if (0..n).all(|i| core.letters[i] == core.letters[i % p]) {
                let root_core = Word {
                    letters: core.letters[..p].to_vec(),
                };
                let root = conj.concat(&root_core).concat(&conj.invert());
                let e = (n / p) as u32;
                debug_assert_eq!(root.pow(e as i64), *self);
                return Some((root, e));
            }
        }
        unreachable!("period n always matches");
    }

    pub fn commutes_with(&self, other: &Word) -> bool {
        self.concat(other) == other.concat(self)
    }

    /// Decompose `self = a^k b^l` over the first two generators, if possible.
    pub fn product_conjugacy_decompose(&self) -> Option<(i64, i64)> {
        let mut k: i64 = 0;
        let mut l: i64 = 0;
        let mut idx = 0usize;
        while idx < self.letters.len() && self.letters[idx].gen == 1 {
            k += self.letters[idx].sign.as_i8() as i64;
            idx += 1;
        }
        while idx < self.letters.len() && self.letters[idx].gen == 2 {
            l += self.letters[idx].sign.as_i8() as i64;
            idx += 1;
        }
        if idx == self.letters.len() {
            Some((k, l))
        } else {
            None
        }
    }

    /// Render in the text form `x1 x2^-1`; the identity is `e`.
    pub fn display(&self) -> String {
        if self.is_empty() {
            return String::from("e");
        }
        let mut out = String::new();
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push('x');
            out.push_str(itoa(l.gen).as_str());
            if l.sign == Sign::Minus {
                out.push_str("^-1");
            }
        }
        out
    }

    /// Parse the text form (`x1 x2^-1 …`, `e` for the identity). The input
    /// need not be reduced; the result always is.
    pub fn parse(text: &str) -> Result<Word, WordParseError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let rest = tok
                .strip_prefix('x')
                .ok_or_else(|| WordParseError::bad(tok))?;
            let (num, sign) = match rest.strip_suffix("^-1") {
                Some(n) => (n, Sign::Minus),
                None => match rest.strip_suffix("^1") {
                    Some(n) => (n, Sign::Plus),
                    None => (rest, Sign::Plus),
                },
            };
            let gen: u32 = num.parse().map_err(|_| WordParseError::bad(tok))?;
            if gen == 0 {
                return Err(WordParseError::bad(tok));
            }
            letters.push(Letter::new(gen, sign));
        }
        Ok(Word::reduce(letters))
    }
}

fn itoa(mut n: u32) -> String {
    if n == 0 {
        return String::from("0");
    }
    let mut buf = Vec::new();
    while n > 0 {
        buf.push(b'0' + (n % 10) as u8);
        n /= 10;
    }
    buf.reverse();
    String::from_utf8(buf).unwrap()
}

/// Error from [`Word::parse`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordParseError {
    pub token: String,
}

impl WordParseError {
    fn bad(tok: &str) -> Self {
        WordParseError {
            token: String::from(tok),
        }
    }
}

impl fmt::Display for WordParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unrecognized word token `{}`", self.token)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WordParseError {}

/// A cyclically reduced word in its canonical (lexicographically least)
/// rotation. Two words are conjugate iff their cyclic forms are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyc[{}]", Word { letters: self.letters.clone() }.display())
    }
}

/// Index of the lexicographically least rotation of a letter sequence.
fn canonical_rotation(letters: &[Letter]) -> usize {
    let n = letters.len();
    if n == 0 {
        return 0;
    }
    let mut best = 0usize;
    for k in 1..n {
        for i in 0..n {
            let a = letters[(k + i) % n];
            let b = letters[(best + i) % n];
            match a.cmp(&b) {
                core::cmp::Ordering::Less => {
                    best = k;
                    break;
                }
                core::cmp::Ordering::Greater => break,
                core::cmp::Ordering::Equal => continue,
            }
        }
    }
    best
}

impl CyclicWord {
    /// The cyclic class of an arbitrary reduced word.
    pub fn of(word: &Word) -> CyclicWord {
        word.cyclic_reduce().0
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// A representative reduced word (the canonical rotation read linearly).
    pub fn to_word(&self) -> Word {
        Word {
            letters: self.letters.clone(),
        }
    }

    /// The cyclic class of the inverse.
    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::of(&self.to_word().invert())
    }

    pub fn display(&self) -> String {
        self.to_word().display()
    }
}

/// An endomorphism of the rank-`n` free group, given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoSpec {
    rank: u32,
    images: Vec<Word>,
}

impl EndoSpec {
    pub fn new(rank: u32, images: Vec<Word>) -> Result<EndoSpec, EndoSpecError> {
        if images.len() != rank as usize {
            return Err(EndoSpecError::WrongImageCount {
                rank,
                got: images.len(),
            });
        }
        if let Some(w) = images.iter().find(|w| w.max_generator() > rank) {
            return Err(EndoSpecError::GeneratorOutOfRange {
                rank,
                word: w.clone(),
            });
        }
        Ok(EndoSpec { rank, images })
    }

    pub fn identity(rank: u32) -> EndoSpec {
        EndoSpec {
            rank,
            images: (1..=rank).map(Word::generator).collect(),
        }
    }

    /// The inner endomorphism `g ↦ c·g·c⁻¹`.
    pub fn inner(rank: u32, c: &Word) -> EndoSpec {
        EndoSpec {
            rank,
            images: (1..=rank)
                .map(|i| c.conjugate(&Word::generator(i)))
                .collect(),
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image_of_generator(&self, gen: u32) -> &Word {
        &self.images[(gen - 1) as usize]
    }

    /// Apply the substitution to a word.
    pub fn apply(&self, w: &Word) -> Word {
        let mut acc = Word::identity();
        for l in w.letters() {
            let img = self.image_of_generator(l.gen);
            let piece = match l.sign {
                Sign::Plus => img.clone(),
                Sign::Minus => img.invert(),
            };
            acc = acc.concat(&piece);
        }
        acc
    }

    /// `self` after `first`: the substitution sending `g` to
    /// `self.apply(first.apply(g))`.
    pub fn compose_after(&self, first: &EndoSpec) -> EndoSpec {
        debug_assert_eq!(self.rank, first.rank);
        EndoSpec {
            rank: self.rank,
            images: first.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| *w == Word::generator(i as u32 + 1))
    }

    /// Detect whether a generator-conjugating endomorphism is inner, and
    /// return the (unique, for rank ≥ 2) global conjugator if so.
    ///
    /// Requires rank ≥ 2 and every image conjugate to its generator;
    /// violations are reported as errors rather than `None`.
    pub fn detect_inner(&self) -> Result<Option<Word>, DetectInnerError> {
        if self.rank < 2 {
            return Err(DetectInnerError::RankTooSmall { rank: self.rank });
        }
        let mut witnesses = Vec::with_capacity(self.rank as usize);
        for i in 1..=self.rank {
            match self.image_of_generator(i).conjugator_to(&Word::generator(i)) {
                Some(t) => witnesses.push(t),
                None => {
                    return Err(DetectInnerError::NotGeneratorConjugating { generator: i })
                }
            }
        }
        // Solutions of image₁ = c·g₁·c⁻¹ form the coset  t₁·⟨g₁⟩.
        let c0 = &witnesses[0];
        // Pin the exponent m from the second generator's equation:
        // c0⁻¹ · image₂ · c0 must equal g₁^m · g₂ · g₁^-m.
        let u = c0.invert().concat(self.image_of_generator(2)).concat(c0);
        let m = match exponent_of_sandwich(&u, 1, 2) {
            Some(m) => m,
            None => return Ok(None),
        };
        let c = c0.concat(&Word::generator(1).pow(m));
        for i in 1..=self.rank {
            if c.conjugate(&Word::generator(i)) != *self.image_of_generator(i) {
                return Ok(None);
            }
        }
        Ok(Some(c))
    }
}

/// If `u = a^m · b · a^-m` (as a reduced word, `a` = generator `ga`,
/// `b` = generator `gb`, `ga != gb`), return `m`.
fn exponent_of_sandwich(u: &Word, ga: u32, gb: u32) -> Option<i64> {
    let ls = u.letters();
    let n = ls.len();
    if n % 2 == 0 {
        return None;
    }
    let h = n / 2;
    let mid = ls[h];
    if mid.gen != gb || mid.sign != Sign::Plus {
        return None;
    }
    let mut m: i64 = 0;
    for i in 0..h {
        if ls[i].gen != ga || ls[i].sign != ls[0].sign {
            return None;
        }
        if ls[n - 1 - i].gen != ga || ls[n - 1 - i].sign != ls[0].sign.flip() {
            return None;
        }
        m = ls[0].sign.as_i8() as i64 * (i as i64 + 1);
    }
    Some(m)
}

/// Error from [`EndoSpec::new`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndoSpecError {
    WrongImageCount { rank: u32, got: usize },
    GeneratorOutOfRange { rank: u32, word: Word },
}

impl fmt::Display for EndoSpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndoSpecError::WrongImageCount { rank, got } => {
                write!(f, "expected {rank} images, got {got}")
            }
            EndoSpecError::GeneratorOutOfRange { rank, word } => {
                write!(f, "word {word:?} uses generators beyond rank {rank}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for EndoSpecError {}

/// Error from [`EndoSpec::detect_inner`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DetectInnerError {
    RankTooSmall { rank: u32 },
    /// Some image is not even conjugate to its generator, so the hypothesis
    /// of the inner-detection problem is violated.
    NotGeneratorConjugating { generator: u32 },
}

impl fmt::Display for DetectInnerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetectInnerError::RankTooSmall { rank } => {
                write!(f, "inner detection needs rank ≥ 2, got {rank}")
            }
            DetectInnerError::NotGeneratorConjugating { generator } => {
                write!(
                    f,
                    "image of generator {generator} is not conjugate to it"
                )
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DetectInnerError {}
