//! The Artin action of braid words on the free group generated by loops
//! around the punctures (ordered by x, based below the configuration).

use alloc::vec::Vec;

use crate::freegroup::{EndoSpec, Word};

use super::word::{BraidLetter, BraidWord};

/// An invertible substitution on the rank-`n` free group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAutomorphism {
    forward: EndoSpec,
    inverse: EndoSpec,
}

impl FreeAutomorphism {
    pub fn identity(rank: u32) -> FreeAutomorphism {
        FreeAutomorphism {
            forward: EndoSpec::identity(rank),
            inverse: EndoSpec::identity(rank),
        }
    }

    fn new_checked(forward: EndoSpec, inverse: EndoSpec) -> FreeAutomorphism {
        debug_assert!(forward.compose_after(&inverse).is_identity());
        debug_assert!(inverse.compose_after(&forward).is_identity());
        FreeAutomorphism { forward, inverse }
    }

    pub fn rank(&self) -> u32 {
        self.forward.rank()
    }

    pub fn spec(&self) -> &EndoSpec {
        &self.forward
    }

    pub fn inverse_spec(&self) -> &EndoSpec {
        &self.inverse
    }

    pub fn apply(&self, w: &Word) -> Word {
        self.forward.apply(w)
    }

    pub fn image_of_generator(&self, gen: u32) -> &Word {
        self.forward.image_of_generator(gen)
    }

    pub fn is_identity(&self) -> bool {
        self.forward.is_identity()
    }

    /// `self` after `first` (apply `first`, then `self`).
    pub fn compose_after(&self, first: &FreeAutomorphism) -> FreeAutomorphism {
        FreeAutomorphism::new_checked(
            self.forward.compose_after(&first.forward),
            first.inverse.compose_after(&self.inverse),
        )
    }
}

/// The automorphism of one generator `σ_i^{±1}` on `n` strands:
/// `σ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`, fixing the
/// rest; `σ_i⁻¹` is the inverse substitution.
pub fn artin_generator(letter: BraidLetter, n: u32) -> FreeAutomorphism {
    let i = letter.index as u32;
    debug_assert!(i + 1 <= n);
    let xi = Word::generator(i);
    let xi1 = Word::generator(i + 1);
    let mut fwd: Vec<Word> = (1..=n).map(Word::generator).collect();
    let mut inv: Vec<Word> = (1..=n).map(Word::generator).collect();
    // σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹ ; x_{i+1} ↦ x_i
    fwd[(i - 1) as usize] = xi.concat(&xi1).concat(&xi.invert());
    fwd[i as usize] = xi.clone();
    // σ_i⁻¹: x_i ↦ x_{i+1} ; x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
    inv[(i - 1) as usize] = xi1.clone();
    inv[i as usize] = xi1.invert().concat(&xi).concat(&xi1);
    let (fwd, inv) = if letter.positive { (fwd, inv) } else { (inv, fwd) };
    FreeAutomorphism::new_checked(
        EndoSpec::new(n, fwd).expect("valid images"),
        EndoSpec::new(n, inv).expect("valid images"),
    )
}

/// The Artin action of a whole word, applied chronologically: the first
/// letter acts first.
pub fn artin_action(word: &BraidWord, n: u32) -> FreeAutomorphism {
    let mut acc = FreeAutomorphism::identity(n);
    for l in &word.letters {
        acc = artin_generator(*l, n).compose_after(&acc);
    }
    acc
}

/// Is the braid word trivial as an automorphism (hence as a braid, by
/// faithfulness of the action)?
pub fn word_is_trivial(word: &BraidWord, n: u32) -> bool {
    artin_action(word, n).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::parse(text).unwrap()
    }

    fn sigma(index: usize, positive: bool) -> BraidLetter {
        BraidLetter { index, positive }
    }

    #[test]
    fn empty_word_is_identity() {
        assert!(artin_action(&BraidWord::default(), 4).is_identity());
    }

    #[test]
    fn generator_inverse_cancels() {
        let word = BraidWord::new(alloc::vec![sigma(1, true), sigma(1, false)]);
        assert!(artin_action(&word, 3).is_identity());
        let word = BraidWord::new(alloc::vec![sigma(2, false), sigma(2, true)]);
        assert!(artin_action(&word, 3).is_identity());
    }

    #[test]
    fn sigma1_squared_images() {
        let word = BraidWord::new(alloc::vec![sigma(1, true), sigma(1, true)]);
        let phi = artin_action(&word, 2);
        let c = w("x1 x2");
        assert_eq!(*phi.image_of_generator(1), c.conjugate(&w("x1")));
        assert_eq!(*phi.image_of_generator(2), c.conjugate(&w("x2")));
        assert!(!phi.is_identity());
    }

    #[test]
    fn braid_relations_exhaustive_up_to_five_strands() {
        for n in 2..=5u32 {
            // Far commutation.
            for i in 1..n as usize {
                for j in 1..n as usize {
                    if i.abs_diff(j) < 2 {
                        continue;
                    }
                    let ij = BraidWord::new(alloc::vec![sigma(i, true), sigma(j, true)]);
                    let ji = BraidWord::new(alloc::vec![sigma(j, true), sigma(i, true)]);
                    assert_eq!(artin_action(&ij, n), artin_action(&ji, n), "n={n} i={i} j={j}");
                }
            }
            // Braid relation.
            for i in 1..(n as usize).saturating_sub(1) {
                let aba = BraidWord::new(alloc::vec![
                    sigma(i, true),
                    sigma(i + 1, true),
                    sigma(i, true),
                ]);
                let bab = BraidWord::new(alloc::vec![
                    sigma(i + 1, true),
                    sigma(i, true),
                    sigma(i + 1, true),
                ]);
                assert_eq!(artin_action(&aba, n), artin_action(&bab, n), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn total_product_is_fixed_up_to_conjugacy() {
        let word = BraidWord::new(alloc::vec![
            sigma(1, true),
            sigma(2, true),
            sigma(1, false),
            sigma(2, true),
        ]);
        let phi = artin_action(&word, 3);
        let total = w("x1 x2 x3");
        assert!(phi.apply(&total).is_conjugate(&total));
    }
}
