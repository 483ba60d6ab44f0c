//! Deterministic samplers for group elements.
//!
//! Random elements of SL2(Z[i]) are produced as bounded words in the
//! standard generators S, T_1, T_i (and their inverses), which stays
//! exact and needs no rejection. Samplers for the subgroup Xi12 and for
//! the preimage of SO3(Z[i]) compose words from generators known to lie
//! in the target group.

use crate::gaussian::GaussianInt;
use crate::matrix::Mat2;
use crate::orthogonal;
use crate::rng::SplitMix64;

/// Translation [[1, w], [0, 1]].
pub fn translation(w: GaussianInt) -> Mat2 {
    Mat2::from_gaussian_entries(
        GaussianInt::one(),
        w,
        GaussianInt::zero(),
        GaussianInt::one(),
    )
}

/// The inversion S = [[0, -1], [1, 0]].
pub fn inversion_s() -> Mat2 {
    Mat2::from_ints(0, -1, 1, 0)
}

/// Uniform word of the given length over {S, T_1, T_i} and inverses.
pub fn random_sl2_zi(rng: &mut SplitMix64, max_len: usize) -> Mat2 {
    let letters = [
        inversion_s(),
        inversion_s().inverse_unimodular().expect("S is unimodular"),
        translation(GaussianInt::one()),
        translation(GaussianInt::one().neg()),
        translation(GaussianInt::i()),
        translation(GaussianInt::i().neg()),
    ];
    random_word(rng, max_len, &letters)
}

/// Uniform word over generators of the subgroup Xi12: S, the (1+i) and
/// (1-i) translations, their inverses, and -I.
pub fn random_xi12(rng: &mut SplitMix64, max_len: usize) -> Mat2 {
    let letters = [
        inversion_s(),
        inversion_s().inverse_unimodular().expect("S is unimodular"),
        translation(GaussianInt::one_plus_i()),
        translation(GaussianInt::one_plus_i().neg()),
        translation(GaussianInt::new(1, -1)),
        translation(GaussianInt::new(-1, 1)),
        Mat2::identity().neg(),
    ];
    random_word(rng, max_len, &letters)
}

/// Random element of the preimage of SO3(Z[i]): a random coset
/// representative times a random Xi12 word.
pub fn random_gamma_element(rng: &mut SplitMix64, max_len: usize) -> Mat2 {
    let reps = orthogonal::coset_reps();
    let rep = &reps[rng.index(reps.len())].1;
    random_xi12(rng, max_len).mul(rep)
}

fn random_word(rng: &mut SplitMix64, max_len: usize, letters: &[Mat2]) -> Mat2 {
    let len = rng.index(max_len) + 1;
    let mut acc = Mat2::identity();
    for _ in 0..len {
        acc = acc.mul(&letters[rng.index(letters.len())]);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_samples_are_unimodular_and_gaussian() {
        let mut rng = SplitMix64::new(1);
        for _ in 0..200 {
            let m = random_sl2_zi(&mut rng, 10);
            assert!(m.is_sl2() && m.is_gaussian());
        }
    }

    #[test]
    fn xi12_samples_reduce_to_i_or_s() {
        use crate::hecke::{red2, BitMat2};
        let mut rng = SplitMix64::new(2);
        for _ in 0..200 {
            let m = random_xi12(&mut rng, 10);
            let r = red2(&m).unwrap();
            assert!(r == BitMat2::IDENTITY || r == BitMat2::S_BAR);
        }
    }
}
