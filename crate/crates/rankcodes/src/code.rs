use gf2core::GF2Matrix;

use crate::Error;

/// The rank of the entrywise difference of two equally shaped matrices,
/// which over GF(2) is the rank of their XOR.
pub fn rank_distance(a: &GF2Matrix, b: &GF2Matrix) -> Result<usize, Error> {
    if a.nrows() != b.nrows() || a.ncols() != b.ncols() {
        return Err(Error::DistanceShape {
            a_rows: a.nrows(),
            a_cols: a.ncols(),
            b_rows: b.nrows(),
            b_cols: b.ncols(),
        });
    }
    Ok(a.xor(b).rank())
}

/// A set of distinct m×n matrices over GF(2), measured in the rank metric.
///
/// Words are kept sorted, so two codes with the same word set compare
/// equal regardless of construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCode {
    rows: usize,
    cols: usize,
    words: Vec<GF2Matrix>,
}

impl RankCode {
    /// Validates that all words share the given shape and are distinct.
    pub fn new(rows: usize, cols: usize, mut words: Vec<GF2Matrix>) -> Result<Self, Error> {
        for (index, w) in words.iter().enumerate() {
            if w.nrows() != rows || w.ncols() != cols {
                return Err(Error::WordShape {
                    index,
                    got_rows: w.nrows(),
                    got_cols: w.ncols(),
                    rows,
                    cols,
                });
            }
        }
        let original: Vec<GF2Matrix> = words.clone();
        words.sort_unstable();
        if let Some(w) = words.windows(2).find(|w| w[0] == w[1]) {
            let i = original.iter().position(|x| x == &w[0]).unwrap();
            let j = original.iter().rposition(|x| x == &w[0]).unwrap();
            return Err(Error::DuplicateWord { i, j });
        }
        Ok(RankCode { rows, cols, words })
    }

    /// The linear code spanned by the given generator matrices: all XOR
    /// combinations, including the zero word.  Dependent generators would
    /// produce duplicate words and are rejected.
    pub fn from_generators(
        rows: usize,
        cols: usize,
        generators: &[GF2Matrix],
    ) -> Result<Self, Error> {
        let mut words = vec![GF2Matrix::zero(rows, cols)];
        for g in generators {
            let translated: Vec<GF2Matrix> = words.iter().map(|w| w.xor(g)).collect();
            words.extend(translated);
        }
        RankCode::new(rows, cols, words)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Words in sorted order.
    pub fn words(&self) -> &[GF2Matrix] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Minimum rank distance over all pairs of words.
    pub fn min_rank_distance(&self) -> Result<usize, Error> {
        if self.words.len() < 2 {
            return Err(Error::TooFewWords {
                got: self.words.len(),
            });
        }
        let mut min = usize::MAX;
        for i in 0..self.words.len() {
            for j in i + 1..self.words.len() {
                min = min.min(self.words[i].xor(&self.words[j]).rank());
            }
        }
        Ok(min)
    }

    /// Whether the code meets the maximum size a minimum distance of `d`
    /// admits: 2^((m−d+1)·n) words for an m×n code with m ≤ n.
    pub fn is_mrd(&self, d: usize) -> bool {
        debug_assert!(self.rows <= self.cols);
        if d == 0 || d > self.rows {
            return false;
        }
        let bound = 1usize << ((self.rows - d + 1) * self.cols);
        self.words.len() == bound && self.min_rank_distance().map_or(false, |m| m >= d)
    }

    /// Whether some translate of the code is linear, that is, closed under
    /// XOR.  Translating by an arbitrary word moves the code to contain
    /// zero without changing any distance, so this is a property of the
    /// equivalence class.
    pub fn is_linear_class(&self) -> bool {
        let Some(base) = self.words.first() else {
            return true;
        };
        let translated: Vec<GF2Matrix> = self.words.iter().map(|w| w.xor(base)).collect();
        let set: std::collections::HashSet<&GF2Matrix> = translated.iter().collect();
        translated
            .iter()
            .enumerate()
            .all(|(i, a)| translated[..i].iter().all(|b| set.contains(&a.xor(b))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(cols: usize, rows: &[u32]) -> GF2Matrix {
        GF2Matrix::new(cols, rows.to_vec())
    }

    #[test]
    fn distance_is_zero_on_equal_and_symmetric() {
        let a = m(4, &[0b1010, 0b0110, 0b0001]);
        let b = m(4, &[0b1000, 0b0100, 0b0010]);
        assert_eq!(rank_distance(&a, &a), Ok(0));
        assert_eq!(rank_distance(&a, &b), rank_distance(&b, &a));
    }

    #[test]
    fn distance_from_zero_is_the_rank() {
        let zero = GF2Matrix::zero(3, 4);
        let id_pad = m(4, &[0b1000, 0b0100, 0b0010]);
        assert_eq!(rank_distance(&zero, &id_pad), Ok(3));
    }

    #[test]
    fn mismatched_shapes_are_rejected() {
        let a = GF2Matrix::zero(3, 4);
        let b = GF2Matrix::zero(4, 3);
        assert!(matches!(
            rank_distance(&a, &b),
            Err(Error::DistanceShape { .. })
        ));
    }

    #[test]
    fn minimum_distance_of_a_two_word_code() {
        let code = RankCode::new(
            3,
            4,
            vec![GF2Matrix::zero(3, 4), m(4, &[0b1000, 0b0100, 0b0010])],
        )
        .unwrap();
        assert_eq!(code.min_rank_distance(), Ok(3));
    }

    #[test]
    fn too_few_words_have_no_minimum_distance() {
        let code = RankCode::new(3, 4, vec![GF2Matrix::zero(3, 4)]).unwrap();
        assert_eq!(code.min_rank_distance(), Err(Error::TooFewWords { got: 1 }));
    }

    #[test]
    fn duplicate_words_are_rejected() {
        let w = m(4, &[0b1000, 0b0100, 0b0010]);
        assert!(matches!(
            RankCode::new(3, 4, vec![w.clone(), GF2Matrix::zero(3, 4), w]),
            Err(Error::DuplicateWord { i: 0, j: 2 })
        ));
    }

    #[test]
    fn generators_span_all_combinations() {
        let gens = [
            m(4, &[0b1000, 0b0100, 0b0010]),
            m(4, &[0b0100, 0b0010, 0b0001]),
        ];
        let code = RankCode::from_generators(3, 4, &gens).unwrap();
        assert_eq!(code.len(), 4);
        assert!(code.words().contains(&gens[0].xor(&gens[1])));
        assert!(code.words().contains(&GF2Matrix::zero(3, 4)));
    }

    #[test]
    fn dependent_generators_are_rejected() {
        let g = m(4, &[0b1000, 0b0100, 0b0010]);
        assert!(matches!(
            RankCode::from_generators(3, 4, &[g.clone(), g]),
            Err(Error::DuplicateWord { .. })
        ));
    }

    #[test]
    fn undersized_codes_are_not_mrd() {
        // Distance 3 over 3x4 shapes demands exactly 16 words.
        let code = RankCode::new(
            3,
            4,
            vec![GF2Matrix::zero(3, 4), m(4, &[0b1000, 0b0100, 0b0010])],
        )
        .unwrap();
        assert!(!code.is_mrd(3));
    }

    #[test]
    fn close_words_break_the_distance_requirement() {
        // 16 words but two of them at rank distance 1.
        let mut words = vec![GF2Matrix::zero(3, 4)];
        for k in 1..15u32 {
            words.push(m(4, &[k, k.rotate_left(1) & 0xf, 0b1001]));
        }
        words.push(m(4, &[1, 0, 0]));
        let code = RankCode::new(3, 4, words).unwrap();
        assert_eq!(code.len(), 16);
        assert!(!code.is_mrd(3));
    }

    #[test]
    fn linearity_survives_translation() {
        let gens = [
            m(4, &[0b1000, 0b0100, 0b0010]),
            m(4, &[0b0001, 0b1000, 0b0100]),
        ];
        let linear = RankCode::from_generators(3, 4, &gens).unwrap();
        assert!(linear.is_linear_class());

        let shift = m(4, &[0b1111, 0b0011, 0b0101]);
        let translated = RankCode::new(
            3,
            4,
            linear.words().iter().map(|w| w.xor(&shift)).collect(),
        )
        .unwrap();
        assert!(translated.is_linear_class());
    }

    #[test]
    fn a_three_word_code_is_not_linear() {
        // Any GF(2)-linear code has size a power of two.
        let code = RankCode::new(
            3,
            4,
            vec![
                GF2Matrix::zero(3, 4),
                m(4, &[0b1000, 0b0100, 0b0010]),
                m(4, &[0b0100, 0b0010, 0b0001]),
            ],
        )
        .unwrap();
        assert!(!code.is_linear_class());
    }

    #[test]
    fn tiny_codes_are_linear() {
        let zero_only = RankCode::new(3, 4, vec![GF2Matrix::zero(3, 4)]).unwrap();
        assert!(zero_only.is_linear_class());
        assert!(RankCode::new(3, 4, vec![]).unwrap().is_linear_class());
    }
}
