//! Border paths, Ferrers diagrams and shifted Ferrers diagrams.
//!
//! A diagram is described by its south-east boundary read from the north-east
//! end: a sequence of unit steps, each either south (`S`) or west (`W`). Step
//! indices are 1-based throughout, so a corner sits at index `k` when step `k`
//! is south and step `k + 1` is west.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Step {
    South,
    West,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::South => Step::West,
            Step::West => Step::South,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::South => 'S',
            Step::West => 'W',
        }
    }
}

/// A cell position, 1-based, rows counted top to bottom and columns left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn transpose(self) -> Self {
        Cell { row: self.col, col: self.row }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The south-east boundary of a diagram; its length is the half-perimeter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BorderPath {
    steps: Vec<Step>,
}

impl BorderPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::EmptyPath);
        }
        Ok(BorderPath { steps })
    }

    /// Parses the canonical `S`/`W` encoding, index 1 first.
    pub fn parse(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyPath);
        }
        let steps = text
            .chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                'S' => Ok(Step::South),
                'W' => Ok(Step::West),
                _ => Err(Error::IllegalCharacter(i + 1)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BorderPath { steps })
    }

    /// Every path over `{S, W}` of length `h`, lexicographic with `S < W`.
    pub fn all(h: usize) -> impl Iterator<Item = BorderPath> {
        assert!(h >= 1 && h < usize::BITS as usize);
        (0..1usize << h).map(move |mask| {
            let steps = (0..h).map(|i| if mask >> (h - 1 - i) & 1 == 1 { Step::West } else { Step::South }).collect();
            BorderPath { steps }
        })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn half_perimeter(&self) -> usize {
        self.steps.len()
    }

    /// Step `k`, 1-based.
    pub fn step(&self, k: usize) -> Step {
        self.steps[k - 1]
    }

    pub fn first(&self) -> Step {
        self.steps[0]
    }

    pub fn last(&self) -> Step {
        self.steps[self.steps.len() - 1]
    }

    pub fn row_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::South).count()
    }

    pub fn column_count(&self) -> usize {
        self.steps.len() - self.row_count()
    }

    pub fn has_corner_at(&self, k: usize) -> bool {
        k >= 1 && k < self.steps.len() && self.step(k) == Step::South && self.step(k + 1) == Step::West
    }

    /// Indices `k` with a south step at `k` followed by a west step at `k + 1`.
    pub fn corners(&self) -> Vec<usize> {
        (1..self.steps.len()).filter(|&k| self.has_corner_at(k)).collect()
    }

    pub fn corner_count(&self) -> usize {
        self.steps.windows(2).filter(|w| w[0] == Step::South && w[1] == Step::West).count()
    }

    /// The cell whose right edge is step `k` and bottom edge is step `k + 1`.
    pub fn corner_cell(&self, k: usize) -> Option<Cell> {
        if !self.has_corner_at(k) {
            return None;
        }
        let row = self.steps[..k].iter().filter(|&&s| s == Step::South).count();
        let col = self.steps[k..].iter().filter(|&&s| s == Step::West).count();
        Some(Cell::new(row, col))
    }

    /// Path of the transposed diagram: reverse and flip every step.
    pub fn conjugate(&self) -> BorderPath {
        BorderPath { steps: self.steps.iter().rev().map(|s| s.flip()).collect() }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Row lengths top to bottom, one per south step.
    pub fn row_lengths(&self) -> Vec<usize> {
        let mut x = self.column_count();
        let mut rows = Vec::with_capacity(self.row_count());
        for step in &self.steps {
            match step {
                Step::South => rows.push(x),
                Step::West => x -= 1,
            }
        }
        rows
    }

    /// Column heights left to right. The column closed by the west step at
    /// index `k` has height equal to the number of south steps before `k`.
    pub fn column_heights(&self) -> Vec<usize> {
        let mut south = 0;
        let mut heights = Vec::with_capacity(self.column_count());
        for step in &self.steps {
            match step {
                Step::South => south += 1,
                Step::West => heights.push(south),
            }
        }
        heights.reverse();
        heights
    }

    pub fn shape(&self) -> FerrersShape {
        FerrersShape { row_lengths: self.row_lengths(), width: self.column_count() }
    }

    pub fn shifted(&self) -> ShiftedShape {
        ShiftedShape { base: self.shape() }
    }

    /// Appends a step, giving a path one longer.
    pub fn push(&self, step: Step) -> BorderPath {
        let mut steps = self.steps.clone();
        steps.push(step);
        BorderPath { steps }
    }

    /// Drops the last step; `None` when that would leave an empty path.
    pub fn pop(&self) -> Option<BorderPath> {
        if self.steps.len() < 2 {
            return None;
        }
        Some(BorderPath { steps: self.steps[..self.steps.len() - 1].to_vec() })
    }
}

impl fmt::Display for BorderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for BorderPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BorderPath::parse(s)
    }
}

impl Serialize for BorderPath {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BorderPath {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        BorderPath::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// Left-aligned diagram with weakly decreasing rows. Zero-length rows are
/// kept, and `width` may exceed the first row when the path opens with west
/// steps (columns of height zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FerrersShape {
    row_lengths: Vec<usize>,
    width: usize,
}

impl FerrersShape {
    pub fn new(row_lengths: Vec<usize>, width: usize) -> Result<Self> {
        if row_lengths.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("row lengths {row_lengths:?} are not weakly decreasing")));
        }
        if row_lengths.first().is_some_and(|&l| l > width) {
            return Err(Error::Domain(format!("row longer than width {width}")));
        }
        if row_lengths.is_empty() && width == 0 {
            return Err(Error::EmptyPath);
        }
        Ok(FerrersShape { row_lengths, width })
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.row_lengths
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> usize {
        self.row_lengths.len()
    }

    pub fn cell_count(&self) -> usize {
        self.row_lengths.iter().sum()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.row <= self.rows() && cell.col >= 1 && cell.col <= self.row_lengths[cell.row - 1]
    }

    pub fn path(&self) -> BorderPath {
        let mut steps = Vec::with_capacity(self.rows() + self.width);
        let mut x = self.width;
        for &len in &self.row_lengths {
            steps.extend(std::iter::repeat_n(Step::West, x - len));
            x = len;
            steps.push(Step::South);
        }
        steps.extend(std::iter::repeat_n(Step::West, x));
        BorderPath { steps }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.row_lengths.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }
}

/// A Ferrers diagram with `k` columns topped by `k` staircase rows. Staircase
/// row `i` (top to bottom) spans columns `1..=i`; its right-most cell `(i, i)`
/// is a diagonal cell. Base rows follow as rows `k + 1, k + 2, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShiftedShape {
    base: FerrersShape,
}

impl ShiftedShape {
    pub fn base(&self) -> &FerrersShape {
        &self.base
    }

    pub fn staircase_rows(&self) -> usize {
        self.base.width
    }

    pub fn rows(&self) -> usize {
        self.base.width + self.base.rows()
    }

    pub fn columns(&self) -> usize {
        self.base.width
    }

    pub fn row_length(&self, row: usize) -> usize {
        let k = self.base.width;
        if row <= k {
            row
        } else {
            self.base.row_lengths[row - k - 1]
        }
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        (1..=self.rows()).map(|r| self.row_length(r)).collect()
    }

    pub fn is_diagonal(&self, cell: Cell) -> bool {
        cell.row <= self.base.width && cell.row == cell.col
    }

    pub fn diagonal_cells(&self) -> Vec<Cell> {
        (1..=self.base.width).map(|i| Cell::new(i, i)).collect()
    }

    pub fn cell_count(&self) -> usize {
        (1..=self.rows()).map(|r| self.row_length(r)).sum()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.rows()).flat_map(move |r| (1..=self.row_length(r)).map(move |c| Cell::new(r, c)))
    }

    pub fn half_perimeter(&self) -> usize {
        self.base.rows() + self.base.width
    }

    pub fn path(&self) -> BorderPath {
        self.base.path()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> BorderPath {
        BorderPath::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let single = p("SW");
        assert_eq!(single.half_perimeter(), 2);
        assert_eq!(single.row_lengths(), vec![1]);

        let domino = p("SSW");
        assert_eq!(domino.row_lengths(), vec![1, 1]);
        assert_eq!(domino.column_heights(), vec![2]);

        assert_eq!(BorderPath::parse("WX"), Err(Error::IllegalCharacter(2)));
        assert_eq!(BorderPath::parse(""), Err(Error::EmptyPath));
    }

    #[test]
    fn corner_examples() {
        assert_eq!(p("SW").corners(), vec![1]);
        assert_eq!(p("SWSW").corners(), vec![1, 3]);
        assert!(p("SSS").corners().is_empty());
        assert_eq!(p("SWSW").corner_cell(1), Some(Cell::new(1, 2)));
        assert_eq!(p("SWSW").corner_cell(3), Some(Cell::new(2, 1)));
        assert_eq!(p("SWSW").corner_cell(2), None);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("SW").conjugate(), p("SW"));
        assert_eq!(p("SSW").conjugate(), p("SWW"));
    }

    #[test]
    fn shifted_examples() {
        let one = p("SW").shifted();
        let cells: Vec<_> = one.cells().collect();
        assert_eq!(cells, vec![Cell::new(1, 1), Cell::new(2, 1)]);
        assert!(one.is_diagonal(Cell::new(1, 1)));
        assert!(!one.is_diagonal(Cell::new(2, 1)));

        let stair = p("WW").shifted();
        let cells: Vec<_> = stair.cells().collect();
        assert_eq!(cells, vec![Cell::new(1, 1), Cell::new(2, 1), Cell::new(2, 2)]);
        assert_eq!(stair.diagonal_cells(), vec![Cell::new(1, 1), Cell::new(2, 2)]);

        assert_eq!(p("SS").shifted().cell_count(), 0);
    }

    #[test]
    fn shifted_geometry_matches_drawn_type_b_shape() {
        // three staircase rows of lengths 1, 2, 3 above base rows 2, 2, 0
        let shape = p("WSSWWS").shifted();
        assert_eq!(shape.row_lengths(), vec![1, 2, 3, 2, 2, 0]);
        assert_eq!(shape.half_perimeter(), 6);
    }

    #[test]
    fn leading_west_is_a_zero_height_column() {
        let path = p("WSW");
        assert_eq!(path.column_heights(), vec![1, 0]);
        assert_eq!(path.shape().width(), 2);
        assert_eq!(path.shape().path(), path);
    }

    #[test]
    fn round_trip_all_paths_up_to_12() {
        for h in 1..=12 {
            for path in BorderPath::all(h) {
                assert_eq!(path.shape().path(), path);
                assert_eq!(path.shape(), path.shape().path().shape());
            }
        }
    }

    proptest! {
        #[test]
        fn corner_count_is_sw_substring_count(steps in prop::collection::vec(any::<bool>(), 1..24)) {
            let text: String = steps.iter().map(|&w| if w { 'W' } else { 'S' }).collect();
            let path = p(&text);
            prop_assert_eq!(path.corner_count(), text.matches("SW").count());
            prop_assert_eq!(path.corners().len(), path.corner_count());
            prop_assert!(path.corner_count() <= path.half_perimeter() / 2);
        }

        #[test]
        fn conjugate_is_an_involution_mirroring_corners(steps in prop::collection::vec(any::<bool>(), 1..24)) {
            let text: String = steps.iter().map(|&w| if w { 'W' } else { 'S' }).collect();
            let path = p(&text);
            let conj = path.conjugate();
            prop_assert_eq!(&conj.conjugate(), &path);
            let h = path.half_perimeter();
            let mirrored: Vec<usize> = path.corners().iter().rev().map(|&k| h - k).collect();
            prop_assert_eq!(conj.corners(), mirrored);
            if path.first() == Step::South && path.last() == Step::West {
                prop_assert_eq!(conj.corner_count(), path.corner_count());
            }
        }

        #[test]
        fn shape_dimensions(steps in prop::collection::vec(any::<bool>(), 1..20)) {
            let text: String = steps.iter().map(|&w| if w { 'W' } else { 'S' }).collect();
            let path = p(&text);
            let shape = path.shape();
            prop_assert_eq!(shape.rows(), path.row_count());
            prop_assert_eq!(shape.width(), path.column_count());
            let heights = path.column_heights();
            for (c, &h) in heights.iter().enumerate() {
                let counted = shape.row_lengths().iter().filter(|&&l| l > c).count();
                prop_assert_eq!(counted, h);
            }
        }
    }
}
