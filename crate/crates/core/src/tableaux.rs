//! The four tableau families, their validators and per-tableau statistics.
//!
//! Fillings are stored row by row, top to bottom, one `bool` per cell from the
//! left. For the pointed families `true` is a point; for the 0/1 families it
//! is a `1`. Type-B fillings include the staircase rows.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{BorderPath, Cell, Step};

pub type Rows = Vec<Vec<bool>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    TreeLike,
    Permutation,
    TypeB,
    Symmetric,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::TreeLike, Family::Permutation, Family::TypeB, Family::Symmetric];

    pub fn name(self) -> &'static str {
        match self {
            Family::TreeLike => "tree-like",
            Family::Permutation => "permutation",
            Family::TypeB => "type-b",
            Family::Symmetric => "symmetric",
        }
    }

    pub fn is_pointed(self) -> bool {
        matches!(self, Family::TreeLike | Family::Symmetric)
    }

    /// Border-path length of a tableau indexed by `n`. Symmetric tableaux are
    /// indexed by `n` with size `2n + 1`.
    pub fn path_length(self, n: usize) -> usize {
        match self {
            Family::Permutation | Family::TypeB => n,
            Family::TreeLike => n + 1,
            Family::Symmetric => 2 * n + 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tree-like" => Ok(Family::TreeLike),
            "permutation" => Ok(Family::Permutation),
            "type-b" => Ok(Family::TypeB),
            "symmetric" => Ok(Family::Symmetric),
            other => Err(Error::Parse(format!("unknown family '{other}'"))),
        }
    }
}

/// Which reading of the ambiguous rules to enforce.
///
/// `Literal` keeps the inclusive "or" of the tree-like point rule and the
/// "1 to the right" orientation of the type-B restriction rule. It exists for
/// diagnostics only: it over-counts both families.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RuleReading {
    #[default]
    Validated,
    Literal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Top-left cell must hold the root point.
    TreeLikeRoot,
    /// Every row and column holds a point.
    TreeLikeCoverage,
    /// A non-root point has an empty column above it or an empty row to its left, not both.
    TreeLikePoint,
    /// Every column holds a 1.
    PermutationColumn,
    /// No 0 with a 1 above it and a 1 to its left.
    PermutationRestriction,
    TypeBColumn,
    TypeBRestriction,
    /// A diagonal 0 forces its row to 0.
    TypeBDiagonal,
    /// Path self-conjugate and point set closed under transposition.
    Symmetry,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::TreeLikeRoot => "tree-like/1",
            Rule::TreeLikeCoverage => "tree-like/2",
            Rule::TreeLikePoint => "tree-like/3",
            Rule::PermutationColumn => "permutation/1",
            Rule::PermutationRestriction => "permutation/2",
            Rule::TypeBColumn => "type-b/1",
            Rule::TypeBRestriction => "type-b/2",
            Rule::TypeBDiagonal => "type-b/3",
            Rule::Symmetry => "symmetric/1",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: Rule,
    pub cells: Vec<Cell>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule {}", self.rule.id())?;
        for (i, c) in self.cells.iter().enumerate() {
            write!(f, "{}{c}", if i == 0 { " at " } else { ", " })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationResult {
    pub violations: Vec<Violation>,
}

impl ValidationResult {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    fn into_result(self, family: Family) -> Result<()> {
        if self.is_ok() {
            return Ok(());
        }
        let reason = self.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
        Err(Error::InvalidTableau { family, reason })
    }
}

/// Row lengths of the diagram a family draws on the given path.
pub fn row_lengths(family: Family, path: &BorderPath) -> Vec<usize> {
    match family {
        Family::TypeB => path.shifted().row_lengths(),
        _ => path.row_lengths(),
    }
}

fn check_cover(family: Family, path: &BorderPath, rows: &Rows) -> Result<()> {
    let expected = row_lengths(family, path);
    let actual: Vec<usize> = rows.iter().map(Vec::len).collect();
    if expected != actual {
        return Err(Error::ShapeFillingMismatch(format!(
            "path {path} has row lengths {expected:?}, filling has {actual:?}"
        )));
    }
    Ok(())
}

/// Checks a filling against the family's rules, reporting every violation.
pub fn validate(family: Family, path: &BorderPath, rows: &Rows) -> Result<ValidationResult> {
    validate_with(family, path, rows, RuleReading::Validated)
}

pub fn validate_with(family: Family, path: &BorderPath, rows: &Rows, reading: RuleReading) -> Result<ValidationResult> {
    check_cover(family, path, rows)?;
    let grid = Grid::new(rows);
    let mut violations = Vec::new();
    match family {
        Family::TreeLike => tree_like_rules(&grid, path, reading, &mut violations),
        Family::Symmetric => {
            tree_like_rules(&grid, path, reading, &mut violations);
            symmetry_rule(&grid, path, &mut violations);
        }
        Family::Permutation => {
            column_rule(&grid, Rule::PermutationColumn, &mut violations);
            restriction_rule(&grid, Rule::PermutationRestriction, RuleReading::Validated, &mut violations);
        }
        Family::TypeB => {
            column_rule(&grid, Rule::TypeBColumn, &mut violations);
            restriction_rule(&grid, Rule::TypeBRestriction, reading, &mut violations);
            diagonal_rule(&grid, path.column_count(), &mut violations);
        }
    }
    Ok(ValidationResult { violations })
}

/// Read-only view over a ragged 0/1 grid with 1-based accessors.
struct Grid<'a> {
    rows: &'a Rows,
    width: usize,
}

impl<'a> Grid<'a> {
    fn new(rows: &'a Rows) -> Self {
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        Grid { rows, width }
    }

    fn get(&self, r: usize, c: usize) -> Option<bool> {
        self.rows.get(r.wrapping_sub(1)).and_then(|row| row.get(c.wrapping_sub(1))).copied()
    }

    fn is_set(&self, r: usize, c: usize) -> bool {
        self.get(r, c) == Some(true)
    }

    fn any_above(&self, r: usize, c: usize) -> bool {
        (1..r).any(|rr| self.is_set(rr, c))
    }

    fn any_left(&self, r: usize, c: usize) -> bool {
        (1..c).any(|cc| self.is_set(r, cc))
    }

    fn any_right(&self, r: usize, c: usize) -> bool {
        let len = self.rows[r - 1].len();
        (c + 1..=len).any(|cc| self.is_set(r, cc))
    }

    /// Rows (1-based) that reach column `c`.
    fn column_rows(&self, c: usize) -> Vec<usize> {
        (1..=self.rows.len()).filter(|&r| self.rows[r - 1].len() >= c).collect()
    }

    fn cells(&self) -> impl Iterator<Item = (Cell, bool)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (Cell::new(r + 1, c + 1), v)))
    }
}

fn tree_like_rules(grid: &Grid, path: &BorderPath, reading: RuleReading, out: &mut Vec<Violation>) {
    if !grid.is_set(1, 1) {
        out.push(Violation { rule: Rule::TreeLikeRoot, cells: vec![Cell::new(1, 1)] });
    }
    let mut uncovered = Vec::new();
    for (r, row) in grid.rows.iter().enumerate() {
        if !row.iter().any(|&p| p) {
            uncovered.push(Cell::new(r + 1, 0));
        }
    }
    for (c, &h) in path.column_heights().iter().enumerate() {
        if !(1..=h).any(|r| grid.is_set(r, c + 1)) {
            uncovered.push(Cell::new(0, c + 1));
        }
    }
    if !uncovered.is_empty() {
        // row witnesses are (r,0), column witnesses (0,c)
        out.push(Violation { rule: Rule::TreeLikeCoverage, cells: uncovered });
    }
    for (cell, pointed) in grid.cells() {
        if !pointed || cell == Cell::new(1, 1) {
            continue;
        }
        let above_empty = !grid.any_above(cell.row, cell.col);
        let left_empty = !grid.any_left(cell.row, cell.col);
        let ok = match reading {
            RuleReading::Validated => above_empty != left_empty,
            RuleReading::Literal => above_empty || left_empty,
        };
        if !ok {
            out.push(Violation { rule: Rule::TreeLikePoint, cells: vec![cell] });
        }
    }
}

fn symmetry_rule(grid: &Grid, path: &BorderPath, out: &mut Vec<Violation>) {
    if !path.is_self_conjugate() {
        out.push(Violation { rule: Rule::Symmetry, cells: Vec::new() });
        return;
    }
    let asymmetric: Vec<Cell> =
        grid.cells().filter(|&(cell, p)| p && !grid.is_set(cell.col, cell.row)).map(|(cell, _)| cell).collect();
    if !asymmetric.is_empty() {
        out.push(Violation { rule: Rule::Symmetry, cells: asymmetric });
    }
}

fn column_rule(grid: &Grid, rule: Rule, out: &mut Vec<Violation>) {
    for c in 1..=grid.width {
        let rows = grid.column_rows(c);
        if !rows.iter().any(|&r| grid.is_set(r, c)) {
            out.push(Violation { rule, cells: rows.into_iter().map(|r| Cell::new(r, c)).collect() });
        }
    }
}

fn restriction_rule(grid: &Grid, rule: Rule, reading: RuleReading, out: &mut Vec<Violation>) {
    for (cell, v) in grid.cells() {
        if v || !grid.any_above(cell.row, cell.col) {
            continue;
        }
        let beside = match reading {
            RuleReading::Validated => grid.any_left(cell.row, cell.col),
            RuleReading::Literal => grid.any_right(cell.row, cell.col),
        };
        if beside {
            out.push(Violation { rule, cells: vec![cell] });
        }
    }
}

fn diagonal_rule(grid: &Grid, staircase: usize, out: &mut Vec<Violation>) {
    for i in 1..=staircase {
        if grid.get(i, i) == Some(false) {
            let ones: Vec<Cell> = (1..i).filter(|&c| grid.is_set(i, c)).map(|c| Cell::new(i, c)).collect();
            if !ones.is_empty() {
                let mut cells = vec![Cell::new(i, i)];
                cells.extend(ones);
                out.push(Violation { rule: Rule::TypeBDiagonal, cells });
            }
        }
    }
}

/// Marker cells of a 0/1 tableau, each list in row-major order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkerMap {
    /// Topmost 1 of every column holding a 1.
    pub topmost_ones: Vec<Cell>,
    /// Right-most restricted 0 of every row holding one.
    pub rightmost_restricted_zeros: Vec<Cell>,
    /// Every 0 with a 1 above it in its column.
    pub restricted_zeros: Vec<Cell>,
    /// Diagonal cells holding 0 (type-B only).
    pub diagonal_zeros: Vec<Cell>,
}

fn markers_of(rows: &Rows, staircase: usize) -> MarkerMap {
    let grid = Grid::new(rows);
    let mut map = MarkerMap::default();
    for (cell, v) in grid.cells() {
        if v {
            if !grid.any_above(cell.row, cell.col) {
                map.topmost_ones.push(cell);
            }
        } else {
            if grid.any_above(cell.row, cell.col) {
                map.restricted_zeros.push(cell);
            }
            if cell.row <= staircase && cell.row == cell.col {
                map.diagonal_zeros.push(cell);
            }
        }
    }
    for r in 1..=rows.len() {
        if let Some(&cell) = map.restricted_zeros.iter().rfind(|c| c.row == r) {
            map.rightmost_restricted_zeros.push(cell);
        }
    }
    map
}

fn unrestricted_rows_of(rows: &Rows, staircase: usize) -> Vec<usize> {
    let grid = Grid::new(rows);
    (1..=rows.len())
        .filter(|&r| {
            let row = &rows[r - 1];
            let diagonal_zero = r <= staircase && row.get(r - 1) == Some(&false);
            let restricted = (1..=row.len()).any(|c| !row[c - 1] && grid.any_above(r, c));
            !diagonal_zero && !restricted
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerStats {
    pub corner_count: usize,
    /// Only meaningful for the pointed families.
    pub occupied_corner_count: Option<usize>,
}

fn pointed_corner_stats(path: &BorderPath, rows: &Rows) -> CornerStats {
    let corners = path.corners();
    let occupied =
        corners.iter().filter_map(|&k| path.corner_cell(k)).filter(|cell| rows[cell.row - 1][cell.col - 1]).count();
    CornerStats { corner_count: corners.len(), occupied_corner_count: Some(occupied) }
}

/// Pointed Ferrers diagram of half-perimeter `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeLikeTableau {
    path: BorderPath,
    points: Rows,
}

impl TreeLikeTableau {
    pub fn new(path: BorderPath, points: Rows) -> Result<Self> {
        validate(Family::TreeLike, &path, &points)?.into_result(Family::TreeLike)?;
        Ok(TreeLikeTableau { path, points })
    }

    pub(crate) fn new_unchecked(path: BorderPath, points: Rows) -> Self {
        TreeLikeTableau { path, points }
    }

    pub fn from_cells(path: BorderPath, cells: &[Cell]) -> Result<Self> {
        let points = rows_from_cells(&path.row_lengths(), cells)?;
        Self::new(path, points)
    }

    pub fn size(&self) -> usize {
        self.path.half_perimeter() - 1
    }

    pub fn path(&self) -> &BorderPath {
        &self.path
    }

    pub fn points(&self) -> &Rows {
        &self.points
    }

    pub fn is_pointed(&self, cell: Cell) -> bool {
        self.points.get(cell.row.wrapping_sub(1)).and_then(|r| r.get(cell.col.wrapping_sub(1))) == Some(&true)
    }

    pub fn point_cells(&self) -> Vec<Cell> {
        cells_where(&self.points, true)
    }

    pub fn point_count(&self) -> usize {
        self.points.iter().flatten().filter(|&&p| p).count()
    }

    pub fn corner_stats(&self) -> CornerStats {
        pointed_corner_stats(&self.path, &self.points)
    }

    /// True when the path is self-conjugate and the points are closed under transposition.
    pub fn is_symmetric(&self) -> bool {
        self.path.is_self_conjugate() && self.point_cells().into_iter().all(|c| self.is_pointed(c.transpose()))
    }
}

/// 0/1-filled Ferrers diagram of half-perimeter `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermutationTableau {
    path: BorderPath,
    bits: Rows,
}

impl PermutationTableau {
    pub fn new(path: BorderPath, bits: Rows) -> Result<Self> {
        validate(Family::Permutation, &path, &bits)?.into_result(Family::Permutation)?;
        Ok(PermutationTableau { path, bits })
    }

    pub(crate) fn new_unchecked(path: BorderPath, bits: Rows) -> Self {
        PermutationTableau { path, bits }
    }

    /// The unique tableau of size 1: one empty row.
    pub fn single_row() -> Self {
        PermutationTableau { path: BorderPath::new(vec![Step::South]).expect("non-empty"), bits: vec![Vec::new()] }
    }

    pub fn size(&self) -> usize {
        self.path.half_perimeter()
    }

    pub fn path(&self) -> &BorderPath {
        &self.path
    }

    pub fn bits(&self) -> &Rows {
        &self.bits
    }

    pub fn markers(&self) -> MarkerMap {
        markers_of(&self.bits, 0)
    }

    /// Rows (1-based) without a restricted 0.
    pub fn unrestricted_rows(&self) -> Vec<usize> {
        unrestricted_rows_of(&self.bits, 0)
    }

    pub fn unrestricted_row_count(&self) -> usize {
        self.unrestricted_rows().len()
    }

    pub fn corner_stats(&self) -> CornerStats {
        CornerStats { corner_count: self.path.corner_count(), occupied_corner_count: None }
    }
}

/// 0/1-filled shifted Ferrers diagram of half-perimeter `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeBTableau {
    path: BorderPath,
    bits: Rows,
}

impl TypeBTableau {
    pub fn new(path: BorderPath, bits: Rows) -> Result<Self> {
        validate(Family::TypeB, &path, &bits)?.into_result(Family::TypeB)?;
        Ok(TypeBTableau { path, bits })
    }

    pub(crate) fn new_unchecked(path: BorderPath, bits: Rows) -> Self {
        TypeBTableau { path, bits }
    }

    pub fn size(&self) -> usize {
        self.path.half_perimeter()
    }

    pub fn path(&self) -> &BorderPath {
        &self.path
    }

    pub fn bits(&self) -> &Rows {
        &self.bits
    }

    pub fn staircase_rows(&self) -> usize {
        self.path.column_count()
    }

    pub fn markers(&self) -> MarkerMap {
        markers_of(&self.bits, self.staircase_rows())
    }

    /// Rows (1-based, staircase rows included) with neither a restricted 0 nor a diagonal 0.
    pub fn unrestricted_rows(&self) -> Vec<usize> {
        unrestricted_rows_of(&self.bits, self.staircase_rows())
    }

    pub fn unrestricted_row_count(&self) -> usize {
        self.unrestricted_rows().len()
    }

    pub fn corner_stats(&self) -> CornerStats {
        CornerStats { corner_count: self.path.corner_count(), occupied_corner_count: None }
    }
}

/// Tree-like tableau of size `2n + 1` invariant under transposition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymmetricTableau {
    inner: TreeLikeTableau,
}

impl SymmetricTableau {
    pub fn new(path: BorderPath, points: Rows) -> Result<Self> {
        validate(Family::Symmetric, &path, &points)?.into_result(Family::Symmetric)?;
        Ok(SymmetricTableau { inner: TreeLikeTableau { path, points } })
    }

    pub fn from_tree_like(inner: TreeLikeTableau) -> Result<Self> {
        if !inner.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(SymmetricTableau { inner })
    }

    pub(crate) fn new_unchecked(path: BorderPath, points: Rows) -> Self {
        SymmetricTableau { inner: TreeLikeTableau { path, points } }
    }

    pub fn inner(&self) -> &TreeLikeTableau {
        &self.inner
    }

    pub fn path(&self) -> &BorderPath {
        &self.inner.path
    }

    pub fn points(&self) -> &Rows {
        &self.inner.points
    }

    /// Index `n` of a tableau of size `2n + 1`.
    pub fn n(&self) -> usize {
        (self.inner.size() - 1) / 2
    }

    pub fn corner_stats(&self) -> CornerStats {
        self.inner.corner_stats()
    }
}

pub(crate) fn rows_from_cells(row_lengths: &[usize], cells: &[Cell]) -> Result<Rows> {
    let mut rows: Rows = row_lengths.iter().map(|&l| vec![false; l]).collect();
    for cell in cells {
        let slot = rows
            .get_mut(cell.row.wrapping_sub(1))
            .and_then(|r| r.get_mut(cell.col.wrapping_sub(1)))
            .ok_or_else(|| Error::ShapeFillingMismatch(format!("cell {cell} lies outside the shape")))?;
        *slot = true;
    }
    Ok(rows)
}

fn cells_where(rows: &Rows, value: bool) -> Vec<Cell> {
    Grid::new(rows).cells().filter(|&(_, v)| v == value).map(|(c, _)| c).collect()
}

/// Any tableau, tagged by family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tableau {
    TreeLike(TreeLikeTableau),
    Permutation(PermutationTableau),
    TypeB(TypeBTableau),
    Symmetric(SymmetricTableau),
}

impl Tableau {
    pub fn family(&self) -> Family {
        match self {
            Tableau::TreeLike(_) => Family::TreeLike,
            Tableau::Permutation(_) => Family::Permutation,
            Tableau::TypeB(_) => Family::TypeB,
            Tableau::Symmetric(_) => Family::Symmetric,
        }
    }

    pub fn path(&self) -> &BorderPath {
        match self {
            Tableau::TreeLike(t) => t.path(),
            Tableau::Permutation(t) => t.path(),
            Tableau::TypeB(t) => t.path(),
            Tableau::Symmetric(t) => t.path(),
        }
    }

    pub fn rows(&self) -> &Rows {
        match self {
            Tableau::TreeLike(t) => t.points(),
            Tableau::Permutation(t) => t.bits(),
            Tableau::TypeB(t) => t.bits(),
            Tableau::Symmetric(t) => t.points(),
        }
    }

    pub fn corner_stats(&self) -> CornerStats {
        match self {
            Tableau::TreeLike(t) => t.corner_stats(),
            Tableau::Permutation(t) => t.corner_stats(),
            Tableau::TypeB(t) => t.corner_stats(),
            Tableau::Symmetric(t) => t.corner_stats(),
        }
    }

    /// Unrestricted-row count for the 0/1 families.
    pub fn unrestricted_row_count(&self) -> Option<usize> {
        match self {
            Tableau::Permutation(t) => Some(t.unrestricted_row_count()),
            Tableau::TypeB(t) => Some(t.unrestricted_row_count()),
            _ => None,
        }
    }

    pub fn validate(&self) -> ValidationResult {
        validate(self.family(), self.path(), self.rows()).expect("tableau cells always cover their shape")
    }

    pub fn from_parts(family: Family, path: BorderPath, rows: Rows) -> Result<Self> {
        Ok(match family {
            Family::TreeLike => Tableau::TreeLike(TreeLikeTableau::new(path, rows)?),
            Family::Permutation => Tableau::Permutation(PermutationTableau::new(path, rows)?),
            Family::TypeB => Tableau::TypeB(TypeBTableau::new(path, rows)?),
            Family::Symmetric => Tableau::Symmetric(SymmetricTableau::new(path, rows)?),
        })
    }

    pub fn to_record(&self) -> TableauRecord {
        TableauRecord::from_parts(self.family(), self.path(), self.rows())
    }
}

impl From<TreeLikeTableau> for Tableau {
    fn from(t: TreeLikeTableau) -> Self {
        Tableau::TreeLike(t)
    }
}

impl From<PermutationTableau> for Tableau {
    fn from(t: PermutationTableau) -> Self {
        Tableau::Permutation(t)
    }
}

impl From<TypeBTableau> for Tableau {
    fn from(t: TypeBTableau) -> Self {
        Tableau::TypeB(t)
    }
}

impl From<SymmetricTableau> for Tableau {
    fn from(t: SymmetricTableau) -> Self {
        Tableau::Symmetric(t)
    }
}

pub const POINT: char = '●';
pub const EMPTY: char = '.';

/// Canonical serialized form: family, path and one string per row (top to
/// bottom). 0/1 families use `1`/`0`; pointed families use `●`/`.`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauRecord {
    pub family: Family,
    pub path: BorderPath,
    pub rows: Vec<String>,
}

impl TableauRecord {
    pub fn from_parts(family: Family, path: &BorderPath, rows: &Rows) -> Self {
        let (on, off) = if family.is_pointed() { (POINT, EMPTY) } else { ('1', '0') };
        let rows = rows.iter().map(|row| row.iter().map(|&v| if v { on } else { off }).collect()).collect();
        TableauRecord { family, path: path.clone(), rows }
    }

    /// Decodes the rows without checking the family's rules.
    pub fn filling(&self) -> Result<Rows> {
        let (on, off) = if self.family.is_pointed() { (POINT, EMPTY) } else { ('1', '0') };
        self.rows
            .iter()
            .enumerate()
            .map(|(r, text)| {
                text.chars()
                    .enumerate()
                    .map(|(c, ch)| match ch {
                        ch if ch == on => Ok(true),
                        ch if ch == off => Ok(false),
                        other => Err(Error::Parse(format!("unexpected '{other}' at ({},{})", r + 1, c + 1))),
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_tableau(&self) -> Result<Tableau> {
        Tableau::from_parts(self.family, self.path.clone(), self.filling()?)
    }
}
