//! Shape-level correspondence between tree-like and permutation tableaux, and
//! the bijection `F` from symmetric tree-like tableaux of size `2n + 1` onto
//! type-B permutation tableaux of size `n`, with its inverse.
//!
//! Coordinates: type-B cell `(i, j)` sits at `(i + 1, j + 1)` in the
//! symmetric tableau. `F` keeps the cells on or below the main diagonal,
//! minus the first column; the first row then has nothing left.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::decimal;
use crate::enumerator::Enumerator;
use crate::error::{Error, Result};
use crate::shapes::{BorderPath, Cell, Step};
use crate::tableaux::{
    rows_from_cells, validate, Family, PermutationTableau, Rows, SymmetricTableau, Tableau, TypeBTableau,
};

/// A tree-like shape of size `n` and the permutation shape of size `n` it
/// corresponds to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ShapeCorrespondence {
    pub tree_like_path: BorderPath,
    pub permutation_path: BorderPath,
}

impl ShapeCorrespondence {
    /// Extra corner the tree-like shape has: one exactly when the
    /// permutation path ends with a south step.
    pub fn corner_difference(&self) -> usize {
        usize::from(self.permutation_path.last() == Step::South)
    }
}

/// Drops the south-west-most border edge and the left-most column.
pub fn tree_like_to_permutation_shape(path: &BorderPath) -> Result<BorderPath> {
    if path.half_perimeter() < 2 || path.first() != Step::South || path.last() != Step::West {
        return Err(Error::NotATreeLikeShape(path.to_string()));
    }
    Ok(path.pop().expect("length at least 2"))
}

pub fn shape_correspondence(path: &BorderPath) -> Result<ShapeCorrespondence> {
    let permutation_path = tree_like_to_permutation_shape(path)?;
    Ok(ShapeCorrespondence { tree_like_path: path.clone(), permutation_path })
}

/// The symmetric path built around a type-B path: a leading south step, the
/// conjugate of the type-B path, the type-B path itself, and a closing west step.
pub fn symmetric_path_for(type_b_path: &BorderPath) -> BorderPath {
    let mut steps = vec![Step::South];
    steps.extend_from_slice(type_b_path.conjugate().steps());
    steps.extend_from_slice(type_b_path.steps());
    steps.push(Step::West);
    BorderPath::new(steps).expect("non-empty")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mark {
    Free,
    TopOne,
    RightZero,
}

fn bijection_error(msg: impl Into<String>) -> Error {
    Error::Bijection(msg.into())
}

/// The map `F`.
///
/// Topmost points of columns become `1_T`; the left-most point of each row,
/// unless it is already a `1_T`, becomes `0_R`. Every other cell then has
/// exactly one value consistent with those markers, which is verified rather
/// than assumed. Cells above the diagonal and the first column are dropped.
pub fn symmetric_to_type_b(t: &SymmetricTableau) -> Result<TypeBTableau> {
    let inner = t.inner();
    if !inner.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = t.n();
    if n == 0 {
        return Err(Error::Domain("the size-1 symmetric tableau has no type-B image".into()));
    }
    let points = inner.points();
    let lengths = inner.path().row_lengths();
    let width = lengths[0];

    let mut marks: Vec<Vec<Mark>> = lengths.iter().map(|&l| vec![Mark::Free; l]).collect();
    let mut top = vec![usize::MAX; width];
    for c in 0..width {
        let r = (0..lengths.len())
            .find(|&r| lengths[r] > c && points[r][c])
            .ok_or_else(|| bijection_error(format!("column {} has no point", c + 1)))?;
        top[c] = r;
        marks[r][c] = Mark::TopOne;
    }
    let mut right_zero = vec![None; lengths.len()];
    for (r, row) in points.iter().enumerate() {
        let c = row.iter().position(|&p| p).ok_or_else(|| bijection_error(format!("row {} has no point", r + 1)))?;
        if marks[r][c] != Mark::TopOne {
            marks[r][c] = Mark::RightZero;
            right_zero[r] = Some(c);
        }
    }
    for (r, row) in points.iter().enumerate() {
        for (c, &p) in row.iter().enumerate() {
            if p && marks[r][c] == Mark::Free {
                return Err(bijection_error(format!("point at ({},{}) is neither topmost nor leftmost", r + 1, c + 1)));
            }
        }
    }

    // forced completion
    let filled: Rows = lengths
        .iter()
        .enumerate()
        .map(|(r, &l)| {
            (0..l)
                .map(|c| match marks[r][c] {
                    Mark::TopOne => true,
                    Mark::RightZero => false,
                    Mark::Free if r < top[c] => false,
                    Mark::Free => right_zero[r].is_none_or(|z| c > z),
                })
                .collect()
        })
        .collect();
    check_markers(inner.path(), &filled, &marks)?;

    let b_path = BorderPath::new(inner.path().steps()[n + 1..2 * n + 1].to_vec())?;
    let shape = b_path.shifted();
    for (r, &len) in lengths.iter().enumerate().skip(1) {
        let kept = len.min(r + 1).saturating_sub(1);
        if kept != shape.row_length(r) {
            return Err(bijection_error(format!(
                "row {} keeps {kept} cells, type-B shape expects {}",
                r + 1,
                shape.row_length(r)
            )));
        }
    }
    let bits: Rows = (1..=shape.rows()).map(|i| (1..=shape.row_length(i)).map(|j| filled[i][j]).collect()).collect();
    TypeBTableau::new(b_path, bits).map_err(|e| bijection_error(format!("image is not a type-B tableau: {e}")))
}

/// The completed filling must reproduce exactly the markers it was built from.
fn check_markers(path: &BorderPath, filled: &Rows, marks: &[Vec<Mark>]) -> Result<()> {
    let as_perm = PermutationTableau::new_unchecked(path.clone(), filled.clone());
    let verdict = validate(Family::Permutation, as_perm.path(), filled)?;
    if !verdict.is_ok() {
        return Err(bijection_error("completion contradicts the 0/1 rules"));
    }
    let m = as_perm.markers();
    let placed = |want: Mark| -> BTreeSet<Cell> {
        marks
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.iter().enumerate().filter(move |&(_, &m)| m == want).map(move |(c, _)| Cell::new(r + 1, c + 1))
            })
            .collect()
    };
    if m.topmost_ones.into_iter().collect::<BTreeSet<_>>() != placed(Mark::TopOne)
        || m.rightmost_restricted_zeros.into_iter().collect::<BTreeSet<_>>() != placed(Mark::RightZero)
    {
        return Err(bijection_error("completion is not determined by the markers"));
    }
    Ok(())
}

/// The map `F⁻¹`.
///
/// A new left column is pointed on every unrestricted row; each `0_R` becomes
/// a point unless its row has a diagonal 0; each non-diagonal `1_T` becomes a
/// point. The root is added and the result mirrored across the diagonal.
pub fn type_b_to_symmetric(b: &TypeBTableau) -> Result<SymmetricTableau> {
    let markers = b.markers();
    let diagonal_zero_rows: BTreeSet<usize> = markers.diagonal_zeros.iter().map(|c| c.row).collect();
    let staircase = b.staircase_rows();

    let mut lower = vec![Cell::new(1, 1)];
    lower.extend(b.unrestricted_rows().into_iter().map(|r| Cell::new(r + 1, 1)));
    lower.extend(
        markers
            .rightmost_restricted_zeros
            .iter()
            .filter(|z| !diagonal_zero_rows.contains(&z.row))
            .map(|z| Cell::new(z.row + 1, z.col + 1)),
    );
    lower.extend(
        markers
            .topmost_ones
            .iter()
            .filter(|o| !(o.row <= staircase && o.row == o.col))
            .map(|o| Cell::new(o.row + 1, o.col + 1)),
    );
    let mut cells: BTreeSet<Cell> = lower.iter().copied().collect();
    cells.extend(lower.iter().map(|c| c.transpose()));

    let path = symmetric_path_for(b.path());
    let cells: Vec<Cell> = cells.into_iter().collect();
    let rows = rows_from_cells(&path.row_lengths(), &cells).map_err(|e| bijection_error(e.to_string()))?;
    SymmetricTableau::new(path, rows).map_err(|e| bijection_error(format!("image is not a symmetric tableau: {e}")))
}

/// Corner bookkeeping for symmetric tableaux of size `2n + 1` in terms of
/// type-B tableaux of size `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CornerDecomposition {
    pub n: usize,
    /// `2 c(B_n)`.
    #[serde(with = "decimal::big")]
    pub twice_type_b: BigUint,
    /// `2 |{B : last step south}|`.
    #[serde(with = "decimal::big")]
    pub south_term: BigUint,
    /// `|{B : first step west}|`.
    #[serde(with = "decimal::big")]
    pub west_term: BigUint,
    /// Corners over all symmetric tableaux of size `2n + 1`, counted directly.
    #[serde(with = "decimal::big")]
    pub symmetric_total: BigUint,
    /// `2^n (n-1)!`.
    #[serde(with = "decimal::big")]
    pub south_closed_form: BigUint,
    /// `2^(n-1) n!`.
    #[serde(with = "decimal::big")]
    pub west_closed_form: BigUint,
}

impl CornerDecomposition {
    pub fn sum(&self) -> BigUint {
        &self.twice_type_b + &self.south_term + &self.west_term
    }

    pub fn closed_forms_hold(&self) -> bool {
        self.south_term == self.south_closed_form && self.west_term == self.west_closed_form
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// Decomposes the symmetric corner total from both censuses; fails when the
/// decomposition does not add up.
pub fn symmetric_corner_decomposition(n: usize, enumerator: &Enumerator) -> Result<CornerDecomposition> {
    if n == 0 {
        return Err(Error::Domain("decomposition needs n >= 1".into()));
    }
    let b = enumerator.census(n, Family::TypeB)?;
    let sym = enumerator.census(n, Family::Symmetric)?;
    let d = CornerDecomposition {
        n,
        twice_type_b: b.total_corners * 2u32,
        south_term: b.last_step_south_count * 2u32,
        west_term: b.first_step_west_count,
        symmetric_total: sym.total_corners,
        south_closed_form: (BigUint::from(1u32) << n) * factorial(n - 1),
        west_closed_form: (BigUint::from(1u32) << (n - 1)) * factorial(n),
    };
    if d.sum() != d.symmetric_total {
        return Err(bijection_error(format!(
            "decomposition sums to {} but symmetric tableaux have {} corners",
            d.sum(),
            d.symmetric_total
        )));
    }
    Ok(d)
}

/// First tableau (in enumeration order) where `F⁻¹ ∘ F` or `F ∘ F⁻¹` fails.
pub fn round_trip_witness(t: &Tableau) -> Option<Tableau> {
    match t {
        Tableau::Symmetric(s) => match symmetric_to_type_b(s).and_then(|b| type_b_to_symmetric(&b)) {
            Ok(back) if &back == s => None,
            _ => Some(t.clone()),
        },
        Tableau::TypeB(b) => match type_b_to_symmetric(b).and_then(|s| symmetric_to_type_b(&s)) {
            Ok(back) if &back == b => None,
            _ => Some(t.clone()),
        },
        _ => None,
    }
}
