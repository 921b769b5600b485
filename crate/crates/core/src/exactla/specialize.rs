use std::sync::OnceLock;

use super::{bitsliced, elementwise, Matrix};
use crate::fields::{Field, Gf2m, RatFunc, RatFuncField};

/// Degree of the finite field in which `t` is specialised.
pub const SPECIALIZATION_DEGREE: u32 = 8;

const POINT_COUNT: usize = 6;

/// How a rank over F₂(t) was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankRoute {
    /// Full rank after `t ↦ point` in F₂⁸; rank cannot rise under
    /// specialisation, so this certifies the generic rank.
    Specialized { point: u32 },
    /// Elimination over F₂(t).
    Exact,
}

fn target() -> &'static (Gf2m, Vec<u32>) {
    static CELL: OnceLock<(Gf2m, Vec<u32>)> = OnceLock::new();
    CELL.get_or_init(|| {
        let field = Gf2m::with_degree(SPECIALIZATION_DEGREE).expect("supported degree");
        // Points outside every proper subfield, so that no low-degree
        // polynomial in t vanishes at them by accident.
        let points = field
            .elements()
            .filter(|&x| field.frobenius(&x, 4) != x)
            .take(POINT_COUNT)
            .collect();
        (field, points)
    })
}

fn specialize(a: &Matrix<RatFuncField>, field: &Gf2m, point: u32) -> Option<Matrix<Gf2m>> {
    a.try_map(field, |e| e.evaluate(field, point))
}

fn specialize_vec(v: &[RatFunc], field: &Gf2m, point: u32) -> Option<Vec<u32>> {
    v.iter().map(|e| e.evaluate(field, point)).collect()
}

/// Rank of a matrix over F₂(t) together with the route that proved it.
pub fn certified_rank(a: &Matrix<RatFuncField>) -> (usize, RankRoute) {
    let full = a.rows().min(a.cols());
    let (field, points) = target();
    for &point in points {
        if let Some(s) = specialize(a, field, point) {
            if bitsliced::rank(&s) == full {
                return (full, RankRoute::Specialized { point });
            }
        }
    }
    (elementwise::rank(a), RankRoute::Exact)
}

/// Membership of `b` in the column space of `a` over F₂(t).
///
/// A surjective specialisation proves membership. An injective
/// specialisation of `a` whose augmentation by `b` has larger rank proves
/// non-membership. Anything else falls back to exact solving.
pub(crate) fn certified_contains(a: &Matrix<RatFuncField>, b: &[RatFunc]) -> bool {
    let (field, points) = target();
    for &point in points {
        let (Some(s), Some(sb)) = (specialize(a, field, point), specialize_vec(b, field, point)) else {
            continue;
        };
        let r = bitsliced::rank(&s);
        if r == a.rows() {
            return true;
        }
        if r == a.cols() && !bitsliced::column_space_contains(&s, &sb) {
            return false;
        }
    }
    elementwise::solve_many(a, &[b.to_vec()])[0].is_some()
}
