//! Vertex transition coefficients for the plaquette operator.
//!
//! `lambda_coeff(s_i, s_j, j_i, j_j, j_b)` is the amplitude for raising or
//! lowering (`s = +1 / -1`) the two horizontal-ish spins of a vertex singlet
//! `|j_i, j_j, j_b>` by a half unit each. Radicands are formed in integer
//! arithmetic; transitions to nonexistent states return 0.

use super::halfint::{triangle_ok, HalfInt};

/// The four closed-form coefficients. `s_i`, `s_j` must be +1 or -1.
pub fn lambda_coeff(s_i: i8, s_j: i8, j_i: HalfInt, j_j: HalfInt, j_b: HalfInt) -> f64 {
    assert!(
        (s_i == 1 || s_i == -1) && (s_j == 1 || s_j == -1),
        "signs must be +1 or -1"
    );
    if !triangle_ok(j_i, j_j, j_b) {
        return 0.0;
    }
    let ti_new = j_i.shifted(s_i);
    let tj_new = j_j.shifted(s_j);
    if ti_new.is_negative()
        || tj_new.is_negative()
        || !triangle_ok(ti_new, tj_new, j_b)
    {
        return 0.0;
    }
    let (ti, tj, tb) = (
        j_i.twice() as i64,
        j_j.twice() as i64,
        j_b.twice() as i64,
    );
    // radicand numerator/denominator in twice-value units; each closed form
    // is sign * sqrt(num / den)
    let (sign, num, den) = match (s_i, s_j) {
        (1, 1) => (
            1.0,
            (4 + tb + ti + tj) * (2 - tb + ti + tj),
            4 * (ti + 1) * (tj + 2),
        ),
        (-1, -1) => (
            1.0,
            (tb - ti - tj) * (-2 - ti - tj - tb),
            4 * (ti + 1) * tj,
        ),
        (1, -1) => (
            -1.0,
            (2 + tb + ti - tj) * (tb - ti + tj),
            4 * (ti + 1) * tj,
        ),
        (-1, 1) => (
            1.0,
            (2 + tb - ti + tj) * (tb + ti - tj),
            4 * (ti + 1) * (tj + 2),
        ),
        _ => unreachable!(),
    };
    if num < 0 || den <= 0 {
        return 0.0;
    }
    sign * (num as f64 / den as f64).sqrt()
}
