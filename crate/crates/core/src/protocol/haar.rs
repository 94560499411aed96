//! Closed-form baselines for Haar-random evolution.

use crate::{Error, Result};

/// Exact and large-dimension approximate baselines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HaarBaselines {
    pub p_exact: f64,
    pub p_approx: f64,
    pub f_exact: f64,
    pub f_approx: f64,
    pub purity_rd_exact: f64,
    pub purity_rd_approx: f64,
}

fn check_dim(label: &str, d: u64) -> Result<()> {
    if d == 0 || !d.is_power_of_two() {
        return Err(Error::invalid(format!(
            "{label} = {d} is not a positive power of two"
        )));
    }
    Ok(())
}

/// Haar-averaged projection probability, fidelity, and Tr[rho_RD^2], exact
/// and in their large-dimension approximations.
pub fn haar_baselines(d_a: u64, d_b: u64, d_c: u64, d_d: u64) -> Result<HaarBaselines> {
    check_dim("d_A", d_a)?;
    check_dim("d_B", d_b)?;
    check_dim("d_C", d_c)?;
    check_dim("d_D", d_d)?;
    if d_a * d_b != d_c * d_d {
        return Err(Error::invalid(format!(
            "d_A*d_B = {} but d_C*d_D = {}",
            d_a * d_b,
            d_c * d_d
        )));
    }
    let (da, db, dc, dd) = (d_a as u128, d_b as u128, d_c as u128, d_d as u128);
    let d = da * db;

    // p = (d_B^2 + d_C^2 - d_C^2/d_A^2 - 1) / (d^2 - 1), cleared of the
    // inner fraction by multiplying through with d_A^2
    let p_num = (db * db + dc * dc - 1) * da * da - dc * dc;
    let p_den = da * da * (d * d - 1);
    let p_exact = p_num as f64 / p_den as f64;
    let f_exact = p_den as f64 / (da * da * p_num) as f64;

    let (daf, dbf, dcf, ddf) = (da as f64, db as f64, dc as f64, dd as f64);
    let p_approx = 1.0 / (daf * daf) + 1.0 / (ddf * ddf) - 1.0 / (daf * daf * ddf * ddf);
    let f_approx = 1.0 / (1.0 + (daf / ddf) * (daf / ddf));

    let df = d as f64;
    let purity_rd_exact = (dbf * dcf + daf * ddf) / (df * df - 1.0)
        - (dbf * ddf + daf * dcf) / (df * (df * df - 1.0));
    let purity_rd_approx = 1.0 / (daf * ddf) + 1.0 / (dbf * dcf);

    Ok(HaarBaselines {
        p_exact,
        p_approx,
        f_exact,
        f_approx,
        purity_rd_exact,
        purity_rd_approx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_example_values() {
        let b = haar_baselines(2, 128, 64, 4).unwrap();
        assert!((b.p_exact - 19455.0 / 65535.0).abs() < 1e-15);
        assert!((b.f_exact - 65535.0 / 77820.0).abs() < 1e-15);
        assert!((b.p_approx - 0.296875).abs() < 1e-15);
        assert!((b.f_approx - 0.8).abs() < 1e-15);
        assert!((b.purity_rd_exact - 0.125086).abs() < 5e-7);
        assert!((b.purity_rd_approx - (1.0 / 8.0 + 1.0 / 8192.0)).abs() < 1e-15);
    }

    #[test]
    fn fidelity_inverts_probability() {
        for (da, db, dc, dd) in [(2, 8, 4, 4), (4, 16, 8, 8), (2, 2, 2, 2)] {
            let b = haar_baselines(da, db, dc, dd).unwrap();
            assert!((b.f_exact * (da * da) as f64 * b.p_exact - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn dimension_constraints_enforced() {
        assert!(haar_baselines(2, 128, 64, 8).is_err());
        assert!(haar_baselines(3, 3, 3, 3).is_err());
        assert!(haar_baselines(0, 2, 2, 0).is_err());
    }
}
