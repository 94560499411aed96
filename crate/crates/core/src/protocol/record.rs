//! Self-describing result rows for CSV and JSON export.

use serde::{Deserialize, Serialize};
use std::fmt;

use super::types::{Diagnostics, HpResult, NoiseScope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Ising,
    Ym,
    Haar,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Model::Ising => "ising",
            Model::Ym => "ym",
            Model::Haar => "haar",
        };
        f.write_str(s)
    }
}

/// One grid point of an experiment, with the full parameter echo.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HpRecord {
    pub model: Model,
    pub n: usize,
    pub n_a: usize,
    pub n_d: usize,
    pub placement: String,
    pub t: f64,
    pub dt: f64,
    pub m_steps: usize,
    pub k: Option<f64>,
    pub h: Option<f64>,
    pub m: Option<f64>,
    pub p: f64,
    pub scope: Option<NoiseScope>,
    pub n_traj: usize,
    pub p_epr: f64,
    pub p_err: f64,
    pub f_epr: f64,
    pub f_err: f64,
    pub seed: u64,
    pub diagnostics: Option<Diagnostics>,
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

impl HpRecord {
    pub fn from_result(res: &HpResult) -> HpRecordBuilder {
        HpRecordBuilder {
            res: res.clone(),
        }
    }

    pub fn csv_header(with_diagnostics: bool) -> String {
        let base = "model,N,N_A,N_D,placement,t,dt,M,K,h,m,p,scope,n_traj,\
                    p_epr,p_err,f_epr,f_err,seed";
        if with_diagnostics {
            format!("{base},s2_r,s2_bpd,s2_rbpd,i2,delta")
        } else {
            base.to_string()
        }
    }

    pub fn to_csv_row(&self) -> String {
        let mut row = format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.model,
            self.n,
            self.n_a,
            self.n_d,
            self.placement,
            self.t,
            self.dt,
            self.m_steps,
            opt(self.k),
            opt(self.h),
            opt(self.m),
            self.p,
            self.scope.map(|s| s.to_string()).unwrap_or_default(),
            self.n_traj,
            self.p_epr,
            self.p_err,
            self.f_epr,
            self.f_err,
            self.seed,
        );
        if let Some(d) = &self.diagnostics {
            row.push_str(&format!(
                ",{},{},{},{},{}",
                d.s2_r, d.s2_bpd, d.s2_rbpd, d.i2, d.delta
            ));
        }
        row
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}

/// Fills the parameter echo around an `HpResult`.
pub struct HpRecordBuilder {
    res: HpResult,
}

impl HpRecordBuilder {
    #[allow(clippy::too_many_arguments)]
    pub fn build(
        self,
        model: Model,
        n: usize,
        n_a: usize,
        n_d: usize,
        placement: String,
        dt: f64,
        m_steps: usize,
        k: Option<f64>,
        h: Option<f64>,
        m: Option<f64>,
        p: f64,
        scope: Option<NoiseScope>,
        seed: u64,
    ) -> HpRecord {
        HpRecord {
            model,
            n,
            n_a,
            n_d,
            placement,
            t: self.res.t,
            dt,
            m_steps,
            k,
            h,
            m,
            p,
            scope,
            n_traj: self.res.n_traj,
            p_epr: self.res.p_epr,
            p_err: self.res.p_err,
            f_epr: self.res.f_epr,
            f_err: self.res.f_err,
            seed,
            diagnostics: self.res.diagnostics,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> HpRecord {
        HpRecord {
            model: Model::Ising,
            n: 8,
            n_a: 1,
            n_d: 2,
            placement: "ising_default".into(),
            t: 1.5,
            dt: 0.1,
            m_steps: 15,
            k: None,
            h: Some(-1.05),
            m: Some(0.5),
            p: 0.001,
            scope: Some(NoiseScope::AllCnots),
            n_traj: 1000,
            p_epr: 0.3,
            p_err: 0.01,
            f_epr: 0.8,
            f_err: 0.02,
            seed: 42,
            diagnostics: None,
        }
    }

    #[test]
    fn csv_row_matches_header() {
        let r = sample();
        let header = HpRecord::csv_header(false);
        let row = r.to_csv_row();
        assert_eq!(
            header.split(',').count(),
            row.split(',').count()
        );
        assert_eq!(
            row,
            "ising,8,1,2,ising_default,1.5,0.1,15,,-1.05,0.5,0.001,all_cnots,1000,\
             0.3,0.01,0.8,0.02,42"
        );
    }

    #[test]
    fn csv_diagnostics_columns() {
        let mut r = sample();
        r.diagnostics = Some(Diagnostics {
            s2_r: 1.0,
            s2_bpd: 2.0,
            s2_rbpd: 1.5,
            i2: 1.5,
            delta: 0.9,
        });
        let header = HpRecord::csv_header(true);
        assert_eq!(
            header.split(',').count(),
            r.to_csv_row().split(',').count()
        );
    }

    #[test]
    fn json_round_trips() {
        let r = sample();
        let back: HpRecord = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
