//! Evaluated grid points and their CSV, JSON and text renderings.

use std::fmt::Write as _;

use quasibell::formulas::FidelityReport;
use quasibell::noise::noisy_average_fidelity;
use quasibell::{Error, Exposure, Family, NoiseKind, NoiseScenario, QuasiBellSpec};

pub const CSV_HEADER: [&str; 15] = [
    "family",
    "r",
    "theta",
    "noise",
    "eta",
    "exposure",
    "f_ave_analytic",
    "f_ave_sim",
    "gap",
    "concurrence",
    "masfi",
    "mfi",
    "singlet_fraction",
    "f_opt",
    "degenerate",
];

/// One parameter point to evaluate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub family: Family,
    pub r: f64,
    pub theta: f64,
    pub kind: NoiseKind,
    pub eta: f64,
    pub exposure: Exposure,
}

impl Point {
    pub fn scenario(&self) -> Result<NoiseScenario, Error> {
        match self.kind {
            NoiseKind::None => Ok(NoiseScenario::noiseless()),
            kind => NoiseScenario::new(kind, self.eta, self.exposure),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Values {
    pub f_ave_analytic: f64,
    pub f_ave_sim: f64,
    pub gap: f64,
    pub concurrence: f64,
    pub masfi: f64,
    pub mfi: f64,
    pub singlet_fraction: f64,
    pub f_opt: f64,
}

impl Values {
    fn fields(&self) -> [(&'static str, f64); 8] {
        [
            ("f_ave_analytic", self.f_ave_analytic),
            ("f_ave_sim", self.f_ave_sim),
            ("gap", self.gap),
            ("concurrence", self.concurrence),
            ("masfi", self.masfi),
            ("mfi", self.mfi),
            ("singlet_fraction", self.singlet_fraction),
            ("f_opt", self.f_opt),
        ]
    }
}

/// An evaluated point. `values` is `None` when the channel state is degenerate.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub family: Family,
    pub r: f64,
    pub theta: f64,
    pub scenario: NoiseScenario,
    pub values: Option<Values>,
    pub diagnostic: Option<String>,
}

impl Row {
    pub fn noise(&self) -> &'static str {
        self.scenario.kind().name()
    }

    pub fn exposure(&self) -> &'static str {
        if self.scenario.is_noiseless() {
            "none"
        } else {
            self.scenario.exposure().name()
        }
    }

    pub fn eta(&self) -> f64 {
        if self.scenario.is_noiseless() {
            0.0
        } else {
            self.scenario.damping()
        }
    }
}

/// Evaluates one point. Degenerate channels give a row without values;
/// out-of-domain parameters are errors.
pub fn evaluate(point: &Point) -> Result<Row, Error> {
    let scenario = point.scenario()?;
    let mut row = Row {
        family: point.family,
        r: point.r,
        theta: point.theta,
        scenario,
        values: None,
        diagnostic: None,
    };
    let spec = match QuasiBellSpec::new(point.family, point.r, point.theta) {
        Ok(spec) => spec,
        Err(e @ Error::DegenerateState { .. }) => {
            row.diagnostic = Some(e.to_string());
            return Ok(row);
        }
        Err(e) => return Err(e),
    };
    let report = FidelityReport::evaluate(&spec, &scenario)?;
    let f_ave_sim = noisy_average_fidelity(&spec, &scenario)?;
    row.values = Some(Values {
        f_ave_analytic: report.f_ave,
        f_ave_sim,
        gap: (report.f_ave - f_ave_sim).abs(),
        concurrence: report.concurrence,
        masfi: report.masfi,
        mfi: report.mfi,
        singlet_fraction: report.singlet_fraction,
        f_opt: report.f_opt,
    });
    Ok(row)
}

/// 17 significant digits; parses back to the same `f64`.
pub fn exact(x: f64) -> String {
    format!("{x:.16e}")
}

/// 6 significant digits for people.
pub fn human(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&mag) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn to_csv(rows: &[Row]) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("writing to memory");
    for row in rows {
        let mut rec = vec![
            row.family.name().to_string(),
            exact(row.r),
            exact(row.theta),
            row.noise().to_string(),
            exact(row.eta()),
            row.exposure().to_string(),
        ];
        match &row.values {
            Some(v) => rec.extend(v.fields().iter().map(|&(_, x)| exact(x))),
            None => rec.extend(std::iter::repeat_n(String::new(), 8)),
        }
        rec.push(row.values.is_none().to_string());
        w.write_record(&rec).expect("writing to memory");
    }
    w.into_inner().expect("flushing to memory")
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// A JSON array with one object per row; numbers carry 17 significant
/// digits and missing values are `null`.
pub fn to_json(rows: &[Row]) -> Vec<u8> {
    let mut out = String::from("[");
    for (i, row) in rows.iter().enumerate() {
        out.push_str(if i == 0 { "\n  {" } else { ",\n  {" });
        let _ = write!(
            out,
            "\"family\":{},\"r\":{},\"theta\":{},\"noise\":{},\"eta\":{},\"exposure\":{}",
            json_str(row.family.name()),
            exact(row.r),
            exact(row.theta),
            json_str(row.noise()),
            exact(row.eta()),
            json_str(row.exposure()),
        );
        let values = row.values.map(|v| v.fields());
        for (idx, name) in CSV_HEADER[6..14].iter().enumerate() {
            let text = values.map_or_else(|| "null".to_string(), |v| exact(v[idx].1));
            let _ = write!(out, ",\"{name}\":{text}");
        }
        let _ = write!(out, ",\"degenerate\":{}}}", row.values.is_none());
    }
    out.push_str(if rows.is_empty() { "]\n" } else { "\n]\n" });
    out.into_bytes()
}

/// The human-readable single-point report.
pub fn to_text(row: &Row) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family            {}", row.family);
    let _ = writeln!(out, "r                 {}", human(row.r));
    let _ = writeln!(out, "theta             {} rad", human(row.theta));
    let _ = writeln!(out, "noise             {}", row.noise());
    if !row.scenario.is_noiseless() {
        let _ = writeln!(out, "eta               {}", human(row.eta()));
        let _ = writeln!(out, "exposure          {}", row.exposure());
    }
    if let Some(v) = &row.values {
        for (name, x) in v.fields() {
            let _ = writeln!(out, "{name:<17} {}", human(x));
        }
    }
    out
}
