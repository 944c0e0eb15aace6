use anyhow::Result;
use dasquare::powering::{cbh_alternation_check, trajectory, CbhVerdict};
use dasquare::structure::{predicted_constancy_power, zero_jordan_profile};
use dasquare::{
    classify, ClassificationFlags, JordanZeroProfile, PowerStepRecord, PowerTrajectory,
    SpectralSummary,
};
use serde::Serialize;

use crate::fmt::{self as f, Table};
use crate::input::Subject;
use crate::InvariantViolation;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub subject: Subject,
    pub classification: ClassificationFlags,
    pub spectra: SpectralSummary,
    pub jordan: JordanZeroProfile,
    /// Nilpotency index of the nilpotent part; 1EV squares only.
    pub predicted_constancy_power: Option<usize>,
    pub trajectory: Option<PowerTrajectory>,
    pub verdict: Option<CbhVerdict>,
    /// Spectra of every power in the trajectory, for the wide power table.
    #[serde(skip)]
    pub power_spectra: Vec<SpectralSummary>,
}

impl Report {
    pub fn build(subject: Subject, max_p: usize) -> Result<Self> {
        let a = subject.square();
        let spectra = SpectralSummary::of(a)?;
        let traj = trajectory(a, max_p)?;
        let mut power_spectra = vec![spectra.clone()];
        let mut power = a.clone();
        for _ in 1..traj.steps.len() {
            power = power.mul(a)?;
            power_spectra.push(SpectralSummary::of(&power)?);
        }
        let report = Self {
            classification: classify(a),
            jordan: zero_jordan_profile(a),
            predicted_constancy_power: spectra
                .one_ev
                .then(|| predicted_constancy_power(a))
                .transpose()?,
            verdict: Some(cbh_alternation_check(&traj)),
            trajectory: Some(traj),
            spectra,
            subject,
            power_spectra,
        };
        report.check()?;
        Ok(report)
    }

    /// The first trajectory step and the top-level spectra must agree, and a
    /// 1EV square must become constant exactly at its nilpotency index.
    fn check(&self) -> Result<()> {
        let Some(t) = &self.trajectory else { return Ok(()) };
        let first = &t.steps[0];
        let s = &self.spectra;
        if first.rank != s.rank
            || first.r_index != s.r_index
            || first.spread != s.spread
            || first.linesum != s.linesum
        {
            return Err(InvariantViolation("power 1 disagrees with the spectral summary".into()).into());
        }
        if let (Some(pred), Some(onset)) = (self.predicted_constancy_power, t.constancy_onset) {
            if pred != onset {
                return Err(InvariantViolation(format!(
                    "nilpotency index {pred} but constant from power {onset}"
                ))
                .into());
            }
        }
        Ok(())
    }

    pub fn markdown(&self) -> String {
        let s = &self.spectra;
        let c = &self.classification;
        let mut out = format!("# {}\n\n{}\n\n```text\n", self.subject.name, self.subject.provenance);
        out.push_str(&f::matrix_block(self.subject.square()));
        out.push_str("```\n\n## Classification\n\n");

        let mut t = Table::new(&["property", "value"]);
        t.row(&["type", &c.type_label.to_string()]);
        t.row(&["linesum", &f::opt_int(c.linesum.as_ref())]);
        t.row(&["d1 / d2", &format!("{} / {}", c.d1, c.d2)]);
        for (name, flag) in [
            ("Latin", c.is_latin),
            ("diagonal Latin", c.is_diagonal_latin),
            ("classic Latin", c.is_classic_latin),
            ("classic magic", c.is_classic_magic),
            ("associative", c.is_associative),
            ("pandiagonal", c.is_pandiagonal),
            ("ultramagic", c.is_ultramagic),
            ("Franklin half sums", c.franklin_half_sums),
            ("Franklin bent diagonals", c.franklin_bent),
            ("Franklin 2×2 quartets", c.franklin_quartet),
        ] {
            t.row(&[name, f::yes_no(flag)]);
        }
        if let Some(k) = &c.associative_constant {
            t.row(&["associative pair sum", &k.to_string()]);
        }
        out.push_str(&t.render());

        out.push_str("\n## Spectrum\n\n");
        let mut t = Table::new(&["quantity", "value"]);
        t.row(&["characteristic polynomial", &s.char_poly.to_string()]);
        t.row(&["eigenvalues", &f::eigenvalues(&s.eigenvalues)]);
        t.row(&["singular values", &f::floats(&s.singular_values)]);
        t.row(&["rank", &s.rank.to_string()]);
        t.row(&["μ (zero eigenvalues)", &s.mu.to_string()]);
        t.row(&["1EV", f::yes_no(s.one_ev)]);
        t.row(&["R-index", &f::opt_int(s.r_index.as_ref())]);
        t.row(&["Compression %", &f::opt_sig(s.compression_pct)]);
        t.row(&["Spread", &f::opt_rational(s.spread.as_ref())]);
        out.push_str(&t.render());

        out.push_str("\n## Zero eigenvalue structure\n\n");
        let mut t = Table::new(&["quantity", "value"]);
        let blocks: Vec<String> = self.jordan.block_sizes.iter().map(ToString::to_string).collect();
        t.row(&["Jordan blocks", &if blocks.is_empty() { "none".into() } else { blocks.join(", ") }]);
        t.row(&["largest block", &self.jordan.max_block.to_string()]);
        t.row(&[
            "predicted constancy power",
            &self
                .predicted_constancy_power
                .map_or_else(|| "—".into(), |p| p.to_string()),
        ]);
        out.push_str(&t.render());

        if let Some(traj) = &self.trajectory {
            out.push_str("\n## Powers\n\n");
            let mut t = Table::new(&["p", "CharPoly", "λ", "σ", "r", "R"]);
            for (step, sp) in traj.steps.iter().zip(&self.power_spectra) {
                t.row(&[
                    step.p.to_string(),
                    sp.char_poly.to_string(),
                    f::eigenvalues(&sp.eigenvalues),
                    f::floats(&sp.singular_values),
                    sp.rank.to_string(),
                    f::opt_int(sp.r_index.as_ref()),
                ]);
            }
            out.push_str(&t.render());
            out.push('\n');
            out.push_str(&trajectory_markdown(traj));
        }
        if let Some(v) = &self.verdict {
            out.push_str(&format!("\nverdict: {}\n", verdict_text(v)));
        }
        out
    }
}

pub fn verdict_text(v: &CbhVerdict) -> String {
    match v {
        CbhVerdict::Alternates => "odd powers DDA, even powers DA".into(),
        CbhVerdict::AllDda => "every power DDA".into(),
        CbhVerdict::ConstantAt { p, all_prior_dda } => format!(
            "constant from p = {p}{}",
            if *all_prior_dda { ", earlier powers DDA" } else { "" }
        ),
        CbhVerdict::Other => "no regular pattern".into(),
    }
}

/// The Type cell: constant powers show their value, DA-only powers their
/// diagonal sums.
pub fn type_cell(step: &PowerStepRecord, order: usize) -> String {
    if let Some(v) = &step.constant_value {
        return format!("constant: {v} {}", f::ones_symbol(order));
    }
    if step.type_label == dasquare::TypeLabel::DDA {
        return step.type_text.clone();
    }
    format!("{} d1={}, d2={}", step.type_text, step.d1, step.d2)
}

/// `p | r | C% | Spread | Type | R`, one row per power, then the onset.
pub fn trajectory_markdown(t: &PowerTrajectory) -> String {
    let order = t.base.order();
    let mut table = Table::new(&["p", "r", "C%", "Spread", "Type", "R"]);
    for s in &t.steps {
        table.row(&[
            s.p.to_string(),
            s.rank.to_string(),
            f::opt_sig(s.compression_pct),
            f::opt_rational(s.spread.as_ref()),
            type_cell(s, order),
            f::opt_int(s.r_index.as_ref()),
        ]);
    }
    let mut out = table.render();
    match (t.constancy_onset, t.truncated_at) {
        (Some(p), _) => out.push_str(&format!("\nconstant from p = {p}\n")),
        (None, Some(p)) => out.push_str(&format!("\nno constant power up to p = {p}\n")),
        (None, None) => {}
    }
    out
}
