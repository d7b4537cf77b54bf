//! The difference conditions cutting out the bases of `W_{N(kΛ₀)}` and
//! `W_{L(kΛ₀)}`, evaluated inequality by inequality on modes.

use serde::Serialize;

use super::{Color, QPMonomial, QuasiParticle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `m_{p,1} ≤ −n_{p,1} − Σ_{p>p'>0} 2 min{n_{p,1}, n_{p',1}}`.
    SingleBound,
    /// `m_{p+1,i} ≤ m_{p,i} − 2n_{p,i}` when `n_{p,i} = n_{p+1,i}`.
    EqualChargeGap,
    /// The color-2 single bound, including `Σ_q min{2n_{q,1}, n_{p,2}}`.
    ColorInteraction,
    /// `n_{p,1} ≤ k`, `n_{p,2} ≤ 2k`.
    ChargeCap,
}

/// One evaluated inequality `value ≤ bound`.
///
/// For [`Rule::ChargeCap`] `value` is the charge; otherwise it is the mode
/// `m_{p,i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub color: Color,
    pub position: usize,
    pub rule: Rule,
    pub bound: i64,
    pub value: i64,
    pub satisfied: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DiffConditionReport {
    pub checks: Vec<ConditionCheck>,
    /// Set when the monomial has color-2 quasi-particles but no color-1
    /// ones, so every interaction sum is empty.
    pub empty_interaction: bool,
}

impl DiffConditionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.satisfied)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionCheck> {
        self.checks.iter().filter(|c| !c.satisfied)
    }

    fn push(&mut self, color: Color, position: usize, rule: Rule, bound: i64, value: i64) {
        self.checks.push(ConditionCheck {
            color,
            position,
            rule,
            bound,
            value,
            satisfied: value <= bound,
        });
    }
}

fn pair_sum(qps: &[QuasiParticle], p: usize) -> i64 {
    let n = qps[p].charge;
    qps[..p]
        .iter()
        .map(|q| 2 * i64::from(n.min(q.charge)))
        .sum()
}

fn same_color_checks(
    report: &mut DiffConditionReport,
    color: Color,
    qps: &[QuasiParticle],
    color1: &[QuasiParticle],
) {
    for (idx, qp) in qps.iter().enumerate() {
        let n = i64::from(qp.charge);
        let mut bound = -n - pair_sum(qps, idx);
        let rule = match color {
            Color::One => Rule::SingleBound,
            Color::Two => {
                bound += color1
                    .iter()
                    .map(|q| i64::from((2 * q.charge).min(qp.charge)))
                    .sum::<i64>();
                Rule::ColorInteraction
            }
        };
        report.push(color, idx + 1, rule, bound, qp.mode());
        if idx > 0 && qps[idx - 1].charge == qp.charge {
            let prev = &qps[idx - 1];
            report.push(
                color,
                idx + 1,
                Rule::EqualChargeGap,
                prev.mode() - 2 * i64::from(prev.charge),
                qp.mode(),
            );
        }
    }
}

/// Membership test for the basis of `W_{N(kΛ₀)}`.
pub fn check_conditions_n(b: &QPMonomial) -> DiffConditionReport {
    let mut report = DiffConditionReport {
        checks: Vec::new(),
        empty_interaction: !b.color2.is_empty() && b.color1.is_empty(),
    };
    same_color_checks(&mut report, Color::One, &b.color1, &b.color1);
    same_color_checks(&mut report, Color::Two, &b.color2, &b.color1);
    report
}

/// Membership test for the basis of `W_{L(kΛ₀)}`: the `N` conditions plus
/// the charge caps `k` (color 1) and `2k` (color 2).
pub fn check_conditions_l(b: &QPMonomial, k: u32) -> DiffConditionReport {
    let mut report = check_conditions_n(b);
    for (color, cap) in [(Color::One, k), (Color::Two, 2 * k)] {
        for (idx, qp) in b.particles(color).iter().enumerate() {
            report.push(
                color,
                idx + 1,
                Rule::ChargeCap,
                i64::from(cap),
                i64::from(qp.charge),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(c2: &[(u32, i64)], c1: &[(u32, i64)]) -> QPMonomial {
        QPMonomial::from_modes(c2, c1).unwrap()
    }

    #[test]
    fn minimal_color_one() {
        let r = check_conditions_n(&mono(&[], &[(1, -1)]));
        assert!(r.passed());
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].bound, -1);
        assert_eq!(r.checks[0].rule, Rule::SingleBound);
        assert!(!r.empty_interaction);
        assert!(!check_conditions_n(&mono(&[], &[(1, 0)])).passed());
    }

    #[test]
    fn equal_charge_gap_color_two() {
        let r = check_conditions_n(&mono(&[(1, -1), (1, -2)], &[]));
        assert!(!r.passed());
        let fail: Vec<_> = r.failures().collect();
        // the single bound of position 2 is −1 − 2 = −3 and the gap bound is −3
        assert!(fail
            .iter()
            .any(|c| c.rule == Rule::EqualChargeGap && c.bound == -3 && c.value == -2));
        assert!(r.empty_interaction);
        assert!(check_conditions_n(&mono(&[(1, -1), (1, -3)], &[])).passed());
    }

    #[test]
    fn color_interaction_bound() {
        let r = check_conditions_n(&mono(&[(2, -2)], &[(1, -1)]));
        assert!(r.passed());
        let c2 = r.checks.iter().find(|c| c.color == Color::Two).unwrap();
        assert_eq!(c2.rule, Rule::ColorInteraction);
        assert_eq!(c2.bound, 0);
        // the interaction allows a non-negative mode
        assert!(check_conditions_n(&mono(&[(2, 0)], &[(1, -1)])).passed());
        assert!(!check_conditions_n(&mono(&[(2, 1)], &[(1, -1)])).passed());
        // mode 1 becomes admissible with two color-1 charges
        assert!(check_conditions_n(&mono(&[(1, 1)], &[(1, -1), (1, -3)])).passed());
    }

    #[test]
    fn charge_caps() {
        for m in [-2, -5, -9] {
            let r = check_conditions_l(&mono(&[], &[(2, m)]), 1);
            assert!(!r.passed());
            assert!(r
                .failures()
                .any(|c| c.rule == Rule::ChargeCap && c.value == 2 && c.bound == 1));
        }
        let r = check_conditions_l(&mono(&[(2, -2)], &[]), 1);
        assert!(r.passed());
        assert!(!check_conditions_l(&mono(&[(3, -3)], &[]), 1).passed());
    }

    #[test]
    fn l_pass_implies_n_pass() {
        let cases = [
            mono(&[(2, -2)], &[(1, -1)]),
            mono(&[(1, -1), (1, -2)], &[(1, -1)]),
            mono(&[(2, -6), (1, -1)], &[(2, -4), (1, -7)]),
        ];
        for b in &cases {
            for k in 1..4 {
                if check_conditions_l(b, k).passed() {
                    assert!(check_conditions_n(b).passed());
                }
            }
        }
    }
}
