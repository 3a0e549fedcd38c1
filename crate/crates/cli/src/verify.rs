//! Every structure check on one layered set, as one record per check.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sumset_forge_core::layered::{
    check_lemma5_with, check_prop7_with, corollary1_check, find_structure_with, flatten_sumset,
    prop6_lower_bound, uvw_partition,
};
use sumset_forge_core::{CheckOutcome, Error, Ineq7Status, LayeredSet, StructureOutcome, ThresholdConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    NotApplicable,
    Holds,
    /// Holds with equality where strict inequality is claimed.
    Equality,
    Violated,
}

impl Status {
    pub fn is_finding(self) -> bool {
        matches!(self, Self::Equality | Self::Violated)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub status: Status,
    pub detail: Value,
}

impl CheckRecord {
    fn new(check: &str, status: Status, detail: Value) -> Self {
        Self { check: check.to_owned(), status, detail }
    }

    fn from_outcome(check: &str, outcome: &CheckOutcome) -> Self {
        let status = match (outcome.applicable, outcome.holds) {
            (false, _) => Status::NotApplicable,
            (true, true) => Status::Holds,
            (true, false) => Status::Violated,
        };
        Self::new(check, status, json!({ "witness": outcome.witness }))
    }
}

/// The check names, in record order.
pub const CHECKS: [&str; 8] =
    ["flatten", "prop6", "corollary1", "prop7", "structure", "uvw", "lemma5", "ineq7"];

pub fn verify(l: &LayeredSet, cfg: &ThresholdConfig) -> Vec<CheckRecord> {
    let double = flatten_sumset(l).size();
    let mut out = Vec::with_capacity(CHECKS.len());
    out.push(CheckRecord::new(
        "flatten",
        Status::Holds,
        json!({ "size": l.size(), "sumset_size": double, "s": l.s(), "d": l.modulus() }),
    ));
    out.push(match prop6_lower_bound(l) {
        Ok(bound) => {
            CheckRecord::new("prop6", Status::Holds, json!({ "bound": bound, "sumset_size": double }))
        }
        Err(e @ Error::TheoremViolation(_)) => {
            CheckRecord::new("prop6", Status::Violated, json!({ "error": e.to_string() }))
        }
        Err(e) => CheckRecord::new("prop6", Status::NotApplicable, json!({ "reason": e.to_string() })),
    });
    out.push(match corollary1_check(l) {
        Ok(c) => CheckRecord::from_outcome("corollary1", &c),
        Err(e) => CheckRecord::new("corollary1", Status::NotApplicable, json!({ "reason": e.to_string() })),
    });
    out.push(CheckRecord::from_outcome("prop7", &check_prop7_with(l, cfg)));

    let structure = find_structure_with(l, cfg);
    out.push(match &structure {
        StructureOutcome::NotApplicable(reason) => {
            CheckRecord::new("structure", Status::NotApplicable, json!({ "reason": reason }))
        }
        StructureOutcome::Found(w) => CheckRecord::new("structure", Status::Holds, json!({ "witness": w })),
        StructureOutcome::ConclusionFailed { witness, failed } => {
            CheckRecord::new("structure", Status::Violated, json!({ "witness": witness, "failed": failed }))
        }
    });

    let Some(w) = structure.witness() else {
        let reason = json!({ "reason": "no structure witness" });
        for check in ["uvw", "lemma5", "ineq7"] {
            out.push(CheckRecord::new(check, Status::NotApplicable, reason.clone()));
        }
        return out;
    };
    let h = w.subgroup(l.group());
    let p = uvw_partition(l, &h);
    out.push(CheckRecord::new(
        "uvw",
        Status::Holds,
        json!({ "subgroup_order": h.order(), "u": p.u(), "v": p.v(), "w": p.w(), "partition": p }),
    ));
    out.push(match check_lemma5_with(l, &h, cfg) {
        Ok(c) => {
            let mut rec = CheckRecord::from_outcome("lemma5", &c);
            rec.detail["u"] = json!(p.u());
            rec.detail["w"] = json!(p.w());
            rec
        }
        Err(e) => CheckRecord::new("lemma5", Status::NotApplicable, json!({ "reason": e.to_string() })),
    });
    let status = match w.ineq7.status {
        Ineq7Status::Strict => Status::Holds,
        Ineq7Status::Equality => Status::Equality,
        Ineq7Status::Violated => Status::Violated,
    };
    out.push(CheckRecord::new(
        "ineq7",
        status,
        json!({
            "lhs": w.ineq7.lhs,
            "rhs": w.ineq7.rhs,
            "subgroup_order": h.order(),
            "saturated_extremal": w.saturated_extremal,
        }),
    ));
    out
}
