use serde::{Deserialize, Serialize};

use super::AnalysisReport;
use crate::board::render_fen;
use crate::kernel::format_value;

/// Serialized form of one component. Values use the expression syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDocument {
    pub span: String,
    pub value: String,
    pub name: String,
    pub ep_sensitive: bool,
    pub offscale_white: bool,
    pub offscale_black: bool,
}

/// Serialized [`AnalysisReport`] with stable field names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub board: String,
    pub components: Vec<ComponentDocument>,
    pub offset: String,
    pub total: String,
    pub total_name: String,
    pub outcome: String,
    pub winner_white_to_move: String,
    pub winner_black_to_move: String,
    pub mzz: bool,
    pub winning_moves_white: Vec<String>,
    pub winning_moves_black: Vec<String>,
    pub warnings: Vec<String>,
    pub flagged: bool,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl From<&AnalysisReport> for ReportDocument {
    fn from(r: &AnalysisReport) -> Self {
        let moves = |ms: &[crate::board::Move]| ms.iter().map(|m| m.to_string()).collect();
        ReportDocument {
            board: render_fen(&r.board),
            components: r
                .components
                .iter()
                .map(|c| ComponentDocument {
                    span: c.label(),
                    value: format_value(c.value.game),
                    name: c.value.name.describe(),
                    ep_sensitive: c.value.ep_sensitive,
                    offscale_white: c.value.offscale.white,
                    offscale_black: c.value.offscale.black,
                })
                .collect(),
            offset: format_value(r.offset),
            total: format_value(r.total),
            total_name: r.total_name.clone(),
            outcome: r.verdict().to_string(),
            winner_white_to_move: r.white_to_move.to_string(),
            winner_black_to_move: r.black_to_move.to_string(),
            mzz: r.mzz,
            winning_moves_white: moves(&r.white_moves),
            winning_moves_black: moves(&r.black_moves),
            warnings: r.warnings.iter().map(|w| w.to_string()).collect(),
            flagged: r.is_flagged(),
        }
    }
}
