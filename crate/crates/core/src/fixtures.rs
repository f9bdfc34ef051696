//! Data files shipped in the workspace `fixtures/` directory, embedded at
//! compile time.

use crate::betti::BettiTable;
use crate::field::Field;
use crate::ideal::GradedIdeal;
use crate::io::{parse_ideal, parse_points};
use crate::points::Point;

pub const BETTI_A1_JSON: &str = include_str!("../../../fixtures/betti_a1.json");
pub const BETTI_A1_DIAGRAM: &str = include_str!("../../../fixtures/betti_a1.txt");
pub const BETTI_A2_JSON: &str = include_str!("../../../fixtures/betti_a2.json");
pub const BETTI_A2_DIAGRAM: &str = include_str!("../../../fixtures/betti_a2.txt");
pub const BETTI_MAX_WLP_JSON: &str = include_str!("../../../fixtures/betti_max_wlp.json");
pub const BETTI_LEVEL_JSON: &str = include_str!("../../../fixtures/betti_level.json");
pub const KCONFIG_POINTS: &str = include_str!("../../../fixtures/kconfig_1245.points");
pub const POINTS_PLUS_M6_IDEAL: &str = include_str!("../../../fixtures/points_plus_m6.ideal");
pub const NON_WLP_IDEAL: &str = include_str!("../../../fixtures/nonwlp.ideal");
pub const LEX_121_IDEAL: &str = include_str!("../../../fixtures/lex_121.ideal");

/// Hilbert function shared by the two twelve-point tables.
pub const POINTS_HF: &str = "1,3,6,10,12,12";
/// Hilbert function shared by the level and maximal-WLP tables.
pub const LEVEL_HF: &str = "1,3,5,7,9,11,11,8,5,2";

fn table(json: &str) -> BettiTable {
    BettiTable::from_json(json, Some(3)).expect("shipped table parses")
}

/// Level table of `I_Z + m^6` for the twelve points.
pub fn betti_a1() -> BettiTable {
    table(BETTI_A1_JSON)
}

/// The table obtained from [`betti_a1`] by cancelling redundant terms.
pub fn betti_a2() -> BettiTable {
    table(BETTI_A2_JSON)
}

/// Resolution of an algebra with Hilbert function [`LEVEL_HF`] having the
/// WLP and maximal Betti numbers among such algebras.
pub fn betti_max_wlp() -> BettiTable {
    table(BETTI_MAX_WLP_JSON)
}

/// Resolution of a level algebra with Hilbert function [`LEVEL_HF`].
pub fn betti_level() -> BettiTable {
    table(BETTI_LEVEL_JSON)
}

pub fn k_configuration() -> Vec<Point> {
    parse_points(KCONFIG_POINTS).expect("shipped points parse")
}

pub fn points_plus_m6() -> GradedIdeal {
    parse_ideal(POINTS_PLUS_M6_IDEAL, Field::Rational).expect("shipped ideal parses")
}

pub fn non_wlp_ideal() -> GradedIdeal {
    parse_ideal(NON_WLP_IDEAL, Field::Rational).expect("shipped ideal parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::hilbert_numerator_check;
    use crate::points::k_configuration_points;

    #[test]
    fn diagrams_match_json() {
        assert_eq!(BettiTable::from_diagram(BETTI_A1_DIAGRAM, Some(3)).unwrap(), betti_a1());
        assert_eq!(BettiTable::from_diagram(BETTI_A2_DIAGRAM, Some(3)).unwrap(), betti_a2());
        assert_eq!(betti_a1().to_diagram(), BETTI_A1_DIAGRAM);
    }

    #[test]
    fn tables_are_consistent() {
        let h = POINTS_HF.parse().unwrap();
        assert!(hilbert_numerator_check(&betti_a1(), &h));
        assert!(hilbert_numerator_check(&betti_a2(), &h));
        let h = LEVEL_HF.parse().unwrap();
        assert!(hilbert_numerator_check(&betti_max_wlp(), &h));
        assert!(hilbert_numerator_check(&betti_level(), &h));
    }

    #[test]
    fn points_file_is_the_builtin_configuration() {
        assert_eq!(k_configuration(), k_configuration_points());
        assert_eq!(points_plus_m6().quotient(8).unwrap().hilbert_function().to_string(), POINTS_HF);
        assert_eq!(non_wlp_ideal().quotient(8).unwrap().hilbert_function().to_string(), "1,3,6,6,3");
    }
}
