use super::{Corner, Erratum, RankForm, RowRange};
use crate::quotients::GammaKind;
use crate::rootsys::Family;

use Corner::{Half, Pair, E};

/// A row of the maximal-corner table.
#[derive(Debug, Clone, Copy)]
pub struct CornerRow {
    pub label: &'static str,
    pub family: Family,
    pub rank_form: RankForm,
    pub range: RowRange,
    pub corners: &'static [Corner],
    /// `d_j` for each corner, in the same order.
    pub factors: &'static [&'static str],
}

/// A row of the quotient-corner table. The range is in the rank.
#[derive(Debug, Clone, Copy)]
pub struct QuotientCornerRow {
    pub label: &'static str,
    pub family: Family,
    pub range: RowRange,
    pub gamma: GammaKind,
    /// `None` where the entry is "unknown".
    pub corners: Option<&'static [Corner]>,
    /// Factors of `ψ` as printed.
    pub factors: &'static str,
    pub errata: &'static [Erratum],
}

impl QuotientCornerRow {
    pub fn erratum(&self, r: u32) -> Option<&Erratum> {
        self.errata.iter().find(|e| e.range.contains(r))
    }
}

const SAME: RankForm = RankForm::Same;

pub fn corner_table() -> &'static [CornerRow] {
    const fn row(
        label: &'static str,
        family: Family,
        rank_form: RankForm,
        range: RowRange,
        corners: &'static [Corner],
        factors: &'static [&'static str],
    ) -> CornerRow {
        CornerRow {
            label,
            family,
            rank_form,
            range,
            corners,
            factors,
        }
    }
    const ROWS: [CornerRow; 14] = [
        row(
            "a_{2r}",
            Family::A,
            RankForm::Affine(2, 0),
            RowRange::from(1),
            &[E("r"), E("r+1")],
            &["1", "1"],
        ),
        row(
            "a_{2r-1}",
            Family::A,
            RankForm::Affine(2, -1),
            RowRange::from(1),
            &[E("r")],
            &["1"],
        ),
        row(
            "b_2, b_3",
            Family::B,
            SAME,
            RowRange::between(2, 3),
            &[E("1")],
            &["1"],
        ),
        row(
            "b_4",
            Family::B,
            SAME,
            RowRange::only(4),
            &[E("1"), E("4")],
            &["1", "2"],
        ),
        row(
            "b_r, r>4",
            Family::B,
            SAME,
            RowRange::from(5),
            &[E("r")],
            &["2"],
        ),
        row("c_r", Family::C, SAME, RowRange::from(2), &[E("r")], &["1"]),
        row(
            "d_4",
            Family::D,
            SAME,
            RowRange::only(4),
            &[E("1"), E("3"), E("4")],
            &["1", "1", "1"],
        ),
        row(
            "d_r, r>4",
            Family::D,
            SAME,
            RowRange::from(5),
            &[E("r-1"), E("r")],
            &["1", "1"],
        ),
        row(
            "e_6",
            Family::E6,
            SAME,
            RowRange::only(6),
            &[E("1"), E("6")],
            &["1", "1"],
        ),
        row(
            "e_7",
            Family::E7,
            SAME,
            RowRange::only(7),
            &[E("7")],
            &["1"],
        ),
        row(
            "e_8",
            Family::E8,
            SAME,
            RowRange::only(8),
            &[E("1")],
            &["2"],
        ),
        row(
            "f_4",
            Family::F4,
            SAME,
            RowRange::only(4),
            &[E("4")],
            &["2"],
        ),
        row(
            "g_2",
            Family::G2,
            SAME,
            RowRange::only(2),
            &[E("1")],
            &["3"],
        ),
        row(
            "bc_r",
            Family::BC,
            SAME,
            RowRange::from(1),
            &[E("r")],
            &["2"],
        ),
    ];
    &ROWS
}

fn other_cyclic(r: u32) -> bool {
    let n = r + 1;
    (3..n).any(|k| n % k == 0)
}

const MIRROR: &str =
    "the diagram automorphism j -> r+1-j fixes the cut, so the mirror image is maximal too";
const D4: &str = "for d_4 the other half-spin corner has the same norm as e_1";
const D8: &str = "the non-corner vertex 1/2(e_1+e_k) ties with e_1 and e_4";

pub fn quotient_corner_table() -> &'static [QuotientCornerRow] {
    use GammaKind::*;
    const fn row(
        label: &'static str,
        family: Family,
        range: RowRange,
        gamma: GammaKind,
        corners: Option<&'static [Corner]>,
        factors: &'static str,
        errata: &'static [Erratum],
    ) -> QuotientCornerRow {
        QuotientCornerRow {
            label,
            family,
            range,
            gamma,
            corners,
            factors,
            errata,
        }
    }
    const fn fix(range: RowRange, corners: &'static [Corner], note: &'static str) -> Erratum {
        Erratum {
            range,
            corners,
            dims: &[],
            note,
        }
    }
    const A3: RowRange = RowRange::from(3).residue(4, 3);
    const A1: RowRange = RowRange::from(5).residue(4, 1);
    const SMALL: RowRange = RowRange::between(4, 6).even();
    const ROWS: [QuotientCornerRow; 18] = [
        row(
            "a_r, r>=3, r odd and (r+1)/2 even",
            Family::A,
            A3,
            Z2,
            Some(&[E("(r+1)/4")]),
            "1",
            &[fix(A3, &[E("(r+1)/4"), E("3(r+1)/4")], MIRROR)],
        ),
        row(
            "a_r, r>=3, r odd and (r+1)/2 odd",
            Family::A,
            A1,
            Z2,
            Some(&[Half("(r-1)/4", "(r+3)/4")]),
            "(1,1)",
            &[fix(
                A1,
                &[Half("(r-1)/4", "(r+3)/4"), Half("(3r+1)/4", "(3r+5)/4")],
                MIRROR,
            )],
        ),
        row(
            "a_r",
            Family::A,
            RowRange::from(1),
            FullCyclic,
            Some(&[Corner::Full]),
            "(1,...,1)",
            &[],
        ),
        row(
            "a_r",
            Family::A,
            RowRange::from(5).filtered(other_cyclic),
            Otherwise,
            None,
            "",
            &[],
        ),
        row(
            "b_r",
            Family::B,
            RowRange::from(2),
            Z2,
            Some(&[E("r")]),
            "2",
            &[],
        ),
        row(
            "c_r, r even",
            Family::C,
            RowRange::from(2).even(),
            Z2,
            Some(&[E("r/2")]),
            "2",
            &[],
        ),
        row(
            "c_r, r odd",
            Family::C,
            RowRange::from(3).odd(),
            Z2,
            Some(&[Half("(r-1)/2", "(r+1)/2")]),
            "(2,2)",
            &[],
        ),
        row(
            "d_r, r even",
            Family::D,
            RowRange::from(4).even(),
            KleinFour,
            Some(&[E("r/2")]),
            "2",
            &[],
        ),
        row(
            "d_r, r odd",
            Family::D,
            RowRange::from(5).odd(),
            Z4,
            Some(&[Half("(r-1)/2", "(r+1)/2")]),
            "(2,2)",
            &[],
        ),
        row(
            "d_r",
            Family::D,
            RowRange::from(4),
            VectorPair,
            Some(&[E("r-1"), E("r")]),
            "1; 1",
            &[],
        ),
        row(
            "d_r, r even, r<=6",
            Family::D,
            SMALL,
            HalfSpinMinus,
            Some(&[E("1")]),
            "1",
            &[fix(RowRange::only(4), &[E("1"), E("4")], D4)],
        ),
        row(
            "d_8",
            Family::D,
            RowRange::only(8),
            HalfSpinMinus,
            Some(&[E("1"), E("4")]),
            "1; 2",
            &[fix(
                RowRange::only(8),
                &[E("1"), E("4"), Pair("1", "8")],
                D8,
            )],
        ),
        row(
            "d_r, r even, r>=10",
            Family::D,
            RowRange::from(10).even(),
            HalfSpinMinus,
            Some(&[E("r/2")]),
            "2",
            &[],
        ),
        row(
            "d_r, r even, r<=6",
            Family::D,
            SMALL,
            HalfSpinPlus,
            Some(&[E("1")]),
            "1",
            &[fix(RowRange::only(4), &[E("1"), E("3")], D4)],
        ),
        row(
            "d_8",
            Family::D,
            RowRange::only(8),
            HalfSpinPlus,
            Some(&[E("1"), E("4")]),
            "1; 2",
            &[fix(
                RowRange::only(8),
                &[E("1"), E("4"), Pair("1", "7")],
                D8,
            )],
        ),
        row(
            "d_r, r even, r>=10",
            Family::D,
            RowRange::from(10).even(),
            HalfSpinPlus,
            Some(&[E("r/2")]),
            "2",
            &[],
        ),
        row(
            "e_6",
            Family::E6,
            RowRange::only(6),
            Z3,
            Some(&[E("4")]),
            "3",
            &[],
        ),
        row(
            "e_7",
            Family::E7,
            RowRange::only(7),
            Z2,
            Some(&[E("2")]),
            "2",
            &[],
        ),
    ];
    &ROWS
}
