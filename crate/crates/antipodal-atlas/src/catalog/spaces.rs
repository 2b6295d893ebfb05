use super::{Corner, Dims, Erratum, Multiplicities, RankForm, RowRange, SpaceDescriptor};
use crate::quotients::GammaKind;
use crate::rootsys::{Family, LengthClass};

use Corner::E;
use GammaKind::*;
use LengthClass::{Long, Medium, Short};

const ONE: Multiplicities = Multiplicities::Uniform("1");
const TWO: Multiplicities = Multiplicities::Uniform("2");
const FOUR: Multiplicities = Multiplicities::Uniform("4");
const EIGHT: Multiplicities = Multiplicities::Uniform("8");

const SAME: RankForm = RankForm::Same;
const ODD_RANK: RankForm = RankForm::Affine(2, -1);
const EVEN_RANK: RankForm = RankForm::Affine(2, 0);
const NEXT_ODD_RANK: RankForm = RankForm::Affine(2, 1);

fn other_cyclic(r: u32) -> bool {
    let n = r + 1;
    (3..n).any(|k| n % k == 0)
}

const MIRROR: &str = "the diagram automorphism j -> R+1-j of a_R fixes the cut, so the mirror \
                      image of the listed point is maximal too";
const D4_TRIALITY: &str = "for d_4 the cut at a half-spin corner leaves e_1 and the other \
                           half-spin corner at equal norm";
const D8_VERTEX: &str = "max(P') also contains the vertex 1/2(e_1+e_8) (resp. 1/2(e_1+e_7)), \
                         which is not a corner";

const fn fix(range: RowRange, dims: &'static [&'static str], note: &'static str) -> Erratum {
    Erratum {
        range,
        corners: &[],
        dims,
        note,
    }
}

const D4_ERRATUM: Erratum = fix(RowRange::only(4), &["0", "0"], D4_TRIALITY);
const GR88_ERRATUM: Erratum = fix(RowRange::only(8), &["0", "r^2/2", "28"], D8_VERTEX);
const SPIN16_ERRATUM: Erratum = fix(RowRange::only(8), &["0", "64", "56"], D8_VERTEX);
const SU_ODD_ERRATUM: Erratum = fix(RowRange::from(1).odd(), &["0", "0"], MIRROR);
const SU_EVEN_ERRATUM: Erratum = fix(RowRange::from(2).even(), &["4r+2", "4r+2"], MIRROR);

const BASE: SpaceDescriptor = SpaceDescriptor {
    table: 0,
    cartan_label: "",
    name: "",
    condition: "",
    family: Family::A,
    rank_form: SAME,
    sigma_label: "",
    range: RowRange::from(1),
    uses_q: false,
    multiplicities: ONE,
    dim_m: "",
    gammas: &[],
    gamma_label: "",
    corners: &[],
    dims: Dims::Unknown,
    errata: &[],
};

macro_rules! row {
    ($($field:ident : $value:expr),* $(,)?) => {
        SpaceDescriptor { $($field: $value,)* ..BASE }
    };
}

fn exceptional(
    table: u8,
    label: &'static str,
    name: &'static str,
    family: Family,
    sigma_label: &'static str,
    rank: u32,
    multiplicities: Multiplicities,
    dim_m: &'static str,
) -> SpaceDescriptor {
    row! {
        table: table,
        cartan_label: label,
        name: name,
        family: family,
        sigma_label: sigma_label,
        range: RowRange::only(rank),
        multiplicities: multiplicities,
        dim_m: dim_m,
        dims: Dims::Unknown,
    }
}

static SPACES: std::sync::OnceLock<Vec<SpaceDescriptor>> = std::sync::OnceLock::new();

/// All rows of the four dimension tables, in printed order.
pub fn spaces() -> &'static [SpaceDescriptor] {
    SPACES.get_or_init(|| {
        let mut v = Vec::new();
        table3(&mut v);
        table4(&mut v);
        table5(&mut v);
        table6(&mut v);
        v
    })
}

fn table3(v: &mut Vec<SpaceDescriptor>) {
    v.extend([
        row! {
            table: 3, cartan_label: "A I", name: "SU(2r)/SO(2r)", family: Family::A,
            rank_form: ODD_RANK, sigma_label: "a_{2r-1}", range: RowRange::from(1),
            multiplicities: ONE, dim_m: "(2r-1)(2r+2)/2",
            corners: &[E("r")], dims: Dims::Known(&["0"]),
        },
        row! {
            table: 3, cartan_label: "A I", name: "SU(2r+1)/SO(2r+1)", family: Family::A,
            rank_form: EVEN_RANK, sigma_label: "a_{2r}", range: RowRange::from(1),
            multiplicities: ONE, dim_m: "2r(2r+3)/2",
            corners: &[E("r"), E("r+1")], dims: Dims::Known(&["0", "0"]),
        },
        row! {
            table: 3, cartan_label: "A II", name: "SU(4r)/Sp(2r)", family: Family::A,
            rank_form: ODD_RANK, sigma_label: "a_{2r-1}", range: RowRange::from(1),
            multiplicities: FOUR, dim_m: "(2r-1)(4r+1)",
            corners: &[E("r")], dims: Dims::Known(&["0"]),
        },
        row! {
            table: 3, cartan_label: "A II", name: "SU(4r+2)/Sp(2r+1)", family: Family::A,
            rank_form: EVEN_RANK, sigma_label: "a_{2r}", range: RowRange::from(1),
            multiplicities: FOUR, dim_m: "2r(4r+3)",
            corners: &[E("r"), E("r+1")], dims: Dims::Known(&["0", "0"]),
        },
        row! {
            table: 3, cartan_label: "A III", name: "Gr_{r,r+q}(C)",
            condition: "r>=2, q>=1 or r=1", family: Family::BC, sigma_label: "bc_r",
            range: RowRange::from(1), uses_q: true,
            multiplicities: Multiplicities::ByClass(&[(Short, "2q"), (Medium, "2"), (Long, "1")]),
            dim_m: "2r(r+q)", corners: &[E("r")], dims: Dims::Known(&["2qr"]),
        },
        row! {
            table: 3, cartan_label: "A III", name: "Gr_{r,r}(C)", condition: "r>=2",
            family: Family::C, sigma_label: "c_r", range: RowRange::from(2),
            multiplicities: Multiplicities::ByClass(&[(Short, "2"), (Long, "1")]),
            dim_m: "2r^2", corners: &[E("r")], dims: Dims::Known(&["0"]),
        },
        row! {
            table: 3, cartan_label: "C I", name: "Sp(r)/U(r)", family: Family::C,
            sigma_label: "c_r", range: RowRange::from(2), multiplicities: ONE,
            dim_m: "r(r+1)", corners: &[E("r")], dims: Dims::Known(&["0"]),
        },
        row! {
            table: 3, cartan_label: "C II", name: "Gr_{r,r+q}(H)",
            condition: "r>=2, q>=1 or r=1", family: Family::BC, sigma_label: "bc_r",
            range: RowRange::from(1), uses_q: true,
            multiplicities: Multiplicities::ByClass(&[(Short, "4q"), (Medium, "4"), (Long, "3")]),
            dim_m: "4r(r+q)", corners: &[E("r")], dims: Dims::Known(&["4qr"]),
        },
        row! {
            table: 3, cartan_label: "C II", name: "Gr_{r,2r}(H)", condition: "r>=2",
            family: Family::C, sigma_label: "c_r", range: RowRange::from(2),
            multiplicities: Multiplicities::ByClass(&[(Short, "4"), (Long, "3")]),
            dim_m: "4r^2", corners: &[E("r")], dims: Dims::Known(&["0"]),
        },
        row! {
            table: 3, cartan_label: "BD I", name: "Gr_{r,r+q}", condition: "r=2,3",
            family: Family::B, sigma_label: "b_r", range: RowRange::between(2, 3), uses_q: true,
            multiplicities: Multiplicities::ByClass(&[(Short, "q"), (Long, "1")]),
            dim_m: "r(r+q)", corners: &[E("1")], dims: Dims::Known(&["0"]),
        },
        row! {
            table: 3, cartan_label: "BD I", name: "Gr_{4,4+q}", family: Family::B,
            sigma_label: "b_4", range: RowRange::only(4), uses_q: true,
            multiplicities: Multiplicities::ByClass(&[(Short, "q"), (Long, "1")]),
            dim_m: "4(4+q)", corners: &[E("1"), E("4")], dims: Dims::Known(&["0", "4q"]),
        },
        row! {
            table: 3, cartan_label: "BD I", name: "Gr_{r,r+q}", condition: "r>=5",
            family: Family::B, sigma_label: "b_r", range: RowRange::from(5), uses_q: true,
            multiplicities: Multiplicities::ByClass(&[(Short, "q"), (Long, "1")]),
            dim_m: "r(r+q)", corners: &[E("r")], dims: Dims::Known(&["rq"]),
        },
        row! {
            table: 3, cartan_label: "BD I", name: "Gr_{1,1+q}", family: Family::A,
            sigma_label: "a_1", range: RowRange::only(1), uses_q: true,
            multiplicities: Multiplicities::Uniform("q"),
            dim_m: "1+q", corners: &[E("1")], dims: Dims::Known(&["0"]),
        },
        row! {
            table: 3, cartan_label: "BD I", name: "Gr_{4,8}", family: Family::D,
            sigma_label: "d_4", range: RowRange::only(4), multiplicities: ONE,
            dim_m: "16", corners: &[E("1"), E("3"), E("4")], dims: Dims::Known(&["0", "0", "0"]),
        },
        row! {
            table: 3, cartan_label: "BD I", name: "Gr_{r,2r}", condition: "r>=5",
            family: Family::D, sigma_label: "d_r", range: RowRange::from(5), multiplicities: ONE,
            dim_m: "r^2", corners: &[E("r-1"), E("r")], dims: Dims::Known(&["0", "0"]),
        },
        row! {
            table: 3, cartan_label: "D III", name: "SO(4r)/U(2r)", family: Family::C,
            sigma_label: "c_r", range: RowRange::from(2),
            multiplicities: Multiplicities::ByClass(&[(Short, "4"), (Long, "1")]),
            dim_m: "2r(2r-1)", corners: &[E("r")], dims: Dims::Known(&["0"]),
        },
        row! {
            table: 3, cartan_label: "D III", name: "SO(4r+2)/U(2r+1)", family: Family::BC,
            sigma_label: "bc_r", range: RowRange::from(1),
            multiplicities: Multiplicities::ByClass(&[(Short, "4"), (Medium, "4"), (Long, "1")]),
            dim_m: "2r(2r+1)", corners: &[E("r")], dims: Dims::Known(&["4r"]),
        },
    ]);
    let ex: [(
        &str,
        &str,
        Family,
        &str,
        u32,
        Multiplicities,
        &str,
        &'static [Corner],
        &'static [&str],
    ); 12] = [
        (
            "E I",
            "(e6, sp(4))",
            Family::E6,
            "e_6",
            6,
            ONE,
            "42",
            &[E("1"), E("6")],
            &["0", "0"],
        ),
        (
            "E II",
            "(e6, su(6)+su(2))",
            Family::F4,
            "f_4",
            4,
            Multiplicities::ByClass(&[(Long, "1"), (Short, "2")]),
            "40",
            &[E("4")],
            &["16"],
        ),
        (
            "E III",
            "(e6, so(10)+R)",
            Family::BC,
            "bc_2",
            2,
            Multiplicities::ByClass(&[(Short, "8"), (Medium, "6"), (Long, "1")]),
            "32",
            &[E("2")],
            &["16"],
        ),
        (
            "E IV",
            "(e6, f4)",
            Family::A,
            "a_2",
            2,
            EIGHT,
            "26",
            &[E("1"), E("2")],
            &["0", "0"],
        ),
        (
            "E V",
            "(e7, su(8))",
            Family::E7,
            "e_7",
            7,
            ONE,
            "70",
            &[E("7")],
            &["0"],
        ),
        (
            "E VI",
            "(e7, so(12)+su(2))",
            Family::F4,
            "f_4",
            4,
            Multiplicities::ByClass(&[(Long, "1"), (Short, "4")]),
            "64",
            &[E("4")],
            &["32"],
        ),
        (
            "E VII",
            "(e7, e6+R)",
            Family::C,
            "c_3",
            3,
            Multiplicities::ByClass(&[(Short, "8"), (Long, "1")]),
            "54",
            &[E("3")],
            &["0"],
        ),
        (
            "E VIII",
            "(e8, so(16))",
            Family::E8,
            "e_8",
            8,
            ONE,
            "128",
            &[E("1")],
            &["64"],
        ),
        (
            "E IX",
            "(e8, e7+su(2))",
            Family::F4,
            "f_4",
            4,
            Multiplicities::ByClass(&[(Long, "1"), (Short, "8")]),
            "112",
            &[E("4")],
            &["64"],
        ),
        (
            "F I",
            "(f4, sp(3)+su(2))",
            Family::F4,
            "f_4",
            4,
            ONE,
            "28",
            &[E("4")],
            &["8"],
        ),
        (
            "F II",
            "(f4, so(9))",
            Family::BC,
            "bc_1",
            1,
            Multiplicities::ByClass(&[(Short, "8"), (Long, "7")]),
            "16",
            &[E("1")],
            &["8"],
        ),
        (
            "G",
            "(g2, su(2)+su(2))",
            Family::G2,
            "g_2",
            2,
            ONE,
            "8",
            &[E("1")],
            &["3"],
        ),
    ];
    for (label, name, family, sigma, rank, m, dim, corners, dims) in ex {
        v.push(SpaceDescriptor {
            corners,
            dims: Dims::Known(dims),
            ..exceptional(3, label, name, family, sigma, rank, m, dim)
        });
    }
}

fn table4(v: &mut Vec<SpaceDescriptor>) {
    const AR_ODD: RowRange = RowRange::from(1).odd();
    const AR_EVEN: RowRange = RowRange::from(2).even();
    const OTHER: RowRange = RowRange::from(5).filtered(other_cyclic);
    v.extend([
        row! {
            table: 4, cartan_label: "A I", name: "SU(2r+2)/SO(2r+2)", condition: "(r+1)/2 even",
            family: Family::A, rank_form: NEXT_ODD_RANK, sigma_label: "a_{2r+1}", range: AR_ODD,
            multiplicities: ONE, dim_m: "(2r+1)(r+2)", gammas: &[Z2], gamma_label: "Z_2",
            dims: Dims::Known(&["0"]),
            errata: &[Erratum { range: AR_ODD, corners: &[], dims: &["0", "0"], note: MIRROR }],
        },
        row! {
            table: 4, cartan_label: "A I", name: "SU(2r+2)/SO(2r+2)", condition: "(r+1)/2 odd",
            family: Family::A, rank_form: NEXT_ODD_RANK, sigma_label: "a_{2r+1}", range: AR_EVEN,
            multiplicities: ONE, dim_m: "(2r+1)(r+2)", gammas: &[Z2], gamma_label: "Z_2",
            dims: Dims::Known(&["2r+1"]),
            errata: &[Erratum { range: AR_EVEN, corners: &[], dims: &["2r+1", "2r+1"], note: MIRROR }],
        },
        row! {
            table: 4, cartan_label: "A I", name: "SU(r+1)/SO(r+1)", family: Family::A,
            sigma_label: "a_r", range: RowRange::from(1), multiplicities: ONE,
            dim_m: "r(r+3)/2", gammas: &[FullCyclic], gamma_label: "Z_{r+1}",
            dims: Dims::Known(&["r(r+1)/2"]),
        },
        row! {
            table: 4, cartan_label: "A I", name: "SU(r+1)/SO(r+1)", condition: "otherwise",
            family: Family::A, sigma_label: "a_r", range: OTHER, multiplicities: ONE,
            dim_m: "r(r+3)/2", gammas: &[Otherwise], gamma_label: "otherwise", dims: Dims::Unknown,
        },
        row! {
            table: 4, cartan_label: "A II", name: "SU(4r+4)/Sp(2r+2)", condition: "(r+1)/2 even",
            family: Family::A, rank_form: NEXT_ODD_RANK, sigma_label: "a_{2r+1}", range: AR_ODD,
            multiplicities: FOUR, dim_m: "(2r+1)(4r+5)", gammas: &[Z2], gamma_label: "Z_2",
            dims: Dims::Known(&["0"]),
            errata: &[Erratum { range: AR_ODD, corners: &[], dims: &["0", "0"], note: MIRROR }],
        },
        row! {
            table: 4, cartan_label: "A II", name: "SU(4r+4)/Sp(2r+2)", condition: "(r+1)/2 odd",
            family: Family::A, rank_form: NEXT_ODD_RANK, sigma_label: "a_{2r+1}", range: AR_EVEN,
            multiplicities: FOUR, dim_m: "(2r+1)(4r+5)", gammas: &[Z2], gamma_label: "Z_2",
            dims: Dims::Known(&["8r+4"]),
            errata: &[Erratum { range: AR_EVEN, corners: &[], dims: &["8r+4", "8r+4"], note: MIRROR }],
        },
        row! {
            table: 4, cartan_label: "A II", name: "SU(2r+2)/Sp(r+1)", family: Family::A,
            sigma_label: "a_r", range: RowRange::from(1), multiplicities: FOUR,
            dim_m: "r(2r+3)", gammas: &[FullCyclic], gamma_label: "Z_{r+1}",
            dims: Dims::Known(&["2r(r+1)"]),
        },
        row! {
            table: 4, cartan_label: "A II", name: "SU(2r+2)/Sp(r+1)", condition: "otherwise",
            family: Family::A, sigma_label: "a_r", range: OTHER, multiplicities: FOUR,
            dim_m: "r(2r+3)", gammas: &[Otherwise], gamma_label: "otherwise", dims: Dims::Unknown,
        },
    ]);
    let c_even = RowRange::from(2).even();
    let c_odd = RowRange::from(3).odd();
    let z2_c = |label, name, cond, range, m, dim_m, dims| {
        row! {
            table: 4, cartan_label: label, name: name, condition: cond, family: Family::C,
            sigma_label: "c_r", range: range, multiplicities: m, dim_m: dim_m,
            gammas: &[Z2], gamma_label: "Z_2", dims: Dims::Known(dims),
        }
    };
    let a3 = Multiplicities::ByClass(&[(Short, "2"), (Long, "1")]);
    let c2 = Multiplicities::ByClass(&[(Short, "4"), (Long, "3")]);
    let d3 = Multiplicities::ByClass(&[(Short, "4"), (Long, "1")]);
    v.extend([
        z2_c(
            "A III",
            "Gr_{r,r}(C)",
            "r>=2, r even",
            c_even,
            a3,
            "2r^2",
            &["r^2"],
        ),
        z2_c(
            "A III",
            "Gr_{r,r}(C)",
            "r>=2, r odd",
            c_odd,
            a3,
            "2r^2",
            &["r^2+2r-2"],
        ),
        z2_c(
            "C I",
            "Sp(r)/U(r)",
            "r even",
            c_even,
            ONE,
            "r(r+1)",
            &["r^2/2"],
        ),
        z2_c(
            "C I",
            "Sp(r)/U(r)",
            "r odd",
            c_odd,
            ONE,
            "r(r+1)",
            &["(r^2+2r-1)/2"],
        ),
        z2_c(
            "C II",
            "Gr_{r,r}(H)",
            "r>=2, r even",
            c_even,
            c2,
            "4r^2",
            &["2r^2"],
        ),
        z2_c(
            "C II",
            "Gr_{r,r}(H)",
            "r>=2, r odd",
            c_odd,
            c2,
            "4r^2",
            &["2r^2+4r-3"],
        ),
    ]);
    v.push(row! {
        table: 4, cartan_label: "BD I", name: "Gr_{r,r+q}", condition: "r>=2", family: Family::B,
        sigma_label: "b_r", range: RowRange::from(2), uses_q: true,
        multiplicities: Multiplicities::ByClass(&[(Short, "q"), (Long, "1")]),
        dim_m: "r(r+q)", gammas: &[Z2], gamma_label: "Z_2", dims: Dims::Known(&["rq"]),
    });
    v.extend(spin_rows(4));
    v.extend([
        z2_c(
            "D III",
            "SO(4r)/U(2r)",
            "r even",
            c_even,
            d3,
            "2r(2r-1)",
            &["2r^2"],
        ),
        z2_c(
            "D III",
            "SO(4r)/U(2r)",
            "r odd",
            c_odd,
            d3,
            "2r(2r-1)",
            &["2r^2+4r-5"],
        ),
    ]);
    let ex: [(
        &str,
        &str,
        Family,
        &str,
        u32,
        Multiplicities,
        &str,
        &'static [GammaKind],
        &str,
        &'static [&str],
    ); 4] = [
        (
            "E I",
            "(e6, sp(4))",
            Family::E6,
            "e_6",
            6,
            ONE,
            "42",
            &[Z3],
            "Z_3",
            &["27"],
        ),
        (
            "E IV",
            "(e6, f4)",
            Family::A,
            "a_2",
            2,
            EIGHT,
            "26",
            &[FullCyclic],
            "Z_3",
            &["24"],
        ),
        (
            "E V",
            "(e7, su(8))",
            Family::E7,
            "e_7",
            7,
            ONE,
            "70",
            &[Z2],
            "Z_2",
            &["35"],
        ),
        (
            "E VII",
            "(e7, e6+R)",
            Family::C,
            "c_3",
            3,
            Multiplicities::ByClass(&[(Short, "8"), (Long, "1")]),
            "54",
            &[Z2],
            "Z_2",
            &["49"],
        ),
    ];
    for (label, name, family, sigma, rank, m, dim, gammas, gamma_label, dims) in ex {
        v.push(SpaceDescriptor {
            gammas,
            gamma_label,
            dims: Dims::Known(dims),
            ..exceptional(4, label, name, family, sigma, rank, m, dim)
        });
    }
}

/// The `d_r` quotient rows, shared between the real Grassmannians and the
/// spin groups.
fn spin_rows(table: u8) -> Vec<SpaceDescriptor> {
    let type_ii = table == 6;
    let (label, name, m, dim_m) = if type_ii {
        ("Spin(2r)", "Spin(2r)", TWO, "r(2r-1)")
    } else {
        ("BD I", "Gr_{r,r}", ONE, "r^2")
    };
    let sq = |i: &'static str, ii: &'static str| if type_ii { ii } else { i };
    let half_spin: &'static [GammaKind] = &[HalfSpinMinus, HalfSpinPlus];
    let half_label = "{e,p_{r-1}} or {e,p_r}";
    let small = RowRange::between(4, 6).even();
    let rows = [
        row! {
            table: table, cartan_label: label, name: name, condition: "r even", family: Family::D,
            sigma_label: "d_r", range: RowRange::from(4).even(), multiplicities: m, dim_m: dim_m,
            gammas: &[KleinFour], gamma_label: "Z_2+Z_2",
            dims: Dims::Known(if type_ii { &["r^2"] } else { &["r^2/2"] }),
        },
        row! {
            table: table, cartan_label: label, name: name, condition: "r odd", family: Family::D,
            sigma_label: "d_r", range: RowRange::from(5).odd(), multiplicities: m, dim_m: dim_m,
            gammas: &[Z4], gamma_label: "Z_4",
            dims: Dims::Known(if type_ii { &["r^2+2r-3"] } else { &["(r^2+2r-3)/2"] }),
        },
        row! {
            table: table, cartan_label: label, name: name, condition: "r even", family: Family::D,
            sigma_label: "d_r", range: RowRange::from(4).even(), multiplicities: m, dim_m: dim_m,
            gammas: &[VectorPair], gamma_label: "{e,p_1}", dims: Dims::Known(&["0", "0"]),
        },
        row! {
            table: table, cartan_label: label, name: name, condition: sq("r<=6, r even", "r=4,6"),
            family: Family::D, sigma_label: "d_r", range: small, multiplicities: m, dim_m: dim_m,
            gammas: half_spin, gamma_label: half_label, dims: Dims::Known(&["0"]),
            errata: &[D4_ERRATUM],
        },
        row! {
            table: table, cartan_label: label, name: sq("Gr_{8,8}", "Spin(16)"), family: Family::D,
            sigma_label: "d_8", range: RowRange::only(8), multiplicities: m,
            dim_m: sq("64", "120"), gammas: half_spin, gamma_label: half_label,
            dims: Dims::Known(if type_ii { &["0", "64"] } else { &["0", "r^2/2"] }),
            errata: if type_ii { &[SPIN16_ERRATUM] } else { &[GR88_ERRATUM] },
        },
        row! {
            table: table, cartan_label: label, name: name, condition: sq("r>=10, r even", "r>=10, r even"),
            family: Family::D, sigma_label: "d_r", range: RowRange::from(10).even(),
            multiplicities: m, dim_m: dim_m, gammas: half_spin, gamma_label: half_label,
            dims: Dims::Known(if type_ii { &["r^2"] } else { &["r^2/2"] }),
        },
    ];
    rows.into()
}

fn table5(v: &mut Vec<SpaceDescriptor>) {
    let g = |name, family, rank_form, sigma_label, range, dim_m, corners, dims| {
        row! {
            table: 5, cartan_label: name, name: name, family: family, rank_form: rank_form,
            sigma_label: sigma_label, range: range, multiplicities: TWO, dim_m: dim_m,
            corners: corners, dims: Dims::Known(dims),
        }
    };
    v.extend([
        g(
            "SU(2r)",
            Family::A,
            ODD_RANK,
            "a_{2r-1}",
            RowRange::from(1),
            "4r^2-1",
            &[E("r")] as &[Corner],
            &["0"] as &[&str],
        ),
        g(
            "SU(2r+1)",
            Family::A,
            EVEN_RANK,
            "a_{2r}",
            RowRange::from(1),
            "(2r+1)^2-1",
            &[E("r"), E("r+1")],
            &["0", "0"],
        ),
        SpaceDescriptor {
            condition: "r=2,3",
            ..g(
                "Spin(2r+1)",
                Family::B,
                SAME,
                "b_r",
                RowRange::between(2, 3),
                "r(2r+1)",
                &[E("1")],
                &["0"],
            )
        },
        g(
            "Spin(9)",
            Family::B,
            SAME,
            "b_4",
            RowRange::only(4),
            "36",
            &[E("1"), E("4")],
            &["0", "8"],
        ),
        SpaceDescriptor {
            condition: "r>4",
            ..g(
                "Spin(2r+1)",
                Family::B,
                SAME,
                "b_r",
                RowRange::from(5),
                "r(2r+1)",
                &[E("r")],
                &["2r"],
            )
        },
        g(
            "Sp(r)",
            Family::C,
            SAME,
            "c_r",
            RowRange::from(2),
            "r(2r+1)",
            &[E("r")],
            &["0"],
        ),
        g(
            "Spin(8)",
            Family::D,
            SAME,
            "d_4",
            RowRange::only(4),
            "28",
            &[E("1"), E("3"), E("4")],
            &["0", "0", "0"],
        ),
        SpaceDescriptor {
            condition: "r>=5",
            ..g(
                "Spin(2r)",
                Family::D,
                SAME,
                "d_r",
                RowRange::from(5),
                "r(2r-1)",
                &[E("r-1"), E("r")],
                &["0", "0"],
            )
        },
        g(
            "E_6",
            Family::E6,
            SAME,
            "e_6",
            RowRange::only(6),
            "78",
            &[E("1"), E("6")],
            &["0", "0"],
        ),
        g(
            "E_7",
            Family::E7,
            SAME,
            "e_7",
            RowRange::only(7),
            "133",
            &[E("7")],
            &["0"],
        ),
        g(
            "E_8",
            Family::E8,
            SAME,
            "e_8",
            RowRange::only(8),
            "248",
            &[E("1")],
            &["128"],
        ),
        g(
            "F_4",
            Family::F4,
            SAME,
            "f_4",
            RowRange::only(4),
            "52",
            &[E("4")],
            &["16"],
        ),
        g(
            "G_2",
            Family::G2,
            SAME,
            "g_2",
            RowRange::only(2),
            "14",
            &[E("1")],
            &["6"],
        ),
    ]);
}

fn table6(v: &mut Vec<SpaceDescriptor>) {
    let g = |name, family, rank_form, sigma_label, range, dim_m, gammas, gamma_label, dims| {
        row! {
            table: 6, cartan_label: name, name: name, family: family, rank_form: rank_form,
            sigma_label: sigma_label, range: range, multiplicities: TWO, dim_m: dim_m,
            gammas: gammas, gamma_label: gamma_label, dims: dims,
        }
    };
    v.extend([
        SpaceDescriptor {
            errata: &[SU_ODD_ERRATUM, SU_EVEN_ERRATUM],
            ..g(
                "SU(2r+2)",
                Family::A,
                NEXT_ODD_RANK,
                "a_{2r+1}",
                RowRange::from(1),
                "(2r+2)^2-1",
                &[Z2] as &[GammaKind],
                "Z_2",
                Dims::Known(&["4r+2"]),
            )
        },
        g(
            "SU(r+1)",
            Family::A,
            SAME,
            "a_r",
            RowRange::from(1),
            "(r+1)^2-1",
            &[FullCyclic],
            "Z_{r+1}",
            Dims::Known(&["r(r+1)"]),
        ),
        SpaceDescriptor {
            condition: "otherwise",
            ..g(
                "SU(r+1)",
                Family::A,
                SAME,
                "a_r",
                RowRange::from(5).filtered(other_cyclic),
                "(r+1)^2-1",
                &[Otherwise],
                "otherwise",
                Dims::Unknown,
            )
        },
        g(
            "Spin(2r+1)",
            Family::B,
            SAME,
            "b_r",
            RowRange::from(2),
            "r(2r+1)",
            &[Z2],
            "Z_2",
            Dims::Known(&["2r"]),
        ),
        SpaceDescriptor {
            condition: "r even",
            ..g(
                "Sp(r)",
                Family::C,
                SAME,
                "c_r",
                RowRange::from(2).even(),
                "r(2r+1)",
                &[Z2],
                "Z_2",
                Dims::Known(&["r^2"]),
            )
        },
        SpaceDescriptor {
            condition: "r odd",
            ..g(
                "Sp(r)",
                Family::C,
                SAME,
                "c_r",
                RowRange::from(3).odd(),
                "r(2r+1)",
                &[Z2],
                "Z_2",
                Dims::Known(&["r^2+2r-1"]),
            )
        },
    ]);
    v.extend(spin_rows(6));
    v.extend([
        g(
            "E_6",
            Family::E6,
            SAME,
            "e_6",
            RowRange::only(6),
            "78",
            &[Z3],
            "Z_3",
            Dims::Known(&["54"]),
        ),
        g(
            "E_7",
            Family::E7,
            SAME,
            "e_7",
            RowRange::only(7),
            "133",
            &[Z2],
            "Z_2",
            Dims::Known(&["70"]),
        ),
    ]);
}
