use num_bigint::BigInt;

use super::{Adorability, CatalogEntry, ExpectedFacts, Fact, Provenance};
use crate::finite::{FiniteGroup, GroupGenerator, ModMatrix, Permutation, DEFAULT_MAX_ORDER};
use crate::fpcore::{parse_presentation, Presentation};
use crate::intlin::AbelianGroupData;

use Provenance::{Definitional, Derived, Published};

const SYMMETRIC: std::ops::RangeInclusive<usize> = 2..=7;
const ALTERNATING: std::ops::RangeInclusive<usize> = 3..=7;
const CYCLIC: std::ops::RangeInclusive<usize> = 2..=12;
const DIHEDRAL: std::ops::RangeInclusive<usize> = 3..=12;
const MATRIX_MODULI: std::ops::RangeInclusive<usize> = 2..=7;
const FREE: std::ops::RangeInclusive<usize> = 1..=4;
const SURFACE: std::ops::RangeInclusive<usize> = 1..=3;
const BRAID: std::ops::RangeInclusive<usize> = 2..=6;

pub(super) fn base_names() -> Vec<String> {
    let mut names = Vec::new();
    let family = |names: &mut Vec<String>, prefix: &str, range: std::ops::RangeInclusive<usize>| {
        names.extend(range.map(|n| format!("{prefix}{n}")));
    };
    family(&mut names, "symmetric", SYMMETRIC);
    family(&mut names, "alternating", ALTERNATING);
    family(&mut names, "cyclic", CYCLIC);
    family(&mut names, "dihedral", DIHEDRAL);
    names.push("klein_four".into());
    names.push("quaternion8".into());
    family(&mut names, "gl2_", MATRIX_MODULI);
    family(&mut names, "sl2_", MATRIX_MODULI);
    family(&mut names, "free", FREE);
    names.push("klein_bottle".into());
    family(&mut names, "surface", SURFACE);
    family(&mut names, "braid", BRAID);
    names.extend(["trefoil", "figure_eight", "unknot", "trefoil_sum_trefoil"].map(String::from));
    names
}

pub(super) fn has_model_and_presentation(name: &str) -> bool {
    match split(name) {
        Some(("symmetric", _)) | Some(("cyclic", _)) | Some(("dihedral", _)) => true,
        Some(("alternating", n)) => n <= 5,
        Some(("gl2_", m)) => m == 2,
        Some(("sl2_", m)) => matches!(m, 2 | 3 | 5),
        _ => matches!(name, "klein_four" | "quaternion8"),
    }
}

/// Splits `symmetric5` into `("symmetric", 5)` when the name is registered.
fn split(name: &str) -> Option<(&str, usize)> {
    let digits = name.len() - name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if digits == 0 || name == "quaternion8" {
        return None;
    }
    let (prefix, num) = name.split_at(name.len() - digits);
    if num.starts_with('0') {
        return None;
    }
    let n: usize = num.parse().ok()?;
    let range = match prefix {
        "symmetric" => SYMMETRIC,
        "alternating" => ALTERNATING,
        "cyclic" => CYCLIC,
        "dihedral" => DIHEDRAL,
        "gl2_" | "sl2_" => MATRIX_MODULI,
        "free" => FREE,
        "surface" => SURFACE,
        "braid" => BRAID,
        _ => return None,
    };
    range.contains(&n).then_some((prefix, n))
}

fn pres(text: &str) -> Presentation {
    parse_presentation(text).expect("catalog presentations parse")
}

fn perm(n: usize, cycles: &[Vec<usize>]) -> GroupGenerator {
    GroupGenerator::Perm(Permutation::from_cycles(n, cycles).expect("catalog cycles lie in range"))
}

fn group(gens: &[GroupGenerator]) -> FiniteGroup {
    FiniteGroup::enumerate(gens, DEFAULT_MAX_ORDER).expect("catalog groups are small")
}

fn ab(rank: usize, orders: &[u64]) -> AbelianGroupData {
    let orders: Vec<BigInt> = orders.iter().map(|&k| BigInt::from(k)).collect();
    AbelianGroupData::from_cyclic_orders(rank, &orders)
}

fn facts(
    doa: Option<(Adorability, Provenance)>,
    order: Option<u64>,
    abel: AbelianGroupData,
) -> ExpectedFacts {
    ExpectedFacts {
        adorability: doa.map(|(a, p)| Fact::new(a, p)),
        order: order.map(|o| Fact::new(o, Definitional)),
        abelianization: Some(Fact::new(abel, Derived)),
        alexander_polynomial: None,
    }
}

fn entry(
    name: &str,
    description: String,
    model: Option<FiniteGroup>,
    presentation: Option<Presentation>,
    expected: ExpectedFacts,
) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        description,
        model,
        presentation,
        knot: false,
        expected,
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn cycle(points: impl IntoIterator<Item = usize>) -> Vec<usize> {
    points.into_iter().collect()
}

/// Coxeter presentation of `S_n` on the adjacent transpositions.
fn coxeter_symmetric(n: usize) -> Presentation {
    let gens: Vec<String> = (1..n).map(|i| format!("s{i}")).collect();
    let mut rels = Vec::new();
    for i in 1..n {
        rels.push(format!("s{i}^2"));
        for j in i + 1..n {
            let m = if j == i + 1 { 3 } else { 2 };
            rels.push(format!("(s{i}*s{j})^{m}"));
        }
    }
    pres(&format!("< {} | {} >", gens.join(", "), rels.join(", ")))
}

fn artin_braid(n: usize) -> Presentation {
    let gens: Vec<String> = (1..n).map(|i| format!("s{i}")).collect();
    let mut rels = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            if j == i + 1 {
                rels.push(format!("s{i}*s{j}*s{i} = s{j}*s{i}*s{j}"));
            } else {
                rels.push(format!("s{i}*s{j} = s{j}*s{i}"));
            }
        }
    }
    pres(&format!("< {} | {} >", gens.join(", "), rels.join(", ")))
}

fn symmetric(n: usize) -> CatalogEntry {
    let model = group(&[perm(n, &[vec![0, 1]]), perm(n, &[cycle(0..n)])]);
    let presentation = match n {
        2 => pres("< a | a^2 >"),
        3 => pres("< a, b | a^2, b^3, (a*b)^2 >"),
        4 => pres("< a, b | a^4, b^2, (a*b)^3 >"),
        _ => coxeter_symmetric(n),
    };
    let doa = match n {
        2 => (Adorability::Degree(1), Published),
        3 => (Adorability::Degree(2), Derived),
        4 => (Adorability::Degree(3), Derived),
        _ => (Adorability::Degree(1), Published),
    };
    entry(
        &format!("symmetric{n}"),
        format!("symmetric group S{n} on {n} points"),
        Some(model),
        Some(presentation),
        facts(Some(doa), Some(factorial(n)), ab(0, &[2])),
    )
}

fn alternating(n: usize) -> CatalogEntry {
    let long = if n % 2 == 1 { cycle(0..n) } else { cycle(1..n) };
    let gens = if n == 3 {
        vec![perm(3, &[vec![0, 1, 2]])]
    } else {
        vec![perm(n, &[vec![0, 1, 2]]), perm(n, &[long])]
    };
    let presentation = match n {
        3 => Some(pres("< a | a^3 >")),
        4 => Some(pres("< a, b | a^2, b^3, (a*b)^3 >")),
        5 => Some(pres("< a, b | a^2, b^3, (a*b)^5 >")),
        _ => None,
    };
    let (doa, abel) = match n {
        3 => ((Adorability::Degree(1), Published), ab(0, &[3])),
        4 => ((Adorability::Degree(2), Derived), ab(0, &[3])),
        _ => (
            (Adorability::Degree(0), Derived),
            AbelianGroupData::trivial(),
        ),
    };
    entry(
        &format!("alternating{n}"),
        format!("alternating group A{n} on {n} points"),
        Some(group(&gens)),
        presentation,
        facts(Some(doa), Some(factorial(n) / 2), abel),
    )
}

fn cyclic(n: usize) -> CatalogEntry {
    entry(
        &format!("cyclic{n}"),
        format!("cyclic group of order {n}"),
        Some(group(&[perm(n, &[cycle(0..n)])])),
        Some(pres(&format!("< a | a^{n} >"))),
        facts(
            Some((Adorability::Degree(1), Published)),
            Some(n as u64),
            ab(0, &[n as u64]),
        ),
    )
}

fn dihedral(n: usize) -> CatalogEntry {
    let reflections: Vec<Vec<usize>> = (1..n)
        .filter(|&i| i < n - i)
        .map(|i| vec![i, n - i])
        .collect();
    let model = group(&[perm(n, &[cycle(0..n)]), perm(n, &reflections)]);
    let abel = if n % 2 == 1 {
        ab(0, &[2])
    } else {
        ab(0, &[2, 2])
    };
    entry(
        &format!("dihedral{n}"),
        format!(
            "dihedral group of order {} (symmetries of a {n}-gon)",
            2 * n
        ),
        Some(model),
        Some(pres(&format!("< r, s | r^{n}, s^2, (s*r)^2 >"))),
        facts(
            Some((Adorability::Degree(2), Derived)),
            Some(2 * n as u64),
            abel,
        ),
    )
}

fn klein_four() -> CatalogEntry {
    entry(
        "klein_four",
        "Klein four-group".into(),
        Some(group(&[
            perm(4, &[vec![0, 1], vec![2, 3]]),
            perm(4, &[vec![0, 2], vec![1, 3]]),
        ])),
        Some(pres("< a, b | a^2, b^2, [a, b] >")),
        facts(
            Some((Adorability::Degree(1), Published)),
            Some(4),
            ab(0, &[2, 2]),
        ),
    )
}

fn quaternion8() -> CatalogEntry {
    // regular representation on 8 points
    let i = perm(8, &[vec![0, 1, 3, 6], vec![2, 5, 7, 4]]);
    let j = perm(8, &[vec![0, 2, 3, 7], vec![1, 4, 6, 5]]);
    entry(
        "quaternion8",
        "quaternion group of order 8".into(),
        Some(group(&[i, j])),
        Some(pres("< x, y | x^4, x^2*y^-2, y*x*y^-1*x >")),
        facts(
            Some((Adorability::Degree(2), Derived)),
            Some(8),
            ab(0, &[2, 2]),
        ),
    )
}

fn units(m: usize) -> Vec<i64> {
    (2..m as i64)
        .filter(|&u| num_integer::gcd(u, m as i64) == 1)
        .collect()
}

fn matrix(m: usize, rows: [[i64; 2]; 2]) -> GroupGenerator {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    GroupGenerator::Matrix(ModMatrix::new(m as u32, &rows).expect("invertible"))
}

/// `(order, doa, abelianization)` of `GL_2(Z/m)` and `SL_2(Z/m)`.
fn matrix_group_facts(special: bool, m: usize) -> (u64, usize, &'static [u64]) {
    match (special, m) {
        (false, 2) => (6, 2, &[2]),
        (false, 3) => (48, 4, &[2]),
        (false, 4) => (96, 3, &[2, 2]),
        (false, 5) => (480, 1, &[4]),
        (false, 6) => (288, 4, &[2, 2]),
        (false, 7) => (2016, 1, &[6]),
        (true, 2) => (6, 2, &[2]),
        (true, 3) => (24, 3, &[3]),
        (true, 4) => (48, 3, &[4]),
        (true, 5) => (120, 0, &[]),
        (true, 6) => (144, 3, &[6]),
        (true, 7) => (336, 0, &[]),
        _ => unreachable!("moduli are registered in 2..=7"),
    }
}

fn matrix_group(special: bool, m: usize) -> CatalogEntry {
    let mut gens = vec![matrix(m, [[1, 1], [0, 1]]), matrix(m, [[1, 0], [1, 1]])];
    if !special {
        gens.extend(units(m).into_iter().map(|u| matrix(m, [[u, 0], [0, 1]])));
    }
    let presentation = match (special, m) {
        (_, 2) => Some(pres("< a, b | a^2, b^3, (a*b)^2 >")),
        (true, 3) => Some(pres("< s, t | (s*t)^2 = s^3, s^3 = t^3 >")),
        (true, 5) => Some(pres("< s, t | (s*t)^2 = s^3, s^3 = t^5 >")),
        _ => None,
    };
    let (order, doa, abel) = matrix_group_facts(special, m);
    let (name, what) = if special {
        ("sl2_", "SL")
    } else {
        ("gl2_", "GL")
    };
    entry(
        &format!("{name}{m}"),
        format!("{what}(2, Z/{m}) acting on row vectors"),
        Some(group(&gens)),
        presentation,
        facts(
            Some((Adorability::Degree(doa), Derived)),
            Some(order),
            ab(0, abel),
        ),
    )
}

fn free(n: usize) -> CatalogEntry {
    let gens: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let doa = if n == 1 {
        Adorability::Degree(1)
    } else {
        Adorability::NotAdorable
    };
    entry(
        &format!("free{n}"),
        format!("free group of rank {n}"),
        None,
        Some(pres(&format!("< {} | >", gens.join(", ")))),
        facts(Some((doa, Published)), None, ab(n, &[])),
    )
}

fn surface(g: usize) -> CatalogEntry {
    let gens: Vec<String> = (1..=g)
        .flat_map(|i| [format!("a{i}"), format!("b{i}")])
        .collect();
    let rel: Vec<String> = (1..=g).map(|i| format!("[a{i}, b{i}]")).collect();
    let doa = if g == 1 {
        Adorability::Degree(1)
    } else {
        Adorability::NotAdorable
    };
    entry(
        &format!("surface{g}"),
        format!("fundamental group of the closed orientable surface of genus {g}"),
        None,
        Some(pres(&format!(
            "< {} | {} >",
            gens.join(", "),
            rel.join("*")
        ))),
        facts(Some((doa, Published)), None, ab(2 * g, &[])),
    )
}

fn braid(n: usize) -> CatalogEntry {
    let doa = match n {
        2 | 5 | 6 => Adorability::Degree(1),
        _ => Adorability::NotAdorable,
    };
    entry(
        &format!("braid{n}"),
        format!("Artin braid group on {n} strings"),
        None,
        Some(artin_braid(n)),
        facts(Some((doa, Published)), None, ab(1, &[])),
    )
}

fn klein_bottle() -> CatalogEntry {
    entry(
        "klein_bottle",
        "fundamental group of the Klein bottle".into(),
        None,
        Some(pres("< a, b | a*b*a^-1*b >")),
        facts(Some((Adorability::Degree(2), Derived)), None, ab(1, &[2])),
    )
}

fn knot(name: &str, description: &str, text: &str, polynomial: &str) -> CatalogEntry {
    let adorable = polynomial == "1";
    let doa = if adorable {
        (Adorability::Degree(1), Published)
    } else {
        (Adorability::NotAdorable, Derived)
    };
    let mut expected = facts(Some(doa), None, ab(1, &[]));
    expected.alexander_polynomial = Some(Fact::new(polynomial.to_string(), Derived));
    let mut e = entry(name, description.into(), None, Some(pres(text)), expected);
    e.knot = true;
    e
}

pub(super) fn build(name: &str) -> Option<CatalogEntry> {
    let e = match name {
        "klein_four" => klein_four(),
        "quaternion8" => quaternion8(),
        "klein_bottle" => klein_bottle(),
        "trefoil" => knot(
            "trefoil",
            "trefoil knot group",
            "< x, y | x*y*x = y*x*y >",
            "t^2 - t + 1",
        ),
        "figure_eight" => knot(
            "figure_eight",
            "figure-eight knot group",
            "< x, y | x^-1*y*x*y^-1*x*y*x^-1*y^-1*x*y^-1 >",
            "t^2 - 3t + 1",
        ),
        "unknot" => knot("unknot", "unknot group (infinite cyclic)", "< x | >", "1"),
        "trefoil_sum_trefoil" => knot(
            "trefoil_sum_trefoil",
            "group of the connected sum of two trefoils",
            "< x, y, z | x*y*x = y*x*y, x*z*x = z*x*z >",
            "t^4 - 2t^3 + 3t^2 - 2t + 1",
        ),
        _ => {
            let (family, n) = split(name)?;
            match family {
                "symmetric" => symmetric(n),
                "alternating" => alternating(n),
                "cyclic" => cyclic(n),
                "dihedral" => dihedral(n),
                "gl2_" => matrix_group(false, n),
                "sl2_" => matrix_group(true, n),
                "free" => free(n),
                "surface" => surface(n),
                "braid" => braid(n),
                _ => return None,
            }
        }
    };
    Some(e)
}
