//! Built-in Hopf algebras and cocycles: the 4-dimensional Sweedler algebra
//! with its parametrized cocycle family, group algebras and their duals,
//! matrix coalgebras, and reference tables used by the acceptance suite.

use num_traits::Zero;

use crate::arith::{parse_ratexpr, RatExpr, Rational, VarTable};
use crate::error::HopfError;
use crate::hopf::{Coalgebra, HopfData};
use crate::twist::Cocycle;

fn c(n: i64) -> RatExpr {
    RatExpr::constant(Rational::from_integer(n.into()))
}

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

/// Sweedler algebra H₄ with basis {1, x, y, z}, z = xy, and the cocycle
/// family α(a,b,c) with symbolic parameters a, b, c.
pub fn sweedler_symbolic() -> (HopfData, Cocycle) {
    build_sweedler(&["a".into(), "b".into(), "c".into()], |vars| {
        [
            RatExpr::var(vars.lookup("a").unwrap()),
            RatExpr::var(vars.lookup("b").unwrap()),
            RatExpr::var(vars.lookup("c").unwrap()),
        ]
    })
}

/// Sweedler algebra with numeric cocycle parameters; `a` must be nonzero.
pub fn sweedler_numeric(
    a: Rational,
    b: Rational,
    cc: Rational,
) -> Result<(HopfData, Cocycle), HopfError> {
    if a.is_zero() {
        return Err(HopfError::ZeroParameter);
    }
    Ok(build_sweedler(&[], move |_| {
        [
            RatExpr::constant(a.clone()),
            RatExpr::constant(b.clone()),
            RatExpr::constant(cc.clone()),
        ]
    }))
}

fn build_sweedler(
    params: &[String],
    abc: impl Fn(&VarTable) -> [RatExpr; 3],
) -> (HopfData, Cocycle) {
    let ls = labels(&["1", "x", "y", "z"]);
    let (o, x, y, z) = (0usize, 1usize, 2usize, 3usize);
    let delta = vec![
        vec![(o, o, c(1))],
        vec![(x, x, c(1))],
        vec![(o, y, c(1)), (y, x, c(1))],
        vec![(x, z, c(1)), (z, o, c(1))],
    ];
    let counit = vec![c(1), c(1), c(0), c(0)];
    // x² = 1, y² = 0, xy = z, yx = −z, xz = y, zx = −y, yz = zy = z² = 0
    let mut mult = vec![vec![Vec::new(); 4]; 4];
    let mut set = |p: usize, q: usize, terms: Vec<(usize, RatExpr)>| {
        mult[p][q] = terms;
    };
    for i in 0..4 {
        set(o, i, vec![(i, c(1))]);
        if i != o {
            set(i, o, vec![(i, c(1))]);
        }
    }
    set(x, x, vec![(o, c(1))]);
    set(x, y, vec![(z, c(1))]);
    set(x, z, vec![(y, c(1))]);
    set(y, x, vec![(z, c(-1))]);
    set(y, y, vec![]);
    set(y, z, vec![]);
    set(z, x, vec![(y, c(-1))]);
    set(z, y, vec![]);
    set(z, z, vec![]);
    let unit = vec![c(1), c(0), c(0), c(0)];
    let antipode = vec![
        vec![c(1), c(0), c(0), c(0)],
        vec![c(0), c(1), c(0), c(0)],
        vec![c(0), c(0), c(0), c(1)],
        vec![c(0), c(0), c(-1), c(0)],
    ];
    let coalg = Coalgebra::new(ls, delta, counit, params).expect("Sweedler coalgebra");
    let h = HopfData::new("sweedler".into(), coalg, mult, unit, antipode)
        .expect("Sweedler Hopf algebra");
    let [a, b, cc] = abc(h.vars());
    let e = |i: usize| h.coalg.counit[i].clone();
    let mut values = vec![vec![RatExpr::zero(); 4]; 4];
    for i in 0..4 {
        values[o][i] = e(i);
        values[i][o] = e(i);
    }
    values[x][x] = a.clone();
    values[y][x] = b.clone();
    values[y][y] = cc.clone();
    values[y][z] = -&cc;
    values[z][x] = b;
    values[z][y] = cc.clone();
    values[z][z] = -&(&a * &cc);
    (h, Cocycle::new(values))
}

/// Multiplication table of the cyclic group ℤ/n with elements e, g, g2, ...
pub fn cyclic_table(n: usize) -> (Vec<String>, Vec<Vec<usize>>) {
    let ls = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            k => format!("g{k}"),
        })
        .collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    (ls, table)
}

/// Checks the group axioms on a multiplication table and returns
/// (identity index, inverse of each element).
pub fn validate_group_table(table: &[Vec<usize>]) -> Result<(usize, Vec<usize>), HopfError> {
    let n = table.len();
    if n == 0 {
        return Err(HopfError::InvalidGroupTable("empty table".into()));
    }
    for row in table {
        if row.len() != n || row.iter().any(|&v| v >= n) {
            return Err(HopfError::InvalidGroupTable(
                "table is not an n x n array over 0..n".into(),
            ));
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
        .ok_or_else(|| HopfError::InvalidGroupTable("no identity element".into()))?;
    let mut inv = vec![usize::MAX; n];
    for (g, iv) in inv.iter_mut().enumerate() {
        *iv = (0..n)
            .find(|&h| table[g][h] == e && table[h][g] == e)
            .ok_or_else(|| {
                HopfError::InvalidGroupTable(format!("element {g} has no inverse"))
            })?;
    }
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                if table[table[a][b]][cc] != table[a][table[b][cc]] {
                    return Err(HopfError::InvalidGroupTable(format!(
                        "not associative at ({a}, {b}, {cc})"
                    )));
                }
            }
        }
    }
    Ok((e, inv))
}

/// Group algebra k[G]: every basis element grouplike.
pub fn group_algebra(ls: Vec<String>, table: &[Vec<usize>]) -> Result<HopfData, HopfError> {
    let (e, inv) = validate_group_table(table)?;
    let n = table.len();
    if ls.len() != n {
        return Err(HopfError::InvalidGroupTable("label count mismatch".into()));
    }
    let delta = (0..n).map(|g| vec![(g, g, c(1))]).collect();
    let counit = vec![c(1); n];
    let mult = (0..n)
        .map(|g| (0..n).map(|h| vec![(table[g][h], c(1))]).collect())
        .collect();
    let mut unit = vec![c(0); n];
    unit[e] = c(1);
    let mut antipode = vec![vec![c(0); n]; n];
    for g in 0..n {
        antipode[g][inv[g]] = c(1);
    }
    let coalg = Coalgebra::new(ls, delta, counit, &[])?;
    HopfData::new("groupAlgebra".into(), coalg, mult, unit, antipode)
}

/// Function algebra k^G: basis of idempotents e_g, Δ(e_g) = Σ_{hk=g} e_h⊗e_k.
pub fn group_function_algebra(ls: Vec<String>, table: &[Vec<usize>]) -> Result<HopfData, HopfError> {
    let (e, inv) = validate_group_table(table)?;
    let n = table.len();
    if ls.len() != n {
        return Err(HopfError::InvalidGroupTable("label count mismatch".into()));
    }
    let mut delta = vec![Vec::new(); n];
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                if table[h][k] == g {
                    delta[g].push((h, k, c(1)));
                }
            }
        }
    }
    let counit = (0..n).map(|g| if g == e { c(1) } else { c(0) }).collect();
    let mult = (0..n)
        .map(|g| {
            (0..n)
                .map(|h| if g == h { vec![(g, c(1))] } else { Vec::new() })
                .collect()
        })
        .collect();
    let unit = vec![c(1); n];
    let mut antipode = vec![vec![c(0); n]; n];
    for g in 0..n {
        antipode[g][inv[g]] = c(1);
    }
    let coalg = Coalgebra::new(ls, delta, counit, &[])?;
    HopfData::new("groupFunctionAlgebra".into(), coalg, mult, unit, antipode)
}

/// The n×n matrix coalgebra: Δ(e_ij) = Σ_k e_ik ⊗ e_kj, ε(e_ij) = δ_ij.
pub fn matrix_coalgebra(n: usize) -> Result<Coalgebra, HopfError> {
    if n == 0 {
        return Err(HopfError::Invalid("matrix coalgebra needs n >= 1".into()));
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut ls = Vec::new();
    for i in 0..n {
        for j in 0..n {
            ls.push(format!("{}{}", i + 1, j + 1));
        }
    }
    let mut delta = vec![Vec::new(); n * n];
    let mut counit = vec![c(0); n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                counit[idx(i, j)] = c(1);
            }
            for k in 0..n {
                delta[idx(i, j)].push((idx(i, k), idx(k, j), c(1)));
            }
        }
    }
    Coalgebra::new(ls, delta, counit, &[])
}

/// The one-dimensional Hopf algebra H = k.
pub fn trivial_field() -> HopfData {
    let coalg = Coalgebra::new(
        labels(&["1"]),
        vec![vec![(0, 0, c(1))]],
        vec![c(1)],
        &[],
    )
    .unwrap();
    HopfData::new(
        "trivialField".into(),
        coalg,
        vec![vec![vec![(0, c(1))]]],
        vec![c(1)],
        vec![vec![c(1)]],
    )
    .unwrap()
}

/// Group cocycle from a matrix of nonzero scalars on G×G; caller is expected
/// to run `check_cocycle` afterwards.
pub fn group_cocycle(values: Vec<Vec<RatExpr>>) -> Cocycle {
    Cocycle::new(values)
}

/// Trivial group cocycle α ≡ 1 on an n-element group.
pub fn trivial_group_cocycle(n: usize) -> Cocycle {
    Cocycle::new(vec![vec![c(1); n]; n])
}

/// One word and its expected universal image, in the group-algebra case.
pub struct NicenessWitness {
    pub word: Vec<usize>,
    /// Expected coefficient of ⊗1; every other component must vanish.
    pub expected: RatExpr,
}

/// The central words Z_g = X_g X_{g⁻¹} and Z_{g,h} = X_g X_h X_{(gh)⁻¹} with
/// their expected universal images α(g,g⁻¹) t_g t_{g⁻¹} ⊗ 1 and
/// α(g,g⁻¹) α(h,(gh)⁻¹) t_g t_h t_{(gh)⁻¹} ⊗ 1.
pub fn group_niceness_witnesses(table: &[Vec<usize>], alpha: &Cocycle) -> Vec<NicenessWitness> {
    let (_, inv) = validate_group_table(table).expect("valid group table");
    let n = table.len();
    let t = |g: usize| RatExpr::var(g as u32);
    let mut out = Vec::new();
    for g in 0..n {
        let coeff = alpha.values[g][inv[g]].clone();
        out.push(NicenessWitness {
            word: vec![g, inv[g]],
            expected: &coeff * &(&t(g) * &t(inv[g])),
        });
    }
    for g in 0..n {
        for h in 0..n {
            let gh = table[g][h];
            let coeff = &alpha.values[g][inv[g]] * &alpha.values[h][inv[gh]];
            out.push(NicenessWitness {
                word: vec![g, h, inv[gh]],
                expected: &coeff * &(&(&t(g) * &t(h)) * &t(inv[gh])),
            });
        }
    }
    out
}

/// Reference tables for the Sweedler algebra, as strings in the coefficient
/// grammar over the basis {1, x, y, z} and parameters a, b, c.
pub struct SweedlerTables {
    /// σ(x_i, x_j) for the 16 basis pairs.
    pub sigma: [[&'static str; 4]; 4],
    /// α(x_i, x_j).
    pub alpha: [[&'static str; 4]; 4],
    /// x_i ·_α x_j as coefficient vectors over {1, x, y, z}.
    pub twisted: [[[&'static str; 4]; 4]; 4],
}

pub fn sweedler_expected_tables() -> SweedlerTables {
    SweedlerTables {
        sigma: [
            ["t_1", "t_1", "0", "0"],
            [
                "t_1",
                "a t_x^2 / t_1",
                "(a t_x t_y - t_1 t_z)/t_1",
                "-(a t_x t_y - t_1 t_z)/t_1",
            ],
            [
                "0",
                "(b t_1 t_x + a t_x t_y + t_1 t_z)/t_1",
                "(a t_y^2 + b t_1 t_y + c t_1^2)/t_1",
                "-(a t_y^2 + b t_1 t_y + c t_1^2)/t_1",
            ],
            [
                "0",
                "(b t_1 t_x + a t_x t_y + t_1 t_z)/t_1",
                "(a t_y^2 + b t_1 t_y + c t_1^2)/t_1",
                "-(t_z^2 + b t_x t_z + a c t_x^2)/t_1",
            ],
        ],
        alpha: [
            ["1", "1", "0", "0"],
            ["1", "a", "0", "0"],
            ["0", "b", "c", "-c"],
            ["0", "b", "c", "-a c"],
        ],
        twisted: [
            [
                ["1", "0", "0", "0"],
                ["0", "1", "0", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "0", "1"],
            ],
            [
                ["0", "1", "0", "0"],
                ["a", "0", "0", "0"],
                ["0", "0", "0", "1"],
                ["0", "0", "a", "0"],
            ],
            [
                ["0", "0", "1", "0"],
                ["b", "0", "0", "-1"],
                ["c", "0", "0", "0"],
                ["0", "-c", "b", "0"],
            ],
            [
                ["0", "0", "0", "1"],
                ["0", "b", "-a", "0"],
                ["0", "c", "0", "0"],
                ["-a c", "0", "0", "b"],
            ],
        ],
    }
}

/// Parses one of the reference strings in the Sweedler variable context.
pub fn parse_sweedler_expr(h: &HopfData, s: &str) -> RatExpr {
    parse_ratexpr(s, h.vars()).expect("reference table entry parses")
}

/// The nine μ rows of the Sweedler reference data.  `lhs` and the optional
/// `rhs` are free polynomials given as (coefficient, word) lists over basis
/// indices (0=1, 1=x, 2=y, 3=z); when `rhs` is empty the expected value is a
/// polynomial ⊗ 1 given by `expected`.
pub struct MuRow {
    pub name: &'static str,
    pub lhs: &'static [(&'static str, &'static [usize])],
    pub rhs: &'static [(&'static str, &'static [usize])],
    pub expected: &'static str,
}

pub const SWEEDLER_MU_ROWS: &[MuRow] = &[
    MuRow {
        name: "X^2",
        lhs: &[("1", &[1, 1])],
        rhs: &[],
        expected: "a t_x^2",
    },
    MuRow {
        name: "Y^2",
        lhs: &[("1", &[2, 2])],
        rhs: &[],
        expected: "a t_y^2 + b t_1 t_y + c t_1^2",
    },
    MuRow {
        name: "T = XY + YX",
        lhs: &[("1", &[1, 2]), ("1", &[2, 1])],
        rhs: &[],
        expected: "t_x (2 a t_y + b t_1)",
    },
    MuRow {
        name: "U = X(XZ + ZX)",
        lhs: &[("1", &[1, 1, 3]), ("1", &[1, 3, 1])],
        rhs: &[],
        expected: "a t_x^2 (2 t_z + b t_x)",
    },
    MuRow {
        name: "V = (XZ)^2 = (ZX)^2",
        lhs: &[("1", &[1, 3, 1, 3])],
        rhs: &[("1", &[3, 1, 3, 1])],
        expected: "a t_x^2 (t_z^2 + b t_x t_z + a c t_x^2)",
    },
    MuRow {
        name: "4 X^2 V = U^2 - a^-1(b^2-4ac) X^6",
        lhs: &[("4", &[1, 1, 1, 3, 1, 3])],
        rhs: &[
            ("1", &[1, 1, 3, 1, 1, 3]),
            ("1", &[1, 1, 3, 1, 3, 1]),
            ("1", &[1, 3, 1, 1, 1, 3]),
            ("1", &[1, 3, 1, 1, 3, 1]),
            ("-(b^2 - 4 a c)/a", &[1, 1, 1, 1, 1, 1]),
        ],
        expected: "",
    },
    MuRow {
        name: "T^2 - 4 X^2 Y^2 = a^-1(b^2-4ac) E^2 X^2",
        lhs: &[
            ("1", &[1, 2, 1, 2]),
            ("1", &[1, 2, 2, 1]),
            ("1", &[2, 1, 1, 2]),
            ("1", &[2, 1, 2, 1]),
            ("-4", &[1, 1, 2, 2]),
        ],
        rhs: &[("(b^2 - 4 a c)/a", &[0, 0, 1, 1])],
        expected: "",
    },
    MuRow {
        name: "EZ - XY",
        lhs: &[("1", &[0, 3]), ("-1", &[1, 2])],
        rhs: &[],
        expected: "t_1 t_z - a t_x t_y",
    },
    MuRow {
        name: "EU - X^2 T",
        lhs: &[
            ("1", &[0, 1, 1, 3]),
            ("1", &[0, 1, 3, 1]),
            ("-1", &[1, 1, 1, 2]),
            ("-1", &[1, 1, 2, 1]),
        ],
        rhs: &[],
        expected: "2 a t_x^2 (t_1 t_z - a t_x t_y)",
    },
];
