//! Acceptance run. Prints one PASS/FAIL line per criterion followed by its
//! sub-checks. Every tolerance is exact unless stated on the line.
//!
//! A few reference values do not survive recomputation. Those sub-checks are
//! compared against the reference value anyway and listed in `KNOWN`; they
//! report FAIL but do not fail the process. Any other failure, or a known one
//! that starts passing, exits with status 1.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use cubinv::drivers::{check_identities, random_cubics, run_positivity, PositivityOptions};
use cubinv_core::coeffalgo::appendix::{parts, Sweep};
use cubinv_core::coeffalgo::section3::{section3_binomial_coefficient, Section3Case};
use cubinv_core::coeffalgo::{
    closed_form_t, example_4_1_matrix, monomial_coefficient_in_s, t_family_matrix, CoefficientEngine, ColumnTypeCount,
    SplitMemo,
};
use cubinv_core::combinat::binomial;
use cubinv_core::cubic::{CubicForm, DegreeSpec};
use cubinv_core::curvature::*;
use cubinv_core::invariants::s_invariant;
use cubinv_core::poly::Polynomial;
use cubinv_core::positivity::{
    bound_polynomial, canonicalize, check_conjecture_2_2, check_theorem_3_1, check_theorem_3_2, enumerate_s_types,
    expanded_s, row_group, ExponentMatrix, PositivityReport, TypeFilter,
};
use cubinv_core::ternary::TernaryForm;
use cubinv_core::{BigInt, BigRational};
use num_traits::{Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = BigRational;

/// Sub-checks whose reference target disagrees with the computed value.
const KNOWN: [(u8, &str); 3] = [
    (4, "three smallest filtered values are 4, 6, 9"),
    (6, "A(8) = 23830660"),
    (7, "reference a201a120 - a210a111 sum matches DP"),
];

const FD_TOLERANCE: f64 = 1e-6;
const FD_STEP: f64 = 1e-4;

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

struct Criterion {
    id: u8,
    title: &'static str,
    budget: Duration,
    start: Instant,
    checks: Vec<Check>,
}

impl Criterion {
    fn new(id: u8, title: &'static str, budget_secs: u64) -> Self {
        Criterion { id, title, budget: Duration::from_secs(budget_secs), start: Instant::now(), checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let pass = got == want;
        let detail = if pass { format!("{got:?}") } else { format!("got {got:?}, want {want:?}") };
        self.check(name, pass, detail);
    }

    /// Prints the criterion and returns the names of unexpected outcomes.
    fn finish(mut self) -> (bool, Vec<String>) {
        let elapsed = self.start.elapsed();
        let within = elapsed <= self.budget;
        let name = format!("runtime within {} s", self.budget.as_secs());
        self.check(name, within, format!("{:.2} s", elapsed.as_secs_f64()));
        let pass = self.checks.iter().all(|c| c.pass);
        println!("{} criterion {}: {}", if pass { "PASS" } else { "FAIL" }, self.id, self.title);
        let mut unexpected = Vec::new();
        for c in &self.checks {
            let known = KNOWN.contains(&(self.id, c.name.as_str()));
            let tag = match (c.pass, known) {
                (true, false) => "ok",
                (false, true) => "FAIL (known)",
                (false, false) => "FAIL",
                (true, true) => "ok (was known to fail)",
            };
            println!("    {tag:<23}{}: {}", c.name, c.detail);
            if c.pass == known {
                unexpected.push(format!("criterion {}: {}", self.id, c.name));
            }
        }
        (pass, unexpected)
    }
}

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn spec(d: [u32; 3]) -> DegreeSpec {
    DegreeSpec::new(d[0], d[1], d[2]).unwrap()
}

fn mat(s: &str) -> ExponentMatrix {
    s.parse().unwrap()
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn hesse_family() -> Criterion {
    let mut c = Criterion::new(1, "Hesse family S = lambda^4 - lambda", 1);
    let f = CubicForm::hesse();
    let s = s_invariant(&f).unwrap();
    let want = Polynomial::parse_expression(f.table(), "lambda^4 - lambda").unwrap();
    c.check("S of x1^3 + x2^3 + x3^3 + 6 lambda x1 x2 x3", s == want, s.to_string());
    c
}

fn identity_suite() -> Criterion {
    let mut c = Criterion::new(2, "exact identities on 100 seeded cubics in [-9, 9]", 30);
    let cubics = random_cubics(2024, 100, 9);
    let checks = check_identities(&cubics, cubinv::pool::worker_count(None).unwrap()).unwrap();
    let count = |f: &dyn Fn(&cubinv_core::invariants::IdentityChecks) -> bool| checks.iter().filter(|k| f(k)).count();
    let all9 = |m: &[[bool; 3]; 3]| m.iter().flatten().all(|&b| b);
    c.eq("cubics with B_ij lemma for all 9 pairs", count(&|k| all9(&k.lemma_1_1)), 100);
    c.eq("cubics with second-derivative remark for all 9 pairs", count(&|k| all9(&k.remark_1_2)), 100);
    c.eq("cubics with adj(B) = H (f_ij)", count(&|k| all9(&k.adjoint)), 100);
    c.eq("cubics with (f_ij) B = H I", count(&|k| k.adjugate), 100);
    c.eq("cubics with 1/2 sum B_ij H_ij = 6^5 S F", count(&|k| k.s_f), 100);
    c
}

/// Ricci tensor of `g = -(f_ij)/6` from Christoffel symbols and finite
/// differences: `Ric_jk = ∂_i Γ^i_jk - ∂_k Γ^i_ij + Γ^i_ip Γ^p_jk - Γ^i_kp Γ^p_ij`.
mod fd {
    pub type V = [f64; 3];
    pub type M = [[f64; 3]; 3];

    pub struct Cubic(pub Vec<([u32; 3], f64)>);

    impl Cubic {
        fn second(&self, x: &V, i: usize, j: usize) -> f64 {
            let mut s = 0.0;
            for (e, c) in &self.0 {
                let mut e = *e;
                let mut k = *c;
                for v in [i, j] {
                    k *= e[v] as f64;
                    if e[v] == 0 {
                        break;
                    }
                    e[v] -= 1;
                }
                if k != 0.0 {
                    s += k * x[0].powi(e[0] as i32) * x[1].powi(e[1] as i32) * x[2].powi(e[2] as i32);
                }
            }
            s
        }

        fn metric(&self, x: &V) -> M {
            core::array::from_fn(|i| core::array::from_fn(|j| -self.second(x, i, j) / 6.0))
        }
    }

    fn inv(m: &M) -> M {
        let c = |i: usize, j: usize| {
            let r = [(i + 1) % 3, (i + 2) % 3];
            let s = [(j + 1) % 3, (j + 2) % 3];
            m[r[0]][s[0]] * m[r[1]][s[1]] - m[r[0]][s[1]] * m[r[1]][s[0]]
        };
        let det = m[0][0] * c(0, 0) + m[0][1] * c(0, 1) + m[0][2] * c(0, 2);
        core::array::from_fn(|i| core::array::from_fn(|j| c(j, i) / det))
    }

    fn shift(x: &V, k: usize, h: f64) -> V {
        let mut y = *x;
        y[k] += h;
        y
    }

    fn christoffel(f: &Cubic, x: &V, h: f64) -> [M; 3] {
        let gi = inv(&f.metric(x));
        let dg: [M; 3] = core::array::from_fn(|l| {
            let (a, b) = (f.metric(&shift(x, l, h)), f.metric(&shift(x, l, -h)));
            core::array::from_fn(|i| core::array::from_fn(|j| (a[i][j] - b[i][j]) / (2.0 * h)))
        });
        core::array::from_fn(|k| {
            core::array::from_fn(|i| {
                core::array::from_fn(|j| {
                    (0..3).map(|l| 0.5 * gi[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j])).sum()
                })
            })
        })
    }

    pub fn ricci(f: &Cubic, x: &V, h: f64) -> M {
        let gam = christoffel(f, x, h);
        let dgam: [[M; 3]; 3] = core::array::from_fn(|m| {
            let at = |t: f64| christoffel(f, &shift(x, m, t * h), h);
            let (a2, a1, b1, b2) = (at(2.0), at(1.0), at(-1.0), at(-2.0));
            core::array::from_fn(|k| {
                core::array::from_fn(|i| {
                    core::array::from_fn(|j| {
                        (-a2[k][i][j] + 8.0 * a1[k][i][j] - 8.0 * b1[k][i][j] + b2[k][i][j]) / (12.0 * h)
                    })
                })
            })
        });
        let mut ric = [[0.0; 3]; 3];
        for j in 0..3 {
            for k in 0..3 {
                let mut s = 0.0;
                for i in 0..3 {
                    s += dgam[i][i][j][k] - dgam[k][i][i][j];
                    for p in 0..3 {
                        s += gam[i][i][p] * gam[p][j][k] - gam[i][k][p] * gam[p][i][j];
                    }
                }
                ric[j][k] = s;
            }
        }
        ric
    }
}

fn rational_cubic(a: [i64; 10]) -> TernaryForm<Q> {
    CubicForm::from_normalized_ints(&a).numeric_raw().unwrap().map_to_rational()
}

fn curvature() -> Criterion {
    let mut c = Criterion::new(3, "curvature of the Hessian metric", 60);
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let (mut points, mut theorem, mut coords) = (0, 0, 0);
    while points < 50 {
        let a: [i64; 10] = core::array::from_fn(|_| rng.gen_range(-9..=9));
        let f = rational_cubic(a);
        let mut v = || -> [Q; 3] { core::array::from_fn(|_| qr(rng.gen_range(-20..=20), rng.gen_range(1..=9))) };
        let (x, xi, eta) = (v(), v(), v());
        let Ok(p) = CurvaturePoint::new(&f, x) else { continue };
        let t = curvature_tensor(&p);
        points += 1;
        theorem += theorem_1_3_check(&p, &t, &xi, &eta) as usize;
        coords += (coordinate_identities(&p, &t) == [true, true]) as usize;
    }
    c.eq("random points with -4h R(xi,eta,xi,eta) = S bracket^2", theorem, 50);
    c.eq("random points with -4h R_1212 = S x3^2 and 4h R_1323 = S x1 x2", coords, 50);

    let triple = CubicForm::triple_product();
    let flat = bound_polynomial(&triple).unwrap();
    c.check("9 H^2 - 6^6 S F^2 for F = 6 x1 x2 x3", flat.is_zero(), flat.to_string());
    let f = triple.numeric_raw().unwrap().map_to_rational();
    let mut nonzero = 0;
    for i in 1..=5 {
        for j in 1..=5 {
            for k in 1..=5 {
                let p = CurvaturePoint::new(&f, [qr(i, 2), qr(j, 3), q(k)]).unwrap();
                nonzero += !level_set_curvature(&p).is_zero() as usize;
            }
        }
    }
    c.eq("grid points in the positive octant with nonzero level-set curvature", nonzero, 0);

    let mut worst: f64 = 0.0;
    let mut cases = vec![(f.clone(), [q(1), q(1), q(1)]), (f.clone(), [q(1), q(2), q(3)])];
    while cases.len() < 12 {
        let a: [i64; 10] = core::array::from_fn(|_| rng.gen_range(-3..=3));
        let g = rational_cubic(a);
        let x: [Q; 3] = core::array::from_fn(|_| q(rng.gen_range(1..=3)));
        match CurvaturePoint::new(&g, x.clone()) {
            Ok(p) if p.big_h.abs() >= q(1) => cases.push((g, x)),
            _ => {}
        }
    }
    for (g, x) in &cases {
        let p = CurvaturePoint::new(g, x.clone()).unwrap();
        let ric = ricci_tensor(&p, &curvature_tensor(&p));
        let oracle = fd::Cubic(g.terms().map(|(e, c)| (e, c.to_f64().unwrap())).collect());
        let num = fd::ricci(&oracle, &x.clone().map(|v| v.to_f64().unwrap()), FD_STEP);
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((ric[i][j].to_f64().unwrap() - num[i][j]).abs());
            }
        }
    }
    c.check(
        format!("exact Ricci vs finite differences at {} points, tolerance {FD_TOLERANCE:e}", cases.len()),
        worst < FD_TOLERANCE,
        format!("max abs error {worst:.2e}"),
    );
    c
}

fn positivity_333() -> Criterion {
    let mut c = Criterion::new(4, "d = (3,3,3) campaign", 30 * 60);
    let sp = spec([3, 3, 3]);

    let t0 = Instant::now();
    let s = expanded_s(&sp).unwrap();
    let by_matrix = |m: &ExponentMatrix| s.coefficient(&m.to_monomial(s.table()).unwrap());
    c.eq("expanded S: nonzero terms", s.len(), 209520);
    c.eq("expanded S: negative terms", s.terms().iter().filter(|(_, v)| !v.is_positive()).count(), 0);
    let max = s.terms().iter().map(|(_, v)| v).max().unwrap().clone();
    c.eq("expanded S: max coefficient", max, int(356));
    let witness = mat("2,1,1,2,1,1;1,2,1,1,2,1;1,1,2,1,1,2");
    c.eq("expanded S: coefficient of the 356 witness", by_matrix(&witness), int(356));
    let mut top: Vec<BigInt> = s.terms().iter().map(|(_, v)| v.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    top.reverse();
    c.eq("expanded S: largest values", top[..7].to_vec(), [356, 280, 214, 176, 164, 128, 106].map(int).to_vec());
    let zeros = ["4,0,0,2,0,2;0,4,0,2,2,0;0,0,4,0,2,2", "4,0,0,2,1,1;0,4,0,1,2,1;0,0,4,1,1,2"];
    for z in zeros {
        c.eq(format!("expanded S: coefficient of {z}"), by_matrix(&mat(z)), int(0));
    }
    for one in [
        "4,0,0,4,0,0;0,4,0,0,4,0;0,0,4,0,0,4",
        "4,0,0,3,0,1;0,4,0,1,3,0;0,0,4,0,1,3",
        "4,0,0,0,2,2;0,4,1,1,2,0;0,0,3,3,0,2",
    ] {
        c.eq(format!("expanded S: coefficient of {one}"), by_matrix(&mat(one)), int(1));
    }
    let mut filtered = BTreeSet::new();
    for (m, v) in s.terms() {
        if !ExponentMatrix::from_monomial(m, s.table()).unwrap().has_full_power() {
            filtered.insert(v.clone());
        }
    }
    let smallest: Vec<BigInt> = filtered.iter().take(4).cloned().collect();
    c.eq("three smallest filtered values are 4, 6, 9", smallest[..3].to_vec(), [4, 6, 9].map(int).to_vec());
    let witnesses = [
        ("3,0,1,3,0,1;1,3,0,1,3,0;0,1,3,0,1,3", 4),
        ("3,3,0,0,2,0;1,1,3,1,0,2;0,0,1,3,2,2", 6),
        ("3,0,1,3,0,1;1,3,0,0,1,3;0,1,3,1,3,0", 9),
    ];
    for (w, v) in witnesses {
        c.eq(format!("expanded S: coefficient of {w}"), by_matrix(&mat(w)), int(v));
    }
    let expand_secs = t0.elapsed().as_secs_f64();
    c.check("full expansion within 30 min", expand_secs < 1800.0, format!("{expand_secs:.2} s"));

    let t1 = Instant::now();
    let orbit = |filter| {
        let opts = PositivityOptions {
            filter,
            workers: cubinv::pool::worker_count(None).unwrap(),
            shard_size: 16,
            checkpoint_dir: None,
            cross_check: false,
        };
        run_positivity(&sp, &opts).unwrap().0
    };
    let all = orbit(TypeFilter::default());
    let nofour = orbit(TypeFilter { no_full_powers: true });
    let orbit_secs = t1.elapsed().as_secs_f64();
    c.eq("orbit path: types", all.n_types, 123);
    c.eq("orbit path: nonzero terms", all.n_nonzero, 209520);
    c.eq("orbit path: violations", all.violations.len(), 0);
    let max = all.max.as_ref().unwrap();
    let want = (int(356), canonicalize(&witness, &sp).unwrap().to_string());
    c.eq("orbit path: max and its type", (max.value.clone(), max.ty.to_string()), want);
    let single = all.largest(7).iter().all(|(_, tys)| tys.len() == 1);
    c.check("orbit path: each of the 7 largest values has one type", single, "");
    let zero_types: BTreeSet<String> = all.zeros.iter().map(|t| t.to_string()).collect();
    let want: BTreeSet<String> = zeros.iter().map(|z| canonicalize(&mat(z), &sp).unwrap().to_string()).collect();
    c.eq("orbit path: zero types", zero_types, want);
    c.eq("orbit path: types with value 1", value_types(&all, 1), 3);
    c.eq("orbit path: filtered smallest values", smallest_values(&nofour, 4), smallest);
    for (w, v) in witnesses {
        let got = nofour.value_of(&mat(w)).unwrap().cloned();
        c.eq(format!("orbit path: filtered coefficient of {w}"), got, Some(int(v)));
    }
    c.check("orbit path within 5 min", orbit_secs < 300.0, format!("{orbit_secs:.2} s"));
    c
}

fn value_types(r: &PositivityReport, v: i64) -> usize {
    r.values.iter().filter(|tv| tv.value == int(v)).count()
}

fn smallest_values(r: &PositivityReport, k: usize) -> Vec<BigInt> {
    r.smallest(k).into_iter().map(|(v, _)| v).collect()
}

fn oracle_equivalence() -> Criterion {
    let mut c = Criterion::new(5, "per-monomial coefficients equal full expansion", 10 * 60);
    let sp = spec([2, 2, 2]);
    let s = expanded_s(&sp).unwrap();
    let types = enumerate_s_types(&sp, TypeFilter::default());
    let bad = types
        .iter()
        .filter(|t| {
            monomial_coefficient_in_s(&t.matrix, &sp).unwrap()
                != s.coefficient(&t.matrix.to_monomial(s.table()).unwrap())
        })
        .count();
    c.check("every canonical type at (2,2,2)", bad == 0, format!("{} types, {bad} mismatches", types.len()));

    // random orbit members of random types, so zero types and non-canonical
    // column orders are exercised too
    let sp = spec([3, 3, 3]);
    let s = expanded_s(&sp).unwrap();
    let types = enumerate_s_types(&sp, TypeFilter::default());
    let group = row_group(&sp);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut engine = CoefficientEngine::new(sp);
    let (mut bad, mut zeros, mut distinct, mut covered) = (0, 0, BTreeSet::new(), BTreeSet::new());
    const SAMPLES: usize = 1200;
    for _ in 0..SAMPLES {
        let ty = types.choose(&mut rng).unwrap();
        covered.insert(ty.to_string());
        let mut cols = ty.matrix.permute_rows(*group.choose(&mut rng).unwrap()).columns().to_vec();
        cols.shuffle(&mut rng);
        let m = ExponentMatrix::from_columns(cols);
        let want = s.coefficient(&m.to_monomial(s.table()).unwrap());
        zeros += want.is_zero() as usize;
        bad += (engine.coefficient(&m).unwrap() != want) as usize;
        distinct.insert(m);
    }
    c.check(
        format!("{SAMPLES} sampled monomials at (3,3,3)"),
        bad == 0,
        format!("{} distinct monomials, {zeros} with coefficient 0, {bad} mismatches", distinct.len()),
    );
    c.eq("canonical types hit by the sample", covered.len(), types.len());
    c
}

fn closed_forms() -> Criterion {
    let mut c = Criterion::new(6, "closed forms and the six-part sum", 60);
    let want: Vec<BigInt> = [1u64, 36, 78400, 533610000, 6363107150400].into_iter().map(BigInt::from).collect();
    c.eq("closed form, t = 0..4", (0..5).map(closed_form_t).collect::<Vec<_>>(), want.clone());
    let engine: Vec<BigInt> = (1..=2)
        .map(|t| {
            let (m, sp) = t_family_matrix(t);
            monomial_coefficient_in_s(&m, &sp).unwrap()
        })
        .collect();
    c.eq("factorisation engine on the t family, t = 1..2", engine, want[1..3].to_vec());

    let a4 = parts(4);
    c.eq("six parts at s = 4", a4.parts.to_vec(), [5804, -3048, 2352, -4552, -2256, 2352].map(int).to_vec());
    c.eq("total at s = 4", a4.total.clone(), int(652));

    let listed = [1i64, 4, 40, 652, 13174, 308464, 8158021, 23830660];
    for (s, &v) in (1..=8u32).zip(&listed) {
        let got = parts(s).total;
        if s == 8 {
            c.eq("A(8) = 23830660", got, int(v));
        } else {
            c.eq(format!("A({s})"), got, int(v));
        }
    }
    let engine: Vec<BigInt> = (1..=6)
        .map(|s| {
            let (m, sp) = example_4_1_matrix(s);
            monomial_coefficient_in_s(&m, &sp).unwrap()
        })
        .collect();
    let sums: Vec<BigInt> = (1..=6).map(|s| parts(s).total).collect();
    c.eq("factorisation engine equals six-part sum, s = 1..6", engine, sums);

    let sweep = Sweep::new(501);
    let direct_agree = (1..=30).all(|s| sweep.value(s) == parts(s));
    c.check("tabulated and direct six-part sums agree, s = 1..30", direct_agree, "");
    let (mut a36, mut positive) = (0, 0);
    for s in 1..=501 {
        let v = sweep.value(s);
        a36 += (v.parts[2] == v.parts[5]) as usize;
        positive += v.total.is_positive() as usize;
    }
    c.eq("s <= 501 with A3 = A6", a36, 501);
    c.eq("s <= 501 with A > 0", positive, 501);
    c
}

/// The reference closed sum for `a201 a120 - a210 a111`, whose bracket is
/// `C(2w, w+v-(k+1)) - C(2w, w+v-k)`.
fn reference_a201a120(mixed: [u32; 3]) -> BigInt {
    let [u, v, w] = mixed.map(|m| (m / 2) as i64);
    let mut sum = BigInt::zero();
    for k in 0..=2 * v + 1 {
        sum += binomial(2 * v + 1, k)
            * binomial(2 * u, u + v - k)
            * (binomial(2 * w, w + v - (k + 1)) - binomial(2 * w, w + v - k));
    }
    sum
}

/// Column counts with the given mixed counts inside the smallest balanced
/// spec for which the quadratic has the right tridegree.
fn realise(case: Section3Case, mixed: [u32; 3]) -> (ColumnTypeCount, [u32; 3]) {
    let quad = case.quadratic();
    for s in 1..40u32 {
        let d = [s + 1; 3];
        let Some(target) = quad.tridegree(d) else { continue };
        let [u, v, w] = mixed.map(i64::from);
        let rest = [target[0] as i64 - u - v, target[1] as i64 - u - w, target[2] as i64 - v - w];
        if rest.iter().all(|&x| x >= 0 && x % 2 == 0) {
            return (ColumnTypeCount { p: rest.map(|x| (x / 2) as u32), mixed }, d);
        }
    }
    panic!("no spec realises {mixed:?}");
}

fn sign_theorems() -> Criterion {
    let mut c = Criterion::new(7, "signs of cofactors and H", 10 * 60);
    for d in [[2, 1, 1], [2, 2, 2], [3, 3, 3]] {
        let sp = spec(d);
        let b = check_theorem_3_1(&sp).unwrap();
        let h = check_theorem_3_2(&sp).unwrap();
        let terms: Vec<String> =
            b.entries.iter().chain(&h.entries).map(|e| format!("{} {}", e.name, e.n_terms)).collect();
        c.check(format!("B_pp < 0, B_pq > 0 at {sp}"), b.holds(), terms[..6].join(", "));
        c.check(format!("H > 0 at {sp}"), h.holds(), terms[6..].join(", "));
    }
    let mut memo = SplitMemo::new();
    let (mut checked, mut bad, mut sign_bad) = (0, 0, 0);
    let (mut reference_checked, mut reference_bad) = (0, 0);
    for case in Section3Case::ALL {
        let quad = case.quadratic();
        for a in 0..=6u32 {
            for b in 0..=6u32 {
                for w in 0..=6u32 {
                    let mixed = match case {
                        Section3Case::A300A021 | Section3Case::A201A120 | Section3Case::B13X3Sq => {
                            [2 * a, 2 * b + 1, 2 * w]
                        }
                        _ => [2 * a + 1, 2 * b, 2 * w],
                    };
                    let closed = section3_binomial_coefficient(case, mixed).unwrap();
                    let (n, d) = realise(case, mixed);
                    let dp = memo.coefficient(&n, &quad, d);
                    checked += 1;
                    bad += (closed != dp) as usize;
                    if let Some(sign) = case.expected_sign() {
                        sign_bad += (!closed.is_zero() && closed.is_positive() != (sign > 0)) as usize;
                    }
                    if case == Section3Case::A201A120 {
                        reference_checked += 1;
                        reference_bad += (reference_a201a120(mixed) != dp) as usize;
                    }
                }
            }
        }
    }
    c.check("binomial sums match DP, u, v, w <= 6", bad == 0, format!("{checked} values, {bad} mismatches"));
    c.eq("binomial sums with the wrong sign", sign_bad, 0);
    c.check(
        "reference a201a120 - a210a111 sum matches DP",
        reference_bad == 0,
        format!(
            "{reference_checked} values, {reference_bad} mismatches; first at (2,1,0): reference {}, DP -1",
            reference_a201a120([2, 1, 0])
        ),
    );
    c
}

fn bound() -> Criterion {
    let mut c = Criterion::new(8, "9 H^2 - 6^6 S F^2 has nonnegative coefficients", 2 * 60 * 60);
    let zero = bound_polynomial(&cubinv_core::positivity::symbolic_cubic(&spec([1, 1, 1])).unwrap()).unwrap();
    c.check("(1,1,1) is identically zero", zero.is_zero(), format!("{} terms", zero.len()));
    for d in [[2, 1, 1], [3, 2, 2]] {
        let sp = spec(d);
        let r = check_conjecture_2_2(&sp, TypeFilter::default()).unwrap();
        let cross = r.cross_check.as_ref().map(|k| k.passed()).unwrap_or(false);
        c.check(
            format!("{sp}"),
            r.holds() && cross,
            format!("{} types, {} nonzero terms, {} negative", r.n_types, r.n_nonzero, r.violations.len()),
        );
    }
    c
}

fn main() {
    let runs: [fn() -> Criterion; 8] = [
        hesse_family,
        identity_suite,
        curvature,
        positivity_333,
        oracle_equivalence,
        closed_forms,
        sign_theorems,
        bound,
    ];
    let mut summary = BTreeMap::new();
    let mut unexpected = Vec::new();
    for run in runs {
        let (pass, u) = run().finish();
        *summary.entry(pass).or_insert(0) += 1;
        unexpected.extend(u);
    }
    println!(
        "acceptance: {} PASS, {} FAIL; known discrepancies {}",
        summary.get(&true).unwrap_or(&0),
        summary.get(&false).unwrap_or(&0),
        KNOWN.len()
    );
    if !unexpected.is_empty() {
        println!("unexpected outcomes:");
        for u in &unexpected {
            println!("    {u}");
        }
        std::process::exit(1);
    }
}
