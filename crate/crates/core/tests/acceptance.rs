//! One pass/fail line per acceptance criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use burniat::affine::{build_gamma, gamma_abelianization, subgroup_abelianization, verify_relations};
use burniat::elliptic::{solve_k2_two_constant, verify_sign_table, verify_splitting, verify_ui_identity};
use burniat::exact::{smith_normal_form, AbelianInvariants, IntMatrix};
use burniat::finite::catalog::{dihedral_times_elementary, quaternion_times_elementary};
use burniat::finite::{classify, IsoClass};
use burniat::pipeline::{
    arrangement_agreement, fixed_point_report, gamma_bar, invariant_dimension_brute_force,
    invariant_section_dimension, moduli_dimension_report, verify_theorem_table, Character, SECTION_CHARACTERS,
};
use burniat::plane::{parse_arrangement, BurniatKind, REFERENCE_FIXTURES};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Option<u64>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn relation_suite() -> Outcome {
    let r = verify_relations();
    let count = |f: &str| r.checks.iter().filter(|c| c.family == f).count();
    ensure(count("commute") == 12 && count("twisted") == 6 && count("commutator") == 3, "wrong number of identities")?;
    let failed: Vec<&str> = r.checks.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
    ensure(failed.is_empty(), format!("failed: {failed:?}"))?;
    Ok(format!("{} identities", r.checks.len()))
}

fn gamma_homology() -> Outcome {
    let h = gamma_abelianization();
    ensure(h == AbelianInvariants::elementary_two(6), format!("H1 = {h}"))?;
    Ok(h.to_string())
}

fn gamma_bar_structure() -> Outcome {
    let gb = gamma_bar();
    ensure(gb.table.order() == 512, format!("order {}", gb.table.order()))?;
    let lattice = gb.lattice_subgroup();
    ensure(lattice.len() == 64, "Lambda/2Lambda does not have 64 elements")?;
    let center = gb.table.center();
    ensure(lattice.iter().all(|x| center.contains(x)), "Lambda/2Lambda is not central")?;
    ensure(classify(&gb.table.quotient(&lattice).map_err(|e| e.to_string())?.table) == IsoClass::ElementaryAbelian(3), "quotient is not (Z/2)^3")?;
    let sub = burniat::finite::FiniteGroupTable::from_fn(64, |a, b| {
        let pos = |x| lattice.binary_search(&x).unwrap();
        pos(gb.table.mul(lattice[a], lattice[b]))
    })
    .map_err(|e| e.to_string())?;
    ensure(classify(&sub) == IsoClass::ElementaryAbelian(6), "Lambda/2Lambda is not (Z/2)^6")?;
    Ok("512, central (Z/2)^6, quotient (Z/2)^3".into())
}

fn theorem_table() -> Outcome {
    let t = verify_theorem_table().map_err(|e| e.to_string())?;
    for r in &t.rows {
        ensure(r.matches_expected, format!("K^2 = {}: {} / {}", r.k_squared, r.pi1, r.h1))?;
        if (2..=5).contains(&r.k_squared) {
            let w = r.witness.as_ref().ok_or(format!("K^2 = {}: no witness", r.k_squared))?;
            ensure(w.bijective_homomorphism, "witness is not an isomorphism")?;
            if r.k_squared >= 3 {
                let k = r.k_squared as usize - 2;
                let tail = "0".repeat(k);
                let want = ["i", "j", "-k"].map(|u| format!("({u}, {tail})"));
                ensure(w.gamma_images == want, format!("gamma images {:?}", w.gamma_images))?;
            }
        }
    }
    Ok(t.rows.iter().map(|r| format!("{}:{}", r.k_squared, r.pi1)).collect::<Vec<_>>().join("; "))
}

fn discrepancies() -> Outcome {
    let t = verify_theorem_table().map_err(|e| e.to_string())?;
    let labels = ["K^2 = 2 quotient is abelian", "K^2 = 2 quotient is not H", "H1 = (Z/2)^{K^2} fails exactly at K^2 = 2"];
    for l in labels {
        let c = t.report.checks.iter().find(|c| c.label == l).ok_or(format!("missing check {l}"))?;
        ensure(c.holds, format!("{l}: {:?}", c.detail))?;
    }
    let failures: Vec<i64> = t
        .rows
        .iter()
        .filter(|r| r.h1_invariants != AbelianInvariants::elementary_two(r.k_squared as usize))
        .map(|r| r.k_squared)
        .collect();
    ensure(failures == [2], format!("H1 = (Z/2)^{{K^2}} fails at {failures:?}"))?;
    Ok("K^2 = 2 abelian; H1 = (Z/2)^{K^2} fails only at 2".into())
}

fn fixed_points() -> Outcome {
    let r = fixed_point_report();
    ensure(r.all_pass(), r.to_string())?;
    Ok("64 points, 192 increments".into())
}

fn subgroup_homology() -> Outcome {
    let want = AbelianInvariants::new(2, vec![2, 2, 2, 2]).unwrap();
    for i in 1..=3 {
        let h = subgroup_abelianization(i).map_err(|e| e.to_string())?;
        ensure(h == want, format!("Gamma_{i}^ab = {h}"))?;
    }
    Ok(want.to_string())
}

fn sign_table() -> Outcome {
    for r in [verify_sign_table(), verify_splitting(), verify_ui_identity()] {
        ensure(r.all_pass(), r.to_string())?;
    }
    Ok("V, W signs; splitting; u_i^2".into())
}

fn constants() -> Outcome {
    let s = solve_k2_two_constant();
    ensure(s.c_is_a_cubed && s.zeta_is_minus_a && s.a_fourth_is_minus_one, "constant relations")?;
    ensure(s.candidates.iter().all(|c| c.rejected.is_none() == (c.exponent % 2 == 1)), "a^4 = -1 not forced")?;
    let vectors: Vec<([u8; 3], u8)> = s.records.iter().map(|r| r.vector()).collect();
    ensure(vectors == [([0, 1, 1], 1), ([1, 0, 1], 1), ([1, 1, 0], 1)], format!("{vectors:?}"))?;
    ensure(s.records_sum == ([0, 0, 0], 1), "sum is not <0,1>")?;
    Ok(format!("c = {}, zeta = {}", s.c, s.zeta))
}

fn dimensions() -> Outcome {
    let spaces: Vec<Vec<Character>> = SECTION_CHARACTERS.iter().map(|s| s.to_vec()).collect();
    let d = invariant_section_dimension();
    ensure(d == 2 && invariant_dimension_brute_force(&spaces) == 2, format!("sections {d}"))?;
    let m = moduli_dimension_report();
    ensure(m.dimension == 4, format!("dimension {}", m.dimension))?;
    ensure((m.k_squared_cover, m.k_squared_y, m.p_g_cover) == (48, 48, 10), "numerology")?;
    ensure(m.report.all_pass(), m.report.to_string())?;
    Ok("2 sections, dimension 4, 48/48/10".into())
}

fn arrangements() -> Outcome {
    for f in REFERENCE_FIXTURES {
        let a = parse_arrangement(f.json).map_err(|e| e.to_string())?;
        ensure(a.validate().is_valid(), format!("{} does not validate", f.name))?;
        let c = a.classify().map_err(|e| e.to_string())?;
        ensure(c.k_squared == f.k_squared && c.nodal == f.nodal, format!("{} classified as {c:?}", f.name))?;
        let kind_ok = match (f.k_squared, c.kind) {
            (6, BurniatKind::Primary) => true,
            (4 | 5, BurniatKind::Secondary(m)) => m as i64 == 6 - f.k_squared,
            (2 | 3, BurniatKind::Tertiary(m)) => m as i64 == 6 - f.k_squared,
            _ => false,
        };
        ensure(kind_ok, format!("{}: kind {:?}", f.name, c.kind))?;
    }
    let r = arrangement_agreement().map_err(|e| e.to_string())?;
    ensure(r.all_pass(), r.to_string())?;
    Ok("6 fixtures".into())
}

fn det(m: &[Vec<i64>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    (0..m.len()).fold(BigInt::zero(), |acc, c| {
        let minor: Vec<Vec<i64>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect()).collect();
        let t = BigInt::from(m[0][c]) * det(&minor);
        if c % 2 == 0 {
            acc + t
        } else {
            acc - t
        }
    })
}

fn combos(n: usize, k: usize, start: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (start..n)
        .flat_map(|f| {
            combos(n, k - 1, f + 1).into_iter().map(move |mut s| {
                s.insert(0, f);
                s
            })
        })
        .collect()
}

fn minor_gcd(m: &[Vec<i64>], k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in combos(m.len(), k, 0) {
        for cols in combos(m[0].len(), k, 0) {
            let sub: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}

fn property_suites() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..200 {
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let m: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect()).collect();
        let snf = smith_normal_form(&IntMatrix::from_rows(c, &m).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let mut product = BigInt::from(1);
        for k in 1..=r.min(c) {
            product *= snf.diagonal.get(k - 1).cloned().unwrap_or_default().abs();
            ensure(product == minor_gcd(&m, k), format!("trial {trial}: {m:?}"))?;
        }
    }
    for k in 0..=3 {
        ensure(classify(&quaternion_times_elementary(k)) == IsoClass::QuaternionTimesElementaryAbelian(k), format!("H x (Z/2)^{k}"))?;
        ensure(matches!(classify(&dihedral_times_elementary(k)), IsoClass::Other(_)), format!("D4 x (Z/2)^{k} accepted"))?;
    }
    Ok("200 matrices, 8 reference tables".into())
}

fn main() -> ExitCode {
    let _ = build_gamma();
    let criteria: [Criterion; 12] = [
        ("relation suite", Some(1), relation_suite),
        ("H1(Gamma) = (Z/2)^6", Some(1), gamma_homology),
        ("|Gamma/2Lambda| = 512 with central (Z/2)^6", Some(1), gamma_bar_structure),
        ("theorem table with witnesses", Some(10), theorem_table),
        ("discrepancy checks", None, discrepancies),
        ("fixed points and lambda-hat", None, fixed_points),
        ("Gamma_i^ab = Z^2 + (Z/2)^4", None, subgroup_homology),
        ("sign table, splitting, u_i^2", Some(1), sign_table),
        ("K^2 = 2 constants over Q(zeta_8)", None, constants),
        ("invariant sections and moduli dimension", None, dimensions),
        ("reference arrangements", None, arrangements),
        ("property suites", None, property_suites),
    ];
    let mut failures = 0;
    for (n, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(s)) if elapsed > Duration::from_secs(*s) => Err(format!("took {elapsed:.2?}, limit {s} s")),
            (o, _) => o,
        };
        match outcome {
            Ok(d) => println!("PASS  {:>2}. {name} ({elapsed:.2?}): {d}", n + 1),
            Err(e) => {
                failures += 1;
                println!("FAIL  {:>2}. {name} ({elapsed:.2?}): {e}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
