//! Self-check suites behind `guillotine verify`.

use clap::ValueEnum;
use guillotine_core::series::{
    alternating_explicit, alternating_gf, boundary_gf, boundary_square_explicit, catalan,
    count_guillotine_recursive, count_separable_explicit, guillotine_explicit, guillotine_gf,
    wincc_gf, wincc_recurrence, window_avoiding_explicit, window_avoiding_gf,
};
use guillotine_core::{
    avoids, count_class, dperm_to_tree, enumerate_colored_trees, enumerate_dperms, is_separable,
    path_to_tree, tree_to_dperm, tree_to_path, BigUint, ClassicalPattern, PatternSpec,
};

use crate::io::{dperm_json, tree_json};
use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Table1,
    Sequences,
    Bijections,
    Characterization,
    Formulas,
}

const BOUNDARY_TABLE: [[u64; 4]; 16] = [
    [1, 1, 1, 1],
    [2, 3, 4, 5],
    [6, 15, 28, 45],
    [20, 87, 232, 485],
    [64, 507, 1984, 5485],
    [194, 2859, 16804, 62405],
    [562, 15495, 139012, 702445],
    [1570, 80943, 1119172, 7770085],
    [4258, 409539, 8776036, 84292525],
    [11266, 2015907, 67190308, 897101125],
    [29186, 9687855, 503591332, 9379187885],
    [74242, 45574791, 3703703716, 96487985125],
    [185858, 210305739, 26779859332, 978249364205],
    [458754, 953479899, 190652265220, 9787794765765],
    [1118210, 4252898199, 1337960522980, 96752629782125],
    [2695170, 18683733663, 9264356481220, 945738292868325],
];

/// A failed check: what was compared and the first counterexample.
struct Counterexample(String);

type Check = Result<String, Counterexample>;

fn fail<T>(msg: impl Into<String>) -> Result<T, Counterexample> {
    Err(Counterexample(msg.into()))
}

impl From<guillotine_core::Error> for Counterexample {
    fn from(e: guillotine_core::Error) -> Self {
        Counterexample(format!("error: {e}"))
    }
}

fn counts(
    s: guillotine_core::Result<guillotine_core::TruncatedPowerSeries>,
) -> Result<Vec<BigUint>, Counterexample> {
    Ok(s?.to_counts()?)
}

fn table1() -> Check {
    let mut cells = 0;
    for (col, d) in (2u32..=5).enumerate() {
        let got = counts(boundary_gf(d, 15))?;
        for (n, row) in BOUNDARY_TABLE.iter().enumerate() {
            if got[n] != BigUint::from(row[col]) {
                return fail(format!(
                    "a_{d}({n}) = {} but the table has {}",
                    got[n], row[col]
                ));
            }
            cells += 1;
        }
    }
    Ok(format!("{cells} cells checked"))
}

fn sequences() -> Vec<(&'static str, Check)> {
    let series: [(&str, Vec<BigUint>, [u64; 10]); 3] = [
        (
            "boundary d=2 series",
            counts(boundary_gf(2, 9)).unwrap_or_default(),
            [1, 2, 6, 20, 64, 194, 562, 1570, 4258, 11266],
        ),
        (
            "window d=2 series",
            counts(window_avoiding_gf(2, 9)).unwrap_or_default(),
            [1, 2, 6, 20, 70, 254, 948, 3618, 14058, 55432],
        ),
        (
            "wincc series",
            counts(Ok(wincc_gf(9))).unwrap_or_default(),
            [1, 2, 6, 20, 68, 232, 792, 2704, 9232, 31520],
        ),
    ];
    let mut out = Vec::new();
    for (name, got, want) in &series {
        let check = (|| {
            if got.len() != want.len() {
                return fail("series could not be computed");
            }
            for (n, (g, w)) in got.iter().zip(want).enumerate() {
                if *g != BigUint::from(*w) {
                    return fail(format!("term {n}: {g} vs {w}"));
                }
            }
            Ok(format!("{} terms", want.len()))
        })();
        out.push((*name, check));
    }
    let recurrence = wincc_recurrence(9);
    out.push((
        "wincc recurrence",
        (|| {
            for (n, w) in series[2].2.iter().enumerate() {
                if recurrence[n] != BigUint::from(*w) {
                    return fail(format!("term {n}: {} vs {w}", recurrence[n]));
                }
            }
            Ok("10 terms".into())
        })(),
    ));
    let classes: [(&str, [&str; 4], [u64; 7]); 3] = [
        (
            "class 2413,3142,1324,4231",
            ["2413", "3142", "1324", "4231"],
            [1, 2, 6, 20, 64, 194, 562],
        ),
        (
            "class 2413,3142,21~354,45~312",
            ["2413", "3142", "21~354", "45~312"],
            [1, 2, 6, 20, 70, 254, 948],
        ),
        (
            "class 2413,3142,2143,3412",
            ["2413", "3142", "2143", "3412"],
            [1, 2, 6, 20, 68, 232, 792],
        ),
    ];
    for (name, pats, want) in classes {
        let check = (|| {
            let pats: Vec<PatternSpec> =
                pats.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
            for (i, &w) in want.iter().enumerate() {
                let got = count_class(2, i + 1, &pats, u64::MAX)?;
                if got != w {
                    return fail(format!("n={}: {got} vs {w}", i + 1));
                }
            }
            Ok("n=1..7".into())
        })();
        out.push((name, check));
    }
    out
}

fn bijections(zero_based: bool) -> Vec<(&'static str, Check)> {
    let paths = (|| {
        let mut total = 0;
        for d in 1..=3 {
            for n in 0..=6 {
                for t in enumerate_colored_trees(d, n, |_| true)? {
                    let p = tree_to_path(&t, d)?;
                    if path_to_tree(&p, d)? != t {
                        return fail(format!("d={d}: {}", tree_json(&t, zero_based)));
                    }
                    total += 1;
                }
            }
        }
        Ok(format!("{total} trees, d<=3, n<=6"))
    })();
    let perms = (|| {
        let mut total = 0;
        for (d, colors, max_n) in [(2usize, 2u32, 6usize), (3, 4, 4)] {
            for n in 0..=max_n {
                let mut images = Vec::new();
                for t in enumerate_colored_trees(colors, n, |_| true)? {
                    let p = tree_to_dperm(&t, d)?;
                    if !is_separable(&p) || dperm_to_tree(&p)? != t {
                        return fail(tree_json(&t, zero_based));
                    }
                    images.push(p);
                    total += 1;
                }
                images.sort();
                images.dedup();
                let separable = enumerate_dperms(d, n + 1)?.filter(is_separable).count();
                if images.len() != separable {
                    return fail(format!(
                        "d={d} n={n}: {} images, {separable} separable",
                        images.len()
                    ));
                }
            }
        }
        Ok(format!("{total} trees"))
    })();
    vec![("tree <-> path", paths), ("tree <-> d-permutation", perms)]
}

fn characterization(inject_fault: bool) -> Vec<(&'static str, Check)> {
    let mut obstructions = ClassicalPattern::separability_obstructions().to_vec();
    if inject_fault {
        obstructions[2] = obstructions[2].without_form(0);
    }
    let obstructions: Vec<PatternSpec> = obstructions.into_iter().map(Into::into).collect();
    let check = (|| {
        let mut total = 0;
        for d in 2..=3 {
            for n in 1..=5 {
                for p in enumerate_dperms(d, n)? {
                    let mut avoiding = true;
                    for q in &obstructions {
                        avoiding &= avoids(&p, q)?;
                    }
                    if is_separable(&p) != avoiding {
                        return fail(format!(
                            "{} is {}separable but {} the obstructions",
                            dperm_json(&p),
                            if is_separable(&p) { "" } else { "not " },
                            if avoiding { "avoids" } else { "contains" }
                        ));
                    }
                    total += 1;
                }
            }
        }
        Ok(format!("{total} d-permutations, d<=3, n<=5"))
    })();
    vec![("separable iff avoiding pi1, pi2, pi3", check)]
}

fn formulas() -> Vec<(&'static str, Check)> {
    let boundary = (|| {
        let series = counts(boundary_gf(2, 60))?;
        for (n, v) in series.iter().enumerate() {
            if boundary_square_explicit(n) != *v {
                return fail(format!("n={n}"));
            }
        }
        Ok("n<=60".into())
    })();
    let alternating = (|| {
        for d in 2..=4 {
            for m in 2..=5 {
                let series = counts(alternating_gf(d, m, 12))?;
                for (n, v) in series.iter().enumerate().skip(1) {
                    if alternating_explicit(d, m, n)? != *v {
                        return fail(format!("d={d} m={m} n={n}"));
                    }
                }
            }
        }
        Ok("d<=4, m<=5, n<=12".into())
    })();
    let two_alternating = (|| {
        for d in 2..=5u32 {
            let series = counts(alternating_gf(d, 2, 15))?;
            for n in 1..=15usize {
                let want = BigUint::from(d)
                    * BigUint::from(d - 1).pow(n as u32 - 1)
                    * catalan(n as u64).to_biguint().expect("positive");
                if series[n] != want {
                    return fail(format!("d={d} n={n}"));
                }
            }
        }
        Ok("d<=5, n<=15".into())
    })();
    let window = (|| {
        for d in 2..=4 {
            let series = counts(window_avoiding_gf(d, 12))?;
            for (n, v) in series.iter().enumerate().skip(1) {
                if window_avoiding_explicit(d, n)? != *v {
                    return fail(format!("d={d} n={n}"));
                }
            }
        }
        Ok("d<=4, n<=12".into())
    })();
    let guillotine = (|| {
        for q in 1..=8u64 {
            let series = counts(guillotine_gf(q, 12))?;
            for (n, v) in series.iter().enumerate() {
                if count_guillotine_recursive(q, n)? != *v || guillotine_explicit(q, n)? != *v {
                    return fail(format!("q={q} n={n}"));
                }
            }
        }
        for d in 2..=4u32 {
            let series = counts(guillotine_gf(1 << (d - 1), 11))?;
            for n in 1..=12 {
                if count_separable_explicit(d, n)? != series[n - 1] {
                    return fail(format!("separable d={d} n={n}"));
                }
            }
        }
        Ok("q<=8, n<=12".into())
    })();
    vec![
        ("boundary closed form d=2", boundary),
        ("alternating sum vs series", alternating),
        ("2-alternating closed form", two_alternating),
        ("window sum vs series", window),
        ("guillotine and separable counts", guillotine),
    ]
}

/// Runs `suite`, printing one line per check. Fails on the first failing
/// check with its counterexample.
pub fn run(suite: Suite, inject_fault: bool, zero_based: bool) -> Result<(), Failure> {
    let checks = match suite {
        Suite::Table1 => vec![("boundary table d=2..5, n=0..15", table1())],
        Suite::Sequences => sequences(),
        Suite::Bijections => bijections(zero_based),
        Suite::Characterization => characterization(inject_fault),
        Suite::Formulas => formulas(),
    };
    for (name, check) in checks {
        match check {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(Counterexample(witness)) => {
                println!("FAIL {name}");
                println!("{witness}");
                return Err(Failure::Verify(format!("{name} failed")));
            }
        }
    }
    Ok(())
}
