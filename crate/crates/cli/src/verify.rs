//! One-shot verification suites behind `zigzag verify`: each suite replays a
//! family of identities at desk scale and reports pass/fail with timing.

use std::process::ExitCode;
use std::time::Instant;

use clap::ValueEnum;

use zigzag::counting::{build_table, count_avoiders, wilf_class_letter, wilf_partition, Parity};
use zigzag::formulas::{
    a_even, a_odd, b_even, b_odd, catalan, gf_coefficients, m_count, n123_even,
    n123_even_narayana_sum, narayana, predicted_count, stirling2, ExactInt, GfFamily,
};
use zigzag::patterns::all_patterns;
use zigzag::structure::{class_to_dyck, dyck_to_class, enumerate_classes};
use zigzag::words::{enumerate_alternating, Orientation};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Wilf,
    Bijection,
    Formulas,
    All,
}

type SuiteFn = fn() -> Result<(), String>;

pub fn run(suite: Suite) -> ExitCode {
    let selected: Vec<(&str, SuiteFn)> = match suite {
        Suite::Tables => vec![("tables", tables as SuiteFn)],
        Suite::Wilf => vec![("wilf", wilf)],
        Suite::Bijection => vec![("bijection", bijection)],
        Suite::Formulas => vec![("formulas", formulas)],
        Suite::All => vec![
            ("tables", tables as SuiteFn),
            ("wilf", wilf),
            ("bijection", bijection),
            ("formulas", formulas),
        ],
    };
    let mut all_ok = true;
    for (name, runner) in selected {
        let started = Instant::now();
        match runner() {
            Ok(()) => println!("suite {name}: PASS [{:.2?}]", started.elapsed()),
            Err(msg) => {
                println!("suite {name}: FAIL [{:.2?}]", started.elapsed());
                println!("  {msg}");
                all_ok = false;
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Reference avoider counts for the consecutive patterns 132 and 312,
/// k = 2..=5 by rows, n = 0..=9 by columns.
const TABLE_132: [[u128; 10]; 4] = [
    [1, 2, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 3, 3, 4, 7, 8, 15, 16, 31, 32],
    [1, 4, 6, 10, 25, 33, 90, 106, 301, 333],
    [1, 5, 10, 20, 65, 98, 350, 456, 1701, 2034],
];

const TABLE_312: [[u128; 10]; 4] = [
    [1, 2, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 3, 3, 5, 6, 11, 12, 23, 24, 47],
    [1, 4, 6, 14, 20, 53, 65, 182, 206, 593],
    [1, 5, 10, 30, 50, 173, 238, 874, 1080, 4089],
];

fn tables() -> Result<(), String> {
    for (name, expected) in [("132", &TABLE_132), ("312", &TABLE_312)] {
        let table = build_table(&name.parse().unwrap(), Orientation::UpDown, 5, 9);
        for k in 2..=5u8 {
            let row: Vec<u128> = (0..=9).map(|n| table.get(k, n).unwrap()).collect();
            check(row == expected[k as usize - 2], || {
                format!("table {name} row k={k} disagrees with the reference values")
            })?;
        }
    }
    Ok(())
}

fn wilf() -> Result<(), String> {
    let patterns = all_patterns();
    for (parity, n_max) in [(Parity::Even, 8usize), (Parity::Odd, 9usize)] {
        let partition = wilf_partition(&patterns, Orientation::UpDown, 5, n_max, parity);
        // same letter never splits, distinct letters never merge
        for (idx, block) in partition.iter().enumerate() {
            let letters: Vec<char> = block
                .iter()
                .filter_map(|p| wilf_class_letter(p, parity))
                .collect();
            if let Some(&first) = letters.first() {
                check(letters.iter().all(|&l| l == first), || {
                    format!("{parity:?}: block {idx} mixes class letters")
                })?;
            }
            for other in partition.iter().skip(idx + 1) {
                let other_letters: Vec<char> = other
                    .iter()
                    .filter_map(|p| wilf_class_letter(p, parity))
                    .collect();
                if let (Some(a), Some(b)) = (letters.first(), other_letters.first()) {
                    check(a != b, || {
                        format!("{parity:?}: class {a} split across blocks")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn bijection() -> Result<(), String> {
    for k in 2..=8u8 {
        let classes = enumerate_classes(k);
        check(
            ExactInt::from(classes.len()) == catalan(k as u64 - 2),
            || format!("class count at k={k} is not Catalan"),
        )?;
        for f in &classes {
            let path = class_to_dyck(f);
            check(path.semi_length() == k as usize - 2, || {
                format!("path semi-length wrong for {f} at k={k}")
            })?;
            check(path.valleys() == f.pair_count(), || {
                format!("valleys do not track cut-pairs for {f} at k={k}")
            })?;
            let back = dyck_to_class(&path, k).map_err(|e| e.to_string())?;
            check(&back == f, || format!("round trip failed for {f} at k={k}"))?;
        }
        for j in 0..=k as i64 {
            let census = classes
                .iter()
                .filter(|f| f.pair_count() == j as usize)
                .count();
            check(ExactInt::from(census) == narayana(k as i64 - 2, j), || {
                format!("j-pair census at k={k} j={j} is not Narayana")
            })?;
        }
    }
    Ok(())
}

fn formulas() -> Result<(), String> {
    // closed forms and sum identities against brute force
    for k in 2..=6u8 {
        for i in 1..=5u64 {
            let brute = ExactInt::from(count_avoiders(
                k,
                2 * i as usize,
                &"1-2-3".parse().unwrap(),
                Orientation::UpDown,
            ));
            check(brute == n123_even(k, i), || {
                format!("Narayana closed form at k={k} i={i}")
            })?;
            check(brute == n123_even_narayana_sum(k, i), || {
                format!("Narayana class sum at k={k} i={i}")
            })?;
        }
        for i in 0..=5usize {
            let brute = ExactInt::from(count_avoiders(
                k,
                2 * i,
                &"132".parse().unwrap(),
                Orientation::UpDown,
            ));
            check(
                brute == stirling2(k as u64 + i as u64 - 1, k as u64 - 1),
                || format!("Stirling identity at k={k} i={i}"),
            )?;
        }
    }
    // master dispatch against brute force, every pattern
    for p in all_patterns() {
        for k in 2..=5u8 {
            for n in 0..=9usize {
                let predicted = predicted_count(&p, k, n).value;
                let brute = ExactInt::from(count_avoiders(k, n, &p, Orientation::UpDown));
                check(predicted == brute, || {
                    format!("prediction for {p} at k={k} n={n}: {predicted} vs brute {brute}")
                })?;
            }
        }
    }
    // generating functions against the recurrences
    for k in 2..=6u8 {
        let s132 = gf_coefficients(GfFamily::Avoid132, k, 12);
        let s312 = gf_coefficients(GfFamily::Avoid312, k, 12);
        for n in 0..=12usize {
            let i = n / 2;
            let (want_132, want_312) = if n % 2 == 0 {
                (a_even(k, i), b_even(k, i))
            } else {
                let odd_312 = if i == 0 {
                    ExactInt::from(k)
                } else {
                    b_odd(k, i)
                };
                (a_odd(k, i), odd_312)
            };
            check(s132.coefficient(n) == &want_132, || {
                format!("gf 132 at k={k} n={n}")
            })?;
            check(s312.coefficient(n) == &want_312, || {
                format!("gf 312 at k={k} n={n}")
            })?;
        }
    }
    // total-count recurrence against enumeration
    for k in 2..=5u8 {
        for l in 0..=10usize {
            let total = enumerate_alternating(k, l, Orientation::UpDown).count();
            check(m_count(k, l) == ExactInt::from(total), || {
                format!("total-count recurrence at k={k} l={l}")
            })?;
        }
    }
    Ok(())
}
