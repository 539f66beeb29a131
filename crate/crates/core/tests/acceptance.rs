//! Acceptance criteria, one PASS/FAIL line each.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use greenstone::enumerate::semigroups_up_to;
use greenstone::verify::{run_suite, Status, VerificationReport, VerifyConfig};
use greenstone::{FiniteSemigroup, GreenStructure, Preorder, Relation};

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Result<String, String>,
}

fn main() {
    let criteria = [
        Criterion {
            name: "1 green engine soundness, order <= 3",
            limit: secs(5),
            run: green_engine,
        },
        Criterion {
            name: "2 eight stability forms and characterisation",
            limit: secs(60),
            run: stability_forms,
        },
        Criterion {
            name: "3 finite biacts are stable with all minimal conditions",
            limit: secs(60),
            run: finite_stable,
        },
        Criterion {
            name: "4 U(S,T;A) deciders against brute force",
            limit: secs(30),
            run: usta,
        },
        Criterion {
            name: "5 U(S;A) deciders against brute force",
            limit: secs(30),
            run: usa,
        },
        Criterion {
            name: "6 bicyclic witness suite",
            limit: secs(10),
            run: bicyclic,
        },
        Criterion {
            name: "7 integers over the naturals",
            limit: secs(5),
            run: integers,
        },
        Criterion {
            name: "8 ideal without M_J",
            limit: secs(10),
            run: ideal_without_mj,
        },
        Criterion {
            name: "9 unstable extension",
            limit: secs(10),
            run: unstable_extension,
        },
        Criterion {
            name: "10 finite transfer claims",
            limit: secs(300),
            run: transfer,
        },
        Criterion {
            name: "11 byte-identical reports",
            limit: secs(120),
            run: determinism,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let wall = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if wall <= c.limit => (true, d),
            Ok(d) => (
                false,
                format!("{d}; over the {:.0}s limit", c.limit.as_secs_f64()),
            ),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} {:<56} {:>7.2}s  {detail}",
            if ok { "PASS" } else { "FAIL" },
            c.name,
            wall.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

fn secs(n: u64) -> Duration {
    Duration::from_secs(n)
}

fn config() -> VerifyConfig {
    VerifyConfig::default()
}

fn suite(ids: &str) -> Result<VerificationReport, String> {
    run_suite(ids, &config()).map_err(|e| e.to_string())
}

fn expect(report: &VerificationReport, id: &str, want: &[Status]) -> Result<u64, String> {
    let c = report
        .claim(id)
        .ok_or(format!("{id} missing from the report"))?;
    if !want.contains(&c.status) {
        return Err(format!(
            "{id}: {:?}, violations {:?}",
            c.status, c.violations
        ));
    }
    Ok(c.instances)
}

// Brute force: all tables on n elements, associativity, canonical form as
// the lexicographically least relabelled table.
fn brute_counts(max: usize) -> Vec<BTreeSet<Vec<usize>>> {
    let mut out = Vec::new();
    for n in 1..=max {
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        let cells = n * n;
        let mut t = vec![0usize; cells];
        loop {
            let assoc = (0..n).all(|a| {
                (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]]))
            });
            if assoc {
                let canon = perms
                    .iter()
                    .map(|p| {
                        let mut u = vec![0; cells];
                        for a in 0..n {
                            for b in 0..n {
                                u[p[a] * n + p[b]] = p[t[a * n + b]];
                            }
                        }
                        u
                    })
                    .min()
                    .unwrap();
                seen.insert(canon);
            }
            let mut i = 0;
            while i < cells && t[i] == n - 1 {
                t[i] = 0;
                i += 1;
            }
            if i == cells {
                break;
            }
            t[i] += 1;
        }
        out.push(seen);
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q: Vec<usize> = p.iter().map(|&x| if x >= i { x + 1 } else { x }).collect();
            q.push(i);
            out.push(q);
        }
    }
    out
}

/// `x <=_K y` from the principal one-sided and two-sided ideals.
fn oracle_le(s: &FiniteSemigroup, k: Preorder, x: usize, y: usize) -> bool {
    if x == y {
        return true;
    }
    let n = s.order();
    match k {
        Preorder::L => (0..n).any(|a| s.mul(a, y) == x),
        Preorder::R => (0..n).any(|a| s.mul(y, a) == x),
        Preorder::J => (0..n).any(|a| {
            s.mul(a, y) == x || s.mul(y, a) == x || (0..n).any(|b| s.mul(s.mul(a, y), b) == x)
        }),
    }
}

fn green_engine() -> Result<String, String> {
    let oracle = brute_counts(3);
    let counts: Vec<usize> = oracle.iter().map(BTreeSet::len).collect();
    if counts != [1, 5, 24] {
        return Err(format!("brute-force oracle counts {counts:?}"));
    }
    let all = semigroups_up_to(3).map_err(|e| e.to_string())?;
    if all.len() != 30 {
        return Err(format!("engine enumerates {} semigroups", all.len()));
    }
    let mut violations = 0;
    for s in &all {
        let n = s.order();
        if !oracle[n - 1].contains(&greenstone::iso::canonical_table(s)) {
            return Err(format!("{:?} is not among the oracle tables", s.table()));
        }
        let g = GreenStructure::of(s);
        violations += g.invariant_violations().len();
        let rel = |r: Relation, x, y| g.related(r, x, y);
        for x in 0..n {
            for y in 0..n {
                for k in Preorder::ALL {
                    violations += usize::from(g.le(k, x, y) != oracle_le(s, k, x, y));
                }
                let l = oracle_le(s, Preorder::L, x, y) && oracle_le(s, Preorder::L, y, x);
                let r = oracle_le(s, Preorder::R, x, y) && oracle_le(s, Preorder::R, y, x);
                let j = oracle_le(s, Preorder::J, x, y) && oracle_le(s, Preorder::J, y, x);
                violations += usize::from(rel(Relation::H, x, y) != (l && r));
                let lr = (0..n).any(|z| rel(Relation::L, x, z) && rel(Relation::R, z, y));
                let rl = (0..n).any(|z| rel(Relation::R, x, z) && rel(Relation::L, z, y));
                violations += usize::from(rel(Relation::D, x, y) != lr || lr != rl);
                violations += usize::from((l || r || rel(Relation::D, x, y)) && !j);
            }
        }
        for k in Preorder::ALL {
            let strict = |x: usize, y: usize| g.le(k, x, y) && !g.le(k, y, x);
            violations += (0..n).filter(|&x| strict(x, x)).count();
        }
    }
    if violations > 0 {
        return Err(format!("{violations} violations"));
    }
    Ok(format!(
        "{} semigroups (1 + 5 + 24 by brute force), 0 violations",
        all.len()
    ))
}

fn stability_forms() -> Result<String, String> {
    let r = suite("P3.5,P3.6")?;
    let a = expect(&r, "P3.5", &[Status::Pass])?;
    let b = expect(&r, "P3.6", &[Status::Pass])?;
    Ok(format!("{a} and {b} biacts, 0 disagreements"))
}

fn finite_stable() -> Result<String, String> {
    let r = suite("C3.8")?;
    let n = expect(&r, "C3.8", &[Status::Pass])?;
    let exhaustive = greenstone::enumerate::biacts_up_to(2, 3)
        .map_err(|e| e.to_string())?
        .len() as u64;
    if n != exhaustive + 1000 {
        return Err(format!("{n} biacts, expected {exhaustive} + 1000"));
    }
    Ok(format!(
        "{exhaustive} exhaustive + 1000 random biacts, 0 violations"
    ))
}

fn usta() -> Result<String, String> {
    let r = suite("Con4.17/P4.18")?;
    let n = expect(&r, "Con4.17/P4.18", &[Status::Pass])?;
    Ok(format!("{n} (S,T,A) triples"))
}

fn usa() -> Result<String, String> {
    let r = suite("Con5.10/P5.11")?;
    let n = expect(&r, "Con5.10/P5.11", &[Status::Pass])?;
    let c = r.claim("Con5.10/P5.11").unwrap();
    let note = c
        .notes
        .iter()
        .find(|n| n.contains("reading the comparison in S"))
        .ok_or("no resolution note")?;
    Ok(format!("{n} (S,A) pairs; {note}"))
}

fn witness_claim(id: &str) -> Result<String, String> {
    let r = suite(id)?;
    expect(&r, id, &[Status::WitnessVerified])?;
    let c = r.claim(id).unwrap();
    Ok(format!(
        "{} symbolic checks; {}",
        c.symbolic_checks,
        c.witnesses.join("; ")
    ))
}

fn bicyclic() -> Result<String, String> {
    witness_claim("R3.14(2)")
}

fn integers() -> Result<String, String> {
    witness_claim("Ex4.8")
}

fn ideal_without_mj() -> Result<String, String> {
    witness_claim("C4.19")
}

fn unstable_extension() -> Result<String, String> {
    witness_claim("C5.12")
}

const TRANSFER: [&str; 16] = [
    "P4.4", "P4.5", "P5.1", "P5.2", "T4.13", "T5.7", "L4.10", "L5.5", "C4.11", "C5.6", "P4.15",
    "P5.9", "T4.16", "L4.2", "C4.3", "P4.1",
];

fn transfer() -> Result<String, String> {
    let r = suite(&TRANSFER.join(","))?;
    let mut vacuous = 0;
    for id in TRANSFER {
        expect(&r, id, &[Status::Pass, Status::VacuousPass])?;
        let c = r.claim(id).unwrap();
        if c.vacuous != (c.status == Status::VacuousPass) && c.symbolic_checks == 0 {
            return Err(format!("{id}: vacuous flag and status disagree"));
        }
        vacuous += usize::from(c.status == Status::VacuousPass);
    }
    Ok(format!(
        "{} claims, {vacuous} labelled vacuous, 0 violations",
        TRANSFER.len()
    ))
}

fn determinism() -> Result<String, String> {
    let a = suite("all")?.to_json();
    let b = suite("all")?.to_json();
    if a != b {
        return Err("reports differ".into());
    }
    Ok(format!("{} bytes, identical", a.len()))
}
