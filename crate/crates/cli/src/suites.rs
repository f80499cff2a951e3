use std::collections::BTreeSet;
use std::io::Write;

use macpoly::nonattacking::{e_integral, j_compact, j_hhl, multiplicity_factor, p_poly, schur_oracle};
use macpoly::quasisymmetric::{demazure_t_atom, g_integral, hecke_t, qs_gamma, qsym_expand};
use macpoly::shapes::{strong_compositions, weak_compositions};
use macpoly::tableaux::{
    enumerate_fillings, enumerate_sorted, family, filling_count, flip, htilde_brute, htilde_compact,
    is_inversion_triple, pds, sort_filling, sorted_weight,
};
use macpoly::{MPoly, Partition, Permutation};

use crate::{Failure, Outcome, Suite, ValidateArgs};

type Check = Result<(), String>;
type Property = (&'static str, fn(usize) -> Check);

/// Variables used by suites that do not tie `n` to the size.
const SMALL_N: usize = 3;
/// Largest `--max` accepted by suites that brute-force fillings.
const BRUTE_MAX: usize = 6;

fn partitions_up_to(max: usize) -> impl Iterator<Item = Partition> {
    (1..=max).flat_map(Partition::all)
}

fn htilde_routes(max: usize) -> Check {
    for lam in partitions_up_to(max) {
        let m = lam.size();
        if htilde_compact(&lam, m) != htilde_brute(&lam, m) {
            return Err(format!("lambda={lam} n={m}"));
        }
    }
    Ok(())
}

fn j_routes(max: usize) -> Check {
    for mu in partitions_up_to(max) {
        let m = mu.size();
        let jc = j_compact(&mu, m).map_err(|e| e.to_string())?;
        if jc != j_hhl(&mu, m) {
            return Err(format!("mu={mu} n={m}"));
        }
    }
    Ok(())
}

fn operator_lemmas(max: usize) -> Check {
    for lam in partitions_up_to(max) {
        for n in 1..=SMALL_N {
            for f in enumerate_fillings(&lam, n) {
                for i in 1..lam.len() {
                    if f.height(i) != f.height(i + 1) || f.column(i) == f.column(i + 1) {
                        continue;
                    }
                    let (g, r) = flip(&f, i).map_err(|e| e.to_string())?;
                    if flip(&g, i).map_err(|e| e.to_string())?.0 != f {
                        return Err(format!("T_{i} is not an involution on {f}"));
                    }
                    if g.maj() != f.maj() {
                        return Err(format!("T_{i} changes maj on {f}"));
                    }
                    let (a, b) = (f.column(i + 1)[r - 1], f.column(i)[r - 1]);
                    let ccw = if r == 1 {
                        b > a
                    } else {
                        is_inversion_triple(a, b, f.column(i)[r - 2])
                    };
                    let step = g.inv() as i64 - f.inv() as i64;
                    if step != if ccw { -1 } else { 1 } {
                        return Err(format!("T_{i} changes inv by {step} on {f}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn family_partition(max: usize) -> Check {
    for lam in partitions_up_to(max) {
        for n in 1..=SMALL_N {
            let mut seen = BTreeSet::new();
            for s in enumerate_sorted(&lam, n) {
                let members = family(&s);
                let mut genfun = MPoly::zero(0);
                for m in &members {
                    genfun += &MPoly::q_t_monomial(0, m.maj() as u32, m.inv() as u32);
                    if !seen.insert(m.clone()) {
                        return Err(format!("{m} lies in two families"));
                    }
                }
                if genfun != sorted_weight(&s) {
                    return Err(format!("generating function of the family of {}", s.filling()));
                }
            }
            if Some(seen.len() as u64) != filling_count(&lam, n) {
                return Err(format!("families of lambda={lam} n={n} miss fillings"));
            }
        }
    }
    Ok(())
}

fn pds_words(max: usize) -> Check {
    let n = max.clamp(1, 6);
    let all: BTreeSet<Vec<usize>> = Permutation::all(n).iter().map(pds).collect();
    for v in Permutation::all(n) {
        let word = pds(&v);
        if word.len() != v.length() || Permutation::from_word(n, &word) != v {
            return Err(format!("PDS of {v} is {word:?}"));
        }
        if (0..word.len()).any(|h| !all.contains(&word[h..])) {
            return Err(format!("a truncation of {word:?} is not a PDS"));
        }
    }
    Ok(())
}

fn reverse(max: usize) -> Check {
    for lam in partitions_up_to(max) {
        for s in enumerate_sorted(&lam, SMALL_N) {
            for m in family(&s) {
                if sort_filling(&m) != s {
                    return Err(format!("{m} does not sort to {}", s.filling()));
                }
            }
        }
    }
    Ok(())
}

fn p_specializations(max: usize) -> Check {
    for lam in partitions_up_to(max) {
        let m = lam.size();
        let p = p_poly(&lam, m).map_err(|e| e.to_string())?;
        if !p.numerator().is_symmetric() {
            return Err(format!("numerator of P_{lam} is not symmetric"));
        }
        if p.numerator().at_qt(Some(0), Some(0)) != schur_oracle(&lam, m) {
            return Err(format!("J_{lam}(X;0,0) differs from s_{lam}"));
        }
    }
    Ok(())
}

fn qsym(max: usize) -> Check {
    for m in 1..=max {
        for gamma in strong_compositions(m) {
            for n in gamma.len()..=max {
                let g = g_integral(&gamma, n).map_err(|e| e.to_string())?;
                qsym_expand(&g).map_err(|e| format!("G_{gamma} n={n}: {e}"))?;
                if g.at_qt(Some(0), Some(0)) != qs_gamma(&gamma, n).map_err(|e| e.to_string())? {
                    return Err(format!("G_{gamma}(X;0,0) differs from QS_{gamma}, n={n}"));
                }
            }
        }
        for lam in Partition::all(m) {
            let (mut g_sum, mut qs_sum) = (MPoly::zero(m), MPoly::zero(m));
            for gamma in strong_compositions(m)
                .into_iter()
                .filter(|g| g.dec().parts() == lam.parts())
            {
                g_sum += &g_integral(&gamma, m).map_err(|e| e.to_string())?;
                qs_sum += &qs_gamma(&gamma, m).map_err(|e| e.to_string())?;
            }
            if g_sum != j_compact(&lam, m).map_err(|e| e.to_string())? {
                return Err(format!("G sum differs from J_{lam}"));
            }
            if qs_sum != schur_oracle(&lam, m) {
                return Err(format!("QS sum differs from s_{lam}"));
            }
        }
    }
    Ok(())
}

fn tatom(max: usize) -> Check {
    let n = SMALL_N;
    for m in 0..=max {
        for alpha in weak_compositions(m, n) {
            let e = e_integral(&alpha, n).map_err(|e| e.to_string())?;
            let atom = demazure_t_atom(&alpha, n).map_err(|e| e.to_string())?;
            let scale = multiplicity_factor(alpha.parts())
                .with_nvars(n)
                .map_err(|e| e.to_string())?;
            if atom * scale != e.at_qt(Some(0), None) {
                return Err(format!("t-atom relation fails for {alpha}"));
            }
        }
    }
    Ok(())
}

fn hecke(max: usize) -> Check {
    let n = SMALL_N;
    for m in 0..=max {
        for alpha in weak_compositions(m, n) {
            let e = e_integral(&alpha, n).map_err(|e| e.to_string())?;
            for i in 1..n {
                if alpha.parts()[i - 1] > alpha.parts()[i] {
                    let lhs = hecke_t(&e, i).map_err(|e| e.to_string())?;
                    if lhs != e_integral(&alpha.swap(i), n).map_err(|e| e.to_string())? {
                        return Err(format!("T_{i} on alpha={alpha}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn properties(suite: Suite) -> Vec<Property> {
    match suite {
        Suite::CompactVsBrute => vec![
            ("htilde compact = brute", htilde_routes),
            ("J compact = J hhl", j_routes),
        ],
        Suite::OperatorLemmas => vec![("flip involution, maj, inv step", operator_lemmas)],
        Suite::FamilyPartition => vec![("families partition fillings", family_partition)],
        Suite::Pds => vec![("PDS reduced and truncation-closed", pds_words)],
        Suite::Reverse => vec![("sort_filling inverts family membership", reverse)],
        Suite::JForms => vec![("J compact = J hhl", j_routes)],
        Suite::PSpecializations => vec![("P symmetric, J(X;0,0) = Schur", p_specializations)],
        Suite::Qsym => vec![("G quasisymmetric, sums and QS", qsym)],
        Suite::Tatom => vec![("t-atom relation", tatom)],
        Suite::Hecke => vec![("Hecke recurrence", hecke)],
        Suite::All => [
            Suite::CompactVsBrute,
            Suite::OperatorLemmas,
            Suite::FamilyPartition,
            Suite::Pds,
            Suite::Reverse,
            Suite::PSpecializations,
            Suite::Qsym,
            Suite::Tatom,
            Suite::Hecke,
        ]
        .into_iter()
        .flat_map(properties)
        .collect(),
    }
}

pub fn run(args: &ValidateArgs, out: &mut dyn Write) -> Outcome {
    if args.max == 0 || args.max > BRUTE_MAX {
        return Err(Failure::Usage(format!("--max must lie in 1..={BRUTE_MAX}")));
    }
    let props = properties(args.suite);
    let mut failed = 0;
    for (name, check) in &props {
        match check(args.max) {
            Ok(()) => writeln!(out, "PASS  {name}")?,
            Err(witness) => {
                failed += 1;
                writeln!(out, "FAIL  {name}: {witness}")?;
            }
        }
    }
    writeln!(out, "{}/{} properties passed", props.len() - failed, props.len())?;
    if failed > 0 {
        return Err(Failure::Mismatch(format!("{failed} properties failed")));
    }
    Ok(())
}
