use std::collections::BTreeSet;
use std::io::Write;

use macpoly::nonattacking::{enumerate_na, AugmentedFilling};
use macpoly::tableaux::{enumerate_fillings, enumerate_sorted, family_tree, perm_t, sort_filling, Filling};
use macpoly::{Composition, Partition, Permutation};
use serde_json::json;

use crate::{EnumerateArgs, Failure, FamilyArgs, FamilyFormat, Kind, Outcome, RecordFormat};

/// Entries used are exactly `1..=k` for some `k`.
fn is_packed(entries: impl Iterator<Item = u32>) -> bool {
    let used: BTreeSet<u32> = entries.collect();
    used.iter().copied().eq(1..=used.len() as u32)
}

fn filling_record(f: &Filling, with_perm_t: bool, format: RecordFormat) -> String {
    match (format, with_perm_t) {
        (RecordFormat::Json, false) => json!({"filling": f, "inv": f.inv(), "maj": f.maj()}).to_string(),
        (RecordFormat::Json, true) => {
            json!({"filling": f, "inv": f.inv(), "maj": f.maj(), "perm_t": perm_t(f)}).to_string()
        }
        (RecordFormat::Text, false) => format!("{f}  inv={} maj={}", f.inv(), f.maj()),
        (RecordFormat::Text, true) => format!("{f}  inv={} maj={} perm_t={}", f.inv(), f.maj(), perm_t(f)),
    }
}

fn na_record(f: &AugmentedFilling, format: RecordFormat) -> String {
    match format {
        RecordFormat::Json => json!({"filling": f, "coinv": f.coinv(), "maj": f.maj_na()}).to_string(),
        RecordFormat::Text => format!("{f}  coinv={} maj={}", f.coinv(), f.maj_na()),
    }
}

fn cap(size: usize, cap: usize) -> Outcome {
    if size > cap {
        return Err(Failure::Usage(format!(
            "diagram size {size} exceeds the enumeration cap {cap} (raise it with --brute-cap)"
        )));
    }
    Ok(())
}

pub fn enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Outcome {
    if args.basement.is_some() && args.kind != Kind::Nonattacking {
        return Err(Failure::Usage(
            "--basement applies to nonattacking fillings only".into(),
        ));
    }
    if args.ordered && args.kind != Kind::Nonattacking {
        return Err(Failure::Usage("--ordered applies to nonattacking fillings only".into()));
    }
    match args.kind {
        Kind::Fillings | Kind::Sorted => {
            let lam: Partition = args.shape.parse()?;
            cap(lam.size(), args.brute_cap)?;
            if args.kind == Kind::Fillings {
                for f in enumerate_fillings(&lam, args.nvars) {
                    if !args.packed || is_packed(f.columns().iter().flatten().copied()) {
                        writeln!(out, "{}", filling_record(&f, false, args.format))?;
                    }
                }
            } else {
                for s in enumerate_sorted(&lam, args.nvars) {
                    if !args.packed || is_packed(s.columns().iter().flatten().copied()) {
                        writeln!(out, "{}", filling_record(&s, true, args.format))?;
                    }
                }
            }
        }
        Kind::Nonattacking => {
            let shape: Composition = args.shape.parse()?;
            cap(shape.size(), args.brute_cap)?;
            let basement = args.basement.as_deref().map(str::parse::<Permutation>).transpose()?;
            if let Some(b) = &basement {
                if b.len() != shape.len() {
                    return Err(Failure::Usage("basement length differs from shape length".into()));
                }
                if b.len() > args.nvars {
                    return Err(Failure::Usage("basement entries exceed --nvars".into()));
                }
            }
            if args.ordered && !shape.is_weakly_increasing() {
                return Err(Failure::Usage("--ordered needs a weakly increasing shape".into()));
            }
            for f in enumerate_na(&shape, basement.as_ref(), args.nvars, args.ordered) {
                if !args.packed || is_packed(f.columns().iter().flatten().copied()) {
                    writeln!(out, "{}", na_record(&f, args.format))?;
                }
            }
        }
    }
    Ok(())
}

pub fn family(args: &FamilyArgs, out: &mut dyn Write) -> Outcome {
    let f: Filling = args.filling.parse()?;
    let root = sort_filling(&f);
    let tree = family_tree(&root);
    match args.format {
        FamilyFormat::Json => {
            let members: Vec<_> = tree
                .members
                .iter()
                .map(|m| json!({"filling": m, "inv": m.inv(), "maj": m.maj()}))
                .collect();
            let edges: Vec<_> = tree
                .edges
                .iter()
                .map(|e| json!({"from": e.from, "to": e.to, "col": e.col, "row": e.row}))
                .collect();
            let doc = json!({
                "root": root.filling(),
                "perm_t": perm_t(&root),
                "members": members,
                "edges": edges,
            });
            writeln!(out, "{doc}")?;
        }
        FamilyFormat::Dot => write!(out, "{}", tree.to_dot())?,
        FamilyFormat::Text => {
            writeln!(out, "root {}  perm_t={}", root.filling(), perm_t(&root))?;
            for m in &tree.members {
                writeln!(out, "{m}  inv={} maj={}", m.inv(), m.maj())?;
            }
        }
    }
    Ok(())
}
