use std::fs;
use std::io::Write;

use cayrec_core::joyal::{digraph_dot, doubly_rooted_dot, unisort_backward};
use cayrec_core::oracle::{count, count_table, indegrees, Budget, Class, Endofunction, TableKey};
use cayrec_core::psi::{cay_count, cay_derangements, end_count, psi_recursive, psi_table, RecurrentSpec};
use cayrec_core::species::{compose_uni_two, solve_two_sort_tree};
use cayrec_core::stats::{asymptotics_report, check_unisort_identity, format_reference};
use cayrec_core::stirling::shared_table;
use cayrec_core::verify::{formula_table, verify, VerifyRow};
use cayrec_core::{BigInt, CoeffSeq};

use crate::args::{CheckArgs, CountArgs, JoyalArgs, ReportArgs, Route, SeqArgs, SeqKind, TableArgs, TableKind, VerifyArgs};
use crate::output::{open, Sheet};
use crate::Failure;

/// Mismatching indices listed on failure.
const SHOWN_FAILURES: usize = 10;

fn budget(override_budget: bool) -> Budget {
    if override_budget {
        eprintln!("warning: enumeration budget overridden; large sizes may take a long time");
        Budget::unlimited()
    } else {
        Budget::default()
    }
}

fn sequence(values: impl IntoIterator<Item = BigInt>) -> Sheet {
    let mut sheet = Sheet::new(["n", "value"]);
    for (n, v) in values.into_iter().enumerate() {
        sheet.push(vec![n.to_string(), v.to_string()]);
    }
    sheet
}

fn by_class(kind: SeqKind, class: Class, nmax: usize) -> Result<CoeffSeq, Failure> {
    let table = formula_table(class, nmax)?;
    Ok(match (kind, class) {
        (SeqKind::End, c) if c != Class::Cayley => table.diag(),
        _ => table.hat(),
    })
}

pub fn seq(args: &SeqArgs) -> Result<(), Failure> {
    let n = args.nmax;
    let values: Vec<BigInt> = match (args.kind, &args.structure) {
        (SeqKind::Cayder, Some(_)) => return Err(Failure::Usage("--structure does not apply to cayder".into())),
        (SeqKind::Cayder, None) => {
            if args.class.is_some_and(|c| c != Class::Derangement) {
                return Err(Failure::Usage("cayder counts derangements only".into()));
            }
            (0..=n).map(cay_derangements).collect()
        }
        (kind, Some(label)) => {
            let spec = RecurrentSpec::new(label.clone(), n)?;
            let f = if kind == SeqKind::Cay { cay_count } else { end_count };
            (0..=n).map(|m| f(m, &spec)).collect::<Result<_, _>>()?
        }
        (kind, None) => by_class(kind, args.class.unwrap_or(Class::All), n)?.into_coeffs(),
    };
    sequence(values).emit(&args.out)?;
    Ok(())
}

pub fn table(args: &TableArgs) -> Result<(), Failure> {
    let n = args.nmax;
    let sheet = match args.kind {
        TableKind::Sdiff => {
            let r = args.r.ok_or_else(|| Failure::Usage("table sdiff needs --r".into()))?;
            let triangle = shared_table(n).triangle(r);
            let mut sheet = Sheet::new(std::iter::once("n".to_string()).chain((1..=n).map(|m| format!("m{m}"))));
            for (k, row) in triangle.iter().enumerate() {
                let mut cells = vec![(k + 1).to_string()];
                cells.extend(row.iter().map(ToString::to_string));
                cells.resize(n + 1, String::new());
                sheet.push(cells);
            }
            sheet
        }
        TableKind::Psi => {
            let spec = RecurrentSpec::new(args.structure.clone(), n)?;
            let t = match args.route {
                Route::Formula => psi_table(&spec, n)?,
                Route::Recursive => psi_recursive(&spec, n)?,
                Route::Composition => compose_uni_two(spec.coeffs(), &solve_two_sort_tree(n))?,
            };
            let mut sheet = Sheet::new(["i", "j", "value"]);
            for (i, j, v) in t.entries() {
                sheet.push(vec![i.to_string(), j.to_string(), v.to_string()]);
            }
            sheet
        }
    };
    sheet.emit(&args.out)?;
    Ok(())
}

pub fn count_cmd(args: &CountArgs) -> Result<(), Failure> {
    let budget = budget(args.override_budget);
    let pred = args.class.into();
    let sheet = match args.by {
        None => {
            let mut sheet = Sheet::new(["n", "count"]);
            sheet.push(vec![args.n.to_string(), count(args.n, args.model, &pred, &budget)?.to_string()]);
            sheet
        }
        Some(key) => {
            let table = count_table(args.n, args.model, &pred, key, &budget)?;
            let mut sheet = match key {
                TableKey::Ij => Sheet::new(["i", "j", "count"]),
                TableKey::Ijr => Sheet::new(["i", "j", "r", "count"]),
            };
            for (k, v) in table {
                let mut cells = vec![k.i.to_string(), k.j.to_string()];
                cells.extend(k.r.map(|r| r.to_string()));
                cells.push(v.to_string());
                sheet.push(cells);
            }
            sheet
        }
    };
    sheet.emit(&args.out)?;
    Ok(())
}

pub fn verify_cmd(args: &VerifyArgs) -> Result<(), Failure> {
    let budget = budget(args.override_budget);
    budget.check(args.nmax, args.model)?;
    let classes = match args.class {
        Some(c) => vec![c],
        None => vec![Class::All, Class::Tree, Class::Forest, Class::Connected, Class::Derangement],
    };
    let mut rows: Vec<VerifyRow> = Vec::new();
    for class in classes {
        rows.extend(verify(args.model, class, args.nmax, &budget)?);
    }
    let mut sheet = Sheet::new(["model", "class", "n", "i", "j", "formula", "oracle", "status"]);
    for row in &rows {
        sheet.push(vec![
            row.model.to_string(),
            row.class.to_string(),
            row.n.to_string(),
            row.i.to_string(),
            row.j.to_string(),
            row.formula.to_string(),
            row.oracle.to_string(),
            if row.matches() { "ok" } else { "MISMATCH" }.to_string(),
        ]);
    }
    sheet.emit(&args.out)?;
    let failed: Vec<&VerifyRow> = rows.iter().filter(|r| !r.matches()).collect();
    if failed.is_empty() {
        return Ok(());
    }
    let shown: Vec<String> =
        failed.iter().take(SHOWN_FAILURES).map(|r| format!("{} n={} i={} j={}", r.class, r.n, r.i, r.j)).collect();
    Err(Failure::Mismatch(format!("{} mismatches; first: {}", failed.len(), shown.join("; "))))
}

pub fn joyal(args: &JoyalArgs) -> Result<(), Failure> {
    let f: Endofunction = args.input.parse()?;
    if f.size() != args.n {
        return Err(Failure::Usage(format!("--input has {} images but --n is {}", f.size(), args.n)));
    }
    let tree = unisort_backward(&f)?;
    let filled: Vec<bool> = indegrees(f.values()).iter().map(|&d| d > 0).collect();
    let graph = digraph_dot(&f);
    let tree_dot = doubly_rooted_dot(&tree, &filled);
    match &args.out {
        Some(prefix) => {
            let name = |suffix: &str| {
                let mut p = prefix.clone().into_os_string();
                p.push(suffix);
                p
            };
            fs::write(name("-digraph.dot"), graph)?;
            fs::write(name("-tree.dot"), tree_dot)?;
        }
        None => {
            let mut out = open(None)?;
            out.write_all(graph.as_bytes())?;
            out.write_all(tree_dot.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

pub fn check(args: &CheckArgs) -> Result<(), Failure> {
    let mut sheet = Sheet::new(["structure", "identity", "r", "n", "left", "right", "status"]);
    let mut failures = Vec::new();
    for label in &args.structure {
        let spec = RecurrentSpec::new(label.clone(), args.nmax)?;
        let report = check_unisort_identity(&spec, args.nmax)?;
        for row in &report.rows {
            sheet.push(vec![
                report.structure.clone(),
                row.identity.to_string(),
                row.r.map(|r| r.to_string()).unwrap_or_default(),
                row.n.to_string(),
                row.left.to_string(),
                row.right.to_string(),
                if row.holds() { "pass" } else { "FAIL" }.to_string(),
            ]);
            if !row.holds() {
                failures.push(format!("{} {} r={:?} n={}", report.structure, row.identity, row.r, row.n));
            }
        }
    }
    sheet.emit(&args.out)?;
    if failures.is_empty() {
        Ok(())
    } else {
        let shown = failures.iter().take(SHOWN_FAILURES).cloned().collect::<Vec<_>>().join("; ");
        Err(Failure::Mismatch(format!("{} failing rows; first: {shown}", failures.len())))
    }
}

pub fn report(args: &ReportArgs) -> Result<(), Failure> {
    let mut sheet = Sheet::new(["series", "n", "numerator", "denominator", "ratio", "reference"]);
    for row in asymptotics_report(args.nmax)? {
        sheet.push(vec![
            row.series,
            row.n.to_string(),
            row.numerator.to_string(),
            row.denominator.to_string(),
            row.ratio,
            row.reference.map(format_reference).unwrap_or_default(),
        ]);
    }
    sheet.emit(&args.out)?;
    Ok(())
}
