use liecoeff::poly::latex_var;

use crate::docs::{SymPowerDoc, VerifyDoc};

pub fn verify_plain(doc: &VerifyDoc) -> String {
    let mut out: Vec<String> = doc.checks.iter().map(|c| c.line()).collect();
    let failed = doc.checks.iter().filter(|c| !c.passed).count();
    out.push(format!("{} checks, {failed} failed", doc.checks.len()));
    out.join("\n")
}

pub fn sympow_plain(doc: &SymPowerDoc) -> String {
    let mut out = vec![format!("S^{}(C^{}) basis: {}", doc.d, doc.n, doc.basis.join(", "))];
    for e in &doc.elements {
        out.push(format!("[{}] =", e.name));
        let width = e.matrix.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &e.matrix {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            out.push(format!("  {}", cells.join(" ")));
        }
    }
    out.join("\n")
}

pub fn sympow_latex(doc: &SymPowerDoc) -> String {
    doc.elements
        .iter()
        .map(|e| {
            let rows: Vec<String> = e.matrix.iter().map(|r| r.join(" & ")).collect();
            format!("[{}] = \\begin{{pmatrix}} {} \\end{{pmatrix}}", latex_var(&e.name), rows.join(" \\\\ "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}
