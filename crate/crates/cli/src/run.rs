//! Command dispatch.

use num_integer::Integer;
use thl_core::algebra::{crossed_product, validate_action, validate_algebra, AlgebraMap};
use thl_core::crossed::{
    coinvariant_complex, coinvariant_dims, connes_lambda_complex, conjugacy_decomposition, hcG_bicomplex,
    proposition_dims, theorem_map_f, u_complex_equivalence, verify_identities, verify_pair_identities,
    IdentityCheck,
};
use thl_core::sequences::{derham_homology, g_hochschild, karoubi_sequence, sbi_sequence, ExactnessReport};
use thl_core::twisted::{twisted_cyclic_dims, twisted_hochschild};

use crate::config::JobConfig;
use crate::error::CliError;
use crate::report::{Report, Verdict};

pub const COMMANDS: [&str; 13] = [
    "validate",
    "hc-twisted",
    "hc-crossed",
    "hc-coinv",
    "hc-lambda",
    "hh-G",
    "hdr-G",
    "verify-identities",
    "verify-theorem",
    "verify-lemma",
    "verify-sbi",
    "verify-karoubi",
    "all",
];

pub fn run(command: &str, job: &JobConfig) -> Result<Report, CliError> {
    let mut report = Report::new(&job.name, command, job.max_degree);
    match command {
        "all" => {
            for c in &COMMANDS[..COMMANDS.len() - 1] {
                report.extend(run_one(c, job)?);
            }
        }
        c if COMMANDS.contains(&c) => report.extend(run_one(c, job)?),
        other => return Err(CliError::UnknownCommand(other.to_string())),
    }
    Ok(report)
}

fn run_one(command: &str, job: &JobConfig) -> Result<Report, CliError> {
    let mut r = Report::new(&job.name, command, job.max_degree);
    match command {
        "validate" => validate(job, &mut r)?,
        "hc-twisted" => hc_twisted(job, &mut r)?,
        "hc-crossed" => hc_crossed(job, &mut r)?,
        "hc-coinv" => hc_coinv(job, &mut r)?,
        "hc-lambda" => hc_lambda(job, &mut r)?,
        "hh-G" => r.dims("HH^G", &g_hochschild(&job.algebra, &job.group, job.max_degree)?.dims),
        "hdr-G" => r.dims("HDR^G", &derham_homology(&job.algebra, &job.group, job.max_degree)?.dims),
        "verify-identities" => identities(job, &mut r)?,
        "verify-theorem" => theorem(job, &mut r)?,
        "verify-lemma" => lemma(job, &mut r)?,
        "verify-sbi" => sbi(job, &mut r)?,
        "verify-karoubi" => karoubi(job, &mut r)?,
        other => return Err(CliError::UnknownCommand(other.to_string())),
    }
    Ok(r)
}

fn twist(job: &JobConfig, command: &str) -> Result<usize, CliError> {
    job.twist_index()?
        .ok_or_else(|| CliError::Usage(format!("{command} needs a twist element (--twist or task.twist)")))
}

fn name(job: &JobConfig, x: usize) -> &str {
    &job.group.element_names()[x]
}

fn validate(job: &JobConfig, r: &mut Report) -> Result<(), CliError> {
    r.check("algebra", None, "associativity and unit".into(), Verdict::of(validate_algebra(&job.algebra).is_ok()));
    r.check(
        "group",
        None,
        "action by unital algebra automorphisms".into(),
        Verdict::of(validate_action(&job.algebra, &job.group).is_ok()),
    );
    r.check(
        "algebra",
        None,
        "unit is basis vector 0".into(),
        Verdict::of(job.algebra.unit_is_first_basis_vector()),
    );
    if let Some(x) = job.twist_index()? {
        r.check("group", None, format!("twist element {} exists", name(job, x)), Verdict::Pass);
    }
    Ok(())
}

fn hc_twisted(job: &JobConfig, r: &mut Report) -> Result<(), CliError> {
    let x = twist(job, "hc-twisted")?;
    let g = job.group.action(x);
    let n = job.max_degree;
    r.dims(&format!("HH^{}", name(job, x)), &twisted_hochschild(&job.algebra, g, n)?.dims);
    r.dims(&format!("HC^{}", name(job, x)), &twisted_cyclic_dims(&job.algebra, g, n)?);
    Ok(())
}

fn hc_crossed(job: &JobConfig, r: &mut Report) -> Result<(), CliError> {
    let n = job.max_degree;
    let prop = proposition_dims(&job.algebra, &job.group, n)?;
    let ap = crossed_product(&job.algebra, &job.group)?;
    let oracle = twisted_cyclic_dims(&ap, &AlgebraMap::identity(ap.dim()), n)?;
    r.dims("HC(A⋊G) bigraded", &prop);
    r.dims("HC(A⋊G) crossed product", &oracle);
    for k in 0..=n {
        r.check(
            "HC(A⋊G)",
            Some(k),
            format!("bigraded = crossed product ({} vs {})", prop[k], oracle[k]),
            Verdict::of(prop[k] == oracle[k]),
        );
    }
    Ok(())
}

fn hc_coinv(job: &JobConfig, r: &mut Report) -> Result<(), CliError> {
    let n = job.max_degree;
    let coinv = coinvariant_dims(&job.algebra, &job.group, n)?;
    r.dims("HC^G row", &hcG_bicomplex(&job.algebra, &job.group, n)?.dims);
    r.dims("HC(A⋊G) coinvariant", &coinv);
    let stalks = conjugacy_decomposition(&job.algebra, &job.group, n)?;
    for s in &stalks {
        r.dims(&format!("stalk {}", name(job, s.representative)), &s.homology.dims);
    }
    for k in 0..=n {
        let sum: usize = stalks.iter().map(|s| s.homology.dims[k]).sum();
        r.check(
            "stalks",
            Some(k),
            format!("sum over {} classes = coinvariant ({} vs {})", stalks.len(), sum, coinv[k]),
            Verdict::of(sum == coinv[k]),
        );
    }
    Ok(())
}

fn hc_lambda(job: &JobConfig, r: &mut Report) -> Result<(), CliError> {
    let n = job.max_degree;
    let lam = connes_lambda_complex(&job.algebra, &job.group, n, job.lambda_coinvariants)?.dims;
    if job.lambda_coinvariants {
        r.dims("HC(A⋊G) λ", &lam);
        let coinv = coinvariant_dims(&job.algebra, &job.group, n)?;
        for k in 0..=n {
            r.check(
                "HC(A⋊G) λ",
                Some(k),
                format!("λ = coinvariant ({} vs {})", lam[k], coinv[k]),
                Verdict::of(lam[k] == coinv[k]),
            );
        }
    } else {
        r.dims("HC^G λ without coinvariants", &lam);
        r.note("λ-complex without the G-quotient computes the k[G]-row theory, not HC(A⋊G)");
    }
    Ok(())
}

fn identity_row(r: &mut Report, theory: &str, c: &IdentityCheck, verdict: Verdict) {
    let mut text = format!("{} ({},{})", c.name, c.p, c.q);
    if let Some(res) = &c.residual {
        text.push_str(&format!(": {} ↦ {} · {}", res.source, res.coefficient, res.target));
    }
    r.check(theory, Some(c.p + c.q), text, verdict);
}

fn identities(job: &JobConfig, r: &mut Report) -> Result<(), CliError> {
    let top = job.max_degree + 1;
    for c in verify_identities(&job.algebra, &job.group, top)? {
        identity_row(r, "identity", &c, Verdict::of(c.passed()));
    }
    // the combined operators are diagnostics only
    for c in verify_pair_identities(&job.algebra, &job.group, top)? {
        identity_row(r, "combined operators", &c, Verdict::Info);
    }
    r.note(format!("identities checked for p+q ≤ {top}; combined-operator rows are informational"));
    Ok(())
}

fn theorem(job: &JobConfig, r: &mut Report) -> Result<(), CliError> {
    let x = twist(job, "verify-theorem")?;
    let n = job.max_degree;
    let (a, g) = (&job.algebra, &job.group);
    let hcx = twisted_cyclic_dims(a, g.action(x), n)?;
    let total = coinvariant_dims(a, g, n)?;
    let xn = name(job, x).to_string();
    r.dims(&format!("HC^{xn}"), &hcx);
    r.dims("HC(A⋊G)", &total);
    let f = theorem_map_f(a, g, x, n)?;
    for d in &f.degrees {
        r.check(
            "theorem map",
            Some(d.degree),
            format!("injective (rank {} of {})", d.rank, d.source_dim),
            Verdict::of(d.injective),
        );
        r.check(
            "theorem map",
            Some(d.degree),
            format!("image is the stalk summand (rank {} onto {})", d.stalk_rank, d.stalk_dim),
            Verdict::of(d.summand),
        );
    }
    let order = g.element_order(x);
    if order == g.order() {
        for k in 0..=n {
            r.check(
                "theorem count",
                Some(k),
                format!("dim HC(A⋊G) = {order}·dim HC^{xn} ({} vs {})", total[k], order * hcx[k]),
                Verdict::of(total[k] == order * hcx[k]),
            );
        }
    } else {
        r.check("theorem count", None, format!("{xn} does not generate G"), Verdict::Skipped);
    }
    let mut powers = 0;
    let mut y = x;
    for k in 2..order {
        y = g.mul(y, x);
        if k.gcd(&order) != 1 {
            continue;
        }
        powers += 1;
        let hcy = twisted_cyclic_dims(a, g.action(y), n)?;
        let yn = name(job, y);
        r.dims(&format!("HC^{yn}"), &hcy);
        for m in 0..=n {
            r.check(
                "power comparison",
                Some(m),
                format!("HC^{yn} = HC^{xn} ({} vs {})", hcy[m], hcx[m]),
                Verdict::of(hcy[m] == hcx[m]),
            );
        }
    }
    if powers == 0 {
        r.check("power comparison", None, format!("no generator of ⟨{xn}⟩ besides {xn}"), Verdict::Skipped);
    }
    Ok(())
}

fn lemma(job: &JobConfig, r: &mut Report) -> Result<(), CliError> {
    let n = job.max_degree;
    let row = coinvariant_complex(&job.algebra, &job.group, n + 1)?;
    let rep = u_complex_equivalence(&row.mixed, n)?;
    r.dims("Tot(b,B)", &rep.bicomplex_dims);
    r.dims("b+uB", &rep.u_complex_dims);
    for k in 0..=n {
        r.check(
            "lemma",
            Some(k),
            format!("Tot = u-complex ({} vs {})", rep.bicomplex_dims[k], rep.u_complex_dims[k]),
            Verdict::of(rep.bicomplex_dims[k] == rep.u_complex_dims[k]),
        );
    }
    Ok(())
}

fn exactness_rows(r: &mut Report, theory: &str, rep: &ExactnessReport) {
    for node in &rep.nodes {
        let degree = node.label.split(['_', ' ']).nth(1).and_then(|s| s.parse().ok());
        r.check(
            theory,
            degree,
            format!(
                "exact at {} (image {}, kernel {}, composite {})",
                node.label,
                node.image_dim,
                node.kernel_dim,
                if node.composite_zero { "zero" } else { "nonzero" }
            ),
            Verdict::of(node.exact()),
        );
    }
    for note in &rep.notes {
        r.note(format!("{theory}: {note}"));
    }
}

fn sbi(job: &JobConfig, r: &mut Report) -> Result<(), CliError> {
    let s = sbi_sequence(&job.algebra, &job.group, job.max_degree)?;
    r.dims("HH^G", &s.hh_dims);
    r.dims("HC(A⋊G)", &s.hc_dims);
    exactness_rows(r, "SBI", &s.report);
    Ok(())
}

fn karoubi(job: &JobConfig, r: &mut Report) -> Result<(), CliError> {
    let n = job.max_degree;
    let k = karoubi_sequence(&job.algebra, &job.group, n)?;
    r.dims("HDR^G", &k.hdr_dims);
    r.dims("H̄C(A⋊G)", &k.hc_bar_dims);
    r.dims("H̄H^G", &k.hh_bar_dims);
    exactness_rows(r, "Karoubi", &k.report);
    Ok(())
}
