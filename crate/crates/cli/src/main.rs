//! `ihrep`: intersection cohomology of SU(2) representation spaces from
//! the command line.

mod render;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ihrep::exact::{fmt_rational, rat};
use ihrep::groebner::{
    hilbert_numerator, hilbert_numerator_by_subsets, leading_term_ideal,
    BasisStore, GroebnerError, ReducedHilbertSeries, DEFAULT_IDEAL_INDEX_CAP,
};
use ihrep::ih::{
    default_order, e_basis, e_basis_independence, e_hilbert, equivariant_series_closed,
    equivariant_series_structural, ih_series_structural, ip_series_closed, pairing_matrix,
    top_degree, IhError, Route,
};
use ihrep::report::{check_top_identity, run_verification};
use ihrep::{Monomial3, TruncatedSeries};
use serde_json::json;

use render::{latex_monomial, latex_poly, latex_series, rational_json, rationals_json, Check, Output};

/// Directory for serialized Gröbner bases. Unset or empty disables the cache.
const CACHE_ENV: &str = "IHREP_GB_CACHE";

#[derive(Parser, Debug)]
#[command(name = "ihrep", version, about = "Intersection cohomology of SU(2) representation spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest ideal index I_k for which Gröbner bases are computed.
    #[arg(long, global = true, default_value_t = DEFAULT_IDEAL_INDEX_CAP)]
    unsafe_genus_cap: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Intersection Betti numbers.
    Betti {
        #[arg(long, value_parser = genus_parser())]
        genus: u32,
        #[arg(long, value_enum, default_value_t = RouteArg::Closed)]
        route: RouteArg,
    },
    /// Reduced Gröbner basis and Hilbert series of the relation ideal I_k.
    Ring {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 24)]
        order: usize,
    },
    /// Pairing values on monomials in alpha and beta.
    Pairing {
        #[arg(long, value_parser = genus_parser())]
        genus: u32,
    },
    /// Equivariant Poincaré series.
    EqSeries {
        #[arg(long, value_parser = genus_parser())]
        genus: u32,
        /// Truncation order; defaults to 6g + 24.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = RouteArg::Closed)]
        route: RouteArg,
    },
    /// The monomial set E_m and its independence modulo I_m.
    EBasis {
        #[arg(long)]
        k: u32,
    },
    /// Every cross-check for one genus.
    Verify {
        #[arg(long, value_parser = genus_parser())]
        genus: u32,
    },
}

fn genus_parser() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(2..)
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum RouteArg {
    Closed,
    Structural,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Closed => Route::Closed,
            RouteArg::Structural => Route::Structural,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Math(String),
}

impl From<IhError> for CliError {
    fn from(e: IhError) -> Self {
        match e {
            IhError::GenusTooSmall(_) | IhError::OutsidePairingRange { .. } => Self::Usage(e.to_string()),
            IhError::Groebner(g) => g.into(),
            other => Self::Math(other.to_string()),
        }
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::IndexAboveCap { .. } => {
                Self::Usage(format!("{e}; raise it with --unsafe-genus-cap"))
            }
            other => Self::Math(other.to_string()),
        }
    }
}

fn store(cap: u32) -> BasisStore {
    let store = BasisStore::new(cap);
    match std::env::var_os(CACHE_ENV) {
        Some(dir) if !dir.is_empty() => store.with_directory(dir),
        _ => store,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let store = store(cli.unsafe_genus_cap);
    let result = match cli.command {
        Command::Betti { genus, route } => betti(genus, route.into()),
        Command::Ring { k, order } => ring(k, order, &store),
        Command::Pairing { genus } => pairing(genus, &store),
        Command::EqSeries { genus, order, route } => eq_series(genus, order, route.into(), &store),
        Command::EBasis { k } => ebasis(k, &store),
        Command::Verify { genus } => verify(genus, &store),
    };
    match result {
        Ok(out) => {
            let rendered = match cli.format {
                Format::Text => out.to_text(),
                Format::Json => out.to_json(),
                Format::Latex => out.to_latex(),
            };
            print!("{rendered}");
            ExitCode::from(if out.failed() { 1 } else { 0 })
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn betti(g: u32, route: Route) -> Result<Output, CliError> {
    let table = match route {
        Route::Closed => ip_series_closed(g)?,
        Route::Structural => ih_series_structural(g)?,
    };
    let top = top_degree(g);
    let palindrome = Check::new(
        "palindrome",
        table.is_palindromic(),
        format!("symmetric about degree {}", top / 2),
    );
    let leading = Check::new(
        "leading-entry",
        table.coefficients.first() == Some(&1) && table.coefficients.last() == Some(&1),
        "degrees 0 and top are 1",
    );

    let mut text = format!("intersection Betti numbers, genus {g}, route {route}\n");
    for (d, b) in table.coefficients.iter().enumerate() {
        let _ = writeln!(text, "degree {d:>3}: {b}");
    }
    let _ = writeln!(text, "total dimension: {}", table.total_dimension());

    let coeffs = table.to_series().coeffs().to_vec();
    let latex = format!(
        "% intersection Betti numbers, genus {g}\n\\[ IP_t = {} \\]\n",
        latex_series(&coeffs, None)
    );

    Ok(Output {
        genus: Some(g),
        command: "betti",
        data: json!({
            "route": route.as_str(),
            "top_degree": top,
            "betti": table.coefficients,
            "total_dimension": table.total_dimension(),
        }),
        text,
        latex,
        checks: vec![palindrome, leading],
    })
}

fn ring(k: u32, order: usize, store: &BasisStore) -> Result<Output, CliError> {
    let gb = store.basis(k)?;
    let lt = leading_term_ideal(&gb);
    let reduced = ReducedHilbertSeries::from_ideal(&lt);
    let expansion = reduced.to_rational_function().expand(order);

    let mut checks = vec![
        Check::new("reduced", gb.is_reduced(), "monic, no term divisible by another leading monomial"),
        Check::new("s-pairs-reduce-to-zero", gb.s_pairs_reduce_to_zero(), "Buchberger criterion"),
    ];
    checks.push(match hilbert_numerator_by_subsets(&lt) {
        Ok(by_subsets) => Check::new(
            "hilbert-numerator-routes",
            by_subsets == hilbert_numerator(&lt),
            "colon recursion vs inclusion-exclusion",
        ),
        Err(e) => Check::skipped("hilbert-numerator-routes", e.to_string()),
    });
    let mismatch = (0..=order).find(|&d| {
        let count = lt.standard_monomials(d as u32).len();
        expansion.coeff(d) != rat(count as i64)
    });
    checks.push(Check::new(
        "hilbert-vs-standard-monomials",
        mismatch.is_none(),
        match mismatch {
            None => format!("degrees 0..={order} agree"),
            Some(d) => format!("first mismatch at t^{d}"),
        },
    ));

    let mut text = gb.to_canonical_text();
    let _ = writeln!(text, "hilbert {reduced}");
    let _ = writeln!(text, "expansion {expansion}");

    let mut latex = format!("% reduced Groebner basis of I_{k}\n\\begin{{align*}}\n");
    let lines: Vec<String> = gb.generators().iter().map(|p| format!("  & {}", latex_poly(p))).collect();
    latex.push_str(&lines.join(" \\\\\n"));
    latex.push_str("\n\\end{align*}\n");
    let _ = writeln!(latex, "\\[ H(t) = {} \\]", latex_series(expansion.coeffs(), Some(order + 1)));

    Ok(Output {
        genus: None,
        command: "ring",
        data: json!({
            "k": k,
            "order": gb.order().label(),
            "generators": gb.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "leading_monomials": gb.leading_monomials().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "hilbert_series": {
                "numerator": reduced.numerator.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "denominator_weights": reduced.denominator_weights,
                "text": reduced.to_string(),
            },
            "expansion": rationals_json(expansion.coeffs()),
        }),
        text,
        latex,
        checks,
    })
}

fn pairing(g: u32, store: &BasisStore) -> Result<Output, CliError> {
    let entries = pairing_matrix(g)?;
    let check = Check::from(check_top_identity(g, store));

    let ab = |(i, j): (u32, u32)| {
        let m = Monomial3::new(i, j, 0);
        (m.to_string(), latex_monomial(&m))
    };
    let mut text = format!("pairing on alpha^i*beta^j, genus {g}\n");
    let mut latex = format!(
        "% pairing, genus {g}\n\\begin{{tabular}}{{rrllr}}\n$m$ & $n$ & left & right & value \\\\\n\\hline\n"
    );
    let mut rows = Vec::new();
    for e in &entries {
        let (lt, ll) = ab(e.left);
        let (rt, rl) = ab(e.right);
        let _ = writeln!(text, "m={} n={}  <{lt}, {rt}> = {}", e.m, e.n, fmt_rational(&e.value));
        let value = fmt_rational(&e.value);
        let _ = writeln!(
            latex,
            "{} & {} & ${}$ & ${}$ & ${value}$ \\\\",
            e.m,
            e.n,
            if ll.is_empty() { "1".into() } else { ll },
            if rl.is_empty() { "1".into() } else { rl },
        );
        rows.push(json!({
            "left": [e.left.0, e.left.1],
            "right": [e.right.0, e.right.1],
            "m": e.m,
            "n": e.n,
            "value": rational_json(&e.value),
        }));
    }
    latex.push_str("\\end{tabular}\n");

    Ok(Output {
        genus: Some(g),
        command: "pairing",
        data: json!({ "entries": rows }),
        text,
        latex,
        checks: vec![check],
    })
}

fn eq_series(g: u32, order: Option<usize>, route: Route, store: &BasisStore) -> Result<Output, CliError> {
    let order = order.unwrap_or_else(|| default_order(g));
    if order < top_degree(g) {
        return Err(CliError::Usage(format!("--order must be at least 6g - 6 = {}", top_degree(g))));
    }
    let other = match route {
        Route::Closed => Route::Structural,
        Route::Structural => Route::Closed,
    };
    let compute = |r: Route| -> Result<TruncatedSeries, CliError> {
        Ok(match r {
            Route::Closed => equivariant_series_closed(g, order),
            Route::Structural => equivariant_series_structural(g, order, store)?,
        })
    };
    let series = compute(route)?;
    let check = if other == Route::Structural && g > store.cap() {
        Check::skipped("route-agreement", format!("genus {g} above Groebner cap {}", store.cap()))
    } else {
        let alt = compute(other)?;
        let mismatch = (0..=order).find(|&d| series.coeff(d) != alt.coeff(d));
        Check::new(
            "route-agreement",
            mismatch.is_none(),
            match mismatch {
                None => format!("{route} and {other} agree to t^{order}"),
                Some(d) => format!("first mismatch at t^{d}"),
            },
        )
    };

    let text = format!("equivariant Poincare series, genus {g}, route {route}\n{series}\n");
    let latex = format!(
        "% equivariant Poincare series, genus {g}\n\\[ P_t = {} \\]\n",
        latex_series(series.coeffs(), Some(order + 1))
    );

    Ok(Output {
        genus: Some(g),
        command: "eq-series",
        data: json!({
            "route": route.as_str(),
            "order": order,
            "coefficients": rationals_json(series.coeffs()),
        }),
        text,
        latex,
        checks: vec![check],
    })
}

fn ebasis(m: u32, store: &BasisStore) -> Result<Output, CliError> {
    let basis = e_basis(m);
    let hilbert = e_hilbert(m);
    let (check, verdict) = if m > store.cap() {
        (Check::skipped("e-basis-independence", format!("I_{m} above Groebner cap {}", store.cap())), None)
    } else {
        let v = e_basis_independence(m, store)?;
        let details = match &v.dependency {
            None => format!("rank {} of {}", v.rank, v.size),
            Some((d, _)) => format!("rank {} of {}; dependency in degree {d}", v.rank, v.size),
        };
        (Check::new("e-basis-independence", v.independent(), details), Some(v))
    };

    let mut text = format!("E_{m}: {} monomials in alpha, beta, xi = alpha*beta + 2*gamma\n", basis.len());
    for e in &basis {
        let _ = writeln!(text, "degree {:>3}: {e}", e.degree());
    }
    let _ = writeln!(text, "series {hilbert}");

    let names: Vec<String> = basis
        .iter()
        .map(|e| {
            let s = latex_monomial(&Monomial3::new(e.i, e.j, 0));
            let xi = match e.k {
                0 => String::new(),
                1 => "\\xi".to_string(),
                k => format!("\\xi^{{{k}}}"),
            };
            let s = s + &xi;
            if s.is_empty() { "1".to_string() } else { s }
        })
        .collect();
    let latex = format!(
        "% E_{m}\n\\[ E_{{{m}}} = \\{{ {} \\}} \\]\n\\[ {} \\]\n",
        names.join(", "),
        latex_series(hilbert.coeffs(), None)
    );

    Ok(Output {
        genus: None,
        command: "e-basis",
        data: json!({
            "m": m,
            "size": basis.len(),
            "elements": basis.iter().map(|e| json!({
                "alpha": e.i, "beta": e.j, "xi": e.k, "degree": e.degree(),
            })).collect::<Vec<_>>(),
            "series": rationals_json(hilbert.coeffs()),
            "independence": verdict.map(|v| json!({"rank": v.rank, "size": v.size})),
        }),
        text,
        latex,
        checks: vec![check],
    })
}

fn verify(g: u32, store: &BasisStore) -> Result<Output, CliError> {
    let report = run_verification(g, store);
    let overall = report.overall();
    let checks: Vec<Check> = report.checks.into_iter().map(Check::from).collect();
    let text = format!("verification, genus {g}: {overall}\n");
    let mut latex = format!("% verification, genus {g}\n\\begin{{tabular}}{{ll}}\ncheck & status \\\\\n\\hline\n");
    for c in &checks {
        let _ = writeln!(latex, "\\texttt{{{}}} & {} \\\\", c.name, c.status.as_str());
    }
    latex.push_str("\\end{tabular}\n");
    Ok(Output {
        genus: Some(g),
        command: "verify",
        data: json!({ "overall": overall.as_str(), "groebner_cap": store.cap() }),
        text,
        latex,
        checks,
    })
}
