use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use chevpres_core::cover::{check_cover, cover_json, standard_cover};
use chevpres_core::ffield::{factor_prime_power, FiniteField};
use chevpres_core::presentations::{
    count_bounds, io, present_abelian_rootgroup, present_affine_uplus, present_sl3_sylow,
    present_sp4_sylow, present_sp4_sylow_even, table1_grid, table1_row, Presentation, Table1Row,
    Word,
};
use chevpres_core::rootsys::{build_affine_diagram, BaseType};
use chevpres_core::verify::{
    build_model, closure, default_closure_cap, eval_word, frattini_generator_count,
    model_kind_for, todd_coxeter, verify_auto, TcStatus, DEFAULT_MAX_COSETS,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "chevpres", version, about = "Presentations of Sylow and unipotent subgroups of Chevalley groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Family {
    AbelianRootgroup,
    Sl3Sylow,
    Sp4Sylow,
    Sp4SylowEven,
    AffineUplus,
}

#[derive(Copy, Clone, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Parity {
    Odd,
    Even,
}

#[derive(clap::Args)]
struct FieldArgs {
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    a: Option<usize>,
    /// Field order; factored and rejected unless a prime power.
    #[arg(long)]
    q: Option<u64>,
}

impl FieldArgs {
    fn field(&self) -> Result<FiniteField> {
        let (p, a) = match (self.p, self.a, self.q) {
            (Some(p), a, None) => (p, a.unwrap_or(1)),
            (p, a, Some(q)) => {
                let (qp, qa) = factor_prime_power(q)?;
                if p.is_some_and(|p| p != qp) || a.is_some_and(|a| a != qa) {
                    bail!("--q {q} = {qp}^{qa} is inconsistent with --p/--a");
                }
                (qp, qa)
            }
            (None, _, None) => bail!("give the field as --q or --p [--a]"),
        };
        Ok(FiniteField::new(p, a)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a presentation and write it to a file (or stdout).
    Present {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long = "type")]
        base: Option<BaseType>,
        #[arg(long)]
        rank: Option<usize>,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a presentation file against its matrix model.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        todd_coxeter: bool,
        #[arg(long)]
        closure: bool,
        #[arg(long)]
        frattini: bool,
        #[arg(long, env = "CHEV_MAX_COSETS", default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        #[arg(long)]
        closure_cap: Option<usize>,
        /// Seed for sampled checks; the current checks are exhaustive.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Relation counts per (type, rank, a, parity of p).
    Table1 {
        #[arg(long = "type")]
        base: Option<BaseType>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long, value_enum)]
        parity: Option<Parity>,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, default_value_t = 4)]
        max_a: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Three-part cover of a finite diagram, with its check report.
    Cover {
        #[arg(long = "type")]
        base: BaseType,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&PathBuf>, body: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(body.as_bytes())?;
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_present(
    family: Family,
    base: Option<BaseType>,
    rank: Option<usize>,
    field: &FieldArgs,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<bool> {
    let f = field.field()?;
    let pres = match family {
        Family::AbelianRootgroup => present_abelian_rootgroup(&f),
        Family::Sl3Sylow => present_sl3_sylow(&f),
        Family::Sp4Sylow => present_sp4_sylow(&f)?,
        Family::Sp4SylowEven => present_sp4_sylow_even(&f)?,
        Family::AffineUplus => {
            let (Some(base), Some(rank)) = (base, rank) else {
                bail!("affine-uplus needs --type and --rank");
            };
            present_affine_uplus(&build_affine_diagram(base, rank)?, &f)?
        }
    };
    eprintln!("d_count = {}", pres.d_count());
    eprintln!("r_count = {}", pres.r_count());
    if let (Family::AffineUplus, Some(base), Some(rank)) = (family, base, rank) {
        match count_bounds(base, rank, f.a(), u64::from(f.p())) {
            Ok(cb) => eprintln!(
                "count_bounds: upper = {}, pair_formula = {}, gs_lower = {}, d = {}, agrees = {}",
                cb.upper, cb.pair_formula, cb.gs_lower, cb.d, cb.agrees
            ),
            Err(e) => eprintln!("count_bounds: {e}"),
        }
    }
    let body = match format {
        Format::Json => io::to_json(&pres),
        Format::Text => io::to_text(&pres)?,
    };
    emit(out, &body)?;
    Ok(true)
}

struct VerifyOpts {
    todd_coxeter: bool,
    closure: bool,
    frattini: bool,
    max_cosets: usize,
    closure_cap: Option<usize>,
}

fn cmd_verify(input: &PathBuf, opts: &VerifyOpts, out: Option<&PathBuf>) -> Result<bool> {
    let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let pres: Presentation = io::parse_any(&text)?;
    let field = FiniteField::from_descriptor(&pres.field)?;
    let report = verify_auto(&pres)?;
    let mut ok = report.passed();

    let mut order_closure = Value::Null;
    let mut d_frattini = Value::Null;
    if opts.closure || opts.frattini {
        let kind = model_kind_for(&pres)
            .filter(|_| pres.diagram.is_none())
            .context("closure needs a finite matrix model; pair-local presentations have none")?;
        let model = build_model(kind, &field);
        let gens = (0..pres.d_count())
            .map(|g| eval_word(&model, &pres, &Word::gen(g)))
            .collect::<chevpres_core::Result<Vec<_>>>()?;
        let cap = opts.closure_cap.unwrap_or_else(|| default_closure_cap(u64::from(field.q())));
        let group = closure(&gens, &field, cap)?;
        order_closure = json!(group.order());
        if opts.frattini {
            d_frattini = json!(frattini_generator_count(&group, u64::from(field.p()), &field)?);
        }
    }

    let mut order_tc = Value::Null;
    if opts.todd_coxeter {
        let table = todd_coxeter(&pres, opts.max_cosets)?;
        match table.status {
            TcStatus::Closed => order_tc = json!(table.live_cosets()),
            TcStatus::Overflowed => {
                order_tc = json!("overflow");
                ok = false;
            }
        }
    }
    if let (Some(a), Some(b)) = (order_closure.as_u64(), order_tc.as_u64()) {
        if a != b {
            eprintln!("order mismatch: closure {a}, todd-coxeter {b}");
            ok = false;
        }
    }

    let body = json!({
        "family": pres.family,
        "q": field.q(),
        "relators_checked": report.checked,
        "failures": report.failures,
        "order_closure": order_closure,
        "order_tc": order_tc,
        "d_frattini": d_frattini,
    });
    emit(out, &pretty(&body))?;
    if !report.passed() {
        eprintln!("{} of {} relators fail", report.failures.len(), report.checked);
    }
    Ok(ok)
}

fn table_text(rows: &[Table1Row]) -> String {
    let mut s = String::from(
        "type  l  a  parity   q  pairs(A1xA1,A2,C2)   upper  pair_formula  builder  gs_lower  formula_ok  builder_ok\n",
    );
    for r in rows {
        let pc = |k: &str| r.pairs.get(k).copied().unwrap_or(0);
        let opt = |x: Option<u64>| x.map_or_else(|| "n/a".to_string(), |x| x.to_string());
        let q = r.q.to_string();
        let pairs = format!("{},{},{}", pc("A1xA1"), pc("A2"), pc("C2"));
        s.push_str(&format!(
            "{:<4} {:>2} {:>2}  {:<6} {:>3}  {:<19} {:>6}  {:>12}  {:>7}  {:>8}  {:<10}  {}\n",
            r.base,
            r.l,
            r.a,
            r.parity,
            q,
            pairs,
            r.upper,
            r.pair_formula,
            opt(r.builder),
            r.gs_lower,
            r.formula_agrees,
            r.builder_agrees.map_or_else(|| "n/a".to_string(), |b| b.to_string()),
        ));
    }
    s
}

#[allow(clippy::too_many_arguments)]
fn cmd_table1(
    base: Option<BaseType>,
    rank: Option<usize>,
    a: Option<usize>,
    parity: Option<Parity>,
    max_rank: usize,
    max_a: usize,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<bool> {
    let rows = match (base, rank) {
        (Some(base), Some(rank)) => {
            let avals: Vec<usize> = a.map_or_else(|| (1..=max_a).collect(), |a| vec![a]);
            let parities = match parity {
                Some(Parity::Odd) => vec![false],
                Some(Parity::Even) => vec![true],
                None => vec![false, true],
            };
            let mut rows = Vec::new();
            for &a in &avals {
                for &even in &parities {
                    rows.push(table1_row(base, rank, a, even)?);
                }
            }
            rows
        }
        (None, None) => table1_grid(max_rank, max_a)?,
        _ => bail!("give both --type and --rank for a single row"),
    };
    let body = match format {
        Format::Json => pretty(&serde_json::to_value(&rows)?),
        Format::Text => table_text(&rows),
    };
    emit(out, &body)?;
    Ok(rows.iter().all(Table1Row::all_agree))
}

fn cmd_cover(base: BaseType, rank: usize, out: Option<&PathBuf>) -> Result<bool> {
    let spec = standard_cover(base, rank)?;
    let report = check_cover(&spec);
    emit(out, &pretty(&cover_json(&spec, &report)))?;
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Present {
            family,
            base,
            rank,
            field,
            format,
            out,
        } => cmd_present(family, base, rank, &field, format, out.as_ref()),
        Command::Verify {
            input,
            todd_coxeter,
            closure,
            frattini,
            max_cosets,
            closure_cap,
            seed: _,
            out,
        } => {
            if max_cosets == 0 || closure_cap == Some(0) {
                bail!("caps must be positive");
            }
            let opts = VerifyOpts {
                todd_coxeter,
                closure,
                frattini,
                max_cosets,
                closure_cap,
            };
            cmd_verify(&input, &opts, out.as_ref())
        }
        Command::Table1 {
            base,
            rank,
            a,
            parity,
            max_rank,
            max_a,
            format,
            out,
        } => cmd_table1(base, rank, a, parity, max_rank, max_a, format, out.as_ref()),
        Command::Cover { base, rank, out } => cmd_cover(base, rank, out.as_ref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
