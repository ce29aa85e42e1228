use std::fmt::Write as _;

use anyhow::{bail, ensure, Context, Result};
use grig_core::graph::graph_from_window;
use grig_core::group::{relator_table, schreier_graph};
use grig_core::language::{
    complexity_closed_form, complexity_profile, max_power_scan, n_partition, ComplexityProfile,
};
use grig_core::spectra::{
    eigenvalues, ids_comparison, ids_distribution, jacobi_from_window, level_epsilon,
    measure_estimate, schreier_laplacian, schreier_spectrum, special_schrodinger, spectrum_csv,
    window_graph_laplacian, ExperimentSummary, DEFAULT_TOL,
};
use grig_core::substitution::eta_prefix;
use grig_core::{Params, PointedWord};
use rayon::prelude::*;

use crate::output::{emit, real};
use crate::{Cli, Command, Format, WindowArgs};

pub fn run(cli: &Cli) -> Result<()> {
    let text = match &cli.command {
        Command::Eta { length } => {
            let mut s = eta_prefix(*length)?.to_string();
            s.push('\n');
            s
        }
        Command::Complexity { max, window } => complexity(*max, *window)?,
        Command::Powers { max_period, window } => powers(*max_period, *window)?,
        Command::Partition { window, level } => partition(window, *level)?,
        Command::Graph { level, window } => match level {
            Some(n) => schreier_graph(*n)?.to_edge_list(),
            None => graph_from_window(&resolve_window(window)?).to_edge_list(),
        },
        Command::Spectrum {
            level,
            window,
            size,
            params,
            tol,
            epsilon,
            format,
        } => spectrum(*level, window, *size, &params.params(), *tol, *epsilon, *format)?,
        Command::Ids {
            from,
            to,
            params,
            curve,
        } => {
            let p = params.params();
            match curve {
                Some(n) => ids_curve(*n, &p)?,
                None => with_pool(cli.threads, || ids_table(*from, *to, &p))?,
            }
        }
        Command::Dichotomy {
            from,
            to,
            first,
            second,
        } => with_pool(cli.threads, || dichotomy(*from, *to, first, second))?,
        Command::Relators { level, kappa } => relators(*level, *kappa)?,
    };
    emit(cli.output.as_deref(), &text)
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        ensure!(n > 0, "thread count must be positive");
        builder = builder.num_threads(n);
    }
    builder.build().context("starting worker pool")?.install(f)
}

fn resolve_window(args: &WindowArgs) -> Result<PointedWord> {
    match (&args.window, args.prefix) {
        (Some(s), _) => Ok(s.parse()?),
        (None, Some(len)) => Ok(PointedWord::new(eta_prefix(len)?, args.origin)?),
        (None, None) => bail!("give --window or --prefix"),
    }
}

fn check_range(from: usize, to: usize) -> Result<()> {
    ensure!(from >= 1 && from <= to, "empty level range {from}..={to}");
    Ok(())
}

fn stable_profile(max: usize) -> Result<ComplexityProfile> {
    let mut window = (8 * max).next_power_of_two().max(256);
    loop {
        let profile = complexity_profile(max, window)?;
        if profile.stabilized {
            return Ok(profile);
        }
        window *= 2;
    }
}

fn complexity(max: usize, window: Option<usize>) -> Result<String> {
    let profile = match window {
        Some(w) => complexity_profile(max, w)?,
        None => stable_profile(max)?,
    };
    let mut out = String::from("length,enumerated,closed_form,match\n");
    let mut bad = Vec::new();
    for len in 1..=max {
        let got = profile.count(len) as u64;
        let want = complexity_closed_form(len as u64);
        if got != want {
            bad.push(len);
        }
        writeln!(out, "{len},{got},{want},{}", got == want)?;
    }
    ensure!(
        bad.is_empty(),
        "enumerated counts differ from the closed form at lengths {bad:?} (window {})",
        profile.window
    );
    Ok(out)
}

fn powers(max_period: usize, window: usize) -> Result<String> {
    let rep = max_power_scan(max_period, window)?;
    ensure!(
        !rep.fourth_power_found,
        "fourth power of period {} in the first {window} letters",
        rep.max_index_period
    );
    let mut out = String::from("period,index,start,root\n");
    for r in &rep.periods {
        writeln!(out, "{},{},{},{}", r.period, r.index, r.start, r.root)?;
    }
    Ok(out)
}

fn partition(window: &WindowArgs, level: u32) -> Result<String> {
    let w = resolve_window(window)?;
    let p = n_partition(&w, level)?;
    let witnesses: Vec<String> = p.witness_positions.iter().map(|q| q.to_string()).collect();
    Ok(format!(
        "level {}\nperiod {}\nresidue {}\nspacers {}\n",
        p.n,
        1u64 << (p.n + 1),
        p.residue,
        witnesses.join(",")
    ))
}

fn spectrum(
    level: Option<usize>,
    window: &WindowArgs,
    size: Option<usize>,
    p: &Params,
    tol: f64,
    epsilon: Option<f64>,
    format: Format,
) -> Result<String> {
    let op = match level {
        Some(n) => schreier_laplacian(n, p)?,
        None => {
            let w = resolve_window(window)?;
            let m = size.unwrap_or_else(|| w.len() - w.origin());
            jacobi_from_window(&w, p, m)?
        }
    };
    let sd = eigenvalues(&op, tol)?;
    if format == Format::Csv {
        return Ok(spectrum_csv(&sd));
    }
    let eps = epsilon.unwrap_or_else(|| match level {
        Some(n) => level_epsilon(n),
        None => 1.0 / sd.size() as f64,
    });
    let mut summary = ExperimentSummary::new(&sd, *p, level.map(|n| n as u32), eps)?;
    if let Some(n) = level {
        summary.ids_sup_diff = Some(ids_comparison(n, p)?.sup_diff());
    }
    Ok(summary.to_json())
}

fn ids_table(from: usize, to: usize, p: &Params) -> Result<String> {
    check_range(from, to)?;
    let rows = (from..=to)
        .into_par_iter()
        .map(|n| ids_comparison(n, p).map_err(anyhow::Error::from))
        .collect::<Result<Vec<_>>>()?;
    let mut out = String::from("level,size,window_graph,schrodinger,bound\n");
    for c in &rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            c.level,
            c.size,
            real(c.window_graph),
            real(c.schrodinger),
            real(c.bound())
        )?;
    }
    if let Some(c) = rows.iter().find(|c| c.sup_diff() > c.bound()) {
        bail!(
            "level {}: counting functions differ by {} > {}",
            c.level,
            c.sup_diff(),
            c.bound()
        );
    }
    Ok(out)
}

fn ids_curve(n: usize, p: &Params) -> Result<String> {
    let sm = schreier_spectrum(n, p, DEFAULT_TOL)?;
    let swg = eigenvalues(&window_graph_laplacian(n, p)?, DEFAULT_TOL)?;
    let sh = eigenvalues(&special_schrodinger(n, p)?, DEFAULT_TOL)?;
    let mut energies: Vec<f64> = [&sm, &swg, &sh]
        .iter()
        .flat_map(|s| s.eigenvalues.iter().copied())
        .collect();
    energies.sort_by(f64::total_cmp);
    energies.dedup();
    let mut out = String::from("energy,schreier,window_graph,schrodinger\n");
    for e in energies {
        writeln!(
            out,
            "{},{},{},{}",
            real(e),
            real(ids_distribution(&sm, e)),
            real(ids_distribution(&swg, e)),
            real(ids_distribution(&sh, e))
        )?;
    }
    Ok(out)
}

fn dichotomy(from: usize, to: usize, first: &Params, second: &Params) -> Result<String> {
    check_range(from, to)?;
    let jobs: Vec<(usize, &Params)> = (from..=to)
        .flat_map(|n| [(n, first), (n, second)])
        .collect();
    let covers = jobs
        .par_iter()
        .map(|&(n, p)| {
            let sd = schreier_spectrum(n, p, DEFAULT_TOL)?;
            Ok(measure_estimate(&sd, level_epsilon(n))?)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = format!("# first {first}, second {second}\n");
    out.push_str("level,epsilon,first_cover,first_gaps,second_cover,second_gaps\n");
    for (n, pair) in (from..=to).zip(covers.chunks(2)) {
        writeln!(
            out,
            "{n},{},{},{},{},{}",
            real(level_epsilon(n)),
            real(pair[0].cover_length),
            pair[0].gap_count(),
            real(pair[1].cover_length),
            pair[1].gap_count()
        )?;
    }
    Ok(out)
}

fn relators(level: usize, kappa: u32) -> Result<String> {
    let rows = relator_table(level, kappa)?;
    let mut out = String::from("relator,level,trivial\n");
    for r in &rows {
        writeln!(out, "{},{},{}", r.name, r.level, r.trivial)?;
    }
    if let Some(r) = rows.iter().find(|r| !r.trivial) {
        bail!("{} acts nontrivially on level {level}", r.name);
    }
    Ok(out)
}
