use std::fmt::{self, Write as _};
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use nagumo_atlas::gde::{self, ContinuationConfig, Params, SolveError};
use nagumo_atlas::regions::{self, RegionSample};
use nagumo_atlas::verify::{self, ClosedForms, CountFormulas, EnumerationBounds};
use nagumo_atlas::words::{self, parse_group, Alphabet, WordError};
use nagumo_atlas::{count_table, AlphabetCounts, CountError, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{Command, CountArgs, OrbitsArgs, RegionArgs, SolveArgs, VerifyArgs};

#[derive(Debug)]
pub enum Failure {
    /// Bad input; exit 2.
    Usage(String),
    /// A check failed or no solution was found; exit 1.
    Mismatch(String),
    Io(io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Mismatch(_) | Failure::Io(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Mismatch(m) => f.write_str(m),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<WordError> for Failure {
    fn from(e: WordError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Self {
        Failure::Mismatch(e.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::InvalidParams(_)
            | SolveError::InvalidConfig(_)
            | SolveError::TooShort(_) => Failure::Usage(e.to_string()),
            other => Failure::Mismatch(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Count(args) => run_count(&args),
        Command::Orbits(args) => run_orbits(&args),
        Command::Solve(args) => run_solve(&args),
        Command::Region(args) => run_region(&args),
        Command::Verify(args) => run_verify(&args, &ClosedForms),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_alphabet(s: &str) -> Result<Alphabet, Failure> {
    s.parse().map_err(Failure::from)
}

const COUNT_COLUMNS: [&str; 9] = ["N", "B", "Npi", "Bpi", "NL", "BL", "NLpi", "BLpi", "total"];

fn count_cells(c: &AlphabetCounts) -> Vec<String> {
    let mut cells: Vec<String> = c.classes().iter().map(ToString::to_string).collect();
    cells.push(c.total.map(|t| t.to_string()).unwrap_or_default());
    cells
}

pub fn count_csv(args: &CountArgs) -> Result<String, Failure> {
    let mut csv = String::new();
    if args.table1 {
        if args.alphabet.is_some() {
            return Err(Failure::Usage(
                "--table1 always lists both alphabets".into(),
            ));
        }
        csv.push_str("n,total_A3,BLpi_A3,total_A2,BLpi_A2\n");
        for n in 2..=args.n_max {
            let t = count_table(n)?;
            let total = |c: &AlphabetCounts| c.total.expect("n >= 2");
            writeln!(
                csv,
                "{n},{},{},{},{}",
                total(&t.a3),
                t.a3.permuted_lyndon_bracelets,
                total(&t.a2),
                t.a2.permuted_lyndon_bracelets
            )
            .expect("writing to a String");
        }
        return Ok(csv);
    }
    let alphabets = match &args.alphabet {
        Some(s) => vec![parse_alphabet(s)?],
        None => vec![Alphabet::A2, Alphabet::A3],
    };
    let mut header = vec!["n".to_string()];
    for alphabet in &alphabets {
        let tag = alphabet.to_string().to_uppercase();
        header.extend(COUNT_COLUMNS.iter().map(|c| format!("{c}_{tag}")));
    }
    csv.push_str(&header.join(","));
    csv.push('\n');
    for n in 1..=args.n_max {
        let t = count_table(n)?;
        let mut row = vec![n.to_string()];
        for &alphabet in &alphabets {
            row.extend(count_cells(t.for_alphabet(alphabet)));
        }
        csv.push_str(&row.join(","));
        csv.push('\n');
    }
    Ok(csv)
}

fn run_count(args: &CountArgs) -> Outcome {
    emit(&count_csv(args)?, args.out.as_deref())
}

pub fn orbits_listing(args: &OrbitsArgs) -> Result<String, Failure> {
    let alphabet = parse_alphabet(&args.alphabet)?;
    let (group, embedded) = parse_group(&args.group)?;
    let n = match (args.n, embedded) {
        (Some(n), Some(m)) if n != m => {
            return Err(Failure::Usage(format!(
                "-n {n} disagrees with group {}",
                args.group
            )))
        }
        (Some(n), _) | (None, Some(n)) => n,
        (None, None) => return Err(Failure::Usage("word length missing: pass -n".into())),
    };
    let mut text = String::new();
    for class in words::enumerate_orbits(n, alphabet, group, args.lyndon)? {
        write!(text, "{} {}", class.representative, class.size()).expect("writing to a String");
        if args.full {
            let members: Vec<String> = class.members.iter().map(Word::to_string).collect();
            write!(text, " {}", members.join(",")).expect("writing to a String");
        }
        text.push('\n');
    }
    Ok(text)
}

fn run_orbits(args: &OrbitsArgs) -> Outcome {
    emit(&orbits_listing(args)?, None)
}

fn parse_word(s: &str) -> Result<Word, Failure> {
    s.parse().map_err(Failure::from)
}

pub fn solve_report(args: &SolveArgs) -> Result<String, Failure> {
    let word = parse_word(&args.word)?;
    let params = Params::new(args.a, args.d)?;
    let mut cfg = ContinuationConfig::default();
    if let Some(tol) = args.tol {
        cfg.newton_tol = tol;
    }
    let e = gde::solve_type(&word, &params, &cfg)?;
    if args.json {
        let value = serde_json::json!({
            "word": e.word.to_string(),
            "a": e.params.a,
            "d": e.params.d,
            "u": e.u,
            "stable": e.stable,
            "det_sign": e.det_sign,
            "residual_norm": e.residual_norm,
        });
        return Ok(format!("{value}\n"));
    }
    let u: Vec<String> = e.u.iter().map(|x| format!("{x:.15}")).collect();
    Ok(format!(
        "word {}\na {}\nd {}\nu {}\nstable {}\ndet_sign {}\nresidual_norm {:e}\n",
        e.word,
        e.params.a,
        e.params.d,
        u.join(" "),
        e.stable,
        e.det_sign,
        e.residual_norm
    ))
}

fn run_solve(args: &SolveArgs) -> Outcome {
    emit(&solve_report(args)?, None)
}

pub fn region_csv(args: &RegionArgs) -> Result<String, Failure> {
    let word = parse_word(&args.word)?;
    if args.a_count == 0 {
        return Err(Failure::Usage("--a-count must be positive".into()));
    }
    let grid = regions::uniform_grid(args.a_min, args.a_max, args.a_count);
    if grid.iter().any(|&a| !(a > 0.0 && a < 1.0)) {
        return Err(Failure::Usage("a-grid must lie in (0, 1)".into()));
    }
    let cfg = ContinuationConfig::default();
    let boundary = regions::scan_region(&word, &grid, &cfg, args.d_cap)?;

    let other = match (&args.compare, args.mirror) {
        (Some(s), _) => Some(parse_word(s)?),
        (None, true) => Some(word.permute_values()),
        (None, false) => None,
    };
    let mut csv = String::new();
    let Some(other) = other else {
        csv.push_str("word,a,d_max,terminal\n");
        for s in &boundary.samples {
            writeln!(csv, "{word},{},{},{}", s.a, s.d_max, s.terminal)
                .expect("writing to a String");
        }
        return Ok(csv);
    };
    let other_grid: Vec<f64> = if args.mirror {
        grid.iter().map(|a| 1.0 - a).collect()
    } else {
        grid.clone()
    };
    let compared: Vec<RegionSample> = other_grid
        .iter()
        .map(|&a| regions::d_max(&other, a, &cfg, args.d_cap))
        .collect::<Result<_, _>>()?;
    csv.push_str(
        "word,a,d_max,terminal,compare_word,compare_a,compare_d_max,compare_terminal,deviation\n",
    );
    for (s, c) in boundary.samples.iter().zip(&compared) {
        writeln!(
            csv,
            "{word},{},{},{},{other},{},{},{},{}",
            s.a,
            s.d_max,
            s.terminal,
            c.a,
            c.d_max,
            c.terminal,
            (s.d_max - c.d_max).abs()
        )
        .expect("writing to a String");
    }
    Ok(csv)
}

fn run_region(args: &RegionArgs) -> Outcome {
    emit(&region_csv(args)?, args.out.as_deref())
}

const ROUND_TRIPS: usize = 64;
const ROUND_TRIP_MAX_LEN: usize = 500;

/// Runs the checks and prints one line per failure plus a summary; any
/// failure becomes [`Failure::Mismatch`].
pub fn verify_report(
    args: &VerifyArgs,
    formulas: &dyn CountFormulas,
) -> Result<(String, usize), Failure> {
    let mut text = String::new();
    let mut failures = 0usize;

    let identities =
        verify::verify_identities(args.n_max).map_err(|e| Failure::Usage(e.to_string()))?;
    for n in &identities.totient_sum_failures {
        writeln!(text, "FAIL totient sum at n = {n}").expect("writing to a String");
    }
    for n in &identities.convolution_failures {
        writeln!(text, "FAIL convolution identities at n = {n}").expect("writing to a String");
    }
    failures += identities.totient_sum_failures.len() + identities.convolution_failures.len();
    writeln!(
        text,
        "identities: n = 1..={} {}",
        args.n_max,
        pass_word(identities.passed())
    )
    .expect("writing to a String");

    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut bad_round_trips = 0usize;
    for _ in 0..ROUND_TRIPS {
        let len = rng.gen_range(1..=ROUND_TRIP_MAX_LEN);
        let g: Vec<i128> = (0..len)
            .map(|_| rng.gen_range(-1_000_000..=1_000_000))
            .collect();
        if !verify::verify_mobius_round_trip(&g) {
            bad_round_trips += 1;
        }
    }
    failures += bad_round_trips;
    writeln!(
        text,
        "mobius round trips: {ROUND_TRIPS} (seed {}) {}",
        args.seed,
        pass_word(bad_round_trips == 0)
    )
    .expect("writing to a String");

    if !args.identities_only {
        let bounds = EnumerationBounds {
            a2_max: args.a2_max,
            a3_max: args.a3_max,
        };
        let checks = verify::verify_counts(formulas, bounds)?;
        let bad: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
        for c in &bad {
            let formula = c
                .formula
                .map_or_else(|| "error".to_string(), |f| f.to_string());
            writeln!(
                text,
                "FAIL {} {} lyndon={} n={}: formula {formula}, enumerated {}",
                c.alphabet, c.group, c.lyndon, c.n, c.enumerated
            )
            .expect("writing to a String");
        }
        failures += bad.len();
        writeln!(
            text,
            "counts: {} cases (a2 n <= {}, a3 n <= {}) {}",
            checks.len(),
            bounds.a2_max,
            bounds.a3_max,
            pass_word(bad.is_empty())
        )
        .expect("writing to a String");
    }
    Ok((text, failures))
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run_verify(args: &VerifyArgs, formulas: &dyn CountFormulas) -> Outcome {
    let (text, failures) = verify_report(args, formulas)?;
    emit(&text, None)?;
    if failures > 0 {
        return Err(Failure::Mismatch(format!("{failures} check(s) failed")));
    }
    Ok(())
}
