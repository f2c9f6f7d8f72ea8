use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use rgsmooth::{
    emit_svg, read_points, smooth, steps_for_ratio, write_points, Columns, CsvSchema, Error,
    Polyline64, SmoothingResult64,
};
use thiserror::Error;

use crate::args::{GenerateArgs, SignalKind, SmoothArgs, StepsArg};
use crate::generate::sine_noise;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Smoothing(#[from] Error),

    #[error("{}: {source}", path.display())]
    File { path: PathBuf, source: io::Error },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 0 success, 1 I/O, 2 invalid input or parse failure, 3 step-count overflow.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Smoothing(Error::TooManySteps { .. }) => 3,
            CliError::Smoothing(Error::Io(_)) | CliError::File { .. } => 1,
            CliError::Smoothing(_) | CliError::Usage(_) => 2,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Smoothing(Error::Io(e))
    }
}

fn file_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::File {
        path: path.to_owned(),
        source,
    }
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(file_err(p))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn schema(args: &SmoothArgs) -> Result<CsvSchema, CliError> {
    let columns = match &args.columns {
        Some(cols) => Columns::Select(cols.clone()),
        None => Columns::All,
    };
    Ok(CsvSchema::default()
        .with_delimiter(args.delimiter)?
        .with_header(args.header)
        .with_columns(columns))
}

/// Resolves the requested amount of smoothing against the input size.
fn resolve_steps(
    args: &SmoothArgs,
    input: &Polyline64,
    diag: &mut dyn Write,
) -> Result<usize, CliError> {
    let max = input.segments() - 1;
    match (args.steps, args.target_cr) {
        (Some(StepsArg::Max), _) => Ok(max),
        (Some(StepsArg::Count(n)), _) if n > max && args.clamp => {
            let _ = writeln!(diag, "warning: clamping {n} steps to the maximum of {max}");
            Ok(max)
        }
        (Some(StepsArg::Count(n)), _) => Ok(n),
        (None, Some(target)) => Ok(steps_for_ratio(input.segments(), target)?),
        (None, None) => Err(CliError::Usage(
            "one of --steps or --target-cr is required".into(),
        )),
    }
}

/// Reads, smooths and writes; `diag` receives the trace and warnings.
pub fn run_smooth(args: &SmoothArgs, diag: &mut dyn Write) -> Result<SmoothingResult64, CliError> {
    let schema = schema(args)?;
    let input: Polyline64 = match &args.input {
        Some(p) => {
            let file = File::open(p).map_err(file_err(p))?;
            read_points(BufReader::new(file), &schema)?
        }
        None => {
            let mut buf = Vec::new();
            io::stdin().lock().read_to_end(&mut buf)?;
            read_points(buf.as_slice(), &schema)?
        }
    };
    if args.axes.len() != 2 {
        return Err(CliError::Usage("--axes takes exactly two indices".into()));
    }
    if args.svg.is_some() && args.axes.iter().any(|&a| a >= input.dim()) {
        return Err(CliError::Usage(format!(
            "--axes {:?} out of range for dimension {}",
            args.axes,
            input.dim()
        )));
    }

    let steps = resolve_steps(args, &input, diag)?;
    let result = smooth(&input, steps)?;

    if args.trace {
        for rec in &result.trace {
            // s printed as an exact fraction
            let _ = writeln!(
                diag,
                "p={} N_p={} s={}/{} N_next={} c.r.={:.4}%",
                rec.step,
                rec.n_before,
                rec.s.numer(),
                rec.s.denom(),
                rec.n_after,
                rec.compression_ratio_pct
            );
        }
    }

    let mut out = open_output(args.output.as_deref())?;
    write_points(&result.output, &schema, &mut out)?;
    out.flush()?;

    if let Some(path) = &args.svg {
        let mut svg = BufWriter::new(File::create(path).map_err(file_err(path))?);
        emit_svg(
            &input,
            &result.output,
            (args.axes[0], args.axes[1]),
            &mut svg,
        )?;
        svg.flush().map_err(file_err(path))?;
    }
    Ok(result)
}

pub fn run_generate(args: &GenerateArgs) -> Result<Polyline64, CliError> {
    let line = match args.kind {
        SignalKind::SineNoise => sine_noise(args.n, args.x_max, args.sigma, args.seed)?,
    };
    let mut out = open_output(args.output.as_deref())?;
    write_points(&line, &CsvSchema::default(), &mut out)?;
    out.flush()?;
    Ok(line)
}
