pub mod suite;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nilcomplex::ncomplex::{HomologyTable, NComplex};
use nilcomplex::qdga::{tensor_algebra, FiniteAlgebra};
use nilcomplex::simplicial::{
    build_hochschild, build_simplicial_forms, build_simplicial_set_module, theorem3_dictionary, theorem4_dictionary,
    Bimodule, CosimplicialModule, Dictionary, SimplicialComplexK, SimplicialModule,
};
use nilcomplex::{Error, Field, QContext};

#[derive(Parser, Debug)]
#[command(name = "nilcomplex", version, about = "Generalized homology of N-complexes in exact arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the table of dim H^n_(m) with validity flags.
    Homology(RunConfig),
    /// Run a verification suite, one PASS/FAIL line per result.
    Verify(RunConfig),
    /// Generalized homology next to the ordinary-homology prediction, as CSV.
    Table(RunConfig),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Core,
    Qdga,
    All,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// `zmod:p` or `cyclotomic:n`
    #[arg(long, default_value = "zmod:7")]
    pub field: String,
    /// Integer, `a/b`, `zeta` or `zeta^k`
    #[arg(long, default_value = "2")]
    pub q: String,
    #[arg(long = "N", default_value_t = 3)]
    pub order: usize,
    /// Top degree of the truncation window
    #[arg(long = "D")]
    pub window: Option<usize>,
    /// zero, ncomplex, simplicial-chains, simplicial-forms, hochschild, tensor
    #[arg(long)]
    pub builder: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Named simplicial complex or algebra
    #[arg(long)]
    pub preset: Option<String>,
    /// `d<p>` for the differential d_p, or `ordinary`
    #[arg(long, default_value = "d0")]
    pub variant: String,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Failure of a CLI run, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::AssumptionViolation(_) => 3,
            Error::Parse(_)
            | Error::InvalidField(_)
            | Error::NotPrime(_)
            | Error::DimensionMismatch(_)
            | Error::OutOfRange(_)
            | Error::SizeGuard(_)
            | Error::NotNilpotent { .. } => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

pub fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl RunConfig {
    pub fn ctx(&self) -> Result<QContext, Failure> {
        if self.order < 2 {
            return Err(input_error("N must be at least 2"));
        }
        let field = Field::parse(&self.field)?;
        let q = field.parse_scalar(&self.q)?;
        let ctx = QContext::new(field, q, self.order)?;
        if let Some(d) = self.window {
            if d < self.order {
                return Err(input_error(format!("window D = {d} is smaller than N = {}", self.order)));
            }
        }
        Ok(ctx)
    }

    /// Window for simplicial data: `max(2N, 6)` unless given.
    pub fn simplicial_window(&self) -> usize {
        self.window.unwrap_or((2 * self.order).max(6))
    }

    /// Window for algebra-based data, whose dimensions grow geometrically: `N + 2` unless given.
    pub fn algebra_window(&self) -> usize {
        self.window.unwrap_or(self.order + 2)
    }

    pub fn variant(&self) -> Result<Option<usize>, Failure> {
        if self.variant == "ordinary" {
            return Ok(None);
        }
        self.variant
            .strip_prefix('d')
            .and_then(|p| p.parse().ok())
            .map(Some)
            .ok_or_else(|| input_error(format!("variant `{}`: expected d<p> or ordinary", self.variant)))
    }

    fn read_file(&self) -> Result<Option<String>, Failure> {
        match &self.file {
            Some(path) => std::fs::read_to_string(path)
                .map(Some)
                .map_err(|e| input_error(format!("{}: {e}", path.display()))),
            None => Ok(None),
        }
    }

    pub fn complex_k(&self) -> Result<SimplicialComplexK, Failure> {
        if let Some(text) = self.read_file()? {
            return Ok(SimplicialComplexK::parse(&text)?);
        }
        let name = self.preset.as_deref().unwrap_or("triangle");
        SimplicialComplexK::preset(name).ok_or_else(|| input_error(format!("unknown simplicial preset `{name}`")))
    }

    pub fn algebra(&self, field: &Field) -> Result<FiniteAlgebra, Failure> {
        if let Some(text) = self.read_file()? {
            let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| input_error(format!("algebra file: {e}")))?;
            return Ok(FiniteAlgebra::from_json(field, &v)?);
        }
        Ok(FiniteAlgebra::preset(self.preset.as_deref().unwrap_or("dual_numbers"), field)?)
    }

    pub fn ncomplex_file(&self) -> Result<NComplex, Failure> {
        let text = self.read_file()?.ok_or_else(|| input_error("--file is required for the ncomplex builder"))?;
        let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| input_error(format!("complex file: {e}")))?;
        Ok(NComplex::from_json(&v)?)
    }
}

/// A homology table ready for printing.
pub struct Rendered {
    pub table: HomologyTable,
    pub field: Field,
    /// Chain complexes are stored in negative degrees; printed degrees are flipped.
    pub chain: bool,
    pub dictionary: Option<Dictionary>,
}

impl Rendered {
    fn degree(&self, n: i64) -> i64 {
        if self.chain {
            -n
        } else {
            n
        }
    }

    fn predicted(&self, level: usize, n: i64) -> Option<usize> {
        self.dictionary.as_ref().and_then(|d| d.predicted(level, n))
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Json => {
                let mut v = self.table.to_json(&self.field);
                v["chain"] = serde_json::Value::Bool(self.chain);
                if let Some(d) = &self.dictionary {
                    v["ordinary"] = serde_json::json!(d.ordinary.iter().map(|o| serde_json::json!({"k": o.0, "dim": o.1, "valid": o.2})).collect::<Vec<_>>());
                    v["predicted"] = serde_json::json!(d
                        .predictions
                        .iter()
                        .map(|p| serde_json::json!({"m": p.0, "n": self.degree(p.1), "dim": p.2}))
                        .collect::<Vec<_>>());
                }
                if self.chain {
                    if let Some(cells) = v["cells"].as_array_mut() {
                        for c in cells {
                            c["n"] = serde_json::json!(-c["n"].as_i64().unwrap_or(0));
                        }
                    }
                }
                out = serde_json::to_string_pretty(&v).unwrap();
                out.push('\n');
            }
            Format::Csv => {
                out.push_str("m,n,dim,valid,predicted\n");
                for c in &self.table.cells {
                    let pred = self.predicted(c.level, c.degree).map_or(String::new(), |p| p.to_string());
                    let _ = writeln!(out, "{},{},{},{},{}", c.level, self.degree(c.degree), c.dim, c.valid, pred);
                }
            }
            Format::Text => {
                let sym = if self.chain { "H_((m),n)" } else { "H^n_(m)" };
                let _ = writeln!(out, "# {sym}, N = {}, {} cells", self.table.order, self.table.cells.len());
                for c in &self.table.cells {
                    let mut line = format!("m={} n={} dim={}", c.level, self.degree(c.degree), c.dim);
                    if !c.valid {
                        line.push_str(" (outside window)");
                    }
                    if let Some(p) = self.predicted(c.level, c.degree) {
                        if c.dim > 0 || p > 0 {
                            let _ = write!(line, " [dictionary: {p}]");
                        }
                    }
                    let _ = writeln!(out, "{line}");
                }
            }
        }
        out
    }

    /// Two-column comparison on every valid cell with a prediction.
    pub fn side_by_side(&self) -> String {
        let mut out = String::from("m,n,generalized,dictionary\n");
        if let Some(d) = &self.dictionary {
            for &(m, n, pred) in &d.predictions {
                if let (Some(p), Some(cell)) = (pred, self.table.get(m, n)) {
                    let _ = writeln!(out, "{m},{},{},{p}", self.degree(n), cell.dim);
                }
            }
        }
        out
    }
}

fn cosimplicial_table(e: &CosimplicialModule, variant: Option<usize>) -> Result<Rendered, Failure> {
    let field = e.ctx().field().clone();
    let (table, dictionary) = match variant {
        None => (e.standard_differential()?.homology_table()?, None),
        Some(p) => {
            let dict = if e.ctx().assumptions().a1 && e.has_codegeneracies() { Some(theorem3_dictionary(e, p)?) } else { None };
            match dict {
                Some(d) => (d.generalized.clone(), Some(d)),
                None => (e.truncate(p)?.homology_table()?, None),
            }
        }
    };
    Ok(Rendered { table, field, chain: false, dictionary })
}

fn chain_table(s: &SimplicialModule, variant: Option<usize>) -> Result<Rendered, Failure> {
    let field = s.ctx().field().clone();
    let (table, dictionary) = match variant {
        None => (s.ordinary_chains()?.homology_table()?, None),
        Some(p) if p <= 1 && s.ctx().assumptions().a1 && s.has_degeneracies() => {
            let d = theorem4_dictionary(s, p)?;
            (d.generalized.clone(), Some(d))
        }
        Some(p) => (s.chains_d(p)?.homology_table()?, None),
    };
    Ok(Rendered { table, field, chain: true, dictionary })
}

/// Builds the instance named by `--builder` and computes its homology table.
pub fn build_table(cfg: &RunConfig) -> Result<Rendered, Failure> {
    let builder = cfg.builder.as_deref().unwrap_or("zero");
    if builder == "ncomplex" {
        let c = cfg.ncomplex_file()?;
        return Ok(Rendered { table: c.homology_table()?, field: c.ctx().field().clone(), chain: false, dictionary: None });
    }
    let ctx = cfg.ctx()?;
    let variant = cfg.variant()?;
    if builder != "zero" && (variant.is_some() || builder == "tensor") {
        ctx.require_a0()?;
    }
    match builder {
        "zero" => Ok(Rendered { table: NComplex::zero(&ctx).homology_table()?, field: ctx.field().clone(), chain: false, dictionary: None }),
        "simplicial-chains" => {
            let s = build_simplicial_set_module(&cfg.complex_k()?, &ctx, cfg.simplicial_window())?;
            chain_table(&s, variant)
        }
        "simplicial-forms" => {
            let e = build_simplicial_forms(&cfg.complex_k()?, &ctx, cfg.simplicial_window())?;
            cosimplicial_table(e.module(), variant)
        }
        "hochschild" => {
            let a = cfg.algebra(ctx.field())?;
            let e = build_hochschild(&a, &Bimodule::regular(&a), &ctx, cfg.algebra_window())?;
            cosimplicial_table(&e, variant)
        }
        "tensor" => {
            let a = cfg.algebra(ctx.field())?;
            let t = tensor_algebra(&a, &ctx, cfg.algebra_window())?;
            Ok(Rendered { table: t.complex()?.homology_table()?, field: ctx.field().clone(), chain: false, dictionary: None })
        }
        other => Err(input_error(format!("unknown builder `{other}`"))),
    }
}
