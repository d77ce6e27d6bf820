use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::{Action, Command, Format, InputSource, Suite};
use crate::diagram::DEFAULT_CROSSING_LIMIT;

#[derive(Debug, Parser)]
#[command(name = "jones", version, about = "Jones polynomials of braid closures and PD diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest diagram the bracket state sum will accept.
    #[arg(long, default_value_t = DEFAULT_CROSSING_LIMIT, global = true)]
    pub crossing_limit: usize,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Kauffman bracket of the diagram, in A.
    Bracket(InputArgs),
    /// Jones polynomial in t and in A.
    Jones(InputArgs),
    /// Dimension of the Temperley-Lieb algebra on N strands.
    TlDim { n: usize },
    /// Size and trace of the Jones-Wenzl idempotent on N strands.
    Jw { n: usize },
    /// Seifert circle count and writhe.
    Seifert(InputArgs),
    /// Run a verification suite, on the given input or on built-in braids.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Args)]
#[group(skip)]
pub struct InputArgs {
    /// Braid word, e.g. "1 -2 1 -2".
    #[arg(long, allow_hyphen_values = true)]
    pub braid: Option<String>,
    /// File of `X a b c d` lines, optionally `O m`.
    #[arg(long, value_name = "FILE")]
    pub pd: Option<PathBuf>,
    #[arg(long)]
    pub fixture: Option<String>,
    #[arg(long)]
    pub strands: Option<usize>,
}

impl InputArgs {
    fn sources(self) -> (Vec<InputSource>, Option<usize>) {
        let mut v = Vec::new();
        v.extend(self.braid.map(InputSource::Braid));
        v.extend(self.pd.map(InputSource::PdFile));
        v.extend(self.fixture.map(InputSource::Fixture));
        (v, self.strands)
    }
}

impl From<Cli> for Command {
    fn from(cli: Cli) -> Self {
        let none = || (Vec::new(), None);
        let (action, (inputs, strands)) = match cli.command {
            CliCommand::Bracket(i) => (Action::Bracket, i.sources()),
            CliCommand::Jones(i) => (Action::Jones, i.sources()),
            CliCommand::Seifert(i) => (Action::Seifert, i.sources()),
            CliCommand::TlDim { n } => (Action::TlDim(n), none()),
            CliCommand::Jw { n } => (Action::Jw(n), none()),
            CliCommand::Verify { suite, input } => (Action::Verify(suite), input.sources()),
        };
        Command {
            action,
            inputs,
            strands,
            format: cli.format,
            crossing_limit: cli.crossing_limit,
        }
    }
}
