use clap::Parser;

fn main() {
    let cli = qaoa_maxcut::cli::Cli::parse();
    if let Err(err) = qaoa_maxcut::cli::run(cli) {
        eprintln!("error: {err}");
        let mut source = std::error::Error::source(&err);
        while let Some(cause) = source {
            eprintln!("  caused by: {cause}");
            source = cause.source();
        }
        std::process::exit(1);
    }
}
