use clap::Parser;

fn main() {
    let cli = hpsets::cli::Cli::parse();
    let result = hpsets::cli::run(cli);
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    std::process::exit(result.exit_code);
}
