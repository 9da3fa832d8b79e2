use clap::Parser;

fn main() {
    let cli = blochpair::cli::Cli::parse();
    match blochpair::cli::run(cli) {
        Ok(output) => {
            print!("{output}");
        }
        Err(error) => {
            eprintln!("error: {error}");
            std::process::exit(1);
        }
    }
}
