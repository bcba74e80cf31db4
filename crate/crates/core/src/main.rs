fn main() {
    std::process::exit(eulerian::cli::run(std::env::args_os()));
}
