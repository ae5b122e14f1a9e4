fn main() {
    std::process::exit(ocycle::cli::run(std::env::args_os()));
}
