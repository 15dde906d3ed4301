fn main() {
    std::process::exit(fockspace::cli::run(std::env::args_os()));
}
