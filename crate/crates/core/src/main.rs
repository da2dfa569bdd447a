fn main() {
    std::process::exit(robust_apa::cli::run(std::env::args_os()));
}
