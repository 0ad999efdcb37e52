fn main() {
    std::process::exit(cexkit::cli::run(std::env::args_os()));
}
