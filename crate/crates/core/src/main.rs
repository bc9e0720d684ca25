fn main() {
    std::process::exit(knotcert::cli::run(std::env::args_os()));
}
