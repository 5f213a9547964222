fn main() {
    std::process::exit(aous::cli::run(std::env::args_os()));
}
