fn main() {
    std::process::exit(symprop::cli::run(std::env::args_os()));
}
