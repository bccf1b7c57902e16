fn main() {
    std::process::exit(atomwall::cli::run(std::env::args_os()));
}
