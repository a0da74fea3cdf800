fn main() {
    std::process::exit(abext::cli::run(std::env::args_os()));
}
