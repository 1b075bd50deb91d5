fn main() {
    std::process::exit(evscan::cli::run(std::env::args_os()));
}
