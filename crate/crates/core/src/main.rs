fn main() {
    std::process::exit(commorder::cli::run(std::env::args_os()));
}
