fn main() {
    std::process::exit(endograph::cli::run());
}
