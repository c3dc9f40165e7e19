fn main() {
    std::process::exit(triphoton::cli::run());
}
