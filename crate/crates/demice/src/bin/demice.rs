fn main() {
    std::process::exit(demice::cli::run());
}
