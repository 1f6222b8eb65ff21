fn main() {
    std::process::exit(decocat::cli::run());
}
