fn main() {
    std::process::exit(partstat::cli::run());
}
