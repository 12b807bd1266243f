fn main() {
    std::process::exit(gwlocal::cli::run());
}
