fn main() {
    std::process::exit(antipodal_atlas::cli::run(std::env::args()));
}
