fn main() {
    std::process::exit(parcorp::cli::run(std::env::args_os()));
}
