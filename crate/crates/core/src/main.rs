fn main() {
    std::process::exit(ringcodes::cli::run(std::env::args_os()));
}
