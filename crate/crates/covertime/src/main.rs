fn main() -> std::process::ExitCode {
    covertime::cli::run()
}
