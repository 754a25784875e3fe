fn main() -> std::process::ExitCode {
    surfkit_cli::main()
}
