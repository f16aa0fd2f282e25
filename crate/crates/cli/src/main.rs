use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let mut stdout = std::io::stdout().lock();
    ExitCode::from(u8::try_from(iet_words_cli::run(&args, &mut stdout)).unwrap_or(1))
}
