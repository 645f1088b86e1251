use std::process::ExitCode;

use perimeter_cli::App;

fn main() -> ExitCode {
    ExitCode::from(App::default().run(std::env::args_os()))
}
