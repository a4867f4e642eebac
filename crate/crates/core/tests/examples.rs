//! Every example runs to completion.

#[path = "../examples/automorphism_action.rs"]
mod automorphism_action;
#[path = "../examples/central_extension.rs"]
mod central_extension;
#[path = "../examples/cli.rs"]
mod cli;
#[path = "../examples/cohomology.rs"]
mod cohomology;
#[path = "../examples/degeneration.rs"]
mod degeneration;
#[path = "../examples/degeneration_graph.rs"]
mod degeneration_graph;
#[path = "../examples/exact_arithmetic.rs"]
mod exact_arithmetic;
#[path = "../examples/identities.rs"]
mod identities;

#[test]
fn examples_run() {
    automorphism_action::main();
    central_extension::main();
    cli::main();
    cohomology::main();
    degeneration::main();
    degeneration_graph::main();
    exact_arithmetic::main();
    identities::main();
}
