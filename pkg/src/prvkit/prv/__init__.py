# PRV statement, refinement and exhaustive sweeps
