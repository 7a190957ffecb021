# Invariant suites for the solver and number-theory layers
