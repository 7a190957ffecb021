# HTTP routers for the solver, ringing profiles, approximants and verify suites
