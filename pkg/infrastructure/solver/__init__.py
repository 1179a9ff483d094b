# Exact cone solvers
