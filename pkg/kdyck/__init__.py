# (C) 2026 kdyck contributors
"""k-vector Dyck paths, the sweep map and the q,t-Catalan polynomials C_lambda."""
