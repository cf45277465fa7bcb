"""Exact computations in FRT-Clifford algebras and U_q(so_N) spin representations."""

__version__ = "0.1.0"
