"""Exact representation theory of C_l wr S_d and G(l,k,d) via colored-permutation groupoids."""

__version__ = "0.1.0"
