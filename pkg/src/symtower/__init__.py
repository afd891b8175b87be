"""Exact symmetric-power calculus on finite pointed simplicial sets."""
