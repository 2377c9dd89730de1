"""Verification and construction of finite models of degenerate tricategories."""
