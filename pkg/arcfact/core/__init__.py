"""
Core utilities for arcfact: settings and bounds, error taxonomy, spec parsing, report fingerprinting.
"""
