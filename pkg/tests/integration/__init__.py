"""
Integration tests for the knotobs library.
"""
