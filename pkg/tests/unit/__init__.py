"""
Unit tests for the knotobs library.
"""
