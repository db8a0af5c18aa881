"""
Tests for the knotobs library.
"""
