"""
Test package for semiperm.
"""
