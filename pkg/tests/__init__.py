"""
Test suite for the Black Swan logic toolkit.
"""
