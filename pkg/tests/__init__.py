"""
Test suite for the apollonius package
"""
