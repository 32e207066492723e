"""
Title: ktile Tests
Description: pytest suite for the ktile package.
"""
