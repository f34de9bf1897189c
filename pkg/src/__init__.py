"""
Package initialization for src
"""
