# This file can be empty

"""Utility modules for the application."""
