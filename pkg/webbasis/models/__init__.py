"""Shared models package for webbasis."""
