"""Moment cones of Kronecker and Horn problems via Ressayre elements."""

__version__ = "0.1.0"
