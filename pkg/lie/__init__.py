"""Exact root-system and tensor-product toolkit for checking Kostant's rho x rho conjecture."""

__version__ = "0.3.0"
