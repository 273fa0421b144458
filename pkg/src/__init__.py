"""
motivic-ts Package

Motivic zeta functions, Milnor fibres and the Thom-Sebastiani identity,
checked through finite-field realizations.
"""

__version__ = "1.0.0"
__author__ = "motivic-ts"
__license__ = "MIT"

# Avoid imports here to prevent circular dependencies
