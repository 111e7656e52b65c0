"""
Triangle Moduli Package

Acute triangle moduli, the S3 relabeling action, the modular group acting on
the upper half-plane and the triangle-to-elliptic-curve map.
"""

__version__ = "1.0.0"
__author__ = "Triangle Moduli Team"
