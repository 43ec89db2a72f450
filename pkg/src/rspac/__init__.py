"""
rspac - concatenated Reed-Solomon and PAC codes.

Forward-error-correction library and Monte-Carlo simulator for RS-PAC
concatenation (with and without block interleaving) and the RS + rate-1/2
convolutional-code baseline.
"""

__version__ = "0.1.0"
