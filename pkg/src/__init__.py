"""
fps-transcend - exact formal power series toolkit
Decomposition identities, division bounds and transcendence criteria over the rationals
"""

__version__ = "1.0.0"
__description__ = "Exact formal power series toolkit with a JSON batch CLI"
