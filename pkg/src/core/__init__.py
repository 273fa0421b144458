# ============================================================
# src/core/__init__.py
# ============================================================
"""
Core computations: finite fields, the class ring, series, arc spaces,
convolution, resolution strata and value-group sums.

"""
