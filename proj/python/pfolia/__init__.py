"""Exact computations with p-closed foliations on A x P^1 in characteristic 2 and 3.

The heavy lifting lives in the compiled extension ``_pfolia``; this package
re-exports its public surface.  The extension is found next to this package
when installed as a wheel, or on ``PYTHONPATH`` in a plain CMake build tree.
"""

try:
    from . import _pfolia as _impl
except ImportError:  # plain build tree: extension sits beside the package
    import _pfolia as _impl

__all__ = [
    "LIE_TYPES",
    "ChartError",
    "ConstraintError",
    "DegenerateInputError",
    "RankError",
    "bracket",
    "census",
    "census_csv",
    "chart_transform",
    "check",
    "gallery",
    "global_lcm",
    "p_power",
    "p_power_oracle",
    "rank2_check",
    "table_conditions",
    "torsion_bound",
    "torsion_catalog",
    "verify_tables",
]

for _name in __all__:
    globals()[_name] = getattr(_impl, _name)
del _name, _impl
