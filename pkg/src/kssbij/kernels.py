"""Selects the insertion kernel: compiled extension if importable, else pure Python."""

try:
    from kssbij import _speedups as _impl

    BACKEND = "compiled"
except ImportError:  # extension not built on this platform
    from kssbij import _insertion as _impl

    BACKEND = "pure-python"

bump = _impl.bump
insert_word = _impl.insert_word
inverse_bump = _impl.inverse_bump
