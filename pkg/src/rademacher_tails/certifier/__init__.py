"""Rigorous interval-arithmetic certification of the proof's closed-form inequalities."""

from .interval import Interval

__all__ = [
    "Certificate",
    "Interval",
    "bound_extrema",
    "box_certify_2d",
    "interval_eval",
    "prove_sign",
    "run_named_checks",
]


def __getattr__(name):
    # engine/checks are imported lazily so the interval core stays importable
    # on its own (and cheap to import for library users who never certify)
    if name in {"Certificate", "bound_extrema", "box_certify_2d", "interval_eval", "prove_sign"}:
        from . import engine

        return getattr(engine, name)
    if name == "run_named_checks":
        from . import checks

        return checks.run_named_checks
    raise AttributeError(name)
