"""Shared exception types."""


class AttackError(RuntimeError):
    """Key recovery failed: the public data admits no solution."""
