"""Deterministic 64-bit seed derivation for independent runs.

Sweep cells and ensemble members each get a seed derived from a base seed
plus their coordinates, so results never depend on execution order or on
how work is split across processes.  ``hash()`` is unsuitable (salted per
process for strings); blake2b is stable everywhere.
"""

from __future__ import annotations

import hashlib


def derive_seed(*parts: object) -> int:
    """Collapse a tuple of identifying components into a 64-bit seed."""
    text = "\x1f".join(str(p) for p in parts)
    digest = hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")
