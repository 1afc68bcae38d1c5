"""Exact Hilbert-Kunz computations for hypersurfaces in positive characteristic."""

from __future__ import annotations

__version__ = "0.1.0"
