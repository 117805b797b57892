"""Shared test helpers."""

from __future__ import annotations

from divsamp.urand import BitSource


class ScriptedSource(BitSource):
    """A bit source that replays a fixed list of numerators.

    Lets tests force samplers onto exact grid points.  The precision of
    every request is checked against the one the script was written for.
    """

    def __init__(self, numerators, p):
        super().__init__(seed=0)
        self._queue = list(numerators)
        self._p = p

    def getrandbits(self, k):
        assert k == self._p, f"script written for p={self._p}, sampler asked for {k}"
        assert self._queue, "script exhausted"
        return self._queue.pop(0)
