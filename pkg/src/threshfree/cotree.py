"""Connected threshold graphs as caterpillar cotrees and creation sequences.

A cotree ``T(a1, ..., ar)`` is a rooted path of internal nodes.  The node at
depth ``i`` carries ``a_i`` leaves; odd depths are joins, even depths unions,
and depth 1 is the root.  The equivalent creation sequence lists vertices
deepest-first, so ``T(2,3,4)`` is ``1^4 0^3 1^2``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

JOIN = "join"
UNION = "union"


class CotreeError(ValueError):
    """Base class for malformed cotree or binary-sequence input."""


class CotreeSyntaxError(CotreeError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class CotreeInvariantError(CotreeError):
    pass


def node_kind(depth: int) -> str:
    return JOIN if depth % 2 == 1 else UNION


@dataclass(frozen=True)
class Cotree:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(a) for a in parts)
        if not parts:
            raise CotreeInvariantError("a cotree needs at least one internal node")
        for i, a in enumerate(parts[:-1], start=1):
            if a < 1:
                raise CotreeInvariantError(f"a_{i} = {a} violates a_i >= 1")
        if parts[-1] < 2:
            raise CotreeInvariantError(f"a_r = {parts[-1]} violates a_r >= 2")
        object.__setattr__(self, "parts", parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def joins(self) -> int:
        return (self.depth + 1) // 2

    @property
    def unions(self) -> int:
        return self.depth // 2

    def kind(self, depth: int) -> str:
        return node_kind(depth)

    def __str__(self) -> str:
        return "T(" + ",".join(map(str, self.parts)) + ")"

    def __repr__(self) -> str:
        return f"Cotree({', '.join(map(str, self.parts))})"

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def to_json(self) -> dict:
        return {"parts": list(self.parts)}

    @classmethod
    def from_json(cls, obj) -> "Cotree":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["parts"])


_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<sym>[T(),]))")


def parse_cotree(text: str) -> Cotree:
    """Parse ``T(a1, ..., ar)``; whitespace between tokens is ignored."""
    pos = 0
    tokens: list[tuple[str, str, int]] = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise CotreeSyntaxError("unexpected character", text, pos + stripped)
        kind = "int" if m.group("int") is not None else m.group("sym")
        tokens.append((kind, m.group(kind if kind == "int" else "sym"), m.start(m.lastgroup)))
        pos = m.end()

    def expect(i: int, want: str) -> None:
        if i >= len(tokens):
            raise CotreeSyntaxError(f"expected {want!r}, got end of input", text, len(text))
        if tokens[i][0] != want:
            raise CotreeSyntaxError(f"expected {want!r}, got {tokens[i][1]!r}", text, tokens[i][2])

    expect(0, "T")
    expect(1, "(")
    parts = []
    i = 2
    while True:
        expect(i, "int")
        parts.append(int(tokens[i][1]))
        i += 1
        if i < len(tokens) and tokens[i][0] == ",":
            i += 1
            continue
        expect(i, ")")
        i += 1
        break
    if i != len(tokens):
        raise CotreeSyntaxError("trailing input", text, tokens[i][2])
    return Cotree(parts)


@dataclass(frozen=True)
class BinarySequence:
    """Creation sequence: bit ``i`` is 1 when vertex ``i`` arrives dominating.

    The first bit names a lone vertex and carries no adjacency information.
    """

    bits: tuple[int, ...]

    def __init__(self, bits: Iterable[int]):
        bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bits):
            raise CotreeError("binary sequence entries must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def run_length(self) -> str:
        out = []
        i = 0
        while i < len(self.bits):
            j = i
            while j < len(self.bits) and self.bits[j] == self.bits[i]:
                j += 1
            out.append(f"{self.bits[i]}^{j - i}")
            i = j
        return " ".join(out)


_RUN = re.compile(r"^([01])\^(\d+)$")


def parse_binary(text: str) -> BinarySequence:
    """Accept ``"111100011"``, ``"1,1,0,1"`` or run-length ``"1^4 0^3 1^2"``."""
    stripped = text.strip()
    if "^" in stripped:
        bits: list[int] = []
        for tok in stripped.replace(",", " ").split():
            m = _RUN.match(tok)
            if not m:
                raise CotreeError(f"bad run-length block {tok!r} in {text!r}")
            bits.extend([int(m.group(1))] * int(m.group(2)))
        return BinarySequence(bits)
    compact = re.sub(r"[\s,()]", "", stripped)
    if not compact or set(compact) - {"0", "1"}:
        raise CotreeError(f"not a binary sequence: {text!r}")
    return BinarySequence(int(c) for c in compact)


def cotree_to_binary(c: Cotree) -> BinarySequence:
    bits: list[int] = []
    for depth in range(c.depth, 0, -1):
        bit = 1 if node_kind(depth) == JOIN else 0
        bits.extend([bit] * c.parts[depth - 1])
    # the first vertex is written as 1 regardless of the block it opens
    bits[0] = 1
    return BinarySequence(bits)


def binary_to_cotree(b: BinarySequence | Sequence[int]) -> Cotree:
    bits = b.bits if isinstance(b, BinarySequence) else tuple(b)
    if not bits:
        raise CotreeError("empty binary sequence")
    if bits[-1] != 1:
        raise CotreeError("final bit is 0: the graph is disconnected")
    if bits[0] != 1:
        raise CotreeError("sequence starts with 0: write the first vertex as 1")
    if len(bits) == 1:
        raise CotreeInvariantError("a single vertex has no cotree with a_r >= 2")
    runs: list[int] = []
    prev = None
    for bit in bits[1:]:
        if bit == prev:
            runs[-1] += 1
        else:
            runs.append(1)
            prev = bit
    runs[0] += 1  # the first vertex joins the block that follows it
    return Cotree(reversed(runs))


def build_adjacency(b: BinarySequence | Sequence[int]) -> np.ndarray:
    bits = np.asarray(b.bits if isinstance(b, BinarySequence) else b, dtype=np.int8)
    n = len(bits)
    idx = np.arange(n)
    # vertex i sees every earlier j iff it was added dominating
    lower = (idx[:, None] > idx[None, :]) & (bits[:, None] == 1)
    adj = (lower | lower.T).astype(np.int8)
    return adj


def poset_leq(g: Cotree, h: Cotree) -> bool:
    """``g`` precedes ``h`` when both have the same depth and ``h`` has at least as many leaves at each node."""
    if g.depth != h.depth:
        return False
    return all(a <= b for a, b in zip(g.parts, h.parts))
