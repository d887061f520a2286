"""Balanced codons and the symbol/state <-> codon assignment.

A codon is a fixed-length bit string written most-significant-bit first. A
write-form codon is balanced: exactly floor(n/2) of its n bits are ones. The
matching read form is the bitwise complement (lock and key). The halt state
gets the all-ones codon of the state length; it is never balanced, so it sits
outside the enumerable capacity and is never assigned to a named state.

Symbol codons must have even length; state codons may be odd or even.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .machine import FsmSpec, MachineSpec


class CodecError(ValueError):
    """Bad codon assignment: wrong length/balance, duplicate, or overflow."""


def capacity(n: int) -> int:
    """Number of balanced codons of length n: C(n, floor(n/2))."""
    if n < 1:
        raise ValueError(f"codon length must be positive, got {n}")
    return math.comb(n, n // 2)


def enumerate_balanced(n: int) -> list[str]:
    """All length-n bit strings with exactly floor(n/2) ones, numerically ascending."""
    if n < 1:
        raise ValueError(f"codon length must be positive, got {n}")
    k = n // 2
    if k == 0:
        return ["0" * n]
    out = []
    v = (1 << k) - 1
    limit = 1 << n
    while v < limit:
        out.append(format(v, f"0{n}b"))
        # Gosper's hack: next integer with the same popcount
        low = v & -v
        ripple = v + low
        v = ripple | (((v ^ ripple) >> 2) // low)
    return out


def read_form(codon: str) -> str:
    """Bitwise complement; involution mapping write forms to read forms."""
    return "".join("1" if b == "0" else "0" for b in codon)


def min_lengths(num_symbols: int, num_states: int) -> tuple[int, int]:
    """Smallest even symbol length and smallest state length with room.

    The halt codon is the all-ones extra and never counts against state
    capacity.
    """
    if num_symbols < 1 or num_states < 1:
        raise ValueError("need at least one symbol and one state")
    symbol_len = 2
    while capacity(symbol_len) < num_symbols:
        symbol_len += 2
    state_len = 1
    while capacity(state_len) < num_states:
        state_len += 1
    return symbol_len, state_len


@dataclass(frozen=True)
class CodecOverrides:
    """Explicit assignment choices layered over the default enumeration."""

    symbol_len: int | None = None
    state_len: int | None = None
    symbols: dict[str, str] | None = None
    states: dict[str, str] | None = None


def parse_codec_overrides(text: str) -> CodecOverrides:
    """Parse an override file.

    Lines: ``symbol <name> <bits>``, ``state <name> <bits>``,
    ``symbol-len <n>``, ``state-len <n>``. Blank lines are ignored.
    """
    symbol_len = state_len = None
    symbols: dict[str, str] = {}
    states: dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind in ("symbol-len", "state-len") and len(tokens) == 2:
            try:
                value = int(tokens[1])
            except ValueError:
                raise CodecError(f"line {line_no}: bad length {tokens[1]!r}")
            if kind == "symbol-len":
                symbol_len = value
            else:
                state_len = value
        elif kind in ("symbol", "state") and len(tokens) == 3:
            name, bits = tokens[1], tokens[2]
            if not bits or set(bits) - {"0", "1"}:
                raise CodecError(f"line {line_no}: bad codon {bits!r}")
            target = symbols if kind == "symbol" else states
            if name in target:
                raise CodecError(f"line {line_no}: duplicate override for {name!r}")
            target[name] = bits
        else:
            raise CodecError(f"line {line_no}: cannot parse {line!r}")
    return CodecOverrides(
        symbol_len=symbol_len,
        state_len=state_len,
        symbols=symbols or None,
        states=states or None,
    )


@dataclass(frozen=True)
class Codec:
    symbol_len: int
    state_len: int
    symbol_write: dict[str, str]
    state_write: dict[str, str]

    @property
    def halt_state(self) -> str:
        return "1" * self.state_len

    def symbol_name(self, codon: str) -> str | None:
        """Reverse-map a write codon to its symbol name, if assigned."""
        for name, bits in self.symbol_write.items():
            if bits == codon:
                return name
        return None

    def state_name(self, codon: str) -> str | None:
        for name, bits in self.state_write.items():
            if bits == codon:
                return name
        return None


def trna_width(codec: Codec) -> int:
    """Total field width of one tRNA row: state + symbol + state."""
    return 2 * codec.state_len + codec.symbol_len


def _is_balanced(bits: str) -> bool:
    return bits.count("1") == len(bits) // 2


def build_codec(
    spec: MachineSpec | FsmSpec, overrides: CodecOverrides | None = None
) -> Codec:
    """Assign write codons to every declared symbol and state.

    The default maps the i-th declared name to the i-th balanced codon in
    ascending numeric order; overrides replace individual assignments and may
    widen the lengths. The halt codon (all ones at the state length) is
    implicit and reserved.
    """
    ov = overrides or CodecOverrides()
    symbol_len, state_len = min_lengths(len(spec.symbols), len(spec.states))
    if ov.symbol_len is not None:
        symbol_len = ov.symbol_len
    if ov.state_len is not None:
        state_len = ov.state_len
    if symbol_len % 2:
        raise CodecError(f"symbol codon length must be even, got {symbol_len}")
    if state_len < 1:
        raise CodecError(f"state codon length must be positive, got {state_len}")
    if capacity(symbol_len) < len(spec.symbols):
        raise CodecError(
            f"{len(spec.symbols)} symbols exceed capacity {capacity(symbol_len)} "
            f"of length {symbol_len}"
        )
    if capacity(state_len) < len(spec.states):
        raise CodecError(
            f"{len(spec.states)} states exceed capacity {capacity(state_len)} "
            f"of length {state_len}"
        )

    symbol_write = dict(zip(spec.symbols, enumerate_balanced(symbol_len)))
    state_write = dict(zip(spec.states, enumerate_balanced(state_len)))
    for name, bits in (ov.symbols or {}).items():
        if name not in symbol_write:
            raise CodecError(f"override for undeclared symbol {name!r}")
        symbol_write[name] = bits
    for name, bits in (ov.states or {}).items():
        if name not in state_write:
            raise CodecError(f"override for undeclared state {name!r}")
        state_write[name] = bits

    halt = "1" * state_len
    for kind, length, assigned in (
        ("symbol", symbol_len, symbol_write),
        ("state", state_len, state_write),
    ):
        for name, bits in assigned.items():
            if len(bits) != length:
                raise CodecError(
                    f"{kind} {name!r}: codon {bits} has length {len(bits)}, expected {length}"
                )
            if kind == "state" and bits == halt:
                raise CodecError(f"state {name!r} assigned the reserved halt codon {halt}")
            if not _is_balanced(bits):
                raise CodecError(f"{kind} {name!r}: codon {bits} is not balanced")
        if len(set(assigned.values())) != len(assigned):
            raise CodecError(f"duplicate {kind} codon assignment")

    return Codec(
        symbol_len=symbol_len,
        state_len=state_len,
        symbol_write=symbol_write,
        state_write=state_write,
    )
