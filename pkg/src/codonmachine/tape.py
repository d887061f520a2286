"""Encoded tapes: alternating state slots and symbol cells.

A tape of n symbols encodes as n symbol cells (write codons) interleaved with
n+1 state slots, starting and ending with a slot. Slot i sits immediately left
of cell i. Every slot holds the halt codon except at most one, which carries
the live state. The ``window`` is the index of the symbol cell the machine
will read next; its triple is (slot[window], cell[window], slot[window+1]).
``origin`` maps cell 0 to an absolute position so grown tapes stay aligned
with a classical run.

Rendered form: all fields joined with underscores, e.g.
``001_01_111_10_111``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Literal

from .codec import Codec
from .machine import MachineSpec


class TapeError(ValueError):
    """Encoding or decoding failure."""


@dataclass(frozen=True)
class EncodedTape:
    state_slots: tuple[str, ...]
    symbol_cells: tuple[str, ...]
    window: int
    origin: int = 0

    def __post_init__(self):
        if len(self.state_slots) != len(self.symbol_cells) + 1:
            raise TapeError(
                f"{len(self.state_slots)} slots cannot frame "
                f"{len(self.symbol_cells)} cells"
            )

    def render(self) -> str:
        fields = []
        for slot, cell in zip(self.state_slots, self.symbol_cells):
            fields.append(slot)
            fields.append(cell)
        fields.append(self.state_slots[-1])
        return "_".join(fields)

    def window_triple(self) -> tuple[str, str, str]:
        w = self.window
        return (self.state_slots[w], self.symbol_cells[w], self.state_slots[w + 1])


@dataclass(frozen=True)
class DecodedConfig:
    """Classical view of an encoded tape; state None means halted."""

    symbols: tuple[str, ...]
    state: str | None
    head: int | None
    origin: int = 0

    @property
    def head_abs(self) -> int | None:
        return None if self.head is None else self.origin + self.head


def encode_tape(spec: MachineSpec, codec: Codec) -> EncodedTape:
    """Translate a machine's tape: write codons per cell, halt codons in every
    slot except the one left of the head, which holds the initial state."""
    if not spec.tape:
        raise TapeError("cannot encode an empty tape: no head cell")
    try:
        cells = tuple(codec.symbol_write[s] for s in spec.tape)
    except KeyError as e:
        raise TapeError(f"tape symbol {e.args[0]!r} has no codon") from None
    if spec.initial_state not in codec.state_write:
        raise TapeError(f"initial state {spec.initial_state!r} has no codon")
    halt = codec.halt_state
    slots = [halt] * (len(cells) + 1)
    slots[spec.head] = codec.state_write[spec.initial_state]
    return EncodedTape(
        state_slots=tuple(slots), symbol_cells=cells, window=spec.head, origin=0
    )


def grow(tape: EncodedTape, side: Literal["left", "right"], default_codon: str) -> EncodedTape:
    """Extend by one default-symbol cell plus one halt slot on the given side."""
    halt = "1" * len(tape.state_slots[0])
    if side == "right":
        return replace(
            tape,
            state_slots=tape.state_slots + (halt,),
            symbol_cells=tape.symbol_cells + (default_codon,),
        )
    if side == "left":
        return replace(
            tape,
            state_slots=(halt,) + tape.state_slots,
            symbol_cells=(default_codon,) + tape.symbol_cells,
            window=tape.window + 1,
            origin=tape.origin - 1,
        )
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def decode_tape(tape: EncodedTape, codec: Codec) -> DecodedConfig:
    """Invert the encoding back to (symbols, state, head).

    The head is the window cell when the live slot flanks it (a slot between
    two cells belongs to whichever side the machine is facing); for a tape
    not produced by a simulation the state is taken to sit left of its cell.
    """
    symbols = []
    for i, cell in enumerate(tape.symbol_cells):
        name = codec.symbol_name(cell)
        if name is None:
            raise TapeError(f"cell {i}: {cell} decodes to no known symbol")
        symbols.append(name)
    halt = codec.halt_state
    live = [i for i, slot in enumerate(tape.state_slots) if slot != halt]
    if not live:
        return DecodedConfig(
            symbols=tuple(symbols), state=None, head=None, origin=tape.origin
        )
    if len(live) > 1:
        raise TapeError(f"more than one live state slot: {live}")
    slot_index = live[0]
    state = codec.state_name(tape.state_slots[slot_index])
    if state is None:
        raise TapeError(
            f"slot {slot_index}: {tape.state_slots[slot_index]} decodes to no known state"
        )
    if tape.window in (slot_index - 1, slot_index):
        head = tape.window
    else:
        head = slot_index
    if not 0 <= head < len(tape.symbol_cells):
        head = slot_index - 1 if slot_index == len(tape.symbol_cells) else slot_index
    return DecodedConfig(
        symbols=tuple(symbols), state=state, head=head, origin=tape.origin
    )
