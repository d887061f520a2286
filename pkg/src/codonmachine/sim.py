"""Mechanical execution: match, write, move.

Each step compares tRNA read rows against the current window by bitwise
complement. The matching tRNA's write row replaces the window; the window then
shifts one cell left when the move row carries a hole, otherwise one cell
right, growing the tape with default-symbol cells as needed. When nothing
matches -- every slot around the head holds the halt codon -- the machine has
halted.

Arrival order is either deterministic (scan the pool in order, trials = scan
position of the match) or stochastic (sample read rows uniformly with
replacement until the match arrives, trials = number of draws). The sampling
pool is the individual read rows, so a dual-compiled ruleset of 25 records
offers 50 arrivals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from enum import Enum

from .codec import Codec, read_form
from .machine import MachineSpec
from .tape import DecodedConfig, EncodedTape, decode_tape, encode_tape, grow
from .trna import CompileMode, Side, Trna, compile_ruleset


class Arrival(Enum):
    DETERMINISTIC = "deterministic"
    STOCHASTIC = "stochastic"


class Outcome(Enum):
    HALTED = "halted"
    STEP_LIMIT = "step-limit"


DEFAULT_MAX_STEPS = 10_000


class NondeterminismFault(RuntimeError):
    """Two distinct tRNA matched one window; the compile is corrupt."""


@dataclass(frozen=True)
class SimInstance:
    tape: EncodedTape
    trnas: tuple[Trna, ...]
    codec: Codec
    default_codon: str
    rng_seed: int | None = None
    step_count: int = 0
    trial_count: int = 0
    halted: bool = False


@dataclass(frozen=True)
class TraceEvent:
    step: int  # 1-based
    rule_id: int
    side: Side
    trials: int
    window_before: str
    window_after: str
    decoded_before: DecodedConfig


def new_sim(
    spec: MachineSpec,
    codec: Codec,
    mode: CompileMode = CompileMode.DUAL,
    rng_seed: int | None = None,
    trnas: list[Trna] | None = None,
) -> SimInstance:
    """Compile and encode a machine into a runnable instance.

    ``trnas`` overrides the compiled ruleset (fault injection, tests).
    """
    if trnas is None:
        trnas = compile_ruleset(spec, codec, mode)
    return SimInstance(
        tape=encode_tape(spec, codec),
        trnas=tuple(trnas),
        codec=codec,
        default_codon=codec.symbol_write[spec.default_symbol],
        rng_seed=rng_seed,
    )


def match_window(trna: Trna, window: tuple[str, str, str]) -> Side | None:
    """The side whose read row equals the window's fieldwise complement."""
    key = tuple(read_form(f) for f in window)
    for side, row in trna.reads:
        if row == key:
            return side
    return None


def apply_trna(trna: Trna, sim: SimInstance) -> SimInstance:
    """Push the write row down over the window, then shift the window."""
    tape = sim.tape
    w = tape.window
    slots = list(tape.state_slots)
    cells = list(tape.symbol_cells)
    slots[w], cells[w], slots[w + 1] = trna.write
    new_window = w - 1 if trna.hole else w + 1
    tape = replace(
        tape,
        state_slots=tuple(slots),
        symbol_cells=tuple(cells),
        window=new_window,
    )
    if new_window < 0:
        tape = grow(tape, "left", sim.default_codon)
    elif new_window >= len(tape.symbol_cells):
        tape = grow(tape, "right", sim.default_codon)
    return replace(sim, tape=tape, step_count=sim.step_count + 1)


def _row_pool(sim: SimInstance) -> list[tuple[Trna, Side, tuple[str, str, str]]]:
    return [(t, side, row) for t in sim.trnas for side, row in t.reads]


def step(
    sim: SimInstance, arrival: Arrival = Arrival.DETERMINISTIC
) -> tuple[SimInstance, TraceEvent | None]:
    """One match-write-move attempt; no event means the machine just halted."""
    if sim.halted:
        raise ValueError("machine already halted")
    window = sim.tape.window_triple()
    pool = _row_pool(sim)
    key = tuple(read_form(f) for f in window)
    matches = [
        (i, t, side) for i, (t, side, row) in enumerate(pool) if row == key
    ]
    if not matches:
        return replace(sim, halted=True), None
    if len({t.rule_id for _, t, _ in matches}) > 1:
        ids = sorted(t.rule_id for _, t, _ in matches)
        raise NondeterminismFault(f"rules {ids} all match window {window}")
    scan_index, trna, side = matches[0]
    if arrival is Arrival.DETERMINISTIC:
        trials = scan_index + 1
    else:
        rng = (
            random.Random()
            if sim.rng_seed is None
            else random.Random(sim.rng_seed * 1_000_003 + sim.step_count)
        )
        trials = 1
        while rng.randrange(len(pool)) != scan_index:
            trials += 1
    decoded_before = decode_tape(sim.tape, sim.codec)
    after = apply_trna(trna, sim)
    after = replace(after, trial_count=after.trial_count + trials)
    event = TraceEvent(
        step=after.step_count,
        rule_id=trna.rule_id,
        side=side,
        trials=trials,
        window_before="_".join(window),
        window_after="_".join(after.tape.window_triple()),
        decoded_before=decoded_before,
    )
    return after, event


def run(
    sim: SimInstance,
    max_steps: int = DEFAULT_MAX_STEPS,
    arrival: Arrival = Arrival.DETERMINISTIC,
) -> tuple[SimInstance, list[TraceEvent], Outcome]:
    """Step until halt or the step budget runs out."""
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    trace: list[TraceEvent] = []
    if sim.halted:
        return sim, trace, Outcome.HALTED
    while sim.step_count < max_steps:
        sim, event = step(sim, arrival)
        if event is None:
            return sim, trace, Outcome.HALTED
        trace.append(event)
    # allow a trailing halt check so a machine that halts exactly at the
    # budget reports HALTED rather than STEP_LIMIT
    probe, event = step(sim, arrival)
    if event is None:
        return probe, trace, Outcome.HALTED
    return sim, trace, Outcome.STEP_LIMIT
