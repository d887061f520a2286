"""Classical reference interpreter and the lockstep equivalence check.

The classical interpreter runs the 5-tuple table over a sparse absolute-
position tape. The bisimulation runs it side by side with the mechanical
simulation: before every step the decoded mechanical tape must agree with the
classical configuration on state, absolute head position, and the symbol
content of every position either run has touched; both must halt together.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .codec import Codec, build_codec
from .machine import MachineSpec, Move
from .sim import Arrival, new_sim, step as mech_step
from .tape import decode_tape
from .trna import CompileMode, Trna

DEFAULT_MAX_STEPS = 10_000


@dataclass
class ClassicalConfig:
    """Sparse tape (default elsewhere), state (None = halted), head position."""

    symbols: dict[int, str] = field(default_factory=dict)
    state: str | None = None
    head: int = 0


def initial_config(spec: MachineSpec) -> ClassicalConfig:
    return ClassicalConfig(
        symbols=dict(enumerate(spec.tape)), state=spec.initial_state, head=spec.head
    )


def _rule_table(spec: MachineSpec):
    return {(r.state, r.read_symbol): r for r in spec.rules}


def tm_step(spec: MachineSpec, cfg: ClassicalConfig) -> ClassicalConfig:
    """One classical step; a missing rule is a stuck halt, not an error."""
    if cfg.state is None:
        raise ValueError("machine already halted")
    read = cfg.symbols.get(cfg.head, spec.default_symbol)
    rule = _rule_table(spec).get((cfg.state, read))
    if rule is None:
        return ClassicalConfig(symbols=dict(cfg.symbols), state=None, head=cfg.head)
    symbols = dict(cfg.symbols)
    symbols[cfg.head] = rule.write_symbol
    if rule.move is Move.HALT:
        return ClassicalConfig(symbols=symbols, state=None, head=cfg.head)
    head = cfg.head + (1 if rule.move is Move.RIGHT else -1)
    return ClassicalConfig(symbols=symbols, state=rule.next_state, head=head)


class RunOutcome(Enum):
    HALTED = "halted"
    STEP_LIMIT = "step-limit"


@dataclass
class TmRunResult:
    config: ClassicalConfig
    steps: int
    outcome: RunOutcome
    min_pos: int
    max_pos: int

    def tape_string(self, spec: MachineSpec, lo: int | None = None, hi: int | None = None) -> str:
        lo = self.min_pos if lo is None else lo
        hi = self.max_pos if hi is None else hi
        return "".join(
            self.config.symbols.get(p, spec.default_symbol) for p in range(lo, hi + 1)
        )


def tm_run(spec: MachineSpec, max_steps: int = DEFAULT_MAX_STEPS) -> TmRunResult:
    """Iterate tm_step, tracking the touched extent (initial cells + visits)."""
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    table = _rule_table(spec)
    cfg = initial_config(spec)
    lo = min(0, cfg.head)
    hi = max(len(spec.tape) - 1, cfg.head)
    steps = 0
    while cfg.state is not None and steps < max_steps:
        read = cfg.symbols.get(cfg.head, spec.default_symbol)
        rule = table.get((cfg.state, read))
        if rule is None:
            cfg = ClassicalConfig(dict(cfg.symbols), None, cfg.head)
            break
        cfg.symbols[cfg.head] = rule.write_symbol
        steps += 1
        if rule.move is Move.HALT:
            cfg.state = None
            break
        cfg.head += 1 if rule.move is Move.RIGHT else -1
        cfg.state = rule.next_state
        lo, hi = min(lo, cfg.head), max(hi, cfg.head)
    outcome = RunOutcome.HALTED if cfg.state is None else RunOutcome.STEP_LIMIT
    return TmRunResult(config=cfg, steps=steps, outcome=outcome, min_pos=lo, max_pos=hi)


@dataclass(frozen=True)
class Divergence:
    step: int
    kind: str  # "state" | "head" | "symbols" | "halting"
    mechanical: str
    classical: str


@dataclass(frozen=True)
class BisimVerdict:
    passed: bool
    steps: int
    outcome: RunOutcome
    divergence: Divergence | None = None


def _mech_view(sim, codec):
    decoded = decode_tape(sim.tape, codec)
    cells = {
        sim.tape.origin + i: name for i, name in enumerate(decoded.symbols)
    }
    return decoded, cells


def bisimulate(
    spec: MachineSpec,
    codec: Codec | None = None,
    mode: CompileMode = CompileMode.DUAL,
    max_steps: int = DEFAULT_MAX_STEPS,
    trnas: list[Trna] | None = None,
) -> BisimVerdict:
    """Prove the mechanical run equivalent to the classical run, step by step.

    ``trnas`` substitutes the compiled ruleset on the mechanical side only
    (useful to demonstrate that a corrupted compile is caught).
    """
    if codec is None:
        codec = build_codec(spec)
    sim = new_sim(spec, codec, mode, trnas=trnas)
    cfg = initial_config(spec)
    lo = min(0, cfg.head)
    hi = max(len(spec.tape) - 1, cfg.head)
    steps_done = 0
    while True:
        decoded, mech_cells = _mech_view(sim, codec)
        # an explicit halt rule leaves no live slot; a stuck machine keeps its
        # live slot but the instance is flagged halted after the failed scan
        mech_halted = sim.halted or decoded.state is None
        cls_halted = cfg.state is None
        if mech_halted != cls_halted:
            return BisimVerdict(
                False,
                steps_done,
                RunOutcome.HALTED,
                Divergence(steps_done, "halting", str(mech_halted), str(cls_halted)),
            )
        region = set(mech_cells) | set(cfg.symbols) | set(range(lo, hi + 1))
        for p in sorted(region):
            m = mech_cells.get(p, spec.default_symbol)
            c = cfg.symbols.get(p, spec.default_symbol)
            if m != c:
                return BisimVerdict(
                    False,
                    steps_done,
                    RunOutcome.HALTED,
                    Divergence(steps_done, "symbols", f"{p}:{m}", f"{p}:{c}"),
                )
        if mech_halted:
            return BisimVerdict(True, steps_done, RunOutcome.HALTED)
        if decoded.state != cfg.state:
            return BisimVerdict(
                False,
                steps_done,
                RunOutcome.HALTED,
                Divergence(steps_done, "state", str(decoded.state), str(cfg.state)),
            )
        if decoded.head_abs != cfg.head:
            return BisimVerdict(
                False,
                steps_done,
                RunOutcome.HALTED,
                Divergence(steps_done, "head", str(decoded.head_abs), str(cfg.head)),
            )
        if steps_done == max_steps:
            return BisimVerdict(True, steps_done, RunOutcome.STEP_LIMIT)
        sim, event = mech_step(sim, Arrival.DETERMINISTIC)
        cfg = tm_step(spec, cfg)
        lo, hi = min(lo, cfg.head), max(hi, cfg.head)
        if event is not None:
            steps_done += 1
