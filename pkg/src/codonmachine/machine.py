"""Formal machine descriptions and their text format.

A Turing machine is a list of 5-tuple rules (state, read, write, move,
next-state) over declared symbol and state alphabets, with a finite tape, a
default symbol for everything beyond it, and a head index. A halting rule
writes and stops; it has no next state. A finite-state machine is a total
lookup table (state, symbol) -> state.

The text format is line oriented, one directive per line:

    symbols: 0 1 #
    states: q1 q2
    rule: q1 0 0 R q1
    rule: q2 0 1 H -
    default: #
    initial: q1
    tape: ##01##
    head: 2

FSM files use ``fsm-rule: A 0 A`` lines and omit ``rule``/``default``/
``tape``/``head``. A tape value without whitespace is read one character per
symbol; with whitespace it is read as separated tokens (required when any
symbol name is longer than one character). The token ``delta`` is accepted as
an ASCII alias for the symbol name ``δ`` everywhere a name may appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class SpecError(ValueError):
    """Base class for machine description errors."""


class SpecSyntaxError(SpecError):
    """Malformed spec text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SpecValidationError(SpecError):
    """Structurally well-formed spec that breaks an invariant."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class Move(Enum):
    LEFT = "L"
    RIGHT = "R"
    HALT = "H"


_DELTA_ALIAS = {"delta": "δ"}


def _name(token: str) -> str:
    return _DELTA_ALIAS.get(token, token)


@dataclass(frozen=True)
class Rule:
    """One 5-tuple transition; ``next_state`` is None exactly for halts."""

    state: str
    read_symbol: str
    write_symbol: str
    move: Move
    next_state: str | None = None


@dataclass(frozen=True)
class MachineSpec:
    symbols: tuple[str, ...]
    states: tuple[str, ...]
    rules: tuple[Rule, ...]
    default_symbol: str
    initial_state: str
    tape: tuple[str, ...]
    head: int


@dataclass(frozen=True)
class FsmSpec:
    symbols: tuple[str, ...]
    states: tuple[str, ...]
    transitions: dict[tuple[str, str], str]
    initial_state: str


def validate(spec: MachineSpec) -> list[str]:
    """Return all invariant violations, empty when the spec is valid."""
    v: list[str] = []
    declared_symbols = set(spec.symbols)
    declared_states = set(spec.states)
    if len(declared_symbols) != len(spec.symbols):
        v.append("duplicate symbol declaration")
    if len(declared_states) != len(spec.states):
        v.append("duplicate state declaration")
    seen: dict[tuple[str, str], int] = {}
    for i, r in enumerate(spec.rules):
        where = f"rule {i + 1}"
        if r.state not in declared_states:
            v.append(f"{where}: undeclared state {r.state!r}")
        if r.read_symbol not in declared_symbols:
            v.append(f"{where}: undeclared read symbol {r.read_symbol!r}")
        if r.write_symbol not in declared_symbols:
            v.append(f"{where}: undeclared write symbol {r.write_symbol!r}")
        if r.move is Move.HALT:
            if r.next_state is not None:
                v.append(f"{where}: halt rule must not name a next state")
        else:
            if r.next_state is None:
                v.append(f"{where}: missing next state")
            elif r.next_state not in declared_states:
                v.append(f"{where}: undeclared next state {r.next_state!r}")
        key = (r.state, r.read_symbol)
        if key in seen:
            v.append(
                f"{where}: duplicate (state, symbol) pair {key!r} "
                f"also used by rule {seen[key] + 1}"
            )
        else:
            seen[key] = i
    if spec.default_symbol not in declared_symbols:
        v.append(f"undeclared default symbol {spec.default_symbol!r}")
    if spec.initial_state not in declared_states:
        v.append(f"undeclared initial state {spec.initial_state!r}")
    for i, s in enumerate(spec.tape):
        if s not in declared_symbols:
            v.append(f"tape cell {i}: undeclared symbol {s!r}")
    if not 0 <= spec.head < len(spec.tape):
        v.append(f"head {spec.head} outside tape of length {len(spec.tape)}")
    return v


def validate_fsm(spec: FsmSpec) -> list[str]:
    """Violations for an FSM spec; transitions must be total."""
    v: list[str] = []
    declared_symbols = set(spec.symbols)
    declared_states = set(spec.states)
    if spec.initial_state not in declared_states:
        v.append(f"undeclared initial state {spec.initial_state!r}")
    for (state, symbol), new in spec.transitions.items():
        if state not in declared_states or symbol not in declared_symbols:
            v.append(f"transition on undeclared pair ({state!r}, {symbol!r})")
        if new not in declared_states:
            v.append(f"transition ({state!r}, {symbol!r}) to undeclared state {new!r}")
    for state in spec.states:
        for symbol in spec.symbols:
            if (state, symbol) not in spec.transitions:
                v.append(f"missing transition for ({state!r}, {symbol!r})")
    return v


def _split_tape(value: str, line_no: int) -> tuple[str, ...]:
    if not value:
        raise SpecSyntaxError("empty tape", line_no)
    if any(c.isspace() for c in value):
        return tuple(_name(t) for t in value.split())
    return tuple(_name(c) for c in value)


def _parse_directives(text: str) -> list[tuple[int, str, str]]:
    out = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise SpecSyntaxError("expected 'directive: value'", line_no, len(line) + 1)
        out.append((line_no, key.strip(), value.strip()))
    return out


def _parse_rule(value: str, line_no: int) -> Rule:
    tokens = value.split()
    if len(tokens) != 5:
        raise SpecSyntaxError(
            f"rule needs 5 fields (state read write move next), got {len(tokens)}",
            line_no,
        )
    state, read, write, move_token, next_token = tokens
    try:
        move = Move(move_token)
    except ValueError:
        raise SpecSyntaxError(f"bad move {move_token!r}, expected L, R or H", line_no)
    if move is Move.HALT:
        if next_token != "-":
            raise SpecSyntaxError("halt rule must end with '-'", line_no)
        next_state = None
    else:
        if next_token == "-":
            raise SpecSyntaxError("only halt rules may end with '-'", line_no)
        next_state = _name(next_token)
    return Rule(_name(state), _name(read), _name(write), move, next_state)


def parse_machine_spec(text: str) -> MachineSpec:
    """Parse and validate a Turing machine description.

    Raises SpecSyntaxError on malformed text and SpecValidationError when an
    invariant fails; the result round-trips through serialize_machine_spec.
    """
    symbols: tuple[str, ...] | None = None
    states: tuple[str, ...] | None = None
    rules: list[Rule] = []
    default_symbol = initial_state = None
    tape: tuple[str, ...] | None = None
    head: int | None = None
    for line_no, key, value in _parse_directives(text):
        if key == "symbols":
            symbols = tuple(_name(t) for t in value.split())
        elif key == "states":
            states = tuple(_name(t) for t in value.split())
        elif key == "rule":
            rules.append(_parse_rule(value, line_no))
        elif key == "default":
            default_symbol = _name(value)
        elif key == "initial":
            initial_state = _name(value)
        elif key == "tape":
            tape = _split_tape(value, line_no)
        elif key == "head":
            try:
                head = int(value)
            except ValueError:
                raise SpecSyntaxError(f"head must be an integer, got {value!r}", line_no)
        elif key == "fsm-rule":
            raise SpecSyntaxError("fsm-rule not allowed in a Turing machine spec", line_no)
        else:
            raise SpecSyntaxError(f"unknown directive {key!r}", line_no)
    missing = [
        name
        for name, val in [
            ("symbols", symbols),
            ("states", states),
            ("default", default_symbol),
            ("initial", initial_state),
            ("tape", tape),
            ("head", head),
        ]
        if val is None
    ]
    if missing:
        raise SpecSyntaxError(f"missing directive(s): {', '.join(missing)}", 1)
    spec = MachineSpec(
        symbols=symbols,
        states=states,
        rules=tuple(rules),
        default_symbol=default_symbol,
        initial_state=initial_state,
        tape=tape,
        head=head,
    )
    violations = validate(spec)
    if violations:
        raise SpecValidationError(violations)
    return spec


def parse_fsm_spec(text: str) -> FsmSpec:
    """Parse and validate an FSM description (fsm-rule lines, no tape)."""
    symbols: tuple[str, ...] | None = None
    states: tuple[str, ...] | None = None
    transitions: dict[tuple[str, str], str] = {}
    initial_state = None
    for line_no, key, value in _parse_directives(text):
        if key == "symbols":
            symbols = tuple(_name(t) for t in value.split())
        elif key == "states":
            states = tuple(_name(t) for t in value.split())
        elif key == "fsm-rule":
            tokens = value.split()
            if len(tokens) != 3:
                raise SpecSyntaxError(
                    f"fsm-rule needs 3 fields (state symbol new-state), got {len(tokens)}",
                    line_no,
                )
            state, symbol, new = (_name(t) for t in tokens)
            if (state, symbol) in transitions:
                raise SpecValidationError(
                    [f"duplicate fsm-rule for ({state!r}, {symbol!r})"]
                )
            transitions[(state, symbol)] = new
        elif key == "initial":
            initial_state = _name(value)
        elif key == "rule":
            raise SpecSyntaxError("rule not allowed in an FSM spec", line_no)
        else:
            raise SpecSyntaxError(f"unknown directive {key!r}", line_no)
    missing = [
        name
        for name, val in [
            ("symbols", symbols),
            ("states", states),
            ("initial", initial_state),
        ]
        if val is None
    ]
    if missing:
        raise SpecSyntaxError(f"missing directive(s): {', '.join(missing)}", 1)
    spec = FsmSpec(
        symbols=symbols, states=states, transitions=transitions, initial_state=initial_state
    )
    violations = validate_fsm(spec)
    if violations:
        raise SpecValidationError(violations)
    return spec


def parse_spec(text: str) -> MachineSpec | FsmSpec:
    """Parse either kind of spec, dispatching on the rule directive used."""
    keys = {key for _, key, _ in _parse_directives(text)}
    if "fsm-rule" in keys:
        return parse_fsm_spec(text)
    return parse_machine_spec(text)


def _join_tape(tape: tuple[str, ...]) -> str:
    if all(len(s) == 1 for s in tape):
        return "".join(tape)
    return " ".join(tape)


def serialize_machine_spec(spec: MachineSpec) -> str:
    lines = [
        "symbols: " + " ".join(spec.symbols),
        "states: " + " ".join(spec.states),
    ]
    for r in spec.rules:
        next_token = "-" if r.next_state is None else r.next_state
        lines.append(
            f"rule: {r.state} {r.read_symbol} {r.write_symbol} {r.move.value} {next_token}"
        )
    lines.append(f"default: {spec.default_symbol}")
    lines.append(f"initial: {spec.initial_state}")
    lines.append(f"tape: {_join_tape(spec.tape)}")
    lines.append(f"head: {spec.head}")
    return "\n".join(lines) + "\n"


def serialize_fsm_spec(spec: FsmSpec) -> str:
    lines = [
        "symbols: " + " ".join(spec.symbols),
        "states: " + " ".join(spec.states),
    ]
    for (state, symbol), new in spec.transitions.items():
        lines.append(f"fsm-rule: {state} {symbol} {new}")
    lines.append(f"initial: {spec.initial_state}")
    return "\n".join(lines) + "\n"
