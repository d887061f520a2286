import random

import pytest

from codonmachine import MachineSpec, Move, Rule, builtin_corpus, corpus_codec

STATE_POOL = ["qa", "qb", "qc", "qd"]
SYMBOL_POOL = ["x", "y", "z"]


def random_total_machine(rng: random.Random, max_states=4, max_symbols=3) -> MachineSpec:
    """Random deterministic TM with a total rule table and at least one halt rule."""
    n_states = rng.randint(1, max_states)
    n_symbols = rng.randint(1, max_symbols)
    states = tuple(STATE_POOL[:n_states])
    symbols = tuple(SYMBOL_POOL[:n_symbols])
    rules = []
    pairs = [(q, s) for q in states for s in symbols]
    halt_pair = rng.choice(pairs)
    for q, s in pairs:
        write = rng.choice(symbols)
        if (q, s) == halt_pair or rng.random() < 0.15:
            rules.append(Rule(q, s, write, Move.HALT, None))
        else:
            move = rng.choice([Move.LEFT, Move.RIGHT])
            rules.append(Rule(q, s, write, move, rng.choice(states)))
    tape_len = rng.randint(1, 8)
    tape = tuple(rng.choice(symbols) for _ in range(tape_len))
    return MachineSpec(
        symbols=symbols,
        states=states,
        rules=tuple(rules),
        default_symbol=rng.choice(symbols),
        initial_state=rng.choice(states),
        tape=tape,
        head=rng.randrange(tape_len),
    )


def random_partial_machine(rng: random.Random) -> MachineSpec:
    """Like random_total_machine but with rules randomly dropped (stuck halts)."""
    spec = random_total_machine(rng)
    kept = tuple(r for r in spec.rules if rng.random() < 0.7)
    return MachineSpec(
        symbols=spec.symbols,
        states=spec.states,
        rules=kept,
        default_symbol=spec.default_symbol,
        initial_state=spec.initial_state,
        tape=spec.tape,
        head=spec.head,
    )


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()


@pytest.fixture(scope="session")
def adder(corpus):
    return corpus["unary_adder"]


@pytest.fixture(scope="session")
def adder_codec(adder):
    return corpus_codec("unary_adder")


@pytest.fixture(scope="session")
def utm(corpus):
    return corpus["utm55"]


@pytest.fixture(scope="session")
def utm_codec():
    return corpus_codec("utm55")


# the encoded-tape lines of the unary adder's six-step run, initial first
ADDER_TRACE_LINES = [
    "001_01_111_10_111_10_111_01_111_10_111_01_111",
    "111_01_001_10_111_10_111_01_111_10_111_01_111",
    "111_01_111_01_010_10_111_01_111_10_111_01_111",
    "111_01_111_01_111_10_010_01_111_10_111_01_111",
    "111_01_111_01_111_10_100_10_111_10_111_01_111",
    "111_01_111_01_100_10_111_10_111_10_111_01_111",
    "111_01_111_01_111_10_111_10_111_10_111_01_111",
]

# classical checkpoints of the utm55 corpus run, frozen from the pre-build
# derivation: window [0..22] after the named step, and the halting profile
UTM_WINDOW_AFTER_94 = "dggbbδδδbbδbbbbbδbbcccc"
UTM_WINDOW_AFTER_95 = "dgbbbδδδbbδbbbbbδbbcccc"
UTM_WINDOW_95_HEAD_MASKED = "d|bbbδδδbbδbbbbbδbbcccc"
UTM_HEAD_AFTER_95 = 1
UTM_HALT_STEPS = 98
UTM_FINAL_TAPE = "cbbbbbδδδbbδbbbbbδbbcccc"  # over touched region [-1..22]
UTM_FINAL_HEAD = -1

# incrementer golden value, frozen from the pre-build hand derivation
INCREMENTER_FINAL_TAPE = "##01#1"
INCREMENTER_FINAL_HEAD = 5
INCREMENTER_STEPS = 4
