"""Command-line front end.

Subcommands:

* ``compile SPEC``  -- print the encoded tape and the tRNA listing
* ``run SPEC``      -- execute mechanically, print the trace and final state
* ``verify SPEC``   -- lockstep-check the mechanical run against the
  classical interpreter
* ``fsm SPEC INPUT`` -- run an FSM spec over an input string
* ``corpus [NAME]`` -- list bundled machines or print one's spec/codec text

SPEC is a bundled machine name or a path to a spec file. Bundled machines use
their bundled codec automatically; ``--codec`` points at an override file.

Exit codes: 0 success, 1 parse/validation failure, 2 codec failure,
3 step limit reached, 4 nondeterministic match fault, 5 verification
divergence.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codec import CodecError, build_codec, parse_codec_overrides
from .corpus import builtin_corpus, corpus_codec_text, corpus_spec_text
from .fsm import FsmError, fsm_run
from .machine import FsmSpec, MachineSpec, SpecError, parse_spec
from .oracle import bisimulate
from .sim import (
    Arrival,
    NondeterminismFault,
    Outcome,
    new_sim,
    step as sim_step,
)
from .tape import decode_tape
from .trna import CompileMode, infer_sides, render_trna_listing

TRACE_FORMAT_HEADER = {"format": "codonmachine-trace", "version": 1}

EXIT_OK = 0
EXIT_SPEC = 1
EXIT_CODEC = 2
EXIT_STEP_LIMIT = 3
EXIT_NONDETERMINISM = 4
EXIT_DIVERGENCE = 5


class _CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_spec(ref: str) -> tuple[MachineSpec | FsmSpec, str | None]:
    """Resolve a corpus name or file path; returns (spec, corpus_name)."""
    corpus = builtin_corpus()
    if ref in corpus:
        return corpus[ref], ref
    try:
        with open(ref, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise _CliFailure(EXIT_SPEC, f"cannot read spec {ref!r}: {e}")
    try:
        return parse_spec(text), None
    except SpecError as e:
        raise _CliFailure(EXIT_SPEC, f"{ref}: {e}")


def _load_codec(spec, corpus_name: str | None, codec_path: str | None):
    try:
        if codec_path:
            with open(codec_path, encoding="utf-8") as f:
                overrides = parse_codec_overrides(f.read())
        elif corpus_name and corpus_codec_text(corpus_name):
            overrides = parse_codec_overrides(corpus_codec_text(corpus_name))
        else:
            overrides = None
        return build_codec(spec, overrides)
    except OSError as e:
        raise _CliFailure(EXIT_CODEC, f"cannot read codec {codec_path!r}: {e}")
    except CodecError as e:
        raise _CliFailure(EXIT_CODEC, f"codec: {e}")


def _require_tm(spec) -> MachineSpec:
    if not isinstance(spec, MachineSpec):
        raise _CliFailure(EXIT_SPEC, "this command needs a Turing machine spec")
    return spec


def _mode(args) -> CompileMode:
    return CompileMode(args.mode)


def cmd_compile(args) -> int:
    spec, corpus_name = _load_spec(args.spec)
    spec = _require_tm(spec)
    codec = _load_codec(spec, corpus_name, args.codec)
    sim = new_sim(spec, codec, _mode(args))
    if _mode(args) is CompileMode.INFERRED:
        for w in infer_sides(spec)[1]:
            print(f"warning: {w}", file=sys.stderr)
    print(sim.tape.render())
    print()
    print(render_trna_listing(list(sim.trnas)))
    return EXIT_OK


def _run_events(sim, arrival, max_steps):
    """Step until halt or budget; yields (sim_after, event)."""
    events = []
    while sim.step_count < max_steps and not sim.halted:
        sim, event = sim_step(sim, arrival)
        if event is None:
            break
        events.append((sim, event))
    if not sim.halted and sim.step_count >= max_steps:
        probe, event = sim_step(sim, arrival)
        if event is None:
            sim = probe
    return sim, events


def cmd_run(args) -> int:
    spec, corpus_name = _load_spec(args.spec)
    spec = _require_tm(spec)
    codec = _load_codec(spec, corpus_name, args.codec)
    arrival = Arrival(args.arrival)
    sim = new_sim(spec, codec, _mode(args), rng_seed=args.seed)
    final = decoded = None
    try:
        if args.format == "structured":
            print(json.dumps(TRACE_FORMAT_HEADER))
            final, events = _run_events(sim, arrival, args.max_steps)
            for _, e in events:
                d = e.decoded_before
                print(
                    json.dumps(
                        {
                            "step": e.step,
                            "rule": e.rule_id,
                            "side": e.side.value,
                            "trials": e.trials,
                            "window_before": e.window_before,
                            "window_after": e.window_after,
                            "state": d.state,
                            "head": d.head_abs,
                            "symbols": "".join(d.symbols),
                        },
                        ensure_ascii=False,
                    )
                )
        else:
            print(sim.tape.render())
            final, events = _run_events(sim, arrival, args.max_steps)
            for s, e in events:
                trna = next(t for t in final.trnas if t.rule_id == e.rule_id)
                row = trna.read_row(e.side)
                print(f"  {'_'.join(row)}")
                print(f"  {_move_row_text(trna)}")
                print(f"  {'_'.join(trna.write)}")
                print(s.tape.render())
        decoded = decode_tape(final.tape, codec)
        outcome = Outcome.HALTED if final.halted else Outcome.STEP_LIMIT
        summary = {
            "outcome": outcome.value,
            "steps": final.step_count,
            "trials": final.trial_count,
            "state": decoded.state,
            "symbols": "".join(decoded.symbols),
        }
        if args.format == "structured":
            print(json.dumps(summary, ensure_ascii=False))
        else:
            print(f"symbols: {summary['symbols']}")
            print(f"state: {decoded.state if decoded.state else 'halted'}")
            print(f"outcome: {outcome.value}")
            print(f"steps: {final.step_count}")
            print(f"trials: {final.trial_count}")
        return EXIT_OK if outcome is Outcome.HALTED else EXIT_STEP_LIMIT
    except NondeterminismFault as e:
        print(f"nondeterminism fault: {e}", file=sys.stderr)
        return EXIT_NONDETERMINISM


def _move_row_text(trna) -> str:
    state_ones = "1" * len(trna.write[0])
    symbol_ones = "1" * len(trna.write[1])
    first = "0" + state_ones[1:] if trna.hole else state_ones
    return f"{first}_{symbol_ones}_{state_ones}"


def cmd_verify(args) -> int:
    spec, corpus_name = _load_spec(args.spec)
    spec = _require_tm(spec)
    codec = _load_codec(spec, corpus_name, args.codec)
    try:
        verdict = bisimulate(spec, codec, _mode(args), args.max_steps)
    except NondeterminismFault as e:
        print(f"nondeterminism fault: {e}", file=sys.stderr)
        return EXIT_NONDETERMINISM
    if args.format == "structured":
        record = {
            "passed": verdict.passed,
            "steps": verdict.steps,
            "outcome": verdict.outcome.value,
        }
        if verdict.divergence:
            d = verdict.divergence
            record["divergence"] = {
                "step": d.step,
                "kind": d.kind,
                "mechanical": d.mechanical,
                "classical": d.classical,
            }
        print(json.dumps(record, ensure_ascii=False))
    elif verdict.passed:
        print(f"PASS: {verdict.steps} lockstep steps, {verdict.outcome.value}")
    else:
        d = verdict.divergence
        print(
            f"DIVERGENCE at step {d.step}: {d.kind} "
            f"(mechanical {d.mechanical!r} vs classical {d.classical!r})"
        )
    return EXIT_OK if verdict.passed else EXIT_DIVERGENCE


def cmd_fsm(args) -> int:
    spec, corpus_name = _load_spec(args.spec)
    if not isinstance(spec, FsmSpec):
        raise _CliFailure(EXIT_SPEC, "fsm needs an FSM spec")
    codec = _load_codec(spec, corpus_name, args.codec)
    text = args.input
    if any(len(s) > 1 for s in spec.symbols):
        symbols = text.split()
    else:
        symbols = list(text)
    try:
        final, trace = fsm_run(spec, symbols, codec)
    except FsmError as e:
        raise _CliFailure(EXIT_SPEC, str(e))
    for pos, rule_id in trace:
        print(f"{pos}: {symbols[pos]} -> rule {rule_id}")
    print(f"final: {final}")
    return EXIT_OK


def cmd_corpus(args) -> int:
    corpus = builtin_corpus()
    if not args.name:
        for name, spec in sorted(corpus.items()):
            kind = "fsm" if isinstance(spec, FsmSpec) else "tm"
            n_rules = (
                len(spec.transitions) if isinstance(spec, FsmSpec) else len(spec.rules)
            )
            print(
                f"{name}: {kind}, {len(spec.states)} states, "
                f"{len(spec.symbols)} symbols, {n_rules} rules"
            )
        return EXIT_OK
    if args.name not in corpus:
        raise _CliFailure(EXIT_SPEC, f"no bundled machine named {args.name!r}")
    if args.part == "codec":
        text = corpus_codec_text(args.name)
        if text is None:
            raise _CliFailure(
                EXIT_CODEC, f"{args.name!r} uses the default codec; no override file"
            )
        print(text, end="")
    else:
        print(corpus_spec_text(args.name), end="")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codonmachine",
        description="Compile and run machines as codon tapes and tRNA rules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, codec=True):
        if codec:
            p.add_argument("--codec", help="codec override file")
        p.add_argument(
            "--mode",
            choices=["dual", "inferred"],
            default="dual",
            help="read-row compilation mode (default: dual)",
        )

    p = sub.add_parser("compile", help="print encoded tape and tRNA listing")
    p.add_argument("spec", help="corpus name or spec file")
    common(p)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("run", help="execute the mechanical simulation")
    p.add_argument("spec")
    common(p)
    p.add_argument(
        "--arrival",
        choices=["deterministic", "stochastic"],
        default="deterministic",
    )
    p.add_argument("--seed", type=int, default=None, help="stochastic arrival seed")
    p.add_argument("--max-steps", type=int, default=10_000)
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="lockstep-check against the classical run")
    p.add_argument("spec")
    common(p)
    p.add_argument("--max-steps", type=int, default=10_000)
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fsm", help="run an FSM over an input string")
    p.add_argument("spec")
    p.add_argument("input")
    p.add_argument("--codec", help="codec override file")
    p.set_defaults(func=cmd_fsm)

    p = sub.add_parser("corpus", help="list or print bundled machines")
    p.add_argument("name", nargs="?")
    p.add_argument("--part", choices=["spec", "codec"], default="spec")
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliFailure as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except SpecError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SPEC
    except CodecError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CODEC


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
