"""Command line front end: one-shot subcommands and a small REPL."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .checker import CheckFailure, check_proof
from .prooftree import format_tree
from .search import prove_bounded
from .session import Session, SessionError, check_text
from .syntax import SyntaxError_, parse_sequent

_HELP = """\
Commands:
  goal "<F>"                          start proving the formula F
  goalseq "<A1;...;Am |- B1;...;Bn>"  start on a whole sequent
  step                                apply one proof step
  steps N                             apply N proof steps
  run                                 apply steps until finished or stuck
  fail N "<F>"                        run N steps and insist F stays unproved
  prove --bound N [--emit FILE] "<sequent>"
                                      backtracking search for a checked proof
  check FILE                          check a saved proof tree
  script FILE                         run commands from a file
  help                                this text
  quit                                leave\
"""


def _unquote(text: str) -> str:
    text = text.strip()
    if len(text) >= 2 and text[0] == text[-1] and text[0] in "\"'":
        return text[1:-1]
    return text


def _count_and_rest(arg: str) -> tuple[int, str]:
    parts = arg.split(None, 1)
    if not parts:
        raise SessionError("a step count is required")
    try:
        n = int(parts[0])
    except ValueError:
        raise SessionError(f"bad step count {parts[0]!r}")
    return n, parts[1] if len(parts) > 1 else ""


def bounded_proof_text(text: str, bound: int, emit: str | None = None) -> tuple[str, bool]:
    """Search a sequent at bounds 0..bound; returns (report, proved)."""
    lefts, rights = parse_sequent(_unquote(text))
    for b in range(max(bound, 0) + 1):
        tree = prove_bounded(lefts, rights, b)
        if tree is not None:
            check_proof(tree)  # refuse to emit anything the checker rejects
            out = format_tree(tree)
            if emit:
                Path(emit).write_text(out + "\n")
            return out + f"\nProof found and checked at bound {b}", True
    return f"No proof found within bound {bound}", False


def _parse_prove_args(arg: str) -> tuple[str, int, str | None]:
    bound = 8
    emit: str | None = None
    parts = arg.split()
    i = 0
    while i < len(parts) and parts[i].startswith("--"):
        if parts[i] == "--bound" and i + 1 < len(parts):
            try:
                bound = int(parts[i + 1])
            except ValueError:
                raise SessionError(f"bad bound {parts[i + 1]!r}")
        elif parts[i] == "--emit" and i + 1 < len(parts):
            emit = parts[i + 1]
        else:
            raise SessionError(f"bad prove option {parts[i]!r}")
        i += 2
    text = " ".join(parts[i:])
    if not text:
        raise SessionError("prove needs a sequent")
    return text, bound, emit


def _dispatch(session: Session, verb: str, arg: str) -> str:
    if verb in ("goal", "goalseq"):
        return session.goal(_unquote(arg))
    if verb == "step":
        return session.step(1)
    if verb == "steps":
        n, _ = _count_and_rest(arg)
        return session.step(n)
    if verb == "run":
        return session.run()
    if verb == "fail":
        n, rest = _count_and_rest(arg)
        return session.expect_fail(n, _unquote(rest))
    if verb == "prove":
        text, bound, emit = _parse_prove_args(arg)
        report, _ = bounded_proof_text(text, bound, emit)
        return report
    if verb == "check":
        return check_text(Path(_unquote(arg)).read_text())
    if verb == "script":
        return run_script(session, Path(_unquote(arg)).read_text())
    if verb == "help":
        return _HELP
    return f"Unknown command {verb!r}; try help"


def run_command(session: Session, line: str) -> str:
    parts = line.split(None, 1)
    verb, arg = parts[0], parts[1] if len(parts) > 1 else ""
    try:
        return _dispatch(session, verb, arg)
    except (SyntaxError_, SessionError, CheckFailure, OSError, ValueError) as e:
        return f"Error: {e}"


def run_script(session: Session, text: str) -> str:
    """Run newline-separated commands; lines starting with # are comments."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append("> " + line)
        out.append(run_command(session, line))
    return "\n".join(out)


def repl(stdin=None, stdout=None) -> None:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    session = Session()
    print("Sequent prover. Type help for commands.", file=stdout)
    while True:
        print("> ", end="", file=stdout, flush=True)
        line = stdin.readline()
        if not line:
            break
        line = line.strip()
        if not line:
            continue
        if line.split(None, 1)[0] in ("quit", "exit"):
            break
        print(run_command(session, line), file=stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="seqprover",
        description="Sequent calculus theorem prover for first-order logic",
    )
    sub = parser.add_subparsers(dest="command")

    p_run = sub.add_parser("run", help="run the step engine on a sequent")
    p_run.add_argument("sequent")
    p_run.add_argument(
        "--max-steps", type=int, default=None, help="safety cap on proof steps"
    )

    p_prove = sub.add_parser("prove", help="backtracking search for a checked proof")
    p_prove.add_argument("sequent")
    p_prove.add_argument("--bound", type=int, default=8)
    p_prove.add_argument("--emit", default=None, help="write the proof tree here")

    p_check = sub.add_parser("check", help="check a saved proof tree")
    p_check.add_argument("file")

    p_script = sub.add_parser("script", help="run REPL commands from a file")
    p_script.add_argument("file")

    sub.add_parser("repl", help="interactive session (default)")

    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            session = Session()
            print(session.goal(args.sequent))
            if args.max_steps is None:
                print(session.run())
            else:
                print(session.step(args.max_steps))
            return 0 if not session.table else 1
        if args.command == "prove":
            report, proved = bounded_proof_text(args.sequent, args.bound, args.emit)
            print(report)
            return 0 if proved else 1
        if args.command == "check":
            out = check_text(Path(args.file).read_text())
            print(out)
            if out.startswith("Proof accepted"):
                return 0
            return 2 if out.startswith("Unreadable proof") else 1
        if args.command == "script":
            session = Session()
            print(run_script(session, Path(args.file).read_text()))
            return 0
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except (SyntaxError_, SessionError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    repl()
    return 0


if __name__ == "__main__":
    sys.exit(main())
