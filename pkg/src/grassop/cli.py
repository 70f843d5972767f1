"""Command-line surface.

Subcommands: ``sample`` (random class member), ``adjacent`` (verdict for
two operator files), ``path`` (connecting path), ``clique`` (classify a
family of operators), ``counterexample`` (rank-two pairs failing
invariance), ``verify`` (the seeded property suite).

Exit codes: 0 success, 1 validation or check failure (diagnostic on
stderr), 2 usage error.  The environment variable ``GRASSOP_SEED``
overrides the default seed when no ``--seed`` is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import adjacency as adj
from . import cliques as clq
from . import connectivity as conn
from .errors import GrassopError
from .operators import ClassSignature, random_operator
from .serialization import deserialize_operator, serialize_operator
from .suite import DEFAULT_SEED, SuiteConfig, run_suite

__all__ = ["main"]


def _default_seed() -> int:
    env = os.environ.get("GRASSOP_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise GrassopError(f"GRASSOP_SEED must be an integer, got {env!r}") from exc
    return DEFAULT_SEED


def _reals(text: str) -> tuple[float, ...]:
    return tuple(float(x) for x in text.split(","))


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _load(path: str):
    return deserialize_operator(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, out: str | None):
    if out is None:
        print(text)
    else:
        Path(out).write_text(text + "\n", encoding="utf-8")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grassop",
        description="Adjacency graphs on conjugacy classes of Hermitian operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="emit a random operator for a signature")
    p.add_argument("--sigma", type=_reals, required=True, help="eigenvalues, comma separated")
    p.add_argument("--d", type=_ints, required=True, help="multiplicities, comma separated")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="output file (default: stdout)")

    p = sub.add_parser("adjacent", help="adjacency verdict for two operator files")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("path", help="connect two operator files by adjacent steps")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--out", default=None, help="output file (default: stdout)")

    p = sub.add_parser("clique", help="classify a family of operator files")
    p.add_argument("files", nargs="+")

    p = sub.add_parser(
        "counterexample",
        help="emit a rank-two pair whose difference image is not invariant",
    )
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--c3", action="store_true", help="the fixed 3x3 pair")
    kind.add_argument(
        "--general", action="store_true", help="a fresh random instance"
    )
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--outdir", default=".", help="directory for the two files")

    p = sub.add_parser("verify", help="run the seeded property suite")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-ambient", type=int, default=12)
    p.add_argument("--json", action="store_true", help="canonical JSON report")
    return parser


def _cmd_sample(args) -> int:
    sig = ClassSignature(args.sigma, args.d, sum(args.d))
    seed = args.seed if args.seed is not None else _default_seed()
    op = random_operator(sig, np.random.default_rng(seed))
    _emit(serialize_operator(op), args.out)
    return 0


def _cmd_adjacent(args) -> int:
    a, b = _load(args.a), _load(args.b)
    verdict = adj.is_adjacent(a, b)
    print(
        json.dumps(
            {
                "a1": verdict.a1,
                "a2": verdict.a2,
                "rank": verdict.diff_rank,
                "adjacent": verdict.adjacent,
                "type": list(verdict.type_pair) if verdict.type_pair else None,
            }
        )
    )
    return 0


def _cmd_path(args) -> int:
    a, b = _load(args.a), _load(args.b)
    path = conn.connect(a, b)
    doc = {
        "length": len(path),
        "edge_types": [list(t) for t in path.edge_types],
        "vertices": [json.loads(serialize_operator(v)) for v in path.vertices],
    }
    _emit(json.dumps(doc), args.out)
    return 0


def _cmd_clique(args) -> int:
    ops = [_load(f) for f in args.files]
    pair, orientation, _ = clq.classify_clique(ops)
    print(json.dumps({"type": list(pair), "orientation": orientation}))
    return 0


def _cmd_counterexample(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    rng = np.random.default_rng(seed)
    if args.c3:
        a, b = adj.pseudo_adjacent_c3()
    else:
        from .operators import ClassSignature as Sig

        base = random_operator(Sig((1.0, 2.0, 0.0), (1, 1, 4), 6), rng)
        from .subspaces import orthonormalize

        tilted = orthonormalize(
            base.eigenspaces[0].frame[:, 0] + base.eigenspaces[2].frame[:, 0]
        )
        a, b, _ = adj.pseudo_adjacent_general(base.matrix, tilted, 1.3, rng)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    path_a = outdir / "counterexample_a.json"
    path_b = outdir / "counterexample_b.json"
    path_a.write_text(serialize_operator(a) + "\n", encoding="utf-8")
    path_b.write_text(serialize_operator(b) + "\n", encoding="utf-8")
    print(f"{path_a}\n{path_b}")
    return 0


def _cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    config = SuiteConfig(seed=seed, trials=args.trials, max_ambient=args.max_ambient)
    report = run_suite(config)
    if args.json:
        print(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "sample": _cmd_sample,
        "adjacent": _cmd_adjacent,
        "path": _cmd_path,
        "clique": _cmd_clique,
        "counterexample": _cmd_counterexample,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except GrassopError as exc:
        print(f"grassop: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"grassop: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
