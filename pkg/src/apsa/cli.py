"""Command-line surface.

Subcommands: synth, classify, christoffel, fib, enumerate, corpus gen,
corpus verify.  Output is machine readable: space-separated key=value pairs,
one record per line.  Exit codes: 0 success, 1 verification failure,
2 invalid parameters, 3 I/O or file-format error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import corpus as corpus_mod
from .christoffel import (
    christoffel_bwt,
    christoffel_sa_params,
    christoffel_word,
    factorization_index,
)
from .core import APPerm, ap_detect, ap_materialize
from .enumeration import enumerate_strings
from .errors import CorpusFormatError, NotCoprimeError
from .lyndonlab import (
    fibonacci_lengths,
    fibonacci_swapped,
    fibonacci_word,
    is_balanced,
    is_lyndon,
)
from .synthesis import SynthCase, classify, synth
from .textindex import compact_runs, rotate_runs, suffix_array

__all__ = ["main"]


def _perm_from_args(args) -> APPerm:
    return APPerm(args.n, args.k, args.p1)


def _predicted_runs(perm: APPerm, sizes: Sequence[int]) -> str:
    sorted_runs = tuple(
        (chr(96 + rank), size) for rank, size in enumerate(sizes, start=1) if size > 0
    )
    t = perm.n - perm.k_inverse if perm.n > 1 else 0
    return compact_runs(rotate_runs(sorted_runs, t % perm.n))


def _cmd_synth(args) -> int:
    perm = _perm_from_args(args)
    if args.sigma is None and not args.splits:
        result = synth(perm)
    else:
        from .synthesis import synth_general

        sigma = args.sigma if args.sigma is not None else classify(perm)[1]
        values = [int(v) for v in args.splits.split(",")] if args.splits else []
        result = synth_general(perm, sigma, values)
    parts = [f"text={result.text}", f"case={result.case.value}"]
    if result.s is not None:
        parts.append(f"s={result.s}")
    parts.append(f"p_s={result.p_s}")
    if result.predicted_period is not None:
        parts.append(f"period={result.predicted_period}")
    parts.append(f"bwt={_predicted_runs(perm, result.split.sizes(perm.n))}")
    print(" ".join(parts))
    return 0


def _smallest_period(text: str) -> Optional[int]:
    n = len(text)
    fail = [0] * (n + 1)
    j = 0
    for i in range(2, n + 1):
        while j and text[i - 1] != text[j]:
            j = fail[j]
        if text[i - 1] == text[j]:
            j += 1
        fail[i] = j
    period = n - fail[n]
    return period if period < n else None


def _cmd_classify(args) -> int:
    text = args.text
    if not text:
        print("error: empty text", file=sys.stderr)
        return 2
    perm = ap_detect(list(suffix_array(text).sa))
    if perm is None:
        print("ap=false")
        return 0
    parts = [
        "ap=true",
        f"n={perm.n}",
        f"k={perm.k}",
        f"p1={perm.p1}",
        f"case={classify(perm)[0].value}",
    ]
    period = _smallest_period(text)
    if period is not None:
        parts.append(f"period={period}")
    parts.append(f"lyndon={'true' if is_lyndon(text) else 'false'}")
    if set(text) <= {"a", "b"}:
        parts.append(f"balanced={'true' if is_balanced(text) else 'false'}")
    print(" ".join(parts))
    return 0


def _cmd_christoffel(args) -> int:
    word = christoffel_word(args.p, args.q)
    parts = [f"word={word}", f"n={len(word)}"]
    if args.p >= 1 and args.q >= 1:
        perm = christoffel_sa_params(args.p, args.q)
        parts += [
            f"k={perm.k}",
            f"p1={perm.p1}",
            f"s={args.p}",
            f"bwt={compact_runs(christoffel_bwt(args.p, args.q).runs)}",
        ]
        if len(word) >= 2:
            parts.append(f"fact_index={factorization_index(args.p, args.q)}")
    print(" ".join(parts))
    return 0


def _cmd_fib(args) -> int:
    fw = fibonacci_word(args.m)
    f = fibonacci_lengths(max(args.m, 2))
    ratio = f[args.m - 3] if args.m >= 3 else 1
    parts = [f"m={args.m}", f"word={fw.word}", f"length={fw.length}", f"ratio={ratio}"]
    if args.m % 2:
        parts.append(f"ap_word=swapped swapped={fibonacci_swapped(args.m)}")
    else:
        parts.append("ap_word=word")
    print(" ".join(parts))
    return 0


def _cmd_enumerate(args) -> int:
    perm = _perm_from_args(args)
    strings = list(enumerate_strings(perm, args.sigma))
    print(f"count={len(strings)} strings=[{','.join(strings)}]")
    return 0


def _cmd_corpus_gen(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",")]
    cases = args.cases.split(",")
    manifest = corpus_mod.generate_corpus(
        args.out, sizes, cases, args.seed, threads=args.threads
    )
    for entry in manifest.entries:
        print(
            f"id={entry.id} n={entry.n} k={entry.k} p1={entry.p1}"
            f" case={entry.case} text={entry.text_name} sa={entry.sa_name}"
            f" bwt={compact_runs(entry.bwt_runs)}"
        )
    print(f"manifest={corpus_mod.MANIFEST_NAME} entries={len(manifest.entries)}")
    return 0


def _cmd_corpus_verify(args) -> int:
    results = corpus_mod.verify_corpus(
        args.manifest,
        directory=args.dir,
        zero_based=args.zero_based,
        threads=args.threads,
        only_id=args.id,
        sa_override=args.sa,
        bwt_override=args.bwt,
    )
    by_entry: dict[str, list] = {}
    for res in results:
        by_entry.setdefault(res.entry_id, []).append(res)
    failed = False
    for entry_id, group in by_entry.items():
        parts = [f"id={entry_id}"]
        for res in group:
            parts.append(f"{res.check}={'pass' if res.ok else 'fail'}")
            if not res.ok:
                parts.append(f"{res.check}_offset={res.first_bad}")
                failed = True
        print(" ".join(parts))
    print(f"result={'fail' if failed else 'pass'}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apsa",
        description="Synthesize and verify strings with arithmetically progressed suffix arrays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="synthesize the canonical text for (n, k, p1)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--p1", type=int, required=True)
    p.add_argument("--sigma", type=int, default=None, help="alphabet size (default: minimal)")
    p.add_argument("--splits", default="", help="comma-separated free split values")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("classify", help="report whether a text's suffix array progresses arithmetically")
    p.add_argument("text")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("christoffel", help="lower Christoffel word and its index shape")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.set_defaults(func=_cmd_christoffel)

    p = sub.add_parser("fib", help="Fibonacci word and its progression ratio")
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=_cmd_fib)

    p = sub.add_parser("enumerate", help="all strings over a given alphabet with this suffix array")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--p1", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("corpus", help="generate or verify ground-truth corpora")
    corpus_sub = p.add_subparsers(dest="corpus_command", required=True)

    g = corpus_sub.add_parser("gen", help="write texts, suffix-array files, and a manifest")
    g.add_argument("--out", required=True)
    g.add_argument("--sizes", required=True, help="comma-separated lengths")
    g.add_argument("--cases", required=True, help=f"comma-separated cases from {','.join(corpus_mod.CASES)}")
    g.add_argument("--seed", default="0")
    g.add_argument("--threads", type=int, default=None)
    g.set_defaults(func=_cmd_corpus_gen)

    v = corpus_sub.add_parser("verify", help="check candidate SA/BWT files against a manifest")
    v.add_argument("manifest")
    v.add_argument("--dir", default=None, help="directory holding the files (default: beside the manifest)")
    v.add_argument("--id", default=None, help="verify a single entry")
    v.add_argument("--sa", default=None, help="candidate suffix-array file (with --id)")
    v.add_argument("--bwt", default=None, help="candidate BWT file (with --id)")
    v.add_argument("--zero-based", action="store_true", help="candidate SA values are 0-based")
    v.add_argument("--threads", type=int, default=None)
    v.set_defaults(func=_cmd_corpus_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotCoprimeError:
        print("k and n must be coprime", file=sys.stderr)
        return 2
    except CorpusFormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
