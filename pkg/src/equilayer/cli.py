"""Command-line interface.

Exit codes: 0 success, 2 invalid arguments, 3 resource bound exceeded,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from . import limits
from .basis import (
    BasisElement,
    LayerBasis,
    LocalBasis,
    layer_basis,
    layer_dim,
    local_basis,
    weight_matrix,
    with_features,
)
from .combinatorics import block_labelling, iter_partitions, stirling2
from .documents import DocumentError, MatrixDocument, read_documents
from .group import normalize_group
from .oracle import check_basis, check_local_basis, find_violation, group_action, local_action
from .orbits import splits

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_VERIFY = 4

DENSE_LIMIT = 4096

_SHORT = {"symmetric": "sn", "alternating": "an"}


class VerificationFailed(Exception):
    pass


def _group_arg(text: str) -> str:
    try:
        return normalize_group(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _pos(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _factor(text: str) -> tuple[int, int, int, str]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("factor must be N,K,L,GROUP")
    try:
        n, k, l = int(parts[0]), int(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError("factor must be N,K,L,GROUP") from None
    if n < 1 or k < 0 or l < 0:
        raise argparse.ArgumentTypeError("factor needs n >= 1, k >= 0, l >= 0")
    return n, k, l, _group_arg(parts[3])


def _layer_spec(n, k, l, group, d_k=1, d_l=1) -> dict:
    return {"n": n, "k": k, "l": l, "group": _SHORT[group], "d_k": d_k, "d_l": d_l}


def _element_provenance(i: int, el: BasisElement, l: int) -> dict:
    I, J = block_labelling(el.partition, l, el.partition.m - l)
    feature = None if el.feature_row is None else [el.feature_row, el.feature_col]
    return {
        "index": i,
        "rgs": el.partition.rgs_string(),
        "partition": str(el.partition),
        "block_labelling": [list(I), list(J)],
        "sign_class": el.sign_class,
        "feature": feature,
    }


def _build_basis(args) -> LayerBasis:
    basis = layer_basis(args.n, args.k, args.l, args.group)
    if args.dk != 1 or args.dl != 1:
        basis = with_features(basis, args.dk, args.dl)
    return basis


def _layer_documents(basis: LayerBasis) -> Iterable[MatrixDocument]:
    spec = _layer_spec(basis.n, basis.k, basis.l, basis.group, basis.d_k, basis.d_l)
    for i, el in enumerate(basis.elements):
        yield MatrixDocument("basis_element", spec, el.matrix, _element_provenance(i, el, basis.l))


def _local_documents(basis: LocalBasis) -> Iterable[MatrixDocument]:
    spec = {"factors": [{"n": n, "k": k, "l": l, "group": _SHORT[g]} for n, k, l, g in basis.factors]}
    for i, el in enumerate(basis.elements):
        comps = [
            _element_provenance(j, c, f[2]) for j, c, f in zip(el.indices, el.components, basis.factors)
        ]
        yield MatrixDocument("local_element", spec, el.matrix, {"index": i, "components": comps})


def _fmt(v: Fraction, as_float: bool) -> str:
    if as_float:
        return repr(float(v))
    return str(v)


def _emit(docs: Iterable[MatrixDocument], fmt: str, as_float: bool, out) -> int:
    count = 0
    for doc in docs:
        if fmt == "json":
            out.write(doc.dumps(as_float) + "\n")
        else:
            rows, cols = doc.matrix.shape
            label = doc.provenance.get("partition") or " (x) ".join(
                c["partition"] + {"unsplit": "", "plus": "+", "minus": "-"}[c["sign_class"]]
                for c in doc.provenance.get("components", [])
            )
            sign = doc.provenance.get("sign_class", "")
            out.write(f"# element {doc.provenance.get('index', count)} {label} {sign} shape {rows}x{cols}\n".replace("  ", " "))
            if fmt == "coo":
                for (r, c), v in doc.matrix.items():
                    out.write(f"{r} {c} {_fmt(v, as_float)}\n")
            else:
                if rows * cols > DENSE_LIMIT:
                    raise limits.ResourceBoundError(
                        f"dense output of a {rows}x{cols} matrix exceeds {DENSE_LIMIT} cells; use --format coo"
                    )
                for row in doc.matrix.to_dense():
                    out.write(" ".join(_fmt(v, as_float) for v in row) + "\n")
        count += 1
    return count


def cmd_dim(args, out) -> int:
    m = args.l + args.k
    total = layer_dim(args.n, args.k, args.l, args.group)
    out.write(f"{total}\n")
    if m == 0:
        out.write("t=0 S(0,0)=1 unsplit x1 -> 1\n")
        return EXIT_OK
    for t in range(1, min(args.n, m) + 1):
        s = stirling2(m, t)
        split = args.group == "alternating" and args.n >= 2 and t >= args.n - 1
        mult = 2 if split else 1
        tag = "split" if split else "unsplit"
        out.write(f"t={t} S({m},{t})={s} {tag} x{mult} -> {s * mult}\n")
    return EXIT_OK


def _sketch(rgs: Sequence[int], l: int | None) -> str:
    letters = [chr(ord("a") + x - 1) if x <= 26 else f"<{x}>" for x in rgs]
    if l is None:
        return " ".join(letters)
    return " ".join(letters[:l]) + " | " + " ".join(letters[l:])


def cmd_partitions(args, out) -> int:
    n = args.n if args.n is not None else args.max_blocks
    if args.l is not None and args.l > args.m:
        raise ValueError("--l cannot exceed --m")
    for pi in iter_partitions(args.m, args.max_blocks):
        flag = "splits" if pi.num_blocks <= n and splits(pi, n) else "-"
        rgs = " ".join(map(str, pi.rgs))
        out.write(f"{pi}\trgs=({rgs})\t[{_sketch(pi.rgs, args.l)}]\t{flag}\n")
    return EXIT_OK


def cmd_basis(args, out) -> int:
    _emit(_layer_documents(_build_basis(args)), args.format, args.float, out)
    return EXIT_OK


def _read_params(text: str) -> list[Fraction]:
    path = Path(text)
    if path.is_file():
        text = path.read_text()
        stripped = text.strip()
        if stripped.startswith("["):
            items = json.loads(stripped)
            return [
                Fraction(x[0], x[1]) if isinstance(x, list) else Fraction(str(x)) for x in items
            ]
    tokens = text.replace(",", " ").split()
    try:
        return [Fraction(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"cannot parse parameters: {exc}") from None


def seeded_params(count: int, seed: int) -> list[Fraction]:
    rng = random.Random(seed)
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(count)]


def cmd_weight(args, out) -> int:
    basis = _build_basis(args)
    if args.params is not None:
        params = _read_params(args.params)
    elif args.seed is not None:
        params = seeded_params(len(basis), args.seed)
    else:
        raise ValueError("give --params or --seed")
    if len(params) != len(basis):
        raise ValueError(f"{len(params)} parameters for a basis of size {len(basis)}")
    mat = weight_matrix(basis, params)
    prov = {
        "parameters": [
            {**_element_provenance(i, el, basis.l), "value": [p.numerator, p.denominator]}
            for i, (el, p) in enumerate(zip(basis.elements, params))
        ]
    }
    if args.seed is not None and args.params is None:
        prov["seed"] = args.seed
    doc = MatrixDocument("weight_matrix", _layer_spec(basis.n, basis.k, basis.l, basis.group, basis.d_k, basis.d_l), mat, prov)
    if args.verify:
        _verify_doc(doc)
    _emit([doc], args.format, args.float, out)
    return EXIT_OK


def _verify_doc(doc: MatrixDocument) -> None:
    spec = doc.spec
    if "factors" in spec:
        factors = [(f["n"], f["k"], f["l"], normalize_group(f["group"])) for f in spec["factors"]]
        action = local_action(factors)
        rows = cols = 1
        for n, k, l, _ in factors:
            rows *= n**l
            cols *= n**k
    else:
        n, k, l = spec["n"], spec["k"], spec["l"]
        d_k, d_l = spec.get("d_k", 1), spec.get("d_l", 1)
        action = group_action(n, k, l, normalize_group(spec["group"]), d_k, d_l)
        rows, cols = n**l * d_l, n**k * d_k
    if doc.matrix.shape != (rows, cols):
        raise DocumentError(f"document shape {doc.matrix.shape} does not match spec {(rows, cols)}")
    hit = find_violation(doc.matrix, action)
    if hit is not None:
        sigma, detail = hit
        if isinstance(sigma, tuple):
            sigma = " x ".join(map(str, sigma))
        raise VerificationFailed(f"not equivariant under sigma = {sigma}: {detail}")


def cmd_verify(args, out) -> int:
    stream = sys.stdin if args.input in (None, "-") else open(args.input)
    try:
        docs = read_documents(stream)
    finally:
        if stream is not sys.stdin:
            stream.close()
    for i, doc in enumerate(docs):
        _verify_doc(doc)
        out.write(f"document {i}: equivariant\n")
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    basis = _build_basis(args)
    report = check_basis(basis)
    err = sys.stderr
    err.write(
        f"n={args.n} k={args.k} l={args.l} group={_SHORT[args.group]}: "
        f"brute-force dimension {report.dimension}, constructed {report.size}\n"
    )
    err.write(f"  basis_ok={report.basis_ok} span_ok={report.span_ok}\n")
    if report.full_space:
        err.write("  the equivariant maps fill the entire matrix space\n")
    for f in report.failures:
        err.write(f"  failure: element={f.element} sigma={f.sigma} {f.detail}\n")
    payload = {"spec": _layer_spec(basis.n, basis.k, basis.l, basis.group, basis.d_k, basis.d_l), **report.as_dict()}
    out.write(json.dumps(payload) + "\n")
    return EXIT_OK if report.basis_ok and report.span_ok else EXIT_VERIFY


def cmd_local(args, out) -> int:
    basis = local_basis(args.factor)
    if args.check:
        report = check_local_basis(basis)
        if not (report.basis_ok and report.span_ok):
            for f in report.failures:
                sys.stderr.write(f"failure: {f.detail}\n")
            return EXIT_VERIFY
    _emit(_local_documents(basis), args.format, args.float, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equilayer",
        description="Bases of S_n / A_n equivariant linear layers between tensor power spaces.",
    )
    parser.add_argument("--max-size", type=_pos, default=None,
                        help=f"size guard on matrix cells (env {limits.ENV_MAX_SIZE}, default {limits.DEFAULT_MAX_SIZE})")
    sub = parser.add_subparsers(dest="command", required=True)

    def layer(p, features=True):
        p.add_argument("--n", type=_pos, required=True)
        p.add_argument("--k", type=_nonneg, required=True)
        p.add_argument("--l", type=_nonneg, required=True)
        p.add_argument("--group", type=_group_arg, default="symmetric", help="sn or an")
        if features:
            p.add_argument("--dk", type=_pos, default=1, help="input feature channels")
            p.add_argument("--dl", type=_pos, default=1, help="output feature channels")

    def output(p):
        p.add_argument("--format", choices=["json", "coo", "dense"], default="json")
        p.add_argument("--float", action="store_true", help="print values as floats")

    p = sub.add_parser("dim", help="dimension of the equivariant space")
    layer(p, features=False)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("partitions", help="list set partitions with at most max-blocks blocks")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--max-blocks", type=_nonneg, required=True)
    p.add_argument("--n", type=_pos, default=None, help="group degree for the splits flag (default max-blocks)")
    p.add_argument("--l", type=_nonneg, default=None, help="split the sketch into l output | rest input vertices")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("basis", help="stream basis matrices")
    layer(p)
    output(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("weight", help="weight matrix for given parameters")
    layer(p)
    output(p)
    p.add_argument("--params", default=None, help="file (JSON list or whitespace separated) or inline list like 1,2/3,-1")
    p.add_argument("--seed", type=int, default=None, help="seed for random rational parameters")
    p.add_argument("--verify", action="store_true", help="fail with exit 4 unless equivariant")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("verify", help="check equivariance of matrix documents")
    p.add_argument("--input", default=None, help="document file, default stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force check of the constructed basis")
    layer(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("local", help="bases for direct products acting factor-wise")
    p.add_argument("--factor", type=_factor, action="append", required=True, metavar="N,K,L,GROUP")
    p.add_argument("--check", action="store_true", help="run the brute-force oracle first")
    output(p)
    p.set_defaults(func=cmd_local)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    previous = limits._override
    if args.max_size is not None:
        limits.set_max_size(args.max_size)
    try:
        return args.func(args, out)
    except limits.ResourceBoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    except VerificationFailed as exc:
        sys.stderr.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY
    except (ValueError, DocumentError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    finally:
        limits.set_max_size(previous)


if __name__ == "__main__":
    sys.exit(main())
