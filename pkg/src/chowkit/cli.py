"""Command-line front end.

    chowkit binary --f 1,0,-1 --g 1,0,-4 --method bezout
    chowkit hyper-resultant --g 1 --k 2 --f1 ... --f2 ... --a ... --b ... --c ... --d ...
    chowkit verify ba-zero --family hyper --gmax 2 --kmax 12
    chowkit emit scroll3 --format json

Every subcommand turns its flags (or a ``--payload`` JSON document) into a
payload, validates it against ``schemas/<subcommand>.json`` and runs.  Exit
status is 0 on success, 2 on invalid input and 3 when a checked invariant
fails.  Numbers are printed as exact strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import jsonschema
import numpy as np

from . import binary, determinantal, fixtures, hyperelliptic, ternary, veronese
from .arith import GF, Matrix, default_prime, det, format_scalar, parse_scalar
from .fixtures import load_schema
from .grassmann import constant_ratio

FORMATS = ("text", "json", "csv", "latex")


class InputError(ValueError):
    """Bad user input: exit status 2."""


class InvariantFailure(RuntimeError):
    """A verification found a counterexample: exit status 3."""


# ---------------------------------------------------------------------------
# randomness: one seed, one child stream per job index


def job_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


# ---------------------------------------------------------------------------
# parsing


def _scalars(text, field=None) -> list:
    if isinstance(text, list):
        items = [str(x) for x in text]
    else:
        items = [x for x in str(text).split(",") if x.strip()]
    try:
        vals = [parse_scalar(x) for x in items]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot read coefficient list {text!r}: {exc}") from None
    if field is not None:
        try:
            vals = [field(x) for x in vals]
        except ZeroDivisionError:
            raise InputError(f"a denominator in {text!r} vanishes mod {field.p}") from None
    return vals


def _field(payload: dict):
    p = payload.get("prime")
    if p is None:
        return None
    try:
        return GF(int(p))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _validate(name: str, payload: dict) -> dict:
    try:
        jsonschema.validate(payload, load_schema(name))
    except jsonschema.ValidationError as exc:
        where = "/".join(str(x) for x in exc.absolute_path) or "payload"
        raise InputError(f"{name} payload invalid at {where}: {exc.message}") from None
    return payload


def _read_payload(arg: str | None) -> dict:
    if arg is None:
        return {}
    try:
        text = sys.stdin.read() if arg == "-" else open(arg).read()
    except OSError as exc:
        raise InputError(f"cannot read payload: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON payload: {exc}") from None
    if not isinstance(obj, dict):
        raise InputError("payload must be a JSON object")
    return obj


def _payload(args, keys) -> dict:
    """Flags override the --payload document; unset flags are dropped."""
    out = _read_payload(getattr(args, "payload", None))
    for key in keys:
        val = getattr(args, key.replace("-", "_"), None)
        if val is not None:
            out[key] = val
    return out


# ---------------------------------------------------------------------------
# rendering


def _cell(x) -> str:
    if isinstance(x, str):
        return x
    return format_scalar(x) if isinstance(x, (int, Fraction)) or hasattr(x, "p") else str(x)


def render_matrix(rows: list, fmt: str) -> str:
    grid = [[_cell(x) for x in r] for r in rows]
    if fmt == "json":
        return json.dumps(grid, indent=None) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(grid)
        return buf.getvalue()
    if fmt == "latex":
        body = " \\\\\n".join(" & ".join(c.replace("*", " ") for c in r) for r in grid)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}\n"
    w = max((len(c) for r in grid for c in r), default=0)
    return "\n".join("  ".join(c.rjust(w) for c in r) for r in grid) + "\n"


def render_record(rec: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(rec))
        w.writerow([json.dumps(v) if isinstance(v, (list, dict)) else v for v in rec.values()])
        return buf.getvalue()
    if fmt == "latex":
        return "\n".join(f"{k} & {v} \\\\" for k, v in rec.items()) + "\n"
    return "\n".join(f"{k}: {v}" for k, v in rec.items()) + "\n"


def render_report(title: str, rows: list, fmt: str) -> str:
    """rows: list of dicts with a 'status' key."""
    if fmt == "json":
        return json.dumps({"suite": title, "results": rows}, indent=2, sort_keys=True) + "\n"
    keys = list(rows[0]) if rows else ["status"]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(keys)
        w.writerows([[r[k] for k in keys] for r in rows])
        return buf.getvalue()
    if fmt == "latex":
        return "\n".join(" & ".join(str(r[k]) for k in keys) + " \\\\" for r in rows) + "\n"
    lines = [f"# {title}"]
    for r in rows:
        lines.append(" ".join(f"{k}={r[k]}" for k in keys if k != "status") + f" {r['status']}")
    npass = sum(r["status"] == "PASS" for r in rows)
    lines.append(f"{npass}/{len(rows)} PASS")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def cmd_binary(args) -> str:
    pl = _validate("binary", _payload(args, ["f", "g", "method", "prime"]))
    field = _field(pl)
    f, g = _scalars(pl["f"], field), _scalars(pl["g"], field)
    if len(f) != len(g):
        raise InputError(f"f and g must have the same degree (got {len(f) - 1} and {len(g) - 1})")
    if len(f) < 2:
        raise InputError("binary forms need degree >= 1")
    method = pl.get("method", "sylvester")
    if args.dump_matrix:
        if method == "sylvester":
            return render_matrix(binary.sylvester_matrix(f, g).tolist(), args.format)
        return render_matrix([[str(x) for x in r] for r in binary.bezout_bracket_matrix(len(f) - 1)], args.format)
    if method == "both":
        s, b = binary.resultant(f, g, "sylvester"), binary.resultant(f, g, "bezout")
        return render_record({"sylvester": format_scalar(s), "bezout": format_scalar(b)}, args.format)
    value = binary.resultant(f, g, method)
    return _scalar_out(value, args.format)


def _scalar_out(value, fmt: str) -> str:
    text = format_scalar(value)
    if fmt == "json":
        return json.dumps({"value": text}) + "\n"
    return text + "\n"


def cmd_ternary(args) -> str:
    if args.emit:
        name = {"pfaffian-matrix": "pfaffian8", "stiefel-matrix": "stiefel6"}[args.emit]
        return fixtures.emit(name, args.format)
    pl = _validate("ternary-quadrics", _payload(args, ["a", "b", "c", "method", "prime"]))
    field = _field(pl)
    qs = [_scalars(pl[x], field) for x in "abc"]
    if any(len(q) != 6 for q in qs):
        raise InputError("each quadric needs 6 coefficients (x^2, xy, xz, y^2, yz, z^2)")
    method = pl.get("method", "det")
    if method == "pfaffian":
        return _scalar_out(ternary.pfaffian_resultant_quadrics(*qs), args.format)
    return _scalar_out(ternary.resultant_quadrics(*qs), args.format)


def _hyper_instance(pl: dict) -> hyperelliptic.HyperellipticInstance:
    field = _field(pl)
    g, k = pl["g"], pl["k"]
    parts = {x: _scalars(pl[x], field) for x in ("f1", "f2", "a", "b", "c", "d")}
    try:
        inst = hyperelliptic.HyperellipticInstance(g, k, **parts).check()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if "f" in pl:
        f = hyperelliptic._trim(_scalars(pl["f"], field))
        if f != inst.f:
            raise InputError("f does not equal f1*f2")
    return inst


def cmd_hyper(args) -> str:
    keys = ["g", "k", "f", "f1", "f2", "a", "b", "c", "d", "method", "prime"]
    pl = _validate("hyper", _payload(args, keys))
    inst = _hyper_instance(pl)
    method = pl.get("method", "sylvester")
    M = hyperelliptic.hyperelliptic_sylvester(inst) if method == "sylvester" else hyperelliptic.hyperelliptic_bezout(inst)
    if args.dump_matrix:
        return render_matrix(M.tolist(), "json" if args.format == "text" else args.format)
    return _scalar_out(det(M), args.format)


def cmd_elliptic(args) -> str:
    if args.emit:
        return fixtures.emit("elliptic4", args.format)
    pl = _validate("elliptic", _payload(args, ["a", "b", "c", "d", "rho", "prime"]))
    field = _field(pl)
    a, c = _scalars(pl["a"], field), _scalars(pl["c"], field)
    b, d, rho = _scalars(pl["b"], field), _scalars(pl["d"], field), _scalars(pl["rho"], field)
    if len(a) != 3 or len(c) != 3 or len(b) != 1 or len(d) != 1 or len(rho) != 3:
        raise InputError("need --a, --c with 3 coefficients, --b, --d with 1 and --rho with 3")
    try:
        value = hyperelliptic.elliptic_resultant(*a, b[0], *c, d[0], *rho)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return _scalar_out(value, args.format)


def _linear_matrix(pl: dict) -> determinantal.LinearMatrix:
    if "rnc" in pl:
        return determinantal.rnc_matrix(pl["rnc"])
    if "scroll" in pl:
        return determinantal.scroll_matrix(pl["scroll"])
    if "matrix" in pl:
        _validate("linear_matrix", pl["matrix"])
        try:
            return determinantal.LinearMatrix.from_json(pl["matrix"])
        except ValueError as exc:
            raise InputError(str(exc)) from None
    raise InputError("chow-det needs --rnc, --scroll or a payload with a 'matrix'")


def cmd_chow(args) -> str:
    pl = _payload(args, ["rnc", "prime"])
    if args.scroll is not None:
        pl["scroll"] = [int(x) for x in args.scroll.split(",")]
    if args.evaluate is not None:
        pl["evaluate"] = [r.split(",") for r in args.evaluate.split(";")]
    _validate("chow-det", pl)
    try:
        phi = _linear_matrix(pl)
        D = determinantal.chow_form_determinantal(phi)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if "evaluate" in pl:
        field = _field(pl)
        S = Matrix.from_rows([_scalars(r, field) for r in pl["evaluate"]])
        try:
            return _scalar_out(D.evaluate(S), args.format)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if args.expand:
        return str(D.expand()) + "\n"
    return render_matrix([[str(x) for x in r] for r in D.matrix], args.format)


def cmd_tables(args) -> str:
    pl = _validate("tables", _payload(args, ["kind", "n", "k", "d", "h0", "e", "fixture"]))
    kind = pl["kind"]

    def need(*names):
        missing = [x for x in names if x not in pl]
        if missing:
            raise InputError(f"tables {kind} needs --{', --'.join(missing)}")
        return [pl[x] for x in names]

    try:
        if kind == "betti":
            (name,) = need("fixture")
            obj = fixtures.load_fixture(name)
            if obj["kind"] != "betti":
                raise InputError(f"{name} is not a betti table")
            T = veronese.betti_from_fixture(obj)
            return _betti_out(T, args.format)
        if kind == "rank2-p2":
            (d,) = need("d")
            return _betti_out(veronese.rank2_p2_tate_table(d), args.format)
        if kind == "ulrich-rank":
            n, d = need("n", "d")
            lam = veronese.ulrich_partition(n, d)
            rec = {"n": n, "d": d, "partition": list(lam), "rank": veronese.schur_rank(lam, n)}
        elif kind == "weakly-ulrich":
            k, d = need("k", "d")
            r = veronese.weakly_ulrich_line_range(k, d)
            rec = {"k": k, "d": d, "twists": list(r), "nonempty": len(r) > 0}
        elif kind == "min-rank":
            k, d = need("k", "d")
            rec = {"k": k, "d": d, "min_rank_divisor": veronese.min_rank_divisor(k, d)}
        elif kind == "instanton":
            (d,) = need("d")
            rec = {"d": d, "c2": veronese.instanton_c2(d)}
        else:  # chi
            h0, k, d, e = need("h0", "k", "d", "e")
            rec = {"h0": h0, "k": k, "d": d, "e": e, "chi": format_scalar(veronese.ulrich_chi(h0, k, d, e))}
    except (ValueError, fixtures.UnknownFixture) as exc:
        raise InputError(str(exc)) from None
    return render_record(rec, args.format)


def _betti_out(T, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {"top_index": T.top_index, "origin_column": T.origin_column, "rows": [list(r) for r in T.rows]}
        ) + "\n"
    if fmt == "text":
        return T.to_text() + "\n"
    return render_matrix([["..." if x is None else str(x) for x in r] for r in T.rows], fmt)


def cmd_emit(args) -> str:
    try:
        return fixtures.emit(args.name, args.format)
    except fixtures.UnknownFixture as exc:
        raise InputError(exc.args[0]) from None


# ---------------------------------------------------------------------------
# verification suites (module-level jobs so that worker processes can run them)


def _job_ba_hyper(gk):
    g, k = gk
    return {"g": g, "k": k, "status": "PASS" if hyperelliptic.verify_BA_zero_hyper(g, k) else "FAIL"}


def _job_ba_binary(d):
    return {"d": d, "status": "PASS" if binary.verify_BA_zero_binary(d) else "FAIL"}


def _job_hyper_semantics(job):
    (g, k), trials, seed, index, p = job
    rng = job_rng(seed, index)
    F = GF(p)
    pairs, planted_ok, generic_ok = [], True, True
    for _ in range(trials):
        inst = hyperelliptic.random_instance(g, k, F, rng)
        s, b = hyperelliptic.resultant(inst, "sylvester"), hyperelliptic.resultant(inst, "bezout")
        generic_ok &= (s != 0) == (not hyperelliptic.curve_common_zero_oracle(inst))
        pairs.append((s, b))
        pi, _ = hyperelliptic.planted_instance(g, k, F, rng)
        s, b = hyperelliptic.resultant(pi, "sylvester"), hyperelliptic.resultant(pi, "bezout")
        planted_ok &= s == 0 and b == 0
        pairs.append((s, b))
    ratio, _, bad = constant_ratio(pairs)
    ok = planted_ok and generic_ok and bad == 0 and ratio is not None
    return {"g": g, "k": k, "ratio": format_scalar(ratio) if ratio is not None else "none",
            "status": "PASS" if ok else "FAIL"}


def _job_ternary(job):
    trials, seed, index, p = job
    rng = job_rng(seed, index)
    F = GF(p)
    pairs, planted_ok = [], True
    for _ in range(trials):
        P = [F.random(rng) for _ in range(3)]
        if all(x == 0 for x in P):
            continue
        qs = ternary.planted_common_zero_quadrics(P, rng, F)
        d, pf = ternary.resultant_quadrics(*qs), ternary.pfaffian_resultant_quadrics(*qs)
        planted_ok &= d == 0 and pf == 0
        qs = [ternary.random_quadric(rng, F) for _ in range(3)]
        pairs.append((ternary.resultant_quadrics(*qs), ternary.pfaffian_resultant_quadrics(*qs)))
    ratio, _, bad = constant_ratio(pairs)
    nonzero = all(x != 0 for x, _ in pairs)
    ok = planted_ok and nonzero and bad == 0
    return {"trials": trials, "ratio": format_scalar(ratio) if ratio is not None else "none",
            "status": "PASS" if ok else "FAIL"}


def _job_elliptic(job):
    trials, seed, index, p = job
    rng = job_rng(seed, index)
    F = GF(p)
    pairs, planted_ok = [], True
    for _ in range(trials):
        x = [F.random(rng) for _ in range(8)]
        while True:
            rho = [F.random(rng) for _ in range(3)]
            if len({r.v for r in rho}) == 3:
                break
        x += rho
        pairs.append((hyperelliptic.resultant(hyperelliptic.elliptic_as_hyperelliptic(*x), "bezout"),
                      hyperelliptic.elliptic_resultant(*x)))
        y, _ = hyperelliptic.planted_elliptic(F, rng)
        planted_ok &= hyperelliptic.elliptic_resultant(*y) == 0
    ratio, _, bad = constant_ratio(pairs)
    ok = planted_ok and bad == 0 and ratio is not None
    return {"trials": trials, "ratio": format_scalar(ratio) if ratio is not None else "none",
            "status": "PASS" if ok else "FAIL"}


def _job_binary_resultant(job):
    d, trials, seed, index = job
    rng = job_rng(seed, index)
    pairs, oracle_ok = [], True
    for _ in range(trials):
        f = [Fraction(int(x)) for x in rng.integers(-3, 4, d + 1)]
        g = [Fraction(int(x)) for x in rng.integers(-3, 4, d + 1)]
        if all(x == 0 for x in f) or all(x == 0 for x in g):
            continue
        s = binary.sylvester_resultant(f, g)
        oracle_ok &= (s == 0) == binary.common_root_binary(f, g)
        pairs.append((s, binary.bezout_resultant(f, g)))
    ratio, _, bad = constant_ratio(pairs)
    ok = oracle_ok and bad == 0 and ratio == binary.bezout_constant(d)
    return {"d": d, "c_d": format_scalar(ratio) if ratio is not None else "none",
            "status": "PASS" if ok else "FAIL"}


def _run_jobs(fn, jobs, workers: int) -> list:
    if workers <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))  # map keeps job order


def cmd_verify(args) -> str:
    pl = _validate("verify", _payload(args, ["suite", "family", "gmax", "kmax", "dmax", "trials", "seed", "prime", "jobs"]))
    suite = pl["suite"]
    seed, workers = pl.get("seed", 0), pl.get("jobs", 1)
    p = pl.get("prime", default_prime())
    try:
        GF(p)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if suite == "ba-zero":
        family = pl.get("family", "hyper")
        if family == "hyper":
            gmax, kmax = pl.get("gmax", 2), pl.get("kmax", 12)
            if kmax > hyperelliptic.VERIFIED_K:
                print(f"warning: k > {hyperelliptic.VERIFIED_K} lies beyond the verified range", file=sys.stderr)
            jobs = [(g, k) for k in range(1, kmax + 1) for g in range(0, min(gmax, k - 1) + 1)]
            rows = _run_jobs(_job_ba_hyper, jobs, workers)
        else:
            rows = _run_jobs(_job_ba_binary, list(range(1, pl.get("dmax", 12) + 1)), workers)
        title = f"B*A = 0 ({family})"
    elif suite == "hyper":
        gmax, kmax, trials = pl.get("gmax", 2), pl.get("kmax", 5), pl.get("trials", 50)
        pairs = [(g, k) for g in range(gmax + 1) for k in range(g + 1, kmax + 1)]
        rows = _run_jobs(_job_hyper_semantics, [(gk, trials, seed, i, p) for i, gk in enumerate(pairs)], workers)
        title = "hyperelliptic Sylvester vs Bezout"
    elif suite == "ternary":
        rows = _run_jobs(_job_ternary, [(pl.get("trials", 100), seed, 0, p)], 1)
        title = "ternary quadrics Pfaffian vs determinant"
    elif suite == "elliptic":
        rows = _run_jobs(_job_elliptic, [(pl.get("trials", 50), seed, 0, p)], 1)
        title = "elliptic matrix vs hyperelliptic Bezout"
    else:
        dmax, trials = pl.get("dmax", 8), pl.get("trials", 200)
        rows = _run_jobs(_job_binary_resultant, [(d, trials, seed, d) for d in range(1, dmax + 1)], workers)
        title = "binary Sylvester vs Bezout"
    out = render_report(title, rows, args.format)
    if any(r["status"] != "PASS" for r in rows):
        raise InvariantFailure(out)
    return out


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chowkit", description="Chow forms and resultants as bracket determinants.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--prime", type=int, default=None, help="work over Z/p instead of Q")
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("--payload", help="JSON payload file ('-' for stdin); flags override it")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("binary", parents=[common], help="resultant of two binary forms")
    p.add_argument("--f")
    p.add_argument("--g")
    p.add_argument("--method", choices=["sylvester", "bezout", "both"])
    p.add_argument("--dump-matrix", action="store_true")
    p.set_defaults(run=cmd_binary)

    p = sub.add_parser("ternary-quadrics", parents=[common], help="resultant of three ternary quadrics")
    for x in "abc":
        p.add_argument(f"--{x}")
    p.add_argument("--method", choices=["det", "pfaffian"])
    p.add_argument("--emit", choices=["pfaffian-matrix", "stiefel-matrix"])
    p.set_defaults(run=cmd_ternary)

    for name in ("hyper-resultant", "hyper"):
        p = sub.add_parser(name, parents=[common], help="resultant on a hyperelliptic curve")
        p.add_argument("--g", type=int)
        p.add_argument("--k", type=int)
        for x in ("f", "f1", "f2", "a", "b", "c", "d"):
            p.add_argument(f"--{x}")
        p.add_argument("--method", choices=["sylvester", "bezout"])
        p.add_argument("--dump-matrix", action="store_true", help="print the matrix instead of its determinant")
        p.set_defaults(run=cmd_hyper)

    p = sub.add_parser("elliptic", parents=[common], help="resultant of two doubly periodic functions")
    for x in ("a", "b", "c", "d", "rho"):
        p.add_argument(f"--{x}")
    p.add_argument("--emit", action="store_true", help="print the 4x4 bracket matrix")
    p.set_defaults(run=cmd_elliptic)

    p = sub.add_parser("chow-det", parents=[common], help="Chow form of a linear determinantal variety")
    p.add_argument("--rnc", type=int, help="rational normal curve of this degree")
    p.add_argument("--scroll", help="scroll degrees, e.g. 2,1")
    p.add_argument("--evaluate", help="Stiefel rows separated by ';'")
    p.add_argument("--expand", action="store_true", help="expand the determinant symbolically")
    p.set_defaults(run=cmd_chow)

    p = sub.add_parser("tables", parents=[common], help="numerical tables for Veronese embeddings")
    p.add_argument("kind", choices=["ulrich-rank", "weakly-ulrich", "min-rank", "instanton", "chi", "rank2-p2", "betti"])
    for x in ("n", "k", "d", "h0", "e"):
        p.add_argument(f"--{x}", type=int)
    p.add_argument("--fixture")
    p.set_defaults(run=cmd_tables)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=["ba-zero", "hyper", "ternary", "elliptic", "binary"])
    p.add_argument("--family", choices=["hyper", "binary"])
    for x in ("gmax", "kmax", "dmax", "jobs"):
        p.add_argument(f"--{x}", type=int)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("emit", parents=[common], help="print a shipped matrix or table")
    p.add_argument("name")
    p.set_defaults(run=cmd_emit)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)  # argparse exits with status 2 on bad flags
    if args.prime is not None:
        try:
            GF(args.prime)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        out = args.run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantFailure as exc:
        sys.stdout.write(str(exc))
        print("error: invariant failure", file=sys.stderr)
        return 3
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
