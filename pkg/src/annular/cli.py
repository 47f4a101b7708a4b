"""Command-line surface for the library.

Four core subcommands plus one evidence table:

* ``enumerate`` — list a gluing or non-crossing family with its count;
* ``verify``    — exhaustively check one of the named bijections or set
  equalities and report the outcome;
* ``moment``    — a matrix-ensemble moment, symbolically or evaluated,
  optionally with a Monte Carlo cross-check;
* ``classify``  — every family membership of a single permutation;
* ``conjecture`` — the surmised twisted-vs-annular count table
  (evidence only, never a pass/fail).

Each invocation writes exactly one JSON document to stdout (CSV instead
where ``--format csv`` is supported: counts and tables only, since cycle
notation contains commas).  Diagnostics go to stderr.  Exit codes:
0 success/verified, 1 enumeration cap exceeded, 2 usage error,
3 verification failure (the report is still emitted).

Apart from the measured ``timing_ms`` field, output is a deterministic
byte-for-byte function of the arguments (and seed); ``--threads``
selects the worker-pool width but can never change any output.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from fractions import Fraction

from .bijections import (
    conjecture_table,
    verify_a_hat_equality,
    verify_a_tilde_equality,
    verify_lemma3,
    verify_phi1,
    verify_phi1_hat,
    verify_phi1_tilde,
    verify_phi2,
    verify_phi2_hat,
    verify_phi2_tilde,
    verify_torus_equality,
)
from .frames import annulus_cycle, full_cycle, tau0
from .maps import (
    family_a,
    family_a_hat,
    family_a_tilde,
    family_b,
    family_b_hat,
    family_b_tilde,
    has_hat_twist,
    has_twist,
    is_bipartite_pairing,
    is_bipartite_signed_pairing,
    nonorientable_euler_genus,
    nonorientable_white_grade,
    orientable_genus,
    orientable_white_grade,
)
from .moments import Ensemble, wick_moment
from .montecarlo import GENERATOR_NAME, mc_moment
from .noncrossing import (
    GRADED_TAGS,
    NCFamilyId,
    family_nc,
    is_delta_symmetric,
    is_noncrossing,
)
from .perms import (
    Permutation,
    as_pairing,
    compose,
    conjugate,
    inverse,
    num_cycles,
    parse_cycles,
    signed_ground,
    unsigned_ground,
)
from .streams import CapExceeded, EnumerationBudget, budget_from_environment

__all__ = ["main", "classify_permutation", "SCHEMA_VERSION"]

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_CAP = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3

#: CLI family tag -> library tag for the non-crossing families.
NC_TAGS = {
    "nc": "NC",
    "nc2": "NC2",
    "nc-delta": "NCdelta",
    "nc2-delta": "NC2delta",
    "nc2-t": "NC2T",
    "nc2-k": "NC2K",
    "nc2-delta-bip": "NC2delta_bip",
    "nc2-t-bip": "NC2T_bip",
    "nc2-k-bip": "NC2K_bip",
    "nc-delta-p": "NCdelta_p",
    "nc-t-p": "NCT_p",
    "nc-k-p": "NCK_p",
}

#: Gluing/hypermap families: tag -> (enumerator, grade parameter, takes p).
RIBBON_TAGS = {
    "a": (family_a, "genus", False),
    "b": (family_b, "k", False),
    "a-tilde": (family_a_tilde, "genus", True),
    "b-tilde": (family_b_tilde, "k", True),
    "a-hat": (family_a_hat, "genus", True),
    "b-hat": (family_b_hat, "k", True),
}

FAMILY_TAGS = tuple(RIBBON_TAGS) + tuple(NC_TAGS)

BIJECTION_TAGS = (
    "phi1",
    "phi2",
    "torus-eq",
    "phi1-tilde",
    "phi2-tilde",
    "a-tilde-eq",
    "phi1-hat",
    "phi2-hat",
    "a-hat-eq",
    "lemma3",
)

_GRADED_VERIFIERS = {
    "phi1-tilde": verify_phi1_tilde,
    "phi2-tilde": verify_phi2_tilde,
    "a-tilde-eq": verify_a_tilde_equality,
    "phi1-hat": verify_phi1_hat,
    "phi2-hat": verify_phi2_hat,
    "a-hat-eq": verify_a_hat_equality,
}

_UNGRADED_VERIFIERS = {
    "phi1": verify_phi1,
    "phi2": verify_phi2,
    "torus-eq": verify_torus_equality,
}


class UsageError(ValueError):
    """A post-parse argument problem; maps to exit code 2."""


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--max-elements",
        type=int,
        default=None,
        metavar="K",
        help="cap every enumeration stream at K elements (overrides the "
        "ANNULAR_MAX_ELEMENTS environment variable); exceeding it exits 1",
    )
    sub.add_argument(
        "--threads",
        type=int,
        default=1,
        metavar="T",
        help="worker-pool width; outputs are identical for every T",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annular",
        description="Enumerate gluing and annular non-crossing families, "
        "verify their bijections, and compute matrix-ensemble moments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser(
        "enumerate", help="list one family in cycle notation, with its count"
    )
    p_enum.add_argument("--family", required=True, choices=FAMILY_TAGS)
    p_enum.add_argument("--n", required=True, type=int)
    p_enum.add_argument("--genus", type=int, default=None, help="orientable genus g")
    p_enum.add_argument("--k", type=int, default=None, help="Euler genus k")
    p_enum.add_argument("--p", type=int, default=None, help="grade (part count)")
    p_enum.add_argument(
        "--limit",
        type=int,
        default=None,
        metavar="L",
        help="list at most L elements (the count is always exact)",
    )
    p_enum.add_argument("--format", choices=("json", "csv"), default="json")
    _add_common(p_enum)

    p_verify = sub.add_parser(
        "verify", help="exhaustively check one bijection / set equality"
    )
    p_verify.add_argument("--bijection", required=True, choices=BIJECTION_TAGS)
    p_verify.add_argument("--n", required=True, type=int)
    p_verify.add_argument(
        "--p", type=int, default=None, help="single grade (default: all grades)"
    )
    _add_common(p_verify)

    p_moment = sub.add_parser(
        "moment", help="an ensemble moment: symbolic, exact numeric, or Monte Carlo"
    )
    p_moment.add_argument(
        "--ensemble", required=True, choices=("gue", "goe", "lue", "loe")
    )
    p_moment.add_argument("--order", required=True, type=int)
    p_moment.add_argument(
        "--symbolic", action="store_true", help="emit the moment polynomial"
    )
    p_moment.add_argument("--dim", type=int, default=None, metavar="N")
    p_moment.add_argument(
        "--rect-dim",
        type=int,
        default=None,
        metavar="M",
        help="second Ginibre dimension (Laguerre ensembles only)",
    )
    p_moment.add_argument(
        "--mc", action="store_true", help="add a Monte Carlo estimate and z-score"
    )
    p_moment.add_argument("--samples", type=int, default=100_000)
    p_moment.add_argument("--seed", type=int, default=0)
    _add_common(p_moment)

    p_classify = sub.add_parser(
        "classify", help="report every family membership of one permutation"
    )
    p_classify.add_argument(
        "--perm", required=True, help='cycle notation, e.g. "(1,3)(2,4)"'
    )
    p_classify.add_argument("--n", required=True, type=int)
    p_classify.add_argument(
        "--signed",
        action="store_true",
        help="read the permutation on the signed set {-n..-1, 1..n}",
    )
    _add_common(p_classify)

    p_conj = sub.add_parser(
        "conjecture",
        help="tabulate the surmised twisted-vs-annular count identity "
        "(evidence only)",
    )
    p_conj.add_argument("--max-n", type=int, default=3)
    p_conj.add_argument("--format", choices=("json", "csv"), default="json")
    _add_common(p_conj)

    return parser


def _resolve_budget(args: argparse.Namespace) -> EnumerationBudget | None:
    if args.max_elements is not None:
        if args.max_elements < 0:
            raise UsageError("--max-elements must be >= 0")
        return EnumerationBudget(args.max_elements, on_overflow="error")
    return budget_from_environment()


def _check_threads(args: argparse.Namespace) -> None:
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------

def _params_enumerate(args) -> dict:
    return {
        "family": args.family,
        "n": args.n,
        "genus": args.genus,
        "k": args.k,
        "p": args.p,
        "limit": args.limit,
        "max_elements": args.max_elements,
        "threads": args.threads,
    }


def _require_grade_args(
    tag: str, args, *, genus: bool, k: bool, p: bool
) -> None:
    wanted = {"--genus": genus, "--k": k, "--p": p}
    given = {
        "--genus": args.genus is not None,
        "--k": args.k is not None,
        "--p": args.p is not None,
    }
    for flag, need in wanted.items():
        if need and not given[flag]:
            raise UsageError(f"family {tag!r} requires {flag}")
        if not need and given[flag]:
            raise UsageError(f"family {tag!r} does not take {flag}")


def cmd_enumerate(args, budget) -> tuple[dict, int, list | None]:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.limit is not None and args.limit < 0:
        raise UsageError("--limit must be >= 0")
    tag = args.family
    witness_table = None
    if tag in RIBBON_TAGS:
        enumerate_fn, grade_flag, takes_p = RIBBON_TAGS[tag]
        _require_grade_args(
            tag, args, genus=grade_flag == "genus", k=grade_flag == "k", p=takes_p
        )
        grade = args.genus if grade_flag == "genus" else args.k
        if grade_flag == "genus" and grade < 0:
            raise UsageError("--genus must be >= 0")
        try:
            if takes_p:
                members = enumerate_fn(args.n, grade, args.p, budget=budget)
            else:
                members = enumerate_fn(args.n, grade, budget=budget)
        except CapExceeded:
            raise
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        members = tuple(sorted(members, key=lambda q: q.sort_key()))
    else:
        lib_tag = NC_TAGS[tag]
        p = args.p if lib_tag in GRADED_TAGS else None
        _require_grade_args(tag, args, genus=False, k=False, p=lib_tag in GRADED_TAGS)
        try:
            fid = NCFamilyId(lib_tag, args.n, p)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        family = family_nc(fid, budget=budget)
        members = family.members
        witness_table = family.witness_table

    count = len(members)
    shown = count if args.limit is None else min(args.limit, count)
    result = {
        "family": tag,
        "n": args.n,
        "count": count,
        "elements": [q.cycle_string() for q in members[:shown]],
        "listed": shown,
        "truncated_listing": shown < count,
    }
    if args.genus is not None:
        result["genus"] = args.genus
    if args.k is not None:
        result["k"] = args.k
    if args.p is not None:
        result["p"] = args.p
    if witness_table is not None:
        result["witnesses"] = [
            [list(w) for w in ws] for ws in witness_table[:shown]
        ]
    csv_rows = None
    if args.format == "csv":
        csv_rows = [
            ["family", "n", "genus", "k", "p", "count"],
            [tag, args.n, args.genus, args.k, args.p, count],
        ]
    return result, EXIT_OK, csv_rows


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _params_verify(args) -> dict:
    return {
        "bijection": args.bijection,
        "n": args.n,
        "p": args.p,
        "max_elements": args.max_elements,
        "threads": args.threads,
    }


def cmd_verify(args, budget) -> tuple[dict, int, list | None]:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    tag = args.bijection
    try:
        if tag in _UNGRADED_VERIFIERS:
            if args.p is not None:
                raise UsageError(f"bijection {tag!r} does not take --p")
            reports = [_UNGRADED_VERIFIERS[tag](args.n, budget=budget)]
        elif tag in _GRADED_VERIFIERS:
            fn = _GRADED_VERIFIERS[tag]
            if args.p is not None:
                if not 1 <= args.p <= args.n:
                    raise UsageError("--p must lie in 1..n")
                reports = [fn(args.n, args.p, budget=budget)]
            else:
                reports = [fn(args.n, p, budget=budget) for p in range(1, args.n + 1)]
        else:  # lemma3
            if args.p is not None:
                raise UsageError("bijection 'lemma3' does not take --p")
            reports = list(verify_lemma3(args.n, budget=budget))
    except CapExceeded:
        raise
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    all_verified = all(r.verified for r in reports)
    result = {
        "bijection": tag,
        "n": args.n,
        "reports": [r.to_payload() for r in reports],
        "all_verified": all_verified,
    }
    return result, EXIT_OK if all_verified else EXIT_VERIFY, None


# ---------------------------------------------------------------------------
# moment
# ---------------------------------------------------------------------------

def _params_moment(args) -> dict:
    return {
        "ensemble": args.ensemble,
        "order": args.order,
        "symbolic": args.symbolic,
        "dim": args.dim,
        "rect_dim": args.rect_dim,
        "mc": args.mc,
        "samples": args.samples if args.mc else None,
        "seed": args.seed if args.mc else None,
        "max_elements": args.max_elements,
        "threads": args.threads,
    }


def cmd_moment(args, budget) -> tuple[dict, int, list | None]:
    ensemble = Ensemble.parse(args.ensemble)
    if args.symbolic == (args.dim is not None):
        raise UsageError("choose exactly one of --symbolic or --dim N")
    if args.mc and args.dim is None:
        raise UsageError("--mc requires numeric mode (--dim N)")
    if args.rect_dim is not None and not ensemble.is_laguerre:
        raise UsageError("--rect-dim applies to Laguerre ensembles only")
    if args.dim is not None:
        if args.dim < 1:
            raise UsageError("--dim must be >= 1")
        if ensemble.is_laguerre:
            if args.rect_dim is None:
                raise UsageError(
                    f"ensemble {ensemble.kind} requires --rect-dim M with --dim"
                )
            if args.rect_dim < 1:
                raise UsageError("--rect-dim must be >= 1")

    try:
        poly = wick_moment(ensemble, args.order, budget=budget)
    except CapExceeded:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    result: dict = {
        "ensemble": ensemble.kind,
        "order": args.order,
        "polynomial": poly.to_json_dict(),
        "text": str(poly),
    }
    if args.symbolic:
        result["mode"] = "symbolic"
        return result, EXIT_OK, None

    result["mode"] = "numeric"
    result["dim"] = args.dim
    c = Fraction(1)
    if ensemble.is_laguerre:
        result["rect_dim"] = args.rect_dim
        c = Fraction(args.rect_dim, args.dim)
    value = poly.evaluate(args.dim, c)
    result["value"] = {"num": str(value.numerator), "den": str(value.denominator)}
    result["value_float"] = float(value)

    if args.mc:
        try:
            estimate = mc_moment(
                ensemble,
                args.order,
                args.dim,
                args.rect_dim,
                samples=args.samples,
                seed=args.seed,
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        exact = float(value)
        if estimate.std_error > 0:
            z = (estimate.mean - exact) / estimate.std_error
        else:
            z = 0.0 if estimate.mean == exact else math.inf
        result["mc"] = estimate.to_payload()
        result["mc"]["generator"] = GENERATOR_NAME
        result["mc"]["z_score"] = z
    return result, EXIT_OK, None


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def _params_classify(args) -> dict:
    return {
        "perm": args.perm,
        "n": args.n,
        "signed": args.signed,
        "max_elements": args.max_elements,
        "threads": args.threads,
    }


def _try_pairing(pi: Permutation):
    try:
        return as_pairing(pi)
    except ValueError:
        return None


def _nc_membership(result: list, fid: NCFamilyId, pi: Permutation, budget) -> None:
    """Append a membership entry (with witnesses for union families)."""
    family = family_nc(fid, budget=budget)
    if pi not in family:
        return
    entry: dict = {"family": fid.tag, "n": fid.n}
    if fid.p is not None:
        entry["p"] = fid.p
    if family.witness_table is not None:
        entry["witnesses"] = [list(w) for w in family.witnesses_for(pi)]
    result.append(entry)


def _classify_unsigned(pi: Permutation, n: int, budget) -> list[dict]:
    memberships: list[dict] = []
    pairing = _try_pairing(pi)
    if pairing is not None:
        g = orientable_genus(pairing)
        memberships.append({"family": "a", "n": n, "genus": g})
        if is_bipartite_pairing(pairing):
            memberships.append(
                {
                    "family": "a-tilde",
                    "n": n // 2,
                    "genus": g,
                    "p": orientable_white_grade(pairing),
                }
            )
    # hypermap grading: part count p and face count fix the genus
    p = num_cycles(pi)
    faces = num_cycles(compose(inverse(pi), full_cycle(n)))
    doubled_genus = n - p + 1 - faces
    if doubled_genus >= 0 and doubled_genus % 2 == 0:
        memberships.append(
            {"family": "a-hat", "n": n, "genus": doubled_genus // 2, "p": p}
        )
    if is_noncrossing(pi, full_cycle(n)):
        memberships.append({"family": "NC", "n": n})
        if pairing is not None:
            memberships.append({"family": "NC2", "n": n})
    if n >= 3:
        if pairing is not None:
            _nc_membership(memberships, NCFamilyId("NC2T", n), pi, budget)
            if n % 2 == 0 and is_bipartite_pairing(pairing):
                _nc_membership(
                    memberships,
                    NCFamilyId("NC2T_bip", n, orientable_white_grade(pairing)),
                    pi,
                    budget,
                )
        _nc_membership(memberships, NCFamilyId("NCT_p", n, p), pi, budget)
    return memberships


def _classify_signed(pi: Permutation, n: int, budget) -> list[dict]:
    memberships: list[dict] = []
    mirror = conjugate(pi, tau0(n)) == inverse(pi)
    pairing = _try_pairing(pi)
    if pairing is not None and mirror and has_twist(pairing):
        k = nonorientable_euler_genus(pairing)
        memberships.append({"family": "b", "n": n, "k": k})
        if is_bipartite_signed_pairing(pairing):
            memberships.append(
                {
                    "family": "b-tilde",
                    "n": n // 2,
                    "k": k,
                    "p": nonorientable_white_grade(pairing),
                }
            )
    if mirror and has_hat_twist(pi) and num_cycles(pi) % 2 == 0:
        p = num_cycles(pi) // 2
        boundary = num_cycles(compose(annulus_cycle(n), pi))
        if boundary % 2 == 0:
            k = n - p + 1 - boundary // 2
            if k >= 1:
                memberships.append({"family": "b-hat", "n": n, "k": k, "p": p})
    delta = is_delta_symmetric(pi)
    if delta and is_noncrossing(pi, annulus_cycle(n)):
        memberships.append({"family": "NCdelta", "n": n})
        if pairing is not None:
            memberships.append({"family": "NC2delta", "n": n})
        if num_cycles(pi) % 2 == 0:
            _nc_membership(
                memberships, NCFamilyId("NCdelta_p", n, num_cycles(pi) // 2), pi, budget
            )
    if n >= 2:
        if pairing is not None:
            _nc_membership(memberships, NCFamilyId("NC2K", n), pi, budget)
            if n % 2 == 0 and is_bipartite_signed_pairing(pairing):
                _nc_membership(
                    memberships,
                    NCFamilyId("NC2K_bip", n, nonorientable_white_grade(pairing)),
                    pi,
                    budget,
                )
        if delta and num_cycles(pi) % 2 == 0:
            _nc_membership(
                memberships, NCFamilyId("NCK_p", n, num_cycles(pi) // 2), pi, budget
            )
    if pairing is not None and is_bipartite_signed_pairing(pairing) and mirror:
        _nc_membership(
            memberships,
            NCFamilyId("NC2delta_bip", n, nonorientable_white_grade(pairing)),
            pi,
            budget,
        )
    return memberships


def classify_permutation(
    text: str, n: int, *, signed: bool = False, budget=None
) -> dict:
    """Parse ``text`` on [n] or ±[n] and report every family membership.

    Union-family memberships carry their (u, v) frame witnesses; graded
    memberships carry the grade.  Raises ``ValueError`` on a parse
    failure and propagates ``CapExceeded`` from the membership scans.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    domain = signed_ground(n) if signed else unsigned_ground(n)
    pi = parse_cycles(text, domain)
    pairing = _try_pairing(pi)
    report = {
        "permutation": pi.cycle_string(),
        "n": n,
        "signed": signed,
        "cycle_count": num_cycles(pi),
        "is_pairing": pairing is not None,
    }
    if signed:
        report["mirror_symmetric"] = conjugate(pi, tau0(n)) == inverse(pi)
        report["delta_symmetric"] = is_delta_symmetric(pi)
        report["memberships"] = _classify_signed(pi, n, budget)
    else:
        report["memberships"] = _classify_unsigned(pi, n, budget)
    return report


def cmd_classify(args, budget) -> tuple[dict, int, list | None]:
    try:
        result = classify_permutation(
            args.perm, args.n, signed=args.signed, budget=budget
        )
    except CapExceeded:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return result, EXIT_OK, None


# ---------------------------------------------------------------------------
# conjecture table
# ---------------------------------------------------------------------------

def _params_conjecture(args) -> dict:
    return {
        "max_n": args.max_n,
        "max_elements": args.max_elements,
        "threads": args.threads,
    }


def cmd_conjecture(args, budget) -> tuple[dict, int, list | None]:
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    rows = conjecture_table(args.max_n, budget=budget)
    result = {
        "rows": [row.to_payload() for row in rows],
        "all_equal": all(row.equal for row in rows),
        "note": "surmised identity; table is evidence, not a verification",
    }
    csv_rows = None
    if args.format == "csv":
        csv_rows = [["n", "p", "twisted_count", "annular_count", "equal"]]
        csv_rows += [
            [row.n, row.p, row.twisted_count, row.annular_count, row.equal]
            for row in rows
        ]
    return result, EXIT_OK, csv_rows


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

_HANDLERS = {
    "enumerate": (cmd_enumerate, _params_enumerate),
    "verify": (cmd_verify, _params_verify),
    "moment": (cmd_moment, _params_moment),
    "classify": (cmd_classify, _params_classify),
    "conjecture": (cmd_conjecture, _params_conjecture),
}


def _emit(record: dict, csv_rows: list | None, stdout) -> None:
    if csv_rows is not None:
        writer = csv.writer(stdout, lineterminator="\n")
        writer.writerows(csv_rows)
    else:
        stdout.write(json.dumps(record, indent=2, sort_keys=True) + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage, 0 on --help
        return int(exc.code or 0)

    handler, params_fn = _HANDLERS[args.command]
    parameters = params_fn(args)
    start = time.perf_counter()
    try:
        _check_threads(args)
        budget = _resolve_budget(args)
        result, code, csv_rows = handler(args, budget)
    except CapExceeded as exc:
        result = {
            "error": {
                "type": "cap-exceeded",
                "message": str(exc),
                "requested": exc.requested,
                "cap": exc.cap,
            }
        }
        code, csv_rows = EXIT_CAP, None
    except (UsageError, ValueError) as exc:
        print(f"annular {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    record = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "parameters": parameters,
        "result": result,
        "timing_ms": int(round((time.perf_counter() - start) * 1000)),
    }
    _emit(record, csv_rows, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
