"""Command-line front end.

Every command prints an envelope ``{command, inputs, result, version}``;
``--format json`` prints it as JSON, the default text mode prints the
result as flattened ``key: value`` lines. Exit codes: 0 success, 1 failed
verification, 2 inconclusive verification, 64 usage error, 65 invalid
parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import __version__, actions, verifiers
from .fingroups import (
    BadParam,
    CapExceeded,
    UnknownTag,
    catalog,
    normal_subgroups,
    project_so3,
)
from .fpgroups import abelianization, todd_coxeter

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 64, 65

_INVALID = (
    actions.InvalidParams,
    actions.NoExceptionalOrbits,
    actions.BadParams,
    actions.UnclassifiedTarget,
    actions.UnknownRow,
    actions.DisallowedChain,
    verifiers.NotCoprime,
    verifiers.BadRegime,
    UnknownTag,
    BadParam,
    CapExceeded,
    ValueError,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --------------------------------------------------------------------------
# commands; each returns (inputs, result, exit code)


def _cmd_classify(a):
    return {"m": a.m, "n": a.n, "l": a.l}, actions.classify(a.m, a.n, a.l), EXIT_OK


def _cmd_equiv(a):
    nums = a.numbers
    if len(nums) == 4:
        p, q = (nums[0], nums[1], nums[2]), (nums[0], nums[1], nums[3])
    elif len(nums) == 6:
        p, q = tuple(nums[:3]), tuple(nums[3:])
    else:
        raise UsageError("equiv takes 'm n l l2' or 'm n l m2 n2 l2'")
    p, q = actions.validate(*p), actions.validate(*q)
    result = {"equivalent": actions.are_equivalent(p, q), "rule": actions.equivalence_rule(p, q)}
    return {"first": asdict(p), "second": asdict(q)}, result, EXIT_OK


def _cmd_enum(a):
    classes = actions.enumerate_actions(a.m, a.n, a.lmax)
    result = {"count": len(classes), "classes": [c.l for c in classes]}
    return {"m": a.m, "n": a.n, "lmax": a.lmax}, result, EXIT_OK


def _cmd_slice(a):
    return {"m": a.m, "n": a.n, "l": a.l}, asdict(actions.slice_data((a.m, a.n, a.l))), EXIT_OK


def _cmd_pi1(a):
    args = (a.n1, a.n2, a.b1, a.b2, a.k)
    inputs = dict(zip(("n1", "n2", "b1", "b2", "k"), args), method=a.method)
    order = actions.pi1_order(*args)
    result = {"order": order}
    if a.method == "coset":
        P = actions.pi1_presentation(*args)
        res = todd_coxeter(P, a.max_cosets)
        result["coset"] = res.to_json()
        result["presentation"] = str(P)
        result["abelianization"] = str(abelianization(P))
        if not res.completed:
            return inputs, result, EXIT_INCONCLUSIVE
        if res.order != order:
            result["mismatch"] = True
            return inputs, result, EXIT_FAIL
    return inputs, result, EXIT_OK


def _cmd_fixedset(a):
    fs = actions.fixed_set_principal((a.m, a.n, a.l))
    return {"m": a.m, "n": a.n, "l": a.l}, dict(fs.to_json(), description=str(fs)), EXIT_OK


def _cmd_curvature(a):
    target = a.target
    if len(target) == 3:
        try:
            nums = tuple(int(x) for x in target)
        except ValueError:
            raise UsageError("curvature takes 'm n l' or a catalog action name") from None
        v = actions.curvature_verdict(nums)
        inputs = {"m": nums[0], "n": nums[1], "l": nums[2]}
    elif len(target) == 1:
        v = actions.curvature_verdict(target[0])
        inputs = {"action": target[0]}
    else:
        raise UsageError("curvature takes 'm n l' or a catalog action name")
    return inputs, dict(v.to_json(), note=v.note), EXIT_OK


def _cmd_tables(a):
    result = {
        "table1": [asdict(r) for r in actions.TABLE1],
        "table2": [asdict(r) for r in actions.TABLE2],
        "catalog_actions": {
            name: {"group": c.group, "manifold": str(c.manifold), "description": c.description}
            for name, c in actions.CATALOG_ACTIONS.items()
        },
    }
    return {}, result, EXIT_OK


def _cmd_subgroup(a):
    G = catalog(a.tag, a.param, a.ambient)
    result = G.to_json()
    if a.project:
        result = project_so3(G).to_json()
    if a.normal:
        H = project_so3(G) if a.project else G
        result["normal_subgroups"] = [str(N.iso_type) for N in normal_subgroups(H)]
    inputs = {"tag": a.tag, "param": a.param, "ambient": a.ambient, "project": a.project}
    return inputs, result, EXIT_OK


def _cmd_verify(a):
    bounds = {}
    lemma = a.lemma
    if lemma == "pi1":
        bounds = {"n_max": a.nmax, "k_range": (a.kmin, a.kmax), "max_cosets": a.max_cosets}
    elif lemma == "bijection":
        bounds = {"q1": a.q1, "q2": a.q2, "window": a.window}
    elif lemma == "exceptional-pairs":
        bounds = {"m_max": a.mmax}
    elif lemma == "equiv-counts":
        bounds = {"m": a.m, "n": a.n}
    report = verifiers.run_verifier(lemma, **bounds)
    code = {"Pass": EXIT_OK, "Fail": EXIT_FAIL, "Inconclusive": EXIT_INCONCLUSIVE}[report.status]
    inputs = {"lemma": lemma, **{k: list(v) if isinstance(v, tuple) else v for k, v in bounds.items()}}
    return inputs, report.to_json(), code


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="su2five", description="SO(3)- and SU(2)-actions on simply-connected 5-manifolds")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    def mnl(p):
        for name in ("m", "n", "l"):
            p.add_argument(name, type=int)

    mnl(command("classify", _cmd_classify, "full record for N_{m,n}^l"))
    command("equiv", _cmd_equiv, "equivalence of two actions").add_argument("numbers", type=int, nargs="+")
    p = command("enum", _cmd_enum, "inequivalent actions with given (m, n)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--lmax", type=int, default=20)
    mnl(command("slice", _cmd_slice, "slice data (d, q, a, b, k)"))
    p = command("pi1", _cmd_pi1, "order of the fundamental group")
    for name in ("n1", "n2", "b1", "b2", "k"):
        p.add_argument(name, type=int)
    p.add_argument("--method", choices=("formula", "coset"), default="formula")
    p.add_argument("--max-cosets", type=int, default=100_000)
    mnl(command("fixedset", _cmd_fixedset, "fixed set of the principal isotropy group"))
    command("curvature", _cmd_curvature, "curvature verdict").add_argument("target", nargs="+")
    command("tables", _cmd_tables, "dump the orbit-type tables")
    p = command("subgroup", _cmd_subgroup, "a catalog finite subgroup")
    p.add_argument("tag")
    p.add_argument("param", type=int, nargs="?")
    p.add_argument("--ambient", choices=("SU2", "SO3"))
    p.add_argument("--project", action="store_true", help="image in SO(3)")
    p.add_argument("--normal", action="store_true", help="list normal subgroups")
    p = command("verify", _cmd_verify, "run a verification sweep")
    p.add_argument("lemma", choices=verifiers.LEMMA_IDS)
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--kmin", type=int, default=-3)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--max-cosets", type=int, default=100_000)
    p.add_argument("--q1", type=int, default=2)
    p.add_argument("--q2", type=int, default=3)
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--mmax", type=int, default=30)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, default=2)
    return parser


def _flatten(value, prefix=""):
    if isinstance(value, dict):
        for k, v in value.items():
            yield from _flatten(v, f"{prefix}{k}.")
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        if isinstance(value, list):
            value = ", ".join(str(v) for v in value)
        elif isinstance(value, bool):
            value = "true" if value else "false"
        elif value is None:
            value = "-"
        yield f"{prefix[:-1]}: {value}"


def render(envelope: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(envelope, indent=2)
    lines = [f"# {envelope['command']} ({envelope['version']})"]
    lines.extend(_flatten(envelope["result"]))
    return "\n".join(lines)


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        inputs, result, code = args.func(args)
    except UsageError as exc:
        print(str(exc), file=err)
        return EXIT_USAGE
    except _INVALID as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID
    except SystemExit as exc:  # --help / --version
        return exc.code or 0
    envelope = {"command": args.command, "inputs": inputs, "result": result, "version": __version__}
    print(render(envelope, args.format), file=out)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
