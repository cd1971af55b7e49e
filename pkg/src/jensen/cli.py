"""Command-line entry point: ``jensen <command> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .coeff import CoeffGroup, parse_coeff
from .group import DEFAULT_CLOSURE_CAP, FiniteGroup, GroupSizeError, cyclic_group, load_group_file, symmetric_group
from .identities import (
    DEFAULT_SEED,
    check_last_transposition,
    check_order_two,
    check_prop_2_1,
    check_prop_3_1,
    check_rearrangement,
    check_transposition_pairs,
    verify_theorems,
)
from .snf import smith_normal_form
from .solver import (
    DEFAULT_COMPARE_CAP,
    DEFAULT_ORACLE_CAP,
    Variant,
    build_constraints,
    brute_force_solutions,
    compare,
    hom_group,
    solve,
    solve_report,
)

COMMANDS = ("solve", "hom", "verify-theorem", "identities", "oracle", "snf")
BUILTIN_SN_MAX = 8
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    group_source: str | None = None
    coeff: str = "2"
    variant: str = "both"
    exhaustive: bool | None = None
    closure_cap: int = DEFAULT_CLOSURE_CAP
    enum_cap: int = DEFAULT_COMPARE_CAP
    oracle_cap: int = DEFAULT_ORACLE_CAP
    max_n: int = 5
    seed: int = DEFAULT_SEED
    output: str = "text"
    matrix: str | None = None
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        for name in ("closure_cap", "enum_cap", "oracle_cap", "max_n"):
            if getattr(self, name) < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
        if self.output not in ("text", "json"):
            raise UsageError("--output must be text or json")

    def variants(self) -> list[Variant]:
        if str(self.variant).lower() == "both":
            return [Variant.XY_INV, Variant.YINV_X]
        try:
            return [Variant.parse(self.variant)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None


def load_group(source: str, cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    """``Sn:<n>``, ``Cn:<m>`` or a path to a group-spec file."""
    if source is None:
        raise UsageError("--group is required")
    head, _, tail = source.partition(":")
    if head in ("Sn", "S") and tail:
        try:
            n = int(tail)
        except ValueError:
            raise UsageError(f"malformed builtin group {source!r}") from None
        if not 1 <= n <= BUILTIN_SN_MAX:
            raise UsageError(f"builtin S_n supports 1 <= n <= {BUILTIN_SN_MAX}")
        return symmetric_group(n, cap=cap)
    if head in ("Cn", "C") and tail:
        try:
            m = int(tail)
        except ValueError:
            raise UsageError(f"malformed builtin group {source!r}") from None
        if not 1 <= m <= cap:
            raise UsageError(f"cyclic order must lie in 1..{cap}")
        return cyclic_group(m)
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"cannot read group file {source!r}")
    try:
        return load_group_file(path, cap=cap)
    except OSError as exc:
        raise UsageError(f"cannot read group file {source!r}: {exc}") from None
    except GroupSizeError:
        raise
    except ValueError as exc:
        raise UsageError(f"malformed group spec in {source!r}: {exc}") from None


def _coeff(cfg: RunConfig) -> CoeffGroup:
    """Factor list such as ``2,4``, or a group-spec file holding an abelian group."""
    path = Path(cfg.coeff)
    if path.suffix and path.is_file():
        A = load_group(cfg.coeff, cfg.closure_cap)
        if not A.is_abelian():
            raise UsageError(f"coefficient group in {cfg.coeff!r} is not abelian")
        return CoeffGroup.from_group(A)
    try:
        return parse_coeff(cfg.coeff)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _sn_degree(cfg: RunConfig) -> int | None:
    src = cfg.group_source or ""
    head, _, tail = src.partition(":")
    if head in ("Sn", "S") and tail.isdigit():
        return int(tail)
    return None


def _cmd_solve(cfg: RunConfig) -> tuple[int, dict]:
    G = load_group(cfg.group_source, cfg.closure_cap)
    H = _coeff(cfg)
    reports = [solve_report(G, H, v, cfg.enum_cap) for v in cfg.variants()]
    out = {"command": "solve", "group": G.name, "coeff": str(H), "reports": reports}
    if len(reports) == 2:
        s1, s2 = (solve(G, H, v) for v in cfg.variants())
        cross = compare(s1, s2, cfg.enum_cap)
        # informational: the two solution groups may differ off S_n
        out["cross_variant"] = {"verdict": cross.verdict, "sets_equal": cross.sets_equal}
    return EXIT_OK, out


def _cmd_hom(cfg: RunConfig) -> tuple[int, dict]:
    G = load_group(cfg.group_source, cfg.closure_cap)
    H = _coeff(cfg)
    hom = hom_group(G, H)
    return EXIT_OK, {
        "command": "hom",
        "group": G.name,
        "group_order": G.order,
        "coeff": str(H),
        "hom_invariant_factors": hom.invariant_factors,
        "hom_order": hom.count,
        "generators": [list(g.key()) for g in hom.generators],
    }


def _cmd_verify(cfg: RunConfig) -> tuple[int, dict]:
    H = _coeff(cfg)
    n = _sn_degree(cfg)
    if n is not None:
        if n > cfg.max_n:
            raise UsageError(f"n = {n} exceeds --max-n {cfg.max_n}")
        G = load_group(cfg.group_source, cfg.closure_cap)
        rep = verify_theorems(n, H, max_n=cfg.max_n, cap=cfg.enum_cap, G=G)
        chosen = {v.name for v in cfg.variants()}
        parts = {"XY_INV": rep.variant1, "YINV_X": rep.variant2}
        verdicts = {k: c.verdict for k, c in parts.items() if k in chosen}
        equal = all(
            c.verdict == "EQUAL" and c.a_order == rep.expected_order for k, c in parts.items() if k in chosen
        ) and rep.closed_form_ok
        out = {
            "command": "verify-theorem",
            "group": G.name,
            "group_order": G.order,
            "coeff": str(H),
            "expected_order": rep.expected_order,
            "hom_order": rep.variant1.b_order,
            "orders": {k: parts[k].a_order for k in ("XY_INV", "YINV_X") if k in chosen},
            "comparisons": {k: parts[k].to_dict() for k in ("XY_INV", "YINV_X") if k in chosen},
            "closed_form_ok": rep.closed_form_ok,
            "verdicts": verdicts,
            "verdict": "EQUAL" if equal else "NOT_EQUAL",
        }
        return (EXIT_OK if equal else EXIT_FAIL), out
    G = load_group(cfg.group_source, cfg.closure_cap)
    hom = hom_group(G, H)
    comps = {v.name: compare(solve(G, H, v), hom, cfg.enum_cap) for v in cfg.variants()}
    equal = all(c.verdict == "EQUAL" for c in comps.values())
    out = {
        "command": "verify-theorem",
        "group": G.name,
        "group_order": G.order,
        "coeff": str(H),
        "hom_order": hom.count,
        "orders": {k: c.a_order for k, c in comps.items()},
        "comparisons": {k: c.to_dict() for k, c in comps.items()},
        "verdicts": {k: c.verdict for k, c in comps.items()},
        "verdict": "EQUAL" if equal else "NOT_EQUAL",
    }
    return (EXIT_OK if equal else EXIT_FAIL), out


def _cmd_identities(cfg: RunConfig) -> tuple[int, dict]:
    G = load_group(cfg.group_source, cfg.closure_cap)
    H = _coeff(cfg)
    results = {}
    failed = False
    for v in cfg.variants():
        sol = solve(G, H, v)
        per_map = []
        for f in sol.elements(cfg.enum_cap):
            suite = check_prop_2_1 if v is Variant.XY_INV else check_prop_3_1
            reps = suite(f, cfg.exhaustive, seed=cfg.seed)
            reps.append(check_rearrangement(f, cfg.exhaustive, seed=cfg.seed))
            if G.is_permutation_group() and _sn_degree(cfg) is not None:
                reps += [check_order_two(f), check_last_transposition(f, v), check_transposition_pairs(f)]
            failed |= any(not r.passed for r in reps)
            per_map.append({"map": list(f.key()), "checks": [r.to_dict(G) for r in reps]})
        results[v.name] = per_map
    out = {"command": "identities", "group": G.name, "coeff": str(H), "seed": cfg.seed, "results": results}
    out["verdict"] = "FAIL" if failed else "PASS"
    return (EXIT_FAIL if failed else EXIT_OK), out


def _cmd_oracle(cfg: RunConfig) -> tuple[int, dict]:
    G = load_group(cfg.group_source, cfg.closure_cap)
    H = _coeff(cfg)
    rows = {}
    ok = True
    for v in cfg.variants():
        brute = {f.key() for f in brute_force_solutions(G, H, v, cfg.oracle_cap)}
        fast = solve(G, H, v).element_keys(cfg.enum_cap)
        rows[v.name] = {"oracle_count": len(brute), "solver_count": len(fast), "sets_equal": brute == fast}
        ok &= brute == fast
    return (EXIT_OK if ok else EXIT_FAIL), {"command": "oracle", "group": G.name, "coeff": str(H), "results": rows}


def _read_matrix(path: str) -> list[list[int]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read matrix file {path!r}: {exc}") from None
    try:
        rows = [[int(t) for t in line.replace(",", " ").split()] for line in text.splitlines() if line.strip()]
    except ValueError:
        raise UsageError(f"matrix file {path!r} must hold whitespace-separated integers") from None
    if not rows or len({len(r) for r in rows}) != 1:
        raise UsageError(f"matrix file {path!r} is empty or ragged")
    return rows


def _cmd_snf(cfg: RunConfig) -> tuple[int, dict]:
    if cfg.matrix:
        res = smith_normal_form(_read_matrix(cfg.matrix))
        return EXIT_OK, {
            "command": "snf",
            "diagonal": res.diagonal,
            "U": res.U.tolist(),
            "S": res.S.tolist(),
            "V": res.V.tolist(),
        }
    G = load_group(cfg.group_source, cfg.closure_cap)
    out = {"command": "snf", "group": G.name, "systems": {}}
    for v in cfg.variants():
        system = build_constraints(G, v)
        out["systems"][v.name] = {
            "constraint_rows": system.row_count,
            "lattice_rank": len(system.basis),
            "snf_diagonal": system.diagonal(),
        }
    return EXIT_OK, out


HANDLERS = {
    "solve": _cmd_solve,
    "hom": _cmd_hom,
    "verify-theorem": _cmd_verify,
    "identities": _cmd_identities,
    "oracle": _cmd_oracle,
    "snf": _cmd_snf,
}


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Execute one command; returns ``(exit status, report)``."""
    cfg.validate()
    try:
        return HANDLERS[cfg.command](cfg)
    except GroupSizeError as exc:
        raise UsageError(f"size limit: {exc}") from None


def _fmt_text(report: dict) -> str:
    cmd = report.get("command")
    lines = []
    if cmd == "solve":
        for r in report["reports"]:
            lines.append(
                f"[{r['variant']}] |G|={r['group_order']} rows={r['constraint_rows']} "
                f"solutions={r['solution_order']} {r['solution_invariant_factors']} "
                f"hom={r['hom_order']} {r['hom_invariant_factors']} verdict={r['verdict']}"
            )
        if "cross_variant" in report:
            lines.append(f"XY_INV vs YINV_X: {report['cross_variant']['verdict']}")
    elif cmd == "verify-theorem":
        orders = "/".join(str(o) for o in report["orders"].values())
        lines.append(f"group={report['group']} coeff={report['coeff']} orders {orders}/{report['hom_order']} (solutions/hom)")
        for k, v in report["verdicts"].items():
            lines.append(f"  {k}: {v}")
        if "closed_form_ok" in report:
            lines.append(f"  closed form: {'ok' if report['closed_form_ok'] else 'MISMATCH'}")
        lines.append(f"verdict {report['verdict']}")
    elif cmd == "identities":
        for variant, maps in report["results"].items():
            for entry in maps:
                bad = [c["identity"] for c in entry["checks"] if c["failure_count"]]
                lines.append(f"[{variant}] f={entry['map']}: {'FAIL ' + ','.join(bad) if bad else 'all pass'}")
        lines.append(f"verdict {report['verdict']}")
    elif cmd == "oracle":
        for variant, r in report["results"].items():
            lines.append(f"[{variant}] oracle={r['oracle_count']} solver={r['solver_count']} equal={r['sets_equal']}")
    elif cmd == "hom":
        lines.append(f"Hom({report['group']}, {report['coeff']}) order {report['hom_order']} factors {report['hom_invariant_factors']}")
    elif cmd == "snf":
        if "diagonal" in report:
            lines.append(f"diagonal {report['diagonal']}")
        else:
            for k, s in report["systems"].items():
                lines.append(f"[{k}] rows={s['constraint_rows']} rank={s['lattice_rank']} diagonal={s['snf_diagonal']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jensen", description="Solve Jensen's functional equations on finite groups.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--group", dest="group_source", help="Sn:<n>, Cn:<m>, or a group-spec file")
    parser.add_argument("--coeff", default="2", help="coefficient group factors, e.g. 2,4 (0 means Z), or an abelian group file")
    parser.add_argument("--variant", default="both", help="1, 2 or both")
    parser.add_argument("--exhaustive", action="store_true", default=None, help="check every triple")
    parser.add_argument("--closure-cap", type=int, default=DEFAULT_CLOSURE_CAP)
    parser.add_argument("--enum-cap", type=int, default=DEFAULT_COMPARE_CAP)
    parser.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--output", choices=("text", "json"), default="text")
    parser.add_argument("--matrix", help="integer matrix file for the snf command")
    return parser


def config_from_args(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    env_seed = os.environ.get("JENSEN_SEED")
    if env_seed is not None:
        try:
            cfg.seed = int(env_seed)
        except ValueError:
            raise UsageError(f"JENSEN_SEED must be an integer, got {env_seed!r}") from None
    return cfg


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
        status, report = run(cfg)
    except UsageError as exc:
        print(f"jensen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output == "json":
        print(json.dumps(report, indent=2))
    else:
        print(_fmt_text(report))
    return status


if __name__ == "__main__":
    sys.exit(main())
