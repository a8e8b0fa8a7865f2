"""
Command-line front door: ``semiperm <command> [options]``.

Every command reads tables in ``.sgp`` or structured form (``-`` is standard input), prints
a human-readable report or, with ``--json``, one JSON document on stdout, and exits with
0 when the command succeeds or the tested property holds, 1 when the property fails and
2 on usage or input errors.
"""

import argparse
import asyncio
import dataclasses
import json
import logging
import sys
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import standard
from .census import CensusConfig, census_verify
from .config import configure, load_settings
from .congruence import all_congruences, is_permutable
from .construction import (
    Construction1Spec,
    ReesMatrixSpec,
    Side,
    construct1,
    construction1_condition,
    cyclic_nilpotent,
    group_with_zero,
    rees_decompose,
    rees_matrix,
    theorem2_verify,
    theorem3_verify,
)
from .core import FiniteSemigroup, special_elements
from .decomposition import classify, putcha_decomposition
from .enumeration import Mode, enumerate_up_to
from .errors import (
    FormatError,
    InternalInconsistencyError,
    NonAssociativeError,
    NotCompletelySimpleError,
    SemigroupError,
)
from .formats import dump_sgp, loads, parse_action, to_structured
from .groups import FiniteGroup, Subgroup, as_group, subgroup
from .gset import GSet, all_gset_congruences, is_transitive, orbits, phi, stabilizer
from .ideals import all_ideals, green, kernel
from .registry import registry

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2


@dataclass
class Outcome:
    """What a command prints and how the process exits."""

    code: int = EXIT_OK
    lines: list[str] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)
    table: FiniteSemigroup | None = None


# -- input helpers ------------------------------------------------------------


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise FormatError(f"Cannot read {path}: {err.strerror}") from err
    except UnicodeDecodeError as err:
        raise FormatError(f"Cannot read {path}: not UTF-8 text ({err.reason} at byte {err.start})") from err


def _semigroup(path: str) -> FiniteSemigroup:
    return loads(_read(path))


def _group(path: str) -> FiniteGroup:
    return as_group(_semigroup(path), name=Path(path).stem if path != "-" else None)


def _ids(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError as err:
        raise FormatError(f"Expected comma-separated element ids, got {text!r}") from err


def _names(S: FiniteSemigroup, ids: Iterable[int]) -> str:
    return "{" + ", ".join(S.label(a) for a in ids) + "}"


def _blocks(S: FiniteSemigroup, classes: Sequence[Sequence[int]]) -> str:
    return " ".join(_names(S, block) for block in classes)


# -- commands -----------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> Outcome:
    text = _read(args.file)
    try:
        S = loads(text)
    except NonAssociativeError as err:
        a, b, c = err.witness
        return Outcome(EXIT_FAILS, [str(err)], {"associative": False, "witness": [a, b, c]})

    special = special_elements(S)
    data = {
        "associative": True,
        "order": S.order,
        "zero": special.zero,
        "identity": special.identity,
        "idempotents": sorted(special.idempotents),
    }
    lines = [
        f"associative semigroup of order {S.order}",
        f"zero: {'-' if special.zero is None else S.label(special.zero)}",
        f"identity: {'-' if special.identity is None else S.label(special.identity)}",
        f"idempotents: {_names(S, sorted(special.idempotents))}",
    ]
    return Outcome(lines=lines, data=data)


def cmd_congruences(args: argparse.Namespace) -> Outcome:
    S = _semigroup(args.file)
    lattice = all_congruences(S)
    lines = [f"{len(lattice)} congruences"] + [_blocks(S, c.classes()) for c in lattice]
    return Outcome(lines=lines, data={"count": len(lattice), "congruences": [list(c.class_of) for c in lattice]})


def cmd_permutable(args: argparse.Namespace) -> Outcome:
    S = _semigroup(args.file)
    report = is_permutable(S)
    data: dict[str, Any] = {"permutable": report.permutable, "lattice_size": report.lattice_size}
    if report.permutable:
        return Outcome(lines=[f"permutable ({report.lattice_size} congruences)"], data=data)

    w = report.witness
    a, b = w.pair
    data["witness"] = {"alpha": list(w.alpha.class_of), "beta": list(w.beta.class_of), "pair": [a, b]}
    lines = [
        f"not permutable ({report.lattice_size} congruences)",
        f"alpha: {_blocks(S, w.alpha.classes())}",
        f"beta: {_blocks(S, w.beta.classes())}",
        f"pair: ({S.label(a)}, {S.label(b)}) in alpha∘beta but not in beta∘alpha",
    ]
    return Outcome(EXIT_FAILS, lines, data)


def cmd_green(args: argparse.Namespace) -> Outcome:
    S = _semigroup(args.file)
    structure = green(S)
    lines, data = [], {}
    for name in ("R", "L", "J", "H"):
        relation = getattr(structure, name)
        lines.append(f"{name}: {_blocks(S, relation.classes())}")
        data[name] = list(relation.class_of)
    return Outcome(lines=lines, data=data)


def cmd_ideals(args: argparse.Namespace) -> Outcome:
    S = _semigroup(args.file)
    lattice = all_ideals(S)
    lines = [f"{len(lattice.ideals)} ideals, chain: {str(lattice.is_chain).lower()}"]
    lines += [_names(S, ideal.sorted_members()) for ideal in lattice.ideals]
    data = {"chain": lattice.is_chain, "ideals": [list(ideal.sorted_members()) for ideal in lattice.ideals]}
    return Outcome(lines=lines, data=data)


def cmd_kernel(args: argparse.Namespace) -> Outcome:
    S = _semigroup(args.file)
    members = kernel(S).sorted_members()
    return Outcome(lines=[f"kernel: {_names(S, members)}"], data={"kernel": list(members)})


def cmd_decompose(args: argparse.Namespace) -> Outcome:
    S = _semigroup(args.file)
    dec = putcha_decomposition(S)
    lines = [f"{len(dec.components)} components, putcha: {str(dec.all_components_archimedean).lower()}"]
    for members, archimedean in zip(dec.components, dec.archimedean, strict=True):
        lines.append(f"{_names(S, members)} archimedean: {str(archimedean).lower()}")
    data = {
        "eta": list(dec.eta.class_of),
        "components": [list(c) for c in dec.components],
        "archimedean": list(dec.archimedean),
        "putcha": dec.all_components_archimedean,
        "component_semilattice": to_structured(dec.component_semilattice),
    }
    return Outcome(lines=lines, data=data)


def cmd_classify(args: argparse.Namespace) -> Outcome:
    S = _semigroup(args.file)
    report = classify(S)
    label = report.label()
    lines = [label] + [f"{key}: {_names(S, ids)}" for key, ids in report.evidence.items()]
    data = {
        "case": report.case.value,
        "upper_kind": report.upper_kind.value if report.upper_kind else None,
        "zero_case": report.zero_case.value if report.zero_case else None,
        "label": label,
        "evidence": {key: list(ids) for key, ids in report.evidence.items()},
    }
    return Outcome(lines=lines, data=data)


def cmd_rees(args: argparse.Namespace) -> Outcome:
    G = _group(args.group)
    if len(args.P) != args.I * args.J:
        raise FormatError(f"--P expects {args.I * args.J} entries (|J| rows of |I|), got {len(args.P)}")
    rows = [args.P[j * args.I : (j + 1) * args.I] for j in range(args.J)]
    return Outcome(table=rees_matrix(ReesMatrixSpec(G, args.I, args.J, rows)))


def cmd_rees_decompose(args: argparse.Namespace) -> Outcome:
    S = _semigroup(args.file)
    try:
        dec = rees_decompose(S)
    except NotCompletelySimpleError as err:
        return Outcome(EXIT_FAILS, [str(err)], {"completely_simple": False})

    spec = dec.spec
    lines = [
        f"group: {_names(S, dec.group_members)}",
        f"|I| = {spec.I_size}, |J| = {spec.J_size}",
        "P: " + " / ".join(" ".join(str(x) for x in row) for row in spec.P),
        "bijection: " + " ".join(str(x) for x in dec.bijection),
    ]
    data = {
        "completely_simple": True,
        "group_members": list(dec.group_members),
        "I": spec.I_size,
        "J": spec.J_size,
        "P": [list(row) for row in spec.P],
        "bijection": list(dec.bijection),
    }
    return Outcome(lines=lines, data=data)


def cmd_construct1(args: argparse.Namespace) -> Outcome:
    G = _group(args.group)
    Ga = subgroup(G, _ids(args.subgroup))
    return Outcome(table=construct1(Construction1Spec(G, Ga, Side(args.side))))


def cmd_cyclic_nilpotent(args: argparse.Namespace) -> Outcome:
    return Outcome(table=cyclic_nilpotent(args.n))


def cmd_group_zero(args: argparse.Namespace) -> Outcome:
    return Outcome(table=group_with_zero(_group(args.group)))


def cmd_gset(args: argparse.Namespace) -> Outcome:
    G = _group(args.group)
    m, order, action = parse_action(_read(args.action))
    if order != G.order:
        raise FormatError(f"Action is given for a group of order {order}, but the group has order {G.order}")
    point = 0 if args.point is None else args.point
    if not 0 <= point < m:
        raise FormatError(f"Point {point} is out of range for an action on {m} points")

    X = GSet(G, action)
    transitive = is_transitive(X)
    congruences = all_gset_congruences(X)
    data: dict[str, Any] = {
        "points": m,
        "orbits": [list(o) for o in orbits(X)],
        "transitive": transitive,
        "stabilizer": list(stabilizer(X, point).members),
        "congruences": [list(c.class_of) for c in congruences],
    }
    lines = [
        f"{m} points, {len(data['orbits'])} orbits, transitive: {str(transitive).lower()}",
        f"stabilizer of {point}: {_names(G.carrier, data['stabilizer'])}",
    ]
    if transitive:
        subgroups = [phi(X, point, alpha) for alpha in congruences]
        data["subgroups"] = [list(H.members) for H in subgroups]
        lines += [
            f"{' '.join(map(str, alpha.class_of))} -> {_names(G.carrier, H.members)}"
            for alpha, H in zip(congruences, subgroups, strict=True)
        ]
    else:
        lines += [" ".join(map(str, alpha.class_of)) for alpha in congruences]
    return Outcome(lines=lines, data=data)


def _pair(pair: tuple[Subgroup, Subgroup] | None) -> list[list[int]] | None:
    return None if pair is None else [list(pair[0].members), list(pair[1].members)]


def cmd_theorem2(args: argparse.Namespace) -> Outcome:
    S = _semigroup(args.file)
    report = theorem2_verify(S)
    data = {
        "side": report.side.value,
        "group_members": list(report.group_members),
        "null_members": list(report.null_members),
        "transitive": report.transitive,
        "Ga": list(report.Ga.members),
        "condition": report.condition,
        "failing_pair": _pair(report.failing_pair),
        "permutable": report.permutable,
        "predicted_permutable": report.predicted_permutable,
        "isomorphic": report.isomorphic,
        "consistent": report.consistent,
    }
    lines = [f"{key}: {value}" for key, value in data.items()]
    return Outcome(EXIT_OK if report.consistent else EXIT_FAILS, lines, data)


def cmd_theorem3(args: argparse.Namespace) -> Outcome:
    S = _semigroup(args.file)
    report = theorem3_verify(S, all_representatives=args.all_representatives)
    layers = [
        {
            "index": layer.index,
            "members": list(layer.members),
            "representative": layer.representative,
            "covers_layer": layer.covers_layer,
            "stabilizer": list(layer.stabilizer.members),
            "interval_size": layer.interval_size,
            "interval_commutes": layer.interval_commutes,
            "failing_pair": _pair(layer.failing_pair),
        }
        for layer in report.layers
    ]
    data = {
        "degree": report.degree,
        "group_members": list(report.group_members),
        "layers": layers,
        "verdict": report.verdict,
        "permutable": report.permutable,
        "representatives_agree": report.representatives_agree,
        "disagreements": list(report.disagreements),
        "consistent": report.consistent,
    }
    lines = [f"degree {report.degree}, group {_names(S, report.group_members)}"]
    for layer in report.layers:
        lines.append(
            f"layer {layer.index} {_names(S, layer.members)}: representative {S.label(layer.representative)}, "
            f"covers {str(layer.covers_layer).lower()}, {layer.interval_size} subgroups above the stabilizer, "
            f"commute {str(layer.interval_commutes).lower()}"
        )
    lines.append(f"verdict: {report.verdict}, permutable: {report.permutable}")
    if report.representatives_agree is not None:
        lines.append(f"representatives agree: {report.representatives_agree}")
    agree = report.representatives_agree is not False
    return Outcome(EXIT_OK if report.consistent and agree else EXIT_FAILS, lines, data)


def cmd_enumerate(args: argparse.Namespace) -> Outcome:
    standard.load()
    if args.list_checks:
        checks = registry.all_checks()
        lines = [
            f"{name}{' (tally)' if checks[name].tally else ''}: {checks[name].description}" for name in registry.names()
        ]
        return Outcome(lines=lines, data={"checks": registry.names()})
    if args.order is None:
        raise FormatError("enumerate needs --order")

    if not args.verify:
        count = sum(1 for _ in enumerate_up_to(args.order, args.mode))
        return Outcome(lines=[str(count)], data={"order": args.order, "mode": args.mode.value, "count": count})

    config = CensusConfig(
        order=args.order,
        up_to=args.mode,
        predicates=tuple(_names_list(args.verify)),
        parallel_width=args.jobs,
        dump_dir=Path(args.dump) if args.dump else None,
    )
    report = asyncio.run(census_verify(config))
    lines = report.lines()
    for c in report.counterexamples:
        lines.append(f"counterexample to {c.predicate} at {c.index}: {[list(r) for r in c.table.rows]}")
    return Outcome(EXIT_OK if report.ok else EXIT_FAILS, lines, report.to_structured())


def _names_list(text: str) -> list[str]:
    return [name for name in text.replace(" ", "").split(",") if name]


def cmd_condition(args: argparse.Namespace) -> Outcome:
    G = _group(args.group)
    result = construction1_condition(G, subgroup(G, _ids(args.subgroup)))
    data = {"holds": result.holds, "interval": [list(H.members) for H in result.interval]}
    data["failing_pair"] = _pair(result.failing_pair)
    lines = [f"{len(result.interval)} subgroups above, commute: {str(result.holds).lower()}"]
    if result.failing_pair:
        H, K = result.failing_pair
        lines.append(f"HK != KH for H={_names(G.carrier, H.members)}, K={_names(G.carrier, K.members)}")
    return Outcome(EXIT_OK if result.holds else EXIT_FAILS, lines, data)


# -- parser -------------------------------------------------------------------


def _file_command(sub, name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
    parser = sub.add_parser(name, help=help_text)
    parser.add_argument("file", help="table file in .sgp or structured form, '-' for stdin")
    parser.set_defaults(handler=handler)
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semiperm", description="Congruence permutability of finite semigroups")
    parser.add_argument("--json", action="store_true", help="print one JSON document instead of text")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log INFO (-v) or DEBUG (-vv) to stderr")
    parser.add_argument("--config", help="YAML settings file")
    sub = parser.add_subparsers(dest="command", required=True)

    _file_command(sub, "check", cmd_check, "validate a table and show its special elements")
    _file_command(sub, "congruences", cmd_congruences, "list every congruence")
    _file_command(sub, "permutable", cmd_permutable, "decide whether all congruences commute")
    _file_command(sub, "green", cmd_green, "Green's R, L, J and H classes")
    _file_command(sub, "ideals", cmd_ideals, "list the ideals and whether they form a chain")
    _file_command(sub, "kernel", cmd_kernel, "the minimum ideal")
    _file_command(sub, "decompose", cmd_decompose, "semilattice decomposition into archimedean components")
    _file_command(sub, "classify", cmd_classify, "classify a finite semigroup by permutability")
    _file_command(sub, "rees-decompose", cmd_rees_decompose, "Rees matrix form of a completely simple semigroup")
    _file_command(sub, "theorem2", cmd_theorem2, "group over a null semigroup with a one-sided identity")
    t3 = _file_command(sub, "theorem3", cmd_theorem3, "group over a nilpotent semigroup with an identity")
    reps = t3.add_mutually_exclusive_group()
    reps.add_argument("--all-representatives", dest="all_representatives", action="store_const", const=True)
    reps.add_argument("--one-representative", dest="all_representatives", action="store_const", const=False)
    t3.set_defaults(all_representatives=None)

    p = sub.add_parser("rees", help="build a Rees matrix semigroup M(G; I, J; P)")
    p.add_argument("--group", required=True)
    p.add_argument("--I", dest="I", type=int, required=True)
    p.add_argument("--J", dest="J", type=int, required=True)
    p.add_argument("--P", dest="P", type=int, nargs="+", required=True, help="|J|×|I| group ids, row-major")
    p.set_defaults(handler=cmd_rees)

    p = sub.add_parser("construct1", help="build G ∪ G/Ga ∪ {0} (or its mirror image)")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", required=True, help="comma-separated group element ids")
    p.add_argument("--side", choices=[s.value for s in Side], default=Side.RIGHT.value)
    p.set_defaults(handler=cmd_construct1)

    p = sub.add_parser("condition", help="test HK = KH for all subgroups above Ga")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", required=True)
    p.set_defaults(handler=cmd_condition)

    p = sub.add_parser("cyclic-nilpotent", help="build {x, x², ..., 0} of order n")
    p.add_argument("n", type=int)
    p.set_defaults(handler=cmd_cyclic_nilpotent)

    p = sub.add_parser("group-zero", help="adjoin a zero to a group")
    p.add_argument("--group", required=True)
    p.set_defaults(handler=cmd_group_zero)

    p = sub.add_parser("gset", help="orbits, stabilizer and congruences of a right G-set")
    p.add_argument("--group", required=True)
    p.add_argument("--action", required=True, help="action table with header 'm |G|'")
    p.add_argument("--point", type=int)
    p.set_defaults(handler=cmd_gset)

    p = sub.add_parser("enumerate", help="enumerate tables of one order, optionally running census checks")
    p.add_argument("--order", type=int)
    p.add_argument("--mode", type=Mode, choices=[m.value for m in Mode], default=Mode.LABELED)
    p.add_argument("--verify", help="comma-separated check names")
    p.add_argument("--jobs", type=int, help="parallel width")
    p.add_argument("--dump", help="directory for counterexample tables")
    p.add_argument("--list-checks", action="store_true")
    p.set_defaults(handler=cmd_enumerate)

    return parser


def _render(outcome: Outcome, as_json: bool) -> str:
    if outcome.table is not None:
        if as_json:
            return json.dumps(to_structured(outcome.table))
        return dump_sgp(outcome.table).rstrip("\n")
    if as_json:
        return json.dumps(outcome.data)
    return "\n".join(outcome.lines)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, run one command and print its report; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        if args.config:
            configure(**dataclasses.asdict(load_settings(args.config)))
        outcome = args.handler(args)
    except InternalInconsistencyError as err:
        logger.error("Internal inconsistency: %s", err)
        print(f"error: internal inconsistency: {err}", file=sys.stderr)
        return EXIT_FAILS
    except SemigroupError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE

    text = _render(outcome, args.json)
    if text:
        print(text)
    return outcome.code


def main() -> None:
    sys.exit(run())
