"""Command-line front door.

Commands: construct, atn, census, choosable, verify, efl.
Exit codes: 0 success, 1 claim failure, 2 bad input, 3 guard violation,
4 internal cross-check mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coloring import is_k_choosable
from .efl import EflConfig, build_graph, generate_all, theorem4_certify
from .errors import InvalidConfig, MemoryGuardExceeded, SizeGuardExceeded
from .graphs import (
    class2_augment,
    disjoint_double,
    line_graph,
    parse_edge_list_text,
    regular_embed_class1,
    subdivision_graph,
    to_edge_list_text,
    total_graph,
)
from .orientations import Orientation, atn_from_orientations, eulerian_census
from .polynomials import atn_from_polynomial
from .verify import CAMPAIGNS, campaign_passed, report_line, run_campaign

EXIT_OK = 0
EXIT_CLAIM_FAILURE = 1
EXIT_BAD_INPUT = 2
EXIT_GUARD = 3
EXIT_MISMATCH = 4


class CrossCheckMismatch(Exception):
    pass


def _read_graph(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list_text(fh.read())


def _write_text(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_construct(args) -> int:
    aux = None
    if args.kind == "efl":
        with open(args.input, encoding="utf-8") as fh:
            cfg = EflConfig.from_json(fh.read())
        out = build_graph(cfg)
    else:
        g = _read_graph(args.input)
        if args.kind == "line":
            out, mapping = line_graph(g)
            aux = {"edge_to_vertex": [[list(e), i] for e, i in mapping.items()]}
        elif args.kind == "subdivision":
            out, roles = subdivision_graph(g)
            aux = {"roles": roles.to_json_obj()}
        elif args.kind == "total":
            out, roles = total_graph(g)
            aux = {"roles": roles.to_json_obj()}
        elif args.kind == "double":
            out = disjoint_double(g)
        elif args.kind == "embed":
            out, emb = regular_embed_class1(g)
            aux = {"embedding": [[v, w] for v, w in sorted(emb.items())]}
        else:  # augment
            out, attach = class2_augment(g)
            aux = {"attachment": attach}
    _write_text(args.output, to_edge_list_text(out))
    if args.map:
        _write_text(args.map, json.dumps(aux, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def _cmd_atn(args) -> int:
    g = _read_graph(args.input)
    results = {}
    if args.method in ("poly", "both"):
        value, cert = atn_from_polynomial(g, max_terms=args.max_terms)
        results["poly"] = (value, cert)
    if args.method in ("orient", "both"):
        value, cert = atn_from_orientations(g, max_edges=args.max_edges)
        results["orient"] = (value, cert)
    if args.method == "both" and results["poly"][0] != results["orient"][0]:
        raise CrossCheckMismatch(
            f"polynomial says {results['poly'][0]}, "
            f"orientations say {results['orient'][0]}"
        )
    payload = {
        "atn": next(iter(results.values()))[0],
        "certificates": {k: cert.to_json_obj() for k, (_, cert) in results.items()},
    }
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"ATN = {payload['atn']}")
        for method, (_, cert) in results.items():
            print(f"  {method}: {json.dumps(cert.to_json_obj(), sort_keys=True)}")
    return EXIT_OK


def _cmd_census(args) -> int:
    g = _read_graph(args.input)
    value = int(args.bits, 16)
    if value < 0 or value >= 1 << g.m:
        raise ValueError(f"bit vector {args.bits} out of range for m={g.m}")
    orient = Orientation.from_int(g, value)
    census = eulerian_census(orient, max_edges=args.max_edges)
    payload = {
        "even": census.even,
        "odd": census.odd,
        "maxOutdegree": max(orient.outdegrees(), default=0),
        "alonTarsi": census.alon_tarsi,
    }
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def _cmd_choosable(args) -> int:
    g = _read_graph(args.input)
    ok, witness = is_k_choosable(g, args.k, max_n=args.max_n, max_k=args.max_k)
    payload = {
        "k": args.k,
        "choosable": ok,
        "witness": None if witness is None else [list(l) for l in witness],
    }
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif ok:
        print(f"{args.k}-choosable")
    else:
        print(f"not {args.k}-choosable; bad lists: {payload['witness']}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    overrides = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            overrides.update(json.load(fh))
    if args.max_edges is not None:
        # each campaign reads the size knob it understands
        overrides["max_edges"] = args.max_edges
        overrides["max_base_edges"] = args.max_edges
    if args.max_terms is not None:
        overrides["max_terms"] = args.max_terms
    if args.seed is not None:
        overrides["seed"] = args.seed

    def sink(report):
        if args.format == "json":
            print(report_line(report))
        else:
            status = "PASS" if report["pass"] else "FAIL"
            skips = sum(1 for v in report["claims"].values() if v == "SKIP")
            note = f" ({skips} skipped)" if skips else ""
            print(f"{status} {report['instance']}{note}")

    reports = run_campaign(args.campaign, overrides=overrides, jobs=args.jobs, sink=sink)
    return EXIT_OK if campaign_passed(reports) else EXIT_CLAIM_FAILURE


def _cmd_efl(args) -> int:
    if args.action == "generate":
        for cfg in generate_all(args.k):
            print(json.dumps(cfg.to_json_obj(), sort_keys=True))
        return EXIT_OK
    # certify
    configs = []
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            configs.append(EflConfig.from_json(fh.read()))
    else:
        for k in range(1, args.k + 1):
            configs.extend(generate_all(k))
    ok = True
    for cfg in configs:
        report = theorem4_certify(cfg, max_terms=args.max_terms)
        print(json.dumps(report, sort_keys=True))
        if report["applicable"] and not report["conclusion_holds"]:
            ok = False
        if not report["engines_agree"]:
            raise CrossCheckMismatch("ATN engines disagree on a configuration")
    return EXIT_OK if ok else EXIT_CLAIM_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alontarsi",
        description="Exact Alon-Tarsi numbers, graph constructions, and "
        "claim-verification campaigns at desk scale.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a derived graph and write its edge list")
    p.add_argument(
        "kind",
        choices=["line", "subdivision", "total", "double", "embed", "augment", "efl"],
    )
    p.add_argument("input", help="edge-list file (or JSON config for 'efl')")
    p.add_argument("-o", "--output", default=None, help="output edge list (default stdout)")
    p.add_argument("--map", default=None, help="write role/embedding map JSON here")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("atn", help="compute the Alon-Tarsi number with a certificate")
    p.add_argument("input")
    p.add_argument("--method", choices=["poly", "orient", "both"], default="poly")
    p.add_argument("--max-terms", type=int, default=10**7)
    p.add_argument("--max-edges", type=int, default=22)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=_cmd_atn)

    p = sub.add_parser("census", help="Eulerian subdigraph census of one orientation")
    p.add_argument("input")
    p.add_argument("--bits", required=True, help="orientation bit vector as hex")
    p.add_argument("--max-edges", type=int, default=22)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("choosable", help="exhaustive k-choosability check")
    p.add_argument("input")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=_cmd_choosable)

    p = sub.add_parser("verify", help="run a claim-verification campaign")
    p.add_argument("campaign", choices=list(CAMPAIGNS))
    p.add_argument("--config", default=None, help="JSON file overriding campaign config")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("--max-terms", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("efl", help="generate or certify clique configurations")
    p.add_argument("action", choices=["generate", "certify"])
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--config", default=None, help="certify one config from a JSON file")
    p.add_argument("--max-terms", type=int, default=10**7)
    p.set_defaults(func=_cmd_efl)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SizeGuardExceeded, MemoryGuardExceeded) as exc:
        print(f"guard violation: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except CrossCheckMismatch as exc:
        print(f"internal cross-check mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (InvalidConfig, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
