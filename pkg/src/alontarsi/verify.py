"""Verification campaigns: enumerate an instance family, run every claim on
every instance, and stream one report per instance.

A report is a plain dict: campaign, instance id, claims (each True, False, or
"SKIP" when a guard blocked the computation), values for human inspection,
and wall time.  A campaign passes when no claim is False; a guarded skip is
reported, never silently dropped, and never counted as a pass of anything.

Campaign instance families live in JSON config files under campaigns/, so
acceptance runs are reproducible and extensible without code edits.  Reports
are JSON-lines with sorted keys: byte-identical across runs except for the
wall-time field.
"""

from __future__ import annotations

import json
import random
import time
from importlib import resources

from .canon import connected_graphs, graphs_with_edge_budget
from .coloring import chromatic_number, choice_number
from .efl import generate_all, theorem4_certify
from .errors import SizeGuardExceeded
from .graphs import (
    Graph,
    chromatic_index_class,
    class2_augment,
    line_graph,
    named_graph,
    one_factorization,
    regular_embed_class1,
    subdivision_graph,
    total_graph,
)
from .orientations import (
    Orientation,
    atn_from_orientations,
    eulerian_census,
    orientation_census_table,
)
from .polynomials import (
    atn_from_polynomial,
    coefficient_of,
    full_expansion,
)

CAMPAIGNS = ("thm1", "thm2", "cor3", "thm4", "duality", "sandwich")


def default_config(name: str) -> dict:
    if name not in CAMPAIGNS:
        raise ValueError(f"unknown campaign {name!r}; choose from {CAMPAIGNS}")
    path = resources.files("alontarsi") / "campaigns" / f"{name}.json"
    return json.loads(path.read_text())


def report_line(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":"))


def report_passed(report: dict) -> bool:
    return all(v is not False for v in report["claims"].values())


def campaign_passed(reports: list[dict]) -> bool:
    return all(report_passed(r) for r in reports)


def _graph_descriptor(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


# ---------------------------------------------------------------------------
# instance enumeration
# ---------------------------------------------------------------------------


def campaign_instances(name: str, cfg: dict) -> list[tuple[str, tuple]]:
    out: list[tuple[str, tuple]] = []
    if name == "thm1":
        for i, gname in enumerate(cfg["graphs"]):
            out.append((f"thm1/{i:03d}-{gname}", ("named", gname)))
    elif name == "cor3":
        for i, gname in enumerate(cfg["graphs"]):
            out.append((f"cor3/{i:03d}-{gname}", ("named", gname)))
    elif name == "thm2":
        fam = [g for g in connected_graphs(cfg["max_base_edges"]) if g.m >= 1]
        for i, g in enumerate(fam):
            out.append((f"thm2/{i:03d}-{g.n}v{g.m}e", ("graph", g)))
    elif name == "thm4":
        for k in range(1, cfg["max_k"] + 1):
            for j, c in enumerate(generate_all(k)):
                out.append((f"thm4/k{k}-{j:03d}", ("config", c)))
    elif name == "duality":
        fam = graphs_with_edge_budget(cfg["max_edges"])
        for i, g in enumerate(fam):
            out.append((f"duality/census/{i:04d}-{g.n}v{g.m}e", ("census", g)))
        conn = connected_graphs(
            cfg["engine_max_n"] * (cfg["engine_max_n"] - 1) // 2,
            max_vertices=cfg["engine_max_n"],
        )
        for i, g in enumerate(conn):
            out.append((f"duality/engines/{i:03d}-{g.n}v{g.m}e", ("engines", g)))
        for i, g in enumerate(conn):
            if g.m <= cfg["eval_max_edges"]:
                out.append((f"duality/eval/{i:03d}-{g.n}v{g.m}e", ("eval", g, i)))
    elif name == "sandwich":
        from .canon import all_graphs

        for i, g in enumerate(all_graphs(cfg["max_n"])):
            out.append((f"sandwich/{i:03d}-{g.n}v{g.m}e", ("graph", g)))
    else:
        raise ValueError(f"unknown campaign {name!r}")
    return out


# ---------------------------------------------------------------------------
# per-instance workers
# ---------------------------------------------------------------------------


def _run_thm1(g: Graph, cfg: dict) -> tuple[dict, dict]:
    claims: dict = {}
    values: dict = {"graph": _graph_descriptor(g), "delta": g.max_degree()}
    factorization = None
    if g.is_regular() and g.n % 2 == 0:
        factorization = one_factorization(g, max_n=cfg["factorization_max_n"])
    applicable = factorization is not None and g.n % 4 == 0
    values["applicable"] = applicable
    if not applicable:
        claims["factor_structure"] = "SKIP"
        claims["atn_line_equals_delta"] = "SKIP"
        return claims, values
    d = g.max_degree()
    lg, edge_to_vertex = line_graph(g)
    classes = [
        sorted(edge_to_vertex[e] for e in factor) for factor in factorization.factors
    ]
    ladj = lg.adjacency()
    ok_structure = factorization.validate(g)
    for cls in classes:
        if len(cls) != g.n // 2:
            ok_structure = False
        if any(b in ladj[a] for a in cls for b in cls):
            ok_structure = False
    pair_all_ones = True
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            pair, remap = lg.induced(classes[i] + classes[j])
            if set(pair.degrees()) != {2}:
                ok_structure = False
            left = {remap[v] for v in classes[i]}
            if any((u in left) == (v in left) for u, v in pair.edges):
                ok_structure = False
            if coefficient_of(pair, (1,) * pair.n) == 0:
                pair_all_ones = False
    claims["factor_structure"] = ok_structure
    claims["pair_all_ones_monomial"] = pair_all_ones
    atn_p, cert = atn_from_polynomial(lg)
    atn_o, _ = atn_from_orientations(lg, max_edges=cfg["orientation_max_edges"])
    claims["atn_line_equals_delta"] = atn_p == d and atn_o == d
    values["atn_line"] = atn_p
    values["certificate"] = cert.to_json_obj()
    # the statement's n-1 form agrees with the proof's Delta form only when
    # Delta = n-1; recorded, not gated
    values["statement_form_agrees"] = d == g.n - 1
    return claims, values


def _run_thm2(g: Graph, cfg: dict) -> tuple[dict, dict]:
    claims: dict = {}
    values: dict = {"graph": _graph_descriptor(g)}
    d = g.max_degree()
    cls = chromatic_index_class(g)
    values["delta"] = d
    values["class"] = cls.class_number
    lg, _ = line_graph(g)
    atn, _ = atn_from_polynomial(lg)
    values["atn_line"] = atn
    claims["atn_line_le_delta_plus_1"] = atn <= d + 1
    if cls.class_number == 1:
        claims["class1_atn_line_equals_delta"] = atn == d
    in_embed_family = g.n <= cfg["embed_max_n"] and g.m <= cfg["embed_max_edges"]
    if in_embed_family and cls.class_number == 1:
        host, emb = regular_embed_class1(g)
        values["host"] = {"n": host.n, "m": host.m}
        claims["host_regular"] = set(host.degrees()) == {d}
        copy0, _ = host.induced([emb[v] for v in range(g.n)])
        claims["base_induced_in_host"] = copy0.edges == g.edges
        try:
            factorization = one_factorization(
                host, max_n=cfg["host_factorization_max_n"]
            )
        except SizeGuardExceeded:
            values["host_one_factorizable"] = "SKIP"
        else:
            found = factorization is not None and factorization.validate(host)
            values["host_one_factorizable"] = found
            if not found:
                values["finding"] = "host not one-factorizable"
    elif in_embed_family and cls.class_number == 2:
        augmented, attach = class2_augment(g)
        values["attachment"] = attach
        claims["augment_max_degree"] = augmented.max_degree() == d + 1
        aug_cls = chromatic_index_class(augmented)
        claims["augment_class1"] = aug_cls.class_number == 1
    return claims, values


def _run_cor3(g: Graph, cfg: dict) -> tuple[dict, dict]:
    claims: dict = {}
    values: dict = {"graph": _graph_descriptor(g), "delta": g.max_degree()}
    total, roles = total_graph(g)
    sub, _ = subdivision_graph(g)
    lg, _ = line_graph(g)
    values["total"] = {"n": total.n, "m": total.m}
    originals = list(roles.originals())
    edge_vs = list(roles.edge_vertices())
    half_orig, _ = total.induced(originals)
    half_edge, _ = total.induced(edge_vs)
    cross = tuple(
        e for e in total.edges if (e[0] < g.n) != (e[1] < g.n)
    )
    claims["half_square_original_is_base"] = half_orig.edges == g.edges
    claims["half_square_edge_is_line"] = half_edge.edges == lg.edges
    claims["cross_edges_are_subdivision"] = cross == sub.edges
    atn, cert = atn_from_polynomial(total, max_terms=cfg.get("max_terms", 10**7))
    values["atn_total"] = atn
    values["certificate"] = cert.to_json_obj()
    claims["atn_total_le_delta_plus_3"] = atn <= g.max_degree() + 3
    return claims, values


def _run_thm4(cfg_obj, cfg: dict) -> tuple[dict, dict]:
    rep = theorem4_certify(cfg_obj)
    claims = {
        "engines_agree": rep["engines_agree"],
        "conclusion_holds": rep["conclusion_holds"],
    }
    values = {k: rep[k] for k in ("config", "atn", "caseA", "caseB", "applicable")}
    values["oversized_d_components"] = rep["oversized_d_components"]
    values["certificate"] = rep["certificate"]
    return claims, values


def _run_duality_census(g: Graph, cfg: dict) -> tuple[dict, dict]:
    m, n = g.m, g.n
    even, odd = orientation_census_table(g, max_edges=cfg["max_edges"] + 2)
    coeff = full_expansion(g).as_dict()
    low = [0] * n
    high = [0] * n
    for e, (u, v) in enumerate(g.edges):
        low[u] |= 1 << e
        high[v] |= 1 << e
    full = (1 << m) - 1
    identity_ok = True
    reversal_ok = True
    alon_tarsi = 0
    for d_bits in range(1 << m):
        outs = tuple(
            (((~d_bits) & low[v]) | (d_bits & high[v])).bit_count() for v in range(n)
        )
        diff = even[d_bits] - odd[d_bits]
        if abs(coeff.get(outs, 0)) != abs(diff):
            identity_ok = False
            break
        if abs(diff) != abs(even[full ^ d_bits] - odd[full ^ d_bits]):
            reversal_ok = False
        if diff != 0:
            alon_tarsi += 1
    claims = {
        "census_matches_coefficients": identity_ok,
        "arc_reversal_symmetric": reversal_ok,
    }
    values = {
        "graph": _graph_descriptor(g),
        "orientations": 1 << m,
        "alon_tarsi_orientations": alon_tarsi,
    }
    return claims, values


def _run_duality_engines(g: Graph, cfg: dict) -> tuple[dict, dict]:
    atn_p, cert_p = atn_from_polynomial(g)
    atn_o, cert_o = atn_from_orientations(g)
    monomial_ok = (
        max(cert_p.exponents, default=0) == atn_p - 1
        and cert_p.coefficient != 0
        and coefficient_of(g, cert_p.exponents) == cert_p.coefficient
    )
    orient = Orientation(g, cert_o.bits)
    census = eulerian_census(orient)
    orient_ok = (
        census.alon_tarsi
        and (census.even, census.odd) == cert_o.census
        and max(orient.outdegrees(), default=0) == atn_o - 1
    )
    claims = {
        "engines_agree": atn_p == atn_o,
        "monomial_certificate_sound": monomial_ok,
        "orientation_certificate_sound": orient_ok,
    }
    values = {
        "graph": _graph_descriptor(g),
        "atn": atn_p,
        "certificates": {
            "poly": cert_p.to_json_obj(),
            "orient": cert_o.to_json_obj(),
        },
    }
    return claims, values


def _run_duality_eval(g: Graph, idx: int, cfg: dict) -> tuple[dict, dict]:
    rng = random.Random(cfg["seed"] * 1_000_003 + idx)
    poly = full_expansion(g)
    points_ok = True
    for _ in range(cfg["eval_points"]):
        point = [rng.randint(-50, 50) for _ in range(g.n)]
        direct = 1
        for u, v in g.edges:
            direct *= point[u] - point[v]
        if poly.evaluate(point) != direct:
            points_ok = False
            break
    diag_ok = poly.evaluate([7] * g.n) == (0 if g.m else 1)
    claims = {
        "evaluation_matches_edge_product": points_ok,
        "vanishes_at_equal_values": diag_ok,
    }
    values = {"graph": _graph_descriptor(g), "points": cfg["eval_points"]}
    return claims, values


def _run_sandwich(g: Graph, cfg: dict) -> tuple[dict, dict]:
    chi = chromatic_number(g)
    atn, _ = atn_from_polynomial(g)
    try:
        ch = choice_number(
            g, max_n=cfg["choosable_max_n"], max_k=cfg["choosable_max_k"]
        )
    except SizeGuardExceeded:
        ch = None
    claims = {
        "chi_le_ch": "SKIP" if ch is None else chi <= ch,
        "ch_le_atn": "SKIP" if ch is None else ch <= atn,
        "chi_le_atn": chi <= atn,
    }
    values = {
        "graph": _graph_descriptor(g),
        "chi": chi,
        "ch": "SKIP" if ch is None else ch,
        "atn": atn,
    }
    return claims, values


def run_instance(name: str, iid: str, payload: tuple, cfg: dict) -> dict:
    started = time.perf_counter()
    kind = payload[0]
    if name == "thm1":
        claims, values = _run_thm1(named_graph(payload[1]), cfg)
    elif name == "cor3":
        claims, values = _run_cor3(named_graph(payload[1]), cfg)
    elif name == "thm2":
        claims, values = _run_thm2(payload[1], cfg)
    elif name == "thm4":
        claims, values = _run_thm4(payload[1], cfg)
    elif name == "duality":
        if kind == "census":
            claims, values = _run_duality_census(payload[1], cfg)
        elif kind == "engines":
            claims, values = _run_duality_engines(payload[1], cfg)
        else:
            claims, values = _run_duality_eval(payload[1], payload[2], cfg)
    elif name == "sandwich":
        claims, values = _run_sandwich(payload[1], cfg)
    else:
        raise ValueError(f"unknown campaign {name!r}")
    return {
        "campaign": name,
        "instance": iid,
        "claims": claims,
        "values": values,
        "pass": all(v is not False for v in claims.values()),
        "wall_ms": round((time.perf_counter() - started) * 1000.0, 3),
    }


def _pool_worker(args):
    return run_instance(*args)


def run_campaign(
    name: str,
    overrides: dict | None = None,
    jobs: int = 1,
    sink=None,
) -> list[dict]:
    """Run one campaign; returns reports in instance order.

    sink, when given, receives each report dict as it completes (in order),
    which is how the CLI streams JSON-lines.
    """
    cfg = default_config(name)
    if overrides:
        cfg.update({k: v for k, v in overrides.items() if v is not None})
    instances = campaign_instances(name, cfg)
    reports = []
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            args = [(name, iid, payload, cfg) for iid, payload in instances]
            for report in pool.imap(_pool_worker, args):
                reports.append(report)
                if sink:
                    sink(report)
    else:
        for iid, payload in instances:
            report = run_instance(name, iid, payload, cfg)
            reports.append(report)
            if sink:
                sink(report)
    return reports
