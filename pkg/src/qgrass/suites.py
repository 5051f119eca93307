"""Named verification suites producing deterministic JSON reports."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass
from itertools import combinations

from .coeff import ONE, LaurentPoly
from .dhom import (
    check_rho_minor,
    lemma_qijm_check,
    verify_generation,
    verify_matrix_relations,
)
from .grassmann import consecutive_minors, quasi_commute_exponent
from .minors import (
    NotARelation,
    muir_extend,
    plucker_instances,
    plucker_sum,
    plucker_terms,
    relation_value,
)
from .posets import PosetOrder, check_order_iso, index_pairs
from .qmatrix import Generator, normal_form
from .straighten import verify_qgasl

SCHEMA = 1
SUITES = ("relations", "plucker", "muir", "g24-table", "normal", "dhom", "rho",
          "qijm", "order-iso", "qgasl")


class ConfigError(ValueError):
    pass


@dataclass
class SuiteConfig:
    suite: str
    m: int = 2
    n: int = 4
    s: object = "all"
    a: object = "all"
    degree: int = 2
    t: object = None
    order: str = "cyclic"

    def validate(self):
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        if not (1 <= self.m <= self.n):
            raise ConfigError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")
        if self.degree < 1:
            raise ConfigError("degree must be at least 1")
        for name in ("s", "a"):
            v = getattr(self, name)
            if v != "all" and not (isinstance(v, int) and 1 <= v <= self.n):
                raise ConfigError(f"{name}={v!r} must be 'all' or an integer in 1..{self.n}")
        if self.suite in ("dhom", "rho", "qijm") and self.m >= self.n:
            raise ConfigError("dehomogenisation needs m < n")
        if self.order not in ("std", "cyclic"):
            raise ConfigError(f"order must be std or cyclic, got {self.order!r}")

    def a_values(self):
        return list(range(1, self.n + 1)) if self.a == "all" else [self.a]

    def s_values(self):
        return list(range(1, self.n + 1)) if self.s == "all" else [self.s]


def _rec(check, inputs, expected, passed, witness=None, **extra):
    r = {"check": check, "inputs": inputs, "expected": expected,
         "passed": bool(passed), "witness": witness}
    r.update(extra)
    return r


def _zero_rec(check, inputs, value, expected="0"):
    ok = value.is_zero()
    return _rec(check, inputs, expected, ok, None if ok else str(value))


# -- suites -----------------------------------------------------------------

def _relations(cfg):
    """The four defining relations, each in four orientations, for every
    applicable generator pair."""
    m, n = cfg.m, cfg.n
    q = LaurentPoly.q(1)
    qq = LaurentPoly({1: 1, -1: -1})
    recs = []

    def word(*gs):
        return tuple(Generator(*g) for g in gs)

    def check(cls, lhs_w, rhs):
        # lhs_w = rhs, given as {word: coeff}; four orientations
        lhs = {lhs_w: ONE}
        forms = {
            "lhs-rhs": _combine(lhs, rhs, -1),
            "rhs-lhs": _combine(rhs, lhs, -1),
        }
        # solve for the other leading word of the relation
        other = next(iter(rhs))
        c = rhs[other]
        if c.is_unit():
            inv = c ** -1
            rest = {w: -v * inv for w, v in rhs.items() if w != other}
            rest[lhs_w] = rest.get(lhs_w, LaurentPoly(0)) + inv
            forms["solved-rhs-word"] = _combine({other: ONE}, rest, -1)
            forms["scaled-by-q"] = _combine({lhs_w: q}, {w: v * q for w, v in rhs.items()}, -1)
        for name, form in forms.items():
            val = normal_form(form, m, n)
            recs.append(_zero_rec(f"{cls}:{name}", {"lhs": _fmt_word(lhs_w)}, val))

    for i in range(1, m + 1):
        for j in range(1, n + 1):
            for l in range(j + 1, n + 1):
                check("row", word((i, j), (i, l)), {word((i, l), (i, j)): q})
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            for k in range(i + 1, m + 1):
                check("column", word((i, j), (k, j)), {word((k, j), (i, j)): q})
    for k in range(1, m + 1):
        for i in range(k + 1, m + 1):
            for j in range(1, n + 1):
                for l in range(j + 1, n + 1):
                    check("antidiagonal", word((i, j), (k, l)), {word((k, l), (i, j)): ONE})
    for i in range(1, m + 1):
        for k in range(i + 1, m + 1):
            for j in range(1, n + 1):
                for l in range(j + 1, n + 1):
                    check("diagonal", word((i, j), (k, l)),
                          {word((k, l), (i, j)): ONE, word((i, l), (k, j)): qq})
    return recs


def _combine(a, b, sign):
    out = dict(a)
    for w, c in b.items():
        out[w] = out.get(w, LaurentPoly(0)) + c * sign
    return out


def _fmt_word(w):
    return "".join(str(g) for g in w)


def _fmt_rel(rel):
    return " + ".join(f"({c})[{''.join(map(str, I))}][{''.join(map(str, J))}]" for c, I, J in rel)


def _plucker(cfg):
    recs = []
    for inst in plucker_instances(cfg.m, cfg.n):
        val = plucker_sum(inst)
        recs.append(_zero_rec("plucker", {"J1": list(inst.J1), "J2": list(inst.J2), "K": list(inst.K)}, val))
    return recs


def g24_relations():
    """The classical relation list of O_q(G(2,4)), each as a vanishing
    combination [(coeff, I, J), ...]."""
    q = LaurentPoly.q
    one = ONE
    qq = LaurentPoly({1: 1, -1: -1})
    rels = []
    fam = []
    for i, j, k in combinations(range(1, 5), 3):
        fam.append([(one, (i, j), (i, k)), (-q(1), (i, k), (i, j))])
        fam.append([(one, (i, k), (j, k)), (-q(1), (j, k), (i, k))])
    rels.append(("[ij][ik] = q[ik][ij], [ik][jk] = q[jk][ik] (i<j<k)", fam))
    rels.append(("[14][23] = [23][14]", [[(one, (1, 4), (2, 3)), (-one, (2, 3), (1, 4))]]))
    rels.append(("[12][34] = q^2[34][12]", [[(one, (1, 2), (3, 4)), (-q(2), (3, 4), (1, 2))]]))
    rels.append(("[13][24] = [24][13] + (q - q^-1)[14][23]",
                 [[(one, (1, 3), (2, 4)), (-one, (2, 4), (1, 3)), (-qq, (1, 4), (2, 3))]]))
    rels.append(("[12][34] - q[13][24] + q^2[14][23] = 0",
                 [[(one, (1, 2), (3, 4)), (-q(1), (1, 3), (2, 4)), (q(2), (1, 4), (2, 3))]]))
    rels.append(("[34][12] - q^-1[24][13] + q^-2[23][14] = 0",
                 [[(one, (3, 4), (1, 2)), (-q(-1), (2, 4), (1, 3)), (q(-2), (2, 3), (1, 4))]]))
    rels.append(("[13][24] = q^2[24][13] + (q^-1 - q)[12][34]",
                 [[(one, (1, 3), (2, 4)), (-q(2), (2, 4), (1, 3)), (qq, (1, 2), (3, 4))]]))
    return rels


def _g24(cfg):
    recs = []
    for name, rels in g24_relations():
        bad = [str(relation_value(r, 2, 4)) for r in rels if not relation_value(r, 2, 4).is_zero()]
        recs.append(_rec("g24-table", {"identity": name, "instances": len(rels)}, "0",
                         not bad, bad[0] if bad else None))
    return recs


def _relabel(rel, P):
    """Carry a relation on columns 1..k onto the columns P (increasing)."""
    f = dict(zip(range(1, len(P) + 1), P))
    return [(c, tuple(f[i] for i in I), tuple(f[j] for j in J)) for c, I, J in rel]


def source_relations(m, n):
    """Verified quadratic relations among maximal minors of G(m,n)."""
    rels = []
    if (m, n) == (2, 4):
        for name, rs in g24_relations():
            rels += [(name, r) for r in rs]
    else:
        for inst in plucker_instances(m, n):
            if inst.J1 or inst.J2:
                continue
            rels.append((f"plucker K={list(inst.K)}", plucker_terms(inst)))
        for A, B in combinations(combinations(range(1, n + 1), m), 2):
            c = quasi_commute_exponent(A, B, m, n)
            if c is not None:
                rels.append((f"quasi-commute {A} {B}", [(ONE, A, B), (-LaurentPoly.q(c), B, A)]))
    return rels


def _muir(cfg):
    m, n = cfg.m, cfg.n
    recs = []
    extra = (1, 2) if n <= 4 else (1,)
    for e in extra:
        N = n + e
        for P in combinations(range(1, N + 1), n):
            for name, rel in source_relations(m, n):
                moved = _relabel(rel, P)
                inputs = {"relation": name, "P": list(P), "n": N}
                try:
                    out = muir_extend(moved, P, N, m)
                except NotARelation as err:
                    recs.append(_rec("muir", inputs, "0", False, str(err)))
                    continue
                recs.append(_rec("muir", inputs, "0", True, extended=_fmt_rel(out)))
    return recs


def _normal(cfg):
    m, n = cfg.m, cfg.n
    recs = []
    for M in consecutive_minors(m, n):
        for J in combinations(range(1, n + 1), m):
            c = quasi_commute_exponent(M.elems, J, m, n)
            recs.append(_rec("quasi-commute", {"M": list(M.elems), "J": list(J)},
                             "integer exponent", c is not None, None if c is not None else "none", exponent=c))
    return recs


def _dhom(cfg):
    m, n = cfg.m, cfg.n
    recs = []
    for a in cfg.a_values():
        rel = verify_matrix_relations(a, m, n)
        for r in rel["records"]:
            recs.append(_rec("rho-relation", {"a": a, "pair": r["pair"], "relation": r["relation"]},
                             "relation preserved", r["passed"], None if r["passed"] else r["rhs"]))
        gen = verify_generation(a, m, n, cfg.degree)
        for r in gen["records"]:
            recs.append(_rec("generation", {"a": a, "J": r["J"], "max_length": cfg.degree},
                             "in span", r["reachable"], None, word_length=r["max_word_length"]))
    return recs


def _rho(cfg):
    m, n = cfg.m, cfg.n
    recs = []
    for a in cfg.a_values():
        for I, J in index_pairs(m, n - m):
            ok = check_rho_minor(I, J, a, m, n)
            recs.append(_rec("rho-minor", {"a": a, "I": list(I), "J": list(J)},
                             "rho([I|J]) = [Q(I,J)][M]^-1", ok))
    return recs


def _qijm(cfg):
    m, n = cfg.m, cfg.n
    recs = []
    tmax = min(m, n - m)
    ts = [cfg.t] if cfg.t is not None else list(range(1, tmax + 1))
    for a in cfg.a_values():
        for I, J in index_pairs(m, n - m):
            if len(I) not in ts:
                continue
            val = lemma_qijm_check(I, J, a, m, n)
            recs.append(_zero_rec("qijm", {"a": a, "I": list(I), "J": list(J)}, val))
    return recs


def _order_iso(cfg):
    recs = []
    for s in cfg.s_values():
        r = check_order_iso(s, cfg.m, cfg.n)
        w = None
        if r["mismatches"]:
            w = json.dumps(r["mismatches"][0], default=list)
        recs.append(_rec("order-iso", {"s": s, "a": r["a"]}, "order isomorphism",
                         r["passed"], w, pairs_compared=r["pairs_compared"],
                         mismatches=len(r["mismatches"])))
    return recs


def _qgasl(cfg):
    recs = []
    orders = ([PosetOrder("std", cfg.m, cfg.n)] if cfg.order == "std" else
              [PosetOrder("cyclic", cfg.m, cfg.n, s) for s in cfg.s_values()])
    for ord_ in orders:
        rep = verify_qgasl(ord_, cfg.degree)
        lab = ord_.label()
        recs.append(_rec("conditions-1-2", {"order": lab}, "homogeneous generators",
                         rep["conditions_1_2"]))
        for c3 in rep["condition3"]:
            recs.append(_rec("condition-3", {"order": lab, "degree": c3["degree"]},
                             f"rank {c3['monomials']}", c3["passed"],
                             None if c3["passed"] else ", ".join(c3["dependent"]), rank=c3["rank"]))
        for sp in rep["spanning"]:
            recs.append(_rec("spanning", {"order": lab, "degree": sp["degree"]},
                             f"rank {sp['standard']}", sp["passed"],
                             None if sp["passed"] else ", ".join(sp["outside_span"][:5]),
                             rank=sp["rank_all_products"]))
        for p in rep["condition4"]["pairs"]:
            recs.append(_rec("condition-4", {"order": lab, "alpha": list(p["alpha"]), "beta": list(p["beta"])},
                             "support below both factors", p["passed"],
                             p.get("error") or (", ".join(p["violations"]) or None),
                             expansion=p.get("expansion")))
        for p in rep["condition5"]["pairs"]:
            recs.append(_rec("condition-5", {"order": lab, "alpha": list(p["alpha"]), "beta": list(p["beta"])},
                             "nonzero c with remainder below both", p["passed"], p.get("error"),
                             c=p.get("c"), anomaly=p.get("anomaly"), remainder=p.get("remainder")))
    return recs


_RUNNERS = {
    "relations": _relations, "plucker": _plucker, "muir": _muir, "g24-table": _g24,
    "normal": _normal, "dhom": _dhom, "rho": _rho, "qijm": _qijm,
    "order-iso": _order_iso, "qgasl": _qgasl,
}


def run_suite(cfg):
    cfg.validate()
    if cfg.suite == "g24-table" and (cfg.m, cfg.n) != (2, 4):
        raise ConfigError("g24-table is defined for --mn 2,4 only")
    t0 = time.perf_counter()
    records = _RUNNERS[cfg.suite](cfg)
    passed = sum(r["passed"] for r in records)
    return {
        "schema": SCHEMA,
        "suite": cfg.suite,
        "config": asdict(cfg),
        "records": records,
        "summary": {"total": len(records), "passed": passed, "failed": len(records) - passed},
        "wall_time": round(time.perf_counter() - t0, 3),
    }


def dump_report(report):
    return json.dumps(report, indent=2, sort_keys=True, default=list)


def load_report(text):
    return json.loads(text)
