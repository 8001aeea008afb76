"""Command-line driver: per-multisegment reports and verification sweeps.

Sweeps emit one JSON record per instance plus a human summary; any FAIL
carries the instance input so it can be replayed with --only or through
module-report.  Records are computed independently per instance, so --jobs
parallelism cannot change the report: results are sorted canonically before
emission.  Exit codes: 0 pass, 1 fail, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .chartable import induced_sign_character, multiplicity, sym_irreducible_character
from .clifford import spin_char_table
from .dirac import (d_squared_audit, dirac_index, hd_for_module, vogan_check)
from .hecke import (HAlgebra, extend_to_graded, im_dual, induce_multisegment,
                    isotypic_component, simple_quotient, typec_standard,
                    z2_grading, orbit_key)
from .partitions import Partition, distinct_odd_partitions_of, partitions_of
from .segments import (Multisegment, alpha_of, bgg_terms, enumerate_elliptic_ladders,
                       enumerate_ladders, enumerate_zl, hooks_of, is_elliptic_cc,
                       ladder_hd_prediction, lambda_of, linkage_classes, m_profile,
                       perm_cycles_str, profile_dict, segment_info, temp_of, w_of)

SUITES = ("vanishing", "ladder", "bgg", "d2", "combinatorics", "kato",
          "typec", "paper-examples")


@dataclass
class SweepConfig:
    suite: str
    type_label: str = "A"
    l: int = 3
    n: int = 2
    window: int = 3
    m: str = "17/10"
    r: str = "1"
    jobs: int = 1
    out: str | None = None
    only: str | None = None


@dataclass
class Report:
    suite: str
    records: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def failures(self):
        return [r for r in self.records if not r.get("pass", True)]

    @property
    def ok(self):
        return not self.failures and self.summary.get("pass", True)

    def write_jsonl(self, path):
        with open(path, "w") as fh:
            for rec in self.records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
            fh.write(json.dumps({"summary": self.summary}, sort_keys=True) + "\n")

    def human_summary(self):
        lines = [f"suite={self.suite} instances={len(self.records)} "
                 f"failures={len(self.failures)} elapsed={self.elapsed:.1f}s"]
        for key, val in sorted(self.summary.items()):
            lines.append(f"  {key}: {val}")
        for rec in self.failures[:10]:
            lines.append(f"  FAIL {json.dumps(rec, sort_keys=True)}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Per-instance workers (top level so they pickle for --jobs)
# ---------------------------------------------------------------------------


def _character_strings(chi):
    return [str(v) for v in chi.values]


def run_instance(task: dict) -> dict:
    suite = task["suite"]
    if suite == "d2":
        return _instance_d2(task)
    if suite == "vanishing":
        return _instance_vanishing(task)
    if suite == "ladder":
        return _instance_ladder(task)
    if suite == "bgg":
        return _instance_bgg(task)
    if suite == "combinatorics":
        return _instance_combinatorics(task)
    if suite == "kato":
        return _instance_kato(task)
    if suite == "typec":
        return _instance_typec(task)
    raise ValueError(f"unknown suite {suite}")


def _instance_d2(task):
    m = Multisegment.parse(task["multisegment"])
    l = m.total_length
    alg = HAlgebra.type_a(l, r=Fraction(task.get("r", "1")))
    x = induce_multisegment(alg, m.pairs())
    dc, _hd = hd_for_module(alg, x)
    audit = d_squared_audit(dc)
    rec = {
        "multisegment": str(m),
        "l": l,
        "dim": x.dim,
        "d2_plain": audit["plain"],
        "d2_tilde": audit["tilde"],
        "anticommute": True,  # dirac_matrix raises otherwise
        "pass": audit["plain"],
    }
    return rec


def _instance_vanishing(task):
    m = Multisegment.parse(task["multisegment"])
    l = m.total_length
    alg = HAlgebra.type_a(l, r=Fraction(task.get("r", "1")))
    x = induce_multisegment(alg, m.pairs())
    dc, hd = hd_for_module(alg, x)
    mt = temp_of(m)
    elliptic_tempered = mt is not None and mt == m
    ok = (hd.dim != 0) == elliptic_tempered

    # Dirac index of the graded companion
    selfdual = m.theta_dual() == m
    if selfdual:
        carrier = z2_grading(alg, induce_multisegment(alg, m.pairs()))
    else:
        carrier = extend_to_graded(alg, x)
    idx = dirac_index(alg, carrier)
    index_ok = idx.is_zero() == (not elliptic_tempered)

    # Iwahori-Matsumoto shadow
    _, hd_im = hd_for_module(alg, im_dual(alg, x))
    im_ok = (hd.dim == 0) == (hd_im.dim == 0)

    vogan = vogan_check(dc, hd)
    rec = {
        "multisegment": str(m),
        "l": l,
        "dim": x.dim,
        "hd_dim": hd.dim,
        "elliptic_tempered": elliptic_tempered,
        "tempered": None,
        "index_zero": idx.is_zero(),
        "index_ok": index_ok,
        "im_shadow_ok": im_ok,
        "vogan_pass": vogan["pass"],
        "graded_carrier": "E" if selfdual else "E(+)theta(E)",
        "pass": ok and index_ok and im_ok and vogan["pass"],
    }
    from .hecke import is_tempered

    rec["tempered"] = is_tempered(alg, x)
    return rec


def _instance_ladder(task):
    m = Multisegment.parse(task["multisegment"])
    l = m.total_length
    alg = HAlgebra.type_a(l, r=Fraction(task.get("r", "1")))
    e = induce_multisegment(alg, m.pairs())
    lad, _rad = simple_quotient(alg, e)
    _, hd_l = hd_for_module(alg, lad)
    mt = temp_of(m)
    et = induce_multisegment(alg, mt.pairs())
    _, hd_t = hd_for_module(alg, et)
    pred = ladder_hd_prediction(m)
    dims = pred["total_dims"]
    readings_hit = sorted(lab for lab, d in dims.items() if d == hd_l.dim)
    rec = {
        "multisegment": str(m),
        "l": l,
        "dim_E": e.dim,
        "dim_L": lad.dim,
        "hd_dim": hd_l.dim,
        "hd_temp_dim": hd_t.dim,
        "characters_equal": hd_l.character == hd_t.character,
        "k_readings": {k: v for k, v in pred["k_readings"].items()},
        "predicted_dims": dims,
        "readings_matched": readings_hit,
        "pass": (hd_l.character == hd_t.character) and bool(readings_hit),
    }
    return rec


def _instance_bgg(task):
    m = Multisegment.parse(task["multisegment"])
    l = m.total_length
    total = None
    for _w, sign, piece in bgg_terms(m):
        if piece is None:
            continue
        lengths = tuple(s.length for s in piece)
        term = induced_sign_character(l, lengths) * sign
        total = term if total is None else total + term
    alpha = alpha_of(m)
    beta = lambda_of(m).transpose()
    m_alpha = multiplicity(total, sym_irreducible_character(l, alpha.parts))
    m_beta = multiplicity(total, sym_irreducible_character(l, beta.parts))
    dim_l = int(total.dim.rational())
    rec = {
        "multisegment": str(m),
        "l": l,
        "alpha": str(alpha),
        "beta": str(beta),
        "mult_alpha": m_alpha,
        "mult_beta": m_beta,
        "dim_L_charlevel": dim_l,
        "pass": m_alpha == 1 and m_beta == 1 and dim_l > 0,
    }
    return rec


def _instance_combinatorics(task):
    m = Multisegment.parse(task["multisegment"])
    checks = {}
    checks["ladder"] = m.is_ladder()
    if is_elliptic_cc(m):
        prof = profile_dict(m)
        lo, hi = min(prof), max(prof)
        vals = [prof.get(e, 0) for e in range(lo, hi + 1)]
        peak = vals.index(max(vals))
        checks["up_then_down"] = (
            all(vals[i] <= vals[i + 1] for i in range(peak))
            and all(vals[i] >= vals[i + 1] for i in range(peak, len(vals) - 1)))
        alpha = alpha_of(m)
        checks["alpha_partition"] = alpha.size == m.total_length
        w = w_of(m)
        classes = linkage_classes(m)
        by_b = sorted(classes, key=lambda f: -f.b)
        a_list = [s.a for s in m.segments]
        hk_ht = hooks_of(m)
        ok = True
        for e, f in enumerate(by_b, start=1):
            n_idx = a_list.index(f.segments[0].a) + 1
            if hk_ht[e - 1][1] != w[n_idx - 1] - n_idx + e:
                ok = False
        checks["ht_lemma"] = ok
    rec = {"multisegment": str(m), "l": m.total_length}
    rec.update(checks)
    rec["pass"] = all(v for k, v in checks.items() if k != "ladder")
    return rec


def _instance_kato(task):
    from .awring import assoc_graded, big_kato, dirac_a_cohomology

    m = Multisegment.parse(task["multisegment"])
    l = m.total_length
    alg = HAlgebra.type_a(l, r=Fraction(task.get("r", "1")))
    mt = temp_of(m)
    rec = {"multisegment": str(m), "l": l}
    if mt == m:
        # tempered instance: Ebar_sigma = bold-K_sigma and H_DA = H_D
        x = z2_grading(alg, induce_multisegment(alg, m.pairs()))
        sigma = lambda_of(m).transpose()
        seed = _graded_seed(alg, x, sigma)
        gr = assoc_graded(alg, x, seed)
        bk = big_kato(l, sigma.parts)
        hda = dirac_a_cohomology(gr)
        _, hd = hd_for_module(alg, x)
        rec.update({
            "kind": "tempered",
            "sigma": str(sigma),
            "graded_dims": gr.graded_dims(),
            "kato_dims": bk.graded_dims,
            "kato_stabilized": bk.stabilized,
            "hda_dim": hda["dim"],
            "hd_dim": hd.dim,
            "square_ok": hda["square_ok"],
            "pass": (gr.graded_dims() == bk.graded_dims and bk.stabilized
                     and hda["dim"] == hd.dim
                     and hda["character"] == hd.character and hda["square_ok"]),
        })
        return rec
    # non-tempered: vanishing transfer on the graded extension
    x = induce_multisegment(alg, m.pairs())
    selfdual = m.theta_dual() == m
    xx = z2_grading(alg, x) if selfdual else extend_to_graded(alg, x)
    sigma = Partition.sorted_from([s.length for s in m]).transpose()
    seed = _graded_seed(alg, xx, sigma)
    from .awring import assoc_graded as ag

    gr = ag(alg, xx, seed)
    from .awring import dirac_a_cohomology as dac

    hda = dac(gr)
    _, hd = hd_for_module(alg, xx)
    transfer_ok = (hda["dim"] != 0) or (hd.dim == 0)
    rec.update({
        "kind": "standard",
        "sigma": str(sigma),
        "graded_dims": gr.graded_dims(),
        "hda_dim": hda["dim"],
        "hd_dim": hd.dim,
        "square_ok": hda["square_ok"],
        "pass": transfer_ok and hda["square_ok"],
    })
    return rec


def _graded_seed(alg, x, sigma_partition):
    sig = sym_irreducible_character(alg.rs.ambient, sigma_partition.parts)
    iso = isotypic_component(x, sig)
    if x.grading is not None:
        p = iso.intersect(x.grading[0])
        if p.dim:
            return p
        return iso.intersect(x.grading[1])
    return iso


def s_lambda_weight(lam, m: Fraction):
    """Central-character string of contents m + col - row, row-major."""
    out = []
    for i, row_len in enumerate(lam, start=1):
        for j in range(1, row_len + 1):
            out.append(m + j - i)
    return tuple(out)


def s_lambda_symbolic(lam) -> str:
    terms = []
    for i, row_len in enumerate(lam, start=1):
        for j in range(1, row_len + 1):
            c = j - i
            if c == 0:
                terms.append("m")
            elif c > 0:
                terms.append(f"m+{c}" if c > 1 else "m+1")
            else:
                terms.append(f"m{c}" if c < -1 else "m-1")
    return "(" + ", ".join(terms) + ")"


def _instance_typec(task):
    n = task["n"]
    mval = Fraction(task["m"])
    alg = HAlgebra.type_c(n, mval, r=Fraction(task.get("r", "1")))
    j_indices = tuple(task["J"])
    eps = {int(k): v for k, v in task["eps"].items()} if isinstance(task["eps"], dict) else dict(task["eps"])
    gamma = tuple(Fraction(g) for g in task["gamma"])
    x = typec_standard(alg, j_indices, eps, gamma)
    dc, hd = hd_for_module(alg, x)
    from .hecke import is_tempered

    family = {orbit_key(alg.rs, s_lambda_weight(lam, mval)): str(lam)
              for lam in partitions_of(n)}
    cc = x.central_character()
    in_family = cc in family
    tempered_def = len(j_indices) == alg.num_simples
    rec = {
        "J": list(j_indices),
        "eps": {str(k): v for k, v in eps.items()},
        "gamma": [str(g) for g in gamma],
        "dim": x.dim,
        "hd_dim": hd.dim,
        "tempered_def82": tempered_def,
        "tempered_weights": is_tempered(alg, x),
        "central_character": [str(c) for c in cc] if cc else None,
        "cc_in_family": in_family,
        "family_label": family.get(cc),
        "pass": (hd.dim == 0) or (tempered_def and in_family),
    }
    return rec


# ---------------------------------------------------------------------------
# Suite runners
# ---------------------------------------------------------------------------


def _sorted_records(records, key_field="multisegment"):
    return sorted(records, key=lambda r: json.dumps(
        {k: r.get(k) for k in sorted(r)}, sort_keys=True, default=str))


def _run_tasks(tasks, jobs):
    if jobs <= 1:
        return [run_instance(t) for t in tasks]
    import multiprocessing as mp

    with mp.Pool(jobs) as pool:
        return pool.map(run_instance, tasks, chunksize=1)


def run_suite(config: SweepConfig) -> Report:
    t0 = time.time()
    suite = config.suite
    if suite == "paper-examples":
        report = _suite_paper_examples()
    elif suite == "typec":
        report = _suite_typec(config)
    else:
        report = _suite_sweep(config)
    report.elapsed = time.time() - t0
    return report


def _suite_sweep(config: SweepConfig) -> Report:
    suite = config.suite
    l, window = config.l, config.window
    if suite == "d2":
        pool = [m for ll in range(2, l + 1) for m in enumerate_zl(ll, window)]
    elif suite == "vanishing":
        pool = enumerate_zl(l, window)
    elif suite in ("ladder", "bgg"):
        pool = [m for ll in range(2, l + 1)
                for m in enumerate_elliptic_ladders(ll, window)]
    elif suite == "combinatorics":
        pool = [m for ll in range(2, l + 1) for m in enumerate_ladders(ll, window)]
    elif suite == "kato":
        pool = []
        for ll in range(2, l + 1):
            for m in enumerate_zl(ll, window):
                mt = temp_of(m)
                if mt == m:
                    pool.append(m)
                elif mt is not None and m.is_ladder():
                    pool.append(m)
    else:
        raise ValueError(f"unknown suite {suite}")
    tasks = [{"suite": suite, "multisegment": str(m), "r": config.r} for m in pool]
    if config.only:
        tasks = [t for t in tasks if t["multisegment"] == str(Multisegment.parse(config.only))]
    records = _run_tasks(tasks, config.jobs)
    records = _sorted_records(records)
    report = Report(suite=suite, records=records)
    report.summary = {"instances": len(records),
                      "pass": all(r["pass"] for r in records)}
    if suite == "vanishing":
        nonzero = [r for r in records if r["hd_dim"] != 0]
        want = len(distinct_odd_partitions_of(l))
        report.summary["nonzero_hd_count"] = len(nonzero)
        report.summary["distinct_odd_partitions"] = want
        report.summary["pass"] = report.summary["pass"] and len(nonzero) == want
    if suite == "ladder":
        readings = None
        for r in records:
            hit = set(r["readings_matched"])
            readings = hit if readings is None else (readings & hit)
        report.summary["uniform_readings"] = sorted(readings) if readings else []
        report.summary["pass"] = report.summary["pass"] and bool(readings)
    return report


def _suite_typec(config: SweepConfig) -> Report:
    n = config.n
    mval = Fraction(config.m)
    generic = mval.denominator not in (1, 2)
    alg = HAlgebra.type_c(n, mval)
    rs = alg.rs
    tasks = []
    seen = set()
    coord_grid = sorted({Fraction(a) + b * mval
                         for a in range(-3, 4) for b in (-1, 0, 1)}
                        | {Fraction(a) + b * mval / 2
                           for a in range(-3, 4) for b in (-1, 1)})
    import itertools as it

    for j_size in range(len(rs.simples) + 1):
        for j_indices in it.combinations(range(len(rs.simples)), j_size):
            for signs in it.product((1, -1), repeat=j_size):
                eps = dict(zip(j_indices, signs))
                # odd-braid-linked simples must share signs
                ok = all(not (a < b and rs.coxeter_m(a, b) % 2 == 1
                              and eps[a] != eps[b])
                         for a in j_indices for b in j_indices)
                if not ok:
                    continue
                for gamma in it.product(coord_grid, repeat=rs.ambient):
                    if not _typec_candidate_valid(alg, j_indices, eps, gamma):
                        continue
                    key = (j_indices, signs, gamma)
                    if key in seen:
                        continue
                    seen.add(key)
                    tasks.append({
                        "suite": "typec", "n": n, "m": str(mval), "r": config.r,
                        "J": list(j_indices),
                        "eps": {str(k): v for k, v in eps.items()},
                        "gamma": [str(g) for g in gamma],
                    })
    records = _run_tasks(tasks, config.jobs)
    records = _sorted_records(records, key_field="gamma")
    report = Report(suite="typec", records=records)
    nonzero_ccs = sorted({tuple(r["central_character"]) for r in records
                          if r["hd_dim"] != 0 and r["central_character"]})
    p_n = len(partitions_of(n))
    golden = s_lambda_symbolic(Partition((3, 2, 2)).transpose())
    report.summary = {
        "instances": len(records),
        "generic_m": generic,
        "nonzero_cc_count": len(nonzero_ccs),
        "p_n": p_n,
        "nonzero_ccs": [list(c) for c in nonzero_ccs],
        "sigma322_string": golden,
        "sigma322_matches_paper": golden == "(m, m+1, m+2, m-1, m, m-2, m-1)",
        "pass": (all(r["pass"] for r in records)
                 and len(nonzero_ccs) <= p_n
                 and golden == "(m, m+1, m+2, m-1, m, m-2, m-1)"),
    }
    return report


def _typec_candidate_valid(alg, j_indices, eps, gamma):
    rs = alg.rs
    from .weyl import dot

    for j in j_indices:
        if dot(rs.simples[j], gamma) != alg.r * alg.c_of(rs.simples[j]) * eps[j]:
            return False
    omegas = rs.fundamental_weights()
    jset = set(j_indices)
    for idx in range(len(rs.simples)):
        if idx in jset:
            if dot(omegas[idx], gamma) < 0:
                return False
        else:
            if dot(rs.simples[idx], gamma) >= 0:
                return False
    return True


def _suite_paper_examples() -> Report:
    records = []

    m1 = Multisegment.parse("[4,5];[2,4];[1,3]")
    prof = [m_profile(m1, e) for e in (1, 2, 3, 4, 5)]
    records.append({"name": "def71-m-profile", "got": prof,
                    "want": [1, 2, 2, 2, 1], "pass": prof == [1, 2, 2, 2, 1]})

    w1 = perm_cycles_str(w_of(Multisegment.parse("[7,10];[4,8];[3,6]")))
    records.append({"name": "w-three-segments", "got": w1, "want": "(1,3)",
                    "pass": w1 == "(1,3)"})

    m2 = Multisegment.parse("[5,7];[3,5];[2,4];[1,3]")
    w2 = perm_cycles_str(w_of(m2))
    js = [f"[{f.a},{f.b}]" for f in linkage_classes(m2)]
    records.append({"name": "w-four-segments", "got": w2, "want": "(1,4,2,3)",
                    "pass": w2 == "(1,4,2,3)"})
    records.append({"name": "J-intervals", "got": js,
                    "want": ["[2,7]", "[3,5]", "[1,3]"],
                    "pass": js == ["[2,7]", "[3,5]", "[1,3]"]})

    lam = lambda_of(Multisegment.parse("[3,7];[2,6];[1,3]"))
    records.append({"name": "lambda-m", "got": str(lam), "want": "(5,5,3)",
                    "pass": lam == (5, 5, 3)})

    hook = Partition((5, 1, 1, 1)).hook_length(1)
    records.append({"name": "first-hook-length", "got": hook, "want": 8,
                    "pass": hook == 8})

    report = Report(suite="paper-examples", records=records)
    report.summary = {"instances": len(records),
                      "pass": all(r["pass"] for r in records)}
    return report


# ---------------------------------------------------------------------------
# Module-level reports
# ---------------------------------------------------------------------------


def module_report(text: str, r="1") -> dict:
    m = Multisegment.parse(text)
    l = m.total_length
    alg = HAlgebra.type_a(l, r=Fraction(r))
    x = induce_multisegment(alg, m.pairs())
    dc, hd = hd_for_module(alg, x)
    from .hecke import is_tempered

    mt = temp_of(m)
    selfdual = m.theta_dual() == m
    carrier = (z2_grading(alg, induce_multisegment(alg, m.pairs()))
               if selfdual else extend_to_graded(alg, x))
    idx = dirac_index(alg, carrier)
    dc2, hd2 = hd_for_module(alg, carrier)
    vogan = vogan_check(dc, hd)
    rep = {
        "multisegment": str(m),
        "dim": x.dim,
        "tempered": is_tempered(alg, x),
        "elliptic": mt == m,
        "hd_dim": hd.dim,
        "hd_plus": hd2.plus[0] if hd2.plus else None,
        "hd_minus": hd2.minus[0] if hd2.minus else None,
        "hd_character": _character_strings(hd.character),
        "index": _character_strings(idx),
        "vogan": "pass" if vogan["pass"] else "fail",
        "graded_carrier": "E" if selfdual else "E(+)theta(E)",
        "weights": [[str(c) for c in wt] + [f"x{mult}"] for wt, mult in x.weights()],
        "central_character": [str(c) for c in x.central_character()] if x.central_character() else None,
    }
    return rep


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="hd", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    si = sub.add_parser("segment-info", help="m-profile, flags, temp, w, alpha, lambda")
    si.add_argument("multisegment")

    mr = sub.add_parser("module-report", help="H_D report for E(m)")
    mr.add_argument("multisegment")
    mr.add_argument("--r", default="1")

    bg = sub.add_parser("bgg", help="print the resolution terms")
    bg.add_argument("multisegment")

    sw = sub.add_parser("sweep", help="run a verification sweep")
    sw.add_argument("--suite", choices=SUITES, required=True)
    sw.add_argument("--type", dest="type_label", choices=("A", "C"), default="A")
    sw.add_argument("--l", type=int, default=3)
    sw.add_argument("--n", type=int, default=2)
    sw.add_argument("--window", type=int, default=3)
    sw.add_argument("--m", default="17/10")
    sw.add_argument("--r", default="1")
    sw.add_argument("--jobs", type=int, default=1)
    sw.add_argument("--out", default=None)
    sw.add_argument("--only", default=None)

    tc = sub.add_parser("typec-sweep", help="type C standard-module sweep")
    tc.add_argument("--n", type=int, default=2)
    tc.add_argument("--m", default="17/10")
    tc.add_argument("--r", default="1")
    tc.add_argument("--jobs", type=int, default=1)
    tc.add_argument("--out", default=None)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "segment-info":
            print(json.dumps(segment_info(Multisegment.parse(args.multisegment)),
                             indent=2, sort_keys=True))
            return 0
        if args.command == "module-report":
            print(json.dumps(module_report(args.multisegment, r=args.r),
                             indent=2, sort_keys=True))
            return 0
        if args.command == "bgg":
            m = Multisegment.parse(args.multisegment)
            for images, sign, piece in bgg_terms(m):
                mark = str(piece) if piece is not None else "0"
                print(f"w={perm_cycles_str(images):<12} sign={sign:+d}  {mark}")
            return 0
        if args.command in ("sweep", "typec-sweep"):
            if args.command == "typec-sweep":
                config = SweepConfig(suite="typec", n=args.n, m=args.m, r=args.r,
                                     jobs=args.jobs, out=args.out)
            else:
                config = SweepConfig(suite=args.suite, type_label=args.type_label,
                                     l=args.l, n=args.n, window=args.window,
                                     m=args.m, r=args.r, jobs=args.jobs,
                                     out=args.out, only=args.only)
            report = run_suite(config)
            if config.out:
                report.write_jsonl(config.out)
            print(report.human_summary())
            return 0 if report.ok else 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
