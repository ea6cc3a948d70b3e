"""Cross-check driver: runs the independent counting routes against each
other and reports the first divergence, if any."""

from __future__ import annotations

from prudentwalks import closedforms, funceq
from prudentwalks.sampler import ExtTable
from prudentwalks.walks import WalkClass, enumerate_counts, enumerate_tri_by_box


def first_divergence(routes):
    """routes: mapping name -> coefficient list.  Compares all pairs on the
    overlap; returns None or a dict describing the smallest divergent n."""
    names = sorted(routes)
    worst = None
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            xa, xb = routes[names[a]], routes[names[b]]
            for n in range(min(len(xa), len(xb))):
                if xa[n] != xb[n]:
                    if worst is None or n < worst["n"]:
                        worst = {
                            "n": n,
                            "route_a": names[a],
                            "route_b": names[b],
                            "value_a": str(xa[n]),
                            "value_b": str(xb[n]),
                        }
                    break
    return worst


def _closed_form_counts(walk_class, order):
    if walk_class is WalkClass.ONE_SIDED:
        from prudentwalks.series import TSeries, ts_inv

        num = TSeries.from_terms(order, {0: 1, 1: 1})
        den = TSeries.from_terms(order, {0: 1, 1: -2, 2: -1})
        return (num * ts_inv(den)).integer_coeffs()
    if walk_class is WalkClass.TWO_SIDED:
        return closedforms.two_sided_closed(order)[2].integer_coeffs()
    if walk_class is WalkClass.THREE_SIDED:
        return closedforms.three_sided_length_series(order)[1].integer_coeffs()
    if walk_class is WalkClass.TRIANGULAR:
        return closedforms.triangular_closed(order)[2].integer_coeffs()
    return None  # no closed form for general prudent walks


def _iteration_counts(walk_class, order):
    if walk_class is WalkClass.ONE_SIDED:
        return funceq.iterate_1sided(order).integer_coeffs()
    if walk_class is WalkClass.TWO_SIDED:
        return funceq.iterate_2sided(order)[1].specialize_ones().integer_coeffs()
    if walk_class is WalkClass.THREE_SIDED:
        return funceq.iterate_3sided(order)[2].specialize_ones().integer_coeffs()
    if walk_class is WalkClass.PRUDENT4:
        return funceq.iterate_4sided(order)[1].specialize_ones().integer_coeffs()
    return funceq.iterate_triangular(order)[1].specialize_ones().integer_coeffs()


def verify_class(walk_class, max_n_oracle, series_order, table_order=None):
    """Compute the four counting routes for one class and compare them."""
    routes = {
        "oracle": enumerate_counts(walk_class, max_n_oracle),
        "iteration": _iteration_counts(walk_class, series_order),
        "ext_table": ExtTable(walk_class, table_order or series_order).counts(),
    }
    closed = _closed_form_counts(walk_class, series_order)
    if closed is not None:
        routes["closed_form"] = closed
    divergence = first_divergence(routes)
    return {
        "class": walk_class.value,
        "routes": {k: [str(c) for c in v] for k, v in routes.items()},
        "max_n_oracle": max_n_oracle,
        "series_order": series_order,
        "agree": divergence is None,
        "first_divergence": divergence,
    }


def verify_tri_box(k_max=4):
    """Box-spanning totals and the r-matrix: formula vs exhaustive search."""
    results = []
    ok = True
    for k in range(k_max + 1):
        total_o, r_o = enumerate_tri_by_box(k)
        total_f, r_f = closedforms.triangular_box_formula(k)
        agree = total_o == total_f and r_o == r_f
        ok = ok and agree
        results.append(
            {
                "k": k,
                "total_oracle": total_o,
                "total_formula": total_f,
                "r_agree": r_o == r_f,
                "agree": agree,
            }
        )
    return {"agree": ok, "by_size": results}


def run_verify(max_n_oracle=12, series_order=60, classes=None, tri_box_k=4):
    """The full cross-check matrix.  Returns a JSON-able report; the overall
    'agree' flag is False iff any route pair diverges anywhere."""
    if classes is None:
        classes = list(WalkClass)
    report = {"classes": [], "agree": True}
    for wc in classes:
        cap = max_n_oracle
        if wc in (WalkClass.PRUDENT4, WalkClass.TRIANGULAR):
            cap = min(cap, 12)  # exhaustive-search budget
        entry = verify_class(wc, cap, series_order)
        report["classes"].append(entry)
        report["agree"] = report["agree"] and entry["agree"]
    if tri_box_k is not None and (
        classes is None or WalkClass.TRIANGULAR in classes
    ):
        box = verify_tri_box(tri_box_k)
        report["tri_box"] = box
        report["agree"] = report["agree"] and box["agree"]
    return report
