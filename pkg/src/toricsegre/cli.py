"""Command-line interface: read a JSON problem document describing a fan
and an ideal, run the full pipeline, and print the Segre class.

The machine format is deterministic JSON (sorted keys, fixed separators)
listing every class as (codimension, basis monomial as a sorted ray-index
multiset, integer coefficient) triples, so identical inputs give
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chow import build_chow_ring, chow_ranks
from .cones import curve_functionals, find_ample
from .errors import InputError, NotHomogeneous, ToricSegreError
from .exactpoly import multidegree_of
from .fan import Fan, build_cox_context, validate_smooth_complete
from .parser import parse_polynomial
from .segre import preprocess, segre_class

# exit codes per diagnostic class; any unlisted error code exits 1
EXIT_CODES = {
    "E_INPUT": 2, "E_PARSE": 2, "E_NOT_HOMOGENEOUS": 2,
    "E_ZERO_POLYNOMIAL": 2,
    "E_FAN_INVALID": 3, "E_FAN_NOT_SMOOTH": 3, "E_FAN_NOT_COMPLETE": 3,
    "E_INVALID_GRADING": 3, "E_NO_POSITIVE_GRADING": 3,
    "E_NOT_PROJECTIVE": 3,
    "E_EMPTY_SUBSCHEME": 4, "E_WHOLE_SPACE": 4,
    "E_RETRIES_EXHAUSTED": 5,
}


def load_document(text):
    """Parse and structurally validate the JSON input document."""
    try:
        doc = json.loads(text)
    except ValueError as exc:
        raise InputError("input is not valid JSON: %s" % exc)
    if not isinstance(doc, dict):
        raise InputError("input document must be a JSON object")
    for key in ("rays", "max_cones", "ideal"):
        if key not in doc:
            raise InputError("missing required field %r" % key)
        if not isinstance(doc[key], list) or not doc[key]:
            raise InputError("field %r must be a non-empty list" % key)
    known = {"rays", "max_cones", "ideal", "variables", "degrees", "options"}
    for key in doc:
        if key not in known:
            raise InputError("unknown field %r" % key)
    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise InputError("field 'options' must be an object")
    known_opts = {"seed", "coeff_bound", "retries", "format"}
    for key in options:
        if key not in known_opts:
            raise InputError("unknown option %r" % key)
    return doc


def build_problem(doc):
    """Fan validation, Cox/Chow construction, and ideal parsing."""
    try:
        fan = Fan(tuple(tuple(v) for v in doc["rays"]),
                  tuple(tuple(c) for c in doc["max_cones"]))
    except TypeError:
        raise InputError("rays and max_cones must be lists of integer lists")
    validate_smooth_complete(fan)
    cox = build_cox_context(fan, names=doc.get("variables"),
                            degrees=doc.get("degrees"))
    chow = build_chow_ring(cox)
    gens = []
    for idx, text in enumerate(doc["ideal"]):
        if not isinstance(text, str):
            raise InputError("ideal entry %d is not a string" % idx)
        g = parse_polynomial(text, cox.ring)
        try:
            multidegree_of(g, cox.ring)
        except NotHomogeneous as exc:
            raise NotHomogeneous(
                "ideal generator %d (%r) is not multihomogeneous: %s"
                % (idx, text, exc),
                **exc.details)
        gens.append(g)
    return cox, chow, gens


def run_checks(cox, chow, out=None):
    """Internal invariant suite on the constructed variety."""
    ranks = chow_ranks(cox.fan)
    assert tuple(len(b) for b in chow.bases) == ranks
    functionals = curve_functionals(cox)
    ample = find_ample(cox, functionals)
    assert all(sum(w * a for w, a in zip(f, ample)) >= 1
               for f in functionals)
    k = cox.fan.dim
    point = chow.power(chow.pic_to_chow(ample), k)
    assert chow.degree(point) > 0
    print("check: ranks %s, %d wall functionals, ample %s, degree %d"
          % (list(ranks), len(functionals), list(ample),
             chow.degree(point)), file=out or sys.stderr)


def _multiset(monomial):
    out = []
    for i, e in enumerate(monomial):
        out.extend([i] * e)
    return out


def _class_triples(chow, cls, codim):
    coeffs = chow.coefficients_on_basis(cls, codim)
    return [[codim, _multiset(m), int(c)]
            for m, c in zip(chow.bases[codim], coeffs)]


def build_output(cox, chow, problem, result, retries):
    k = cox.fan.dim
    n = result.dim
    classes = []
    segre = []
    for i, s in enumerate(result.components):
        codim = k - n + i
        triples = _class_triples(chow, s, codim)
        classes.extend(triples)
        segre.append({"codim": codim,
                      "coefficients": [t[2] for t in triples]})
    residuals = []
    for rd in result.residuals:
        if rd.dimension is None:
            residuals.append({"d": rd.d, "empty": True, "gammas": [],
                              "class": []})
        else:
            residuals.append({
                "d": rd.d, "empty": False,
                "gammas": [int(g) for g in rd.gammas],
                "class": _class_triples(chow, rd.chow_class, rd.d)})
    return {
        "alpha": [int(a) for a in result.alpha],
        "k": k,
        "n": n,
        "bases": [[_multiset(m) for m in chow.bases[p]]
                  for p in range(k + 1)],
        "classes": classes,
        "segre": segre,
        "residuals": residuals,
        "provenance": {
            "seed": result.seed,
            "coeff_bound": result.coeff_bound,
            "retries": retries,
            "attempt": result.attempt,
            "consistency_rows_verified": True,
        },
    }


def format_machine(out_doc):
    return json.dumps(out_doc, sort_keys=True, separators=(",", ":")) + "\n"


def format_human(cox, chow, result, verbose=False):
    k = cox.fan.dim
    n = result.dim
    names = chow.ctx.names
    lines = []
    lines.append("alpha = (%s)" % ", ".join(str(a) for a in result.alpha))
    lines.append("dim Z = %d  (codim %d in the %d-fold)" % (n, k - n, k))
    if verbose:
        for rd in result.residuals:
            if rd.dimension is None:
                lines.append("R_%d: empty" % rd.d)
            else:
                lines.append("R_%d: [R] = %s; gammas %s"
                             % (rd.d, chow.format_class(rd.chow_class, names),
                                list(rd.gammas)))
    for i, s in enumerate(result.components):
        lines.append("s_%d = %s" % (i, chow.format_class(s, names)))
    lines.append("s(Z,X) = %s" % chow.format_class(result.total, names))
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="toricsegre",
        description="Push-forward Segre class of a subscheme of a smooth "
                    "projective toric variety.")
    ap.add_argument("--input", required=True,
                    help="path to the JSON problem document ('-' for stdin)")
    ap.add_argument("--seed", type=int, default=None,
                    help="master random seed (default 0)")
    ap.add_argument("--coeff-bound", type=int, default=None,
                    help="random coefficients drawn from +-[1, N] "
                         "(default 100)")
    ap.add_argument("--retries", type=int, default=None,
                    help="resample rounds before giving up (default 5)")
    ap.add_argument("--format", choices=("human", "json"), default=None,
                    help="output format (default human)")
    ap.add_argument("--check", action="store_true",
                    help="run the internal invariant suite on the variety "
                         "before computing")
    ap.add_argument("--verbose", action="store_true",
                    help="print residual data as well")
    args = ap.parse_args(argv)
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input) as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError("cannot read %r: %s" % (args.input, exc))
        doc = load_document(text)
        options = doc.get("options", {})

        def opt(flag, name, default):
            return flag if flag is not None else options.get(name, default)

        seed = opt(args.seed, "seed", 0)
        bound = opt(args.coeff_bound, "coeff_bound", 100)
        retries = opt(args.retries, "retries", 5)
        fmt = opt(args.format, "format", "human")
        cox, chow, gens = build_problem(doc)
        if args.check:
            run_checks(cox, chow)
        problem = preprocess(cox, chow, gens)
        result = segre_class(problem, seed=seed, coeff_bound=bound,
                             retries=retries)
        if fmt == "json":
            sys.stdout.write(format_machine(
                build_output(cox, chow, problem, result, retries)))
        else:
            sys.stdout.write(format_human(cox, chow, result,
                                          verbose=args.verbose))
        return 0
    except ToricSegreError as exc:
        print("error %s: %s" % (exc.code, exc), file=sys.stderr)
        return EXIT_CODES.get(exc.code, 1)


if __name__ == "__main__":
    sys.exit(main())
