"""Python front end to the k3lat C++ core.

Report functions return the parsed RunReport dict; pass raw=True for the JSON
text, which is byte-identical to what the k3lat CLI prints.
"""
import json

try:
    from . import _k3lat
except ImportError:  # in-tree build: module next to the package, not inside it
    import _k3lat

tool_version = _k3lat.tool_version
catalog_names = _k3lat.catalog_names
known_faults = _k3lat.known_faults
ueda_constant = _k3lat.ueda_constant


def _report(text, raw):
    return text if raw else json.loads(text)


def lattice_info(name="", gram=None, raw=False):
    g = "" if gram is None else json.dumps(gram)
    return _report(_k3lat.lattice_info(name, g), raw)


def lattice_glue(which, raw=False):
    return _report(_k3lat.lattice_glue(which), raw)


def coxeter(name="", gram=None, order=None, raw=False):
    g = "" if gram is None else json.dumps(gram)
    o = "" if order is None else ",".join(str(i) for i in order)
    return _report(_k3lat.coxeter(name, g, o), raw)


def roots(name="", gram=None, list_roots=False, max_disjoint=False, raw=False):
    g = "" if gram is None else json.dumps(gram)
    return _report(_k3lat.roots(name, g, list_roots, max_disjoint), raw)


def period(xr=0.0, xi=2.0, lam=0.0, p="0", q="mu", picard=False, raw=False):
    return _report(_k3lat.period(xr, xi, lam, p, q, picard), raw)


def dioph_check(p, q, nmax=10000, minpoly=None, interval=None, precision_bits=200, raw=False):
    mp = "" if minpoly is None else ",".join(str(c) for c in minpoly)
    iv = "" if interval is None else ",".join(str(x) for x in interval)
    return _report(_k3lat.dioph_check(p, q, nmax, mp, iv, precision_bits), raw)


def salem(case, a=0, raw=False):
    return _report(_k3lat.salem(case, a), raw)


def majorant(q, p="0", equation="ueda", K="1", M="1", Q="1", terms=32, precision_bits=200, raw=False):
    return _report(_k3lat.majorant(q, p, equation, str(K), str(M), str(Q), terms, precision_bits), raw)


def verify_paper(faults=(), precision_bits=200, seed=20240601, tol=1e-6, raw=False):
    return _report(_k3lat.verify_paper(list(faults), precision_bits, seed, tol), raw)


def char_poly(matrix):
    return [int(c) for c in _k3lat.char_poly(matrix)]


__all__ = [
    "catalog_names", "char_poly", "coxeter", "dioph_check", "known_faults", "lattice_glue",
    "lattice_info", "majorant", "period", "roots", "salem", "tool_version", "ueda_constant",
    "verify_paper",
]
