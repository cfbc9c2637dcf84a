"""Term rewriting over retarded invariants.

An expression is a sum of monomials.  Each monomial (``Term``) carries

* an exact rational coefficient,
* integer powers of the scalars ``e`` (charge), ``lam`` (a length),
  ``xi`` (retarded distance), ``kappa`` (acceleration invariant) and
  ``chi`` (biacceleration invariant),
* at most one distribution factor ``Ups`` (the half-line step), ``delta``
  = Ups', ``delta1`` = Ups'', ``delta2`` = Ups''', all evaluated at ``xi``,
* a product of lower-index tensor atoms: ``g`` (metric, two indices) and
  the vectors ``K`` (unit null vector), ``U`` (four-velocity), ``A``
  (four-acceleration), ``J`` (biacceleration) and ``R`` (the interval).

Canonical form replaces ``R`` by ``xi K``, contracts every repeated index
(with ``g`` by renaming, with itself by the trace 4, between vectors by the
contraction table), merges like terms and sorts them by distribution rank,
then ``xi`` power, then tensor word.

Signature enters only through the contraction table.  With
``s = U.U`` (``-1`` for ``(-,+,+,+)``, the default):

    K.K = 0, U.K = s, U.U = s, A.K = s kappa, A.U = 0, J.K = s chi.

Canonical string grammar (used by reports and golden files)::

    expr    := "0" | term (" " term)*
    term    := ("+"|"-") INT ["/" INT] ("*" factor)*
    factor  := scalar ["^" INT] | dist | "(" ATOM "." ATOM ")" | ATOM ("_" INDEX)+
    scalar  := "e" | "lam" | "xi" | "kappa" | "chi"
    dist    := "Ups" | "delta" | "delta1" | "delta2" | "deltaN"
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
import itertools
import re

import numpy as np

__all__ = [
    "Term", "Expr", "RuleTable", "UnknownAtomError", "MissingBindingError",
    "scalar", "vector", "metric_atom", "dist", "const",
    "causal_grad", "dalembertian", "assoc_simplify", "expr_equal",
    "evaluate_numeric", "parse", "generating_function", "reference_box_potential",
    "reference_lienard_wiechert", "reference_shell_term",
]

SCALARS = ("e", "lam", "xi", "kappa", "chi")
VECTORS = ("K", "U", "A", "J", "R")
DIST_NAMES = {0: "Ups", 1: "delta", 2: "delta1", 3: "delta2"}
_DIST_BY_NAME = {v: k for k, v in DIST_NAMES.items()}
INDEX_NAMES = ("mu", "nu", "rho", "sigma", "alpha", "beta", "gamma", "lam_", "kap_")


class UnknownAtomError(KeyError):
    pass


class MissingBindingError(KeyError):
    pass


def _dist_name(n):
    if n is None:
        return None
    return DIST_NAMES.get(n, f"delta{n - 1}")


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    powers: tuple = (0, 0, 0, 0, 0)      # e, lam, xi, kappa, chi
    dist: int | None = None              # None, 0 Ups, 1 delta, 2 delta', ...
    factors: tuple = ()                  # (name, (index, ...)) pairs
    dots: tuple = ()                     # uncontracted scalar products, e.g. "A.A"

    @property
    def charge_power(self):
        return self.powers[0]

    @property
    def lambda_power(self):
        return self.powers[1]

    @property
    def xi_power(self):
        return self.powers[2]

    @property
    def kappa_power(self):
        return self.powers[3]

    @property
    def chi_power(self):
        return self.powers[4]

    def free_indices(self):
        c = Counter(i for _, idx in self.factors for i in idx)
        return tuple(i for _, idx in self.factors for i in idx if c[i] == 1)

    def tensor_word(self):
        return " ".join(_factor_str(f) for f in self.factors)

    def key(self):
        return (self.powers, self.dist, self.factors, self.dots)

    def sort_key(self):
        rank = -1 if self.dist is None else self.dist
        return (rank, self.xi_power, self.tensor_word(), self.kappa_power, self.chi_power,
                self.charge_power, self.lambda_power, self.dots)

    def times(self, other: "Term") -> "Term":
        if self.dist is not None and other.dist is not None:
            raise ValueError("product of two distribution factors is not supported")
        return Term(
            self.coeff * other.coeff,
            tuple(a + b for a, b in zip(self.powers, other.powers)),
            self.dist if self.dist is not None else other.dist,
            self.factors + other.factors,
            tuple(sorted(self.dots + other.dots)),
        )

    def scaled(self, c) -> "Term":
        return Term(self.coeff * c, self.powers, self.dist, self.factors, self.dots)

    def with_power(self, slot, delta) -> "Term":
        p = list(self.powers)
        p[slot] += delta
        return Term(self.coeff, tuple(p), self.dist, self.factors, self.dots)

    def renamed(self, mapping) -> "Term":
        facs = tuple((n, tuple(mapping.get(i, i) for i in idx)) for n, idx in self.factors)
        return Term(self.coeff, self.powers, self.dist, facs, self.dots)

    def __str__(self):
        c = self.coeff
        parts = [("+" if c >= 0 else "-") + str(abs(c))]
        for name, p in zip(SCALARS, self.powers):
            if p == 1:
                parts.append(name)
            elif p != 0:
                parts.append(f"{name}^{p}")
        parts += [f"({d})" for d in self.dots]
        if self.dist is not None:
            parts.append(_dist_name(self.dist))
        parts += [_factor_str(f) for f in self.factors]
        return "*".join(parts)


def _factor_str(f):
    name, idx = f
    return name + "".join("_" + i for i in idx)


class _Contractions:
    def __init__(self, signature):
        s = Fraction(signature)
        self.signature = signature
        self.table = {
            ("K", "K"): None,
            ("K", "U"): (s, {}),
            ("U", "U"): (s, {}),
            ("A", "K"): (s, {"kappa": 1}),
            ("A", "U"): None,
            ("J", "K"): (s, {"chi": 1}),
        }

    def contract(self, a, b):
        key = tuple(sorted((a, b)))
        if key in self.table:
            return self.table[key], True
        return ".".join(key), False


_CONTRACTIONS = {}


def _contractions(signature):
    if signature not in _CONTRACTIONS:
        _CONTRACTIONS[signature] = _Contractions(signature)
    return _CONTRACTIONS[signature]


def canonical_term(t: Term, signature=-1) -> Term | None:
    """Contract repeated indices and expand R; None if the term vanishes."""
    table = _contractions(signature)
    coeff = t.coeff
    powers = dict(zip(SCALARS, t.powers))
    dots = list(t.dots)
    factors = []
    for name, idx in t.factors:
        if name == "R":
            powers["xi"] += 1
            name = "K"
        factors.append([name, list(idx)])
    while True:
        counts = Counter(i for _, idx in factors for i in idx)
        bad = [i for i, c in counts.items() if c > 2]
        if bad:
            raise ValueError(f"index {bad[0]!r} appears more than twice")
        rep = sorted(i for i, c in counts.items() if c == 2)
        if not rep:
            break
        i = rep[0]
        holders = [k for k, f in enumerate(factors) if i in f[1]]
        if len(holders) == 1:
            k = holders[0]
            if factors[k][0] != "g":
                raise ValueError("a vector cannot carry the same index twice")
            coeff *= 4
            del factors[k]
            continue
        k1, k2 = holders
        f1, f2 = factors[k1], factors[k2]
        if f1[0] == "g" or f2[0] == "g":
            gk, ok = (k1, k2) if f1[0] == "g" else (k2, k1)
            g = factors[gk]
            other_index = g[1][1] if g[1][0] == i else g[1][0]
            factors[ok][1] = [other_index if j == i else j for j in factors[ok][1]]
            del factors[gk]
            continue
        value, known = table.contract(f1[0], f2[0])
        for k in sorted((k1, k2), reverse=True):
            del factors[k]
        if not known:
            dots.append(value)
        elif value is None:
            return None
        else:
            c, extra = value
            coeff *= c
            for name, p in extra.items():
                powers[name] += p
    if coeff == 0:
        return None
    canon = []
    for name, idx in factors:
        if name == "g":
            idx = sorted(idx)
        canon.append((name, tuple(idx)))
    canon.sort(key=lambda f: (f[1], f[0]))
    return Term(coeff, tuple(powers[s] for s in SCALARS), t.dist, tuple(canon), tuple(sorted(dots)))


class Expr:
    """Canonical sum of terms with a fixed set of free indices."""

    __slots__ = ("terms", "indices", "signature")

    def __init__(self, terms=(), indices=None, signature=-1, raw=False):
        self.signature = signature
        if raw:
            merged = list(terms)
        else:
            acc = {}
            for t in terms:
                ct = canonical_term(t, signature)
                if ct is None:
                    continue
                k = ct.key()
                acc[k] = Term(acc[k].coeff + ct.coeff, *k) if k in acc else ct
            merged = sorted((t for t in acc.values() if t.coeff != 0), key=Term.sort_key)
        free_sets = {frozenset(t.free_indices()) for t in merged}
        if len(free_sets) > 1:
            raise ValueError(f"terms disagree on free indices: {sorted(map(sorted, free_sets))}")
        found = merged[0].free_indices() if merged else ()
        if indices is None:
            indices = tuple(found)
        elif merged and set(indices) != set(found):
            raise ValueError(f"declared indices {indices} do not match {found}")
        self.terms = tuple(merged)
        self.indices = tuple(indices)

    # --- construction helpers ---
    def _wrap(self, other):
        if isinstance(other, Expr):
            if other.signature != self.signature:
                raise ValueError("cannot mix expressions of different signature")
            return other
        if isinstance(other, (int, Fraction)):
            return const(other, self.signature)
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        if not self.terms:
            return other
        if not other.terms:
            return self
        return Expr(self.terms + other.terms, self.indices, self.signature)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Expr([t.scaled(Fraction(other)) for t in self.terms], self.indices, self.signature)
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        clash = set(self.indices) & set(other.indices)
        products = [a.times(b) for a, b in itertools.product(self.terms, other.terms)]
        indices = tuple(i for i in self.indices + other.indices if i not in clash)
        return Expr(products, indices, self.signature)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n):
        if len(self.terms) != 1 or self.indices or self.terms[0].dist is not None \
                or self.terms[0].factors or self.terms[0].coeff != 1:
            raise ValueError("only bare scalar monomials can be raised to a power")
        t = self.terms[0]
        return Expr([Term(Fraction(1), tuple(p * n for p in t.powers))], (), self.signature)

    def __eq__(self, other):
        return isinstance(other, Expr) and expr_equal(self, other)

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        return " ".join(str(t) for t in self.terms) if self.terms else "0"

    def __repr__(self):
        return f"Expr({str(self)!r})"

    def is_zero(self):
        return not self.terms

    def renamed(self, mapping):
        return Expr([t.renamed(mapping) for t in self.terms],
                    tuple(mapping.get(i, i) for i in self.indices), self.signature)

    def canonicalize(self):
        return Expr(self.terms, self.indices, self.signature)

    def coefficient_of(self, template: "Expr"):
        """Sub-expression of terms sharing the distribution and tensor word of ``template``'s single term."""
        (t,) = template.terms
        keep = [u for u in self.terms if u.dist == t.dist and u.factors == t.factors]
        return Expr(keep, self.indices if keep else template.indices, self.signature)


def const(c, signature=-1):
    return Expr([Term(Fraction(c))], (), signature)


def scalar(name, signature=-1):
    if name not in SCALARS:
        raise ValueError(f"unknown scalar {name!r}")
    p = [0] * len(SCALARS)
    p[SCALARS.index(name)] = 1
    return Expr([Term(Fraction(1), tuple(p))], (), signature)


def vector(name, index, signature=-1):
    if name not in VECTORS:
        raise ValueError(f"unknown vector atom {name!r}")
    return Expr([Term(Fraction(1), factors=((name, (index,)),))], (index,), signature)


def metric_atom(i, j, signature=-1):
    return Expr([Term(Fraction(1), factors=(("g", (i, j)),))], (i, j), signature)


def dist(order, signature=-1):
    """Distribution factor: 0 Ups, 1 delta, 2 delta', 3 delta''."""
    return Expr([Term(Fraction(1), dist=order)], (), signature)


# --- rule table -------------------------------------------------------------

_M, _A = "_m", "_a"


class RuleTable:
    """Gradient rules for the causal derivative, derived for one signature.

    Primitive rules come from differentiating under the light-cone
    constraint (explicit X dependence plus ``d tau / d x^mu``)::

        d_m tau = s K_m
        d_m R_a = g_ma - s K_m U_a
        d_m U_a = s K_m A_a
        d_m A_a = s K_m J_a

    The rules for ``xi = s U.R``, ``K = R / xi`` and ``kappa = s A.K`` are
    then computed by the engine itself from those definitions.  ``flip``
    names rules whose sign is reversed after derivation (negative controls).
    """

    def __init__(self, signature=-1, flip=()):
        if signature not in (-1, 1):
            raise ValueError("signature must be -1 or +1")
        self.signature = signature
        s = signature
        K_m, U_a, A_a, J_a = (vector("K", _M, s), vector("U", _A, s),
                              vector("A", _A, s), vector("J", _A, s))
        self.tau = K_m * s
        self.vectors = {
            "R": metric_atom(_M, _A, s) - K_m * U_a * s,
            "U": K_m * A_a * s,
            "A": K_m * J_a * s,
        }
        self.scalars = {}
        # xi = s U_b R_b, kept raw so the definition is differentiated as written
        xi_def = Term(Fraction(s), factors=(("U", ("_b",)), ("R", ("_b",))))
        self.scalars["xi"] = _grad_raw([xi_def], _M, self, ())
        k_def = Term(Fraction(1), (0, 0, -1, 0, 0), None, (("R", (_A,)),))
        self.vectors["K"] = _grad_raw([k_def], _M, self, (_A,))
        kappa_def = Term(Fraction(s), factors=(("A", ("_b",)), ("K", ("_b",))))
        self.scalars["kappa"] = _grad_raw([kappa_def], _M, self, ())
        # canonical R_a is xi K_a: its rule follows from the two above
        self.vectors["R"] = _grad_raw(
            [Term(Fraction(1), (0, 0, 1, 0, 0), None, (("K", (_A,)),))], _M, self, (_A,))
        for name in flip:
            if name in self.scalars:
                self.scalars[name] = -self.scalars[name]
            elif name in self.vectors:
                self.vectors[name] = -self.vectors[name]
            elif name == "tau":
                self.tau = -self.tau
            else:
                raise UnknownAtomError(name)
        self.flipped = tuple(flip)

    def scalar_rule(self, name):
        if name not in self.scalars:
            raise UnknownAtomError(f"no gradient rule for scalar {name!r}")
        return self.scalars[name]

    def vector_rule(self, name):
        if name not in self.vectors:
            raise UnknownAtomError(f"no gradient rule for atom {name!r}")
        return self.vectors[name]

    def validated_rules(self):
        return ("tau", "xi", "kappa", "K", "R", "U", "A")

    def gradient_expr(self, name, indices=("mu", "nu")):
        """Rule for ``d_mu name`` with readable index names."""
        if name == "tau":
            rule = self.tau
        elif name in self.scalars:
            rule = self.scalars[name]
        else:
            rule = self.vector_rule(name)
        return rule.renamed({_M: indices[0], _A: indices[1]})

    def describe(self):
        out = {"tau": str(self.gradient_expr("tau"))}
        for n in ("xi", "kappa"):
            out[n] = str(self.gradient_expr(n))
        for n in ("K", "R", "U", "A"):
            out[n] = str(self.gradient_expr(n))
        return out


def _grad_raw(terms, m, table: RuleTable, out_indices):
    """Product-rule gradient of (possibly non-canonical) terms."""
    s = table.signature
    pieces = []

    def add(prefix: Term, rule: Expr, mapping):
        for r in rule.terms:
            pieces.append(prefix.times(r.renamed(mapping)))

    for t in terms:
        if t.dots:
            raise UnknownAtomError(f"no gradient rule for scalar product {t.dots[0]!r}")
        for slot, name in enumerate(SCALARS):
            p = t.powers[slot]
            if p == 0 or name in ("e", "lam"):
                continue
            rule = table.scalar_rule(name)
            add(t.with_power(slot, -1).scaled(p), rule, {_M: m})
        if t.dist is not None:
            bumped = Term(t.coeff, t.powers, t.dist + 1, t.factors, t.dots)
            add(bumped, table.scalar_rule("xi"), {_M: m})
        for k, (name, idx) in enumerate(t.factors):
            if name == "g":
                continue
            rule = table.vector_rule(name)
            rest = Term(t.coeff, t.powers, t.dist, t.factors[:k] + t.factors[k + 1:], t.dots)
            add(rest, rule, {_M: m, _A: idx[0]})
    return Expr(pieces, (m,) + tuple(out_indices), s)


_DEFAULT_TABLES = {}


def default_table(signature=-1):
    if signature not in _DEFAULT_TABLES:
        _DEFAULT_TABLES[signature] = RuleTable(signature)
    return _DEFAULT_TABLES[signature]


def _fresh(expr, n=1, avoid=()):
    used = set(expr.indices) | set(avoid)
    for t in expr.terms:
        used.update(i for _, idx in t.factors for i in idx)
    out = []
    for name in INDEX_NAMES + tuple(f"i{k}" for k in range(100)):
        if name not in used:
            out.append(name)
            used.add(name)
            if len(out) == n:
                return out
    raise RuntimeError("ran out of index names")


def causal_grad(expr: Expr, index=None, table: RuleTable | None = None) -> Expr:
    """d_index expr under the causal rule; the new index is prepended."""
    table = table or default_table(expr.signature)
    if table.signature != expr.signature:
        raise ValueError("rule table and expression signatures differ")
    if index is None:
        (index,) = _fresh(expr)
    elif index in expr.indices:
        raise ValueError(f"index {index!r} already free in the expression")
    return _grad_raw(expr.terms, index, table, expr.indices)


def dalembertian(expr: Expr, table: RuleTable | None = None) -> Expr:
    """d^m d_m expr: two causal gradients, then metric contraction."""
    a, b = _fresh(expr, 2)
    twice = causal_grad(causal_grad(expr, a, table), b, table)
    return Expr([t.renamed({b: a}) for t in twice.terms], expr.indices, expr.signature)


def assoc_simplify(expr: Expr, mode="strict") -> Expr:
    """Apply distributional rewrites.

    strict       no rewrite (representative-level identity).
    associative  Ups^(n)(xi) -> -(n-1) Ups^(n-1)(xi) / xi for n >= 2, i.e.
                 delta' -> -delta/xi, iterated down to delta.
    schwartz     associative, then xi^p delta -> 0 for p >= 1.
    """
    if mode == "strict":
        return expr
    if mode not in ("associative", "schwartz"):
        raise ValueError(f"unknown simplification mode {mode!r}")
    terms = list(expr.terms)
    done = []
    while terms:
        t = terms.pop()
        if t.dist is not None and t.dist >= 2:
            n = t.dist
            terms.append(Term(t.coeff * -(n - 1), t.with_power(2, -1).powers, n - 1, t.factors, t.dots))
        else:
            done.append(t)
    if mode == "schwartz":
        done = [t for t in done if not (t.dist is not None and t.dist >= 1 and t.xi_power >= 1)]
    return Expr(done, expr.indices, expr.signature)


def expr_equal(a: Expr, b: Expr) -> bool:
    """True iff the canonical forms agree term for term."""
    if a.signature != b.signature:
        return False
    ca, cb = a.canonicalize(), b.canonicalize()
    if set(ca.indices) != set(cb.indices):
        return False
    return ca.terms == cb.terms


# --- numeric evaluation ---------------------------------------------------

def _binding(bindings, name):
    if name not in bindings:
        raise MissingBindingError(f"no value bound for {name!r}")
    return bindings[name]


def evaluate_numeric(expr: Expr, frame, dist_values, signature=None, indices=None):
    """Substitute numbers for every atom and evaluate.

    ``frame`` is a RetardedFrame or a mapping with keys xi, kappa, chi, K,
    U, A, J, g (vectors as lower-index arrays, possibly batched along
    leading axes).  ``dist_values`` supplies Ups, delta, delta1, ... and
    the constants e and lam when the expression uses them.  The result's
    trailing axes follow ``indices`` (default ``expr.indices``).
    """
    signature = expr.signature if signature is None else signature
    if hasattr(frame, "bindings"):
        frame = frame.bindings(signature)
    values = dict(frame)
    values.update(dist_values or {})
    indices = tuple(expr.indices if indices is None else indices)
    letters = {i: chr(ord("a") + k) for k, i in enumerate(indices)}
    out_sub = "".join(letters[i] for i in indices)
    total = 0.0
    for t in expr.terms:
        val = float(t.coeff)
        for name, p in zip(SCALARS, t.powers):
            if p:
                val = val * np.asarray(_binding(values, name), dtype=float) ** p
        for d in t.dots:
            val = val * np.asarray(_binding(values, d), dtype=float)
        if t.dist is not None:
            val = val * np.asarray(_binding(values, _dist_name(t.dist)), dtype=float)
        if not t.factors:
            total = total + (val if not indices else 0.0)
            continue
        ops, subs = [], []
        for name, idx in t.factors:
            arr = np.asarray(_binding(values, name), dtype=float)
            ops.append(arr)
            sub = "".join(letters[i] for i in idx)
            subs.append(("..." if arr.ndim > len(idx) else "") + sub)
        val = np.asarray(val)
        spec = ",".join(["..."] + subs) + "->..." + out_sub
        total = total + np.einsum(spec, val, *ops)
    return total


# --- parsing ----------------------------------------------------------------

_TERM_RE = re.compile(r"^([+-])(\d+)(?:/(\d+))?$")


def parse(text: str, signature=-1, indices=None) -> Expr:
    """Inverse of ``str(expr)``."""
    text = text.strip()
    if text == "0":
        return Expr([], tuple(indices or ()), signature)
    terms = []
    for chunk in text.split():
        head, *factors = chunk.split("*")
        m = _TERM_RE.match(head)
        if not m:
            raise ValueError(f"bad coefficient in {chunk!r}")
        c = Fraction(int(m.group(2)), int(m.group(3) or 1))
        if m.group(1) == "-":
            c = -c
        powers = [0] * len(SCALARS)
        d, facs, dots = None, [], []
        for f in factors:
            base, _, exp = f.partition("^")
            if base in SCALARS:
                powers[SCALARS.index(base)] += int(exp) if exp else 1
            elif base in _DIST_BY_NAME:
                d = _DIST_BY_NAME[base]
            elif re.fullmatch(r"delta\d+", base):
                d = int(base[5:]) + 1
            elif base.startswith("(") and base.endswith(")"):
                dots.append(base[1:-1])
            else:
                name, *idx = base.split("_")
                if name not in VECTORS + ("g",) or not idx:
                    raise ValueError(f"bad factor {f!r}")
                facs.append((name, tuple(idx)))
        terms.append(Term(c, tuple(powers), d, tuple(facs), tuple(sorted(dots))))
    return Expr(terms, indices, signature)


# --- the expressions this package is about ----------------------------------

def generating_function(index="mu", signature=-1) -> Expr:
    """Phi_mu = (1/2) e R_mu Ups(xi)."""
    return Fraction(1, 2) * scalar("e", signature) * vector("R", index, signature) * dist(0, signature)


def reference_lienard_wiechert(index="mu", signature=-1) -> Expr:
    """e (1/xi) U_mu Ups(xi): the Lienard-Wiechert term, written out by hand."""
    e, xi = scalar("e", signature), scalar("xi", signature)
    return e * xi ** -1 * vector("U", index, signature) * dist(0, signature)


def reference_box_potential(index="mu", signature=-1) -> Expr:
    """Hand-written reference form of the d'Alembertian of the generating function."""
    s = signature
    e, xi, kappa = scalar("e", s), scalar("xi", s), scalar("kappa", s)
    K = vector("K", index, s)
    second = Fraction(1, 2) * e * K * (
        (4 - 6 * xi * kappa) * dist(1, s) + (1 - 2 * xi * kappa) * xi * dist(2, s))
    return reference_lienard_wiechert(index, s) + second


def reference_shell_term(index="mu", signature=-1) -> Expr:
    """e (3 - 4 xi kappa)/2 K_mu delta(xi)."""
    s = signature
    e, xi, kappa = scalar("e", s), scalar("xi", s), scalar("kappa", s)
    return e * Fraction(1, 2) * (3 - 4 * xi * kappa) * vector("K", index, s) * dist(1, s)
