"""The SU(3) state functions: rules, rewriting engine, twists and
normalizations."""

from __future__ import annotations

import random
from fractions import Fraction
from dataclasses import dataclass, field

from .basis import is_non_elliptic
from .diagram import Diagram
from .kauffman import NoSuchCrossing
from .ring import LaurentPoly
from .statevector import StateVector

COEFFS = ("x", "y", "u", "v", "beta", "tau", "a")


class ZeroParameter(ValueError):
    pass


class IncoherentOrientation(ValueError):
    pass


class NotReducible(ValueError):
    pass


class IllegalCrossingTwist(ValueError):
    pass


class KhovanovRequiresVertexFree(ValueError):
    pass


class RuleSetInvariantError(AssertionError):
    pass


def _lp(x) -> LaurentPoly:
    return LaurentPoly.coerce(x)


@dataclass(frozen=True)
class RuleSet:
    """Coefficients of the five local rules.

    ``x, y`` weight the two resolutions of a positive crossing, ``u, v``
    those of a negative one, ``a`` both terms of the square rule, ``beta`` a
    bubble and ``tau`` a circle.
    """

    a: LaurentPoly
    y: LaurentPoly
    x: LaurentPoly
    u: LaurentPoly
    v: LaurentPoly
    beta: LaurentPoly
    tau: LaurentPoly
    label: str = field(default="", compare=False)

    def residuals(self) -> dict[str, LaurentPoly]:
        a, y, x, u, v, b, t = self.a, self.y, self.x, self.u, self.v, self.beta, self.tau
        return {
            "xu-1": x * u - 1,
            "yva-1": y * v * a - 1,
            "tau+(xv+uy)beta+1": t + (x * v + u * y) * b + 1,
            "x^2+xy*beta+y^2a": x * x + x * y * b + y * y * a,
        }

    def perturbed(self, name: str, delta=1) -> RuleSet:
        """A copy with one coefficient shifted; invariants are not checked."""
        if name not in COEFFS:
            raise KeyError(name)
        values = {k: getattr(self, k) for k in COEFFS}
        values[name] = values[name] + _lp(delta)
        return RuleSet(label=f"{name}+{delta}", **values)


def su3_params(a=1, y="y", check: bool = True) -> RuleSet:
    """The two-parameter family of rule sets.  ``a`` and ``y`` are monomials
    (numbers, variables, or canonical text like ``"-q^-1"``)."""
    a, y = _lp(a), _lp(y)
    if a == 0 or y == 0:
        raise ZeroParameter("a and y must be nonzero")
    ai, yi = a.inverse(), y.inverse()
    rs = RuleSet(
        a=a,
        y=y,
        x=yi ** 2 * ai,
        u=y ** 2 * a,
        v=yi * ai,
        beta=-(yi ** 3 * ai) - y ** 3 * a ** 2,
        tau=a ** 3 * y ** 6 + 1 + ai ** 3 * yi ** 6,
    )
    if check:
        bad = {k: r for k, r in rs.residuals().items() if r != 0}
        if bad:
            raise RuleSetInvariantError(f"rule set invariants fail: {bad}")
    return rs


def symbolic_params() -> RuleSet:
    return su3_params(LaurentPoly.var("a"), LaurentPoly.var("y"))


def su3_identity_suite(rs: RuleSet | None = None) -> list[tuple[str, LaurentPoly]]:
    """Named polynomial identities the rule coefficients must satisfy."""
    rs = rs or symbolic_params()
    a, y, x, u, v, b, t = rs.a, rs.y, rs.x, rs.u, rs.v, rs.beta, rs.tau
    return [
        ("xu-1", x * u - 1),
        ("yva-1", y * v * a - 1),
        ("yv*beta+xv+uy", y * v * b + x * v + u * y),
        ("tau+(xv+uy)*beta+1", t + (x * v + u * y) * b + 1),
        ("x^2+xy*beta+y^2a", x * x + x * y * b + y * y * a),
        ("xy-v", x * y - v),
    ]


# local rules ----------------------------------------------------------------

def _in_ports(d: Diagram, c: str) -> list[int]:
    ins = [p for p in range(4) if (c, p) in d.heads]
    if len(ins) != 2 or (ins[1] - ins[0]) % 2 == 0:
        raise IncoherentOrientation(f"crossing {c} needs one incoming end per strand")
    return ins


def resolve_crossing(d: Diagram, crossing: str, rs: RuleSet) -> list[tuple[Diagram, LaurentPoly]]:
    """Oriented smoothing and H-web resolution of one crossing, weighted."""
    c = crossing
    if d.kinds.get(c) != "cross":
        raise NoSuchCrossing(c)
    ins = _in_ports(d, c)
    # incoming ends sit on adjacent ports j, j+1
    j = ins[0] if (ins[0] + 1) % 4 == ins[1] else ins[1]
    p = [(c, (j + k) % 4) for k in range(4)]
    smooth = d.splice(remove=[c], links=[(p[0], p[3], True), (p[1], p[2], True)])
    s, t = d.fresh_names(2, "v")
    web = d.splice(
        remove=[c],
        new_vertices={s: "sink", t: "source"},
        links=[(p[0], (s, 0), True), (p[1], (s, 1), True), ((t, 2), (s, 2), True),
               ((t, 0), p[2], True), ((t, 1), p[3], True)],
    )
    if d.crossing_sign(c) > 0:
        return [(smooth, rs.x), (web, rs.y)]
    return [(smooth, rs.u), (web, rs.v)]


@dataclass(frozen=True)
class Feature:
    """A reducible configuration: ``circle``, ``bubble`` or ``square``."""

    kind: str
    darts: tuple = ()

    def sort_key(self):
        return (("circle", "bubble", "square").index(self.kind), self.darts)


def find_features(d: Diagram) -> list[Feature]:
    out = [Feature("circle", (i,)) for i in range(len(d.loops))]
    for face in d.faces():
        if not face.interior or face.sides not in (2, 4):
            continue
        vs = [v for v, _ in face.darts]
        if len(set(vs)) != len(vs) or any(d.kinds[v] not in ("source", "sink") for v in vs):
            continue
        out.append(Feature("bubble" if face.sides == 2 else "square", face.darts))
    return sorted(out, key=Feature.sort_key)


def reduce_face(d: Diagram, feature: Feature, rs: RuleSet) -> list[tuple[Diagram, LaurentPoly]]:
    if feature.kind == "circle":
        if not d.loops:
            raise NotReducible("no free circle")
        return [(d.without_loops(1), rs.tau)]
    darts = feature.darts
    vs = [v for v, _ in darts]
    want = 2 if feature.kind == "bubble" else 4
    if len(darts) != want or len(set(vs)) != want or any(d.kinds.get(v) not in ("source", "sink") for v in vs):
        raise NotReducible(f"{feature.kind} does not match the diagram")
    orbit = {dd for f in d.faces() for dd in f.darts if f.darts == darts}
    if not orbit:
        raise NotReducible(f"{feature.kind} is not a face of the diagram")
    # the third port of each vertex points away from the face
    ext = [(v, (p + 1) % 3) for v, p in darts]

    def link(e1, e2):
        # from the sink's external port to the source's
        if d.kinds[e1[0]] == "sink":
            return (e1, e2, True)
        return (e2, e1, True)

    if feature.kind == "bubble":
        return [(d.splice(remove=vs, links=[link(ext[0], ext[1])]), rs.beta)]
    one = d.splice(remove=vs, links=[link(ext[0], ext[1]), link(ext[2], ext[3])])
    two = d.splice(remove=vs, links=[link(ext[1], ext[2]), link(ext[3], ext[0])])
    return [(one, rs.a), (two, rs.a)]


# engine ---------------------------------------------------------------------

def rewrite_step(d: Diagram, rs: RuleSet, rng: random.Random | None = None):
    """One rule application, or None when ``d`` is in normal form.

    The default schedule resolves crossings first, then the first reducible
    feature; with ``rng`` any applicable rule may fire."""
    cs = d.crossings()
    if rng is None:
        if cs:
            return resolve_crossing(d, cs[0], rs)
        feats = find_features(d)
        return reduce_face(d, feats[0], rs) if feats else None
    options = [("c", c) for c in cs] + [("f", f) for f in find_features(d)]
    if not options:
        return None
    kind, what = rng.choice(options)
    return resolve_crossing(d, what, rs) if kind == "c" else reduce_face(d, what, rs)


def rewrite_terms(terms, rs: RuleSet, rng: random.Random | None = None) -> list[tuple[Diagram, LaurentPoly]]:
    """Rewrite a linear combination of diagrams to normal form, merging equal
    intermediate diagrams.  Asserts that every step lowers the measure."""
    work: dict[str, list] = {}

    def put(table, diagram, coeff):
        k = diagram.map_key()
        if k in table:
            table[k][1] = table[k][1] + coeff
        else:
            table[k] = [diagram, coeff]

    for diagram, coeff in terms:
        put(work, diagram, coeff)
    final: dict[str, list] = {}
    while work:
        nxt: dict[str, list] = {}
        for diagram, coeff in work.values():
            if coeff == 0:
                continue
            out = rewrite_step(diagram, rs, rng)
            if out is None:
                put(final, diagram, coeff)
                continue
            m = diagram.measure()
            for nd, w in out:
                assert nd.measure() < m, "termination measure did not decrease"
                put(nxt, nd, coeff * w)
        work = nxt
    return [(dg, c) for dg, c in final.values() if c != 0]


def su3_rewrite(d: Diagram, rs: RuleSet | None = None, rng: random.Random | None = None) -> StateVector:
    """Normal form of ``d`` in the span of non-elliptic webs."""
    rs = rs or su3_params()
    if not d.oriented:
        raise ValueError("the SU(3) theory needs an oriented diagram")
    terms = rewrite_terms([(d, LaurentPoly.const(1))], rs, rng)
    for dg, _ in terms:
        assert is_non_elliptic(dg), "normal form is not non-elliptic"
    return StateVector.from_terms(d.boundary, terms)


def evaluate_vector(v: StateVector, rs: RuleSet | None = None) -> StateVector:
    out = StateVector(v.signature)
    for key, coeff in v.items():
        out = out + su3_rewrite(v.reps[key], rs).scale(coeff)
    return out


# twisting ---------------------------------------------------------------------

@dataclass(frozen=True)
class TwistSpec:
    """Rescale each diagram by t^r (r = trivalent vertices) and, optionally,
    by c^(p-n) (p, n = positive, negative crossings)."""

    vertex_factor: object = 1
    crossing_factor: object = None

    def crossing_factor_is_cube_root(self) -> bool:
        c = self.crossing_factor
        if c is None:
            return True
        if isinstance(c, LaurentPoly):
            return c ** 3 == 1
        return abs(complex(c) ** 3 - 1) < 1e-12


def _power(t, e: int):
    if e == 0:
        return 1
    if isinstance(t, LaurentPoly):
        return t ** e
    return complex(t) ** e if isinstance(t, complex) or e < 0 else t ** e


def twist_conjugate(result: StateVector, d: Diagram, ts: TwistSpec) -> StateVector:
    """P^-1 ∘ Z ∘ P for the twist P given by ``ts``, applied to ``result = Z(d)``."""
    if not ts.crossing_factor_is_cube_root() and d.trivalent():
        raise IllegalCrossingTwist("a crossing twist with c^3 != 1 is only defined on vertex-free diagrams")
    rd = len(d.trivalent())
    cfac = 1
    if ts.crossing_factor is not None:
        w = sum(d.crossing_sign(c) for c in d.crossings())
        cfac = _power(ts.crossing_factor, w)
    t = ts.vertex_factor

    def scale(key_diagram: Diagram, coeff):
        return coeff * _power(t, rd - len(key_diagram.trivalent())) * cfac

    return result.map_coeffs_by_key(scale)


# normalizations -------------------------------------------------------------------

NORMALIZATIONS = ("standard", "kuperberg", "oy", "sikora", "khovanov")


def normalized_invariant(d: Diagram, variant: str = "standard", rs: RuleSet | None = None) -> StateVector:
    """Standard engine (a = 1) followed by a literature normalization; the
    coefficients of the result are polynomials in ``q`` (``y`` for standard)."""
    if variant not in NORMALIZATIONS:
        raise ValueError(f"unknown normalization {variant!r}")
    if variant == "khovanov" and d.trivalent():
        raise KhovanovRequiresVertexFree("the Khovanov normalization needs a vertex-free diagram")
    rs = rs or su3_params(1, "y")
    z = su3_rewrite(d, rs)
    q = LaurentPoly.var("q")
    if variant == "standard":
        return z
    if variant == "kuperberg":
        return z.substitute("y", LaurentPoly.var("q", Fraction(1, 6)))
    if variant == "oy":
        return z.substitute("y", -(q ** -1))
    if variant == "sikora":
        z = twist_conjugate(z, d, TwistSpec(vertex_factor=LaurentPoly.var("y", Fraction(9, 2))))
        return z.substitute("y", -LaurentPoly.var("q", Fraction(-1, 3)))
    writhe = d.writhe()
    z = z.scale(LaurentPoly.var("y", 8 * writhe))
    return z.substitute("y", LaurentPoly.var("q", Fraction(1, 3)))


# move checks --------------------------------------------------------------------

@dataclass
class MoveCheck:
    move: str
    passed: bool
    residuals: dict = field(default_factory=dict)


MOVE_KINDS = ("RI", "RII-parallel", "RII-antiparallel", "RIII", "R41", "R41-reversed")


def kink_factor(rs: RuleSet, writhe: int) -> LaurentPoly:
    if writhe == 0:
        return LaurentPoly.const(1)
    k = rs.a ** -4 * rs.y ** -8 if writhe > 0 else rs.a ** 4 * rs.y ** 8
    return k ** abs(writhe)


def reidemeister_expand_check(move: str, rs: RuleSet | None = None) -> MoveCheck:
    """Rewrite both sides of every variant of ``move`` and compare.  RI
    variants are compared up to the curl factor a^∓4 y^∓8."""
    from .moves import move_library

    rs = rs or symbolic_params()
    kinds = MOVE_KINDS if move == "all" else (move,)
    if any(k not in MOVE_KINDS for k in kinds):
        raise ValueError(f"unknown move {move!r}")
    residuals = {}
    for mv in move_library(True):
        if mv.kind not in kinds:
            continue
        lhs = su3_rewrite(mv.more, rs)
        rhs = su3_rewrite(mv.fewer, rs).scale(kink_factor(rs, mv.writhe))
        diff = lhs - rhs
        if not diff.is_zero():
            residuals[mv.name] = diff
    return MoveCheck(move, not residuals, residuals)
