"""Spacetime field configurations and residual evaluation for the model
Dirac-Yang-Mills systems.

Index conventions: coordinates x^mu on [0,1]^4 by default, metric
eta = diag(1,-1,-1,-1).  h is stored contravariant (h^mu), the potentials
A_mu, C_mu, B_mu and the strengths F_{mu nu}, G_{mu nu} covariant; raising
is a metric sign per index.

Fields are expression trees (:class:`CliffordField`) with exact partial
derivatives built structurally, so every first-order residual can be
evaluated with either exact derivatives or central finite differences.
Group-valued configurations come from ordered products of exponentials
W(x) = prod_j exp(v_j s_j(x)) with shape functions s_j; the derivative of
one factor is (d_mu s_j) v_j exp(v_j s_j) since v_j commutes with its own
exponential.

Two systems are covered:

  model system (variables phi, h^mu, A_mu, F_{mu nu}, C_mu, mass m):
      i h^mu (d_mu phi + phi A_mu - C_mu phi) - m phi = 0
      d_mu A_nu - d_nu A_mu - [A_mu, A_nu] = F_{mu nu}
      d_mu F^{mu nu} - [A_mu, F^{mu nu}] = phi^dag beta i h^nu phi
      d_mu h^nu - [C_mu, h^nu] = 0

  two-Yang-Mills system (B_mu, G_{mu nu} replacing C_mu):
      i h^mu (d_mu phi + phi A_mu - B_mu phi) = 0
      ... same A/F pair ...
      d_mu B_nu - d_nu B_mu - [B_mu, B_nu] = G_{mu nu}
      d_mu G^{mu nu} - [B_mu, G^{mu nu}] = (3/16) m^3 i h^nu

The substitution  B_mu = C_mu - (m/4) i h_mu,
G_{mu nu} = -(m/4)^2 [i h_mu, i h_nu]  maps solutions of the first system
to solutions of the second; ``reduce_to_two_yang_mills`` implements it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import (
    BETA,
    E,
    METRIC_DIAG,
    CliffordElement,
    commutator,
    exp_element,
    generators,
    unit,
)
from .shapes import PolyShape, Shape, TrigShape, shape_from_json
from .subspaces import (
    HermitianIdempotent,
    fixed_idempotent,
    sp_algebra_residual,
    subspace_basis,
)

SOURCE_COUPLING = 3.0 / 16.0  # coefficient of m^3 i h^nu in the sourced equation

_ZERO = CliffordElement.zero()


# -- derivative mode ----------------------------------------------------------


@dataclass(frozen=True)
class DerivativeMode:
    """How residual evaluators differentiate fields."""

    kind: str = "exact"  # "exact" | "fd"
    step: float = 1e-4
    richardson: bool = True

    def describe(self) -> dict:
        if self.kind == "exact":
            return {"mode": "exact"}
        return {"mode": "fd", "step": self.step, "richardson": self.richardson}


EXACT = DerivativeMode()


def fd_mode(step: float, richardson: bool = False) -> DerivativeMode:
    return DerivativeMode("fd", step, richardson)


# -- differentiable Clifford-valued fields ------------------------------------


def _point_key(x) -> tuple:
    return (float(x[0]), float(x[1]), float(x[2]), float(x[3]))


class CliffordField:
    """Clifford-valued field on R^{1,3} with structural exact derivatives.

    Values are memoized per point (small capped cache); ``partial`` nodes
    are built once and shared, so repeated evaluation across equations
    reuses subexpressions.
    """

    __slots__ = ("_partials", "_cache")

    def __init__(self):
        self._partials: dict[int, CliffordField] = {}
        self._cache: dict[tuple, CliffordElement] = {}

    def value(self, x) -> CliffordElement:
        key = _point_key(x)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        val = self._evaluate(np.asarray(x, dtype=float))
        if len(self._cache) > 64:
            self._cache.clear()
        self._cache[key] = val
        return val

    def partial(self, mu: int) -> "CliffordField":
        f = self._partials.get(mu)
        if f is None:
            f = self._differentiate(mu)
            self._partials[mu] = f
        return f

    def _evaluate(self, x: np.ndarray) -> CliffordElement:
        raise NotImplementedError

    def _differentiate(self, mu: int) -> "CliffordField":
        raise NotImplementedError

    # Sugar so field expressions read like the equations.
    def __add__(self, other: "CliffordField") -> "CliffordField":
        return SumField((self, other))

    def __sub__(self, other: "CliffordField") -> "CliffordField":
        return SumField((self, ScaledField(-1.0, other)))

    def __mul__(self, other: "CliffordField") -> "CliffordField":
        return ProductField(self, other)

    def __rmul__(self, scalar) -> "CliffordField":
        return ScaledField(scalar, self)

    def __neg__(self) -> "CliffordField":
        return ScaledField(-1.0, self)


class ConstantField(CliffordField):
    __slots__ = ("element",)

    def __init__(self, element: CliffordElement):
        super().__init__()
        self.element = element.to_float()

    def _evaluate(self, x):
        return self.element

    def _differentiate(self, mu):
        return ZERO_FIELD


class ShapeField(CliffordField):
    """s(x) * u for a scalar shape s and constant element u."""

    __slots__ = ("shape", "element")

    def __init__(self, shape: Shape, element: CliffordElement):
        super().__init__()
        self.shape = shape
        self.element = element.to_float()

    def _evaluate(self, x):
        return self.element * self.shape.value(x)

    def _differentiate(self, mu):
        return ShapeField(self.shape.deriv(mu), self.element)


class SumField(CliffordField):
    __slots__ = ("parts",)

    def __init__(self, parts):
        super().__init__()
        self.parts = tuple(parts)

    def _evaluate(self, x):
        total = self.parts[0].value(x)
        for p in self.parts[1:]:
            total = total + p.value(x)
        return total

    def _differentiate(self, mu):
        return SumField(tuple(p.partial(mu) for p in self.parts))


class ScaledField(CliffordField):
    __slots__ = ("factor", "inner")

    def __init__(self, factor, inner: CliffordField):
        super().__init__()
        self.factor = complex(factor)
        self.inner = inner

    def _evaluate(self, x):
        return self.inner.value(x) * self.factor

    def _differentiate(self, mu):
        return ScaledField(self.factor, self.inner.partial(mu))


class ProductField(CliffordField):
    __slots__ = ("left", "right")

    def __init__(self, left: CliffordField, right: CliffordField):
        super().__init__()
        self.left = left
        self.right = right

    def _evaluate(self, x):
        return self.left.value(x) * self.right.value(x)

    def _differentiate(self, mu):
        return SumField(
            (
                ProductField(self.left.partial(mu), self.right),
                ProductField(self.left, self.right.partial(mu)),
            )
        )


class ExpField(CliffordField):
    """exp(v * s(x)) for a constant generator v and scalar shape s."""

    __slots__ = ("generator", "shape")

    def __init__(self, generator: CliffordElement, shape: Shape):
        super().__init__()
        self.generator = generator.to_float()
        self.shape = shape

    def _evaluate(self, x):
        return exp_element(self.generator * self.shape.value(x))

    def _differentiate(self, mu):
        # v commutes with exp(v s), so d_mu exp(v s) = (d_mu s) v exp(v s).
        return ProductField(ShapeField(self.shape.deriv(mu), self.generator), self)


class MappedField(CliffordField):
    """op(f(x)) for a coefficient-wise op that commutes with d_mu."""

    __slots__ = ("inner", "op")

    def __init__(self, inner: CliffordField, op):
        super().__init__()
        self.inner = inner
        self.op = op

    def _evaluate(self, x):
        return self.op(self.inner.value(x))

    def _differentiate(self, mu):
        return MappedField(self.inner.partial(mu), self.op)


ZERO_FIELD = ConstantField(_ZERO)


def constant_field(u: CliffordElement) -> ConstantField:
    return ConstantField(u)


def field_commutator(f: CliffordField, g: CliffordField) -> CliffordField:
    return SumField((ProductField(f, g), ScaledField(-1.0, ProductField(g, f))))


def fd_derivative(func, x, mu: int, step: float, richardson: bool = True):
    """Central difference of a point function of x along axis mu.

    With one Richardson level (steps h and h/2) the error is O(h^4) for
    smooth fields; without it, O(h^2).
    """
    if step <= 0:
        raise ValueError("step must be positive")
    x = np.asarray(x, dtype=float)

    def central(h):
        xp = x.copy()
        xm = x.copy()
        xp[mu] += h
        xm[mu] -= h
        return (func(xp) - func(xm)) * (0.5 / h)

    d1 = central(step)
    if not richardson:
        return d1
    d2 = central(step / 2.0)
    return (d2 * 4.0 - d1) * (1.0 / 3.0)


def _field_partial(f: CliffordField, x, mu: int, deriv: DerivativeMode):
    if deriv.kind == "exact":
        return f.partial(mu).value(x)
    return fd_derivative(f.value, x, mu, deriv.step, deriv.richardson)


# -- families of group-valued fields -------------------------------------------


@dataclass(frozen=True)
class FieldFamily:
    """W(x) = prod_j exp(v_j * s_j(x)), evaluated left to right.

    The generators v_j are arbitrary constant elements; pure-gauge
    constructions require them in sp(cl(1,3)) (``validate_symplectic``).
    """

    factors: tuple[tuple[CliffordElement, Shape], ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "factors",
            tuple((v.to_float(), s) for v, s in self.factors),
        )

    def validate_symplectic(self, tol: float = 1e-9) -> None:
        for v, _ in self.factors:
            r = sp_algebra_residual(v)
            if r > tol:
                raise ValueError(f"family generator leaves sp(cl(1,3)): residual {r:.3e}")

    def group_field(self) -> CliffordField:
        f = self._cache.get("field")
        if f is None:
            if not self.factors:
                f = ConstantField(E)
            else:
                f = ExpField(*self.factors[0])
                for v, s in self.factors[1:]:
                    f = ProductField(f, ExpField(v, s))
            self._cache["field"] = f
        return f

    def inverse_field(self) -> CliffordField:
        f = self._cache.get("inverse")
        if f is None:
            if not self.factors:
                f = ConstantField(E)
            else:
                v0, s0 = self.factors[-1]
                f = ExpField(-v0, s0)
                for v, s in reversed(self.factors[:-1]):
                    f = ProductField(f, ExpField(-v, s))
            self._cache["inverse"] = f
        return f

    def value(self, x) -> CliffordElement:
        return self.group_field().value(x)

    def to_json_obj(self) -> dict:
        return {
            "factors": [
                {"generator": v.to_json_obj(), "shape": s.to_json_obj()}
                for v, s in self.factors
            ]
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "FieldFamily":
        factors = tuple(
            (
                CliffordElement.from_json_obj(f["generator"]),
                shape_from_json(f["shape"]),
            )
            for f in obj["factors"]
        )
        return cls(factors)


def eval_family(family: FieldFamily, x, order: int = 0):
    """W(x) and, for order >= 1, its exact first (and second) derivatives.

    Returns W, then a list of 4 first partials, then a 4x4 nested list of
    second partials (symmetric in the two axes).
    """
    if order not in (0, 1, 2):
        raise ValueError("order must be 0, 1 or 2")
    w = family.group_field()
    out = [w.value(x)]
    if order >= 1:
        out.append([w.partial(mu).value(x) for mu in range(4)])
    if order == 2:
        out.append(
            [[w.partial(mu).partial(nu).value(x) for nu in range(4)] for mu in range(4)]
        )
    return tuple(out)


def random_family(
    seed: int, n_factors: int = 2, scale: float = 0.5, trig: bool = True
) -> FieldFamily:
    """Deterministic random symplectic family with smooth low-order shapes."""
    rng = np.random.default_rng(seed)
    basis = subspace_basis("sp_cl")
    factors = []
    for j in range(n_factors):
        weights = rng.uniform(-scale, scale, basis.dim)
        v = None
        for wgt, b in zip(weights, basis.basis):
            part = b * float(wgt)
            v = part if v is None else v + part
        if trig and j % 2 == 1:
            shape: Shape = TrigShape(
                "sin",
                float(rng.uniform(0.3, 1.0)),
                rng.uniform(-1.0, 1.0, 4),
                float(rng.uniform(0.0, 2.0)),
            )
        else:
            terms = {}
            for axis in range(4):
                powers = [0, 0, 0, 0]
                powers[axis] = 1
                terms[tuple(powers)] = float(rng.uniform(-1.0, 1.0))
            terms[(0, 0, 0, 0)] = float(rng.uniform(-0.5, 0.5))
            terms[(1, 1, 0, 0)] = float(rng.uniform(-0.5, 0.5))
            shape = PolyShape(terms)
        factors.append((v, shape))
    return FieldFamily(tuple(factors))


def sample_points(seed: int, count: int = 20, bounds=(0.0, 1.0)) -> np.ndarray:
    """Deterministic sample points in the default [0,1]^4 box."""
    rng = np.random.default_rng(seed)
    return rng.uniform(bounds[0], bounds[1], size=(count, 4))


def _random_poly(rng: np.random.Generator, scale: float = 1.0) -> PolyShape:
    terms = {(0, 0, 0, 0): float(rng.uniform(-scale, scale))}
    for axis in range(4):
        powers = [0, 0, 0, 0]
        powers[axis] = 1
        terms[tuple(powers)] = float(rng.uniform(-scale, scale))
    terms[(0, 1, 0, 1)] = float(rng.uniform(-scale, scale))
    return PolyShape(terms)


def _random_span_field(
    rng: np.random.Generator, basis_elements, n_terms: int = 2, scale: float = 0.5
) -> CliffordField:
    parts = []
    for _ in range(n_terms):
        idx = int(rng.integers(0, len(basis_elements)))
        parts.append(ShapeField(_random_poly(rng, scale), basis_elements[idx]))
    return SumField(tuple(parts))


# -- field sets ----------------------------------------------------------------


def _as_field_tuple(fields) -> tuple[CliffordField, ...]:
    return tuple(fields)


@dataclass(frozen=True)
class ModelFieldSet:
    """Variables of the model system: phi, h^mu, A_mu, F_{mu nu}, C_mu."""

    mass: float
    t: HermitianIdempotent
    phi: CliffordField
    h: tuple[CliffordField, ...]
    a: tuple[CliffordField, ...]
    f: tuple[tuple[CliffordField, ...], ...]
    c: tuple[CliffordField, ...]


@dataclass(frozen=True)
class TwoYangMillsFieldSet:
    """Variables of the two-Yang-Mills system: phi, h^mu, A, F, B, G."""

    mass: float
    t: HermitianIdempotent
    phi: CliffordField
    h: tuple[CliffordField, ...]
    a: tuple[CliffordField, ...]
    f: tuple[tuple[CliffordField, ...], ...]
    b: tuple[CliffordField, ...]
    g: tuple[tuple[CliffordField, ...], ...]


def zero_vector_fields() -> tuple[CliffordField, ...]:
    return (ZERO_FIELD,) * 4


def zero_pair_fields() -> tuple[tuple[CliffordField, ...], ...]:
    return tuple((ZERO_FIELD,) * 4 for _ in range(4))


def antisymmetric_pair_fields(components) -> tuple[tuple[CliffordField, ...], ...]:
    """Build the full lower-index antisymmetric grid from {(mu,nu): field}, mu<nu."""
    grid: list[list[CliffordField]] = [[ZERO_FIELD] * 4 for _ in range(4)]
    for (mu, nu), fld in components.items():
        if mu == nu:
            raise ValueError("diagonal strength components must vanish")
        grid[mu][nu] = fld
        grid[nu][mu] = ScaledField(-1.0, fld)
    return tuple(tuple(row) for row in grid)


def build_pure_gauge(
    family: FieldFamily,
    t: HermitianIdempotent | None = None,
    mass: float = 1.0,
    phi_choice: str = "zero",
) -> ModelFieldSet:
    """Pure-gauge solution of the model system.

    h^mu = W^{-1} e^mu W,  C_mu = -W^{-1} d_mu W,  phi = 0,  A = F = 0.
    All four equations hold identically: phi kills the Dirac equation and
    the source, A = F = 0 settles the unitary pair, and the transport
    equation is the Maurer-Cartan identity of W.
    """
    if phi_choice != "zero":
        raise ValueError("only the zero phi configuration is constructed here")
    family.validate_symplectic()
    if t is None:
        t = fixed_idempotent("t2")
    w = family.group_field()
    winv = family.inverse_field()
    gens = generators()
    h = tuple(
        ProductField(ProductField(winv, ConstantField(gens[mu])), w) for mu in range(4)
    )
    c = tuple(
        ScaledField(-1.0, ProductField(winv, w.partial(mu))) for mu in range(4)
    )
    return ModelFieldSet(
        mass=float(mass),
        t=t,
        phi=ZERO_FIELD,
        h=h,
        a=zero_vector_fields(),
        f=zero_pair_fields(),
        c=c,
    )


def random_two_yang_mills_set(
    seed: int,
    t: HermitianIdempotent | None = None,
    mass: float = 1.0,
    family: FieldFamily | None = None,
) -> TwoYangMillsFieldSet:
    """A membership-valid configuration that does not solve the system.

    h stays pure gauge (its algebraic constraint is part of the variable
    class), while phi, A, F, B, G are random smooth fields in their
    respective spaces; every equation residual is then of order one.
    """
    rng = np.random.default_rng(seed)
    if t is None:
        t = fixed_idempotent("t2")
    if family is None:
        family = random_family(seed + 17, n_factors=2)
    base = build_pure_gauge(family, t, mass)

    t_elem = t.element.to_float()
    phi_span = []
    for _ in range(3):
        u = CliffordElement(
            rng.uniform(-0.7, 0.7, 16) + 1j * rng.uniform(-0.7, 0.7, 16)
        )
        phi_span.append(u * t_elem)
    phi = SumField(
        tuple(ShapeField(_random_poly(rng, 0.7), u) for u in phi_span)
    )

    l_basis = subspace_basis("L", t).basis
    sp_basis = subspace_basis("sp_cl").basis
    a = tuple(_random_span_field(rng, l_basis) for _ in range(4))
    f = antisymmetric_pair_fields(
        {
            (mu, nu): _random_span_field(rng, l_basis)
            for mu in range(4)
            for nu in range(mu + 1, 4)
        }
    )
    b = tuple(_random_span_field(rng, sp_basis) for _ in range(4))
    g = antisymmetric_pair_fields(
        {
            (mu, nu): _random_span_field(rng, sp_basis)
            for mu in range(4)
            for nu in range(mu + 1, 4)
        }
    )
    return TwoYangMillsFieldSet(
        mass=float(mass), t=t, phi=phi, h=base.h, a=a, f=f, b=b, g=g
    )


def reduce_to_two_yang_mills(fs: ModelFieldSet) -> TwoYangMillsFieldSet:
    """Substitute B_mu = C_mu - (m/4) i h_mu and G_{mu nu} = -(m/4)^2 [i h_mu, i h_nu]."""
    m4 = fs.mass / 4.0
    ih_lower = tuple(
        ScaledField(1j * METRIC_DIAG[mu], fs.h[mu]) for mu in range(4)
    )
    b = tuple(
        SumField((fs.c[mu], ScaledField(-m4, ih_lower[mu]))) for mu in range(4)
    )
    g = tuple(
        tuple(
            ScaledField(-(m4**2), field_commutator(ih_lower[mu], ih_lower[nu]))
            for nu in range(4)
        )
        for mu in range(4)
    )
    return TwoYangMillsFieldSet(
        mass=fs.mass, t=fs.t, phi=fs.phi, h=fs.h, a=fs.a, f=fs.f, b=b, g=g
    )


# -- residual evaluation ---------------------------------------------------------


def _values(fields, x):
    return [f.value(x) for f in fields]


def _dirac_residual(phi, dphi, h_vals, pot_vals, a_vals, mass_term):
    total = None
    for mu in range(4):
        inner = dphi[mu] + phi * a_vals[mu] - pot_vals[mu] * phi
        term = (1j * h_vals[mu]) * inner
        total = term if total is None else total + term
    if mass_term is not None:
        total = total - mass_term
    return total


def _curvature_residuals(x, pot_fields, strength_vals, deriv):
    out = {}
    pot_vals = _values(pot_fields, x)
    for mu in range(4):
        for nu in range(mu + 1, 4):
            d1 = _field_partial(pot_fields[nu], x, mu, deriv)
            d2 = _field_partial(pot_fields[mu], x, nu, deriv)
            r = d1 - d2 - commutator(pot_vals[mu], pot_vals[nu]) - strength_vals[mu][nu]
            out[(mu, nu)] = r
    return out


def _divergence_residuals(x, pot_fields, strength_fields, rhs_vals, deriv):
    """d_mu X^{mu nu} - [P_mu, X^{mu nu}] - rhs^nu for lower-index strength fields."""
    out = {}
    pot_vals = _values(pot_fields, x)
    for nu in range(4):
        total = None
        for mu in range(4):
            sign = METRIC_DIAG[mu] * METRIC_DIAG[nu]
            d = _field_partial(strength_fields[mu][nu], x, mu, deriv) * sign
            up = strength_fields[mu][nu].value(x) * sign
            term = d - commutator(pot_vals[mu], up)
            total = term if total is None else total + term
        out[(nu,)] = total - rhs_vals[nu]
    return out


def model_residual_components(
    fs: ModelFieldSet, x, deriv: DerivativeMode = EXACT
) -> dict[str, dict[tuple, CliffordElement]]:
    x = np.asarray(x, dtype=float)
    h_vals = _values(fs.h, x)
    c_vals = _values(fs.c, x)
    a_vals = _values(fs.a, x)
    f_vals = [[fs.f[mu][nu].value(x) for nu in range(4)] for mu in range(4)]
    phi = fs.phi.value(x)
    dphi = [_field_partial(fs.phi, x, mu, deriv) for mu in range(4)]

    dirac = _dirac_residual(phi, dphi, h_vals, c_vals, a_vals, phi * fs.mass)

    source = [
        (phi.herm_conj() * BETA) * (1j * h_vals[nu]) * phi for nu in range(4)
    ]

    transport = {}
    for mu in range(4):
        for nu in range(4):
            d = _field_partial(fs.h[nu], x, mu, deriv)
            transport[(mu, nu)] = d - commutator(c_vals[mu], h_vals[nu])

    return {
        "dirac": {(): dirac},
        "curvature_a": _curvature_residuals(x, fs.a, f_vals, deriv),
        "source_a": _divergence_residuals(x, fs.a, fs.f, source, deriv),
        "h_transport": transport,
    }


def two_yang_mills_residual_components(
    fs: TwoYangMillsFieldSet, x, deriv: DerivativeMode = EXACT
) -> dict[str, dict[tuple, CliffordElement]]:
    x = np.asarray(x, dtype=float)
    h_vals = _values(fs.h, x)
    b_vals = _values(fs.b, x)
    a_vals = _values(fs.a, x)
    f_vals = [[fs.f[mu][nu].value(x) for nu in range(4)] for mu in range(4)]
    g_vals = [[fs.g[mu][nu].value(x) for nu in range(4)] for mu in range(4)]
    phi = fs.phi.value(x)
    dphi = [_field_partial(fs.phi, x, mu, deriv) for mu in range(4)]

    dirac = _dirac_residual(phi, dphi, h_vals, b_vals, a_vals, None)

    source_a = [
        (phi.herm_conj() * BETA) * (1j * h_vals[nu]) * phi for nu in range(4)
    ]
    m3 = SOURCE_COUPLING * fs.mass**3
    source_b = [h_vals[nu] * (1j * m3) for nu in range(4)]

    return {
        "dirac": {(): dirac},
        "curvature_a": _curvature_residuals(x, fs.a, f_vals, deriv),
        "source_a": _divergence_residuals(x, fs.a, fs.f, source_a, deriv),
        "curvature_b": _curvature_residuals(x, fs.b, g_vals, deriv),
        "source_b": _divergence_residuals(x, fs.b, fs.g, source_b, deriv),
    }


@dataclass
class EquationResidual:
    max_residual: float
    at_point: tuple[float, float, float, float] | None

    def to_json_obj(self) -> dict:
        return {
            "max_residual": self.max_residual,
            "at_point": list(self.at_point) if self.at_point is not None else None,
        }


@dataclass
class ResidualRecord:
    """Per-equation max residual over sample points plus run metadata."""

    equations: dict[str, EquationResidual]
    metadata: dict

    @property
    def max_residual(self) -> float:
        return max((e.max_residual for e in self.equations.values()), default=0.0)

    def to_json_obj(self) -> dict:
        return {
            "equations": {k: v.to_json_obj() for k, v in sorted(self.equations.items())},
            "metadata": self.metadata,
        }


def _aggregate(component_fn, points, metadata_extra=None) -> ResidualRecord:
    equations: dict[str, EquationResidual] = {}
    for x in points:
        comps = component_fn(x)
        for eq, by_index in comps.items():
            worst = max(r.norm() for r in by_index.values())
            cur = equations.get(eq)
            if cur is None or worst > cur.max_residual:
                equations[eq] = EquationResidual(worst, _point_key(x))
    meta = dict(metadata_extra or {})
    meta["points"] = len(points)
    return ResidualRecord(equations, meta)


def model_residuals(
    fs: ModelFieldSet, points, deriv: DerivativeMode = EXACT
) -> ResidualRecord:
    return _aggregate(
        lambda x: model_residual_components(fs, x, deriv),
        points,
        {"derivatives": deriv.describe(), "mass": fs.mass},
    )


def two_yang_mills_residuals(
    fs: TwoYangMillsFieldSet, points, deriv: DerivativeMode = EXACT
) -> ResidualRecord:
    rec = _aggregate(
        lambda x: two_yang_mills_residual_components(fs, x, deriv),
        points,
        {"derivatives": deriv.describe(), "mass": fs.mass},
    )
    # Certify the sourced equation is non-trivial: record the right-hand
    # side norm scale (3/16)|m|^3 * |i h^nu| at the first sample point.
    if len(points):
        x0 = points[0]
        m3 = SOURCE_COUPLING * abs(fs.mass) ** 3
        rhs = max((fs.h[nu].value(x0) * (1j * m3)).norm() for nu in range(4))
        rec.metadata["source_b_rhs_norm"] = rhs
    return rec


# -- identity checks --------------------------------------------------------------


def check_h_identities(h_vals) -> dict[str, float]:
    """Residuals of the three h identities at one point.

    h^mu h^nu + h^nu h^mu = 2 eta^{mu nu} e ; (1/4) h^mu h_mu = e ;
    h^mu h^nu h_mu = h_mu h^nu h^mu = -2 h^nu (sum over mu).
    """
    e = unit(h_vals[0].exact)
    clifford = 0.0
    for mu in range(4):
        for nu in range(4):
            target = e * (2 * METRIC_DIAG[mu]) if mu == nu else None
            r = h_vals[mu] * h_vals[nu] + h_vals[nu] * h_vals[mu]
            if target is not None:
                r = r - target
            clifford = max(clifford, r.norm())

    h_lower = [h_vals[mu] * METRIC_DIAG[mu] for mu in range(4)]
    contraction = None
    for mu in range(4):
        term = h_vals[mu] * h_lower[mu]
        contraction = term if contraction is None else contraction + term
    quarter = Fraction(1, 4) if contraction.exact else 0.25
    contraction_res = (contraction * quarter - e).norm()

    sandwich = 0.0
    for nu in range(4):
        left = None
        right = None
        for mu in range(4):
            t1 = h_vals[mu] * h_vals[nu] * h_lower[mu]
            t2 = h_lower[mu] * h_vals[nu] * h_vals[mu]
            left = t1 if left is None else left + t1
            right = t2 if right is None else right + t2
        target = h_vals[nu] * (-2)
        sandwich = max(sandwich, (left - target).norm(), (right - target).norm())

    return {
        "h_clifford": clifford,
        "h_contraction": contraction_res,
        "h_sandwich": sandwich,
    }


def check_reduction_identities(
    fs: TwoYangMillsFieldSet, points, deriv: DerivativeMode = EXACT
) -> ResidualRecord:
    """Identities induced by the reduction on (h, B):

    d_mu(i h^nu) - [B_mu, i h^nu] = (m/4) [i h_mu, i h^nu]
    d_mu B_nu - d_nu B_mu - [B_mu, B_nu] = -(m/4)^2 [i h_mu, i h_nu]
    d_mu h^mu - [B_mu, h^mu] = 0
    """
    m4 = fs.mass / 4.0

    def components(x):
        x = np.asarray(x, dtype=float)
        h_vals = _values(fs.h, x)
        b_vals = _values(fs.b, x)
        ih = [h_vals[mu] * 1j for mu in range(4)]
        ih_lower = [ih[mu] * METRIC_DIAG[mu] for mu in range(4)]

        transport = {}
        for mu in range(4):
            for nu in range(4):
                d = _field_partial(fs.h[nu], x, mu, deriv) * 1j
                lhs = d - commutator(b_vals[mu], ih[nu])
                rhs = commutator(ih_lower[mu], ih[nu]) * m4
                transport[(mu, nu)] = lhs - rhs

        curvature = {}
        for mu in range(4):
            for nu in range(mu + 1, 4):
                d1 = _field_partial(fs.b[nu], x, mu, deriv)
                d2 = _field_partial(fs.b[mu], x, nu, deriv)
                lhs = d1 - d2 - commutator(b_vals[mu], b_vals[nu])
                rhs = commutator(ih_lower[mu], ih_lower[nu]) * (-(m4**2))
                curvature[(mu, nu)] = lhs - rhs

        conservation = None
        for mu in range(4):
            d = _field_partial(fs.h[mu], x, mu, deriv)
            term = d - commutator(b_vals[mu], h_vals[mu])
            conservation = term if conservation is None else conservation + term

        return {
            "h_b_transport": transport,
            "b_curvature_consistency": curvature,
            "h_conservation": {(): conservation},
        }

    return _aggregate(components, points, {"derivatives": deriv.describe()})


def bianchi_current_check(
    a_fields, points, deriv: DerivativeMode = EXACT
) -> ResidualRecord:
    """Conservation of the current induced by a gauge potential.

    F is defined from the potential by its curvature equation, the current
    by i J^nu = d_mu F^{mu nu} - [A_mu, F^{mu nu}]; antisymmetry of F then
    forces  d_nu J^nu - [A_nu, J^nu] = 0, which is evaluated here.
    """
    a_fields = _as_field_tuple(a_fields)
    f_fields: list[list[CliffordField]] = [[ZERO_FIELD] * 4 for _ in range(4)]
    for mu in range(4):
        for nu in range(4):
            if mu == nu:
                continue
            f_fields[mu][nu] = SumField(
                (
                    a_fields[nu].partial(mu),
                    ScaledField(-1.0, a_fields[mu].partial(nu)),
                    ScaledField(-1.0, field_commutator(a_fields[mu], a_fields[nu])),
                )
            )

    current = []
    for nu in range(4):
        parts = []
        for mu in range(4):
            sign = METRIC_DIAG[mu] * METRIC_DIAG[nu]
            up = ScaledField(sign, f_fields[mu][nu])
            parts.append(up.partial(mu))
            parts.append(ScaledField(-1.0, field_commutator(a_fields[mu], up)))
        current.append(SumField(tuple(parts)))

    def components(x):
        x = np.asarray(x, dtype=float)
        a_vals = _values(a_fields, x)
        total = None
        for nu in range(4):
            d = _field_partial(current[nu], x, nu, deriv)
            term = d - commutator(a_vals[nu], current[nu].value(x))
            total = term if total is None else total + term
        return {"current_conservation": {(): total}}

    return _aggregate(components, points, {"derivatives": deriv.describe()})


def convergence_slope(
    fs: TwoYangMillsFieldSet,
    points,
    steps=(1e-2, 5e-3, 2.5e-3),
) -> tuple[float, list[float]]:
    """Log-log slope of the max FD residual versus step (no Richardson).

    Central differences carry an O(step^2) error, so a reduced pure-gauge
    set should measure a slope near 2.
    """
    residuals = []
    for h in steps:
        rec = two_yang_mills_residuals(fs, points, fd_mode(h, richardson=False))
        residuals.append(rec.max_residual)
    logs = np.log(np.asarray(steps, dtype=float))
    logr = np.log(np.asarray(residuals, dtype=float))
    slope = float(np.polyfit(logs, logr, 1)[0])
    return slope, residuals
