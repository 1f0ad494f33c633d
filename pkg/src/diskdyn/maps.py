"""Holomorphic self-map families, evaluation, composition, validation.

Each family is a small frozen dataclass acting on raw coordinates:
a complex number for disk/half-plane maps, a 1-d complex array (z, w...) for
ball/Siegel maps.  Planar families broadcast over numpy arrays, which the
conjugation module relies on to push whole sample grids through an iterate.

The built-in families cover the dynamical taxonomy with closed-form oracles:

* ``DiskMoebius``            elliptic / hyperbolic disk automorphisms
* ``HalfplaneAffine``        lam*z + b: hyperbolic (lam != 1) or translation
* ``HalfplanePerturbed``     z + b + c/(z+1): non-automorphism parabolic maps
* ``SiegelTranslation``      (z, w) -> (z + b, w)
* ``HeisenbergTranslation``  parabolic ball automorphism with non-special orbits
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar

import numpy as np

from .errors import DomainError, EvaluationError, ModelMismatchError

MODELS = ("disk", "halfplane", "ball", "siegel")
_PARTNER = {"disk": "halfplane", "halfplane": "disk", "ball": "siegel", "siegel": "ball"}
PLANAR = ("disk", "halfplane")


def _c(x) -> complex:
    return complex(x)


@dataclass(frozen=True)
class DiskMoebius:
    """z -> e^{i theta} (z - a)/(1 - conj(a) z), an automorphism of the disk."""

    a: complex
    theta: float = 0.0
    model: ClassVar[str] = "disk"

    def __post_init__(self):
        object.__setattr__(self, "a", _c(self.a))
        object.__setattr__(self, "theta", float(self.theta))

    def __call__(self, z):
        return np.exp(1j * self.theta) * (z - self.a) / (1.0 - np.conjugate(self.a) * z)

    def params_ok(self) -> bool:
        return abs(self.a) < 1.0

    def is_automorphism(self) -> bool:
        return True


@dataclass(frozen=True)
class HalfplaneAffine:
    """z -> lam z + b with lam > 0, Re b >= 0."""

    lam: float
    b: complex = 0.0
    model: ClassVar[str] = "halfplane"

    def __post_init__(self):
        object.__setattr__(self, "lam", float(self.lam))
        object.__setattr__(self, "b", _c(self.b))

    def __call__(self, z):
        return self.lam * z + self.b

    def params_ok(self) -> bool:
        return self.lam > 0.0 and self.b.real >= 0.0

    def is_automorphism(self) -> bool:
        # lam z + b is onto H exactly when the boundary line is preserved
        return self.lam > 0.0 and self.b.real == 0.0


@dataclass(frozen=True)
class HalfplanePerturbed:
    """z -> z + b + c/(z + 1); parabolic for the reference parameter choices."""

    b: complex
    c: complex = 0.0
    model: ClassVar[str] = "halfplane"

    def __post_init__(self):
        object.__setattr__(self, "b", _c(self.b))
        object.__setattr__(self, "c", _c(self.c))

    def __call__(self, z):
        return z + self.b + self.c / (z + 1.0)

    def params_ok(self) -> bool:
        if not (self.b.real >= 0.0 and self.c.real >= 0.0):
            return False
        # min over the boundary of Re(b + c/(z+1)) is Re b + (Re c - |c|)/2
        return self.b.real + (self.c.real - abs(self.c)) / 2.0 >= 0.0

    def is_automorphism(self) -> bool:
        return self.c == 0.0 and self.b.real == 0.0


@dataclass(frozen=True)
class SiegelTranslation:
    """(z, w) -> (z + b, w) with Re b >= 0."""

    b: complex
    model: ClassVar[str] = "siegel"

    def __post_init__(self):
        object.__setattr__(self, "b", _c(self.b))

    def __call__(self, pt):
        out = np.array(pt, np.complex128)
        out[0] += self.b
        return out

    def params_ok(self) -> bool:
        return self.b.real >= 0.0

    def is_automorphism(self) -> bool:
        return self.b.real == 0.0


@dataclass(frozen=True)
class HeisenbergTranslation:
    """(z, w) -> (z + 2<w, a> + ||a||^2 + i b, w + a); always an automorphism."""

    a: tuple = (0j,)
    b: float = 0.0
    model: ClassVar[str] = "siegel"
    _a_arr: np.ndarray = field(init=False, repr=False, compare=False)
    _shift: complex = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(_c(x) for x in self.a))
        object.__setattr__(self, "b", float(self.b))
        arr = np.array(self.a, np.complex128)
        arr.setflags(write=False)
        object.__setattr__(self, "_a_arr", arr)
        object.__setattr__(
            self, "_shift", float(np.sum(np.abs(arr) ** 2)) + 1j * self.b
        )

    def __call__(self, pt):
        w = pt[1:]
        out = np.empty_like(np.asarray(pt, np.complex128))
        # <w, a> = sum w conj(a)
        out[0] = pt[0] + 2.0 * np.vdot(self._a_arr, w) + self._shift
        out[1:] = w + self._a_arr
        return out

    def params_ok(self) -> bool:
        return True

    def is_automorphism(self) -> bool:
        return True


@dataclass(frozen=True)
class Identity:
    """Identity map of any model; handy for composition tests."""

    model_tag: str = "halfplane"

    def __post_init__(self):
        if self.model_tag not in MODELS:
            raise ModelMismatchError(f"unknown model {self.model_tag!r}")

    @property
    def model(self) -> str:
        return self.model_tag

    def __call__(self, pt):
        return pt

    def params_ok(self) -> bool:
        return True

    def is_automorphism(self) -> bool:
        return True


@dataclass(frozen=True)
class Composition:
    """parts[0] o parts[1] o ... ; the last part is applied first."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ModelMismatchError("empty composition")
        models = {p.model for p in parts}
        if len(models) != 1:
            raise ModelMismatchError(f"mixed models in composition: {sorted(models)}")
        object.__setattr__(self, "parts", parts)

    @property
    def model(self) -> str:
        return self.parts[0].model

    def __call__(self, pt):
        for f in reversed(self.parts):
            pt = f(pt)
        return pt

    def params_ok(self) -> bool:
        return all(p.params_ok() for p in self.parts)

    def is_automorphism(self) -> bool:
        return all(p.is_automorphism() for p in self.parts)


@dataclass(frozen=True)
class Conjugated:
    """View a map in the Cayley-partner model (disk<->halfplane, ball<->siegel)."""

    inner: object

    @property
    def model(self) -> str:
        return _PARTNER[self.inner.model]

    def __call__(self, pt):
        m = self.inner.model
        if m == "halfplane":  # outer point is in the disk
            z = (1.0 + pt) / (1.0 - pt)
            r = self.inner(z)
            return (r - 1.0) / (r + 1.0)
        if m == "disk":
            u = (pt - 1.0) / (pt + 1.0)
            r = self.inner(u)
            return (1.0 + r) / (1.0 - r)
        if m == "siegel":  # outer point is in the ball
            arr = np.asarray(pt, np.complex128)
            denom = 1.0 - arr[0]
            inner_pt = np.concatenate(([(1.0 + arr[0]) / denom], arr[1:] / denom))
            r = self.inner(inner_pt)
            return np.concatenate(([(r[0] - 1.0) / (r[0] + 1.0)], 2.0 * r[1:] / (r[0] + 1.0)))
        # inner is a ball map, outer point in the Siegel domain
        arr = np.asarray(pt, np.complex128)
        denom = arr[0] + 1.0
        inner_pt = np.concatenate(([(arr[0] - 1.0) / denom], 2.0 * arr[1:] / denom))
        r = self.inner(inner_pt)
        d2 = 1.0 - r[0]
        return np.concatenate(([(1.0 + r[0]) / d2], r[1:] / d2))

    def params_ok(self) -> bool:
        return self.inner.params_ok()

    def is_automorphism(self) -> bool:
        return self.inner.is_automorphism()


FAMILIES = {
    "DiskMoebius": DiskMoebius,
    "HalfplaneAffine": HalfplaneAffine,
    "HalfplanePerturbed": HalfplanePerturbed,
    "SiegelTranslation": SiegelTranslation,
    "HeisenbergTranslation": HeisenbergTranslation,
    "Identity": Identity,
    "Composition": Composition,
    "Conjugated": Conjugated,
}


# ---------------------------------------------------------------------------
# evaluation / composition


def domain_margin(model: str, pt) -> float:
    """The model-defining functional: positive iff pt is interior."""
    if model == "disk":
        return 1.0 - abs(complex(pt)) ** 2
    if model == "halfplane":
        return complex(pt).real
    arr = np.asarray(pt, np.complex128).reshape(-1)
    if model == "ball":
        return 1.0 - float(np.sum(np.abs(arr) ** 2))
    if model == "siegel":
        return arr[0].real - float(np.sum(np.abs(arr[1:]) ** 2))
    raise ModelMismatchError(f"unknown model {model!r}")


def evaluate(spec, pt):
    """Apply spec to a point of its model; checks that the image stays inside."""
    if domain_margin(spec.model, pt) <= 0.0:
        raise DomainError(f"point outside the {spec.model} domain")
    out = spec(np.asarray(pt, np.complex128) if spec.model not in PLANAR else complex(pt))
    m = domain_margin(spec.model, out)
    if not m > 0.0:
        raise EvaluationError(f"image left the {spec.model} domain", margin=m)
    return out


def compose(f, g) -> Composition:
    """f o g; evaluate(compose(f, g), p) == evaluate(f, evaluate(g, p))."""
    if f.model != g.model:
        raise ModelMismatchError(f"cannot compose {f.model} with {g.model}")
    parts = []
    for h in (f, g):
        parts.extend(h.parts if isinstance(h, Composition) else [h])
    return Composition(tuple(parts))


# ---------------------------------------------------------------------------
# validity checking


@dataclass(frozen=True)
class ValidityReport:
    analytic_ok: bool
    sampled_ok: bool
    worst_margin: float
    samples: int


def sample_domain(model: str, count: int, rng: np.random.Generator, dim: int = 2):
    """Random interior points; half-plane coordinates span several decades."""
    if model == "disk":
        r = np.sqrt(rng.uniform(0.0, 0.96, count))
        phi = rng.uniform(-np.pi, np.pi, count)
        return r * np.exp(1j * phi)
    if model == "halfplane":
        x = np.exp(rng.uniform(-2.0, 6.0, count))
        y = rng.normal(0.0, 5.0, count) * x
        return x + 1j * y
    if model == "ball":
        v = rng.normal(size=(count, 2 * dim)).view(np.complex128)
        nrm = np.linalg.norm(v, axis=1, keepdims=True)
        rad = rng.uniform(0.0, 0.98, (count, 1)) ** (1.0 / (2 * dim))
        return v / nrm * rad
    if model == "siegel":
        w = rng.normal(size=(count, 2 * (dim - 1))).view(np.complex128)
        wn2 = np.sum(np.abs(w) ** 2, axis=1).real
        x = wn2 + np.exp(rng.uniform(-2.0, 4.0, count))
        y = rng.normal(0.0, 2.0, count) * (1.0 + np.sqrt(wn2))
        return np.concatenate(((x + 1j * y)[:, None], w), axis=1)
    raise ModelMismatchError(f"unknown model {model!r}")


def validate_self_map(spec, sample_count: int = 500, seed: int = 0) -> ValidityReport:
    """Check the family's parameter constraints and sample the domain margin."""
    analytic = spec.params_ok()
    rng = np.random.default_rng(seed)
    pts = sample_domain(spec.model, sample_count, rng)
    worst = np.inf
    ok = True
    for pt in pts:
        try:
            img = spec(pt)
            m = domain_margin(spec.model, img)
        except (ZeroDivisionError, FloatingPointError, ValueError):
            m = -np.inf
        if not np.isfinite(m):
            m = -np.inf
        worst = min(worst, m)
        if m <= 0.0:
            ok = False
    return ValidityReport(analytic, ok, float(worst), sample_count)


# ---------------------------------------------------------------------------
# serialization: plain JSON-compatible dictionaries, bit-exact round trips


def _enc_c(z: complex):
    return [z.real, z.imag]


def _dec_c(v) -> complex:
    return complex(v[0], v[1])


def spec_to_dict(spec) -> dict:
    if isinstance(spec, DiskMoebius):
        return {"family": "DiskMoebius", "a": _enc_c(spec.a), "theta": spec.theta}
    if isinstance(spec, HalfplaneAffine):
        return {"family": "HalfplaneAffine", "lam": spec.lam, "b": _enc_c(spec.b)}
    if isinstance(spec, HalfplanePerturbed):
        return {"family": "HalfplanePerturbed", "b": _enc_c(spec.b), "c": _enc_c(spec.c)}
    if isinstance(spec, SiegelTranslation):
        return {"family": "SiegelTranslation", "b": _enc_c(spec.b)}
    if isinstance(spec, HeisenbergTranslation):
        return {
            "family": "HeisenbergTranslation",
            "a": [_enc_c(x) for x in spec.a],
            "b": spec.b,
        }
    if isinstance(spec, Identity):
        return {"family": "Identity", "model": spec.model_tag}
    if isinstance(spec, Composition):
        return {"family": "Composition", "parts": [spec_to_dict(p) for p in spec.parts]}
    if isinstance(spec, Conjugated):
        return {"family": "Conjugated", "inner": spec_to_dict(spec.inner)}
    raise ModelMismatchError(f"cannot serialize {type(spec).__name__}")


def spec_from_dict(d: dict):
    fam = d.get("family")
    if fam == "DiskMoebius":
        return DiskMoebius(_dec_c(d["a"]), d.get("theta", 0.0))
    if fam == "HalfplaneAffine":
        return HalfplaneAffine(d["lam"], _dec_c(d.get("b", [0.0, 0.0])))
    if fam == "HalfplanePerturbed":
        return HalfplanePerturbed(_dec_c(d["b"]), _dec_c(d.get("c", [0.0, 0.0])))
    if fam == "SiegelTranslation":
        return SiegelTranslation(_dec_c(d["b"]))
    if fam == "HeisenbergTranslation":
        return HeisenbergTranslation(tuple(_dec_c(x) for x in d["a"]), d.get("b", 0.0))
    if fam == "Identity":
        return Identity(d.get("model", "halfplane"))
    if fam == "Composition":
        return Composition(tuple(spec_from_dict(p) for p in d["parts"]))
    if fam == "Conjugated":
        return Conjugated(spec_from_dict(d["inner"]))
    raise ModelMismatchError(f"unknown family {fam!r}")
