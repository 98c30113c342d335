import functools
import pathlib
from typing import Any, Optional

import yaml

from .dataclass import (
    BoundChain,
    BoundFamily,
    FamilyKey,
    Interval,
    SeriesModel,
    SharpnessKnob,
    SLBound,
    SLFixture,
)
from .exceptions import DomainError
from .forms import build_form
from .path import (
    BOUNDS_REGISTRY_PATH,
    CHAINS_REGISTRY_PATH,
    FIXTURES_REGISTRY_PATH,
    SERIES_REGISTRY_PATH,
)

_FAMILY_KEYS = {
    "statement",
    "description",
    "lhs",
    "rhs",
    "domain",
    "strict",
    "ordered",
    "complex_plane",
    "equality_points",
    "knob",
}
_CHAIN_KEYS = {"statement", "domain", "terms", "strict", "equality_points"}
_SERIES_KEYS = {"description", "term", "antiderivative", "start", "params", "divergent"}
_FIXTURE_KEYS = {"model", "statement", "lower", "upper", "n_min", "n_max", "envelope"}


def _load_yaml(path: pathlib.Path) -> dict[str, Any]:
    with open(path, "r") as f:
        entries = yaml.safe_load(f)
    if entries is None:
        return {}
    if not isinstance(entries, dict):
        raise TypeError(f"Registry {path} must be a mapping")
    return entries


def _expand_variants(
    path: pathlib.Path, allowed: set[str]
) -> list[tuple[FamilyKey, dict[str, Any]]]:
    """Merges every variant into its tag's shared kwargs.

    Descriptions of tag and variant are joined; any other variant key
    overrides the shared one.
    """
    result = []
    for tag, kwargs in _load_yaml(path).items():
        if not isinstance(kwargs, dict):
            raise TypeError(f"Entry {tag} must be a mapping")
        kwargs = dict(kwargs)
        variants = kwargs.pop("variants", None)
        if variants is None:
            variants = {None: {}}
        elif len(variants) == 0:
            raise TypeError(f"Entry {tag} declares an empty variants list")
        for variant_tag, variant_kwargs in variants.items():
            key = FamilyKey(
                tag=str(tag),
                variant=None if variant_tag is None else str(variant_tag),
            )
            combined_kwargs = kwargs.copy()
            descriptions = [
                d
                for d in [
                    kwargs.get("description", ""),
                    variant_kwargs.get("description", ""),
                ]
                if len(d) > 0
            ]
            combined_kwargs.update(variant_kwargs)
            combined_kwargs["description"] = " ".join(descriptions)
            unknown = set(combined_kwargs) - allowed
            if len(unknown) > 0:
                raise ValueError(f"Unknown keys {sorted(unknown)} in entry {key}")
            result.append((key, combined_kwargs))
    return result


def _build_family(key: FamilyKey, kwargs: dict[str, Any]) -> BoundFamily:
    kwargs = dict(kwargs)
    kwargs.pop("knob", None)
    for required in ("statement", "lhs", "rhs", "domain"):
        if required not in kwargs:
            raise TypeError(f"Family {key} is missing '{required}'")
    try:
        return BoundFamily(
            key=key,
            statement=kwargs["statement"],
            lhs=build_form(kwargs["lhs"]),
            rhs=build_form(kwargs["rhs"]),
            domain=[Interval.from_string(s) for s in kwargs["domain"]],
            strict=kwargs.get("strict", False),
            ordered=kwargs.get("ordered", False),
            complex_plane=kwargs.get("complex_plane", False),
            description=kwargs.get("description", ""),
            equality_points=[float(p) for p in kwargs.get("equality_points", [])],
        )
    except (TypeError, ValueError) as e:
        raise type(e)(f"Error parsing family {key}: {e}") from e


@functools.lru_cache
def _parse_families(
    path: pathlib.Path,
) -> tuple[dict[FamilyKey, BoundFamily], dict[FamilyKey, dict[str, Any]]]:
    families = {}
    raw = {}
    for key, kwargs in _expand_variants(path, _FAMILY_KEYS):
        if key in families:
            raise ValueError(f"Duplicate family {key}")
        families[key] = _build_family(key, kwargs)
        raw[key] = kwargs
    return families, raw


def get_bound_registry(
    path: Optional[pathlib.Path] = None,
) -> dict[FamilyKey, BoundFamily]:
    families, _ = _parse_families(BOUNDS_REGISTRY_PATH if path is None else path)
    return dict(families)


def get_bound_family(family_id: str | FamilyKey) -> BoundFamily:
    key = family_id
    if not isinstance(key, FamilyKey):
        key = FamilyKey.from_string(key)
    registry = get_bound_registry()
    if key not in registry:
        raise ValueError(f"Family {key.as_string()} not found")
    return registry[key]


@functools.lru_cache
def _parse_knobs(path: pathlib.Path) -> dict[str, SharpnessKnob]:
    _, raw = _parse_families(path)
    result = {}
    for key, kwargs in raw.items():
        knob = kwargs.get("knob")
        if knob is None:
            continue
        side, param = knob.get("side"), knob.get("param")
        form_spec = kwargs.get(side)
        if not isinstance(form_spec, dict) or param not in form_spec:
            raise ValueError(
                f"Knob of family {key} must name a parameter of its {side} form"
            )
        result[key.as_string()] = SharpnessKnob(
            family_id=key.as_string(),
            side=side,
            param=param,
            default=form_spec[param],
        )
    return result


def get_sharpness_knobs(
    path: Optional[pathlib.Path] = None,
) -> dict[str, SharpnessKnob]:
    return dict(_parse_knobs(BOUNDS_REGISTRY_PATH if path is None else path))


def perturb_family(
    knob: SharpnessKnob, delta: float, path: Optional[pathlib.Path] = None
) -> BoundFamily:
    """Rebuilds the knob's family with its sharp constant replaced by delta."""
    _, raw = _parse_families(BOUNDS_REGISTRY_PATH if path is None else path)
    key = FamilyKey.from_string(knob.family_id)
    kwargs = dict(raw[key])
    form_spec = dict(kwargs[knob.side])
    form_spec[knob.param] = float(delta)
    kwargs[knob.side] = form_spec
    family = _build_family(key, kwargs)
    return family.copy(statement=f"{family.statement} [{knob.param}={delta!r}]")


@functools.lru_cache
def _parse_chains(path: pathlib.Path) -> dict[str, BoundChain]:
    result = {}
    for key, kwargs in _expand_variants(path, _CHAIN_KEYS | {"description"}):
        chain_id = key.as_string()
        terms = kwargs.get("terms", [])
        try:
            result[chain_id] = BoundChain(
                id=chain_id,
                statement=kwargs["statement"],
                labels=[t["label"] for t in terms],
                terms=[build_form(t) for t in terms],
                domain=Interval.from_string(kwargs["domain"]),
                strict=kwargs.get("strict", True),
                equality_points=[float(p) for p in kwargs.get("equality_points", [])],
            )
        except KeyError as e:
            raise TypeError(f"Chain {chain_id} is missing {e}") from e
        except (TypeError, ValueError) as e:
            raise type(e)(f"Error parsing chain {chain_id}: {e}") from e
    return result


def get_chain_registry(path: Optional[pathlib.Path] = None) -> dict[str, BoundChain]:
    return dict(_parse_chains(CHAINS_REGISTRY_PATH if path is None else path))


def get_chain(chain_id: str) -> BoundChain:
    chains = get_chain_registry()
    if chain_id not in chains:
        raise DomainError(f"Chain {chain_id} not found")
    return chains[chain_id]


@functools.lru_cache
def _parse_series(path: pathlib.Path) -> dict[str, SeriesModel]:
    result = {}
    for key, kwargs in _expand_variants(path, _SERIES_KEYS):
        model_id = key.as_string()
        for required in ("term", "antiderivative"):
            if required not in kwargs:
                raise TypeError(f"Series {model_id} is missing '{required}'")
        result[model_id] = SeriesModel(
            id=model_id,
            term=build_form(kwargs["term"]),
            antiderivative=build_form(kwargs["antiderivative"]),
            start=int(kwargs.get("start", 1)),
            params=[float(p) for p in kwargs.get("params", [])],
            divergent=kwargs.get("divergent", True),
            description=kwargs.get("description", ""),
        )
    return result


def get_series_registry(
    path: Optional[pathlib.Path] = None,
) -> dict[str, SeriesModel]:
    return dict(_parse_series(SERIES_REGISTRY_PATH if path is None else path))


def get_series_model(model_id: str) -> SeriesModel:
    models = get_series_registry()
    if model_id not in models:
        raise ValueError(f"Series {model_id} not found")
    return models[model_id]


@functools.lru_cache
def _parse_fixtures(path: pathlib.Path) -> dict[str, SLFixture]:
    result = {}
    for key, kwargs in _expand_variants(path, _FIXTURE_KEYS | {"description"}):
        fixture_id = key.as_string()
        try:
            result[fixture_id] = SLFixture(
                id=fixture_id,
                model_id=kwargs["model"],
                statement=kwargs["statement"],
                lower=SLBound.from_json_dict(kwargs["lower"]),
                upper=SLBound.from_json_dict(kwargs["upper"]),
                n_min=int(kwargs.get("n_min", 1)),
                n_max=int(kwargs.get("n_max", 10**4)),
                envelope=kwargs.get("envelope"),
            )
        except KeyError as e:
            raise TypeError(f"Fixture {fixture_id} is missing {e}") from e
    return result


def get_fixture_registry(
    path: Optional[pathlib.Path] = None,
) -> dict[str, SLFixture]:
    return dict(_parse_fixtures(FIXTURES_REGISTRY_PATH if path is None else path))
