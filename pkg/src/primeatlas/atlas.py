"""Durable per-prime atlas files: everything the package knows about one
prime, as a single JSON document."""

from __future__ import annotations

import json
from pathlib import Path

from .automorphisms import (
    exceptional_surfaces,
    gimel_aut_prime,
    gimel_full_aut,
    is_hyperelliptic,
    lefschetz_aut,
)
from .equations import equilateral_equation, lefschetz_equation, square_equation
from .gimel import LambdaClass, TilingFlavor, enumerate_classes
from .lefschetz import partition_omega
from .modular import as_modulus
from .parameter_space import component_graph


def _class_payload(cls: LambdaClass) -> dict:
    out = {
        "representative": list(cls.representative),
        "key": [list(pair) for pair in cls.key],
        "kappa": cls.kappa.value,
        "aut_prime": gimel_aut_prime(cls).to_json(),
        "aut": gimel_full_aut(cls).to_json(),
        "hyperelliptic": is_hyperelliptic(cls),
    }
    i, j = cls.representative
    if cls.flavor is TilingFlavor.EQUILATERAL:
        out["equation"] = equilateral_equation(cls.p, i, j).to_json()
    elif cls.flavor is TilingFlavor.SQUARE:
        out["equation"] = square_equation(cls.p, i, j).to_json()
    else:
        out["equation"] = None
    return out


def atlas_payload(p) -> dict:
    """The full classification record for one prime."""
    q = as_modulus(p).p
    payload: dict = {"schema_version": 1, "p": q}
    if q > 3:
        payload["lefschetz"] = [
            {
                "k": cls.canonical_k,
                "members": sorted(cls.members),
                "cardinality": cls.cardinality_case.value,
                "aut": lefschetz_aut(cls).to_json(),
                "equation": lefschetz_equation(q, cls.canonical_k).to_json(),
            }
            for cls in partition_omega(q)
        ]
    else:
        payload["lefschetz"] = None
    payload["gimel"] = {
        flavor.value: [_class_payload(cls) for cls in enumerate_classes(q, flavor)]
        for flavor in TilingFlavor
    }
    payload["components"] = component_graph(q).to_json()["components"]
    payload["exceptional_surfaces"] = [
        {
            "p": s.p,
            "genus": s.genus,
            "aut": s.aut.to_json(),
            "equation": s.equation,
            "location": s.location,
        }
        for s in exceptional_surfaces(q)
    ]
    return payload


def write_atlas(p, directory: str | Path) -> Path:
    """Write atlas_p{p}.json under directory; returns the file path."""
    q = as_modulus(p).p
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"atlas_p{q}.json"
    path.write_text(json.dumps(atlas_payload(q), indent=2, sort_keys=True) + "\n")
    return path
