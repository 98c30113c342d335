import json
import unittest
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

import numpy as np

from .base import LabDataClass


class Color(Enum):
    RED = "red"


@dataclass
class Foo(LabDataClass):
    a: int


@dataclass
class Bar(LabDataClass):
    b: int
    c: Optional[Foo] = None

    @classmethod
    def from_json_dict(cls, d: dict[str, Any]) -> "Bar":
        if d.get("c") is not None:
            d["c"] = Foo.from_json_dict(d["c"])
        return cls.from_dict(d)


@dataclass
class Baz(LabDataClass):
    d: int
    e: Bar

    @classmethod
    def from_json_dict(cls, d: dict[str, Any]) -> "Baz":
        d["e"] = Bar.from_json_dict(d["e"])
        return cls.from_dict(d)


@dataclass
class Mixed(LabDataClass):
    color: Color
    ratio: Fraction
    point: complex
    values: np.ndarray


class TestLabDataClass(unittest.TestCase):
    def test_as_json_dict(self):
        f = Foo(a=1)
        b = Bar(b=2, c=f)
        baz = Baz(d=3, e=b)
        self.assertEqual(baz.as_json_dict(), {"d": 3, "e": {"b": 2, "c": {"a": 1}}})

    def test_from_json_dict(self):
        foo = Foo.from_json_dict({"a": 1})
        self.assertEqual(foo.a, 1)
        bar = Bar.from_json_dict({"b": 2, "c": None})
        self.assertEqual(bar.b, 2)
        self.assertIsNone(bar.c)
        baz = Baz.from_json(json.dumps({"d": 3, "e": {"b": 2, "c": {"a": 1}}}))
        self.assertEqual(baz.e.c.a, 1)

    def test_mixed_leaves(self):
        mixed = Mixed(
            color=Color.RED,
            ratio=Fraction(-1, 30),
            point=complex(1.0, -2.0),
            values=np.array([1.5, 2.5]),
        )
        self.assertEqual(
            mixed.as_json_dict(),
            {
                "color": "red",
                "ratio": [-1, 30],
                "point": {"re": 1.0, "im": -2.0},
                "values": [1.5, 2.5],
            },
        )
        self.assertEqual(mixed.as_json(), mixed.as_json())
        text = mixed.as_json()
        self.assertTrue(text.index('"color"') < text.index('"values"'))

    def test_copy(self):
        foo = Foo(a=1)
        self.assertEqual(foo.copy(a=2).a, 2)
        self.assertEqual(foo.a, 1)


if __name__ == "__main__":
    unittest.main()
