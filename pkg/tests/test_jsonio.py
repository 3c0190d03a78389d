import json
import random

from jacobson.algebra import random_element
from jacobson.arith import GF, QQ, Poly
from jacobson.jsonio import (
    element_from_json, element_to_json, mn_from_json, mn_to_json, uf_from_json, uf_to_json, y_from_json, y_to_json,
)
from jacobson.prufer import random_mn, random_uf
from jacobson.ymodule import random_y


def roundtrip(obj, enc, dec):
    return dec(json.loads(json.dumps(enc(obj))))


def test_elements():
    rng = random.Random(0)
    for F in (QQ, GF(7)):
        for _ in range(50):
            e = random_element(F, rng)
            assert roundtrip(e, element_to_json, element_from_json) == e


def test_prufer_elements():
    rng = random.Random(1)
    f = Poly(QQ, [-1, 1, 1])
    for _ in range(20):
        m = random_mn(f, 3, rng)
        assert roundtrip(m, mn_to_json, mn_from_json) == m
        u = random_uf(f, 3, rng)
        assert roundtrip(u, uf_to_json, uf_from_json) == u


def test_y_elements():
    rng = random.Random(2)
    for F in (QQ, GF(101)):
        for _ in range(30):
            y = random_y(F, rng)
            data = y_to_json(y)
            assert data["den"][0] != "0"
            assert roundtrip(y, y_to_json, y_from_json) == y
