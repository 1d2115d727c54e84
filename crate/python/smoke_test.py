"""Smoke test for the pycompshuffle extension.

Build and install it first, e.g. `maturin develop -m crates/py/Cargo.toml`
or `pip install crates/py`, then run `python python/smoke_test.py`.
"""

import json

import pycompshuffle as cs


def schur(js):
    return {tuple(t["shape"]): t["coeff"] for t in json.loads(js)["terms"]}


def main():
    assert cs.qt("q*q - q*q + 1") == "1"

    assert schur(cs.chi("NNEENE")) == {(3,): "1", (2, 1): "q + 1", (1, 1, 1): "q"}
    assert schur(cs.chi("NNEENE", "zero")) == {(2, 1): "1", (1, 1, 1): "q"}

    image, sigma = cs.zeta("NENNNENNEEEENNEE")
    assert image == "NNNEENENENNEEENE"
    assert sigma == [1, 2, 4, 6, 7, 8, 3, 5]
    st = json.loads(cs.stats("NENNNENNEEEENNEE"))
    assert (st["area"], st["dinv"], st["touch"]) == (9, 8, [1, 5, 2])

    assert schur(cs.macdonald("2,1")) == {(3,): "1", (2, 1): "q + t", (1, 1, 1): "q*t"}
    h2 = cs.macdonald("2")
    assert schur(cs.nabla(h2)) == {(2,): "q", (1, 1): "q^2"}

    routes = {m: schur(cs.dalpha("3,1", m)) for m in ("op", "brute", "nabla")}
    assert routes["op"] == routes["brute"] == routes["nabla"]

    n31 = json.loads(cs.nalpha("3,1"))
    assert n31["level"] == 2
    y = json.dumps({"level": 1, "terms": [{"y": [1], "sym": {"basis": "s", "terms": [{"shape": [], "coeff": "1"}]}}]})
    back = json.loads(cs.ninv(cs.ninv(y)))
    assert [(t["y"], t["sym"]["terms"]) for t in back["terms"]] == [([1], [{"shape": [], "coeff": "1"}])]
    once = json.loads(cs.ninv(y))
    assert once["terms"][0]["sym"]["terms"][0]["coeff"] == "-q*t"

    for n in range(5):
        assert json.loads(cs.verify_shuffle(n))["pass"], n

    try:
        cs.chi("NNE")
    except ValueError:
        pass
    else:
        raise AssertionError("invalid path accepted")

    print("smoke test: PASS")


if __name__ == "__main__":
    main()
