import os
import subprocess
from fractions import Fraction
from itertools import combinations
from math import gcd, prod

import pytest

import dynamo

CLI = os.environ.get("DYNAMO_CLI", "dynamo")
DATA = os.environ.get("DYNAMO_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def elementary(values):
    return [sum(prod(c) for c in combinations(values, k)) for k in range(1, len(values) + 1)]


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


# brute force over small heights; preperiodic orbits have bounded height
def brute_graph(num, den, height=25, steps=24, bound=10**8):
    def ev(z):
        if z is None:
            return None if den[0] == 0 else Fraction(num[0]) / den[0]
        d = len(num) - 1
        a = sum(Fraction(c) * z ** (d - i) for i, c in enumerate(num))
        b = sum(Fraction(c) * z ** (d - i) for i, c in enumerate(den))
        return None if b == 0 else a / b

    pts = [None] + [Fraction(p, q) for q in range(1, height + 1) for p in range(-height, height + 1) if gcd(p, q) == 1]
    found = {}
    for z in pts:
        orbit = [z]
        for _ in range(steps):
            w = ev(orbit[-1])
            if w is not None and (abs(w.numerator) > bound or w.denominator > bound):
                break
            if w in orbit:
                for x in orbit:
                    found[x] = ev(x)
                break
            orbit.append(w)
    return found


def test_sigma_constant_invariants():
    got = [Fraction(s) for s in dynamo.sigma("1/z^3")]
    # all four fixed points of 1/z^3 have multiplier -3
    assert got == elementary([-3] * 4)


def test_sigma_parameters():
    a = Fraction(5, 2)
    got = [Fraction(s) for s in dynamo.sigma("(z^3+a)/(a*z^2)", params={"a": "5/2"})]
    assert got[0] == (a * a - 6 * a + 9) / a


def test_family_and_graph():
    assert dynamo.family_map("a3c3", [-3]) == dynamo.conjugate("(z^3-3)/(-3*z^2)", "[[1,0],[0,1]]")
    g = dynamo.graph("(z^3-3)/(-3*z^2)")
    assert g["nodes"] == ["0", "inf"]
    assert g["next"] == [1, 1]
    assert dynamo.graph("1/z^4", cap=4)["key"] == dynamo.canonical_key([1, 0, 3, 3])


def test_automorphisms():
    assert dynamo.is_automorphism("1/z^3", "[[1@i,0],[0,1]]")
    assert not dynamo.is_automorphism("(z^3+2)/(2*z^2)", "[[0,1],[1,0]]")
    with pytest.raises(dynamo.DynamoError):
        dynamo.is_automorphism("(z^2+1)/(z^2+1)", "[[1,0],[0,1]]")


def test_loci_and_classify():
    assert dynamo.locus("a3c3", "extra_fixed", 2) == ["-1/7"]
    assert dynamo.classify("a3c3", [Fraction(-1, 7)]) == "G2"
    assert dynamo.classify("a4d3", [Fraction(5, 2)]) == "G2"


@pytest.mark.parametrize(
    "num,den",
    [
        ([1, 0, 0, 0], [0, -Fraction(14, 3), 0, 1]),
        ([1, 0, 0, 0], [0, 1, 0, 1]),
        ([0, Fraction(-13, 5), 0, 1], [1, 0, Fraction(-13, 5), 0]),
        ([0, Fraction(-13, 5), 0, 1], [1, 0, Fraction(-13, 15), 0]),
    ],
)
def test_graph_matches_brute_force(num, den):
    def term(c, e):
        return f"({c})*z^{e}"

    d = len(num) - 1
    expr = "(" + "+".join(term(c, d - i) for i, c in enumerate(num)) + ")/(" + "+".join(
        term(c, d - i) for i, c in enumerate(den)) + ")"
    g = dynamo.graph(expr)
    brute = brute_graph(num, den)
    label = {None: "inf"}
    assert sorted(g["nodes"]) == sorted(label.get(x, str(x)) for x in brute)
    for i, node in enumerate(g["nodes"]):
        src = None if node == "inf" else Fraction(node)
        assert label.get(brute[src], str(brute[src])) == g["nodes"][g["next"][i]]


def test_census_binding():
    r = dynamo.census("a3c2f", [[0, 1], [0, "-14/3"], [2, "1/2"]], jobs=2)
    assert r["distinct"] == 1
    assert "error" in r["records"][2]


def test_cli_census_and_determinism():
    path = os.path.join(DATA, "a4c2.tsv")
    one = run("census", "--family", "a4c2", "--params-file", path, "--format", "json", "--out", os.devnull)
    assert one.returncode == 0
    assert "distinct: 55" in one.stdout
    a = run("census", "--family", "a3c2f", "--params-file", os.path.join(DATA, "a3c2f.tsv"), "--jobs", "1")
    b = run("census", "--family", "a3c2f", "--params-file", os.path.join(DATA, "a3c2f.tsv"), "--jobs", "4")
    assert a.stdout == b.stdout
    assert "same graph: (0,1) (0,-14/3)" in a.stdout


def test_cli_exit_codes():
    assert run("sigma", "--map", "1/z^3").stdout.splitlines()[0] == "sigma_1^(1) = -12"
    assert run("sigma").returncode == 1
    assert run("sigma", "--map", "z^2+w+k").returncode == 1
    assert run("sigma", "--map", "(z^2+1)/(z^2+1)").returncode == 2
    assert run("classify", "--family", "a3d2g", "--param", "a=1").returncode == 2
    assert run("families", "list").stdout.count("\n") == 12
