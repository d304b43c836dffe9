#!/usr/bin/env python3
"""Writes data/matroids/*.json and data/goldens/*.json.

Matroid documents come from the representations in the appendix of Oxley's
"Matroid Theory" (2nd ed.), as transcribed in SageMath's matroid database
(sage/matroids/database_matroids.py). Goldens hold the published Ehrhart
coefficients of these matroids, formatted the way `ehrmat ehrhart` prints them.
"""

import itertools
import json
import math
import pathlib
import re
from fractions import Fraction

ROOT = pathlib.Path(__file__).resolve().parents[2]
SOURCE = "Oxley, Matroid Theory (2nd ed.), appendix; via SageMath database_matroids.py"


def rank_mod_p(rows, p):
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] % p:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def bases_from_matrix(a, p):
    r, n = len(a), len(a[0])
    cols = [[a[i][j] for i in range(r)] for j in range(n)]
    return [list(s) for s in itertools.combinations(range(1, n + 1), r)
            if rank_mod_p([cols[j - 1] for j in s], p) == r]


def bases_from_hyperplanes(n, r, dependent):
    """Sparse paving: every r-set is a basis except the circuit-hyperplanes."""
    dep = {tuple(sorted(d)) for d in dependent}
    return [list(s) for s in itertools.combinations(range(1, n + 1), r) if s not in dep]


def letters(words):
    return [[ord(ch) - ord("a") + 1 for ch in w] for w in words]


def wheel(r, whirl):
    a = [[0] * (2 * r) for _ in range(r)]
    for i in range(r):
        a[i][i] = 1
        a[i][r + i] = 1
        if i != 0:
            a[i][i + r - 1] = -1 % 3
        else:
            a[i][2 * r - 1] = 1 if whirl else -1 % 3
    return bases_from_matrix(a, 3)


def ag32():
    pts = [(1, x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    return bases_from_matrix([list(c) for c in zip(*pts)], 2)


AG32_PLANES = ["abfg", "bcdg", "defg", "cdeh", "aefh", "abch", "abed",
               "cfgh", "bcef", "adgh", "acdf", "begh", "aceg"]

MATROIDS = {
    # name: (n, r, bases, provenance)
    "W3": (6, 3, wheel(3, True), "rank-3 whirl, ternary representation of Whirl(3)"),
    "Q6": (6, 3, bases_from_hyperplanes(6, 3, letters(["abd", "bce"])),
           "two 3-point lines sharing a point (relaxation of the rank-3 whirl)"),
    "P6": (6, 3, bases_from_hyperplanes(6, 3, letters(["abc"])), "one 3-point line"),
    "R6": (6, 3, bases_from_matrix([[1, 0, 0, 1, 1, 1], [0, 1, 0, 1, 2, 1], [0, 0, 1, 1, 0, 2]], 3),
           "ternary representation over GF(3)"),
    "F7": (7, 3, bases_from_matrix([[1, 0, 0, 0, 1, 1, 1], [0, 1, 0, 1, 0, 1, 1], [0, 0, 1, 1, 1, 0, 1]], 2),
           "Fano plane, binary representation"),
    "F7-": (7, 3, bases_from_matrix([[1, 0, 0, 0, 1, 1, 1], [0, 1, 0, 1, 0, 1, 1], [0, 0, 1, 1, 1, 0, 1]], 3),
            "non-Fano, the same matrix over GF(3)"),
    "P7": (7, 3, bases_from_matrix([[1, 0, 0, 2, 1, 1, 0], [0, 1, 0, 1, 1, 0, 1], [0, 0, 1, 1, 0, 1, 1]], 3),
           "ternary representation over GF(3)"),
    "AG32": (8, 4, ag32(), "binary affine cube, points (1, x) for x in GF(2)^3"),
    "AG32prime": (8, 4, bases_from_hyperplanes(8, 4, letters(AG32_PLANES)),
                  "AG(3,2) with one circuit-hyperplane relaxed (13 circuit-hyperplanes)"),
    "R8": (8, 4, bases_from_matrix([[1, 0, 0, 0, 2, 1, 1, 1], [0, 1, 0, 0, 1, 2, 1, 1],
                                    [0, 0, 1, 0, 1, 1, 2, 1], [0, 0, 0, 1, 1, 1, 1, 2]], 3),
           "ternary representation [I | J - 2I] over GF(3)"),
    "F8": (8, 4, bases_from_hyperplanes(8, 4, letters(AG32_PLANES[:11] + ["aceg"])),
           "12 circuit-hyperplanes as listed by circuit closures"),
    "Q8": (8, 4, bases_from_hyperplanes(8, 4, letters(AG32_PLANES[:11])),
           "11 circuit-hyperplanes as listed by circuit closures"),
    "S8": (8, 4, bases_from_matrix([[1, 0, 0, 0, 0, 1, 1, 1], [0, 1, 0, 0, 1, 0, 1, 1],
                                    [0, 0, 1, 0, 1, 1, 0, 1], [0, 0, 0, 1, 1, 1, 1, 1]], 2),
           "binary representation over GF(2)"),
    "V8": (8, 4, bases_from_hyperplanes(8, 4, letters(["abcd", "abef", "cdef", "abgh", "efgh"])),
           "Vamos matroid, 5 circuit-hyperplanes"),
    "T8": (8, 4, bases_from_matrix([[1, 0, 0, 0, 0, 1, 1, 1], [0, 1, 0, 0, 1, 0, 1, 1],
                                    [0, 0, 1, 0, 1, 1, 0, 1], [0, 0, 0, 1, 1, 1, 1, 0]], 3),
           "ternary representation [I | J - I] over GF(3)"),
    "V8plus": (8, 4, bases_from_hyperplanes(8, 4, letters(["abcd", "abef", "cdef", "abgh", "efgh", "cdgh"])),
               "Vamos matroid with the sixth pair-union {c,d,g,h} added as a circuit-hyperplane"),
    "L8": (8, 4, bases_from_hyperplanes(8, 4, letters(["abfg", "bcdg", "defg", "cdeh", "aefh", "abch", "aceg", "bdfh"])),
           "8 circuit-hyperplanes as listed by circuit closures"),
    "J": (8, 4, bases_from_matrix([[1, 0, 0, 0, 0, 1, 1, 1], [0, 1, 0, 0, 1, 1, 0, 0],
                                   [0, 0, 1, 0, 1, 0, 1, 0], [0, 0, 0, 1, 1, 0, 0, 1]], 3),
          "ternary representation over GF(3)"),
    "P8": (8, 4, bases_from_matrix([[1, 0, 0, 0, 2, 1, 1, 0], [0, 1, 0, 0, 1, 1, 0, 1],
                                    [0, 0, 1, 0, 1, 0, 1, 1], [0, 0, 0, 1, 0, 1, 1, 2]], 3),
           "ternary representation over GF(3)"),
    "W4": (8, 4, wheel(4, False), "rank-4 wheel, regular representation of Wheel(4)"),
    "Whirl4": (8, 4, wheel(4, True), "rank-4 whirl, ternary representation of Whirl(4)"),
}

K4_EDGES = [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]

# Published Ehrhart coefficients (constant term first) and h*-vectors as printed.
TABLE = {
    "K4": ("1 107/30 21/4 49/12 7/4 7/20", "1 10 20 10 1"),
    "W3": ("1 18/5 11/2 9/2 2 2/5", "1 11 24 11 10"),
    "Q6": ("1 109/30 23/4 59/12 9/4 9/20", "1 12 28 12 1"),
    "P6": ("1 11/3 6 16/3 5/2 1/2", "1 13 32 13 1"),
    "R6": ("1 109/30 23/4 59/12 9/4 9/20", "1 12 28 12 1"),
    "F7": ("1 21/5 343/45 63/8 91/18 77/40 29/90", "21 98 91 21 1"),
    "F7-": ("1 253/60 2809/360 33/4 193/36 61/30 121/360", "21 101 97 22 1"),
    "P7": ("1 127/30 479/60 69/8 17/3 257/120 7/20", "21 104 103 23 1"),
    "AG32": ("1 209/42 1981/180 881/60 119/9 95/12 499/180 89/210", "1 62 561 1014 449 48 1"),
    "AG32prime": ("1 299/60 4007/360 5401/360 122/9 2911/360 1013/360 77/180", "1 62 562 1023 458 49 1"),
    "R8": ("1 524/105 1013/90 1379/90 125/9 743/90 257/90 136/315", "1 62 563 1032 467 50 1"),
    "F8": ("1 524/105 1013/90 1379/90 125/9 743/90 257/90 136/315", "1 62 563 1032 467 50 1"),
    "Q8": ("1 2099/420 4097/360 1877/120 128/9 337/40 1043/360 61/140", "1 62 564 1041 476 51 1"),
    "S8": ("1 1021/210 377/36 475/36 193/18 511/90 65/36 67/252", "1 44 337 612 305 40 1"),
    "V8": ("1 2117/420 4367/360 2107/120 146/9 1133/120 1133/360 193/420", "1 62 570 1095 530 57 1"),
    "T8": ("1 2099/420 4097/360 1877/120 128/9 337/40 1043/360 61/140", "1 62 564 1041 476 51 1"),
    "V8plus": ("1 151/30 2161/180 3103/180 143/9 1669/180 559/180 41/90", "1 62 569 1086 521 56 1"),
    "L8": ("1 527/105 529/45 83/5 137/9 134/15 136/45 47/105", "1 62 567 1068 503 54 1"),
    "J": ("1 512/105 193/18 83/6 205/18 361/60 17/9 23/84", "1 44 339 630 323 42 1"),
    "P8": ("1 1051/210 2071/180 2873/180 131/9 1547/180 529/180 277/630", "1 62 565 1050 485 52 1"),
    "W4": ("1 135/28 3691/360 1511/120 88/9 39/8 529/360 89/420", "1 38 262 475 254 37 1"),
    "Whirl4": ("1 169/35 467/45 581/45 91/9 227/45 68/45 68/315", "1 38 263 484 263 38 1"),
}

# Rows whose basis lists are not published and could not be reconstructed.
SKIPPED = {
    "Speyer1": "1 21/5 343/45 63/8 91/18 77/40 29/90",
    "Speyer2": "1 135/28 3691/360 1511/120 88/9 39/8 529/360 89/420",
    "BJR1": "1 109/30 23/4 59/12 9/4 9/20",
    "BJR2": "1 211/60 125/24 33/8 43/24 43/120",
    "BJR3": "1 83/20 2783/360 199/24 391/72 247/120 61/180",
    "BJR4": "1 25/6 353/45 101/12 193/36 23/12 53/180",
}


def dump(path, obj):
    path.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(obj, indent=2)
    # Keep innermost integer lists (subsets, edges) on one line.
    text = re.sub(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]", lambda m: "[" + ", ".join(m.group(1).split()).replace(",,", ",") + "]", text)
    path.write_text(text + "\n")


def golden(name, coeffs):
    fr = [Fraction(c) for c in coeffs.split()]
    d = len(fr) - 1
    vol = fr[-1] * math.factorial(d)
    return {
        "name": name,
        "coefficients": [str(c) for c in fr],
        "volumeNormalized": str(vol),
        "dim": d,
    }


def hstar_of(coeffs, d):
    """h*_j = sum_{i<=j} (-1)^i C(d+1, i) p(j - i), from the exact Ehrhart coefficients."""
    p = [Fraction(c) for c in coeffs]

    def value(k):
        return sum(c * k ** i for i, c in enumerate(p))

    h = [sum((-1) ** i * math.comb(d + 1, i) * value(j - i) for i in range(j + 1)) for j in range(d + 1)]
    assert all(x.denominator == 1 and x >= 0 for x in h), h
    return [int(x) for x in h]


def table_golden(name, g, printed):
    """Printed rows list the nonzero h* entries either ascending or descending; a row
    matching neither is a misprint, kept as printed next to the computed vector."""
    h = hstar_of(g["coefficients"], g["dim"])
    assert sum(h) == int(g["volumeNormalized"])
    body = h[:max(i for i, x in enumerate(h) if x) + 1]
    if printed == body:
        orientation, note = "ascending", None
    elif printed == body[::-1]:
        orientation, note = "descending", None
    else:
        orientation = "misprint"
        note = (f"printed row {printed} sums to {sum(printed)}, not d! * leading coefficient = {sum(h)}; "
                f"the stored vector is the transform of the printed Ehrhart polynomial")
    out = {"name": name, "ehrhart": g["coefficients"], "dim": g["dim"], "hstar": h,
           "hstarPrinted": printed, "printedOrientation": orientation}
    if note:
        out["note"] = note
    return out


def main():
    docs = {"K4": {"name": "K4", "family": "bases", "kind": "graphic", "edges": K4_EDGES,
                   "provenance": "complete graph on 4 vertices"}}
    for name, (n, r, bases, note) in MATROIDS.items():
        docs[name] = {"name": name, "family": "bases", "kind": "bases", "n": n, "bases": bases,
                      "provenance": note + "; " + SOURCE}
    for name, doc in docs.items():
        dump(ROOT / "data" / "matroids" / f"{name}.json", doc)
        coeffs, hstar = TABLE[name]
        g = golden(name, coeffs)
        dump(ROOT / "data" / "goldens" / f"{name}.ehrhart.json", g)
        dump(ROOT / "data" / "goldens" / f"{name}.table.json", table_golden(name, g, [int(x) for x in hstar.split()]))
    dump(ROOT / "data" / "goldens" / "skipped.json",
         {name: {"ehrhart": [str(Fraction(c)) for c in coeffs.split()],
                 "reason": "basis list not published; reconstruction from the cited figures not attempted"}
          for name, coeffs in SKIPPED.items()})

    # Small documents for the other families and kinds.
    dump(ROOT / "data" / "matroids" / "U36_independence.json",
         {"name": "U36_independence", "family": "independence", "kind": "uniform", "n": 6, "r": 3})
    dump(ROOT / "data" / "matroids" / "U25.json",
         {"name": "U25", "family": "bases", "kind": "uniform", "n": 5, "r": 2})
    table = []
    for k in range(1, 4):
        for s in itertools.combinations(range(1, 4), k):
            table.append({"set": list(s), "value": min(2 * len(s), 3)})
    dump(ROOT / "data" / "matroids" / "poly3.json",
         {"name": "poly3", "family": "polymatroid", "kind": "table", "n": 3, "table": table,
          "provenance": "psi(A) = min(2|A|, 3)"})


if __name__ == "__main__":
    main()
