#!/usr/bin/env python3
"""Writes the shipped character tables (data/tables/*.json, schema hallmark-ct/1).

Each table is checked numerically here (row orthogonality, sum of squared
degrees); the library repeats the check exactly when it loads the file.
"""
import cmath
import json
import math
import sys
from pathlib import Path


def lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


class Val:
    """sum c * zeta_n^e, kept as a dict e -> c."""

    def __init__(self, n=1, terms=None):
        self.n = n
        self.t = {}
        for c, e in terms or []:
            e %= n
            self.t[e] = self.t.get(e, 0) + c
        self.t = {e: c for e, c in self.t.items() if c}

    @staticmethod
    def const(c):
        return Val(1, [(c, 0)])

    def complex(self):
        return sum(c * cmath.exp(2j * math.pi * e / self.n) for e, c in self.t.items())

    def to_json(self):
        if all(e == 0 for e in self.t):
            return self.t.get(0, 0)
        return {"n": self.n, "terms": [[c, e] for e, c in sorted(self.t.items())]}


def z(n, e, c=1):
    return Val(n, [(c, e)])


def add_cos(n, k, sign=1):
    """sign * (zeta_n^k + zeta_n^-k)"""
    return Val(n, [(sign, k), (sign, -k)])


def table(name, group, classes, chars):
    order = sum(c[1] for c in classes)
    return {
        "schema": "hallmark-ct/1",
        "name": name,
        "group": group,
        "order": order,
        "exponent": lcm(*[c[2] for c in classes]),
        "classes": [{"label": l, "size": s, "order": o} for l, s, o in classes],
        "characters": [[v if isinstance(v, Val) else Val.const(v) for v in row] for row in chars],
    }


def check(t):
    sizes = [c["size"] for c in t["classes"]]
    order = t["order"]
    rows = [[v.complex() for v in row] for row in t["characters"]]
    assert len(rows) == len(sizes), t["name"]
    assert abs(sum(r[0].real ** 2 for r in rows) - order) < 1e-6, t["name"]
    for i, a in enumerate(rows):
        for j, b in enumerate(rows):
            ip = sum(s * x * y.conjugate() for s, x, y in zip(sizes, a, b)) / order
            assert abs(ip - (1 if i == j else 0)) < 1e-6, (t["name"], i, j, ip)


def cyclic(n):
    classes = [(f"g^{k}", 1, n // math.gcd(k, n)) for k in range(n)]
    chars = [[z(n, j * k) for k in range(n)] for j in range(n)]
    return table(f"C{n}", f"cyclic_{n}" if n > 1 else "cyclic_1", classes, chars)


def dihedral(n):
    rot = [(f"r^{k}", 1 if 2 * k == n else 2, n // math.gcd(k, n)) for k in range(1, n // 2 + 1)]
    classes = [("1", 1, 1)] + rot
    if n % 2:
        classes.append(("s", n, 2))
        chars = [[1] * len(classes), [1] * (len(classes) - 1) + [-1]]
        for j in range(1, (n - 1) // 2 + 1):
            chars.append([2] + [add_cos(n, j * k) for k in range(1, n // 2 + 1)] + [0])
    else:
        classes += [("s", n // 2, 2), ("sr", n // 2, 2)]
        chars = []
        for er in (1, -1):
            for es in (1, -1):
                chars.append([1] + [er**k for k in range(1, n // 2 + 1)] + [es, es * er])
        for j in range(1, n // 2):
            chars.append([2] + [add_cos(n, j * k) for k in range(1, n // 2 + 1)] + [0, 0])
    return table(f"D{n}", f"dihedral_{n}", classes, chars)


def s4():
    classes = [("1a", 1, 1), ("2a", 6, 2), ("2b", 3, 2), ("3a", 8, 3), ("4a", 6, 4)]
    chars = [
        [1, 1, 1, 1, 1],
        [1, -1, 1, 1, -1],
        [2, 0, 2, -1, 0],
        [3, 1, -1, 0, -1],
        [3, -1, -1, 0, 1],
    ]
    return table("S4", "sym_4", classes, chars)


def a5():
    classes = [("1a", 1, 1), ("2a", 15, 2), ("3a", 20, 3), ("5a", 12, 5), ("5b", 12, 5)]
    b5 = Val(5, [(-1, 2), (-1, 3)])
    b5s = Val(5, [(-1, 1), (-1, 4)])
    chars = [
        [1, 1, 1, 1, 1],
        [3, -1, 0, b5, b5s],
        [3, -1, 0, b5s, b5],
        [4, 0, 1, -1, -1],
        [5, 1, -1, 0, 0],
    ]
    return table("A5", "alt_5", classes, chars)


def psl2(q):
    """PSL(2,q) for q = 3 mod 4 prime."""
    assert q % 4 == 3
    ha, hb = (q - 1) // 2, (q + 1) // 2
    la = list(range(1, (q - 3) // 4 + 1))
    lb = list(range(1, (q + 1) // 4 + 1))
    classes = [("1a", 1, 1), ("u", (q * q - 1) // 2, q), ("u'", (q * q - 1) // 2, q)]
    classes += [(f"a^{l}", q * (q + 1), ha // math.gcd(l, ha)) for l in la]
    classes += [(f"b^{m}", q * (q - 1) // (2 if 2 * m == hb else 1), hb // math.gcd(m, hb)) for m in lb]
    qr = sorted({(x * x) % q for x in range(1, q)})
    nqr = [x for x in range(1, q) if x not in qr]
    gauss = Val(q, [(1, e) for e in qr])
    gauss_bar = Val(q, [(1, e) for e in nqr])
    chars = [[1] * len(classes)]
    chars.append([q, 0, 0] + [1] * len(la) + [-1] * len(lb))
    for i in la:
        chars.append([q + 1, 1, 1] + [add_cos(ha, i * l) for l in la] + [0] * len(lb))
    for j in la:
        chars.append([q - 1, -1, -1] + [0] * len(la) + [add_cos(hb, j * m, -1) for m in lb])
    for u, v in ((gauss, gauss_bar), (gauss_bar, gauss)):
        chars.append([(q - 1) // 2, u, v] + [0] * len(la) + [-((-1) ** m) for m in lb])
    return table(f"PSL(2,{q})", f"psl2_{q}", classes, chars)


def trivial():
    return table("1", "cyclic_1", [("1a", 1, 1)], [[1]])


def dump(t):
    lines = ["{"]
    for key in ("schema", "name", "group", "order", "exponent"):
        lines.append(f"  {json.dumps(key)}: {json.dumps(t[key])},")
    lines.append('  "classes": [')
    lines.append(",\n".join("    " + json.dumps(c) for c in t["classes"]))
    lines.append("  ],")
    lines.append('  "characters": [')
    rows = ["    " + json.dumps([v.to_json() for v in row]) for row in t["characters"]]
    lines.append(",\n".join(rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "tables")
    out.mkdir(parents=True, exist_ok=True)
    tables = {
        "trivial": trivial(),
        "cyclic_3": cyclic(3),
        "cyclic_6": cyclic(6),
        "dihedral_4": dihedral(4),
        "dihedral_5": dihedral(5),
        "dihedral_6": dihedral(6),
        "s4": s4(),
        "a5": a5(),
        "psl2_7": psl2(7),
        "psl2_31": psl2(31),
    }
    for stem, t in tables.items():
        check(t)
        (out / f"{stem}.json").write_text(dump(t))
        print(f"{stem}: {len(t['classes'])} classes, order {t['order']}")


if __name__ == "__main__":
    main()
