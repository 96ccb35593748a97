"""Derive the degree-266 permutation representation of J1 shipped in data/groups/j1.json.

J1 is generated by two 7x7 matrices over GF(11): a 7-cycle permutation matrix Y
and an order-5 matrix Z.  The 266-point action is the conjugation action on
the subgroups isomorphic to PSL(2,11) (maximal, self-normalizing, index 266).
Such a subgroup is found as <a, t> with a of order 11 and t an involution,
accepted when its closure has exactly 660 elements.
"""
import json
import random
import sys

import numpy as np

P = 11
DIM = 7
L_ORDER = 660

Y = np.roll(np.eye(DIM, dtype=np.int64), 1, axis=1)
Z = np.array([
    [-3, 2, -1, -1, -3, -1, -3],
    [-2, 1, 1, 3, 1, 3, 3],
    [-1, -1, -3, -1, -3, -3, 2],
    [-1, -3, -1, -3, -3, 2, -1],
    [-3, -1, -3, -3, 2, -1, -1],
    [1, 3, 3, -2, 1, 1, 3],
    [3, 3, -2, 1, 1, 3, 1],
], dtype=np.int64) % P
IDENTITY = np.eye(DIM, dtype=np.int64)


def mul(a, b):
    return (a @ b) % P


def key(m):
    return m.astype(np.uint8).tobytes()


def order(m):
    x = m
    for k in range(1, 40):
        if np.array_equal(x, IDENTITY):
            return k
        x = mul(x, m)
    raise RuntimeError("element order above 40")


def power(m, e):
    out = IDENTITY
    for _ in range(e):
        out = mul(out, m)
    return out


def random_element(rng):
    g = IDENTITY
    for _ in range(40):
        g = mul(g, Y if rng.random() < 0.5 else Z)
    return g


def element_of_order(rng, prime):
    while True:
        g = random_element(rng)
        o = order(g)
        if o % prime == 0:
            return power(g, o // prime)


def closure(gens, cap):
    seen = {key(IDENTITY): IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                k = key(y)
                if k not in seen:
                    seen[k] = y
                    if len(seen) > cap:
                        return None
                    nxt.append(y)
        frontier = nxt
    return seen


def inverse(m):
    return power(m, order(m) - 1)


def main(out_path):
    rng = random.Random(20240611)
    a = element_of_order(rng, 11)
    subgroup = None
    for _ in range(20000):
        t = element_of_order(rng, 2)
        elems = closure([a, t], L_ORDER)
        if elems is not None and len(elems) == L_ORDER:
            subgroup = elems
            break
    if subgroup is None:
        sys.exit("no PSL(2,11) subgroup found")

    mats = np.stack(list(subgroup.values()))

    def canon(stack):
        return b"".join(sorted(key(m) for m in stack))

    gens = [Y, Z]
    inv = [inverse(g) for g in gens]
    classes = {canon(mats): 0}
    reps = [mats]
    images = [dict(), dict()]
    i = 0
    while i < len(reps):
        for gi, (g, gin) in enumerate(zip(gens, inv)):
            conj = np.einsum("ij,njk,kl->nil", gin, reps[i], g) % P
            c = canon(conj)
            if c not in classes:
                classes[c] = len(reps)
                reps.append(conj)
            images[gi][i] = classes[c]
        i += 1
    if len(reps) != 266:
        sys.exit("conjugacy orbit has length %d" % len(reps))
    perms = [[images[gi][pt] + 1 for pt in range(266)] for gi in range(2)]
    with open(out_path, "w") as fh:
        json.dump({"name": "J1", "degree": 266, "generators": perms}, fh)
        fh.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/groups/j1.json")
