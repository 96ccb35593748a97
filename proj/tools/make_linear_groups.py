"""Write generator files for PSL(n, p), p prime, acting on projective points.

Usage: make_linear_groups.py OUT_DIR
Produces psl3_2.json (degree 7) and psl3_3.json (degree 13).  SL(n, p) is
generated by the elementary transvections I + E_{i,i+1} and I + E_{i+1,i};
their action on the normalized nonzero vectors of GF(p)^n gives PSL(n, p).
"""
import itertools
import json
import os
import sys


def points(n, p):
    pts = []
    for v in itertools.product(range(p), repeat=n):
        nz = [c for c in v if c]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def normalize(v, p):
    lead = next(c for c in v if c)
    inv = pow(lead, -1, p)
    return tuple((c * inv) % p for c in v)


def transvection(n, i, j):
    m = [[int(r == c) for c in range(n)] for r in range(n)]
    m[i][j] = 1
    return m


def act(m, v, p):
    n = len(v)
    return tuple(sum(v[r] * m[r][c] for r in range(n)) % p for c in range(n))


def group_file(n, p, name):
    pts = points(n, p)
    index = {v: i for i, v in enumerate(pts)}
    mats = [transvection(n, i, i + 1) for i in range(n - 1)]
    mats += [transvection(n, i + 1, i) for i in range(n - 1)]
    gens = [[index[normalize(act(m, v, p), p)] + 1 for v in pts] for m in mats]
    return {"name": name, "degree": len(pts), "generators": gens}


def main(out_dir):
    for n, p in ((3, 2), (3, 3)):
        name = "PSL(%d,%d)" % (n, p)
        path = os.path.join(out_dir, "psl%d_%d.json" % (n, p))
        with open(path, "w") as fh:
            json.dump(group_file(n, p, name), fh)
            fh.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/groups")
