"""Multiplication tables for every group of order at most 8.

A table is a list of rows of element indices: table[i][j] = index of g_i g_j.
Labels are plain strings chosen for readability.  Tables are built from
faithful models (residues, bitmasks, permutations, signed quaternion units)
rather than typed in by hand.
"""


def _cyclic(n):
    labels = ["e"] + ["g" if k == 1 else "g%d" % k for k in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return labels, table


def _bitmask_group(bits, letters):
    # elementary abelian 2-group on `bits` generators, xor composition
    n = 1 << bits
    labels = []
    for mask in range(n):
        word = "".join(letters[b] for b in range(bits) if mask >> b & 1)
        labels.append(word or "e")
    table = [[i ^ j for j in range(n)] for i in range(n)]
    return labels, table


def _z4_x_z2():
    elems = [(i, j) for j in range(2) for i in range(4)]
    labels = ["e", "a", "a2", "a3", "b", "ab", "a2b", "a3b"]
    index = {el: t for t, el in enumerate(elems)}
    table = [[index[((x[0] + y[0]) % 4, (x[1] + y[1]) % 2)] for y in elems] for x in elems]
    return labels, table


def _perm_group(perms, labels):
    index = {p: i for i, p in enumerate(perms)}
    compose = lambda p, q: tuple(p[q[x]] for x in range(len(p)))
    table = [[index[compose(p, q)] for q in perms] for p in perms]
    return labels, table


def _s3():
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
    return _perm_group(perms, labels)


def _d4():
    r = (1, 2, 3, 0)              # rotate square vertices
    s = (0, 3, 2, 1)              # reflect
    compose = lambda p, q: tuple(p[q[x]] for x in range(4))
    e = (0, 1, 2, 3)
    pows = [e]
    for _ in range(3):
        pows.append(compose(r, pows[-1]))
    perms = pows + [compose(p, s) for p in pows]
    labels = ["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]
    return _perm_group(perms, labels)


def _q8():
    letters = "1ijk"
    # unit quaternion products: (sign, letter)
    prod = {}
    for a in letters:
        prod[("1", a)] = (1, a)
        prod[(a, "1")] = (1, a)
    for a in "ijk":
        prod[(a, a)] = (-1, "1")
    for a, b, c in (("i", "j", "k"), ("j", "k", "i"), ("k", "i", "j")):
        prod[(a, b)] = (1, c)
        prod[(b, a)] = (-1, c)
    elems = [(s, a) for a in letters for s in (1, -1)]
    labels = [("" if s == 1 else "-") + a for s, a in elems]
    index = {el: t for t, el in enumerate(elems)}

    def mul(x, y):
        s, a = prod[(x[1], y[1])]
        return (s * x[0] * y[0], a)

    table = [[index[mul(x, y)] for y in elems] for x in elems]
    return labels, table


_BUILDERS = {
    "trivial": lambda: _cyclic(1),
    "Z2": lambda: _cyclic(2),
    "Z3": lambda: _cyclic(3),
    "Z4": lambda: _cyclic(4),
    "Z5": lambda: _cyclic(5),
    "Z6": lambda: _cyclic(6),
    "Z7": lambda: _cyclic(7),
    "Z8": lambda: _cyclic(8),
    "V4": lambda: _bitmask_group(2, "ab"),
    "Z4xZ2": _z4_x_z2,
    "Z2xZ2xZ2": lambda: _bitmask_group(3, "abc"),
    "S3": _s3,
    "D4": _d4,
    "Q8": _q8,
}

GROUP_NAMES = sorted(_BUILDERS)


def named_group(name):
    """(labels, table) for a builtin group, case-insensitive lookup."""
    for key, build in _BUILDERS.items():
        if key.lower() == name.lower():
            return build()
    raise KeyError("unknown group %r (builtin: %s)" % (name, ", ".join(GROUP_NAMES)))


def check_group_table(table):
    """None if `table` is a group table, else the name of the first failing law."""
    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            return "closure"
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    return "associativity"
    e = next((i for i in range(n)
              if all(table[i][j] == j and table[j][i] == j for j in range(n))), None)
    if e is None:
        return "identity"
    for i in range(n):
        if not any(table[i][j] == e and table[j][i] == e for j in range(n)):
            return "inverses"
    return None


def group_identity(table):
    n = len(table)
    return next(i for i in range(n)
                if all(table[i][j] == j and table[j][i] == j for j in range(n)))


def group_inverses(table):
    n = len(table)
    e = group_identity(table)
    return [next(j for j in range(n) if table[i][j] == e) for i in range(n)]
