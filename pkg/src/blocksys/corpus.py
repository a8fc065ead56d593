"""Built-in Hopf algebra corpus.

Members are generated from defining relations with exact arithmetic and
are expected to pass the full axiom validators (the test suite enforces
this).  Group algebras take a raw multiplication table: ``table[i][j]``
is the index of g_i g_j.
"""

from __future__ import annotations

from .coalgebra import HopfData
from .errors import UnsupportedParams
from .linalg import Matrix
from .scalars import QQ, cyclotomic_field, root_of_unity


def cyclic(n: int) -> list[list[int]]:
    """Multiplication table of the cyclic group of order n."""
    if n < 1:
        raise UnsupportedParams("cyclic group order must be >= 1")
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def s3() -> list[list[int]]:
    """Multiplication table of the symmetric group on three letters."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # (p q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(3))

    return [[index[compose(p, q)] for q in perms] for p in perms]


def _group_identity(table: list[list[int]]) -> int:
    n = len(table)
    for e in range(n):
        if all(table[e][j] == j and table[j][e] == j for j in range(n)):
            return e
    raise UnsupportedParams("table has no identity element")


def _group_inverses(table: list[list[int]], e: int) -> list[int]:
    n = len(table)
    inv = [-1] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == e and table[j][i] == e:
                inv[i] = j
                break
        if inv[i] < 0:
            raise UnsupportedParams(f"element {i} has no inverse")
    return inv


def group_algebra(table: list[list[int]]) -> HopfData:
    """k[G]: basis = group elements, every basis element group-like."""
    n = len(table)
    if any(len(row) != n for row in table):
        raise UnsupportedParams("multiplication table must be square")
    e = _group_identity(table)
    inv = _group_inverses(table, e)
    delta = {(i, i, i): 1 for i in range(n)}
    counit = [1] * n
    mult = {(i, j, table[i][j]): 1 for i in range(n) for j in range(n)}
    unit = [1 if i == e else 0 for i in range(n)]
    antipode = [[1 if inv[j] == i else 0 for j in range(n)] for i in range(n)]
    return HopfData.make(QQ, n, delta, counit, mult, unit, antipode)


def dual_group_algebra(table: list[list[int]]) -> HopfData:
    """Functions on G: basis of point evaluations delta_g."""
    n = len(table)
    if any(len(row) != n for row in table):
        raise UnsupportedParams("multiplication table must be square")
    e = _group_identity(table)
    inv = _group_inverses(table, e)
    delta = {(table[a][b], a, b): 1 for a in range(n) for b in range(n)}
    counit = [1 if c == e else 0 for c in range(n)]
    mult = {(a, a, a): 1 for a in range(n)}
    unit = [1] * n
    antipode = [[1 if inv[j] == i else 0 for j in range(n)] for i in range(n)]
    return HopfData.make(QQ, n, delta, counit, mult, unit, antipode)


def taft(n: int) -> HopfData:
    """The n^2-dimensional algebra <g, x | g^n = 1, x^n = 0, xg = z gx>
    with Delta(g) = g x g, Delta(x) = 1 x x + x x g, over a field with a
    primitive n-th root of unity z.

    Supported for n in {2, 3, 4}; n = 2 is the classical four-dimensional
    example over plain Q (z = -1).  Larger n would need higher-degree
    cyclotomic scalars than the toolkit commits to supporting.
    """
    if n not in (2, 3, 4):
        raise UnsupportedParams("taft(n) supported for n in {2, 3, 4}")
    field = cyclotomic_field(n)
    zeta = root_of_unity(n)
    dim = n * n

    def idx(i: int, j: int) -> int:  # basis g^i x^j
        return i * n + j

    one = field.one

    # zeta powers, indexed mod n (zeta^n = 1)
    zpow = [one]
    for _ in range(n - 1):
        zpow.append(zpow[-1] * zeta)

    def zp(e: int):
        return zpow[e % n]

    mult = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j + l >= n:
                        continue  # x^n = 0
                    # (g^i x^j)(g^k x^l) = z^(jk) g^(i+k) x^(j+l)
                    mult[(idx(i, j), idx(k, l), idx((i + k) % n, j + l))] = zp(j * k)

    def tensor_mul(u: dict, v: dict) -> dict:
        out: dict[tuple[int, int], object] = {}
        for (a, b), cu in u.items():
            ia, ja = divmod(a, n)
            ib, jb = divmod(b, n)
            for (c, d), cv in v.items():
                ic, jc = divmod(c, n)
                idd, jd = divmod(d, n)
                if ja + jc >= n or jb + jd >= n:
                    continue
                left = idx((ia + ic) % n, ja + jc)
                right = idx((ib + idd) % n, jb + jd)
                coef = cu * cv * zp(ja * ic) * zp(jb * idd)
                key = (left, right)
                acc = out.get(key)
                out[key] = coef if acc is None else acc + coef
        return {k: v2 for k, v2 in out.items() if v2}

    d_g = {(idx(1, 0), idx(1, 0)): one}
    d_x = {(idx(0, 0), idx(0, 1)): one, (idx(0, 1), idx(1, 0)): one}
    delta = {}
    for i in range(n):
        for j in range(n):
            acc = {(idx(0, 0), idx(0, 0)): one}
            for _ in range(i):
                acc = tensor_mul(acc, d_g)
            for _ in range(j):
                acc = tensor_mul(acc, d_x)
            for (a, b), v in acc.items():
                delta[(idx(i, j), a, b)] = v

    counit = [one if j == 0 else field.zero for i in range(n) for j in range(n)]
    unit = [one if t == idx(0, 0) else field.zero for t in range(dim)]

    # antipode: S(g) = g^(n-1), S(x) = -x g^(n-1); S(g^i x^j) = S(x)^j S(g)^i
    def alg_mul(u: dict, v: dict) -> dict:
        out: dict[int, object] = {}
        for a, cu in u.items():
            ia, ja = divmod(a, n)
            for b, cv in v.items():
                ib, jb = divmod(b, n)
                if ja + jb >= n:
                    continue
                key = idx((ia + ib) % n, ja + jb)
                coef = cu * cv * zp(ja * ib)
                acc = out.get(key)
                out[key] = coef if acc is None else acc + coef
        return {k: v2 for k, v2 in out.items() if v2}

    s_g = {idx(n - 1, 0): one}
    s_x = {idx(n - 1, 1): -zp(n - 1)}  # -x g^(n-1) = -z^(n-1) g^(n-1) x
    z = field.zero
    scols = []
    for i in range(n):
        for j in range(n):
            acc = {idx(0, 0): one}
            for _ in range(j):
                acc = alg_mul(acc, s_x)
            for _ in range(i):
                acc = alg_mul(acc, s_g)
            col = [z] * dim
            for t, v in acc.items():
                col[t] = v
            scols.append(col)
    antipode = [[scols[jcol][irow] for jcol in range(dim)] for irow in range(dim)]

    return HopfData.make(field, dim, delta, counit, mult, unit, antipode)


def sweedler() -> HopfData:
    """The four-dimensional example: taft(2) over plain rationals."""
    return taft(2)


def corpus(name: str, **params) -> HopfData:
    """Dispatcher for the built-in corpus.

    Names: "sweedler"; "taft" (param n); "group_algebra" and
    "dual_group_algebra" (param table, or group="cyclic:<n>"/"s3").
    """
    if name == "sweedler":
        return sweedler()
    if name == "taft":
        if "n" not in params:
            raise UnsupportedParams("corpus member 'taft' needs the parameter n")
        return taft(int(params["n"]))
    if name in ("group_algebra", "dual_group_algebra"):
        table = params.get("table")
        if table is None:
            spec = params.get("group", "")
            table = named_group(spec)
        fn = group_algebra if name == "group_algebra" else dual_group_algebra
        return fn(table)
    raise UnsupportedParams(f"unknown corpus member {name!r}")


def named_group(spec: str) -> list[list[int]]:
    """Built-in group specs: "cyclic:<n>" or "s3"."""
    if spec == "s3":
        return s3()
    if spec.startswith("cyclic:"):
        return cyclic(int(spec.split(":", 1)[1]))
    raise UnsupportedParams(f"unknown group spec {spec!r}; use cyclic:<n> or s3")
