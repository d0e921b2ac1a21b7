"""Independent reference computations used to check the library.

Nothing here imports the code under test except plain data types, so these
serve as oracles: explicit enumeration of finite abelian groups and maps,
determinants over the rationals, and a naive word-rewriting model of the
Leavitt relations that rewrites anywhere in a word in any order.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from itertools import product
from math import gcd, lcm


# -- finite abelian groups by enumeration -----------------------------------------


def partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _factor(n: int) -> dict[int, int]:
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def abelian_groups_of_order(n: int) -> list[tuple[int, ...]]:
    """All abelian groups of order n, as lists of cyclic factor orders (prime powers)."""
    per_prime = []
    for p, e in _factor(n).items():
        per_prime.append([tuple(p ** k for k in part) for part in partitions(e)])
    return [tuple(x for piece in combo for x in piece) for combo in product(*per_prime)] or [()]


def elements(cyclic: tuple[int, ...]):
    return list(product(*[range(d) for d in cyclic]))


def element_order(x, cyclic) -> int:
    o = 1
    for c, d in zip(x, cyclic):
        o = lcm(o, d // gcd(c, d))
    return o


def order_census(cyclic: tuple[int, ...]) -> Counter:
    return Counter(element_order(x, cyclic) for x in elements(cyclic))


def hom_census(g: tuple[int, ...], h: tuple[int, ...]) -> Counter:
    """Element-order census of Hom(g, h), enumerating generator images.

    A tuple of images defines a homomorphism iff the i-th image is killed by
    the order of the i-th generator; the order of a homomorphism is the lcm
    of the orders of the images.
    """
    hs = elements(h)
    orders = {y: element_order(y, h) for y in hs}
    choices = [[y for y in hs if all((d * c) % m == 0 for c, m in zip(y, h))] for d in g]
    census: Counter = Counter()
    for imgs in product(*choices):
        o = 1
        for y in imgs:
            o = lcm(o, orders[y])
        census[o] += 1
    return census


def hom_to_cyclic_count(g: tuple[int, ...], k: int) -> int:
    """|Hom(g, Z/k)| by enumerating generator images."""
    return sum(1 for imgs in product(*[range(k) for _ in g])
               if all((d * y) % k == 0 for d, y in zip(g, imgs)))


def bilinear_count(g: tuple[int, ...], h: tuple[int, ...], k: int) -> int:
    """Number of bilinear maps g x h -> Z/k, which equals |Hom(g (x) h, Z/k)|.

    A bilinear map is fixed by its values on generator pairs, and the only
    constraints are that each value is killed by both generator orders.
    """
    total = 1
    for d in g:
        for e in h:
            total *= sum(1 for b in range(k) if (d * b) % k == 0 and (e * b) % k == 0)
    return total


def cyclic_fingerprint(count_fn, exponent_bound: int) -> tuple[int, ...]:
    """|Hom(A, Z/k)| for k = 1..bound: determines a finite abelian group A."""
    return tuple(count_fn(k) for k in range(1, exponent_bound + 1))


def automorphisms(cyclic: tuple[int, ...]) -> list[tuple]:
    """All automorphisms of a finite abelian group as tuples of generator images."""
    xs = elements(cyclic)
    n = len(xs)
    choices = [[y for y in xs if all((d * c) % m == 0 for c, m in zip(y, cyclic))] for d in cyclic]
    out = []
    for imgs in product(*choices):
        image = set()
        for x in xs:
            image.add(apply_images(imgs, x, cyclic))
        if len(image) == n:
            out.append(imgs)
    return out


def apply_images(imgs, x, cyclic):
    return tuple(sum(c * y[i] for c, y in zip(x, imgs)) % m for i, m in enumerate(cyclic))


# -- rational determinants ---------------------------------------------------------


def det_fraction(rows: list[list[int]]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return int(det)


# -- Leavitt relations on words ----------------------------------------------------
# A word is a tuple of letters ("v", name) | ("e", name) | ("s", name), the last
# being the adjoint of an edge.  An element is a dict word -> complex(Fraction) pair.


class WordModel:
    def __init__(self, vertices, edges):
        """``edges`` is a list of (id, src, dst) in input order."""
        self.vertices = list(vertices)
        self.src = {e: s for e, s, _ in edges}
        self.dst = {e: d for e, _, d in edges}
        self.out = {v: [e for e, s, _ in edges if s == v] for v in self.vertices}
        self.special = {v: es[-1] for v, es in self.out.items() if es}

    def _left(self, letter):
        kind, name = letter
        return name if kind == "v" else (self.src[name] if kind == "e" else self.dst[name])

    def _right(self, letter):
        kind, name = letter
        return name if kind == "v" else (self.dst[name] if kind == "e" else self.src[name])

    def redex(self, a, b):
        """Rewrite of the adjacent pair (a, b), or None if the pair is stable."""
        if self._right(a) != self._left(b):
            return []
        if a[0] == "v":
            return [((b,), ONE)]
        if b[0] == "v":
            return [((a,), ONE)]
        if a[0] == "s" and b[0] == "e":
            return [(((("v", self.dst[a[1]]),)), ONE)] if a[1] == b[1] else []
        if a[0] == "e" and b[0] == "s" and a[1] == b[1] and self.special.get(self.src[a[1]]) == a[1]:
            u = self.src[a[1]]
            out = [((("v", u),), ONE)]
            out += [((("e", f), ("s", f)), MINUS_ONE) for f in self.out[u] if f != a[1]]
            return out
        return None

    def redexes(self, word):
        return [i for i in range(len(word) - 1) if self.redex(word[i], word[i + 1]) is not None]

    def reduce(self, elem: dict, strategy: str = "leftmost", rng: random.Random | None = None,
               bound: int = 200_000) -> dict:
        rng = rng or random.Random(0)
        work = dict(elem)
        done: dict = {}
        steps = 0
        while work:
            word, c = work.popitem()
            spots = self.redexes(word)
            if not spots:
                _acc(done, word, c)
                continue
            steps += 1
            if steps > bound:
                raise RuntimeError("word rewriting did not terminate")
            if strategy == "leftmost":
                i = spots[0]
            elif strategy == "rightmost":
                i = spots[-1]
            else:
                i = rng.choice(spots)
            for rep, cr in self.redex(word[i], word[i + 1]):
                _acc(work, word[:i] + rep + word[i + 2:], cmul(c, cr))
        return done


ONE = (Fraction(1), Fraction(0))
MINUS_ONE = (Fraction(-1), Fraction(0))


def cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def cadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _acc(d, k, c):
    s = cadd(d.get(k, (Fraction(0), Fraction(0))), c)
    if s == (0, 0):
        d.pop(k, None)
    else:
        d[k] = s


# -- graph conditions by subset enumeration -----------------------------------------


def _subsets(items):
    items = list(items)
    for mask in range(1, 1 << len(items)):
        yield {x for i, x in enumerate(items) if mask >> i & 1}


def hereditary_saturated_sets(vertices, edges) -> list[set]:
    """Every hereditary saturated subset, found by testing all subsets."""
    out_nbrs = {v: [d for _, s, d in edges if s == v] for v in vertices}
    found = [set()]
    for h in _subsets(vertices):
        hereditary = all(w in h for v in h for w in out_nbrs[v])
        saturated = all(v in h for v in vertices
                        if out_nbrs[v] and all(w in h for w in out_nbrs[v]))
        if hereditary and saturated:
            found.append(h)
    return found


def has_cycle_without_exit(vertices, edges) -> bool:
    """A cycle without exit is a strongly connected set on which each vertex has one edge out."""
    out_nbrs = {v: [d for _, s, d in edges if s == v] for v in vertices}
    for s in _subsets(vertices):
        if not all(len(out_nbrs[v]) == 1 and out_nbrs[v][0] in s for v in s):
            continue
        start = next(iter(s))
        seen, v = [], start
        while v not in seen:
            seen.append(v)
            v = out_nbrs[v][0]
        if v == start and set(seen) == s:
            return True
    return False
