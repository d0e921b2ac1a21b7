"""Random elements and conversions shared by the Leavitt algebra tests."""

import random
from fractions import Fraction

import oracles
from leavittkk.leavitt import LeavittAlgebra, coeff


def word_model(g):
    return oracles.WordModel(g.vertices, [(e.id, e.src, e.dst) for e in g.edges])


def random_word(rng: random.Random, g, max_len=4):
    """Mostly composable words, built by walking forwards and backwards."""
    n = rng.randint(1, max_len)
    if rng.random() < 0.2:
        letters = [("v", v) for v in g.vertices] + [("e", e.id) for e in g.edges] + \
                  [("s", e.id) for e in g.edges]
        return tuple(rng.choice(letters) for _ in range(n))
    v = rng.choice(g.vertices)
    word = []
    ghosts = False
    for _ in range(n):
        if not ghosts and rng.random() < 0.6 and g.out_edges[v]:
            e = rng.choice(g.out_edges[v])
            word.append(("e", e.id))
            v = e.dst
        else:
            ghosts = True
            ins = g.in_edges[v]
            if not ins:
                break
            e = rng.choice(ins)
            word.append(("s", e.id))
            v = e.src
        if rng.random() < 0.1:
            ghosts = False
    return tuple(word) or (("v", v),)


def random_coeff(rng):
    return (Fraction(rng.randint(-3, 3)), Fraction(rng.choice([0, 0, rng.randint(-2, 2)])))


def element_from_words(alg: LeavittAlgebra, words: dict):
    out = alg.zero()
    for word, (re, im) in words.items():
        term = alg.one()
        for kind, name in word:
            gen = {"v": alg.vertex, "e": alg.edge, "s": alg.ghost}[kind](name)
            term = term.raw_mul(gen)
        out = out + term.scale(coeff(re, im))
    return out


def random_words(rng, g, terms=3):
    out = {}
    for _ in range(rng.randint(1, terms)):
        c = random_coeff(rng)
        if c != (0, 0):
            oracles._acc(out, random_word(rng, g), c)
    return out


def random_element(rng, alg: LeavittAlgebra, terms=3):
    return element_from_words(alg, random_words(rng, alg.graph, terms))


def nf_as_words(x) -> dict:
    out = {}
    for m, c in x.normal_form().terms.items():
        if not m.p and not m.q:
            word = (("v", m.vertex),)
        else:
            word = tuple(("e", e) for e in m.p) + tuple(("s", e) for e in reversed(m.q))
        out[word] = (Fraction(int(c.x.numerator), int(c.x.denominator)),
                     Fraction(int(c.y.numerator), int(c.y.denominator)))
    return out


def canon(d: dict) -> dict:
    return {k: (Fraction(a), Fraction(b)) for k, (a, b) in d.items()}
