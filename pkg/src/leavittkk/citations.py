"""Anchor strings embedded in reports so CLI output documents its sources."""

CITATIONS = {
    "bowen-franks": (
        "BF(E) = coker(I - A_E^t) and BF(E)^dual = coker(I - A_E), A_E the incidence matrix "
        "with A_E[v][w] = #edges v->w"),
    "scale": (
        "K_0(C*(E)) is scaled by the class [1] = sum over vertices of [v] "
        "(all-ones vector)"),
    "kirchberg-phillips": (
        "Kirchberg-Phillips / Cuntz-Rordam: the scaled group (K_0(C*(E)), [1]) is a complete "
        "isomorphism invariant of C*(E) for finite spi graphs E"),
    "k1-split": (
        "0 -> BF(F) (x) C* -> K_1(L(F)) -> ker(I - A_F^t) -> 0 splits since ker(I - A_F^t) "
        "is free"),
    "kk-row": (
        "0 -> BF(E)^dual (x) K_1(L(F)) -> kk(L(E),L(F)) -> hom(BF(E),BF(F)) -> 0 is exact"),
    "KK-row": (
        "0 -> BF(E) (x) ker(I - A_F^t) -> KK(C*(E),C*(F)) -> hom(BF(E),BF(F)) -> 0 is exact"),
    "kk-coefficients": (
        "0 -> BF(E)^dual (x) KH_1(A) -> kk(L(E),A) -> hom(BF(E),KH_0(A)) -> 0 is exact"),
    "comp-kernel": (
        "comp: kk(L(E),L(F)) -> KK(C*(E),C*(F)) is onto with kernel "
        "BF(E)^dual (x) BF(F) (x) C*; in particular it is full"),
    "comp-iso": (
        "comp: kk(L(E),L(F)) -> KK(C*(E),C*(F)) is an isomorphism when BF(E) or BF(F) "
        "is finite (C* is divisible; BF and its dual have equal rank)"),
    "comp-conservative": (
        "comp is conservative: the kernel J of kk(L(E),L(E)) -> KK(C*(E),C*(E)) satisfies "
        "J^2 = 0"),
    "lifting": (
        "for finite spi E, F every M_2-homotopy class of nonzero maps C*(E) -> C*(F) is the "
        "completion of a *-homomorphism L(E) -> L(F) with property (P); unital classes lift "
        "to unital maps"),
    "homotopy-classes": (
        "[L(E),C*(F)]_M2 minus 0 = [[C*(E),C*(F)]]_M2 minus 0 as groups, and "
        "0 -> BF(E)^dual (x) BF(F) (x) C* -> [L(E),L(F)]_M2 minus 0 -> "
        "[[C*(E),C*(F)]]_M2 minus 0 -> 0 is exact"),
    "unique-lifting": (
        "if BF(E) or BF(F) is finite, every *-homomorphism class lifts; unital maps lift to "
        "unital maps up to homotopy"),
    "homotopy-equivalence": (
        "for phi with property (P) between finite spi graphs, the completion is an "
        "M_2-homotopy equivalence iff phi is a polynomial M_2-homotopy equivalence "
        "(homotopy equivalence when phi is unital)"),
    "duality-unitary": (
        "the Poincare dual of a *-homomorphism phi: L(E) -> A is the class of the unitary "
        "1(x)1 - sum_v phi(v)(x)v + sum_e phi(e)(x)e_t^* in L(A) (x) L(E_t), E essential"),
    "twist": (
        "for a unitary u commuting with the vertex images, e -> u phi(e) defines the twisted "
        "*-homomorphism phi^u"),
    "spi": (
        "E is spi iff every cycle has an exit, the only hereditary saturated vertex sets are "
        "trivial, and every vertex connects to a cycle"),
}


def cite(*keys: str) -> list[str]:
    return [CITATIONS[k] for k in keys]
