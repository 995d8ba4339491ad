"""Embedded reference data: OEIS prefixes and the small-m tables for P_5, Q_1..Q_5 and the signed rows.

OEIS prefixes can be refreshed from a user-supplied b-file with
``scripts/bfile_to_fixture.py``; nothing here is fetched over the network.
"""
from __future__ import annotations

from fractions import Fraction

# id -> (first index, terms)
OEIS: dict[str, tuple[int, tuple[int, ...]]] = {
    # (2n)!/n!: binary rooted plane trees with n labeled end nodes
    "A001813": (0, (
        1, 2, 12, 120, 1680, 30240, 665280, 17297280, 518918400, 17643225600,
        670442572800, 28158588057600, 1295295050649600, 64764752532480000,
        3497296636753920000, 202843204931727360000, 12576278705767096320000,
        830034394580628357120000, 58102407620643984998400000,
        4299578163927654889881600000, 335367096786357081410764800000,
        27500101936481280675682713600000, 2365008766537390138108713369600000,
        212850788988365112429784203264000000, 20007974164906320568399715106816000000,
    )),
    # m!/2^{m+1} * C(4m+2, 2m+1), i.e. Q_m(1)
    "A334907": (0, (
        1, 5, 63, 1287, 36465, 1322685, 58503375, 3053876175, 183771489825,
        12525477859125, 953725671273375, 80237355387564375, 7391465178302430225,
        739967791738943292525, 79993069900054731795375, 9286937373235386442953375,
    )),
    # second column of the A000369 triangle, indexed so that term m is beta_{m,0}
    "A000369-col2": (1, (1, 9, 111, 1785, 35595)),
}

P5 = tuple(Fraction(s) for s in ("4389/256", "8589/128", "7161/64", "777/8", "693/16", "63/8"))

# Q_m = a_scale * a_base + x * b_scale * b_base, with b_base possibly given as a product of factors
Q_DECOMPOSITIONS: dict[int, dict] = {
    1: {"a": (2, [(1, 1)]), "b": (1, [(1,)]), "text": "Q_1(x) = 2(1+x) + x"},
    2: {"a": (3, [(4, 7, 4)]), "b": (9, [(1, 1)]), "text": "Q_2(x) = 3(4+7x+4x^2) + 9x(1+x)"},
    3: {"a": (3, [(40, 103, 103, 40)]), "b": (3, [(37, 69, 37)]),
        "text": "Q_3(x) = 3(40+103x+103x^2+40x^3) + 3x(37+69x+37x^2)"},
    4: {"a": (105, [(16, 55, 79, 55, 16)]), "b": (255, [(1, 1), (7, 12, 7)]),
        "text": "Q_4(x) = 105(16+55x+79x^2+55x^3+16x^4) + 255x(1+x)(7+12x+7x^2)"},
    5: {"a": (315, [(96, 415, 781, 781, 415, 96)]), "b": (315, [(113, 403, 583, 403, 113)]),
        "text": "Q_5(x) = 315(96+415x+781x^2+781x^3+415x^4+96x^5) + 315x(113+403x+583x^2+403x^3+113x^4)"},
}

# signed polynomials alpha_m(x), beta_m(x) as coefficient lists, m = 0..5
SIGNED: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    0: ((1,), ()),
    1: ((2,), (1,)),
    2: ((12, 3), (9,)),
    3: ((120, 51), (111, 15)),
    4: ((1680, 945, 105), (1785, 510)),
    5: ((30240, 20475, 5040), (35595, 15435, 945)),
}


def golden_decomposition(m: int):
    """(a_m, b_m) as Poly objects, expanded from the factored table."""
    from bmgamma.poly import Poly

    def build(scale, factors):
        p = Poly.const(scale)
        for fac in factors:
            p = p * Poly(fac)
        return p

    entry = Q_DECOMPOSITIONS[m]
    return build(*entry["a"]), build(*entry["b"])
