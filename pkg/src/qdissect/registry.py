"""The identity registry: every verified statement as an IdentityEntry.

Groups, in registry order:

  A. toolkit: product rearrangements, the theta shift/reflection laws,
     base-doubling laws, the generic two-theta product identities, the
     three-term Weierstrass relation, the quintuple product, the two
     Hecke-type vanishing sums, the lost-notebook split of the universal
     mock theta function g and its even/odd root-of-unity corollaries
     (generic-variable identities are checked at fixed batches of
     specializations x = +-q^a, enumerated here);
  B. the fifth-order mock theta conjectures (f0, f1);
  C. 2-dissections of rank and crank deviations mod 4, with the
     intermediate forms and the split rewrites that connect them;
  D. 2-dissections of rank deviations mod 8, 4-dissections of crank
     deviations mod 8, and their support machinery;
  E. the ten Lewis/Santa-Gadea rank-crank relations and the mod 4/8
     rank-difference theorems and corollaries;
  F. support lemmas for the g-combinations (residues mod 4);
  G. 5- and 7-dissections of rank and crank deviations;
  H. Lewis's rank-crank difference conjectures mod 8: the 4-dissection,
     its reduction identities (checked in q^4-deflated form), the
     inequalities, and the closing positivity statement.

Entry ids are stable across releases.  Chained equalities (for example
the four-way relations) live under one id with every leg compared
against the first.
"""

from __future__ import annotations

from fractions import Fraction

from . import partitions, theta
from .identities import CountSelector, IdentityEntry
from .rings import INTEGER, RATIONAL
from .series import Series
from .theta import GSpec, J, Jbar, eta_atom

THETA_PREC = 200  # theta-only entries (cheap, sparse expansions)
MOCK_PREC = 100  # entries whose builders evaluate mock g


# -- small builder DSL -----------------------------------------------------------
#
# A builder is a callable prec -> Series.  Most right-hand sides are sums
# of terms scale * q^shift * (eta quotient | g | constant); the helpers
# below keep those transcriptions close to how the statements are written.


def _quot(scale, shift, num=(), den=()):
    def term(prec, ring):
        return theta.eta_quotient(num, den, shift, scale, prec, ring)

    return term


def _g(scale, shift, sign, a, m):
    spec = GSpec(sign, a, m)

    def term(prec, ring):
        out = theta.mock_g(spec, prec - shift).shift(shift)
        if ring == RATIONAL:
            out = out.to_rational()
        return out.scale(scale)

    return term


def _const(value):
    def term(prec, ring):
        return Series.constant(ring, value, prec)

    return term


def _monomial(value, exponent):
    def term(prec, ring):
        return Series.monomial(ring, exponent, prec, ring.coerce(value))

    return term


def terms(*parts, ring=INTEGER):
    def build(prec):
        out = Series.zero(ring, prec)
        for part in parts:
            out = out + part(prec, ring)
        return out

    return build


def zero_series(ring=INTEGER):
    return lambda prec: Series.constant(ring, 0, prec)


def atom_series(atom):
    return lambda prec: theta.theta_j(atom, prec)


def deviation(stat, a, M):
    return lambda prec: partitions.deviation_series(stat, a, M, prec)


def deviation_sum(stat, M):
    def build(prec):
        out = Series.zero(RATIONAL, prec)
        for a in range(M):
            out = out + partitions.deviation_series(stat, a, M, prec)
        return out

    return build


def combo(*parts):
    """Sum of (family, coefficients, scale) combinator evaluations."""

    def build(prec):
        out = Series.zero(RATIONAL, prec)
        for family, coeffs, scale in parts:
            piece = theta.combinator(theta.theta_comb(family, *coeffs), prec)
            if scale != 1:
                piece = piece.scale(Fraction(scale))
            out = out + piece
        return out

    return build


def counts(parts, t=None, r=0, twist=False):
    """Integer combination of residue-count tables, optionally restricted
    to the progression t*n+r, deflated, and (-1)^n-twisted."""

    def build(prec):
        src = prec if t is None else t * prec + r
        out = Series.zero(INTEGER, src)
        for coef, stat, a, M in parts:
            piece = partitions.residue_series(stat, a, M, src)
            out = out + (piece.scale(coef) if coef != 1 else piece)
        if t is not None:
            out = out.dissect(t, r).deflate(t, r).truncate(prec)
        if twist:
            out = out.substitute_neg_q()
        return out

    return build


def _eq(entry_id, label, builders, prec):
    return IdentityEntry(entry_id, label, "equality", prec, tuple(builders))


# -- group A: toolkit -------------------------------------------------------------


def _toolkit_entries():
    entries = []

    rearr = [
        ("rearr-0a", "j(-1;q) = 2 j(-q;q^4)",
         atom_series(Jbar(0, 1)), terms(_quot(2, 0, [Jbar(1, 4)]))),
        ("rearr-0b", "j(-q;q^4) = J2^2/J1",
         atom_series(Jbar(1, 4)),
         terms(_quot(1, 0, [(eta_atom(2), 2)], [eta_atom(1)]))),
        ("rearr-1", "j(-q;q^2) = J2^5/(J1^2 J4^2)",
         atom_series(Jbar(1, 2)),
         terms(_quot(1, 0, [(eta_atom(2), 5)], [(eta_atom(1), 2), (eta_atom(4), 2)]))),
        ("rearr-2", "j(q;q^2) = J1^2/J2",
         atom_series(J(1, 2)),
         terms(_quot(1, 0, [(eta_atom(1), 2)], [eta_atom(2)]))),
        ("rearr-3", "j(-q;q^3) = J2 J3^2/(J1 J6)",
         atom_series(Jbar(1, 3)),
         terms(_quot(1, 0, [eta_atom(2), (eta_atom(3), 2)], [eta_atom(1), eta_atom(6)]))),
        ("rearr-4", "j(q;q^4) = J1 J4/J2",
         atom_series(J(1, 4)),
         terms(_quot(1, 0, [eta_atom(1), eta_atom(4)], [eta_atom(2)]))),
        ("rearr-5", "j(q;q^6) = J1 J6^2/(J2 J3)",
         atom_series(J(1, 6)),
         terms(_quot(1, 0, [eta_atom(1), (eta_atom(6), 2)], [eta_atom(2), eta_atom(3)]))),
        ("rearr-6", "j(-q;q^6) = J2^2 J3 J12/(J1 J4 J6)",
         atom_series(Jbar(1, 6)),
         terms(_quot(1, 0, [(eta_atom(2), 2), eta_atom(3), eta_atom(12)],
                     [eta_atom(1), eta_atom(4), eta_atom(6)]))),
    ]
    for entry_id, label, lhs, rhs in rearr:
        entries.append(_eq(entry_id, label, [lhs, rhs], THETA_PREC))

    # shift law j(q^m x; q^m) = -x^-1 j(x; q^m)
    for i, (s, a, m) in enumerate([(1, 1, 3), (-1, 2, 5), (1, 3, 4), (-1, 1, 1), (1, 5, 8)]):
        entries.append(_eq(
            f"shift-law-{i}", "j(qx;q) = -x^-1 j(x;q)",
            [atom_series(theta.ThetaAtom(s, a + m, m)),
             terms(_quot(-s, -a, [theta.ThetaAtom(s, a, m)]))],
            THETA_PREC,
        ))

    # reflection j(x;q) = j(q/x;q)
    for i, (s, a, m) in enumerate([(1, 1, 3), (-1, 1, 4), (1, 2, 7), (-1, 3, 8), (-1, 0, 5)]):
        entries.append(_eq(
            f"reflect-law-{i}", "j(x;q) = j(q/x;q)",
            [atom_series(theta.ThetaAtom(s, a, m)),
             atom_series(theta.ThetaAtom(s, m - a, m))],
            THETA_PREC,
        ))

    # base doubling j(x;q) = J1 j(x;q^2) j(qx;q^2) / J2^2
    for i, (s, a, m) in enumerate([(1, 1, 2), (-1, 1, 3), (1, 2, 5), (-1, 3, 4), (1, 1, 8)]):
        entries.append(_eq(
            f"base-double-{i}", "j(x;q) = J1 j(x;q^2) j(qx;q^2)/J2^2",
            [atom_series(theta.ThetaAtom(s, a, m)),
             terms(_quot(1, 0,
                         [eta_atom(m), theta.ThetaAtom(s, a, 2 * m),
                          theta.ThetaAtom(s, a + m, 2 * m)],
                         [(eta_atom(2 * m), 2)]))],
            THETA_PREC,
        ))

    # negated base j(x;-q) = j(x;q^2) j(-qx;q^2) / j(q;q^4)
    for i, (s, a, m) in enumerate([(1, 1, 1), (-1, 1, 1), (1, 1, 2), (-1, 3, 2), (1, 2, 3)]):
        def lhs(prec, s=s, a=a, m=m):
            return theta.theta_j_sum(theta.ThetaAtom(s, a, m), prec, base_sign=-1)

        entries.append(_eq(
            f"neg-base-{i}", "j(x;-q) = j(x;q^2) j(-qx;q^2)/j(q;q^4)",
            [lhs,
             terms(_quot(1, 0,
                         [theta.ThetaAtom(s, a, 2 * m), theta.ThetaAtom(-s, a + m, 2 * m)],
                         [J(m, 4 * m)]))],
            THETA_PREC,
        ))

    # m-term theta splitting at m = 2, 3, 5
    splitgen_specs = [(2, 1, 1, 1), (2, -1, 1, 3), (3, 1, 1, 2),
                      (3, -1, 2, 3), (5, 1, 1, 3), (5, -1, 1, 2)]
    for i, (m, s, a, b) in enumerate(splitgen_specs):
        parts = []
        for k in range(m):
            # term k: (-1)^k q^(b C(k,2)) z^k j((-1)^(m+1) q^(b(C(m,2)+mk)) z^m; q^(bm^2))
            arg_sign = ((-1) ** (m + 1)) * (s if m % 2 else 1)
            scale = ((-1) ** k) * (s if k % 2 else 1)
            shift = b * (k * (k - 1) // 2) + a * k
            atom = theta.ThetaAtom(
                arg_sign,
                b * (m * (m - 1) // 2) + b * m * k + a * m,
                b * m * m,
            )
            parts.append(_quot(scale, shift, [atom]))
        entries.append(_eq(
            f"split-{m}-term-{i}", f"{m}-term splitting of j(z;q)",
            [atom_series(theta.ThetaAtom(s, a, b)), terms(*parts)],
            THETA_PREC,
        ))

    # two-square splitting j(z;q) = j(-qz^2;q^4) - z j(-q^3 z^2;q^4)
    jsplit_specs = [
        (1, 1, 1), (-1, 1, 1), (1, 1, 2), (-1, 1, 2), (1, 1, 4), (-1, 1, 4),
        (1, 3, 4), (-1, 3, 4), (1, 2, 16), (-1, 2, 16), (1, 6, 16), (-1, 6, 16),
        (1, 1, 8), (-1, 5, 8), (1, 4, 32), (-1, 8, 32), (1, 2, 3), (-1, 2, 5),
        (1, 7, 16), (-1, 3, 7),
    ]
    for i, (s, a, m) in enumerate(jsplit_specs):
        entries.append(_eq(
            f"jsplit-{i}", "j(z;q) = j(-qz^2;q^4) - z j(-q^3z^2;q^4)",
            [atom_series(theta.ThetaAtom(s, a, m)),
             terms(_quot(1, 0, [Jbar(m + 2 * a, 4 * m)]),
                   _quot(-s, a, [Jbar(3 * m + 2 * a, 4 * m)]))],
            THETA_PREC,
        ))

    # product of two thetas: j(x;q) j(y;q)
    pair_specs = [
        (1, 1, 1, 2, 3), (1, 1, -1, 1, 3), (-1, 1, -1, 2, 3), (1, 2, 1, 3, 5),
        (-1, 1, 1, 3, 5), (1, 1, 1, 4, 5), (-1, 2, -1, 3, 7), (1, 3, -1, 1, 7),
        (1, 1, 1, 1, 2), (-1, 1, 1, 2, 4), (1, 3, -1, 2, 4), (1, 1, -1, 5, 8),
        (-1, 3, -1, 7, 8), (1, 2, 1, 7, 9), (1, 1, 1, 5, 6), (-1, 1, -1, 1, 1),
        (1, 4, 1, 1, 5), (-1, 2, 1, 5, 8), (1, 1, -1, 2, 2), (1, 5, 1, 2, 12),
    ]
    for i, (s1, a, s2, b, m) in enumerate(pair_specs):
        entries.append(_eq(
            f"theta-pair-{i}",
            "j(x;q)j(y;q) = j(-xy;q^2)j(-qy/x;q^2) - x j(-qxy;q^2)j(-y/x;q^2)",
            [terms(_quot(1, 0, [theta.ThetaAtom(s1, a, m), theta.ThetaAtom(s2, b, m)])),
             terms(_quot(1, 0, [theta.ThetaAtom(-s1 * s2, a + b, 2 * m),
                                theta.ThetaAtom(-s1 * s2, m - a + b, 2 * m)]),
                   _quot(-s1, a, [theta.ThetaAtom(-s1 * s2, m + a + b, 2 * m),
                                  theta.ThetaAtom(-s1 * s2, b - a, 2 * m)]))],
            THETA_PREC,
        ))
        entries.append(_eq(
            f"theta-pair-even-{i}",
            "j(-x;q)j(y;q) + j(x;q)j(-y;q) = 2 j(xy;q^2) j(qy/x;q^2)",
            [terms(_quot(1, 0, [theta.ThetaAtom(-s1, a, m), theta.ThetaAtom(s2, b, m)]),
                   _quot(1, 0, [theta.ThetaAtom(s1, a, m), theta.ThetaAtom(-s2, b, m)])),
             terms(_quot(2, 0, [theta.ThetaAtom(s1 * s2, a + b, 2 * m),
                                theta.ThetaAtom(s1 * s2, m - a + b, 2 * m)]))],
            THETA_PREC,
        ))

    # three-term Weierstrass relation
    weier_specs = [
        ((-1, 32), (1, 20), (1, 16), (-1, 8), 64),
        ((1, 3), (1, 2), (1, 1), (-1, 1), 5),
        ((-1, 2), (1, 3), (-1, 1), (1, 1), 4),
        ((1, 5), (-1, 3), (1, 2), (1, 1), 8),
        ((1, 4), (1, 3), (1, 2), (1, 1), 7),
        ((-1, 3), (-1, 2), (1, 1), (-1, 1), 3),
        ((1, 6), (1, 5), (-1, 3), (1, 2), 12),
        ((1, 2), (-1, 1), (1, 1), (-1, 2), 2),
        ((-1, 7), (1, 4), (1, 3), (1, 1), 16),
        ((1, 9), (1, 6), (-1, 4), (1, 2), 11),
    ]
    for i, (pa, pb, pc, pd, m) in enumerate(weier_specs):
        (sa, ea), (sb, eb), (sc, ec), (sd, ed) = pa, pb, pc, pd

        def pairs(p, q):
            (s1, e1), (s2, e2) = p, q
            return (theta.ThetaAtom(s1 * s2, e1 + e2, m),
                    theta.ThetaAtom(s1 * s2, e1 - e2, m))

        lhs_atoms = pairs(pa, pc) + pairs(pb, pd)
        rhs1_atoms = pairs(pa, pd) + pairs(pb, pc)
        rhs2_atoms = pairs(pa, pb) + pairs(pc, pd)
        entries.append(_eq(
            f"weierstrass-{i}", "three-term Weierstrass relation",
            [terms(_quot(1, 0, lhs_atoms)),
             terms(_quot(1, 0, rhs1_atoms),
                   _quot(sb * sc, eb - ec, rhs2_atoms))],
            THETA_PREC,
        ))

    # quintuple product j(qx^3;q^3) + x j(q^2x^3;q^3) = J1 j(x^2;q)/j(x;q)
    quint_specs = [
        (1, 1, 4), (-1, 1, 4), (1, 1, 5), (1, 2, 5), (-1, 1, 7),
        (1, 2, 7), (-1, 3, 8), (1, 1, 3), (1, 5, 25), (1, 10, 25),
    ]
    for i, (s, a, m) in enumerate(quint_specs):
        entries.append(_eq(
            f"quintuple-{i}", "quintuple product identity",
            [terms(_quot(1, 0, [theta.ThetaAtom(s, m + 3 * a, 3 * m)]),
                   _quot(s, a, [theta.ThetaAtom(s, 2 * m + 3 * a, 3 * m)])),
             terms(_quot(1, 0, [eta_atom(m), J(2 * a, m)],
                         [theta.ThetaAtom(s, a, m)]))],
            THETA_PREC,
        ))

    # Hecke-type vanishing sums
    for i, (s, a) in enumerate([(1, 1), (-1, 1), (1, 2), (-1, 2), (1, 3),
                                (-1, 3), (1, 5), (-1, 5), (1, 6), (-1, 6)]):
        entries.append(_eq(
            f"hecke-sum-{i}",
            "j(q^2x;q^4)j(q^5x;q^8) + (q/x) j(x;q^4)j(qx;q^8) "
            "= (J1/J4) j(-q^3x;q^4)j(q^3x;q^8)",
            [terms(_quot(1, 0, [theta.ThetaAtom(s, 2 + a, 4), theta.ThetaAtom(s, 5 + a, 8)]),
                   _quot(s, 1 - a, [theta.ThetaAtom(s, a, 4), theta.ThetaAtom(s, 1 + a, 8)]),
                   _quot(-1, 0, [eta_atom(1), theta.ThetaAtom(-s, 3 + a, 4),
                                 theta.ThetaAtom(s, 3 + a, 8)], [eta_atom(4)])),
             zero_series(INTEGER)],
            THETA_PREC,
        ))
        entries.append(_eq(
            f"hecke-sum-alt-{i}",
            "j(-x;q^4)j(-q^5x;q^8) - j(-q^2x;q^4)j(-qx;q^8) "
            "= x (J1/J4) j(q^3x;q^4)j(-q^7x;q^8)",
            [terms(_quot(1, 0, [theta.ThetaAtom(-s, a, 4), theta.ThetaAtom(-s, 5 + a, 8)]),
                   _quot(-1, 0, [theta.ThetaAtom(-s, 2 + a, 4), theta.ThetaAtom(-s, 1 + a, 8)]),
                   _quot(-s, a, [eta_atom(1), theta.ThetaAtom(s, 3 + a, 4),
                                 theta.ThetaAtom(-s, 7 + a, 8)], [eta_atom(4)])),
             zero_series(INTEGER)],
            THETA_PREC,
        ))

    # the lost-notebook split of g and its root-of-unity corollaries
    g_pairs = [(1, 4), (2, 16), (6, 16), (2, 10), (4, 10), (5, 25), (10, 25),
               (7, 49), (21, 49), (14, 49), (12, 64), (20, 64), (4, 64), (28, 64)]
    gsplit_specs = [(1, a, m) for a, m in g_pairs] + [(-1, 1, 4), (-1, 2, 16), (-1, 6, 16)]
    for i, (s, a, m) in enumerate(gsplit_specs):
        entries.append(_eq(
            f"gsplit-{i}",
            "g(x;q) = -x^-1 + qx^-3 g(-q/x^2;q^4) - q g(-qx^2;q^4) "
            "+ J2 j(q^2;q^4)^2/(x j(x;q) j(-qx^2;q^2))",
            [terms(_g(1, 0, s, a, m)),
             terms(_monomial(-s, -a),
                   _g(s, m - 3 * a, -1, m - 2 * a, 4 * m),
                   _g(-1, m, -1, m + 2 * a, 4 * m),
                   _quot(s, -a, [eta_atom(2 * m), (J(2 * m, 4 * m), 2)],
                         [theta.ThetaAtom(s, a, m), Jbar(m + 2 * a, 2 * m)]))],
            MOCK_PREC,
        ))
    for i, (a, m) in enumerate(g_pairs):
        entries.append(_eq(
            f"g-even-part-{i}",
            "g(x;q) + g(-x;q) = -2q g(-qx^2;q^4) "
            "+ 2 J2 j(-q;q^4)^2/(j(-qx^2;q^4) j(x^2;q^2))",
            [terms(_g(1, 0, 1, a, m), _g(1, 0, -1, a, m)),
             terms(_g(-2, m, -1, m + 2 * a, 4 * m),
                   _quot(2, 0, [eta_atom(2 * m), (Jbar(m, 4 * m), 2)],
                         [Jbar(m + 2 * a, 4 * m), J(2 * a, 2 * m)]))],
            MOCK_PREC,
        ))
        entries.append(_eq(
            f"g-odd-part-{i}",
            "g(x;q) - g(-x;q) = -2x^-1 + 2qx^-3 g(-q/x^2;q^4) "
            "+ 2 J2 j(-q;q^4)^2/(x j(-q^3x^2;q^4) j(x^2;q^2))",
            [terms(_g(1, 0, 1, a, m), _g(-1, 0, -1, a, m)),
             terms(_monomial(-2, -a),
                   _g(2, m - 3 * a, -1, m - 2 * a, 4 * m),
                   _quot(2, -a, [eta_atom(2 * m), (Jbar(m, 4 * m), 2)],
                         [Jbar(3 * m + 2 * a, 4 * m), J(2 * a, 2 * m)]))],
            MOCK_PREC,
        ))

    return entries


# -- group B: fifth-order mock theta conjectures -----------------------------------


def _mock_theta_entries():
    def f0(prec):
        return theta.eulerian_sum("f0", prec)

    def f1(prec):
        return theta.eulerian_sum("f1", prec)

    return [
        _eq("mock-theta-f0", "f0(q) = -2q^2 g(q^2;q^10) + j(q^5;q^10)j(q^2;q^5)/J1",
            [f0, terms(_g(-2, 2, 1, 2, 10),
                       _quot(1, 0, [J(5, 10), J(2, 5)], [eta_atom(1)]))],
            MOCK_PREC),
        _eq("mock-theta-f1", "f1(q) = -2q^3 g(q^4;q^10) + j(q^5;q^10)j(q;q^5)/J1",
            [f1, terms(_g(-2, 3, 1, 4, 10),
                       _quot(1, 0, [J(5, 10), J(1, 5)], [eta_atom(1)]))],
            MOCK_PREC),
    ]


# -- groups C and D: deviation dissections mod 4 and mod 8 --------------------------


def _deviation_entries():
    entries = []

    # rank deviations mod 4: 2-dissection
    entries.append(_eq(
        "dev-rank-0-4", "D(0,4) 2-dissection",
        [deviation("rank", 0, 4),
         combo(("theta4", (-5, 3, 1, 1), 1), ("G4", (-1, 0), 2))],
        MOCK_PREC))
    entries.append(_eq(
        "dev-rank-1-4", "D(1,4) = D(3,4) 2-dissection",
        [deviation("rank", 1, 4), deviation("rank", 3, 4),
         combo(("theta4", (3, -1, -3, 1), 1), ("G4", (1, 1), 1))],
        MOCK_PREC))
    entries.append(_eq(
        "dev-rank-2-4", "D(2,4) 2-dissection",
        [deviation("rank", 2, 4),
         combo(("theta4", (-1, -1, 5, -3), 1), ("G4", (0, -1), 2))],
        MOCK_PREC))
    entries.append(_eq(
        "dev-rank-4-sum", "rank deviations mod 4 sum to zero",
        [deviation_sum("rank", 4), zero_series(RATIONAL)], MOCK_PREC))

    # crank deviations mod 4
    for a, coeffs in [(0, (3, -1, 1, -3)), (1, (-1, -1, 1, 1)), (2, (-1, 3, -3, 1))]:
        legs = [deviation("crank", a, 4)]
        if a == 1:
            legs.append(deviation("crank", 3, 4))
        legs.append(combo(("theta4", coeffs, 1)))
        entries.append(_eq(
            f"dev-crank-{a}-4", f"D_C({a},4) 2-dissection", legs, MOCK_PREC))
    entries.append(_eq(
        "dev-crank-4-sum", "crank deviations mod 4 sum to zero",
        [deviation_sum("crank", 4), zero_series(RATIONAL)], MOCK_PREC))

    # mod 4 rank proposition (g on base q^16) and its first-stage form (base q^4)
    J4 = eta_atom(4)
    q14 = [J(1, 2), J(1, 4)]
    q14bar = [Jbar(1, 2), Jbar(1, 4)]
    entries.append(_eq(
        "dev-rank-0-4-pre", "D(0,4) via g(-q^2;q^16)",
        [deviation("rank", 0, 4),
         terms(_const(2), _g(-2, 2, -1, 2, 16),
               _quot(-2, 0, [Jbar(4, 8), Jbar(6, 16)], [J4]),
               _quot(Fraction(1, 2), 0, q14bar, [J4]),
               _quot(Fraction(1, 4), 0, q14, [J4]), ring=RATIONAL)],
        MOCK_PREC))
    entries.append(_eq(
        "dev-rank-1-4-pre", "D(1,4) via g(-q^2;q^16), g(-q^6;q^16)",
        [deviation("rank", 1, 4),
         terms(_const(-1), _g(1, 2, -1, 2, 16), _g(1, 5, -1, 6, 16),
               _quot(1, 0, [Jbar(4, 8), J(1, 4)], [J4]),
               _quot(Fraction(-1, 4), 0, q14, [J4]), ring=RATIONAL)],
        MOCK_PREC))
    entries.append(_eq(
        "dev-rank-2-4-pre", "D(2,4) via g(-q^6;q^16)",
        [deviation("rank", 2, 4),
         terms(_g(-2, 5, -1, 6, 16),
               _quot(2, 1, [Jbar(4, 8), Jbar(2, 16)], [J4]),
               _quot(Fraction(-1, 2), 0, q14bar, [J4]),
               _quot(Fraction(1, 4), 0, q14, [J4]), ring=RATIONAL)],
        MOCK_PREC))
    entries.append(_eq(
        "dev-rank-0-4-base", "D(0,4) via g(+-q;q^4)",
        [deviation("rank", 0, 4),
         terms(_g(1, 1, -1, 1, 4), _g(-1, 1, 1, 1, 4),
               _quot(Fraction(1, 2), 0, q14bar, [J4]),
               _quot(Fraction(1, 4), 0, q14, [J4]), ring=RATIONAL)],
        MOCK_PREC))
    entries.append(_eq(
        "dev-rank-1-4-base", "D(1,4) via g(-q;q^4)",
        [deviation("rank", 1, 4),
         terms(_g(-1, 1, -1, 1, 4),
               _quot(Fraction(-1, 4), 0, q14, [J4]), ring=RATIONAL)],
        MOCK_PREC))
    entries.append(_eq(
        "dev-rank-2-4-base", "D(2,4) via g(+-q;q^4)",
        [deviation("rank", 2, 4),
         terms(_g(1, 1, -1, 1, 4), _g(1, 1, 1, 1, 4),
               _quot(Fraction(-1, 2), 0, q14bar, [J4]),
               _quot(Fraction(1, 4), 0, q14, [J4]), ring=RATIONAL)],
        MOCK_PREC))
    entries.append(_eq(
        "dev-rank-2-4-alt", "D(2,4), the Jbar_{1,2}J_{2,4}/J1 form",
        [deviation("rank", 2, 4),
         terms(_g(-2, 5, -1, 6, 16),
               _quot(2, 1, [Jbar(4, 8), Jbar(2, 16)], [J4]),
               _quot(Fraction(-1, 2), 0, [Jbar(1, 2), J(2, 4)], [eta_atom(1)]),
               _quot(Fraction(1, 4), 0, q14, [J4]), ring=RATIONAL)],
        MOCK_PREC))

    # crank mod 4 first stage
    entries.append(_eq(
        "dev-crank-0-4-pre", "D_C(0,4) = (1/2) J_{1,2}Jbar_{1,4}/J4 + (1/4) J_{1,2}J_{1,4}/J4",
        [deviation("crank", 0, 4),
         terms(_quot(Fraction(1, 2), 0, [J(1, 2), Jbar(1, 4)], [J4]),
               _quot(Fraction(1, 4), 0, q14, [J4]), ring=RATIONAL)],
        MOCK_PREC))

    # split rewrites connecting the two shapes (theta only)
    pair1 = terms(_quot(1, 0, [Jbar(4, 8), Jbar(6, 16)], [J4]),
                  _quot(1, 2, [Jbar(0, 8), Jbar(14, 16)], [J4]),
                  _quot(-1, 1, [Jbar(4, 8), Jbar(14, 16)], [J4]),
                  _quot(-1, 1, [Jbar(0, 8), Jbar(6, 16)], [J4]))
    pair2 = terms(_quot(1, 0, [Jbar(4, 8), Jbar(6, 16)], [J4]),
                  _quot(1, 2, [Jbar(0, 8), Jbar(14, 16)], [J4]),
                  _quot(1, 1, [Jbar(4, 8), Jbar(14, 16)], [J4]),
                  _quot(1, 1, [Jbar(0, 8), Jbar(6, 16)], [J4]))
    entries.append(_eq(
        "split-rw-1", "J_{1,2}J_{1,4}/J4 two-square split",
        [terms(_quot(1, 0, q14, [J4])), pair1], THETA_PREC))
    entries.append(_eq(
        "split-rw-2", "Jbar_{1,2}Jbar_{1,4}/J4 two-square split",
        [terms(_quot(1, 0, q14bar, [J4])), pair2], THETA_PREC))
    entries.append(_eq(
        "split-rw-3", "Jbar_{4,8}J_{1,4}/J4 two-square split",
        [terms(_quot(1, 0, [Jbar(4, 8), J(1, 4)], [J4])),
         terms(_quot(1, 0, [Jbar(4, 8), Jbar(6, 16)], [J4]),
               _quot(-1, 1, [Jbar(4, 8), Jbar(14, 16)], [J4]))],
        THETA_PREC))
    entries.append(_eq(
        "split-rw-crank", "J_{1,2}Jbar_{1,4}/J4 two-square split",
        [terms(_quot(1, 0, [J(1, 2), Jbar(1, 4)], [J4])),
         terms(_quot(1, 0, [Jbar(4, 8), Jbar(6, 16)], [J4]),
               _quot(-1, 2, [Jbar(0, 8), Jbar(14, 16)], [J4]),
               _quot(1, 1, [Jbar(4, 8), Jbar(14, 16)], [J4]),
               _quot(-1, 1, [Jbar(0, 8), Jbar(6, 16)], [J4]))],
        THETA_PREC))

    return entries


_D8_THETA = {
    0: ((-9, 7, -3, 5, -1, -1, 5, -3), (1, -1, 0, 0), 1),
    1: ((7, -5, -3, 1, 3, -1, -3, 1), (-1, 1, 1, 1), Fraction(1, 2)),
    2: ((-1, -1, 5, -3, -1, -1, 5, -3), (0, 0, 0, -1), 1),
    3: ((-1, 3, -3, 1, -5, 7, -3, 1), (1, 1, -1, 1), Fraction(1, 2)),
    4: ((-1, -1, 5, -3, 7, -9, -3, 5), (-1, -1, 0, 0), 1),
}

_DC8_THETA = {
    0: ((3, -1, 1, -3, -1, 3, 1, -3), (1, -1, -1, 1)),
    1: ((-1, -1, 1, 1, -1, -1, 1, 1), (0, 1, 0, -1)),
    2: ((-1, 3, -3, 1, 3, -1, -3, 1), None),
    3: ((-1, -1, 1, 1, -1, -1, 1, 1), (0, -1, 0, 1)),
    4: ((3, -1, 1, -3, -1, 3, 1, -3), (-1, 1, 1, -1)),
}


def _mod8_entries():
    entries = []
    J4 = eta_atom(4)
    q14 = [J(1, 2), J(1, 4)]
    q14bar = [Jbar(1, 2), Jbar(1, 4)]

    for a, (theta_coeffs, g_coeffs, g_scale) in _D8_THETA.items():
        legs = [deviation("rank", a, 8)]
        if a in (1, 2, 3):
            legs.append(deviation("rank", 8 - a, 8))
        legs.append(combo(("theta8", theta_coeffs, 1), ("G8", g_coeffs, g_scale)))
        entries.append(_eq(
            f"dev-rank-{a}-8", f"D({a},8) 2-dissection", legs, MOCK_PREC))
    entries.append(_eq(
        "dev-rank-8-sum", "rank deviations mod 8 sum to zero",
        [deviation_sum("rank", 8), zero_series(RATIONAL)], MOCK_PREC))

    # first-stage forms of the rank deviations mod 8
    half = Fraction(1, 2)
    eighth = Fraction(1, 8)
    quarter = Fraction(1, 4)
    extra8 = [eta_atom(8), Jbar(1, 2), J(1, 8), Jbar(3, 8)]
    extra8_den = [(J4, 2), eta_atom(16)]
    pre_forms = {
        0: terms(_const(2), _g(1, 2, 1, 2, 16), _g(-1, 2, -1, 2, 16),
                 _quot(-1, 0, [Jbar(4, 8), Jbar(6, 16)], [J4]),
                 _quot(-1, 0, [Jbar(4, 8), J(6, 16)], [J4]),
                 _quot(quarter, 0, q14bar, [J4]),
                 _quot(eighth, 0, q14, [J4]),
                 _quot(half, 0, extra8, extra8_den), ring=RATIONAL),
        1: terms(_const(-1), _g(-half, 2, 1, 2, 16), _g(half, 2, -1, 2, 16),
                 _g(half, 5, 1, 6, 16), _g(half, 5, -1, 6, 16),
                 _quot(half, 0, [Jbar(4, 8), J(1, 4)], [J4]),
                 _quot(-half, 1, [Jbar(4, 8), J(2, 16)], [J4]),
                 _quot(half, 0, [Jbar(4, 8), J(6, 16)], [J4]),
                 _quot(-eighth, 0, q14, [J4]),
                 _quot(half, 1, [Jbar(1, 2), J(14, 16)], [J4]), ring=RATIONAL),
        2: terms(_g(-1, 5, -1, 6, 16),
                 _quot(1, 1, [Jbar(4, 8), Jbar(14, 16)], [J4]),
                 _quot(-quarter, 0, q14bar, [J4]),
                 _quot(eighth, 0, q14, [J4]), ring=RATIONAL),
        3: terms(_g(half, 2, 1, 2, 16), _g(half, 2, -1, 2, 16),
                 _g(-half, 5, 1, 6, 16), _g(half, 5, -1, 6, 16),
                 _quot(half, 0, [Jbar(4, 8), J(1, 4)], [J4]),
                 _quot(half, 1, [Jbar(4, 8), J(2, 16)], [J4]),
                 _quot(-half, 0, [Jbar(4, 8), J(6, 16)], [J4]),
                 _quot(-eighth, 0, q14, [J4]),
                 _quot(-half, 1, [Jbar(1, 2), J(2, 16)], [J4]), ring=RATIONAL),
        4: terms(_g(-1, 2, 1, 2, 16), _g(-1, 2, -1, 2, 16),
                 _quot(-1, 0, [Jbar(4, 8), Jbar(6, 16)], [J4]),
                 _quot(1, 0, [Jbar(4, 8), J(6, 16)], [J4]),
                 _quot(quarter, 0, q14bar, [J4]),
                 _quot(eighth, 0, q14, [J4]),
                 _quot(-half, 0, extra8, extra8_den), ring=RATIONAL),
    }
    for a, rhs in pre_forms.items():
        entries.append(_eq(
            f"dev-rank-{a}-8-pre", f"D({a},8) via g on base q^16",
            [deviation("rank", a, 8), rhs], MOCK_PREC))

    entries.append(_eq(
        "split-rw-8", "J8 Jbar_{1,2} J_{1,8} Jbar_{3,8}/(J4^2 J16) two-square split",
        [terms(_quot(1, 0, extra8, extra8_den)),
         terms(_quot(1, 0, [Jbar(4, 8), J(6, 16)], [J4]),
               _quot(-1, 2, [Jbar(0, 8), J(14, 16)], [J4]),
               _quot(1, 1, [Jbar(0, 8), J(6, 16)], [J4]),
               _quot(-1, 1, [Jbar(4, 8), J(14, 16)], [J4]))],
        THETA_PREC))

    base_splits = [
        ("base-split-0", "j(-q^6;q^16) split to base q^64",
         atom_series(Jbar(6, 16)),
         terms(_quot(1, 0, [Jbar(28, 64)]), _quot(1, 6, [Jbar(60, 64)]))),
        ("base-split-1", "j(-q^2;q^16) split to base q^64",
         atom_series(Jbar(2, 16)),
         terms(_quot(1, 0, [Jbar(20, 64)]), _quot(1, 2, [Jbar(52, 64)]))),
        ("base-split-2", "j(q^6;q^16) split to base q^64",
         atom_series(J(6, 16)),
         terms(_quot(1, 0, [Jbar(28, 64)]), _quot(-1, 6, [Jbar(60, 64)]))),
        ("base-split-3", "j(q^2;q^16) split to base q^64",
         atom_series(J(2, 16)),
         terms(_quot(1, 0, [Jbar(20, 64)]), _quot(-1, 2, [Jbar(52, 64)]))),
    ]
    for entry_id, label, lhs, rhs in base_splits:
        entries.append(_eq(entry_id, label, [lhs, rhs], THETA_PREC))

    # crank deviations mod 8: 4-dissections
    for a, (theta_coeffs, prime_coeffs) in _DC8_THETA.items():
        legs = [deviation("crank", a, 8)]
        if a in (1, 2, 3):
            legs.append(deviation("crank", 8 - a, 8))
        parts = [("theta8", theta_coeffs, 1)]
        if prime_coeffs is not None:
            parts.append(("theta8prime", prime_coeffs, 1))
        legs.append(combo(*parts))
        entries.append(_eq(
            f"dev-crank-{a}-8", f"D_C({a},8) 4-dissection", legs, MOCK_PREC))
    entries.append(_eq(
        "dev-crank-8-sum", "crank deviations mod 8 sum to zero",
        [deviation_sum("crank", 8), zero_series(RATIONAL)], MOCK_PREC))

    # first-stage crank forms
    entries.append(_eq(
        "dev-crank-0-8-pre", "D_C(0,8) before base splitting",
        [deviation("crank", 0, 8),
         terms(_quot(half, 0, [J(4, 8), J(6, 16)], [J4]),
               _quot(-half, 1, [J(4, 8), J(2, 16)], [J4]),
               _quot(quarter, 0, [J(1, 2), Jbar(1, 4)], [J4]),
               _quot(eighth, 0, q14, [J4]), ring=RATIONAL)],
        MOCK_PREC))
    entries.append(_eq(
        "dev-crank-0-8-mid", "D_C(0,8) 2-dissected",
        [deviation("crank", 0, 8),
         terms(_quot(Fraction(3, 8), 0, [Jbar(4, 8), Jbar(6, 16)], [J4]),
               _quot(-eighth, 2, [Jbar(0, 8), Jbar(14, 16)], [J4]),
               _quot(eighth, 1, [Jbar(4, 8), Jbar(14, 16)], [J4]),
               _quot(Fraction(-3, 8), 1, [Jbar(0, 8), Jbar(6, 16)], [J4]),
               _quot(half, 0, [J(4, 8), J(6, 16)], [J4]),
               _quot(-half, 1, [J(4, 8), J(2, 16)], [J4]), ring=RATIONAL)],
        MOCK_PREC))
    entries.append(_eq(
        "dev-crank-2-8-pre", "D_C(2,8) before 2-dissection",
        [deviation("crank", 2, 8),
         terms(_quot(-quarter, 0, [J(1, 2), Jbar(1, 4)], [J4]),
               _quot(eighth, 0, q14, [J4]), ring=RATIONAL)],
        MOCK_PREC))
    entries.append(_eq(
        "dev-crank-2-8-mid", "D_C(2,8) 2-dissected",
        [deviation("crank", 2, 8),
         terms(_quot(-eighth, 0, [Jbar(4, 8), Jbar(6, 16)], [J4]),
               _quot(Fraction(3, 8), 2, [Jbar(0, 8), Jbar(14, 16)], [J4]),
               _quot(Fraction(-3, 8), 1, [Jbar(4, 8), Jbar(14, 16)], [J4]),
               _quot(eighth, 1, [Jbar(0, 8), Jbar(6, 16)], [J4]), ring=RATIONAL)],
        MOCK_PREC))

    # pairwise sums used by the four-way relations
    entries.append(_eq(
        "dev-crank-8-sum-01", "D_C(0,8) + D_C(1,8)",
        [terms_sum_dev("crank", (0, 1)),
         combo(("theta8", (2, -2, 2, -2, -2, 2, 2, -2), 1),
               ("theta8prime", (1, 0, -1, 0), 1))],
        MOCK_PREC))
    entries.append(_eq(
        "dev-crank-8-sum-34", "D_C(3,8) + D_C(4,8)",
        [terms_sum_dev("crank", (3, 4)),
         combo(("theta8", (2, -2, 2, -2, -2, 2, 2, -2), 1),
               ("theta8prime", (-1, 0, 1, 0), 1))],
        MOCK_PREC))
    entries.append(_eq(
        "dev-rank-8-sum-12", "D(1,8) + D(2,8)",
        [terms_sum_dev("rank", (1, 2)),
         combo(("theta8", (6, -6, 2, -2, 2, -2, 2, -2), 1),
               ("G8", (-1, 1, 1, -1), half))],
        MOCK_PREC))
    entries.append(_eq(
        "dev-rank-8-sum-34", "D(3,8) + D(4,8)",
        [terms_sum_dev("rank", (3, 4)),
         combo(("theta8", (-2, 2, 2, -2, 2, -2, -6, 6), 1),
               ("G8", (-1, -1, -1, 1), half))],
        MOCK_PREC))

    return entries


def terms_sum_dev(stat, residues):
    def build(prec):
        out = Series.zero(RATIONAL, prec)
        for a in residues:
            out = out + partitions.deviation_series(stat, a, 8, prec)
        return out

    return build


# -- group E: rank-crank relations ---------------------------------------------------


def _rank_crank_entries():
    entries = []
    EVEN_PREC = 151  # arguments 2n, 2n+1 up to 301
    QUAD_PREC = 76  # arguments 4n+k up to 307

    def nc(entry_id, label, t, r, legs, prec):
        builders = [counts(parts, t=t, r=r) for parts in legs]
        entries.append(_eq(entry_id, label, builders, prec))

    N, C = "rank", "crank"
    nc("NC-8", "Lewis/Santa-Gadea (8)", 2, 0,
       [[(1, N, 2, 4)], [(1, C, 1, 4)]], EVEN_PREC)
    nc("NC-9", "Lewis/Santa-Gadea (9)", 2, 1,
       [[(1, N, 0, 4)], [(1, C, 1, 4)]], EVEN_PREC)
    nc("NC-10", "Lewis/Santa-Gadea (10)", 4, 0,
       [[(1, C, 1, 8)], [(1, C, 3, 8)], [(1, N, 2, 8)], [(1, N, 4, 8)]], QUAD_PREC)
    nc("NC-11", "Lewis/Santa-Gadea (11)", 4, 1,
       [[(1, C, 0, 8), (1, C, 1, 8)], [(1, C, 3, 8), (1, C, 4, 8)],
        [(1, N, 1, 8), (1, N, 2, 8)], [(1, N, 3, 8), (1, N, 4, 8)]], QUAD_PREC)
    nc("NC-12", "Lewis/Santa-Gadea (12)", 4, 2,
       [[(1, C, 1, 8)], [(1, C, 3, 8)], [(1, N, 0, 8)], [(1, N, 2, 8)]], QUAD_PREC)
    nc("NC-13", "Lewis/Santa-Gadea (13)", 4, 3,
       [[(1, C, 0, 8), (1, C, 1, 8)], [(1, C, 3, 8), (1, C, 4, 8)],
        [(1, N, 0, 8), (1, N, 1, 8)], [(1, N, 2, 8), (1, N, 3, 8)]], QUAD_PREC)
    nc("NC-14", "Lewis/Santa-Gadea (14)", 4, 0,
       [[(1, N, 3, 8)], [(1, C, 2, 8)]], QUAD_PREC)
    nc("NC-15", "Lewis/Santa-Gadea (15)", 4, 1,
       [[(1, N, 3, 8)], [(1, C, 2, 8)]], QUAD_PREC)
    nc("NC-16", "Lewis/Santa-Gadea (16)", 4, 2,
       [[(1, N, 1, 8)], [(1, C, 2, 8)]], QUAD_PREC)
    nc("NC-17", "Lewis/Santa-Gadea (17)", 4, 3,
       [[(1, N, 1, 8)], [(1, C, 2, 8)]], QUAD_PREC)

    entries.append(_eq(
        "rank-diff-mod4-even",
        "N(0,4;2n) - N(2,4;2n) = (-1)^n [N(0,8;2n) - N(4,8;2n)]",
        [counts([(1, N, 0, 4), (-1, N, 2, 4)], t=2, r=0),
         counts([(1, N, 0, 8), (-1, N, 4, 8)], t=2, r=0, twist=True)],
        EVEN_PREC))
    entries.append(_eq(
        "rank-diff-mod4-odd",
        "N(0,4;2n+1) - N(2,4;2n+1) = (-1)^n [N(0,8;2n+1) + 2N(1,8;2n+1) "
        "- 2N(3,8;2n+1) - N(4,8;2n+1)]",
        [counts([(1, N, 0, 4), (-1, N, 2, 4)], t=2, r=1),
         counts([(1, N, 0, 8), (2, N, 1, 8), (-2, N, 3, 8), (-1, N, 4, 8)],
                t=2, r=1, twist=True)],
        EVEN_PREC))

    J4 = eta_atom(4)
    entries.append(_eq(
        "rank-diff-04-gf",
        "sum (N(0,4;n)-N(2,4;n)) q^n = 2 - 2q^2 g(-q^2;q^16) + 2q^5 g(-q^6;q^16) "
        "- J_{2,4}Jbar_{6,16}/J4 + q J_{2,4}Jbar_{2,16}/J4",
        [counts([(1, N, 0, 4), (-1, N, 2, 4)]),
         terms(_const(2), _g(-2, 2, -1, 2, 16), _g(2, 5, -1, 6, 16),
               _quot(-1, 0, [J(2, 4), Jbar(6, 16)], [J4]),
               _quot(1, 1, [J(2, 4), Jbar(2, 16)], [J4]))],
        MOCK_PREC))
    entries.append(_eq(
        "rank-diff-08-gf",
        "sum (N(0,8;n)-N(4,8;n)) q^n = 2 + 2q^2 g(q^2;q^16) "
        "- Jbar_{2,4}J_{6,16}/J4 + q Jbar_{2,4}J_{2,16}/J4",
        [counts([(1, N, 0, 8), (-1, N, 4, 8)]),
         terms(_const(2), _g(2, 2, 1, 2, 16),
               _quot(-1, 0, [Jbar(2, 4), J(6, 16)], [J4]),
               _quot(1, 1, [Jbar(2, 4), J(2, 16)], [J4]))],
        MOCK_PREC))
    entries.append(_eq(
        "rank-diff-18-gf",
        "sum (N(1,8;n)-N(3,8;n)) q^n = -1 - q^2 g(q^2;q^16) + q^5 g(q^6;q^16) "
        "+ Jbar_{2,4}J_{6,16}/J4",
        [counts([(1, N, 1, 8), (-1, N, 3, 8)]),
         terms(_const(-1), _g(-1, 2, 1, 2, 16), _g(1, 5, 1, 6, 16),
               _quot(1, 0, [Jbar(2, 4), J(6, 16)], [J4]))],
        MOCK_PREC))
    entries.append(_eq(
        "rank-diff-04-product",
        "Jbar_{1,4}J_{1,2}/J4 = (J_{2,4}/J4) J_{1,4} "
        "= (J_{2,4}/J4)(Jbar_{6,16} - q Jbar_{14,16})",
        [terms(_quot(1, 0, [Jbar(1, 4), J(1, 2)], [J4])),
         terms(_quot(1, 0, [J(2, 4), J(1, 4)], [J4])),
         terms(_quot(1, 0, [J(2, 4), Jbar(6, 16)], [J4]),
               _quot(-1, 1, [J(2, 4), Jbar(14, 16)], [J4]))],
        THETA_PREC))
    entries.append(_eq(
        "rank-diff-04-prefinal",
        "sum (N(0,4;n)-N(2,4;n)) q^n = 2 - 2q^2 g(-q^2;q^16) "
        "+ 2q^5 g(-q^6;q^16) - J_{1,2}Jbar_{1,4}/J4",
        [counts([(1, N, 0, 4), (-1, N, 2, 4)]),
         terms(_const(2), _g(-2, 2, -1, 2, 16), _g(2, 5, -1, 6, 16),
               _quot(-1, 0, [J(1, 2), Jbar(1, 4)], [J4]))],
        MOCK_PREC))
    # the two Hecke-sum consequences that collapse the mod-8 differences
    entries.append(_eq(
        "mod8-diff-split-even",
        "Jbar_{4,8}J_{6,16} + q^2 Jbar_{0,8}J_{14,16} = Jbar_{2,4}J_{6,16}",
        [terms(_quot(1, 0, [Jbar(4, 8), J(6, 16)]),
               _quot(1, 2, [Jbar(0, 8), J(14, 16)])),
         terms(_quot(1, 0, [Jbar(2, 4), J(6, 16)]))],
        THETA_PREC))
    entries.append(_eq(
        "mod8-diff-split-odd",
        "Jbar_{0,8}J_{6,16} - Jbar_{4,8}J_{14,16} = Jbar_{2,4}J_{2,16}",
        [terms(_quot(1, 0, [Jbar(0, 8), J(6, 16)]),
               _quot(-1, 0, [Jbar(4, 8), J(14, 16)])),
         terms(_quot(1, 0, [Jbar(2, 4), J(2, 16)]))],
        THETA_PREC))

    return entries


# -- group F: support lemmas -----------------------------------------------------------


def _support_entries():
    entries = []

    def g_comb(shift, sign2):
        # q^shift [g(q^a;q^16) + sign2 * g(-q^a;q^16)] with a tied to shift
        a = 2 if shift == 2 else 6

        def build(prec):
            out = theta.mock_g(GSpec(1, a, 16), prec - shift).shift(shift)
            other = theta.mock_g(GSpec(-1, a, 16), prec - shift).shift(shift)
            return out + (other if sign2 == 1 else -other)

        return build

    J32 = eta_atom(32)
    combos = [
        ("g2-plus", "q^2[g(q^2;q^16) + g(-q^2;q^16)]", g_comb(2, 1), 2,
         terms(_g(-2, 18, -1, 20, 64),
               _quot(2, 2, [J32, (Jbar(16, 64), 2)], [Jbar(20, 64), J(4, 32)]))),
        ("g2-minus", "q^2[g(q^2;q^16) - g(-q^2;q^16)]", g_comb(2, -1), 0,
         terms(_const(-2), _g(2, 12, -1, 12, 64),
               _quot(2, 0, [J32, (Jbar(16, 64), 2)], [Jbar(52, 64), J(4, 32)]))),
        ("g6-plus", "q^5[g(q^6;q^16) + g(-q^6;q^16)]", g_comb(5, 1), 1,
         terms(_g(-2, 21, -1, 28, 64),
               _quot(2, 5, [J32, (Jbar(16, 64), 2)], [Jbar(28, 64), J(12, 32)]))),
        ("g6-minus", "q^5[g(q^6;q^16) - g(-q^6;q^16)]", g_comb(5, -1), 3,
         terms(_monomial(-2, -1), _g(2, 3, -1, 4, 64),
               _quot(2, -1, [J32, (Jbar(16, 64), 2)], [Jbar(60, 64), J(12, 32)]))),
    ]
    for entry_id, label, lhs, residue, rhs in combos:
        entries.append(_eq(entry_id, label + " expansion", [lhs, rhs], MOCK_PREC))
        entries.append(IdentityEntry(
            f"{entry_id}-support", label + f" supported on {residue} mod 4",
            "support", MOCK_PREC, (lhs,), support_t=4,
            support_allowed=frozenset([residue])))

    return entries


# -- group G: dissections mod 5 and 7 ----------------------------------------------------


_M5_RANK = {
    0: ((2, 2, -1, 1), 2, (-1, 0), 2),
    1: ((-1, -1, 3, -3), 1, (1, -1), 1),
    2: ((-1, -1, -2, 2), 1, (0, 1), 1),
}
_M5_CRANK = {
    0: ((2, -3, -1, 1), 2),
    1: ((-1, 4, -2, -3), 1),
    2: ((-1, -1, 3, 2), 1),
}
_M7_RANK = {
    0: ((-4, 3, -1, 2, 1, -2), 2, (1, 0, 0), 2),
    1: ((6, -1, 5, -3, 2, 3), 1, (-1, 1, 0), 1),
    2: ((-1, -1, -2, 4, -5, 3), 1, (0, -1, 1), 1),
    3: ((-1, -1, -2, -3, 2, -4), 1, (0, 0, -1), 1),
}
_M7_CRANK = {
    0: ((3, -4, -1, 2, 1, -2), 2),
    1: ((-1, 6, -2, -3, -5, 3), 1),
    2: ((-1, -1, 5, -3, 2, -4), 1),
    3: ((-1, -1, -2, 4, 2, 3), 1),
}


def _mod57_entries():
    entries = []

    for a, (tc, ts, gc, gs) in _M5_RANK.items():
        legs = [deviation("rank", a, 5)]
        if a:
            legs.append(deviation("rank", 5 - a, 5))
        legs.append(combo(("theta5", tc, ts), ("G5", gc, gs)))
        entries.append(_eq(f"dev-rank-{a}-5", f"D({a},5) 5-dissection", legs, MOCK_PREC))
    for a, (tc, ts) in _M5_CRANK.items():
        legs = [deviation("crank", a, 5)]
        if a:
            legs.append(deviation("crank", 5 - a, 5))
        legs.append(combo(("theta5", tc, ts)))
        entries.append(_eq(f"dev-crank-{a}-5", f"D_C({a},5) 5-dissection", legs, MOCK_PREC))
    entries.append(_eq("dev-rank-5-sum", "rank deviations mod 5 sum to zero",
                       [deviation_sum("rank", 5), zero_series(RATIONAL)], MOCK_PREC))
    entries.append(_eq("dev-crank-5-sum", "crank deviations mod 5 sum to zero",
                       [deviation_sum("crank", 5), zero_series(RATIONAL)], MOCK_PREC))

    for a, (tc, ts, gc, gs) in _M7_RANK.items():
        legs = [deviation("rank", a, 7)]
        if a:
            legs.append(deviation("rank", 7 - a, 7))
        legs.append(combo(("theta7", tc, ts), ("G7", gc, gs)))
        entries.append(_eq(f"dev-rank-{a}-7", f"D({a},7) 7-dissection", legs, MOCK_PREC))
    for a, (tc, ts) in _M7_CRANK.items():
        legs = [deviation("crank", a, 7)]
        if a:
            legs.append(deviation("crank", 7 - a, 7))
        legs.append(combo(("theta7", tc, ts)))
        entries.append(_eq(f"dev-crank-{a}-7", f"D_C({a},7) 7-dissection", legs, MOCK_PREC))
    entries.append(_eq("dev-rank-7-sum", "rank deviations mod 7 sum to zero",
                       [deviation_sum("rank", 7), zero_series(RATIONAL)], MOCK_PREC))
    entries.append(_eq("dev-crank-7-sum", "crank deviations mod 7 sum to zero",
                       [deviation_sum("crank", 7), zero_series(RATIONAL)], MOCK_PREC))

    entries.append(_eq(
        "theta-product-5", "J_{1,5}J_{2,5} = J1 J5",
        [terms(_quot(1, 0, [J(1, 5), J(2, 5)])),
         terms(_quot(1, 0, [eta_atom(1), eta_atom(5)]))],
        THETA_PREC))
    entries.append(_eq(
        "theta-product-7", "J_{1,7}J_{2,7}J_{3,7} = J1 J7^2",
        [terms(_quot(1, 0, [J(1, 7), J(2, 7), J(3, 7)])),
         terms(_quot(1, 0, [eta_atom(1), (eta_atom(7), 2)]))],
        THETA_PREC))
    entries.append(_eq(
        "eta1-quintuple",
        "J1 = J25 (J_{10,25}/J_{5,25} - q^2 J_{20,25}/J_{10,25} - q)",
        [atom_series(eta_atom(1)),
         terms(_quot(1, 0, [eta_atom(25), J(10, 25)], [J(5, 25)]),
               _quot(-1, 2, [eta_atom(25), J(20, 25)], [J(10, 25)]),
               _quot(-1, 1, [eta_atom(25)]))],
        THETA_PREC))

    return entries


# -- group H: Lewis's conjectures mod 8 ---------------------------------------------------


def _lewis_entries():
    entries = []
    N, C = "rank", "crank"
    J32 = eta_atom(32)
    J4 = eta_atom(4)
    # common quotient denominator of the 4-dissection, deflated q^4 -> q
    DEN16 = [(J(2, 16), 2), J(4, 16), (J(6, 16), 2), J(8, 16)]

    def dev_diff(prec):
        lhs = partitions.deviation_series(N, 0, 8, prec)
        return lhs - partitions.deviation_series(C, 0, 8, prec)

    entries.append(_eq(
        "lewis-dissection", "4-dissection of D(0,8) - D_C(0,8)",
        [dev_diff,
         terms(_g(2, 12, -1, 12, 64),
               _quot(-2, 8, [(Jbar(4, 64), 2), (Jbar(20, 64), 2), Jbar(28, 64),
                             (eta_atom(64), 2)],
                     [(J(8, 64), 2), J(16, 64), (J(24, 64), 2), J(32, 64)]),
               _quot(2, 1, [(Jbar(12, 64), 2), Jbar(20, 64), (Jbar(28, 64), 2),
                            (eta_atom(64), 2)],
                     [(J(8, 64), 2), J(16, 64), (J(24, 64), 2), J(32, 64)]),
               _quot(-2, 10, [(Jbar(4, 64), 2), Jbar(12, 64), Jbar(20, 64),
                              Jbar(28, 64), (eta_atom(64), 2)],
                     [(J(8, 64), 2), J(16, 64), (J(24, 64), 2), J(32, 64)]),
               _quot(2, 7, [Jbar(4, 64), (Jbar(12, 64), 2), Jbar(20, 64),
                            Jbar(28, 64), (eta_atom(64), 2)],
                     [(J(8, 64), 2), J(16, 64), (J(24, 64), 2), J(32, 64)]),
               ring=RATIONAL)],
        MOCK_PREC))

    entries.append(_eq(
        "lewis-dissection-raw", "D(0,8) - D_C(0,8) before reduction",
        [dev_diff,
         terms(_g(2, 12, -1, 12, 64),
               _quot(2, 0, [J32, (Jbar(16, 64), 2)], [Jbar(52, 64), J(4, 32)]),
               _quot(-2, 0, [Jbar(16, 32), Jbar(28, 64)], [J4]),
               _quot(-1, 4, [Jbar(0, 32), Jbar(28, 64)], [J4]),
               _quot(2, 4, [Jbar(8, 32), Jbar(52, 64)], [J4]),
               _quot(2, 1, [Jbar(8, 32), Jbar(28, 64)], [J4]),
               _quot(-1, 5, [Jbar(0, 32), Jbar(20, 64)], [J4]),
               _quot(-1, 10, [Jbar(0, 32), Jbar(60, 64)], [J4]),
               _quot(1, 7, [Jbar(0, 32), Jbar(52, 64)], [J4]),
               ring=RATIONAL)],
        MOCK_PREC))

    # reduction identities, written in the q^4-deflated variable
    entries.append(_eq(
        "lewis-000", "Lewis reduction identity (000), q^4-deflated",
        [terms(_quot(2, 0, [eta_atom(8), (Jbar(4, 16), 2)], [Jbar(13, 16), J(1, 8)]),
               _quot(-2, 0, [Jbar(4, 8), Jbar(7, 16)], [eta_atom(1)]),
               _quot(-1, 1, [Jbar(0, 8), Jbar(7, 16)], [eta_atom(1)]),
               _quot(2, 1, [Jbar(2, 8), Jbar(13, 16)], [eta_atom(1)])),
         terms(_quot(-2, 2, [(Jbar(1, 16), 2), (Jbar(5, 16), 2), Jbar(7, 16),
                             (eta_atom(16), 2)], DEN16))],
        MOCK_PREC))
    entries.append(_eq(
        "lewis-001", "Lewis reduction identity (001), q^4-deflated",
        [terms(_quot(2, 0, [Jbar(2, 8), Jbar(7, 16)], [eta_atom(1)]),
               _quot(-1, 1, [Jbar(0, 8), Jbar(5, 16)], [eta_atom(1)])),
         terms(_quot(2, 0, [(Jbar(3, 16), 2), Jbar(5, 16), (Jbar(7, 16), 2),
                            (eta_atom(16), 2)], DEN16))],
        MOCK_PREC))
    entries.append(_eq(
        "lewis-002", "Lewis reduction identity (002), q^4-deflated",
        [terms(_quot(1, 2, [Jbar(0, 8), Jbar(15, 16)], [eta_atom(1)])),
         terms(_quot(2, 2, [(Jbar(1, 16), 2), Jbar(3, 16), Jbar(5, 16),
                            Jbar(7, 16), (eta_atom(16), 2)], DEN16))],
        MOCK_PREC))
    entries.append(_eq(
        "lewis-003", "Lewis reduction identity (003), q^4-deflated",
        [terms(_quot(1, 1, [Jbar(0, 8), Jbar(13, 16)], [eta_atom(1)])),
         terms(_quot(2, 1, [Jbar(1, 16), (Jbar(3, 16), 2), Jbar(5, 16),
                            Jbar(7, 16), (eta_atom(16), 2)], DEN16))],
        MOCK_PREC))

    entries.append(_eq(
        "eta1-as-quotient", "J1 as a base-16 quotient, q^4-deflated",
        [atom_series(eta_atom(1)),
         terms(_quot(1, 0, [(J(2, 16), 2), J(4, 16), (J(6, 16), 2), J(8, 16),
                            Jbar(8, 32)],
                     [Jbar(1, 16), Jbar(3, 16), Jbar(5, 16), Jbar(7, 16),
                      (eta_atom(16), 2)]))],
        THETA_PREC))
    entries.append(_eq(
        "lewis-weierstrass-stop", "closing three-term relation, q^4-deflated",
        [terms(_quot(1, 0, [(J(6, 16), 2), J(1, 16), J(9, 16)]),
               _quot(1, 1, [(Jbar(3, 16), 2), Jbar(2, 16), Jbar(10, 16)])),
         terms(_quot(1, 0, [Jbar(3, 16), Jbar(7, 16), Jbar(4, 16), Jbar(12, 16)]))],
        THETA_PREC))
    entries.append(_eq(
        "lewis-001-reduced", "reduced form of (001), q^4-deflated",
        [terms(_quot(1, 0, [Jbar(1, 16), Jbar(2, 8), Jbar(7, 16)]),
               _quot(-1, 1, [Jbar(1, 16), Jbar(5, 16), Jbar(8, 32)])),
         terms(_quot(1, 0, [Jbar(3, 16), Jbar(7, 16), Jbar(8, 32)]))],
        THETA_PREC))
    entries.append(_eq(
        "lewis-000-piece-1", "first regrouped piece of (000), q^4-deflated",
        [terms(_quot(1, 1, [Jbar(8, 32), Jbar(7, 16), J(1, 8), Jbar(3, 16)]),
               _quot(-1, 2, [Jbar(1, 16), Jbar(5, 16), Jbar(8, 32), J(1, 8)])),
         terms(_quot(1, 1, [Jbar(8, 32), (J(1, 8), 2), J(2, 8)]))],
        THETA_PREC))
    entries.append(_eq(
        "lewis-000-piece-2", "second regrouped piece of (000), q^4-deflated",
        [terms(_quot(1, 0, [Jbar(4, 8), J(1, 4), J(2, 8), Jbar(8, 32)]),
               _quot(-1, 1, [Jbar(8, 32), (J(1, 8), 2), J(2, 8)])),
         terms(_quot(1, 0, [(J(1, 8), 2), (J(6, 16), 2)]))],
        THETA_PREC))
    entries.append(_eq(
        "lewis-000-reduced", "reduced vanishing form of (000), q^4-deflated",
        [terms(_quot(1, 0, [J(1, 8), (J(6, 16), 2)]),
               _quot(-1, 0, [Jbar(4, 8), Jbar(7, 16), Jbar(3, 16)]),
               _quot(1, 1, [Jbar(2, 8), Jbar(13, 16), Jbar(3, 16)])),
         zero_series(INTEGER)],
        THETA_PREC))

    entries.append(_eq(
        "lewis-positivity-id",
        "sum (N(0,8;4n+3) - C(0,8;4n+3)) q^n = q Jbar_{0,8} Jbar_{13,16}/J1",
        [counts([(1, N, 0, 8), (-1, C, 0, 8)], t=4, r=3),
         terms(_quot(1, 1, [Jbar(0, 8), Jbar(13, 16)], [eta_atom(1)]))],
        101))

    entries.append(IdentityEntry(
        "lewis-positivity", "q Jbar_{0,8} Jbar_{13,16}/J1 has positive coefficients",
        "positivity", 151,
        (terms(_quot(1, 1, [Jbar(0, 8), Jbar(13, 16)], [eta_atom(1)])),),
        positive_from=1))

    ineqs = [
        ("lewis-ineq-0", "N(0,8;4n+1) >= C(0,8;4n+1) for n >= 2", 1, 2,
         CountSelector(N, 0, 8), CountSelector(C, 0, 8)),
        ("lewis-ineq-1", "C(0,8;4n+2) >= N(0,8;4n+2) for n >= 2", 2, 2,
         CountSelector(C, 0, 8), CountSelector(N, 0, 8)),
        ("lewis-ineq-2", "N(0,8;4n+3) >= C(0,8;4n+3) for n >= 1", 3, 1,
         CountSelector(N, 0, 8), CountSelector(C, 0, 8)),
    ]
    for entry_id, label, r, threshold, lhs, rhs in ineqs:
        entries.append(IdentityEntry(
            entry_id, label, "inequality", 100,
            ineq_lhs=lhs, ineq_rhs=rhs, ineq_t=4, ineq_r=r,
            ineq_threshold=threshold))

    return entries


def build_registry():
    """All entries, in stable registry order."""
    registry = []
    registry.extend(_toolkit_entries())
    registry.extend(_mock_theta_entries())
    registry.extend(_deviation_entries())
    registry.extend(_mod8_entries())
    registry.extend(_rank_crank_entries())
    registry.extend(_support_entries())
    registry.extend(_mod57_entries())
    registry.extend(_lewis_entries())
    ids = [e.id for e in registry]
    if len(ids) != len(set(ids)):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise RuntimeError(f"duplicate registry ids: {dupes}")
    return registry
