"""Printed relations for the figure-eight knot, kept verbatim as text.

The strings are parsed at use time so the source of every coefficient stays
inspectable.  ``RECURRENCE_TEXT`` is exactly as printed, including the
constant exponent ``t^{-10-4}`` in the ``y_{n-1}`` coefficient;
:data:`RECURRENCE_FIXES` lists the two corrections used by default: that
exponent should read ``-10n-4``, and the ``t^{2n+6}`` term of the ``y_{n-2}``
coefficient carries a minus sign.  Both are forced by rederiving the
recurrence from the ideal element, and the corrected recurrence annihilates
the colored Jones sequence while the literal text does not.
"""

from __future__ import annotations

# peripheral ideal element, Reshetikhin-Turaev version
IDEAL_RT_TEXT = r"""
t^{-6}(2,3)_T-t^6(2,-1)_T-t^3(1,7)_T+t(1,5)_T+(t^{11}-t^3+t^{-1}+t^{-5})(1,3)_T
 +(-t^9+t^5+t^{-7})(1,1)_T+(t^{11}-2t^7-t^3+t^{-1}-t^{-9})(1,-1)_T
 +(-t^{13}-t)(1,-3)_T+t^{-1}(1,-5)_T+t^8(0,7)_T+(-2t^8+t^4-t^{-4})(0,5)_T
 +(-t^{12}+t^8-t^4-1+t^{-4})(0,3)_T+(t^{12}-t^8+1+t^{-4})(0,1)_T
"""

# peripheral ideal element, Kauffman bracket version
IDEAL_KAUFFMAN_TEXT = r"""
t^{-6}(2,3)_T-t^6(2,-1)_T+t^3(1,7)_T-t(1,5)_T+(-t^{11}+t^3-t^{-1}-t^{-5})(1,3)_T
 +(t^9-t^5-t^{-7})(1,1)_T+(-t^{11}+2t^7+t^3-t^{-1}+t^{-9})(1,-1)_T
 +(t^{13}+t)(1,-3)_T-t^{-1}(1,-5)_T+t^8(0,7)_T+(-2t^8+t^4-t^{-4})(0,5)_T
 +(-t^{12}+t^8-t^4-1+t^{-4})(0,3)_T+(t^{12}-t^8+1+t^{-4})(0,1)_T
"""

# recurrence for y_n = J(K_8, n)
RECURRENCE_TEXT = r"""
(t^{6n+6}-t^{-2n+2}) y_{n+2}+(-t^{14n+24}+t^{10n+16}+t^{6n+20}-t^{6n+12}+t^{6n+8}
+t^{6n+4}
-t^{2n+12}+t^{2n+8}
+t^{2n-4}+t^{-2n+8}-2t^{-2n+4}-t^{-2n}+t^{-2n-4}
-t^{-2n-12}-t^{-6n+4}-t^{-6n-8}+t^{-10n-16})y_{n+1}
+(t^{14n+22}-2t^{10n+18}+t^{10n+14}
-t^{10n+6}-t^{6n+18}+t^{6n+14}-t^{6n+10}-t^{6n+6}+t^{6n+2}
+t^{2n+14}
-t^{2n+10}+t^{2n+2}+t^{2n-2}+t^{-2n+10}-t^{-2n+6}+t^{-2n-2}+t^{-2n-6}-t^{-6n+6}
+t^{-6n+2}-t^{-6n-2}-t^{-6n-6}+t^{-6n-10}-2t^{-10n-2}+t^{-10n-6}-t^{-10n-14}
+t^{-14n-6})y_n
+(t^{10n+4}-t^{6n+16}-t^{6n+4}+t^{2n+12}-2t^{2n+8}-t^{2n+4}+t^{2n}-t^{2n-8}
-t^{-2n+8}+t^{-2n+4}
+t^{-2n-8}+t^{-6n+8}-t^{-6n}+t^{-6n-4}+t^{-6n-8}+t^{-10-4}
-t^{-14n-4})y_{n-1}
+(t^{2n+6}+t^{-6n-6})y_{n-2}=0
"""

# (shift, printed (alpha, beta), corrected (alpha, beta), sign factor),
# applied by printed_recurrence(fixed=True)
RECURRENCE_FIXES = [
    (-1, (0, -14), (-10, -4), 1),
    (-2, (2, 6), (2, 6), -1),
]

# figure-eight knot as a closed 3-braid with writhe 0
FIGURE_EIGHT_BRAID = {"strands": 3, "word": [1, -2, 1, -2]}
# right-handed trefoil stabilized twice negatively: 5 strands, writhe 3 - 3 = 0
TREFOIL_ZERO_WRITHE_BRAID = {"strands": 5, "word": [1, 1, 1, -2, -3, -4]}
TREFOIL_BRAID = {"strands": 2, "word": [1, 1, 1]}


def ideal_element(theory):
    from .skein_modules import Theory
    from .torus import TorusElement

    theory = Theory.coerce(theory)
    return TorusElement.parse(IDEAL_RT_TEXT if theory is Theory.RT else IDEAL_KAUFFMAN_TEXT)


def printed_recurrence(fixed: bool = True):
    from .recurrence import parse_recurrence

    rec = parse_recurrence(RECURRENCE_TEXT)
    if fixed:
        for k, wrong, right, sign in RECURRENCE_FIXES:
            c = rec.terms[k][wrong]
            rec.add(k, *wrong, -c)
            rec.add(k, *right, sign * c)
    return rec
