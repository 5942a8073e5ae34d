"""Hand-entered reference rows backing the verification suites.

TABLE1 lists every template of cogenus 1 and 2 with its fitted linear form.
Columns per row: edges, delta, ell, mu, eps0, eps1, lam (crossing weights at
gaps 1..ell), olam (same minus the count of exact gap edges), eta (constant
term plus one coefficient per width position), zeta0, zeta1, zeta2.

COEFF_ROWS freezes the universal coefficient table for small cogenus, in the
same string form the library serializes.
"""

from fractions import Fraction as F

TABLE1 = [
    # delta = 1
    dict(edges=[(0, 1, 2)], delta=1, ell=1, mu=4, eps0=0, eps1=0,
         lam=(2,), olam=(1,), eta=(F(-1), F(1)),
         zeta0=F(1), zeta1=F(0), zeta2=F(0)),
    dict(edges=[(0, 2, 1)], delta=1, ell=2, mu=1, eps0=1, eps1=1,
         lam=(1, 1), olam=(1, 1), eta=(F(0), F(1), F(1)),
         zeta0=F(2), zeta1=F(1), zeta2=F(0)),
    # delta = 2
    dict(edges=[(0, 1, 3)], delta=2, ell=1, mu=9, eps0=0, eps1=0,
         lam=(3,), olam=(2,), eta=(F(-2), F(1)),
         zeta0=F(1), zeta1=F(0), zeta2=F(0)),
    dict(edges=[(0, 1, 2), (0, 1, 2)], delta=2, ell=1, mu=16, eps0=0, eps1=0,
         lam=(4,), olam=(2,), eta=(F(5, 2), F(-3, 2)),
         zeta0=F(-3, 2), zeta1=F(0), zeta2=F(0)),
    dict(edges=[(0, 2, 1), (0, 2, 1)], delta=2, ell=2, mu=1, eps0=1, eps1=1,
         lam=(2, 2), olam=(2, 2), eta=(F(1), F(-3, 2), F(-3, 2)),
         zeta0=F(-3), zeta1=F(-3, 2), zeta2=F(0)),
    dict(edges=[(0, 1, 2), (0, 2, 1)], delta=2, ell=2, mu=4, eps0=0, eps1=1,
         lam=(3, 1), olam=(2, 1), eta=(F(2), F(-2), F(-1)),
         zeta0=F(-3), zeta1=F(-1), zeta2=F(0)),
    dict(edges=[(0, 2, 1), (1, 2, 2)], delta=2, ell=2, mu=4, eps0=1, eps1=0,
         lam=(1, 3), olam=(1, 2), eta=(F(2), F(-1), F(-2)),
         zeta0=F(-3), zeta1=F(-2), zeta2=F(0)),
    dict(edges=[(0, 3, 1)], delta=2, ell=3, mu=1, eps0=1, eps1=1,
         lam=(1, 1, 1), olam=(1, 1, 1), eta=(F(0), F(1), F(1), F(1)),
         zeta0=F(3), zeta1=F(3), zeta2=F(1)),
    dict(edges=[(0, 2, 1), (1, 3, 1)], delta=2, ell=3, mu=1, eps0=1, eps1=1,
         lam=(1, 2, 1), olam=(1, 2, 1), eta=(F(0), F(-1), F(-1), F(-1)),
         zeta0=F(-3), zeta1=F(-3), zeta2=F(-1)),
]

COEFF_ROWS = {
    1: {"delta": 1, "A": "3", "L": "-2", "H": "0", "D": "0", "C": "4",
        "Ctilde": "0", "b": ["1"]},
    2: {"delta": 2, "A": "-21", "L": "39/2", "H": "0", "D": "4", "C": "-38",
        "Ctilde": "-36", "b": ["-9/2", "1"]},
    3: {"delta": 3, "A": "230", "L": "-788/3", "H": "0", "D": "-83",
        "C": "1780/3", "Ctilde": "752", "b": ["130/3", "-12", "1"]},
}
