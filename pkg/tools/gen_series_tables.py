#!/usr/bin/env python3
"""Regenerates certifier/_series_data.py (exact Maclaurin coefficients).

ln cosh u = sum_{m>=1} a_m u^{2m},  tanh u = sum_{m>=1} t_m u^{2m-1}, with
t_m = 2^{2m} (2^{2m} - 1) B_{2m} / (2m)!  and  a_m = t_m / (2m).

|t_m| = 2 (2^{2m}-1) zeta(2m) / pi^{2m} <= (pi^2/3) (4/pi^2)^m, so the tails
beyond the table are geometric; the bounds asserted here are the ones the
TaylorModel remainder construction relies on.
"""

import math
from fractions import Fraction
from pathlib import Path

import mpmath as mp

M_MAX = 22
OUT = Path(__file__).resolve().parent.parent / "src/rademacher_tails/certifier/_series_data.py"


def main() -> None:
    tanh_coeffs = []
    lnch_coeffs = []
    for m in range(1, M_MAX + 1):
        p, q = mp.bernfrac(2 * m)
        b = Fraction(int(p), int(q))
        t = Fraction(4**m * (4**m - 1)) * b / Fraction(math.factorial(2 * m))
        tanh_coeffs.append(t)
        lnch_coeffs.append(t / (2 * m))

    # y coth y = sum_{k>=0} 4^k B_{2k} y^{2k} / (2k)!;  |c_k| <= 2 zeta(2) / pi^{2k}
    ycoth_coeffs = [Fraction(1)]
    for k in range(1, M_MAX + 1):
        p, q = mp.bernfrac(2 * k)
        b = Fraction(int(p), int(q))
        ycoth_coeffs.append(Fraction(4**k) * b / Fraction(math.factorial(2 * k)))

    ratio = float(4 / mp.pi**2)
    for m, t in enumerate(tanh_coeffs, start=1):
        assert float(abs(t)) <= float(mp.pi**2 / 3) * ratio**m, m
        assert float(abs(lnch_coeffs[m - 1])) <= float(mp.pi**2 / 6) * ratio**m / m, m
        assert float(abs(ycoth_coeffs[m])) <= float(2 * mp.zeta(2)) * float(mp.pi) ** (-2 * m), m
        # signs alternate: t_1 > 0, t_2 < 0, ...
        assert (t > 0) == (m % 2 == 1), m

    lines = [
        '"""Exact Maclaurin coefficients (generated by tools/gen_series_tables.py)."""',
        "",
        "from fractions import Fraction",
        "",
        f"M_MAX = {M_MAX}",
        "",
        "# tanh u = sum t_m u^(2m-1); |t_m| <= (pi^2/3) (4/pi^2)^m",
        "TANH_COEFFS = [",
    ]
    for t in tanh_coeffs:
        lines.append(f"    Fraction({t.numerator}, {t.denominator}),")
    lines.append("]")
    lines.append("")
    lines.append("# ln cosh u = sum a_m u^(2m); a_m = t_m / (2m)")
    lines.append("LNCH_COEFFS = [")
    for a in lnch_coeffs:
        lines.append(f"    Fraction({a.numerator}, {a.denominator}),")
    lines.append("]")
    lines.append("")
    lines.append("# y coth y = sum c_k y^(2k), c_0 = 1; |c_k| <= 2 zeta(2) pi^(-2k)")
    lines.append("YCOTH_COEFFS = [")
    for c in ycoth_coeffs:
        lines.append(f"    Fraction({c.numerator}, {c.denominator}),")
    lines.append("]")
    lines.append("")
    OUT.write_text("\n".join(lines))
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
