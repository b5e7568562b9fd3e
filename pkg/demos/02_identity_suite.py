"""
Checking the identities
=======================

Each identity is evaluated on both sides with exact rationals for a range of
indices.  A failure would print the exact difference.
"""

from catpadic.identities import IDENTITY_IDS, verify

# %%
# Run every identity up to n = 20.
for ident in IDENTITY_IDS:
    report = verify(ident, 20)
    status = "PASS" if report.passed else "FAIL"
    print(f"{ident:<4} {status}  n = {report.start}..{report.max_n}  ({len(report.outcomes)} checks)")

# %%
# One identity in detail: Catalan numbers recovered from lambda = 1/2 Changhee
# numbers.
for o in verify("T2", 6).outcomes:
    print(f"n={o.n}:  C_n = {o.lhs}   (-4)^n Ch_n / n! = {o.rhs}")

# %%
# The Euler polynomial identity holds for any nonzero lambda, here checked as
# a polynomial identity in x.
report = verify("E5", 4, {"lambdas": ["1/2", "3", "-2/5"]})
for o in report.outcomes[-3:]:
    print(f"lambda={o.param} m={o.n}:  E_m(x) coefficients {[str(c) for c in o.lhs.coeffs]}")
print("E5 passes:", report.passed)
