"""Conditioning 7 biased bits through a Hamming [7,4] generator matrix.

Compresses a biased i.i.d. source to 4 bits and compares the exact
distance from uniform against the bound ladder: codeword sum, complete
weight enumerator, weight distribution, minimum distance. The sharper
bounds use more of the code's structure.
"""

from pathlib import Path

from rngbound import (
    SourceModel,
    analyze,
    complete_weight_enumerator,
    minimum_distance,
    parse_code,
    weight_distribution,
)

code = parse_code((Path(__file__).parent / "data" / "hamming74.code").read_text())
print(f"code: p={code.p} n={code.n} k={code.k}  d={minimum_distance(code)}")

A = weight_distribution(code)
print("weight distribution:", {l: int(a) for l, a in enumerate(A) if a})
print("compositions (zeros, ones) -> count:", complete_weight_enumerator(code))

print(f"\n{'bias':>6}  {'exact':>12}  {'cw sum':>12}  {'cwe':>12}  {'weights':>12}  {'min dist':>12}")
for eps in (0.05, 0.1, 0.25, 0.5, 0.75):
    report = analyze(code, SourceModel.from_bias(eps, code.n))
    vals = [e.value for e in report.entries]
    print(f"{eps:>6}  {report.exact_delta:>12.8f}  " + "  ".join(f"{v:>12.8f}" for v in vals))

print("""
Reading the table: every column bounds the exact distance, and each step
to the right discards structure (full spectrum -> compositions -> weights
-> minimum distance alone), so the bounds only get looser. At bias 0.25
the minimum-distance bound 15 eps^3 = 0.234375 is ~1.8x the exact value,
while the weight-distribution bound stays within ~7%.
""")
