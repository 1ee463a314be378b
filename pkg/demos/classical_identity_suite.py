"""The curated identity suite in one run.

Eight classical consequences of the theta relations, from Jacobi's
quartic identity to the ternary constants identity, each checked at
freshly sampled periods.
"""

from thetarel import run_suite

report = run_suite(tau_samples=10)
for case in report["cases"]:
    print(f"  {case['name']:24s} max rel error {case['max_rel_error']:.3e}  "
          f"{case['verdict']}")
print()
print("suite verdict:", report["verdict"])
