"""Sampling theta identities at random points and reading the verdicts."""

from thetadft import DEFAULT_REGION, lookup, registry, verify, verify_all
from thetadft.identities import printed_variants

print(f"{len(registry())} identities registered\n")

for rep in verify_all(DEFAULT_REGION, samples=20):
    print(f"{rep.name:<11} {rep.verdict:<5} max rel residual {rep.max_rel_residual:.1e}")

# a single report keeps every sample
rep = verify(lookup("NULL"), samples=3)
for s in rep.per_sample:
    print("tau =", s.tau, "residual", f"{s.residual:.1e}")

# the two identities below are registered in their classical form;
# the printed variants are kept for comparison and fail
for d in printed_variants():
    rep = verify(d, samples=10)
    print(f"{d.name:<13} {rep.verdict}  residual {rep.max_rel_residual:.2f}")
    print("   ", d.notes)

# with nu = 2 only the eigenvector-derived identities apply
for rep in verify_all(samples=10, nu=2):
    if rep.verdict != "SKIPPED":
        print(f"nu=2 {rep.name:<6} {rep.verdict}")
