"""Regenerating the three benchmark suites through the library API.

The same runs back the ``coposim table {1,2,3}`` subcommand; this script
shows the raw loops so the protocol is explicit: suite 1 sweeps the
eta-ones family across its threshold, suite 2 places ten random tensors
per shape on both sides of their spectral radius, and suite 3 shows that
nonnegative tensors and one-entry refutations both resolve on the first
cell.
"""

from coposim import (
    DetectorConfig,
    VerdictKind,
    detect,
    eta_shift,
    ones_tensor,
    random_tensor,
    random_tensor_negative_diagonal,
    spectral_radius,
)

print("suite 1: eta-ones family at the default 100-cell budget")
for m, n, etas in ((3, 3, (1.0, 8.99, 9.0, 9.01, 19.0)), (4, 4, (10.0, 64.0, 74.0))):
    for eta in etas:
        verdict = detect(eta_shift(eta, ones_tensor(m, n)))
        print(f"  m={m} n={n} eta={eta:<6} {verdict.kind.value:<15} "
              f"iterations={verdict.iterations}")

print("suite 2: ten seeded tensors per shape, shifted around their radius")
cfg = DetectorConfig(max_iterations=1000)
for m, n in ((3, 3), (3, 4), (4, 3), (4, 4), (6, 3)):
    tensors = [random_tensor(m, n, seed) for seed in range(10)]
    radii = [spectral_radius(B).rho for B in tensors]
    for offset, label in ((-1.0, "rho-1 "), (1.0, "rho+1 "), (10.0, "rho+10")):
        verdicts = [detect(eta_shift(rho + offset, B), cfg)
                    for B, rho in zip(tensors, radii)]
        iterations = [v.iterations for v in verdicts]
        n_yes = sum(v.kind is VerdictKind.COPOSITIVE for v in verdicts)
        n_no = sum(v.kind is VerdictKind.NOT_COPOSITIVE for v in verdicts)
        print(f"  ({m},{n}) eta={label} IT in [{min(iterations)},{max(iterations)}] "
              f"yes={n_yes} no={n_no}")

print("suite 3: random nonnegative tensors and their one-entry refutations")
for m, n in ((3, 3), (3, 4), (4, 3), (4, 4), (6, 3)):
    for label, make in (("A", random_tensor), ("B", random_tensor_negative_diagonal)):
        verdicts = [detect(make(m, n, seed)) for seed in range(10)]
        iterations = {v.iterations for v in verdicts}
        kinds = {v.kind.value for v in verdicts}
        print(f"  ({m},{n}) {label}: iterations={sorted(iterations)} verdicts={sorted(kinds)}")
