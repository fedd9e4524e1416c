"""SLOCC classes of symmetric states, labelled by spinor degeneracies."""

from wmonogamy import enumerate_slocc_configs, partition_count

# With r distinct spinors among N, the classes are partitions of N into r parts.
for n in (3, 4, 6):
    for r in range(1, n + 1):
        configs = enumerate_slocc_configs(n, r)
        print(f"N={n} r={r}: {', '.join(str(c) for c in configs)}")

# The counts follow p(N, r) = p(N-1, r-1) + p(N-r, r).
print([partition_count(10, r) for r in range(1, 11)])
