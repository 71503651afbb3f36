"""
Belief tables for every attack combination
==========================================

Trains the canonical model and prints the posterior over the analyst's
knowledge classes for each subset of attacks an adversary might run.
"""

from airavata import domain

model = domain.canonical_model()

# Enumerate subsets in corpus order: hardware_sc is the most significant
# bit, so the no-attack row comes first and the all-attack row last.
print(f"{'attacks':<55}  {'low':>7} {'medium':>7} {'high':>7}")
for index in range(1, 2 ** len(domain.ATTACKS)):
    bits = {
        attack: (index >> (len(domain.ATTACKS) - 1 - i)) & 1
        for i, attack in enumerate(domain.ATTACKS)
    }
    combo = [a for a in domain.ATTACKS if bits[a]]
    posterior = domain.evaluate_combination(model, combo)
    low, medium, high = posterior.table
    label = "+".join(combo)
    print(f"{label:<55}  {low:>7.4f} {medium:>7.4f} {high:>7.4f}")

# Combinations that reveal the same attribute set get identical rows:
# ml_vs_ml alone already reveals everything hardware_sc can add, so
# hardware_sc+ml_vs_ml repeats the ml_vs_ml row exactly.
same = domain.evaluate_combination(model, ["ml_vs_ml"])
also = domain.evaluate_combination(model, ["hardware_sc", "ml_vs_ml"])
print()
print("ml_vs_ml row reused for hardware_sc+ml_vs_ml:", same.table == also.table)
