"""
What should each adversary run first
====================================

Ranks attack subsets per adversary profile, then reruns the physical
adversary's ranking under a flat per-cell prior to show how much the
smoothing choice moves the small-corpus beliefs.
"""

from airavata import domain
from airavata.learning import DirichletPrior

model = domain.canonical_model()

profiles = {
    1: "remote API access only",
    2: "physical access, no API",
    3: "both",
}

for adversary, blurb in profiles.items():
    ranked = domain.rank_combinations(model, adversary, "high")
    print(f"adversary {adversary} ({blurb}); best first:")
    for r in ranked[:3]:
        print(f"  {'+'.join(r.attacks):<45} belief(high) = {r.belief:.4f}")
    print()

# Ties prefer fewer attacks: for the remote adversary, adding timing_sc
# to ml_vs_ml+steal_function reveals nothing new, so the pair wins.
remote = domain.rank_combinations(model, 1, "high")
print("remote top two beliefs equal:", remote[0].belief == remote[1].belief)
print()

# Under a flat add-one prior the physical adversary's combination no
# longer beats its single attacks; the default prior spreads much less
# pseudo-mass over the knowledge CPD's 192 cells.
flat = domain.canonical_model(prior=DirichletPrior(1.0))
for m, label in ((model, "default prior"), (flat, "per-cell alpha=1")):
    ranked = domain.rank_combinations(m, 2, "high")
    first = "+".join(ranked[0].attacks)
    print(f"{label:<18} best physical combination: {first}")
