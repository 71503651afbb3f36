import numpy as np
import pytest

from airavata.errors import (
    ContractError,
    InconsistentEvidenceError,
    UnknownStateError,
    UnknownVariableError,
)
from airavata.factors import Variable
from airavata.inference import (
    HEURISTICS,
    brute_force_marginal,
    elimination_order,
    query_marginal,
)
from airavata.learning import Dataset, fit_bayesian
from airavata.network import Cpd, Network, Skeleton
from airavata import domain

A = Variable("A", ("no", "yes"))
B = Variable("B", ("no", "yes"))
C = Variable("C", ("no", "yes"))


def chain_network():
    """A -> B with P(A=yes)=0.4, P(B=yes|A) = 0.2/0.55."""
    return Network(
        [A, B],
        [("A", "B")],
        [
            Cpd(A, (), [0.6, 0.4]),
            Cpd(B, (A,), [[0.8, 0.2], [0.45, 0.55]]),
        ],
    )


class TestSmallExamples:
    def test_chain_marginal(self):
        post = query_marginal(chain_network(), ["B"])
        # P(B=no) = 0.6*0.8 + 0.4*0.45 = 0.66
        np.testing.assert_allclose(post.probabilities, [0.66, 0.34])
        assert post.variable.name == "B"

    def test_chain_with_evidence(self):
        post = query_marginal(chain_network(), ["B"], {"A": "yes"})
        np.testing.assert_allclose(post.probabilities, [0.45, 0.55])

    def test_deterministic_cpd_propagates(self):
        net = Network(
            [A, B],
            [("A", "B")],
            [
                Cpd(A, (), [0.0, 1.0]),
                Cpd(B, (A,), [[1.0, 0.0], [0.0, 1.0]]),
            ],
        )
        post = query_marginal(net, ["B"])
        np.testing.assert_allclose(post.probabilities, [0.0, 1.0])

    def test_joint_target_in_declaration_order(self):
        post = query_marginal(chain_network(), ["B", "A"])
        assert tuple(v.name for v in post.variables) == ("A", "B")
        table = np.asarray(post.table)
        np.testing.assert_allclose(table, [0.48, 0.12, 0.18, 0.22])

    def test_posterior_accessors(self):
        post = query_marginal(chain_network(), ["B"])
        assert post.probability("no") == pytest.approx(0.66)
        assert post.argmax() == "no"
        assert post.as_mapping() == {"no": post.table[0], "yes": post.table[1]}
        with pytest.raises(UnknownStateError):
            post.probability("maybe")

    def test_zero_mass_evidence_rejected(self):
        net = Network(
            [A, B],
            [("A", "B")],
            [
                Cpd(A, (), [1.0, 0.0]),
                Cpd(B, (A,), [[1.0, 0.0], [0.0, 1.0]]),
            ],
        )
        with pytest.raises(InconsistentEvidenceError):
            query_marginal(net, ["B"], {"A": "yes"})

    def test_query_validation(self):
        net = chain_network()
        with pytest.raises(ContractError):
            query_marginal(net, [])
        with pytest.raises(ContractError):
            query_marginal(net, ["B", "B"])
        with pytest.raises(ContractError, match="target"):
            query_marginal(net, ["B"], {"B": "no"})
        with pytest.raises(UnknownVariableError):
            query_marginal(net, ["Q"])
        with pytest.raises(UnknownStateError):
            query_marginal(net, ["B"], {"A": "definitely"})

    def test_invalid_network_rejected(self):
        broken = Network([A, B], [("A", "B")], [Cpd(A, (), [0.6, 0.4])])
        with pytest.raises(ContractError, match="missing-cpd"):
            query_marginal(broken, ["B"])


class TestEliminationOrder:
    def test_chain_order(self):
        net = Network(
            [A, B, C],
            [("A", "B"), ("B", "C")],
            [
                Cpd(A, (), [0.5, 0.5]),
                Cpd(B, (A,), [[0.5, 0.5]] * 2),
                Cpd(C, (B,), [[0.5, 0.5]] * 2),
            ],
        )
        assert elimination_order(net, ["C"]) == ["A", "B"]

    def test_all_targets_leaves_nothing(self):
        assert elimination_order(chain_network(), ["A", "B"]) == []

    def test_evidence_variables_not_eliminated(self):
        net = Network(
            [A, B, C],
            [("A", "B"), ("B", "C")],
            [
                Cpd(A, (), [0.5, 0.5]),
                Cpd(B, (A,), [[0.5, 0.5]] * 2),
                Cpd(C, (B,), [[0.5, 0.5]] * 2),
            ],
        )
        assert elimination_order(net, ["C"], {"A": "no"}) == ["B"]

    def test_canonical_query_eliminates_attributes_only(self, canonical_model):
        order = elimination_order(
            canonical_model, ["knowledge"], domain.attack_evidence(["power_sc"])
        )
        assert sorted(order) == sorted(domain.ATTRIBUTES)

    def test_unknown_heuristic_rejected(self):
        with pytest.raises(ContractError, match="heuristic"):
            elimination_order(chain_network(), ["B"], heuristic="random")

    def test_heuristics_agree_on_results(self, canonical_model):
        evidence = domain.attack_evidence(["hardware_sc", "power_sc"])
        results = [
            query_marginal(canonical_model, ["knowledge"], evidence, heuristic=h).table
            for h in HEURISTICS
        ]
        np.testing.assert_allclose(results[0], results[1], atol=1e-12)


def random_network(rng, max_vars=6):
    n = int(rng.integers(2, max_vars + 1))
    variables = [Variable(f"v{i}", ("f", "t")) for i in range(n)]
    edges = []
    for j in range(1, n):
        for i in range(j):
            if rng.random() < 0.4:
                edges.append((f"v{i}", f"v{j}"))
    skeleton = Skeleton(variables, edges)
    rows = [tuple(int(rng.integers(2)) for _ in range(n)) for _ in range(40)]
    return fit_bayesian(skeleton, Dataset(variables, rows), float(rng.uniform(0.1, 2.0)))


class TestAgainstBruteForce:
    def test_random_networks_match(self):
        rng = np.random.default_rng(47)
        for _ in range(60):
            net = random_network(rng)
            names = [v.name for v in net.skeleton.variables]
            rng.shuffle(names)
            n_ev = int(rng.integers(0, len(names)))
            evidence = {
                name: ("f", "t")[int(rng.integers(2))] for name in names[:n_ev]
            }
            targets = [names[n_ev]]
            fast = query_marginal(net, targets, evidence)
            slow = brute_force_marginal(net, targets, evidence)
            np.testing.assert_allclose(fast.table, slow.table, atol=1e-9)

    def test_multi_target_matches(self):
        rng = np.random.default_rng(53)
        for _ in range(30):
            net = random_network(rng)
            names = [v.name for v in net.skeleton.variables]
            targets = list(rng.choice(names, size=2, replace=False))
            fast = query_marginal(net, targets)
            slow = brute_force_marginal(net, targets)
            assert fast.variables == slow.variables
            np.testing.assert_allclose(fast.table, slow.table, atol=1e-9)

    def test_all_canonical_evidence_combinations(self, canonical_model):
        for mask in range(32):
            attacks = [a for i, a in enumerate(domain.ATTACKS) if (mask >> i) & 1]
            evidence = domain.attack_evidence(attacks)
            fast = query_marginal(canonical_model, ["knowledge"], evidence)
            slow = brute_force_marginal(canonical_model, ["knowledge"], evidence)
            np.testing.assert_allclose(fast.table, slow.table, atol=1e-9)

    def test_brute_force_zero_mass_matches(self):
        net = Network(
            [A, B],
            [("A", "B")],
            [
                Cpd(A, (), [1.0, 0.0]),
                Cpd(B, (A,), [[1.0, 0.0], [0.0, 1.0]]),
            ],
        )
        with pytest.raises(InconsistentEvidenceError):
            brute_force_marginal(net, ["B"], {"A": "yes"})
