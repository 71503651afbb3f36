import math

import numpy as np
import pytest

from airavata.errors import ContractError, UnknownVariableError
from airavata.factors import Variable
from airavata.infogain import entropy, infogain_report, mutual_information
from airavata.learning import Dataset
from airavata import domain

X = Variable("X", ("no", "yes"))
Y = Variable("Y", ("no", "yes"))


class TestEntropy:
    def test_fair_coin_is_one_bit(self):
        assert entropy([0.5, 0.5]) == pytest.approx(1.0)

    def test_certainty_is_zero(self):
        assert entropy([1.0, 0.0]) == 0.0

    def test_uniform_three_way(self):
        assert entropy([1 / 3] * 3) == pytest.approx(math.log2(3))

    def test_rejects_negative_mass(self):
        with pytest.raises(ContractError):
            entropy([1.2, -0.2])

    def test_rejects_unnormalized(self):
        with pytest.raises(ContractError):
            entropy([0.5, 0.4])

    def test_corpus_knowledge_entropy(self, corpus):
        counts = np.bincount(corpus.column("knowledge"), minlength=3)
        h = entropy(counts / counts.sum())
        assert h == pytest.approx(1.3356, abs=0.0005)


class TestMutualInformation:
    def test_independent_columns_are_zero(self):
        data = Dataset([X, Y], [(0, 0), (0, 1), (1, 0), (1, 1)])
        assert mutual_information(data, "X", "Y") == pytest.approx(0.0, abs=1e-12)

    def test_copied_column_gives_full_entropy(self):
        data = Dataset([X, Y], [(0, 0), (1, 1), (1, 1), (0, 0)])
        assert mutual_information(data, "X", "Y") == pytest.approx(1.0)

    def test_self_information_is_entropy(self, corpus):
        counts = np.bincount(corpus.column("depth"), minlength=2)
        h = entropy(counts / counts.sum())
        assert mutual_information(corpus, "depth", "depth") == pytest.approx(h, abs=1e-12)

    def test_symmetry_on_corpus(self, corpus):
        a = mutual_information(corpus, "depth", "knowledge")
        b = mutual_information(corpus, "knowledge", "depth")
        assert a == pytest.approx(b, abs=1e-12)

    def test_corpus_depth_value(self, corpus):
        assert mutual_information(corpus, "depth", "knowledge") == pytest.approx(
            0.2512, abs=0.002
        )

    def test_corpus_activation_value(self, corpus):
        assert mutual_information(corpus, "activation", "knowledge") == pytest.approx(
            0.3721, abs=0.002
        )

    def test_unknown_variable(self, corpus):
        with pytest.raises(UnknownVariableError):
            mutual_information(corpus, "depth", "missing")

    def test_empty_dataset_rejected(self):
        with pytest.raises(ContractError):
            mutual_information(Dataset([X, Y], []), "X", "Y")

    def test_single_row_dataset_is_zero(self):
        data = Dataset([X, Y], [(1, 0)])
        assert mutual_information(data, "X", "Y") == 0.0


class TestReport:
    def test_order_and_exclusions(self, corpus):
        report = infogain_report(corpus, "knowledge", exclude=domain.ATTACKS)
        assert [name for name, _ in report] == [
            "obj_hyper_param",
            "activation",
            "nodes",
            "layer_type",
            "depth",
            "parameters",
        ]

    def test_tie_broken_by_name(self, corpus):
        report = dict(infogain_report(corpus, "knowledge", exclude=domain.ATTACKS))
        assert report["activation"] == pytest.approx(report["nodes"], abs=1e-12)

    def test_values_sorted_descending(self, corpus):
        bits = [b for _, b in infogain_report(corpus, "knowledge")]
        assert bits == sorted(bits, reverse=True)

    def test_target_not_in_report(self, corpus):
        names = [name for name, _ in infogain_report(corpus, "knowledge")]
        assert "knowledge" not in names


def random_joint_dataset(rng):
    cx = int(rng.integers(2, 4))
    cy = int(rng.integers(2, 4))
    vx = Variable("X", tuple(f"x{i}" for i in range(cx)))
    vy = Variable("Y", tuple(f"y{i}" for i in range(cy)))
    n = int(rng.integers(1, 40))
    rows = [(int(rng.integers(cx)), int(rng.integers(cy))) for _ in range(n)]
    return Dataset([vx, vy], rows)


class TestRandomizedInvariants:
    @pytest.mark.acceptance("property-suites")
    def test_symmetry_nonnegativity_self_entropy_1000(self):
        rng = np.random.default_rng(59)
        for _ in range(1000):
            data = random_joint_dataset(rng)
            xy = mutual_information(data, "X", "Y")
            yx = mutual_information(data, "Y", "X")
            assert xy >= 0.0
            assert xy == pytest.approx(yx, abs=1e-12)
            counts = np.bincount(data.column("X"))
            h = entropy(counts / counts.sum())
            assert mutual_information(data, "X", "X") == pytest.approx(h, abs=1e-12)

    def test_bounded_by_marginal_entropies(self):
        rng = np.random.default_rng(61)
        for _ in range(300):
            data = random_joint_dataset(rng)
            xy = mutual_information(data, "X", "Y")
            hx = entropy(np.bincount(data.column("X")) / len(data.rows))
            hy = entropy(np.bincount(data.column("Y")) / len(data.rows))
            assert xy <= min(hx, hy) + 1e-12
