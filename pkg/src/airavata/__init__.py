"""Exact discrete Bayesian-network engine for model-extraction threat analysis."""

__version__ = "0.1.0"

from .errors import (
    AiravataError,
    ContractError,
    InconsistentEvidenceError,
    JointSizeError,
    NetworkFormatError,
    SchemaError,
    ScopeConflictError,
    UnknownStateError,
    UnknownVariableError,
    ZeroMassError,
)
from .factors import (
    Factor,
    Variable,
    factor_marginalize,
    factor_normalize,
    factor_product,
    factor_reduce,
)
from .network import (
    Cpd,
    Network,
    Skeleton,
    Violation,
    network_joint,
    network_load,
    network_save,
    network_validate,
)
from .learning import (
    Dataset,
    DirichletPrior,
    EquivalentSamplePrior,
    FitReport,
    dataset_from_csv,
    dataset_to_csv,
    fit_bayesian,
    fit_mle,
)
from .inference import (
    Posterior,
    brute_force_marginal,
    elimination_order,
    query_marginal,
)
from .infogain import entropy, infogain_report, mutual_information

__all__ = [
    "AiravataError",
    "ContractError",
    "Cpd",
    "Dataset",
    "DirichletPrior",
    "EquivalentSamplePrior",
    "Factor",
    "FitReport",
    "InconsistentEvidenceError",
    "JointSizeError",
    "Network",
    "NetworkFormatError",
    "Posterior",
    "SchemaError",
    "ScopeConflictError",
    "Skeleton",
    "UnknownStateError",
    "UnknownVariableError",
    "Variable",
    "Violation",
    "ZeroMassError",
    "brute_force_marginal",
    "dataset_from_csv",
    "dataset_to_csv",
    "elimination_order",
    "entropy",
    "factor_marginalize",
    "factor_normalize",
    "factor_product",
    "factor_reduce",
    "fit_bayesian",
    "fit_mle",
    "infogain_report",
    "mutual_information",
    "network_joint",
    "network_load",
    "network_save",
    "network_validate",
    "query_marginal",
]
