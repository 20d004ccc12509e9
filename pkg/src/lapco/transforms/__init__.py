from .history import ReductionTrail
from .operations import (
    XiHypothesis,
    attachment_hub,
    eta,
    kappa,
    merge_attachments,
    path_balance,
    path_shift,
    xi,
    xi_hypothesis,
)
from .receipt import TransformError, TransformKind, TransformReceipt
from .reduction import balance_reduce, is_reduced, reduced_graph
