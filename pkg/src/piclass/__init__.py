"""Class-size frequency functions of finite permutation groups.

The central object is the table ``n -> number of conjugacy classes of
pi-elements of size n``.  From it alone one can decide whether a group has a
hypercentral Hall pi-subgroup; :mod:`piclass.verify` checks that decision (and
its relatives) against element-level structure on a corpus of small groups.
"""

from piclass.arith import PrimeSet, factorize, is_p_number, part
from piclass.errors import (
    CapExceeded,
    NotADivisor,
    NotASubgroup,
    ParseError,
    PiclassError,
    QNotDividing,
    QNotInPi,
    UnknownName,
)
from piclass.group import (
    Permutation,
    PermGroup,
    direct_product,
    element_order,
    enumerate_group,
    named_group,
)
from piclass.pifreq import (
    FrequencyTable,
    SigmaSum,
    decide_hypercentral_hall_pi,
    decide_nilpotent_from_multiset,
    frequency_table,
    hypercentre_q_part,
    propc_hypothesis_check,
    s_sigma,
    sylow_hypercentral_criterion,
    theorem_c_check,
)

__version__ = "0.1.0"
SCHEMA = "piclass/1"

__all__ = [
    "SCHEMA",
    "CapExceeded",
    "FrequencyTable",
    "NotADivisor",
    "NotASubgroup",
    "ParseError",
    "PermGroup",
    "Permutation",
    "PiclassError",
    "PrimeSet",
    "QNotDividing",
    "QNotInPi",
    "SigmaSum",
    "UnknownName",
    "decide_hypercentral_hall_pi",
    "decide_nilpotent_from_multiset",
    "direct_product",
    "element_order",
    "enumerate_group",
    "factorize",
    "frequency_table",
    "hypercentre_q_part",
    "is_p_number",
    "named_group",
    "part",
    "propc_hypothesis_check",
    "s_sigma",
    "sylow_hypercentral_criterion",
    "theorem_c_check",
]
