"""
Game engine for guaranteed scoring games.

Values are interned, so structurally equal games are the same object and
every memo table is keyed on ids.
"""

from .game import (
    Score,
    atoms,
    birthday,
    conjugate,
    difference,
    embed_normal_play,
    find_guarantee_violation,
    hat,
    is_guaranteed,
    is_left_atomic,
    is_number,
    is_purely_atomic,
    is_right_atomic,
    make,
    number,
    projections,
    replace_atoms,
    require_guaranteed,
    sum,
    sum_all,
    to_score,
    translate,
)
from .stops import ls, ls_over, ls_under, pass_stop, rs, rs_over, rs_under, stop_table
from .order import (
    ComparisonCache,
    adjoint,
    compare,
    equivalent,
    ge,
    le,
    left_s_protected,
    linked,
    oracle_ge,
    right_s_protected,
)
from .enumeration import enumerate_guaranteed
from .canonical import (
    applicable_steps,
    apply_step,
    canonical_form,
    find_dominated,
    find_reversible,
    inverse,
    invertible,
    is_reduced,
    is_zugzwang,
    min_waiting_index,
    reduce,
)

__all__ = [
    # Construction
    'Score', 'to_score', 'make', 'number', 'hat', 'conjugate', 'sum', 'sum_all',
    'difference', 'embed_normal_play', 'translate', 'replace_atoms',

    # Structure
    'birthday', 'is_guaranteed', 'find_guarantee_violation', 'require_guaranteed',
    'is_left_atomic', 'is_right_atomic', 'is_purely_atomic', 'is_number',
    'projections', 'atoms',

    # Stops
    'ls', 'rs', 'pass_stop', 'ls_under', 'rs_over', 'ls_over', 'rs_under', 'stop_table',

    # Order
    'ComparisonCache', 'ge', 'le', 'compare', 'equivalent', 'linked', 'adjoint',
    'left_s_protected', 'right_s_protected', 'oracle_ge', 'enumerate_guaranteed',

    # Canonical forms
    'find_dominated', 'find_reversible', 'applicable_steps', 'apply_step',
    'min_waiting_index', 'canonical_form', 'reduce', 'is_reduced',
    'invertible', 'inverse', 'is_zugzwang',
]
