from .game import GameValue, Side
from .normal_play import NormalPlayTree
from .results import (
    ALL_STOP_KINDS,
    LEFT_STOP,
    LEFT_STOP_OVER,
    LEFT_STOP_UNDER,
    RIGHT_STOP,
    RIGHT_STOP_OVER,
    RIGHT_STOP_UNDER,
    OracleResult,
    OrderResult,
    Passer,
    Player,
    Projections,
    ReductionKind,
    ReductionStep,
    Relation,
    StopKind,
)
