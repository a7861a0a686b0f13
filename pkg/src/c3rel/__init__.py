"""Special relativity in the complex vector algebra C3 = C + C^3."""

from .algebra import (
    E1, E2, E3, I, ONE, ZERO, Multivector, bar, cinv, circ, gp, grades, mexp, minverse,
    otimes,
)
from .errors import (
    C3Error, EvaluationFailure, InvalidFrame, NonUnitAxis, NonUnitDirection, NotAField,
    NotInvertible, SpeedNotSubluminal, SuperluminalSample, UnknownKind,
)
from .spacetime import (
    Event, Frame, Rapidity, Versor, active_boost, active_rotate, boost_frame,
    compose_collinear_boosts, galilean_coords, interval, lorentz_coords,
    rapidity_from_speed, speed_from_rapidity, universal_map,
)

__version__ = "0.1.0"
