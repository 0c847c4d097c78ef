"""Exact toolkit for quartic modified dispersion relations.

The heavy lifting happens in the compiled ``_qmdr`` extension; this package
re-exports its public surface.
"""

from ._qmdr import (  # noqa: F401
    Dispersion,
    QmdrDomainError,
    a4,
    ell_star_squared,
    energy,
    group_velocity,
    immirzi_from_flux,
    invert_bound,
    mdr,
    seiberg_witten,
    time_of_flight_delay,
    verify,
)

__all__ = [
    "Dispersion",
    "QmdrDomainError",
    "a4",
    "ell_star_squared",
    "energy",
    "group_velocity",
    "immirzi_from_flux",
    "invert_bound",
    "mdr",
    "seiberg_witten",
    "time_of_flight_delay",
    "verify",
]
