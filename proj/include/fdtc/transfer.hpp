#ifndef FDTC_TRANSFER_HPP
#define FDTC_TRANSFER_HPP

#include "fdtc/cover.hpp"
#include "fdtc/fdtc.hpp"

namespace fdtc {

struct TransferInput {
    FdtcValue base_fdtc;       // c of the braid with respect to the disk boundary
    CoverGeometry geometry;
    bool fully_ramified;
    int base_boundary = 0;     // which base boundary the twisting is measured at
    int component = 0;         // which component above it to lift to
};

struct TransferResult {
    // The lifted monodromy coefficient and the lifted braid coefficient
    // coincide; every report prints this one value under both names.
    FdtcValue lifted_fdtc;
    int divisor = 1; // covering degree of the chosen boundary component
};

// Divides the base coefficient by the covering degree of the chosen
// boundary component. Licensed only for fully ramified coverings whose
// total space has negative Euler characteristic; NotFullyRamifiedError and
// AnnulusError report the violated hypothesis. On the disk and the annulus
// no division rule can hold: the half twist on two strands has base
// coefficient 1/2, its double branched cover is the annulus with boundary
// covering degree 1, yet the lift is the core Dehn twist with boundary
// twisting 1, not 1/2.
TransferResult lift_fdtc(const TransferInput& in);

struct RightVeeringTransfer {
    RightVeering braid;
    RightVeering lifted_monodromy;
    RightVeering lifted_braid;
};

// Right-veering is decided by the sign of the coefficient, and the sign is
// unchanged by division by a positive degree, so the status transfers
// verbatim in both directions. Requires a fully ramified covering.
RightVeeringTransfer propagate_right_veering(RightVeering base, const TransferInput& in);

// Periodic braids lift periodically: a certificate (N, M) downstairs gives
// twist/period M/(divisor*N) upstairs. Cross-check for lift_fdtc on exact
// values.
Rational periodic_lift_check(const PeriodicCertificate& cert, int divisor);

} // namespace fdtc

#endif
