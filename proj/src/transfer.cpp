#include "fdtc/transfer.hpp"

#include <string>

namespace fdtc {

namespace {

const BoundaryComponent& select_component(const CoverGeometry& geo, int base_boundary,
                                          int component) {
    for (const BoundaryComponent& bc : geo.boundaries)
        if (bc.base_boundary == base_boundary && bc.component == component) return bc;
    throw IndexOutOfRangeError("no boundary component (" + std::to_string(base_boundary) +
                               ", " + std::to_string(component) + ") in the cover");
}

void check_hypotheses(const TransferInput& in) {
    if (!in.fully_ramified) {
        std::string offenders;
        for (const BranchPreimage& pre : in.geometry.branch_preimages)
            for (int r : pre.ramification)
                if (r == 1) {
                    if (!offenders.empty()) offenders += ", ";
                    offenders += std::to_string(pre.branch_point + 1);
                    break;
                }
        throw NotFullyRamifiedError(
            "the covering is not fully ramified: branch point(s) " + offenders +
            " have unramified preimages, so the division formula for the twist "
            "coefficient is not licensed");
    }
    if (in.geometry.euler_char >= 0)
        throw AnnulusError(
            "the covering surface has euler characteristic " +
            std::to_string(in.geometry.euler_char) +
            " >= 0 (disk or annulus), where no division formula holds: the half "
            "twist on two strands has coefficient 1/2 but lifts under the double "
            "cover branched over two points to the annulus core Dehn twist with "
            "boundary twisting 1, not 1/2 = (1/2)/1");
}

} // namespace

TransferResult lift_fdtc(const TransferInput& in) {
    check_hypotheses(in);
    const BoundaryComponent& bc =
        select_component(in.geometry, in.base_boundary, in.component);
    const Rational d(bc.degree);

    TransferResult out;
    out.divisor = bc.degree;
    if (in.base_fdtc.is_exact()) {
        const PeriodicCertificate base = *in.base_fdtc.certificate();
        const PeriodicCertificate lifted{base.period * bc.degree, base.twist};
        out.lifted_fdtc = FdtcValue::exact(in.base_fdtc.value() / d, lifted);
    } else {
        out.lifted_fdtc =
            FdtcValue::interval(in.base_fdtc.lower() / d, in.base_fdtc.upper() / d);
    }
    return out;
}

RightVeeringTransfer propagate_right_veering(RightVeering base, const TransferInput& in) {
    check_hypotheses(in);
    return RightVeeringTransfer{base, base, base};
}

Rational periodic_lift_check(const PeriodicCertificate& cert, int divisor) {
    if (divisor < 1)
        throw BadDegreeError("boundary covering degree must be at least 1, got " +
                             std::to_string(divisor));
    return Rational(cert.twist, cert.period * divisor);
}

} // namespace fdtc
