#pragma once

#include <stdexcept>
#include <string>

namespace klab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define KLAB_ERROR_TYPE(Name)                                   \
  struct Name : Error {                                         \
    explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
  }

// metric
KLAB_ERROR_TYPE(AsymmetricDistance);
KLAB_ERROR_TYPE(ZeroOffDiagonal);
KLAB_ERROR_TYPE(TriangleViolation);
// hst
KLAB_ERROR_TYPE(UnknownLeaf);
KLAB_ERROR_TYPE(NotAnHst);
// allocation
KLAB_ERROR_TYPE(BadDistribution);
KLAB_ERROR_TYPE(EpsOutOfRange);
KLAB_ERROR_TYPE(NotMonotone);
KLAB_ERROR_TYPE(QuotaInfeasible);
KLAB_ERROR_TYPE(IntegratorStalled);
KLAB_ERROR_TYPE(NormalizerNotFound);
// oracle
KLAB_ERROR_TYPE(StateSpaceTooLarge);
// composer
KLAB_ERROR_TYPE(BadStartConfig);
KLAB_ERROR_TYPE(NotADistribution);
KLAB_ERROR_TYPE(FeasibilityViolated);
KLAB_ERROR_TYPE(ConsistencyViolated);
// rounding
KLAB_ERROR_TYPE(MassNotK);
KLAB_ERROR_TYPE(InsufficientMass);
KLAB_ERROR_TYPE(SigmaTooSmall);
// harness
KLAB_ERROR_TYPE(UnknownKind);
KLAB_ERROR_TYPE(IoError);

#undef KLAB_ERROR_TYPE

}  // namespace klab
