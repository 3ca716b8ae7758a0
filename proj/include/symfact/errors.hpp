#pragma once

#include <stdexcept>
#include <string>

namespace symfact {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SYMFACT_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                               \
    public:                                                                   \
        using Error::Error;                                                   \
    }

SYMFACT_DEFINE_ERROR(DimensionMismatch);
SYMFACT_DEFINE_ERROR(SingularMatrix);
SYMFACT_DEFINE_ERROR(NotSymmetric);
SYMFACT_DEFINE_ERROR(ConvergenceFailure);
SYMFACT_DEFINE_ERROR(CapExceeded);
SYMFACT_DEFINE_ERROR(InvalidBlock);
SYMFACT_DEFINE_ERROR(NotJordanBlock);
SYMFACT_DEFINE_ERROR(InvalidSpec);
SYMFACT_DEFINE_ERROR(NotApplicable);
SYMFACT_DEFINE_ERROR(IllConditioned);
SYMFACT_DEFINE_ERROR(NearDefective);
SYMFACT_DEFINE_ERROR(NotRealSpectrum);
SYMFACT_DEFINE_ERROR(NotSPD);
SYMFACT_DEFINE_ERROR(InvalidSplit);
SYMFACT_DEFINE_ERROR(OracleInconsistency);
SYMFACT_DEFINE_ERROR(InternalError);
SYMFACT_DEFINE_ERROR(BoundViolation);
SYMFACT_DEFINE_ERROR(CountMismatch);
SYMFACT_DEFINE_ERROR(RefineFailure);
SYMFACT_DEFINE_ERROR(KernelMismatch);
SYMFACT_DEFINE_ERROR(InvalidFactorization);
SYMFACT_DEFINE_ERROR(AmbiguousSpectrum);
SYMFACT_DEFINE_ERROR(ParseError);

#undef SYMFACT_DEFINE_ERROR

} // namespace symfact
