#pragma once

#include <stdexcept>
#include <string>

namespace framekit {

// Base class for every error the toolkit raises deliberately.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define FRAMEKIT_DEFINE_ERROR(Name)                                 \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& msg) : Error(msg) {}       \
    }

// numeric kernel layer
FRAMEKIT_DEFINE_ERROR(NonFinite);
FRAMEKIT_DEFINE_ERROR(NotHermitian);
FRAMEKIT_DEFINE_ERROR(NotPositiveSemidefinite);
FRAMEKIT_DEFINE_ERROR(DimensionMismatch);
FRAMEKIT_DEFINE_ERROR(InvalidInput);
FRAMEKIT_DEFINE_ERROR(EmptyInput);

// operator tools
FRAMEKIT_DEFINE_ERROR(NullSpaceViolation);

// frames
FRAMEKIT_DEFINE_ERROR(NotAFrame);
FRAMEKIT_DEFINE_ERROR(NotAKFrame);

// fusion systems
FRAMEKIT_DEFINE_ERROR(NotAFusionFrame);
FRAMEKIT_DEFINE_ERROR(NotKFusion);
FRAMEKIT_DEFINE_ERROR(BlockNotInSubspace);
FRAMEKIT_DEFINE_ERROR(ZeroOperator);
FRAMEKIT_DEFINE_ERROR(ZeroOperatorInProduct);
FRAMEKIT_DEFINE_ERROR(BadPartition);
FRAMEKIT_DEFINE_ERROR(MemberCountMismatch);
FRAMEKIT_DEFINE_ERROR(WeightHypothesisFailed);
FRAMEKIT_DEFINE_ERROR(NonCommutingProjections);
FRAMEKIT_DEFINE_ERROR(CommutationHypothesisFailed);

// document / CLI layer
FRAMEKIT_DEFINE_ERROR(ParseError);
FRAMEKIT_DEFINE_ERROR(UnknownTheorem);

#undef FRAMEKIT_DEFINE_ERROR

} // namespace framekit
