#pragma once
#include <stdexcept>
#include <string>

namespace f4grad {

struct CommutatorNonzero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EigenvalueOutsideCandidates : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotClosedUnderBracket : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAutomorphism : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSpecialOrthogonal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FixtureMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DependentBasis : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PropagationInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotHomomorphic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace f4grad
