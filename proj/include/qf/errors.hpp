#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSymmetric : Error {
    using Error::Error;
};

struct NotPositiveDefinite : Error {
    using Error::Error;
};

// Thrown when an enumeration exceeds its configured node budget.
struct BoundTooLarge : Error {
    using Error::Error;
};

struct RankMismatch : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct CutoffTooSmall : Error {
    std::string prefix_repr;
    CutoffTooSmall(const std::string& msg, std::string prefix)
        : Error(msg), prefix_repr(std::move(prefix)) {}
};

// Survivors at the rank cap that could not be ruled out.
struct RankCapReached : Error {
    std::vector<std::string> survivors;
    RankCapReached(const std::string& msg, std::vector<std::string> s)
        : Error(msg), survivors(std::move(s)) {}
};

struct NoTruant : Error {
    using Error::Error;
};

// A lemma-style certificate check failed one of its hypotheses.
struct ConditionFailed : Error {
    std::string condition;
    long long witness;
    ConditionFailed(const std::string& msg, std::string cond, long long w)
        : Error(msg), condition(std::move(cond)), witness(w) {}
};

struct SOutOfRange : Error {
    using Error::Error;
};

}  // namespace qf
