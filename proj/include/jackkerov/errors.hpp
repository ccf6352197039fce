#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jackkerov {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Column rank of an exact linear system is smaller than its number of unknowns.
struct RankDeficient : std::runtime_error {
    explicit RankDeficient(std::size_t r)
        : std::runtime_error("rank-deficient system (rank " + std::to_string(r) + ")"), rank(r) {}
    std::size_t rank;
};

/// An equation that reduces to 0 = c with c != 0; `row` indexes the input system.
struct Inconsistent : std::runtime_error {
    explicit Inconsistent(std::size_t r)
        : std::runtime_error("inconsistent system (witness row " + std::to_string(r) + ")"), row(r) {}
    std::size_t row;
};

/// A configured size cap was exceeded (CLI exit code 2).
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A checked structural property of Kerov polynomials or expectations failed (CLI exit code 3).
struct TheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Kerov coefficient is not a polynomial in gamma.
struct PolynomialityViolation : TheoremViolation {
    using TheoremViolation::TheoremViolation;
};

}  // namespace jackkerov
