#ifndef MOEBIUS_ERRORS_HPP
#define MOEBIUS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace moebius {

// Two operands live over different prime fields.
class FieldMismatchError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Shapes do not line up (matrix products, ambient dimensions, ...).
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Inversion of a rank-deficient matrix; carries the rank that elimination found.
class SingularMatrixError : public std::runtime_error {
  public:
    SingularMatrixError(std::size_t rank, std::size_t size)
        : std::runtime_error("singular matrix: rank " + std::to_string(rank) + " of " +
                             std::to_string(size)),
          rank_(rank) {}

    std::size_t rank() const { return rank_; }

  private:
    std::size_t rank_;
};

// A pair construction that the theory itself calls degenerate (two-vertex "pairs").
class DegeneratePairError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace moebius

#endif
