#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slicenum {

// Input outside an operation's mathematical domain (division by zero,
// pole evaluation, invariant violation).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Work would exceed a documented size cap.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The metabolizer search ran out of candidate generating sets.  This is
// never the same thing as "no metabolizer exists".
class BudgetExceeded : public CapacityError {
  public:
    BudgetExceeded(const std::string &what, long long budget)
        : CapacityError(what), budget_(budget) {}
    long long budget() const { return budget_; }

  private:
    long long budget_;
};

class InfiniteCokernel : public DomainError {
  public:
    explicit InfiniteCokernel(std::size_t free_rank)
        : DomainError("cokernel is infinite (free rank " + std::to_string(free_rank) + ")"),
          free_rank_(free_rank) {}
    std::size_t free_rank() const { return free_rank_; }

  private:
    std::size_t free_rank_;
};

// Malformed textual input.  `position` is a 0-based character offset for
// polynomials and a 1-based line number for matrix files.
class SyntaxError : public std::invalid_argument {
  public:
    SyntaxError(const std::string &what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

} // namespace slicenum
