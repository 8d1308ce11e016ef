#ifndef ALN_ERRORS_HPP
#define ALN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aln {

/// Base class of every error raised by the library. `code()` is a stable,
/// machine-readable identifier (the CLI and the service report it verbatim).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class UnfoldingBudgetExceeded : public Error {
 public:
  explicit UnfoldingBudgetExceeded(std::size_t limit)
      : Error("unfolding-budget-exceeded",
              "unfolded concept exceeds " + std::to_string(limit) + " nodes"),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

enum class Side { Supply, Demand };

inline const char* to_string(Side s) {
  return s == Side::Supply ? "supply" : "demand";
}

class UnsatisfiableAdvertisement : public Error {
 public:
  explicit UnsatisfiableAdvertisement(Side side)
      : Error("unsatisfiable-advertisement",
              std::string(to_string(side)) + " is unsatisfiable"),
        side_(side) {}
  Side side() const { return side_; }

 private:
  Side side_;
};

/// Raised by abduction when the two concepts are mutually inconsistent.
class PartialMatch : public Error {
 public:
  PartialMatch()
      : Error("partial-match",
              "concepts are inconsistent; use contraction instead") {}
};

class OracleBudgetExceeded : public Error {
 public:
  explicit OracleBudgetExceeded(const std::string& what)
      : Error("oracle-budget-exceeded", what) {}
};

class EnumerationBudgetExceeded : public Error {
 public:
  explicit EnumerationBudgetExceeded(const std::string& what)
      : Error("enumeration-budget-exceeded", what) {}
};

class EmptyPreference : public Error {
 public:
  EmptyPreference()
      : Error("empty-preference",
              "reference ranking has no strictly ordered pair") {}
};

}  // namespace aln

#endif  // ALN_ERRORS_HPP
