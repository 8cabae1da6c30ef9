#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dcycles {

enum class ErrorKind {
  BadParameters,
  InvalidInput,
  DegreeTooLow,
  PreconditionUnmet,
  NotTriangleFree,
  NotRegular,
  NotStrong,
  NotTournament,
  TooSmall,
  BadResidue,
  BadLength,
  InvalidSchema,
  NotOptimal,
  NotFound,
  SearchExhausted,
  ResourceBudgetExceeded,
  RetriesExhausted,
  GenerationFailed,
};

std::string_view to_string(ErrorKind kind);

/// Coarse grouping used by the CLI exit-code contract.
enum class ErrorClass { Usage, Negative, Precondition, Budget };

ErrorClass classify(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Search statistics attached by the searching operations (0 when unused).
  std::uint64_t explored() const noexcept { return explored_; }
  bool exhaustive() const noexcept { return exhaustive_; }
  Error& with_search(std::uint64_t explored, bool exhaustive) {
    explored_ = explored;
    exhaustive_ = exhaustive;
    return *this;
  }

private:
  ErrorKind kind_;
  std::uint64_t explored_ = 0;
  bool exhaustive_ = false;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace dcycles
