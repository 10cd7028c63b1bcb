#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polarmult {

// Error taxonomy. Every throwing path in the library uses one of these so the
// CLI can map failures to stable exit codes (see tools/).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-level problems: bad grammar, failed homogeneity checks, malformed
// presentations. Exit code 2.
struct InputError : Error {
    using Error::Error;
};

struct ParseError : InputError {
    ParseError(std::string msg, int line_, int col_, std::string token_)
        : InputError("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                     " near '" + token_ + "': " + msg),
          line(line_), col(col_), token(std::move(token_)) {}
    int line = 0;
    int col = 0;
    std::string token;
};

struct RankMismatch : InputError {
    using InputError::InputError;
};
struct NotContained : InputError {
    using InputError::InputError;
};
struct NotMonomial : InputError {
    using InputError::InputError;
};
struct RankDeficient : InputError {
    using InputError::InputError;
};
struct NoBaseVariables : InputError {
    using InputError::InputError;
};
struct InvalidDepth : InputError {
    using InputError::InputError;
};
struct EmptySupport : InputError {
    using InputError::InputError;
};

// A completion-style loop ran past its configured step budget. Exit code 3.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Polynomial stabilization was not reached inside the window caps. The caller
// may enlarge the window; the CLI maps this to exit code 1.
struct Unstable : Error {
    Unstable(std::string msg, int suggest_v0_, int suggest_n0_, int suggest_w_)
        : Error(std::move(msg)), suggest_v0(suggest_v0_), suggest_n0(suggest_n0_), suggest_w(suggest_w_) {}
    explicit Unstable(std::string msg) : Error(std::move(msg)) {}
    int suggest_v0 = -1;
    int suggest_n0 = -1;
    int suggest_w = -1;
};

struct NonIntegerCoefficient : Unstable {
    using Unstable::Unstable;
};

// A sampled "general" element failed its certified identity for every retry.
struct GenericityFailure : Error {
    using Error::Error;
};

// Step budget shared across the completion loops of one computation.
class Budget {
  public:
    explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

    void charge(std::uint64_t steps = 1) {
        used_ += steps;
        if (used_ > limit_)
            throw BudgetExceeded("step budget exceeded (" + std::to_string(limit_) + ")");
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

    static constexpr std::uint64_t kDefaultLimit = 200'000'000ULL;

  private:
    std::uint64_t used_ = 0;
    std::uint64_t limit_;
};

} // namespace polarmult
