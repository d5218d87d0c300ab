#pragma once

#include <cstddef>

namespace cohen {

// Process-wide knobs. Reads and writes are atomic; the values only bound
// work, they never change a result that is produced.

inline constexpr std::size_t kDefaultWordBudget = 1'000'000;
inline constexpr std::size_t kDefaultCombBudget = 100'000;

/// Maximum syllable count of any intermediate free-group word built by the
/// Artin action.
std::size_t word_budget() noexcept;
void set_word_budget(std::size_t syllables) noexcept;

/// Maximum syllable count of a single combed component.
std::size_t comb_budget() noexcept;
void set_comb_budget(std::size_t syllables) noexcept;

/// When enabled, combing checks every conjugation-table rewrite against the
/// Artin oracle and throws VerificationError on a mismatch.
bool verify_mode() noexcept;
void set_verify_mode(bool on) noexcept;

/// Restores the previous knob values on scope exit.
class ScopedLimits {
 public:
  ScopedLimits();
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  std::size_t word_;
  std::size_t comb_;
  bool verify_;
};

}  // namespace cohen
