#include "cohen/limits.hpp"

#include <atomic>

namespace cohen {

namespace {
std::atomic<std::size_t> g_word_budget{kDefaultWordBudget};
std::atomic<std::size_t> g_comb_budget{kDefaultCombBudget};
std::atomic<bool> g_verify{false};
}  // namespace

std::size_t word_budget() noexcept { return g_word_budget.load(); }
void set_word_budget(std::size_t syllables) noexcept {
  g_word_budget.store(syllables);
}

std::size_t comb_budget() noexcept { return g_comb_budget.load(); }
void set_comb_budget(std::size_t syllables) noexcept {
  g_comb_budget.store(syllables);
}

bool verify_mode() noexcept { return g_verify.load(); }
void set_verify_mode(bool on) noexcept { g_verify.store(on); }

ScopedLimits::ScopedLimits()
    : word_(word_budget()), comb_(comb_budget()), verify_(verify_mode()) {}

ScopedLimits::~ScopedLimits() {
  set_word_budget(word_);
  set_comb_budget(comb_);
  set_verify_mode(verify_);
}

}  // namespace cohen
