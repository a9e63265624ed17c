#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qdeform/exact/ratfunc.hpp"

namespace qdeform::nc {

using exact::RatFunc;

/// Sequence of generator indices. Normal words are non-decreasing.
using Word = std::vector<std::uint8_t>;

/// Degree first, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = w.size();
    for (auto g : w) h = h * 31 + g;
    return h;
  }
};

/// Linear combination of words.
using WordSum = std::map<Word, RatFunc, WordLess>;

enum class Strategy { leftmost, rightmost };

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

/// Quadratic algebra: ordered generators g_0 < g_1 < ... and one rewrite rule per
/// out-of-order pair g_j g_i (j > i) whose right side is a combination of normal
/// degree-2 words g_k g_l with i <= k <= l <= j.
class Presentation {
 public:
  struct RuleTerm {
    RatFunc coef;
    std::string first, second;
  };
  struct RuleSpec {
    std::string high, low;
    std::vector<RuleTerm> rhs;
  };
  struct Rule {
    std::uint8_t high = 0, low = 0;
    std::vector<std::pair<Word, RatFunc>> rhs;
  };

  /// Validates the rule set; a missing or duplicated pair is a StructuralError.
  static PresentationPtr make(std::string name, std::vector<std::string> generators, std::vector<RuleSpec> rules);

  const std::string& name() const { return name_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  std::uint8_t index(std::string_view generator) const;
  const Rule& rule(std::uint8_t high, std::uint8_t low) const;
  const std::vector<Rule>& rules() const { return rules_; }

  bool is_normal(const Word& w) const;
  std::string word_string(const Word& w) const;

  /// Memoized (leftmost strategy). The returned reference stays valid for the
  /// lifetime of the presentation.
  const WordSum& normal_order(const Word& w) const;
  /// Unmemoized rewriting with an explicit strategy, for confluence checks.
  WordSum normal_order(const Word& w, Strategy strategy) const;
  /// normal_order(a concatenated with b).
  const WordSum& multiply(const Word& a, const Word& b) const;

  /// Same generators and ratfunc_equal rule coefficients.
  friend bool presentation_equal(const Presentation& a, const Presentation& b, std::string* mismatch);

 private:
  Presentation() = default;
  WordSum rewrite_once(const Word& w, std::size_t pos) const;

  std::string name_;
  std::vector<std::string> generators_;
  std::vector<Rule> rules_;
  std::vector<int> rule_index_;  // high * size + low -> rules_ slot

  mutable std::recursive_mutex mutex_;
  mutable std::unordered_map<Word, WordSum, WordHash> memo_;
};

bool presentation_equal(const Presentation& a, const Presentation& b, std::string* mismatch = nullptr);

/// Standard presentations. q and eta are coefficient-field values (symbolic
/// variables or rationals).
PresentationPtr q_commuting(const RatFunc& q, int generators);  // u<v or u<v<w
PresentationPtr rational_xyz(const RatFunc& q, const RatFunc& eta);
PresentationPtr yangian_xyz(const RatFunc& eta);
/// e-variables E1 < E0 with E0 E1 = q^2 E1 E0.
PresentationPtr e_variables(const RatFunc& q);
/// f-variables f0 < f1 with f1 f0 - q^{-2} f0 f1 = -eta f0^2.
PresentationPtr f_variables(const RatFunc& q, const RatFunc& eta);
/// One free generator (commutative series in u).
PresentationPtr single(std::string name = "u");

}  // namespace qdeform::nc
