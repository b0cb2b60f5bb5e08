#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "menhir/loop.hpp"
#include "menhir/sampling.hpp"

namespace menhir {

/**
 * Full binary tree over leaf positions 0..n-1, read left to right.
 *
 * Stored as a postfix token sequence: each leaf pushes the next position,
 * each join combines the two topmost subtrees. (ab)c is "leaf leaf join
 * leaf join"; a(bc) is "leaf leaf leaf join join".
 */
class BracketTree {
 public:
  enum class Token : std::uint8_t { leaf, join };

  /// Throws std::invalid_argument unless tokens form one full binary tree.
  explicit BracketTree(std::vector<Token> postfix);

  static BracketTree leaf();
  static BracketTree join(const BracketTree& left, const BracketTree& right);

  std::size_t leaf_count() const noexcept { return (tokens_.size() + 1) / 2; }
  const std::vector<Token>& tokens() const noexcept { return tokens_; }

  /// Parenthesized form with letters taken from `letters` in leaf order,
  /// outermost parentheses omitted: "(ab)c".
  std::string render(std::string_view letters) const;

  friend bool operator==(const BracketTree&, const BracketTree&) = default;
  friend auto operator<=>(const BracketTree&, const BracketTree&) = default;

 private:
  std::vector<Token> tokens_;
};

/// Catalan(n - 1) trees with n leaves, 2 <= n <= 6. Canonical order: the
/// root's left subtree shrinks from n - 1 leaves to 1, recursively, so the
/// list starts with the left comb ((ab)c)d and ends with a(b(cd)).
std::vector<BracketTree> enumerate_trees(std::size_t n);

/// Variable index for each leaf position: [0, 1, 0, 2] reads a, b, a, c.
/// The indices must cover 0..m-1 without gaps.
class WordPattern {
 public:
  explicit WordPattern(std::vector<int> assignment);

  std::size_t size() const noexcept { return assignment_.size(); }
  std::size_t variable_count() const noexcept { return variables_; }
  std::span<const int> assignment() const noexcept { return assignment_; }
  int operator[](std::size_t i) const noexcept { return assignment_[i]; }

  /// Letters in leaf order, "abac".
  std::string letters() const;
  /// Variables renamed by first occurrence, so patterns equal up to renaming
  /// compare equal.
  WordPattern normalized() const;

  friend bool operator==(const WordPattern&, const WordPattern&) = default;
  friend auto operator<=>(const WordPattern&, const WordPattern&) = default;

 private:
  std::vector<int> assignment_;
  std::size_t variables_ = 0;
};

/// Surjective patterns of length n up to renaming (restricted growth strings).
std::vector<WordPattern> enumerate_patterns(std::size_t n);

struct IdentityCandidate {
  BracketTree lhs;
  BracketTree rhs;
  WordPattern pattern;
  std::string name;

  /// Throws std::invalid_argument when the leaf counts disagree with the
  /// pattern or both sides are the same tree.
  IdentityCandidate(BracketTree lhs, BracketTree rhs, WordPattern pattern, std::string name = {});

  /// Same identity with variables renamed by first occurrence and the two
  /// sides in tree order; equal for candidates that differ only by naming
  /// or by which side is written first.
  IdentityCandidate canonical() const;
};

/// "(aa)b = a(ab)".
std::string render_text(const IdentityCandidate& c);

/// Inverse of render_text. Whitespace is ignored; both sides must spell the
/// same word. Throws std::invalid_argument on malformed input.
IdentityCandidate parse_candidate(std::string_view text, std::string name = {});

/// The seven named identities: power associativity (i), left alternative (ii),
/// right alternative, the four-letter identity (iii), and the left, right and
/// middle Moufang laws.
std::vector<IdentityCandidate> builtin_candidates();

class LoopProduct {
 public:
  enum class Kind : std::uint8_t { menhir, relativistic, deformed };

  static LoopProduct menhir() noexcept { return LoopProduct(Kind::menhir, 1); }
  static LoopProduct relativistic() noexcept { return LoopProduct(Kind::relativistic, 2); }
  /// Throws std::invalid_argument for k < 1.
  static LoopProduct deformed(int k);

  Kind kind() const noexcept { return kind_; }
  int k() const noexcept { return k_; }
  std::string label() const;

  DiskPoint operator()(const DiskPoint& a, const DiskPoint& b) const;

 private:
  LoopProduct(Kind kind, int k) noexcept : kind_(kind), k_(k) {}
  Kind kind_;
  int k_;
};

/// Folds the tree bottom-up. args[v] is the value of variable v; throws
/// std::invalid_argument on an arity mismatch.
DiskPoint evaluate(const BracketTree& tree, const WordPattern& pattern, std::span<const DiskPoint> args,
                   const LoopProduct& product);

struct TestOptions {
  Algebra algebra = Algebra::quaternion;
  LoopProduct product = LoopProduct::menhir();
  std::size_t samples = 10000;
  /// "holds" threshold on the maximal coefficientwise residual.
  double tol = 1e-9;
  /// A failure is only called definite once some residual exceeds this.
  double fail_threshold = 1e-3;
  std::uint64_t seed = 0;
  double max_radius = default_sample_radius;
};

enum class Verdict : std::uint8_t { holds, fails, inconclusive };

std::string_view verdict_name(Verdict v) noexcept;

struct TestReport {
  bool holds = false;
  Verdict verdict = Verdict::inconclusive;
  double max_residual = 0.0;
  std::size_t samples = 0;
  /// First sampled tuple with residual >= tol, one point per variable.
  std::optional<std::vector<DiskPoint>> witness;
  double witness_residual = 0.0;
  std::uint64_t seed = 0;
};

TestReport test_identity(const IdentityCandidate& c, const TestOptions& options);

/// Smallest set of known laws from which a candidate follows by substitution
/// and replacement of subterms.
enum class Derivation : std::uint8_t {
  left_alternative,           // (ii) alone; (i) is its instance b = a
  left_alternative_and_iii,   // needs (iii) as well
  none,
};

std::string_view derivation_name(Derivation d) noexcept;

Derivation derive_from_known_laws(const IdentityCandidate& c);

struct SurveyEntry {
  IdentityCandidate candidate;
  TestReport report;
  Derivation derivation;
};

struct SurveyResult {
  std::size_t leaves = 0;
  std::size_t tested = 0;
  /// Candidates that hold, in enumeration order.
  std::vector<SurveyEntry> holders;
};

/// Tests every unordered pair of distinct n-leaf trees against every
/// surjective pattern of length n (up to renaming). n must be 3 or 4.
/// Builtin names are attached to holders that match a builtin candidate.
SurveyResult survey_identities(std::size_t n, const TestOptions& options);

}  // namespace menhir
