#include "menhir/identity_lab.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "menhir/deformation.hpp"

namespace menhir {

// ---------------------------------------------------------------------------
// BracketTree

BracketTree::BracketTree(std::vector<Token> postfix) : tokens_(std::move(postfix)) {
  long depth = 0;
  for (auto t : tokens_) {
    if (t == Token::leaf) {
      ++depth;
    } else {
      if (depth < 2) throw std::invalid_argument("bracket tree: join without two operands");
      --depth;
    }
  }
  if (depth != 1) throw std::invalid_argument("bracket tree: tokens do not form a single tree");
}

BracketTree BracketTree::leaf() { return BracketTree({Token::leaf}); }

BracketTree BracketTree::join(const BracketTree& left, const BracketTree& right) {
  std::vector<Token> t;
  t.reserve(left.tokens_.size() + right.tokens_.size() + 1);
  t.insert(t.end(), left.tokens_.begin(), left.tokens_.end());
  t.insert(t.end(), right.tokens_.begin(), right.tokens_.end());
  t.push_back(Token::join);
  return BracketTree(std::move(t));
}

std::string BracketTree::render(std::string_view letters) const {
  if (letters.size() != leaf_count()) throw std::invalid_argument("bracket tree: wrong number of letters");
  std::vector<std::string> stack;
  std::size_t next = 0;
  for (auto t : tokens_) {
    if (t == Token::leaf) {
      stack.emplace_back(1, letters[next++]);
    } else {
      auto right = std::move(stack.back());
      stack.pop_back();
      stack.back() = "(" + stack.back() + right + ")";
    }
  }
  auto out = std::move(stack.back());
  if (leaf_count() > 1) out = out.substr(1, out.size() - 2);
  return out;
}

namespace {

std::vector<BracketTree> trees_with_leaves(std::size_t n) {
  if (n == 1) return {BracketTree::leaf()};
  std::vector<BracketTree> out;
  for (std::size_t left = n - 1; left >= 1; --left) {
    const auto lefts = trees_with_leaves(left);
    const auto rights = trees_with_leaves(n - left);
    for (const auto& l : lefts) {
      for (const auto& r : rights) out.push_back(BracketTree::join(l, r));
    }
  }
  return out;
}

}  // namespace

std::vector<BracketTree> enumerate_trees(std::size_t n) {
  if (n < 2 || n > 6) throw std::invalid_argument("enumerate_trees: n must be between 2 and 6");
  return trees_with_leaves(n);
}

// ---------------------------------------------------------------------------
// WordPattern

WordPattern::WordPattern(std::vector<int> assignment) : assignment_(std::move(assignment)) {
  if (assignment_.empty()) throw std::invalid_argument("word pattern: empty");
  const int top = *std::max_element(assignment_.begin(), assignment_.end());
  if (*std::min_element(assignment_.begin(), assignment_.end()) < 0 || top >= 26) {
    throw std::invalid_argument("word pattern: variable indices must lie in 0..25");
  }
  std::vector<bool> seen(static_cast<std::size_t>(top) + 1, false);
  for (int v : assignment_) seen[static_cast<std::size_t>(v)] = true;
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw std::invalid_argument("word pattern: variable indices must form a range starting at 0");
  }
  variables_ = seen.size();
}

std::string WordPattern::letters() const {
  std::string s;
  for (int v : assignment_) s.push_back(static_cast<char>('a' + v));
  return s;
}

WordPattern WordPattern::normalized() const {
  std::map<int, int> rename;
  std::vector<int> out;
  for (int v : assignment_) {
    auto [it, inserted] = rename.try_emplace(v, static_cast<int>(rename.size()));
    out.push_back(it->second);
  }
  return WordPattern(std::move(out));
}

std::vector<WordPattern> enumerate_patterns(std::size_t n) {
  std::vector<WordPattern> out;
  std::vector<int> current{0};
  // Restricted growth strings: each entry is at most one above the running maximum.
  auto rec = [&](auto&& self, int running_max) -> void {
    if (current.size() == n) {
      out.emplace_back(current);
      return;
    }
    for (int v = 0; v <= running_max + 1; ++v) {
      current.push_back(v);
      self(self, std::max(running_max, v));
      current.pop_back();
    }
  };
  if (n >= 1) rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Candidates

IdentityCandidate::IdentityCandidate(BracketTree l, BracketTree r, WordPattern p, std::string n)
    : lhs(std::move(l)), rhs(std::move(r)), pattern(std::move(p)), name(std::move(n)) {
  if (lhs.leaf_count() != pattern.size() || rhs.leaf_count() != pattern.size()) {
    throw std::invalid_argument("identity candidate: leaf counts must match the pattern length");
  }
  if (pattern.size() < 2) throw std::invalid_argument("identity candidate: need at least two leaves");
  if (lhs == rhs) throw std::invalid_argument("identity candidate: both sides are the same bracketing");
}

IdentityCandidate IdentityCandidate::canonical() const {
  auto l = lhs;
  auto r = rhs;
  if (r < l) std::swap(l, r);
  return IdentityCandidate(std::move(l), std::move(r), pattern.normalized(), name);
}

std::string render_text(const IdentityCandidate& c) {
  const auto letters = c.pattern.letters();
  return c.lhs.render(letters) + " = " + c.rhs.render(letters);
}

namespace {

class SideParser {
 public:
  explicit SideParser(std::string_view text) : text_(text) {}

  // side := item item+ is not allowed; exactly two items at top level.
  void parse() {
    parse_pair();
    if (pos_ != text_.size()) fail("unexpected trailing characters");
  }

  std::vector<BracketTree::Token> tokens;
  std::string letters;

 private:
  void parse_pair() {
    parse_item();
    parse_item();
    tokens.push_back(BracketTree::Token::join);
  }

  void parse_item() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      parse_pair();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
    } else if (c >= 'a' && c <= 'z') {
      ++pos_;
      tokens.push_back(BracketTree::Token::leaf);
      letters.push_back(c);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse identity side '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IdentityCandidate parse_candidate(std::string_view text, std::string name) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  const auto eq = compact.find('=');
  if (eq == std::string::npos || compact.find('=', eq + 1) != std::string::npos) {
    throw std::invalid_argument("identity must contain exactly one '='");
  }
  SideParser left(std::string_view(compact).substr(0, eq));
  SideParser right(std::string_view(compact).substr(eq + 1));
  left.parse();
  right.parse();
  if (left.letters != right.letters) {
    throw std::invalid_argument("both sides of an identity must spell the same word");
  }
  std::vector<int> assignment;
  for (char c : left.letters) assignment.push_back(c - 'a');
  return IdentityCandidate(BracketTree(std::move(left.tokens)), BracketTree(std::move(right.tokens)),
                           WordPattern(std::move(assignment)), std::move(name));
}

std::vector<IdentityCandidate> builtin_candidates() {
  return {
      parse_candidate("(aa)a = a(aa)", "power associativity (i)"),
      parse_candidate("(aa)b = a(ab)", "left alternative (ii)"),
      parse_candidate("(ab)b = a(bb)", "right alternative"),
      parse_candidate("a(b(ac)) = (a(ba))c", "identity (iii)"),
      parse_candidate("a(b(ac)) = ((ab)a)c", "left Moufang"),
      parse_candidate("((ca)b)a = c(a(ba))", "right Moufang"),
      parse_candidate("(ab)(ca) = (a(bc))a", "middle Moufang"),
  };
}

// ---------------------------------------------------------------------------
// Evaluation

LoopProduct LoopProduct::deformed(int k) {
  if (k < 1) throw std::invalid_argument("deformation parameter k must be >= 1");
  return LoopProduct(Kind::deformed, k);
}

std::string LoopProduct::label() const {
  switch (kind_) {
    case Kind::menhir: return "menhir";
    case Kind::relativistic: return "relativistic";
    case Kind::deformed: return "k=" + std::to_string(k_);
  }
  return "unknown";
}

DiskPoint LoopProduct::operator()(const DiskPoint& a, const DiskPoint& b) const {
  switch (kind_) {
    case Kind::menhir: return boxplus(a, b);
    case Kind::relativistic: return relativistic_add(a, b);
    case Kind::deformed: return k_add(k_, a, b);
  }
  return boxplus(a, b);
}

DiskPoint evaluate(const BracketTree& tree, const WordPattern& pattern, std::span<const DiskPoint> args,
                   const LoopProduct& product) {
  if (pattern.size() != tree.leaf_count()) {
    throw std::invalid_argument("evaluate: pattern length does not match the number of leaves");
  }
  if (args.size() != pattern.variable_count()) {
    throw std::invalid_argument("evaluate: expected " + std::to_string(pattern.variable_count()) +
                                " arguments, got " + std::to_string(args.size()));
  }
  std::vector<DiskPoint> stack;
  stack.reserve(tree.leaf_count());
  std::size_t next = 0;
  for (auto t : tree.tokens()) {
    if (t == BracketTree::Token::leaf) {
      stack.push_back(args[static_cast<std::size_t>(pattern[next++])]);
    } else {
      auto right = stack.back();
      stack.pop_back();
      stack.back() = product(stack.back(), right);
    }
  }
  return stack.back();
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

// samples[i] holds one point per variable, drawn from derive_seed(seed, i).
using SampleSet = std::vector<std::vector<DiskPoint>>;

SampleSet draw_samples(std::size_t variables, const TestOptions& options) {
  SampleSet set(options.samples);
  for (std::size_t i = 0; i < options.samples; ++i) {
    std::mt19937_64 rng(derive_seed(options.seed, i));
    set[i].reserve(variables);
    for (std::size_t v = 0; v < variables; ++v) {
      set[i].push_back(random_disk_point(options.algebra, rng, options.max_radius));
    }
  }
  return set;
}

TestReport run_test(const IdentityCandidate& c, const TestOptions& options, const SampleSet& samples) {
  TestReport report;
  report.seed = options.seed;
  report.samples = samples.size();

  for (const auto& args : samples) {
    const auto lhs = evaluate(c.lhs, c.pattern, args, options.product);
    const auto rhs = evaluate(c.rhs, c.pattern, args, options.product);
    double residual = max_abs_diff(lhs, rhs);
    if (!std::isfinite(residual)) residual = std::numeric_limits<double>::infinity();

    report.max_residual = std::max(report.max_residual, residual);
    if (!report.witness && !(residual < options.tol)) {
      report.witness = args;
      report.witness_residual = residual;
    }
  }

  report.holds = report.max_residual < options.tol;
  if (report.holds) {
    report.verdict = Verdict::holds;
  } else if (report.max_residual > options.fail_threshold) {
    report.verdict = Verdict::fails;
  } else {
    report.verdict = Verdict::inconclusive;
  }
  return report;
}

}  // namespace

TestReport test_identity(const IdentityCandidate& c, const TestOptions& options) {
  return run_test(c, options, draw_samples(c.pattern.variable_count(), options));
}

// ---------------------------------------------------------------------------
// Derivation from known laws by term rewriting

namespace {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  int var = -1;  // >= 0 for a leaf
  TermPtr left;
  TermPtr right;
  std::string key;  // fully parenthesized spelling, used for equality
};

TermPtr make_leaf(int var) {
  auto t = std::make_shared<Term>();
  t->var = var;
  t->key = std::string(1, static_cast<char>('a' + var));
  return t;
}

TermPtr make_join(TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>();
  t->key = "(" + l->key + r->key + ")";
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

TermPtr build_term(const BracketTree& tree, const WordPattern& pattern) {
  std::vector<TermPtr> stack;
  std::size_t next = 0;
  for (auto tok : tree.tokens()) {
    if (tok == BracketTree::Token::leaf) {
      stack.push_back(make_leaf(pattern[next++]));
    } else {
      auto r = std::move(stack.back());
      stack.pop_back();
      stack.back() = make_join(std::move(stack.back()), std::move(r));
    }
  }
  return stack.back();
}

using Binding = std::map<int, TermPtr>;

bool match(const TermPtr& pat, const TermPtr& term, Binding& binding) {
  if (pat->var >= 0) {
    auto [it, inserted] = binding.try_emplace(pat->var, term);
    return inserted || it->second->key == term->key;
  }
  if (term->var >= 0) return false;
  return match(pat->left, term->left, binding) && match(pat->right, term->right, binding);
}

TermPtr instantiate(const TermPtr& pat, const Binding& binding) {
  if (pat->var >= 0) return binding.at(pat->var);
  return make_join(instantiate(pat->left, binding), instantiate(pat->right, binding));
}

struct RewriteRule {
  TermPtr from;
  TermPtr to;
};

// Every term reachable from `t` by one application of a rule at any position.
void one_step(const TermPtr& t, const std::vector<RewriteRule>& rules, std::vector<TermPtr>& out) {
  for (const auto& rule : rules) {
    Binding binding;
    if (match(rule.from, t, binding)) out.push_back(instantiate(rule.to, binding));
  }
  if (t->var >= 0) return;
  std::vector<TermPtr> sub;
  one_step(t->left, rules, sub);
  for (auto& s : sub) out.push_back(make_join(s, t->right));
  sub.clear();
  one_step(t->right, rules, sub);
  for (auto& s : sub) out.push_back(make_join(t->left, s));
}

std::vector<RewriteRule> rules_from(std::span<const IdentityCandidate> laws) {
  std::vector<RewriteRule> rules;
  for (const auto& law : laws) {
    auto l = build_term(law.lhs, law.pattern);
    auto r = build_term(law.rhs, law.pattern);
    rules.push_back({l, r});
    rules.push_back({r, l});
  }
  return rules;
}

// Rewriting preserves the leaf word, so the search space is finite.
bool reachable(const TermPtr& from, const TermPtr& to, const std::vector<RewriteRule>& rules) {
  std::unordered_set<std::string> seen{from->key};
  std::deque<TermPtr> queue{from};
  std::vector<TermPtr> next;
  while (!queue.empty()) {
    auto t = std::move(queue.front());
    queue.pop_front();
    if (t->key == to->key) return true;
    next.clear();
    one_step(t, rules, next);
    for (auto& n : next) {
      if (seen.insert(n->key).second) queue.push_back(std::move(n));
    }
  }
  return false;
}

}  // namespace

std::string_view derivation_name(Derivation d) noexcept {
  switch (d) {
    case Derivation::left_alternative: return "(ii)";
    case Derivation::left_alternative_and_iii: return "(ii)+(iii)";
    case Derivation::none: return "none";
  }
  return "unknown";
}

Derivation derive_from_known_laws(const IdentityCandidate& c) {
  const auto builtins = builtin_candidates();
  const std::vector<IdentityCandidate> alt{builtins[1]};
  const std::vector<IdentityCandidate> alt_iii{builtins[1], builtins[3]};

  const auto lhs = build_term(c.lhs, c.pattern);
  const auto rhs = build_term(c.rhs, c.pattern);
  if (reachable(lhs, rhs, rules_from(alt))) return Derivation::left_alternative;
  if (reachable(lhs, rhs, rules_from(alt_iii))) return Derivation::left_alternative_and_iii;
  return Derivation::none;
}

// ---------------------------------------------------------------------------
// Survey

SurveyResult survey_identities(std::size_t n, const TestOptions& options) {
  if (n != 3 && n != 4) throw std::invalid_argument("survey_identities: n must be 3 or 4");

  std::vector<IdentityCandidate> named;
  for (const auto& b : builtin_candidates()) named.push_back(b.canonical());

  SurveyResult result;
  result.leaves = n;
  const auto trees = enumerate_trees(n);
  // The same tuples are reused for every candidate with a given number of variables.
  std::vector<SampleSet> samples;
  for (std::size_t v = 1; v <= n; ++v) samples.push_back(draw_samples(v, options));

  for (const auto& pattern : enumerate_patterns(n)) {
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i + 1; j < trees.size(); ++j) {
        IdentityCandidate cand(trees[i], trees[j], pattern);
        const auto canon = cand.canonical();
        for (const auto& b : named) {
          if (b.lhs == canon.lhs && b.rhs == canon.rhs && b.pattern == canon.pattern) cand.name = b.name;
        }
        ++result.tested;
        auto report = run_test(cand, options, samples[pattern.variable_count() - 1]);
        if (!report.holds) continue;
        const auto derivation = derive_from_known_laws(cand);
        result.holders.push_back({std::move(cand), std::move(report), derivation});
      }
    }
  }
  return result;
}

}  // namespace menhir
