#pragma once

#include "qstack/family.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qstack {

// Property suites for the structural statements behind the finitistic
// dimension jumps of a generated family, checked on random modules over F_p.
//
// Sampled modules are P/V, P a sum of indecomposable projectives and V
// generated by random elements of JP (and all of J²P for the Loewy-2
// samples).  Per level L of the family:
//   syzygy-below        pdim N < ∞  ⇒  Ω¹N vanishes on the new vertices
//   killed-top          pdim N < ∞, a top element y of type a_L with
//                       alpha_L_0 y = 0  ⇒  b_L (and b'_{L-s}) in the top
//                       with multiplicity >= m (n)
//   loewy2-infinite     Loewy length <= 2, a_L M = 0, b_L M ≠ 0 (or
//                       b'_{L-s} M ≠ 0)  ⇒  pdim M = ∞
//   uniserial-x         Ω^L(X_{L-1}) ≅ S(b-1)
//   syzygy-hits-a       N indecomposable, non-projective, finite pdim,
//                       touching a_L or b_L (or b'_{L-s})  ⇒  a_{L-1}Ω¹N ≠ 0
//   top-multiplicity    same hypothesis (without b')  ⇒  b_L^m in the top
// The levels at which each property is claimed are fixed by the family
// shape; see lemma_levels.
struct LemmaOptions {
  int finite_per_level = 200;
  int max_samples_per_level = 6000;
  std::uint64_t seed = 11;
  std::uint32_t prime = 2;
  int max_tops = 5;
  int reproducers_per_property = 2;
};

struct LemmaCount {
  std::string property;
  int level = 0;
  std::uint64_t tested = 0, applicable = 0, failed = 0, undecided = 0;
  int max_failed_pdim = -1;
};

struct LemmaSuiteReport {
  std::string family;
  std::vector<LemmaCount> counts;
  std::vector<int> levels;
  std::vector<std::uint64_t> sampled, finite, infinite, unresolved;  // per entry of levels
  std::vector<std::string> reproducers;
  double seconds = 0;
  int target = 0;

  std::uint64_t failures() const;
  std::uint64_t undecided() const;
  bool enough_samples() const;
  bool ok() const { return failures() == 0 && undecided() == 0 && enough_samples(); }
  std::string summary() const;
};

// (property, level) pairs checked for f.
std::vector<std::pair<std::string, int>> lemma_levels(const StepFunction& f);

LemmaSuiteReport run_lemma_suite(const StepFunction& f, const LemmaOptions& opt = {});

}  // namespace qstack
