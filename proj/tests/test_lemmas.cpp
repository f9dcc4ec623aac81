#include "doctest.h"

#include "qstack/lemmas.hpp"

using namespace qstack;

TEST_CASE("lemma suite on the one-jump family") {
  LemmaOptions opt;
  opt.finite_per_level = 25;
  auto rep = run_lemma_suite(StepFunction::make(2, 2, 2), opt);
  for (auto& r : rep.reproducers) MESSAGE(r);
  CHECK(rep.failures() == 0);
  CHECK(rep.undecided() == 0);
  CHECK(rep.enough_samples());
  for (auto& c : rep.counts) CHECK(c.applicable > 0);
}

TEST_CASE("lemma suite on the two-jump family") {
  LemmaOptions opt;
  opt.finite_per_level = 60;
  auto rep = run_lemma_suite(StepFunction::make(2, 2, 1, 3, 1), opt);
  CHECK(rep.enough_samples());
  CHECK(rep.undecided() == 0);
  // Right after the second jump the primed b-chain is one step long and
  // Λb'0 has Loewy length 2, so (P(a2) + P(b'1))/(alpha'1_j x - beta'1 y)
  // has pdim 1 with Ω¹ ≅ Λb'0: the summand statements can only fail there,
  // and only in pdim <= 1.
  for (auto& c : rep.counts) {
    if (c.property == "syzygy-hits-a" || c.property == "top-multiplicity") {
      if (c.failed) CHECK(c.max_failed_pdim <= 1);
    } else {
      CHECK(c.failed == 0);
    }
  }
  CHECK(rep.reproducers.size() <= 4);
}
