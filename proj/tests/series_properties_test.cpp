#include <doctest.h>

#include "property_suite.hpp"

using namespace slabcy::testing;

TEST_CASE("ring axioms hold exactly on random series") {
  SuiteResult r = ring_axiom_suite(1000, 0xA11CE);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("exp and log are mutually inverse") {
  SuiteResult r = exp_log_suite(1000, 0xB0B);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("exp turns sums into products") {
  SuiteResult r = exp_homomorphism_suite(1000, 0xC0FFEE);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("truncating after computing equals computing truncated") {
  SuiteResult r = truncation_coherence_suite(1000, 0xD00D);
  INFO(r.detail);
  CHECK(r.ok);
}
