#ifndef PARAFACT_VERIFY_SUITE_HPP
#define PARAFACT_VERIFY_SUITE_HPP

#include <string>
#include <vector>

#include "parafact/cayley_graph.hpp"
#include "parafact/coset_table.hpp"

namespace parafact {

// Whole-group audits; each returns an empty string on success and a
// description of the first failure otherwise.
namespace checks {

// Length is inverse-invariant, 1 exactly on generators, subadditive,
// bounded below by differences, and changes by exactly one across edges
// on either side.
std::string length_properties(const CayleyGraph& g);

// A generator shortens an element on the left iff some geodesic of the
// element starts with it.
std::string descent_prefix_property(const CayleyGraph& g);

// For the complement of a single generator x: an element is upper on the
// left iff all of its geodesics start with x, and upper on the right iff
// all of them end with x.
std::string upper_complement_property(const CayleyGraph& g);

// (-1)^length is multiplicative over all ordered pairs.
std::string parity_multiplicative(const CayleyGraph& g);

// Every subset x every element factorises, and the result lands in the
// upper set and subgroup with additive lengths.
std::string factorization_sweep(const CayleyGraph& g);

// Exactly one factorisation whenever the subset is everything, empty, or
// a single generator.
std::string unique_case_sweep(const CayleyGraph& g);

}  // namespace checks

struct VerifyStep {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  EnumerationLimits limits{};
  // Test hook: corrupts one expected value so the harness provably
  // detects mismatches.
  bool inject_failure = false;
};

// Runs the full reproduction suite on the built-in fixtures (the
// triangle cluster group, the two-generator braid group quotient, the
// Klein four-group) and reports one step per assertion.
std::vector<VerifyStep> run_verify_suite(const VerifyOptions& opts = {});

bool all_passed(const std::vector<VerifyStep>& steps);
std::string transcript_text(const std::vector<VerifyStep>& steps);
std::string transcript_json(const std::vector<VerifyStep>& steps);

}  // namespace parafact

#endif
