#include <slabcy/rational.hpp>

#include <slabcy/errors.hpp>

namespace slabcy {

Int factorial(long n) {
  if (n < 0) fail(errc::validation_error, "factorial of negative integer");
  Int r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

std::string fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) fail(errc::parse_error, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    fail(errc::parse_error, "bad rational '" + text + "'");
  }
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_unimodular_cell: return "NonUnimodularCell";
    case errc::singular_base: return "SingularBase";
    case errc::inconsistent_triangulation: return "InconsistentTriangulation";
    case errc::relation_not_integral: return "RelationNotIntegral";
    case errc::no_grading_found: return "NoGradingFound";
    case errc::grading_mismatch: return "GradingMismatch";
    case errc::bad_constant_term: return "BadConstantTerm";
    case errc::exponent_beyond_order: return "ExponentBeyondOrder";
    case errc::substitution_not_grading_compatible: return "SubstitutionNotGradingCompatible";
    case errc::internal_laurent_leak: return "InternalLaurentLeak";
    case errc::round_trip_failure: return "RoundTripFailure";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::index_out_of_range: return "IndexOutOfRange";
  }
  return "UnknownError";
}

}  // namespace slabcy
