#pragma once

#include <superdom/errors.hpp>
#include <superdom/text.hpp>

#include <string>
#include <vector>

namespace testing {

using namespace superdom;

inline MultiIndex mi(std::vector<unsigned> labels) { return MultiIndex::from_labels(labels); }

inline GrassmannElement ge(const std::string& text, unsigned rank) { return parse_grassmann(text, rank); }

inline SuperFunction sf(const std::string& text, SuperSpace space) { return parse_superfunction(text, space); }

inline Skeleton sk(const std::string& text) { return parse_skeleton(text); }

inline LambdaPoint pt(const std::string& text, SuperSpace space) { return parse_point(text, space); }

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace testing
