#include <superdom/errors.hpp>
#include <superdom/rational.hpp>
#include <superdom/report.hpp>

#include <cctype>

namespace superdom {

Rational make_rational(long numerator, long denominator) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return ParseError("malformed rational '" + std::string(text) + "'", 1, 1); };
  if (text.empty()) throw bad();
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  auto slash = text.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    return true;
  };
  std::size_t end = slash == std::string_view::npos ? text.size() : slash;
  if (!digits(pos, end)) throw bad();
  if (slash != std::string_view::npos && !digits(slash + 1, text.size())) throw bad();
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw bad();
  r.canonicalize();
  return r;
}

Rational factorial(unsigned n) {
  Integer result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return Rational(result);
}

void CheckReport::merge(const CheckReport& other) {
  passed += other.passed;
  failed += other.failed;
  skipped += other.skipped;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string CheckReport::summary() const {
  std::string s = (ok() ? "PASS " : "FAIL ") + name + ": " + std::to_string(passed) + " passed, " +
                  std::to_string(failed) + " failed";
  if (skipped) s += ", " + std::to_string(skipped) + " skipped";
  return s;
}

}  // namespace superdom
