#include <superdom/calculus.hpp>
#include <superdom/continuation.hpp>
#include <superdom/errors.hpp>
#include <superdom/morphisms.hpp>
#include <superdom/multilinear.hpp>

#include <set>

namespace superdom {

namespace {

std::vector<unsigned> identity_map(unsigned n) {
  std::vector<unsigned> m(n);
  for (unsigned i = 0; i < n; ++i) m[i] = i;
  return m;
}

SuperFunction lift_to(const SuperFunction& h, SuperSpace extended) {
  auto map = identity_map(h.space().even_dim);
  SuperFunction out(extended);
  for (const auto& [j, c] : h.terms()) out.add_term(j, c.remapped(extended.even_dim, map));
  return out;
}

SuperVector basis_vector(SuperSpace space, unsigned rank, unsigned direction) {
  SuperVector v(space.total(), GrassmannElement(rank));
  v[direction] = GrassmannElement::scalar(rank, 1);
  return v;
}

SuperVector scale_vector(const GrassmannElement& a, const SuperVector& v) {
  SuperVector out;
  for (const auto& c : v) out.push_back(a * c);
  return out;
}

SuperVector subtract(const SuperVector& a, const SuperVector& b) {
  SuperVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

std::string tuple_text(std::span<const unsigned> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
  return s + ")";
}

/// Every tuple in {0..base-1}^length.
std::vector<std::vector<unsigned>> all_tuples(unsigned base, unsigned length) {
  std::vector<std::vector<unsigned>> out;
  if (base == 0 && length > 0) return out;
  std::vector<unsigned> t(length, 0);
  while (true) {
    out.push_back(t);
    unsigned i = 0;
    while (i < length && ++t[i] == base) t[i++] = 0;
    if (i == length) break;
  }
  return out;
}

}  // namespace

BgnQuotient bgn_quotient(const Skeleton& f) {
  const unsigned p = f.source().even_dim;
  const unsigned q = f.source().odd_dim;
  BgnQuotient result;
  result.extended = SuperSpace{2 * p + 1, 2 * q};
  const SuperSpace& e = result.extended;
  const DeWittDomain whole(e);
  SuperFunction t = SuperFunction::even_coordinate(e, 2 * p);
  std::vector<SuperFunction> same_even, same_odd, moved_even, moved_odd;
  for (unsigned i = 0; i < p; ++i) {
    same_even.push_back(SuperFunction::even_coordinate(e, i));
    moved_even.push_back(same_even.back() + t * SuperFunction::even_coordinate(e, p + i));
  }
  for (unsigned j = 0; j < q; ++j) {
    same_odd.push_back(SuperFunction::odd_coordinate(e, j));
    moved_odd.push_back(same_odd.back() + t * SuperFunction::odd_coordinate(e, q + j));
  }
  for (const auto& h : f.components()) {
    result.lifted.push_back(sf_substitute(h, e, whole, same_even, same_odd));
    result.shifted.push_back(sf_substitute(h, e, whole, moved_even, moved_odd));
    SuperFunction difference = result.shifted.back() - result.lifted.back();
    SuperFunction quotient(e);
    for (const auto& [j, c] : difference.terms()) {
      auto reduced = c.numerator().divide_by_variable(2 * p);
      if (!reduced) throw Error("difference quotient numerator does not vanish at t = 0");
      quotient.add_term(j, CoeffFn::quotient(*reduced, c.denominator()));
    }
    result.quotient.push_back(std::move(quotient));
  }
  return result;
}

CheckReport check_bgn(const Skeleton& f) {
  CheckReport report;
  report.name = "difference quotient";
  const unsigned p = f.source().even_dim;
  const unsigned q = f.source().odd_dim;
  BgnQuotient bgn = bgn_quotient(f);
  const SuperSpace& e = bgn.extended;
  const DeWittDomain whole(e);
  SuperFunction t = SuperFunction::even_coordinate(e, 2 * p);
  std::vector<SuperFunction> at_zero_even, at_zero_odd;
  for (unsigned i = 0; i < 2 * p; ++i) at_zero_even.push_back(SuperFunction::even_coordinate(e, i));
  at_zero_even.push_back(SuperFunction(e));
  for (unsigned j = 0; j < 2 * q; ++j) at_zero_odd.push_back(SuperFunction::odd_coordinate(e, j));
  for (unsigned c = 0; c < f.components().size(); ++c) {
    report.record(bgn.shifted[c] - bgn.lifted[c] == t * bgn.quotient[c],
                  "f(x + t v) - f(x) != t f[1](x, v, t) for component " + std::to_string(c + 1));
    SuperFunction expected(e);
    for (unsigned i = 0; i < p; ++i) {
      std::vector<unsigned> dir{i};
      SuperFunction d = lift_to(derivative(f, dir)[c], e);
      expected = expected + SuperFunction::even_coordinate(e, p + i) * d;
    }
    for (unsigned j = 0; j < q; ++j) {
      std::vector<unsigned> dir{p + j};
      SuperFunction d = lift_to(derivative(f, dir)[c], e);
      expected = expected + d * SuperFunction::odd_coordinate(e, q + j);
    }
    SuperFunction first = sf_substitute(bgn.quotient[c], e, whole, at_zero_even, at_zero_odd);
    report.record(first == expected, "f[1](x, v, 0) disagrees with the first derivative for component " +
                                         std::to_string(c + 1));
  }
  return report;
}

std::vector<SuperFunction> derivative(const Skeleton& f, std::span<const unsigned> directions) {
  const unsigned p = f.source().even_dim;
  for (unsigned b : directions)
    if (b >= f.source().total()) throw SpaceMismatch("derivative direction out of range");
  std::vector<SuperFunction> out;
  for (auto c : f.components()) {
    for (auto it = directions.rbegin(); it != directions.rend(); ++it)
      c = *it < p ? sf_partial(c, *it) : sf_odd_partial(c, *it - p + 1);
    out.push_back(std::move(c));
  }
  return out;
}

std::map<std::vector<unsigned>, std::vector<SuperFunction>> derivative(const Skeleton& f, unsigned k) {
  std::map<std::vector<unsigned>, std::vector<SuperFunction>> out;
  for (const auto& t : all_tuples(f.source().total(), k)) out.emplace(t, derivative(f, t));
  return out;
}

CheckReport check_derivative_symmetry(const Skeleton& f, unsigned k) {
  CheckReport report;
  report.name = "derivative symmetry";
  const unsigned p = f.source().even_dim;
  auto data = derivative(f, k);
  for (const auto& [t, values] : data)
    for (unsigned i = 0; i + 1 < k; ++i) {
      std::vector<unsigned> s = t;
      std::swap(s[i], s[i + 1]);
      bool both_odd = t[i] >= p && t[i + 1] >= p;
      const auto& other = data.at(s);
      bool ok = true;
      for (std::size_t c = 0; c < values.size(); ++c)
        ok = ok && values[c] == (both_odd ? -other[c] : other[c]);
      report.record(ok, "d^" + std::to_string(k) + " f" + tuple_text(t) + " breaks symmetry");
    }
  return report;
}

SuperVector lambda_differential(const Skeleton& f, const LambdaPoint& x, const LambdaPoint& v) {
  const unsigned n = x.rank();
  if (v.rank() != n) throw RankMismatch("direction and point have different ranks");
  if (v.space() != x.space()) throw SpaceMismatch("direction and point in different spaces");
  const unsigned big = n + 2;
  GrassmannElement eps = GrassmannElement::monomial(big, MultiIndex::from_labels(std::vector<unsigned>{n + 1, n + 2}), 1);
  LambdaPoint wide = v.with_rank(big);
  std::vector<GrassmannElement> even, odd;
  for (const auto& c : wide.even_values()) even.push_back(eps * c);
  for (const auto& c : wide.odd_values()) odd.push_back(eps * c);
  LambdaPoint moved = x.with_rank(big) + LambdaPoint(x.space(), big, std::move(even), std::move(odd));
  SuperVector value = eval_subst(f, moved).as_vector();
  const MultiIndex marker = MultiIndex::from_labels(std::vector<unsigned>{n + 1, n + 2});
  SuperVector out;
  for (const auto& c : value) {
    GrassmannElement d(n);
    for (const auto& [index, coefficient] : c.terms())
      if ((index.mask() & marker.mask()) == marker.mask()) d.add_term(index.without(marker), coefficient);
    out.push_back(std::move(d));
  }
  return out;
}

CheckReport check_lambda_linearity(const Skeleton& f, std::span<const LinearitySample> samples) {
  CheckReport report;
  report.name = "lambda_0-linearity";
  for (const auto& s : samples) {
    if (!s.a.is_even()) throw ParityError("linearity scalars must be even");
    std::vector<GrassmannElement> even, odd;
    for (const auto& c : s.v.even_values()) even.push_back(s.a * c);
    for (const auto& c : s.v.odd_values()) odd.push_back(s.a * c);
    LambdaPoint av(s.v.space(), s.v.rank(), std::move(even), std::move(odd));
    SuperVector dv = lambda_differential(f, s.x, s.v);
    report.record(lambda_differential(f, s.x, av) == scale_vector(s.a, dv), "df(x)(a v) != a df(x)(v)");
    std::vector<SuperVector> args{s.v.as_vector()};
    report.record(family_fk(f, s.x, args) == dv, "assembled first derivative differs from df(x)");
  }
  return report;
}

std::vector<Skeleton> hadamard_decompose(const Skeleton& f, std::span<const Rational> x0) {
  if (!f.is_polynomial()) throw Error("Hadamard decomposition needs polynomial coefficients");
  const SuperSpace& s = f.source();
  const unsigned p = s.even_dim;
  const unsigned q = s.odd_dim;
  if (x0.size() != p) throw SpaceMismatch("base point has wrong dimension");
  BgnQuotient bgn = bgn_quotient(f);
  const DeWittDomain whole(s);
  std::vector<Skeleton> factors;
  for (unsigned k = 0; k < p; ++k) {
    std::vector<SuperFunction> even, odd;
    for (unsigned i = 0; i < p; ++i)
      even.push_back(i <= k ? SuperFunction::constant(s, x0[i]) : SuperFunction::even_coordinate(s, i));
    for (unsigned i = 0; i < p; ++i) even.push_back(SuperFunction::constant(s, i == k ? 1 : 0));
    even.push_back(SuperFunction::even_coordinate(s, k) - SuperFunction::constant(s, x0[k]));
    for (unsigned j = 0; j < q; ++j) odd.push_back(SuperFunction::odd_coordinate(s, j));
    for (unsigned j = 0; j < q; ++j) odd.push_back(SuperFunction(s));
    std::vector<SuperFunction> components;
    for (const auto& c : bgn.quotient) components.push_back(sf_substitute(c, s, whole, even, odd));
    factors.emplace_back(s, f.source_domain(), f.target(), f.target_domain(), std::move(components));
  }
  return factors;
}

CheckReport check_hadamard(const Skeleton& f, std::span<const Rational> x0, std::span<const Skeleton> factors) {
  CheckReport report;
  report.name = "Hadamard identity";
  const SuperSpace& s = f.source();
  const DeWittDomain whole(s);
  if (factors.size() != s.even_dim) {
    report.fail("expected one factor per even coordinate");
    return report;
  }
  std::vector<SuperFunction> at_base, odd;
  for (unsigned i = 0; i < s.even_dim; ++i) at_base.push_back(SuperFunction::constant(s, x0[i]));
  for (unsigned j = 0; j < s.odd_dim; ++j) odd.push_back(SuperFunction::odd_coordinate(s, j));
  for (unsigned c = 0; c < f.components().size(); ++c) {
    SuperFunction lhs = f.component(c) - sf_substitute(f.component(c), s, whole, at_base, odd);
    SuperFunction rhs(s);
    for (unsigned k = 0; k < s.even_dim; ++k)
      rhs = rhs + (SuperFunction::even_coordinate(s, k) - SuperFunction::constant(s, x0[k])) *
                      factors[k].component(c);
    report.record(lhs == rhs, "f(y) - f(x0) != sum (y_j - x0_j) h_j(y) for component " + std::to_string(c + 1));
  }
  return report;
}

namespace {

/// Every exponent vector of total degree <= order.
void multi_indices(unsigned nvars, unsigned order, Exponents& current, unsigned var, std::vector<Exponents>& out) {
  if (var == nvars) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; e <= order; ++e) {
    current[var] = e;
    multi_indices(nvars, order - e, current, var + 1, out);
  }
  current[var] = 0;
}

std::vector<Exponents> multi_indices(unsigned nvars, unsigned order) {
  std::vector<Exponents> out;
  Exponents current(nvars, 0);
  multi_indices(nvars, order, current, 0, out);
  return out;
}

}  // namespace

Skeleton taylor_polynomial(const Skeleton& f, std::span<const Rational> x0, unsigned n) {
  const SuperSpace& s = f.source();
  const unsigned p = s.even_dim;
  if (x0.size() != p) throw SpaceMismatch("base point has wrong dimension");
  std::vector<Rational> base(x0.begin(), x0.end());
  if (!f.source_domain().contains_body(base)) throw DomainError("expansion point lies outside the domain");
  std::vector<Polynomial> shifts;
  for (unsigned i = 0; i < p; ++i) shifts.push_back(Polynomial::variable(p, i) - Polynomial::constant(p, x0[i]));
  std::vector<SuperFunction> components;
  for (const auto& c : f.components()) {
    DerivativeTable table(c, base);
    SuperFunction out(s);
    for (const auto& [j, coefficient] : c.terms()) {
      int order = static_cast<int>(n) - static_cast<int>(j.size());
      if (order < 0) continue;
      Polynomial poly(p);
      for (const auto& alpha : multi_indices(p, static_cast<unsigned>(order))) {
        Rational value = table.value(j, alpha);
        if (value == 0) continue;
        Polynomial monomial = Polynomial::constant(p, 1);
        for (unsigned i = 0; i < p; ++i) {
          value /= factorial(alpha[i]);
          monomial = monomial * shifts[i].pow(alpha[i]);
        }
        poly += value * monomial;
      }
      out.add_term(j, CoeffFn(std::move(poly)));
    }
    components.push_back(std::move(out));
  }
  return Skeleton(s, f.source_domain(), f.target(), f.target_domain(), std::move(components));
}

CheckReport check_taylor_polynomial(const Skeleton& f, const Skeleton& p, std::span<const Rational> x0, unsigned n) {
  CheckReport report;
  report.name = "Taylor polynomial";
  const SuperSpace& s = f.source();
  std::vector<Rational> base(x0.begin(), x0.end());
  for (unsigned c = 0; c < f.components().size(); ++c) {
    SuperFunction remainder = f.component(c) - p.component(c);
    report.record(p.component(c).is_polynomial(), "Taylor polynomial has a non-polynomial coefficient");
    DerivativeTable table(remainder, base);
    std::set<MultiIndex> indices;
    for (const auto& [j, coefficient] : f.component(c).terms()) indices.insert(j);
    for (const auto& [j, coefficient] : p.component(c).terms()) indices.insert(j);
    for (MultiIndex j : indices) {
      int order = static_cast<int>(n) - static_cast<int>(j.size());
      if (order < 0) continue;
      for (const auto& alpha : multi_indices(s.even_dim, static_cast<unsigned>(order)))
        report.record(table.value(j, alpha) == 0, "remainder has a nonvanishing partial of order <= " +
                                                      std::to_string(order) + " in component " +
                                                      std::to_string(c + 1));
    }
  }
  return report;
}

SuperVector body_derivative(const Skeleton& f, std::span<const Rational> body, std::span<const unsigned> directions) {
  const SuperSpace& s = f.source();
  const unsigned k = static_cast<unsigned>(directions.size());
  const unsigned rank = 2 * k;
  LambdaPoint x = LambdaPoint::from_body(s, rank, body);
  std::vector<GrassmannElement> even = x.even_values();
  for (unsigned i = 0; i < k; ++i) {
    if (directions[i] >= s.even_dim) throw SpaceMismatch("body derivatives take even directions only");
    even[directions[i]] +=
        GrassmannElement::monomial(rank, MultiIndex::from_labels(std::vector<unsigned>{2 * i + 1, 2 * i + 2}), 1);
  }
  LambdaPoint moved(s, rank, std::move(even), x.odd_values());
  const MultiIndex full((MultiIndex::Mask{1} << rank) - 1);
  SuperVector out;
  for (const auto& c : eval_subst(f, moved).as_vector()) out.push_back(GrassmannElement::scalar(0, c.coefficient(full)));
  return out;
}

CheckReport check_def43(const Skeleton& f, std::span<const LambdaPoint> points, Rng& rng, unsigned max_order) {
  CheckReport report;
  report.name = "f^(k) family";
  const SuperSpace& s = f.source();
  const unsigned p = s.even_dim;
  for (const auto& x : points) {
    const unsigned n = x.rank();
    // Supersymmetry on basis arguments, all tuples of length 2.
    for (const auto& t : all_tuples(s.total(), 2)) {
      std::vector<SuperVector> args{basis_vector(s, n, t[0]), basis_vector(s, n, t[1])};
      std::vector<SuperVector> swapped{args[1], args[0]};
      SuperVector a = family_fk(f, x, args);
      SuperVector b = family_fk(f, x, swapped);
      if (t[0] >= p && t[1] >= p) b = scale_vector(GrassmannElement::scalar(n, -1), b);
      report.record(a == b, "f^(2)" + tuple_text(t) + " is not supersymmetric");
    }
    // Supersymmetry on even lambda-valued arguments.
    {
      LambdaPoint u = random_vector_point(rng, s, n);
      LambdaPoint v = random_vector_point(rng, s, n);
      std::vector<SuperVector> args{u.as_vector(), v.as_vector()};
      std::vector<SuperVector> swapped{v.as_vector(), u.as_vector()};
      report.record(family_fk(f, x, args) == family_fk(f, x, swapped), "f^(2) is not symmetric on even arguments");
    }
    // Extension of the body derivatives.
    std::vector<Rational> body = x.body();
    LambdaPoint at_body = LambdaPoint::from_body(s, 0, body);
    for (unsigned k = 1; k <= max_order; ++k)
      for (const auto& t : all_tuples(p, k)) {
        std::vector<SuperVector> args;
        for (unsigned b : t) args.push_back(basis_vector(s, 0, b));
        report.record(family_fk(f, at_body, args) == body_derivative(f, body, t),
                      "f^(" + std::to_string(k) + ")" + tuple_text(t) + " does not extend d^k f_R");
      }
    // Increment identity for a theta_p-supported increment.
    if (n >= 1) {
      unsigned label = std::uniform_int_distribution<unsigned>(1, n)(rng);
      LambdaPoint a = random_supported_point(rng, s, n, label);
      LambdaPoint shifted = x + a;
      for (unsigned k = 0; k < max_order; ++k) {
        std::vector<SuperVector> vs;
        for (unsigned i = 0; i < k; ++i) vs.push_back(random_vector_point(rng, s, n).as_vector());
        std::vector<SuperVector> with_a{a.as_vector()};
        with_a.insert(with_a.end(), vs.begin(), vs.end());
        report.record(family_fk(f, x, with_a) == subtract(family_fk(f, shifted, vs), family_fk(f, x, vs)),
                      "increment identity fails at order " + std::to_string(k));
      }
    }
    // f(x + y) = sum_k 1/k! f^(k)(x)(y, ..., y).
    {
      LambdaPoint y = random_soul_point(rng, s, n);
      SuperVector yv = y.as_vector();
      SuperVector total(f.target().total(), GrassmannElement(n));
      for (unsigned k = 0; k <= n; ++k) {
        std::vector<SuperVector> args(k, yv);
        SuperVector term = family_fk(f, x, args);
        Rational weight = 1 / factorial(k);
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += weight * term[i];
      }
      report.record(total == eval_subst(f, x + y).as_vector(), "expansion of f(x + y) disagrees with substitution");
    }
  }
  return report;
}

}  // namespace superdom
