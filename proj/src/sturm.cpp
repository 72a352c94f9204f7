#include <optional>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/series.hpp"

namespace hecke {

namespace {

int sign(const Rational& x) { return sgn(x); }

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Integer polynomial with the same roots.
std::vector<Integer> primitive_integer_coeffs(const Polynomial& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * den;
    out.push_back(scaled.get_num());
  }
  return out;
}

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

int count_positive_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error("Sturm sequence of the zero polynomial");
  if (p.degree() == 0) return 0;
  // Roots at t = 0 are not in the open interval; strip them so the sign at 0 is defined.
  Polynomial f = p;
  while (f[0] == 0) f = divmod(f, Polynomial{Rational(0), Rational(1)}).first;
  std::vector<Polynomial> chain{f, f.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Polynomial rem = divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.is_zero()) break;
    chain.push_back(Rational(-1) * rem);
  }
  std::vector<int> at_zero, at_infinity;
  for (const auto& g : chain) {
    if (g.is_zero()) continue;
    at_zero.push_back(sign(g[0]));
    at_infinity.push_back(sign(g.leading()));
  }
  return sign_variations(at_zero) - sign_variations(at_infinity);
}

bool sturm_all_roots_positive(const Polynomial& p) {
  if (p.is_zero()) throw Error("root location of the zero polynomial is undefined");
  if (p[0] == 0) return false;
  if (p.degree() == 0) return true;
  // The square-free part has the same root set, each root simple.
  Polynomial square_free = divmod(p, gcd(p, p.derivative())).first;
  return count_positive_roots(square_free) == square_free.degree();
}

std::optional<std::vector<Rational>> rational_inverse_roots(const Polynomial& p) {
  if (p.is_zero() || p[0] == 0) return std::nullopt;
  std::vector<Rational> inverse_roots;
  Polynomial rest = p;
  while (rest.degree() > 0) {
    auto ints = primitive_integer_coeffs(rest);
    const auto candidates_num = positive_divisors(ints.front());
    const auto candidates_den = positive_divisors(ints.back());
    std::optional<Rational> found;
    for (const auto& a : candidates_num) {
      for (const auto& b : candidates_den) {
        for (int s : {1, -1}) {
          Rational root(s * a, b);
          root.canonicalize();
          if (rest.eval(root) == 0) {
            found = root;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
    inverse_roots.push_back(1 / *found);
    rest = divmod(rest, Polynomial{Rational(1), -1 / *found}).first;
  }
  return inverse_roots;
}

}  // namespace hecke
