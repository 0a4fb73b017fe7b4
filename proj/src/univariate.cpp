#include "univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace germlab::detail {

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

Dense derivative(const Dense& p) {
  Dense out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * ExactScalar(static_cast<long>(i)));
  trim(out);
  return out;
}

namespace {

/// Long division; returns quotient and leaves the remainder in `num`.
Dense divide(Dense& num, const Dense& den) {
  if (den.empty()) throw std::domain_error("polynomial division by zero");
  trim(num);
  Dense quotient;
  if (num.size() < den.size()) return quotient;
  quotient.assign(num.size() - den.size() + 1, ExactScalar());
  ExactScalar lead_inv = den.back().inverse();
  while (num.size() >= den.size()) {
    std::size_t shift = num.size() - den.size();
    ExactScalar factor = num.back() * lead_inv;
    quotient[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    num.pop_back();
    trim(num);
  }
  trim(quotient);
  return quotient;
}

}  // namespace

Dense remainder(Dense num, const Dense& den) {
  divide(num, den);
  return num;
}

Dense exact_quotient(Dense num, const Dense& den) {
  Dense q = divide(num, den);
  if (!num.empty()) throw std::logic_error("inexact polynomial quotient");
  return q;
}

Dense monic(Dense p) {
  trim(p);
  if (p.empty()) return p;
  ExactScalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::vector<int> root_multiplicities(const Dense& p) {
  Dense f = p;
  trim(f);
  if (f.empty()) throw std::domain_error("root multiplicities of zero polynomial");
  std::vector<int> out;
  if (degree(f) == 0) return out;
  // Yun: a_i is the product of the roots of multiplicity exactly i.
  Dense fp = derivative(f);
  Dense a = gcd(f, fp);
  Dense b = exact_quotient(f, a);
  Dense c = exact_quotient(fp, a);
  Dense d = c;
  {
    Dense bp = derivative(b);
    for (std::size_t i = 0; i < std::max(d.size(), bp.size()); ++i) {
      if (i >= d.size()) d.push_back(ExactScalar());
      if (i < bp.size()) d[i] -= bp[i];
    }
    trim(d);
  }
  for (int i = 1; degree(b) > 0; ++i) {
    Dense ai = gcd(b, d);
    for (int k = 0; k < degree(ai); ++k) out.push_back(i);
    b = exact_quotient(b, ai);
    c = exact_quotient(d, ai);
    Dense bp = derivative(b);
    d = c;
    for (std::size_t j = 0; j < std::max(d.size(), bp.size()); ++j) {
      if (j >= d.size()) d.push_back(ExactScalar());
      if (j < bp.size()) d[j] -= bp[j];
    }
    trim(d);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace germlab::detail
