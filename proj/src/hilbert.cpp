#include "lsc/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lsc {

namespace {

using Coeffs = std::vector<std::int64_t>;

void strip(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

// a * t^d
Coeffs shifted(const Coeffs& a, unsigned d) {
  Coeffs r(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + d] = a[i];
  return r;
}

// a * (1 - t^d)
Coeffs times_one_minus(const Coeffs& a, unsigned d) {
  Coeffs r(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i];
    r[i + d] -= a[i];
  }
  return r;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.packed() < b.packed();
  });
  std::vector<Monomial> kept;
  for (const Monomial& m : gens) {
    bool dominated = false;
    for (const Monomial& k : kept) {
      if (k.divides(m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(m);
  }
  gens = std::move(kept);
}

Coeffs numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  minimalize(gens);
  if (gens.empty()) return {1};
  for (const Monomial& m : gens)
    if (m.degree() == 0) return {};  // unit ideal: zero numerator

  bool coprime = true;
  for (std::size_t j = 1; j < gens.size() && coprime; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!gens[i].coprime_with(gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    Coeffs r{1};
    for (const Monomial& m : gens) r = times_one_minus(r, m.degree());
    return r;
  }

  // Pivot: the variable occurring in the most minimal generators.
  std::size_t pivot = 0, best = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::size_t count = 0;
    for (const Monomial& m : gens)
      if (m.exponent(v) > 0) ++count;
    if (count > best) {
      best = count;
      pivot = v;
    }
  }

  // N(I) = N(I + (x)) + t * N(I : x).
  std::vector<Monomial> plus_gens{Monomial::variable(nvars, pivot)};
  std::vector<Monomial> colon_gens;
  Monomial x = Monomial::variable(nvars, pivot);
  for (const Monomial& m : gens) {
    if (m.exponent(pivot) == 0) {
      plus_gens.push_back(m);
      colon_gens.push_back(m);
    } else {
      colon_gens.push_back(m.divided_by(x));
    }
  }
  return add(numerator_rec(std::move(plus_gens), nvars),
             shifted(numerator_rec(std::move(colon_gens), nvars), 1));
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> leading_terms,
                                            std::size_t nvars) {
  for (const Monomial& m : leading_terms)
    if (m.nvars() != nvars) throw std::logic_error("hilbert_numerator: nvars mismatch");
  Coeffs n = numerator_rec(std::move(leading_terms), nvars);
  strip(n);
  return n;
}

HilbertData dim_degree(std::vector<std::int64_t> numerator, std::size_t nvars) {
  HilbertData data;
  strip(numerator);
  data.numerator = numerator;
  if (numerator.empty()) return data;  // whole-ring quotient: empty scheme

  Coeffs q = std::move(numerator);
  std::size_t cancelled = 0;
  while (std::accumulate(q.begin(), q.end(), std::int64_t{0}) == 0) {
    // q = q / (1 - t), exact because q(1) == 0.
    Coeffs m(q.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      run += q[k];
      m[k] = run;
    }
    q = std::move(m);
    strip(q);
    ++cancelled;
    if (cancelled > nvars) throw std::logic_error("dim_degree: numerator not a Hilbert numerator");
  }
  data.reduced_numerator = q;
  data.projdim = static_cast<int>(nvars - cancelled) - 1;
  data.degree =
      data.projdim >= 0 ? std::accumulate(q.begin(), q.end(), std::int64_t{0}) : 0;
  return data;
}

}  // namespace lsc
