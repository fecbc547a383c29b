#include "hol/tensor.hpp"

#include "hol/sym3.hpp"

namespace hol {

Tensor random_rational(int dim, int order, std::uint64_t seed, std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("random bound must be >= 1");
  Tensor t(dim, order);
  for (std::size_t f = 0; f < t.size(); ++f) t[f] = CounterRng(seed, f).uniform_rational(bound);
  return t;
}

BasicTensor<double> to_double(const Tensor& t) {
  BasicTensor<double> out(t.dim(), t.order());
  for (std::size_t f = 0; f < t.size(); ++f) out[f] = t[f].get_d();
  return out;
}

Sym3Tensor random_sym3(int n, std::uint64_t seed, std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("random bound must be >= 1");
  Sym3Tensor a(n);
  for (std::size_t p = 0; p < a.size(); ++p) a[p] = CounterRng(seed, p).uniform_rational(bound);
  return a;
}

BasicSym3<CheckedInt> random_integer_sym3(int n, std::uint64_t seed, std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("random bound must be >= 1");
  BasicSym3<CheckedInt> a(n);
  for (std::size_t p = 0; p < a.size(); ++p) {
    std::uint64_t counter = 0;
    a[p] = CounterRng(seed, p).uniform_int(-bound, bound, counter);
  }
  return a;
}

BasicSym3<double> to_double(const Sym3Tensor& a) {
  BasicSym3<double> out(a.dim());
  for (std::size_t p = 0; p < a.size(); ++p) out[p] = a[p].get_d();
  return out;
}

}  // namespace hol
