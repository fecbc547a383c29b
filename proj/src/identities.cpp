#include "hol/identities.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace hol {

namespace {

void require_dim4(const CurvTensor& r) {
  if (r.dim() < 4) throw std::invalid_argument("4-form identities need n >= 4");
}

constexpr std::array<int, 4> kAllAxes{0, 1, 2, 3};

}  // namespace

AlternatingForm::AlternatingForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (degree < 0 || degree > dim) throw std::invalid_argument("form degree outside [0, n]");
  std::vector<int> idx(static_cast<std::size_t>(degree));
  // Lexicographic enumeration of increasing tuples.
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == degree) {
      sets_.push_back(idx);
      return;
    }
    for (int v = start; v < dim; ++v) {
      idx[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  values_.assign(sets_.size(), Rational(0));
}

bool AlternatingForm::is_zero() const {
  for (const auto& v : values_) {
    if (!hol::is_zero(v)) return false;
  }
  return true;
}

Tensor AlternatingForm::to_dense() const {
  if (degree_ > Tensor::kMaxOrder) throw std::invalid_argument("form degree too large for a dense tensor");
  Tensor out(dim_, degree_);
  for (std::size_t s = 0; s < sets_.size(); ++s) {
    if (hol::is_zero(values_[s])) continue;
    std::vector<int> perm(sets_[s].size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> idx(perm.size());
    do {
      for (std::size_t r = 0; r < perm.size(); ++r) idx[r] = sets_[s][static_cast<std::size_t>(perm[r])];
      out.at(idx) = detail::permutation_sign(perm) > 0 ? values_[s] : Rational(-values_[s]);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::optional<std::pair<std::vector<int>, Rational>> first_nonzero(const Tensor& t) {
  std::vector<int> idx(static_cast<std::size_t>(t.order()));
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (is_zero(t[f])) continue;
    t.unflatten(f, idx);
    return std::make_pair(idx, t[f]);
  }
  return std::nullopt;
}

Tensor pontryagin_quadratic(const CurvTensor& r) {
  require_dim4(r);
  const int n = r.dim();
  Tensor t(n, 4);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Rational acc = 0;
          for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) acc += r(i, j, a, b) * r(k, l, b, a);
          }
          t(i, j, k, l) = acc;
        }
      }
    }
  }
  return antisymmetrize(t, kAllAxes);
}

Tensor cubic_identity(const CurvTensor& r) {
  require_dim4(r);
  const int n = r.dim();
  // Partial products over (c, d), indexed [k][b][l][a] and [k][a][l][b].
  Tensor m1(n, 4);
  Tensor m2(n, 4);
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      for (int l = 0; l < n; ++l) {
        for (int y = 0; y < n; ++y) {
          Rational s1 = 0;
          Rational s2 = 0;
          for (int c = 0; c < n; ++c) {
            for (int d = 0; d < n; ++d) {
              s1 += r(k, x, c, d) * r(l, d, y, c);  // x = b, y = a
              s2 += r(k, c, x, d) * r(l, d, y, c);  // x = a, y = b
            }
          }
          m1(k, x, l, y) = s1;
          m2(k, x, l, y) = s2;
        }
      }
    }
  }
  Tensor t(n, 4);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Rational acc = 0;
          for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
              const Rational& f = r(i, a, j, b);
              if (is_zero(f)) continue;
              acc += f * (m1(k, b, l, a) - 2 * m2(k, a, l, b));
            }
          }
          t(i, j, k, l) = acc;
        }
      }
    }
  }
  return antisymmetrize(t, kAllAxes);
}

AlternatingForm pontryagin_form(const CurvTensor& r, int p) {
  const int n = r.dim();
  if (p < 1 || 2 * p > n) throw std::invalid_argument("pontryagin_form needs p >= 1 and 2p <= n");
  const std::size_t masks = std::size_t{1} << n;
  const auto nn = static_cast<std::size_t>(n);
  // state[mask][first][last]
  auto at = [&](std::size_t mask, int first, int last) {
    return (mask * nn + static_cast<std::size_t>(first)) * nn + static_cast<std::size_t>(last);
  };
  std::vector<Rational> state(masks * nn * nn, Rational(0));
  for (int a = 0; a < n; ++a) state[at(0, a, a)] = 1;

  for (int step = 0; step < p; ++step) {
    std::vector<Rational> next(state.size(), Rational(0));
    for (std::size_t mask = 0; mask < masks; ++mask) {
      if (std::popcount(mask) != 2 * step) continue;
      for (int first = 0; first < n; ++first) {
        for (int last = 0; last < n; ++last) {
          const Rational& v = state[at(mask, first, last)];
          if (is_zero(v)) continue;
          for (int x = 0; x < n; ++x) {
            if (mask >> x & 1U) continue;
            for (int y = 0; y < n; ++y) {
              if (y == x || (mask >> y & 1U)) continue;
              // Sign of sorting (sorted(mask), x, y).
              const int above = std::popcount(mask >> (x + 1)) + std::popcount(mask >> (y + 1)) + (x > y ? 1 : 0);
              const std::size_t m2 = mask | (std::size_t{1} << x) | (std::size_t{1} << y);
              for (int nxt = 0; nxt < n; ++nxt) {
                const Rational& rv = r(x, y, last, nxt);
                if (is_zero(rv)) continue;
                if (above % 2 == 0) {
                  next[at(m2, first, nxt)] += v * rv;
                } else {
                  next[at(m2, first, nxt)] -= v * rv;
                }
              }
            }
          }
        }
      }
    }
    state = std::move(next);
  }

  AlternatingForm q(n, 2 * p);
  for (std::size_t s = 0; s < q.index_sets().size(); ++s) {
    std::size_t mask = 0;
    for (int v : q.index_sets()[s]) mask |= std::size_t{1} << v;
    Rational acc = 0;
    for (int a = 0; a < n; ++a) acc += state[at(mask, a, a)];
    q.component(s) = acc;
  }
  return q;
}

Tensor bianchi_residual(const Tensor& r) {
  if (r.order() != 4) throw std::invalid_argument("bianchi_residual needs an order-4 tensor");
  const int n = r.dim();
  Tensor out(n, 4);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) out(i, j, k, l) = r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l);
      }
    }
  }
  return out;
}

}  // namespace hol
