#include "hol/miner.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "hol/hessian_map.hpp"
#include "hol/matrix.hpp"
#include "hol/rng.hpp"
#include "hol/sym3.hpp"

namespace hol {

namespace {

constexpr int kMaxDegree = 3;

// A relabeling of slots by a symmetry of R on each factor plus a factor
// permutation, with the sign it introduces through R's antisymmetries.
struct SlotTransform {
  std::vector<int> map;
  int sign = 1;
};

const std::vector<SlotTransform>& transforms(int p) {
  static std::array<std::vector<SlotTransform>, kMaxDegree + 1> cache;
  auto& out = cache[static_cast<std::size_t>(p)];
  if (!out.empty()) return out;

  struct Local {
    std::array<int, 4> map;
    int sign;
  };
  std::vector<Local> local;
  for (int s01 = 0; s01 < 2; ++s01) {
    for (int s23 = 0; s23 < 2; ++s23) {
      for (int ex = 0; ex < 2; ++ex) {
        Local g{};
        for (int q = 0; q < 4; ++q) {
          int r = q;
          if (s01 && r < 2) r = 1 - r;
          if (s23 && r >= 2) r = 5 - r;
          if (ex) r = (r + 2) % 4;
          g.map[static_cast<std::size_t>(q)] = r;
        }
        g.sign = ((s01 + s23) % 2 == 0) ? 1 : -1;
        local.push_back(g);
      }
    }
  }

  std::vector<int> factor_perm(static_cast<std::size_t>(p));
  std::iota(factor_perm.begin(), factor_perm.end(), 0);
  do {
    std::vector<std::size_t> choice(static_cast<std::size_t>(p), 0);
    for (;;) {
      SlotTransform t;
      t.map.resize(static_cast<std::size_t>(4 * p));
      for (int f = 0; f < p; ++f) {
        const Local& g = local[choice[static_cast<std::size_t>(f)]];
        t.sign *= g.sign;
        for (int q = 0; q < 4; ++q) {
          t.map[static_cast<std::size_t>(4 * f + q)] =
              4 * factor_perm[static_cast<std::size_t>(f)] + g.map[static_cast<std::size_t>(q)];
        }
      }
      out.push_back(std::move(t));
      std::size_t f = 0;
      while (f < choice.size() && ++choice[f] == local.size()) choice[f++] = 0;
      if (f == choice.size()) break;
    }
  } while (std::next_permutation(factor_perm.begin(), factor_perm.end()));
  return out;
}

std::string key_of(const std::vector<int>& partner) {
  std::string k(partner.size(), '\0');
  for (std::size_t s = 0; s < partner.size(); ++s) k[s] = static_cast<char>(partner[s] + 1);
  return k;
}

// Image of `partner` under t, and the total sign (R symmetries times the
// reordering of the free labels).
std::pair<std::vector<int>, int> transform_pattern(const std::vector<int>& partner, const SlotTransform& t) {
  std::vector<int> img(partner.size(), -1);
  std::vector<int> free_images;
  for (std::size_t s = 0; s < partner.size(); ++s) {
    const int ts = t.map[s];
    if (partner[s] < 0) {
      free_images.push_back(ts);
    } else {
      img[static_cast<std::size_t>(ts)] = t.map[static_cast<std::size_t>(partner[s])];
    }
  }
  return {std::move(img), t.sign * detail::permutation_sign(free_images)};
}

void validate_pattern(const ContractionPattern& p) {
  if (p.degree < 1 || p.degree > kMaxDegree) throw std::invalid_argument("pattern degree outside [1, 3]");
  if (static_cast<int>(p.partner.size()) != 4 * p.degree) throw std::invalid_argument("pattern slot count mismatch");
  int free = 0;
  for (std::size_t s = 0; s < p.partner.size(); ++s) {
    const int t = p.partner[s];
    if (t < 0) {
      ++free;
      continue;
    }
    if (t >= static_cast<int>(p.partner.size()) || static_cast<std::size_t>(t) == s ||
        p.partner[static_cast<std::size_t>(t)] != static_cast<int>(s)) {
      throw std::invalid_argument("pattern pairing is not a perfect matching");
    }
  }
  if (free != 4) throw std::invalid_argument("pattern must have exactly four free slots");
}

// --- contraction engine ---------------------------------------------------

template <class T>
struct Operand {
  std::vector<int> labels;
  std::vector<T> data;
};

std::size_t power(int n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= static_cast<std::size_t>(n);
  return r;
}

std::vector<std::size_t> strides_for(std::size_t len, int n) {
  std::vector<std::size_t> s(len);
  std::size_t acc = 1;
  for (std::size_t q = len; q-- > 0;) {
    s[q] = acc;
    acc *= static_cast<std::size_t>(n);
  }
  return s;
}

// Sums over labels repeated inside one operand.
template <class T>
Operand<T> trace_self(const Operand<T>& x, int n) {
  std::map<int, int> count;
  for (int l : x.labels) ++count[l];
  Operand<T> out;
  for (int l : x.labels) {
    if (count[l] == 1) out.labels.push_back(l);
  }
  if (out.labels.size() == x.labels.size()) return x;
  out.data.assign(power(n, out.labels.size()), T(0));
  const auto out_strides = strides_for(out.labels.size(), n);
  std::vector<int> idx(x.labels.size());
  for (std::size_t f = 0; f < x.data.size(); ++f) {
    std::size_t rem = f;
    for (std::size_t q = idx.size(); q-- > 0;) {
      idx[q] = static_cast<int>(rem % static_cast<std::size_t>(n));
      rem /= static_cast<std::size_t>(n);
    }
    std::map<int, int> value;
    bool consistent = true;
    for (std::size_t q = 0; q < idx.size() && consistent; ++q) {
      auto [it, inserted] = value.emplace(x.labels[q], idx[q]);
      if (!inserted && it->second != idx[q]) consistent = false;
    }
    if (!consistent) continue;
    std::size_t o = 0;
    for (std::size_t q = 0; q < out.labels.size(); ++q) {
      o += out_strides[q] * static_cast<std::size_t>(value[out.labels[q]]);
    }
    out.data[o] += x.data[f];
  }
  return out;
}

template <class T>
Operand<T> contract_pair(const Operand<T>& x, const Operand<T>& y, int n) {
  std::vector<int> uni = x.labels;
  for (int l : y.labels) {
    if (std::find(uni.begin(), uni.end(), l) == uni.end()) uni.push_back(l);
  }
  Operand<T> out;
  for (int l : uni) {
    const bool in_x = std::find(x.labels.begin(), x.labels.end(), l) != x.labels.end();
    const bool in_y = std::find(y.labels.begin(), y.labels.end(), l) != y.labels.end();
    if (!(in_x && in_y)) out.labels.push_back(l);
  }
  out.data.assign(power(n, out.labels.size()), T(0));

  const auto xs = strides_for(x.labels.size(), n);
  const auto ys = strides_for(y.labels.size(), n);
  const auto os = strides_for(out.labels.size(), n);
  const std::size_t u = uni.size();
  std::vector<std::size_t> sx(u, 0), sy(u, 0), so(u, 0);
  for (std::size_t q = 0; q < u; ++q) {
    for (std::size_t a = 0; a < x.labels.size(); ++a) {
      if (x.labels[a] == uni[q]) sx[q] = xs[a];
    }
    for (std::size_t a = 0; a < y.labels.size(); ++a) {
      if (y.labels[a] == uni[q]) sy[q] = ys[a];
    }
    for (std::size_t a = 0; a < out.labels.size(); ++a) {
      if (out.labels[a] == uni[q]) so[q] = os[a];
    }
  }

  std::vector<int> counter(u, 0);
  std::size_t ox = 0, oy = 0, oo = 0;
  const std::size_t total = power(n, u);
  for (std::size_t it = 0; it < total; ++it) {
    out.data[oo] += x.data[ox] * y.data[oy];
    for (std::size_t q = u; q-- > 0;) {
      ox += sx[q];
      oy += sy[q];
      oo += so[q];
      if (++counter[q] < n) break;
      counter[q] = 0;
      ox -= sx[q] * static_cast<std::size_t>(n);
      oy -= sy[q] * static_cast<std::size_t>(n);
      oo -= so[q] * static_cast<std::size_t>(n);
    }
  }
  return out;
}

std::size_t union_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t s = a.size();
  for (int l : b) {
    if (std::find(a.begin(), a.end(), l) == a.end()) ++s;
  }
  return s;
}

std::vector<std::array<int, 4>> increasing_quadruples(int n) {
  std::vector<std::array<int, 4>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) out.push_back({i, j, k, l});
  return out;
}

}  // namespace

std::vector<int> ContractionPattern::free_slots() const {
  std::vector<int> out;
  for (std::size_t s = 0; s < partner.size(); ++s) {
    if (partner[s] < 0) out.push_back(static_cast<int>(s));
  }
  return out;
}

std::string ContractionPattern::notation() const {
  std::vector<char> label(partner.size(), '?');
  const char* free_names = "ijkl";
  const char* bound_names = "abcdefgh";
  int next_free = 0;
  int next_bound = 0;
  for (std::size_t s = 0; s < partner.size(); ++s) {
    if (partner[s] < 0) {
      label[s] = free_names[next_free++];
    } else if (static_cast<std::size_t>(partner[s]) > s) {
      label[s] = bound_names[next_bound];
      label[static_cast<std::size_t>(partner[s])] = bound_names[next_bound];
      ++next_bound;
    }
  }
  std::string out;
  for (int f = 0; f < degree; ++f) {
    if (f) out += ' ';
    out += "R(";
    for (int q = 0; q < 4; ++q) {
      if (q) out += ',';
      out += label[static_cast<std::size_t>(4 * f + q)];
    }
    out += ')';
  }
  return out;
}

SignedPattern pattern_from_labels(const std::vector<std::string>& factors) {
  ContractionPattern p;
  p.degree = static_cast<int>(factors.size());
  p.partner.assign(4 * factors.size(), -1);
  std::map<char, std::vector<int>> where;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (factors[f].size() != 4) throw std::invalid_argument("each factor needs four labels");
    for (std::size_t q = 0; q < 4; ++q) where[factors[f][q]].push_back(static_cast<int>(4 * f + q));
  }
  std::vector<int> free_rank;
  for (std::size_t s = 0; s < p.partner.size(); ++s) {
    const char c = factors[s / 4][s % 4];
    const auto& at = where[c];
    const std::string free_names = "ijkl";
    if (free_names.find(c) != std::string::npos) {
      if (at.size() != 1) throw std::invalid_argument(std::string("free label '") + c + "' must occur once");
      free_rank.push_back(static_cast<int>(free_names.find(c)));
      continue;
    }
    if (at.size() != 2) throw std::invalid_argument(std::string("label '") + c + "' must occur twice");
    p.partner[s] = at[0] == static_cast<int>(s) ? at[1] : at[0];
  }
  validate_pattern(p);
  return SignedPattern{std::move(p), detail::permutation_sign(free_rank)};
}

SignedPattern canonicalize(const ContractionPattern& pattern) {
  validate_pattern(pattern);
  std::vector<int> best;
  int best_sign = 0;
  std::unordered_map<std::string, int> seen;
  bool vanishes = false;
  for (const auto& t : transforms(pattern.degree)) {
    auto [img, sign] = transform_pattern(pattern.partner, t);
    auto [it, inserted] = seen.emplace(key_of(img), sign);
    if (!inserted && it->second != sign) vanishes = true;
    if (best.empty() || img < best) {
      best = std::move(img);
      best_sign = sign;
    }
  }
  return SignedPattern{ContractionPattern{pattern.degree, std::move(best)}, vanishes ? 0 : best_sign};
}

std::vector<ContractionPattern> enumerate_patterns(int p) {
  if (p < 2 || p > kMaxDegree) throw std::invalid_argument("pattern degree must be 2 or 3");
  const int slots = 4 * p;
  std::vector<ContractionPattern> result;
  std::unordered_set<std::string> visited;

  std::vector<int> partner(static_cast<std::size_t>(slots), -1);
  auto process = [&]() {
    if (visited.count(key_of(partner))) return;
    std::unordered_map<std::string, int> orbit;
    bool vanishes = false;
    std::string best;
    for (const auto& t : transforms(p)) {
      auto [img, sign] = transform_pattern(partner, t);
      std::string k = key_of(img);
      auto [it, inserted] = orbit.emplace(k, sign);
      if (!inserted && it->second != sign) vanishes = true;
      if (best.empty() || k < best) best = k;
    }
    for (const auto& [k, s] : orbit) visited.insert(k);
    if (vanishes) return;
    ContractionPattern c{p, std::vector<int>(static_cast<std::size_t>(slots))};
    for (std::size_t s = 0; s < best.size(); ++s) c.partner[s] = static_cast<int>(best[s]) - 1;
    result.push_back(std::move(c));
  };

  // Perfect matchings on the non-free slots.
  auto match = [&](auto&& self) -> void {
    std::size_t first = 0;
    while (first < partner.size() && partner[first] != -2) ++first;
    if (first == partner.size()) {
      process();
      return;
    }
    for (std::size_t s = first + 1; s < partner.size(); ++s) {
      if (partner[s] != -2) continue;
      partner[first] = static_cast<int>(s);
      partner[s] = static_cast<int>(first);
      self(self);
      partner[first] = -2;
      partner[s] = -2;
    }
  };

  std::array<int, 4> fr{0, 1, 2, 3};
  for (;;) {
    std::fill(partner.begin(), partner.end(), -2);
    for (int s : fr) partner[static_cast<std::size_t>(s)] = -1;
    match(match);
    // Next 4-subset in lexicographic order.
    int q = 3;
    while (q >= 0 && fr[static_cast<std::size_t>(q)] == slots - 4 + q) --q;
    if (q < 0) break;
    ++fr[static_cast<std::size_t>(q)];
    for (int r = q + 1; r < 4; ++r) fr[static_cast<std::size_t>(r)] = fr[static_cast<std::size_t>(r - 1)] + 1;
  }
  std::sort(result.begin(), result.end());
  return result;
}

template <class T>
BasicTensor<T> contract_pattern(const ContractionPattern& pattern, const BasicTensor<T>& r) {
  validate_pattern(pattern);
  if (r.order() != 4) throw std::invalid_argument("patterns contract order-4 tensors");
  const int n = r.dim();

  std::vector<int> label(pattern.partner.size(), -1);
  int next_free = 0;
  int next_bound = 4;
  for (std::size_t s = 0; s < pattern.partner.size(); ++s) {
    if (pattern.partner[s] < 0) {
      label[s] = next_free++;
    } else if (static_cast<std::size_t>(pattern.partner[s]) > s) {
      label[s] = label[static_cast<std::size_t>(pattern.partner[s])] = next_bound++;
    }
  }

  std::vector<Operand<T>> ops;
  const std::vector<T> base(r.entries().begin(), r.entries().end());
  for (int f = 0; f < pattern.degree; ++f) {
    Operand<T> op;
    op.labels.assign(label.begin() + 4 * f, label.begin() + 4 * f + 4);
    op.data = base;
    ops.push_back(trace_self(op, n));
  }
  while (ops.size() > 1) {
    std::size_t bx = 0, by = 1, best = ~std::size_t{0};
    for (std::size_t x = 0; x < ops.size(); ++x) {
      for (std::size_t y = x + 1; y < ops.size(); ++y) {
        const std::size_t u = union_size(ops[x].labels, ops[y].labels);
        if (u < best) {
          best = u;
          bx = x;
          by = y;
        }
      }
    }
    Operand<T> merged = contract_pair(ops[bx], ops[by], n);
    ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(by));
    ops[bx] = std::move(merged);
  }

  const Operand<T>& fin = ops.front();
  BasicTensor<T> out(n, 4);
  std::array<int, 4> idx{};
  std::array<int, 4> ordered{};
  for (std::size_t f = 0; f < fin.data.size(); ++f) {
    std::size_t rem = f;
    for (std::size_t q = 4; q-- > 0;) {
      idx[q] = static_cast<int>(rem % static_cast<std::size_t>(n));
      rem /= static_cast<std::size_t>(n);
    }
    for (std::size_t q = 0; q < 4; ++q) ordered[static_cast<std::size_t>(fin.labels[q])] = idx[q];
    out.at(ordered) = fin.data[f];
  }
  return out;
}

template BasicTensor<Rational> contract_pattern(const ContractionPattern&, const BasicTensor<Rational>&);
template BasicTensor<CheckedInt> contract_pattern(const ContractionPattern&, const BasicTensor<CheckedInt>&);

Tensor evaluate_pattern(const ContractionPattern& pattern, const CurvTensor& r) {
  if (r.dim() < 4) throw std::invalid_argument("pattern evaluation needs n >= 4");
  constexpr std::array<int, 4> axes{0, 1, 2, 3};
  return antisymmetrize(contract_pattern(pattern, r.tensor()), axes);
}

std::vector<CheckedInt> alternating_components(const ContractionPattern& pattern, const BasicTensor<CheckedInt>& r) {
  const BasicTensor<CheckedInt> t = contract_pattern(pattern, r);
  std::vector<CheckedInt> out;
  std::array<int, 4> perm{0, 1, 2, 3};
  std::array<int, 4> idx{};
  for (const auto& q : increasing_quadruples(r.dim())) {
    CheckedInt acc = 0;
    perm = {0, 1, 2, 3};
    do {
      for (std::size_t a = 0; a < 4; ++a) idx[a] = q[static_cast<std::size_t>(perm[a])];
      if (detail::permutation_sign(perm) > 0) {
        acc += t.at(idx);
      } else {
        acc -= t.at(idx);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.push_back(acc);
  }
  return out;
}

namespace {

enum class SampleKind { kRho, kGeneric, kFresh };

BasicTensor<CheckedInt> draw_sample(const MinerConfig& cfg, SampleKind kind, int index) {
  const std::uint64_t stream = derive_seed(cfg.seed, static_cast<std::uint64_t>(kind));
  const std::uint64_t s = derive_seed(stream, static_cast<std::uint64_t>(index));
  if (kind == SampleKind::kGeneric) return random_integer_curvature(cfg.n, s, cfg.sample_bound);
  return rho_raw(random_integer_sym3(cfg.n, s, cfg.sample_bound));
}

// Evaluation rows: one per increasing quadruple, one column per pattern.
std::vector<std::vector<Rational>> sample_rows(const std::vector<ContractionPattern>& patterns,
                                               const BasicTensor<CheckedInt>& r) {
  const std::size_t quads = increasing_quadruples(r.dim()).size();
  std::vector<std::vector<Rational>> rows(quads, std::vector<Rational>(patterns.size()));
  for (std::size_t a = 0; a < patterns.size(); ++a) {
    const auto comps = alternating_components(patterns[a], r);
    for (std::size_t q = 0; q < quads; ++q) rows[q][a] = Rational(static_cast<long>(comps[q].value()));
  }
  return rows;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  }
  return s;
}

struct SamplingResult {
  RowEchelon echelon;
  int samples = 0;
  bool stabilized = false;
};

SamplingResult sample_until_stable(const MinerConfig& cfg, const std::vector<ContractionPattern>& patterns,
                                   SampleKind kind, int initial, int cap) {
  SamplingResult res{RowEchelon(patterns.size())};
  int stable = 0;
  while (res.samples < cap) {
    bool grew = false;
    for (auto& row : sample_rows(patterns, draw_sample(cfg, kind, res.samples))) grew |= res.echelon.add(std::move(row));
    ++res.samples;
    stable = grew ? 0 : stable + 1;
    if (res.samples >= initial && stable >= cfg.stable_additions) {
      res.stabilized = true;
      break;
    }
  }
  return res;
}

}  // namespace

MinedIdentityBasis mine(const MinerConfig& cfg) {
  if (cfg.n < 4) throw std::invalid_argument("mining needs n >= 4");
  MinedIdentityBasis out;
  out.n = cfg.n;
  out.degree = cfg.degree;
  out.seed = cfg.seed;
  out.patterns = enumerate_patterns(cfg.degree);
  const int count = static_cast<int>(out.patterns.size());
  const int initial = cfg.initial_samples > 0 ? cfg.initial_samples : count + 5;
  if (initial < count + 5) throw std::invalid_argument("initial sample count must be >= pattern count + 5");
  const int cap = std::max(initial, cfg.max_samples > 0 ? cfg.max_samples : 4 * count + 50);

  const SamplingResult on_image = sample_until_stable(cfg, out.patterns, SampleKind::kRho, initial, cap);
  const SamplingResult on_generic = sample_until_stable(cfg, out.patterns, SampleKind::kGeneric, initial, cap);
  out.rho_samples = on_image.samples;
  out.generic_samples = on_generic.samples;
  out.rho_rank = on_image.echelon.rank();
  out.generic_rank = on_generic.echelon.rank();
  out.stabilized = on_image.stabilized && on_generic.stabilized;
  if (!on_image.stabilized) {
    out.failures.push_back("rank on rho samples still increasing after " + std::to_string(cap) + " samples");
  }
  if (!on_generic.stabilized) {
    out.failures.push_back("rank on generic samples still increasing after " + std::to_string(cap) + " samples");
  }

  out.image_identities = on_image.echelon.kernel();
  out.universal_identities = on_generic.echelon.kernel();

  out.nested = true;
  for (const auto& v : out.universal_identities) {
    for (const auto& row : on_image.echelon.rows()) {
      if (!is_zero(dot(row, v))) out.nested = false;
    }
  }
  if (!out.nested) out.failures.push_back("universal identities are not contained in the image identities");

  RowEchelon quotient(out.patterns.size());
  for (const auto& v : out.universal_identities) quotient.add(v);
  for (const auto& v : out.image_identities) {
    if (quotient.add(v)) out.quotient.push_back(v);
  }
  for (std::size_t t = 0; t < out.quotient.size(); ++t) {
    const bool nonzero = std::any_of(on_generic.echelon.rows().begin(), on_generic.echelon.rows().end(),
                                     [&](const auto& row) { return !is_zero(dot(row, out.quotient[t])); });
    if (!nonzero) out.failures.push_back("quotient representative " + std::to_string(t) + " vanishes on generic samples");
  }

  for (int s = 0; s < cfg.fresh_samples; ++s) {
    const auto rows = sample_rows(out.patterns, draw_sample(cfg, SampleKind::kFresh, s));
    for (std::size_t t = 0; t < out.image_identities.size(); ++t) {
      for (const auto& row : rows) {
        if (!is_zero(dot(row, out.image_identities[t]))) {
          out.failures.push_back("image identity " + std::to_string(t) + " fails on fresh sample " + std::to_string(s));
          break;
        }
      }
    }
  }
  return out;
}

IdentityMembership classify(const MinedIdentityBasis& basis, const std::vector<Rational>& v) {
  return IdentityMembership{in_span(basis.image_identities, v), in_span(basis.universal_identities, v)};
}

std::vector<Rational> pattern_vector(const std::vector<ContractionPattern>& patterns,
                                     const std::vector<PatternTerm>& terms) {
  std::vector<Rational> v(patterns.size(), Rational(0));
  for (const auto& term : terms) {
    const SignedPattern raw = pattern_from_labels(term.factors);
    const SignedPattern canon = canonicalize(raw.pattern);
    if (canon.sign == 0) continue;
    const auto it = std::lower_bound(patterns.begin(), patterns.end(), canon.pattern);
    if (it == patterns.end() || !(*it == canon.pattern)) {
      throw std::invalid_argument("pattern " + raw.pattern.notation() + " is not in the enumeration");
    }
    v[static_cast<std::size_t>(it - patterns.begin())] += term.coefficient * raw.sign * canon.sign;
  }
  return v;
}

Tensor evaluate_combination(const std::vector<ContractionPattern>& patterns, const std::vector<Rational>& v,
                            const CurvTensor& r) {
  if (v.size() != patterns.size()) throw std::invalid_argument("coefficient count mismatch");
  Tensor out(r.dim(), 4);
  for (std::size_t a = 0; a < patterns.size(); ++a) {
    if (is_zero(v[a])) continue;
    Tensor t = evaluate_pattern(patterns[a], r);
    t *= v[a];
    out += t;
  }
  return out;
}

}  // namespace hol
