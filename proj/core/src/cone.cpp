#include "crnt/cone.hpp"

#include <algorithm>
#include <cstdint>

#include "crnt/error.hpp"
#include "crnt/linalg.hpp"

namespace crnt {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RatVec v;
  Bits zero;  // zero coordinates among the constraints processed so far
};

}  // namespace

std::string to_string(CurrentKind k) {
  switch (k) {
    case CurrentKind::Cyclic: return "cyclic";
    case CurrentKind::Stoichiometric: return "stoichiometric";
    case CurrentKind::NotACurrent: return "not-a-current";
  }
  return "?";
}

std::vector<std::size_t> ExtremeCurrent::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < vector.size(); ++i)
    if (vector[i] != 0) s.push_back(i);
  return s;
}

CurrentKind classify_current(const Network& net, const RatVec& v) {
  if (v.size() != net.reaction_count()) throw DimensionError("current has wrong length");
  for (const auto& x : v)
    if (x < 0) return CurrentKind::NotACurrent;
  if (is_zero(v)) return CurrentKind::NotACurrent;
  auto mats = build_matrices(net);
  if (!is_zero(to_rational(mats.Gamma) * v)) return CurrentKind::NotACurrent;
  if (is_zero(to_rational(mats.Ia) * v)) return CurrentKind::Cyclic;
  return CurrentKind::Stoichiometric;
}

std::vector<ExtremeCurrent> extreme_currents(const Network& net, const ConeOptions& options) {
  const std::size_t r = net.reaction_count();
  auto mats = build_matrices(net);
  std::vector<std::size_t> frees;
  std::vector<RatVec> kernel = kernel_raw(to_rational(mats.Gamma), &frees);
  if (kernel.empty()) return {};
  const std::size_t dim = kernel.size();

  std::vector<bool> is_free(r, false);
  for (auto f : frees) is_free[f] = true;

  // Rays of the nonnegative orthant in free coordinates.
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    Ray ray{scale_integral(kernel[k]), Bits(r)};
    for (std::size_t f = 0; f < dim; ++f)
      if (f != k) ray.zero.set(frees[f]);
    rays.push_back(std::move(ray));
  }

  for (std::size_t p = 0; p < r; ++p) {
    if (is_free[p]) continue;
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const int sg = sgn(rays[i].v[p]);
      if (sg > 0) pos.push_back(i);
      else if (sg < 0) neg.push_back(i);
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sgn(rays[i].v[p]) < 0) continue;
      Ray keep = rays[i];
      if (sgn(keep.v[p]) == 0) keep.zero.set(p);
      next.push_back(std::move(keep));
    }
    for (std::size_t a : pos) {
      for (std::size_t b : neg) {
        Bits common = rays[a].zero & rays[b].zero;
        if (dim >= 2 && common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t c = 0; c < rays.size() && adjacent; ++c) {
          if (c == a || c == b) continue;
          if (common.subset_of(rays[c].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        const Rational wa = -rays[b].v[p];
        const Rational wb = rays[a].v[p];
        RatVec v(r);
        for (std::size_t j = 0; j < r; ++j) v[j] = wa * rays[a].v[j] + wb * rays[b].v[j];
        Ray nr{scale_integral(std::move(v)), common};
        nr.zero.set(p);
        next.push_back(std::move(nr));
        if (next.size() > options.max_rays) throw CapExceeded("extreme current enumeration exceeded the ray cap");
      }
    }
    rays = std::move(next);
  }

  std::vector<RatVec> vecs;
  for (auto& ray : rays) vecs.push_back(std::move(ray.v));
  std::sort(vecs.begin(), vecs.end());
  vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());

  // Extreme rays of a pointed cone have inclusion-minimal supports.
  auto support = [](const RatVec& v) {
    std::vector<bool> s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] != 0;
    return s;
  };
  std::vector<ExtremeCurrent> out;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    auto si = support(vecs[i]);
    bool minimal = true;
    for (std::size_t j = 0; j < vecs.size() && minimal; ++j) {
      if (i == j) continue;
      auto sj = support(vecs[j]);
      bool strict_subset = sj != si;
      for (std::size_t k = 0; k < r && strict_subset; ++k)
        if (sj[k] && !si[k]) strict_subset = false;
      if (strict_subset) minimal = false;
    }
    if (!minimal) continue;
    ExtremeCurrent e{vecs[i], CurrentKind::Cyclic};
    e.kind = is_zero(to_rational(mats.Ia) * e.vector) ? CurrentKind::Cyclic : CurrentKind::Stoichiometric;
    out.push_back(std::move(e));
  }
  // Cyclic currents first, then lexicographically by support.
  std::sort(out.begin(), out.end(), [](const ExtremeCurrent& a, const ExtremeCurrent& b) {
    if (a.kind != b.kind) return a.kind == CurrentKind::Cyclic;
    auto sa = a.support(), sb = b.support();
    if (sa != sb) return sa < sb;
    return a.vector < b.vector;
  });
  return out;
}

}  // namespace crnt
