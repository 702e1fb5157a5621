#include "superds/vacuum.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "superds/error.hpp"

namespace superds {

namespace {

void add_to(ModVec& out, const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = out.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) out.erase(it);
  }
}

void add_scaled(ModVec& out, const ModVec& v, const Rational& c) {
  if (sgn(c) == 0) return;
  for (const auto& [m, x] : v) add_to(out, m, x * c);
}

}  // namespace

GradedModule::GradedModule(const StructuredAlgebra& alg, const Rational& k, int depth, unsigned ordering)
    : alg_(&alg), k_(k), depth_(depth) {
  if (depth < 0) throw Error(ErrorKind::WindowTooSmall, "negative depth");
  cartan_pos_.assign(static_cast<std::size_t>(alg.dim), -1);
  for (std::size_t i = 0; i < alg.cartan.size(); ++i) cartan_pos_[static_cast<std::size_t>(alg.cartan[i])] = static_cast<int>(i);
  const int ngen = alg.dim * std::max(depth, 1);
  key_.resize(static_cast<std::size_t>(ngen));
  std::iota(key_.begin(), key_.end(), 0);
  if (ordering != 0) {
    std::mt19937 rng(ordering);
    std::shuffle(key_.begin(), key_.end(), rng);
  }
  std::vector<int> order(static_cast<std::size_t>(alg.dim * depth));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int g, int h) { return key_[g] < key_[h]; });

  std::vector<Monomial> all;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t start, int left) -> void {
    all.push_back(cur);
    for (std::size_t j = start; j < order.size(); ++j) {
      int g = order[j];
      int n = gen_n(g);
      if (n > left) continue;
      cur.push_back(g);
      self(self, alg.odd[gen_a(g)] ? j + 1 : j, left - n);
      cur.pop_back();
    }
  };
  rec(rec, 0, depth);

  for (auto& m : all) {
    Weight w = weight_of(m);
    auto [it, fresh] = index_.try_emplace(w, static_cast<int>(spaces_.size()));
    if (fresh) {
      WeightSpace s;
      s.depth = depth_of(m);
      s.weight = w;
      spaces_.push_back(std::move(s));
    }
    auto& s = spaces_[static_cast<std::size_t>(it->second)];
    bool p = parity_of(m);
    (p ? s.odd : s.even) += 1;
    s.basis.push_back(std::move(m));
    s.parity.push_back(p);
  }
  // order spaces by depth, then weight, and rebuild the index
  std::sort(spaces_.begin(), spaces_.end(), [](const WeightSpace& a, const WeightSpace& b) {
    return a.depth != b.depth ? a.depth < b.depth : a.weight < b.weight;
  });
  index_.clear();
  for (std::size_t i = 0; i < spaces_.size(); ++i) {
    index_[spaces_[i].weight] = static_cast<int>(i);
    for (std::size_t j = 0; j < spaces_[i].basis.size(); ++j) locate_[spaces_[i].basis[j]] = {static_cast<int>(i), j};
  }
  quotient_inverse_.resize(spaces_.size());
}

int GradedModule::find(const Weight& weight) const {
  auto it = index_.find(weight);
  return it == index_.end() ? -1 : it->second;
}

Weight GradedModule::weight_of(const Monomial& m) const {
  Weight w = k_ * Weight::lambda0();
  for (int g : m) w += alg_->weight[static_cast<std::size_t>(gen_a(g))] - Rational(gen_n(g)) * Weight::delta();
  return w;
}

int GradedModule::depth_of(const Monomial& m) const {
  int d = 0;
  for (int g : m) d += gen_n(g);
  return d;
}

bool GradedModule::parity_of(const Monomial& m) const {
  bool p = false;
  for (int g : m) p ^= static_cast<bool>(alg_->odd[static_cast<std::size_t>(gen_a(g))]);
  return p;
}

ModVec GradedModule::act(int a, int mode, const Monomial& m) {
  return mode < 0 ? insert(a, -mode, m) : annihilate(a, mode, m);
}

ModVec GradedModule::act(const Element& x, int mode, const ModVec& v) {
  ModVec out;
  for (const auto& [a, c] : x)
    for (const auto& [m, y] : v) add_scaled(out, act(a, mode, m), c * y);
  return out;
}

void GradedModule::prepend_into(ModVec& out, int g, const ModVec& v, const Rational& c) {
  for (const auto& [m, y] : v) add_scaled(out, insert(gen_a(g), gen_n(g), m), c * y);
}

ModVec GradedModule::insert(int a, int n, const Monomial& m) {
  if (depth_of(m) + n > depth_)
    throw Error(ErrorKind::Internal, "vacuum module: creation beyond the truncation depth");
  const int g = id_of(a, n);
  if (m.empty() || before(g, m.front())) {
    Monomial r;
    r.reserve(m.size() + 1);
    r.push_back(g);
    r.insert(r.end(), m.begin(), m.end());
    return {{std::move(r), Rational(1)}};
  }
  const bool odd_a = alg_->odd[static_cast<std::size_t>(a)];
  if (g == m.front() && !odd_a) {
    Monomial r = m;
    r.insert(r.begin(), g);
    return {{std::move(r), Rational(1)}};
  }
  auto key = std::make_pair(std::make_pair(a, -n), m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Monomial rest(m.begin() + 1, m.end());
  ModVec out;
  if (g == m.front()) {
    // y(-n)^2 = 1/2 [y, y](-2n)
    for (const auto& [c, f] : alg_->bracket(a, a)) add_scaled(out, act(c, -2 * n, rest), f / 2);
  } else {
    const int g1 = m.front();
    const int b = gen_a(g1);
    const int n1 = gen_n(g1);
    for (const auto& [c, f] : alg_->bracket(a, b)) add_scaled(out, act(c, -(n + n1), rest), f);
    Rational sign = (odd_a && alg_->odd[static_cast<std::size_t>(b)]) ? -1 : 1;
    prepend_into(out, g1, insert(a, n, rest), sign);
  }
  memo_.emplace(std::move(key), out);
  return out;
}

ModVec GradedModule::annihilate(int a, int mode, const Monomial& m) {
  if (m.empty()) return {};
  if (mode == 0 && cartan_pos_[static_cast<std::size_t>(a)] >= 0) {
    ModVec out;
    add_to(out, m, alg_->eval(weight_of(m).finite_part(), cartan_pos_[static_cast<std::size_t>(a)]));
    return out;
  }
  if (mode > depth_of(m)) return {};
  auto key = std::make_pair(std::make_pair(a, mode), m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Monomial rest(m.begin() + 1, m.end());
  const int g1 = m.front();
  const int b = gen_a(g1);
  const int n1 = gen_n(g1);
  ModVec out;
  for (const auto& [c, f] : alg_->bracket(a, b)) add_scaled(out, act(c, mode - n1, rest), f);
  if (mode == n1) add_to(out, rest, Rational(mode) * alg_->form(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) * k_);
  Rational sign = (alg_->odd[static_cast<std::size_t>(a)] && alg_->odd[static_cast<std::size_t>(b)]) ? -1 : 1;
  prepend_into(out, g1, annihilate(a, mode, rest), sign);
  memo_.emplace(std::move(key), out);
  return out;
}

Rational GradedModule::pairing(const Monomial& left, const Monomial& right) {
  ModVec v{{right, Rational(1)}};
  for (int g : left) {
    const auto& [b, c] = alg_->sigma[static_cast<std::size_t>(gen_a(g))];
    ModVec next;
    for (const auto& [m, y] : v) add_scaled(next, annihilate(b, gen_n(g), m), c * y);
    v = std::move(next);
    if (v.empty()) return 0;
  }
  auto it = v.find(Monomial{});
  return it == v.end() ? Rational(0) : it->second;
}

const WeightSpace& GradedModule::gram(std::size_t si) {
  auto& s = spaces_.at(si);
  if (s.has_gram) return s;
  const std::size_t n = s.basis.size();
  s.gram = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    // left monomials sharing a prefix reuse the partially annihilated vector
    std::map<Monomial, ModVec> prefix;
    prefix[{}] = ModVec{{s.basis[j], Rational(1)}};
    for (std::size_t i = 0; i < n; ++i) {
      if (s.parity[i] != s.parity[j]) continue;
      const Monomial& L = s.basis[i];
      Monomial p;
      const ModVec* v = &prefix[{}];
      for (int g : L) {
        p.push_back(g);
        auto it = prefix.find(p);
        if (it == prefix.end()) {
          const auto& [b, c] = alg_->sigma[static_cast<std::size_t>(gen_a(g))];
          ModVec next;
          for (const auto& [m, y] : *v) add_scaled(next, annihilate(b, gen_n(g), m), c * y);
          it = prefix.emplace(p, std::move(next)).first;
        }
        v = &it->second;
      }
      auto it = v->find(Monomial{});
      if (it != v->end()) s.gram(i, j) = it->second;
    }
  }
  std::vector<std::size_t> ev, od;
  for (std::size_t i = 0; i < n; ++i) (s.parity[i] ? od : ev).push_back(i);
  auto sub = [&](const std::vector<std::size_t>& idx) {
    Matrix m(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) m(a, b) = s.gram(idx[a], idx[b]);
    return m;
  };
  s.rank_even = static_cast<long>(rank(sub(ev)));
  s.rank_odd = static_cast<long>(rank(sub(od)));
  s.quotient = independent_columns(s.gram);
  if (static_cast<long>(s.quotient.size()) != s.rank_even + s.rank_odd)
    throw Error(ErrorKind::Internal, "Gram rank mismatch");
  s.has_gram = true;
  return s;
}

void GradedModule::all_grams() {
  for (std::size_t i = 0; i < spaces_.size(); ++i) gram(i);
}

Vector GradedModule::quotient_coords(std::size_t si, const ModVec& v) {
  const auto& s = gram(si);
  const auto& q = s.quotient;
  auto& inv = quotient_inverse_[si];
  if (!inv) {
    Matrix m(q.size(), q.size());
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = 0; b < q.size(); ++b) m(a, b) = s.gram(q[a], q[b]);
    inv = inverse(m);
    if (!inv) throw Error(ErrorKind::Internal, "Gram minor on the quotient basis is singular");
  }
  // rows q of G applied to v
  Vector gv(q.size());
  for (const auto& [m, c] : v) {
    auto it = locate_.find(m);
    if (it == locate_.end() || it->second.first != static_cast<int>(si))
      throw Error(ErrorKind::Internal, "vector outside the weight space");
    std::size_t j = it->second.second;
    for (std::size_t a = 0; a < q.size(); ++a)
      if (sgn(s.gram(q[a], j)) != 0) gv[a] += s.gram(q[a], j) * c;
  }
  return *inv * gv;
}

GradedTable vacuum_table(const GradedModule& m) {
  GradedTable t;
  for (const auto& s : m.spaces()) t.push_back({s.depth, s.weight, s.even, s.odd});
  return t;
}

GradedTable simple_table(GradedModule& m) {
  m.all_grams();
  GradedTable t;
  for (const auto& s : m.spaces())
    if (s.rank_even + s.rank_odd > 0) t.push_back({s.depth, s.weight, s.rank_even, s.rank_odd});
  return t;
}

GradedTable ideal_table(GradedModule& m) {
  m.all_grams();
  GradedTable t;
  for (const auto& s : m.spaces()) {
    long e = s.even - s.rank_even, o = s.odd - s.rank_odd;
    if (e + o > 0) t.push_back({s.depth, s.weight, e, o});
  }
  return t;
}

GradedTable ds_homology(GradedModule& mod, ModuleKind kind, const std::vector<Weight>& S, const DSReport& report,
                        const std::vector<Rational>& coeffs) {
  const auto& alg = mod.algebra();
  ds_roots(alg.datum, S);  // validates isotropy
  if (!coeffs.empty() && coeffs.size() != S.size())
    throw Error(ErrorKind::InconsistentTriple, "one coefficient per element of S expected");
  Element x;
  for (std::size_t i = 0; i < S.size(); ++i) {
    int a = alg.index_of(S[i]);
    if (a < 0 || !alg.odd[static_cast<std::size_t>(a)]) throw Error(ErrorKind::NotIsotropic, S[i].to_string() + " is not an odd root");
    Rational c = coeffs.empty() ? Rational(1) : coeffs[i];
    if (sgn(c) != 0) x.emplace_back(a, c);
  }
  if (!alg.bracket(x, x).empty()) throw Error(ErrorKind::NotSquareZero, "[x, x] != 0");
  if (kind == ModuleKind::Simple) mod.all_grams();

  auto& spaces = mod.spaces();
  std::map<std::pair<int, Weight>, std::vector<std::size_t>> fibres;
  for (std::size_t i = 0; i < spaces.size(); ++i)
    fibres[{spaces[i].depth, restrict_weight(spaces[i].weight, report)}].push_back(i);

  auto size_of = [&](const WeightSpace& s) {
    return kind == ModuleKind::Simple ? s.quotient.size() : s.basis.size();
  };
  GradedTable out;
  for (const auto& [key, members] : fibres) {
    std::map<std::size_t, std::size_t> offset;
    std::size_t total = 0;
    long even = 0, odd = 0;
    for (std::size_t si : members) {
      offset[si] = total;
      const auto& s = spaces[si];
      std::size_t n = size_of(s);
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t idx = kind == ModuleKind::Simple ? s.quotient[j] : j;
        (s.parity[idx] ? odd : even) += 1;
      }
      total += n;
    }
    if (total == 0) continue;
    Matrix X(total, total);
    for (std::size_t si : members) {
      const auto& s = spaces[si];
      std::size_t n = size_of(s);
      for (std::size_t j = 0; j < n; ++j) {
        const Monomial& m = s.basis[kind == ModuleKind::Simple ? s.quotient[j] : j];
        ModVec v = mod.act(x, 0, ModVec{{m, Rational(1)}});
        std::map<std::size_t, ModVec> by_space;
        for (const auto& [mm, c] : v) {
          int t = mod.find(mod.weight_of(mm));
          if (t < 0) throw Error(ErrorKind::Internal, "image outside the module");
          by_space[static_cast<std::size_t>(t)].emplace(mm, c);
        }
        for (const auto& [t, w] : by_space) {
          auto off = offset.find(t);
          if (off == offset.end()) throw Error(ErrorKind::Internal, "x leaves the fibre");
          if (kind == ModuleKind::Simple) {
            Vector c = mod.quotient_coords(t, w);
            for (std::size_t r = 0; r < c.size(); ++r) X(off->second + r, offset[si] + j) = c[r];
          } else {
            for (const auto& [mm, c] : w) {
              // vacuum basis index inside space t
              const auto& b = spaces[t].basis;
              std::size_t r = static_cast<std::size_t>(std::find(b.begin(), b.end(), mm) - b.begin());
              X(off->second + r, offset[si] + j) = c;
            }
          }
        }
      }
    }
    long r = static_cast<long>(rank(X));
    long he = even - r, ho = odd - r;
    if (he < 0 || ho < 0) throw Error(ErrorKind::Internal, "negative homology dimension");
    if (he + ho > 0) out.push_back({key.first, key.second, he, ho});
  }
  std::sort(out.begin(), out.end(), [](const GradedEntry& a, const GradedEntry& b) {
    return a.depth != b.depth ? a.depth < b.depth : a.weight < b.weight;
  });
  return out;
}

CharSeries table_series(const GradedTable& t, const FramePtr& frame, const Weight& anchor, int depth, bool super) {
  CharSeries s(frame, anchor, Window{depth, -1});
  for (const auto& e : t) {
    auto nu = frame->exponent(anchor - e.weight);
    if (!nu) throw Error(ErrorKind::OutsideFrame, e.weight.to_string() + " is not below the anchor");
    s.add_term(*nu, Rational(super ? e.even - e.odd : e.even + e.odd));
  }
  return s;
}

}  // namespace superds
