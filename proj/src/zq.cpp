// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#include "qha/zq.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qha {

IndecMultiset multiset_add(const IndecMultiset& a, const IndecMultiset& b) {
  IndecMultiset out = a;
  for (const auto& [x, k] : b) out[x] += k;
  return out;
}

std::optional<IndecMultiset> multiset_subtract(const IndecMultiset& a, const IndecMultiset& b) {
  IndecMultiset out = a;
  for (const auto& [x, k] : b) {
    auto it = out.find(x);
    if (it == out.end() || it->second < k) return std::nullopt;
    it->second -= k;
    if (it->second == 0) out.erase(it);
  }
  return out;
}

long multiset_total(const IndecMultiset& m) {
  long t = 0;
  for (const auto& [x, k] : m) t += k;
  return t;
}

TranslationQuiver::TranslationQuiver(Quiver q)
    : q_(std::move(q)), class_(classify(q_)), cartan_(cartan_matrix(q_)),
      phi_(coxeter_phi(q_)), phi_inv_(to_int(rat_inverse(to_rat(coxeter_phi(q_))))) {}

const DimVec& TranslationQuiver::dimvec(ZQVertex x) const {
  auto it = dim_cache_.find(x);
  if (it != dim_cache_.end()) return it->second;
  DimVec d;
  if (x.power == 0) {
    d = projective_dimvec(cartan_, x.vertex);
  } else {
    const IntMat& step = x.power > 0 ? phi_inv_ : phi_;
    const DimVec& prev = dimvec(ZQVertex{x.vertex, x.power > 0 ? x.power - 1 : x.power + 1});
    d.assign(prev.size(), Int(0));
    for (int i = 0; i < static_cast<int>(prev.size()); ++i)
      for (int j = 0; j < static_cast<int>(prev.size()); ++j)
        d[static_cast<size_t>(i)] += step.at(i, j) * prev[static_cast<size_t>(j)];
  }
  return dim_cache_.emplace(x, std::move(d)).first->second;
}

DimVec TranslationQuiver::dimvec(const IndecMultiset& m) const {
  DimVec acc(static_cast<size_t>(q_.size()), Int(0));
  for (const auto& [x, k] : m) {
    const DimVec& d = dimvec(x);
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += Int(k) * d[i];
  }
  return acc;
}

IndecMultiset TranslationQuiver::successors(ZQVertex x) const {
  IndecMultiset out;
  for (const Arrow& a : q_.arrows()) {
    if (a.tail == x.vertex) ++out[ZQVertex{a.head, x.power}];
    if (a.head == x.vertex) ++out[ZQVertex{a.tail, x.power + 1}];
  }
  return out;
}

IndecMultiset TranslationQuiver::predecessors(ZQVertex x) const {
  IndecMultiset out;
  for (const Arrow& a : q_.arrows()) {
    if (a.head == x.vertex) ++out[ZQVertex{a.tail, x.power}];
    if (a.tail == x.vertex) ++out[ZQVertex{a.head, x.power - 1}];
  }
  return out;
}

namespace {

bool entrywise_nonnegative(const DimVec& d) {
  return std::all_of(d.begin(), d.end(), [](const Int& x) { return x >= 0; });
}

bool is_zero_vec(const DimVec& d) {
  return std::all_of(d.begin(), d.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

long TranslationQuiver::module_orbit_end(int i) const {
  if (!class_.dynkin())
    throw Error(Errc::NotDynkin, "nu-orbits leave the module window only for Dynkin quivers");
  long m = 0;
  while (true) {
    const DimVec& d = dimvec(ZQVertex{i, m + 1});
    if (!entrywise_nonnegative(d) || is_zero_vec(d)) return m;
    ++m;
  }
}

std::vector<std::pair<ZQVertex, DimVec>> TranslationQuiver::enumerate_indecomposables() const {
  if (!class_.dynkin()) throw Error(Errc::NotDynkin, "indecomposables are finite only for Dynkin quivers");
  std::vector<std::pair<ZQVertex, DimVec>> out;
  for (int i = 0; i < q_.size(); ++i) {
    long end = module_orbit_end(i);
    for (long m = 0; m <= end; ++m) {
      ZQVertex x{i, m};
      out.emplace_back(x, dimvec(x));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.power, a.first.vertex) < std::pair(b.first.power, b.first.vertex);
  });
  return out;
}

ZQVertex TranslationQuiver::injective_position(int i) const {
  if (!class_.dynkin()) throw Error(Errc::NotDynkin, "injective positions need a Dynkin quiver");
  DimVec want = injective_dimvec(cartan_, i);
  for (int j = 0; j < q_.size(); ++j) {
    long end = module_orbit_end(j);
    for (long m = 0; m <= end; ++m)
      if (dimvec(ZQVertex{j, m}) == want) return ZQVertex{j, m};
  }
  throw Error(Errc::NotDynkin, "injective position not found");
}

std::vector<IndecMultiset> TranslationQuiver::ladder(const IndecMultiset& m, long n_max) const {
  std::vector<IndecMultiset> l;
  l.push_back(m);
  if (n_max <= 0) return l;
  IndecMultiset first;
  for (const auto& [x, k] : m) {
    IndecMultiset s = successors(x);
    for (auto& [y, c] : s) first[y] += c * k;
  }
  l.push_back(first);
  for (long n = 2; n <= n_max; ++n) {
    IndecMultiset s;
    for (const auto& [x, k] : l[static_cast<size_t>(n - 1)]) {
      IndecMultiset sx = successors(x);
      for (auto& [y, c] : sx) s[y] += c * k;
    }
    IndecMultiset shifted;
    for (const auto& [x, k] : l[static_cast<size_t>(n - 2)]) shifted[translate(x, 1)] += k;
    auto diff = multiset_subtract(s, shifted);
    if (!diff)
      throw Error(Errc::LadderBroken,
                  "rad-fitting fails at step " + std::to_string(n), n);
    l.push_back(std::move(*diff));
  }
  return l;
}

QhaLayers TranslationQuiver::qha_decomposition(int i, long n_max) const {
  if (n_max < 0) {
    if (!class_.dynkin())
      throw Error(Errc::NotDynkin, "aggregate decomposition needs a Dynkin quiver or an explicit bound");
    n_max = class_.coxeter_number - 2;
  }
  QhaLayers out;
  out.layers = ladder(IndecMultiset{{ZQVertex{i, 0}, 1}}, n_max);
  for (const auto& layer : out.layers) out.aggregate = multiset_add(out.aggregate, layer);
  out.aggregate_dimvec = dimvec(out.aggregate);
  return out;
}

std::string TranslationQuiver::position_name(ZQVertex x) const {
  const DimVec& d = dimvec(x);
  for (int j = 0; j < q_.size(); ++j)
    if (d == projective_dimvec(cartan_, j)) return "P_" + q_.vertex_name(j);
  for (int j = 0; j < q_.size(); ++j)
    if (d == injective_dimvec(cartan_, j)) return "I_" + q_.vertex_name(j);
  for (int j = 0; j < q_.size(); ++j) {
    DimVec e(static_cast<size_t>(q_.size()), Int(0));
    e[static_cast<size_t>(j)] = 1;
    if (d == e) return "S_" + q_.vertex_name(j);
  }
  return "(" + q_.vertex_name(x.vertex) + "," + std::to_string(x.power) + ")";
}

std::string TranslationQuiver::vertex_label(ZQVertex x) const {
  return position_name(x) + "\\n" + dimvec_str(dimvec(x));
}

namespace {

std::string node_id(ZQVertex x) {
  std::string m = x.power < 0 ? "m" + std::to_string(-x.power) : std::to_string(x.power);
  return "x" + std::to_string(x.vertex) + "_" + m;
}

}  // namespace

std::string TranslationQuiver::export_dot(long power_lo, long power_hi) const {
  std::ostringstream os;
  os << "digraph ar_quiver {\n  rankdir=LR;\n  node [shape=box];\n";
  for (long m = power_lo; m <= power_hi; ++m)
    for (int i = 0; i < q_.size(); ++i) {
      ZQVertex x{i, m};
      os << "  " << node_id(x) << " [label=\"" << vertex_label(x) << "\"];\n";
    }
  for (long m = power_lo; m <= power_hi; ++m)
    for (int i = 0; i < q_.size(); ++i)
      for (const auto& [y, k] : successors(ZQVertex{i, m}))
        if (y.power >= power_lo && y.power <= power_hi)
          for (long c = 0; c < k; ++c)
            os << "  " << node_id(ZQVertex{i, m}) << " -> " << node_id(y) << ";\n";
  os << "}\n";
  return os.str();
}

std::string TranslationQuiver::export_dot_module_window() const {
  if (!class_.dynkin()) throw Error(Errc::NotDynkin, "module window needs a Dynkin quiver");
  auto window = enumerate_indecomposables();
  std::ostringstream os;
  os << "digraph ar_quiver {\n  rankdir=LR;\n  node [shape=box];\n";
  auto in_window = [&](ZQVertex y) {
    for (const auto& [x, d] : window)
      if (x == y) return true;
    return false;
  };
  for (const auto& [x, d] : window)
    os << "  " << node_id(x) << " [label=\"" << vertex_label(x) << "\"];\n";
  for (const auto& [x, d] : window)
    for (const auto& [y, k] : successors(x))
      if (in_window(y))
        for (long c = 0; c < k; ++c) os << "  " << node_id(x) << " -> " << node_id(y) << ";\n";
  os << "}\n";
  return os.str();
}

std::string TranslationQuiver::multiset_json(const IndecMultiset& m) const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [x, k] : m) {
    nlohmann::ordered_json v = nlohmann::ordered_json::array();
    const std::string& name = q_.vertex_name(x.vertex);
    bool numeric = !name.empty() && name.find_first_not_of("0123456789") == std::string::npos;
    if (numeric)
      v.push_back(std::stol(name));
    else
      v.push_back(name);
    v.push_back(x.power);
    arr.push_back({{"vertex", v}, {"mult", k}});
  }
  return arr.dump();
}

std::string TranslationQuiver::multiset_str(const IndecMultiset& m) const {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [x, k] : m) {
    if (!out.empty()) out += " + ";
    out += position_name(x);
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Quiver make_hat_an(int n) {
  if (n < 2) throw Error(Errc::WrongQuiverShape, "A^_N needs N >= 2");
  std::vector<std::string> vertices;
  for (int i = 0; i <= n; ++i) vertices.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  arrows.push_back(Arrow{"a0", 0, 1});
  for (int i = 1; i < n; ++i) arrows.push_back(Arrow{"a" + std::to_string(i), i, i + 1});
  arrows.push_back(Arrow{"c", 0, n});
  return Quiver::from_parts(std::move(vertices), std::move(arrows));
}

IndecMultiset hat_an_predict(const Quiver& q, int i, long n) {
  int nn = q.size() - 1;
  if (nn < 2) throw Error(Errc::WrongQuiverShape, "A^_N needs N >= 2");
  for (int v = 0; v <= nn; ++v)
    if (q.vertex_name(v) != std::to_string(v))
      throw Error(Errc::WrongQuiverShape, "vertices must be labeled 0..N in order");
  std::multiset<std::pair<int, int>> want, have;
  want.insert({0, 1});
  want.insert({0, nn});
  for (int v = 1; v < nn; ++v) want.insert({v, v + 1});
  for (const Arrow& a : q.arrows()) have.insert({a.tail, a.head});
  if (want != have) throw Error(Errc::WrongQuiverShape, "not the standard A^_N orientation");
  if (i < 0 || i > nn) throw Error(Errc::UnknownVertex, "vertex index out of range");

  IndecMultiset out;
  for (long b = 0; b <= n; ++b) {
    long t = i + n - 2 * b;
    long qq = t >= 0 ? t / (nn + 1) : -((-t + nn) / (nn + 1));
    long r = t - qq * (nn + 1);
    ++out[ZQVertex{static_cast<int>(r), qq + b}];
  }
  return out;
}

}  // namespace qha
