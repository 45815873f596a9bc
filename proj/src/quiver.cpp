// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#include "qha/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace qha {

namespace {

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Quiver Quiver::from_parts(std::vector<std::string> vertices, std::vector<Arrow> arrows) {
  Quiver q;
  q.vertices_ = std::move(vertices);
  q.arrows_ = std::move(arrows);
  q.validate();
  return q;
}

int Quiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (vertices_[static_cast<size_t>(i)] == name) return i;
  throw Error(Errc::UnknownVertex, "'" + name + "'");
}

void Quiver::validate() {
  if (vertices_.empty()) throw Error(Errc::ParseError, "a quiver needs at least one vertex");
  for (size_t i = 0; i < vertices_.size(); ++i)
    for (size_t j = i + 1; j < vertices_.size(); ++j)
      if (vertices_[i] == vertices_[j])
        throw Error(Errc::ParseError, "duplicate vertex '" + vertices_[i] + "'");
  for (size_t i = 0; i < arrows_.size(); ++i) {
    if (!arrows_[i].name.empty() && arrows_[i].name.back() == '\'')
      throw Error(Errc::ParseError, "arrow name '" + arrows_[i].name +
                                        "' is reserved for reverse arrows");
    for (size_t j = i + 1; j < arrows_.size(); ++j)
      if (arrows_[i].name == arrows_[j].name)
        throw Error(Errc::DuplicateArrowName, "'" + arrows_[i].name + "'");
  }
  int n = size();
  for (const Arrow& a : arrows_)
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw Error(Errc::UnknownVertex, "arrow '" + a.name + "' endpoint out of range");

  // acyclicity: Kahn's algorithm; a self-loop is a cycle of length one
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (const Arrow& a : arrows_) ++indeg[static_cast<size_t>(a.head)];
  std::queue<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[static_cast<size_t>(i)] == 0) ready.push(i);
  topo_.clear();
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    topo_.push_back(v);
    for (const Arrow& a : arrows_)
      if (a.tail == v && --indeg[static_cast<size_t>(a.head)] == 0) ready.push(a.head);
  }
  if (static_cast<int>(topo_.size()) != n)
    throw Error(Errc::DirectedCycle, "the arrow set contains a directed cycle");

  // connectivity of the underlying graph
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = true;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (const Arrow& a : arrows_) {
      int w = -1;
      if (a.tail == v) w = a.head;
      if (a.head == v) w = a.tail;
      if (w >= 0 && !seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        bfs.push(w);
        ++reached;
      }
    }
  }
  if (reached != n) throw Error(Errc::Disconnected, "underlying graph is not connected");
}

Quiver Quiver::parse(const std::string& text) {
  std::string body = trimmed(text);
  if (!body.empty() && body[0] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::ParseError, e.what());
    }
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices"))
      vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    Quiver q;
    q.vertices_ = vertices;
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      auto as_name = [](const nlohmann::json& x) {
        return x.is_string() ? x.get<std::string>() : x.dump();
      };
      arrows.push_back(Arrow{as_name(a.at("name")), q.vertex_index(as_name(a.at("tail"))),
                             q.vertex_index(as_name(a.at("head")))});
    }
    return from_parts(std::move(vertices), std::move(arrows));
  }

  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  Quiver lookup;
  bool have_vertices = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    if (line.rfind("vertices:", 0) == 0) {
      if (have_vertices) throw Error(Errc::ParseError, "second vertices: line");
      vertices = split_ws(line.substr(9));
      lookup.vertices_ = vertices;
      have_vertices = true;
      continue;
    }
    if (line.rfind("arrow ", 0) == 0) {
      if (!have_vertices)
        throw Error(Errc::ParseError, "arrow before vertices: (line " + std::to_string(lineno) + ")");
      size_t colon = line.find(':');
      if (colon == std::string::npos)
        throw Error(Errc::ParseError, "missing ':' in arrow line " + std::to_string(lineno));
      std::string name = trimmed(line.substr(6, colon - 6));
      std::string rest = line.substr(colon + 1);
      size_t sep = rest.find("->");
      if (name.empty() || sep == std::string::npos)
        throw Error(Errc::ParseError, "want 'arrow NAME: TAIL -> HEAD' on line " +
                                          std::to_string(lineno));
      std::string tail = trimmed(rest.substr(0, sep));
      std::string head = trimmed(rest.substr(sep + 2));
      arrows.push_back(Arrow{name, lookup.vertex_index(tail), lookup.vertex_index(head)});
      continue;
    }
    throw Error(Errc::ParseError, "unrecognized line " + std::to_string(lineno) + ": '" + line + "'");
  }
  return from_parts(std::move(vertices), std::move(arrows));
}

Quiver Quiver::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Quiver::to_text() const {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : vertices_) os << ' ' << v;
  os << '\n';
  for (const Arrow& a : arrows_)
    os << "arrow " << a.name << ": " << vertex_name(a.tail) << " -> " << vertex_name(a.head)
       << '\n';
  return os.str();
}

std::string Quiver::to_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = vertices_;
  j["arrows"] = nlohmann::ordered_json::array();
  for (const Arrow& a : arrows_)
    j["arrows"].push_back({{"name", a.name}, {"tail", vertex_name(a.tail)}, {"head", vertex_name(a.head)}});
  return j.dump();
}

int DoubleQuiver::arrow_index(const std::string& name) const {
  bool rev = !name.empty() && name.back() == '\'';
  std::string bare = rev ? name.substr(0, name.size() - 1) : name;
  for (int a = 0; a < base_.arrow_count(); ++a)
    if (base_.arrow(a).name == bare) return rev ? a + base_.arrow_count() : a;
  throw Error(Errc::ParseError, "no arrow named '" + name + "'");
}

IntMat tits_form_matrix(const Quiver& q) {
  int n = q.size();
  IntMat b(n, n);
  for (int i = 0; i < n; ++i) b.at(i, i) = 2;
  for (const Arrow& a : q.arrows()) {
    b.at(a.tail, a.head) -= 1;
    b.at(a.head, a.tail) -= 1;
  }
  return b;
}

std::string QuiverClass::name() const {
  if (kind == Kind::Wild) return "wild";
  std::string letter = type == DynkinType::A ? "A" : type == DynkinType::D ? "D" : "E";
  if (kind == Kind::ExtendedDynkin) letter += "~";
  return letter + std::to_string(rank);
}

namespace {

// leg lengths (in edges) from a branch vertex of a tree, sorted ascending
std::vector<int> leg_lengths(const std::vector<std::vector<int>>& adj, int center) {
  std::vector<int> legs;
  for (int next : adj[static_cast<size_t>(center)]) {
    int len = 1, prev = center, cur = next;
    while (true) {
      const auto& nb = adj[static_cast<size_t>(cur)];
      if (nb.size() != 2) break;  // leaf (size 1) or another branch point
      int ahead = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = ahead;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  return legs;
}

int coxeter_number_of(DynkinType t, int rank) {
  switch (t) {
    case DynkinType::A: return rank + 1;
    case DynkinType::D: return 2 * rank - 2;
    case DynkinType::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
  }
  return 0;
}

}  // namespace

QuiverClass classify(const Quiver& q) {
  int n = q.size();
  IntMat b = tits_form_matrix(q);

  // leading principal minors decide definiteness (B symmetric; for the
  // affine forms every proper principal submatrix is positive definite)
  bool proper_positive = true;
  for (int k = 1; k < n; ++k) {
    IntMat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = b.at(i, j);
    if (det_bareiss(sub) <= 0) {
      proper_positive = false;
      break;
    }
  }
  Int dn = det_bareiss(b);

  QuiverClass cls;
  if (!proper_positive || dn < 0) {
    cls.kind = QuiverClass::Kind::Wild;
    return cls;
  }

  // undirected simple adjacency + parallel-edge count
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  std::map<std::pair<int, int>, int> edge_mult;
  for (const Arrow& a : q.arrows()) {
    int u = std::min(a.tail, a.head), v = std::max(a.tail, a.head);
    if (++edge_mult[{u, v}] == 1) {
      adj[static_cast<size_t>(u)].push_back(v);
      adj[static_cast<size_t>(v)].push_back(u);
    }
  }
  bool has_multi_edge = false;
  for (const auto& [e, m] : edge_mult)
    if (m > 1) has_multi_edge = true;
  std::vector<int> degree(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) degree[static_cast<size_t>(i)] = static_cast<int>(adj[static_cast<size_t>(i)].size());
  int max_deg = *std::max_element(degree.begin(), degree.end());
  std::vector<int> branch;
  for (int i = 0; i < n; ++i)
    if (degree[static_cast<size_t>(i)] >= 3) branch.push_back(i);

  if (dn > 0) {
    // positive definite: an ADE tree
    cls.kind = QuiverClass::Kind::Dynkin;
    cls.rank = n;
    if (max_deg <= 2) {
      cls.type = DynkinType::A;
    } else {
      std::vector<int> legs = leg_lengths(adj, branch.front());
      if (legs[0] == 1 && legs[1] == 1)
        cls.type = DynkinType::D;
      else
        cls.type = DynkinType::E;
    }
    cls.coxeter_number = coxeter_number_of(cls.type, cls.rank);
    return cls;
  }

  // semidefinite with one-dimensional radical: an affine ADE graph
  cls.kind = QuiverClass::Kind::ExtendedDynkin;
  cls.rank = n - 1;
  if (has_multi_edge || branch.empty()) {
    cls.type = DynkinType::A;  // the double edge (n=2) or a cycle
  } else if (max_deg == 4 || branch.size() == 2) {
    cls.type = DynkinType::D;
  } else {
    cls.type = DynkinType::E;
  }
  return cls;
}

}  // namespace qha
