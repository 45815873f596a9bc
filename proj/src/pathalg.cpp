// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#include "qha/pathalg.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "json.hpp"

namespace qha {

Cell cell_of(const DoubleQuiver& dq, const ArrowSeq& path, int at) {
  if (path.empty()) {
    if (at < 0) throw Error(Errc::NonHomogeneous, "trivial path needs a vertex");
    return Cell{at, at, 0, 0};
  }
  Cell c;
  c.src = dq.tail(path.front());
  c.tgt = dq.head(path.back());
  c.len = static_cast<int>(path.size());
  c.star = 0;
  int cur = c.src;
  for (int a : path) {
    if (dq.tail(a) != cur) throw Error(Errc::NonHomogeneous, "arrows do not compose");
    cur = dq.head(a);
    c.star += dq.star_degree(a);
  }
  return c;
}

const Cell& PathVector::cell() const {
  if (!pinned_) throw Error(Errc::NonHomogeneous, "element has no terms and no declared cell");
  return cell_;
}

void PathVector::add_term(const DoubleQuiver& dq, const ArrowSeq& path, const Scalar& c, int at) {
  if (c.field() != field_) throw Error(Errc::FieldMismatch, "coefficient field mismatch");
  Cell pc = cell_of(dq, path, at);
  if (!pinned_) {
    cell_ = pc;
    pinned_ = true;
  } else if (pc != cell_) {
    throw Error(Errc::NonHomogeneous, "terms live in different bidegree cells");
  }
  if (c.is_zero()) return;
  auto it = terms_.find(path);
  if (it == terms_.end()) {
    terms_.emplace(path, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PathVector::add(const PathVector& other) {
  if (other.field_ != field_) throw Error(Errc::FieldMismatch, "field mismatch in sum");
  if (other.pinned_) {
    if (!pinned_) {
      cell_ = other.cell_;
      pinned_ = true;
    } else if (other.cell_ != cell_ && !other.terms_.empty()) {
      throw Error(Errc::NonHomogeneous, "summands live in different bidegree cells");
    }
  }
  for (const auto& [p, c] : other.terms_) {
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

void PathVector::scale(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& [p, x] : terms_) x *= c;
}

PathVector PathVector::left_mul(const DoubleQuiver& dq, int arrow) const {
  PathVector out(field_);
  for (const auto& [p, c] : terms_) {
    if (dq.head(arrow) != cell().src) continue;  // zero product
    ArrowSeq q;
    q.push_back(arrow);
    q.insert(q.end(), p.begin(), p.end());
    out.add_term(dq, q, c);
  }
  if (pinned_ && !out.pinned_ && dq.head(arrow) == cell_.src) {
    out.cell_ = Cell{dq.tail(arrow), cell_.tgt, cell_.len + 1, cell_.star + dq.star_degree(arrow)};
    out.pinned_ = true;
  }
  return out;
}

PathVector PathVector::right_mul(const DoubleQuiver& dq, int arrow) const {
  PathVector out(field_);
  for (const auto& [p, c] : terms_) {
    if (dq.tail(arrow) != cell().tgt) continue;
    ArrowSeq q = p;
    q.push_back(arrow);
    out.add_term(dq, q, c);
  }
  if (pinned_ && !out.pinned_ && dq.tail(arrow) == cell_.tgt) {
    out.cell_ = Cell{cell_.src, dq.head(arrow), cell_.len + 1, cell_.star + dq.star_degree(arrow)};
    out.pinned_ = true;
  }
  return out;
}

std::string PathVector::str(const DoubleQuiver& dq) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    std::string path;
    for (int a : p) {
      if (!path.empty()) path += ".";
      path += dq.arrow_name(a);
    }
    if (!out.empty()) out += " + ";
    out += c.str() + " * " + (path.empty() ? "e" : path);
  }
  return out;
}

PathVector pv_mul(const DoubleQuiver& dq, const PathVector& a, const PathVector& b) {
  PathVector out(a.field());
  if (a.has_cell() && b.has_cell() && a.cell().tgt == b.cell().src) {
    out = PathVector(a.field(), Cell{a.cell().src, b.cell().tgt, a.cell().len + b.cell().len,
                                     a.cell().star + b.cell().star});
  }
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) {
      ArrowSeq s = p;
      s.insert(s.end(), q.begin(), q.end());
      out.add_term(dq, s, cp * cq);
    }
  return out;
}

namespace {

// nonzero scalar multiples of a generator span the same ideal, so rational
// generators can be scaled to integer coefficients up front
void clear_denominators(PathVector& g) {
  if (g.field().kind() != FieldKind::Rationals || g.is_zero_vector()) return;
  Int l(1);
  for (const auto& [p, c] : g.terms()) {
    Int d = c.rat().get_den();
    l = l / gcd(l, d) * d;
  }
  if (l != 1) g.scale(Scalar::from_int(g.field(), l));
}

}  // namespace

PathVector mesh_relation(const DoubleQuiver& dq, int i, const Weight* v) {
  Field f = v ? v->field : Field::rationals();
  Scalar coeff = Scalar::one(f);
  if (v) {
    const Scalar& vi = v->entries[static_cast<size_t>(i)];
    if (vi.is_zero()) throw Error(Errc::NonSincereWeight, "v_i = 0 at the mesh vertex");
    coeff = vi.inverse();
  }
  PathVector out(f, Cell{i, i, 2, 1});
  int k = dq.base().arrow_count();
  for (int a = 0; a < k; ++a) {
    const Arrow& ar = dq.base().arrow(a);
    if (ar.tail == i) out.add_term(dq, ArrowSeq{a, a + k}, coeff);          // alpha alpha*
    if (ar.head == i) out.add_term(dq, ArrowSeq{a + k, a}, -coeff);         // -alpha* alpha
  }
  return out;
}

PathVector qh_relation(const DoubleQuiver& dq, const Weight& v, int arrow) {
  int t = dq.tail(arrow), h = dq.head(arrow);
  if (v.entries[static_cast<size_t>(t)].is_zero() || v.entries[static_cast<size_t>(h)].is_zero())
    throw Error(Errc::NonSincereWeight, "QH relations need a sincere weight");
  PathVector out(v.field, Cell{t, h, 3, 1 + dq.star_degree(arrow)});
  out.add(mesh_relation(dq, h, &v).left_mul(dq, arrow));   // a * wrho_{h(a)}
  PathVector right = mesh_relation(dq, t, &v).right_mul(dq, arrow);
  right.scale(-Scalar::one(v.field));
  out.add(right);                                          // - wrho_{t(a)} * a
  return out;
}

RelationFamily preprojective_family(const DoubleQuiver& dq, const Field& f) {
  RelationFamily fam;
  fam.kind = RelationKind::Preprojective;
  fam.field = f;
  for (int i = 0; i < dq.vertex_count(); ++i) fam.generators.push_back(mesh_relation(dq, i));
  if (f != Field::rationals()) {
    // lift the +-1 coefficients into the requested field
    for (auto& g : fam.generators) {
      PathVector lifted(f);
      if (g.has_cell()) lifted = PathVector(f, g.cell());
      for (const auto& [p, c] : g.terms()) lifted.add_term(dq, p, Scalar::from_rat(f, c.rat()));
      g = lifted;
    }
  }
  return fam;
}

RelationFamily qh_family(const DoubleQuiver& dq, const Weight& v) {
  if (!v.sincere()) throw Error(Errc::NonSincereWeight, "QH relations need a sincere weight");
  if (v.size() != dq.vertex_count())
    throw Error(Errc::FieldMismatch, "weight length mismatch");
  RelationFamily fam;
  fam.kind = RelationKind::QuiverHeisenberg;
  fam.field = v.field;
  fam.weight = v;
  for (int a = 0; a < dq.arrow_count(); ++a) {
    PathVector g = qh_relation(dq, v, a);
    clear_denominators(g);
    fam.generators.push_back(std::move(g));
  }
  return fam;
}

PathIndex::PathIndex(const DoubleQuiver& dq, int len_max, long cap_cell_size) : len_max_(len_max) {
  // overall budget so oversized scans fail before exhausting memory
  long total = 0, total_cap = cap_cell_size * 16;
  // depth-first extension, one source vertex at a time
  for (int v = 0; v < dq.vertex_count(); ++v) {
    ArrowSeq stack;
    auto bucket_insert = [&](const ArrowSeq& p, int tgt, int star) {
      Cell c{v, tgt, static_cast<int>(p.size()), star};
      auto& bucket = buckets_[c];
      bucket.push_back(p);
      if (static_cast<long>(bucket.size()) > cap_cell_size || ++total > total_cap)
        throw Error(Errc::ResourceBound, "path basis exceeds --cap-cell-size");
    };
    bucket_insert({}, v, 0);
    // iterative DFS carrying (vertex, star) along the stack
    struct Frame {
      int next_arrow;
    };
    std::vector<Frame> frames;
    int cur = v, star = 0;
    frames.push_back({0});
    while (!frames.empty()) {
      int a = frames.back().next_arrow++;
      if (a >= dq.arrow_count()) {
        frames.pop_back();
        if (!stack.empty()) {
          int last = stack.back();
          stack.pop_back();
          star -= dq.star_degree(last);
          cur = stack.empty() ? v : dq.head(stack.back());
        }
        continue;
      }
      if (dq.tail(a) != cur) continue;
      stack.push_back(a);
      cur = dq.head(a);
      star += dq.star_degree(a);
      bucket_insert(stack, cur, star);
      if (static_cast<int>(stack.size()) < len_max_) {
        frames.push_back({0});
      } else {
        stack.pop_back();
        star -= dq.star_degree(a);
        cur = stack.empty() ? v : dq.head(stack.back());
      }
    }
  }
  for (auto& [c, bucket] : buckets_) std::sort(bucket.begin(), bucket.end());
}

const std::vector<ArrowSeq>& PathIndex::paths(const Cell& c) const {
  auto it = buckets_.find(c);
  return it == buckets_.end() ? empty_ : it->second;
}

std::vector<Cell> PathIndex::nonempty_cells(int star_max) const {
  std::vector<Cell> out;
  for (const auto& [c, b] : buckets_)
    if (c.star <= star_max && !b.empty()) out.push_back(c);
  return out;
}

namespace {

long index_in(const std::vector<ArrowSeq>& bucket, const ArrowSeq& p) {
  auto it = std::lower_bound(bucket.begin(), bucket.end(), p);
  if (it == bucket.end() || *it != p) throw Error(Errc::NonHomogeneous, "path outside its cell");
  return static_cast<long>(it - bucket.begin());
}

using Row = std::vector<Scalar>;

// spanning rows of the bidegree-(cell) component of the two-sided ideal
std::vector<Row> ideal_rows(const DoubleQuiver& dq, const RelationFamily& fam,
                            const PathIndex& idx, const Cell& cell) {
  const auto& basis = idx.paths(cell);
  std::vector<Row> rows;
  if (basis.empty()) return rows;
  std::unordered_set<std::string> seen;
  for (const PathVector& g : fam.generators) {
    if (g.is_zero_vector()) continue;
    const Cell& gc = g.cell();
    int lrest = cell.len - gc.len, srest = cell.star - gc.star;
    if (lrest < 0 || srest < 0) continue;
    for (int l1 = 0; l1 <= lrest; ++l1)
      for (int s1 = 0; s1 <= srest; ++s1) {
        const auto& lefts = idx.paths(Cell{cell.src, gc.src, l1, s1});
        const auto& rights = idx.paths(Cell{gc.tgt, cell.tgt, lrest - l1, srest - s1});
        if (lefts.empty() || rights.empty()) continue;
        for (const ArrowSeq& p : lefts)
          for (const ArrowSeq& q : rights) {
            Row row(basis.size(), Scalar::zero(fam.field));
            for (const auto& [mid, c] : g.terms()) {
              ArrowSeq full = p;
              full.insert(full.end(), mid.begin(), mid.end());
              full.insert(full.end(), q.begin(), q.end());
              row[static_cast<size_t>(index_in(basis, full))] += c;
            }
            // normalize and deduplicate scalar multiples
            size_t lead = 0;
            while (lead < row.size() && row[lead].is_zero()) ++lead;
            if (lead == row.size()) continue;
            Scalar inv = row[lead].inverse();
            for (size_t k2 = lead; k2 < row.size(); ++k2) row[k2] *= inv;
            std::string key;
            for (size_t k2 = lead; k2 < row.size(); ++k2)
              if (!row[k2].is_zero()) key += std::to_string(k2) + ":" + row[k2].str() + ";";
            if (seen.insert(key).second) rows.push_back(std::move(row));
          }
      }
  }
  return rows;
}

int rank_rows(const Field& f, const std::vector<Row>& rows) {
  if (rows.empty()) return 0;
  int cols = static_cast<int>(rows.front().size());
  if (f.kind() == FieldKind::Rationals) {
    IntMat m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      Int l(1);
      for (const Scalar& s : rows[i]) {
        Int d = s.rat().get_den();
        l = l / gcd(l, d) * d;
      }
      for (int j = 0; j < cols; ++j) {
        Rat x = rows[i][static_cast<size_t>(j)].rat() * Rat(l);
        m.at(static_cast<int>(i), j) = x.get_num();
      }
    }
    return rank_bareiss(std::move(m));
  }
  Mat<Scalar> m(static_cast<int>(rows.size()), cols, Scalar::zero(f));
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
  return rank(std::move(m));
}

int resolve_threads(const EngineOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  if (const char* env = std::getenv("QHA_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

long GradedDimTable::star_slice(int src, int tgt, int star) const {
  long acc = 0;
  for (const auto& [c, d] : dims)
    if (c.src == src && c.tgt == tgt && c.star == star) acc += d;
  return acc;
}

long GradedDimTable::idempotent_total(int i) const {
  long acc = 0;
  for (const auto& [c, d] : dims)
    if (c.tgt == i) acc += d;
  return acc;
}

long GradedDimTable::total() const {
  long acc = 0;
  for (const auto& [c, d] : dims) acc += d;
  return acc;
}

std::string GradedDimTable::csv(const Quiver& q) const {
  std::ostringstream os;
  os << "i,j,len,star,dim\n";
  for (const auto& [c, d] : dims)
    os << q.vertex_name(c.src) << ',' << q.vertex_name(c.tgt) << ',' << c.len << ',' << c.star
       << ',' << d << '\n';
  return os.str();
}

std::string GradedDimTable::json(const Quiver& q) const {
  nlohmann::ordered_json j;
  j["len_max"] = len_max;
  j["star_max"] = star_max;
  j["total"] = total();
  j["cells"] = nlohmann::ordered_json::array();
  for (const auto& [c, d] : dims)
    j["cells"].push_back({{"i", q.vertex_name(c.src)},
                          {"j", q.vertex_name(c.tgt)},
                          {"len", c.len},
                          {"star", c.star},
                          {"dim", d}});
  return j.dump();
}

GradedDimTable graded_dim(const DoubleQuiver& dq, const RelationFamily& fam, int len_max,
                          int star_max, const EngineOptions& opts) {
  PathIndex idx(dq, len_max, opts.cap_cell_size);
  std::vector<Cell> cells = idx.nonempty_cells(star_max);
  std::vector<long> result(cells.size(), 0);

  int threads = std::min<int>(resolve_threads(opts), static_cast<int>(cells.size()));
  std::atomic<size_t> next{0};
  std::exception_ptr fault;
  std::mutex fault_mu;
  auto worker = [&]() {
    while (true) {
      size_t k = next.fetch_add(1);
      if (k >= cells.size()) return;
      try {
        const Cell& c = cells[k];
        auto rows = ideal_rows(dq, fam, idx, c);
        result[k] = idx.count(c) - rank_rows(fam.field, rows);
      } catch (...) {
        std::lock_guard<std::mutex> lock(fault_mu);
        if (!fault) fault = std::current_exception();
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (fault) std::rethrow_exception(fault);

  GradedDimTable table;
  table.len_max = len_max;
  table.star_max = star_max;
  for (size_t k = 0; k < cells.size(); ++k)
    if (result[k] != 0) table.dims[cells[k]] = result[k];
  return table;
}

bool element_is_zero(const DoubleQuiver& dq, const RelationFamily& fam, const PathVector& elem,
                     const EngineOptions& opts) {
  if (elem.is_zero_vector()) return true;
  const Cell& cell = elem.cell();
  PathIndex idx(dq, cell.len, opts.cap_cell_size);
  auto rows = ideal_rows(dq, fam, idx, cell);
  int base_rank = rank_rows(fam.field, rows);
  const auto& basis = idx.paths(cell);
  Row extra(basis.size(), Scalar::zero(fam.field));
  for (const auto& [p, c] : elem.terms()) extra[static_cast<size_t>(index_in(basis, p))] += c;
  rows.push_back(std::move(extra));
  return rank_rows(fam.field, rows) == base_rank;
}

// ---- element grammar ----

namespace {

struct ElementParser {
  const DoubleQuiver& dq;
  Field field;
  const Weight* weight;
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool ident_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  std::string ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && ident_char(s[i])) ++i;
    if (i < s.size() && s[i] == '\'') ++i;  // reverse-arrow marker
    if (start == i) throw Error(Errc::ParseError, "expected a name at '" + s.substr(start) + "'");
    return s.substr(start, i - start);
  }

  Scalar coefficient() {
    if (peek() == '(') {
      size_t start = ++i;
      int depth = 1;
      while (i < s.size() && depth > 0) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        ++i;
      }
      if (depth != 0) throw Error(Errc::ParseError, "unbalanced parentheses");
      return Scalar::parse(field, s.substr(start, i - start - 1));
    }
    size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    return Scalar::parse(field, s.substr(start, i - start));
  }

  PathVector macro(const std::string& name) {
    skip_ws();
    if (peek() != '(') throw Error(Errc::ParseError, name + " needs (vertex)");
    ++i;
    size_t start = i;
    while (i < s.size() && s[i] != ')') ++i;
    if (i >= s.size()) throw Error(Errc::ParseError, "unbalanced parentheses");
    std::string vname = s.substr(start, i - start);
    ++i;
    // trim
    while (!vname.empty() && std::isspace(static_cast<unsigned char>(vname.front()))) vname.erase(vname.begin());
    while (!vname.empty() && std::isspace(static_cast<unsigned char>(vname.back()))) vname.pop_back();
    int v = dq.base().vertex_index(vname);
    if (name == "rho") return lift(mesh_relation(dq, v));
    if (!weight) throw Error(Errc::ParseError, name + " needs --weight");
    if (weight->field != field) throw Error(Errc::FieldMismatch, "weight field vs element field");
    PathVector w = mesh_relation(dq, v, weight);
    if (name == "wrho") return w;
    if (name == "wrho2") return pv_mul(dq, w, w);
    throw Error(Errc::ParseError, "unknown macro '" + name + "'");
  }

  PathVector lift(const PathVector& g) {
    if (g.field() == field) return g;
    PathVector out(field);
    if (g.has_cell()) out = PathVector(field, g.cell());
    for (const auto& [p, c] : g.terms()) out.add_term(dq, p, Scalar::from_rat(field, c.rat()));
    return out;
  }

  PathVector term() {
    Scalar coeff = Scalar::one(field);
    char c = peek();
    if (c == '(') {
      coeff = coefficient();
      if (peek() != '*') throw Error(Errc::ParseError, "expected '*' after a coefficient");
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      // digits followed by '*' are a coefficient, otherwise an arrow name
      size_t save = i;
      Scalar maybe = coefficient();
      if (peek() == '*') {
        coeff = maybe;
        ++i;
      } else {
        i = save;
      }
    }
    std::string name = ident();
    PathVector pv(field);
    if ((name == "rho" || name == "wrho" || name == "wrho2") && peek() == '(') {
      pv = macro(name);
    } else {
      ArrowSeq path;
      path.push_back(dq.arrow_index(name));
      while (peek() == '.') {
        ++i;
        path.push_back(dq.arrow_index(ident()));
      }
      pv.add_term(dq, path, Scalar::one(field));
    }
    pv.scale(coeff);
    return pv;
  }

  PathVector parse() {
    PathVector acc(field);
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++i;
    } else if (peek() == '+') {
      ++i;
    }
    PathVector t = term();
    if (sign < 0) t.scale(-Scalar::one(field));
    acc.add(t);
    while (true) {
      char c = peek();
      if (c == '\0') break;
      if (c != '+' && c != '-') throw Error(Errc::ParseError, "expected + or - near '" + s.substr(i) + "'");
      ++i;
      PathVector u = term();
      if (c == '-') u.scale(-Scalar::one(field));
      acc.add(u);
    }
    return acc;
  }
};

}  // namespace

PathVector parse_element(const DoubleQuiver& dq, const Field& f, const Weight* v,
                         const std::string& text) {
  ElementParser p{dq, f, v, text};
  if (p.peek() == '\0') throw Error(Errc::ParseError, "empty element");
  return p.parse();
}

VerifyReport verify_against_knitting(const Quiver& q, const Weight& v, int i,
                                     const EngineOptions& opts) {
  TranslationQuiver zq(q);
  if (!zq.cls().dynkin()) throw Error(Errc::NotDynkin, "verification compares against the finite window");
  RegularityReport reg = is_regular(q, v);
  if (!reg.regular)
    throw Error(Errc::IrregularWeight, "the decomposition theorem needs a regular weight");

  int h = zq.cls().coxeter_number;
  int len_max = 2 * h - 4 + (opts.no_trust_bound ? 1 : 0);
  int star_max = h - 1;
  DoubleQuiver dq(q);
  GradedDimTable table = graded_dim(dq, qh_family(dq, v), len_max, star_max, opts);

  auto layers = zq.ladder(IndecMultiset{{ZQVertex{i, 0}, 1}}, h - 1);

  VerifyReport rep;
  rep.basepoint = i;
  for (int n = 0; n <= h - 1; ++n) {
    DimVec knit = zq.dimvec(layers[static_cast<size_t>(n)]);
    for (int j = 0; j < q.size(); ++j) {
      VerifyRow row;
      row.kind = "layer";
      row.star = n;
      row.vertex = j;
      row.engine = table.star_slice(j, i, n);
      row.knit = knit[static_cast<size_t>(j)].get_si();
      row.ok = row.engine == row.knit;
      rep.engine_total += row.engine;
      rep.knit_total += row.knit;
      if (!row.ok && !rep.first_mismatch) rep.first_mismatch = row;
      rep.ok = rep.ok && row.ok;
      rep.rows.push_back(row);
    }
  }
  // the top layer is dual to the path spaces: dim e_j Lambda_{h-2} e_i = dim e_i A e_j
  for (int j = 0; j < q.size(); ++j) {
    VerifyRow row;
    row.kind = "duality";
    row.star = h - 2;
    row.vertex = j;
    row.engine = table.star_slice(j, i, h - 2);
    row.knit = zq.cartan().at(i, j).get_si();
    row.ok = row.engine == row.knit;
    if (!row.ok && !rep.first_mismatch) rep.first_mismatch = row;
    rep.ok = rep.ok && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace qha
