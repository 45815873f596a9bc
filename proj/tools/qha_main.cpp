// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0
//
// qha: exact computations around preprojective and quiver Heisenberg
// algebras. One subcommand per surface; all numeric output is exact.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qha/pathalg.hpp"

using namespace qha;
using nlohmann::ordered_json;

namespace {

struct Config {
  std::string quiver_path;
  std::string field_spec = "Q";
  std::string weight_spec;
  int max_len = -1;
  int max_star = -1;
  long depth = 8;
  std::string format = "text";
  long cap_cell_size = 200000;
  bool no_trust_bound = false;
};

Quiver load_quiver(const Config& cfg) { return Quiver::parse_file(cfg.quiver_path); }

Field load_field(const Config& cfg) { return Field::parse(cfg.field_spec); }

// --weight accepts inline entries or @file; a `field:` header in the file
// overrides --field
Weight load_weight(const Config& cfg) {
  if (cfg.weight_spec.empty()) throw Error(Errc::ParseError, "this command needs --weight");
  std::string entries = cfg.weight_spec;
  Field f = load_field(cfg);
  if (entries.front() == '@') {
    std::ifstream in(entries.substr(1));
    if (!in) throw Error(Errc::ParseError, "cannot open weight file");
    std::string line, data;
    while (std::getline(in, line)) {
      size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (line.rfind("field:", 0) == 0) {
        f = Field::parse(line.substr(6));
        continue;
      }
      data = line;
    }
    entries = data;
  }
  return parse_weight(f, entries);
}

EngineOptions engine_options(const Config& cfg) {
  EngineOptions opts;
  opts.cap_cell_size = cfg.cap_cell_size;
  opts.no_trust_bound = cfg.no_trust_bound;
  return opts;
}

std::string matrix_text(const IntMat& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[[" : " [");
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j);
    os << (i + 1 == m.rows() ? "]]" : "],") << '\n';
  }
  return os.str();
}

ordered_json matrix_json(const IntMat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_si());
    rows.push_back(row);
  }
  return rows;
}

std::string poly_text(const std::vector<Rat>& coeffs, const std::string& var) {
  std::string out;
  for (size_t k = coeffs.size(); k-- > 0;) {
    const Rat& c = coeffs[k];
    if (c == 0) continue;
    Rat a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::ostringstream os;
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    out += os.str();
  }
  return out.empty() ? "0" : out;
}

ordered_json dimvec_json(const DimVec& d) {
  ordered_json arr = ordered_json::array();
  for (const Int& x : d) arr.push_back(x.get_si());
  return arr;
}

std::string linear_form_text(const Quiver& q, const DimVec& d) {
  std::string out;
  for (int j = 0; j < q.size(); ++j) {
    const Int& c = d[static_cast<size_t>(j)];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Int a = abs(c);
    if (a != 1) out += a.get_str() + "*";
    out += "v_" + q.vertex_name(j);
  }
  return out.empty() ? "0" : out;
}

int cmd_classify(const Config& cfg) {
  Quiver q = load_quiver(cfg);
  QuiverClass cls = classify(q);
  if (cfg.format == "json") {
    ordered_json j;
    j["kind"] = cls.kind == QuiverClass::Kind::Dynkin          ? "Dynkin"
                : cls.kind == QuiverClass::Kind::ExtendedDynkin ? "ExtendedDynkin"
                                                                : "Wild";
    j["name"] = cls.name();
    if (!cls.dynkin() && !cls.extended_dynkin()) {
      std::cout << j.dump() << '\n';
      return 0;
    }
    j["rank"] = cls.rank;
    if (cls.dynkin()) j["coxeter_number"] = cls.coxeter_number;
    std::cout << j.dump() << '\n';
    return 0;
  }
  if (cls.dynkin())
    std::cout << "Dynkin " << cls.name() << ", h=" << cls.coxeter_number << '\n';
  else if (cls.extended_dynkin())
    std::cout << "Extended Dynkin " << cls.name() << '\n';
  else
    std::cout << "wild\n";
  return 0;
}

int cmd_cartan(const Config& cfg) {
  Quiver q = load_quiver(cfg);
  IntMat c = cartan_matrix(q);
  if (cfg.format == "json") {
    ordered_json j;
    j["cartan"] = matrix_json(c);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "C =\n" << matrix_text(c);
  }
  return 0;
}

int cmd_coxeter(const Config& cfg) {
  Quiver q = load_quiver(cfg);
  IntMat phi = coxeter_phi(q), psi = coxeter_psi(q);
  std::vector<Rat> cp = char_poly(to_rat(psi));
  if (cfg.format == "json") {
    ordered_json j;
    j["phi"] = matrix_json(phi);
    j["psi"] = matrix_json(psi);
    ordered_json coeffs = ordered_json::array();
    for (const Rat& c : cp) {
      std::ostringstream os;
      os << c;
      coeffs.push_back(os.str());
    }
    j["charpoly_psi_low_to_high"] = coeffs;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "Phi =\n" << matrix_text(phi) << "Psi =\n" << matrix_text(psi)
              << "charpoly(Psi) = " << poly_text(cp, "t") << '\n';
  }
  return 0;
}

int cmd_indecs(const Config& cfg) {
  Quiver q = load_quiver(cfg);
  TranslationQuiver zq(q);
  auto indecs = zq.enumerate_indecomposables();
  Int dim_sum(0), dim_sq(0);
  for (const auto& [x, d] : indecs) {
    Int s = dimvec_sum(d);
    dim_sum += s;
    dim_sq += s * s;
  }
  if (cfg.format == "json") {
    ordered_json j;
    j["count"] = indecs.size();
    j["dim_sum"] = dim_sum.get_si();
    j["dim_square_sum"] = dim_sq.get_si();
    j["indecomposables"] = ordered_json::array();
    for (const auto& [x, d] : indecs)
      j["indecomposables"].push_back({{"name", zq.position_name(x)},
                                      {"vertex", q.vertex_name(x.vertex)},
                                      {"power", x.power},
                                      {"dimvec", dimvec_json(d)}});
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& [x, d] : indecs)
      std::cout << zq.position_name(x) << "  (" << q.vertex_name(x.vertex) << "," << x.power
                << ")  " << dimvec_str(d) << "  dim " << dimvec_sum(d) << '\n';
    std::cout << "count " << indecs.size() << ", sum dim " << dim_sum << ", sum dim^2 " << dim_sq
              << '\n';
  }
  return 0;
}

int cmd_arq(const Config& cfg) {
  Quiver q = load_quiver(cfg);
  TranslationQuiver zq(q);
  if (classify(q).dynkin() && cfg.depth < 0)
    std::cout << zq.export_dot_module_window();
  else
    std::cout << zq.export_dot(0, std::max(cfg.depth, 0L));
  return 0;
}

IndecMultiset parse_start(const Quiver& q, const std::string& spec) {
  IndecMultiset m;
  std::istringstream is(spec);
  std::string item;
  while (std::getline(is, item, '+')) {
    long mult = 1;
    size_t xpos = item.find('x');
    std::string core = item;
    if (xpos != std::string::npos && item.find(',') != std::string::npos && xpos > item.find(',')) {
      mult = std::stol(item.substr(xpos + 1));
      core = item.substr(0, xpos);
    }
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t");
      size_t e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    core = trim(core);
    if (core.rfind("P_", 0) == 0) {
      m[ZQVertex{q.vertex_index(core.substr(2)), 0}] += mult;
    } else {
      size_t comma = core.find(',');
      if (comma == std::string::npos)
        throw Error(Errc::ParseError, "start object: want P_v or v,m entries joined by +");
      int v = q.vertex_index(trim(core.substr(0, comma)));
      long p = std::stol(core.substr(comma + 1));
      m[ZQVertex{v, p}] += mult;
    }
  }
  if (m.empty()) throw Error(Errc::ParseError, "empty start object");
  return m;
}

int cmd_ladder(const Config& cfg, const std::string& start, long steps) {
  Quiver q = load_quiver(cfg);
  TranslationQuiver zq(q);
  IndecMultiset m = parse_start(q, start);
  auto layers = zq.ladder(m, steps);
  if (cfg.format == "json") {
    ordered_json j = ordered_json::array();
    for (size_t n = 0; n < layers.size(); ++n)
      j.push_back({{"n", n},
                   {"objects", ordered_json::parse(zq.multiset_json(layers[n]))},
                   {"dimvec", dimvec_json(zq.dimvec(layers[n]))}});
    std::cout << j.dump() << '\n';
  } else {
    for (size_t n = 0; n < layers.size(); ++n)
      std::cout << "L_" << n << " = " << zq.multiset_str(layers[n]) << "   "
                << dimvec_str(zq.dimvec(layers[n])) << '\n';
  }
  return 0;
}

int cmd_regular(const Config& cfg, bool symbolic, long depth) {
  Quiver q = load_quiver(cfg);
  if (symbolic) {
    auto forms = regularity_forms(q);
    if (cfg.format == "json") {
      ordered_json j = ordered_json::array();
      for (const DimVec& d : forms) j.push_back(dimvec_json(d));
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "regular iff all of the following are nonzero:\n";
      for (const DimVec& d : forms) std::cout << "  " << linear_form_text(q, d) << '\n';
    }
    return 0;
  }
  Weight v = load_weight(cfg);
  RegularityReport rep =
      classify(q).dynkin() ? is_regular(q, v) : is_semiregular(q, v, depth);
  if (cfg.format == "json") {
    ordered_json j;
    j["sincere"] = rep.sincere;
    j["regular"] = rep.regular;
    j["semiregular"] = rep.semiregular;
    if (rep.depth_checked >= 0) j["depth_checked"] = rep.depth_checked;
    j["witnesses"] = ordered_json::array();
    for (const DimVec& d : rep.witnesses) j["witnesses"].push_back(dimvec_json(d));
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "sincere: " << (rep.sincere ? "yes" : "no") << '\n';
    if (rep.depth_checked >= 0) {
      std::cout << "semiregular (to depth " << rep.depth_checked
                << "): " << (rep.semiregular ? "yes" : "no") << '\n';
    } else {
      std::cout << "regular: " << (rep.regular ? "yes" : "no") << '\n';
    }
    for (const DimVec& d : rep.witnesses)
      std::cout << "  vanishing at " << dimvec_str(d) << '\n';
  }
  return 0;
}

int cmd_eigenweight(const Config& cfg, int vertex, bool an_shortcut) {
  Quiver q = load_quiver(cfg);
  EigenWeight ew = an_shortcut ? an_shortcut_weight(q) : dynkin_eigenweight(q, vertex);
  if (cfg.format == "json") {
    ordered_json j;
    j["field"] = ew.weight.field.describe();
    ordered_json entries = ordered_json::array();
    for (const Scalar& s : ew.weight.entries) entries.push_back(s.str());
    j["weight"] = entries;
    j["eigenvalue"] = ew.eigenvalue.str();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "field " << ew.weight.field.describe() << '\n'
              << "v = " << ew.weight.str() << '\n'
              << "Psi v = lambda v with lambda = " << ew.eigenvalue.str() << '\n';
  }
  return 0;
}

int cmd_vm(const Config& cfg, const std::string& lambda_text, long count) {
  Field f = load_field(cfg);
  Scalar lambda = Scalar::parse(f, lambda_text);
  GeomSeries gs = check_vm(lambda, count);
  if (cfg.format == "json") {
    ordered_json j;
    j["lambda"] = lambda.str();
    j["values"] = ordered_json::array();
    for (const Scalar& s : gs.values) j["values"].push_back(s.str());
    j["all_nonzero"] = gs.all_nonzero;
    std::cout << j.dump() << '\n';
  } else {
    for (size_t m = 0; m < gs.values.size(); ++m)
      std::cout << "V_" << m + 1 << " = " << gs.values[m].str()
                << (gs.values[m].is_zero() ? "   <- zero" : "") << '\n';
    std::cout << (gs.all_nonzero ? "all nonzero" : "vanishing detected") << '\n';
  }
  return 0;
}

RelationFamily load_family(const Config& cfg, const DoubleQuiver& dq, const std::string& name) {
  if (name == "pre" || name == "preprojective") return preprojective_family(dq, load_field(cfg));
  if (name == "qh" || name == "heisenberg") return qh_family(dq, load_weight(cfg));
  throw Error(Errc::ParseError, "unknown family '" + name + "' (want pre or qh)");
}

int cmd_dims(const Config& cfg, const std::string& family_name) {
  Quiver q = load_quiver(cfg);
  DoubleQuiver dq(q);
  RelationFamily fam = load_family(cfg, dq, family_name);
  QuiverClass cls = classify(q);
  int len_max = cfg.max_len;
  int star_max = cfg.max_star;
  if (len_max < 0) {
    if (!cls.dynkin()) throw Error(Errc::ParseError, "non-Dynkin quivers need --max-len");
    len_max = 2 * cls.coxeter_number - 4;
  }
  bool assert_band = cfg.no_trust_bound && cls.dynkin() && cfg.max_len < 0;
  if (cfg.no_trust_bound) ++len_max;
  if (star_max < 0) star_max = cls.dynkin() ? cls.coxeter_number - 1 : len_max;
  GradedDimTable table = graded_dim(dq, fam, len_max, star_max, engine_options(cfg));
  if (assert_band) {
    long band = 0;
    for (const auto& [c, d] : table.dims)
      if (c.len == len_max) band += d;
    if (band != 0) {
      std::cerr << "extra band at path length " << len_max << " is nonzero (dim " << band
                << "): the 2h-4 bound fails here\n";
      return 1;
    }
  }
  if (cfg.format == "csv") {
    std::cout << table.csv(q);
  } else if (cfg.format == "json") {
    std::cout << table.json(q) << '\n';
  } else {
    std::cout << table.csv(q);
    std::cout << "total " << table.total() << '\n';
    for (int i = 0; i < q.size(); ++i)
      std::cout << "dim e" << q.vertex_name(i) << " column: " << table.idempotent_total(i) << '\n';
  }
  return 0;
}

int cmd_zero(const Config& cfg, const std::string& family_name, const std::string& element) {
  Quiver q = load_quiver(cfg);
  DoubleQuiver dq(q);
  RelationFamily fam = load_family(cfg, dq, family_name);
  const Weight* w = fam.weight ? &*fam.weight : nullptr;
  PathVector elem = parse_element(dq, fam.field, w, element);
  bool zero = element_is_zero(dq, fam, elem, engine_options(cfg));
  if (cfg.format == "json") {
    ordered_json j;
    j["element"] = elem.str(dq);
    j["zero"] = zero;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (zero ? "ZERO" : "NONZERO") << '\n';
  }
  return 0;
}

int cmd_verify(const Config& cfg, const std::string& vertex) {
  Quiver q = load_quiver(cfg);
  Weight v = load_weight(cfg);
  std::vector<int> basepoints;
  if (vertex == "all")
    for (int i = 0; i < q.size(); ++i) basepoints.push_back(i);
  else
    basepoints.push_back(q.vertex_index(vertex));

  bool all_ok = true;
  ordered_json jall = ordered_json::array();
  for (int i : basepoints) {
    VerifyReport rep = verify_against_knitting(q, v, i, engine_options(cfg));
    all_ok = all_ok && rep.ok;
    if (cfg.format == "json") {
      ordered_json j;
      j["vertex"] = q.vertex_name(i);
      j["ok"] = rep.ok;
      j["engine_total"] = rep.engine_total;
      j["knit_total"] = rep.knit_total;
      j["rows"] = ordered_json::array();
      for (const VerifyRow& r : rep.rows)
        j["rows"].push_back({{"kind", r.kind},
                             {"star", r.star},
                             {"j", q.vertex_name(r.vertex)},
                             {"engine", r.engine},
                             {"knit", r.knit},
                             {"ok", r.ok}});
      jall.push_back(j);
    } else {
      std::cout << "Lambda e_" << q.vertex_name(i) << ":\n";
      for (const VerifyRow& r : rep.rows)
        std::cout << "  " << (r.ok ? "[ok]  " : "[FAIL]") << ' ' << r.kind << " n=" << r.star
                  << " j=" << q.vertex_name(r.vertex) << " engine=" << r.engine
                  << " knit=" << r.knit << '\n';
      std::cout << "  total " << rep.engine_total << (rep.ok ? "  all green" : "  MISMATCH")
                << '\n';
    }
  }
  if (cfg.format == "json") std::cout << jall.dump() << '\n';
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for preprojective and quiver Heisenberg algebras"};
  app.require_subcommand(1);

  Config cfg;
  std::string start = "P_1", lambda_text = "1", family = "qh", vertex = "all", eigen_vertex;
  long steps = 4, count = 5;
  bool symbolic = false, an_shortcut = false;

  auto add_common = [&cfg](CLI::App* sub, bool with_quiver = true) {
    if (with_quiver) sub->add_option("quiver", cfg.quiver_path, "quiver file")->required();
    sub->add_option("--field", cfg.field_spec, "Q, Fp(p) or Q(zeta_n)");
    sub->add_option("--weight", cfg.weight_spec, "comma entries or @file");
    sub->add_option("--format", cfg.format, "text, json, csv or dot");
    sub->add_option("--max-len", cfg.max_len, "path-length bound");
    sub->add_option("--max-star", cfg.max_star, "star-degree bound");
    sub->add_option("--depth", cfg.depth, "scan depth for infinite type");
    sub->add_option("--cap-cell-size", cfg.cap_cell_size, "per-cell basis cap");
    sub->add_flag("--no-trust-bound", cfg.no_trust_bound, "scan one band past 2h-4");
  };

  add_common(app.add_subcommand("classify", "Dynkin / extended Dynkin / wild"));
  add_common(app.add_subcommand("cartan", "Cartan matrix"));
  add_common(app.add_subcommand("coxeter", "Coxeter matrices and charpoly"));
  add_common(app.add_subcommand("indecs", "indecomposables of a Dynkin quiver"));
  auto* arq = app.add_subcommand("arq", "AR-quiver DOT export");
  add_common(arq);
  arq->get_option("--depth")->default_val(-1);
  auto* ladder_cmd = app.add_subcommand("ladder", "rad^n approximation ladder");
  add_common(ladder_cmd);
  ladder_cmd->add_option("--start", start, "P_v or v,m[xk] items joined by +");
  ladder_cmd->add_option("--steps", steps, "last step n");
  auto* regular_cmd = app.add_subcommand("regular", "weight regularity report");
  add_common(regular_cmd);
  regular_cmd->add_flag("--symbolic", symbolic, "print the linear forms instead");
  auto* eigen_cmd = app.add_subcommand("eigenweight", "regular Psi-eigenweight over Q(zeta_h)");
  add_common(eigen_cmd);
  eigen_cmd->add_option("--vertex", eigen_vertex, "base vertex of the construction");
  eigen_cmd->add_flag("--an-shortcut", an_shortcut, "directed A_N closed form");
  auto* vm_cmd = app.add_subcommand("vm", "geometric partial sums V_m(lambda)");
  add_common(vm_cmd, false);
  vm_cmd->add_option("--lambda", lambda_text, "scalar in the ambient field")->required();
  vm_cmd->add_option("--count", count, "largest m");
  auto* dims_cmd = app.add_subcommand("dims", "bigraded dimension table");
  add_common(dims_cmd);
  dims_cmd->add_option("--family", family, "pre or qh");
  auto* zero_cmd = app.add_subcommand("zero", "ideal membership of an element");
  add_common(zero_cmd);
  zero_cmd->add_option("--family", family, "pre or qh");
  std::string element;
  zero_cmd->add_option("element", element, "e.g. \"wrho2(2)\" or \"1 * a.a' - 1 * b'.b\"")
      ->required();
  auto* verify_cmd = app.add_subcommand("verify", "relation engine vs knitting scoreboard");
  add_common(verify_cmd);
  verify_cmd->add_option("--vertex", vertex, "basepoint vertex or 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("classify")) return cmd_classify(cfg);
    if (app.got_subcommand("cartan")) return cmd_cartan(cfg);
    if (app.got_subcommand("coxeter")) return cmd_coxeter(cfg);
    if (app.got_subcommand("indecs")) return cmd_indecs(cfg);
    if (app.got_subcommand("arq")) return cmd_arq(cfg);
    if (app.got_subcommand("ladder")) return cmd_ladder(cfg, start, steps);
    if (app.got_subcommand("regular")) return cmd_regular(cfg, symbolic, cfg.depth);
    if (app.got_subcommand("eigenweight")) {
      Quiver q = load_quiver(cfg);
      int v0 = eigen_vertex.empty() ? 0 : q.vertex_index(eigen_vertex);
      return cmd_eigenweight(cfg, v0, an_shortcut);
    }
    if (app.got_subcommand("vm")) return cmd_vm(cfg, lambda_text, count);
    if (app.got_subcommand("dims")) return cmd_dims(cfg, family);
    if (app.got_subcommand("zero")) return cmd_zero(cfg, family, element);
    if (app.got_subcommand("verify")) return cmd_verify(cfg, vertex);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::ResourceBound ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
