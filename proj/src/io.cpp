#include "hardy/io.hpp"

#include <cmath>
#include <limits>

namespace hardy::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string type_name(const json& j) { return j.type_name(); }

}  // namespace

std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

bool has(const json& obj, const std::string& key) { return obj.is_object() && obj.contains(key); }

const json& member(const json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) throw InputError(pointer, "expected an object, found " + type_name(obj));
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(child(pointer, key), "missing field '" + key + "'");
  return *it;
}

double read_number(const json& j, const std::string& pointer) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  }
  throw InputError(pointer, "expected a number, found " + type_name(j));
}

long long read_integer(const json& j, const std::string& pointer) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (std::floor(d) == d && std::abs(d) < 9e15) return static_cast<long long>(d);
  }
  throw InputError(pointer, "expected an integer, found " + type_name(j));
}

cplx read_complex(const json& j, const std::string& pointer) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InputError(pointer, "expected a complex number [re, im]");
}

std::vector<cplx> read_complex_list(const json& j, const std::string& pointer) {
  if (!j.is_array()) throw InputError(pointer, "expected an array, found " + type_name(j));
  std::vector<cplx> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_complex(j[i], child(pointer, i)));
  return out;
}

std::vector<double> read_number_list(const json& j, const std::string& pointer) {
  if (!j.is_array()) throw InputError(pointer, "expected an array, found " + type_name(j));
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_number(j[i], child(pointer, i)));
  return out;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json complex_list_json(const std::vector<cplx>& zs) {
  json a = json::array();
  for (const cplx& z : zs) a.push_back(complex_json(z));
  return a;
}

json number_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json fn_to_json(const AnalyticFn& f) {
  return std::visit(
      overloaded{
          [](const fn::Constant& n) -> json {
            return {{"type", "constant"}, {"value", complex_json(n.c)}};
          },
          [](const fn::PeakPow& n) -> json {
            return {{"type", "peak_pow"}, {"a", complex_json(n.a)}, {"q", n.q}};
          },
          [](const fn::CauchyKernel& n) -> json {
            return {{"type", "cauchy_kernel"}, {"b", complex_json(n.b)}};
          },
          [](const fn::BlaschkeFactor& n) -> json {
            return {{"type", "blaschke_factor"}, {"b", complex_json(n.b)}};
          },
          [](const fn::Product& n) -> json {
            json fs = json::array();
            for (const auto& g : n.factors) fs.push_back(fn_to_json(g));
            return {{"type", "product"}, {"factors", fs}};
          },
          [](const fn::Sum& n) -> json {
            json ts = json::array();
            for (const auto& t : n.terms)
              ts.push_back({{"coef", complex_json(t.coef)}, {"f", fn_to_json(t.f)}});
            return {{"type", "sum"}, {"terms", ts}};
          },
          [](const fn::Power& n) -> json {
            return {{"type", "power"}, {"base", fn_to_json(n.base)}, {"k", n.k}};
          },
          [](const fn::SchurChain& n) -> json {
            return {{"type", "schur_chain"},
                    {"scale", n.scale},
                    {"nodes", complex_list_json(n.nodes)},
                    {"params", complex_list_json(n.params)}};
          },
      },
      f.node().v);
}

AnalyticFn fn_from_json(const json& j, const std::string& pointer) {
  const json& t = member(j, "type", pointer);
  if (!t.is_string()) throw InputError(child(pointer, "type"), "type must be a string");
  const std::string type = t.get<std::string>();
  auto field = [&](const char* key) -> const json& { return member(j, key, pointer); };
  auto where = [&](const char* key) { return child(pointer, key); };

  if (type == "constant") return constant(read_complex(field("value"), where("value")));
  if (type == "peak_pow") {
    const cplx a = read_complex(field("a"), where("a"));
    const long long q = read_integer(field("q"), where("q"));
    if (q < 1 || q > std::numeric_limits<int>::max()) throw InputError(where("q"), "q must be a positive int");
    return at(where("a"), [&] { return peak_pow(BoundaryPoint(a), static_cast<int>(q)); });
  }
  if (type == "cauchy_kernel" || type == "blaschke_factor") {
    const cplx b = read_complex(field("b"), where("b"));
    return at(where("b"), [&] {
      return type == "cauchy_kernel" ? cauchy_kernel(InteriorPoint(b)) : blaschke_factor(InteriorPoint(b));
    });
  }
  if (type == "product") {
    const json& fs = field("factors");
    if (!fs.is_array()) throw InputError(where("factors"), "factors must be an array");
    std::vector<AnalyticFn> factors;
    for (std::size_t i = 0; i < fs.size(); ++i) factors.push_back(fn_from_json(fs[i], child(where("factors"), i)));
    return product(std::move(factors));
  }
  if (type == "sum") {
    const json& ts = field("terms");
    if (!ts.is_array()) throw InputError(where("terms"), "terms must be an array");
    std::vector<fn::Term> terms;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const std::string p = child(where("terms"), i);
      terms.push_back({read_complex(member(ts[i], "coef", p), child(p, "coef")),
                       fn_from_json(member(ts[i], "f", p), child(p, "f"))});
    }
    return sum(std::move(terms));
  }
  if (type == "power") {
    const long long k = read_integer(field("k"), where("k"));
    if (k < 0 || k > std::numeric_limits<int>::max()) throw InputError(where("k"), "k must be a non-negative int");
    return power(fn_from_json(field("base"), where("base")), static_cast<int>(k));
  }
  if (type == "schur_chain") {
    const double scale = read_number(field("scale"), where("scale"));
    auto nodes = read_complex_list(field("nodes"), where("nodes"));
    auto params = read_complex_list(field("params"), where("params"));
    return at(pointer, [&] { return schur_chain(scale, std::move(nodes), std::move(params)); });
  }
  throw InputError(child(pointer, "type"), "unknown function type '" + type + "'");
}

json bound_json(const CertifiedBound& b, const std::string& tag) {
  return {{"estimate", number_json(b.estimate)},
          {"radius", number_json(b.radius)},
          {"lower", number_json(b.lower())},
          {"upper", number_json(b.upper())},
          {"method", b.method},
          {"tag", tag}};
}

json matrix_json(const Eigen::MatrixXcd& m) {
  json cols = json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    json c = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) c.push_back(complex_json(m(i, j)));
    cols.push_back(c);
  }
  return cols;
}

Eigen::MatrixXcd matrix_from_json(const json& j, const std::string& pointer) {
  if (!j.is_array() || j.empty()) throw InputError(pointer, "expected a nonempty list of columns");
  std::vector<std::vector<cplx>> cols;
  for (std::size_t c = 0; c < j.size(); ++c) {
    cols.push_back(read_complex_list(j[c], child(pointer, c)));
    if (cols.back().size() != cols.front().size() || cols.back().empty())
      throw InputError(child(pointer, c), "columns must share one nonzero length");
  }
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(cols.front().size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t i = 0; i < cols[c].size(); ++i)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = cols[c][i];
  return m;
}

json system_json(const FiniteSystem& s) {
  json j{{"p", number_json(s.p)}, {"vectors", matrix_json(s.vectors)}};
  if (s.duals) j["duals"] = matrix_json(*s.duals);
  return j;
}

FiniteSystem system_from_json(const json& j, const std::string& pointer) {
  FiniteSystem s;
  s.p = has(j, "p") ? read_number(j["p"], child(pointer, "p")) : 2.0;
  if (!(s.p >= 1.0)) throw InputError(child(pointer, "p"), "p must be >= 1 or \"inf\"");
  s.vectors = matrix_from_json(member(j, "vectors", pointer), child(pointer, "vectors"));
  if (has(j, "duals")) {
    s.duals = matrix_from_json(j["duals"], child(pointer, "duals"));
    if (s.duals->rows() != s.vectors.rows() || s.duals->cols() != s.vectors.cols())
      throw InputError(child(pointer, "duals"), "duals must match the shape of vectors");
  }
  return s;
}

json arc_system_json(const ArcSystem& s) {
  json arcs = json::array();
  for (const Arc& a : s.arcs) arcs.push_back(json::array({a.lo, a.hi}));
  return {{"arcs", arcs}, {"points", s.points}, {"budgets", s.budgets}, {"epsilon", s.epsilon}};
}

ArcSystem arc_system_from_json(const json& j, const std::string& pointer) {
  ArcSystem s;
  const json& arcs = member(j, "arcs", pointer);
  if (!arcs.is_array()) throw InputError(child(pointer, "arcs"), "arcs must be an array");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string p = child(child(pointer, "arcs"), i);
    const auto ends = read_number_list(arcs[i], p);
    if (ends.size() != 2) throw InputError(p, "an arc is a pair [lo, hi] of angles");
    s.arcs.push_back(at(p, [&] { return make_arc(ends[0], ends[1]); }));
  }
  s.points = read_number_list(member(j, "points", pointer), child(pointer, "points"));
  s.budgets = read_number_list(member(j, "budgets", pointer), child(pointer, "budgets"));
  s.epsilon = read_number(member(j, "epsilon", pointer), child(pointer, "epsilon"));
  at(pointer, [&] { s.validate(); });
  return s;
}

}  // namespace hardy::io
