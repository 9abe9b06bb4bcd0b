#include "congrue/json_io.hpp"

namespace congrue {

namespace {

const Json& require(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) {
    throw ParseError(std::string("missing field \"") + field + "\"");
  }
  return j.at(field);
}

std::string string_field(const Json& j, const char* context) {
  if (!j.is_string()) {
    throw ParseError(std::string("field \"") + context +
                     "\" must hold decimal strings");
  }
  return j.get<std::string>();
}

std::vector<std::vector<int>> int_matrix(const Json& j, const char* field,
                                         int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    throw ParseError(std::string("field \"") + field + "\" must be a " +
                     std::to_string(rows) + "-row matrix");
  }
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw ParseError(std::string("field \"") + field +
                       "\" has a row of the wrong width");
    }
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw ParseError(std::string("field \"") + field +
                         "\" must hold integers");
      }
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Int int_from_string(const std::string& s) {
  try {
    if (s.empty()) throw std::runtime_error("empty");
    return Int(s);
  } catch (const std::exception&) {
    throw ParseError("not a decimal integer: \"" + s + "\"");
  }
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  Int num = int_from_string(s.substr(0, slash));
  Int den = int_from_string(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
  return Rat(num, den);
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

Json to_json(const NewtonPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(to_string(c));
  return Json{{"basis", "binomial"}, {"coeffs", coeffs}};
}

Json to_json(const MonomialPoly& q) {
  Json coeffs = Json::array();
  for (const auto& c : q.coeffs) coeffs.push_back(to_string(c));
  return Json{{"basis", "monomial"}, {"coeffs", coeffs}};
}

Json to_json(const PnSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(to_string(c));
  return Json{{"basis", "pn"}, {"coeffs", coeffs}, {"certified", s.certified}};
}

Json to_json(const PartialMap& pm) {
  Json points = Json::object();
  for (const auto& [x, v] : pm.entries) points[to_string(x)] = to_string(v);
  return Json{{"points", points}};
}

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks()) out.push_back(b);
  return out;
}

Json to_json(const FiniteSemilattice& V) {
  auto matrix = [&](auto get) {
    Json rows = Json::array();
    for (int x = 0; x < V.size; ++x) {
      Json row = Json::array();
      for (int y = 0; y < V.size; ++y) row.push_back(get(x, y));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  Json j{{"size", V.size},
         {"order", matrix([&](int x, int y) { return V.le(x, y) ? 1 : 0; })},
         {"join", matrix([&](int x, int y) { return V.join(x, y); })}};
  if (V.has_meet()) {
    j["meet"] = matrix([&](int x, int y) { return V.meet(x, y); });
  }
  return j;
}

Json space_to_json(const UltraSpace& S) {
  Json rows = Json::array();
  for (int x = 0; x < S.points; ++x) {
    Json row = Json::array();
    for (int y = 0; y < S.points; ++y) row.push_back(S.dist(x, y));
    rows.push_back(std::move(row));
  }
  return Json{{"points", S.points}, {"d", rows}};
}

namespace {

std::vector<std::string> coeff_strings(const Json& j, const char* basis) {
  if (string_field(require(j, "basis"), "basis") != basis) {
    throw ParseError(std::string("expected basis \"") + basis + "\"");
  }
  const Json& coeffs = require(j, "coeffs");
  if (!coeffs.is_array()) throw ParseError("field \"coeffs\" must be an array");
  std::vector<std::string> out;
  for (const auto& c : coeffs) out.push_back(string_field(c, "coeffs"));
  return out;
}

}  // namespace

NewtonPoly newton_from_json(const Json& j) {
  std::vector<Int> coeffs;
  for (const auto& s : coeff_strings(j, "binomial")) {
    coeffs.push_back(int_from_string(s));
  }
  return NewtonPoly(std::move(coeffs));
}

MonomialPoly monomial_from_json(const Json& j) {
  std::vector<Rat> coeffs;
  for (const auto& s : coeff_strings(j, "monomial")) {
    coeffs.push_back(rat_from_string(s));
  }
  return MonomialPoly(std::move(coeffs));
}

PnSeries series_from_json(const Json& j) {
  std::vector<Int> coeffs;
  for (const auto& s : coeff_strings(j, "pn")) {
    coeffs.push_back(int_from_string(s));
  }
  // certified is recomputed, not trusted from the document
  return PnSeries(std::move(coeffs));
}

PartialMap partial_map_from_json(const Json& j) {
  const Json& points = require(j, "points");
  if (!points.is_object()) {
    throw ParseError("field \"points\" must be an object");
  }
  PartialMap pm;
  for (const auto& [k, v] : points.items()) {
    pm.entries.emplace(int_from_string(k), int_from_string(string_field(v, "points")));
  }
  return pm;
}

std::vector<Partition> partitions_from_json(const Json& j) {
  if (!j.is_array()) {
    throw ParseError("expected a JSON array of partitions (block lists)");
  }
  int carrier = 0;
  std::vector<std::vector<std::vector<int>>> raw;
  for (const auto& part : j) {
    if (!part.is_array()) throw ParseError("each partition must be a block list");
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : part) {
      if (!blk.is_array()) throw ParseError("each block must be an array");
      std::vector<int> b;
      for (const auto& e : blk) {
        if (!e.is_number_integer()) {
          throw ParseError("block elements must be integers");
        }
        b.push_back(e.get<int>());
        carrier = std::max(carrier, b.back() + 1);
      }
      blocks.push_back(std::move(b));
    }
    raw.push_back(std::move(blocks));
  }
  std::vector<Partition> out;
  for (const auto& blocks : raw) {
    out.push_back(Partition::from_blocks(carrier, blocks));
  }
  return out;
}

FiniteSemilattice semilattice_from_json(const Json& j) {
  const Json& size_j = require(j, "size");
  if (!size_j.is_number_integer()) {
    throw ParseError("field \"size\" must be an integer");
  }
  const int m = size_j.get<int>();
  auto order = int_matrix(require(j, "order"), "order", m, m);
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) leq[x * m + y] = order[x][y] ? 1 : 0;
  }
  FiniteSemilattice V = FiniteSemilattice::from_order(m, leq);
  // join/meet tables in the document, when present, must agree
  if (j.contains("join")) {
    auto join = int_matrix(j.at("join"), "join", m, m);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        if (join[x][y] != V.join(x, y)) {
          throw ParseError("field \"join\" disagrees with the order matrix");
        }
      }
    }
  }
  if (j.contains("meet")) {
    auto meet = int_matrix(j.at("meet"), "meet", m, m);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        if (!V.has_meet() || meet[x][y] != V.meet(x, y)) {
          throw ParseError("field \"meet\" disagrees with the order matrix");
        }
      }
    }
  }
  return V;
}

UltraSpace space_from_json(const Json& j, FiniteSemilattice V) {
  const Json& points_j = require(j, "points");
  if (!points_j.is_number_integer()) {
    throw ParseError("field \"points\" must be an integer");
  }
  const int n = points_j.get<int>();
  auto d = int_matrix(require(j, "d"), "d", n, n);
  UltraSpace S;
  S.V = std::move(V);
  S.points = n;
  S.d.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (d[x][y] < 0 || d[x][y] >= S.V.size) {
        throw ParseError("field \"d\" holds an out-of-range element index");
      }
      S.d[x * n + y] = d[x][y];
    }
  }
  return S;
}

}  // namespace congrue
