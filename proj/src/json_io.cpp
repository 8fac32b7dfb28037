#include "freehopf/json_io.hpp"

#include "freehopf/errors.hpp"

namespace freehopf::json_io {

namespace {

void dump_into(const Json& j, std::string& out) {
  if (j.is_object()) {
    out += '{';
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ", ";
      first = false;
      out += Json(k).dump();
      out += ": ";
      dump_into(v, out);
    }
    out += '}';
  } else if (j.is_array()) {
    out += '[';
    bool first = true;
    for (const auto& v : j) {
      if (!first) out += ',';
      first = false;
      dump_into(v, out);
    }
    out += ']';
  } else {
    out += j.dump();
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  throw ParseError("expected a rational string, found " + j.dump());
}

std::size_t dim_from_json(const Json& j) {
  const Json& d = member(j, "dim");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0)
    throw ParseError("\"dim\" must be a positive integer");
  return d.get<std::size_t>();
}

Alphabet alphabet_from_json(const Json& j) {
  const Json& a = member(j, "alphabet");
  if (!a.is_string()) throw ParseError("\"alphabet\" must be a declaration string");
  return Alphabet::parse(a.get<std::string>());
}

std::map<char, Matrix> letter_matrices(const Json& j, const char* key) {
  const Json& obj = member(j, key);
  if (!obj.is_object()) throw ParseError(std::string("\"") + key + "\" must be an object");
  std::map<char, Matrix> out;
  for (const auto& [k, v] : obj.items()) {
    if (k.size() != 1) throw ParseError("letter key \"" + k + "\" is not a single character");
    out.emplace(k[0], matrix_from_json(v));
  }
  return out;
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const MatRep& r) {
  Json assign = Json::object();
  for (const auto& [x, m] : r.assignment()) assign[std::string(1, x)] = to_json(m);
  Json out = Json::object();
  out["alphabet"] = r.alphabet().declaration();
  out["dim"] = r.dim();
  out["assign"] = std::move(assign);
  return out;
}

Json to_json(const LinRep& r) {
  Json lambda = Json::array();
  for (std::size_t j = 0; j < r.dim(); ++j) lambda.push_back(r.lambda()(0, j).get_str());
  Json mu = Json::object();
  for (const auto& [x, m] : r.mu()) mu[std::string(1, x)] = to_json(m);
  Json out = Json::object();
  out["alphabet"] = r.alphabet().declaration();
  out["dim"] = r.dim();
  out["lambda"] = std::move(lambda);
  out["mu"] = std::move(mu);
  out["gamma"] = to_json(r.gamma());
  return out;
}

Json to_json(const NCPoly& p) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms())
    terms.push_back(Json::array({key[0].empty() ? "1" : key[0], c.get_str()}));
  Json out = Json::object();
  out["alphabet"] = p.alphabet().declaration();
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const Tensor2& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms())
    terms.push_back(Json::array(
        {key[0].empty() ? "1" : key[0], key[1].empty() ? "1" : key[1], c.get_str()}));
  Json out = Json::object();
  out["alphabet"] = t.alphabet().declaration();
  out["terms"] = std::move(terms);
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows);
}

MatRep matrep_from_json(const Json& j) {
  Alphabet alphabet = alphabet_from_json(j);
  std::size_t dim = dim_from_json(j);
  return MatRep(std::move(alphabet), dim, letter_matrices(j, "assign"));
}

LinRep linrep_from_json(const Json& j) {
  Alphabet alphabet = alphabet_from_json(j);
  std::size_t dim = dim_from_json(j);
  const Json& lam = member(j, "lambda");
  if (!lam.is_array()) throw ParseError("\"lambda\" must be an array");
  Matrix lambda(1, lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) lambda(0, i) = rational_from_json(lam[i]);
  if (lambda.cols() != dim) throw DomainError("\"lambda\" length does not match \"dim\"");
  return LinRep(std::move(alphabet), std::move(lambda), letter_matrices(j, "mu"),
                matrix_from_json(member(j, "gamma")));
}

}  // namespace freehopf::json_io
