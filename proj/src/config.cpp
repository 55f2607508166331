#include "satake/config.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace satake {

namespace {

using nlohmann::json;

Matrix parse_matrix(const json& j, const std::string& what) {
  if (!j.is_array()) throw config_error(what + " must be a matrix (array of arrays)");
  Matrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw config_error(what + " must be a matrix (array of arrays)");
    std::vector<Int> r;
    for (const auto& entry : row) {
      if (!entry.is_number_integer())
        throw config_error(what + " entries must be integers");
      r.push_back(Int(entry.get<long long>()));
    }
    m.push_back(std::move(r));
  }
  for (const auto& row : m)
    if (row.size() != m.size()) throw config_error(what + " must be square");
  return m;
}

std::string matrix_str(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

Matrix cartan_type_a(int n) {
  if (n < 1) throw config_error("cartan_type A<n> needs n >= 1");
  Matrix c(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i > 0) c[i][i - 1] = -1;
    if (i + 1 < n) c[i][i + 1] = -1;
  }
  return c;
}

WorkbenchConfig config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.contains("lattice") || !j["lattice"].contains("b"))
    throw config_error("config needs lattice.b");

  WorkbenchConfig cfg;
  cfg.b.gram = parse_matrix(j["lattice"]["b"], "lattice.b");
  int rank = cfg.b.rank();
  if (rank == 0) throw config_error("lattice.b must be nonempty");
  if (j["lattice"].contains("rank") &&
      j["lattice"]["rank"].get<long long>() != rank)
    throw config_error("lattice.rank does not match the size of lattice.b " +
                       matrix_str(cfg.b.gram));

  cfg.q = derive_q(cfg.b);
  if (!is_negative_definite(cfg.q))
    throw config_error("b + b^T must be negative definite, got " + matrix_str(cfg.q.gram));

  std::string kind = "torus";
  if (j.contains("root_datum")) {
    const auto& r = j["root_datum"];
    if (!r.contains("kind")) throw config_error("root_datum.kind missing");
    kind = r["kind"].get<std::string>();
  }
  if (kind == "torus") {
    cfg.rd = make_torus(rank, cfg.q);
  } else if (kind == "simple") {
    const auto& r = j["root_datum"];
    Matrix cartan;
    if (r.contains("cartan")) {
      cartan = parse_matrix(r["cartan"], "root_datum.cartan");
    } else if (r.contains("cartan_type")) {
      std::string t = r["cartan_type"].get<std::string>();
      if (t.size() < 2 || t[0] != 'A')
        throw config_error("unsupported cartan_type \"" + t + "\" (use A<n> or an explicit matrix)");
      cartan = cartan_type_a(std::stoi(t.substr(1)));
    } else {
      throw config_error("root_datum needs cartan or cartan_type");
    }
    int central = rank - static_cast<int>(cartan.size());
    if (r.contains("central_rank") &&
        r["central_rank"].get<long long>() != central)
      throw config_error("root_datum.central_rank inconsistent with lattice rank");
    if (central < 0)
      throw config_error("Cartan matrix larger than the lattice rank");
    cfg.rd = make_semisimple(cartan, cfg.q, central);
  } else {
    throw config_error("root_datum.kind must be torus or simple, got \"" + kind + "\"");
  }

  if (j.contains("defaults") && j["defaults"].contains("trunc")) {
    long long t = j["defaults"]["trunc"].get<long long>();
    cfg.default_trunc = t;
  }
  return cfg;
}

WorkbenchConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return config_from_json_text(ss.str());
}

}  // namespace satake
