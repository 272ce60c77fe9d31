#include "partequiv/io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace partequiv {

Json to_json(const SetPartition& pi) { return Json(pi.blocks()); }

SetPartition set_partition_from_json(const Json& j, int m) {
  return SetPartition::from_blocks(m, j.get<std::vector<std::vector<int>>>());
}

Json to_json(const BasisMatrix& m) {
  Json entries = Json::array();
  for (const Entry& e : m.entries) entries.push_back({e.row, e.col});
  return Json{{"n", m.n},
              {"k", m.k},
              {"l", m.l},
              {"blocks", m.source ? to_json(*m.source) : Json(nullptr)},
              {"shape", {m.rows, m.cols}},
              {"entries", std::move(entries)}};
}

BasisMatrix basis_matrix_from_json(const Json& j) {
  BasisMatrix m;
  m.n = j.at("n").get<int>();
  m.k = j.at("k").get<int>();
  m.l = j.at("l").get<int>();
  m.rows = j.at("shape").at(0).get<std::uint64_t>();
  m.cols = j.at("shape").at(1).get<std::uint64_t>();
  if (const Json& blocks = j.at("blocks"); !blocks.is_null()) {
    m.source = set_partition_from_json(blocks, m.k + m.l);
  }
  for (const Json& e : j.at("entries")) {
    m.entries.push_back({e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>()});
  }
  return m;
}

Json to_json(const AlgebraElement& a) {
  Json terms = Json::array();
  for (const auto& [pi, c] : a.terms()) terms.push_back({{"blocks", to_json(pi)}, {"coeff", c.str()}});
  return Json{{"k", a.k()}, {"basis", to_string(a.kind())}, {"terms", std::move(terms)}};
}

AlgebraElement algebra_element_from_json(const Json& j) {
  const int k = j.at("k").get<int>();
  const std::string kind = j.at("basis").get<std::string>();
  if (kind != "diagram" && kind != "orbit") throw std::invalid_argument("unknown basis " + kind);
  AlgebraElement a(k, kind == "diagram" ? BasisKind::diagram : BasisKind::orbit);
  for (const Json& t : j.at("terms")) {
    a.add(set_partition_from_json(t.at("blocks"), 2 * k), BigInt(t.at("coeff").get<std::string>()));
  }
  return a;
}

Json to_json(const PatternMatrix& p) {
  return Json{{"shape", {p.rows(), p.cols()}}, {"classes", p.classes()}, {"cells", p.to_rows()}};
}

PatternMatrix pattern_from_json(const Json& j) {
  PatternMatrix p = PatternMatrix::from_rows(j.at("cells").get<std::vector<std::vector<int>>>());
  if (j.contains("shape") &&
      (j["shape"].at(0).get<std::uint64_t>() != p.rows() ||
       j["shape"].at(1).get<std::uint64_t>() != p.cols())) {
    throw std::invalid_argument("pattern shape does not match its cells");
  }
  return p;
}

Fixture load_fixture(const std::string& dir, const std::string& which) {
  namespace fs = std::filesystem;
  fs::path path = fs::path(dir) / (which + ".json");
  if (!fs::exists(path)) path = fs::path(dir) / ("appendix_" + which + ".json");
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path.string());
  try {
    Json j = Json::parse(in);
    Fixture f;
    f.appendix = j.at("appendix").get<std::string>();
    f.note = j.value("note", "");
    for (const Json& p : j.at("patterns")) {
      FixturePattern fp;
      fp.name = p.at("name").get<std::string>();
      fp.pattern = pattern_from_json(p);
      fp.n = p.value("n", 0);
      fp.k = p.value("k", 0);
      fp.l = p.value("l", 0);
      fp.spec = p.value("spec", "");
      f.patterns.push_back(std::move(fp));
    }
    return f;
  } catch (const std::exception& e) {
    throw std::runtime_error("malformed fixture " + path.string() + ": " + e.what());
  }
}

}  // namespace partequiv
