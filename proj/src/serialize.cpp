#include "serialize.hpp"

#include <json.hpp>

#include "htype.hpp"

namespace dern {

namespace {

using Json = nlohmann::ordered_json;

Json num_or_str(const Int& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return rat_parse(j.get<std::string>());
  fail(Errc::parse_error, "expected rational as integer or string");
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  fail(Errc::parse_error, "expected integer as number or string");
}

Json matrix_to_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixQ matrix_from_json(const Json& j, int expect_cols = -1) {
  if (!j.is_array()) fail(Errc::parse_error, "expected matrix as array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j[0].size()) : (expect_cols > 0 ? expect_cols : 0);
  MatrixQ m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) fail(Errc::parse_error, "ragged matrix rows");
    for (int k = 0; k < cols; ++k) m.at(i, k) = rat_from_json(j[i][k]);
  }
  return m;
}

}  // namespace

std::string algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["format"] = "dern-algebra";
  j["version"] = 1;
  j["name"] = g.name;
  j["family"] = g.family;
  if (g.family == "so" || g.family == "su" || g.family == "sp") {
    j["p"] = g.fam_p;
    j["q"] = g.fam_q;
  } else if (g.family == "sl") {
    j["n"] = g.fam_q;
  } else if (g.family == "split") {
    j["type"] = std::string(1, g.split_type);
    j["rank"] = g.split_rank;
  }
  j["dim"] = g.dim;
  j["labels"] = g.labels;
  Json sc = Json::array();
  for (int i = 0; i < g.dim; ++i)
    for (int jj = i + 1; jj < g.dim; ++jj)
      for (int k = 0; k < g.dim; ++k) {
        const Rat& v = g.c[i][jj][k];
        if (sgn(v) == 0) continue;
        Json t = Json::array();
        t.push_back(i);
        t.push_back(jj);
        t.push_back(k);
        t.push_back(num_or_str(v.get_num()));
        t.push_back(num_or_str(v.get_den()));
        sc.push_back(std::move(t));
      }
  j["structure_constants"] = std::move(sc);
  j["theta"] = matrix_to_json(g.theta);
  if (g.a_basis.cols > 0) {
    Json ab = Json::array();
    for (int c0 = 0; c0 < g.a_basis.cols; ++c0) {
      Json col = Json::array();
      for (int i = 0; i < g.a_basis.rows; ++i) col.push_back(rat_str(g.a_basis.at(i, c0)));
      ab.push_back(std::move(col));
    }
    j["a_basis"] = std::move(ab);
  }
  return j.dump(2) + "\n";
}

AlgebraPtr algebra_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "dern-algebra")
    fail(Errc::parse_error, "not a dern-algebra document");
  int dim = j.at("dim").get<int>();
  if (dim < 0 || dim > 4096) fail(Errc::parse_error, "implausible dimension");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  std::vector<std::vector<VecQ>> c(dim, std::vector<VecQ>(dim, vec_zero(dim)));
  for (const auto& t : j.at("structure_constants")) {
    if (!t.is_array() || t.size() != 5) fail(Errc::parse_error, "bad structure constant entry");
    int a = t[0].get<int>(), b = t[1].get<int>(), k = t[2].get<int>();
    if (a < 0 || a >= dim || b < 0 || b >= dim || k < 0 || k >= dim)
      fail(Errc::parse_error, "structure constant index out of range");
    Rat v(int_from_json(t[3]), int_from_json(t[4]));
    v.canonicalize();
    c[a][b][k] = v;
    c[b][a][k] = -v;
  }
  MatrixQ theta = matrix_from_json(j.at("theta"));
  MatrixQ a_basis(dim, 0);
  if (j.contains("a_basis")) {
    const auto& ab = j["a_basis"];
    a_basis = MatrixQ(dim, static_cast<int>(ab.size()));
    for (int c0 = 0; c0 < a_basis.cols; ++c0) {
      if (static_cast<int>(ab[c0].size()) != dim)
        fail(Errc::parse_error, "a_basis vector has wrong length");
      for (int i = 0; i < dim; ++i) a_basis.at(i, c0) = rat_from_json(ab[c0][i]);
    }
  }
  AlgebraPtr g = make_algebra(dim, std::move(labels), std::move(c), std::move(theta),
                              std::move(a_basis));
  auto mut = std::const_pointer_cast<LieAlgebra>(g);
  mut->name = j.value("name", "custom");
  mut->family = j.value("family", "custom");
  mut->fam_p = j.value("p", 0);
  mut->fam_q = j.contains("n") ? j["n"].get<int>() : j.value("q", 0);
  if (j.contains("type")) {
    std::string t = j["type"].get<std::string>();
    mut->split_type = t.empty() ? 0 : t[0];
  }
  mut->split_rank = j.value("rank", 0);
  return g;
}

std::string metric_two_step_to_json(const MetricTwoStep& m) {
  Json j;
  j["format"] = "dern-two-step";
  j["version"] = 1;
  j["v_dim"] = m.v_dim;
  j["z_dim"] = m.z_dim;
  Json br = Json::array();
  for (int i = 0; i < m.v_dim; ++i)
    for (int jj = i + 1; jj < m.v_dim; ++jj)
      for (int k = 0; k < m.z_dim; ++k) {
        const Rat& v = m.bracket[i][jj][k];
        if (sgn(v) == 0) continue;
        Json t = Json::array();
        t.push_back(i);
        t.push_back(jj);
        t.push_back(k);
        t.push_back(num_or_str(v.get_num()));
        t.push_back(num_or_str(v.get_den()));
        br.push_back(std::move(t));
      }
  j["bracket"] = std::move(br);
  j["gram_v"] = matrix_to_json(m.gram_v);
  j["gram_z"] = matrix_to_json(m.gram_z);
  return j.dump(2) + "\n";
}

MetricTwoStep metric_two_step_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "dern-two-step")
    fail(Errc::parse_error, "not a dern-two-step document");
  int v_dim = j.at("v_dim").get<int>();
  int z_dim = j.at("z_dim").get<int>();
  if (v_dim < 0 || z_dim < 0 || v_dim > 4096 || z_dim > 4096)
    fail(Errc::parse_error, "implausible dimensions");
  std::vector<std::vector<VecQ>> bracket(v_dim, std::vector<VecQ>(v_dim, vec_zero(z_dim)));
  for (const auto& t : j.at("bracket")) {
    if (!t.is_array() || t.size() != 5) fail(Errc::parse_error, "bad bracket entry");
    int a = t[0].get<int>(), b = t[1].get<int>(), k = t[2].get<int>();
    if (a < 0 || a >= v_dim || b < 0 || b >= v_dim || k < 0 || k >= z_dim)
      fail(Errc::parse_error, "bracket index out of range");
    Rat v(int_from_json(t[3]), int_from_json(t[4]));
    v.canonicalize();
    bracket[a][b][k] = v;
    bracket[b][a][k] = -v;
  }
  MatrixQ gram_v = matrix_from_json(j.at("gram_v"), v_dim);
  MatrixQ gram_z = matrix_from_json(j.at("gram_z"), z_dim);
  return make_two_step(v_dim, z_dim, std::move(bracket), std::move(gram_v), std::move(gram_z));
}

}  // namespace dern
