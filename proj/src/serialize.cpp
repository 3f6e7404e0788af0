#include "hsk/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hsk {

namespace {

template <typename Coef>
std::vector<double> flatten(const Coef& c);

template <>
std::vector<double> flatten(const double& c) {
  return {c};
}

template <>
std::vector<double> flatten(const Vec3d& c) {
  return {c[0], c[1], c[2]};
}

template <>
std::vector<double> flatten(const Mat3d& c) {
  std::vector<double> v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v.push_back(c(i, j));
  return v;
}

template <>
std::vector<double> flatten(const Tensor3d& c) {
  std::vector<double> v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) v.push_back(c(i, j, k));
  return v;
}

template <typename Coef>
json field_to_json(const PolyField<Coef>& f, int rank) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json term;
    term["exp"] = {t.exp[0], t.exp[1], t.exp[2]};
    term["coef"] = flatten(t.coef);
    terms.push_back(std::move(term));
  }
  return json{{"rank", rank}, {"terms", std::move(terms)}};
}

Exponent exponent_from_json(const json& e) {
  if (!e.is_array() || e.size() != 3)
    throw std::runtime_error("field: 'exp' must be an array of three integers");
  return Exponent{{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()}};
}

std::vector<double> coef_values(const json& term, std::size_t expected) {
  const json& c = term.at("coef");
  if (!c.is_array() || c.size() != expected)
    throw std::runtime_error("field: 'coef' must be an array of " + std::to_string(expected) +
                             " numbers for this rank");
  return c.get<std::vector<double>>();
}

}  // namespace

json to_json(const ScalarField& f) { return field_to_json(f, 0); }
json to_json(const VectorField& f) { return field_to_json(f, 1); }
json to_json(const Tensor2Field& f) { return field_to_json(f, 2); }
json to_json(const Tensor3Field& f) { return field_to_json(f, 3); }

json to_json(const HyperstressField& f) {
  // Serialized expanded; the symmetry is re-validated on load.
  Tensor3Field full;
  for (const auto& t : f.terms()) full.add_term(t.exp, t.coef.full());
  return to_json(full);
}

json to_json(const FieldVariant& f) {
  return std::visit([](const auto& field) { return to_json(field); }, f);
}

FieldVariant field_from_json(const json& j) {
  const int r = j.at("rank").get<int>();
  const json& terms = j.at("terms");
  if (!terms.is_array()) throw std::runtime_error("field: 'terms' must be an array");

  const auto build = [&](auto field, std::size_t n, auto make_coef) -> FieldVariant {
    for (const json& term : terms) {
      const Exponent e = exponent_from_json(term.at("exp"));
      field.add_term(e, make_coef(coef_values(term, n)));
    }
    return FieldVariant(std::move(field));
  };

  switch (r) {
    case 0:
      return build(ScalarField{}, 1, [](const std::vector<double>& v) { return v[0]; });
    case 1:
      return build(VectorField{}, 3, [](const std::vector<double>& v) {
        return Vec3d(v[0], v[1], v[2]);
      });
    case 2:
      return build(Tensor2Field{}, 9, [](const std::vector<double>& v) {
        Mat3d m;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) m(i, j) = v[static_cast<std::size_t>(3 * i + j)];
        return m;
      });
    case 3:
      return build(Tensor3Field{}, 27, [](const std::vector<double>& v) {
        Tensor3d t;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) t(i, j, k) = v[static_cast<std::size_t>(9 * i + 3 * j + k)];
        return t;
      });
    default:
      throw std::runtime_error("field: rank must be 0, 1, 2 or 3");
  }
}

VectorField vector_field_from_json(const json& j) {
  FieldVariant f = field_from_json(j);
  if (auto* v = std::get_if<VectorField>(&f)) return std::move(*v);
  throw std::runtime_error("field: expected rank 1");
}

Tensor2Field tensor2_field_from_json(const json& j) {
  FieldVariant f = field_from_json(j);
  if (auto* v = std::get_if<Tensor2Field>(&f)) return std::move(*v);
  throw std::runtime_error("field: expected rank 2");
}

HyperstressField hyperstress_field_from_json(const json& j) {
  FieldVariant f = field_from_json(j);
  auto* full = std::get_if<Tensor3Field>(&f);
  if (!full) throw std::runtime_error("hyperstress field: expected rank 3");
  HyperstressField h;
  for (const auto& t : full->terms()) {
    if (t.coef.symmetry_violation() > kTol.packing)
      throw std::runtime_error(
          "hyperstress field: coefficient violates the right-pair symmetry H_ijk = H_ikj");
    h.add_term(t.exp, Tensor3Symd::from_full(t.coef, kTol.packing));
  }
  return h;
}

// ---------------------------------------------------------------------------

json to_json(const PartSpec& spec) {
  json vertices = json::array();
  for (const Vec3d& v : spec.vertices) vertices.push_back({v[0], v[1], v[2]});
  json faces = json::array();
  for (const auto& f : spec.faces) faces.push_back(f);
  return json{{"vertices", std::move(vertices)}, {"faces", std::move(faces)}};
}

PartSpec part_spec_from_json(const json& j) {
  PartSpec spec;
  for (const json& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 3)
      throw std::runtime_error("part: each vertex must be [x, y, z]");
    spec.vertices.emplace_back(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
  }
  for (const json& f : j.at("faces")) {
    if (!f.is_array()) throw std::runtime_error("part: each face must be an index array");
    spec.faces.push_back(f.get<std::vector<int>>());
  }
  return spec;
}

json parse_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line/column for the diagnostic.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw std::runtime_error(path.string() + ":" + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + e.what());
  }
}

PolyhedralPart load_part(const std::filesystem::path& path) {
  const json j = parse_json_file(path);
  return build_part(part_spec_from_json(j), path.stem().string());
}

// ---------------------------------------------------------------------------

namespace {

json vec_to_json(const Vec3d& v) { return json{v[0], v[1], v[2]}; }

json frame_to_json(const EdgeFrame& frame) {
  return json{{"n_prime", vec_to_json(frame.n_prime())},
              {"m_prime", vec_to_json(frame.m_prime())},
              {"n_second", vec_to_json(frame.n_second())},
              {"m_second", vec_to_json(frame.m_second())},
              {"segment", json{vec_to_json(frame.start()), vec_to_json(frame.end())}}};
}

}  // namespace

json to_json(const BalanceReport& report) {
  json faces = json::array();
  for (const FaceContribution& c : report.face_contributions)
    faces.push_back(json{{"traction_power", c.traction_power},
                         {"hypertraction_power", c.hypertraction_power}});
  return json{{"part", report.part_id},
              {"seed", report.seed},
              {"internal_power", report.internal_power},
              {"external_power", report.external_power},
              {"bulk_term", report.bulk_term},
              {"pvp_residual", report.pvp_residual},
              {"bulk_residual_max", report.bulk_residual_max},
              {"global_force_residual", vec_to_json(report.global_force_residual)},
              {"face_contributions", std::move(faces)},
              {"edge_contributions", report.edge_contributions},
              {"tol", report.tol},
              {"pass", report.pass}};
}

json to_json(const TractionSample& sample) {
  return json{{"x", vec_to_json(sample.x)},
              {"n", vec_to_json(sample.n)},
              {"traction", vec_to_json(sample.traction)},
              {"hypertraction", vec_to_json(sample.hypertraction)}};
}

json to_json(const EdgeForceSample& sample) {
  return json{{"x", vec_to_json(sample.x)},
              {"frame", frame_to_json(sample.frame)},
              {"force", vec_to_json(sample.force)}};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string balance_csv_header() {
  return "part,seed,internal_power,external_power,bulk_term,pvp_residual,bulk_residual_max,"
         "global_force_x,global_force_y,global_force_z,pass";
}

std::string balance_csv_row(const BalanceReport& r) {
  std::string row = r.part_id + "," + std::to_string(r.seed);
  for (double v : {r.internal_power, r.external_power, r.bulk_term, r.pvp_residual,
                   r.bulk_residual_max, r.global_force_residual[0], r.global_force_residual[1],
                   r.global_force_residual[2]})
    row += "," + format_double(v);
  row += r.pass ? ",1" : ",0";
  return row;
}

}  // namespace hsk
