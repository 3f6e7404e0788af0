// Command-line front end: loads part files and field specs, runs the
// verification suites, and emits JSON or CSV reports.
//
// Exit codes: 0 all checks passed, 1 tolerance breach, 2 input error.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "hsk/balance.hpp"
#include "hsk/config.hpp"
#include "hsk/fields.hpp"
#include "hsk/geometry.hpp"
#include "hsk/invariance.hpp"
#include "hsk/random.hpp"
#include "hsk/serialize.hpp"
#include "hsk/special.hpp"
#include "hsk/traction.hpp"
#include "hsk/version.hpp"

namespace {

using namespace hsk;

constexpr int kExitPass = 0;
constexpr int kExitBreach = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> parts;  // canned names or file paths
  std::string fields_path;
  std::uint64_t seed = 0;
  int degree = 2;
  double tol = 0.0;  // resolved after parsing (flag > env > built-in)
  bool tol_given = false;
  std::string format = "json";
  std::string out;
  int samples = 20;  // verification samples per part
};

// The output path is deliberately not echoed: the report bytes depend only
// on the run's semantic configuration.
json config_to_json(const RunConfig& cfg) {
  return json{{"subcommand", cfg.subcommand}, {"parts", cfg.parts},
              {"fields", cfg.fields_path},    {"seed", cfg.seed},
              {"degree", cfg.degree},         {"tol", cfg.tol},
              {"format", cfg.format},         {"samples", cfg.samples}};
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + cfg.out + "'");
  out << text;
}

std::string metrics_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string text = "metric,value\n";
  for (const auto& [k, v] : rows) text += k + "," + v + "\n";
  return text;
}

/// Bounded pool; results land at their job's index, so assembly order is
/// independent of scheduling.
template <typename Job, typename Fn>
auto parallel_map(const std::vector<Job>& jobs, Fn&& fn) {
  using R = std::invoke_result_t<Fn, const Job&>;
  std::vector<R> results(jobs.size());
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(jobs.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
        try {
          results[i] = fn(jobs[i]);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

std::vector<PolyhedralPart> resolve_parts(const RunConfig& cfg) {
  if (cfg.parts.empty()) return canned_parts();
  std::vector<PolyhedralPart> parts;
  for (const std::string& p : cfg.parts) {
    if (auto canned = make_canned_part(p)) {
      parts.push_back(std::move(*canned));
      continue;
    }
    parts.push_back(load_part(p));
  }
  return parts;
}

struct FieldTriple {
  Tensor2Field stress;
  HyperstressField hyperstress;
  VelocityField velocity;
};

FieldTriple random_triple(std::uint64_t seed, int degree) {
  Rng rng(seed);
  FieldTriple f;
  f.stress = rng.tensor2_field(degree, /*symmetric=*/true);
  f.hyperstress = rng.hyperstress_field(degree);
  f.velocity = rng.velocity_field(degree + 1);
  return f;
}

// --------------------------------------------------------------------------
// verify-pvp

int cmd_verify_pvp(RunConfig cfg) {
  std::optional<FieldTriple> explicit_fields;
  if (!cfg.fields_path.empty()) {
    const json spec = parse_json_file(cfg.fields_path);
    if (spec.contains("random")) {
      cfg.seed = spec.at("random").value("seed", cfg.seed);
      cfg.degree = spec.at("random").value("degree", cfg.degree);
      if (cfg.degree < 0 || cfg.degree > 7)
        throw std::runtime_error("fields spec: random degree must be in [0, 7]");
    } else {
      FieldTriple f;
      f.stress = tensor2_field_from_json(spec.at("T"));
      f.hyperstress = hyperstress_field_from_json(spec.at("H"));
      f.velocity = vector_field_from_json(spec.at("v"));
      explicit_fields = std::move(f);
      cfg.samples = 1;
    }
  }

  const std::vector<PolyhedralPart> parts = resolve_parts(cfg);

  struct Job {
    const PolyhedralPart* part;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t pi = 0; pi < parts.size(); ++pi)
    for (int s = 0; s < cfg.samples; ++s)
      jobs.push_back({&parts[pi], derive_seed(cfg.seed, 1000 * pi + static_cast<std::uint64_t>(s))});

  const std::vector<BalanceReport> reports = parallel_map(jobs, [&](const Job& job) {
    const FieldTriple f = explicit_fields ? *explicit_fields : random_triple(job.seed, cfg.degree);
    BalanceReport r = verify_pvp(f.stress, f.hyperstress, f.velocity, *job.part, cfg.tol);
    r.seed = job.seed;
    return r;
  });

  bool all_pass = true;
  for (const BalanceReport& r : reports) all_pass &= r.pass;

  if (cfg.format == "csv") {
    std::string text = balance_csv_header() + "\n";
    for (const BalanceReport& r : reports) text += balance_csv_row(r) + "\n";
    emit(cfg, text);
  } else {
    json results = json::array();
    for (const BalanceReport& r : reports) results.push_back(to_json(r));
    const json doc{{"version", kVersion},
                   {"config", config_to_json(cfg)},
                   {"results", std::move(results)},
                   {"pass", all_pass}};
    emit(cfg, doc.dump(2) + "\n");
  }
  return all_pass ? kExitPass : kExitBreach;
}

// --------------------------------------------------------------------------
// reconstruct

int cmd_reconstruct(const RunConfig& cfg) {
  const double roundtrip_tol = cfg.tol_given ? cfg.tol : 1e-13;
  const double basis_tol = cfg.tol_given ? cfg.tol : 1e-12;
  const double chain_tol = cfg.tol_given ? cfg.tol : 1e-11;

  Rng rng(derive_seed(cfg.seed, 1));

  // Hyperstress roundtrip through its own induced maps, standard basis.
  double max_roundtrip = 0.0;
  for (int c = 0; c < 1000; ++c) {
    const Tensor3Symd h = rng.tensor3sym();
    const Tensor3Symd back = reconstruct_hyperstress(
        [&](const Vec3d& n) { return surface_hypertraction(h, n); },
        [&](const EdgeFrame& e) { return edge_force(h, e); }, Basisd::standard());
    max_roundtrip = std::max(max_roundtrip, (back - h).max_abs());
  }

  // Basis independence of the same reconstruction.
  double max_cross_basis = 0.0;
  for (int c = 0; c < 100; ++c) {
    const Tensor3Symd h = rng.tensor3sym();
    const auto h_map = [&](const Vec3d& n) { return surface_hypertraction(h, n); };
    const auto f_map = [&](const EdgeFrame& e) { return edge_force(h, e); };
    const Tensor3Symd standard = reconstruct_hyperstress(h_map, f_map, Basisd::standard());
    const Tensor3Symd rotated = reconstruct_hyperstress(h_map, f_map, rng.basis());
    max_cross_basis = std::max(max_cross_basis, (rotated - standard).max_abs());
  }

  // Full stress chain: tractions + hypertractions -> reduced stress -> stress.
  Tensor2Field stress;
  HyperstressField hyperstress;
  if (!cfg.fields_path.empty()) {
    const json spec = parse_json_file(cfg.fields_path);
    stress = tensor2_field_from_json(spec.at("T"));
    hyperstress = hyperstress_field_from_json(spec.at("H"));
  } else {
    stress = rng.tensor2_field(2, /*symmetric=*/true);
    hyperstress = rng.hyperstress_field(2);
  }
  const auto t_map = [&](const Vec3d& x, const Vec3d& n) {
    return surface_traction(stress, hyperstress, x, n);
  };
  double max_chain = 0.0;
  for (int c = 0; c < 10; ++c) {
    const Vec3d x = rng.vec3();
    const Mat3d t_tilde = reconstruct_Ttilde(t_map, hyperstress, x, Basisd::standard());
    const Mat3d recovered = reconstruct_T(t_tilde, hyperstress, x);
    max_chain = std::max(max_chain, (recovered - stress(x)).cwiseAbs().maxCoeff());
  }

  const bool pass =
      max_roundtrip <= roundtrip_tol && max_cross_basis <= basis_tol && max_chain <= chain_tol;

  if (cfg.format == "csv") {
    emit(cfg, metrics_csv({{"max_roundtrip_error", format_double(max_roundtrip)},
                           {"max_cross_basis_error", format_double(max_cross_basis)},
                           {"max_stress_chain_error", format_double(max_chain)},
                           {"pass", pass ? "1" : "0"}}));
  } else {
    const json doc{{"version", kVersion},
                   {"config", config_to_json(cfg)},
                   {"roundtrips", 1000},
                   {"max_roundtrip_error", max_roundtrip},
                   {"roundtrip_tol", roundtrip_tol},
                   {"bases", 100},
                   {"max_cross_basis_error", max_cross_basis},
                   {"basis_tol", basis_tol},
                   {"stress_chain_points", 10},
                   {"max_stress_chain_error", max_chain},
                   {"chain_tol", chain_tol},
                   {"pass", pass}};
    emit(cfg, doc.dump(2) + "\n");
  }
  return pass ? kExitPass : kExitBreach;
}

// --------------------------------------------------------------------------
// classify

int cmd_classify_single(const RunConfig& cfg) {
  const json spec = parse_json_file(cfg.fields_path);
  const HyperstressField field = hyperstress_field_from_json(spec.at("H"));
  const Vec3d x = Vec3d::Zero();
  const Tensor3Symd h = field(x);
  const double tol = cfg.tol_given ? cfg.tol : 1e-12;
  const SphericalClassification c = classify_spherical(h, tol);

  std::vector<double> thetas;
  for (int i = 0; i < 64; ++i) thetas.push_back(std::numbers::pi * i / 64.0);
  const std::vector<EdgeScanSample> scan = edge_scan(h, 2, thetas);

  if (cfg.format == "csv") {
    std::ostringstream os;
    write_scan_csv(os, scan);
    emit(cfg, os.str());
  } else {
    json scan_json = json::array();
    for (const EdgeScanSample& s : scan)
      scan_json.push_back({{"theta", s.theta}, {"f", {s.force[0], s.force[1], s.force[2]}}});

    // The data entering the reconstruction formula: tractions and
    // hypertractions on the coordinate planes, forces on the coordinate
    // edges (the stress is taken as zero here).
    const Tensor2Field no_stress;
    json plane_samples = json::array();
    for (int i = 0; i < 3; ++i) {
      const Vec3d n = Vec3d::Unit(i);
      plane_samples.push_back(to_json(TractionSample{
          x, n, surface_traction(no_stress, field, x, n), surface_hypertraction(h, n)}));
    }
    json edge_samples = json::array();
    for (int j = 0; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k) {
        const EdgeFrame e = coordinate_edge(j, k);
        edge_samples.push_back(to_json(EdgeForceSample{x, e, edge_force(h, e)}));
      }

    json doc{{"version", kVersion},
             {"config", config_to_json(cfg)},
             {"residual", c.residual},
             {"spherical", c.h.has_value()},
             {"plane_samples", std::move(plane_samples)},
             {"edge_samples", std::move(edge_samples)},
             {"scan_axis", 2},
             {"scan", std::move(scan_json)}};
    if (c.h) doc["h"] = {(*c.h)[0], (*c.h)[1], (*c.h)[2]};
    emit(cfg, doc.dump(2) + "\n");
  }
  return kExitPass;
}

int cmd_classify(const RunConfig& cfg) {
  if (!cfg.fields_path.empty()) return cmd_classify_single(cfg);

  const double tol = cfg.tol_given ? cfg.tol : 1e-12;
  const double converse_tol = cfg.tol_given ? cfg.tol : 1e-14;
  Rng rng(derive_seed(cfg.seed, 2));

  // Spherical inputs must pass the zero-edge-force probes and classify.
  double max_spherical_residual = 0.0;
  bool probes_ok = true;
  for (int c = 0; c < 50; ++c) {
    const Vec3d h = rng.vec3(2.0);
    const Tensor3Symd t = Tensor3Symd::spherical(h);
    try {
      prove_spherical_from_zero_edges(
          [&](const Vec3d& n) { return surface_hypertraction(t, n); },
          [&](const EdgeFrame& e) { return edge_force(t, e); }, tol);
    } catch (const std::exception&) {
      probes_ok = false;
    }
    max_spherical_residual = std::max(max_spherical_residual, classify_spherical(t, tol).residual);
  }

  // Generic inputs must be rejected, with a rotated-edge probe responding
  // in proportion to the deviation from the spherical form.
  double min_probe_ratio = std::numeric_limits<double>::infinity();
  bool all_rejected = true;
  for (int c = 0; c < 50; ++c) {
    const Tensor3Symd h = rng.tensor3sym();
    const SphericalClassification cls = classify_spherical(h, tol);
    if (cls.h) {
      all_rejected = false;
      continue;
    }
    const double probe =
        std::max(rotated_pair_edge_force(h, 2, std::numbers::pi / 4.0).norm(),
                 rotated_pair_edge_force(h, 0, std::numbers::pi / 4.0).norm());
    min_probe_ratio = std::min(min_probe_ratio, probe / cls.residual);
  }

  // Converse: the spherical form loads no edge, whatever the frame.
  double max_edge_force = 0.0;
  for (int f = 0; f < 200; ++f) {
    const EdgeFrame frame = rng.edge_frame();
    for (int c = 0; c < 20; ++c) {
      const Vec3d h = rng.vec3(2.0);
      max_edge_force =
          std::max(max_edge_force, edge_force(Tensor3Symd::spherical(h), frame).norm());
    }
  }

  const bool pass = probes_ok && max_spherical_residual <= tol && all_rejected &&
                    min_probe_ratio >= 0.1 && max_edge_force <= converse_tol;

  if (cfg.format == "csv") {
    emit(cfg, metrics_csv({{"max_spherical_residual", format_double(max_spherical_residual)},
                           {"probes_ok", probes_ok ? "1" : "0"},
                           {"all_nonspherical_rejected", all_rejected ? "1" : "0"},
                           {"min_probe_ratio", format_double(min_probe_ratio)},
                           {"max_converse_edge_force", format_double(max_edge_force)},
                           {"pass", pass ? "1" : "0"}}));
  } else {
    const json doc{{"version", kVersion},
                   {"config", config_to_json(cfg)},
                   {"spherical_cases", 50},
                   {"max_spherical_residual", max_spherical_residual},
                   {"probes_ok", probes_ok},
                   {"nonspherical_cases", 50},
                   {"all_nonspherical_rejected", all_rejected},
                   {"min_probe_ratio", min_probe_ratio},
                   {"converse_frames", 200},
                   {"converse_vectors", 20},
                   {"max_converse_edge_force", max_edge_force},
                   {"tol", tol},
                   {"pass", pass}};
    emit(cfg, doc.dump(2) + "\n");
  }
  return pass ? kExitPass : kExitBreach;
}

// --------------------------------------------------------------------------
// invariance

int cmd_invariance(const RunConfig& cfg) {
  const double identity_tol = cfg.tol_given ? cfg.tol : 1e-13;
  const double indifference_tol = cfg.tol_given ? cfg.tol : 1e-12;
  Rng rng(derive_seed(cfg.seed, 3));

  // With the identity rotation the residual reduces to |skew(T) . W|.
  double max_identity_error = 0.0;
  for (int c = 0; c < 500; ++c) {
    const Mat3d t = rng.mat3();
    const Tensor3Symd h = rng.tensor3sym();
    const Mat3d grad_v = rng.mat3();
    const Tensor3Symd grad2_v = rng.tensor3sym();
    const Mat3d w = rng.skew_mat3();
    const ObserverChange obs(rng.vec3(), Rotationd::identity(), w);
    const double residual = power_invariance_residual(t, h, grad_v, grad2_v, obs);
    max_identity_error =
        std::max(max_identity_error, std::abs(residual - std::abs(inner(skew_part(t), w))));
  }

  // Symmetric stress is invariant under every observer change.
  double max_symmetric_residual = 0.0;
  for (int c = 0; c < 100; ++c) {
    const ObserverChange obs(rng.vec3(), rng.rotation(), rng.skew_mat3());
    max_symmetric_residual = std::max(
        max_symmetric_residual,
        power_invariance_residual(rng.symmetric_mat3(), rng.tensor3sym(), rng.mat3(),
                                  rng.tensor3sym(), obs));
  }

  // The closed-form witness exposes |skew(T)|_F exactly.
  double max_witness_error = 0.0;
  bool witness_found = true;
  for (int c = 0; c < 100; ++c) {
    const Mat3d t = rng.mat3();
    const auto w = find_symmetry_witness(t);
    if (!w) {
      witness_found = false;
      continue;
    }
    const ObserverChange obs(Vec3d::Zero(), Rotationd::identity(), *w);
    const double residual = power_invariance_residual(t, Tensor3Symd::Zero(), Mat3d::Zero(),
                                                      Tensor3Symd::Zero(), obs);
    max_witness_error = std::max(max_witness_error, std::abs(residual - skew_part(t).norm()));
  }

  // Indifference of the induced traction maps under rotations.
  double max_indifference = 0.0;
  for (int c = 0; c < 50; ++c) {
    const IndifferenceResiduals r = traction_indifference_check(
        rng.mat3(), rng.tensor3sym(), rng.unit_vec3(), rng.edge_frame(), rng.rotation());
    max_indifference = std::max(max_indifference, r.max_residual());
  }

  const bool pass = max_identity_error <= identity_tol &&
                    max_symmetric_residual <= identity_tol && witness_found &&
                    max_witness_error <= indifference_tol &&
                    max_indifference <= indifference_tol;

  if (cfg.format == "csv") {
    emit(cfg, metrics_csv({{"max_identity_error", format_double(max_identity_error)},
                           {"max_symmetric_residual", format_double(max_symmetric_residual)},
                           {"witness_found", witness_found ? "1" : "0"},
                           {"max_witness_error", format_double(max_witness_error)},
                           {"max_indifference_residual", format_double(max_indifference)},
                           {"pass", pass ? "1" : "0"}}));
  } else {
    const json doc{{"version", kVersion},
                   {"config", config_to_json(cfg)},
                   {"instances", 500},
                   {"max_identity_error", max_identity_error},
                   {"symmetric_instances", 100},
                   {"max_symmetric_residual", max_symmetric_residual},
                   {"witness_instances", 100},
                   {"witness_found", witness_found},
                   {"max_witness_error", max_witness_error},
                   {"indifference_instances", 50},
                   {"max_indifference_residual", max_indifference},
                   {"pass", pass}};
    emit(cfg, doc.dump(2) + "\n");
  }
  return pass ? kExitPass : kExitBreach;
}

// --------------------------------------------------------------------------
// nsalpha

int cmd_nsalpha(const RunConfig& cfg) {
  const double tol = cfg.tol_given ? cfg.tol : 1e-12;
  Rng rng(derive_seed(cfg.seed, 4));
  const int degree = std::min(cfg.degree + 2, 4);

  double max_full = 0.0;
  for (int c = 0; c < 100; ++c) {
    const Vec3d g = rng.vec3(2.0);
    const VelocityField v = rng.velocity_field(degree);
    max_full = std::max(max_full, nsalpha_power_check(g, v, rng.vec3()).full);
  }

  double max_divfree = 0.0;
  bool divfree_detected = true;
  for (int c = 0; c < 50; ++c) {
    const Vec3d g = rng.vec3(2.0);
    const VelocityField v = rng.divergence_free_velocity(degree);
    const NsAlphaPowerResiduals r = nsalpha_power_check(g, v, rng.vec3());
    if (!r.divfree) {
      divfree_detected = false;
      continue;
    }
    max_divfree = std::max(max_divfree, *r.divfree);
  }

  // The active part is spherical with h = -g and never loads an edge.
  double max_active_residual = 0.0;
  for (int c = 0; c < 20; ++c) {
    const Vec3d g = rng.vec3(2.0);
    const NsAlphaDecomposition d = nsalpha_decompose(g);
    const SphericalClassification cls = classify_spherical(d.active, tol);
    const double h_err = cls.h ? (*cls.h + g).cwiseAbs().maxCoeff() : 1.0;
    max_active_residual = std::max({max_active_residual, cls.residual, h_err});
  }

  const bool pass = max_full <= tol && divfree_detected && max_divfree <= tol &&
                    max_active_residual <= tol;

  if (cfg.format == "csv") {
    emit(cfg, metrics_csv({{"max_power_residual", format_double(max_full)},
                           {"divfree_detected", divfree_detected ? "1" : "0"},
                           {"max_divfree_residual", format_double(max_divfree)},
                           {"max_active_spherical_residual", format_double(max_active_residual)},
                           {"pass", pass ? "1" : "0"}}));
  } else {
    const json doc{{"version", kVersion},
                   {"config", config_to_json(cfg)},
                   {"pairs", 100},
                   {"max_power_residual", max_full},
                   {"divfree_cases", 50},
                   {"divfree_detected", divfree_detected},
                   {"max_divfree_residual", max_divfree},
                   {"max_active_spherical_residual", max_active_residual},
                   {"tol", tol},
                   {"pass", pass}};
    emit(cfg, doc.dump(2) + "\n");
  }
  return pass ? kExitPass : kExitBreach;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;

  CLI::App app{"Second-gradient continuum verification toolkit"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"verify-pvp", "Verify the virtual-power balance over polyhedral parts"},
      {"reconstruct", "Hyperstress and stress reconstruction batteries"},
      {"classify", "Spherical-hyperstress classification and edge-force scans"},
      {"invariance", "Observer-invariance batteries"},
      {"nsalpha", "Navier-Stokes-alpha hyperstress identities"},
  };

  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    if (name == "verify-pvp")
      sub->add_option("--part", cfg.parts,
                      "Part file or canned name (cube, tetrahedron, wedge, chamfered-cube); "
                      "repeatable; all canned parts when omitted");
    if (name == "verify-pvp" || name == "reconstruct" || name == "classify")
      sub->add_option("--fields", cfg.fields_path, "Field spec file (explicit or random)");
    sub->add_option("--seed", cfg.seed, "Base seed for the sample battery");
    sub->add_option("--degree", cfg.degree, "Polynomial degree bound for generated fields")
        ->check(CLI::Range(0, 7));
    sub->add_option("--tol", cfg.tol, "Residual tolerance override");
    sub->add_option("--format", cfg.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "Report path (stdout when omitted)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.subcommand = sub->get_name();
  cfg.tol_given = sub->count("--tol") > 0;
  if (cfg.tol_given) {
    if (cfg.tol <= 0.0) {
      std::cerr << "error: --tol must be positive\n";
      return kExitInput;
    }
  } else {
    cfg.tol = default_tolerance();
  }

  try {
    if (cfg.subcommand == "verify-pvp") return cmd_verify_pvp(cfg);
    if (cfg.subcommand == "reconstruct") return cmd_reconstruct(cfg);
    if (cfg.subcommand == "classify") return cmd_classify(cfg);
    if (cfg.subcommand == "invariance") return cmd_invariance(cfg);
    return cmd_nsalpha(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
