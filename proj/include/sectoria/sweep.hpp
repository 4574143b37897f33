#pragma once

// Randomized certification sweeps. Each trial draws its inputs from a seed
// derived from (master seed, target, configuration, trial index), so runs are
// reproducible and independent of how trials are scheduled across workers.
// Reports aggregate per result id and are byte-identical for a fixed seed
// regardless of worker count (the wall-clock field aside).

#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "sectoria/checker.hpp"
#include "sectoria/ensembles.hpp"
#include "sectoria/rng.hpp"

namespace sectoria {

enum class CheckTarget {
  hm_gm_am,
  kantorovich,
  tan_xie,
  theorem26,
  det_corollary,
  det_proposition,
  det_note,
  sv_corollary,
  sv_remark,
  norm_corollary,
  norm_remark,
  norm_proposition,
  lemmas,
  choi,
  bhatia_kittaneh,
  bakherad,
};

inline const std::vector<std::pair<CheckTarget, const char*>>& check_target_table() {
  static const std::vector<std::pair<CheckTarget, const char*>> table = {
      {CheckTarget::hm_gm_am, "hm_gm_am"},
      {CheckTarget::kantorovich, "kantorovich"},
      {CheckTarget::tan_xie, "tan_xie"},
      {CheckTarget::theorem26, "theorem26"},
      {CheckTarget::det_corollary, "det_corollary"},
      {CheckTarget::det_proposition, "det_proposition"},
      {CheckTarget::det_note, "det_note"},
      {CheckTarget::sv_corollary, "sv_corollary"},
      {CheckTarget::sv_remark, "sv_remark"},
      {CheckTarget::norm_corollary, "norm_corollary"},
      {CheckTarget::norm_remark, "norm_remark"},
      {CheckTarget::norm_proposition, "norm_proposition"},
      {CheckTarget::lemmas, "lemmas"},
      {CheckTarget::choi, "choi"},
      {CheckTarget::bhatia_kittaneh, "bhatia_kittaneh"},
      {CheckTarget::bakherad, "bakherad"},
  };
  return table;
}

inline const char* check_target_name(CheckTarget t) {
  for (const auto& [target, name] : check_target_table()) {
    if (target == t) return name;
  }
  return "unknown";
}

inline CheckTarget parse_check_target(const std::string& name) {
  for (const auto& [target, tname] : check_target_table()) {
    if (name == tname) return target;
  }
  throw std::invalid_argument("unknown check target: " + name);
}

inline MapKind parse_map_kind(const std::string& name) {
  for (MapKind k : {MapKind::identity, MapKind::pinching, MapKind::compression,
                    MapKind::normalized_trace, MapKind::unitary_mixture}) {
    if (name == map_kind_name(k)) return k;
  }
  throw std::invalid_argument("unknown map kind: " + name);
}

struct SweepConfig {
  int n = 4;
  int trials = 100;
  std::vector<double> alphas = {0.2, 0.6, 1.0};
  std::vector<double> weights = {0.1, 0.25, 0.5, 0.75, 0.9};
  std::vector<MapKind> maps = {MapKind::identity, MapKind::pinching, MapKind::compression,
                               MapKind::normalized_trace};
  std::vector<CheckTarget> targets;  // empty means all
  std::uint64_t seed = 1;
  double re_lo = 0.5;
  double re_hi = 2.0;
  CheckOptions check_options;

  void validate() const {
    if (n < 1) throw std::invalid_argument("sweep: n must be positive");
    if (trials < 1) throw std::invalid_argument("sweep: trials must be positive");
    if (alphas.empty() || weights.empty() || maps.empty()) {
      throw std::invalid_argument("sweep: alphas, weights and maps must be nonempty");
    }
    for (double a : alphas) {
      if (!(a >= 0.0 && a < M_PI / 2.0)) {
        throw std::invalid_argument("sweep: alpha must lie in [0, pi/2)");
      }
    }
    for (double v : weights) {
      if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("sweep: v must lie in [0,1]");
    }
    if (!(re_lo > 0.0 && re_lo <= re_hi)) {
      throw std::invalid_argument("sweep: need 0 < spectrum lo <= hi");
    }
  }
};

struct ResultAggregate {
  long count = 0;
  long pass_count = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  std::uint64_t argmin_seed = 0;
  long argmin_trial = -1;
};

struct SweepRow {
  Certificate cert;
  long trial = 0;
  std::uint64_t seed = 0;
};

struct SweepReport {
  SweepConfig config;
  std::map<std::string, ResultAggregate> aggregates;
  std::vector<SweepRow> failures;  // capped at kMaxRecordedFailures
  long total_failures = 0;
  std::set<std::string> interpretation_notes;
  std::vector<SweepRow> rows;
  double wall_clock_seconds = 0.0;

  static constexpr long kMaxRecordedFailures = 200;

  bool all_passed() const { return total_failures == 0; }
};

namespace detail {

struct TrialTask {
  CheckTarget target;
  double alpha = 0.0;
  double v = 0.5;
  MapKind map = MapKind::identity;
  long trial = 0;
  std::uint64_t seed = 0;
};

inline bool target_uses_alpha(CheckTarget t) {
  switch (t) {
    case CheckTarget::tan_xie:
    case CheckTarget::theorem26:
    case CheckTarget::det_corollary:
    case CheckTarget::det_proposition:
    case CheckTarget::det_note:
    case CheckTarget::sv_corollary:
    case CheckTarget::norm_corollary:
    case CheckTarget::norm_proposition:
    case CheckTarget::lemmas:
      return true;
    default:
      return false;
  }
}

inline bool target_uses_v(CheckTarget t) {
  switch (t) {
    case CheckTarget::hm_gm_am:
    case CheckTarget::kantorovich:
    case CheckTarget::tan_xie:
    case CheckTarget::theorem26:
    case CheckTarget::det_corollary:
    case CheckTarget::det_note:
    case CheckTarget::sv_corollary:
    case CheckTarget::sv_remark:
    case CheckTarget::norm_corollary:
    case CheckTarget::norm_remark:
      return true;
    default:
      return false;
  }
}

inline bool target_uses_map(CheckTarget t) {
  return t == CheckTarget::theorem26 || t == CheckTarget::choi;
}

inline std::vector<NormKind> norm_sweep_kinds(int n) {
  std::vector<NormKind> kinds;
  for (int k = 1; k <= n; ++k) kinds.push_back(NormKind::ky_fan(k));
  kinds.push_back(NormKind::schatten(1.0));
  kinds.push_back(NormKind::schatten(2.0));
  kinds.push_back(NormKind::schatten(3.0));
  kinds.push_back(NormKind::schatten(std::numeric_limits<double>::infinity()));
  return kinds;
}

inline std::vector<Certificate> run_trial(const TrialTask& task, const SweepConfig& cfg) {
  const CheckOptions& opts = cfg.check_options;
  const int n = cfg.n;
  const std::uint64_t sa = derive_seed(task.seed, {1});
  const std::uint64_t sb = derive_seed(task.seed, {2});
  const std::uint64_t sm = derive_seed(task.seed, {3});
  const std::uint64_t sr = derive_seed(task.seed, {4});

  auto sector_pair = [&](double alpha) {
    EnsembleSpec spec_a{n, alpha, cfg.re_lo, cfg.re_hi, sa, true};
    EnsembleSpec spec_b{n, alpha, cfg.re_lo, cfg.re_hi, sb, true};
    return std::make_pair(random_sector(spec_a), random_sector(spec_b));
  };

  switch (task.target) {
    case CheckTarget::hm_gm_am: {
      Matrix a = random_psd(n, cfg.re_lo, cfg.re_hi, sa);
      Matrix b = random_psd(n, cfg.re_lo, cfg.re_hi, sb);
      auto certs = check_hm_gm_am_psd(a, b, task.v, opts);
      return {certs.begin(), certs.end()};
    }
    case CheckTarget::kantorovich: {
      Matrix a = random_psd(n, cfg.re_lo, cfg.re_hi, sa);
      Matrix b = random_psd(n, cfg.re_lo, cfg.re_hi, sb);
      return {check_kantorovich_reverse_psd(a, b, task.v, opts)};
    }
    case CheckTarget::tan_xie: {
      auto [a, b] = sector_pair(task.alpha);
      auto certs = check_tan_xie(a, b, task.v, opts);
      return {certs.begin(), certs.end()};
    }
    case CheckTarget::theorem26: {
      auto [a, b] = sector_pair(task.alpha);
      MapSpec phi = random_map(task.map, n, sm);
      auto certs = check_theorem_reverse(a, b, task.v, phi, opts);
      return {certs.begin(), certs.end()};
    }
    case CheckTarget::det_corollary: {
      auto [a, b] = sector_pair(task.alpha);
      auto certs = check_det_corollary(a, b, task.v, opts);
      return {certs.begin(), certs.end()};
    }
    case CheckTarget::det_proposition: {
      auto [a, b] = sector_pair(task.alpha);
      return {check_det_proposition(a, b, opts)};
    }
    case CheckTarget::det_note: {
      auto [a, b] = sector_pair(task.alpha);
      return {check_det_weighted_note(a, b, task.v, opts)};
    }
    case CheckTarget::sv_corollary: {
      auto [a, b] = sector_pair(task.alpha);
      return check_sv_corollary(a, b, task.v, opts);
    }
    case CheckTarget::sv_remark: {
      Matrix a = random_accretive_dissipative(n, cfg.re_lo, cfg.re_hi, sa);
      Matrix b = random_accretive_dissipative(n, cfg.re_lo, cfg.re_hi, sb);
      return check_sv_corollary(a, b, task.v, opts, /*ad_pi4=*/true);
    }
    case CheckTarget::norm_corollary: {
      auto [a, b] = sector_pair(task.alpha);
      std::vector<Certificate> certs;
      for (const NormKind& kind : norm_sweep_kinds(n)) {
        auto pair = check_norm_corollary(a, b, task.v, kind, opts);
        certs.insert(certs.end(), pair.begin(), pair.end());
      }
      return certs;
    }
    case CheckTarget::norm_remark: {
      Matrix a = random_accretive_dissipative(n, cfg.re_lo, cfg.re_hi, sa);
      Matrix b = random_accretive_dissipative(n, cfg.re_lo, cfg.re_hi, sb);
      std::vector<Certificate> certs;
      for (const NormKind& kind : norm_sweep_kinds(n)) {
        auto pair = check_norm_corollary(a, b, task.v, kind, opts, /*ad_pi4=*/true);
        certs.insert(certs.end(), pair.begin(), pair.end());
      }
      return certs;
    }
    case CheckTarget::norm_proposition: {
      auto [a, b] = sector_pair(task.alpha);
      std::vector<Certificate> certs;
      for (const NormKind& kind : norm_sweep_kinds(n)) {
        certs.push_back(check_norm_proposition(a, b, kind, opts));
      }
      return certs;
    }
    case CheckTarget::lemmas: {
      EnsembleSpec spec{n, task.alpha, cfg.re_lo, cfg.re_hi, sa, true};
      auto certs = check_lemma_suite(random_sector(spec), opts);
      return {certs.begin(), certs.end()};
    }
    case CheckTarget::choi: {
      Matrix p = random_psd(n, cfg.re_lo, cfg.re_hi, sa);
      MapSpec phi = random_map(task.map, n, sm);
      return {check_choi(phi, p, opts.loewner_tol)};
    }
    case CheckTarget::bhatia_kittaneh: {
      Matrix p = random_psd(n, cfg.re_lo, cfg.re_hi, sa);
      Matrix q = random_psd(n, cfg.re_lo, cfg.re_hi, sb);
      return {check_bhatia_kittaneh(p, q, opts)};
    }
    case CheckTarget::bakherad: {
      Matrix p = random_psd(n, cfg.re_lo, cfg.re_hi, sa);
      Matrix q = random_psd(n, cfg.re_lo, cfg.re_hi, sb);
      Matrix p_half = psd_power(p, 0.5);
      Matrix q_inv_half = psd_power(q, -0.5);
      const double critical = std::pow(spectral_norm(Matrix(p_half * q_inv_half)), 2.0);
      Rng rng(sr);
      const double r = critical * std::exp(rng.uniform(-1.0, 1.0));
      return {check_bakherad_equivalence(p, q, r, opts)};
    }
  }
  throw std::logic_error("run_trial: unknown target");
}

}  // namespace detail

inline int resolve_thread_count(int requested = 0) {
  if (requested <= 0) {
    if (const char* env = std::getenv("SECTORIA_THREADS")) {
      requested = std::atoi(env);
    }
  }
  if (requested <= 0) {
    requested = static_cast<int>(std::thread::hardware_concurrency());
  }
  return std::max(1, requested);
}

inline SweepReport run_sweep(const SweepConfig& config_in, int threads = 0) {
  SweepConfig config = config_in;
  config.validate();
  if (config.targets.empty()) {
    for (const auto& [target, name] : check_target_table()) config.targets.push_back(target);
  }
  const auto started = std::chrono::steady_clock::now();

  // flatten the configuration grid into a deterministic task list
  std::vector<detail::TrialTask> tasks;
  for (size_t ti = 0; ti < config.targets.size(); ++ti) {
    const CheckTarget target = config.targets[ti];
    const std::vector<double> alphas =
        detail::target_uses_alpha(target) ? config.alphas : std::vector<double>{0.0};
    const std::vector<double> weights =
        detail::target_uses_v(target) ? config.weights : std::vector<double>{0.5};
    const std::vector<MapKind> maps =
        detail::target_uses_map(target) ? config.maps : std::vector<MapKind>{MapKind::identity};
    std::uint64_t cfg_idx = 0;
    for (double alpha : alphas) {
      for (double v : weights) {
        for (MapKind map : maps) {
          for (long trial = 0; trial < config.trials; ++trial) {
            detail::TrialTask task;
            task.target = target;
            task.alpha = alpha;
            task.v = v;
            task.map = map;
            task.trial = trial;
            task.seed = derive_seed(config.seed,
                                    {static_cast<std::uint64_t>(target), cfg_idx,
                                     static_cast<std::uint64_t>(trial)});
            tasks.push_back(task);
          }
          ++cfg_idx;
        }
      }
    }
  }

  // run trials on a worker pool; results land in task order
  std::vector<std::vector<Certificate>> outcomes(tasks.size());
  const int workers = std::min<long>(resolve_thread_count(threads),
                                     static_cast<long>(tasks.size()));
  std::atomic<size_t> next{0};
  std::vector<std::string> worker_errors(static_cast<size_t>(workers));
  auto body = [&](int w) {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        outcomes[i] = detail::run_trial(tasks[i], config);
      } catch (const std::exception& e) {
        worker_errors[static_cast<size_t>(w)] =
            std::string(check_target_name(tasks[i].target)) + " trial " +
            std::to_string(tasks[i].trial) + " seed " + std::to_string(tasks[i].seed) + ": " +
            e.what();
        return;
      }
    }
  };
  if (workers <= 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& err : worker_errors) {
    if (!err.empty()) throw std::runtime_error("sweep trial failed: " + err);
  }

  // deterministic aggregation in task order
  SweepReport report;
  report.config = config;
  for (size_t i = 0; i < tasks.size(); ++i) {
    for (const Certificate& cert : outcomes[i]) {
      report.rows.push_back({cert, tasks[i].trial, tasks[i].seed});
      ResultAggregate& agg = report.aggregates[result_id_name(cert.id)];
      agg.count += 1;
      if (cert.pass) {
        agg.pass_count += 1;
      } else {
        report.total_failures += 1;
        if (static_cast<long>(report.failures.size()) < SweepReport::kMaxRecordedFailures) {
          report.failures.push_back({cert, tasks[i].trial, tasks[i].seed});
        }
      }
      if (cert.margin < agg.min_margin) {
        agg.min_margin = cert.margin;
        agg.argmin_seed = tasks[i].seed;
        agg.argmin_trial = tasks[i].trial;
      }
      if (!cert.interpretation_notes.empty()) {
        report.interpretation_notes.insert(cert.interpretation_notes);
      }
    }
  }
  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

namespace detail {

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline nlohmann::json params_to_json(const CertificateParams& p) {
  nlohmann::json j = nlohmann::json::object();
  if (p.v) j["v"] = *p.v;
  if (p.alpha) j["alpha"] = *p.alpha;
  if (p.m_bound) j["m"] = *p.m_bound;
  if (p.big_m_bound) j["M"] = *p.big_m_bound;
  if (p.h) j["h"] = *p.h;
  if (p.kantorovich) j["K"] = *p.kantorovich;
  if (p.factor) j["factor"] = *p.factor;
  if (p.map_kind) j["map_kind"] = *p.map_kind;
  if (p.norm_kind) j["norm_kind"] = *p.norm_kind;
  if (p.j) j["j"] = *p.j;
  return j;
}

inline nlohmann::json row_to_json(const SweepRow& row) {
  nlohmann::json j;
  j["result_id"] = result_id_name(row.cert.id);
  j["trial"] = row.trial;
  j["seed"] = row.seed;
  j["margin"] = row.cert.margin;
  j["pass"] = row.cert.pass;
  j["log_domain"] = row.cert.log_domain;
  j["params"] = params_to_json(row.cert.params);
  if (!row.cert.interpretation_notes.empty()) j["notes"] = row.cert.interpretation_notes;
  return j;
}

}  // namespace detail

inline std::string report_to_json(const SweepReport& report) {
  nlohmann::json j;
  nlohmann::json cfg;
  cfg["n"] = report.config.n;
  cfg["trials"] = report.config.trials;
  cfg["alphas"] = report.config.alphas;
  cfg["weights"] = report.config.weights;
  nlohmann::json maps = nlohmann::json::array();
  for (MapKind m : report.config.maps) maps.push_back(map_kind_name(m));
  cfg["maps"] = std::move(maps);
  nlohmann::json targets = nlohmann::json::array();
  for (CheckTarget t : report.config.targets) targets.push_back(check_target_name(t));
  cfg["results"] = std::move(targets);
  cfg["seed"] = report.config.seed;
  cfg["loewner_tol"] = report.config.check_options.loewner_tol;
  cfg["spectrum_lo"] = report.config.re_lo;
  cfg["spectrum_hi"] = report.config.re_hi;
  j["config"] = std::move(cfg);

  nlohmann::json results = nlohmann::json::object();
  for (const auto& [name, agg] : report.aggregates) {
    nlohmann::json a;
    a["count"] = agg.count;
    a["pass_count"] = agg.pass_count;
    a["min_margin"] = agg.min_margin;
    a["argmin_seed"] = agg.argmin_seed;
    a["argmin_trial"] = agg.argmin_trial;
    results[name] = std::move(a);
  }
  j["results"] = std::move(results);

  nlohmann::json failures = nlohmann::json::array();
  for (const SweepRow& row : report.failures) failures.push_back(detail::row_to_json(row));
  j["failures"] = std::move(failures);
  j["failure_count"] = report.total_failures;
  j["all_passed"] = report.all_passed();
  j["interpretation_notes"] = report.interpretation_notes;
  j["wall_clock_seconds"] = report.wall_clock_seconds;
  return j.dump(2) + "\n";
}

// Fixed columns: result_id, trial, v, alpha, h, K, factor, margin, pass.
inline std::string report_to_csv(const SweepReport& report) {
  std::string out = "result_id,trial,v,alpha,h,K,factor,margin,pass\n";
  auto field = [](const std::optional<double>& x) {
    return x ? detail::format_double(*x) : std::string();
  };
  for (const SweepRow& row : report.rows) {
    out += result_id_name(row.cert.id);
    out += ',';
    out += std::to_string(row.trial);
    out += ',';
    out += field(row.cert.params.v);
    out += ',';
    out += field(row.cert.params.alpha);
    out += ',';
    out += field(row.cert.params.h);
    out += ',';
    out += field(row.cert.params.kantorovich);
    out += ',';
    out += field(row.cert.params.factor);
    out += ',';
    out += detail::format_double(row.cert.margin);
    out += ',';
    out += row.cert.pass ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace sectoria
